//! Axiom-schema recognition and Hilbert proof verification for QST and the
//! QC2 family.

mod mutate;
mod pattern;
mod schemas;
mod tautology;

pub use schemas::{
    check_rule, is_axiom_instance, is_axiom_instance_with, schema_instance, Logic, RuleId, SchemaId, SchemaOptions,
};
pub use mutate::single_line_mutations;
pub use tautology::{is_tautology, MAX_LETTERS};

use crate::parser_io::Symbols;
use crate::syntax::Formula;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Justification {
    Axiom(SchemaId),
    /// Premises are 1-based line numbers.
    Rule(RuleId, Vec<usize>),
}

#[derive(Clone, Debug)]
pub struct ProofLine {
    pub formula: Formula,
    pub just: Justification,
}

#[derive(Clone, Debug)]
pub struct ProofScript {
    pub logic: Logic,
    pub lines: Vec<ProofLine>,
    /// Names used when the script was parsed, for printing.
    pub symbols: Symbols,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ProofVerdict {
    Accepted,
    /// `line` is 1-based.
    Rejected { line: usize, reason: String },
}

impl ProofVerdict {
    pub fn is_accepted(&self) -> bool {
        *self == ProofVerdict::Accepted
    }
}

/// Verifies every line: an instance of an axiom of the script's logic, or
/// the conclusion of one of its rules from earlier lines.
pub fn verify_proof(p: &ProofScript) -> ProofVerdict {
    verify_proof_with(p, SchemaOptions::default())
}

pub fn verify_proof_with(p: &ProofScript, opts: SchemaOptions) -> ProofVerdict {
    let axioms = p.logic.axioms();
    let rules = p.logic.rules();
    for (i, line) in p.lines.iter().enumerate() {
        let n = i + 1;
        let reject = |reason: String| ProofVerdict::Rejected { line: n, reason };
        if let Err(e) = line.formula.check_language(p.logic.language()) {
            return reject(e.to_string());
        }
        match &line.just {
            Justification::Axiom(s) => {
                if !axioms.contains(s) {
                    return reject(format!("{s} is not an axiom of {}", p.logic));
                }
                if !is_axiom_instance_with(*s, &line.formula, opts) {
                    return reject(format!("not an instance of {s}"));
                }
            }
            Justification::Rule(r, premises) => {
                if !rules.contains(r) {
                    return reject(format!("{r} is not a rule of {}", p.logic));
                }
                if let Some(bad) = premises.iter().find(|&&k| k == 0 || k >= n) {
                    return reject(format!("premise {bad} does not refer to an earlier line"));
                }
                let prem: Vec<&Formula> = premises.iter().map(|&k| &p.lines[k - 1].formula).collect();
                if let Err(reason) = check_rule(*r, &prem, &line.formula) {
                    return reject(reason);
                }
            }
        }
    }
    ProofVerdict::Accepted
}
