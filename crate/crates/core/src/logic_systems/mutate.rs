//! Single-line mutations of a proof script, for checking that a verified
//! proof is not accepted by accident.

use super::{Justification, ProofScript, RuleId, SchemaId};
use crate::syntax::{Formula, Predicate};

const RULES: [RuleId; 9] =
    [RuleId::R13, RuleId::R14, RuleId::R15, RuleId::R16, RuleId::R17, RuleId::R25, RuleId::R26, RuleId::R27, RuleId::R27v];

/// Swaps two predicates of equal arity throughout `f`.
fn swap_predicates(f: &Formula, a: &Predicate, b: &Predicate) -> Formula {
    match f {
        Formula::Atom(p, args) if p == a => Formula::Atom(b.clone(), args.clone()),
        Formula::Atom(p, args) if p == b => Formula::Atom(a.clone(), args.clone()),
        Formula::Bot | Formula::Atom(..) | Formula::Eq(..) | Formula::Existence(_) => f.clone(),
        Formula::Not(x) => Formula::not(swap_predicates(x, a, b)),
        Formula::Forall(v, x) => Formula::forall(*v, swap_predicates(x, a, b)),
        Formula::Implies(x, y) => Formula::implies(swap_predicates(x, a, b), swap_predicates(y, a, b)),
        Formula::Cond(x, y) => Formula::cond(swap_predicates(x, a, b), swap_predicates(y, a, b)),
    }
}

fn formula_mutations(f: &Formula, preds: &[Predicate]) -> Vec<(String, Formula)> {
    let mut out = vec![("negated".to_string(), Formula::not(f.clone()))];
    match f {
        Formula::Implies(a, b) => out.push(("sides swapped".into(), Formula::implies((**b).clone(), (**a).clone()))),
        Formula::Cond(a, b) => out.push(("sides swapped".into(), Formula::cond((**b).clone(), (**a).clone()))),
        Formula::Not(a) => out.push(("negation dropped".into(), (**a).clone())),
        _ => {}
    }
    for (i, a) in preds.iter().enumerate() {
        for b in &preds[i + 1..] {
            if a.arity() == b.arity() {
                let g = swap_predicates(f, a, b);
                if g != *f {
                    out.push((format!("{} and {} swapped", a.name(), b.name()), g));
                }
            }
        }
    }
    out
}

/// Every proof obtained from `p` by changing one line: its formula
/// (negated, sides swapped, two predicates exchanged), its axiom or rule,
/// one cited premise, or deleting it (later citations are renumbered).
/// Reordering the premises of a rule is not a mutation.
pub fn single_line_mutations(p: &ProofScript) -> Vec<(String, ProofScript)> {
    let mut preds: Vec<Predicate> = Vec::new();
    for l in &p.lines {
        for q in l.formula.predicates() {
            if !preds.contains(&q) {
                preds.push(q);
            }
        }
    }
    let mut out = Vec::new();
    let with = |edit: &dyn Fn(&mut ProofScript)| {
        let mut q = p.clone();
        edit(&mut q);
        q
    };
    for (i, line) in p.lines.iter().enumerate() {
        let n = i + 1;
        for (what, g) in formula_mutations(&line.formula, &preds) {
            out.push((format!("line {n}: formula {what}"), with(&|q| q.lines[i].formula = g.clone())));
        }
        match &line.just {
            Justification::Axiom(a) => {
                for b in SchemaId::ALL.into_iter().filter(|b| b != a) {
                    out.push((
                        format!("line {n}: axiom {} instead of {}", b.label(), a.label()),
                        with(&|q| q.lines[i].just = Justification::Axiom(b)),
                    ));
                }
                for r in RULES {
                    for k in 1..n {
                        let prem = vec![k; r.arity().max(1)];
                        out.push((
                            format!("line {n}: rule {} from line {k} instead of axiom", r.label()),
                            with(&|q| q.lines[i].just = Justification::Rule(r, prem.clone())),
                        ));
                    }
                }
            }
            Justification::Rule(r, prem) => {
                for s in RULES.into_iter().filter(|s| s != r) {
                    out.push((
                        format!("line {n}: rule {} instead of {}", s.label(), r.label()),
                        with(&|q| q.lines[i].just = Justification::Rule(s, prem.clone())),
                    ));
                }
                for a in SchemaId::ALL {
                    out.push((
                        format!("line {n}: axiom {} instead of rule {}", a.label(), r.label()),
                        with(&|q| q.lines[i].just = Justification::Axiom(a)),
                    ));
                }
                for (j, &old) in prem.iter().enumerate() {
                    for k in (1..n).filter(|&k| k != old) {
                        let mut changed = prem.clone();
                        changed[j] = k;
                        let mut sorted = changed.clone();
                        sorted.sort();
                        let mut orig = prem.clone();
                        orig.sort();
                        if sorted == orig {
                            continue;
                        }
                        out.push((
                            format!("line {n}: premise {old} replaced by {k}"),
                            with(&|q| q.lines[i].just = Justification::Rule(*r, changed.clone())),
                        ));
                    }
                }
            }
        }
        out.push((format!("line {n}: deleted"), delete_line(p, i)));
    }
    out
}

/// Removes line `i` (0-based). Citations of later lines shift down; a
/// citation of the removed line points at its predecessor, or at the
/// line itself when there is none, which the loader would refuse.
fn delete_line(p: &ProofScript, i: usize) -> ProofScript {
    let mut q = p.clone();
    q.lines.remove(i);
    for l in &mut q.lines {
        if let Justification::Rule(_, prem) = &mut l.just {
            for k in prem.iter_mut() {
                if *k > i + 1 || (*k == i + 1 && *k > 1) {
                    *k -= 1;
                }
            }
        }
    }
    q
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::logic_systems::verify_proof;
    use crate::parser_io::load_proof;

    #[test]
    fn mutations_of_a_two_line_proof() {
        let doc = r#"{"logic":"QC2","lines":[
            {"formula":"bot -> F(x)","just":{"axiom":"18"}},
            {"formula":"(G(x) > bot) -> (G(x) > F(x))","just":{"rule":"26","premises":[1]}}]}"#;
        let p = load_proof(doc).unwrap();
        let ms = single_line_mutations(&p);
        assert!(ms.iter().any(|(d, _)| d == "line 2: formula F and G swapped"));
        for (d, q) in &ms {
            let accepted = verify_proof(q).is_accepted();
            let same_end = q.lines.last().map(|l| &l.formula) == p.lines.last().map(|l| &l.formula);
            // deleting line 2 leaves a valid proof of something else
            assert!(!(accepted && same_end), "{d}");
        }
    }
}
