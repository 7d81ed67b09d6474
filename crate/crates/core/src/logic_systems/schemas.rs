use std::fmt;
use std::str::FromStr;

use super::pattern::*;
use super::tautology::is_tautology;
use crate::syntax::{Formula, FreshVars, Language, Var};

/// Axiom schemas, numbered as in the standard presentation: 1–12 for QST,
/// 18–24 for QC2, 28–30 for identity, and the variable/constant domain
/// variants `23v`, `31c`, `32c`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SchemaId {
    A1,
    A2,
    A3,
    A4,
    A5,
    A6,
    A7,
    A8,
    A9,
    A10,
    A11,
    A12,
    A18,
    A19,
    A20,
    A21,
    A22,
    A23,
    A23v,
    A24,
    A28,
    A29,
    A30,
    A31c,
    A32c,
}

/// Inference rules: 13–17 for QST, 25–27 for QC2, `27v` for the
/// variable-domain systems.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RuleId {
    R13,
    R14,
    R15,
    R16,
    R17,
    R25,
    R26,
    R27,
    R27v,
}

impl SchemaId {
    pub const ALL: [SchemaId; 25] = [
        SchemaId::A1,
        SchemaId::A2,
        SchemaId::A3,
        SchemaId::A4,
        SchemaId::A5,
        SchemaId::A6,
        SchemaId::A7,
        SchemaId::A8,
        SchemaId::A9,
        SchemaId::A10,
        SchemaId::A11,
        SchemaId::A12,
        SchemaId::A18,
        SchemaId::A19,
        SchemaId::A20,
        SchemaId::A21,
        SchemaId::A22,
        SchemaId::A23,
        SchemaId::A23v,
        SchemaId::A24,
        SchemaId::A28,
        SchemaId::A29,
        SchemaId::A30,
        SchemaId::A31c,
        SchemaId::A32c,
    ];

    pub fn label(self) -> &'static str {
        match self {
            SchemaId::A1 => "1",
            SchemaId::A2 => "2",
            SchemaId::A3 => "3",
            SchemaId::A4 => "4",
            SchemaId::A5 => "5",
            SchemaId::A6 => "6",
            SchemaId::A7 => "7",
            SchemaId::A8 => "8",
            SchemaId::A9 => "9",
            SchemaId::A10 => "10",
            SchemaId::A11 => "11",
            SchemaId::A12 => "12",
            SchemaId::A18 => "18",
            SchemaId::A19 => "19",
            SchemaId::A20 => "20",
            SchemaId::A21 => "21",
            SchemaId::A22 => "22",
            SchemaId::A23 => "23",
            SchemaId::A23v => "23v",
            SchemaId::A24 => "24",
            SchemaId::A28 => "28",
            SchemaId::A29 => "29",
            SchemaId::A30 => "30",
            SchemaId::A31c => "31c",
            SchemaId::A32c => "32c",
        }
    }
}

impl RuleId {
    pub const ALL: [RuleId; 9] =
        [RuleId::R13, RuleId::R14, RuleId::R15, RuleId::R16, RuleId::R17, RuleId::R25, RuleId::R26, RuleId::R27, RuleId::R27v];

    pub fn label(self) -> &'static str {
        match self {
            RuleId::R13 => "13",
            RuleId::R14 => "14",
            RuleId::R15 => "15",
            RuleId::R16 => "16",
            RuleId::R17 => "17",
            RuleId::R25 => "25",
            RuleId::R26 => "26",
            RuleId::R27 => "27",
            RuleId::R27v => "27v",
        }
    }

    /// Number of premises; every rule but modus ponens takes one.
    pub fn arity(self) -> usize {
        match self {
            RuleId::R13 | RuleId::R25 => 2,
            _ => 1,
        }
    }
}

impl fmt::Display for SchemaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "axiom {}", self.label())
    }
}

impl fmt::Display for RuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "rule {}", self.label())
    }
}

fn strip_label(s: &str) -> &str {
    let s = s.trim();
    s.strip_prefix("axiom").or_else(|| s.strip_prefix("rule")).map(str::trim).unwrap_or(s)
}

impl FromStr for SchemaId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let key = strip_label(s);
        SchemaId::ALL.into_iter().find(|a| a.label() == key).ok_or_else(|| format!("unknown axiom schema `{s}`"))
    }
}

impl FromStr for RuleId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let key = strip_label(s);
        RuleId::ALL.into_iter().find(|r| r.label() == key).ok_or_else(|| format!("unknown rule `{s}`"))
    }
}

/// The seven logics of the family.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Logic {
    Qst,
    Qc2,
    Qc2Eq,
    Qc2vE,
    Qc2vEq,
    Qc2cE,
    Qc2cEq,
}

impl Logic {
    pub const ALL: [Logic; 7] =
        [Logic::Qst, Logic::Qc2, Logic::Qc2Eq, Logic::Qc2vE, Logic::Qc2vEq, Logic::Qc2cE, Logic::Qc2cEq];

    pub fn name(self) -> &'static str {
        match self {
            Logic::Qst => "QST",
            Logic::Qc2 => "QC2",
            Logic::Qc2Eq => "QC2=",
            Logic::Qc2vE => "QC2vE",
            Logic::Qc2vEq => "QC2v=",
            Logic::Qc2cE => "QC2cE",
            Logic::Qc2cEq => "QC2c=",
        }
    }

    pub fn language(self) -> Language {
        match self {
            Logic::Qc2 => Language::Plain,
            Logic::Qc2vE | Logic::Qc2cE => Language::Existence,
            Logic::Qst | Logic::Qc2Eq | Logic::Qc2vEq | Logic::Qc2cEq => Language::Identity,
        }
    }

    pub fn axioms(self) -> Vec<SchemaId> {
        use SchemaId::*;
        let qc2_core = [A18, A19, A20, A21, A22, A24];
        let identity = [A28, A29, A30];
        let mut v: Vec<SchemaId> = match self {
            Logic::Qst => return vec![A1, A2, A3, A4, A5, A6, A7, A8, A9, A10, A11, A12],
            Logic::Qc2 | Logic::Qc2Eq => [&qc2_core[..], &[A23]].concat(),
            _ => [&qc2_core[..], &[A23v]].concat(),
        };
        if matches!(self, Logic::Qc2Eq | Logic::Qc2vEq | Logic::Qc2cEq) {
            v.extend(identity);
        }
        if matches!(self, Logic::Qc2cE | Logic::Qc2cEq) {
            v.extend([A31c, A32c]);
        }
        v.sort();
        v
    }

    pub fn rules(self) -> Vec<RuleId> {
        match self {
            Logic::Qst => vec![RuleId::R13, RuleId::R14, RuleId::R15, RuleId::R16, RuleId::R17],
            Logic::Qc2 | Logic::Qc2Eq => vec![RuleId::R25, RuleId::R26, RuleId::R27],
            _ => vec![RuleId::R25, RuleId::R26, RuleId::R27v],
        }
    }
}

impl fmt::Display for Logic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Logic {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let norm = s.trim().replace('_', "").replace("^", "");
        Logic::ALL
            .into_iter()
            .find(|l| l.name().eq_ignore_ascii_case(&norm))
            .ok_or_else(|| format!("unknown logic `{s}` (expected one of QST, QC2, QC2=, QC2vE, QC2v=, QC2cE, QC2c=)"))
    }
}

// Metavariable indices.
const PHI: Meta = 0;
const PSI: Meta = 1;
const CHI: Meta = 2;
const X: VarMeta = 0;
const Y: VarMeta = 1;

/// Pattern of a schema, for the schemas that are pure patterns plus side
/// conditions. Tautologies have none.
pub(crate) fn pattern(s: SchemaId) -> Option<Pat> {
    let (p, q, r) = (m(PHI), m(PSI), m(CHI));
    Some(match s {
        SchemaId::A1 | SchemaId::A18 => return None,
        SchemaId::A2 => imp(nec(imp(p.clone(), q.clone())), imp(nec(p), nec(q))),
        SchemaId::A3 => imp(nec(imp(p.clone(), q.clone())), cond(p, q)),
        SchemaId::A4 => imp(poss(p.clone()), imp(cond(p.clone(), q.clone()), not(cond(p, not(q))))),
        SchemaId::A5 => imp(cond(p.clone(), or(q.clone(), r.clone())), or(cond(p.clone(), q), cond(p, r))),
        SchemaId::A6 | SchemaId::A21 => imp(cond(p.clone(), q.clone()), imp(p, q)),
        SchemaId::A7 => imp(
            and(cond(p.clone(), q.clone()), cond(q.clone(), p.clone())),
            imp(cond(p, r.clone()), cond(q, r)),
        ),
        // ∀xφ ⊃ (∃x□x=t ⊃ φ'), φ' = φ[t/x]
        SchemaId::A8 => imp(forall(X, p), imp(exists(X, nec(eq(X, Y))), q)),
        // ∀x(∃y□y=x ⊃ φ) ⊃ ∀xφ
        SchemaId::A9 => imp(forall(X, imp(exists(Y, nec(eq(Y, X))), p.clone())), forall(X, p)),
        SchemaId::A10 | SchemaId::A28 => eq(X, X),
        // s=t ⊃ (φ ⊃ φ')
        SchemaId::A11 => imp(eq(X, Y), imp(p, q)),
        SchemaId::A12 => imp(poss(eq(X, Y)), nec(eq(X, Y))),
        SchemaId::A19 => cond(p.clone(), p),
        SchemaId::A20 => imp(
            and(and(cond(p.clone(), q.clone()), cond(q.clone(), p.clone())), cond(p, r.clone())),
            cond(q, r),
        ),
        SchemaId::A22 => or(cond(p.clone(), q.clone()), cond(p, not(q))),
        // ∀xφ ⊃ φ', φ' = φ[y/x]
        SchemaId::A23 => imp(forall(X, p), q),
        // (∀xφ ∧ E(y)) ⊃ φ'
        SchemaId::A23v => imp(and(forall(X, p), Pat::Exists(Y)), q),
        SchemaId::A24 => imp(forall(X, cond(p.clone(), q.clone())), cond(p, forall(X, q))),
        // x=y ⊃ (φ ≡ φ')
        SchemaId::A29 => imp(eq(X, Y), iff(p, q)),
        SchemaId::A30 => imp(not(eq(X, Y)), nec(not(eq(X, Y)))),
        SchemaId::A31c => imp(Pat::Exists(X), nec(Pat::Exists(X))),
        SchemaId::A32c => imp(not(Pat::Exists(X)), nec(not(Pat::Exists(X)))),
    })
}

/// Options for the schemas whose published wording admits two readings.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SchemaOptions {
    /// Axiom 11: replace occurrences of `t` by `s` instead of `s` by `t`.
    pub axiom11_reverse: bool,
}

/// `φ[y/x]`, compared up to α-equivalence.
fn is_substitution(target: &Formula, phi: &Formula, x: Var, y: Var) -> bool {
    phi.substitute(&[(x, y)]).alpha_eq(target)
}

/// Whether `target` is `φ[y/x]` for some variable `y`. Only variables
/// free in `target` and `x` itself can serve, plus one fresh variable for
/// the case where `x` is not free in `φ`.
pub(crate) fn substitution_witness(target: &Formula, phi: &Formula, x: Var) -> Option<Var> {
    if !phi.is_free(x) {
        return phi.alpha_eq(target).then_some(x);
    }
    target.free_vars().into_iter().find(|&y| is_substitution(target, phi, x, y))
}

/// True when `b` is `a` with zero or more free occurrences of `s` replaced
/// by `t`, none of them inside a conditional.
fn replaces_outside_cond(a: &Formula, b: &Formula, s: Var, t: Var) -> bool {
    fn go(a: &Formula, b: &Formula, s: Var, t: Var, bound: &mut Vec<(Var, Var)>, in_cond: bool) -> bool {
        // Variables at corresponding positions: either the same occurrence,
        // or a free `s` in `a` replaced by a free `t` in `b`.
        let ok = |va: &Var, vb: &Var, bound: &Vec<(Var, Var)>| {
            let ia = bound.iter().rposition(|(l, _)| l == va);
            let ib = bound.iter().rposition(|(_, r)| r == vb);
            match (ia, ib) {
                (Some(i), Some(j)) => i == j,
                (None, None) => va == vb || (!in_cond && *va == s && *vb == t),
                _ => false,
            }
        };
        match (a, b) {
            (Formula::Bot, Formula::Bot) => true,
            (Formula::Atom(p, xs), Formula::Atom(q, ys)) => {
                p == q && xs.len() == ys.len() && xs.iter().zip(ys).all(|(x, y)| ok(x, y, bound))
            }
            (Formula::Eq(a1, a2), Formula::Eq(b1, b2)) => ok(a1, b1, bound) && ok(a2, b2, bound),
            (Formula::Existence(x), Formula::Existence(y)) => ok(x, y, bound),
            (Formula::Not(x), Formula::Not(y)) => go(x, y, s, t, bound, in_cond),
            (Formula::Implies(a1, a2), Formula::Implies(b1, b2)) => {
                go(a1, b1, s, t, bound, in_cond) && go(a2, b2, s, t, bound, in_cond)
            }
            (Formula::Cond(a1, a2), Formula::Cond(b1, b2)) => go(a1, b1, s, t, bound, true) && go(a2, b2, s, t, bound, true),
            (Formula::Forall(x, p), Formula::Forall(y, q)) => {
                bound.push((*x, *y));
                let r = go(p, q, s, t, bound, in_cond);
                bound.pop();
                r
            }
            _ => false,
        }
    }
    go(a, b, s, t, &mut Vec::new(), false)
}

/// Decides whether `f` is an instance of schema `s`.
pub fn is_axiom_instance(s: SchemaId, f: &Formula) -> bool {
    is_axiom_instance_with(s, f, SchemaOptions::default())
}

pub fn is_axiom_instance_with(s: SchemaId, f: &Formula, opts: SchemaOptions) -> bool {
    let Some(pat) = pattern(s) else {
        return is_tautology(f).unwrap_or(false);
    };
    let mut b = Bindings::new();
    if !matches(&pat, f, &mut b) {
        return false;
    }
    match s {
        SchemaId::A8 => is_substitution(b.f(PSI), b.f(PHI), b.v(X), b.v(Y)),
        SchemaId::A9 => b.v(X) != b.v(Y),
        SchemaId::A11 => {
            let (sv, tv) = if opts.axiom11_reverse { (b.v(Y), b.v(X)) } else { (b.v(X), b.v(Y)) };
            replaces_outside_cond(b.f(PHI), b.f(PSI), sv, tv)
        }
        SchemaId::A23 => substitution_witness(b.f(PSI), b.f(PHI), b.v(X)).is_some(),
        SchemaId::A23v | SchemaId::A29 => is_substitution(b.f(PSI), b.f(PHI), b.v(X), b.v(Y)),
        SchemaId::A24 => !b.f(PHI).is_free(b.v(X)),
        _ => true,
    }
}

/// Builds an instance of `s` from metavariable values `[φ, ψ, χ]` and
/// variables `[x, y]`. Substitution schemas compute their substituted
/// component; axiom 11 replaces every eligible occurrence. Returns `None`
/// when a side condition fails or for the tautology schemas.
pub fn schema_instance(s: SchemaId, formulas: &[Formula; 3], vars: [Var; 2], lang: Language) -> Option<Formula> {
    let pat = pattern(s)?;
    let [x, y] = vars;
    let mut fs = formulas.to_vec();
    match s {
        SchemaId::A8 | SchemaId::A23 | SchemaId::A23v | SchemaId::A29 => fs[PSI] = fs[PHI].substitute(&[(x, y)]),
        SchemaId::A9 if x == y => return None,
        SchemaId::A11 => fs[PSI] = replace_free_outside_cond(&fs[PHI], x, y),
        SchemaId::A24 if fs[PHI].is_free(x) => return None,
        _ => {}
    }
    let out = build(&pat, &fs, &[x, y], lang == Language::Identity);
    debug_assert!(is_axiom_instance(s, &out), "generated instance of {s} does not match: {out}");
    Some(out)
}

/// Replaces every free occurrence of `s` outside conditionals by `t`,
/// skipping occurrences where `t` would be captured.
fn replace_free_outside_cond(f: &Formula, s: Var, t: Var) -> Formula {
    fn go(f: &Formula, s: Var, t: Var, bound: &mut Vec<Var>) -> Formula {
        let r = |v: &Var, bound: &Vec<Var>| if *v == s && !bound.contains(&s) && !bound.contains(&t) { t } else { *v };
        match f {
            Formula::Atom(p, args) => Formula::Atom(p.clone(), args.iter().map(|v| r(v, bound)).collect()),
            Formula::Eq(a, b) => Formula::Eq(r(a, bound), r(b, bound)),
            Formula::Existence(a) => Formula::Existence(r(a, bound)),
            Formula::Not(a) => Formula::not(go(a, s, t, bound)),
            Formula::Implies(a, b) => Formula::implies(go(a, s, t, bound), go(b, s, t, bound)),
            Formula::Forall(x, a) => {
                bound.push(*x);
                let out = Formula::forall(*x, go(a, s, t, bound));
                bound.pop();
                out
            }
            other => other.clone(),
        }
    }
    go(f, s, t, &mut Vec::new())
}

/// Splits `f` as `α1 > (α2 > ... (αk > rest))` for `k = depth`.
fn spine(f: &Formula, depth: usize) -> Option<(Vec<&Formula>, &Formula)> {
    f.cond_spine(depth)
}

fn same_antecedents(a: &[&Formula], b: &[&Formula]) -> bool {
    a.len() == b.len() && a.iter().zip(b).all(|(x, y)| x.alpha_eq(y))
}

/// Rule 26: `premise = (ψ1 ∧ ... ∧ ψn) ⊃ χ`, `lhs = (φ>ψ1) ∧ ... ∧ (φ>ψn)`
/// with the same conjunction tree.
fn conjunction_lifts(lhs: &Formula, premise_lhs: &Formula, phi: &Formula) -> bool {
    if let Formula::Cond(a, b) = lhs {
        if a.alpha_eq(phi) && b.alpha_eq(premise_lhs) {
            return true;
        }
    }
    match (lhs.as_and(), premise_lhs.as_and()) {
        (Some((l1, l2)), Some((p1, p2))) => conjunction_lifts(l1, p1, phi) && conjunction_lifts(l2, p2, phi),
        _ => false,
    }
}

/// Existence atom `E(y)`, or `∃z(y = z)` under identity.
fn existence_var(f: &Formula) -> Option<Var> {
    let mut b = Bindings::new();
    matches(&Pat::Exists(Y), f, &mut b).then(|| b.v(Y))
}

/// Decides whether `conclusion` follows from `premises` by `rule`.
pub fn check_rule(rule: RuleId, premises: &[&Formula], conclusion: &Formula) -> Result<(), String> {
    if premises.len() != rule.arity() {
        return Err(format!("{rule} takes {} premise(s), {} cited", rule.arity(), premises.len()));
    }
    let ok = match rule {
        RuleId::R13 | RuleId::R25 => {
            let mp = |a: &Formula, b: &Formula| match b {
                Formula::Implies(x, y) => x.alpha_eq(a) && y.alpha_eq(conclusion),
                _ => false,
            };
            mp(premises[0], premises[1]) || mp(premises[1], premises[0])
        }
        RuleId::R14 => matches!(conclusion, Formula::Cond(_, phi) if phi.alpha_eq(premises[0])),
        RuleId::R15 => match (premises[0], conclusion) {
            (Formula::Implies(psi, phi), Formula::Implies(psi2, all)) => match &**all {
                Formula::Forall(x, phi2) => psi.alpha_eq(psi2) && phi.alpha_eq(phi2) && !psi.is_free(*x),
                _ => false,
            },
            _ => false,
        },
        RuleId::R16 => (0..=conclusion.cond_spine_len()).any(|k| {
            let (Some((alphas, rest)), Some((alphas2, phi))) = (spine(conclusion, k), spine(premises[0], k)) else {
                return false;
            };
            match rest {
                Formula::Forall(x, phi2) => {
                    same_antecedents(&alphas, &alphas2) && phi.alpha_eq(phi2) && alphas.iter().all(|a| !a.is_free(*x))
                }
                _ => false,
            }
        }),
        RuleId::R17 => (0..=conclusion.cond_spine_len()).any(|k| {
            let (Some((alphas, rest)), Some((alphas2, prem_rest))) = (spine(conclusion, k), spine(premises[0], k)) else {
                return false;
            };
            let (Formula::Not(phi), Formula::Cond(phi2, neq)) = (rest, prem_rest) else {
                return false;
            };
            let x = match &**neq {
                Formula::Not(e) => match &**e {
                    Formula::Eq(_, x) => *x,
                    _ => return false,
                },
                _ => return false,
            };
            same_antecedents(&alphas, &alphas2)
                && phi.alpha_eq(phi2)
                && !phi.is_free(x)
                && alphas.iter().all(|a| !a.is_free(x))
        }),
        RuleId::R26 => match (premises[0], conclusion) {
            (Formula::Implies(conj, chi), Formula::Implies(lifted, c)) => match &**c {
                Formula::Cond(phi, chi2) => chi.alpha_eq(chi2) && conjunction_lifts(lifted, conj, phi),
                _ => false,
            },
            _ => false,
        },
        RuleId::R27 => match (premises[0], conclusion) {
            (Formula::Implies(psi, inst), Formula::Implies(psi2, all)) => match &**all {
                Formula::Forall(x, phi) => psi.alpha_eq(psi2) && universal_intro_ok(inst, phi, *x, &[psi], all),
                _ => false,
            },
            _ => false,
        },
        RuleId::R27v => match (premises[0], conclusion) {
            (Formula::Implies(psi, prem_spine), Formula::Implies(psi2, concl_spine)) if psi.alpha_eq(psi2) => {
                (0..=concl_spine.cond_spine_len()).any(|k| {
                    let (Some((alphas, rest)), Some((alphas2, prem_rest))) = (spine(concl_spine, k), spine(prem_spine, k)) else {
                        return false;
                    };
                    let (Formula::Forall(x, phi), Formula::Implies(ey, inst)) = (rest, prem_rest) else {
                        return false;
                    };
                    let Some(y) = existence_var(ey) else { return false };
                    let mut avoid: Vec<&Formula> = alphas.clone();
                    avoid.push(psi);
                    same_antecedents(&alphas, &alphas2)
                        && is_substitution(inst, phi, *x, y)
                        && !avoid.iter().any(|a| a.is_free(y))
                        && !rest.is_free(y)
                })
            }
            _ => false,
        },
    };
    if ok {
        Ok(())
    } else {
        Err(format!("the conclusion does not follow by {rule}"))
    }
}

/// Rule 27's core: `inst = φ[y/x]` for some `y` free in none of `avoid`
/// and not free in `all = ∀xφ`.
fn universal_intro_ok(inst: &Formula, phi: &Formula, x: Var, avoid: &[&Formula], all: &Formula) -> bool {
    let fits = |y: Var| !avoid.iter().any(|a| a.is_free(y)) && !all.is_free(y) && is_substitution(inst, phi, x, y);
    let mut candidates: Vec<Var> = inst.free_vars().into_iter().collect();
    candidates.push(x);
    let mut used = inst.all_vars();
    used.extend(phi.all_vars());
    for a in avoid {
        used.extend(a.all_vars());
    }
    used.insert(x);
    candidates.push(FreshVars::new(used).next_var());
    candidates.into_iter().any(fits)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser_io::parse_formula;

    fn p(s: &str) -> Formula {
        parse_formula(s, Language::Plain).unwrap()
    }

    fn pe(s: &str) -> Formula {
        parse_formula(s, Language::Identity).unwrap()
    }

    #[test]
    fn cem_instance() {
        assert!(is_axiom_instance(SchemaId::A22, &p("(F(x) > G(x)) | (F(x) > ~G(x))")));
        assert!(!is_axiom_instance(SchemaId::A22, &p("(F(x) > G(x)) | (G(x) > ~G(x))")));
    }

    #[test]
    fn universal_instantiation() {
        assert!(is_axiom_instance(SchemaId::A23, &p("(forall x. F(x)) -> F(y)")));
        assert!(is_axiom_instance(SchemaId::A23, &p("(forall x. F(x)) -> F(x)")));
        assert!(!is_axiom_instance(SchemaId::A23, &p("(forall x. G(x, z)) -> G(y, y)")));
        // capture: ∀x∃y R(x,y) ⊃ ∃y' R(y,y')
        assert!(is_axiom_instance(SchemaId::A23, &p("(forall x. exists y. R(x, y)) -> exists z. R(y, z)")));
        assert!(!is_axiom_instance(SchemaId::A23, &p("(forall x. exists y. R(x, y)) -> exists y. R(y, y)")));
    }

    #[test]
    fn mod_is_not_an_axiom() {
        let f = p("box F(x) -> (G(y) > F(x))");
        assert!(SchemaId::ALL.iter().all(|s| !is_axiom_instance(*s, &f)));
    }

    #[test]
    fn barcan_side_condition() {
        assert!(is_axiom_instance(SchemaId::A24, &p("(forall x. A > F(x)) -> (A > forall x. F(x))")));
        assert!(!is_axiom_instance(SchemaId::A24, &p("(forall x. F(x) > F(x)) -> (F(x) > forall x. F(x))")));
    }

    #[test]
    fn identity_schemas() {
        assert!(is_axiom_instance(SchemaId::A28, &pe("x = x")));
        assert!(is_axiom_instance(SchemaId::A29, &pe("x = y -> (F(x) <-> F(y))")));
        assert!(is_axiom_instance(SchemaId::A30, &pe("x != y -> box x != y")));
        assert!(is_axiom_instance(SchemaId::A12, &pe("dia x = y -> box x = y")));
        assert!(is_axiom_instance(SchemaId::A11, &pe("x = y -> (F(x) & (F(x) > G(x)) -> F(y) & (F(x) > G(x)))")));
        assert!(!is_axiom_instance(SchemaId::A11, &pe("x = y -> ((F(x) > G(x)) -> (F(y) > G(x)))")));
        let rev = SchemaOptions { axiom11_reverse: true };
        assert!(is_axiom_instance_with(SchemaId::A11, &pe("x = y -> (F(y) -> F(x))"), rev));
        assert!(!is_axiom_instance_with(SchemaId::A11, &pe("x = y -> (F(x) -> F(y))"), rev));
    }

    #[test]
    fn existence_schemas() {
        let le = |s: &str| parse_formula(s, Language::Existence).unwrap();
        assert!(is_axiom_instance(SchemaId::A23v, &le("(forall x. F(x)) & E(y) -> F(y)")));
        assert!(is_axiom_instance(SchemaId::A31c, &le("E(x) -> box E(x)")));
        assert!(is_axiom_instance(SchemaId::A32c, &le("~E(x) -> box ~E(x)")));
        assert!(is_axiom_instance(SchemaId::A23v, &pe("(forall x. F(x)) & E(y) -> F(y)")));
    }

    #[test]
    fn qst_schemas() {
        assert!(is_axiom_instance(SchemaId::A8, &pe("(forall x. F(x)) -> ((exists x. box x = t) -> F(t))")));
        assert!(is_axiom_instance(SchemaId::A9, &pe("(forall x. (exists y. box y = x) -> F(x)) -> forall x. F(x)")));
        assert!(is_axiom_instance(SchemaId::A4, &p("dia A -> ((A > B) -> ~(A > ~B))")));
        assert!(is_axiom_instance(SchemaId::A1, &p("(A > B) -> (A > B)")));
    }

    #[test]
    fn rules() {
        let a = p("A");
        let ab = p("A -> B");
        assert!(check_rule(RuleId::R25, &[&a, &ab], &p("B")).is_ok());
        assert!(check_rule(RuleId::R25, &[&ab, &a], &p("B")).is_ok());
        assert!(check_rule(RuleId::R14, &[&a], &p("C > A")).is_ok());
        let prem = p("A -> F(y)");
        assert!(check_rule(RuleId::R27, &[&prem], &p("A -> forall x. F(x)")).is_ok());
        let prem = p("F(y) -> F(y)");
        assert!(check_rule(RuleId::R27, &[&prem], &p("F(y) -> forall x. F(x)")).is_err());
        let prem = p("A & B -> C");
        assert!(check_rule(RuleId::R26, &[&prem], &p("(D > A) & (D > B) -> (D > C)")).is_ok());
        assert!(check_rule(RuleId::R26, &[&prem], &p("(D > A) & (H > B) -> (D > C)")).is_err());
        let prem = p("A > (B > F(x))");
        assert!(check_rule(RuleId::R16, &[&prem], &p("A > (B > forall x. F(x))")).is_ok());
        let prem = p("F(x) > (B > F(x))");
        assert!(check_rule(RuleId::R16, &[&prem], &p("F(x) > (B > forall x. F(x))")).is_err());
        let prem = pe("A > (B > y != x)");
        assert!(check_rule(RuleId::R17, &[&prem], &pe("A > ~B")).is_ok());
        let prem = pe("A > (F(x) > y != x)");
        assert!(check_rule(RuleId::R17, &[&prem], &pe("A > ~F(x)")).is_err());
        let le = |s: &str| parse_formula(s, Language::Existence).unwrap();
        let prem = le("A -> (B > (E(y) -> F(y)))");
        assert!(check_rule(RuleId::R27v, &[&prem], &le("A -> (B > forall x. F(x))")).is_ok());
        let prem = le("F(y) -> (B > (E(y) -> F(y)))");
        assert!(check_rule(RuleId::R27v, &[&prem], &le("F(y) -> (B > forall x. F(x))")).is_err());
    }

    #[test]
    fn instances_round_trip() {
        let fs = [p("F(x)"), p("G(x, y)"), p("A")];
        for s in SchemaId::ALL {
            let lang = if matches!(s, SchemaId::A31c | SchemaId::A32c | SchemaId::A23v) {
                Language::Existence
            } else {
                Language::Identity
            };
            if let Some(f) = schema_instance(s, &fs, [Var(0), Var(1)], lang) {
                assert!(is_axiom_instance(s, &f), "{s}: {f}");
            }
        }
    }
}
