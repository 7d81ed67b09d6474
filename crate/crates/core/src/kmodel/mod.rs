//! The ordering model K: worlds `ℤ⁻ ∪ {−∞}`, `R(−∞) = W`, `R(k) = {k}`,
//! constant domain `ℤ⁻`, `⪯_{−∞}` the usual order with `−∞` least, and
//! `F` true of `n` at `k` iff `n ≤ k`.
//!
//! Truth is decided symbolically: denotations are finite unions of
//! intervals plus a possible ray and `−∞`, integer worlds reduce to
//! monadic normal forms, and `−∞` is handled by structural recursion.

mod eval;
mod monadic;
mod oracle;
mod sweep;
mod worldset;

use std::fmt;
use std::str::FromStr;

pub use eval::{cond_at_origin, cond_denotation, denote_k, eval_k, KEvaluator, KOptions};
pub use monadic::{monadic_nf, CountRange, CountingNormalForm, TypeConstraint};
pub use oracle::{truncation_oracle, OracleMismatch, OracleReport};
pub use sweep::{cem_sweep, formula_pool, CemCounterexample, CemReport, SchemaCheck, SweepConfig};
pub use worldset::SymbolicWorldSet;

use crate::frame_props::{check_selection_props, Condition};
use crate::semantics::{
    ordering_to_selection, Assignment, BitSet, Frame, FrameBase, Interpretation, Model, OrderingFrame, PredTable,
};
use crate::syntax::{Predicate, Var};

/// A world of K.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum KWorld {
    MinusInf,
    Int(i64),
}

impl fmt::Display for KWorld {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KWorld::MinusInf => write!(f, "-inf"),
            KWorld::Int(k) => write!(f, "{k}"),
        }
    }
}

impl FromStr for KWorld {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "-inf" | "−∞" | "-∞" | "-oo" => Ok(KWorld::MinusInf),
            t => match t.replace('−', "-").parse::<i64>() {
                Ok(k) if k <= -1 => Ok(KWorld::Int(k)),
                Ok(k) => Err(format!("{k} is not a world of K (integers must be at most -1)")),
                Err(_) => Err(format!("`{s}` is not a world of K")),
            },
        }
    }
}

impl serde::Serialize for KWorld {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            KWorld::MinusInf => s.serialize_str("-inf"),
            KWorld::Int(k) => s.serialize_i64(*k),
        }
    }
}

/// Variable assignment into `ℤ⁻`.
pub type KAssignment = Assignment<i64>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum KError {
    #[error("variable {0} is not assigned")]
    Uncovered(Var),
    #[error("variable {0} is assigned {1}, which is not in Z-")]
    OutOfRange(Var, i64),
    #[error("{0} is not a world of K")]
    NoSuchWorld(i64),
    #[error("predicate {0} is outside the fragment K interprets (only F/1)")]
    NonFragment(Predicate),
    #[error("not a monadic formula: contains {0}")]
    NonMonadic(String),
    #[error("quantifier test set did not stabilise for {formula} under {assignment}")]
    Stabilization { formula: String, assignment: String },
}

pub(crate) fn is_fragment_predicate(p: &Predicate) -> bool {
    p.name() == "F" && p.arity() == 1
}

/// Index of world `w` in [`truncate`]`(n)`, if it survives truncation.
pub fn truncation_world(n: usize, w: KWorld) -> Option<usize> {
    match w {
        KWorld::MinusInf => Some(n),
        KWorld::Int(k) if k <= -1 && -k <= n as i64 => Some((-k - 1) as usize),
        KWorld::Int(_) => None,
    }
}

/// The assignment of [`truncate`]`(n)` matching `g`, if every value is in
/// `{−n, …, −1}`.
pub fn truncation_assignment(n: usize, g: &KAssignment) -> Option<Assignment> {
    g.0.iter()
        .map(|(&v, &k)| (k <= -1 && -k <= n as i64).then_some((v, (-k - 1) as usize)))
        .collect::<Option<Vec<_>>>()
        .map(|pairs| pairs.into_iter().collect())
}

/// The finite ordering model `K_n`: worlds `{−n, …, −1, −∞}`, domain
/// `{−n, …, −1}`, and otherwise as K. World and element `i` is `−(i+1)`;
/// world `n` is `−∞`.
pub fn truncate(n: usize) -> Model {
    assert!(n >= 1, "truncation needs at least one integer world");
    let origin = n;
    let all = BitSet::full(n + 1);
    let mut access: Vec<_> = (0..n).map(BitSet::singleton).collect();
    access.push(all);
    let mut worlds: Vec<String> = (0..n).map(|i| (-(i as i64) - 1).to_string()).collect();
    worlds.push("-inf".into());
    let domain: Vec<String> = (0..n).map(|i| (-(i as i64) - 1).to_string()).collect();
    let base = FrameBase::new(worlds, access, domain, vec![BitSet::full(n); n + 1]).expect("truncation is well formed");
    let mut pairs: Vec<Vec<(usize, usize)>> = (0..n).map(|i| vec![(i, i)]).collect();
    // Index i is −(i+1), so a larger index is a smaller integer.
    let mut origin_pairs = vec![(origin, origin)];
    for x in 0..n {
        origin_pairs.push((origin, x));
        for y in 0..=x {
            origin_pairs.push((x, y));
        }
    }
    pairs.push(origin_pairs);
    let order = OrderingFrame::new(base, &pairs).expect("order lies within R");
    let f = crate::syntax::predicate_f();
    let mut table = PredTable::empty(1, n + 1, n);
    for k in 0..n {
        // F(m) at world k iff m ≤ k, i.e. index(m) ≥ index(k).
        for m in k..n {
            table.set_code(k, m, true);
        }
    }
    let mut interp = Interpretation::new();
    interp.insert(f, table);
    Model::new(Frame::Ordering(order), interp)
}

/// `min_{≤}(S)` at `−∞`: the selection an ordering induces there.
pub fn min_at_origin(s: &SymbolicWorldSet) -> SymbolicWorldSet {
    if s.minus_inf() {
        return SymbolicWorldSet::origin();
    }
    match s.least_integer() {
        Some(m) => SymbolicWorldSet::interval(m, m),
        None => SymbolicWorldSet::empty(),
    }
}

#[derive(Clone, Debug, serde::Serialize)]
pub struct TruncationProbe {
    pub n: usize,
    /// Selection conditions violated by the selection induced on `K_n`.
    pub violated: Vec<String>,
}

#[derive(Clone, Debug, serde::Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ProbeReport {
    /// `f(ℤ⁻, −∞)`
    pub f_integers: SymbolicWorldSet,
    /// `f({−1}, −∞)`
    pub f_minus_one: SymbolicWorldSet,
    pub uniformity_violated: bool,
    pub weak_limit_violated: bool,
    pub limit_violated: bool,
    pub truncations: Vec<TruncationProbe>,
}

/// Selection function induced on K by minimal elements, at `−∞`, for
/// `P = ℤ⁻` and `P = {−1}`, together with the same check on the
/// truncations `K_1 … K_max_n`.
pub fn induced_selection_probe(max_n: usize) -> ProbeReport {
    let z = SymbolicWorldSet::integers();
    let one = SymbolicWorldSet::interval(-1, -1);
    let (fz, fo) = (min_at_origin(&z), min_at_origin(&one));
    let uniformity_violated = fz.is_subset(&one) && fo.is_subset(&z) && fz != fo;
    // f(P) = ∅ must keep P away from every selected set.
    let weak_limit_violated = fz.is_empty() && !z.intersection(&fo).is_empty();
    let limit_violated = fz.is_empty() && !z.is_empty();
    let truncations = (1..=max_n)
        .map(|n| {
            let sel = ordering_to_selection(&truncate(n)).expect("finite linear orders are Stalnakerian");
            let Frame::Selection(frame) = &sel.frame else { unreachable!("conversion yields a selection frame") };
            let report = check_selection_props(frame).expect("small frame");
            let violated = Condition::SELECTION
                .into_iter()
                .filter(|&c| report.holds(c) == Some(false))
                .map(|c| c.name().to_string())
                .collect();
            TruncationProbe { n, violated }
        })
        .collect();
    ProbeReport { f_integers: fz, f_minus_one: fo, uniformity_violated, weak_limit_violated, limit_violated, truncations }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frame_props::check_ordering_props;
    use crate::parser_io::{parse_formula_with, Symbols};
    use crate::semantics;
    use crate::syntax::{build_ds, Formula, Language};

    fn g(pairs: &[(Var, i64)]) -> KAssignment {
        pairs.iter().copied().collect()
    }

    #[test]
    fn worlds_parse() {
        assert_eq!("-inf".parse::<KWorld>(), Ok(KWorld::MinusInf));
        assert_eq!("-3".parse::<KWorld>(), Ok(KWorld::Int(-3)));
        assert!("0".parse::<KWorld>().is_err());
    }

    #[test]
    fn atoms_and_quantifiers() {
        let x = Var(0);
        let fx = crate::syntax::f_atom(x);
        let d = denote_k(&fx, &g(&[(x, -3)])).unwrap();
        assert_eq!(d, SymbolicWorldSet::interval(-3, -1));
        assert_eq!(denote_k(&Formula::exists(x, fx.clone()), &g(&[])).unwrap(), SymbolicWorldSet::integers());
        assert_eq!(denote_k(&Formula::forall(x, fx.clone()), &g(&[])).unwrap(), SymbolicWorldSet::interval(-1, -1));
        assert!(eval_k(&fx, KWorld::Int(-2), &g(&[(x, -3)])).unwrap());
        assert!(!eval_k(&fx, KWorld::Int(-3), &g(&[(x, -2)])).unwrap());
    }

    #[test]
    fn ds_holds_at_origin() {
        assert!(eval_k(&build_ds(), KWorld::MinusInf, &g(&[])).unwrap());
    }

    #[test]
    fn descending_witness() {
        let mut sy = Symbols::new();
        let f = parse_formula_with("(F(x) | F(y)) > ~F(x)", Language::Plain, &mut sy).unwrap();
        let (x, y) = (sy.lookup_var("x").unwrap(), sy.lookup_var("y").unwrap());
        for k in -8..=-1 {
            assert!(eval_k(&f, KWorld::MinusInf, &g(&[(x, k), (y, k - 1)])).unwrap());
        }
    }

    #[test]
    fn origin_clause_cases() {
        let a = SymbolicWorldSet::integers();
        assert!(!cond_at_origin(&a, &SymbolicWorldSet::empty()));
        let one = SymbolicWorldSet::interval(-1, -1);
        assert!(cond_at_origin(&one, &one));
        let a = SymbolicWorldSet::new(false, Some(-5), [(-2, -2)]);
        assert!(cond_at_origin(&a, &SymbolicWorldSet::ray_below(-7)));
        assert!(cond_at_origin(&SymbolicWorldSet::empty(), &SymbolicWorldSet::empty()));
        assert!(!cond_at_origin(&SymbolicWorldSet::all(), &SymbolicWorldSet::integers()));
    }

    #[test]
    fn truncations_are_lewisian_and_well_founded() {
        let m = truncate(2);
        assert_eq!(m.base().n_worlds(), 3);
        let Frame::Ordering(o) = &m.frame else { panic!() };
        let r = check_ordering_props(o).unwrap();
        assert_eq!(r.lewisian(), Some(true));
        assert_eq!(r.holds(Condition::StrongLimitAssumption), Some(true));
    }

    #[test]
    fn truncation_agrees_on_atoms() {
        let m = truncate(5);
        let x = Var(0);
        let fx = crate::syntax::f_atom(x);
        for v in -5..=-1 {
            for k in -5..=-1 {
                let gk = g(&[(x, v)]);
                let ga = truncation_assignment(5, &gk).unwrap();
                let w = truncation_world(5, KWorld::Int(k)).unwrap();
                assert_eq!(semantics::eval(&m, w, &ga, &fx).unwrap(), eval_k(&fx, KWorld::Int(k), &gk).unwrap());
            }
        }
    }

    #[test]
    fn ds_fails_in_every_truncation() {
        for n in [1, 2, 5, 20] {
            let m = truncate(n);
            assert!(!semantics::eval(&m, n, &Assignment::new(), &build_ds()).unwrap());
        }
    }

    #[test]
    fn probe() {
        let r = induced_selection_probe(4);
        assert!(r.f_integers.is_empty());
        assert_eq!(r.f_minus_one, SymbolicWorldSet::interval(-1, -1));
        assert!(r.uniformity_violated);
        assert!(r.weak_limit_violated && r.limit_violated);
        assert!(r.truncations.iter().all(|t| t.violated.is_empty()), "{:?}", r.truncations);
    }
}
