//! Frame conditions on selection functions, orders, and domains.
//!
//! Every check is exhaustive over subsets of `W` and returns a witness for
//! the first violation found. All selection and order conditions are local
//! to a world, so the checks work on one world's slice at a time; the
//! enumerator in [`crate::search`] uses the same per-slice functions for
//! pruning.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::semantics::{frame_valid, BitSet, EvalError, Frame, FrameBase, FrameValidLimits, OrderingFrame, SelectionFrame, WorldSet};
use crate::syntax::{build_cem, Formula, Predicate, Var};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Condition {
    Success,
    WeakCentering,
    StrongCentering,
    LimitAssumption,
    WeakLimitAssumption,
    Uniformity,
    Uniqueness,
    RationalMonotonicity,
    Reflexivity,
    Transitivity,
    StronglyConnected,
    OrderWeakCentering,
    OrderStrongCentering,
    StrongLimitAssumption,
    GloballyConstant,
    LocallyNonDecreasing,
    LocallyNonIncreasing,
    LocallyConstant,
}

impl Condition {
    pub const SELECTION: [Condition; 8] = [
        Condition::Success,
        Condition::WeakCentering,
        Condition::StrongCentering,
        Condition::LimitAssumption,
        Condition::WeakLimitAssumption,
        Condition::Uniformity,
        Condition::Uniqueness,
        Condition::RationalMonotonicity,
    ];

    pub const ORDERING: [Condition; 6] = [
        Condition::Reflexivity,
        Condition::Transitivity,
        Condition::StronglyConnected,
        Condition::OrderWeakCentering,
        Condition::OrderStrongCentering,
        Condition::StrongLimitAssumption,
    ];

    pub const DOMAIN: [Condition; 4] = [
        Condition::GloballyConstant,
        Condition::LocallyNonDecreasing,
        Condition::LocallyNonIncreasing,
        Condition::LocallyConstant,
    ];

    /// Success, Weak Centering, LA, Uniformity, Uniqueness.
    pub const STALNAKERIAN: [Condition; 5] = [
        Condition::Success,
        Condition::WeakCentering,
        Condition::LimitAssumption,
        Condition::Uniformity,
        Condition::Uniqueness,
    ];

    /// The Stalnakerian conditions without LA.
    pub const WEAKLY_STALNAKERIAN: [Condition; 4] =
        [Condition::Success, Condition::WeakCentering, Condition::Uniformity, Condition::Uniqueness];

    /// Conditions 1–5 on orders; Stalnakerian orders add SLA.
    pub const LEWISIAN: [Condition; 5] = [
        Condition::Reflexivity,
        Condition::Transitivity,
        Condition::StronglyConnected,
        Condition::OrderWeakCentering,
        Condition::OrderStrongCentering,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Condition::Success => "Success",
            Condition::WeakCentering | Condition::OrderWeakCentering => "WeakCentering",
            Condition::StrongCentering | Condition::OrderStrongCentering => "StrongCentering",
            Condition::LimitAssumption => "LA",
            Condition::WeakLimitAssumption => "WLA",
            Condition::Uniformity => "Uniformity",
            Condition::Uniqueness => "Uniqueness",
            Condition::RationalMonotonicity => "RationalMonotonicity",
            Condition::Reflexivity => "Reflexivity",
            Condition::Transitivity => "Transitivity",
            Condition::StronglyConnected => "StronglyConnected",
            Condition::StrongLimitAssumption => "SLA",
            Condition::GloballyConstant => "GloballyConstant",
            Condition::LocallyNonDecreasing => "LocallyNonDecreasing",
            Condition::LocallyNonIncreasing => "LocallyNonIncreasing",
            Condition::LocallyConstant => "LocallyConstant",
        }
    }

    pub fn is_selection(self) -> bool {
        Condition::SELECTION.contains(&self)
    }

    pub fn is_ordering(self) -> bool {
        Condition::ORDERING.contains(&self)
    }

    pub fn is_domain(self) -> bool {
        Condition::DOMAIN.contains(&self)
    }
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Parses selection and domain condition names (selection readings win
/// for the shared centering names).
impl FromStr for Condition {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let all = Condition::SELECTION.iter().chain(&Condition::DOMAIN).chain(&Condition::ORDERING);
        all.copied()
            .find(|c| c.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown frame condition `{s}`"))
    }
}

impl Serialize for Condition {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

/// A violating tuple. Which fields are used depends on the condition:
/// selection conditions use `world` and `p` (and `q` for the two-set
/// conditions); order conditions use `world`, `points` (the worlds `x, y,
/// z` of the condition) and `p` for SLA's set `S`; domain conditions use
/// `world`, `points = [v]` for the accessible world, and `element`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Witness {
    pub world: usize,
    pub p: Option<WorldSet>,
    pub q: Option<WorldSet>,
    pub points: Vec<usize>,
    pub element: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub holds: bool,
    pub witness: Option<Witness>,
}

impl Verdict {
    fn from_witness(w: Option<Witness>) -> Verdict {
        Verdict { holds: w.is_none(), witness: w }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FrameReport {
    pub verdicts: BTreeMap<Condition, Verdict>,
}

impl FrameReport {
    pub fn holds(&self, c: Condition) -> Option<bool> {
        self.verdicts.get(&c).map(|v| v.holds)
    }

    fn all(&self, conds: &[Condition]) -> Option<bool> {
        conds.iter().map(|c| self.holds(*c)).collect::<Option<Vec<bool>>>().map(|v| v.into_iter().all(|b| b))
    }

    /// Defined when the selection conditions were checked.
    pub fn stalnakerian(&self) -> Option<bool> {
        if self.holds(Condition::Success).is_some() {
            self.all(&Condition::STALNAKERIAN)
        } else {
            self.all(&[Condition::LEWISIAN.as_slice(), &[Condition::StrongLimitAssumption]].concat())
        }
    }

    pub fn weakly_stalnakerian(&self) -> Option<bool> {
        self.all(&Condition::WEAKLY_STALNAKERIAN)
    }

    pub fn lewisian(&self) -> Option<bool> {
        self.all(&Condition::LEWISIAN)
    }

    pub fn merge(mut self, other: FrameReport) -> FrameReport {
        self.verdicts.extend(other.verdicts);
        self
    }

    /// JSON rendering with world and element names from `base`.
    pub fn to_json(&self, base: &FrameBase) -> serde_json::Value {
        let mut conditions = serde_json::Map::new();
        for (c, v) in &self.verdicts {
            let section = if c.is_selection() {
                "selection"
            } else if c.is_ordering() {
                "ordering"
            } else {
                "domain"
            };
            let entry = conditions.entry(section).or_insert_with(|| serde_json::json!({}));
            let mut obj = serde_json::json!({ "holds": v.holds });
            if let Some(w) = &v.witness {
                obj["witness"] = witness_json(w, base);
            }
            entry[c.name()] = obj;
        }
        let mut out = serde_json::json!({ "conditions": conditions });
        if let Some(b) = self.stalnakerian() {
            out["Stalnakerian"] = b.into();
        }
        if let Some(b) = self.weakly_stalnakerian() {
            out["weaklyStalnakerian"] = b.into();
        }
        if let Some(b) = self.lewisian() {
            out["Lewisian"] = b.into();
        }
        out
    }
}

pub fn witness_json(w: &Witness, base: &FrameBase) -> serde_json::Value {
    let mut obj = serde_json::json!({ "w": base.world_name(w.world) });
    if let Some(p) = w.p {
        obj["P"] = base.world_set_names(p).into();
    }
    if let Some(q) = w.q {
        obj["Q"] = base.world_set_names(q).into();
    }
    if !w.points.is_empty() {
        obj["points"] = w.points.iter().map(|&x| base.world_name(x).to_string()).collect::<Vec<_>>().into();
    }
    if let Some(e) = w.element {
        obj["element"] = base.elem_name(e).into();
    }
    obj
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PropsError {
    #[error("resource guard: selection properties are checked up to {limit} worlds, frame has {worlds}")]
    TooManyWorlds { worlds: usize, limit: usize },
}

/// World ceiling for the exhaustive selection and order checks.
pub const DEFAULT_MAX_WORLDS: usize = 12;

/// A violating `(P, Q)` of a selection condition on one world's slice
/// `slice[P] = f(P, w)`, with `r_w = R(w)`.
pub fn slice_violation(c: Condition, w: usize, r_w: WorldSet, slice: &[WorldSet]) -> Option<(WorldSet, Option<WorldSet>)> {
    let subsets = || (0..slice.len() as u64).map(BitSet);
    let f = |p: BitSet| slice[p.0 as usize];
    match c {
        Condition::Success => subsets().find(|&p| !f(p).is_subset(p)).map(|p| (p, None)),
        Condition::WeakCentering => subsets().find(|&p| p.contains(w) && !f(p).contains(w)).map(|p| (p, None)),
        Condition::StrongCentering => {
            subsets().find(|&p| p.contains(w) && f(p) != BitSet::singleton(w)).map(|p| (p, None))
        }
        Condition::LimitAssumption => subsets().find(|&p| f(p).is_empty() && p.intersects(r_w)).map(|p| (p, None)),
        Condition::WeakLimitAssumption => {
            let union = slice.iter().fold(BitSet::EMPTY, |a, &b| a | b);
            let p = subsets().find(|&p| f(p).is_empty() && p.intersects(union))?;
            let q = subsets().find(|&q| p.intersects(f(q))).expect("union is covered by some slice entry");
            Some((p, Some(q)))
        }
        Condition::Uniformity => {
            for p in subsets() {
                let fp = f(p);
                for q in subsets() {
                    let fq = f(q);
                    if fp.is_subset(q) && fq.is_subset(p) && fp != fq {
                        return Some((p, Some(q)));
                    }
                }
            }
            None
        }
        Condition::Uniqueness => subsets().find(|&p| f(p).len() > 1).map(|p| (p, None)),
        Condition::RationalMonotonicity => {
            for q in subsets() {
                let fq = f(q);
                for p in q.subsets() {
                    if fq.intersects(p) && f(p) != fq & p {
                        return Some((p, Some(q)));
                    }
                }
            }
            None
        }
        _ => None,
    }
}

/// Checks the eight selection conditions.
pub fn check_selection_props(frame: &SelectionFrame) -> Result<FrameReport, PropsError> {
    check_selection_props_limited(frame, DEFAULT_MAX_WORLDS)
}

pub fn check_selection_props_limited(frame: &SelectionFrame, max_worlds: usize) -> Result<FrameReport, PropsError> {
    let n = frame.base.n_worlds();
    if n > max_worlds.min(crate::semantics::DENSE_MAX_WORLDS) {
        return Err(PropsError::TooManyWorlds { worlds: n, limit: max_worlds });
    }
    let slices: Vec<Vec<WorldSet>> = (0..n).map(|w| frame.table().slice(w)).collect();
    let mut report = FrameReport::default();
    for c in Condition::SELECTION {
        let witness = (0..n).find_map(|w| {
            slice_violation(c, w, frame.base.access(w), &slices[w])
                .map(|(p, q)| Witness { world: w, p: Some(p), q, ..Witness::default() })
        });
        report.verdicts.insert(c, Verdict::from_witness(witness));
    }
    Ok(report)
}

fn order_violation(c: Condition, o: &OrderingFrame, w: usize) -> Option<Witness> {
    let r = o.base.access(w);
    let at = |points: Vec<usize>| Some(Witness { world: w, points, ..Witness::default() });
    match c {
        Condition::Reflexivity => (!r.contains(w)).then(|| Witness { world: w, ..Witness::default() }),
        Condition::Transitivity => {
            for x in r.iter() {
                for y in o.above(w, x).iter() {
                    for z in o.above(w, y).iter() {
                        if !o.le(w, x, z) {
                            return at(vec![x, y, z]);
                        }
                    }
                }
            }
            None
        }
        Condition::StronglyConnected => {
            for x in r.iter() {
                for y in r.iter() {
                    if !o.le(w, x, y) && !o.le(w, y, x) {
                        return at(vec![x, y]);
                    }
                }
            }
            None
        }
        Condition::OrderWeakCentering => r.iter().find(|&x| !o.le(w, w, x)).and_then(|x| at(vec![x])),
        Condition::OrderStrongCentering => o.below(w, w).iter().find(|&x| x != w).and_then(|x| at(vec![x])),
        Condition::StrongLimitAssumption => {
            // S∩R(w) = ∅, or some x ∈ S∩R(w) has no other S-world below it.
            for s in o.base.all_worlds().subsets() {
                let sr = s & r;
                if sr.is_empty() {
                    continue;
                }
                if !sr.iter().any(|x| (o.below(w, x) & s).is_subset(BitSet::singleton(x))) {
                    return Some(Witness { world: w, p: Some(s), ..Witness::default() });
                }
            }
            None
        }
        _ => None,
    }
}

/// Checks the six order conditions.
pub fn check_ordering_props(frame: &OrderingFrame) -> Result<FrameReport, PropsError> {
    let n = frame.base.n_worlds();
    if n > crate::semantics::DENSE_MAX_WORLDS {
        return Err(PropsError::TooManyWorlds { worlds: n, limit: crate::semantics::DENSE_MAX_WORLDS });
    }
    let mut report = FrameReport::default();
    for c in Condition::ORDERING {
        let witness = (0..n).find_map(|w| order_violation(c, frame, w));
        report.verdicts.insert(c, Verdict::from_witness(witness));
    }
    Ok(report)
}

fn domain_violation(c: Condition, base: &FrameBase) -> Option<Witness> {
    let n = base.n_worlds();
    let all = BitSet::full(base.n_domain());
    // e ∈ d(a) \ d(b) for some a R-related to b
    let shrink = |forward: bool| {
        for w in 0..n {
            for v in base.access(w).iter() {
                let (from, to) = if forward { (w, v) } else { (v, w) };
                if let Some(e) = (base.local(from) - base.local(to)).first() {
                    return Some(Witness { world: w, points: vec![v], element: Some(e), ..Witness::default() });
                }
            }
        }
        None
    };
    match c {
        Condition::GloballyConstant => (0..n).find_map(|w| {
            (all - base.local(w)).first().map(|e| Witness { world: w, element: Some(e), ..Witness::default() })
        }),
        Condition::LocallyNonDecreasing => shrink(true),
        Condition::LocallyNonIncreasing => shrink(false),
        Condition::LocallyConstant => shrink(true).or_else(|| shrink(false)),
        _ => None,
    }
}

/// Checks the four domain conditions.
pub fn check_domain_props(frame: &Frame) -> FrameReport {
    check_domain_props_base(frame.base())
}

pub fn check_domain_props_base(base: &FrameBase) -> FrameReport {
    let mut report = FrameReport::default();
    for c in Condition::DOMAIN {
        report.verdicts.insert(c, Verdict::from_witness(domain_violation(c, base)));
    }
    report
}

/// Selection or order conditions (by frame kind) plus domain conditions.
/// Quasi-selection frames report on their embedded order.
pub fn check_frame(frame: &Frame) -> Result<FrameReport, PropsError> {
    let kind = match frame {
        Frame::Selection(s) => check_selection_props(s)?,
        Frame::Ordering(o) => check_ordering_props(o)?,
        Frame::Quasi(q) => check_ordering_props(&q.order)?,
    };
    Ok(kind.merge(check_domain_props(frame)))
}

/// Instances with unary `A`, `B`, `C` applied to one variable: each fails
/// on a frame exactly when one of the weakly Stalnakerian or global
/// constancy conditions fails.
pub fn correspondence_instances() -> Vec<(&'static str, Formula)> {
    let (x, y) = (Var(0), Var(1));
    let atom = |name: &str, v: Var| Formula::Atom(Predicate::new(name, 1), vec![v]);
    let (a, b, c) = (atom("A", x), atom("B", x), atom("C", x));
    vec![
        ("19", Formula::cond(a.clone(), a.clone())),
        ("21", Formula::implies(Formula::cond(a.clone(), b.clone()), Formula::implies(a.clone(), b.clone()))),
        ("22", build_cem(a.clone(), b.clone())),
        (
            "20",
            Formula::implies(
                Formula::and_all([
                    Formula::cond(a.clone(), b.clone()),
                    Formula::cond(b.clone(), a.clone()),
                    Formula::cond(a.clone(), c.clone()),
                ]),
                Formula::cond(b.clone(), c),
            ),
        ),
        ("23", Formula::implies(Formula::forall(x, a.clone()), atom("A", y))),
        (
            "24",
            Formula::implies(
                Formula::forall(y, Formula::cond(a.clone(), atom("B", y))),
                Formula::cond(a, Formula::forall(y, atom("B", y))),
            ),
        ),
    ]
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Correspondence {
    pub instance_valid: bool,
    pub properties_hold: bool,
    pub agree: bool,
    /// Axiom numbers of the instances that fail on the frame.
    pub failing_instances: Vec<&'static str>,
}

/// Compares frame validity of [`correspondence_instances`] with
/// "weakly Stalnakerian and globally constant".
pub fn qc2_correspondence_check(frame: &SelectionFrame) -> Result<Correspondence, EvalError> {
    let as_frame = Frame::Selection(frame.clone());
    let limits = FrameValidLimits::default();
    let mut failing_instances = Vec::new();
    for (name, f) in correspondence_instances() {
        if frame_valid(&as_frame, &f, &limits)?.is_some() {
            failing_instances.push(name);
        }
    }
    let report = check_selection_props(frame)
        .map_err(|e| EvalError::ResourceGuard(e.to_string()))?
        .merge(check_domain_props_base(&frame.base));
    let properties_hold =
        report.weakly_stalnakerian() == Some(true) && report.holds(Condition::GloballyConstant) == Some(true);
    let instance_valid = failing_instances.is_empty();
    Ok(Correspondence { instance_valid, properties_hold, agree: instance_valid == properties_hold, failing_instances })
}

/// Re-checks `witness` against the definition of `c` directly. True when
/// the witness does exhibit a violation.
pub fn witness_violates(frame: &Frame, c: Condition, witness: &Witness) -> bool {
    let base = frame.base();
    let w = witness.world;
    if c.is_domain() {
        let d = |x: usize| base.local(x);
        return match c {
            Condition::GloballyConstant => witness.element.is_some_and(|e| !d(w).contains(e)),
            Condition::LocallyNonDecreasing => match (witness.points.first(), witness.element) {
                (Some(&v), Some(e)) => base.access(w).contains(v) && d(w).contains(e) && !d(v).contains(e),
                _ => false,
            },
            Condition::LocallyNonIncreasing => match (witness.points.first(), witness.element) {
                (Some(&v), Some(e)) => base.access(w).contains(v) && d(v).contains(e) && !d(w).contains(e),
                _ => false,
            },
            Condition::LocallyConstant => {
                witness_violates(frame, Condition::LocallyNonDecreasing, witness)
                    || witness_violates(frame, Condition::LocallyNonIncreasing, witness)
            }
            _ => unreachable!(),
        };
    }
    if c.is_selection() {
        let Frame::Selection(s) = frame else { return false };
        let Some(p) = witness.p else { return false };
        let f = |x: WorldSet| s.f(x, w);
        return match c {
            Condition::Success => !f(p).is_subset(p),
            Condition::WeakCentering => p.contains(w) && !f(p).contains(w),
            Condition::StrongCentering => p.contains(w) && f(p) != BitSet::singleton(w),
            Condition::LimitAssumption => f(p).is_empty() && p.intersects(base.access(w)),
            Condition::WeakLimitAssumption => witness.q.is_some_and(|q| f(p).is_empty() && p.intersects(f(q))),
            Condition::Uniformity => {
                witness.q.is_some_and(|q| f(p).is_subset(q) && f(q).is_subset(p) && f(p) != f(q))
            }
            Condition::Uniqueness => f(p).len() > 1,
            Condition::RationalMonotonicity => {
                witness.q.is_some_and(|q| p.is_subset(q) && f(q).intersects(p) && f(p) != f(q) & p)
            }
            _ => unreachable!(),
        };
    }
    let o = match frame {
        Frame::Ordering(o) => o,
        Frame::Quasi(q) => &q.order,
        Frame::Selection(_) => return false,
    };
    let r = base.access(w);
    let pts = &witness.points;
    match c {
        Condition::Reflexivity => !r.contains(w),
        Condition::Transitivity => {
            pts.len() == 3 && o.le(w, pts[0], pts[1]) && o.le(w, pts[1], pts[2]) && !o.le(w, pts[0], pts[2])
        }
        Condition::StronglyConnected => {
            pts.len() == 2 && r.contains(pts[0]) && r.contains(pts[1]) && !o.le(w, pts[0], pts[1]) && !o.le(w, pts[1], pts[0])
        }
        Condition::OrderWeakCentering => pts.len() == 1 && r.contains(pts[0]) && !o.le(w, w, pts[0]),
        Condition::OrderStrongCentering => pts.len() == 1 && o.le(w, pts[0], w) && pts[0] != w,
        Condition::StrongLimitAssumption => witness.p.is_some_and(|s| {
            let sr = s & r;
            !sr.is_empty() && sr.iter().all(|x| s.iter().any(|y| y != x && o.le(w, y, x)))
        }),
        _ => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semantics::{FrameBase, SelectionDefault, SelectionTable};
    use std::collections::HashMap;

    fn remark_frame() -> SelectionFrame {
        let base = FrameBase::new(
            vec!["1".into(), "2".into()],
            vec![BitSet(0b11), BitSet(0b11)],
            vec!["a".into()],
            vec![BitSet(1), BitSet(1)],
        )
        .unwrap();
        SelectionFrame::new(base, SelectionTable::sparse(2, HashMap::new(), SelectionDefault::Centering)).unwrap()
    }

    #[test]
    fn remark_frame_verdicts() {
        let r = check_selection_props(&remark_frame()).unwrap();
        assert_eq!(r.weakly_stalnakerian(), Some(true));
        assert_eq!(r.stalnakerian(), Some(false));
        let la = &r.verdicts[&Condition::LimitAssumption];
        let w = la.witness.as_ref().unwrap();
        assert_eq!((w.world, w.p), (0, Some(BitSet(0b10))));
    }

    #[test]
    fn single_world_frame_is_stalnakerian() {
        let base = FrameBase::anonymous(vec![BitSet(1)], 1, vec![BitSet(1)]).unwrap();
        let f = SelectionFrame::new(base, SelectionTable::dense(1, |p, _| p & BitSet(1))).unwrap();
        let r = check_selection_props(&f).unwrap();
        assert_eq!(r.stalnakerian(), Some(true));
        assert!(r.holds(Condition::StrongCentering).unwrap());
    }

    #[test]
    fn domain_examples() {
        // d(w)={a}, d(v)={a,b}, wRv
        let base = FrameBase::anonymous(vec![BitSet(0b10), BitSet(0b10)], 2, vec![BitSet(0b01), BitSet(0b11)]).unwrap();
        let r = check_domain_props_base(&base);
        assert_eq!(r.holds(Condition::LocallyNonDecreasing), Some(true));
        assert_eq!(r.holds(Condition::LocallyNonIncreasing), Some(false));

        let base = FrameBase::anonymous(vec![BitSet(0b11), BitSet(0b11)], 2, vec![BitSet(0b01), BitSet(0b01)]).unwrap();
        let r = check_domain_props_base(&base);
        assert_eq!(r.holds(Condition::LocallyConstant), Some(true));
        assert_eq!(r.holds(Condition::GloballyConstant), Some(false));
    }

    #[test]
    fn order_without_reflexive_pairs_is_not_connected() {
        let base = FrameBase::anonymous(vec![BitSet(0b11), BitSet(0b11)], 1, vec![BitSet(1), BitSet(1)]).unwrap();
        let o = OrderingFrame::new(base, &[vec![(0, 0), (0, 1)], vec![(1, 1), (1, 0), (0, 0)]]).unwrap();
        let r = check_ordering_props(&o).unwrap();
        let v = &r.verdicts[&Condition::OrderWeakCentering];
        assert!(v.holds);
        let v = &r.verdicts[&Condition::Transitivity];
        assert!(v.holds);
        let v = &r.verdicts[&Condition::StronglyConnected];
        let w = v.witness.clone().unwrap();
        assert!(witness_violates(&Frame::Ordering(o), Condition::StronglyConnected, &w));
    }

    #[test]
    fn correspondence_on_remark_frame() {
        let c = qc2_correspondence_check(&remark_frame()).unwrap();
        assert!(c.instance_valid && c.properties_hold && c.agree);
    }

    #[test]
    fn two_element_selection_breaks_cem() {
        let base = FrameBase::anonymous(vec![BitSet(0b11), BitSet(0b11)], 1, vec![BitSet(1), BitSet(1)]).unwrap();
        // f(W, 1) = W, otherwise centred
        let f = SelectionFrame::new(
            base,
            SelectionTable::dense(2, |p, w| if p == BitSet(0b11) && w == 1 { BitSet(0b11) } else { p & BitSet::singleton(w) }),
        )
        .unwrap();
        let c = qc2_correspondence_check(&f).unwrap();
        assert!(c.failing_instances.contains(&"22"));
        assert!(!c.properties_hold && c.agree);
    }

    #[test]
    fn impossibilia_break_instance_23() {
        let base = FrameBase::anonymous(vec![BitSet(0b11), BitSet(0b11)], 2, vec![BitSet(0b01), BitSet(0b01)]).unwrap();
        let f = SelectionFrame::new(base, SelectionTable::sparse(2, HashMap::new(), SelectionDefault::Centering)).unwrap();
        let c = qc2_correspondence_check(&f).unwrap();
        assert_eq!(c.failing_instances, vec!["23"]);
        assert!(c.agree);
    }
}
