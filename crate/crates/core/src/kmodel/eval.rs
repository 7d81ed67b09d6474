use std::collections::{BTreeSet, HashMap};

use super::monadic::TypeMemo;
use super::worldset::SymbolicWorldSet;
use super::{is_fragment_predicate, KAssignment, KError, KWorld};
use crate::syntax::{Formula, Var};

/// `A > B` at `−∞`, where `⪯_{−∞}` is `≤` with `−∞` least.
pub fn cond_at_origin(a: &SymbolicWorldSet, b: &SymbolicWorldSet) -> bool {
    if a.minus_inf() {
        return b.minus_inf();
    }
    if a.no_integers() {
        return true;
    }
    match a.least_integer() {
        Some(m) => b.contains(KWorld::Int(m)),
        // φ-worlds are eventually all ψ-worlds going down.
        None => !a.difference(b).has_ray(),
    }
}

/// `[A > B]` in K: material at the integer worlds, the ordering clause at
/// `−∞`.
pub fn cond_denotation(a: &SymbolicWorldSet, b: &SymbolicWorldSet) -> SymbolicWorldSet {
    let material = a.complement().union(b).intersection(&SymbolicWorldSet::integers());
    if cond_at_origin(a, b) {
        material.union(&SymbolicWorldSet::origin())
    } else {
        material
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct KOptions {
    /// Replace atoms of predicates other than `F/1` by `⊥` (their
    /// extension in K is empty) instead of rejecting them.
    pub drop_other_predicates: bool,
}

/// Evaluator for K with caches for normal forms and denotations. Not
/// shared between threads; sweeps give each worker its own.
pub struct KEvaluator {
    opts: KOptions,
    types: HashMap<Formula, TypeMemo>,
    denotations: HashMap<(Formula, Vec<i64>), SymbolicWorldSet>,
    origin: HashMap<(Formula, Vec<i64>), bool>,
}

/// Entries kept per cache before it is flushed.
const CACHE_LIMIT: usize = 200_000;

impl Default for KEvaluator {
    fn default() -> Self {
        Self::new()
    }
}

impl KEvaluator {
    pub fn new() -> Self {
        Self::with_options(KOptions::default())
    }

    pub fn with_options(opts: KOptions) -> Self {
        KEvaluator { opts, types: HashMap::new(), denotations: HashMap::new(), origin: HashMap::new() }
    }

    /// Brings `f` into the fragment the engine works on: `E` is constantly
    /// true in K, and other predicates are empty.
    fn prepare(&self, f: &Formula, g: &KAssignment) -> Result<Formula, KError> {
        let mut bad = None;
        f.visit(&mut |h| {
            if let Formula::Atom(p, _) = h {
                if bad.is_none() && !is_fragment_predicate(p) {
                    bad = Some(p.clone());
                }
            }
        });
        let f = match bad {
            Some(p) if !self.opts.drop_other_predicates => return Err(KError::NonFragment(p)),
            Some(_) => f.replace_other_atoms_with_bot(&is_fragment_predicate),
            None => f.clone(),
        };
        for v in f.free_vars() {
            match g.get(v) {
                None => return Err(KError::Uncovered(v)),
                Some(k) if k > -1 => return Err(KError::OutOfRange(v, k)),
                Some(_) => {}
            }
        }
        Ok(f.existence_to_top())
    }

    pub fn eval(&mut self, f: &Formula, w: KWorld, g: &KAssignment) -> Result<bool, KError> {
        if let KWorld::Int(k) = w {
            if k > -1 {
                return Err(KError::NoSuchWorld(k));
            }
        }
        let f = self.prepare(f, g)?;
        let r = match w {
            KWorld::Int(k) => Ok(self.eval_int(&f, k, g)),
            KWorld::MinusInf => self.eval_origin(&f, g),
        };
        self.trim();
        r
    }

    pub fn denote(&mut self, f: &Formula, g: &KAssignment) -> Result<SymbolicWorldSet, KError> {
        let f = self.prepare(f, g)?;
        let r = self.denote_in(&f, g);
        self.trim();
        r
    }

    fn trim(&mut self) {
        if self.types.len() > CACHE_LIMIT {
            self.types.clear();
        }
        if self.denotations.len() > CACHE_LIMIT {
            self.denotations.clear();
        }
        if self.origin.len() > CACHE_LIMIT {
            self.origin.clear();
        }
    }

    fn memo(&mut self, f: &Formula) -> &mut TypeMemo {
        self.types.entry(f.clone()).or_insert_with(|| TypeMemo::new(f.material_reduct(), f.free_vars().into_iter().collect()))
    }

    /// Truth at an integer world: there `>` is material, and the material
    /// reduct is a monadic formula about the structure of world `k`.
    fn eval_int(&mut self, f: &Formula, k: i64, g: &KAssignment) -> bool {
        let m = self.memo(f);
        let vals = values(&m.sig.named, g);
        let t = m.sig.type_at(&vals, Some(k));
        m.holds(t)
    }

    /// Integer part by scanning the worlds where the type can change: near
    /// each named value and near `−1`. Between and below them the type is
    /// constant.
    fn integer_part(&mut self, f: &Formula, g: &KAssignment) -> SymbolicWorldSet {
        let m = self.memo(f);
        let vals = values(&m.sig.named, g);
        let distinct: BTreeSet<i64> = vals.iter().copied().collect();
        let reach = (m.sig.cap + distinct.len() + 2) as i64;
        let mut points = BTreeSet::new();
        for &v in distinct.iter().chain(std::iter::once(&0)) {
            for k in (v - reach).max(i64::MIN / 2)..=v.min(-1) {
                points.insert(k);
            }
        }
        let points: Vec<i64> = points.into_iter().rev().collect();
        let mut intervals = Vec::new();
        let mut push = |lo: i64, hi: i64, on: bool| {
            if on {
                intervals.push((lo, hi));
            }
        };
        let mut ray = None;
        for (i, &k) in points.iter().enumerate() {
            push(k, k, m.holds(m.sig.type_at(&vals, Some(k))));
            let below = points.get(i + 1).copied();
            match below {
                Some(next) if next < k - 1 => {
                    let on = m.holds(m.sig.type_at(&vals, Some(k - 1)));
                    push(next + 1, k - 1, on);
                }
                Some(_) => {}
                None => {
                    if m.holds(m.sig.type_at(&vals, Some(k - 1))) {
                        ray = Some(k - 1);
                    }
                }
            }
        }
        SymbolicWorldSet::new(false, ray, intervals)
    }

    fn denote_in(&mut self, f: &Formula, g: &KAssignment) -> Result<SymbolicWorldSet, KError> {
        let key = (f.clone(), values(&f.free_vars().into_iter().collect::<Vec<_>>(), g));
        if let Some(s) = self.denotations.get(&key) {
            return Ok(s.clone());
        }
        let ints = self.integer_part(f, g);
        let origin = self.eval_origin(f, g)?;
        let s = ints.union(&if origin { SymbolicWorldSet::origin() } else { SymbolicWorldSet::empty() });
        self.denotations.insert(key, s.clone());
        Ok(s)
    }

    /// Truth at `−∞`. No individual is in `F` there; `>` follows the
    /// ordering clause on the denotations of its arguments.
    fn eval_origin(&mut self, f: &Formula, g: &KAssignment) -> Result<bool, KError> {
        if !f.has_conditional() {
            let m = self.memo(f);
            let vals = values(&m.sig.named, g);
            let t = m.sig.type_at(&vals, None);
            return Ok(m.holds(t));
        }
        match f {
            Formula::Not(a) => Ok(!self.eval_origin(a, g)?),
            Formula::Implies(a, b) => Ok(!self.eval_origin(a, g)? || self.eval_origin(b, g)?),
            Formula::Cond(a, b) => {
                let da = self.denote_in(a, g)?;
                let db = self.denote_in(b, g)?;
                Ok(cond_at_origin(&da, &db))
            }
            Formula::Forall(x, body) => {
                if !body.is_free(*x) {
                    return self.eval_origin(body, g);
                }
                let key = (f.clone(), values(&f.free_vars().into_iter().collect::<Vec<_>>(), g));
                if let Some(&b) = self.origin.get(&key) {
                    return Ok(b);
                }
                let b = self.forall_origin(f, *x, body, g)?;
                self.origin.insert(key, b);
                Ok(b)
            }
            _ => unreachable!("atoms have no conditional"),
        }
    }

    /// `∀x ψ` at `−∞` over a finite test set of values for `x`: the named
    /// values, everything within `|ψ|+1` of them or of `−1`, and a deep
    /// block that must be constant.
    fn forall_origin(&mut self, f: &Formula, x: Var, body: &Formula, g: &KAssignment) -> Result<bool, KError> {
        let named: BTreeSet<i64> = f.free_vars().into_iter().filter_map(|v| g.get(v)).collect();
        let s = f.size() as i64;
        let mut near = BTreeSet::new();
        for &v in named.iter().chain(std::iter::once(&-1)) {
            for d in -(s + 1)..=(s + 1) {
                if v + d <= -1 {
                    near.insert(v + d);
                }
            }
        }
        let top = named.first().copied().unwrap_or(-1) - s - 2;
        let mut deep = Vec::with_capacity(s as usize + 1);
        for a in (top - s..=top).rev() {
            deep.push(self.eval_origin(body, &g.clone().with(x, a))?);
        }
        if deep.iter().any(|&b| b != deep[0]) {
            return Err(KError::Stabilization { formula: f.to_string(), assignment: describe(g) });
        }
        if !deep[0] {
            return Ok(false);
        }
        for a in near {
            if !self.eval_origin(body, &g.clone().with(x, a))? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

fn values(vars: &[Var], g: &KAssignment) -> Vec<i64> {
    vars.iter().map(|&v| g.get(v).expect("assignment covers the free variables")).collect()
}

fn describe(g: &KAssignment) -> String {
    g.0.iter().map(|(v, k)| format!("{v}={k}")).collect::<Vec<_>>().join(", ")
}

/// Truth of `f` at `w` of K under `g`.
pub fn eval_k(f: &Formula, w: KWorld, g: &KAssignment) -> Result<bool, KError> {
    KEvaluator::new().eval(f, w, g)
}

/// `{w : K, w, g ⊩ f}`
pub fn denote_k(f: &Formula, g: &KAssignment) -> Result<SymbolicWorldSet, KError> {
    KEvaluator::new().denote(f, g)
}
