use std::collections::{BTreeMap, BTreeSet};

use super::bitset::{BitSet, WorldSet};
use super::frame::{tuple_code, Frame, Interpretation, Model, PredTable};
use crate::syntax::{Formula, LanguageError, Predicate, Var};

/// A finite-support variable assignment. Values are domain indices for
/// finite models and integers for K.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Assignment<T = usize>(pub BTreeMap<Var, T>);

impl<T: Copy> Assignment<T> {
    pub fn new() -> Self {
        Assignment(BTreeMap::new())
    }

    pub fn get(&self, v: Var) -> Option<T> {
        self.0.get(&v).copied()
    }

    pub fn set(&mut self, v: Var, value: T) {
        self.0.insert(v, value);
    }

    pub fn with(mut self, v: Var, value: T) -> Self {
        self.set(v, value);
        self
    }

    /// First free variable of `f` that is not bound here.
    pub fn missing(&self, f: &Formula) -> Option<Var> {
        f.free_vars().into_iter().find(|v| !self.0.contains_key(v))
    }
}

impl<T: Copy> FromIterator<(Var, T)> for Assignment<T> {
    fn from_iter<I: IntoIterator<Item = (Var, T)>>(iter: I) -> Self {
        Assignment(iter.into_iter().collect())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EvalError {
    #[error("variable {0} is free in the formula but not covered by the assignment")]
    Uncovered(Var),
    #[error(transparent)]
    Language(#[from] LanguageError),
    #[error("world index {0} is out of range")]
    NoSuchWorld(usize),
    #[error("assignment maps {0} to an element outside the domain")]
    BadValue(Var),
    #[error("resource guard: {0}")]
    ResourceGuard(String),
}

/// Set-at-a-time evaluator: computes `[φ]^g = { w : M, w, g ⊩ φ }`.
pub struct Evaluator<'m> {
    model: &'m Model,
    full: WorldSet,
    n_domain: usize,
    env: Vec<(Var, usize)>,
    /// `{ w : e ∉ d(w) }` per element `e`.
    outside: Vec<WorldSet>,
    /// `{ w : d(w) = ∅ }`
    empty_local: WorldSet,
}

impl<'m> Evaluator<'m> {
    pub fn new(model: &'m Model) -> Self {
        let base = model.base();
        let n = base.n_worlds();
        let outside = (0..base.n_domain())
            .map(|e| BitSet::from_iter_indices((0..n).filter(|&w| !base.local(w).contains(e))))
            .collect();
        let empty_local = BitSet::from_iter_indices((0..n).filter(|&w| base.local(w).is_empty()));
        Evaluator { model, full: base.all_worlds(), n_domain: base.n_domain(), env: Vec::new(), outside, empty_local }
    }

    /// Checks coverage and language, then denotes.
    pub fn denote_checked(&mut self, f: &Formula, g: &Assignment) -> Result<WorldSet, EvalError> {
        if let Some(lang) = self.model.language {
            f.check_language(lang)?;
        }
        if let Some(v) = g.missing(f) {
            return Err(EvalError::Uncovered(v));
        }
        if let Some((v, _)) = g.0.iter().find(|(_, &e)| e >= self.n_domain) {
            return Err(EvalError::BadValue(*v));
        }
        Ok(self.denote_under(f, g))
    }

    /// Denotation under `g`; `g` must cover the free variables of `f`.
    pub fn denote_under(&mut self, f: &Formula, g: &Assignment) -> WorldSet {
        self.env.clear();
        self.env.extend(g.0.iter().map(|(v, e)| (*v, *e)));
        self.denote(f)
    }

    fn lookup(&self, v: Var) -> usize {
        self.env.iter().rev().find(|(x, _)| *x == v).map(|(_, e)| *e).expect("assignment coverage is checked before evaluation")
    }

    fn denote(&mut self, f: &Formula) -> WorldSet {
        match f {
            Formula::Bot => BitSet::EMPTY,
            Formula::Atom(p, args) => {
                let Some(table) = self.model.interp.table(p) else {
                    return BitSet::EMPTY;
                };
                let code = args.iter().fold(0, |acc, v| acc * self.n_domain + self.lookup(*v));
                BitSet::from_iter_indices(self.full.iter().filter(|&w| table.get_code(w, code)))
            }
            Formula::Eq(a, b) => {
                if self.lookup(*a) == self.lookup(*b) {
                    self.full
                } else {
                    BitSet::EMPTY
                }
            }
            Formula::Existence(a) => self.full - self.outside[self.lookup(*a)],
            Formula::Not(a) => self.full - self.denote(a),
            Formula::Implies(a, b) => (self.full - self.denote(a)) | self.denote(b),
            Formula::Cond(a, b) => {
                let a = self.denote(a);
                let b = self.denote(b);
                let frame = &self.model.frame;
                BitSet::from_iter_indices(self.full.iter().filter(|&w| frame.cond_holds(w, a, b)))
            }
            Formula::Forall(x, body) => {
                if !body.is_free(*x) {
                    return self.denote(body) | self.empty_local;
                }
                let mut out = self.full;
                for e in 0..self.n_domain {
                    self.env.push((*x, e));
                    let b = self.denote(body);
                    self.env.pop();
                    out = out & (b | self.outside[e]);
                    if out.is_empty() {
                        break;
                    }
                }
                out
            }
        }
    }
}

/// `M, w, g ⊩ φ`
pub fn eval(model: &Model, w: usize, g: &Assignment, f: &Formula) -> Result<bool, EvalError> {
    if w >= model.base().n_worlds() {
        return Err(EvalError::NoSuchWorld(w));
    }
    Ok(Evaluator::new(model).denote_checked(f, g)?.contains(w))
}

/// `[φ]^g`
pub fn denote(model: &Model, g: &Assignment, f: &Formula) -> Result<WorldSet, EvalError> {
    Evaluator::new(model).denote_checked(f, g)
}

/// Calls `visit` with every assignment of domain indices `0..n_domain` to
/// `vars`, stopping early when it returns `Some`.
pub fn for_each_assignment<R>(vars: &[Var], n_domain: usize, mut visit: impl FnMut(&Assignment) -> Option<R>) -> Option<R> {
    let mut g: Assignment = vars.iter().map(|v| (*v, 0)).collect();
    if n_domain == 0 && !vars.is_empty() {
        return None;
    }
    loop {
        if let Some(r) = visit(&g) {
            return Some(r);
        }
        let mut i = 0;
        loop {
            if i == vars.len() {
                return None;
            }
            let slot = g.0.get_mut(&vars[i]).expect("initialised above");
            *slot += 1;
            if *slot < n_domain {
                break;
            }
            *slot = 0;
            i += 1;
        }
    }
}

/// A failing point of model validity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub formula: usize,
    pub world: usize,
    pub assignment: Assignment,
}

/// `M ⊩ Γ`: every formula true at every world under every assignment to
/// the free variables of `Γ`. Returns the first failing point.
pub fn model_valid(model: &Model, gamma: &[Formula]) -> Result<Option<Counterexample>, EvalError> {
    if let Some(lang) = model.language {
        for f in gamma {
            f.check_language(lang)?;
        }
    }
    let vars: Vec<Var> = gamma.iter().flat_map(|f| f.free_vars()).collect::<BTreeSet<_>>().into_iter().collect();
    let mut ev = Evaluator::new(model);
    let full = model.base().all_worlds();
    Ok(for_each_assignment(&vars, model.base().n_domain(), |g| {
        gamma.iter().enumerate().find_map(|(i, f)| {
            let d = ev.denote_under(f, g);
            (full - d).first().map(|w| Counterexample { formula: i, world: w, assignment: g.clone() })
        })
    }))
}

/// Ceilings for interpretation enumeration in [`frame_valid`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FrameValidLimits {
    pub max_worlds: usize,
    pub max_domain: usize,
    pub max_arity: usize,
    /// Bound on the number of enumerated interpretation cells, i.e. the
    /// enumeration covers at most `2^max_cells` interpretations per assignment.
    pub max_cells: usize,
}

impl Default for FrameValidLimits {
    fn default() -> Self {
        FrameValidLimits { max_worlds: 5, max_domain: 3, max_arity: 2, max_cells: 24 }
    }
}

/// A model on the frame falsifying the formula.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CounterModel {
    pub interp: Interpretation,
    pub world: usize,
    pub assignment: Assignment,
}

/// For each predicate, which tuple codes can be read under `g`: all of
/// them when some occurrence has a bound argument, else only the tuples
/// of `g`-values at its occurrences.
fn relevant_cells(f: &Formula, g: &Assignment, n_domain: usize) -> BTreeMap<Predicate, Option<BTreeSet<usize>>> {
    fn walk(f: &Formula, g: &Assignment, n_domain: usize, bound: &mut Vec<Var>, out: &mut BTreeMap<Predicate, Option<BTreeSet<usize>>>) {
        match f {
            Formula::Atom(p, args) => {
                let entry = out.entry(p.clone()).or_insert_with(|| Some(BTreeSet::new()));
                if args.iter().any(|v| bound.contains(v)) {
                    *entry = None;
                } else if let Some(codes) = entry {
                    let tuple: Vec<usize> = args.iter().map(|v| g.get(*v).expect("covered")).collect();
                    codes.insert(tuple_code(&tuple, n_domain));
                }
            }
            Formula::Not(a) => walk(a, g, n_domain, bound, out),
            Formula::Implies(a, b) | Formula::Cond(a, b) => {
                walk(a, g, n_domain, bound, out);
                walk(b, g, n_domain, bound, out);
            }
            Formula::Forall(x, a) => {
                bound.push(*x);
                walk(a, g, n_domain, bound, out);
                bound.pop();
            }
            _ => {}
        }
    }
    let mut out = BTreeMap::new();
    walk(f, g, n_domain, &mut Vec::new(), &mut out);
    out
}

/// `F ⊩ φ`: φ true in every model on the frame. Enumerates the
/// interpretations of the predicates of `φ` (restricted to the cells φ can
/// read) and the assignments to its free variables.
pub fn frame_valid(frame: &Frame, f: &Formula, limits: &FrameValidLimits) -> Result<Option<CounterModel>, EvalError> {
    let base = frame.base();
    let (n, nd) = (base.n_worlds(), base.n_domain());
    if n > limits.max_worlds || nd > limits.max_domain {
        return Err(EvalError::ResourceGuard(format!(
            "frame has {n} worlds and {nd} elements; limits are {} and {}",
            limits.max_worlds, limits.max_domain
        )));
    }
    if let Some(p) = f.predicates().iter().find(|p| p.arity() > limits.max_arity) {
        return Err(EvalError::ResourceGuard(format!("predicate {p} exceeds the arity limit {}", limits.max_arity)));
    }
    let vars: Vec<Var> = f.free_vars().into_iter().collect();
    let mut failure = Ok(());
    let found = for_each_assignment(&vars, nd, |g| {
        let relevant = relevant_cells(f, g, nd);
        let mut cells: Vec<(Predicate, usize, usize)> = Vec::new();
        for (p, codes) in &relevant {
            let codes: Vec<usize> = match codes {
                Some(c) => c.iter().copied().collect(),
                None => (0..nd.pow(p.arity() as u32)).collect(),
            };
            for w in 0..n {
                cells.extend(codes.iter().map(|&c| (p.clone(), w, c)));
            }
        }
        if cells.len() > limits.max_cells {
            failure = Err(EvalError::ResourceGuard(format!(
                "{} interpretation cells to enumerate; the limit is {}",
                cells.len(),
                limits.max_cells
            )));
            return Some(None);
        }
        let mut interp = Interpretation::new();
        for p in relevant.keys() {
            interp.insert(p.clone(), PredTable::empty(p.arity(), n, nd));
        }
        let mut model = Model::new(frame.clone(), interp);
        for bits in 0u64..1 << cells.len() {
            for (i, (p, w, c)) in cells.iter().enumerate() {
                model.interp.table_mut(p).expect("inserted").set_code(*w, *c, bits >> i & 1 == 1);
            }
            let d = Evaluator::new(&model).denote_under(f, g);
            if let Some(w) = base.all_worlds().iter().find(|&w| !d.contains(w)) {
                return Some(Some(CounterModel { interp: model.interp.clone(), world: w, assignment: g.clone() }));
            }
        }
        None
    });
    failure?;
    Ok(found.flatten())
}
