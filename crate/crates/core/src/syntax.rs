//! Formula syntax for quantified conditional logic.
//!
//! The core AST has eight node kinds. Everything else (conjunction,
//! disjunction, the biconditional, `⊤`, `∃`, `□`, `◇`) is a constructor
//! that expands into core nodes, so every consumer only ever pattern
//! matches on [`Formula`]'s variants. The `as_*` recognisers undo the
//! expansions for printing and schema matching.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

/// An individual variable. Renders as `x0`, `x1`, ...
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct Var(pub u32);

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x{}", self.0)
    }
}

/// A predicate symbol. Arity 0 predicates are propositional atoms.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Predicate {
    name: Arc<str>,
    arity: usize,
}

impl Predicate {
    pub fn new(name: &str, arity: usize) -> Self {
        Predicate { name: Arc::from(name), arity }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    /// Builds the atom `self(args)`, checking the argument count.
    pub fn apply(&self, args: Vec<Var>) -> Result<Formula, ArityError> {
        if args.len() != self.arity {
            return Err(ArityError { predicate: self.name.to_string(), arity: self.arity, got: args.len() });
        }
        Ok(Formula::Atom(self.clone(), args))
    }
}

impl fmt::Display for Predicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.name, self.arity)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("predicate {predicate} has arity {arity} but was given {got} arguments")]
pub struct ArityError {
    pub predicate: String,
    pub arity: usize,
    pub got: usize,
}

/// The three object languages: plain `L`, `L` with the existence
/// predicate `E`, and `L` with identity.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default, Serialize, Deserialize)]
pub enum Language {
    #[default]
    #[serde(rename = "L")]
    Plain,
    #[serde(rename = "LE")]
    Existence,
    #[serde(rename = "L=")]
    Identity,
}

impl fmt::Display for Language {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Language::Plain => "L",
            Language::Existence => "LE",
            Language::Identity => "L=",
        })
    }
}

impl FromStr for Language {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "L" => Ok(Language::Plain),
            "LE" | "L_E" => Ok(Language::Existence),
            "L=" | "L_=" | "LEq" => Ok(Language::Identity),
            other => Err(format!("unknown language `{other}` (expected L, LE or L=)")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LanguageError {
    #[error("identity `=` is only available in L=, formula is checked against {0}")]
    Identity(Language),
    #[error("the existence predicate E is only available in LE, formula is checked against {0}")]
    Existence(Language),
}

/// Core formula AST.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Formula {
    Bot,
    Atom(Predicate, Vec<Var>),
    Eq(Var, Var),
    /// The designated existence predicate `E(x)` of `LE`.
    Existence(Var),
    Not(Box<Formula>),
    Implies(Box<Formula>, Box<Formula>),
    Cond(Box<Formula>, Box<Formula>),
    Forall(Var, Box<Formula>),
}

/// Size (AST node count) and quantifier rank of a formula.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct Metrics {
    pub size: usize,
    pub quantifier_rank: usize,
}

// Constructors. Derived connectives expand to core nodes.
impl Formula {
    pub fn bot() -> Formula {
        Formula::Bot
    }

    pub fn top() -> Formula {
        Formula::not(Formula::Bot)
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(a: Formula) -> Formula {
        Formula::Not(Box::new(a))
    }

    pub fn implies(a: Formula, b: Formula) -> Formula {
        Formula::Implies(Box::new(a), Box::new(b))
    }

    pub fn cond(a: Formula, b: Formula) -> Formula {
        Formula::Cond(Box::new(a), Box::new(b))
    }

    pub fn forall(x: Var, a: Formula) -> Formula {
        Formula::Forall(x, Box::new(a))
    }

    pub fn eq(x: Var, y: Var) -> Formula {
        Formula::Eq(x, y)
    }

    pub fn exists_pred(x: Var) -> Formula {
        Formula::Existence(x)
    }

    /// `a ∧ b := ¬(a ⊃ ¬b)`
    pub fn and(a: Formula, b: Formula) -> Formula {
        Formula::not(Formula::implies(a, Formula::not(b)))
    }

    /// `a ∨ b := ¬a ⊃ b`
    pub fn or(a: Formula, b: Formula) -> Formula {
        Formula::implies(Formula::not(a), b)
    }

    /// `a ≡ b := (a ⊃ b) ∧ (b ⊃ a)`
    pub fn iff(a: Formula, b: Formula) -> Formula {
        Formula::and(Formula::implies(a.clone(), b.clone()), Formula::implies(b, a))
    }

    /// `∃x a := ¬∀x¬a`
    pub fn exists(x: Var, a: Formula) -> Formula {
        Formula::not(Formula::forall(x, Formula::not(a)))
    }

    /// `□a := ¬a > ⊥`
    pub fn necessarily(a: Formula) -> Formula {
        Formula::cond(Formula::not(a), Formula::Bot)
    }

    /// `◇a := ¬(a > ⊥)`
    pub fn possibly(a: Formula) -> Formula {
        Formula::not(Formula::cond(a, Formula::Bot))
    }

    /// Left-nested conjunction; `⊤` for an empty iterator.
    pub fn and_all(items: impl IntoIterator<Item = Formula>) -> Formula {
        items.into_iter().reduce(Formula::and).unwrap_or_else(Formula::top)
    }

    /// Left-nested disjunction; `⊥` for an empty iterator.
    pub fn or_all(items: impl IntoIterator<Item = Formula>) -> Formula {
        items.into_iter().reduce(Formula::or).unwrap_or(Formula::Bot)
    }

    /// Right-nested conditional `a1 > (a2 > ( ... > (an > body)))`.
    pub fn cond_chain(antecedents: &[Formula], body: Formula) -> Formula {
        antecedents.iter().rev().fold(body, |acc, a| Formula::cond(a.clone(), acc))
    }
}

// Recognisers for the derived forms.
impl Formula {
    pub fn is_top(&self) -> bool {
        matches!(self, Formula::Not(a) if **a == Formula::Bot)
    }

    pub fn as_and(&self) -> Option<(&Formula, &Formula)> {
        match self {
            Formula::Not(inner) => match &**inner {
                Formula::Implies(a, nb) => match &**nb {
                    Formula::Not(b) => Some((a, b)),
                    _ => None,
                },
                _ => None,
            },
            _ => None,
        }
    }

    pub fn as_or(&self) -> Option<(&Formula, &Formula)> {
        match self {
            Formula::Implies(na, b) => match &**na {
                Formula::Not(a) => Some((a, b)),
                _ => None,
            },
            _ => None,
        }
    }

    pub fn as_iff(&self) -> Option<(&Formula, &Formula)> {
        let (l, r) = self.as_and()?;
        match (l, r) {
            (Formula::Implies(a, b), Formula::Implies(b2, a2)) if a == a2 && b == b2 => Some((a, b)),
            _ => None,
        }
    }

    pub fn as_exists(&self) -> Option<(Var, &Formula)> {
        match self {
            Formula::Not(inner) => match &**inner {
                Formula::Forall(x, body) => match &**body {
                    Formula::Not(a) => Some((*x, a)),
                    _ => None,
                },
                _ => None,
            },
            _ => None,
        }
    }

    pub fn as_necessarily(&self) -> Option<&Formula> {
        match self {
            Formula::Cond(na, b) if **b == Formula::Bot => match &**na {
                Formula::Not(a) => Some(a),
                _ => None,
            },
            _ => None,
        }
    }

    pub fn as_possibly(&self) -> Option<&Formula> {
        match self {
            Formula::Not(inner) => match &**inner {
                Formula::Cond(a, b) if **b == Formula::Bot => Some(a),
                _ => None,
            },
            _ => None,
        }
    }

    /// Splits a right-nested conditional spine into its antecedents and the
    /// remaining consequent, stopping after `depth` antecedents.
    pub fn cond_spine(&self, depth: usize) -> Option<(Vec<&Formula>, &Formula)> {
        let mut antecedents = Vec::with_capacity(depth);
        let mut cur = self;
        for _ in 0..depth {
            match cur {
                Formula::Cond(a, b) => {
                    antecedents.push(&**a);
                    cur = b;
                }
                _ => return None,
            }
        }
        Some((antecedents, cur))
    }

    /// Number of antecedents on the right-nested conditional spine.
    pub fn cond_spine_len(&self) -> usize {
        let mut n = 0;
        let mut cur = self;
        while let Formula::Cond(_, b) = cur {
            n += 1;
            cur = b;
        }
        n
    }
}

impl Formula {
    pub fn free_vars(&self) -> BTreeSet<Var> {
        let mut out = BTreeSet::new();
        self.collect_free(&mut Vec::new(), &mut out);
        out
    }

    fn collect_free(&self, bound: &mut Vec<Var>, out: &mut BTreeSet<Var>) {
        let mut see = |v: &Var, bound: &Vec<Var>| {
            if !bound.contains(v) {
                out.insert(*v);
            }
        };
        match self {
            Formula::Bot => {}
            Formula::Atom(_, args) => args.iter().for_each(|v| see(v, bound)),
            Formula::Eq(a, b) => {
                see(a, bound);
                see(b, bound);
            }
            Formula::Existence(a) => see(a, bound),
            Formula::Not(a) => a.collect_free(bound, out),
            Formula::Implies(a, b) | Formula::Cond(a, b) => {
                a.collect_free(bound, out);
                b.collect_free(bound, out);
            }
            Formula::Forall(x, a) => {
                bound.push(*x);
                a.collect_free(bound, out);
                bound.pop();
            }
        }
    }

    pub fn is_free(&self, v: Var) -> bool {
        match self {
            Formula::Bot => false,
            Formula::Atom(_, args) => args.contains(&v),
            Formula::Eq(a, b) => *a == v || *b == v,
            Formula::Existence(a) => *a == v,
            Formula::Not(a) => a.is_free(v),
            Formula::Implies(a, b) | Formula::Cond(a, b) => a.is_free(v) || b.is_free(v),
            Formula::Forall(x, a) => *x != v && a.is_free(v),
        }
    }

    /// Every variable occurring anywhere, free or bound.
    pub fn all_vars(&self) -> BTreeSet<Var> {
        let mut out = BTreeSet::new();
        self.visit(&mut |f| match f {
            Formula::Atom(_, args) => out.extend(args.iter().copied()),
            Formula::Eq(a, b) => {
                out.insert(*a);
                out.insert(*b);
            }
            Formula::Existence(a) => {
                out.insert(*a);
            }
            Formula::Forall(x, _) => {
                out.insert(*x);
            }
            _ => {}
        });
        out
    }

    pub fn predicates(&self) -> BTreeSet<Predicate> {
        let mut out = BTreeSet::new();
        self.visit(&mut |f| {
            if let Formula::Atom(p, _) = f {
                out.insert(p.clone());
            }
        });
        out
    }

    /// Pre-order traversal.
    pub fn visit<'a>(&'a self, f: &mut impl FnMut(&'a Formula)) {
        f(self);
        match self {
            Formula::Not(a) | Formula::Forall(_, a) => a.visit(f),
            Formula::Implies(a, b) | Formula::Cond(a, b) => {
                a.visit(f);
                b.visit(f);
            }
            _ => {}
        }
    }

    pub fn uses_identity(&self) -> bool {
        let mut found = false;
        self.visit(&mut |f| found |= matches!(f, Formula::Eq(..)));
        found
    }

    pub fn uses_existence(&self) -> bool {
        let mut found = false;
        self.visit(&mut |f| found |= matches!(f, Formula::Existence(_)));
        found
    }

    pub fn has_conditional(&self) -> bool {
        let mut found = false;
        self.visit(&mut |f| found |= matches!(f, Formula::Cond(..)));
        found
    }

    pub fn has_quantifier(&self) -> bool {
        let mut found = false;
        self.visit(&mut |f| found |= matches!(f, Formula::Forall(..)));
        found
    }

    /// Checks that the formula belongs to `lang`. Under `L=` the
    /// existence predicate must already have been expanded.
    pub fn check_language(&self, lang: Language) -> Result<(), LanguageError> {
        if self.uses_identity() && lang != Language::Identity {
            return Err(LanguageError::Identity(lang));
        }
        if self.uses_existence() && lang != Language::Existence {
            return Err(LanguageError::Existence(lang));
        }
        Ok(())
    }

    pub fn metrics(&self) -> Metrics {
        Metrics { size: self.size(), quantifier_rank: self.quantifier_rank() }
    }

    pub fn size(&self) -> usize {
        match self {
            Formula::Bot | Formula::Atom(..) | Formula::Eq(..) | Formula::Existence(_) => 1,
            Formula::Not(a) | Formula::Forall(_, a) => 1 + a.size(),
            Formula::Implies(a, b) | Formula::Cond(a, b) => 1 + a.size() + b.size(),
        }
    }

    pub fn quantifier_rank(&self) -> usize {
        match self {
            Formula::Bot | Formula::Atom(..) | Formula::Eq(..) | Formula::Existence(_) => 0,
            Formula::Not(a) => a.quantifier_rank(),
            Formula::Forall(_, a) => 1 + a.quantifier_rank(),
            Formula::Implies(a, b) | Formula::Cond(a, b) => a.quantifier_rank().max(b.quantifier_rank()),
        }
    }

    /// Replaces every conditional `>` by material implication `⊃`.
    pub fn material_reduct(&self) -> Formula {
        self.map_nodes(&|f| match f {
            Formula::Cond(a, b) => Some(Formula::Implies(a, b)),
            other => Some(other),
        })
    }

    /// Rebuilds the formula bottom-up, letting `f` rewrite each node after its
    /// children have been rebuilt. Returning `None` keeps the node unchanged.
    fn map_nodes(&self, f: &dyn Fn(Formula) -> Option<Formula>) -> Formula {
        let rebuilt = match self {
            Formula::Not(a) => Formula::Not(Box::new(a.map_nodes(f))),
            Formula::Implies(a, b) => Formula::Implies(Box::new(a.map_nodes(f)), Box::new(b.map_nodes(f))),
            Formula::Cond(a, b) => Formula::Cond(Box::new(a.map_nodes(f)), Box::new(b.map_nodes(f))),
            Formula::Forall(x, a) => Formula::Forall(*x, Box::new(a.map_nodes(f))),
            leaf => leaf.clone(),
        };
        let keep = rebuilt.clone();
        f(rebuilt).unwrap_or(keep)
    }

    /// Replaces atoms of every predicate not accepted by `keep` with `⊥`.
    pub fn replace_other_atoms_with_bot(&self, keep: &dyn Fn(&Predicate) -> bool) -> Formula {
        self.map_nodes(&|node| match node {
            Formula::Atom(p, _) if !keep(&p) => Some(Formula::Bot),
            other => Some(other),
        })
    }

    /// Replaces every `E(x)` with `⊤`.
    pub fn existence_to_top(&self) -> Formula {
        self.map_nodes(&|node| match node {
            Formula::Existence(_) => Some(Formula::top()),
            other => Some(other),
        })
    }

    /// Expands every `E(x)` into `∃y(x = y)` with `y` the smallest variable
    /// index not occurring in the formula.
    pub fn expand_existence(&self) -> Formula {
        if !self.uses_existence() {
            return self.clone();
        }
        let y = FreshVars::new(self.all_vars()).next_var();
        self.map_nodes(&|node| match node {
            Formula::Existence(x) => Some(Formula::exists(y, Formula::Eq(x, y))),
            other => Some(other),
        })
    }

    /// Simultaneous capture-avoiding substitution `self[y1..yn / x1..xn]`
    /// for `targets = [(x1, y1), ..]`. Bound variables that would capture a
    /// replacement are renamed to the smallest unused index.
    pub fn substitute(&self, targets: &[(Var, Var)]) -> Formula {
        let targets: Vec<(Var, Var)> = targets.iter().copied().filter(|(x, y)| x != y).collect();
        if targets.is_empty() {
            return self.clone();
        }
        let mut avoid = self.all_vars();
        for (x, y) in &targets {
            avoid.insert(*x);
            avoid.insert(*y);
        }
        let mut fresh = FreshVars::new(avoid);
        self.subst_rec(&targets, &mut fresh)
    }

    fn subst_rec(&self, map: &[(Var, Var)], fresh: &mut FreshVars) -> Formula {
        let look = |v: &Var| map.iter().find(|(x, _)| x == v).map(|(_, y)| *y).unwrap_or(*v);
        match self {
            Formula::Bot => Formula::Bot,
            Formula::Atom(p, args) => Formula::Atom(p.clone(), args.iter().map(look).collect()),
            Formula::Eq(a, b) => Formula::Eq(look(a), look(b)),
            Formula::Existence(a) => Formula::Existence(look(a)),
            Formula::Not(a) => Formula::not(a.subst_rec(map, fresh)),
            Formula::Implies(a, b) => Formula::implies(a.subst_rec(map, fresh), b.subst_rec(map, fresh)),
            Formula::Cond(a, b) => Formula::cond(a.subst_rec(map, fresh), b.subst_rec(map, fresh)),
            Formula::Forall(v, body) => {
                let mut inner: Vec<(Var, Var)> =
                    map.iter().copied().filter(|(x, _)| x != v && body.is_free(*x)).collect();
                if inner.is_empty() {
                    return self.clone();
                }
                if inner.iter().any(|(_, y)| y == v) {
                    let renamed = fresh.next_var();
                    inner.push((*v, renamed));
                    Formula::forall(renamed, body.subst_rec(&inner, fresh))
                } else {
                    Formula::forall(*v, body.subst_rec(&inner, fresh))
                }
            }
        }
    }

    /// Equality up to renaming of bound variables.
    pub fn alpha_eq(&self, other: &Formula) -> bool {
        alpha_rec(self, other, &mut Vec::new())
    }

    /// Renames every bound variable apart: afterwards no variable is bound
    /// twice and no bound variable coincides with a free one. Fresh names are
    /// drawn from `fresh`.
    pub fn rename_bound_apart(&self, fresh: &mut FreshVars) -> Formula {
        self.rename_rec(&mut Vec::new(), fresh)
    }

    fn rename_rec(&self, env: &mut Vec<(Var, Var)>, fresh: &mut FreshVars) -> Formula {
        let look = |v: &Var, env: &Vec<(Var, Var)>| env.iter().rev().find(|(x, _)| x == v).map(|(_, y)| *y).unwrap_or(*v);
        match self {
            Formula::Bot => Formula::Bot,
            Formula::Atom(p, args) => Formula::Atom(p.clone(), args.iter().map(|v| look(v, env)).collect()),
            Formula::Eq(a, b) => Formula::Eq(look(a, env), look(b, env)),
            Formula::Existence(a) => Formula::Existence(look(a, env)),
            Formula::Not(a) => Formula::not(a.rename_rec(env, fresh)),
            Formula::Implies(a, b) => Formula::implies(a.rename_rec(env, fresh), b.rename_rec(env, fresh)),
            Formula::Cond(a, b) => Formula::cond(a.rename_rec(env, fresh), b.rename_rec(env, fresh)),
            Formula::Forall(v, body) => {
                let renamed = fresh.next_var();
                env.push((*v, renamed));
                let body = body.rename_rec(env, fresh);
                env.pop();
                Formula::forall(renamed, body)
            }
        }
    }
}

fn alpha_rec(a: &Formula, b: &Formula, env: &mut Vec<(Var, Var)>) -> bool {
    let same = |x: &Var, y: &Var, env: &Vec<(Var, Var)>| {
        let bx = env.iter().rposition(|(l, _)| l == x);
        let by = env.iter().rposition(|(_, r)| r == y);
        match (bx, by) {
            (Some(i), Some(j)) => i == j,
            (None, None) => x == y,
            _ => false,
        }
    };
    match (a, b) {
        (Formula::Bot, Formula::Bot) => true,
        (Formula::Atom(p, xs), Formula::Atom(q, ys)) => {
            p == q && xs.len() == ys.len() && xs.iter().zip(ys).all(|(x, y)| same(x, y, env))
        }
        (Formula::Eq(a1, b1), Formula::Eq(a2, b2)) => same(a1, a2, env) && same(b1, b2, env),
        (Formula::Existence(x), Formula::Existence(y)) => same(x, y, env),
        (Formula::Not(x), Formula::Not(y)) => alpha_rec(x, y, env),
        (Formula::Implies(a1, b1), Formula::Implies(a2, b2)) | (Formula::Cond(a1, b1), Formula::Cond(a2, b2)) => {
            alpha_rec(a1, a2, env) && alpha_rec(b1, b2, env)
        }
        (Formula::Forall(x, p), Formula::Forall(y, q)) => {
            env.push((*x, *y));
            let r = alpha_rec(p, q, env);
            env.pop();
            r
        }
        _ => false,
    }
}

/// Supplies variables not in an avoid-set, smallest index first.
#[derive(Clone, Debug)]
pub struct FreshVars {
    used: BTreeSet<Var>,
    cursor: u32,
}

impl FreshVars {
    pub fn new(used: BTreeSet<Var>) -> Self {
        FreshVars { used, cursor: 0 }
    }

    pub fn reserve(&mut self, v: Var) {
        self.used.insert(v);
    }

    pub fn next_var(&mut self) -> Var {
        while self.used.contains(&Var(self.cursor)) {
            self.cursor += 1;
        }
        let v = Var(self.cursor);
        self.used.insert(v);
        v
    }
}

/// The unary predicate `F` used by the named formulas and the model K.
pub fn predicate_f() -> Predicate {
    Predicate::new("F", 1)
}

/// `F(x)`
pub fn f_atom(x: Var) -> Formula {
    Formula::Atom(predicate_f(), vec![x])
}

/// The descending-sequence formula
/// `∃x⊤ ∧ ∀x◇F(x) ∧ ∀x∃y((F(x) ∨ F(y)) > ¬F(x))`, with `◇` expanded.
pub fn build_ds() -> Formula {
    let x = Var(0);
    let y = Var(1);
    let nonempty = Formula::exists(x, Formula::top());
    let all_possible = Formula::forall(x, Formula::possibly(f_atom(x)));
    let descend = Formula::forall(
        x,
        Formula::exists(y, Formula::cond(Formula::or(f_atom(x), f_atom(y)), Formula::not(f_atom(x)))),
    );
    Formula::and_all([nonempty, all_possible, descend])
}

/// Conditional excluded middle `(a > b) ∨ (a > ¬b)`.
pub fn build_cem(a: Formula, b: Formula) -> Formula {
    Formula::or(Formula::cond(a.clone(), b.clone()), Formula::cond(a, Formula::not(b)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(v: u32) -> Formula {
        f_atom(Var(v))
    }

    fn p2(a: u32, b: u32) -> Formula {
        Formula::Atom(Predicate::new("P", 2), vec![Var(a), Var(b)])
    }

    #[test]
    fn substitute_leaves_bound_occurrences() {
        // ∀x F(x) ⊃ F(x)  [y/x]
        let phi = Formula::implies(Formula::forall(Var(0), f(0)), f(0));
        let out = phi.substitute(&[(Var(0), Var(1))]);
        assert_eq!(out, Formula::implies(Formula::forall(Var(0), f(0)), f(1)));
    }

    #[test]
    fn substitute_renames_capturing_binder() {
        // ∀y P(x,y) [y/x] = ∀y' P(y,y') with y' the smallest unused index
        let phi = Formula::forall(Var(1), p2(0, 1));
        let out = phi.substitute(&[(Var(0), Var(1))]);
        assert_eq!(out, Formula::forall(Var(2), p2(1, 2)));
    }

    #[test]
    fn substitute_identity_case() {
        assert_eq!(f(0).substitute(&[]), f(0));
    }

    #[test]
    fn substitution_is_simultaneous() {
        let phi = p2(0, 1);
        assert_eq!(phi.substitute(&[(Var(0), Var(1)), (Var(1), Var(0))]), p2(1, 0));
    }

    #[test]
    fn free_variable_examples() {
        assert!(Formula::forall(Var(0), f(0)).free_vars().is_empty());
        let phi = Formula::cond(f(0), Formula::not(f(1)));
        assert_eq!(phi.free_vars(), [Var(0), Var(1)].into_iter().collect());
        let ds = build_ds();
        assert!(ds.free_vars().is_empty());
    }

    #[test]
    fn ds_uses_only_unary_f() {
        let preds = build_ds().predicates();
        assert_eq!(preds.len(), 1);
        assert_eq!(preds.into_iter().next().unwrap(), predicate_f());
    }

    #[test]
    fn ds_reduct_has_no_conditionals() {
        let ds = build_ds();
        assert!(ds.has_conditional());
        let reduct = ds.material_reduct();
        assert!(!reduct.has_conditional());
        assert_eq!(reduct.size(), ds.size());
    }

    #[test]
    fn material_reduct_examples() {
        let g = Formula::Atom(Predicate::new("G", 1), vec![Var(0)]);
        assert_eq!(Formula::cond(f(0), g.clone()).material_reduct(), Formula::implies(f(0), g.clone()));
        let plain = Formula::implies(f(0), Formula::not(g));
        assert_eq!(plain.material_reduct(), plain);
        let dia = Formula::possibly(f(0));
        assert_eq!(dia.material_reduct(), Formula::not(Formula::implies(f(0), Formula::Bot)));
    }

    #[test]
    fn metric_examples() {
        assert_eq!(f(0).metrics(), Metrics { size: 1, quantifier_rank: 0 });
        let m = Formula::forall(Var(0), Formula::exists(Var(1), f(0))).metrics();
        assert!(m.size >= 3);
        assert_eq!(m.quantifier_rank, 2);
        // ∃x⊤ has rank 1, ∀x◇F(x) rank 1, ∀x∃y(..) rank 2.
        assert_eq!(build_ds().quantifier_rank(), 2);
    }

    #[test]
    fn derived_connectives_round_trip_through_recognisers() {
        let a = f(0);
        let b = f(1);
        assert_eq!(Formula::and(a.clone(), b.clone()).as_and(), Some((&a, &b)));
        assert_eq!(Formula::or(a.clone(), b.clone()).as_or(), Some((&a, &b)));
        assert_eq!(Formula::iff(a.clone(), b.clone()).as_iff(), Some((&a, &b)));
        assert_eq!(Formula::exists(Var(3), a.clone()).as_exists(), Some((Var(3), &a)));
        assert_eq!(Formula::necessarily(a.clone()).as_necessarily(), Some(&a));
        assert_eq!(Formula::possibly(a.clone()).as_possibly(), Some(&a));
        assert!(Formula::top().is_top());
    }

    #[test]
    fn alpha_equivalence() {
        let a = Formula::forall(Var(0), p2(0, 2));
        let b = Formula::forall(Var(5), p2(5, 2));
        let c = Formula::forall(Var(2), p2(2, 2));
        assert!(a.alpha_eq(&b));
        assert!(!a.alpha_eq(&c));
        assert!(!f(0).alpha_eq(&f(1)));
    }

    #[test]
    fn expand_existence_uses_fresh_variable() {
        let phi = Formula::and(Formula::Existence(Var(0)), f(1));
        let out = phi.expand_existence();
        assert!(!out.uses_existence());
        assert!(out.uses_identity());
        assert_eq!(out.free_vars(), phi.free_vars());
    }

    #[test]
    fn language_checks() {
        assert!(Formula::eq(Var(0), Var(1)).check_language(Language::Plain).is_err());
        assert!(Formula::eq(Var(0), Var(1)).check_language(Language::Identity).is_ok());
        assert!(Formula::Existence(Var(0)).check_language(Language::Existence).is_ok());
        assert!(Formula::Existence(Var(0)).check_language(Language::Identity).is_err());
    }

    #[test]
    fn arity_is_checked() {
        assert!(Predicate::new("G", 2).apply(vec![Var(0)]).is_err());
        assert!(Predicate::new("A", 0).apply(vec![]).is_ok());
    }
}
