//! Schema patterns with formula and variable metavariables.

use crate::syntax::{Formula, Var};

/// Index of a formula metavariable (φ, ψ, χ).
pub(crate) type Meta = usize;
/// Index of a variable metavariable (x, y, s, t).
pub(crate) type VarMeta = usize;

#[derive(Clone, Debug)]
pub(crate) enum Pat {
    Meta(Meta),
    Bot,
    Eq(VarMeta, VarMeta),
    /// `E(y)` in `LE`; in `L=` it also matches the expansion `∃z(y = z)`.
    Exists(VarMeta),
    Not(Box<Pat>),
    Implies(Box<Pat>, Box<Pat>),
    Cond(Box<Pat>, Box<Pat>),
    Forall(VarMeta, Box<Pat>),
}

pub(crate) fn m(i: Meta) -> Pat {
    Pat::Meta(i)
}

pub(crate) fn not(a: Pat) -> Pat {
    Pat::Not(Box::new(a))
}

pub(crate) fn imp(a: Pat, b: Pat) -> Pat {
    Pat::Implies(Box::new(a), Box::new(b))
}

pub(crate) fn cond(a: Pat, b: Pat) -> Pat {
    Pat::Cond(Box::new(a), Box::new(b))
}

pub(crate) fn forall(x: VarMeta, a: Pat) -> Pat {
    Pat::Forall(x, Box::new(a))
}

pub(crate) fn and(a: Pat, b: Pat) -> Pat {
    not(imp(a, not(b)))
}

pub(crate) fn or(a: Pat, b: Pat) -> Pat {
    imp(not(a), b)
}

pub(crate) fn iff(a: Pat, b: Pat) -> Pat {
    and(imp(a.clone(), b.clone()), imp(b, a))
}

pub(crate) fn exists(x: VarMeta, a: Pat) -> Pat {
    not(forall(x, not(a)))
}

pub(crate) fn nec(a: Pat) -> Pat {
    cond(not(a), Pat::Bot)
}

pub(crate) fn poss(a: Pat) -> Pat {
    not(cond(a, Pat::Bot))
}

pub(crate) fn eq(x: VarMeta, y: VarMeta) -> Pat {
    Pat::Eq(x, y)
}

/// Metavariable bindings produced by a successful match.
#[derive(Clone, Debug, Default)]
pub(crate) struct Bindings<'f> {
    pub formulas: Vec<Option<&'f Formula>>,
    pub vars: Vec<Option<Var>>,
}

impl<'f> Bindings<'f> {
    pub fn new() -> Self {
        Bindings { formulas: vec![None; 4], vars: vec![None; 4] }
    }

    pub fn f(&self, i: Meta) -> &'f Formula {
        self.formulas[i].expect("metavariable bound by the match")
    }

    pub fn v(&self, i: VarMeta) -> Var {
        self.vars[i].expect("variable metavariable bound by the match")
    }

    fn bind_var(&mut self, i: VarMeta, v: Var) -> bool {
        match self.vars[i] {
            Some(b) => b == v,
            None => {
                self.vars[i] = Some(v);
                true
            }
        }
    }
}

/// Structural match of `f` against `pat`. Repeated formula metavariables
/// must bind α-equivalent formulas; variable metavariables bind variables
/// by name.
pub(crate) fn matches<'f>(pat: &Pat, f: &'f Formula, b: &mut Bindings<'f>) -> bool {
    match (pat, f) {
        (Pat::Meta(i), _) => match b.formulas[*i] {
            Some(prev) => prev.alpha_eq(f),
            None => {
                b.formulas[*i] = Some(f);
                true
            }
        },
        (Pat::Bot, Formula::Bot) => true,
        (Pat::Eq(x, y), Formula::Eq(a, c)) => b.bind_var(*x, *a) && b.bind_var(*y, *c),
        (Pat::Exists(y), Formula::Existence(a)) => b.bind_var(*y, *a),
        (Pat::Exists(y), _) => match f.as_exists() {
            Some((z, Formula::Eq(a, c))) if *c == z && *a != z => b.bind_var(*y, *a),
            _ => false,
        },
        (Pat::Not(p), Formula::Not(g)) => matches(p, g, b),
        (Pat::Implies(p, q), Formula::Implies(g, h)) | (Pat::Cond(p, q), Formula::Cond(g, h)) => {
            matches(p, g, b) && matches(q, h, b)
        }
        (Pat::Forall(x, p), Formula::Forall(v, g)) => b.bind_var(*x, *v) && matches(p, g, b),
        _ => false,
    }
}

/// Builds the formula for `pat` from explicit bindings.
pub(crate) fn build(pat: &Pat, formulas: &[Formula], vars: &[Var], lang_identity: bool) -> Formula {
    let r = |p: &Pat| build(p, formulas, vars, lang_identity);
    match pat {
        Pat::Meta(i) => formulas[*i].clone(),
        Pat::Bot => Formula::Bot,
        Pat::Eq(x, y) => Formula::Eq(vars[*x], vars[*y]),
        Pat::Exists(y) => {
            let e = Formula::Existence(vars[*y]);
            if lang_identity {
                e.expand_existence()
            } else {
                e
            }
        }
        Pat::Not(a) => Formula::not(r(a)),
        Pat::Implies(a, c) => Formula::implies(r(a), r(c)),
        Pat::Cond(a, c) => Formula::cond(r(a), r(c)),
        Pat::Forall(x, a) => Formula::forall(vars[*x], r(a)),
    }
}
