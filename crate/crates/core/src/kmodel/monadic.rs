//! Quantifier elimination for monadic formulas over one unary predicate
//! `F`, with or without identity.
//!
//! A structure is described up to elementary equivalence (for a fixed
//! quantifier rank) by its *type*: the `F`-values of the named elements,
//! their equality pattern, and how many unnamed elements lie in `F` and
//! outside it, counted up to a cap. The normal form of a formula is the
//! disjunction of the types that satisfy it.

use std::collections::HashMap;
use std::fmt;

use crate::syntax::{Formula, FreshVars, Var};

use super::KError;

/// Unnamed elements of one class. `None` means unboundedly many.
pub(crate) type Fresh = Option<usize>;

/// A monadic structure up to symmetry: named elements with their
/// `F`-values, and the number of interchangeable unnamed elements in `F`
/// and in `¬F`.
pub(crate) struct Structure {
    pub named_f: Vec<bool>,
    pub fresh_f: Fresh,
    pub fresh_n: Fresh,
}

struct Run<'s> {
    s: &'s Structure,
    elems: Vec<bool>,
    used_f: usize,
    used_n: usize,
    env: Vec<(Var, usize)>,
}

impl Run<'_> {
    fn lookup(&self, v: Var) -> usize {
        self.env.iter().rev().find(|(w, _)| *w == v).expect("variables are bound before evaluation").1
    }

    fn with_fresh(&mut self, x: Var, in_f: bool, body: &Formula) -> bool {
        let e = self.elems.len();
        self.elems.push(in_f);
        if in_f {
            self.used_f += 1;
        } else {
            self.used_n += 1;
        }
        self.env.push((x, e));
        let r = self.holds(body);
        self.env.pop();
        self.elems.pop();
        if in_f {
            self.used_f -= 1;
        } else {
            self.used_n -= 1;
        }
        r
    }

    fn holds(&mut self, f: &Formula) -> bool {
        match f {
            Formula::Bot => false,
            Formula::Atom(_, args) => self.elems[self.lookup(args[0])],
            Formula::Eq(a, b) => self.lookup(*a) == self.lookup(*b),
            Formula::Existence(_) => true,
            Formula::Not(a) => !self.holds(a),
            Formula::Implies(a, b) | Formula::Cond(a, b) => !self.holds(a) || self.holds(b),
            Formula::Forall(x, body) => {
                if !body.is_free(*x) {
                    return self.holds(body);
                }
                // Unnamed elements not yet picked are interchangeable, so one
                // fresh representative per class suffices.
                for e in 0..self.elems.len() {
                    self.env.push((*x, e));
                    let r = self.holds(body);
                    self.env.pop();
                    if !r {
                        return false;
                    }
                }
                let avail = |fresh: Fresh, used: usize| fresh.is_none_or(|n| used < n);
                if avail(self.s.fresh_f, self.used_f) && !self.with_fresh(*x, true, body) {
                    return false;
                }
                if avail(self.s.fresh_n, self.used_n) && !self.with_fresh(*x, false, body) {
                    return false;
                }
                true
            }
        }
    }
}

impl Structure {
    /// Truth of the monadic formula `f` with `named[i]` denoting element
    /// `elem_of[i]`.
    pub fn holds(&self, f: &Formula, named: &[Var], elem_of: &[usize]) -> bool {
        let mut run = Run {
            s: self,
            elems: self.named_f.clone(),
            used_f: 0,
            used_n: 0,
            env: named.iter().copied().zip(elem_of.iter().copied()).collect(),
        };
        run.holds(f)
    }
}

/// A complete type, as a memo key. Under identity, `blocks[i]` is the
/// element named by the `i`-th variable and `counts` bound the unnamed
/// elements of each class by `cap`; without identity each variable is its
/// own element and `counts` record whether each class is nonempty at all.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub(crate) struct ConcreteType {
    pub blocks: Vec<u8>,
    pub block_f: Vec<bool>,
    pub count_f: usize,
    pub count_n: usize,
}

/// Which syntactic resources a formula's type has to track.
#[derive(Clone, Debug)]
pub(crate) struct Signature {
    pub named: Vec<Var>,
    pub identity: bool,
    /// Counting threshold: the quantifier rank under identity, at most 1
    /// without it.
    pub cap: usize,
}

impl Signature {
    pub fn of(f: &Formula, named: Vec<Var>) -> Self {
        let identity = f.uses_identity();
        let qr = f.quantifier_rank();
        Signature { named, identity, cap: if identity { qr } else { qr.min(1) } }
    }

    fn fresh(&self, c: usize) -> Fresh {
        if c >= self.cap {
            None
        } else {
            Some(c)
        }
    }

    /// Representative structure of a type, or `None` if the type is
    /// unsatisfiable (inconsistent, or with an empty domain).
    pub fn representative(&self, t: &ConcreteType) -> Option<Structure> {
        if self.identity {
            if t.block_f.is_empty() && t.count_f == 0 && t.count_n == 0 {
                return None;
            }
            Some(Structure { named_f: t.block_f.clone(), fresh_f: self.fresh(t.count_f), fresh_n: self.fresh(t.count_n) })
        } else {
            let has_f = t.count_f > 0;
            let has_n = t.count_n > 0;
            if (t.block_f.iter().any(|&b| b) && !has_f) || (t.block_f.iter().any(|&b| !b) && !has_n) || !(has_f || has_n) {
                return None;
            }
            Some(Structure {
                named_f: t.block_f.clone(),
                fresh_f: if has_f { None } else { Some(0) },
                fresh_n: if has_n { None } else { Some(0) },
            })
        }
    }

    pub fn type_holds(&self, f: &Formula, t: &ConcreteType) -> bool {
        match self.representative(t) {
            Some(s) => {
                let elem_of: Vec<usize> = t.blocks.iter().map(|&b| b as usize).collect();
                s.holds(f, &self.named, &elem_of)
            }
            None => false,
        }
    }

    /// Type of the world `k` of K under named values `vals` (`None` for
    /// `−∞`): `F` holds of `n` iff `n ≤ k`.
    pub fn type_at(&self, vals: &[i64], k: Option<i64>) -> ConcreteType {
        let in_f = |v: i64| k.is_some_and(|k| v <= k);
        if self.identity {
            let mut distinct: Vec<i64> = Vec::new();
            let blocks = vals
                .iter()
                .map(|v| match distinct.iter().position(|d| d == v) {
                    Some(i) => i as u8,
                    None => {
                        distinct.push(*v);
                        (distinct.len() - 1) as u8
                    }
                })
                .collect();
            let block_f = distinct.iter().map(|&v| in_f(v)).collect();
            let (count_f, count_n) = match k {
                // Infinitely many n ≤ k; −k−1 worlds above k, minus the named ones.
                Some(k) => {
                    let named_above = distinct.iter().filter(|&&v| v > k).count() as i64;
                    let n = (-k - 1 - named_above).max(0) as usize;
                    (self.cap, n.min(self.cap))
                }
                None => (0, self.cap),
            };
            ConcreteType { blocks, block_f, count_f, count_n }
        } else {
            let blocks = (0..vals.len() as u8).collect();
            let block_f = vals.iter().map(|&v| in_f(v)).collect();
            let (count_f, count_n) = match k {
                Some(k) => (1, usize::from(k < -1)),
                None => (0, 1),
            };
            ConcreteType { blocks, block_f, count_f, count_n }
        }
    }

    /// Every type over the signature, satisfiable or not.
    pub fn all_types(&self) -> Vec<ConcreteType> {
        let n = self.named.len();
        let patterns: Vec<Vec<u8>> = if self.identity { set_partitions(n) } else { vec![(0..n as u8).collect()] };
        let max_count = if self.identity { self.cap } else { 1 };
        let mut out = Vec::new();
        for blocks in patterns {
            let nb = blocks.iter().map(|&b| b as usize + 1).max().unwrap_or(0);
            for fmask in 0..1u32 << nb {
                let block_f: Vec<bool> = (0..nb).map(|i| fmask >> i & 1 == 1).collect();
                for count_f in 0..=max_count {
                    for count_n in 0..=max_count {
                        out.push(ConcreteType { blocks: blocks.clone(), block_f: block_f.clone(), count_f, count_n });
                    }
                }
            }
        }
        out
    }
}

/// Restricted growth strings of length `n`.
fn set_partitions(n: usize) -> Vec<Vec<u8>> {
    fn go(prefix: &mut Vec<u8>, n: usize, out: &mut Vec<Vec<u8>>) {
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        let next = prefix.iter().map(|&b| b + 1).max().unwrap_or(0);
        for b in 0..=next {
            prefix.push(b);
            go(prefix, n, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), n, &mut out);
    out
}

/// `lo ≤ count ≤ hi`, `hi = None` for no upper bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize)]
pub struct CountRange {
    pub lo: usize,
    pub hi: Option<usize>,
}

impl CountRange {
    pub fn is_trivial(&self) -> bool {
        self.lo == 0 && self.hi.is_none()
    }

    fn adjacent_union(self, other: CountRange) -> Option<CountRange> {
        let (a, b) = if self.lo <= other.lo { (self, other) } else { (other, self) };
        (a.hi? + 1 == b.lo).then_some(CountRange { lo: a.lo, hi: b.hi })
    }
}

/// One disjunct of a [`CountingNormalForm`]. Unconstrained coordinates are
/// `None` or trivial ranges.
#[derive(Clone, Debug, PartialEq, Eq, Hash, serde::Serialize)]
pub struct TypeConstraint {
    /// `Some(b)`: `F(x_i)` holds iff `b`.
    pub literals: Vec<Option<bool>>,
    /// Block index per named variable (identity only).
    pub pattern: Option<Vec<u8>>,
    /// Elements in `F` (unnamed ones under identity).
    pub count_f: CountRange,
    /// Elements in `¬F` (unnamed ones under identity).
    pub count_n: CountRange,
}

impl TypeConstraint {
    fn matches(&self, t: &ConcreteType, cap: usize) -> bool {
        let within = |r: &CountRange, c: usize| c >= r.lo && r.hi.is_none_or(|h| c <= h && c < cap);
        self.literals.iter().enumerate().all(|(i, l)| l.is_none_or(|b| t.block_f[t.blocks[i] as usize] == b))
            && self.pattern.as_ref().is_none_or(|p| *p == t.blocks)
            && within(&self.count_f, t.count_f)
            && within(&self.count_n, t.count_n)
    }

    /// Merges two constraints differing in exactly one coordinate whose
    /// values together cover a contiguous range.
    fn merge(&self, other: &TypeConstraint) -> Option<TypeConstraint> {
        if self.pattern != other.pattern {
            return None;
        }
        let lit_diff: Vec<usize> = (0..self.literals.len()).filter(|&i| self.literals[i] != other.literals[i]).collect();
        let f_same = self.count_f == other.count_f;
        let n_same = self.count_n == other.count_n;
        let mut out = self.clone();
        match (lit_diff.as_slice(), f_same, n_same) {
            ([i], true, true) => match (self.literals[*i], other.literals[*i]) {
                (Some(a), Some(b)) if a != b => out.literals[*i] = None,
                _ => return None,
            },
            ([], false, true) => out.count_f = self.count_f.adjacent_union(other.count_f)?,
            ([], true, false) => out.count_n = self.count_n.adjacent_union(other.count_n)?,
            _ => return None,
        }
        Some(out)
    }
}

/// A disjunction of mutually exclusive type constraints.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct CountingNormalForm {
    pub named: Vec<Var>,
    pub identity: bool,
    /// Counting thresholds never exceed this.
    pub cap: usize,
    pub types: Vec<TypeConstraint>,
}

fn count_range(c: usize, cap: usize) -> CountRange {
    if c >= cap {
        CountRange { lo: cap, hi: None }
    } else {
        CountRange { lo: c, hi: Some(c) }
    }
}

/// Checks that `f` is a monadic formula over `F/1` (and `=`), without
/// conditionals or `E`.
pub(crate) fn check_monadic(f: &Formula) -> Result<(), KError> {
    let mut bad = None;
    f.visit(&mut |g| {
        if bad.is_some() {
            return;
        }
        match g {
            Formula::Cond(..) => bad = Some("a conditional".to_string()),
            Formula::Existence(_) => bad = Some("the existence predicate".to_string()),
            Formula::Atom(p, _) if !super::is_fragment_predicate(p) => bad = Some(format!("predicate {p}")),
            _ => {}
        }
    });
    match bad {
        Some(what) => Err(KError::NonMonadic(what)),
        None => Ok(()),
    }
}

/// Counting normal form of the monadic formula `f` with free variables
/// among `named`.
pub fn monadic_nf(f: &Formula, named: &[Var]) -> Result<CountingNormalForm, KError> {
    check_monadic(f)?;
    if let Some(v) = f.free_vars().into_iter().find(|v| !named.contains(v)) {
        return Err(KError::Uncovered(v));
    }
    let sig = Signature::of(f, named.to_vec());
    let cap = if sig.identity { sig.cap } else { 1 };
    let mut types: Vec<TypeConstraint> = Vec::new();
    for t in sig.all_types() {
        if sig.representative(&t).is_none() || !sig.type_holds(f, &t) {
            continue;
        }
        types.push(TypeConstraint {
            literals: t.blocks.iter().map(|&b| Some(t.block_f[b as usize])).collect(),
            pattern: sig.identity.then(|| t.blocks.clone()),
            count_f: count_range(t.count_f, cap),
            count_n: count_range(t.count_n, cap),
        });
    }
    // Unsatisfiable types never occur, so they may be merged in freely;
    // they are added back as "don't care" fillers before merging.
    let mut filler: Vec<TypeConstraint> = Vec::new();
    for t in sig.all_types() {
        if sig.representative(&t).is_none() {
            filler.push(TypeConstraint {
                literals: t.blocks.iter().map(|&b| Some(t.block_f[b as usize])).collect(),
                pattern: sig.identity.then(|| t.blocks.clone()),
                count_f: count_range(t.count_f, cap),
                count_n: count_range(t.count_n, cap),
            });
        }
    }
    let all = sig.all_types();
    let types = merge_all(types, filler).into_iter().map(|t| widen(t, &sig, cap, &all)).collect();
    Ok(CountingNormalForm { named: named.to_vec(), identity: sig.identity, cap, types })
}

/// Drops each coordinate of `t` whose removal only adds unsatisfiable
/// types. Greedy merging can strand fillers that this picks up.
fn widen(mut t: TypeConstraint, sig: &Signature, cap: usize, all: &[ConcreteType]) -> TypeConstraint {
    let only_fillers = |wide: &TypeConstraint, narrow: &TypeConstraint| {
        all.iter().all(|c| !wide.matches(c, cap) || narrow.matches(c, cap) || sig.representative(c).is_none())
    };
    for i in 0..t.literals.len() {
        let mut w = t.clone();
        w.literals[i] = None;
        if w != t && only_fillers(&w, &t) {
            t = w;
        }
    }
    let trivial = CountRange { lo: 0, hi: None };
    for side in [false, true] {
        let mut w = t.clone();
        *if side { &mut w.count_n } else { &mut w.count_f } = trivial;
        if w != t && only_fillers(&w, &t) {
            t = w;
        }
    }
    t
}

/// Greedy pairwise merging to a fixpoint. Filler constraints may be
/// absorbed but are never reported on their own.
fn merge_all(types: Vec<TypeConstraint>, filler: Vec<TypeConstraint>) -> Vec<TypeConstraint> {
    let mut items: Vec<(TypeConstraint, bool)> =
        types.into_iter().map(|t| (t, true)).chain(filler.into_iter().map(|t| (t, false))).collect();
    loop {
        let mut merged = None;
        'search: for i in 0..items.len() {
            for j in i + 1..items.len() {
                if !(items[i].1 || items[j].1) {
                    continue;
                }
                if let Some(m) = items[i].0.merge(&items[j].0) {
                    merged = Some((i, j, m));
                    break 'search;
                }
            }
        }
        match merged {
            Some((i, j, m)) => {
                items.swap_remove(j);
                items[i] = (m, true);
            }
            None => break,
        }
    }
    let mut out: Vec<TypeConstraint> = items.into_iter().filter(|(_, real)| *real).map(|(t, _)| t).collect();
    out.sort_by(|a, b| format!("{a:?}").cmp(&format!("{b:?}")));
    out
}

impl CountingNormalForm {
    #[cfg(test)]
    pub(crate) fn holds(&self, t: &ConcreteType) -> bool {
        self.types.iter().any(|c| c.matches(t, self.cap))
    }

    /// A monadic formula equivalent to the normal form.
    pub fn to_formula(&self) -> Formula {
        let mut fresh = FreshVars::new(self.named.iter().copied().collect());
        let disjuncts: Vec<Formula> = self.types.iter().map(|t| self.constraint_formula(t, &mut fresh)).collect();
        Formula::or_all(disjuncts)
    }

    fn constraint_formula(&self, t: &TypeConstraint, fresh: &mut FreshVars) -> Formula {
        let f = |v: Var| crate::syntax::f_atom(v);
        let mut parts = Vec::new();
        for (i, l) in t.literals.iter().enumerate() {
            match l {
                Some(true) => parts.push(f(self.named[i])),
                Some(false) => parts.push(Formula::not(f(self.named[i]))),
                None => {}
            }
        }
        if let Some(p) = &t.pattern {
            for i in 0..p.len() {
                for j in i + 1..p.len() {
                    let e = Formula::eq(self.named[i], self.named[j]);
                    parts.push(if p[i] == p[j] { e } else { Formula::not(e) });
                }
            }
        }
        for (range, positive) in [(t.count_f, true), (t.count_n, false)] {
            if range.lo > 0 {
                parts.push(self.at_least(range.lo, positive, fresh));
            }
            if let Some(h) = range.hi {
                parts.push(Formula::not(self.at_least(h + 1, positive, fresh)));
            }
        }
        Formula::and_all(parts)
    }

    /// `∃≥j x (±F(x) ∧ x ∉ named)`; without identity, `∃x ±F(x)`.
    fn at_least(&self, j: usize, positive: bool, fresh: &mut FreshVars) -> Formula {
        let lit = |v: Var| {
            let a = crate::syntax::f_atom(v);
            if positive {
                a
            } else {
                Formula::not(a)
            }
        };
        if !self.identity {
            let x = fresh.next_var();
            return Formula::exists(x, lit(x));
        }
        let xs: Vec<Var> = (0..j).map(|_| fresh.next_var()).collect();
        let mut parts = Vec::new();
        for (i, &x) in xs.iter().enumerate() {
            parts.push(lit(x));
            for &y in &xs[..i] {
                parts.push(Formula::not(Formula::eq(x, y)));
            }
            for &n in &self.named {
                parts.push(Formula::not(Formula::eq(x, n)));
            }
        }
        xs.iter().rev().fold(Formula::and_all(parts), |body, &x| Formula::exists(x, body))
    }
}

impl fmt::Display for CountingNormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.types.is_empty() {
            return write!(f, "bot");
        }
        let excl = if self.identity { " unnamed" } else { "" };
        let count = |r: &CountRange, cls: &str| -> Option<String> {
            if r.is_trivial() {
                return None;
            }
            Some(match r.hi {
                None => format!("at least {}{excl} {cls}", r.lo),
                Some(h) if h == r.lo => format!("exactly {h}{excl} {cls}"),
                Some(h) => format!("{}..{h}{excl} {cls}", r.lo),
            })
        };
        let lines: Vec<String> = self
            .types
            .iter()
            .map(|t| {
                let mut parts = Vec::new();
                for (i, l) in t.literals.iter().enumerate() {
                    match l {
                        Some(true) => parts.push(format!("F({})", self.named[i])),
                        Some(false) => parts.push(format!("~F({})", self.named[i])),
                        None => {}
                    }
                }
                if let Some(p) = &t.pattern {
                    for i in 0..p.len() {
                        for j in i + 1..p.len() {
                            let op = if p[i] == p[j] { "=" } else { "!=" };
                            parts.push(format!("{} {op} {}", self.named[i], self.named[j]));
                        }
                    }
                }
                parts.extend(count(&t.count_f, "F"));
                parts.extend(count(&t.count_n, "~F"));
                if parts.is_empty() {
                    "top".to_string()
                } else {
                    parts.join(" & ")
                }
            })
            .collect();
        write!(f, "{}", lines.join("  |  "))
    }
}

/// Memoised type evaluation for one formula.
pub(crate) struct TypeMemo {
    pub sig: Signature,
    pub formula: Formula,
    memo: HashMap<ConcreteType, bool>,
}

impl TypeMemo {
    pub fn new(formula: Formula, named: Vec<Var>) -> Self {
        TypeMemo { sig: Signature::of(&formula, named), formula, memo: HashMap::new() }
    }

    pub fn holds(&mut self, t: ConcreteType) -> bool {
        if let Some(&b) = self.memo.get(&t) {
            return b;
        }
        let b = self.sig.type_holds(&self.formula, &t);
        self.memo.insert(t, b);
        b
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser_io::{parse_formula_with, Symbols};
    use crate::syntax::Language;

    fn parse(s: &str, lang: Language, sy: &mut Symbols) -> Formula {
        parse_formula_with(s, lang, sy).unwrap()
    }

    #[test]
    fn existential_is_one_type() {
        let mut sy = Symbols::new();
        let f = parse("exists x. F(x)", Language::Plain, &mut sy);
        let nf = monadic_nf(&f, &[]).unwrap();
        assert_eq!(nf.types.len(), 1);
        let t = &nf.types[0];
        assert_eq!(t.count_f, CountRange { lo: 1, hi: None });
        assert!(t.count_n.is_trivial());
    }

    #[test]
    fn literal_conjunction() {
        let mut sy = Symbols::new();
        let f = parse("F(x1) & F(x2) & ~F(y1)", Language::Plain, &mut sy);
        let named: Vec<Var> = ["x1", "x2", "y1"].iter().map(|n| sy.lookup_var(n).unwrap()).collect();
        let nf = monadic_nf(&f, &named).unwrap();
        assert_eq!(nf.types.len(), 1);
        assert_eq!(nf.types[0].literals, vec![Some(true), Some(true), Some(false)]);
        assert!(nf.types[0].count_f.is_trivial() && nf.types[0].count_n.is_trivial(), "{:?}", nf.types);
    }

    #[test]
    fn exactly_two_outside_f() {
        let mut sy = Symbols::new();
        let f = parse(
            "exists x. exists y. (x != y & ~F(x) & ~F(y) & forall z. (~F(z) -> z = x | z = y))",
            Language::Identity,
            &mut sy,
        );
        let nf = monadic_nf(&f, &[]).unwrap();
        assert_eq!(nf.types.len(), 1, "{nf}");
        assert_eq!(nf.types[0].count_n, CountRange { lo: 2, hi: Some(2) });
        assert!(nf.types[0].count_f.is_trivial());
    }

    #[test]
    fn rebuilt_formula_is_equivalent_on_all_types() {
        let mut sy = Symbols::new();
        for s in [
            "forall x. (F(x) -> x = y)",
            "exists x. exists z. (x != z & F(x) & F(z)) | ~F(y)",
            "(forall x. F(x)) | exists x. (x != y & ~F(x))",
        ] {
            let f = parse(s, Language::Identity, &mut sy);
            let y = sy.lookup_var("y").unwrap();
            let nf = monadic_nf(&f, &[y]).unwrap();
            let g = nf.to_formula();
            let sig = Signature { named: vec![y], identity: true, cap: f.quantifier_rank().max(g.quantifier_rank()) };
            for t in sig.all_types() {
                if sig.representative(&t).is_some() {
                    assert_eq!(sig.type_holds(&f, &t), sig.type_holds(&g, &t), "{s} at {t:?}");
                }
            }
        }
    }

    #[test]
    fn normal_form_membership_matches_memo() {
        let mut sy = Symbols::new();
        for (s, lang) in [
            ("forall x. (F(x) -> x = y)", Language::Identity),
            ("exists x. (~F(x) & x != y) -> F(y)", Language::Identity),
            ("(exists x. F(x)) & ~F(y) & forall x. ~F(x) | F(y)", Language::Plain),
        ] {
            let f = parse(s, lang, &mut sy);
            let y = sy.lookup_var("y").unwrap();
            let nf = monadic_nf(&f, &[y]).unwrap();
            let mut memo = TypeMemo::new(f.clone(), vec![y]);
            for t in memo.sig.all_types() {
                if memo.sig.representative(&t).is_some() {
                    assert_eq!(nf.holds(&t), memo.holds(t.clone()), "{s} at {t:?}");
                }
            }
        }
    }

    #[test]
    fn rejects_conditionals() {
        let mut sy = Symbols::new();
        let f = parse("F(x) > F(x)", Language::Plain, &mut sy);
        assert!(matches!(monadic_nf(&f, &f.free_vars().into_iter().collect::<Vec<_>>()), Err(KError::NonMonadic(_))));
    }
}
