//! Seeded random formulas and random Stalnakerian ordering models, for the
//! property suites and the CLI's `--seed` option.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::semantics::{BitSet, Frame, FrameBase, Interpretation, Model, OrderingFrame, PredTable};
use crate::syntax::{Formula, Language, Predicate, Var};

/// Shape of generated formulas.
#[derive(Clone, Debug)]
pub struct FormulaGen {
    pub lang: Language,
    /// Variables `x0 … x(n-1)`, i.e. `Var(0) … Var(n-1)`.
    pub n_vars: u32,
    pub predicates: Vec<Predicate>,
    pub conditionals: bool,
}

impl FormulaGen {
    /// The K fragment: `F/1` only.
    pub fn k_fragment(lang: Language, n_vars: u32) -> Self {
        FormulaGen { lang, n_vars, predicates: vec![crate::syntax::predicate_f()], conditionals: true }
    }

    fn var<R: Rng>(&self, rng: &mut R) -> Var {
        Var(rng.gen_range(0..self.n_vars))
    }

    fn atom<R: Rng>(&self, rng: &mut R) -> Formula {
        let mut kinds = 1 + self.predicates.len();
        let extra = matches!(self.lang, Language::Identity | Language::Existence);
        if extra {
            kinds += 1;
        }
        let k = rng.gen_range(0..kinds);
        if k == 0 {
            return Formula::Bot;
        }
        if extra && k == kinds - 1 {
            return match self.lang {
                Language::Identity => Formula::eq(self.var(rng), self.var(rng)),
                _ => Formula::exists_pred(self.var(rng)),
            };
        }
        let p = &self.predicates[k - 1];
        let args = (0..p.arity()).map(|_| self.var(rng)).collect();
        Formula::Atom(p.clone(), args)
    }

    /// A formula with exactly `size` core nodes.
    pub fn formula<R: Rng>(&self, rng: &mut R, size: usize) -> Formula {
        assert!(size >= 1);
        if size == 1 {
            return self.atom(rng);
        }
        let binary = size >= 3;
        let choice = rng.gen_range(0..if binary { 4 } else { 2 });
        match choice {
            0 => Formula::not(self.formula(rng, size - 1)),
            1 => Formula::forall(self.var(rng), self.formula(rng, size - 1)),
            _ => {
                let left = rng.gen_range(1..size - 1);
                let a = self.formula(rng, left);
                let b = self.formula(rng, size - 1 - left);
                if choice == 3 && self.conditionals {
                    Formula::cond(a, b)
                } else {
                    Formula::implies(a, b)
                }
            }
        }
    }

    /// `count` formulas with sizes uniform in `1..=max_size`.
    pub fn corpus<R: Rng>(&self, rng: &mut R, count: usize, max_size: usize) -> Vec<Formula> {
        (0..count)
            .map(|_| {
                let size = rng.gen_range(1..=max_size);
                self.formula(rng, size)
            })
            .collect()
    }
}

/// A random ordering model whose orders are strict chains on `R(w)`
/// starting at `w`, with constant domain and a random interpretation of
/// `predicates`.
pub fn random_stalnakerian_ordering<R: Rng>(
    rng: &mut R,
    max_worlds: usize,
    max_domain: usize,
    predicates: &[Predicate],
) -> Model {
    let n = rng.gen_range(1..=max_worlds);
    let nd = rng.gen_range(1..=max_domain);
    let access: Vec<BitSet> = (0..n).map(|w| BitSet(rng.gen_range(0..1u64 << n)).with(w)).collect();
    let base = FrameBase::anonymous(access.clone(), nd, vec![BitSet::full(nd); n]).expect("valid base");
    let pairs: Vec<Vec<(usize, usize)>> = (0..n)
        .map(|w| {
            let mut rest: Vec<usize> = access[w].without(w).iter().collect();
            rest.shuffle(rng);
            let chain: Vec<usize> = std::iter::once(w).chain(rest).collect();
            let mut rel = Vec::new();
            for (i, &x) in chain.iter().enumerate() {
                for &y in &chain[i..] {
                    rel.push((x, y));
                }
            }
            rel
        })
        .collect();
    let frame = OrderingFrame::new(base, &pairs).expect("chains lie inside R(w)");
    let mut interp = Interpretation::new();
    for p in predicates {
        let mut t = PredTable::empty(p.arity(), n, nd);
        let cells: Vec<bool> = (0..n * t.stride()).map(|_| rng.gen_bool(0.5)).collect();
        t.set_all_from(&cells);
        interp.insert(p.clone(), t);
    }
    Model::new(Frame::Ordering(frame), interp)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frame_props::{check_ordering_props, Condition};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn sizes_are_exact() {
        let gen = FormulaGen::k_fragment(Language::Identity, 2);
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for size in 1..12 {
            let f = gen.formula(&mut rng, size);
            assert_eq!(f.size(), size);
            assert!(f.check_language(Language::Identity).is_ok());
        }
    }

    #[test]
    fn seeded_corpora_repeat() {
        let gen = FormulaGen::k_fragment(Language::Plain, 2);
        let a = gen.corpus(&mut ChaCha8Rng::seed_from_u64(7), 50, 9);
        let b = gen.corpus(&mut ChaCha8Rng::seed_from_u64(7), 50, 9);
        assert_eq!(a, b);
    }

    #[test]
    fn random_orderings_are_stalnakerian() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..50 {
            let m = random_stalnakerian_ordering(&mut rng, 4, 2, &[crate::syntax::predicate_f()]);
            let Frame::Ordering(o) = &m.frame else { unreachable!() };
            let r = check_ordering_props(o).unwrap();
            assert!(Condition::ORDERING.iter().all(|&c| r.holds(c) == Some(true)), "{r:?}");
        }
    }
}
