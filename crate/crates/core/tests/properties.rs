use condlog::corpus::{random_stalnakerian_ordering, FormulaGen};
use condlog::kmodel::{denote_k, eval_k, monadic_nf, truncation_oracle, KAssignment, KWorld};
use condlog::parser_io::{parse_formula, print_formula};
use condlog::semantics::{eval, for_each_assignment, ordering_to_selection, selection_to_ordering, Frame};
use condlog::syntax::f_atom;
use condlog::{Exec, Formula, Language, Predicate, Var};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn formula(seed: u64, lang: Language, max_size: usize) -> Formula {
    let gen = FormulaGen::k_fragment(lang, 2);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let size = 1 + (seed as usize % max_size);
    gen.formula(&mut rng, size)
}

fn assignment(f: &Formula, a: i64, b: i64) -> KAssignment {
    let mut g = KAssignment::new();
    for v in f.free_vars() {
        g.set(v, if v == Var(0) { a } else { b });
    }
    g
}

fn lang() -> impl Strategy<Value = Language> {
    prop_oneof![Just(Language::Plain), Just(Language::Existence), Just(Language::Identity)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn print_then_parse_is_alpha_equivalent(seed in any::<u64>(), lang in lang()) {
        let f = formula(seed, lang, 14);
        let text = print_formula(&f);
        let back = parse_formula(&text, lang).unwrap();
        prop_assert!(back.alpha_eq(&f), "{} reparsed as {}", text, print_formula(&back));
    }

    #[test]
    fn conditionals_are_material_at_integer_worlds(seed in any::<u64>(), a in -6i64..=-1, b in -6i64..=-1, k in -8i64..=-1) {
        let f = formula(seed, Language::Plain, 10);
        let g = assignment(&f, a, b);
        let w = KWorld::Int(k);
        prop_assert_eq!(eval_k(&f, w, &g).unwrap(), eval_k(&f.material_reduct(), w, &g).unwrap());
    }

    #[test]
    fn f_is_monotone_in_its_argument(a in -20i64..=-1, b in -20i64..=-1) {
        let (x, y) = (Var(0), Var(1));
        let g: KAssignment = [(x, a.max(b)), (y, a.min(b))].into_iter().collect();
        let fx = denote_k(&f_atom(x), &g).unwrap();
        let fy = denote_k(&f_atom(y), &g).unwrap();
        prop_assert!(fx.is_subset(&fy));
    }

    #[test]
    fn normal_forms_preserve_denotations(seed in any::<u64>(), a in -5i64..=-1, b in -5i64..=-1) {
        let f = formula(seed, Language::Plain, 9).material_reduct();
        let g = assignment(&f, a, b);
        prop_assume!(!eval_k(&f, KWorld::MinusInf, &g).unwrap());
        let named: Vec<Var> = f.free_vars().into_iter().collect();
        let nf = monadic_nf(&f, &named).unwrap();
        prop_assert_eq!(denote_k(&f, &g).unwrap(), denote_k(&nf.to_formula(), &g).unwrap());
    }

    #[test]
    fn identity_normal_forms_preserve_denotations(seed in any::<u64>(), a in -4i64..=-1, b in -4i64..=-1) {
        let f = formula(seed, Language::Identity, 8).material_reduct();
        let g = assignment(&f, a, b);
        prop_assume!(!eval_k(&f, KWorld::MinusInf, &g).unwrap());
        let named: Vec<Var> = f.free_vars().into_iter().collect();
        let nf = monadic_nf(&f, &named).unwrap();
        prop_assert_eq!(denote_k(&f, &g).unwrap(), denote_k(&nf.to_formula(), &g).unwrap());
    }

    #[test]
    fn a_ray_cannot_split(s1 in any::<u64>(), s2 in any::<u64>(), a in -6i64..=-1, b in -6i64..=-1) {
        let (p, q) = (formula(s1, Language::Identity, 9), formula(s2, Language::Identity, 9));
        let (gp, gq) = (assignment(&p, a, b), assignment(&q, a, b));
        let dp = denote_k(&p, &gp).unwrap();
        let dq = denote_k(&q, &gq).unwrap();
        prop_assert!(!(dp.difference(&dq).has_ray() && dp.intersection(&dq).has_ray()));
    }

    #[test]
    fn cem_holds_on_random_pairs(s1 in any::<u64>(), s2 in any::<u64>(), a in -6i64..=-1, b in -6i64..=-1) {
        let (p, q) = (formula(s1, Language::Plain, 8), formula(s2, Language::Plain, 8));
        let cem = condlog::syntax::build_cem(p, q);
        let g = assignment(&cem, a, b);
        prop_assert!(eval_k(&cem, KWorld::MinusInf, &g).unwrap());
    }

    /// Truncations agree with K at the integer worlds. At `−∞` they can
    /// differ, always by a quantifier reaching the truncation's least element.
    #[test]
    fn truncations_agree_at_integer_worlds(seed in any::<u64>()) {
        let f = formula(seed, Language::Plain, 9);
        let r = truncation_oracle(std::slice::from_ref(&f), 4, Exec::Sequential);
        prop_assert!(r.unstable.is_empty() && r.diagnostics.is_empty(), "{:?}", r);
        prop_assert!(r.mismatches.iter().all(|m| m.world == KWorld::MinusInf && m.k), "{:?}", r.mismatches);
    }

    #[test]
    fn conversion_preserves_truth(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let preds = [Predicate::new("F", 1), Predicate::new("P", 0)];
        let m = random_stalnakerian_ordering(&mut rng, 4, 2, &preds);
        let sel = ordering_to_selection(&m).unwrap();
        let back = selection_to_ordering(&sel).unwrap();
        let (Frame::Ordering(o), Frame::Ordering(b)) = (&m.frame, &back.frame) else { unreachable!() };
        for w in 0..m.base().n_worlds() {
            prop_assert_eq!(o.pairs(w), b.pairs(w));
        }
        let gen = FormulaGen { lang: Language::Plain, n_vars: 2, predicates: preds.to_vec(), conditionals: true };
        for f in gen.corpus(&mut rng, 10, 8) {
            let vars: Vec<_> = f.free_vars().into_iter().collect();
            let bad = for_each_assignment(&vars, m.base().n_domain(), |g| {
                (0..m.base().n_worlds()).find(|&w| eval(&m, w, g, &f).unwrap() != eval(&sel, w, g, &f).unwrap())
            });
            prop_assert!(bad.is_none(), "{}", print_formula(&f));
        }
    }
}
