//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Criteria 3 and 5 are known to fail (see `KNOWN_FAILURES`); the target
//! exits nonzero only when the set of failing criteria differs from it.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use condlog::corpus::{random_stalnakerian_ordering, FormulaGen};
use condlog::frame_props::{check_selection_props, Condition};
use condlog::kmodel::{cem_sweep, eval_k, truncate, truncation_oracle, CemReport, KAssignment, KWorld, SweepConfig};
use condlog::logic_systems::{single_line_mutations, verify_proof};
use condlog::parser_io::{load_model, load_proof, parse_assignment, parse_formula, parse_formula_with, Symbols};
use condlog::search::{
    compactness_prefix, compactness_witness, correspondence_sweep, ds_sweep, AccessPolicy, DsMode, EnumerationParams,
};
use condlog::semantics::{eval, for_each_assignment, ordering_to_selection, selection_to_ordering, Assignment, Frame};
use condlog::{build_ds, Exec, Language, Predicate};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Criteria expected to fail, with the reason recorded alongside.
const KNOWN_FAILURES: [u32; 2] = [3, 5];

const SEED: u64 = 0;

fn fixture(name: &str) -> String {
    std::fs::read_to_string(format!("{}/fixtures/{name}", env!("CARGO_MANIFEST_DIR"))).expect("fixture exists")
}

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

fn remark_frame() -> condlog::semantics::Model {
    load_model(&fixture("remark25.json")).expect("fixture loads")
}

fn c1() -> Outcome {
    let m = remark_frame();
    let Frame::Selection(s) = &m.frame else { return outcome(false, "not a selection frame") };
    let r = check_selection_props(s).expect("two worlds");
    let la = r.verdicts[&Condition::LimitAssumption].witness.clone();
    let (one, two) = (m.base().world_index("1").unwrap(), m.base().world_index("2").unwrap());
    let la_ok = la.as_ref().is_some_and(|w| w.world == one && w.p == Some(condlog::semantics::BitSet::singleton(two)));
    let pass = r.weakly_stalnakerian() == Some(true) && r.stalnakerian() == Some(false) && la_ok;
    outcome(
        pass,
        format!(
            "weaklyStalnakerian={:?} stalnakerian={:?} LA witness (P={{2}}, w=1): {la_ok}",
            r.weakly_stalnakerian(),
            r.stalnakerian()
        ),
    )
}

fn c2() -> Outcome {
    let m = remark_frame();
    let mut sy = Symbols::new();
    let boxed = parse_formula_with("box P(x)", Language::Plain, &mut sy).unwrap();
    let plain = parse_formula_with("P(x)", Language::Plain, &mut sy).unwrap();
    let g = parse_assignment("x=a", &mut sy, m.base()).unwrap();
    let (one, two) = (m.base().world_index("1").unwrap(), m.base().world_index("2").unwrap());
    let at1 = eval(&m, one, &g, &boxed).unwrap();
    let at2 = eval(&m, two, &g, &plain).unwrap();
    outcome(at1 && !at2, format!("box P(x) at 1: {at1}; P(x) at 2: {at2}"))
}

fn c3() -> Outcome {
    let ds = build_ds();
    let k = eval_k(&ds, KWorld::MinusInf, &KAssignment::new()).unwrap();
    let t: Vec<bool> = [20, 21, 22].iter().map(|&n| eval(&truncate(n), n, &Assignment::new(), &ds).unwrap()).collect();
    let pass = k && t.iter().all(|&b| b == k);
    outcome(pass, format!("K at -inf: {k}; K_20, K_21, K_22 at -inf: {t:?}"))
}

fn sweep(lang: Language) -> CemReport {
    cem_sweep(&SweepConfig::new(7, 2, lang))
}

fn c4(l: &CemReport, eq: &CemReport) -> Outcome {
    let pass = [l, eq].iter().all(|r| r.counterexamples.is_empty() && r.diagnostics.is_empty());
    outcome(
        pass,
        format!(
            "L: {} formulas, {} counterexamples; L=: {} formulas, {} counterexamples; worlds -inf, -1..-9",
            l.formulas,
            l.counterexamples.len(),
            eq.formulas,
            eq.counterexamples.len()
        ),
    )
}

fn c5(l: &CemReport, eq: &CemReport) -> Outcome {
    let mut failing = Vec::new();
    let mut total = 0;
    for (lang, r) in [("L", l), ("L=", eq)] {
        for s in &r.schemas {
            total += s.instances;
            if s.failures > 0 {
                failing.push(format!("{lang} {}: {}/{} fail", s.name, s.failures, s.instances));
            }
        }
    }
    let detail =
        if failing.is_empty() { format!("{total} instances, all valid") } else { format!("{total} instances; {}", failing.join("; ")) };
    outcome(failing.is_empty(), detail)
}

fn c6() -> Outcome {
    let ws = EnumerationParams::weakly_stalnakerian();
    let strong = EnumerationParams::new(
        3,
        2,
        &[Condition::Success, Condition::WeakLimitAssumption, Condition::RationalMonotonicity],
        AccessPolicy::All,
    );
    let mut found = Vec::new();
    let mut frames = 0;
    for (name, p) in [("weakly Stalnakerian", &ws), ("Success+WLA+RM", &strong)] {
        for mode in [DsMode::Pointed, DsMode::Frames] {
            let o = ds_sweep(p, mode, Exec::Parallel).expect("within ceilings");
            if mode == DsMode::Frames {
                frames += o.stats.frames;
            }
            if o.found {
                found.push(format!("{name} {mode:?}"));
            }
        }
    }
    let conds = [Condition::Success, Condition::WeakCentering, Condition::Uniqueness];
    let control = EnumerationParams::new(3, 2, &conds, AccessPolicy::ReflexiveOnly);
    let c = ds_sweep(&control, DsMode::Pointed, Exec::Parallel).expect("within ceilings");
    let control_ok = c.witness.as_ref().is_some_and(|w| {
        let Frame::Selection(s) = &w.model.frame else { return false };
        check_selection_props(s).unwrap().holds(Condition::Uniformity) == Some(false)
    });
    let pass = found.is_empty() && control_ok;
    outcome(
        pass,
        format!(
            "{frames} canonical frames swept, DS models found: {}; control without Uniformity/WLA at |W|=3, |D|=2: {}",
            if found.is_empty() { "none".to_string() } else { found.join(", ") },
            if control_ok { "found" } else { "not found" }
        ),
    )
}

fn c7() -> Outcome {
    let p = EnumerationParams::new(2, 2, &[], AccessPolicy::All);
    let r = correspondence_sweep(&p, Exec::Parallel).expect("within ceilings");
    outcome(
        r.frames > 0 && r.agree == r.frames,
        format!("{}/{} frames agree ({} valid, {} with the properties)", r.agree, r.frames, r.instance_valid, r.properties_hold),
    )
}

fn c8() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let preds = vec![Predicate::new("F", 1), Predicate::new("G", 1), Predicate::new("P", 0)];
    let gen = FormulaGen { lang: Language::Plain, n_vars: 2, predicates: preds.clone(), conditionals: true };
    let corpus = gen.corpus(&mut rng, 50, 8);
    let mut checks = 0u64;
    let mut bad = Vec::new();
    for i in 0..200 {
        let m = random_stalnakerian_ordering(&mut rng, 4, 2, &preds);
        let sel = ordering_to_selection(&m).expect("chains are Stalnakerian");
        let back = selection_to_ordering(&sel).expect("converted frames are Stalnakerian");
        let (Frame::Ordering(o), Frame::Ordering(b)) = (&m.frame, &back.frame) else { unreachable!() };
        let n = m.base().n_worlds();
        if (0..n).any(|w| o.pairs(w) != b.pairs(w)) {
            bad.push(format!("model {i}: double conversion changes the order"));
        }
        for f in &corpus {
            let vars: Vec<_> = f.free_vars().into_iter().collect();
            for_each_assignment(&vars, m.base().n_domain(), |g| {
                for w in 0..n {
                    checks += 1;
                    if eval(&m, w, g, f).unwrap() != eval(&sel, w, g, f).unwrap() {
                        bad.push(format!("model {i}, world {w}: {}", condlog::parser_io::print_formula(f)));
                    }
                }
                None::<()>
            });
        }
    }
    outcome(bad.is_empty(), format!("200 models, 50 formulas, {checks} evaluations, {} disagreements", bad.len()))
}

fn c9() -> Outcome {
    let p = load_proof(&fixture("mod_qc2.json")).expect("fixture loads");
    let target = parse_formula("(~P > bot) -> (Q > P)", Language::Plain).unwrap();
    let verified = verify_proof(&p).is_accepted() && p.lines.last().map(|l| &l.formula) == Some(&target);
    let ms = single_line_mutations(&p);
    let survivors: Vec<&str> = ms
        .iter()
        .filter(|(_, q)| verify_proof(q).is_accepted() && q.lines.last().map(|l| &l.formula) == Some(&target))
        .map(|(d, _)| d.as_str())
        .collect();
    outcome(
        verified && survivors.is_empty(),
        format!("proof verifies: {verified}; {} mutations, {} accepted {:?}", ms.len(), survivors.len(), survivors),
    )
}

fn c10() -> Outcome {
    let gen = FormulaGen::k_fragment(Language::Plain, 2);
    let corpus = gen.corpus(&mut ChaCha8Rng::seed_from_u64(SEED), 500, 9);
    let r = truncation_oracle(&corpus, 6, Exec::Parallel);
    outcome(
        r.clean(),
        format!(
            "{} formulas, {} checks, {} mismatches, {} unstable windows, {} diagnostics",
            r.formulas,
            r.checks,
            r.mismatches.len(),
            r.unstable.len(),
            r.diagnostics.len()
        ),
    )
}

fn c11() -> Outcome {
    let mut sizes = Vec::new();
    let mut ok = true;
    for n in 1..=5 {
        let o = compactness_witness(n);
        let Some(w) = o.witness.filter(|_| o.found) else {
            ok = false;
            continue;
        };
        let Frame::Selection(s) = &w.model.frame else { unreachable!() };
        let stalnakerian = check_selection_props(s).unwrap().stalnakerian() == Some(true);
        let holds = compactness_prefix(n).iter().all(|f| eval(&w.model, w.world, &Assignment::new(), f).unwrap());
        ok &= stalnakerian && holds && w.model.base().n_worlds() <= n + 1;
        sizes.push(w.model.base().n_worlds());
    }
    outcome(ok, format!("witness sizes for n = 1..5: {sizes:?}"))
}

fn timed(results: &mut Vec<(u32, Outcome, Duration)>, id: u32, f: fn() -> Outcome) {
    let t = Instant::now();
    let o = f();
    results.push((id, o, t.elapsed()));
}

fn main() {
    let budgets: [(u32, Duration); 11] = [
        (1, Duration::from_secs(1)),
        (2, Duration::from_secs(1)),
        (3, Duration::from_secs(5)),
        (4, Duration::from_secs(600)),
        (5, Duration::from_secs(600)),
        (6, Duration::from_secs(900)),
        (7, Duration::from_secs(300)),
        (8, Duration::from_secs(120)),
        (9, Duration::from_secs(1)),
        (10, Duration::from_secs(300)),
        (11, Duration::from_secs(60)),
    ];
    let mut results: Vec<(u32, Outcome, Duration)> = Vec::new();
    timed(&mut results, 1, c1);
    timed(&mut results, 2, c2);
    timed(&mut results, 3, c3);
    let t = Instant::now();
    let l = sweep(Language::Plain);
    let eq = sweep(Language::Identity);
    let sweeps = t.elapsed();
    // criteria 4 and 5 share the sweeps; the budget applies to the pair
    results.push((4, c4(&l, &eq), sweeps));
    results.push((5, c5(&l, &eq), sweeps));
    timed(&mut results, 6, c6);
    timed(&mut results, 7, c7);
    timed(&mut results, 8, c8);
    timed(&mut results, 9, c9);
    timed(&mut results, 10, c10);
    timed(&mut results, 11, c11);

    let mut failing = BTreeSet::new();
    for (id, o, took) in &results {
        let budget = budgets[*id as usize - 1].1;
        let in_time = *took <= budget;
        let pass = o.pass && in_time;
        if !pass {
            failing.insert(*id);
        }
        let time = format!("{:.2}s of {}s", took.as_secs_f64(), budget.as_secs());
        let late = if in_time { "" } else { " OVER BUDGET" };
        println!("criterion {id:>2}: {} ({time}{late}) {}", if pass { "PASS" } else { "FAIL" }, o.detail);
    }
    let known: BTreeSet<u32> = KNOWN_FAILURES.into_iter().collect();
    println!("failing: {failing:?}; known failures: {known:?}");
    if failing != known {
        eprintln!("acceptance results differ from the recorded state");
        std::process::exit(1);
    }
}
