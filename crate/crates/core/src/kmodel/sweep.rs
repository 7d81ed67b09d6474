//! Exhaustive CEM sweep over K, with the other QC2 schemas checked on the
//! same formula pool.

use std::collections::HashMap;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::eval::{cond_denotation, KEvaluator};
use super::worldset::SymbolicWorldSet;
use super::{KAssignment, KError, KWorld};
use crate::logic_systems::{schema_instance, SchemaId};
use crate::par::{self, Exec};
use crate::syntax::{f_atom, Formula, Language, Var};

#[derive(Clone, Debug, serde::Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SweepConfig {
    pub max_size: usize,
    pub max_vars: usize,
    pub language: Language,
    /// Also sweep every assignment of the variables into
    /// `{−1, …, −(max_vars+1)}`, not only the canonical one.
    pub all_assignments: bool,
    /// Class pairs whose CEM instance is re-checked by evaluating the
    /// instance formula itself, on top of the check on denotations.
    pub verify_classes: usize,
    /// Random samples for the rule 26 spot checks.
    pub rule_samples: usize,
    pub seed: u64,
    #[serde(skip)]
    pub exec: Exec,
}

impl SweepConfig {
    pub fn new(max_size: usize, max_vars: usize, language: Language) -> Self {
        SweepConfig {
            max_size,
            max_vars,
            language,
            all_assignments: false,
            verify_classes: 60,
            rule_samples: 4000,
            seed: 0,
            exec: Exec::default(),
        }
    }

    /// Integer worlds checked by name: `−1 … −(max_size+2)`.
    pub fn worlds(&self) -> Vec<KWorld> {
        std::iter::once(KWorld::MinusInf).chain((1..=self.max_size as i64 + 2).map(|k| KWorld::Int(-k))).collect()
    }

    fn vars(&self) -> Vec<Var> {
        (0..self.max_vars as u32).map(Var).collect()
    }

    /// The canonical assignment `x_i ↦ −(i+1)`, or all assignments into
    /// `{−1, …, −(max_vars+1)}`.
    pub fn assignments(&self) -> Vec<KAssignment> {
        let vars = self.vars();
        if !self.all_assignments {
            return vec![vars.iter().enumerate().map(|(i, &v)| (v, -(i as i64) - 1)).collect()];
        }
        let m = self.max_vars as i64 + 1;
        let mut out = Vec::new();
        let total = (m as usize).pow(vars.len() as u32);
        for code in 0..total {
            let mut c = code;
            let g: KAssignment = vars
                .iter()
                .map(|&v| {
                    let val = -((c % m as usize) as i64) - 1;
                    c /= m as usize;
                    (v, val)
                })
                .collect();
            out.push(g);
        }
        out
    }
}

fn atoms(vars: &[Var], lang: Language) -> Vec<Formula> {
    let mut out = vec![Formula::Bot];
    out.extend(vars.iter().map(|&v| f_atom(v)));
    match lang {
        Language::Identity => {
            for &a in vars {
                for &b in vars {
                    out.push(Formula::eq(a, b));
                }
            }
        }
        Language::Existence => out.extend(vars.iter().map(|&v| Formula::Existence(v))),
        Language::Plain => {}
    }
    out
}

/// Calls `sink` on every formula of exactly `size` nodes, given all
/// smaller layers.
fn layer(layers: &[Vec<Formula>], size: usize, vars: &[Var], lang: Language, sink: &mut dyn FnMut(Formula)) {
    if size == 1 {
        atoms(vars, lang).into_iter().for_each(sink);
        return;
    }
    for a in &layers[size - 1] {
        sink(Formula::not(a.clone()));
        for &v in vars {
            sink(Formula::forall(v, a.clone()));
        }
    }
    for left in 1..size - 1 {
        let right = size - 1 - left;
        for a in &layers[left] {
            for b in &layers[right] {
                sink(Formula::implies(a.clone(), b.clone()));
                sink(Formula::cond(a.clone(), b.clone()));
            }
        }
    }
}

/// Every formula over `F`, the given variables, `⊥`, `¬`, `⊃`, `>` and
/// `∀` (plus `=` or `E` by language) with at most `max_size` nodes,
/// smallest first.
pub fn formula_pool(max_size: usize, n_vars: usize, lang: Language) -> Vec<Formula> {
    let vars: Vec<Var> = (0..n_vars as u32).map(Var).collect();
    let mut layers: Vec<Vec<Formula>> = vec![Vec::new()];
    for size in 1..=max_size {
        let mut cur = Vec::new();
        layer(&layers, size, &vars, lang, &mut |f| cur.push(f));
        layers.push(cur);
    }
    layers.into_iter().flatten().collect()
}

#[derive(Clone, Debug, serde::Serialize)]
pub struct CemCounterexample {
    pub phi: String,
    pub psi: String,
    pub world: KWorld,
    pub assignment: String,
}

#[derive(Clone, Debug, Default, serde::Serialize)]
pub struct SchemaCheck {
    pub name: String,
    pub instances: usize,
    pub failures: usize,
    /// A few failing instances, printed.
    pub examples: Vec<String>,
}

impl SchemaCheck {
    fn new(name: &str) -> Self {
        SchemaCheck { name: name.into(), ..Default::default() }
    }

    fn record(&mut self, ok: bool, show: impl FnOnce() -> String) {
        self.instances += 1;
        if !ok {
            self.failures += 1;
            if self.examples.len() < 5 {
                self.examples.push(show());
            }
        }
    }

    fn absorb(&mut self, other: SchemaCheck) {
        self.instances += other.instances;
        self.failures += other.failures;
        for e in other.examples {
            if self.examples.len() < 5 {
                self.examples.push(e);
            }
        }
    }
}

#[derive(Clone, Debug, serde::Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CemReport {
    pub config: SweepConfig,
    pub formulas: usize,
    /// Formulas grouped by their denotations under every assignment.
    pub classes: usize,
    pub assignments: usize,
    pub worlds: Vec<KWorld>,
    /// Class pairs checked on denotations (per assignment).
    pub cem_pairs: usize,
    /// Class pairs whose instance formula was evaluated directly.
    pub cem_verified_pairs: usize,
    pub counterexamples: Vec<CemCounterexample>,
    pub schemas: Vec<SchemaCheck>,
    pub diagnostics: Vec<String>,
}

impl CemReport {
    pub fn clean(&self) -> bool {
        self.counterexamples.is_empty() && self.diagnostics.is_empty() && self.schemas.iter().all(|s| s.failures == 0)
    }
}

struct Class {
    rep: Formula,
    key: Vec<SymbolicWorldSet>,
}

const CHUNK: usize = 512;

fn show_g(g: &KAssignment) -> String {
    g.0.iter().map(|(v, k)| format!("{v}={k}")).collect::<Vec<_>>().join(", ")
}

/// Denotation of each formula under each assignment.
fn denote_all(
    exec: Exec,
    formulas: &[Formula],
    gs: &[KAssignment],
) -> Vec<Result<Vec<SymbolicWorldSet>, KError>> {
    let chunks: Vec<&[Formula]> = formulas.chunks(CHUNK).collect();
    par::map(exec, &chunks, |chunk| {
        let mut ev = KEvaluator::new();
        chunk.iter().map(|f| gs.iter().map(|g| ev.denote(f, g)).collect::<Result<Vec<_>, _>>()).collect::<Vec<_>>()
    })
    .into_iter()
    .flatten()
    .collect()
}

/// Sweeps CEM over every pair of pool formulas, and axioms 19, 20, 21, 23,
/// 24 and rule 26 over instances built from the pool.
///
/// Truth of `(φ>ψ) ∨ (φ>¬ψ)` depends only on the denotations of `φ` and
/// `ψ`, so the pool is first grouped into denotation classes; pairs of
/// classes cover all pairs of formulas.
pub fn cem_sweep(cfg: &SweepConfig) -> CemReport {
    let gs = cfg.assignments();
    let vars = cfg.vars();
    let worlds = cfg.worlds();
    let mut diagnostics = Vec::new();

    // Pool layers, classified as they are produced.
    let mut layers: Vec<Vec<Formula>> = vec![Vec::new()];
    let mut classes: Vec<Class> = Vec::new();
    let mut index: HashMap<Vec<SymbolicWorldSet>, usize> = HashMap::new();
    let mut formulas = 0usize;
    let mut schema23 = SchemaCheck::new("axiom 23");
    let mut classify = |batch: &[Formula], classes: &mut Vec<Class>, diagnostics: &mut Vec<String>| {
        for (f, r) in batch.iter().zip(denote_all(cfg.exec, batch, &gs)) {
            match r {
                Ok(key) => {
                    if !index.contains_key(&key) {
                        index.insert(key.clone(), classes.len());
                        classes.push(Class { rep: f.clone(), key });
                    }
                }
                Err(e) => diagnostics.push(format!("{f}: {e}")),
            }
        }
    };
    for size in 1..=cfg.max_size {
        let keep = size < cfg.max_size;
        let mut cur = Vec::new();
        let mut batch = Vec::new();
        layer(&layers, size, &vars, cfg.language, &mut |f| {
            batch.push(f);
            if batch.len() >= 64 * CHUNK {
                formulas += batch.len();
                classify(&batch, &mut classes, &mut diagnostics);
                if keep {
                    cur.append(&mut batch);
                } else {
                    batch.clear();
                }
            }
        });
        formulas += batch.len();
        classify(&batch, &mut classes, &mut diagnostics);
        if keep {
            cur.append(&mut batch);
        }
        layers.push(cur);
    }

    // Axiom 23 on every pool formula small enough for ∀xφ to be in the pool.
    let small: Vec<&Formula> = layers.iter().flatten().collect();
    let instances23: Vec<Formula> = small
        .iter()
        .flat_map(|phi| {
            let mut v = Vec::new();
            for &x in &vars {
                for &y in &vars {
                    let fs = [(*phi).clone(), Formula::Bot, Formula::Bot];
                    v.extend(schema_instance(SchemaId::A23, &fs, [x, y], cfg.language));
                }
            }
            v
        })
        .collect();
    schema23.absorb(check_valid(cfg.exec, "axiom 23", &instances23, &gs));

    // Axiom 24 on pairs small enough for ∀x(φ>ψ) to be in the pool.
    let mut instances24 = Vec::new();
    for a in 1..cfg.max_size {
        for b in 1..cfg.max_size {
            if a + b + 2 > cfg.max_size {
                continue;
            }
            for phi in &layers[a] {
                for psi in &layers[b] {
                    for &x in &vars {
                        let fs = [phi.clone(), psi.clone(), Formula::Bot];
                        instances24.extend(schema_instance(SchemaId::A24, &fs, [x, x], cfg.language));
                    }
                }
            }
        }
    }
    let schema24 = check_valid(cfg.exec, "axiom 24", &instances24, &gs);
    drop(layers);

    // CEM and the propositional schemas on denotation classes.
    let n = classes.len();
    let all = SymbolicWorldSet::all();
    let cem_rows: Vec<(usize, Vec<CemCounterexample>)> = par::map_range(cfg.exec, n, |i| {
        let mut found = Vec::new();
        let mut checked = 0;
        for j in 0..n {
            for (k, g) in gs.iter().enumerate() {
                let (a, b) = (&classes[i].key[k], &classes[j].key[k]);
                checked += 1;
                let d = cond_denotation(a, b).union(&cond_denotation(a, &b.complement()));
                if d != all {
                    let world = first_missing(&d);
                    found.push(CemCounterexample {
                        phi: classes[i].rep.to_string(),
                        psi: classes[j].rep.to_string(),
                        world,
                        assignment: show_g(g),
                    });
                }
            }
        }
        (checked, found)
    });
    let cem_pairs = cem_rows.iter().map(|r| r.0).sum();
    let mut counterexamples: Vec<CemCounterexample> = cem_rows.into_iter().flat_map(|r| r.1).collect();

    // Direct evaluation of the CEM formula on the first classes.
    let m = n.min(cfg.verify_classes);
    let verified: Vec<Vec<CemCounterexample>> = par::map_range(cfg.exec, m, |i| {
        let mut ev = KEvaluator::new();
        let mut found = Vec::new();
        for j in 0..m {
            let (phi, psi) = (&classes[i].rep, &classes[j].rep);
            let cem = Formula::or(Formula::cond(phi.clone(), psi.clone()), Formula::cond(phi.clone(), Formula::not(psi.clone())));
            for g in &gs {
                for &w in &worlds {
                    match ev.eval(&cem, w, g) {
                        Ok(true) => {}
                        Ok(false) | Err(_) => found.push(CemCounterexample {
                            phi: phi.to_string(),
                            psi: psi.to_string(),
                            world: w,
                            assignment: show_g(g),
                        }),
                    }
                }
            }
        }
        found
    });
    counterexamples.extend(verified.into_iter().flatten());

    let mut schemas = vec![
        class_schema(cfg.exec, "axiom 19", &classes, &gs, 1, |d| cond_denotation(d[0], d[0])),
        class_schema(cfg.exec, "axiom 20", &classes, &gs, 3, |d| {
            let (a, b, c) = (d[0], d[1], d[2]);
            let lhs = cond_denotation(a, b).intersection(&cond_denotation(b, a)).intersection(&cond_denotation(a, c));
            lhs.complement().union(&cond_denotation(b, c))
        }),
        class_schema(cfg.exec, "axiom 21", &classes, &gs, 2, |d| {
            cond_denotation(d[0], d[1]).complement().union(&d[0].complement().union(d[1]))
        }),
        schema23,
        schema24,
    ];
    schemas.push(rule26_spot_checks(cfg, &classes, &gs));
    // The set-level checks are only as good as the formulas behind them.
    schemas.push(verify_class_instances(cfg, &classes, &gs));

    CemReport {
        config: cfg.clone(),
        formulas,
        classes: n,
        assignments: gs.len(),
        worlds,
        cem_pairs,
        cem_verified_pairs: m * m,
        counterexamples,
        schemas,
        diagnostics,
    }
}

fn first_missing(d: &SymbolicWorldSet) -> KWorld {
    let missing = d.complement();
    if missing.minus_inf() {
        return KWorld::MinusInf;
    }
    match (missing.intervals().last(), missing.ray()) {
        (Some(&(_, hi)), _) => KWorld::Int(hi),
        (None, Some(b)) => KWorld::Int(b),
        (None, None) => unreachable!("d is not everything"),
    }
}

/// Checks that each formula denotes every world under every assignment.
fn check_valid(exec: Exec, name: &str, formulas: &[Formula], gs: &[KAssignment]) -> SchemaCheck {
    let chunks: Vec<&[Formula]> = formulas.chunks(CHUNK).collect();
    let parts = par::map(exec, &chunks, |chunk| {
        let mut ev = KEvaluator::new();
        let mut check = SchemaCheck::new(name);
        for f in *chunk {
            for g in gs {
                let r = ev.denote(f, g);
                check.record(matches!(&r, Ok(d) if *d == SymbolicWorldSet::all()), || match r {
                    Ok(d) => format!("{f} under {} holds only at {d}", show_g(g)),
                    Err(e) => format!("{f}: {e}"),
                });
            }
        }
        check
    });
    let mut total = SchemaCheck::new(name);
    for p in parts {
        total.absorb(p);
    }
    total
}

/// Checks a schema on every tuple of classes, computing the instance's
/// denotation from the classes' denotations.
fn class_schema(
    exec: Exec,
    name: &str,
    classes: &[Class],
    gs: &[KAssignment],
    arity: usize,
    denote: impl Fn(&[&SymbolicWorldSet]) -> SymbolicWorldSet + Sync + Send,
) -> SchemaCheck {
    let n = classes.len();
    let all = SymbolicWorldSet::all();
    let parts = par::map_range(exec, n, |i| {
        let mut check = SchemaCheck::new(name);
        let rest = n.pow(arity as u32 - 1);
        for code in 0..rest {
            let mut idx = vec![i];
            let mut c = code;
            for _ in 1..arity {
                idx.push(c % n);
                c /= n;
            }
            for k in 0..gs.len() {
                let ds: Vec<&SymbolicWorldSet> = idx.iter().map(|&j| &classes[j].key[k]).collect();
                let d = denote(&ds);
                check.record(d == all, || {
                    let reps: Vec<String> = idx.iter().map(|&j| classes[j].rep.to_string()).collect();
                    format!("[{}] under {}: {d}", reps.join("; "), show_g(&gs[k]))
                });
            }
        }
        check
    });
    let mut total = SchemaCheck::new(name);
    for p in parts {
        total.absorb(p);
    }
    total
}

/// Evaluates instances of axioms 19, 20 and 21 built from class
/// representatives as formulas, for the first classes.
fn verify_class_instances(cfg: &SweepConfig, classes: &[Class], gs: &[KAssignment]) -> SchemaCheck {
    let m = classes.len().min(cfg.verify_classes / 4).max(1.min(classes.len()));
    let reps: Vec<Formula> = classes[..m].iter().map(|c| c.rep.clone()).collect();
    let mut instances = Vec::new();
    let v = [Var(0), Var(0)];
    for a in &reps {
        instances.extend(schema_instance(SchemaId::A19, &[a.clone(), Formula::Bot, Formula::Bot], v, cfg.language));
        for b in &reps {
            instances.extend(schema_instance(SchemaId::A21, &[a.clone(), b.clone(), Formula::Bot], v, cfg.language));
            for c in &reps {
                instances.extend(schema_instance(SchemaId::A20, &[a.clone(), b.clone(), c.clone()], v, cfg.language));
            }
        }
    }
    check_valid(cfg.exec, "axioms 19-21 evaluated directly", &instances, gs)
}

/// Rule 26 with `n = 2`: whenever `(ψ1 ∧ ψ2) ⊃ χ` holds everywhere in K,
/// so does `((φ>ψ1) ∧ (φ>ψ2)) ⊃ (φ>χ)`.
fn rule26_spot_checks(cfg: &SweepConfig, classes: &[Class], gs: &[KAssignment]) -> SchemaCheck {
    let mut check = SchemaCheck::new("rule 26");
    if classes.is_empty() {
        return check;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let idx: Vec<usize> = (0..classes.len()).collect();
    let mut ev = KEvaluator::new();
    let all = SymbolicWorldSet::all();
    for s in 0..cfg.rule_samples {
        let pick = |rng: &mut ChaCha8Rng| &classes[*idx.choose(rng).expect("nonempty")].rep;
        let (phi, p1, p2) = (pick(&mut rng), pick(&mut rng), pick(&mut rng));
        // Mix premises that are valid by construction with random ones.
        let chi = match s % 4 {
            0 => p1.clone(),
            1 => Formula::or(p1.clone(), pick(&mut rng).clone()),
            2 => Formula::and(p2.clone(), p1.clone()),
            _ => pick(&mut rng).clone(),
        };
        let premise = Formula::implies(Formula::and(p1.clone(), p2.clone()), chi.clone());
        let conclusion = Formula::implies(
            Formula::and(Formula::cond(phi.clone(), p1.clone()), Formula::cond(phi.clone(), p2.clone())),
            Formula::cond(phi.clone(), chi),
        );
        debug_assert!(crate::logic_systems::check_rule(crate::logic_systems::RuleId::R26, &[&premise], &conclusion).is_ok());
        for g in gs {
            let (Ok(pd), Ok(cd)) = (ev.denote(&premise, g), ev.denote(&conclusion, g)) else {
                check.record(false, || format!("{conclusion}: evaluation failed"));
                continue;
            };
            if pd == all {
                check.record(cd == all, || format!("{conclusion} under {}: {cd}", show_g(g)));
            }
        }
    }
    check
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pool_sizes() {
        // 3 atoms; unary ¬, ∀x0, ∀x1; binary ⊃, >
        assert_eq!(formula_pool(1, 2, Language::Plain).len(), 3);
        assert_eq!(formula_pool(2, 2, Language::Plain).len(), 3 + 9);
        assert_eq!(formula_pool(3, 2, Language::Plain).len(), 3 + 9 + 45);
    }

    #[test]
    fn small_sweep_is_clean() {
        let mut cfg = SweepConfig::new(4, 2, Language::Plain);
        cfg.rule_samples = 200;
        let r = cem_sweep(&cfg);
        assert!(r.clean(), "{:?}", (&r.counterexamples, &r.schemas, &r.diagnostics));
        assert!(r.classes > 1);
    }

    /// `φ` denotes a ray without a least element, and `φ > ¬F(a)` holds at
    /// `−∞` for each `a` separately but not uniformly.
    #[test]
    fn barcan_fails_at_origin() {
        let mut sy = crate::parser_io::Symbols::new();
        let f = crate::parser_io::parse_formula_with(
            "(forall y. ((exists z. F(z)) & ~F(x) > ~F(y))) -> ((exists z. F(z)) & ~F(x) > forall y. ~F(y))",
            Language::Plain,
            &mut sy,
        )
        .unwrap();
        let x = sy.lookup_var("x").unwrap();
        let g = KAssignment::default().with(x, -1);
        let d = super::super::denote_k(&f, &g).unwrap();
        assert_eq!(d, SymbolicWorldSet::integers());
        // the per-instance conditionals do hold at −∞
        let inst = crate::parser_io::parse_formula_with("(exists z. F(z)) & ~F(x) > ~F(y)", Language::Plain, &mut sy).unwrap();
        let y = sy.lookup_var("y").unwrap();
        for a in -12..=-1 {
            assert!(super::super::eval_k(&inst, KWorld::MinusInf, &g.clone().with(y, a)).unwrap());
        }
    }

    #[test]
    fn small_identity_sweep_all_assignments() {
        let mut cfg = SweepConfig::new(3, 2, Language::Identity);
        cfg.all_assignments = true;
        cfg.rule_samples = 100;
        let r = cem_sweep(&cfg);
        assert_eq!(r.assignments, 9);
        assert!(r.clean(), "{:?}", (&r.counterexamples, &r.schemas, &r.diagnostics));
    }
}
