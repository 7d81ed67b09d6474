//! `condlog`: command-line front end.
//!
//! Exit codes: 0 when the check passes or the formula is true, 1 when it
//! fails or is false, 2 on usage or input errors.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use condlog::corpus::FormulaGen;
use condlog::frame_props::{check_frame, Condition};
use condlog::kmodel::{
    cem_sweep, induced_selection_probe, truncate, truncation_oracle, KAssignment, KEvaluator, KOptions, KWorld,
    SweepConfig,
};
use condlog::logic_systems::{single_line_mutations, verify_proof, ProofVerdict};
use condlog::parser_io::{
    load_model, load_proof, model_to_json, parse_assignment, parse_formula_file, parse_formula_with, print_formula_with,
    Symbols,
};
use condlog::search::{
    compactness_prefix, compactness_witness, correspondence_sweep, ds_sweep, enumerate_frames, AccessPolicy, DsMode,
    EnumerationParams, SearchWitness,
};
use condlog::semantics::{
    eval, frame_valid, model_valid, ordering_to_selection, selection_to_ordering, Assignment, Frame, FrameBase,
    FrameValidLimits, Model,
};
use condlog::{Exec, Formula, Language};
use rand::SeedableRng;

#[derive(Parser)]
#[command(name = "condlog", version, about = "Model checking, proof checking and countermodel search for quantified conditional logic")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Formula language: L, LE or L=.
    #[arg(long, global = true, default_value = "L", value_parser = parse_lang)]
    lang: Language,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Seed for randomized corpora and samples.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Worker threads; 1 runs sequentially. Defaults to all cores.
    #[arg(long, global = true)]
    jobs: Option<usize>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Pointed,
    Frames,
}

#[derive(Clone, Copy, ValueEnum)]
enum AccessArg {
    Reflexive,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum Target {
    Selection,
    Ordering,
}

#[derive(Subcommand)]
enum Command {
    /// Parse a formula and print it with its metrics.
    Parse {
        #[arg(long)]
        formula: String,
    },
    /// Truth of a formula at a world of a model.
    Eval {
        #[arg(long)]
        model: PathBuf,
        #[arg(long)]
        world: String,
        #[arg(long)]
        formula: String,
        /// Assignment such as `x=a,y=b`.
        #[arg(long, default_value = "")]
        assign: String,
    },
    /// Truth of formulas at every world under every assignment.
    ModelValid {
        #[arg(long)]
        model: PathBuf,
        /// One or more formulas; a file holds one formula per line.
        #[arg(long, required = true)]
        formula: Vec<String>,
    },
    /// Truth of a formula in every model on the frame of a document.
    FrameValid {
        #[arg(long)]
        model: PathBuf,
        #[arg(long)]
        formula: String,
        /// Cap on enumerated interpretation cells.
        #[arg(long, default_value_t = FrameValidLimits::default().max_cells)]
        max_cells: usize,
    },
    /// Frame conditions of a model's frame.
    FrameProps {
        #[arg(long)]
        model: PathBuf,
        /// Conditions that must hold (comma separated); fail otherwise.
        /// `weaklyStalnakerian` and `stalnakerian` expand to their lists.
        #[arg(long, value_delimiter = ',')]
        require: Vec<String>,
    },
    /// Convert between Stalnakerian ordering and selection models.
    Convert {
        #[arg(long)]
        model: PathBuf,
        #[arg(long, value_enum)]
        to: Target,
    },
    /// Verify a proof script.
    Prove {
        #[arg(long)]
        proof: PathBuf,
        /// The formula the last line must prove.
        #[arg(long)]
        goal: Option<String>,
        /// Also check that every single-line mutation is rejected.
        #[arg(long)]
        mutations: bool,
    },
    /// The ordering model K.
    Kmodel {
        #[command(subcommand)]
        command: KCommand,
    },
    /// Frame enumeration and model search.
    Search {
        #[command(subcommand)]
        command: SearchCommand,
    },
    /// Axiom-instance validity against frame conditions on enumerated frames.
    Correspondence {
        #[command(flatten)]
        space: Space,
    },
}

#[derive(Subcommand)]
enum KCommand {
    /// Truth at a world of K (`-inf` or a negative integer).
    Eval {
        #[arg(long, allow_hyphen_values = true)]
        world: KWorld,
        #[arg(long)]
        formula: String,
        /// Assignment such as `x=-3,y=-1`.
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        assign: String,
        /// Read predicates other than F as empty instead of rejecting them.
        #[arg(long)]
        drop_other_predicates: bool,
    },
    /// The set of worlds of K where a formula holds.
    Denote {
        #[arg(long)]
        formula: String,
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        assign: String,
        #[arg(long)]
        drop_other_predicates: bool,
    },
    /// The finite truncation K_n as a model document.
    Truncate {
        #[arg(long)]
        n: usize,
    },
    /// CEM and schema instances over all small formulas.
    CemSweep {
        #[arg(long, default_value_t = 7)]
        max_size: usize,
        #[arg(long, default_value_t = 2)]
        max_vars: usize,
        /// Sweep every assignment of the variables, not only x_i = -(i+1).
        #[arg(long)]
        all_assignments: bool,
    },
    /// The selection induced by minimal elements at -inf.
    Probe {
        #[arg(long, default_value_t = 6)]
        max_n: usize,
    },
    /// Compare K with its truncations on a seeded random corpus.
    Oracle {
        #[arg(long, default_value_t = 500)]
        count: usize,
        #[arg(long, default_value_t = 9)]
        max_size: usize,
        /// Values and worlds range over -1 .. -m.
        #[arg(long, default_value_t = 6)]
        m: usize,
    },
}

#[derive(Args)]
struct Space {
    #[arg(long, default_value_t = 2)]
    max_worlds: usize,
    #[arg(long, default_value_t = 2)]
    max_domain: usize,
    #[arg(long, value_enum, default_value_t = AccessArg::All)]
    access: AccessArg,
}

#[derive(Subcommand)]
enum SearchCommand {
    /// Enumerate selection frames up to relabeling.
    Frames {
        #[command(flatten)]
        space: Space,
        /// Required conditions; `weaklyStalnakerian` and `stalnakerian`
        /// expand to their lists.
        #[arg(long, value_delimiter = ',')]
        require: Vec<String>,
        /// Print the frames, not just the count.
        #[arg(long)]
        list: bool,
    },
    /// Look for a model of DS; passes when none exists.
    Ds {
        #[arg(long, default_value_t = 3)]
        max_worlds: usize,
        #[arg(long, default_value_t = 2)]
        max_domain: usize,
        #[arg(long, value_delimiter = ',', default_value = "weaklyStalnakerian")]
        require: Vec<String>,
        #[arg(long, value_enum, default_value_t = AccessArg::Reflexive)]
        access: AccessArg,
        #[arg(long, value_enum, default_value_t = ModeArg::Pointed)]
        mode: ModeArg,
    },
    /// A Stalnakerian model of the first n members of the compactness family.
    Compactness {
        #[arg(long)]
        n: usize,
    },
}

/// A failed run: `Usage` exits 2.
enum Failure {
    Usage(String),
}

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Run = Result<bool, Failure>;

fn parse_lang(s: &str) -> Result<Language, String> {
    s.parse()
}

fn conditions(names: &[String]) -> Result<Vec<Condition>, Failure> {
    let mut out = Vec::new();
    for n in names.iter().map(|s| s.trim()).filter(|s| !s.is_empty()) {
        match n.to_ascii_lowercase().as_str() {
            "weaklystalnakerian" => out.extend(Condition::WEAKLY_STALNAKERIAN),
            "stalnakerian" => out.extend(Condition::STALNAKERIAN),
            _ => out.push(n.parse::<Condition>()?),
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

fn access(a: AccessArg) -> AccessPolicy {
    match a {
        AccessArg::Reflexive => AccessPolicy::ReflexiveOnly,
        AccessArg::All => AccessPolicy::All,
    }
}

/// A literal, or the contents of the file after `@`.
fn literal(s: &str) -> Result<String, Failure> {
    match s.strip_prefix('@') {
        Some(path) => std::fs::read_to_string(path)
            .map(|t| t.trim().to_string())
            .map_err(|e| Failure::Usage(format!("cannot read {path}: {e}"))),
        None => Ok(s.to_string()),
    }
}

fn read(path: &PathBuf) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))
}

fn model(path: &PathBuf) -> Result<Model, Failure> {
    load_model(&read(path)?).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn formula(text: &str, lang: Language, symbols: &mut Symbols) -> Result<Formula, Failure> {
    let text = literal(text)?;
    symbols.reserve_literals(&text);
    parse_formula_with(&text, lang, symbols).map_err(|e| Failure::Usage(format!("formula: {e}")))
}

fn show_assignment(g: &Assignment, symbols: &Symbols, base: &FrameBase) -> Value {
    g.0.iter().map(|(v, e)| (symbols.var_name(*v), json!(base.elem_name(*e)))).collect::<serde_json::Map<_, _>>().into()
}

fn k_assignment(text: &str, symbols: &mut Symbols) -> Result<KAssignment, Failure> {
    let mut g = KAssignment::new();
    for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let Some((v, k)) = part.split_once('=') else {
            return Err(Failure::Usage(format!("assignment `{part}` is not of the form var=value")));
        };
        let k: i64 = k.trim().replace('−', "-").parse().map_err(|_| Failure::Usage(format!("`{k}` is not an integer")))?;
        g.set(symbols.var(v.trim()), k);
    }
    Ok(g)
}

struct Out {
    format: Format,
}

impl Out {
    /// A closed stdout (e.g. piping into `head`) is not an error.
    fn emit(&self, text: impl AsRef<str>, doc: Value) {
        let body = match self.format {
            Format::Text => text.as_ref().to_string(),
            Format::Json => serde_json::to_string_pretty(&doc).expect("JSON values serialize"),
        };
        let _ = writeln!(std::io::stdout().lock(), "{body}");
    }
}

fn witness_json(w: &SearchWitness) -> Value {
    json!({"world": w.model.base().world_name(w.world), "model": model_to_json(&w.model)})
}

fn run(cli: Cli) -> Run {
    let g = &cli.global;
    let exec = if g.jobs == Some(1) { Exec::Sequential } else { Exec::Parallel };
    if let Some(n) = g.jobs.filter(|&n| n > 1) {
        configure_threads(n)?;
    }
    let out = Out { format: g.format };
    let lang = g.lang;
    match cli.command {
        Command::Parse { formula: text } => {
            let mut sy = Symbols::new();
            let f = formula(&text, lang, &mut sy)?;
            let printed = print_formula_with(&f, &sy);
            let m = f.metrics();
            let free: Vec<String> = f.free_vars().into_iter().map(|v| sy.var_name(v)).collect();
            out.emit(
                format!("{printed}\nsize {}, quantifier rank {}, free: {}", m.size, m.quantifier_rank, free.join(" ")),
                json!({"formula": printed, "size": m.size, "quantifierRank": m.quantifier_rank, "freeVariables": free}),
            );
            Ok(true)
        }
        Command::Eval { model: path, world, formula: text, assign } => {
            let m = model(&path)?;
            let lang = m.language.unwrap_or(lang);
            let mut sy = Symbols::new();
            sy.reserve_literals(&assign);
            let f = formula(&text, lang, &mut sy)?;
            let Some(w) = m.base().world_index(&world) else {
                return Err(Failure::Usage(format!("no world named `{world}`")));
            };
            let a = parse_assignment(&assign, &mut sy, m.base()).map_err(Failure::Usage)?;
            let v = eval(&m, w, &a, &f)?;
            out.emit(v.to_string(), json!({"value": v, "world": world}));
            Ok(v)
        }
        Command::ModelValid { model: path, formula: texts } => {
            let m = model(&path)?;
            let lang = m.language.unwrap_or(lang);
            let mut sy = Symbols::new();
            let mut gamma = Vec::new();
            for t in &texts {
                let t = literal(t)?;
                sy.reserve_literals(&t);
                gamma.extend(parse_formula_file(&t, lang, &mut sy).map_err(|e| Failure::Usage(format!("formula: {e}")))?);
            }
            match model_valid(&m, &gamma)? {
                None => {
                    out.emit("valid", json!({"valid": true}));
                    Ok(true)
                }
                Some(c) => {
                    let f = print_formula_with(&gamma[c.formula], &sy);
                    let world = m.base().world_name(c.world).to_string();
                    let asg = show_assignment(&c.assignment, &sy, m.base());
                    out.emit(
                        format!("not valid: {f} fails at world {world} under {asg}"),
                        json!({"valid": false, "formula": f, "world": world, "assignment": asg}),
                    );
                    Ok(false)
                }
            }
        }
        Command::FrameValid { model: path, formula: text, max_cells } => {
            let m = model(&path)?;
            let lang = m.language.unwrap_or(lang);
            let mut sy = Symbols::new();
            let f = formula(&text, lang, &mut sy)?;
            let limits = FrameValidLimits { max_cells, ..Default::default() };
            match frame_valid(&m.frame, &f, &limits)? {
                None => {
                    out.emit("valid", json!({"valid": true}));
                    Ok(true)
                }
                Some(c) => {
                    let counter = Model::new(m.frame.clone(), c.interp.clone());
                    let world = m.base().world_name(c.world).to_string();
                    let asg = show_assignment(&c.assignment, &sy, m.base());
                    let doc = model_to_json(&counter);
                    out.emit(
                        format!("not valid: fails at world {world} under {asg} in\n{}", serde_json::to_string_pretty(&doc)?),
                        json!({"valid": false, "world": world, "assignment": asg, "model": doc}),
                    );
                    Ok(false)
                }
            }
        }
        Command::FrameProps { model: path, require } => {
            let m = model(&path)?;
            let require = conditions(&require)?;
            let r = check_frame(&m.frame)?;
            let doc = r.to_json(m.base());
            let failing: Vec<String> =
                require.iter().filter(|&&c| r.holds(c) != Some(true)).map(|c| c.to_string()).collect();
            let mut text = String::new();
            for (c, v) in &r.verdicts {
                text.push_str(&format!("{c}: {}\n", if v.holds { "holds" } else { "fails" }));
            }
            for (name, val) in [("weaklyStalnakerian", r.weakly_stalnakerian()), ("Stalnakerian", r.stalnakerian()), ("Lewisian", r.lewisian())] {
                if let Some(b) = val {
                    text.push_str(&format!("{name}: {b}\n"));
                }
            }
            if !failing.is_empty() {
                text.push_str(&format!("required but failing: {}\n", failing.join(", ")));
            }
            out.emit(text.trim_end(), json!({"report": doc, "requiredFailing": failing}));
            Ok(failing.is_empty())
        }
        Command::Convert { model: path, to } => {
            let m = model(&path)?;
            let converted = match to {
                Target::Selection => ordering_to_selection(&m),
                Target::Ordering => selection_to_ordering(&m),
            };
            match converted {
                Ok(c) => {
                    let doc = model_to_json(&c);
                    out.emit(serde_json::to_string_pretty(&doc)?, doc);
                    Ok(true)
                }
                Err(e @ condlog::semantics::ConversionError::NotStalnakerian { .. }) => {
                    out.emit(format!("cannot convert: {e}"), json!({"converted": false, "reason": e.to_string()}));
                    Ok(false)
                }
                Err(e) => Err(e.into()),
            }
        }
        Command::Prove { proof, goal, mutations } => {
            let p = load_proof(&read(&proof)?).map_err(|e| Failure::Usage(format!("{}: {e}", proof.display())))?;
            let verdict = verify_proof(&p);
            let mut sy = p.symbols.clone();
            let goal = goal.map(|t| formula(&t, p.logic.language(), &mut sy)).transpose()?;
            let proves = |q: &condlog::logic_systems::ProofScript| {
                verify_proof(q).is_accepted()
                    && goal.as_ref().is_none_or(|gf| q.lines.last().map(|l| &l.formula) == Some(gf))
            };
            let reaches_goal = goal.as_ref().is_none_or(|gf| p.lines.last().map(|l| &l.formula) == Some(gf));
            let mut text = match &verdict {
                ProofVerdict::Accepted if reaches_goal => format!("accepted ({} lines, {})", p.lines.len(), p.logic),
                ProofVerdict::Accepted => "rejected: the last line is not the goal".to_string(),
                ProofVerdict::Rejected { line, reason } => format!("rejected at line {line}: {reason}"),
            };
            let mut doc = match &verdict {
                ProofVerdict::Accepted => json!({"accepted": reaches_goal}),
                ProofVerdict::Rejected { line, reason } => json!({"accepted": false, "line": line, "reason": reason}),
            };
            let mut ok = verdict.is_accepted() && reaches_goal;
            if mutations {
                let ms = single_line_mutations(&p);
                let survivors: Vec<String> = ms.iter().filter(|(_, q)| proves(q)).map(|(d, _)| d.clone()).collect();
                text.push_str(&format!("\n{} mutations, {} accepted", ms.len(), survivors.len()));
                for s in &survivors {
                    text.push_str(&format!("\n  {s}"));
                }
                doc["mutations"] = json!(ms.len());
                doc["acceptedMutations"] = json!(survivors);
                ok &= survivors.is_empty();
            }
            out.emit(text, doc);
            Ok(ok)
        }
        Command::Kmodel { command } => run_k(command, lang, g.seed, exec, &out),
        Command::Search { command } => run_search(command, exec, &out),
        Command::Correspondence { space } => {
            let p = EnumerationParams::new(space.max_worlds, space.max_domain, &[], access(space.access));
            let r = correspondence_sweep(&p, exec)?;
            let ok = r.agree == r.frames;
            out.emit(
                format!(
                    "{}/{} frames agree; {} with all instances valid, {} weakly Stalnakerian with globally constant domains",
                    r.agree, r.frames, r.instance_valid, r.properties_hold
                ),
                serde_json::to_value(&r)?,
            );
            Ok(ok)
        }
    }
}

fn run_k(command: KCommand, lang: Language, seed: u64, exec: Exec, out: &Out) -> Run {
    match command {
        KCommand::Eval { world, formula: text, assign, drop_other_predicates } => {
            let mut sy = Symbols::new();
            sy.reserve_literals(&assign);
            let f = formula(&text, lang, &mut sy)?;
            let g = k_assignment(&assign, &mut sy)?;
            let mut k = KEvaluator::with_options(KOptions { drop_other_predicates });
            let v = k.eval(&f, world, &g)?;
            out.emit(v.to_string(), json!({"value": v, "world": world}));
            Ok(v)
        }
        KCommand::Denote { formula: text, assign, drop_other_predicates } => {
            let mut sy = Symbols::new();
            sy.reserve_literals(&assign);
            let f = formula(&text, lang, &mut sy)?;
            let g = k_assignment(&assign, &mut sy)?;
            let mut k = KEvaluator::with_options(KOptions { drop_other_predicates });
            let d = k.denote(&f, &g)?;
            out.emit(d.to_string(), serde_json::to_value(&d)?);
            Ok(true)
        }
        KCommand::Truncate { n } => {
            if n == 0 {
                return Err(Failure::Usage("n must be at least 1".into()));
            }
            let doc = model_to_json(&truncate(n));
            out.emit(serde_json::to_string_pretty(&doc)?, doc);
            Ok(true)
        }
        KCommand::CemSweep { max_size, max_vars, all_assignments } => {
            let mut cfg = SweepConfig::new(max_size, max_vars, lang);
            cfg.all_assignments = all_assignments;
            cfg.seed = seed;
            cfg.exec = exec;
            let r = cem_sweep(&cfg);
            let mut text = format!(
                "{} formulas in {} classes, {} assignment(s), {} worlds; {} CEM counterexamples",
                r.formulas,
                r.classes,
                r.assignments,
                r.worlds.len(),
                r.counterexamples.len()
            );
            for c in r.counterexamples.iter().take(5) {
                text.push_str(&format!("\n  phi = {}, psi = {} at {}", c.phi, c.psi, c.world));
            }
            for s in &r.schemas {
                text.push_str(&format!("\n{}: {} instances, {} failures", s.name, s.instances, s.failures));
                for e in s.examples.iter().take(3) {
                    text.push_str(&format!("\n  {e}"));
                }
            }
            for d in &r.diagnostics {
                text.push_str(&format!("\ndiagnostic: {d}"));
            }
            out.emit(text, serde_json::to_value(&r)?);
            Ok(r.clean())
        }
        KCommand::Probe { max_n } => {
            let r = induced_selection_probe(max_n);
            let mut text = format!(
                "f(Z-, -inf) = {}\nf({{-1}}, -inf) = {}\nUniformity violated: {}\nWLA violated: {}\nLA violated: {}",
                r.f_integers, r.f_minus_one, r.uniformity_violated, r.weak_limit_violated, r.limit_violated
            );
            for t in &r.truncations {
                let v = if t.violated.is_empty() { "none".to_string() } else { t.violated.join(", ") };
                text.push_str(&format!("\nK_{}: violated {v}", t.n));
            }
            out.emit(text, serde_json::to_value(&r)?);
            Ok(true)
        }
        KCommand::Oracle { count, max_size, m } => {
            let gen = FormulaGen::k_fragment(lang, 2);
            let corpus = gen.corpus(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed), count, max_size);
            let r = truncation_oracle(&corpus, m, exec);
            let mut text = format!(
                "{} formulas, {} checks: {} mismatches, {} unstable, {} diagnostics",
                r.formulas,
                r.checks,
                r.mismatches.len(),
                r.unstable.len(),
                r.diagnostics.len()
            );
            for x in r.mismatches.iter().chain(&r.unstable).take(10) {
                text.push_str(&format!(
                    "\n  {} at {} under {:?}: K {}, truncations {:?}",
                    x.formula, x.world, x.assignment, x.k, x.truncations
                ));
            }
            out.emit(text, serde_json::to_value(&r)?);
            Ok(r.clean())
        }
    }
}

fn run_search(command: SearchCommand, exec: Exec, out: &Out) -> Run {
    match command {
        SearchCommand::Frames { space, require, list } => {
            let p = EnumerationParams::new(space.max_worlds, space.max_domain, &conditions(&require)?, access(space.access));
            let (frames, stats) = enumerate_frames(&p, exec)?;
            let docs: Vec<Value> = frames
                .iter()
                .map(|f| model_to_json(&Model::new(Frame::Selection(f.clone()), Default::default())))
                .collect();
            let mut text = format!("{} frames ({} raw)", frames.len(), stats.raw_frames);
            if list {
                for d in &docs {
                    text.push_str(&format!("\n{d}"));
                }
            }
            out.emit(text, json!({"count": frames.len(), "stats": stats, "frames": if list { json!(docs) } else { Value::Null }}));
            Ok(true)
        }
        SearchCommand::Ds { max_worlds, max_domain, require, access: a, mode } => {
            let p = EnumerationParams::new(max_worlds, max_domain, &conditions(&require)?, access(a));
            let mode = match mode {
                ModeArg::Pointed => DsMode::Pointed,
                ModeArg::Frames => DsMode::Frames,
            };
            let o = ds_sweep(&p, mode, exec)?;
            match &o.witness {
                None => {
                    out.emit("no model found", json!({"found": false, "stats": o.stats}));
                    Ok(true)
                }
                Some(w) => {
                    let doc = witness_json(w);
                    out.emit(
                        format!("model found at world {}:\n{}", w.model.base().world_name(w.world), serde_json::to_string_pretty(&doc["model"])?),
                        json!({"found": true, "witness": doc, "stats": o.stats}),
                    );
                    Ok(false)
                }
            }
        }
        SearchCommand::Compactness { n } => {
            if n == 0 {
                return Err(Failure::Usage("n must be at least 1".into()));
            }
            let o = compactness_witness(n);
            let sy = Symbols::new();
            let prefix: Vec<String> = compactness_prefix(n).iter().map(|f| print_formula_with(f, &sy)).collect();
            match &o.witness {
                Some(w) => {
                    let doc = witness_json(w);
                    out.emit(
                        format!(
                            "model found with {} worlds for\n  {}\n{}",
                            w.model.base().n_worlds(),
                            prefix.join("\n  "),
                            serde_json::to_string_pretty(&doc["model"])?
                        ),
                        json!({"found": true, "prefix": prefix, "witness": doc, "stats": o.stats}),
                    );
                    Ok(true)
                }
                None => {
                    out.emit("no model found", json!({"found": false, "prefix": prefix, "stats": o.stats}));
                    Ok(false)
                }
            }
        }
    }
}

#[cfg(feature = "parallel")]
fn configure_threads(n: usize) -> Result<(), Failure> {
    rayon::ThreadPoolBuilder::new().num_threads(n).build_global().map_err(Failure::from)
}

#[cfg(not(feature = "parallel"))]
fn configure_threads(_: usize) -> Result<(), Failure> {
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
