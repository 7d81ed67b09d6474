use std::path::PathBuf;
use std::process::{Command, Output};

fn fixtures() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/fixtures")
}

fn condlog(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_condlog")).current_dir(fixtures()).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).trim().to_string()
}

#[test]
fn box_holds_at_world_one() {
    let o = condlog(&["eval", "--model", "remark25.json", "--world", "1", "--formula", "box P(x)", "--assign", "x=a"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "true");
}

#[test]
fn ds_holds_at_minus_infinity() {
    let o = condlog(&["kmodel", "eval", "--world=-inf", "--formula", "@ds.cl"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "true");
}

#[test]
fn no_small_model_of_ds() {
    let o = condlog(&["search", "ds", "--max-worlds", "3", "--max-domain", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "no model found");
}

#[test]
fn false_formulas_exit_one() {
    let o = condlog(&["eval", "--model", "remark25.json", "--world", "2", "--formula", "P(x)", "--assign", "x=a"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o), "false");
}

#[test]
fn json_output() {
    let o = condlog(&["--format", "json", "eval", "--model", "remark25.json", "--world", "1", "--formula", "box P(x)", "--assign", "x=a"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["value"], true);
    assert_eq!(v["world"], "1");
}

#[test]
fn bad_input_exits_two() {
    for args in [
        &["parse", "--formula", "F(x) &"][..],
        &["eval", "--model", "missing.json", "--world", "1", "--formula", "P(x)"],
        &["eval", "--model", "remark25.json", "--world", "9", "--formula", "P(x)", "--assign", "x=a"],
        &["frame-props", "--model", "remark25.json", "--require", "Nonsense"],
        &["no-such-command"],
    ] {
        let o = condlog(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn frame_props_requirements() {
    let ok = condlog(&["frame-props", "--model", "remark25.json", "--require", "weaklyStalnakerian"]);
    assert_eq!(ok.status.code(), Some(0));
    let fails = condlog(&["frame-props", "--model", "remark25.json", "--require", "stalnakerian"]);
    assert_eq!(fails.status.code(), Some(1));
    assert!(stdout(&fails).contains("required but failing"));
}

#[test]
fn box_t_is_valid_on_the_footnote_model() {
    let o = condlog(&["model-valid", "--model", "remark25.json", "--formula", "box P(x) -> P(x)"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "valid");
}

#[test]
fn model_valid_reports_a_counterexample() {
    let o = condlog(&["--format", "json", "model-valid", "--model", "remark25.json", "--formula", "P(x)"]);
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["valid"], false);
    assert_eq!(v["world"], "2");
}

#[test]
fn proof_and_mutations() {
    let o = condlog(&["prove", "--proof", "mod_qc2.json", "--goal", "(~P > bot) -> (Q > P)", "--mutations"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).starts_with("accepted (11 lines"));
    assert!(stdout(&o).ends_with(" accepted") && stdout(&o).contains("mutations, 0 accepted"));
    let wrong = condlog(&["prove", "--proof", "mod_qc2.json", "--goal", "(Q > P) -> (~P > bot)"]);
    assert_eq!(wrong.status.code(), Some(1));
}

#[test]
fn sequential_and_parallel_agree() {
    let args = ["kmodel", "cem-sweep", "--max-size", "4", "--max-vars", "1"];
    let seq = condlog(&[&["--jobs", "1"][..], &args].concat());
    let par = condlog(&args);
    assert_eq!(seq.status.code(), Some(0));
    assert_eq!(stdout(&seq), stdout(&par));
}

#[test]
fn seeded_oracle_repeats() {
    let args = ["--seed", "3", "--format", "json", "kmodel", "oracle", "--count", "20", "--max-size", "6", "--m", "3"];
    assert_eq!(condlog(&args).stdout, condlog(&args).stdout);
}
