use condlog::logic_systems::verify_proof;
use condlog::parser_io::{load_model, load_proof, parse_formula, print_formula};
use condlog::{build_ds, Language};

fn fixture(name: &str) -> String {
    std::fs::read_to_string(format!("{}/fixtures/{name}", env!("CARGO_MANIFEST_DIR"))).unwrap()
}

#[test]
fn ds_file_parses_to_builder() {
    let f = parse_formula(fixture("ds.cl").trim(), Language::Plain).unwrap();
    assert_eq!(f, build_ds(), "{}", print_formula(&f));
}

#[test]
fn remark_model_loads() {
    let m = load_model(&fixture("remark25.json")).unwrap();
    assert_eq!(m.base().n_worlds(), 2);
}

#[test]
fn mod_proof_is_accepted() {
    let p = load_proof(&fixture("mod_qc2.json")).unwrap();
    let v = verify_proof(&p);
    assert!(v.is_accepted(), "{v:?}");
    assert_eq!(p.lines.len(), 11);
}

#[test]
fn mod_proof_mutations_are_rejected() {
    let p = load_proof(&fixture("mod_qc2.json")).unwrap();
    let target = parse_formula("(~P > bot) -> (Q > P)", Language::Plain).unwrap();
    assert_eq!(p.lines.last().unwrap().formula, target);
    let ms = condlog::logic_systems::single_line_mutations(&p);
    assert!(ms.len() > 300, "{}", ms.len());
    for (what, q) in &ms {
        let proves = verify_proof(q).is_accepted() && q.lines.last().map(|l| &l.formula) == Some(&target);
        assert!(!proves, "mutation accepted: {what}");
    }
}

#[test]
fn box_t_holds_on_the_footnote_model() {
    // Weak Centering validates box φ -> φ; the footnote model only breaks
    // the Kripke reading of box (P fails at the accessible world 2).
    let m = load_model(&fixture("remark25.json")).unwrap();
    let f = parse_formula("box P(x) -> P(x)", Language::Plain).unwrap();
    assert_eq!(condlog::semantics::model_valid(&m, &[f]).unwrap(), None);
}
