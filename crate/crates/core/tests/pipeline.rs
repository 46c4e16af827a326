use k3fib_core::admissibility::{
    emit_report, run_on_text, run_pipeline, ErrorKind, OutputFormat, PipelineConfig, Verdict,
};

const FERMAT: &str = include_str!("../../../data/fermat.json");
const UNIGONAL: &str = include_str!("../../../data/unigonal_r1.json");
const CONE_VANISHING: &str = include_str!("../../../data/cone_vanishing.json");

fn config() -> PipelineConfig {
    PipelineConfig::new("unused")
}

#[test]
fn fermat_is_admissible_and_reports_the_hilbert_row() {
    let res = run_on_text(FERMAT, &config()).unwrap();
    assert_eq!(res.exit_code(), 0, "{:?}", res.invariant_failures);
    assert_eq!(res.admissibility.verdict, Verdict::Admissible);
    assert!(emit_report(&res, OutputFormat::Text).contains("1 3 6 11 18 27 38"));
    let json: serde_json::Value = serde_json::from_str(&emit_report(&res, OutputFormat::Json)).unwrap();
    assert_eq!(json["schema_version"], "1");
    assert_eq!(json["paper_rank_table_match"], true);
    assert_eq!(json["hilbert"]["generic"], serde_json::json!([1, 3, 6, 11, 18, 27, 38]));
}

#[test]
fn unigonal_reports_torsion_strings_and_cone_type() {
    let res = run_on_text(UNIGONAL, &config()).unwrap();
    assert_eq!(res.exit_code(), 0, "{:?}", res.invariant_failures);
    let json: serde_json::Value = serde_json::from_str(&emit_report(&res, OutputFormat::Json)).unwrap();
    let deg4 = json["torsion"].as_array().unwrap().iter().find(|t| t["degree"] == 4).unwrap();
    assert_eq!(deg4["points"][0]["computed"], serde_json::json!(["t", "t", "t", "t", "t", "t^2"]));
    let sing = &json["admissibility"]["singularity_types"][0];
    assert_eq!(sing["claimed_type"], "A_1");
    assert_eq!(sing["computed_type"], "smooth");
    assert_eq!(sing["milnor_number"], 0);
    assert_eq!(json["admissibility"]["verdict"], "admissible");
}

#[test]
fn cone_vanishing_is_not_admissible() {
    let res = run_on_text(CONE_VANISHING, &config()).unwrap();
    assert_eq!(res.admissibility.verdict, Verdict::NotAdmissible);
    assert_eq!(res.exit_code(), 2);
    let json: serde_json::Value = serde_json::from_str(&emit_report(&res, OutputFormat::Json)).unwrap();
    assert_eq!(json["admissibility"]["condition_i"]["locations"], serde_json::json!(["0"]));
}

#[test]
fn irrational_tau_leaves_the_verdict_undetermined() {
    let mut sigma2 = vec![vec!["0"; 6]; 6];
    for (i, row) in sigma2.iter_mut().enumerate() {
        row[i] = "1";
    }
    sigma2[5][5] = "t^2 - 2";
    let text = serde_json::json!({"sigma2": sigma2, "e3_twist": 0, "beta": "y^3 + x1^6 + x2^6 + x3^6"}).to_string();
    let res = run_on_text(&text, &config()).unwrap();
    assert!(res.invariant_failures.is_empty(), "{:?}", res.invariant_failures);
    assert_eq!(res.tau.degree, 2);
    assert!(res.tau.points.is_empty());
    assert_eq!(res.admissibility.verdict, Verdict::Undetermined);
    assert_eq!(res.exit_code(), 0);
}

#[test]
fn json_is_byte_identical_across_runs() {
    for text in [FERMAT, UNIGONAL, CONE_VANISHING] {
        let a = emit_report(&run_on_text(text, &config()).unwrap(), OutputFormat::Json);
        let b = emit_report(&run_on_text(text, &config()).unwrap(), OutputFormat::Json);
        assert_eq!(a, b);
    }
}

#[test]
fn stage_errors_carry_exit_codes() {
    let e = run_on_text(include_str!("../../../data/malformed.json"), &config()).unwrap_err();
    assert_eq!((e.stage, e.kind, e.exit_code()), ("parse", ErrorKind::Validation, 2));
    let singular = FERMAT.replace("\"1\",\n      \"0\",\n      \"0\",\n      \"0\",\n      \"0\",\n      \"0\"", "\"0\",\n      \"0\",\n      \"0\",\n      \"0\",\n      \"0\",\n      \"0\"");
    assert_ne!(singular, FERMAT);
    let e = run_on_text(&singular, &config()).unwrap_err();
    assert_eq!((e.stage, e.exit_code()), ("validate", 2));
    let e = run_pipeline(&PipelineConfig::new("/nonexistent/input.json")).unwrap_err();
    assert_eq!((e.stage, e.exit_code()), ("read", 4));
    let bad = PipelineConfig { torsion_degrees: vec![9], ..config() };
    assert_eq!(run_on_text(FERMAT, &bad).unwrap_err().stage, "config");
}

#[test]
fn injected_torsion_fault_is_an_invariant_violation() {
    let cfg = PipelineConfig { inject_torsion_fault: true, ..config() };
    let res = run_on_text(UNIGONAL, &cfg).unwrap();
    assert_eq!(res.exit_code(), 3);
    assert!(res.invariant_failures.iter().all(|f| f.starts_with("torsion")));
}
