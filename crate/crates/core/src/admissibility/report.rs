//! Report emission. JSON keys come out sorted (serde_json's default map),
//! rationals as reduced `p/q` strings, so equal inputs give equal bytes.

use std::fmt::Write;

use serde_json::{json, Value};

use super::check::{AdmissibilityReport, ConditionI, ConditionII};
use super::pipeline::{expected_hilbert, FibreChecks, OutputFormat, PipelineResults};
use crate::algebra_a::FibreType;
use crate::algebra_r::TorsionReport;
use crate::exact_ring::Rational;

pub const SCHEMA_VERSION: &str = "1";

fn s(q: &Rational) -> String {
    q.to_string()
}

fn join(v: &[usize]) -> String {
    v.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(" ")
}

fn fibre_type_json(t: &FibreType) -> Value {
    match t {
        FibreType::Hyperelliptic => json!({ "kind": "hyperelliptic" }),
        FibreType::Unigonal(p) => json!({ "kind": "unigonal", "a": s(&p.a), "b": s(&p.b), "r": p.r, "normalized": true }),
        FibreType::UnigonalUnnormalized { r } => json!({ "kind": "unigonal", "r": r, "normalized": false }),
    }
}

fn fibre_json(f: &FibreChecks) -> Value {
    json!({
        "location": s(&f.fibre.location),
        "type": fibre_type_json(&f.fibre.fibre_type),
        "relations": f.fibre.presentation.relations.iter().map(|r| r.to_string()).collect::<Vec<_>>(),
        "cone_value": f.fibre.cone_value.as_ref().map(s),
        "hilbert": f.hilbert,
        "hilbert_match": f.hilbert_matches(),
        "rank_table": f.parity.iter().map(|p| json!({
            "n": p.n, "plus": p.plus, "minus": p.minus,
            "expected_plus": p.expected.0, "expected_minus": p.expected.1, "match": p.matches(),
        })).collect::<Vec<_>>(),
        "cover_degree": f.cover_degree.iter().map(|(n, a, b)| json!({ "n": n, "dim_r": a, "dim_a_sum": b, "match": a == b })).collect::<Vec<_>>(),
        "sigma_n": f.sigma.iter().map(|(n, r, c)| json!({ "n": n, "rank": r, "columns": c, "injective": r == c })).collect::<Vec<_>>(),
        "exactness": f.exactness.iter().map(|e| json!({
            "sequence": e.sequence, "n": e.n, "source_dim": e.source_dim, "middle_dim": e.middle_dim,
            "target_dim": e.target_dim, "image_rank": e.image_rank, "kernel_dim": e.kernel_dim,
            "complex": e.is_complex, "surjective": e.surjective, "exact": e.exact_in_middle(),
        })).collect::<Vec<_>>(),
    })
}

fn torsion_json(t: &TorsionReport) -> Value {
    json!({
        "degree": t.degree_n,
        "invariant_factors": t.invariant_factors.iter().map(|f| f.to_string()).collect::<Vec<_>>(),
        "expected_factors": t.expected_factors.iter().map(|f| f.to_string()).collect::<Vec<_>>(),
        "length": t.length(),
        "points": t.per_point.iter().map(|p| json!({
            "location": s(&p.location), "r": p.multiplicity,
            "computed": p.computed_strings(), "expected": p.expected_strings(), "match": p.matches(),
        })).collect::<Vec<_>>(),
        "match": t.matches(),
    })
}

fn condition_i_json(c: &ConditionI) -> Value {
    match c {
        ConditionI::Pass => json!({ "status": "pass" }),
        ConditionI::Fail { locations } => json!({ "status": "fail", "locations": locations }),
    }
}

fn condition_ii_json(c: &ConditionII) -> Value {
    match c {
        ConditionII::PassPartial => json!({ "status": "pass_partial" }),
        ConditionII::Fail { reason, locations } => json!({ "status": "fail", "reason": reason, "locations": locations }),
        ConditionII::Undetermined { reason } => json!({ "status": "undetermined", "reason": reason }),
    }
}

fn admissibility_json(a: &AdmissibilityReport) -> Value {
    json!({
        "condition_i": condition_i_json(&a.condition_i),
        "condition_ii": condition_ii_json(&a.condition_ii),
        "singularity_types": a.singularity_types.iter().map(|c| json!({
            "location": s(&c.location), "r": c.r, "claimed_type": c.claimed_type,
            "predicted_type": c.predicted.to_string(), "computed_type": c.computed.to_string(),
            "milnor_number": c.milnor_number, "agrees": c.agrees,
        })).collect::<Vec<_>>(),
        "sextic_checks": a.sextic_checks.iter().map(|c| json!({ "location": s(&c.location), "reduced": c.reduced })).collect::<Vec<_>>(),
        "unresolved_tau": a.unresolved_tau.as_ref().map(|p| p.to_string()),
        "verdict": a.verdict.as_str(),
    })
}

pub fn report_json(res: &PipelineResults) -> Value {
    let b = &res.admissibility.branch;
    let cfg = &res.config;
    json!({
        "schema_version": SCHEMA_VERSION,
        "input": {
            "beta": res.tuple.beta.to_string(),
            "e3_twist": res.tuple.e3_twist,
        },
        "tau": {
            "degree": res.tau.degree,
            "points": res.tau.points.iter().map(|p| json!({ "location": s(&p.location), "multiplicity": p.multiplicity })).collect::<Vec<_>>(),
            "d6": res.r.d6().to_string(),
        },
        "presentation": {
            "generators": res.presentation.generators().iter().map(|(n, w)| json!([n, w])).collect::<Vec<_>>(),
            "relations": res.presentation.relations.iter().map(|r| r.to_string()).collect::<Vec<_>>(),
            "eliminates_y": res.presentation.eliminates_y(),
            "chart": res.presentation.chart.coordinate,
            "r_relations": res.r.relations().iter().map(|r| r.to_string()).collect::<Vec<_>>(),
        },
        "hilbert": {
            "generic": res.generic_hilbert,
            "expected": expected_hilbert(cfg.max_check_degree),
            "match": res.hilbert_match(),
        },
        "paper_rank_table_match": res.paper_rank_table_match(),
        "fibres": res.fibres.iter().map(fibre_json).collect::<Vec<_>>(),
        "torsion": res.torsion.iter().map(torsion_json).collect::<Vec<_>>(),
        "branch": {
            "p_points": b.p_points.iter().map(|(c, r)| json!({ "location": s(c), "r": r })).collect::<Vec<_>>(),
            "g6_at_cone": b.g6_at_cone.iter().map(|(c, v)| json!({ "location": s(c), "value": s(v) })).collect::<Vec<_>>(),
            "disjoint": b.disjoint,
            "branch_class": b.branch_class.to_string(),
            "cone_coefficient": b.cone_coefficient.to_string(),
        },
        "admissibility": admissibility_json(&res.admissibility),
        "config": {
            "max_check_degree": cfg.max_check_degree,
            "torsion_degrees": cfg.torsion_degrees,
            "samples": cfg.sample_points.iter().map(s).collect::<Vec<_>>(),
            "truncation": cfg.truncation,
        },
        "invariant_failures": res.invariant_failures,
        "exit_code": res.exit_code(),
    })
}

fn yes(b: bool) -> &'static str {
    if b {
        "ok"
    } else {
        "MISMATCH"
    }
}

pub fn report_text(res: &PipelineResults) -> String {
    let mut o = String::new();
    let cfg = &res.config;
    let _ = writeln!(o, "k3fib report (schema {SCHEMA_VERSION})");
    let _ = writeln!(o, "beta: {}", res.tuple.beta);
    let pts: Vec<String> = res.tau.points.iter().map(|p| format!("{} (r = {})", p.location, p.multiplicity)).collect();
    let _ = writeln!(o, "tau: degree {}, d6 = {}, points: {}", res.tau.degree, res.r.d6(), if pts.is_empty() { "none".into() } else { pts.join(", ") });
    let _ = writeln!(o, "\nrelations of R:");
    for r in res.r.relations() {
        let _ = writeln!(o, "  {r}");
    }

    let _ = writeln!(o, "\nHilbert function, degrees 0..{}", cfg.max_check_degree);
    let _ = writeln!(o, "  expected   {}", join(&expected_hilbert(cfg.max_check_degree)));
    let _ = writeln!(o, "  generic    {}", join(&res.generic_hilbert));
    for f in &res.fibres {
        let _ = writeln!(o, "  t = {:<7} {}  [{}]", s(&f.fibre.location), join(&f.hilbert), f.fibre.fibre_type.tag());
    }

    let _ = writeln!(o, "\nrank table (E_n^+, E_n^-): {}", yes(res.paper_rank_table_match()));
    let _ = writeln!(o, "  {:>3}  {:>12}  per fibre", "n", "expected");
    if let Some(first) = res.fibres.first() {
        for (i, row) in first.parity.iter().enumerate() {
            let per: Vec<String> =
                res.fibres.iter().map(|f| format!("({}, {})", f.parity[i].plus, f.parity[i].minus)).collect();
            let _ = writeln!(o, "  {:>3}  {:>12}  {}", row.n, format!("({}, {})", row.expected.0, row.expected.1), per.join(" "));
        }
    }

    let _ = writeln!(o, "\nfibre checks");
    for f in &res.fibres {
        let _ = writeln!(
            o,
            "  t = {:<7} cover degree {}, sigma_n injective {}, exactness {}",
            s(&f.fibre.location),
            yes(f.cover_matches()),
            yes(f.sigma_injective()),
            yes(f.exactness_holds())
        );
    }

    let _ = writeln!(o, "\ntorsion of coker sigma_n");
    for t in &res.torsion {
        let _ = writeln!(o, "  n = {}: length {}, {}", t.degree_n, t.length(), yes(t.matches()));
        for p in &t.per_point {
            let _ = writeln!(
                o,
                "    at {} (r = {}): computed {{{}}} expected {{{}}}",
                p.location,
                p.multiplicity,
                p.computed_strings().join(", "),
                p.expected_strings().join(", ")
            );
        }
    }

    let b = &res.admissibility.branch;
    let _ = writeln!(o, "\nbranch data");
    let _ = writeln!(o, "  B_A: {} = 0", b.branch_class);
    for (c, v) in &b.g6_at_cone {
        let _ = writeln!(o, "  cone point over t = {c}: g6(0,0,0,1) = {v}");
    }
    let _ = writeln!(o, "  disjoint: {}", b.disjoint);

    let a = &res.admissibility;
    let _ = writeln!(o, "\nadmissibility");
    let ci = match &a.condition_i {
        ConditionI::Pass => "pass".to_string(),
        ConditionI::Fail { locations } => format!("fail at {}", locations.join(", ")),
    };
    let cii = match &a.condition_ii {
        ConditionII::PassPartial => "pass_partial".to_string(),
        ConditionII::Fail { reason, locations } => format!("fail: {reason} at {}", locations.join(", ")),
        ConditionII::Undetermined { reason } => format!("undetermined: {reason}"),
    };
    let _ = writeln!(o, "  condition (i):  {ci}");
    let _ = writeln!(o, "  condition (ii): {cii}");
    for c in &a.singularity_types {
        let mu = c.milnor_number.map_or("?".to_string(), |m| m.to_string());
        let _ = writeln!(
            o,
            "    cone point t = {}: claimed {}, expected section {}, computed {} (mu = {mu})",
            c.location, c.claimed_type, c.predicted, c.computed
        );
    }
    for c in &a.sextic_checks {
        let _ = writeln!(o, "    sextic at t = {}: {}", c.location, if c.reduced { "reduced" } else { "NOT reduced" });
    }
    let _ = writeln!(o, "  verdict: {}", a.verdict.as_str());

    if !res.invariant_failures.is_empty() {
        let _ = writeln!(o, "\ninvariant failures");
        for f in &res.invariant_failures {
            let _ = writeln!(o, "  {f}");
        }
    }
    o
}

pub fn emit_report(res: &PipelineResults, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => {
            let mut out = serde_json::to_string_pretty(&report_json(res)).expect("report serializes");
            out.push('\n');
            out
        }
        OutputFormat::Text => report_text(res),
    }
}
