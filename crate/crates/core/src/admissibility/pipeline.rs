//! parse -> validate -> tau -> presentation -> R -> checks -> admissibility.

use std::path::PathBuf;

use thiserror::Error;

use super::check::{check_admissibility, AdmissibilityReport};
use super::milnor::DEFAULT_TRUNCATION;
use crate::algebra_a::{check_star, check_star_star, derive_presentation, hilbert_function, hilbert_function_at, ExactnessCheck, GradedPresentation};
use crate::algebra_r::{
    build_r, expected_parity_ranks, fibre_at, sigma_n_rank, split, torsion_decomposition, BuildError, FibreAlgebra,
    RAlgebra, TorsionReport,
};
use crate::exact_ring::{int, rat, BasePoly, Rational};
use crate::fivetuple::{compute_tau, parse_five_tuple, validate, FiveTuple, TauDivisor, TauError};
use crate::par;

pub const MAX_CHECK_DEGREE: u32 = 8;
pub const TORSION_DEGREES: std::ops::RangeInclusive<u32> = 2..=7;
/// `sigma_n` injectivity is checked up to this degree.
pub const SIGMA_DEGREE: u32 = 5;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OutputFormat {
    Text,
    Json,
}

#[derive(Clone, Debug)]
pub struct PipelineConfig {
    pub input: PathBuf,
    pub max_check_degree: u32,
    pub torsion_degrees: Vec<u32>,
    pub sample_points: Vec<Rational>,
    pub format: OutputFormat,
    pub truncation: u32,
    /// Adds a spurious factor to every torsion expectation.
    pub inject_torsion_fault: bool,
}

impl PipelineConfig {
    pub fn new(input: impl Into<PathBuf>) -> Self {
        PipelineConfig {
            input: input.into(),
            max_check_degree: 6,
            torsion_degrees: vec![2, 3, 4, 5],
            sample_points: vec![int(-1), rat(1, 2), int(2)],
            format: OutputFormat::Json,
            truncation: DEFAULT_TRUNCATION,
            inject_torsion_fault: false,
        }
    }

    fn check(&self) -> Result<(), String> {
        if self.max_check_degree > MAX_CHECK_DEGREE {
            return Err(format!("--max-degree must be at most {MAX_CHECK_DEGREE}"));
        }
        if let Some(n) = self.torsion_degrees.iter().find(|n| !TORSION_DEGREES.contains(n)) {
            return Err(format!("torsion degree {n} outside {}..={}", TORSION_DEGREES.start(), TORSION_DEGREES.end()));
        }
        if self.truncation == 0 {
            return Err("truncation degree must be positive".into());
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ErrorKind {
    Validation,
    Invariant,
    Io,
}

#[derive(Clone, Debug, Error)]
#[error("{stage}: {message}")]
pub struct PipelineError {
    pub stage: &'static str,
    pub kind: ErrorKind,
    pub message: String,
}

impl PipelineError {
    fn new(stage: &'static str, kind: ErrorKind, message: impl Into<String>) -> Self {
        PipelineError { stage, kind, message: message.into() }
    }

    pub fn exit_code(&self) -> i32 {
        match self.kind {
            ErrorKind::Validation => 2,
            ErrorKind::Invariant => 3,
            ErrorKind::Io => 4,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParityRow {
    pub n: u32,
    pub plus: usize,
    pub minus: usize,
    pub expected: (usize, usize),
}

impl ParityRow {
    pub fn matches(&self) -> bool {
        (self.plus, self.minus) == self.expected
    }
}

#[derive(Clone, Debug)]
pub struct FibreChecks {
    pub fibre: FibreAlgebra,
    pub hilbert: Vec<usize>,
    pub parity: Vec<ParityRow>,
    /// `(n, dim R_n, dim A_n + dim A_(n-3))`.
    pub cover_degree: Vec<(u32, usize, usize)>,
    /// `(n, rank, number of monomials)`.
    pub sigma: Vec<(u32, usize, usize)>,
    pub exactness: Vec<ExactnessCheck>,
}

impl FibreChecks {
    pub fn hilbert_matches(&self) -> bool {
        self.hilbert == expected_hilbert(self.hilbert.len() as u32 - 1)
    }

    pub fn parity_matches(&self) -> bool {
        self.parity.iter().all(ParityRow::matches)
    }

    pub fn cover_matches(&self) -> bool {
        self.cover_degree.iter().all(|(_, a, b)| a == b)
    }

    pub fn sigma_injective(&self) -> bool {
        self.sigma.iter().all(|(_, r, c)| r == c)
    }

    /// `i_2` of rank 6, `(*)` exact for `n = 2, 3`, `(**)` for `n = 1, 2`.
    pub fn exactness_holds(&self) -> bool {
        self.exactness.iter().all(|e| match (e.sequence, e.n) {
            ("*", 2) => e.exact_in_middle() && e.injective() && e.image_rank == 6,
            _ => e.exact_in_middle(),
        })
    }
}

/// `1, 3, 6, 11, ...`: `n^2 + 2` for `n >= 1`.
pub fn expected_hilbert(max: u32) -> Vec<usize> {
    (0..=max).map(|n| if n == 0 { 1 } else { (n * n + 2) as usize }).collect()
}

#[derive(Clone, Debug)]
pub struct PipelineResults {
    pub tuple: FiveTuple,
    pub tau: TauDivisor,
    pub presentation: GradedPresentation,
    pub r: RAlgebra,
    pub generic_hilbert: Vec<usize>,
    pub fibres: Vec<FibreChecks>,
    pub torsion: Vec<TorsionReport>,
    pub admissibility: AdmissibilityReport,
    pub config: PipelineConfig,
    pub invariant_failures: Vec<String>,
}

impl PipelineResults {
    pub fn paper_rank_table_match(&self) -> bool {
        self.fibres.iter().all(FibreChecks::parity_matches)
    }

    pub fn hilbert_match(&self) -> bool {
        self.generic_hilbert == expected_hilbert(self.config.max_check_degree)
            && self.fibres.iter().all(FibreChecks::hilbert_matches)
    }

    /// 0 when every check passed and the verdict is not negative.
    pub fn exit_code(&self) -> i32 {
        if !self.invariant_failures.is_empty() {
            3
        } else if self.admissibility.verdict == super::check::Verdict::NotAdmissible {
            2
        } else {
            0
        }
    }
}

fn fibre_checks(r: &RAlgebra, c: &Rational, max: u32) -> FibreChecks {
    let fibre = fibre_at(r, c);
    let hilbert = hilbert_function_at(&fibre.presentation, max, c);
    let parity = (0..=max)
        .map(|n| {
            let (p, m) = split(&fibre.presentation, n, Some(c));
            ParityRow { n, plus: p.len(), minus: m.len(), expected: expected_parity_ranks(n) }
        })
        .collect();
    let full = hilbert_function_at(&r.presentation(), max, c);
    let base = hilbert_function_at(&r.base, max, c);
    let cover_degree = (3..=max).map(|n| (n, full[n as usize], base[n as usize] + base[n as usize - 3])).collect();
    // over tau, sigma_2 kills the quadric q6 on the fibre; injectivity is a
    // statement about the sheaf map, checked off tau
    let off_tau = !num_traits::Zero::is_zero(&r.d6().eval(c));
    let sigma = (1..=max.min(SIGMA_DEGREE))
        .filter(|_| off_tau)
        .map(|n| {
            let (rank, cols) = sigma_n_rank(r, n, c);
            (n, rank, cols)
        })
        .collect();
    let exactness = vec![
        check_star(&r.base, 2, c),
        check_star(&r.base, 3, c),
        check_star_star(&r.base, 1, c),
        check_star_star(&r.base, 2, c),
    ];
    FibreChecks { fibre, hilbert, parity, cover_degree, sigma, exactness }
}

/// Fibres checked: the sample points and the rational points of `tau`.
pub fn fibre_locations(tau: &TauDivisor, samples: &[Rational]) -> Vec<Rational> {
    let mut locs: Vec<Rational> = samples.to_vec();
    locs.extend(tau.points.iter().map(|p| p.location.clone()));
    locs.sort();
    locs.dedup();
    locs
}

pub fn run_on_text(text: &str, config: &PipelineConfig) -> Result<PipelineResults, PipelineError> {
    use ErrorKind::*;
    config.check().map_err(|m| PipelineError::new("config", Validation, m))?;
    let tuple = parse_five_tuple(text).map_err(|e| PipelineError::new("parse", Validation, e.to_string()))?;
    let report = validate(&tuple);
    if !report.is_empty() {
        return Err(PipelineError::new("validate", Validation, report.to_string()));
    }
    let tau = match compute_tau(&tuple.sigma2) {
        Ok(tau) => tau,
        // per-fibre checks only visit the rational points
        Err(TauError::IrrationalLocus { degree, rational, .. }) => TauDivisor { points: rational.points, degree },
        Err(e) => return Err(PipelineError::new("compute_tau", Invariant, e.to_string())),
    };
    let presentation =
        derive_presentation(&tuple).map_err(|e| PipelineError::new("derive_presentation", Invariant, e.to_string()))?;
    let r = build_r(&tuple).map_err(|e| {
        let kind = if matches!(e, BuildError::BetaDegenerate) { Validation } else { Invariant };
        PipelineError::new("build_r", kind, e.to_string())
    })?;

    let max = config.max_check_degree;
    let mut failures = Vec::new();
    let rebuilt = crate::algebra_a::reconstruct_sigma2(&presentation);
    if rebuilt.as_ref() != Some(&tuple.sigma2) {
        failures.push("presentation: sigma2 does not round-trip".to_string());
    }
    if r.tau_degree() != tau.degree {
        failures.push("build_r: tau degree differs from compute_tau".to_string());
    }

    let generic_hilbert = hilbert_function(&r.presentation(), max);
    if generic_hilbert != expected_hilbert(max) {
        failures.push(format!("hilbert: generic values {generic_hilbert:?}"));
    }

    let admissibility = check_admissibility(&r, &config.sample_points, config.truncation);
    let locations = fibre_locations(&tau, &config.sample_points);
    let fibres: Vec<FibreChecks> = par::map(&locations, |c| fibre_checks(&r, c, max));
    for f in &fibres {
        let at = &f.fibre.location;
        if !f.hilbert_matches() {
            failures.push(format!("hilbert: fibre at {at} gives {:?}", f.hilbert));
        }
        if !f.parity_matches() {
            failures.push(format!("rank table: fibre at {at}"));
        }
        if !f.cover_matches() {
            failures.push(format!("cover degree: fibre at {at}"));
        }
        if !f.sigma_injective() {
            failures.push(format!("sigma_n: not injective at {at}"));
        }
        if !f.exactness_holds() {
            failures.push(format!("exactness: fibre at {at}"));
        }
        if let Some(v) = &f.fibre.cone_value {
            let failing = admissibility.branch.failing_locations().contains(at);
            if num_traits::Zero::is_zero(v) != failing {
                failures.push(format!("branch: cone value and branch data disagree at {at}"));
            }
        }
    }

    let mut torsion: Vec<TorsionReport> = par::map(&config.torsion_degrees, |&n| torsion_decomposition(&r, n));
    if config.inject_torsion_fault {
        for t in &mut torsion {
            t.expected_factors.push(BasePoly::t());
        }
    }
    for t in &torsion {
        if !t.matches() {
            failures.push(format!("torsion: degree {} differs from the predicted decomposition", t.degree_n));
        }
    }

    Ok(PipelineResults {
        tuple,
        tau,
        presentation,
        r,
        generic_hilbert,
        fibres,
        torsion,
        admissibility,
        config: config.clone(),
        invariant_failures: failures,
    })
}

/// Reads `config.input` and runs every stage.
pub fn run_pipeline(config: &PipelineConfig) -> Result<PipelineResults, PipelineError> {
    let text = std::fs::read_to_string(&config.input)
        .map_err(|e| PipelineError::new("read", ErrorKind::Io, format!("{}: {e}", config.input.display())))?;
    run_on_text(&text, config)
}
