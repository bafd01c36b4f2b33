//! The reproduction suite behind `h2star check`.
//!
//! Each criterion returns a [`CriterionResult`] with a pass flag and a short
//! measurement summary. Tolerances are fixed constants here.

use std::time::Instant;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::caratheodory::{
    lemma_forward, lemma_forward_raw, lemma_inverse, moments_from_atoms, normalize_rotation, sample_unit_disk,
    toeplitz_psd, HerglotzAtoms, LemmaPoint, MomentTriple,
};
use crate::error::Result;
use crate::hankel::{
    bound_profile, functional_moment_form, functional_param_form, hankel_det, phi, sharp_bound,
    HankelSpec,
};
use crate::search::{
    maximize_herglotz, maximize_param, maximize_phi, monotonicity_scan, sweep_alpha, sweep_to_csv,
    Argmax, HerglotzConfig, Method, ParamGrid, SweepConfig, DEFAULT_GRID_P, DEFAULT_GRID_T,
};
use crate::starlike::{closed_form_a234, coeffs_from_moments, extremal_coeffs, Alpha, CoefficientVector};

pub const PHI_BOUND_TOL: f64 = 1e-9;
pub const PHI_RUNTIME_SECS: f64 = 1.0;
pub const EXTREMAL_TOL: f64 = 1e-12;
pub const PARAM_LOWER_SLACK: f64 = 5e-3;
pub const SEARCH_UPPER_SLACK: f64 = 1e-9;
pub const PARAM_RUNTIME_SECS: f64 = 60.0;
pub const HERGLOTZ_LOWER_SLACK: f64 = 1e-2;
pub const ALGEBRA_TOL: f64 = 1e-12;
pub const DOMINATION_TOL: f64 = 1e-12;
pub const PROFILE_TOL: f64 = 1e-12;
pub const PSD_MIN_EIGENVALUE: f64 = -1e-9;
pub const ROUND_TRIP_TOL: f64 = 1e-10;
pub const FORWARD_PSD_TOL: f64 = -1e-7;
pub const ROUND_TRIP_Y_LIMIT: f64 = 1.0 - 1e-6;

pub const RANDOM_TRIPLES: usize = 1000;
pub const RANDOM_LEMMA_POINTS: usize = 100_000;
pub const RANDOM_ATOM_SETS: usize = 1000;
pub const GOLDEN_SEED: u64 = 7;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CriterionResult {
    pub id: u32,
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl CriterionResult {
    fn new(id: u32, name: &str, passed: bool, detail: String) -> Self {
        Self { id, name: name.to_string(), passed, detail }
    }

    /// `[PASS] 1 name: detail`
    pub fn line(&self) -> String {
        format!(
            "[{}] {} {}: {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.name,
            self.detail
        )
    }
}

/// `{0, 0.05, ..., 0.95}`.
pub fn alpha_grid() -> Vec<Alpha> {
    (0..20)
        .map(|k| Alpha::new(k as f64 * 0.05).expect("grid inside [0, 1)"))
        .collect()
}

fn rel_close(a: Complex64, b: Complex64, tol: f64) -> bool {
    (a - b).norm() <= tol * a.norm().max(b.norm()).max(1.0)
}

/// Sharp bound from the majorant: `maximize_phi` returns `(1 - α)^2`.
pub fn sharp_bound_reproduction() -> Result<CriterionResult> {
    let mut worst_gap = 0.0f64;
    let mut slowest = 0.0f64;
    for alpha in alpha_grid() {
        let start = Instant::now();
        let out = maximize_phi(alpha, DEFAULT_GRID_P, DEFAULT_GRID_T)?;
        slowest = slowest.max(start.elapsed().as_secs_f64());
        worst_gap = worst_gap.max((out.value - sharp_bound(alpha)).abs());
    }
    let passed = worst_gap <= PHI_BOUND_TOL && slowest < PHI_RUNTIME_SECS;
    Ok(CriterionResult::new(
        1,
        "sharp-bound reproduction",
        passed,
        format!("max |value - (1-a)^2| = {worst_gap:.3e}, slowest alpha {slowest:.3}s"),
    ))
}

/// The extremal function attains `|H_2(2)| = (1 - α)^2`.
pub fn sharpness_attainment() -> Result<CriterionResult> {
    let mut worst = 0.0f64;
    for alpha in alpha_grid() {
        let f = extremal_coeffs(alpha, 16)?;
        let bound = sharp_bound(alpha);
        let det = hankel_det(&f, HankelSpec::second())?;
        let errs = [
            f.get(2).unwrap_or_default().norm(),
            f.get(4).unwrap_or_default().norm(),
            (f.get(3).unwrap_or_default() - alpha.complement()).norm(),
            (det + bound).norm(),
            (det.norm() - bound).abs(),
        ];
        worst = errs.into_iter().fold(worst, f64::max);
    }
    Ok(CriterionResult::new(
        2,
        "sharpness attainment",
        worst <= EXTREMAL_TOL,
        format!("max deviation {worst:.3e}"),
    ))
}

/// Whether the param-search argmax sits on `(p, |y|) = (0, 1)` up to one
/// grid step.
fn lemma_argmax_at_corner(argmax: &Argmax, grid: ParamGrid) -> bool {
    match argmax {
        Argmax::Lemma { p, y, .. } => {
            let dp = 2.0 / (grid.p - 1) as f64;
            let dt = 1.0 / (grid.ymod - 1) as f64;
            *p <= dp + 1e-15 && y.norm() >= 1.0 - dt - 1e-15
        }
        _ => false,
    }
}

pub fn full_parameter_search(alphas: &[Alpha]) -> Result<CriterionResult> {
    let grid = ParamGrid::default();
    let mut passed = true;
    let mut worst_low = 0.0f64;
    let mut worst_high = f64::NEG_INFINITY;
    let mut slowest = 0.0f64;
    let mut misplaced = Vec::new();
    for &alpha in alphas {
        let start = Instant::now();
        let out = maximize_param(alpha, grid)?;
        slowest = slowest.max(start.elapsed().as_secs_f64());
        let bound = sharp_bound(alpha);
        worst_low = worst_low.max(bound - out.value);
        worst_high = worst_high.max(out.value - bound);
        if !lemma_argmax_at_corner(&out.argmax, grid) {
            misplaced.push(alpha.value());
        }
    }
    passed &= worst_low <= PARAM_LOWER_SLACK;
    passed &= worst_high <= SEARCH_UPPER_SLACK;
    passed &= slowest < PARAM_RUNTIME_SECS;
    passed &= misplaced.is_empty();
    Ok(CriterionResult::new(
        3,
        "full-parameter search",
        passed,
        format!(
            "{} alphas, max shortfall {worst_low:.3e}, max excess {worst_high:.3e}, \
             slowest {slowest:.2}s, argmax off (0,1) at {misplaced:?}",
            alphas.len()
        ),
    ))
}

pub fn genuine_function_search() -> Result<CriterionResult> {
    let mut worst_low = 0.0f64;
    let mut worst_high = f64::NEG_INFINITY;
    for v in [0.0, 0.25, 0.5, 0.75] {
        let alpha = Alpha::new(v)?;
        let cfg = HerglotzConfig { atoms: 2, restarts: 100, ..HerglotzConfig::default() };
        let out = maximize_herglotz(alpha, &cfg)?;
        let bound = sharp_bound(alpha);
        worst_low = worst_low.max(bound - out.value);
        worst_high = worst_high.max(out.value - bound);
    }
    Ok(CriterionResult::new(
        4,
        "genuine-function search",
        worst_low <= HERGLOTZ_LOWER_SLACK && worst_high <= SEARCH_UPPER_SLACK,
        format!("max shortfall {worst_low:.3e}, max excess {worst_high:.3e}"),
    ))
}

pub fn prior_result_anchors() -> Result<CriterionResult> {
    let zero = Alpha::new(0.0)?;
    let half = Alpha::new(0.5)?;
    let koebe = CoefficientVector::from_real(&[1.0, 2.0, 3.0, 4.0])?;
    let koebe_det = hankel_det(&koebe, HankelSpec::second())?;
    let phi0 = maximize_phi(zero, DEFAULT_GRID_P, DEFAULT_GRID_T)?.value;
    let phi_half = maximize_phi(half, DEFAULT_GRID_P, DEFAULT_GRID_T)?.value;
    let koebe_moments = coeffs_from_moments(zero, &[Complex64::new(2.0, 0.0); 3]);
    let koebe_from_moments = hankel_det(&koebe_moments, HankelSpec::second())?;
    let passed = sharp_bound(zero) == 1.0
        && sharp_bound(half) == 0.25
        && (phi0 - 1.0).abs() <= PHI_BOUND_TOL
        && (phi_half - 0.25).abs() <= PHI_BOUND_TOL
        && koebe_det == Complex64::new(-1.0, 0.0)
        && (koebe_from_moments.norm() - 1.0).abs() <= EXTREMAL_TOL;
    Ok(CriterionResult::new(
        5,
        "prior-result anchors",
        passed,
        format!("alpha=0 max {phi0}, alpha=1/2 max {phi_half}, Koebe H2(2) = {}", koebe_det.re),
    ))
}

pub fn algebra_reconciliation() -> Result<CriterionResult> {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut worst_moment = 0.0f64;
    let mut ok = true;
    for _ in 0..RANDOM_TRIPLES {
        let alpha = Alpha::new(rng.random::<f64>() * 0.999)?;
        let m = MomentTriple::new(
            sample_unit_disk(&mut rng) * 2.0,
            sample_unit_disk(&mut rng) * 2.0,
            sample_unit_disk(&mut rng) * 2.0,
        );
        let [a2, a3, a4] = closed_form_a234(alpha, &m);
        let direct = a2 * a4 - a3 * a3;
        let lam = functional_moment_form(alpha, &m);
        ok &= rel_close(lam, direct, ALGEBRA_TOL);
        worst_moment = worst_moment.max((lam - direct).norm() / direct.norm().max(1.0));
    }
    let mut worst_param = 0.0f64;
    for _ in 0..RANDOM_LEMMA_POINTS {
        let alpha = Alpha::new(rng.random::<f64>() * 0.999)?;
        let pt = LemmaPoint::sample(&mut rng);
        let psi = functional_param_form(alpha, &pt);
        let lam = functional_moment_form(alpha, &lemma_forward(&pt));
        worst_param = worst_param.max((psi - lam).norm());
    }
    ok &= worst_param <= ALGEBRA_TOL;
    Ok(CriterionResult::new(
        6,
        "algebra reconciliation",
        ok,
        format!("moment form rel err {worst_moment:.3e}, param form abs err {worst_param:.3e}"),
    ))
}

pub fn proof_step_properties() -> Result<CriterionResult> {
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    let mut worst_excess = f64::NEG_INFINITY;
    for _ in 0..RANDOM_LEMMA_POINTS {
        let alpha = Alpha::new(rng.random::<f64>() * 0.999)?;
        let pt = LemmaPoint::sample(&mut rng);
        let t = pt.y().norm().min(1.0);
        let excess = functional_param_form(alpha, &pt).norm() - phi(alpha, pt.p(), t)?;
        worst_excess = worst_excess.max(excess);
    }
    let mut violations = 0;
    let mut profile_err = 0.0f64;
    let mut profile_excess = f64::NEG_INFINITY;
    for alpha in alpha_grid() {
        violations += monotonicity_scan(alpha, 101, 101)?.violations;
        for k in 0..=100 {
            let p = 0.02 * k as f64;
            let b = bound_profile(alpha, p)?;
            profile_err = profile_err.max((phi(alpha, p, 1.0)? - b).abs());
            profile_excess = profile_excess.max(b - sharp_bound(alpha));
        }
    }
    let passed = worst_excess <= DOMINATION_TOL
        && violations == 0
        && profile_err <= PROFILE_TOL
        && profile_excess <= PROFILE_TOL;
    Ok(CriterionResult::new(
        7,
        "proof-step properties",
        passed,
        format!(
            "max |Psi| - phi = {worst_excess:.3e}, monotonicity violations {violations}, \
             profile err {profile_err:.3e}, profile excess {profile_excess:.3e}"
        ),
    ))
}

pub fn caratheodory_admissibility() -> Result<CriterionResult> {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut min_eig = f64::INFINITY;
    let mut worst_trip = 0.0f64;
    let mut round_trips = 0usize;
    for i in 0..RANDOM_ATOM_SETS {
        let atoms = HerglotzAtoms::sample(&mut rng, 1 + i % 5);
        let moments = moments_from_atoms(&atoms, 3);
        min_eig = min_eig.min(toeplitz_psd(&moments).min_eigenvalue);

        let (rot, _) = normalize_rotation(&moments);
        let m = MomentTriple::from_slice(&rot).expect("three moments");
        if m.p1.re >= 2.0 - 1e-3 {
            continue;
        }
        if let Ok(inv) = lemma_inverse(&m) {
            if let (Some(zeta), true) = (inv.zeta, inv.y.norm() < ROUND_TRIP_Y_LIMIT) {
                let back = lemma_forward_raw(m.p1.re, inv.y, zeta);
                worst_trip = worst_trip.max(back.max_abs_diff(&m));
                round_trips += 1;
            }
        }
    }
    // recovery of known (y, ζ) from forward-mapped random points
    let mut worst_recovery = 0.0f64;
    let mut recoveries = 0usize;
    for _ in 0..RANDOM_ATOM_SETS {
        let pt = LemmaPoint::sample(&mut rng);
        if pt.p() >= 2.0 - 1e-3 || pt.y().norm() >= ROUND_TRIP_Y_LIMIT {
            continue;
        }
        let inv = lemma_inverse(&lemma_forward(&pt))?;
        let zeta = inv.zeta.unwrap_or(Complex64::new(f64::NAN, 0.0));
        let err = (inv.y - pt.y()).norm().max((zeta - pt.zeta()).norm());
        worst_recovery = worst_recovery.max(if err.is_nan() { f64::INFINITY } else { err });
        recoveries += 1;
    }
    // every forward-mapped point should carry admissible moments
    let mut forward_min_eig = f64::INFINITY;
    for _ in 0..RANDOM_LEMMA_POINTS {
        let m = lemma_forward(&LemmaPoint::sample(&mut rng));
        forward_min_eig = forward_min_eig.min(toeplitz_psd(&m.to_vec()).min_eigenvalue);
    }
    let passed = min_eig >= PSD_MIN_EIGENVALUE
        && forward_min_eig >= FORWARD_PSD_TOL
        && worst_trip <= ROUND_TRIP_TOL
        && worst_recovery <= ROUND_TRIP_TOL;
    Ok(CriterionResult::new(
        8,
        "Caratheodory admissibility",
        passed,
        format!(
            "min Toeplitz eigenvalue {min_eig:.3e} (atoms), {forward_min_eig:.3e} (forward map); {round_trips} moment round trips, \
             max err {worst_trip:.3e}; {recoveries} (y, zeta) recoveries, max err {worst_recovery:.3e}"
        ),
    ))
}

/// The golden sweep CSV: α from 0 to 0.9 in 9 steps by the majorant.
pub fn golden_sweep_csv() -> Result<String> {
    let rows = sweep_alpha(0.0, 0.9, 9, Method::Phi, &SweepConfig::with_seed(GOLDEN_SEED))?;
    Ok(sweep_to_csv(&rows))
}

pub fn determinism() -> Result<CriterionResult> {
    let mut docs = Vec::new();
    for threads in [1, 2, 4] {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .map_err(|e| crate::Error::Domain(e.to_string()))?;
        docs.push(pool.install(golden_sweep_csv)?);
        docs.push(pool.install(golden_sweep_csv)?);
    }
    let identical = docs.windows(2).all(|w| w[0] == w[1]);

    let small = ParamGrid { p: 41, ymod: 21, yarg: 16, zarg: 16 };
    let alpha = Alpha::new(0.3)?;
    let mut outcomes = Vec::new();
    for threads in [1, 3] {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .map_err(|e| crate::Error::Domain(e.to_string()))?;
        let param = pool.install(|| maximize_param(alpha, small))?;
        let herg = pool.install(|| {
            maximize_herglotz(alpha, &HerglotzConfig { restarts: 12, seed: 5, ..Default::default() })
        })?;
        outcomes.push(serde_json::to_string(&(param, herg)).expect("serializable"));
    }
    let outcomes_identical = outcomes.windows(2).all(|w| w[0] == w[1]);
    Ok(CriterionResult::new(
        9,
        "determinism",
        identical && outcomes_identical,
        format!(
            "{} golden CSVs identical: {identical}; search outcomes identical: {outcomes_identical}",
            docs.len()
        ),
    ))
}

/// Every criterion in order. The param search runs on the full α grid.
pub fn run_all() -> Result<Vec<CriterionResult>> {
    Ok(vec![
        sharp_bound_reproduction()?,
        sharpness_attainment()?,
        full_parameter_search(&alpha_grid())?,
        genuine_function_search()?,
        prior_result_anchors()?,
        algebra_reconciliation()?,
        proof_step_properties()?,
        caratheodory_admissibility()?,
        determinism()?,
    ])
}
