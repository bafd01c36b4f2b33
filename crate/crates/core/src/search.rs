//! Derivative-free maximization of `|H_2(2)|` over its parameterizations.
//!
//! Three routes are provided: the majorant `φ(p, t)` on a grid with a
//! golden-section pass, `|Ψ(p, y, ζ)|` on a polar grid over the full
//! parameter box, and random-restart coordinate search over Herglotz atoms.
//!
//! Grid searches split work by the outermost (`p`) index. Each slice is
//! scanned in lexicographic order and the slice winners are reduced in the
//! same order, so the result does not depend on the number of workers. A
//! candidate replaces the incumbent only if it is larger by more than
//! [`TIE_TOL`] (relative); ties go to the lexicographically smaller point.

use std::f64::consts::TAU;
use std::fmt::Write as _;

use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::caratheodory::{HerglotzAtoms, LemmaPoint};
use crate::error::{Error, Result};
use crate::hankel::{
    bound_profile_unchecked, functional_param_form, hankel_det, param_form_parts, phi_unchecked,
    sharp_bound, HankelSpec,
};
use crate::starlike::{coeffs_from_atoms, Alpha};

/// Relative margin a candidate must clear to displace the incumbent.
pub const TIE_TOL: f64 = 1e-14;

pub const DEFAULT_GRID_P: usize = 201;
pub const DEFAULT_GRID_T: usize = 101;
pub const DEFAULT_GRID_YMOD: usize = 101;
pub const DEFAULT_GRID_YARG: usize = 64;
pub const DEFAULT_GRID_ZARG: usize = 64;
pub const DEFAULT_ATOMS: usize = 2;
pub const DEFAULT_RESTARTS: usize = 100;
pub const DEFAULT_LOCAL_STEPS: usize = 200;
pub const DEFAULT_SEED: u64 = 0;
pub const MAX_ATOMS: usize = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Phi,
    Lemma,
    Herglotz,
}

impl std::str::FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "phi" => Ok(Self::Phi),
            "lemma" => Ok(Self::Lemma),
            "herglotz" => Ok(Self::Herglotz),
            other => Err(Error::Domain(format!("unknown method {other:?}"))),
        }
    }
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Self::Phi => "phi",
            Self::Lemma => "lemma",
            Self::Herglotz => "herglotz",
        })
    }
}

/// Location of the reported maximum, tagged by method.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Argmax {
    Phi { p: f64, t: f64 },
    Lemma { p: f64, y: Complex64, zeta: Complex64 },
    Herglotz { weights: Vec<f64>, angles: Vec<f64> },
}

impl Argmax {
    /// One-line summary without commas, for CSV cells.
    pub fn summary(&self) -> String {
        match self {
            Self::Phi { p, t } => format!("p={p:?};t={t:?}"),
            Self::Lemma { p, y, zeta } => format!(
                "p={p:?};y_abs={:?};y_arg={:?};zeta_arg={:?}",
                y.norm(),
                y.arg(),
                zeta.arg()
            ),
            Self::Herglotz { weights, angles } => {
                let mut s = String::from("atoms=");
                for (i, (w, a)) in weights.iter().zip(angles).enumerate() {
                    if i > 0 {
                        s.push('|');
                    }
                    let _ = write!(s, "{w:?}:{a:?}");
                }
                s
            }
        }
    }
}

/// Resolution and seed of a search. Unused fields are omitted from JSON.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct GridSpec {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub grid_p: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub grid_t: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub grid_ymod: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub grid_yarg: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub grid_zarg: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub atoms: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub restarts: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub local_steps: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub seed: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SearchOutcome {
    pub alpha: f64,
    pub value: f64,
    pub argmax: Argmax,
    pub method: Method,
    pub grid_spec: GridSpec,
    pub evaluations: u64,
}

impl SearchOutcome {
    /// Recomputes the searched functional at `argmax`.
    pub fn reevaluate(&self) -> Result<f64> {
        let alpha = Alpha::new(self.alpha)?;
        match &self.argmax {
            Argmax::Phi { p, t } => crate::hankel::phi(alpha, *p, *t),
            Argmax::Lemma { p, y, zeta } => {
                let pt = LemmaPoint::new(*p, *y, *zeta)?;
                Ok(functional_param_form(alpha, &pt).norm())
            }
            Argmax::Herglotz { weights, angles } => {
                let atoms = HerglotzAtoms::new(weights.clone(), angles.clone())?;
                herglotz_objective(alpha, &atoms)
            }
        }
    }
}

/// Running maximum with the lexicographic tie rule; `key` orders candidates.
#[derive(Debug, Clone, Copy)]
struct Best<K> {
    value: f64,
    key: K,
}

impl<K: Copy> Best<K> {
    fn offer(slot: &mut Option<Self>, value: f64, key: K) {
        match slot {
            Some(b) if !(value > b.value + TIE_TOL * b.value.abs().max(1.0)) => {}
            _ => *slot = Some(Best { value, key }),
        }
    }

    fn merge(slots: impl IntoIterator<Item = Option<Self>>) -> Option<Self> {
        let mut best = None;
        for b in slots.into_iter().flatten() {
            Best::offer(&mut best, b.value, b.key);
        }
        best
    }
}

fn linspace(lo: f64, hi: f64, count: usize) -> impl Iterator<Item = f64> + Clone {
    let last = count - 1;
    (0..count).map(move |i| {
        if i == last {
            hi
        } else {
            lo + (hi - lo) * i as f64 / last as f64
        }
    })
}

fn require_grid(name: &str, count: usize, min: usize) -> Result<()> {
    if count < min {
        return Err(Error::Domain(format!("{name} = {count} must be at least {min}")));
    }
    Ok(())
}

/// Maximizes `f` on `[lo, hi]` by golden-section search; returns the best
/// point seen (endpoints included) and the number of evaluations.
pub fn golden_section_max<F: Fn(f64) -> f64>(
    f: F,
    lo: f64,
    hi: f64,
    tol: f64,
    max_iter: usize,
) -> (f64, f64, u64) {
    const INV_PHI: f64 = 0.618_033_988_749_894_8;
    let mut evals = 0u64;
    let mut eval = |x: f64| {
        evals += 1;
        f(x)
    };
    let mut best: Option<Best<f64>> = None;
    let (flo, fhi) = (eval(lo), eval(hi));
    Best::offer(&mut best, flo, lo);
    Best::offer(&mut best, fhi, hi);

    let (mut a, mut b) = (lo, hi);
    let mut c = b - INV_PHI * (b - a);
    let mut d = a + INV_PHI * (b - a);
    let (mut fc, mut fd) = (eval(c), eval(d));
    for _ in 0..max_iter {
        if (b - a).abs() <= tol {
            break;
        }
        if fc >= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - INV_PHI * (b - a);
            fc = eval(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + INV_PHI * (b - a);
            fd = eval(d);
        }
    }
    // candidates offered in increasing x so ties go to the smaller point
    let mut tail = [(c, fc), (d, fd)];
    tail.sort_by(|x, y| x.0.total_cmp(&y.0));
    for (x, fx) in tail {
        Best::offer(&mut best, fx, x);
    }
    let b = best.expect("at least two evaluations");
    (b.key, b.value, evals)
}

/// Grid maximum of `φ(p, t)` on `[0, 2] × [0, 1]`, then a golden-section pass
/// in `p` along `t = 1` around the best grid point of that row.
pub fn maximize_phi(alpha: Alpha, grid_p: usize, grid_t: usize) -> Result<SearchOutcome> {
    require_grid("grid_p", grid_p, 2)?;
    require_grid("grid_t", grid_t, 2)?;
    let ps: Vec<f64> = linspace(0.0, 2.0, grid_p).collect();
    let ts: Vec<f64> = linspace(0.0, 1.0, grid_t).collect();

    let slices: Vec<Option<Best<(f64, f64)>>> = ps
        .par_iter()
        .map(|&p| {
            let mut best = None;
            for &t in &ts {
                Best::offer(&mut best, phi_unchecked(alpha, p, t), (p, t));
            }
            best
        })
        .collect();
    let mut best = Best::merge(slices).expect("non-empty grid");
    let mut evaluations = (grid_p * grid_t) as u64;

    // best p on the t = 1 row
    let row_best = Best::merge(
        ps.iter()
            .map(|&p| Some(Best { value: bound_profile_unchecked(alpha, p), key: p })),
    )
    .expect("non-empty grid");
    let step = 2.0 / (grid_p - 1) as f64;
    let lo = (row_best.key - step).max(0.0);
    let hi = (row_best.key + step).min(2.0);
    let (p_star, _, evals) =
        golden_section_max(|p| phi_unchecked(alpha, p, 1.0), lo, hi, 1e-12, 200);
    evaluations += evals;
    let refined = phi_unchecked(alpha, p_star, 1.0);
    let candidate = Best { value: refined, key: (p_star, 1.0) };
    let displaced = refined > best.value + TIE_TOL * best.value.abs().max(1.0)
        || (refined >= best.value - TIE_TOL * best.value.abs().max(1.0)
            && (p_star, 1.0) < best.key);
    if displaced {
        best = candidate;
    }

    let (p, t) = best.key;
    Ok(SearchOutcome {
        alpha: alpha.value(),
        value: phi_unchecked(alpha, p, t),
        argmax: Argmax::Phi { p, t },
        method: Method::Phi,
        grid_spec: GridSpec {
            grid_p: Some(grid_p),
            grid_t: Some(grid_t),
            ..GridSpec::default()
        },
        evaluations,
    })
}

/// Grid resolution for [`maximize_param`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ParamGrid {
    pub p: usize,
    pub ymod: usize,
    pub yarg: usize,
    pub zarg: usize,
}

impl Default for ParamGrid {
    fn default() -> Self {
        Self {
            p: DEFAULT_GRID_P,
            ymod: DEFAULT_GRID_YMOD,
            yarg: DEFAULT_GRID_YARG,
            zarg: DEFAULT_GRID_ZARG,
        }
    }
}

/// Maximizes `|Ψ(p, y, ζ)|` with `y = t e^{iμ}` and `ζ = e^{iν}` on the unit
/// circle (Ψ is affine in ζ, so the disk maximum sits on the boundary).
pub fn maximize_param(alpha: Alpha, grid: ParamGrid) -> Result<SearchOutcome> {
    require_grid("grid_p", grid.p, 2)?;
    require_grid("grid_ymod", grid.ymod, 2)?;
    require_grid("grid_yarg", grid.yarg, 2)?;
    require_grid("grid_zarg", grid.zarg, 2)?;

    let ps: Vec<f64> = linspace(0.0, 2.0, grid.p).collect();
    let ts: Vec<f64> = linspace(0.0, 1.0, grid.ymod).collect();
    let mus: Vec<f64> = (0..grid.yarg).map(|k| TAU * k as f64 / grid.yarg as f64).collect();
    let unit_y: Vec<Complex64> = mus.iter().map(|&m| Complex64::from_polar(1.0, m)).collect();
    let nus: Vec<f64> = (0..grid.zarg).map(|k| TAU * k as f64 / grid.zarg as f64).collect();
    let zeta_trig: Vec<(f64, f64)> = nus.iter().map(|&n| (n.cos(), n.sin())).collect();

    // Squared modulus |A + B e^{iν}|^2 with B real.
    let slices: Vec<Option<Best<(usize, usize, usize, usize)>>> = (0..grid.p)
        .into_par_iter()
        .map(|ip| {
            let p = ps[ip];
            let mut best = None;
            for (it, &t) in ts.iter().enumerate() {
                for (iy, &u) in unit_y.iter().enumerate() {
                    let (a, b) = param_form_parts(alpha, p, u * t);
                    let b = b.re;
                    let base = a.norm_sqr() + b * b;
                    for (iz, &(cn, sn)) in zeta_trig.iter().enumerate() {
                        let v = base + 2.0 * b * (a.re * cn + a.im * sn);
                        Best::offer(&mut best, v, (ip, it, iy, iz));
                    }
                }
            }
            best
        })
        .collect();
    let best = Best::merge(slices).expect("non-empty grid");
    let (ip, it, iy, iz) = best.key;
    let y = unit_y[iy] * ts[it];
    let zeta = Complex64::from_polar(1.0, nus[iz]);
    let pt = LemmaPoint::new(ps[ip], y, zeta)?;
    Ok(SearchOutcome {
        alpha: alpha.value(),
        value: functional_param_form(alpha, &pt).norm(),
        argmax: Argmax::Lemma { p: ps[ip], y, zeta },
        method: Method::Lemma,
        grid_spec: GridSpec {
            grid_p: Some(grid.p),
            grid_ymod: Some(grid.ymod),
            grid_yarg: Some(grid.yarg),
            grid_zarg: Some(grid.zarg),
            ..GridSpec::default()
        },
        evaluations: (grid.p * grid.ymod * grid.yarg * grid.zarg) as u64,
    })
}

/// `|a_2 a_4 - a_3^2|` of the function generated by `atoms`.
pub fn herglotz_objective(alpha: Alpha, atoms: &HerglotzAtoms) -> Result<f64> {
    let f = coeffs_from_atoms(alpha, atoms, 4);
    Ok(hankel_det(&f, HankelSpec::second())?.norm())
}

#[derive(Debug, Clone, PartialEq)]
pub struct HerglotzConfig {
    pub atoms: usize,
    pub restarts: usize,
    pub local_steps: usize,
    pub seed: u64,
    /// Optional starting point evaluated (and refined) before the restarts.
    pub initial: Option<HerglotzAtoms>,
}

impl Default for HerglotzConfig {
    fn default() -> Self {
        Self {
            atoms: DEFAULT_ATOMS,
            restarts: DEFAULT_RESTARTS,
            local_steps: DEFAULT_LOCAL_STEPS,
            seed: DEFAULT_SEED,
            initial: None,
        }
    }
}

/// Coordinate search over angles and (unnormalized) weights with a step that
/// halves after every sweep without improvement.
fn refine_atoms(alpha: Alpha, start: &HerglotzAtoms, steps: usize) -> Result<(HerglotzAtoms, f64, u64)> {
    let k = start.len();
    let mut weights = start.weights().to_vec();
    let mut angles = start.angles().to_vec();
    let mut current = start.clone();
    let mut value = herglotz_objective(alpha, &current)?;
    let mut evals = 1u64;
    let mut angle_step = 0.5;
    let mut weight_step = 0.25;

    for _ in 0..steps {
        let mut improved = false;
        // single atoms have nothing to redistribute
        let weight_coords = if k > 1 { k } else { 0 };
        for coord in 0..k + weight_coords {
            for dir in [1.0, -1.0] {
                let (mut w, mut a) = (weights.clone(), angles.clone());
                if coord < k {
                    a[coord] += dir * angle_step;
                } else {
                    let i = coord - k;
                    w[i] = (w[i] + dir * weight_step).max(0.0);
                    if w.iter().sum::<f64>() <= 0.0 {
                        continue;
                    }
                }
                let cand = HerglotzAtoms::from_unnormalized(&w, &a);
                let v = herglotz_objective(alpha, &cand)?;
                evals += 1;
                if v > value + TIE_TOL * value.abs().max(1.0) {
                    value = v;
                    current = cand;
                    weights = current.weights().to_vec();
                    angles = current.angles().to_vec();
                    improved = true;
                }
            }
        }
        if !improved {
            angle_step *= 0.5;
            weight_step *= 0.5;
            if angle_step < 1e-12 {
                break;
            }
        }
    }
    Ok((current, value, evals))
}

/// Random-restart search for the largest `|H_2(2)|` over functions generated
/// by `K` atoms.
pub fn maximize_herglotz(alpha: Alpha, config: &HerglotzConfig) -> Result<SearchOutcome> {
    if config.atoms == 0 || config.atoms > MAX_ATOMS {
        return Err(Error::Domain(format!(
            "atom count {} must be in 1..={MAX_ATOMS}",
            config.atoms
        )));
    }
    if let Some(init) = &config.initial {
        if init.len() != config.atoms {
            return Err(Error::Domain(format!(
                "initial atoms have {} entries, expected {}",
                init.len(),
                config.atoms
            )));
        }
    }
    if config.initial.is_none() && config.restarts == 0 {
        return Err(Error::Domain("no restarts and no initial atoms".into()));
    }

    let mut starts: Vec<Option<HerglotzAtoms>> = Vec::with_capacity(config.restarts + 1);
    starts.push(config.initial.clone());
    starts.extend((0..config.restarts).map(|_| None));

    let runs: Vec<Result<(HerglotzAtoms, f64, u64)>> = starts
        .into_par_iter()
        .enumerate()
        .map(|(idx, start)| match (idx, start) {
            (0, None) => Ok((HerglotzAtoms::single(0.0), f64::NEG_INFINITY, 0)),
            (0, Some(init)) => {
                if config.restarts == 0 {
                    let v = herglotz_objective(alpha, &init)?;
                    Ok((init, v, 1))
                } else {
                    refine_atoms(alpha, &init, config.local_steps)
                }
            }
            (idx, _) => {
                let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
                rng.set_stream(idx as u64);
                let init = HerglotzAtoms::sample(&mut rng, config.atoms);
                refine_atoms(alpha, &init, config.local_steps)
            }
        })
        .collect();

    let mut best: Option<Best<usize>> = None;
    let mut evaluations = 0;
    let mut found = Vec::with_capacity(runs.len());
    for (i, run) in runs.into_iter().enumerate() {
        let (atoms, value, evals) = run?;
        evaluations += evals;
        if value.is_finite() {
            Best::offer(&mut best, value, i);
        }
        found.push(atoms);
    }
    let best = best.expect("at least one evaluated start");
    let atoms = found.swap_remove(best.key);
    Ok(SearchOutcome {
        alpha: alpha.value(),
        value: herglotz_objective(alpha, &atoms)?,
        argmax: Argmax::Herglotz {
            weights: atoms.weights().to_vec(),
            angles: atoms.angles().to_vec(),
        },
        method: Method::Herglotz,
        grid_spec: GridSpec {
            atoms: Some(config.atoms),
            restarts: Some(config.restarts),
            local_steps: Some(config.local_steps),
            seed: Some(config.seed),
            ..GridSpec::default()
        },
        evaluations,
    })
}

/// Resolution settings shared by every α of a sweep.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepConfig {
    pub grid_p: usize,
    pub grid_t: usize,
    pub param: ParamGrid,
    pub herglotz: HerglotzConfig,
}

impl Default for SweepConfig {
    fn default() -> Self {
        Self {
            grid_p: DEFAULT_GRID_P,
            grid_t: DEFAULT_GRID_T,
            param: ParamGrid::default(),
            herglotz: HerglotzConfig::default(),
        }
    }
}

impl SweepConfig {
    pub fn with_seed(seed: u64) -> Self {
        let mut cfg = Self::default();
        cfg.herglotz.seed = seed;
        cfg
    }
}

/// Runs one search by method.
pub fn search(alpha: Alpha, method: Method, config: &SweepConfig) -> Result<SearchOutcome> {
    match method {
        Method::Phi => maximize_phi(alpha, config.grid_p, config.grid_t),
        Method::Lemma => maximize_param(alpha, config.param),
        Method::Herglotz => maximize_herglotz(alpha, &config.herglotz),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepRow {
    pub alpha: f64,
    pub searched_max: f64,
    pub sharp_bound: f64,
    pub abs_gap: f64,
    pub argmax: String,
}

/// Searches at `steps + 1` equally spaced α from `alpha_start` to
/// `alpha_end` inclusive.
pub fn sweep_alpha(
    alpha_start: f64,
    alpha_end: f64,
    steps: usize,
    method: Method,
    config: &SweepConfig,
) -> Result<Vec<SweepRow>> {
    if !(0.0 <= alpha_start && alpha_start < alpha_end && alpha_end < 1.0) {
        return Err(Error::Domain(format!(
            "need 0 <= alpha_start < alpha_end < 1, got [{alpha_start}, {alpha_end}]"
        )));
    }
    if steps == 0 {
        return Err(Error::Domain("steps must be at least 1".into()));
    }
    linspace(alpha_start, alpha_end, steps + 1)
        .map(|a| {
            let alpha = Alpha::new(a)?;
            let out = search(alpha, method, config)?;
            let bound = sharp_bound(alpha);
            Ok(SweepRow {
                alpha: a,
                searched_max: out.value,
                sharp_bound: bound,
                abs_gap: (out.value - bound).abs(),
                argmax: out.argmax.summary(),
            })
        })
        .collect()
}

pub const CSV_HEADER: &str = "alpha,searched_max,sharp_bound,abs_gap,argmax";

/// Seventeen significant digits in scientific notation.
pub fn format_number(x: f64) -> String {
    format!("{x:.16e}")
}

/// Renders rows as LF-terminated CSV with [`CSV_HEADER`].
pub fn sweep_to_csv(rows: &[SweepRow]) -> String {
    let mut out = String::with_capacity(64 * (rows.len() + 1));
    out.push_str(CSV_HEADER);
    out.push('\n');
    for r in rows {
        let _ = writeln!(
            out,
            "{},{},{},{},{}",
            format_number(r.alpha),
            format_number(r.searched_max),
            format_number(r.sharp_bound),
            format_number(r.abs_gap),
            r.argmax
        );
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MonotonicityReport {
    pub violations: usize,
    /// Largest drop `φ(t_j) - φ(t_{j+1})` seen; negative when φ strictly
    /// increases everywhere.
    pub worst_gap: f64,
    pub comparisons: usize,
}

/// Counts adjacent `t`-grid pairs where `φ` drops by more than `1e-12`.
pub fn monotonicity_scan(alpha: Alpha, grid_p: usize, grid_t: usize) -> Result<MonotonicityReport> {
    require_grid("grid_p", grid_p, 2)?;
    require_grid("grid_t", grid_t, 2)?;
    let ts: Vec<f64> = linspace(0.0, 1.0, grid_t).collect();
    let per_p: Vec<(usize, f64)> = linspace(0.0, 2.0, grid_p)
        .collect::<Vec<_>>()
        .par_iter()
        .map(|&p| {
            let values: Vec<f64> = ts.iter().map(|&t| phi_unchecked(alpha, p, t)).collect();
            values.windows(2).fold((0, f64::NEG_INFINITY), |(n, worst), w| {
                let drop = w[0] - w[1];
                (n + usize::from(drop > 1e-12), worst.max(drop))
            })
        })
        .collect();
    let (violations, worst_gap) = per_p
        .into_iter()
        .fold((0, f64::NEG_INFINITY), |(n, w), (k, g)| (n + k, w.max(g)));
    Ok(MonotonicityReport {
        violations,
        worst_gap,
        comparisons: grid_p * (grid_t - 1),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn alpha(v: f64) -> Alpha {
        Alpha::new(v).unwrap()
    }

    #[test]
    fn golden_section_finds_interior_maximum() {
        let (x, fx, evals) = golden_section_max(|x| -(x - 0.3) * (x - 0.3), 0.0, 1.0, 1e-10, 200);
        assert!((x - 0.3).abs() < 1e-6);
        assert!(fx <= 0.0 && fx > -1e-12);
        assert!(evals > 4);
        let (x, _, _) = golden_section_max(|x| -x, 0.0, 1.0, 1e-10, 200);
        assert_eq!(x, 0.0);
    }

    #[test]
    fn phi_search_cases() {
        let out = maximize_phi(alpha(0.5), 201, 101).unwrap();
        assert!((out.value - 0.25).abs() <= 1e-12);
        assert_eq!(out.argmax, Argmax::Phi { p: 0.0, t: 1.0 });

        let out = maximize_phi(alpha(0.0), 201, 101).unwrap();
        assert!((out.value - 1.0).abs() <= 1e-12);
        assert_eq!(out.argmax, Argmax::Phi { p: 0.0, t: 1.0 });

        assert!(maximize_phi(alpha(0.0), 1, 101).is_err());
        assert!(maximize_phi(alpha(0.0), 201, 1).is_err());
    }

    #[test]
    fn param_search_small_grid_respects_bound() {
        for v in [0.0, 0.3, 0.8] {
            let a = alpha(v);
            let out = maximize_param(a, ParamGrid { p: 21, ymod: 2, yarg: 8, zarg: 8 }).unwrap();
            assert!(out.value <= sharp_bound(a) + 1e-9);
            assert!((out.reevaluate().unwrap() - out.value).abs() <= 1e-12);
        }
        assert!(maximize_param(alpha(0.1), ParamGrid { p: 1, ..ParamGrid::default() }).is_err());
    }

    #[test]
    fn param_search_alpha_zero_hits_corner() {
        let out = maximize_param(alpha(0.0), ParamGrid { p: 21, ymod: 11, yarg: 16, zarg: 16 }).unwrap();
        assert_eq!(out.value, 1.0);
        match out.argmax {
            Argmax::Lemma { p, y, zeta } => {
                assert_eq!(p, 0.0);
                assert_eq!(y, Complex64::new(1.0, 0.0));
                assert_eq!(zeta, Complex64::new(1.0, 0.0));
            }
            other => panic!("unexpected argmax {other:?}"),
        }
    }

    #[test]
    fn herglotz_seeded_at_extremal() {
        let a = alpha(0.25);
        for restarts in [0, 3] {
            let cfg = HerglotzConfig {
                restarts,
                initial: Some(HerglotzAtoms::extremal()),
                ..HerglotzConfig::default()
            };
            let out = maximize_herglotz(a, &cfg).unwrap();
            assert!((out.value - 9.0 / 16.0).abs() <= 1e-10, "{}", out.value);
        }
    }

    #[test]
    fn herglotz_single_atom_koebe() {
        let out = maximize_herglotz(
            alpha(0.0),
            &HerglotzConfig { atoms: 1, restarts: 8, ..HerglotzConfig::default() },
        )
        .unwrap();
        assert!((out.value - 1.0).abs() < 1e-9);
        assert!((herglotz_objective(alpha(0.0), &HerglotzAtoms::single(0.0)).unwrap() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn herglotz_config_errors() {
        let a = alpha(0.1);
        assert!(maximize_herglotz(a, &HerglotzConfig { atoms: 0, ..Default::default() }).is_err());
        assert!(maximize_herglotz(a, &HerglotzConfig { atoms: 5, ..Default::default() }).is_err());
        assert!(maximize_herglotz(a, &HerglotzConfig { restarts: 0, ..Default::default() }).is_err());
        let cfg = HerglotzConfig {
            atoms: 3,
            initial: Some(HerglotzAtoms::extremal()),
            ..Default::default()
        };
        assert!(maximize_herglotz(a, &cfg).is_err());
    }

    #[test]
    fn herglotz_is_reproducible() {
        let cfg = HerglotzConfig { restarts: 10, seed: 99, ..HerglotzConfig::default() };
        let a = maximize_herglotz(alpha(0.6), &cfg).unwrap();
        let b = maximize_herglotz(alpha(0.6), &cfg).unwrap();
        assert_eq!(a, b);
        assert!((a.reevaluate().unwrap() - a.value).abs() <= 1e-12);
    }

    #[test]
    fn sweep_validation_and_rows() {
        assert!(sweep_alpha(0.5, 0.5, 3, Method::Phi, &SweepConfig::default()).is_err());
        assert!(sweep_alpha(0.0, 1.0, 3, Method::Phi, &SweepConfig::default()).is_err());
        assert!(sweep_alpha(0.0, 0.5, 0, Method::Phi, &SweepConfig::default()).is_err());
        let rows = sweep_alpha(0.0, 0.9, 10, Method::Phi, &SweepConfig::default()).unwrap();
        assert_eq!(rows.len(), 11);
        assert_eq!(rows.last().unwrap().alpha, 0.9);
        assert!(rows.windows(2).all(|w| w[0].alpha < w[1].alpha));
        assert!(rows.iter().all(|r| r.abs_gap <= 1e-9));
    }

    #[test]
    fn csv_layout() {
        let rows = vec![SweepRow {
            alpha: 0.5,
            searched_max: 0.25,
            sharp_bound: 0.25,
            abs_gap: 0.0,
            argmax: "p=0.0;t=1.0".into(),
        }];
        let csv = sweep_to_csv(&rows);
        assert_eq!(
            csv,
            "alpha,searched_max,sharp_bound,abs_gap,argmax\n\
             5.0000000000000000e-1,2.5000000000000000e-1,2.5000000000000000e-1,0.0000000000000000e0,p=0.0;t=1.0\n"
        );
        let back: f64 = format_number(0.1 + 0.2).parse().unwrap();
        assert_eq!(back, 0.1 + 0.2);
    }

    #[test]
    fn monotonicity_cases() {
        for v in [0.3, 0.0] {
            let rep = monotonicity_scan(alpha(v), 101, 101).unwrap();
            assert_eq!(rep.violations, 0);
            assert_eq!(rep.comparisons, 101 * 100);
        }
        assert_eq!(monotonicity_scan(alpha(0.4), 101, 2).unwrap().violations, 0);
        assert!(monotonicity_scan(alpha(0.4), 101, 1).is_err());
    }

    #[test]
    fn method_parse() {
        assert_eq!("lemma".parse::<Method>().unwrap(), Method::Lemma);
        assert!("grid".parse::<Method>().is_err());
        assert_eq!(Method::Herglotz.to_string(), "herglotz");
    }
}
