//! Functions with positive real part normalized by `p(0) = 1`.
//!
//! Members are modelled as finite Herglotz averages of the kernels
//! `(1 + e^{iθ} z) / (1 - e^{iθ} z)`. Moment data `p_1..p_m` is checked for
//! admissibility with the Carathéodory–Toeplitz criterion, and the
//! three-moment parameterization `(p, y, ζ)` is available in both directions.

use std::f64::consts::TAU;
use std::fmt;
use std::str::FromStr;

use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::Rng;
use rand_distr::{Distribution, Exp1};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::series::TruncatedSeries;

/// Tolerance on the weight sum of a Herglotz representation.
pub const WEIGHT_SUM_TOL: f64 = 1e-12;
/// Minimum Toeplitz eigenvalue still counted as positive semidefinite.
pub const PSD_TOL: f64 = -1e-9;
/// Below `1 - Y_BOUNDARY_TOL`, ζ is recoverable from the moments.
pub const Y_BOUNDARY_TOL: f64 = 1e-9;
/// Slack on the unit-disk constraints for `y` and `ζ`.
pub const DISK_TOL: f64 = 1e-12;

/// Finite convex combination of boundary atoms.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HerglotzAtoms {
    weights: Vec<f64>,
    angles: Vec<f64>,
}

impl HerglotzAtoms {
    /// Validates weights and reduces angles into `[0, 2π)`.
    pub fn new(weights: Vec<f64>, angles: Vec<f64>) -> Result<Self> {
        if weights.is_empty() {
            return Err(Error::InvalidAtoms("at least one atom is required".into()));
        }
        if weights.len() != angles.len() {
            return Err(Error::InvalidAtoms(format!(
                "{} weights but {} angles",
                weights.len(),
                angles.len()
            )));
        }
        if let Some(w) = weights.iter().find(|w| !(w.is_finite() && **w >= 0.0)) {
            return Err(Error::InvalidAtoms(format!("weight {w} is negative or not finite")));
        }
        if let Some(a) = angles.iter().find(|a| !a.is_finite()) {
            return Err(Error::InvalidAtoms(format!("angle {a} is not finite")));
        }
        let total: f64 = weights.iter().sum();
        if (total - 1.0).abs() > WEIGHT_SUM_TOL {
            return Err(Error::InvalidAtoms(format!("weights sum to {total}, not 1")));
        }
        let angles = angles.into_iter().map(reduce_angle).collect();
        Ok(Self { weights, angles })
    }

    /// Single atom at `angle`: `p(z) = (1 + e^{iθ} z) / (1 - e^{iθ} z)`.
    pub fn single(angle: f64) -> Self {
        Self {
            weights: vec![1.0],
            angles: vec![reduce_angle(angle)],
        }
    }

    /// The atoms `(½, ½)` at `(0, π)`, i.e. `p(z) = (1 + z²) / (1 - z²)`.
    pub fn extremal() -> Self {
        Self {
            weights: vec![0.5, 0.5],
            angles: vec![0.0, std::f64::consts::PI],
        }
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn angles(&self) -> &[f64] {
        &self.angles
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    /// Evaluates `p(z)` exactly from the kernels; requires `|z| < 1`.
    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.weights
            .iter()
            .zip(&self.angles)
            .map(|(&w, &theta)| {
                let ez = Complex64::from_polar(1.0, theta) * z;
                (1.0 + ez) / (1.0 - ez) * w
            })
            .sum()
    }

    /// Random atoms: weights uniform on the simplex (normalized exponential
    /// spacings) and angles uniform on `[0, 2π)`.
    pub fn sample<R: Rng + ?Sized>(rng: &mut R, count: usize) -> Self {
        assert!(count >= 1, "at least one atom");
        let raw: Vec<f64> = (0..count).map(|_| Exp1.sample(rng)).collect();
        let total: f64 = raw.iter().sum();
        let weights = raw.into_iter().map(|w| w / total).collect();
        let angles = (0..count).map(|_| rng.random::<f64>() * TAU).collect();
        Self { weights, angles }
    }

    /// Builds atoms from unnormalized nonnegative weights, renormalizing.
    pub(crate) fn from_unnormalized(weights: &[f64], angles: &[f64]) -> Self {
        let total: f64 = weights.iter().sum();
        Self {
            weights: weights.iter().map(|w| w / total).collect(),
            angles: angles.iter().copied().map(reduce_angle).collect(),
        }
    }
}

/// Text form `weight:angle,weight:angle,...` with angles in radians.
impl FromStr for HerglotzAtoms {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut weights = Vec::new();
        let mut angles = Vec::new();
        for pair in s.split(',') {
            let (w, a) = pair
                .split_once(':')
                .ok_or_else(|| Error::InvalidAtoms(format!("expected weight:angle, got {pair:?}")))?;
            let parse = |t: &str| {
                t.trim()
                    .parse::<f64>()
                    .map_err(|e| Error::InvalidAtoms(format!("{t:?}: {e}")))
            };
            weights.push(parse(w)?);
            angles.push(parse(a)?);
        }
        Self::new(weights, angles)
    }
}

impl fmt::Display for HerglotzAtoms {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (w, a)) in self.weights.iter().zip(&self.angles).enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{w:?}:{a:?}")?;
        }
        Ok(())
    }
}

fn reduce_angle(theta: f64) -> f64 {
    let r = theta.rem_euclid(TAU);
    // rem_euclid can round up to exactly TAU for tiny negative inputs
    if r >= TAU {
        0.0
    } else {
        r
    }
}

/// The first three Taylor coefficients of `p`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MomentTriple {
    pub p1: Complex64,
    pub p2: Complex64,
    pub p3: Complex64,
}

impl MomentTriple {
    pub fn new(p1: Complex64, p2: Complex64, p3: Complex64) -> Self {
        Self { p1, p2, p3 }
    }

    pub fn real(p1: f64, p2: f64, p3: f64) -> Self {
        Self::new(p1.into(), p2.into(), p3.into())
    }

    /// Takes the first three entries of a moment sequence.
    pub fn from_slice(moments: &[Complex64]) -> Option<Self> {
        match moments {
            [p1, p2, p3, ..] => Some(Self::new(*p1, *p2, *p3)),
            _ => None,
        }
    }

    pub fn to_vec(self) -> Vec<Complex64> {
        vec![self.p1, self.p2, self.p3]
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        [
            (self.p1 - other.p1).norm(),
            (self.p2 - other.p2).norm(),
            (self.p3 - other.p3).norm(),
        ]
        .into_iter()
        .fold(0.0, f64::max)
    }
}

/// The `(p, y, ζ)` parameterization of admissible moment triples.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LemmaPoint {
    p: f64,
    y: Complex64,
    zeta: Complex64,
}

impl LemmaPoint {
    pub fn new(p: f64, y: Complex64, zeta: Complex64) -> Result<Self> {
        if !(0.0..=2.0).contains(&p) {
            return Err(Error::InvalidLemmaPoint(format!("p = {p} outside [0, 2]")));
        }
        if !(y.norm() <= 1.0 + DISK_TOL) {
            return Err(Error::InvalidLemmaPoint(format!("|y| = {} exceeds 1", y.norm())));
        }
        if !(zeta.norm() <= 1.0 + DISK_TOL) {
            return Err(Error::InvalidLemmaPoint(format!(
                "|zeta| = {} exceeds 1",
                zeta.norm()
            )));
        }
        Ok(Self { p, y, zeta })
    }

    pub fn p(&self) -> f64 {
        self.p
    }

    pub fn y(&self) -> Complex64 {
        self.y
    }

    pub fn zeta(&self) -> Complex64 {
        self.zeta
    }

    /// `p` uniform on `[0, 2]`; `y` and `ζ` uniform on the closed unit disk.
    pub fn sample<R: Rng + ?Sized>(rng: &mut R) -> Self {
        let p = 2.0 * rng.random::<f64>();
        let y = sample_unit_disk(rng);
        let zeta = sample_unit_disk(rng);
        Self { p, y, zeta }
    }
}

/// Uniform point of the closed unit disk by rejection from the square.
pub fn sample_unit_disk<R: Rng + ?Sized>(rng: &mut R) -> Complex64 {
    loop {
        let z = Complex64::new(
            rng.random_range(-1.0..=1.0),
            rng.random_range(-1.0..=1.0),
        );
        if z.norm_sqr() <= 1.0 {
            return z;
        }
    }
}

/// `p_n = 2 Σ λ_k e^{inθ_k}` for `n = 1..=m`.
pub fn moments_from_atoms(atoms: &HerglotzAtoms, m: usize) -> Vec<Complex64> {
    (1..=m)
        .map(|n| {
            atoms
                .weights
                .iter()
                .zip(&atoms.angles)
                .map(|(&w, &theta)| Complex64::from_polar(2.0 * w, n as f64 * theta))
                .sum()
        })
        .collect()
}

/// The series `1 + Σ p_n z^n` truncated at `order`.
pub fn series_from_atoms(atoms: &HerglotzAtoms, order: usize) -> TruncatedSeries {
    let mut coeffs = Vec::with_capacity(order + 1);
    coeffs.push(Complex64::new(1.0, 0.0));
    coeffs.extend(moments_from_atoms(atoms, order));
    TruncatedSeries::new(coeffs)
}

/// Maps `(p, y, ζ)` to `(p_1, p_2, p_3)`.
pub fn lemma_forward(pt: &LemmaPoint) -> MomentTriple {
    lemma_forward_raw(pt.p, pt.y, pt.zeta)
}

/// [`lemma_forward`] without the range checks on its arguments.
pub fn lemma_forward_raw(p: f64, y: Complex64, zeta: Complex64) -> MomentTriple {
    let w = 4.0 - p * p;
    let p2 = (y * w + p * p) / 2.0;
    let p3 = (y * (2.0 * w * p) - y * y * (p * w) + zeta * (2.0 * w * (1.0 - y.norm_sqr()))
        + p * p * p)
        / 4.0;
    MomentTriple::new(p.into(), p2, p3)
}

/// Result of solving the three-moment parameterization for `(y, ζ)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LemmaInverse {
    pub y: Complex64,
    /// `None` when `|y| = 1` (within tolerance): every ζ is consistent.
    pub zeta: Option<Complex64>,
}

/// Solves for `(y, ζ)` given normalized moments (`p_1` real in `[0, 2)`).
pub fn lemma_inverse(m: &MomentTriple) -> Result<LemmaInverse> {
    let p1 = m.p1;
    if p1.im.abs() > 1e-12 || p1.re < -1e-12 {
        return Err(Error::NotNormalized { re: p1.re, im: p1.im });
    }
    let p = p1.re.max(0.0);
    if p >= 2.0 - 1e-12 {
        return Err(Error::DegenerateP1(p));
    }
    let w = 4.0 - p * p;
    let y = (m.p2 * 2.0 - p * p) / w;
    let ymod = y.norm();
    if ymod > 1.0 + Y_BOUNDARY_TOL {
        return Err(Error::InadmissibleMoments(format!("|y| = {ymod} exceeds 1")));
    }
    if ymod >= 1.0 - Y_BOUNDARY_TOL {
        return Ok(LemmaInverse { y, zeta: None });
    }
    let numer = m.p3 * 4.0 - p * p * p - y * (2.0 * w * p) + y * y * (p * w);
    let zeta = numer / (2.0 * w * (1.0 - y.norm_sqr()));
    if zeta.norm() > 1.0 + Y_BOUNDARY_TOL {
        return Err(Error::InadmissibleMoments(format!(
            "|zeta| = {} exceeds 1",
            zeta.norm()
        )));
    }
    Ok(LemmaInverse {
        y,
        zeta: Some(zeta),
    })
}

/// Outcome of the Toeplitz positivity test.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ToeplitzCheck {
    pub min_eigenvalue: f64,
    pub admissible: bool,
}

/// Hermitian Toeplitz matrix with diagonal 2, `T[j][k] = p_{j-k}` below the
/// diagonal and `conj(p_{k-j})` above it.
pub fn toeplitz_matrix(moments: &[Complex64]) -> DMatrix<Complex64> {
    let size = moments.len() + 1;
    DMatrix::from_fn(size, size, |j, k| match j.cmp(&k) {
        std::cmp::Ordering::Equal => Complex64::new(2.0, 0.0),
        std::cmp::Ordering::Greater => moments[j - k - 1],
        std::cmp::Ordering::Less => moments[k - j - 1].conj(),
    })
}

/// Minimum eigenvalue of the Toeplitz matrix of `p_1..p_m` and whether it
/// clears [`PSD_TOL`].
pub fn toeplitz_psd(moments: &[Complex64]) -> ToeplitzCheck {
    let min_eigenvalue = toeplitz_matrix(moments)
        .symmetric_eigenvalues()
        .iter()
        .copied()
        .fold(f64::INFINITY, f64::min);
    ToeplitzCheck {
        min_eigenvalue,
        admissible: min_eigenvalue >= PSD_TOL,
    }
}

/// Rotates moments `q_n = e^{inθ} p_n` so that `q_1 = |p_1|`. Returns `θ = 0`
/// when `p_1 = 0`.
pub fn normalize_rotation(moments: &[Complex64]) -> (Vec<Complex64>, f64) {
    let Some(&p1) = moments.first() else {
        return (Vec::new(), 0.0);
    };
    if p1 == Complex64::new(0.0, 0.0) || p1.im == 0.0 && p1.re > 0.0 {
        return (moments.to_vec(), 0.0);
    }
    let theta = -p1.arg();
    let mut rotated: Vec<Complex64> = moments
        .iter()
        .enumerate()
        .map(|(i, pn)| pn * Complex64::from_polar(1.0, (i + 1) as f64 * theta))
        .collect();
    rotated[0] = Complex64::new(p1.norm(), 0.0);
    (rotated, theta)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_3, PI};

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn close(a: Complex64, b: Complex64, tol: f64) -> bool {
        (a - b).norm() <= tol
    }

    #[test]
    fn atom_validation() {
        assert!(HerglotzAtoms::new(vec![], vec![]).is_err());
        assert!(HerglotzAtoms::new(vec![0.5, 0.6], vec![0.0, 1.0]).is_err());
        assert!(HerglotzAtoms::new(vec![1.5, -0.5], vec![0.0, 1.0]).is_err());
        assert!(HerglotzAtoms::new(vec![1.0], vec![0.0, 1.0]).is_err());
        let a = HerglotzAtoms::new(vec![1.0], vec![-FRAC_PI_2]).unwrap();
        assert!((a.angles()[0] - 1.5 * PI).abs() < 1e-15);
    }

    #[test]
    fn atom_text_format() {
        let a: HerglotzAtoms = "0.5:0,0.5:3.141592653589793".parse().unwrap();
        assert_eq!(a, HerglotzAtoms::extremal());
        let back: HerglotzAtoms = a.to_string().parse().unwrap();
        assert_eq!(back, a);
        assert!("0.5".parse::<HerglotzAtoms>().is_err());
        assert!("0.5:x".parse::<HerglotzAtoms>().is_err());
    }

    #[test]
    fn moments_single_atom_at_zero() {
        let m = moments_from_atoms(&HerglotzAtoms::single(0.0), 6);
        assert!(m.iter().all(|&pn| pn == c(2.0, 0.0)));
    }

    #[test]
    fn moments_extremal_atoms() {
        let m = moments_from_atoms(&HerglotzAtoms::extremal(), 3);
        assert!(close(m[0], c(0.0, 0.0), 1e-15));
        assert!(close(m[1], c(2.0, 0.0), 1e-15));
        assert!(close(m[2], c(0.0, 0.0), 1e-15));
    }

    #[test]
    fn moments_quarter_turn() {
        let m = moments_from_atoms(&HerglotzAtoms::single(FRAC_PI_2), 3);
        assert!(close(m[0], c(0.0, 2.0), 1e-15));
        assert!(close(m[1], c(-2.0, 0.0), 1e-15));
        assert!(close(m[2], c(0.0, -2.0), 1e-15));
    }

    #[test]
    fn series_from_atoms_cases() {
        let s = series_from_atoms(&HerglotzAtoms::extremal(), 4);
        let expect = TruncatedSeries::from_real(&[1.0, 0.0, 2.0, 0.0, 2.0]);
        assert!(s.max_abs_diff(&expect) < 1e-14);

        let s = series_from_atoms(&HerglotzAtoms::single(0.0), 3);
        assert_eq!(s, TruncatedSeries::from_real(&[1.0, 2.0, 2.0, 2.0]));

        let s = series_from_atoms(&HerglotzAtoms::single(PI), 2);
        let expect = TruncatedSeries::from_real(&[1.0, -2.0, 2.0]);
        assert!(s.max_abs_diff(&expect) < 1e-14);
    }

    #[test]
    fn series_matches_kernel_evaluation() {
        // (1+z²)/(1-z²) against its truncated expansion well inside the disk
        let atoms = HerglotzAtoms::extremal();
        let s = series_from_atoms(&atoms, 40);
        let z = c(0.3, -0.2);
        assert!(close(s.eval(z), atoms.eval(z), 1e-14));
        assert!(close(atoms.eval(z), (1.0 + z * z) / (1.0 - z * z), 1e-15));
    }

    #[test]
    fn lemma_forward_cases() {
        let m = lemma_forward(&LemmaPoint::new(0.0, c(1.0, 0.0), c(0.0, 0.0)).unwrap());
        assert_eq!(m, MomentTriple::real(0.0, 2.0, 0.0));

        let m = lemma_forward(&LemmaPoint::new(2.0, c(0.3, -0.7), c(-0.1, 0.9)).unwrap());
        assert_eq!(m, MomentTriple::real(2.0, 2.0, 2.0));

        let m = lemma_forward(&LemmaPoint::new(1.0, c(0.0, 0.0), c(1.0, 0.0)).unwrap());
        assert_eq!(m, MomentTriple::real(1.0, 0.5, 1.75));
    }

    #[test]
    fn lemma_point_validation() {
        assert!(LemmaPoint::new(-0.1, c(0.0, 0.0), c(0.0, 0.0)).is_err());
        assert!(LemmaPoint::new(2.1, c(0.0, 0.0), c(0.0, 0.0)).is_err());
        assert!(LemmaPoint::new(1.0, c(1.0, 0.1), c(0.0, 0.0)).is_err());
        assert!(LemmaPoint::new(1.0, c(0.0, 0.0), c(0.0, -1.01)).is_err());
        assert!(LemmaPoint::new(1.0, c(f64::NAN, 0.0), c(0.0, 0.0)).is_err());
    }

    #[test]
    fn lemma_inverse_cases() {
        let inv = lemma_inverse(&MomentTriple::real(0.0, 2.0, 0.0)).unwrap();
        assert_eq!(inv.y, c(1.0, 0.0));
        assert_eq!(inv.zeta, None);

        assert!(matches!(
            lemma_inverse(&MomentTriple::real(2.0, 2.0, 2.0)),
            Err(Error::DegenerateP1(_))
        ));

        let atoms = HerglotzAtoms::new(vec![0.5, 0.5], vec![FRAC_PI_3, -FRAC_PI_3]).unwrap();
        let m = MomentTriple::from_slice(&moments_from_atoms(&atoms, 3)).unwrap();
        assert!(m.max_abs_diff(&MomentTriple::real(1.0, -1.0, -2.0)) < 1e-14);
        let inv = lemma_inverse(&MomentTriple::real(1.0, -1.0, -2.0)).unwrap();
        assert_eq!(inv.y, c(-1.0, 0.0));
        assert_eq!(inv.zeta, None);
    }

    #[test]
    fn lemma_inverse_errors() {
        assert!(matches!(
            lemma_inverse(&MomentTriple::new(c(1.0, 0.5), c(0.0, 0.0), c(0.0, 0.0))),
            Err(Error::NotNormalized { .. })
        ));
        assert!(matches!(
            lemma_inverse(&MomentTriple::real(0.0, 3.0, 0.0)),
            Err(Error::InadmissibleMoments(_))
        ));
        assert!(matches!(
            lemma_inverse(&MomentTriple::real(0.0, 0.0, 3.0)),
            Err(Error::InadmissibleMoments(_))
        ));
    }

    #[test]
    fn lemma_round_trip_interior() {
        let pt = LemmaPoint::new(0.7, c(0.2, -0.4), c(-0.5, 0.3)).unwrap();
        let inv = lemma_inverse(&lemma_forward(&pt)).unwrap();
        assert!(close(inv.y, pt.y(), 1e-14));
        assert!(close(inv.zeta.unwrap(), pt.zeta(), 1e-14));
    }

    #[test]
    fn toeplitz_cases() {
        let chk = toeplitz_psd(&[c(2.0, 0.0); 3]);
        assert!(chk.admissible);
        assert!(chk.min_eigenvalue.abs() < 1e-12);

        let chk = toeplitz_psd(&MomentTriple::real(0.0, 2.0, 0.0).to_vec());
        assert!(chk.admissible);
        assert!(chk.min_eigenvalue.abs() < 1e-12);

        let chk = toeplitz_psd(&MomentTriple::real(2.5, 0.0, 0.0).to_vec());
        assert!(!chk.admissible);
        assert!(chk.min_eigenvalue < 0.0);
    }

    #[test]
    fn toeplitz_matrix_is_hermitian() {
        let t = toeplitz_matrix(&[c(0.1, 0.2), c(-0.3, 0.4), c(0.5, -0.6)]);
        assert_eq!(t, t.adjoint());
        assert_eq!(t[(2, 0)], c(-0.3, 0.4));
        assert_eq!(t[(0, 2)], c(-0.3, -0.4));
    }

    #[test]
    fn normalize_rotation_cases() {
        let (q, theta) = normalize_rotation(&[c(0.0, 2.0), c(-2.0, 0.0), c(0.0, -2.0)]);
        assert!((theta + FRAC_PI_2).abs() < 1e-15);
        for qn in q {
            assert!(close(qn, c(2.0, 0.0), 1e-14));
        }

        let input = [c(1.0, 0.0), c(0.0, 1.0), c(0.0, 0.0)];
        assert_eq!(normalize_rotation(&input), (input.to_vec(), 0.0));

        let input = MomentTriple::real(0.0, 2.0, 0.0).to_vec();
        assert_eq!(normalize_rotation(&input), (input.clone(), 0.0));
    }

    #[test]
    fn random_atoms_are_admissible_and_bounded() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for i in 0..1000 {
            let atoms = HerglotzAtoms::sample(&mut rng, 1 + i % 5);
            let total: f64 = atoms.weights().iter().sum();
            assert!((total - 1.0).abs() <= WEIGHT_SUM_TOL);
            let m = moments_from_atoms(&atoms, 8);
            assert!(m.iter().all(|pn| pn.norm() <= 2.0 + 1e-14));
            let chk = toeplitz_psd(&m[..3]);
            assert!(chk.admissible, "{atoms} -> {}", chk.min_eigenvalue);
            let (rot, _) = normalize_rotation(&m[..3]);
            let rchk = toeplitz_psd(&rot);
            assert_eq!(rchk.admissible, chk.admissible);
            assert!((rchk.min_eigenvalue - chk.min_eigenvalue).abs() < 1e-10);
        }
    }

    #[test]
    fn atoms_have_positive_real_part() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let atoms = HerglotzAtoms::sample(&mut rng, 4);
        for k in 0..64 {
            let z = Complex64::from_polar(0.95, k as f64 * TAU / 64.0);
            assert!(atoms.eval(z).re > 0.0);
        }
    }
}
