//! Coefficients of starlike functions of order α.
//!
//! A normalized `f(z) = z + a_2 z^2 + ...` is starlike of order α exactly
//! when `z f'(z) = [α + (1 - α) p(z)] f(z)` for some `p` with positive real
//! part. Equating coefficients gives
//! `(n - 1) a_n = (1 - α) Σ_{k=1}^{n-1} p_k a_{n-k}`.

use std::f64::consts::TAU;
use std::fmt;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::caratheodory::{moments_from_atoms, HerglotzAtoms, MomentTriple};
use crate::error::{Error, Result};
use crate::series::TruncatedSeries;

pub const DEFAULT_MEMBERSHIP_RADIUS: f64 = 0.99;
pub const DEFAULT_MEMBERSHIP_SAMPLES: usize = 720;

/// Order of starlikeness, `0 <= α < 1`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize, Deserialize)]
#[serde(try_from = "f64", into = "f64")]
pub struct Alpha(f64);

impl Alpha {
    pub fn new(value: f64) -> Result<Self> {
        if (0.0..1.0).contains(&value) {
            Ok(Self(value))
        } else {
            Err(Error::InvalidAlpha(value))
        }
    }

    pub fn value(self) -> f64 {
        self.0
    }

    /// `1 - α`.
    pub fn complement(self) -> f64 {
        1.0 - self.0
    }
}

impl TryFrom<f64> for Alpha {
    type Error = Error;

    fn try_from(value: f64) -> Result<Self> {
        Self::new(value)
    }
}

impl From<Alpha> for f64 {
    fn from(a: Alpha) -> f64 {
        a.0
    }
}

impl fmt::Display for Alpha {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// `a_1..a_N` of a normalized function, stored with `a_1 = 1` first.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CoefficientVector {
    a: Vec<Complex64>,
}

impl CoefficientVector {
    /// Requires `a[0] == 1` exactly.
    pub fn new(a: Vec<Complex64>) -> Result<Self> {
        if a.first() != Some(&Complex64::new(1.0, 0.0)) {
            return Err(Error::InvalidCoefficients);
        }
        Ok(Self { a })
    }

    pub fn from_real(a: &[f64]) -> Result<Self> {
        Self::new(a.iter().map(|&x| x.into()).collect())
    }

    /// Reads `a_1..a_N` off a series `f = z + ...` (coefficient 0 is ignored).
    pub fn from_series(f: &TruncatedSeries) -> Result<Self> {
        Self::new(f.coeffs().iter().skip(1).copied().collect())
    }

    /// Number of stored coefficients `N`.
    pub fn len(&self) -> usize {
        self.a.len()
    }

    pub fn is_empty(&self) -> bool {
        self.a.is_empty()
    }

    /// `a_n` for `1 <= n <= N`.
    pub fn get(&self, n: usize) -> Option<Complex64> {
        n.checked_sub(1).and_then(|i| self.a.get(i).copied())
    }

    pub fn as_slice(&self) -> &[Complex64] {
        &self.a
    }

    /// The series `0 + a_1 z + ... + a_N z^N`.
    pub fn to_series(&self) -> TruncatedSeries {
        let mut coeffs = vec![Complex64::new(0.0, 0.0)];
        coeffs.extend_from_slice(&self.a);
        TruncatedSeries::new(coeffs)
    }
}

/// Coefficients `a_1..a_N` from moments `p_1..p_{N-1}` (`N = p.len() + 1`).
pub fn coeffs_from_moments(alpha: Alpha, p: &[Complex64]) -> CoefficientVector {
    let scale = alpha.complement();
    let n_max = p.len() + 1;
    let mut a = Vec::with_capacity(n_max);
    a.push(Complex64::new(1.0, 0.0));
    for n in 2..=n_max {
        let acc: Complex64 = (1..n).map(|k| a[n - k - 1] * p[k - 1]).sum();
        a.push(acc * (scale / (n - 1) as f64));
    }
    CoefficientVector { a }
}

/// Coefficients `a_1..a_N` of the function generated by Herglotz atoms.
pub fn coeffs_from_atoms(alpha: Alpha, atoms: &HerglotzAtoms, n: usize) -> CoefficientVector {
    coeffs_from_moments(alpha, &moments_from_atoms(atoms, n.saturating_sub(1)))
}

/// Explicit `a_2`, `a_3`, `a_4` in terms of `p_1, p_2, p_3`.
pub fn closed_form_a234(alpha: Alpha, m: &MomentTriple) -> [Complex64; 3] {
    let s = alpha.complement();
    let (p1, p2, p3) = (m.p1, m.p2, m.p3);
    let a2 = p1 * s;
    let a3 = (p1 * p1 * (2.0 * s * s) + p2 * 2.0 - p2 * (2.0 * alpha.value())) / 4.0;
    let a4 = (p1 * p1 * p1 * (s * s) + p1 * p2 * (3.0 * s) + p3 * 2.0) * (s / 6.0);
    [a2, a3, a4]
}

/// Coefficients of `z (1 - z^2)^{-(1 - α)}`: odd, with
/// `a_{2k+1} = (1 - α)_k / k!`.
pub fn extremal_coeffs(alpha: Alpha, n: usize) -> Result<CoefficientVector> {
    if n < 4 {
        return Err(Error::Domain(format!("extremal order {n} must be at least 4")));
    }
    let s = alpha.complement();
    let mut a = vec![Complex64::new(0.0, 0.0); n];
    let mut odd = 1.0;
    a[0] = Complex64::new(1.0, 0.0);
    for k in 1.. {
        let idx = 2 * k;
        if idx >= n {
            break;
        }
        odd *= (s + (k - 1) as f64) / k as f64;
        a[idx] = Complex64::new(odd, 0.0);
    }
    Ok(CoefficientVector { a })
}

/// `e^{-iθ} f(e^{iθ} z)`: `a_n ↦ e^{i(n-1)θ} a_n`.
pub fn rotate_function(f: &CoefficientVector, theta: f64) -> CoefficientVector {
    let a = f
        .a
        .iter()
        .enumerate()
        .map(|(i, &an)| {
            if i == 0 {
                an
            } else {
                an * Complex64::from_polar(1.0, i as f64 * theta)
            }
        })
        .collect();
    CoefficientVector { a }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MembershipReport {
    pub min_margin: f64,
    pub ok: bool,
}

/// Samples `Re[z f'/f] - α = (1 - α) Re p(z)` on `|z| = radius` and reports
/// its minimum. A diagnostic only: it does not prove membership.
pub fn verify_membership(
    atoms: &HerglotzAtoms,
    alpha: Alpha,
    radius: f64,
    samples: usize,
) -> Result<MembershipReport> {
    if !(radius > 0.0 && radius < 1.0) {
        return Err(Error::InvalidRadius(radius));
    }
    if samples == 0 {
        return Err(Error::Domain("membership needs at least one sample".into()));
    }
    let min_re = (0..samples)
        .map(|k| {
            let z = Complex64::from_polar(radius, TAU * k as f64 / samples as f64);
            atoms.eval(z).re
        })
        .fold(f64::INFINITY, f64::min);
    let min_margin = alpha.complement() * min_re;
    Ok(MembershipReport {
        min_margin,
        ok: min_margin > 0.0,
    })
}
