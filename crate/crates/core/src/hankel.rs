//! Hankel determinants and the closed-form functionals around `H_2(2)`.
//!
//! The chain is: the moment form `Λ(p_1, p_2, p_3) = a_2 a_4 - a_3^2`, the
//! parameterized form `Ψ(p, y, ζ)` obtained by substituting the three-moment
//! parameterization, its triangle-inequality majorant `φ(p, t)` with
//! `t = |y|`, the profile `φ(p, 1)`, and the bound `(1 - α)^2`.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::caratheodory::{LemmaPoint, MomentTriple};
use crate::error::{Error, Result};
use crate::starlike::{Alpha, CoefficientVector};

/// Largest supported determinant size.
pub const MAX_ORDER: usize = 6;
/// Pivots at or below this magnitude make the elimination report zero.
pub const PIVOT_THRESHOLD: f64 = 1e-14;

/// Selects `H_q(n)`: the `q × q` matrix with entries `a_{n+i+j}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct HankelSpec {
    pub q: usize,
    pub n: usize,
}

impl HankelSpec {
    pub fn new(q: usize, n: usize) -> Result<Self> {
        if q == 0 || n == 0 {
            return Err(Error::Domain(format!("Hankel determinant needs q, n >= 1 (q={q}, n={n})")));
        }
        Ok(Self { q, n })
    }

    /// `H_2(2) = a_2 a_4 - a_3^2`.
    pub fn second() -> Self {
        Self { q: 2, n: 2 }
    }

    /// Highest coefficient index the determinant touches.
    pub fn last_index(&self) -> usize {
        self.n + 2 * self.q - 2
    }
}

pub fn hankel_det(f: &CoefficientVector, spec: HankelSpec) -> Result<Complex64> {
    let HankelSpec { q, n } = spec;
    if q == 0 || n == 0 {
        return Err(Error::Domain(format!("Hankel determinant needs q, n >= 1 (q={q}, n={n})")));
    }
    if q > MAX_ORDER {
        return Err(Error::UnsupportedOrder(q));
    }
    let needed = spec.last_index();
    if f.len() < needed {
        return Err(Error::InsufficientCoefficients {
            needed,
            available: f.len(),
        });
    }
    let a = |k: usize| f.get(k).expect("length checked");
    let m = |i: usize, j: usize| a(n + i + j);
    Ok(match q {
        1 => m(0, 0),
        2 => m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0),
        3 => {
            m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1))
                - m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0))
                + m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0))
        }
        _ => {
            let rows: Vec<Vec<Complex64>> =
                (0..q).map(|i| (0..q).map(|j| m(i, j)).collect()).collect();
            eliminate(rows)
        }
    })
}

/// Gaussian elimination with partial pivoting.
fn eliminate(mut rows: Vec<Vec<Complex64>>) -> Complex64 {
    let size = rows.len();
    let mut det = Complex64::new(1.0, 0.0);
    for col in 0..size {
        let pivot = (col..size)
            .max_by(|&r, &s| rows[r][col].norm().total_cmp(&rows[s][col].norm()))
            .expect("non-empty range");
        if rows[pivot][col].norm() <= PIVOT_THRESHOLD {
            return Complex64::new(0.0, 0.0);
        }
        if pivot != col {
            rows.swap(pivot, col);
            det = -det;
        }
        let p = rows[col][col];
        det *= p;
        for r in col + 1..size {
            let factor = rows[r][col] / p;
            for k in col..size {
                let v = rows[col][k];
                rows[r][k] -= factor * v;
            }
        }
    }
    det
}

/// `a_2 a_4 - a_3^2` via the moment form:
/// `Λ = (1-α)^2 [ -(1/12)(1-α)^2 p_1^4 - p_2^2/4 + p_1 p_3/3 ]`.
pub fn functional_moment_form(alpha: Alpha, m: &MomentTriple) -> Complex64 {
    let s = alpha.complement();
    let s2 = s * s;
    let p1sq = m.p1 * m.p1;
    let inner = p1sq * p1sq * (-s2 / 12.0) - m.p2 * m.p2 / 4.0 + m.p1 * m.p3 / 3.0;
    inner * s2
}

/// `3 - 8α + 4α^2`, which changes sign at `α = 1/2`.
pub fn quartic_coefficient(alpha: Alpha) -> f64 {
    let a = alpha.value();
    3.0 - 8.0 * a + 4.0 * a * a
}

/// The five-term form `Ψ(p, y, ζ)` whose modulus is `|a_2 a_4 - a_3^2|`.
pub fn functional_param_form(alpha: Alpha, pt: &LemmaPoint) -> Complex64 {
    let (a, b) = param_form_parts(alpha, pt.p(), pt.y());
    a + b * pt.zeta()
}

/// Splits `Ψ = A + B ζ` for fixed `(p, y)`; `Ψ` is affine in `ζ`.
pub(crate) fn param_form_parts(alpha: Alpha, p: f64, y: Complex64) -> (Complex64, Complex64) {
    let s = alpha.complement();
    let s2 = s * s;
    let w = 4.0 - p * p;
    let p2 = p * p;
    let y2 = y * y;
    let a = -(s2 * quartic_coefficient(alpha) * p2 * p2) / 48.0
        + y * (s2 * p2 * w / 24.0)
        - y2 * (s2 * p2 * w / 12.0)
        - y2 * (s2 * w * w / 16.0);
    let b = s2 * p * w * (1.0 - y.norm_sqr()) / 6.0;
    (a, Complex64::new(b, 0.0))
}

fn check_box(p: f64, t: Option<f64>) -> Result<()> {
    if !(0.0..=2.0).contains(&p) {
        return Err(Error::Domain(format!("p = {p} outside [0, 2]")));
    }
    if let Some(t) = t {
        if !(0.0..=1.0).contains(&t) {
            return Err(Error::Domain(format!("t = {t} outside [0, 1]")));
        }
    }
    Ok(())
}

/// Majorant `φ(p, t)` of `|Ψ|` over `|y| = t`.
pub fn phi(alpha: Alpha, p: f64, t: f64) -> Result<f64> {
    check_box(p, Some(t))?;
    Ok(phi_unchecked(alpha, p, t))
}

pub(crate) fn phi_unchecked(alpha: Alpha, p: f64, t: f64) -> f64 {
    let s = alpha.complement();
    let p2 = p * p;
    let w = 4.0 - p2;
    let terms = quartic_coefficient(alpha).abs() * p2 * p2 / 48.0
        + p2 * w * t / 24.0
        + p2 * w * t * t / 12.0
        + w * w * t * t / 16.0
        + p * w * (1.0 - t * t) / 6.0;
    s * s * terms
}

/// `∂φ/∂t` divided by `(1 - α)^2`: `(4 - p^2)[p^2/24 + t (p - 2)(p - 6)/24]`.
pub fn phi_t_slope(p: f64, t: f64) -> f64 {
    (4.0 - p * p) * (p * p / 24.0 + t * (p - 2.0) * (p - 6.0) / 24.0)
}

/// `φ(p, 1) = (1-α)^2 (1 - p^4/16 + p^4 |3 - 8α + 4α^2| / 48)`.
pub fn bound_profile(alpha: Alpha, p: f64) -> Result<f64> {
    check_box(p, None)?;
    Ok(bound_profile_unchecked(alpha, p))
}

pub(crate) fn bound_profile_unchecked(alpha: Alpha, p: f64) -> f64 {
    let s = alpha.complement();
    let p4 = p * p * p * p;
    s * s * (1.0 - p4 / 16.0 + p4 * quartic_coefficient(alpha).abs() / 48.0)
}

/// The sharp bound `(1 - α)^2`.
pub fn sharp_bound(alpha: Alpha) -> f64 {
    let s = alpha.complement();
    s * s
}

/// `a_2 a_4 - a_3^2` of a coefficient vector.
pub fn second_hankel(f: &CoefficientVector) -> Result<Complex64> {
    hankel_det(f, HankelSpec::second())
}
