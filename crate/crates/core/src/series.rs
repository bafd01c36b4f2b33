//! Truncated power series with complex coefficients.
//!
//! A [`TruncatedSeries`] of order `N` stores `c_0..c_N` and represents the
//! class of all power series agreeing with it through `z^N`. Binary
//! operations on series of different orders truncate to the shorter one.

use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Default truncation order used across the toolkit.
pub const DEFAULT_ORDER: usize = 16;

/// Constant terms with magnitude at or below this are not invertible.
pub const UNIT_THRESHOLD: f64 = 1e-14;

#[derive(Debug, Clone, PartialEq)]
pub struct TruncatedSeries {
    coeffs: Vec<Complex64>,
}

impl TruncatedSeries {
    /// Builds a series from `c_0..c_N`. An empty input yields the zero series
    /// of order 0.
    pub fn new(mut coeffs: Vec<Complex64>) -> Self {
        if coeffs.is_empty() {
            coeffs.push(Complex64::new(0.0, 0.0));
        }
        Self { coeffs }
    }

    pub fn from_real(coeffs: &[f64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Complex64::new(c, 0.0)).collect())
    }

    pub fn zero(order: usize) -> Self {
        Self::new(vec![Complex64::new(0.0, 0.0); order + 1])
    }

    pub fn constant(value: Complex64, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = value;
        s
    }

    pub fn one(order: usize) -> Self {
        Self::constant(Complex64::new(1.0, 0.0), order)
    }

    /// The monomial `z` truncated at `order` (which must be at least 1 to be
    /// nonzero).
    pub fn z(order: usize) -> Self {
        let mut s = Self::zero(order);
        if order >= 1 {
            s.coeffs[1] = Complex64::new(1.0, 0.0);
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Complex64> {
        self.coeffs
    }

    /// Coefficient of `z^n`, or `None` beyond the truncation order.
    pub fn coeff(&self, n: usize) -> Option<Complex64> {
        self.coeffs.get(n).copied()
    }

    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.order());
        Self::new(self.coeffs[..=order].to_vec())
    }

    pub fn scale(&self, factor: Complex64) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * factor).collect())
    }

    /// Cauchy product truncated to the smaller of the two orders.
    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let coeffs = (0..=order)
            .map(|n| (0..=n).map(|k| self.coeffs[k] * other.coeffs[n - k]).sum())
            .collect();
        Self::new(coeffs)
    }

    /// Quotient `self / other`, truncated to the smaller order.
    pub fn div(&self, other: &Self) -> Result<Self> {
        let b0 = other.coeffs[0];
        if b0.norm() <= UNIT_THRESHOLD {
            return Err(Error::DivisionByNonUnit(b0.norm()));
        }
        let order = self.order().min(other.order());
        let mut q: Vec<Complex64> = Vec::with_capacity(order + 1);
        for n in 0..=order {
            let acc: Complex64 = (1..=n).map(|k| other.coeffs[k] * q[n - k]).sum();
            q.push((self.coeffs[n] - acc) / b0);
        }
        Ok(Self::new(q))
    }

    /// `self^beta` for a series with constant term exactly 1, using the
    /// recurrence obtained from `u v' = beta u' v`:
    /// `n v_n = sum_{k=1..n} (k (beta + 1) - n) u_k v_{n-k}`, `v_0 = 1`.
    pub fn real_power(&self, beta: f64) -> Result<Self> {
        if self.coeffs[0] != Complex64::new(1.0, 0.0) {
            return Err(Error::NonUnitConstant);
        }
        let order = self.order();
        let mut v: Vec<Complex64> = Vec::with_capacity(order + 1);
        v.push(Complex64::new(1.0, 0.0));
        for n in 1..=order {
            let acc: Complex64 = (1..=n)
                .map(|k| self.coeffs[k] * v[n - k] * (k as f64 * (beta + 1.0) - n as f64))
                .sum();
            v.push(acc / n as f64);
        }
        Ok(Self::new(v))
    }

    /// `z f'(z)`: coefficient `n` becomes `n f_n`.
    pub fn z_derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(n, c)| c * n as f64)
                .collect(),
        )
    }

    /// Horner evaluation of the truncated polynomial.
    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.coeffs
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, c| acc * z + c)
    }

    /// Largest coefficient-wise distance over the common order.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn add(self, rhs: Self) -> TruncatedSeries {
        TruncatedSeries::new(
            self.coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn sub(self, rhs: Self) -> TruncatedSeries {
        TruncatedSeries::new(
            self.coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn mul(self, rhs: Self) -> TruncatedSeries {
        TruncatedSeries::mul(self, rhs)
    }
}

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn neg(self) -> TruncatedSeries {
        TruncatedSeries::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    fn assert_close(a: &TruncatedSeries, b: &TruncatedSeries, tol: f64) {
        assert_eq!(a.order(), b.order(), "{a:?} vs {b:?}");
        assert!(a.max_abs_diff(b) <= tol, "{a:?} vs {b:?}");
    }

    #[test]
    fn difference_of_squares() {
        let a = TruncatedSeries::from_real(&[1.0, 1.0, 0.0]);
        let b = TruncatedSeries::from_real(&[1.0, -1.0, 0.0]);
        assert_eq!(a.mul(&b), TruncatedSeries::from_real(&[1.0, 0.0, -1.0]));
    }

    #[test]
    fn multiplicative_identity() {
        let a = TruncatedSeries::from_real(&[0.3, -1.5, 2.0, 4.0]);
        assert_eq!(a.mul(&TruncatedSeries::one(3)), a);
    }

    #[test]
    fn square_of_quadratic() {
        let a = TruncatedSeries::from_real(&[1.0, 2.0, 2.0, 0.0, 0.0]);
        assert_eq!(
            a.mul(&a),
            TruncatedSeries::from_real(&[1.0, 4.0, 8.0, 8.0, 4.0])
        );
    }

    #[test]
    fn mixed_orders_truncate() {
        let a = TruncatedSeries::from_real(&[1.0, 1.0, 1.0, 1.0]);
        let b = TruncatedSeries::from_real(&[1.0, 1.0]);
        assert_eq!(a.mul(&b).order(), 1);
        assert_eq!((&a + &b).order(), 1);
    }

    #[test]
    fn division_cases() {
        let num = TruncatedSeries::from_real(&[1.0, 0.0, -1.0]);
        let den = TruncatedSeries::from_real(&[1.0, -1.0, 0.0]);
        assert_close(
            &num.div(&den).unwrap(),
            &TruncatedSeries::from_real(&[1.0, 1.0, 0.0]),
            1e-15,
        );

        let a = TruncatedSeries::from_real(&[2.0, 0.5, -0.25, 3.0]);
        assert_close(&a.div(&a).unwrap(), &TruncatedSeries::one(3), 1e-14);

        let geo = TruncatedSeries::one(6)
            .div(&TruncatedSeries::from_real(&[1.0, -1.0, 0.0, 0.0, 0.0, 0.0, 0.0]))
            .unwrap();
        assert_close(&geo, &TruncatedSeries::from_real(&[1.0; 7]), 0.0);

        let err = a.div(&TruncatedSeries::from_real(&[1e-15, 1.0])).unwrap_err();
        assert!(matches!(err, Error::DivisionByNonUnit(_)));
    }

    #[test]
    fn real_power_cases() {
        let u = TruncatedSeries::from_real(&[1.0, 0.0, -1.0, 0.0, 0.0]);
        assert_eq!(u.real_power(0.0).unwrap(), TruncatedSeries::one(4));
        assert_close(
            &u.real_power(-1.0).unwrap(),
            &TruncatedSeries::from_real(&[1.0, 0.0, 1.0, 0.0, 1.0]),
            1e-15,
        );
        assert_close(
            &u.real_power(-0.5).unwrap(),
            &TruncatedSeries::from_real(&[1.0, 0.0, 0.5, 0.0, 0.375]),
            1e-15,
        );
        let bad = TruncatedSeries::from_real(&[2.0, 1.0]);
        assert_eq!(bad.real_power(0.5).unwrap_err(), Error::NonUnitConstant);
    }

    #[test]
    fn z_derivative_cases() {
        let z = TruncatedSeries::z(3);
        assert_eq!(z.z_derivative(), z);
        assert_eq!(
            TruncatedSeries::one(2).z_derivative(),
            TruncatedSeries::zero(2)
        );
        let f = TruncatedSeries::from_real(&[0.0, 1.0, 2.0, 3.0]);
        assert_eq!(
            f.z_derivative(),
            TruncatedSeries::from_real(&[0.0, 1.0, 4.0, 9.0])
        );
    }

    #[test]
    fn eval_matches_direct_sum() {
        let f = TruncatedSeries::from_real(&[1.0, 2.0, 3.0]);
        let z = Complex64::new(0.5, 0.25);
        let direct = c(1.0) + z * 2.0 + z * z * 3.0;
        assert!((f.eval(z) - direct).norm() < 1e-15);
    }

    fn unit_box_series(order: usize) -> impl Strategy<Value = TruncatedSeries> {
        prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), order + 1).prop_map(|v| {
            TruncatedSeries::new(v.into_iter().map(|(re, im)| Complex64::new(re, im)).collect())
        })
    }

    fn unit_constant_series(order: usize) -> impl Strategy<Value = TruncatedSeries> {
        prop::collection::vec((-0.3f64..0.3, -0.3f64..0.3), order).prop_map(|v| {
            let mut coeffs = vec![c(1.0)];
            coeffs.extend(v.into_iter().map(|(re, im)| Complex64::new(re, im)));
            TruncatedSeries::new(coeffs)
        })
    }

    proptest! {
        #[test]
        fn mul_commutative_associative(
            a in unit_box_series(12), b in unit_box_series(12), d in unit_box_series(12)
        ) {
            prop_assert!(a.mul(&b).max_abs_diff(&b.mul(&a)) <= 1e-12);
            let left = a.mul(&b).mul(&d);
            let right = a.mul(&b.mul(&d));
            prop_assert!(left.max_abs_diff(&right) <= 1e-12);
        }

        #[test]
        fn div_inverts_mul(a in unit_box_series(10), b in unit_box_series(10)) {
            prop_assume!(b.coeffs()[0].norm() > 1e-6);
            let back = a.mul(&b).div(&b).unwrap();
            // the quotient recurrence amplifies rounding by powers of 1/|b0|
            let scale = (1.0 / b.coeffs()[0].norm()).powi(10).max(1.0);
            prop_assume!(scale < 1e3);
            prop_assert!(back.max_abs_diff(&a) <= 1e-12 * scale);
        }

        #[test]
        fn real_power_adds_exponents(
            u in unit_constant_series(12), b1 in -3.0f64..3.0, b2 in -3.0f64..3.0
        ) {
            let lhs = u.real_power(b1 + b2).unwrap();
            let rhs = u.real_power(b1).unwrap().mul(&u.real_power(b2).unwrap());
            prop_assert!(lhs.max_abs_diff(&rhs) <= 1e-10);
        }

        #[test]
        fn z_derivative_leibniz(a in unit_box_series(12), b in unit_box_series(12)) {
            let lhs = a.mul(&b).z_derivative();
            let rhs = &a.z_derivative().mul(&b) + &a.mul(&b.z_derivative());
            prop_assert!(lhs.max_abs_diff(&rhs) <= 1e-12);
        }
    }
}
