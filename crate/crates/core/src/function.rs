//! Complex-valued functions on finite index sets.
//!
//! The same vector type serves as an element of `C^X` (functions on the points
//! of a G-set), of `C^G` (functions on the group) and of the spectral spaces.
//! Which space a vector lives in is determined by the operation producing it.

use std::f64::consts::TAU;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use num_complex::Complex64;

use crate::error::{Error, Result};

/// `exp(2πi k / order)`, exact at multiples of a quarter turn.
pub fn unit_root(order: usize, k: usize) -> Complex64 {
    debug_assert!(order > 0);
    let k = k % order;
    if (4 * k).is_multiple_of(order) {
        return match 4 * k / order {
            0 => Complex64::new(1.0, 0.0),
            1 => Complex64::new(0.0, 1.0),
            2 => Complex64::new(-1.0, 0.0),
            _ => Complex64::new(0.0, -1.0),
        };
    }
    let theta = TAU * k as f64 / order as f64;
    Complex64::new(theta.cos(), theta.sin())
}

#[derive(Clone, Debug, PartialEq)]
pub struct ComplexFunction(Vec<Complex64>);

/// A function `X -> C` indexed by point.
pub type FunctionOnX = ComplexFunction;
/// A function `G -> C` indexed by canonical element order.
pub type FunctionOnG = ComplexFunction;
/// A function on the dual group, indexed by canonical character order.
pub type FunctionOnGDual = ComplexFunction;

impl ComplexFunction {
    pub fn new(values: Vec<Complex64>) -> Self {
        ComplexFunction(values)
    }

    pub fn zeros(len: usize) -> Self {
        ComplexFunction(vec![Complex64::new(0.0, 0.0); len])
    }

    pub fn constant(len: usize, value: Complex64) -> Self {
        ComplexFunction(vec![value; len])
    }

    /// The characteristic function `1_x`.
    pub fn indicator(len: usize, index: usize) -> Self {
        let mut f = Self::zeros(len);
        f.0[index] = Complex64::new(1.0, 0.0);
        f
    }

    pub fn from_real(values: &[f64]) -> Self {
        ComplexFunction(values.iter().map(|&v| Complex64::new(v, 0.0)).collect())
    }

    /// `x ↦ exp(2πi e(x)/q)`.
    pub fn from_exponents(exponents: &[u32], order: usize) -> Result<Self> {
        if order == 0 {
            return Err(Error::InvalidRootOrder);
        }
        Ok(ComplexFunction(
            exponents.iter().map(|&e| unit_root(order, e as usize)).collect(),
        ))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn values(&self) -> &[Complex64] {
        &self.0
    }

    pub fn into_values(self) -> Vec<Complex64> {
        self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Complex64> {
        self.0.iter()
    }

    /// `⟨f, g⟩ = Σ f(x) conj(g(x))`.
    pub fn inner(&self, other: &Self) -> Complex64 {
        debug_assert_eq!(self.len(), other.len());
        self.0.iter().zip(&other.0).map(|(a, b)| a * b.conj()).sum()
    }

    /// Bilinear pairing `Σ f(x) g(x)` without conjugation.
    pub fn dot(&self, other: &Self) -> Complex64 {
        debug_assert_eq!(self.len(), other.len());
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    pub fn norm_sqr(&self) -> f64 {
        self.0.iter().map(|z| z.norm_sqr()).sum()
    }

    pub fn norm(&self) -> f64 {
        self.norm_sqr().sqrt()
    }

    pub fn conj(&self) -> Self {
        ComplexFunction(self.0.iter().map(|z| z.conj()).collect())
    }

    pub fn scale(&self, factor: Complex64) -> Self {
        ComplexFunction(self.0.iter().map(|z| z * factor).collect())
    }

    pub fn scale_real(&self, factor: f64) -> Self {
        ComplexFunction(self.0.iter().map(|z| z * factor).collect())
    }

    /// Pointwise product.
    pub fn hadamard(&self, other: &Self) -> Self {
        debug_assert_eq!(self.len(), other.len());
        ComplexFunction(self.0.iter().zip(&other.0).map(|(a, b)| a * b).collect())
    }

    /// `d(f, g) = |f - g|`.
    pub fn distance(&self, other: &Self) -> f64 {
        debug_assert_eq!(self.len(), other.len());
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| (a - b).norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    /// Largest entrywise modulus of `f - g`.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        debug_assert_eq!(self.len(), other.len());
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    pub fn max_abs(&self) -> f64 {
        self.0.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// `|f(x)| = 1` for every point, within `tol`.
    pub fn is_unitary(&self, tol: f64) -> bool {
        self.check_unitary(tol).is_ok()
    }

    pub fn check_unitary(&self, tol: f64) -> Result<()> {
        for (point, z) in self.0.iter().enumerate() {
            let modulus = z.norm();
            if (modulus - 1.0).abs() > tol {
                return Err(Error::NotUnitary { point, modulus });
            }
        }
        Ok(())
    }

    pub fn is_zero(&self, tol: f64) -> bool {
        self.0.iter().all(|z| z.norm() <= tol)
    }

    pub(crate) fn check_len(&self, expected: usize) -> Result<()> {
        if self.len() != expected {
            return Err(Error::LengthMismatch {
                expected,
                got: self.len(),
            });
        }
        Ok(())
    }
}

impl From<Vec<Complex64>> for ComplexFunction {
    fn from(values: Vec<Complex64>) -> Self {
        ComplexFunction(values)
    }
}

impl Index<usize> for ComplexFunction {
    type Output = Complex64;

    fn index(&self, index: usize) -> &Complex64 {
        &self.0[index]
    }
}

impl IndexMut<usize> for ComplexFunction {
    fn index_mut(&mut self, index: usize) -> &mut Complex64 {
        &mut self.0[index]
    }
}

impl Add for &ComplexFunction {
    type Output = ComplexFunction;

    fn add(self, rhs: &ComplexFunction) -> ComplexFunction {
        debug_assert_eq!(self.len(), rhs.len());
        ComplexFunction(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &ComplexFunction {
    type Output = ComplexFunction;

    fn sub(self, rhs: &ComplexFunction) -> ComplexFunction {
        debug_assert_eq!(self.len(), rhs.len());
        ComplexFunction(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &ComplexFunction {
    type Output = ComplexFunction;

    fn neg(self) -> ComplexFunction {
        ComplexFunction(self.0.iter().map(|z| -z).collect())
    }
}

impl Mul<Complex64> for &ComplexFunction {
    type Output = ComplexFunction;

    fn mul(self, rhs: Complex64) -> ComplexFunction {
        self.scale(rhs)
    }
}

/// Distance from `f` to the nearest member of a finite set of functions.
pub fn set_distance(f: &ComplexFunction, set: &[ComplexFunction]) -> Result<f64> {
    if set.is_empty() {
        return Err(Error::EmptySet);
    }
    for g in set {
        g.check_len(f.len())?;
    }
    Ok(set.iter().map(|g| f.distance(g)).fold(f64::INFINITY, f64::min))
}

/// Distance from `f` to the linear span of `spanning`.
///
/// The span is orthonormalised with modified Gram–Schmidt; vectors whose
/// residual falls below `1e-12` times their original norm are dropped.
pub fn subspace_distance(f: &ComplexFunction, spanning: &[ComplexFunction]) -> Result<f64> {
    let mut basis: Vec<ComplexFunction> = Vec::new();
    for v in spanning {
        v.check_len(f.len())?;
        let scale = v.norm();
        let mut r = v.clone();
        for b in &basis {
            let c = r.inner(b);
            r = &r - &b.scale(c);
        }
        let nr = r.norm();
        if nr > 1e-12 * scale.max(f64::MIN_POSITIVE) {
            basis.push(r.scale_real(1.0 / nr));
        }
    }
    let mut residual = f.clone();
    for b in &basis {
        let c = residual.inner(b);
        residual = &residual - &b.scale(c);
    }
    Ok(residual.norm())
}
