//! Exhaustive enumeration of root-of-unity valued and group-valued functions.
//!
//! Candidates are numbered lexicographically (the first point is the most
//! significant digit), evaluated in parallel, and collected in index order so
//! results are deterministic.

use rayon::prelude::*;

use crate::analysis::{is_bent, is_g_perfect_nonlinear, BentCriterion, GroupValuedFunction, PnlMode};
use crate::error::{Error, Result};
use crate::function::FunctionOnX;
use crate::group::FiniteAbelianGroup;
use crate::gset::GSet;
use crate::spectral::GDual;

/// Largest candidate space an enumeration may walk.
pub const ENUMERATION_BUDGET: u64 = 100_000_000;

/// `base^points`, or an error when it exceeds the budget.
pub fn candidate_count(base: usize, points: usize) -> Result<u64> {
    if base == 0 {
        return Err(Error::InvalidRootOrder);
    }
    let mut total: u64 = 1;
    for _ in 0..points {
        total = match total.checked_mul(base as u64) {
            Some(t) if t <= ENUMERATION_BUDGET => t,
            _ => {
                return Err(Error::BudgetExceeded {
                    size: (base as f64).powi(points as i32),
                    budget: ENUMERATION_BUDGET,
                })
            }
        };
    }
    Ok(total)
}

/// Digits of `index` in base `base`, most significant first.
pub fn digits_at(mut index: u64, base: usize, points: usize) -> Vec<u32> {
    let mut digits = vec![0; points];
    for d in digits.iter_mut().rev() {
        *d = (index % base as u64) as u32;
        index /= base as u64;
    }
    digits
}

/// Iterator over all exponent vectors `e ∈ [0, q)^n` in lexicographic order.
#[derive(Clone, Debug)]
pub struct UnitaryEnumerator {
    order: usize,
    points: usize,
    next: u64,
    total: u64,
}

impl UnitaryEnumerator {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn total(&self) -> u64 {
        self.total
    }

    /// The unitary function `x ↦ exp(2πi e(x)/q)` for an exponent vector.
    pub fn materialize(&self, exponents: &[u32]) -> FunctionOnX {
        FunctionOnX::from_exponents(exponents, self.order).expect("order is positive")
    }
}

impl Iterator for UnitaryEnumerator {
    type Item = Vec<u32>;

    fn next(&mut self) -> Option<Vec<u32>> {
        if self.next >= self.total {
            return None;
        }
        let item = digits_at(self.next, self.order, self.points);
        self.next += 1;
        Some(item)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.total - self.next) as usize;
        (left, Some(left))
    }
}

impl ExactSizeIterator for UnitaryEnumerator {}

/// All `q^n` root-of-unity valued functions on `n` points.
pub fn enumerate_unitary(points: usize, order: usize) -> Result<UnitaryEnumerator> {
    let total = candidate_count(order, points)?;
    Ok(UnitaryEnumerator {
        order,
        points,
        next: 0,
        total,
    })
}

/// Exponent vectors of every bent function with values in the `q`-th roots
/// of unity, according to `criterion`.
pub fn search_bent(x: &GSet, order: usize, criterion: BentCriterion, tol: f64) -> Result<Vec<Vec<u32>>> {
    let dual = GDual::build(x);
    search_bent_with(x, &dual, order, criterion, tol)
}

pub fn search_bent_with(
    x: &GSet,
    dual: &GDual,
    order: usize,
    criterion: BentCriterion,
    tol: f64,
) -> Result<Vec<Vec<u32>>> {
    let n = x.points();
    let total = candidate_count(order, n)?;
    (0..total)
        .into_par_iter()
        .filter_map(|i| {
            let e = digits_at(i, order, n);
            let f = FunctionOnX::from_exponents(&e, order).expect("order is positive");
            match is_bent(x, dual, &f, criterion, tol) {
                Ok(true) => Some(Ok(e)),
                Ok(false) => None,
                Err(err) => Some(Err(err)),
            }
        })
        .collect()
}

/// Every G-perfect nonlinear function `X → H`.
pub fn search_pnl<'a>(
    x: &'a GSet,
    codomain: &FiniteAbelianGroup,
    mode: PnlMode,
    tol: f64,
) -> Result<Vec<GroupValuedFunction<'a>>> {
    let dual = GDual::build(x);
    search_pnl_with(x, &dual, codomain, mode, tol)
}

pub fn search_pnl_with<'a>(
    x: &'a GSet,
    dual: &GDual,
    codomain: &FiniteAbelianGroup,
    mode: PnlMode,
    tol: f64,
) -> Result<Vec<GroupValuedFunction<'a>>> {
    let n = x.points();
    let k = codomain.order();
    let total = candidate_count(k, n)?;
    if mode == PnlMode::Direct && !n.is_multiple_of(k) {
        return Ok(Vec::new());
    }
    (0..total)
        .into_par_iter()
        .filter_map(|i| {
            let values = digits_at(i, k, n).into_iter().map(|d| d as usize).collect();
            let f = GroupValuedFunction::new(x, codomain.clone(), values).expect("digits are valid elements");
            match is_g_perfect_nonlinear(&f, mode, dual, tol) {
                Ok(true) => Some(Ok(f)),
                Ok(false) => None,
                Err(err) => Some(Err(err)),
            }
        })
        .collect()
}
