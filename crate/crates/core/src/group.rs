//! Finite abelian groups given by invariant factors, their characters, and
//! Fourier analysis of functions on the group.
//!
//! Elements are residue tuples `(r_1, .., r_k)` with `r_j` in `[0, n_j)`,
//! enumerated lexicographically (first residue most significant), so the
//! identity has index 0. Characters are indexed the same way: the character
//! with exponent tuple `e` sends `r` to `Π_j exp(2πi e_j r_j / n_j)`. The
//! group operation is written additively on indices.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::function::{unit_root, FunctionOnG, FunctionOnGDual};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteAbelianGroup {
    invariants: Vec<usize>,
    strides: Vec<usize>,
    order: usize,
    exponent: usize,
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl FiniteAbelianGroup {
    /// Builds `Z_{n_1} × .. × Z_{n_k}`. An empty list gives the trivial group.
    pub fn new(invariants: &[usize]) -> Result<Self> {
        if let Some(&bad) = invariants.iter().find(|&&n| n < 2) {
            return Err(Error::InvalidInvariant(bad));
        }
        let mut strides = vec![1; invariants.len()];
        for j in (0..invariants.len().saturating_sub(1)).rev() {
            strides[j] = strides[j + 1] * invariants[j + 1];
        }
        let order = invariants.iter().product();
        let exponent = invariants.iter().fold(1, |l, &n| l / gcd(l, n) * n);
        Ok(FiniteAbelianGroup {
            invariants: invariants.to_vec(),
            strides,
            order,
            exponent,
        })
    }

    pub fn trivial() -> Self {
        Self::new(&[]).expect("empty invariant list is valid")
    }

    pub fn cyclic(n: usize) -> Result<Self> {
        Self::new(&[n])
    }

    pub fn invariants(&self) -> &[usize] {
        &self.invariants
    }

    /// `|G| = m`.
    pub fn order(&self) -> usize {
        self.order
    }

    /// Number of cyclic factors.
    pub fn rank(&self) -> usize {
        self.invariants.len()
    }

    /// Least common multiple of the invariant factors.
    pub fn exponent(&self) -> usize {
        self.exponent
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    pub fn residues(&self, index: usize) -> Vec<usize> {
        debug_assert!(index < self.order);
        self.invariants
            .iter()
            .zip(&self.strides)
            .map(|(&n, &s)| (index / s) % n)
            .collect()
    }

    pub fn index_of(&self, residues: &[usize]) -> Result<usize> {
        if residues.len() != self.rank() {
            return Err(Error::RankMismatch {
                expected: self.rank(),
                got: residues.len(),
            });
        }
        let mut index = 0;
        for (position, ((&r, &n), &s)) in residues
            .iter()
            .zip(&self.invariants)
            .zip(&self.strides)
            .enumerate()
        {
            if r >= n {
                return Err(Error::ResidueOutOfRange {
                    position,
                    value: r,
                    modulus: n,
                });
            }
            index += r * s;
        }
        Ok(index)
    }

    pub fn check_element(&self, index: usize) -> Result<()> {
        if index >= self.order {
            return Err(Error::ElementOutOfRange {
                index,
                order: self.order,
            });
        }
        Ok(())
    }

    /// The canonical generator `e_j` (residue 1 in factor `j`, 0 elsewhere).
    pub fn generator(&self, j: usize) -> usize {
        self.strides[j]
    }

    pub fn op(&self, a: usize, b: usize) -> usize {
        let mut index = 0;
        for (&n, &s) in self.invariants.iter().zip(&self.strides) {
            let r = ((a / s) % n + (b / s) % n) % n;
            index += r * s;
        }
        index
    }

    pub fn inverse(&self, a: usize) -> usize {
        let mut index = 0;
        for (&n, &s) in self.invariants.iter().zip(&self.strides) {
            let r = (n - (a / s) % n) % n;
            index += r * s;
        }
        index
    }

    /// Order of the element `a`.
    pub fn element_order(&self, a: usize) -> usize {
        self.invariants
            .iter()
            .zip(&self.strides)
            .map(|(&n, &s)| n / gcd(n, (a / s) % n))
            .fold(1, |l, k| l / gcd(l, k) * k)
    }

    /// Phase `k` such that `ψ(α) = exp(2πi k / exponent)`.
    pub fn character_phase(&self, psi: usize, alpha: usize) -> usize {
        let l = self.exponent;
        let mut k = 0;
        for (&n, &s) in self.invariants.iter().zip(&self.strides) {
            let e = (psi / s) % n;
            let r = (alpha / s) % n;
            k = (k + (e * r % n) * (l / n)) % l;
        }
        k
    }

    /// `ψ(α)`.
    pub fn character(&self, psi: usize, alpha: usize) -> Complex64 {
        unit_root(self.exponent, self.character_phase(psi, alpha))
    }

    /// Index of the conjugate character `ψ̄ = ψ^{-1}`.
    pub fn conjugate_character(&self, psi: usize) -> usize {
        self.inverse(psi)
    }

    pub fn is_real_character(&self, psi: usize) -> bool {
        self.conjugate_character(psi) == psi
    }

    /// Index of the principal (unity) character.
    pub fn principal_character(&self) -> usize {
        0
    }

    /// The character `ψ` as a function on `G`.
    pub fn character_function(&self, psi: usize) -> FunctionOnG {
        FunctionOnG::new(self.elements().map(|a| self.character(psi, a)).collect())
    }

    /// All characters of `G` in canonical order; row `ψ` holds `ψ(α)` over `α`.
    pub fn dual_group(&self) -> Vec<FunctionOnG> {
        self.elements().map(|psi| self.character_function(psi)).collect()
    }

    /// `ρ`: `m` at the identity, 0 elsewhere.
    pub fn regular_character(&self) -> FunctionOnG {
        let mut rho = FunctionOnG::zeros(self.order);
        rho[0] = Complex64::new(self.order as f64, 0.0);
        rho
    }

    /// `σ̂(ψ) = Σ_α σ(α) ψ(α)`.
    pub fn fourier(&self, sigma: &FunctionOnG) -> Result<FunctionOnGDual> {
        sigma.check_len(self.order)?;
        Ok(FunctionOnGDual::new(
            self.elements()
                .map(|psi| self.elements().map(|a| sigma[a] * self.character(psi, a)).sum())
                .collect(),
        ))
    }

    /// `τ̌(α) = (1/m) Σ_ψ τ(ψ̄) ψ(α)`.
    pub fn fourier_inverse(&self, tau: &FunctionOnGDual) -> Result<FunctionOnG> {
        tau.check_len(self.order)?;
        let inv_m = 1.0 / self.order as f64;
        Ok(FunctionOnG::new(
            self.elements()
                .map(|a| {
                    self.elements()
                        .map(|psi| tau[self.conjugate_character(psi)] * self.character(psi, a))
                        .sum::<Complex64>()
                        * inv_m
                })
                .collect(),
        ))
    }

    /// `(τ*σ)(α) = Σ_β τ(β) σ(β⁻¹α)`.
    pub fn convolve(&self, tau: &FunctionOnG, sigma: &FunctionOnG) -> Result<FunctionOnG> {
        tau.check_len(self.order)?;
        sigma.check_len(self.order)?;
        Ok(FunctionOnG::new(
            self.elements()
                .map(|a| {
                    self.elements()
                        .map(|b| tau[b] * sigma[self.op(self.inverse(b), a)])
                        .sum()
                })
                .collect(),
        ))
    }
}
