//! Bentness of unitary functions on a G-set and perfect nonlinearity of
//! group-valued functions.
//!
//! A unitary `f: X → T` is bent when `Σ_{λ∈(X̂)_ψ} |f̂(λ)|² = n²/m` for every
//! character `ψ`. Three equivalent tests are offered: the spectral one, the
//! vanishing of every nontrivial derivative sum `Σ_x f(αx) f(x)⁻¹`, and the
//! orbit-map form `(1/n) Σ_x |f̂_x(ψ)|² = m` where `f_x(α) = f(αx)`.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::function::{FunctionOnG, FunctionOnGDual, FunctionOnX};
use crate::group::FiniteAbelianGroup;
use crate::gset::GSet;
use crate::spectral::{component_dimensions, psi_component, GDual};

/// Which equivalent bentness test to run.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BentCriterion {
    /// Equal spectral energy on every character component.
    Spectral,
    /// Every nontrivial derivative sums to zero.
    Derivatives,
    /// `(1/n) Σ_x |f̂_x(ψ)|² = m` for every `ψ`.
    Poinsot,
}

impl BentCriterion {
    pub const ALL: [BentCriterion; 3] = [
        BentCriterion::Spectral,
        BentCriterion::Derivatives,
        BentCriterion::Poinsot,
    ];
}

/// A derivative `f'_α`, defined on the support of `f`.
#[derive(Clone, Debug, PartialEq)]
pub struct Derivative {
    pub support: Vec<usize>,
    pub values: Vec<Complex64>,
}

impl Derivative {
    pub fn sum(&self) -> Complex64 {
        self.values.iter().sum()
    }

    /// The derivative extended by zero to all of `X`.
    pub fn to_function(&self, points: usize) -> FunctionOnX {
        let mut out = FunctionOnX::zeros(points);
        for (&p, &v) in self.support.iter().zip(&self.values) {
            out[p] = v;
        }
        out
    }
}

/// Points where `|f(x)| > tol`, after checking that `f` is nonzero and its
/// zero set is a union of orbits.
fn differentiable_support(x: &GSet, f: &FunctionOnX, tol: f64) -> Result<Vec<bool>> {
    f.check_len(x.points())?;
    let support: Vec<bool> = f.iter().map(|z| z.norm() > tol).collect();
    if !support.iter().any(|&s| s) {
        return Err(Error::ZeroFunction);
    }
    for orbit in x.orbits() {
        let inside = support[orbit[0]];
        if orbit.iter().any(|&p| support[p] != inside) {
            return Err(Error::NotDifferentiable { orbit });
        }
    }
    Ok(support)
}

/// `f'_α(x) = f(αx) f(x)⁻¹` on the support of `f`.
///
/// Unitary inputs use `f(αx) conj(f(x))`.
pub fn derivative(x: &GSet, f: &FunctionOnX, alpha: usize, tol: f64) -> Result<Derivative> {
    x.group().check_element(alpha)?;
    let support = differentiable_support(x, f, tol)?;
    let unitary = f.is_unitary(tol);
    let mut points = Vec::new();
    let mut values = Vec::new();
    for p in (0..x.points()).filter(|&p| support[p]) {
        let image = f[x.act(alpha, p)];
        let v = if unitary {
            image * f[p].conj()
        } else {
            image / f[p]
        };
        points.push(p);
        values.push(v);
    }
    Ok(Derivative {
        support: points,
        values,
    })
}

/// The unique `ψ` with `f ∈ (C^X)_ψ`, if any.
///
/// Tests `αf = ψ̄(α) f` for every `α`, within `tol · max|f|`.
pub fn is_g_linear(x: &GSet, f: &FunctionOnX, tol: f64) -> Result<Option<usize>> {
    f.check_len(x.points())?;
    if f.is_zero(tol) {
        return Err(Error::ZeroFunction);
    }
    let g = x.group();
    let bound = tol * f.max_abs();
    let shifted: Vec<FunctionOnX> = g
        .elements()
        .map(|a| x.act_on_function(a, f))
        .collect::<Result<_>>()?;
    Ok(g.elements().find(|&psi| {
        g.elements().all(|a| {
            let c = g.character(psi, a).conj();
            shifted[a]
                .iter()
                .zip(f.iter())
                .all(|(s, v)| (s - c * v).norm() <= bound)
        })
    }))
}

/// `Σ_x f'_α(x) = Σ_x f(αx) conj(f(x))` for every `α`, for unitary `f`.
pub fn derivative_sums(x: &GSet, f: &FunctionOnX, tol: f64) -> Result<Vec<Complex64>> {
    f.check_len(x.points())?;
    f.check_unitary(tol)?;
    Ok(x.group()
        .elements()
        .map(|a| (0..x.points()).map(|p| f[x.act(a, p)] * f[p].conj()).sum())
        .collect())
}

/// Result of the totally-balanced-derivatives test.
#[derive(Clone, Debug, PartialEq)]
pub struct BalanceCheck {
    pub balanced: bool,
    /// Derivative sums indexed by group element (identity included).
    pub sums: Vec<Complex64>,
}

/// `Σ_x f'_α(x) = 0` for every `α ≠ 1`, each within `tol · n`.
pub fn has_totally_balanced_derivatives(x: &GSet, f: &FunctionOnX, tol: f64) -> Result<BalanceCheck> {
    let sums = derivative_sums(x, f, tol)?;
    let bound = tol * x.points() as f64;
    let balanced = sums.iter().skip(1).all(|s| s.norm() <= bound);
    Ok(BalanceCheck { balanced, sums })
}

/// `Σ_{λ∈(X̂)_ψ} |f̂(λ)|²` for every `ψ`.
pub fn component_energies(f: &FunctionOnX, dual: &GDual) -> Result<Vec<f64>> {
    let spectrum = dual.fourier(f)?;
    let mut energy = vec![0.0; dual.group().order()];
    for i in 0..dual.len() {
        energy[dual.psi_of(i)] += spectrum.get(i).norm_sqr();
    }
    Ok(energy)
}

/// Result of the spectral bentness test.
#[derive(Clone, Debug, PartialEq)]
pub struct SpectralCheck {
    pub bent: bool,
    /// `Σ_{λ∈(X̂)_ψ} |f̂(λ)|²` in canonical character order.
    pub energies: Vec<f64>,
}

/// Every component energy equals `n²/m` within `tol · n²/m`.
pub fn is_bent_spectral(f: &FunctionOnX, dual: &GDual, tol: f64) -> Result<SpectralCheck> {
    f.check_len(dual.points())?;
    f.check_unitary(tol)?;
    let energies = component_energies(f, dual)?;
    let n = dual.points() as f64;
    let target = n * n / dual.group().order() as f64;
    let bent = energies.iter().all(|e| (e - target).abs() <= tol * target);
    Ok(SpectralCheck { bent, energies })
}

/// `f_x(α) = f(αx)` as a function on `G`.
pub fn orbit_map(x: &GSet, f: &FunctionOnX, point: usize) -> FunctionOnG {
    FunctionOnG::new(x.group().elements().map(|a| f[x.act(a, point)]).collect())
}

/// `f̂_x(ψ) = m · f_{ψ̄}(x)` for all `x` (rows) and `ψ` (columns).
pub fn orbit_map_transforms(x: &GSet, f: &FunctionOnX) -> Result<Vec<FunctionOnGDual>> {
    let g = x.group();
    let m = g.order() as f64;
    let components: Vec<FunctionOnX> = g
        .elements()
        .map(|psi| psi_component(x, g.conjugate_character(psi), f))
        .collect::<Result<_>>()?;
    Ok((0..x.points())
        .map(|p| FunctionOnGDual::new(components.iter().map(|c| c[p] * m).collect()))
        .collect())
}

/// Result of the orbit-map bentness test.
#[derive(Clone, Debug, PartialEq)]
pub struct PoinsotCheck {
    pub bent: bool,
    /// `(1/n) Σ_x |f̂_x(ψ)|²` in canonical character order.
    pub values: Vec<f64>,
}

/// `(1/n) Σ_x |f̂_x(ψ)|² = m` for every `ψ`, within `tol · m`.
pub fn is_bent_poinsot(x: &GSet, f: &FunctionOnX, tol: f64) -> Result<PoinsotCheck> {
    f.check_len(x.points())?;
    f.check_unitary(tol)?;
    let transforms = orbit_map_transforms(x, f)?;
    let n = x.points() as f64;
    let m = x.group().order() as f64;
    let values: Vec<f64> = x
        .group()
        .elements()
        .map(|psi| transforms.iter().map(|t| t[psi].norm_sqr()).sum::<f64>() / n)
        .collect();
    let bent = values.iter().all(|v| (v - m).abs() <= tol * m);
    Ok(PoinsotCheck { bent, values })
}

/// Runs one criterion and returns its verdict.
pub fn is_bent(x: &GSet, dual: &GDual, f: &FunctionOnX, criterion: BentCriterion, tol: f64) -> Result<bool> {
    Ok(match criterion {
        BentCriterion::Spectral => is_bent_spectral(f, dual, tol)?.bent,
        BentCriterion::Derivatives => has_totally_balanced_derivatives(x, f, tol)?.balanced,
        BentCriterion::Poinsot => is_bent_poinsot(x, f, tol)?.bent,
    })
}

/// `√((m−1)n/m)`, the largest possible distance from a unitary function to
/// the G-linear functions.
pub fn max_distance_bound(points: usize, order: usize) -> f64 {
    ((order as f64 - 1.0) * points as f64 / order as f64).sqrt()
}

/// `d(f, (C^X)_G) = √(n − max_ψ |f_ψ|²)` for unitary `f`, with
/// `|f_ψ|² = (1/n) Σ_{λ∈(X̂)_ψ} |f̂(λ̄)|²`.
pub fn distance_to_g_linear(f: &FunctionOnX, dual: &GDual) -> Result<f64> {
    let energies = crate::spectral::spectral_energy_by_psi(f, dual)?;
    let n = dual.points() as f64;
    let best = energies.iter().fold(0.0_f64, |a, &e| a.max(e / n));
    Ok((n - best).max(0.0).sqrt())
}

/// Whether every character component is nonzero, a necessary condition for
/// bent functions to exist.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BentPrecondition {
    pub possible: bool,
    /// Characters with an empty component.
    pub empty: Vec<usize>,
}

pub fn bent_existence_precondition(x: &GSet) -> BentPrecondition {
    let empty: Vec<usize> = component_dimensions(x)
        .iter()
        .enumerate()
        .filter(|(_, &d)| d == 0)
        .map(|(psi, _)| psi)
        .collect();
    BentPrecondition {
        possible: empty.is_empty(),
        empty,
    }
}

/// `(f ⊠ g)(α) = Σ_x conj(f(x)) g(αx)`.
pub fn pseudo_convolution(x: &GSet, f: &FunctionOnX, g: &FunctionOnX) -> Result<FunctionOnG> {
    f.check_len(x.points())?;
    g.check_len(x.points())?;
    Ok(FunctionOnG::new(
        x.group()
            .elements()
            .map(|a| (0..x.points()).map(|p| f[p].conj() * g[x.act(a, p)]).sum())
            .collect(),
    ))
}

/// `(f ⊠ g)^(ψ) = (m/n) Σ_{λ∈(X̂)_ψ} conj(f̂(λ)) ĝ(λ)`.
pub fn pseudo_convolution_spectrum(
    f: &FunctionOnX,
    g: &FunctionOnX,
    dual: &GDual,
) -> Result<FunctionOnGDual> {
    let f_hat = dual.fourier(f)?;
    let g_hat = dual.fourier(g)?;
    let scale = dual.group().order() as f64 / dual.points() as f64;
    let mut out = FunctionOnGDual::zeros(dual.group().order());
    for i in 0..dual.len() {
        out[dual.psi_of(i)] += f_hat.get(i).conj() * g_hat.get(i) * scale;
    }
    Ok(out)
}

/// All bentness data for a unitary function.
#[derive(Clone, Debug, PartialEq)]
pub struct BentReport {
    pub spectral: bool,
    pub derivatives: bool,
    pub poinsot: bool,
    /// `Σ_{λ∈(X̂)_ψ} |f̂(λ)|²` per character.
    pub energies: Vec<f64>,
    /// `Σ_x f'_α(x)` per group element.
    pub derivative_sums: Vec<Complex64>,
    /// `(1/n) Σ_x |f̂_x(ψ)|²` per character.
    pub poinsot_values: Vec<f64>,
    pub distance: f64,
    pub distance_bound: f64,
    pub tolerance: f64,
}

impl BentReport {
    /// The spectral verdict.
    pub fn verdict(&self) -> bool {
        self.spectral
    }

    pub fn criteria_agree(&self) -> bool {
        self.spectral == self.derivatives && self.derivatives == self.poinsot
    }
}

pub fn bent_report(x: &GSet, dual: &GDual, f: &FunctionOnX, tol: f64) -> Result<BentReport> {
    let spectral = is_bent_spectral(f, dual, tol)?;
    let balance = has_totally_balanced_derivatives(x, f, tol)?;
    let poinsot = is_bent_poinsot(x, f, tol)?;
    Ok(BentReport {
        spectral: spectral.bent,
        derivatives: balance.balanced,
        poinsot: poinsot.bent,
        energies: spectral.energies,
        derivative_sums: balance.sums,
        poinsot_values: poinsot.values,
        distance: distance_to_g_linear(f, dual)?,
        distance_bound: max_distance_bound(x.points(), x.group().order()),
        tolerance: tol,
    })
}

/// A function `X → H` into a finite abelian group, values stored as element
/// indices of `H`.
#[derive(Clone, Debug, PartialEq)]
pub struct GroupValuedFunction<'a> {
    domain: &'a GSet,
    codomain: FiniteAbelianGroup,
    values: Vec<usize>,
}

impl<'a> GroupValuedFunction<'a> {
    pub fn new(domain: &'a GSet, codomain: FiniteAbelianGroup, values: Vec<usize>) -> Result<Self> {
        if values.len() != domain.points() {
            return Err(Error::LengthMismatch {
                expected: domain.points(),
                got: values.len(),
            });
        }
        if let Some(&value) = values.iter().find(|&&v| v >= codomain.order()) {
            return Err(Error::InvalidValue {
                value,
                order: codomain.order(),
            });
        }
        Ok(GroupValuedFunction {
            domain,
            codomain,
            values,
        })
    }

    /// Values given as residue tuples of `H`.
    pub fn from_residues(
        domain: &'a GSet,
        codomain: FiniteAbelianGroup,
        residues: &[Vec<usize>],
    ) -> Result<Self> {
        let values = residues
            .iter()
            .map(|r| codomain.index_of(r))
            .collect::<Result<_>>()?;
        Self::new(domain, codomain, values)
    }

    pub fn domain(&self) -> &'a GSet {
        self.domain
    }

    pub fn codomain(&self) -> &FiniteAbelianGroup {
        &self.codomain
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    /// `f'_α(x) = f(αx) f(x)⁻¹`.
    pub fn derivative(&self, alpha: usize) -> GroupValuedFunction<'a> {
        let h = &self.codomain;
        let values = (0..self.domain.points())
            .map(|p| h.op(self.values[self.domain.act(alpha, p)], h.inverse(self.values[p])))
            .collect();
        GroupValuedFunction {
            domain: self.domain,
            codomain: h.clone(),
            values,
        }
    }

    /// `g#(h) = |{x : g(x) = h}|`, indexed by element of `H`.
    pub fn counting_function(&self) -> Vec<usize> {
        let mut counts = vec![0; self.codomain.order()];
        for &v in &self.values {
            counts[v] += 1;
        }
        counts
    }

    /// Each element of `H` is hit exactly `n/|H|` times.
    pub fn is_evenly_balanced(&self) -> bool {
        let n = self.domain.points();
        let k = self.codomain.order();
        n.is_multiple_of(k) && self.counting_function().iter().all(|&c| c == n / k)
    }

    /// `ξ ∘ f`.
    pub fn compose_character(&self, xi: usize) -> FunctionOnX {
        FunctionOnX::new(
            self.values
                .iter()
                .map(|&v| self.codomain.character(xi, v))
                .collect(),
        )
    }
}

/// How G-perfect nonlinearity is decided.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PnlMode {
    /// Every nontrivial derivative is evenly balanced.
    Direct,
    /// `ξ ∘ f` is bent for every nonprincipal `ξ`.
    ViaBent,
}

/// Counting functions of `f'_α` for every `α` (identity included).
pub fn derivative_counts(f: &GroupValuedFunction<'_>) -> Vec<Vec<usize>> {
    f.domain()
        .group()
        .elements()
        .map(|a| f.derivative(a).counting_function())
        .collect()
}

pub fn is_pnl_direct(f: &GroupValuedFunction<'_>) -> bool {
    let n = f.domain().points();
    let k = f.codomain().order();
    if !n.is_multiple_of(k) {
        return false;
    }
    f.domain()
        .group()
        .elements()
        .skip(1)
        .all(|a| f.derivative(a).is_evenly_balanced())
}

pub fn is_pnl_via_bent(f: &GroupValuedFunction<'_>, dual: &GDual, tol: f64) -> Result<bool> {
    for xi in f.codomain().elements().skip(1) {
        if !is_bent_spectral(&f.compose_character(xi), dual, tol)?.bent {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn is_g_perfect_nonlinear(
    f: &GroupValuedFunction<'_>,
    mode: PnlMode,
    dual: &GDual,
    tol: f64,
) -> Result<bool> {
    match mode {
        PnlMode::Direct => Ok(is_pnl_direct(f)),
        PnlMode::ViaBent => is_pnl_via_bent(f, dual, tol),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::function::unit_root;

    const TOL: f64 = 1e-9;

    fn klein() -> FiniteAbelianGroup {
        FiniteAbelianGroup::new(&[2, 2]).unwrap()
    }

    fn two_orbit() -> GSet {
        GSet::from_generators(klein(), 4, &[vec![0, 1, 3, 2], vec![1, 0, 2, 3]]).unwrap()
    }

    fn three_orbit() -> GSet {
        GSet::from_generators(klein(), 6, &[vec![0, 1, 3, 2, 5, 4], vec![1, 0, 2, 3, 5, 4]]).unwrap()
    }

    fn bent_f() -> FunctionOnX {
        FunctionOnX::from_exponents(&[0, 1, 0, 1, 0, 1], 3).unwrap()
    }

    #[test]
    fn derivative_orbit_sums() {
        let x = three_orbit();
        let alpha = klein().index_of(&[1, 0]).unwrap();
        let d = derivative(&x, &bent_f(), alpha, TOL).unwrap();
        let orbit_sum = |a: usize, b: usize| d.values[a] + d.values[b];
        assert!((orbit_sum(0, 1) - Complex64::new(2.0, 0.0)).norm() < 1e-12);
        assert!((orbit_sum(2, 3) - Complex64::new(-1.0, 0.0)).norm() < 1e-12);
        assert!((orbit_sum(4, 5) - Complex64::new(-1.0, 0.0)).norm() < 1e-12);
        assert!(d.sum().norm() < 1e-12);

        let id = derivative(&x, &bent_f(), 0, TOL).unwrap();
        assert!(id.values.iter().all(|v| (v - 1.0).norm() < 1e-15));
    }

    #[test]
    fn derivative_of_linear_is_character() {
        let x = three_orbit();
        let dual = GDual::build(&x);
        for i in 0..dual.len() {
            let l = dual.lambda(i);
            for a in klein().elements() {
                let d = derivative(&x, l, a, TOL).unwrap();
                let c = klein().character(dual.psi_of(i), a);
                assert!(d.values.iter().all(|v| (v - c).norm() < 1e-12));
            }
        }
    }

    #[test]
    fn non_differentiable_reports_orbit() {
        let x = three_orbit();
        let f = FunctionOnX::from_real(&[1.0, 0.0, 1.0, 1.0, 1.0, 1.0]);
        assert_eq!(
            derivative(&x, &f, 0, TOL),
            Err(Error::NotDifferentiable { orbit: vec![0, 1] })
        );
        assert_eq!(
            derivative(&x, &FunctionOnX::zeros(6), 0, TOL),
            Err(Error::ZeroFunction)
        );
        // zero on a whole orbit is fine
        let f = FunctionOnX::from_real(&[0.0, 0.0, 2.0, 1.0, 1.0, 1.0]);
        let d = derivative(&x, &f, klein().index_of(&[1, 0]).unwrap(), TOL).unwrap();
        assert_eq!(d.support, vec![2, 3, 4, 5]);
        assert_eq!(d.values[0], Complex64::new(0.5, 0.0));
    }

    #[test]
    fn g_linearity() {
        let x = three_orbit();
        let dual = GDual::build(&x);
        for i in 0..dual.len() {
            assert_eq!(
                is_g_linear(&x, dual.lambda(i), TOL).unwrap(),
                Some(dual.psi_of(i))
            );
        }
        assert_eq!(is_g_linear(&x, &bent_f(), TOL).unwrap(), None);
        let constant = FunctionOnX::constant(6, Complex64::new(2.0, 1.0));
        assert_eq!(is_g_linear(&x, &constant, TOL).unwrap(), Some(0));
        assert_eq!(
            is_g_linear(&x, &FunctionOnX::zeros(6), TOL),
            Err(Error::ZeroFunction)
        );
    }

    #[test]
    fn example_bent_function() {
        let x = three_orbit();
        let dual = GDual::build(&x);
        let report = bent_report(&x, &dual, &bent_f(), TOL).unwrap();
        assert!(report.spectral && report.derivatives && report.poinsot);
        assert!(report.energies.iter().all(|e| (e - 9.0).abs() < 1e-9));
        assert!(report.derivative_sums[1..].iter().all(|s| s.norm() < 1e-9));
        assert!((report.distance - 4.5f64.sqrt()).abs() < 1e-9);
        assert!((report.distance_bound - 4.5f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn constant_on_regular_is_not_bent() {
        let x = GSet::regular(klein());
        let dual = GDual::build(&x);
        let f = FunctionOnX::constant(4, Complex64::new(1.0, 0.0));
        let spectral = is_bent_spectral(&f, &dual, TOL).unwrap();
        assert!(!spectral.bent);
        assert!((spectral.energies[0] - 16.0).abs() < 1e-12);
        assert!(!is_bent_poinsot(&x, &f, TOL).unwrap().bent);
        assert!(distance_to_g_linear(&f, &dual).unwrap() < 1e-7);
    }

    #[test]
    fn regular_klein_sign_function_is_bent() {
        let x = GSet::regular(klein());
        let dual = GDual::build(&x);
        let f = FunctionOnX::from_real(&[1.0, 1.0, 1.0, -1.0]);
        assert!(is_bent_spectral(&f, &dual, TOL).unwrap().bent);
        assert!(has_totally_balanced_derivatives(&x, &f, TOL).unwrap().balanced);
        assert!((distance_to_g_linear(&f, &dual).unwrap() - 3f64.sqrt()).abs() < 1e-9);
    }

    #[test]
    fn linear_unitary_has_unbalanced_derivatives() {
        let x = GSet::regular(FiniteAbelianGroup::cyclic(4).unwrap());
        let f = x.group().character_function(1);
        let check = has_totally_balanced_derivatives(&x, &f, TOL).unwrap();
        assert!(!check.balanced);
        for a in 0..4 {
            assert!((check.sums[a] - x.group().character(1, a) * 4.0).norm() < 1e-12);
        }
        let dual = GDual::build(&x);
        assert!(distance_to_g_linear(&f, &dual).unwrap() < 1e-7);
    }

    #[test]
    fn non_unitary_rejected() {
        let x = GSet::regular(klein());
        let dual = GDual::build(&x);
        let f = FunctionOnX::from_real(&[1.0, 1.0, 0.5, 1.0]);
        assert!(matches!(
            is_bent_spectral(&f, &dual, TOL),
            Err(Error::NotUnitary { point: 2, .. })
        ));
        assert!(matches!(
            has_totally_balanced_derivatives(&x, &f, TOL),
            Err(Error::NotUnitary { .. })
        ));
        assert!(matches!(
            is_bent_poinsot(&x, &f, TOL),
            Err(Error::NotUnitary { .. })
        ));
    }

    #[test]
    fn existence_precondition() {
        let p = bent_existence_precondition(&two_orbit());
        assert!(!p.possible);
        assert_eq!(p.empty, vec![3]);
        assert!(bent_existence_precondition(&three_orbit()).possible);
        assert!(!bent_existence_precondition(&GSet::trivial(klein(), 4)).possible);
    }

    #[test]
    fn pseudo_convolution_examples() {
        let x = three_orbit();
        let f = bent_f();
        let pc = pseudo_convolution(&x, &f, &f).unwrap();
        assert!((pc[0] - Complex64::new(6.0, 0.0)).norm() < 1e-12);
        for a in klein().elements() {
            let d = derivative(&x, &f, a, TOL).unwrap();
            assert!((pc[a] - d.sum()).norm() < 1e-12);
        }
    }

    fn example_g(x: &GSet) -> GroupValuedFunction<'_> {
        GroupValuedFunction::new(x, FiniteAbelianGroup::cyclic(3).unwrap(), vec![0, 1, 0, 1, 0, 1]).unwrap()
    }

    #[test]
    fn counting_functions() {
        let x = three_orbit();
        let g = example_g(&x);
        assert_eq!(g.counting_function(), vec![3, 3, 0]);
        let alpha = klein().index_of(&[1, 0]).unwrap();
        let d = g.derivative(alpha);
        assert_eq!(d.values(), &[0, 0, 1, 2, 1, 2]);
        assert_eq!(d.counting_function(), vec![2, 2, 2]);
        let constant =
            GroupValuedFunction::new(&x, FiniteAbelianGroup::cyclic(3).unwrap(), vec![2; 6]).unwrap();
        assert_eq!(constant.counting_function(), vec![0, 0, 6]);
    }

    #[test]
    fn example_is_perfect_nonlinear() {
        let x = three_orbit();
        let dual = GDual::build(&x);
        let g = example_g(&x);
        assert!(is_g_perfect_nonlinear(&g, PnlMode::Direct, &dual, TOL).unwrap());
        assert!(is_g_perfect_nonlinear(&g, PnlMode::ViaBent, &dual, TOL).unwrap());
        // ξ ∘ g is the bent function ω^{e(x)}
        assert!(g.compose_character(1).max_abs_diff(&bent_f()) < 1e-15);
        assert!((g.compose_character(2)[1] - unit_root(3, 2)).norm() < 1e-15);

        let mut altered = g.values().to_vec();
        altered[5] = 0;
        let altered = GroupValuedFunction::new(&x, FiniteAbelianGroup::cyclic(3).unwrap(), altered).unwrap();
        assert!(!is_pnl_direct(&altered));
        assert!(!is_pnl_via_bent(&altered, &dual, TOL).unwrap());
    }

    #[test]
    fn identity_on_regular_is_not_pnl() {
        let g = klein();
        let x = GSet::regular(g.clone());
        let dual = GDual::build(&x);
        let f = GroupValuedFunction::new(&x, g, vec![0, 1, 2, 3]).unwrap();
        assert!(!is_pnl_direct(&f));
        assert!(!is_pnl_via_bent(&f, &dual, TOL).unwrap());
    }

    #[test]
    fn group_valued_validation() {
        let x = three_orbit();
        let h = FiniteAbelianGroup::cyclic(3).unwrap();
        assert!(matches!(
            GroupValuedFunction::new(&x, h.clone(), vec![0; 5]),
            Err(Error::LengthMismatch { .. })
        ));
        assert_eq!(
            GroupValuedFunction::new(&x, h, vec![0, 0, 0, 0, 0, 3]),
            Err(Error::InvalidValue { value: 3, order: 3 })
        );
    }
}
