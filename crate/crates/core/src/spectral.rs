//! Classical decomposition of `C^X` into character-isotypic components, G-dual
//! bases, and the Fourier transform on a G-set.
//!
//! A function `f` on `X` is ψ-linear when `f(αx) = ψ(α) f(x)` for all `α, x`.
//! The ψ-linear functions form the component `(C^X)_ψ`, and `(1/m) ψ*f` is the
//! orthogonal projection of `f` onto it. A [`GDual`] is an `n`-normal
//! orthogonal basis of `C^X` made of G-linear functions and closed under
//! complex conjugation; it plays the role of the dual group for the regular
//! G-set.

use num_complex::Complex64;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::function::{FunctionOnG, FunctionOnX};
use crate::group::FiniteAbelianGroup;
use crate::gset::GSet;

/// Projected residuals at or below `ZERO_RESIDUAL * √n` count as zero.
const ZERO_RESIDUAL: f64 = 1e-7;
/// Basis entries below this modulus are snapped to exact zero.
const SNAP: f64 = 1e-12;

/// The ψ-component `f_ψ = (1/m) ψ*f`.
pub fn psi_component(x: &GSet, psi: usize, f: &FunctionOnX) -> Result<FunctionOnX> {
    let g = x.group();
    g.check_element(psi)?;
    let conv = x.convolve(&g.character_function(psi), f)?;
    Ok(conv.scale_real(1.0 / g.order() as f64))
}

/// All ψ-components of `f`, in canonical character order.
pub fn classical_decomposition(x: &GSet, f: &FunctionOnX) -> Result<Vec<FunctionOnX>> {
    x.group().elements().map(|psi| psi_component(x, psi, f)).collect()
}

/// `dim (C^X)_ψ`, computed as the trace of the projection
/// `(1/m) Σ_α ψ(α) |Fix(α⁻¹)|`.
pub fn component_dimension(x: &GSet, psi: usize) -> usize {
    let g = x.group();
    let trace: Complex64 = g
        .elements()
        .map(|a| g.character(psi, a) * x.fixed_points(g.inverse(a)) as f64)
        .sum();
    (trace.re / g.order() as f64).round() as usize
}

/// Dimensions of every component in canonical character order; they sum to `n`.
pub fn component_dimensions(x: &GSet) -> Vec<usize> {
    x.group()
        .elements()
        .map(|psi| component_dimension(x, psi))
        .collect()
}

/// Largest `|f(αx) − ψ(α) f(x)|` over all `α, x`.
pub fn linearity_defect(x: &GSet, psi: usize, f: &FunctionOnX) -> f64 {
    let g = x.group();
    let mut worst: f64 = 0.0;
    for a in g.elements() {
        let c = g.character(psi, a);
        for p in 0..x.points() {
            worst = worst.max((f[x.act(a, p)] - c * f[p]).norm());
        }
    }
    worst
}

/// A G-dual basis of `C^X`.
///
/// `lambdas[i]` lies in `(C^X)_{psi_of[i]}` and `conj(lambdas[i]) =
/// lambdas[conj_partner[i]]`. Basis vectors are grouped by character in
/// canonical order.
#[derive(Clone, Debug, PartialEq)]
pub struct GDual {
    group: FiniteAbelianGroup,
    points: usize,
    lambdas: Vec<FunctionOnX>,
    psi_of: Vec<usize>,
    conj_partner: Vec<usize>,
}

/// Processing order and phase choices for [`GDual`] construction.
struct BuildPlan<'r> {
    point_order: Vec<usize>,
    rng: Option<&'r mut ChaCha8Rng>,
}

impl GDual {
    /// Deterministic G-dual.
    ///
    /// For each character `ψ` in canonical order (skipping `ψ` when `ψ̄` came
    /// earlier), indicators `1_x` are projected onto `(C^X)_ψ` and
    /// orthogonalised by Gram–Schmidt. For real `ψ` the candidates are first
    /// replaced by a real-valued vector (`f + f̄` or `i(f − f̄)`); for complex
    /// `ψ` the `ψ̄` basis is the conjugate of the `ψ` basis. Each vector is
    /// scaled to norm `√n` with its first nonzero coordinate real and positive.
    pub fn build(x: &GSet) -> GDual {
        Self::build_with(
            x,
            BuildPlan {
                point_order: (0..x.points()).collect(),
                rng: None,
            },
        )
    }

    /// Another valid G-dual of the same G-set: indicators are processed in a
    /// shuffled order and each basis vector gets a random unit phase (a random
    /// sign for real characters).
    pub fn build_seeded(x: &GSet, seed: u64) -> GDual {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut order: Vec<usize> = (0..x.points()).collect();
        order.shuffle(&mut rng);
        Self::build_with(
            x,
            BuildPlan {
                point_order: order,
                rng: Some(&mut rng),
            },
        )
    }

    fn build_with(x: &GSet, mut plan: BuildPlan<'_>) -> GDual {
        let g = x.group();
        let n = x.points();
        let threshold = ZERO_RESIDUAL * (n as f64).sqrt();
        let target = (n as f64).sqrt();

        let mut per_psi: Vec<Vec<FunctionOnX>> = vec![Vec::new(); g.order()];
        for psi in g.elements() {
            let bar = g.conjugate_character(psi);
            if bar < psi {
                continue;
            }
            let real = bar == psi;
            let dim = component_dimension(x, psi);
            let mut basis: Vec<FunctionOnX> = Vec::new();
            for &p in &plan.point_order {
                let mut v = psi_component(x, psi, &FunctionOnX::indicator(n, p))
                    .expect("indicator has the right length");
                if real {
                    let sym = &v + &v.conj();
                    v = if sym.norm() > threshold {
                        sym
                    } else {
                        (&v - &v.conj()).scale(Complex64::new(0.0, 1.0))
                    };
                }
                // Gram–Schmidt, applied twice to keep orthogonality at rounding level
                for _ in 0..2 {
                    for b in &basis {
                        let c = v.inner(b) / b.norm_sqr();
                        v = &v - &b.scale(c);
                    }
                }
                let norm = v.norm();
                if norm <= threshold {
                    continue;
                }
                let mut v = v.scale_real(target / norm);
                for p in 0..n {
                    if v[p].norm() < SNAP {
                        v[p] = Complex64::new(0.0, 0.0);
                    }
                }
                let phase = match plan.rng.as_deref_mut() {
                    Some(rng) if real => {
                        if rng.gen::<bool>() {
                            Complex64::new(1.0, 0.0)
                        } else {
                            Complex64::new(-1.0, 0.0)
                        }
                    }
                    Some(rng) => Complex64::from_polar(1.0, rng.gen_range(0.0..std::f64::consts::TAU)),
                    None => {
                        let lead = v.iter().find(|z| z.norm() > 0.0).copied().unwrap();
                        if real {
                            Complex64::new(lead.re.signum(), 0.0)
                        } else {
                            lead.conj() / lead.norm()
                        }
                    }
                };
                basis.push(v.scale(phase));
                if basis.len() == dim {
                    break;
                }
            }
            if !real {
                per_psi[bar] = basis.iter().map(FunctionOnX::conj).collect();
            }
            per_psi[psi] = basis;
        }

        let mut lambdas = Vec::with_capacity(n);
        let mut psi_of = Vec::with_capacity(n);
        let mut start = vec![0; g.order()];
        for (psi, basis) in per_psi.iter().enumerate() {
            start[psi] = lambdas.len();
            for v in basis {
                lambdas.push(v.clone());
                psi_of.push(psi);
            }
        }
        let conj_partner = (0..lambdas.len())
            .map(|i| {
                let psi = psi_of[i];
                let bar = g.conjugate_character(psi);
                if bar == psi {
                    i
                } else {
                    start[bar] + (i - start[psi])
                }
            })
            .collect();
        GDual {
            group: g.clone(),
            points: n,
            lambdas,
            psi_of,
            conj_partner,
        }
    }

    /// Adopts externally supplied basis vectors, inferring each vector's
    /// character and conjugate partner. Fails when a vector is zero or not
    /// G-linear within `tol`; conjugation partners that cannot be matched are
    /// left as `None` in the returned list, which [`verify_gdual`] reports.
    pub fn from_rows(x: &GSet, rows: Vec<FunctionOnX>, tol: f64) -> Result<(GDual, Vec<bool>)> {
        let g = x.group();
        let mut psi_of = Vec::with_capacity(rows.len());
        for (index, row) in rows.iter().enumerate() {
            row.check_len(x.points())?;
            if row.is_zero(tol) {
                return Err(Error::ZeroFunction);
            }
            let scale = row.max_abs();
            let psi = g
                .elements()
                .find(|&psi| linearity_defect(x, psi, row) <= tol * scale)
                .ok_or(Error::NotGLinear { row: index })?;
            psi_of.push(psi);
        }
        let mut matched = Vec::with_capacity(rows.len());
        let conj_partner = rows
            .iter()
            .enumerate()
            .map(|(i, row)| {
                let c = row.conj();
                let found =
                    (0..rows.len()).find(|&j| rows[j].max_abs_diff(&c) <= tol * row.max_abs().max(1.0));
                matched.push(found.is_some());
                found.unwrap_or(i)
            })
            .collect();
        Ok((
            GDual {
                group: g.clone(),
                points: x.points(),
                lambdas: rows,
                psi_of,
                conj_partner,
            },
            matched,
        ))
    }

    pub fn group(&self) -> &FiniteAbelianGroup {
        &self.group
    }

    pub fn points(&self) -> usize {
        self.points
    }

    pub fn len(&self) -> usize {
        self.lambdas.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lambdas.is_empty()
    }

    pub fn lambdas(&self) -> &[FunctionOnX] {
        &self.lambdas
    }

    pub fn lambda(&self, i: usize) -> &FunctionOnX {
        &self.lambdas[i]
    }

    /// `ψ_λ` for basis vector `i`.
    pub fn psi_of(&self, i: usize) -> usize {
        self.psi_of[i]
    }

    /// Index of `λ̄`.
    pub fn conj_partner(&self, i: usize) -> usize {
        self.conj_partner[i]
    }

    /// Indices of `(X̂)_ψ`.
    pub fn component(&self, psi: usize) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.psi_of[i] == psi).collect()
    }

    /// Row-major `n × n` matrix `Λ`, row `i` holding `λ_i`.
    pub fn matrix(&self) -> Vec<Vec<Complex64>> {
        self.lambdas.iter().map(|l| l.values().to_vec()).collect()
    }

    /// `f̂(λ) = Σ_x f(x) λ(x)`.
    pub fn fourier(&self, f: &FunctionOnX) -> Result<Spectrum<'_>> {
        f.check_len(self.points)?;
        Ok(Spectrum {
            dual: self,
            values: FunctionOnX::new(self.lambdas.iter().map(|l| f.dot(l)).collect()),
        })
    }

    /// Wraps raw values on `X̂` (indexed like the basis) as a spectrum.
    pub fn spectrum(&self, values: FunctionOnX) -> Result<Spectrum<'_>> {
        values.check_len(self.len())?;
        Ok(Spectrum { dual: self, values })
    }

    /// `ĝ(x) = (1/n) Σ_λ g(λ) λ̄(x)`.
    pub fn fourier_inverse(&self, g: &Spectrum<'_>) -> FunctionOnX {
        let n = self.points;
        let mut out = FunctionOnX::zeros(n);
        for (l, &c) in self.lambdas.iter().zip(g.values.iter()) {
            for p in 0..n {
                out[p] += c * l[p].conj();
            }
        }
        out.scale_real(1.0 / n as f64)
    }

    /// `f = (1/n) Σ_λ f̂(λ̄) λ`, the expansion of `f` in the basis.
    pub fn linear_combination(&self, spectrum: &Spectrum<'_>) -> FunctionOnX {
        let n = self.points;
        let mut out = FunctionOnX::zeros(n);
        for (i, l) in self.lambdas.iter().enumerate() {
            let c = spectrum.values[self.conj_partner[i]];
            for p in 0..n {
                out[p] += c * l[p];
            }
        }
        out.scale_real(1.0 / n as f64)
    }
}

/// A function on `X̂`, indexed like the basis of the G-dual it refers to.
#[derive(Clone, Debug, PartialEq)]
pub struct Spectrum<'a> {
    dual: &'a GDual,
    values: FunctionOnX,
}

impl<'a> Spectrum<'a> {
    pub fn dual(&self) -> &'a GDual {
        self.dual
    }

    pub fn values(&self) -> &FunctionOnX {
        &self.values
    }

    pub fn into_values(self) -> FunctionOnX {
        self.values
    }

    pub fn get(&self, i: usize) -> Complex64 {
        self.values[i]
    }

    /// `⟨g, h⟩ = Σ_λ g(λ) conj(h(λ))`.
    pub fn inner(&self, other: &Spectrum<'_>) -> Complex64 {
        self.values.inner(&other.values)
    }

    /// Fourier inversion back to `C^X`.
    pub fn inverse(&self) -> FunctionOnX {
        self.dual.fourier_inverse(self)
    }
}

/// `Σ_{λ∈(X̂)_ψ} |f̂(λ̄)|²` for every `ψ`, which equals `|(f_ψ)^|²`.
pub fn spectral_energy_by_psi(f: &FunctionOnX, dual: &GDual) -> Result<Vec<f64>> {
    let spectrum = dual.fourier(f)?;
    let mut energy = vec![0.0; dual.group().order()];
    for i in 0..dual.len() {
        energy[dual.psi_of(i)] += spectrum.get(dual.conj_partner(i)).norm_sqr();
    }
    Ok(energy)
}

/// Spectrum of `σ*f` computed by transforming the convolution directly.
pub fn convolution_spectrum<'a>(
    x: &GSet,
    sigma: &FunctionOnG,
    f: &FunctionOnX,
    dual: &'a GDual,
) -> Result<Spectrum<'a>> {
    dual.fourier(&x.convolve(sigma, f)?)
}

/// `σ̂(ψ_λ) f̂(λ)` for every `λ`.
pub fn convolution_spectrum_product<'a>(
    sigma: &FunctionOnG,
    f: &FunctionOnX,
    dual: &'a GDual,
) -> Result<Spectrum<'a>> {
    let sigma_hat = dual.group().fourier(sigma)?;
    let f_hat = dual.fourier(f)?;
    let values = (0..dual.len())
        .map(|i| sigma_hat[dual.psi_of(i)] * f_hat.get(i))
        .collect();
    dual.spectrum(FunctionOnX::new(values))
}

/// `⟨α⁻¹f, g⟩ = Σ_x f(αx) conj(g(x))`.
pub fn shifted_inner_product(x: &GSet, f: &FunctionOnX, g: &FunctionOnX, alpha: usize) -> Result<Complex64> {
    f.check_len(x.points())?;
    g.check_len(x.points())?;
    x.group().check_element(alpha)?;
    Ok((0..x.points()).map(|p| f[x.act(alpha, p)] * g[p].conj()).sum())
}

/// `(1/n) Σ_ψ ψ(α) Σ_{λ∈(X̂)_ψ} f̂(λ̄) conj(ĝ(λ̄))`.
pub fn shifted_inner_product_spectral(
    f: &FunctionOnX,
    g: &FunctionOnX,
    alpha: usize,
    dual: &GDual,
) -> Result<Complex64> {
    let group = dual.group();
    group.check_element(alpha)?;
    let f_hat = dual.fourier(f)?;
    let g_hat = dual.fourier(g)?;
    let total: Complex64 = (0..dual.len())
        .map(|i| {
            let j = dual.conj_partner(i);
            group.character(dual.psi_of(i), alpha) * f_hat.get(j) * g_hat.get(j).conj()
        })
        .sum();
    Ok(total / dual.points() as f64)
}

/// Outcome of checking a candidate G-dual.
#[derive(Clone, Debug, PartialEq)]
pub struct GDualReport {
    /// `max |Σ_x λ(x) μ̄(x) − n[λ=μ]|`.
    pub row_orthogonality: f64,
    /// `max |Σ_λ λ(x) λ̄(y) − n[x=y]|`.
    pub column_orthogonality: f64,
    /// `max |λ(αx) − ψ_λ(α) λ(x)|`.
    pub linearity: f64,
    /// `max |conj(λ) − partner(λ)|`, infinite when a partner is missing or mislabelled.
    pub conjugation: f64,
    /// Basis size equals `n`.
    pub complete: bool,
    pub tolerance: f64,
}

impl GDualReport {
    fn bound(&self, points: usize) -> f64 {
        self.tolerance * points.max(1) as f64
    }

    pub fn row_orthogonality_ok(&self, points: usize) -> bool {
        self.complete && self.row_orthogonality <= self.bound(points)
    }

    pub fn column_orthogonality_ok(&self, points: usize) -> bool {
        self.complete && self.column_orthogonality <= self.bound(points)
    }

    pub fn linearity_ok(&self, points: usize) -> bool {
        self.linearity <= self.bound(points)
    }

    pub fn conjugation_ok(&self, points: usize) -> bool {
        self.conjugation <= self.bound(points)
    }

    pub fn passed(&self, points: usize) -> bool {
        self.row_orthogonality_ok(points)
            && self.column_orthogonality_ok(points)
            && self.linearity_ok(points)
            && self.conjugation_ok(points)
    }

    /// Largest deviation over all conditions.
    pub fn max_deviation(&self) -> f64 {
        self.row_orthogonality
            .max(self.column_orthogonality)
            .max(self.linearity)
            .max(self.conjugation)
    }
}

/// Checks both orthogonality relations, G-linearity against the recorded
/// characters, and closure under conjugation.
///
/// Deviations are absolute; a condition passes when its deviation is at most
/// `tol · n`.
pub fn verify_gdual(x: &GSet, dual: &GDual, tol: f64) -> GDualReport {
    let n = x.points();
    let g = x.group();
    let rows = dual.lambdas();
    let complete = rows.len() == n && rows.iter().all(|r| r.len() == n);

    let mut row_orthogonality: f64 = 0.0;
    for (i, a) in rows.iter().enumerate() {
        for (j, b) in rows.iter().enumerate() {
            let expected = if i == j { n as f64 } else { 0.0 };
            row_orthogonality = row_orthogonality.max((a.inner(b) - expected).norm());
        }
    }
    let mut column_orthogonality: f64 = 0.0;
    for p in 0..n {
        for q in 0..n {
            let s: Complex64 = rows.iter().map(|l| l[p] * l[q].conj()).sum();
            let expected = if p == q { n as f64 } else { 0.0 };
            column_orthogonality = column_orthogonality.max((s - expected).norm());
        }
    }
    if !complete {
        row_orthogonality = f64::INFINITY;
        column_orthogonality = f64::INFINITY;
    }

    let linearity = (0..dual.len())
        .map(|i| linearity_defect(x, dual.psi_of(i), dual.lambda(i)))
        .fold(0.0, f64::max);

    let mut conjugation: f64 = 0.0;
    for i in 0..dual.len() {
        let j = dual.conj_partner(i);
        let labels_ok = j < dual.len()
            && dual.conj_partner(j) == i
            && dual.psi_of(j) == g.conjugate_character(dual.psi_of(i));
        if !labels_ok {
            conjugation = f64::INFINITY;
            break;
        }
        conjugation = conjugation.max(dual.lambda(i).conj().max_abs_diff(dual.lambda(j)));
    }

    GDualReport {
        row_orthogonality,
        column_orthogonality,
        linearity,
        conjugation,
        complete,
        tolerance: tol,
    }
}
