//! Expected values computed by brute force, independently of the library's
//! transform and projection code paths.

mod common;

use common::*;
use gset_fourier::analysis::{
    bent_report, derivative, distance_to_g_linear, has_totally_balanced_derivatives, is_bent_poinsot,
    is_bent_spectral, is_pnl_direct, is_pnl_via_bent, GroupValuedFunction,
};
use gset_fourier::analysis::{BentCriterion, PnlMode};
use gset_fourier::search::{enumerate_unitary, search_bent, search_pnl};
use gset_fourier::spectral::{psi_component, spectral_energy_by_psi};
use gset_fourier::{Complex64, FiniteAbelianGroup, FunctionOnG, FunctionOnX, GDual, GSet};

/// Klein four character table with rows ψ1..ψ4 and columns 1, α, β, γ.
const KLEIN_TABLE: [[f64; 4]; 4] = [
    [1.0, 1.0, 1.0, 1.0],
    [1.0, 1.0, -1.0, -1.0],
    [1.0, -1.0, 1.0, -1.0],
    [1.0, -1.0, -1.0, 1.0],
];

fn omega() -> Complex64 {
    Complex64::new(-0.5, 3f64.sqrt() / 2.0)
}

#[test]
fn klein_fourier_by_table() {
    // canonical element order is 1, β, α, γ
    let columns = [0usize, 2, 1, 3];
    let sigma_hand = [1.0, 1.0, 1.0, -1.0]; // on 1, β, α, γ in canonical order
    let mut expected = [0.0; 4];
    for (psi, row) in KLEIN_TABLE.iter().enumerate() {
        for (k, &col) in columns.iter().enumerate() {
            expected[psi] += sigma_hand[k] * row[col];
        }
    }
    assert_eq!(expected, [2.0, 2.0, 2.0, -2.0]);

    let g = klein();
    let hat = g.fourier(&FunctionOnG::from_real(&sigma_hand)).unwrap();
    assert_eq!(hat, FunctionOnG::from_real(&expected));
    let back = g.fourier_inverse(&hat).unwrap();
    assert_eq!(back, FunctionOnG::from_real(&sigma_hand));
}

#[test]
fn klein_table_matches_characters() {
    let g = klein();
    let elements = [
        g.index_of(&[0, 0]).unwrap(),
        g.index_of(&[1, 0]).unwrap(),
        g.index_of(&[0, 1]).unwrap(),
        g.index_of(&[1, 1]).unwrap(),
    ];
    for (psi, row) in KLEIN_TABLE.iter().enumerate() {
        for (k, &a) in elements.iter().enumerate() {
            assert_eq!(g.character(psi, a), Complex64::new(row[k], 0.0));
        }
    }
}

#[test]
fn cyclic_two_convolution_by_hand() {
    // (τ*σ)(0) = τ0σ0 + τ1σ1, (τ*σ)(1) = τ0σ1 + τ1σ0
    let (t, s) = ([1.0, -1.0], [1.0, -1.0]);
    let expected = [t[0] * s[0] + t[1] * s[1], t[0] * s[1] + t[1] * s[0]];
    assert_eq!(expected, [2.0, -2.0]);
    let g = FiniteAbelianGroup::cyclic(2).unwrap();
    let got = g
        .convolve(&FunctionOnG::from_real(&t), &FunctionOnG::from_real(&s))
        .unwrap();
    assert_eq!(got, FunctionOnG::from_real(&expected));
}

#[test]
fn principal_component_is_orbit_average() {
    let x = three_orbit();
    let f = FunctionOnX::from_exponents(&[0, 1, 0, 1, 0, 1], 3).unwrap();
    let mut oracle = FunctionOnX::zeros(6);
    for orbit in [[0usize, 1], [2, 3], [4, 5]] {
        let avg = (f[orbit[0]] + f[orbit[1]]) / 2.0;
        for p in orbit {
            oracle[p] = avg;
        }
    }
    let expected = (Complex64::new(1.0, 0.0) + omega()) / 2.0;
    assert!(oracle.iter().all(|z| close(*z, expected, 1e-15)));
    let got = psi_component(&x, 0, &f).unwrap();
    assert!(got.max_abs_diff(&oracle) < 1e-12);
}

/// A hand-derived G-dual of the three-orbit set, rows times √3, paired with their character.
fn three_orbit_table() -> Vec<(usize, FunctionOnX)> {
    let s = 3f64.sqrt();
    let rows: [(usize, [f64; 6]); 6] = [
        (0, [1.0, 1.0, 0.0, 0.0, 0.0, 0.0]),
        (1, [1.0, -1.0, 0.0, 0.0, 0.0, 0.0]),
        (0, [0.0, 0.0, 1.0, 1.0, 0.0, 0.0]),
        (2, [0.0, 0.0, 1.0, -1.0, 0.0, 0.0]),
        (0, [0.0, 0.0, 0.0, 0.0, 1.0, 1.0]),
        (3, [0.0, 0.0, 0.0, 0.0, 1.0, -1.0]),
    ];
    rows.iter()
        .map(|(psi, r)| (*psi, FunctionOnX::from_real(r).scale_real(s)))
        .collect()
}

#[test]
fn three_orbit_transform_and_energy_by_table() {
    let f = FunctionOnX::from_exponents(&[0, 1, 0, 1, 0, 1], 3).unwrap();
    let table = three_orbit_table();
    // six-term sum for λ1
    let lambda1: Complex64 = (0..6).map(|p| f[p] * table[0].1[p]).sum();
    let expected = (Complex64::new(1.0, 0.0) + omega()) * 3f64.sqrt();
    assert!(close(lambda1, expected, 1e-12));

    let mut energy = [0.0; 4];
    for (psi, row) in &table {
        let v: Complex64 = (0..6).map(|p| f[p] * row[p]).sum();
        energy[*psi] += v.norm_sqr();
    }
    for e in energy {
        assert!((e - 9.0).abs() < 1e-12);
    }

    let x = three_orbit();
    let dual = GDual::build(&x);
    let got = spectral_energy_by_psi(&f, &dual).unwrap();
    for psi in 0..4 {
        assert!((got[psi] - energy[psi]).abs() < 1e-9);
    }
    let report = is_bent_spectral(&f, &dual, TOL).unwrap();
    assert!(report.bent);
}

#[test]
fn three_orbit_derivative_sums_by_hand() {
    let x = three_orbit();
    let f = FunctionOnX::from_exponents(&[0, 1, 0, 1, 0, 1], 3).unwrap();
    let g = klein();
    for a in g.elements().skip(1) {
        // Σ_x f(αx) / f(x), by direct division
        let s: Complex64 = (0..6).map(|p| f[x.act(a, p)] / f[p]).sum();
        assert!(s.norm() < 1e-12);
        assert!(close(derivative(&x, &f, a, TOL).unwrap().sum(), s, 1e-12));
    }
    let d = distance_to_g_linear(&f, &GDual::build(&x)).unwrap();
    // √(n − n/m) with n = 6, m = 4
    assert!((d - 2.121320343559643).abs() < 1e-9);
}

/// ±1 bent check on Z2×Z2 by integer autocorrelation: `Σ_x f(x+a) f(x) = 0`
/// for every `a ≠ 0`, with elements encoded as 2-bit integers.
fn klein_sign_bent_oracle(bits: u32) -> bool {
    let f = |x: u32| if bits >> x & 1 == 1 { -1i32 } else { 1 };
    (1..4).all(|a| (0..4).map(|x| f(x ^ a) * f(x)).sum::<i32>() == 0)
}

#[test]
fn regular_klein_bent_sign_functions() {
    let oracle: Vec<u32> = (0..16).filter(|&b| klein_sign_bent_oracle(b)).collect();
    assert_eq!(oracle.len(), 8);
    assert!(oracle.iter().all(|b| b.count_ones() % 2 == 1));

    let x = GSet::regular(klein());
    let dual = GDual::build(&x);
    for c in BentCriterion::ALL {
        let found = search_bent(&x, 2, c, TOL).unwrap();
        // exponent vector e ↔ bit x set when e(x) = 1
        let as_bits: Vec<u32> = found
            .iter()
            .map(|e| e.iter().enumerate().map(|(p, &v)| v << p).sum())
            .collect();
        let mut sorted = as_bits.clone();
        sorted.sort_unstable();
        assert_eq!(sorted, oracle);
        for e in &found {
            let f = FunctionOnX::from_exponents(e, 2).unwrap();
            assert!((distance_to_g_linear(&f, &dual).unwrap() - 3f64.sqrt()).abs() < 1e-9);
        }
    }
}

#[test]
fn three_orbit_exhaustive_equivalence() {
    let x = three_orbit();
    let dual = GDual::build(&x);
    let mut bent = 0;
    for e in enumerate_unitary(6, 3).unwrap() {
        let f = FunctionOnX::from_exponents(&e, 3).unwrap();
        let r = bent_report(&x, &dual, &f, TOL).unwrap();
        assert!(r.criteria_agree(), "disagreement at {e:?}");
        if r.spectral {
            bent += 1;
        }
    }
    assert!(bent > 0);
    let found = search_bent(&x, 3, BentCriterion::Poinsot, TOL).unwrap();
    assert_eq!(found.len(), bent);
    assert!(found.contains(&vec![0, 1, 0, 1, 0, 1]));
}

#[test]
fn two_orbit_exhaustive_has_no_bent() {
    let x = two_orbit();
    let dual = GDual::build(&x);
    for q in [2, 4] {
        for e in enumerate_unitary(4, q).unwrap() {
            let f = FunctionOnX::from_exponents(&e, q).unwrap();
            assert!(!is_bent_spectral(&f, &dual, TOL).unwrap().bent);
            assert!(!has_totally_balanced_derivatives(&x, &f, TOL).unwrap().balanced);
            assert!(!is_bent_poinsot(&x, &f, TOL).unwrap().bent);
        }
    }
}

#[test]
fn altered_pnl_example_recount() {
    let x = three_orbit();
    let h = FiniteAbelianGroup::cyclic(3).unwrap();
    let values = vec![0, 1, 0, 1, 0, 0];
    // β swaps x1,x2 and x5,x6 and fixes x3,x4: derivative values 1,2,0,0,0,0
    let beta = klein().index_of(&[0, 1]).unwrap();
    let by_hand: Vec<usize> = (0..6)
        .map(|p| (values[x.act(beta, p)] + 3 - values[p]) % 3)
        .collect();
    let mut counts = [0; 3];
    for v in &by_hand {
        counts[*v] += 1;
    }
    assert_eq!(counts, [4, 1, 1]);
    let g = GroupValuedFunction::new(&x, h, values).unwrap();
    assert_eq!(g.derivative(beta).counting_function(), counts.to_vec());
    assert!(!is_pnl_direct(&g));
    assert!(!is_pnl_via_bent(&g, &GDual::build(&x), TOL).unwrap());
}

#[test]
fn pnl_search_on_three_orbit() {
    let x = three_orbit();
    let h = FiniteAbelianGroup::cyclic(3).unwrap();
    let direct = search_pnl(&x, &h, PnlMode::Direct, TOL).unwrap();
    let via = search_pnl(&x, &h, PnlMode::ViaBent, TOL).unwrap();
    assert_eq!(direct, via);
    assert!(direct.iter().any(|g| g.values() == [0, 1, 0, 1, 0, 1]));
}

#[test]
fn z2_to_z2_has_no_pnl() {
    // all four maps: f(1) − f(0) = f(0) − f(1) in Z2, so f'_1 is constant
    for (a, b) in [(0, 0), (0, 1), (1, 0), (1, 1)] {
        let d = [(b + 2 - a) % 2, (a + 2 - b) % 2];
        assert_eq!(d[0], d[1]);
    }
    let z2 = FiniteAbelianGroup::cyclic(2).unwrap();
    let x = GSet::regular(z2.clone());
    assert!(search_pnl(&x, &z2, PnlMode::Direct, TOL).unwrap().is_empty());
}
