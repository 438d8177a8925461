#![allow(dead_code)]

use gset_fourier::{Complex64, FiniteAbelianGroup, FunctionOnX, GSet};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub const TOL: f64 = 1e-9;

/// Groups of order at most 12.
pub const SMALL_GROUPS: &[&[usize]] = &[
    &[2],
    &[3],
    &[4],
    &[5],
    &[6],
    &[7],
    &[8],
    &[9],
    &[10],
    &[11],
    &[12],
    &[2, 2],
    &[2, 4],
    &[3, 3],
    &[2, 6],
    &[2, 2, 2],
];

pub fn klein() -> FiniteAbelianGroup {
    FiniteAbelianGroup::new(&[2, 2]).unwrap()
}

/// Four points in two orbits; the second character kills the first orbit's
/// stabilizer and the third the second's, leaving the fourth with nothing.
pub fn two_orbit() -> GSet {
    GSet::from_generators(klein(), 4, &[vec![0, 1, 3, 2], vec![1, 0, 2, 3]]).unwrap()
}

/// Six points in three orbits with stabilizers {1,α}, {1,β}, {1,γ}.
pub fn three_orbit() -> GSet {
    GSet::from_generators(klein(), 6, &[vec![0, 1, 3, 2, 5, 4], vec![1, 0, 2, 3, 5, 4]]).unwrap()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A random G-set with `|G| ≤ 12` and at most `max_points` points.
pub fn random_gset(seed: u64, max_points: usize) -> GSet {
    let mut r = rng(seed);
    let inv = SMALL_GROUPS[r.gen_range(0..SMALL_GROUPS.len())];
    let g = FiniteAbelianGroup::new(inv).unwrap();
    let orbits = r.gen_range(1..=4);
    let mut x = GSet::random(g.clone(), orbits, max_points, &mut r);
    if x.points() == 0 {
        x = GSet::regular(g);
    }
    x
}

pub fn random_function(len: usize, r: &mut impl Rng) -> FunctionOnX {
    FunctionOnX::new(
        (0..len)
            .map(|_| Complex64::new(r.gen_range(-1.0..1.0), r.gen_range(-1.0..1.0)))
            .collect(),
    )
}

pub fn random_unitary(len: usize, r: &mut impl Rng) -> FunctionOnX {
    FunctionOnX::new(
        (0..len)
            .map(|_| Complex64::from_polar(1.0, r.gen_range(0.0..std::f64::consts::TAU)))
            .collect(),
    )
}

pub fn close(a: Complex64, b: Complex64, tol: f64) -> bool {
    (a - b).norm() <= tol
}
