//! Fourier analysis on finite sets acted on by finite abelian groups.
//!
//! A [`GSet`] carries a [`FiniteAbelianGroup`] action on `n` points. The
//! [`spectral`] module builds a G-dual basis of `C^X` (an `n`-normal orthogonal
//! basis of character-linear functions closed under conjugation) and the
//! Fourier transform relative to it. [`analysis`] decides bentness of unitary
//! functions and perfect nonlinearity of group-valued functions, and
//! [`search`] enumerates root-of-unity alphabets exhaustively.

pub mod analysis;
pub mod error;
pub mod function;
pub mod group;
pub mod gset;
pub mod search;
pub mod spectral;

pub use error::{Error, Result};
pub use function::{ComplexFunction, FunctionOnG, FunctionOnGDual, FunctionOnX};
pub use group::FiniteAbelianGroup;
pub use gset::GSet;
pub use num_complex::Complex64;
pub use spectral::{GDual, Spectrum};

/// Default comparison tolerance.
pub const DEFAULT_TOLERANCE: f64 = 1e-9;
