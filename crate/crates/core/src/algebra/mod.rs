//! Scalar and matrix arithmetic: complex numbers, dual numbers carrying a
//! `t`-derivative, truncated Laurent jets, and 2×2 matrices over any of them.

mod dual;
mod jet;
mod mat2;

pub use dual::DualC;
pub use jet::{jet_exp, jet_sqrt, LaurentJet};
pub use mat2::{mat2_inv, Mat2, Scalar};

pub use num_complex::Complex64 as Complex;

/// The imaginary unit.
pub const I: Complex = Complex::new(0.0, 1.0);
