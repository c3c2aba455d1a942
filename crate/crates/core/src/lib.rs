//! Rogue-wave solutions of the AB system
//!
//! ```text
//! A_xt = A B,   B_x = -½ (|A|²)_t,   |A_t|² + B² = 1
//! ```
//!
//! built by iterating a one-fold Darboux transformation at a single spectral
//! point `λ₁ = -a/2 + i/2` on top of the plane-wave background.
//!
//! Layers, bottom up:
//!
//! - [`algebra`]: complex/dual/jet scalars and 2×2 matrices.
//! - [`seed`]: plane-wave background and its Lax-pair eigenfunction.
//! - [`darboux`]: the Darboux chain producing `A[l]`, `B[l]`, `l = 0..N`.
//! - [`closedform`]: explicit first- and second-order formulas.
//! - [`validate`]: residual, normalization and peak checks on sampled grids.
//! - [`io`]: grid evaluation and CSV/JSON/SVG export.
//! - [`cli`]: the `abrogue` command line.

pub mod algebra;
pub mod cli;
pub mod closedform;
pub mod darboux;
pub mod error;
pub mod io;
pub mod seed;
pub mod validate;

pub use error::{AlgebraError, Error, Result};
