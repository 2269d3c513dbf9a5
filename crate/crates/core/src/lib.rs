//! Exact and numerical machinery for level-ℓ representations of the loop
//! group of Spin(2n).
//!
//! The crate is organised bottom-up:
//!
//! * [`weyl_lattice`]: exact D_n weights, Weyl group, alcoves, center action,
//!   lattice cocycles.
//! * [`tensor_fusion`]: tensor rules with minimal modules, truncated fusion
//!   matrices, characters at the points `exp(2πi(μ+ρ)/κ)`, quantum dimensions.
//! * [`braid_algebra`]: braiding eigenvalues and the 3×3 Wenzl representation.
//! * [`df_oracle`]: Gamma/Beta, the two-variable Selberg integral, the
//!   Dotsenko–Fateev equation and its connection coefficients.
//! * [`kz_engine`]: the reduced Knizhnik–Zamolodchikov system, Frobenius bases
//!   and numerical transport from 0 to ∞.

pub mod braid_algebra;
pub mod df_oracle;
pub mod error;
pub mod fuchsian;
pub mod kz_engine;
pub mod serde_c64;
pub mod tensor_fusion;
pub mod weyl_lattice;

pub use error::{Error, Result};

pub type C64 = num_complex::Complex64;
pub type Q = num_rational::Ratio<i64>;
