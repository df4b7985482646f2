//! Sharp constants in pointwise gradient estimates for harmonic functions in
//! the Hardy spaces `h^p` of the unit disk.
//!
//! For `w = P[f]` with boundary data `f ∈ L^p(T)` and `z = r e^{iα}`,
//!
//! ```text
//! |Dw(z) e^{iτ}| ≤ C_p(z, e^{iτ}) (1 - r²)^{-1-1/p} ‖f‖_p
//! |∂w(z)|, |∂̄w(z)| ≤ c_p(z) (1 - r²)^{-1-1/p} ‖f‖_p
//! ```
//!
//! where `‖f‖_p = (∫₀^{2π} |f|^p dθ)^{1/p}` is the *unnormalized* boundary
//! norm. The crate evaluates every constant by adaptive quadrature and, where
//! a hypergeometric closed form exists, by [`specfun`], and checks the two
//! against each other. [`extremal`] builds the boundary families that
//! certify sharpness and [`verification`] runs the supporting lemma sweeps
//! and randomized inequality checks.
//!
//! Grid-shaped work (sweeps, fuzz trials, lemma grids, the Bloch grid) runs
//! through [`exec::Execution`], which uses rayon when the `parallel` feature
//! is enabled and degrades to plain iteration otherwise.

pub mod constants;
pub mod error;
pub mod exec;
pub mod extremal;
pub mod hardy;
pub mod kernel;
pub mod quadrature;
pub mod specfun;
pub mod sweep;
pub mod verification;

pub use constants::{ConstantReport, Exponent, Method};
pub use error::{Error, Result};
pub use exec::Execution;
pub use hardy::{BoundaryFunction, DerivativePair, HarmonicExtension};
pub use kernel::{DiskPoint, Direction};
pub use quadrature::{Integrator, KinkSet, QuadResult};
