//! Numerical machinery around the transfer operators of the Gauss and Farey
//! maps: special functions with complex spectral parameter q, the coefficient
//! families of the associated period-function expansions, Legendre-type
//! series for Maass forms and Eisenstein series on the imaginary axis, and
//! finite-rank truncations of the operators with their Fredholm determinants
//! and the two-variable Selberg zeta Z(q, w).

pub mod dd;
pub mod error;
pub mod coeffs;
pub mod series;
pub mod transfer;
pub mod special;

pub use error::{Error, Result};

pub type C64 = num_complex::Complex64;
