//! Special functions with complex parameters: everything downstream modules
//! consume lives here so the cross-checks stay in-repo.

pub mod bernoulli;
pub mod bessel;
pub mod gamma;
pub mod hyp2f1;
pub mod legendre;
pub mod quadrature;
pub mod zeta;

pub use bernoulli::{bernoulli, bernoulli_f64, BernoulliTable};
pub use bessel::{bessel_j, bessel_k};
pub use gamma::{gamma, gamma_ratio, incomplete_gamma_lower, log_gamma};
pub use hyp2f1::{hyp2f1_series, hyp2f1_terminating};
pub use legendre::{legendre_p, legendre_p_sequence, legendre_term_f, AngleChart};
pub use quadrature::{gauss_laguerre, gauss_legendre_unit, QuadratureRule};
pub use zeta::{hurwitz_zeta, hurwitz_zeta_complex, riemann_zeta, zetam1};
