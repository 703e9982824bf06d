//! Series representations on the imaginary axis and the integral-transform
//! machinery for their functional-equation checks.

mod cusp;
mod eisenstein;
mod laplacian;
mod legendre_series;
mod phi;
mod psi;
pub mod transforms;

pub use cusp::{eval_cusp_u_even, eval_cusp_ux_odd, fourier_even, fourier_odd_x, CuspValue};
pub use laplacian::{
    coefficient_recurrence_defect, laplacian_residual, laplacian_residual_bold_e,
    term_second_derivative_defect,
};
pub use eisenstein::{
    eval_e_reference, eval_e_tilde, eval_rational_expansion, eval_rational_intermediate,
    EisensteinMode,
};
pub use legendre_series::{
    conjecture_check, eval_bold_e, eval_legendre_series, eval_u, ConjectureReport,
    LegendreSeries, SeriesKind, SeriesValue,
};
pub use phi::{phi_tilde_direct, PhiFunction, PhiKind};
pub use psi::{eval_psi_plus, eval_psi_plus_borel};
pub use transforms::{
    apply_m, apply_n_to_pole, hankel_sym, mn_functional_equation_residual, HankelOptions,
    NystromKernel,
};
