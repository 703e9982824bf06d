//! Finite-rank truncations of the Gauss and signed Farey transfer operators,
//! Fredholm determinants, the two-variable Selberg zeta Z(q, w), and zero /
//! eigenfunction location.

mod det;
mod matrix;
mod nystrom;
mod operator;
mod zeros;

pub use det::{fredholm_det, DetResult};
pub use matrix::{build_matrix, OperatorKind, OperatorMatrix};
pub use nystrom::{build_mn_matrix, extract_gpf_coeffs, mn_eigen_margin, GpfFit, MnMatrix, MnSign};
pub use operator::{apply_farey_p, apply_gauss_l, FareyBranch};
pub use zeros::{find_zero, find_zeta_zero, ZeroLocation};
