//! Fredholm determinants of the truncations and the two-variable Selberg
//! zeta Z(q, w) = det(1 - L_{q,w}) det(1 + L_{q,w}).

use crate::error::Result;
use crate::transfer::matrix::{build_matrix, default_radius, OperatorKind, OperatorMatrix};
use crate::C64;
use nalgebra::DMatrix;

#[derive(Debug, Clone, Copy)]
pub struct DetResult {
    pub q: C64,
    pub w: C64,
    pub n: usize,
    pub det_minus: C64,
    pub det_plus: C64,
    /// det(1 - L) det(1 + L).
    pub z: C64,
    /// |det_N - det_2N| drift for the minus and plus factors.
    pub stability: (f64, f64),
}

fn dets_of(matrix: &OperatorMatrix) -> (C64, C64) {
    let n = matrix.n;
    let a = DMatrix::from_fn(n, n, |k, m| matrix.entry(k, m));
    let id = DMatrix::<C64>::identity(n, n);
    let dm = (&id - &a).lu().determinant();
    let dp = (&id + &a).lu().determinant();
    (dm, dp)
}

/// Determinants at truncation n, with an n-vs-2n stability delta (2n capped
/// at 256).
pub fn fredholm_det(kind: OperatorKind, q: C64, w: C64, n: usize) -> Result<DetResult> {
    let r = default_radius(kind);
    let m1 = build_matrix(kind, q, w, n, r)?;
    let (dm1, dp1) = dets_of(&m1);
    let n2 = (2 * n).min(256);
    let (stab_m, stab_p) = if n2 > n {
        let m2 = build_matrix(kind, q, w, n2, r)?;
        let (dm2, dp2) = dets_of(&m2);
        ((dm1 - dm2).norm(), (dp1 - dp2).norm())
    } else {
        (f64::NAN, f64::NAN)
    };
    Ok(DetResult {
        q,
        w,
        n,
        det_minus: dm1,
        det_plus: dp1,
        z: dm1 * dp1,
        stability: (stab_m, stab_p),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    #[test]
    fn gauss_det_vanishes_at_q_one() {
        let d = fredholm_det(OperatorKind::GaussL, c(1.0, 0.0), c(1.0, 0.0), 36).unwrap();
        assert!(d.det_minus.norm() < 1e-8, "det(1-L_1) = {}", d.det_minus);
        assert!(d.det_plus.norm() > 1e-3);
    }

    #[test]
    fn zeta_factor_at_w_zero_is_one() {
        let d = fredholm_det(OperatorKind::GaussL, c(1.3, 0.0), c(0.0, 0.0), 16).unwrap();
        assert!((d.z - 1.0).norm() < 1e-12);
    }

    #[test]
    fn truncation_drift_small() {
        let d = fredholm_det(OperatorKind::GaussL, c(2.0, 0.0), c(0.5, 0.0), 32).unwrap();
        assert!(d.stability.0 < 1e-10, "minus drift {}", d.stability.0);
        assert!(d.stability.1 < 1e-10, "plus drift {}", d.stability.1);
    }

    #[test]
    fn analyticity_in_q() {
        // Cauchy-Riemann residual of Z(q, 0.5) by central differences
        let w = c(0.5, 0.0);
        let q0 = c(1.4, 0.3);
        let h = 1e-4;
        let f = |q: C64| fredholm_det(OperatorKind::GaussL, q, w, 24).unwrap().z;
        let dre = (f(q0 + h) - f(q0 - h)) / (2.0 * h);
        let dim = (f(q0 + C64::new(0.0, h)) - f(q0 - C64::new(0.0, h))) / (2.0 * h);
        let cr = (dre - dim / C64::new(0.0, 1.0)).norm();
        assert!(cr < 1e-6 * dre.norm().max(1e-6), "CR residual {cr}");
    }
}
