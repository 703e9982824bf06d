//! Dirichlet series L(rho) = sum_n c_n n^{-rho} for tabulated coefficients.
//!
//! The data is finite, so the sum is truncated where the table ends and the
//! tail is modelled by extending the mean of the trailing coefficients:
//! sum_{n>N} c-bar n^{-rho} via Euler-Maclaurin with four derivative terms.
//! The reported error combines the next EM term with the trailing-coefficient
//! spread; a hard error is raised when that bound exceeds the tolerance.

use crate::coeffs::CoeffTable;
use crate::error::{Error, Result};
use crate::C64;
use num_complex::Complex64;

#[derive(Debug, Clone, Copy)]
pub struct LSeriesValue {
    pub value: C64,
    pub tail_estimate: f64,
}

/// Evaluate L(rho) = sum c_n n^{-rho}. `rel_tol` bounds the acceptable tail
/// estimate relative to the partial sum.
pub fn l_series(c: &CoeffTable, rho: C64, rel_tol: f64) -> Result<LSeriesValue> {
    if c.is_empty() {
        return Err(Error::domain("empty coefficient table"));
    }
    let n0 = c.start.max(1);
    let n1 = c.start + c.len() - 1;
    let mut sum = C64::new(0.0, 0.0);
    for n in (n0..=n1).rev() {
        let cn = c.get(n).unwrap();
        if cn != C64::new(0.0, 0.0) {
            sum += cn * Complex64::new(n as f64, 0.0).powc(-rho);
        }
    }
    // trailing behaviour from the last quarter of the table
    let k = (c.len() / 4).max(1);
    let tail_slice = &c.values[c.len() - k..];
    let mean: C64 = tail_slice.iter().sum::<C64>() / k as f64;
    let spread = tail_slice
        .iter()
        .map(|v| (v - mean).norm())
        .fold(0.0f64, f64::max);

    let nf = (n1 + 1) as f64;
    if rho.re <= 1.0 && (mean.norm() > 0.0 || spread > 0.0) {
        return Err(Error::Convergence {
            what: "L-series tail divergent at Re(rho) <= 1",
            estimate: f64::INFINITY,
            tolerance: rel_tol,
        });
    }
    // Euler-Maclaurin for sum_{n >= N} n^{-rho}, N = n1+1:
    // N^{1-rho}/(rho-1) + N^{-rho}/2 + rho/12 N^{-rho-1}
    //   - rho(rho+1)(rho+2)/720 N^{-rho-3} + ...
    let npow = Complex64::new(nf, 0.0).powc(-rho);
    let em = npow * nf / (rho - 1.0) + 0.5 * npow + rho / 12.0 * npow / nf
        - rho * (rho + 1.0) * (rho + 2.0) / 720.0 * npow / (nf * nf * nf);
    let next_term =
        (rho * (rho + 1.0) * (rho + 2.0) * (rho + 3.0) * (rho + 4.0)).norm() / 30240.0
            * npow.norm()
            / nf.powi(5);
    let tail_correction = mean * em;
    let tail_bound = spread * (em.norm() + npow.norm()) + mean.norm() * next_term;

    let value = sum + tail_correction;
    let scale = value.norm().max(1e-300);
    if tail_bound > rel_tol * scale {
        return Err(Error::Convergence {
            what: "L-series tail",
            estimate: tail_bound / scale,
            tolerance: rel_tol,
        });
    }
    Ok(LSeriesValue {
        value,
        tail_estimate: tail_bound,
    })
}
