//! Zero location for the determinant factors and for the Riemann zeta
//! (the latter is the independent cross-check for even zeros off the
//! spectral line).

use crate::error::{Error, Result};
use crate::special::zeta::riemann_zeta;
use crate::transfer::det::fredholm_det;
use crate::transfer::matrix::OperatorKind;
use crate::C64;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ZeroParity {
    /// Zero of det(1 - L).
    Even,
    /// Zero of det(1 + L).
    Odd,
}

#[derive(Debug, Clone, Copy)]
pub struct ZeroLocation {
    pub q: C64,
    pub parity: ZeroParity,
    pub residual: f64,
    /// |q_N - q_{3N/2}| shift of the located zero under truncation growth.
    pub truncation_shift: f64,
    pub n: usize,
}

fn newton_on<F>(mut f: F, start: C64, tol: f64, max_iter: usize) -> Result<C64>
where
    F: FnMut(C64) -> Result<C64>,
{
    let mut z = start;
    let h = 1e-6;
    for _ in 0..max_iter {
        let fz = f(z)?;
        if fz.norm() < tol {
            return Ok(z);
        }
        let fp = (f(z + h)? - f(z - h)?) / (2.0 * h);
        if fp.norm() == 0.0 {
            return Err(Error::NoZeroFound(max_iter));
        }
        let step = fz / fp;
        z -= step;
        if step.norm() < 1e-13 * z.norm().max(1.0) {
            return Ok(z);
        }
    }
    Err(Error::NoZeroFound(max_iter))
}

/// Newton iteration on the chosen determinant factor from a starting guess.
pub fn find_zero(
    kind: OperatorKind,
    parity: ZeroParity,
    start: C64,
    w: C64,
    n: usize,
) -> Result<ZeroLocation> {
    let factor = |q: C64, nn: usize| -> Result<C64> {
        let d = fredholm_det(kind, q, w, nn)?;
        Ok(match parity {
            ZeroParity::Even => d.det_minus,
            ZeroParity::Odd => d.det_plus,
        })
    };
    let q1 = newton_on(|q| factor(q, n), start, 1e-14, 60)?;
    let res = factor(q1, n)?.norm();
    let n2 = (n * 3 / 2).min(256);
    let q2 = newton_on(|q| factor(q, n2), q1, 1e-14, 30)?;
    Ok(ZeroLocation {
        q: q1,
        parity,
        residual: res,
        truncation_shift: (q1 - q2).norm(),
        n,
    })
}

/// Scan |det factor| along the critical line q = 1/2 + i eta and polish the
/// best dip by Newton in complex q.
pub fn scan_critical_line(
    kind: OperatorKind,
    parity: ZeroParity,
    eta_range: (f64, f64),
    steps: usize,
    w: C64,
    n: usize,
) -> Result<ZeroLocation> {
    let factor = |q: C64| -> Result<C64> {
        let d = fredholm_det(kind, q, w, n)?;
        Ok(match parity {
            ZeroParity::Even => d.det_minus,
            ZeroParity::Odd => d.det_plus,
        })
    };
    let mut best = (f64::INFINITY, 0.0f64);
    for i in 0..=steps {
        let eta = eta_range.0 + (eta_range.1 - eta_range.0) * i as f64 / steps as f64;
        let v = factor(C64::new(0.5, eta))?.norm();
        if v < best.0 {
            best = (v, eta);
        }
    }
    find_zero(kind, parity, C64::new(0.5, best.1), w, n)
}

/// Newton root of zeta(2q) in complex q: the repo's own locator for the
/// nontrivial-zero correspondence.
pub fn find_zeta_zero(start: C64) -> Result<C64> {
    newton_on(|q| riemann_zeta(2.0 * q), start, 1e-12, 80)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    #[test]
    fn even_zero_at_one_from_nearby_start() {
        let z = find_zero(
            OperatorKind::GaussL,
            ZeroParity::Even,
            c(1.1, 0.0),
            c(1.0, 0.0),
            32,
        )
        .unwrap();
        assert!((z.q - 1.0).norm() < 1e-8, "located {}", z.q);
        assert!(z.residual < 1e-10);
        assert!(z.truncation_shift < 1e-6);
    }

    #[test]
    fn zeta_zero_locator_hits_first_root() {
        // first nontrivial zero of zeta(s) at s ~ 0.5 + 14.1347i, so q ~ s/2
        let q = find_zeta_zero(c(0.25, 7.05)).unwrap();
        assert!((q - c(0.25, 7.0673625708)).norm() < 1e-6, "{q}");
    }
}
