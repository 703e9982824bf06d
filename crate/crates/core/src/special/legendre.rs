//! Ferrers functions P^{-q+1/2}_{n+q-1/2} on (-1, 1) and the building block
//! F_q(n, y) of all the Legendre-type series.
//!
//! Because order + degree = n is an integer, the Ferrers function reduces to
//! a terminating hypergeometric polynomial (DLMF 14.3.11 with the 1/Gamma(c)
//! of the regularized 2F1 absorbed):
//!
//!   n even:  (-1)^{n/2} 2^{-q+1/2} G((n+1)/2)/(G((n+1)/2+q) G(1/2))
//!            (1-t^2)^{q/2-1/4} 2F1(-n/2, n/2+q; 1/2; t^2)
//!   n odd:   (-1)^{(n-1)/2} 2^{-q+1/2} G(n/2+1)/(G(n/2+q) G(3/2))
//!            t (1-t^2)^{q/2-1/4} 2F1(-(n-1)/2, (n+1)/2+q; 3/2; t^2)
//!
//! For series work the three-term recurrence in n is used instead: with
//! mu = -q+1/2 fixed and nu = n+q-1/2,
//!   (n+2q) P_{n+1} = (2n+2q) t P_n - n P_{n-1},
//! which is stable on (0,1) where both solutions oscillate.

use crate::error::Result;
use crate::special::gamma::{gamma, gamma_ratio};
use crate::special::hyp2f1::hyp2f1_terminating;
use num_complex::Complex64;

/// P^{-q+1/2}_{n+q-1/2}(t) for 0 < t < 1 via the terminating-polynomial
/// branch formula.
pub fn legendre_p(n: usize, q: Complex64, t: f64) -> Result<Complex64> {
    let pow = Complex64::new(1.0 - t * t, 0.0).powc(q / 2.0 - 0.25);
    let two_pow = Complex64::new(2.0, 0.0).powc(-q + 0.5);
    if n % 2 == 0 {
        let k = n / 2;
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        let half_n1 = (n as f64 + 1.0) / 2.0;
        let pref = gamma_ratio(Complex64::new(half_n1, 0.0), half_n1 + q)?
            / gamma(Complex64::new(0.5, 0.0))?;
        let f = hyp2f1_terminating(k, q + n as f64 / 2.0, Complex64::new(0.5, 0.0), t * t)?;
        Ok(sign * two_pow * pref * pow * f)
    } else {
        let k = (n - 1) / 2;
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        let half_n = n as f64 / 2.0;
        let pref = gamma_ratio(Complex64::new(half_n + 1.0, 0.0), half_n + q)?
            / gamma(Complex64::new(1.5, 0.0))?;
        let f = hyp2f1_terminating(
            k,
            q + (n as f64 + 1.0) / 2.0,
            Complex64::new(1.5, 0.0),
            t * t,
        )?;
        Ok(sign * two_pow * pref * pow * t * f)
    }
}

/// P^{-q+1/2}_{n+q-1/2}(t) for n = 0..n_max by the forward recurrence; the
/// n = 0, 1 seeds collapse to 2^{-q+1/2} (1-t^2)^{q/2-1/4}/Gamma(q+1/2)
/// times (1, t).
pub fn legendre_p_sequence(n_max: usize, q: Complex64, t: f64) -> Result<Vec<Complex64>> {
    let base = Complex64::new(2.0, 0.0).powc(-q + 0.5)
        * Complex64::new(1.0 - t * t, 0.0).powc(q / 2.0 - 0.25)
        / gamma(q + 0.5)?;
    let mut out = Vec::with_capacity(n_max + 1);
    out.push(base);
    if n_max == 0 {
        return Ok(out);
    }
    out.push(base * t);
    for n in 1..n_max {
        let nf = n as f64;
        let prev = out[n - 1];
        let cur = out[n];
        let next = ((2.0 * nf + 2.0 * q) * t * cur - nf * prev) / (nf + 2.0 * q);
        out.push(next);
    }
    Ok(out)
}

/// Angle chart for y > 0: y = tan(theta) with sin, cos computed from one
/// hypot so the y <-> 1/y swap is exact in floating point.
#[derive(Debug, Clone, Copy)]
pub struct AngleChart {
    pub sin_t: f64,
    pub cos_t: f64,
}

impl AngleChart {
    pub fn new(y: f64) -> AngleChart {
        let h = y.hypot(1.0);
        AngleChart {
            sin_t: y / h,
            cos_t: 1.0 / h,
        }
    }

    pub fn swapped(self) -> AngleChart {
        AngleChart {
            sin_t: self.cos_t,
            cos_t: self.sin_t,
        }
    }
}

/// F_q(n, y) = y^{n+q}/(1+y^2)^{n/2+q/2+1/4} P^{-q+1/2}_{n+q-1/2}(y/sqrt(1+y^2)).
/// In the angle chart this is (sin)^{n+q} (cos)^{1/2} P(sin), which is how it
/// is evaluated; both arguments stay inside (0,1) for every y.
pub fn legendre_term_f(n: usize, q: Complex64, y: f64) -> Result<Complex64> {
    let ch = AngleChart::new(y);
    let p = legendre_p(n, q, ch.sin_t)?;
    let amp = ((q + n as f64) * ch.sin_t.ln()).exp() * ch.cos_t.sqrt();
    Ok(amp * p)
}
