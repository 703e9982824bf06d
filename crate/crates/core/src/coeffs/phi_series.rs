//! Power-series plumbing between cusp-form Fourier coefficients and the
//! period-function series coefficients.
//!
//! Even parity: phi(t) = sum_n n^{1/2-q} c_n t/(t^2+(2 pi n)^2)
//!            = sum_k (-1)^k (4 pi^2)^{-(k+1)} L(q+2k+3/2) t^{2k+1},
//! odd parity: phi(t) = sum_k (-1)^k (2 pi)^{-2k} L(q+2k+1/2) t^{2k},
//! both up to one q-dependent normalization fixed to 1 here.
//!
//! `a_from_phi` inverts phi = (e^t-1)^{-1} sum (-1)^n a_n t^n/Gamma(n+2q):
//! a_n = (-1)^n Gamma(n+2q) [t^n]((e^t - 1) phi(t)).

use crate::coeffs::{l_series, CoeffKind, CoeffTable, Provenance};
use crate::error::Result;
use crate::special::gamma::gamma;
use crate::C64;

/// Taylor coefficients (degree 0..=2*count) of the even-parity phi series.
pub fn phi_from_cusp_even(c: &CoeffTable, q: C64, count: usize) -> Result<Vec<C64>> {
    let four_pi2 = 4.0 * std::f64::consts::PI * std::f64::consts::PI;
    let mut coeffs = vec![C64::new(0.0, 0.0); 2 * count];
    let mut scale = 1.0 / four_pi2;
    for k in 0..count {
        let l = l_series(c, q + (2 * k) as f64 + 1.5, 1e-9)?;
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        coeffs[2 * k + 1] = sign * scale * l.value;
        scale /= four_pi2;
    }
    Ok(coeffs)
}

/// Taylor coefficients (degree 0..2*count) of the odd-parity phi series.
pub fn phi_from_cusp_odd(c: &CoeffTable, q: C64, count: usize) -> Result<Vec<C64>> {
    let four_pi2 = 4.0 * std::f64::consts::PI * std::f64::consts::PI;
    let mut coeffs = vec![C64::new(0.0, 0.0); 2 * count + 1];
    let mut scale = 1.0;
    for k in 0..=count {
        let l = l_series(c, q + (2 * k) as f64 + 0.5, 1e-9)?;
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        coeffs[2 * k] = sign * scale * l.value;
        scale /= four_pi2;
    }
    Ok(coeffs)
}

/// Recover a_n from the Laurent data of phi = pole_coeff/t + regular part:
/// (e^t-1) phi has [t^n] = conv_n(regular) + pole_coeff/(n+1)!, and
/// a_n = (-1)^n Gamma(n+2q) [t^n]((e^t-1) phi); a_0 = Gamma(2q) pole_coeff.
pub fn a_from_phi_laurent(phi_taylor: &[C64], pole_coeff: C64, q: C64) -> Result<CoeffTable> {
    let n = phi_taylor.len();
    let mut factorial_inv = vec![0.0f64; n + 2];
    let mut f = 1.0;
    for (m, slot) in factorial_inv.iter_mut().enumerate() {
        if m > 0 {
            f *= m as f64;
        }
        *slot = 1.0 / f;
    }
    let mut gamma_n2q = gamma(2.0 * q)?;
    let mut out = Vec::with_capacity(n);
    for k in 0..n {
        if k > 0 {
            gamma_n2q *= 2.0 * q + (k as f64 - 1.0);
        }
        // convolution of the regular part with e^t - 1 (coefficients 1/m!)
        let mut conv = pole_coeff * factorial_inv[k + 1];
        for m in 1..=k {
            conv += phi_taylor[k - m] * factorial_inv[m];
        }
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        out.push(sign * gamma_n2q * conv);
    }
    Ok(CoeffTable::new(CoeffKind::PsiA, q, 0, out, Provenance::Oracle))
}

/// Regular-at-zero case (a_0 = 0): a_n = (-1)^n Gamma(n+2q) [t^n]((e^t-1) phi).
pub fn a_from_phi(phi_taylor: &[C64], q: C64) -> Result<CoeffTable> {
    a_from_phi_laurent(phi_taylor, C64::new(0.0, 0.0), q)
}
