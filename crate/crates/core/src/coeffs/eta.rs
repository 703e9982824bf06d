//! Coefficients of the rational expansion
//!   sum_n (-1)^n alpha_n [paired Legendre term] =
//!   2^{-q+1/2} (y/(1+y^2))^q sum_s (-1)^s eta_s (1+y^{2s})/(1+y^2)^s.
//!
//! eta_s is assembled either directly from the alpha table (grouping the
//! hypergeometric-polynomial contributions of each alpha_{s+i}) or, when
//! alpha_n = (-1)^n Gamma(n+2q)/(n! Gamma(2q)) beta_n, from the compact form
//!   eta_s = (-1)^s 2^s Gamma(s+q)/(s! Gamma(q+1/2) Gamma(q))
//!           sum_i (-1)^i 2^{-i} beta_{s+i} C(s,i).
//!
//! `rational_eis_inner` is the bracket sum_i C(s,i)(-1)^i A_{s+i}/2^i in its
//! Bernoulli-zeta closed form; its direct evaluation is kept alongside for
//! the identity check. The closed form carries no zeta(2q) term.

use crate::coeffs::{capital_a_many, CoeffKind, CoeffTable, Provenance};
use crate::error::{Error, Result};
use crate::special::bernoulli::bernoulli_f64;
use crate::special::gamma::{gamma, gamma_ratio};
use crate::special::zeta::{riemann_zeta, zetam1};
use crate::C64;
use num_complex::Complex64;

/// gamma_{n,q}: n = 2k: G(k+1/2)/(G(k+1/2+q) G(k+q));
///             n = 2k+1: G(k+3/2)/(G(k+1/2+q) G(k+q+1)).
fn gamma_factor(n: usize, q: C64) -> Result<C64> {
    let k = (n / 2) as f64;
    if n % 2 == 0 {
        let top = Complex64::new(k + 0.5, 0.0);
        Ok(gamma_ratio(top, top + q)? / gamma(q + k)?)
    } else {
        let top = Complex64::new(k + 1.5, 0.0);
        Ok(gamma_ratio(top, Complex64::new(k + 0.5, 0.0) + q)? / gamma(q + k + 1.0)?)
    }
}

/// beta_{n,j,q}: n = 2k: C(k,j) G(k+q+j)/G(1/2+j);
///              n = 2k+1: C(k,j) G(k+q+j+1)/G(3/2+j).
fn beta_factor(n: usize, j: usize, q: C64) -> Result<C64> {
    let k = n / 2;
    if j > k {
        return Ok(C64::new(0.0, 0.0));
    }
    let mut binom = 1.0f64;
    for i in 0..j {
        binom = binom * (k - i) as f64 / (i + 1) as f64;
    }
    let (top, bot) = if n % 2 == 0 {
        (q + (k + j) as f64, Complex64::new(0.5 + j as f64, 0.0))
    } else {
        (q + (k + j) as f64 + 1.0, Complex64::new(1.5 + j as f64, 0.0))
    };
    Ok(binom * gamma_ratio(top, bot)?)
}

/// eta_{s,q} for s < count, from an alpha table with at least 2*count - 1
/// entries, by the direct grouped form.
pub fn eta_coeffs(alpha: &CoeffTable, q: C64, count: usize) -> Result<CoeffTable> {
    if alpha.start != 0 || alpha.len() < 2 * count.max(1) - 1 {
        return Err(Error::domain(format!(
            "eta needs alpha indexed from 0 with >= {} entries, got {}",
            2 * count.max(1) - 1,
            alpha.len()
        )));
    }
    let mut out = Vec::with_capacity(count);
    for s in 0..count {
        let mut acc = C64::new(0.0, 0.0);
        for i in 0..=s {
            let j = if s % 2 == 0 {
                s / 2 - (i + 1) / 2
            } else {
                (s - 1) / 2 - i / 2
            };
            let a = alpha.get(s + i).unwrap();
            acc += a * gamma_factor(s + i, q)? * beta_factor(s + i, j, q)?;
        }
        out.push(acc);
    }
    Ok(CoeffTable::new(CoeffKind::Eta, q, 0, out, Provenance::ClosedForm))
}

/// eta_{s,q} from bracket values beta_n with
/// alpha_n = (-1)^n Gamma(n+2q)/(n! Gamma(2q)) beta_n.
pub fn eta_from_bracket(bracket: &[C64], q: C64, count: usize) -> Result<CoeffTable> {
    if bracket.len() < 2 * count.max(1) - 1 {
        return Err(Error::domain("bracket table too short for eta"));
    }
    let gq12 = gamma(q + 0.5)?;
    let gq = gamma(q)?;
    let mut out = Vec::with_capacity(count);
    let mut pref = C64::new(1.0, 0.0); // 2^s Gamma(s+q)/s! staged
    let mut gsq = gamma(q)?; // Gamma(s+q)
    for s in 0..count {
        if s > 0 {
            gsq *= q + (s as f64 - 1.0);
            pref = pref * 2.0 / s as f64;
        }
        let mut inner = C64::new(0.0, 0.0);
        let mut binom = 1.0f64;
        let mut half = 1.0f64;
        for i in 0..=s {
            let sign = if i % 2 == 0 { 1.0 } else { -1.0 };
            inner += sign * half * binom * bracket[s + i];
            binom = binom * (s - i) as f64 / (i + 1) as f64;
            half *= 0.5;
        }
        let sign = if s % 2 == 0 { 1.0 } else { -1.0 };
        out.push(sign * pref * gsq / (gq12 * gq) * inner);
    }
    Ok(CoeffTable::new(CoeffKind::Eta, q, 0, out, Provenance::ClosedForm))
}

/// Direct bracket sum_i C(s,i) (-1)^i A_{s+i,q} / 2^i for s >= 1.
pub fn rational_eis_inner_direct(s: usize, q: C64) -> Result<C64> {
    let a = capital_a_many(q, 2 * s + 1)?;
    let mut acc = C64::new(0.0, 0.0);
    let mut binom = 1.0f64;
    let mut half = 1.0f64;
    for i in 0..=s {
        let sign = if i % 2 == 0 { 1.0 } else { -1.0 };
        acc += sign * half * binom * a[s + i];
        binom = binom * (s - i) as f64 / (i + 1) as f64;
        half *= 0.5;
    }
    Ok(acc)
}

/// Closed form of the same bracket:
///   sqrt(pi)/2^{s+1} s!/G(s+3/2) zeta(2q-1) - zeta(2q)/2^{s+1}
///   + sum_{k=1}^s (-1)^k/(2^{k-1}(s+k)) C(s,k-1) B_{s+k} zeta(2q-1+s+k).
pub fn rational_eis_inner(s: usize, q: C64) -> Result<C64> {
    if s == 0 {
        return riemann_zeta(2.0 * q - 1.0);
    }
    let sf = s as f64;
    let mut acc = std::f64::consts::PI.sqrt() / 2f64.powi(s as i32 + 1)
        * gamma_ratio(Complex64::new(sf + 1.0, 0.0), Complex64::new(sf + 1.5, 0.0))?
        * riemann_zeta(2.0 * q - 1.0)?;
    acc -= riemann_zeta(2.0 * q)? / 2f64.powi(s as i32 + 1);
    let mut binom = 1.0f64; // C(s, k-1)
    for k in 1..=s {
        if (s + k) % 2 == 0 {
            let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
            let zv = zetam1(2.0 * q - 1.0 + (s + k) as f64)?
                + C64::new(1.0, 0.0);
            acc += sign / (2f64.powi(k as i32 - 1) * (s + k) as f64)
                * binom
                * bernoulli_f64(s + k)?
                * zv;
        }
        binom = binom * (s - k + 1) as f64 / k as f64;
    }
    Ok(acc)
}
