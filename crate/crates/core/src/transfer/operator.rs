//! Pointwise application of the transfer operators.
//!
//! Gauss map branches: (L_{q,w} f)(z) = sum_{n>=1} w^n (z+n)^{-2q} f(1/(z+n)),
//! which reduces to the classical L_q at w = 1. For polynomial-type f the
//! branch sum is truncated and the tail closed exactly through Hurwitz zeta
//! (w = 1) or Lerch-type sums (|w| < 1):
//!   f(1/(z+n)) expanded in powers of 1/(z+n) turns each tail into
//!   sum_{n>M} w^n (z+n)^{-2q-j}.
//!
//! Farey operators act by a single composition each:
//!   (P_{0,q} f)(z) = (z+1)^{-2q} f(z/(z+1)),
//!   (P_{1,q} f)(z) = (z+1)^{-2q} f(1/(z+1)).

use crate::error::{Error, Result};
use crate::special::zeta::hurwitz_zeta_complex;
use crate::C64;
use num_complex::Complex64;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FareyBranch {
    Zero,
    One,
}

/// One Farey branch applied to f at z.
pub fn apply_farey_p<F>(branch: FareyBranch, q: C64, f: F, z: C64) -> Result<C64>
where
    F: Fn(C64) -> Result<C64>,
{
    let zp1 = z + 1.0;
    let weight = zp1.powc(-2.0 * q);
    let arg = match branch {
        FareyBranch::Zero => z / zp1,
        FareyBranch::One => 1.0 / zp1,
    };
    Ok(weight * f(arg)?)
}

/// Lerch-type tail sum_{n > m0} w^n (a0 + n)^{-s} by direct summation with a
/// geometric bound; needs |w| < 1.
fn lerch_tail(w: C64, s: C64, a0: C64, m0: usize) -> Result<C64> {
    let r = w.norm();
    if r >= 0.995 {
        return Err(Error::ResolventDiverges(format!("{w}")));
    }
    let mut acc = C64::new(0.0, 0.0);
    let mut wn = w.powu(m0 as u32 + 1);
    for n in (m0 + 1).. {
        let term = wn * (a0 + n as f64).powc(-s);
        acc += term;
        // geometric tail bound
        if term.norm() / (1.0 - r) < 1e-16 * acc.norm().max(1e-300) {
            break;
        }
        wn *= w;
        if n > m0 + 100_000 {
            return Err(Error::Convergence {
                what: "lerch tail",
                estimate: term.norm(),
                tolerance: 1e-16,
            });
        }
    }
    Ok(acc)
}

/// L_{q,w} applied to a polynomial in monomial basis coefficients around a
/// center: f(u) = sum_k coeffs[k] ((u - center)/radius)^k. Exact tail closure.
pub fn apply_gauss_l_poly(
    q: C64,
    w: C64,
    coeffs: &[C64],
    center: C64,
    radius: f64,
    z: C64,
) -> Result<C64> {
    if w.im == 0.0 && w.re >= 1.0 && w.re != 1.0 {
        return Err(Error::ResolventDiverges(format!("{w}")));
    }
    let deg = coeffs.len().saturating_sub(1);
    let m0 = (2 * deg).max(40);
    // direct branches
    let mut acc = C64::new(0.0, 0.0);
    let mut wn = w;
    for n in 1..=m0 {
        let zn = z + n as f64;
        let u = 1.0 / zn;
        // evaluate f(u) by Horner in ((u - center)/radius)
        let t = (u - center) / radius;
        let mut val = C64::new(0.0, 0.0);
        for &c in coeffs.iter().rev() {
            val = val * t + c;
        }
        acc += wn * zn.powc(-2.0 * q) * val;
        wn *= w;
    }
    // tail: expand f(1/(z+n)) in powers of 1/(z+n):
    // ((1/zn - center)/radius)^k = radius^{-k} sum over binomial of
    // (-center)^{k-j} zn^{-j}
    // accumulate per power j the total coefficient, then close with
    // hurwitz/lerch in s = 2q + j
    let mut pow_coeff = vec![C64::new(0.0, 0.0); deg + 1];
    for (k, &c) in coeffs.iter().enumerate() {
        // expand ((u - center)/radius)^k with u = zn^{-1}
        // = radius^{-k} sum_{j=0}^{k} C(k,j) u^j (-center)^{k-j}
        let rk = radius.powi(k as i32);
        let mut binom = 1.0f64;
        for j in 0..=k {
            let term = binom / rk * (-center).powu((k - j) as u32);
            pow_coeff[j] += c * term;
            binom = binom * (k - j) as f64 / (j + 1) as f64;
        }
    }
    let one = C64::new(1.0, 0.0);
    for (j, &pc) in pow_coeff.iter().enumerate() {
        if pc.norm() == 0.0 {
            continue;
        }
        let s = 2.0 * q + j as f64;
        let tail = if w == one {
            hurwitz_zeta_complex(s, z + (m0 as f64 + 1.0))?
        } else {
            lerch_tail(w, s, z, m0)?
        };
        acc += pc * tail;
    }
    Ok(acc)
}

/// L_{q,w} applied to an arbitrary function by direct branch summation with
/// a tail bound; needs Re q > 1/2 at w = 1 (or |w| < 1) for convergence.
pub fn apply_gauss_l<F>(q: C64, w: C64, f: F, z: C64, tol: f64) -> Result<C64>
where
    F: Fn(C64) -> Result<C64>,
{
    if w.im == 0.0 && w.re >= 1.0 && w.re != 1.0 {
        return Err(Error::ResolventDiverges(format!("{w}")));
    }
    let r = w.norm();
    let geometric = r < 0.999;
    if !geometric && q.re <= 0.5 {
        return Err(Error::Convergence {
            what: "gauss branch sum needs Re q > 1/2 at |w| = 1",
            estimate: q.re,
            tolerance: 0.5,
        });
    }
    let mut acc = C64::new(0.0, 0.0);
    let mut wn = w;
    let mut fmax = 0.0f64;
    for n in 1..200_000u64 {
        let zn = z + n as f64;
        let fv = f(1.0 / zn)?;
        fmax = fmax.max(fv.norm());
        let term = wn * zn.powc(-2.0 * q) * fv;
        acc += term;
        wn *= w;
        // tail bound: fmax sum_{m>n} |w|^m |z+m|^{-2 Re q}
        let tail = if geometric {
            fmax * r.powi(n as i32 + 1) / (1.0 - r) * (z.re + n as f64).powf(-2.0 * q.re)
        } else {
            // integral bound for sum m^{-2 xi}
            fmax * (z.re + n as f64).powf(1.0 - 2.0 * q.re) / (2.0 * q.re - 1.0)
        };
        if tail < tol * acc.norm().max(1e-300) {
            return Ok(acc);
        }
    }
    Err(Error::Convergence {
        what: "gauss branch sum",
        estimate: f64::NAN,
        tolerance: tol,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    #[test]
    fn fixed_function_at_q_one() {
        // h(z) = 1/(1+z) satisfies L_1 h = h
        let q = c(1.0, 0.0);
        let h = |z: C64| Ok(1.0 / (1.0 + z));
        for &theta in &[0.3f64, 2.0, 4.4] {
            let z = c(1.0, 0.0) + c(theta.cos(), theta.sin());
            let lhs = apply_gauss_l(q, c(1.0, 0.0), h, z, 1e-13).unwrap();
            let rhs = h(z).unwrap();
            assert!((lhs - rhs).norm() < 1e-12 * rhs.norm(), "theta={theta}");
        }
    }

    #[test]
    fn linearity_and_zero() {
        let q = c(1.2, 0.0);
        let z = c(1.5, 0.3);
        let zero = apply_gauss_l(q, c(1.0, 0.0), |_| Ok(c(0.0, 0.0)), z, 1e-12).unwrap();
        assert_eq!(zero.norm(), 0.0);
        let f1 = |u: C64| Ok(u);
        let f2 = |u: C64| Ok(u * u);
        let a = apply_gauss_l(q, c(1.0, 0.0), f1, z, 1e-13).unwrap();
        let b = apply_gauss_l(q, c(1.0, 0.0), f2, z, 1e-13).unwrap();
        let combo = apply_gauss_l(q, c(1.0, 0.0), |u| Ok(3.0 * u - 2.0 * u * u), z, 1e-13).unwrap();
        assert!((combo - (3.0 * a - 2.0 * b)).norm() < 1e-11 * combo.norm().max(1e-10));
    }

    #[test]
    fn series_vs_hurwitz_closure() {
        // f(z) = (z-1)^2 at q = 1.2: direct summation against the polynomial
        // closure route
        let q = c(1.2, 0.0);
        let z = c(1.4, 0.7);
        let direct = apply_gauss_l(q, c(1.0, 0.0), |u| Ok((u - 1.0) * (u - 1.0)), z, 1e-12)
            .unwrap();
        // coefficients of ((u-1)/1)^2 in basis ((u - 1)/1)^k
        let coeffs = [c(0.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)];
        let closed = apply_gauss_l_poly(q, c(1.0, 0.0), &coeffs, c(1.0, 0.0), 1.0, z).unwrap();
        assert!(
            (direct - closed).norm() < 1e-10 * closed.norm(),
            "{direct} vs {closed}"
        );
    }

    #[test]
    fn weighted_branches_match_resolvent_composition() {
        // L_{q,w} f = sum w^n P_1 P_0^{n-1} f; check n-term assembly against
        // the direct branch formula for small n by applying Farey branches
        let q = c(1.3, 0.0);
        let w = c(0.5, 0.0);
        let f = |u: C64| Ok(u * u + 1.0);
        let z = c(0.6, 0.1);
        let direct = apply_gauss_l(q, w, f, z, 1e-14).unwrap();
        // w P_1 f + w^2 P_1 P_0 f + ... with (P_0^j f)(z) = (jz+1)^{-2q} f(z/(jz+1))
        let mut acc = c(0.0, 0.0);
        let mut wn = w;
        for n in 1..60 {
            let p0nf = |u: C64| -> Result<C64> {
                let j = (n - 1) as f64;
                let d = j * u + 1.0;
                Ok(d.powc(-2.0 * q) * f(u / d)?)
            };
            acc += wn * apply_farey_p(FareyBranch::One, q, p0nf, z).unwrap();
            wn *= w;
        }
        assert!((direct - acc).norm() < 1e-12 * direct.norm(), "{direct} vs {acc}");
    }

    #[test]
    fn resolvent_cut_rejected() {
        let q = c(1.2, 0.0);
        assert!(apply_gauss_l(q, c(1.5, 0.0), |u| Ok(u), c(1.0, 0.5), 1e-10).is_err());
    }
}
