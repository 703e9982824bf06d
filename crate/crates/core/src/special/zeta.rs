//! Riemann and Hurwitz zeta by Euler-Maclaurin summation.
//!
//! zeta(s, a) = sum_{k<K} (a+k)^{-s} + (a+K)^{1-s}/(s-1) + (a+K)^{-s}/2
//!            + sum_j B_{2j}/(2j)! (s)_{2j-1} (a+K)^{-s-2j+1}
//!
//! `zetam1` computes zeta(s) - 1 directly from k = 2; the coefficient
//! formulas multiply (zeta(s)-1) by huge Bernoulli-binomial factors, and
//! forming it by subtraction would lose all the digits that matter.
//! Re(s) < 0 goes through the functional equation.

use crate::dd::{Cdd, Dd};
use crate::error::{Error, Result};
use crate::special::bernoulli;
use num_complex::Complex64;

fn em_params(s: Complex64, a_re: f64) -> (usize, usize) {
    let mut k = 20.0 + 1.1 * s.im.abs() + (1.0 - a_re).max(0.0);
    if s.re < 0.0 {
        // the boundary terms grow like (a+K)^{-Re s + 1}; keep K small so
        // their cancellation does not eat the mantissa
        k = (8.0 + 1.15 * s.im.abs()).max(s.norm() / 5.0);
    }
    ((k.ceil() as usize).min(400), 16)
}

/// Hurwitz zeta with complex second argument, Re(a) > 0. This is the form
/// the transfer-operator tail closure needs (a = z + M + 1 with z on a
/// sampling circle).
pub fn hurwitz_zeta_complex(s: Complex64, a: Complex64) -> Result<Complex64> {
    if a.re <= 0.0 {
        return Err(Error::domain(format!("hurwitz zeta needs Re(a) > 0, got {a}")));
    }
    if (s - 1.0).norm() == 0.0 {
        return Err(Error::pole("zeta argument", s));
    }
    let (kk, jj) = em_params(s, a.re);
    let bt = bernoulli::table();
    let mut sum = Complex64::new(0.0, 0.0);
    for k in 0..kk {
        sum += (a + k as f64).powc(-s);
    }
    let ak = a + kk as f64;
    let akms = ak.powc(-s);
    sum += ak * akms / (s - 1.0) + 0.5 * akms;
    // Euler-Maclaurin correction terms
    let mut poch = s; // (s)_{2j-1} running product
    let mut akpow = akms / ak; // ak^{-s-1}
    let ak2 = ak * ak;
    let mut fact = 2.0; // (2j)!
    for j in 1..=jj {
        sum += bt.f64(2 * j) / fact * poch * akpow;
        // advance to j+1: multiply pochhammer by (s+2j-1)(s+2j), factorial by (2j+1)(2j+2)
        poch *= (s + (2 * j - 1) as f64) * (s + (2 * j) as f64);
        akpow /= ak2;
        fact *= (2 * j + 1) as f64 * (2 * j + 2) as f64;
    }
    Ok(sum)
}

/// Hurwitz zeta zeta(s, a) for real a > 0.
pub fn hurwitz_zeta(s: Complex64, a: f64) -> Result<Complex64> {
    if a <= 0.0 {
        return Err(Error::domain(format!("hurwitz zeta needs a > 0, got {a}")));
    }
    hurwitz_zeta_complex(s, Complex64::new(a, 0.0))
}

/// Riemann zeta. Uses the functional equation for Re(s) < -0.5.
pub fn riemann_zeta(s: Complex64) -> Result<Complex64> {
    if (s - 1.0).norm() == 0.0 {
        return Err(Error::pole("zeta argument", s));
    }
    if s.re < -0.5 {
        // zeta(s) = 2^s pi^{s-1} sin(pi s/2) Gamma(1-s) zeta(1-s)
        let pi = std::f64::consts::PI;
        let pref = Complex64::new(2.0, 0.0).powc(s)
            * Complex64::new(pi, 0.0).powc(s - 1.0)
            * (pi * s / 2.0).sin()
            * super::gamma::gamma(1.0 - s)?;
        return Ok(pref * riemann_zeta(1.0 - s)?);
    }
    hurwitz_zeta_complex(s, Complex64::new(1.0, 0.0))
}

/// zeta(s) - 1 computed without cancellation, for Re(s) > 1.
pub fn zetam1(s: Complex64) -> Result<Complex64> {
    if s.re <= 1.0 {
        return Ok(riemann_zeta(s)? - 1.0);
    }
    hurwitz_zeta_complex(s, Complex64::new(2.0, 0.0))
}

// ---------------------------------------------------------------------------
// Double-double layer
// ---------------------------------------------------------------------------

fn pow_int_neg_s_dd(k: usize, s: Cdd) -> Cdd {
    Cdd::pow_neg_from_real_base(Dd::from_f64(k as f64), s)
}

/// zeta(s, m) for integer m >= 1 in double-double precision (m = 1 gives the
/// Riemann zeta, m = 2 gives zeta(s)-1). Requires Re(s) > -2.
pub fn hurwitz_zeta_int_dd(s: Cdd, m: usize) -> Cdd {
    let s64 = s.to_c64();
    let kk = (26.0 + 1.3 * s64.im.abs()).ceil() as usize;
    let jj = 24usize;
    let bt = bernoulli::table();
    let mut sum = Cdd::ZERO;
    for k in m..(m + kk) {
        sum = sum.add(pow_int_neg_s_dd(k, s));
    }
    let akf = (m + kk) as f64;
    let ak = Dd::from_f64(akf);
    let akms = pow_int_neg_s_dd(m + kk, s);
    // ak^{1-s}/(s-1) + ak^{-s}/2
    let sm1 = s.sub(Cdd::ONE);
    sum = sum.add(akms.mul_dd(ak).div(sm1));
    sum = sum.add(akms.mul_f64(0.5));
    let mut poch = s;
    let mut akpow = akms.mul_dd(ak.recip());
    let ak2 = ak.mul(ak);
    let mut fact = Dd::from_f64(2.0);
    for j in 1..=jj {
        let coeff = bt.dd(2 * j).div(fact);
        sum = sum.add(poch.mul(akpow).mul_dd(coeff));
        let f1 = Cdd::from_f64((2 * j - 1) as f64);
        let f2 = Cdd::from_f64((2 * j) as f64);
        poch = poch.mul(s.add(f1)).mul(s.add(f2));
        akpow = akpow.mul_dd(ak2.recip());
        fact = fact.mul_f64((2 * j + 1) as f64 * (2 * j + 2) as f64);
    }
    sum
}

/// Riemann zeta in double-double precision, Re(s) > -2.
pub fn riemann_zeta_dd(s: Cdd) -> Cdd {
    hurwitz_zeta_int_dd(s, 1)
}

/// (zeta(s) - 1) in double-double precision, Re(s) > 1 recommended.
pub fn zetam1_dd(s: Cdd) -> Cdd {
    hurwitz_zeta_int_dd(s, 2)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zeta_two_is_pi2_over_6() {
        let z = riemann_zeta(Complex64::new(2.0, 0.0)).unwrap();
        let expect = std::f64::consts::PI.powi(2) / 6.0;
        assert!((z.re - expect).abs() < 1e-14 * expect && z.im.abs() < 1e-14);
    }

    #[test]
    fn zeta_zero_is_minus_half() {
        let z = riemann_zeta(Complex64::new(0.0, 0.0)).unwrap();
        assert!((z.re + 0.5).abs() < 1e-13);
    }

    /// Direct-sum oracle with integral tail bound for zeta(3).
    #[test]
    fn zeta_three_direct_sum() {
        let mut oracle = 0.0f64;
        let n_cut = 2_000_000u64;
        for k in (1..n_cut).rev() {
            oracle += 1.0 / (k as f64).powi(3);
        }
        // tail: integral n^{-3} from n_cut plus midpoint correction
        oracle += 0.5 / (n_cut as f64).powi(2) + 0.5 / (n_cut as f64).powi(3);
        let z = riemann_zeta(Complex64::new(3.0, 0.0)).unwrap();
        assert!((z.re - 1.2020569031595943).abs() < 1e-14);
        assert!((z.re - oracle).abs() < 1e-12, "oracle {oracle}");
    }

    #[test]
    fn pole_rejected() {
        assert!(riemann_zeta(Complex64::new(1.0, 0.0)).is_err());
        assert!(hurwitz_zeta(Complex64::new(1.0, 0.0), 2.0).is_err());
    }

    #[test]
    fn hurwitz_reduces_to_riemann() {
        for &s in &[Complex64::new(2.0, 3.0), Complex64::new(0.3, -7.0)] {
            let h = hurwitz_zeta(s, 1.0).unwrap();
            let r = riemann_zeta(s).unwrap();
            assert!((h - r).norm() < 1e-13 * r.norm().max(1.0));
        }
    }

    #[test]
    fn hurwitz_half_identity() {
        // zeta(2, 1/2) = pi^2/2
        let h = hurwitz_zeta(Complex64::new(2.0, 0.0), 0.5).unwrap();
        let expect = std::f64::consts::PI.powi(2) / 2.0;
        assert!((h.re - expect).abs() < 1e-13 * expect);
    }

    #[test]
    fn shift_identity_complex() {
        // zeta(s,a) = a^{-s} + zeta(s,a+1), s complex, includes 2+3i / a=2 case
        for &(s, a) in &[
            (Complex64::new(2.0, 3.0), 2.0),
            (Complex64::new(1.7, -11.0), 0.25),
            (Complex64::new(-0.8, 4.0), 1.5),
        ] {
            let lhs = hurwitz_zeta(s, a).unwrap();
            let rhs = Complex64::new(a, 0.0).powc(-s) + hurwitz_zeta(s, a + 1.0).unwrap();
            assert!((lhs - rhs).norm() < 1e-12 * lhs.norm().max(1.0), "s={s} a={a}");
        }
    }

    #[test]
    fn trivial_zeros_and_bernoulli_link() {
        for k in 1..=10 {
            let z = riemann_zeta(Complex64::new(-2.0 * k as f64, 0.0)).unwrap();
            assert!(z.norm() < 1e-12, "zeta(-2k) k={k}: {z}");
            let z = riemann_zeta(Complex64::new(1.0 - 2.0 * k as f64, 0.0)).unwrap();
            let b = bernoulli::bernoulli_f64(2 * k).unwrap();
            let expect = -b / (2.0 * k as f64);
            assert!((z.re - expect).abs() < 1e-11 * expect.abs(), "k={k}");
        }
    }

    #[test]
    fn zetam1_avoids_cancellation() {
        // at large Re(s) the difference form has no digits left; the direct
        // form must match the leading 2^{-s} behaviour
        let s = Complex64::new(60.0, 0.0);
        let z = zetam1(s).unwrap();
        let expect = 2f64.powf(-60.0) * (1.0 + 2f64.powf(-60.0 * 0.585)); // + 3^{-60} etc
        assert!((z.re - expect).abs() < 1e-3 * expect, "{z} vs {expect}");
        assert!((z.re - 2f64.powf(-60.0)).abs() < 1e-8 * z.re.abs());
    }

    #[test]
    fn dd_matches_f64() {
        for &s in &[
            Complex64::new(2.0, 0.0),
            Complex64::new(3.0, -4.0),
            Complex64::new(1.5, 19.0),
            Complex64::new(0.0, 19.07),
        ] {
            let d = riemann_zeta_dd(Cdd::from_c64(s)).to_c64();
            let f = riemann_zeta(s).unwrap();
            assert!((d - f).norm() < 1e-12 * f.norm(), "s={s}: {d} vs {f}");
        }
    }

    #[test]
    fn dd_internal_consistency() {
        // pi^2/6 in double-double
        let z = riemann_zeta_dd(Cdd::from_f64(2.0));
        let pi = Dd::PI;
        let expect = pi.mul(pi).div(Dd::from_f64(6.0));
        let diff = z.re.sub(expect).to_f64().abs();
        assert!(diff < 1e-26, "dd zeta(2) error {diff:.3e}");
        assert!(z.im.to_f64().abs() < 1e-28);
    }

    #[test]
    fn dd_zetam1_shift() {
        // zetam1(s) = zeta(s) - 1 in dd, checked without forming the difference in f64
        let s = Cdd::from_c64(Complex64::new(7.0, 2.0));
        let a = zetam1_dd(s);
        let b = riemann_zeta_dd(s).sub(Cdd::ONE);
        let d = a.sub(b).norm_hi();
        assert!(d < 1e-26 * a.norm_hi().max(1e-30), "diff {d:.3e}");
    }
}
