//! Double-double arithmetic (~31 significant digits).
//!
//! Coefficient formulas of the form sum_i C(n+1,i) B_i (zeta(s+i)-1) cancel
//! catastrophically: the largest term grows roughly like (n+1)!/(4 pi)^n while
//! the sum stays polynomially bounded, so plain f64 runs out of digits near
//! n = 40. The error-free transformations below (Dekker/Knuth, FMA variant)
//! give an unevaluated pair hi + lo that carries the extra digits through the
//! summation. Only the operations the coefficient generators actually need
//! are implemented: +, -, *, /, exp, ln, sin/cos, and a complex layer with
//! k^(-s) for positive real k.

use num_complex::Complex64;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Dd {
    pub hi: f64,
    pub lo: f64,
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    (s, b - (s - a))
}

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, a.mul_add(b, -p))
}

impl Dd {
    pub const ZERO: Dd = Dd { hi: 0.0, lo: 0.0 };
    pub const ONE: Dd = Dd { hi: 1.0, lo: 0.0 };
    /// pi to double-double precision.
    pub const PI: Dd = Dd {
        hi: 3.141592653589793116e0,
        lo: 1.224646799147353207e-16,
    };
    /// ln 2 to double-double precision.
    pub const LN2: Dd = Dd {
        hi: 6.931471805599452862e-1,
        lo: 2.319046813846299558e-17,
    };

    #[inline]
    pub fn from_f64(x: f64) -> Dd {
        Dd { hi: x, lo: 0.0 }
    }

    #[inline]
    pub fn new(hi: f64, lo: f64) -> Dd {
        let (h, l) = quick_two_sum(hi, lo);
        Dd { hi: h, lo: l }
    }

    #[inline]
    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    #[inline]
    pub fn add(self, o: Dd) -> Dd {
        let (s1, s2) = two_sum(self.hi, o.hi);
        let (t1, t2) = two_sum(self.lo, o.lo);
        let (s1, s2) = quick_two_sum(s1, s2 + t1);
        let (h, l) = quick_two_sum(s1, s2 + t2);
        Dd { hi: h, lo: l }
    }

    #[inline]
    pub fn sub(self, o: Dd) -> Dd {
        self.add(o.neg())
    }

    #[inline]
    pub fn neg(self) -> Dd {
        Dd {
            hi: -self.hi,
            lo: -self.lo,
        }
    }

    #[inline]
    pub fn mul(self, o: Dd) -> Dd {
        let (p1, p2) = two_prod(self.hi, o.hi);
        let p2 = p2 + self.hi * o.lo + self.lo * o.hi;
        let (h, l) = quick_two_sum(p1, p2);
        Dd { hi: h, lo: l }
    }

    #[inline]
    pub fn div(self, o: Dd) -> Dd {
        let q1 = self.hi / o.hi;
        let r = self.sub(o.mul_f64(q1));
        let q2 = r.hi / o.hi;
        let r = r.sub(o.mul_f64(q2));
        let q3 = r.hi / o.hi;
        let (h, l) = quick_two_sum(q1, q2);
        Dd { hi: h, lo: l }.add(Dd::from_f64(q3))
    }

    #[inline]
    pub fn mul_f64(self, x: f64) -> Dd {
        let (p1, p2) = two_prod(self.hi, x);
        let (h, l) = quick_two_sum(p1, p2 + self.lo * x);
        Dd { hi: h, lo: l }
    }

    #[inline]
    pub fn recip(self) -> Dd {
        Dd::ONE.div(self)
    }

    pub fn abs(self) -> Dd {
        if self.hi < 0.0 || (self.hi == 0.0 && self.lo < 0.0) {
            self.neg()
        } else {
            self
        }
    }

    /// 2^k scaling, exact.
    fn ldexp(self, k: i32) -> Dd {
        Dd {
            hi: libm_ldexp(self.hi, k),
            lo: libm_ldexp(self.lo, k),
        }
    }

    /// exp(x); |x| up to ~700 as in f64.
    pub fn exp(self) -> Dd {
        if self.hi < -745.0 {
            return Dd::ZERO;
        }
        let m = (self.hi / Dd::LN2.hi).round();
        let r = self.sub(Dd::LN2.mul_f64(m));
        // |r| <= ln2/2; Taylor
        let mut sum = Dd::ONE.add(r);
        let mut term = r;
        for k in 2..40 {
            // divide by the exact integer; a rounded 1/k reciprocal would cap
            // the accuracy near 1e-19
            term = term.mul(r).div(Dd::from_f64(k as f64));
            sum = sum.add(term);
            if term.hi.abs() < 1e-35 * sum.hi.abs() {
                break;
            }
        }
        sum.ldexp(m as i32)
    }

    /// ln(x) for x > 0 via Newton refinement of the f64 logarithm.
    pub fn ln(self) -> Dd {
        debug_assert!(self.hi > 0.0);
        let mut y = Dd::from_f64(self.hi.ln());
        // y <- y + x*exp(-y) - 1, twice
        for _ in 0..2 {
            let e = self.mul(y.neg().exp());
            y = y.add(e).sub(Dd::ONE);
        }
        y
    }

    /// Simultaneous sin and cos with argument reduction modulo pi/2.
    pub fn sincos(self) -> (Dd, Dd) {
        let half_pi = Dd::PI.mul_f64(0.5);
        let m = (self.hi / half_pi.hi).round();
        let r = self.sub(half_pi.mul_f64(m));
        let (s, c) = sincos_taylor(r);
        match (m as i64).rem_euclid(4) {
            0 => (s, c),
            1 => (c, s.neg()),
            2 => (s.neg(), c.neg()),
            _ => (c.neg(), s),
        }
    }

    pub fn sqrt(self) -> Dd {
        debug_assert!(self.hi >= 0.0);
        if self.hi == 0.0 {
            return Dd::ZERO;
        }
        let y0 = self.hi.sqrt();
        let y = Dd::from_f64(y0);
        // one Newton step: y + (x - y^2)/(2y)
        let d = self.sub(y.mul(y));
        y.add(d.div(y.mul_f64(2.0)))
    }

    /// x^n for integer n >= 0 by binary powering.
    pub fn powi(self, n: u32) -> Dd {
        let mut base = self;
        let mut n = n;
        let mut acc = Dd::ONE;
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(base);
            }
            base = base.mul(base);
            n >>= 1;
        }
        acc
    }
}

fn libm_ldexp(x: f64, k: i32) -> f64 {
    // powi on 2.0 is exact for the exponent range we use
    x * (2f64).powi(k)
}

fn sincos_taylor(r: Dd) -> (Dd, Dd) {
    // |r| <= pi/4
    let r2 = r.mul(r);
    let mut s = r;
    let mut term = r;
    let mut k = 1u32;
    loop {
        term = term
            .mul(r2)
            .div(Dd::from_f64(-((2 * k) as f64 * (2 * k + 1) as f64)));
        s = s.add(term);
        k += 1;
        if term.hi.abs() < 1e-35 || k > 20 {
            break;
        }
    }
    let mut c = Dd::ONE;
    let mut term = Dd::ONE;
    let mut k = 1u32;
    loop {
        term = term
            .mul(r2)
            .div(Dd::from_f64(-((2 * k - 1) as f64 * (2 * k) as f64)));
        c = c.add(term);
        k += 1;
        if term.hi.abs() < 1e-35 || k > 20 {
            break;
        }
    }
    (s, c)
}

/// Complex double-double.
#[derive(Debug, Clone, Copy)]
pub struct Cdd {
    pub re: Dd,
    pub im: Dd,
}

impl Cdd {
    pub const ZERO: Cdd = Cdd {
        re: Dd::ZERO,
        im: Dd::ZERO,
    };
    pub const ONE: Cdd = Cdd {
        re: Dd::ONE,
        im: Dd::ZERO,
    };

    pub fn from_c64(z: Complex64) -> Cdd {
        Cdd {
            re: Dd::from_f64(z.re),
            im: Dd::from_f64(z.im),
        }
    }

    pub fn from_f64(x: f64) -> Cdd {
        Cdd {
            re: Dd::from_f64(x),
            im: Dd::ZERO,
        }
    }

    pub fn to_c64(self) -> Complex64 {
        Complex64::new(self.re.to_f64(), self.im.to_f64())
    }

    pub fn add(self, o: Cdd) -> Cdd {
        Cdd {
            re: self.re.add(o.re),
            im: self.im.add(o.im),
        }
    }

    pub fn sub(self, o: Cdd) -> Cdd {
        Cdd {
            re: self.re.sub(o.re),
            im: self.im.sub(o.im),
        }
    }

    pub fn neg(self) -> Cdd {
        Cdd {
            re: self.re.neg(),
            im: self.im.neg(),
        }
    }

    pub fn mul(self, o: Cdd) -> Cdd {
        Cdd {
            re: self.re.mul(o.re).sub(self.im.mul(o.im)),
            im: self.re.mul(o.im).add(self.im.mul(o.re)),
        }
    }

    pub fn mul_dd(self, x: Dd) -> Cdd {
        Cdd {
            re: self.re.mul(x),
            im: self.im.mul(x),
        }
    }

    pub fn mul_f64(self, x: f64) -> Cdd {
        Cdd {
            re: self.re.mul_f64(x),
            im: self.im.mul_f64(x),
        }
    }

    pub fn div(self, o: Cdd) -> Cdd {
        let d = o.re.mul(o.re).add(o.im.mul(o.im));
        let num = self.mul(o.conj());
        Cdd {
            re: num.re.div(d),
            im: num.im.div(d),
        }
    }

    pub fn conj(self) -> Cdd {
        Cdd {
            re: self.re,
            im: self.im.neg(),
        }
    }

    pub fn norm_hi(self) -> f64 {
        self.to_c64().norm()
    }

    /// k^(-s) for positive real k.
    pub fn pow_neg_from_real_base(k: Dd, s: Cdd) -> Cdd {
        let l = k.ln();
        let modulus = s.re.mul(l).neg().exp();
        let (sn, cs) = s.im.mul(l).sincos();
        Cdd {
            re: modulus.mul(cs),
            im: modulus.mul(sn).neg(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol * b.abs().max(1.0)
    }

    #[test]
    fn arithmetic_roundtrip() {
        let a = Dd::from_f64(1.0).div(Dd::from_f64(3.0));
        let b = a.mul_f64(3.0);
        assert!((b.sub(Dd::ONE)).to_f64().abs() < 1e-31);
    }

    #[test]
    fn exp_ln_inverse() {
        for &x in &[0.0317, 1.0, 4.5, 17.3, 120.0] {
            let d = Dd::from_f64(x);
            let r = d.ln().exp();
            assert!(r.sub(d).to_f64().abs() < 1e-29 * x.max(1.0), "x={x}");
            assert!(close(d.exp().to_f64(), x.exp(), 1e-15));
        }
    }

    #[test]
    fn sincos_matches_f64_and_pythagoras() {
        for &x in &[0.3, 2.0, 13.7, 80.0, -45.2] {
            let (s, c) = Dd::from_f64(x).sincos();
            assert!(close(s.to_f64(), x.sin(), 1e-14), "sin {x}");
            assert!(close(c.to_f64(), x.cos(), 1e-14), "cos {x}");
            let one = s.mul(s).add(c.mul(c));
            assert!(one.sub(Dd::ONE).to_f64().abs() < 1e-30);
        }
    }

    #[test]
    fn sqrt_two() {
        let r = Dd::from_f64(2.0).sqrt();
        assert!(r.mul(r).sub(Dd::from_f64(2.0)).to_f64().abs() < 1e-31);
    }

    #[test]
    fn complex_pow_real_base() {
        let s = Cdd::from_c64(Complex64::new(2.5, 1.5));
        let v = Cdd::pow_neg_from_real_base(Dd::from_f64(7.0), s).to_c64();
        let expect = Complex64::new(7.0, 0.0).powc(-Complex64::new(2.5, 1.5));
        assert!((v - expect).norm() < 1e-14 * expect.norm());
    }
}
