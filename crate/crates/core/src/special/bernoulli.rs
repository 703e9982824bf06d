//! Bernoulli numbers, exact and as float mirrors.
//!
//! Convention: B_1 = -1/2, i.e. the generating function is
//! e^{-t}/(1-e^{-t}) = sum_n B_n t^{n-1}/n!. The table is built once from the
//! defining recurrence sum_{k=0}^{m} C(m+1,k) B_k = 0 in exact rational
//! arithmetic and cached.

use crate::dd::Dd;
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use std::sync::OnceLock;

/// Highest index kept in the shared table.
pub const BERNOULLI_MAX: usize = 160;

pub struct BernoulliTable {
    exact: Vec<BigRational>,
    float: Vec<f64>,
    dd: Vec<Dd>,
}

static TABLE: OnceLock<BernoulliTable> = OnceLock::new();

fn build(nmax: usize) -> BernoulliTable {
    let mut exact: Vec<BigRational> = Vec::with_capacity(nmax + 1);
    exact.push(BigRational::from_integer(BigInt::from(1)));
    for m in 1..=nmax {
        // B_m = -1/(m+1) * sum_{k=0}^{m-1} C(m+1,k) B_k
        let mut acc = BigRational::zero();
        let mut binom = BigInt::from(1); // C(m+1, 0)
        for (k, b) in exact.iter().enumerate() {
            if !b.is_zero() {
                acc += BigRational::from_integer(binom.clone()) * b;
            }
            // C(m+1, k+1) = C(m+1, k) * (m+1-k)/(k+1)
            binom = binom * BigInt::from(m + 1 - k) / BigInt::from(k + 1);
        }
        exact.push(-acc / BigRational::from_integer(BigInt::from(m + 1)));
    }
    let float = exact.iter().map(|r| rational_to_f64(r)).collect();
    let dd = exact.iter().map(|r| rational_to_dd(r)).collect();
    BernoulliTable { exact, float, dd }
}

fn rational_to_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Two-step conversion so the low word carries the digits f64 drops.
fn rational_to_dd(r: &BigRational) -> Dd {
    let hi = rational_to_f64(r);
    if !hi.is_finite() {
        return Dd::from_f64(hi);
    }
    let rem = r - BigRational::from_float(hi).expect("finite");
    Dd::new(hi, rational_to_f64(&rem))
}

pub fn table() -> &'static BernoulliTable {
    TABLE.get_or_init(|| build(BERNOULLI_MAX))
}

impl BernoulliTable {
    pub fn exact(&self, n: usize) -> Result<&BigRational> {
        self.exact
            .get(n)
            .ok_or_else(|| Error::domain(format!("Bernoulli index {n} beyond table")))
    }

    pub fn f64(&self, n: usize) -> f64 {
        self.float[n]
    }

    pub fn dd(&self, n: usize) -> Dd {
        self.dd[n]
    }

    pub fn len(&self) -> usize {
        self.exact.len()
    }

    pub fn is_empty(&self) -> bool {
        self.exact.is_empty()
    }
}

/// Exact Bernoulli number B_n (B_1 = -1/2).
pub fn bernoulli(n: usize) -> Result<BigRational> {
    table().exact(n).cloned()
}

/// Float mirror of B_n.
pub fn bernoulli_f64(n: usize) -> Result<f64> {
    if n >= table().len() {
        return Err(Error::domain(format!("Bernoulli index {n} beyond table")));
    }
    Ok(table().f64(n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_traits::Signed;

    fn frac(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn known_values() {
        assert_eq!(bernoulli(0).unwrap(), frac(1, 1));
        assert_eq!(bernoulli(1).unwrap(), frac(-1, 2));
        assert_eq!(bernoulli(2).unwrap(), frac(1, 6));
        assert_eq!(bernoulli(12).unwrap(), frac(-691, 2730));
    }

    #[test]
    fn odd_indices_vanish() {
        for k in 1..40 {
            assert!(bernoulli(2 * k + 1).unwrap().is_zero(), "B_{}", 2 * k + 1);
        }
    }

    /// Generating-function identity e^{-t}/(1-e^{-t}) = sum B_n t^{n-1}/n!
    /// at a few real t, truncated where the tail is negligible.
    #[test]
    fn generating_function() {
        for &t in &[0.25f64, 0.5, 1.0] {
            let mut sum = 0.0;
            let mut tpow = 1.0 / t; // t^{n-1}/n! starting at n=0
            let mut fact = 1.0;
            for n in 0..40 {
                sum += bernoulli_f64(n).unwrap() * tpow / fact;
                tpow *= t;
                fact *= (n + 1) as f64;
            }
            let exact = (-t).exp() / (1.0 - (-t).exp());
            assert!((sum - exact).abs() < 1e-14 * exact.abs(), "t={t}");
        }
    }

    #[test]
    fn out_of_table_is_error() {
        assert!(bernoulli(BERNOULLI_MAX + 1).is_err());
    }

    #[test]
    fn dd_mirror_refines_f64() {
        let t = table();
        // |B_12 - dd| should be far below one ulp of the f64 mirror
        let r = t.exact(12).unwrap();
        let dd = t.dd(12);
        let back = BigRational::from_float(dd.hi).unwrap()
            + BigRational::from_float(dd.lo).unwrap();
        let diff = (r - &back).abs();
        let denom = r.abs();
        assert!(diff / denom < frac(1, 1_000_000_000) * frac(1, 1_000_000_000) * frac(1, 100_000_000));
    }
}
