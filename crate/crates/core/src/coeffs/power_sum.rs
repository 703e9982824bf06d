//! Exact power sums S_k(n) = sum_{j=1}^n j^k and the Faulhaber closed form
//! S_k(n) = n^{k+1}/(k+1) + n^k/2 + 1/(k+1) sum_{i=2}^k C(k+1,i) B_i n^{k+1-i},
//! written with the explicit +n^k/2 term so only even Bernoulli numbers
//! enter and no B_1 sign convention can leak in.

use crate::error::{Error, Result};
use crate::special::bernoulli;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact sum of j^k for j = 1..=n.
pub fn power_sum(k: u32, n: u64) -> Result<BigInt> {
    if k > 40 {
        return Err(Error::domain(format!("power_sum exponent {k} > 40")));
    }
    if n > 1_000_000 {
        return Err(Error::domain(format!("power_sum upper limit {n} > 1e6")));
    }
    let mut acc = BigInt::zero();
    for j in 1..=n {
        acc += BigInt::from(j).pow(k);
    }
    Ok(acc)
}

/// Faulhaber closed form, exact rational.
pub fn faulhaber_power_sum(k: u32, n: u64) -> Result<BigRational> {
    let nb = BigRational::from_integer(BigInt::from(n));
    let kp1 = BigRational::from_integer(BigInt::from(k + 1));
    let mut acc = nb.pow(k as i32 + 1) / &kp1;
    if k >= 1 {
        acc += nb.pow(k as i32) / BigRational::from_integer(BigInt::from(2));
    }
    if k >= 2 {
        let mut binom = BigInt::from((k + 1) as u64) * BigInt::from(k as u64) / BigInt::from(2u64); // C(k+1,2)
        for i in 2..=k {
            let b = bernoulli::bernoulli(i as usize)?;
            if !b.is_zero() {
                acc += BigRational::from_integer(binom.clone()) * b * nb.pow((k + 1 - i) as i32)
                    / &kp1;
            }
            // C(k+1, i+1) = C(k+1, i) (k+1-i)/(i+1)
            binom = binom * BigInt::from((k - i + 1) as u64) / BigInt::from((i + 1) as u64);
        }
    }
    Ok(acc)
}

/// Checks |S_k(n) - n^{k+1}/(k+1) - n^k/2| <= k^2 n^{k-1} in exact
/// arithmetic. Returns the defect and the bound comparison.
pub fn vero_defect_bound_holds(k: u32, n: u64) -> Result<bool> {
    if k < 1 {
        return Err(Error::domain("bound needs k >= 1"));
    }
    let s = BigRational::from_integer(power_sum(k, n)?);
    let nb = BigRational::from_integer(BigInt::from(n));
    let main = nb.pow(k as i32 + 1) / BigRational::from_integer(BigInt::from(k + 1))
        + nb.pow(k as i32) / BigRational::from_integer(BigInt::from(2));
    let defect = (s - main).abs();
    let bound = BigRational::from_integer(BigInt::from(k) * BigInt::from(k))
        * if k >= 1 { nb.pow(k as i32 - 1) } else { BigRational::one() };
    Ok(defect <= bound)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases() {
        assert_eq!(power_sum(2, 3).unwrap(), BigInt::from(14));
        // S_1(n) = n(n+1)/2
        for n in [1u64, 7, 100] {
            assert_eq!(power_sum(1, n).unwrap(), BigInt::from(n * (n + 1) / 2));
        }
    }

    #[test]
    fn direct_equals_faulhaber() {
        for &(k, n) in &[(5u32, 100u64), (11, 37), (20, 250), (3, 1)] {
            let direct = BigRational::from_integer(power_sum(k, n).unwrap());
            let closed = faulhaber_power_sum(k, n).unwrap();
            assert_eq!(direct, closed, "k={k} n={n}");
        }
    }

    #[test]
    fn defect_bound_spot_checks() {
        for &(k, n) in &[(1u32, 1u64), (2, 5), (7, 133), (20, 1999)] {
            assert!(vero_defect_bound_holds(k, n).unwrap(), "k={k} n={n}");
        }
    }

    #[test]
    fn domain_limits() {
        assert!(power_sum(41, 10).is_err());
        assert!(power_sum(3, 1_000_001).is_err());
    }
}
