//! The A_k coefficient family and the a_n / b_n series coefficients built
//! from it:
//!
//!   A_0 = zeta(2q-1),  A_1 = (zeta(2q-1) - zeta(2q))/2,
//!   A_k = [zeta(2q-1) + (k-1)/2 + sum_{i=2}^k C(k+1,i) B_i (zeta(2q-1+i)-1)]
//!         / (k+1)  -  zeta(2q)/2,                                   k >= 2,
//!
//!   a_0 = zeta(2q-1),  a_n = (-1)^n Gamma(n+2q)/(n! Gamma(2q)) (zeta(2q)/2 + A_n),
//!   b_n = (-1)^n Gamma(n+2q)/(n! Gamma(2q)) A_n.
//!
//! The bracketed sum cancels catastrophically (terms up to ~(n+1)!/(4 pi)^n
//! against an O(n^2) result), so with the default `dd-coeffs` feature it is
//! accumulated in double-double with double-double zeta values; plain f64
//! starts losing the tables around n = 40.

use crate::coeffs::{CoeffKind, CoeffTable, Provenance};
use crate::error::{Error, Result};
use crate::C64;
use num_complex::Complex64;

fn check_q(q: Complex64) -> Result<()> {
    if q.re <= 0.0 {
        return Err(Error::domain(format!("need Re(q) > 0, got {q}")));
    }
    if q == Complex64::new(1.0, 0.0) || q == Complex64::new(0.5, 0.0) {
        return Err(Error::pole("coefficient family at q", q));
    }
    Ok(())
}

#[cfg(feature = "dd-coeffs")]
mod imp {
    use super::*;
    use crate::dd::{Cdd, Dd};
    use crate::special::bernoulli;
    use crate::special::zeta::{riemann_zeta_dd, zetam1_dd};
    use num_bigint::BigInt;
    use num_traits::{FromPrimitive, ToPrimitive};

    fn bigint_to_dd(b: &BigInt) -> Dd {
        let hi = b.to_f64().unwrap();
        let rem = b - BigInt::from_f64(hi).unwrap();
        Dd::new(hi, rem.to_f64().unwrap())
    }

    pub struct ABundle {
        pub a: Vec<Cdd>,
        pub z2qm1: Cdd,
        pub z2q: Cdd,
    }

    /// A_0..A_{kmax-1} with shared zeta evaluations.
    pub fn capital_a_bundle(q: C64, kmax: usize) -> Result<ABundle> {
        check_q(q)?;
        let qd = Cdd::from_c64(q);
        let two_q = qd.mul_f64(2.0);
        let s_base = two_q.sub(Cdd::ONE); // 2q - 1
        let z2qm1 = riemann_zeta_dd(s_base);
        let z2q = riemann_zeta_dd(two_q);
        let bt = bernoulli::table();
        // zeta(2q-1+i) - 1 for i = 2..kmax
        let mut zm1 = vec![Cdd::ZERO; kmax.max(2)];
        for i in 2..kmax {
            zm1[i] = zetam1_dd(s_base.add(Cdd::from_f64(i as f64)));
        }
        let mut out = Vec::with_capacity(kmax);
        for k in 0..kmax {
            let a = match k {
                0 => z2qm1,
                1 => z2qm1.sub(z2q).mul_f64(0.5),
                _ => {
                    let mut acc = z2qm1.add(Cdd::from_f64((k as f64 - 1.0) / 2.0));
                    // C(k+1, i) running binomial, exact
                    let mut binom = BigInt::from(((k + 1) * k / 2) as u64); // C(k+1,2)
                    for i in 2..=k {
                        if i % 2 == 0 {
                            let w = bt.dd(i).mul(bigint_to_dd(&binom));
                            acc = acc.add(zm1[i].mul_dd(w));
                        }
                        binom = binom * BigInt::from((k - i + 1) as u64)
                            / BigInt::from((i + 1) as u64);
                    }
                    acc.mul_f64(1.0 / (k as f64 + 1.0))
                        .sub(z2q.mul_f64(0.5))
                }
            };
            out.push(a);
        }
        Ok(ABundle {
            a: out,
            z2qm1,
            z2q,
        })
    }
}

#[cfg(not(feature = "dd-coeffs"))]
mod imp {
    use super::*;
    use crate::special::bernoulli;
    use crate::special::zeta::{riemann_zeta, zetam1};

    pub struct ABundle {
        pub a: Vec<C64>,
        pub z2qm1: C64,
        pub z2q: C64,
    }

    /// Plain f64 path with compensated summation; trustworthy to k ~ 40.
    pub fn capital_a_bundle(q: C64, kmax: usize) -> Result<ABundle> {
        check_q(q)?;
        let s_base = 2.0 * q - 1.0;
        let z2qm1 = riemann_zeta(s_base)?;
        let z2q = riemann_zeta(2.0 * q)?;
        let bt = bernoulli::table();
        let mut zm1 = vec![C64::new(0.0, 0.0); kmax.max(2)];
        for i in 2..kmax {
            zm1[i] = zetam1(s_base + i as f64)?;
        }
        let mut out = Vec::with_capacity(kmax);
        for k in 0..kmax {
            let a = match k {
                0 => z2qm1,
                1 => 0.5 * (z2qm1 - z2q),
                _ => {
                    let mut acc = z2qm1 + (k as f64 - 1.0) / 2.0;
                    let mut comp = C64::new(0.0, 0.0);
                    let mut binom = ((k + 1) * k / 2) as f64;
                    for i in 2..=k {
                        if i % 2 == 0 {
                            let term = binom * bt.f64(i) * zm1[i];
                            let y = term - comp;
                            let t = acc + y;
                            comp = (t - acc) - y;
                            acc = t;
                        }
                        binom = binom * (k - i + 1) as f64 / (i + 1) as f64;
                    }
                    acc / (k as f64 + 1.0) - 0.5 * z2q
                }
            };
            out.push(a);
        }
        Ok(ABundle {
            a: out,
            z2qm1,
            z2q,
        })
    }
}

/// A_0..A_{kmax-1} as f64 complex values.
pub fn capital_a_many(q: C64, kmax: usize) -> Result<Vec<C64>> {
    let bundle = imp::capital_a_bundle(q, kmax)?;
    #[cfg(feature = "dd-coeffs")]
    {
        Ok(bundle.a.iter().map(|c| c.to_c64()).collect())
    }
    #[cfg(not(feature = "dd-coeffs"))]
    {
        Ok(bundle.a)
    }
}

/// Single A_{k,q}.
pub fn capital_a(k: usize, q: C64) -> Result<C64> {
    Ok(capital_a_many(q, k + 1)?[k])
}

#[cfg(feature = "dd-coeffs")]
fn series_tables(q: C64, n: usize) -> Result<(Vec<C64>, Vec<C64>)> {
    use crate::dd::Cdd;
    let bundle = imp::capital_a_bundle(q, n)?;
    let qd = Cdd::from_c64(q);
    let half_z2q = bundle.z2q.mul_f64(0.5);
    let mut ratio = Cdd::ONE; // Gamma(k+2q)/(k! Gamma(2q))
    let mut a_out = Vec::with_capacity(n);
    let mut b_out = Vec::with_capacity(n);
    for k in 0..n {
        if k > 0 {
            let num = qd.mul_f64(2.0).add(Cdd::from_f64(k as f64 - 1.0));
            ratio = ratio.mul(num).mul_f64(1.0 / k as f64);
        }
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        let a = if k == 0 {
            bundle.z2qm1
        } else {
            ratio.mul(half_z2q.add(bundle.a[k])).mul_f64(sign)
        };
        let b = ratio.mul(bundle.a[k]).mul_f64(sign);
        a_out.push(a.to_c64());
        b_out.push(b.to_c64());
    }
    Ok((a_out, b_out))
}

#[cfg(not(feature = "dd-coeffs"))]
fn series_tables(q: C64, n: usize) -> Result<(Vec<C64>, Vec<C64>)> {
    let bundle = imp::capital_a_bundle(q, n)?;
    let half_z2q = 0.5 * bundle.z2q;
    let mut ratio = C64::new(1.0, 0.0);
    let mut a_out = Vec::with_capacity(n);
    let mut b_out = Vec::with_capacity(n);
    for k in 0..n {
        if k > 0 {
            ratio = ratio * (2.0 * q + (k as f64 - 1.0)) / k as f64;
        }
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        let a = if k == 0 {
            bundle.z2qm1
        } else {
            sign * ratio * (half_z2q + bundle.a[k])
        };
        a_out.push(a);
        b_out.push(sign * ratio * bundle.a[k]);
    }
    Ok((a_out, b_out))
}

/// a_{n,q} for n < count.
pub fn a_psi_coeffs(q: C64, count: usize) -> Result<CoeffTable> {
    let (a, _) = series_tables(q, count)?;
    Ok(CoeffTable::new(CoeffKind::PsiA, q, 0, a, Provenance::ClosedForm))
}

/// b_{n,q} for n < count.
pub fn b_eis_coeffs(q: C64, count: usize) -> Result<CoeffTable> {
    let (_, b) = series_tables(q, count)?;
    Ok(CoeffTable::new(CoeffKind::EisB, q, 0, b, Provenance::ClosedForm))
}
