//! Hypergeometric evaluations: the terminating polynomial case that the
//! Ferrers-function formulas need, and the 2F1(b, q; 3/2; z) power series
//! used by the rational expansion of the Eisenstein series.

use crate::error::{Error, Result};
use num_complex::Complex64;

/// Terminating 2F1(-k, b; c; x) = sum_{j<=k} (-1)^j C(k,j) (b)_j/(c)_j x^j,
/// evaluated with compensated summation. Errors if (c)_j hits zero before
/// the polynomial terminates.
pub fn hyp2f1_terminating(k: usize, b: Complex64, c: Complex64, x: f64) -> Result<Complex64> {
    let mut term = Complex64::new(1.0, 0.0);
    let mut sum = term;
    let mut comp = Complex64::new(0.0, 0.0); // Kahan compensation
    for j in 0..k {
        let cj = c + j as f64;
        if cj.norm() == 0.0 {
            return Err(Error::pole("2F1 denominator parameter", cj));
        }
        // term_{j+1} = term_j * (-(k-j)/(j+1)) * (b+j)/(c+j) * x
        term *= -((k - j) as f64 / (j + 1) as f64) * (b + j as f64) / cj * x;
        let y = term - comp;
        let t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    Ok(sum)
}

/// 2F1(b, q; 3/2; z) by its power series, |z| < 1, with a ratio-test tail
/// bound. Relative target 1e-12.
pub fn hyp2f1_series(b: Complex64, q: Complex64, z: f64) -> Result<Complex64> {
    if !(z.abs() < 1.0) {
        return Err(Error::Convergence {
            what: "2F1 series outside |z| < 1",
            estimate: z.abs(),
            tolerance: 1.0,
        });
    }
    let c = Complex64::new(1.5, 0.0);
    let mut term = Complex64::new(1.0, 0.0);
    let mut sum = term;
    for s in 0..100_000 {
        let sf = s as f64;
        term *= (b + sf) * (q + sf) / ((c + sf) * (sf + 1.0)) * z;
        sum += term;
        if s > 2 {
            // tail bound: geometric with the current ratio estimate
            let ratio = ((b + sf + 1.0).norm() * (q + sf + 1.0).norm()
                / ((c + sf + 1.0).norm() * (sf + 2.0)))
                * z.abs();
            if ratio < 1.0 {
                let tail = term.norm() * ratio / (1.0 - ratio);
                if tail < 1e-13 * sum.norm() {
                    return Ok(sum);
                }
            }
        }
    }
    Err(Error::Convergence {
        what: "2F1 series",
        estimate: term.norm(),
        tolerance: 1e-13,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;
    use num_traits::{One, ToPrimitive, Zero};

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn degree_zero_is_one() {
        let v = hyp2f1_terminating(0, c(2.0, 1.0), c(0.5, 0.0), 0.7).unwrap();
        assert!((v - 1.0).norm() < 1e-15);
    }

    #[test]
    fn degree_one_two_terms() {
        let (b, cc, x) = (c(2.0, 0.5), c(1.5, 0.0), 0.3);
        let v = hyp2f1_terminating(1, b, cc, x).unwrap();
        let expect = 1.0 - b / cc * x;
        assert!((v - expect).norm() < 1e-15);
    }

    /// Exact rational-arithmetic oracle at a Gaussian-rational point.
    #[test]
    fn degree_three_rational_oracle() {
        // b = 2 + i, c = 3/2, x = 2/5; compute sum_j (-1)^j C(3,j)(b)_j/(c)_j x^j
        // with exact rationals for re/im separately.
        let b_re = BigRational::new(2.into(), 1.into());
        let b_im = BigRational::one();
        let x = BigRational::new(2.into(), 5.into());
        let mut sum_re = BigRational::zero();
        let mut sum_im = BigRational::zero();
        // running (b)_j as rational complex, (c)_j rational, C(3,j), x^j
        let mut pb_re = BigRational::one();
        let mut pb_im = BigRational::zero();
        let mut pc = BigRational::one();
        let mut xp = BigRational::one();
        let binoms = [1i64, 3, 3, 1];
        for j in 0..=3usize {
            let sign = if j % 2 == 0 { BigRational::one() } else { -BigRational::one() };
            let factor = &sign * BigRational::new(binoms[j].into(), 1.into()) * &xp / &pc;
            sum_re += &factor * &pb_re;
            sum_im += &factor * &pb_im;
            // advance pochhammers
            let jr = BigRational::new((j as i64).into(), 1.into());
            let (nr, ni) = (
                &pb_re * (&b_re + &jr) - &pb_im * &b_im,
                &pb_re * &b_im + &pb_im * (&b_re + &jr),
            );
            pb_re = nr;
            pb_im = ni;
            pc *= BigRational::new(3.into(), 2.into()) + jr;
            xp *= &x;
        }
        let v = hyp2f1_terminating(3, c(2.0, 1.0), c(1.5, 0.0), 0.4).unwrap();
        let expect = c(sum_re.to_f64().unwrap(), sum_im.to_f64().unwrap());
        assert!((v - expect).norm() < 1e-14 * expect.norm(), "{v} vs {expect}");
    }

    #[test]
    fn series_at_zero_is_one() {
        let v = hyp2f1_series(c(1.0, 0.0), c(2.0, 0.3), 0.0).unwrap();
        assert!((v - 1.0).norm() < 1e-15);
    }

    /// 2F1(1,1;3/2;z) = asin(sqrt z)/(sqrt z sqrt(1-z)); brute-force series
    /// oracle at 200 terms confirms both.
    #[test]
    fn series_arcsin_closed_form() {
        let z = 0.25f64;
        let v = hyp2f1_series(c(1.0, 0.0), c(1.0, 0.0), z).unwrap();
        let closed = (z.sqrt()).asin() / (z.sqrt() * (1.0 - z).sqrt());
        assert!((v.re - closed).abs() < 1e-12 * closed, "{v} vs {closed}");
        let mut term = 1.0f64;
        let mut brute = 1.0f64;
        for s in 0..200 {
            let sf = s as f64;
            term *= (1.0 + sf) * (1.0 + sf) / ((1.5 + sf) * (sf + 1.0)) * z;
            brute += term;
        }
        assert!((v.re - brute).abs() < 1e-12 * brute);
    }

    #[test]
    fn series_brute_force_agreement() {
        let (b, q, z) = (c(1.0, 0.0), c(2.0, 0.0), 0.5);
        let v = hyp2f1_series(b, q, z).unwrap();
        let mut term = c(1.0, 0.0);
        let mut brute = term;
        for s in 0..400 {
            let sf = s as f64;
            term *= (b + sf) * (q + sf) / ((c(1.5, 0.0) + sf) * (sf + 1.0)) * z;
            brute += term;
        }
        assert!((v - brute).norm() < 1e-12 * brute.norm());
    }

    #[test]
    fn series_rejects_z_at_one() {
        assert!(hyp2f1_series(c(1.0, 0.0), c(1.0, 0.0), 1.0).is_err());
    }
}
