//! Truncated Legendre-function series on the imaginary axis.
//!
//! Everything is evaluated in the angle chart y = tan(theta): the paired
//! summand of the even series is
//!   (sin cos)^{1/2} [ cos^{n+q-1/2} P_n(cos) + sin^{n+q-1/2} P_n(sin) ],
//! with P_n = P^{-q+1/2}_{n+q-1/2} by the stable forward recurrence, so the
//! y <-> 1/y swap permutes the two halves of each term exactly. Tail
//! estimates are geometric with ratio max(sin, cos).

use crate::coeffs::CoeffTable;
use crate::error::{Error, Result};
use crate::special::gamma::gamma;
use crate::special::legendre::{legendre_p_sequence, AngleChart};
use crate::special::zeta::riemann_zeta;
use crate::C64;
use num_complex::Complex64;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeriesKind {
    /// u(iy) = w sum (-1)^n a_n [paired term], a_0 = 0 cusp data.
    CuspEven,
    /// u_x(iy) = w [g(y) - y^{-2} g(1/y)] from the odd pipeline.
    CuspOdd,
    /// Full Eisenstein continuation U(iy) including its zeta(2q) terms.
    EisensteinU,
    /// sum Gamma(n+2q)/(n! Gamma(2q)) F_q(n, y), single-sided.
    BoldE,
}

#[derive(Debug, Clone)]
pub struct LegendreSeries {
    pub q: C64,
    pub w: C64,
    pub alpha: CoeffTable,
    pub n_terms: usize,
    pub kind: SeriesKind,
}

#[derive(Debug, Clone, Copy)]
pub struct SeriesValue {
    pub value: C64,
    pub tail_estimate: f64,
}

impl LegendreSeries {
    pub fn new(q: C64, w: C64, alpha: CoeffTable, n_terms: usize, kind: SeriesKind) -> Result<Self> {
        if n_terms > alpha.len() + alpha.start {
            return Err(Error::domain(format!(
                "series wants {} terms, table holds {}",
                n_terms,
                alpha.len()
            )));
        }
        Ok(LegendreSeries {
            q,
            w,
            alpha,
            n_terms,
            kind,
        })
    }
}

/// Paired-term sum sum_{n} (-1)^n alpha_n [cos-side + sin-side] in the chart.
fn paired_sum(
    alpha: &CoeffTable,
    q: C64,
    n_terms: usize,
    ch: AngleChart,
) -> Result<(C64, f64)> {
    let p_sin = legendre_p_sequence(n_terms, q, ch.sin_t)?;
    let p_cos = legendre_p_sequence(n_terms, q, ch.cos_t)?;
    let lead = (ch.sin_t * ch.cos_t).sqrt();
    let base = q - 0.5;
    let mut pow_sin = (base * ch.sin_t.ln()).exp();
    let mut pow_cos = (base * ch.cos_t.ln()).exp();
    let mut acc = C64::new(0.0, 0.0);
    let mut last = 0.0f64;
    for n in 0..n_terms {
        let a = alpha.get(n).unwrap_or(C64::new(0.0, 0.0));
        let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
        let term = sign * a * (pow_cos * p_cos[n] + pow_sin * p_sin[n]);
        acc += term;
        last = term.norm();
        pow_sin *= ch.sin_t;
        pow_cos *= ch.cos_t;
    }
    let ratio = ch.sin_t.max(ch.cos_t);
    let tail = lead * last * ratio / (1.0 - ratio);
    Ok((lead * acc, tail))
}

/// g(y) of the odd pipeline in the chart:
/// sum_{n>=1} (-1)^n (n+2q-1) a_{n-1} sin^{n+q-2} cos^{5/2} P_n(sin).
fn odd_g(alpha: &CoeffTable, q: C64, n_terms: usize, ch: AngleChart) -> Result<C64> {
    let p_sin = legendre_p_sequence(n_terms, q, ch.sin_t)?;
    let mut pow_sin = ((q - 1.0) * ch.sin_t.ln()).exp(); // sin^{n+q-2} at n=1
    let cos_pow = ch.cos_t.powf(2.5);
    let mut acc = C64::new(0.0, 0.0);
    for n in 1..n_terms {
        let a = alpha.get(n - 1).unwrap_or(C64::new(0.0, 0.0));
        let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
        acc += sign * (n as f64 + 2.0 * q - 1.0) * a * pow_sin * cos_pow * p_sin[n];
        pow_sin *= ch.sin_t;
    }
    Ok(acc)
}

/// Evaluate the series at y > 0; returns the value and a geometric tail
/// estimate.
pub fn eval_legendre_series(ls: &LegendreSeries, y: f64) -> Result<SeriesValue> {
    if !(y > 0.0) {
        return Err(Error::domain("series needs y > 0"));
    }
    let ch = AngleChart::new(y);
    match ls.kind {
        SeriesKind::CuspEven => {
            let (s, tail) = paired_sum(&ls.alpha, ls.q, ls.n_terms, ch)?;
            Ok(SeriesValue {
                value: ls.w * s,
                tail_estimate: ls.w.norm() * tail,
            })
        }
        SeriesKind::EisensteinU => {
            let (s, tail) = paired_sum(&ls.alpha, ls.q, ls.n_terms, ch)?;
            let q = ls.q;
            let z2q = riemann_zeta(2.0 * q)?;
            // y^q + y^{-q} and (y/(1+y^2))^q in the chart, so the y <-> 1/y
            // swap is the exact sin <-> cos swap
            let r = (q * (ch.sin_t.ln() - ch.cos_t.ln())).exp();
            let sym = r + 1.0 / r;
            let sc = ((ch.sin_t * ch.cos_t).ln() * q).exp();
            let pref = Complex64::new(2.0, 0.0).powc(q + 0.5) * gamma(q + 0.5)?;
            Ok(SeriesValue {
                value: z2q * sym - 2.0 * z2q * sc + pref * s,
                tail_estimate: pref.norm() * tail,
            })
        }
        SeriesKind::CuspOdd => {
            let g_y = odd_g(&ls.alpha, ls.q, ls.n_terms, ch)?;
            let g_inv = odd_g(&ls.alpha, ls.q, ls.n_terms, ch.swapped())?;
            let y2 = (ch.sin_t / ch.cos_t) * (ch.sin_t / ch.cos_t);
            Ok(SeriesValue {
                value: ls.w * (g_y - g_inv / y2),
                tail_estimate: 0.0,
            })
        }
        SeriesKind::BoldE => {
            let p_sin = legendre_p_sequence(ls.n_terms, ls.q, ch.sin_t)?;
            let mut pow_sin = (ls.q * ch.sin_t.ln()).exp();
            let cos_half = ch.cos_t.sqrt();
            let mut ratio = C64::new(1.0, 0.0); // Gamma(n+2q)/(n! Gamma(2q))
            let mut acc = C64::new(0.0, 0.0);
            let mut last = 0.0;
            for n in 0..ls.n_terms {
                if n > 0 {
                    ratio = ratio * (2.0 * ls.q + (n as f64 - 1.0)) / n as f64;
                }
                let term = ratio * pow_sin * cos_half * p_sin[n];
                acc += term;
                last = term.norm();
                pow_sin *= ch.sin_t;
            }
            Ok(SeriesValue {
                value: acc,
                tail_estimate: last * ch.sin_t / (1.0 - ch.sin_t),
            })
        }
    }
}

/// U(iy) with the b-coefficient table generated on the fly.
pub fn eval_u(q: C64, y: f64, n_terms: usize) -> Result<SeriesValue> {
    let b = crate::coeffs::b_eis_coeffs(q, n_terms)?;
    let ls = LegendreSeries::new(q, C64::new(1.0, 0.0), b, n_terms, SeriesKind::EisensteinU)?;
    eval_legendre_series(&ls, y)
}

/// The single-sided eigen-series with its closed-form coefficients.
pub fn eval_bold_e(q: C64, y: f64, n_terms: usize) -> Result<SeriesValue> {
    let table = CoeffTable::new(
        crate::coeffs::CoeffKind::PsiA,
        q,
        0,
        vec![C64::new(0.0, 0.0); n_terms],
        crate::coeffs::Provenance::ClosedForm,
    );
    let ls = LegendreSeries::new(q, C64::new(1.0, 0.0), table, n_terms, SeriesKind::BoldE)?;
    eval_legendre_series(&ls, y)
}

/// Deviation report for the closed-form guess E_q(y) = (2/pi)^{q-1/2} y^q:
/// max over the grid of |E_q(y) (pi/2)^{q-1/2} y^{-q} - 1| plus the worst
/// truncation tail. Informational only.
pub struct ConjectureReport {
    pub max_deviation: f64,
    pub max_tail: f64,
    pub per_point: Vec<(f64, f64)>,
}

pub fn conjecture_check(q: C64, y_grid: &[f64], n_terms: usize) -> Result<ConjectureReport> {
    let mut max_dev = 0.0f64;
    let mut max_tail = 0.0f64;
    let mut per_point = Vec::with_capacity(y_grid.len());
    for &y in y_grid {
        let v = eval_bold_e(q, y, n_terms)?;
        let scale = (Complex64::new(std::f64::consts::FRAC_PI_2, 0.0).powc(q - 0.5))
            * Complex64::new(y, 0.0).powc(-q);
        let dev = (v.value * scale - 1.0).norm();
        per_point.push((y, dev));
        max_dev = max_dev.max(dev);
        max_tail = max_tail.max(v.tail_estimate);
    }
    Ok(ConjectureReport {
        max_deviation: max_dev,
        max_tail,
        per_point,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffs::{a_psi_coeffs, CoeffKind, Provenance};

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    #[test]
    fn bold_e_q_one_is_linear() {
        // E_1(y) = sqrt(2/pi) y
        for &y in &[0.5f64, 1.0, 2.0] {
            let v = eval_bold_e(c(1.0, 0.0), y, 320).unwrap();
            let expect = (2.0 / std::f64::consts::PI).sqrt() * y;
            assert!(
                (v.value.re - expect).abs() < 1e-10 * expect,
                "y={y}: {} vs {expect}",
                v.value
            );
        }
    }

    #[test]
    fn bold_e_q_half_is_sqrt() {
        for &y in &[0.5f64, 1.0, 2.0] {
            let v = eval_bold_e(c(0.5, 0.0), y, 320).unwrap();
            let expect = y.sqrt();
            assert!(
                (v.value.re - expect).abs() < 1e-10 * expect,
                "y={y}: {} vs {expect}",
                v.value
            );
        }
    }

    #[test]
    fn conjecture_holds_at_closed_forms() {
        let r = conjecture_check(c(1.0, 0.0), &[0.5, 1.0, 2.0], 320).unwrap();
        assert!(r.max_deviation < 1e-10, "{}", r.max_deviation);
        let r = conjecture_check(c(0.5, 0.0), &[0.5, 1.0, 2.0], 320).unwrap();
        assert!(r.max_deviation < 1e-10, "{}", r.max_deviation);
        // generic q: report only, must be finite
        let r = conjecture_check(c(0.8, 0.6), &[0.7, 1.4], 320).unwrap();
        assert!(r.max_deviation.is_finite());
    }

    #[test]
    fn u_structural_symmetry() {
        let q = c(1.5, 0.0);
        let a = eval_u(q, 2.0, 48).unwrap().value;
        let b = eval_u(q, 0.5, 48).unwrap().value;
        assert!(
            (a - b).norm() <= 1e-14 * a.norm(),
            "U(2i) = {a} vs U(i/2) = {b}"
        );
        // generic y within a couple of ulps
        let a = eval_u(q, 3.0, 48).unwrap().value;
        let b = eval_u(q, 1.0 / 3.0, 48).unwrap().value;
        assert!((a - b).norm() <= 1e-12 * a.norm());
    }

    #[test]
    fn cusp_even_pair_symmetry() {
        let q = c(0.5, 4.0);
        let mut vals = vec![C64::new(0.0, 0.0); 24];
        vals[1] = c(1.0, 0.0);
        vals[3] = c(-0.4, 0.2);
        let t = CoeffTable::new(CoeffKind::PsiA, q, 0, vals, Provenance::Oracle);
        let ls = LegendreSeries::new(q, c(1.0, 0.0), t, 24, SeriesKind::CuspEven).unwrap();
        let a = eval_legendre_series(&ls, 2.0).unwrap().value;
        let b = eval_legendre_series(&ls, 0.5).unwrap().value;
        assert!((a - b).norm() <= 1e-14 * a.norm().max(1e-12));
    }

    #[test]
    fn cusp_odd_antisymmetry() {
        let q = c(0.5, 4.0);
        let mut vals = vec![C64::new(0.0, 0.0); 24];
        vals[0] = c(1.0, 0.0);
        vals[2] = c(0.3, -0.1);
        let t = CoeffTable::new(CoeffKind::PsiA, q, 0, vals, Provenance::Oracle);
        let ls = LegendreSeries::new(q, c(1.0, 0.0), t, 24, SeriesKind::CuspOdd).unwrap();
        // u_x(i/y) = -y^2 u_x(iy)
        let y = 2.0f64;
        let a = eval_legendre_series(&ls, y).unwrap().value;
        let b = eval_legendre_series(&ls, 1.0 / y).unwrap().value;
        assert!(
            (b + y * y * a).norm() <= 1e-12 * b.norm().max(1e-12),
            "{b} vs {}",
            -y * y * a
        );
    }

    #[test]
    fn tail_estimate_shrinks_with_n() {
        let q = c(1.5, 0.5);
        for &y in &[0.5f64, 1.0, 2.0] {
            let t32 = eval_u(q, y, 32).unwrap().tail_estimate;
            let t64 = eval_u(q, y, 64).unwrap().tail_estimate;
            assert!(
                t64 < 0.5 * t32,
                "y={y}: tail {t32} -> {t64} did not halve"
            );
        }
    }

    #[test]
    fn table_too_short_is_error() {
        let q = c(1.5, 0.0);
        let a = a_psi_coeffs(q, 8).unwrap();
        assert!(LegendreSeries::new(q, c(1.0, 0.0), a, 16, SeriesKind::CuspEven).is_err());
    }
}
