//! Cusp-form pipelines: Fourier coefficients c_n -> phi power series ->
//! a-table -> Legendre series, with the classical Fourier form as the
//! projective reference (the transform chain fixes normalizations only up
//! to a q-dependent constant).

use crate::coeffs::{
    a_from_phi, phi_from_cusp_even, phi_from_cusp_odd, CoeffTable,
};
use crate::error::Result;
use crate::series::legendre_series::{eval_legendre_series, LegendreSeries, SeriesKind, SeriesValue};
use crate::special::bessel::bessel_k;
use crate::C64;

/// Outcome of a cusp evaluation. The Legendre series is symmetric (even) or
/// antisymmetric (odd) term by term, so its own defect only measures
/// floating-point noise; the Fourier-side defect is the meaningful one --
/// it vanishes exactly when the supplied coefficients belong to a genuine
/// cusp form.
#[derive(Debug, Clone, Copy)]
pub struct CuspValue {
    pub series: SeriesValue,
    pub fourier: C64,
    /// |u(iy) - u(i/y)|/max|u| of the structurally paired series.
    pub symmetry_defect: f64,
    /// Same defect on the Fourier reference; the data-quality indicator.
    pub fourier_symmetry_defect: f64,
}

/// Even pipeline: u(iy) via the composed series, plus the Fourier reference
/// y^{1/2} sum c_n K_{q-1/2}(2 pi n y) at x = 0.
pub fn eval_cusp_u_even(c: &CoeffTable, q: C64, y: f64, n_terms: usize) -> Result<CuspValue> {
    let k_phi = (n_terms / 2 + 2).max(8);
    let phi = phi_from_cusp_even(c, q, k_phi)?;
    let a = a_from_phi(&phi, q)?;
    let n_use = n_terms.min(a.len());
    let ls = LegendreSeries::new(q, C64::new(1.0, 0.0), a, n_use, SeriesKind::CuspEven)?;
    let v = eval_legendre_series(&ls, y)?;
    let v_inv = eval_legendre_series(&ls, 1.0 / y)?;
    let scale = v.value.norm().max(v_inv.value.norm()).max(1e-300);
    let defect = (v.value - v_inv.value).norm() / scale;
    let f = fourier_even(c, q, y)?;
    let f_inv = fourier_even(c, q, 1.0 / y)?;
    let f_scale = f.norm().max(f_inv.norm()).max(1e-300);
    Ok(CuspValue {
        series: v,
        fourier: f,
        symmetry_defect: defect,
        fourier_symmetry_defect: (f - f_inv).norm() / f_scale,
    })
}

/// Odd pipeline: u_x(iy) via the odd-kind series; the reference is the
/// x-derivative of the Fourier expansion at x = 0.
pub fn eval_cusp_ux_odd(c: &CoeffTable, q: C64, y: f64, n_terms: usize) -> Result<CuspValue> {
    let k_phi = (n_terms / 2 + 2).max(8);
    let phi = phi_from_cusp_odd(c, q, k_phi)?;
    let a = a_from_phi(&phi, q)?;
    let n_use = n_terms.min(a.len());
    let ls = LegendreSeries::new(q, C64::new(1.0, 0.0), a, n_use, SeriesKind::CuspOdd)?;
    let v = eval_legendre_series(&ls, y)?;
    // antisymmetry u_x(i/y) = -y^2 u_x(iy) is structural; report the defect
    // anyway as a floating-point sanity number
    let v_inv = eval_legendre_series(&ls, 1.0 / y)?;
    let scale = v.value.norm().max(1e-300);
    let defect = (v_inv.value + y * y * v.value).norm() / (y * y * scale);
    let f = fourier_odd_x(c, q, y)?;
    let f_inv = fourier_odd_x(c, q, 1.0 / y)?;
    let f_scale = f.norm().max(f_inv.norm()).max(1e-300);
    Ok(CuspValue {
        series: v,
        fourier: f,
        symmetry_defect: defect,
        fourier_symmetry_defect: (f_inv + y * y * f).norm() / (y * y * f_scale),
    })
}

/// y^{1/2} sum_n c_n K_{q-1/2}(2 pi n y).
pub fn fourier_even(c: &CoeffTable, q: C64, y: f64) -> Result<C64> {
    let mut acc = C64::new(0.0, 0.0);
    for n in c.start..(c.start + c.len()) {
        let cn = c.get(n).unwrap();
        if cn != C64::new(0.0, 0.0) {
            acc += cn * bessel_k(q - 0.5, 2.0 * std::f64::consts::PI * n as f64 * y)?;
        }
    }
    Ok(y.sqrt() * acc)
}

/// d/dx at 0 of the odd expansion: y^{1/2} sum_n c_n K_{q-1/2}(2 pi n y) 2 pi n.
pub fn fourier_odd_x(c: &CoeffTable, q: C64, y: f64) -> Result<C64> {
    let mut acc = C64::new(0.0, 0.0);
    for n in c.start..(c.start + c.len()) {
        let cn = c.get(n).unwrap();
        if cn != C64::new(0.0, 0.0) {
            let two_pi_n = 2.0 * std::f64::consts::PI * n as f64;
            acc += cn * bessel_k(q - 0.5, two_pi_n * y)? * two_pi_n;
        }
    }
    Ok(y.sqrt() * acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffs::{CoeffKind, Provenance};
    use crate::series::transforms::{hankel_sym, HankelOptions};

    fn c64(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    fn delta_table(q: C64) -> CoeffTable {
        let mut vals = vec![C64::new(0.0, 0.0); 30];
        vals[0] = C64::new(1.0, 0.0);
        CoeffTable::new(CoeffKind::CuspC, q, 1, vals, Provenance::Oracle)
    }

    #[test]
    fn even_toy_symmetry_is_exact_at_binary_y() {
        let q = c64(1.3, 0.0);
        let c = delta_table(q);
        let v = eval_cusp_u_even(&c, q, 2.0, 20).unwrap();
        assert!(v.symmetry_defect < 1e-13, "defect {}", v.symmetry_defect);
    }

    #[test]
    fn odd_toy_antisymmetry_structural() {
        let q = c64(1.3, 0.0);
        let c = delta_table(q);
        let v = eval_cusp_ux_odd(&c, q, 2.0, 20).unwrap();
        assert!(v.symmetry_defect < 1e-12, "defect {}", v.symmetry_defect);
    }

    /// Toy single-term cross-check: the even series equals
    /// [u_0(y) - g(y)] + [u_0(1/y) - g(1/y)] with u_beta and g direct
    /// Hankel quadratures of phi(t) = t/(t^2 + 4 pi^2), Richardson in beta.
    #[test]
    fn even_toy_matches_beta_quadrature() {
        let q = c64(1.3, 0.0);
        let c = delta_table(q);
        let y = 1.15f64;
        let series = eval_cusp_u_even(&c, q, y, 28).unwrap().series.value;

        let phi = |t: f64| t / (t * t + 4.0 * std::f64::consts::PI * std::f64::consts::PI);
        let nu = q - 0.5;
        let opts = HankelOptions {
            t_max: 700.0,
            algebraic_tail: true,
        };
        // u_beta(y) = H[exp(-beta t) t^{q-1} phi](y); beta -> 0 by Richardson
        let u_beta = |beta: f64, yy: f64| {
            hankel_sym(
                |t| Ok((-beta * t).exp() * C64::new(t, 0.0).powc(q - 1.0) * phi(t)),
                nu,
                yy,
                &opts,
            )
            .unwrap()
        };
        let g = |yy: f64| {
            hankel_sym(
                |t| Ok((-t).exp() * C64::new(t, 0.0).powc(q - 1.0) * phi(t)),
                nu,
                yy,
                &HankelOptions::default(),
            )
            .unwrap()
        };
        let richardson = |yy: f64| {
            let b1 = 2e-3;
            let v1 = u_beta(b1, yy);
            let v2 = u_beta(b1 / 2.0, yy);
            2.0 * v2 - v1
        };
        let oracle = richardson(y) + richardson(1.0 / y) - g(y) - g(1.0 / y);
        assert!(
            (series - oracle).norm() < 3e-3 * series.norm().max(1e-6),
            "{series} vs {oracle}"
        );
    }

}
