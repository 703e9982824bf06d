//! Integral transforms and the M, N_q operator pair.
//!
//!   M(phi)(t) = e^{-t} phi(t)
//!   N_q(phi)(t) = int_0^inf J_{2q-1}(2 sqrt(st)) (s/t)^{q-1/2} e^{-s} phi(s) ds
//!   H_nu[phi](z) = int_0^inf J_nu(tz) sqrt(tz) phi(t) dt
//!
//! N_q is discretized on a Gauss-Laguerre rule with alpha = 2 Re(q) - 1.
//! The chi_{-1} = 1/t channel (present in the Eisenstein eigenfunction) is
//! never pushed through the quadrature: N_q(1/t)(t) = t^{1-2q} gamma(2q-1, t)
//! in closed form, and the rule only sees the regular remainder.

use crate::error::{Error, Result};
use crate::series::phi::{phi_tilde_direct, PhiFunction, PhiKind};
use crate::special::bessel::bessel_j;
use crate::special::gamma::{gamma, incomplete_gamma_lower};
use crate::special::quadrature::{gauss_legendre_unit, QuadratureRule};
use crate::special::zeta::riemann_zeta;
use crate::C64;
use num_complex::Complex64;

/// Pointwise multiplication by e^{-t} on samples.
pub fn apply_m(nodes: &[f64], samples: &[C64]) -> Vec<C64> {
    nodes
        .iter()
        .zip(samples)
        .map(|(&t, &v)| (-t).exp() * v)
        .collect()
}

/// Dense Nystrom kernel of N_q on a rule's nodes.
pub struct NystromKernel {
    pub q: C64,
    pub nodes: Vec<f64>,
    /// row i, column j: J_{2q-1}(2 sqrt(t_i s_j)) (s_j/t_i)^{q-1/2} w_j s_j^{-alpha}
    pub matrix: Vec<C64>,
}

impl NystromKernel {
    pub fn build(q: C64, rule: &QuadratureRule) -> Result<NystromKernel> {
        if (rule.alpha - (2.0 * q.re - 1.0)).abs() > 1e-9 {
            return Err(Error::domain(format!(
                "N_q rule alpha {} != 2 Re(q)-1 = {}",
                rule.alpha,
                2.0 * q.re - 1.0
            )));
        }
        let n = rule.order();
        let nu = 2.0 * q - 1.0;
        let mu = nu.im.abs();
        let mut matrix = vec![C64::new(0.0, 0.0); n * n];
        // the symmetric argument grid 2 sqrt(t_i s_j) repeats across (i,j)
        // and (j,i); evaluate each distinct Bessel value once
        let mut jcache: Vec<C64> = vec![C64::new(0.0, 0.0); n * n];
        for i in 0..n {
            for j in i..n {
                let x = 2.0 * (rule.nodes[i] * rule.nodes[j]).sqrt();
                // negligible-entry flush: |J| <= e^{pi mu / 2}, the measure
                // weight carries e^{-s_j}
                let bound = std::f64::consts::FRAC_PI_2 * mu
                    - 0.5 * (rule.nodes[i] + rule.nodes[j]);
                let v = if bound < -60.0 {
                    C64::new(0.0, 0.0)
                } else {
                    bessel_j(nu, x)?
                };
                jcache[i * n + j] = v;
                jcache[j * n + i] = v;
            }
        }
        for i in 0..n {
            let ti = rule.nodes[i];
            for j in 0..n {
                let sj = rule.nodes[j];
                let ratio = Complex64::new(sj / ti, 0.0).powc(q - 0.5);
                let bare_w = rule.weights[j] * sj.powf(-rule.alpha);
                matrix[i * n + j] = jcache[i * n + j] * ratio * bare_w;
            }
        }
        Ok(NystromKernel {
            q,
            nodes: rule.nodes.clone(),
            matrix,
        })
    }

    /// N_q applied to samples on the rule nodes.
    pub fn apply(&self, samples: &[C64]) -> Vec<C64> {
        let n = self.nodes.len();
        let mut out = vec![C64::new(0.0, 0.0); n];
        for i in 0..n {
            let mut acc = C64::new(0.0, 0.0);
            for j in 0..n {
                acc += self.matrix[i * n + j] * samples[j];
            }
            out[i] = acc;
        }
        out
    }
}

/// Closed form N_q(chi_{-1})(t) = t^{1-2q} gamma_lower(2q-1, t).
pub fn apply_n_to_pole(q: C64, t: f64) -> Result<C64> {
    let a = 2.0 * q - 1.0;
    Ok(Complex64::new(t, 0.0).powc(-a) * incomplete_gamma_lower(a, t)?)
}

/// Weighted-L2 residual of (M + N_q) phi-tilde = phi-tilde - zeta(2q)/Gamma(2q) e^{-t}
/// on the rule nodes, with the pole channel handled analytically. Returns
/// (residual, norm of phi-tilde) in the L2(t^alpha e^{-t}) norm.
pub fn mn_functional_equation_residual(
    q: C64,
    rule: &QuadratureRule,
    series_len: usize,
) -> Result<(f64, f64)> {
    let b = crate::coeffs::b_eis_coeffs(q, series_len)?;
    let g2q = gamma(2.0 * q)?;
    let pole = b.get(0).unwrap() / g2q;
    let tilde = PhiFunction::new(q, C64::new(1.0, 0.0), PhiKind::EisensteinTilde, b.values.clone());
    let reg = PhiFunction::new(q, C64::new(1.0, 0.0), PhiKind::RegularPart, b.values.clone());
    let eval_tilde = |t: f64| -> Result<C64> {
        if t <= tilde.radius {
            tilde.eval(t)
        } else {
            phi_tilde_direct(q, t)
        }
    };
    let eval_reg = |t: f64| -> Result<C64> {
        if t <= reg.radius {
            reg.eval(t)
        } else {
            Ok(phi_tilde_direct(q, t)? - pole / t)
        }
    };
    let kernel = NystromKernel::build(q, rule)?;
    let reg_samples: Vec<C64> = rule
        .nodes
        .iter()
        .map(|&t| eval_reg(t))
        .collect::<Result<_>>()?;
    let n_reg = kernel.apply(&reg_samples);
    let z2q = riemann_zeta(2.0 * q)?;
    let mut res2 = 0.0f64;
    let mut norm2 = 0.0f64;
    for (i, (&t, &w)) in rule.nodes.iter().zip(&rule.weights).enumerate() {
        let ft = eval_tilde(t)?;
        let lhs = (-t).exp() * ft + n_reg[i] + pole * apply_n_to_pole(q, t)?;
        let rhs = ft - z2q / g2q * (-t).exp();
        res2 += w * (lhs - rhs).norm_sqr();
        norm2 += w * ft.norm_sqr();
    }
    Ok((res2.sqrt(), norm2.sqrt()))
}

/// Symmetric Hankel transform H_nu[f](y) = int_0^inf J_nu(ty) sqrt(ty) f(t) dt
/// by oscillation-aware panels (width pi/y) with 16-point Gauss-Legendre,
/// continuing while the integrand decays; if `algebraic_tail`, the remaining
/// alternating panel sums are accelerated by iterated averaging.
pub struct HankelOptions {
    pub t_max: f64,
    pub algebraic_tail: bool,
}

impl Default for HankelOptions {
    fn default() -> Self {
        HankelOptions {
            t_max: 80.0,
            algebraic_tail: false,
        }
    }
}

pub fn hankel_sym<F>(mut f: F, nu: C64, y: f64, opts: &HankelOptions) -> Result<C64>
where
    F: FnMut(f64) -> Result<C64>,
{
    if !(y > 0.0) {
        return Err(Error::domain("hankel transform needs y > 0"));
    }
    let (xs, ws) = gauss_legendre_unit(16);
    let width = (std::f64::consts::PI / y).min(opts.t_max / 8.0);
    let mut total = C64::new(0.0, 0.0);
    // geometric grading of the first oscillation panel resolves fractional
    // endpoint powers t^{q-1} J_nu(ty) ~ t^{...}
    let mut t0 = 0.0f64;
    let mut head = width * 2f64.powi(-24);
    while head < width {
        let mut panel = C64::new(0.0, 0.0);
        for (&u, &w) in xs.iter().zip(ws.iter()) {
            let t = t0 + (head - t0) * u;
            let x = t * y;
            panel += w * bessel_j(nu, x)? * x.sqrt() * f(t)?;
        }
        total += panel * (head - t0);
        t0 = head;
        head *= 2.0;
    }
    let mut small_run = 0usize;
    let mut scale = 0.0f64;
    while t0 < opts.t_max {
        let t1 = (t0 + width).min(opts.t_max);
        let mut panel = C64::new(0.0, 0.0);
        for (&u, &w) in xs.iter().zip(ws.iter()) {
            let t = t0 + (t1 - t0) * u;
            let x = t * y;
            let j = bessel_j(nu, x)?;
            panel += w * j * x.sqrt() * f(t)?;
        }
        panel *= t1 - t0;
        total += panel;
        scale = scale.max(panel.norm());
        if panel.norm() < 1e-16 * scale.max(1e-300) {
            small_run += 1;
            if small_run >= 3 {
                return Ok(total);
            }
        } else {
            small_run = 0;
        }
        t0 = t1;
    }
    if !opts.algebraic_tail {
        return Ok(total);
    }
    // collect further alternating half-period panels and Euler-accelerate
    let mut panels = Vec::with_capacity(24);
    for _ in 0..24 {
        let t1 = t0 + width;
        let mut panel = C64::new(0.0, 0.0);
        for (&u, &w) in xs.iter().zip(ws.iter()) {
            let t = t0 + (t1 - t0) * u;
            let x = t * y;
            panel += w * bessel_j(nu, x)? * x.sqrt() * f(t)?;
        }
        panels.push(panel * (t1 - t0));
        t0 = t1;
    }
    // partial sums, then iterated averaging
    let mut s: Vec<C64> = Vec::with_capacity(panels.len());
    let mut acc = C64::new(0.0, 0.0);
    for p in &panels {
        acc += p;
        s.push(acc);
    }
    while s.len() > 1 {
        s = s.windows(2).map(|w| 0.5 * (w[0] + w[1])).collect();
    }
    Ok(total + s[0])
}
