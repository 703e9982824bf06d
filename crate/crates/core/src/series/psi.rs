//! The Eisenstein period function psi^+_q and its Borel-resummed
//! continuation.
//!
//! Direct form (Re q > 1):
//!   psi^+(x) = zeta(2q)/2 (1 + x^{-2q}) + sum_{m>=1} zeta(2q, 1+mx),
//! the inner n-sum closed by the Hurwitz zeta and the outer m-sum
//! accelerated by Euler-Maclaurin with the exact antiderivative
//!   int zeta(s, 1+tx) dt = zeta(s-1, 1+tx)/((s-1)x).
//!
//! Borel form (any Re q > 1/2, q != 1/2, 1):
//!   psi^+(x) = zeta(2q)/2 x^{-2q} + zeta(2q-1) Gamma(2q-1)/(Gamma(2q) x)
//!            + x^{-2q} int_0^inf e^{-t/x} t^{2q-1} phi_reg(t) dt,
//! with the delta atom and the 1/t pole of the integrand handled in closed
//! form and the regular part fed to the supplied Gauss-Laguerre rule.

use crate::coeffs::a_psi_coeffs;
use crate::error::{Error, Result};
use crate::series::phi::{phi_tilde_direct, PhiFunction, PhiKind};
use crate::special::gamma::gamma;
use crate::special::quadrature::QuadratureRule;
use crate::special::zeta::{hurwitz_zeta_complex, riemann_zeta};
use crate::C64;
use num_complex::Complex64;

/// Direct double-sum evaluation, Re q > 1.
pub fn eval_psi_plus(q: C64, x: f64) -> Result<C64> {
    if q.re <= 1.0 {
        return Err(Error::Convergence {
            what: "psi^+ direct sum needs Re q > 1",
            estimate: q.re,
            tolerance: 1.0,
        });
    }
    if !(x > 0.0) {
        return Err(Error::domain("psi^+ needs x > 0"));
    }
    let s = 2.0 * q;
    let mut acc = riemann_zeta(s)? / 2.0 * (1.0 + Complex64::new(x, 0.0).powc(-s));
    let m0 = 48usize;
    for m in 1..m0 {
        acc += hurwitz_zeta_complex(s, Complex64::new(1.0 + m as f64 * x, 0.0))?;
    }
    // Euler-Maclaurin over m >= m0 with analytic derivatives:
    // g(m) = zeta(s, 1+mx), g'(m) = -s x zeta(s+1, 1+mx), ...
    let a = Complex64::new(1.0 + m0 as f64 * x, 0.0);
    let g0 = hurwitz_zeta_complex(s, a)?;
    let g1 = -s * x * hurwitz_zeta_complex(s + 1.0, a)?;
    let g3 = -s * (s + 1.0) * (s + 2.0) * x.powi(3) * hurwitz_zeta_complex(s + 3.0, a)?;
    let integral = hurwitz_zeta_complex(s - 1.0, a)? / ((s - 1.0) * x);
    acc += integral + 0.5 * g0 - g1 / 12.0 + g3 / 720.0;
    Ok(acc)
}

/// Borel-resummed evaluation against a Gauss-Laguerre rule with
/// alpha = 2 Re(q) - 1.
pub fn eval_psi_plus_borel(q: C64, x: f64, rule: &QuadratureRule) -> Result<C64> {
    if !(x > 0.0) {
        return Err(Error::domain("psi^+ needs x > 0"));
    }
    if (rule.alpha - (2.0 * q.re - 1.0)).abs() > 1e-9 {
        return Err(Error::domain(format!(
            "rule alpha {} does not match 2 Re(q) - 1 = {}",
            rule.alpha,
            2.0 * q.re - 1.0
        )));
    }
    let z2q = riemann_zeta(2.0 * q)?;
    let z2qm1 = riemann_zeta(2.0 * q - 1.0)?;
    let g2q = gamma(2.0 * q)?;
    let g2qm1 = gamma(2.0 * q - 1.0)?;
    let pole = z2qm1 / g2q;
    // phi-tilde = pole e^{-t}/t + c2 ((1-e^{-t})/t)^{2q-1} + remainder, with
    // the remainder exponentially localized; the first two have closed-form
    // Borel integrals and the rule only sees the remainder.
    let c2 = g2qm1 * z2qm1 / g2q;
    let xinv = Complex64::new(x, 0.0).powc(-2.0 * q);
    let mut acc = z2q / 2.0 * xinv;
    acc += pole * g2qm1 * xinv * Complex64::new(x / (1.0 + x), 0.0).powc(2.0 * q - 1.0);
    acc += c2 * xinv * binomial_exp_sum(2.0 * q - 1.0, x)?;
    let reg = regular_phi(q)?;
    let softened = |t: f64| -> Result<C64> {
        // w(t) = (1 - e^{-t})/t
        let w = -(-t).exp_m1() / t;
        let wc = Complex64::new(w, 0.0).powc(2.0 * q - 1.0);
        Ok(reg.eval(t)? + pole * w - c2 * wc)
    };
    let two_i_eta = Complex64::new(0.0, 2.0 * q.im);
    let mut quad = C64::new(0.0, 0.0);
    for (&s, &w) in rule.nodes.iter().zip(&rule.weights) {
        let weight_phase = if q.im == 0.0 {
            C64::new(1.0, 0.0)
        } else {
            Complex64::new(s, 0.0).powc(two_i_eta)
        };
        quad += w * weight_phase * softened(x * s)?;
    }
    Ok(acc + quad)
}

/// x^{-2q} int_0^inf e^{-t/x} (1-e^{-t})^a dt expanded binomially:
/// sum_j C(a,j) (-1)^j x/(jx+1), terms ~ j^{-a-2}.
fn binomial_exp_sum(a: C64, x: f64) -> Result<C64> {
    let mut coeff = C64::new(1.0, 0.0); // (-1)^j C(a, j)
    let mut acc = C64::new(0.0, 0.0);
    for j in 0..60_000 {
        let jf = j as f64;
        let term = coeff * x / (jf * x + 1.0);
        acc += term;
        if j > 4 && term.norm() < 1e-13 * acc.norm().max(1e-300) {
            return Ok(acc);
        }
        coeff *= -(a - jf) / (jf + 1.0);
    }
    Err(Error::Convergence {
        what: "binomial exponential sum",
        estimate: coeff.norm(),
        tolerance: 1e-13,
    })
}

/// The psi-side eigenfunction core minus its zeta(2q-1)/(Gamma(2q) t) pole.
/// Its a_n differ from the Eisenstein b_n by the zeta(2q)/2 bracket shift,
/// which turns into the constant zeta(2q)/(2 Gamma(2q)) relative to the
/// Dirichlet form used beyond the series radius.
struct RegularPhi {
    series: PhiFunction,
    q: C64,
    pole: C64,
    shift: C64,
}

impl RegularPhi {
    fn eval(&self, t: f64) -> Result<C64> {
        if t <= self.series.radius {
            self.series.eval(t)
        } else {
            Ok(phi_tilde_direct(self.q, t)? + self.shift - self.pole / t)
        }
    }
}

fn regular_phi(q: C64) -> Result<RegularPhi> {
    let a = a_psi_coeffs(q, 64)?;
    let g2q = gamma(2.0 * q)?;
    let pole = a.get(0).unwrap() / g2q;
    let shift = riemann_zeta(2.0 * q)? / (2.0 * g2q);
    Ok(RegularPhi {
        series: PhiFunction::new(q, C64::new(1.0, 0.0), PhiKind::RegularPart, a.values),
        q,
        pole,
        shift,
    })
}
