//! Gauss quadrature rules.
//!
//! Generalized Gauss-Laguerre (weight t^alpha e^{-t}) via the Golub-Welsch
//! Jacobi-matrix eigendecomposition, with Newton polishing of the nodes on
//! the Laguerre recurrence and weights from the closed form
//! w_i = Gamma(N+alpha+1) x_i / (N! (N+1)^2 L_{N+1}(x_i)^2), evaluated in log
//! space so large N does not overflow. Rules are cached behind a lock and
//! immutable afterwards.

use crate::error::{Error, Result};
use crate::special::gamma;
use nalgebra::{DMatrix, SymmetricEigen};
use num_complex::Complex64;
use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

/// Nodes and weights for the measure t^alpha e^{-t} dt on (0, inf).
#[derive(Debug, Clone)]
pub struct QuadratureRule {
    pub alpha: f64,
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl QuadratureRule {
    pub fn order(&self) -> usize {
        self.nodes.len()
    }

    /// Integrate f against the weight: sum_i w_i f(x_i) ~ int f t^a e^{-t} dt.
    pub fn integrate<F: FnMut(f64) -> Complex64>(&self, mut f: F) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for (&x, &w) in self.nodes.iter().zip(&self.weights) {
            acc += w * f(x);
        }
        acc
    }
}

fn laguerre_value_scaled(n: usize, alpha: f64, x: f64) -> (f64, f64) {
    // returns (mantissa, log-scale) with L_n(x) = mantissa * exp(log_scale)
    let mut lm1 = 1.0f64; // L_0
    let mut l = 1.0 + alpha - x; // L_1
    let mut scale = 0.0f64;
    if n == 0 {
        return (lm1, 0.0);
    }
    for k in 1..n {
        let lp1 = ((2.0 * k as f64 + 1.0 + alpha - x) * l - (k as f64 + alpha) * lm1)
            / (k as f64 + 1.0);
        lm1 = l;
        l = lp1;
        let m = l.abs().max(lm1.abs());
        if m > 1e120 {
            l /= 1e120;
            lm1 /= 1e120;
            scale += 1e120f64.ln();
        } else if m < 1e-120 && m > 0.0 {
            l *= 1e120;
            lm1 *= 1e120;
            scale -= 1e120f64.ln();
        }
    }
    (l, scale)
}

fn laguerre_newton_step(n: usize, alpha: f64, x: f64) -> f64 {
    // L'_n(x) = (n L_n(x) - (n+alpha) L_{n-1}(x)) / x, same scale cancels
    let mut lm1 = 1.0f64;
    let mut l = 1.0 + alpha - x;
    for k in 1..n {
        let lp1 = ((2.0 * k as f64 + 1.0 + alpha - x) * l - (k as f64 + alpha) * lm1)
            / (k as f64 + 1.0);
        lm1 = l;
        l = lp1;
        let m = l.abs().max(lm1.abs());
        if m > 1e120 {
            l /= 1e120;
            lm1 /= 1e120;
        }
    }
    let deriv = (n as f64 * l - (n as f64 + alpha) * lm1) / x;
    l / deriv
}

fn build_laguerre(alpha: f64, n: usize) -> Result<QuadratureRule> {
    if !(alpha > -1.0) {
        return Err(Error::domain(format!("laguerre alpha must be > -1, got {alpha}")));
    }
    if n == 0 || n > 512 {
        return Err(Error::domain(format!("laguerre order {n} out of range 1..=512")));
    }
    // Jacobi matrix: diag 2i+alpha+1, offdiag sqrt(i(i+alpha))
    let mut j = DMatrix::<f64>::zeros(n, n);
    for i in 0..n {
        j[(i, i)] = 2.0 * i as f64 + alpha + 1.0;
        if i > 0 {
            let b = (i as f64 * (i as f64 + alpha)).sqrt();
            j[(i, i - 1)] = b;
            j[(i - 1, i)] = b;
        }
    }
    let eig = SymmetricEigen::new(j);
    let mut nodes: Vec<f64> = eig.eigenvalues.iter().copied().collect();
    nodes.sort_by(|a, b| a.partial_cmp(b).unwrap());

    // Newton polish; the Golub-Welsch eigenvalues are good seeds
    for x in nodes.iter_mut() {
        for _ in 0..3 {
            let step = laguerre_newton_step(n, alpha, *x);
            if !step.is_finite() {
                return Err(Error::Convergence {
                    what: "laguerre root polishing",
                    estimate: f64::NAN,
                    tolerance: 0.0,
                });
            }
            *x -= step;
            if step.abs() < 1e-15 * x.abs() {
                break;
            }
        }
    }
    for w in nodes.windows(2) {
        if w[1] <= w[0] {
            return Err(Error::Convergence {
                what: "laguerre nodes not increasing after polish",
                estimate: w[1] - w[0],
                tolerance: 0.0,
            });
        }
    }

    // log weights: ln Gamma(n+alpha+1) - ln Gamma(n+1) + ln x - 2 ln((n+1) |L_{n+1}(x)|)
    let lg = |v: f64| gamma::log_gamma(Complex64::new(v, 0.0)).map(|c| c.re);
    let lg_top = lg(n as f64 + alpha + 1.0)?;
    let lg_fac = lg(n as f64 + 1.0)?;
    let weights: Vec<f64> = nodes
        .iter()
        .map(|&x| {
            let (m, s) = laguerre_value_scaled(n + 1, alpha, x);
            let ln_l = m.abs().ln() + s;
            let ln_w = lg_top - lg_fac + x.ln() - 2.0 * ((n as f64 + 1.0).ln() + ln_l);
            ln_w.exp()
        })
        .collect();

    let rule = QuadratureRule {
        alpha,
        nodes,
        weights,
    };
    // zeroth moment must reproduce Gamma(alpha+1)
    let total: f64 = rule.weights.iter().sum();
    let expect = gamma::gamma(Complex64::new(alpha + 1.0, 0.0))?.re;
    if (total - expect).abs() > 1e-11 * expect {
        return Err(Error::Convergence {
            what: "laguerre weight normalization",
            estimate: (total - expect).abs() / expect,
            tolerance: 1e-11,
        });
    }
    Ok(rule)
}

type Cache = Mutex<HashMap<(u64, usize), Arc<QuadratureRule>>>;
static CACHE: OnceLock<Cache> = OnceLock::new();

/// Generalized Gauss-Laguerre rule for weight t^alpha e^{-t}, cached.
pub fn gauss_laguerre(alpha: f64, n: usize) -> Result<Arc<QuadratureRule>> {
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let key = (alpha.to_bits(), n);
    if let Some(r) = cache.lock().unwrap().get(&key) {
        return Ok(r.clone());
    }
    let rule = Arc::new(build_laguerre(alpha, n)?);
    cache.lock().unwrap().insert(key, rule.clone());
    Ok(rule)
}

/// Gauss-Legendre nodes/weights on [0, 1]; weights sum to 1.
pub fn gauss_legendre_unit(n: usize) -> (Vec<f64>, Vec<f64>) {
    // Newton on P_n with Chebyshev seeds, standard (-1,1) rule mapped to [0,1]
    let mut xs = Vec::with_capacity(n);
    let mut ws = Vec::with_capacity(n);
    for i in 0..n {
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        loop {
            let (p, dp) = legendre_pair(n, x);
            let dx = p / dp;
            x -= dx;
            if dx.abs() < 1e-15 {
                break;
            }
        }
        let (_, dp) = legendre_pair(n, x);
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        xs.push(0.5 * (1.0 - x)); // reversed so nodes ascend
        ws.push(0.5 * w);
    }
    xs.reverse();
    ws.reverse();
    (xs, ws)
}

fn legendre_pair(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    for k in 1..n {
        let p2 = ((2 * k + 1) as f64 * x * p1 - k as f64 * p0) / (k + 1) as f64;
        p0 = p1;
        p1 = p2;
    }
    let dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, dp)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_one_plain() {
        let r = gauss_laguerre(0.0, 1).unwrap();
        assert!((r.nodes[0] - 1.0).abs() < 1e-14);
        assert!((r.weights[0] - 1.0).abs() < 1e-14);
    }

    #[test]
    fn zeroth_moment_is_gamma() {
        for &(a, n) in &[(0.0, 8usize), (1.5, 20), (2.0, 64), (-0.5, 32), (3.0, 128)] {
            let r = gauss_laguerre(a, n).unwrap();
            let total: f64 = r.weights.iter().sum();
            let expect = gamma::gamma(Complex64::new(a + 1.0, 0.0)).unwrap().re;
            assert!(
                (total - expect).abs() < 1e-12 * expect,
                "alpha={a} n={n}: {total} vs {expect}"
            );
        }
    }

    /// Exactness on monomials up to degree 2N-1 against the closed-form
    /// moment Gamma(alpha+k+1).
    #[test]
    fn monomial_exactness() {
        let alpha = 1.5;
        let n = 20;
        let r = gauss_laguerre(alpha, n).unwrap();
        for k in 0..(2 * n) {
            let quad: f64 = r
                .nodes
                .iter()
                .zip(&r.weights)
                .map(|(&x, &w)| w * x.powi(k as i32))
                .sum();
            let exact = gamma::gamma(Complex64::new(alpha + k as f64 + 1.0, 0.0))
                .unwrap()
                .re;
            assert!(
                (quad - exact).abs() < 1e-11 * exact,
                "k={k}: {quad} vs {exact}"
            );
        }
    }

    #[test]
    fn nodes_strictly_increasing() {
        let r = gauss_laguerre(0.5, 96).unwrap();
        assert!(r.nodes.windows(2).all(|w| w[1] > w[0]));
        assert!(r.weights.iter().all(|&w| w >= 0.0));
    }

    #[test]
    fn legendre_unit_integrates_x2() {
        let (xs, ws) = gauss_legendre_unit(16);
        let v: f64 = xs.iter().zip(&ws).map(|(&x, &w)| w * x * x).sum();
        assert!((v - 1.0 / 3.0).abs() < 1e-14);
        let total: f64 = ws.iter().sum();
        assert!((total - 1.0).abs() < 1e-14);
    }
}
