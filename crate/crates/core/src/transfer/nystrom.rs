//! Nystrom truncations of M +- N_q on Gauss-Laguerre nodes, eigenvalue
//! probes by shifted inverse iteration, and least-squares extraction of the
//! generalized-period-function power-series coefficients from eigenvector
//! node samples.

use crate::coeffs::{CoeffKind, CoeffTable, Provenance};
use crate::error::{Error, Result};
use crate::series::transforms::NystromKernel;
use crate::special::gamma::gamma;
use crate::special::quadrature::QuadratureRule;
use crate::C64;
use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MnSign {
    Plus,
    Minus,
}

/// Symmetrized Nystrom matrix B = diag(e^{-s_i}) +- J(2 sqrt(s_i s_j)) sqrt(c_i c_j),
/// c_i = w_i s_i^{-alpha}; a similarity transform of M +- N_q on the nodes,
/// so the spectrum is unchanged while the kernel part is complex-symmetric.
pub struct MnMatrix {
    pub sign: MnSign,
    pub q: C64,
    pub nodes: Vec<f64>,
    /// sqrt(c_i) s_i^{q-1/2}: the similarity diagonal mapping raw samples to
    /// the symmetrized coordinates.
    pub scaling: Vec<C64>,
    pub matrix: DMatrix<C64>,
}

/// Build the symmetrized truncation; rule alpha must equal 2 Re(q) - 1.
pub fn build_mn_matrix(sign: MnSign, q: C64, rule: &QuadratureRule) -> Result<MnMatrix> {
    let kernel = NystromKernel::build(q, rule)?;
    let n = rule.order();
    let sgn = match sign {
        MnSign::Plus => 1.0,
        MnSign::Minus => -1.0,
    };
    let c: Vec<f64> = rule
        .nodes
        .iter()
        .zip(&rule.weights)
        .map(|(&s, &w)| w * s.powf(-rule.alpha))
        .collect();
    let mut b = DMatrix::<C64>::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            // kernel.matrix[i,j] = J_ij (s_j/s_i)^{q-1/2} c_j; symmetrize:
            // B_ij = d_i K_ij / d_j with d_i = s_i^{q-1/2} sqrt(c_i)
            let jij = kernel.matrix[i * n + j];
            let sym = jij * (c[i] / c[j]).sqrt()
                * Complex64::new(rule.nodes[i] / rule.nodes[j], 0.0).powc(q - 0.5);
            b[(i, j)] = sym * sgn;
        }
        b[(i, i)] += (-rule.nodes[i]).exp();
    }
    let scaling: Vec<C64> = rule
        .nodes
        .iter()
        .zip(&c)
        .map(|(&s, &ci)| Complex64::new(s, 0.0).powc(q - 0.5) * ci.sqrt())
        .collect();
    Ok(MnMatrix {
        sign,
        q,
        nodes: rule.nodes.clone(),
        scaling,
        matrix: b,
    })
}

impl MnMatrix {
    /// Apply M +- N_q to raw node samples (un-symmetrized coordinates).
    pub fn apply(&self, samples: &[C64]) -> Vec<C64> {
        let n = self.nodes.len();
        let v = DVector::from_iterator(n, samples.iter().zip(&self.scaling).map(|(&s, &d)| d * s));
        let out = &self.matrix * v;
        (0..n).map(|i| out[i] / self.scaling[i]).collect()
    }

    /// Shifted inverse iteration near `shift`; returns (eigenvalue, raw
    /// eigenvector samples). The Rayleigh quotient uses the transpose
    /// bilinear form, matching the complex-symmetric structure.
    pub fn eigen_near(&self, shift: C64, iters: usize) -> Result<(C64, Vec<C64>)> {
        let n = self.nodes.len();
        let shifted = &self.matrix - DMatrix::<C64>::identity(n, n) * shift;
        let lu = shifted.lu();
        let mut v = DVector::from_element(n, C64::new(1.0, 0.0));
        // deterministic seed with some variation
        for i in 0..n {
            v[i] += C64::new(0.0, 0.4) * (i as f64 / n as f64);
        }
        let mut lambda = shift;
        for _ in 0..iters {
            let mut x = lu.solve(&v).ok_or(Error::NoZeroFound(iters))?;
            let norm = x.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt();
            x /= C64::new(norm, 0.0);
            // transpose Rayleigh quotient: (x^T B x)/(x^T x)
            let bx = &self.matrix * &x;
            let num: C64 = x.iter().zip(bx.iter()).map(|(a, b)| a * b).sum();
            let den: C64 = x.iter().map(|a| a * a).sum();
            if den.norm() > 1e-14 {
                lambda = num / den;
            }
            v = x;
        }
        let raw: Vec<C64> = (0..n).map(|i| v[i] / self.scaling[i]).collect();
        Ok((lambda, raw))
    }
}

/// Distance of the spectrum of M +- N_q from the target eigenvalue 1/w.
pub fn mn_eigen_margin(m: &MnMatrix, w: C64) -> Result<f64> {
    let target = 1.0 / w;
    let (lambda, _) = m.eigen_near(target, 40)?;
    Ok((lambda - target).norm())
}

#[derive(Debug, Clone)]
pub struct GpfFit {
    pub table: CoeffTable,
    pub condition: f64,
    pub residual: f64,
}

/// Least-squares fit of eigenvector node samples to the power-series model
///   phi(t) = w e^{-t}/(1 - w e^{-t}) sum_{n=1}^{n_fit} (-1)^n a_n t^n/Gamma(n+2q),
/// weighted by the rule measure, restricted to nodes where the truncated
/// model is trustworthy. Returns a_n normalized to a_1 = 1.
pub fn extract_gpf_coeffs(
    samples: &[C64],
    q: C64,
    w: C64,
    rule: &QuadratureRule,
    n_fit: usize,
) -> Result<GpfFit> {
    if samples.len() != rule.order() {
        return Err(Error::domain("sample count does not match rule order"));
    }
    let n_fit = n_fit.clamp(2, 12);
    let t_cut = 2.0 + 0.45 * n_fit as f64;
    let rows: Vec<usize> = (0..rule.order())
        .filter(|&i| rule.nodes[i] <= t_cut)
        .collect();
    if rows.len() < n_fit + 2 {
        return Err(Error::domain("too few nodes below the model radius"));
    }
    // gamma factors
    let mut g = Vec::with_capacity(n_fit + 1);
    let mut gv = gamma(2.0 * q)?;
    for n in 0..=n_fit {
        if n > 0 {
            gv *= 2.0 * q + (n as f64 - 1.0);
        }
        g.push(gv);
    }
    let mut a_mat = DMatrix::<C64>::zeros(rows.len(), n_fit);
    let mut rhs = DVector::<C64>::zeros(rows.len());
    for (r, &i) in rows.iter().enumerate() {
        let t = rule.nodes[i];
        let sqrt_w = rule.weights[i].sqrt();
        let pref = w / (Complex64::new(t.exp_m1(), 0.0) + (1.0 - w));
        let mut tn = 1.0f64;
        for n in 1..=n_fit {
            tn *= t;
            let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
            a_mat[(r, n - 1)] = sqrt_w * pref * sign * tn / g[n];
        }
        rhs[r] = sqrt_w * samples[i];
    }
    let svd = a_mat.clone().svd(true, true);
    let smax = svd.singular_values.iter().cloned().fold(0.0f64, f64::max);
    let smin = svd
        .singular_values
        .iter()
        .cloned()
        .fold(f64::INFINITY, f64::min);
    let condition = smax / smin.max(1e-300);
    if condition > 1e13 {
        return Err(Error::IllConditionedFit(condition));
    }
    let sol = svd
        .solve(&rhs, 1e-14)
        .map_err(|e| Error::domain(format!("svd solve: {e}")))?;
    let fitted = &a_mat * &sol;
    let res = (&fitted - &rhs).norm() / rhs.norm().max(1e-300);
    let a1 = sol[0];
    if a1.norm() < 1e-200 {
        return Err(Error::IllConditionedFit(f64::INFINITY));
    }
    let mut values = Vec::with_capacity(n_fit + 1);
    values.push(C64::new(0.0, 0.0)); // a_0 = 0 in the cusp case
    for n in 0..n_fit {
        values.push(sol[n] / a1);
    }
    Ok(GpfFit {
        table: CoeffTable::new(CoeffKind::PsiA, q, 0, values, Provenance::Oracle),
        condition,
        residual: res,
    })
}
