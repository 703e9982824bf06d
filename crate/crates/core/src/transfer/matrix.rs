//! Taylor-coefficient truncations of the operators by circle sampling.
//!
//! Column m holds the Taylor coefficients (about the basis center, in the
//! scaled monomials ((z - z0)/r)^k) of the operator applied to
//! ((z - z0)/r)^m, extracted by uniform sampling on |z - z0| = r and
//! discrete Fourier inversion. Scaling the basis is a diagonal similarity,
//! so determinants and spectra are unchanged. Centers: 1 for the Gauss
//! operator (disk |z-1| < 3/2), 1/2 for the Farey pair (disk |z-1/2| < 1/2).

use crate::error::{Error, Result};
use crate::transfer::operator::{apply_farey_p, apply_gauss_l_poly, FareyBranch};
use crate::C64;
use rayon::prelude::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OperatorKind {
    GaussL,
    FareyPPlus,
    FareyPMinus,
}

#[derive(Debug, Clone)]
pub struct OperatorMatrix {
    pub kind: OperatorKind,
    pub q: C64,
    pub w: C64,
    pub n: usize,
    pub radius: f64,
    pub center: C64,
    /// dense column-major n x n: entry (k, m) at [m * n + k]
    pub entries: Vec<C64>,
}

impl OperatorMatrix {
    pub fn entry(&self, k: usize, m: usize) -> C64 {
        self.entries[m * self.n + k]
    }

    /// Worst column tail ratio: max over columns of
    /// |c_{n-1}| / max_k |c_k|; close to 1 signals aliasing.
    pub fn tail_ratio(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for m in 0..self.n {
            let col = &self.entries[m * self.n..(m + 1) * self.n];
            let mx = col.iter().map(|c| c.norm()).fold(0.0f64, f64::max);
            if mx > 0.0 {
                let tail = col[self.n - 4..]
                    .iter()
                    .map(|c| c.norm())
                    .fold(0.0f64, f64::max);
                worst = worst.max(tail / mx);
            }
        }
        worst
    }
}

pub fn default_radius(kind: OperatorKind) -> f64 {
    match kind {
        OperatorKind::GaussL => 1.0,
        _ => 0.35,
    }
}

pub fn default_center(kind: OperatorKind) -> C64 {
    match kind {
        OperatorKind::GaussL => C64::new(1.0, 0.0),
        _ => C64::new(0.5, 0.0),
    }
}

/// Build the truncation. Sampling uses 4n points; the per-column Taylor
/// tails are checked against the aliasing threshold.
pub fn build_matrix(
    kind: OperatorKind,
    q: C64,
    w: C64,
    n: usize,
    radius: f64,
) -> Result<OperatorMatrix> {
    if n == 0 || n > 256 {
        return Err(Error::domain(format!("truncation order {n} out of 1..=256")));
    }
    let max_r = match kind {
        OperatorKind::GaussL => 1.5,
        _ => 0.5,
    };
    if !(radius > 0.0 && radius < max_r) {
        return Err(Error::domain(format!(
            "sampling radius {radius} outside (0, {max_r})"
        )));
    }
    let center = default_center(kind);
    let s = 4 * n;
    let thetas: Vec<f64> = (0..s)
        .map(|j| 2.0 * std::f64::consts::PI * j as f64 / s as f64)
        .collect();
    let zs: Vec<C64> = thetas
        .iter()
        .map(|&t| center + radius * C64::new(t.cos(), t.sin()))
        .collect();

    let columns: Result<Vec<Vec<C64>>> = (0..n)
        .into_par_iter()
        .map(|m| -> Result<Vec<C64>> {
            // basis monomial coefficients: e_m = ((z - z0)/r)^m
            let mut coeffs = vec![C64::new(0.0, 0.0); m + 1];
            coeffs[m] = C64::new(1.0, 0.0);
            // operator at the sample points
            let mut g = Vec::with_capacity(s);
            for &z in &zs {
                let v = match kind {
                    OperatorKind::GaussL => {
                        apply_gauss_l_poly(q, w, &coeffs, center, radius, z)?
                    }
                    OperatorKind::FareyPPlus | OperatorKind::FareyPMinus => {
                        let f = |u: C64| -> Result<C64> {
                            let t = (u - center) / radius;
                            let mut val = C64::new(0.0, 0.0);
                            for &c in coeffs.iter().rev() {
                                val = val * t + c;
                            }
                            Ok(val)
                        };
                        let p0 = apply_farey_p(FareyBranch::Zero, q, &f, z)?;
                        let p1 = apply_farey_p(FareyBranch::One, q, &f, z)?;
                        if kind == OperatorKind::FareyPPlus {
                            p0 + p1
                        } else {
                            p0 - p1
                        }
                    }
                };
                g.push(v);
            }
            // Taylor coefficients by discrete Fourier inversion
            let mut col = vec![C64::new(0.0, 0.0); n];
            for (k, slot) in col.iter_mut().enumerate() {
                let mut acc = C64::new(0.0, 0.0);
                for (j, &gv) in g.iter().enumerate() {
                    let phase = -2.0 * std::f64::consts::PI * (j * k % s) as f64 / s as f64;
                    acc += gv * C64::new(phase.cos(), phase.sin());
                }
                *slot = acc / s as f64;
            }
            Ok(col)
        })
        .collect();
    let columns = columns?;
    let mut entries = vec![C64::new(0.0, 0.0); n * n];
    for (m, col) in columns.into_iter().enumerate() {
        entries[m * n..(m + 1) * n].copy_from_slice(&col);
    }
    let mat = OperatorMatrix {
        kind,
        q,
        w,
        n,
        radius,
        center,
        entries,
    };
    if n >= 16 {
        let tr = mat.tail_ratio();
        if tr > 0.9 {
            return Err(Error::Aliasing(tr));
        }
    }
    Ok(mat)
}
