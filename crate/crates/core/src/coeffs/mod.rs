//! Coefficient families of the period-function expansions: the A_k power
//! sums hidden in the Eisenstein eigenfunction, the a_n / b_n series
//! coefficients, the eta coefficients of the rational expansion, Dirichlet
//! L-series of cusp-form data, and the power-series plumbing between them.

mod cusp_file;
mod eta;
mod lseries;
mod phi_series;
mod power_sum;
mod zagier;

pub use cusp_file::{parse_cusp_file, CuspData, Parity};
pub use eta::{eta_coeffs, eta_from_bracket, rational_eis_inner, rational_eis_inner_direct};
pub use lseries::{l_series, LSeriesValue};
pub use phi_series::{a_from_phi, a_from_phi_laurent, phi_from_cusp_even, phi_from_cusp_odd};
pub use power_sum::{faulhaber_power_sum, power_sum, vero_defect_bound_holds};
pub use zagier::{a_psi_coeffs, b_eis_coeffs, capital_a, capital_a_many};

use crate::C64;

/// Which family a table holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoeffKind {
    /// A_{k,q}: Taylor/k! coefficients of the Eisenstein eigenfunction core.
    CapitalA,
    /// a_{n,q}: period-function series coefficients (psi side).
    PsiA,
    /// b_{n,q}: Eisenstein series coefficients.
    EisB,
    /// eta_{s,q}: rational-expansion coefficients.
    Eta,
    /// c_{n,q}: cusp-form Fourier coefficients (indexed from 1).
    CuspC,
    /// Bracketed inner coefficients of the rational Eisenstein expansion.
    RationalEis,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    ClosedForm,
    Oracle,
    File,
}

/// An indexed coefficient family at fixed q.
#[derive(Debug, Clone)]
pub struct CoeffTable {
    pub kind: CoeffKind,
    pub q: C64,
    /// First index held (0, or 1 for CuspC).
    pub start: usize,
    pub values: Vec<C64>,
    pub provenance: Provenance,
}

impl CoeffTable {
    pub fn new(kind: CoeffKind, q: C64, start: usize, values: Vec<C64>, provenance: Provenance) -> Self {
        debug_assert!(values.iter().all(|v| v.re.is_finite() && v.im.is_finite()));
        CoeffTable {
            kind,
            q,
            start,
            values,
            provenance,
        }
    }

    /// Coefficient at absolute index n (respecting `start`).
    pub fn get(&self, n: usize) -> Option<C64> {
        n.checked_sub(self.start).and_then(|i| self.values.get(i)).copied()
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}
