//! Cusp coefficient files: UTF-8 CSV with header comments
//!
//!   # parity=even
//!   # R=9.53369526135355755
//!   1,1.0
//!   2,-0.7536...
//!
//! Rows are `n,c_n` with n ascending from 1, no gaps. The spectral parameter
//! is q = 1/2 + iR.

use crate::coeffs::{CoeffKind, CoeffTable, Provenance};
use crate::error::{Error, Result};
use crate::C64;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

#[derive(Debug, Clone)]
pub struct CuspData {
    pub parity: Parity,
    pub r: f64,
    pub table: CoeffTable,
}

impl CuspData {
    pub fn q(&self) -> C64 {
        C64::new(0.5, self.r)
    }
}

pub fn parse_cusp_file(text: &str) -> Result<CuspData> {
    let mut parity: Option<Parity> = None;
    let mut r: Option<f64> = None;
    let mut values: Vec<C64> = Vec::new();
    let mut expect_n = 1usize;
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix('#') {
            let rest = rest.trim();
            if let Some(v) = rest.strip_prefix("parity=") {
                parity = Some(match v.trim() {
                    "even" => Parity::Even,
                    "odd" => Parity::Odd,
                    other => {
                        return Err(Error::CoeffFile {
                            line: lineno,
                            msg: format!("unknown parity '{other}'"),
                        })
                    }
                });
            } else if let Some(v) = rest.strip_prefix("R=") {
                r = Some(v.trim().parse::<f64>().map_err(|e| Error::CoeffFile {
                    line: lineno,
                    msg: format!("bad R value: {e}"),
                })?);
            }
            continue;
        }
        let mut parts = line.splitn(2, ',');
        let n_str = parts.next().unwrap_or("");
        let c_str = parts.next().ok_or_else(|| Error::CoeffFile {
            line: lineno,
            msg: "expected 'n,c_n'".into(),
        })?;
        let n: usize = n_str.trim().parse().map_err(|e| Error::CoeffFile {
            line: lineno,
            msg: format!("bad index '{}': {e}", n_str.trim()),
        })?;
        if n != expect_n {
            return Err(Error::CoeffFile {
                line: lineno,
                msg: format!("index {n} out of order (expected {expect_n})"),
            });
        }
        let c: f64 = c_str.trim().parse().map_err(|e| Error::CoeffFile {
            line: lineno,
            msg: format!("bad coefficient '{}': {e}", c_str.trim()),
        })?;
        if !c.is_finite() {
            return Err(Error::CoeffFile {
                line: lineno,
                msg: "non-finite coefficient".into(),
            });
        }
        values.push(C64::new(c, 0.0));
        expect_n += 1;
    }
    let parity = parity.ok_or(Error::CoeffFile {
        line: 0,
        msg: "missing '# parity=' header".into(),
    })?;
    let r = r.ok_or(Error::CoeffFile {
        line: 0,
        msg: "missing '# R=' header".into(),
    })?;
    if values.is_empty() {
        return Err(Error::CoeffFile {
            line: 0,
            msg: "no coefficient rows".into(),
        });
    }
    let q = C64::new(0.5, r);
    Ok(CuspData {
        parity,
        r,
        table: CoeffTable::new(CoeffKind::CuspC, q, 1, values, Provenance::File),
    })
}
