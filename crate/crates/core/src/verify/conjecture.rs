//! Table of `|a_{m,n}|` for `t_{ψ,n}` against `|a_{m,1}|`.

use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::series::exact::t_psi;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConjectureRow {
    pub n: usize,
    /// exact `a_{m,n}` for `m = 1..=mMax`
    pub coeffs: Vec<String>,
    pub abs: Vec<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Violation {
    pub n: usize,
    pub m: usize,
    pub a_mn: String,
    pub a_m1: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ConjectureReport {
    pub n_max: usize,
    pub m_max: usize,
    pub rows: Vec<ConjectureRow>,
    pub comparisons: usize,
    pub violations: Vec<Violation>,
}

/// Compares `|a_{m,n}| ≤ |a_{m,1}|` exactly for `n = 2..=n_max`,
/// `m = 1..=m_max`.
pub fn conjecture_check(n_max: usize, m_max: usize) -> Result<ConjectureReport> {
    if n_max < 2 || m_max < 5 {
        return Err(Error::InvalidParams(format!("need nMax >= 2 and mMax >= 5, got {n_max}, {m_max}")));
    }
    let table: Vec<Vec<BigRational>> = (1..=n_max)
        .map(|n| {
            let s = t_psi(n, m_max);
            (1..=m_max).map(|m| s.coeff(m)).collect()
        })
        .collect();
    let mut violations = Vec::new();
    let mut comparisons = 0;
    for (i, row) in table.iter().enumerate().skip(1) {
        for (j, a) in row.iter().enumerate() {
            comparisons += 1;
            if a.abs() > table[0][j].abs() {
                violations.push(Violation {
                    n: i + 1,
                    m: j + 1,
                    a_mn: a.to_string(),
                    a_m1: table[0][j].to_string(),
                });
            }
        }
    }
    let rows = table
        .iter()
        .enumerate()
        .map(|(i, row)| ConjectureRow {
            n: i + 1,
            coeffs: row.iter().map(|a| a.to_string()).collect(),
            abs: row.iter().map(|a| a.abs().to_f64().unwrap_or(f64::NAN)).collect(),
        })
        .collect();
    Ok(ConjectureReport {
        n_max,
        m_max,
        rows,
        comparisons,
        violations,
    })
}
