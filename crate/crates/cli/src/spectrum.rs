//! `permspec spectrum`: eigenvalues with verified multiplicities.

use permspec_core::spectral::{spectrum_report, SpectrumReport};
use permspec_core::StatisticKind;
use serde::Serialize;

use crate::report::Discrepancy;

/// Largest `n` per kind; the four-factor inversion products dominate.
pub fn max_n(kind: StatisticKind) -> usize {
    match kind {
        StatisticKind::InvX | StatisticKind::Inv => 5,
        _ => 6,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Eigenvalue {
    pub value: String,
    pub multiplicity: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpectrumOutput {
    pub kind: String,
    pub n: usize,
    /// Nonzero eigenvalues in the minimal-polynomial order, then `0`.
    pub eigenvalues: Vec<Eigenvalue>,
    pub minimal_polynomial_verified: bool,
    pub multiplicities_verified: bool,
    pub kernel_dimensions: Option<Vec<usize>>,
    pub discrepancies: Vec<Discrepancy>,
}

impl SpectrumOutput {
    pub fn ok(&self) -> bool {
        self.minimal_polynomial_verified && self.multiplicities_verified
    }

    /// `{36: 1, -6: 6, 0: 17}`
    pub fn to_text(&self) -> String {
        let body = self
            .eigenvalues
            .iter()
            .map(|e| match e.multiplicity {
                Some(m) => format!("{}: {m}", e.value),
                None => format!("{}: ?", e.value),
            })
            .collect::<Vec<_>>()
            .join(", ");
        let mut out = format!("{{{body}}}\n");
        for d in &self.discrepancies {
            out.push_str(&format!("note: {} states {}, computed {}\n", d.location, d.paper_says, d.oracle_says));
        }
        if !self.ok() {
            out.push_str("warning: spectrum not verified\n");
        }
        out
    }
}

fn from_report(r: &SpectrumReport) -> SpectrumOutput {
    let ms = r.verified_multiplicities();
    let mut eigenvalues: Vec<(bool, Eigenvalue)> = r
        .eigenvalues
        .iter()
        .enumerate()
        .map(|(k, e)| (e.is_zero(), Eigenvalue { value: e.to_string(), multiplicity: ms.map(|m| m[k]) }))
        .collect();
    eigenvalues.sort_by_key(|(zero, _)| *zero);
    SpectrumOutput {
        kind: r.kind.name().to_string(),
        n: r.n,
        eigenvalues: eigenvalues.into_iter().map(|(_, e)| e).collect(),
        minimal_polynomial_verified: r.minimal_polynomial_verified(),
        multiplicities_verified: ms.is_some(),
        kernel_dimensions: r.kernel_dimensions.clone(),
        discrepancies: r
            .discrepancies
            .iter()
            .map(|d| Discrepancy {
                location: d.location.clone(),
                paper_says: d.paper_says.clone(),
                oracle_says: d.oracle_says.clone(),
            })
            .collect(),
    }
}

pub fn spectrum(kind: StatisticKind, n: usize, seed: u64) -> permspec_core::Result<SpectrumOutput> {
    Ok(from_report(&spectrum_report(kind, n, None, seed)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn des_4() {
        let s = spectrum(StatisticKind::Des, 4, 1).unwrap();
        assert_eq!(s.to_text(), "{36: 1, -6: 6, 0: 17}\n");
    }

    #[test]
    fn maj_3_and_desx_2() {
        assert_eq!(spectrum(StatisticKind::Maj, 3, 1).unwrap().to_text(), "{9: 1, -3: 3, 0: 2}\n");
        assert_eq!(spectrum(StatisticKind::DesX, 2, 1).unwrap().to_text(), "{X[1]: 1, -X[1]: 1}\n");
    }
}
