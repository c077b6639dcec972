//! Machine-readable result records emitted by the CLI. One schema covers
//! every subcommand; unused sections are omitted. Reports are deterministic
//! for identical inputs modulo the version field, and carry a content hash
//! of the input for reproducibility audits.

use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::algebra::{AlgebraElement, LieAlgebra};
use crate::cohomology::{CentralExtension, CohomologyResult};
use crate::dsl::AlgebraDocument;
use crate::fock::{IdentityResidual, RescaleReport};
use crate::rational::format_rat;

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub toolkit_version: String,
    pub command: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub input_fingerprint: Option<String>,
    pub exit_status: i32,
    pub results: ReportResults,
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct ReportResults {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub jacobi: Option<JacobiReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub h2: Option<H2Report>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub extension: Option<ExtensionReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub algebra: Option<AlgebraDocument>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle: Option<OracleReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub fock: Option<FockReport>,
}

#[derive(Debug, Clone, Serialize)]
pub struct JacobiReport {
    pub algebra: String,
    pub dim: usize,
    pub jacobi_ok: bool,
    pub failing_triples: Vec<FailingTriple>,
}

#[derive(Debug, Clone, Serialize)]
pub struct FailingTriple {
    pub triple: [String; 3],
    /// Nonzero residual coefficients as (basis name, rational).
    pub residual: Vec<(String, String)>,
}

#[derive(Debug, Clone, Serialize)]
pub struct H2Report {
    pub algebra: String,
    pub dim: usize,
    pub dim_cocycles: usize,
    pub dim_coboundaries: usize,
    pub dim_h2: usize,
    /// Sparse representatives, `(name_a, name_b, value)`, leading entry 1.
    pub representatives: Vec<Vec<(String, String, String)>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ExtensionReport {
    pub base: String,
    pub extended_dim: usize,
    pub cochains_used: usize,
    pub independent_mod_coboundaries: bool,
    pub jacobi_ok: bool,
    pub failing_triples: Vec<FailingTriple>,
    pub new_generators_central: bool,
    pub extended: AlgebraDocument,
}

#[derive(Debug, Clone, Serialize)]
pub struct OracleReport {
    pub n: usize,
    pub basis: Vec<String>,
    /// `[W_i, W_j] / I` rows: names and rational coefficients.
    pub brackets: Vec<OracleBracket>,
    pub wz_law_verified: bool,
    pub all_commutators_central_linear: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct OracleBracket {
    pub left: String,
    pub right: String,
    pub terms: Vec<(String, String)>,
}

#[derive(Debug, Clone, Serialize)]
pub struct FockReport {
    pub modes: usize,
    pub levels: usize,
    pub lambda: f64,
    pub hilbert_dim: usize,
    /// True when lambda < 0 and the Q/P roles were swapped (zeta -> -zeta).
    pub negative_lambda_quadrature_swap: bool,
    pub checks: Vec<IdentityResidual>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub corner_defect: Option<CornerDefect>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rescale: Option<RescaleReport>,
    pub max_hermiticity_defect: f64,
    pub all_ok: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct CornerDefect {
    pub expected_imag: f64,
    pub observed_imag: f64,
    pub observed_real: f64,
    pub ok: bool,
}

/// SHA-256 hex fingerprint of the input content.
pub fn fingerprint(content: &[u8]) -> String {
    let mut h = Sha256::new();
    h.update(content);
    format!("{:x}", h.finalize())
}

pub fn failing_triples(
    l: &LieAlgebra,
    failures: &[((usize, usize, usize), AlgebraElement)],
) -> Vec<FailingTriple> {
    failures
        .iter()
        .map(|((a, b, c), res)| FailingTriple {
            triple: [
                l.basis_names[*a].clone(),
                l.basis_names[*b].clone(),
                l.basis_names[*c].clone(),
            ],
            residual: res
                .coeffs
                .iter()
                .enumerate()
                .filter(|(_, v)| !num_traits::Zero::is_zero(*v))
                .map(|(i, v)| (l.basis_names[i].clone(), format_rat(v)))
                .collect(),
        })
        .collect()
}

pub fn h2_report(l: &LieAlgebra, h: &CohomologyResult) -> H2Report {
    H2Report {
        algebra: l.name.clone(),
        dim: l.dim,
        dim_cocycles: h.dim_cocycles,
        dim_coboundaries: h.dim_coboundaries,
        dim_h2: h.dim_h2,
        representatives: h
            .representatives
            .iter()
            .map(|r| {
                r.nonzero_pairs()
                    .into_iter()
                    .map(|(a, b, v)| {
                        (
                            l.basis_names[a].clone(),
                            l.basis_names[b].clone(),
                            format_rat(&v),
                        )
                    })
                    .collect()
            })
            .collect(),
    }
}

pub fn extension_report(ext: &CentralExtension, new_generators_central: bool) -> ExtensionReport {
    ExtensionReport {
        base: ext.base.name.clone(),
        extended_dim: ext.extended.dim,
        cochains_used: ext.cochains.len(),
        independent_mod_coboundaries: ext.independent_mod_coboundaries,
        jacobi_ok: ext.jacobi_failures.is_empty(),
        failing_triples: failing_triples(&ext.extended, &ext.jacobi_failures),
        new_generators_central,
        extended: AlgebraDocument::from_algebra(&ext.extended),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fingerprint_is_stable() {
        assert_eq!(fingerprint(b"abc"), fingerprint(b"abc"));
        assert_ne!(fingerprint(b"abc"), fingerprint(b"abd"));
        assert_eq!(fingerprint(b"abc").len(), 64);
    }
}
