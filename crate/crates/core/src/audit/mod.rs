//! Invariants, membership in `𝔾`/`𝔾₀`, and per-claim audit records.

mod claims;
mod classify;
mod constants;
mod invariants;

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::error::{GraphError, PolyError};
use crate::flow::FlowEngine;
use crate::graph::{canonical_code, FaceStructure, MultiGraph};
use crate::poly::{root_profile, IntPoly, Interval, RootProfile};

pub use claims::{
    audit_le00, audit_le1, audit_lem30, audit_main_theorems, audit_wakelin, CLAIM_IDS,
};
pub use classify::{classify_g_and_g0, is_exceptional, Classification};
pub use constants::{
    nroot, nroot_formula, xi_cubic, xi_enclosure, xi_lower_bound, XiTable, XiValue, NROOT_TABLE,
};
pub use invariants::{compute_invariants, Invariants};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClaimStatus {
    Pass,
    Fail,
    NotApplicable,
    Inconclusive,
}

impl fmt::Display for ClaimStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ClaimStatus::Pass => "pass",
            ClaimStatus::Fail => "fail",
            ClaimStatus::NotApplicable => "not-applicable",
            ClaimStatus::Inconclusive => "inconclusive",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditRecord {
    pub id: String,
    pub status: ClaimStatus,
    pub detail: String,
}

impl AuditRecord {
    pub fn new(id: &str, status: ClaimStatus, detail: impl Into<String>) -> Self {
        AuditRecord {
            id: id.to_string(),
            status,
            detail: detail.into(),
        }
    }

    pub(crate) fn na(id: &str, detail: impl Into<String>) -> Self {
        Self::new(id, ClaimStatus::NotApplicable, detail)
    }

    pub(crate) fn check(id: &str, ok: bool, detail: impl Into<String>) -> Self {
        let status = if ok {
            ClaimStatus::Pass
        } else {
            ClaimStatus::Fail
        };
        Self::new(id, status, detail)
    }
}

/// Everything the auditor knows about one graph.
pub struct AuditInput<'a> {
    pub graph: &'a MultiGraph,
    pub flow: &'a IntPoly,
    pub profile: Option<&'a RootProfile>,
    pub invariants: &'a Invariants,
    pub class: &'a Classification,
    pub xi: &'a XiTable,
    pub faces: Option<&'a FaceStructure>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphSummary {
    /// Hex of the canonical code.
    pub id: String,
    pub n: usize,
    pub m: usize,
    pub edges: Vec<(usize, usize)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlowSummary {
    pub coeffs: IntPoly,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootSummary {
    pub integer_roots: Vec<RootEntry>,
    pub count_in_1_2: usize,
    pub count_above_2: usize,
    pub real_rooted: bool,
    pub omega: Interval,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootEntry {
    pub value: String,
    pub multiplicity: usize,
}

impl From<&RootProfile> for RootSummary {
    fn from(p: &RootProfile) -> Self {
        RootSummary {
            integer_roots: p
                .integer_roots
                .iter()
                .map(|(v, k)| RootEntry {
                    value: v.to_string(),
                    multiplicity: *k,
                })
                .collect(),
            count_in_1_2: p.count_in_1_2,
            count_above_2: p.count_above_2,
            real_rooted: p.real_rooted,
            omega: p.omega.clone(),
        }
    }
}

/// Per-graph audit result. `roots` is absent when `F = 0`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditReport {
    pub graph: GraphSummary,
    pub invariants: Invariants,
    pub classification: Classification,
    pub flow: FlowSummary,
    pub roots: Option<RootSummary>,
    pub audits: Vec<AuditRecord>,
}

impl AuditReport {
    pub fn failures(&self) -> impl Iterator<Item = &AuditRecord> {
        self.audits.iter().filter(|r| r.status == ClaimStatus::Fail)
    }

    pub fn has_failure(&self) -> bool {
        self.failures().next().is_some()
    }

    pub fn has_inconclusive(&self) -> bool {
        self.audits
            .iter()
            .any(|r| r.status == ClaimStatus::Inconclusive)
    }

    pub fn record(&self, id: &str) -> Option<&AuditRecord> {
        self.audits.iter().find(|r| r.id == id)
    }

    /// Problem 1 candidate: in `𝔾` with a non-integral root.
    pub fn is_problem1_candidate(&self) -> bool {
        self.classification.in_g && !self.classification.integral_roots
    }

    /// Problem 2 candidate: `k >= 3` and at least `nroot(k)` roots in `(1, 2)`.
    pub fn is_problem2_candidate(&self) -> bool {
        let k = self.invariants.k;
        k >= 3
            && self
                .roots
                .as_ref()
                .is_some_and(|r| nroot(k).is_ok_and(|need| r.count_in_1_2 as u64 >= need))
    }

    pub fn to_text(&self) -> String {
        let mut s = format!(
            "graph {} (n={}, m={})\nF = {}\n",
            self.graph.id, self.graph.n, self.graph.m, self.flow.coeffs
        );
        for r in &self.audits {
            s.push_str(&format!("{:<22} {:<15} {}\n", r.id, r.status, r.detail));
        }
        s
    }
}

/// Options for [`audit_graph`].
#[derive(Debug, Clone)]
pub struct AuditConfig {
    /// Width bound for the `ω` and `ξ` enclosures.
    pub tol: BigRational,
    /// Tightening rounds (each divides `tol` by 1000) while any record is inconclusive.
    pub refine_rounds: u32,
    /// `ξ` enclosures at `tol`, computed once.
    pub xi: XiTable,
}

impl AuditConfig {
    pub fn with_tol(tol: BigRational) -> Result<Self, PolyError> {
        if tol <= BigRational::from_integer(BigInt::from(0)) {
            return Err(PolyError::Interval(format!(
                "tolerance must be positive, got {tol}"
            )));
        }
        let xi = XiTable::compute(&tol)?;
        Ok(AuditConfig {
            tol,
            refine_rounds: 4,
            xi,
        })
    }
}

impl Default for AuditConfig {
    fn default() -> Self {
        Self::with_tol(crate::poly::ten_pow_neg(12)).expect("valid default tolerance")
    }
}

#[derive(Debug, thiserror::Error)]
pub enum AuditError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// Run every audit on `g` with a fresh flow engine.
pub fn audit_graph(
    g: &MultiGraph,
    faces: Option<&FaceStructure>,
    cfg: &AuditConfig,
) -> Result<AuditReport, AuditError> {
    audit_graph_with(&mut FlowEngine::new(), g, faces, cfg)
}

/// Run every audit on `g`, reusing `engine`'s memo cache.
pub fn audit_graph_with(
    engine: &mut FlowEngine,
    g: &MultiGraph,
    faces: Option<&FaceStructure>,
    cfg: &AuditConfig,
) -> Result<AuditReport, AuditError> {
    if let Some(fs) = faces {
        fs.validate(g)?;
    }
    let f = engine.flow_poly(g);
    let invariants = Invariants::compute_unchecked(g);
    let mut tol = cfg.tol.clone();
    let mut round = 0;
    loop {
        let prof = if f.is_zero() {
            None
        } else {
            Some(root_profile(&f, &tol)?)
        };
        let class = classify_g_and_g0(g, &f, prof.as_ref());
        let xi = if round == 0 {
            cfg.xi.clone()
        } else {
            XiTable::compute(&tol)?
        };
        let input = AuditInput {
            graph: g,
            flow: &f,
            profile: prof.as_ref(),
            invariants: &invariants,
            class: &class,
            xi: &xi,
            faces,
        };
        let audits = run_claims(&input)?;
        let inconclusive = audits.iter().any(|r| r.status == ClaimStatus::Inconclusive);
        if !inconclusive || round >= cfg.refine_rounds {
            return Ok(AuditReport {
                graph: GraphSummary {
                    id: hex(&canonical_code(g)),
                    n: g.vertex_count(),
                    m: g.edge_count(),
                    edges: g.edges().to_vec(),
                },
                invariants,
                classification: class,
                flow: FlowSummary { coeffs: f },
                roots: prof.as_ref().map(RootSummary::from),
                audits,
            });
        }
        round += 1;
        tol /= BigRational::from_integer(BigInt::from(1000));
    }
}

fn run_claims(a: &AuditInput<'_>) -> Result<Vec<AuditRecord>, GraphError> {
    let mut out = vec![audit_le00(a)];
    out.extend(audit_le1(a));
    out.extend(audit_lem30(a));
    out.extend(audit_main_theorems(a)?);
    out.extend(audit_wakelin(a));
    debug_assert_eq!(out.len(), CLAIM_IDS.len());
    Ok(out)
}

pub(crate) fn hex(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}
