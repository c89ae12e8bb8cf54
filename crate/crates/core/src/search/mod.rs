//! Exhaustive search over small connected multigraphs.

mod enumerate;

use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::audit::{audit_graph_with, AuditConfig, AuditReport};
use crate::error::WorkError;
use crate::flow::FlowEngine;
use crate::graph::{bridges, is_3_edge_connected, MultiGraph};

pub use enumerate::{enumerate_connected, estimate_work, EnumBounds};

/// Default ceiling for [`estimate_work`].
pub const DEFAULT_WORK_CAP: f64 = 1e8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Filter {
    Bridgeless,
    ThreeEdgeConnected,
    #[serde(rename = "in-G")]
    InG,
    #[serde(rename = "in-G0")]
    InG0,
    NonintegralRoots,
}

impl Filter {
    pub const ALL: [Filter; 5] = [
        Filter::Bridgeless,
        Filter::ThreeEdgeConnected,
        Filter::InG,
        Filter::InG0,
        Filter::NonintegralRoots,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Filter::Bridgeless => "bridgeless",
            Filter::ThreeEdgeConnected => "three-edge-connected",
            Filter::InG => "in-G",
            Filter::InG0 => "in-G0",
            Filter::NonintegralRoots => "nonintegral-roots",
        }
    }

    /// Whether the filter can be decided without the flow polynomial.
    fn structural(self) -> bool {
        matches!(self, Filter::Bridgeless | Filter::ThreeEdgeConnected)
    }

    fn keeps_structurally(self, g: &MultiGraph) -> bool {
        match self {
            Filter::Bridgeless => bridges(g).is_empty(),
            Filter::ThreeEdgeConnected => is_3_edge_connected(g),
            _ => unreachable!(),
        }
    }

    fn keeps_report(self, r: &AuditReport) -> bool {
        let c = &r.classification;
        match self {
            Filter::Bridgeless => c.bridgeless,
            Filter::ThreeEdgeConnected => c.three_edge_connected,
            Filter::InG => c.in_g,
            Filter::InG0 => c.in_g0,
            Filter::NonintegralRoots => r.roots.is_some() && !c.integral_roots,
        }
    }
}

impl fmt::Display for Filter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Filter {
    type Err = WorkError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Filter::ALL
            .into_iter()
            .find(|f| f.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| {
                let names: Vec<&str> = Filter::ALL.iter().map(|f| f.name()).collect();
                WorkError::Invalid(format!(
                    "unknown filter {s:?}; expected one of {}",
                    names.join(", ")
                ))
            })
    }
}

#[derive(Debug, Clone)]
pub struct SearchConfig {
    pub bounds: EnumBounds,
    pub filters: Vec<Filter>,
    /// Worker threads; 0 means the rayon default.
    pub workers: usize,
    pub tol: BigRational,
    pub work_cap: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StageCount {
    pub filter: String,
    pub survivors: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Candidate {
    pub problem: u8,
    pub graph: String,
    pub detail: String,
}

/// End-of-search summary; candidates come first.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SearchSummary {
    pub candidates: Vec<Candidate>,
    pub enumerated: usize,
    pub stages: Vec<StageCount>,
    pub survivors: usize,
    /// Survivors with at least one failed audit.
    pub falsifications: Vec<String>,
    pub inconclusive: usize,
    pub estimated_work: f64,
}

impl SearchSummary {
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for c in &self.candidates {
            s.push_str(&format!(
                "CANDIDATE problem-{} {} {}\n",
                c.problem, c.graph, c.detail
            ));
        }
        s.push_str(&format!("enumerated {}\n", self.enumerated));
        for st in &self.stages {
            s.push_str(&format!("after {:<22} {}\n", st.filter, st.survivors));
        }
        s.push_str(&format!(
            "survivors {}, audit failures {}, inconclusive {}\n",
            self.survivors,
            self.falsifications.len(),
            self.inconclusive
        ));
        s
    }
}

pub struct SearchOutcome {
    pub reports: Vec<AuditReport>,
    pub summary: SearchSummary,
}

/// Enumerate, filter and audit. Reports come out in canonical-code order
/// whatever the worker count.
pub fn run_search(cfg: &SearchConfig) -> Result<SearchOutcome, WorkError> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.workers)
        .build()
        .map_err(|e| WorkError::Invalid(format!("thread pool: {e}")))?;
    pool.install(|| search_in_pool(cfg))
}

fn search_in_pool(cfg: &SearchConfig) -> Result<SearchOutcome, WorkError> {
    let audit_cfg =
        AuditConfig::with_tol(cfg.tol.clone()).map_err(|e| WorkError::Invalid(e.to_string()))?;
    let estimated_work = estimate_work(&cfg.bounds);
    let graphs = enumerate_connected(&cfg.bounds, cfg.work_cap)?;
    let mut filters = cfg.filters.clone();
    filters.sort();
    filters.dedup();

    let mut stages = Vec::new();
    let mut pool: Vec<MultiGraph> = graphs.clone();
    let structural: Vec<Filter> = filters.iter().copied().filter(|f| f.structural()).collect();
    for f in &structural {
        pool = pool
            .into_par_iter()
            .filter(|g| f.keeps_structurally(g))
            .collect();
        stages.push(StageCount {
            filter: f.name().into(),
            survivors: pool.len(),
        });
    }

    let audited: Vec<Result<AuditReport, String>> = pool
        .par_iter()
        .map_init(FlowEngine::new, |engine, g| {
            audit_graph_with(engine, g, None, &audit_cfg).map_err(|e| format!("{g}: {e}"))
        })
        .collect();
    let mut reports = Vec::with_capacity(audited.len());
    for r in audited {
        reports.push(r.map_err(WorkError::Invalid)?);
    }
    for f in filters.iter().filter(|f| !f.structural()) {
        reports.retain(|r| f.keeps_report(r));
        stages.push(StageCount {
            filter: f.name().into(),
            survivors: reports.len(),
        });
    }

    let mut candidates = Vec::new();
    for r in &reports {
        if r.is_problem1_candidate() {
            candidates.push(Candidate {
                problem: 1,
                graph: r.graph.id.clone(),
                detail: format!("in G with non-integral roots, edges {:?}", r.graph.edges),
            });
        }
        if r.is_problem2_candidate() {
            let count = r.roots.as_ref().map_or(0, |x| x.count_in_1_2);
            candidates.push(Candidate {
                problem: 2,
                graph: r.graph.id.clone(),
                detail: format!("k = {}, roots in (1,2) = {count}", r.invariants.k),
            });
        }
    }
    let summary = SearchSummary {
        candidates,
        enumerated: graphs.len(),
        stages,
        survivors: reports.len(),
        falsifications: reports
            .iter()
            .filter(|r| r.has_failure())
            .map(|r| r.graph.id.clone())
            .collect(),
        inconclusive: reports.iter().filter(|r| r.has_inconclusive()).count(),
        estimated_work,
    };
    Ok(SearchOutcome { reports, summary })
}
