use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::PolyError;
use crate::poly::IntPoly;

/// The reduction applied at one node of the evaluation tree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Rule {
    /// No edges: `F = 1`.
    Empty,
    BridgeZero,
    /// Product over blocks (and components).
    BlockSplit,
    /// A single loop: `F = λ - 1`.
    LoopFactor,
    TwoCutContract,
    ThreeCutSplit,
    VertexEdgeSplit,
    DeleteContract,
    MemoHit,
}

impl Rule {
    pub fn name(self) -> &'static str {
        match self {
            Rule::Empty => "empty",
            Rule::BridgeZero => "bridge-zero",
            Rule::BlockSplit => "block-split",
            Rule::LoopFactor => "loop-factor",
            Rule::TwoCutContract => "two-cut-contract",
            Rule::ThreeCutSplit => "three-cut-split",
            Rule::VertexEdgeSplit => "vertex-edge-split",
            Rule::DeleteContract => "delete-contract",
            Rule::MemoHit => "memo-hit",
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One evaluated subproblem. `children` index earlier steps; for a memo hit
/// the single child is the step that first computed the value.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceStep {
    pub rule: Rule,
    pub vertices: usize,
    pub edges: usize,
    pub children: Vec<usize>,
    pub result: IntPoly,
}

/// Post-order record of a traced evaluation; the last step is the root.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionTrace {
    steps: Vec<TraceStep>,
}

impl ReductionTrace {
    pub(crate) fn new(steps: Vec<TraceStep>) -> Self {
        ReductionTrace { steps }
    }

    pub fn steps(&self) -> &[TraceStep] {
        &self.steps
    }

    pub fn count(&self, rule: Rule) -> usize {
        self.steps.iter().filter(|s| s.rule == rule).count()
    }

    /// Recombine every step from its children alone and return the root
    /// value. Fails if any recomputed value differs from the recorded one.
    pub fn replay(&self) -> Result<IntPoly, PolyError> {
        let mut vals: Vec<IntPoly> = Vec::with_capacity(self.steps.len());
        for (i, s) in self.steps.iter().enumerate() {
            let kid = |j: usize| -> Result<&IntPoly, PolyError> {
                if j >= i {
                    return Err(PolyError::Coefficient(format!(
                        "step {i} refers forward to step {j}"
                    )));
                }
                Ok(&vals[j])
            };
            let v = match s.rule {
                Rule::Empty => IntPoly::one(),
                Rule::BridgeZero => IntPoly::zero(),
                Rule::LoopFactor => IntPoly::linear(1),
                Rule::BlockSplit => {
                    let mut p = IntPoly::one();
                    for &j in &s.children {
                        p = &p * kid(j)?;
                    }
                    p
                }
                Rule::TwoCutContract | Rule::MemoHit => kid(s.children[0])?.clone(),
                Rule::ThreeCutSplit => (kid(s.children[0])? * kid(s.children[1])?)
                    .div_exact(&IntPoly::from_roots(&[1, 2]))?,
                Rule::VertexEdgeSplit => {
                    (kid(s.children[0])? * kid(s.children[1])?).div_exact(&IntPoly::linear(1))?
                }
                Rule::DeleteContract => kid(s.children[0])? - kid(s.children[1])?,
            };
            if v != s.result {
                return Err(PolyError::Coefficient(format!(
                    "step {i} ({}) replays to {v}, recorded {}",
                    s.rule, s.result
                )));
            }
            vals.push(v);
        }
        vals.pop().ok_or(PolyError::ZeroPolynomial)
    }

    /// One line per step: index, rule, subgraph size, children.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (i, s) in self.steps.iter().enumerate() {
            let kids: Vec<String> = s.children.iter().map(|c| c.to_string()).collect();
            out.push_str(&format!(
                "{i}\t{}\tn={} m={}\t[{}]\n",
                s.rule,
                s.vertices,
                s.edges,
                kids.join(",")
            ));
        }
        out
    }
}
