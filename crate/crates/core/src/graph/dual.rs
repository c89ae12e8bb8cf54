use serde::{Deserialize, Serialize};

use super::{data_lines, parse_usizes, MultiGraph};
use crate::error::GraphError;

/// Faces of a plane embedding, each listed as the edge indices met while
/// walking its boundary. Every edge occurs exactly twice overall; a bridge
/// occurs twice in the same face.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FaceStructure {
    pub faces: Vec<Vec<usize>>,
}

impl FaceStructure {
    pub fn new(faces: Vec<Vec<usize>>) -> Self {
        FaceStructure { faces }
    }

    /// One face per data line, space-separated edge indices; `#` lines are comments.
    pub fn parse(text: &str) -> Result<Self, GraphError> {
        let faces = data_lines(text)
            .map(|(line, t)| parse_usizes(line, t))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(FaceStructure { faces })
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for f in &self.faces {
            let parts: Vec<String> = f.iter().map(|e| e.to_string()).collect();
            s.push_str(&parts.join(" "));
            s.push('\n');
        }
        s
    }

    /// For each edge, the faces on its two sides.
    pub fn validate(&self, g: &MultiGraph) -> Result<Vec<(usize, usize)>, GraphError> {
        let m = g.edge_count();
        let mut sides: Vec<Vec<usize>> = vec![Vec::new(); m];
        for (f, face) in self.faces.iter().enumerate() {
            for &e in face {
                if e >= m {
                    return Err(GraphError::Faces(format!(
                        "face {f} lists edge {e}, but the graph has {m} edges"
                    )));
                }
                sides[e].push(f);
            }
        }
        for (e, s) in sides.iter().enumerate() {
            if s.len() != 2 {
                return Err(GraphError::Faces(format!(
                    "edge {e} appears {} times across all faces, expected 2",
                    s.len()
                )));
            }
        }
        let (n, f) = (g.vertex_count() as i64, self.faces.len() as i64);
        let c = g.component_count() as i64;
        if n - m as i64 + f != 1 + c {
            return Err(GraphError::Faces(format!(
                "Euler check failed: n - m + f = {} but expected {}",
                n - m as i64 + f,
                1 + c
            )));
        }
        Ok(sides.into_iter().map(|s| (s[0], s[1])).collect())
    }
}

/// Geometric dual: one vertex per face, one edge per primal edge joining the
/// faces on its two sides (a loop when both sides are the same face). Dual
/// edge `i` corresponds to primal edge `i`.
pub fn build_dual(g: &MultiGraph, faces: &FaceStructure) -> Result<MultiGraph, GraphError> {
    let sides = faces.validate(g)?;
    let edges = sides
        .into_iter()
        .map(|(a, b)| (a.min(b), a.max(b)))
        .collect();
    MultiGraph::new(faces.faces.len(), edges)
}
