//! Machine-readable reports printed on stdout.

use pyrelab::extremal::MinimalSequence;
use pyrelab::{
    Burning, BurningForest, Coefficients, Digraph, Graph, HomologyResult, PathBounds,
    SimplicialComplex, SourceAttribution, VertexId,
};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub payload: Payload,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Payload {
    Burning(BurningReport),
    Decomposition(DecompositionReport),
    Digraph(DigraphReport),
    Complex(ComplexReport),
    Homology(HomologyReport),
    Bounds(BoundsReport),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BurningReport {
    pub sources: Vec<VertexId>,
    /// `(vertex, time)` in ascending vertex order.
    pub lambda: Vec<(VertexId, u32)>,
    pub end_time: u32,
    pub homomorphism: bool,
}

impl From<&Burning> for BurningReport {
    fn from(b: &Burning) -> Self {
        BurningReport {
            sources: b.sources().to_vec(),
            lambda: b.lambda().collect(),
            end_time: b.end_time(),
            homomorphism: b.is_homomorphism(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartReport {
    pub source: VertexId,
    pub vertices: Vec<VertexId>,
    pub tree_edges: Vec<[VertexId; 2]>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionReport {
    pub burning: BurningReport,
    pub parts: Vec<PartReport>,
    /// Absent for disconnected graphs.
    pub spanning_tree: Option<Vec<[VertexId; 2]>>,
}

fn pairs(edges: impl IntoIterator<Item = (VertexId, VertexId)>) -> Vec<[VertexId; 2]> {
    edges.into_iter().map(|(a, b)| [a, b]).collect()
}

impl DecompositionReport {
    pub fn new(
        b: &Burning,
        a: &SourceAttribution,
        f: &BurningForest,
        tree: Option<&Graph>,
    ) -> Self {
        let parts = f
            .trees()
            .iter()
            .zip(a.parts())
            .map(|(t, part)| PartReport {
                source: t.root,
                vertices: part.to_vec(),
                tree_edges: pairs(t.edges.iter().copied()),
            })
            .collect();
        DecompositionReport {
            burning: b.into(),
            parts,
            spanning_tree: tree.map(|t| pairs(t.edges().iter().copied())),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DigraphReport {
    pub vertices: Vec<VertexId>,
    /// `[tail, head]`
    pub arcs: Vec<[VertexId; 2]>,
}

impl From<&Digraph> for DigraphReport {
    fn from(d: &Digraph) -> Self {
        DigraphReport {
            vertices: d.vertices.clone(),
            arcs: pairs(d.arcs.iter().copied()),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum ComplexKind {
    Delta,
    Gamma,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexReport {
    pub complex: ComplexKind,
    pub dim: isize,
    pub vertices: Vec<VertexId>,
    pub maximal_faces: Vec<Vec<VertexId>>,
}

impl ComplexReport {
    pub fn new(complex: ComplexKind, k: &SimplicialComplex) -> Self {
        ComplexReport {
            complex,
            dim: k.dim(),
            vertices: k.vertices().to_vec(),
            maximal_faces: k.maximal_faces().to_vec(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyReport {
    pub complex: ComplexKind,
    /// `"Z"` or `"Z/p"`.
    pub coefficients: String,
    pub dim: isize,
    pub betti: Vec<usize>,
    /// Invariant factors above one, as decimal strings.
    pub torsion: Vec<Vec<String>>,
}

impl HomologyReport {
    pub fn new(complex: ComplexKind, h: &HomologyResult) -> Self {
        let coefficients = match h.coefficients {
            Coefficients::Integers => "Z".to_string(),
            Coefficients::Prime(p) => format!("Z/{p}"),
        };
        HomologyReport {
            complex,
            coefficients,
            dim: h.dim,
            betti: h.betti.clone(),
            torsion: h
                .torsion
                .iter()
                .map(|ts| ts.iter().map(|t| t.to_string()).collect())
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundsReport {
    pub n: usize,
    pub lower: usize,
    pub upper: usize,
    pub k: usize,
    pub m: usize,
    pub witness: Vec<VertexId>,
    pub witness_origin: String,
    pub upper_witness: Vec<VertexId>,
}

impl BoundsReport {
    pub fn new(b: &PathBounds, min: &MinimalSequence, max: Vec<VertexId>) -> Self {
        BoundsReport {
            n: b.n,
            lower: b.lower,
            upper: b.upper,
            k: b.k,
            m: b.m,
            witness: min.sources.clone(),
            witness_origin: format!("{:?}", min.origin).to_lowercase(),
            upper_witness: max,
        }
    }
}
