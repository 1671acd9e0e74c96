//! Splitting a burned graph into the trees grown by each source.
//!
//! Every vertex `w` is charged to the earliest source `v_k` that explains its
//! burn time, `λ(w) = k + d(v_k, w)`. The parts `M_k` carry BFS trees rooted
//! at their source; joining those trees along a spanning tree of the quotient
//! graph gives a spanning tree of `G` on which the same sequence still burns.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use thiserror::Error;

use crate::burning::{validate, Burning, BurningError};
use crate::graph::{Graph, GraphError, VertexId, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecompositionError {
    #[error("vertex {0} is explained by no source")]
    Unattributed(VertexId),
    #[error("attribution does not belong to this burning")]
    Inconsistent,
    #[error("ClaimViolation: shortest path to {0} leaves its part")]
    ClaimViolation(VertexId),
    #[error("graph is not connected")]
    Disconnected,
    #[error("EqualLambdaInNonTree: edge {{{0},{1}}} joins vertices burnt at the same time")]
    EqualLambdaInNonTree(VertexId, VertexId),
    #[error("edge {{{0},{1}}} joins equal times inside one part")]
    TieInsidePart(VertexId, VertexId),
    #[error("construction produced an invalid burning: {0}")]
    Postcondition(#[from] BurningError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// The map `μ: V -> sources` and its fibres `M_1, ..., M_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SourceAttribution {
    mu: BTreeMap<VertexId, usize>,
    parts: Vec<VertexSet>,
}

impl SourceAttribution {
    /// 1-based index of the source `w` is charged to.
    pub fn source_index(&self, w: VertexId) -> Option<usize> {
        self.mu.get(&w).copied()
    }

    pub fn mu(&self) -> &BTreeMap<VertexId, usize> {
        &self.mu
    }

    /// `M_k` for `1 <= k <= n`.
    pub fn part(&self, k: usize) -> &VertexSet {
        &self.parts[k - 1]
    }

    pub fn parts(&self) -> &[VertexSet] {
        &self.parts
    }
}

pub fn attribute_sources(b: &Burning) -> Result<SourceAttribution, DecompositionError> {
    let g = b.graph();
    let dists: Vec<Vec<Option<usize>>> = b
        .sources()
        .iter()
        .map(|&v| g.slot_distances(g.slot(v).expect("source is a vertex")))
        .collect();
    let mut mu = BTreeMap::new();
    let mut parts = vec![VertexSet::new(); b.len()];
    for (slot, &w) in g.vertices().iter().enumerate() {
        let t = b.slot_time(slot) as usize;
        let k = (1..=b.len())
            .find(|&k| dists[k - 1][slot].is_some_and(|d| k + d == t))
            .ok_or(DecompositionError::Unattributed(w))?;
        mu.insert(w, k);
        parts[k - 1].insert(w);
    }
    Ok(SourceAttribution { mu, parts })
}

/// One rooted tree `T_k` over the part `M_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartTree {
    pub root: VertexId,
    pub vertices: VertexSet,
    pub edges: Vec<(VertexId, VertexId)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BurningForest {
    trees: Vec<PartTree>,
    parent: BTreeMap<VertexId, VertexId>,
}

impl BurningForest {
    pub fn trees(&self) -> &[PartTree] {
        &self.trees
    }

    /// Parent of a non-root vertex on its canonical shortest path.
    pub fn parent(&self, w: VertexId) -> Option<VertexId> {
        self.parent.get(&w).copied()
    }

    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.trees.iter().flat_map(|t| t.edges.iter().copied())
    }

    /// `T_1 + ... + T_n` as one graph on the vertex set of `G`.
    pub fn to_graph(&self, g: &Graph) -> Graph {
        g.with_edges(self.edges())
            .expect("forest edges are edges of the graph")
    }
}

/// Builds the trees `T_k`. Paths are canonical: from `v_k`, each vertex's
/// parent is its smallest-id neighbour one step closer to `v_k`.
pub fn burning_forest(
    b: &Burning,
    a: &SourceAttribution,
) -> Result<BurningForest, DecompositionError> {
    let g = b.graph();
    if a.parts.len() != b.len() || a.mu.len() != g.vertex_count() {
        return Err(DecompositionError::Inconsistent);
    }
    let mut trees = Vec::with_capacity(b.len());
    let mut parent = BTreeMap::new();
    for (k, (&root, part)) in b.sources().iter().zip(&a.parts).enumerate() {
        if a.source_index(root) != Some(k + 1) {
            return Err(DecompositionError::Inconsistent);
        }
        let dist = g.slot_distances(g.slot(root).expect("source is a vertex"));
        let mut edges = Vec::new();
        for w in part.iter().filter(|&w| w != root) {
            let ws = g.slot(w).expect("part member is a vertex");
            let dw = dist[ws].ok_or(DecompositionError::ClaimViolation(w))?;
            let p = g
                .adjacent_slots(ws)
                .iter()
                .copied()
                .find(|&y| dist[y] == Some(dw - 1))
                .map(|y| g.id(y))
                .ok_or(DecompositionError::ClaimViolation(w))?;
            // every vertex on the path lies in M_k iff every parent does
            if !part.contains(p) {
                return Err(DecompositionError::ClaimViolation(w));
            }
            parent.insert(w, p);
            edges.push((w.min(p), w.max(p)));
        }
        edges.sort_unstable();
        trees.push(PartTree {
            root,
            vertices: part.clone(),
            edges,
        });
    }
    Ok(BurningForest { trees, parent })
}

/// A spanning tree of a connected burned graph on which the same source
/// sequence is again a burning sequence.
pub fn spanning_tree(b: &Burning, f: &BurningForest) -> Result<Graph, DecompositionError> {
    let g = b.graph();
    if !g.is_connected() {
        return Err(DecompositionError::Disconnected);
    }
    let n = f.trees.len();
    let mut part_of = BTreeMap::new();
    for (k, t) in f.trees.iter().enumerate() {
        for v in t.vertices.iter() {
            part_of.insert(v, k);
        }
    }
    // quotient graph on parts; edges come sorted so the first hit is the
    // lexicographically smallest representative
    let mut representative: BTreeMap<(usize, usize), (VertexId, VertexId)> = BTreeMap::new();
    for &(x, y) in g.edges() {
        let (px, py) = (part_of[&x], part_of[&y]);
        if px != py {
            representative
                .entry((px.min(py), px.max(py)))
                .or_insert((x, y));
        }
    }
    let mut quotient = vec![BTreeSet::new(); n];
    for &(k, l) in representative.keys() {
        quotient[k].insert(l);
        quotient[l].insert(k);
    }
    let mut seen = vec![false; n];
    let mut edges: Vec<(VertexId, VertexId)> = f.edges().collect();
    let mut queue = VecDeque::from([0]);
    seen[0] = true;
    while let Some(k) = queue.pop_front() {
        for &l in &quotient[k] {
            if !seen[l] {
                seen[l] = true;
                edges.push(representative[&(k.min(l), k.max(l))]);
                queue.push_back(l);
            }
        }
    }
    let tree = g.with_edges(edges)?;
    validate(&tree, b.sources())?;
    Ok(tree)
}

/// A digraph: vertices plus arcs `(tail, head)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Digraph {
    pub vertices: Vec<VertexId>,
    pub arcs: Vec<(VertexId, VertexId)>,
}

/// Orients every edge from the earlier-burnt end to the later one. Ties can
/// only occur in a tree, where they are broken by part index.
pub fn orient(b: &Burning, a: &SourceAttribution) -> Result<Digraph, DecompositionError> {
    let g = b.graph();
    let tree = g.is_tree();
    let mut arcs = Vec::with_capacity(g.edge_count());
    for &(v, w) in g.edges() {
        let (tv, tw) = (b.time(v), b.time(w));
        let arc = match tv.cmp(&tw) {
            std::cmp::Ordering::Less => (v, w),
            std::cmp::Ordering::Greater => (w, v),
            std::cmp::Ordering::Equal => {
                if !tree {
                    return Err(DecompositionError::EqualLambdaInNonTree(v, w));
                }
                let pv = a.source_index(v).ok_or(DecompositionError::Inconsistent)?;
                let pw = a.source_index(w).ok_or(DecompositionError::Inconsistent)?;
                match pv.cmp(&pw) {
                    std::cmp::Ordering::Less => (v, w),
                    std::cmp::Ordering::Greater => (w, v),
                    std::cmp::Ordering::Equal => {
                        return Err(DecompositionError::TieInsidePart(v, w))
                    }
                }
            }
        };
        arcs.push(arc);
    }
    arcs.sort_unstable();
    Ok(Digraph {
        vertices: g.vertices().to_vec(),
        arcs,
    })
}
