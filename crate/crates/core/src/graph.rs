//! Finite simple undirected graphs over integer vertex ids.
//!
//! Every subgraph the burning process touches is an induced subgraph, so
//! subgraphs are carried around as a [`VertexSet`] and their edges are read
//! back from the ambient [`Graph`] when needed.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

pub type VertexId = u32;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(VertexId),
    #[error("edge endpoint {0} is not a vertex of the graph")]
    UnknownEndpoint(VertexId),
    #[error("unknown vertex {0}")]
    UnknownVertex(VertexId),
    #[error("seed set is empty")]
    EmptySeed,
    #[error("graph is not connected")]
    Disconnected,
    #[error("graph has no vertices")]
    Empty,
    #[error("invalid family parameter: {0}")]
    InvalidFamily(String),
}

/// A sorted set of vertex ids, standing for the induced subgraph it spans.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexSet(BTreeSet<VertexId>);

impl VertexSet {
    pub fn new() -> Self {
        VertexSet(BTreeSet::new())
    }

    pub fn insert(&mut self, v: VertexId) -> bool {
        self.0.insert(v)
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.0.contains(&v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.0.iter().copied()
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        VertexSet(self.0.union(&other.0).copied().collect())
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        VertexSet(self.0.difference(&other.0).copied().collect())
    }

    pub fn to_vec(&self) -> Vec<VertexId> {
        self.iter().collect()
    }
}

impl FromIterator<VertexId> for VertexSet {
    fn from_iter<I: IntoIterator<Item = VertexId>>(iter: I) -> Self {
        VertexSet(iter.into_iter().collect())
    }
}

impl<const N: usize> From<[VertexId; N]> for VertexSet {
    fn from(ids: [VertexId; N]) -> Self {
        ids.into_iter().collect()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// Graph distance; `Unreachable` orders after every finite value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Distance {
    Finite(usize),
    Unreachable,
}

impl Distance {
    pub fn finite(self) -> Option<usize> {
        match self {
            Distance::Finite(d) => Some(d),
            Distance::Unreachable => None,
        }
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Finite(d) => write!(f, "{d}"),
            Distance::Unreachable => write!(f, "inf"),
        }
    }
}

struct GraphData {
    ids: Vec<VertexId>,
    slots: HashMap<VertexId, usize>,
    edges: Vec<(VertexId, VertexId)>,
    adj: Vec<Vec<usize>>,
}

/// An immutable finite simple graph. Cloning is cheap.
///
/// Vertices are kept in ascending id order; the position of a vertex in that
/// order is its *slot*, which dense per-vertex tables index by.
#[derive(Clone)]
pub struct Graph {
    data: Arc<GraphData>,
}

impl Graph {
    /// Builds a graph, collapsing duplicate edges and storing each edge with
    /// the smaller id first.
    pub fn new(
        vertices: impl IntoIterator<Item = VertexId>,
        edges: impl IntoIterator<Item = (VertexId, VertexId)>,
    ) -> Result<Graph, GraphError> {
        let ids: Vec<VertexId> = vertices
            .into_iter()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let slots: HashMap<VertexId, usize> =
            ids.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut edge_set = BTreeSet::new();
        for (a, b) in edges {
            if a == b {
                return Err(GraphError::SelfLoop(a));
            }
            for v in [a, b] {
                if !slots.contains_key(&v) {
                    return Err(GraphError::UnknownEndpoint(v));
                }
            }
            edge_set.insert((a.min(b), a.max(b)));
        }
        let mut adj = vec![Vec::new(); ids.len()];
        for &(a, b) in &edge_set {
            let (sa, sb) = (slots[&a], slots[&b]);
            adj[sa].push(sb);
            adj[sb].push(sa);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph {
            data: Arc::new(GraphData {
                ids,
                slots,
                edges: edge_set.into_iter().collect(),
                adj,
            }),
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.data.ids.len()
    }

    pub fn edge_count(&self) -> usize {
        self.data.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.data.ids.is_empty()
    }

    /// Vertex ids in ascending order.
    pub fn vertices(&self) -> &[VertexId] {
        &self.data.ids
    }

    /// Edges as `(low, high)` pairs in lexicographic order.
    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.data.edges
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.vertices().iter().copied().collect()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.data.slots.contains_key(&v)
    }

    pub fn slot(&self, v: VertexId) -> Option<usize> {
        self.data.slots.get(&v).copied()
    }

    pub(crate) fn slot_of(&self, v: VertexId) -> Result<usize, GraphError> {
        self.slot(v).ok_or(GraphError::UnknownVertex(v))
    }

    pub fn id(&self, slot: usize) -> VertexId {
        self.data.ids[slot]
    }

    pub(crate) fn adjacent_slots(&self, slot: usize) -> &[usize] {
        &self.data.adj[slot]
    }

    /// Sorted neighbor list of `v`.
    pub fn neighbors(&self, v: VertexId) -> Result<Vec<VertexId>, GraphError> {
        let s = self.slot_of(v)?;
        Ok(self.data.adj[s].iter().map(|&t| self.id(t)).collect())
    }

    pub fn has_edge(&self, a: VertexId, b: VertexId) -> bool {
        match (self.slot(a), self.slot(b)) {
            (Some(sa), Some(sb)) => self.data.adj[sa].binary_search(&sb).is_ok(),
            _ => false,
        }
    }

    /// BFS distances from a slot, indexed by slot.
    pub(crate) fn slot_distances(&self, from: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.vertex_count()];
        dist[from] = Some(0);
        let mut queue = VecDeque::from([from]);
        while let Some(x) = queue.pop_front() {
            let dx = dist[x].unwrap_or(0);
            for &y in &self.data.adj[x] {
                if dist[y].is_none() {
                    dist[y] = Some(dx + 1);
                    queue.push_back(y);
                }
            }
        }
        dist
    }

    /// Distances from `v` to every vertex, keyed by id.
    pub fn distances_from(&self, v: VertexId) -> Result<BTreeMap<VertexId, Distance>, GraphError> {
        let s = self.slot_of(v)?;
        Ok(self
            .slot_distances(s)
            .into_iter()
            .enumerate()
            .map(|(t, d)| (self.id(t), d.map_or(Distance::Unreachable, Distance::Finite)))
            .collect())
    }

    pub fn distance(&self, v: VertexId, w: VertexId) -> Result<Distance, GraphError> {
        let sv = self.slot_of(v)?;
        let sw = self.slot_of(w)?;
        Ok(self.slot_distances(sv)[sw].map_or(Distance::Unreachable, Distance::Finite))
    }

    /// `{w | d(v, w) <= radius for some v in seed}`.
    pub fn closed_neighborhood(
        &self,
        seed: &VertexSet,
        radius: usize,
    ) -> Result<VertexSet, GraphError> {
        if seed.is_empty() {
            return Err(GraphError::EmptySeed);
        }
        // multi-source BFS truncated at `radius`
        let mut dist = vec![None; self.vertex_count()];
        let mut queue = VecDeque::new();
        for v in seed.iter() {
            let s = self.slot_of(v)?;
            dist[s] = Some(0usize);
            queue.push_back(s);
        }
        while let Some(x) = queue.pop_front() {
            let dx = dist[x].unwrap_or(0);
            if dx == radius {
                continue;
            }
            for &y in &self.data.adj[x] {
                if dist[y].is_none() {
                    dist[y] = Some(dx + 1);
                    queue.push_back(y);
                }
            }
        }
        Ok(dist
            .iter()
            .enumerate()
            .filter(|(_, d)| d.is_some())
            .map(|(s, _)| self.id(s))
            .collect())
    }

    /// Connected components as vertex sets, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen = vec![false; self.vertex_count()];
        let mut out = Vec::new();
        for start in 0..self.vertex_count() {
            if seen[start] {
                continue;
            }
            let mut comp = VertexSet::new();
            let mut stack = vec![start];
            seen[start] = true;
            while let Some(x) = stack.pop() {
                comp.insert(self.id(x));
                for &y in &self.data.adj[x] {
                    if !seen[y] {
                        seen[y] = true;
                        stack.push(y);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        !self.is_empty() && self.components().len() == 1
    }

    /// Connected and `|E| = |V| - 1`.
    pub fn is_tree(&self) -> bool {
        self.is_connected() && self.edge_count() + 1 == self.vertex_count()
    }

    /// Radius and center of a connected graph.
    pub fn radius_center(&self) -> Result<(usize, VertexSet), GraphError> {
        if self.is_empty() {
            return Err(GraphError::Empty);
        }
        if !self.is_connected() {
            return Err(GraphError::Disconnected);
        }
        let ecc: Vec<usize> = (0..self.vertex_count())
            .map(|s| self.slot_distances(s).into_iter().flatten().max().unwrap_or(0))
            .collect();
        let radius = ecc.iter().copied().min().unwrap_or(0);
        let center = ecc
            .iter()
            .enumerate()
            .filter(|&(_, &e)| e == radius)
            .map(|(s, _)| self.id(s))
            .collect();
        Ok((radius, center))
    }

    /// Subgraph on the same vertex set keeping only the given edges.
    pub fn with_edges(
        &self,
        edges: impl IntoIterator<Item = (VertexId, VertexId)>,
    ) -> Result<Graph, GraphError> {
        Graph::new(self.vertices().iter().copied(), edges)
    }

    pub fn is_spanning_subgraph_of(&self, other: &Graph) -> bool {
        self.vertices() == other.vertices()
            && self.edges().iter().all(|&(a, b)| other.has_edge(a, b))
    }
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.vertices() == other.vertices() && self.edges() == other.edges()
    }
}

impl Eq for Graph {}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("vertices", &self.vertices())
            .field("edges", &self.edges())
            .finish()
    }
}

/// `g + h`: the ids of `h` are shifted by `1 + max id of g`. Returns the sum
/// and the map from original `h` ids to their ids in the sum.
pub fn disjoint_union(g: &Graph, h: &Graph) -> (Graph, BTreeMap<VertexId, VertexId>) {
    let offset = g.vertices().last().map_or(0, |&m| m + 1);
    let relabel: BTreeMap<VertexId, VertexId> =
        h.vertices().iter().map(|&v| (v, v + offset)).collect();
    let vertices = g
        .vertices()
        .iter()
        .copied()
        .chain(relabel.values().copied());
    let edges = g
        .edges()
        .iter()
        .copied()
        .chain(h.edges().iter().map(|&(a, b)| (relabel[&a], relabel[&b])));
    let sum = Graph::new(vertices, edges).expect("disjoint union of valid graphs is valid");
    (sum, relabel)
}

/// Parametrised graph families.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphFamily {
    /// `P_n` on `1..=n`.
    Path(usize),
    /// `C_n` on `1..=n`, `n >= 3`.
    Cycle(usize),
    /// The spider `Y_m`, `m = n^2 - 1`, with `n` legs hanging off vertex 1.
    YSpider(usize),
}

pub fn generate(family: GraphFamily) -> Result<Graph, GraphError> {
    match family {
        GraphFamily::Path(n) => {
            if n == 0 {
                return Err(GraphError::InvalidFamily("path needs n >= 1".into()));
            }
            let n = n as VertexId;
            Graph::new(1..=n, (1..n).map(|i| (i, i + 1)))
        }
        GraphFamily::Cycle(n) => {
            if n < 3 {
                return Err(GraphError::InvalidFamily("cycle needs n >= 3".into()));
            }
            let n = n as VertexId;
            Graph::new(1..=n, (1..n).map(|i| (i, i + 1)).chain([(n, 1)]))
        }
        GraphFamily::YSpider(n) => {
            if n < 2 {
                return Err(GraphError::InvalidFamily("y-spider needs n >= 2".into()));
            }
            let n = n as VertexId;
            let m = n * n - 1;
            // blocks Q_1..Q_{n-1} hold n consecutive ids, Q_n holds the last n-1
            let mut edges = Vec::new();
            for i in 0..n {
                let first = n * i + 1;
                let last = (n * i + n).min(m);
                edges.extend((first..last).map(|j| (j, j + 1)));
            }
            edges.extend((1..n).map(|i| (1, 1 + n * i)));
            Graph::new(1..=m, edges)
        }
    }
}
