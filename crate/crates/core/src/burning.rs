//! Burning sequences, their filtrations and burning maps.
//!
//! For a source sequence `(v_1, ..., v_n)` the burned region at time `j` is
//! `N_j = N_{j-1}(v_1) ∪ ... ∪ N_0(v_j)` and the region reached just before
//! `v_j` is lit is `U_j = N_{j-1}(v_1) ∪ ... ∪ N_1(v_{j-1})`. A sequence is a
//! burning sequence when no source is already reached (`v_j ∉ U_j`) and the
//! fire covers the graph (`U_{n+1} = V`).

use std::collections::BTreeMap;

use thiserror::Error;

use crate::graph::{Graph, VertexId, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BurningError {
    #[error("source sequence is empty")]
    EmptySequence,
    #[error("unknown vertex {0}")]
    UnknownVertex(VertexId),
    #[error("vertex {0} appears twice in the source sequence")]
    DuplicateSource(VertexId),
    #[error("SourceAlreadyBurned at j={0}")]
    SourceAlreadyBurned(usize),
    #[error("Uncovered: vertices {0} are never reached")]
    Uncovered(VertexSet),
}

/// The two nested filtrations `N_1 ⊆ ... ⊆ N_n` and `U_2 ⊆ ... ⊆ U_{n+1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Filtration {
    sources: Vec<VertexId>,
    burned: Vec<VertexSet>,
    reached: Vec<VertexSet>,
}

impl Filtration {
    pub fn sources(&self) -> &[VertexId] {
        &self.sources
    }

    /// `N_j` for `1 <= j <= n`.
    pub fn burned(&self, j: usize) -> &VertexSet {
        &self.burned[j - 1]
    }

    /// `U_j` for `2 <= j <= n + 1`.
    pub fn reached(&self, j: usize) -> &VertexSet {
        &self.reached[j - 2]
    }

    pub fn len(&self) -> usize {
        self.sources.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sources.is_empty()
    }
}

fn check_sources(g: &Graph, sources: &[VertexId]) -> Result<Vec<usize>, BurningError> {
    if sources.is_empty() {
        return Err(BurningError::EmptySequence);
    }
    let mut slots = Vec::with_capacity(sources.len());
    for (i, &v) in sources.iter().enumerate() {
        let s = g.slot(v).ok_or(BurningError::UnknownVertex(v))?;
        if sources[..i].contains(&v) {
            return Err(BurningError::DuplicateSource(v));
        }
        slots.push(s);
    }
    Ok(slots)
}

/// Evaluates both filtrations term by term, without judging validity.
pub fn filtration(g: &Graph, sources: &[VertexId]) -> Result<Filtration, BurningError> {
    let slots = check_sources(g, sources)?;
    let dist: Vec<Vec<Option<usize>>> = slots.iter().map(|&s| g.slot_distances(s)).collect();
    let n = sources.len();
    // x lies in the union of N_{j-i}(v_i) over i in 1..=last
    let union_at = |j: usize, last: usize| -> VertexSet {
        (0..g.vertex_count())
            .filter(|&x| {
                (1..=last).any(|i| matches!(dist[i - 1][x], Some(d) if d <= j - i))
            })
            .map(|x| g.id(x))
            .collect()
    };
    let burned = (1..=n).map(|j| union_at(j, j)).collect();
    let reached = (2..=n + 1).map(|j| union_at(j, j - 1)).collect();
    Ok(Filtration {
        sources: sources.to_vec(),
        burned,
        reached,
    })
}

/// A validated burning `(λ, S)` of a graph.
#[derive(Clone, PartialEq, Eq)]
pub struct Burning {
    graph: Graph,
    sources: Vec<VertexId>,
    // burn time per vertex slot
    times: Vec<u32>,
    end_time: u32,
}

impl Burning {
    pub(crate) fn from_parts(graph: Graph, sources: Vec<VertexId>, times: Vec<u32>) -> Burning {
        let end_time = times.iter().copied().max().unwrap_or(0);
        Burning {
            graph,
            sources,
            times,
            end_time,
        }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn sources(&self) -> &[VertexId] {
        &self.sources
    }

    /// The unordered source set.
    pub fn source_set(&self) -> VertexSet {
        self.sources.iter().copied().collect()
    }

    pub fn len(&self) -> usize {
        self.sources.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sources.is_empty()
    }

    /// The burn time `λ(v)`.
    pub fn time(&self, v: VertexId) -> Option<u32> {
        self.graph.slot(v).map(|s| self.times[s])
    }

    pub(crate) fn slot_time(&self, slot: usize) -> u32 {
        self.times[slot]
    }

    /// `(vertex, λ(vertex))` pairs in ascending vertex order.
    pub fn lambda(&self) -> impl Iterator<Item = (VertexId, u32)> + '_ {
        self.graph.vertices().iter().copied().zip(self.times.iter().copied())
    }

    pub fn lambda_map(&self) -> BTreeMap<VertexId, u32> {
        self.lambda().collect()
    }

    pub fn end_time(&self) -> u32 {
        self.end_time
    }

    /// Every edge changes λ by exactly one.
    pub fn is_homomorphism(&self) -> bool {
        self.graph.edges().iter().all(|&(a, b)| {
            let (ta, tb) = (self.time(a), self.time(b));
            ta.zip(tb).is_some_and(|(x, y)| x.abs_diff(y) == 1)
        })
    }

    pub fn filtration(&self) -> Filtration {
        filtration(&self.graph, &self.sources).expect("sources of a burning are valid")
    }
}

impl std::fmt::Debug for Burning {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Burning")
            .field("sources", &self.sources)
            .field("lambda", &self.lambda_map())
            .field("end_time", &self.end_time)
            .finish()
    }
}

/// Checks that `sources` is a burning sequence of `g` and builds its burning
/// map `λ(v) = min{ i | v ∈ N_i }` with `N_{n+1} = V`.
pub fn validate(g: &Graph, sources: &[VertexId]) -> Result<Burning, BurningError> {
    let filt = filtration(g, sources)?;
    let n = sources.len();
    for j in 2..=n {
        if filt.reached(j).contains(sources[j - 1]) {
            return Err(BurningError::SourceAlreadyBurned(j));
        }
    }
    let last = filt.reached(n + 1);
    if last.len() != g.vertex_count() {
        return Err(BurningError::Uncovered(g.vertex_set().difference(last)));
    }
    let times = g
        .vertices()
        .iter()
        .map(|&v| {
            (1..=n)
                .find(|&j| filt.burned(j).contains(v))
                .unwrap_or(n + 1) as u32
        })
        .collect();
    Ok(Burning::from_parts(g.clone(), sources.to_vec(), times))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, GraphFamily};

    fn path(n: usize) -> Graph {
        generate(GraphFamily::Path(n)).unwrap()
    }

    #[test]
    fn filtration_of_p4() {
        let f = filtration(&path(4), &[1, 4]).unwrap();
        assert_eq!(f.burned(1), &[1].into());
        assert_eq!(f.reached(2), &[1, 2].into());
        assert_eq!(f.burned(2), &[1, 2, 4].into());
        assert_eq!(f.reached(3), &[1, 2, 3, 4].into());
    }

    #[test]
    fn filtration_single_source() {
        let y8 = generate(GraphFamily::YSpider(3)).unwrap();
        let f = filtration(&y8, &[4]).unwrap();
        assert_eq!(f.burned(1), &[4].into());
        assert_eq!(f.reached(2), &y8.closed_neighborhood(&[4].into(), 1).unwrap());
        let f = filtration(&path(3), &[2]).unwrap();
        assert_eq!(f.reached(2), &[1, 2, 3].into());
    }

    #[test]
    fn filtration_input_errors() {
        assert_eq!(filtration(&path(3), &[]), Err(BurningError::EmptySequence));
        assert_eq!(
            filtration(&path(3), &[1, 1]),
            Err(BurningError::DuplicateSource(1))
        );
        assert_eq!(
            filtration(&path(3), &[4]),
            Err(BurningError::UnknownVertex(4))
        );
    }

    #[test]
    fn rejects_reburning_source() {
        assert_eq!(
            validate(&path(4), &[1, 2, 3, 4]),
            Err(BurningError::SourceAlreadyBurned(2))
        );
    }

    #[test]
    fn lambda_tables() {
        let b = validate(&path(4), &[1, 4]).unwrap();
        assert_eq!(b.lambda().map(|(_, t)| t).collect::<Vec<_>>(), vec![1, 2, 3, 2]);
        assert_eq!(b.end_time(), 3);

        let b = validate(&path(3), &[2]).unwrap();
        assert_eq!(b.lambda().map(|(_, t)| t).collect::<Vec<_>>(), vec![2, 1, 2]);
        assert_eq!(b.end_time(), 2);
    }

    #[test]
    fn uncovered_single_source() {
        assert_eq!(
            validate(&path(4), &[1]),
            Err(BurningError::Uncovered([3, 4].into()))
        );
    }

    #[test]
    fn homomorphism_check() {
        assert!(validate(&path(3), &[2]).unwrap().is_homomorphism());
        let b = validate(&path(3), &[1, 3]).unwrap();
        assert_eq!(b.time(2), b.time(3));
        assert!(!b.is_homomorphism());
        assert!(validate(&path(1), &[1]).unwrap().is_homomorphism());
    }

    #[test]
    fn diagnostic_names_rule_and_index() {
        let err = validate(&path(4), &[1, 2, 3, 4]).unwrap_err();
        assert_eq!(err.to_string(), "SourceAlreadyBurned at j=2");
    }
}
