use std::collections::BTreeSet;

use crate::graph::{Graph, VertexId, VertexSet};
use crate::search::{collect_parallel, SearchOptions};

/// A finite simplicial complex given by its maximal faces.
///
/// Faces are sorted vertex lists; the maximal faces form an antichain and
/// are kept in lexicographic order. The vertex set is the union of faces.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertices: VertexSet,
    maximal_faces: Vec<Vec<VertexId>>,
}

impl SimplicialComplex {
    /// The complex generated by `faces`; faces contained in others are
    /// absorbed and empty faces are ignored.
    pub fn generated_by<I, F>(faces: I) -> SimplicialComplex
    where
        I: IntoIterator<Item = F>,
        F: IntoIterator<Item = VertexId>,
    {
        let mut distinct: BTreeSet<Vec<VertexId>> = BTreeSet::new();
        for face in faces {
            let mut f: Vec<VertexId> = face.into_iter().collect();
            f.sort_unstable();
            f.dedup();
            if !f.is_empty() {
                distinct.insert(f);
            }
        }
        // longest first: a face can only be absorbed by a longer one
        let mut by_size: Vec<&Vec<VertexId>> = distinct.iter().collect();
        by_size.sort_by_key(|f| std::cmp::Reverse(f.len()));
        let mut kept: Vec<Vec<VertexId>> = Vec::new();
        for f in by_size {
            if !kept.iter().any(|k| k.len() > f.len() && is_sorted_subset(f, k)) {
                kept.push(f.clone());
            }
        }
        kept.sort();
        let vertices = kept.iter().flatten().copied().collect();
        SimplicialComplex {
            vertices,
            maximal_faces: kept,
        }
    }

    pub fn empty() -> SimplicialComplex {
        SimplicialComplex::default()
    }

    pub fn is_empty(&self) -> bool {
        self.maximal_faces.is_empty()
    }

    pub fn vertices(&self) -> &VertexSet {
        &self.vertices
    }

    pub fn maximal_faces(&self) -> &[Vec<VertexId>] {
        &self.maximal_faces
    }

    /// Dimension, or `-1` for the empty complex.
    pub fn dim(&self) -> isize {
        self.maximal_faces
            .iter()
            .map(|f| f.len() as isize - 1)
            .max()
            .unwrap_or(-1)
    }

    /// All `q`-faces, sorted lexicographically.
    pub fn faces(&self, q: usize) -> Vec<Vec<VertexId>> {
        let mut out = BTreeSet::new();
        for f in &self.maximal_faces {
            if f.len() > q {
                subsets(f, q + 1, &mut Vec::new(), 0, &mut out);
            }
        }
        out.into_iter().collect()
    }

    pub fn contains_face(&self, face: &[VertexId]) -> bool {
        let mut f = face.to_vec();
        f.sort_unstable();
        self.maximal_faces.iter().any(|m| is_sorted_subset(&f, m))
    }
}

fn is_sorted_subset(small: &[VertexId], big: &[VertexId]) -> bool {
    let mut it = big.iter();
    small.iter().all(|x| it.any(|y| y == x))
}

fn subsets(
    face: &[VertexId],
    size: usize,
    current: &mut Vec<VertexId>,
    from: usize,
    out: &mut BTreeSet<Vec<VertexId>>,
) {
    if current.len() == size {
        out.insert(current.clone());
        return;
    }
    let needed = size - current.len();
    for i in from..=face.len() - needed {
        current.push(face[i]);
        subsets(face, size, current, i + 1, out);
        current.pop();
    }
}

pub fn complex_faces(k: &SimplicialComplex, q: usize) -> Vec<Vec<VertexId>> {
    k.faces(q)
}

fn source_complex(g: &Graph, options: SearchOptions) -> SimplicialComplex {
    let burnings = collect_parallel(g, options);
    SimplicialComplex::generated_by(burnings.iter().map(|b| b.sources().to_vec()))
}

/// `Δ(G)`: generated by the source sets of all burnings of `g`.
pub fn config_space(g: &Graph) -> SimplicialComplex {
    source_complex(g, SearchOptions::burnings())
}

/// `Γ(G)`: generated by the source sets of all homomorphism burnings of `g`.
/// Empty when `g` has none.
pub fn strong_config_space(g: &Graph) -> SimplicialComplex {
    source_complex(g, SearchOptions::homomorphisms())
}

/// Every maximal face of `inner` lies in a maximal face of `outer`.
pub fn is_subcomplex(inner: &SimplicialComplex, outer: &SimplicialComplex) -> bool {
    inner
        .maximal_faces
        .iter()
        .all(|f| outer.contains_face(f))
}
