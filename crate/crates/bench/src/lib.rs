//! Fixed inputs shared by the benchmarks.

use pyrelab::{generate, Graph, GraphFamily, VertexId};

pub fn path(n: usize) -> Graph {
    generate(GraphFamily::Path(n)).expect("path")
}

pub fn cycle(n: usize) -> Graph {
    generate(GraphFamily::Cycle(n)).expect("cycle")
}

pub fn spider(legs: usize) -> Graph {
    generate(GraphFamily::YSpider(legs)).expect("spider")
}

/// A deterministic connected graph: a path with chords `i -- i+3` on every
/// third vertex.
pub fn chorded_path(n: usize) -> Graph {
    let n = n as VertexId;
    let ids = 1..=n;
    let mut edges: Vec<(VertexId, VertexId)> = (1..n).map(|i| (i, i + 1)).collect();
    edges.extend((1..).step_by(3).take_while(|&i| i + 3 <= n).map(|i| (i, i + 3)));
    Graph::new(ids, edges).expect("chorded path")
}
