#![allow(dead_code)]

use pyrelab::{generate, Graph, GraphFamily, VertexId};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn path(n: usize) -> Graph {
    generate(GraphFamily::Path(n)).unwrap()
}

pub fn cycle(n: usize) -> Graph {
    generate(GraphFamily::Cycle(n)).unwrap()
}

pub fn spider(n: usize) -> Graph {
    generate(GraphFamily::YSpider(n)).unwrap()
}

pub fn graph(n: u32, edges: &[(VertexId, VertexId)]) -> Graph {
    Graph::new(1..=n, edges.iter().copied()).unwrap()
}

/// The 6-vertex tree without a homomorphism burning.
pub fn no_hom_tree() -> Graph {
    graph(6, &[(1, 3), (2, 3), (3, 4), (4, 5), (4, 6)])
}

/// Its 7-vertex ambient tree.
pub fn ambient_tree() -> Graph {
    graph(7, &[(1, 3), (2, 3), (3, 4), (4, 5), (4, 6), (6, 7)])
}

/// Connected graph on `1..=n`: a random recursive tree plus each remaining
/// pair with probability `p`.
pub fn random_connected(rng: &mut impl Rng, n: u32, p: f64) -> Graph {
    let mut edges = Vec::new();
    for v in 2..=n {
        edges.push((rng.gen_range(1..v), v));
    }
    for a in 1..=n {
        for b in a + 1..=n {
            if !edges.contains(&(a, b)) && rng.gen_bool(p) {
                edges.push((a, b));
            }
        }
    }
    Graph::new(1..=n, edges).unwrap()
}

pub fn random_tree(rng: &mut impl Rng, n: u32) -> Graph {
    random_connected(rng, n, 0.0)
}

/// Distances by Floyd-Warshall, independent of the library's BFS.
pub fn floyd(g: &Graph) -> Vec<Vec<Option<u32>>> {
    let ids = g.vertices();
    let n = ids.len();
    let mut d = vec![vec![None; n]; n];
    for i in 0..n {
        d[i][i] = Some(0);
    }
    let pos = |v: VertexId| ids.iter().position(|&x| x == v).unwrap();
    for &(a, b) in g.edges() {
        d[pos(a)][pos(b)] = Some(1);
        d[pos(b)][pos(a)] = Some(1);
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if let (Some(x), Some(y)) = (d[i][k], d[k][j]) {
                    if d[i][j].is_none_or(|z| x + y < z) {
                        d[i][j] = Some(x + y);
                    }
                }
            }
        }
    }
    d
}

/// Brute-force oracle: every sequence of distinct vertices, checked straight
/// from the definition with Floyd-Warshall distances. Returns the valid ones
/// with their burn times, in lexicographic order.
pub fn brute_force_burnings(g: &Graph) -> Vec<(Vec<VertexId>, Vec<u32>)> {
    let ids = g.vertices().to_vec();
    let d = floyd(g);
    let n = ids.len();
    let mut out = Vec::new();
    let mut seq = Vec::new();
    fn rec(
        ids: &[VertexId],
        d: &[Vec<Option<u32>>],
        seq: &mut Vec<usize>,
        out: &mut Vec<(Vec<VertexId>, Vec<u32>)>,
    ) {
        let n = ids.len();
        let j = seq.len();
        if j > 0 {
            // 0-based i: v_j must lie outside U_j = {x : d(v_i, x) + i + 1 <= j for some i < j - 1}
            let last = seq[j - 1];
            let reached = (0..j - 1).any(|i| {
                d[seq[i]][last].is_some_and(|t| t as usize + i + 1 <= j)
            });
            if reached {
                return;
            }
            // U_{j+1} = V: every x has d(v_i, x) + i <= j for some i
            let covers = (0..n).all(|x| {
                (0..j).any(|i| d[seq[i]][x].is_some_and(|t| t as usize + i <= j))
            });
            if covers {
                let times = (0..n)
                    .map(|x| {
                        (0..j)
                            .filter_map(|i| d[seq[i]][x].map(|t| t + i as u32 + 1))
                            .min()
                            .unwrap()
                    })
                    .collect();
                out.push((seq.iter().map(|&s| ids[s]).collect(), times));
                return;
            }
        }
        for v in 0..n {
            if !seq.contains(&v) {
                seq.push(v);
                rec(ids, d, seq, out);
                seq.pop();
            }
        }
    }
    if n > 0 {
        rec(&ids, &d, &mut seq, &mut out);
    }
    out
}
