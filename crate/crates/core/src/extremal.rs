//! Burning homomorphisms of paths: explicit sequences, the sharp bounds on
//! their length, the spider family `Y_m`, and prepending a tree centre to a
//! homomorphism burning of another graph.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::burning::{validate, Burning, BurningError};
use crate::graph::{disjoint_union, generate, Graph, GraphError, GraphFamily, VertexId};
use crate::search::{Burnings, SearchOptions};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExtremalError {
    #[error("path length {0} is out of range")]
    InvalidLength(usize),
    #[error("NoMinimalSequence for P_{0}")]
    NoMinimalSequence(usize),
    #[error("burning is not a homomorphism")]
    NotHomomorphism,
    #[error("second graph is not a tree")]
    NotATree,
    #[error("tree radius {radius} exceeds {limit}")]
    RadiusTooLarge { radius: usize, limit: usize },
    #[error("constructed sequence {sources:?} failed: {reason}")]
    Construction { sources: Vec<VertexId>, reason: String },
    #[error(transparent)]
    Burning(#[from] BurningError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Bounds on the number of sources of a homomorphism burning of `P_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PathBounds {
    pub n: usize,
    /// `⌈(√(4n−3)−1)/2⌉`
    pub lower: usize,
    /// `⌈n/3⌉`
    pub upper: usize,
    /// The unique `k` with `(k−1)²+(k−1)+1 < n ≤ k²+k+1`.
    pub k: usize,
    /// `n − ((k−1)²+(k−1)+1)`
    pub m: usize,
}

fn capacity(k: usize) -> usize {
    k * k + k + 1
}

/// `⌈(√(4n−3)−1)/2⌉` in integer arithmetic.
fn lower_bound(n: usize) -> usize {
    let disc = 4 * n as u64 - 3;
    let r = disc.isqrt();
    if r * r == disc {
        // disc is odd, so is its root
        ((r - 1) / 2) as usize
    } else {
        ((r + 1) / 2) as usize
    }
}

pub fn hom_count_bounds(n: usize) -> Result<PathBounds, ExtremalError> {
    if n < 2 {
        return Err(ExtremalError::InvalidLength(n));
    }
    let k = (1..).find(|&k| n <= capacity(k)).expect("capacity is unbounded");
    let lower = lower_bound(n);
    debug_assert_eq!(lower, k);
    Ok(PathBounds {
        n,
        lower,
        upper: n.div_ceil(3),
        k,
        m: n - capacity(k - 1),
    })
}

/// `(1, 4, 7, ...)` when `3 ∤ n`, `(2, 5, 8, ...)` otherwise; `⌈n/3⌉` sources.
pub fn path_hom_sequence(n: usize) -> Result<Vec<VertexId>, ExtremalError> {
    if n == 0 {
        return Err(ExtremalError::InvalidLength(n));
    }
    let start = if n % 3 == 0 { 2 } else { 1 };
    Ok((start..=n as VertexId).step_by(3).collect())
}

/// How a minimal sequence was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SequenceOrigin {
    /// The inner sources exactly as displayed in the construction.
    Formula,
    /// The inner sources with the offset `k − j + 1`, consistent with `v_1`.
    CorrectedFormula,
    /// `v_1 = 1` and `v_{k−i} = n − i(i+2)`: the remaining sources packed
    /// against the far end with gaps `3, 5, 7, ...`.
    Anchored,
    /// Depth-first search over homomorphism burnings with `k` sources.
    Search,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinimalSequence {
    pub sources: Vec<VertexId>,
    pub origin: SequenceOrigin,
}

/// Sources `v_1..v_{k-1}` burning the right-hand block `m+1..=n`, which is
/// a path of `(k−1)²+(k−1)+1` vertices.
fn block_sources(k: usize, m: usize, corrected: bool) -> Vec<usize> {
    (1..k)
        .map(|j| {
            if j == 1 {
                return m + k;
            }
            let span: usize = (k + 1 - j..k).map(|i| 2 * i).sum();
            let offset = if corrected { k - j + 1 } else { k - j };
            m + span + offset
        })
        .collect()
}

fn leading_source(k: usize, m: usize) -> Option<usize> {
    if m >= k {
        Some(m - k + 1)
    } else if (m + k) % 2 == 0 {
        Some(1)
    } else if m % 2 == 1 {
        Some(2)
    } else {
        None
    }
}

fn anchored_sources(n: usize, k: usize) -> Option<Vec<usize>> {
    let mut seq = vec![1];
    for i in (0..k - 1).rev() {
        seq.push(n.checked_sub(i * (i + 2))?);
    }
    Some(seq)
}

fn is_minimal_hom(g: &Graph, sources: &[usize], k: usize) -> bool {
    let n = g.vertex_count();
    if sources.iter().any(|&v| v == 0 || v > n) {
        return false;
    }
    let ids: Vec<VertexId> = sources.iter().map(|&v| v as VertexId).collect();
    ids.len() == k && validate(g, &ids).is_ok_and(|b| b.is_homomorphism())
}

/// A homomorphism burning sequence of `P_n` with the fewest possible sources.
///
/// Tries the explicit construction, then the construction with corrected
/// inner offsets, then the anchored layout, then a bounded search.
pub fn minimal_hom_sequence(n: usize) -> Result<MinimalSequence, ExtremalError> {
    let bounds = hom_count_bounds(n)?;
    let (k, m) = (bounds.k, bounds.m);
    let g = generate(GraphFamily::Path(n))?;
    if let Some(first) = leading_source(k, m) {
        for (corrected, origin) in [
            (false, SequenceOrigin::Formula),
            (true, SequenceOrigin::CorrectedFormula),
        ] {
            let mut candidate = vec![first];
            candidate.extend(block_sources(k, m, corrected));
            if is_minimal_hom(&g, &candidate, k) {
                return Ok(MinimalSequence {
                    sources: candidate.into_iter().map(|v| v as VertexId).collect(),
                    origin,
                });
            }
        }
    }
    if let Some(candidate) = anchored_sources(n, k) {
        if is_minimal_hom(&g, &candidate, k) {
            return Ok(MinimalSequence {
                sources: candidate.into_iter().map(|v| v as VertexId).collect(),
                origin: SequenceOrigin::Anchored,
            });
        }
    }
    Burnings::new(&g, SearchOptions::homomorphisms().max_sources(k))
        .find(|b| b.len() == k)
        .map(|b| MinimalSequence {
            sources: b.sources().to_vec(),
            origin: SequenceOrigin::Search,
        })
        .ok_or(ExtremalError::NoMinimalSequence(n))
}

/// `(1, v_2, ..., v_{n−1})` with `v_{i+1} = ni+n` when `n+i` is even and
/// `ni+n−1` otherwise; a homomorphism burning of `Y_{n²−1}` ending at `n`.
pub fn y_tree_sequence(n: usize) -> Result<Vec<VertexId>, ExtremalError> {
    if n < 2 {
        return Err(ExtremalError::InvalidLength(n));
    }
    let mut seq = vec![1];
    seq.extend((1..n - 1).map(|i| {
        let v = if (n + i) % 2 == 0 { n * i + n } else { n * i + n - 1 };
        v as VertexId
    }));
    let y = generate(GraphFamily::YSpider(n))?;
    let b = validate(&y, &seq).map_err(|e| ExtremalError::Construction {
        sources: seq.clone(),
        reason: e.to_string(),
    })?;
    if !b.is_homomorphism() || b.end_time() as usize != n {
        return Err(ExtremalError::Construction {
            sources: seq,
            reason: format!(
                "homomorphism={}, end time {}",
                b.is_homomorphism(),
                b.end_time()
            ),
        });
    }
    Ok(seq)
}

/// Burning of `G + T` obtained by lighting a centre of `T` first and then
/// replaying `bg`, one step late.
#[derive(Clone, Debug)]
pub struct UnionBurning {
    pub burning: Burning,
    /// Ids of the tree's vertices inside `G + T`.
    pub tree_ids: BTreeMap<VertexId, VertexId>,
    pub tree_center: VertexId,
}

pub fn union_hom_burning(bg: &Burning, t: &Graph) -> Result<UnionBurning, ExtremalError> {
    if !bg.is_homomorphism() {
        return Err(ExtremalError::NotHomomorphism);
    }
    if !t.is_tree() {
        return Err(ExtremalError::NotATree);
    }
    let (radius, center) = t.radius_center()?;
    let limit = bg.len() + 1;
    if radius > limit {
        return Err(ExtremalError::RadiusTooLarge { radius, limit });
    }
    let v0 = center.iter().next().expect("center is non-empty");
    let (sum, tree_ids) = disjoint_union(bg.graph(), t);
    let mut sources = vec![tree_ids[&v0]];
    sources.extend_from_slice(bg.sources());
    let burning = validate(&sum, &sources)?;
    let shifted = bg
        .lambda()
        .all(|(v, time)| burning.time(v) == Some(time + 1));
    if !burning.is_homomorphism() || !shifted {
        return Err(ExtremalError::Construction {
            sources,
            reason: "union burning is not the shifted homomorphism".into(),
        });
    }
    Ok(UnionBurning {
        burning,
        tree_ids,
        tree_center: v0,
    })
}
