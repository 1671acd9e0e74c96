//! Morphisms of burnings: graph maps `f: G -> H` carrying the sources of one
//! burning onto the leading sources of another, with a time map `τ` making
//! `λ_H ∘ f = τ ∘ λ_G`.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::burning::Burning;
use crate::graph::VertexId;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MorphismError {
    #[error("NotGraphMap: {0}")]
    NotGraphMap(String),
    #[error("source count {domain} exceeds target source count {target}")]
    TooManySources { domain: usize, target: usize },
    #[error("SourceMismatch at i={0}")]
    SourceMismatch(usize),
    #[error("NoFactorization at time {time}: λ_H∘f takes values {first} and {second}")]
    NoFactorization { time: u32, first: u32, second: u32 },
    #[error("TauNotPathMap at i={0}")]
    TauNotPathMap(u32),
}

/// The vertex map together with the induced time map `τ`, stored as
/// `tau[i - 1] = τ(i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MorphismWitness {
    pub vertex_map: BTreeMap<VertexId, VertexId>,
    pub tau: Vec<u32>,
}

impl MorphismWitness {
    pub fn tau(&self, i: u32) -> Option<u32> {
        self.tau.get((i as usize).checked_sub(1)?).copied()
    }
}

/// Checks that `f` is a morphism of burnings `bg -> bh` and returns the
/// unique time map it induces.
pub fn check_morphism(
    f: &BTreeMap<VertexId, VertexId>,
    bg: &Burning,
    bh: &Burning,
) -> Result<MorphismWitness, MorphismError> {
    let (g, h) = (bg.graph(), bh.graph());
    for &v in g.vertices() {
        match f.get(&v) {
            None => return Err(MorphismError::NotGraphMap(format!("vertex {v} is unmapped"))),
            Some(&w) if !h.contains(w) => {
                return Err(MorphismError::NotGraphMap(format!(
                    "image {w} of {v} is not a vertex of the target"
                )))
            }
            _ => {}
        }
    }
    for &(a, b) in g.edges() {
        let (fa, fb) = (f[&a], f[&b]);
        if fa != fb && !h.has_edge(fa, fb) {
            return Err(MorphismError::NotGraphMap(format!(
                "edge {{{a},{b}}} maps to non-edge {{{fa},{fb}}}"
            )));
        }
    }
    let (k, m) = (bg.len(), bh.len());
    if k > m {
        return Err(MorphismError::TooManySources {
            domain: k,
            target: m,
        });
    }
    for (i, (v, w)) in bg.sources().iter().zip(bh.sources()).enumerate() {
        if f[v] != *w {
            return Err(MorphismError::SourceMismatch(i + 1));
        }
    }
    // λ_G is onto 1..=T_G, so every fibre is non-empty and τ is forced
    let mut tau: Vec<Option<u32>> = vec![None; bg.end_time() as usize];
    for (v, t) in bg.lambda() {
        let image = bh.time(f[&v]).expect("image is a target vertex");
        let slot = &mut tau[t as usize - 1];
        match *slot {
            None => *slot = Some(image),
            Some(prev) if prev != image => {
                return Err(MorphismError::NoFactorization {
                    time: t,
                    first: prev,
                    second: image,
                })
            }
            _ => {}
        }
    }
    let tau: Vec<u32> = tau
        .into_iter()
        .map(|t| t.expect("burning map is surjective"))
        .collect();
    for (i, pair) in tau.windows(2).enumerate() {
        if pair[0].abs_diff(pair[1]) > 1 {
            return Err(MorphismError::TauNotPathMap(i as u32 + 1));
        }
    }
    Ok(MorphismWitness {
        vertex_map: f.clone(),
        tau,
    })
}
