use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use thiserror::Error;

use super::complex::SimplicialComplex;
use super::matrix::{smith_normal_form, IntegerMatrix};
use crate::graph::VertexId;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HomologyError {
    #[error("{0} is not a prime")]
    NotPrime(u64),
}

/// Coefficient ring for homology.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Coefficients {
    Integers,
    Prime(u64),
}

impl fmt::Display for Coefficients {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coefficients::Integers => write!(f, "Z"),
            Coefficients::Prime(p) => write!(f, "Z/{p}"),
        }
    }
}

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyResult {
    /// Dimension of the complex, `-1` when empty.
    pub dim: isize,
    pub betti: Vec<usize>,
    /// Invariant factors above one of `H_q`, per `q`; always empty over a field.
    pub torsion: Vec<Vec<BigInt>>,
    pub coefficients: Coefficients,
}

impl HomologyResult {
    pub fn euler_characteristic(&self) -> i64 {
        self.betti
            .iter()
            .enumerate()
            .map(|(q, &b)| if q % 2 == 0 { b as i64 } else { -(b as i64) })
            .sum()
    }

    pub fn has_torsion(&self) -> bool {
        self.torsion.iter().any(|t| !t.is_empty())
    }
}

/// The boundary `∂_q: C_q -> C_{q-1}` in the bases of sorted faces; column
/// `σ = [x_0 < ... < x_q]` has `(-1)^i` in the row of `σ` minus `x_i`.
pub fn boundary_matrix(k: &SimplicialComplex, q: usize) -> IntegerMatrix {
    let cols = k.faces(q);
    if q == 0 {
        return IntegerMatrix::zeros(0, cols.len());
    }
    let rows = k.faces(q - 1);
    let index: HashMap<&[VertexId], usize> = rows
        .iter()
        .enumerate()
        .map(|(i, f)| (f.as_slice(), i))
        .collect();
    let mut m = IntegerMatrix::zeros(rows.len(), cols.len());
    for (c, face) in cols.iter().enumerate() {
        for i in 0..face.len() {
            let mut facet = face.clone();
            facet.remove(i);
            let sign = if i % 2 == 0 { 1 } else { -1 };
            m.set(index[facet.as_slice()], c, BigInt::from(sign));
        }
    }
    m
}

/// Unreduced simplicial homology.
pub fn homology(
    k: &SimplicialComplex,
    coefficients: Coefficients,
) -> Result<HomologyResult, HomologyError> {
    if let Coefficients::Prime(p) = coefficients {
        if !is_prime(p) {
            return Err(HomologyError::NotPrime(p));
        }
    }
    let dim = k.dim();
    if dim < 0 {
        return Ok(HomologyResult {
            dim,
            betti: Vec::new(),
            torsion: Vec::new(),
            coefficients,
        });
    }
    let top = dim as usize;
    let face_counts: Vec<usize> = (0..=top).map(|q| k.faces(q).len()).collect();
    // ranks[q] = rank ∂_q, torsion_of[q] = factors > 1 of ∂_q
    let mut ranks = vec![0usize; top + 2];
    let mut torsion_of = vec![Vec::new(); top + 2];
    for q in 1..=top {
        let d = boundary_matrix(k, q);
        match coefficients {
            Coefficients::Integers => {
                let snf = smith_normal_form(&d);
                ranks[q] = snf.rank();
                torsion_of[q] = snf
                    .factors
                    .into_iter()
                    .filter(|f| !f.is_one())
                    .collect();
            }
            Coefficients::Prime(p) => ranks[q] = d.rank_mod(p),
        }
    }
    let betti = (0..=top)
        .map(|q| face_counts[q] - ranks[q] - ranks[q + 1])
        .collect();
    let torsion = (0..=top).map(|q| torsion_of[q + 1].clone()).collect();
    Ok(HomologyResult {
        dim,
        betti,
        torsion,
        coefficients,
    })
}
