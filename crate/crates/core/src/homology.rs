//! Dimensions of reduced simplicial homology over the rationals or a prime
//! field, from exact ranks of the augmented boundary matrices.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::complex::{boundary_matrix, SimplicialComplex, SparseIntMatrix};
use crate::linalg::{is_prime, rank_mod_p, rank_over_rationals};
use crate::Count;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("field characteristic must be 0 or a prime, got {0}")]
    NotPrime(u64),
    #[error("prime characteristic {0} exceeds the supported modulus range (< 2^31)")]
    TooLarge(u64),
}

/// Coefficient field: the rationals (characteristic 0) or GF(p).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Field {
    Rationals,
    Prime(u64),
}

impl Field {
    /// Builds a field from its characteristic; 0 means the rationals.
    pub fn from_characteristic(c: u64) -> Result<Field, FieldError> {
        if c == 0 {
            return Ok(Field::Rationals);
        }
        if !is_prime(c) {
            return Err(FieldError::NotPrime(c));
        }
        if c >= 1 << 31 {
            return Err(FieldError::TooLarge(c));
        }
        Ok(Field::Prime(c))
    }

    pub fn characteristic(self) -> u64 {
        match self {
            Field::Rationals => 0,
            Field::Prime(p) => p,
        }
    }
}

impl std::fmt::Display for Field {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Field::Rationals => write!(f, "Q"),
            Field::Prime(p) => write!(f, "GF({p})"),
        }
    }
}

/// Rank of an integer matrix over the chosen field.
pub fn rank_exact(m: &SparseIntMatrix, field: Field) -> usize {
    match field {
        Field::Rationals => rank_over_rationals(m),
        Field::Prime(p) => rank_mod_p(m, p),
    }
}

/// Dimensions of the reduced homology groups of a complex, indexed from
/// degree -1 up to the complex dimension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomologyDims {
    dims: Vec<Count>,
}

impl HomologyDims {
    /// Dimension in degree `d` (0 outside the stored range).
    pub fn dim(&self, d: isize) -> Count {
        let idx = d + 1;
        if idx < 0 {
            return 0;
        }
        self.dims.get(idx as usize).copied().unwrap_or(0)
    }

    /// Highest stored degree.
    pub fn max_degree(&self) -> isize {
        self.dims.len() as isize - 2
    }

    /// `(degree, dimension)` pairs for all stored degrees.
    pub fn iter(&self) -> impl Iterator<Item = (isize, Count)> + '_ {
        self.dims.iter().enumerate().map(|(i, &v)| (i as isize - 1, v))
    }
}

/// Reduced homology dimensions of the augmented chain complex
/// `.. -> C_1 -> C_0 -> k -> 0`: in degree d the dimension is
/// `#faces_d - rank(boundary_d) - rank(boundary_{d+1})`, with degree 0
/// counting components minus one and degree -1 vanishing whenever the vertex
/// set is nonempty.
pub fn reduced_homology_dims(c: &SimplicialComplex, field: Field) -> HomologyDims {
    let top = c.dim();
    if top < 0 {
        // no faces at all: only the empty face survives
        return HomologyDims { dims: vec![1] };
    }
    let top = top as usize;
    // ranks[d] = rank of boundary_d for d = 0..=top; boundary_{top+1} = 0
    let mut ranks = Vec::with_capacity(top + 2);
    for d in 0..=top {
        let m = boundary_matrix(c, d).expect("dimension within range");
        ranks.push(rank_exact(&m, field));
    }
    ranks.push(0);
    let mut dims = Vec::with_capacity(top + 2);
    dims.push(1 - ranks[0] as Count); // degree -1: 1 - rank of augmentation
    for d in 0..=top {
        let f = c.face_count(d) as Count;
        // image of the higher boundary lies in the kernel of the lower one,
        // so this never underflows
        let dim = f
            .checked_sub(ranks[d] as Count)
            .and_then(|v| v.checked_sub(ranks[d + 1] as Count))
            .expect("boundary ranks exceed chain dimension");
        dims.push(dim);
    }
    HomologyDims { dims }
}
