//! Lex-segment machinery: the largest degree-2 monomials, the resulting
//! upper bound on the linear strand, and the derived lower bound on the
//! triangle count.
//!
//! An ideal with the same Hilbert function as the edge ideal but spanned by
//! lexicographically largest monomials maximizes every graded Betti number;
//! its strand values come from the Eliahou-Kervaire resolution and depend
//! only on the edge and vertex counts.

use serde::{Deserialize, Serialize};

use super::EngineError;
use crate::comb::binomial;
use crate::graph::Graph;
use crate::Count;

/// The `num_edges` lexicographically largest degree-2 monomials in
/// `n` variables. Monomial `(p, q)` with `p <= q` (1-based) stands for
/// `x_p * x_q`; `u[t]` is the larger index `q` of the t-th monomial.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LexSegment {
    pub num_edges: usize,
    pub n: usize,
    /// Number of complete leading-variable blocks in the segment.
    pub j: usize,
    /// Length of the partial block led by variable `j + 1`.
    pub l: usize,
    pub monomials: Vec<(u32, u32)>,
    pub u: Vec<u32>,
}

/// Builds the lex segment: full blocks `x_v^2, x_v x_{v+1}, .., x_v x_n` for
/// `v = 1..=j`, then the first `l` monomials of the block led by `x_{j+1}`.
pub fn lex_segment(num_edges: usize, n: usize) -> Result<LexSegment, EngineError> {
    let total = n * (n + 1) / 2;
    if num_edges > total {
        return Err(EngineError::LexSegmentTooLong { num_edges, n, total });
    }
    let mut j = 0usize;
    let mut acc = 0usize;
    while acc + (n - j) < num_edges {
        acc += n - j;
        j += 1;
    }
    let l = num_edges - acc;
    let mut monomials = Vec::with_capacity(num_edges);
    for v in 1..=j {
        for q in v..=n {
            monomials.push((v as u32, q as u32));
        }
    }
    for q in j + 1..j + 1 + l {
        monomials.push((j as u32 + 1, q as u32));
    }
    debug_assert_eq!(monomials.len(), num_edges);
    let u = monomials.iter().map(|&(_, q)| q).collect();
    Ok(LexSegment {
        num_edges,
        n,
        j,
        l,
        monomials,
        u,
    })
}

/// Upper bound on `beta_{i,i+2}`: the strand value of the lex ideal with the
/// same number of degree-2 generators, `sum_t C(u_t - 1, i)`. Depends only on
/// the edge and vertex counts of `g`.
pub fn upper_bound(g: &Graph, i: u32) -> Count {
    let segment = lex_segment(g.edge_count(), g.n())
        .expect("a simple graph never has more edges than degree-2 monomials");
    let mut total: Count = 0;
    for &u in &segment.u {
        total = total
            .checked_add(binomial(u as u64 - 1, i as u64))
            .expect("lex upper bound exceeds 64-bit count range");
    }
    total
}

/// Lower bound on the number of triangles, obtained by playing the exact
/// i = 1 strand formula against the lex upper bound and clamping at zero.
/// The binomial `C(j, j-3)` is read as `C(j, 3)` for `j >= 3` and 0 below.
pub fn triangle_lower_bound(g: &Graph) -> Count {
    let segment = lex_segment(g.edge_count(), g.n())
        .expect("a simple graph never has more edges than degree-2 monomials");
    let (j, l) = (segment.j as i128, segment.l as i128);
    let n = g.n() as u64;
    let mut wedges: i128 = 0;
    for v in g.vertices() {
        wedges += binomial(g.degree(v).expect("vertex in range") as u64, 2) as i128;
    }
    let value = wedges - j * binomial(n, 2) as i128 + binomial(j as u64, 3) as i128
        - (l * j + l * (l - 1) / 2);
    value.max(0) as Count
}
