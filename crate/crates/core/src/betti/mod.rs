//! Graded Betti numbers of edge ideals: the homology-backed Hochster oracle,
//! the linear-strand formulas, and the lex-segment bounds.

mod hochster;
mod lex;
mod resolution;
mod strand;

pub use hochster::{betti_table_hochster, HochsterOracle, DEFAULT_ORACLE_CAP};
pub use lex::{lex_segment, triangle_lower_bound, upper_bound, LexSegment};
pub use resolution::{has_linear_resolution, has_linear_resolution_certified, LinearResolutionCertificate};
pub use strand::{
    beta_2_4_exact, beta_3_5_exact, closed_form_complete, closed_form_complete_bipartite,
    linear_strand_components, linear_strand_no_c4, lower_bound, strand_report, StrandReport,
    StrandRow,
};

use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use thiserror::Error;

use crate::Count;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EngineError {
    #[error("graph on {n} vertices exceeds the oracle cap of {cap}; raise it with --cap")]
    OracleCapExceeded { n: usize, cap: usize },
    #[error("{num_edges} generators exceed the {total} degree-2 monomials in {n} variables")]
    LexSegmentTooLong {
        num_edges: usize,
        n: usize,
        total: usize,
    },
    #[error("internal invariant violated in {check}: {details}")]
    InvariantViolation { check: String, details: String },
}

/// Sparse table of graded Betti numbers: `(i, j) -> beta_{i,j}`, zero entries
/// omitted. `n` is the ambient variable count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiTable {
    n: usize,
    entries: BTreeMap<(u32, u32), Count>,
}

impl BettiTable {
    /// Builds a table, dropping explicit zeros and enforcing the structural
    /// constraints of an ideal generated in degree 2: entries live in
    /// `2 <= i + 2 <= j <= n`.
    pub fn new(n: usize, entries: impl IntoIterator<Item = ((u32, u32), Count)>) -> BettiTable {
        let mut map = BTreeMap::new();
        for ((i, j), beta) in entries {
            if beta == 0 {
                continue;
            }
            assert!(
                j >= i + 2 && (j as usize) <= n,
                "entry ({i},{j}) outside the valid region for n = {n}"
            );
            *map.entry((i, j)).or_insert(0) += beta;
        }
        BettiTable { n, entries: map }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: u32, j: u32) -> Count {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// Entry on the linear strand, `beta_{i, i+2}`.
    pub fn linear(&self, i: u32) -> Count {
        self.get(i, i + 2)
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Nonzero entries sorted by `(i, j)`.
    pub fn iter(&self) -> impl Iterator<Item = ((u32, u32), Count)> + '_ {
        self.entries.iter().map(|(&k, &v)| (k, v))
    }

    /// Largest homological index with a nonzero entry.
    pub fn max_i(&self) -> Option<u32> {
        self.entries.keys().map(|&(i, _)| i).max()
    }

    /// True iff every nonzero entry sits on the linear strand.
    pub fn off_strand_vanishes(&self) -> bool {
        self.entries.keys().all(|&(i, j)| j == i + 2)
    }

    /// Total number of minimal generators in homological degree `i`.
    pub fn total(&self, i: u32) -> Count {
        self.entries
            .iter()
            .filter(|&(&(ei, _), _)| ei == i)
            .map(|(_, &v)| v)
            .sum()
    }
}

#[derive(Debug, Serialize, Deserialize)]
struct BettiEntryJson {
    i: u32,
    j: u32,
    beta: Count,
}

#[derive(Debug, Serialize, Deserialize)]
struct BettiTableJson {
    n: usize,
    entries: Vec<BettiEntryJson>,
}

impl Serialize for BettiTable {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let dto = BettiTableJson {
            n: self.n,
            entries: self
                .iter()
                .map(|((i, j), beta)| BettiEntryJson { i, j, beta })
                .collect(),
        };
        dto.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for BettiTable {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let dto = BettiTableJson::deserialize(deserializer)?;
        Ok(BettiTable::new(
            dto.n,
            dto.entries.into_iter().map(|e| ((e.i, e.j), e.beta)),
        ))
    }
}
