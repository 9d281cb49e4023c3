//! Fröberg's criterion: the edge ideal has a linear resolution exactly when
//! the complement graph is chordal.

use serde::{Deserialize, Serialize};

use super::{EngineError, HochsterOracle};
use crate::graph::Graph;
use crate::homology::Field;

/// Whether the edge ideal of `g` has a linear resolution, decided purely
/// graph-theoretically. An edgeless graph has the zero ideal and counts as
/// vacuously linear (its complement is complete, hence chordal).
pub fn has_linear_resolution(g: &Graph) -> bool {
    g.complement().is_chordal()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinearResolutionCertificate {
    pub chordal_complement: bool,
    /// Every oracle entry off the linear strand vanishes.
    pub off_strand_vanishes: bool,
}

/// Chordality answer plus the oracle certificate. The two must agree; a
/// disagreement is reported as an invariant violation rather than returned.
pub fn has_linear_resolution_certified(
    g: &Graph,
    field: Field,
    cap: usize,
) -> Result<LinearResolutionCertificate, EngineError> {
    let chordal_complement = has_linear_resolution(g);
    let table = HochsterOracle::new(field).with_cap(cap).compute(g)?;
    let off_strand_vanishes = table.off_strand_vanishes();
    if chordal_complement != off_strand_vanishes {
        return Err(EngineError::InvariantViolation {
            check: "linear resolution certificate".to_string(),
            details: format!(
                "chordal complement = {chordal_complement} but off-strand vanishing = {off_strand_vanishes}"
            ),
        });
    }
    Ok(LinearResolutionCertificate {
        chordal_complement,
        off_strand_vanishes,
    })
}
