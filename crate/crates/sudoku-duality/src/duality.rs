//! Transforms between complete boards and sign certificates, and
//! reporting of the optimum pair.
//!
//! A complete board with no tied pair in the first family induces the
//! certificate of its difference signs. Conversely every certificate
//! induces the board `(scores + (n+1)) / 2`, exact by the score
//! parity invariant. On solutions the two maps are mutually inverse.

use crate::error::Error;
use crate::extint::{sgn_vec, ExtInt};
use crate::problems::{Board, DualCertificate, PrimalInstance};
use std::fmt;

/// Sign certificate of a complete board's first-family differences.
///
/// Requires completeness and no zero difference in the first family,
/// the weakest condition under which every sign exists. When the
/// board is a complete feasible solution, the result encodes every
/// clue and is dual-feasible.
pub fn primal_to_dual(
    inst: &PrimalInstance,
    b: &Board,
) -> Result<DualCertificate, Error> {
    assert_eq!(b.len(), inst.cells(), "board length mismatch");
    for (i, c) in b.cells().iter().enumerate() {
        if c.is_inf() {
            return Err(Error::EmptyCell { cell: i });
        }
    }
    let diffs = inst.system(1).apply(b.cells());
    let signs = sgn_vec(&diffs)?;
    Ok(DualCertificate::new(signs).expect("signs are -1 or +1"))
}

/// Board encoded by a certificate: `(scores + (n+1)) / 2` cellwise.
///
/// Total on well-formed certificates; the division is exact because
/// each cell's score is a sum of `n-1` odd contributions, so adding
/// `n+1` always yields an even number. Values land in `1..=n` when
/// the certificate is dual-feasible, not in general.
pub fn dual_to_primal(inst: &PrimalInstance, c: &DualCertificate) -> Board {
    let shift = inst.n() as i64 + 1;
    let cells = inst
        .certificate_scores(c)
        .into_iter()
        .map(|y| {
            let v = y + shift;
            assert!(v % 2 == 0, "score parity broken: {y} + {shift} is odd");
            ExtInt::Fin(v / 2)
        })
        .collect();
    Board::from_cells(cells)
}

/// An exact optimum, or the marker that the feasible set is empty.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Optimum {
    Value(i64),
    Unsolvable,
}

impl fmt::Display for Optimum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Optimum::Value(v) => write!(f, "{v}"),
            Optimum::Unsolvable => write!(f, "UNSOLVABLE"),
        }
    }
}

/// The primal/dual optimum pair and their gap, with notes flagging
/// the zero-gap and infeasible cases.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GapReport {
    pub v_p: Optimum,
    pub v_d: Optimum,
    /// `v_p - v_d` when both optima exist.
    pub gap: Option<i64>,
    pub notes: Vec<String>,
}

/// Assembles a report from exact optima.
///
/// Panics on a primal optimum below zero, a dual optimum above zero,
/// or a negative gap; exact computations cannot produce those.
pub fn gap_report(v_p: Optimum, v_d: Optimum) -> GapReport {
    if let Optimum::Value(p) = v_p {
        assert!(p >= 0, "primal optimum {p} below zero");
    }
    if let Optimum::Value(d) = v_d {
        assert!(d <= 0, "dual optimum {d} above zero");
    }
    let gap = match (v_p, v_d) {
        (Optimum::Value(p), Optimum::Value(d)) => Some(p - d),
        _ => None,
    };
    if let Some(g) = gap {
        assert!(g >= 0, "negative gap {g}");
    }
    let mut notes = Vec::new();
    match (v_p, v_d) {
        (Optimum::Unsolvable, _) => {
            notes.push("no feasible board: the clues conflict".to_string());
        }
        (_, Optimum::Unsolvable) => {
            notes.push(
                "no feasible certificate exists for this grouping".to_string(),
            );
        }
        (Optimum::Value(0), Optimum::Value(0)) => {
            notes.push(
                "optima agree at zero: the clues extend to a complete solution"
                    .to_string(),
            );
        }
        _ => {
            notes.push(
                "positive gap: no complete extension, although both sides are feasible"
                    .to_string(),
            );
        }
    }
    GapReport {
        v_p,
        v_d,
        gap,
        notes,
    }
}

impl fmt::Display for GapReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "v_P = {}", self.v_p)?;
        writeln!(f, "v_D = {}", self.v_d)?;
        match self.gap {
            Some(g) => writeln!(f, "gap = {g}")?,
            None => writeln!(f, "gap = undefined")?,
        }
        for n in &self.notes {
            writeln!(f, "note: {n}")?;
        }
        Ok(())
    }
}
