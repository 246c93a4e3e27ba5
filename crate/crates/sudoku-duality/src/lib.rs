//! A primal/dual pair of constraint problems over generalized Sudoku
//! boards, built on pair-difference matrices.
//!
//! A board of side `n` has `n * n` cells grouped three ways (rows,
//! columns, and a third family such as blocks); each group must hold
//! pairwise distinct values. Cells take values in `1..=n` or stay
//! empty, modeled by an adjoined infinity that never equals anything,
//! including itself ([`extint`]). The primal problem asks for a
//! feasible board with as few empty cells as possible; the dual asks
//! for a sign vector over all in-group cell pairs whose per-cell
//! scores are distinct within every group and which "hits" as many
//! clues as possible. Sign certificates and complete boards translate
//! into each other ([`duality`]); the dual objective never exceeds
//! zero, the primal never falls below it, and the two meet exactly
//! when the puzzle has a complete solution.
//!
//! Modules:
//! - [`extint`]: integers with an adjoined non-self-equal infinity;
//! - [`pairdiff`]: pair-difference matrices, slot permutations, and
//!   group systems;
//! - [`problems`]: boards, certificates, instances, both objectives
//!   and feasibility tests;
//! - [`duality`]: the board/certificate transforms and gap reports;
//! - [`solver`]: candidate propagation plus branch-and-bound descent;
//! - [`oracle`]: brute-force optima and the theorem-sweep ledger;
//! - [`format`]: text formats for puzzles, boards, and certificates.
//!
//! The `sudoku-duality` binary exposes all of this on the command
//! line; the `examples/` directory walks through each capability.

pub mod duality;
pub mod error;
pub mod extint;
pub mod format;
pub mod oracle;
pub mod pairdiff;
pub mod problems;
pub mod solver;

pub use duality::{dual_to_primal, gap_report, primal_to_dual, GapReport, Optimum};
pub use error::Error;
pub use extint::ExtInt;
pub use pairdiff::{
    pair_rows, standard_perms, triangular_size, wrap_diagonals, GroupSystem, Permutation,
};
pub use problems::{Board, DualCertificate, Given, PrimalInstance};
pub use solver::{propagate, solve, CandidateGrid, DescentTrace, Solution, SolveOutcome};

/// Fixtures shared by tests across modules: a complete side-4 board
/// and the matching sign certificate.
#[cfg(test)]
pub(crate) mod testdata {
    /// Row-major complete side-4 board feasible for rows, columns,
    /// and blocks.
    pub const GOLDEN_GRID: [i64; 16] = [3, 4, 1, 2, 2, 1, 3, 4, 1, 2, 4, 3, 4, 3, 2, 1];

    /// The difference signs of [`GOLDEN_GRID`] under the row family,
    /// group by group.
    pub const GOLDEN_SIGNS: [i64; 24] = [
        -1, 1, 1, 1, 1, -1, // row 1: 3 4 1 2
        1, -1, -1, -1, -1, -1, // row 2: 2 1 3 4
        -1, -1, -1, -1, -1, 1, // row 3: 1 2 4 3
        1, 1, 1, 1, 1, 1, // row 4: 4 3 2 1
    ];
}
