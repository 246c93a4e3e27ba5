//! Problem instances: boards, clues, certificates, and the
//! feasibility sets and objectives of both optimization problems.
//!
//! The primal side minimizes the number of empty cells over boards
//! whose groups contain no repeated value and whose clue cells match.
//! The dual side maximizes, over sign certificates whose score vector
//! keeps every group's entries pairwise distinct, the number of clues
//! hit by the score encoding, minus the clue count.

use crate::error::Error;
use crate::extint::ExtInt;
use crate::pairdiff::{standard_perms, GroupSystem, Permutation};
use std::fmt;

/// A clue: `cell` (zero-based, row-major) must hold `value`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Given {
    pub cell: usize,
    pub value: i64,
}

impl Given {
    pub fn new(cell: usize, value: i64) -> Self {
        Given { cell, value }
    }
}

/// An `n * n` board; each cell is a number or empty.
///
/// No range invariant is enforced here. Out-of-range values are
/// reported by the membership diagnostics instead, so near-miss
/// boards can be represented and displayed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Board {
    cells: Vec<ExtInt>,
}

impl Board {
    pub fn from_cells(cells: Vec<ExtInt>) -> Self {
        Board { cells }
    }

    pub fn from_values(values: &[i64]) -> Self {
        Board {
            cells: values.iter().map(|&v| ExtInt::Fin(v)).collect(),
        }
    }

    pub fn from_partial(values: &[Option<i64>]) -> Self {
        Board {
            cells: values
                .iter()
                .map(|v| v.map_or(ExtInt::Inf, ExtInt::Fin))
                .collect(),
        }
    }

    /// All-empty board with the given cell count.
    pub fn empty(cells: usize) -> Self {
        Board {
            cells: vec![ExtInt::Inf; cells],
        }
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn cell(&self, i: usize) -> ExtInt {
        self.cells[i]
    }

    pub fn cells(&self) -> &[ExtInt] {
        &self.cells
    }

    pub fn empty_count(&self) -> usize {
        self.cells.iter().filter(|c| c.is_inf()).count()
    }

    pub fn is_complete(&self) -> bool {
        self.cells.iter().all(|c| !c.is_inf())
    }
}

/// One sign per pair row of the first grouping family, group-major in
/// pair-lexicographic order. Entries are exactly -1 or +1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualCertificate {
    lam: Vec<i64>,
}

impl DualCertificate {
    pub fn new(lam: Vec<i64>) -> Result<Self, Error> {
        for (i, &v) in lam.iter().enumerate() {
            if v != 1 && v != -1 {
                return Err(Error::CertificateSign {
                    component: i,
                    value: v,
                });
            }
        }
        Ok(DualCertificate { lam })
    }

    pub fn len(&self) -> usize {
        self.lam.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lam.is_empty()
    }

    pub fn signs(&self) -> &[i64] {
        &self.lam
    }
}

/// Why a board fails primal feasibility. Family and row indices are
/// one-based for families (1 = rows map, 2 = second, 3 = third) and
/// zero-based for cells.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FpViolation {
    WrongLength {
        expected: usize,
        got: usize,
    },
    ValueOutOfRange {
        cell: usize,
        value: i64,
    },
    /// Two cells of one group hold the same value.
    EqualPair {
        family: usize,
        row: usize,
        cells: (usize, usize),
        value: i64,
    },
    /// A clue cell does not hold its clue; empty also mismatches.
    GivenMismatch {
        cell: usize,
        expected: i64,
        found: ExtInt,
    },
}

impl fmt::Display for FpViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FpViolation::WrongLength { expected, got } => {
                write!(f, "board has {got} cells, expected {expected}")
            }
            FpViolation::ValueOutOfRange { cell, value } => {
                write!(f, "cell {cell} holds {value}, outside the value range")
            }
            FpViolation::EqualPair {
                family,
                row,
                cells,
                value,
            } => write!(
                f,
                "family {family} row {row}: cells {} and {} both hold {value}",
                cells.0, cells.1
            ),
            FpViolation::GivenMismatch {
                cell,
                expected,
                found,
            } => write!(f, "clue cell {cell} should hold {expected}, found {found}"),
        }
    }
}

/// A primal instance: board side `n`, three grouping families given
/// as slot-to-cell permutations, and an ordered clue list.
#[derive(Debug, Clone, PartialEq)]
pub struct PrimalInstance {
    n: usize,
    systems: [GroupSystem; 3],
    givens: Vec<Given>,
    clue_at: Vec<Option<i64>>,
}

impl PrimalInstance {
    /// Validates and builds an instance. Rejects `n < 2`, permutations
    /// not covering the board, clue cells out of range or repeated,
    /// and clue values outside `1..=n`.
    pub fn new(
        n: usize,
        perms: [Permutation; 3],
        givens: Vec<Given>,
    ) -> Result<Self, Error> {
        if n < 2 {
            return Err(Error::SideTooSmall { n });
        }
        let cells = n * n;
        for p in &perms {
            if p.len() != cells {
                return Err(Error::InvalidPermutation {
                    len: cells,
                    detail: format!("covers {} cells, board has {cells}", p.len()),
                });
            }
        }
        let mut clue_at = vec![None; cells];
        for g in &givens {
            if g.cell >= cells {
                return Err(Error::GivenOutOfRange {
                    cell: g.cell,
                    cells,
                });
            }
            if clue_at[g.cell].is_some() {
                return Err(Error::DuplicateGiven { cell: g.cell });
            }
            if g.value < 1 || g.value > n as i64 {
                return Err(Error::GivenValueOutOfRange {
                    cell: g.cell,
                    value: g.value,
                    n,
                });
            }
            clue_at[g.cell] = Some(g.value);
        }
        let [p1, p2, p3] = perms;
        Ok(PrimalInstance {
            n,
            systems: [
                GroupSystem::new(n, p1),
                GroupSystem::new(n, p2),
                GroupSystem::new(n, p3),
            ],
            givens,
            clue_at,
        })
    }

    /// Rows, columns, and square blocks; `n` must be a perfect square.
    pub fn standard(n: usize, givens: Vec<Given>) -> Result<Self, Error> {
        let (p1, p2, p3) = standard_perms(n);
        let p3 = p3.ok_or(Error::NoBlockLayout { n })?;
        PrimalInstance::new(n, [p1, p2, p3], givens)
    }

    /// Rows, columns, and an explicit third family.
    pub fn with_third_family(
        n: usize,
        third: Permutation,
        givens: Vec<Given>,
    ) -> Result<Self, Error> {
        let (p1, p2, _) = standard_perms(n);
        PrimalInstance::new(n, [p1, p2, third], givens)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn cells(&self) -> usize {
        self.n * self.n
    }

    /// Pair rows per family, `n * n(n-1)/2`.
    pub fn rows(&self) -> usize {
        self.systems[0].rows()
    }

    pub fn givens(&self) -> &[Given] {
        &self.givens
    }

    pub fn clue(&self, cell: usize) -> Option<i64> {
        self.clue_at[cell]
    }

    /// Grouping family `r` for `r` in `1..=3`.
    pub fn system(&self, r: usize) -> &GroupSystem {
        assert!((1..=3).contains(&r), "families are numbered 1..=3");
        &self.systems[r - 1]
    }

    pub fn systems(&self) -> &[GroupSystem; 3] {
        &self.systems
    }

    /// The board holding exactly the clues, all other cells empty.
    pub fn given_board(&self) -> Board {
        Board::from_partial(&self.clue_at)
    }

    /// Number of empty cells; the primal objective.
    ///
    /// Panics when the board size does not match the instance.
    pub fn f_p(&self, b: &Board) -> usize {
        assert_eq!(b.len(), self.cells(), "board length mismatch");
        b.empty_count()
    }

    /// Primal feasibility: every cell in range or empty, no repeated
    /// value inside any group of any family, every clue matched.
    /// Malformed boards are infeasible, never an error.
    pub fn in_fp(&self, b: &Board) -> bool {
        if b.len() != self.cells() {
            return false;
        }
        let n = self.n as i64;
        for c in b.cells() {
            if let ExtInt::Fin(v) = c {
                if *v < 1 || *v > n {
                    return false;
                }
            }
        }
        for g in &self.givens {
            if !b.cell(g.cell).model_eq(ExtInt::Fin(g.value)) {
                return false;
            }
        }
        for sys in &self.systems {
            for r in 0..sys.rows() {
                let (a, c) = sys.row_cells(r);
                if b.cell(a).model_eq(b.cell(c)) {
                    return false;
                }
            }
        }
        true
    }

    /// All primal-feasibility violations, for diagnostics. Empty iff
    /// `in_fp` holds. A wrong-length board reports only that.
    pub fn fp_violations(&self, b: &Board) -> Vec<FpViolation> {
        if b.len() != self.cells() {
            return vec![FpViolation::WrongLength {
                expected: self.cells(),
                got: b.len(),
            }];
        }
        let mut out = Vec::new();
        let n = self.n as i64;
        for (i, c) in b.cells().iter().enumerate() {
            if let ExtInt::Fin(v) = c {
                if *v < 1 || *v > n {
                    out.push(FpViolation::ValueOutOfRange { cell: i, value: *v });
                }
            }
        }
        for g in &self.givens {
            if !b.cell(g.cell).model_eq(ExtInt::Fin(g.value)) {
                out.push(FpViolation::GivenMismatch {
                    cell: g.cell,
                    expected: g.value,
                    found: b.cell(g.cell),
                });
            }
        }
        for (fi, sys) in self.systems.iter().enumerate() {
            for r in 0..sys.rows() {
                let (a, c) = sys.row_cells(r);
                if b.cell(a).model_eq(b.cell(c)) {
                    out.push(FpViolation::EqualPair {
                        family: fi + 1,
                        row: r,
                        cells: (a, c),
                        value: b.cell(a).finite().expect("equal cells are finite"),
                    });
                }
            }
        }
        out
    }

    /// A complete feasible board: no empty cell and `in_fp`.
    pub fn is_pp_solution(&self, b: &Board) -> bool {
        b.len() == self.cells() && b.is_complete() && self.in_fp(b)
    }

    /// Per-cell scores of a certificate under the first family.
    ///
    /// Panics when the certificate length does not match the
    /// instance's pair-row count.
    pub fn certificate_scores(&self, c: &DualCertificate) -> Vec<i64> {
        self.systems[0].apply_transpose(c.signs())
    }

    /// Dual objective: clues whose score equals the value encoding
    /// `2 value - (n + 1)`, minus the clue count. Always <= 0, and 0
    /// exactly when every clue is encoded.
    pub fn f_d(&self, c: &DualCertificate) -> i64 {
        let scores = self.certificate_scores(c);
        let shift = self.n as i64 + 1;
        let hit = self
            .givens
            .iter()
            .filter(|g| scores[g.cell] == 2 * g.value - shift)
            .count() as i64;
        hit - self.givens.len() as i64
    }

    /// Dual feasibility: the score vector of the certificate keeps
    /// the entries of every group of every family pairwise distinct.
    pub fn in_fd(&self, c: &DualCertificate) -> bool {
        let scores = self.certificate_scores(c);
        for sys in &self.systems {
            for r in 0..sys.rows() {
                let (a, b) = sys.row_cells(r);
                if scores[a] == scores[b] {
                    return false;
                }
            }
        }
        true
    }

    /// A feasible certificate encoding every clue: `in_fd` and
    /// `f_d == 0`.
    pub fn is_dp_solution(&self, c: &DualCertificate) -> bool {
        self.in_fd(c) && self.f_d(c) == 0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testdata::{GOLDEN_GRID, GOLDEN_SIGNS};
    use ExtInt::{Fin, Inf};

    fn rows_third(n: usize, givens: Vec<Given>) -> PrimalInstance {
        PrimalInstance::with_third_family(n, Permutation::identity(n * n), givens)
            .unwrap()
    }

    #[test]
    fn construction_validates_inputs() {
        assert!(rows_third(2, vec![Given::new(0, 1)]).in_fp(&Board::from_partial(&[
            Some(1),
            None,
            None,
            None
        ])));
        assert!(matches!(
            PrimalInstance::standard(4, vec![Given::new(0, 5)]),
            Err(Error::GivenValueOutOfRange { value: 5, .. })
        ));
        assert!(matches!(
            PrimalInstance::standard(4, vec![Given::new(16, 1)]),
            Err(Error::GivenOutOfRange { cell: 16, .. })
        ));
        assert!(matches!(
            PrimalInstance::standard(4, vec![Given::new(3, 1), Given::new(3, 2)]),
            Err(Error::DuplicateGiven { cell: 3 })
        ));
        assert!(matches!(
            PrimalInstance::standard(3, vec![]),
            Err(Error::NoBlockLayout { n: 3 })
        ));
        assert!(matches!(
            PrimalInstance::with_third_family(1, Permutation::identity(1), vec![]),
            Err(Error::SideTooSmall { n: 1 })
        ));
    }

    #[test]
    fn fully_clued_board_is_allowed() {
        let givens: Vec<Given> = (0..81)
            .map(|i| Given::new(i, (i % 9) as i64 + 1))
            .collect();
        let inst = PrimalInstance::standard(9, givens).unwrap();
        assert_eq!(inst.givens().len(), 81);
        assert_eq!(inst.given_board().empty_count(), 0);
    }

    #[test]
    fn primal_objective_counts_empty_cells() {
        let inst = PrimalInstance::standard(4, vec![]).unwrap();
        assert_eq!(inst.f_p(&Board::from_values(&GOLDEN_GRID)), 0);
        let mut cells: Vec<ExtInt> = GOLDEN_GRID.iter().map(|&v| Fin(v)).collect();
        cells[3] = Inf;
        cells[9] = Inf;
        assert_eq!(inst.f_p(&Board::from_cells(cells)), 2);

        let inst2 = rows_third(2, vec![]);
        assert_eq!(inst2.f_p(&Board::empty(4)), 4);
    }

    #[test]
    fn primal_membership() {
        let inst = rows_third(2, vec![Given::new(0, 1)]);
        assert!(inst.in_fp(&Board::from_partial(&[Some(1), None, None, None])));
        assert!(!inst.in_fp(&Board::empty(4)));
        let no_clue = rows_third(2, vec![]);
        assert!(!no_clue.in_fp(&Board::from_partial(&[Some(1), Some(1), None, None])));
    }

    #[test]
    fn membership_diagnostics_name_the_failure() {
        let inst = rows_third(2, vec![Given::new(0, 1)]);
        let gaps = inst.fp_violations(&Board::empty(4));
        assert_eq!(
            gaps,
            vec![FpViolation::GivenMismatch {
                cell: 0,
                expected: 1,
                found: Inf
            }]
        );

        let bad = inst.fp_violations(&Board::from_partial(&[Some(1), Some(1), None, Some(9)]));
        assert!(bad.contains(&FpViolation::ValueOutOfRange { cell: 3, value: 9 }));
        assert!(bad.iter().any(|v| matches!(
            v,
            FpViolation::EqualPair {
                family: 1,
                row: 0,
                cells: (0, 1),
                value: 1
            }
        )));

        assert_eq!(
            inst.fp_violations(&Board::empty(3)),
            vec![FpViolation::WrongLength { expected: 4, got: 3 }]
        );
        assert!(inst
            .fp_violations(&Board::from_partial(&[Some(1), Some(2), Some(2), Some(1)]))
            .is_empty());
    }

    #[test]
    fn complete_feasible_boards_solve_the_primal() {
        let inst = PrimalInstance::standard(4, vec![]).unwrap();
        let grid = Board::from_values(&GOLDEN_GRID);
        assert!(inst.is_pp_solution(&grid));

        let pinned = PrimalInstance::standard(4, vec![Given::new(0, 4)]).unwrap();
        assert!(!pinned.is_pp_solution(&grid));

        let mut cells: Vec<ExtInt> = GOLDEN_GRID.iter().map(|&v| Fin(v)).collect();
        cells[5] = Inf;
        assert!(!inst.is_pp_solution(&Board::from_cells(cells)));
    }

    #[test]
    fn certificates_reject_non_signs() {
        assert!(DualCertificate::new(vec![1, -1, 1]).is_ok());
        assert_eq!(
            DualCertificate::new(vec![1, 0]),
            Err(Error::CertificateSign {
                component: 1,
                value: 0
            })
        );
        assert!(DualCertificate::new(vec![]).unwrap().is_empty());
    }

    #[test]
    fn dual_objective_counts_encoded_clues() {
        let free = rows_third(2, vec![]);
        let lam = DualCertificate::new(vec![-1, 1]).unwrap();
        assert_eq!(free.f_d(&lam), 0);

        let inst = rows_third(2, vec![Given::new(0, 1)]);
        assert_eq!(inst.f_d(&lam), 0);
        let all_plus = DualCertificate::new(vec![1, 1]).unwrap();
        assert_eq!(inst.f_d(&all_plus), -1);
    }

    #[test]
    fn dual_membership() {
        let inst = rows_third(2, vec![]);
        assert!(inst.in_fd(&DualCertificate::new(vec![-1, 1]).unwrap()));
        assert!(inst.in_fd(&DualCertificate::new(vec![1, -1]).unwrap()));
        assert!(!inst.in_fd(&DualCertificate::new(vec![1, 1]).unwrap()));
        assert!(!inst.in_fd(&DualCertificate::new(vec![-1, -1]).unwrap()));
    }

    #[test]
    fn dual_solutions_encode_every_clue() {
        let inst = rows_third(2, vec![Given::new(0, 1)]);
        assert!(inst.is_dp_solution(&DualCertificate::new(vec![-1, 1]).unwrap()));
        assert!(!inst.is_dp_solution(&DualCertificate::new(vec![-1, -1]).unwrap()));
        assert!(!inst.is_dp_solution(&DualCertificate::new(vec![1, -1]).unwrap()));

        let free4 = PrimalInstance::standard(4, vec![]).unwrap();
        let lam = DualCertificate::new(GOLDEN_SIGNS.to_vec()).unwrap();
        assert!(free4.is_dp_solution(&lam));
    }

    #[test]
    fn scores_follow_the_first_family() {
        let inst = PrimalInstance::standard(4, vec![]).unwrap();
        let lam = DualCertificate::new(GOLDEN_SIGNS.to_vec()).unwrap();
        let scores = inst.certificate_scores(&lam);
        assert_eq!(&scores[..4], &[1, 3, -3, -1]);
        assert_eq!(&scores[4..8], &[-1, -3, 1, 3]);
    }
}
