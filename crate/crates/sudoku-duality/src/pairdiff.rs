//! Pair-difference systems over permuted cell groups.
//!
//! For a group of `n` cells the difference operator maps values
//! `x_1..x_n` to `x_p - x_q` over all index pairs `p < q` in
//! lexicographic order, giving `n(n-1)/2` rows. A board of `n` groups
//! of `n` cells stacks `n` such blocks; a slot-to-cell permutation
//! decides which board cells feed which block. Rows, columns, and
//! square blocks are all the same operator under different
//! permutations.

use crate::error::Error;
use crate::extint::ExtInt;
use std::fmt::Write as _;

/// Number of unordered pairs from `n` items, `n(n-1)/2`.
///
/// Panics when `n` is zero; a group has at least one cell.
pub fn triangular_size(n: usize) -> usize {
    assert!(n >= 1, "group size must be positive");
    n * (n - 1) / 2
}

/// The pair `(p, q)` with `1 <= p < q <= n` for each operator row, in
/// lexicographic order: (1,2), (1,3), ..., (n-1,n).
pub fn pair_rows(n: usize) -> Vec<(usize, usize)> {
    let mut rows = Vec::with_capacity(triangular_size(n));
    for p in 1..=n {
        for q in (p + 1)..=n {
            rows.push((p, q));
        }
    }
    rows
}

/// All pair differences `x_p - x_q`, `p < q`, of one finite group.
pub fn pair_differences(values: &[i64]) -> Vec<i64> {
    pair_rows(values.len())
        .into_iter()
        .map(|(p, q)| values[p - 1] - values[q - 1])
        .collect()
}

/// All pair differences of one group with possibly empty entries.
pub fn pair_differences_ext(values: &[ExtInt]) -> Vec<ExtInt> {
    pair_rows(values.len())
        .into_iter()
        .map(|(p, q)| values[p - 1] + -values[q - 1])
        .collect()
}

/// Adjoint of the single-group difference operator: per-cell score
/// `y_i = sum of lam over rows where i is first - sum where i is second`.
pub fn pair_scores(n: usize, lam: &[i64]) -> Vec<i64> {
    assert_eq!(lam.len(), triangular_size(n), "one multiplier per pair row");
    let mut scores = vec![0i64; n];
    for (r, (p, q)) in pair_rows(n).into_iter().enumerate() {
        scores[p - 1] += lam[r];
        scores[q - 1] -= lam[r];
    }
    scores
}

/// A bijective slot-to-cell map, stored zero-based.
///
/// Slot `i` of the grouped layout reads board cell `map[i]`. Groups
/// are consecutive slot ranges, so the permutation alone decides the
/// grouping geometry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Permutation {
    map: Vec<usize>,
}

impl Permutation {
    pub fn identity(len: usize) -> Self {
        Permutation {
            map: (0..len).collect(),
        }
    }

    /// Builds from a zero-based image vector, checking bijectivity.
    pub fn from_zero_based(map: Vec<usize>) -> Result<Self, Error> {
        let len = map.len();
        let mut seen = vec![false; len];
        for (slot, &cell) in map.iter().enumerate() {
            if cell >= len {
                return Err(Error::InvalidPermutation {
                    len,
                    detail: format!("slot {slot} maps to {cell}, out of range"),
                });
            }
            if seen[cell] {
                return Err(Error::InvalidPermutation {
                    len,
                    detail: format!("cell {cell} is hit twice"),
                });
            }
            seen[cell] = true;
        }
        Ok(Permutation { map })
    }

    /// Builds from a one-based image vector, as written in files.
    pub fn from_one_based(map: &[usize]) -> Result<Self, Error> {
        let len = map.len();
        let mut zero = Vec::with_capacity(len);
        for (slot, &cell) in map.iter().enumerate() {
            if cell == 0 || cell > len {
                return Err(Error::InvalidPermutation {
                    len,
                    detail: format!("slot {} maps to {cell}, out of range 1..={len}", slot + 1),
                });
            }
            zero.push(cell - 1);
        }
        Permutation::from_zero_based(zero)
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    /// Board cell read by the given slot.
    pub fn cell(&self, slot: usize) -> usize {
        self.map[slot]
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(i, &c)| i == c)
    }

    pub fn to_one_based(&self) -> Vec<usize> {
        self.map.iter().map(|&c| c + 1).collect()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.map
    }
}

/// The difference operator of all `n` groups of an `n * n` board
/// under one slot-to-cell permutation.
///
/// Row `r` belongs to group `r / triangular_size(n)` and computes the
/// difference of the two board cells cached in `row_cells`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupSystem {
    n: usize,
    perm: Permutation,
    row_cells: Vec<(usize, usize)>,
}

impl GroupSystem {
    /// Panics when the permutation does not cover an `n * n` board;
    /// callers pair sizes and permutations at construction time.
    pub fn new(n: usize, perm: Permutation) -> Self {
        assert_eq!(perm.len(), n * n, "permutation must cover the board");
        let s = triangular_size(n);
        let pairs = pair_rows(n);
        let mut row_cells = Vec::with_capacity(n * s);
        for g in 0..n {
            for &(p, q) in &pairs {
                row_cells.push((perm.cell(g * n + p - 1), perm.cell(g * n + q - 1)));
            }
        }
        GroupSystem { n, perm, row_cells }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of operator rows, `n * n(n-1)/2`.
    pub fn rows(&self) -> usize {
        self.row_cells.len()
    }

    /// Number of board cells, `n * n`.
    pub fn cells(&self) -> usize {
        self.n * self.n
    }

    pub fn perm(&self) -> &Permutation {
        &self.perm
    }

    /// The two board cells differenced by a row, zero-based.
    pub fn row_cells(&self, row: usize) -> (usize, usize) {
        self.row_cells[row]
    }

    /// Group index and in-group pair of a row; the pair is one-based.
    pub fn row_info(&self, row: usize) -> (usize, (usize, usize)) {
        let s = triangular_size(self.n);
        let pairs = pair_rows(self.n);
        (row / s, pairs[row % s])
    }

    /// Zero-based board cells of one group, in slot order.
    pub fn group_cells(&self, group: usize) -> Vec<usize> {
        (0..self.n)
            .map(|p| self.perm.cell(group * self.n + p))
            .collect()
    }

    /// All row differences of a board with possibly empty cells.
    pub fn apply(&self, x: &[ExtInt]) -> Vec<ExtInt> {
        assert_eq!(x.len(), self.cells(), "board length mismatch");
        self.row_cells.iter().map(|&(a, b)| x[a] + -x[b]).collect()
    }

    /// All row differences of a fully numeric board.
    pub fn apply_finite(&self, x: &[i64]) -> Vec<i64> {
        assert_eq!(x.len(), self.cells(), "board length mismatch");
        self.row_cells.iter().map(|&(a, b)| x[a] - x[b]).collect()
    }

    /// Adjoint: per-cell scores of a row multiplier vector.
    pub fn apply_transpose(&self, lam: &[i64]) -> Vec<i64> {
        assert_eq!(lam.len(), self.rows(), "multiplier length mismatch");
        let mut scores = vec![0i64; self.cells()];
        for (r, &(a, b)) in self.row_cells.iter().enumerate() {
            scores[a] += lam[r];
            scores[b] -= lam[r];
        }
        scores
    }

    /// Dense matrix dump: one line per row, entries -1, 0, or 1
    /// separated by single spaces.
    pub fn render_matrix(&self) -> String {
        let cells = self.cells();
        let mut out = String::new();
        for &(a, b) in &self.row_cells {
            for c in 0..cells {
                if c > 0 {
                    out.push(' ');
                }
                let entry = if c == a {
                    1
                } else if c == b {
                    -1
                } else {
                    0
                };
                let _ = write!(out, "{entry}");
            }
            out.push('\n');
        }
        out
    }
}

/// The three standard groupings of an `n * n` board, as slot-to-cell
/// permutations: rows (identity), columns, and, when `n` is a perfect
/// square, the `sqrt(n) * sqrt(n)` blocks.
pub fn standard_perms(n: usize) -> (Permutation, Permutation, Option<Permutation>) {
    let rows = Permutation::identity(n * n);
    let mut cols = Vec::with_capacity(n * n);
    for g in 0..n {
        for p in 0..n {
            cols.push(p * n + g);
        }
    }
    let cols = Permutation::from_zero_based(cols).expect("columns map is bijective");
    let blocks = exact_sqrt(n).map(|m| {
        let mut map = Vec::with_capacity(n * n);
        for g in 0..n {
            let (br, bc) = (g / m, g % m);
            for p in 0..n {
                let (ir, ic) = (p / m, p % m);
                map.push((br * m + ir) * n + (bc * m + ic));
            }
        }
        Permutation::from_zero_based(map).expect("blocks map is bijective")
    });
    (rows, cols, blocks)
}

/// Broken-diagonal grouping: group `g` holds cell `(r, (r + g) mod n)`
/// of each row `r`. Works for every `n`, unlike square blocks.
pub fn wrap_diagonals(n: usize) -> Permutation {
    let mut map = Vec::with_capacity(n * n);
    for g in 0..n {
        for r in 0..n {
            map.push(r * n + (r + g) % n);
        }
    }
    Permutation::from_zero_based(map).expect("diagonals map is bijective")
}

/// Integer square root when `n` is a perfect square.
pub fn exact_sqrt(n: usize) -> Option<usize> {
    let m = (n as f64).sqrt().round() as usize;
    (m * m == n).then_some(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use ExtInt::{Fin, Inf};

    #[test]
    fn pair_row_order_is_lexicographic() {
        assert_eq!(pair_rows(2), vec![(1, 2)]);
        assert_eq!(pair_rows(3), vec![(1, 2), (1, 3), (2, 3)]);
        assert_eq!(
            pair_rows(4),
            vec![(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]
        );
        assert_eq!(pair_rows(1), vec![]);
    }

    #[test]
    fn triangular_sizes() {
        assert_eq!(triangular_size(1), 0);
        assert_eq!(triangular_size(2), 1);
        assert_eq!(triangular_size(3), 3);
        assert_eq!(triangular_size(4), 6);
        assert_eq!(triangular_size(9), 36);
    }

    #[test]
    #[should_panic(expected = "positive")]
    fn zero_group_size_rejected() {
        triangular_size(0);
    }

    #[test]
    fn single_group_differences() {
        assert_eq!(pair_differences(&[3, 4, 1, 2]), vec![-1, 2, 1, 3, 2, -1]);
        assert_eq!(
            pair_differences_ext(&[Fin(1), Inf, Fin(2)]),
            vec![Inf, Fin(-1), Inf]
        );
    }

    #[test]
    fn single_group_scores() {
        assert_eq!(pair_scores(4, &[1, 1, 1, 1, 1, 1]), vec![3, 1, -1, -3]);
        assert_eq!(pair_scores(4, &[-1, 1, 1, 1, 1, -1]), vec![1, 3, -3, -1]);
        assert_eq!(pair_scores(2, &[1]), vec![1, -1]);
    }

    #[test]
    fn permutation_validation() {
        assert!(Permutation::from_zero_based(vec![1, 0, 2]).is_ok());
        assert!(matches!(
            Permutation::from_zero_based(vec![0, 0, 1]),
            Err(Error::InvalidPermutation { .. })
        ));
        assert!(matches!(
            Permutation::from_zero_based(vec![0, 3]),
            Err(Error::InvalidPermutation { .. })
        ));
        assert!(matches!(
            Permutation::from_one_based(&[0, 1]),
            Err(Error::InvalidPermutation { .. })
        ));
        let p = Permutation::from_one_based(&[2, 1, 3]).unwrap();
        assert_eq!(p.to_one_based(), vec![2, 1, 3]);
        assert!(Permutation::identity(5).is_identity());
        assert!(!p.is_identity());
    }

    #[test]
    fn standard_groupings() {
        let (rows, cols, blocks) = standard_perms(2);
        assert!(rows.is_identity());
        assert_eq!(cols.to_one_based(), vec![1, 3, 2, 4]);
        assert!(blocks.is_none());

        let (_, _, blocks) = standard_perms(4);
        let blocks = blocks.unwrap();
        let sys = GroupSystem::new(4, blocks);
        let mut g0 = sys.group_cells(0).iter().map(|c| c + 1).collect::<Vec<_>>();
        g0.sort_unstable();
        assert_eq!(g0, vec![1, 2, 5, 6]);

        let (_, _, blocks) = standard_perms(9);
        let sys = GroupSystem::new(9, blocks.unwrap());
        let mut g0 = sys.group_cells(0).iter().map(|c| c + 1).collect::<Vec<_>>();
        g0.sort_unstable();
        assert_eq!(g0, vec![1, 2, 3, 10, 11, 12, 19, 20, 21]);

        assert!(standard_perms(3).2.is_none());
        assert!(standard_perms(5).2.is_none());
    }

    #[test]
    fn wrap_diagonal_groups() {
        assert_eq!(wrap_diagonals(2).as_slice(), &[0, 3, 1, 2]);
        let sys = GroupSystem::new(3, wrap_diagonals(3));
        assert_eq!(sys.group_cells(0), vec![0, 4, 8]);
        assert_eq!(sys.group_cells(1), vec![1, 5, 6]);
        assert_eq!(sys.group_cells(2), vec![2, 3, 7]);
    }

    #[test]
    fn system_apply_and_transpose() {
        let sys = GroupSystem::new(2, Permutation::identity(4));
        assert_eq!(
            sys.apply(&[Fin(1), Fin(2), Fin(2), Fin(1)]),
            vec![Fin(-1), Fin(1)]
        );
        assert_eq!(
            sys.apply(&[Fin(1), Inf, Fin(2), Fin(1)]),
            vec![Inf, Fin(1)]
        );
        assert_eq!(sys.apply_finite(&[1, 2, 2, 1]), vec![-1, 1]);
        assert_eq!(sys.apply_transpose(&[1, -1]), vec![1, -1, -1, 1]);

        let sys = GroupSystem::new(4, Permutation::identity(16));
        let grid = [3, 4, 1, 2, 2, 1, 3, 4, 1, 2, 4, 3, 4, 3, 2, 1];
        let diffs = sys.apply_finite(&grid);
        assert_eq!(&diffs[..6], &[-1, 2, 1, 3, 2, -1]);
        assert_eq!(diffs.len(), 24);
    }

    #[test]
    fn matrix_dump_lists_signed_incidence() {
        let sys = GroupSystem::new(2, Permutation::identity(4));
        assert_eq!(sys.render_matrix(), "1 -1 0 0\n0 0 1 -1\n");
        let single = pair_rows(3);
        assert_eq!(single.len(), 3);
        let sys3 = GroupSystem::new(3, Permutation::identity(9));
        let dump = sys3.render_matrix();
        let first: Vec<&str> = dump.lines().take(3).collect();
        assert_eq!(first[0], "1 -1 0 0 0 0 0 0 0");
        assert_eq!(first[1], "1 0 -1 0 0 0 0 0 0");
        assert_eq!(first[2], "0 1 -1 0 0 0 0 0 0");
    }

    #[test]
    fn constant_boards_are_annihilated() {
        for n in 2..=6 {
            for perm in [
                Permutation::identity(n * n),
                standard_perms(n).1,
                wrap_diagonals(n),
            ] {
                let sys = GroupSystem::new(n, perm);
                let ones = vec![7i64; n * n];
                assert!(sys.apply_finite(&ones).iter().all(|&d| d == 0));
            }
        }
    }

    #[test]
    fn permuted_apply_reads_cells_through_the_map() {
        // columns of a 2x2 board: groups {1,3} and {2,4}
        let (_, cols, _) = standard_perms(2);
        let sys = GroupSystem::new(2, cols);
        assert_eq!(sys.apply_finite(&[1, 2, 2, 1]), vec![-1, 1]);
        assert_eq!(sys.row_cells(0), (0, 2));
        assert_eq!(sys.row_info(1), (1, (1, 2)));
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        fn perm_from_seed(cells: usize, seed: u64) -> Permutation {
            let mut map: Vec<usize> = (0..cells).collect();
            let mut state = seed | 1;
            for i in (1..cells).rev() {
                state = state
                    .wrapping_mul(6364136223846793005)
                    .wrapping_add(1442695040888963407);
                let j = (state >> 33) as usize % (i + 1);
                map.swap(i, j);
            }
            Permutation::from_zero_based(map).unwrap()
        }

        proptest! {
            // <Ax, lam> == <x, A^T lam> for any permutation
            #[test]
            fn transpose_is_adjoint(
                n in 2usize..6,
                seed in any::<u64>(),
                xs in proptest::collection::vec(-50i64..50, 36),
                ls in proptest::collection::vec(-3i64..=3, 60),
            ) {
                let cells = n * n;
                let rows = n * triangular_size(n);
                let x = &xs[..cells];
                let lam = &ls[..rows];
                let sys = GroupSystem::new(n, perm_from_seed(cells, seed));
                let lhs: i64 = sys
                    .apply_finite(x)
                    .iter()
                    .zip(lam)
                    .map(|(d, l)| d * l)
                    .sum();
                let rhs: i64 = sys
                    .apply_transpose(lam)
                    .iter()
                    .zip(x)
                    .map(|(s, v)| s * v)
                    .sum();
                prop_assert_eq!(lhs, rhs);
            }

            // every score has the parity of n-1: each group contributes
            // n-1 multipliers of odd total weight per cell
            #[test]
            fn scores_match_group_parity(
                n in 2usize..6,
                ls in proptest::collection::vec(proptest::bool::ANY, 60),
            ) {
                let rows = n * triangular_size(n);
                let lam: Vec<i64> = ls[..rows].iter().map(|&b| if b { 1 } else { -1 }).collect();
                let sys = GroupSystem::new(n, Permutation::identity(n * n));
                for s in sys.apply_transpose(&lam) {
                    prop_assert_eq!(s.rem_euclid(2), ((n as i64) - 1).rem_euclid(2));
                }
            }
        }
    }
}
