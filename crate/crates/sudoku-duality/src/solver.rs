//! Exact minimization of the empty-cell count by constraint
//! propagation and depth-first branch and bound.
//!
//! Phase one searches for a complete feasible board with candidate
//! filtering and minimum-remaining-values branching. When no complete
//! board exists, phase two runs an exhaustive branch and bound over
//! partial boards to find one with the fewest empty cells; plain
//! completion search never computes that minimum. Both phases are
//! deterministic: lowest cell index breaks ties and values are tried
//! in ascending order, empty last.

use crate::extint::ExtInt;
use crate::problems::{Board, PrimalInstance};

/// Per-cell candidate sets, one bit per value (`bit v-1` = value `v`).
/// A fixed cell has a singleton set; an empty set marks a dead branch.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CandidateGrid {
    n: usize,
    masks: Vec<u32>,
}

impl CandidateGrid {
    /// Every value possible everywhere, except clue cells, which are
    /// fixed to their clue.
    pub fn full(inst: &PrimalInstance) -> Self {
        let n = inst.n();
        assert!(n <= 32, "candidate sets hold at most 32 values");
        let all = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
        let mut masks = vec![all; inst.cells()];
        for g in inst.givens() {
            masks[g.cell] = 1 << (g.value - 1);
        }
        CandidateGrid { n, masks }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn candidates(&self, cell: usize) -> Vec<i64> {
        (1..=self.n as i64)
            .filter(|v| self.masks[cell] & (1 << (v - 1)) != 0)
            .collect()
    }

    pub fn is_fixed(&self, cell: usize) -> bool {
        self.masks[cell].count_ones() == 1
    }

    pub fn fixed_value(&self, cell: usize) -> Option<i64> {
        if self.is_fixed(cell) {
            Some(self.masks[cell].trailing_zeros() as i64 + 1)
        } else {
            None
        }
    }

    /// Board of the fixed cells; unfixed cells are empty.
    pub fn fixed_board(&self) -> Board {
        Board::from_cells(
            self.masks
                .iter()
                .map(|m| {
                    if m.count_ones() == 1 {
                        ExtInt::Fin(m.trailing_zeros() as i64 + 1)
                    } else {
                        ExtInt::Inf
                    }
                })
                .collect(),
        )
    }
}

/// Precomputed adjacency: for each cell, the cells sharing a group in
/// any family, and the 3n groups themselves.
struct Context {
    n: usize,
    cells: usize,
    peers: Vec<Vec<usize>>,
    groups: Vec<Vec<usize>>,
}

impl Context {
    fn new(inst: &PrimalInstance) -> Self {
        let n = inst.n();
        let cells = inst.cells();
        let mut peer_sets = vec![vec![false; cells]; cells];
        let mut groups = Vec::with_capacity(3 * n);
        for sys in inst.systems() {
            for g in 0..n {
                let members = sys.group_cells(g);
                for &a in &members {
                    for &b in &members {
                        if a != b {
                            peer_sets[a][b] = true;
                        }
                    }
                }
                groups.push(members);
            }
        }
        let peers = peer_sets
            .into_iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter_map(|(i, &p)| p.then_some(i))
                    .collect()
            })
            .collect();
        Context {
            n,
            cells,
            peers,
            groups,
        }
    }
}

/// Runs candidate filtering to a fixpoint: fixed cells knock their
/// value out of all peers, and a value with a unique candidate cell
/// inside a group is placed there. Returns `None` exactly when some
/// candidate set empties.
pub fn propagate(inst: &PrimalInstance, grid: &CandidateGrid) -> Option<CandidateGrid> {
    assert_eq!(grid.masks.len(), inst.cells(), "grid size mismatch");
    let ctx = Context::new(inst);
    let mut masks = grid.masks.clone();
    if fixpoint(&ctx, &mut masks) {
        Some(CandidateGrid {
            n: grid.n,
            masks,
        })
    } else {
        None
    }
}

fn fixpoint(ctx: &Context, masks: &mut [u32]) -> bool {
    let mut broadcast = vec![0u32; ctx.cells];
    loop {
        let mut changed = false;
        for cell in 0..ctx.cells {
            let m = masks[cell];
            if m == 0 {
                return false;
            }
            if m.count_ones() == 1 && broadcast[cell] != m {
                for &p in &ctx.peers[cell] {
                    if masks[p] & m != 0 {
                        masks[p] &= !m;
                        if masks[p] == 0 {
                            return false;
                        }
                        changed = true;
                    }
                }
                broadcast[cell] = m;
            }
        }
        for group in &ctx.groups {
            for v in 0..ctx.n {
                let bit = 1u32 << v;
                let mut hits = 0;
                let mut home = usize::MAX;
                for &c in group {
                    if masks[c] & bit != 0 {
                        hits += 1;
                        if hits > 1 {
                            break;
                        }
                        home = c;
                    }
                }
                if hits == 1 && masks[home] != bit {
                    masks[home] = bit;
                    changed = true;
                }
            }
        }
        if !changed {
            return true;
        }
    }
}

/// The feasible boards visited on the way to the optimum, in order,
/// with strictly decreasing empty-cell counts; the last entry is the
/// returned optimum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DescentTrace {
    boards: Vec<Board>,
}

impl DescentTrace {
    pub fn boards(&self) -> &[Board] {
        &self.boards
    }

    pub fn len(&self) -> usize {
        self.boards.len()
    }

    pub fn is_empty(&self) -> bool {
        self.boards.is_empty()
    }

    /// Checks the descent contract: every entry feasible, empty-cell
    /// counts strictly decreasing.
    pub fn is_valid(&self, inst: &PrimalInstance) -> bool {
        if self.boards.is_empty() {
            return false;
        }
        let mut prev: Option<usize> = None;
        for b in &self.boards {
            if !inst.in_fp(b) {
                return false;
            }
            let fp = inst.f_p(b);
            if let Some(p) = prev {
                if fp >= p {
                    return false;
                }
            }
            prev = Some(fp);
        }
        true
    }
}

/// An exact primal optimum with its descent history.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Solution {
    pub v_p: usize,
    pub board: Board,
    pub trace: DescentTrace,
}

/// Result of a solve: an optimum, or the marker that no feasible
/// board exists because the clues already conflict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolveOutcome {
    Solved(Solution),
    Infeasible,
}

impl SolveOutcome {
    pub fn solution(&self) -> Option<&Solution> {
        match self {
            SolveOutcome::Solved(s) => Some(s),
            SolveOutcome::Infeasible => None,
        }
    }
}

/// Computes the minimum empty-cell count over all feasible boards and
/// a board attaining it. Exact and deterministic; exponential in the
/// worst case when no complete solution exists.
pub fn solve(inst: &PrimalInstance) -> SolveOutcome {
    let given_board = inst.given_board();
    if !inst.in_fp(&given_board) {
        return SolveOutcome::Infeasible;
    }
    let ctx = Context::new(inst);
    let mut trace = DescentTrace {
        boards: vec![given_board.clone()],
    };
    let mut best_fp = inst.f_p(&given_board);

    let mut masks = CandidateGrid::full(inst).masks;
    if fixpoint(&ctx, &mut masks) {
        if let Some(solved) = search(&ctx, &masks, &mut trace, &mut best_fp) {
            let board = CandidateGrid {
                n: ctx.n,
                masks: solved,
            }
            .fixed_board();
            return SolveOutcome::Solved(Solution {
                v_p: 0,
                board,
                trace,
            });
        }
    }

    // No complete feasible board; find the fewest-empty partial one.
    let mut best_board = trace.boards.last().expect("trace seeded").clone();
    let mut work: Vec<ExtInt> = vec![ExtInt::Inf; ctx.cells];
    bound_and_branch(
        &ctx,
        inst,
        0,
        &mut work,
        0,
        &mut best_fp,
        &mut best_board,
        &mut trace,
    );
    SolveOutcome::Solved(Solution {
        v_p: best_fp,
        board: best_board,
        trace,
    })
}

/// Depth-first completion search; masks must already be propagated.
/// Records each new best feasible projection into the trace.
fn search(
    ctx: &Context,
    masks: &[u32],
    trace: &mut DescentTrace,
    best_fp: &mut usize,
) -> Option<Vec<u32>> {
    let unfixed = masks.iter().filter(|m| m.count_ones() > 1).count();
    if unfixed < *best_fp {
        *best_fp = unfixed;
        trace.boards.push(
            CandidateGrid {
                n: ctx.n,
                masks: masks.to_vec(),
            }
            .fixed_board(),
        );
    }
    let branch = (0..ctx.cells)
        .filter(|&c| masks[c].count_ones() > 1)
        .min_by_key(|&c| masks[c].count_ones());
    let cell = match branch {
        Some(c) => c,
        None => return Some(masks.to_vec()),
    };
    for v in 0..ctx.n {
        let bit = 1u32 << v;
        if masks[cell] & bit == 0 {
            continue;
        }
        let mut child = masks.to_vec();
        child[cell] = bit;
        if fixpoint(ctx, &mut child) {
            if let Some(found) = search(ctx, &child, trace, best_fp) {
                return Some(found);
            }
        }
    }
    None
}

fn conflicts(ctx: &Context, board: &[ExtInt], cell: usize, value: i64) -> bool {
    ctx.peers[cell]
        .iter()
        .any(|&p| board[p].model_eq(ExtInt::Fin(value)))
}

/// Exhaustive branch and bound over partial boards, cells in index
/// order, values ascending, empty last; prunes once the running
/// empty count cannot beat the best.
#[allow(clippy::too_many_arguments)]
fn bound_and_branch(
    ctx: &Context,
    inst: &PrimalInstance,
    idx: usize,
    board: &mut Vec<ExtInt>,
    empties: usize,
    best: &mut usize,
    best_board: &mut Board,
    trace: &mut DescentTrace,
) {
    if empties >= *best {
        return;
    }
    if idx == ctx.cells {
        *best = empties;
        let found = Board::from_cells(board.clone());
        trace.boards.push(found.clone());
        *best_board = found;
        return;
    }
    if let Some(v) = inst.clue(idx) {
        if !conflicts(ctx, board, idx, v) {
            board[idx] = ExtInt::Fin(v);
            bound_and_branch(ctx, inst, idx + 1, board, empties, best, best_board, trace);
            board[idx] = ExtInt::Inf;
        }
        return;
    }
    for v in 1..=ctx.n as i64 {
        if conflicts(ctx, board, idx, v) {
            continue;
        }
        board[idx] = ExtInt::Fin(v);
        bound_and_branch(ctx, inst, idx + 1, board, empties, best, best_board, trace);
        board[idx] = ExtInt::Inf;
    }
    bound_and_branch(
        ctx,
        inst,
        idx + 1,
        board,
        empties + 1,
        best,
        best_board,
        trace,
    );
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pairdiff::Permutation;
    use crate::problems::Given;
    use crate::testdata::GOLDEN_GRID;

    fn rows_third(n: usize, givens: Vec<Given>) -> PrimalInstance {
        PrimalInstance::with_third_family(n, Permutation::identity(n * n), givens)
            .unwrap()
    }

    #[test]
    fn propagation_forces_the_two_by_two_grid() {
        let inst = rows_third(2, vec![Given::new(0, 1)]);
        let out = propagate(&inst, &CandidateGrid::full(&inst)).unwrap();
        assert_eq!(out.fixed_value(0), Some(1));
        assert_eq!(out.fixed_value(1), Some(2));
        assert_eq!(out.fixed_value(2), Some(2));
        assert_eq!(out.fixed_value(3), Some(1));
        assert_eq!(
            out.fixed_board(),
            Board::from_values(&[1, 2, 2, 1])
        );
    }

    #[test]
    fn propagation_detects_clue_conflicts() {
        let inst = rows_third(2, vec![Given::new(0, 1), Given::new(1, 1)]);
        assert!(propagate(&inst, &CandidateGrid::full(&inst)).is_none());
    }

    #[test]
    fn propagation_without_clues_is_a_fixpoint() {
        let inst = PrimalInstance::standard(4, vec![]).unwrap();
        let grid = CandidateGrid::full(&inst);
        assert_eq!(propagate(&inst, &grid).unwrap(), grid);
        assert_eq!(grid.candidates(0), vec![1, 2, 3, 4]);
        assert!(!grid.is_fixed(0));
    }

    #[test]
    fn solve_completes_the_golden_grid() {
        let givens: Vec<Given> = GOLDEN_GRID
            .iter()
            .enumerate()
            .take(15)
            .map(|(i, &v)| Given::new(i, v))
            .collect();
        let inst = PrimalInstance::standard(4, givens).unwrap();
        let out = solve(&inst);
        let sol = out.solution().unwrap();
        assert_eq!(sol.v_p, 0);
        assert_eq!(sol.board, Board::from_values(&GOLDEN_GRID));
        assert!(sol.trace.is_valid(&inst));
        assert_eq!(sol.trace.boards().last(), Some(&sol.board));
    }

    #[test]
    fn conflicting_clues_are_infeasible() {
        let inst = rows_third(2, vec![Given::new(0, 1), Given::new(1, 1)]);
        assert_eq!(solve(&inst), SolveOutcome::Infeasible);
    }

    #[test]
    fn fully_clued_consistent_board_returns_immediately() {
        let givens: Vec<Given> = GOLDEN_GRID
            .iter()
            .enumerate()
            .map(|(i, &v)| Given::new(i, v))
            .collect();
        let inst = PrimalInstance::standard(4, givens).unwrap();
        let sol = solve(&inst);
        let sol = sol.solution().unwrap();
        assert_eq!(sol.v_p, 0);
        assert_eq!(sol.trace.len(), 1);
    }

    #[test]
    fn uncompletable_clues_yield_a_positive_minimum() {
        // opposite-corner clues (1, 2) block every completion
        let inst = rows_third(2, vec![Given::new(0, 1), Given::new(3, 2)]);
        let sol = solve(&inst);
        let sol = sol.solution().unwrap();
        assert_eq!(sol.v_p, 2);
        assert_eq!(sol.board, inst.given_board());
        assert!(sol.trace.is_valid(&inst));
    }

    #[test]
    fn solving_is_deterministic() {
        let inst = rows_third(3, vec![Given::new(0, 1), Given::new(4, 2)]);
        let a = solve(&inst);
        let b = solve(&inst);
        assert_eq!(a, b);
        let sol = a.solution().unwrap();
        assert_eq!(sol.v_p, 0);
        assert!(sol.trace.is_valid(&inst));
    }

    #[test]
    fn wrap_diagonal_third_family_solves() {
        let inst = PrimalInstance::with_third_family(
            3,
            crate::pairdiff::wrap_diagonals(3),
            vec![Given::new(0, 1)],
        )
        .unwrap();
        let sol = solve(&inst);
        let sol = sol.solution().unwrap();
        assert_eq!(sol.v_p, 0);
        assert!(inst.is_pp_solution(&sol.board));
    }
}
