//! A duality gap: both problems feasible, optima apart.
//!
//! The optima meet exactly when the clues extend to a complete
//! solution. This crafted 4x4 instance has pairwise consistent clues
//! that block every completion: the best feasible board still has two
//! empty cells (v_P = 2) while the best feasible certificate misses
//! one clue (v_D = -1), so the gap is 3.

use sudoku_duality::duality::gap_report;
use sudoku_duality::format::{emit_board, emit_puzzle};
use sudoku_duality::oracle::{crafted_gap_instance, exact_vd, exact_vp};
use sudoku_duality::solver::{solve, SolveOutcome};

fn main() {
    let inst = crafted_gap_instance();
    println!("puzzle file:");
    print!("{}", emit_puzzle(&inst));

    let v_p = exact_vp(&inst).unwrap();
    let v_d = exact_vd(&inst).unwrap();
    println!("\nexact optima by brute enumeration:");
    print!("{}", gap_report(v_p, v_d));

    if let SolveOutcome::Solved(sol) = solve(&inst) {
        println!("\na best feasible board ({} empty cells):", sol.v_p);
        print!("{}", emit_board(&sol.board, 4));
    }

    // contrast: the same clues minus the blocking one close the gap
    let mut open = inst.givens().to_vec();
    open.pop();
    let relaxed =
        sudoku_duality::problems::PrimalInstance::standard(4, open).unwrap();
    println!("\ndrop the last clue and the gap closes:");
    print!(
        "{}",
        gap_report(exact_vp(&relaxed).unwrap(), exact_vd(&relaxed).unwrap())
    );
}
