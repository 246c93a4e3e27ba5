//! Feasible sets and objectives of both problems on tiny boards.
//!
//! Builds 2x2 instances (third family := rows), walks boards through
//! the primal feasibility test with its diagnostics, and certificates
//! through the dual one.

use sudoku_duality::extint::ExtInt;
use sudoku_duality::problems::{Board, DualCertificate, Given, PrimalInstance};
use sudoku_duality::Permutation;

fn main() {
    // one clue: cell 1 (top-left) holds 1
    let inst = PrimalInstance::with_third_family(
        2,
        Permutation::identity(4),
        vec![Given::new(0, 1)],
    )
    .unwrap();

    let complete = Board::from_values(&[1, 2, 2, 1]);
    let partial = Board::from_cells(vec![
        ExtInt::Fin(1),
        ExtInt::Inf,
        ExtInt::Inf,
        ExtInt::Inf,
    ]);
    let clashing = Board::from_values(&[1, 1, 2, 2]);
    let wrong_clue = Board::from_values(&[2, 1, 1, 2]);

    for (name, b) in [
        ("complete solution", &complete),
        ("just the clue", &partial),
        ("repeated value in a row", &clashing),
        ("ignores the clue", &wrong_clue),
    ] {
        println!("{name}: board = {:?}", b.cells());
        println!("  feasible     = {}", inst.in_fp(b));
        println!("  empty cells  = {}", inst.f_p(b));
        println!("  pp-solution  = {}", inst.is_pp_solution(b));
        for v in inst.fp_violations(b) {
            println!("  violation: {v}");
        }
    }
    println!();

    // the two feasible certificates of this grouping, and an infeasible one
    for signs in [vec![-1, 1], vec![1, -1], vec![1, 1]] {
        let c = DualCertificate::new(signs.clone()).unwrap();
        println!("certificate {signs:?}:");
        println!("  scores       = {:?}", inst.certificate_scores(&c));
        println!("  feasible     = {}", inst.in_fd(&c));
        if inst.in_fd(&c) {
            println!("  objective    = {}", inst.f_d(&c));
            println!("  dp-solution  = {}", inst.is_dp_solution(&c));
        }
    }
}
