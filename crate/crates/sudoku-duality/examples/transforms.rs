//! Boards and certificates translate into each other.
//!
//! Takes a complete 4x4 board, derives its sign certificate (the
//! difference signs under the row family), recovers the board from
//! the certificate's scores, and shows both roundtrips are exact.

use sudoku_duality::duality::{dual_to_primal, primal_to_dual};
use sudoku_duality::format::{emit_board, emit_certificate};
use sudoku_duality::problems::{Board, PrimalInstance};

fn main() {
    let inst = PrimalInstance::standard(4, vec![]).unwrap();
    let board = Board::from_values(&[3, 4, 1, 2, 2, 1, 3, 4, 1, 2, 4, 3, 4, 3, 2, 1]);
    println!("board:");
    print!("{}", emit_board(&board, 4));
    assert!(inst.is_pp_solution(&board));

    let cert = primal_to_dual(&inst, &board).unwrap();
    println!("\nits certificate (one group per line, one sign per pair):");
    print!("{}", emit_certificate(&cert, 4));
    assert!(inst.is_dp_solution(&cert));

    let scores = inst.certificate_scores(&cert);
    println!("\nscores of the certificate: {scores:?}");
    println!("cell value = (score + 5) / 2, so the board comes back:");
    let back = dual_to_primal(&inst, &cert);
    print!("{}", emit_board(&back, 4));
    assert_eq!(back, board);

    let cert_again = primal_to_dual(&inst, &back).unwrap();
    assert_eq!(cert_again, cert);
    println!("\nboth roundtrips are exact.");
}
