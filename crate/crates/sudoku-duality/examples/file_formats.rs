//! The three text formats: puzzle files, board files, certificates.
//!
//! Parses a puzzle with a nonstandard third family, shows the emitted
//! canonical form, the one-line grid form for side 9, and certificate
//! text, and demonstrates that parse and emit invert each other.

use sudoku_duality::format::{
    emit_board, emit_certificate, emit_puzzle, parse_board, parse_certificate, parse_puzzle,
};

fn main() {
    // wrap-diagonal third family on a 3x3 board, two clues
    let text = "n=3\nperm3=1 5 9 2 6 7 3 4 8\n1 . .\n. . 2\n. . .\n";
    let (inst, board) = parse_puzzle(text).unwrap();
    println!("parsed side {} with {} clues", inst.n(), inst.givens().len());
    println!("third family of cell groups:");
    for g in 0..3 {
        println!("  group {}: cells {:?}", g + 1, inst.system(3).group_cells(g));
    }
    let emitted = emit_puzzle(&inst);
    print!("emitted puzzle file:\n{emitted}");
    assert_eq!(emitted, text);

    // board files are just the grid
    let grid = emit_board(&board, 3);
    assert_eq!(parse_board(&grid, 3).unwrap(), board);
    println!("\nboard file roundtrips:\n{grid}");

    // side 9 accepts a one-line 81-character grid
    let one_line = format!(
        "n=9\n{}\n",
        "53..7....6..195....98....6.8...6...34..8.3..17...2...6.6....28....419..5....8..79"
    );
    let (nine, nine_board) = parse_puzzle(&one_line).unwrap();
    println!("one-line side-9 grid: {} clues parsed", nine.givens().len());
    assert_eq!(nine_board.empty_count(), 81 - nine.givens().len());

    // certificates: one group per line, one sign per pair
    let cert_text = "-++++-\n+-----\n-----+\n++++++\n";
    let cert = parse_certificate(cert_text, 4).unwrap();
    assert_eq!(emit_certificate(&cert, 4), cert_text);
    println!("\ncertificate roundtrips:\n{cert_text}");
}
