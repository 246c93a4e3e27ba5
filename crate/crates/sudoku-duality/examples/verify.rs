//! The verification ledger: sweeping every property over enumerated
//! families and reporting per-property pass/fail lines.
//!
//! Runs the full side-2 sweep (all boards, all certificates, all clue
//! sets of size at most two) and prints the ledger. A failing check
//! would carry a replayable counterexample; the library's own test
//! suite injects a fault to prove the harness catches one.

use sudoku_duality::oracle::verify_theorems;

fn main() {
    let ledger = verify_theorems(2).unwrap();
    print!("{}", ledger.render());
    println!();
    println!(
        "all {} checks passed: {}",
        ledger.checks.len(),
        ledger.all_passed()
    );
    println!("(run the side-3 and side-4 sweeps with: sudoku-duality verify --n 3 | 4)");
}
