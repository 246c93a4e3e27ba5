//! Solving by descent through the feasible set.
//!
//! Runs the two-phase solver on a classic hard 17-clue 9x9 puzzle:
//! candidate propagation plus search for a complete solution first,
//! falling back to branch-and-bound over partial boards when no
//! complete solution exists. Prints the strictly-descending trace of
//! best boards and checks the derived certificate.

use sudoku_duality::duality::primal_to_dual;
use sudoku_duality::format::{emit_board, parse_puzzle};
use sudoku_duality::solver::{solve, SolveOutcome};

fn main() {
    let one_line = "000000010400000000020000000000050407008000300001090000300400200050100000000806000"
        .replace('0', ".");
    let text = format!("n=9\n{one_line}\n");
    let (inst, given_board) = parse_puzzle(&text).unwrap();
    println!("clues: {}", inst.givens().len());
    print!("{}", emit_board(&given_board, 9));

    let started = std::time::Instant::now();
    match solve(&inst) {
        SolveOutcome::Solved(sol) => {
            println!("\nsolved in {:?}; v_P = {}", started.elapsed(), sol.v_p);
            print!("{}", emit_board(&sol.board, 9));
            println!("\ndescent trace (empty-cell counts): {:?}",
                sol.trace
                    .boards()
                    .iter()
                    .map(|b| inst.f_p(b))
                    .collect::<Vec<_>>());
            assert!(sol.trace.is_valid(&inst));

            let cert = primal_to_dual(&inst, &sol.board).unwrap();
            println!("derived certificate hits every clue: {}", inst.is_dp_solution(&cert));
        }
        SolveOutcome::Infeasible => println!("\nno feasible board at all"),
    }
}
