//! Command-line front end over the library: solving, checking,
//! transforming, and verifying from puzzle/board/certificate files.
//!
//! Exit codes: 0 = success or affirmative check, 1 = a check ran and
//! came back negative, 2 = usage, parse, or capability errors, 3 = a
//! solve or gap command proved the instance infeasible.

use std::fmt::Display;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use sudoku_duality::duality::{dual_to_primal, gap_report, primal_to_dual};
use sudoku_duality::format::{emit_board, emit_certificate, parse_board, parse_certificate, parse_puzzle};
use sudoku_duality::oracle::{exact_vd, exact_vp, verify_theorems};
use sudoku_duality::pairdiff::{standard_perms, GroupSystem};
use sudoku_duality::problems::{Board, PrimalInstance};
use sudoku_duality::solver::{solve, SolveOutcome};

#[derive(Parser)]
#[command(name = "sudoku-duality", version, about = "Primal/dual toolkit for generalized Sudoku boards")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Find a feasible board with as few empty cells as possible.
    Solve {
        puzzle: PathBuf,
        /// Also print the strict-descent trace of best boards found.
        #[arg(long)]
        trace: bool,
    },
    /// Is the board file a complete, feasible, clue-matching solution?
    CheckPrimal { puzzle: PathBuf, board: PathBuf },
    /// Is the certificate feasible and does it hit every clue?
    CheckDual { puzzle: PathBuf, cert: PathBuf },
    /// Turn the complete board in the puzzle file into a certificate.
    Dualize { puzzle: PathBuf },
    /// Turn a certificate into the board its scores describe.
    Primalize { puzzle: PathBuf, cert: PathBuf },
    /// Exact optima of both problems and their gap (small sides only).
    Gap { puzzle: PathBuf },
    /// Run the verification sweep for one side and print its ledger.
    Verify {
        /// Side to sweep; exhaustive families exist for 2, 3, and 4.
        #[arg(long)]
        n: usize,
    },
    /// Print one family's pair-difference matrix as dense rows.
    DumpMatrix {
        /// Board side.
        #[arg(long)]
        n: usize,
        /// Family: 1 = rows, 2 = columns, 3 = blocks (square sides).
        #[arg(long)]
        perm: usize,
    },
}

fn main() -> ExitCode {
    let code = match run(Cli::parse()) {
        Ok(code) => code,
        Err(code) => code,
    };
    ExitCode::from(code)
}

/// Prints a diagnostic and returns the exit code to carry.
fn fail(code: u8, message: impl Display) -> u8 {
    eprintln!("error: {message}");
    code
}

fn read(path: &Path) -> Result<String, u8> {
    fs::read_to_string(path).map_err(|e| fail(2, format!("{}: {e}", path.display())))
}

fn load_puzzle(path: &Path) -> Result<(PrimalInstance, Board), u8> {
    parse_puzzle(&read(path)?).map_err(|e| fail(2, e))
}

fn run(cli: Cli) -> Result<u8, u8> {
    match cli.command {
        Command::Solve { puzzle, trace } => {
            let (inst, _) = load_puzzle(&puzzle)?;
            if inst.n() > 32 {
                return Err(fail(2, format!("side {} beyond solver range (max 32)", inst.n())));
            }
            match solve(&inst) {
                SolveOutcome::Solved(sol) => {
                    print!("{}", emit_board(&sol.board, inst.n()));
                    println!("v_P = {}", sol.v_p);
                    if trace {
                        println!();
                        println!("trace:");
                        for (i, b) in sol.trace.boards().iter().enumerate() {
                            println!("step {i}: f_P = {}", inst.f_p(b));
                            print!("{}", emit_board(b, inst.n()));
                        }
                    }
                    Ok(0)
                }
                SolveOutcome::Infeasible => {
                    println!("INFEASIBLE");
                    Ok(3)
                }
            }
        }
        Command::CheckPrimal { puzzle, board } => {
            let (inst, _) = load_puzzle(&puzzle)?;
            let b = parse_board(&read(&board)?, inst.n()).map_err(|e| fail(2, e))?;
            if inst.is_pp_solution(&b) {
                println!("PP-SOLUTION");
                Ok(0)
            } else {
                for v in inst.fp_violations(&b) {
                    eprintln!("violation: {v}");
                }
                if inst.in_fp(&b) && !b.is_complete() {
                    eprintln!("board is feasible but leaves {} cells empty", b.empty_count());
                }
                println!("NOT-PP-SOLUTION");
                Ok(1)
            }
        }
        Command::CheckDual { puzzle, cert } => {
            let (inst, _) = load_puzzle(&puzzle)?;
            let c = parse_certificate(&read(&cert)?, inst.n()).map_err(|e| fail(2, e))?;
            if inst.is_dp_solution(&c) {
                println!("DP-SOLUTION");
                Ok(0)
            } else {
                if inst.in_fd(&c) {
                    eprintln!("certificate is feasible but misses clues: objective = {}", inst.f_d(&c));
                } else {
                    eprintln!("certificate is infeasible: scores tie within a group");
                }
                println!("NOT-DP-SOLUTION");
                Ok(1)
            }
        }
        Command::Dualize { puzzle } => {
            let (inst, board) = load_puzzle(&puzzle)?;
            let c = primal_to_dual(&inst, &board).map_err(|e| {
                fail(2, format!("the puzzle grid must be a complete untied board: {e}"))
            })?;
            print!("{}", emit_certificate(&c, inst.n()));
            Ok(0)
        }
        Command::Primalize { puzzle, cert } => {
            let (inst, _) = load_puzzle(&puzzle)?;
            let c = parse_certificate(&read(&cert)?, inst.n()).map_err(|e| fail(2, e))?;
            let b = dual_to_primal(&inst, &c);
            print!("{}", emit_board(&b, inst.n()));
            if !inst.in_fd(&c) {
                eprintln!("note: certificate is not feasible; the board need not solve anything");
            }
            Ok(0)
        }
        Command::Gap { puzzle } => {
            let (inst, _) = load_puzzle(&puzzle)?;
            let v_p = exact_vp(&inst).map_err(|e| fail(2, e))?;
            let v_d = exact_vd(&inst).map_err(|e| fail(2, e))?;
            let report = gap_report(v_p, v_d);
            print!("{report}");
            if report.gap.is_none() {
                Ok(3)
            } else {
                Ok(0)
            }
        }
        Command::Verify { n } => {
            let ledger = verify_theorems(n).map_err(|e| fail(2, e))?;
            print!("{}", ledger.render());
            Ok(if ledger.all_passed() { 0 } else { 1 })
        }
        Command::DumpMatrix { n, perm } => {
            if n < 2 {
                return Err(fail(2, format!("side {n} too small; the smallest board has side 2")));
            }
            let (p1, p2, p3) = standard_perms(n);
            let chosen = match perm {
                1 => p1,
                2 => p2,
                3 => p3.ok_or_else(|| {
                    fail(2, format!("side {n} is not a perfect square; no block family exists"))
                })?,
                other => return Err(fail(2, format!("family {other} unknown; use 1, 2, or 3"))),
            };
            print!("{}", GroupSystem::new(n, chosen).render_matrix());
            Ok(0)
        }
    }
}
