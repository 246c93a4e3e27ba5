//! Text formats for puzzle files, boards, and sign certificates.
//!
//! A puzzle file starts with a `n=<side>` header, then optional
//! `perm2=` / `perm3=` lines giving one-based slot-to-cell maps for
//! the second and third group families (omitted lines mean columns
//! and, when the side is a perfect square, blocks), then the grid:
//! `side` rows of `side` cell tokens where `.` marks an empty cell
//! and a value becomes a clue. For single-digit sides the grid may
//! instead be one row-major line of `side * side` characters.
//!
//! A board file is just the grid part. A certificate file has one
//! line of `+`/`-` signs per group, one sign per pair row.

use crate::error::Error;
use crate::extint::ExtInt;
use crate::pairdiff::{standard_perms, triangular_size, Permutation};
use crate::problems::{Board, DualCertificate, Given, PrimalInstance};

/// The third family assumed when a puzzle file has no `perm3=` line:
/// square blocks when the side is a perfect square, and the row
/// family itself on the two-cell-group board, which has no blocks but
/// whose smallest examples are conventionally written without a
/// family line.
fn default_third(n: usize) -> Option<Permutation> {
    let (p1, _, p3) = standard_perms(n);
    p3.or((n == 2).then_some(p1))
}

/// Non-blank lines with their 1-based line numbers, trimmed.
fn significant_lines(text: &str) -> Vec<(usize, &str)> {
    text.lines()
        .enumerate()
        .filter_map(|(i, l)| {
            let t = l.trim();
            (!t.is_empty()).then_some((i + 1, t))
        })
        .collect()
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn parse_value(tok: &str, n: usize, line: usize) -> Result<i64, Error> {
    let v: i64 = tok
        .parse()
        .map_err(|_| parse_err(line, format!("invalid cell token `{tok}`")))?;
    if v < 1 || v > n as i64 {
        return Err(parse_err(
            line,
            format!("cell value {v} outside 1..={n}"),
        ));
    }
    Ok(v)
}

fn parse_perm(rest: &str, n: usize, line: usize) -> Result<Permutation, Error> {
    let mut map = Vec::new();
    for tok in rest.split_whitespace() {
        let c: usize = tok
            .parse()
            .map_err(|_| parse_err(line, format!("invalid cell index `{tok}`")))?;
        map.push(c);
    }
    if map.len() != n * n {
        return Err(parse_err(
            line,
            format!("expected {} cell indices, found {}", n * n, map.len()),
        ));
    }
    Permutation::from_one_based(&map)
        .map_err(|e| parse_err(line, format!("invalid permutation: {e}")))
}

/// Parses grid rows starting at `lines[start]`; returns the cells and
/// how many lines were consumed.
fn parse_grid(
    lines: &[(usize, &str)],
    start: usize,
    n: usize,
) -> Result<(Vec<ExtInt>, usize), Error> {
    let cells = n * n;
    let mut board = vec![ExtInt::Inf; cells];
    let after_last = lines.last().map_or(1, |&(ln, _)| ln + 1);

    let one_line = n <= 9
        && lines
            .get(start)
            .is_some_and(|&(_, l)| !l.contains(char::is_whitespace) && l.len() == cells);
    if one_line {
        let (ln, l) = lines[start];
        for (i, ch) in l.chars().enumerate() {
            if ch == '.' {
                continue;
            }
            let v = ch
                .to_digit(10)
                .map(i64::from)
                .filter(|&v| 1 <= v && v <= n as i64)
                .ok_or_else(|| parse_err(ln, format!("invalid cell character `{ch}`")))?;
            board[i] = ExtInt::Fin(v);
        }
        return Ok((board, 1));
    }

    for r in 0..n {
        let &(ln, l) = lines
            .get(start + r)
            .ok_or_else(|| parse_err(after_last, format!("expected {n} grid rows")))?;
        let toks: Vec<&str> = l.split_whitespace().collect();
        if toks.len() != n {
            return Err(parse_err(
                ln,
                format!("expected {n} cells in a row, found {}", toks.len()),
            ));
        }
        for (i, tok) in toks.iter().enumerate() {
            if *tok != "." {
                board[r * n + i] = ExtInt::Fin(parse_value(tok, n, ln)?);
            }
        }
    }
    Ok((board, n))
}

/// Parses a puzzle file into the instance (families plus clues taken
/// from the filled grid cells) and the grid as a board.
pub fn parse_puzzle(text: &str) -> Result<(PrimalInstance, Board), Error> {
    let lines = significant_lines(text);
    let &(header_line, header) = lines
        .first()
        .ok_or_else(|| parse_err(1, "missing `n=<side>` header"))?;
    let n: usize = header
        .strip_prefix("n=")
        .ok_or_else(|| parse_err(header_line, "expected `n=<side>` header"))?
        .trim()
        .parse()
        .map_err(|_| parse_err(header_line, "invalid side in `n=<side>` header"))?;
    if n < 2 {
        return Err(Error::SideTooSmall { n });
    }

    let mut idx = 1;
    let mut perm2 = None;
    let mut perm3 = None;
    while let Some(&(ln, l)) = lines.get(idx) {
        if let Some(rest) = l.strip_prefix("perm2=") {
            if perm2.is_some() {
                return Err(parse_err(ln, "duplicate perm2 line"));
            }
            perm2 = Some(parse_perm(rest, n, ln)?);
        } else if let Some(rest) = l.strip_prefix("perm3=") {
            if perm3.is_some() {
                return Err(parse_err(ln, "duplicate perm3 line"));
            }
            perm3 = Some(parse_perm(rest, n, ln)?);
        } else {
            break;
        }
        idx += 1;
    }

    let (cells, consumed) = parse_grid(&lines, idx, n)?;
    if let Some(&(ln, _)) = lines.get(idx + consumed) {
        return Err(parse_err(ln, "unexpected content after the grid"));
    }

    let (p1, std2, _) = standard_perms(n);
    let p2 = perm2.unwrap_or(std2);
    let p3 = match perm3 {
        Some(p) => p,
        None => default_third(n).ok_or_else(|| {
            parse_err(
                header_line,
                format!("side {n} is not a perfect square; a perm3= line is required"),
            )
        })?,
    };
    let givens: Vec<Given> = cells
        .iter()
        .enumerate()
        .filter_map(|(c, x)| x.finite().map(|v| Given::new(c, v)))
        .collect();
    let inst = PrimalInstance::new(n, [p1, p2, p3], givens)?;
    Ok((inst, Board::from_cells(cells)))
}

/// Inverse of [`parse_puzzle`]: header, family lines only when they
/// differ from the standard ones, then the clue grid.
pub fn emit_puzzle(inst: &PrimalInstance) -> String {
    let n = inst.n();
    let mut out = format!("n={n}\n");
    let (_, std2, _) = standard_perms(n);
    let p2 = inst.system(2).perm();
    if *p2 != std2 {
        out.push_str(&format!("perm2={}\n", join_one_based(p2)));
    }
    let p3 = inst.system(3).perm();
    if default_third(n).as_ref() != Some(p3) {
        out.push_str(&format!("perm3={}\n", join_one_based(p3)));
    }
    out.push_str(&emit_board(&inst.given_board(), n));
    out
}

fn join_one_based(p: &Permutation) -> String {
    p.to_one_based()
        .iter()
        .map(|c| c.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

/// Parses a grid-only file into a board of the given side.
pub fn parse_board(text: &str, n: usize) -> Result<Board, Error> {
    let lines = significant_lines(text);
    let (cells, consumed) = parse_grid(&lines, 0, n)?;
    if let Some(&(ln, _)) = lines.get(consumed) {
        return Err(parse_err(ln, "unexpected content after the grid"));
    }
    Ok(Board::from_cells(cells))
}

/// Renders a board as grid rows, `.` for empty cells.
pub fn emit_board(b: &Board, n: usize) -> String {
    assert_eq!(b.len(), n * n, "board length mismatch");
    let mut out = String::new();
    for r in 0..n {
        let row: Vec<String> = (0..n).map(|c| b.cell(r * n + c).to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

/// Parses a certificate: one `+`/`-` line per group, one sign per
/// pair row.
pub fn parse_certificate(text: &str, n: usize) -> Result<DualCertificate, Error> {
    let s = triangular_size(n);
    let lines = significant_lines(text);
    if lines.len() != n {
        let at = lines.get(n).or(lines.last()).map_or(1, |&(ln, _)| ln);
        return Err(parse_err(
            at,
            format!("expected {n} sign rows, found {}", lines.len()),
        ));
    }
    let mut signs = Vec::with_capacity(n * s);
    for &(ln, l) in &lines {
        if l.chars().count() != s {
            return Err(parse_err(
                ln,
                format!("expected {s} signs in a row, found {}", l.chars().count()),
            ));
        }
        for ch in l.chars() {
            signs.push(match ch {
                '+' => 1,
                '-' => -1,
                _ => return Err(parse_err(ln, format!("invalid sign character `{ch}`"))),
            });
        }
    }
    DualCertificate::new(signs)
}

/// Inverse of [`parse_certificate`].
pub fn emit_certificate(c: &DualCertificate, n: usize) -> String {
    let s = triangular_size(n);
    assert_eq!(c.signs().len(), n * s, "certificate length mismatch");
    let mut out = String::new();
    for g in 0..n {
        for &x in &c.signs()[g * s..(g + 1) * s] {
            out.push(if x > 0 { '+' } else { '-' });
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pairdiff::wrap_diagonals;
    use crate::testdata::{GOLDEN_GRID, GOLDEN_SIGNS};
    use proptest::prelude::*;

    #[test]
    fn puzzle_roundtrip_small() {
        let text = "n=2\n1 .\n. 2\n";
        let (inst, board) = parse_puzzle(text).unwrap();
        assert_eq!(inst.n(), 2);
        assert_eq!(
            inst.givens(),
            &[Given::new(0, 1), Given::new(3, 2)]
        );
        assert_eq!(board, Board::from_partial(&[Some(1), None, None, Some(2)]));
        assert_eq!(emit_puzzle(&inst), text);
        // an explicit row-family line parses to the same instance
        let (explicit, _) = parse_puzzle("n=2\nperm3=1 2 3 4\n1 .\n. 2\n").unwrap();
        assert_eq!(explicit, inst);
    }

    #[test]
    fn smallest_side_defaults_its_third_family_to_rows() {
        let (inst, board) = parse_puzzle("n=2\n1 .\n. .\n").unwrap();
        assert_eq!(inst.givens(), &[Given::new(0, 1)]);
        assert_eq!(board, Board::from_partial(&[Some(1), None, None, None]));
        assert!(inst.system(3).perm().is_identity());
    }

    #[test]
    fn standard_families_are_omitted_on_emit() {
        let givens: Vec<Given> = GOLDEN_GRID
            .iter()
            .enumerate()
            .take(15)
            .map(|(i, &v)| Given::new(i, v))
            .collect();
        let inst = PrimalInstance::standard(4, givens).unwrap();
        let text = emit_puzzle(&inst);
        assert!(!text.contains("perm"));
        let (back, board) = parse_puzzle(&text).unwrap();
        assert_eq!(back, inst);
        assert_eq!(board, inst.given_board());
    }

    #[test]
    fn nonstandard_families_roundtrip() {
        let inst = PrimalInstance::new(
            2,
            [
                Permutation::identity(4),
                Permutation::from_one_based(&[2, 1, 3, 4]).unwrap(),
                wrap_diagonals(2),
            ],
            vec![Given::new(2, 1)],
        )
        .unwrap();
        let text = emit_puzzle(&inst);
        assert!(text.contains("perm2=2 1 3 4\n"));
        assert!(text.contains("perm3=1 4 2 3\n"));
        let (back, _) = parse_puzzle(&text).unwrap();
        assert_eq!(back, inst);
    }

    #[test]
    fn one_line_grid_for_side_nine() {
        let text = format!(
            "n=9\n{}\n",
            "000000010400000000020000000000050407008000300001090000300400200050100000000806000"
                .replace('0', ".")
        );
        let (inst, board) = parse_puzzle(&text).unwrap();
        assert_eq!(inst.n(), 9);
        assert_eq!(inst.givens().len(), 17);
        assert_eq!(board.cell(7), ExtInt::Fin(1));
        assert_eq!(board.cell(9), ExtInt::Fin(4));
        assert_eq!(board.empty_count(), 81 - 17);
        // grid-form emit parses back to the same instance
        let (back, back_board) = parse_puzzle(&emit_puzzle(&inst)).unwrap();
        assert_eq!(back, inst);
        assert_eq!(back_board, board);
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let missing = parse_puzzle("");
        assert!(matches!(missing, Err(Error::Parse { line: 1, .. })));
        let bad_header = parse_puzzle("size=2\n");
        assert!(matches!(bad_header, Err(Error::Parse { line: 1, .. })));
        let bad_value = parse_puzzle("n=2\nperm3=1 2 3 4\n1 5\n. .\n");
        assert!(matches!(bad_value, Err(Error::Parse { line: 3, .. })));
        let short_row = parse_puzzle("n=2\nperm3=1 2 3 4\n1\n. .\n");
        assert!(matches!(short_row, Err(Error::Parse { line: 3, .. })));
        let trailing = parse_puzzle("n=2\nperm3=1 2 3 4\n1 .\n. .\n. .\n");
        assert!(matches!(trailing, Err(Error::Parse { line: 5, .. })));
        let no_third = parse_puzzle("n=3\n1 . .\n. 2 .\n. . 3\n");
        assert!(matches!(no_third, Err(Error::Parse { line: 1, .. })));
        let dup = parse_puzzle("n=2\nperm3=1 2 3 4\nperm3=1 2 3 4\n1 .\n. .\n");
        assert!(matches!(dup, Err(Error::Parse { line: 3, .. })));
        let bad_perm = parse_puzzle("n=2\nperm3=1 2 3 3\n1 .\n. .\n");
        assert!(matches!(bad_perm, Err(Error::Parse { line: 2, .. })));
    }

    #[test]
    fn board_files_roundtrip() {
        let text = "3 4 1 2\n2 1 3 4\n1 2 4 3\n4 3 2 1\n";
        let b = parse_board(text, 4).unwrap();
        assert_eq!(b, Board::from_values(&GOLDEN_GRID));
        assert_eq!(emit_board(&b, 4), text);
        let partial = parse_board(". 2\n. .\n", 2).unwrap();
        assert_eq!(partial.empty_count(), 3);
        assert!(matches!(
            parse_board("1 2\n", 2),
            Err(Error::Parse { .. })
        ));
    }

    #[test]
    fn certificate_text_roundtrip() {
        let cert = DualCertificate::new(GOLDEN_SIGNS.to_vec()).unwrap();
        let text = "-++++-\n+-----\n-----+\n++++++\n";
        assert_eq!(emit_certificate(&cert, 4), text);
        assert_eq!(parse_certificate(text, 4).unwrap(), cert);
        assert!(matches!(
            parse_certificate("-++++-\n+-----\n", 4),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            parse_certificate("-+\n+-\n--\n++\n", 4),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse_certificate("-++++x\n+-----\n-----+\n++++++\n", 4),
            Err(Error::Parse { line: 1, .. })
        ));
    }

    /// Deterministic permutation of `0..len` from a seed.
    fn perm_from_seed(len: usize, seed: u64) -> Permutation {
        let mut state = seed.wrapping_mul(6364136223846793005).wrapping_add(1);
        let mut map: Vec<usize> = (0..len).collect();
        for i in (1..len).rev() {
            state = state
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            let j = (state >> 33) as usize % (i + 1);
            map.swap(i, j);
        }
        Permutation::from_zero_based(map).unwrap()
    }

    proptest! {
        #[test]
        fn puzzle_roundtrip_holds_for_random_instances(
            n in 2usize..=4,
            seed in any::<u64>(),
            clue_bits in any::<u16>(),
        ) {
            let cells = n * n;
            let third = perm_from_seed(cells, seed);
            let mut givens = Vec::new();
            for c in 0..cells {
                if clue_bits & (1u16 << (c % 16)) != 0 && c % 3 == 0 {
                    givens.push(Given::new(c, (c as i64 % n as i64) + 1));
                }
            }
            let inst = PrimalInstance::with_third_family(n, third, givens).unwrap();
            let text = emit_puzzle(&inst);
            let (back, board) = parse_puzzle(&text).unwrap();
            prop_assert_eq!(&back, &inst);
            prop_assert_eq!(board, inst.given_board());
            prop_assert_eq!(emit_puzzle(&back), text);
        }

        #[test]
        fn certificate_roundtrip_holds_for_random_signs(
            n in 2usize..=4,
            seed in any::<u64>(),
        ) {
            let rows = n * triangular_size(n);
            let mut state = seed;
            let signs: Vec<i64> = (0..rows)
                .map(|_| {
                    state = state
                        .wrapping_mul(6364136223846793005)
                        .wrapping_add(1442695040888963407);
                    if state >> 63 == 0 { 1 } else { -1 }
                })
                .collect();
            let cert = DualCertificate::new(signs).unwrap();
            let text = emit_certificate(&cert, n);
            prop_assert_eq!(parse_certificate(&text, n).unwrap(), cert);
        }
    }
}
