use std::fmt;

/// Failure cases surfaced by constructors, transforms, and parsers.
///
/// Structural misuse (length mismatches between objects that were built
/// together, out-of-range row indices) panics instead; only
/// data-dependent conditions that a caller can hit with well-formed
/// code are reported through this type.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A slot-to-cell map was not a bijection on `0..len`.
    InvalidPermutation { len: usize, detail: String },
    /// Board side below the smallest supported size.
    SideTooSmall { n: usize },
    /// A third grouping family is required but the side is not a
    /// perfect square, so no block layout exists.
    NoBlockLayout { n: usize },
    /// A clue referred to a cell index outside `0..n*n`.
    GivenOutOfRange { cell: usize, cells: usize },
    /// Two clues named the same cell.
    DuplicateGiven { cell: usize },
    /// A clue value was outside `1..=n`.
    GivenValueOutOfRange { cell: usize, value: i64, n: usize },
    /// A certificate had the wrong number of sign entries.
    CertificateLength { expected: usize, got: usize },
    /// A certificate entry was not -1 or +1.
    CertificateSign { component: usize, value: i64 },
    /// Componentwise sign was requested of a zero entry.
    SignOfZero { component: usize },
    /// Componentwise sign was requested of an empty entry.
    SignOfEmpty { component: usize },
    /// A board-to-certificate transform was given a board with an
    /// empty cell; the transform is only defined on complete boards.
    EmptyCell { cell: usize },
    /// An exhaustive computation was asked for a size it does not
    /// support within reasonable time.
    SizeUnsupported { what: &'static str, n: usize, max: usize },
    /// Text input did not match the expected file format.
    Parse { line: usize, message: String },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidPermutation { len, detail } => {
                write!(f, "invalid permutation of 0..{len}: {detail}")
            }
            Error::SideTooSmall { n } => {
                write!(f, "board side must be at least 2, got {n}")
            }
            Error::NoBlockLayout { n } => {
                write!(
                    f,
                    "side {n} is not a perfect square; a third grouping must be given explicitly"
                )
            }
            Error::GivenOutOfRange { cell, cells } => {
                write!(f, "clue cell index {cell} out of range 0..{cells}")
            }
            Error::DuplicateGiven { cell } => {
                write!(f, "duplicate clue for cell {cell}")
            }
            Error::GivenValueOutOfRange { cell, value, n } => {
                write!(f, "clue value {value} at cell {cell} outside 1..={n}")
            }
            Error::CertificateLength { expected, got } => {
                write!(f, "certificate has {got} entries, expected {expected}")
            }
            Error::CertificateSign { component, value } => {
                write!(f, "certificate entry {component} is {value}, expected -1 or +1")
            }
            Error::SignOfZero { component } => {
                write!(f, "sign undefined: component {component} is zero")
            }
            Error::SignOfEmpty { component } => {
                write!(f, "sign undefined: component {component} is empty")
            }
            Error::EmptyCell { cell } => {
                write!(f, "board is incomplete: cell {cell} is empty")
            }
            Error::SizeUnsupported { what, n, max } => {
                write!(f, "{what} supports sides up to {max}, got {n}")
            }
            Error::Parse { line, message } => {
                write!(f, "parse error at line {line}: {message}")
            }
        }
    }
}

impl std::error::Error for Error {}
