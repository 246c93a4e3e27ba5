//! Integers extended with an "empty" element.
//!
//! A board cell either holds a number or is still blank. Blank cells
//! are modeled by [`ExtInt::Inf`], an absorbing element: adding
//! anything to it stays empty, multiplying it by a nonzero scalar
//! stays empty, and multiplying by zero gives zero. Under the model
//! equality [`ExtInt::model_eq`] it compares unequal to every value,
//! itself included, so a blank cell never collides with anything in a
//! distinctness constraint.

use crate::error::Error;
use std::fmt;
use std::ops::{Add, Neg};

/// An `i64` or the distinguished empty element.
///
/// The derived `PartialEq`/`Eq` are structural: `Inf == Inf`. That is
/// what containers and serialization round-trips need. Constraint
/// semantics go through [`ExtInt::model_eq`], where `Inf` is unequal
/// to everything.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ExtInt {
    Fin(i64),
    Inf,
}

impl ExtInt {
    pub const ZERO: ExtInt = ExtInt::Fin(0);

    /// The finite value, if any.
    pub fn finite(self) -> Option<i64> {
        match self {
            ExtInt::Fin(v) => Some(v),
            ExtInt::Inf => None,
        }
    }

    pub fn is_inf(self) -> bool {
        matches!(self, ExtInt::Inf)
    }

    /// True unless the value is finite zero. The empty element counts
    /// as nonzero: a difference involving a blank cell is "not yet
    /// zero" rather than a violation.
    pub fn is_nonzero(self) -> bool {
        !matches!(self, ExtInt::Fin(0))
    }

    /// Equality in the extended model: finite values compare as usual,
    /// and the empty element is unequal to every value including
    /// another empty element.
    pub fn model_eq(self, other: ExtInt) -> bool {
        match (self, other) {
            (ExtInt::Fin(a), ExtInt::Fin(b)) => a == b,
            _ => false,
        }
    }
}

impl From<i64> for ExtInt {
    fn from(v: i64) -> Self {
        ExtInt::Fin(v)
    }
}

impl Add for ExtInt {
    type Output = ExtInt;

    /// Addition absorbs the empty element.
    fn add(self, rhs: ExtInt) -> ExtInt {
        match (self, rhs) {
            (ExtInt::Fin(a), ExtInt::Fin(b)) => ExtInt::Fin(a + b),
            _ => ExtInt::Inf,
        }
    }
}

impl Neg for ExtInt {
    type Output = ExtInt;

    fn neg(self) -> ExtInt {
        match self {
            ExtInt::Fin(v) => ExtInt::Fin(-v),
            ExtInt::Inf => ExtInt::Inf,
        }
    }
}

impl fmt::Display for ExtInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtInt::Fin(v) => write!(f, "{v}"),
            ExtInt::Inf => write!(f, "."),
        }
    }
}

/// Scalar multiple `coeff * x`. Zero annihilates the empty element;
/// any nonzero coefficient preserves it.
pub fn ext_mul(coeff: i64, x: ExtInt) -> ExtInt {
    match (coeff, x) {
        (_, ExtInt::Fin(v)) => ExtInt::Fin(coeff * v),
        (0, ExtInt::Inf) => ExtInt::Fin(0),
        (_, ExtInt::Inf) => ExtInt::Inf,
    }
}

/// True when no component is finite zero. Empty components pass, and
/// the empty slice passes vacuously.
pub fn all_nonzero(xs: &[ExtInt]) -> bool {
    xs.iter().all(|x| x.is_nonzero())
}

/// Componentwise sign of a vector of finite nonzero entries.
///
/// Zero and empty components have no sign; the first offender is
/// reported by position.
pub fn sgn_vec(xs: &[ExtInt]) -> Result<Vec<i64>, Error> {
    let mut out = Vec::with_capacity(xs.len());
    for (i, x) in xs.iter().enumerate() {
        match x {
            ExtInt::Fin(v) if *v > 0 => out.push(1),
            ExtInt::Fin(v) if *v < 0 => out.push(-1),
            ExtInt::Fin(_) => return Err(Error::SignOfZero { component: i }),
            ExtInt::Inf => return Err(Error::SignOfEmpty { component: i }),
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use ExtInt::{Fin, Inf};

    #[test]
    fn addition_absorbs_empty() {
        assert_eq!(Fin(2) + Fin(3), Fin(5));
        assert_eq!(Inf + Fin(5), Inf);
        assert_eq!(Fin(5) + Inf, Inf);
        assert_eq!(Inf + Inf, Inf);
    }

    #[test]
    fn scalar_multiple_rules() {
        assert_eq!(ext_mul(0, Inf), Fin(0));
        assert_eq!(ext_mul(2, Inf), Inf);
        assert_eq!(ext_mul(-1, Inf), Inf);
        assert_eq!(ext_mul(-1, Fin(5)), Fin(-5));
        assert_eq!(ext_mul(0, Fin(7)), Fin(0));
    }

    #[test]
    fn model_equality_rejects_empty() {
        assert!(Fin(5).model_eq(Fin(5)));
        assert!(!Fin(5).model_eq(Fin(6)));
        assert!(!Inf.model_eq(Fin(5)));
        assert!(!Fin(5).model_eq(Inf));
        assert!(!Inf.model_eq(Inf));
        // structural equality, by contrast, is reflexive
        assert_eq!(Inf, Inf);
    }

    #[test]
    fn nonzero_predicate() {
        assert!(Fin(5).is_nonzero());
        assert!(Fin(-1).is_nonzero());
        assert!(!Fin(0).is_nonzero());
        assert!(Inf.is_nonzero());

        assert!(all_nonzero(&[Fin(1), Inf, Fin(-2)]));
        assert!(!all_nonzero(&[Fin(1), Fin(0)]));
        assert!(all_nonzero(&[]));
    }

    #[test]
    fn signs_of_finite_nonzero_vectors() {
        assert_eq!(sgn_vec(&[Fin(3), Fin(-2), Fin(5)]).unwrap(), vec![1, -1, 1]);
        assert_eq!(
            sgn_vec(&[Fin(3), Fin(0)]),
            Err(Error::SignOfZero { component: 1 })
        );
        assert_eq!(sgn_vec(&[Inf]), Err(Error::SignOfEmpty { component: 0 }));
        assert_eq!(sgn_vec(&[]).unwrap(), Vec::<i64>::new());
    }

    #[test]
    fn negation_and_display() {
        assert_eq!(-Fin(4), Fin(-4));
        assert_eq!(-Inf, Inf);
        assert_eq!(Fin(7).to_string(), "7");
        assert_eq!(Inf.to_string(), ".");
    }
}
