//! Exact rational arithmetic for twist phases.
//!
//! A ribbon twist acts on a simple object as the scalar `e^{2*pi*i*h}` where
//! `h` is the lowest conformal weight. Every formula implemented in this
//! crate consumes `h` only through that exponential, so phases are stored
//! as exact rationals reduced modulo 1 into `[0, 1)`. No floating point
//! appears anywhere.

use core::fmt;
use core::ops::{Add, Neg, Sub};

use num_rational::Ratio;

use crate::error::{Error, Result};

/// Exact rational number, used for conformal weights that are *not*
/// reduced modulo 1 (admissibility bookkeeping).
pub type Rational = Ratio<i64>;

/// A scalar phase: an exact rational in `[0, 1)` representing the exponent
/// `h mod 1` of `e^{2*pi*i*h}`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Phase(Ratio<i64>);

impl Phase {
    /// The zero phase (trivial twist).
    pub fn zero() -> Phase {
        Phase(Ratio::from_integer(0))
    }

    /// Builds `num/den mod 1`. Fails on a zero denominator.
    pub fn new(num: i64, den: i64) -> Result<Phase> {
        if den == 0 {
            return Err(Error::BadParameter(alloc::format!(
                "phase denominator is zero ({num}/0)"
            )));
        }
        Ok(Phase::from_rational(Ratio::new(num, den)))
    }

    /// Reduces an exact rational modulo 1 into `[0, 1)`.
    pub fn from_rational(r: Rational) -> Phase {
        Phase(r - r.floor())
    }

    /// Numerator in lowest terms; `0 <= num < den` or `num = 0, den = 1`.
    pub fn numer(&self) -> i64 {
        *self.0.numer()
    }

    /// Denominator in lowest terms (always positive).
    pub fn denom(&self) -> i64 {
        *self.0.denom()
    }

    /// True for the trivial phase.
    pub fn is_zero(&self) -> bool {
        self.0.numer() == &0
    }

    /// The underlying rational representative in `[0, 1)`.
    pub fn as_rational(&self) -> Rational {
        self.0
    }
}

impl Add for Phase {
    type Output = Phase;
    fn add(self, rhs: Phase) -> Phase {
        Phase::from_rational(self.0 + rhs.0)
    }
}

impl Sub for Phase {
    type Output = Phase;
    fn sub(self, rhs: Phase) -> Phase {
        Phase::from_rational(self.0 - rhs.0)
    }
}

impl Neg for Phase {
    type Output = Phase;
    fn neg(self) -> Phase {
        Phase::from_rational(-self.0)
    }
}

impl fmt::Display for Phase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            write!(f, "0")
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}
