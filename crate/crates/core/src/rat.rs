//! Exact rational numbers and the strictly positive subtype used for
//! precision requests.
//!
//! [`Rat`] is an arbitrary-precision rational kept in canonical form
//! (reduced, denominator positive), so structural equality coincides with
//! numeric equality. The textual form is `p/q` with an optional sign, the
//! `/q` part omitted when the denominator is 1; printing always emits the
//! canonical form, so parse ∘ print is the identity.

use crate::Error;
use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt;
use std::str::FromStr;

/// Arbitrary-precision rational in canonical form.
pub type Rat = num_rational::BigRational;

/// The integer `n` as a rational.
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// The fraction `n/d` in canonical form.
///
/// # Panics
/// Panics if `d == 0`.
pub fn rat_frac(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Parses a rational from its textual form (`"3"`, `"-6"`, `"324/2592"`).
///
/// Surrounding ASCII whitespace is ignored; the result is canonical, so
/// `"324/2592"` parses to the same value as `"1/8"`. A zero denominator,
/// an empty string, or any other malformed input is rejected.
pub fn parse_rat(text: &str) -> Result<Rat, Error> {
    let trimmed = text.trim();
    Rat::from_str(trimmed).map_err(|e| Error::ParseRational {
        text: text.to_owned(),
        reason: e.to_string(),
    })
}

/// Formats a rational in canonical textual form.
///
/// This is the inverse of [`parse_rat`] and identical to the `Display`
/// output; it exists so call sites that serialize values spell out that the
/// *canonical* form is intended.
pub fn format_rat(value: &Rat) -> String {
    value.to_string()
}

/// A strictly positive rational: a precision request, a tolerance, a radius.
///
/// The constructor rejects zero and negative values, so arithmetic that
/// visibly preserves positivity (halving, adding, taking a minimum) needs no
/// further checks.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PosRat(Rat);

impl PosRat {
    /// Wraps `value`, rejecting anything ≤ 0.
    pub fn new(value: Rat) -> Result<Self, Error> {
        if value.is_positive() {
            Ok(PosRat(value))
        } else {
            Err(Error::NotPositive(value))
        }
    }

    /// The positive fraction `n/d`; convenient for literals like
    /// `PosRat::frac(1, 24)`.
    ///
    /// # Panics
    /// Panics if `d == 0` or the fraction is not strictly positive.
    pub fn frac(n: i64, d: i64) -> Self {
        PosRat::new(rat_frac(n, d)).expect("PosRat::frac requires a positive fraction")
    }

    /// Wraps a value already known to be positive.
    pub(crate) fn unchecked(value: Rat) -> Self {
        debug_assert!(value.is_positive(), "PosRat invariant violated");
        PosRat(value)
    }

    /// The underlying rational.
    pub fn get(&self) -> &Rat {
        &self.0
    }

    /// Consumes the wrapper, returning the underlying rational.
    pub fn into_rat(self) -> Rat {
        self.0
    }

    /// Exactly half of this value.
    pub fn halve(&self) -> PosRat {
        PosRat(&self.0 / rat_int(2))
    }

    /// The sum of two positive rationals.
    pub fn add(&self, other: &PosRat) -> PosRat {
        PosRat(&self.0 + &other.0)
    }

    /// This value divided by the positive integer `d`.
    ///
    /// # Panics
    /// Panics if `d == 0`.
    pub fn div_int(&self, d: u32) -> PosRat {
        assert!(d > 0, "division by zero");
        PosRat(&self.0 / rat_int(i64::from(d)))
    }
}

impl fmt::Display for PosRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Ceiling of a non-negative rational as a `usize`.
///
/// # Panics
/// Panics if `value` is negative or its ceiling does not fit in `usize`.
pub(crate) fn ceil_to_usize(value: &Rat) -> usize {
    assert!(
        !value.is_negative(),
        "ceil_to_usize requires a non-negative value"
    );
    value
        .ceil()
        .to_integer()
        .to_usize()
        .expect("ceiling out of usize range")
}

/// True when `value` is an integer (denominator 1 in canonical form).
pub(crate) fn is_integer(value: &Rat) -> bool {
    value.denom().is_one()
}

/// Floor of a non-negative rational as a `usize`.
///
/// # Panics
/// Panics if `value` is negative or its floor does not fit in `usize`.
pub(crate) fn floor_to_usize(value: &Rat) -> usize {
    assert!(
        !value.is_negative(),
        "floor_to_usize requires a non-negative value"
    );
    value
        .floor()
        .to_integer()
        .to_usize()
        .expect("floor out of usize range")
}

/// Zero as a rational; shorthand used throughout the crate.
pub(crate) fn zero() -> Rat {
    Rat::zero()
}
