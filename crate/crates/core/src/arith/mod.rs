//! Exact scalar arithmetic: rationals, Gaussian rationals and quaternions.
//!
//! Nothing in here rounds. Every other module builds on these three scalar
//! types, so their operator impls are provided for all owned/borrowed
//! combinations.

mod gauss;
mod quat;

pub use gauss::GaussRat;
pub use quat::{Quat, SliceForm};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
pub type Rat = num_rational::BigRational;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"p"` or `"p/q"` (optional sign, no whitespace inside).
pub fn parse_rat(s: &str) -> Option<Rat> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    let num: BigInt = num.parse().ok()?;
    let den: BigInt = match den {
        Some(d) => d.parse().ok()?,
        None => BigInt::one(),
    };
    if den.is_zero() {
        return None;
    }
    Some(Rat::new(num, den))
}

/// Canonical string: `"p"` for integers, `"p/q"` otherwise.
pub fn format_rat(r: &Rat) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Exact square root when `r` is the square of a rational.
pub fn rat_sqrt(r: &Rat) -> Option<Rat> {
    if r.is_negative() {
        return None;
    }
    let n = r.numer().sqrt();
    let d = r.denom().sqrt();
    if &(&n * &n) == r.numer() && &(&d * &d) == r.denom() {
        Some(Rat::new(n, d))
    } else {
        None
    }
}

/// Implements the by-value operator variants in terms of `&T op &T`.
macro_rules! forward_binop {
    (impl $imp:ident, $method:ident for $t:ty) => {
        impl std::ops::$imp<$t> for $t {
            type Output = $t;
            fn $method(self, rhs: $t) -> $t {
                std::ops::$imp::$method(&self, &rhs)
            }
        }
        impl std::ops::$imp<&$t> for $t {
            type Output = $t;
            fn $method(self, rhs: &$t) -> $t {
                std::ops::$imp::$method(&self, rhs)
            }
        }
        impl std::ops::$imp<$t> for &$t {
            type Output = $t;
            fn $method(self, rhs: $t) -> $t {
                std::ops::$imp::$method(self, &rhs)
            }
        }
    };
}
pub(crate) use forward_binop;
