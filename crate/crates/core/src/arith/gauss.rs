use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{forward_binop, rat, Rat};
use crate::error::{Error, Result};

/// `re + im*i`, an element of the slice plane through `1` and `i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct GaussRat {
    pub re: Rat,
    pub im: Rat,
}

impl GaussRat {
    pub fn new(re: Rat, im: Rat) -> Self {
        GaussRat { re, im }
    }

    pub fn from_int(re: i64, im: i64) -> Self {
        GaussRat::new(rat(re), rat(im))
    }

    pub fn real(re: Rat) -> Self {
        GaussRat::new(re, Rat::zero())
    }

    pub fn i() -> Self {
        GaussRat::from_int(0, 1)
    }

    pub fn zero() -> Self {
        GaussRat::default()
    }

    pub fn one() -> Self {
        GaussRat::from_int(1, 0)
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        GaussRat::new(self.re.clone(), -&self.im)
    }

    /// `|z|^2`
    pub fn norm_sqr(&self) -> Rat {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.norm_sqr();
        Ok(GaussRat::new(&self.re / &n, -&self.im / &n))
    }

    pub fn scale(&self, r: &Rat) -> Self {
        GaussRat::new(&self.re * r, &self.im * r)
    }
}

impl From<Rat> for GaussRat {
    fn from(r: Rat) -> Self {
        GaussRat::real(r)
    }
}

impl Add<&GaussRat> for &GaussRat {
    type Output = GaussRat;
    fn add(self, rhs: &GaussRat) -> GaussRat {
        GaussRat::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl Sub<&GaussRat> for &GaussRat {
    type Output = GaussRat;
    fn sub(self, rhs: &GaussRat) -> GaussRat {
        GaussRat::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl Mul<&GaussRat> for &GaussRat {
    type Output = GaussRat;
    fn mul(self, rhs: &GaussRat) -> GaussRat {
        GaussRat::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

/// Panics on division by zero, like the rational division it wraps.
impl Div<&GaussRat> for &GaussRat {
    type Output = GaussRat;
    fn div(self, rhs: &GaussRat) -> GaussRat {
        self * &rhs.inv().expect("GaussRat division by zero")
    }
}

forward_binop!(impl Add, add for GaussRat);
forward_binop!(impl Sub, sub for GaussRat);
forward_binop!(impl Mul, mul for GaussRat);
forward_binop!(impl Div, div for GaussRat);

impl Neg for GaussRat {
    type Output = GaussRat;
    fn neg(self) -> GaussRat {
        GaussRat::new(-self.re, -self.im)
    }
}

impl Neg for &GaussRat {
    type Output = GaussRat;
    fn neg(self) -> GaussRat {
        GaussRat::new(-&self.re, -&self.im)
    }
}

impl fmt::Display for GaussRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        super::quat::write_components(f, &[&self.re, &self.im], &["", "i"])
    }
}
