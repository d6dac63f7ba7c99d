use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::{forward_binop, format_rat, rat, rat_sqrt, GaussRat, Rat};
use crate::error::{Error, Result};

/// Exact quaternion `x0 + x1 i + x2 j + x3 k` with rational components.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Quat {
    pub x0: Rat,
    pub x1: Rat,
    pub x2: Rat,
    pub x3: Rat,
}

impl Quat {
    pub fn new(x0: Rat, x1: Rat, x2: Rat, x3: Rat) -> Self {
        Quat { x0, x1, x2, x3 }
    }

    pub fn from_ints(x0: i64, x1: i64, x2: i64, x3: i64) -> Self {
        Quat::new(rat(x0), rat(x1), rat(x2), rat(x3))
    }

    pub fn real(x: Rat) -> Self {
        Quat::new(x, Rat::zero(), Rat::zero(), Rat::zero())
    }

    pub fn zero() -> Self {
        Quat::default()
    }

    pub fn one() -> Self {
        Quat::from_ints(1, 0, 0, 0)
    }

    pub fn i() -> Self {
        Quat::from_ints(0, 1, 0, 0)
    }

    pub fn j() -> Self {
        Quat::from_ints(0, 0, 1, 0)
    }

    pub fn k() -> Self {
        Quat::from_ints(0, 0, 0, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.x0.is_zero() && self.x1.is_zero() && self.x2.is_zero() && self.x3.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.x0.is_one() && self.x1.is_zero() && self.x2.is_zero() && self.x3.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.x1.is_zero() && self.x2.is_zero() && self.x3.is_zero()
    }

    pub fn components(&self) -> [&Rat; 4] {
        [&self.x0, &self.x1, &self.x2, &self.x3]
    }

    pub fn re(&self) -> &Rat {
        &self.x0
    }

    /// Imaginary part as a quaternion with zero real component.
    pub fn im(&self) -> Quat {
        Quat::new(Rat::zero(), self.x1.clone(), self.x2.clone(), self.x3.clone())
    }

    pub fn conj(&self) -> Quat {
        Quat::new(self.x0.clone(), -&self.x1, -&self.x2, -&self.x3)
    }

    /// `|q|^2 = q * conj(q)`
    pub fn norm_sqr(&self) -> Rat {
        &self.x0 * &self.x0 + self.im_norm_sqr()
    }

    /// `|Im(q)|^2`
    pub fn im_norm_sqr(&self) -> Rat {
        &self.x1 * &self.x1 + &self.x2 * &self.x2 + &self.x3 * &self.x3
    }

    pub fn inv(&self) -> Result<Quat> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.norm_sqr();
        Ok(self.conj().scale(&n.recip()))
    }

    pub fn scale(&self, r: &Rat) -> Quat {
        Quat::new(&self.x0 * r, &self.x1 * r, &self.x2 * r, &self.x3 * r)
    }

    /// Splits `q = alpha + beta*j` with `alpha, beta` in the `i`-slice.
    pub fn split(&self) -> (GaussRat, GaussRat) {
        (
            GaussRat::new(self.x0.clone(), self.x1.clone()),
            GaussRat::new(self.x2.clone(), self.x3.clone()),
        )
    }

    /// Inverse of [`Quat::split`]: `alpha + beta*j`.
    pub fn from_split(alpha: &GaussRat, beta: &GaussRat) -> Quat {
        Quat::new(
            alpha.re.clone(),
            alpha.im.clone(),
            beta.re.clone(),
            beta.im.clone(),
        )
    }

    /// Embeds a slice element `a + b i`.
    pub fn from_gauss(z: &GaussRat) -> Quat {
        Quat::from_split(z, &GaussRat::zero())
    }

    /// Writes `q = x + y*axis` with `y >= 0` and `axis` a unit imaginary quaternion.
    ///
    /// Real quaternions get the axis `i`. Fails when `|Im(q)|` is irrational.
    pub fn slice_decompose(&self) -> Result<SliceForm> {
        let x = self.x0.clone();
        if self.is_real() {
            return Ok(SliceForm {
                x,
                y: Rat::zero(),
                axis: Quat::i(),
            });
        }
        let n2 = self.im_norm_sqr();
        let y = rat_sqrt(&n2).ok_or_else(|| Error::NonRationalRadius(format_rat(&n2)))?;
        let axis = self.im().scale(&y.recip());
        Ok(SliceForm { x, y, axis })
    }
}

/// `x + y*axis`, the position of a quaternion on its sphere `x + y S`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SliceForm {
    pub x: Rat,
    pub y: Rat,
    pub axis: Quat,
}

impl SliceForm {
    pub fn reconstruct(&self) -> Quat {
        &Quat::real(self.x.clone()) + &self.axis.scale(&self.y)
    }
}

impl From<Rat> for Quat {
    fn from(r: Rat) -> Self {
        Quat::real(r)
    }
}

impl Add<&Quat> for &Quat {
    type Output = Quat;
    fn add(self, rhs: &Quat) -> Quat {
        Quat::new(
            &self.x0 + &rhs.x0,
            &self.x1 + &rhs.x1,
            &self.x2 + &rhs.x2,
            &self.x3 + &rhs.x3,
        )
    }
}

impl Sub<&Quat> for &Quat {
    type Output = Quat;
    fn sub(self, rhs: &Quat) -> Quat {
        Quat::new(
            &self.x0 - &rhs.x0,
            &self.x1 - &rhs.x1,
            &self.x2 - &rhs.x2,
            &self.x3 - &rhs.x3,
        )
    }
}

/// Hamilton product: `i^2 = j^2 = k^2 = -1`, `ij = k = -ji`.
impl Mul<&Quat> for &Quat {
    type Output = Quat;
    fn mul(self, b: &Quat) -> Quat {
        let a = self;
        Quat::new(
            &a.x0 * &b.x0 - &a.x1 * &b.x1 - &a.x2 * &b.x2 - &a.x3 * &b.x3,
            &a.x0 * &b.x1 + &a.x1 * &b.x0 + &a.x2 * &b.x3 - &a.x3 * &b.x2,
            &a.x0 * &b.x2 - &a.x1 * &b.x3 + &a.x2 * &b.x0 + &a.x3 * &b.x1,
            &a.x0 * &b.x3 + &a.x1 * &b.x2 - &a.x2 * &b.x1 + &a.x3 * &b.x0,
        )
    }
}

forward_binop!(impl Add, add for Quat);
forward_binop!(impl Sub, sub for Quat);
forward_binop!(impl Mul, mul for Quat);

impl Neg for Quat {
    type Output = Quat;
    fn neg(self) -> Quat {
        Quat::new(-self.x0, -self.x1, -self.x2, -self.x3)
    }
}

impl Neg for &Quat {
    type Output = Quat;
    fn neg(self) -> Quat {
        Quat::new(-&self.x0, -&self.x1, -&self.x2, -&self.x3)
    }
}

pub(crate) fn write_components(
    f: &mut fmt::Formatter<'_>,
    comps: &[&Rat],
    units: &[&str],
) -> fmt::Result {
    let mut first = true;
    for (c, unit) in comps.iter().zip(units) {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        if first {
            if neg {
                f.write_str("-")?;
            }
        } else {
            f.write_str(if neg { " - " } else { " + " })?;
        }
        first = false;
        let a = c.abs();
        if unit.is_empty() {
            f.write_str(&format_rat(&a))?;
        } else if a.is_one() {
            f.write_str(unit)?;
        } else if a.is_integer() {
            write!(f, "{}{}", a.numer(), unit)?;
        } else {
            write!(f, "({}){}", format_rat(&a), unit)?;
        }
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

impl fmt::Display for Quat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_components(f, &self.components(), &["", "i", "j", "k"])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::ratio;

    #[test]
    fn multiplication_table() {
        let (i, j, k) = (Quat::i(), Quat::j(), Quat::k());
        let m1 = -Quat::one();
        assert_eq!(&i * &i, m1);
        assert_eq!(&j * &j, m1);
        assert_eq!(&k * &k, m1);
        assert_eq!(&i * &j, k);
        assert_eq!(&j * &i, -&k);
        assert_eq!(&j * &k, i);
        assert_eq!(&k * &j, -&i);
        assert_eq!(&k * &i, j);
        assert_eq!(&i * &k, -&j);
    }

    #[test]
    fn product_examples() {
        let a = Quat::from_ints(1, 1, 0, 0);
        let b = Quat::from_ints(1, 0, 1, 0);
        assert_eq!(&a * &b, Quat::from_ints(1, 1, 1, 1));
        let q = Quat::new(ratio(2, 3), rat(-1), ratio(5, 7), rat(4));
        assert_eq!(&q * &Quat::one(), q);
    }

    #[test]
    fn inverses() {
        let h = ratio(1, 2);
        assert_eq!(
            Quat::from_ints(1, 1, 0, 0).inv().unwrap(),
            Quat::new(h.clone(), -h, rat(0), rat(0))
        );
        let q = ratio(1, 4);
        assert_eq!(
            Quat::from_ints(1, 1, 1, 1).inv().unwrap(),
            Quat::new(q.clone(), -&q, -&q, -q)
        );
        assert_eq!(Quat::zero().inv(), Err(Error::DivisionByZero));
        let p = Quat::new(ratio(2, 3), rat(-1), ratio(5, 7), rat(4));
        assert!((&p.inv().unwrap() * &p).is_one());
        assert!((&p * &p.inv().unwrap()).is_one());
    }

    #[test]
    fn slice_decomposition() {
        let s = Quat::from_ints(1, 2, 2, 1).slice_decompose().unwrap();
        assert_eq!(s.x, rat(1));
        assert_eq!(s.y, rat(3));
        assert_eq!(s.axis, Quat::new(rat(0), ratio(2, 3), ratio(2, 3), ratio(1, 3)));
        assert_eq!(s.reconstruct(), Quat::from_ints(1, 2, 2, 1));

        let s = Quat::i().slice_decompose().unwrap();
        assert_eq!((s.x, s.y, s.axis), (rat(0), rat(1), Quat::i()));

        let s = Quat::from_ints(5, 0, 0, 0).slice_decompose().unwrap();
        assert_eq!((s.x, s.y, s.axis), (rat(5), rat(0), Quat::i()));

        assert!(matches!(
            Quat::from_ints(0, 1, 1, 0).slice_decompose(),
            Err(Error::NonRationalRadius(_))
        ));
    }

    #[test]
    fn rational_axis_squares_to_minus_one() {
        let axis = Quat::new(rat(0), ratio(3, 5), ratio(4, 5), rat(0));
        assert_eq!(&axis * &axis, -Quat::one());
    }

    #[test]
    fn display() {
        assert_eq!(Quat::from_ints(1, -1, 0, 2).to_string(), "1 - i + 2k");
        assert_eq!(Quat::new(rat(0), rat(0), ratio(-3, 2), rat(0)).to_string(), "-(3/2)j");
        assert_eq!(Quat::zero().to_string(), "0");
    }
}
