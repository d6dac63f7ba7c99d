//! Zeros of quaternionic polynomials, sphere by sphere.
//!
//! A sphere `x + y S` is identified by the rational pair `(x, y^2)`. On it,
//! `(x + yI)^m = a_m + b_m yI` with `a_m, b_m` polynomial in `x` and `y^2`, so
//! `f(x + yI) = A + yI C` with quaternions `A, C` that stay rational even when
//! `y` does not. Everything below is derived from that pair.

use std::fmt;

use num_traits::{Signed, Zero};

use super::HPoly;
use crate::arith::{format_rat, rat_sqrt, GaussRat, Quat, Rat};
use crate::cpoly::CPoly;
use crate::error::{Error, Result};
use crate::factor::low_degree_factors;

/// The sphere `x + y S`; `y_squared = 0` is the real point `x`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Sphere {
    pub x: Rat,
    pub y_squared: Rat,
}

impl Sphere {
    pub fn new(x: Rat, y_squared: Rat) -> Self {
        assert!(!y_squared.is_negative(), "sphere radius squared must be >= 0");
        Sphere { x, y_squared }
    }

    /// The sphere through `q`.
    pub fn of(q: &Quat) -> Self {
        Sphere::new(q.x0.clone(), q.im_norm_sqr())
    }

    pub fn is_real_point(&self) -> bool {
        self.y_squared.is_zero()
    }

    /// `y`, when it is rational.
    pub fn radius(&self) -> Option<Rat> {
        rat_sqrt(&self.y_squared)
    }

    /// `z^2 - 2xz + x^2 + y^2` (or `z - x` for a real point): the real polynomial
    /// vanishing exactly at the sphere's slice points.
    pub fn char_poly(&self) -> CPoly {
        if self.is_real_point() {
            return CPoly::linear(&GaussRat::real(self.x.clone()));
        }
        let two = Rat::from_integer(2.into());
        CPoly::from_real(&[
            &self.x * &self.x + &self.y_squared,
            -(&two * &self.x),
            Rat::from_integer(1.into()),
        ])
    }

    /// Reads a sphere off a monic real factor of degree 1 or 2 with non-real roots.
    pub fn from_factor(p: &CPoly) -> Option<Self> {
        if !p.is_real() {
            return None;
        }
        match p.degree()? {
            1 => Some(Sphere::new(-&p.coeff(0).re / &p.coeff(1).re, Rat::zero())),
            2 => {
                let p = p.monic();
                let b = p.coeff(1).re;
                let c = p.coeff(0).re;
                let x = -b / Rat::from_integer(2.into());
                let y2 = c - &x * &x;
                y2.is_positive().then(|| Sphere::new(x, y2))
            }
            _ => None,
        }
    }
}

impl fmt::Display for Sphere {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Sphere(x={}, y^2={})", format_rat(&self.x), format_rat(&self.y_squared))
    }
}

/// What `f` does on one sphere.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SphereZeros {
    /// `f` vanishes on the whole sphere.
    Spherical,
    /// Exactly one zero on the sphere.
    Point(Quat),
    NoZero,
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ZeroSet {
    pub spherical: Vec<Sphere>,
    pub isolated: Vec<(Sphere, Quat)>,
    /// Real factor of `f^s` whose spheres have irrational data; left unresolved.
    pub residual: CPoly,
}

/// Quaternions `(A, C)` with `f(x + yI) = A + yI C` for every unit `I`.
pub fn eval_on_sphere(f: &HPoly, s: &Sphere) -> (Quat, Quat) {
    let mut a_pow = Rat::from_integer(1.into());
    let mut b_pow = Rat::zero();
    let mut big_a = Quat::zero();
    let mut big_c = Quat::zero();
    for coeff in f.coeffs() {
        big_a = &big_a + &coeff.scale(&a_pow);
        big_c = &big_c + &coeff.scale(&b_pow);
        // (a + b yI)(x + yI) = (a x - b y^2) + (a + b x) yI
        let next_a = &a_pow * &s.x - &b_pow * &s.y_squared;
        let next_b = &a_pow + &b_pow * &s.x;
        a_pow = next_a;
        b_pow = next_b;
    }
    (big_a, big_c)
}

pub fn zeros_on_sphere(f: &HPoly, s: &Sphere) -> SphereZeros {
    let (a, c) = eval_on_sphere(f, s);
    if s.is_real_point() {
        return if a.is_zero() {
            SphereZeros::Point(Quat::real(s.x.clone()))
        } else {
            SphereZeros::NoZero
        };
    }
    if c.is_zero() {
        return if a.is_zero() {
            SphereZeros::Spherical
        } else {
            SphereZeros::NoZero
        };
    }
    // A + yI C = 0 forces yI = -A C^{-1}; it must be imaginary of modulus y.
    let on_sphere = a.norm_sqr() == &s.y_squared * &c.norm_sqr() && (&a * &c.conj()).x0.is_zero();
    if !on_sphere {
        return SphereZeros::NoZero;
    }
    let y_axis = -(&a * &c.inv().expect("C is nonzero"));
    SphereZeros::Point(&Quat::real(s.x.clone()) + &y_axis)
}

/// Zeros of `f` on every sphere carried by a rational linear or quadratic factor of `f^s`.
pub fn classify_zeros(f: &HPoly) -> Result<ZeroSet> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial("classify_zeros"));
    }
    let sym = f.symmetrization_cpoly();
    let factors = low_degree_factors(&sym)
        .ok_or_else(|| Error::Internal("symmetrization is not real".into()))?;
    let mut out = ZeroSet {
        residual: factors.residual,
        ..ZeroSet::default()
    };
    for (factor, mult) in factors.factors {
        let Some(sphere) = Sphere::from_factor(&factor) else {
            // real quadratic with irrational real roots
            out.residual = &out.residual * &factor.pow(mult);
            continue;
        };
        match zeros_on_sphere(f, &sphere) {
            SphereZeros::Spherical => out.spherical.push(sphere),
            SphereZeros::Point(q) => out.isolated.push((sphere, q)),
            SphereZeros::NoZero => {
                return Err(Error::Internal(format!(
                    "f^s vanishes on {sphere} but f has no zero there"
                )))
            }
        }
    }
    out.spherical.sort();
    out.isolated.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(out)
}
