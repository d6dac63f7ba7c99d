//! Univariate polynomials over the Gaussian rationals.
//!
//! These hold the slice components `F`, `G` of a quaternionic polynomial and
//! every entry of the Koszul matrices. The ring is a Euclidean domain, so
//! gcds and Bezout witnesses are computed by the extended Euclidean algorithm.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{Signed, Zero};

use crate::arith::{forward_binop, format_rat, GaussRat, Rat};
use crate::error::{Error, Result};

/// Polynomial `sum coeffs[m] z^m` with no trailing zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct CPoly {
    coeffs: Vec<GaussRat>,
}

impl CPoly {
    pub fn new(mut coeffs: Vec<GaussRat>) -> Self {
        while coeffs.last().is_some_and(GaussRat::is_zero) {
            coeffs.pop();
        }
        CPoly { coeffs }
    }

    /// Builds from `(re, im)` integer pairs in ascending degree.
    pub fn from_ints(coeffs: &[(i64, i64)]) -> Self {
        CPoly::new(coeffs.iter().map(|&(a, b)| GaussRat::from_int(a, b)).collect())
    }

    pub fn from_real(coeffs: &[Rat]) -> Self {
        CPoly::new(coeffs.iter().cloned().map(GaussRat::real).collect())
    }

    pub fn zero() -> Self {
        CPoly::default()
    }

    pub fn one() -> Self {
        CPoly::constant(GaussRat::one())
    }

    pub fn constant(c: GaussRat) -> Self {
        CPoly::new(vec![c])
    }

    /// The indeterminate `z`.
    pub fn z() -> Self {
        CPoly::from_ints(&[(0, 0), (1, 0)])
    }

    /// `z - c`
    pub fn linear(c: &GaussRat) -> Self {
        CPoly::new(vec![-c, GaussRat::one()])
    }

    pub fn coeffs(&self) -> &[GaussRat] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<GaussRat> {
        self.coeffs
    }

    /// Coefficient of `z^m`, zero past the degree.
    pub fn coeff(&self, m: usize) -> GaussRat {
        self.coeffs.get(m).cloned().unwrap_or_default()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// True for nonzero constants, i.e. units of the ring.
    pub fn is_unit(&self) -> bool {
        self.coeffs.len() == 1
    }

    pub fn is_real(&self) -> bool {
        self.coeffs.iter().all(GaussRat::is_real)
    }

    pub fn leading(&self) -> Option<&GaussRat> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &GaussRat) -> CPoly {
        if c.is_zero() {
            return CPoly::zero();
        }
        CPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Divides by the leading coefficient. The zero polynomial stays zero.
    pub fn monic(&self) -> CPoly {
        match self.leading() {
            None => CPoly::zero(),
            Some(lc) => self.scale(&lc.inv().expect("nonzero leading coefficient")),
        }
    }

    /// The hat involution `z -> conj(p(conj z))`: conjugates each coefficient.
    pub fn hat(&self) -> CPoly {
        CPoly {
            coeffs: self.coeffs.iter().map(GaussRat::conj).collect(),
        }
    }

    pub fn eval(&self, z: &GaussRat) -> GaussRat {
        self.coeffs
            .iter()
            .rev()
            .fold(GaussRat::zero(), |acc, c| &(&acc * z) + c)
    }

    pub fn derivative(&self) -> CPoly {
        CPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(m, c)| c.scale(&Rat::from_integer((m as i64).into())))
                .collect(),
        )
    }

    pub fn pow(&self, e: u32) -> CPoly {
        (0..e).fold(CPoly::one(), |acc, _| &acc * self)
    }

    /// Euclidean division `self = q * d + r` with `deg r < deg d`.
    pub fn div_rem(&self, d: &CPoly) -> Result<(CPoly, CPoly)> {
        let dl = d.leading().ok_or(Error::DivisionByZero)?.inv()?;
        let dd = d.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((CPoly::zero(), self.clone()));
        }
        let mut quot = vec![GaussRat::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] * &dl;
            if !c.is_zero() {
                for (m, dc) in d.coeffs.iter().enumerate() {
                    rem[k + m] = &rem[k + m] - &(&c * dc);
                }
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        Ok((CPoly::new(quot), CPoly::new(rem)))
    }

    /// `Some(q)` when `d` divides `self` exactly.
    pub fn exact_div(&self, d: &CPoly) -> Option<CPoly> {
        match self.div_rem(d) {
            Ok((q, r)) if r.is_zero() => Some(q),
            _ => None,
        }
    }

    pub fn rem(&self, d: &CPoly) -> Result<CPoly> {
        Ok(self.div_rem(d)?.1)
    }

    pub fn divides(&self, other: &CPoly) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        other.exact_div(self).is_some()
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &CPoly) -> CPoly {
        let (mut a, mut b) = (self.monic(), other.monic());
        while !b.is_zero() {
            let r = a.rem(&b).expect("nonzero divisor");
            a = b;
            b = r.monic();
        }
        a
    }

    /// Extended Euclid: `(g, s, t)` with `s*a + t*b = g`, `g` monic (or zero).
    ///
    /// Each remainder is made monic (with its cofactors) before dividing by it,
    /// which keeps the rational coefficients from swelling.
    pub fn ext_gcd(a: &CPoly, b: &CPoly) -> (CPoly, CPoly, CPoly) {
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1) = (CPoly::one(), CPoly::zero());
        let (mut t0, mut t1) = (CPoly::zero(), CPoly::one());
        while let Some(lc) = r1.leading() {
            if !lc.is_one() {
                let u = lc.inv().expect("nonzero leading coefficient");
                r1 = r1.scale(&u);
                s1 = s1.scale(&u);
                t1 = t1.scale(&u);
            }
            let (q, r) = r0.div_rem(&r1).expect("nonzero divisor");
            let s = &s0 - &(&q * &s1);
            let t = &t0 - &(&q * &t1);
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
            t0 = std::mem::replace(&mut t1, t);
        }
        match r0.leading() {
            None => (CPoly::zero(), CPoly::zero(), CPoly::zero()),
            Some(lc) => {
                let u = lc.inv().expect("nonzero leading coefficient");
                (r0.scale(&u), s0.scale(&u), t0.scale(&u))
            }
        }
    }

    /// `p / gcd(p, p')`, monic.
    pub fn squarefree_part(&self) -> CPoly {
        if self.degree().unwrap_or(0) == 0 {
            return self.monic();
        }
        let g = self.gcd(&self.derivative());
        self.exact_div(&g).expect("gcd divides").monic()
    }
}

/// gcd of several polynomials together with witnesses `sum w_k p_k = gcd`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bezout {
    pub gcd: CPoly,
    pub witnesses: Vec<CPoly>,
}

/// Multi-polynomial Bezout identity, folded pairwise from the right.
///
/// The returned identity is re-checked by substitution before returning.
pub fn bezout_multi(ps: &[CPoly]) -> Result<Bezout> {
    if ps.iter().all(CPoly::is_zero) {
        return Err(Error::AllZero);
    }
    let mut gcd = CPoly::zero();
    let mut witnesses = vec![CPoly::zero(); ps.len()];
    for (idx, p) in ps.iter().enumerate().rev() {
        let (g, s, t) = CPoly::ext_gcd(p, &gcd);
        if !t.is_one() {
            for w in witnesses.iter_mut().skip(idx + 1) {
                *w = &*w * &t;
            }
        }
        witnesses[idx] = s;
        gcd = g;
    }
    let check = ps
        .iter()
        .zip(&witnesses)
        .fold(CPoly::zero(), |acc, (p, w)| &acc + &(p * w));
    if check != gcd {
        return Err(Error::Internal(format!(
            "Bezout identity failed: sum = {check}, gcd = {gcd}"
        )));
    }
    Ok(Bezout { gcd, witnesses })
}

impl Add<&CPoly> for &CPoly {
    type Output = CPoly;
    fn add(self, rhs: &CPoly) -> CPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        CPoly::new((0..n).map(|m| &self.coeff(m) + &rhs.coeff(m)).collect())
    }
}

impl Sub<&CPoly> for &CPoly {
    type Output = CPoly;
    fn sub(self, rhs: &CPoly) -> CPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        CPoly::new((0..n).map(|m| &self.coeff(m) - &rhs.coeff(m)).collect())
    }
}

impl Mul<&CPoly> for &CPoly {
    type Output = CPoly;
    fn mul(self, rhs: &CPoly) -> CPoly {
        if self.is_zero() || rhs.is_zero() {
            return CPoly::zero();
        }
        let mut out = vec![GaussRat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (a, ca) in self.coeffs.iter().enumerate() {
            if ca.is_zero() {
                continue;
            }
            for (b, cb) in rhs.coeffs.iter().enumerate() {
                out[a + b] = &out[a + b] + &(ca * cb);
            }
        }
        CPoly::new(out)
    }
}

forward_binop!(impl Add, add for CPoly);
forward_binop!(impl Sub, sub for CPoly);
forward_binop!(impl Mul, mul for CPoly);

impl Neg for &CPoly {
    type Output = CPoly;
    fn neg(self) -> CPoly {
        CPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for CPoly {
    type Output = CPoly;
    fn neg(self) -> CPoly {
        -&self
    }
}

/// Writes `c * var^m` terms from the highest degree down, e.g. `z^2 - (1 + i)z + 3`.
pub(crate) fn write_poly<T>(
    f: &mut fmt::Formatter<'_>,
    coeffs: &[T],
    var: &str,
    parts: impl Fn(&T) -> Vec<(Rat, &'static str)>,
) -> fmt::Result {
    let mut first = true;
    for (m, c) in coeffs.iter().enumerate().rev() {
        let nz: Vec<(Rat, &str)> = parts(c).into_iter().filter(|(r, _)| !r.is_zero()).collect();
        if nz.is_empty() {
            continue;
        }
        let power = match m {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{m}"),
        };
        let (neg, body) = if nz.len() == 1 {
            let (r, unit) = &nz[0];
            let a = r.abs();
            let body = if unit.is_empty() && a == Rat::from_integer(1.into()) && m > 0 {
                String::new()
            } else if a == Rat::from_integer(1.into()) && !unit.is_empty() {
                unit.to_string()
            } else if a.is_integer() || m == 0 && unit.is_empty() {
                format!("{}{}", format_rat(&a), unit)
            } else {
                format!("({}){}", format_rat(&a), unit)
            };
            (r.is_negative(), body)
        } else {
            let mut s = String::from("(");
            for (idx, (r, unit)) in nz.iter().enumerate() {
                if idx > 0 {
                    s.push_str(if r.is_negative() { " - " } else { " + " });
                } else if r.is_negative() {
                    s.push('-');
                }
                let a = r.abs();
                if !unit.is_empty() && a == Rat::from_integer(1.into()) {
                    s.push_str(unit);
                } else if unit.is_empty() || a.is_integer() {
                    s.push_str(&format_rat(&a));
                    s.push_str(unit);
                } else {
                    s.push_str(&format!("({}){}", format_rat(&a), unit));
                }
            }
            s.push(')');
            (false, s)
        };
        if first {
            if neg {
                f.write_str("-")?;
            }
        } else {
            f.write_str(if neg { " - " } else { " + " })?;
        }
        first = false;
        if body.is_empty() && power.is_empty() {
            f.write_str("1")?;
        } else {
            write!(f, "{body}{power}")?;
        }
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

impl fmt::Display for CPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_poly(f, &self.coeffs, "z", |c| {
            vec![(c.re.clone(), ""), (c.im.clone(), "i")]
        })
    }
}
