//! Quaternionic polynomials `f(q) = sum q^m a_m` with coefficients on the right.
//!
//! Multiplication is the regular (star) product, which on coefficients is the
//! Cauchy convolution `c_n = sum a_m b_{n-m}`. The slice is fixed once and for
//! all as `I = i`, `J = j`, so every coefficient splits as `alpha + beta*j` with
//! `alpha, beta` in the Gaussian rationals.

mod zeros;

pub use zeros::{classify_zeros, eval_on_sphere, zeros_on_sphere, Sphere, SphereZeros, ZeroSet};

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{Signed, Zero};

use crate::arith::{forward_binop, format_rat, GaussRat, Quat, Rat};
use crate::cpoly::CPoly;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct HPoly {
    coeffs: Vec<Quat>,
}

/// Slice components of `f` on the `i`-plane: `f(z) = F(z) + G(z) j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SplitPair {
    pub f: CPoly,
    pub g: CPoly,
}

/// `f^{-*} = (f^s)^{-1} f^c`, kept as a numerator/denominator pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReciprocalPair {
    pub numerator: HPoly,
    pub denominator: HPoly,
}

impl HPoly {
    pub fn new(mut coeffs: Vec<Quat>) -> Self {
        while coeffs.last().is_some_and(Quat::is_zero) {
            coeffs.pop();
        }
        HPoly { coeffs }
    }

    /// Coefficients given as `[x0, x1, x2, x3]` integer rows, ascending degree.
    pub fn from_ints(coeffs: &[[i64; 4]]) -> Self {
        HPoly::new(
            coeffs
                .iter()
                .map(|c| Quat::from_ints(c[0], c[1], c[2], c[3]))
                .collect(),
        )
    }

    pub fn zero() -> Self {
        HPoly::default()
    }

    pub fn one() -> Self {
        HPoly::constant(Quat::one())
    }

    pub fn constant(c: Quat) -> Self {
        HPoly::new(vec![c])
    }

    /// The variable `q`.
    pub fn q() -> Self {
        HPoly::new(vec![Quat::zero(), Quat::one()])
    }

    /// `q - c`
    pub fn linear(c: &Quat) -> Self {
        HPoly::new(vec![-c, Quat::one()])
    }

    /// Embeds a real-coefficient slice polynomial. Non-real coefficients are rejected.
    pub fn from_real_cpoly(p: &CPoly) -> Option<Self> {
        p.is_real().then(|| {
            HPoly::new(
                p.coeffs()
                    .iter()
                    .map(|c| Quat::real(c.re.clone()))
                    .collect(),
            )
        })
    }

    pub fn coeffs(&self) -> &[Quat] {
        &self.coeffs
    }

    pub fn coeff(&self, m: usize) -> Quat {
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

    /// All coefficients real, i.e. slice preserving.
    pub fn is_real(&self) -> bool {
        self.coeffs.iter().all(Quat::is_real)
    }

    /// `f * c` for a constant `c`.
    pub fn mul_right(&self, c: &Quat) -> HPoly {
        HPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// `c * f` for a constant `c`.
    pub fn mul_left(&self, c: &Quat) -> HPoly {
        HPoly::new(self.coeffs.iter().map(|a| c * a).collect())
    }

    pub fn scale(&self, r: &Rat) -> HPoly {
        HPoly::new(self.coeffs.iter().map(|a| a.scale(r)).collect())
    }

    /// Regular product; the Cauchy convolution of coefficient sequences.
    pub fn star(&self, other: &HPoly) -> HPoly {
        if self.is_zero() || other.is_zero() {
            return HPoly::zero();
        }
        let mut out = vec![Quat::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (m, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (l, b) in other.coeffs.iter().enumerate() {
                out[m + l] = &out[m + l] + &(a * b);
            }
        }
        HPoly::new(out)
    }

    /// `f^c`: quaternion conjugate of every coefficient.
    pub fn regular_conjugate(&self) -> HPoly {
        HPoly {
            coeffs: self.coeffs.iter().map(Quat::conj).collect(),
        }
    }

    /// `f^s = f * f^c`, a real-coefficient polynomial.
    pub fn symmetrization(&self) -> HPoly {
        self.star(&self.regular_conjugate())
    }

    /// `f^s` as a real slice polynomial.
    pub fn symmetrization_cpoly(&self) -> CPoly {
        self.symmetrization().split().f
    }

    pub fn split(&self) -> SplitPair {
        let (f, g): (Vec<GaussRat>, Vec<GaussRat>) = self.coeffs.iter().map(Quat::split).unzip();
        SplitPair {
            f: CPoly::new(f),
            g: CPoly::new(g),
        }
    }

    /// Evaluates `sum q^m a_m`, powers of the variable on the left.
    pub fn eval(&self, q: &Quat) -> Quat {
        self.coeffs
            .iter()
            .rev()
            .fold(Quat::zero(), |acc, a| &(q * &acc) + a)
    }

    /// Evaluates at a point of the `i`-slice.
    pub fn eval_slice(&self, z: &GaussRat) -> Quat {
        self.eval(&Quat::from_gauss(z))
    }

    pub fn reciprocal_pair(&self) -> Result<ReciprocalPair> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial("reciprocal"));
        }
        let numerator = self.regular_conjugate();
        let denominator = self.star(&numerator);
        debug_assert!(denominator.is_real());
        Ok(ReciprocalPair {
            numerator,
            denominator,
        })
    }

    /// Exact quotient by a real-coefficient polynomial, if it divides.
    pub fn exact_div_real(&self, d: &HPoly) -> Option<HPoly> {
        if !d.is_real() || d.is_zero() {
            return None;
        }
        let d = d.split().f;
        let s = self.split();
        let f = s.f.exact_div(&d)?;
        let g = s.g.exact_div(&d)?;
        Some(extend(&SplitPair { f, g }))
    }
}

/// Reassembles `a_m = alpha_m + beta_m j` from slice components.
pub fn extend(p: &SplitPair) -> HPoly {
    let n = p.f.coeffs().len().max(p.g.coeffs().len());
    HPoly::new(
        (0..n)
            .map(|m| Quat::from_split(&p.f.coeff(m), &p.g.coeff(m)))
            .collect(),
    )
}

/// Slice form of the star product: `(FH - G K^) + (FK + G H^) j`.
pub fn split_star(a: &SplitPair, b: &SplitPair) -> SplitPair {
    SplitPair {
        f: &(&a.f * &b.f) - &(&a.g * &b.g.hat()),
        g: &(&a.f * &b.g) + &(&a.g * &b.f.hat()),
    }
}

/// `f(q) g(f(q)^{-1} q f(q))`, or zero where `f(q) = 0`.
pub fn star_eval_pointwise(f: &HPoly, g: &HPoly, q: &Quat) -> Quat {
    let fq = f.eval(q);
    match fq.inv() {
        Err(_) => Quat::zero(),
        Ok(inv) => {
            let moved = &(&inv * q) * &fq;
            &fq * &g.eval(&moved)
        }
    }
}

/// Recovers `f(x + y*axis)` from the two slice values `f(x + y i)` and `f(x - y i)`.
pub fn extension_formula(plus: &Quat, minus: &Quat, axis: &Quat) -> Quat {
    let half = Rat::new(1.into(), 2.into());
    let mean = (plus + minus).scale(&half);
    let jump = (minus - plus).scale(&half);
    &mean + &(&(axis * &Quat::i()) * &jump)
}

/// Evaluates `f` at `x + y*axis` through the extension formula, using only slice values.
pub fn eval_by_extension(f: &HPoly, x: &Rat, y: &Rat, axis: &Quat) -> Quat {
    let plus = f.eval_slice(&GaussRat::new(x.clone(), y.clone()));
    let minus = f.eval_slice(&GaussRat::new(x.clone(), -y));
    extension_formula(&plus, &minus, axis)
}

impl Add<&HPoly> for &HPoly {
    type Output = HPoly;
    fn add(self, rhs: &HPoly) -> HPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        HPoly::new((0..n).map(|m| &self.coeff(m) + &rhs.coeff(m)).collect())
    }
}

impl Sub<&HPoly> for &HPoly {
    type Output = HPoly;
    fn sub(self, rhs: &HPoly) -> HPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        HPoly::new((0..n).map(|m| &self.coeff(m) - &rhs.coeff(m)).collect())
    }
}

/// `*` is the regular product.
impl Mul<&HPoly> for &HPoly {
    type Output = HPoly;
    fn mul(self, rhs: &HPoly) -> HPoly {
        self.star(rhs)
    }
}

forward_binop!(impl Add, add for HPoly);
forward_binop!(impl Sub, sub for HPoly);
forward_binop!(impl Mul, mul for HPoly);

impl Neg for &HPoly {
    type Output = HPoly;
    fn neg(self) -> HPoly {
        HPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for HPoly {
    type Output = HPoly;
    fn neg(self) -> HPoly {
        -&self
    }
}

impl fmt::Display for HPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (m, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let power = match m {
                0 => String::new(),
                1 => "q".to_string(),
                _ => format!("q^{m}"),
            };
            let nonzero: Vec<&Rat> = c.components().into_iter().filter(|r| !r.is_zero()).collect();
            let neg = nonzero.iter().all(|r| r.is_negative());
            let shown = if neg { -c } else { c.clone() };
            let body = if m == 0 {
                shown.to_string()
            } else if shown.is_real() {
                if shown.is_one() {
                    power
                } else if shown.x0.is_integer() {
                    format!("{}{power}", shown.x0)
                } else {
                    format!("({}){power}", format_rat(&shown.x0))
                }
            } else if nonzero.len() == 1 && c.x0.is_zero() && shown.components()[1..].iter().all(|r| r.is_zero() || r.is_integer()) {
                format!("{power}{shown}")
            } else {
                format!("{power}({shown})")
            };
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            f.write_str(&body)?;
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}
