//! Rational linear and quadratic factors of real polynomials.
//!
//! Only what the zero-set machinery needs: factors `z - r` with rational `r`
//! and monic quadratics with rational coefficients. Linear factors come from
//! the rational root test; quadratics from Kronecker's method at `0, 1, -1`.
//! Whatever is left is returned as a residual. No floating point is used.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith::{GaussRat, Rat};
use crate::cpoly::CPoly;

/// Trial division is capped at this magnitude; larger values go to the residual.
const DIVISOR_LIMIT: u64 = 1 << 40;
/// Cap on divisor triples tried by Kronecker's method.
const KRONECKER_BUDGET: usize = 4_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RealFactors {
    /// Monic factors of degree 1 or 2 with their multiplicities, in discovery order.
    pub factors: Vec<(CPoly, u32)>,
    /// Monic cofactor with no factor found (`1` when fully split).
    pub residual: CPoly,
}

/// Splits off every rational linear and quadratic factor of a nonzero real polynomial.
///
/// Returns `None` if `p` is zero or has a non-real coefficient.
pub fn low_degree_factors(p: &CPoly) -> Option<RealFactors> {
    if p.is_zero() || !p.is_real() {
        return None;
    }
    let mut rest = p.monic();
    let mut factors: Vec<(CPoly, u32)> = Vec::new();

    for root in rational_roots(&rest) {
        let lin = CPoly::linear(&GaussRat::real(root));
        let mult = divide_out(&mut rest, &lin);
        if mult > 0 {
            factors.push((lin, mult));
        }
    }

    loop {
        match rest.degree() {
            Some(d) if d < 2 => break,
            Some(2) => {
                factors.push((rest.clone(), 1));
                rest = CPoly::one();
                break;
            }
            Some(3) => break,
            _ => {}
        }
        match kronecker_quadratic(&rest) {
            Some(q) => {
                let mult = divide_out(&mut rest, &q);
                debug_assert!(mult > 0);
                factors.push((q, mult));
            }
            None => break,
        }
    }
    Some(RealFactors {
        factors,
        residual: rest,
    })
}

fn divide_out(rest: &mut CPoly, f: &CPoly) -> u32 {
    let mut mult = 0;
    while let Some(q) = rest.exact_div(f) {
        *rest = q;
        mult += 1;
    }
    mult
}

/// Primitive integer coefficients of a real polynomial, positive leading coefficient.
fn integer_coeffs(p: &CPoly) -> Vec<BigInt> {
    let lcm = p
        .coeffs()
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.re.denom()));
    let ints: Vec<BigInt> = p
        .coeffs()
        .iter()
        .map(|c| (&c.re * Rat::from_integer(lcm.clone())).to_integer())
        .collect();
    let content = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    let sign = if ints.last().is_some_and(|c| c.is_negative()) {
        -BigInt::one()
    } else {
        BigInt::one()
    };
    ints.into_iter().map(|c| c / &content * &sign).collect()
}

fn eval_int(coeffs: &[BigInt], x: i64) -> BigInt {
    let x = BigInt::from(x);
    coeffs
        .iter()
        .rev()
        .fold(BigInt::zero(), |acc, c| acc * &x + c)
}

/// Positive divisors of `|n|`, or `None` when `n` is zero or too large.
fn divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let n = n.abs().to_u64()?;
    if n == 0 || n > DIVISOR_LIMIT {
        return None;
    }
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            small.push(BigInt::from(d));
            if d * d != n {
                large.push(BigInt::from(n / d));
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    Some(small)
}

/// Values `p(x)` at a few small integers, for pruning candidate factors.
///
/// An integer factor `q` of `p` must have `q(x) | p(x)` at every integer `x`.
/// Values too large for `i128` are skipped.
fn probes(coeffs: &[BigInt]) -> Vec<(i128, i128)> {
    [1i64, -1, 2, -2, 3, -3]
        .into_iter()
        .filter_map(|x| eval_int(coeffs, x).to_i128().map(|v| (i128::from(x), v)))
        .collect()
}

/// `q(x) | p(x)` at every probe, where `q(x)` is given by `q_at`.
fn passes(probes: &[(i128, i128)], q_at: impl Fn(i128) -> Option<i128>) -> bool {
    probes.iter().all(|&(x, v)| match q_at(x) {
        Some(0) => v == 0,
        Some(q) => v % q == 0,
        None => true,
    })
}

/// Distinct rational roots, ascending.
fn rational_roots(p: &CPoly) -> Vec<Rat> {
    let mut roots = Vec::new();
    let mut coeffs = integer_coeffs(p);
    if coeffs.is_empty() {
        return roots;
    }
    if coeffs[0].is_zero() {
        roots.push(Rat::zero());
        let lead = coeffs.iter().position(|c| !c.is_zero()).unwrap_or(0);
        coeffs.drain(..lead);
    }
    if coeffs.len() < 2 {
        return roots;
    }
    let (Some(nums), Some(dens)) = (divisors(&coeffs[0]), divisors(coeffs.last().unwrap())) else {
        return roots;
    };
    let probes = probes(&coeffs);
    for a in &nums {
        for b in &dens {
            if !a.gcd(b).is_one() {
                continue;
            }
            for num in [a.clone(), -a] {
                // a root num/b means (b z - num) divides p over the integers
                let (bi, ni) = (b.to_i128(), num.to_i128());
                let q_at = |x: i128| Some(bi? * x - ni?);
                if passes(&probes, q_at) && is_root(&coeffs, &num, b) {
                    roots.push(Rat::new(num, b.clone()));
                }
            }
        }
    }
    roots.sort();
    roots
}

/// `sum c_k num^k den^(n-k) = 0`, i.e. `p(num/den) = 0` without fractions.
fn is_root(coeffs: &[BigInt], num: &BigInt, den: &BigInt) -> bool {
    let n = coeffs.len() - 1;
    let mut den_pows = vec![BigInt::one(); n + 1];
    for k in 1..=n {
        den_pows[k] = &den_pows[k - 1] * den;
    }
    let mut num_pow = BigInt::one();
    let mut sum = BigInt::zero();
    for (k, c) in coeffs.iter().enumerate() {
        sum += c * &num_pow * &den_pows[n - k];
        num_pow *= num;
    }
    sum.is_zero()
}

/// Finds one monic rational quadratic factor of a polynomial without rational roots.
///
/// A factor `a z^2 + b z + c` is pinned down by its values at `0, 1, -1`, which
/// must divide the corresponding values of `p`; every triple of divisors is a
/// candidate, pruned by further small-integer values before trial division.
fn kronecker_quadratic(p: &CPoly) -> Option<CPoly> {
    let coeffs = integer_coeffs(p);
    let lead = coeffs.last()?.clone();
    let d0 = divisors(&eval_int(&coeffs, 0))?;
    let d1 = divisors(&eval_int(&coeffs, 1))?;
    let dm = divisors(&eval_int(&coeffs, -1))?;
    if d0.len() * d1.len() * dm.len() * 8 > KRONECKER_BUDGET {
        return None;
    }
    let small = |v: &[BigInt]| -> Option<Vec<i128>> { v.iter().map(ToPrimitive::to_i128).collect() };
    let (d0, d1, dm) = (small(&d0)?, small(&d1)?, small(&dm)?);
    let lead_small = lead.to_i128();
    let probes = probes(&coeffs);
    for &c0 in &d0 {
        for c in [c0, -c0] {
            for &a1 in &d1 {
                for e1 in [a1, -a1] {
                    for &am in &dm {
                        for em in [am, -am] {
                            // a + b + c = e1, a - b + c = em
                            let (sum, diff) = (e1 + em, e1 - em);
                            if sum % 2 != 0 || diff % 2 != 0 {
                                continue;
                            }
                            let a = sum / 2 - c;
                            let b = diff / 2;
                            if a <= 0 || lead_small.is_some_and(|l| l % a != 0) {
                                continue;
                            }
                            if !passes(&probes, |x| Some(a * x * x + b * x + c)) {
                                continue;
                            }
                            let cand = CPoly::from_real(&[c, b, a].map(|v| Rat::from_integer(v.into())))
                                .monic();
                            if cand.divides(p) {
                                return Some(cand);
                            }
                        }
                    }
                }
            }
        }
    }
    None
}
