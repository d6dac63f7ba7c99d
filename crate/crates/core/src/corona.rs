//! The quaternionic corona problem: given `f_1, ..., f_n`, find `h_1, ..., h_n`
//! with `f_1*h_1 + ... + f_n*h_n = 1`.
//!
//! The pipeline works entirely on slice components:
//!
//! 1. decide solvability from the maximal minors of `(A, -B)`;
//! 2. take a Bezout vector `u` with `<P, u> = 1`;
//! 3. solve `A alpha - B beta = hat_swap(u)` and correct `v = u + A hat(beta)`,
//!    so that `<P, v> = 1` and `hat_swap(v)` is a syzygy of `P`;
//! 4. read `H_l = v_{2l-1}`, `K_l = -hat(v_{2l})` and reassemble `h_l = H_l + K_l j`.
//!
//! Every solution is checked by direct substitution before it is returned.

use std::fmt;

use crate::arith::Quat;
use crate::cpoly::{bezout_multi, CPoly};
use crate::error::{Error, Result};
use crate::factor::low_degree_factors;
use crate::hpoly::{extend, zeros_on_sphere, HPoly, Sphere, SphereZeros, SplitPair};
use crate::polysolve::{
    minor_gcd_certificate, solve_full_rank, CertificateOutcome, FullRankCertificate, SearchConfig,
};
use crate::syzygy::{build_koszul, hat_swap, p_vector, SyzygyPair};

/// A list of quaternionic polynomials, not all zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoronaInstance {
    fs: Vec<HPoly>,
}

impl CoronaInstance {
    pub fn new(fs: Vec<HPoly>) -> Result<Self> {
        if fs.is_empty() || fs.iter().all(HPoly::is_zero) {
            return Err(Error::AllZero);
        }
        Ok(CoronaInstance { fs })
    }

    pub fn polynomials(&self) -> &[HPoly] {
        &self.fs
    }

    pub fn len(&self) -> usize {
        self.fs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.fs.is_empty()
    }
}

/// Intermediate data of a successful solve.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoronaTrace {
    pub splits: Vec<SplitPair>,
    /// Bezout vector `u` with `<P, u> = 1`.
    pub particular: Vec<CPoly>,
    pub alpha: Vec<CPoly>,
    pub beta: Vec<CPoly>,
    /// `v = u + A hat(beta)`.
    pub corrected: Vec<CPoly>,
    pub minors_examined: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoronaSolution {
    pub hs: Vec<HPoly>,
    pub certificate: FullRankCertificate,
    pub trace: CoronaTrace,
}

/// Outcome of the solvability test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Validation {
    Certified {
        certificate: FullRankCertificate,
        minors_examined: usize,
    },
    /// The rank of `(A, -B)` provably drops at every root of `gcd` (everywhere if
    /// `gcd = 0`), so the `f_l` have a common zero.
    Obstructed { gcd: CPoly, minors_examined: usize },
    BudgetExhausted {
        partial_gcd: CPoly,
        minors_examined: usize,
    },
}

/// How the `f_l` vanish together on one sphere.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CommonZero {
    WholeSphere(Sphere),
    Point(Sphere, Quat),
}

impl fmt::Display for CommonZero {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CommonZero::WholeSphere(s) => write!(f, "every point of {s}"),
            CommonZero::Point(s, q) => write!(f, "{q} on {s}"),
        }
    }
}

/// Where the common zeros are.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagnosis {
    /// gcd of the symmetrizations `f_l^s`: every common zero lies on a sphere
    /// where it vanishes.
    pub symmetrization_gcd: CPoly,
    pub common_zeros: Vec<CommonZero>,
    /// Factor of `symmetrization_gcd` whose spheres have irrational data and
    /// were not examined.
    pub unresolved: CPoly,
    /// Part of the rank-drop gcd not explained by `common_zeros`, if a rank-drop
    /// gcd was supplied.
    pub unexplained_gcd: Option<CPoly>,
}

impl Diagnosis {
    pub fn has_common_zero(&self) -> bool {
        !self.common_zeros.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Obstruction {
    /// Rank-drop gcd (proven) or the partial gcd when the budget ran out.
    pub gcd: CPoly,
    pub minors_examined: usize,
    pub diagnosis: Diagnosis,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CoronaOutcome {
    Solved(CoronaSolution),
    /// The `f_l` have a common zero, so no solution exists.
    Obstructed(Obstruction),
    /// The minor search ran out of budget and no common zero was found.
    BudgetExhausted(Obstruction),
}

/// Decides solvability. A single polynomial is solvable exactly when it is a
/// nonzero constant; its rank-drop gcd is then its (monic) symmetrization.
pub fn validate(inst: &CoronaInstance, config: &SearchConfig) -> Result<Validation> {
    if let [f] = inst.polynomials() {
        if f.degree() != Some(0) {
            return Ok(Validation::Obstructed {
                gcd: f.symmetrization_cpoly().monic(),
                minors_examined: 0,
            });
        }
    }
    let pair = build_koszul(inst.polynomials())?;
    validate_pair(&pair, config)
}

fn validate_pair(pair: &SyzygyPair, config: &SearchConfig) -> Result<Validation> {
    Ok(match minor_gcd_certificate(&pair.combined(), config)? {
        CertificateOutcome::Certified(certificate) => Validation::Certified {
            minors_examined: certificate.len(),
            certificate,
        },
        CertificateOutcome::Obstruction {
            gcd,
            minors_examined,
        } => Validation::Obstructed {
            gcd,
            minors_examined,
        },
        CertificateOutcome::BudgetExhausted {
            partial_gcd,
            minors_examined,
        } => Validation::BudgetExhausted {
            partial_gcd,
            minors_examined,
        },
    })
}

/// A vector `u` with `<P, u> = 1`, from the multi-polynomial Bezout identity.
pub fn particular_solution(splits: &[SplitPair]) -> Result<Vec<CPoly>> {
    let bez = bezout_multi(&p_vector(splits))?;
    if !bez.gcd.is_one() {
        return Err(Error::CommonSliceZero(bez.gcd.to_string()));
    }
    Ok(bez.witnesses)
}

/// Result of the correction step.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Correction {
    pub hs: Vec<HPoly>,
    pub alpha: Vec<CPoly>,
    pub beta: Vec<CPoly>,
    pub corrected: Vec<CPoly>,
}

/// Corrects `u` with the certified minors and reassembles `h_1, ..., h_n`.
///
/// Both split equations are checked before returning.
pub fn correct_and_assemble(
    pair: &SyzygyPair,
    u: &[CPoly],
    certificate: &FullRankCertificate,
) -> Result<Correction> {
    let p = pair.p_vector();
    if u.len() != p.len() {
        return Err(Error::Dimension(format!(
            "particular solution of length {} for {} slice components",
            u.len(),
            p.len()
        )));
    }
    let rhs = hat_swap(u)?;
    let x = solve_full_rank(&pair.combined(), &rhs, certificate)?;
    let (alpha, beta) = x.split_at(pair.a.cols());
    let beta_hat: Vec<CPoly> = beta.iter().map(CPoly::hat).collect();
    let shift = pair.a.mul_vec(&beta_hat)?;
    let v: Vec<CPoly> = u.iter().zip(&shift).map(|(a, b)| a + b).collect();

    if dot(&p, &v) != CPoly::one() {
        return Err(Error::Internal("<P, v> = 1 failed after correction".into()));
    }
    if !dot(&p, &hat_swap(&v)?).is_zero() {
        return Err(Error::Internal("hat_swap(v) is not a syzygy of P".into()));
    }
    let hs = v
        .chunks(2)
        .map(|c| {
            extend(&SplitPair {
                f: c[0].clone(),
                g: -c[1].hat(),
            })
        })
        .collect();
    Ok(Correction {
        hs,
        alpha: alpha.to_vec(),
        beta: beta.to_vec(),
        corrected: v,
    })
}

fn dot(a: &[CPoly], b: &[CPoly]) -> CPoly {
    a.iter().zip(b).fold(CPoly::zero(), |acc, (x, y)| &acc + &(x * y))
}

/// `f_1*h_1 + ... + f_n*h_n`.
pub fn combination(fs: &[HPoly], hs: &[HPoly]) -> HPoly {
    fs.iter()
        .zip(hs)
        .fold(HPoly::zero(), |acc, (f, h)| &acc + &f.star(h))
}

/// Checks `f_1*h_1 + ... + f_n*h_n = 1` exactly.
pub fn verify(fs: &[HPoly], hs: &[HPoly]) -> bool {
    fs.len() == hs.len() && combination(fs, hs).is_one()
}

/// Runs the full pipeline.
pub fn solve_corona(inst: &CoronaInstance, config: &SearchConfig) -> Result<CoronaOutcome> {
    let pair = build_koszul(inst.polynomials())?;
    let validation = match inst.polynomials() {
        [_] => validate(inst, config)?,
        _ => validate_pair(&pair, config)?,
    };
    let (certificate, minors_examined) = match validation {
        Validation::Certified {
            certificate,
            minors_examined,
        } => (certificate, minors_examined),
        Validation::Obstructed {
            gcd,
            minors_examined,
        } => {
            let diagnosis = diagnose_common_zero(inst, Some(&gcd));
            return Ok(CoronaOutcome::Obstructed(Obstruction {
                gcd,
                minors_examined,
                diagnosis,
            }));
        }
        Validation::BudgetExhausted {
            partial_gcd,
            minors_examined,
        } => {
            let diagnosis = diagnose_common_zero(inst, None);
            let report = Obstruction {
                gcd: partial_gcd,
                minors_examined,
                diagnosis,
            };
            return Ok(if report.diagnosis.has_common_zero() {
                CoronaOutcome::Obstructed(report)
            } else {
                CoronaOutcome::BudgetExhausted(report)
            });
        }
    };
    let u = particular_solution(&pair.splits)?;
    let Correction {
        hs,
        alpha,
        beta,
        corrected,
    } = correct_and_assemble(&pair, &u, &certificate)?;
    if !verify(inst.polynomials(), &hs) {
        return Err(Error::Internal("f_1*h_1 + ... + f_n*h_n != 1".into()));
    }
    Ok(CoronaOutcome::Solved(CoronaSolution {
        hs,
        certificate,
        trace: CoronaTrace {
            splits: pair.splits,
            particular: u,
            alpha,
            beta,
            corrected,
            minors_examined,
        },
    }))
}

/// Locates common zeros of the `f_l` on the spheres carried by rational linear
/// and quadratic factors of `gcd(f_1^s, ..., f_n^s)`.
///
/// When the rank-drop gcd is given, its roots on the spheres found are divided
/// out and whatever remains is reported as unexplained.
pub fn diagnose_common_zero(inst: &CoronaInstance, rank_gcd: Option<&CPoly>) -> Diagnosis {
    let nonzero: Vec<&HPoly> = inst.polynomials().iter().filter(|f| !f.is_zero()).collect();
    let sym_gcd = nonzero
        .iter()
        .fold(CPoly::zero(), |g, f| g.gcd(&f.symmetrization_cpoly()));
    let mut common_zeros = Vec::new();
    let mut unresolved = CPoly::one();
    if let Some(factors) = low_degree_factors(&sym_gcd) {
        unresolved = factors.residual;
        for (factor, mult) in factors.factors {
            let Some(sphere) = Sphere::from_factor(&factor) else {
                unresolved = &unresolved * &factor.pow(mult);
                continue;
            };
            if let Some(z) = common_zero_on(&nonzero, &sphere) {
                common_zeros.push(z);
            }
        }
    }
    let unexplained_gcd = rank_gcd.map(|g| {
        if g.is_zero() {
            return g.clone();
        }
        let mut rest = g.monic();
        for z in &common_zeros {
            let (CommonZero::WholeSphere(s) | CommonZero::Point(s, _)) = z;
            let cp = s.char_poly();
            loop {
                let d = rest.gcd(&cp);
                if d.is_one() {
                    break;
                }
                rest = rest.exact_div(&d).expect("gcd divides");
            }
        }
        rest
    });
    Diagnosis {
        symmetrization_gcd: sym_gcd,
        common_zeros,
        unresolved,
        unexplained_gcd,
    }
}

fn common_zero_on(fs: &[&HPoly], sphere: &Sphere) -> Option<CommonZero> {
    let mut point: Option<Quat> = None;
    for f in fs {
        match zeros_on_sphere(f, sphere) {
            SphereZeros::NoZero => return None,
            SphereZeros::Spherical => {}
            SphereZeros::Point(q) => match &point {
                Some(p) if *p != q => return None,
                _ => point = Some(q),
            },
        }
    }
    Some(match point {
        Some(q) => CommonZero::Point(sphere.clone(), q),
        None => CommonZero::WholeSphere(sphere.clone()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, ratio};
    use crate::polysolve::MinorSearch;

    fn inst(fs: Vec<HPoly>) -> CoronaInstance {
        CoronaInstance::new(fs).unwrap()
    }

    fn solved(i: &CoronaInstance) -> CoronaSolution {
        match solve_corona(i, &SearchConfig::default()).unwrap() {
            CoronaOutcome::Solved(s) => s,
            other => panic!("expected a solution, got {other:?}"),
        }
    }

    #[test]
    fn two_linear_factors() {
        let fs = vec![HPoly::linear(&Quat::i()), HPoly::linear(&Quat::j())];
        let i = inst(fs.clone());
        let sol = solved(&i);
        assert!(verify(&fs, &sol.hs));
        assert_eq!(
            sol.trace.particular,
            vec![CPoly::zero(), CPoly::zero(), CPoly::zero(), CPoly::from_ints(&[(-1, 0)])]
        );
        // (q - i) * (i - j)/2 + (q - j) * (j - i)/2 = 1
        let half = ratio(1, 2);
        let known = vec![
            HPoly::constant(Quat::new(rat(0), half.clone(), -half.clone(), rat(0))),
            HPoly::constant(Quat::new(rat(0), -half.clone(), half, rat(0))),
        ];
        assert!(verify(&fs, &known));
    }

    #[test]
    fn single_constant() {
        let i = inst(vec![HPoly::constant(Quat::real(rat(2)))]);
        let sol = solved(&i);
        assert_eq!(sol.hs, vec![HPoly::constant(Quat::real(ratio(1, 2)))]);
        assert_eq!(sol.trace.particular, vec![CPoly::constant(ratio(1, 2).into()), CPoly::zero()]);
    }

    #[test]
    fn single_nonconstant_matches_general_path() {
        let f = HPoly::linear(&Quat::from_ints(1, 0, 1, 0));
        let i = inst(vec![f.clone()]);
        let Validation::Obstructed { gcd, .. } = validate(&i, &SearchConfig::default()).unwrap()
        else {
            panic!("q - (1 + j) has a zero")
        };
        assert_eq!(gcd, f.symmetrization_cpoly().monic());
        let pair = build_koszul(&[f]).unwrap();
        let Validation::Obstructed { gcd: general, .. } =
            validate_pair(&pair, &SearchConfig::default()).unwrap()
        else {
            panic!("general path must also obstruct")
        };
        assert_eq!(general, gcd);
    }

    #[test]
    fn common_real_zero() {
        let f = HPoly::linear(&Quat::one());
        let i = inst(vec![f.clone(), f]);
        let CoronaOutcome::Obstructed(ob) = solve_corona(&i, &SearchConfig::default()).unwrap()
        else {
            panic!("q - 1 twice has the common zero 1")
        };
        assert!(!ob.gcd.is_one());
        assert_eq!(
            ob.diagnosis.common_zeros,
            vec![CommonZero::Point(Sphere::new(rat(1), rat(0)), Quat::one())]
        );
        assert_eq!(ob.diagnosis.unexplained_gcd, Some(CPoly::one()));
    }

    #[test]
    fn common_isolated_zero_off_the_slice() {
        // both vanish at j: (q - j) and (q - j)*(q - i)
        let a = HPoly::linear(&Quat::j());
        let b = &a * &HPoly::linear(&Quat::i());
        let i = inst(vec![a, b]);
        let CoronaOutcome::Obstructed(ob) = solve_corona(&i, &SearchConfig::default()).unwrap()
        else {
            panic!("common zero j")
        };
        assert_eq!(
            ob.diagnosis.common_zeros,
            vec![CommonZero::Point(Sphere::new(rat(0), rat(1)), Quat::j())]
        );
    }

    #[test]
    fn irrational_real_zeros_are_unresolved() {
        let f = HPoly::from_ints(&[[-1, 0, 0, 0], [-1, 0, 0, 0], [1, 0, 0, 0]]);
        let i = inst(vec![f.clone(), f.clone()]);
        let CoronaOutcome::Obstructed(ob) = solve_corona(&i, &SearchConfig::default()).unwrap()
        else {
            panic!("common zeros (1 +- sqrt 5)/2")
        };
        assert!(ob.diagnosis.common_zeros.is_empty());
        assert_eq!(ob.diagnosis.unresolved, f.symmetrization_cpoly().gcd(&f.symmetrization_cpoly()));
        assert!(!ob.diagnosis.unexplained_gcd.unwrap().is_one());
    }

    #[test]
    fn three_polynomials() {
        let fs = vec![
            HPoly::linear(&Quat::i()),
            HPoly::linear(&Quat::j()),
            HPoly::from_ints(&[[1, 0, 0, 1], [0, 0, 0, 0], [1, 0, 0, 0]]),
        ];
        let sol = solved(&inst(fs.clone()));
        assert!(verify(&fs, &sol.hs));
    }

    #[test]
    fn lexicographic_search_also_solves_small_cases() {
        let fs = vec![HPoly::linear(&Quat::i()), HPoly::linear(&Quat::k())];
        let config = SearchConfig {
            strategy: MinorSearch::Lexicographic,
            ..SearchConfig::default()
        };
        let CoronaOutcome::Solved(sol) = solve_corona(&inst(fs.clone()), &config).unwrap() else {
            panic!("no common zero")
        };
        assert!(verify(&fs, &sol.hs));
    }

    #[test]
    fn zero_entries_are_allowed() {
        let fs = vec![HPoly::zero(), HPoly::constant(Quat::j())];
        let sol = solved(&inst(fs.clone()));
        assert!(verify(&fs, &sol.hs));
        assert_eq!(CoronaInstance::new(vec![HPoly::zero()]), Err(Error::AllZero));
        assert_eq!(CoronaInstance::new(vec![]), Err(Error::AllZero));
    }

    #[test]
    fn verify_rejects_wrong_answers() {
        let fs = vec![HPoly::linear(&Quat::i()), HPoly::linear(&Quat::j())];
        assert!(!verify(&fs, &[HPoly::one(), HPoly::zero()]));
        assert!(!verify(&fs, &[HPoly::one()]));
    }
}
