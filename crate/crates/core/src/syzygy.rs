//! Koszul matrices of the split system and the natural quaternionic syzygies.
//!
//! With `f_l = F_l + G_l j` and `P = (F_1, G_1, ..., F_n, G_n)`, the equation
//! `sum f_l * h_l = 1` splits into
//!
//! ```text
//! <P, u> = 1              u = (H_1, -K^_1, ..., H_n, -K^_n)
//! <P, hat_swap(u)> = 0    hat_swap(u) = (K_1, H^_1, ..., K_n, H^_n)
//! ```
//!
//! `A` holds the Koszul generators `P_s e_r - P_r e_s` of the syzygies of `P`,
//! one column per pair `r < s` in lexicographic order. `B` is defined by
//! `B beta = hat_swap(A hat(beta))`, i.e. row `2l-1` of `B` is `-hat` of row `2l`
//! of `A` and row `2l` is `hat` of row `2l-1`. For `n = 2` both coincide
//! entry for entry with the printed matrices of the two-function case.
//!
//! The columns of `B` are, up to sign and order, the Koszul generators of
//! `W = (-G^_1, F^_1, ..., -G^_n, F^_n)`: with `s(a)` swapping `2l-1 <-> 2l`,
//! column `(r, s)` of `B` is `+-(W_{s(s)} e_{s(r)} - W_{s(r)} e_{s(s)})`; see
//! [`b_column_mapping`].

use crate::arith::GaussRat;
use crate::cpoly::CPoly;
use crate::error::{Error, Result};
use crate::hpoly::{HPoly, SplitPair};
use crate::polysolve::{scalar_rank, PolyMatrix};

/// Lexicographic pairs `r < s` of `0..m`.
pub fn koszul_pairs(m: usize) -> Vec<(usize, usize)> {
    (0..m)
        .flat_map(|r| (r + 1..m).map(move |s| (r, s)))
        .collect()
}

/// Koszul matrix whose column `(r, s)` is `v_s e_r - v_r e_s`.
pub fn koszul_matrix(v: &[CPoly]) -> PolyMatrix {
    let pairs = koszul_pairs(v.len());
    let mut m = PolyMatrix::zeros(v.len(), pairs.len());
    for (c, &(r, s)) in pairs.iter().enumerate() {
        m.set(r, c, v[s].clone());
        m.set(s, c, -&v[r]);
    }
    m
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SyzygyPair {
    pub a: PolyMatrix,
    pub b: PolyMatrix,
    pub n: usize,
    pub splits: Vec<SplitPair>,
}

impl SyzygyPair {
    /// `P = (F_1, G_1, ..., F_n, G_n)`
    pub fn p_vector(&self) -> Vec<CPoly> {
        p_vector(&self.splits)
    }

    /// `W = (-G^_1, F^_1, ..., -G^_n, F^_n)`
    pub fn w_vector(&self) -> Vec<CPoly> {
        self.splits
            .iter()
            .flat_map(|s| [-s.g.hat(), s.f.hat()])
            .collect()
    }

    /// The `2n x 2 C(2n, 2)` matrix `(A, -B)`.
    pub fn combined(&self) -> PolyMatrix {
        self.a
            .hconcat(&self.b.map(|p| -p))
            .expect("A and B have the same row count")
    }
}

pub fn p_vector(splits: &[SplitPair]) -> Vec<CPoly> {
    splits
        .iter()
        .flat_map(|s| [s.f.clone(), s.g.clone()])
        .collect()
}

pub fn build_koszul(fs: &[HPoly]) -> Result<SyzygyPair> {
    if fs.is_empty() {
        return Err(Error::Dimension("need at least one polynomial".into()));
    }
    let splits: Vec<SplitPair> = fs.iter().map(HPoly::split).collect();
    let a = koszul_matrix(&p_vector(&splits));
    let mut b = PolyMatrix::zeros(a.rows(), a.cols());
    for l in 0..fs.len() {
        for c in 0..a.cols() {
            b.set(2 * l, c, -a.get(2 * l + 1, c).hat());
            b.set(2 * l + 1, c, a.get(2 * l, c).hat());
        }
    }
    Ok(SyzygyPair {
        a,
        b,
        n: fs.len(),
        splits,
    })
}

/// For each column of `B`: the index of the matching Koszul generator of `W`
/// (in [`koszul_pairs`] order) and the sign relating them.
pub fn b_column_mapping(n: usize) -> Vec<(usize, i8)> {
    let m = 2 * n;
    let pairs = koszul_pairs(m);
    let swap = |a: usize| a ^ 1;
    // T e_a = eps_a e_{swap(a)}, eps = +1 on F slots, -1 on G slots
    let eps = |a: usize| if a.is_multiple_of(2) { 1i8 } else { -1 };
    pairs
        .iter()
        .map(|&(r, s)| {
            let (sr, ss) = (swap(r), swap(s));
            let sign = eps(r) * eps(s);
            let (lo, hi, sign) = if sr < ss { (sr, ss, sign) } else { (ss, sr, -sign) };
            let idx = pairs.iter().position(|&p| p == (lo, hi)).expect("pair exists");
            (idx, sign)
        })
        .collect()
}

/// `(v_1, v_2, ...) -> (-v^_2, v^_1, -v^_4, v^_3, ...)`
pub fn hat_swap(v: &[CPoly]) -> Result<Vec<CPoly>> {
    if !v.len().is_multiple_of(2) {
        return Err(Error::OddLength(v.len()));
    }
    Ok(v.chunks(2)
        .flat_map(|pair| [-pair[1].hat(), pair[0].hat()])
        .collect())
}

/// `(f_t^c * f_r^s) e_t - (f_r^c * f_t^s) e_r` with zero-based `r < t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NaturalSyzygy {
    pub r: usize,
    pub t: usize,
    pub entries: Vec<HPoly>,
}

impl NaturalSyzygy {
    /// `sum f_l * entries_l`
    pub fn apply(&self, fs: &[HPoly]) -> HPoly {
        fs.iter()
            .zip(&self.entries)
            .fold(HPoly::zero(), |acc, (f, e)| &acc + &(f * e))
    }

    pub fn annihilates(&self, fs: &[HPoly]) -> bool {
        self.apply(fs).is_zero()
    }

    /// Every entry multiplied on the right by `s`.
    pub fn star_right(&self, s: &HPoly) -> Vec<HPoly> {
        self.entries.iter().map(|e| e * s).collect()
    }
}

fn check_indices(n: usize, idx: &[usize]) -> Result<()> {
    if idx.windows(2).any(|w| w[0] >= w[1]) || idx.last().is_some_and(|&l| l >= n) {
        return Err(Error::Index(format!(
            "indices {idx:?} must be strictly increasing and below {n}"
        )));
    }
    Ok(())
}

pub fn natural_syzygy(fs: &[HPoly], r: usize, t: usize) -> Result<NaturalSyzygy> {
    check_indices(fs.len(), &[r, t])?;
    let mut entries = vec![HPoly::zero(); fs.len()];
    entries[t] = &fs[t].regular_conjugate() * &fs[r].symmetrization();
    entries[r] = -(&fs[r].regular_conjugate() * &fs[t].symmetrization());
    Ok(NaturalSyzygy { r, t, entries })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ThreeTerm {
    HoldsExactly,
    Fails {
        slot: usize,
        lhs: HPoly,
        rhs: HPoly,
    },
}

/// Checks `syz(r,t) * f_p^s = syz(p,t) * f_r^s - syz(p,r) * f_t^s` slot by slot.
pub fn check_three_term(fs: &[HPoly], p: usize, r: usize, t: usize) -> Result<ThreeTerm> {
    check_indices(fs.len(), &[p, r, t])?;
    let (lhs, via_t, via_r) = three_term_parts(fs, p, r, t)?;
    for (slot, ((l, a), b)) in lhs.into_iter().zip(via_t).zip(via_r).enumerate() {
        let rhs = &a - &b;
        if l != rhs {
            return Ok(ThreeTerm::Fails { slot, lhs: l, rhs });
        }
    }
    Ok(ThreeTerm::HoldsExactly)
}

type Parts = (Vec<HPoly>, Vec<HPoly>, Vec<HPoly>);

fn three_term_parts(fs: &[HPoly], p: usize, r: usize, t: usize) -> Result<Parts> {
    let syz_rt = natural_syzygy(fs, r, t)?;
    let syz_pt = natural_syzygy(fs, p, t)?;
    let syz_pr = natural_syzygy(fs, p, r)?;
    Ok((
        syz_rt.star_right(&fs[p].symmetrization()),
        syz_pt.star_right(&fs[r].symmetrization()),
        syz_pr.star_right(&fs[t].symmetrization()),
    ))
}

/// `syz(r,t) = via_t - via_r` with `via_t = syz(p,t) * f_r^s / f_p^s` and
/// `via_r = syz(p,r) * f_t^s / f_p^s`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThreeTermReduction {
    pub via_t: Vec<HPoly>,
    pub via_r: Vec<HPoly>,
}

/// Expresses `syz(r,t)` through `syz(p,t)` and `syz(p,r)` when `f_p^s` divides
/// both products exactly; `None` otherwise.
pub fn reduce_three_term(
    fs: &[HPoly],
    p: usize,
    r: usize,
    t: usize,
) -> Result<Option<ThreeTermReduction>> {
    check_indices(fs.len(), &[p, r, t])?;
    let (_, via_t, via_r) = three_term_parts(fs, p, r, t)?;
    let sp = fs[p].symmetrization();
    let divide = |v: Vec<HPoly>| -> Option<Vec<HPoly>> {
        v.iter().map(|e| e.exact_div_real(&sp)).collect()
    };
    let (Some(via_t), Some(via_r)) = (divide(via_t), divide(via_r)) else {
        return Ok(None);
    };
    let syz_rt = natural_syzygy(fs, r, t)?;
    for ((e, a), b) in syz_rt.entries.iter().zip(&via_t).zip(&via_r) {
        if e != &(a - b) {
            return Err(Error::Internal("three-term reduction does not reproduce syz(r,t)".into()));
        }
    }
    Ok(Some(ThreeTermReduction { via_t, via_r }))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct KernelDims {
    /// Nullity of `(A, -B)(z)`.
    pub null_ab: usize,
    /// `nullity(A(z)) + nullity(B(z))`.
    pub null_a_plus_null_b: usize,
}

pub fn kernel_dimension_at(pair: &SyzygyPair, z: &GaussRat) -> KernelDims {
    let a = pair.a.eval(z);
    let b = pair.b.eval(z);
    let ab: Vec<Vec<GaussRat>> = a
        .iter()
        .zip(&b)
        .map(|(ra, rb)| ra.iter().cloned().chain(rb.iter().map(|x| -x)).collect())
        .collect();
    let cols = pair.a.cols();
    KernelDims {
        null_ab: 2 * cols - scalar_rank(&ab),
        null_a_plus_null_b: 2 * cols - scalar_rank(&a) - scalar_rank(&b),
    }
}

/// Expected `(nullity of (A,-B), nullity A + nullity B)` when the rank is full:
/// `(4n^2 - 4n, 4n^2 - 6n + 2)`.
pub fn expected_kernel_dims(n: usize) -> KernelDims {
    KernelDims {
        null_ab: 4 * n * n - 4 * n,
        null_a_plus_null_b: 4 * n * n + 2 - 6 * n,
    }
}

/// `P(z)^T B(z)`: all zero exactly where every column of `B(z)` is a syzygy of `P(z)`.
///
/// For `n = 2` these are, up to order and sign, the six equations
/// `F1 F^1 + G1 G^1`, `F1 F^2 + G2 G^1`, `F1 G^2 - F2 G^1`, `G1 F^2 - G2 F^1`,
/// `F2 F^1 + G1 G^2`, `F2 F^2 + G2 G^2`.
pub fn degeneracy_residuals(pair: &SyzygyPair, z: &GaussRat) -> Vec<GaussRat> {
    let p: Vec<GaussRat> = pair.p_vector().iter().map(|x| x.eval(z)).collect();
    let b = pair.b.eval(z);
    (0..pair.b.cols())
        .map(|c| {
            p.iter()
                .zip(&b)
                .fold(GaussRat::zero(), |acc, (pv, row)| &acc + &(pv * &row[c]))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Quat;
    use crate::polysolve::rank_at;

    fn hard_pair() -> Vec<HPoly> {
        vec![HPoly::linear(&Quat::i()), HPoly::linear(&Quat::j())]
    }

    fn c(p: &[(i64, i64)]) -> CPoly {
        CPoly::from_ints(p)
    }

    #[test]
    fn shapes() {
        let pair = build_koszul(&hard_pair()).unwrap();
        assert_eq!((pair.a.rows(), pair.a.cols()), (4, 6));
        assert_eq!((pair.b.rows(), pair.b.cols()), (4, 6));
        let ab = pair.combined();
        assert_eq!((ab.rows(), ab.cols()), (4, 12));
        let three = vec![
            HPoly::linear(&Quat::i()),
            HPoly::linear(&Quat::j()),
            HPoly::linear(&Quat::k()),
        ];
        let pair = build_koszul(&three).unwrap();
        assert_eq!((pair.a.rows(), pair.a.cols()), (6, 15));
        assert_eq!((pair.b.rows(), pair.b.cols()), (6, 15));
        assert!(build_koszul(&[]).is_err());
    }

    #[test]
    fn first_koszul_column() {
        let pair = build_koszul(&hard_pair()).unwrap();
        assert_eq!(pair.p_vector(), vec![c(&[(0, -1), (1, 0)]), CPoly::zero(), CPoly::z(), -CPoly::one()]);
        assert_eq!(
            pair.a.column(0),
            vec![CPoly::zero(), -c(&[(0, -1), (1, 0)]), CPoly::zero(), CPoly::zero()]
        );
    }

    #[test]
    fn two_function_matrices_match_printed_layout() {
        let fs = vec![
            HPoly::from_ints(&[[1, 2, 0, 1], [0, 1, -1, 0]]),
            HPoly::from_ints(&[[0, 0, 3, 1], [2, 0, 0, 1]]),
        ];
        let pair = build_koszul(&fs).unwrap();
        let (f1, g1) = (pair.splits[0].f.clone(), pair.splits[0].g.clone());
        let (f2, g2) = (pair.splits[1].f.clone(), pair.splits[1].g.clone());
        let o = CPoly::zero;
        let a_rows = [
            [g1.clone(), f2.clone(), g2.clone(), o(), o(), o()],
            [-&f1, o(), o(), f2.clone(), g2.clone(), o()],
            [o(), -&f1, o(), -&g1, o(), g2.clone()],
            [o(), o(), -&f1, o(), -&g1, -&f2],
        ];
        let (hf1, hg1, hf2, hg2) = (f1.hat(), g1.hat(), f2.hat(), g2.hat());
        let b_rows = [
            [hf1.clone(), o(), o(), -&hf2, -&hg2, o()],
            [hg1.clone(), hf2.clone(), hg2.clone(), o(), o(), o()],
            [o(), o(), hf1.clone(), o(), hg1.clone(), hf2.clone()],
            [o(), -&hf1, o(), -&hg1, o(), hg2.clone()],
        ];
        for r in 0..4 {
            assert_eq!(pair.a.row(r), &a_rows[r]);
            assert_eq!(pair.b.row(r), &b_rows[r]);
        }
    }

    #[test]
    fn columns_annihilate() {
        let fs = vec![
            HPoly::from_ints(&[[1, 2, 0, 1], [0, 1, -1, 0], [1, 0, 0, 0]]),
            HPoly::from_ints(&[[0, 0, 3, 1], [2, 0, 0, 1]]),
            HPoly::from_ints(&[[5, 0, 0, 0], [0, 1, 0, 0]]),
        ];
        let pair = build_koszul(&fs).unwrap();
        let dot = |v: &[CPoly], col: Vec<CPoly>| {
            v.iter().zip(col).fold(CPoly::zero(), |acc, (a, b)| &acc + &(a * &b))
        };
        for col in 0..pair.a.cols() {
            assert!(dot(&pair.p_vector(), pair.a.column(col)).is_zero());
            assert!(dot(&pair.w_vector(), pair.b.column(col)).is_zero());
        }
    }

    #[test]
    fn b_columns_are_signed_koszul_generators_of_w() {
        for n in 1..=3 {
            let fs: Vec<HPoly> = (0..n)
                .map(|l| HPoly::from_ints(&[[l as i64, 1, 2 - l as i64, 1], [1, 0, l as i64, -1]]))
                .collect();
            let pair = build_koszul(&fs).unwrap();
            let kw = koszul_matrix(&pair.w_vector());
            for (col, (idx, sign)) in b_column_mapping(n).into_iter().enumerate() {
                let expect: Vec<CPoly> = kw
                    .column(idx)
                    .into_iter()
                    .map(|e| if sign > 0 { e } else { -e })
                    .collect();
                assert_eq!(pair.b.column(col), expect, "n={n} column {col}");
            }
        }
    }

    #[test]
    fn hat_swap_examples() {
        let v = vec![CPoly::zero(), CPoly::zero(), CPoly::zero(), -CPoly::one()];
        assert_eq!(
            hat_swap(&v).unwrap(),
            vec![CPoly::zero(), CPoly::zero(), CPoly::one(), CPoly::zero()]
        );
        let w = vec![c(&[(1, 2), (0, -1)]), c(&[(3, 0)]), CPoly::z(), c(&[(0, 1), (2, 2)])];
        let twice = hat_swap(&hat_swap(&w).unwrap()).unwrap();
        assert_eq!(twice, w.iter().map(|x| -x).collect::<Vec<_>>());
        assert_eq!(hat_swap(&w[..3]), Err(Error::OddLength(3)));
    }

    #[test]
    fn natural_syzygy_examples() {
        let fs = hard_pair();
        let syz = natural_syzygy(&fs, 0, 1).unwrap();
        // (q + j) * (q^2 + 1) = q^3 + q^2 j + q + j
        assert_eq!(
            syz.entries[1],
            HPoly::from_ints(&[[0, 0, 1, 0], [1, 0, 0, 0], [0, 0, 1, 0], [1, 0, 0, 0]])
        );
        let sphere = HPoly::from_ints(&[[1, 0, 0, 0], [0, 0, 0, 0], [1, 0, 0, 0]]);
        assert_eq!(syz.entries[0], -(&HPoly::linear(&-Quat::i()) * &sphere));
        assert!(syz.annihilates(&fs));
        assert!(natural_syzygy(&fs, 1, 0).is_err());
        assert!(natural_syzygy(&fs, 0, 2).is_err());
    }

    #[test]
    fn three_term_identity() {
        let fs = vec![
            HPoly::linear(&Quat::i()),
            HPoly::linear(&Quat::j()),
            HPoly::linear(&Quat::k()),
        ];
        assert_eq!(check_three_term(&fs, 0, 1, 2).unwrap(), ThreeTerm::HoldsExactly);
        assert!(check_three_term(&fs, 1, 0, 2).is_err());
    }

    #[test]
    fn reduction_by_exact_division() {
        // f_p a nonzero constant: f_p^s divides everything.
        let fs = vec![
            HPoly::constant(Quat::from_ints(1, 1, 0, 0)),
            HPoly::linear(&Quat::j()),
            HPoly::linear(&Quat::k()),
        ];
        let red = reduce_three_term(&fs, 0, 1, 2).unwrap().expect("divisible");
        let syz = natural_syzygy(&fs, 1, 2).unwrap();
        for ((e, a), b) in syz.entries.iter().zip(&red.via_t).zip(&red.via_r) {
            assert_eq!(e, &(a - b));
        }
        // f_p^s = (q - 3)^2 does not divide the p-slot -(q - 3)(q^2 + 1)^2.
        let fs = vec![
            HPoly::linear(&Quat::from_ints(3, 0, 0, 0)),
            HPoly::linear(&Quat::j()),
            HPoly::linear(&Quat::k()),
        ];
        assert_eq!(reduce_three_term(&fs, 0, 1, 2).unwrap(), None);
    }

    #[test]
    fn kernel_dimensions_hard_pair() {
        let pair = build_koszul(&hard_pair()).unwrap();
        let dims = kernel_dimension_at(&pair, &GaussRat::zero());
        assert_eq!(dims, KernelDims { null_ab: 8, null_a_plus_null_b: 6 });
        assert_eq!(expected_kernel_dims(2), dims);
        assert_eq!(
            expected_kernel_dims(3),
            KernelDims { null_ab: 24, null_a_plus_null_b: 20 }
        );
    }

    #[test]
    fn rank_drop_on_duplicate_pair() {
        let fs = vec![HPoly::linear(&Quat::j()), HPoly::linear(&Quat::j())];
        let pair = build_koszul(&fs).unwrap();
        let i = GaussRat::i();
        assert!(rank_at(&pair.combined(), &i) < 4);
        assert!(kernel_dimension_at(&pair, &i).null_ab > 8);
        assert!(degeneracy_residuals(&pair, &i).iter().all(GaussRat::is_zero));
        assert!(!degeneracy_residuals(&pair, &GaussRat::from_int(2, 0)).iter().all(GaussRat::is_zero));
    }
}
