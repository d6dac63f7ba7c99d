//! Algebraic invariants checked on random exact inputs.

use proptest::prelude::*;
use qcorona::arith::ratio;
use qcorona::hpoly::{
    classify_zeros, eval_by_extension, extend, split_star, star_eval_pointwise, zeros_on_sphere,
    SphereZeros,
};
use qcorona::polysolve::{determinant, solve_full_rank, minor_gcd_certificate, CertificateOutcome};
use qcorona::syzygy::{build_koszul, hat_swap, natural_syzygy};
use qcorona::{bezout_multi, CPoly, GaussRat, HPoly, PolyMatrix, Quat, Rat, SearchConfig, SplitPair};

fn rat() -> impl Strategy<Value = Rat> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| ratio(n, d))
}

fn gauss() -> impl Strategy<Value = GaussRat> {
    (rat(), rat()).prop_map(|(re, im)| GaussRat::new(re, im))
}

fn quat() -> impl Strategy<Value = Quat> {
    (rat(), rat(), rat(), rat()).prop_map(|(a, b, c, d)| Quat::new(a, b, c, d))
}

fn hpoly(max_degree: usize) -> impl Strategy<Value = HPoly> {
    prop::collection::vec(quat(), 0..=max_degree + 1).prop_map(HPoly::new)
}

fn cpoly(max_degree: usize) -> impl Strategy<Value = CPoly> {
    prop::collection::vec(gauss(), 0..=max_degree + 1).prop_map(CPoly::new)
}

/// Unit imaginary quaternions with rational components.
fn rational_axis() -> impl Strategy<Value = Quat> {
    prop::sample::select(vec![
        Quat::i(),
        Quat::j(),
        Quat::k(),
        Quat::new(ratio(0, 1), ratio(3, 5), ratio(4, 5), ratio(0, 1)),
        Quat::new(ratio(0, 1), ratio(2, 3), ratio(-1, 3), ratio(2, 3)),
        Quat::new(ratio(0, 1), ratio(-1, 3), ratio(2, 3), ratio(2, 3)),
        Quat::new(ratio(0, 1), ratio(0, 1), ratio(-5, 13), ratio(12, 13)),
    ])
}

fn cofactor_det(m: &[Vec<CPoly>]) -> CPoly {
    if m.len() == 1 {
        return m[0][0].clone();
    }
    (0..m.len()).fold(CPoly::zero(), |acc, c| {
        let minor: Vec<Vec<CPoly>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|&(k, _)| k != c).map(|(_, p)| p.clone()).collect())
            .collect();
        let term = &m[0][c] * &cofactor_det(&minor);
        if c % 2 == 0 {
            &acc + &term
        } else {
            &acc - &term
        }
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn quaternion_norm_is_multiplicative(a in quat(), b in quat()) {
        prop_assert_eq!((&a * &b).norm_sqr(), a.norm_sqr() * b.norm_sqr());
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn star_is_associative_and_distributive(f in hpoly(3), g in hpoly(3), h in hpoly(3)) {
        prop_assert_eq!(f.star(&g).star(&h), f.star(&g.star(&h)));
        prop_assert_eq!(f.star(&(&g + &h)), &f.star(&g) + &f.star(&h));
    }

    #[test]
    fn conjugate_reverses_products(f in hpoly(4), g in hpoly(4)) {
        prop_assert_eq!(
            f.star(&g).regular_conjugate(),
            g.regular_conjugate().star(&f.regular_conjugate())
        );
        prop_assert_eq!(f.regular_conjugate().regular_conjugate(), f.clone());
    }

    #[test]
    fn symmetrization_is_real_and_multiplicative(f in hpoly(4), g in hpoly(4)) {
        prop_assert!(f.symmetrization().is_real());
        prop_assert_eq!(
            f.star(&g).symmetrization(),
            f.symmetrization().star(&g.symmetrization())
        );
        prop_assert_eq!(f.symmetrization(), f.regular_conjugate().star(&f));
    }

    #[test]
    fn split_round_trips_and_tracks_products(f in hpoly(4), g in hpoly(4)) {
        let s = f.split();
        prop_assert_eq!(extend(&s), f.clone());
        let c = f.regular_conjugate().split();
        prop_assert_eq!(c, SplitPair { f: s.f.hat(), g: -&s.g });
        prop_assert_eq!(split_star(&s, &g.split()), f.star(&g).split());
    }

    #[test]
    fn product_evaluation_rule(f in hpoly(3), g in hpoly(3), q in quat()) {
        prop_assert_eq!(f.star(&g).eval(&q), star_eval_pointwise(&f, &g, &q));
    }

    #[test]
    fn extension_formula_agrees_with_evaluation(
        f in hpoly(4), x in rat(), y in rat(), axis in rational_axis()
    ) {
        let point = &Quat::real(x.clone()) + &axis.scale(&y);
        prop_assert_eq!(eval_by_extension(&f, &x, &y, &axis), f.eval(&point));
    }

    #[test]
    fn slice_evaluation_matches_quaternion_evaluation(f in hpoly(4), z in gauss()) {
        prop_assert_eq!(f.eval_slice(&z), f.eval(&Quat::from_gauss(&z)));
    }

    #[test]
    fn division_with_remainder(a in cpoly(6), d in cpoly(3)) {
        prop_assume!(!d.is_zero());
        let (q, r) = a.div_rem(&d).unwrap();
        prop_assert_eq!(&(&q * &d) + &r, a);
        prop_assert!(r.is_zero() || r.degree() < d.degree());
    }

    #[test]
    fn bezout_identity(ps in prop::collection::vec(cpoly(4), 1..5)) {
        prop_assume!(ps.iter().any(|p| !p.is_zero()));
        let b = bezout_multi(&ps).unwrap();
        let sum = ps.iter().zip(&b.witnesses).fold(CPoly::zero(), |acc, (p, w)| &acc + &(p * w));
        prop_assert_eq!(&sum, &b.gcd);
        prop_assert!(ps.iter().all(|p| b.gcd.divides(p)));
        prop_assert!(b.gcd.leading().unwrap().is_one());
    }

    #[test]
    fn bareiss_matches_cofactor_expansion(entries in prop::collection::vec(cpoly(2), 9..=9)) {
        let rows: Vec<Vec<CPoly>> = entries.chunks(3).map(<[CPoly]>::to_vec).collect();
        let m = PolyMatrix::new(3, 3, entries).unwrap();
        prop_assert_eq!(determinant(&m).unwrap(), cofactor_det(&rows));
    }

    #[test]
    fn certified_systems_solve_exactly(
        entries in prop::collection::vec(cpoly(1), 6..=6),
        rhs in prop::collection::vec(cpoly(2), 2..=2),
    ) {
        let m = PolyMatrix::new(2, 3, entries).unwrap();
        if let CertificateOutcome::Certified(cert) =
            minor_gcd_certificate(&m, &SearchConfig::default()).unwrap()
        {
            cert.check(&m).unwrap();
            let x = solve_full_rank(&m, &rhs, &cert).unwrap();
            prop_assert_eq!(m.mul_vec(&x).unwrap(), rhs);
        }
    }

    #[test]
    fn hat_swap_links_a_and_b(
        fs in prop::collection::vec(hpoly(2), 2..=3),
        beta in prop::collection::vec(cpoly(2), 15..=15),
    ) {
        let pair = build_koszul(&fs).unwrap();
        let beta = &beta[..pair.a.cols()];
        let hat_beta: Vec<CPoly> = beta.iter().map(CPoly::hat).collect();
        prop_assert_eq!(
            hat_swap(&pair.a.mul_vec(&hat_beta).unwrap()).unwrap(),
            pair.b.mul_vec(beta).unwrap()
        );
    }

    #[test]
    fn natural_syzygies_annihilate(fs in prop::collection::vec(hpoly(2), 3..=3)) {
        for (r, t) in [(0, 1), (0, 2), (1, 2)] {
            let syz = natural_syzygy(&fs, r, t).unwrap();
            prop_assert!(syz.annihilates(&fs));
        }
    }

    #[test]
    fn classified_zeros_are_zeros(a in quat(), b in quat(), g in hpoly(1)) {
        let f = HPoly::linear(&a).star(&HPoly::linear(&b)).star(&(&g + &HPoly::one()));
        prop_assume!(!f.is_zero());
        let z = classify_zeros(&f).unwrap();
        for (_, q) in &z.isolated {
            prop_assert!(f.eval(q).is_zero());
        }
        for s in &z.spherical {
            prop_assert_eq!(zeros_on_sphere(&f, s), SphereZeros::Spherical);
        }
        // the left factor's zero a is always a zero of f
        let found = z.isolated.iter().any(|(_, q)| *q == a)
            || z.spherical.iter().any(|s| s.x == a.x0 && s.y_squared == a.im_norm_sqr())
            || !z.residual.is_one();
        prop_assert!(found);
    }
}
