use std::collections::BTreeMap;

use arith_tutte::constructors::{from_integer_matrix, graphic, uniform};
use arith_tutte::convolution::*;
use arith_tutte::matroid::{check_matroid_axioms, MultiplicityMatroid};
use arith_tutte::poly::{LaurentPoly, Monomial, Rational, VarId};
use arith_tutte::report::IdentityId;
use arith_tutte::sampling::sample_identity;
use arith_tutte::subset::Subset;
use arith_tutte::tutte::{arithmetic_tutte, characteristic, classical_tutte};
use num_bigint::BigInt;
use proptest::prelude::*;

const VARS: [VarId; 6] = [
    VarId::Q,
    VarId::X,
    VarId::Y,
    VarId::LAMBDA,
    VarId::v(0),
    VarId::u(3),
];

fn poly() -> impl Strategy<Value = LaurentPoly> {
    let term = (
        -9i64..=9,
        proptest::collection::vec((0..VARS.len(), -3i32..=3), 0..3),
    );
    proptest::collection::vec(term, 0..5).prop_map(|terms| {
        LaurentPoly::from_terms(terms.into_iter().map(|(c, pairs)| {
            (
                Monomial::from_pairs(pairs.into_iter().map(|(i, e)| (VARS[i], e))),
                c,
            )
        }))
    })
}

fn point() -> impl Strategy<Value = BTreeMap<VarId, Rational>> {
    proptest::collection::vec((1i64..=7, 1i64..=5, any::<bool>()), VARS.len()).prop_map(|vals| {
        VARS.iter()
            .zip(vals)
            .map(|(&v, (n, d, neg))| {
                let n = if neg { -n } else { n };
                (v, Rational::new(n.into(), d.into()))
            })
            .collect()
    })
}

fn matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..=3, 1usize..=4).prop_flat_map(|(h, w)| {
        proptest::collection::vec(proptest::collection::vec(-4i64..=4, h), w)
    })
}

/// A random matrix matroid together with a second, random positive table.
fn pair() -> impl Strategy<Value = (MultiplicityMatroid, MultiplicityMatroid)> {
    matrix().prop_flat_map(|cols| {
        let m = from_integer_matrix(&cols).unwrap();
        let len = m.rank_table().len();
        proptest::collection::vec(1i64..=9, len).prop_map(move |t| {
            let other = m
                .with_multiplicity(t.into_iter().map(BigInt::from).collect())
                .unwrap();
            (m.clone(), other)
        })
    })
}

/// The subset of `m`'s local ground set carrying the given original labels.
fn by_labels(m: &MultiplicityMatroid, labels: &[u32]) -> Subset {
    Subset::from_elements((0..m.size()).filter(|&e| labels.contains(&m.label(e))))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_laws(f in poly(), g in poly(), h in poly()) {
        prop_assert_eq!(&f + &g, &g + &f);
        prop_assert_eq!(&f * &g, &g * &f);
        prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
        prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
        prop_assert!((&f - &f).is_zero());
        prop_assert_eq!(&f * &LaurentPoly::one(), f.clone());
    }

    #[test]
    fn evaluation_is_a_ring_homomorphism(f in poly(), g in poly(), pt in point()) {
        let (ef, eg) = (f.eval(&pt).unwrap(), g.eval(&pt).unwrap());
        prop_assert_eq!((&f + &g).eval(&pt).unwrap(), &ef + &eg);
        prop_assert_eq!((&f * &g).eval(&pt).unwrap(), ef * eg);
    }

    #[test]
    fn canonical_string_round_trips(f in poly()) {
        let back: LaurentPoly = f.canonical_string().parse().unwrap();
        prop_assert_eq!(back, f);
    }

    #[test]
    fn monomial_substitution_commutes_with_evaluation(f in poly(), pt in point()) {
        // q -> q*x evaluated at pt equals f evaluated with q replaced by q*x.
        let qx = Monomial::from_pairs([(VarId::Q, 1), (VarId::X, 1)]);
        let g = f.substitute_monomial(VarId::Q, &BigInt::from(1), &qx).unwrap();
        let mut shifted = pt.clone();
        shifted.insert(VarId::Q, &pt[&VarId::Q] * &pt[&VarId::X]);
        prop_assert_eq!(g.eval(&pt).unwrap(), f.eval(&shifted).unwrap());
    }

    #[test]
    fn minors_commute((m, _) in pair(), e in 0usize..4, f in 0usize..4) {
        prop_assume!(e < m.size() && f < m.size() && e != f);
        let (le, lf) = (m.label(e), m.label(f));
        let both = Subset::from_elements([e, f]);
        let c1 = m.contraction(Subset::singleton(e));
        let cc = c1.contraction(by_labels(&c1, &[lf]));
        prop_assert_eq!(&cc, &m.contraction(both));
        let r1 = m.restriction(m.ground().without(e));
        let rr = r1.restriction(r1.ground().difference(by_labels(&r1, &[lf])));
        prop_assert_eq!(&rr, &m.restriction(m.ground().difference(both)));
        // Deleting e then contracting f equals contracting f then deleting e.
        let d = m.restriction(m.ground().without(e));
        let dc = d.contraction(by_labels(&d, &[lf]));
        let c = m.contraction(Subset::singleton(f));
        let cd = c.restriction(c.ground().difference(by_labels(&c, &[le])));
        prop_assert_eq!(dc, cd);
    }

    #[test]
    fn product_is_commutative_and_pointwise((m1, m2) in pair()) {
        let p = m1.product(&m2).unwrap();
        prop_assert_eq!(&p, &m2.product(&m1).unwrap());
        for a in Subset::all(m1.size()) {
            prop_assert_eq!(p.mult(a), &(m1.mult(a) * m2.mult(a)));
        }
    }

    #[test]
    fn dual_rank_is_a_matroid((m, _) in pair()) {
        prop_assert!(check_matroid_axioms(&m.dual_rank_table()).is_ok());
        prop_assert_eq!(
            m.dual_rank(m.ground()) as usize,
            m.size() - m.total_rank() as usize
        );
    }

    #[test]
    fn random_matrices_are_arithmetic((m, _) in pair()) {
        prop_assert!(m.check_axioms().all_hold());
    }

    #[test]
    fn product_identities_on_random_pairs((m1, m2) in pair()) {
        for report in [
            verify_product_multivariate(&m1, &m2).unwrap(),
            verify_product_univariate(&m1, &m2).unwrap(),
            verify_dupont(&m1, &m2).unwrap(),
            verify_backman_lenz(&m1, &m2).unwrap(),
        ] {
            prop_assert!(report.equal, "{}", report);
        }
    }

    #[test]
    fn swap_symmetry((m1, m2) in pair()) {
        let a = verify_dupont(&m1, &m2).unwrap();
        let b = verify_dupont(&m2, &m1).unwrap();
        prop_assert_eq!(&a.lhs, &b.lhs);
        prop_assert_eq!(Some(&a.rhs_first), b.rhs_second.as_ref());
        prop_assert_eq!(Some(&b.rhs_first), a.rhs_second.as_ref());
    }

    #[test]
    fn sampled_checks_agree_with_exact((m1, m2) in pair(), seed in any::<u64>()) {
        for id in IdentityId::ALL {
            let exact = verify_identity(id, &m1, &m2).unwrap().equal;
            let sampled = sample_identity(id, &m1, &m2, 2, seed).unwrap().equal();
            prop_assert_eq!(exact, sampled, "{}", id);
        }
    }

    #[test]
    fn chi_is_a_tutte_evaluation((_, m) in pair()) {
        // χ(λ) = (-1)^r 𝔐(1 - λ, 0).
        let one_minus_l = LaurentPoly::one() - LaurentPoly::var(VarId::LAMBDA);
        let t = arithmetic_tutte(&m)
            .substitute_poly(VarId::X, &one_minus_l).unwrap()
            .partial_eval(VarId::Y, &Rational::from_integer(0.into())).unwrap();
        let sign = if m.total_rank() % 2 == 0 { 1 } else { -1 };
        prop_assert_eq!(characteristic(&m), t.mul_term(&BigInt::from(sign), &Monomial::one()));
    }
}

#[test]
fn identities_hold_without_the_arithmetic_axioms() {
    // m(∅) = 2, m({0}) = 3 on U_{1,1} breaks axiom (1).
    let broken = uniform(1, 1)
        .unwrap()
        .with_multiplicity(vec![BigInt::from(2), BigInt::from(3)])
        .unwrap();
    assert!(!broken.check_axioms().all_hold());
    for id in IdentityId::ALL {
        let r = verify_identity(id, &broken, &broken).unwrap();
        assert!(r.equal, "{r}");
    }
}

#[test]
fn unequal_sides_are_reported() {
    let m = from_integer_matrix(&[vec![2]]).unwrap();
    let mut r = verify_backman_lenz(&m, &m.trivialized()).unwrap();
    assert!(r.equal);
    r = arith_tutte::report::IdentityReport::new(
        r.identity,
        r.lhs.clone(),
        r.rhs_first.clone() + LaurentPoly::one(),
        r.rhs_second.clone(),
        r.elapsed,
    );
    assert!(!r.equal);
}

#[test]
fn specialization_chain() {
    // Trivial multiplicity: 𝔐 = T, and the Backman–Lenz sides are Kook's.
    for m in [
        graphic(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap(),
        uniform(2, 4).unwrap(),
        from_integer_matrix(&[vec![1, 2], vec![3, 4], vec![5, 6]])
            .unwrap()
            .trivialized(),
    ] {
        assert_eq!(arithmetic_tutte(&m), classical_tutte(&m));
        let bl = verify_backman_lenz(&m, &m).unwrap();
        let kook = verify_classical_kook(&m);
        assert_eq!(bl.lhs, kook.lhs);
        assert_eq!(bl.rhs_first, kook.rhs_first);
        assert_eq!(bl.rhs_second.as_ref(), Some(&kook.rhs_first));
    }
}
