mod common;

use common::*;
use ellbundle::{BundleObject, LineBundleClass};
use proptest::prelude::*;

/// `dim Hom` computed summand by summand: `min(r, s)` when twists agree.
fn hom_by_table(a: &BundleObject, b: &BundleObject) -> u64 {
    let mut total = 0;
    for (x, m) in a.summands() {
        for (y, n) in b.summands() {
            if x.twist() == y.twist() {
                total += x.rank().min(y.rank()) * m * n;
            }
        }
    }
    total
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn tensor_commutes(a in arb_object(6, 6), b in arb_object(6, 6)) {
        prop_assert_eq!(a.tensor(&b), b.tensor(&a));
    }

    #[test]
    fn tensor_associates(a in arb_object(6, 6), b in arb_object(6, 6), c in arb_object(6, 6)) {
        prop_assert_eq!(a.tensor(&b).tensor(&c), a.tensor(&b.tensor(&c)));
    }

    #[test]
    fn unit_is_two_sided(a in arb_object(6, 6)) {
        let o = BundleObject::unit();
        prop_assert_eq!(o.tensor(&a), a.clone());
        prop_assert_eq!(a.tensor(&o), a);
    }

    #[test]
    fn tensor_distributes_over_sum(a in arb_object(4, 6), b in arb_object(4, 6), c in arb_object(4, 6)) {
        prop_assert_eq!(a.tensor(&b.direct_sum(&c)), a.tensor(&b).direct_sum(&a.tensor(&c)));
    }

    #[test]
    fn rank_multiplicative_and_additive(a in arb_object(6, 6), b in arb_object(6, 6)) {
        prop_assert_eq!(a.tensor(&b).rank(), a.rank() * b.rank());
        prop_assert_eq!(a.direct_sum(&b).rank(), a.rank() + b.rank());
    }

    #[test]
    fn det_bilinear(a in arb_object(5, 6), b in arb_object(5, 6)) {
        let lhs = a.tensor(&b).det();
        let rhs = a.det().pow(b.rank() as i64).mul(&b.det().pow(a.rank() as i64));
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(a.direct_sum(&b).det(), a.det().mul(&b.det()));
    }

    #[test]
    fn hom_matches_table_and_is_symmetric(a in arb_object(6, 4), b in arb_object(6, 4)) {
        let h = a.hom_dim(&b);
        prop_assert_eq!(h, a.dual().tensor(&b).gamma_dim());
        prop_assert_eq!(h, hom_by_table(&a, &b));
        prop_assert_eq!(h, b.hom_dim(&a));
    }

    #[test]
    fn dual_is_involutive_and_monoidal(a in arb_object(6, 6), b in arb_object(6, 6)) {
        prop_assert_eq!(a.dual().dual(), a.clone());
        prop_assert_eq!(a.tensor(&b).dual(), a.dual().tensor(&b.dual()));
    }

    #[test]
    fn classifier_implications(a in arb_object(4, 6)) {
        if a.is_finite() {
            prop_assert!(a.is_semifinite());
        }
        if a.is_unipotent() {
            prop_assert!(a.is_semifinite());
        }
        if a.is_finite() && a.is_unipotent() {
            prop_assert_eq!(a.clone(), BundleObject::unit().scale(a.rank()));
        }
    }

    #[test]
    fn jh_is_idempotent_and_preserves_invariants(a in arb_object(6, 6)) {
        let s = a.jh_factors();
        prop_assert_eq!(s.jh_factors(), s.clone());
        prop_assert_eq!(s.rank(), a.rank());
        prop_assert_eq!(s.det(), a.det());
        prop_assert!(s.classes().all(|x| x.rank() == 1));
    }
}

#[test]
fn hom_factorization_through_finite_and_unipotent_parts() {
    let mut lines = Vec::new();
    for m in 1..=4 {
        for a in 0..m {
            for b in 0..m {
                let l = torsion(a, m, b, m);
                if !lines.contains(&l) {
                    lines.push(l);
                }
            }
        }
    }
    for f in &lines {
        for f2 in &lines {
            let (fo, fo2) = (
                BundleObject::line(f.clone()),
                BundleObject::line(f2.clone()),
            );
            for r in 1..=4 {
                for s in 1..=4 {
                    let lhs = fo.tensor(&e(r)).hom_dim(&fo2.tensor(&e(s)));
                    let rhs = fo.hom_dim(&fo2) * e(r).hom_dim(&e(s));
                    assert_eq!(lhs, rhs, "F={f} F'={f2} r={r} s={s}");
                }
            }
        }
    }
}

#[test]
fn non_torsion_twists_gate_hom() {
    let g = LineBundleClass::generator("g", 1);
    let h = LineBundleClass::generator("h", 1);
    assert_eq!(obj(3, g.clone()).hom_dim(&obj(2, g.clone())), 2);
    assert_eq!(obj(3, g).hom_dim(&obj(2, h)), 0);
}
