mod common;

use std::collections::BTreeSet;

use common::*;
use ellbundle::{
    closed_form_s, jordan_tensor, phi_transport, product_tensor, summand_closure, tannakian_label,
    BundleObject, Indecomposable, LbOrder, RingElement, TannakianLabel,
};
use num_rational::BigRational;
use proptest::prelude::*;

fn arb_ring(max_rank: u64, max_order: i64) -> impl Strategy<Value = RingElement> {
    proptest::collection::vec(
        (arb_indecomposable(max_rank, max_order), -4i64..=4, 1i64..=3),
        0..4,
    )
    .prop_map(|terms| {
        terms
            .into_iter()
            .fold(RingElement::zero(), |acc, (x, n, d)| {
                acc.add(&RingElement::term(x, BigRational::new(n.into(), d.into())))
            })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn ring_axioms(a in arb_ring(4, 6), b in arb_ring(4, 6), c in arb_ring(4, 6)) {
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(RingElement::one().mul(&a), a.clone());
        prop_assert!(a.sub(&a).is_zero());
    }

    #[test]
    fn class_map_is_a_semiring_map(a in arb_object(4, 6), b in arb_object(4, 6)) {
        let (ka, kb) = (RingElement::from_bundle(&a), RingElement::from_bundle(&b));
        prop_assert_eq!(RingElement::from_bundle(&a.direct_sum(&b)), ka.add(&kb));
        prop_assert_eq!(RingElement::from_bundle(&a.tensor(&b)), ka.mul(&kb));
    }

    #[test]
    fn stabilized_closure_is_tensor_closed(a in arb_object(3, 6)) {
        let c = summand_closure(&a, 12);
        if c.stabilized {
            for x in a.classes() {
                prop_assert!(c.classes.contains(x));
                for y in &c.classes {
                    for z in x.tensor(y) {
                        prop_assert!(c.classes.contains(&z));
                    }
                }
            }
            prop_assert_eq!(summand_closure(&a, 20).classes, c.classes);
        }
    }

    #[test]
    fn jordan_tensor_dimension(r in 1u64..=6, s in 1u64..=6) {
        let p = jordan_tensor(r, s).unwrap();
        prop_assert_eq!(p.size(), r * s);
        prop_assert_eq!(p, jordan_tensor(s, r).unwrap());
    }
}

#[test]
fn closure_stays_inside_closed_forms() {
    for r in 1..=6 {
        let x = ind(r, ellbundle::LineBundleClass::identity());
        let cf = closed_form_s(&x);
        for n in 1..=8 {
            for y in summand_closure(&x.clone().into(), n).classes {
                assert_eq!(cf.contains(&y), Some(true), "E_{r}: {y}");
            }
        }
    }
    for m in 2..=6 {
        let x = ind(2, cyclic(1, m));
        let cf = closed_form_s(&x);
        for n in 1..=8 {
            for y in summand_closure(&x.clone().into(), n).classes {
                assert_eq!(cf.contains(&y), Some(true), "m={m}: {y}");
            }
        }
    }
}

#[test]
fn finite_rank_one_labels() {
    for m in 1..=6 {
        for j in 0..m {
            let x = ind(1, cyclic(j, m));
            let label = tannakian_label(&x);
            let finite = BundleObject::from(x.clone()).is_finite();
            assert!(finite);
            match x.twist().order() {
                LbOrder::Finite(1) => assert_eq!(label, TannakianLabel::Trivial),
                LbOrder::Finite(k) => assert_eq!(label, TannakianLabel::Mu(k)),
                LbOrder::Infinite => unreachable!(),
            }
        }
    }
    let x = ind(1, ellbundle::LineBundleClass::generator("g", 3));
    assert!(!BundleObject::from(x.clone()).is_finite());
    assert_eq!(tannakian_label(&x), TannakianLabel::Gm(1));
}

#[test]
fn phi_is_monoidal_on_sums() {
    for m in 2..=4i64 {
        let mut objs: Vec<BundleObject> = Vec::new();
        for r in 1..=3 {
            for j in 0..m {
                objs.push(obj(r, cyclic(j, m)));
            }
        }
        let a = objs[0].direct_sum(&objs[objs.len() - 1]);
        for b in &objs {
            let b = b.direct_sum(&objs[1]);
            let lhs = phi_transport(&a.tensor(&b), m as u64).unwrap();
            let rhs = product_tensor(
                &phi_transport(&a, m as u64).unwrap(),
                &phi_transport(&b, m as u64).unwrap(),
                m as u64,
            )
            .unwrap();
            assert_eq!(lhs, rhs);
            assert_eq!(lhs.dimension(), a.rank() * b.rank());
        }
    }
}

#[test]
fn twisted_parity_closed_form_membership() {
    // (E_2 ⊗ L)^{⊗n} = ⊕ E_k ⊗ L^n with k ≡ n+1 (mod 2); with m even the
    // parity of n is determined by n mod m.
    let m = 6;
    let l = cyclic(1, m);
    let cf = closed_form_s(&ind(2, l.clone()));
    let mut seen = BTreeSet::new();
    for n in 1..=14u64 {
        for k in (1..=n + 1).filter(|k| (k + n + 1) % 2 == 0) {
            seen.insert(Indecomposable::new(k, l.pow(n as i64)).unwrap());
        }
    }
    for y in &seen {
        assert_eq!(cf.contains(y), Some(true));
    }
    assert_eq!(
        cf.contains(&ind(2, ellbundle::LineBundleClass::identity())),
        Some(false)
    );
}
