#![allow(dead_code)]

use ellbundle::{BundleObject, Indecomposable, LineBundleClass};
use num_rational::Rational64;
use proptest::prelude::*;
use rand::Rng;

pub fn torsion(a: i64, m: i64, b: i64, n: i64) -> LineBundleClass {
    LineBundleClass::torsion(Rational64::new(a, m), Rational64::new(b, n))
}

pub fn cyclic(j: i64, m: i64) -> LineBundleClass {
    LineBundleClass::torsion(Rational64::new(j, m), Rational64::from_integer(0))
}

pub fn ind(r: u64, twist: LineBundleClass) -> Indecomposable {
    Indecomposable::new(r, twist).unwrap()
}

pub fn obj(r: u64, twist: LineBundleClass) -> BundleObject {
    ind(r, twist).into()
}

pub fn e(r: u64) -> BundleObject {
    obj(r, LineBundleClass::identity())
}

/// Torsion class of order dividing `max_order`, optionally times a free generator.
pub fn random_twist<R: Rng>(rng: &mut R, max_order: i64, free_prob: f64) -> LineBundleClass {
    let m = rng.gen_range(1..=max_order);
    let t = torsion(rng.gen_range(0..m), m, rng.gen_range(0..m), m);
    if rng.gen_bool(free_prob) {
        let g = ["g", "h"][rng.gen_range(0..2)];
        let exp = [-2, -1, 1, 2][rng.gen_range(0..4)];
        t.mul(&LineBundleClass::generator(g, exp))
    } else {
        t
    }
}

pub fn random_object<R: Rng>(
    rng: &mut R,
    max_summands: usize,
    max_rank: u64,
    max_order: i64,
    free_prob: f64,
) -> BundleObject {
    let n = rng.gen_range(1..=max_summands);
    (0..n)
        .map(|_| {
            let r = rng.gen_range(1..=max_rank);
            ind(r, random_twist(rng, max_order, free_prob))
        })
        .collect()
}

pub fn arb_twist(max_order: i64) -> impl Strategy<Value = LineBundleClass> {
    (
        1..=max_order,
        0..max_order,
        0..max_order,
        proptest::option::weighted(0.2, ("[gh]", -2i64..=2)),
    )
        .prop_map(|(m, a, b, free)| {
            let t = torsion(a % m, m, b % m, m);
            match free {
                Some((g, e)) => t.mul(&LineBundleClass::generator(&g, e)),
                None => t,
            }
        })
}

pub fn arb_indecomposable(max_rank: u64, max_order: i64) -> impl Strategy<Value = Indecomposable> {
    (1..=max_rank, arb_twist(max_order)).prop_map(|(r, t)| ind(r, t))
}

pub fn arb_object(max_rank: u64, max_order: i64) -> impl Strategy<Value = BundleObject> {
    proptest::collection::vec((arb_indecomposable(max_rank, max_order), 1u64..=2), 0..3).prop_map(
        |v| {
            let mut out = BundleObject::zero();
            for (x, m) in v {
                out.add_summand(x, m);
            }
            out
        },
    )
}
