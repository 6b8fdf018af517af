//! The rational representation ring `K(X)` on the indecomposable basis,
//! summand closures `S(E)`, and the classifiers built on them.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::bundle::{BundleObject, Indecomposable};
use crate::error::{Error, Result};
use crate::picard::{LbOrder, LineBundleClass};

/// Finite `Q`-linear combination of indecomposable classes.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct RingElement {
    terms: BTreeMap<Indecomposable, BigRational>,
}

impl RingElement {
    pub fn zero() -> Self {
        RingElement::default()
    }

    pub fn one() -> Self {
        Self::basis(Indecomposable::unit())
    }

    pub fn basis(x: Indecomposable) -> Self {
        Self::term(x, BigRational::one())
    }

    pub fn term(x: Indecomposable, coeff: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(x, coeff);
        }
        RingElement { terms }
    }

    /// The class `[E]` of a bundle.
    pub fn from_bundle(e: &BundleObject) -> Self {
        let mut out = RingElement::zero();
        for (x, m) in e.summands() {
            out.add_term(x.clone(), BigRational::from_integer(BigInt::from(m)));
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Indecomposable, &BigRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, x: &Indecomposable) -> BigRational {
        self.terms.get(x).cloned().unwrap_or_else(BigRational::zero)
    }

    fn add_term(&mut self, x: Indecomposable, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let slot = self
            .terms
            .entry(x.clone())
            .or_insert_with(BigRational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&x);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (x, c) in other.terms() {
            out.add_term(x.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        RingElement {
            terms: self.terms.iter().map(|(x, c)| (x.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        if q.is_zero() {
            return RingElement::zero();
        }
        RingElement {
            terms: self.terms.iter().map(|(x, c)| (x.clone(), c * q)).collect(),
        }
    }

    /// Bilinear extension of the tensor product on basis elements.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = RingElement::zero();
        for (a, ca) in self.terms() {
            for (b, cb) in other.terms() {
                let c = ca * cb;
                for x in a.tensor(b) {
                    out.add_term(x, c.clone());
                }
            }
        }
        out
    }
}

impl fmt::Display for RingElement {
    /// `q1*[basis1] + q2*[basis2]`, or `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (x, c)) in self.terms().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{c}*[{x}]")?;
        }
        Ok(())
    }
}

impl Serialize for RingElement {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Term {
            basis: String,
            coefficient: String,
        }
        let mut seq = serializer.serialize_seq(Some(self.terms.len()))?;
        for (x, c) in self.terms() {
            seq.serialize_element(&Term {
                basis: x.to_string(),
                coefficient: c.to_string(),
            })?;
        }
        seq.end()
    }
}

/// Result of enumerating `S(E) = ∪_n I(E^{⊗n})` up to a power cutoff.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SummandClosure {
    pub classes: BTreeSet<Indecomposable>,
    /// The discovered set is closed under `E ⊗ -`, so it is all of `S(E)`.
    pub stabilized: bool,
    /// Highest tensor power that was expanded.
    pub powers_used: u32,
}

fn absorbs(e: &BundleObject, set: &BTreeSet<Indecomposable>) -> bool {
    e.classes()
        .all(|x| set.iter().all(|c| x.tensor(c).all(|y| set.contains(&y))))
}

/// Indecomposable summands of `e^{⊗n}` for `1 <= n <= max_power`.
///
/// Iteration stops early once the discovered set is stable under tensoring
/// with `e`, since every further power then has its summands inside it.
pub fn summand_closure(e: &BundleObject, max_power: u32) -> SummandClosure {
    let mut frontier: BTreeSet<Indecomposable> = e.classes().cloned().collect();
    let mut classes = frontier.clone();
    let mut n = 1;
    loop {
        if absorbs(e, &classes) {
            return SummandClosure {
                classes,
                stabilized: true,
                powers_used: n,
            };
        }
        if n >= max_power {
            return SummandClosure {
                classes,
                stabilized: false,
                powers_used: n,
            };
        }
        let mut next = BTreeSet::new();
        for x in e.classes() {
            for c in &frontier {
                next.extend(x.tensor(c));
            }
        }
        classes.extend(next.iter().cloned());
        frontier = next;
        n += 1;
    }
}

/// Known closed forms for `S(E)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClosedForm {
    /// `S(O) = {O}`.
    Unit,
    /// `{E_k : k > 0}` (from `E_r`, `r` even).
    AllRanks,
    /// `{E_{2k-1} : k > 0}` (from `E_r`, `r >= 3` odd).
    OddRanks,
    /// `{E_{2k-1} ⊗ L^{2i}, E_{2k} ⊗ L^{2i+1}}` (from `E_2 ⊗ L`, `L` of even order).
    TwistedParity {
        twist: LineBundleClass,
        order: u64,
    },
    /// `{E_k ⊗ L^i : 0 <= i < m}` (from `E_2 ⊗ L`, `L` of odd order `m > 1`).
    TwistedAll {
        twist: LineBundleClass,
        order: u64,
    },
    Unsupported,
}

impl ClosedForm {
    /// Exponent `j` in `0..order` with `L^j = twist`, if any.
    fn exponent_of(gen: &LineBundleClass, order: u64, twist: &LineBundleClass) -> Option<u64> {
        let mut acc = LineBundleClass::identity();
        for j in 0..order {
            if &acc == twist {
                return Some(j);
            }
            acc = acc.mul(gen);
        }
        None
    }

    /// Membership test; `None` when the closed form is unsupported.
    pub fn contains(&self, x: &Indecomposable) -> Option<bool> {
        let untwisted = x.twist().is_identity();
        Some(match self {
            ClosedForm::Unit => untwisted && x.rank() == 1,
            ClosedForm::AllRanks => untwisted,
            ClosedForm::OddRanks => untwisted && x.rank() % 2 == 1,
            ClosedForm::TwistedParity { twist, order } => {
                match Self::exponent_of(twist, *order, x.twist()) {
                    Some(j) => (x.rank() + j) % 2 == 1,
                    None => false,
                }
            }
            ClosedForm::TwistedAll { twist, order } => {
                Self::exponent_of(twist, *order, x.twist()).is_some()
            }
            ClosedForm::Unsupported => return None,
        })
    }
}

impl fmt::Display for ClosedForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClosedForm::Unit => f.write_str("{E[1]}"),
            ClosedForm::AllRanks => f.write_str("{E[k] : k>0}"),
            ClosedForm::OddRanks => f.write_str("{E[2k-1] : k>0}"),
            ClosedForm::TwistedParity { twist, order } => write!(
                f,
                "{{E[2k-1]*L^(2i), E[2k]*L^(2i+1) : k>0, 0<=i<{}}} where L = {twist}",
                order / 2
            ),
            ClosedForm::TwistedAll { twist, order } => {
                write!(f, "{{E[k]*L^i : k>0, 0<=i<{order}}} where L = {twist}")
            }
            ClosedForm::Unsupported => f.write_str("unsupported"),
        }
    }
}

/// Closed form of `S(E)` for `E = E_r` and for `E = E_2 ⊗ L` with `L` torsion.
///
/// For `E_2 ⊗ L` with `L` of odd order `m`, the Chinese remainder theorem
/// lets any rank parity meet any power of `L`, so every `E_k ⊗ L^i` occurs.
pub fn closed_form_s(e: &Indecomposable) -> ClosedForm {
    let r = e.rank();
    let twist = e.twist();
    if twist.is_identity() {
        return match r {
            1 => ClosedForm::Unit,
            _ if r.is_multiple_of(2) => ClosedForm::AllRanks,
            _ => ClosedForm::OddRanks,
        };
    }
    match (r, twist.order()) {
        (2, LbOrder::Finite(m)) if m % 2 == 0 => ClosedForm::TwistedParity {
            twist: twist.clone(),
            order: m,
        },
        (2, LbOrder::Finite(m)) => ClosedForm::TwistedAll {
            twist: twist.clone(),
            order: m,
        },
        _ => ClosedForm::Unsupported,
    }
}

/// Krull dimension of the subring `R(E)`: 0 for finite bundles, 1 otherwise.
pub fn krull_dim_class(e: &BundleObject) -> Result<u8> {
    if e.is_zero() {
        return Err(Error::ZeroObject);
    }
    Ok(if e.is_finite() { 0 } else { 1 })
}

/// Tannakian fundamental group of the category generated by one indecomposable.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TannakianLabel {
    Trivial,
    Mu(u64),
    Gm(u64),
    Ga,
    GaGm(u64),
    GaMu(u64),
    /// Rank at least 3 with a nontrivial twist; not determined here.
    MixedSemifinite,
}

fn gm_power(f: u64) -> String {
    if f == 1 {
        "Gm".to_string()
    } else {
        format!("Gm^{f}")
    }
}

impl fmt::Display for TannakianLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TannakianLabel::Trivial => f.write_str("trivial"),
            TannakianLabel::Mu(m) => write!(f, "mu_{m}"),
            TannakianLabel::Gm(r) => f.write_str(&gm_power(*r)),
            TannakianLabel::Ga => f.write_str("Ga"),
            TannakianLabel::GaGm(r) => write!(f, "Ga x {}", gm_power(*r)),
            TannakianLabel::GaMu(m) => write!(f, "Ga x mu_{m}"),
            TannakianLabel::MixedSemifinite => f.write_str("undetermined (mixed semifinite)"),
        }
    }
}

impl Serialize for TannakianLabel {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr {
            kind: &'static str,
            #[serde(skip_serializing_if = "Option::is_none")]
            param: Option<u64>,
            text: String,
        }
        let (kind, param) = match *self {
            TannakianLabel::Trivial => ("TRIVIAL", None),
            TannakianLabel::Mu(m) => ("MU", Some(m)),
            TannakianLabel::Gm(r) => ("GM", Some(r)),
            TannakianLabel::Ga => ("GA", None),
            TannakianLabel::GaGm(r) => ("GA_x_GM", Some(r)),
            TannakianLabel::GaMu(m) => ("GA_x_MU", Some(m)),
            TannakianLabel::MixedSemifinite => ("MIXED_SEMIFINITE", None),
        };
        Repr {
            kind,
            param,
            text: self.to_string(),
        }
        .serialize(serializer)
    }
}

/// Group label for `<E_r ⊗ L>`.
///
/// A single line bundle generates a cyclic subgroup of `Pic^0`, so a
/// non-torsion twist always contributes exactly one `Gm` factor.
pub fn tannakian_label(e: &Indecomposable) -> TannakianLabel {
    let twist = e.twist();
    match (e.rank(), twist.order()) {
        (1, LbOrder::Finite(1)) => TannakianLabel::Trivial,
        (1, LbOrder::Finite(m)) => TannakianLabel::Mu(m),
        (1, LbOrder::Infinite) => TannakianLabel::Gm(1),
        (_, LbOrder::Finite(1)) => TannakianLabel::Ga,
        (2, LbOrder::Finite(m)) => TannakianLabel::GaMu(m),
        (2, LbOrder::Infinite) => TannakianLabel::GaGm(1),
        _ => TannakianLabel::MixedSemifinite,
    }
}
