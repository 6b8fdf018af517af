//! Krull–Schmidt model of degree-0 bundles on an elliptic curve.
//!
//! Every indecomposable of degree 0 is `E_r ⊗ L` for a unique rank `r` and a
//! unique class `L ∈ Pic^0`, so an object is a finite multiset of such pairs.
//! The tensor product follows the Clebsch–Gordan pattern
//! `E_r ⊗ E_s = ⊕_{i=1}^{min(r,s)} E_{|r-s|+2i-1}` with twists multiplied.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::picard::LineBundleClass;

/// `E_r ⊗ L`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Indecomposable {
    rank: u64,
    twist: LineBundleClass,
}

impl Indecomposable {
    pub fn new(rank: u64, twist: LineBundleClass) -> Result<Self> {
        if rank == 0 {
            return Err(Error::InvalidRank(rank));
        }
        Ok(Indecomposable { rank, twist })
    }

    /// The Atiyah bundle `E_r` with trivial twist.
    pub fn atiyah(rank: u64) -> Result<Self> {
        Self::new(rank, LineBundleClass::identity())
    }

    pub fn line(twist: LineBundleClass) -> Self {
        Indecomposable { rank: 1, twist }
    }

    pub fn unit() -> Self {
        Self::line(LineBundleClass::identity())
    }

    pub fn rank(&self) -> u64 {
        self.rank
    }

    pub fn twist(&self) -> &LineBundleClass {
        &self.twist
    }

    pub fn dual(&self) -> Self {
        Indecomposable {
            rank: self.rank,
            twist: self.twist.inv(),
        }
    }

    /// Summands of `self ⊗ other`, each with multiplicity one.
    pub fn tensor(&self, other: &Self) -> impl Iterator<Item = Indecomposable> {
        let twist = self.twist.mul(&other.twist);
        atiyah_ranks(self.rank, other.rank).map(move |rank| Indecomposable {
            rank,
            twist: twist.clone(),
        })
    }
}

impl fmt::Display for Indecomposable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "E[{}]", self.rank)?;
        if !self.twist.is_identity() {
            write!(f, "*{}", self.twist)?;
        }
        Ok(())
    }
}

/// Ranks of the summands of `E_r ⊗ E_s`, increasing.
pub fn atiyah_ranks(r: u64, s: u64) -> impl Iterator<Item = u64> {
    let base = r.abs_diff(s);
    (1..=r.min(s)).map(move |i| base + 2 * i - 1)
}

/// A bundle in Krull–Schmidt normal form.
///
/// The empty multiset is the zero object.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BundleObject {
    summands: BTreeMap<Indecomposable, u64>,
}

impl From<Indecomposable> for BundleObject {
    fn from(x: Indecomposable) -> Self {
        let mut summands = BTreeMap::new();
        summands.insert(x, 1);
        BundleObject { summands }
    }
}

impl FromIterator<Indecomposable> for BundleObject {
    fn from_iter<I: IntoIterator<Item = Indecomposable>>(iter: I) -> Self {
        let mut out = BundleObject::zero();
        for x in iter {
            out.add_summand(x, 1);
        }
        out
    }
}

impl BundleObject {
    pub fn zero() -> Self {
        BundleObject::default()
    }

    /// The tensor unit `O_X`.
    pub fn unit() -> Self {
        Indecomposable::unit().into()
    }

    pub fn line(twist: LineBundleClass) -> Self {
        Indecomposable::line(twist).into()
    }

    pub fn is_zero(&self) -> bool {
        self.summands.is_empty()
    }

    pub fn add_summand(&mut self, x: Indecomposable, mult: u64) {
        if mult > 0 {
            *self.summands.entry(x).or_insert(0) += mult;
        }
    }

    /// Summands with multiplicities, in canonical order.
    pub fn summands(&self) -> impl Iterator<Item = (&Indecomposable, u64)> {
        self.summands.iter().map(|(k, &v)| (k, v))
    }

    /// Distinct indecomposable summands.
    pub fn classes(&self) -> impl Iterator<Item = &Indecomposable> {
        self.summands.keys()
    }

    /// Total number of indecomposable summands counted with multiplicity.
    pub fn len(&self) -> u64 {
        self.summands.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    /// The single summand, if the object is indecomposable.
    pub fn as_indecomposable(&self) -> Option<&Indecomposable> {
        match self.summands.iter().next() {
            Some((x, 1)) if self.summands.len() == 1 => Some(x),
            _ => None,
        }
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (x, m) in other.summands() {
            out.add_summand(x.clone(), m);
        }
        out
    }

    /// `n`-fold direct sum.
    pub fn scale(&self, n: u64) -> Self {
        let mut out = BundleObject::zero();
        if n == 0 {
            return out;
        }
        for (x, m) in self.summands() {
            out.add_summand(x.clone(), m * n);
        }
        out
    }

    pub fn tensor(&self, other: &Self) -> Self {
        let mut out = BundleObject::zero();
        for (a, ma) in self.summands() {
            for (b, mb) in other.summands() {
                for c in a.tensor(b) {
                    out.add_summand(c, ma * mb);
                }
            }
        }
        out
    }

    /// `n`-fold tensor power; the zeroth power is the unit.
    pub fn tensor_pow(&self, n: u32) -> Self {
        (0..n).fold(BundleObject::unit(), |acc, _| acc.tensor(self))
    }

    pub fn dual(&self) -> Self {
        let mut out = BundleObject::zero();
        for (x, m) in self.summands() {
            out.add_summand(x.dual(), m);
        }
        out
    }

    pub fn rank(&self) -> u64 {
        self.summands().map(|(x, m)| x.rank * m).sum()
    }

    /// `det(E_r ⊗ L) = L^r`, since `det E_r` is trivial.
    pub fn det(&self) -> LineBundleClass {
        self.summands()
            .fold(LineBundleClass::identity(), |acc, (x, m)| {
                acc.mul(&x.twist.pow((x.rank * m) as i64))
            })
    }

    /// `dim Γ`: each untwisted `E_r` has a one-dimensional space of sections,
    /// and `E_r ⊗ L` with `L` nontrivial has none.
    pub fn gamma_dim(&self) -> u64 {
        self.summands()
            .filter(|(x, _)| x.twist.is_identity())
            .map(|(_, m)| m)
            .sum()
    }

    /// `dim Hom(self, other) = dim Γ(self^∨ ⊗ other)`.
    pub fn hom_dim(&self, other: &Self) -> u64 {
        self.dual().tensor(other).gamma_dim()
    }

    /// Every summand has trivial twist (a sum of `E_r`).
    pub fn is_unipotent(&self) -> bool {
        self.classes().all(|x| x.twist.is_identity())
    }

    /// A direct sum of torsion line bundles.
    pub fn is_finite(&self) -> bool {
        self.classes().all(|x| x.rank == 1 && x.twist.is_torsion())
    }

    /// Every twist is torsion; ranks are unrestricted.
    pub fn is_semifinite(&self) -> bool {
        self.classes().all(|x| x.twist.is_torsion())
    }

    /// Semisimplification: `E_r ⊗ L` has `r` composition factors, all `L`.
    pub fn jh_factors(&self) -> Self {
        let mut out = BundleObject::zero();
        for (x, m) in self.summands() {
            out.add_summand(Indecomposable::line(x.twist.clone()), x.rank * m);
        }
        out
    }
}

/// Numerical projectivity criterion for `E_r` in `<E_r>`:
/// `dim End(E_r) = r · dim End(O_X) = r`.
pub fn end_dim_projective_check(r: u64) -> Result<bool> {
    let e: BundleObject = Indecomposable::atiyah(r)?.into();
    Ok(e.hom_dim(&e) == r)
}

impl fmt::Display for BundleObject {
    /// Canonical text: `2*E[1] + E[3]*L[1/3,0]`, or `Z` for the zero object.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("Z");
        }
        for (i, (x, m)) in self.summands().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            if m != 1 {
                write!(f, "{m}*")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}
