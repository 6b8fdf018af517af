//! Representation-side oracle.
//!
//! The category of bundles generated by a torsion line bundle of order `m` and
//! the unipotent bundles is modeled independently as representations of
//! `μ_m × (unipotent group)`: an object is a multiset of (character, Jordan
//! block) pairs. Tensor products of Jordan blocks are computed by exact rank
//! computations on Kronecker products, never by the Clebsch–Gordan formula.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{OnceLock, RwLock};

use num_rational::Rational64;
use num_traits::Zero;
use serde::Serialize;

use crate::bundle::BundleObject;
use crate::error::{Error, Result};
use crate::linalg::RationalMatrix;

/// Jordan type of a unipotent operator: block sizes, nonincreasing.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Partition {
    parts: Vec<u64>,
}

impl Partition {
    pub fn new(mut parts: Vec<u64>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    /// Dimension of the underlying representation.
    pub fn size(&self) -> u64 {
        self.parts.iter().sum()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(u64::to_string).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// Jordan type of a nilpotent matrix from the ranks of its powers:
/// the number of blocks of size `k` is `rank(N^{k-1}) - 2 rank(N^k) + rank(N^{k+1})`.
pub fn jordan_type_of_nilpotent(n: &RationalMatrix) -> Partition {
    assert_eq!(n.rows(), n.cols(), "square matrix required");
    let dim = n.rows();
    let mut ranks = vec![dim];
    let mut power = n.clone();
    loop {
        let r = power.rank();
        ranks.push(r);
        if r == 0 {
            break;
        }
        assert!(ranks.len() <= dim + 1, "matrix is not nilpotent");
        power = power.mul(n);
    }
    ranks.push(0);
    let mut parts = Vec::new();
    for k in 1..ranks.len() - 1 {
        let count = ranks[k - 1] + ranks[k + 1] - 2 * ranks[k];
        parts.extend(std::iter::repeat_n(k as u64, count));
    }
    Partition::new(parts)
}

fn jordan_cache() -> &'static RwLock<HashMap<(u64, u64), Partition>> {
    static CACHE: OnceLock<RwLock<HashMap<(u64, u64), Partition>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Jordan type of `U_r ⊗ U_s`, where `U_n` is the `n x n` unipotent Jordan block.
///
/// Results are memoized per `(r, s)`; concurrent callers may both compute a
/// missing entry but always store the same value.
pub fn jordan_tensor(r: u64, s: u64) -> Result<Partition> {
    if r == 0 {
        return Err(Error::InvalidRank(r));
    }
    if s == 0 {
        return Err(Error::InvalidRank(s));
    }
    if let Some(p) = jordan_cache()
        .read()
        .unwrap_or_else(|e| e.into_inner())
        .get(&(r, s))
    {
        return Ok(p.clone());
    }
    let ur = RationalMatrix::unipotent_jordan_block(r as usize);
    let us = RationalMatrix::unipotent_jordan_block(s as usize);
    let n = (r * s) as usize;
    let nilpotent = ur.kronecker(&us).sub(&RationalMatrix::identity(n));
    let p = jordan_type_of_nilpotent(&nilpotent);
    jordan_cache()
        .write()
        .unwrap_or_else(|e| e.into_inner())
        .entry((r, s))
        .or_insert_with(|| p.clone());
    Ok(p)
}

/// A representation of `μ_m × U`: multiset of (character mod `m`, block size).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct ProductObject {
    modulus: u64,
    components: BTreeMap<(u64, u64), u64>,
}

impl ProductObject {
    pub fn new(modulus: u64) -> Result<Self> {
        if modulus == 0 {
            return Err(Error::InvalidModulus(modulus));
        }
        Ok(ProductObject {
            modulus,
            components: BTreeMap::new(),
        })
    }

    pub fn from_components(
        modulus: u64,
        comps: impl IntoIterator<Item = (u64, u64)>,
    ) -> Result<Self> {
        let mut out = Self::new(modulus)?;
        for (chi, block) in comps {
            out.add(chi, block, 1)?;
        }
        Ok(out)
    }

    pub fn add(&mut self, character: u64, block: u64, mult: u64) -> Result<()> {
        if block == 0 {
            return Err(Error::InvalidRank(block));
        }
        if mult > 0 {
            *self
                .components
                .entry((character % self.modulus, block))
                .or_insert(0) += mult;
        }
        Ok(())
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// `((character, block), multiplicity)` in canonical order.
    pub fn components(&self) -> impl Iterator<Item = ((u64, u64), u64)> + '_ {
        self.components.iter().map(|(&k, &v)| (k, v))
    }

    pub fn dimension(&self) -> u64 {
        self.components().map(|((_, b), m)| b * m).sum()
    }
}

impl fmt::Display for ProductObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.components.is_empty() {
            return write!(f, "{{}} mod {}", self.modulus);
        }
        let items: Vec<String> = self
            .components()
            .map(|((chi, b), m)| {
                if m == 1 {
                    format!("({chi},{b})")
                } else {
                    format!("{m}*({chi},{b})")
                }
            })
            .collect();
        write!(f, "{{{}}} mod {}", items.join(", "), self.modulus)
    }
}

/// Tensor product in `Rep(μ_m × U)`: characters add, blocks combine by
/// [`jordan_tensor`].
pub fn product_tensor(a: &ProductObject, b: &ProductObject, modulus: u64) -> Result<ProductObject> {
    for found in [a.modulus, b.modulus] {
        if found != modulus {
            return Err(Error::ModulusMismatch {
                expected: modulus,
                found,
            });
        }
    }
    let mut out = ProductObject::new(modulus)?;
    for ((chi, r), ma) in a.components() {
        for ((psi, s), mb) in b.components() {
            let p = jordan_tensor(r, s)?;
            for &k in p.parts() {
                out.add((chi + psi) % modulus, k, ma * mb)?;
            }
        }
    }
    Ok(out)
}

/// Transports `⊕ E_r ⊗ L^{c}` (with `L = L[1/m, 0]`) to `⊕ (c mod m, r)`.
///
/// Only twists in the cyclic subgroup generated by `L[1/m, 0]` are accepted.
pub fn phi_transport(a: &BundleObject, modulus: u64) -> Result<ProductObject> {
    let mut out = ProductObject::new(modulus)?;
    let m = Rational64::from_integer(modulus as i64);
    for (x, mult) in a.summands() {
        let tw = x.twist();
        let scaled = tw.t1() * m;
        if !tw.is_torsion() || !tw.t2().is_zero() || !scaled.is_integer() {
            return Err(Error::NotRepresentable {
                twist: tw.to_string(),
                modulus,
            });
        }
        out.add(scaled.to_integer() as u64, x.rank(), mult)?;
    }
    Ok(out)
}
