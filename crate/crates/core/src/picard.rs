//! Degree-0 line-bundle classes on an elliptic curve.
//!
//! The group is modeled as `(Q/Z)^2 x Z^(free)`: two torsion coordinates
//! reduced into `[0, 1)` and a finitely supported exponent map over named
//! non-torsion generators. Distinct generators satisfy no relations.

use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;
use num_rational::Rational64;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

/// Reduces a rational into its canonical representative in `[0, 1)`.
pub fn reduce_mod_one(q: Rational64) -> Rational64 {
    let r = q - q.floor();
    debug_assert!(r >= Rational64::zero() && r < Rational64::one());
    r
}

/// Order of a line-bundle class in `Pic^0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum LbOrder {
    Finite(u64),
    Infinite,
}

impl fmt::Display for LbOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LbOrder::Finite(m) => write!(f, "{m}"),
            LbOrder::Infinite => f.write_str("infinite"),
        }
    }
}

/// A class in `Pic^0(X)`.
///
/// Fields are private so every value is canonical: structural equality is
/// group equality.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LineBundleClass {
    t1: Rational64,
    t2: Rational64,
    free: BTreeMap<String, i64>,
}

impl Default for LineBundleClass {
    fn default() -> Self {
        Self::identity()
    }
}

impl LineBundleClass {
    /// The trivial class `O_X`.
    pub fn identity() -> Self {
        LineBundleClass {
            t1: Rational64::zero(),
            t2: Rational64::zero(),
            free: BTreeMap::new(),
        }
    }

    /// Pure torsion class with the given coordinates (reduced mod 1).
    pub fn torsion(t1: Rational64, t2: Rational64) -> Self {
        LineBundleClass {
            t1: reduce_mod_one(t1),
            t2: reduce_mod_one(t2),
            free: BTreeMap::new(),
        }
    }

    /// Formal non-torsion generator `name` raised to `exp`.
    pub fn generator(name: &str, exp: i64) -> Self {
        let mut free = BTreeMap::new();
        if exp != 0 {
            free.insert(name.to_string(), exp);
        }
        LineBundleClass {
            t1: Rational64::zero(),
            t2: Rational64::zero(),
            free,
        }
    }

    pub fn t1(&self) -> Rational64 {
        self.t1
    }

    pub fn t2(&self) -> Rational64 {
        self.t2
    }

    pub fn free(&self) -> &BTreeMap<String, i64> {
        &self.free
    }

    pub fn is_identity(&self) -> bool {
        self.t1.is_zero() && self.t2.is_zero() && self.free.is_empty()
    }

    /// Group law (tensor product of line bundles).
    pub fn mul(&self, other: &Self) -> Self {
        let mut free = self.free.clone();
        for (name, e) in &other.free {
            let slot = free.entry(name.clone()).or_insert(0);
            *slot += e;
            if *slot == 0 {
                free.remove(name);
            }
        }
        LineBundleClass {
            t1: reduce_mod_one(self.t1 + other.t1),
            t2: reduce_mod_one(self.t2 + other.t2),
            free,
        }
    }

    /// Dual line bundle.
    pub fn inv(&self) -> Self {
        LineBundleClass {
            t1: reduce_mod_one(-self.t1),
            t2: reduce_mod_one(-self.t2),
            free: self.free.iter().map(|(k, v)| (k.clone(), -v)).collect(),
        }
    }

    /// `n`-fold tensor power; negative `n` uses the dual.
    pub fn pow(&self, n: i64) -> Self {
        if n == 0 {
            return Self::identity();
        }
        let k = Rational64::from_integer(n);
        LineBundleClass {
            t1: reduce_mod_one(self.t1 * k),
            t2: reduce_mod_one(self.t2 * k),
            free: self.free.iter().map(|(g, e)| (g.clone(), e * n)).collect(),
        }
    }

    /// A line bundle is finite exactly when it is torsion.
    pub fn is_torsion(&self) -> bool {
        self.free.is_empty()
    }

    pub fn order(&self) -> LbOrder {
        if !self.is_torsion() {
            return LbOrder::Infinite;
        }
        let d = (*self.t1.denom()).lcm(self.t2.denom());
        LbOrder::Finite(d as u64)
    }

    /// Number of distinct free generators with nonzero exponent.
    pub fn free_rank(&self) -> usize {
        self.free.len()
    }
}

fn fmt_frac(q: &Rational64, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if q.is_integer() {
        write!(f, "{}", q.numer())
    } else {
        write!(f, "{}/{}", q.numer(), q.denom())
    }
}

impl fmt::Display for LineBundleClass {
    /// `O`, or `*`-joined factors `L[p/q,r/s]`, `Tg`, `Tg^3`, `~Tg^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return f.write_str("O");
        }
        let mut first = true;
        if !(self.t1.is_zero() && self.t2.is_zero()) {
            f.write_str("L[")?;
            fmt_frac(&self.t1, f)?;
            f.write_str(",")?;
            fmt_frac(&self.t2, f)?;
            f.write_str("]")?;
            first = false;
        }
        for (name, &e) in &self.free {
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e < 0 {
                f.write_str("~")?;
            }
            write!(f, "T{name}")?;
            if e.abs() != 1 {
                write!(f, "^{}", e.abs())?;
            }
        }
        Ok(())
    }
}
