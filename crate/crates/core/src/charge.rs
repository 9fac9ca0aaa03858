//! Charges `(rank, degree)` and the integral 2×2 maps induced on them by the
//! grading shift.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::json::bigint;

/// Numerical class of a bundle: rank and degree.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Charge {
    #[serde(with = "bigint")]
    pub rank: BigInt,
    #[serde(with = "bigint")]
    pub degree: BigInt,
}

impl Charge {
    pub fn new(rank: impl Into<BigInt>, degree: impl Into<BigInt>) -> Self {
        Charge {
            rank: rank.into(),
            degree: degree.into(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.rank.is_zero() && self.degree.is_zero()
    }
}

impl fmt::Display for Charge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.rank, self.degree)
    }
}

/// A 2×2 integer matrix `[[a, b], [c, d]]` acting on column charges.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LatticeMap {
    pub a: BigInt,
    pub b: BigInt,
    pub c: BigInt,
    pub d: BigInt,
}

impl LatticeMap {
    pub fn new(
        a: impl Into<BigInt>,
        b: impl Into<BigInt>,
        c: impl Into<BigInt>,
        d: impl Into<BigInt>,
    ) -> Self {
        LatticeMap {
            a: a.into(),
            b: b.into(),
            c: c.into(),
            d: d.into(),
        }
    }

    pub fn identity() -> Self {
        LatticeMap::new(1, 0, 0, 1)
    }

    pub fn determinant(&self) -> BigInt {
        &self.a * &self.d - &self.b * &self.c
    }

    pub fn trace(&self) -> BigInt {
        &self.a + &self.d
    }

    pub fn compose(&self, rhs: &LatticeMap) -> LatticeMap {
        LatticeMap {
            a: &self.a * &rhs.a + &self.b * &rhs.c,
            b: &self.a * &rhs.b + &self.b * &rhs.d,
            c: &self.c * &rhs.a + &self.d * &rhs.c,
            d: &self.c * &rhs.b + &self.d * &rhs.d,
        }
    }

    pub fn negate(&self) -> LatticeMap {
        LatticeMap {
            a: -&self.a,
            b: -&self.b,
            c: -&self.c,
            d: -&self.d,
        }
    }

    /// Integer inverse; `None` unless the determinant is a unit.
    pub fn inverse(&self) -> Option<LatticeMap> {
        let det = self.determinant();
        if det.abs() != BigInt::one() {
            return None;
        }
        // det = ±1, so dividing by det is multiplying by det
        Some(LatticeMap {
            a: &self.d * &det,
            b: -&self.b * &det,
            c: -&self.c * &det,
            d: &self.a * &det,
        })
    }

    pub fn entries(&self) -> [[BigInt; 2]; 2] {
        [
            [self.a.clone(), self.b.clone()],
            [self.c.clone(), self.d.clone()],
        ]
    }
}

impl fmt::Display for LatticeMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.a, self.b, self.c, self.d)
    }
}

/// Matrix of the grading shift on charges.
///
/// For `n >= 4` this is `[[1, -1], [n, 1 - n]]`; `n = 2` gives
/// `[[1, -1], [2, -1]]` (order four) and `n = 1` gives `[[1, -1], [1, 0]]`
/// (order six). Degree three and nonpositive degrees are rejected.
pub fn sigma_matrix(n: i64) -> Result<LatticeMap> {
    if n == 1 || n == 2 || n >= 4 {
        Ok(LatticeMap::new(1, -1, n, 1 - n))
    } else {
        Err(Error::unsupported(n))
    }
}

pub fn apply(m: &LatticeMap, z: &Charge) -> Charge {
    Charge {
        rank: &m.a * &z.rank + &m.b * &z.degree,
        degree: &m.c * &z.rank + &m.d * &z.degree,
    }
}

/// `m^k`; negative exponents go through the integer inverse.
///
/// Panics if `k < 0` and `m` is not invertible over the integers.
pub fn power(m: &LatticeMap, k: i64) -> LatticeMap {
    let base = if k < 0 {
        m.inverse()
            .expect("negative power of a lattice map with determinant other than ±1")
    } else {
        m.clone()
    };
    let mut exp = k.unsigned_abs();
    let mut acc = LatticeMap::identity();
    let mut sq = base;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc.compose(&sq);
        }
        exp >>= 1;
        if exp > 0 {
            sq = sq.compose(&sq);
        }
    }
    acc
}

pub fn finite_order(m: &LatticeMap, bound: u64) -> Option<u64> {
    let id = LatticeMap::identity();
    let mut acc = m.clone();
    for k in 1..=bound {
        if acc == id {
            return Some(k);
        }
        acc = acc.compose(m);
    }
    None
}

/// Antisymmetric pairing `r1·d2 − d1·r2`.
pub fn euler_pairing(z1: &Charge, z2: &Charge) -> BigInt {
    &z1.rank * &z2.degree - &z1.degree * &z2.rank
}
