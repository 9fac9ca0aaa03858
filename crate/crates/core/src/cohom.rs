//! Cohomology dimensions of a twisted bundle on an elliptic curve.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BundleCohomology {
    pub h0: BigInt,
    pub h1: BigInt,
}

/// `(h⁰, h¹)` of an indecomposable bundle of the given degree.
///
/// Away from degree zero only the degree matters. In degree zero the
/// cohomology vanishes unless the bundle is the Atiyah bundle (`special`),
/// which has `h⁰ = h¹ = 1`.
pub fn cohomology_dims(degree: &BigInt, special: bool) -> Result<BundleCohomology> {
    if special && !degree.is_zero() {
        return Err(Error::InvalidSpeciality(degree.to_string()));
    }
    Ok(if degree.is_positive() {
        BundleCohomology {
            h0: degree.clone(),
            h1: BigInt::zero(),
        }
    } else if degree.is_negative() {
        BundleCohomology {
            h0: BigInt::zero(),
            h1: -degree,
        }
    } else if special {
        BundleCohomology {
            h0: BigInt::from(1),
            h1: BigInt::from(1),
        }
    } else {
        BundleCohomology {
            h0: BigInt::zero(),
            h1: BigInt::zero(),
        }
    })
}

/// Positions `j` at which `F^∨ ⊗ K_j` is declared to be an Atiyah bundle.
///
/// Undeclared positions are generic.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SpecialityOracle {
    positions: BTreeSet<i64>,
}

impl SpecialityOracle {
    pub fn generic() -> Self {
        SpecialityOracle::default()
    }

    pub fn at(positions: impl IntoIterator<Item = i64>) -> Self {
        SpecialityOracle {
            positions: positions.into_iter().collect(),
        }
    }

    pub fn is_special(&self, j: i64) -> bool {
        self.positions.contains(&j)
    }

    pub fn positions(&self) -> impl Iterator<Item = i64> + '_ {
        self.positions.iter().copied()
    }

    pub fn is_empty(&self) -> bool {
        self.positions.is_empty()
    }
}
