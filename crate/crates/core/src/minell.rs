//! The minimal elliptic singularities: `n = 1` (Ẽ8) and `n = 2` (Ẽ7).
//!
//! The grading shift acts on charges with finite order, so every module is
//! determined by a charge in the fundamental domain (`r > 0`, `0 <= d < r`
//! for `n = 1`, `0 <= d < 2r` for `n = 2`), an Atiyah flag for `d = 0`, and
//! a shift `l`. Its resolution is periodic: `β_{i+1,j} = β_{i,j−3}` for
//! `n = 1` and `β_{i+1,j} = β_{i,j−2}` for `n = 2`.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::betti::{BettiTable, Window};
use crate::charge::{self, Charge};
use crate::error::{Error, Result};
use crate::series::{self, IntPolynomial, MinellCounts, RationalFunction};

fn require_minell_degree(n: i64) -> Result<()> {
    if n == 1 || n == 2 {
        Ok(())
    } else {
        Err(Error::unsupported(n))
    }
}

/// Period of the resolution in internal degree: 3 for `n = 1`, 2 for `n = 2`.
pub fn period(n: i64) -> Result<i64> {
    require_minell_degree(n)?;
    Ok(4 - n)
}

/// Order of the shift action: 6 for `n = 1`, 4 for `n = 2`.
pub fn orbit_order(n: i64) -> Result<u64> {
    require_minell_degree(n)?;
    Ok(if n == 1 { 6 } else { 4 })
}

pub fn in_fundamental_domain(n: i64, z: &Charge) -> bool {
    let bound = &z.rank * BigInt::from(n);
    z.rank.is_positive() && !z.degree.is_negative() && z.degree < bound
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Reduction {
    pub reduced: Charge,
    pub power: u64,
}

/// The unique orbit element in the fundamental domain and the smallest
/// power of the shift matrix reaching it.
pub fn fundamental_domain_reduce(n: i64, z: &Charge) -> Result<Reduction> {
    let order = orbit_order(n)?;
    if z.is_zero() {
        return Err(Error::ZeroCharge);
    }
    let sigma = charge::sigma_matrix(n)?;
    let mut hits = Vec::new();
    let mut cur = z.clone();
    for k in 0..order {
        if in_fundamental_domain(n, &cur) && !hits.iter().any(|h: &Reduction| h.reduced == cur) {
            hits.push(Reduction {
                reduced: cur.clone(),
                power: k,
            });
        }
        cur = charge::apply(&sigma, &cur);
    }
    match hits.len() {
        1 => Ok(hits.pop().unwrap()),
        count => Err(Error::DomainAmbiguity(
            z.rank.to_string(),
            z.degree.to_string(),
            count,
        )),
    }
}

/// A module over a minimal elliptic ring, as given by the user.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinellInput {
    pub n: i64,
    pub charge: Charge,
    pub atiyah: bool,
    pub shift: i64,
}

/// A validated input with its charge in the fundamental domain.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinellModule {
    pub n: i64,
    #[serde(with = "crate::json::bigint")]
    pub r: BigInt,
    #[serde(with = "crate::json::bigint")]
    pub d: BigInt,
    pub atiyah: bool,
    pub shift: i64,
    /// Power of the shift matrix applied to the input charge.
    pub power: u64,
}

impl MinellInput {
    pub fn new(n: i64, charge: Charge, atiyah: bool, shift: i64) -> Self {
        MinellInput {
            n,
            charge,
            atiyah,
            shift,
        }
    }

    pub fn reduce(&self) -> Result<MinellModule> {
        let red = fundamental_domain_reduce(self.n, &self.charge)?;
        let Charge { rank, degree } = red.reduced;
        if self.atiyah && !degree.is_zero() {
            return Err(Error::InvalidAtiyahFlag(degree.to_string()));
        }
        Ok(MinellModule {
            n: self.n,
            r: rank,
            d: degree,
            atiyah: self.atiyah,
            shift: self.shift,
            power: red.power,
        })
    }
}

/// `β_{0,j}` for `j = offset, offset + 1, ...`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BetaRow {
    pub offset: i64,
    #[serde(with = "crate::json::bigint_vec")]
    pub values: Vec<BigInt>,
}

impl BetaRow {
    pub fn get(&self, j: i64) -> BigInt {
        usize::try_from(j - self.offset)
            .ok()
            .and_then(|k| self.values.get(k).cloned())
            .unwrap_or_default()
    }

    /// `B(t)` with the monomial `t^offset` factored out.
    pub fn polynomial(&self) -> IntPolynomial {
        IntPolynomial::new(self.values.clone())
    }
}

impl MinellModule {
    pub fn period(&self) -> i64 {
        4 - self.n
    }

    /// Generators of the unshifted module, `β_{0,0} ..= β_{0,4−n}`.
    pub fn row0(&self) -> Vec<BigInt> {
        let (r, d) = (&self.r, &self.d);
        let one = BigInt::one();
        match (self.n, self.atiyah) {
            (1, false) => vec![BigInt::zero(), r.clone(), r - d, d.clone()],
            (1, true) => vec![one.clone(), r.clone(), r.clone(), one],
            (_, false) => vec![BigInt::zero(), 2 * r - d, d.clone()],
            (_, true) => vec![one.clone(), 2 * r, one],
        }
    }

    /// Generators with the shift applied: `β_{0,j}(M[l]) = β_{0,j+l·period}(M)`.
    pub fn beta_row(&self) -> BetaRow {
        BetaRow {
            offset: -self.shift * self.period(),
            values: self.row0(),
        }
    }

    pub fn entry(&self, i: i64, j: i64) -> BigInt {
        self.beta_row().get(j - self.period() * i)
    }

    /// Every nonzero `β_{i,j}` with `j` in `window`.
    pub fn table(&self, window: Window) -> BettiTable {
        let row = self.beta_row();
        let per = self.period();
        let mut table = BettiTable::new(window);
        for j in window.iter() {
            // j - per*i in [offset, offset + len)
            let hi = (j - row.offset).div_euclid(per);
            let lo = (j - row.offset - row.values.len() as i64 + 1 + per - 1).div_euclid(per);
            for i in lo..=hi {
                table.insert(i, j, row.get(j - per * i));
            }
        }
        table
    }

    pub fn invariants(&self) -> Result<MinellCounts> {
        let counts = series::rank_multiplicity_minell(&self.beta_row().polynomial())?;
        let rank = if self.atiyah { &self.r + 1 } else { self.r.clone() };
        assert_eq!(counts.rank, rank, "rank formula");
        assert_eq!(counts.generators, &rank * 2, "generator formula");
        Ok(counts)
    }

    /// Hilbert series as `(t^offset, fraction)`.
    pub fn hilbert(&self) -> Result<(i64, RationalFunction)> {
        let row = self.beta_row();
        Ok((row.offset, series::hilbert_minell_module(self.n, &row.polynomial())?))
    }
}

pub fn betti_row0(input: &MinellInput) -> Result<Vec<BigInt>> {
    Ok(input.reduce()?.row0())
}

pub fn betti_table_minell(input: &MinellInput, window: Window) -> Result<BettiTable> {
    Ok(input.reduce()?.table(window))
}

pub fn invariants_minell(input: &MinellInput) -> Result<MinellCounts> {
    input.reduce()?.invariants()
}

/// Size of the orbit of `z` under the shift action.
pub fn orbit_size(n: i64, z: &Charge) -> Result<u64> {
    let sigma = charge::sigma_matrix(n)?;
    let order = orbit_order(n)?;
    let mut cur = charge::apply(&sigma, z);
    let mut k = 1;
    while cur != *z && k <= order {
        cur = charge::apply(&sigma, &cur);
        k += 1;
    }
    Ok(k)
}
