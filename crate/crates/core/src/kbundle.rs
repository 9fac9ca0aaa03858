//! Charge sequences of the bundles `K_j`, the degree sequence
//! `s_j = p·d_j − q·r_j` of a bundle of charge `(p, q)`, their closed forms
//! and the location of sign changes ("jumps").
//!
//! Both sequences obey `x_{j+1} = (n−2)·x_j − x_{j−1}` but with different
//! initial values on the two sides, so they are kept as two one-sided
//! sequences: indices `j >= 1` seeded by `j = 1, 2` and indices `j <= 0`
//! seeded by `j = 0, −1`.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::charge::Charge;
use crate::error::{Error, Result};
use crate::qfield::{self, QuadNum, Sign};

pub const DEFAULT_SCAN_BUDGET: usize = 10_000;

pub(crate) fn require_cone_degree(n: i64) -> Result<()> {
    if n >= 4 {
        Ok(())
    } else {
        Err(Error::unsupported(n))
    }
}

/// One of the two one-sided halves of a doubly indexed sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    /// Indices `j >= 1`.
    Positive,
    /// Indices `j <= 0`.
    NonPositive,
}

impl Side {
    pub fn first_index(self) -> i64 {
        match self {
            Side::Positive => 1,
            Side::NonPositive => 0,
        }
    }

    /// Direction in which the side runs away from its seed.
    pub fn step(self) -> i64 {
        match self {
            Side::Positive => 1,
            Side::NonPositive => -1,
        }
    }

    pub fn of_index(j: i64) -> Side {
        if j >= 1 {
            Side::Positive
        } else {
            Side::NonPositive
        }
    }
}

/// Walks `x_{k+1} = c·x_k − x_{k−1}` from two seeds, yielding the seeds first.
#[derive(Debug, Clone)]
pub(crate) struct Recurrence {
    coeff: BigInt,
    cur: BigInt,
    next: BigInt,
}

impl Recurrence {
    pub(crate) fn new(n: i64, first: BigInt, second: BigInt) -> Self {
        Recurrence {
            coeff: BigInt::from(n - 2),
            cur: first,
            next: second,
        }
    }
}

impl Iterator for Recurrence {
    type Item = BigInt;

    fn next(&mut self) -> Option<BigInt> {
        let after = &self.coeff * &self.next - &self.cur;
        let out = std::mem::replace(&mut self.cur, std::mem::replace(&mut self.next, after));
        Some(out)
    }
}

fn k_seeds(n: i64, side: Side) -> (Charge, Charge) {
    let n_big = BigInt::from(n);
    match side {
        Side::Positive => (
            Charge::new(1, n),
            Charge::new(n - 1, &n_big * &n_big - 2 * &n_big),
        ),
        Side::NonPositive => (Charge::new(1, 0), Charge::new(n - 1, n)),
    }
}

/// Charge `(r_j, d_j)` of `K_j`.
pub fn k_charge(n: i64, j: i64) -> Result<Charge> {
    require_cone_degree(n)?;
    let side = Side::of_index(j);
    let steps = ((j - side.first_index()) * side.step()) as usize;
    let (z0, z1) = k_seeds(n, side);
    let rank = Recurrence::new(n, z0.rank, z1.rank).nth(steps).unwrap();
    let degree = Recurrence::new(n, z0.degree, z1.degree).nth(steps).unwrap();
    Ok(Charge { rank, degree })
}

/// Charges `K_j` for every `j` in `lo..=hi`.
pub fn k_charges(n: i64, lo: i64, hi: i64) -> Result<Vec<(i64, Charge)>> {
    require_cone_degree(n)?;
    if lo > hi {
        return Ok(Vec::new());
    }
    let mut out = Vec::with_capacity((hi - lo + 1) as usize);
    if lo <= 0 {
        let (z0, z1) = k_seeds(n, Side::NonPositive);
        let count = (0.min(hi) - lo + 1) as usize;
        let skip = (-(0.min(hi))) as usize;
        let ranks = Recurrence::new(n, z0.rank, z1.rank);
        let degrees = Recurrence::new(n, z0.degree, z1.degree);
        let mut part: Vec<_> = ranks
            .zip(degrees)
            .enumerate()
            .skip(skip)
            .take(count)
            .map(|(k, (rank, degree))| (-(k as i64), Charge { rank, degree }))
            .collect();
        part.reverse();
        out.extend(part);
    }
    if hi >= 1 {
        let (z0, z1) = k_seeds(n, Side::Positive);
        let start = lo.max(1);
        let ranks = Recurrence::new(n, z0.rank, z1.rank);
        let degrees = Recurrence::new(n, z0.degree, z1.degree);
        out.extend(
            ranks
                .zip(degrees)
                .enumerate()
                .skip((start - 1) as usize)
                .take((hi - start + 1) as usize)
                .map(|(k, (rank, degree))| (k as i64 + 1, Charge { rank, degree })),
        );
    }
    Ok(out)
}

/// Parameters of the degree sequence of a bundle `F` with charge `(p, q)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SSeqSpec {
    n: i64,
    p: BigInt,
    q: BigInt,
}

impl SSeqSpec {
    pub fn new(n: i64, p: impl Into<BigInt>, q: impl Into<BigInt>) -> Result<Self> {
        require_cone_degree(n)?;
        let p = p.into();
        if !p.is_positive() {
            return Err(Error::InvalidInput(format!(
                "rank must be positive for a vector bundle (got {p})"
            )));
        }
        Ok(SSeqSpec { n, p, q: q.into() })
    }

    pub fn from_charge(n: i64, z: &Charge) -> Result<Self> {
        SSeqSpec::new(n, z.rank.clone(), z.degree.clone())
    }

    pub fn n(&self) -> i64 {
        self.n
    }

    pub fn p(&self) -> &BigInt {
        &self.p
    }

    pub fn q(&self) -> &BigInt {
        &self.q
    }

    fn degree_against(&self, k: &Charge) -> BigInt {
        &self.p * &k.degree - &self.q * &k.rank
    }

    /// The two seeds of `side`: `(s_1, s_2)` or `(s_0, s_{−1})`.
    pub fn seeds(&self, side: Side) -> (BigInt, BigInt) {
        let (z0, z1) = k_seeds(self.n, side);
        (self.degree_against(&z0), self.degree_against(&z1))
    }

    /// `s_j` for `j = first, first ± 1, ...` running away from the seed.
    pub fn side_values(&self, side: Side) -> impl Iterator<Item = (i64, BigInt)> {
        let (a, b) = self.seeds(side);
        let (first, step) = (side.first_index(), side.step());
        Recurrence::new(self.n, a, b)
            .enumerate()
            .map(move |(k, v)| (first + step * k as i64, v))
    }

    /// `s_k` for every `k` in `lo..=hi`, ascending.
    pub fn values(&self, lo: i64, hi: i64) -> Vec<BigInt> {
        if lo > hi {
            return Vec::new();
        }
        let mut out = Vec::with_capacity((hi - lo + 1) as usize);
        if lo <= 0 {
            let top = hi.min(0);
            let mut part: Vec<_> = self
                .side_values(Side::NonPositive)
                .skip((-top) as usize)
                .take((top - lo + 1) as usize)
                .map(|(_, v)| v)
                .collect();
            part.reverse();
            out.extend(part);
        }
        if hi >= 1 {
            let start = lo.max(1);
            out.extend(
                self.side_values(Side::Positive)
                    .skip((start - 1) as usize)
                    .take((hi - start + 1) as usize)
                    .map(|(_, v)| v),
            );
        }
        out
    }
}

/// `s_j = deg(F^∨ ⊗ K_j) = p·d_j − q·r_j`.
pub fn s_value(spec: &SSeqSpec, j: i64) -> BigInt {
    let k = k_charge(spec.n, j).expect("degree validated by SSeqSpec");
    spec.degree_against(&k)
}

/// Closed form of one side of `s_j`.
#[derive(Debug, Clone, PartialEq, Eq)]
#[allow(clippy::large_enum_variant)]
pub enum ClosedForm {
    /// `s_j = a·μ^j + b·μ^{−j}` (`n > 4`).
    Exponential { mu: QuadNum, a: QuadNum, b: QuadNum },
    /// `s_j = a·j + b` (`n = 4`).
    Linear { a: BigInt, b: BigInt },
}

impl ClosedForm {
    pub fn eval(&self, j: i64) -> Result<BigInt> {
        match self {
            ClosedForm::Linear { a, b } => Ok(a * BigInt::from(j) + b),
            ClosedForm::Exponential { mu, a, b } => {
                let value = a.mul(&mu.pow(j)?)?.add(&b.mul(&mu.pow(-j)?)?)?;
                value.to_integer().ok_or(Error::NonIntegralValue(j))
            }
        }
    }

    /// Real solution of `s_x = 0` in floating point; no correctness claim.
    pub fn advisory_root(&self) -> Option<f64> {
        match self {
            ClosedForm::Linear { a, b } => {
                let (a, b) = (a.to_f64()?, b.to_f64()?);
                (a != 0.0).then(|| -b / a)
            }
            ClosedForm::Exponential { mu, a, b } => {
                let (mu, a, b) = (mu.approx_f64(), a.approx_f64(), b.approx_f64());
                let ratio = -b / a;
                (a != 0.0 && ratio > 0.0).then(|| 0.5 * ratio.ln() / mu.ln())
            }
        }
    }
}

/// Coefficients reproducing `s_j` on `side`.
pub fn closed_form(spec: &SSeqSpec, side: Side) -> Result<ClosedForm> {
    let n = spec.n;
    let (u, v) = spec.seeds(side);
    if n == 4 {
        let (a, b) = match side {
            // u = s_1, v = s_2
            Side::Positive => (&v - &u, 2 * &u - &v),
            // u = s_0, v = s_{-1}
            Side::NonPositive => (&u - &v, u.clone()),
        };
        return Ok(ClosedForm::Linear { a, b });
    }
    let mu = qfield::mu(n)?;
    let disc = mu.discriminant().clone();
    let lift = |x: &BigInt| QuadNum::integer(x.clone(), disc.clone());
    let (u, v) = (lift(&u), lift(&v));
    let mu2_minus_1 = mu.mul(&mu)?.sub(&QuadNum::one(disc.clone()))?;
    let (a, b) = match side {
        Side::Positive => {
            // a = (μ s_2 − s_1) / (μ (μ² − 1)),  b = (μ s_1 − s_2) μ² / (μ² − 1)
            let a = mu.mul(&v)?.sub(&u)?.div(&mu.mul(&mu2_minus_1)?)?;
            let b = mu
                .mul(&u)?
                .sub(&v)?
                .mul(&mu.mul(&mu)?)?
                .div(&mu2_minus_1)?;
            (a, b)
        }
        Side::NonPositive => {
            // a = (μ s_0 − s_{−1}) μ / (μ² − 1),  b = (μ s_{−1} − s_0) / (μ² − 1)
            let a = mu.mul(&u)?.sub(&v)?.mul(&mu)?.div(&mu2_minus_1)?;
            let b = mu.mul(&v)?.sub(&u)?.div(&mu2_minus_1)?;
            (a, b)
        }
    };
    Ok(ClosedForm::Exponential { mu, a, b })
}

/// Where a one-sided sequence changes sign.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum JumpBracket {
    /// `s_j = 0` exactly.
    AtZero(i64),
    /// `s_lo` and `s_hi = s_{lo+1}` are nonzero with opposite signs.
    Between(i64, i64),
}

/// Which inequality system the seeds of a side satisfy.
///
/// With `(u, v)` the seeds of the side and `μ` the growth rate:
///
/// * positive side, `n > 4`: `L1 = s_1 − μ s_2`, `L2 = μ s_1 − s_2 − μ⁻³ L1`;
/// * positive side, `n = 4`: `L1 = s_2 − s_1`, `L2 = s_2 − 2 s_1`, systems
///   read with reversed signs (`First` is both negative);
/// * nonpositive side, `n > 4`: `L1 = s_0 − μ s_{−1}`, `L2 = −s_0`;
/// * nonpositive side, `n = 4`: `L1 = −s_0`, `L2 = −(s_0 − s_{−1})`.
///
/// `First` means both forms are positive, `Second` both negative. The
/// systems describe a real root of the closed form on the open side; a root
/// falling strictly between the seed and the next integer does not produce
/// an integer sign change, so the scan result is authoritative.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Chamber {
    First,
    Second,
    Outside,
    Boundary,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct JumpReport {
    pub side: Side,
    pub exists: bool,
    pub bracket: Option<JumpBracket>,
    pub at_integer: bool,
    pub chamber: Chamber,
    /// Sign of the tail once it is certified never to change again.
    pub eventual_sign: i8,
    /// Zeros plus strict sign changes seen while scanning.
    pub sign_events: usize,
    pub scanned: usize,
    /// Floating-point solution of `s_x = 0` from the closed form.
    pub advisory_location: Option<f64>,
}

pub fn chamber(spec: &SSeqSpec, side: Side) -> Result<Chamber> {
    let (u, v) = spec.seeds(side);
    let (l1, l2) = if spec.n == 4 {
        match side {
            Side::Positive => (
                Sign::of(&(&v - &u)).negate(),
                Sign::of(&(&v - 2 * &u)).negate(),
            ),
            Side::NonPositive => (Sign::of(&u).negate(), Sign::of(&(&u - &v)).negate()),
        }
    } else {
        let mu = qfield::mu(spec.n)?;
        let disc = mu.discriminant().clone();
        let (uq, vq) = (
            QuadNum::integer(u.clone(), disc.clone()),
            QuadNum::integer(v.clone(), disc.clone()),
        );
        match side {
            Side::Positive => {
                let l1 = uq.sub(&mu.mul(&vq)?)?;
                let l2 = mu.mul(&uq)?.sub(&vq)?.sub(&mu.pow(-3)?.mul(&l1)?)?;
                (l1.sign(), l2.sign())
            }
            Side::NonPositive => {
                let l1 = uq.sub(&mu.mul(&vq)?)?;
                (l1.sign(), Sign::of(&u).negate())
            }
        }
    };
    Ok(match (l1, l2) {
        (Sign::Zero, _) | (_, Sign::Zero) => Chamber::Boundary,
        (Sign::Positive, Sign::Positive) => Chamber::First,
        (Sign::Negative, Sign::Negative) => Chamber::Second,
        _ => Chamber::Outside,
    })
}

pub fn detect_jump(spec: &SSeqSpec, side: Side) -> Result<JumpReport> {
    detect_jump_with_budget(spec, side, DEFAULT_SCAN_BUDGET)
}

/// Scans `side` outward from its seed until the tail sign is certified.
///
/// A pair of consecutive terms `(t, t')` with `t ≠ 0` and
/// `sign(μ·t' − t) ∈ {sign(t), 0}` fixes the sign of every later term, since
/// `μ·t_{k+1} − t_k` has the constant sign of the dominant coefficient.
pub fn detect_jump_with_budget(spec: &SSeqSpec, side: Side, budget: usize) -> Result<JumpReport> {
    if spec.p.is_zero() && spec.q.is_zero() {
        return Err(Error::InvalidInput("zero charge".into()));
    }
    let mu = qfield::mu(spec.n)?;
    let disc = mu.discriminant().clone();
    let mut values = spec.side_values(side);
    let (mut cur_j, mut cur) = values.next().unwrap();
    let mut prev: Option<(i64, BigInt)> = None;
    let mut first: Option<JumpBracket> = None;
    let mut events = 0usize;
    let mut scanned = 0usize;
    loop {
        if scanned >= budget {
            return Err(Error::ScanBudgetExceeded(budget));
        }
        scanned += 1;
        let (next_j, next) = values.next().unwrap();
        let cur_sign = Sign::of(&cur);
        let event = match (&prev, cur_sign) {
            (_, Sign::Zero) => Some(JumpBracket::AtZero(cur_j)),
            (Some((pj, pv)), s) if Sign::of(pv) == s.negate() => {
                Some(JumpBracket::Between(cur_j.min(*pj), cur_j.max(*pj)))
            }
            _ => None,
        };
        if let Some(e) = event {
            events += 1;
            first.get_or_insert(e);
        }
        if cur_sign != Sign::Zero {
            let w = mu
                .mul(&QuadNum::integer(next.clone(), disc.clone()))?
                .sub(&QuadNum::integer(cur.clone(), disc.clone()))?;
            if w.sign() != cur_sign.negate() {
                let advisory_location = closed_form(spec, side)?.advisory_root();
                return Ok(JumpReport {
                    side,
                    exists: first.is_some(),
                    bracket: first,
                    at_integer: matches!(first, Some(JumpBracket::AtZero(_))),
                    chamber: chamber(spec, side)?,
                    eventual_sign: cur_sign.as_i8(),
                    sign_events: events,
                    scanned,
                    advisory_location,
                });
            }
        }
        prev = Some((cur_j, cur));
        cur_j = next_j;
        cur = next;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    fn spec(n: i64, p: i64, q: i64) -> SSeqSpec {
        SSeqSpec::new(n, p, q).unwrap()
    }

    fn dominance(n: i64, t: &BigInt, t_next: &BigInt) -> QuadNum {
        let mu = qfield::mu(n).unwrap();
        let disc = mu.discriminant().clone();
        mu.mul(&QuadNum::rational(BigRational::from_integer(t_next.clone()), disc.clone()))
            .unwrap()
            .sub(&QuadNum::integer(t.clone(), disc))
            .unwrap()
    }

    #[test]
    fn k_charge_examples() {
        for n in [4, 5, 9] {
            assert_eq!(k_charge(n, 0).unwrap(), Charge::new(1, 0));
            assert_eq!(k_charge(n, 1).unwrap(), Charge::new(1, n));
            assert_eq!(k_charge(n, -1).unwrap(), Charge::new(n - 1, n));
        }
        assert_eq!(k_charge(5, 2).unwrap(), Charge::new(4, 15));
        assert_eq!(k_charge(5, 3).unwrap(), Charge::new(11, 40));
        assert_eq!(k_charge(5, -2).unwrap(), Charge::new(11, 15));
        assert_eq!(k_charge(5, 4).unwrap(), Charge::new(29, 105));
        assert_eq!(k_charge(3, 1), Err(Error::UnsupportedDegreeThree(3)));
    }

    #[test]
    fn k_charges_matches_pointwise() {
        for (lo, hi) in [(-5, 5), (-3, -1), (2, 6), (0, 0), (1, 1), (4, 2)] {
            let table = k_charges(6, lo, hi).unwrap();
            let expected: Vec<_> = (lo..=hi).map(|j| (j, k_charge(6, j).unwrap())).collect();
            assert_eq!(table, expected);
        }
    }

    #[test]
    fn initial_values() {
        for (n, p, q) in [(5, 1, 4), (4, 3, -7), (7, 2, 9)] {
            let s = spec(n, p, q);
            assert_eq!(s_value(&s, 0), BigInt::from(-q));
            assert_eq!(s_value(&s, 1), BigInt::from(p * n - q));
            assert_eq!(s_value(&s, 2), BigInt::from(p * (n * n - 2 * n) - q * (n - 1)));
            assert_eq!(s_value(&s, -1), BigInt::from(p * n - q * (n - 1)));
        }
        assert_eq!(s_value(&spec(5, 1, 4), -2), BigInt::from(-29));
        assert_eq!(s_value(&spec(5, 1, 4), -3), BigInt::from(-76));
    }

    #[test]
    fn values_range() {
        let s = spec(5, 2, 3);
        let v = s.values(-7, 6);
        for (k, x) in (-7..=6).zip(v) {
            assert_eq!(x, s_value(&s, k));
        }
        assert!(s.values(3, 2).is_empty());
    }

    #[test]
    fn rejects_nonpositive_rank() {
        assert!(SSeqSpec::new(5, 0, 1).is_err());
        assert!(SSeqSpec::new(5, -1, 1).is_err());
    }

    #[test]
    fn closed_form_examples() {
        let c = closed_form(&spec(4, 1, 2), Side::Positive).unwrap();
        assert_eq!(
            c,
            ClosedForm::Linear {
                a: BigInt::from(0),
                b: BigInt::from(2)
            }
        );
        let c = closed_form(&spec(4, 1, 3), Side::Positive).unwrap();
        // s_1 = 1, s_2 = -1: a = -2, b = 3
        assert_eq!(c.eval(5).unwrap(), BigInt::from(-7));

        let d = closed_form(&spec(5, 1, 0), Side::Positive).unwrap();
        assert_eq!(d.eval(3).unwrap(), BigInt::from(40));
        assert_eq!(d.eval(4).unwrap(), BigInt::from(105));
        let e = closed_form(&spec(5, 1, 4), Side::NonPositive).unwrap();
        assert_eq!(e.eval(-3).unwrap(), BigInt::from(-76));
    }

    #[test]
    fn closed_form_constant_when_n_is_four() {
        // s_1 = s_2 = c forces a = 0, b = c
        for p in 1..6 {
            for q in -20..20 {
                let s = spec(4, p, q);
                let (s1, s2) = s.seeds(Side::Positive);
                if s1 == s2 {
                    assert_eq!(
                        closed_form(&s, Side::Positive).unwrap(),
                        ClosedForm::Linear { a: BigInt::zero(), b: s1 }
                    );
                }
            }
        }
    }

    #[test]
    fn closed_form_reproduces_sequence() {
        for n in 4..=8 {
            for (p, q) in [(1, 4), (3, -2), (2, 17), (5, 5), (1, 0)] {
                let s = spec(n, p, q);
                let pos = closed_form(&s, Side::Positive).unwrap();
                let neg = closed_form(&s, Side::NonPositive).unwrap();
                for j in 1..=30 {
                    assert_eq!(pos.eval(j).unwrap(), s_value(&s, j), "n={n} j={j}");
                }
                for j in -30..=0 {
                    assert_eq!(neg.eval(j).unwrap(), s_value(&s, j), "n={n} j={j}");
                }
            }
        }
    }

    #[test]
    fn jump_examples() {
        let r = detect_jump(&spec(5, 1, 0), Side::NonPositive).unwrap();
        assert!(r.exists && r.at_integer);
        assert_eq!(r.bracket, Some(JumpBracket::AtZero(0)));
        assert_eq!(r.chamber, Chamber::Boundary);

        let r = detect_jump(&spec(5, 1, 4), Side::Positive).unwrap();
        assert!(r.exists && !r.at_integer);
        assert_eq!(r.bracket, Some(JumpBracket::Between(1, 2)));
        assert_eq!(r.eventual_sign, -1);
        let x = r.advisory_location.unwrap();
        assert!(x > 1.0 && x < 2.0, "advisory {x}");

        let r = detect_jump(&spec(5, 1, 4), Side::NonPositive).unwrap();
        assert!(!r.exists);
        assert_eq!(r.bracket, None);
        assert_eq!(r.eventual_sign, -1);

        // n=4, (1,2): s_1 = 2, s_2 = 6, increasing
        let r = detect_jump(&spec(4, 1, 2), Side::Positive).unwrap();
        assert!(!r.exists);
        assert_eq!(r.eventual_sign, 1);

        // n=4, (1,1): s_1 = 3, s_2 = 5, mixed chamber signs, no jump
        let r = detect_jump(&spec(4, 1, 1), Side::Positive).unwrap();
        assert!(!r.exists);
        assert_eq!(r.chamber, Chamber::Outside);
    }

    #[test]
    fn jump_on_negative_side_is_bracketed_ascending() {
        // n=4, (3,5): s_0 = -5, s_{-1} = -3, s_{-2} = -1, s_{-3} = 1
        let r = detect_jump(&spec(4, 3, 5), Side::NonPositive).unwrap();
        assert_eq!(r.bracket, Some(JumpBracket::Between(-3, -2)));
        assert_eq!(r.chamber, Chamber::First);
        let x = r.advisory_location.unwrap();
        assert!((x + 2.5).abs() < 1e-9);
    }

    #[test]
    fn budget_is_enforced() {
        // n=4 sequences are linear: (1000, 1999) has its root far out
        let s = spec(4, 1000, 1999);
        assert_eq!(
            detect_jump_with_budget(&s, Side::NonPositive, 10),
            Err(Error::ScanBudgetExceeded(10))
        );
        assert!(detect_jump(&s, Side::NonPositive).is_ok());
    }

    #[test]
    fn dominance_sign_is_constant() {
        let s = spec(6, 3, 11);
        let vals: Vec<_> = s.side_values(Side::Positive).take(20).map(|(_, v)| v).collect();
        let signs: Vec<_> = vals
            .windows(2)
            .map(|w| dominance(6, &w[0], &w[1]).sign())
            .collect();
        assert!(signs.windows(2).all(|w| w[0] == w[1]));
    }
}
