//! Deliberately naive reimplementations used to cross-check the main path.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::charge::{self, Charge, LatticeMap};
use crate::error::{Error, Result};
use crate::kbundle::{self, JumpBracket, JumpReport, SSeqSpec, Side};
use crate::qfield::{QuadNum, Sign};

/// `(r_j, d_j)` as `(−c_n)^j (−1, 0)` for `j > 0` and `(−c_n^{−1})^{−j} (1, 0)`
/// otherwise.
pub fn charge_by_matrix_power(n: i64, j: i64) -> Result<Charge> {
    kbundle::require_cone_degree(n)?;
    let c = charge::sigma_matrix(n)?;
    if j > 0 {
        Ok(charge::apply(&charge::power(&c.negate(), j), &Charge::new(-1, 0)))
    } else {
        let m = c.inverse().expect("unimodular").negate();
        Ok(charge::apply(&charge::power(&m, -j), &Charge::new(1, 0)))
    }
}

/// `s_j` from `s_start`, `s_{start+1}` by stepping `s_{k+1} = (n−2)s_k − s_{k−1}`
/// in whichever direction reaches `j`.
pub fn sequence_by_iteration(start: i64, initials: (&BigInt, &BigInt), n: i64, j: i64) -> BigInt {
    let m = BigInt::from(n - 2);
    let (mut a, mut b) = (initials.0.clone(), initials.1.clone());
    let mut k = start;
    while j > k + 1 {
        let next = &m * &b - &a;
        a = b;
        b = next;
        k += 1;
    }
    while j < k {
        let prev = &m * &a - &b;
        b = a;
        a = prev;
        k -= 1;
    }
    if j == k {
        a
    } else {
        b
    }
}

/// `A μ^j + B μ^{−j}` for `n > 4`, `A j + B` for `n = 4`.
pub fn closed_form_eval(a: &QuadNum, b: &QuadNum, n: i64, j: i64) -> Result<BigInt> {
    let value = if n == 4 {
        a.scale_int(&BigInt::from(j)).add(b)?
    } else {
        let mu = crate::qfield::mu(n)?;
        a.mul(&mu.pow(j)?)?.add(&b.mul(&mu.pow(-j)?)?)?
    };
    value.to_integer().ok_or(Error::NonIntegralValue(j))
}

/// Literal scan of the first `budget` terms of `side`.
///
/// The tail counts as settled when the last two scanned terms share a
/// nonzero sign and the magnitude is not shrinking; otherwise the budget is
/// reported as exceeded.
pub fn naive_jump_scan(spec: &SSeqSpec, side: Side, budget: usize) -> Result<JumpReport> {
    if spec.p().is_zero() && spec.q().is_zero() {
        return Err(Error::InvalidInput("zero charge".into()));
    }
    if budget < 2 {
        return Err(Error::ScanBudgetExceeded(budget));
    }
    let first = side.first_index();
    let step = side.step();
    let c = charge::sigma_matrix(spec.n())?;
    let (m, mut k) = match side {
        Side::Positive => (c.negate(), charge::apply(&c.negate(), &Charge::new(-1, 0))),
        Side::NonPositive => (c.inverse().expect("unimodular").negate(), Charge::new(1, 0)),
    };
    let mut events = Vec::new();
    let mut prev: Option<BigInt> = None;
    let mut settled = false;
    for step_count in 0..budget {
        let j = first + step * step_count as i64;
        let s = spec.p() * &k.degree - spec.q() * &k.rank;
        let sign = Sign::of(&s);
        if sign == Sign::Zero {
            events.push(JumpBracket::AtZero(j));
        } else if let Some(p) = &prev {
            if Sign::of(p) == sign.negate() {
                let pj = j - step;
                events.push(JumpBracket::Between(pj.min(j), pj.max(j)));
            }
        }
        settled = match &prev {
            Some(p) => sign != Sign::Zero && Sign::of(p) == sign && s.abs() >= p.abs(),
            None => false,
        };
        prev = Some(s);
        k = charge::apply(&m, &k);
    }
    if !settled {
        return Err(Error::ScanBudgetExceeded(budget));
    }
    let last_sign = Sign::of(prev.as_ref().expect("budget >= 2"));
    let bracket = events.first().copied();
    Ok(JumpReport {
        side,
        exists: bracket.is_some(),
        bracket,
        at_integer: matches!(bracket, Some(JumpBracket::AtZero(_))),
        chamber: kbundle::chamber(spec, side)?,
        eventual_sign: last_sign.as_i8(),
        sign_events: events.len(),
        scanned: budget,
        advisory_location: None,
    })
}

/// Sign of `x` from a `bits`-bit enclosure of `√D`; `None` when the
/// enclosure straddles zero.
pub fn interval_sign(x: &QuadNum, bits: u32) -> Option<Sign> {
    let (a, b, disc) = (x.rational_part(), x.irrational_part(), x.discriminant());
    if b.is_zero() {
        return Some(Sign::of(a));
    }
    let scale = BigInt::from(1) << bits;
    let root = (disc * &scale * &scale).sqrt();
    let lo = BigRational::new(root.clone(), scale.clone());
    let hi = BigRational::new(root + 1, scale);
    let (e1, e2) = (a + b * &lo, a + b * &hi);
    let (min, max) = if e1 <= e2 { (e1, e2) } else { (e2, e1) };
    if min.is_positive() {
        Some(Sign::Positive)
    } else if max.is_negative() {
        Some(Sign::Negative)
    } else {
        None
    }
}

/// `m^k (v)` by repeated application, for the charge tests.
pub fn orbit_point(m: &LatticeMap, v: &Charge, k: u64) -> Charge {
    (0..k).fold(v.clone(), |acc, _| charge::apply(m, &acc))
}
