//! Koszul and CoKoszul classification of the modules `Φ(F[l])`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Signed;
use serde::{Deserialize, Serialize};

use crate::betti::ModuleDescriptor;
use crate::charge::Charge;
use crate::cohom::SpecialityOracle;
use crate::error::{Error, Result};
use crate::kbundle;
use crate::qfield::{self, QuadNum, Sign};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Criterion {
    Koszul,
    CoKoszul,
}

/// One evaluated inequality of a criterion.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Condition {
    pub statement: String,
    /// Exact value of the quantity being compared.
    pub value: String,
    pub satisfied: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KoszulVerdict {
    pub criterion: Criterion,
    pub verdict: bool,
    pub conditions: Vec<Condition>,
}

impl KoszulVerdict {
    fn from_conditions(criterion: Criterion, conditions: Vec<Condition>) -> Self {
        KoszulVerdict {
            criterion,
            verdict: conditions.iter().all(|c| c.satisfied),
            conditions,
        }
    }
}

impl fmt::Display for KoszulVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match (self.criterion, self.verdict) {
            (Criterion::Koszul, true) => "KOSZUL",
            (Criterion::Koszul, false) => "NOT KOSZUL",
            (Criterion::CoKoszul, true) => "COKOSZUL",
            (Criterion::CoKoszul, false) => "NOT COKOSZUL",
        };
        writeln!(f, "{name}")?;
        for c in &self.conditions {
            let mark = if c.satisfied { "ok " } else { "FAIL" };
            writeln!(f, "  [{mark}] {}  ({})", c.statement, c.value)?;
        }
        Ok(())
    }
}

fn condition(statement: &str, value: String, satisfied: bool) -> Condition {
    Condition {
        statement: statement.to_string(),
        value,
        satisfied,
    }
}

/// `μ·a − b` in the field of `μ`.
fn mu_combination(n: i64, a: &BigInt, b: &BigInt) -> QuadNum {
    let mu = qfield::mu(n).expect("cone degree validated");
    let disc = mu.discriminant().clone();
    mu.scale_int(a)
        .sub(&QuadNum::integer(b.clone(), disc))
        .expect("same field")
}

fn shift_condition(l: i64) -> Condition {
    condition("l = 0", format!("l = {l}"), l == 0)
}

/// Sign-or-exception test shared by both criteria: `s` must have the
/// required sign, and when it vanishes the twist there must be generic.
fn boundary_condition(
    statement: &str,
    label: &str,
    s: &BigInt,
    wanted: Sign,
    special: bool,
) -> Condition {
    let sign = Sign::of(s);
    let satisfied = sign == wanted || (sign == Sign::Zero && !special);
    let value = if sign == Sign::Zero {
        let kind = if special { "special" } else { "generic" };
        format!("{label} = 0, {kind} twist")
    } else {
        format!("{label} = {s}")
    };
    condition(statement, value, satisfied)
}

/// `β_{i,j} = 0` for `i ≠ j`, `i >= 0`.
pub fn is_koszul(desc: &ModuleDescriptor) -> KoszulVerdict {
    let seq = desc.sequence();
    let n = seq.n();
    let s1 = kbundle::s_value(seq, 1);
    let s0 = kbundle::s_value(seq, 0);
    let sm1 = kbundle::s_value(seq, -1);
    let w = mu_combination(n, &sm1, &s0);
    let conditions = vec![
        boundary_condition(
            "s_1 >= 0, generic twist if s_1 = 0",
            "s_1",
            &s1,
            Sign::Positive,
            desc.speciality().is_special(1),
        ),
        condition("s_0 < 0", format!("s_0 = {s0}"), s0.is_negative()),
        condition(
            "mu*s_{-1} - s_0 <= 0",
            format!("{w}"),
            w.sign() != Sign::Positive,
        ),
        shift_condition(desc.shift()),
    ];
    KoszulVerdict::from_conditions(Criterion::Koszul, conditions)
}

/// `β_{i,j} = 0` for `i ≠ j`, `i <= 0`.
pub fn is_cokoszul(desc: &ModuleDescriptor) -> KoszulVerdict {
    let seq = desc.sequence();
    let n = seq.n();
    let sm1 = kbundle::s_value(seq, -1);
    let s1 = kbundle::s_value(seq, 1);
    let s2 = kbundle::s_value(seq, 2);
    let w = mu_combination(n, &s2, &s1);
    let conditions = vec![
        boundary_condition(
            "s_{-1} <= 0, generic twist if s_{-1} = 0",
            "s_{-1}",
            &sm1,
            Sign::Negative,
            desc.speciality().is_special(-1),
        ),
        condition("s_1 > 0", format!("s_1 = {s1}"), s1.is_positive()),
        condition(
            "mu*s_2 - s_1 >= 0",
            format!("{w}"),
            w.sign() != Sign::Negative,
        ),
        shift_condition(desc.shift()),
    ];
    KoszulVerdict::from_conditions(Criterion::CoKoszul, conditions)
}

/// The Koszul system written directly in the charge:
/// `q > 0`, `np − q >= 0`, `μ(pn − q(n−1)) + q <= 0`.
pub fn koszul_charge_form(n: i64, p: &BigInt, q: &BigInt) -> Result<bool> {
    kbundle::require_cone_degree(n)?;
    let nb = BigInt::from(n);
    if !q.is_positive() || (&nb * p - q).is_negative() {
        return Ok(false);
    }
    let a = &nb * p - q * (&nb - 1);
    let w = mu_combination(n, &a, &-q);
    Ok(w.sign() != Sign::Positive)
}

/// Slope `μn / (μ(n−1) − 1)` of the line `μ(pn − q(n−1)) + q = 0`.
pub fn koszul_boundary_slope(n: i64) -> Result<QuadNum> {
    let mu = qfield::mu(n)?;
    let disc = mu.discriminant().clone();
    let num = mu.scale_int(&BigInt::from(n));
    let den = mu
        .scale_int(&BigInt::from(n - 1))
        .sub(&QuadNum::one(disc))?;
    num.div(&den)
}

/// Integer charges `1 <= p <= p_max`, `1 <= q <= q_max` whose generic
/// bundle gives a Koszul module, in lexicographic order.
pub fn koszul_region(n: i64, p_max: i64, q_max: i64) -> Result<Vec<(i64, i64)>> {
    kbundle::require_cone_degree(n)?;
    let mut out = Vec::new();
    for p in 1..=p_max {
        for q in 1..=q_max {
            let desc = ModuleDescriptor::generic(n, p, q)?;
            if is_koszul(&desc).verdict {
                out.push((p, q));
            }
        }
    }
    Ok(out)
}

pub fn is_maximally_generated(desc: &ModuleDescriptor) -> bool {
    let seq = desc.sequence();
    is_koszul(desc).verdict && seq.p() * BigInt::from(seq.n()) == *seq.q()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct UlrichData {
    #[serde(with = "crate::json::bigint")]
    pub multiplicity: BigInt,
    #[serde(with = "crate::json::bigint")]
    pub generators: BigInt,
    /// `μ(M) <= e(M)`.
    pub bound_holds: bool,
    /// `μ(M) = e(M)`.
    pub maximally_generated: bool,
}

pub fn ulrich_data(desc: &ModuleDescriptor) -> Result<UlrichData> {
    if !is_koszul(desc).verdict {
        let z = desc.charge();
        return Err(Error::NotKoszul(z.rank.to_string(), z.degree.to_string()));
    }
    let seq = desc.sequence();
    let multiplicity = seq.p() * BigInt::from(seq.n());
    let generators = -kbundle::s_value(seq, 0);
    Ok(UlrichData {
        bound_holds: generators <= multiplicity,
        maximally_generated: generators == multiplicity,
        multiplicity,
        generators,
    })
}

/// Generic-oracle Koszul descriptor for `(p, q)`, or `NotKoszul`.
pub(crate) fn koszul_descriptor(n: i64, z: &Charge) -> Result<ModuleDescriptor> {
    let desc = ModuleDescriptor::new(n, z.clone(), 0, SpecialityOracle::generic())?;
    if is_koszul(&desc).verdict {
        Ok(desc)
    } else {
        Err(Error::NotKoszul(z.rank.to_string(), z.degree.to_string()))
    }
}

/// The charge is Koszul for the generic oracle; used by sweeps.
pub fn is_koszul_charge(n: i64, p: i64, q: i64) -> Result<bool> {
    if p <= 0 {
        return Ok(false);
    }
    Ok(is_koszul(&ModuleDescriptor::generic(n, p, q)?).verdict)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::betti::{betti_entry, betti_table, Window};

    fn desc(n: i64, p: i64, q: i64, l: i64, special: &[i64]) -> ModuleDescriptor {
        ModuleDescriptor::new(
            n,
            Charge::new(p, q),
            l,
            SpecialityOracle::at(special.iter().copied()),
        )
        .unwrap()
    }

    #[test]
    fn koszul_examples() {
        let v = is_koszul(&desc(5, 1, 4, 0, &[]));
        assert!(v.verdict);
        assert_eq!(v.conditions.len(), 4);
        assert!(!is_koszul(&desc(5, 1, 0, 0, &[])).verdict);
        assert!(!is_koszul(&desc(5, 1, 4, 1, &[])).verdict);
        assert!(!is_koszul(&desc(5, 1, 5, 0, &[1])).verdict);
        assert!(is_koszul(&desc(5, 1, 5, 0, &[])).verdict);
        // s_{-1} = -1, s_0 = -3, mu = 1
        assert!(!is_koszul(&desc(4, 2, 3, 0, &[])).verdict);
    }

    #[test]
    fn cokoszul_examples() {
        assert!(!is_cokoszul(&desc(5, 1, -1, 0, &[])).verdict);
        assert!(!is_cokoszul(&desc(5, 4, 1, 0, &[])).verdict);
        assert!(!is_cokoszul(&desc(5, 1, 3, 1, &[])).verdict);
        // s_{-1} = 5 - 4q <= 0 needs q >= 2; s_1 = 5 - q > 0 needs q <= 4
        assert!(is_cokoszul(&desc(5, 1, 2, 0, &[])).verdict);
        assert!(is_cokoszul(&desc(5, 1, 3, 0, &[])).verdict);
        assert!(!is_cokoszul(&desc(5, 1, 5, 0, &[])).verdict);
    }

    #[test]
    fn region_examples() {
        let r = koszul_region(5, 1, 6).unwrap();
        assert_eq!(r, vec![(1, 2), (1, 3), (1, 4), (1, 5)]);
        assert!(koszul_region(5, 3, 0).unwrap().is_empty());
        for (p, q) in koszul_region(6, 6, 40).unwrap() {
            assert!(is_koszul(&desc(6, p, q, 0, &[])).verdict);
        }
    }

    #[test]
    fn charge_form_agrees() {
        for n in [4, 5, 6, 9] {
            for p in 1..=30 {
                for q in -30..=30 {
                    let s_form = is_koszul(&desc(n, p, q, 0, &[])).verdict;
                    let pq = koszul_charge_form(n, &BigInt::from(p), &BigInt::from(q)).unwrap();
                    assert_eq!(s_form, pq, "n={n} ({p},{q})");
                }
            }
        }
    }

    #[test]
    fn boundary_slope_separates_region() {
        let slope = koszul_boundary_slope(5).unwrap();
        for (p, q) in [(1i64, 2i64), (1, 5), (3, 10)] {
            let line = slope.scale_int(&BigInt::from(p));
            let qq = QuadNum::integer(q, qfield::discriminant(5));
            assert_ne!(qq.cmp_value(&line).unwrap(), std::cmp::Ordering::Less);
        }
    }

    #[test]
    fn maximal_generation() {
        assert!(is_maximally_generated(&desc(5, 1, 5, 0, &[])));
        assert!(!is_maximally_generated(&desc(5, 1, 4, 0, &[])));
        assert!(is_maximally_generated(&desc(5, 2, 10, 0, &[])));
    }

    #[test]
    fn ulrich_examples() {
        let u = ulrich_data(&desc(5, 1, 4, 0, &[])).unwrap();
        assert_eq!((u.multiplicity, u.generators), (5.into(), 4.into()));
        assert!(u.bound_holds && !u.maximally_generated);
        let u = ulrich_data(&desc(5, 1, 5, 0, &[])).unwrap();
        assert!(u.maximally_generated);
        assert_eq!(
            ulrich_data(&desc(4, 2, 3, 0, &[])),
            Err(Error::NotKoszul("2".into(), "3".into()))
        );
        let u = ulrich_data(&desc(4, 2, 5, 0, &[])).unwrap();
        assert_eq!((u.multiplicity, u.generators), (8.into(), 5.into()));
    }

    #[test]
    fn koszul_tables_are_diagonal() {
        for n in [4, 5, 7] {
            for (p, q) in koszul_region(n, 4, 30).unwrap() {
                let d = desc(n, p, q, 0, &[]);
                let t = betti_table(&d, Window::new(-2, 27));
                for (i, j, _) in t.entries() {
                    if (0..=25).contains(&i) {
                        assert_eq!(i, j, "n={n} ({p},{q})");
                    }
                }
                for i in 0..=25 {
                    assert!(betti_entry(&d, i, i).is_positive());
                }
            }
        }
    }

    #[test]
    fn cokoszul_tables_are_diagonal() {
        for n in [4, 5, 6] {
            for p in 1..=4i64 {
                for q in -10..=40i64 {
                    let d = desc(n, p, q, 0, &[]);
                    if !is_cokoszul(&d).verdict {
                        continue;
                    }
                    let t = betti_table(&d, Window::new(-27, 2));
                    for (i, j, _) in t.entries() {
                        if (-25..=0).contains(&i) {
                            assert_eq!(i, j, "n={n} ({p},{q})");
                        }
                    }
                    for i in -25..=0 {
                        assert!(betti_entry(&d, i, i).is_positive());
                    }
                }
            }
        }
    }

    #[test]
    fn zero_s1_respects_speciality() {
        let d = desc(5, 2, 10, 0, &[1]);
        let v = is_koszul(&d);
        assert!(!v.verdict);
        assert!(!v.conditions[0].satisfied);
        assert!(v.conditions[0].value.contains("special"));
    }
}
