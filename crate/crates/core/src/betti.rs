//! Stable graded Betti tables of MCM modules over the cone of an elliptic
//! normal curve of degree `n >= 4`.
//!
//! For `M = Φ(F[l])` with `F` a bundle of charge `(p, q)`, every Betti number
//! is a cohomology dimension of `F^∨ ⊗ K_{−j}`, whose degree is `s_{−j}`:
//!
//! | `j`      | `i − j = l − 1` | `i − j = l` | `i − j = l + 1` |
//! |----------|-----------------|-------------|-----------------|
//! | `j >= 0` | `h⁰`            | `h¹`        |                 |
//! | `j < 0`  |                 | `h⁰`        | `h¹`            |
//!
//! so all entries sit on the lines `U_l` (`j = i − l + 1`), `D_l`
//! (`j = i − l`) and `B_l` (`j = i − l − 1`).

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::charge::Charge;
use crate::cohom::{cohomology_dims, SpecialityOracle};
use crate::error::{Error, Result};
use crate::kbundle::{self, JumpReport, SSeqSpec, Side};
use crate::qfield::{self, QuadNum};

/// Numerical stand-in for an indecomposable object `F[l]`, `F` a bundle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleDescriptor {
    seq: SSeqSpec,
    charge: Charge,
    shift: i64,
    speciality: SpecialityOracle,
}

impl ModuleDescriptor {
    pub fn new(n: i64, charge: Charge, shift: i64, speciality: SpecialityOracle) -> Result<Self> {
        let seq = SSeqSpec::from_charge(n, &charge)?;
        for j in speciality.positions() {
            let s = kbundle::s_value(&seq, j);
            if !s.is_zero() {
                return Err(Error::InvalidSpeciality(format!(
                    "{s} at position {j}"
                )));
            }
        }
        Ok(ModuleDescriptor {
            seq,
            charge,
            shift,
            speciality,
        })
    }

    /// Generic bundle, no cohomological shift.
    pub fn generic(n: i64, p: i64, q: i64) -> Result<Self> {
        ModuleDescriptor::new(n, Charge::new(p, q), 0, SpecialityOracle::generic())
    }

    pub fn n(&self) -> i64 {
        self.seq.n()
    }

    pub fn charge(&self) -> &Charge {
        &self.charge
    }

    pub fn shift(&self) -> i64 {
        self.shift
    }

    pub fn speciality(&self) -> &SpecialityOracle {
        &self.speciality
    }

    pub fn sequence(&self) -> &SSeqSpec {
        &self.seq
    }

    /// Entry at `(i, j)` given `s_{−j}`.
    fn entry_from_degree(&self, i: i64, j: i64, s: &BigInt) -> BigInt {
        let special = self.speciality.is_special(-j);
        let dims = cohomology_dims(s, special).expect("speciality validated at construction");
        let offset = i - j - self.shift;
        match (j >= 0, offset) {
            (true, -1) | (false, 0) => dims.h0,
            (true, 0) | (false, 1) => dims.h1,
            _ => BigInt::zero(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Line {
    U,
    D,
    B,
}

impl Line {
    /// The line through `(i, j)` for shift `l`, if any.
    pub fn through(l: i64, i: i64, j: i64) -> Option<Line> {
        match i - l - j {
            -1 => Some(Line::U),
            0 => Some(Line::D),
            1 => Some(Line::B),
            _ => None,
        }
    }
}

impl fmt::Display for Line {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Line::U => "U",
            Line::D => "D",
            Line::B => "B",
        };
        f.write_str(s)
    }
}

/// Inclusive range of internal degrees; empty when `lo > hi`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(from = "(i64, i64)", into = "(i64, i64)")]
pub struct Window {
    pub lo: i64,
    pub hi: i64,
}

impl Window {
    pub fn new(lo: i64, hi: i64) -> Self {
        Window { lo, hi }
    }

    pub fn empty() -> Self {
        Window { lo: 0, hi: -1 }
    }

    pub fn is_empty(&self) -> bool {
        self.lo > self.hi
    }

    pub fn contains(&self, j: i64) -> bool {
        self.lo <= j && j <= self.hi
    }

    pub fn iter(&self) -> impl Iterator<Item = i64> {
        self.lo..=self.hi
    }
}

impl From<(i64, i64)> for Window {
    fn from((lo, hi): (i64, i64)) -> Self {
        Window { lo, hi }
    }
}

impl From<Window> for (i64, i64) {
    fn from(w: Window) -> Self {
        (w.lo, w.hi)
    }
}

/// Sparse table `(i, j) → β_{i,j}`; absent entries are zero.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BettiTable {
    window: Option<Window>,
    entries: BTreeMap<(i64, i64), BigInt>,
}

impl BettiTable {
    pub fn new(window: Window) -> Self {
        BettiTable {
            window: Some(window),
            entries: BTreeMap::new(),
        }
    }

    /// Rebuilds a table from stored entries, rejecting entries outside the
    /// window and nonpositive values.
    pub fn from_entries(
        window: Window,
        entries: impl IntoIterator<Item = (i64, i64, BigInt)>,
    ) -> Result<Self> {
        let mut table = BettiTable::new(window);
        for (i, j, v) in entries {
            if !window.contains(j) || !v.is_positive() {
                return Err(Error::InvalidInput(format!(
                    "entry ({i}, {j}) = {v} does not fit window [{}, {}]",
                    window.lo, window.hi
                )));
            }
            table.entries.insert((i, j), v);
        }
        Ok(table)
    }

    /// Records `value` at `(i, j)`; zeros are not stored.
    pub fn insert(&mut self, i: i64, j: i64, value: BigInt) {
        if let Some(w) = &self.window {
            assert!(w.contains(j), "entry j={j} outside the table window");
        }
        if value.is_positive() {
            self.entries.insert((i, j), value);
        } else {
            assert!(value.is_zero(), "Betti numbers are nonnegative");
            self.entries.remove(&(i, j));
        }
    }

    pub fn window(&self) -> Window {
        self.window.unwrap_or_else(Window::empty)
    }

    pub fn get(&self, i: i64, j: i64) -> BigInt {
        self.entries.get(&(i, j)).cloned().unwrap_or_default()
    }

    pub fn entries(&self) -> impl Iterator<Item = (i64, i64, &BigInt)> {
        self.entries.iter().map(|(&(i, j), v)| (i, j, v))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Smallest and largest homological degree carrying an entry.
    pub fn i_range(&self) -> Option<(i64, i64)> {
        let lo = self.entries.keys().map(|k| k.0).min()?;
        let hi = self.entries.keys().map(|k| k.0).max()?;
        Some((lo, hi))
    }

    /// Restriction to homological degrees `i_lo..=i_hi`.
    pub fn restrict_i(&self, i_lo: i64, i_hi: i64) -> BettiTable {
        BettiTable {
            window: self.window,
            entries: self
                .entries
                .iter()
                .filter(|((i, _), _)| (i_lo..=i_hi).contains(i))
                .map(|(k, v)| (*k, v.clone()))
                .collect(),
        }
    }
}

pub fn betti_entry(desc: &ModuleDescriptor, i: i64, j: i64) -> BigInt {
    if Line::through(desc.shift, i, j).is_none() {
        return BigInt::zero();
    }
    let s = kbundle::s_value(&desc.seq, -j);
    desc.entry_from_degree(i, j, &s)
}

/// All nonzero entries with internal degree in `window`.
pub fn betti_table(desc: &ModuleDescriptor, window: Window) -> BettiTable {
    let mut table = BettiTable::new(window);
    if window.is_empty() {
        return table;
    }
    // s_k for k = -hi ..= -lo
    let degrees = desc.seq.values(-window.hi, -window.lo);
    for (s, j) in degrees.iter().zip((window.lo..=window.hi).rev()) {
        let l = desc.shift;
        let candidates = if j >= 0 {
            [j + l - 1, j + l]
        } else {
            [j + l, j + l + 1]
        };
        for i in candidates {
            table.insert(i, j, desc.entry_from_degree(i, j, s));
        }
    }
    table
}

#[derive(Debug, Clone, PartialEq)]
pub enum GrowthClass {
    Linear,
    Exponential { rate: QuadNum },
}

pub fn growth_class(n: i64) -> Result<GrowthClass> {
    kbundle::require_cone_degree(n)?;
    if n == 4 {
        Ok(GrowthClass::Linear)
    } else {
        Ok(GrowthClass::Exponential {
            rate: qfield::mu(n)?,
        })
    }
}

/// Behaviour of the table as `i → ±∞`.
#[derive(Debug, Clone, PartialEq)]
pub struct TailReport {
    /// Line carrying the entries far out in this direction.
    pub line: Line,
    /// Sign change of the governing half of `s`; a change moves the entries
    /// from one line to the neighbouring one.
    pub jump: JumpReport,
}

/// A special degree-zero twist: two entries equal to one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DoublePoint {
    pub position: i64,
    pub cells: [(i64, i64); 2],
}

#[derive(Debug, Clone, PartialEq)]
pub struct ShapeReport {
    /// `i → +∞`, governed by `s_j` for `j <= 0`.
    pub upper: TailReport,
    /// `i → −∞`, governed by `s_j` for `j >= 1`.
    pub lower: TailReport,
    pub double_points: Vec<DoublePoint>,
    /// Nonzero entries outside the half-lines `U_l ∩ {i >= −1}` and
    /// `B_l ∩ {i <= 0}`; only possible for `l ≠ 0`.
    pub off_half_line: Vec<(i64, i64, BigInt, Line)>,
    pub growth: GrowthClass,
}

pub fn shape_report(desc: &ModuleDescriptor) -> Result<ShapeReport> {
    let l = desc.shift;
    let upper_jump = kbundle::detect_jump(&desc.seq, Side::NonPositive)?;
    let lower_jump = kbundle::detect_jump(&desc.seq, Side::Positive)?;
    let upper = TailReport {
        line: if upper_jump.eventual_sign > 0 {
            Line::U
        } else {
            Line::D
        },
        jump: upper_jump,
    };
    let lower = TailReport {
        line: if lower_jump.eventual_sign > 0 {
            Line::D
        } else {
            Line::B
        },
        jump: lower_jump,
    };
    let double_points = desc
        .speciality
        .positions()
        .map(|k| {
            let j = -k;
            let cells = if j >= 0 {
                [(j + l - 1, j), (j + l, j)]
            } else {
                [(j + l, j), (j + l + 1, j)]
            };
            DoublePoint { position: k, cells }
        })
        .collect();
    let mut off_half_line = Vec::new();
    // U_l entries (j >= 0, i = j + l - 1) with i < -1
    for j in 0..(-l) {
        let v = betti_entry(desc, j + l - 1, j);
        if !v.is_zero() {
            off_half_line.push((j + l - 1, j, v, Line::U));
        }
    }
    // B_l entries (j < 0, i = j + l + 1) with i > 0
    for j in (-l)..0 {
        let v = betti_entry(desc, j + l + 1, j);
        if !v.is_zero() {
            off_half_line.push((j + l + 1, j, v, Line::B));
        }
    }
    Ok(ShapeReport {
        upper,
        lower,
        double_points,
        off_half_line,
        growth: growth_class(desc.n())?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kbundle::JumpBracket;

    fn int(x: i64) -> BigInt {
        BigInt::from(x)
    }

    #[test]
    fn entry_examples() {
        let d = ModuleDescriptor::generic(5, 1, 4).unwrap();
        assert_eq!(betti_entry(&d, 0, 0), int(4));
        assert_eq!(betti_entry(&d, 1, 1), int(11));
        assert_eq!(betti_entry(&d, 0, 1), int(0));
        assert_eq!(betti_entry(&d, 5, 2), int(0));
        // j < 0: i = j + l carries h0(s_{-j}), i = j + l + 1 carries h1
        assert_eq!(betti_entry(&d, -1, -1), int(1)); // s_1 = 1
        assert_eq!(betti_entry(&d, -1, -2), int(1)); // s_2 = -1
    }

    #[test]
    fn table_examples() {
        let d = ModuleDescriptor::generic(5, 1, 4).unwrap();
        let t = betti_table(&d, Window::new(0, 2));
        let got: Vec<_> = t.entries().map(|(i, j, v)| (i, j, v.clone())).collect();
        assert_eq!(got, vec![(0, 0, int(4)), (1, 1, int(11)), (2, 2, int(29))]);

        let special = ModuleDescriptor::new(5, Charge::new(1, 0), 0, SpecialityOracle::at([0]))
            .unwrap();
        let t = betti_table(&special, Window::new(0, 0));
        let got: Vec<_> = t.entries().map(|(i, j, v)| (i, j, v.clone())).collect();
        assert_eq!(got, vec![(-1, 0, int(1)), (0, 0, int(1))]);

        assert!(betti_table(&d, Window::empty()).is_empty());
    }

    #[test]
    fn table_agrees_with_entries() {
        for (n, p, q, l) in [(5, 1, 4, 0), (4, 2, -3, 1), (6, 3, 7, -2), (7, 1, 0, 3)] {
            let d = ModuleDescriptor::new(n, Charge::new(p, q), l, SpecialityOracle::generic())
                .unwrap();
            let t = betti_table(&d, Window::new(-12, 12));
            for j in -12..=12 {
                for i in -20..=20 {
                    assert_eq!(t.get(i, j), betti_entry(&d, i, j), "({i},{j})");
                }
            }
        }
    }

    #[test]
    fn rejects_bad_speciality() {
        let e = ModuleDescriptor::new(5, Charge::new(1, 4), 0, SpecialityOracle::at([0]));
        assert!(matches!(e, Err(Error::InvalidSpeciality(_))));
        assert!(ModuleDescriptor::generic(5, 0, 1).is_err());
        assert_eq!(
            ModuleDescriptor::generic(3, 1, 1),
            Err(Error::UnsupportedDegreeThree(3))
        );
    }

    #[test]
    fn shape_examples() {
        let d = ModuleDescriptor::generic(5, 1, 4).unwrap();
        let r = shape_report(&d).unwrap();
        assert_eq!(r.upper.line, Line::D);
        assert!(!r.upper.jump.exists);
        assert_eq!(r.lower.line, Line::B);
        assert_eq!(r.lower.jump.bracket, Some(JumpBracket::Between(1, 2)));
        assert!(r.double_points.is_empty());
        assert!(r.off_half_line.is_empty());

        let d = ModuleDescriptor::generic(5, 1, 0).unwrap();
        let r = shape_report(&d).unwrap();
        assert_eq!(r.upper.jump.bracket, Some(JumpBracket::AtZero(0)));

        let d = ModuleDescriptor::generic(4, 1, 1).unwrap();
        let r = shape_report(&d).unwrap();
        assert!(!r.lower.jump.exists);
        assert_eq!(r.growth, GrowthClass::Linear);

        let d = ModuleDescriptor::new(5, Charge::new(1, 0), 0, SpecialityOracle::at([0])).unwrap();
        let r = shape_report(&d).unwrap();
        assert_eq!(
            r.double_points,
            vec![DoublePoint {
                position: 0,
                cells: [(-1, 0), (0, 0)]
            }]
        );
    }

    #[test]
    fn shifted_tables_surface_half_line_violations() {
        let d = ModuleDescriptor::new(5, Charge::new(1, 4), 2, SpecialityOracle::generic()).unwrap();
        let r = shape_report(&d).unwrap();
        // B_2 entries at j = -2, -1 land at i = 1, 2
        assert!(r.off_half_line.iter().all(|e| e.3 == Line::B && e.0 > 0));
        assert!(!r.off_half_line.is_empty());
        let d = ModuleDescriptor::new(5, Charge::new(1, -6), -2, SpecialityOracle::generic()).unwrap();
        let r = shape_report(&d).unwrap();
        assert!(r.off_half_line.iter().all(|e| e.3 == Line::U && e.0 < -1));
    }

    #[test]
    fn growth_examples() {
        assert_eq!(growth_class(4).unwrap(), GrowthClass::Linear);
        assert_eq!(
            growth_class(5).unwrap(),
            GrowthClass::Exponential {
                rate: qfield::mu(5).unwrap()
            }
        );
        assert_eq!(growth_class(3), Err(Error::UnsupportedDegreeThree(3)));
    }

    #[test]
    fn line_discipline() {
        for (n, p, q, l) in [(5, 2, 3, 0), (6, 1, -5, 2), (4, 7, 30, -1)] {
            let d = ModuleDescriptor::new(n, Charge::new(p, q), l, SpecialityOracle::generic())
                .unwrap();
            for (i, j, _) in betti_table(&d, Window::new(-15, 15)).entries() {
                assert!(Line::through(l, i, j).is_some());
            }
        }
    }

    #[test]
    fn finitely_many_tables_per_charge() {
        // (1, 0) for n = 5: s_0 = 0 is the only zero, so two oracles are admissible
        use std::collections::HashSet;
        let mut seen = HashSet::new();
        for oracle in [SpecialityOracle::generic(), SpecialityOracle::at([0])] {
            let d = ModuleDescriptor::new(5, Charge::new(1, 0), 0, oracle).unwrap();
            let t = betti_table(&d, Window::new(-6, 6));
            seen.insert(format!("{:?}", t));
        }
        assert_eq!(seen.len(), 2);
    }
}
