//! Text, CSV and JSON renderings of tables, charge lists and series.

use std::fmt::Write as _;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::betti::{BettiTable, ModuleDescriptor, Window};
use crate::charge::Charge;
use crate::error::{Error, Result};
use crate::minell::MinellModule;
use crate::series::{RationalFunction, SeriesReport};

/// What a rendered table was computed from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "ring", rename_all = "snake_case")]
pub enum TableDescriptor {
    Cone {
        n: i64,
        #[serde(with = "crate::json::bigint")]
        rank: BigInt,
        #[serde(with = "crate::json::bigint")]
        degree: BigInt,
        shift: i64,
        special: Vec<i64>,
    },
    Minell {
        n: i64,
        #[serde(with = "crate::json::bigint")]
        r: BigInt,
        #[serde(with = "crate::json::bigint")]
        d: BigInt,
        atiyah: bool,
        shift: i64,
    },
}

impl From<&ModuleDescriptor> for TableDescriptor {
    fn from(d: &ModuleDescriptor) -> Self {
        TableDescriptor::Cone {
            n: d.n(),
            rank: d.charge().rank.clone(),
            degree: d.charge().degree.clone(),
            shift: d.shift(),
            special: d.speciality().positions().collect(),
        }
    }
}

impl From<&MinellModule> for TableDescriptor {
    fn from(m: &MinellModule) -> Self {
        TableDescriptor::Minell {
            n: m.n,
            r: m.r.clone(),
            d: m.d.clone(),
            atiyah: m.atiyah,
            shift: m.shift,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableDocument {
    pub descriptor: TableDescriptor,
    pub window: Window,
    #[serde(with = "crate::json::triples")]
    pub entries: Vec<(i64, i64, BigInt)>,
}

impl TableDocument {
    pub fn new(descriptor: TableDescriptor, table: &BettiTable) -> Self {
        TableDocument {
            descriptor,
            window: table.window(),
            entries: table.entries().map(|(i, j, v)| (i, j, v.clone())).collect(),
        }
    }

    pub fn table(&self) -> Result<BettiTable> {
        BettiTable::from_entries(self.window, self.entries.iter().cloned())
    }
}

pub fn to_json<T: Serialize>(x: &T) -> String {
    serde_json::to_string_pretty(x).expect("plain data serializes")
}

pub fn from_json<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::InvalidInput(e.to_string()))
}

/// Betti diagram with row `k` holding `β_{i,i+k}` in column `i`; zeros are
/// printed as `.`.
pub fn betti_diagram(table: &BettiTable) -> String {
    betti_diagram_rows(table, None, None)
}

/// Same as [`betti_diagram`] with the columns `i` and rows `k` given
/// explicitly instead of fitted to the entries.
pub fn betti_diagram_rows(
    table: &BettiTable,
    columns: Option<(i64, i64)>,
    rows: Option<(i64, i64)>,
) -> String {
    let Some((i_lo, i_hi)) = columns.or_else(|| table.i_range()) else {
        return "(no entries in window)\n".to_string();
    };
    let ks: Vec<i64> = table.entries().map(|(i, j, _)| j - i).collect();
    let Some((k_lo, k_hi)) = rows.or_else(|| Some((*ks.iter().min()?, *ks.iter().max()?))) else {
        return "(no entries in window)\n".to_string();
    };
    let cell = |i: i64, k: i64| {
        let v = table.get(i, i + k);
        if v == BigInt::ZERO {
            ".".to_string()
        } else {
            v.to_string()
        }
    };
    let width = (i_lo..=i_hi)
        .flat_map(|i| (k_lo..=k_hi).map(move |k| (i, k)))
        .map(|(i, k)| cell(i, k).len())
        .chain((i_lo..=i_hi).map(|i| i.to_string().len()))
        .max()
        .unwrap_or(1);
    let label = [k_lo, k_hi].iter().map(|k| format!("{k}:").len()).max().unwrap().max(2);
    let mut out = String::new();
    write!(out, "{:>label$}", "").unwrap();
    for i in i_lo..=i_hi {
        write!(out, " {:>width$}", i).unwrap();
    }
    out.push('\n');
    for k in k_lo..=k_hi {
        write!(out, "{:>label$}", format!("{k}:")).unwrap();
        for i in i_lo..=i_hi {
            write!(out, " {:>width$}", cell(i, k)).unwrap();
        }
        out.push('\n');
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChargeRow {
    pub j: i64,
    #[serde(with = "crate::json::bigint")]
    pub rank: BigInt,
    #[serde(with = "crate::json::bigint")]
    pub degree: BigInt,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChargeList {
    pub n: i64,
    pub charges: Vec<ChargeRow>,
}

impl ChargeList {
    pub fn new(n: i64, rows: &[(i64, Charge)]) -> Self {
        ChargeList {
            n,
            charges: rows
                .iter()
                .map(|(j, z)| ChargeRow {
                    j: *j,
                    rank: z.rank.clone(),
                    degree: z.degree.clone(),
                })
                .collect(),
        }
    }

    pub fn text(&self) -> String {
        let rows: Vec<[String; 3]> = self
            .charges
            .iter()
            .map(|c| [c.j.to_string(), c.rank.to_string(), c.degree.to_string()])
            .collect();
        let header = ["j", "r_j", "d_j"];
        let widths: Vec<usize> = (0..3)
            .map(|c| rows.iter().map(|r| r[c].len()).chain([header[c].len()]).max().unwrap())
            .collect();
        let mut out = String::new();
        let line = |cols: [&str; 3]| {
            format!(
                "{:>w0$}  {:>w1$}  {:>w2$}\n",
                cols[0],
                cols[1],
                cols[2],
                w0 = widths[0],
                w1 = widths[1],
                w2 = widths[2]
            )
        };
        out.push_str(&line(header));
        for r in &rows {
            out.push_str(&line([&r[0], &r[1], &r[2]]));
        }
        out
    }

    pub fn csv(&self) -> String {
        let mut out = String::from("j,rank,degree\n");
        for c in &self.charges {
            writeln!(out, "{},{},{}", c.j, c.rank, c.degree).unwrap();
        }
        out
    }
}

pub fn series_text(name: &str, x: &RationalFunction, report: &SeriesReport) -> String {
    let coeffs: Vec<String> = report.coefficients.iter().map(|c| c.to_string()).collect();
    let mut out = String::new();
    if report.offset == 0 {
        writeln!(out, "{name}(t) = {x}").unwrap();
    } else {
        writeln!(out, "{name}(t) = t^{} * {x}", report.offset).unwrap();
    }
    writeln!(out, "coefficients: [{}]", coeffs.join(", ")).unwrap();
    out
}

pub fn region_csv(points: &[(i64, i64)]) -> String {
    let mut out = String::from("p,q\n");
    for (p, q) in points {
        writeln!(out, "{p},{q}").unwrap();
    }
    out
}
