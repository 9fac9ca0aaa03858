//! Cross-checks run by `ellbetti verify`: golden tables, oracle
//! equivalences and the structural identities.

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::betti::{betti_entry, betti_table, ModuleDescriptor, Window};
use crate::charge::Charge;
use crate::kbundle::{self, SSeqSpec, Side};
use crate::koszul;
use crate::minell::{self, MinellInput};
use crate::oracle;
use crate::qfield::{self, QuadNum};
use crate::series;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Check {
    Tables,
    Recursion,
    Identities,
    Master,
    Diagonal,
    Closure,
    Jumps,
    Growth,
    Minell,
    Generation,
    Qfield,
}

impl Check {
    pub const ALL: [Check; 11] = [
        Check::Tables,
        Check::Recursion,
        Check::Identities,
        Check::Master,
        Check::Diagonal,
        Check::Closure,
        Check::Jumps,
        Check::Growth,
        Check::Minell,
        Check::Generation,
        Check::Qfield,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Tables => "tables",
            Check::Recursion => "recursion",
            Check::Identities => "identities",
            Check::Master => "master",
            Check::Diagonal => "diagonal",
            Check::Closure => "closure",
            Check::Jumps => "jumps",
            Check::Growth => "growth",
            Check::Minell => "minell",
            Check::Generation => "generation",
            Check::Qfield => "qfield",
        }
    }

    pub fn from_name(name: &str) -> Option<Check> {
        Check::ALL.into_iter().find(|c| c.name() == name)
    }
}

#[derive(Debug, Clone)]
pub struct Outcome {
    pub name: String,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
}

type CheckResult = std::result::Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {{
        let holds: bool = $cond;
        if !holds {
            return Err(format!($($fmt)+));
        }
    }};
}

pub fn run(check: Check) -> Outcome {
    timed(check.name(), || match check {
        Check::Tables => tables(),
        Check::Recursion => recursion(),
        Check::Identities => identities(),
        Check::Master => master(),
        Check::Diagonal => diagonal(),
        Check::Closure => closure(),
        Check::Jumps => jumps(),
        Check::Growth => growth(),
        Check::Minell => minell_structure(),
        Check::Generation => generation(),
        Check::Qfield => qfield_soundness(),
    })
}

/// A check that always fails, for exercising the failure path.
pub fn injected_fault() -> Outcome {
    timed("injected", || Err("fault injected on request".into()))
}

fn timed(name: &str, f: impl FnOnce() -> CheckResult) -> Outcome {
    let start = Instant::now();
    let result = f();
    let elapsed = start.elapsed();
    let (passed, detail) = match result {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    };
    Outcome {
        name: name.to_string(),
        passed,
        detail,
        elapsed,
    }
}

fn err(e: crate::error::Error) -> String {
    e.to_string()
}

/// `β_{i,i+k}` for `k` in `0..rows`, the layout of the printed tables.
fn printed_column(m: &minell::MinellModule, i: i64, rows: i64) -> Vec<BigInt> {
    (0..rows).map(|k| m.entry(i, i + k)).collect()
}

fn big(xs: &[i64]) -> Vec<BigInt> {
    xs.iter().map(|&x| BigInt::from(x)).collect()
}

/// Columns `i = 0, 1` of the printed tables, rows `0..=2(4−n)−1`, as
/// functions of `(r, d)`.
fn golden_columns(n: i64, r: i64, d: i64, atiyah: bool) -> [Vec<BigInt>; 2] {
    match (n, atiyah) {
        (1, false) => [big(&[0, r, r - d, d, 0, 0]), big(&[0, 0, 0, r, r - d, d])],
        (1, true) => [big(&[1, r, r, 1, 0, 0]), big(&[0, 0, 1, r, r, 1])],
        (_, false) => [big(&[0, 2 * r - d, d, 0]), big(&[0, 0, 2 * r - d, d])],
        (_, true) => [big(&[1, 2 * r, 1, 0]), big(&[0, 1, 2 * r, 1])],
    }
}

fn tables() -> CheckResult {
    let mut compared = 0;
    let cases = [(1, [(1, 0), (2, 0), (3, 1), (5, 2)].as_slice()), (2, [(1, 0), (1, 1), (2, 3)].as_slice())];
    for (n, charges) in cases {
        for &(r, d) in charges {
            for atiyah in [false, true] {
                if atiyah && d != 0 {
                    continue;
                }
                let m = MinellInput::new(n, Charge::new(r, d), atiyah, 0)
                    .reduce()
                    .map_err(err)?;
                let rows = 2 * (4 - n);
                let golden = golden_columns(n, r, d, atiyah);
                for i in 0..2 {
                    let got = printed_column(&m, i, rows);
                    ensure!(
                        got == golden[i as usize],
                        "n={n} (r,d)=({r},{d}) atiyah={atiyah} column {i}: {got:?}"
                    );
                }
                let inv = m.invariants().map_err(err)?;
                let rank = if atiyah { r + 1 } else { r };
                ensure!(
                    inv.multiplicity == BigInt::from(2 * rank)
                        && inv.generators == BigInt::from(2 * rank)
                        && inv.rank == BigInt::from(rank),
                    "n={n} (r,d)=({r},{d}) atiyah={atiyah} invariants {inv:?}"
                );
                compared += 1;
            }
        }
    }
    Ok(format!("{compared} columns and invariant rows match"))
}

fn recursion() -> CheckResult {
    for n in 4..=8 {
        let rows = kbundle::k_charges(n, -50, 50).map_err(err)?;
        for (j, z) in rows {
            let m = oracle::charge_by_matrix_power(n, j).map_err(err)?;
            ensure!(z == m, "n={n} j={j}: recursion {z} vs matrix power {m}");
        }
    }
    Ok("n=4..8, |j|<=50".into())
}

fn identities() -> CheckResult {
    for n in 4..=8 {
        for j in 1..=50 {
            let (kp, km) = (
                kbundle::k_charge(n, j).map_err(err)?,
                kbundle::k_charge(n, -j).map_err(err)?,
            );
            ensure!(kp.degree == km.degree, "n={n} j={j}: deg K_j != deg K_-j");
            let next = kbundle::k_charge(n, j + 1).map_err(err)?;
            ensure!(next.rank == km.rank, "n={n} j={j}: rk K_(j+1) != rk K_-j");
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x1d);
    for _ in 0..100 {
        let n = rng.random_range(4..=9);
        let spec = SSeqSpec::new(n, rng.random_range(1..=30), rng.random_range(-60..=60))
            .map_err(err)?;
        for side in [Side::Positive, Side::NonPositive] {
            let cf = kbundle::closed_form(&spec, side).map_err(err)?;
            for (j, s) in spec.side_values(side).take(25) {
                ensure!(cf.eval(j).map_err(err)? == s, "closed form n={n} j={j}");
            }
        }
    }
    Ok("K_j symmetry for 1<=j<=50, closed forms on 100 sequences".into())
}

/// Koszul charges `p <= 15`, `q <= 75` for `n` in `4..=6`.
pub fn koszul_sweep() -> Vec<(i64, i64, i64)> {
    let mut out = Vec::new();
    for n in 4..=6 {
        for (p, q) in koszul::koszul_region(n, 15, 75).expect("cone degree") {
            out.push((n, p, q));
        }
    }
    out
}

fn master() -> CheckResult {
    let sweep = koszul_sweep();
    for &(n, p, q) in &sweep {
        let z = Charge::new(p, q);
        let s = series::poincare_koszul(n, &z).map_err(err)?;
        let h = series::hilbert_koszul_module(n, &z).map_err(err)?;
        let lhs = s.reflect().mul(&series::hilbert_r(n).map_err(err)?);
        ensure!(lhs == h, "n={n} ({p},{q}): S(-t)H_R = {lhs}, H_M = {h}");
    }
    Ok(format!("{} Koszul charges", sweep.len()))
}

fn diagonal() -> CheckResult {
    let sweep = koszul_sweep();
    for &(n, p, q) in &sweep {
        let z = Charge::new(p, q);
        let coeffs = series::series_coeffs(&series::poincare_koszul(n, &z).map_err(err)?, 25)
            .map_err(err)?;
        let desc = ModuleDescriptor::generic(n, p, q).map_err(err)?;
        let s = desc.sequence().values(-25, 0);
        for i in 0..=25usize {
            let beta = betti_entry(&desc, i as i64, i as i64);
            let minus_s = -&s[25 - i];
            ensure!(
                coeffs[i] == beta && beta == minus_s,
                "n={n} ({p},{q}) i={i}: series {} beta {beta} -s {minus_s}",
                coeffs[i]
            );
        }
    }
    Ok(format!("{} Koszul charges, i<=25", sweep.len()))
}

fn closure() -> CheckResult {
    let sweep = koszul_sweep();
    for &(n, p, q) in &sweep {
        let desc = ModuleDescriptor::generic(n, p, q).map_err(err)?;
        let table = betti_table(&desc, Window::new(-2, 27));
        for (i, j, v) in table.entries() {
            ensure!(
                !(0..=25).contains(&i) || i == j,
                "n={n} ({p},{q}): beta_({i},{j}) = {v}"
            );
        }
    }
    Ok(format!("{} Koszul charges, 0<=i<=25", sweep.len()))
}

fn jumps() -> CheckResult {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut jumped = 0;
    for _ in 0..1000 {
        let n = rng.random_range(4..=8);
        let spec = SSeqSpec::new(n, rng.random_range(1..=50), rng.random_range(-50..=50))
            .map_err(err)?;
        for side in [Side::Positive, Side::NonPositive] {
            let fast = kbundle::detect_jump(&spec, side).map_err(err)?;
            let slow = oracle::naive_jump_scan(&spec, side, 512).map_err(err)?;
            ensure!(fast.sign_events <= 1, "{spec:?} {side:?}: {} sign changes", fast.sign_events);
            ensure!(
                fast.bracket == slow.bracket
                    && fast.eventual_sign == slow.eventual_sign
                    && fast.sign_events == slow.sign_events,
                "{spec:?} {side:?}: detector {fast:?} vs scan {slow:?}"
            );
            jumped += usize::from(fast.exists);
        }
    }
    Ok(format!("1000 charges, {jumped} sides with a jump"))
}

fn growth() -> CheckResult {
    for (p, q) in koszul::koszul_region(4, 6, 24).map_err(err)? {
        let desc = ModuleDescriptor::generic(4, p, q).map_err(err)?;
        let b: Vec<BigInt> = (0..=40).map(|i| betti_entry(&desc, i, i)).collect();
        for i in 2..=40 {
            let second: BigInt = &b[i] - &b[i - 1] * 2 + &b[i - 2];
            ensure!(second.is_zero(), "n=4 ({p},{q}) i={i}: second difference {second}");
        }
    }
    let mu = qfield::mu(5).map_err(err)?.approx_f64();
    for (p, q) in koszul::koszul_region(5, 6, 30).map_err(err)? {
        let desc = ModuleDescriptor::generic(5, p, q).map_err(err)?;
        let b: Vec<BigInt> = (0..=41).map(|i| betti_entry(&desc, i, i)).collect();
        for i in 1..41 {
            ensure!(
                b[i + 1] == 3 * &b[i] - &b[i - 1],
                "n=5 ({p},{q}) i={i}: recursion fails"
            );
        }
        let ratio = b[41].to_f64().unwrap() / b[40].to_f64().unwrap();
        ensure!((ratio - mu).abs() < 1e-6, "n=5 ({p},{q}): ratio {ratio} vs mu {mu}");
    }
    Ok("n=4 linear, n=5 ratio within 1e-6 of mu by i=40".into())
}

fn minell_structure() -> CheckResult {
    for n in [1, 2] {
        let order = minell::orbit_order(n).map_err(err)?;
        for r in -20..=20i64 {
            for d in -20..=20i64 {
                let z = Charge::new(r, d);
                if z.is_zero() {
                    continue;
                }
                let size = minell::orbit_size(n, &z).map_err(err)?;
                ensure!(order % size == 0, "n={n} ({r},{d}): orbit size {size}");
                let red = minell::fundamental_domain_reduce(n, &z).map_err(err)?;
                let again = minell::fundamental_domain_reduce(n, &red.reduced).map_err(err)?;
                ensure!(
                    again.power == 0 && again.reduced == red.reduced,
                    "n={n} ({r},{d}): reduction not idempotent"
                );
            }
        }
        for (r, d, atiyah, l) in [(3, 1, false, 0), (2, 0, true, 1), (4, 3, false, -1)] {
            let m = MinellInput::new(n, Charge::new(r, d), atiyah, l)
                .reduce()
                .map_err(err)?;
            let per = m.period();
            let table = m.table(Window::new(-6, 5));
            for i in -5..5 {
                for j in -6..=5 {
                    ensure!(
                        table.get(i + 1, j) == m.entry(i, j - per),
                        "n={n} ({r},{d}) periodicity at ({i},{j})"
                    );
                }
            }
        }
    }
    Ok("orbits for |r|,|d|<=20, periodicity on a 10x12 window".into())
}

fn generation() -> CheckResult {
    let mut count = 0;
    for n in [1, 2] {
        for r in 1..=10i64 {
            for d in 0..(n * r) {
                for atiyah in [false, true] {
                    if atiyah && d != 0 {
                        continue;
                    }
                    let m = MinellInput::new(n, Charge::new(r, d), atiyah, 0)
                        .reduce()
                        .map_err(err)?;
                    let c = series::rank_multiplicity_minell(&m.beta_row().polynomial())
                        .map_err(err)?;
                    ensure!(
                        c.generators == c.multiplicity && c.multiplicity == &c.rank * 2,
                        "n={n} ({r},{d}) atiyah={atiyah}: {c:?}"
                    );
                    count += 1;
                }
            }
        }
    }
    Ok(format!("{count} fundamental-domain modules"))
}

fn qfield_soundness() -> CheckResult {
    use num_rational::BigRational;
    let mut rng = ChaCha8Rng::seed_from_u64(0xbeef);
    for _ in 0..10_000 {
        let n = rng.random_range(5..=40);
        let mut part = || {
            BigRational::new(
                BigInt::from(rng.random_range(-10_000i64..=10_000)),
                BigInt::from(rng.random_range(1i64..=100)),
            )
        };
        let x = QuadNum::new(part(), part(), qfield::discriminant(n));
        let exact = x.sign();
        match oracle::interval_sign(&x, 200) {
            Some(s) => ensure!(s == exact, "{x}: exact {exact:?}, interval {s:?}"),
            None => ensure!(x.is_zero(), "{x}: interval inconclusive"),
        }
    }
    for n in 4..=12 {
        let mu = qfield::mu(n).map_err(err)?;
        let d = mu.discriminant().clone();
        let value = mu
            .mul(&mu)
            .and_then(|m2| m2.sub(&mu.scale_int(&BigInt::from(n - 2))))
            .and_then(|v| v.add(&QuadNum::one(d)))
            .map_err(err)?;
        ensure!(value.is_zero(), "mu({n}) is not a root");
        let excess = mu.sub(&QuadNum::one(mu.discriminant().clone())).map_err(err)?;
        ensure!(n == 4 || excess.sign().as_i8() > 0, "mu({n}) <= 1");
    }
    Ok("10^4 random signs, mu roots for n=4..12".into())
}
