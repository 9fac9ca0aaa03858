//! Acceptance gate: one PASS/FAIL line per criterion, then a single
//! assertion that every criterion passed.

use std::process::Command;
use std::time::{Duration, Instant};

use ellbetti::betti::{betti_entry, betti_table, ModuleDescriptor, Window};
use ellbetti::charge::Charge;
use ellbetti::kbundle::{self, SSeqSpec, Side};
use ellbetti::minell::{self, MinellInput};
use ellbetti::qfield::{self, QuadNum};
use ellbetti::{koszul, oracle, series};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Verdict = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {{
        let holds: bool = $cond;
        if !holds {
            return Err(format!($($fmt)+));
        }
    }};
}

struct Criterion {
    id: u32,
    name: &'static str,
    budget: Option<Duration>,
    run: fn() -> Verdict,
}

fn big(xs: &[i64]) -> Vec<BigInt> {
    xs.iter().map(|&x| BigInt::from(x)).collect()
}

/// Printed layout: column `i`, row `k` holds `β_{i,i+k}`.
fn printed(m: &minell::MinellModule, i: i64, rows: i64) -> Vec<BigInt> {
    (0..rows).map(|k| m.entry(i, i + k)).collect()
}

fn golden_tables() -> Verdict {
    let bin = env!("CARGO_BIN_EXE_ellbetti");
    let status = Command::new(bin)
        .args(["verify", "--only", "tables"])
        .output()
        .map_err(|e| e.to_string())?;
    ensure!(status.status.success(), "verify --only tables exited {:?}", status.status.code());

    // Ẽ8 (n = 1): rows 0..=5, columns i = 0, 1
    for (r, d) in [(1i64, 0i64), (2, 0), (3, 1), (5, 2)] {
        let m = MinellInput::new(1, Charge::new(r, d), false, 0).reduce().map_err(|e| e.to_string())?;
        ensure!(printed(&m, 0, 6) == big(&[0, r, r - d, d, 0, 0]), "Ẽ8 table generic ({r},{d}) i=0");
        ensure!(printed(&m, 1, 6) == big(&[0, 0, 0, r, r - d, d]), "Ẽ8 table generic ({r},{d}) i=1");
        let inv = m.invariants().map_err(|e| e.to_string())?;
        ensure!(
            (inv.multiplicity, inv.generators, inv.rank) == (BigInt::from(2 * r), BigInt::from(2 * r), BigInt::from(r)),
            "Ẽ8 invariants generic ({r},{d})"
        );
        if d == 0 {
            let m = MinellInput::new(1, Charge::new(r, 0), true, 0).reduce().map_err(|e| e.to_string())?;
            ensure!(printed(&m, 0, 6) == big(&[1, r, r, 1, 0, 0]), "Ẽ8 table Atiyah r={r} i=0");
            ensure!(printed(&m, 1, 6) == big(&[0, 0, 1, r, r, 1]), "Ẽ8 table Atiyah r={r} i=1");
            let inv = m.invariants().map_err(|e| e.to_string())?;
            let s = r + 1;
            ensure!(
                (inv.multiplicity, inv.generators, inv.rank) == (BigInt::from(2 * s), BigInt::from(2 * s), BigInt::from(s)),
                "Ẽ8 invariants Atiyah r={r}"
            );
        }
    }
    // Ẽ7 (n = 2): rows 0..=3
    for (r, d) in [(1i64, 0i64), (1, 1), (2, 3)] {
        let m = MinellInput::new(2, Charge::new(r, d), false, 0).reduce().map_err(|e| e.to_string())?;
        ensure!(printed(&m, 0, 4) == big(&[0, 2 * r - d, d, 0]), "Ẽ7 table generic ({r},{d}) i=0");
        ensure!(printed(&m, 1, 4) == big(&[0, 0, 2 * r - d, d]), "Ẽ7 table generic ({r},{d}) i=1");
        if d == 0 {
            let m = MinellInput::new(2, Charge::new(r, 0), true, 0).reduce().map_err(|e| e.to_string())?;
            ensure!(printed(&m, 0, 4) == big(&[1, 2 * r, 1, 0]), "Ẽ7 table Atiyah r={r} i=0");
            ensure!(printed(&m, 1, 4) == big(&[0, 1, 2 * r, 1]), "Ẽ7 table Atiyah r={r} i=1");
        }
    }
    Ok("Tables 1, 2, 3 exact".into())
}

fn recursion_vs_matrix_power() -> Verdict {
    let mut count = 0;
    for n in 4..=8 {
        for j in -50..=50 {
            let a = kbundle::k_charge(n, j).map_err(|e| e.to_string())?;
            let b = oracle::charge_by_matrix_power(n, j).map_err(|e| e.to_string())?;
            ensure!(a == b, "n={n} j={j}: {a} vs {b}");
            count += 1;
        }
    }
    Ok(format!("{count} charges"))
}

fn kj_identities() -> Verdict {
    for n in 4..=8 {
        for j in 1..=50 {
            let k = |i| kbundle::k_charge(n, i).unwrap();
            ensure!(k(j).degree == k(-j).degree, "deg K_{j} != deg K_-{j} (n={n})");
            ensure!(k(j + 1).rank == k(-j).rank, "rk K_{} != rk K_-{j} (n={n})", j + 1);
        }
    }
    Ok("n=4..8, 1<=j<=50".into())
}

fn koszul_sweep() -> Vec<(i64, i64, i64)> {
    let mut out = Vec::new();
    for n in 4..=6 {
        for (p, q) in koszul::koszul_region(n, 15, 75).unwrap() {
            out.push((n, p, q));
        }
    }
    out
}

fn master_identity() -> Verdict {
    let sweep = koszul_sweep();
    for &(n, p, q) in &sweep {
        let z = Charge::new(p, q);
        let s = series::poincare_koszul(n, &z).map_err(|e| e.to_string())?;
        let h = series::hilbert_koszul_module(n, &z).map_err(|e| e.to_string())?;
        let lhs = s.reflect().mul(&series::hilbert_r(n).unwrap());
        ensure!(lhs == h, "n={n} ({p},{q}): {lhs} vs {h}");
    }
    Ok(format!("{} Koszul charges", sweep.len()))
}

fn diagonal_law() -> Verdict {
    let sweep = koszul_sweep();
    for &(n, p, q) in &sweep {
        let s = series::poincare_koszul(n, &Charge::new(p, q)).unwrap();
        let coeffs = series::series_coeffs(&s, 25).map_err(|e| e.to_string())?;
        let desc = ModuleDescriptor::generic(n, p, q).unwrap();
        for i in 0..=25i64 {
            let beta = betti_entry(&desc, i, i);
            let minus_s = -kbundle::s_value(desc.sequence(), -i);
            ensure!(
                coeffs[i as usize] == beta && beta == minus_s,
                "n={n} ({p},{q}) i={i}"
            );
        }
    }
    Ok(format!("{} charges, i<=25", sweep.len()))
}

fn koszul_closure() -> Verdict {
    let sweep = koszul_sweep();
    for &(n, p, q) in &sweep {
        let desc = ModuleDescriptor::generic(n, p, q).unwrap();
        for (i, j, v) in betti_table(&desc, Window::new(-5, 30)).entries() {
            ensure!(!(0..=25).contains(&i) || i == j, "n={n} ({p},{q}): beta_({i},{j}) = {v}");
        }
    }
    Ok(format!("{} charges, window j in [-5, 30]", sweep.len()))
}

fn jump_uniqueness() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(20240611);
    let mut jumps = 0;
    for _ in 0..1000 {
        let n = rng.random_range(4..=8);
        let spec = SSeqSpec::new(n, rng.random_range(1..=50), rng.random_range(-50..=50)).unwrap();
        for side in [Side::Positive, Side::NonPositive] {
            let fast = kbundle::detect_jump(&spec, side).map_err(|e| e.to_string())?;
            let slow = oracle::naive_jump_scan(&spec, side, 512).map_err(|e| e.to_string())?;
            ensure!(slow.sign_events <= 1, "{spec:?} {side:?}: {} sign changes", slow.sign_events);
            ensure!(
                (fast.exists, fast.bracket, fast.eventual_sign, fast.sign_events)
                    == (slow.exists, slow.bracket, slow.eventual_sign, slow.sign_events),
                "{spec:?} {side:?}: {fast:?} vs {slow:?}"
            );
            jumps += usize::from(fast.exists);
        }
    }
    Ok(format!("1000 charges, {jumps} one-sided jumps"))
}

fn growth() -> Verdict {
    let desc = ModuleDescriptor::generic(4, 2, 5).unwrap();
    ensure!(koszul::is_koszul(&desc).verdict, "(2,5) should be Koszul for n=4");
    let b: Vec<BigInt> = (0..=40).map(|i| betti_entry(&desc, i, i)).collect();
    let tail_linear = (10..=40usize).all(|i| {
        let second: BigInt = &b[i] - &b[i - 1] * 2 + &b[i - 2];
        second.is_zero()
    });
    ensure!(tail_linear, "n=4 second difference not eventually zero");

    let desc = ModuleDescriptor::generic(5, 1, 4).unwrap();
    let b: Vec<BigInt> = (0..=41).map(|i| betti_entry(&desc, i, i)).collect();
    for i in 1..41 {
        ensure!(b[i + 1] == &b[i] * 3 - &b[i - 1], "n=5 recursion fails at i={i}");
    }
    let mu = (3.0 + 5f64.sqrt()) / 2.0;
    let ratio = b[40].to_f64().unwrap() / b[39].to_f64().unwrap();
    ensure!((ratio - mu).abs() < 1e-6, "ratio {ratio} vs mu {mu}");
    Ok(format!("n=5 ratio error {:.1e}", (ratio - mu).abs()))
}

fn minell_structure() -> Verdict {
    for n in [1i64, 2] {
        let order = if n == 1 { 6 } else { 4 };
        for r in -20..=20i64 {
            for d in -20..=20i64 {
                let z = Charge::new(r, d);
                if z.is_zero() {
                    continue;
                }
                let size = minell::orbit_size(n, &z).unwrap();
                ensure!(order % size == 0, "n={n} ({r},{d}) orbit size {size}");
                let red = minell::fundamental_domain_reduce(n, &z).map_err(|e| e.to_string())?;
                ensure!(minell::in_fundamental_domain(n, &red.reduced), "n={n} ({r},{d})");
                let again = minell::fundamental_domain_reduce(n, &red.reduced).unwrap();
                ensure!(again.power == 0 && again.reduced == red.reduced, "idempotence n={n} ({r},{d})");
            }
        }
        let per = 4 - n;
        for (r, d, atiyah) in [(3i64, 1i64, false), (4, 0, true), (5, 2, false)] {
            let m = MinellInput::new(n, Charge::new(r, d), atiyah, 0).reduce().unwrap();
            let t = m.table(Window::new(-6, 5));
            for i in -5..5 {
                for j in -6..=5 {
                    ensure!(t.get(i + 1, j) == m.entry(i, j - per), "periodicity n={n} ({i},{j})");
                }
            }
        }
    }
    Ok("|r|,|d|<=20; 10x12 periodicity window".into())
}

fn minell_generation() -> Verdict {
    let mut count = 0;
    for n in [1i64, 2] {
        for r in 1..=10i64 {
            for d in 0..n * r {
                for atiyah in [false, true] {
                    if atiyah && d != 0 {
                        continue;
                    }
                    let m = MinellInput::new(n, Charge::new(r, d), atiyah, 0).reduce().unwrap();
                    let c = series::rank_multiplicity_minell(&m.beta_row().polynomial())
                        .map_err(|e| e.to_string())?;
                    ensure!(
                        c.generators == c.multiplicity && c.multiplicity == &c.rank * 2,
                        "n={n} ({r},{d}) atiyah={atiyah}: {c:?}"
                    );
                    count += 1;
                }
            }
        }
    }
    Ok(format!("{count} modules"))
}

fn qfield_soundness() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let mut decided = 0;
    for _ in 0..10_000 {
        let n = rng.random_range(5..=30);
        let mut part = || {
            BigRational::new(
                BigInt::from(rng.random_range(-1_000_000i64..=1_000_000)),
                BigInt::from(rng.random_range(1i64..=1000)),
            )
        };
        let x = QuadNum::new(part(), part(), qfield::discriminant(n));
        match oracle::interval_sign(&x, 200) {
            Some(s) => {
                ensure!(s == x.sign(), "{x}: exact {:?} interval {s:?}", x.sign());
                decided += 1;
            }
            None => ensure!(x.is_zero(), "{x}: interval undecided"),
        }
    }
    for n in 4..=12 {
        let mu = qfield::mu(n).unwrap();
        let one = QuadNum::one(mu.discriminant().clone());
        let v = mu
            .mul(&mu)
            .unwrap()
            .sub(&mu.scale_int(&BigInt::from(n - 2)))
            .unwrap()
            .add(&one)
            .unwrap();
        ensure!(v.is_zero(), "mu({n}) not a root");
    }
    Ok(format!("{decided} signs agree; mu roots n=4..12"))
}

#[test]
fn acceptance() {
    let criteria = [
        Criterion { id: 1, name: "golden tables", budget: Some(Duration::from_secs(1)), run: golden_tables },
        Criterion { id: 2, name: "recursion equals matrix power", budget: Some(Duration::from_secs(1)), run: recursion_vs_matrix_power },
        Criterion { id: 3, name: "K_j identities", budget: None, run: kj_identities },
        Criterion { id: 4, name: "Koszul master identity", budget: Some(Duration::from_secs(5)), run: master_identity },
        Criterion { id: 5, name: "diagonal law", budget: None, run: diagonal_law },
        Criterion { id: 6, name: "Koszul closure", budget: None, run: koszul_closure },
        Criterion { id: 7, name: "jump uniqueness and detector equivalence", budget: Some(Duration::from_secs(5)), run: jump_uniqueness },
        Criterion { id: 8, name: "growth", budget: None, run: growth },
        Criterion { id: 9, name: "minell structure", budget: None, run: minell_structure },
        Criterion { id: 10, name: "minell maximal generation", budget: None, run: minell_generation },
        Criterion { id: 11, name: "qfield soundness", budget: None, run: qfield_soundness },
    ];
    let mut failed = Vec::new();
    for c in &criteria {
        let start = Instant::now();
        let mut result = (c.run)();
        let elapsed = start.elapsed();
        if let (Ok(_), Some(budget)) = (&result, c.budget) {
            if elapsed > budget {
                result = Err(format!("took {elapsed:?}, budget {budget:?}"));
            }
        }
        match &result {
            Ok(detail) => println!("PASS [{:>2}] {} ({:.3}s): {detail}", c.id, c.name, elapsed.as_secs_f64()),
            Err(why) => {
                println!("FAIL [{:>2}] {} ({:.3}s): {why}", c.id, c.name, elapsed.as_secs_f64());
                failed.push(c.id);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
