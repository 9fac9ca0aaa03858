//! Command-line front end. Exit codes: 0 success, 1 domain or computation
//! error, 2 usage error.

use std::ffi::OsString;
use std::io::Write;
use std::str::FromStr;

use clap::error::ErrorKind;
use clap::{Args, CommandFactory, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_traits::Signed;

use crate::betti::{self, BettiTable, ModuleDescriptor, Window};
use crate::charge::Charge;
use crate::cohom::SpecialityOracle;
use crate::error::Error;
use crate::kbundle::{self, JumpBracket, JumpReport};
use crate::koszul;
use crate::minell::{MinellInput, MinellModule};
use crate::render::{self, ChargeList, TableDescriptor, TableDocument};
use crate::series::{self, SeriesReport};
use crate::svg;
use crate::verify::{self, Check};

#[derive(Parser, Debug)]
#[command(
    name = "ellbetti",
    version,
    about = "Betti tables of MCM modules over elliptic cones and minimal elliptic singularities"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Charges (r_j, d_j) of the bundles K_j
    Kcharges(KchargesArgs),
    /// Betti table of Φ(F[l])
    Betti(BettiArgs),
    /// Koszul or CoKoszul verdict with its certificate
    Koszul(KoszulArgs),
    /// Integer charges giving Koszul modules
    Region(RegionArgs),
    /// Hilbert or Poincaré series
    Series(SeriesArgs),
    /// Run the cross-check suite
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Range {
    lo: i64,
    hi: i64,
}

impl FromStr for Range {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (lo, hi) = s
            .split_once("..")
            .ok_or_else(|| format!("expected LO..HI, got {s:?}"))?;
        let parse = |x: &str| {
            x.trim()
                .parse::<i64>()
                .map_err(|e| format!("{x:?}: {e}"))
        };
        let hi = hi.strip_prefix('=').unwrap_or(hi);
        Ok(Range {
            lo: parse(lo)?,
            hi: parse(hi)?,
        })
    }
}

fn parse_bigint(s: &str) -> Result<BigInt, String> {
    BigInt::from_str(s.trim()).map_err(|e| format!("{s:?}: {e}"))
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum ListFormat {
    Text,
    Json,
    Csv,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum TableFormat {
    Text,
    Json,
    Svg,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum TextOrJson {
    Text,
    Json,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum RegionFormat {
    Csv,
    Svg,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum SeriesKind {
    /// Hilbert series of the module
    Hilbert,
    /// Poincaré series of a Koszul module
    Poincare,
    /// Hilbert series of the ring
    Ring,
}

#[derive(Args, Debug)]
struct KchargesArgs {
    /// Embedding degree: 1, 2 or at least 4
    #[arg(short = 'n')]
    n: i64,
    /// Index range, e.g. -2..3
    #[arg(short = 'j', allow_hyphen_values = true, default_value = "-3..3")]
    range: Range,
    #[arg(long, value_enum, default_value_t = ListFormat::Text)]
    format: ListFormat,
}

#[derive(Args, Debug)]
struct ModuleArgs {
    /// Embedding degree: 1 (Ẽ8), 2 (Ẽ7) or at least 4
    #[arg(short = 'n')]
    n: i64,
    /// Rank of F
    #[arg(short = 'p', short_alias = 'r', long = "rank", visible_alias = "r",
          allow_hyphen_values = true, value_parser = parse_bigint)]
    p: BigInt,
    /// Degree of F
    #[arg(short = 'q', short_alias = 'd', long = "degree", visible_alias = "d",
          allow_hyphen_values = true, value_parser = parse_bigint)]
    q: BigInt,
    /// Cohomological shift l
    #[arg(short = 'l', long = "shift", default_value_t = 0, allow_hyphen_values = true)]
    l: i64,
    /// Positions j where F^∨ ⊗ K_j is the Atiyah bundle (cones only)
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    special: Vec<i64>,
    /// F is the Atiyah bundle (minimal elliptic rings only)
    #[arg(long)]
    atiyah: bool,
}

#[derive(Args, Debug)]
struct BettiArgs {
    #[command(flatten)]
    module: ModuleArgs,
    /// Internal degrees j to tabulate
    #[arg(long, allow_hyphen_values = true)]
    window: Option<Range>,
    /// Only show homological degrees in this range
    #[arg(long, allow_hyphen_values = true)]
    columns: Option<Range>,
    #[arg(long, value_enum, default_value_t = TableFormat::Text)]
    format: TableFormat,
}

#[derive(Args, Debug)]
struct KoszulArgs {
    #[command(flatten)]
    module: ModuleArgs,
    /// Test the CoKoszul criterion instead
    #[arg(long)]
    cokoszul: bool,
    /// Report multiplicity and number of generators
    #[arg(long)]
    ulrich: bool,
    #[arg(long, value_enum, default_value_t = TextOrJson::Text)]
    format: TextOrJson,
}

#[derive(Args, Debug)]
struct RegionArgs {
    /// Embedding degree, at least 4
    #[arg(short = 'n')]
    n: i64,
    /// Bound for both p and q
    #[arg(long)]
    max: Option<i64>,
    /// Bound for p
    #[arg(long)]
    p_max: Option<i64>,
    /// Bound for q
    #[arg(long)]
    q_max: Option<i64>,
    #[arg(long, value_enum, default_value_t = RegionFormat::Csv)]
    format: RegionFormat,
}

#[derive(Args, Debug)]
struct SeriesArgs {
    /// Embedding degree: 1 (Ẽ8), 2 (Ẽ7) or at least 4
    #[arg(short = 'n')]
    n: i64,
    /// Rank of F
    #[arg(short = 'p', short_alias = 'r', long = "rank", visible_alias = "r",
          allow_hyphen_values = true, value_parser = parse_bigint)]
    p: Option<BigInt>,
    /// Degree of F
    #[arg(short = 'q', short_alias = 'd', long = "degree", visible_alias = "d",
          allow_hyphen_values = true, value_parser = parse_bigint)]
    q: Option<BigInt>,
    /// Cohomological shift l
    #[arg(short = 'l', long = "shift", default_value_t = 0, allow_hyphen_values = true)]
    l: i64,
    /// F is the Atiyah bundle (minimal elliptic rings only)
    #[arg(long)]
    atiyah: bool,
    /// Highest power of t to expand
    #[arg(short = 'N', default_value_t = 10)]
    terms: usize,
    /// Which series to compute
    #[arg(long, value_enum, default_value_t = SeriesKind::Hilbert)]
    kind: SeriesKind,
    #[arg(long, value_enum, default_value_t = TextOrJson::Text)]
    format: TextOrJson,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Run only these checks
    #[arg(long, value_delimiter = ',')]
    only: Vec<String>,
    /// Append a check that always fails
    #[arg(long, hide = true)]
    inject_fault: bool,
}

/// Failure of a command: a usage problem (exit 2) or a domain error (exit 1).
enum Failure {
    Usage(clap::Error),
    Domain(Error),
    Checks,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

fn usage(kind: ErrorKind, msg: impl std::fmt::Display) -> Failure {
    Failure::Usage(Cli::command().error(kind, msg))
}

type Outcome = Result<(), Failure>;

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => return report_clap(e, out, err),
    };
    let result = match cli.command {
        Command::Kcharges(a) => kcharges(a, out),
        Command::Betti(a) => betti_cmd(a, out, err),
        Command::Koszul(a) => koszul_cmd(a, out),
        Command::Region(a) => region(a, out),
        Command::Series(a) => series_cmd(a, out, err),
        Command::Verify(a) => verify_cmd(a, out),
    };
    match result {
        Ok(()) => 0,
        Err(Failure::Usage(e)) => report_clap(e, out, err),
        Err(Failure::Domain(e)) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
        Err(Failure::Checks) => 1,
    }
}

fn report_clap(e: clap::Error, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let text = e.render().to_string();
    if e.use_stderr() {
        let _ = write!(err, "{text}");
        2
    } else {
        let _ = write!(out, "{text}");
        0
    }
}

fn emit(out: &mut dyn Write, text: &str) -> Outcome {
    out.write_all(text.as_bytes())
        .map_err(|e| Failure::Domain(Error::InvalidInput(format!("write failed: {e}"))))
}

fn kcharges(a: KchargesArgs, out: &mut dyn Write) -> Outcome {
    if a.range.lo > a.range.hi {
        return Err(usage(ErrorKind::ValueValidation, "empty index range"));
    }
    let rows = kbundle::k_charges(a.n, a.range.lo, a.range.hi)?;
    let list = ChargeList::new(a.n, &rows);
    let text = match a.format {
        ListFormat::Text => list.text(),
        ListFormat::Json => render::to_json(&list) + "\n",
        ListFormat::Csv => list.csv(),
    };
    emit(out, &text)
}

fn is_minell(n: i64) -> bool {
    n == 1 || n == 2
}

fn cone_descriptor(m: &ModuleArgs) -> Result<ModuleDescriptor, Failure> {
    if !m.p.is_positive() && m.n >= 4 {
        return Err(usage(
            ErrorKind::ValueValidation,
            format!("rank must be positive (got {})", m.p),
        ));
    }
    if m.atiyah {
        return Err(usage(
            ErrorKind::ArgumentConflict,
            "--atiyah applies to n = 1, 2; use --special for cones",
        ));
    }
    Ok(ModuleDescriptor::new(
        m.n,
        Charge::new(m.p.clone(), m.q.clone()),
        m.l,
        SpecialityOracle::at(m.special.iter().copied()),
    )?)
}

fn minell_module(n: i64, r: &BigInt, d: &BigInt, atiyah: bool, l: i64, err: &mut dyn Write) -> Result<MinellModule, Failure> {
    let m = MinellInput::new(n, Charge::new(r.clone(), d.clone()), atiyah, l).reduce()?;
    let ring = if n == 1 { "E8~" } else { "E7~" };
    if m.power > 0 {
        let _ = writeln!(
            err,
            "note: n={n} is the {ring} singularity; ({r}, {d}) reduced to ({}, {}) by the shift matrix to the power {}",
            m.r, m.d, m.power
        );
    } else {
        let _ = writeln!(
            err,
            "note: n={n} is the {ring} singularity; ({r}, {d}) lies in the fundamental domain"
        );
    }
    Ok(m)
}

fn bracket_text(b: &Option<JumpBracket>) -> String {
    match b {
        None => "none".into(),
        Some(JumpBracket::AtZero(j)) => format!("s_{j} = 0"),
        Some(JumpBracket::Between(a, b)) => format!("sign change between s_{a} and s_{b}"),
    }
}

fn tail_text(direction: &str, line: betti::Line, l: i64, jump: &JumpReport) -> String {
    format!(
        "{direction}: line {line}_{l}, jump: {}\n",
        bracket_text(&jump.bracket)
    )
}

fn betti_cmd(a: BettiArgs, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    let m = &a.module;
    let mut layout = None;
    let (descriptor, table, footer) = if is_minell(m.n) {
        if !m.special.is_empty() {
            return Err(usage(ErrorKind::ArgumentConflict, "--special applies to cones; use --atiyah"));
        }
        let module = minell_module(m.n, &m.p, &m.q, m.atiyah, m.l, err)?;
        let per = module.period();
        if a.window.is_none() && a.columns.is_none() {
            // the printed layout: columns 0 and 1, rows 0 ..= 2·period − 1
            layout = Some(((0, 1), (0, 2 * per - 1)));
        }
        let window = a.window.map(|r| Window::new(r.lo, r.hi)).unwrap_or(Window::new(0, 2 * per));
        let table = module.table(window);
        let inv = module.invariants()?;
        let footer = format!(
            "rank {}, multiplicity {}, generators {}\n",
            inv.rank, inv.multiplicity, inv.generators
        );
        (TableDescriptor::from(&module), table, footer)
    } else {
        let desc = cone_descriptor(m)?;
        let window = a.window.map(|r| Window::new(r.lo, r.hi)).unwrap_or(Window::new(-3, 6));
        let table = betti::betti_table(&desc, window);
        let shape = betti::shape_report(&desc)?;
        let mut footer = tail_text("i -> +inf", shape.upper.line, m.l, &shape.upper.jump);
        footer += &tail_text("i -> -inf", shape.lower.line, m.l, &shape.lower.jump);
        for dp in &shape.double_points {
            footer += &format!(
                "Atiyah twist at s_{}: entries at {:?} and {:?}\n",
                dp.position, dp.cells[0], dp.cells[1]
            );
        }
        for (i, j, v, line) in &shape.off_half_line {
            footer += &format!("entry beta_({i},{j}) = {v} on {line}_{} off its half-line\n", m.l);
        }
        footer += &match shape.growth {
            betti::GrowthClass::Linear => "growth: linear\n".to_string(),
            betti::GrowthClass::Exponential { rate } => format!("growth: exponential, rate {rate}\n"),
        };
        (TableDescriptor::from(&desc), table, footer)
    };
    let table: BettiTable = match (a.columns, layout) {
        (Some(c), _) => table.restrict_i(c.lo, c.hi),
        (None, Some(((lo, hi), _))) => table.restrict_i(lo, hi),
        (None, None) => table,
    };
    let diagram = match layout {
        Some((columns, rows)) => render::betti_diagram_rows(&table, Some(columns), Some(rows)),
        None => render::betti_diagram(&table),
    };
    let text = match a.format {
        TableFormat::Text => diagram + "\n" + &footer,
        TableFormat::Json => render::to_json(&TableDocument::new(descriptor, &table)) + "\n",
        TableFormat::Svg => svg::table_svg(&format!("n = {}, ({}, {}), l = {}", m.n, m.p, m.q, m.l), &table),
    };
    emit(out, &text)
}

fn koszul_cmd(a: KoszulArgs, out: &mut dyn Write) -> Outcome {
    if is_minell(a.module.n) {
        return Err(Error::InvalidInput("Koszul criteria are stated for n >= 4".into()).into());
    }
    let desc = cone_descriptor(&a.module)?;
    let verdict = if a.cokoszul {
        koszul::is_cokoszul(&desc)
    } else {
        koszul::is_koszul(&desc)
    };
    let ulrich = if a.ulrich && !a.cokoszul && verdict.verdict {
        Some(koszul::ulrich_data(&desc)?)
    } else {
        None
    };
    let text = match a.format {
        TextOrJson::Json => {
            let mut value = serde_json::to_value(&verdict).expect("plain data");
            if let Some(u) = &ulrich {
                value["ulrich"] = serde_json::to_value(u).expect("plain data");
            }
            serde_json::to_string_pretty(&value).expect("plain data") + "\n"
        }
        TextOrJson::Text => {
            let mut text = verdict.to_string();
            if let Some(u) = &ulrich {
                if u.maximally_generated {
                    text += "maximally generated\n";
                }
                text += &format!(
                    "e = {}, generators = {}, Ulrich bound {}\n",
                    u.multiplicity,
                    u.generators,
                    if u.bound_holds { "holds" } else { "fails" }
                );
            } else if a.ulrich && !verdict.verdict {
                text += "not Koszul: no Ulrich data\n";
            }
            text
        }
    };
    emit(out, &text)
}

fn region(a: RegionArgs, out: &mut dyn Write) -> Outcome {
    let p_max = a.p_max.or(a.max).unwrap_or(20);
    let q_max = a.q_max.or(a.max).unwrap_or(20);
    if p_max < 1 || q_max < 1 {
        return Err(usage(ErrorKind::ValueValidation, "bounds must be at least 1"));
    }
    let points = koszul::koszul_region(a.n, p_max, q_max)?;
    let text = match a.format {
        RegionFormat::Csv => render::region_csv(&points),
        RegionFormat::Svg => svg::region_svg(a.n, p_max, q_max, &points)?,
    };
    emit(out, &text)
}

fn series_cmd(a: SeriesArgs, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    let (name, x, offset) = match a.kind {
        SeriesKind::Ring => ("H_R", series::hilbert_r(a.n)?, 0),
        kind => {
            let (Some(p), Some(q)) = (&a.p, &a.q) else {
                return Err(usage(ErrorKind::MissingRequiredArgument, "module series need -p and -q"));
            };
            if is_minell(a.n) {
                if kind == SeriesKind::Poincare {
                    return Err(Error::InvalidInput(
                        "Poincaré series are computed for Koszul modules over cones".into(),
                    )
                    .into());
                }
                let m = minell_module(a.n, p, q, a.atiyah, a.l, err)?;
                let (offset, h) = m.hilbert()?;
                ("H_M", h, offset)
            } else {
                if !p.is_positive() && a.n >= 4 {
                    return Err(usage(ErrorKind::ValueValidation, format!("rank must be positive (got {p})")));
                }
                if a.l != 0 {
                    return Err(Error::NotKoszul(p.to_string(), q.to_string()).into());
                }
                let z = Charge::new(p.clone(), q.clone());
                match kind {
                    SeriesKind::Poincare => ("S", series::poincare_koszul(a.n, &z)?, 0),
                    _ => ("H_M", series::hilbert_koszul_module(a.n, &z)?, 0),
                }
            }
        }
    };
    let report = SeriesReport::new(&x, a.terms, offset)?;
    let text = match a.format {
        TextOrJson::Text => render::series_text(name, &x, &report),
        TextOrJson::Json => render::to_json(&report) + "\n",
    };
    emit(out, &text)
}

fn verify_cmd(a: VerifyArgs, out: &mut dyn Write) -> Outcome {
    let mut checks = Vec::new();
    for name in &a.only {
        match Check::from_name(name) {
            Some(c) => checks.push(c),
            None => {
                let names: Vec<_> = Check::ALL.iter().map(|c| c.name()).collect();
                return Err(usage(
                    ErrorKind::InvalidValue,
                    format!("unknown check {name:?}; expected one of {}", names.join(", ")),
                ));
            }
        }
    }
    if checks.is_empty() {
        checks = Check::ALL.to_vec();
    }
    let mut outcomes: Vec<_> = checks.into_iter().map(verify::run).collect();
    if a.inject_fault {
        outcomes.push(verify::injected_fault());
    }
    let mut text = String::new();
    for o in &outcomes {
        text += &format!(
            "{} {:<11} {:>8.3}s  {}\n",
            if o.passed { "PASS" } else { "FAIL" },
            o.name,
            o.elapsed.as_secs_f64(),
            o.detail
        );
    }
    let failed: Vec<_> = outcomes.iter().filter(|o| !o.passed).map(|o| o.name.as_str()).collect();
    if failed.is_empty() {
        text += &format!("all {} checks passed\n", outcomes.len());
    } else {
        text += &format!("failed: {}\n", failed.join(", "));
    }
    emit(out, &text)?;
    if failed.is_empty() {
        Ok(())
    } else {
        Err(Failure::Checks)
    }
}
