//! `simplest-cubic`: invariants, normal integral bases and Gaussian periods of
//! the simplest cubic fields.

mod records;

use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;

use simplest_cubic::gaussian::{self, DEFAULT_PRECISION};
use simplest_cubic::table::{self, Filter};
use simplest_cubic::{integral_basis, invariants, nib, Error};

use records::{GaussianRecord, GeneratorRecord, OutputRecord, TableRecord};

const EXIT_USAGE: u8 = 2;
const EXIT_NO_NIB: u8 = 3;
const EXIT_VERIFY: u8 = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Md,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FilterArg {
    All,
    Tame,
    Mod27,
    DeltaNeF,
}

impl From<FilterArg> for Filter {
    fn from(f: FilterArg) -> Self {
        match f {
            FilterArg::All => Filter::All,
            FilterArg::Tame => Filter::Tame,
            FilterArg::Mod27 => Filter::Mod27,
            FilterArg::DeltaNeF => Filter::DeltaNeF,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "simplest-cubic", version, about = "Normal integral bases of simplest cubic fields")]
struct Cli {
    #[arg(long, global = true, value_enum, default_value = "md")]
    format: Format,
    /// Working precision of the numeric period oracle, in bits.
    #[arg(long, global = true, default_value_t = DEFAULT_PRECISION)]
    precision: u32,
    /// Worker threads for range tabulation (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Δ_n, its decomposition, conductor, discriminant and tameness.
    Analyze {
        #[arg(allow_negative_numbers = true)]
        n: BigInt,
    },
    /// The six generators of normal integral bases with minimal polynomials.
    Nib {
        #[arg(allow_negative_numbers = true)]
        n: BigInt,
    },
    /// The Gaussian period as a signed generator.
    Gaussian {
        #[arg(allow_negative_numbers = true)]
        n: BigInt,
        /// Check against numerically summed periods.
        #[arg(long)]
        verify: bool,
    },
    /// One row per n in a range.
    Table {
        #[arg(long, allow_negative_numbers = true)]
        from: i64,
        #[arg(long, allow_negative_numbers = true)]
        to: i64,
        #[arg(long, value_enum, default_value = "all")]
        filter: FilterArg,
    },
    /// Run every independent check for n; exit 4 if any fails.
    Verify {
        #[arg(allow_negative_numbers = true)]
        n: BigInt,
    },
}

enum Failure {
    Usage(String),
    NoNib(BigInt),
    Verify(String),
    Other(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Wild(n) => Failure::NoNib(n),
            e => Failure::Other(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Other(e.to_string())
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure::Other(e.to_string())
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Other(e.to_string())
    }
}

type CliResult = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        configure_jobs(jobs);
    }
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::NoNib(n)) => {
            eprintln!("n = {n}: L_n/Q is wildly ramified, no normal integral basis");
            ExitCode::from(EXIT_NO_NIB)
        }
        Err(Failure::Verify(msg)) => {
            eprintln!("verification failed: {msg}");
            ExitCode::from(EXIT_VERIFY)
        }
        Err(Failure::Other(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::FAILURE
        }
    }
}

#[cfg(feature = "parallel")]
fn configure_jobs(jobs: usize) {
    // Fails only if the pool was already built, which cannot happen here.
    let _ = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build_global();
}

#[cfg(not(feature = "parallel"))]
fn configure_jobs(_jobs: usize) {}

fn run(cli: &Cli) -> CliResult {
    let out = io::stdout();
    let mut out = out.lock();
    match &cli.command {
        Command::Analyze { n } => analyze(&mut out, cli.format, n),
        Command::Nib { n } => nib_table(&mut out, cli.format, n),
        Command::Gaussian { n, verify } => gaussian_cmd(&mut out, cli, n, *verify),
        Command::Table { from, to, filter } => {
            if from > to {
                return Err(Failure::Usage(format!("empty range: --from {from} > --to {to}")));
            }
            table_cmd(&mut out, cli.format, *from, *to, (*filter).into())
        }
        Command::Verify { n } => verify_cmd(&mut out, cli, n),
    }
}

fn json_line<T: serde::Serialize>(out: &mut impl Write, v: &T) -> CliResult {
    serde_json::to_writer_pretty(&mut *out, v)?;
    writeln!(out)?;
    Ok(())
}

fn analyze(out: &mut impl Write, format: Format, n: &BigInt) -> CliResult {
    let inv = invariants::conductor(n)?;
    let rec = OutputRecord::from(&inv);
    match format {
        Format::Json => json_line(out, &rec)?,
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["n", "delta", "delta_factored", "d", "e", "c", "gamma", "conductor", "discriminant", "tame"])?;
            w.write_record([
                &rec.n,
                &rec.delta,
                &rec.delta_factored,
                &rec.d,
                &rec.e,
                &rec.c,
                &rec.gamma,
                &rec.conductor,
                &rec.discriminant,
                &rec.tame.to_string(),
            ])?;
            w.flush()?;
        }
        Format::Md => {
            writeln!(out, "n={}", rec.n)?;
            writeln!(out, "Δ={}={}", rec.delta, rec.delta_factored)?;
            writeln!(out, "d={}, e={}, c={}", rec.d, rec.e, rec.c)?;
            writeln!(out, "γ={}", rec.gamma)?;
            writeln!(out, "f={}", rec.conductor)?;
            writeln!(out, "D={}", rec.discriminant)?;
            if rec.tame {
                writeln!(out, "tame=true, NIB exists")?;
            } else {
                writeln!(out, "tame=false, no NIB")?;
            }
        }
    }
    Ok(())
}

fn nib_table(out: &mut impl Write, format: Format, n: &BigInt) -> CliResult {
    let inv = invariants::conductor(n)?;
    let gens = nib::all_generators(n)?;
    let rows: Vec<GeneratorRecord> = gens.iter().map(GeneratorRecord::from).collect();
    match format {
        Format::Json => {
            let mut rec = OutputRecord::from(&inv);
            rec.generators = Some(rows);
            json_line(out, &rec)?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["a0", "a1", "epsilon", "m", "generator", "min_poly"])?;
            for r in &rows {
                w.write_record([
                    &r.pair[0],
                    &r.pair[1],
                    &r.epsilon.to_string(),
                    &r.m,
                    &r.element,
                    &r.min_poly.text,
                ])?;
            }
            w.flush()?;
        }
        Format::Md => {
            writeln!(out, "| {{a0,a1}} | generator of NIB | minimal polynomial |")?;
            writeln!(out, "|---|---|---|")?;
            for r in &rows {
                writeln!(
                    out,
                    "| {{{},{}}} | {} | {} |",
                    r.pair[0], r.pair[1], r.element, r.min_poly.text
                )?;
            }
        }
    }
    Ok(())
}

fn gaussian_cmd(out: &mut impl Write, cli: &Cli, n: &BigInt, verify: bool) -> CliResult {
    let inv = invariants::conductor(n)?;
    let report = gaussian::period_identity(n)?;
    let numeric = if verify {
        Some(gaussian::numeric_verify_auto(n, cli.precision)?)
    } else {
        None
    };
    let g = GaussianRecord::new(&report, numeric.as_ref());
    match cli.format {
        Format::Json => {
            let mut rec = OutputRecord::from(&inv);
            rec.gaussian = Some(g.clone());
            json_line(out, &rec)?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record(["n", "prime_count", "epsilon", "sign", "period", "min_poly", "verified", "residual_log2"])?;
            let (verified, residual) = match &g.numeric_match {
                Some(m) => (m.matched.to_string(), format!("{:.1}", m.residual_log2)),
                None => (String::new(), String::new()),
            };
            w.write_record([
                &n.to_string(),
                &g.prime_count.to_string(),
                &g.epsilon.to_string(),
                &g.sign.to_string(),
                &g.element,
                &g.min_poly.text,
                &verified,
                &residual,
            ])?;
            w.flush()?;
        }
        Format::Md => {
            writeln!(out, "n={n}, f={}, t={}", inv.conductor, g.prime_count)?;
            writeln!(out, "pair={{{},{}}}, ε={}, sign={}", g.pair[0], g.pair[1], g.epsilon, g.sign)?;
            writeln!(out, "η={}", g.element)?;
            writeln!(out, "minimal polynomial: {}", g.min_poly.text)?;
            if let Some(m) = &g.numeric_match {
                writeln!(
                    out,
                    "verify={} (precision {} bits, residual 2^{:.1}, {})",
                    if m.matched { "pass" } else { "fail" },
                    m.precision_bits,
                    m.residual_log2,
                    m.subgroup.as_deref().unwrap_or("no subgroup")
                )?;
            }
        }
    }
    match &g.numeric_match {
        Some(m) if !m.matched => Err(Failure::Verify(format!(
            "numeric periods do not match the predicted period for n = {n}"
        ))),
        _ => Ok(()),
    }
}

fn table_cmd(out: &mut impl Write, format: Format, from: i64, to: i64, filter: Filter) -> CliResult {
    let rows = table::tabulate(from, to, filter)?;
    match format {
        Format::Md => write!(out, "{}", table::markdown(&rows))?,
        Format::Json => {
            let recs: Vec<TableRecord> = rows.iter().map(TableRecord::from).collect();
            json_line(out, &recs)?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["n", "delta", "conductor", "tame", "period", "min_poly"])?;
            for r in &rows {
                let rec = TableRecord::from(r);
                w.write_record([
                    rec.n,
                    rec.delta,
                    rec.conductor,
                    rec.tame.to_string(),
                    rec.period.unwrap_or_default(),
                    rec.min_poly.map(|p| p.text).unwrap_or_default(),
                ])?;
            }
            w.flush()?;
        }
    }
    Ok(())
}

fn verify_cmd(out: &mut impl Write, cli: &Cli, n: &BigInt) -> CliResult {
    let gens = nib::all_generators(n)?;
    let mut failures = Vec::new();
    for g in &gens {
        let r = nib::verify_nib(g)?;
        let status = if r.all_pass() { "pass" } else { "FAIL" };
        writeln!(out, "generator {{{},{}}}: {status} {r:?}", g.a0, g.a1)?;
        if !r.all_pass() {
            failures.push(format!("generator {{{},{}}}", g.a0, g.a1));
        }
    }
    match integral_basis::build(n) {
        Ok(b) => writeln!(out, "integral basis: pass (shift {})", b.shift)?,
        Err(e) => {
            writeln!(out, "integral basis: FAIL {e}")?;
            failures.push("integral basis".into());
        }
    }
    let m = gaussian::numeric_verify_auto(n, cli.precision)?;
    writeln!(
        out,
        "gaussian period: {} (residual 2^{:.1} at {} bits)",
        if m.matched { "pass" } else { "FAIL" },
        m.residual_log2(),
        m.precision_bits
    )?;
    if !m.matched {
        failures.push("gaussian period".into());
    }
    if failures.is_empty() {
        Ok(())
    } else {
        Err(Failure::Verify(failures.join(", ")))
    }
}
