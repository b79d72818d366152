//! `icube4`: count, enumerate, extend and decompose integral cubes in `Z^4`.
//!
//! Exit codes: 0 success, 1 usage or malformed input, 2 disagreement between
//! counting methods, 3 enumeration budget exceeded.

use std::fmt::Write as _;
use std::io::{self, BufWriter, Read, Write};
use std::ops::ControlFlow;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use icube4_core::counting::{count_report, sweep, CountError, CountReport};
use icube4_core::enumeration::{for_each_icube, EnumBudget, EnumError};
use icube4_core::icube::{
    cayley_extend, compose, decompose_with, extend_minor, extend_z4, Decomposition, Side,
};
use icube4_core::quaternion::Eta;
use icube4_core::{ICube, IVec, IcubeError};
use serde::Deserialize;

#[derive(Parser, Debug)]
#[command(
    name = "icube4",
    version,
    about = "Integral cubes in Z^4 via Hurwitz quaternions"
)]
struct Cli {
    /// Output format; `verify` defaults to text, everything else to json.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    /// Largest edge norm any brute-force search may touch.
    #[arg(long, global = true, env = "ICUBE4_BUDGET", value_name = "MAX_NORM")]
    budget: Option<u64>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Number of m-icubes in Z^4 with edge norm N.
    Count {
        #[arg(short, long, value_parser = clap::value_parser!(u8).range(1..=4))]
        m: u8,
        #[arg(
            short = 'N',
            long = "norm",
            conflicts_with = "max_norm",
            required_unless_present = "max_norm"
        )]
        norm: Option<u64>,
        /// Count every N from 1 up to this value instead of a single N.
        #[arg(long)]
        max_norm: Option<u64>,
        #[arg(long, value_enum, default_value_t = Method::All)]
        method: Method,
    },
    /// Every m-icube of edge norm N, one per line.
    Enumerate {
        #[arg(short, long, value_parser = clap::value_parser!(u8).range(1..=4))]
        m: u8,
        #[arg(short = 'N', long = "norm")]
        norm: u64,
        /// Fail with exit code 3 rather than print more than this many.
        #[arg(long)]
        max_results: Option<usize>,
    },
    /// Add one vector to an icube (or fill it up with --full).
    Extend {
        /// Icube JSON file, or `-` for standard input.
        input: PathBuf,
        #[arg(long)]
        full: bool,
    },
    /// The full 2-, 4- or 8-icube whose first row is the given vector.
    Cayley {
        /// Comma-separated entries, e.g. `1,2,3,4`.
        #[arg(allow_hyphen_values = true, value_parser = parse_vector)]
        vector: IVec,
    },
    /// Canonical certificate of an icube in Z^4.
    Decompose {
        input: PathBuf,
        /// Side primes are pulled from first; the certificate is the same
        /// either way for m >= 2.
        #[arg(long, value_enum, default_value_t = SideArg::Left)]
        side: SideArg,
    },
    /// Rebuild an icube from a certificate.
    Compose { input: PathBuf },
    /// Closed form, convolution and brute force for every m and every N up
    /// to --max-norm.
    Verify {
        #[arg(long, default_value_t = 30)]
        max_norm: u64,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Method {
    Closed,
    Convolution,
    Brute,
    All,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SideArg {
    Left,
    Right,
}

struct Failure {
    code: u8,
    msg: String,
}

impl Failure {
    fn usage(msg: impl ToString) -> Failure {
        Failure {
            code: 1,
            msg: msg.to_string(),
        }
    }
}

impl From<EnumError> for Failure {
    fn from(e: EnumError) -> Failure {
        let code = match e {
            EnumError::BudgetExceeded { .. } | EnumError::TooManyResults(_) => 3,
            _ => 1,
        };
        Failure {
            code,
            msg: e.to_string(),
        }
    }
}

impl From<CountError> for Failure {
    fn from(e: CountError) -> Failure {
        match e {
            CountError::Enum(e) => e.into(),
            CountError::Mismatch(_) => Failure {
                code: 2,
                msg: e.to_string(),
            },
            e => Failure::usage(e),
        }
    }
}

impl From<IcubeError> for Failure {
    fn from(e: IcubeError) -> Failure {
        Failure::usage(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Failure {
        // a closed pipe downstream (`| head`) is not an error
        let code = if e.kind() == io::ErrorKind::BrokenPipe {
            0
        } else {
            1
        };
        Failure {
            code,
            msg: e.to_string(),
        }
    }
}

type Out<'a> = BufWriter<io::StdoutLock<'a>>;

fn read_input(path: &PathBuf) -> Result<String, Failure> {
    let mut s = String::new();
    if path.as_os_str() == "-" {
        io::stdin().read_to_string(&mut s)?;
    } else {
        s = std::fs::read_to_string(path)
            .map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
    }
    Ok(s)
}

/// Either the versioned icube object or a bare list of rows.
#[derive(Deserialize)]
#[serde(untagged)]
enum CubeInput {
    Cube(ICube),
    Rows(Vec<Vec<i64>>),
}

fn parse_cube(s: &str) -> Result<ICube, Failure> {
    match serde_json::from_str::<CubeInput>(s) {
        Ok(CubeInput::Cube(c)) => Ok(c),
        Ok(CubeInput::Rows(rows)) => Ok(ICube::new(rows.into_iter().map(IVec::new).collect())?),
        Err(_) => {
            // report the error against the documented format
            let e = serde_json::from_str::<ICube>(s)
                .err()
                .map_or("malformed icube".into(), |e| e.to_string());
            Err(Failure::usage(format!("invalid icube: {e}")))
        }
    }
}

fn parse_vector(s: &str) -> Result<IVec, String> {
    s.split(',')
        .map(|x| x.trim().parse::<i64>().map_err(|e| format!("{x:?}: {e}")))
        .collect::<Result<Vec<_>, _>>()
        .map(IVec::new)
}

fn row_text(v: &IVec) -> String {
    let parts: Vec<String> = v.entries().iter().map(i64::to_string).collect();
    format!("({})", parts.join(","))
}

fn cube_text(c: &ICube) -> String {
    c.vectors()
        .iter()
        .map(row_text)
        .collect::<Vec<_>>()
        .join(" ")
}

fn write_cube(out: &mut Out, c: &ICube, format: Format) -> io::Result<()> {
    match format {
        Format::Json => writeln!(
            out,
            "{}",
            serde_json::to_string(c).expect("icubes serialize")
        ),
        Format::Text => writeln!(out, "{}", cube_text(c)),
    }
}

fn opt_text(x: Option<u128>) -> String {
    x.map_or("-".into(), |v| v.to_string())
}

fn write_report(out: &mut Out, r: &CountReport, format: Format) -> io::Result<()> {
    match format {
        Format::Json => writeln!(
            out,
            "{}",
            serde_json::to_string(r).expect("reports serialize")
        ),
        Format::Text => writeln!(
            out,
            "m={} N={} closed={} convolution={} brute={} {}",
            r.m,
            r.n,
            r.closed,
            opt_text(r.convolution),
            opt_text(r.brute),
            if r.ok { "ok" } else { "MISMATCH" }
        ),
    }
}

fn decomposition_text(d: &Decomposition) -> String {
    let mut s = String::new();
    let signs: Vec<&str> = d
        .signs
        .iter()
        .map(|&x| if x > 0 { "+" } else { "-" })
        .collect();
    let perm: Vec<String> = d
        .coord_perm
        .images()
        .iter()
        .map(|g| g.to_string())
        .collect();
    let eta = match d.eta {
        None => "none",
        Some(Eta::I) => "1+i",
        Some(Eta::J) => "1+j",
        Some(Eta::K) => "1+k",
    };
    let _ = writeln!(s, "gamma: {}", d.gamma);
    let _ = writeln!(s, "delta: {}", d.delta);
    let _ = writeln!(s, "signs: {}", signs.join(" "));
    let _ = writeln!(s, "scalar_content: {}", d.scalar_content);
    let _ = writeln!(s, "dyadic_power: {}", d.dyadic_power);
    let _ = writeln!(s, "eta: {eta}");
    let _ = write!(s, "coord_perm: ({})", perm.join(","));
    s
}

fn budget(cli_budget: Option<u64>) -> EnumBudget {
    cli_budget.map_or_else(EnumBudget::icubes, EnumBudget::new)
}

fn cmd_count(
    out: &mut Out,
    format: Format,
    budget: &EnumBudget,
    m: u8,
    norms: std::ops::RangeInclusive<u64>,
    method: Method,
) -> Result<(), Failure> {
    let mut mismatch = None;
    for n in norms {
        let brute = match method {
            Method::Brute => Some(budget),
            Method::All => budget.check(n).is_ok().then_some(budget),
            _ => None,
        };
        let convolution = matches!(method, Method::Convolution | Method::All);
        match count_report(m, n, convolution, brute) {
            Ok(r) => write_report(out, &r, format)?,
            Err(CountError::Mismatch(r)) => {
                write_report(out, &r, format)?;
                mismatch.get_or_insert(CountError::Mismatch(r));
            }
            Err(e) => return Err(e.into()),
        }
    }
    mismatch.map_or(Ok(()), |e| Err(e.into()))
}

fn cmd_enumerate(
    out: &mut Out,
    format: Format,
    budget: &EnumBudget,
    m: u8,
    n: u64,
) -> Result<(), Failure> {
    // check the whole budget before printing anything
    budget.check(n)?;
    let flow = for_each_icube(m.into(), n, budget, |c| match write_cube(out, &c, format) {
        Ok(()) => ControlFlow::Continue(()),
        Err(e) => ControlFlow::Break(e),
    })?;
    match flow {
        ControlFlow::Break(e) => Err(e.into()),
        ControlFlow::Continue(()) => Ok(()),
    }
}

fn extend_once(c: &ICube) -> Result<ICube, IcubeError> {
    if c.n() == 4 && c.m() < 3 {
        extend_z4(c)
    } else if c.m() + 1 == c.n() {
        extend_minor(c)
    } else if c.m() == c.n() {
        Err(IcubeError::AlreadyFull)
    } else {
        Err(IcubeError::WrongSize { m: c.m(), n: c.n() })
    }
}

fn cmd_extend(out: &mut Out, format: Format, input: &PathBuf, full: bool) -> Result<(), Failure> {
    let mut c = extend_once(&parse_cube(&read_input(input)?)?)?;
    while full && c.m() < c.n() {
        c = extend_once(&c)?;
    }
    Ok(write_cube(out, &c, format)?)
}

fn cmd_decompose(
    out: &mut Out,
    format: Format,
    input: &PathBuf,
    side: SideArg,
) -> Result<(), Failure> {
    let c = parse_cube(&read_input(input)?)?;
    let side = match side {
        SideArg::Left => Side::Left,
        SideArg::Right => Side::Right,
    };
    let d = decompose_with(&c, side)?;
    match format {
        Format::Json => writeln!(
            out,
            "{}",
            serde_json::to_string(&d).expect("certificates serialize")
        )?,
        Format::Text => writeln!(out, "{}", decomposition_text(&d))?,
    }
    Ok(())
}

fn cmd_compose(out: &mut Out, format: Format, input: &PathBuf) -> Result<(), Failure> {
    let d: Decomposition = serde_json::from_str(&read_input(input)?)
        .map_err(|e| Failure::usage(format!("invalid certificate: {e}")))?;
    Ok(write_cube(out, &compose(&d)?, format)?)
}

fn cmd_verify(
    out: &mut Out,
    format: Format,
    budget: &EnumBudget,
    max_norm: u64,
) -> Result<(), Failure> {
    if max_norm == 0 {
        return Err(Failure::usage("--max-norm must be positive"));
    }
    budget.check(max_norm)?;
    let results = sweep(max_norm, true, budget);
    let total = results.len();
    let mut failures = Vec::new();
    for r in results {
        match r {
            Ok(_) => {}
            Err(CountError::Mismatch(r)) => failures.push(*r),
            Err(e) => return Err(e.into()),
        }
    }
    let passed = total - failures.len();
    match format {
        Format::Json => {
            let v = serde_json::json!({
                "ok": failures.is_empty(),
                "max_norm": max_norm,
                "checks": total,
                "passed": passed,
                "failures": failures,
            });
            writeln!(out, "{v}")?;
        }
        Format::Text => {
            let verdict = if failures.is_empty() { "OK" } else { "FAIL" };
            writeln!(out, "{verdict} {passed}/{total} checks")?;
            for r in &failures {
                write_report(out, r, Format::Text)?;
            }
        }
    }
    if failures.is_empty() {
        Ok(())
    } else {
        Err(Failure {
            code: 2,
            msg: format!("{} of {total} checks disagree", failures.len()),
        })
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let budget = budget(cli.budget);
    let format = cli.format.unwrap_or(Format::Json);
    let result = match &cli.command {
        Command::Count {
            m,
            norm,
            max_norm,
            method,
        } => {
            let norms = match (norm, max_norm) {
                (Some(n), None) => *n..=*n,
                (None, Some(hi)) => 1..=*hi,
                _ => unreachable!("clap enforces exactly one of -N and --max-norm"),
            };
            if norms.contains(&0) {
                return Err(Failure::usage("N must be positive"));
            }
            cmd_count(&mut out, format, &budget, *m, norms, *method)
        }
        Command::Enumerate {
            m,
            norm,
            max_results,
        } => {
            let budget = EnumBudget {
                max_results: *max_results,
                ..budget
            };
            cmd_enumerate(&mut out, format, &budget, *m, *norm)
        }
        Command::Extend { input, full } => cmd_extend(&mut out, format, input, *full),
        Command::Cayley { vector } => cayley_extend(vector)
            .map_err(Failure::from)
            .and_then(|c| Ok(write_cube(&mut out, &c, format)?)),
        Command::Decompose { input, side } => cmd_decompose(&mut out, format, input, *side),
        Command::Compose { input } => cmd_compose(&mut out, format, input),
        Command::Verify { max_norm } => cmd_verify(
            &mut out,
            cli.format.unwrap_or(Format::Text),
            &budget,
            *max_norm,
        ),
    };
    let flushed = out.flush();
    result?;
    Ok(flushed?)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) if f.code == 0 => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("icube4: {}", f.msg);
            ExitCode::from(f.code)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_code_mapping() {
        let report = CountReport {
            n: 3,
            m: 4,
            closed: 3072,
            convolution: Some(3071),
            brute: None,
            ok: false,
        };
        assert_eq!(
            Failure::from(CountError::Mismatch(Box::new(report))).code,
            2
        );
        assert_eq!(
            Failure::from(CountError::Enum(EnumError::BudgetExceeded {
                norm: 9,
                max_norm: 5
            }))
            .code,
            3
        );
        assert_eq!(Failure::from(EnumError::TooManyResults(3)).code, 3);
        assert_eq!(Failure::from(CountError::InvalidM(7)).code, 1);
        assert_eq!(Failure::from(IcubeError::AlreadyFull).code, 1);
        assert_eq!(
            Failure::from(io::Error::from(io::ErrorKind::BrokenPipe)).code,
            0
        );
    }
}
