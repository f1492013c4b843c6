//! Command-line front end: exact pair solving and classification,
//! Fibonacci powers, family closed forms, table regeneration, identity
//! suites, and gamma-sequence scans.
//!
//! Exit codes: 0 on success, 1 on bad input, 2 when an internal
//! cross-check fails (which would falsify a supposedly proven statement
//! and must never happen).

mod verify;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;

use fibgamma_core::closed_forms::{closed_solution, Family};
use fibgamma_core::explorer::{
    detect_period, difference_probe, emit_table, scan, scan_iter, PeriodStatus, ScanRecord,
    TableFormat,
};
use fibgamma_core::fibonacci::fib_pow;
use fibgamma_core::solver::{
    gamma, solve_pair, solve_positive_pair, solve_shifted_pair, CoprimePair,
};

#[derive(Parser)]
#[command(
    name = "fibgamma",
    version,
    about = "Exact solver and classifier for two-target coprime Diophantine pairs, \
             with closed forms and scans for Fibonacci-power families"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print F_n, optionally raised to a power
    Fib {
        n: u64,
        /// Exponent applied to F_n
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
        pow: u32,
    },
    /// Print the classifier (1 or 2) of the coprime pair (a, b)
    Gamma { a: BigUint, b: BigUint },
    /// Print the unique nonnegative solution and classifier of the pair
    Solve {
        a: BigUint,
        b: BigUint,
        /// Solve against the target raised by a + b instead
        #[arg(long)]
        shifted: bool,
    },
    /// Print the unique positive solution for odd a and coprime b >= 2
    Positive { a: BigUint, b: BigUint },
    /// Evaluate a family's closed-form solution at index n
    ClosedForm {
        #[arg(long, value_enum)]
        family: FamilyArg,
        n: u64,
    },
    /// Regenerate a solution table over an index range
    Table(TableArgs),
    /// Run an identity suite and report the verified case count
    Verify {
        #[arg(long, value_enum)]
        suite: verify::Suite,
        /// Upper end of the suite's range
        #[arg(long)]
        max: u64,
    },
    /// Stream scan rows for the pair (F_n^i, F_{n+1}^j) as CSV
    Scan {
        #[arg(long)]
        i: u32,
        #[arg(long)]
        j: u32,
        #[arg(long)]
        from: u64,
        #[arg(long)]
        to: u64,
        /// Search the gamma sequence for an eventual period
        #[arg(long)]
        detect_period: bool,
        /// Print cross-differences y(n+1) - x(n) after the rows
        #[arg(long)]
        differences: bool,
    },
}

#[derive(Args)]
struct TableArgs {
    /// Family shorthand: both exponents set to the family's power
    #[arg(long, value_enum, conflicts_with_all = ["i", "j"], required_unless_present = "i")]
    family: Option<FamilyArg>,
    /// Exponent on F_n
    #[arg(long, requires = "j", required_unless_present = "family")]
    i: Option<u32>,
    /// Exponent on F_{n+1}
    #[arg(long, requires = "i", required_unless_present = "family")]
    j: Option<u32>,
    #[arg(long)]
    from: u64,
    #[arg(long)]
    to: u64,
    /// Machine-readable output instead of the aligned text table
    #[arg(long, value_enum)]
    format: Option<FormatArg>,
}

impl TableArgs {
    fn exponents(&self) -> (u32, u32) {
        match (self.family, self.i, self.j) {
            (Some(f), _, _) => {
                let e = Family::from(f).exponent();
                (e, e)
            }
            (None, Some(i), Some(j)) => (i, j),
            _ => unreachable!("argument parser enforces family or both exponents"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    Linear,
    Squared,
    Cubed,
}

impl From<FamilyArg> for Family {
    fn from(arg: FamilyArg) -> Family {
        match arg {
            FamilyArg::Linear => Family::Linear,
            FamilyArg::Squared => Family::Squared,
            FamilyArg::Cubed => Family::Cubed,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Csv,
    Json,
}

enum CliError {
    Core(fibgamma_core::Error),
    VerifyFailed(String),
}

impl From<fibgamma_core::Error> for CliError {
    fn from(e: fibgamma_core::Error) -> Self {
        CliError::Core(e)
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Core(e) => write!(f, "{e}"),
            CliError::VerifyFailed(detail) => write!(f, "verification failed: {detail}"),
        }
    }
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(e) if e.is_internal_contradiction() => 2,
            CliError::Core(_) => 1,
            CliError::VerifyFailed(_) => 2,
        }
    }
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            std::process::exit(code);
        }
    };
    if let Err(e) = run(cli.command) {
        eprintln!("error: {e}");
        std::process::exit(e.exit_code());
    }
}

fn run(command: Command) -> Result<(), CliError> {
    match command {
        Command::Fib { n, pow } => {
            println!("{}", fib_pow(n, pow));
        }
        Command::Gamma { a, b } => {
            let pair = CoprimePair::new(a, b)?;
            println!("{}", gamma(&pair)?);
        }
        Command::Solve { a, b, shifted } => {
            let pair = CoprimePair::new(a, b)?;
            let sol = if shifted {
                solve_shifted_pair(&pair)?
            } else {
                solve_pair(&pair)?
            };
            println!("gamma={} x={} y={}", sol.gamma, sol.x, sol.y);
        }
        Command::Positive { a, b } => {
            let sol = solve_positive_pair(&a, &b)?;
            println!("equation={} x={} y={}", sol.equation, sol.x, sol.y);
        }
        Command::ClosedForm { family, n } => {
            let r = closed_solution(family.into(), n)?;
            println!("gamma={} x={} y={}", r.gamma, r.x, r.y);
        }
        Command::Table(args) => {
            let (i, j) = args.exponents();
            let records = scan(i, j, args.from, args.to)?;
            match args.format {
                Some(FormatArg::Csv) => print!("{}", emit_table(&records, TableFormat::Csv)),
                Some(FormatArg::Json) => println!("{}", emit_table(&records, TableFormat::Json)),
                None => print!("{}", aligned_table(&records)),
            }
        }
        Command::Verify { suite, max } => {
            let count = verify::run_suite(suite, max).map_err(CliError::VerifyFailed)?;
            println!("{}: {} cases ok", suite.name(), count);
        }
        Command::Scan {
            i,
            j,
            from,
            to,
            detect_period: want_period,
            differences,
        } => {
            let rows = scan_iter(i, j, from, to)?;
            println!("n,a,b,x,y,gamma");
            let mut gammas = Vec::new();
            let mut kept = Vec::new();
            for row in rows {
                let r = row?;
                println!("{},{},{},{},{},{}", r.n, r.a, r.b, r.x, r.y, r.gamma);
                if want_period {
                    gammas.push(r.gamma);
                }
                if differences {
                    kept.push(r);
                }
            }
            if want_period {
                let report = detect_period(&gammas, Some(from))?;
                match report.status {
                    PeriodStatus::Found {
                        offset,
                        period,
                        pattern,
                    } => {
                        let pattern: Vec<String> =
                            pattern.iter().map(|g| g.to_string()).collect();
                        println!(
                            "period-report: found offset={} period={} pattern=[{}] verified-upto={}",
                            offset,
                            period,
                            pattern.join(","),
                            report.verified_upto
                        );
                    }
                    PeriodStatus::NoneFound => {
                        println!(
                            "period-report: none-found verified-upto={}",
                            report.verified_upto
                        );
                    }
                }
            }
            if differences {
                for (n, diff) in difference_probe(&kept)? {
                    println!("difference: y({})-x({}) = {}", n + 1, n, diff);
                }
            }
        }
    }
    Ok(())
}

/// Right-aligned text table with a header row.
fn aligned_table(records: &[ScanRecord]) -> String {
    let headers = ["n", "a", "b", "x", "y", "gamma"];
    let rows: Vec<[String; 6]> = records
        .iter()
        .map(|r| {
            [
                r.n.to_string(),
                r.a.to_string(),
                r.b.to_string(),
                r.x.to_string(),
                r.y.to_string(),
                r.gamma.to_string(),
            ]
        })
        .collect();
    let mut widths: Vec<usize> = headers.iter().map(|h| h.len()).collect();
    for row in &rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let mut out = String::new();
    let mut push_row = |cells: &[&str]| {
        for (idx, cell) in cells.iter().enumerate() {
            if idx > 0 {
                out.push_str("  ");
            }
            out.push_str(&format!("{cell:>width$}", width = widths[idx]));
        }
        out.push('\n');
    };
    push_row(&headers);
    for row in &rows {
        let cells: Vec<&str> = row.iter().map(String::as_str).collect();
        push_row(&cells);
    }
    out
}
