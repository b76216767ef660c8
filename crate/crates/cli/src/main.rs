use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::{json, Value};

use gpaths::bijections::{apply, BijectionId, Direction};
use gpaths::enumerate::{
    default_weighting, for_each_rendered, weighted_count_any, EnumSpec, MAX_N_ENV,
};
use gpaths::riordan::{NameExpr, RiordanArray};
use gpaths::series::{named, SeriesName, DEFAULT_ORDER};
use gpaths::stats::{stat_table, Method, StatId, StatTable};
use gpaths::verify::{run_suite, Suite};
use gpaths::{Error, FamilyKind, PathFamily, Pattern, Surface, Weighting};

#[derive(Parser)]
#[command(
    name = "gpaths",
    version,
    about = "Weighted lattice path enumeration, bijections and level statistics"
)]
struct Cli {
    /// Raise the enumeration size guard for this run.
    #[arg(long, global = true, value_name = "N")]
    max_n_override: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print every path of a family, one per line.
    Enumerate(FamilyArgs),
    /// Weighted count of a family as a polynomial, or its value at --weights.
    Count {
        #[command(flatten)]
        family: FamilyArgs,
        /// Step weighting; defaults to the family's own.
        #[arg(long)]
        weighting: Option<Weighting>,
        /// Evaluate at a,b,c (rationals such as 1,-3/2,4).
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        weights: Option<Vec<BigRational>>,
    },
    /// Apply a bijection to one path.
    Map {
        #[arg(long)]
        bijection: BijectionId,
        #[arg(long, default_value = "fwd")]
        direction: Direction,
        #[arg(long)]
        input: String,
        /// Also print the recursion cases taken.
        #[arg(long)]
        trace: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Coefficients of a named series.
    Series {
        #[arg(long)]
        name: SeriesName,
        #[arg(long, default_value_t = DEFAULT_ORDER)]
        order: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Triangle of the Riordan array (d, h).
    Riordan {
        #[arg(long)]
        d: NameExpr,
        #[arg(long)]
        h: NameExpr,
        #[arg(long, default_value_t = 6)]
        nmax: usize,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Level statistic triangle by one route or all of them.
    Table {
        #[arg(long)]
        stat: StatId,
        /// brute, riordan, formula or all.
        #[arg(long, default_value = "all")]
        method: MethodChoice,
        #[arg(long, default_value_t = 6)]
        nmax: usize,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long, default_value = "all")]
        suite: Suite,
        /// Cap every size bound of the suite.
        #[arg(long)]
        nmax: Option<usize>,
    },
}

#[derive(Args)]
struct FamilyArgs {
    #[arg(long)]
    family: FamilyKind,
    #[arg(long, alias = "nmax")]
    length: usize,
    /// Forbidden patterns, comma separated: uvu, uu, uh, hu.
    #[arg(long, value_delimiter = ',')]
    avoid: Vec<Pattern>,
    /// Exclude paths with a level step on the x-axis.
    #[arg(long)]
    no_h_on_axis: bool,
}

impl FamilyArgs {
    fn spec(&self) -> EnumSpec {
        let mut fam = PathFamily::new(self.family).avoiding(&self.avoid);
        if self.no_h_on_axis {
            fam = fam.with_surface(Surface::NoHOnAxis);
        }
        EnumSpec::new(fam, self.length)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Clone, Copy)]
enum MethodChoice {
    One(Method),
    All,
}

impl std::str::FromStr for MethodChoice {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        if s == "all" {
            Ok(MethodChoice::All)
        } else {
            s.parse().map(MethodChoice::One)
        }
    }
}

enum Failure {
    Usage(String),
    Verification,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn json_int(v: &BigInt) -> Value {
    i64::try_from(v).map_or_else(|_| Value::String(v.to_string()), Value::from)
}

fn json_rows(rows: &[Vec<BigInt>]) -> Value {
    Value::Array(
        rows.iter()
            .map(|r| Value::Array(r.iter().map(json_int).collect()))
            .collect(),
    )
}

fn write_csv(out: &mut impl Write, rows: &[Vec<BigInt>]) -> io::Result<()> {
    for r in rows {
        let line: Vec<String> = r.iter().map(ToString::to_string).collect();
        writeln!(out, "{}", line.join(","))?;
    }
    Ok(())
}

fn table_json(t: &StatTable) -> Value {
    json!({ "stat": t.stat.name(), "method": t.method.name(), "rows": json_rows(&t.rows) })
}

fn run(cli: Cli, out: &mut impl Write) -> Result<(), Failure> {
    match cli.command {
        Command::Enumerate(args) => {
            let mut result = Ok(());
            for_each_rendered(&args.spec(), |p| {
                if result.is_ok() {
                    result = writeln!(out, "{p}");
                }
            })?;
            result?;
        }
        Command::Count {
            family,
            weighting,
            weights,
        } => {
            let w = weighting.unwrap_or_else(|| default_weighting(family.family));
            let poly = weighted_count_any(&family.spec(), w)?;
            match weights.as_deref() {
                None => writeln!(out, "{poly}")?,
                Some([a, b, c]) => writeln!(out, "{}", poly.eval(a, b, c))?,
                Some(_) => {
                    return Err(Failure::Usage(
                        "--weights needs exactly three values a,b,c".into(),
                    ))
                }
            }
        }
        Command::Map {
            bijection,
            direction,
            input,
            trace,
            format,
        } => {
            let m = apply(bijection, direction, &input)?;
            match format {
                Format::Json => {
                    let v = json!({ "input": input, "output": m.output, "trace": m.trace });
                    writeln!(out, "{v}")?;
                }
                _ => {
                    writeln!(out, "{}", m.output)?;
                    if trace {
                        writeln!(out, "trace: {}", m.trace.join(" "))?;
                    }
                }
            }
        }
        Command::Series {
            name,
            order,
            format,
        } => {
            let s = named(name, order);
            match format {
                Format::Json => {
                    let coeffs: Vec<Value> = s.int_coeffs()?.iter().map(json_int).collect();
                    writeln!(
                        out,
                        "{}",
                        json!({ "name": name.symbol(), "order": order, "coeffs": coeffs })
                    )?;
                }
                _ => writeln!(out, "{s}")?,
            }
        }
        Command::Riordan { d, h, nmax, format } => {
            let rows = RiordanArray::new(d.eval(nmax), h.eval(nmax))?.matrix(nmax)?;
            match format {
                Format::Json => writeln!(out, "{}", json!({ "rows": json_rows(&rows) }))?,
                _ => write_csv(out, &rows)?,
            }
        }
        Command::Table {
            stat,
            method,
            nmax,
            format,
        } => {
            let methods: Vec<Method> = match method {
                MethodChoice::One(m) => vec![m],
                MethodChoice::All => stat.methods().to_vec(),
            };
            let tables = methods
                .into_iter()
                .map(|m| stat_table(stat, m, nmax))
                .collect::<Result<Vec<_>, _>>()?;
            let agree = tables.windows(2).all(|w| w[0].rows == w[1].rows);
            let all = matches!(method, MethodChoice::All);
            match (format, all) {
                (Format::Json, false) => writeln!(out, "{}", table_json(&tables[0]))?,
                (Format::Json, true) => {
                    let v = json!({
                        "stat": stat.name(),
                        "tables": tables.iter().map(table_json).collect::<Vec<_>>(),
                        "agree": agree,
                    });
                    writeln!(out, "{v}")?;
                }
                (_, false) => write_csv(out, &tables[0].rows)?,
                (_, true) => {
                    for t in &tables {
                        writeln!(out, "# {} {}", t.stat, t.method)?;
                        write_csv(out, &t.rows)?;
                    }
                    writeln!(out, "# agree: {agree}")?;
                }
            }
            if !agree {
                return Err(Failure::Verification);
            }
        }
        Command::Verify { suite, nmax } => {
            let checks = run_suite(suite, nmax);
            for c in &checks {
                writeln!(out, "{c}")?;
            }
            let passed = checks.iter().all(|c| c.passed);
            writeln!(out, "{}", if passed { "PASS" } else { "FAIL" })?;
            if !passed {
                return Err(Failure::Verification);
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.max_n_override {
        std::env::set_var(MAX_N_ENV, n.to_string());
    }
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = run(cli, &mut out);
    let flushed = out.flush();
    match (result, flushed) {
        (Ok(()), Ok(())) => ExitCode::SUCCESS,
        (Err(Failure::Verification), _) => ExitCode::from(1),
        (Err(Failure::Usage(msg)), _) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        (Ok(()), Err(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
