//! The `wstar` command line.
//!
//! Results go to `out`, diagnostics to `err`. Exit status is 0 on success,
//! 1 on a usage or input error, and 2 when `verify` finds a mismatch.

use std::ffi::OsString;
use std::io::{self, Write};

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::egyptian::{count_affine, enumerate_affine, EnumQuery};
use crate::exact::bareiss_determinant;
use crate::graph::{classify_general, WeightedGraph};
use crate::star::{
    build_star_matrix, checked_dimension, join, tau_decompose, tau_product, AffineSolution, StarShape,
    DEFAULT_THRESHOLD,
};
use crate::table::{emit_dot, json_rows, render_table, verify_reference_tables, TableFormat};
use crate::Error;

#[derive(Debug, Parser)]
#[command(name = "wstar", version, about = "Exact classification and enumeration of weighted star matrices")]
struct Cli {
    /// Largest matrix dimension that may be built explicitly.
    #[arg(long, global = true, default_value_t = DEFAULT_THRESHOLD, value_name = "N")]
    threshold: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Classify B(k; r_1,...,r_m) as finite, affine or indefinite.
    Classify {
        #[command(flatten)]
        shape: ShapeArgs,
        /// Also build the matrix and confirm the verdict from its inertia.
        #[arg(long)]
        check: bool,
    },
    /// Print det B(k; r_1,...,r_m).
    Det {
        #[command(flatten)]
        shape: ShapeArgs,
        /// Also build the matrix and confirm with fraction-free elimination.
        #[arg(long)]
        check: bool,
    },
    /// Print the Coxeter labels of an affine star.
    Labels {
        #[command(flatten)]
        shape: ShapeArgs,
        #[arg(long, value_enum, default_value_t = LabelFormat::Text)]
        format: LabelFormat,
    },
    /// List every affine star with m arms and p = m - k.
    Enumerate {
        #[arg(short, value_parser = clap::value_parser!(u64).range(2..))]
        m: u64,
        #[arg(short, value_parser = clap::value_parser!(u64).range(1..))]
        p: u64,
        /// Only list solutions with dimension at most this.
        #[arg(long = "dmax", value_name = "D")]
        d_max: Option<u64>,
        /// List at most this many solutions.
        #[arg(long, conflicts_with = "count_only")]
        limit: Option<usize>,
        /// Print only the number of solutions.
        #[arg(long)]
        count_only: bool,
        #[arg(long, value_enum, default_value_t = ListFormat::Text)]
        format: ListFormat,
        /// With `--format dot`, annotate nodes with Coxeter labels.
        #[arg(long)]
        with_labels: bool,
    },
    /// Count the affine stars with m arms and p = m - k.
    Count {
        #[arg(short, value_parser = clap::value_parser!(u64).range(2..))]
        m: u64,
        #[arg(short, value_parser = clap::value_parser!(u64).range(1..))]
        p: u64,
    },
    /// Tau-product of two affine stars given by their arms.
    Tau {
        /// Arms of one factor; give the flag twice.
        #[arg(short, value_parser = parse_arms, num_args = 1, required = true)]
        r: Vec<Arms>,
    },
    /// Split an affine star into two affine tau-factors, if possible.
    Decompose {
        #[arg(short, value_parser = parse_arms)]
        r: Arms,
    },
    /// Emit the star graph in Graphviz DOT.
    Dot {
        #[command(flatten)]
        shape: ShapeArgs,
        /// Annotate nodes with Coxeter labels (affine stars only).
        #[arg(long)]
        with_labels: bool,
        #[arg(long, value_enum, default_value_t = GraphFormat::Dot)]
        format: GraphFormat,
    },
    /// Regenerate every reference table and count and compare.
    Verify,
}

#[derive(Debug, Args)]
struct ShapeArgs {
    /// Central weight.
    #[arg(short, required_unless_present = "p", conflicts_with = "p", value_parser = clap::value_parser!(u64).range(1..))]
    k: Option<u64>,
    /// Give m - k instead of k.
    #[arg(short, value_parser = clap::value_parser!(u64).range(1..))]
    p: Option<u64>,
    /// Arm lengths, comma separated.
    #[arg(short, value_parser = parse_arms)]
    r: Arms,
}

impl ShapeArgs {
    fn shape(&self) -> Result<StarShape, Error> {
        let k = match (self.k, self.p) {
            (Some(k), _) => k,
            (None, Some(p)) => (self.r.0.len() as u64).checked_sub(p).filter(|&k| k >= 1).ok_or_else(|| {
                Error::InvalidArgument(format!("p = {p} leaves no positive weight for {} arms", self.r.0.len()))
            })?,
            (None, None) => unreachable!("clap requires -k or -p"),
        };
        StarShape::new(k, self.r.0.clone())
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum LabelFormat {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ListFormat {
    Text,
    Csv,
    Json,
    Tex,
    Dot,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum GraphFormat {
    Dot,
}

/// A comma-separated list of arm lengths.
#[derive(Debug, Clone, PartialEq, Eq)]
struct Arms(Vec<u64>);

fn parse_arms(s: &str) -> Result<Arms, String> {
    s.split(',')
        .map(|part| {
            let part = part.trim();
            match part.parse::<u64>() {
                Ok(0) => Err("arm lengths must be positive".to_string()),
                Ok(r) => Ok(r),
                Err(_) => Err(format!("'{part}' is not a positive integer")),
            }
        })
        .collect::<Result<_, _>>()
        .map(Arms)
}

enum Failure {
    Usage(String),
    Mismatch,
    Io,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(_: io::Error) -> Self {
        Failure::Io
    }
}

/// Parses `args` (program name first) and executes the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    if out.write_all(text.as_bytes()).is_err() {
                        return 1;
                    }
                    0
                }
                _ => {
                    let _ = err.write_all(text.as_bytes());
                    1
                }
            };
        }
    };
    match execute(&cli, out, err).and_then(|()| out.flush().map_err(Failure::from)) {
        Ok(()) => 0,
        Err(Failure::Usage(message)) => {
            let _ = writeln!(err, "error: {message}");
            1
        }
        Err(Failure::Mismatch) => 2,
        Err(Failure::Io) => 1,
    }
}

fn execute(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), Failure> {
    match &cli.command {
        Command::Classify { shape, check } => {
            let shape = shape.shape()?;
            let class = shape.classify();
            writeln!(out, "{class} (S = {}), D = {}", shape.schur_scalar(), shape.dimension())?;
            if *check {
                checked_dimension(&shape, cli.threshold)?;
                let general = classify_general(&WeightedGraph::star(&shape))?;
                if general.class != class {
                    writeln!(err, "error: inertia {} gives {}", general.inertia, general.class)?;
                    return Err(Failure::Mismatch);
                }
                writeln!(out, "inertia {} agrees", general.inertia)?;
            }
        }
        Command::Det { shape, check } => {
            let shape = shape.shape()?;
            let det = shape.determinant_closed();
            writeln!(out, "{det}")?;
            if *check {
                let direct = bareiss_determinant(&build_star_matrix(&shape, cli.threshold)?);
                if direct != det {
                    writeln!(err, "error: elimination gives {direct}")?;
                    return Err(Failure::Mismatch);
                }
                writeln!(out, "elimination agrees")?;
            }
        }
        Command::Labels { shape, format } => {
            let sol = AffineSolution::from_shape(shape.shape()?)?;
            write_labels(out, &sol, *format)?;
        }
        Command::Enumerate { m, p, d_max, limit, count_only, format, with_labels } => {
            let m = usize::try_from(*m).map_err(|_| Error::InvalidArgument(format!("m = {m} is too large")))?;
            let query = EnumQuery { m, p: *p, d_max: *d_max, limit: *limit, count_only: *count_only };
            let result = enumerate_affine(&query)?;
            if let Some(why) = &result.diagnostic {
                writeln!(err, "note: {why}")?;
            }
            if *count_only {
                writeln!(out, "{}", result.total)?;
                return Ok(());
            }
            let sols = &result.solutions;
            match format {
                ListFormat::Text => {
                    out.write_all(render_table(sols, TableFormat::Text).as_bytes())?;
                    writeln!(out, "{} of {} solutions shown", sols.len(), result.total)?;
                }
                ListFormat::Csv => out.write_all(render_table(sols, TableFormat::Csv).as_bytes())?,
                ListFormat::Tex => out.write_all(render_table(sols, TableFormat::Tex).as_bytes())?,
                ListFormat::Json => {
                    let doc = json!({
                        "m": m,
                        "p": p.to_string(),
                        "k": (m as u64).saturating_sub(*p).to_string(),
                        "total": result.total.to_string(),
                        "shown": sols.len(),
                        "rows": json_rows(sols),
                    });
                    writeln!(out, "{}", serde_json::to_string_pretty(&doc).expect("json serializes"))?;
                }
                ListFormat::Dot => {
                    for sol in sols {
                        out.write_all(emit_dot(sol.shape(), *with_labels)?.as_bytes())?;
                    }
                }
            }
        }
        Command::Count { m, p } => {
            let m = usize::try_from(*m).map_err(|_| Error::InvalidArgument(format!("m = {m} is too large")))?;
            writeln!(out, "{}", count_affine(m, *p)?)?;
        }
        Command::Tau { r } => {
            if r.len() != 2 {
                return Err(Failure::Usage(format!("tau takes exactly two arm lists, got {}", r.len())));
            }
            let a = AffineSolution::from_arms(r[0].0.clone())?;
            let b = AffineSolution::from_arms(r[1].0.clone())?;
            write_solution(out, &tau_product(&a, &b))?;
        }
        Command::Decompose { r } => {
            let sol = AffineSolution::from_arms(r.0.clone())?;
            match tau_decompose(&sol) {
                Some((a, b)) => writeln!(out, "{a} tau {b}")?,
                None => writeln!(out, "{sol} is tau-primitive")?,
            }
        }
        Command::Dot { shape, with_labels, format: GraphFormat::Dot } => {
            out.write_all(emit_dot(&shape.shape()?, *with_labels)?.as_bytes())?;
        }
        Command::Verify => {
            let report = verify_reference_tables();
            write!(out, "{report}")?;
            if !report.passed() {
                writeln!(err, "error: reference tables do not match")?;
                return Err(Failure::Mismatch);
            }
        }
    }
    Ok(())
}

fn write_solution(out: &mut dyn Write, sol: &AffineSolution) -> io::Result<()> {
    writeln!(
        out,
        "{} = {}, D = {}, s = {}, h = {}, labels {}",
        sol.type_string(),
        sol.shape(),
        sol.dimension(),
        sol.s(),
        sol.coxeter_number(),
        sol.label_string()
    )
}

fn write_labels(out: &mut dyn Write, sol: &AffineSolution, format: LabelFormat) -> io::Result<()> {
    let labels = sol.labels();
    let shape = sol.shape();
    match format {
        LabelFormat::Text => {
            writeln!(out, "{} = {}", sol.type_string(), shape)?;
            writeln!(out, "D = {}", sol.dimension())?;
            writeln!(out, "s = {}", sol.s())?;
            writeln!(out, "h = {}", sol.coxeter_number())?;
            writeln!(out, "x = ({})", join(sol.x()))?;
            writeln!(out, "center: {}", labels.center)?;
            for (i, (arm, r)) in labels.arms.iter().zip(shape.arms()).enumerate() {
                let values: Vec<String> = arm.iter().map(|c| c.to_string()).collect();
                writeln!(out, "arm {} (r = {r}): {}", i + 1, values.join(","))?;
            }
        }
        LabelFormat::Json => {
            let arms: Vec<Vec<String>> = labels.arms.iter().map(|a| a.iter().map(|c| c.to_string()).collect()).collect();
            let doc = json!({
                "type": sol.type_string(),
                "k": shape.k().to_string(),
                "p": sol.p().to_string(),
                "arms": shape.arms().iter().map(u64::to_string).collect::<Vec<_>>(),
                "D": sol.dimension().to_string(),
                "s": sol.s().to_string(),
                "h": sol.coxeter_number().to_string(),
                "x": sol.x().iter().map(|v| v.to_string()).collect::<Vec<_>>(),
                "labels": { "center": labels.center.to_string(), "arms": arms },
            });
            writeln!(out, "{}", serde_json::to_string_pretty(&doc).expect("json serializes"))?;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("wstar").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn arm_lists() {
        assert_eq!(parse_arms("1,2,5"), Ok(Arms(vec![1, 2, 5])));
        assert_eq!(parse_arms(" 3 , 3"), Ok(Arms(vec![3, 3])));
        assert!(parse_arms("1,,2").is_err());
        assert!(parse_arms("1,0").is_err());
        assert!(parse_arms("-1").is_err());
        assert!(parse_arms("x").is_err());
    }

    #[test]
    fn classify_e6() {
        assert_eq!(call(&["classify", "-k", "2", "-r", "2,2,2"]), (0, "affine (S = 0), D = 7\n".into(), String::new()));
        let (code, out, _) = call(&["classify", "-k", "3", "-r", "2,2,2"]);
        assert_eq!((code, out.as_str()), (0, "finite (S = 1), D = 7\n"));
        let (_, out, _) = call(&["classify", "-k", "1", "-r", "2,2,2", "--check"]);
        assert_eq!(out, "indefinite (S = -1), D = 7\ninertia (6, 0, 1) agrees\n");
    }

    #[test]
    fn weight_by_p() {
        assert_eq!(call(&["classify", "-p", "1", "-r", "2,2,2"]).1, "affine (S = 0), D = 7\n");
        assert_eq!(call(&["classify", "-p", "3", "-r", "2,2,2"]).0, 1);
        assert_eq!(call(&["classify", "-k", "2", "-p", "1", "-r", "2,2,2"]).0, 1);
    }

    #[test]
    fn usage_errors() {
        for args in [
            &["classify", "-k", "0", "-r", "1,1"][..],
            &["classify", "-k", "2", "-r", "1,x"],
            &["classify", "-k", "2", "-r", "4"],
            &["count", "-m", "1", "-p", "1"],
            &["enumerate", "-m", "4", "-p", "1", "--count-only", "--limit", "3"],
            &["labels", "-k", "3", "-r", "1,2,5"],
            &["frobnicate"],
        ] {
            let (code, out, err) = call(args);
            assert_eq!(code, 1, "{args:?}");
            assert!(out.is_empty(), "{args:?}");
            assert!(!err.is_empty(), "{args:?}");
        }
    }

    #[test]
    fn help_goes_to_stdout() {
        let (code, out, err) = call(&["--help"]);
        assert_eq!(code, 0);
        assert!(out.contains("enumerate"));
        assert!(out.contains("--threshold"));
        assert!(err.is_empty());
    }

    #[test]
    fn threshold_blocks_large_checks() {
        let (code, _, err) = call(&["det", "-k", "2", "-r", "1,2,5", "--check", "--threshold", "8"]);
        assert_eq!(code, 1);
        assert!(err.contains("too large"));
        assert_eq!(call(&["det", "-k", "2", "-r", "1,2,5", "--check"]).1, "0\nelimination agrees\n");
    }
}
