use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand};
use ec3_cli::render::{self, Family, Rendered};
use ec3_core::{Curve, PrimeField};

/// Classify, enumerate and count elliptic curves over F_p by their order-3
/// subgroups.
#[derive(Parser)]
#[command(name = "ec3", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Full 3-torsion report for one curve.
    Classify {
        #[command(flatten)]
        prime: PrimeArg,
        #[command(flatten)]
        curve: CurveArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// One representative per isomorphism class of a family.
    Enumerate {
        #[command(flatten)]
        prime: PrimeArg,
        #[arg(long, value_enum)]
        family: Family,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Check every catalogued closed form against the brute-force oracle.
    Verify {
        #[command(flatten)]
        prime: PrimeArg,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// The n-th division polynomial of y^2 = x^3 + Ax + B.
    Divpoly {
        #[command(flatten)]
        prime: PrimeArg,
        #[arg(long, value_name = "A,B", value_delimiter = ',', allow_hyphen_values = true)]
        short: Vec<i64>,
        #[arg(short = 'n', value_parser = clap::value_parser!(i64).range(1..=200))]
        n: i64,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Images of a under the twelve parameter maps of the full-torsion family.
    Orbit {
        #[command(flatten)]
        prime: PrimeArg,
        #[arg(short = 'a', allow_hyphen_values = true)]
        a: i64,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Solutions of x^3 + y^3 = 1 and the decomposition 4p = A^2 + 27B^2.
    Fermat {
        #[command(flatten)]
        prime: PrimeArg,
        #[command(flatten)]
        out: OutputArgs,
    },
}

#[derive(Args)]
struct PrimeArg {
    #[arg(short = 'p', value_name = "PRIME")]
    p: u64,
}

impl PrimeArg {
    fn field(&self) -> anyhow::Result<PrimeField> {
        Ok(PrimeField::new(self.p)?)
    }
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct CurveArgs {
    /// y^2 = x^3 + Ax + B
    #[arg(long, value_name = "A,B", value_delimiter = ',', allow_hyphen_values = true)]
    short: Option<Vec<i64>>,
    /// y^2 + a1xy + a3y = x^3 + a2x^2 + a4x + a6
    #[arg(long, value_name = "a1,a2,a3,a4,a6", value_delimiter = ',', allow_hyphen_values = true)]
    general: Option<Vec<i64>>,
}

#[derive(Args)]
struct OutputArgs {
    /// Print JSON instead of text.
    #[arg(long)]
    json: bool,
    /// Also write the JSON to this file.
    #[arg(long, value_name = "PATH")]
    json_out: Option<PathBuf>,
}

fn coefficients<const N: usize>(field: &PrimeField, values: &[i64], flag: &str) -> anyhow::Result<[ec3_core::Fp; N]> {
    if values.len() != N {
        bail!("--{flag} takes {N} comma-separated integers, got {}", values.len());
    }
    Ok(std::array::from_fn(|k| field.elem(values[k])))
}

fn parse_curve(field: &PrimeField, args: &CurveArgs) -> anyhow::Result<Curve> {
    Ok(match (&args.short, &args.general) {
        (Some(v), _) => {
            let [a, b] = coefficients::<2>(field, v, "short")?;
            Curve::short(*field, a, b)?
        }
        (None, Some(v)) => Curve::new(*field, coefficients::<5>(field, v, "general")?)?,
        (None, None) => bail!("one of --short or --general is required"),
    })
}

fn emit(rendered: &Rendered, out: &OutputArgs) -> anyhow::Result<()> {
    let body = if out.json { rendered.json_string() } else { format!("{}\n", rendered.text) };
    // a closed pipe (`ec3 verify | head`) is not an error
    match std::io::stdout().lock().write_all(body.as_bytes()) {
        Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => return Err(e.into()),
        _ => {}
    }
    if let Some(path) = &out.json_out {
        std::fs::write(path, rendered.json_string()).with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(())
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    let (rendered, out) = match &cli.command {
        Command::Classify { prime, curve, out } => {
            let field = prime.field()?;
            (render::classify(&parse_curve(&field, curve)?)?, out)
        }
        Command::Enumerate { prime, family, out } => (render::enumerate(&prime.field()?, *family)?, out),
        Command::Verify { prime, out } => {
            prime.field()?;
            (render::verify(prime.p)?, out)
        }
        Command::Divpoly { prime, short, n, out } => {
            let field = prime.field()?;
            let [a, b] = coefficients::<2>(&field, short, "short")?;
            (render::divpoly(&field, a, b, *n)?, out)
        }
        Command::Orbit { prime, a, out } => {
            let field = prime.field()?;
            (render::orbit(&field, field.elem(*a))?, out)
        }
        Command::Fermat { prime, out } => (render::fermat(&prime.field()?)?, out),
    };
    emit(&rendered, out)?;
    Ok(if rendered.mismatch { ExitCode::from(2) } else { ExitCode::SUCCESS })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
