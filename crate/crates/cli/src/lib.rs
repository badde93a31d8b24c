//! Command-line front end. [`run`] is the whole program; `main` only wires it
//! to the process streams and exit code.

use clap::{Args, CommandFactory, Parser, Subcommand, ValueEnum};
use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use weylalt::altcond::{theorem_case, ClosedForm};
use weylalt::geometry::{classify_shape, diagram_with, Window};
use weylalt::kwmf::{alt_set_oracle, multiplicity};
use weylalt::render::{emit_csv, emit_svg, emit_tikz, Palette};
use weylalt::rootsys::{algebra_data, weyl_group, Algebra};
use weylalt::sweep::{verify_with, Mode};
use weylalt::weightlat::{weight_in, Basis, Weight};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "weylalt", version, about = "Weight multiplicities and Weyl alternation sets in rank 2")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Roots, fundamental weights, rho, Weyl group and its action
    Info { algebra: Algebra },
    /// Kostant partition function of a1*alpha1 + a2*alpha2
    #[command(allow_negative_numbers = true)]
    Partition { algebra: Algebra, a1: i64, a2: i64 },
    /// Weight multiplicity m(lambda, mu) and its alternation set
    Mult(PairArgs),
    /// Closed-form and brute-force alternation sets side by side
    Altset(PairArgs),
    /// Weyl alternation diagram for a fixed mu
    Diagram(DiagramArgs),
    /// Sweep the closed form against the oracle
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum BasisArg {
    Fund,
    Root,
}

impl From<BasisArg> for Basis {
    fn from(b: BasisArg) -> Basis {
        match b {
            BasisArg::Fund => Basis::Fund,
            BasisArg::Root => Basis::Root,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Svg,
    Csv,
    Tikz,
}

#[derive(Args, Debug)]
struct PairArgs {
    algebra: Algebra,
    #[arg(long, value_parser = parse_pair, allow_hyphen_values = true)]
    lambda: (i64, i64),
    #[arg(long, value_parser = parse_pair, allow_hyphen_values = true)]
    mu: (i64, i64),
    /// Basis for both weights; defaults to each weight's usual convention
    #[arg(long, value_enum)]
    basis: Option<BasisArg>,
}

#[derive(Args, Debug)]
struct DiagramArgs {
    algebra: Algebra,
    #[arg(long, value_parser = parse_pair, allow_hyphen_values = true, default_value = "0,0")]
    mu: (i64, i64),
    #[arg(long, value_enum)]
    basis: Option<BasisArg>,
    /// Half-width W of the window [-W, W]^2
    #[arg(long, default_value_t = Window::DEFAULT_HALF_WIDTH as u32)]
    window: u32,
    #[arg(long, value_enum, default_value = "svg")]
    format: Format,
    /// Output file; stdout when absent
    #[arg(long)]
    out: Option<PathBuf>,
    /// Print the shape label of the empty region
    #[arg(long)]
    classify: bool,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    algebra: Algebra,
    #[arg(long, default_value_t = 15)]
    lambda_window: u32,
    #[arg(long, default_value_t = 4)]
    mu_max: u32,
    /// One line per (lambda, mu) point
    #[arg(long)]
    verbose: bool,
}

fn parse_pair(s: &str) -> Result<(i64, i64), String> {
    let (a, b) = s.split_once(',').ok_or_else(|| format!("expected two comma-separated integers, got `{s}`"))?;
    let p = |t: &str| t.trim().parse::<i64>().map_err(|e| format!("`{t}`: {e}"));
    Ok((p(a)?, p(b)?))
}

fn weights(alg: Algebra, args: &PairArgs) -> (Weight, Weight) {
    let lb = args.basis.map_or(Basis::lambda_default(alg), Into::into);
    let mb = args.basis.map_or(Basis::mu_default(alg), Into::into);
    (weight_in(alg, lb, args.lambda), weight_in(alg, mb, args.mu))
}

/// Runs with the standard condition tables.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run_with(args, None, out, err)
}

/// Like [`run`], but `form` replaces the standard closed form for its algebra.
pub fn run_with<I, T>(args: I, form: Option<&ClosedForm>, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let msg = e.render().to_string();
            let _ = write!(target, "{msg}");
            if e.use_stderr() && !msg.contains("Usage:") {
                let _ = writeln!(target, "\n{}", Cli::command().render_usage());
            }
            return code;
        }
    };
    let pick = |alg: Algebra| -> &ClosedForm {
        match form {
            Some(f) if f.algebra == alg => f,
            _ => ClosedForm::standard(alg),
        }
    };
    let result = match cli.command {
        Command::Info { algebra } => info(algebra, out),
        Command::Partition { algebra, a1, a2 } => {
            writeln!(out, "{}", weylalt::kostant::partition(algebra, Weight::from_ints(a1, a2))).map(|_| EXIT_OK)
        }
        Command::Mult(a) => mult(&a, out),
        Command::Altset(a) => altset(pick(a.algebra), &a, out),
        Command::Diagram(a) => match diagram_cmd(pick(a.algebra), &a, out) {
            Ok(code) => Ok(code),
            Err(DiagramError::Usage(msg)) => {
                let _ = writeln!(err, "error: {msg}");
                Ok(EXIT_USAGE)
            }
            Err(DiagramError::Io(e)) => Err(e),
        },
        Command::Verify(a) => verify_cmd(pick(a.algebra), &a, out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn info(alg: Algebra, out: &mut dyn Write) -> std::io::Result<i32> {
    let d = algebra_data(alg);
    let g = weyl_group(alg);
    writeln!(out, "algebra {alg}")?;
    writeln!(out, "positive roots:")?;
    for r in &d.positive_roots {
        writeln!(out, "  {r}")?;
    }
    writeln!(out, "w1 = {}", d.fundamental_weights[0])?;
    writeln!(out, "w2 = {}", d.fundamental_weights[1])?;
    writeln!(out, "rho = {}", d.rho)?;
    writeln!(out, "weyl group, order {}:", g.len())?;
    let width = g.iter().map(|e| e.name().len()).max().unwrap_or(1);
    for e in g.iter() {
        writeln!(out, "  {:<width$}  length {}", e.name(), e.length)?;
    }
    writeln!(out, "action on simple roots:")?;
    for e in g.iter() {
        let m = &e.matrix;
        writeln!(
            out,
            "  {:<width$}  a1 -> {:<16} a2 -> {}",
            e.name(),
            m.apply(&Weight::from_ints(1, 0)).to_string(),
            m.apply(&Weight::from_ints(0, 1))
        )?;
    }
    Ok(EXIT_OK)
}

fn mult(args: &PairArgs, out: &mut dyn Write) -> std::io::Result<i32> {
    let alg = args.algebra;
    let (lambda, mu) = weights(alg, args);
    let g = weyl_group(alg);
    writeln!(out, "lambda = {lambda}")?;
    writeln!(out, "mu = {mu}")?;
    writeln!(out, "multiplicity = {}", multiplicity(alg, &lambda, &mu))?;
    writeln!(out, "set = {}", alt_set_oracle(alg, &lambda, &mu).describe(g, "e"))?;
    Ok(EXIT_OK)
}

fn altset(form: &ClosedForm, args: &PairArgs, out: &mut dyn Write) -> std::io::Result<i32> {
    let alg = args.algebra;
    let (lambda, mu) = weights(alg, args);
    let g = weyl_group(alg);
    let closed = form.alt_set(&lambda, &mu);
    let oracle = alt_set_oracle(alg, &lambda, &mu);
    writeln!(out, "closed = {}", closed.describe(g, "e"))?;
    writeln!(out, "oracle = {}", oracle.describe(g, "e"))?;
    if matches!(alg, Algebra::B2 | Algebra::C2 | Algebra::D2) && form == ClosedForm::standard(alg) {
        if let Ok(Some(case)) = theorem_case(alg, &lambda, &mu) {
            writeln!(out, "case = {}", case.label)?;
        }
    }
    if closed == oracle {
        Ok(EXIT_OK)
    } else {
        writeln!(out, "MISMATCH")?;
        Ok(EXIT_MISMATCH)
    }
}

enum DiagramError {
    Usage(String),
    Io(std::io::Error),
}

impl From<std::io::Error> for DiagramError {
    fn from(e: std::io::Error) -> Self {
        DiagramError::Io(e)
    }
}

fn diagram_cmd(form: &ClosedForm, args: &DiagramArgs, out: &mut dyn Write) -> Result<i32, DiagramError> {
    let alg = args.algebra;
    let basis = args.basis.map_or(Basis::mu_default(alg), Into::into);
    let mu = weight_in(alg, basis, args.mu);
    if args.classify {
        let label = classify_shape(alg, &mu).map_err(|e| DiagramError::Usage(e.to_string()))?;
        writeln!(out, "{label}")?;
        if args.out.is_none() {
            return Ok(EXIT_OK);
        }
    }
    let grid = diagram_with(form, &mu, Window::square(args.window as i64), Mode::default_mode());
    let palette = Palette::default();
    let bytes = match args.format {
        Format::Svg => emit_svg(&grid, &palette),
        Format::Csv => emit_csv(&grid),
        Format::Tikz => emit_tikz(&grid, &palette),
    };
    match &args.out {
        Some(path) => std::fs::write(path, bytes)?,
        None => out.write_all(&bytes)?,
    }
    Ok(EXIT_OK)
}

fn verify_cmd(form: &ClosedForm, args: &VerifyArgs, out: &mut dyn Write) -> std::io::Result<i32> {
    let g = weyl_group(args.algebra);
    let report = verify_with(form, args.lambda_window as i64, args.mu_max as i64, Mode::default_mode());
    if args.verbose {
        for r in &report.results {
            writeln!(
                out,
                "lambda={},{} mu={},{} closed={} oracle={}{}",
                r.lambda.0,
                r.lambda.1,
                r.mu.0,
                r.mu.1,
                r.closed.describe(g, "e"),
                r.oracle.describe(g, "e"),
                if r.agrees() { "" } else { " MISMATCH" }
            )?;
        }
    }
    writeln!(out, "{}", report.summary())?;
    Ok(if report.mismatches() == 0 { EXIT_OK } else { EXIT_MISMATCH })
}
