use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use qhankel_core::exactalg::render::{
    laurent_json, laurent_latex, laurent_text, mpoly_json_value, mpoly_latex, mpoly_text,
};
use qhankel_core::hankel::{verify_case, MomentFamily, Theorem};
use qhankel_core::rstirling::{falling, falling_scaled, StirlingTable};
use qhankel_core::{big_h_poly, g_poly, h_poly, run_suite, MPoly, QLaurent, Suite, VerifyConfig};

mod output;

use output::{Format, Sink};

#[derive(Parser, Debug)]
#[command(
    name = "qhankel",
    version,
    about = "Exact q-Stirling numbers, q-exponential polynomials and their Hankel determinants"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, env = "QHANKEL_FORMAT", default_value = "text")]
    format: Format,

    /// Worker threads for `verify` (defaults to the number of CPUs).
    #[arg(long, global = true, value_parser = clap::value_parser!(u32).range(1..))]
    parallelism: Option<u32>,

    /// Seed for the randomized determinant cross-check.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the triangle S(m, k, r) for m <= n, or one entry with --k.
    Stirling(StirlingArgs),
    /// Print one polynomial.
    Poly(PolyArgs),
    /// Run verification suites; exits 1 if any check fails.
    Verify(VerifyArgs),
    /// Print a Hankel determinant next to its closed form.
    Hankel(HankelArgs),
}

#[derive(Args, Debug)]
struct StirlingArgs {
    #[arg(long)]
    n: u32,
    #[arg(long)]
    k: Option<u32>,
    #[arg(long, allow_negative_numbers = true)]
    r: i64,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum PolyFamily {
    Phi,
    Bigphi,
    #[value(name = "h")]
    H,
    #[value(name = "g")]
    G,
    #[value(name = "H")]
    BigH,
    Falling,
    Falling2,
}

#[derive(Args, Debug)]
struct PolyArgs {
    #[arg(long, value_enum)]
    family: PolyFamily,
    #[arg(long)]
    n: u32,
    #[arg(long, allow_negative_numbers = true)]
    r: i64,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long, default_value = "all")]
    suite: Suite,
    #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(u32).range(1..))]
    n_max: u32,
    /// Comma-separated list of r values.
    #[arg(
        long,
        value_delimiter = ',',
        allow_negative_numbers = true,
        default_value = "0,1,2,3"
    )]
    r: Vec<i64>,
    #[arg(long, default_value_t = 12, value_parser = clap::value_parser!(u32).range(1..))]
    order: u32,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum HankelFamily {
    Phi,
    Bigphi,
}

#[derive(Args, Debug)]
struct HankelArgs {
    #[arg(long, value_enum)]
    family: HankelFamily,
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    n: u32,
    #[arg(long, default_value_t = 0, value_parser = clap::value_parser!(u32).range(0..=1))]
    offset: u32,
    #[arg(long, allow_negative_numbers = true)]
    r: i64,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut sink = Sink::new(stdout.lock(), cli.format);
    let result = match &cli.command {
        Command::Stirling(a) => cmd_stirling(&mut sink, a).map(|_| true),
        Command::Poly(a) => cmd_poly(&mut sink, a).map(|_| true),
        Command::Hankel(a) => cmd_hankel(&mut sink, a),
        Command::Verify(a) => {
            let mut builder = rayon::ThreadPoolBuilder::new();
            if let Some(p) = cli.parallelism {
                builder = builder.num_threads(p as usize);
            }
            let pool = match builder.build() {
                Ok(p) => p,
                Err(e) => {
                    eprintln!("error: {e}");
                    return ExitCode::from(2);
                }
            };
            cmd_verify(&mut sink, a, cli.seed, &pool)
        }
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn entry_text(c: &QLaurent) -> String {
    if c.num_terms() > 1 {
        format!("({})", laurent_text(c))
    } else {
        laurent_text(c)
    }
}

fn cmd_stirling<W: Write>(out: &mut Sink<W>, a: &StirlingArgs) -> io::Result<()> {
    let t = StirlingTable::new(a.r, a.n);
    if let Some(k) = a.k {
        let c = t.get(a.n, k);
        return match out.format() {
            Format::Text => out.line(&laurent_text(&c)),
            Format::Latex => out.line(&laurent_latex(&c)),
            Format::Json => out.json(&serde_json::json!({"n": a.n, "k": k, "r": a.r, "value": laurent_json(&c)})),
        };
    }
    match out.format() {
        Format::Text => {
            for m in 0..=a.n {
                let row: Vec<String> = t.row(m).iter().map(entry_text).collect();
                out.line(&row.join(" "))?;
            }
            Ok(())
        }
        Format::Latex => {
            let cols = "l".repeat(a.n as usize + 1);
            out.line(&format!("\\begin{{array}}{{{cols}}}"))?;
            for m in 0..=a.n {
                let row: Vec<String> = t.row(m).iter().map(laurent_latex).collect();
                out.line(&format!("{} \\\\", row.join(" & ")))?;
            }
            out.line("\\end{array}")
        }
        Format::Json => {
            let rows: Vec<Vec<_>> = (0..=a.n).map(|m| t.row(m).iter().map(laurent_json).collect()).collect();
            out.json(&serde_json::json!({"n": a.n, "r": a.r, "rows": rows}))
        }
    }
}

fn family_poly(family: PolyFamily, n: u32, r: i64) -> MPoly {
    match family {
        PolyFamily::Phi => StirlingTable::new(r, n).phi(n),
        PolyFamily::Bigphi => StirlingTable::new(r, n).bigphi(n),
        PolyFamily::H => h_poly(n, r),
        PolyFamily::G => g_poly(n, r),
        PolyFamily::BigH => big_h_poly(n, r),
        PolyFamily::Falling => falling(n, r),
        PolyFamily::Falling2 => falling_scaled(n, r),
    }
}

fn write_poly<W: Write>(out: &mut Sink<W>, p: &MPoly) -> io::Result<()> {
    match out.format() {
        Format::Text => out.line(&mpoly_text(p)),
        Format::Latex => out.line(&mpoly_latex(p)),
        Format::Json => out.json(&mpoly_json_value(p)),
    }
}

fn cmd_poly<W: Write>(out: &mut Sink<W>, a: &PolyArgs) -> io::Result<()> {
    write_poly(out, &family_poly(a.family, a.n, a.r))
}

fn cmd_hankel<W: Write>(out: &mut Sink<W>, a: &HankelArgs) -> io::Result<bool> {
    let family = match a.family {
        HankelFamily::Phi => MomentFamily::Phi,
        HankelFamily::Bigphi => MomentFamily::BigPhi,
    };
    let theorem: Theorem = family.theorem();
    let rep = verify_case(theorem, a.n, a.r, a.offset);
    match out.format() {
        Format::Json => out.json(&rep.to_json())?,
        Format::Text => {
            out.line(&format!("oracle: {}", mpoly_text(&rep.oracle_det)))?;
            out.line(&format!("closed: {}", mpoly_text(&rep.closed_form)))?;
            out.line(&format!("equal: {}", rep.equal))?;
            if let Some(e) = &rep.error {
                out.line(&format!("error: {e}"))?;
            }
        }
        Format::Latex => {
            out.line(&format!("\\det = {} \\\\", mpoly_latex(&rep.oracle_det)))?;
            out.line(&format!("\\text{{closed}} = {} \\\\", mpoly_latex(&rep.closed_form)))?;
            out.line(&format!("\\text{{equal}} = \\text{{{}}}", rep.equal))?;
        }
    }
    Ok(rep.error.is_none() && rep.equal)
}

fn cmd_verify<W: Write>(out: &mut Sink<W>, a: &VerifyArgs, seed: u64, pool: &rayon::ThreadPool) -> io::Result<bool> {
    let cfg = VerifyConfig {
        n_max: a.n_max,
        r_set: a.r.clone(),
        order: a.order as usize,
        seed,
    };
    let (mut passed, mut failed) = (0usize, 0usize);
    for suite in a.suite.expand() {
        for rep in pool.install(|| run_suite(suite, &cfg)) {
            if rep.passed() {
                passed += 1;
            } else {
                failed += 1;
            }
            match out.format() {
                Format::Json => out.json(&rep.to_json())?,
                Format::Text | Format::Latex => out.line(&rep.to_string())?,
            }
        }
        out.flush()?;
    }
    match out.format() {
        Format::Json => out.json(&serde_json::json!({"passed": passed, "failed": failed}))?,
        Format::Text | Format::Latex => out.line(&format!("{passed} passed, {failed} failed"))?,
    }
    Ok(failed == 0)
}
