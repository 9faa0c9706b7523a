//! Command-line front end. [`run`] is the whole program minus process setup,
//! so tests can drive it with in-memory streams.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use econv::arith::{format_rational, parse_rational, truncate_decimal};
use econv::constants::{eform_decimal, piform_decimal};
use econv::integral::{beta_bound, IntegralIndex};
use econv::pi::{lucas_search, pi_eval_exact, PiIntegrandParams};
use econv::theorem::{approx_e, bracket_e, verify_range};
use econv::{cf, integral, Rational};
use serde_json::{json, Value};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

const DEFAULT_DIGITS: usize = 12;

#[derive(Debug, Parser)]
#[command(name = "econv", version, about = "Exact integrals, convergents and certified brackets of e and pi")]
struct Cli {
    /// Emit one JSON object per result line.
    #[arg(long, global = true)]
    json: bool,

    /// Fractional digits for rendered decimals.
    #[arg(long, value_name = "D")]
    digits: Option<usize>,

    /// Also write stdout to this file.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Render {
    /// Fractional digits for rendered decimals (overrides the top-level flag).
    #[arg(long, value_name = "D")]
    digits: Option<usize>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Exact value of ∫₀¹ xⁿ(1−x)ᵐ eˣ dx.
    Eval {
        n: usize,
        m: usize,
        #[command(flatten)]
        render: Render,
    },
    /// The first K convergents of e.
    Convergents {
        #[arg(long, value_parser = positive)]
        count: usize,
        #[command(flatten)]
        render: Render,
    },
    /// Check the integral/convergent identities for every k ≤ K.
    Verify {
        #[arg(long = "max-k", value_parser = positive)]
        max_k: usize,
    },
    /// Certified bracket of e from I(k,k) and I(k+1,k+1).
    Bracket {
        #[arg(long, value_parser = positive)]
        k: usize,
        #[command(flatten)]
        render: Render,
    },
    /// Certified decimal digits of e.
    Approx {
        #[arg(long, value_parser = positive)]
        digits: usize,
    },
    /// Integrals with a 1 + x² denominator.
    #[command(subcommand)]
    Pi(PiCommand),
}

#[derive(Debug, Subcommand)]
enum PiCommand {
    /// Exact value of ∫₀¹ xⁿ(1−x)ᵐ(a+bx+cx²)/(1+x²) dx.
    Eval {
        n: usize,
        m: usize,
        a: u64,
        b: u64,
        c: u64,
        #[command(flatten)]
        render: Render,
    },
    /// Integrands whose value is s·(pi − target).
    Search {
        #[arg(long, value_parser = rational_arg, value_name = "P/Q")]
        target: Rational,
        #[arg(long = "max-nm", default_value_t = 10)]
        max_nm: usize,
        #[arg(long = "max-coeff", default_value_t = 1000)]
        max_coeff: u64,
    },
}

fn positive(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be at least 1".into()),
        Ok(v) => Ok(v),
        Err(e) => Err(e.to_string()),
    }
}

fn rational_arg(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

struct Output {
    json: bool,
    buf: Vec<u8>,
}

impl Output {
    fn line(&mut self, text: impl AsRef<str>) {
        self.buf.extend_from_slice(text.as_ref().as_bytes());
        self.buf.push(b'\n');
    }

    fn json(&mut self, value: Value) {
        self.line(value.to_string());
    }
}

/// Runs the CLI on `args` (including the program name) and returns the exit
/// code: 0 on success, 1 on a domain error or failed verification, 2 on a
/// usage error.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            let code = if err.use_stderr() {
                let _ = write!(stderr, "{}", err.render());
                EXIT_USAGE
            } else {
                let _ = write!(stdout, "{}", err.render());
                EXIT_OK
            };
            return code;
        }
    };

    let mut out = Output {
        json: cli.json,
        buf: Vec::new(),
    };
    let status = dispatch(&cli, &mut out);

    let _ = stdout.write_all(&out.buf);
    if let Some(path) = &cli.out {
        if let Err(e) = std::fs::write(path, &out.buf) {
            let _ = writeln!(stderr, "error: cannot write {}: {e}", path.display());
            return EXIT_DOMAIN;
        }
    }
    match status {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_DOMAIN
        }
    }
}

fn dispatch(cli: &Cli, out: &mut Output) -> econv::Result<i32> {
    let digits = |render: &Render| render.digits.or(cli.digits).unwrap_or(DEFAULT_DIGITS);
    match &cli.command {
        Command::Eval { n, m, render } => eval(out, *n, *m, digits(render)),
        Command::Convergents { count, render } => convergents(out, *count, digits(render)),
        Command::Verify { max_k } => verify(out, *max_k),
        Command::Bracket { k, render } => bracket(out, *k, digits(render)),
        Command::Approx { digits } => approx(out, *digits),
        Command::Pi(PiCommand::Eval {
            n,
            m,
            a,
            b,
            c,
            render,
        }) => pi_eval(out, PiIntegrandParams::new(*n, *m, *a, *b, *c)?, digits(render)),
        Command::Pi(PiCommand::Search {
            target,
            max_nm,
            max_coeff,
        }) => pi_search(out, target, *max_nm, *max_coeff),
    }
}

fn eval(out: &mut Output, n: usize, m: usize, digits: usize) -> econv::Result<i32> {
    let idx = IntegralIndex::new(n, m);
    let form = integral::eval_exact(idx);
    let decimal = eform_decimal(&form, digits)?;
    if out.json {
        out.json(json!({
            "op": "eval",
            "inputs": { "n": n, "m": m },
            "e_coeff": form.e_coeff.to_string(),
            "const_coeff": form.const_coeff.to_string(),
            "decimal": decimal,
        }));
    } else {
        out.line(format!("{idx} = {form}"));
        out.line(format!("      = {decimal}..."));
        out.line(format!("bound: {idx} <= {}", beta_bound(idx)));
        if let Some(approx) = form.neglect() {
            out.line(format!("neglecting it: e ~ {}", format_rational(&approx)));
        }
    }
    Ok(EXIT_OK)
}

fn convergents(out: &mut Output, count: usize, digits: usize) -> econv::Result<i32> {
    let convs = cf::convergents(count)?;
    if !out.json {
        out.line(format!("{:>4}  {:>24}  {:>24}  decimal", "k", "p", "q"));
    }
    for c in convs {
        if out.json {
            out.json(json!({ "k": c.index, "p": c.p.to_string(), "q": c.q.to_string() }));
        } else {
            let decimal = truncate_decimal(&c.value(), digits);
            out.line(format!("{:>4}  {:>24}  {:>24}  {decimal}", c.index, c.p, c.q));
        }
    }
    Ok(EXIT_OK)
}

fn verify(out: &mut Output, max_k: usize) -> econv::Result<i32> {
    let reports = verify_range(max_k)?;
    let failures = reports.iter().filter(|r| !r.holds).count();
    for r in &reports {
        if out.json {
            out.json(json!({ "k": r.k, "variant": r.variant.as_str(), "holds": r.holds }));
        } else {
            let (n, m) = r.variant.integral_index(r.k);
            out.line(format!(
                "k={:<3} {:<5} I({n}, {m}) = {}  {}",
                r.k,
                r.variant,
                r.lhs,
                if r.holds { "ok" } else { "MISMATCH" }
            ));
            if !r.holds {
                out.line(format!("      expected {}", r.rhs));
            }
        }
    }
    if !out.json {
        out.line(format!("{} identities checked, {failures} failed", reports.len()));
    }
    Ok(if failures == 0 { EXIT_OK } else { EXIT_DOMAIN })
}

fn bracket(out: &mut Output, k: usize, digits: usize) -> econv::Result<i32> {
    let b = bracket_e(k)?;
    if out.json {
        out.json(json!({
            "op": "bracket",
            "k": k,
            "lo": format_rational(b.lo()),
            "hi": format_rational(b.hi()),
            "width": format_rational(&b.width()),
        }));
    } else {
        out.line(format!("{} < e < {}", format_rational(b.lo()), format_rational(b.hi())));
        out.line(format!("lo    = {}", truncate_decimal(b.lo(), digits)));
        out.line(format!("hi    = {}", truncate_decimal(b.hi(), digits)));
        out.line(format!("width = {}", format_rational(&b.width())));
    }
    Ok(EXIT_OK)
}

fn approx(out: &mut Output, digits: usize) -> econv::Result<i32> {
    let a = approx_e(digits)?;
    if out.json {
        out.json(json!({
            "op": "approx",
            "digits": digits,
            "decimal": a.decimal,
            "witness_k": a.witness_k,
            "lo": format_rational(a.interval.lo()),
            "hi": format_rational(a.interval.hi()),
        }));
    } else {
        out.line(&a.decimal);
        out.line(format!("witness k = {}, bracket {}", a.witness_k, a.interval));
    }
    Ok(EXIT_OK)
}

fn pi_eval(out: &mut Output, params: PiIntegrandParams, digits: usize) -> econv::Result<i32> {
    let value = pi_eval_exact(&params);
    let decimal = piform_decimal(&value, digits)?;
    let PiIntegrandParams { n, m, a, b, c } = params;
    if out.json {
        out.json(json!({
            "op": "pi_eval",
            "inputs": { "n": n, "m": m, "a": a, "b": b, "c": c },
            "r": format_rational(&value.r),
            "s": format_rational(&value.s),
            "t": format_rational(&value.t),
            "decimal": decimal,
        }));
    } else {
        out.line(format!("J{params} = {value}"));
        out.line(format!("      = {decimal}..."));
        if let Some(approx) = value.neglect() {
            out.line(format!("neglecting it: pi ~ {}", format_rational(&approx)));
        }
    }
    Ok(EXIT_OK)
}

fn pi_search(out: &mut Output, target: &Rational, max_nm: usize, max_coeff: u64) -> econv::Result<i32> {
    let hits = lucas_search(target, max_nm, max_coeff)?;
    for h in &hits {
        let PiIntegrandParams { n, m, a, b, c } = h.params;
        if out.json {
            out.json(json!({
                "n": n, "m": m, "a": a, "b": b, "c": c,
                "r": format_rational(&h.value.r),
                "s": format_rational(&h.value.s),
                "t": format_rational(&h.value.t),
                "scale": format_rational(&h.scale),
            }));
        } else {
            out.line(format!(
                "n={n} m={m} a={a} b={b} c={c}  value = {}  scale = {}  target {} pi",
                h.value,
                format_rational(&h.scale),
                h.side
            ));
        }
    }
    if !out.json {
        out.line(format!("{} hit(s) for {}", hits.len(), format_rational(target)));
    }
    Ok(EXIT_OK)
}
