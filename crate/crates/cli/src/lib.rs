//! Argument handling and subcommand dispatch for the `unmix` binary.
//!
//! [`run_cli`] never touches the process's stdout or stderr; it returns
//! everything so tests can drive it in-process.

use std::fmt::Write as _;
use std::io::Read;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use unmix::decomp::{zero_sets_equal, Decomposition, SaturationRegistry};
use unmix::elimination::{prem_chain, resultant_chain};
use unmix::groebner::{buchberger, TermOrderSpec};
use unmix::io::{emit_result, render_set, render_system};
use unmix::triset::report;
use unmix::verify::{completeness_holds, prem_identity_holds, saturation_holds};
use unmix::{
    charser_a, decompose, parse_polynomial, parse_system, wu_charset_with, CharsetOutcome, Error,
    Limits, OutputFormat, Polynomial, SystemFile, TriangularSet,
};

const WITNESS_CEILING: u32 = 20;
const PRODUCT_CEILING: usize = 200;

#[derive(Parser, Debug)]
#[command(
    name = "unmix",
    version,
    about = "Characteristic sets, Gröbner bases and unmixed decomposition"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[command(flatten)]
    global: GlobalOpts,
}

#[derive(Args, Debug)]
struct GlobalOpts {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    /// Worker threads for per-branch saturation (0 = rayon default).
    #[arg(long, default_value_t = 0, global = true)]
    threads: usize,

    /// S-pairs processed per Gröbner basis run before aborting.
    #[arg(long, env = "UNMIX_MAX_GB_PAIRS", default_value_t = Limits::default().max_gb_pairs,
          value_parser = clap::builder::RangedU64ValueParser::<usize>::new().range(1..), global = true)]
    max_gb_pairs: usize,

    /// Largest coefficient size, in bits, before aborting.
    #[arg(long, env = "UNMIX_MAX_COEFF_BITS", default_value_t = Limits::default().max_coeff_bits,
          value_parser = clap::value_parser!(u64).range(1..), global = true)]
    max_coeff_bits: u64,

    /// Characteristic-series worklist pops before aborting.
    #[arg(long, env = "UNMIX_MAX_WORKLIST_POPS", default_value_t = Limits::default().max_worklist_pops,
          value_parser = clap::builder::RangedU64ValueParser::<usize>::new().range(1..), global = true)]
    max_worklist_pops: usize,

    /// Total degree a pseudo-remainder may reach in the characteristic-set loop.
    #[arg(long, env = "UNMIX_MAX_PREM_DEGREE", default_value_t = Limits::default().max_prem_degree,
          value_parser = clap::builder::RangedU64ValueParser::<usize>::new().range(1..), global = true)]
    max_prem_degree: usize,

    /// More log output on stderr (repeatable).
    #[arg(short, long, action = clap::ArgAction::Count, global = true)]
    verbose: u8,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Parse a system file and echo it in canonical form.
    Parse { input: String },
    /// Pseudo-remainder of a polynomial by the chain in the input file.
    Prem {
        input: String,
        #[arg(long)]
        poly: String,
        /// Check the pseudo-division identity by ideal membership.
        #[arg(long)]
        verify: bool,
    },
    /// Chain resultant of a polynomial against the chain in the input file.
    Res {
        input: String,
        #[arg(long)]
        poly: String,
    },
    /// Flags, coefficient sets, resultant sets and U-set of a chain.
    Uset { input: String },
    /// Wu characteristic set of a system.
    Charset { input: String },
    /// Characteristic series with U-set splitting.
    Charser { input: String },
    /// Reduced lexicographic Gröbner basis.
    Gb {
        input: String,
        /// Term order, greatest variable first, e.g. `x3>x2>x1`.
        #[arg(long)]
        order: Option<String>,
    },
    /// Saturation ideal of the chain in the input file.
    Sat {
        input: String,
        #[arg(long, default_value = "improved")]
        method: String,
        /// Check witness exponents and containment.
        #[arg(long)]
        verify: bool,
    },
    /// Unmixed decomposition of the variety of a system.
    Decompose {
        input: String,
        #[arg(long, default_value = "improved")]
        method: String,
        /// Check soundness, completeness, and agreement with the other method.
        #[arg(long)]
        verify: bool,
    },
}

/// Exit status plus captured streams.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CliOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    Usage(String),
    Core(Error),
    Verify(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

type Outcome<T> = std::result::Result<T, Failure>;

struct Ctx<'a> {
    format: Format,
    limits: Limits,
    stdin: &'a mut (dyn Read + Send),
    stderr: String,
}

impl Ctx<'_> {
    fn read(&mut self, input: &str) -> Outcome<String> {
        if input == "-" {
            let mut s = String::new();
            self.stdin
                .read_to_string(&mut s)
                .map_err(|e| Failure::Usage(format!("cannot read standard input: {e}")))?;
            Ok(s)
        } else {
            std::fs::read_to_string(input).map_err(|e| Failure::Usage(format!("{input}: {e}")))
        }
    }

    fn system(&mut self, input: &str) -> Outcome<SystemFile> {
        let text = self.read(input)?;
        parse_system(&text).map_err(|e| match e {
            Error::Parse(p) => Failure::Usage(format!("{input}: {p}")),
            other => Failure::Core(other),
        })
    }

    fn chain(&mut self, input: &str) -> Outcome<TriangularSet> {
        Ok(TriangularSet::new(self.system(input)?.polys)?)
    }

    fn note(&mut self, line: &str) {
        self.stderr.push_str(line);
        self.stderr.push('\n');
    }
}

fn strings(ps: &[Polynomial]) -> Vec<String> {
    ps.iter().map(|p| p.to_string()).collect()
}

fn finish(format: Format, text: String, value: Value) -> String {
    match format {
        Format::Text => text,
        Format::Json => {
            let mut s = value.to_string();
            s.push('\n');
            s
        }
    }
}

/// The `-v` count of an invocation, or 0 if it does not parse.
pub fn verbosity(argv: &[String]) -> u8 {
    Cli::try_parse_from(argv)
        .map(|c| c.global.verbose)
        .unwrap_or(0)
}

/// Runs one invocation; `argv[0]` is the program name.
pub fn run_cli<I, S>(argv: I) -> CliOutput
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    run_cli_with_stdin(argv, &mut std::io::empty())
}

pub fn run_cli_with_stdin<I, S>(argv: I, stdin: &mut (dyn Read + Send)) -> CliOutput
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let argv: Vec<String> = argv.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            return if code == 0 {
                CliOutput {
                    code,
                    stdout: rendered,
                    stderr: String::new(),
                }
            } else {
                CliOutput {
                    code: 2,
                    stdout: String::new(),
                    stderr: rendered,
                }
            };
        }
    };
    let g = &cli.global;
    let mut ctx = Ctx {
        format: g.format,
        limits: Limits {
            max_gb_pairs: g.max_gb_pairs,
            max_coeff_bits: g.max_coeff_bits,
            max_worklist_pops: g.max_worklist_pops,
            max_prem_degree: g.max_prem_degree,
        },
        stdin,
        stderr: String::new(),
    };
    let pool = match rayon::ThreadPoolBuilder::new()
        .num_threads(g.threads)
        .build()
    {
        Ok(p) => p,
        Err(e) => {
            return CliOutput {
                code: 2,
                stdout: String::new(),
                stderr: format!("error: cannot start worker threads: {e}\n"),
            }
        }
    };
    let result = pool.install(|| dispatch(&cli.command, &mut ctx));
    let mut out = CliOutput {
        stderr: ctx.stderr,
        ..CliOutput::default()
    };
    match result {
        Ok(stdout) => out.stdout = stdout,
        Err(f) => {
            let (code, msg) = match f {
                Failure::Usage(m) => (2, m),
                Failure::Verify(m) => (1, format!("verification failed: {m}")),
                Failure::Core(e) if e.is_resource_limit() => (3, e.to_string()),
                Failure::Core(e) => (2, e.to_string()),
            };
            out.code = code;
            let _ = writeln!(out.stderr, "error: {msg}");
        }
    }
    out
}

fn dispatch(cmd: &Command, ctx: &mut Ctx<'_>) -> Outcome<String> {
    match cmd {
        Command::Parse { input } => cmd_parse(ctx, input),
        Command::Prem {
            input,
            poly,
            verify,
        } => cmd_prem(ctx, input, poly, *verify),
        Command::Res { input, poly } => cmd_res(ctx, input, poly),
        Command::Uset { input } => cmd_uset(ctx, input),
        Command::Charset { input } => cmd_charset(ctx, input),
        Command::Charser { input } => cmd_charser(ctx, input),
        Command::Gb { input, order } => cmd_gb(ctx, input, order.as_deref()),
        Command::Sat {
            input,
            method,
            verify,
        } => cmd_sat(ctx, input, method, *verify),
        Command::Decompose {
            input,
            method,
            verify,
        } => cmd_decompose(ctx, input, method, *verify),
    }
}

fn cmd_parse(ctx: &mut Ctx<'_>, input: &str) -> Outcome<String> {
    let sys = ctx.system(input)?;
    let value = json!({
        "vars": sys.order.names(),
        "name": sys.name,
        "polys": strings(&sys.polys),
    });
    Ok(finish(ctx.format, render_system(&sys), value))
}

fn parse_poly_arg(expr: &str, chain: &TriangularSet) -> Outcome<Polynomial> {
    parse_polynomial(expr, chain.order()).map_err(|e| match e {
        Error::Parse(p) => Failure::Usage(format!("--poly: {p}")),
        other => Failure::Core(other),
    })
}

fn cmd_prem(ctx: &mut Ctx<'_>, input: &str, expr: &str, verify: bool) -> Outcome<String> {
    let chain = ctx.chain(input)?;
    let p = parse_poly_arg(expr, &chain)?;
    let r = prem_chain(&p, &chain)?;
    if verify {
        if !prem_identity_holds(&p, &chain, &r, &ctx.limits)? {
            return Err(Failure::Verify("pseudo-division identity".into()));
        }
        ctx.note("verify: pseudo-division identity holds");
    }
    let exps: Vec<String> = r.exponents.iter().map(u32::to_string).collect();
    let text = format!("remainder {}\nexponents {}\n", r.remainder, exps.join(" "));
    let value = json!({ "remainder": r.remainder.to_string(), "exponents": r.exponents });
    Ok(finish(ctx.format, text, value))
}

fn cmd_res(ctx: &mut Ctx<'_>, input: &str, expr: &str) -> Outcome<String> {
    let chain = ctx.chain(input)?;
    let p = parse_poly_arg(expr, &chain)?;
    let r = resultant_chain(&p, &chain);
    Ok(finish(
        ctx.format,
        format!("resultant {r}\n"),
        json!({ "resultant": r.to_string() }),
    ))
}

fn cmd_uset(ctx: &mut Ctx<'_>, input: &str) -> Outcome<String> {
    let chain = ctx.chain(input)?;
    let rep = report(&chain);
    let f = rep.flags;
    let mut text = format!(
        "triangular={} ascending={} regular={} normal={}\n",
        f.triangular, f.noncontradictory_ascending, f.regular, f.normal
    );
    let mut elems = Vec::new();
    for (i, p) in chain.polys().iter().enumerate() {
        let _ = writeln!(text, "f{} = {p}", i + 1);
        let _ = writeln!(
            text,
            "  C_f{} = {}",
            i + 1,
            render_set(&rep.coefficient_sets[i])
        );
        let _ = writeln!(
            text,
            "  R_f{} = {}",
            i + 1,
            render_set(&rep.resultant_sets[i])
        );
        elems.push(json!({
            "poly": p.to_string(),
            "coefficient_set": strings(&rep.coefficient_sets[i]),
            "resultant_set": strings(&rep.resultant_sets[i]),
        }));
    }
    let _ = writeln!(text, "U_T = {}", render_set(&rep.u_set));
    let value = json!({
        "flags": {
            "triangular": f.triangular,
            "ascending": f.noncontradictory_ascending,
            "regular": f.regular,
            "normal": f.normal,
        },
        "elements": elems,
        "u_set": strings(&rep.u_set),
    });
    Ok(finish(ctx.format, text, value))
}

fn cmd_charset(ctx: &mut Ctx<'_>, input: &str) -> Outcome<String> {
    let sys = ctx.system(input)?;
    Ok(match wu_charset_with(&sys.polys, &ctx.limits)? {
        CharsetOutcome::Contradiction => finish(
            ctx.format,
            "contradiction\n".into(),
            json!({ "contradiction": true, "chain": [] }),
        ),
        CharsetOutcome::Chain(t) => {
            let t = t.normalized();
            let mut text = String::from("chain\n");
            for p in t.polys() {
                let _ = writeln!(text, "  {p}");
            }
            finish(
                ctx.format,
                text,
                json!({ "contradiction": false, "chain": strings(t.polys()) }),
            )
        }
    })
}

fn cmd_charser(ctx: &mut Ctx<'_>, input: &str) -> Outcome<String> {
    let sys = ctx.system(input)?;
    let branches = charser_a(&sys.polys, &ctx.limits)?;
    let mut text = format!("branches {}\n", branches.len());
    for (i, b) in branches.iter().enumerate() {
        let _ = writeln!(text, "branch {}", i + 1);
        let _ = writeln!(text, "  u_set: {}", render_set(&b.u_set));
        text.push_str("  chain:\n");
        for p in b.triset.polys() {
            let _ = writeln!(text, "    {p}");
        }
    }
    let value = json!({
        "branches": branches
            .iter()
            .map(|b| json!({ "chain": strings(b.triset.polys()), "u_set": strings(&b.u_set) }))
            .collect::<Vec<_>>(),
    });
    Ok(finish(ctx.format, text, value))
}

fn cmd_gb(ctx: &mut Ctx<'_>, input: &str, order: Option<&str>) -> Outcome<String> {
    let sys = ctx.system(input)?;
    let order = match order {
        Some(s) => TermOrderSpec::parse(s)?,
        None => TermOrderSpec::for_order(&sys.order),
    };
    let g = buchberger(&sys.polys, &order, &ctx.limits)?;
    let mut text = format!("order {order}\n");
    for p in g.generators() {
        let _ = writeln!(text, "{p}");
    }
    let value = json!({ "order": order.to_string(), "generators": strings(g.generators()) });
    Ok(finish(ctx.format, text, value))
}

fn cmd_sat(ctx: &mut Ctx<'_>, input: &str, method: &str, verify: bool) -> Outcome<String> {
    let registry = SaturationRegistry::builtin();
    let m = registry.get(method)?;
    let chain = ctx.chain(input)?;
    let sat = m.saturate(&chain, &ctx.limits)?;
    if verify {
        let h = m.multiplier(&chain);
        if !saturation_holds(&sat, &chain, &h, WITNESS_CEILING, &ctx.limits)? {
            return Err(Failure::Verify("saturation witnesses".into()));
        }
        ctx.note("verify: saturation witnesses found");
    }
    let mut text = format!("method {}\n", m.name());
    for p in sat.generators() {
        let _ = writeln!(text, "{p}");
    }
    let value = json!({ "method": m.name(), "generators": strings(sat.generators()) });
    Ok(finish(ctx.format, text, value))
}

fn cmd_decompose(ctx: &mut Ctx<'_>, input: &str, method: &str, verify: bool) -> Outcome<String> {
    let registry = SaturationRegistry::builtin();
    let m = registry.get(method)?;
    let sys = ctx.system(input)?;
    let Decomposition { components, pruned } = decompose(&sys.polys, m, &ctx.limits)?;
    for p in &pruned {
        log::info!("pruned ({}): {}", p.reason, render_set(p.chain.polys()));
    }
    if verify {
        let l = ctx.limits;
        for c in &components {
            if !unmix::decomp::zero_set_contained(&sys.polys, c.generators.generators(), &l)? {
                return Err(Failure::Verify("soundness".into()));
            }
        }
        ctx.note("verify: soundness holds");
        match completeness_holds(&sys.polys, &components, PRODUCT_CEILING, &l)? {
            Some(true) => ctx.note("verify: completeness holds"),
            Some(false) => return Err(Failure::Verify("completeness".into())),
            None => ctx.note("verify: completeness skipped (too many generator products)"),
        }
        for other in registry.names().into_iter().filter(|n| *n != m.name()) {
            let alt = decompose(&sys.polys, registry.get(other)?, &l)?.components;
            let union_equal = components.iter().all(|c| {
                alt.iter().any(|a| {
                    zero_sets_equal(c.generators.generators(), a.generators.generators(), &l)
                        .unwrap_or(false)
                })
            }) && alt.iter().all(|a| {
                components.iter().any(|c| {
                    zero_sets_equal(c.generators.generators(), a.generators.generators(), &l)
                        .unwrap_or(false)
                })
            });
            if !union_equal {
                return Err(Failure::Verify(format!("`{other}` method disagrees")));
            }
            ctx.note(&format!("verify: `{other}` method agrees"));
        }
    }
    let format = match ctx.format {
        Format::Text => OutputFormat::Text,
        Format::Json => OutputFormat::Json,
    };
    Ok(emit_result(&sys.order, &components, format))
}
