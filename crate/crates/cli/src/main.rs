//! `kpalg`: normal forms, products, involution, bases and consistency checks
//! for Kumjian-Pask algebras of the standard k-graphs.
//!
//! Exit status: 0 on success, 1 when a check fails, 2 on usage or input
//! errors. Output on stdout depends only on the flags; timings go to stderr.

use std::fs;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::json;

use kp_core::kpalg::{enumerate_basis_filtered, BasisFilter, BasisShape, KpAlgebra, Window};
use kp_core::rewrite::Normalizer;
use kp_core::verify::{CheckConfig, CheckName};
use kp_core::{parse_element, Element, GraphConfig, Integers, IntegersMod, Point, Ring};

#[derive(Parser, Debug)]
#[command(name = "kpalg", version, about = "Kumjian-Pask algebras of standard k-graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Reduce an element to its normal form.
    Normalize {
        #[arg(allow_hyphen_values = true)]
        element: Option<String>,
        #[command(flatten)]
        opts: Opts,
    },
    /// Multiply two elements in the quotient.
    Mul {
        #[arg(allow_hyphen_values = true)]
        x: Option<String>,
        #[arg(allow_hyphen_values = true)]
        y: Option<String>,
        #[command(flatten)]
        opts: Opts,
    },
    /// Apply the involution and normalize.
    Star {
        #[arg(allow_hyphen_values = true)]
        element: Option<String>,
        #[command(flatten)]
        opts: Opts,
    },
    /// List basis words inside the window.
    Basis {
        #[arg(long, value_enum, default_value_t = ShapeArg::All)]
        shape: ShapeArg,
        /// Range of the path (or of λ in λμ*).
        #[arg(long, allow_hyphen_values = true)]
        range_left: Option<String>,
        /// Range of μ in λμ*.
        #[arg(long, allow_hyphen_values = true)]
        range_right: Option<String>,
        #[command(flatten)]
        opts: Opts,
    },
    /// Run a consistency check.
    Check {
        /// lemma3, lemma8, lemma12, lemma13, confluence, kp or all.
        name: String,
        /// Run a single case (reproduces a reported failure).
        #[arg(long)]
        case: Option<usize>,
        #[command(flatten)]
        opts: Opts,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ShapeArg {
    Vertex,
    Path,
    Ghost,
    Pair,
    All,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
enum Format {
    #[default]
    Text,
    Structured,
}

#[derive(Args, Debug, Default)]
struct Opts {
    /// Rank of the graph.
    #[arg(long)]
    k: usize,
    /// Number of parallel edges per coordinate direction.
    #[arg(long)]
    level: u32,
    /// Coefficient ring: `int` or `zmod:N`.
    #[arg(long, default_value = "int")]
    ring: String,
    /// Vertex window `lo..hi`, uniform (`-3..3`) or per coordinate (`-3,-1..3,1`).
    #[arg(long, default_value = "-3..3", allow_hyphen_values = true)]
    window: String,
    /// Largest `|d|` enumerated or sampled.
    #[arg(long, default_value_t = 3)]
    degree_bound: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 100)]
    cases: usize,
    /// Print each rewrite step (normalize only).
    #[arg(long)]
    trace: bool,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Read elements from a file, one per non-empty line.
    #[arg(long)]
    input: Option<String>,
}

/// Usage or input problem (exit 2).
struct UsageError(String);

impl<E: std::fmt::Display> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

type CliResult<T> = Result<T, UsageError>;

fn parse_point(text: &str, k: usize) -> CliResult<Point> {
    let inner = text.trim().trim_start_matches('(').trim_end_matches(')');
    let coords = inner
        .split(',')
        .map(|c| c.trim().parse::<BigInt>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|_| UsageError(format!("`{text}` is not a vertex")))?;
    if coords.len() == 1 && k > 1 {
        return Ok(Point::new(vec![coords[0].clone(); k]));
    }
    if coords.len() != k {
        return Err(UsageError(format!("`{text}` has {} coordinates but k = {k}", coords.len())));
    }
    Ok(Point::new(coords))
}

fn parse_window(text: &str, k: usize, bound: usize) -> CliResult<Window> {
    let (lo, hi) = text
        .split_once("..")
        .ok_or_else(|| UsageError(format!("window `{text}` is not of the form lo..hi")))?;
    Ok(Window::new(parse_point(lo, k)?, parse_point(hi, k)?, bound)?)
}

enum RingSel {
    Int(Integers),
    Mod(IntegersMod),
}

fn parse_ring(text: &str) -> CliResult<RingSel> {
    if text == "int" {
        return Ok(RingSel::Int(Integers));
    }
    if let Some(n) = text.strip_prefix("zmod:") {
        let n: BigInt = n.parse().map_err(|_| UsageError(format!("bad modulus in `{text}`")))?;
        return Ok(RingSel::Mod(IntegersMod::new(n)?));
    }
    Err(UsageError(format!("unknown ring `{text}` (use int or zmod:N)")))
}

struct Ctx<R: Ring> {
    graph: GraphConfig,
    ring: R,
    opts: Opts,
}

impl<R: Ring> Ctx<R> {
    /// Positional elements, or the lines of `--input`.
    fn inputs(&self, given: Vec<Option<String>>, want: usize) -> CliResult<Vec<Element<R>>> {
        let texts: Vec<String> = match &self.opts.input {
            Some(path) => fs::read_to_string(path)
                .map_err(|e| UsageError(format!("cannot read {path}: {e}")))?
                .lines()
                .map(str::trim)
                .filter(|l| !l.is_empty())
                .map(String::from)
                .collect(),
            None => given.into_iter().flatten().collect(),
        };
        if want > 0 && texts.len() != want {
            return Err(UsageError(format!("expected {want} element(s), got {}", texts.len())));
        }
        if texts.is_empty() {
            return Err(UsageError("no element given".into()));
        }
        texts
            .iter()
            .map(|t| parse_element(t, &self.graph, self.ring.clone()).map_err(|e| UsageError(format!("{e} in `{t}`"))))
            .collect()
    }

    fn emit_element(&self, input: &Element<R>, result: &Element<R>) {
        match self.opts.format {
            Format::Text => println!("{result}"),
            Format::Structured => println!("{}", json!({ "input": input.to_string(), "result": result.to_string() })),
        }
    }
}

fn run<R: Ring>(command: Command, ctx: Ctx<R>) -> CliResult<ExitCode> {
    let alg = KpAlgebra::new(ctx.graph, ctx.ring.clone());
    match command {
        Command::Normalize { element, .. } => {
            for x in ctx.inputs(vec![element], 0)? {
                let run = Normalizer::new(ctx.graph).trace(ctx.opts.trace).run(&x)?;
                match ctx.opts.format {
                    Format::Text => {
                        for step in &run.trace {
                            println!("{step}");
                        }
                        println!("{}", run.element);
                    }
                    Format::Structured => {
                        let mut out = json!({ "input": x.to_string(), "result": run.element.to_string() });
                        if ctx.opts.trace {
                            out["trace"] = run
                                .trace
                                .iter()
                                .map(|s| json!({ "rule": s.rule, "position": s.position, "measure": s.measure }))
                                .collect();
                        }
                        println!("{out}");
                    }
                }
            }
        }
        Command::Mul { x, y, .. } => {
            let xs = ctx.inputs(vec![x, y], 2)?;
            let product = xs[0].mul(&xs[1])?;
            ctx.emit_element(&product, &alg.normalize(&product)?);
        }
        Command::Star { element, .. } => {
            for x in ctx.inputs(vec![element], 0)? {
                ctx.emit_element(&x, &alg.star(&x)?);
            }
        }
        Command::Basis {
            shape,
            range_left,
            range_right,
            ..
        } => {
            let k = ctx.graph.k();
            let window = parse_window(&ctx.opts.window, k, ctx.opts.degree_bound)?;
            let shapes = match shape {
                ShapeArg::Vertex => Some(vec![BasisShape::Vertex]),
                ShapeArg::Path => Some(vec![BasisShape::Path]),
                ShapeArg::Ghost => Some(vec![BasisShape::Ghost]),
                ShapeArg::Pair => Some(vec![BasisShape::Pair]),
                ShapeArg::All => None,
            };
            let filter = BasisFilter {
                shapes,
                range_left: range_left.map(|r| parse_point(&r, k)).transpose()?,
                range_right: range_right.map(|r| parse_point(&r, k)).transpose()?,
            };
            let words = enumerate_basis_filtered(&ctx.graph, &window, &filter)?;
            match ctx.opts.format {
                Format::Text => {
                    for w in &words {
                        println!("{w}");
                    }
                }
                Format::Structured => {
                    let list: Vec<String> = words.iter().map(|w| w.to_string()).collect();
                    println!("{}", json!({ "count": list.len(), "words": list }));
                }
            }
        }
        Command::Check { name, case, .. } => {
            let names = if name == "all" {
                CheckName::ALL.to_vec()
            } else {
                vec![CheckName::parse(&name).ok_or_else(|| UsageError(format!("unknown check `{name}`")))?]
            };
            let window = parse_window(&ctx.opts.window, ctx.graph.k(), ctx.opts.degree_bound)?;
            let mut cfg = CheckConfig::new(ctx.graph, window, ctx.opts.seed, ctx.opts.cases);
            cfg.only_case = case;
            let mut ok = true;
            for n in names {
                let report = n.run(&cfg, &ctx.ring);
                eprintln!("{}: {:.3}s", report.name, report.wall_time.as_secs_f64());
                ok &= report.passed();
                match ctx.opts.format {
                    Format::Text => println!("{report}"),
                    Format::Structured => println!("{}", report.to_json()),
                }
            }
            if !ok {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn opts_of(command: &mut Command) -> &mut Opts {
    match command {
        Command::Normalize { opts, .. }
        | Command::Mul { opts, .. }
        | Command::Star { opts, .. }
        | Command::Basis { opts, .. }
        | Command::Check { opts, .. } => opts,
    }
}

fn dispatch(mut command: Command) -> CliResult<ExitCode> {
    let opts = opts_of(&mut command);
    let graph = GraphConfig::new(opts.k, opts.level)?;
    let ring = parse_ring(&opts.ring)?;
    let opts = std::mem::take(opts);
    match ring {
        RingSel::Int(ring) => run(command, Ctx { graph, ring, opts }),
        RingSel::Mod(ring) => run(command, Ctx { graph, ring, opts }),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli.command) {
        Ok(code) => code,
        Err(UsageError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
