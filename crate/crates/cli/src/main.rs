//! `seifert` command-line front end.

use std::io::{self, BufRead, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;

use seifert_core::arith::ReducedFraction;
use seifert_core::covers::{fiberless_cover, orientable_double_cover, suggest_sheets};
use seifert_core::fst::{fst_equivalent, fst_normalize, lift_fiber, EquivalenceMode};
use seifert_core::groups::{abelianization, coset_enumerate, fuchsian_quotient, pi1_presentation, EnumerationResult};
use seifert_core::lens::{gluing_symbol, lens_equivalent, lens_normalize, recognize_s2_symbol, GluingMatrix, LensParams};
use seifert_core::report::{build_report, render_text};
use seifert_core::symbol::{normalize_symbol, reverse_orientation, symbols_equivalent, FiberMode};
use seifert_core::{parse_symbol, Error};

const DEFAULT_MAX_COSETS: usize = 100_000;
const MAX_COSETS_ENV: &str = "SEIFERT_MAX_COSETS";

#[derive(Parser)]
#[command(name = "seifert", version, about = "Invariants of Seifert fibered 3-manifolds")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the normal form of a symbol.
    Normalize { symbol: String },
    /// Full classification report.
    Report(ReportArgs),
    /// Compare two symbols; exit 1 when distinct.
    Equiv(EquivArgs),
    /// Reverse the orientation of an orientable symbol.
    Reverse { symbol: String },
    /// Covering spaces.
    #[command(subcommand)]
    Cover(CoverCommand),
    /// Lens space arithmetic.
    #[command(subcommand)]
    Lens(LensCommand),
    /// Group invariants.
    Group(GroupArgs),
    /// Fibered solid torus calculators.
    #[command(subcommand)]
    Fst(FstCommand),
}

#[derive(Args)]
struct ReportArgs {
    /// Symbol text; omit with --stdin.
    #[arg(required_unless_present = "stdin")]
    symbol: Option<String>,
    #[arg(long)]
    json: bool,
    /// Read one symbol per line and print JSON lines.
    #[arg(long, conflicts_with = "symbol")]
    stdin: bool,
}

#[derive(Args)]
struct EquivArgs {
    first: String,
    second: String,
    /// Fiber orientation must be preserved.
    #[arg(long, conflicts_with = "unoriented")]
    oriented: bool,
    /// Allow reversing the fiber orientation.
    #[arg(long)]
    unoriented: bool,
}

#[derive(Subcommand)]
enum CoverCommand {
    /// Orientable double cover of a non-orientable symbol.
    Double { symbol: String },
    /// Cover without exceptional fibers.
    Fiberless {
        symbol: String,
        /// Sheet count; defaults to an arithmetic candidate.
        #[arg(long)]
        sheets: Option<i64>,
    },
}

#[derive(Subcommand)]
enum LensCommand {
    /// Canonical parameters of L(p,q).
    #[command(allow_negative_numbers = true)]
    Normalize { p: i64, q: i64 },
    /// Compare L(p1,q1) and L(p2,q2); exit 1 when distinct.
    #[command(allow_negative_numbers = true)]
    Equiv { p1: i64, q1: i64, p2: i64, q2: i64 },
    /// Symbol of the space glued by (q r; p s) from a nu/mu solid torus.
    #[command(allow_negative_numbers = true)]
    Fiber { q: i64, r: i64, p: i64, s: i64, nu: i64, mu: i64 },
}

#[derive(Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
enum GroupQuery {
    Pi1,
    Fuchsian,
    H1,
    Order,
}

#[derive(Args)]
struct GroupArgs {
    query: GroupQuery,
    symbol: String,
    /// Coset table bound for `order`.
    #[arg(long)]
    max_cosets: Option<usize>,
}

#[derive(Subcommand)]
enum FstCommand {
    /// Compare nu1/mu1 and nu2/mu2; exit 1 when distinct.
    #[command(allow_negative_numbers = true)]
    Equiv {
        nu1: i64,
        mu1: i64,
        nu2: i64,
        mu2: i64,
        /// Require an orientation-reversing homeomorphism.
        #[arg(long, conflicts_with = "any")]
        reverse: bool,
        /// Either orientation.
        #[arg(long)]
        any: bool,
    },
    /// Lift a nu/mu solid torus to its sigma-fold fiberwise cover.
    #[command(allow_negative_numbers = true)]
    Lift { sigma: i64, nu: i64, mu: i64 },
}

/// Exit status of a completed command.
enum Outcome {
    Yes,
    No,
}

fn verdict(eq: bool) -> Outcome {
    println!("{}", if eq { "equivalent" } else { "distinct" });
    if eq {
        Outcome::Yes
    } else {
        Outcome::No
    }
}

fn max_cosets(flag: Option<usize>) -> Result<usize, Error> {
    if let Some(n) = flag {
        return Ok(n);
    }
    match std::env::var(MAX_COSETS_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Error::Validity(format!("{MAX_COSETS_ENV}={v} is not a count"))),
        Err(_) => Ok(DEFAULT_MAX_COSETS),
    }
}

fn report_batch(json: bool) -> Result<Outcome, Error> {
    let lines: Vec<String> = io::stdin()
        .lock()
        .lines()
        .collect::<io::Result<_>>()
        .map_err(|e| Error::Validity(format!("reading stdin: {e}")))?;
    let inputs: Vec<(usize, &str)> = lines
        .iter()
        .enumerate()
        .map(|(i, l)| (i, l.trim()))
        .filter(|(_, l)| !l.is_empty())
        .collect();
    let rendered: Vec<(usize, Result<String, Error>)> = inputs
        .par_iter()
        .map(|&(i, l)| {
            let r = build_report(l).map(|r| {
                if json {
                    serde_json::to_string(&r).expect("report serializes")
                } else {
                    render_text(&r)
                }
            });
            (i, r)
        })
        .collect();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let mut first_error = None;
    for (i, r) in rendered {
        match r {
            Ok(text) => {
                let _ = writeln!(out, "{}", text.trim_end());
            }
            Err(e) => {
                eprintln!("line {}: {e}", i + 1);
                first_error.get_or_insert(e);
            }
        }
    }
    match first_error {
        Some(e) => Err(e),
        None => Ok(Outcome::Yes),
    }
}

fn run(cli: Cli) -> Result<Outcome, Error> {
    match cli.command {
        Command::Normalize { symbol } => {
            println!("{}", normalize_symbol(&parse_symbol(&symbol)?)?);
        }
        Command::Report(a) => {
            if a.stdin {
                return report_batch(a.json);
            }
            let r = build_report(a.symbol.as_deref().expect("clap requires a symbol"))?;
            if a.json {
                println!("{}", serde_json::to_string(&r).expect("report serializes"));
            } else {
                print!("{}", render_text(&r));
            }
        }
        Command::Equiv(a) => {
            let s1 = parse_symbol(&a.first)?;
            let s2 = parse_symbol(&a.second)?;
            let mode = if a.oriented {
                FiberMode::OrientedFiber
            } else if a.unoriented || !s1.is_orientable() || !s2.is_orientable() {
                FiberMode::UnorientedFiber
            } else {
                FiberMode::OrientedFiber
            };
            return Ok(verdict(symbols_equivalent(&s1, &s2, mode)?));
        }
        Command::Reverse { symbol } => {
            println!("{}", reverse_orientation(&parse_symbol(&symbol)?)?);
        }
        Command::Cover(CoverCommand::Double { symbol }) => {
            println!("{}", orientable_double_cover(&parse_symbol(&symbol)?)?);
        }
        Command::Cover(CoverCommand::Fiberless { symbol, sheets }) => {
            let s = parse_symbol(&symbol)?;
            let lambda = match sheets {
                Some(l) => l,
                None => {
                    let l = suggest_sheets(&s)?;
                    eprintln!("using arithmetic candidate {l} sheets");
                    l
                }
            };
            let c = fiberless_cover(&s, lambda)?;
            match &c.symbol {
                Some(sym) => println!("{sym}"),
                None => println!("obstruction {}, orbit surface undetermined", c.obstruction),
            }
            println!("orbit euler characteristic {}", c.orbit_euler);
        }
        Command::Lens(LensCommand::Normalize { p, q }) => {
            println!("{}", lens_normalize(p, q)?);
        }
        Command::Lens(LensCommand::Equiv { p1, q1, p2, q2 }) => {
            return Ok(verdict(lens_equivalent(&LensParams { p: p1, q: q1 }, &LensParams { p: p2, q: q2 })?));
        }
        Command::Lens(LensCommand::Fiber { q, r, p, s, nu, mu }) => {
            let a = GluingMatrix::new(q, r, p, s)?;
            let sym = gluing_symbol(&a, ReducedFraction::new(nu, mu)?)?;
            println!("{sym}");
            let rec = recognize_s2_symbol(&sym)?;
            println!("{}", rec.lens_params().map_or_else(|| rec.to_string(), |l| l.to_string()));
        }
        Command::Group(a) => {
            let s = normalize_symbol(&parse_symbol(&a.symbol)?)?;
            match a.query {
                GroupQuery::Pi1 => println!("{}", pi1_presentation(&s)),
                GroupQuery::Fuchsian => println!("{}", fuchsian_quotient(&s)),
                GroupQuery::H1 => println!("{}", abelianization(&pi1_presentation(&s))),
                GroupQuery::Order => {
                    let limit = max_cosets(a.max_cosets)?;
                    match coset_enumerate(&pi1_presentation(&s), limit)? {
                        EnumerationResult::Finite(n) => println!("{n}"),
                        EnumerationResult::ExceededLimit(used) => {
                            println!("exceeded limit ({used} cosets)");
                            return Ok(Outcome::No);
                        }
                    }
                }
            }
        }
        Command::Fst(FstCommand::Equiv { nu1, mu1, nu2, mu2, reverse, any }) => {
            let mode = if any {
                EquivalenceMode::Any
            } else if reverse {
                EquivalenceMode::Reverse
            } else {
                EquivalenceMode::Preserve
            };
            let t1 = fst_normalize(nu1, mu1, true)?;
            let t2 = fst_normalize(nu2, mu2, true)?;
            return Ok(verdict(fst_equivalent(&t1, &t2, mode)));
        }
        Command::Fst(FstCommand::Lift { sigma, nu, mu }) => {
            if sigma < 1 {
                return Err(Error::Validity(format!("sheet count {sigma} must be positive")));
            }
            let (components, lifted) = lift_fiber(sigma, &fst_normalize(nu, mu, true)?)?;
            println!("components {components}");
            println!("lifted {lifted}");
        }
    }
    Ok(Outcome::Yes)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(Outcome::Yes) => ExitCode::SUCCESS,
        Ok(Outcome::No) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_input_error() { 2 } else { 3 })
        }
    }
}
