//! rees-lab: build the catalog posets, compute exact homology and Möbius
//! invariants, evaluate permutation-statistic polynomials, and run the
//! named verification suites.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand};

use rees_core::homology::{betti, euler_poincare_check, mobius_invariant_hat, DEFAULT_SIMPLEX_GUARD};
use rees_core::io::{poly_to_json, poset_from_json, poset_to_dot, poset_to_json};
use rees_core::perm::{exd_set, stats, EulerianFlavor, Permutation};
use rees_core::suites::{export, list_suites, run_suite, ExportFormat, SuiteConfig};
use rees_core::Poset;

#[derive(Parser)]
#[command(name = "rees-lab", version, about = "Exact poset-topology workbench")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build and export catalog posets
    Poset {
        #[command(subcommand)]
        command: PosetCommand,
    },
    /// Reduced Betti numbers, Möbius invariant, and the Euler cross-check
    Betti {
        /// poset JSON file
        file: PathBuf,
        /// simplex guard (overrides REES_LAB_GUARD_SIMPLICES)
        #[arg(long)]
        guard: Option<u64>,
    },
    /// Möbius invariant of the bounded extension of a poset
    Mobius {
        /// poset JSON file
        file: PathBuf,
    },
    /// Statistics of a permutation given in one-line notation, e.g. 42153
    Stats { word: String },
    /// Generating polynomials over the symmetric group
    Poly {
        #[command(subcommand)]
        command: PolyCommand,
    },
    /// Symmetric function expansions
    Symfunc {
        #[command(subcommand)]
        command: SymfuncCommand,
    },
    /// Run a named verification suite (or "all")
    Verify(VerifyArgs),
    /// List the available verification suites
    ListSuites,
}

#[derive(Subcommand)]
enum PosetCommand {
    /// Construct a poset from the catalog
    Build {
        /// family: boolean | chain | tree | subspace | crosspolytope | isotropic
        family: String,
        #[arg(long)]
        n: usize,
        /// prime field size (subspace, isotropic)
        #[arg(long)]
        q: Option<u32>,
        /// tree arity
        #[arg(long)]
        t: Option<usize>,
        /// write JSON here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
        /// emit a DOT Hasse diagram instead of JSON
        #[arg(long)]
        dot: bool,
    },
}

#[derive(Subcommand)]
enum PolyCommand {
    /// A_n for a pair or triple of statistics as a polynomial
    Eulerian {
        #[arg(long)]
        n: usize,
        /// maj-exc | comaj-exc | comaj-exc-fix | maj-exc-fix
        #[arg(long, default_value = "maj-exc")]
        flavor: String,
    },
}

#[derive(Subcommand)]
enum SymfuncCommand {
    /// The (fixed-point) Eulerian quasisymmetric function in the
    /// monomial basis
    QEulerian {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        j: u32,
        /// restrict to k fixed points (omit to sum over k)
        #[arg(long)]
        k: Option<u32>,
        /// number of variables (defaults to n)
        #[arg(long)]
        m: Option<usize>,
        /// output basis: m | h | e | p
        #[arg(long, default_value = "m")]
        basis: String,
    },
}

#[derive(Args)]
struct VerifyArgs {
    /// suite id from list-suites, or "all"
    suite: String,
    #[arg(long)]
    n_max: Option<usize>,
    /// prime field sizes
    #[arg(long, num_args = 1.., value_name = "Q")]
    q: Option<Vec<u32>>,
    /// tree arities / t evaluation points
    #[arg(long, num_args = 1.., value_name = "T")]
    t: Option<Vec<i64>>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    trials: Option<usize>,
    /// number of variables for symmetric-function expansions
    #[arg(long)]
    m: Option<usize>,
    /// z-truncation order for series identities
    #[arg(long)]
    degree_cap: Option<usize>,
    /// simplex guard (default 60000; env REES_LAB_GUARD_SIMPLICES)
    #[arg(long)]
    guard_simplices: Option<u64>,
    /// subspace guard (default 5000)
    #[arg(long)]
    guard_subspaces: Option<u64>,
    /// JSON config file mirroring the suite configuration
    #[arg(long)]
    config: Option<PathBuf>,
    /// write the report here as well as stdout
    #[arg(long)]
    out: Option<PathBuf>,
    /// json | csv | table
    #[arg(long, default_value = "table")]
    format: String,
}

fn env_guard() -> Option<u64> {
    std::env::var("REES_LAB_GUARD_SIMPLICES")
        .ok()
        .and_then(|v| v.parse().ok())
}

fn build_family(family: &str, n: usize, q: Option<u32>, t: Option<usize>) -> Result<Poset> {
    match family {
        "boolean" => Ok(rees_core::catalog::boolean_lattice(n)),
        "chain" => Ok(rees_core::catalog::chain(n)),
        "tree" => Ok(rees_core::catalog::tary_tree(
            t.ok_or_else(|| anyhow!("tree requires --t"))?,
            n,
        )),
        "subspace" => Ok(rees_core::catalog::subspace_lattice(
            n,
            q.ok_or_else(|| anyhow!("subspace requires --q"))?,
        )?),
        "crosspolytope" => Ok(rees_core::catalog::crosspolytope_faces(n)),
        "isotropic" => Ok(rees_core::catalog::isotropic_subspace_poset(
            n,
            q.ok_or_else(|| anyhow!("isotropic requires --q"))?,
        )?),
        other => bail!("unknown family {other} (try boolean, chain, tree, subspace, crosspolytope, isotropic)"),
    }
}

fn parse_flavor(s: &str) -> Result<EulerianFlavor> {
    Ok(match s {
        "maj-exc" => EulerianFlavor::MajExc,
        "comaj-exc" => EulerianFlavor::ComajExc,
        "comaj-exc-fix" => EulerianFlavor::ComajExcFix,
        "maj-exc-fix" => EulerianFlavor::MajExcFix,
        other => bail!("unknown flavor {other}"),
    })
}

fn verify(args: &VerifyArgs) -> Result<bool> {
    let format = ExportFormat::parse(&args.format)
        .ok_or_else(|| anyhow!("unknown format {}", args.format))?;
    let suites: Vec<String> = if args.suite == "all" {
        list_suites().iter().map(|s| s.id.to_string()).collect()
    } else {
        vec![args.suite.clone()]
    };
    let mut all_pass = true;
    let mut outputs = Vec::new();
    for suite in suites {
        let mut config = match &args.config {
            Some(path) => {
                let data = fs::read_to_string(path)
                    .with_context(|| format!("reading {}", path.display()))?;
                let mut c: SuiteConfig = serde_json::from_str(&data)?;
                c.suite = suite.clone();
                c
            }
            None => SuiteConfig::new(&suite),
        };
        if let Some(n) = args.n_max {
            config.n_max = Some(n);
        }
        if let Some(qs) = &args.q {
            config.qs = qs.clone();
        }
        if let Some(ts) = &args.t {
            config.ts = ts.clone();
        }
        if let Some(seed) = args.seed {
            config.seed = seed;
        }
        if let Some(trials) = args.trials {
            config.trials = trials;
        }
        if let Some(m) = args.m {
            config.m = Some(m);
        }
        if let Some(cap) = args.degree_cap {
            config.degree_cap = Some(cap);
        }
        if let Some(g) = args.guard_simplices.or_else(env_guard) {
            config.max_simplices = g;
        }
        if let Some(g) = args.guard_subspaces {
            config.max_subspaces = g;
        }
        let report = run_suite(&config)?;
        all_pass &= report.all_pass();
        outputs.push(export(&report, format));
    }
    let rendered = outputs.join("\n");
    println!("{rendered}");
    if let Some(path) = &args.out {
        fs::write(path, &rendered).with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(all_pass)
}

fn real_main() -> Result<bool> {
    let cli = Cli::parse();
    match cli.command {
        Command::Poset { command } => match command {
            PosetCommand::Build {
                family,
                n,
                q,
                t,
                out,
                dot,
            } => {
                let poset = build_family(&family, n, q, t)?;
                let rendered = if dot {
                    poset_to_dot(&poset)
                } else {
                    poset_to_json(&poset)
                };
                match out {
                    Some(path) => fs::write(&path, rendered)
                        .with_context(|| format!("writing {}", path.display()))?,
                    None => println!("{rendered}"),
                }
                Ok(true)
            }
        },
        Command::Betti { file, guard } => {
            let poset = load_poset(&file)?;
            let guard = guard.or_else(env_guard).unwrap_or(DEFAULT_SIMPLEX_GUARD);
            let b = betti(&poset, guard)?;
            let euler_ok = euler_poincare_check(&poset, guard)?;
            let out = serde_json::json!({
                "betti": b.dims,
                "mu": mobius_invariant_hat(&poset),
                "euler_ok": euler_ok,
            });
            println!("{}", serde_json::to_string_pretty(&out)?);
            Ok(euler_ok)
        }
        Command::Mobius { file } => {
            let poset = load_poset(&file)?;
            let out = serde_json::json!({ "mu": mobius_invariant_hat(&poset) });
            println!("{}", serde_json::to_string_pretty(&out)?);
            Ok(true)
        }
        Command::Stats { word } => {
            let digits: Option<Vec<u8>> = word
                .chars()
                .map(|c| c.to_digit(10).map(|d| d as u8))
                .collect();
            let digits = digits.ok_or_else(|| anyhow!("permutation must be decimal digits"))?;
            let sigma = Permutation::new(digits)?;
            let s = stats(&sigma);
            let out = serde_json::json!({
                "exc": s.exc,
                "maj": s.maj,
                "comaj": s.comaj,
                "des": s.des,
                "fix": s.fix,
                "exd": exd_set(&sigma),
            });
            println!("{}", serde_json::to_string_pretty(&out)?);
            Ok(true)
        }
        Command::Poly { command } => match command {
            PolyCommand::Eulerian { n, flavor } => {
                let poly = rees_core::perm::q_eulerian(n, parse_flavor(&flavor)?);
                println!("{}", serde_json::to_string_pretty(&poly_to_json(&poly))?);
                Ok(true)
            }
        },
        Command::Symfunc { command } => match command {
            SymfuncCommand::QEulerian { n, j, k, m, basis } => {
                let m = m.unwrap_or(n as usize).max(n as usize);
                let expansion = match k {
                    Some(k) => rees_core::symfunc::eulerian_qsym_fix(n, j, k, m)?,
                    None => rees_core::symfunc::eulerian_qsym(n, j, m)?,
                };
                let f = rees_core::symfunc::to_monomial_basis(&expansion)?;
                let rendered = rees_core::io::symfunc_to_json_in_basis(&f, &basis)?;
                println!("{}", serde_json::to_string_pretty(&rendered)?);
                Ok(true)
            }
        },
        Command::Verify(args) => verify(&args),
        Command::ListSuites => {
            for info in list_suites() {
                println!("{:28} {}", info.id, info.summary);
                println!("{:28}   defaults: {}", "", info.defaults);
            }
            Ok(true)
        }
    }
}

fn load_poset(path: &PathBuf) -> Result<Poset> {
    let data =
        fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    Ok(poset_from_json(&data)?)
}

fn main() -> ExitCode {
    match real_main() {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
