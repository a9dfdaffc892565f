//! Command-line interface: enumeration, operadic operations, homology
//! reports, B-series checks, and the verification suites.

mod bseries_cmd;
mod cache;
mod config;
mod homology;
mod report;
mod suites;

use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use aromalab_core::linalg::LinComb;
use aromalab_core::operad::{
    compose_at, cyclic_brace, div, div0, lie_bracket, module_action, prelie, tau,
};
use aromalab_core::rational::format_q;
use aromalab_core::species::{
    enumerate_aromas, enumerate_rooted_trees, enumerate_unlabelled, parse_aroma, parse_element,
    parse_tree, print_aroma, print_tree, Element, UnlabelledKind,
};
use clap::{Parser, Subcommand};

use config::ConfigLayer;

#[derive(Parser)]
#[command(name = "aromalab", about = "Exact verification of rooted-tree and aromatic-forest algebra", version)]
struct Cli {
    /// Write the report as JSON to this path.
    #[arg(long, global = true)]
    json: Option<PathBuf>,

    /// Directory for cached bases.
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,

    /// Arity/order cap override for verification suites.
    #[arg(long, global = true)]
    max_n: Option<usize>,

    /// Seed for the pseudo-random test vector field.
    #[arg(long, global = true)]
    seed: Option<u64>,

    /// Config file with key = value lines (max-n, seed, cache-dir, parallel).
    #[arg(long, global = true)]
    config: Option<PathBuf>,

    /// Disable data-parallel loops.
    #[arg(long, global = true)]
    no_parallel: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List labelled or unlabelled trees and aromas.
    Enumerate {
        /// One of: trees, aromas, aromas-plus, unlabelled-trees,
        /// unlabelled-aromas, unlabelled-aromas-plus.
        #[arg(long)]
        kind: String,
        #[arg(long)]
        n: usize,
    },
    /// Apply one operation to serialized arguments and print the result.
    Op {
        /// One of: prelie, bracket, module, div, div0, tau, brace, compose.
        #[arg(long)]
        name: String,
        /// Serialized arguments (trees, aromas, or a slot label for compose).
        args: Vec<String>,
    },
    /// Build a complex and report chain and homology dimensions.
    Homology {
        /// One of: ce-L, ce-Ltilde, aromatic, aromatic-df, graphs, graphs-cr.
        #[arg(long)]
        complex: String,
        #[arg(long)]
        arity: usize,
        /// Write every differential matrix to this directory.
        #[arg(long)]
        dump_matrices: Option<PathBuf>,
    },
    /// Symbolic B-series checks.
    Bseries {
        /// Verify the divergence identity for all trees up to the order.
        #[arg(long)]
        check_divergence: bool,
        /// Coefficient JSON file for a volume-obstruction computation.
        #[arg(long)]
        obstruction: Option<PathBuf>,
        #[arg(long)]
        max_order: Option<usize>,
        /// Space dimension of the test field.
        #[arg(long, default_value_t = 3)]
        dim: usize,
    },
    /// Run a verification suite; exits nonzero when any check fails.
    Verify {
        /// One of: dimensions, kernels, embedding, ce-homology, bicomplex,
        /// graph-complex, bseries, characters, identities, all.
        suite: String,
    },
}

fn print_lincomb<K: Ord>(comb: &LinComb<K>, show: impl Fn(&K) -> String) {
    if comb.is_zero() {
        println!("0");
        return;
    }
    for (key, c) in comb.iter() {
        println!("{} * {}", format_q(c), show(key));
    }
}

fn expect_args<'a>(args: &'a [String], count: usize, usage: &str) -> Result<&'a [String]> {
    if args.len() != count {
        bail!("expected {count} argument(s): {usage}");
    }
    Ok(args)
}

fn run_op(name: &str, args: &[String]) -> Result<()> {
    match name {
        "prelie" | "bracket" => {
            let args = expect_args(args, 2, "two serialized trees")?;
            let a = parse_tree(&args[0])?;
            let b = parse_tree(&args[1])?;
            let out = if name == "prelie" {
                prelie(&a, &b)?
            } else {
                lie_bracket(&a, &b)?
            };
            print_lincomb(&out, print_tree);
        }
        "module" => {
            let args = expect_args(args, 2, "a serialized aroma and a tree")?;
            let m = parse_aroma(&args[0])?;
            let a = parse_tree(&args[1])?;
            print_lincomb(&module_action(&m, &a)?, print_aroma);
        }
        "div" | "div0" => {
            let args = expect_args(args, 1, "one serialized tree")?;
            let t = parse_tree(&args[0])?;
            let out = if name == "div" { div(&t) } else { div0(&t) };
            print_lincomb(&out, print_aroma);
        }
        "tau" => {
            let args = expect_args(args, 1, "one serialized tree")?;
            println!("{}", print_aroma(&tau(&parse_tree(&args[0])?)));
        }
        "brace" => {
            if args.is_empty() {
                bail!("expected at least one serialized tree");
            }
            let trees = args
                .iter()
                .map(|s| parse_tree(s))
                .collect::<std::result::Result<Vec<_>, _>>()?;
            print_lincomb(&cyclic_brace(&trees)?, print_aroma);
        }
        "compose" => {
            let args = expect_args(args, 3, "outer element, slot label, inner element")?;
            let outer = parse_element(&args[0])?;
            let star: u32 = args[1].parse().context("slot label")?;
            let inner = parse_element(&args[2])?;
            print_lincomb(&compose_at(&outer, star, &inner)?, Element::print);
        }
        other => bail!(
            "unknown operation {other:?}; available: prelie, bracket, module, div, div0, tau, brace, compose"
        ),
    }
    Ok(())
}

fn run_enumerate(kind: &str, n: usize, cache_dir: Option<&std::path::Path>) -> Result<Vec<String>> {
    let labels: Vec<u32> = (1..=n as u32).collect();
    let build: Box<dyn FnOnce() -> Result<Vec<String>>> = match kind {
        "trees" => Box::new(move || {
            Ok(enumerate_rooted_trees(&labels)?.iter().map(print_tree).collect())
        }),
        "aromas" => Box::new(move || {
            Ok(enumerate_aromas(&labels, 1)?.iter().map(print_aroma).collect())
        }),
        "aromas-plus" => Box::new(move || {
            Ok(enumerate_aromas(&labels, 2)?.iter().map(print_aroma).collect())
        }),
        "unlabelled-trees" => Box::new(move || {
            Ok(enumerate_unlabelled(UnlabelledKind::Tree, n)?
                .iter()
                .map(ToString::to_string)
                .collect())
        }),
        "unlabelled-aromas" => Box::new(move || {
            Ok(enumerate_unlabelled(UnlabelledKind::Aroma, n)?
                .iter()
                .map(ToString::to_string)
                .collect())
        }),
        "unlabelled-aromas-plus" => Box::new(move || {
            Ok(enumerate_unlabelled(UnlabelledKind::AromaPlus, n)?
                .iter()
                .map(ToString::to_string)
                .collect())
        }),
        other => bail!(
            "unknown kind {other:?}; available: trees, aromas, aromas-plus, \
             unlabelled-trees, unlabelled-aromas, unlabelled-aromas-plus"
        ),
    };
    cache::get_or_build(cache_dir, "enumerate", kind, n, build)
}

fn main() {
    let cli = Cli::parse();
    match run(cli) {
        Ok(all_pass) => {
            if !all_pass {
                std::process::exit(1);
            }
        }
        Err(err) => {
            eprintln!("error: {err:#}");
            std::process::exit(2);
        }
    }
}

fn run(cli: Cli) -> Result<bool> {
    let flags = ConfigLayer {
        max_n: cli.max_n,
        seed: cli.seed,
        cache_dir: cli.cache_dir.clone(),
        parallel: if cli.no_parallel { Some(false) } else { None },
    };
    let config = config::resolve(flags, cli.config.as_deref())?;
    aromalab_core::par::set_parallel(config.parallel);
    match &cli.command {
        Command::Enumerate { kind, n } => {
            if *n == 0 || *n > 8 {
                bail!("n must be between 1 and 8");
            }
            let items = run_enumerate(kind, *n, config.cache_dir.as_deref())?;
            for item in &items {
                println!("{item}");
            }
            if let Some(path) = &cli.json {
                std::fs::write(
                    path,
                    serde_json::to_string_pretty(&serde_json::json!({
                        "schema": 1,
                        "kind": kind,
                        "n": n,
                        "items": items,
                    }))?,
                )?;
            }
            Ok(true)
        }
        Command::Op { name, args } => {
            run_op(name, args)?;
            Ok(true)
        }
        Command::Homology {
            complex,
            arity,
            dump_matrices,
        } => {
            let report = homology::run(complex, *arity, dump_matrices.as_deref())?;
            homology::print_report(&report);
            if let Some(path) = &cli.json {
                std::fs::write(path, serde_json::to_string_pretty(&report)?)?;
            }
            Ok(true)
        }
        Command::Bseries {
            check_divergence,
            obstruction,
            max_order,
            dim,
        } => {
            if !check_divergence && obstruction.is_none() {
                bail!("pass --check-divergence and/or --obstruction FILE");
            }
            let mut report = bseries_cmd::BseriesReport {
                schema: 1,
                divergence: None,
                obstruction: None,
                all_pass: true,
            };
            if *check_divergence {
                let order = max_order.unwrap_or(4);
                let rows = bseries_cmd::check_divergence(order, *dim, config.seed)?;
                report.all_pass &= rows.iter().all(|r| r.holds);
                report.divergence = Some(rows);
            }
            if let Some(path) = obstruction {
                let order = max_order.unwrap_or(6);
                let b = bseries_cmd::load_coefficients(path, order)?;
                report.obstruction = Some(bseries_cmd::obstruction(&b)?);
            }
            bseries_cmd::print_report(&report);
            if let Some(path) = &cli.json {
                std::fs::write(path, serde_json::to_string_pretty(&report)?)?;
            }
            Ok(report.all_pass)
        }
        Command::Verify { suite } => {
            let report = suites::run_suite(suite, &config)?;
            report.print_table();
            if let Some(path) = &cli.json {
                std::fs::write(path, serde_json::to_string_pretty(&report)?)?;
            }
            Ok(report.all_pass)
        }
    }
}
