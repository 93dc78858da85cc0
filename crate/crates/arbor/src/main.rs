//! Command-line surface. Results go to stdout as JSON (`--pretty` indents
//! them); failures go to stderr as {"error", "detail"} with exit code 1
//! for domain errors and 2 for usage errors.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use arbor::json::{
    csf_json, decomposition_json, edge_list_text, error_json, poly_from_json, poly_json,
    profile_json, roundtrip_report_json, scan_report_json,
};
use arbor::scan::{roundtrip, scan, Invariant};
use arbor_core::{
    canonical_code, code_digest, csf, decompose, free_trees, recover_profile, subtree_poly_fast,
    Tree, DEFAULT_CSF_CAP, DEFAULT_FREE_TREE_CAP,
};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(
    name = "arbor",
    version,
    about = "Exact tree invariants: subtree polynomials, chromatic symmetric functions, trunk/twig profiles"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate every free tree of one order
    Gen {
        /// Vertex count
        #[arg(long)]
        n: usize,
        /// Write one edge-list file per tree, named by canonical-code digest
        #[arg(long)]
        out_dir: Option<PathBuf>,
        /// Override the order cap
        #[arg(long)]
        cap: Option<usize>,
        /// Indent the JSON output
        #[arg(long)]
        pretty: bool,
    },
    /// Trunk and twigs of a tree
    Decompose {
        /// Edge-list file: first line n, then "u v" lines
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        pretty: bool,
    },
    /// Bivariate subtree polynomial of a tree
    SubtreePoly {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        pretty: bool,
    },
    /// Chromatic symmetric function in the power-sum basis
    Csf {
        #[arg(long = "in")]
        input: PathBuf,
        /// Override the vertex cap
        #[arg(long)]
        cap: Option<usize>,
        #[arg(long)]
        pretty: bool,
    },
    /// Recover trunk size and twig lengths from a polynomial file
    Recover {
        /// Polynomial JSON file, as written by subtree-poly
        #[arg(long = "poly-in")]
        poly_in: PathBuf,
        #[arg(long)]
        pretty: bool,
    },
    /// Recover every free tree up to an order and compare with the direct
    /// decomposition
    Roundtrip {
        #[arg(long)]
        n_max: usize,
        /// Worker threads (0 picks a default)
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long)]
        cap: Option<usize>,
        #[arg(long)]
        pretty: bool,
    },
    /// Search one order for invariant collisions
    Scan {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum)]
        invariant: InvariantArg,
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long)]
        cap: Option<usize>,
        #[arg(long)]
        pretty: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum InvariantArg {
    Csf,
    Subtree,
    Profile,
}

impl From<InvariantArg> for Invariant {
    fn from(arg: InvariantArg) -> Invariant {
        match arg {
            InvariantArg::Csf => Invariant::Csf,
            InvariantArg::Subtree => Invariant::SubtreePoly,
            InvariantArg::Profile => Invariant::RecoveredProfile,
        }
    }
}

struct Failure {
    code: &'static str,
    detail: String,
    exit: u8,
}

impl Failure {
    fn domain(code: &'static str, detail: impl ToString) -> Failure {
        Failure {
            code,
            detail: detail.to_string(),
            exit: 1,
        }
    }

    fn usage(detail: impl ToString) -> Failure {
        Failure {
            code: "usage",
            detail: detail.to_string(),
            exit: 2,
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse().command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!(
                "{}",
                serde_json::to_string(&error_json(f.code, &f.detail)).expect("serialize error")
            );
            ExitCode::from(f.exit)
        }
    }
}

fn emit(v: &Value, pretty: bool) {
    let text = if pretty {
        serde_json::to_string_pretty(v)
    } else {
        serde_json::to_string(v)
    };
    println!("{}", text.expect("serialize"));
}

/// Cap precedence: --cap flag, then ARBOR_CAP, then the built-in default.
fn resolve_cap(flag: Option<usize>, default: usize) -> Result<usize, Failure> {
    if let Some(cap) = flag {
        return Ok(cap);
    }
    match std::env::var("ARBOR_CAP") {
        Ok(text) => text
            .trim()
            .parse()
            .map_err(|_| Failure::usage(format!("ARBOR_CAP must be a nonnegative integer, got {text:?}"))),
        Err(std::env::VarError::NotPresent) => Ok(default),
        Err(e) => Err(Failure::usage(format!("ARBOR_CAP unreadable: {e}"))),
    }
}

fn read_tree(path: &Path) -> Result<Tree, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::domain("io", format!("{}: {e}", path.display())))?;
    Tree::parse(&text).map_err(|e| Failure::domain("bad_tree", e))
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Gen {
            n,
            out_dir,
            cap,
            pretty,
        } => {
            let cap = resolve_cap(cap, DEFAULT_FREE_TREE_CAP)?;
            let mut trees: Vec<(Vec<u8>, Tree)> = free_trees(n, cap)
                .map_err(|e| Failure::domain("cap_exceeded", e))?
                .map(|t| (canonical_code(&t), t))
                .collect();
            trees.sort_by(|a, b| a.0.cmp(&b.0));
            let out = match out_dir {
                Some(dir) => {
                    std::fs::create_dir_all(&dir)
                        .map_err(|e| Failure::domain("io", format!("{}: {e}", dir.display())))?;
                    let mut files = Vec::with_capacity(trees.len());
                    for (code, t) in &trees {
                        let name = format!("{}.tree", hex::encode(code_digest(code)));
                        std::fs::write(dir.join(&name), edge_list_text(t))
                            .map_err(|e| Failure::domain("io", format!("{name}: {e}")))?;
                        files.push(name);
                    }
                    json!({ "n": n, "count": trees.len(), "dir": dir, "files": files })
                }
                None => {
                    let listed: Vec<Value> = trees
                        .iter()
                        .map(|(code, t)| {
                            let edges: Vec<[u32; 2]> = t.edges().map(|(u, v)| [u, v]).collect();
                            json!({
                                "digest": hex::encode(code_digest(code)),
                                "edges": edges,
                            })
                        })
                        .collect();
                    json!({ "n": n, "count": trees.len(), "trees": listed })
                }
            };
            emit(&out, pretty);
            Ok(())
        }
        Command::Decompose { input, pretty } => {
            let t = read_tree(&input)?;
            let d = decompose(&t).map_err(|e| Failure::domain("no_edges", e))?;
            emit(&decomposition_json(&d), pretty);
            Ok(())
        }
        Command::SubtreePoly { input, pretty } => {
            let t = read_tree(&input)?;
            emit(&poly_json(t.n(), &subtree_poly_fast(&t)), pretty);
            Ok(())
        }
        Command::Csf { input, cap, pretty } => {
            let t = read_tree(&input)?;
            let cap = resolve_cap(cap, DEFAULT_CSF_CAP)?;
            let f = csf(&t, cap).map_err(|e| Failure::domain("cap_exceeded", e))?;
            emit(&csf_json(&f), pretty);
            Ok(())
        }
        Command::Recover { poly_in, pretty } => {
            let text = std::fs::read_to_string(&poly_in)
                .map_err(|e| Failure::domain("io", format!("{}: {e}", poly_in.display())))?;
            let value: Value = serde_json::from_str(&text)
                .map_err(|e| Failure::domain("bad_poly", format!("not JSON: {e}")))?;
            let (n, p) = poly_from_json(&value).map_err(|e| Failure::domain("bad_poly", e))?;
            if let Some(top) = p.max_q() {
                if top as usize + 1 != n {
                    return Err(Failure::domain(
                        "bad_poly",
                        format!("file reports n={n} but terms imply n={}", top + 1),
                    ));
                }
            }
            let profile =
                recover_profile(&p).map_err(|e| Failure::domain("recovery_failed", e))?;
            emit(&profile_json(&profile), pretty);
            Ok(())
        }
        Command::Roundtrip {
            n_max,
            jobs,
            cap,
            pretty,
        } => {
            let cap = resolve_cap(cap, DEFAULT_FREE_TREE_CAP)?;
            let report = roundtrip(n_max, jobs.unwrap_or(0), cap).map_err(scan_failure)?;
            emit(&roundtrip_report_json(&report), pretty);
            if report.failures.is_empty() {
                Ok(())
            } else {
                Err(Failure::domain("roundtrip_failed", report.summary()))
            }
        }
        Command::Scan {
            n,
            invariant,
            jobs,
            cap,
            pretty,
        } => {
            let invariant = Invariant::from(invariant);
            let cap = resolve_cap(cap, invariant.default_cap())?;
            let report = scan(n, invariant, jobs.unwrap_or(0), cap).map_err(scan_failure)?;
            emit(&scan_report_json(&report), pretty);
            Ok(())
        }
    }
}

fn scan_failure(e: arbor::scan::ScanError) -> Failure {
    match e {
        arbor::scan::ScanError::Cap(c) => Failure::domain("cap_exceeded", c),
        roundtrip @ arbor::scan::ScanError::RoundTrip { .. } => {
            Failure::domain("roundtrip_failed", roundtrip)
        }
    }
}
