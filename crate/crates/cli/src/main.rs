//! `sspc`: generate graphs, solve and verify covers, check reductions and sweep claims.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use sspc_core::cover::{strong_feasible, verify_strong_witness, verify_weak_cover, StrongWitness};
use sspc_core::graph::io::{parse_edge_list, write_edge_list, write_sidecar, GraphMeta};
use sspc_core::harness::{verify_claims, write_csv, write_json, ClaimSelection, GraphInfo, ResultRecord};
use sspc_core::reduction::{check_reduction, reduce_vc, ReductionError};
use sspc_core::{
    compute_bounds, generate, naive_oracle, solve_exact, solve_greedy, FamilySpec, Graph, SolveError, SolverConfig,
    Variant, Vertex,
};

#[derive(Parser)]
#[command(name = "sspc", version, about = "Weak and strong k-shortest-path union covers")]
struct Cli {
    /// Disable the thread pool.
    #[arg(long, global = true)]
    sequential: bool,
    /// Abort exact searches after this many nodes (exit code 2).
    #[arg(long, global = true)]
    node_budget: Option<u64>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Exact,
    Greedy,
    Oracle,
}

#[derive(Clone, Copy, ValueEnum)]
enum VariantArg {
    Weak,
    Strong,
}

impl From<VariantArg> for Variant {
    fn from(v: VariantArg) -> Variant {
        match v {
            VariantArg::Weak => Variant::Weak,
            VariantArg::Strong => Variant::Strong,
        }
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Write a family graph as an edge list, plus a `.labels` sidecar.
    Gen {
        #[arg(long)]
        family: String,
        /// Comma-separated parameters, e.g. `5,2`.
        #[arg(long, value_delimiter = ',')]
        params: Vec<usize>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Minimum cover as a JSON result record.
    Solve {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        k: u32,
        #[arg(long, value_enum)]
        variant: VariantArg,
        #[arg(long, value_enum, default_value = "exact")]
        method: Method,
        /// Write the record here instead of stdout.
        #[arg(long)]
        json: Option<PathBuf>,
        /// Write the strong witness (`u v : p0 .. pd` lines) here.
        #[arg(long)]
        witness: Option<PathBuf>,
    },
    /// All bounds with applicability flags, as JSON.
    Bounds {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        k: u32,
    },
    /// Check a vertex set; exits 1 when it is not a cover.
    Verify {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        k: u32,
        /// Comma-separated vertex ids.
        #[arg(long, value_delimiter = ',')]
        set: Vec<Vertex>,
        /// Strong witness to check instead of searching for one.
        #[arg(long)]
        witness: Option<PathBuf>,
        /// Variant that decides the exit code when no witness is given.
        #[arg(long, value_enum, default_value = "strong")]
        variant: VariantArg,
    },
    /// Build the vertex cover gadget, plus `.labels` and `.roles` sidecars.
    Reduce {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        k: u32,
        /// Also validate the forward witness and solve the gadget exactly.
        #[arg(long)]
        check: bool,
        #[arg(long)]
        out: PathBuf,
    },
    /// Sweep the claims registry against exact optima.
    Claims {
        /// Family name or `all`.
        #[arg(long)]
        family: String,
        #[arg(long)]
        max_n: usize,
        #[arg(long)]
        csv: Option<PathBuf>,
    },
}

fn read_graph(path: &Path) -> Result<(Graph, Option<GraphMeta>)> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let parsed = parse_edge_list(&text).with_context(|| format!("parsing {}", path.display()))?;
    Ok(parsed)
}

fn write(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}

fn sidecar(path: &Path, ext: &str) -> PathBuf {
    let mut s = path.as_os_str().to_owned();
    s.push(".");
    s.push(ext);
    PathBuf::from(s)
}

fn info(g: &Graph, meta: Option<GraphMeta>) -> GraphInfo {
    match meta {
        Some(m) => GraphInfo::of(g, Some(m.family), Some(m.params)),
        None => GraphInfo::of(g, None, None),
    }
}

fn run(cli: Cli) -> Result<()> {
    let cfg = SolverConfig {
        parallel: !cli.sequential,
        node_budget: cli.node_budget,
        ..SolverConfig::default()
    };
    match cli.cmd {
        Cmd::Gen { family, params, out } => {
            let spec = FamilySpec::parse(&family, &params)?;
            let g = generate(&spec)?;
            let meta = GraphMeta {
                family: spec.family.name().to_string(),
                params: spec.params.clone(),
            };
            write(&out, &write_edge_list(&g, Some(&meta)))?;
            if let Some(labels) = g.labels() {
                write(&sidecar(&out, "labels"), &write_sidecar(labels))?;
            }
            println!("{spec}: n={} m={}", g.n(), g.m());
        }
        Cmd::Solve {
            input,
            k,
            variant,
            method,
            json,
            witness,
        } => {
            if k == 0 {
                bail!("k must be positive");
            }
            let (g, meta) = read_graph(&input)?;
            let variant = Variant::from(variant);
            let (r, name) = match method {
                Method::Exact => (solve_exact(&g, k, variant, &cfg)?, "exact"),
                Method::Greedy => (solve_greedy(&g, k, variant, &cfg)?, "greedy"),
                Method::Oracle => (naive_oracle(&g, k, variant, &cfg)?, "oracle"),
            };
            let bounds = compute_bounds(&g, k, &cfg)?;
            let witness_ref = match (&witness, &r.witness) {
                (Some(path), Some(w)) => {
                    write(path, &w.to_text())?;
                    Some(path.display().to_string())
                }
                _ => None,
            };
            let rec = ResultRecord::from_solve(info(&g, meta), &r, name, Some(bounds), witness_ref);
            let text = write_json(&[rec]);
            match json {
                Some(path) => write(&path, &text)?,
                None => print!("{text}"),
            }
        }
        Cmd::Bounds { input, k } => {
            if k == 0 {
                bail!("k must be positive");
            }
            let (g, _) = read_graph(&input)?;
            let b = compute_bounds(&g, k, &cfg)?;
            println!("{}", serde_json_pretty(&b)?);
        }
        Cmd::Verify {
            input,
            k,
            set,
            witness,
            variant,
        } => {
            if k == 0 {
                bail!("k must be positive");
            }
            let (g, _) = read_graph(&input)?;
            if let Some(&v) = set.iter().find(|&&v| v >= g.n()) {
                bail!("vertex {v} out of range for n = {}", g.n());
            }
            let ok = match witness {
                Some(path) => {
                    let text = fs::read_to_string(&path).with_context(|| format!("reading {}", path.display()))?;
                    let w = StrongWitness::parse(&g, &text)?;
                    let ok = verify_strong_witness(&g, &set, k, &w);
                    println!("witness: {}", if ok { "valid" } else { "invalid" });
                    ok
                }
                None => {
                    let weak = verify_weak_cover(&g, &set, k);
                    let strong = weak && strong_feasible(&g, &set, k, cfg.geodesic_cap)?.is_some();
                    println!("weak: {}", if weak { "valid" } else { "invalid" });
                    println!("strong: {}", if strong { "valid" } else { "invalid" });
                    match Variant::from(variant) {
                        Variant::Weak => weak,
                        Variant::Strong => strong,
                    }
                }
            };
            if !ok {
                bail!(Invalid);
            }
        }
        Cmd::Reduce { input, k, check, out } => {
            let (g, _) = read_graph(&input)?;
            let red = reduce_vc(&g, k)?;
            write(&out, &write_edge_list(&red.gadget, None))?;
            if let Some(labels) = red.gadget.labels() {
                write(&sidecar(&out, "labels"), &write_sidecar(labels))?;
            }
            write(&sidecar(&out, "roles"), &red.roles_text())?;
            println!("gadget: n={} m={}", red.gadget.n(), red.gadget.m());
            if check {
                let report = check_reduction(&g, k, &cfg)?;
                if !report.forward_valid {
                    eprintln!("warning: the forward witness set is not a strong cover");
                }
                println!("{}", serde_json_pretty(&report)?);
            }
        }
        Cmd::Claims { family, max_n, csv } => {
            let selection = if family == "all" {
                ClaimSelection::All
            } else {
                ClaimSelection::Family(family)
            };
            let reports = verify_claims(&selection, max_n, &cfg);
            for d in &reports {
                let computed = d.computed.map(|c| c.to_string()).unwrap_or_else(|| "-".into());
                let params: Vec<String> = d.params.iter().map(|p| p.to_string()).collect();
                println!(
                    "{} ({}) {}: claimed {} computed {} -> {}",
                    d.claim_id,
                    params.join(","),
                    d.variant,
                    d.claimed,
                    computed,
                    d.status
                );
            }
            if let Some(path) = csv {
                let records: Vec<ResultRecord> = reports.iter().map(ResultRecord::from_report).collect();
                let f = fs::File::create(&path).with_context(|| format!("writing {}", path.display()))?;
                write_csv(&records, f)?;
            }
        }
    }
    Ok(())
}

fn serde_json_pretty<T: serde::Serialize>(x: &T) -> Result<String> {
    Ok(serde_json::to_string_pretty(x)?)
}

/// Marker for a well-formed but rejected certificate.
#[derive(Debug)]
struct Invalid;

impl std::fmt::Display for Invalid {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str("not a cover")
    }
}

impl std::error::Error for Invalid {}

fn exit_code(e: &anyhow::Error) -> u8 {
    let size = e.chain().any(|c| {
        c.downcast_ref::<SolveError>().is_some_and(SolveError::is_size_limit)
            || matches!(c.downcast_ref::<ReductionError>(), Some(ReductionError::Solve(s)) if s.is_size_limit())
    });
    if size {
        2
    } else {
        1
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}
