use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};
use dicut::exact::{MinCover, SearchOptions};
use dicut::*;

/// Exit statuses shared by every subcommand.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Status {
    Ok = 0,
    Negative = 1,
    Usage = 2,
    Budget = 3,
}

#[derive(Debug)]
struct Failure {
    status: Status,
    msg: String,
}

impl Failure {
    fn usage(msg: impl Into<String>) -> Self {
        Failure {
            status: Status::Usage,
            msg: msg.into(),
        }
    }

    fn negative(msg: impl Into<String>) -> Self {
        Failure {
            status: Status::Negative,
            msg: msg.into(),
        }
    }
}

type CmdResult = Result<Status, Failure>;

#[derive(Parser)]
#[command(name = "dicut", version, about = "Cover digraph edges with directed cuts")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Test membership in D(k,l) and print the bipartition.
    Check {
        file: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        l: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build a verified cut cover.
    Cover {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Method::Auto)]
        method: Method,
        /// Degree bound for the theorem3 method.
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Write the good-coloring certificate (theorem4 only).
        #[arg(long)]
        certificate: Option<PathBuf>,
        /// Drop cuts that cover no edge.
        #[arg(long)]
        prune: bool,
    },
    /// Check a cover file against a digraph.
    Verify { file: PathBuf, cover: PathBuf },
    /// Compute the exact cover number by search.
    Exact {
        file: PathBuf,
        #[arg(long, default_value_t = 7)]
        max_k: usize,
        /// Wall-clock budget in seconds.
        #[arg(long, default_value_t = 60.0)]
        timeout: f64,
        /// Write `<prefix>.k<k>.cnf` for every attempted k >= 1.
        #[arg(long)]
        export_cnf: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Explore top-level branches concurrently.
        #[arg(long)]
        parallel: bool,
    },
    /// Generate an instance in edge-list format.
    Gen {
        #[command(subcommand)]
        kind: GenKind,
        #[arg(long, global = true)]
        out: Option<PathBuf>,
    },
    /// Export a digraph (optionally with a cover) as Graphviz DOT.
    Dot {
        file: PathBuf,
        #[arg(long)]
        cover: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Auto,
    Coloring,
    Theorem3,
    Theorem4,
}

#[derive(Subcommand)]
enum GenKind {
    /// Complete digraph on n vertices.
    Complete { n: usize },
    /// The 7-vertex circulant tournament.
    D1,
    /// The 49-vertex witness digraph in D(3,3).
    Dstar {
        /// Where to write the label map (default: `<out>.labels` when --out is set).
        #[arg(long)]
        labels: Option<PathBuf>,
    },
    /// Seeded random member of D(k,l).
    Random {
        #[arg(long)]
        nx: usize,
        #[arg(long)]
        ny: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        l: usize,
        #[arg(long, default_value_t = 0.5)]
        density: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

fn load_digraph(path: &Path) -> Result<Digraph, Failure> {
    parse_edge_list(&read(path)?).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), Failure> {
    match out {
        Some(p) => fs::write(p, text).map_err(|e| Failure::usage(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn cmd_check(file: &Path, k: usize, l: usize, out: Option<&Path>) -> CmdResult {
    let d = load_digraph(file)?;
    match find_bipartition(&d, k, l) {
        Ok(p) => {
            emit(out, &format!("{}\n", p.to_side_string()))?;
            Ok(Status::Ok)
        }
        Err(w) => {
            println!(
                "not in D({k},{l}): vertex {} has indegree {} > {k} and outdegree {} > {l}",
                w.vertex, w.in_degree, w.out_degree
            );
            Ok(Status::Negative)
        }
    }
}

fn cmd_cover(
    file: &Path,
    method: Method,
    k: Option<usize>,
    out: Option<&Path>,
    certificate: Option<&Path>,
    prune: bool,
) -> CmdResult {
    let d = load_digraph(file)?;
    let method = match method {
        Method::Auto if find_bipartition(&d, 4, 4).is_ok() => Method::Theorem4,
        Method::Auto => Method::Coloring,
        m => m,
    };
    if certificate.is_some() && !matches!(method, Method::Theorem4) {
        return Err(Failure::negative("--certificate needs the theorem4 method"));
    }
    let mut cover = match method {
        Method::Coloring => cover_via_coloring(&d),
        Method::Theorem3 => {
            let k = k.ok_or_else(|| Failure::negative("the theorem3 method needs --k"))?;
            theorem3_cover(&d, k).map_err(|e| Failure::negative(e.to_string()))?
        }
        Method::Theorem4 => {
            let res = theorem4_cover(&d).map_err(|e| Failure::negative(e.to_string()))?;
            if let Some(path) = certificate {
                fs::write(path, res.certificate.to_text())
                    .map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
            }
            res.cover
        }
        Method::Auto => unreachable!(),
    };
    if prune {
        cover = prune_idle_cuts(&d, &cover);
    }
    match verify_cover(&d, &cover) {
        Ok(CoverCheck::Covered) => {}
        other => return Err(Failure::negative(format!("constructed cover failed verification: {other:?}"))),
    }
    eprintln!("{} cuts", cover.k());
    emit(out, &cover.to_text())?;
    Ok(Status::Ok)
}

fn cmd_verify(file: &Path, cover_path: &Path) -> CmdResult {
    let d = load_digraph(file)?;
    let cover = CutCover::parse(&read(cover_path)?)
        .map_err(|e| Failure::usage(format!("{}: {e}", cover_path.display())))?;
    match verify_cover(&d, &cover).map_err(|e| Failure::usage(e.to_string()))? {
        CoverCheck::Covered => {
            println!("covered: {} edges by {} cuts", d.edge_count(), cover.k());
            Ok(Status::Ok)
        }
        CoverCheck::Uncovered(edges) => {
            println!("{} uncovered edge(s):", edges.len());
            for (u, v) in edges {
                println!("{u} {v}");
            }
            Ok(Status::Negative)
        }
    }
}

fn cmd_exact(
    file: &Path,
    max_k: usize,
    timeout: f64,
    export_prefix: Option<&Path>,
    out: Option<&Path>,
    parallel: bool,
) -> CmdResult {
    let d = load_digraph(file)?;
    if !(timeout.is_finite() && timeout > 0.0) {
        return Err(Failure::usage("--timeout must be positive"));
    }
    let budget = SearchBudget::with_time(Duration::from_secs_f64(timeout)).map_err(|e| Failure::usage(e.to_string()))?;
    let options = SearchOptions {
        symmetry_breaking: true,
        parallel,
    };
    let result = min_cover_number(&d, max_k, budget, options).map_err(|e| Failure::usage(e.to_string()))?;

    let attempted = match &result {
        MinCover::Exact { value, .. } => *value,
        MinCover::AboveMax { k_max, .. } => *k_max,
        MinCover::Timeout {
            proven_infeasible_below,
            ..
        } => *proven_infeasible_below,
    };
    if let Some(prefix) = export_prefix {
        for k in 1..=attempted {
            let cnf = export_cnf(&d, k).map_err(|e| Failure::usage(e.to_string()))?;
            let path = PathBuf::from(format!("{}.k{k}.cnf", prefix.display()));
            fs::write(&path, cnf).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
        }
    }

    match result {
        MinCover::Exact {
            value,
            witness,
            nodes_explored,
        } => {
            println!("nu = {value} ({nodes_explored} nodes)");
            let cover = cover_from_codes(&d, &witness).map_err(|e| Failure::usage(e.to_string()))?;
            emit(out, &cover.to_text())?;
            Ok(Status::Ok)
        }
        MinCover::AboveMax { k_max, nodes_explored } => {
            println!("no cover with <={k_max} cuts ({nodes_explored} nodes)");
            Ok(Status::Negative)
        }
        MinCover::Timeout {
            proven_infeasible_below,
            nodes_explored,
        } => {
            println!("budget exhausted: nu >= {proven_infeasible_below} ({nodes_explored} nodes)");
            Ok(Status::Budget)
        }
    }
}

fn cmd_gen(kind: &GenKind, out: Option<&Path>) -> CmdResult {
    let d = match kind {
        GenKind::Complete { n } => complete_digraph(*n),
        GenKind::D1 => circulant_tournament7(),
        GenKind::Dstar { labels } => {
            let (d, names) = build_dstar();
            let label_path = labels
                .clone()
                .or_else(|| out.map(|o| PathBuf::from(format!("{}.labels", o.display()))));
            if let Some(path) = label_path {
                fs::write(&path, names.to_text()).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
            }
            d
        }
        GenKind::Random {
            nx,
            ny,
            k,
            l,
            density,
            seed,
        } => {
            if !(0.0..=1.0).contains(density) {
                return Err(Failure::usage("--density must lie in [0, 1]"));
            }
            random_dkl(*nx, *ny, *k, *l, *density, *seed)
        }
    };
    emit(out, &to_edge_list(&d))?;
    Ok(Status::Ok)
}

fn cmd_dot(file: &Path, cover: Option<&Path>, out: Option<&Path>) -> CmdResult {
    let d = load_digraph(file)?;
    let cover = match cover {
        Some(p) => Some(CutCover::parse(&read(p)?).map_err(|e| Failure::usage(format!("{}: {e}", p.display())))?),
        None => None,
    };
    let dot = export_dot(&d, cover.as_ref()).map_err(|e| Failure::negative(e.to_string()))?;
    emit(out, &dot)?;
    Ok(Status::Ok)
}

fn run(cli: Cli) -> CmdResult {
    match &cli.command {
        Command::Check { file, k, l, out } => cmd_check(file, *k, *l, out.as_deref()),
        Command::Cover {
            file,
            method,
            k,
            out,
            certificate,
            prune,
        } => cmd_cover(file, *method, *k, out.as_deref(), certificate.as_deref(), *prune),
        Command::Verify { file, cover } => cmd_verify(file, cover),
        Command::Exact {
            file,
            max_k,
            timeout,
            export_cnf,
            out,
            parallel,
        } => cmd_exact(file, *max_k, *timeout, export_cnf.as_deref(), out.as_deref(), *parallel),
        Command::Gen { kind, out } => cmd_gen(kind, out.as_deref()),
        Command::Dot { file, cover, out } => cmd_dot(file, cover.as_deref(), out.as_deref()),
    }
}

fn main() -> ExitCode {
    // clap exits with status 2 on usage errors.
    let cli = Cli::parse();
    let status = match run(cli) {
        Ok(s) => s,
        Err(f) => {
            eprintln!("error: {}", f.msg);
            f.status
        }
    };
    ExitCode::from(status as u8)
}
