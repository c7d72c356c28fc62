//! Command-line front end: parse and emit graphs and colorings, run the
//! computations, render grid colorings, and export DOT.
//!
//! Exit codes: 0 success, 1 domain or input errors, 2 usage errors, and 3
//! from `verify` when the coloring is not locally identifying.

use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use lidcolor::solver::find_lid_coloring_with;
use lidcolor::{
    cartesian_product, construct_family, lid_report, tensor_product, Coloring, FamilySpec, Graph,
    SolveResult, SolverOptions,
};

mod dot;
mod grid;

pub use dot::to_dot;
pub use grid::{parse_grid, render_grid};

#[derive(Parser)]
#[command(name = "lidcolor", version, about = "Locally identifying colorings of graphs")]
struct Cli {
    /// Vertex numbering used by input files (outputs are always 0-indexed).
    #[arg(long, global = true, default_value_t = 0, value_parser = clap::value_parser!(u8).range(0..=1))]
    indexing: u8,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct FamilyArgs {
    /// One of: path, cycle, cart-cycle-path, cart-cycle-cycle,
    /// tensor-path-path, tensor-cycle-path, tensor-cycle-cycle.
    #[arg(long)]
    family: String,

    /// Cycle length or path length (the only parameter for path and cycle).
    #[arg(short)]
    m: usize,

    /// Second factor size for product families.
    #[arg(short)]
    n: Option<usize>,
}

impl FamilyArgs {
    fn spec(&self) -> Result<FamilySpec, Failure> {
        Ok(FamilySpec::from_name(&self.family, self.m, self.n)?)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print a family instance's lid-chromatic number from the closed forms.
    Compute(FamilyArgs),

    /// Build a certified lid coloring of a family instance.
    Construct {
        #[command(flatten)]
        family: FamilyArgs,

        /// Write the coloring as JSON to this file instead of standard output.
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,

        /// Print the coloring as a grid, one row per line.
        #[arg(long)]
        grid: bool,
    },

    /// Check a coloring against a graph; exit 0 only if locally identifying.
    Verify {
        #[arg(long, value_name = "FILE")]
        graph: PathBuf,

        #[arg(long, value_name = "FILE")]
        coloring: PathBuf,

        /// Print the full verification report in this format.
        #[arg(long, value_name = "FORMAT")]
        report: Option<ReportFormat>,
    },

    /// Compute the exact lid-chromatic number and write a certificate file.
    Exact {
        #[arg(long, value_name = "FILE")]
        graph: PathBuf,

        /// Stop after this many colors and report a lower bound instead.
        #[arg(long, value_name = "INT")]
        max_k: Option<u32>,

        /// Search node budget (default one billion).
        #[arg(long, value_name = "INT")]
        budget: Option<u64>,

        /// Keep the certificate reproducible even with --jobs above one.
        #[arg(long)]
        deterministic: bool,

        /// Worker threads for refutation searches.
        #[arg(long, value_name = "INT")]
        jobs: Option<usize>,
    },

    /// Build the Cartesian or tensor product of two graphs.
    Product {
        #[arg(long, value_enum)]
        op: ProductOp,

        /// First factor graph file.
        #[arg(long, value_name = "FILE")]
        g: PathBuf,

        /// Second factor graph file.
        #[arg(long, value_name = "FILE")]
        h: PathBuf,

        /// Write the product graph here instead of standard output.
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },

    /// Re-emit a graph, with an optional coloring, as DOT, JSON, or a grid.
    Export {
        #[arg(long, value_name = "FILE")]
        graph: PathBuf,

        #[arg(long, value_name = "FILE")]
        coloring: Option<PathBuf>,

        #[arg(long, value_enum)]
        format: ExportFormat,

        /// Row count for the grid layout (grid format only).
        #[arg(long, value_name = "INT")]
        rows: Option<usize>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum ProductOp {
    Cartesian,
    Tensor,
}

#[derive(Clone, Copy, ValueEnum)]
enum ExportFormat {
    Dot,
    Json,
    Grid,
}

/// A failed command: usage errors exit 2, everything else exits 1.
enum Failure {
    Usage(String),
    Domain(String),
}

impl Failure {
    fn report(self) -> i32 {
        match self {
            Failure::Usage(msg) => {
                eprintln!("error: {msg}");
                2
            }
            Failure::Domain(msg) => {
                eprintln!("error: {msg}");
                1
            }
        }
    }
}

impl From<lidcolor::Error> for Failure {
    fn from(e: lidcolor::Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

/// Runs the command line and returns the process exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli) {
        Ok(code) => code,
        Err(failure) => failure.report(),
    }
}

fn dispatch(cli: Cli) -> Result<i32, Failure> {
    let indexing = cli.indexing;
    match cli.command {
        Command::Compute(family) => compute(&family),
        Command::Construct { family, out, grid } => construct(&family, out.as_deref(), grid),
        Command::Verify { graph, coloring, report } => verify(&graph, &coloring, report, indexing),
        Command::Exact { graph, max_k, budget, deterministic, jobs } => {
            exact(&graph, max_k, budget, deterministic, jobs, indexing)
        }
        Command::Product { op, g, h, out } => product(op, &g, &h, out.as_deref(), indexing),
        Command::Export { graph, coloring, format, rows } => {
            export(&graph, coloring.as_deref(), format, rows, indexing)
        }
    }
}

fn compute(family: &FamilyArgs) -> Result<i32, Failure> {
    let spec = family.spec()?;
    let (value, case) = spec.chi_lid_case()?;
    eprintln!("{} m={}{}: {case}", spec.name(), family.m, opt_n(family.n));
    println!("{value}");
    Ok(0)
}

fn opt_n(n: Option<usize>) -> String {
    n.map(|n| format!(" n={n}")).unwrap_or_default()
}

fn construct(family: &FamilyArgs, out: Option<&Path>, grid: bool) -> Result<i32, Failure> {
    let spec = family.spec()?;
    // construct_family re-verifies internally; nothing unverified is emitted.
    let coloring = construct_family(&spec)?;
    let (_, labeling) = spec.build()?;
    if grid {
        print!("{}", render_grid(&coloring, labeling.rows, labeling.cols)?);
    }
    let json = serde_json::to_string(&coloring).map_err(json_failure)?;
    match out {
        Some(path) => write_file(path, &json)?,
        None if !grid => println!("{json}"),
        None => {}
    }
    Ok(0)
}

fn verify(
    graph: &Path,
    coloring: &Path,
    format: Option<ReportFormat>,
    indexing: u8,
) -> Result<i32, Failure> {
    let g = read_graph(graph, indexing)?;
    let f = read_coloring(coloring)?;
    let report = lid_report(&g, &f)?;
    match format {
        Some(ReportFormat::Json) => {
            println!("{}", serde_json::to_string_pretty(&report).map_err(json_failure)?)
        }
        None => {
            if report.is_lid() {
                println!(
                    "locally identifying: {} colors, {} twin edges skipped",
                    report.colors_used, report.twin_edges
                );
            } else {
                println!("not locally identifying");
                for (u, v) in &report.improper_edges {
                    println!("improper edge: {u} {v}");
                }
                for (u, v) in &report.bad_edges {
                    println!("bad edge: {u} {v}");
                }
            }
        }
    }
    Ok(if report.is_lid() { 0 } else { 3 })
}

fn exact(
    graph: &Path,
    max_k: Option<u32>,
    budget: Option<u64>,
    deterministic: bool,
    jobs: Option<usize>,
    indexing: u8,
) -> Result<i32, Failure> {
    let g = read_graph(graph, indexing)?;
    let jobs = jobs.unwrap_or(1);
    let opts = SolverOptions {
        budget: budget.unwrap_or_else(|| SolverOptions::default().budget),
        jobs,
        deterministic: deterministic || jobs == 1,
    };
    let solved = match max_k {
        None => lidcolor::solver::chi_lid_exact_with(&g, &opts)?,
        Some(cap) => match bounded_exact(&g, cap, &opts)? {
            Some(solved) => solved,
            None => {
                println!("> {cap}");
                return Ok(0);
            }
        },
    };
    println!("{}", solved.value);
    let cert_path = graph.with_extension("cert.json");
    let json = serde_json::to_string(&solved.certificate).map_err(json_failure)?;
    write_file(&cert_path, &json)?;
    eprintln!("certificate written to {}", cert_path.display());
    Ok(0)
}

/// Ascending search that stops at `cap` colors; `None` means the whole range
/// was refuted.
fn bounded_exact(g: &Graph, cap: u32, opts: &SolverOptions) -> Result<Option<SolveResult>, Failure> {
    let n = g.num_vertices() as u32;
    for k in 1..=cap.min(n) {
        if let Some(certificate) = find_lid_coloring_with(g, k, &[], opts)? {
            return Ok(Some(SolveResult { value: k, certificate, exhausted_below: true }));
        }
    }
    Ok(None)
}

fn product(
    op: ProductOp,
    g_path: &Path,
    h_path: &Path,
    out: Option<&Path>,
    indexing: u8,
) -> Result<i32, Failure> {
    let g = read_graph(g_path, indexing)?;
    let h = read_graph(h_path, indexing)?;
    let (prod, labeling) = match op {
        ProductOp::Cartesian => cartesian_product(&g, &h),
        ProductOp::Tensor => tensor_product(&g, &h),
    };
    eprintln!("{} x {} vertices, {} edges", labeling.rows, labeling.cols, prod.num_edges());
    let json = serde_json::to_string(&prod).map_err(json_failure)?;
    match out {
        Some(path) => write_file(path, &json)?,
        None => println!("{json}"),
    }
    Ok(0)
}

fn export(
    graph: &Path,
    coloring: Option<&Path>,
    format: ExportFormat,
    rows: Option<usize>,
    indexing: u8,
) -> Result<i32, Failure> {
    let g = read_graph(graph, indexing)?;
    let f = coloring.map(read_coloring).transpose()?;
    match format {
        ExportFormat::Dot => print!("{}", to_dot(&g, f.as_ref())?),
        ExportFormat::Json => println!("{}", serde_json::to_string(&g).map_err(json_failure)?),
        ExportFormat::Grid => {
            let f = f.ok_or_else(|| Failure::Usage("grid format needs --coloring".into()))?;
            let rows = rows.ok_or_else(|| Failure::Usage("grid format needs --rows".into()))?;
            if rows == 0 || f.len() % rows != 0 {
                return Err(Failure::Domain(format!(
                    "cannot lay {} colors out in {rows} rows",
                    f.len()
                )));
            }
            print!("{}", render_grid(&f, rows, f.len() / rows)?);
        }
    }
    Ok(0)
}

/// Reads a graph file, shifting 1-indexed edge lists down when asked to.
fn read_graph(path: &Path, indexing: u8) -> Result<Graph, Failure> {
    let text = read_file(path)?;
    if indexing == 0 {
        return serde_json::from_str(&text)
            .map_err(|e| Failure::Domain(format!("{}: {e}", path.display())));
    }
    #[derive(serde::Deserialize)]
    struct Raw {
        n: usize,
        edges: Vec<(usize, usize)>,
    }
    let raw: Raw = serde_json::from_str(&text)
        .map_err(|e| Failure::Domain(format!("{}: {e}", path.display())))?;
    let mut shifted = Vec::with_capacity(raw.edges.len());
    for (u, v) in raw.edges {
        if u == 0 || v == 0 {
            return Err(Failure::Domain(format!(
                "{}: vertex 0 in a 1-indexed graph",
                path.display()
            )));
        }
        shifted.push((u - 1, v - 1));
    }
    Ok(Graph::from_edges(raw.n, &shifted)?)
}

fn read_coloring(path: &Path) -> Result<Coloring, Failure> {
    let text = read_file(path)?;
    serde_json::from_str(&text).map_err(|e| Failure::Domain(format!("{}: {e}", path.display())))
}

fn read_file(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Domain(format!("{}: {e}", path.display())))
}

fn write_file(path: &Path, contents: &str) -> Result<(), Failure> {
    fs::write(path, contents).map_err(|e| Failure::Domain(format!("{}: {e}", path.display())))
}

fn json_failure(e: serde_json::Error) -> Failure {
    Failure::Domain(e.to_string())
}
