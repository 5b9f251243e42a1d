use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use arbcolor_bench::{run_algorithm, run_manifest, write_csv, Algo, InputDescriptor, Manifest};
use arbcolor_core::coloring::{read_dump, write_dump, Violation};
use arbcolor_core::generators::GenSpec;
use arbcolor_core::recursive::PruneBy;
use arbcolor_core::{read_edge_list, verify_colors, write_edge_list, Color, Graph};
use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "arbcolor", version, about = "(Δ+1)-edge-coloring toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a graph and write it as an edge list.
    Generate(GenerateArgs),
    /// Color an edge-list graph and write the coloring dump.
    Color(ColorArgs),
    /// Check a coloring dump against a graph.
    Verify(VerifyArgs),
    /// Run a benchmark manifest and write CSV rows.
    Bench(BenchArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Star,
    ForestUnion,
    StarPlusForests,
    ErdosRenyi,
    PreferentialAttachment,
    Grid,
}

#[derive(clap::Args)]
struct GenerateArgs {
    #[arg(long, required_unless_present = "spec")]
    family: Option<Family>,
    /// Full generator spec as JSON instead of the per-family flags.
    #[arg(long, conflicts_with = "family")]
    spec: Option<String>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    alpha: Option<usize>,
    #[arg(long)]
    degree: Option<usize>,
    #[arg(long)]
    rows: Option<usize>,
    #[arg(long)]
    cols: Option<usize>,
    #[arg(long)]
    star_leaves: Option<usize>,
    #[arg(long, env = "ARBCOLOR_SEED", default_value_t = 0)]
    seed: u64,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(clap::Args)]
struct ColorArgs {
    graph: PathBuf,
    #[arg(long, value_enum, default_value = "color-edges")]
    algo: Algo,
    #[arg(long, env = "ARBCOLOR_SEED", default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value = "weight")]
    prune_by: PruneArg,
    /// Record per-level statistics or per-step sizes in the report.
    #[arg(long)]
    trace: bool,
    /// Where to write the JSON run report.
    #[arg(long)]
    report: Option<PathBuf>,
    /// Where to write the coloring dump; stdout if absent.
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum PruneArg {
    Weight,
    Size,
}

#[derive(clap::Args)]
struct VerifyArgs {
    graph: PathBuf,
    coloring: PathBuf,
    /// Palette size; Δ + 1 if absent.
    #[arg(long)]
    palette: Option<Color>,
}

#[derive(clap::Args)]
struct BenchArgs {
    manifest: PathBuf,
    /// CSV destination; stdout if absent.
    #[arg(short, long)]
    output: Option<PathBuf>,
    /// Also write every run report as JSON lines.
    #[arg(long)]
    jsonl: Option<PathBuf>,
    /// Worker threads for matrix cells.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Generate(a) => generate(a),
        Command::Color(a) => color(a),
        Command::Verify(a) => verify(a),
        Command::Bench(a) => bench(a),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn write_out(path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => io::stdout().write_all(text.as_bytes()).context("writing stdout"),
    }
}

fn load_graph(path: &Path) -> Result<Graph> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    read_edge_list(&text).with_context(|| format!("parsing {}", path.display()))
}

fn need(v: Option<usize>, flag: &str) -> Result<usize> {
    v.with_context(|| format!("--{flag} is required for this family"))
}

fn build_spec(a: &GenerateArgs) -> Result<GenSpec> {
    if let Some(json) = &a.spec {
        return serde_json::from_str(json).context("parsing --spec");
    }
    let Some(family) = a.family else {
        bail!("either --family or --spec is required");
    };
    let seed = a.seed;
    Ok(match family {
        Family::Star => GenSpec::Star { n: need(a.n, "n")? },
        Family::ForestUnion => GenSpec::ForestUnion {
            n: need(a.n, "n")?,
            alpha: need(a.alpha, "alpha")?,
            seed,
        },
        Family::StarPlusForests => GenSpec::StarPlusForests {
            n: need(a.n, "n")?,
            alpha: need(a.alpha, "alpha")?,
            star_leaves: a.star_leaves,
            seed,
        },
        Family::ErdosRenyi => GenSpec::ErdosRenyi {
            n: need(a.n, "n")?,
            m: need(a.m, "m")?,
            seed,
        },
        Family::PreferentialAttachment => GenSpec::PreferentialAttachment {
            n: need(a.n, "n")?,
            degree: need(a.degree, "degree")?,
            seed,
        },
        Family::Grid => GenSpec::Grid {
            rows: need(a.rows, "rows")?,
            cols: need(a.cols, "cols")?,
        },
    })
}

fn generate(a: GenerateArgs) -> Result<ExitCode> {
    let spec = build_spec(&a)?;
    let g = spec.generate()?;
    write_out(a.output.as_deref(), &write_edge_list(&g))?;
    Ok(ExitCode::SUCCESS)
}

fn color(a: ColorArgs) -> Result<ExitCode> {
    let g = load_graph(&a.graph)?;
    let prune_by = match a.prune_by {
        PruneArg::Weight => PruneBy::Weight,
        PruneArg::Size => PruneBy::Size,
    };
    let algo = a.algo.with_prune_by(prune_by);
    let input = InputDescriptor::File {
        path: a.graph.clone(),
    };
    let outcome = run_algorithm(&g, input, algo, a.seed, a.trace);
    write_out(a.output.as_deref(), &write_dump(&outcome.colors))?;
    let report = &outcome.report;
    if let Some(p) = &a.report {
        let json = serde_json::to_string_pretty(report)?;
        fs::write(p, json + "\n").with_context(|| format!("writing {}", p.display()))?;
    }
    eprintln!(
        "{}: n={} m={} Δ={} colors={} proper={} wall={}us",
        algo.name(),
        report.n,
        report.m,
        report.max_degree,
        report.colors_used,
        report.proper,
        report.wall_us
    );
    Ok(if report.ok() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn verify(a: VerifyArgs) -> Result<ExitCode> {
    let g = load_graph(&a.graph)?;
    let text = fs::read_to_string(&a.coloring)
        .with_context(|| format!("reading {}", a.coloring.display()))?;
    let colors = read_dump(&text, g.edge_count())
        .with_context(|| format!("parsing {}", a.coloring.display()))?;
    let palette = a.palette.unwrap_or(g.max_degree() as Color + 1);
    let report = verify_colors(&g, &colors, palette);
    println!("{}", serde_json::to_string(&report)?);
    for v in &report.violations {
        match v {
            Violation::SharedColor {
                vertex,
                color,
                edges,
            } => eprintln!(
                "vertex {vertex}: edges {} and {} share color {color}",
                edges.0, edges.1
            ),
            Violation::OutOfPalette { edge, color } => {
                eprintln!("edge {edge}: color {color} outside 1..={palette}")
            }
        }
    }
    Ok(if report.proper {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn bench(a: BenchArgs) -> Result<ExitCode> {
    let text = fs::read_to_string(&a.manifest)
        .with_context(|| format!("reading {}", a.manifest.display()))?;
    let manifest: Manifest = serde_json::from_str(&text).context("parsing manifest")?;
    let cells = run_manifest(&manifest, a.jobs);
    let rows: Vec<_> = cells.iter().map(|c| c.row.clone()).collect();
    let mut csv_bytes = Vec::new();
    write_csv(&mut csv_bytes, &rows)?;
    write_out(a.output.as_deref(), std::str::from_utf8(&csv_bytes)?)?;
    if let Some(p) = &a.jsonl {
        let mut out = String::new();
        for r in cells.iter().flat_map(|c| c.reports.iter()) {
            out.push_str(&serde_json::to_string(r)?);
            out.push('\n');
        }
        fs::write(p, out).with_context(|| format!("writing {}", p.display()))?;
    }
    Ok(if rows.iter().any(|r| r.status == "improper") {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    })
}
