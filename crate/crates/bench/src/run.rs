//! Running one coloring algorithm on one graph and reporting on it.

use std::path::PathBuf;
use std::time::Instant;

use arbcolor_core::generators::GenSpec;
use arbcolor_core::recursive::{
    check_prune_bounds, collect_level_stats, recursive_color_edges_with, LevelStats, PruneBy,
    RecursiveOptions,
};
use arbcolor_core::sequential::{color_edges, color_edges_deterministic, color_edges_traced};
use arbcolor_core::{verify_colors, Color, Graph, PartialColoring};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

/// Bumped whenever a field of [`RunReport`] or a CSV column changes.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Algo {
    /// Deterministic baseline: edges in id order, fan at the lower id.
    Naive,
    /// Randomized single-edge coloring, repeated.
    ColorEdges,
    /// Euler-partition recursion, pruning by class weight.
    Recursive,
    /// Euler-partition recursion, pruning by class size.
    RecursiveSizePruneAblation,
}

impl Algo {
    pub fn name(self) -> &'static str {
        match self {
            Algo::Naive => "naive",
            Algo::ColorEdges => "color-edges",
            Algo::Recursive => "recursive",
            Algo::RecursiveSizePruneAblation => "recursive-size-prune-ablation",
        }
    }

    /// `Recursive` with size pruning becomes the ablation variant.
    pub fn with_prune_by(self, by: PruneBy) -> Algo {
        match (self, by) {
            (Algo::Recursive, PruneBy::Size) => Algo::RecursiveSizePruneAblation,
            (a, _) => a,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum InputDescriptor {
    Spec(GenSpec),
    File { path: PathBuf },
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct StepSummary {
    pub calls: usize,
    pub mean_fan_size: f64,
    pub mean_path_length: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub schema_version: u32,
    pub input: InputDescriptor,
    pub algorithm: Algo,
    pub seed: u64,
    /// Coloring call only; graph loading and verification are excluded.
    pub wall_us: u64,
    pub n: usize,
    pub m: usize,
    pub max_degree: usize,
    pub weight: u64,
    pub degeneracy: usize,
    pub palette: Color,
    pub colors_used: usize,
    pub proper: bool,
    pub uncolored: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub levels: Option<Vec<LevelStats>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub prune_violations: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub steps: Option<StepSummary>,
}

impl RunReport {
    /// Proper, total and within `Δ + 1` colors.
    pub fn ok(&self) -> bool {
        self.proper && self.uncolored == 0 && self.palette as usize <= self.max_degree + 1
    }
}

pub struct RunOutcome {
    pub colors: Vec<Color>,
    pub report: RunReport,
}

/// Colors `g` with `algo` and verifies the result from scratch.
/// With `trace`, the report also carries per-level statistics (recursive
/// algorithms) or a step summary (`color-edges`).
pub fn run_algorithm(
    g: &Graph,
    input: InputDescriptor,
    algo: Algo,
    seed: u64,
    trace: bool,
) -> RunOutcome {
    let palette = g.max_degree() as Color + 1;
    let mut recursion = None;
    let mut steps = None;

    let start = Instant::now();
    let colors = match algo {
        Algo::Naive => {
            let mut chi = PartialColoring::new_empty(g, palette).expect("palette is Δ + 1");
            color_edges_deterministic(&mut chi);
            chi.colors().to_vec()
        }
        Algo::ColorEdges => {
            let mut chi = PartialColoring::new_empty(g, palette).expect("palette is Δ + 1");
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            if trace {
                let t = color_edges_traced(&mut chi, &mut rng);
                let calls = t.len().max(1) as f64;
                steps = Some(StepSummary {
                    calls: t.len(),
                    mean_fan_size: t.iter().map(|s| s.fan_size as f64).sum::<f64>() / calls,
                    mean_path_length: t.iter().map(|s| s.path_length as f64).sum::<f64>() / calls,
                });
            } else {
                color_edges(&mut chi, &mut rng);
            }
            chi.colors().to_vec()
        }
        Algo::Recursive | Algo::RecursiveSizePruneAblation => {
            let opts = RecursiveOptions {
                prune_by: if algo == Algo::Recursive {
                    PruneBy::Weight
                } else {
                    PruneBy::Size
                },
                trace,
                parallel: false,
            };
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let (chi, tr) = recursive_color_edges_with(g, &mut rng, opts);
            recursion = tr;
            chi.colors().to_vec()
        }
    };
    let wall_us = start.elapsed().as_micros() as u64;
    let levels = recursion.as_ref().map(collect_level_stats);
    let prune_violations = recursion.as_ref().map(check_prune_bounds);

    let verdict = verify_colors(g, &colors, palette);
    let stats = g.stats();
    RunOutcome {
        report: RunReport {
            schema_version: SCHEMA_VERSION,
            input,
            algorithm: algo,
            seed,
            wall_us,
            n: g.vertex_count(),
            m: g.edge_count(),
            max_degree: stats.max_degree,
            weight: stats.graph_weight,
            degeneracy: stats.degeneracy,
            palette,
            colors_used: verdict.colors_used,
            proper: verdict.proper,
            uncolored: verdict.uncolored,
            levels,
            prune_violations,
            steps,
        },
        colors,
    }
}
