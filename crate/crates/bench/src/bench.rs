//! Benchmark matrices: specs × algorithms × seeds, each cell repeated and
//! summarized by its median wall time.

use std::io::Write;

use arbcolor_core::generators::GenSpec;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::run::{run_algorithm, Algo, InputDescriptor, RunReport};

pub const DEFAULT_REPETITIONS: usize = 5;

/// Column order of the benchmark CSV.
pub const CSV_COLUMNS: [&str; 11] = [
    "family",
    "n",
    "m",
    "delta",
    "alpha_known",
    "degeneracy",
    "weight",
    "algo",
    "seed",
    "wall_ms",
    "status",
];

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Manifest {
    pub specs: Vec<GenSpec>,
    pub algorithms: Vec<Algo>,
    #[serde(default = "default_seeds")]
    pub seeds: Vec<u64>,
    #[serde(default = "default_repetitions")]
    pub repetitions: usize,
}

fn default_seeds() -> Vec<u64> {
    vec![0]
}

fn default_repetitions() -> usize {
    DEFAULT_REPETITIONS
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchRow {
    pub family: String,
    pub n: usize,
    pub m: usize,
    pub delta: usize,
    pub alpha_known: Option<usize>,
    pub degeneracy: usize,
    pub weight: u64,
    pub algo: String,
    pub seed: u64,
    pub wall_ms: f64,
    /// `ok`, `improper`, or `error: <reason>`.
    pub status: String,
}

pub struct CellResult {
    pub row: BenchRow,
    pub reports: Vec<RunReport>,
}

pub fn median(xs: &mut [f64]) -> f64 {
    if xs.is_empty() {
        return f64::NAN;
    }
    xs.sort_by(|a, b| a.total_cmp(b));
    let k = xs.len();
    if k % 2 == 1 {
        xs[k / 2]
    } else {
        (xs[k / 2 - 1] + xs[k / 2]) / 2.0
    }
}

/// Runs one cell. Repetition `r` uses seed `seed + r`; the row reports the
/// median wall time over repetitions.
pub fn run_cell(spec: &GenSpec, algo: Algo, seed: u64, repetitions: usize) -> CellResult {
    let mut row = BenchRow {
        family: spec.family().to_string(),
        n: spec.vertex_count(),
        m: 0,
        delta: 0,
        alpha_known: spec.known_arboricity(),
        degeneracy: 0,
        weight: 0,
        algo: algo.name().to_string(),
        seed,
        wall_ms: f64::NAN,
        status: String::new(),
    };
    let g = match spec.generate() {
        Ok(g) => g,
        Err(e) => {
            row.status = format!("error: {e}");
            return CellResult {
                row,
                reports: Vec::new(),
            };
        }
    };
    let reports: Vec<RunReport> = (0..repetitions.max(1) as u64)
        .map(|r| {
            run_algorithm(&g, InputDescriptor::Spec(spec.clone()), algo, seed.wrapping_add(r), false)
                .report
        })
        .collect();
    let first = &reports[0];
    row.m = first.m;
    row.delta = first.max_degree;
    row.degeneracy = first.degeneracy;
    row.weight = first.weight;
    let mut walls: Vec<f64> = reports.iter().map(|r| r.wall_us as f64 / 1000.0).collect();
    row.wall_ms = median(&mut walls);
    row.status = if reports.iter().all(RunReport::ok) {
        "ok".into()
    } else {
        "improper".into()
    };
    CellResult { row, reports }
}

/// Every cell of the manifest on a pool of `jobs` workers, in manifest
/// order (specs outermost, then algorithms, then seeds).
pub fn run_manifest(manifest: &Manifest, jobs: usize) -> Vec<CellResult> {
    let mut cells = Vec::new();
    for spec in &manifest.specs {
        for &algo in &manifest.algorithms {
            for &seed in &manifest.seeds {
                cells.push((spec, algo, seed));
            }
        }
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .expect("thread pool");
    pool.install(|| {
        cells
            .par_iter()
            .map(|&(spec, algo, seed)| run_cell(spec, algo, seed, manifest.repetitions))
            .collect()
    })
}

pub fn write_csv<W: Write>(out: W, rows: &[BenchRow]) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_COLUMNS)?;
    for r in rows {
        w.write_record([
            r.family.clone(),
            r.n.to_string(),
            r.m.to_string(),
            r.delta.to_string(),
            r.alpha_known.map(|a| a.to_string()).unwrap_or_default(),
            r.degeneracy.to_string(),
            r.weight.to_string(),
            r.algo.clone(),
            r.seed.to_string(),
            format!("{:.3}", r.wall_ms),
            r.status.clone(),
        ])?;
    }
    w.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn median_odd_and_even() {
        assert_eq!(median(&mut [3.0, 1.0, 2.0]), 2.0);
        assert_eq!(median(&mut [4.0, 1.0, 3.0, 2.0]), 2.5);
    }

    #[test]
    fn infeasible_spec_yields_error_row() {
        let spec = GenSpec::ErdosRenyi { n: 4, m: 7, seed: 0 };
        let cell = run_cell(&spec, Algo::ColorEdges, 0, 1);
        assert!(cell.row.status.starts_with("error:"));
        assert!(cell.reports.is_empty());
    }

    #[test]
    fn manifest_defaults() {
        let m: Manifest =
            serde_json::from_str(r#"{"specs":[{"family":"star","n":5}],"algorithms":["naive"]}"#)
                .unwrap();
        assert_eq!(m.seeds, vec![0]);
        assert_eq!(m.repetitions, DEFAULT_REPETITIONS);
    }
}
