//! Benchmark harness and report types behind the `arbcolor` binary.

pub mod bench;
pub mod run;

pub use bench::{run_cell, run_manifest, write_csv, BenchRow, Manifest, CSV_COLUMNS};
pub use run::{run_algorithm, Algo, InputDescriptor, RunOutcome, RunReport, StepSummary, SCHEMA_VERSION};
