//! Per-level statistics of a recursion trace and the degree and weight
//! bounds every level is expected to meet.

use serde::{Deserialize, Serialize};

use super::RecursionTrace;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubgraphStats {
    pub max_degree: usize,
    pub weight: u64,
    pub edges: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LevelStats {
    pub level: usize,
    pub subgraphs: Vec<SubgraphStats>,
    pub total_weight: u64,
    /// `Δ / 2^level`.
    pub delta_ref: f64,
    /// `W / 2^level`.
    pub weight_ref: f64,
    /// Bounds this level breaks; empty when all hold.
    pub violations: Vec<String>,
}

impl LevelStats {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Groups the trace by level and checks, for every level `i`:
///
/// * `Δ_i - 2 <= Δ_H <= Δ_i + 2` for every subgraph `H`,
/// * `d(v)/2^i - 2 <= d_H(v) <= d(v)/2^i + 2` for every vertex and `H`,
///   where a vertex absent from `H` has degree 0 there,
/// * `Σ_H W_H <= W_i + 2m`.
pub fn collect_level_stats(trace: &RecursionTrace) -> Vec<LevelStats> {
    let depth = trace.depth();
    let n = trace.vertices;
    let mut out = Vec::with_capacity(depth + 1);
    let mut lo = vec![usize::MAX; n];
    let mut hi = vec![0usize; n];
    let mut seen = vec![0usize; n];

    for level in 0..=depth {
        let scale = 0.5f64.powi(level as i32);
        let delta_ref = trace.max_degree as f64 * scale;
        let weight_ref = trace.weight as f64 * scale;
        let mut stats = LevelStats {
            level,
            subgraphs: Vec::new(),
            total_weight: 0,
            delta_ref,
            weight_ref,
            violations: Vec::new(),
        };
        lo.iter_mut().for_each(|x| *x = usize::MAX);
        hi.iter_mut().for_each(|x| *x = 0);
        seen.iter_mut().for_each(|x| *x = 0);

        for (idx, node) in trace.nodes.iter().enumerate().filter(|(_, n)| n.level == level) {
            stats.subgraphs.push(SubgraphStats {
                max_degree: node.max_degree,
                weight: node.weight,
                edges: node.edges,
            });
            stats.total_weight += node.weight;
            let d = node.max_degree as f64;
            if d < delta_ref - 2.0 || d > delta_ref + 2.0 {
                stats.violations.push(format!(
                    "node {idx}: max degree {} outside {delta_ref} ± 2",
                    node.max_degree
                ));
            }
            for &(v, dv) in &node.degrees {
                lo[v] = lo[v].min(dv);
                hi[v] = hi[v].max(dv);
                seen[v] += 1;
            }
        }

        let count = stats.subgraphs.len();
        for v in 0..n {
            let low = if seen[v] < count { 0 } else { lo[v] };
            let high = hi[v];
            let r = trace.degrees[v] as f64 * scale;
            if (low as f64) < r - 2.0 || (high as f64) > r + 2.0 {
                stats.violations.push(format!(
                    "vertex {v}: degrees {low}..={high} outside {r} ± 2"
                ));
            }
        }

        if stats.total_weight as f64 > weight_ref + 2.0 * trace.edges as f64 {
            stats.violations.push(format!(
                "total weight {} exceeds {weight_ref} + 2m",
                stats.total_weight
            ));
        }
        out.push(stats);
    }
    out
}

/// Nodes whose prune step broke `uncolored weight <= 3 W_H / (Δ_H + 4)`.
pub fn check_prune_bounds(trace: &RecursionTrace) -> Vec<String> {
    trace
        .nodes
        .iter()
        .enumerate()
        .filter_map(|(i, node)| {
            let p = node.prune.as_ref()?;
            (!p.bound_holds).then(|| {
                format!(
                    "node {i} (level {}): uncolored weight {} with W = {}, Δ = {}",
                    node.level, p.uncolored_weight, node.weight, node.max_degree
                )
            })
        })
        .collect()
}
