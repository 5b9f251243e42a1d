//! Divide-and-conquer coloring.
//!
//! A graph whose maximum degree is small relative to the global vertex
//! count is colored directly with [`color_edges`]. Otherwise its edges are
//! split by [`euler_partition`], both halves are colored recursively with
//! disjoint palettes, the merged coloring is cut down to `Δ + 1` colors by
//! dropping its lightest classes, and the dropped edges are recolored with
//! [`color_edges`].

mod euler;
mod levels;
mod prune;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::coloring::{Color, PartialColoring};
use crate::graph::{Graph, VertexId};
use crate::sequential::color_edges;

pub use euler::{euler_partition, is_balanced, side_degrees, EulerSplit, Side};
pub use levels::{check_prune_bounds, collect_level_stats, LevelStats, SubgraphStats};
pub use prune::{
    class_measures, merge_colorings, prune_bound_holds, prune_min_weight_colors, MergeError,
    PruneBy, PruneOutcome,
};

/// Child calls run on the rayon pool only above this many edges.
const PARALLEL_MIN_EDGES: usize = 1 << 14;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct RecursiveOptions {
    pub prune_by: PruneBy,
    pub trace: bool,
    pub parallel: bool,
}

/// The prune step at one recursion node.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PruneTrace {
    pub merged_palette: Color,
    pub removed: Vec<Color>,
    pub uncolored_weight: u64,
    pub bound_holds: bool,
}

/// One subgraph of the recursion tree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NodeTrace {
    pub level: usize,
    pub edges: usize,
    pub max_degree: usize,
    pub weight: u64,
    pub base_case: bool,
    /// `(original vertex, degree here)` for every vertex with an edge here.
    #[serde(skip)]
    pub degrees: Vec<(VertexId, usize)>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub prune: Option<PruneTrace>,
}

/// Nodes in depth-first order, left child before right.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecursionTrace {
    pub vertices: usize,
    pub edges: usize,
    pub max_degree: usize,
    pub weight: u64,
    #[serde(skip)]
    pub degrees: Vec<usize>,
    pub nodes: Vec<NodeTrace>,
}

impl RecursionTrace {
    pub fn depth(&self) -> usize {
        self.nodes.iter().map(|n| n.level).max().unwrap_or(0)
    }
}

/// Largest Δ colored directly: `2 sqrt(n / log2 n)` for the global `n`.
pub fn base_case_threshold(n: usize) -> f64 {
    if n <= 2 {
        return f64::INFINITY;
    }
    let n = n as f64;
    2.0 * (n / n.log2()).sqrt()
}

pub fn is_base_case(max_degree: usize, n_global: usize) -> bool {
    max_degree as f64 <= base_case_threshold(n_global)
}

/// Total proper coloring of `g` with `Δ(g) + 1` colors.
pub fn recursive_color_edges<'g, R: Rng + ?Sized>(g: &'g Graph, rng: &mut R) -> PartialColoring<'g> {
    recursive_color_edges_with(g, rng, RecursiveOptions::default()).0
}

pub fn recursive_color_edges_with<'g, R: Rng + ?Sized>(
    g: &'g Graph,
    rng: &mut R,
    opts: RecursiveOptions,
) -> (PartialColoring<'g>, Option<RecursionTrace>) {
    let ctx = Ctx {
        n_global: g.vertex_count(),
        opts,
    };
    let identity: Vec<VertexId>;
    let orig = if opts.trace {
        identity = (0..g.vertex_count()).collect();
        Some(identity.as_slice())
    } else {
        None
    };
    let mut nodes = Vec::new();
    let chi = ctx.solve(g, rng, 0, orig, &mut nodes);
    let trace = opts.trace.then(|| RecursionTrace {
        vertices: g.vertex_count(),
        edges: g.edge_count(),
        max_degree: g.max_degree(),
        weight: g.weight(),
        degrees: (0..g.vertex_count()).map(|v| g.degree(v)).collect(),
        nodes,
    });
    (chi, trace)
}

struct Ctx {
    n_global: usize,
    opts: RecursiveOptions,
}

impl Ctx {
    fn solve<'g, R: Rng + ?Sized>(
        &self,
        g: &'g Graph,
        rng: &mut R,
        level: usize,
        orig: Option<&[VertexId]>,
        nodes: &mut Vec<NodeTrace>,
    ) -> PartialColoring<'g> {
        let delta = g.max_degree();
        let target = delta as Color + 1;
        let base = g.edge_count() == 0 || is_base_case(delta, self.n_global);
        let me = nodes.len();
        if let Some(orig) = orig {
            nodes.push(NodeTrace {
                level,
                edges: g.edge_count(),
                max_degree: delta,
                weight: g.weight(),
                base_case: base,
                degrees: (0..g.vertex_count())
                    .filter(|&v| g.degree(v) > 0)
                    .map(|v| (orig[v], g.degree(v)))
                    .collect(),
                prune: None,
            });
        }

        if base {
            let mut chi = PartialColoring::new_empty(g, target).expect("palette is Δ + 1");
            color_edges(&mut chi, rng);
            return chi;
        }

        let split = euler_partition(g);
        let seeds = [rng.gen::<u64>(), rng.gen::<u64>()];
        let child_orig = |verts: &[VertexId]| -> Option<Vec<VertexId>> {
            orig.map(|o| verts.iter().map(|&v| o[v]).collect())
        };
        let (lo, ro) = (child_orig(&split.left_vertices), child_orig(&split.right_vertices));
        let ((left, left_nodes), (right, right_nodes)) =
            if self.opts.parallel && g.edge_count() >= PARALLEL_MIN_EDGES {
                rayon::join(
                    || self.child(level + 1, &split.left, seeds[0], lo.as_deref()),
                    || self.child(level + 1, &split.right, seeds[1], ro.as_deref()),
                )
            } else {
                (
                    self.child(level + 1, &split.left, seeds[0], lo.as_deref()),
                    self.child(level + 1, &split.right, seeds[1], ro.as_deref()),
                )
            };
        nodes.extend(left_nodes);
        nodes.extend(right_nodes);

        let merged = merge_colorings(g, &split, &left, &right)
            .unwrap_or_else(|err| panic!("merging child colorings failed: {err}"));
        drop((left, right));
        assert!(
            merged.palette() <= target + 3,
            "merged palette {} exceeds Δ + 4 = {}",
            merged.palette(),
            target + 3
        );
        let pruned = prune_min_weight_colors(&merged, target, self.opts.prune_by)
            .expect("pruned palette is Δ + 1");
        if orig.is_some() {
            nodes[me].prune = Some(PruneTrace {
                merged_palette: merged.palette(),
                removed: pruned.removed.clone(),
                uncolored_weight: pruned.uncolored_weight,
                bound_holds: prune_bound_holds(pruned.uncolored_weight, g.weight(), delta),
            });
        }
        let mut chi = pruned.coloring;
        color_edges(&mut chi, rng);
        chi
    }

    fn child<'c>(
        &self,
        level: usize,
        g: &'c Graph,
        seed: u64,
        orig: Option<&[VertexId]>,
    ) -> (PartialColoring<'c>, Vec<NodeTrace>) {
        let mut nodes = Vec::new();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let chi = self.solve(g, &mut rng, level, orig, &mut nodes);
        (chi, nodes)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::verify_proper;

    fn star(leaves: usize) -> Graph {
        let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
        Graph::new(leaves + 1, &edges).unwrap()
    }

    #[test]
    fn threshold_for_small_n() {
        assert!(is_base_case(1000, 1));
        assert!(is_base_case(7, 101));
        assert!(!is_base_case(8, 101));
    }

    #[test]
    fn low_degree_graph_is_base_case() {
        let edges: Vec<_> = (0..10).map(|i| (i, (i + 1) % 10)).collect();
        let g = Graph::new(10, &edges).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let opts = RecursiveOptions {
            trace: true,
            ..Default::default()
        };
        let (chi, trace) = recursive_color_edges_with(&g, &mut rng, opts);
        assert!(verify_proper(&g, &chi).is_total_proper());
        assert!(chi.palette() <= 3);
        assert_eq!(trace.unwrap().nodes.len(), 1);
    }

    #[test]
    fn star_recurses_and_stays_proper() {
        let g = star(100);
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let opts = RecursiveOptions {
            trace: true,
            ..Default::default()
        };
        let (chi, trace) = recursive_color_edges_with(&g, &mut rng, opts);
        let report = verify_proper(&g, &chi);
        assert!(report.is_total_proper());
        assert!(report.max_color <= 101);
        let trace = trace.unwrap();
        assert!(trace.depth() >= 1);
        assert!(trace.nodes.iter().all(|n| n.prune.as_ref().map_or(true, |p| p.bound_holds)));
    }

    #[test]
    fn parallel_matches_sequential() {
        let g = star(40_000);
        let seq = recursive_color_edges_with(
            &g,
            &mut ChaCha8Rng::seed_from_u64(3),
            RecursiveOptions::default(),
        )
        .0;
        let par = recursive_color_edges_with(
            &g,
            &mut ChaCha8Rng::seed_from_u64(3),
            RecursiveOptions {
                parallel: true,
                ..Default::default()
            },
        )
        .0;
        assert_eq!(seq.colors(), par.colors());
    }
}
