//! Seeded benchmark graph families.
//!
//! Every generator is a pure function of its [`GenSpec`]: the same spec
//! yields the same edge list in the same order. Families other than
//! Erdős–Rényi come with a known upper bound on their arboricity.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::dsu::DisjointSets;
use crate::graph::{pair_key, Graph, PairSet, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("infeasible {family} spec: {reason}")]
pub struct InfeasibleSpec {
    pub family: &'static str,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum GenSpec {
    Star {
        n: usize,
    },
    ForestUnion {
        n: usize,
        alpha: usize,
        seed: u64,
    },
    /// A spanning tree containing the star `0 — 1..=star_leaves`, overlaid
    /// with `alpha - 1` random spanning forests. `star_leaves` defaults to
    /// `n - 1`, in which case the tree is the star itself.
    StarPlusForests {
        n: usize,
        alpha: usize,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        star_leaves: Option<usize>,
        seed: u64,
    },
    ErdosRenyi {
        n: usize,
        m: usize,
        seed: u64,
    },
    PreferentialAttachment {
        n: usize,
        degree: usize,
        seed: u64,
    },
    Grid {
        rows: usize,
        cols: usize,
    },
}

impl GenSpec {
    pub fn family(&self) -> &'static str {
        match self {
            GenSpec::Star { .. } => "star",
            GenSpec::ForestUnion { .. } => "forest-union",
            GenSpec::StarPlusForests { .. } => "star-plus-forests",
            GenSpec::ErdosRenyi { .. } => "erdos-renyi",
            GenSpec::PreferentialAttachment { .. } => "preferential-attachment",
            GenSpec::Grid { .. } => "grid",
        }
    }

    pub fn vertex_count(&self) -> usize {
        match *self {
            GenSpec::Star { n }
            | GenSpec::ForestUnion { n, .. }
            | GenSpec::StarPlusForests { n, .. }
            | GenSpec::ErdosRenyi { n, .. }
            | GenSpec::PreferentialAttachment { n, .. } => n,
            GenSpec::Grid { rows, cols } => rows * cols,
        }
    }

    /// An upper bound on the arboricity that holds by construction.
    pub fn known_arboricity(&self) -> Option<usize> {
        match *self {
            GenSpec::Star { .. } => Some(1),
            GenSpec::ForestUnion { alpha, .. } | GenSpec::StarPlusForests { alpha, .. } => {
                Some(alpha)
            }
            // Orienting every edge from the newer to the older endpoint is
            // acyclic with out-degree at most `degree`.
            GenSpec::PreferentialAttachment { degree, .. } => Some(degree),
            GenSpec::Grid { rows, cols } => Some(if rows <= 1 || cols <= 1 { 1 } else { 2 }),
            GenSpec::ErdosRenyi { .. } => None,
        }
    }

    pub fn generate(&self) -> Result<Graph, InfeasibleSpec> {
        match *self {
            GenSpec::Star { n } => gen_star(n),
            GenSpec::ForestUnion { n, alpha, seed } => gen_forest_union(n, alpha, seed),
            GenSpec::StarPlusForests {
                n,
                alpha,
                star_leaves,
                seed,
            } => gen_star_plus_forests(n, alpha, star_leaves, seed),
            GenSpec::ErdosRenyi { n, m, seed } => gen_erdos_renyi(n, m, seed),
            GenSpec::PreferentialAttachment { n, degree, seed } => {
                gen_preferential_attachment(n, degree, seed)
            }
            GenSpec::Grid { rows, cols } => gen_grid(rows, cols),
        }
    }
}

fn infeasible(family: &'static str, reason: impl Into<String>) -> InfeasibleSpec {
    InfeasibleSpec {
        family,
        reason: reason.into(),
    }
}

/// K_{1, n-1} centered at vertex 0.
pub fn gen_star(n: usize) -> Result<Graph, InfeasibleSpec> {
    if n < 2 {
        return Err(infeasible("star", "n must be at least 2"));
    }
    let edges: Vec<_> = (1..n).map(|i| (0, i)).collect();
    Ok(Graph::from_simple_edges(n, edges))
}

/// Adds random edges that join distinct components of `dsu` until it is
/// connected or the attempt budget runs out. Pairs already in `present`
/// are rejected and redrawn.
fn grow_random_forest(
    n: usize,
    rng: &mut ChaCha8Rng,
    dsu: &mut DisjointSets,
    present: &mut PairSet,
    edges: &mut Vec<(VertexId, VertexId)>,
) {
    let log = (usize::BITS - n.leading_zeros()) as usize;
    let budget = 4 * n * (log + 4);
    let mut attempts = 0;
    while dsu.set_count() > 1 && attempts < budget {
        attempts += 1;
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u == v || dsu.find(u) == dsu.find(v) {
            continue;
        }
        if !present.insert(pair_key(u, v)) {
            continue;
        }
        dsu.union(u, v);
        edges.push((u, v));
    }
}

/// Union of `alpha` random spanning forests; arboricity at most `alpha`.
pub fn gen_forest_union(n: usize, alpha: usize, seed: u64) -> Result<Graph, InfeasibleSpec> {
    if n < 2 || alpha < 1 {
        return Err(infeasible("forest-union", "needs n >= 2 and alpha >= 1"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut present = PairSet::default();
    let mut edges = Vec::with_capacity(alpha * (n - 1));
    for _ in 0..alpha {
        let mut dsu = DisjointSets::new(n);
        grow_random_forest(n, &mut rng, &mut dsu, &mut present, &mut edges);
    }
    Ok(Graph::from_simple_edges(n, edges))
}

/// A star on `star_leaves` leaves completed to a random spanning tree, plus
/// `alpha - 1` random spanning forests.
pub fn gen_star_plus_forests(
    n: usize,
    alpha: usize,
    star_leaves: Option<usize>,
    seed: u64,
) -> Result<Graph, InfeasibleSpec> {
    if alpha < 2 || n < 2 {
        return Err(infeasible("star-plus-forests", "needs n >= 2 and alpha >= 2"));
    }
    let leaves = star_leaves.unwrap_or(n - 1);
    if leaves == 0 || leaves > n - 1 {
        return Err(infeasible(
            "star-plus-forests",
            format!("star_leaves must be in 1..={}", n - 1),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut present = PairSet::default();
    let mut edges = Vec::with_capacity(alpha * (n - 1));
    let mut dsu = DisjointSets::new(n);
    for i in 1..=leaves {
        dsu.union(0, i);
        present.insert((0, i));
        edges.push((0, i));
    }
    grow_random_forest(n, &mut rng, &mut dsu, &mut present, &mut edges);
    for _ in 1..alpha {
        let mut dsu = DisjointSets::new(n);
        grow_random_forest(n, &mut rng, &mut dsu, &mut present, &mut edges);
    }
    Ok(Graph::from_simple_edges(n, edges))
}

/// G(n, m): `m` distinct pairs drawn uniformly.
pub fn gen_erdos_renyi(n: usize, m: usize, seed: u64) -> Result<Graph, InfeasibleSpec> {
    let max = n * n.saturating_sub(1) / 2;
    if m > max {
        return Err(infeasible("erdos-renyi", format!("m = {m} exceeds n(n-1)/2 = {max}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let edges = if 2 * m <= max {
        let mut present = PairSet::default();
        let mut edges = Vec::with_capacity(m);
        while edges.len() < m {
            let u = rng.gen_range(0..n);
            let v = rng.gen_range(0..n);
            if u != v && present.insert(pair_key(u, v)) {
                edges.push((u, v));
            }
        }
        edges
    } else {
        let mut all = Vec::with_capacity(max);
        for u in 0..n {
            for v in u + 1..n {
                all.push((u, v));
            }
        }
        let (chosen, _) = all.partial_shuffle(&mut rng, m);
        chosen.to_vec()
    };
    Ok(Graph::from_simple_edges(n, edges))
}

/// Starts from K_{degree+1}; every further vertex attaches to `degree`
/// distinct earlier vertices chosen with probability proportional to degree.
pub fn gen_preferential_attachment(
    n: usize,
    degree: usize,
    seed: u64,
) -> Result<Graph, InfeasibleSpec> {
    if degree < 1 || n < degree + 1 {
        return Err(infeasible(
            "preferential-attachment",
            "needs degree >= 1 and n >= degree + 1",
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::with_capacity(degree * n);
    // Every edge contributes both endpoints, so a uniform draw from this
    // list is a degree-proportional vertex draw.
    let mut ends = Vec::with_capacity(2 * degree * n);
    for u in 0..=degree {
        for v in u + 1..=degree {
            edges.push((u, v));
            ends.extend([u, v]);
        }
    }
    let mut targets = Vec::with_capacity(degree);
    for v in degree + 1..n {
        targets.clear();
        while targets.len() < degree {
            let t = ends[rng.gen_range(0..ends.len())];
            if !targets.contains(&t) {
                targets.push(t);
            }
        }
        for &t in &targets {
            edges.push((v, t));
            ends.extend([v, t]);
        }
    }
    Ok(Graph::from_simple_edges(n, edges))
}

/// `rows × cols` grid; vertex `r * cols + c`.
pub fn gen_grid(rows: usize, cols: usize) -> Result<Graph, InfeasibleSpec> {
    if rows == 0 || cols == 0 {
        return Err(infeasible("grid", "rows and cols must be positive"));
    }
    let id = |r: usize, c: usize| r * cols + c;
    let mut edges = Vec::with_capacity(2 * rows * cols);
    for r in 0..rows {
        for c in 0..cols {
            if c + 1 < cols {
                edges.push((id(r, c), id(r, c + 1)));
            }
            if r + 1 < rows {
                edges.push((id(r, c), id(r + 1, c)));
            }
        }
    }
    Ok(Graph::from_simple_edges(rows * cols, edges))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::write_edge_list;

    #[test]
    fn star_small() {
        let g = gen_star(2).unwrap();
        assert_eq!(g.edge_count(), 1);
        let g = gen_star(4).unwrap();
        assert_eq!((g.max_degree(), g.edge_count(), g.degeneracy()), (3, 3, 1));
        assert_eq!(g.weight(), 3);
        assert!(gen_star(1).is_err());
    }

    #[test]
    fn forest_union_properties() {
        let g = gen_forest_union(50, 1, 3).unwrap();
        assert_eq!(g.degeneracy(), 1);
        assert_eq!(g.edge_count(), 49);
        let g = gen_forest_union(100, 2, 9).unwrap();
        assert!(g.edge_count() <= 198);
        assert!(g.weight() <= 2 * g.edge_count() as u64 * 2);
        assert!(g.degeneracy() <= 3);
        let again = gen_forest_union(100, 2, 9).unwrap();
        assert_eq!(write_edge_list(&g), write_edge_list(&again));
    }

    #[test]
    fn star_plus_forests_properties() {
        let g = gen_star_plus_forests(1000, 2, None, 4).unwrap();
        assert!(g.max_degree() >= 998);
        assert!(g.degeneracy() <= 2);
        assert!(g.weight() <= 2 * g.edge_count() as u64 * 2);
        let again = gen_star_plus_forests(1000, 2, None, 4).unwrap();
        assert_eq!(g, again);
        let partial = gen_star_plus_forests(1000, 2, Some(40), 4).unwrap();
        assert!(partial.degree(0) >= 40);
        assert!(partial.edge_count() >= 1990);
        assert!(gen_star_plus_forests(10, 1, None, 0).is_err());
    }

    #[test]
    fn erdos_renyi_complete_and_infeasible() {
        let g = gen_erdos_renyi(10, 45, 1).unwrap();
        assert_eq!(g.edge_count(), 45);
        assert_eq!(g.max_degree(), 9);
        assert!(gen_erdos_renyi(10, 46, 1).is_err());
        assert_eq!(gen_erdos_renyi(200, 1000, 7).unwrap().edge_count(), 1000);
    }

    #[test]
    fn preferential_attachment_count() {
        let g = gen_preferential_attachment(100, 3, 2).unwrap();
        assert_eq!(g.edge_count(), 3 * 97 + 3);
        assert!(g.degeneracy() <= 3);
    }

    #[test]
    fn grid_shapes() {
        let g = gen_grid(2, 2).unwrap();
        assert_eq!(g.edge_count(), 4);
        assert!((0..4).all(|v| g.degree(v) == 2));
        assert_eq!(gen_grid(5, 7).unwrap().degeneracy(), 2);
    }

    #[test]
    fn spec_json_shape() {
        let spec = GenSpec::ForestUnion {
            n: 1000,
            alpha: 3,
            seed: 7,
        };
        let json = serde_json::to_string(&spec).unwrap();
        assert_eq!(json, r#"{"family":"forest-union","n":1000,"alpha":3,"seed":7}"#);
        assert_eq!(serde_json::from_str::<GenSpec>(&json).unwrap(), spec);
    }
}
