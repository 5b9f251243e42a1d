//! Brute-force checks the fast code is tested against.
//!
//! Nothing here uses the incremental structures of [`PartialColoring`]
//! beyond reading edge colors; alternating paths are rebuilt from scratch
//! by scanning color classes.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::coloring::{verify_colors, Color, PartialColoring, UNCOLORED};
use crate::extend::color_edge_via;
use crate::fan::FanScratch;
use crate::graph::{EdgeId, Graph, VertexId};
use crate::path::AlternatingPath;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleViolation {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub seed: Option<u64>,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleReport {
    pub property: String,
    pub instances: u64,
    pub violations: Vec<OracleViolation>,
}

impl OracleReport {
    pub fn new(property: &str) -> Self {
        OracleReport {
            property: property.to_string(),
            instances: 0,
            violations: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    fn fail(&mut self, seed: Option<u64>, detail: String) {
        self.violations.push(OracleViolation { seed, detail });
    }

    fn absorb(&mut self, other: OracleReport, seed: u64) {
        self.instances += other.instances;
        for mut v in other.violations {
            v.seed.get_or_insert(seed);
            self.violations.push(v);
        }
    }
}

/// Every maximal two-colored alternating path of `chi`, once each.
/// Alternating cycles are left out. Assumes `chi` is proper.
pub fn enumerate_maximal_paths(g: &Graph, chi: &PartialColoring<'_>) -> Vec<AlternatingPath> {
    let n = g.vertex_count();
    let k = chi.palette();
    let mut classes: Vec<Vec<EdgeId>> = vec![Vec::new(); k as usize + 1];
    for (e, &c) in chi.colors().iter().enumerate() {
        if c != UNCOLORED {
            classes[c as usize].push(e);
        }
    }
    // slot[v] = (edge colored a at v, edge colored b at v)
    let mut slot: Vec<[Option<EdgeId>; 2]> = vec![[None, None]; n];
    let mut visited = vec![false; g.edge_count()];
    let mut paths = Vec::new();

    for a in 1..=k {
        for b in a + 1..=k {
            let members: Vec<EdgeId> = classes[a as usize]
                .iter()
                .chain(classes[b as usize].iter())
                .copied()
                .collect();
            if members.is_empty() {
                continue;
            }
            for &e in &members {
                let side = usize::from(chi.color(e) == b);
                let (u, v) = g.endpoints(e);
                slot[u][side] = Some(e);
                slot[v][side] = Some(e);
            }
            for &e in &members {
                for x in [g.endpoints(e).0, g.endpoints(e).1] {
                    let [ea, eb] = slot[x];
                    let start_edge = match (ea, eb) {
                        (Some(s), None) | (None, Some(s)) => s,
                        _ => continue,
                    };
                    if visited[start_edge] {
                        continue;
                    }
                    let mut vertices = vec![x];
                    let mut edges = Vec::new();
                    let mut cur = x;
                    let mut next = Some(start_edge);
                    while let Some(f) = next {
                        visited[f] = true;
                        edges.push(f);
                        let (p, q) = g.endpoints(f);
                        cur = if p == cur { q } else { p };
                        vertices.push(cur);
                        let [fa, fb] = slot[cur];
                        next = if fa == Some(f) { fb } else { fa };
                    }
                    let first = chi.color(edges[0]);
                    paths.push(AlternatingPath {
                        vertices,
                        edges,
                        missing: if first == a { b } else { a },
                        first,
                    });
                }
            }
            for &e in &members {
                visited[e] = false;
                let (u, v) = g.endpoints(e);
                slot[u] = [None, None];
                slot[v] = [None, None];
            }
        }
    }
    paths
}

/// For every edge, the number of enumerated maximal paths having it as an
/// internal edge.
pub fn internal_membership_counts(g: &Graph, chi: &PartialColoring<'_>) -> Vec<usize> {
    let mut count = vec![0; g.edge_count()];
    for p in enumerate_maximal_paths(g, chi) {
        if p.edges.len() > 2 {
            for &e in &p.edges[1..p.edges.len() - 1] {
                count[e] += 1;
            }
        }
    }
    count
}

pub fn count_internal_memberships(g: &Graph, chi: &PartialColoring<'_>, e: EdgeId) -> usize {
    internal_membership_counts(g, chi)[e]
}

/// Every colored edge is internal to at most `w(e)` maximal paths, and the
/// internal edges of all maximal paths add up to at most the total weight
/// of the colored edges.
pub fn check_lemma_edge_belonging(g: &Graph, chi: &PartialColoring<'_>) -> OracleReport {
    let mut report = OracleReport::new("edge-belonging");
    let counts = internal_membership_counts(g, chi);
    let mut internal_total = 0u64;
    let mut colored_weight = 0u64;
    for (e, &c) in chi.colors().iter().enumerate() {
        let w = g.edge_weight(e);
        internal_total += counts[e] as u64;
        if c == UNCOLORED {
            if counts[e] > 0 {
                report.fail(None, format!("uncolored edge {e} is internal to {} paths", counts[e]));
            }
            continue;
        }
        report.instances += 1;
        colored_weight += w;
        if counts[e] as u64 > w {
            report.fail(None, format!("edge {e} is internal to {} paths, w(e) = {w}", counts[e]));
        }
    }
    if internal_total > colored_weight {
        report.fail(
            None,
            format!("sum of |I(P)| = {internal_total} exceeds colored weight {colored_weight}"),
        );
    }
    report
}

/// A proper partial coloring built greedily: edges in random order, each
/// left uncolored with probability `skip` or given a random color free at
/// both endpoints when there is one.
pub fn random_partial_coloring<'g, R: Rng + ?Sized>(
    g: &'g Graph,
    palette: Color,
    skip: f64,
    rng: &mut R,
) -> PartialColoring<'g> {
    let mut chi = PartialColoring::new_empty(g, palette).expect("palette at least Δ + 1");
    let mut order: Vec<EdgeId> = (0..g.edge_count()).collect();
    order.shuffle(rng);
    for e in order {
        if rng.gen_bool(skip) {
            continue;
        }
        let (u, v) = g.endpoints(e);
        let free: Vec<Color> = (1..=palette)
            .filter(|&c| chi.is_missing(u, c) && chi.is_missing(v, c))
            .collect();
        if let Some(&c) = free.choose(rng) {
            chi.assign(e, c).expect("color is free at both endpoints");
        }
    }
    chi
}

fn graph_from_mask(n: usize, mask: u32) -> Graph {
    let mut edges = Vec::new();
    let mut bit = 0;
    for u in 0..n {
        for v in u + 1..n {
            if mask >> bit & 1 == 1 {
                edges.push((u, v));
            }
            bit += 1;
        }
    }
    Graph::new(n, &edges).expect("simple graph")
}

/// Runs the fan, path and extend pipeline on every graph whose edge set is
/// a subset of `K_n` (`n <= n_max`, at most `m_max` edges), on `cap`
/// greedily sampled colorings per graph, for every uncolored edge, both
/// choices of center and every missing color at the center. Each run must
/// leave a proper coloring with exactly one more colored edge.
pub fn exhaustive_extend_suite(n_max: usize, m_max: usize, seed: u64, cap: usize) -> OracleReport {
    assert!(n_max <= 6, "exhaustive suite is limited to 6 vertices");
    let mut report = OracleReport::new("extend-exhaustive");
    let mut scratch = FanScratch::new(n_max.max(1));
    for n in 2..=n_max {
        let pairs = n * (n - 1) / 2;
        for mask in 1u32..(1 << pairs) {
            if mask.count_ones() as usize > m_max {
                continue;
            }
            let g = graph_from_mask(n, mask);
            let instance_seed = seed ^ ((n as u64) << 40 | mask as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15);
            let mut rng = ChaCha8Rng::seed_from_u64(instance_seed);
            let palette = g.max_degree() as Color + 1;
            for sample in 0..cap {
                let skip = [0.15, 0.35, 0.6][sample % 3];
                let mut chi = random_partial_coloring(&g, palette, skip, &mut rng);
                if chi.is_total() {
                    let e = rng.gen_range(0..g.edge_count());
                    chi.unassign(e).expect("edge was colored");
                }
                if !verify_colors(&g, chi.colors(), palette).proper {
                    continue;
                }
                let sub = extend_all(&g, &chi, &mut scratch, n, mask);
                report.absorb(sub, instance_seed);
            }
        }
    }
    report
}

fn extend_all(
    g: &Graph,
    chi: &PartialColoring<'_>,
    scratch: &mut FanScratch,
    n: usize,
    mask: u32,
) -> OracleReport {
    let mut report = OracleReport::new("extend-exhaustive");
    let before: Vec<Color> = chi.colors().to_vec();
    let colored_before = before.iter().filter(|&&c| c != UNCOLORED).count();
    for e in (0..g.edge_count()).filter(|&e| before[e] == UNCOLORED) {
        let (u, v) = g.endpoints(e);
        for center in [u, v] {
            for c0 in missing_by_scan(g, &before, chi.palette(), center) {
                report.instances += 1;
                let mut work = chi.clone();
                let ctx = || format!("n={n} mask={mask:#x} edge={e} center={center} c0={c0} colors={before:?}");
                if let Err(err) = color_edge_via(&mut work, e, center, c0, scratch) {
                    report.fail(None, format!("{}: {err}", ctx()));
                    continue;
                }
                let after = work.colors();
                let r = verify_colors(g, after, chi.palette());
                let colored_after = after.iter().filter(|&&c| c != UNCOLORED).count();
                let kept = (0..g.edge_count()).all(|f| before[f] == UNCOLORED || after[f] != UNCOLORED);
                if !r.proper || colored_after != colored_before + 1 || after[e] == UNCOLORED || !kept {
                    report.fail(None, format!("{}: result {after:?}", ctx()));
                }
            }
        }
    }
    report
}

fn missing_by_scan(g: &Graph, colors: &[Color], palette: Color, v: VertexId) -> Vec<Color> {
    let used: Vec<Color> = g.incident(v).iter().map(|&(_, e)| colors[e]).collect();
    (1..=palette).filter(|c| !used.contains(c)).collect()
}

/// [`check_lemma_edge_belonging`] on `instances` random graphs with at most
/// `n_max` vertices and random partial colorings of them.
pub fn edge_belonging_suite(instances: usize, n_max: usize, seed: u64) -> OracleReport {
    let mut report = OracleReport::new("edge-belonging");
    let mut master = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..instances {
        let s = master.gen::<u64>();
        let mut rng = ChaCha8Rng::seed_from_u64(s);
        let n = rng.gen_range(2..=n_max);
        let pairs = n * (n - 1) / 2;
        let m = rng.gen_range(1..=pairs);
        let g = crate::generators::gen_erdos_renyi(n, m, rng.gen()).expect("m fits");
        let palette = g.max_degree() as Color + 1 + rng.gen_range(0..=2);
        let skip = rng.gen_range(0.0..0.5);
        let chi = random_partial_coloring(&g, palette, skip, &mut rng);
        let r = check_lemma_edge_belonging(&g, &chi);
        report.absorb(r, s);
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_edge_gives_one_path() {
        let g = Graph::new(2, &[(0, 1)]).unwrap();
        let mut chi = PartialColoring::new_empty(&g, 2).unwrap();
        assert!(enumerate_maximal_paths(&g, &chi).is_empty());
        chi.assign(0, 1).unwrap();
        let paths = enumerate_maximal_paths(&g, &chi);
        assert_eq!(paths.len(), 1);
        assert_eq!(paths[0].edges, vec![0]);
    }

    #[test]
    fn path_internal_edge_counted_once() {
        let g = Graph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let mut chi = PartialColoring::new_empty(&g, 3).unwrap();
        for (e, c) in [(0, 1), (1, 2), (2, 1)] {
            chi.assign(e, c).unwrap();
        }
        assert_eq!(count_internal_memberships(&g, &chi, 1), 1);
        assert_eq!(count_internal_memberships(&g, &chi, 0), 0);
        assert!(check_lemma_edge_belonging(&g, &chi).passed());
    }

    #[test]
    fn even_cycle_is_not_a_path() {
        let g = Graph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let mut chi = PartialColoring::new_empty(&g, 3).unwrap();
        for (e, c) in [(0, 1), (1, 2), (2, 1), (3, 2)] {
            chi.assign(e, c).unwrap();
        }
        let paths = enumerate_maximal_paths(&g, &chi);
        // Only the single-edge (1,3) and (2,3) paths remain.
        assert_eq!(paths.len(), 4);
        assert!(paths.iter().all(|p| p.len() == 1));
    }

    #[test]
    fn small_exhaustive_run_passes() {
        let r = exhaustive_extend_suite(4, 6, 1, 2);
        assert!(r.instances > 0);
        assert!(r.passed(), "{:?}", r.violations.first());
    }

    #[test]
    fn small_edge_belonging_suite_passes() {
        let r = edge_belonging_suite(20, 10, 3);
        assert!(r.passed(), "{:?}", r.violations.first());
    }
}
