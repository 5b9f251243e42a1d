use std::collections::{BTreeSet, HashSet};

use arbcolor_core::coloring::{read_dump, write_dump};
use arbcolor_core::fan::{make_primed_fan, shift_fan, validate_fan, FanScratch, Primed};
use arbcolor_core::generators::GenSpec;
use arbcolor_core::oracles::{enumerate_maximal_paths, random_partial_coloring};
use arbcolor_core::path::{flip_path, maximal_alternating_path};
use arbcolor_core::recursive::{
    check_prune_bounds, class_measures, collect_level_stats, euler_partition, is_balanced,
    prune_min_weight_colors, recursive_color_edges_with, side_degrees, PruneBy, RecursiveOptions,
};
use arbcolor_core::sequential::{color_edges, color_one_edge};
use arbcolor_core::{read_edge_list, verify_proper, write_edge_list, Color, Graph, PartialColoring};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn arb_graph(max_n: usize, max_m: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n).prop_flat_map(move |n| {
        proptest::collection::vec((0..n, 0..n), 0..=max_m).prop_map(move |pairs| {
            let mut seen = HashSet::new();
            let edges: Vec<_> = pairs
                .into_iter()
                .filter(|&(u, v)| u != v && seen.insert((u.min(v), u.max(v))))
                .collect();
            Graph::new(n, &edges).unwrap()
        })
    })
}

/// Peels a minimum-degree vertex at a time by full rescans.
fn naive_degeneracy(g: &Graph) -> usize {
    let n = g.vertex_count();
    let mut alive = vec![true; n];
    let mut best = 0;
    for _ in 0..n {
        let deg = |v: usize, alive: &[bool]| g.incident(v).iter().filter(|&&(x, _)| alive[x]).count();
        let v = (0..n).filter(|&v| alive[v]).min_by_key(|&v| deg(v, &alive)).unwrap();
        best = best.max(deg(v, &alive));
        alive[v] = false;
    }
    best
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn edge_list_round_trips(g in arb_graph(30, 80)) {
        let back = read_edge_list(&write_edge_list(&g)).unwrap();
        prop_assert_eq!(back.edges(), g.edges());
    }

    #[test]
    fn degeneracy_matches_naive_peeling(g in arb_graph(25, 80)) {
        prop_assert_eq!(g.degeneracy(), naive_degeneracy(&g));
    }

    #[test]
    fn weight_is_sum_of_min_degrees(g in arb_graph(25, 80)) {
        let w: u64 = g.edges().iter()
            .map(|&(u, v)| g.degree(u).min(g.degree(v)) as u64)
            .sum();
        prop_assert_eq!(g.weight(), w);
        prop_assert!(w <= 2 * g.edge_count() as u64 * g.degeneracy().max(1) as u64);
    }

    #[test]
    fn fans_are_valid_and_shifts_keep_center_missing_set(
        g in arb_graph(14, 50), seed in any::<u64>(), skip in 0.1f64..0.7,
    ) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let palette = g.max_degree() as Color + 1;
        let chi = random_partial_coloring(&g, palette, skip, &mut rng);
        let mut scratch = FanScratch::new(g.vertex_count());
        for &e in chi.uncolored_edges() {
            let (u, v) = g.endpoints(e);
            for center in [u, v] {
                let fan = make_primed_fan(&chi, e, center, &mut scratch);
                prop_assert!(validate_fan(&chi, &fan).is_ok());
                prop_assert!(chi.is_missing(fan.leaves[fan.last()], fan.primed_color));
                match fan.primed {
                    Primed::AtCenter => prop_assert!(chi.is_missing(center, fan.primed_color)),
                    Primed::AtEarlierLeaf { j } => {
                        prop_assert!(j >= 1 && j < fan.last());
                        prop_assert_eq!(chi.color(fan.edges[j]), fan.primed_color);
                    }
                }
                for j in 0..=fan.last() {
                    let mut work = chi.clone();
                    let before = work.missing_colors(center);
                    shift_fan(&mut work, &fan, j).unwrap();
                    prop_assert_eq!(work.missing_colors(center), before);
                    prop_assert!(verify_proper(&g, &work).proper);
                    prop_assert!(!work.is_colored(fan.edges[j]));
                    prop_assert!(work.audit().is_ok());
                }
            }
        }
    }

    #[test]
    fn paths_match_enumeration_and_flip_is_involution(
        g in arb_graph(16, 60), seed in any::<u64>(), skip in 0.0f64..0.5,
    ) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let palette = g.max_degree() as Color + 1;
        let chi = random_partial_coloring(&g, palette, skip, &mut rng);
        let all = enumerate_maximal_paths(&g, &chi);
        let keyed: HashSet<(usize, Vec<usize>)> = all
            .iter()
            .flat_map(|p| {
                let mut rev = p.edges.clone();
                rev.reverse();
                [(p.start(), p.edges.clone()), (p.end(), rev)]
            })
            .collect();
        for u in 0..g.vertex_count() {
            for c0 in chi.missing_colors(u) {
                for c1 in 1..=palette {
                    if c1 == c0 || chi.is_missing(u, c1) {
                        continue;
                    }
                    let p = maximal_alternating_path(&chi, u, c0, c1);
                    prop_assert!(p.len() <= p.internal_count() + 2);
                    prop_assert!(keyed.contains(&(u, p.edges.clone())));
                    let mut work = chi.clone();
                    flip_path(&mut work, &p).unwrap();
                    prop_assert!(verify_proper(&g, &work).proper);
                    prop_assert!(work.is_missing(u, c1));
                    flip_path(&mut work, &p).unwrap();
                    prop_assert_eq!(work.colors(), chi.colors());
                }
            }
        }
    }

    #[test]
    fn color_one_edge_adds_exactly_one(
        g in arb_graph(20, 80), seed in any::<u64>(), skip in 0.1f64..0.9,
    ) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let palette = g.max_degree() as Color + 1;
        let mut chi = random_partial_coloring(&g, palette, skip, &mut rng);
        let mut scratch = FanScratch::new(g.vertex_count());
        while !chi.is_total() {
            let before: Vec<Color> = chi.colors().to_vec();
            let t = color_one_edge(&mut chi, &mut rng, &mut scratch).unwrap();
            prop_assert_eq!(chi.colored_count(), before.iter().filter(|&&c| c != 0).count() + 1);
            prop_assert!(before.iter().zip(chi.colors()).all(|(&b, &a)| b == 0 || a != 0));
            prop_assert!(chi.is_colored(t.edge));
            prop_assert!(verify_proper(&g, &chi).proper);
        }
        prop_assert!(chi.audit().is_ok());
    }

    #[test]
    fn dump_round_trips(g in arb_graph(20, 60), seed in any::<u64>()) {
        let mut chi = PartialColoring::new_empty(&g, g.max_degree() as Color + 1).unwrap();
        color_edges(&mut chi, &mut ChaCha8Rng::seed_from_u64(seed));
        prop_assert_eq!(read_dump(&write_dump(chi.colors()), g.edge_count()).unwrap(), chi.colors());
    }

    #[test]
    fn euler_partition_is_balanced(g in arb_graph(60, 400)) {
        let split = euler_partition(&g);
        prop_assert!(is_balanced(&g, &split));
        let (l, r) = side_degrees(&g, &split);
        for v in 0..g.vertex_count() {
            prop_assert_eq!(l[v] + r[v], g.degree(v));
        }
        prop_assert_eq!(split.edge_map.len(), g.edge_count());
    }

    #[test]
    fn prune_matches_sort_oracle(
        g in arb_graph(20, 80), seed in any::<u64>(), extra in 1u32..=3, by_size in any::<bool>(),
    ) {
        let by = if by_size { PruneBy::Size } else { PruneBy::Weight };
        let target = g.max_degree() as Color + 1;
        let chi = random_partial_coloring(&g, target + extra, 0.0, &mut ChaCha8Rng::seed_from_u64(seed));
        let out = prune_min_weight_colors(&chi, target, by).unwrap();

        let measure = class_measures(&g, &chi, by);
        let mut ranked: Vec<(u64, Color)> = (1..=chi.palette()).map(|c| (measure[c as usize], c)).collect();
        ranked.sort();
        let expected: BTreeSet<Color> = ranked.iter().take(extra as usize).map(|&(_, c)| c).collect();
        prop_assert_eq!(out.removed.iter().copied().collect::<BTreeSet<_>>(), expected.clone());

        let lost: u64 = (0..g.edge_count())
            .filter(|&e| !chi.is_colored(e) || expected.contains(&chi.color(e)))
            .map(|e| g.edge_weight(e))
            .sum();
        prop_assert_eq!(out.uncolored_weight, lost);
        if by == PruneBy::Weight && chi.is_total() {
            prop_assert!(lost as u128 * (g.max_degree() as u128 + 4) <= 3 * g.weight() as u128);
        }
        let r = verify_proper(&g, &out.coloring);
        prop_assert!(r.proper);
        prop_assert!(r.max_color <= target);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn recursive_coloring_meets_level_bounds(
        n in 50usize..400, alpha in 2usize..5, leaves_frac in 0.1f64..1.0, seed in any::<u64>(),
    ) {
        let spec = GenSpec::StarPlusForests {
            n,
            alpha,
            star_leaves: Some(((n - 1) as f64 * leaves_frac).max(1.0) as usize),
            seed,
        };
        let g = spec.generate().unwrap();
        let opts = RecursiveOptions { trace: true, ..Default::default() };
        let (chi, trace) = recursive_color_edges_with(&g, &mut ChaCha8Rng::seed_from_u64(seed), opts);
        let r = verify_proper(&g, &chi);
        prop_assert!(r.is_total_proper());
        prop_assert!(r.max_color as usize <= g.max_degree() + 1);
        let trace = trace.unwrap();
        for level in collect_level_stats(&trace) {
            prop_assert!(level.holds(), "{:?}", level.violations);
        }
        prop_assert!(check_prune_bounds(&trace).is_empty());
    }
}
