//! Merging two child colorings and pruning the merged palette.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::coloring::{Color, ColoringError, PartialColoring, UNCOLORED};
use crate::graph::{EdgeId, Graph};

use super::euler::{EulerSplit, Side};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MergeError {
    #[error("child coloring leaves edge {edge} uncolored")]
    Uncolored { edge: EdgeId },
    #[error("merged coloring is improper: {0}")]
    ImproperInput(ColoringError),
}

/// Combines colorings of the two sides of `split` into one coloring of `g`,
/// shifting the right side's colors past the left palette. The result uses
/// the palette `k1 + k2`.
pub fn merge_colorings<'g>(
    g: &'g Graph,
    split: &EulerSplit,
    left: &PartialColoring<'_>,
    right: &PartialColoring<'_>,
) -> Result<PartialColoring<'g>, MergeError> {
    let offset = left.palette();
    let palette = (offset + right.palette()).max(g.max_degree() as Color + 1);
    let mut chi = PartialColoring::new_empty(g, palette).map_err(MergeError::ImproperInput)?;
    for (e, &(side, ce)) in split.edge_map.iter().enumerate() {
        let c = match side {
            Side::Left => left.color(ce),
            Side::Right => match right.color(ce) {
                UNCOLORED => UNCOLORED,
                c => c + offset,
            },
        };
        if c == UNCOLORED {
            return Err(MergeError::Uncolored { edge: e });
        }
        chi.assign(e, c).map_err(MergeError::ImproperInput)?;
    }
    Ok(chi)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PruneBy {
    /// Drop the classes of least total edge weight.
    #[default]
    Weight,
    /// Drop the classes with the fewest edges.
    Size,
}

#[derive(Debug, Clone)]
pub struct PruneOutcome<'g> {
    /// The surviving classes relabeled to `1..=target`, in their original
    /// order. Edges of removed classes are uncolored.
    pub coloring: PartialColoring<'g>,
    /// Removed colors, in the input labelling, ascending.
    pub removed: Vec<Color>,
    /// Total weight of the edges left uncolored.
    pub uncolored_weight: u64,
}

/// Class measure for colors `1..=k`; index 0 is unused.
pub fn class_measures(g: &Graph, chi: &PartialColoring<'_>, by: PruneBy) -> Vec<u64> {
    let mut m = vec![0u64; chi.palette() as usize + 1];
    for (e, &c) in chi.colors().iter().enumerate() {
        if c != UNCOLORED {
            m[c as usize] += match by {
                PruneBy::Weight => g.edge_weight(e),
                PruneBy::Size => 1,
            };
        }
    }
    m
}

/// Removes the `k - target` color classes of least measure (lower color on
/// ties) and relabels the rest to `1..=target`. When `k <= target` nothing
/// is removed and only the palette changes.
pub fn prune_min_weight_colors<'g>(
    chi: &PartialColoring<'g>,
    target: Color,
    by: PruneBy,
) -> Result<PruneOutcome<'g>, ColoringError> {
    let g = chi.graph();
    let k = chi.palette();
    let mut out = PartialColoring::new_empty(g, target)?;
    if k <= target {
        for (e, &c) in chi.colors().iter().enumerate() {
            if c != UNCOLORED {
                out.assign(e, c)?;
            }
        }
        let uncolored_weight = chi.uncolored_edges().iter().map(|&e| g.edge_weight(e)).sum();
        return Ok(PruneOutcome {
            coloring: out,
            removed: Vec::new(),
            uncolored_weight,
        });
    }

    let measure = class_measures(g, chi, by);
    let mut order: Vec<Color> = (1..=k).collect();
    order.sort_by_key(|&c| (measure[c as usize], c));
    let mut removed = order[..(k - target) as usize].to_vec();
    removed.sort_unstable();

    let mut relabel = vec![UNCOLORED; k as usize + 1];
    let mut next = 1;
    for c in 1..=k {
        if removed.binary_search(&c).is_err() {
            relabel[c as usize] = next;
            next += 1;
        }
    }
    let mut uncolored_weight = 0;
    for (e, &c) in chi.colors().iter().enumerate() {
        let nc = relabel[c as usize];
        if nc == UNCOLORED {
            uncolored_weight += g.edge_weight(e);
        } else {
            out.assign(e, nc)?;
        }
    }
    Ok(PruneOutcome {
        coloring: out,
        removed,
        uncolored_weight,
    })
}

/// `uncolored_weight <= 3 W / (Δ + 4)`, in integers.
pub fn prune_bound_holds(uncolored_weight: u64, weight: u64, max_degree: usize) -> bool {
    uncolored_weight as u128 * (max_degree as u128 + 4) <= 3 * weight as u128
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::recursive::euler::euler_partition;

    #[test]
    fn merge_offsets_right_colors() {
        // Path 0-1-2, split into one edge per side.
        let g = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        let split = euler_partition(&g);
        assert_eq!(split.left.edge_count(), 1);
        let mut l = PartialColoring::new_empty(&split.left, 2).unwrap();
        l.assign(0, 1).unwrap();
        let mut r = PartialColoring::new_empty(&split.right, 2).unwrap();
        r.assign(0, 1).unwrap();
        let chi = merge_colorings(&g, &split, &l, &r).unwrap();
        let mut got = chi.colors().to_vec();
        got.sort();
        assert_eq!(got, vec![1, 3]);
        assert!(chi.is_total());
    }

    #[test]
    fn merge_rejects_uncolored_child() {
        let g = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        let split = euler_partition(&g);
        let l = PartialColoring::new_empty(&split.left, 2).unwrap();
        let mut r = PartialColoring::new_empty(&split.right, 2).unwrap();
        r.assign(0, 1).unwrap();
        assert!(matches!(
            merge_colorings(&g, &split, &l, &r),
            Err(MergeError::Uncolored { .. })
        ));
    }

    #[test]
    fn prune_drops_lightest_classes_lowest_index_first() {
        // Five disjoint edges of weight 1 each, colored so class sizes are
        // 10, 2, 7, 2, 9 after scaling by matching size.
        let sizes = [10usize, 2, 7, 2, 9];
        let m: usize = sizes.iter().sum();
        let edges: Vec<_> = (0..m).map(|i| (2 * i, 2 * i + 1)).collect();
        let g = Graph::new(2 * m, &edges).unwrap();
        let mut chi = PartialColoring::new_empty(&g, 5).unwrap();
        let mut e = 0;
        for (c, &s) in sizes.iter().enumerate() {
            for _ in 0..s {
                chi.assign(e, c as Color + 1).unwrap();
                e += 1;
            }
        }
        let out = prune_min_weight_colors(&chi, 3, PruneBy::Weight).unwrap();
        assert_eq!(out.removed, vec![2, 4]);
        assert_eq!(out.uncolored_weight, 4);
        assert_eq!(out.coloring.palette(), 3);
        // Class 3 becomes 2, class 5 becomes 3.
        assert_eq!(out.coloring.color(12), 2);
        assert_eq!(out.coloring.color(m - 1), 3);
    }

    #[test]
    fn prune_to_same_palette_is_identity() {
        let g = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        let mut chi = PartialColoring::new_empty(&g, 3).unwrap();
        chi.assign(0, 2).unwrap();
        chi.assign(1, 3).unwrap();
        let out = prune_min_weight_colors(&chi, 3, PruneBy::Weight).unwrap();
        assert!(out.removed.is_empty());
        assert_eq!(out.coloring, chi);
    }

    #[test]
    fn bound_is_exact_in_integers() {
        assert!(prune_bound_holds(3, 7, 3));
        assert!(!prune_bound_holds(4, 7, 3));
    }
}
