//! From-scratch properness check, independent of the incremental
//! structures kept by `PartialColoring`.

use serde::{Deserialize, Serialize};

use super::{Color, PartialColoring, UNCOLORED};
use crate::graph::{EdgeId, Graph, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Violation {
    /// Two edges incident to `vertex` share `color`.
    SharedColor {
        vertex: VertexId,
        color: Color,
        edges: (EdgeId, EdgeId),
    },
    OutOfPalette { edge: EdgeId, color: Color },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProperReport {
    pub proper: bool,
    pub palette: Color,
    pub colors_used: usize,
    pub max_color: Color,
    pub uncolored: usize,
    pub violations: Vec<Violation>,
}

impl ProperReport {
    /// Proper, within the palette, and every edge colored.
    pub fn is_total_proper(&self) -> bool {
        self.proper && self.uncolored == 0
    }
}

pub fn verify_proper(g: &Graph, chi: &PartialColoring<'_>) -> ProperReport {
    verify_colors(g, chi.colors(), chi.palette())
}

/// Checks a raw per-edge color vector. Colors above `palette` are reported
/// as violations but still take part in the shared-color scan.
pub fn verify_colors(g: &Graph, colors: &[Color], palette: Color) -> ProperReport {
    assert_eq!(colors.len(), g.edge_count(), "one color per edge");
    let mut violations = Vec::new();
    let max_color = colors.iter().copied().max().unwrap_or(UNCOLORED);
    let mut uncolored = 0;
    let mut used = vec![false; max_color as usize + 1];
    for (e, &c) in colors.iter().enumerate() {
        if c == UNCOLORED {
            uncolored += 1;
            continue;
        }
        used[c as usize] = true;
        if c > palette {
            violations.push(Violation::OutOfPalette { edge: e, color: c });
        }
    }

    // Per color, the last vertex that saw it and through which edge.
    let mut seen_at: Vec<(usize, EdgeId)> = vec![(usize::MAX, 0); max_color as usize + 1];
    for v in 0..g.vertex_count() {
        for &(_, e) in g.incident(v) {
            let c = colors[e];
            if c == UNCOLORED {
                continue;
            }
            let slot = &mut seen_at[c as usize];
            if slot.0 == v {
                violations.push(Violation::SharedColor {
                    vertex: v,
                    color: c,
                    edges: (slot.1, e),
                });
            } else {
                *slot = (v, e);
            }
        }
    }

    ProperReport {
        proper: violations.is_empty(),
        palette,
        colors_used: used.iter().filter(|&&b| b).count(),
        max_color,
        uncolored,
        violations,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle() -> Graph {
        Graph::new(3, &[(0, 1), (1, 2), (2, 0)]).unwrap()
    }

    #[test]
    fn empty_coloring_is_proper() {
        let g = triangle();
        let chi = PartialColoring::new_empty(&g, 3).unwrap();
        let r = verify_proper(&g, &chi);
        assert!(r.proper);
        assert_eq!(r.colors_used, 0);
        assert_eq!(r.uncolored, 3);
    }

    #[test]
    fn three_colored_triangle() {
        let g = triangle();
        let r = verify_colors(&g, &[1, 2, 3], 3);
        assert!(r.is_total_proper());
        assert_eq!(r.colors_used, 3);
        assert_eq!(r.max_color, 3);
    }

    #[test]
    fn injected_conflict_names_vertex() {
        let g = triangle();
        let r = verify_colors(&g, &[1, 1, 0], 3);
        assert!(!r.proper);
        assert_eq!(
            r.violations,
            vec![Violation::SharedColor {
                vertex: 1,
                color: 1,
                edges: (0, 1)
            }]
        );
    }

    #[test]
    fn out_of_palette() {
        let g = triangle();
        let r = verify_colors(&g, &[1, 2, 7], 3);
        assert_eq!(r.violations, vec![Violation::OutOfPalette { edge: 2, color: 7 }]);
    }
}
