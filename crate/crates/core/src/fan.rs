//! Fans around a vertex, primed-fan construction and fan shifting.

use serde::{Deserialize, Serialize};

use crate::coloring::{Color, PartialColoring, UNCOLORED};
use crate::graph::{EdgeId, VertexId};
use crate::FanPathError;

/// How the fan's primed color `c1 ∈ M(x_t)` closes the fan.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Primed {
    /// `c1` is missing at the center.
    AtCenter,
    /// The center's edge to leaf `x_j` is colored `c1`, so `c1` is missing at
    /// the earlier leaf `x_{j-1}`. Always `1 <= j < t`.
    AtEarlierLeaf { j: usize },
}

/// A fan `(v; x_0, ..., x_t)`: `(v, x_0)` is uncolored and for `i >= 1` the
/// edge `(v, x_i)` is colored with a color missing at `x_{i-1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fan {
    pub center: VertexId,
    pub leaves: Vec<VertexId>,
    /// `edges[i]` is the edge `(center, leaves[i])`.
    pub edges: Vec<EdgeId>,
    /// Colors of the fan edges at construction time; `leaf_colors[0]` is
    /// `UNCOLORED`.
    pub leaf_colors: Vec<Color>,
    pub primed_color: Color,
    pub primed: Primed,
}

impl Fan {
    /// Number of leaves, `t + 1`.
    pub fn size(&self) -> usize {
        self.leaves.len()
    }

    /// Index `t` of the last leaf.
    pub fn last(&self) -> usize {
        self.leaves.len() - 1
    }
}

/// Leaf-membership marks reused across fan constructions. A mark is valid
/// only when its epoch matches the current one, so starting a new fan is O(1).
#[derive(Debug, Clone)]
pub struct FanScratch {
    epoch: Vec<u32>,
    index: Vec<u32>,
    current: u32,
}

impl FanScratch {
    pub fn new(n: usize) -> Self {
        FanScratch {
            epoch: vec![0; n],
            index: vec![0; n],
            current: 0,
        }
    }

    fn begin(&mut self) {
        self.current = self.current.wrapping_add(1);
        if self.current == 0 {
            self.epoch.fill(0);
            self.current = 1;
        }
    }

    fn mark(&mut self, v: VertexId, i: usize) {
        self.epoch[v] = self.current;
        self.index[v] = i as u32;
    }

    fn leaf_index(&self, v: VertexId) -> Option<usize> {
        (self.epoch[v] == self.current).then(|| self.index[v] as usize)
    }
}

/// Grows a fan from the uncolored edge `e` around `center` until it is
/// primed. O(d(center)).
pub fn make_primed_fan(
    chi: &PartialColoring<'_>,
    e: EdgeId,
    center: VertexId,
    scratch: &mut FanScratch,
) -> Fan {
    let g = chi.graph();
    debug_assert!(!chi.is_colored(e), "fan must start at an uncolored edge");
    let x0 = g.other_endpoint(e, center);
    scratch.begin();
    scratch.mark(x0, 0);
    let mut fan = Fan {
        center,
        leaves: vec![x0],
        edges: vec![e],
        leaf_colors: vec![UNCOLORED],
        primed_color: UNCOLORED,
        primed: Primed::AtCenter,
    };
    loop {
        let xt = *fan.leaves.last().unwrap();
        let c1 = chi.some_missing_color(xt);
        let Some(f) = chi.edge_with_color(center, c1) else {
            fan.primed_color = c1;
            fan.primed = Primed::AtCenter;
            return fan;
        };
        let next = g.other_endpoint(f, center);
        if let Some(j) = scratch.leaf_index(next) {
            assert!(j >= 1 && j < fan.last(), "primed leaf index {j} out of range");
            fan.primed_color = c1;
            fan.primed = Primed::AtEarlierLeaf { j };
            return fan;
        }
        scratch.mark(next, fan.leaves.len());
        fan.leaves.push(next);
        fan.edges.push(f);
        fan.leaf_colors.push(c1);
    }
}

/// Checks the fan conditions for leaves `0..=upto` against the current
/// coloring.
pub fn validate_fan_prefix(
    chi: &PartialColoring<'_>,
    fan: &Fan,
    upto: usize,
) -> Result<(), FanPathError> {
    let g = chi.graph();
    let v = fan.center;
    if fan.leaves.len() != fan.edges.len() || upto >= fan.leaves.len() {
        return Err(FanPathError::InvalidFan(format!(
            "leaf index {upto} beyond a fan of {} leaves",
            fan.leaves.len()
        )));
    }
    for i in 0..=upto {
        let e = fan.edges[i];
        let (a, b) = g.endpoints(e);
        let x = fan.leaves[i];
        if !((a == v && b == x) || (a == x && b == v)) {
            return Err(FanPathError::InvalidFan(format!(
                "edge {e} does not join center {v} and leaf {x}"
            )));
        }
        let c = chi.color(e);
        if i == 0 {
            if c != UNCOLORED {
                return Err(FanPathError::InvalidFan(format!(
                    "first fan edge {e} is colored {c}"
                )));
            }
        } else if c == UNCOLORED {
            return Err(FanPathError::InvalidFan(format!("fan edge {e} is uncolored")));
        } else if !chi.is_missing(fan.leaves[i - 1], c) {
            return Err(FanPathError::InvalidFan(format!(
                "color {c} of fan edge {e} is not missing at leaf {}",
                fan.leaves[i - 1]
            )));
        }
    }
    Ok(())
}

/// Full check: fan conditions, distinct leaves, and the priming condition.
pub fn validate_fan(chi: &PartialColoring<'_>, fan: &Fan) -> Result<(), FanPathError> {
    validate_fan_prefix(chi, fan, fan.last())?;
    let mut sorted = fan.leaves.clone();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != fan.leaves.len() || sorted.binary_search(&fan.center).is_ok() {
        return Err(FanPathError::InvalidFan("leaves are not distinct neighbors".into()));
    }
    let c1 = fan.primed_color;
    let t = fan.last();
    if !chi.is_missing(fan.leaves[t], c1) {
        return Err(FanPathError::InvalidFan(format!(
            "primed color {c1} is not missing at the last leaf"
        )));
    }
    let primed = chi.is_missing(fan.center, c1)
        || fan.leaves[..t].iter().any(|&x| chi.is_missing(x, c1));
    if !primed {
        return Err(FanPathError::InvalidFan(format!("fan is not primed by {c1}")));
    }
    Ok(())
}

/// Rotates the fan from leaf `j`: `(v, x_{i-1})` takes the color of
/// `(v, x_i)` for `i = 1..=j`, and `(v, x_j)` ends uncolored.
pub fn shift_fan(chi: &mut PartialColoring<'_>, fan: &Fan, j: usize) -> Result<(), FanPathError> {
    validate_fan_prefix(chi, fan, j)?;
    if j == 0 {
        return Ok(());
    }
    let mut shifted = Vec::with_capacity(j);
    for i in 1..=j {
        shifted.push(chi.unassign(fan.edges[i])?);
    }
    for (i, c) in (1..=j).zip(shifted) {
        chi.assign(fan.edges[i - 1], c)?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    #[test]
    fn single_edge_fan_primed_at_center() {
        let g = Graph::new(2, &[(0, 1)]).unwrap();
        let chi = PartialColoring::new_empty(&g, 2).unwrap();
        let mut scratch = FanScratch::new(2);
        let fan = make_primed_fan(&chi, 0, 0, &mut scratch);
        assert_eq!(fan.leaves, vec![1]);
        assert_eq!(fan.primed, Primed::AtCenter);
        assert_eq!(fan.primed_color, chi.free_list(1)[0]);
        validate_fan(&chi, &fan).unwrap();
    }

    #[test]
    fn shift_from_first_leaf_is_noop() {
        let g = Graph::new(3, &[(0, 1), (0, 2)]).unwrap();
        let mut chi = PartialColoring::new_empty(&g, 3).unwrap();
        chi.assign(1, 1).unwrap();
        let mut scratch = FanScratch::new(3);
        let fan = make_primed_fan(&chi, 0, 0, &mut scratch);
        let before = chi.clone();
        shift_fan(&mut chi, &fan, 0).unwrap();
        assert_eq!(chi, before);
    }

    #[test]
    fn single_rotation() {
        // Fan (0; 1, 2) with (0,2) colored 2, which is missing at 1.
        let g = Graph::new(3, &[(0, 1), (0, 2)]).unwrap();
        let mut chi = PartialColoring::new_empty(&g, 3).unwrap();
        chi.assign(1, 2).unwrap();
        let fan = Fan {
            center: 0,
            leaves: vec![1, 2],
            edges: vec![0, 1],
            leaf_colors: vec![UNCOLORED, 2],
            primed_color: 1,
            primed: Primed::AtCenter,
        };
        shift_fan(&mut chi, &fan, 1).unwrap();
        assert_eq!(chi.color(0), 2);
        assert_eq!(chi.color(1), UNCOLORED);
        chi.audit().unwrap();
    }

    #[test]
    fn shift_rejects_invalid_fan() {
        // (0,2) is colored 1, but 1 is not missing at leaf 1 because (1,3) holds it.
        let g = Graph::new(4, &[(0, 1), (0, 2), (1, 3)]).unwrap();
        let mut chi = PartialColoring::new_empty(&g, 3).unwrap();
        chi.assign(1, 1).unwrap();
        chi.assign(2, 1).unwrap();
        let fan = Fan {
            center: 0,
            leaves: vec![1, 2],
            edges: vec![0, 1],
            leaf_colors: vec![UNCOLORED, 1],
            primed_color: 2,
            primed: Primed::AtCenter,
        };
        let before = chi.clone();
        assert!(matches!(
            shift_fan(&mut chi, &fan, 1),
            Err(FanPathError::InvalidFan(_))
        ));
        assert_eq!(chi, before);
    }
}
