//! Coloring one more edge from a primed fan and an alternating path.

use rand::Rng;

use crate::coloring::{Color, PartialColoring};
use crate::fan::{make_primed_fan, shift_fan, Fan, FanScratch};
use crate::graph::{EdgeId, VertexId};
use crate::path::{flip_path, maximal_alternating_path, AlternatingPath};
use crate::FanPathError;

/// Colors the fan's first edge, recoloring along the fan and the path as
/// needed. `path` must be the maximal alternating path from the fan's center
/// whose first edge carries the primed color.
///
/// Every previously colored edge stays colored. O(|F| + |P|).
pub fn extend_coloring(
    chi: &mut PartialColoring<'_>,
    fan: &Fan,
    path: &AlternatingPath,
) -> Result<(), FanPathError> {
    let v = fan.center;
    let c1 = fan.primed_color;
    let t = fan.last();

    let Some(c1_edge) = chi.edge_with_color(v, c1) else {
        shift_fan(chi, fan, t)?;
        chi.assign(fan.edges[t], c1)?;
        return Ok(());
    };

    let j = fan
        .edges
        .iter()
        .position(|&e| e == c1_edge)
        .ok_or_else(|| {
            FanPathError::InvalidFan(format!("edge {c1_edge} with primed color {c1} is not in the fan"))
        })?;
    assert!(j >= 1 && j < t, "primed leaf index {j} outside 1..{t}");
    if path.start() != v || path.first != c1 || path.is_empty() {
        return Err(FanPathError::PathMismatch {
            edge: path.edges.first().copied().unwrap_or(c1_edge),
        });
    }

    let w = path.end();
    flip_path(chi, path)?;
    let target = if w != fan.leaves[j - 1] { j - 1 } else { t };
    shift_fan(chi, fan, target)?;
    chi.assign(fan.edges[target], c1)?;
    Ok(())
}

/// Sizes observed while coloring one edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExtendOutcome {
    pub fan_size: usize,
    pub path_length: usize,
}

/// The whole fan → path → extend pipeline for the uncolored edge `e`, with
/// `center` as the fan center and `missing` (∈ M(center)) as c0.
pub fn color_edge_via(
    chi: &mut PartialColoring<'_>,
    e: EdgeId,
    center: VertexId,
    missing: Color,
    scratch: &mut FanScratch,
) -> Result<ExtendOutcome, FanPathError> {
    let fan = make_primed_fan(chi, e, center, scratch);
    let path = maximal_alternating_path(chi, center, missing, fan.primed_color);
    extend_coloring(chi, &fan, &path)?;
    Ok(ExtendOutcome {
        fan_size: fan.size(),
        path_length: path.len(),
    })
}

/// Same pipeline with c0 drawn uniformly from M(center) after the fan is
/// built.
pub(crate) fn color_edge_random<R: Rng + ?Sized>(
    chi: &mut PartialColoring<'_>,
    e: EdgeId,
    center: VertexId,
    rng: &mut R,
    scratch: &mut FanScratch,
) -> Result<(ExtendOutcome, Color), FanPathError> {
    let fan = make_primed_fan(chi, e, center, scratch);
    let c0 = chi.random_missing_color(center, rng);
    let path = maximal_alternating_path(chi, center, c0, fan.primed_color);
    extend_coloring(chi, &fan, &path)?;
    Ok((
        ExtendOutcome {
            fan_size: fan.size(),
            path_length: path.len(),
        },
        c0,
    ))
}
