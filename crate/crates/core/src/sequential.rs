//! Coloring edges one at a time.
//!
//! [`color_one_edge`] picks a uniformly random uncolored edge, centers the
//! fan at its lower-degree endpoint and draws c0 uniformly from the center's
//! missing colors. Centering at the lower-degree endpoint is what bounds the
//! expected cost of a step by the average edge weight instead of Δ.

use std::time::Instant;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::coloring::{Color, ColoringError, PartialColoring};
use crate::extend::{color_edge_random, color_edge_via};
use crate::fan::FanScratch;
use crate::graph::{EdgeId, Graph, VertexId};

/// What one call of [`color_one_edge`] did.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepTrace {
    pub edge: EdgeId,
    pub center: VertexId,
    pub fan_size: usize,
    pub path_length: usize,
    /// c0, the missing color at the center the path was built from.
    pub missing_color: Color,
    /// Only measured by the traced entry points.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub elapsed_ns: Option<u64>,
}

/// The endpoint of minimum degree, the lower id on ties.
#[inline]
pub fn min_degree_endpoint(g: &Graph, e: EdgeId) -> VertexId {
    let (u, v) = g.endpoints(e);
    let (du, dv) = (g.degree(u), g.degree(v));
    if du < dv || (du == dv && u < v) {
        u
    } else {
        v
    }
}

/// Colors one uniformly random uncolored edge. Exactly one more edge is
/// colored afterwards.
pub fn color_one_edge<R: Rng + ?Sized>(
    chi: &mut PartialColoring<'_>,
    rng: &mut R,
    scratch: &mut FanScratch,
) -> Result<StepTrace, ColoringError> {
    step(chi, rng, scratch, false)
}

fn step<R: Rng + ?Sized>(
    chi: &mut PartialColoring<'_>,
    rng: &mut R,
    scratch: &mut FanScratch,
    timed: bool,
) -> Result<StepTrace, ColoringError> {
    let start = timed.then(Instant::now);
    let e = chi.random_uncolored_edge(rng)?;
    let center = min_degree_endpoint(chi.graph(), e);
    let (outcome, c0) = color_edge_random(chi, e, center, rng, scratch)
        .unwrap_or_else(|err| panic!("extending a proper coloring failed at edge {e}: {err}"));
    Ok(StepTrace {
        edge: e,
        center,
        fan_size: outcome.fan_size,
        path_length: outcome.path_length,
        missing_color: c0,
        elapsed_ns: start.map(|s| s.elapsed().as_nanos() as u64),
    })
}

/// Completes `chi` into a total coloring by repeated [`color_one_edge`].
pub fn color_edges<R: Rng + ?Sized>(chi: &mut PartialColoring<'_>, rng: &mut R) {
    if chi.is_total() {
        return;
    }
    let mut scratch = FanScratch::new(chi.graph().vertex_count());
    while !chi.is_total() {
        step(chi, rng, &mut scratch, false).expect("uncolored edge available");
    }
}

/// [`color_edges`] that also records and times every step.
pub fn color_edges_traced<R: Rng + ?Sized>(
    chi: &mut PartialColoring<'_>,
    rng: &mut R,
) -> Vec<StepTrace> {
    let mut scratch = FanScratch::new(chi.graph().vertex_count());
    let mut steps = Vec::with_capacity(chi.uncolored_count());
    while !chi.is_total() {
        steps.push(step(chi, rng, &mut scratch, true).expect("uncolored edge available"));
    }
    steps
}

/// Deterministic baseline: the fan is centered at the lower-id endpoint and
/// c0 is the head of the center's free list.
pub fn color_one_edge_deterministic(
    chi: &mut PartialColoring<'_>,
    e: EdgeId,
    scratch: &mut FanScratch,
) -> Result<(), ColoringError> {
    if chi.is_colored(e) {
        return Err(ColoringError::AlreadyColored { edge: e });
    }
    let (u, v) = chi.graph().endpoints(e);
    let center = u.min(v);
    let c0 = chi.some_missing_color(center);
    color_edge_via(chi, e, center, c0, scratch)
        .unwrap_or_else(|err| panic!("extending a proper coloring failed at edge {e}: {err}"));
    Ok(())
}

/// Colors every uncolored edge in id order with the deterministic baseline.
pub fn color_edges_deterministic(chi: &mut PartialColoring<'_>) {
    let mut scratch = FanScratch::new(chi.graph().vertex_count());
    for e in 0..chi.graph().edge_count() {
        if !chi.is_colored(e) {
            color_one_edge_deterministic(chi, e, &mut scratch).expect("edge is uncolored");
        }
    }
}
