//! Mutable proper partial edge colorings.
//!
//! [`PartialColoring`] keeps four structures in lockstep so that every
//! query the coloring algorithms need is O(1):
//!
//! * the color of every edge (`UNCOLORED` for none),
//! * for every vertex, a table from occupied color to the edge holding it,
//! * for every vertex `v`, a list of the colors of `[d(v) + 1]` missing at
//!   `v`, with a position index so removal and insertion are O(1),
//! * an array of edge ids whose first `l` entries are exactly the uncolored
//!   edges, with the inverse index `ind(e)`.
//!
//! Colors are `1..=palette`.

mod dump;
mod table;
mod verify;

use rand::Rng;
use thiserror::Error;

use crate::graph::{EdgeId, Graph, VertexId};
use table::OccupiedTables;

pub use dump::{read_dump, write_dump, DumpError};
pub use verify::{verify_colors, verify_proper, ProperReport, Violation};

pub type Color = u32;

/// The distinguished "no color" value.
pub const UNCOLORED: Color = 0;

/// Attempts of rejection sampling before falling back to an explicit
/// enumeration of the missing colors.
const REJECTION_ATTEMPTS: usize = 64;

const NOT_LISTED: u32 = u32::MAX;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColoringError {
    #[error("palette of {palette} colors is smaller than max degree + 1 = {required}")]
    PaletteTooSmall { palette: Color, required: usize },
    #[error("color {color} for edge {edge} is outside the palette 1..={palette}")]
    ColorOutOfRange {
        edge: EdgeId,
        color: Color,
        palette: Color,
    },
    #[error("color {color} for edge {edge} is already used at vertex {vertex} by edge {occupant}")]
    ColorConflict {
        edge: EdgeId,
        color: Color,
        vertex: VertexId,
        occupant: EdgeId,
    },
    #[error("edge {edge} is already colored")]
    AlreadyColored { edge: EdgeId },
    #[error("edge {edge} is already uncolored")]
    AlreadyUncolored { edge: EdgeId },
    #[error("no uncolored edges remain")]
    NoUncoloredEdges,
}

#[derive(Debug, Clone)]
pub struct PartialColoring<'g> {
    graph: &'g Graph,
    palette: Color,
    color: Vec<Color>,
    occupied: OccupiedTables,
    /// Free list of `v` lives at `graph.incidence_offset(v) + v`, length d(v)+1.
    free_items: Vec<Color>,
    free_pos: Vec<u32>,
    free_len: Vec<u32>,
    uncolored: Vec<EdgeId>,
    ind: Vec<usize>,
    live: usize,
}

impl<'g> PartialColoring<'g> {
    /// The empty coloring of `g` over the palette `1..=palette`.
    pub fn new_empty(graph: &'g Graph, palette: Color) -> Result<Self, ColoringError> {
        let required = graph.max_degree() + 1;
        if (palette as usize) < required {
            return Err(ColoringError::PaletteTooSmall { palette, required });
        }
        let n = graph.vertex_count();
        let m = graph.edge_count();
        let list_total = 2 * m + n;
        let mut free_items = Vec::with_capacity(list_total);
        let mut free_pos = Vec::with_capacity(list_total);
        let mut free_len = Vec::with_capacity(n);
        for v in 0..n {
            let slots = graph.degree(v) + 1;
            for i in 0..slots {
                free_items.push(i as Color + 1);
                free_pos.push(i as u32);
            }
            free_len.push(slots as u32);
        }
        Ok(PartialColoring {
            graph,
            palette,
            color: vec![UNCOLORED; m],
            occupied: OccupiedTables::new(graph, palette),
            free_items,
            free_pos,
            free_len,
            uncolored: (0..m).collect(),
            ind: (0..m).collect(),
            live: m,
        })
    }

    pub fn graph(&self) -> &'g Graph {
        self.graph
    }

    pub fn palette(&self) -> Color {
        self.palette
    }

    #[inline]
    pub fn color(&self, e: EdgeId) -> Color {
        self.color[e]
    }

    #[inline]
    pub fn is_colored(&self, e: EdgeId) -> bool {
        self.color[e] != UNCOLORED
    }

    pub fn colors(&self) -> &[Color] {
        &self.color
    }

    /// l = |E_un|.
    #[inline]
    pub fn uncolored_count(&self) -> usize {
        self.live
    }

    pub fn colored_count(&self) -> usize {
        self.color.len() - self.live
    }

    pub fn is_total(&self) -> bool {
        self.live == 0
    }

    /// The uncolored edges, in array order.
    pub fn uncolored_edges(&self) -> &[EdgeId] {
        &self.uncolored[..self.live]
    }

    /// The edge incident to `v` colored `c`, if any.
    #[inline]
    pub fn edge_with_color(&self, v: VertexId, c: Color) -> Option<EdgeId> {
        if c == UNCOLORED || c > self.palette {
            return None;
        }
        self.occupied.get(v, c)
    }

    /// Whether `c ∈ M(v)`.
    #[inline]
    pub fn is_missing(&self, v: VertexId, c: Color) -> bool {
        self.edge_with_color(v, c).is_none()
    }

    /// M(v) as a sorted vector. O(palette); meant for tests and oracles.
    pub fn missing_colors(&self, v: VertexId) -> Vec<Color> {
        (1..=self.palette).filter(|&c| self.is_missing(v, c)).collect()
    }

    /// The free list of `v`: the colors of `[d(v) + 1]` missing at `v`.
    pub fn free_list(&self, v: VertexId) -> &[Color] {
        let base = self.free_base(v);
        &self.free_items[base..base + self.free_len[v] as usize]
    }

    #[inline]
    fn free_base(&self, v: VertexId) -> usize {
        self.graph.incidence_offset(v) + v
    }

    pub fn assign(&mut self, e: EdgeId, c: Color) -> Result<(), ColoringError> {
        if self.color[e] != UNCOLORED {
            return Err(ColoringError::AlreadyColored { edge: e });
        }
        if c == UNCOLORED || c > self.palette {
            return Err(ColoringError::ColorOutOfRange {
                edge: e,
                color: c,
                palette: self.palette,
            });
        }
        let (u, v) = self.graph.endpoints(e);
        for x in [u, v] {
            if let Some(occupant) = self.occupied.get(x, c) {
                return Err(ColoringError::ColorConflict {
                    edge: e,
                    color: c,
                    vertex: x,
                    occupant,
                });
            }
        }
        self.assign_unchecked(e, c);
        Ok(())
    }

    pub fn unassign(&mut self, e: EdgeId) -> Result<Color, ColoringError> {
        if self.color[e] == UNCOLORED {
            return Err(ColoringError::AlreadyUncolored { edge: e });
        }
        Ok(self.unassign_unchecked(e))
    }

    /// `assign` without the precondition checks. The caller guarantees `e`
    /// is uncolored and `c` is in the palette and missing at both endpoints.
    #[inline]
    pub(crate) fn assign_unchecked(&mut self, e: EdgeId, c: Color) {
        debug_assert_eq!(self.color[e], UNCOLORED);
        let (u, v) = self.graph.endpoints(e);
        debug_assert!(self.occupied.get(u, c).is_none() && self.occupied.get(v, c).is_none());
        self.color[e] = c;
        self.occupied.insert(u, c, e);
        self.occupied.insert(v, c, e);
        self.free_remove(u, c);
        self.free_remove(v, c);

        // Move the last live entry into e's slot and shrink the prefix.
        let i = self.ind[e];
        let last = self.live - 1;
        let moved = self.uncolored[last];
        self.uncolored[i] = moved;
        self.ind[moved] = i;
        self.uncolored[last] = e;
        self.ind[e] = last;
        self.live = last;
    }

    #[inline]
    pub(crate) fn unassign_unchecked(&mut self, e: EdgeId) -> Color {
        let c = self.color[e];
        debug_assert_ne!(c, UNCOLORED);
        let (u, v) = self.graph.endpoints(e);
        self.color[e] = UNCOLORED;
        self.occupied.remove(u, c);
        self.occupied.remove(v, c);
        self.free_insert(u, c);
        self.free_insert(v, c);

        // Swap e to position `live` and grow the prefix.
        let i = self.ind[e];
        let pos = self.live;
        let other = self.uncolored[pos];
        self.uncolored[i] = other;
        self.ind[other] = i;
        self.uncolored[pos] = e;
        self.ind[e] = pos;
        self.live += 1;
        c
    }

    #[inline]
    fn free_remove(&mut self, v: VertexId, c: Color) {
        if c as usize > self.graph.degree(v) + 1 {
            return;
        }
        let base = self.free_base(v);
        let p = self.free_pos[base + c as usize - 1];
        debug_assert_ne!(p, NOT_LISTED);
        let last = self.free_len[v] - 1;
        let moved = self.free_items[base + last as usize];
        self.free_items[base + p as usize] = moved;
        self.free_pos[base + moved as usize - 1] = p;
        self.free_pos[base + c as usize - 1] = NOT_LISTED;
        self.free_len[v] = last;
    }

    #[inline]
    fn free_insert(&mut self, v: VertexId, c: Color) {
        if c as usize > self.graph.degree(v) + 1 {
            return;
        }
        let base = self.free_base(v);
        let len = self.free_len[v];
        self.free_items[base + len as usize] = c;
        self.free_pos[base + c as usize - 1] = len;
        self.free_len[v] = len + 1;
    }

    /// Some color missing at `v`: the head of its free list.
    #[inline]
    pub fn some_missing_color(&self, v: VertexId) -> Color {
        debug_assert!(self.free_len[v] > 0);
        self.free_items[self.free_base(v)]
    }

    /// A color drawn uniformly from M(v).
    ///
    /// High-degree vertices (d(v) > palette / 2) enumerate M(v) explicitly;
    /// others rejection-sample the palette, falling back to enumeration after
    /// a bounded number of misses.
    pub fn random_missing_color<R: Rng + ?Sized>(&self, v: VertexId, rng: &mut R) -> Color {
        let k = self.palette;
        if 2 * self.graph.degree(v) <= k as usize {
            for _ in 0..REJECTION_ATTEMPTS {
                let c = rng.gen_range(1..=k);
                if self.occupied.get(v, c).is_none() {
                    return c;
                }
            }
        }
        let missing: Vec<Color> = (1..=k).filter(|&c| self.occupied.get(v, c).is_none()).collect();
        missing[rng.gen_range(0..missing.len())]
    }

    /// An uncolored edge chosen uniformly at random.
    pub fn random_uncolored_edge<R: Rng + ?Sized>(
        &self,
        rng: &mut R,
    ) -> Result<EdgeId, ColoringError> {
        if self.live == 0 {
            return Err(ColoringError::NoUncoloredEdges);
        }
        Ok(self.uncolored[rng.gen_range(0..self.live)])
    }

    /// Recomputes every incremental structure from the per-edge colors and
    /// compares. Returns a description of the first mismatch.
    pub fn audit(&self) -> Result<(), String> {
        let g = self.graph;
        let mut expect_live = 0;
        for e in 0..g.edge_count() {
            let c = self.color[e];
            let (u, v) = g.endpoints(e);
            if c == UNCOLORED {
                expect_live += 1;
                if self.ind[e] >= self.live || self.uncolored[self.ind[e]] != e {
                    return Err(format!("uncolored edge {e} missing from live prefix"));
                }
                continue;
            }
            if c > self.palette {
                return Err(format!("edge {e} has color {c} outside palette"));
            }
            for x in [u, v] {
                if self.occupied.get(x, c) != Some(e) {
                    return Err(format!("occupied({x}, {c}) does not point at edge {e}"));
                }
            }
        }
        if expect_live != self.live {
            return Err(format!("live = {}, expected {expect_live}", self.live));
        }
        for v in 0..g.vertex_count() {
            let incident_colored = g.incident(v).iter().filter(|&&(_, e)| self.is_colored(e)).count();
            let entries: Vec<_> = self.occupied.entries(v).collect();
            if entries.len() != incident_colored {
                return Err(format!(
                    "vertex {v}: {} table entries for {incident_colored} colored edges",
                    entries.len()
                ));
            }
            for (c, e) in entries {
                if self.color[e] != c {
                    return Err(format!("vertex {v}: stale entry ({c}, {e})"));
                }
            }
            let mut listed = self.free_list(v).to_vec();
            listed.sort_unstable();
            let expected: Vec<Color> = (1..=(g.degree(v) as Color + 1).min(self.palette))
                .filter(|&c| self.occupied.get(v, c).is_none())
                .collect();
            if listed != expected {
                return Err(format!("vertex {v}: free list {listed:?}, expected {expected:?}"));
            }
            let base = self.free_base(v);
            for (i, &c) in self.free_list(v).iter().enumerate() {
                if self.free_pos[base + c as usize - 1] != i as u32 {
                    return Err(format!("vertex {v}: free position of {c} is stale"));
                }
            }
            if g.degree(v) > 0 && listed.is_empty() {
                return Err(format!("vertex {v}: empty free list"));
            }
        }
        Ok(())
    }
}

/// Two colorings are equal when they color the same graph with the same
/// palette and agree on every edge. The internal orderings of the free
/// lists and the uncolored array are not part of the observable state.
impl PartialEq for PartialColoring<'_> {
    fn eq(&self, other: &Self) -> bool {
        (std::ptr::eq(self.graph, other.graph) || self.graph == other.graph)
            && self.palette == other.palette
            && self.color == other.color
    }
}

impl Eq for PartialColoring<'_> {}
