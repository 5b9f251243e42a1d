//! Per-vertex map from occupied color to the incident edge holding it.
//!
//! Every vertex owns a contiguous region of one shared slot buffer. A
//! vertex whose degree is at least half the palette gets a directly
//! indexed region of `palette` slots; any other vertex gets a linear-probing
//! hash region of `2^b >= 2 (d(v) + 1)` slots. Both are O(d(v)) in size.

use super::{Color, UNCOLORED};
use crate::graph::{EdgeId, Graph};

const EMPTY: Slot = Slot {
    color: UNCOLORED,
    edge: usize::MAX,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Slot {
    color: Color,
    edge: EdgeId,
}

#[derive(Debug, Clone)]
pub(crate) struct OccupiedTables {
    offsets: Vec<usize>,
    /// 0 for direct regions, otherwise log2 of the region size.
    hash_bits: Vec<u8>,
    slots: Vec<Slot>,
}

#[inline]
fn home(color: Color, bits: u8) -> usize {
    (u64::from(color).wrapping_mul(0x9E37_79B9_7F4A_7C15) >> (64 - u32::from(bits))) as usize
}

impl OccupiedTables {
    pub(crate) fn new(g: &Graph, palette: Color) -> Self {
        let n = g.vertex_count();
        let mut offsets = Vec::with_capacity(n + 1);
        let mut hash_bits = Vec::with_capacity(n);
        offsets.push(0);
        let mut total = 0usize;
        for v in 0..n {
            let d = g.degree(v);
            let len = if (palette as usize) <= 2 * (d + 1) {
                hash_bits.push(0);
                palette as usize
            } else {
                let len = (2 * (d + 1)).next_power_of_two().max(2);
                hash_bits.push(len.trailing_zeros() as u8);
                len
            };
            total += len;
            offsets.push(total);
        }
        OccupiedTables {
            offsets,
            hash_bits,
            slots: vec![EMPTY; total],
        }
    }

    #[inline]
    pub(crate) fn get(&self, v: usize, color: Color) -> Option<EdgeId> {
        let base = self.offsets[v];
        let bits = self.hash_bits[v];
        if bits == 0 {
            let s = self.slots[base + color as usize - 1];
            return (s.color != UNCOLORED).then_some(s.edge);
        }
        let mask = (1usize << bits) - 1;
        let mut i = home(color, bits);
        loop {
            let s = self.slots[base + i];
            if s.color == color {
                return Some(s.edge);
            }
            if s.color == UNCOLORED {
                return None;
            }
            i = (i + 1) & mask;
        }
    }

    /// Caller guarantees `color` is not already present at `v`.
    #[inline]
    pub(crate) fn insert(&mut self, v: usize, color: Color, edge: EdgeId) {
        let base = self.offsets[v];
        let bits = self.hash_bits[v];
        if bits == 0 {
            self.slots[base + color as usize - 1] = Slot { color, edge };
            return;
        }
        let mask = (1usize << bits) - 1;
        let mut i = home(color, bits);
        while self.slots[base + i].color != UNCOLORED {
            debug_assert_ne!(self.slots[base + i].color, color);
            i = (i + 1) & mask;
        }
        self.slots[base + i] = Slot { color, edge };
    }

    /// Caller guarantees `color` is present at `v`.
    #[inline]
    pub(crate) fn remove(&mut self, v: usize, color: Color) {
        let base = self.offsets[v];
        let bits = self.hash_bits[v];
        if bits == 0 {
            self.slots[base + color as usize - 1] = EMPTY;
            return;
        }
        let mask = (1usize << bits) - 1;
        let mut i = home(color, bits);
        while self.slots[base + i].color != color {
            debug_assert_ne!(self.slots[base + i].color, UNCOLORED);
            i = (i + 1) & mask;
        }
        // Backward-shift deletion keeps every probe chain free of holes.
        let mut hole = i;
        let mut j = (i + 1) & mask;
        loop {
            let s = self.slots[base + j];
            if s.color == UNCOLORED {
                break;
            }
            let h = home(s.color, bits);
            let dist_h = j.wrapping_sub(h) & mask;
            let dist_hole = j.wrapping_sub(hole) & mask;
            if dist_h >= dist_hole {
                self.slots[base + hole] = s;
                hole = j;
            }
            j = (j + 1) & mask;
        }
        self.slots[base + hole] = EMPTY;
    }

    /// All `(color, edge)` entries at `v`, in slot order.
    pub(crate) fn entries(&self, v: usize) -> impl Iterator<Item = (Color, EdgeId)> + '_ {
        self.slots[self.offsets[v]..self.offsets[v + 1]]
            .iter()
            .filter(|s| s.color != UNCOLORED)
            .map(|s| (s.color, s.edge))
    }
}
