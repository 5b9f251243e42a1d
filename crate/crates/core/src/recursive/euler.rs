//! Splitting a graph's edges into two halves with balanced vertex degrees.
//!
//! The edges are decomposed greedily into edge-disjoint trails. Trails that
//! start at odd-degree vertices are removed first; each of them ends at a
//! different odd-degree vertex, so every odd vertex ends exactly one open
//! trail. What remains has only even degrees and falls apart into closed
//! trails. Edges are assigned alternately along each trail, so every pass
//! through a vertex contributes one edge to each side. The only surplus is
//! one edge at each end of an open trail, and two edges at one chosen
//! vertex of each odd-length closed trail. That vertex and the side its two
//! extra edges go to are picked to cancel the vertex's existing surplus, so
//! in the end `|d_left(v) - d_right(v)| <= 2` for every `v`.

use crate::graph::{EdgeId, Graph, VertexId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    fn from_parity(p: usize) -> Side {
        if p % 2 == 0 {
            Side::Left
        } else {
            Side::Right
        }
    }
}

#[derive(Debug, Clone)]
pub struct EulerSplit {
    pub left: Graph,
    pub right: Graph,
    /// For every parent edge, its side and its id in that side's graph.
    pub edge_map: Vec<(Side, EdgeId)>,
    /// Child vertex id → parent vertex id, per side. Children keep only the
    /// vertices they have edges at.
    pub left_vertices: Vec<VertexId>,
    pub right_vertices: Vec<VertexId>,
}

impl EulerSplit {
    pub fn child(&self, side: Side) -> &Graph {
        match side {
            Side::Left => &self.left,
            Side::Right => &self.right,
        }
    }

    pub fn child_vertices(&self, side: Side) -> &[VertexId] {
        match side {
            Side::Left => &self.left_vertices,
            Side::Right => &self.right_vertices,
        }
    }
}

struct TrailWalker<'a> {
    g: &'a Graph,
    cursor: Vec<usize>,
    remaining: Vec<usize>,
    used: Vec<bool>,
}

impl<'a> TrailWalker<'a> {
    fn new(g: &'a Graph) -> Self {
        let n = g.vertex_count();
        TrailWalker {
            g,
            cursor: vec![0; n],
            remaining: (0..n).map(|v| g.degree(v)).collect(),
            used: vec![false; g.edge_count()],
        }
    }

    /// Walks unused edges from `start` until stuck. Fills the visited
    /// vertices (one more than edges) and the edges.
    fn walk(&mut self, start: VertexId, vertices: &mut Vec<VertexId>, edges: &mut Vec<EdgeId>) {
        vertices.clear();
        edges.clear();
        vertices.push(start);
        let mut cur = start;
        loop {
            let inc = self.g.incident(cur);
            let mut i = self.cursor[cur];
            while i < inc.len() && self.used[inc[i].1] {
                i += 1;
            }
            self.cursor[cur] = i;
            if i == inc.len() {
                break;
            }
            let (next, e) = inc[i];
            self.used[e] = true;
            self.remaining[cur] -= 1;
            self.remaining[next] -= 1;
            edges.push(e);
            vertices.push(next);
            cur = next;
        }
    }
}

pub fn euler_partition(g: &Graph) -> EulerSplit {
    let n = g.vertex_count();
    let m = g.edge_count();
    let mut side = vec![Side::Left; m];
    // d_left(v) - d_right(v) so far.
    let mut surplus = vec![0i64; n];
    let mut walker = TrailWalker::new(g);
    let mut vertices = Vec::new();
    let mut edges = Vec::new();

    let assign = |e: EdgeId, s: Side, side: &mut Vec<Side>, surplus: &mut Vec<i64>| {
        side[e] = s;
        let (u, v) = g.endpoints(e);
        let delta = if s == Side::Left { 1 } else { -1 };
        surplus[u] += delta;
        surplus[v] += delta;
    };

    for v in 0..n {
        if walker.remaining[v] % 2 == 1 {
            walker.walk(v, &mut vertices, &mut edges);
            debug_assert!(vertices.last() != Some(&v));
            for (i, &e) in edges.iter().enumerate() {
                assign(e, Side::from_parity(i), &mut side, &mut surplus);
            }
        }
    }

    for v in 0..n {
        while walker.remaining[v] > 0 {
            walker.walk(v, &mut vertices, &mut edges);
            debug_assert_eq!(vertices.last(), Some(&v));
            let len = edges.len();
            if len % 2 == 0 {
                for (i, &e) in edges.iter().enumerate() {
                    assign(e, Side::from_parity(i), &mut side, &mut surplus);
                }
                continue;
            }
            // Odd closed trail: the seam vertex receives two edges on one side.
            // Position p sits between edges p-1 and p (cyclically).
            let seam = (0..len)
                .max_by_key(|&p| (surplus[vertices[p]].abs(), std::cmp::Reverse(p)))
                .unwrap();
            let first = if surplus[vertices[seam]] > 0 { 1 } else { 0 };
            for k in 0..len {
                let e = edges[(seam + k) % len];
                assign(e, Side::from_parity(first + k), &mut side, &mut surplus);
            }
        }
    }

    materialize(g, &side)
}

fn materialize(g: &Graph, side: &[Side]) -> EulerSplit {
    let n = g.vertex_count();
    let mut local = [vec![usize::MAX; n], vec![usize::MAX; n]];
    let mut vertex_lists: [Vec<VertexId>; 2] = [Vec::new(), Vec::new()];
    let mut edge_lists: [Vec<(VertexId, VertexId)>; 2] = [Vec::new(), Vec::new()];
    let mut edge_map = Vec::with_capacity(g.edge_count());
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        let s = side[e] as usize;
        let mut id = |x: VertexId| {
            if local[s][x] == usize::MAX {
                local[s][x] = vertex_lists[s].len();
                vertex_lists[s].push(x);
            }
            local[s][x]
        };
        let (a, b) = (id(u), id(v));
        edge_map.push((side[e], edge_lists[s].len()));
        edge_lists[s].push((a, b));
    }
    let [left_edges, right_edges] = edge_lists;
    let [left_vertices, right_vertices] = vertex_lists;
    EulerSplit {
        left: Graph::from_simple_edges(left_vertices.len(), left_edges),
        right: Graph::from_simple_edges(right_vertices.len(), right_edges),
        edge_map,
        left_vertices,
        right_vertices,
    }
}

/// Degree of every parent vertex on each side, recomputed from the split.
pub fn side_degrees(g: &Graph, split: &EulerSplit) -> (Vec<usize>, Vec<usize>) {
    let n = g.vertex_count();
    let mut d = [vec![0; n], vec![0; n]];
    for (s, verts) in [(0, &split.left_vertices), (1, &split.right_vertices)] {
        let child = if s == 0 { &split.left } else { &split.right };
        for (local, &orig) in verts.iter().enumerate() {
            d[s][orig] = child.degree(local);
        }
    }
    let [l, r] = d;
    (l, r)
}

/// Whether `d/2 - 1 <= d_side(v) <= d/2 + 1` for every vertex and side.
pub fn is_balanced(g: &Graph, split: &EulerSplit) -> bool {
    let (l, r) = side_degrees(g, split);
    (0..g.vertex_count()).all(|v| {
        let d = g.degree(v) as i64;
        [l[v], r[v]]
            .iter()
            .all(|&x| 2 * x as i64 >= d - 2 && 2 * x as i64 <= d + 2)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::new(n, &edges).unwrap()
    }

    #[test]
    fn even_cycle_splits_into_matchings() {
        let g = cycle(4);
        let split = euler_partition(&g);
        let (l, r) = side_degrees(&g, &split);
        assert!(l.iter().chain(r.iter()).all(|&d| d == 1));
        assert_eq!(split.left.edge_count(), 2);
    }

    #[test]
    fn triangle_splits_two_one() {
        let g = cycle(3);
        let split = euler_partition(&g);
        let mut sizes = [split.left.edge_count(), split.right.edge_count()];
        sizes.sort();
        assert_eq!(sizes, [1, 2]);
        assert!(is_balanced(&g, &split));
    }

    #[test]
    fn edge_map_is_a_partition() {
        let g = Graph::new(5, &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (3, 4)]).unwrap();
        let split = euler_partition(&g);
        assert_eq!(split.left.edge_count() + split.right.edge_count(), g.edge_count());
        let mut seen = std::collections::HashSet::new();
        for (e, &(s, ce)) in split.edge_map.iter().enumerate() {
            assert!(seen.insert((s, ce)));
            let child = split.child(s);
            let verts = split.child_vertices(s);
            let (a, b) = child.endpoints(ce);
            let mut got = [verts[a], verts[b]];
            got.sort();
            let (u, v) = g.endpoints(e);
            assert_eq!(got, [u.min(v), u.max(v)]);
        }
        assert!(is_balanced(&g, &split));
    }

    #[test]
    fn bowtie_of_odd_cycles_stays_balanced() {
        // Three triangles sharing vertex 0: every closed trail through 0 is odd.
        let g = Graph::new(
            7,
            &[(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0), (0, 5), (5, 6), (6, 0)],
        )
        .unwrap();
        let split = euler_partition(&g);
        assert!(is_balanced(&g, &split));
    }
}
