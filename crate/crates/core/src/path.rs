//! Maximal two-color alternating paths and path flipping.

use crate::coloring::{Color, PartialColoring};
use crate::graph::{EdgeId, VertexId};
use crate::FanPathError;

/// A maximal alternating path `v_0, ..., v_|P|` starting at a vertex where
/// `missing` is free. The first edge is colored `first`, the second
/// `missing`, and so on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlternatingPath {
    pub vertices: Vec<VertexId>,
    pub edges: Vec<EdgeId>,
    /// c0, missing at the start vertex.
    pub missing: Color,
    /// c1, the color of the first edge.
    pub first: Color,
}

impl AlternatingPath {
    /// |P|, the number of edges.
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn start(&self) -> VertexId {
        self.vertices[0]
    }

    pub fn end(&self) -> VertexId {
        *self.vertices.last().unwrap()
    }

    /// |I(P)|: edges with neither endpoint at an end of the path.
    pub fn internal_count(&self) -> usize {
        self.len().saturating_sub(2)
    }

    /// Color carried by the `i`-th edge before any flip.
    pub fn color_at(&self, i: usize) -> Color {
        if i % 2 == 0 {
            self.first
        } else {
            self.missing
        }
    }
}

/// Walks the maximal `(missing, first)`-alternating path from `u`, taking an
/// edge colored `first` out of `u`. Empty when `first` is missing at `u`.
/// O(|P|).
///
/// # Panics
///
/// If the walk comes back to `u`, which only happens when `missing` is in
/// fact occupied at `u` or the coloring is not proper.
pub fn maximal_alternating_path(
    chi: &PartialColoring<'_>,
    u: VertexId,
    missing: Color,
    first: Color,
) -> AlternatingPath {
    let g = chi.graph();
    let mut path = AlternatingPath {
        vertices: vec![u],
        edges: Vec::new(),
        missing,
        first,
    };
    if missing == first {
        return path;
    }
    let mut cur = u;
    let mut want = first;
    while let Some(e) = chi.edge_with_color(cur, want) {
        let next = g.other_endpoint(e, cur);
        assert!(
            next != u && path.edges.len() < g.vertex_count(),
            "alternating walk from {u} with colors ({missing}, {first}) is not a simple path"
        );
        path.edges.push(e);
        path.vertices.push(next);
        cur = next;
        want = if want == first { missing } else { first };
    }
    path
}

/// Exchanges the two colors along `path`. Applying it twice restores the
/// coloring.
pub fn flip_path(chi: &mut PartialColoring<'_>, path: &AlternatingPath) -> Result<(), FanPathError> {
    if path.is_empty() {
        return Ok(());
    }
    let (a, b) = (path.missing, path.first);
    for &end in [path.start(), path.end()].iter() {
        if chi.edge_with_color(end, a).is_some() && chi.edge_with_color(end, b).is_some() {
            return Err(FanPathError::NotMaximal { vertex: end });
        }
    }
    let g = chi.graph();
    let start_color = chi.color(path.edges[0]);
    if start_color != a && start_color != b {
        return Err(FanPathError::PathMismatch { edge: path.edges[0] });
    }
    for (i, &e) in path.edges.iter().enumerate() {
        let expected = if i % 2 == 0 {
            start_color
        } else if start_color == a {
            b
        } else {
            a
        };
        let (x, y) = g.endpoints(e);
        let joins = (x == path.vertices[i] && y == path.vertices[i + 1])
            || (y == path.vertices[i] && x == path.vertices[i + 1]);
        if chi.color(e) != expected || !joins {
            return Err(FanPathError::PathMismatch { edge: e });
        }
    }
    for &e in &path.edges {
        chi.unassign_unchecked(e);
    }
    for (i, &e) in path.edges.iter().enumerate() {
        let swapped = if (i % 2 == 0) == (start_color == a) { b } else { a };
        chi.assign(e, swapped)?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn colored_path() -> (Graph, Vec<(usize, u32)>) {
        (Graph::new(3, &[(0, 1), (1, 2)]).unwrap(), vec![(0, 1), (1, 2)])
    }

    #[test]
    fn empty_when_first_missing() {
        let (g, _) = colored_path();
        let chi = PartialColoring::new_empty(&g, 3).unwrap();
        let p = maximal_alternating_path(&chi, 0, 3, 1);
        assert!(p.is_empty());
        assert_eq!(p.vertices, vec![0]);
    }

    #[test]
    fn forced_walk() {
        let (g, colors) = colored_path();
        let mut chi = PartialColoring::new_empty(&g, 3).unwrap();
        for (e, c) in colors {
            chi.assign(e, c).unwrap();
        }
        let p = maximal_alternating_path(&chi, 0, 3, 1);
        assert_eq!(p.vertices, vec![0, 1]);
        let p = maximal_alternating_path(&chi, 0, 2, 1);
        assert_eq!(p.vertices, vec![0, 1, 2]);
        assert_eq!(p.edges, vec![0, 1]);
        assert!(p.len() <= p.internal_count() + 2);
    }

    #[test]
    fn flip_and_involution() {
        let (g, colors) = colored_path();
        let mut chi = PartialColoring::new_empty(&g, 3).unwrap();
        for (e, c) in colors {
            chi.assign(e, c).unwrap();
        }
        let original = chi.clone();
        let p = maximal_alternating_path(&chi, 0, 2, 1);
        flip_path(&mut chi, &p).unwrap();
        assert_eq!(chi.color(0), 2);
        assert_eq!(chi.color(1), 1);
        chi.audit().unwrap();
        flip_path(&mut chi, &p).unwrap();
        assert_eq!(chi, original);
    }

    #[test]
    fn flip_empty_is_noop() {
        let (g, _) = colored_path();
        let mut chi = PartialColoring::new_empty(&g, 3).unwrap();
        let before = chi.clone();
        let p = maximal_alternating_path(&chi, 0, 3, 1);
        flip_path(&mut chi, &p).unwrap();
        assert_eq!(chi, before);
    }

    #[test]
    fn flip_rejects_non_maximal() {
        // Path 0-1-2-3 colored 1,2,1; take only the prefix [0,1,2].
        let g = Graph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let mut chi = PartialColoring::new_empty(&g, 3).unwrap();
        chi.assign(0, 1).unwrap();
        chi.assign(1, 2).unwrap();
        chi.assign(2, 1).unwrap();
        let prefix = AlternatingPath {
            vertices: vec![0, 1, 2],
            edges: vec![0, 1],
            missing: 2,
            first: 1,
        };
        assert_eq!(
            flip_path(&mut chi, &prefix),
            Err(FanPathError::NotMaximal { vertex: 2 })
        );
    }
}
