//! Ground-truth UPSE checker.

use thiserror::Error;

use crate::digraph::Digraph;
use crate::geometry::{on_open_segment, segments_cross, PointSet};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EmbeddingError {
    #[error("mapping has {got} entries but the graph has {want} vertices")]
    LengthMismatch { got: usize, want: usize },
    #[error("vertex {vertex} is mapped to point {point}, but there are only {len} points")]
    OutOfRange { vertex: usize, point: usize, len: usize },
    #[error("point {0} is used by more than one vertex")]
    NotInjective(usize),
}

/// An injective assignment of vertices (by index) to point indices.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Embedding {
    mapping: Vec<usize>,
}

impl Embedding {
    /// Validates injectivity and that every image is a point of a set of size `points`.
    pub fn new(mapping: Vec<usize>, points: usize) -> Result<Self, EmbeddingError> {
        let mut used = vec![false; points];
        for (vertex, &point) in mapping.iter().enumerate() {
            if point >= points {
                return Err(EmbeddingError::OutOfRange { vertex, point, len: points });
            }
            if std::mem::replace(&mut used[point], true) {
                return Err(EmbeddingError::NotInjective(point));
            }
        }
        Ok(Embedding { mapping })
    }

    /// Like [`Embedding::new`], also checking the mapping covers every vertex of `g`.
    pub fn for_graph(g: &Digraph, s: &PointSet, mapping: Vec<usize>) -> Result<Self, EmbeddingError> {
        if mapping.len() != g.n() {
            return Err(EmbeddingError::LengthMismatch { got: mapping.len(), want: g.n() });
        }
        Embedding::new(mapping, s.len())
    }

    pub(crate) fn from_raw(mapping: Vec<usize>) -> Self {
        Embedding { mapping }
    }

    pub fn mapping(&self) -> &[usize] {
        &self.mapping
    }

    pub fn into_mapping(self) -> Vec<usize> {
        self.mapping
    }

    pub fn point_of(&self, v: usize) -> usize {
        self.mapping[v]
    }

    pub fn len(&self) -> usize {
        self.mapping.len()
    }

    pub fn is_empty(&self) -> bool {
        self.mapping.is_empty()
    }
}

fn covers(g: &Digraph, s: &PointSet, e: &Embedding) -> bool {
    e.len() == g.n() && e.mapping.iter().all(|&p| p < s.len())
}

/// Every edge `u -> v` goes strictly up.
pub fn is_upward(g: &Digraph, s: &PointSet, e: &Embedding) -> bool {
    covers(g, s, e) && g.edges().iter().all(|&(u, v)| s.get(e.point_of(u)).y < s.get(e.point_of(v)).y)
}

/// No two edge segments cross and no vertex lies inside a non-incident edge.
pub fn is_planar_drawing(g: &Digraph, s: &PointSet, e: &Embedding) -> bool {
    if !covers(g, s, e) {
        return false;
    }
    let pt = |v: usize| s.get(e.point_of(v));
    let edges = g.edges();
    for (i, &(a, b)) in edges.iter().enumerate() {
        for &(c, d) in &edges[i + 1..] {
            if segments_cross(pt(a), pt(b), pt(c), pt(d)) {
                return false;
            }
        }
        for v in 0..g.n() {
            if v != a && v != b && on_open_segment(pt(v), pt(a), pt(b)) {
                return false;
            }
        }
    }
    true
}

/// Upward and planar.
pub fn is_upse(g: &Digraph, s: &PointSet, e: &Embedding) -> bool {
    is_upward(g, s, e) && is_planar_drawing(g, s, e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::OrientedPath;
    use crate::geometry::{generate_point_set, sort_by_y, PointSetKind};

    #[test]
    fn upwardness() {
        let g = OrientedPath::from_signs("+").unwrap().to_digraph();
        let s = PointSet::from_ints(&[(0, 0), (1, 5)]);
        assert!(is_upward(&g, &s, &Embedding::new(vec![0, 1], 2).unwrap()));
        assert!(!is_upward(&g, &s, &Embedding::new(vec![1, 0], 2).unwrap()));
    }

    #[test]
    fn monotone_path_on_sorted_points() {
        let s = generate_point_set(PointSetKind::General, 9, 4);
        let g = OrientedPath::from_signs("++++++++").unwrap().to_digraph();
        let e = Embedding::new(sort_by_y(&s).unwrap(), 9).unwrap();
        assert!(is_upse(&g, &s, &e));
    }

    #[test]
    fn crossing_path_detected() {
        // v0 -> v1 <- v2 -> v3 with first and last segments forming an X
        let g = OrientedPath::from_signs("+-+").unwrap().to_digraph();
        let s = PointSet::from_ints(&[(0, 0), (4, 4), (1, 5), (3, 1)]);
        let e = Embedding::new(vec![0, 1, 3, 2], 4).unwrap();
        assert!(is_upward(&g, &s, &e));
        assert!(segments_cross(s.get(0), s.get(1), s.get(3), s.get(2)));
        assert!(!is_planar_drawing(&g, &s, &e));
    }

    #[test]
    fn two_edge_path_always_planar() {
        let g = OrientedPath::from_signs("+-").unwrap().to_digraph();
        let s = PointSet::from_ints(&[(0, 0), (2, 1), (1, 3)]);
        for m in [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]] {
            assert!(is_planar_drawing(&g, &s, &Embedding::new(m.to_vec(), 3).unwrap()));
        }
    }

    #[test]
    fn star_from_below() {
        let g = Digraph::new(4, vec![(0, 1), (0, 2), (0, 3)]).unwrap();
        let s = PointSet::from_ints(&[(0, 0), (-3, 2), (1, 3), (4, 1)]);
        assert!(is_upse(&g, &s, &Embedding::new(vec![0, 1, 2, 3], 4).unwrap()));
    }

    #[test]
    fn vertex_on_edge_is_not_planar() {
        // isolated vertex 2 sits in the middle of edge 0 -> 1
        let g = Digraph::new(3, vec![(0, 1)]).unwrap();
        let s = PointSet::from_ints(&[(0, 0), (2, 2), (1, 1)]);
        assert!(!is_planar_drawing(&g, &s, &Embedding::new(vec![0, 1, 2], 3).unwrap()));
    }

    #[test]
    fn embedding_construction_checks() {
        assert_eq!(Embedding::new(vec![0, 0], 2), Err(EmbeddingError::NotInjective(0)));
        assert!(matches!(Embedding::new(vec![0, 5], 2), Err(EmbeddingError::OutOfRange { .. })));
        let g = OrientedPath::from_signs("+").unwrap().to_digraph();
        let s = PointSet::from_ints(&[(0, 0), (1, 1), (2, 3)]);
        assert!(matches!(Embedding::for_graph(&g, &s, vec![0]), Err(EmbeddingError::LengthMismatch { .. })));
        assert!(Embedding::for_graph(&g, &s, vec![0, 2]).is_ok());
    }
}
