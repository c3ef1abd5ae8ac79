//! Enumerate, count and decide UPSEs by pruned backtracking.
//!
//! Vertices are placed in DFS order so every new vertex is adjacent to an
//! already placed one. A partial placement is extended only while all placed
//! edges are upward and crossing-free, so completed placements need no
//! further checks. The first vertex's candidates are explored in parallel and
//! results are sorted, making the output independent of scheduling.

use std::ops::ControlFlow;

use rayon::prelude::*;

use crate::digraph::Digraph;
use crate::geometry::{on_open_segment, orientation, segments_cross, PointSet};
use crate::verify::Embedding;

const NONE: usize = usize::MAX;
/// Largest point set for which the full orientation table is cached.
const TABLE_LIMIT: usize = 160;

/// Precomputed predicates for one point set, reusable across graphs.
pub struct Enumerator<'a> {
    points: &'a PointSet,
    /// Dense y-rank; equal y gives equal rank.
    y_rank: Vec<usize>,
    orient: Option<Vec<i8>>,
}

impl<'a> Enumerator<'a> {
    pub fn new(points: &'a PointSet) -> Self {
        let n = points.len();
        let mut idx: Vec<usize> = (0..n).collect();
        idx.sort_by(|&i, &j| points.get(i).y.cmp(&points.get(j).y));
        let mut y_rank = vec![0; n];
        for w in 1..n {
            let same = points.get(idx[w]).y == points.get(idx[w - 1]).y;
            y_rank[idx[w]] = y_rank[idx[w - 1]] + usize::from(!same);
        }
        let orient = (n <= TABLE_LIMIT).then(|| {
            let mut t = vec![0i8; n * n * n];
            for i in 0..n {
                for j in 0..n {
                    for k in 0..n {
                        if i < j && j < k {
                            let o = orientation(points.get(i), points.get(j), points.get(k)).as_i8();
                            // the sign is alternating in the argument order
                            for (a, b, c, s) in
                                [(i, j, k, o), (j, k, i, o), (k, i, j, o), (j, i, k, -o), (i, k, j, -o), (k, j, i, -o)]
                            {
                                t[(a * n + b) * n + c] = s;
                            }
                        }
                    }
                }
            }
            t
        });
        Enumerator { points, y_rank, orient }
    }

    pub fn points(&self) -> &PointSet {
        self.points
    }

    fn orient(&self, i: usize, j: usize, k: usize) -> i8 {
        match &self.orient {
            Some(t) => {
                let n = self.points.len();
                t[(i * n + j) * n + k]
            }
            None => orientation(self.points.get(i), self.points.get(j), self.points.get(k)).as_i8(),
        }
    }

    fn cross(&self, a: usize, b: usize, c: usize, d: usize) -> bool {
        if a != c && a != d && b != c && b != d {
            let (o1, o2) = (self.orient(a, b, c), self.orient(a, b, d));
            let (o3, o4) = (self.orient(c, d, a), self.orient(c, d, b));
            if o1 != 0 && o2 != 0 && o3 != 0 && o4 != 0 {
                return o1 != o2 && o3 != o4;
            }
        } else {
            // shared endpoint: only collinear overlap can cross
            let (shared, x, y) = if a == c {
                (a, b, d)
            } else if a == d {
                (a, b, c)
            } else if b == c {
                (b, a, d)
            } else {
                (b, a, c)
            };
            if x != y && self.orient(shared, x, y) != 0 {
                return false;
            }
        }
        let p = |i| self.points.get(i);
        segments_cross(p(a), p(b), p(c), p(d))
    }

    fn inside(&self, w: usize, a: usize, b: usize) -> bool {
        self.orient(a, b, w) == 0 && on_open_segment(self.points.get(w), self.points.get(a), self.points.get(b))
    }

    /// All UPSEs of `g` respecting `pins`, sorted lexicographically by mapping.
    pub fn enumerate(&self, g: &Digraph, pins: &[(usize, usize)]) -> Vec<Embedding> {
        let Some(plan) = Plan::new(self, g, pins) else {
            return Vec::new();
        };
        let mut all: Vec<Vec<usize>> = plan
            .roots()
            .into_par_iter()
            .flat_map_iter(|root| {
                let mut out = Vec::new();
                let mut st = plan.state();
                let _ = plan.place_root(&mut st, root, &mut |m: &[usize]| {
                    out.push(m.to_vec());
                    ControlFlow::Continue(())
                });
                out
            })
            .collect();
        all.sort_unstable();
        all.into_iter().map(Embedding::from_raw).collect()
    }

    /// Number of UPSEs respecting `pins`, without materialising them.
    pub fn count(&self, g: &Digraph, pins: &[(usize, usize)]) -> u64 {
        let Some(plan) = Plan::new(self, g, pins) else {
            return 0;
        };
        plan.roots()
            .into_par_iter()
            .map(|root| {
                let mut n = 0u64;
                let mut st = plan.state();
                let _ = plan.place_root(&mut st, root, &mut |_: &[usize]| {
                    n += 1;
                    ControlFlow::Continue(())
                });
                n
            })
            .sum()
    }

    /// The lexicographically first UPSE respecting `pins`, if any.
    pub fn first(&self, g: &Digraph, pins: &[(usize, usize)]) -> Option<Embedding> {
        let plan = Plan::new(self, g, pins)?;
        for root in plan.roots() {
            let mut found = None;
            let mut st = plan.state();
            let _ = plan.place_root(&mut st, root, &mut |m: &[usize]| {
                found = Some(m.to_vec());
                ControlFlow::Break(())
            });
            if let Some(m) = found {
                return Some(Embedding::from_raw(m));
            }
        }
        None
    }
}

struct Plan<'e, 'a> {
    en: &'e Enumerator<'a>,
    /// Placement order; each vertex after a component root has a placed neighbour.
    order: Vec<usize>,
    /// For `order[i]`, the edges to earlier vertices as `(other, outgoing)`.
    back_edges: Vec<Vec<(usize, bool)>>,
    pin_of: Vec<usize>,
    reserved: Vec<bool>,
}

struct State {
    mapping: Vec<usize>,
    used: Vec<bool>,
    /// Placed edges as point pairs.
    segs: Vec<(usize, usize)>,
    placed_points: Vec<usize>,
}

impl<'e, 'a> Plan<'e, 'a> {
    fn new(en: &'e Enumerator<'a>, g: &Digraph, pins: &[(usize, usize)]) -> Option<Self> {
        let (n, npts) = (g.n(), en.points.len());
        if n > npts {
            return None;
        }
        let mut pin_of = vec![NONE; n];
        let mut reserved = vec![false; npts];
        for &(v, p) in pins {
            if v >= n || p >= npts {
                return None;
            }
            if pin_of[v] != NONE && pin_of[v] != p {
                return None;
            }
            if reserved[p] && pin_of[v] != p {
                return None;
            }
            pin_of[v] = p;
            reserved[p] = true;
        }
        let adj = g.adjacency();
        let mut seen = vec![false; n];
        let mut order = Vec::with_capacity(n);
        let mut starts: Vec<usize> = (0..n).filter(|&v| pin_of[v] != NONE).collect();
        starts.extend(0..n);
        for s in starts {
            if seen[s] {
                continue;
            }
            let mut stack = vec![s];
            seen[s] = true;
            while let Some(v) = stack.pop() {
                order.push(v);
                for &w in adj[v].iter().rev() {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
        }
        let mut pos = vec![NONE; n];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let mut back_edges = vec![Vec::new(); n];
        for &(u, v) in g.edges() {
            if pos[u] < pos[v] {
                back_edges[pos[v]].push((u, false));
            } else {
                back_edges[pos[u]].push((v, true));
            }
        }
        Some(Plan { en, order, back_edges, pin_of, reserved })
    }

    fn state(&self) -> State {
        State {
            mapping: vec![NONE; self.pin_of.len()],
            used: vec![false; self.en.points.len()],
            segs: Vec::new(),
            placed_points: Vec::new(),
        }
    }

    fn candidates(&self, st: &State, v: usize) -> Vec<usize> {
        if self.pin_of[v] != NONE {
            let p = self.pin_of[v];
            return if st.used[p] { vec![] } else { vec![p] };
        }
        (0..self.en.points.len()).filter(|&p| !st.used[p] && !self.reserved[p]).collect()
    }

    fn roots(&self) -> Vec<usize> {
        if self.order.is_empty() {
            // the empty graph has exactly one (empty) embedding
            return vec![NONE];
        }
        self.candidates(&self.state(), self.order[0])
    }

    fn place_root<F>(&self, st: &mut State, root: usize, visit: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&[usize]) -> ControlFlow<()>,
    {
        if root == NONE {
            return visit(&st.mapping);
        }
        self.try_place(st, 0, root, visit)
    }

    fn extend<F>(&self, st: &mut State, depth: usize, visit: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&[usize]) -> ControlFlow<()>,
    {
        if depth == self.order.len() {
            return visit(&st.mapping);
        }
        for p in self.candidates(st, self.order[depth]) {
            self.try_place(st, depth, p, visit)?;
        }
        ControlFlow::Continue(())
    }

    fn try_place<F>(&self, st: &mut State, depth: usize, p: usize, visit: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&[usize]) -> ControlFlow<()>,
    {
        let en = self.en;
        let v = self.order[depth];
        let back = &self.back_edges[depth];
        for &(u, outgoing) in back {
            let q = st.mapping[u];
            let ok = if outgoing { en.y_rank[p] < en.y_rank[q] } else { en.y_rank[q] < en.y_rank[p] };
            if !ok {
                return ControlFlow::Continue(());
            }
        }
        // new point inside an existing edge
        if st.segs.iter().any(|&(a, b)| en.inside(p, a, b)) {
            return ControlFlow::Continue(());
        }
        for (i, &(u, _)) in back.iter().enumerate() {
            let q = st.mapping[u];
            if st.segs.iter().any(|&(a, b)| en.cross(p, q, a, b))
                || st.placed_points.iter().any(|&w| w != q && en.inside(w, p, q))
                || back[..i].iter().any(|&(u2, _)| en.cross(p, q, p, st.mapping[u2]))
            {
                return ControlFlow::Continue(());
            }
        }

        st.mapping[v] = p;
        st.used[p] = true;
        st.placed_points.push(p);
        let seg_mark = st.segs.len();
        st.segs.extend(back.iter().map(|&(u, _)| (p, st.mapping[u])));
        let flow = self.extend(st, depth + 1, visit);
        st.segs.truncate(seg_mark);
        st.placed_points.pop();
        st.used[p] = false;
        st.mapping[v] = NONE;
        flow
    }
}

/// All UPSEs of `g` on `s` respecting `pins`, in lexicographic mapping order.
pub fn enumerate_upse(g: &Digraph, s: &PointSet, pins: &[(usize, usize)]) -> Vec<Embedding> {
    Enumerator::new(s).enumerate(g, pins)
}

pub fn count_upse(g: &Digraph, s: &PointSet) -> u64 {
    Enumerator::new(s).count(g, &[])
}

/// Does `t` have a UPSE on `s` mapping vertex `v` to point `p`?
pub fn decide_fixed_vertex(t: &Digraph, s: &PointSet, v: usize, p: usize) -> bool {
    Enumerator::new(s).first(t, &[(v, p)]).is_some()
}
