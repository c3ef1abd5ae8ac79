//! Brute-force oracles on integer coordinates. Shares no code with the library
//! predicates: crossings are decided by solving the segment pair exactly.

#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;
use upse::{Digraph, PointSet};

pub type P = (i64, i64);

pub fn int_points(s: &PointSet) -> Vec<P> {
    s.points()
        .iter()
        .map(|p| {
            let (x, y) = p.to_f64();
            let q = (x as i64, y as i64);
            assert_eq!((q.0 as f64, q.1 as f64), (x, y), "oracle needs integer points");
            q
        })
        .collect()
}

fn sub(a: P, b: P) -> (i128, i128) {
    ((a.0 - b.0) as i128, (a.1 - b.1) as i128)
}

fn cross(u: (i128, i128), v: (i128, i128)) -> i128 {
    u.0 * v.1 - u.1 * v.0
}

fn dot(u: (i128, i128), v: (i128, i128)) -> i128 {
    u.0 * v.0 + u.1 * v.1
}

/// `w` strictly between `a` and `b` on the segment.
fn inside(w: P, a: P, b: P) -> bool {
    let r = sub(b, a);
    let q = sub(w, a);
    cross(r, q) == 0 && dot(q, r) > 0 && dot(q, r) < dot(r, r)
}

/// Segments `ab` and `cd` meet somewhere other than a common endpoint.
/// `shared` says whether the edges have a vertex in common.
fn meet(a: P, b: P, c: P, d: P, shared: bool) -> bool {
    let r = sub(b, a);
    let s = sub(d, c);
    let ca = sub(c, a);
    let den = cross(r, s);
    if den != 0 {
        // a + t r = c + u s with t = tn/den, u = un/den
        let (mut tn, mut un, mut den) = (cross(ca, s), cross(ca, r), den);
        if den < 0 {
            (tn, un, den) = (-tn, -un, -den);
        }
        let hit = (0..=den).contains(&tn) && (0..=den).contains(&un);
        return hit && !shared;
    }
    if cross(ca, r) != 0 {
        return false;
    }
    let rr = dot(r, r);
    let (t0, t1) = (dot(ca, r), dot(sub(d, a), r));
    let lo = t0.min(t1).max(0);
    let hi = t0.max(t1).min(rr);
    match lo.cmp(&hi) {
        std::cmp::Ordering::Greater => false,
        std::cmp::Ordering::Equal => !shared,
        std::cmp::Ordering::Less => true,
    }
}

/// Straight-line drawing of `edges` under `map` is upward and crossing-free.
pub fn naive_upse(n: usize, edges: &[(usize, usize)], pts: &[P], map: &[usize]) -> bool {
    assert_eq!(map.len(), n);
    for i in 0..n {
        for j in i + 1..n {
            if map[i] == map[j] {
                return false;
            }
        }
    }
    let at = |v: usize| pts[map[v]];
    if edges.iter().any(|&(u, v)| at(u).1 >= at(v).1) {
        return false;
    }
    for &(u, v) in edges {
        if (0..n).any(|w| w != u && w != v && inside(at(w), at(u), at(v))) {
            return false;
        }
    }
    for (i, &(u, v)) in edges.iter().enumerate() {
        for &(x, y) in &edges[i + 1..] {
            let shared = u == x || u == y || v == x || v == y;
            if meet(at(u), at(v), at(x), at(y), shared) {
                return false;
            }
        }
    }
    true
}

/// Every injection of `g` into the points that passes [`naive_upse`] and the
/// optional pin, in lexicographic order.
pub fn injection_filter(g: &Digraph, pts: &[P], pin: Option<(usize, usize)>) -> Vec<Vec<usize>> {
    fn rec(
        g: &Digraph,
        pts: &[P],
        pin: Option<(usize, usize)>,
        map: &mut Vec<usize>,
        used: &mut [bool],
        out: &mut Vec<Vec<usize>>,
    ) {
        if map.len() == g.n() {
            if naive_upse(g.n(), g.edges(), pts, map) {
                out.push(map.clone());
            }
            return;
        }
        let v = map.len();
        for q in 0..pts.len() {
            if used[q] || matches!(pin, Some((w, p)) if w == v && p != q) {
                continue;
            }
            used[q] = true;
            map.push(q);
            rec(g, pts, pin, map, used, out);
            map.pop();
            used[q] = false;
        }
    }
    let mut out = Vec::new();
    if g.n() <= pts.len() {
        rec(g, pts, pin, &mut Vec::new(), &mut vec![false; pts.len()], &mut out);
    }
    out
}

/// A random oriented tree on `n` vertices.
pub fn random_tree(n: usize, rng: &mut impl Rng) -> Vec<(usize, usize)> {
    (1..n)
        .map(|v| {
            let u = rng.gen_range(0..v);
            if rng.gen_bool(0.5) {
                (u, v)
            } else {
                (v, u)
            }
        })
        .collect()
}

/// A random tree plus up to two extra edges.
pub fn random_digraph(n: usize, rng: &mut impl Rng) -> Digraph {
    let mut edges = random_tree(n, rng);
    for _ in 0..rng.gen_range(0..=2) {
        let (u, v) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if u != v && !edges.contains(&(u, v)) && !edges.contains(&(v, u)) {
            edges.push((u, v));
        }
    }
    Digraph::new(n, edges).expect("random edges are simple")
}

/// `k` distinct points of the `side x side` grid; degeneracies are allowed.
pub fn grid_points(k: usize, side: i64, rng: &mut impl Rng) -> Vec<P> {
    let mut all: Vec<P> = (0..side).flat_map(|x| (0..side).map(move |y| (x, y))).collect();
    all.shuffle(rng);
    all.truncate(k);
    all
}
