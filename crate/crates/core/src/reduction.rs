//! The 3-Partition reduction: a subdivided star `T`, a point set `S` and the
//! pin `s -> p`, together with an exact certificate of the geometric layout
//! and, for yes-instances, a consistent embedding.
//!
//! Layout, with `p = (0, 0)` and the cone of upward rays from `p` with slopes
//! `-2` (right boundary) and `-1` (left boundary) cut into sectors
//! `s_0 .. s_2m` from right to left:
//!
//! - `B_k` (`k = 1..m`): `b` points on the ellipse `E: 9x^2 + 25y^2 = 225`
//!   inside sector `s_{2k-1}`.
//! - `L_k` (`k = 0..m`): `ell` points in sector `s_{2k}`: `q'_k` just inside
//!   the outer curve `C = 2E`, `q_k` on `C` just below the line through `q'_k`
//!   and the top of `B_k`, and `ell - 2` points on `C` below `q_k`.
//!
//! Points on `E` and `C` use the rational parametrisation
//! `t -> λ(5(t^2-1)/(t^2+1), 6t/(t^2+1))`, whose ray through `p` turns
//! monotonically left as `t` decreases.

use num_rational::BigRational;
use num_traits::One;
use serde::Serialize;
use thiserror::Error;

use crate::digraph::Digraph;
use crate::geometry::{general_position_witness, is_convex_position, orientation, ratio, Orientation, Point, PointSet};
use crate::verify::Embedding;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ReductionError {
    #[error("invalid 3-Partition instance: {0}")]
    InvalidInstance(String),
    #[error("construction failed: {0}")]
    ConstructionFailed(String),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
}

/// `3m` positive integers, each divisible by 3, summing to `m * b`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ThreePartitionInstance {
    values: Vec<u64>,
    m: usize,
    b: u64,
}

impl ThreePartitionInstance {
    pub fn new(values: Vec<u64>) -> Result<Self, ReductionError> {
        if values.is_empty() || !values.len().is_multiple_of(3) {
            return Err(ReductionError::InvalidInstance(format!(
                "need a positive multiple of 3 values, got {}",
                values.len()
            )));
        }
        if values.contains(&0) {
            return Err(ReductionError::InvalidInstance("values must be positive".into()));
        }
        if let Some(v) = values.iter().find(|&&v| v % 3 != 0) {
            return Err(ReductionError::InvalidInstance(format!("{v} is not divisible by 3")));
        }
        let m = values.len() / 3;
        let sum: u64 = values.iter().sum();
        if !sum.is_multiple_of(m as u64) {
            return Err(ReductionError::InvalidInstance(format!("sum {sum} is not divisible by m = {m}")));
        }
        Ok(ThreePartitionInstance { b: sum / m as u64, values, m })
    }

    /// Like [`ThreePartitionInstance::new`], first multiplying every value by 3
    /// if any of them is not divisible by 3.
    pub fn normalized(mut values: Vec<u64>) -> Result<Self, ReductionError> {
        if values.iter().any(|v| v % 3 != 0) {
            values.iter_mut().for_each(|v| *v *= 3);
        }
        ThreePartitionInstance::new(values)
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn b(&self) -> u64 {
        self.b
    }
}

/// Triples of value indices, each summing to `b`, found by exhaustive search.
pub fn solve_3partition(inst: &ThreePartitionInstance) -> Option<Vec<[usize; 3]>> {
    fn rec(vals: &[u64], b: u64, used: &mut [bool], out: &mut Vec<[usize; 3]>) -> bool {
        let Some(i) = used.iter().position(|u| !u) else {
            return true;
        };
        used[i] = true;
        for j in i + 1..vals.len() {
            if used[j] || vals[i] + vals[j] >= b {
                continue;
            }
            used[j] = true;
            for k in j + 1..vals.len() {
                if !used[k] && vals[i] + vals[j] + vals[k] == b {
                    used[k] = true;
                    out.push([i, j, k]);
                    if rec(vals, b, used, out) {
                        return true;
                    }
                    out.pop();
                    used[k] = false;
                }
            }
            used[j] = false;
        }
        used[i] = false;
        false
    }
    let mut used = vec![false; inst.values.len()];
    let mut out = Vec::new();
    rec(&inst.values, inst.b, &mut used, &mut out).then_some(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Branch {
    pub small: bool,
    /// Index into the instance values for small branches.
    pub value_index: Option<usize>,
    /// Vertices outward from `s`, excluding `s`.
    pub vertices: Vec<usize>,
    /// The unique sink of the branch.
    pub root: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LargeSet {
    pub q_prime: usize,
    pub q: usize,
    /// The remaining points in descending y.
    pub tail: Vec<usize>,
}

impl LargeSet {
    pub fn all(&self) -> Vec<usize> {
        let mut v = vec![self.q_prime, self.q];
        v.extend(&self.tail);
        v
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Layout {
    /// `B_1 .. B_m`, each in descending y.
    pub small: Vec<Vec<usize>>,
    /// `L_0 .. L_m`.
    pub large: Vec<LargeSet>,
    /// Ray directions from `p`, right to left: the slope `-2` boundary, the
    /// `2m` interior rays, the slope `-1` boundary. Sector `s_i` lies between
    /// `rays[i]` and `rays[i + 1]`.
    pub rays: Vec<Point>,
    /// Curve parameters `u_1 > .. > u_2m` of the interior rays on `E`.
    pub ray_params: Vec<BigRational>,
    /// Scale of the outer curve relative to `E`.
    pub lambda: BigRational,
}

#[derive(Clone, Debug)]
pub struct ReductionInstance {
    pub instance: ThreePartitionInstance,
    pub tree: Digraph,
    pub points: PointSet,
    pub s: usize,
    pub p: usize,
    pub branches: Vec<Branch>,
    pub layout: Layout,
    pub ell: usize,
    pub h: usize,
}

/// `λ(5(t^2-1)/(t^2+1), 6t/(t^2+1))`.
pub fn ellipse_point(lambda: &BigRational, t: &BigRational) -> Point {
    let t2 = t * t;
    let den = &t2 + BigRational::one();
    let x = lambda * ratio(5, 1) * (&t2 - BigRational::one()) / &den;
    let y = lambda * ratio(6, 1) * t / den;
    Point::new(x, y)
}

/// `9x^2 + 25y^2` compared against `225 λ^2`.
fn ellipse_cmp(q: &Point, lambda: &BigRational) -> std::cmp::Ordering {
    let lhs = ratio(9, 1) * &q.x * &q.x + ratio(25, 1) * &q.y * &q.y;
    lhs.cmp(&(ratio(225, 1) * lambda * lambda))
}

fn origin() -> Point {
    Point::from_ints(0, 0)
}

fn in_sector(rays: &[Point], i: usize, q: &Point) -> bool {
    let o = origin();
    orientation(&o, &rays[i], q) == Orientation::CounterClockwise
        && orientation(&o, &rays[i + 1], q) == Orientation::Clockwise
}

/// Strictly below the non-vertical line through `a` and `b`.
fn below_line(a: &Point, b: &Point, q: &Point) -> bool {
    let y = &a.y + (&b.y - &a.y) * (&q.x - &a.x) / (&b.x - &a.x);
    q.y < y
}

fn scale(f: &BigRational, q: &Point) -> Point {
    Point::new(f * &q.x, f * &q.y)
}

/// Build `T`, `S` and the layout. Fails only if the certificate does not pass.
pub fn reduce(inst: &ThreePartitionInstance) -> Result<ReductionInstance, ReductionError> {
    let m = inst.m;
    let b = inst.b as usize;
    let ell = (m * b + 1).max(b + 4);
    let h = m + 1;

    // tree: vertex 0 is s, branches numbered outward
    let mut edges = Vec::new();
    let mut branches = Vec::new();
    let mut next = 1;
    let lens = inst.values.iter().map(|&a| (true, a as usize)).chain((0..h).map(|_| (false, ell)));
    for (i, (small, len)) in lens.enumerate() {
        let vertices: Vec<usize> = (next..next + len).collect();
        next += len;
        let root_at = if small { 0 } else { 1 };
        edges.push((0, vertices[0]));
        for j in 0..len - 1 {
            if j < root_at {
                edges.push((vertices[j], vertices[j + 1]));
            } else {
                edges.push((vertices[j + 1], vertices[j]));
            }
        }
        branches.push(Branch { small, value_index: small.then_some(i), root: vertices[root_at], vertices });
    }
    let tree = Digraph::new(next, edges).map_err(|e| ReductionError::ConstructionFailed(e.to_string()))?;

    // sector parameters u_0 > u_1 > .. > u_{2m+1}, inside the exact cone
    let t_hi = ratio(744_030, 1_000_000);
    let t_lo = ratio(566_191, 1_000_000);
    let w = (&t_hi - &t_lo) / ratio(2 * m as i64 + 1, 1);
    let u = |i: usize| &t_hi - &w * ratio(i as i64, 1);
    let one = BigRational::one();
    let lambda = ratio(2, 1);
    let ray_params: Vec<BigRational> = (1..=2 * m).map(u).collect();
    let mut rays = vec![Point::from_ints(-1, 2)];
    rays.extend(ray_params.iter().map(|t| ellipse_point(&one, t)));
    rays.push(Point::from_ints(-1, 1));

    let mut pts = vec![origin()];
    let mut push = |q: Point| {
        pts.push(q);
        pts.len() - 1
    };
    let mut small = Vec::with_capacity(m);
    let mut tops = Vec::with_capacity(m);
    for k in 1..=m {
        let (lo, hi) = (u(2 * k), u(2 * k - 1));
        let step = (&hi - &lo) / ratio(b as i64 + 1, 1);
        let arc: Vec<Point> = (1..=b).rev().map(|j| ellipse_point(&one, &(&lo + &step * ratio(j as i64, 1)))).collect();
        tops.push(arc[0].clone());
        small.push(arc.into_iter().map(&mut push).collect::<Vec<_>>());
    }
    let mut large = Vec::with_capacity(h);
    for k in 0..=m {
        let (qp, q, tail) = large_set(k, &u(2 * k + 1), &u(2 * k), &lambda, &rays, tops.get(k.wrapping_sub(1)), ell)?;
        large.push(LargeSet { q_prime: push(qp), q: push(q), tail: tail.into_iter().map(&mut push).collect() });
    }

    let r = ReductionInstance {
        instance: inst.clone(),
        tree,
        points: PointSet::new(pts),
        s: 0,
        p: 0,
        branches,
        layout: Layout { small, large, rays, ray_params, lambda },
        ell,
        h,
    };
    let cert = certificate(&r);
    if !cert.all_passed() {
        let failed: Vec<String> =
            cert.predicates.iter().filter(|p| !p.passed).map(|p| format!("{} ({})", p.name, p.detail)).collect();
        return Err(ReductionError::ConstructionFailed(format!("certificate failed: {}", failed.join(", "))));
    }
    Ok(r)
}

/// `q'_k`, `q_k` and the tail of `L_k` in the sector with parameters `(lo, hi)`.
fn large_set(
    k: usize,
    lo: &BigRational,
    hi: &BigRational,
    lambda: &BigRational,
    rays: &[Point],
    top_b: Option<&Point>,
    ell: usize,
) -> Result<(Point, Point, Vec<Point>), ReductionError> {
    let shrink = ratio(31, 32);
    let top = ellipse_point(lambda, hi);
    let mut delta = (hi - lo) / ratio(8, 1);
    for _ in 0..40 {
        let qp = scale(&shrink, &ellipse_point(lambda, &(hi - &delta)));
        if qp.x <= top.x || !in_sector(rays, 2 * k, &qp) {
            delta /= ratio(2, 1);
            continue;
        }
        let t_q = match top_b {
            None => hi - &delta / ratio(2, 1),
            Some(tb) => {
                // C(lo) is below the line, C(hi) above it
                let (mut a, mut c) = (lo.clone(), hi.clone());
                if !below_line(tb, &qp, &ellipse_point(lambda, &a)) || below_line(tb, &qp, &ellipse_point(lambda, &c)) {
                    delta /= ratio(2, 1);
                    continue;
                }
                for _ in 0..48 {
                    let mid = (&a + &c) / ratio(2, 1);
                    if below_line(tb, &qp, &ellipse_point(lambda, &mid)) {
                        a = mid;
                    } else {
                        c = mid;
                    }
                }
                a
            }
        };
        let q = ellipse_point(lambda, &t_q);
        if q.y <= qp.y || q.x >= qp.x {
            delta /= ratio(2, 1);
            continue;
        }
        let step = (&t_q - lo) / ratio(ell as i64 - 1, 1);
        let tail: Vec<Point> =
            (1..=ell - 2).rev().map(|j| ellipse_point(lambda, &(lo + &step * ratio(j as i64, 1)))).collect();
        // q' shares a ray from p with C(hi - delta), which may be a tail point
        let local: PointSet = [origin(), qp.clone(), q.clone()].into_iter().chain(tail.iter().cloned()).collect();
        if general_position_witness(&local).is_some() {
            delta /= ratio(2, 1);
            continue;
        }
        return Ok((qp, q, tail));
    }
    Err(ReductionError::ConstructionFailed(format!("could not place q'_{k} and q_{k}")))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Predicate {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub predicates: Vec<Predicate>,
}

impl Certificate {
    pub fn all_passed(&self) -> bool {
        self.predicates.iter().all(|p| p.passed)
    }

    pub fn get(&self, name: &str) -> Option<&Predicate> {
        self.predicates.iter().find(|p| p.name == name)
    }
}

pub const PREDICATES: [&str; 7] =
    ["cone", "small-sets", "large-sets", "q-prime-below-right", "q-below-line", "general-position", "ray-slopes"];

/// Evaluate every layout predicate exactly. Each failure names the first
/// offending set.
pub fn certificate(r: &ReductionInstance) -> Certificate {
    let s = &r.points;
    let lay = &r.layout;
    let m = lay.small.len();
    let pt = |i: usize| s.get(i);
    let one = BigRational::one();
    let mut out = Vec::new();
    let mut record = |name: &str, fail: Option<String>| {
        out.push(Predicate { name: name.into(), passed: fail.is_none(), detail: fail.unwrap_or_else(|| "ok".into()) });
    };

    let o = origin();
    let cone_fail = (0..s.len()).filter(|&i| i != r.p).find(|&i| {
        !(orientation(&o, &lay.rays[0], pt(i)) == Orientation::CounterClockwise
            && orientation(&o, &lay.rays[lay.rays.len() - 1], pt(i)) == Orientation::Clockwise)
    });
    record("cone", cone_fail.map(|i| format!("point {i} is outside the cone")));

    let large_all: Vec<usize> = lay.large.iter().flat_map(LargeSet::all).collect();
    let min_large_y = large_all.iter().map(|&i| &pt(i).y).min().cloned();
    let small_fail = lay.small.iter().enumerate().find_map(|(j, set)| {
        let k = j + 1;
        if set.iter().any(|&i| !in_sector(&lay.rays, 2 * k - 1, pt(i))) {
            return Some(format!("B_{k} leaves its sector"));
        }
        if set.iter().any(|&i| ellipse_cmp(pt(i), &one).is_ne()) {
            return Some(format!("B_{k} is not on E"));
        }
        if is_convex_position(&s.subset(set)) != Ok(true) {
            return Some(format!("B_{k} is not in convex position"));
        }
        match &min_large_y {
            Some(y) if set.iter().any(|&i| &pt(i).y >= y) => Some(format!("B_{k} is not below the large sets")),
            _ => None,
        }
    });
    record("small-sets", small_fail);

    let large_fail = (|| {
        let three = ratio(3, 1);
        for (k, set) in lay.large.iter().enumerate() {
            if set.all().iter().any(|&i| !in_sector(&lay.rays, 2 * k, pt(i))) {
                return Some(format!("L_{k} leaves its sector"));
            }
            if set.all().iter().any(|&i| ellipse_cmp(pt(i), &one).is_le() || pt(i).y <= three) {
                return Some(format!("L_{k} is not above E and (-3, 3)"));
            }
            if std::iter::once(set.q).chain(set.tail.iter().copied()).any(|i| ellipse_cmp(pt(i), &lay.lambda).is_ne()) {
                return Some(format!("L_{k} is not on C"));
            }
        }
        let mut chain: Vec<usize> =
            lay.large.iter().flat_map(|l| std::iter::once(l.q).chain(l.tail.iter().copied())).collect();
        chain.sort_by(|&a, &b| pt(a).x.cmp(&pt(b).x));
        if chain.windows(2).any(|w| pt(w[0]).x >= pt(w[1]).x || pt(w[0]).y >= pt(w[1]).y) {
            return Some("C is not x- and y-monotone".into());
        }
        if chain.windows(3).any(|w| orientation(pt(w[0]), pt(w[1]), pt(w[2])) != Orientation::Clockwise) {
            return Some("C is not convex".into());
        }
        None
    })();
    record("large-sets", large_fail);

    let qp_fail = lay.large.iter().enumerate().find_map(|(k, l)| {
        let (q, qp) = (pt(l.q), pt(l.q_prime));
        (qp.y >= q.y || qp.x <= q.x).then(|| format!("q'_{k} is not below and right of q_{k}"))
    });
    record("q-prime-below-right", qp_fail);

    let line_fail = (1..=m).find_map(|k| {
        let l = &lay.large[k];
        let top = lay.small[k - 1].iter().max_by(|&&a, &&b| pt(a).y.cmp(&pt(b).y))?;
        (!below_line(pt(*top), pt(l.q_prime), pt(l.q))).then(|| format!("q_{k} is not below the line through q'_{k}"))
    });
    record("q-below-line", line_fail);

    record(
        "general-position",
        general_position_witness(s).map(|w| format!("points {w:?} are collinear or share a y-coordinate")),
    );

    let slopes: Vec<BigRational> = lay.rays[1..lay.rays.len() - 1].iter().map(|d| &d.y / &d.x).collect();
    let (lo, hi) = (ratio(-2, 1), ratio(-1, 1));
    let slope_fail = if slopes.len() != 2 * m {
        Some(format!("expected {} interior rays, found {}", 2 * m, slopes.len()))
    } else if slopes.iter().any(|x| x <= &lo || x >= &hi) {
        Some("an interior slope is outside (-2, -1)".into())
    } else if slopes.windows(2).any(|w| w[0] >= w[1]) {
        Some("interior slopes are not strictly increasing".into())
    } else {
        None
    };
    record("ray-slopes", slope_fail);

    Certificate { predicates: out }
}

/// The embedding that maps `s` to `p`, large branch `j` onto `L_j` and the
/// `k`-th triple of small branches onto `B_{k+1}`.
pub fn consistent_embedding(r: &ReductionInstance, partition: &[[usize; 3]]) -> Result<Embedding, ReductionError> {
    let inst = &r.instance;
    if partition.len() != inst.m {
        return Err(ReductionError::InvalidPartition(format!("expected {} triples, got {}", inst.m, partition.len())));
    }
    let mut seen = vec![false; inst.values.len()];
    for t in partition {
        for &i in t {
            if i >= seen.len() || std::mem::replace(&mut seen[i], true) {
                return Err(ReductionError::InvalidPartition(format!("index {i} is out of range or repeated")));
            }
        }
        let sum: u64 = t.iter().map(|&i| inst.values[i]).sum();
        if sum != inst.b {
            return Err(ReductionError::InvalidPartition(format!("triple {t:?} sums to {sum}, not {}", inst.b)));
        }
    }
    let mut mapping = vec![usize::MAX; r.tree.n()];
    mapping[r.s] = r.p;
    let small_of: Vec<&Branch> = r.branches.iter().filter(|b| b.small).collect();
    for (k, t) in partition.iter().enumerate() {
        let mut run = r.layout.small[k].iter();
        for &i in t {
            for &v in &small_of[i].vertices {
                mapping[v] = *run.next().expect("triple sums to b");
            }
        }
    }
    for (br, set) in r.branches.iter().filter(|b| !b.small).zip(&r.layout.large) {
        mapping[br.vertices[0]] = set.q_prime;
        mapping[br.vertices[1]] = set.q;
        for (&v, &q) in br.vertices[2..].iter().zip(&set.tail) {
            mapping[v] = q;
        }
    }
    Ok(Embedding::from_raw(mapping))
}
