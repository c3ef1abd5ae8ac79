//! Exact rational planar geometry.
//!
//! Every predicate in this module is evaluated exactly on arbitrary-precision
//! rationals. Integer inputs that fit in 62 bits take an `i128` fast path;
//! everything else goes through homogeneous big-integer determinants.

use std::cmp::Ordering;
use std::collections::{HashMap, HashSet};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GeometryError {
    #[error("point set is not in general position")]
    NotGeneral,
    #[error("point set is not in convex position")]
    NotConvex,
    #[error("two points share the y-coordinate {0}")]
    DuplicateY(String),
}

/// A planar point with exact rational coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Point {
    pub x: BigRational,
    pub y: BigRational,
}

impl Point {
    pub fn new(x: BigRational, y: BigRational) -> Self {
        Point { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        Point { x: BigRational::from_integer(x.into()), y: BigRational::from_integer(y.into()) }
    }

    /// `x = xn/xd`, `y = yn/yd`. Panics on a zero denominator.
    pub fn from_fractions(xn: i64, xd: i64, yn: i64, yd: i64) -> Self {
        Point { x: BigRational::new(xn.into(), xd.into()), y: BigRational::new(yn.into(), yd.into()) }
    }

    pub fn reflect_x(&self) -> Point {
        Point::new(-self.x.clone(), self.y.clone())
    }

    pub fn reflect_y(&self) -> Point {
        Point::new(self.x.clone(), -self.y.clone())
    }

    /// Lossy conversion used for display and floating-point sanity checks only.
    pub fn to_f64(&self) -> (f64, f64) {
        (ratio_to_f64(&self.x), ratio_to_f64(&self.y))
    }

    fn small_ints(&self) -> Option<(i128, i128)> {
        const LIMIT: i64 = 1 << 62;
        if !self.x.is_integer() || !self.y.is_integer() {
            return None;
        }
        let x = self.x.numer().to_i64()?;
        let y = self.y.numer().to_i64()?;
        if x.abs() >= LIMIT || y.abs() >= LIMIT {
            return None;
        }
        Some((x as i128, y as i128))
    }

    /// Homogeneous integer coordinates `(X, Y, W)` with `W > 0`.
    fn homogeneous(&self) -> (BigInt, BigInt, BigInt) {
        let (xn, xd) = (self.x.numer(), self.x.denom());
        let (yn, yd) = (self.y.numer(), self.y.denom());
        if xd == yd {
            return (xn.clone(), yn.clone(), xd.clone());
        }
        (xn * yd, yn * xd, xd * yd)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

pub fn ratio_to_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        let n = r.numer().to_f64().unwrap_or(f64::NAN);
        let d = r.denom().to_f64().unwrap_or(f64::NAN);
        n / d
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Orientation {
    Clockwise,
    CounterClockwise,
    Collinear,
}

impl Orientation {
    fn from_sign<T: Signed>(v: &T) -> Self {
        if v.is_positive() {
            Orientation::CounterClockwise
        } else if v.is_negative() {
            Orientation::Clockwise
        } else {
            Orientation::Collinear
        }
    }

    pub fn as_i8(self) -> i8 {
        match self {
            Orientation::Clockwise => -1,
            Orientation::Collinear => 0,
            Orientation::CounterClockwise => 1,
        }
    }

    pub fn reverse(self) -> Self {
        match self {
            Orientation::Clockwise => Orientation::CounterClockwise,
            Orientation::CounterClockwise => Orientation::Clockwise,
            Orientation::Collinear => Orientation::Collinear,
        }
    }
}

/// Sign of `(q - p) x (r - p)`.
pub fn orientation(p: &Point, q: &Point, r: &Point) -> Orientation {
    if let (Some(a), Some(b), Some(c)) = (p.small_ints(), q.small_ints(), r.small_ints()) {
        let det = (b.0 - a.0) * (c.1 - a.1) - (b.1 - a.1) * (c.0 - a.0);
        return Orientation::from_sign(&det);
    }
    let (x1, y1, w1) = p.homogeneous();
    let (x2, y2, w2) = q.homogeneous();
    let (x3, y3, w3) = r.homogeneous();
    let det = &x1 * (&y2 * &w3 - &y3 * &w2) - &y1 * (&x2 * &w3 - &x3 * &w2) + &w1 * (&x2 * &y3 - &x3 * &y2);
    Orientation::from_sign(&det)
}

/// True iff `p` lies on the closed segment `a b`.
pub fn on_closed_segment(p: &Point, a: &Point, b: &Point) -> bool {
    orientation(a, b, p) == Orientation::Collinear && within_box(p, a, b)
}

/// True iff `p` lies on the segment `a b` but is neither endpoint.
pub fn on_open_segment(p: &Point, a: &Point, b: &Point) -> bool {
    p != a && p != b && on_closed_segment(p, a, b)
}

fn within_box(p: &Point, a: &Point, b: &Point) -> bool {
    let (xlo, xhi) = if a.x <= b.x { (&a.x, &b.x) } else { (&b.x, &a.x) };
    let (ylo, yhi) = if a.y <= b.y { (&a.y, &b.y) } else { (&b.y, &a.y) };
    xlo <= &p.x && &p.x <= xhi && ylo <= &p.y && &p.y <= yhi
}

/// Whether the closed segments `a1 a2` and `b1 b2` share a point other than a
/// common endpoint. Segments meeting only at a shared endpoint do not cross;
/// collinear overlap always does.
pub fn segments_cross(a1: &Point, a2: &Point, b1: &Point, b2: &Point) -> bool {
    let same = |p: &Point, q: &Point| p == q;
    if (same(a1, b1) && same(a2, b2)) || (same(a1, b2) && same(a2, b1)) {
        return true;
    }
    let shared = if same(a1, b1) {
        Some((a1, a2, b2))
    } else if same(a1, b2) {
        Some((a1, a2, b1))
    } else if same(a2, b1) {
        Some((a2, a1, b2))
    } else if same(a2, b2) {
        Some((a2, a1, b1))
    } else {
        None
    };
    if let Some((_, a_other, b_other)) = shared {
        let common = if same(a1, b1) || same(a1, b2) { a1 } else { a2 };
        return orientation(common, a_other, b_other) == Orientation::Collinear
            && (on_closed_segment(b_other, common, a_other) || on_closed_segment(a_other, common, b_other));
    }

    let o1 = orientation(a1, a2, b1);
    let o2 = orientation(a1, a2, b2);
    let o3 = orientation(b1, b2, a1);
    let o4 = orientation(b1, b2, a2);
    use Orientation::Collinear;
    if o1 != Collinear && o2 != Collinear && o3 != Collinear && o4 != Collinear {
        return o1 != o2 && o3 != o4;
    }
    (o1 == Collinear && within_box(b1, a1, a2))
        || (o2 == Collinear && within_box(b2, a1, a2))
        || (o3 == Collinear && within_box(a1, b1, b2))
        || (o4 == Collinear && within_box(a2, b1, b2))
}

/// An ordered list of points.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct PointSet {
    points: Vec<Point>,
}

impl PointSet {
    pub fn new(points: Vec<Point>) -> Self {
        PointSet { points }
    }

    pub fn from_ints(coords: &[(i64, i64)]) -> Self {
        PointSet::new(coords.iter().map(|&(x, y)| Point::from_ints(x, y)).collect())
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn get(&self, i: usize) -> &Point {
        &self.points[i]
    }

    pub fn into_points(self) -> Vec<Point> {
        self.points
    }

    /// Index of the lowest point `b(S)`; ties resolve to the smaller index.
    pub fn lowest(&self) -> Option<usize> {
        (0..self.len()).min_by(|&i, &j| self.points[i].y.cmp(&self.points[j].y).then(i.cmp(&j)))
    }

    /// Index of the highest point `t(S)`; ties resolve to the smaller index.
    pub fn highest(&self) -> Option<usize> {
        (0..self.len()).max_by(|&i, &j| self.points[i].y.cmp(&self.points[j].y).then(j.cmp(&i)))
    }

    pub fn reflect_x(&self) -> PointSet {
        PointSet::new(self.points.iter().map(Point::reflect_x).collect())
    }

    pub fn reflect_y(&self) -> PointSet {
        PointSet::new(self.points.iter().map(Point::reflect_y).collect())
    }

    pub fn subset(&self, indices: &[usize]) -> PointSet {
        PointSet::new(indices.iter().map(|&i| self.points[i].clone()).collect())
    }
}

impl FromIterator<Point> for PointSet {
    fn from_iter<I: IntoIterator<Item = Point>>(iter: I) -> Self {
        PointSet::new(iter.into_iter().collect())
    }
}

/// Canonical primitive direction of `q - p`, normalised to the upper half-plane.
fn canonical_direction(p: &Point, q: &Point) -> (BigInt, BigInt) {
    let dx = &q.x - &p.x;
    let dy = &q.y - &p.y;
    let mut a = dx.numer() * dy.denom();
    let mut b = dy.numer() * dx.denom();
    let g = a.gcd(&b);
    if !g.is_zero() {
        a /= &g;
        b /= &g;
    }
    if b.is_negative() || (b.is_zero() && a.is_negative()) {
        a = -a;
        b = -b;
    }
    (a, b)
}

/// No three points collinear and all y-coordinates pairwise distinct.
///
/// Runs in O(n^2) by hashing the primitive direction from each point to every
/// other point: a repeated direction from the same anchor is a collinear triple.
pub fn is_general_position(s: &PointSet) -> bool {
    general_position_witness(s).is_none()
}

/// Indices violating general position: two points sharing a y-coordinate, or a
/// collinear triple.
pub fn general_position_witness(s: &PointSet) -> Option<Vec<usize>> {
    let pts = s.points();
    let mut by_y: Vec<usize> = (0..pts.len()).collect();
    by_y.sort_by(|&a, &b| pts[a].y.cmp(&pts[b].y));
    if let Some(w) = by_y.windows(2).find(|w| pts[w[0]].y == pts[w[1]].y) {
        return Some(w.to_vec());
    }
    for i in 0..pts.len() {
        let mut seen = HashMap::with_capacity(pts.len());
        for j in (i + 1)..pts.len() {
            if let Some(k) = seen.insert(canonical_direction(&pts[i], &pts[j]), j) {
                return Some(vec![i, k, j]);
            }
        }
    }
    None
}

/// Convex hull vertices in counter-clockwise order, starting from the
/// lexicographically smallest point. Collinear boundary points are dropped.
pub fn convex_hull(s: &PointSet) -> Vec<usize> {
    let pts = s.points();
    let mut idx: Vec<usize> = (0..pts.len()).collect();
    idx.sort_by(|&i, &j| pts[i].x.cmp(&pts[j].x).then_with(|| pts[i].y.cmp(&pts[j].y)));
    idx.dedup_by(|a, b| pts[*a] == pts[*b]);
    if idx.len() < 3 {
        return idx;
    }
    let mut lower: Vec<usize> = Vec::new();
    for &i in &idx {
        while lower.len() >= 2
            && orientation(&pts[lower[lower.len() - 2]], &pts[lower[lower.len() - 1]], &pts[i])
                != Orientation::CounterClockwise
        {
            lower.pop();
        }
        lower.push(i);
    }
    let mut upper: Vec<usize> = Vec::new();
    for &i in idx.iter().rev() {
        while upper.len() >= 2
            && orientation(&pts[upper[upper.len() - 2]], &pts[upper[upper.len() - 1]], &pts[i])
                != Orientation::CounterClockwise
        {
            upper.pop();
        }
        upper.push(i);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

/// Every point is a vertex of the convex hull. Sets of at most two points are
/// trivially convex.
pub fn is_convex_position(s: &PointSet) -> Result<bool, GeometryError> {
    if !is_general_position(s) {
        return Err(GeometryError::NotGeneral);
    }
    if s.len() <= 2 {
        return Ok(true);
    }
    Ok(convex_hull(s).len() == s.len())
}

/// `b(S)` and `t(S)` are consecutive on the convex hull.
pub fn is_one_sided(s: &PointSet) -> Result<bool, GeometryError> {
    if !is_convex_position(s)? {
        return Err(GeometryError::NotConvex);
    }
    if s.len() <= 3 {
        return Ok(true);
    }
    let hull = convex_hull(s);
    let (b, t) = (s.lowest().unwrap(), s.highest().unwrap());
    let pos = |v: usize| hull.iter().position(|&h| h == v).unwrap();
    let (pb, pt) = (pos(b), pos(t));
    let n = hull.len();
    Ok((pb + 1) % n == pt || (pt + 1) % n == pb)
}

/// Point indices in strictly increasing y order.
pub fn sort_by_y(s: &PointSet) -> Result<Vec<usize>, GeometryError> {
    let pts = s.points();
    let mut idx: Vec<usize> = (0..pts.len()).collect();
    idx.sort_by(|&i, &j| pts[i].y.cmp(&pts[j].y));
    if let Some(w) = idx.windows(2).find(|w| pts[w[0]].y == pts[w[1]].y) {
        return Err(GeometryError::DuplicateY(pts[w[0]].y.to_string()));
    }
    Ok(idx)
}

/// Compare two points by y, then x.
pub fn cmp_y(a: &Point, b: &Point) -> Ordering {
    a.y.cmp(&b.y).then_with(|| a.x.cmp(&b.x))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PointSetKind {
    General,
    Convex,
    OneSidedConvex,
}

impl std::str::FromStr for PointSetKind {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "general" => Ok(PointSetKind::General),
            "convex" => Ok(PointSetKind::Convex),
            "one-sided" | "one_sided" | "one_sided_convex" | "one-sided-convex" => Ok(PointSetKind::OneSidedConvex),
            other => Err(format!("unknown point-set kind `{other}`")),
        }
    }
}

/// Deterministic seeded point sets on integer grids.
///
/// The output always satisfies the requested classification; candidates that
/// fail it are rejected and resampled.
pub fn generate_point_set(kind: PointSetKind, n: usize, seed: u64) -> PointSet {
    let salt = match kind {
        PointSetKind::General => 0x9e37_79b9_7f4a_7c15,
        PointSetKind::Convex => 0xc2b2_ae3d_27d4_eb4f,
        PointSetKind::OneSidedConvex => 0x1656_67b1_9e37_79f9,
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ salt);
    match kind {
        PointSetKind::General => gen_general(&mut rng, n),
        PointSetKind::OneSidedConvex => gen_one_sided(&mut rng, n),
        PointSetKind::Convex => loop {
            let s = gen_convex(&mut rng, n);
            if is_convex_position(&s) == Ok(true) {
                break s;
            }
        },
    }
}

fn gen_general(rng: &mut ChaCha8Rng, n: usize) -> PointSet {
    let grid = (8 * n as i64).max(64);
    let mut pts: Vec<Point> = Vec::with_capacity(n);
    let mut ys = HashSet::new();
    while pts.len() < n {
        let p = Point::from_ints(rng.gen_range(0..grid), rng.gen_range(0..grid));
        if ys.contains(&p.y) {
            continue;
        }
        let collinear = (0..pts.len())
            .any(|i| (i + 1..pts.len()).any(|j| orientation(&pts[i], &pts[j], &p) == Orientation::Collinear));
        if collinear {
            continue;
        }
        ys.insert(p.y.clone());
        pts.push(p);
    }
    PointSet::new(pts)
}

fn distinct_sorted(rng: &mut ChaCha8Rng, count: usize, lo: i64, hi: i64) -> Vec<i64> {
    let mut set = std::collections::BTreeSet::new();
    while set.len() < count {
        set.insert(rng.gen_range(lo..hi));
    }
    set.into_iter().collect()
}

/// Vertices of a strictly convex chain `x = f(y)`: slopes `dx/dy` strictly
/// increase, so `b(S)` and `t(S)` are joined by the closing hull edge.
fn gen_one_sided(rng: &mut ChaCha8Rng, n: usize) -> PointSet {
    let ys = distinct_sorted(rng, n, 0, (6 * n as i64).max(16));
    let mut slopes = distinct_sorted(rng, n.saturating_sub(1), -4 * n as i64, 4 * n as i64 + 1);
    if rng.gen_bool(0.5) {
        // mirror the chain so both sides occur
        slopes = slopes.iter().rev().map(|s| -s).collect();
    }
    let mut pts = Vec::with_capacity(n);
    let mut x = rng.gen_range(-8..8);
    for (i, &y) in ys.iter().enumerate() {
        if i > 0 {
            x += slopes[i - 1] * (y - ys[i - 1]);
        }
        pts.push(Point::from_ints(x, y));
    }
    // shuffle the index order so callers cannot rely on y-sorted input
    for i in (1..pts.len()).rev() {
        let j = rng.gen_range(0..=i);
        pts.swap(i, j);
    }
    PointSet::new(pts)
}

/// Two parabolic arcs through `b = (0, 0)` and `t = (s*h, h)`, one on each
/// side of the chord.
fn gen_convex(rng: &mut ChaCha8Rng, n: usize) -> PointSet {
    if n <= 3 {
        return gen_one_sided(rng, n);
    }
    let h = (4 * n as i64).max(16);
    let inner = distinct_sorted(rng, n - 2, 1, h);
    let shear = rng.gen_range(-3..=3);
    let (ka, kb) = (rng.gen_range(1..4), rng.gen_range(1..4));
    let mut pts = vec![Point::from_ints(0, 0), Point::from_ints(shear * h, h)];
    for (i, &y) in inner.iter().enumerate() {
        let left = if i == 0 {
            true
        } else if i == 1 {
            false
        } else {
            rng.gen_bool(0.5)
        };
        let bulge = y * (h - y);
        let x = if left { -ka * bulge } else { kb * bulge } + shear * y;
        pts.push(Point::from_ints(x, y));
    }
    for i in (1..pts.len()).rev() {
        let j = rng.gen_range(0..=i);
        pts.swap(i, j);
    }
    PointSet::new(pts)
}

/// Exact ratio helper for callers building rational coordinates.
pub fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: i64, y: i64) -> Point {
        Point::from_ints(x, y)
    }

    #[test]
    fn orientation_examples() {
        assert_eq!(orientation(&p(0, 0), &p(1, 0), &p(0, 1)), Orientation::CounterClockwise);
        assert_eq!(orientation(&p(0, 0), &p(1, 1), &p(2, 2)), Orientation::Collinear);
        assert_eq!(orientation(&p(0, 0), &p(0, 1), &p(1, 0)), Orientation::Clockwise);
    }

    #[test]
    fn orientation_rational_path_matches_integer_path() {
        let a = Point::from_fractions(1, 3, 0, 1);
        let b = Point::from_fractions(2, 3, 1, 2);
        let c = Point::from_fractions(1, 1, 1, 1);
        // scaled by 6: (2,0), (4,3), (6,6) -> det = 2*6 - 3*4 = 0
        assert_eq!(orientation(&a, &b, &c), Orientation::Collinear);
        let huge = Point::from_ints(i64::MAX, 1);
        assert_eq!(orientation(&p(0, 0), &huge, &p(0, 1)), Orientation::CounterClockwise);
    }

    #[test]
    fn general_position_examples() {
        assert!(is_general_position(&PointSet::from_ints(&[(0, 0), (2, 1), (1, 3)])));
        assert!(!is_general_position(&PointSet::from_ints(&[(0, 0), (1, 1), (2, 2)])));
        assert!(!is_general_position(&PointSet::from_ints(&[(0, 0), (5, 0)])));
    }

    #[test]
    fn general_position_witnesses() {
        let ok = PointSet::from_ints(&[(0, 0), (3, 1), (1, 2)]);
        assert_eq!(general_position_witness(&ok), None);
        let flat = PointSet::from_ints(&[(0, 0), (3, 1), (5, 1)]);
        assert_eq!(general_position_witness(&flat), Some(vec![1, 2]));
        let line = PointSet::from_ints(&[(7, 9), (0, 0), (2, 1), (4, 2)]);
        assert_eq!(general_position_witness(&line), Some(vec![1, 2, 3]));
    }

    #[test]
    fn convex_position_examples() {
        let square = PointSet::from_ints(&[(0, 0), (10, 1), (11, 10), (1, 9)]);
        assert_eq!(is_convex_position(&square), Ok(true));
        let with_interior = PointSet::from_ints(&[(0, 0), (10, 1), (4, 10), (5, 4)]);
        assert_eq!(is_convex_position(&with_interior), Ok(false));
        let quad = PointSet::from_ints(&[(0, 0), (10, 1), (9, 5), (1, 4)]);
        assert_eq!(is_convex_position(&quad), Ok(true));
        let collinear = PointSet::from_ints(&[(0, 0), (1, 1), (2, 2), (0, 5)]);
        assert_eq!(is_convex_position(&collinear), Err(GeometryError::NotGeneral));
    }

    #[test]
    fn one_sided_examples() {
        // quarter-circle-like arc from bottom to top
        let arc = PointSet::from_ints(&[(0, 0), (6, 1), (9, 4), (10, 8)]);
        assert_eq!(is_one_sided(&arc), Ok(true));
        let hexagon = PointSet::from_ints(&[(0, 0), (4, 1), (5, 5), (1, 7), (-3, 6), (-4, 2)]);
        assert_eq!(is_one_sided(&hexagon), Ok(false));
        let s = PointSet::from_ints(&[(0, 0), (3, 1), (4, 3), (3, 6)]);
        assert_eq!(is_one_sided(&s), Ok(true));
        let not_convex = PointSet::from_ints(&[(0, 0), (10, 1), (4, 10), (5, 4)]);
        assert_eq!(is_one_sided(&not_convex), Err(GeometryError::NotConvex));
    }

    #[test]
    fn segment_crossing_examples() {
        assert!(segments_cross(&p(0, 0), &p(2, 2), &p(0, 2), &p(2, 0)));
        assert!(!segments_cross(&p(0, 0), &p(1, 1), &p(1, 1), &p(2, 0)));
        assert!(segments_cross(&p(0, 0), &p(2, 0), &p(1, 0), &p(3, 0)));
        // shared endpoint with collinear overlap
        assert!(segments_cross(&p(0, 0), &p(2, 0), &p(0, 0), &p(1, 0)));
        // shared endpoint, collinear, pointing away
        assert!(!segments_cross(&p(0, 0), &p(2, 0), &p(0, 0), &p(-1, 0)));
        // T-junction
        assert!(segments_cross(&p(0, 0), &p(2, 0), &p(1, 0), &p(1, 5)));
        // disjoint collinear
        assert!(!segments_cross(&p(0, 0), &p(1, 0), &p(2, 0), &p(3, 0)));
        // identical segments
        assert!(segments_cross(&p(0, 0), &p(1, 1), &p(1, 1), &p(0, 0)));
    }

    #[test]
    fn sort_by_y_examples() {
        let s = PointSet::from_ints(&[(0, 5), (1, 1), (2, 3)]);
        assert_eq!(sort_by_y(&s).unwrap(), vec![1, 2, 0]);
        assert_eq!(sort_by_y(&PointSet::from_ints(&[(4, 4)])).unwrap(), vec![0]);
        assert!(matches!(sort_by_y(&PointSet::from_ints(&[(0, 1), (2, 1)])), Err(GeometryError::DuplicateY(_))));
        let g = generate_point_set(PointSetKind::General, 5, 3);
        let mut naive: Vec<usize> = (0..5).collect();
        for i in 0..5 {
            for j in 0..4 - i {
                if g.get(naive[j]).y > g.get(naive[j + 1]).y {
                    naive.swap(j, j + 1);
                }
            }
        }
        assert_eq!(sort_by_y(&g).unwrap(), naive);
    }

    #[test]
    fn generators_meet_their_classification() {
        for seed in 0..20 {
            for n in [1, 2, 3, 4, 7, 12] {
                let s = generate_point_set(PointSetKind::OneSidedConvex, n, seed);
                assert_eq!(s.len(), n);
                assert_eq!(is_convex_position(&s), Ok(true));
                assert_eq!(is_one_sided(&s), Ok(true), "seed {seed} n {n}");
                let c = generate_point_set(PointSetKind::Convex, n, seed);
                assert_eq!(is_convex_position(&c), Ok(true));
            }
        }
        let g = generate_point_set(PointSetKind::General, 30, 11);
        assert!(is_general_position(&g));
        assert_eq!(generate_point_set(PointSetKind::General, 50, 5), generate_point_set(PointSetKind::General, 50, 5));
        // convex generator should also produce sets that are not one-sided
        let two_sided = (0..20)
            .filter(|&seed| is_one_sided(&generate_point_set(PointSetKind::Convex, 8, seed)) == Ok(false))
            .count();
        assert!(two_sided > 0);
    }

    #[test]
    fn hull_drops_interior_points() {
        let s = PointSet::from_ints(&[(0, 0), (4, 0), (4, 4), (0, 4), (2, 2), (1, 3)]);
        let mut h = convex_hull(&s);
        h.sort();
        assert_eq!(h, vec![0, 1, 2, 3]);
    }
}
