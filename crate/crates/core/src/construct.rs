//! Constructive embedders.
//!
//! - [`embed_path_one_sided`]: all UPSEs of an oriented path on a one-sided
//!   convex set of equal size, built inductively section by section.
//! - [`embed_three_section`]: a UPSE of a three-section path whose middle
//!   section is the longest, on any general set of matching size.
//! - [`embed_caterpillar_monotone`] and [`embed_caterpillar`]: caterpillars with
//!   a monotone backbone on `n` points, and arbitrary caterpillars on
//!   `n * 2^(k-2)` points by recursion over the backbone sections.

use thiserror::Error;

use crate::digraph::{Caterpillar, OrientedPath};
use crate::geometry::{is_general_position, is_one_sided, orientation, GeometryError, Orientation, PointSet};
use crate::verify::Embedding;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConstructError {
    #[error("point set is not one-sided convex")]
    NotOneSided,
    #[error("point set is not in general position")]
    NotGeneral,
    #[error("graph has {vertices} vertices but the point set has {points} points")]
    SizeMismatch { vertices: usize, points: usize },
    #[error("path has the wrong section profile: {0}")]
    BadShape(String),
    #[error("caterpillar backbone is not monotone")]
    NotMonotoneBackbone,
    #[error("need at least {need} points, got {have}")]
    TooFewPoints { need: usize, have: usize },
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

fn size_check(vertices: usize, points: usize) -> Result<(), ConstructError> {
    if vertices == points {
        Ok(())
    } else {
        Err(ConstructError::SizeMismatch { vertices, points })
    }
}

fn sorted_by_y(s: &PointSet) -> Result<Vec<usize>, ConstructError> {
    crate::geometry::sort_by_y(s).map_err(|_| ConstructError::NotGeneral)
}

/// Lay path positions onto points given per-position y-ranks.
fn from_ranks(p: &OrientedPath, ranks: &[usize], by_y: &[usize]) -> Embedding {
    let mut mapping = vec![0; p.len()];
    for (pos, &r) in ranks.iter().enumerate() {
        mapping[p.vertex(pos)] = by_y[r];
    }
    Embedding::from_raw(mapping)
}

// ---------------------------------------------------------------------------
// Paths on one-sided convex sets

/// Every UPSE of `p` on the one-sided convex set `s` with `|s| = |p|`.
///
/// A path with `k` sections yields exactly `k` embeddings (one if the path is a
/// single vertex), sorted by mapping, with pairwise distinct images of the
/// first vertex.
pub fn embed_path_one_sided(p: &OrientedPath, s: &PointSet) -> Result<Vec<Embedding>, ConstructError> {
    size_check(p.len(), s.len())?;
    match is_one_sided(s) {
        Ok(true) => {}
        Ok(false) | Err(GeometryError::NotConvex) => return Err(ConstructError::NotOneSided),
        Err(_) => return Err(ConstructError::NotGeneral),
    }
    let by_y = sorted_by_y(s)?;
    let mut out: Vec<Embedding> = one_sided_ranks(p.forward()).iter().map(|r| from_ranks(p, r, &by_y)).collect();
    out.sort();
    Ok(out)
}

/// Rank assignments (position -> y-rank) of all UPSEs of the path with edge
/// directions `forward` on a one-sided convex set.
///
/// On such a set the drawing depends only on the y-ranks: the points lie on
/// one convex chain in y order, so two chords cross iff their ranks interleave.
pub fn one_sided_ranks(forward: &[bool]) -> Vec<Vec<usize>> {
    let n = forward.len() + 1;
    let Some(&last) = forward.last() else {
        return vec![vec![0]];
    };
    if !last {
        let flipped: Vec<bool> = forward.iter().map(|f| !f).collect();
        return one_sided_ranks(&flipped).into_iter().map(|r| r.into_iter().map(|x| n - 1 - x).collect()).collect();
    }
    // position of v_l, the switch preceding the last vertex
    let l = forward.iter().rposition(|&f| !f).map_or(0, |i| i + 1);
    if l == 0 {
        return vec![(0..n).collect()];
    }
    let grown = n - (l + 1);
    let mut out = Vec::new();
    for g in one_sided_ranks(&forward[..l]) {
        let i = g[l];
        let mut r: Vec<usize> = g.iter().map(|&x| if x > i { x + grown } else { x }).collect();
        r.extend(i + 1..=i + grown);
        out.push(r);
        // the prefix's last section is backward, so one prefix embedding has v_l lowest
        if i == 0 {
            let mut ext = g.clone();
            ext.extend(l + 1..n);
            out.push(ext);
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Three-section paths

/// A UPSE of a path with sections of `a`, `b`, `c` vertices (`b >= a, c`) on a
/// general set of `a + b + c - 2` points.
pub fn embed_three_section(p: &OrientedPath, s: &PointSet) -> Result<Embedding, ConstructError> {
    size_check(p.len(), s.len())?;
    let dec = p.sections();
    if dec.sections.len() != 3 {
        return Err(ConstructError::BadShape(format!("expected 3 sections, found {}", dec.sections.len())));
    }
    let lens: Vec<usize> = dec.sections.iter().map(|x| x.len()).collect();
    if lens[1] < lens[0] || lens[1] < lens[2] {
        return Err(ConstructError::BadShape(format!(
            "middle section has {} vertices but the outer ones have {} and {}",
            lens[1], lens[0], lens[2]
        )));
    }
    if !is_general_position(s) {
        return Err(ConstructError::NotGeneral);
    }
    let path = if dec.sections[0].forward { p.clone() } else { p.reverse() };
    let (a, b, c) = if dec.sections[0].forward { (lens[0], lens[1], lens[2]) } else { (lens[2], lens[1], lens[0]) };

    let (bot, top) = (s.lowest().unwrap(), s.highest().unwrap());
    let mut left = 0;
    let mut right = 0;
    for q in 0..s.len() {
        if q == bot || q == top {
            continue;
        }
        match orientation(s.get(bot), s.get(top), s.get(q)) {
            Orientation::CounterClockwise => left += 1,
            Orientation::Clockwise => right += 1,
            Orientation::Collinear => return Err(ConstructError::NotGeneral),
        }
    }
    // closed half-planes both contain b(S) and t(S)
    let (s1, s3) = if left + 2 >= a + c {
        three_case_one(s, bot, top, a, c)?
    } else if right + 2 >= a + c {
        three_case_one(&s.reflect_x(), bot, top, a, c)?
    } else {
        three_case_two(s, bot, top, a, c)?
    };
    let mut in_s2 = vec![true; s.len()];
    for &q in s1.iter().chain(&s3) {
        in_s2[q] = false;
    }
    in_s2[bot] = true;
    in_s2[top] = true;
    let by_y = sorted_by_y(s)?;
    let asc = |set: &[usize]| -> Vec<usize> {
        let mut v = set.to_vec();
        v.sort_by(|&i, &j| s.get(i).y.cmp(&s.get(j).y));
        v
    };
    let s2: Vec<usize> = by_y.iter().rev().copied().filter(|&q| in_s2[q]).collect();
    let (s1, s3) = (asc(&s1), asc(&s3));
    if s1.len() != a || s2.len() != b || s3.len() != c {
        return Err(ConstructError::Internal("three-section split has wrong sizes".into()));
    }
    let mut mapping = vec![usize::MAX; path.len()];
    let runs = [(0, &s1), (a - 1, &s2), (a + b - 2, &s3)];
    for (start, pts) in runs {
        for (off, &q) in pts.iter().enumerate() {
            let v = path.vertex(start + off);
            if mapping[v] != usize::MAX && mapping[v] != q {
                return Err(ConstructError::Internal("sections disagree on a switch".into()));
            }
            mapping[v] = q;
        }
    }
    Ok(Embedding::from_raw(mapping))
}

/// The first `take` of `candidates` hit by a ray rotating around `pivot`.
///
/// All candidates lie strictly on one side of the horizontal line through the
/// pivot, so angular order is a total order given by orientation signs.
fn sweep(
    s: &PointSet,
    pivot: usize,
    candidates: &[usize],
    ccw: bool,
    take: usize,
) -> Result<Vec<usize>, ConstructError> {
    let mut tie = false;
    let mut v = candidates.to_vec();
    v.sort_by(|&i, &j| {
        use std::cmp::Ordering::*;
        match (orientation(s.get(pivot), s.get(i), s.get(j)), ccw) {
            (Orientation::Collinear, _) => {
                tie |= i != j;
                Equal
            }
            (Orientation::CounterClockwise, true) | (Orientation::Clockwise, false) => Less,
            _ => Greater,
        }
    });
    if tie {
        return Err(ConstructError::NotGeneral);
    }
    if v.len() < take {
        return Err(ConstructError::Internal("a ray sweep ran out of points".into()));
    }
    v.truncate(take);
    Ok(v)
}

fn strict_side(s: &PointSet, bot: usize, top: usize, side: Orientation) -> Vec<usize> {
    (0..s.len()).filter(|&q| q != bot && q != top && orientation(s.get(bot), s.get(top), s.get(q)) == side).collect()
}

/// `P1` on `t(S)` plus points swept counter-clockwise from a left-heading ray
/// at `t(S)`.
fn three_first(s: &PointSet, bot: usize, top: usize, a: usize) -> Result<Vec<usize>, ConstructError> {
    let left = strict_side(s, bot, top, Orientation::CounterClockwise);
    let mut s1 = sweep(s, top, &left, true, a - 1)?;
    s1.push(top);
    Ok(s1)
}

/// At least `a + c` points in the closed left half-plane.
fn three_case_one(
    s: &PointSet,
    bot: usize,
    top: usize,
    a: usize,
    c: usize,
) -> Result<(Vec<usize>, Vec<usize>), ConstructError> {
    let s1 = three_first(s, bot, top, a)?;
    let rest: Vec<usize> =
        strict_side(s, bot, top, Orientation::CounterClockwise).into_iter().filter(|q| !s1.contains(q)).collect();
    let mut s3 = sweep(s, bot, &rest, false, c - 1)?;
    s3.push(bot);
    Ok((s1, s3))
}

/// Both closed half-planes hold fewer than `a + c` points.
fn three_case_two(
    s: &PointSet,
    bot: usize,
    top: usize,
    a: usize,
    c: usize,
) -> Result<(Vec<usize>, Vec<usize>), ConstructError> {
    let s1 = three_first(s, bot, top, a)?;
    let right = strict_side(s, bot, top, Orientation::Clockwise);
    let mut s3 = sweep(s, bot, &right, true, c - 1)?;
    s3.push(bot);
    Ok((s1, s3))
}

// ---------------------------------------------------------------------------
// Caterpillars

/// Leaves forced below / above backbone vertex `i` in a frame that is
/// y-reflected when `flipped`.
fn below(c: &Caterpillar, i: usize, flipped: bool) -> &[usize] {
    if flipped {
        c.out_leaves(i)
    } else {
        c.in_leaves(i)
    }
}

fn above(c: &Caterpillar, i: usize, flipped: bool) -> &[usize] {
    below(c, i, !flipped)
}

fn part_size(c: &Caterpillar, range: std::ops::Range<usize>) -> usize {
    range.map(|i| 1 + c.a(i) + c.b(i)).sum()
}

/// Place backbone vertices `range` (a frame-forward run) and their leaves on
/// `frame_pts`, given in frame-ascending order: each backbone vertex directly
/// above its below-leaves and directly below its above-leaves.
fn place_monotone(
    c: &Caterpillar,
    range: std::ops::Range<usize>,
    frame_pts: &[usize],
    flipped: bool,
    mapping: &mut [usize],
) {
    let mut it = frame_pts.iter().copied();
    for i in range {
        for &leaf in below(c, i, flipped) {
            mapping[leaf] = it.next().unwrap();
        }
        mapping[c.backbone()[i]] = it.next().unwrap();
        for &leaf in above(c, i, flipped) {
            mapping[leaf] = it.next().unwrap();
        }
    }
}

/// Edge directions along the backbone, `true` where `v_i -> v_{i+1}`.
fn backbone_forward(c: &Caterpillar) -> Vec<bool> {
    c.backbone_path().forward().to_vec()
}

/// A UPSE of a caterpillar whose backbone is a single section, on `n` general
/// points.
pub fn embed_caterpillar_monotone(c: &Caterpillar, s: &PointSet) -> Result<Embedding, ConstructError> {
    size_check(c.n(), s.len())?;
    let fwd = backbone_forward(c);
    if fwd.windows(2).any(|w| w[0] != w[1]) {
        return Err(ConstructError::NotMonotoneBackbone);
    }
    if !is_general_position(s) {
        return Err(ConstructError::NotGeneral);
    }
    let flipped = fwd.first() == Some(&false);
    let mut pts = sorted_by_y(s)?;
    if flipped {
        pts.reverse();
    }
    let mut mapping = vec![usize::MAX; c.n()];
    place_monotone(c, 0..c.backbone().len(), &pts, flipped, &mut mapping);
    Ok(Embedding::from_raw(mapping))
}

/// Points sufficient for a caterpillar on `n` vertices with `k` backbone switches.
pub fn caterpillar_bound(n: usize, k: usize) -> usize {
    n << (k.max(2) - 2)
}

/// A UPSE of `c` on a subset of the general set `s`, where
/// `|s| >= n * 2^(k-2)` and `k` is the number of backbone switches.
pub fn embed_caterpillar(c: &Caterpillar, s: &PointSet) -> Result<Embedding, ConstructError> {
    embed_caterpillar_traced(c, s).map(|(e, _)| e)
}

/// Like [`embed_caterpillar`], also reporting the recursion depth (`k - 1`).
pub fn embed_caterpillar_traced(c: &Caterpillar, s: &PointSet) -> Result<(Embedding, usize), ConstructError> {
    let k = c.backbone_switches();
    let need = caterpillar_bound(c.n(), k);
    if s.len() < need {
        return Err(ConstructError::TooFewPoints { need, have: s.len() });
    }
    if !is_general_position(s) {
        return Err(ConstructError::NotGeneral);
    }
    let by_y = sorted_by_y(s)?;
    if k <= 2 {
        let lowest: Vec<usize> = by_y[..c.n()].to_vec();
        let e = embed_caterpillar_monotone(c, &s.subset(&lowest))?;
        let mapping = e.mapping().iter().map(|&q| lowest[q]).collect();
        return Ok((Embedding::from_raw(mapping), 1));
    }
    let fwd = backbone_forward(c);
    let mut mapping = vec![usize::MAX; c.n()];
    let mut depth = 0;
    caterpillar_step(c, s, &fwd, 0, by_y, !fwd[0], &mut mapping, &mut depth)?;
    Ok((Embedding::from_raw(mapping), depth))
}

/// Embed the sub-caterpillar from backbone index `lo` on `pts` (ascending y),
/// with `v_lo` on the frame-`(|below|+1)`-th lowest point.
#[allow(clippy::too_many_arguments)]
fn caterpillar_step(
    c: &Caterpillar,
    s: &PointSet,
    fwd: &[bool],
    lo: usize,
    mut pts: Vec<usize>,
    flipped: bool,
    mapping: &mut [usize],
    depth: &mut usize,
) -> Result<(), ConstructError> {
    *depth += 1;
    if flipped {
        pts.reverse();
    }
    let r = c.backbone().len();
    // second switch: end of the first section
    let Some(l) = (lo + 1..r.saturating_sub(1)).find(|&i| fwd[i] != fwd[lo]) else {
        let n = part_size(c, lo..r);
        place_monotone(c, lo..r, &pts[..n], flipped, mapping);
        return Ok(());
    };
    let c1 = part_size(c, lo..l);
    place_monotone(c, lo..l, &pts[..c1], flipped, mapping);
    let p = mapping[c.backbone()[l - 1]];
    let rest = &pts[c1..];
    let above_l = above(c, l, flipped).len();
    let Some(pi) = rest.len().checked_sub(above_l + 1) else {
        return Err(ConstructError::Internal("not enough points above the second switch".into()));
    };
    let pp = rest[pi];
    let (mut left, mut right) = (Vec::new(), Vec::new());
    for &q in rest.iter().filter(|&&q| q != pp) {
        match orientation(s.get(p), s.get(pp), s.get(q)) {
            Orientation::CounterClockwise => left.push(q),
            Orientation::Clockwise => right.push(q),
            Orientation::Collinear => {
                return Err(ConstructError::Internal("a point lies on the splitting line".into()))
            }
        }
    }
    let mut side = if left.len() >= right.len() { left } else { right };
    let n_rest = part_size(c, l..r);
    let switches_rest = 2 + (l..r - 2).filter(|&i| fwd[i] != fwd[i + 1]).count();
    if side.len() < caterpillar_bound(n_rest, switches_rest) {
        return Err(ConstructError::Internal("split side is below the size bound".into()));
    }
    side.push(pp);
    side.extend(rest[pi + 1..].iter().copied());
    side.sort_unstable();
    side.dedup();
    side.sort_by(|&i, &j| s.get(i).y.cmp(&s.get(j).y));
    caterpillar_step(c, s, fwd, l, side, !flipped, mapping, depth)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::{enumerate_paths, generate_caterpillar, Digraph};
    use crate::enumerate::enumerate_upse;
    use crate::geometry::{generate_point_set, PointSetKind};
    use crate::verify::is_upse;

    #[test]
    fn single_section_gives_sorted_placement() {
        let s = generate_point_set(PointSetKind::OneSidedConvex, 5, 1);
        let p = OrientedPath::from_signs("++++").unwrap();
        let out = embed_path_one_sided(&p, &s).unwrap();
        assert_eq!(out.len(), 1);
        assert_eq!(out[0].mapping(), sorted_by_y(&s).unwrap().as_slice());
    }

    #[test]
    fn one_sided_matches_enumeration() {
        for n in 2..=6 {
            let s = generate_point_set(PointSetKind::OneSidedConvex, n, n as u64);
            for p in enumerate_paths(n) {
                let got = embed_path_one_sided(&p, &s).unwrap();
                assert_eq!(got.len(), p.section_count(), "{}", p.signs());
                assert_eq!(got, enumerate_upse(&p.to_digraph(), &s, &[]), "{}", p.signs());
                let mut firsts: Vec<usize> = got.iter().map(|e| e.point_of(p.vertex(0))).collect();
                firsts.sort_unstable();
                firsts.dedup();
                assert_eq!(firsts.len(), got.len());
            }
        }
    }

    #[test]
    fn one_sided_seven() {
        let s = generate_point_set(PointSetKind::OneSidedConvex, 7, 70);
        let p = OrientedPath::from_signs("+-+--+").unwrap();
        let got = embed_path_one_sided(&p, &s).unwrap();
        assert_eq!(got.len(), 5);
        assert!(got.iter().all(|e| is_upse(&p.to_digraph(), &s, e)));
    }

    #[test]
    fn one_sided_rejections() {
        let p = OrientedPath::from_signs("+-+").unwrap();
        let general = PointSet::from_ints(&[(0, 0), (10, 1), (5, 3), (1, 7)]);
        assert_eq!(embed_path_one_sided(&p, &general), Err(ConstructError::NotOneSided));
        let two_sided = PointSet::from_ints(&[(0, 0), (-2, 2), (2, 3), (0, 5)]);
        assert_eq!(embed_path_one_sided(&p, &two_sided), Err(ConstructError::NotOneSided));
        let small = generate_point_set(PointSetKind::OneSidedConvex, 3, 0);
        assert!(matches!(embed_path_one_sided(&p, &small), Err(ConstructError::SizeMismatch { .. })));
    }

    #[test]
    fn three_section_small_cases() {
        let p = OrientedPath::from_signs("+--+").unwrap();
        for seed in 0..20 {
            let s = generate_point_set(PointSetKind::General, 5, seed);
            let e = embed_three_section(&p, &s).unwrap();
            assert!(is_upse(&p.to_digraph(), &s, &e), "seed {seed}");
        }
        let q = OrientedPath::from_signs("+-+").unwrap();
        for seed in 0..10 {
            let s = generate_point_set(PointSetKind::OneSidedConvex, 4, seed);
            let e = embed_three_section(&q, &s).unwrap();
            assert!(enumerate_upse(&q.to_digraph(), &s, &[]).contains(&e));
        }
    }

    #[test]
    fn three_section_backward_start() {
        let p = OrientedPath::from_signs("-++--").unwrap();
        for seed in 0..20 {
            let s = generate_point_set(PointSetKind::General, 6, seed);
            let e = embed_three_section(&p, &s).unwrap();
            assert!(is_upse(&p.to_digraph(), &s, &e), "seed {seed}");
        }
    }

    #[test]
    fn three_section_rejections() {
        let s = generate_point_set(PointSetKind::General, 5, 0);
        let long_outer = OrientedPath::from_signs("++-+").unwrap();
        assert!(matches!(embed_three_section(&long_outer, &s), Err(ConstructError::BadShape(_))));
        let two = OrientedPath::from_signs("++--").unwrap();
        assert!(matches!(embed_three_section(&two, &s), Err(ConstructError::BadShape(_))));
        let collinear = PointSet::from_ints(&[(0, 0), (1, 1), (2, 2), (5, 3), (-4, 4)]);
        let p = OrientedPath::from_signs("+--+").unwrap();
        assert_eq!(embed_three_section(&p, &collinear), Err(ConstructError::NotGeneral));
    }

    #[test]
    fn monotone_formula_example() {
        // v1 -> v2, leaf 2 -> v1, v2 -> leaf 3
        let g = Digraph::new(4, vec![(0, 1), (2, 0), (1, 3)]).unwrap();
        let c = Caterpillar::from_backbone(g.clone(), vec![0, 1]).unwrap();
        let s = generate_point_set(PointSetKind::General, 4, 5);
        let by_y = sorted_by_y(&s).unwrap();
        let e = embed_caterpillar_monotone(&c, &s).unwrap();
        assert_eq!(e.point_of(0), by_y[1]);
        assert_eq!(e.point_of(1), by_y[2]);
        assert!(is_upse(&g, &s, &e));
    }

    #[test]
    fn monotone_leafless_is_sorted() {
        let p = OrientedPath::from_signs("-----").unwrap();
        let c = Caterpillar::from_backbone(p.to_digraph(), p.order().to_vec()).unwrap();
        let s = generate_point_set(PointSetKind::General, 6, 2);
        let mut by_y = sorted_by_y(&s).unwrap();
        by_y.reverse();
        assert_eq!(embed_caterpillar_monotone(&c, &s).unwrap().mapping(), by_y.as_slice());
    }

    #[test]
    fn monotone_random_in_enumeration() {
        for seed in 0..15 {
            let c = generate_caterpillar(7, 2, seed);
            let s = generate_point_set(PointSetKind::General, 7, seed + 100);
            let e = embed_caterpillar_monotone(&c, &s).unwrap();
            assert!(enumerate_upse(c.graph(), &s, &[]).contains(&e), "seed {seed}");
        }
    }

    #[test]
    fn monotone_rejects_switching_backbone() {
        let p = OrientedPath::from_signs("+-").unwrap();
        let c = Caterpillar::from_backbone(p.to_digraph(), p.order().to_vec()).unwrap();
        let s = generate_point_set(PointSetKind::General, 3, 0);
        assert_eq!(embed_caterpillar_monotone(&c, &s), Err(ConstructError::NotMonotoneBackbone));
    }

    #[test]
    fn recursive_caterpillars() {
        for seed in 0..30 {
            let k = 3 + (seed as usize % 2);
            let n = 8 + seed as usize % 4;
            let c = generate_caterpillar(n, k, seed);
            let s = generate_point_set(PointSetKind::General, caterpillar_bound(n, k), seed);
            let (e, depth) = embed_caterpillar_traced(&c, &s).unwrap();
            assert!(is_upse(c.graph(), &s, &e), "seed {seed}");
            assert_eq!(depth, k - 1);
        }
    }

    #[test]
    fn leafless_path_uses_exactly_its_vertices() {
        let p = OrientedPath::from_signs("++---").unwrap();
        let c = Caterpillar::from_backbone(p.to_digraph(), p.order().to_vec()).unwrap();
        assert_eq!(c.backbone_switches(), 3);
        for seed in 0..10 {
            let s = generate_point_set(PointSetKind::General, 12, seed);
            let e = embed_caterpillar(&c, &s).unwrap();
            assert!(is_upse(c.graph(), &s, &e));
            let mut used = e.mapping().to_vec();
            used.sort_unstable();
            used.dedup();
            assert_eq!(used.len(), 6);
        }
    }

    #[test]
    fn too_few_points() {
        let c = generate_caterpillar(8, 3, 1);
        let s = generate_point_set(PointSetKind::General, 15, 1);
        assert_eq!(embed_caterpillar(&c, &s), Err(ConstructError::TooFewPoints { need: 16, have: 15 }));
    }
}
