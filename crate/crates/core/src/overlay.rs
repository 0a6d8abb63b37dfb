//! Overlay of two curves: general position and the list of crossings with
//! their signs and their cyclic orders along each curve.

use std::collections::{BTreeSet, HashMap, HashSet};

use num_traits::{One, Zero};
use serde::Serialize;

use crate::complex::SurfaceComplex;
use crate::curve::{boundary_xy, interleave, Chord, PLCurve, Rat};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Crossing {
    pub square: usize,
    pub a_chord: usize,
    pub b_chord: usize,
    /// Order of this crossing along its `a` chord, from the chord's entry.
    pub a_rank: usize,
    pub b_rank: usize,
    /// Sign of `det(tangent_a, tangent_b)` in square coordinates.
    pub sign: i32,
    pub a_pos: usize,
    pub b_pos: usize,
}

/// Crossings of two curves in general position, indexed by their position along `a`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IntersectionData {
    pub crossings: Vec<Crossing>,
    /// `b_order[k]` is the crossing at position `k` along `b`.
    pub b_order: Vec<usize>,
}

impl IntersectionData {
    pub fn count(&self) -> usize {
        self.crossings.len()
    }

    pub fn algebraic(&self) -> i64 {
        self.crossings.iter().map(|c| c.sign as i64).sum()
    }

    pub fn sign_uniform(&self) -> bool {
        self.crossings.windows(2).all(|w| w[0].sign == w[1].sign)
    }

    /// Crossing id at position `k` along `a` (identity, kept for symmetry with [`Self::b_order`]).
    pub fn a_order(&self, k: usize) -> usize {
        k
    }

    /// Exact coordinates of crossing `id` inside its square.
    pub fn point(&self, id: usize, a: &PLCurve, b: &PLCurve) -> (Rat, Rat) {
        let c = &self.crossings[id];
        segment_intersection(&a.chord(c.a_chord), &b.chord(c.b_chord))
    }
}

/// Exact intersection point of two crossing chords of one square.
pub fn segment_intersection(p: &Chord, q: &Chord) -> (Rat, Rat) {
    let (x1, y1) = boundary_xy(p.entry_side, &p.entry_t);
    let (x2, y2) = boundary_xy(p.exit_side, &p.exit_t);
    let (x3, y3) = boundary_xy(q.entry_side, &q.entry_t);
    let (x4, y4) = boundary_xy(q.exit_side, &q.exit_t);
    let denom = (x1 - x2) * (y3 - y4) - (y1 - y2) * (x3 - x4);
    let u = ((x1 - x3) * (y3 - y4) - (y1 - y3) * (x3 - x4)) / denom;
    (x1 + u * (x2 - x1), y1 + u * (y2 - y1))
}

/// Counter-clockwise boundary distance from `from` to `x`, in `[0, 4)`.
#[inline]
pub(crate) fn ccw_dist(x: &Rat, from: &Rat) -> Rat {
    let d = x - from;
    if d < Rat::zero() {
        d + Rat::from_integer(4)
    } else {
        d
    }
}

/// Sign of `det(tangent_p, tangent_q)` for two crossing chords.
#[inline]
pub(crate) fn crossing_sign(p: &Chord, q: &Chord) -> i32 {
    let (p0, p1) = (p.entry_pos(), p.exit_pos());
    // The boundary arc ccw from p's entry to its exit lies to the right of p.
    if ccw_dist(&q.exit_pos(), &p0) > ccw_dist(&p1, &p0) {
        1
    } else {
        -1
    }
}

/// Distance along `p` of its crossing with `q`, as a sortable boundary key.
#[inline]
fn order_key(p: &Chord, q: &Chord) -> Rat {
    let (p0, p1) = (p.entry_pos(), p.exit_pos());
    let span = ccw_dist(&p1, &p0);
    let (q0, q1) = (q.entry_pos(), q.exit_pos());
    let d0 = ccw_dist(&q0, &p0);
    if d0 < span {
        d0
    } else {
        ccw_dist(&q1, &p0)
    }
}

fn shared_points(a: &PLCurve, b: &PLCurve, complex: &SurfaceComplex) -> usize {
    let pa: HashSet<(usize, Rat)> = a.edge_points(complex).collect();
    b.edge_points(complex).filter(|p| pa.contains(p)).count()
}

pub fn in_general_position(a: &PLCurve, b: &PLCurve, complex: &SurfaceComplex) -> bool {
    shared_points(a, b, complex) == 0
}

/// Occupied parameters on each geometric edge, used to place new points
/// strictly between existing ones.
#[derive(Clone, Debug, Default)]
pub struct EdgeOccupancy {
    points: HashMap<usize, BTreeSet<Rat>>,
}

impl EdgeOccupancy {
    pub fn from_curves<'a>(curves: impl IntoIterator<Item = &'a PLCurve>, complex: &SurfaceComplex) -> Self {
        let mut occ = EdgeOccupancy::default();
        for c in curves {
            for (e, t) in c.edge_points(complex) {
                occ.insert(e, t);
            }
        }
        occ
    }

    pub fn insert(&mut self, edge: usize, t: Rat) {
        self.points.entry(edge).or_default().insert(t);
    }

    pub fn contains(&self, edge: usize, t: &Rat) -> bool {
        self.points.get(&edge).is_some_and(|s| s.contains(t))
    }

    /// Distance from `t` to the nearest occupied point (or edge end) in direction `dir`.
    pub fn gap(&self, edge: usize, t: &Rat, dir: i32) -> Rat {
        let set = self.points.get(&edge);
        if dir > 0 {
            let next = set
                .and_then(|s| s.range((std::ops::Bound::Excluded(*t), std::ops::Bound::Unbounded)).next().copied())
                .unwrap_or_else(Rat::one);
            next - t
        } else {
            let prev = set.and_then(|s| s.range(..*t).next_back().copied()).unwrap_or_else(Rat::zero);
            t - prev
        }
    }

    /// Two-sided gap: the distance to the nearest occupied point other than `t`.
    pub fn min_gap(&self, edge: usize, t: &Rat) -> Rat {
        let up = self.gap(edge, t, 1);
        let down = self.gap(edge, t, -1);
        up.min(down)
    }

    /// Places a new point half way from `t` to its nearest neighbor in
    /// direction `dir`, records it and returns it.
    pub fn place_offset(&mut self, edge: usize, t: &Rat, dir: i32) -> Rat {
        let half = self.gap(edge, t, dir) / Rat::from_integer(2);
        let out = if dir > 0 { t + half } else { t - half };
        self.insert(edge, out);
        out
    }
}

/// Perturbs `b` so it shares no edge point with `a`: every clashing point of
/// `b` moves to the left of `b` by half the gap to its nearest neighbor on
/// that side. A copy of `a` therefore becomes a parallel pushoff.
pub fn general_position(a: &PLCurve, b: &PLCurve, complex: &SurfaceComplex) -> (PLCurve, PLCurve) {
    (a.clone(), perturb_off(b, a, complex))
}

/// Returns `moving` perturbed off the edge points of `fixed`.
pub fn perturb_off(moving: &PLCurve, fixed: &PLCurve, complex: &SurfaceComplex) -> PLCurve {
    let fixed_pts: HashSet<(usize, Rat)> = fixed.edge_points(complex).collect();
    let mut occ = EdgeOccupancy::from_curves([fixed, moving], complex);
    let mut out = moving.clone();
    for p in out.points.iter_mut() {
        let e = complex.edge_of(p.square, p.side);
        if fixed_pts.contains(&(e, p.t)) {
            p.t = occ.place_offset(e, &p.t, p.side.left_sign());
        }
    }
    out
}

/// Crossings of `a` and `b`, which must share no edge point.
pub fn overlay(a: &PLCurve, b: &PLCurve, complex: &SurfaceComplex) -> Result<IntersectionData> {
    let shared = shared_points(a, b, complex);
    if shared > 0 {
        return Err(Error::NotGeneralPosition(format!("{shared} shared edge points")));
    }
    Ok(overlay_unchecked(a, b, complex.n()))
}

pub(crate) fn overlay_unchecked(a: &PLCurve, b: &PLCurve, n: usize) -> IntersectionData {
    let mut a_by_sq: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut b_by_sq: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (i, p) in a.points.iter().enumerate() {
        a_by_sq[p.square].push(i);
    }
    for (j, p) in b.points.iter().enumerate() {
        b_by_sq[p.square].push(j);
    }
    let a_chords: Vec<Chord> = a.chords().collect();
    let b_chords: Vec<Chord> = b.chords().collect();
    let a_pos: Vec<(Rat, Rat)> = a_chords.iter().map(|c| (c.entry_pos(), c.exit_pos())).collect();
    let b_pos: Vec<(Rat, Rat)> = b_chords.iter().map(|c| (c.entry_pos(), c.exit_pos())).collect();

    // (a_chord, key along a, b_chord, key along b, sign)
    let mut raw: Vec<(usize, Rat, usize, Rat, i32)> = Vec::new();
    for s in 0..n {
        for &i in &a_by_sq[s] {
            let (p0, p1) = &a_pos[i];
            for &j in &b_by_sq[s] {
                let (q0, q1) = &b_pos[j];
                if interleave(p0, p1, q0, q1) {
                    let (ca, cb) = (&a_chords[i], &b_chords[j]);
                    raw.push((i, order_key(ca, cb), j, order_key(cb, ca), crossing_sign(ca, cb)));
                }
            }
        }
    }
    let mut by_a: Vec<usize> = (0..raw.len()).collect();
    by_a.sort_by(|&x, &y| (raw[x].0, &raw[x].1).cmp(&(raw[y].0, &raw[y].1)));
    let mut by_b: Vec<usize> = (0..raw.len()).collect();
    by_b.sort_by(|&x, &y| (raw[x].2, &raw[x].3).cmp(&(raw[y].2, &raw[y].3)));

    let mut id_of_raw = vec![0; raw.len()];
    for (pos, &r) in by_a.iter().enumerate() {
        id_of_raw[r] = pos;
    }
    let mut b_pos_of_raw = vec![0; raw.len()];
    for (pos, &r) in by_b.iter().enumerate() {
        b_pos_of_raw[r] = pos;
    }
    let mut crossings = Vec::with_capacity(raw.len());
    let mut a_rank = 0;
    for (pos, &r) in by_a.iter().enumerate() {
        if pos > 0 && raw[by_a[pos - 1]].0 == raw[r].0 {
            a_rank += 1;
        } else {
            a_rank = 0;
        }
        crossings.push(Crossing {
            square: a.points[raw[r].0].square,
            a_chord: raw[r].0,
            b_chord: raw[r].2,
            a_rank,
            b_rank: 0,
            sign: raw[r].4,
            a_pos: pos,
            b_pos: b_pos_of_raw[r],
        });
    }
    let mut b_rank = 0;
    let mut b_order = Vec::with_capacity(raw.len());
    for (pos, &r) in by_b.iter().enumerate() {
        if pos > 0 && raw[by_b[pos - 1]].2 == raw[r].2 {
            b_rank += 1;
        } else {
            b_rank = 0;
        }
        let id = id_of_raw[r];
        crossings[id].b_rank = b_rank;
        b_order.push(id);
    }
    IntersectionData { crossings, b_order }
}

/// Signed crossing count after putting the pair in general position. This is
/// an isotopy invariant.
pub fn algebraic_intersection(a: &PLCurve, b: &PLCurve, complex: &SurfaceComplex) -> i64 {
    let (a, b) = general_position(a, b, complex);
    overlay_unchecked(&a, &b, complex.n()).algebraic()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::{core_curves, EdgePoint, Side};
    use crate::origami::{enumerate_one_one, Origami};

    #[test]
    fn torus_cores_cross_once_positively() {
        let c = SurfaceComplex::build(&Origami::torus()).unwrap();
        let (h, v) = core_curves(&c);
        let d = overlay(&h[0], &v[0], &c).unwrap();
        assert_eq!(d.count(), 1);
        assert_eq!(d.crossings[0].sign, 1);
        assert_eq!(d.point(0, &h[0], &v[0]), (Rat::new(1, 2), Rat::new(1, 2)));
    }

    #[test]
    fn one_one_cores_cross_n_times_with_equal_signs() {
        for n in 1..=5 {
            for o in enumerate_one_one(n, None) {
                let c = SurfaceComplex::build(&o).unwrap();
                let (h, v) = core_curves(&c);
                let d = overlay(&h[0], &v[0], &c).unwrap();
                assert_eq!(d.count(), n);
                assert!(d.sign_uniform());
                assert_eq!(d.algebraic(), n as i64);
            }
        }
    }

    #[test]
    fn pushoff_has_no_crossings() {
        for o in enumerate_one_one(4, None) {
            let c = SurfaceComplex::build(&o).unwrap();
            let (h, v) = core_curves(&c);
            for curve in [&h[0], &v[0]] {
                let (a, b) = general_position(curve, curve, &c);
                assert!(b.validate(&c).is_empty());
                assert_eq!(overlay(&a, &b, &c).unwrap().count(), 0);
            }
        }
    }

    #[test]
    fn general_position_leaves_transverse_pairs_alone() {
        let c = SurfaceComplex::build(&Origami::torus()).unwrap();
        let (h, v) = core_curves(&c);
        let (a, b) = general_position(&h[0], &v[0], &c);
        assert_eq!((a, b), (h[0].clone(), v[0].clone()));
    }

    #[test]
    fn single_shared_point_moves_by_half_gap() {
        let o = Origami::from_images(vec![1, 0], vec![0, 1]).unwrap();
        let c = SurfaceComplex::build(&o).unwrap();
        let a =
            PLCurve::new(vec![EdgePoint::new(0, Side::R, Rat::new(1, 2)), EdgePoint::new(1, Side::R, Rat::new(1, 2))]);
        let b =
            PLCurve::new(vec![EdgePoint::new(0, Side::R, Rat::new(1, 2)), EdgePoint::new(1, Side::R, Rat::new(1, 4))]);
        let (_, b2) = general_position(&a, &b, &c);
        // Leaving through R the left side is +t; nearest point above 1/2 is the edge end 1.
        assert_eq!(b2.points[0].t, Rat::new(3, 4));
        assert_eq!(b2.points[1].t, Rat::new(1, 4));
        assert!(overlay(&a, &b, &c).is_err());
    }

    #[test]
    fn reversal_flips_algebraic_sign() {
        for o in enumerate_one_one(5, Some(3)) {
            let c = SurfaceComplex::build(&o).unwrap();
            let (h, v) = core_curves(&c);
            let x = algebraic_intersection(&h[0], &v[0], &c);
            assert_eq!(algebraic_intersection(&h[0], &v[0].reversed(), &c), -x);
            assert_eq!(algebraic_intersection(&v[0], &h[0], &c), -x);
        }
    }
}
