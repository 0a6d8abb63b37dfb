//! Piecewise-linear simple closed curves on an origami.
//!
//! A curve is a cyclic list of *exits*: `(square, side, t)` says the curve
//! leaves `square` through `side` at parameter `t`. The next chord lies in
//! the neighboring square and enters through the opposite side at the same
//! `t`. On left/right sides `t` is the height, on top/bottom sides it is the
//! horizontal coordinate, so `t` agrees on both copies of a glued edge.
//!
//! Inside a square every chord is a straight segment. Two chords in a convex
//! square cross exactly when their endpoints interleave along the boundary, so
//! all crossing questions reduce to comparisons of boundary positions.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet, VecDeque};
use std::fmt;

use num_rational::Ratio;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::complex::SurfaceComplex;
use crate::error::{Error, Result};

pub type Rat = Ratio<i128>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Side {
    L,
    R,
    T,
    B,
}

impl Side {
    pub const ALL: [Side; 4] = [Side::B, Side::R, Side::T, Side::L];

    pub fn opposite(self) -> Side {
        match self {
            Side::L => Side::R,
            Side::R => Side::L,
            Side::T => Side::B,
            Side::B => Side::T,
        }
    }

    /// Sign of the `t` direction that lies to the left of a curve leaving through this side.
    pub fn left_sign(self) -> i32 {
        match self {
            Side::R | Side::B => 1,
            Side::L | Side::T => -1,
        }
    }

    pub fn parse(s: &str) -> Option<Side> {
        match s {
            "L" => Some(Side::L),
            "R" => Some(Side::R),
            "T" => Some(Side::T),
            "B" => Some(Side::B),
            _ => None,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Side::L => "L",
            Side::R => "R",
            Side::T => "T",
            Side::B => "B",
        }
    }
}

/// Counter-clockwise boundary position in `[0, 4)`: bottom, right, top, left.
pub fn boundary_pos(side: Side, t: &Rat) -> Rat {
    match side {
        Side::B => *t,
        Side::R => Rat::from_integer(1) + t,
        Side::T => Rat::from_integer(3) - t,
        Side::L => Rat::from_integer(4) - t,
    }
}

/// Planar coordinates of a boundary point of the unit square.
pub fn boundary_xy(side: Side, t: &Rat) -> (Rat, Rat) {
    match side {
        Side::B => (*t, Rat::zero()),
        Side::R => (Rat::one(), *t),
        Side::T => (*t, Rat::one()),
        Side::L => (Rat::zero(), *t),
    }
}

/// The curve leaves `square` through `side` at parameter `t`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct EdgePoint {
    pub square: usize,
    pub side: Side,
    pub t: Rat,
}

impl EdgePoint {
    pub fn new(square: usize, side: Side, t: Rat) -> Self {
        EdgePoint { square, side, t }
    }
}

/// A chord of a curve inside one square.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Chord {
    pub square: usize,
    pub entry_side: Side,
    pub entry_t: Rat,
    pub exit_side: Side,
    pub exit_t: Rat,
}

impl Chord {
    pub fn entry_pos(&self) -> Rat {
        boundary_pos(self.entry_side, &self.entry_t)
    }

    pub fn exit_pos(&self) -> Rat {
        boundary_pos(self.exit_side, &self.exit_t)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PLCurve {
    pub points: Vec<EdgePoint>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CurveViolation {
    Empty,
    SquareOutOfRange { index: usize },
    ParameterOutOfRange { index: usize },
    Discontinuous { index: usize, expected: usize },
    SameSideChord { index: usize },
    RepeatedPoint { index: usize },
    Crossing { square: usize, first: usize, second: usize },
}

impl fmt::Display for CurveViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CurveViolation::Empty => write!(f, "curve has no points"),
            CurveViolation::SquareOutOfRange { index } => write!(f, "point {index}: square out of range"),
            CurveViolation::ParameterOutOfRange { index } => write!(f, "point {index}: t not in (0,1)"),
            CurveViolation::Discontinuous { index, expected } => {
                write!(f, "point {index}: chord should lie in square {expected}")
            }
            CurveViolation::SameSideChord { index } => {
                write!(f, "chord {index} enters and leaves through the same side")
            }
            CurveViolation::RepeatedPoint { index } => write!(f, "point {index} repeats an earlier edge point"),
            CurveViolation::Crossing { square, first, second } => {
                write!(f, "chords {first} and {second} cross inside square {square}")
            }
        }
    }
}

impl PLCurve {
    pub fn new(points: Vec<EdgePoint>) -> Self {
        PLCurve { points }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Chord `i` lies in `points[i].square`, from the previous exit to exit `i`.
    pub fn chord(&self, i: usize) -> Chord {
        let k = self.points.len();
        let prev = &self.points[(i + k - 1) % k];
        let cur = &self.points[i];
        Chord {
            square: cur.square,
            entry_side: prev.side.opposite(),
            entry_t: prev.t,
            exit_side: cur.side,
            exit_t: cur.t,
        }
    }

    pub fn chords(&self) -> impl Iterator<Item = Chord> + '_ {
        (0..self.points.len()).map(move |i| self.chord(i))
    }

    /// The same curve traversed backwards.
    pub fn reversed(&self) -> PLCurve {
        let k = self.points.len();
        let points = (0..k)
            .rev()
            .map(|i| {
                let prev = &self.points[(i + k - 1) % k];
                EdgePoint::new(self.points[i].square, prev.side.opposite(), prev.t)
            })
            .collect();
        PLCurve { points }
    }

    pub fn validate(&self, complex: &SurfaceComplex) -> Vec<CurveViolation> {
        let mut report = Vec::new();
        let k = self.points.len();
        if k == 0 {
            report.push(CurveViolation::Empty);
            return report;
        }
        let n = complex.n();
        for (i, p) in self.points.iter().enumerate() {
            if p.square >= n {
                report.push(CurveViolation::SquareOutOfRange { index: i });
            }
            if p.t <= Rat::zero() || p.t >= Rat::one() {
                report.push(CurveViolation::ParameterOutOfRange { index: i });
            }
        }
        if !report.is_empty() {
            return report;
        }
        for i in 0..k {
            let prev = &self.points[(i + k - 1) % k];
            let expected = complex.neighbor(prev.square, prev.side);
            if expected != self.points[i].square {
                report.push(CurveViolation::Discontinuous { index: i, expected });
            }
            if prev.side.opposite() == self.points[i].side {
                report.push(CurveViolation::SameSideChord { index: i });
            }
        }
        if !report.is_empty() {
            return report;
        }
        let mut seen = HashMap::new();
        for (i, p) in self.points.iter().enumerate() {
            if seen.insert((complex.edge_of(p.square, p.side), p.t), i).is_some() {
                report.push(CurveViolation::RepeatedPoint { index: i });
            }
        }
        if !report.is_empty() {
            return report;
        }
        let mut by_square: Vec<Vec<usize>> = vec![Vec::new(); n];
        for i in 0..k {
            by_square[self.points[i].square].push(i);
        }
        for (s, idx) in by_square.iter().enumerate() {
            if let Some((a, b)) = first_crossing_pair(idx.iter().map(|&i| (i, self.chord(i)))) {
                report.push(CurveViolation::Crossing { square: s, first: a, second: b });
            }
        }
        report
    }

    pub fn check_on(&self, complex: &SurfaceComplex) -> Result<()> {
        match self.validate(complex).first() {
            None => Ok(()),
            Some(v) => Err(Error::InvalidCurve(v.to_string())),
        }
    }

    /// Geometric edge points `(edge, t)` of this curve.
    pub fn edge_points<'a>(&'a self, complex: &'a SurfaceComplex) -> impl Iterator<Item = (usize, Rat)> + 'a {
        self.points.iter().map(move |p| (complex.edge_of(p.square, p.side), p.t))
    }

    /// Removes chords that enter and leave a square through the same side by
    /// pushing them across that side, innermost first. This is an isotopy.
    pub fn normalized(&self, complex: &SurfaceComplex) -> Result<PLCurve> {
        normalize(self, complex)
    }

    /// Replaces every `t` by its rank on its edge, `(rank + 1) / (count + 1)`.
    /// The relative order of points on each edge is kept, so this is an isotopy.
    pub fn renormalized(&self, complex: &SurfaceComplex) -> PLCurve {
        let mut out = vec![self.clone()];
        renormalize_jointly(&mut out, complex);
        out.pop().unwrap()
    }
}

/// Renormalizes several curves at once, preserving the joint order of their
/// points on every edge (and therefore every crossing pattern).
pub fn renormalize_jointly(curves: &mut [PLCurve], complex: &SurfaceComplex) {
    let mut per_edge: BTreeMap<usize, BTreeSet<Rat>> = BTreeMap::new();
    for c in curves.iter() {
        for (e, t) in c.edge_points(complex) {
            per_edge.entry(e).or_default().insert(t);
        }
    }
    let rank: HashMap<(usize, Rat), Rat> = per_edge
        .iter()
        .flat_map(|(&e, ts)| {
            let denom = ts.len() as i128 + 1;
            ts.iter().enumerate().map(move |(r, &t)| ((e, t), Rat::new(r as i128 + 1, denom)))
        })
        .collect();
    for c in curves.iter_mut() {
        for p in c.points.iter_mut() {
            let e = complex.edge_of(p.square, p.side);
            p.t = rank[&(e, p.t)];
        }
    }
}

/// Whether chords `(p0, p1)` and `(q0, q1)` interleave along the boundary.
#[inline]
pub fn interleave(p0: &Rat, p1: &Rat, q0: &Rat, q1: &Rat) -> bool {
    let (lo, hi) = if p0 < p1 { (p0, p1) } else { (p1, p0) };
    let inside = |x: &Rat| lo < x && x < hi;
    inside(q0) != inside(q1)
}

/// Checks a family of chords inside one square for pairwise crossings using a
/// parenthesis scan of their endpoints. Returns a crossing pair if any.
pub(crate) fn first_crossing_pair(chords: impl Iterator<Item = (usize, Chord)>) -> Option<(usize, usize)> {
    let mut ends: Vec<(Rat, usize)> = Vec::new();
    for (i, c) in chords {
        ends.push((c.entry_pos(), i));
        ends.push((c.exit_pos(), i));
    }
    ends.sort();
    let mut open: Vec<usize> = Vec::new();
    let mut opened = HashSet::new();
    for (_, i) in ends {
        if !opened.insert(i) {
            let top = *open.last().unwrap();
            if top != i {
                return Some((top.min(i), top.max(i)));
            }
            open.pop();
        } else {
            open.push(i);
        }
    }
    None
}

fn normalize(curve: &PLCurve, complex: &SurfaceComplex) -> Result<PLCurve> {
    let k = curve.points.len();
    if k == 0 {
        return Err(Error::InvalidCurve("empty curve".into()));
    }
    let pts = &curve.points;
    let mut next: Vec<usize> = (0..k).map(|i| (i + 1) % k).collect();
    let mut prev: Vec<usize> = (0..k).map(|i| (i + k - 1) % k).collect();
    let mut alive = vec![true; k];
    let mut live = k;
    let mut on_edge: HashMap<usize, BTreeSet<(Rat, usize)>> = HashMap::new();
    for (i, p) in pts.iter().enumerate() {
        on_edge.entry(complex.edge_of(p.square, p.side)).or_default().insert((p.t, i));
    }
    let same_side = |i: usize, prev: &[usize]| pts[prev[i]].side.opposite() == pts[i].side;
    let mut queue: VecDeque<usize> = (0..k).filter(|&i| same_side(i, &prev)).collect();
    let mut stalls = 0usize;
    while let Some(i) = queue.pop_front() {
        if !alive[i] || !same_side(i, &prev) {
            continue;
        }
        if live <= 2 {
            return Err(Error::InvalidCurve("curve bounds a disc across an edge".into()));
        }
        let p = prev[i];
        let e = complex.edge_of(pts[i].square, pts[i].side);
        let (lo, hi) = if pts[p].t < pts[i].t { (pts[p].t, pts[i].t) } else { (pts[i].t, pts[p].t) };
        let set = &on_edge[&e];
        let between = set.range((lo, usize::MAX)..(hi, 0)).next().is_some();
        if between {
            stalls += 1;
            if stalls > 2 * queue.len() + 2 {
                return Err(Error::InvalidCurve("edge-return normalization stalled".into()));
            }
            queue.push_back(i);
            continue;
        }
        stalls = 0;
        let set = on_edge.get_mut(&e).unwrap();
        set.remove(&(pts[p].t, p));
        set.remove(&(pts[i].t, i));
        alive[p] = false;
        alive[i] = false;
        live -= 2;
        let a = prev[p];
        let b = next[i];
        next[a] = b;
        prev[b] = a;
        queue.push_back(b);
    }
    let start = (0..k).find(|&i| alive[i]).expect("at least one point survives");
    let mut out = Vec::with_capacity(live);
    let mut i = start;
    loop {
        out.push(pts[i]);
        i = next[i];
        if i == start {
            break;
        }
    }
    Ok(PLCurve { points: out })
}

/// Exits crossed when walking along `curve` from a point on chord `from` to
/// a point on chord `to`. Ranks order points along one chord in the curve's
/// direction; equal chords with the start behind the end give the whole loop.
pub(crate) fn arc_exits(
    curve: &PLCurve,
    (from, from_rank): (usize, usize),
    (to, to_rank): (usize, usize),
    forward: bool,
) -> Vec<EdgePoint> {
    let k = curve.points.len();
    if forward {
        let m = if from == to {
            if from_rank < to_rank {
                0
            } else {
                k
            }
        } else {
            (to + k - from) % k
        };
        (0..m).map(|j| curve.points[(from + j) % k]).collect()
    } else {
        let m = if from == to {
            if from_rank > to_rank {
                0
            } else {
                k
            }
        } else {
            (from + k - to) % k
        };
        (1..=m)
            .map(|j| {
                let i = (from + k - j) % k;
                let p = curve.points[i];
                EdgePoint::new(curve.points[(i + 1) % k].square, p.side.opposite(), p.t)
            })
            .collect()
    }
}

/// Horizontal cores (one per cycle of `h`, at height 1/2, rightward) and
/// vertical cores (one per cycle of `v`, at width 1/2, upward).
pub fn core_curves(complex: &SurfaceComplex) -> (Vec<PLCurve>, Vec<PLCurve>) {
    let half = Rat::new(1, 2);
    let o = complex.origami();
    let horizontal =
        o.h.cycles()
            .into_iter()
            .map(|c| PLCurve::new(c.into_iter().map(|s| EdgePoint::new(s, Side::R, half)).collect()))
            .collect();
    let vertical =
        o.v.cycles()
            .into_iter()
            .map(|c| PLCurve::new(c.into_iter().map(|s| EdgePoint::new(s, Side::T, half)).collect()))
            .collect();
    (horizontal, vertical)
}

/// Parses `"p/q"` or `"p"` into an exact rational.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let bad = || Error::Format(format!("not a rational: {s:?}"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p: i128 = p.trim().parse().map_err(|_| bad())?;
            let q: i128 = q.trim().parse().map_err(|_| bad())?;
            if q == 0 {
                return Err(bad());
            }
            Ok(Rat::new(p, q))
        }
        None => Ok(Rat::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

pub fn format_rat(r: &Rat) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::origami::Origami;

    fn torus() -> SurfaceComplex {
        SurfaceComplex::build(&Origami::torus()).unwrap()
    }

    #[test]
    fn torus_core_is_valid() {
        let c = torus();
        let (h, v) = core_curves(&c);
        assert!(h[0].validate(&c).is_empty());
        assert!(v[0].validate(&c).is_empty());
    }

    #[test]
    fn self_crossing_curve_is_rejected() {
        let o = Origami::from_images(vec![1, 0], vec![0, 1]).unwrap();
        let c = SurfaceComplex::build(&o).unwrap();
        // Two chords in square 0: L(1/4)->R(3/4) and L(3/4)->R(1/4) cross.
        let curve = PLCurve::new(vec![
            EdgePoint::new(0, Side::R, Rat::new(3, 4)),
            EdgePoint::new(1, Side::R, Rat::new(3, 4)),
            EdgePoint::new(0, Side::R, Rat::new(1, 4)),
            EdgePoint::new(1, Side::R, Rat::new(1, 4)),
        ]);
        let report = curve.validate(&c);
        assert!(matches!(report.as_slice(), [CurveViolation::Crossing { square: 0, .. }]), "{report:?}");
    }

    #[test]
    fn same_side_chord_is_rejected() {
        let o = Origami::from_images(vec![1, 0], vec![0, 1]).unwrap();
        let c = SurfaceComplex::build(&o).unwrap();
        // Square 0: enters from L (via 1's R) at 1/4 and leaves through L at 3/4.
        let curve =
            PLCurve::new(vec![EdgePoint::new(0, Side::L, Rat::new(3, 4)), EdgePoint::new(1, Side::R, Rat::new(1, 4))]);
        let report = curve.validate(&c);
        assert!(report.contains(&CurveViolation::SameSideChord { index: 0 }), "{report:?}");
        assert!(curve.normalized(&c).is_err());
    }

    #[test]
    fn normalization_pushes_edge_return_across() {
        let o = Origami::from_images(vec![1, 0], vec![0, 1]).unwrap();
        let c = SurfaceComplex::build(&o).unwrap();
        // Horizontal core with a detour that dips back through the left side of square 0.
        let curve = PLCurve::new(vec![
            EdgePoint::new(0, Side::L, Rat::new(1, 4)), // 0: in sq 0 from L(1/2) back to L(1/4)
            EdgePoint::new(1, Side::R, Rat::new(1, 8)), // 1: in sq 1 from R(1/4) to R(1/8)
            EdgePoint::new(0, Side::R, Rat::new(1, 2)), // 2: in sq 0 from L(1/8) to R(1/2)
            EdgePoint::new(1, Side::R, Rat::new(1, 2)),
        ]);
        let norm = curve.normalized(&c).unwrap();
        assert!(norm.validate(&c).is_empty(), "{:?}", norm.validate(&c));
        assert_eq!(norm.len(), 2);
    }

    #[test]
    fn reverse_twice_is_identity() {
        let o = Origami::from_images(vec![1, 2, 0], vec![2, 0, 1]).unwrap();
        let c = SurfaceComplex::build(&o).unwrap();
        let (h, _) = core_curves(&c);
        let r = h[0].reversed();
        assert!(r.validate(&c).is_empty());
        assert_eq!(r.reversed(), h[0]);
    }

    #[test]
    fn rational_parsing() {
        assert_eq!(parse_rat("3/6").unwrap(), Rat::new(1, 2));
        assert_eq!(format_rat(&Rat::new(2, 4)), "1/2");
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("x").is_err());
    }
}
