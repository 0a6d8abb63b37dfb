//! Minimal position by bigon removal, and the predicates built on it.
//!
//! A bigon is a disc component of the complement with exactly two corners.
//! It is removed by rerouting the arc of `a` along the arc of `b` on the far
//! side, which deletes both corner crossings.

use crate::complex::SurfaceComplex;
use crate::curve::{arc_exits, first_crossing_pair, renormalize_jointly, EdgePoint, PLCurve};
use crate::error::{Error, Result};
use crate::overlay::{general_position, overlay_unchecked, EdgeOccupancy, IntersectionData};
use crate::regions::{complement_regions, Quadrant, Region};

/// Renormalize once any denominator exceeds this.
const DENOM_LIMIT: i128 = 1 << 30;

#[derive(Clone, Debug)]
pub struct MinimalPair {
    pub a: PLCurve,
    pub b: PLCurve,
    pub data: IntersectionData,
    /// Number of bigons removed.
    pub removals: usize,
}

impl MinimalPair {
    pub fn count(&self) -> usize {
        self.data.count()
    }
}

fn max_denom(c: &PLCurve) -> i128 {
    c.points.iter().map(|p| *p.t.denom()).max().unwrap_or(1)
}

fn find_bigon(regions: &[Region]) -> Option<(Quadrant, Quadrant)> {
    regions
        .iter()
        .filter(|r| r.is_bigon())
        .min_by_key(|r| {
            let low = r.corners.iter().map(|q| q.crossing).min().unwrap_or(usize::MAX);
            (r.fragments, low)
        })
        .map(|r| (r.corners[0], r.corners[1]))
}

/// Reroutes the `a`-side of the bigon with corners `q0`, `q1`.
fn remove_bigon(
    a: &PLCurve,
    b: &PLCurve,
    data: &IntersectionData,
    q0: Quadrant,
    q1: Quadrant,
    complex: &SurfaceComplex,
) -> Result<PLCurve> {
    // Orient so that `a` runs from x to y along the bigon.
    let (x, y) = if q0.a_forward { (q0, q1) } else { (q1, q0) };
    if !x.a_forward || y.a_forward {
        return Err(Error::Construction("bigon corners do not bound one a-arc".into()));
    }
    let cx = &data.crossings[x.crossing];
    let cy = &data.crossings[y.crossing];
    let la = a.len();
    let removed = arc_exits(a, (cx.a_chord, cx.a_rank), (cy.a_chord, cy.a_rank), true).len();
    // Exits of a path running along the b-arc from x to y.
    let along = arc_exits(b, (cx.b_chord, cx.b_rank), (cy.b_chord, cy.b_rank), x.b_forward);

    let sb = if x.b_forward { 1 } else { -1 };
    let to_left = cx.sign * sb > 0;
    let mut occ = EdgeOccupancy::from_curves([a, b], complex);
    let mut points: Vec<EdgePoint> = along
        .into_iter()
        .map(|p| {
            let e = complex.edge_of(p.square, p.side);
            let dir = if to_left { p.side.left_sign() } else { -p.side.left_sign() };
            EdgePoint::new(p.square, p.side, occ.place_offset(e, &p.t, dir))
        })
        .collect();
    points.extend((0..la - removed).map(|k| a.points[(cy.a_chord + k) % la]));
    if points.is_empty() {
        return Err(Error::Construction("bigon removal emptied the curve".into()));
    }
    let out = PLCurve::new(points);
    let mut by_square: Vec<Vec<usize>> = vec![Vec::new(); complex.n()];
    for (i, p) in out.points.iter().enumerate() {
        by_square[p.square].push(i);
    }
    for idx in &by_square {
        if first_crossing_pair(idx.iter().map(|&i| (i, out.chord(i)))).is_some() {
            return Err(Error::Construction("bigon removal produced a self-crossing".into()));
        }
    }
    Ok(out)
}

/// Isotopes `a` (and `b` by a relabeling of parameters) into minimal
/// position. Every removal deletes exactly two crossings.
pub fn reduce_to_minimal(a: &PLCurve, b: &PLCurve, complex: &SurfaceComplex) -> Result<MinimalPair> {
    a.check_on(complex)?;
    b.check_on(complex)?;
    let (mut a, mut b) = general_position(a, b, complex);
    let n = complex.n();
    let mut data = overlay_unchecked(&a, &b, n);
    let mut removals = 0;
    loop {
        if data.count() == 0 || data.sign_uniform() {
            break;
        }
        let regions = complement_regions(&a, &b, &data, complex);
        let Some((q0, q1)) = find_bigon(&regions) else { break };
        let before = data.count();
        let rerouted = remove_bigon(&a, &b, &data, q0, q1, complex)?;
        let after = overlay_unchecked(&rerouted, &b, n).count();
        if after + 2 != before {
            return Err(Error::Construction(format!("bigon removal went from {before} to {after} crossings")));
        }
        a = rerouted.normalized(complex)?;
        removals += 1;
        if max_denom(&a).max(max_denom(&b)) > DENOM_LIMIT {
            let mut pair = [a, b];
            renormalize_jointly(&mut pair, complex);
            [a, b] = pair;
        }
        data = overlay_unchecked(&a, &b, n);
        if data.count() > after {
            return Err(Error::Construction("normalization added crossings".into()));
        }
    }
    Ok(MinimalPair { a, b, data, removals })
}

/// The geometric intersection number `i(a, b)`.
pub fn geometric_intersection(a: &PLCurve, b: &PLCurve, complex: &SurfaceComplex) -> Result<usize> {
    Ok(reduce_to_minimal(a, b, complex)?.count())
}

/// `i(a, b) == |algebraic intersection|`. A sign-uniform overlay already
/// realizes this bound, so no reduction is needed in that case.
pub fn is_coherent(a: &PLCurve, b: &PLCurve, complex: &SurfaceComplex) -> Result<bool> {
    let m = reduce_to_minimal(a, b, complex)?;
    let coherent = m.data.count() as i64 == m.data.algebraic().abs();
    debug_assert!(!coherent || m.data.sign_uniform());
    Ok(coherent)
}

/// Complement components of `a ∪ b` in minimal position.
pub fn complement(a: &PLCurve, b: &PLCurve, complex: &SurfaceComplex) -> Result<(MinimalPair, Vec<Region>)> {
    let m = reduce_to_minimal(a, b, complex)?;
    let regions = complement_regions(&m.a, &m.b, &m.data, complex);
    Ok((m, regions))
}

/// Every complement component is a disc.
pub fn is_filling(a: &PLCurve, b: &PLCurve, complex: &SurfaceComplex) -> Result<bool> {
    let (_, regions) = complement(a, b, complex)?;
    Ok(regions.iter().all(Region::is_disc))
}

/// Disjoint after reduction and cobounding an annulus.
pub fn is_isotopic(a: &PLCurve, b: &PLCurve, complex: &SurfaceComplex) -> Result<bool> {
    let (m, regions) = complement(a, b, complex)?;
    if m.count() > 0 {
        return Ok(false);
    }
    Ok(regions.iter().any(|r| r.euler_characteristic() == 0 && r.touches_a && r.touches_b))
}

/// Algebraic intersection number as a signed integer, with its absolute value
/// compared against the geometric count.
pub fn intersection_numbers(a: &PLCurve, b: &PLCurve, complex: &SurfaceComplex) -> Result<(usize, i64)> {
    let m = reduce_to_minimal(a, b, complex)?;
    Ok((m.count(), m.data.algebraic()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::{core_curves, Rat, Side};
    use crate::origami::{enumerate_one_one, Origami};
    use crate::overlay::algebraic_intersection;

    fn two_by_one() -> SurfaceComplex {
        // Two squares side by side, torus double cover.
        SurfaceComplex::build(&Origami::from_images(vec![1, 0], vec![0, 1]).unwrap()).unwrap()
    }

    #[test]
    fn cores_are_already_minimal() {
        for n in 1..=6 {
            for o in enumerate_one_one(n, None) {
                let c = SurfaceComplex::build(&o).unwrap();
                let (h, v) = core_curves(&c);
                let m = reduce_to_minimal(&h[0], &v[0], &c).unwrap();
                assert_eq!(m.removals, 0);
                assert_eq!(m.count(), n);
                assert_eq!(m.a, h[0]);
                assert!(is_coherent(&h[0], &v[0], &c).unwrap());
                assert!(is_filling(&h[0], &v[0], &c).unwrap());
            }
        }
    }

    /// A (2,1) curve on the 2x1 torus that crosses the horizontal core up,
    /// down and up again; the first two crossings bound a bigon across the
    /// edge between the squares.
    fn fingered() -> PLCurve {
        PLCurve::new(vec![
            EdgePoint::new(0, Side::R, Rat::new(3, 4)),
            EdgePoint::new(1, Side::R, Rat::new(1, 4)),
            EdgePoint::new(0, Side::T, Rat::new(1, 2)),
        ])
    }

    #[test]
    fn finger_push_bigon_is_removed() {
        let c = two_by_one();
        let (h, _) = core_curves(&c);
        let f = fingered();
        assert!(f.validate(&c).is_empty(), "{:?}", f.validate(&c));
        let raw = crate::overlay::overlay(&f, &h[0], &c).unwrap();
        assert_eq!(raw.count(), 3);
        let m = reduce_to_minimal(&f, &h[0], &c).unwrap();
        assert_eq!(m.removals, 1);
        assert_eq!(m.count(), 1);
        assert!(m.a.validate(&c).is_empty());
        assert_eq!(algebraic_intersection(&f, &h[0], &c), algebraic_intersection(&m.a, &h[0], &c));
        assert_eq!(geometric_intersection(&h[0], &f, &c).unwrap(), 1);
        assert!(is_isotopic(&m.a, &f, &c).unwrap());
    }

    #[test]
    fn pushoff_is_isotopic_and_disjoint() {
        for o in enumerate_one_one(5, None) {
            let c = SurfaceComplex::build(&o).unwrap();
            let (h, v) = core_curves(&c);
            assert_eq!(geometric_intersection(&h[0], &h[0], &c).unwrap(), 0);
            assert!(is_isotopic(&h[0], &h[0], &c).unwrap());
            assert!(!is_filling(&h[0], &h[0], &c).unwrap());
            assert!(!is_isotopic(&h[0], &v[0], &c).unwrap());
        }
    }

    #[test]
    fn reduction_is_idempotent() {
        let c = two_by_one();
        let (h, _) = core_curves(&c);
        let m = reduce_to_minimal(&fingered(), &h[0], &c).unwrap();
        let again = reduce_to_minimal(&m.a, &m.b, &c).unwrap();
        assert_eq!(again.removals, 0);
        assert_eq!(again.count(), m.count());
    }
}
