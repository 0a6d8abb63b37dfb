//! The origami induced by a coherent filling pair.
//!
//! Each crossing is the center of a square. Walking along `a` moves one
//! square to the right, walking along `b` moves one square up.

use serde::Serialize;

use crate::bicorn::{verify_edge_path, EdgePath};
use crate::complex::SurfaceComplex;
use crate::curve::PLCurve;
use crate::error::{Error, Result};
use crate::minimal::complement;
use crate::origami::Origami;
use crate::overlay::IntersectionData;
use crate::perm::Permutation;
use crate::regions::Region;

/// Squares are crossings numbered by position along `a`.
pub(crate) fn origami_from_data(data: &IntersectionData) -> Result<Origami> {
    let n = data.count();
    if n == 0 {
        return Err(Error::Disjoint);
    }
    if !data.sign_uniform() {
        return Err(Error::NotCoherent { geometric: n, algebraic: data.algebraic() });
    }
    let up = data.crossings[0].sign > 0;
    let h: Vec<usize> = (0..n).map(|x| (x + 1) % n).collect();
    let v: Vec<usize> = (0..n)
        .map(|x| {
            let k = data.crossings[x].b_pos;
            let next = if up { (k + 1) % n } else { (k + n - 1) % n };
            data.b_order[next]
        })
        .collect();
    Origami::new(Permutation::from_images_unchecked(h), Permutation::from_images_unchecked(v))
}

/// The `[1,1]` origami of a coherent filling pair. Its square count is
/// `i(a, b)` and its genus is the genus of `complex`.
pub fn origami_from_pair(a: &PLCurve, b: &PLCurve, complex: &SurfaceComplex) -> Result<Origami> {
    let (m, regions) = complement(a, b, complex)?;
    if m.count() as i64 != m.data.algebraic().abs() {
        return Err(Error::NotCoherent { geometric: m.count(), algebraic: m.data.algebraic() });
    }
    if !regions.iter().all(Region::is_disc) {
        return Err(Error::NotFilling);
    }
    let o = origami_from_data(&m.data)?;
    debug_assert!(o.is_one_one().unwrap_or(false));
    let g = o.genus()?;
    if g != complex.genus() {
        return Err(Error::Construction(format!(
            "induced origami has genus {g}, surface has genus {}",
            complex.genus()
        )));
    }
    Ok(o)
}

/// One entry per pair `(i, j)`, `i < j`, of curves on a path.
#[derive(Clone, Debug, Serialize)]
pub struct Subpair {
    pub i: usize,
    pub j: usize,
    pub origami: Option<Origami>,
    pub skipped: Option<String>,
}

/// The origami of every filling pair of curves on a verified path.
pub fn subpair_origamis(p: &EdgePath, complex: &SurfaceComplex) -> Result<Vec<Subpair>> {
    let report = verify_edge_path(&p.curves, complex)?;
    if !report.passed() {
        return Err(Error::Unverified(report.failures.join("; ")));
    }
    let k = p.curves.len();
    let mut out = Vec::new();
    for i in 0..k {
        for j in i + 1..k {
            let (origami, skipped) = match origami_from_pair(&p.curves[i], &p.curves[j], complex) {
                Ok(o) => (Some(o), None),
                Err(e @ (Error::NotFilling | Error::Disjoint)) => (None, Some(e.to_string())),
                Err(e) => return Err(e),
            };
            out.push(Subpair { i, j, origami, skipped });
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::core_curves;
    use crate::origami::enumerate_one_one;

    #[test]
    fn cores_round_trip() {
        for n in 1..=6 {
            for o in enumerate_one_one(n, None) {
                let c = SurfaceComplex::build(&o).unwrap();
                let (h, v) = core_curves(&c);
                let back = origami_from_pair(&h[0], &v[0], &c).unwrap();
                assert_eq!(back.canonical().unwrap(), o);
                // Swapping the roles reflects the picture; still one-one of the same genus.
                let swapped = origami_from_pair(&v[0], &h[0], &c).unwrap();
                assert_eq!(swapped.n, n);
                assert_eq!(swapped.genus().unwrap(), c.genus());
            }
        }
    }

    #[test]
    fn pushoff_is_rejected() {
        let o = enumerate_one_one(4, Some(2)).remove(0);
        let c = SurfaceComplex::build(&o).unwrap();
        let (h, _) = core_curves(&c);
        assert!(matches!(origami_from_pair(&h[0], &h[0], &c), Err(Error::NotFilling)));
    }

    #[test]
    fn subpairs_of_a_core_path() {
        let o = enumerate_one_one(5, Some(2)).remove(0);
        let c = SurfaceComplex::build(&o).unwrap();
        let (h, v) = core_curves(&c);
        let path = crate::bicorn::origami_edge_path(&h[0], &v[0], &c).unwrap();
        let subs = subpair_origamis(&path, &c).unwrap();
        for s in &subs {
            if s.j == s.i + 1 {
                assert!(s.origami.is_none() && s.skipped.is_some());
            }
        }
        let ends = subs.iter().find(|s| s.i == 0 && s.j == path.length).unwrap();
        assert_eq!(ends.origami.as_ref().unwrap().canonical().unwrap(), o);
    }

    #[test]
    fn reversed_curve_still_works() {
        let o = enumerate_one_one(5, Some(3)).remove(0);
        let c = SurfaceComplex::build(&o).unwrap();
        let (h, v) = core_curves(&c);
        let back = origami_from_pair(&h[0], &v[0].reversed(), &c).unwrap();
        assert_eq!(back.canonical().unwrap(), o);
    }
}
