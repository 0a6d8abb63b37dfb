//! Bicorn curves between two curves in minimal position, and paths of
//! bicorns from one curve to the other.
//!
//! A bicorn is an arc of `b` from crossing `p` to crossing `q` followed by an
//! arc of `a` from `q` back to `p`, where the two arcs meet only at `p` and
//! `q`. It is realized by pushing both arcs slightly off `a` and `b`.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::complex::SurfaceComplex;
use crate::curve::{arc_exits, EdgePoint, PLCurve};
use crate::error::{Error, Result};
use crate::minimal::{complement, reduce_to_minimal};
use crate::overlay::{EdgeOccupancy, IntersectionData};
use crate::pair::origami_from_data;
use crate::regions::Region;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Arcs {
    WholeA,
    WholeB,
    /// `b_steps` steps forward along `b` from `p` to `q`, then `a_steps`
    /// steps along `a` (forward or backward) from `q` to `p`. Crossings are
    /// named by their position along `a`.
    Corner {
        p: usize,
        q: usize,
        b_steps: usize,
        a_forward: bool,
        a_steps: usize,
    },
}

#[derive(Clone, Debug)]
pub struct Bicorn {
    pub arcs: Arcs,
    pub curve: PLCurve,
}

/// A curve pair in minimal position, ready for bicorn constructions.
#[derive(Clone, Debug)]
pub struct BicornContext<'c> {
    pub complex: &'c SurfaceComplex,
    pub a: PLCurve,
    pub b: PLCurve,
    pub data: IntersectionData,
}

/// Pairwise intersection numbers of a family of curves.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairMatrix {
    pub geometric: Vec<Vec<usize>>,
    pub algebraic: Vec<Vec<i64>>,
    pub filling: Vec<Vec<bool>>,
}

impl PairMatrix {
    pub fn coherent(&self, i: usize, j: usize) -> bool {
        self.geometric[i][j] as i64 == self.algebraic[i][j].abs()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct EdgePath {
    #[serde(skip)]
    pub curves: Vec<PLCurve>,
    pub arcs: Vec<Arcs>,
    pub checks: PairMatrix,
    pub length: usize,
    /// Steps where the second a-arc choice was the verified one.
    pub fallbacks: Vec<usize>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct PathReport {
    pub consecutive_unit: bool,
    pub all_coherent: bool,
    pub filling_pairs_build: bool,
    pub all_nonseparating: bool,
    pub failures: Vec<String>,
}

impl PathReport {
    pub fn passed(&self) -> bool {
        self.consecutive_unit && self.all_coherent && self.filling_pairs_build && self.all_nonseparating
    }
}

/// Geometric and algebraic intersection numbers and the filling flag of every pair.
pub fn pair_matrix(curves: &[PLCurve], complex: &SurfaceComplex) -> Result<PairMatrix> {
    let k = curves.len();
    let mut m =
        PairMatrix { geometric: vec![vec![0; k]; k], algebraic: vec![vec![0; k]; k], filling: vec![vec![false; k]; k] };
    for i in 0..k {
        for j in i + 1..k {
            let (pair, regions) = complement(&curves[i], &curves[j], complex)?;
            let (g, alg) = (pair.count(), pair.data.algebraic());
            let fill = regions.iter().all(Region::is_disc);
            m.geometric[i][j] = g;
            m.geometric[j][i] = g;
            m.algebraic[i][j] = alg;
            m.algebraic[j][i] = -alg;
            m.filling[i][j] = fill;
            m.filling[j][i] = fill;
        }
    }
    Ok(m)
}

fn steps(from: usize, to: usize, forward: bool, n: usize) -> usize {
    if forward {
        (to + n - from) % n
    } else {
        (from + n - to) % n
    }
}

impl<'c> BicornContext<'c> {
    /// Puts `(a, b)` in minimal position. Fails if they can be made disjoint.
    pub fn new(a: &PLCurve, b: &PLCurve, complex: &'c SurfaceComplex) -> Result<Self> {
        let m = reduce_to_minimal(a, b, complex)?;
        if m.count() == 0 {
            return Err(Error::Disjoint);
        }
        Ok(BicornContext { complex, a: m.a, b: m.b, data: m.data })
    }

    pub fn crossings(&self) -> usize {
        self.data.count()
    }

    fn b_interior(&self, p: usize, b_steps: usize) -> impl Iterator<Item = usize> + '_ {
        let n = self.crossings();
        let start = self.data.crossings[p].b_pos;
        (1..b_steps).map(move |k| self.data.b_order[(start + k) % n])
    }

    fn a_interior(&self, q: usize, forward: bool, a_steps: usize) -> impl Iterator<Item = usize> {
        let n = self.crossings();
        (1..a_steps).map(move |k| if forward { (q + k) % n } else { (q + n - k) % n })
    }

    /// The arcs meet only at their endpoints.
    pub fn is_bicorn(&self, arcs: &Arcs) -> bool {
        match *arcs {
            Arcs::WholeA | Arcs::WholeB => true,
            Arcs::Corner { p, q, b_steps, a_forward, a_steps } => {
                if p == q || b_steps == 0 || a_steps == 0 {
                    return false;
                }
                let on_a: HashSet<usize> = self.a_interior(q, a_forward, a_steps).collect();
                self.b_interior(p, b_steps).all(|x| !on_a.contains(&x))
            }
        }
    }

    /// An embedded curve for `arcs`. Both arcs are pushed to the side that
    /// makes the corner at `p` tight.
    pub fn realize(&self, arcs: &Arcs) -> Result<PLCurve> {
        let (p, q, a_forward) = match *arcs {
            Arcs::WholeA => return Ok(self.a.clone()),
            Arcs::WholeB => return Ok(self.b.clone()),
            Arcs::Corner { p, q, a_forward, .. } => (p, q, a_forward),
        };
        let cp = &self.data.crossings[p];
        let cq = &self.data.crossings[q];
        let d = if a_forward { 1 } else { -1 };
        let to_left = cp.sign * d > 0;
        let b_part = arc_exits(&self.b, (cp.b_chord, cp.b_rank), (cq.b_chord, cq.b_rank), true);
        let a_part = arc_exits(&self.a, (cq.a_chord, cq.a_rank), (cp.a_chord, cp.a_rank), a_forward);
        let mut occ = EdgeOccupancy::from_curves([&self.a, &self.b], self.complex);
        let points: Vec<EdgePoint> = b_part
            .into_iter()
            .chain(a_part)
            .map(|e| {
                let edge = self.complex.edge_of(e.square, e.side);
                let dir = if to_left { e.side.left_sign() } else { -e.side.left_sign() };
                EdgePoint::new(e.square, e.side, occ.place_offset(edge, &e.t, dir))
            })
            .collect();
        if points.is_empty() {
            return Err(Error::Construction("bicorn has no edge crossings".into()));
        }
        let curve = PLCurve::new(points).normalized(self.complex)?;
        curve.check_on(self.complex)?;
        Ok(curve)
    }

    pub fn bicorn(&self, arcs: Arcs) -> Result<Bicorn> {
        Ok(Bicorn { arcs, curve: self.realize(&arcs)? })
    }

    /// `a`, `b` and every corner bicorn, in order of `(p, q, side)`.
    pub fn enumerate(&self) -> Result<Vec<Bicorn>> {
        let n = self.crossings();
        let mut out = vec![self.bicorn(Arcs::WholeA)?, self.bicorn(Arcs::WholeB)?];
        for p in 0..n {
            for q in 0..n {
                if p == q {
                    continue;
                }
                let b_steps = steps(self.data.crossings[p].b_pos, self.data.crossings[q].b_pos, true, n);
                for a_forward in [true, false] {
                    let arcs = Arcs::Corner { p, q, b_steps, a_forward, a_steps: steps(q, p, a_forward, n) };
                    if self.is_bicorn(&arcs) {
                        out.push(self.bicorn(arcs)?);
                    }
                }
            }
        }
        Ok(out)
    }

    fn meets_once(&self, x: &PLCurve, y: &PLCurve) -> Result<bool> {
        let m = reduce_to_minimal(x, y, self.complex)?;
        Ok(m.count() == 1)
    }

    fn coherent_with(&self, x: &PLCurve, y: &PLCurve) -> Result<bool> {
        let m = reduce_to_minimal(x, y, self.complex)?;
        Ok(m.count() as i64 == m.data.algebraic().abs())
    }

    /// First bicorn: the shortest `b`-arc starting at the crossing that comes
    /// first along `b`, closed up along `a` in `a`'s direction. The opposite
    /// `a`-arc is tried if the first fails `i(a, seed) = 1`.
    pub fn seed(&self) -> Result<(Bicorn, bool)> {
        let n = self.crossings();
        if n == 1 {
            return Ok((self.bicorn(Arcs::WholeB)?, false));
        }
        let p = self.data.b_order[0];
        let q = self.data.b_order[1];
        for (k, a_forward) in [true, false].into_iter().enumerate() {
            let arcs = Arcs::Corner { p, q, b_steps: 1, a_forward, a_steps: steps(q, p, a_forward, n) };
            let cand = self.bicorn(arcs)?;
            if self.meets_once(&self.a, &cand.curve)? && self.coherent_with(&self.a, &cand.curve)? {
                return Ok((cand, k == 1));
            }
        }
        Err(Error::Unverified("neither seed arc meets a exactly once".into()))
    }

    /// Extends the `b`-arc of `current` to the next crossing lying inside its
    /// `a`-arc and keeps the part of the `a`-arc ending at `p`. Returns `b`
    /// once the `b`-arc cannot be extended further.
    pub fn extend(&self, current: &Bicorn) -> Result<(Bicorn, bool)> {
        let n = self.crossings();
        let (p, q, b_steps, a_forward, a_steps) = match current.arcs {
            Arcs::WholeB => return Err(Error::NoCandidate("the path already reached b".into())),
            Arcs::WholeA => return self.seed(),
            Arcs::Corner { p, q, b_steps, a_forward, a_steps } => (p, q, b_steps, a_forward, a_steps),
        };
        let inside: HashSet<usize> = self.a_interior(q, a_forward, a_steps).collect();
        let start = self.data.crossings[q].b_pos;
        let mut found = None;
        for k in 1..n {
            let r = self.data.b_order[(start + k) % n];
            if r == p {
                break;
            }
            if inside.contains(&r) {
                found = Some((r, k));
                break;
            }
        }
        let Some((r, k)) = found else { return Ok((self.bicorn(Arcs::WholeB)?, false)) };
        let primary = steps(r, p, a_forward, n);
        let options = [
            Arcs::Corner { p, q: r, b_steps: b_steps + k, a_forward, a_steps: primary },
            Arcs::Corner { p, q: r, b_steps: b_steps + k, a_forward: !a_forward, a_steps: n - primary },
        ];
        for (idx, arcs) in options.iter().enumerate() {
            if !self.is_bicorn(arcs) {
                continue;
            }
            let cand = self.bicorn(*arcs)?;
            if self.meets_once(&current.curve, &cand.curve)?
                && self.coherent_with(&self.a, &cand.curve)?
                && self.coherent_with(&self.b, &cand.curve)?
            {
                return Ok((cand, idx == 1));
            }
        }
        Err(Error::Unverified(format!("no a-arc from crossing {r} meets the previous bicorn once")))
    }

    /// Seed followed by extensions until `b` is reached.
    pub fn path(&self) -> Result<EdgePath> {
        let mut curves = vec![self.a.clone()];
        let mut arcs = vec![Arcs::WholeA];
        let mut fallbacks = Vec::new();
        let (mut cur, alt) = self.seed()?;
        if alt {
            fallbacks.push(1);
        }
        loop {
            curves.push(cur.curve.clone());
            arcs.push(cur.arcs);
            if cur.arcs == Arcs::WholeB {
                break;
            }
            if curves.len() > self.crossings() + 2 {
                return Err(Error::Construction("bicorn extension did not terminate".into()));
            }
            let (next, alt) = self.extend(&cur)?;
            if alt {
                fallbacks.push(curves.len());
            }
            cur = next;
        }
        let checks = pair_matrix(&curves, self.complex)?;
        let length = curves.len() - 1;
        Ok(EdgePath { curves, arcs, checks, length, fallbacks })
    }
}

/// Bicorns between `a` and `b` after putting them in minimal position.
pub fn enumerate_bicorns(a: &PLCurve, b: &PLCurve, complex: &SurfaceComplex) -> Result<Vec<Bicorn>> {
    BicornContext::new(a, b, complex)?.enumerate()
}

/// A bicorn path from `a` to `b`. The pair must be coherent and filling.
pub fn origami_edge_path(a: &PLCurve, b: &PLCurve, complex: &SurfaceComplex) -> Result<EdgePath> {
    let (m, regions) = complement(a, b, complex)?;
    if m.count() as i64 != m.data.algebraic().abs() {
        return Err(Error::NotCoherent { geometric: m.count(), algebraic: m.data.algebraic() });
    }
    if !regions.iter().all(Region::is_disc) {
        return Err(Error::NotFilling);
    }
    BicornContext::new(a, b, complex)?.path()
}

/// Recomputes every check of an edge path from its curves.
pub fn verify_edge_path(curves: &[PLCurve], complex: &SurfaceComplex) -> Result<PathReport> {
    let mut report = PathReport {
        consecutive_unit: true,
        all_coherent: true,
        filling_pairs_build: true,
        all_nonseparating: true,
        failures: Vec::new(),
    };
    for (i, c) in curves.iter().enumerate() {
        if !complex.is_nonseparating(c)? {
            report.all_nonseparating = false;
            report.failures.push(format!("curve {i} is separating"));
        }
    }
    let k = curves.len();
    for i in 0..k {
        for j in i + 1..k {
            let (m, regions) = complement(&curves[i], &curves[j], complex)?;
            let (g, alg) = (m.count(), m.data.algebraic());
            if j == i + 1 && g != 1 {
                report.consecutive_unit = false;
                report.failures.push(format!("curves {i} and {j} meet {g} times"));
            }
            if g as i64 != alg.abs() {
                report.all_coherent = false;
                report.failures.push(format!("curves {i} and {j} are not coherent ({g} vs {alg})"));
            }
            if g > 0 && regions.iter().all(Region::is_disc) {
                if let Err(e) = origami_from_data(&m.data) {
                    report.filling_pairs_build = false;
                    report.failures.push(format!("curves {i} and {j} fill but give no origami: {e}"));
                }
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::core_curves;
    use crate::origami::{enumerate_one_one, Origami};

    #[test]
    fn torus_has_only_degenerate_bicorns() {
        let c = SurfaceComplex::build(&Origami::torus()).unwrap();
        let (h, v) = core_curves(&c);
        let all = enumerate_bicorns(&h[0], &v[0], &c).unwrap();
        assert_eq!(all.len(), 2);
        let ctx = BicornContext::new(&h[0], &v[0], &c).unwrap();
        assert_eq!(ctx.seed().unwrap().0.arcs, Arcs::WholeB);
    }

    #[test]
    fn genus_two_cores_give_a_verified_path() {
        for o in enumerate_one_one(4, Some(2)) {
            let c = SurfaceComplex::build(&o).unwrap();
            let (h, v) = core_curves(&c);
            let path = origami_edge_path(&h[0], &v[0], &c).unwrap();
            assert!(path.length <= 4, "{:?}", path.arcs);
            let report = verify_edge_path(&path.curves, &c).unwrap();
            assert!(report.passed(), "{report:?}");
            assert_eq!(path.checks.geometric[0][1], 1);
        }
    }

    #[test]
    fn enumerated_bicorns_are_embedded_and_nonseparating() {
        let o = enumerate_one_one(4, Some(2)).remove(0);
        let c = SurfaceComplex::build(&o).unwrap();
        let (h, v) = core_curves(&c);
        let all = enumerate_bicorns(&h[0], &v[0], &c).unwrap();
        assert!(all.len() > 2);
        for b in &all {
            assert!(b.curve.validate(&c).is_empty());
            assert!(c.is_nonseparating(&b.curve).unwrap());
        }
    }

    #[test]
    fn paths_on_small_one_one_origamis() {
        for n in 3..=7 {
            for o in enumerate_one_one(n, None) {
                let c = SurfaceComplex::build(&o).unwrap();
                let (h, v) = core_curves(&c);
                let path = origami_edge_path(&h[0], &v[0], &c).unwrap();
                let report = verify_edge_path(&path.curves, &c).unwrap();
                assert!(report.passed(), "n={n} {o:?} {report:?}");
                assert!(path.length <= n);
            }
        }
    }
}
