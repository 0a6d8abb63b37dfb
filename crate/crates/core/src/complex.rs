//! Cell structure of an origami: squares, edges, vertices and a cycle basis
//! of the 1-skeleton.
//!
//! Every geometric edge is named by the square it is the left or bottom side
//! of. Edge `2s` is the left side of square `s`, oriented upward; edge `2s + 1`
//! is the bottom side of `s`, oriented rightward.

use std::collections::{BTreeMap, VecDeque};

use serde::Serialize;

use crate::curve::{PLCurve, Side};
use crate::error::{Error, Result};
use crate::origami::{Origami, BL, BR, TL};
use crate::perm::Permutation;

/// A closed edge-loop in the 1-skeleton with integer coefficients per edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeCycle {
    pub coefficients: BTreeMap<usize, i64>,
}

#[derive(Clone, Debug)]
pub struct SurfaceComplex {
    origami: Origami,
    h_inv: Permutation,
    v_inv: Permutation,
    corner_class: Vec<usize>,
    vertex_count: usize,
    genus: usize,
    /// `(tail vertex, head vertex)` of each of the `2n` edges.
    edge_ends: Vec<(usize, usize)>,
    fundamental_cycles: Vec<EdgeCycle>,
}

/// Summary statistics serialized into reports.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComplexSummary {
    pub vertices: usize,
    pub edges: usize,
    pub faces: usize,
    pub genus: usize,
}

impl SurfaceComplex {
    pub fn build(origami: &Origami) -> Result<Self> {
        origami.check()?;
        let n = origami.n;
        let corner_class = origami.corner_classes();
        let vertex_count = corner_class.iter().copied().max().unwrap_or(0) + 1;
        if vertex_count != origami.commutator_vertex_count() {
            return Err(Error::InvalidOrigami(format!(
                "corner closure gives {vertex_count} vertices but the commutator has {} cycles",
                origami.commutator_vertex_count()
            )));
        }
        let genus = (n + 2 - vertex_count) / 2;
        let mut edge_ends = Vec::with_capacity(2 * n);
        for s in 0..n {
            edge_ends.push((corner_class[4 * s + BL], corner_class[4 * s + TL]));
            edge_ends.push((corner_class[4 * s + BL], corner_class[4 * s + BR]));
        }
        let fundamental_cycles = spanning_tree_cycles(vertex_count, &edge_ends);
        Ok(SurfaceComplex {
            h_inv: origami.h.inverse(),
            v_inv: origami.v.inverse(),
            origami: origami.clone(),
            corner_class,
            vertex_count,
            genus,
            edge_ends,
            fundamental_cycles,
        })
    }

    pub fn origami(&self) -> &Origami {
        &self.origami
    }

    pub fn n(&self) -> usize {
        self.origami.n
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        2 * self.origami.n
    }

    /// Vertex class of corner `corner` (see [`crate::origami::BL`] etc.) of square `s`.
    pub fn corner_vertex(&self, s: usize, corner: usize) -> usize {
        self.corner_class[4 * s + corner]
    }

    pub fn edge_ends(&self, edge: usize) -> (usize, usize) {
        self.edge_ends[edge]
    }

    pub fn fundamental_cycles(&self) -> &[EdgeCycle] {
        &self.fundamental_cycles
    }

    pub fn summary(&self) -> ComplexSummary {
        ComplexSummary { vertices: self.vertex_count, edges: self.edge_count(), faces: self.n(), genus: self.genus }
    }

    /// Square across `side` of square `s`.
    #[inline]
    pub fn neighbor(&self, s: usize, side: Side) -> usize {
        match side {
            Side::R => self.origami.h.apply(s),
            Side::T => self.origami.v.apply(s),
            Side::L => self.h_inv.apply(s),
            Side::B => self.v_inv.apply(s),
        }
    }

    /// Index of the geometric edge that is side `side` of square `s`.
    #[inline]
    pub fn edge_of(&self, s: usize, side: Side) -> usize {
        match side {
            Side::L => 2 * s,
            Side::B => 2 * s + 1,
            Side::R => 2 * self.origami.h.apply(s),
            Side::T => 2 * self.origami.v.apply(s) + 1,
        }
    }

    /// Algebraic intersection of `curve` with the edge-cycle `cycle`.
    pub fn pairing_with_cycle(&self, curve: &PLCurve, cycle: &EdgeCycle) -> Result<i64> {
        curve.check_on(self)?;
        Ok(self.pairing_unchecked(curve, cycle))
    }

    fn pairing_unchecked(&self, curve: &PLCurve, cycle: &EdgeCycle) -> i64 {
        curve
            .points
            .iter()
            .map(|p| {
                let e = self.edge_of(p.square, p.side);
                cycle.coefficients.get(&e).map_or(0, |c| c * edge_crossing_sign(p.side))
            })
            .sum()
    }

    /// Pairings of `curve` with every fundamental cycle.
    pub fn homology_vector(&self, curve: &PLCurve) -> Result<Vec<i64>> {
        curve.check_on(self)?;
        Ok(self.fundamental_cycles.iter().map(|z| self.pairing_unchecked(curve, z)).collect())
    }

    /// A simple closed curve on a closed orientable surface is non-separating
    /// exactly when its homology class is nonzero.
    pub fn is_nonseparating(&self, curve: &PLCurve) -> Result<bool> {
        Ok(self.homology_vector(curve)?.iter().any(|&x| x != 0))
    }
}

/// Sign of a curve leaving through `side` against the edge orientation
/// (left/right edges point up, top/bottom edges point right).
pub fn edge_crossing_sign(side: Side) -> i64 {
    match side {
        Side::R | Side::B => 1,
        Side::L | Side::T => -1,
    }
}

fn spanning_tree_cycles(vertex_count: usize, edge_ends: &[(usize, usize)]) -> Vec<EdgeCycle> {
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); vertex_count];
    for (e, &(a, b)) in edge_ends.iter().enumerate() {
        incident[a].push(e);
        if b != a {
            incident[b].push(e);
        }
    }
    // parent[x] = (tree edge, sign of traversing it from x towards the root)
    let mut parent: Vec<Option<(usize, i64)>> = vec![None; vertex_count];
    let mut depth = vec![usize::MAX; vertex_count];
    let mut in_tree = vec![false; edge_ends.len()];
    let mut queue = VecDeque::new();
    depth[0] = 0;
    queue.push_back(0);
    while let Some(x) = queue.pop_front() {
        for &e in &incident[x] {
            let (a, b) = edge_ends[e];
            let (y, sign) = if a == x { (b, -1) } else { (a, 1) };
            if depth[y] == usize::MAX {
                depth[y] = depth[x] + 1;
                parent[y] = Some((e, sign));
                in_tree[e] = true;
                queue.push_back(y);
            }
        }
    }
    let path_to_root = |mut x: usize, coeff: &mut BTreeMap<usize, i64>, scale: i64| {
        while let Some((e, sign)) = parent[x] {
            *coeff.entry(e).or_insert(0) += scale * sign;
            let (a, b) = edge_ends[e];
            x = if a == x { b } else { a };
        }
    };
    let mut cycles = Vec::new();
    for (e, &(a, b)) in edge_ends.iter().enumerate() {
        if in_tree[e] {
            continue;
        }
        // e runs a -> b; close it up with the tree path b -> a.
        let mut coeff = BTreeMap::new();
        coeff.insert(e, 1);
        path_to_root(b, &mut coeff, 1);
        path_to_root(a, &mut coeff, -1);
        coeff.retain(|_, c| *c != 0);
        cycles.push(EdgeCycle { coefficients: coeff });
    }
    cycles
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::core_curves;

    #[test]
    fn torus_complex() {
        let c = SurfaceComplex::build(&Origami::torus()).unwrap();
        assert_eq!(c.summary(), ComplexSummary { vertices: 1, edges: 2, faces: 1, genus: 1 });
        assert_eq!(c.fundamental_cycles().len(), 2);
    }

    #[test]
    fn l_shape_and_one_one_counts() {
        let l = Origami::new(
            Permutation::from_cycles(3, &[&[0, 1]]).unwrap(),
            Permutation::from_cycles(3, &[&[0, 2]]).unwrap(),
        )
        .unwrap();
        let c = SurfaceComplex::build(&l).unwrap();
        assert_eq!((c.vertex_count(), c.genus(), c.fundamental_cycles().len()), (1, 2, 6));
        for o in crate::origami::enumerate_one_one(4, Some(2)) {
            let c = SurfaceComplex::build(&o).unwrap();
            assert_eq!(c.vertex_count(), 2);
            assert_eq!(c.fundamental_cycles().len(), 7);
        }
    }

    #[test]
    fn cycles_are_closed() {
        for o in crate::origami::enumerate_one_one(5, None) {
            let c = SurfaceComplex::build(&o).unwrap();
            assert_eq!(c.fundamental_cycles().len(), 2 * c.n() - c.vertex_count() + 1);
            for z in c.fundamental_cycles() {
                let mut boundary = vec![0i64; c.vertex_count()];
                for (&e, &k) in &z.coefficients {
                    let (a, b) = c.edge_ends(e);
                    boundary[a] -= k;
                    boundary[b] += k;
                }
                assert!(boundary.iter().all(|&x| x == 0));
            }
        }
    }

    #[test]
    fn torus_core_pairs_with_vertical_cycle() {
        let c = SurfaceComplex::build(&Origami::torus()).unwrap();
        let (hs, vs) = core_curves(&c);
        let hv = c.homology_vector(&hs[0]).unwrap();
        assert!(hv.iter().any(|x| x.abs() == 1));
        let rev = hs[0].reversed();
        let hr = c.homology_vector(&rev).unwrap();
        assert_eq!(hr, hv.iter().map(|x| -x).collect::<Vec<_>>());
        assert!(c.is_nonseparating(&vs[0]).unwrap());
    }
}
