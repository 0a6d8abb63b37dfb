//! Components of the complement of two curves.
//!
//! Each square is cut by the chords of both curves into planar fragments
//! (traced as faces of the arrangement). Fragments are glued across edge
//! segments with union-find, and every component gets its Euler
//! characteristic `V - E + F` from surface vertices, glued segments and
//! fragments.

use std::collections::{HashMap, HashSet};

use num_traits::{One, Zero};

use crate::complex::SurfaceComplex;
use crate::curve::{PLCurve, Rat, Side};
use crate::overlay::IntersectionData;

/// A ray leaving a crossing along one of the two curves.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Ray {
    pub on_a: bool,
    pub forward: bool,
}

/// The quadrant at a crossing bounded by an `a` ray and a `b` ray.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Quadrant {
    pub crossing: usize,
    pub a_forward: bool,
    pub b_forward: bool,
}

#[derive(Clone, Debug, Default)]
pub struct Region {
    pub fragments: usize,
    pub edges: usize,
    pub vertices: usize,
    pub corners: Vec<Quadrant>,
    pub touches_a: bool,
    pub touches_b: bool,
}

impl Region {
    pub fn euler_characteristic(&self) -> i64 {
        self.vertices as i64 - self.edges as i64 + self.fragments as i64
    }

    pub fn is_disc(&self) -> bool {
        self.euler_characteristic() == 1
    }

    pub fn is_bigon(&self) -> bool {
        self.is_disc() && self.corners.len() == 2
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Label {
    Boundary,
    A,
    B,
}

struct Arrangement {
    origin: Vec<usize>,
    dest: Vec<usize>,
    twin: Vec<usize>,
    label: Vec<Label>,
    rot: Vec<Vec<usize>>,
    slot: Vec<usize>,
}

impl Arrangement {
    fn new(nodes: usize) -> Self {
        Arrangement {
            origin: Vec::new(),
            dest: Vec::new(),
            twin: Vec::new(),
            label: Vec::new(),
            rot: vec![Vec::new(); nodes],
            slot: Vec::new(),
        }
    }

    fn add_edge(&mut self, u: usize, w: usize, label: Label) -> (usize, usize) {
        let h = self.origin.len();
        self.origin.extend([u, w]);
        self.dest.extend([w, u]);
        self.twin.extend([h + 1, h]);
        self.label.extend([label, label]);
        self.slot.extend([0, 0]);
        (h, h + 1)
    }

    fn set_rotation(&mut self, node: usize, hes: Vec<usize>) {
        for (k, &he) in hes.iter().enumerate() {
            self.slot[he] = k;
        }
        self.rot[node] = hes;
    }

    fn next(&self, he: usize) -> usize {
        let v = self.dest[he];
        let t = self.twin[he];
        let r = &self.rot[v];
        r[(self.slot[t] + r.len() - 1) % r.len()]
    }

    fn faces(&self) -> (Vec<usize>, usize) {
        let mut face = vec![usize::MAX; self.origin.len()];
        let mut count = 0;
        for start in 0..self.origin.len() {
            if face[start] != usize::MAX {
                continue;
            }
            let mut he = start;
            loop {
                face[he] = count;
                he = self.next(he);
                if he == start {
                    break;
                }
            }
            count += 1;
        }
        (face, count)
    }
}

fn pos_to_t(pos: &Rat) -> (Side, Rat) {
    let one = Rat::one();
    let k = pos.to_integer();
    let frac = pos - Rat::from_integer(k);
    match k {
        0 => (Side::B, frac),
        1 => (Side::R, frac),
        2 => (Side::T, one - frac),
        _ => (Side::L, one - frac),
    }
}

/// Components of the complement of `a ∪ b`. `data` must be the overlay of
/// exactly these two curves.
pub fn complement_regions(a: &PLCurve, b: &PLCurve, data: &IntersectionData, complex: &SurfaceComplex) -> Vec<Region> {
    let n = complex.n();
    let mut a_cross: HashMap<usize, Vec<usize>> = HashMap::new();
    for c in &data.crossings {
        a_cross.entry(c.a_chord).or_default().push(c.a_pos);
    }
    let mut b_cross: HashMap<usize, Vec<usize>> = HashMap::new();
    for &id in &data.b_order {
        b_cross.entry(data.crossings[id].b_chord).or_default().push(id);
    }
    let mut a_by_sq: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut b_by_sq: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (i, p) in a.points.iter().enumerate() {
        a_by_sq[p.square].push(i);
    }
    for (j, p) in b.points.iter().enumerate() {
        b_by_sq[p.square].push(j);
    }
    let mut sq_of_crossing: Vec<Vec<usize>> = vec![Vec::new(); n];
    for c in &data.crossings {
        sq_of_crossing[c.square].push(c.a_pos);
    }

    let mut fragment_count = 0usize;
    let mut segment_owner: HashMap<(usize, Rat), usize> = HashMap::new();
    let mut glued: Vec<(usize, usize)> = Vec::new();
    let mut corner_vertex: Vec<(usize, usize)> = Vec::new();
    let mut quadrants: Vec<(Quadrant, usize)> = Vec::new();
    let mut touch_a: Vec<usize> = Vec::new();
    let mut touch_b: Vec<usize> = Vec::new();

    for s in 0..n {
        // Boundary nodes: corners and chord endpoints, sorted ccw.
        #[derive(Clone, Copy)]
        enum Kind {
            Corner(usize),
            End { on_a: bool, chord: usize, entry: bool },
        }
        let mut bnodes: Vec<(Rat, Kind)> = (0..4).map(|k| (Rat::from_integer(k as i128), Kind::Corner(k))).collect();
        for &i in &a_by_sq[s] {
            let ch = a.chord(i);
            bnodes.push((ch.entry_pos(), Kind::End { on_a: true, chord: i, entry: true }));
            bnodes.push((ch.exit_pos(), Kind::End { on_a: true, chord: i, entry: false }));
        }
        for &j in &b_by_sq[s] {
            let ch = b.chord(j);
            bnodes.push((ch.entry_pos(), Kind::End { on_a: false, chord: j, entry: true }));
            bnodes.push((ch.exit_pos(), Kind::End { on_a: false, chord: j, entry: false }));
        }
        bnodes.sort_by_key(|x| x.0);
        let nb = bnodes.len();
        let crossings = &sq_of_crossing[s];
        let cross_node: HashMap<usize, usize> = crossings.iter().enumerate().map(|(k, &id)| (id, nb + k)).collect();
        let mut arr = Arrangement::new(nb + crossings.len());

        // Boundary segments: bccw half-edge i -> i+1.
        let mut bccw = vec![0; nb];
        let mut bcw = vec![0; nb];
        for i in 0..nb {
            let (h, t) = arr.add_edge(i, (i + 1) % nb, Label::Boundary);
            bccw[i] = h;
            bcw[(i + 1) % nb] = t;
        }
        let mut end_node: HashMap<(bool, usize, bool), usize> = HashMap::new();
        for (k, (_, kind)) in bnodes.iter().enumerate() {
            if let Kind::End { on_a, chord, entry } = *kind {
                end_node.insert((on_a, chord, entry), k);
            }
        }
        // Chord pieces.
        let mut inward = vec![usize::MAX; nb];
        // per crossing node: [A+, A-, B+, B-] outgoing half-edges
        let mut cross_out = vec![[usize::MAX; 4]; crossings.len()];
        for (on_a, chords, lists) in [(true, &a_by_sq[s], &a_cross), (false, &b_by_sq[s], &b_cross)] {
            let label = if on_a { Label::A } else { Label::B };
            let base = if on_a { 0 } else { 2 };
            for &ci in chords.iter() {
                let mut seq = vec![end_node[&(on_a, ci, true)]];
                if let Some(ids) = lists.get(&ci) {
                    seq.extend(ids.iter().map(|id| cross_node[id]));
                }
                seq.push(end_node[&(on_a, ci, false)]);
                for w in seq.windows(2) {
                    let (fwd, back) = arr.add_edge(w[0], w[1], label);
                    if w[0] < nb {
                        inward[w[0]] = fwd;
                    } else {
                        cross_out[w[0] - nb][base] = fwd;
                    }
                    if w[1] < nb {
                        inward[w[1]] = back;
                    } else {
                        cross_out[w[1] - nb][base + 1] = back;
                    }
                }
            }
        }
        for i in 0..nb {
            let rot = if inward[i] == usize::MAX { vec![bccw[i], bcw[i]] } else { vec![bccw[i], inward[i], bcw[i]] };
            arr.set_rotation(i, rot);
        }
        for (k, &id) in crossings.iter().enumerate() {
            let [ap, am, bp, bm] = cross_out[k];
            let rot = if data.crossings[id].sign > 0 { vec![ap, bp, am, bm] } else { vec![ap, bm, am, bp] };
            arr.set_rotation(nb + k, rot);
        }

        let (face, _) = arr.faces();
        let outer = face[bcw[0]];
        let mut local: HashMap<usize, usize> = HashMap::new();
        let mut frag = |f: usize| -> usize {
            *local.entry(f).or_insert_with(|| {
                fragment_count += 1;
                fragment_count - 1
            })
        };
        for i in 0..nb {
            let f = frag(face[bccw[i]]);
            debug_assert_ne!(face[bccw[i]], outer);
            let p0 = bnodes[i].0;
            let p1 = if i + 1 == nb { Rat::from_integer(4) } else { bnodes[i + 1].0 };
            let (side, t0) = pos_to_t(&p0);
            // A segment ending at the next corner belongs to the side it starts on.
            let t1 = if p1 == Rat::from_integer(p0.to_integer() + 1) {
                match side {
                    Side::B | Side::R => Rat::one(),
                    Side::T | Side::L => Rat::zero(),
                }
            } else {
                pos_to_t(&p1).1
            };
            let edge = complex.edge_of(s, side);
            let key = (edge, t0.min(t1));
            match segment_owner.remove(&key) {
                Some(g) => glued.push((g, f)),
                None => {
                    segment_owner.insert(key, f);
                }
            }
            if let Kind::Corner(k) = bnodes[i].1 {
                corner_vertex.push((f, complex.corner_vertex(s, k)));
            }
        }
        for (k, &id) in crossings.iter().enumerate() {
            let rot = &arr.rot[nb + k];
            for (r, &he) in rot.iter().enumerate() {
                let nxt = rot[(r + 1) % 4];
                let f = frag(face[he]);
                let dir = |h: usize| -> Ray {
                    let c = cross_out[k];
                    Ray { on_a: h == c[0] || h == c[1], forward: h == c[0] || h == c[2] }
                };
                let (d0, d1) = (dir(he), dir(nxt));
                let (ra, rb) = if d0.on_a { (d0, d1) } else { (d1, d0) };
                quadrants.push((Quadrant { crossing: id, a_forward: ra.forward, b_forward: rb.forward }, f));
            }
        }
        for (he, label) in arr.label.iter().enumerate() {
            match label {
                Label::A => touch_a.push(frag(face[he])),
                Label::B => touch_b.push(frag(face[he])),
                Label::Boundary => {}
            }
        }
    }
    debug_assert!(segment_owner.is_empty(), "unmatched edge segments");

    let mut parent: Vec<usize> = (0..fragment_count).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for &(f, g) in &glued {
        let (rf, rg) = (find(&mut parent, f), find(&mut parent, g));
        if rf != rg {
            parent[rf] = rg;
        }
    }
    let mut index: HashMap<usize, usize> = HashMap::new();
    let mut regions: Vec<Region> = Vec::new();
    let mut region_of = |p: &mut Vec<usize>, f: usize, regions: &mut Vec<Region>| -> usize {
        let r = find(p, f);
        *index.entry(r).or_insert_with(|| {
            regions.push(Region::default());
            regions.len() - 1
        })
    };
    for f in 0..fragment_count {
        let r = region_of(&mut parent, f, &mut regions);
        regions[r].fragments += 1;
    }
    for &(f, _) in &glued {
        let r = region_of(&mut parent, f, &mut regions);
        regions[r].edges += 1;
    }
    let mut seen_vertex = HashSet::new();
    for &(f, v) in &corner_vertex {
        let r = region_of(&mut parent, f, &mut regions);
        if seen_vertex.insert((r, v)) {
            regions[r].vertices += 1;
        }
    }
    for (q, f) in quadrants {
        let r = region_of(&mut parent, f, &mut regions);
        regions[r].corners.push(q);
    }
    for f in touch_a {
        let r = region_of(&mut parent, f, &mut regions);
        regions[r].touches_a = true;
    }
    for f in touch_b {
        let r = region_of(&mut parent, f, &mut regions);
        regions[r].touches_b = true;
    }
    regions
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::core_curves;
    use crate::origami::{enumerate_one_one, Origami};
    use crate::overlay::{general_position, overlay};

    #[test]
    fn torus_cores_leave_one_disc() {
        let c = SurfaceComplex::build(&Origami::torus()).unwrap();
        let (h, v) = core_curves(&c);
        let d = overlay(&h[0], &v[0], &c).unwrap();
        let regions = complement_regions(&h[0], &v[0], &d, &c);
        assert_eq!(regions.len(), 1);
        assert!(regions[0].is_disc());
        assert_eq!(regions[0].corners.len(), 4);
    }

    #[test]
    fn one_one_cores_leave_v_discs() {
        for n in 1..=6 {
            for o in enumerate_one_one(n, None) {
                let c = SurfaceComplex::build(&o).unwrap();
                let (h, v) = core_curves(&c);
                let d = overlay(&h[0], &v[0], &c).unwrap();
                let regions = complement_regions(&h[0], &v[0], &d, &c);
                assert_eq!(regions.len(), c.vertex_count());
                assert!(regions.iter().all(|r| r.is_disc() && r.touches_a && r.touches_b));
                let corners: usize = regions.iter().map(|r| r.corners.len()).sum();
                assert_eq!(corners, 4 * n);
            }
        }
    }

    #[test]
    fn pushoff_leaves_an_annulus() {
        for o in enumerate_one_one(4, Some(2)) {
            let c = SurfaceComplex::build(&o).unwrap();
            let (h, _) = core_curves(&c);
            let (a, b) = general_position(&h[0], &h[0], &c);
            let d = overlay(&a, &b, &c).unwrap();
            let regions = complement_regions(&a, &b, &d, &c);
            let chis: Vec<i64> = regions.iter().map(|r| r.euler_characteristic()).collect();
            assert_eq!(chis.iter().sum::<i64>(), 2 - 2 * c.genus() as i64);
            assert!(regions.iter().any(|r| r.euler_characteristic() == 0 && r.touches_a && r.touches_b));
        }
    }
}
