//! Origamis (square-tiled surfaces) as pairs of gluing permutations.
//!
//! Square `s` has its right edge glued to the left edge of `h(s)` and its top
//! edge glued to the bottom edge of `v(s)`.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::{for_each_n_cycle, Permutation};

/// Corner slots of a square, counter-clockwise from bottom-left.
pub const BL: usize = 0;
pub const BR: usize = 1;
pub const TR: usize = 2;
pub const TL: usize = 3;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Origami {
    pub n: usize,
    pub h: Permutation,
    pub v: Permutation,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    Empty,
    LengthMismatch { h: usize, v: usize, n: usize },
    HNotBijection,
    VNotBijection,
    NotConnected { reached: usize },
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Violation::Empty => write!(f, "origami has no squares"),
            Violation::LengthMismatch { h, v, n } => {
                write!(f, "image arrays have lengths h={h}, v={v} but n={n}")
            }
            Violation::HNotBijection => write!(f, "h is not a bijection"),
            Violation::VNotBijection => write!(f, "v is not a bijection"),
            Violation::NotConnected { reached } => {
                write!(f, "not connected: only {reached} squares reachable from square 0")
            }
        }
    }
}

/// Cycle decompositions of `h` (horizontal cylinders) and `v` (vertical cylinders).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cylinders {
    pub horizontal: Vec<Vec<usize>>,
    pub vertical: Vec<Vec<usize>>,
}

impl Origami {
    pub fn new(h: Permutation, v: Permutation) -> Result<Self> {
        let o = Origami { n: h.len(), h, v };
        o.check()?;
        Ok(o)
    }

    pub fn from_images(h: Vec<usize>, v: Vec<usize>) -> Result<Self> {
        Origami::new(Permutation::from_images_unchecked(h), Permutation::from_images_unchecked(v))
    }

    pub fn torus() -> Self {
        Origami { n: 1, h: Permutation::identity(1), v: Permutation::identity(1) }
    }

    pub fn validate(&self) -> Vec<Violation> {
        let mut report = Vec::new();
        if self.n == 0 {
            report.push(Violation::Empty);
            return report;
        }
        if self.h.len() != self.n || self.v.len() != self.n {
            report.push(Violation::LengthMismatch { h: self.h.len(), v: self.v.len(), n: self.n });
            return report;
        }
        if !self.h.is_bijection() {
            report.push(Violation::HNotBijection);
        }
        if !self.v.is_bijection() {
            report.push(Violation::VNotBijection);
        }
        if !report.is_empty() {
            return report;
        }
        let reached = self.bfs_order(0).len();
        if reached != self.n {
            report.push(Violation::NotConnected { reached });
        }
        report
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_empty()
    }

    pub fn check(&self) -> Result<()> {
        match self.validate().first() {
            None => Ok(()),
            Some(v) => Err(Error::InvalidOrigami(v.to_string())),
        }
    }

    /// Squares in breadth-first order from `base`, following `h` then `v`.
    fn bfs_order(&self, base: usize) -> Vec<usize> {
        let mut seen = vec![false; self.n];
        let mut order = Vec::with_capacity(self.n);
        let mut queue = VecDeque::new();
        seen[base] = true;
        queue.push_back(base);
        while let Some(x) = queue.pop_front() {
            order.push(x);
            for y in [self.h.apply(x), self.v.apply(x)] {
                if !seen[y] {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
        order
    }

    /// Partition of the `4n` square corners into surface vertices.
    ///
    /// Returns `class[4 * s + corner]` with classes numbered by first appearance.
    pub fn corner_classes(&self) -> Vec<usize> {
        let n = self.n;
        let mut parent: Vec<usize> = (0..4 * n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let union = |p: &mut Vec<usize>, a: usize, b: usize| {
            let (ra, rb) = (find(p, a), find(p, b));
            if ra != rb {
                p[ra.max(rb)] = ra.min(rb);
            }
        };
        for s in 0..n {
            let r = self.h.apply(s);
            let t = self.v.apply(s);
            union(&mut parent, 4 * s + BR, 4 * r + BL);
            union(&mut parent, 4 * s + TR, 4 * r + TL);
            union(&mut parent, 4 * s + TL, 4 * t + BL);
            union(&mut parent, 4 * s + TR, 4 * t + BR);
        }
        let mut label = vec![usize::MAX; 4 * n];
        let mut out = vec![0; 4 * n];
        let mut next = 0;
        for (c, slot) in out.iter_mut().enumerate() {
            let root = find(&mut parent, c);
            if label[root] == usize::MAX {
                label[root] = next;
                next += 1;
            }
            *slot = label[root];
        }
        out
    }

    pub fn vertex_count(&self) -> usize {
        self.corner_classes().iter().copied().max().map_or(0, |m| m + 1)
    }

    /// Vertex count from the cycles of the commutator `v⁻¹ h⁻¹ v h`.
    pub fn commutator_vertex_count(&self) -> usize {
        let comm = self.h.then(&self.v).then(&self.h.inverse()).then(&self.v.inverse());
        comm.cycle_count()
    }

    pub fn genus(&self) -> Result<usize> {
        self.check()?;
        let v = self.vertex_count();
        debug_assert_eq!(v, self.commutator_vertex_count());
        // V - 2n + n = 2 - 2g
        let twice = self.n + 2 - v;
        debug_assert!(twice.is_multiple_of(2));
        Ok(twice / 2)
    }

    pub fn cylinders(&self) -> Result<Cylinders> {
        self.check()?;
        Ok(Cylinders { horizontal: self.h.cycles(), vertical: self.v.cycles() })
    }

    pub fn is_one_one(&self) -> Result<bool> {
        self.check()?;
        Ok(self.h.is_single_cycle() && self.v.is_single_cycle())
    }

    /// Conjugates both gluings by `sigma` (old label -> new label).
    pub fn relabel(&self, sigma: &Permutation) -> Origami {
        Origami { n: self.n, h: self.h.relabel(sigma), v: self.v.relabel(sigma) }
    }

    /// Canonical representative of the isomorphism class together with the
    /// relabeling (old -> new) that produces it.
    pub fn canonical_form(&self) -> Result<(Origami, Permutation)> {
        self.check()?;
        let mut best: Option<(Origami, Permutation)> = None;
        for base in 0..self.n {
            let order = self.bfs_order(base);
            let mut sigma = vec![0; self.n];
            for (new, &old) in order.iter().enumerate() {
                sigma[old] = new;
            }
            let sigma = Permutation::from_images_unchecked(sigma);
            let cand = self.relabel(&sigma);
            let better = match &best {
                None => true,
                Some((b, _)) => (cand.h.images(), cand.v.images()) < (b.h.images(), b.v.images()),
            };
            if better {
                best = Some((cand, sigma));
            }
        }
        Ok(best.expect("valid origami has at least one square"))
    }

    pub fn canonical(&self) -> Result<Origami> {
        Ok(self.canonical_form()?.0)
    }

    pub fn is_isomorphic(&self, other: &Origami) -> Result<bool> {
        Ok(self.n == other.n && self.canonical()? == other.canonical()?)
    }
}

/// All `[1,1]` origamis with `n` squares up to isomorphism, optionally
/// restricted to one genus, as canonical forms in lexicographic order.
pub fn enumerate_one_one(n: usize, genus: Option<usize>) -> Vec<Origami> {
    if n == 0 {
        return Vec::new();
    }
    let h = Permutation::standard_cycle(n);
    let mut found = std::collections::BTreeSet::new();
    for_each_n_cycle(n, |v| {
        let o = Origami { n, h: h.clone(), v: v.clone() };
        if let Some(g) = genus {
            if (n + 2 - o.vertex_count()) / 2 != g {
                return;
            }
        }
        let c = o.canonical().expect("n-cycles generate a transitive group");
        found.insert((c.h.images().to_vec(), c.v.images().to_vec()));
    });
    found
        .into_iter()
        .map(|(h, v)| Origami { n, h: Permutation::from_images_unchecked(h), v: Permutation::from_images_unchecked(v) })
        .collect()
}
