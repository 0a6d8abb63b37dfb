//! Permutations of `{0, …, n-1}` stored as image arrays.

use std::fmt;

use serde::{Deserialize, Serialize};

/// A permutation given by its image array: `images[i]` is the image of `i`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { images: (0..n).collect() }
    }

    /// Wraps an image array without checking it. Use [`Permutation::is_bijection`]
    /// or [`Permutation::try_from_images`] when the input is untrusted.
    pub fn from_images_unchecked(images: Vec<usize>) -> Self {
        Permutation { images }
    }

    pub fn try_from_images(images: Vec<usize>) -> Option<Self> {
        let p = Permutation { images };
        p.is_bijection().then_some(p)
    }

    /// The n-cycle `0 -> 1 -> … -> n-1 -> 0`.
    pub fn standard_cycle(n: usize) -> Self {
        Permutation { images: (0..n).map(|i| (i + 1) % n.max(1)).collect() }
    }

    /// Builds a permutation on `n` points from disjoint cycles.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Option<Self> {
        let mut images: Vec<usize> = (0..n).collect();
        let mut seen = vec![false; n];
        for cycle in cycles {
            for (k, &x) in cycle.iter().enumerate() {
                if x >= n || seen[x] {
                    return None;
                }
                seen[x] = true;
                images[x] = cycle[(k + 1) % cycle.len()];
            }
        }
        Some(Permutation { images })
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn is_bijection(&self) -> bool {
        let n = self.images.len();
        let mut seen = vec![false; n];
        for &x in &self.images {
            if x >= n || seen[x] {
                return false;
            }
            seen[x] = true;
        }
        true
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x] = i;
        }
        Permutation { images: inv }
    }

    /// `self.then(other)` applies `self` first: `i -> other(self(i))`.
    pub fn then(&self, other: &Permutation) -> Self {
        Permutation { images: self.images.iter().map(|&x| other.images[x]).collect() }
    }

    /// Conjugate by a relabeling `sigma` (old label -> new label): `sigma ∘ self ∘ sigma⁻¹`.
    pub fn relabel(&self, sigma: &Permutation) -> Self {
        let mut images = vec![0; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            images[sigma.images[i]] = sigma.images[x];
        }
        Permutation { images }
    }

    /// Disjoint cycles, each starting at its smallest element, ordered by that element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.images[start];
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.images[x];
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_count(&self) -> usize {
        self.cycles().len()
    }

    pub fn is_single_cycle(&self) -> bool {
        !self.images.is_empty() && self.cycle_count() == 1
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles: Vec<_> = self.cycles().into_iter().filter(|c| c.len() > 1).collect();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            let parts: Vec<String> = c.iter().map(|x| x.to_string()).collect();
            write!(f, "({})", parts.join(" "))?;
        }
        Ok(())
    }
}

/// Calls `f` on every n-cycle of `{0, …, n-1}` in a fixed order.
///
/// Cycles are written `(0 a_1 … a_{n-1})` and visited in lexicographic order of
/// `(a_1, …, a_{n-1})`.
pub fn for_each_n_cycle(n: usize, mut f: impl FnMut(&Permutation)) {
    if n == 0 {
        return;
    }
    let mut rest: Vec<usize> = (1..n).collect();
    loop {
        let mut images = vec![0; n];
        let mut prev = 0;
        for &x in &rest {
            images[prev] = x;
            prev = x;
        }
        images[prev] = 0;
        f(&Permutation { images });
        if !next_permutation(&mut rest) {
            break;
        }
    }
}

fn next_permutation(xs: &mut [usize]) -> bool {
    if xs.len() < 2 {
        return false;
    }
    let mut i = xs.len() - 1;
    while i > 0 && xs[i - 1] >= xs[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = xs.len() - 1;
    while xs[j] <= xs[i - 1] {
        j -= 1;
    }
    xs.swap(i - 1, j);
    xs[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycles_of_transposition() {
        let p = Permutation::from_cycles(3, &[&[0, 1]]).unwrap();
        assert_eq!(p.cycles(), vec![vec![0, 1], vec![2]]);
        assert_eq!(p.to_string(), "(0 1)");
    }

    #[test]
    fn n_cycle_enumeration_counts() {
        for n in 1..=6 {
            let mut count = 0;
            for_each_n_cycle(n, |p| {
                assert!(p.is_single_cycle());
                count += 1;
            });
            let expected: usize = (1..n).product();
            assert_eq!(count, expected.max(1));
        }
    }

    #[test]
    fn relabel_is_conjugation() {
        let p = Permutation::from_cycles(4, &[&[0, 1, 2]]).unwrap();
        let sigma = Permutation::from_cycles(4, &[&[0, 3]]).unwrap();
        let q = p.relabel(&sigma);
        // sigma ∘ p ∘ sigma⁻¹
        let expected = sigma.inverse().then(&p).then(&sigma);
        assert_eq!(q, expected);
    }

    #[test]
    fn rejects_non_bijection() {
        assert!(Permutation::try_from_images(vec![0, 0]).is_none());
        assert!(Permutation::try_from_images(vec![1, 2]).is_none());
        assert!(Permutation::try_from_images(vec![1, 0]).is_some());
    }
}
