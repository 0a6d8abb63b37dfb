//! Searches one-cylinder genus-2 origamis for a core pair whose bicorn path
//! has length 4 and intersection quotients 4/1, 2/8, 1/19.
//!
//! Usage: hempel_search N_MIN N_MAX

use std::collections::HashSet;

use origami_core::bicorn::origami_edge_path;
use origami_core::curve::core_curves;
use origami_core::explorer::quotient_sequence;
use origami_core::{Origami, SurfaceComplex};

/// Gluings of a horizontal cylinder whose top is cut into saddle connections
/// of the given lengths, reappearing on the bottom in `order`, with `twist`.
fn from_diagram(lengths: &[usize], order: &[usize], twist: usize) -> Option<Origami> {
    let n: usize = lengths.iter().sum();
    let mut bottom_start = vec![0; lengths.len()];
    let mut pos = 0;
    for &j in order {
        bottom_start[j] = pos;
        pos += lengths[j];
    }
    let mut v = vec![0; n];
    let mut x = 0;
    for (j, &l) in lengths.iter().enumerate() {
        for o in 0..l {
            v[x] = (bottom_start[j] + o + twist) % n;
            x += 1;
        }
    }
    let h: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
    let o = Origami::from_images(h, v).ok()?;
    (o.is_one_one().ok()? && o.genus().ok()? == 2).then_some(o)
}

fn compositions(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 1 {
        return vec![vec![n]];
    }
    (1..n)
        .flat_map(|first| {
            compositions(n - first, k - 1).into_iter().map(move |mut rest| {
                rest.insert(0, first);
                rest
            })
        })
        .filter(|c| c.len() == k)
        .collect()
}

fn orders(k: usize) -> Vec<Vec<usize>> {
    let mut out = vec![];
    let mut p: Vec<usize> = (0..k).collect();
    fn rec(p: &mut Vec<usize>, i: usize, out: &mut Vec<Vec<usize>>) {
        if i == p.len() {
            out.push(p.clone());
            return;
        }
        for j in i..p.len() {
            p.swap(i, j);
            rec(p, i + 1, out);
            p.swap(i, j);
        }
    }
    rec(&mut p, 0, &mut out);
    out
}

/// Start crossings `p` for which the bicorn walk on the cores takes b-steps
/// 1, 8, 19 with a-steps 4, 2, 1. Squares are labelled along `h`.
fn pattern_starts(v: &[usize]) -> Vec<usize> {
    let n = v.len();
    let mut out = vec![];
    'p: for p in 0..n {
        let rel = |y: usize| (y + n - p) % n;
        let mut x = v[p];
        if rel(x) != n - 4 {
            continue;
        }
        for k in 2..=19 {
            x = v[x];
            let r = rel(x);
            if (k < 8 && r >= n - 3)
                || (k == 8 && r != n - 2)
                || (k > 8 && k < 19 && r == n - 1)
                || (k == 19 && r != n - 1)
            {
                continue 'p;
            }
        }
        out.push(p);
    }
    out
}

fn main() {
    let args: Vec<usize> = std::env::args().skip(1).filter_map(|s| s.parse().ok()).collect();
    if args.len() != 2 {
        eprintln!("usage: hempel_search N_MIN N_MAX");
        std::process::exit(1);
    }
    let target = [(4, 1), (2, 8), (1, 19)];
    for n in args[0]..=args[1] {
        let mut seen = HashSet::new();
        let mut hits = 0;
        for k in 3..=4 {
            for order in orders(k) {
                for lengths in compositions(n, k) {
                    for twist in 0..n {
                        let Some(o) = from_diagram(&lengths, &order, twist) else { continue };
                        for p in pattern_starts(o.v.images()) {
                            // Relabel so that the start crossing is square 0.
                            let v: Vec<usize> = (0..n).map(|x| (o.v.apply((x + p) % n) + n - p) % n).collect();
                            let r = Origami::from_images(o.h.images().to_vec(), v).unwrap();
                            if !seen.insert(r.clone()) {
                                continue;
                            }
                            let cx = SurfaceComplex::build(&r).unwrap();
                            let (h, vc) = core_curves(&cx);
                            let Ok(path) = origami_edge_path(&h[0], &vc[0], &cx) else { continue };
                            let q = quotient_sequence(&path, &h[0], &vc[0], &cx).unwrap();
                            let got: Vec<(usize, usize)> = q.quotients.iter().map(|x| (x.i_b, x.i_a)).collect();
                            hits += 1;
                            let tag = if got == target { "MATCH" } else { "" };
                            println!(
                                "n={n} len={} h={:?} v={:?} quotients={got:?} {tag}",
                                path.length,
                                r.h.images(),
                                r.v.images()
                            );
                        }
                    }
                }
            }
        }
        eprintln!("n={n}: {hits} pattern hits");
    }
}
