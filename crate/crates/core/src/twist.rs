//! Dehn twists by curve surgery, twist words, and iteration of
//! `h = T_a ∘ T_g⁻¹`.
//!
//! Twisting `g` about `c` replaces every crossing of `g` with `c` by a strand
//! that runs once around `c`. Near `c` the strands spiral through a thin
//! annulus: a strand started at crossing `x` passes edge point `m` of `c` at
//! a height that depends only on how far `m` lies from `x` along `c`, so the
//! strands never cross each other.

use serde::Serialize;

use crate::complex::SurfaceComplex;
use crate::curve::{arc_exits, EdgePoint, PLCurve, Rat};
use crate::error::{Error, Result};
use crate::minimal::reduce_to_minimal;
use crate::overlay::{overlay_unchecked, perturb_off, EdgeOccupancy};
use crate::regions::{complement_regions, Region};

pub const DEFAULT_CHORD_BUDGET: usize = 100_000;
pub const CHORD_BUDGET_ENV: &str = "ORIGAMI_LAB_CHORD_BUDGET";

/// The chord budget, from the environment if set.
pub fn chord_budget() -> usize {
    std::env::var(CHORD_BUDGET_ENV).ok().and_then(|s| s.trim().parse().ok()).unwrap_or(DEFAULT_CHORD_BUDGET)
}

/// Heights in `(-1, 1)` for `k` strands, none equal to zero.
fn heights(k: usize) -> Vec<Rat> {
    let denom = Rat::from_integer(k as i128 + 1);
    let shift = if k % 2 == 1 { Rat::new(1, 2) / denom } else { Rat::from_integer(0) };
    (0..k).map(|r| Rat::from_integer(2 * r as i128 + 1 - k as i128) / denom + shift).collect()
}

/// Surgery on a pair that is already transverse; no reduction.
pub fn twist_transverse(
    g: &PLCurve,
    c: &PLCurve,
    direction: i32,
    complex: &SurfaceComplex,
    budget: usize,
) -> Result<PLCurve> {
    let g = perturb_off(g, c, complex);
    let data = overlay_unchecked(&g, c, complex.n());
    let k = data.count();
    if k == 0 {
        return Ok(g);
    }
    let (lg, lc) = (g.len(), c.len());
    let total = lg + k * lc;
    if total > budget {
        return Err(Error::ChordBudget { chords: total, budget });
    }
    // Strand height slot of crossing x at edge point m: slot[m][x].
    let hs = heights(k);
    let occ = EdgeOccupancy::from_curves([&g, c], complex);
    let half_gap: Vec<Rat> =
        c.points.iter().map(|p| occ.min_gap(complex.edge_of(p.square, p.side), &p.t) / Rat::from_integer(2)).collect();
    let mut order: Vec<usize> = (0..k).collect();
    let mut slot = vec![vec![0usize; k]; lc];
    for (m, row) in slot.iter_mut().enumerate() {
        order.sort_by_key(|&x| {
            let cx = &data.crossings[x];
            ((cx.b_chord + 2 * lc - m - 1) % lc, cx.b_rank)
        });
        for (r, &x) in order.iter().enumerate() {
            row[x] = if direction > 0 { r } else { k - 1 - r };
        }
    }
    let strand = |x: usize| -> Vec<EdgePoint> {
        let cx = &data.crossings[x];
        let forward = cx.sign * direction > 0;
        let steps = arc_exits(c, (cx.b_chord, cx.b_rank), (cx.b_chord, cx.b_rank), forward);
        steps
            .into_iter()
            .enumerate()
            .map(|(j, e)| {
                let m = if forward { (cx.b_chord + j) % lc } else { (cx.b_chord + 2 * lc - 1 - j) % lc };
                let own = c.points[m];
                let t = own.t + Rat::from_integer(own.side.left_sign() as i128) * half_gap[m] * hs[slot[m][x]];
                EdgePoint::new(e.square, e.side, t)
            })
            .collect()
    };
    let mut points = Vec::with_capacity(total);
    let mut next = 0;
    for i in 0..lg {
        while next < k && data.crossings[next].a_chord == i {
            points.extend(strand(next));
            next += 1;
        }
        points.push(g.points[i]);
    }
    let out = PLCurve::new(points).normalized(complex)?;
    out.check_on(complex)?;
    Ok(out.renormalized(complex))
}

/// `T_c(g)` for `direction = +1`, `T_c⁻¹(g)` for `-1`. The pair is put in
/// minimal position first.
pub fn dehn_twist(g: &PLCurve, c: &PLCurve, direction: i32, complex: &SurfaceComplex) -> Result<PLCurve> {
    g.check_on(complex)?;
    c.check_on(complex)?;
    let m = reduce_to_minimal(g, c, complex)?;
    twist_transverse(&m.a, &m.b, direction, complex, chord_budget())
}

#[derive(Clone, Debug)]
pub struct TwistFactor {
    pub curve: PLCurve,
    pub power: i32,
}

/// A product of twist powers, applied right to left.
#[derive(Clone, Debug, Default)]
pub struct TwistWord {
    pub factors: Vec<TwistFactor>,
}

impl TwistWord {
    pub fn new(factors: Vec<TwistFactor>) -> Self {
        TwistWord { factors }
    }

    /// `T_a ∘ T_g⁻¹`.
    pub fn pseudo_anosov(a: &PLCurve, g: &PLCurve) -> Self {
        TwistWord::new(vec![TwistFactor { curve: a.clone(), power: 1 }, TwistFactor { curve: g.clone(), power: -1 }])
    }

    pub fn inverse(&self) -> Self {
        TwistWord::new(
            self.factors.iter().rev().map(|f| TwistFactor { curve: f.curve.clone(), power: -f.power }).collect(),
        )
    }

    pub fn apply(&self, g: &PLCurve, complex: &SurfaceComplex) -> Result<PLCurve> {
        apply_word(self, g, complex)
    }
}

pub fn apply_word(w: &TwistWord, g: &PLCurve, complex: &SurfaceComplex) -> Result<PLCurve> {
    g.check_on(complex)?;
    let budget = chord_budget();
    let mut cur = g.clone();
    for f in w.factors.iter().rev() {
        f.curve.check_on(complex)?;
        let dir = f.power.signum();
        for _ in 0..f.power.unsigned_abs() {
            cur = twist_transverse(&cur, &f.curve, dir, complex, budget)?;
        }
    }
    Ok(cur)
}

#[derive(Clone, Debug, Serialize)]
pub struct IterateRecord {
    pub n: usize,
    #[serde(skip)]
    pub curve: PLCurve,
    pub chords: usize,
    pub i_a: usize,
    pub i_g: usize,
    pub coherent_a: bool,
    pub coherent_g: bool,
    pub filling_a: bool,
}

/// Intersection with `x`, coherence and the filling flag. A sign-uniform
/// overlay is already minimal, so reduction only runs otherwise.
fn probe(y: &PLCurve, x: &PLCurve, complex: &SurfaceComplex, want_regions: bool) -> Result<(usize, bool, bool)> {
    let y2 = perturb_off(y, x, complex);
    let data = overlay_unchecked(x, &y2, complex.n());
    if data.sign_uniform() {
        let filling =
            want_regions && data.count() > 0 && complement_regions(x, &y2, &data, complex).iter().all(Region::is_disc);
        return Ok((data.count(), true, filling));
    }
    let m = reduce_to_minimal(x, &y2, complex)?;
    let coherent = m.count() as i64 == m.data.algebraic().abs();
    let filling = want_regions && complement_regions(&m.a, &m.b, &m.data, complex).iter().all(Region::is_disc);
    Ok((m.count(), coherent, filling))
}

/// Records for `h^n(g)`, `n = 1..=steps`, with `h = T_a ∘ T_g⁻¹`.
pub fn iterate_pa(a: &PLCurve, g: &PLCurve, steps: usize, complex: &SurfaceComplex) -> Result<Vec<IterateRecord>> {
    iterate_pa_with_budget(a, g, steps, complex, chord_budget())
}

pub fn iterate_pa_with_budget(
    a: &PLCurve,
    g: &PLCurve,
    steps: usize,
    complex: &SurfaceComplex,
    budget: usize,
) -> Result<Vec<IterateRecord>> {
    let run = iterate_pa_partial(a, g, steps, complex, budget)?;
    match run.stopped {
        Some(e) => Err(e),
        None => Ok(run.records),
    }
}

/// Records computed before an iteration stopped, and why it stopped.
#[derive(Debug)]
pub struct PartialIteration {
    pub records: Vec<IterateRecord>,
    pub stopped: Option<Error>,
}

/// Like [`iterate_pa`], but keeps the records produced before a failure.
/// Precondition failures are still returned as errors.
pub fn iterate_pa_partial(
    a: &PLCurve,
    g: &PLCurve,
    steps: usize,
    complex: &SurfaceComplex,
    budget: usize,
) -> Result<PartialIteration> {
    a.check_on(complex)?;
    g.check_on(complex)?;
    let start = reduce_to_minimal(a, g, complex)?;
    if start.count() as i64 != start.data.algebraic().abs() {
        return Err(Error::NotCoherent { geometric: start.count(), algebraic: start.data.algebraic() });
    }
    if start.count() == 0 || !complement_regions(&start.a, &start.b, &start.data, complex).iter().all(Region::is_disc) {
        return Err(Error::NotFilling);
    }
    let (a, g) = (start.a, start.b);
    let mut records: Vec<IterateRecord> = Vec::with_capacity(steps);
    let mut cur = g.clone();
    let step = |cur: &PLCurve, n: usize, last: Option<usize>| -> Result<IterateRecord> {
        let inner = twist_transverse(cur, &g, -1, complex, budget)?;
        let next = twist_transverse(&inner, &a, 1, complex, budget)?;
        let (i_a, coherent_a, filling_a) = probe(&next, &a, complex, true)?;
        let (i_g, coherent_g, _) = probe(&next, &g, complex, false)?;
        if !(coherent_a && coherent_g) {
            return Err(Error::Unverified(format!("h^{n}(g) is not coherent with both curves")));
        }
        if let Some(last) = last {
            if i_a <= last {
                return Err(Error::Unverified(format!("i(a, h^{n}(g)) = {i_a} did not grow past {last}")));
            }
        }
        Ok(IterateRecord { n, chords: next.len(), curve: next, i_a, i_g, coherent_a, coherent_g, filling_a })
    };
    for n in 1..=steps {
        match step(&cur, n, records.last().map(|r| r.i_a)) {
            Ok(r) => {
                cur = r.curve.clone();
                records.push(r);
            }
            Err(e) => return Ok(PartialIteration { records, stopped: Some(e) }),
        }
    }
    Ok(PartialIteration { records, stopped: None })
}
