//! Experiments on bicorn paths: intersection quotients, a greedy path
//! search, distance bounds and growth under iteration.
//!
//! Reports carry data only. The greedy search draws candidates from the
//! bicorns of `(current, b)`, and every report says so.

use serde::Serialize;

use crate::bicorn::{enumerate_bicorns, origami_edge_path, pair_matrix, verify_edge_path, Arcs, EdgePath};
use crate::complex::SurfaceComplex;
use crate::curve::{format_rat, PLCurve, Rat};
use crate::error::{Error, Result};
use crate::minimal::{complement, intersection_numbers, is_isotopic};
use crate::regions::Region;
use crate::twist::{iterate_pa_partial, PartialIteration};

pub const GREEDY_UNIVERSE: &str = "bicorns of (current, b) meeting current once and coherent with a and b";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quotient {
    pub i_b: usize,
    pub i_a: usize,
}

impl Quotient {
    pub fn value(&self) -> Rat {
        Rat::new(self.i_b as i128, self.i_a as i128)
    }
}

impl Serialize for Quotient {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("Quotient", 3)?;
        st.serialize_field("i_b", &self.i_b)?;
        st.serialize_field("i_a", &self.i_a)?;
        st.serialize_field("value", &format_rat(&self.value()))?;
        st.end()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct QuotientReport {
    pub length: usize,
    /// `i(b, v_k) / i(a, v_k)` for `0 < k < length`.
    pub quotients: Vec<Quotient>,
    pub strictly_decreasing: bool,
}

/// Quotients along a verified path from `a` to `b`.
pub fn quotient_sequence(p: &EdgePath, a: &PLCurve, b: &PLCurve, complex: &SurfaceComplex) -> Result<QuotientReport> {
    let report = verify_edge_path(&p.curves, complex)?;
    if !report.passed() {
        return Err(Error::Unverified(report.failures.join("; ")));
    }
    let mut quotients = Vec::new();
    for v in p.curves.iter().skip(1).take(p.length.saturating_sub(1)) {
        let (i_a, _) = intersection_numbers(a, v, complex)?;
        let (i_b, _) = intersection_numbers(b, v, complex)?;
        if i_a == 0 {
            return Err(Error::Unverified("an interior curve misses a".into()));
        }
        quotients.push(Quotient { i_b, i_a });
    }
    let strictly_decreasing = quotients.windows(2).all(|w| w[0].value() > w[1].value());
    Ok(QuotientReport { length: p.length, quotients, strictly_decreasing })
}

/// The candidate minimizing `i(b, ·)` over [`GREEDY_UNIVERSE`], with its
/// enumeration index.
pub fn greedy_next(
    current: &PLCurve,
    a: &PLCurve,
    b: &PLCurve,
    complex: &SurfaceComplex,
) -> Result<(PLCurve, Arcs, usize)> {
    let mut best: Option<(usize, PLCurve, Arcs, usize)> = None;
    for (idx, x) in enumerate_bicorns(current, b, complex)?.into_iter().enumerate() {
        let (ic, _) = intersection_numbers(current, &x.curve, complex)?;
        if ic != 1 {
            continue;
        }
        let (ia, alg_a) = intersection_numbers(a, &x.curve, complex)?;
        let (ib, alg_b) = intersection_numbers(b, &x.curve, complex)?;
        if ia as i64 != alg_a.abs() || ib as i64 != alg_b.abs() {
            continue;
        }
        if best.as_ref().is_none_or(|(bi, ..)| ib < *bi) {
            best = Some((ib, x.curve, x.arcs, idx));
        }
    }
    best.map(|(_, c, arcs, idx)| (c, arcs, idx))
        .ok_or_else(|| Error::NoCandidate("no bicorn of (current, b) qualifies".into()))
}

#[derive(Clone, Debug, Serialize)]
pub struct ExplorationReport {
    pub best_path: EdgePath,
    pub greedy_length: usize,
    pub bicorn_length: Option<usize>,
    /// An upper bound for the shortest origami edge-path.
    pub origami_length_upper: usize,
    pub universe: &'static str,
    pub log: Vec<String>,
}

/// Greedy steps from `a` until `b` is chosen, at most `cap` of them.
pub fn greedy_path(a: &PLCurve, b: &PLCurve, cap: usize, complex: &SurfaceComplex) -> Result<ExplorationReport> {
    let mut log = Vec::new();
    let (i_ab, _) = intersection_numbers(a, b, complex)?;
    if i_ab == 0 && is_isotopic(a, b, complex)? {
        let curves = vec![a.clone()];
        let checks = pair_matrix(&curves, complex)?;
        let best_path = EdgePath { curves, arcs: vec![Arcs::WholeA], checks, length: 0, fallbacks: vec![] };
        log.push("a and b are isotopic".into());
        return Ok(ExplorationReport {
            best_path,
            greedy_length: 0,
            bicorn_length: Some(0),
            origami_length_upper: 0,
            universe: GREEDY_UNIVERSE,
            log,
        });
    }
    let mut curves = vec![a.clone()];
    let mut arcs = vec![Arcs::WholeA];
    let mut current = a.clone();
    loop {
        if curves.len() > cap {
            return Err(Error::StepCap(cap));
        }
        let (next, kind, idx) = greedy_next(&current, a, b, complex)?;
        let (ib, _) = intersection_numbers(b, &next, complex)?;
        log.push(format!("step {}: candidate {idx} ({kind:?}), i(b, .) = {ib}", curves.len()));
        curves.push(next.clone());
        arcs.push(kind);
        if kind == Arcs::WholeB {
            break;
        }
        current = next;
    }
    let report = verify_edge_path(&curves, complex)?;
    if !report.passed() {
        return Err(Error::Unverified(report.failures.join("; ")));
    }
    let checks = pair_matrix(&curves, complex)?;
    let greedy_length = curves.len() - 1;
    let greedy = EdgePath { curves, arcs, checks, length: greedy_length, fallbacks: vec![] };
    let bicorn = match origami_edge_path(a, b, complex) {
        Ok(p) => Some(p),
        Err(e) => {
            log.push(format!("bicorn path unavailable: {e}"));
            None
        }
    };
    let bicorn_length = bicorn.as_ref().map(|p| p.length);
    let best_path = match bicorn {
        Some(p) if p.length < greedy_length => p,
        _ => greedy,
    };
    Ok(ExplorationReport {
        origami_length_upper: best_path.length,
        best_path,
        greedy_length,
        bicorn_length,
        universe: GREEDY_UNIVERSE,
        log,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LowerReason {
    Isotopic,
    Distinct,
    Intersecting,
    Filling,
}

#[derive(Clone, Debug, Serialize)]
pub struct DistanceBounds {
    /// Lower bound for the distance in the graph of non-separating curves.
    pub lower: usize,
    pub reason: LowerReason,
    /// Length of a path whose consecutive curves meet at most twice.
    pub upper_rasmussen: Option<usize>,
    /// Twice the path length. No explicit path is produced for it.
    pub upper_ns: Option<usize>,
    pub ns_certificate: bool,
}

pub fn distance_bounds(
    a: &PLCurve,
    b: &PLCurve,
    p: Option<&EdgePath>,
    complex: &SurfaceComplex,
) -> Result<DistanceBounds> {
    let (m, regions) = complement(a, b, complex)?;
    let isotopic =
        m.count() == 0 && regions.iter().any(|r| r.euler_characteristic() == 0 && r.touches_a && r.touches_b);
    let (lower, reason) = if isotopic {
        (0, LowerReason::Isotopic)
    } else if m.count() == 0 {
        (1, LowerReason::Distinct)
    } else if regions.iter().all(Region::is_disc) {
        (3, LowerReason::Filling)
    } else {
        (2, LowerReason::Intersecting)
    };
    let upper_rasmussen = p.map(|p| p.length);
    let upper_ns = p.map(|p| 2 * p.length);
    if let Some(u) = upper_ns {
        if lower > u {
            return Err(Error::Unverified(format!("lower bound {lower} exceeds upper bound {u}")));
        }
    }
    Ok(DistanceBounds { lower, reason, upper_rasmussen, upper_ns, ns_certificate: false })
}

#[derive(Clone, Debug, Serialize)]
pub struct GrowthRow {
    pub n: usize,
    pub chords: usize,
    pub i_a: usize,
    pub i_g: usize,
    pub coherent_a: bool,
    pub coherent_g: bool,
    pub filling: bool,
    pub lower: usize,
}

#[derive(Debug, Serialize)]
pub struct GrowthTable {
    pub rows: Vec<GrowthRow>,
    /// Why iteration ended before the requested step, if it did.
    pub stopped: Option<String>,
}

/// Rows for `h^n(g)`, `n = 0..=steps`, with `h = T_a ∘ T_g⁻¹`. The row for
/// `n = 0` is `g` itself.
pub fn growth_experiment(
    a: &PLCurve,
    g: &PLCurve,
    steps: usize,
    budget: usize,
    complex: &SurfaceComplex,
) -> Result<GrowthTable> {
    let PartialIteration { records, stopped } = iterate_pa_partial(a, g, steps, complex, budget)?;
    let (i_a, alg) = intersection_numbers(a, g, complex)?;
    let mut rows = vec![GrowthRow {
        n: 0,
        chords: g.len(),
        i_a,
        i_g: 0,
        coherent_a: i_a as i64 == alg.abs(),
        coherent_g: true,
        filling: true,
        lower: 3,
    }];
    rows.extend(records.into_iter().map(|r| GrowthRow {
        n: r.n,
        chords: r.chords,
        i_a: r.i_a,
        i_g: r.i_g,
        coherent_a: r.coherent_a,
        coherent_g: r.coherent_g,
        filling: r.filling_a,
        lower: if r.filling_a {
            3
        } else if r.i_a > 0 {
            2
        } else {
            1
        },
    }));
    Ok(GrowthTable { rows, stopped: stopped.map(|e| e.to_string()) })
}

/// One origami's row in a survey of bicorn and greedy paths between cores.
#[derive(Clone, Debug, Serialize)]
pub struct SurveyRow {
    pub n: usize,
    pub genus: usize,
    pub h: Vec<usize>,
    pub v: Vec<usize>,
    pub bicorn_length: Option<usize>,
    pub quotients_decreasing: Option<bool>,
    pub greedy_length: Option<usize>,
    pub failure: Option<String>,
}

/// Bicorn and greedy paths between the cores of `origami`.
pub fn survey_cores(origami: &crate::origami::Origami, cap: usize) -> Result<SurveyRow> {
    let complex = SurfaceComplex::build(origami)?;
    let (h, v) = crate::curve::core_curves(&complex);
    let mut row = SurveyRow {
        n: origami.n,
        genus: complex.genus(),
        h: origami.h.images().to_vec(),
        v: origami.v.images().to_vec(),
        bicorn_length: None,
        quotients_decreasing: None,
        greedy_length: None,
        failure: None,
    };
    let mut failures = Vec::new();
    match origami_edge_path(&h[0], &v[0], &complex) {
        Ok(p) => {
            row.bicorn_length = Some(p.length);
            match quotient_sequence(&p, &h[0], &v[0], &complex) {
                Ok(q) => row.quotients_decreasing = Some(q.strictly_decreasing),
                Err(e) => failures.push(format!("quotients: {e}")),
            }
        }
        Err(e) => failures.push(format!("bicorn path: {e}")),
    }
    match greedy_path(&h[0], &v[0], cap, &complex) {
        Ok(r) => row.greedy_length = Some(r.greedy_length),
        Err(e) => failures.push(format!("greedy: {e}")),
    }
    if !failures.is_empty() {
        row.failure = Some(failures.join("; "));
    }
    Ok(row)
}
