//! JSON documents for origamis, curves, curve pairs and edge paths.
//!
//! Rationals are written as exact `"p/q"` strings. A curve document names its
//! origami either inline or by a path relative to the document.

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::bicorn::{Arcs, EdgePath, PairMatrix};
use crate::curve::{format_rat, parse_rat, EdgePoint, PLCurve, Side};
use crate::error::{Error, Result};
use crate::origami::Origami;
use crate::perm::Permutation;

pub fn read_text(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Io { path: path.display().to_string(), reason: e.to_string() })
}

pub fn write_text(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text).map_err(|e| Error::Io { path: path.display().to_string(), reason: e.to_string() })
}

#[derive(Serialize, Deserialize)]
struct OrigamiDoc {
    n: usize,
    h: Vec<usize>,
    v: Vec<usize>,
}

fn origami_from_doc(d: OrigamiDoc) -> Result<Origami> {
    if d.h.len() != d.n || d.v.len() != d.n {
        return Err(Error::InvalidOrigami(format!(
            "n = {} but h has {} and v has {} entries",
            d.n,
            d.h.len(),
            d.v.len()
        )));
    }
    let o = Origami { n: d.n, h: Permutation::from_images_unchecked(d.h), v: Permutation::from_images_unchecked(d.v) };
    o.check()?;
    Ok(o)
}

fn origami_doc(o: &Origami) -> OrigamiDoc {
    OrigamiDoc { n: o.n, h: o.h.images().to_vec(), v: o.v.images().to_vec() }
}

/// Parses and validates an origami document.
pub fn parse_origami(text: &str) -> Result<Origami> {
    origami_from_doc(serde_json::from_str(text)?)
}

/// Parses an origami document without validating it.
pub fn parse_origami_unchecked(text: &str) -> Result<Origami> {
    let d: OrigamiDoc = serde_json::from_str(text)?;
    Ok(Origami { n: d.n, h: Permutation::from_images_unchecked(d.h), v: Permutation::from_images_unchecked(d.v) })
}

pub fn origami_json(o: &Origami) -> serde_json::Value {
    serde_json::to_value(origami_doc(o)).expect("origami serializes")
}

pub fn load_origami(path: &Path) -> Result<Origami> {
    parse_origami(&read_text(path)?)
}

/// Where a curve document finds its origami.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OrigamiRef {
    Inline(Origami),
    File(String),
}

impl OrigamiRef {
    fn to_json(&self) -> serde_json::Value {
        match self {
            OrigamiRef::Inline(o) => origami_json(o),
            OrigamiRef::File(f) => serde_json::Value::String(f.clone()),
        }
    }

    fn from_json(v: serde_json::Value) -> Result<Self> {
        match v {
            serde_json::Value::String(s) => Ok(OrigamiRef::File(s)),
            other => Ok(OrigamiRef::Inline(origami_from_doc(serde_json::from_value(other)?)?)),
        }
    }

    pub fn resolve(&self, base: Option<&Path>) -> Result<Origami> {
        match self {
            OrigamiRef::Inline(o) => Ok(o.clone()),
            OrigamiRef::File(f) => {
                let p = match base {
                    Some(dir) => dir.join(f),
                    None => PathBuf::from(f),
                };
                load_origami(&p)
            }
        }
    }
}

type PointDoc = (usize, Side, String);

fn points_doc(c: &PLCurve) -> Vec<PointDoc> {
    c.points.iter().map(|p| (p.square, p.side, format_rat(&p.t))).collect()
}

fn curve_from_points(points: Vec<PointDoc>) -> Result<PLCurve> {
    let points = points
        .into_iter()
        .map(|(s, side, t)| Ok(EdgePoint::new(s, side, parse_rat(&t)?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(PLCurve::new(points))
}

#[derive(Serialize, Deserialize)]
struct CurveDoc {
    origami: serde_json::Value,
    points: Vec<PointDoc>,
}

/// A curve together with the origami it lies on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveFile {
    pub origami_ref: OrigamiRef,
    pub origami: Origami,
    pub curve: PLCurve,
}

/// Parses a curve document. File references are resolved against `base`.
pub fn parse_curve(text: &str, base: Option<&Path>) -> Result<CurveFile> {
    let doc: CurveDoc = serde_json::from_str(text)?;
    let origami_ref = OrigamiRef::from_json(doc.origami)?;
    let origami = origami_ref.resolve(base)?;
    let curve = curve_from_points(doc.points)?;
    Ok(CurveFile { origami_ref, origami, curve })
}

pub fn load_curve(path: &Path) -> Result<CurveFile> {
    parse_curve(&read_text(path)?, path.parent())
}

pub fn curve_json(origami: &OrigamiRef, c: &PLCurve) -> serde_json::Value {
    serde_json::json!({ "origami": origami.to_json(), "points": points_doc(c) })
}

#[derive(Serialize, Deserialize)]
struct CurvePairDoc {
    origami: serde_json::Value,
    a: Vec<PointDoc>,
    b: Vec<PointDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    note: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurvePairFile {
    pub origami_ref: OrigamiRef,
    pub origami: Origami,
    pub a: PLCurve,
    pub b: PLCurve,
    pub note: Option<String>,
}

pub fn parse_curve_pair(text: &str, base: Option<&Path>) -> Result<CurvePairFile> {
    let doc: CurvePairDoc = serde_json::from_str(text)?;
    let origami_ref = OrigamiRef::from_json(doc.origami)?;
    let origami = origami_ref.resolve(base)?;
    Ok(CurvePairFile {
        origami_ref,
        origami,
        a: curve_from_points(doc.a)?,
        b: curve_from_points(doc.b)?,
        note: doc.note,
    })
}

pub fn load_curve_pair(path: &Path) -> Result<CurvePairFile> {
    parse_curve_pair(&read_text(path)?, path.parent())
}

pub fn curve_pair_json(p: &CurvePairFile) -> serde_json::Value {
    serde_json::to_value(CurvePairDoc {
        origami: p.origami_ref.to_json(),
        a: points_doc(&p.a),
        b: points_doc(&p.b),
        note: p.note.clone(),
    })
    .expect("curve pair serializes")
}

#[derive(Serialize, Deserialize)]
struct EdgePathDoc {
    curves: Vec<CurveDoc>,
    #[serde(default)]
    arcs: Vec<Arcs>,
    #[serde(default)]
    checks: PairMatrix,
    length: usize,
    #[serde(default)]
    fallbacks: Vec<usize>,
}

pub fn edge_path_json(origami: &OrigamiRef, p: &EdgePath) -> serde_json::Value {
    let doc = EdgePathDoc {
        curves: p.curves.iter().map(|c| CurveDoc { origami: origami.to_json(), points: points_doc(c) }).collect(),
        arcs: p.arcs.clone(),
        checks: p.checks.clone(),
        length: p.length,
        fallbacks: p.fallbacks.clone(),
    };
    serde_json::to_value(doc).expect("edge path serializes")
}

/// Parses an edge path. All curves must name the same origami.
pub fn parse_edge_path(text: &str, base: Option<&Path>) -> Result<(Origami, EdgePath)> {
    let doc: EdgePathDoc = serde_json::from_str(text)?;
    let mut origami: Option<Origami> = None;
    let mut curves = Vec::with_capacity(doc.curves.len());
    for c in doc.curves {
        let o = OrigamiRef::from_json(c.origami)?.resolve(base)?;
        match &origami {
            Some(prev) if *prev != o => return Err(Error::Format("curves of a path lie on different origamis".into())),
            _ => origami = Some(o),
        }
        curves.push(curve_from_points(c.points)?);
    }
    let origami = origami.ok_or_else(|| Error::Format("path has no curves".into()))?;
    if doc.length + 1 != curves.len() || !(doc.arcs.is_empty() || doc.arcs.len() == curves.len()) {
        return Err(Error::Format(format!("length {} does not match {} curves", doc.length, curves.len())));
    }
    let path = EdgePath { curves, arcs: doc.arcs, checks: doc.checks, length: doc.length, fallbacks: doc.fallbacks };
    Ok((origami, path))
}

pub fn load_edge_path(path: &Path) -> Result<(Origami, EdgePath)> {
    parse_edge_path(&read_text(path)?, path.parent())
}

pub fn to_pretty(v: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json value prints");
    s.push('\n');
    s
}
