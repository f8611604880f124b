//! File formats: curve, diagram and symmetry documents in, graph and
//! verdict reports out. Output ordering is deterministic.

use std::fmt::Write as _;

use serde::Deserialize;
use serde_json::{json, Value};

use crate::disk_complex::{
    CappedDistance, ClassificationVerdict, Colors, CriticalWitness, CurveGraph, EdgeWitness, Finding, GraphKind,
    Symmetry,
};
use crate::error::{HandlebodyError, SurfaceError};
use crate::handlebody::{CurveCap, HeegaardDiagram};
use crate::surface::{CurveClass, Slope};

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("malformed JSON")]
    Json(#[from] serde_json::Error),
    #[error("curve needs exactly one of `coords` or `slope`")]
    CurveShape,
    #[error("curve genus {0} does not match the enclosing genus {1}")]
    Genus(u32, u32),
    #[error("curve needs a genus")]
    MissingGenus,
    #[error(transparent)]
    Surface(#[from] SurfaceError),
    #[error(transparent)]
    Handlebody(#[from] HandlebodyError),
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CurveDoc {
    pub genus: Option<u32>,
    pub coords: Option<Vec<u32>>,
    pub slope: Option<[i64; 2]>,
}

impl CurveDoc {
    /// Resolves the curve, taking the genus from context when omitted.
    pub fn resolve(&self, context: Option<u32>) -> Result<CurveClass, FormatError> {
        if let (Some(g), Some(c)) = (self.genus, context) {
            if g != c {
                return Err(FormatError::Genus(g, c));
            }
        }
        match (&self.coords, self.slope) {
            (Some(coords), None) => {
                let g = self.genus.or(context).ok_or(FormatError::MissingGenus)?;
                Ok(CurveClass::new(g, coords.clone())?)
            }
            (None, Some([p, q])) => {
                let g = self.genus.or(context).unwrap_or(1);
                if g != 1 {
                    return Err(SurfaceError::NotTorus(g).into());
                }
                Ok(CurveClass::from_slope(Slope::new(p, q)?))
            }
            _ => Err(FormatError::CurveShape),
        }
    }
}

pub fn parse_curve(text: &str) -> Result<CurveClass, FormatError> {
    serde_json::from_str::<CurveDoc>(text)?.resolve(None)
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
struct DiagramDoc {
    genus: u32,
    red: Vec<CurveDoc>,
    blue: Vec<CurveDoc>,
}

pub fn parse_diagram(text: &str) -> Result<HeegaardDiagram, FormatError> {
    let doc: DiagramDoc = serde_json::from_str(text)?;
    let side = |v: &[CurveDoc]| -> Result<Vec<CurveClass>, FormatError> {
        v.iter().map(|c| c.resolve(Some(doc.genus))).collect()
    };
    Ok(HeegaardDiagram::new(doc.genus, side(&doc.red)?, side(&doc.blue)?)?)
}

pub fn diagram_json(d: &HeegaardDiagram) -> Value {
    use crate::handlebody::Color;
    let side = |c: Color| -> Vec<Value> { d.side(c).curves().iter().map(curve_json).collect() };
    json!({ "genus": d.genus(), "red": side(Color::Red), "blue": side(Color::Blue) })
}

/// Two curves naming an edge, e.g. `[{"slope":[1,0]},{"slope":[0,1]}]`.
pub fn parse_edge(text: &str, genus: u32) -> Result<(CurveClass, CurveClass), FormatError> {
    let [a, b]: [CurveDoc; 2] = serde_json::from_str(text)?;
    Ok((a.resolve(Some(genus))?, b.resolve(Some(genus))?))
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
struct SymmetryDoc {
    map: Vec<[CurveDoc; 2]>,
    #[serde(default)]
    swap_colors: bool,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
struct SymmetriesDoc {
    symmetries: Vec<SymmetryDoc>,
}

/// `{"symmetries": [{"map": [[curve, curve], ...], "swap_colors": bool}]}`.
pub fn parse_symmetries(text: &str, genus: u32) -> Result<Vec<Symmetry>, FormatError> {
    let doc: SymmetriesDoc = serde_json::from_str(text)?;
    doc.symmetries
        .iter()
        .map(|s| {
            let map = s
                .map
                .iter()
                .map(|[a, b]| Ok((a.resolve(Some(genus))?, b.resolve(Some(genus))?)))
                .collect::<Result<_, FormatError>>()?;
            Ok(Symmetry { map, swap_colors: s.swap_colors })
        })
        .collect()
}

pub fn curve_json(c: &CurveClass) -> Value {
    match c.slope() {
        Some(s) => json!({ "genus": 1, "coords": c.coords(), "slope": [s.p(), s.q()] }),
        None => json!({ "genus": c.genus(), "coords": c.coords() }),
    }
}

pub fn cap_json(cap: &CurveCap) -> Value {
    match cap {
        CurveCap::CoordinateSum(n) => json!({ "coordinate_sum": n }),
        CurveCap::SlopeBox(n) => json!({ "slope_box": n }),
    }
}

fn color_names(c: &Colors) -> Vec<&'static str> {
    let mut out = Vec::new();
    if c.red {
        out.push("red");
    }
    if c.blue {
        out.push("blue");
    }
    out
}

pub fn graph_json(g: &CurveGraph) -> Value {
    let vertices: Vec<Value> =
        g.vertices.iter().map(|v| json!({ "coords": v.curve.coords(), "colors": color_names(&v.colors) })).collect();
    let edges: Vec<Value> = g.edges.iter().map(|e| json!({ "u": e.u, "v": e.v, "i": e.i })).collect();
    json!({
        "kind": match g.kind { GraphKind::Gamma => "gamma", GraphKind::Lambda => "lambda" },
        "genus": g.genus,
        "cap": cap_json(&g.cap),
        "certified": g.certified,
        "vertices": vertices,
        "edges": edges,
    })
}

pub fn graph_dot(g: &CurveGraph) -> String {
    let mut out = String::new();
    let name = match g.kind {
        GraphKind::Gamma => "gamma",
        GraphKind::Lambda => "lambda",
    };
    writeln!(out, "graph {name} {{").unwrap();
    writeln!(out, "  node [style=filled, fontcolor=white];").unwrap();
    for (i, v) in g.vertices.iter().enumerate() {
        let color = match (v.colors.red, v.colors.blue) {
            (true, true) => "purple",
            (true, false) => "red",
            (false, true) => "blue",
            (false, false) => "gray",
        };
        writeln!(out, "  n{i} [label=\"{}\", fillcolor={color}];", v.curve).unwrap();
    }
    for e in &g.edges {
        writeln!(out, "  n{} -- n{} [label=\"{}\"];", e.u, e.v, e.i).unwrap();
    }
    out.push_str("}\n");
    out
}

pub fn graph_text(g: &CurveGraph) -> String {
    let mut out = String::new();
    writeln!(out, "{} vertices, {} edges (cap {}, {})", g.vertices.len(), g.edges.len(), g.cap, certified_word(g.certified))
        .unwrap();
    for (i, v) in g.vertices.iter().enumerate() {
        writeln!(out, "  {i}: {} [{}]", v.curve, color_names(&v.colors).join(",")).unwrap();
    }
    for e in &g.edges {
        writeln!(out, "  {} -- {} (i={})", e.u, e.v, e.i).unwrap();
    }
    out
}

fn certified_word(c: bool) -> &'static str {
    if c {
        "certified"
    } else {
        "partial: budget exhausted"
    }
}

fn finding_json<T>(f: &Finding<T>, item: impl Fn(&T) -> Value) -> Value {
    match f {
        Finding::Found(t) => json!({ "found": item(t) }),
        Finding::NoneWithin(cap) => json!({ "none_within_cap": cap_json(cap) }),
    }
}

fn edge_witness_json(e: &EdgeWitness) -> Value {
    json!({ "red": curve_json(&e.red), "blue": curve_json(&e.blue), "i": e.i })
}

fn critical_json(c: &CriticalWitness) -> Value {
    json!({
        "first": edge_witness_json(&c.first),
        "second": edge_witness_json(&c.second),
        "components": [c.components.0, c.components.1],
    })
}

pub fn verdict_json(v: &ClassificationVerdict) -> Value {
    json!({
        "certified": v.certified,
        "negative_claims_cap": cap_json(&v.negative_claims_cap),
        "has_red_disk": finding_json(&v.has_red_disk, curve_json),
        "has_blue_disk": finding_json(&v.has_blue_disk, curve_json),
        "reducing_class": finding_json(&v.reducing_class, curve_json),
        "edge_witness": finding_json(&v.edge_witness, edge_witness_json),
        "critical_witness": finding_json(&v.critical_witness, critical_json),
        "strongly_irreducible_within_cap": v.strongly_irreducible_within_cap,
        "isolated": v.isolated.iter().map(curve_json).collect::<Vec<_>>(),
    })
}

pub fn verdict_text(v: &ClassificationVerdict) -> String {
    let mut out = String::new();
    let line = |out: &mut String, what: &str, f: Option<String>| {
        match f {
            Some(w) => writeln!(out, "{what}: yes, witness {w}"),
            None => writeln!(out, "{what}: none within cap ({})", v.negative_claims_cap),
        }
        .unwrap()
    };
    line(&mut out, "red disk", v.has_red_disk.found().map(|c| c.to_string()));
    line(&mut out, "blue disk", v.has_blue_disk.found().map(|c| c.to_string()));
    line(&mut out, "reducing class", v.reducing_class.found().map(|c| c.to_string()));
    line(&mut out, "edge", v.edge_witness.found().map(|e| format!("{} -- {} (i={})", e.red, e.blue, e.i)));
    line(
        &mut out,
        "critical pair",
        v.critical_witness.found().map(|c| format!("{} -- {} | {} -- {}", c.first.red, c.first.blue, c.second.red, c.second.blue)),
    );
    writeln!(out, "strongly irreducible within cap: {}", v.strongly_irreducible_within_cap).unwrap();
    writeln!(out, "{}", certified_word(v.certified)).unwrap();
    out
}

pub fn distance_json(d: &CappedDistance) -> Value {
    match d {
        CappedDistance::Exact(n) => json!({ "exact": n }),
        CappedDistance::AtLeast(n) => json!({ "at_least": n }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn curves() {
        let c = parse_curve(r#"{"slope":[2,-3]}"#).unwrap();
        assert_eq!(c.slope().unwrap().q(), -3);
        assert_eq!(curve_json(&c), json!({"genus":1,"coords":[3,2,5],"slope":[2,-3]}));
        assert!(parse_curve(r#"{"coords":[1,0,1]}"#).is_err());
        assert!(parse_curve(r#"{"genus":1,"coords":[1,0,1],"slope":[1,0]}"#).is_err());
        assert!(parse_curve(r#"{"genus":1,"colour":1}"#).is_err());
    }

    #[test]
    fn diagram_round_trip() {
        let d = HeegaardDiagram::standard(2).unwrap();
        let back = parse_diagram(&diagram_json(&d).to_string()).unwrap();
        assert_eq!(back, d);
        let s3 = parse_diagram(r#"{"genus":1,"red":[{"slope":[1,0]}],"blue":[{"slope":[0,1]}]}"#).unwrap();
        assert_eq!(s3, HeegaardDiagram::s3_genus_one());
    }
}
