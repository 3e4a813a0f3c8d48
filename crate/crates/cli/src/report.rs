//! JSON and text renderings of computation results.
//!
//! JSON objects are emitted with sorted keys and no whitespace, so equal
//! results always give equal bytes.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;
use serde_json::Value;
use vogel_core::cycles::{Chunk, Cycle, DegreeTable};
use vogel_core::ideals::Ideal;
use vogel_core::intersect::{BulletReport, Component, ComponentKind, EpsilonTable, InputSummary, PolarOracle, SvOutput};
use vogel_core::kernel::PolyRing;

use crate::cycfile::ideal_strings;
use crate::error::CliResult;

#[derive(Serialize)]
pub struct InputJson {
    pub label: String,
    pub dims: Vec<usize>,
    pub degree: u64,
}

impl From<&InputSummary> for InputJson {
    fn from(s: &InputSummary) -> Self {
        InputJson { label: s.label.clone(), dims: s.dims.clone(), degree: s.degree }
    }
}

#[derive(Serialize)]
pub struct ComponentJson {
    pub kind: &'static str,
    pub dim: usize,
    pub degree: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ideal: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witnesses: Option<Vec<Vec<String>>>,
}

#[derive(Serialize)]
pub struct BulletJson {
    pub inputs: Vec<InputJson>,
    pub rho: i64,
    pub d: i64,
    pub components: Vec<ComponentJson>,
    pub total_degree: u64,
    pub residual_degree: u64,
    pub bezout_product: u64,
    pub fulton_degree: u64,
    pub seeds: Vec<u64>,
    pub runs: usize,
}

#[derive(Serialize)]
pub struct ChunkJson {
    pub coeff: u64,
    pub dim: usize,
    pub degree: u64,
    pub ideal: Vec<String>,
}

fn ring(ambient: usize) -> PolyRing {
    PolyRing::projective(ambient).expect("ambient already validated")
}

pub fn chunk_json(ambient: usize, c: &Chunk) -> ChunkJson {
    ChunkJson { coeff: c.coefficient(), dim: c.dim(), degree: c.degree(), ideal: ideal_strings(&ring(ambient), c.ideal()) }
}

fn component_json(ambient: usize, c: &Component) -> CliResult<ComponentJson> {
    let r = ring(ambient);
    let (ideal, witnesses) = match c.kind {
        ComponentKind::Fixed => (c.ideal().map(|i| ideal_strings(&r, i)), None),
        ComponentKind::Moving => {
            let w: Vec<Vec<String>> = c.witness_ideals()?.iter().map(|i| ideal_strings(&r, i)).collect();
            (None, Some(w))
        }
    };
    Ok(ComponentJson { kind: c.kind.as_str(), dim: c.dim, degree: c.degree, ideal, witnesses })
}

pub fn bullet_json(r: &BulletReport) -> CliResult<BulletJson> {
    Ok(BulletJson {
        inputs: r.inputs.iter().map(InputJson::from).collect(),
        rho: r.rho,
        d: r.d,
        components: r.components.iter().map(|c| component_json(r.ambient, c)).collect::<CliResult<_>>()?,
        total_degree: r.total_degree,
        residual_degree: r.residual_degree,
        bezout_product: r.bezout_product,
        fulton_degree: r.fulton_degree,
        seeds: r.seeds.clone(),
        runs: r.runs,
    })
}

/// Serializes with sorted keys and no insignificant whitespace.
pub fn to_canonical_json<T: Serialize>(value: &T) -> String {
    let v: Value = serde_json::to_value(value).expect("report types serialize");
    serde_json::to_string(&v).expect("values serialize")
}

pub fn degree_json(c: &Cycle, t: &DegreeTable) -> Value {
    let by_dim: BTreeMap<String, u64> = t.by_dim.iter().map(|(d, v)| (d.to_string(), *v)).collect();
    serde_json::json!({ "ambient": c.ambient(), "by_dim": by_dim, "degree": t.total })
}

pub fn cycle_json(c: &Cycle) -> Value {
    let chunks: Vec<ChunkJson> = c.chunks().iter().map(|ch| chunk_json(c.ambient(), ch)).collect();
    serde_json::json!({ "ambient": c.ambient(), "chunks": chunks, "degree": c.degree() })
}

pub fn sv_json(ambient: usize, out: &SvOutput, input_degree: u64, deficit: u64) -> Value {
    let r = ring(ambient);
    let inside: Vec<Vec<ChunkJson>> =
        out.inside.iter().map(|v| v.iter().map(|c| chunk_json(ambient, c)).collect()).collect();
    let residual: Vec<ChunkJson> = out.residual.iter().map(|c| chunk_json(ambient, c)).collect();
    let cuts: Vec<String> = out.cuts.iter().map(|h| r.display(&h.primitive())).collect();
    serde_json::json!({
        "cuts": cuts,
        "deficit": deficit,
        "input_degree": input_degree,
        "inside": inside,
        "inside_degree": out.inside_degree(),
        "residual": residual,
        "residual_degree": out.residual_degree(),
        "seed": out.seed.0,
    })
}

pub fn epsilon_json(r: &BulletReport, t: &EpsilonTable) -> CliResult<Value> {
    let mut v = serde_json::to_value(bullet_json(r)?).expect("report types serialize");
    let obj = v.as_object_mut().expect("report is an object");
    obj.insert("point".into(), Value::String(t.point.to_string()));
    obj.insert("epsilon".into(), serde_json::json!(t.values));
    Ok(v)
}

pub fn polar_json(ambient: usize, p: &PolarOracle) -> Value {
    let at: Vec<Value> =
        p.at_points.iter().map(|(x, m)| serde_json::json!({ "point": x.to_string(), "colength": m })).collect();
    serde_json::json!({
        "at_points": at,
        "moving": p.moving,
        "polar": ring(ambient).display(&p.polar.primitive()),
        "total": p.total,
    })
}

fn ideal_text(r: &PolyRing, i: &Ideal) -> String {
    format!("({})", ideal_strings(r, i).join(", "))
}

/// Human-readable table of a product report.
pub fn bullet_text(r: &BulletReport) -> CliResult<String> {
    let ring = ring(r.ambient);
    let mut out = String::new();
    for i in &r.inputs {
        writeln!(out, "input {}: dims {:?}, degree {}", i.label, i.dims, i.degree).unwrap();
    }
    writeln!(out, "rho {}, d {}, runs {}", r.rho, r.d, r.runs).unwrap();
    writeln!(out, "{:<7} {:>4} {:>7}  support", "kind", "dim", "degree").unwrap();
    for c in &r.components {
        let support = match c.ideal() {
            Some(i) => ideal_text(&ring, i),
            None => c.witness_ideals()?.iter().map(|i| ideal_text(&ring, i)).collect::<Vec<_>>().join(" | "),
        };
        writeln!(out, "{:<7} {:>4} {:>7}  {}", c.kind.as_str(), c.dim, c.degree, support).unwrap();
    }
    writeln!(
        out,
        "total {}, residual {}, bezout {}, fulton {}",
        r.total_degree, r.residual_degree, r.bezout_product, r.fulton_degree
    )
    .unwrap();
    Ok(out)
}
