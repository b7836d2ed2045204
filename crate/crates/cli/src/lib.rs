//! Command implementations behind the `pcube` binary.
//!
//! Every command returns an [`Outcome`]: output plus whether the answer was
//! negative (exit 1), or a [`Failure`] that is either an input problem
//! (exit 2) or an error reported by the library (exit 1).

use std::fmt::Write as _;
use std::path::Path;

use pcube::constructions::{self, ExpansionSpec};
use pcube::dimensions::{self, lattice_dimension};
use pcube::family::{self, SetFamily};
use pcube::metric::theta_partition;
use pcube::recognition::{self, FailureWitness};
use pcube::{Graph, Vertex};
use serde_json::{json, Value};

pub mod document;

pub use document::{FamilyDocument, GraphDocument};

/// Unreadable or malformed input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InputError(pub String);

impl InputError {
    pub fn new(msg: impl Into<String>) -> Self {
        InputError(msg.into())
    }
}

#[derive(Debug)]
pub enum Failure {
    Input(InputError),
    Domain(pcube::Error),
}

impl From<InputError> for Failure {
    fn from(e: InputError) -> Self {
        Failure::Input(e)
    }
}

impl From<pcube::Error> for Failure {
    fn from(e: pcube::Error) -> Self {
        Failure::Domain(e)
    }
}

impl Failure {
    pub fn exit_code(&self) -> u8 {
        match self {
            Failure::Input(_) => 2,
            Failure::Domain(_) => 1,
        }
    }

    /// `{"error": {"kind": ..., "message": ...}}`
    pub fn to_json(&self) -> Value {
        let (kind, message) = match self {
            Failure::Input(e) => ("InputError", e.0.clone()),
            Failure::Domain(e) => (e.kind(), e.to_string()),
        };
        json!({ "error": { "kind": kind, "message": message } })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Output {
    Json(Value),
    Text(String),
}

#[derive(Debug, Clone, PartialEq)]
pub struct Success {
    pub output: Output,
    /// A well-formed "no" answer, such as a graph that is not a partial cube.
    pub negative: bool,
}

impl Success {
    fn json(value: Value) -> Self {
        Success {
            output: Output::Json(value),
            negative: false,
        }
    }

    pub fn exit_code(&self) -> u8 {
        u8::from(self.negative)
    }
}

pub type Outcome = Result<Success, Failure>;

/// Pretty-printed JSON with sorted keys and a trailing newline.
pub fn render(value: &Value) -> String {
    // serde_json's default map is ordered by key
    let mut s = serde_json::to_string_pretty(value).expect("values always serialize");
    s.push('\n');
    s
}

fn read(path: &Path) -> Result<String, InputError> {
    std::fs::read_to_string(path).map_err(|e| InputError::new(format!("{}: {e}", path.display())))
}

pub fn load_graph(path: &Path) -> Result<Graph, InputError> {
    let source = path.display().to_string();
    GraphDocument::parse(&read(path)?, &source)?.to_graph(&source)
}

pub fn load_family(path: &Path) -> Result<SetFamily, InputError> {
    let source = path.display().to_string();
    FamilyDocument::parse(&read(path)?, &source)?.to_family(&source)
}

fn graph_json(g: &Graph) -> Value {
    serde_json::to_value(GraphDocument::from_graph(g)).expect("documents serialize")
}

fn family_json(f: &SetFamily) -> Value {
    serde_json::to_value(FamilyDocument::from_family(f)).expect("documents serialize")
}

fn labels<'a>(g: &'a Graph, vs: impl IntoIterator<Item = &'a Vertex>) -> Vec<&'a str> {
    vs.into_iter().map(|&v| g.label(v)).collect()
}

fn vertex(g: &Graph, label: &str) -> Result<Vertex, Failure> {
    Ok(g.vertex(label)?)
}

fn hypercube_json(g: &Graph, emb: &recognition::HypercubeEmbedding) -> Value {
    let assignment: serde_json::Map<String, Value> = g
        .vertices()
        .map(|v| {
            let set: Vec<&str> = emb.assignment[v]
                .iter()
                .map(|&i| emb.labels[i].as_str())
                .collect();
            (g.label(v).to_string(), json!(set))
        })
        .collect();
    json!({ "labels": emb.labels, "assignment": assignment })
}

fn witness_json(g: &Graph, w: &FailureWitness) -> Value {
    match w {
        FailureWitness::NotBipartite { odd_walk } => json!({
            "kind": "NotBipartite",
            "odd_walk": labels(g, odd_walk),
        }),
        FailureWitness::NonConvexSemicube { edge, x, y, z } => json!({
            "kind": "NonConvexSemicube",
            "edge": [g.label(edge.0), g.label(edge.1)],
            "x": g.label(*x),
            "y": g.label(*y),
            "z": g.label(*z),
        }),
    }
}

pub fn recognize(g: &Graph) -> Outcome {
    let report = recognition::recognize(g)?;
    let mut out = json!({ "is_partial_cube": report.is_partial_cube });
    if let Some(w) = &report.failure_witness {
        out["witness"] = witness_json(g, w);
    }
    if let Some(emb) = &report.embedding {
        out["dim_I"] = json!(emb.labels.len());
        out["dim_Z"] = json!(lattice_dimension(g)?);
        out["embedding"] = hypercube_json(g, emb);
    }
    Ok(Success {
        output: Output::Json(out),
        negative: !report.is_partial_cube,
    })
}

pub fn dim(g: &Graph) -> Outcome {
    let sg = dimensions::semicube_graph(g)?;
    let matching = dimensions::maximum_matching(&sg);
    let dim_i = dimensions::isometric_dimension(g)?;
    Ok(Success::json(json!({
        "dim_I": dim_i,
        "dim_Z": dim_i - matching.len(),
        "matching_size": matching.len(),
    })))
}

pub fn embed(g: &Graph, lattice: bool) -> Outcome {
    if !lattice {
        return Ok(Success::json(hypercube_json(
            g,
            &recognition::embed_hypercube(g)?,
        )));
    }
    let emb = dimensions::lattice_embedding(g)?;
    let coords: serde_json::Map<String, Value> = g
        .vertices()
        .map(|v| (g.label(v).to_string(), json!(emb.coords[v])))
        .collect();
    let mut out = json!({ "dimension": emb.dimension, "coords": coords });
    if let Some(d) = emb.diagnostic {
        out["diagnostic"] = json!(d);
    }
    Ok(Success::json(out))
}

pub fn theta(g: &Graph) -> Outcome {
    let p = theta_partition(g)?;
    let classes: Vec<Vec<[&str; 2]>> = p
        .classes
        .iter()
        .map(|class| {
            class
                .iter()
                .map(|&e| {
                    let (u, v) = g.edges()[e];
                    [g.label(u), g.label(v)]
                })
                .collect()
        })
        .collect();
    Ok(Success::json(
        json!({ "is_equivalence": p.is_equivalence, "classes": classes }),
    ))
}

pub fn family_check(f: &SetFamily) -> Outcome {
    let violation = family::well_graded_violation(f);
    let mut out = json!({ "well_graded": violation.is_none() });
    if let Some((p, q)) = violation {
        out["witness"] = json!([f.member_labels(p), f.member_labels(q)]);
    }
    Ok(Success {
        output: Output::Json(out),
        negative: violation.is_some(),
    })
}

pub fn family_graph(f: &SetFamily) -> Outcome {
    Ok(Success::json(graph_json(&family::family_graph(f))))
}

pub fn family_retract(f: &SetFamily) -> Outcome {
    Ok(Success::json(family_json(&family::retraction(f)?)))
}

pub fn product(g1: &Graph, g2: &Graph) -> Outcome {
    Ok(Success::json(graph_json(
        &constructions::cartesian_product(g1, g2),
    )))
}

pub fn paste_vertex(g1: &Graph, a1: &str, g2: &Graph, a2: &str) -> Outcome {
    let g = constructions::vertex_paste(g1, vertex(g1, a1)?, g2, vertex(g2, a2)?)?;
    Ok(Success::json(graph_json(&g)))
}

pub fn paste_edge(
    g1: &Graph,
    (a1, b1): (&str, &str),
    g2: &Graph,
    (a2, b2): (&str, &str),
) -> Outcome {
    let g = constructions::edge_paste(
        g1,
        vertex(g1, a1)?,
        vertex(g1, b1)?,
        g2,
        vertex(g2, a2)?,
        vertex(g2, b2)?,
    )?;
    Ok(Success::json(graph_json(&g)))
}

pub fn expand<S: AsRef<str>>(g: &Graph, v1: &[S], v2: &[S]) -> Outcome {
    let spec = ExpansionSpec::from_labels(g, v1, v2)?;
    Ok(Success::json(graph_json(&constructions::expand(g, &spec)?)))
}

pub fn contract(g: &Graph, a: &str, b: &str) -> Outcome {
    let c = constructions::contract(g, vertex(g, a)?, vertex(g, b)?)?;
    Ok(Success::json(graph_json(&c)))
}

/// Steps name vertices of the graph they apply to, so each one can be fed
/// to `expand` starting from the single-vertex graph on `base`.
pub fn sequence(g: &Graph) -> Outcome {
    let seq = constructions::expansion_sequence(g)?;
    let graphs = seq.replay()?;
    let steps: Vec<Value> = seq
        .steps
        .iter()
        .zip(&graphs)
        .map(|(step, before)| {
            json!({
                "v1": labels(before, &step.spec.v1),
                "v2": labels(before, &step.spec.v2),
                "result_size": step.result_size,
            })
        })
        .collect();
    Ok(Success::json(json!({ "base": seq.base, "steps": steps })))
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// DOT text. With `theta_colors`, edges of one θ-class share a color; the
/// coloring is skipped for graphs where θ-classes are undefined.
pub fn dot(g: &Graph, theta_colors: bool) -> Outcome {
    let classes = if theta_colors {
        theta_partition(g).ok()
    } else {
        None
    };
    let mut out = String::from("graph G {\n");
    for v in g.vertices() {
        let _ = writeln!(out, "  {};", quote(g.label(v)));
    }
    for (i, &(u, v)) in g.edges().iter().enumerate() {
        let _ = write!(out, "  {} -- {}", quote(g.label(u)), quote(g.label(v)));
        if let Some(p) = &classes {
            let hue = p.class_of(i) as f64 / p.len() as f64;
            let _ = write!(
                out,
                " [color=\"{hue:.3} 0.850 0.800\", class={}]",
                p.class_of(i)
            );
        }
        out.push_str(";\n");
    }
    out.push_str("}\n");
    Ok(Success {
        output: Output::Text(out),
        negative: false,
    })
}
