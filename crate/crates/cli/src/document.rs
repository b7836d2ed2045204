//! JSON documents for graphs and set families.
//!
//! Parsing is strict: unknown fields, wrong shapes and graph or family
//! invariant violations are all rejected, and every message names either the
//! line and column or the offending field (`edges[3][1]`).

use std::collections::{BTreeSet, HashMap};

use pcube::family::SetFamily;
use pcube::Graph;
use serde::{Deserialize, Serialize};

use crate::InputError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphDocument {
    pub vertices: Vec<String>,
    #[serde(default)]
    pub edges: Vec<[String; 2]>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FamilyDocument {
    pub ground: Vec<String>,
    pub sets: Vec<Vec<String>>,
}

fn syntax(source: &str, err: serde_json::Error) -> InputError {
    InputError::new(format!("{source}: {err}"))
}

fn field(source: &str, path: String, msg: impl std::fmt::Display) -> InputError {
    InputError::new(format!("{source}: {path}: {msg}"))
}

impl GraphDocument {
    pub fn parse(text: &str, source: &str) -> Result<Self, InputError> {
        serde_json::from_str(text).map_err(|e| syntax(source, e))
    }

    pub fn to_graph(&self, source: &str) -> Result<Graph, InputError> {
        let mut index = HashMap::with_capacity(self.vertices.len());
        for (i, v) in self.vertices.iter().enumerate() {
            if let Some(first) = index.insert(v.as_str(), i) {
                return Err(field(
                    source,
                    format!("vertices[{i}]"),
                    format_args!("duplicate vertex {v:?} (first at vertices[{first}])"),
                ));
            }
        }
        let mut seen: HashMap<(usize, usize), usize> = HashMap::new();
        let mut edges = Vec::with_capacity(self.edges.len());
        for (i, [u, v]) in self.edges.iter().enumerate() {
            let mut ends = [0; 2];
            for (j, label) in [u, v].into_iter().enumerate() {
                ends[j] = *index.get(label.as_str()).ok_or_else(|| {
                    field(
                        source,
                        format!("edges[{i}][{j}]"),
                        format_args!("unknown vertex {label:?}"),
                    )
                })?;
            }
            if ends[0] == ends[1] {
                return Err(field(
                    source,
                    format!("edges[{i}]"),
                    format_args!("self-loop at {u:?}"),
                ));
            }
            let key = (ends[0].min(ends[1]), ends[0].max(ends[1]));
            if let Some(first) = seen.insert(key, i) {
                return Err(field(
                    source,
                    format!("edges[{i}]"),
                    format_args!("duplicate edge {u:?}-{v:?} (first at edges[{first}])"),
                ));
            }
            edges.push((ends[0], ends[1]));
        }
        Graph::from_indexed(self.vertices.clone(), edges)
            .map_err(|e| InputError::new(format!("{source}: {e}")))
    }

    pub fn from_graph(g: &Graph) -> Self {
        GraphDocument {
            vertices: g.labels().to_vec(),
            edges: g
                .edges()
                .iter()
                .map(|&(u, v)| [g.label(u).to_string(), g.label(v).to_string()])
                .collect(),
        }
    }
}

impl FamilyDocument {
    pub fn parse(text: &str, source: &str) -> Result<Self, InputError> {
        serde_json::from_str(text).map_err(|e| syntax(source, e))
    }

    pub fn to_family(&self, source: &str) -> Result<SetFamily, InputError> {
        let mut index = HashMap::with_capacity(self.ground.len());
        for (i, x) in self.ground.iter().enumerate() {
            if index.insert(x.as_str(), i).is_some() {
                return Err(field(
                    source,
                    format!("ground[{i}]"),
                    format_args!("duplicate element {x:?}"),
                ));
            }
        }
        let mut members: Vec<BTreeSet<usize>> = Vec::with_capacity(self.sets.len());
        for (i, set) in self.sets.iter().enumerate() {
            let mut member = BTreeSet::new();
            for (j, x) in set.iter().enumerate() {
                let e = *index.get(x.as_str()).ok_or_else(|| {
                    field(
                        source,
                        format!("sets[{i}][{j}]"),
                        format_args!("element {x:?} not in ground"),
                    )
                })?;
                if !member.insert(e) {
                    return Err(field(
                        source,
                        format!("sets[{i}][{j}]"),
                        format_args!("repeated element {x:?}"),
                    ));
                }
            }
            if let Some(first) = members.iter().position(|m| *m == member) {
                return Err(field(
                    source,
                    format!("sets[{i}]"),
                    format_args!("duplicate member (same as sets[{first}])"),
                ));
            }
            members.push(member);
        }
        SetFamily::from_indexed(self.ground.clone(), members)
            .map_err(|e| InputError::new(format!("{source}: {e}")))
    }

    pub fn from_family(fam: &SetFamily) -> Self {
        FamilyDocument {
            ground: fam.ground().to_vec(),
            sets: (0..fam.len())
                .map(|i| fam.member_labels(i).into_iter().map(String::from).collect())
                .collect(),
        }
    }
}
