//! Partial-cube recognition and explicit hypercube embeddings.
//!
//! A connected graph is a partial cube iff it is bipartite and every
//! semicube is convex. Recognition checks exactly that, and on success the
//! embedding assigns each vertex the set of θ-classes whose positive
//! semicube contains it.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, Vertex};
use crate::metric::{theta_partition_with, SemicubeTable, Side, ThetaPartition};

/// Why a graph failed recognition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FailureWitness {
    /// An odd closed walk; consecutive vertices (cyclically) are adjacent.
    NotBipartite { odd_walk: Vec<Vertex> },
    /// `W_ab` is not convex: `x, y` are in it, `z` is not, and `z` lies on a
    /// shortest `x`-`y` path.
    NonConvexSemicube {
        edge: Edge,
        x: Vertex,
        y: Vertex,
        z: Vertex,
    },
}

/// A vertex-to-set map into the hypercube over `labels`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HypercubeEmbedding {
    /// One identifier per coordinate; `c0, c1, ...` for embeddings built here.
    pub labels: Vec<String>,
    /// For each vertex, the indices into `labels` of its set.
    pub assignment: Vec<BTreeSet<usize>>,
}

impl HypercubeEmbedding {
    pub fn hamming(&self, u: Vertex, v: Vertex) -> usize {
        self.assignment[u]
            .symmetric_difference(&self.assignment[v])
            .count()
    }

    /// Whether the family is retracted: nothing common to all sets and
    /// every label used.
    pub fn is_retracted(&self) -> bool {
        let mut union = BTreeSet::new();
        let mut inter: Option<BTreeSet<usize>> = None;
        for s in &self.assignment {
            union.extend(s.iter().copied());
            inter = Some(match inter {
                None => s.clone(),
                Some(i) => i.intersection(s).copied().collect(),
            });
        }
        inter.unwrap_or_default().is_empty() && union.len() == self.labels.len()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecognitionReport {
    pub is_partial_cube: bool,
    pub failure_witness: Option<FailureWitness>,
    pub embedding: Option<HypercubeEmbedding>,
}

/// Decides whether `g` is a partial cube.
///
/// The first failure in canonical edge order is reported, checking `W_ab`
/// before `W_ba` for each stored edge `ab`.
pub fn recognize(g: &Graph) -> Result<RecognitionReport> {
    if g.vertex_count() == 0 {
        return Err(Error::EmptyGraph);
    }
    g.require_connected()?;
    if let Err(odd_walk) = g.bipartition() {
        return Ok(RecognitionReport {
            is_partial_cube: false,
            failure_witness: Some(FailureWitness::NotBipartite { odd_walk }),
            embedding: None,
        });
    }
    let table = SemicubeTable::new(g)?;
    if let Some(witness) = first_nonconvex_semicube(g, &table) {
        return Ok(RecognitionReport {
            is_partial_cube: false,
            failure_witness: Some(witness),
            embedding: None,
        });
    }
    let theta = theta_partition_with(g, &table);
    let embedding = embed_with(g, &table, &theta)?;
    assert_eq!(embedding.labels.len(), theta.len());
    Ok(RecognitionReport {
        is_partial_cube: true,
        failure_witness: None,
        embedding: Some(embedding),
    })
}

fn first_nonconvex_semicube(g: &Graph, table: &SemicubeTable) -> Option<FailureWitness> {
    for (i, &(a, b)) in g.edges().iter().enumerate() {
        for (side, edge) in [(Side::Near, (a, b)), (Side::Far, (b, a))] {
            let mask: Vec<bool> = table.sides(i).iter().map(|&s| s == side).collect();
            if let Some((x, y, z)) = g.convexity_violation(&mask) {
                return Some(FailureWitness::NonConvexSemicube { edge, x, y, z });
            }
        }
    }
    None
}

/// Whether `g` is a partial cube, failing on empty or disconnected input.
pub fn is_partial_cube(g: &Graph) -> Result<bool> {
    Ok(recognize(g)?.is_partial_cube)
}

pub(crate) fn require_partial_cube(g: &Graph) -> Result<()> {
    match recognize(g) {
        Ok(r) if r.is_partial_cube => Ok(()),
        Ok(_) | Err(Error::Disconnected) => Err(Error::NotPartialCube),
        Err(e) => Err(e),
    }
}

/// Hypercube embedding of a partial cube.
///
/// The first vertex maps to the empty set. Label `c<k>` is the k-th θ-class
/// in canonical order, and a vertex carries it when it lies in the semicube
/// of that class away from the first vertex. The result is verified before
/// it is returned, so any non-partial-cube input yields `NotPartialCube`.
pub fn embed_hypercube(g: &Graph) -> Result<HypercubeEmbedding> {
    if g.vertex_count() == 0 || !g.is_connected() || !g.is_bipartite() {
        return Err(Error::NotPartialCube);
    }
    let table = SemicubeTable::new(g)?;
    let theta = theta_partition_with(g, &table);
    embed_with(g, &table, &theta)
}

fn embed_with(
    g: &Graph,
    table: &SemicubeTable,
    theta: &ThetaPartition,
) -> Result<HypercubeEmbedding> {
    let base = 0;
    let mut assignment = vec![BTreeSet::new(); g.vertex_count()];
    for (k, class) in theta.classes.iter().enumerate() {
        let rep = class[0];
        let positive = match table.side(rep, base) {
            Side::Near => Side::Far,
            _ => Side::Near,
        };
        for v in g.vertices() {
            if table.side(rep, v) == positive {
                assignment[v].insert(k);
            }
        }
    }
    let emb = HypercubeEmbedding {
        labels: (0..theta.len()).map(|k| format!("c{k}")).collect(),
        assignment,
    };
    if theta.is_equivalence && verify_embedding(g, &emb)? && emb.is_retracted() {
        Ok(emb)
    } else {
        Err(Error::NotPartialCube)
    }
}

/// Whether Hamming distances between assigned sets equal graph distances.
pub fn verify_embedding(g: &Graph, emb: &HypercubeEmbedding) -> Result<bool> {
    if emb.assignment.len() != g.vertex_count()
        || emb
            .assignment
            .iter()
            .any(|s| s.iter().any(|&l| l >= emb.labels.len()))
    {
        return Err(Error::VertexMismatch);
    }
    for u in g.vertices() {
        for v in u + 1..g.vertex_count() {
            match g.dist(u, v) {
                Some(d) if d as usize == emb.hamming(u, v) => {}
                _ => return Ok(false),
            }
        }
    }
    Ok(true)
}

/// Edges `xy, uv` of one `F_ab` that break `d(x,u) = d(y,v)` or
/// `d(x,v) = d(y,u)`, with `x, u` on the `a` side.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RectangleViolation {
    pub edge: Edge,
    pub first: Edge,
    pub second: Edge,
}

/// Checks the rectangle condition on every `F_ab` of a connected bipartite
/// graph. Holds exactly for partial cubes.
pub fn rectangle_check(g: &Graph) -> Result<Option<RectangleViolation>> {
    g.require_connected()?;
    if !g.is_bipartite() {
        return Err(Error::NotBipartite);
    }
    let table = SemicubeTable::new(g)?;
    for (i, &(a, b)) in g.edges().iter().enumerate() {
        let f: Vec<Edge> = g
            .edges()
            .iter()
            .filter(|&&e| table.related(i, e))
            .map(|&(u, v)| {
                if table.side(i, u) == Side::Near {
                    (u, v)
                } else {
                    (v, u)
                }
            })
            .collect();
        for (j, &(x, y)) in f.iter().enumerate() {
            for &(u, v) in &f[j + 1..] {
                if g.d(x, u) != g.d(y, v) || g.d(x, v) != g.d(y, u) {
                    return Ok(Some(RectangleViolation {
                        edge: (a, b),
                        first: (x, y),
                        second: (u, v),
                    }));
                }
            }
        }
    }
    Ok(None)
}
