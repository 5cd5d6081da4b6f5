//! Orbits of a graph under elementary pivots and elementary dual pivots, and
//! the DAG of elementary contractions.

use std::collections::{HashMap, VecDeque};

use crate::error::{Error, Result};
use crate::f2linalg::{add_identity, nullity};
use crate::graph::{Graph, VertexSet};
use crate::pivot::{apply_elementary, contraction, dual_pivot, elementary_pivots};
use crate::setsystem::maximal_family;

/// Largest graph whose orbit will be explored.
pub const ORBIT_CAP: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MoveKind {
    Pivot,
    Dual,
    Contraction,
}

impl MoveKind {
    pub fn symbol(self) -> &'static str {
        match self {
            MoveKind::Pivot => "*",
            MoveKind::Dual => "~*",
            MoveKind::Contraction => "*\\",
        }
    }
}

/// One recorded move. `set` is aligned to the label order of the source node.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OrbitEdge {
    pub from: usize,
    pub to: usize,
    pub set: VertexSet,
    pub kind: MoveKind,
}

/// Graphs reachable from a root, with the elementary moves between them.
///
/// Nodes are distinct as labeled graphs and listed in breadth-first
/// discovery order. Every node's moves are tried in the canonical order of
/// [`elementary_pivots`], so the whole structure is deterministic.
#[derive(Debug, Clone)]
pub struct OrbitGraph {
    nodes: Vec<Graph>,
    edges: Vec<OrbitEdge>,
    root: usize,
}

impl OrbitGraph {
    pub fn nodes(&self) -> &[Graph] {
        &self.nodes
    }

    pub fn edges(&self) -> &[OrbitEdge] {
        &self.edges
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn position(&self, g: &Graph) -> Option<usize> {
        self.nodes.iter().position(|n| n == g)
    }

    pub fn contains(&self, g: &Graph) -> bool {
        self.position(g).is_some()
    }

    /// Vertex names of the set recorded on `edge`.
    pub fn edge_names(&self, edge: &OrbitEdge) -> Vec<String> {
        self.nodes[edge.from].names_of(edge.set)
    }

    /// Nodes without outgoing edges.
    pub fn sinks(&self) -> Vec<usize> {
        let mut has_out = vec![false; self.nodes.len()];
        for e in &self.edges {
            has_out[e.from] = true;
        }
        (0..self.nodes.len()).filter(|&i| !has_out[i]).collect()
    }

    /// Re-applies every recorded move and checks it lands on its target.
    pub fn replay(&self) -> Result<bool> {
        for e in &self.edges {
            let src = &self.nodes[e.from];
            let got = match e.kind {
                MoveKind::Pivot => apply_elementary(src, e.set)?,
                MoveKind::Dual => dual_pivot(src, e.set)?,
                MoveKind::Contraction => contraction(src, e.set)?,
            };
            if got != self.nodes[e.to] {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

fn check_cap(g: &Graph) -> Result<()> {
    if g.n() > ORBIT_CAP {
        return Err(Error::OverCap {
            what: "orbit exploration",
            cap: ORBIT_CAP,
            n: g.n(),
        });
    }
    Ok(())
}

/// Breadth-first closure of `g` under `moves`/`apply`.
fn closure(
    g: &Graph,
    kind: MoveKind,
    moves: impl Fn(&Graph) -> Vec<VertexSet>,
    apply: impl Fn(&Graph, VertexSet) -> Result<Graph>,
) -> Result<OrbitGraph> {
    check_cap(g)?;
    let key = |h: &Graph| (h.labels().to_vec(), h.rows().to_vec());
    let mut index: HashMap<(Vec<String>, Vec<u64>), usize> = HashMap::new();
    let mut nodes = vec![g.clone()];
    let mut edges = Vec::new();
    index.insert(key(g), 0);
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        let current = nodes[i].clone();
        for set in moves(&current) {
            let next = apply(&current, set)?;
            let k = key(&next);
            let j = match index.get(&k) {
                Some(&j) => j,
                None => {
                    let j = nodes.len();
                    index.insert(k, j);
                    nodes.push(next);
                    queue.push_back(j);
                    j
                }
            };
            edges.push(OrbitEdge {
                from: i,
                to: j,
                set,
                kind,
            });
        }
    }
    Ok(OrbitGraph {
        nodes,
        edges,
        root: 0,
    })
}

/// The orbit of `g` under pivot, explored through elementary pivots.
pub fn pivot_orbit(g: &Graph) -> Result<OrbitGraph> {
    closure(g, MoveKind::Pivot, elementary_pivots, apply_elementary)
}

/// The orbit of `g` under dual pivot. Elementary dual pivots of a graph are
/// the elementary pivots of `G + I`.
pub fn dual_orbit(g: &Graph) -> Result<OrbitGraph> {
    closure(
        g,
        MoveKind::Dual,
        |h| elementary_pivots(&add_identity(h)),
        dual_pivot,
    )
}

/// Graphs reachable by repeated elementary contractions.
pub fn contraction_dag(g: &Graph) -> Result<OrbitGraph> {
    closure(g, MoveKind::Contraction, elementary_pivots, contraction)
}

/// Checks that every graph in the dual orbit of `g` has the same family of
/// maximal pivot sets.
pub fn verify_theorem_dual(g: &Graph) -> Result<bool> {
    let orbit = dual_orbit(g)?;
    let reference = maximal_family(g)?;
    for node in orbit.nodes() {
        if maximal_family(node)? != reference {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `{ G *\ X : X ∈ F_G }`, ordered by the bit pattern of the surviving
/// vertices. Every result is discrete with `nullity(g)` vertices.
pub fn maximal_contraction_results(g: &Graph) -> Result<Vec<Graph>> {
    check_cap(g)?;
    let family = maximal_family(g)?;
    let mut results: Vec<(VertexSet, Graph)> = Vec::new();
    for &x in family.family() {
        let rest = g.full_set().difference(x);
        let c = contraction(g, x)?;
        if !c.is_discrete() || c.n() != nullity(g) {
            return Err(Error::Invariant(format!(
                "maximal contraction on {{{}}} is not discrete of size nullity",
                g.names_of(x).join(",")
            )));
        }
        results.push((rest, c));
    }
    results.sort_by_key(|(rest, _)| *rest);
    results.dedup_by(|a, b| a.1 == b.1);
    Ok(results.into_iter().map(|(_, c)| c).collect())
}

/// Sorted label sets of a list of graphs.
pub(crate) fn vertex_name_sets(graphs: &[Graph]) -> Vec<Vec<String>> {
    let mut out: Vec<Vec<String>> = graphs
        .iter()
        .map(|h| {
            let mut l = h.labels().to_vec();
            l.sort();
            l
        })
        .collect();
    out.sort();
    out
}

/// Checks that all graphs in the dual orbit of `g` reach the same discrete
/// graphs by maximal contraction.
pub fn verify_contraction_invariance(g: &Graph) -> Result<bool> {
    let orbit = dual_orbit(g)?;
    let reference = vertex_name_sets(&maximal_contraction_results(g)?);
    for node in orbit.nodes() {
        if vertex_name_sets(&maximal_contraction_results(node)?) != reference {
            return Ok(false);
        }
    }
    Ok(true)
}
