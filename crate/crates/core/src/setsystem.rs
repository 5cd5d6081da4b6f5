//! Set systems over a labeled ground set, and the delta matroid `D_G` of a
//! graph together with its maximal (`F_G`) and minimal members.
//!
//! The independence partition `(I, D)` of a matrix is not given its own
//! type; it is available through [`f2linalg::is_independent`] and
//! [`f2linalg::bases`].

use std::fmt;

use crate::error::{Error, Result};
use crate::f2linalg::{self, determinant, ENUMERATION_CAP};
use crate::graph::{Graph, VertexSet};

/// A finite ground set with a family of subsets.
///
/// The family is deduplicated and sorted by bit pattern, so two systems over
/// the same label order are equal exactly when their family lists are.
#[derive(Debug, Clone)]
pub struct SetSystem {
    ground: Vec<String>,
    family: Vec<VertexSet>,
}

impl SetSystem {
    pub fn new<I: IntoIterator<Item = VertexSet>>(ground: Vec<String>, family: I) -> Result<Self> {
        let full = VertexSet::full(ground.len());
        let mut family: Vec<VertexSet> = family.into_iter().collect();
        if let Some(bad) = family.iter().find(|x| !x.is_subset(full)) {
            return Err(Error::InvalidVertex(format!(
                "#{}",
                bad.difference(full).first().unwrap_or(0)
            )));
        }
        family.sort();
        family.dedup();
        Ok(SetSystem { ground, family })
    }

    /// Builds a system from sets given by name.
    pub fn from_names<S: AsRef<str>>(ground: &[S], sets: &[Vec<S>]) -> Result<Self> {
        let ground: Vec<String> = ground.iter().map(|s| s.as_ref().to_string()).collect();
        let index = |name: &str| {
            ground
                .iter()
                .position(|g| g == name)
                .ok_or_else(|| Error::InvalidVertex(name.to_string()))
        };
        let mut family = Vec::with_capacity(sets.len());
        for set in sets {
            let mut x = VertexSet::EMPTY;
            for name in set {
                x = x.with(index(name.as_ref())?);
            }
            family.push(x);
        }
        SetSystem::new(ground, family)
    }

    pub fn ground(&self) -> &[String] {
        &self.ground
    }

    pub fn family(&self) -> &[VertexSet] {
        &self.family
    }

    pub fn len(&self) -> usize {
        self.family.len()
    }

    pub fn is_empty(&self) -> bool {
        self.family.is_empty()
    }

    pub fn contains(&self, x: VertexSet) -> bool {
        self.family.binary_search(&x).is_ok()
    }

    pub fn names_of(&self, x: VertexSet) -> Vec<String> {
        x.iter().map(|i| self.ground[i].clone()).collect()
    }

    /// The family as lists of names, in family order.
    pub fn named_sets(&self) -> Vec<Vec<String>> {
        self.family.iter().map(|&x| self.names_of(x)).collect()
    }

    /// Inclusion-maximal members.
    pub fn maximal(&self) -> SetSystem {
        self.extremal(|a, b| a.is_proper_subset(b))
    }

    /// Inclusion-minimal members, the empty set excluded.
    pub fn minimal_nonempty(&self) -> SetSystem {
        let nonempty = SetSystem {
            ground: self.ground.clone(),
            family: self
                .family
                .iter()
                .copied()
                .filter(|x| !x.is_empty())
                .collect(),
        };
        nonempty.extremal(|a, b| b.is_proper_subset(a))
    }

    /// Keeps `x` unless some `y` in the family has `dominated(x, y)`.
    /// Sets are bucketed by size; only buckets that can dominate are scanned.
    fn extremal(&self, dominated: impl Fn(VertexSet, VertexSet) -> bool) -> SetSystem {
        let n = self.ground.len();
        let mut buckets: Vec<Vec<VertexSet>> = vec![Vec::new(); n + 1];
        for &x in &self.family {
            buckets[x.len()].push(x);
        }
        let family = self
            .family
            .iter()
            .copied()
            .filter(|&x| {
                !buckets
                    .iter()
                    .enumerate()
                    .filter(|(size, _)| *size != x.len())
                    .flat_map(|(_, b)| b.iter())
                    .any(|&y| dominated(x, y))
            })
            .collect();
        SetSystem {
            ground: self.ground.clone(),
            family,
        }
    }

    /// Same system with coordinates permuted into `order`.
    pub fn realigned<S: AsRef<str>>(&self, order: &[S]) -> Result<SetSystem> {
        if order.len() != self.ground.len() {
            return Err(Error::GroundMismatch);
        }
        let target: Vec<String> = order.iter().map(|s| s.as_ref().to_string()).collect();
        let mut map = Vec::with_capacity(target.len());
        for l in &self.ground {
            map.push(
                target
                    .iter()
                    .position(|t| t == l)
                    .ok_or(Error::GroundMismatch)?,
            );
        }
        SetSystem::new(
            target,
            self.family
                .iter()
                .map(|x| VertexSet::from_indices(x.iter().map(|i| map[i]))),
        )
    }
}

impl PartialEq for SetSystem {
    fn eq(&self, other: &Self) -> bool {
        if self.ground == other.ground {
            return self.family == other.family;
        }
        match other.realigned(&self.ground) {
            Ok(o) => o.family == self.family,
            Err(_) => false,
        }
    }
}

impl Eq for SetSystem {}

impl fmt::Display for SetSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sets: Vec<String> = self
            .family
            .iter()
            .map(|&x| format!("{{{}}}", self.names_of(x).join(",")))
            .collect();
        write!(f, "{}", sets.join(" "))
    }
}

/// `M * X`: every member is replaced by its symmetric difference with `x`.
pub fn twist(m: &SetSystem, x: VertexSet) -> Result<SetSystem> {
    if !x.is_subset(VertexSet::full(m.ground.len())) {
        return Err(Error::InvalidVertex(format!(
            "#{}",
            x.difference(VertexSet::full(m.ground.len()))
                .first()
                .unwrap_or(0)
        )));
    }
    SetSystem::new(m.ground.clone(), m.family.iter().map(|y| y.xor(x)))
}

fn check_cap(g: &Graph) -> Result<()> {
    if g.n() > ENUMERATION_CAP {
        return Err(Error::OverCap {
            what: "set-system enumeration",
            cap: ENUMERATION_CAP,
            n: g.n(),
        });
    }
    Ok(())
}

/// `D_G = { X : det G[X] = 1 }`, by enumerating all `2^n` subsets.
pub fn delta_matroid(g: &Graph) -> Result<SetSystem> {
    check_cap(g)?;
    let mut family = Vec::new();
    for x in g.full_set().subsets() {
        if determinant(g, x)? {
            family.push(x);
        }
    }
    SetSystem::new(g.labels().to_vec(), family)
}

/// `F_G`: the inclusion-maximal members of `D_G`.
pub fn maximal_family(g: &Graph) -> Result<SetSystem> {
    Ok(delta_matroid(g)?.maximal())
}

/// Inclusion-minimal nonempty members of `D_G`; these are the elementary
/// pivot sets.
pub fn minimal_family(g: &Graph) -> Result<SetSystem> {
    Ok(delta_matroid(g)?.minimal_nonempty())
}

/// Rebuilds the graph whose delta matroid is `m`: `{u}` is a loop iff
/// `{u} ∈ D`, and `{u,v}` is an edge iff `({u,v} ∈ D) xor ({u} ∈ D and {v} ∈ D)`.
pub fn reconstruct_graph(m: &SetSystem) -> Result<Graph> {
    if !m.contains(VertexSet::EMPTY) {
        return Err(Error::NotGraphic);
    }
    let n = m.ground.len();
    let mut g = Graph::new(m.ground.clone())?;
    for u in 0..n {
        let loop_u = m.contains(VertexSet::singleton(u));
        g.set_entry(u, u, loop_u);
        for v in u + 1..n {
            let loop_v = m.contains(VertexSet::singleton(v));
            let edge = m.contains(VertexSet::pair(u, v)) ^ (loop_u && loop_v);
            g.set_entry(u, v, edge);
        }
    }
    Ok(g)
}

/// Checks `ker(g1) = ker(g2) <=> bases(g1) = bases(g2)`, with bases taken as
/// `F_G`. Returns whether the two sides agree.
pub fn kernel_bases_equivalence(g1: &Graph, g2: &Graph) -> Result<bool> {
    if !g1.same_vertices(g2) {
        return Err(Error::GroundMismatch);
    }
    let kernels_equal = f2linalg::kernel(g1) == f2linalg::kernel(g2);
    let bases_equal = maximal_family(g1)? == maximal_family(g2)?;
    Ok(kernels_equal == bases_equal)
}
