//! Labeled graphs with loops, stored as symmetric bit matrices over F2.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};

/// Largest supported vertex count; one adjacency row fits in a `u64`.
pub const MAX_VERTICES: usize = 64;

/// A subset of vertices, as a bit vector aligned to a graph's label order.
///
/// Bit `i` stands for the vertex at index `i`. A `VertexSet` carries no
/// labels itself, so it is only meaningful next to the graph (or set system)
/// it was built from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn singleton(i: usize) -> Self {
        VertexSet(1 << i)
    }

    pub fn pair(i: usize, j: usize) -> Self {
        VertexSet((1 << i) | (1 << j))
    }

    /// The set `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Self {
        VertexSet(indices.into_iter().fold(0, |acc, i| acc | (1 << i)))
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn contains(self, i: usize) -> bool {
        i < 64 && self.0 >> i & 1 == 1
    }

    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_proper_subset(self, other: VertexSet) -> bool {
        self.is_subset(other) && self != other
    }

    /// Symmetric difference.
    pub fn xor(self, other: VertexSet) -> Self {
        VertexSet(self.0 ^ other.0)
    }

    pub fn union(self, other: VertexSet) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VertexSet) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: VertexSet) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn with(self, i: usize) -> Self {
        VertexSet(self.0 | (1 << i))
    }

    pub fn without(self, i: usize) -> Self {
        VertexSet(self.0 & !(1 << i))
    }

    /// Member indices in increasing order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let i = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(i)
            }
        })
    }

    /// Smallest member, if any.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Every subset of `self`, in increasing bit-pattern order.
    pub fn subsets(self) -> impl Iterator<Item = VertexSet> {
        let mask = self.0;
        let mut next = Some(0u64);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == mask {
                None
            } else {
                Some((cur.wrapping_sub(mask)) & mask)
            };
            Some(VertexSet(cur))
        })
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.iter().map(|i| i.to_string()).collect();
        write!(f, "{{{}}}", items.join(","))
    }
}

/// Parity of the population count, i.e. the F2 sum of the bits.
#[inline]
pub(crate) fn parity(x: u64) -> bool {
    x.count_ones() & 1 == 1
}

/// A graph on labeled vertices, possibly with loops.
///
/// The adjacency matrix is stored row-wise; bit `v` of `rows[u]` is the
/// entry `(u, v)`. Loops sit on the diagonal. Two graphs compare equal when
/// they have the same label set and the same adjacency once rows and
/// columns are aligned by label, so the declared order does not matter.
#[derive(Debug, Clone)]
pub struct Graph {
    labels: Vec<String>,
    rows: Vec<u64>,
}

impl Graph {
    /// The edgeless, loopless graph on `labels`.
    pub fn new<S: Into<String>, I: IntoIterator<Item = S>>(labels: I) -> Result<Self> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.len() > MAX_VERTICES {
            return Err(Error::TooManyVertices(labels.len()));
        }
        let mut seen = HashMap::with_capacity(labels.len());
        for (i, l) in labels.iter().enumerate() {
            if seen.insert(l.as_str(), i).is_some() {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        let rows = vec![0; labels.len()];
        Ok(Graph { labels, rows })
    }

    /// The empty graph (no vertices).
    pub fn empty() -> Self {
        Graph {
            labels: Vec::new(),
            rows: Vec::new(),
        }
    }

    /// Builds a graph from labels, edges and loops given by name.
    pub fn from_edges<S: AsRef<str>>(labels: &[S], edges: &[(S, S)], loops: &[S]) -> Result<Self> {
        let mut g = Graph::new(labels.iter().map(|s| s.as_ref().to_string()))?;
        for (a, b) in edges {
            let (i, j) = (g.index_of(a.as_ref())?, g.index_of(b.as_ref())?);
            g.set_entry(i, j, true);
        }
        for a in loops {
            let i = g.index_of(a.as_ref())?;
            g.set_entry(i, i, true);
        }
        Ok(g)
    }

    /// Builds a graph from explicit adjacency rows, rejecting asymmetric input.
    pub fn from_rows(labels: Vec<String>, rows: Vec<u64>) -> Result<Self> {
        let mut g = Graph::new(labels)?;
        let n = g.n();
        if rows.len() != n {
            return Err(Error::Invariant(format!(
                "{} rows given for {} vertices",
                rows.len(),
                n
            )));
        }
        let full = VertexSet::full(n).0;
        for (u, &row) in rows.iter().enumerate() {
            if row & !full != 0 {
                return Err(Error::Invariant(format!(
                    "row {u} has bits past column {n}"
                )));
            }
        }
        for u in 0..n {
            for v in u + 1..n {
                if (rows[u] >> v & 1) != (rows[v] >> u & 1) {
                    return Err(Error::NotSymmetric(
                        g.labels[u].clone(),
                        g.labels[v].clone(),
                    ));
                }
            }
        }
        g.rows = rows;
        Ok(g)
    }

    /// Internal constructor for rows already known to be symmetric.
    pub(crate) fn from_parts(labels: Vec<String>, rows: Vec<u64>) -> Self {
        debug_assert_eq!(labels.len(), rows.len());
        let g = Graph { labels, rows };
        debug_assert!(g.is_symmetric());
        g
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    /// Row `u` of the adjacency matrix; this is also the closed-or-open
    /// neighbourhood of `u` depending on whether `u` has a loop.
    pub fn row(&self, u: usize) -> u64 {
        self.rows[u]
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.labels
            .iter()
            .position(|l| l == name)
            .ok_or_else(|| Error::InvalidVertex(name.to_string()))
    }

    pub fn full_set(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    /// Converts vertex names into a set aligned to this graph.
    pub fn set_of<S: AsRef<str>>(&self, names: &[S]) -> Result<VertexSet> {
        names.iter().try_fold(VertexSet::EMPTY, |acc, s| {
            Ok(acc.with(self.index_of(s.as_ref())?))
        })
    }

    /// Names of the members of `x`, in label order.
    pub fn names_of(&self, x: VertexSet) -> Vec<String> {
        x.iter()
            .filter(|&i| i < self.n())
            .map(|i| self.labels[i].clone())
            .collect()
    }

    /// Checks that `x` only refers to vertices of this graph.
    pub fn check_set(&self, x: VertexSet) -> Result<()> {
        match x.difference(self.full_set()).first() {
            None => Ok(()),
            Some(i) => Err(Error::InvalidVertex(format!("#{i}"))),
        }
    }

    pub fn entry(&self, u: usize, v: usize) -> bool {
        self.rows[u] >> v & 1 == 1
    }

    pub fn has_loop(&self, u: usize) -> bool {
        self.entry(u, u)
    }

    /// Sets both `(u, v)` and `(v, u)`.
    pub fn set_entry(&mut self, u: usize, v: usize, value: bool) {
        if value {
            self.rows[u] |= 1 << v;
            self.rows[v] |= 1 << u;
        } else {
            self.rows[u] &= !(1 << v);
            self.rows[v] &= !(1 << u);
        }
    }

    /// Open neighbourhood of `u`: adjacent vertices other than `u` itself.
    pub fn neighbourhood(&self, u: usize) -> VertexSet {
        VertexSet(self.rows[u] & !(1 << u))
    }

    /// Vertices carrying a loop.
    pub fn loops(&self) -> VertexSet {
        VertexSet::from_indices((0..self.n()).filter(|&u| self.has_loop(u)))
    }

    /// Non-loop edges `(u, v)` with `u < v` in index order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n() {
            for v in VertexSet(self.rows[u] >> (u + 1) << (u + 1)).iter() {
                out.push((u, v));
            }
        }
        out
    }

    /// True when there are neither edges nor loops.
    pub fn is_discrete(&self) -> bool {
        self.rows.iter().all(|&r| r == 0)
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n()).all(|u| {
            VertexSet(self.rows[u])
                .iter()
                .all(|v| v < self.n() && self.rows[v] >> u & 1 == 1)
        })
    }

    /// Matrix-vector product over F2, with vectors as vertex sets.
    pub fn apply(&self, x: VertexSet) -> VertexSet {
        VertexSet::from_indices((0..self.n()).filter(|&u| parity(self.rows[u] & x.0)))
    }

    /// The same graph with rows and columns permuted into `order`.
    pub fn reordered<S: AsRef<str>>(&self, order: &[S]) -> Result<Graph> {
        if order.len() != self.n() {
            return Err(Error::GroundMismatch);
        }
        let perm: Vec<usize> = order
            .iter()
            .map(|s| self.index_of(s.as_ref()))
            .collect::<Result<_>>()?;
        let labels: Vec<String> = order.iter().map(|s| s.as_ref().to_string()).collect();
        let mut out = Graph::new(labels)?;
        for (new_u, &old_u) in perm.iter().enumerate() {
            let mut row = 0u64;
            for (new_v, &old_v) in perm.iter().enumerate() {
                if self.entry(old_u, old_v) {
                    row |= 1 << new_v;
                }
            }
            out.rows[new_u] = row;
        }
        Ok(out)
    }

    /// Same label set, regardless of order.
    pub fn same_vertices(&self, other: &Graph) -> bool {
        self.n() == other.n() && self.labels.iter().all(|l| other.index_of(l).is_ok())
    }
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        if self.labels == other.labels {
            return self.rows == other.rows;
        }
        if !self.same_vertices(other) {
            return false;
        }
        match other.reordered(&self.labels) {
            Ok(aligned) => aligned.rows == self.rows,
            Err(_) => false,
        }
    }
}

impl Eq for Graph {}

impl fmt::Display for Graph {
    /// One-line summary, e.g. `[p q] p-q @q`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.labels.join(" "))?;
        for (u, v) in self.edges() {
            write!(f, " {}-{}", self.labels[u], self.labels[v])?;
        }
        for u in self.loops().iter() {
            write!(f, " @{}", self.labels[u])?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn example_g() -> Graph {
        Graph::from_edges(
            &["p", "q", "r", "s"],
            &[("p", "q"), ("p", "r"), ("p", "s"), ("q", "s"), ("r", "s")],
            &["q"],
        )
        .unwrap()
    }

    #[test]
    fn subsets_enumerates_all() {
        let s = VertexSet(0b1011);
        let subs: Vec<u64> = s.subsets().map(|x| x.0).collect();
        assert_eq!(subs, vec![0, 1, 2, 3, 8, 9, 10, 11]);
        assert_eq!(VertexSet::EMPTY.subsets().count(), 1);
    }

    #[test]
    fn equality_ignores_label_order() {
        // The two 2x2 matrices over {p,q} written in different orders.
        let a = Graph::from_edges(&["p", "q"], &[("p", "q")], &["q"]).unwrap();
        let b = Graph::from_edges(&["q", "p"], &[("q", "p")], &["q"]).unwrap();
        assert_eq!(a, b);
        let c = Graph::from_edges(&["q", "p"], &[("q", "p")], &["p"]).unwrap();
        assert_ne!(a, c);
        let d = Graph::from_edges(&["p", "x"], &[("p", "x")], &["x"]).unwrap();
        assert_ne!(a, d);
    }

    #[test]
    fn from_rows_rejects_asymmetric() {
        let err = Graph::from_rows(vec!["a".into(), "b".into()], vec![0b10, 0b00]).unwrap_err();
        assert_eq!(err, Error::NotSymmetric("a".into(), "b".into()));
    }

    #[test]
    fn duplicate_and_unknown_labels() {
        assert_eq!(
            Graph::new(["a", "a"]).unwrap_err(),
            Error::DuplicateLabel("a".into())
        );
        let g = example_g();
        assert_eq!(
            g.set_of(&["z"]).unwrap_err(),
            Error::InvalidVertex("z".into())
        );
        assert!(g.check_set(VertexSet(1 << 4)).is_err());
    }

    #[test]
    fn neighbourhoods_and_edges() {
        let g = example_g();
        let q = g.index_of("q").unwrap();
        assert_eq!(g.names_of(g.neighbourhood(q)), vec!["p", "s"]);
        assert_eq!(g.edges().len(), 5);
        assert_eq!(g.names_of(g.loops()), vec!["q"]);
        assert!(g.is_symmetric());
    }

    #[test]
    fn too_many_vertices() {
        let labels: Vec<String> = (0..65).map(|i| format!("v{i}")).collect();
        assert_eq!(Graph::new(labels).unwrap_err(), Error::TooManyVertices(65));
    }
}
