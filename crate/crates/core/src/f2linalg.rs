//! Linear algebra over F2 on graph adjacency matrices.
//!
//! Matrices are square and indexed by a graph's vertices; vectors are vertex
//! sets. Everything is done by Gaussian elimination on `u64` rows.

use crate::error::{Error, Result};
use crate::graph::{parity, Graph, VertexSet};

/// Packs the bits of `word` selected by `mask` into the low bits, keeping
/// their relative order.
pub(crate) fn compress(word: u64, mask: VertexSet) -> u64 {
    mask.iter()
        .enumerate()
        .fold(0, |acc, (k, i)| acc | ((word >> i & 1) << k))
}

/// Inverse of [`compress`]: spreads the low bits of `packed` onto `mask`.
pub(crate) fn expand(packed: u64, mask: VertexSet) -> u64 {
    mask.iter()
        .enumerate()
        .fold(0, |acc, (k, i)| acc | ((packed >> k & 1) << i))
}

/// The rows of `g` indexed by `rows`, restricted to the columns `cols`,
/// packed so that column `k` is the `k`-th member of `cols`.
pub(crate) fn block(g: &Graph, rows: VertexSet, cols: VertexSet) -> Vec<u64> {
    rows.iter().map(|u| compress(g.row(u), cols)).collect()
}

/// Rank of a set of row vectors. The slice is consumed as scratch space.
pub(crate) fn rank_of_rows(rows: &mut [u64]) -> usize {
    let mut rank = 0;
    while let Some(p) = (rank..rows.len()).find(|&i| rows[i] != 0) {
        rows.swap(rank, p);
        let pivot = rows[rank];
        let bit = pivot & pivot.wrapping_neg();
        for r in rows[rank + 1..].iter_mut() {
            if *r & bit != 0 {
                *r ^= pivot;
            }
        }
        rank += 1;
    }
    rank
}

/// Reduced row echelon form with pivots on the lowest set bit of each row.
/// Returns the nonzero rows ordered by pivot column.
pub(crate) fn rref(mut rows: Vec<u64>) -> Vec<u64> {
    let mut out: Vec<u64> = Vec::with_capacity(rows.len());
    while let Some(pos) = rows
        .iter()
        .enumerate()
        .filter(|(_, &r)| r != 0)
        .min_by_key(|(_, &r)| r.trailing_zeros())
        .map(|(i, _)| i)
    {
        let pivot = rows.swap_remove(pos);
        let bit = pivot & pivot.wrapping_neg();
        for r in rows.iter_mut().chain(out.iter_mut()) {
            if *r & bit != 0 {
                *r ^= pivot;
            }
        }
        out.push(pivot);
    }
    out
}

/// Inverse of a `k x k` matrix given as packed rows, or `None` when singular.
pub(crate) fn invert(m: &[u64]) -> Option<Vec<u64>> {
    let k = m.len();
    let mut a = m.to_vec();
    let mut inv: Vec<u64> = (0..k).map(|i| 1u64 << i).collect();
    for col in 0..k {
        let p = (col..k).find(|&i| a[i] >> col & 1 == 1)?;
        a.swap(col, p);
        inv.swap(col, p);
        for i in 0..k {
            if i != col && a[i] >> col & 1 == 1 {
                a[i] ^= a[col];
                inv[i] ^= inv[col];
            }
        }
    }
    Some(inv)
}

/// Product of packed row matrices: `a` is `r x m`, `b` is `m x c`.
pub(crate) fn mul(a: &[u64], b: &[u64]) -> Vec<u64> {
    a.iter()
        .map(|&row| VertexSet(row).iter().fold(0u64, |acc, k| acc ^ b[k]))
        .collect()
}

#[cfg(test)]
/// Transpose of an `r x c` packed row matrix.
pub(crate) fn transpose(a: &[u64], cols: usize) -> Vec<u64> {
    (0..cols)
        .map(|j| {
            a.iter()
                .enumerate()
                .fold(0u64, |acc, (i, &row)| acc | ((row >> j & 1) << i))
        })
        .collect()
}

/// Determinant over F2 of the principal submatrix `g[x]`.
///
/// `det(g[∅]) = 1` by convention, which also covers the empty graph.
pub fn determinant(g: &Graph, x: VertexSet) -> Result<bool> {
    g.check_set(x)?;
    let mut rows = block(g, x, x);
    Ok(rank_of_rows(&mut rows) == x.len())
}

/// The subgraph induced by `x`, keeping the relative label order.
pub fn induced_subgraph(g: &Graph, x: VertexSet) -> Result<Graph> {
    g.check_set(x)?;
    let labels = g.names_of(x);
    Ok(Graph::from_parts(labels, block(g, x, x)))
}

/// `G + I`: toggles every loop.
pub fn add_identity(g: &Graph) -> Graph {
    let rows = g
        .rows()
        .iter()
        .enumerate()
        .map(|(u, &r)| r ^ (1 << u))
        .collect();
    Graph::from_parts(g.labels().to_vec(), rows)
}

/// Rank of the adjacency matrix.
pub fn rank(g: &Graph) -> usize {
    let mut rows = g.rows().to_vec();
    rank_of_rows(&mut rows)
}

/// Dimension of the kernel.
pub fn nullity(g: &Graph) -> usize {
    g.n() - rank(g)
}

/// Whether the columns of `A(g)` indexed by `x` are linearly independent.
/// The empty set is independent.
pub fn is_independent(g: &Graph, x: VertexSet) -> Result<bool> {
    g.check_set(x)?;
    // columns equal rows for a symmetric matrix
    let mut cols: Vec<u64> = x.iter().map(|u| g.row(u)).collect();
    Ok(rank_of_rows(&mut cols) == x.len())
}

/// Subsets at or below this size are enumerated exhaustively.
pub const ENUMERATION_CAP: usize = 20;

/// All bases (maximal independent column sets) of `A(g)`, sorted by bit
/// pattern. Every basis has exactly `rank(g)` elements.
pub fn bases(g: &Graph) -> Result<Vec<VertexSet>> {
    if g.n() > ENUMERATION_CAP {
        return Err(Error::OverCap {
            what: "basis enumeration",
            cap: ENUMERATION_CAP,
            n: g.n(),
        });
    }
    let r = rank(g);
    let mut out = Vec::new();
    for x in g.full_set().subsets() {
        if x.len() == r && is_independent(g, x)? {
            out.push(x);
        }
    }
    Ok(out)
}

/// An F2 subspace of the vertex-set space of a labeled ground set.
///
/// The basis is kept in reduced row echelon form, pivoting on the lowest
/// label index, so two equal subspaces over the same label order have
/// identical basis lists.
#[derive(Debug, Clone)]
pub struct Subspace {
    ground: Vec<String>,
    basis: Vec<VertexSet>,
}

impl Subspace {
    /// The span of `vectors`.
    pub fn span<I: IntoIterator<Item = VertexSet>>(ground: Vec<String>, vectors: I) -> Self {
        let rows = rref(vectors.into_iter().map(|v| v.0).collect());
        Subspace {
            ground,
            basis: rows.into_iter().map(VertexSet).collect(),
        }
    }

    pub fn ground(&self) -> &[String] {
        &self.ground
    }

    pub fn basis(&self) -> &[VertexSet] {
        &self.basis
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    /// `n - dimension`; for a kernel this is the rank of the matrix.
    pub fn complement_rank(&self) -> usize {
        self.ground.len() - self.dimension()
    }

    /// Same as [`dimension`](Self::dimension); named for kernels.
    pub fn nullity(&self) -> usize {
        self.dimension()
    }

    pub fn contains(&self, x: VertexSet) -> bool {
        let reduced = self.basis.iter().fold(x.0, |acc, b| {
            let bit = b.0 & b.0.wrapping_neg();
            if acc & bit != 0 {
                acc ^ b.0
            } else {
                acc
            }
        });
        reduced == 0
    }

    /// All `2^dimension` members, sorted by bit pattern.
    pub fn elements(&self) -> Vec<VertexSet> {
        let d = self.dimension();
        let mut out: Vec<VertexSet> = (0u64..1 << d)
            .map(|mask| {
                VertexSet(
                    VertexSet(mask)
                        .iter()
                        .fold(0, |acc, i| acc ^ self.basis[i].0),
                )
            })
            .collect();
        out.sort();
        out
    }

    /// The same subspace with coordinates permuted into `order`.
    pub fn realigned<S: AsRef<str>>(&self, order: &[S]) -> Result<Subspace> {
        if order.len() != self.ground.len() {
            return Err(Error::GroundMismatch);
        }
        let target: Vec<String> = order.iter().map(|s| s.as_ref().to_string()).collect();
        let mut map = Vec::with_capacity(self.ground.len());
        for l in &self.ground {
            map.push(
                target
                    .iter()
                    .position(|t| t == l)
                    .ok_or(Error::GroundMismatch)?,
            );
        }
        let moved = self
            .basis
            .iter()
            .map(|b| VertexSet::from_indices(b.iter().map(|i| map[i])));
        Ok(Subspace::span(target, moved))
    }
}

impl PartialEq for Subspace {
    fn eq(&self, other: &Self) -> bool {
        if self.ground == other.ground {
            return self.basis == other.basis;
        }
        match other.realigned(&self.ground) {
            Ok(o) => o.basis == self.basis,
            Err(_) => false,
        }
    }
}

impl Eq for Subspace {}

/// `ker(g) = { S : A(g) S = 0 }`.
pub fn kernel(g: &Graph) -> Subspace {
    let n = g.n();
    let reduced = rref(g.rows().to_vec());
    let pivots: Vec<usize> = reduced
        .iter()
        .map(|r| r.trailing_zeros() as usize)
        .collect();
    let pivot_set = VertexSet::from_indices(pivots.iter().copied());
    let free = VertexSet::full(n).difference(pivot_set);
    let vectors = free.iter().map(|f| {
        let mut v = VertexSet::singleton(f);
        for (row, &p) in reduced.iter().zip(&pivots) {
            if row >> f & 1 == 1 {
                v = v.with(p);
            }
        }
        v
    });
    Subspace::span(g.labels().to_vec(), vectors)
}

/// `E_1(g) = { S : A(g) S = S }`, computed as `ker(g + I)`.
pub fn eigenspace_one(g: &Graph) -> Subspace {
    kernel(&add_identity(g))
}

/// Whether `x` lies in the kernel, read off the graph directly: every vertex
/// has an even number of neighbours in `x`, loops included.
pub fn in_kernel(g: &Graph, x: VertexSet) -> bool {
    g.rows().iter().all(|&r| !parity(r & x.0))
}
