//! Principal pivot transform on graphs and its variants.
//!
//! The general pivot `G * X` is computed from the block formula
//!
//! ```text
//!     ( P  Q )          ( P^-1      P^-1 Q      )
//! A = ( R  S )  ->  A*X = ( R P^-1    S + R P^-1 Q )
//! ```
//!
//! with `P = A[X]`; over F2 all signs vanish. Elementary pivots (local and
//! edge complementation) are implemented directly on neighbourhoods and give
//! a second, independent route to the same result through
//! [`decompose_pivot`].

use crate::error::{Error, Result};
use crate::f2linalg::{
    self, add_identity, block, determinant, expand, induced_subgraph, invert, mul,
};
use crate::graph::{Graph, VertexSet};

/// The four blocks of an adjacency matrix split along `X` and `V \ X`.
///
/// Blocks are packed row matrices: `p` is `X x X`, `q` is `X x (V\X)`, `r`
/// is `(V\X) x X` and `s` is `(V\X) x (V\X)`, each column indexed by the
/// position of the vertex within its part.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PivotBlocks {
    pub x: VertexSet,
    pub rest: VertexSet,
    pub p: Vec<u64>,
    pub q: Vec<u64>,
    pub r: Vec<u64>,
    pub s: Vec<u64>,
}

impl PivotBlocks {
    pub fn split(g: &Graph, x: VertexSet) -> Result<Self> {
        g.check_set(x)?;
        let rest = g.full_set().difference(x);
        Ok(PivotBlocks {
            x,
            rest,
            p: block(g, x, x),
            q: block(g, x, rest),
            r: block(g, rest, x),
            s: block(g, rest, rest),
        })
    }

    /// Rows of the full matrix, in the original index order.
    pub fn assemble(&self) -> Vec<u64> {
        let n = self.x.len() + self.rest.len();
        let mut rows = vec![0u64; n];
        for (k, u) in self.x.iter().enumerate() {
            rows[u] = expand(self.p[k], self.x) | expand(self.q[k], self.rest);
        }
        for (k, u) in self.rest.iter().enumerate() {
            rows[u] = expand(self.r[k], self.x) | expand(self.s[k], self.rest);
        }
        rows
    }
}

/// The three-way split of the vertices around an edge `{u, v}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NeighborhoodPartition {
    /// `N'(u) \ N'(v)`
    pub v1: VertexSet,
    /// `N'(v) \ N'(u)`
    pub v2: VertexSet,
    /// `N'(u) ∩ N'(v)`, which contains `u` and `v`.
    pub v3: VertexSet,
}

impl NeighborhoodPartition {
    /// Partition for adjacent `u`, `v`, using closed neighbourhoods.
    pub fn new(g: &Graph, u: usize, v: usize) -> Self {
        let nu = g.neighbourhood(u).with(u);
        let nv = g.neighbourhood(v).with(v);
        NeighborhoodPartition {
            v1: nu.difference(nv),
            v2: nv.difference(nu),
            v3: nu.intersection(nv),
        }
    }
}

fn undefined(g: &Graph, x: VertexSet) -> Error {
    Error::PivotUndefined(g.names_of(x))
}

/// `G * X`. Requires `det G[X] = 1`.
pub fn pivot(g: &Graph, x: VertexSet) -> Result<Graph> {
    let mut blocks = PivotBlocks::split(g, x)?;
    if x.is_empty() {
        return Ok(g.clone());
    }
    let p_inv = invert(&blocks.p).ok_or_else(|| undefined(g, x))?;
    let p_inv_q = mul(&p_inv, &blocks.q);
    let r_p_inv = mul(&blocks.r, &p_inv);
    let correction = mul(&r_p_inv, &blocks.q);
    for (s, c) in blocks.s.iter_mut().zip(correction) {
        *s ^= c;
    }
    blocks.p = p_inv;
    blocks.q = p_inv_q;
    blocks.r = r_p_inv;
    Ok(Graph::from_parts(g.labels().to_vec(), blocks.assemble()))
}

/// The Schur complement of `X`, `S - R P^-1 Q`, as a graph on `V \ X`.
pub fn schur_complement(g: &Graph, x: VertexSet) -> Result<Graph> {
    let blocks = PivotBlocks::split(g, x)?;
    let p_inv = invert(&blocks.p).ok_or_else(|| undefined(g, x))?;
    let correction = mul(&mul(&blocks.r, &p_inv), &blocks.q);
    let rows = blocks
        .s
        .iter()
        .zip(correction)
        .map(|(s, c)| s ^ c)
        .collect();
    Ok(Graph::from_parts(g.names_of(blocks.rest), rows))
}

/// `G *\ X`: pivot on `X`, then delete `X`.
pub fn contraction(g: &Graph, x: VertexSet) -> Result<Graph> {
    let pivoted = pivot(g, x)?;
    induced_subgraph(&pivoted, g.full_set().difference(x))
}

/// Checks the partial-inverse identity on one probe vector:
/// `A (x1, x2) = (y1, y2)` implies `(A*X) (y1, x2) = (x1, y2)`.
pub fn verify_partial_inverse(g: &Graph, x: VertexSet, probe: VertexSet) -> Result<bool> {
    g.check_set(probe)?;
    let pivoted = pivot(g, x)?;
    let rest = g.full_set().difference(x);
    let y = g.apply(probe);
    let input = y.intersection(x).union(probe.intersection(rest));
    let expected = probe.intersection(x).union(y.intersection(rest));
    Ok(pivoted.apply(input) == expected)
}

/// Checks `det (A*X)[Y] = det A[X ⊕ Y]`.
pub fn tucker_check(g: &Graph, x: VertexSet, y: VertexSet) -> Result<bool> {
    g.check_set(y)?;
    let pivoted = pivot(g, x)?;
    Ok(determinant(&pivoted, y)? == determinant(g, x.xor(y))?)
}

pub(crate) fn local_complement_at(g: &Graph, u: usize) -> Result<Graph> {
    if !g.has_loop(u) {
        return Err(Error::NotElementary(format!(
            "local complementation on `{}` needs a loop",
            g.label(u)
        )));
    }
    let nbhd = g.neighbourhood(u);
    let mut rows = g.rows().to_vec();
    for v in nbhd.iter() {
        rows[v] ^= nbhd.0;
    }
    Ok(Graph::from_parts(g.labels().to_vec(), rows))
}

/// Local complementation at a looped vertex: every adjacency inside the
/// open neighbourhood of `u` is toggled, loops included. Equals `G * {u}`.
pub fn local_complement(g: &Graph, u: &str) -> Result<Graph> {
    local_complement_at(g, g.index_of(u)?)
}

pub(crate) fn edge_complement_at(g: &Graph, u: usize, v: usize) -> Result<Graph> {
    if u == v || !g.entry(u, v) || g.has_loop(u) || g.has_loop(v) {
        return Err(Error::NotElementary(format!(
            "edge complementation on `{}`,`{}` needs an edge between two loopless vertices",
            g.label(u),
            g.label(v)
        )));
    }
    let part = NeighborhoodPartition::new(g, u, v);
    let mut rows = g.rows().to_vec();
    for (own, others) in [
        (part.v1, part.v2.union(part.v3)),
        (part.v2, part.v1.union(part.v3)),
        (part.v3, part.v1.union(part.v2)),
    ] {
        for w in own.iter() {
            rows[w] ^= others.0;
        }
    }
    Ok(Graph::from_parts(g.labels().to_vec(), rows))
}

/// Edge complementation on an edge between loopless `u` and `v`: toggles
/// every pair lying in different parts of the [`NeighborhoodPartition`].
/// Loops are untouched. Equals `G * {u, v}`.
pub fn edge_complement(g: &Graph, u: &str, v: &str) -> Result<Graph> {
    edge_complement_at(g, g.index_of(u)?, g.index_of(v)?)
}

/// Applies an elementary pivot given as a one- or two-element set.
pub fn apply_elementary(g: &Graph, e: VertexSet) -> Result<Graph> {
    g.check_set(e)?;
    let members: Vec<usize> = e.iter().collect();
    match members[..] {
        [u] => local_complement_at(g, u),
        [u, v] => edge_complement_at(g, u, v),
        _ => Err(Error::NotElementary(format!(
            "{{{}}} is not an elementary pivot set",
            g.names_of(e).join(",")
        ))),
    }
}

/// Elementary pivot sets of `g`: looped singletons in label order, then
/// edges between loopless vertices in lexicographic index order.
pub fn elementary_pivots(g: &Graph) -> Vec<VertexSet> {
    let loops = g.loops();
    let mut out: Vec<VertexSet> = loops.iter().map(VertexSet::singleton).collect();
    out.extend(
        g.edges()
            .into_iter()
            .filter(|&(u, v)| !loops.contains(u) && !loops.contains(v))
            .map(|(u, v)| VertexSet::pair(u, v)),
    );
    out
}

/// Splits `y` into disjoint elementary pivots `X_1, .., X_k` such that
/// applying them in order to `g` gives `g * y`.
///
/// Greedy: at each step the first elementary pivot of the current graph
/// contained in what remains of `y` is taken.
pub fn decompose_pivot(g: &Graph, y: VertexSet) -> Result<Vec<VertexSet>> {
    if !determinant(g, y)? {
        return Err(undefined(g, y));
    }
    let mut steps = Vec::new();
    let mut remaining = y;
    let mut current = g.clone();
    while !remaining.is_empty() {
        let step = elementary_pivots(&current)
            .into_iter()
            .find(|e| e.is_subset(remaining))
            .ok_or_else(|| {
                Error::Invariant(format!(
                    "no elementary pivot inside {{{}}}",
                    g.names_of(remaining).join(",")
                ))
            })?;
        current = apply_elementary(&current, step)?;
        remaining = remaining.difference(step);
        steps.push(step);
    }
    Ok(steps)
}

/// `G ∗̄ X = ((G + I) * X) + I`. Requires `det (G+I)[X] = 1`.
pub fn dual_pivot(g: &Graph, x: VertexSet) -> Result<Graph> {
    let shifted = add_identity(g);
    match pivot(&shifted, x) {
        Ok(h) => Ok(add_identity(&h)),
        Err(Error::PivotUndefined(names)) => Err(Error::DualPivotUndefined(names)),
        Err(e) => Err(e),
    }
}

/// Computes `G ∗̄ X` with elementary row operations only.
///
/// `X` is split into elementary dual pivots. A loopless `{u}` adds row `u` to
/// every row of `N(u)`. A looped edge `{u, v}` adds row `u` to the rows of
/// `N(v) \ {u}`, row `v` to the rows of `N(u) \ {v}`, then swaps rows `u`
/// and `v`. Intermediate matrices need not be symmetric; the result must be.
pub fn dual_pivot_by_row_ops(g: &Graph, x: VertexSet) -> Result<Graph> {
    let steps = match decompose_pivot(&add_identity(g), x) {
        Ok(s) => s,
        Err(Error::PivotUndefined(names)) => return Err(Error::DualPivotUndefined(names)),
        Err(e) => return Err(e),
    };
    let mut rows = g.rows().to_vec();
    for step in steps {
        let members: Vec<usize> = step.iter().collect();
        match members[..] {
            [u] => {
                let nbhd = VertexSet(rows[u]).without(u);
                let source = rows[u];
                for w in nbhd.iter() {
                    rows[w] ^= source;
                }
            }
            [u, v] => {
                let (row_u, row_v) = (rows[u], rows[v]);
                for w in VertexSet(row_v).without(v).without(u).iter() {
                    rows[w] ^= row_u;
                }
                for w in VertexSet(row_u).without(u).without(v).iter() {
                    rows[w] ^= row_v;
                }
                rows.swap(u, v);
            }
            _ => return Err(Error::Invariant("decomposition step of size > 2".into())),
        }
    }
    Graph::from_rows(g.labels().to_vec(), rows).map_err(|e| match e {
        Error::NotSymmetric(a, b) => Error::Invariant(format!(
            "row operations left an asymmetric matrix at ({a}, {b})"
        )),
        other => other,
    })
}

/// Whether `x` is a maximal pivot set, i.e. a member of `F_G`.
///
/// Uses the characterisation `det G[X] = 1` and `|X| = rank(G)`.
pub fn is_maximal_pivot_set(g: &Graph, x: VertexSet) -> Result<bool> {
    Ok(x.len() == f2linalg::rank(g) && determinant(g, x)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::f2linalg::{eigenspace_one, kernel, nullity, transpose};
    use crate::suite::all_graphs;

    fn g() -> Graph {
        Graph::from_edges(
            &["p", "q", "r", "s"],
            &[("p", "q"), ("p", "r"), ("p", "s"), ("q", "s"), ("r", "s")],
            &["q"],
        )
        .unwrap()
    }

    fn set(g: &Graph, names: &[&str]) -> VertexSet {
        g.set_of(names).unwrap()
    }

    /// The pivot rebuilt from the partial-inverse relation alone: column `j`
    /// of `A*X` is the image of the unit vector `e_j`, found by searching for
    /// the probe whose `(y1, x2)` equals `e_j`.
    fn pivot_by_relation(g: &Graph, x: VertexSet) -> Vec<u64> {
        let n = g.n();
        let rest = g.full_set().difference(x);
        let mut cols = vec![0u64; n];
        for probe in g.full_set().subsets() {
            let y = g.apply(probe);
            let input = y.intersection(x).union(probe.intersection(rest));
            if input.len() == 1 {
                let j = input.first().unwrap();
                cols[j] = probe.intersection(x).union(y.intersection(rest)).0;
            }
        }
        transpose(&cols, n)
    }

    #[test]
    fn pivot_examples() {
        let g = g();
        assert_eq!(pivot(&g, set(&g, &["p", "s"])).unwrap(), g);
        // top-right graph of the pivot orbit: loops p r s, edges pq pr qr qs rs
        let top_right = Graph::from_edges(
            &["p", "q", "r", "s"],
            &[("p", "q"), ("p", "r"), ("q", "r"), ("q", "s"), ("r", "s")],
            &["p", "r", "s"],
        )
        .unwrap();
        assert_eq!(pivot(&g, set(&g, &["p", "q"])).unwrap(), top_right);
        assert_eq!(
            pivot(&g, set(&g, &["p"])).unwrap_err(),
            Error::PivotUndefined(vec!["p".into()])
        );
    }

    #[test]
    fn pivot_example_four_matrix() {
        let g_prime = crate::f2linalg::add_identity(&g());
        let h = pivot(&g_prime, set(&g_prime, &["p"])).unwrap();
        // rows p q r s of the printed matrix
        let expected = [0b1111u64, 0b0111, 0b0011, 0b0001];
        assert_eq!(h.rows(), &expected);
    }

    #[test]
    fn pivot_agrees_with_relation_oracle() {
        for n in 0..=4 {
            for g in all_graphs(n) {
                for x in g.full_set().subsets() {
                    if determinant(&g, x).unwrap() {
                        let p = pivot(&g, x).unwrap();
                        assert_eq!(p.rows(), pivot_by_relation(&g, x), "{g} {x}");
                        assert!(p.is_symmetric());
                    }
                }
            }
        }
    }

    #[test]
    fn blocks_reassemble_and_transpose() {
        for g in all_graphs(4).step_by(7) {
            for x in g.full_set().subsets() {
                let b = PivotBlocks::split(&g, x).unwrap();
                assert_eq!(b.assemble(), g.rows());
                assert_eq!(b.r, transpose(&b.q, g.n() - x.len()));
                assert_eq!(b.p, transpose(&b.p, x.len()));
            }
        }
    }

    #[test]
    fn partial_inverse_examples() {
        let g = g();
        assert!(verify_partial_inverse(&g, set(&g, &["p", "s"]), VertexSet::EMPTY).unwrap());
        for probe in g.full_set().subsets() {
            assert!(verify_partial_inverse(&g, set(&g, &["p", "q"]), probe).unwrap());
        }
        let g_prime = crate::f2linalg::add_identity(&g);
        assert!(
            verify_partial_inverse(&g_prime, set(&g, &["p"]), set(&g, &["p", "r", "s"])).unwrap()
        );
        assert!(verify_partial_inverse(&g, set(&g, &["p"]), VertexSet::EMPTY).is_err());
    }

    #[test]
    fn tucker_examples() {
        let g = g();
        let pq = set(&g, &["p", "q"]);
        assert!(tucker_check(&g, pq, pq).unwrap());
        for y in g.full_set().subsets() {
            assert!(tucker_check(&g, pq, y).unwrap());
            assert!(tucker_check(&g, VertexSet::EMPTY, y).unwrap());
        }
    }

    #[test]
    fn schur_examples() {
        let g = g();
        let expected =
            Graph::from_edges(&["p", "r", "s"], &[("p", "r"), ("r", "s")], &["p", "s"]).unwrap();
        assert_eq!(schur_complement(&g, set(&g, &["q"])).unwrap(), expected);
        assert_eq!(schur_complement(&g, VertexSet::EMPTY).unwrap(), g);
        for x in g.full_set().subsets() {
            if determinant(&g, x).unwrap() {
                let s = schur_complement(&g, x).unwrap();
                assert_eq!(nullity(&s), nullity(&g));
                assert_eq!(s, contraction(&g, x).unwrap());
            }
        }
    }

    #[test]
    fn local_complement_examples() {
        let g = g();
        let top_middle = Graph::from_edges(
            &["p", "q", "r", "s"],
            &[("p", "q"), ("p", "r"), ("q", "s"), ("r", "s")],
            &["p", "q", "s"],
        )
        .unwrap();
        let h = local_complement(&g, "q").unwrap();
        assert_eq!(h, top_middle);
        assert_eq!(local_complement(&h, "q").unwrap(), g);
        let lonely = Graph::from_edges(&["a", "b"], &[], &["a"]).unwrap();
        assert_eq!(local_complement(&lonely, "a").unwrap(), lonely);
        assert!(matches!(
            local_complement(&g, "p"),
            Err(Error::NotElementary(_))
        ));
    }

    #[test]
    fn edge_complement_examples() {
        let g = g();
        assert_eq!(edge_complement(&g, "p", "s").unwrap(), g);
        let bottom_left = Graph::from_edges(
            &["p", "q", "r", "s"],
            &[("p", "r"), ("p", "s"), ("q", "r"), ("r", "s")],
            &["q"],
        )
        .unwrap();
        let h = edge_complement(&g, "p", "r").unwrap();
        assert_eq!(h, bottom_left);
        assert_eq!(edge_complement(&h, "p", "r").unwrap(), g);
        assert!(edge_complement(&g, "p", "q").is_err(), "q has a loop");
        assert!(edge_complement(&g, "q", "r").is_err(), "no edge");
        assert!(edge_complement(&g, "p", "p").is_err());
    }

    #[test]
    fn partition_contains_endpoints() {
        let g = g();
        let part = NeighborhoodPartition::new(&g, 0, 2);
        assert!(part.v3.contains(0) && part.v3.contains(2));
        assert!(part.v1.intersection(part.v2).is_empty());
        assert!(part.v1.intersection(part.v3).is_empty());
        assert!(part.v2.intersection(part.v3).is_empty());
    }

    #[test]
    fn elementary_pivots_examples() {
        let g = g();
        let names: Vec<Vec<String>> = elementary_pivots(&g)
            .into_iter()
            .map(|e| g.names_of(e))
            .collect();
        assert_eq!(
            names,
            vec![vec!["q"], vec!["p", "r"], vec!["p", "s"], vec!["r", "s"]]
        );
        let dual = dual_pivot(&g, set(&g, &["p"])).unwrap();
        let names: Vec<Vec<String>> = elementary_pivots(&dual)
            .into_iter()
            .map(|e| dual.names_of(e))
            .collect();
        assert_eq!(names, vec![vec!["r"], vec!["s"], vec!["p", "q"]]);
        assert!(elementary_pivots(&Graph::new(["a", "b"]).unwrap()).is_empty());
    }

    #[test]
    fn elementary_pivots_are_minimal_nonempty_det_sets() {
        for n in 0..=4 {
            for g in all_graphs(n) {
                let d: Vec<VertexSet> = g
                    .full_set()
                    .subsets()
                    .filter(|&x| !x.is_empty() && determinant(&g, x).unwrap())
                    .collect();
                let mut minimal: Vec<VertexSet> = d
                    .iter()
                    .copied()
                    .filter(|&x| !d.iter().any(|&y| y.is_proper_subset(x)))
                    .collect();
                let mut elem = elementary_pivots(&g);
                minimal.sort();
                elem.sort();
                assert_eq!(minimal, elem);
                for e in elementary_pivots(&g) {
                    assert_eq!(apply_elementary(&g, e).unwrap(), pivot(&g, e).unwrap());
                }
            }
        }
    }

    #[test]
    fn decompose_examples() {
        let g = g();
        let pq = set(&g, &["p", "q"]);
        let steps = decompose_pivot(&g, pq).unwrap();
        assert_eq!(steps, vec![set(&g, &["q"]), set(&g, &["p"])]);
        let replay = steps
            .iter()
            .try_fold(g.clone(), |h, &e| apply_elementary(&h, e))
            .unwrap();
        assert_eq!(replay, pivot(&g, pq).unwrap());
        let ps = set(&g, &["p", "s"]);
        assert_eq!(decompose_pivot(&g, ps).unwrap(), vec![ps]);
        assert!(decompose_pivot(&g, VertexSet::EMPTY).unwrap().is_empty());
        assert!(decompose_pivot(&g, set(&g, &["p"])).is_err());
    }

    #[test]
    fn decomposition_replays_block_formula() {
        for n in 0..=5 {
            for g in all_graphs(n) {
                for y in g.full_set().subsets() {
                    if !determinant(&g, y).unwrap() {
                        continue;
                    }
                    let steps = decompose_pivot(&g, y).unwrap();
                    let union = steps.iter().fold(VertexSet::EMPTY, |a, &s| {
                        assert!(a.intersection(s).is_empty());
                        a.union(s)
                    });
                    assert_eq!(union, y);
                    let replay = steps
                        .iter()
                        .try_fold(g.clone(), |h, &e| apply_elementary(&h, e))
                        .unwrap();
                    assert_eq!(replay, pivot(&g, y).unwrap());
                }
            }
        }
    }

    #[test]
    fn dual_pivot_examples() {
        let g = g();
        let p = set(&g, &["p"]);
        let lower_right = Graph::from_edges(
            &["p", "q", "r", "s"],
            &[("p", "q"), ("p", "r"), ("p", "s"), ("q", "r")],
            &["r", "s"],
        )
        .unwrap();
        let d = dual_pivot(&g, p).unwrap();
        assert_eq!(d, lower_right);
        assert_eq!(dual_pivot(&d, p).unwrap(), g);
        assert_eq!(kernel(&d), kernel(&g));
        assert_eq!(
            dual_pivot(&g, set(&g, &["q"])).unwrap_err(),
            Error::DualPivotUndefined(vec!["q".into()])
        );
    }

    #[test]
    fn row_ops_examples() {
        let g = g();
        let p = set(&g, &["p"]);
        assert_eq!(
            dual_pivot_by_row_ops(&g, p).unwrap(),
            dual_pivot(&g, p).unwrap()
        );
        assert_eq!(dual_pivot_by_row_ops(&g, VertexSet::EMPTY).unwrap(), g);
    }

    #[test]
    fn dual_pivot_laws_exhaustive() {
        for n in 0..=4 {
            for g in all_graphs(n) {
                let k = kernel(&g);
                for x in g.full_set().subsets() {
                    let Ok(d) = dual_pivot(&g, x) else { continue };
                    assert_eq!(dual_pivot(&d, x).unwrap(), g);
                    assert_eq!(kernel(&d), k);
                    assert_eq!(dual_pivot_by_row_ops(&g, x).unwrap(), d, "{g} {x}");
                    for y in g.full_set().subsets() {
                        if let Ok(dd) = dual_pivot(&d, y) {
                            assert_eq!(dual_pivot(&g, x.xor(y)).unwrap(), dd);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn pivot_laws_exhaustive() {
        for n in 0..=4 {
            for g in all_graphs(n) {
                let e1 = eigenspace_one(&g);
                for x in g.full_set().subsets() {
                    let Ok(h) = pivot(&g, x) else { continue };
                    assert_eq!(pivot(&h, x).unwrap(), g);
                    assert_eq!(eigenspace_one(&h), e1);
                    for y in g.full_set().subsets() {
                        assert!(tucker_check(&g, x, y).unwrap());
                        assert!(verify_partial_inverse(&g, x, y).unwrap());
                        if let Ok(hh) = pivot(&h, y) {
                            assert_eq!(pivot(&g, x.xor(y)).unwrap(), hh);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn elementary_dual_matches_elementary_effect() {
        // loopless u: dual pivot on {u} complements N(u) just like *{u} does
        for g in all_graphs(4) {
            for u in 0..4 {
                if g.has_loop(u) {
                    continue;
                }
                let d = dual_pivot(&g, VertexSet::singleton(u)).unwrap();
                let mut rows = g.rows().to_vec();
                let nbhd = g.neighbourhood(u);
                for v in nbhd.iter() {
                    rows[v] ^= nbhd.0;
                }
                assert_eq!(d.rows(), rows);
            }
        }
    }

    #[test]
    fn maximal_pivot_set_examples() {
        let g = g();
        assert!(is_maximal_pivot_set(&g, set(&g, &["p", "q", "s"])).unwrap());
        assert!(!is_maximal_pivot_set(&g, set(&g, &["p", "q"])).unwrap());
        let h = pivot(&g, set(&g, &["p", "q"])).unwrap();
        assert!(is_maximal_pivot_set(&h, h.full_set()).unwrap());
    }

    #[test]
    fn maximal_pivot_set_matches_superset_definition() {
        for n in 0..=4 {
            for g in all_graphs(n) {
                for x in g.full_set().subsets() {
                    let by_definition = determinant(&g, x).unwrap()
                        && g.full_set()
                            .subsets()
                            .filter(|y| x.is_proper_subset(*y))
                            .all(|y| !determinant(&g, y).unwrap());
                    assert_eq!(is_maximal_pivot_set(&g, x).unwrap(), by_definition);
                    if by_definition {
                        let c = contraction(&g, x).unwrap();
                        assert!(c.is_discrete());
                        assert_eq!(c.n(), nullity(&g));
                    }
                }
            }
        }
    }
}
