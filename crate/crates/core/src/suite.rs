//! Exhaustive and randomised property suites over small graphs and legal
//! strings. Used by `verify` and the acceptance tests.

use std::collections::HashSet;
use std::fmt;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::f2linalg::{add_identity, bases, determinant, kernel};
use crate::geneassembly::{
    apply_graph_rule, apply_snr, gnrdom_family, overlap_graph, parse_legal_string,
    random_legal_string, reachable_gnrdoms, verify_simulation, GraphRule, Symbol,
};
use crate::graph::{Graph, VertexSet};
use crate::orbit::{dual_orbit, maximal_contraction_results, vertex_name_sets};
use crate::pivot::{dual_pivot, dual_pivot_by_row_ops, pivot};
use crate::setsystem::{delta_matroid, maximal_family, reconstruct_graph};

/// Labels `a, b, ..` for the first `n` vertices.
pub fn letter_labels(n: usize) -> Vec<String> {
    (0..n)
        .map(|i| ((b'a' + i as u8) as char).to_string())
        .collect()
}

/// Every labelled graph (loops allowed) on `n` vertices `a, b, ..`, in order
/// of the bit pattern over the upper triangle including the diagonal.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    assert!(n <= 10, "all_graphs is meant for small n");
    let labels = letter_labels(n);
    let cells: Vec<(usize, usize)> = (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect();
    (0u64..1 << cells.len()).map(move |mask| {
        let mut g = Graph::new(labels.clone()).expect("distinct labels");
        for (k, &(i, j)) in cells.iter().enumerate() {
            if mask >> k & 1 == 1 {
                g.set_entry(i, j, true);
            }
        }
        g
    })
}

/// Tally for one property.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyReport {
    pub name: &'static str,
    pub checks: u64,
    pub failures: u64,
    pub first_failure: Option<String>,
}

impl PropertyReport {
    pub fn new(name: &'static str) -> Self {
        PropertyReport {
            name,
            checks: 0,
            failures: 0,
            first_failure: None,
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }

    /// Records one check; `detail` is only evaluated on failure.
    pub fn check(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some(detail());
            }
        }
    }
}

impl fmt::Display for PropertyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        write!(
            f,
            "{status} {} ({} checks, {} failures)",
            self.name, self.checks, self.failures
        )?;
        if let Some(d) = &self.first_failure {
            write!(f, ": {d}")?;
        }
        Ok(())
    }
}

/// Reports of a whole suite.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SuiteReport {
    pub properties: Vec<PropertyReport>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.properties.iter().all(PropertyReport::passed)
    }

    pub fn get(&self, name: &str) -> Option<&PropertyReport> {
        self.properties.iter().find(|p| p.name == name)
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for p in &self.properties {
            writeln!(f, "{p}")?;
        }
        Ok(())
    }
}

pub const TUCKER: &str = "tucker identity";
pub const PARTIAL_INVERSE: &str = "partial inverse identity";
pub const PIVOT_ALGEBRA: &str = "pivot involution and composition";
pub const DUAL_KERNEL: &str = "kernel invariance under dual pivot";
pub const MAXIMAL_ARE_BASES: &str = "maximal pivot sets are bases";
pub const KERNEL_DETERMINES_MAXIMAL: &str = "maximal family iff kernel";
pub const DUAL_ORBIT_MAXIMAL: &str = "maximal family across dual orbits";
pub const DUAL_ORBIT_CONTRACTIONS: &str = "discrete contractions across dual orbits";
pub const DUAL_ORBIT_GNRDOM: &str = "gnr domains across dual orbits";
pub const RECONSTRUCTION: &str = "reconstruction from delta matroid";
pub const ROW_OPERATIONS: &str = "dual pivot by row operations";

/// Largest `n` for the all-pairs kernel/maximal-family comparison, which is
/// quadratic in the number of graphs.
pub const PAIR_SWEEP_MAX_N: usize = 3;

/// Runs the graph properties over every graph on `0..=max_n` vertices.
///
/// Orbit properties visit each dual orbit once, from its first member in
/// enumeration order.
pub fn exhaustive_suite(max_n: usize) -> Result<SuiteReport> {
    let mut tucker = PropertyReport::new(TUCKER);
    let mut partial = PropertyReport::new(PARTIAL_INVERSE);
    let mut algebra = PropertyReport::new(PIVOT_ALGEBRA);
    let mut dual_kernel = PropertyReport::new(DUAL_KERNEL);
    let mut max_bases = PropertyReport::new(MAXIMAL_ARE_BASES);
    let mut pairs = PropertyReport::new(KERNEL_DETERMINES_MAXIMAL);
    let mut orbit_max = PropertyReport::new(DUAL_ORBIT_MAXIMAL);
    let mut orbit_contr = PropertyReport::new(DUAL_ORBIT_CONTRACTIONS);
    let mut orbit_gnr = PropertyReport::new(DUAL_ORBIT_GNRDOM);
    let mut recon = PropertyReport::new(RECONSTRUCTION);
    let mut rowops = PropertyReport::new(ROW_OPERATIONS);

    for n in 0..=max_n {
        let mut visited: HashSet<Vec<u64>> = HashSet::new();
        for g in all_graphs(n) {
            let full = g.full_set();
            let applicable: Vec<VertexSet> = full
                .subsets()
                .filter(|&x| determinant(&g, x).unwrap_or(false))
                .collect();

            for &x in &applicable {
                let gx = pivot(&g, x)?;
                for y in full.subsets() {
                    let ok = determinant(&gx, y)? == determinant(&g, x.xor(y))?;
                    tucker.check(ok, || format!("{g}, X={x}, Y={y}"));
                }
                for probe in full.subsets() {
                    let image = g.apply(probe);
                    let rest = full.difference(x);
                    let input = image.intersection(x).union(probe.intersection(rest));
                    let expected = probe.intersection(x).union(image.intersection(rest));
                    partial.check(gx.apply(input) == expected, || {
                        format!("{g}, X={x}, probe={probe}")
                    });
                }
                algebra.check(pivot(&gx, x)? == g, || format!("involution: {g}, X={x}"));
                for y in full.subsets() {
                    if determinant(&gx, y)? {
                        let ok = pivot(&gx, y)? == pivot(&g, x.xor(y))?;
                        algebra.check(ok, || format!("composition: {g}, X={x}, Y={y}"));
                    }
                }
            }

            let shifted = add_identity(&g);
            let ker = kernel(&g);
            for x in full.subsets() {
                if !determinant(&shifted, x)? {
                    continue;
                }
                let dual = dual_pivot(&g, x)?;
                dual_kernel.check(kernel(&dual) == ker, || format!("{g}, X={x}"));
                let by_rows = dual_pivot_by_row_ops(&g, x);
                rowops.check(by_rows.as_ref() == Ok(&dual), || {
                    format!("{g}, X={x}: {by_rows:?}")
                });
            }

            let maximal = maximal_family(&g)?;
            max_bases.check(maximal.family() == &bases(&g)?[..], || format!("{g}"));

            let d = delta_matroid(&g)?;
            recon.check(reconstruct_graph(&d).as_ref() == Ok(&g), || format!("{g}"));

            if visited.contains(g.rows()) {
                continue;
            }
            let orbit = dual_orbit(&g)?;
            let contractions = vertex_name_sets(&maximal_contraction_results(&g)?);
            let gnrdoms = reachable_gnrdoms(&g)?;
            let by_family: std::collections::BTreeSet<Vec<String>> = gnrdom_family(&g)?
                .into_iter()
                .map(|s| g.names_of(s))
                .collect();
            orbit_gnr.check(by_family == gnrdoms, || format!("family vs search: {g}"));
            for node in orbit.nodes() {
                visited.insert(node.rows().to_vec());
                orbit_max.check(maximal_family(node)? == maximal, || {
                    format!("{g} vs {node}")
                });
                let c = vertex_name_sets(&maximal_contraction_results(node)?);
                orbit_contr.check(c == contractions, || format!("{g} vs {node}"));
                orbit_gnr.check(reachable_gnrdoms(node)? == gnrdoms, || {
                    format!("{g} vs {node}")
                });
            }
        }
    }

    for n in 0..=max_n.min(PAIR_SWEEP_MAX_N) {
        let graphs: Vec<(Graph, _, _)> = all_graphs(n)
            .map(|g| {
                let k = kernel(&g);
                let f = maximal_family(&g).expect("n is small");
                (g, k, f)
            })
            .collect();
        for (g1, k1, f1) in &graphs {
            for (g2, k2, f2) in &graphs {
                pairs.check((f1 == f2) == (k1 == k2), || format!("{g1} vs {g2}"));
            }
        }
    }

    Ok(SuiteReport {
        properties: vec![
            tucker,
            partial,
            algebra,
            dual_kernel,
            max_bases,
            pairs,
            orbit_max,
            orbit_contr,
            orbit_gnr,
            recon,
            rowops,
        ],
    })
}

pub const SIMULATION: &str = "string rules simulated by graph rules";
pub const GNR_EXCEPTION: &str = "gnr without matching snr";

/// Letters per random legal string in the simulation suite.
pub const SIMULATION_MAX_LETTERS: usize = 6;

/// Checks `count` random legal strings drawn from a ChaCha8 stream seeded
/// with `seed`, plus the `x y y x` witness where gnr applies but snr does not.
pub fn simulation_suite(count: usize, seed: u64) -> SuiteReport {
    let mut sim = PropertyReport::new(SIMULATION);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..count {
        let u = random_legal_string(&mut rng, SIMULATION_MAX_LETTERS);
        let report = verify_simulation(&u);
        sim.check(report.passed(), || report.failures.join("; "));
    }

    let mut exception = PropertyReport::new(GNR_EXCEPTION);
    let u = parse_legal_string("x y y x").expect("legal");
    let report = verify_simulation(&u);
    exception.check(report.passed(), || report.failures.join("; "));
    let gu = overlap_graph(&u);
    exception.check(
        apply_graph_rule(&gu, &GraphRule::Gnr("x".into())).is_ok(),
        || "gnr:x should apply to the overlap graph of `x y y x`".into(),
    );
    let snr = [Symbol::plain("x"), Symbol::new("x", true)]
        .iter()
        .any(|x| apply_snr(&u, x).is_ok());
    exception.check(!snr, || "snr on x should not apply to `x y y x`".into());

    SuiteReport {
        properties: vec![sim, exception],
    }
}

/// A graph other than `I` with the same maximal family `{V}` as `I`, lying
/// outside the dual orbit of `I`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NonConverseWitness {
    pub identity: Graph,
    pub other: Graph,
}

/// Searches graphs on `n` vertices for a [`NonConverseWitness`], in
/// enumeration order. Also confirms that the dual orbit of `I` is `{I}`.
pub fn non_converse_witness(n: usize) -> Result<Option<NonConverseWitness>> {
    let labels = letter_labels(n);
    let identity = add_identity(&Graph::new(labels)?);
    let orbit = dual_orbit(&identity)?;
    if orbit.len() != 1 {
        return Ok(None);
    }
    let target = maximal_family(&identity)?;
    for h in all_graphs(n) {
        if h == identity || !determinant(&h, h.full_set())? {
            continue;
        }
        if maximal_family(&h)? == target
            && !orbit.contains(&h)
            && !dual_orbit(&h)?.contains(&identity)
        {
            return Ok(Some(NonConverseWitness { identity, other: h }));
        }
    }
    Ok(None)
}
