//! Legal strings, the string pointer reduction rules, overlap graphs and the
//! graph reduction rules of the gene assembly model.
//!
//! A bar is written as a trailing apostrophe: `q'` is q-bar. A legal string
//! is a sequence of possibly barred letters in which every letter occurs
//! exactly twice, ignoring bars.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{Error, Result};
use crate::f2linalg::induced_subgraph;
use crate::graph::{Graph, VertexSet};
use crate::orbit::{dual_orbit, ORBIT_CAP};
use crate::pivot::{contraction, elementary_pivots};
use crate::setsystem::maximal_family;

/// A letter, possibly barred.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Symbol {
    pub letter: String,
    pub barred: bool,
}

impl Symbol {
    pub fn new(letter: impl Into<String>, barred: bool) -> Self {
        Symbol {
            letter: letter.into(),
            barred,
        }
    }

    pub fn plain(letter: impl Into<String>) -> Self {
        Symbol::new(letter, false)
    }

    /// The symbol with its bar toggled.
    pub fn bar(&self) -> Symbol {
        Symbol::new(self.letter.clone(), !self.barred)
    }

    /// Parses `x` or `x'`.
    pub fn parse(token: &str) -> Result<Symbol> {
        let (letter, barred) = match token.strip_suffix('\'') {
            Some(l) => (l, true),
            None => (token, false),
        };
        if letter.is_empty() || letter.contains('\'') || letter.contains(char::is_whitespace) {
            return Err(Error::Parse {
                line: 1,
                msg: format!("bad symbol `{token}`"),
            });
        }
        Ok(Symbol::new(letter, barred))
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.letter, if self.barred { "'" } else { "" })
    }
}

/// Reverses `symbols` and toggles every bar.
fn inverse(symbols: &[Symbol]) -> Vec<Symbol> {
    symbols.iter().rev().map(Symbol::bar).collect()
}

/// A string over barred and unbarred letters whose unbarred projection is a
/// double occurrence string.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct LegalString {
    symbols: Vec<Symbol>,
}

impl LegalString {
    pub fn new(symbols: Vec<Symbol>) -> Result<Self> {
        let mut counts: HashMap<&str, usize> = HashMap::new();
        for s in &symbols {
            *counts.entry(s.letter.as_str()).or_default() += 1;
        }
        if let Some(s) = symbols.iter().find(|s| counts[s.letter.as_str()] != 2) {
            return Err(Error::IllegalString(s.letter.clone()));
        }
        Ok(LegalString { symbols })
    }

    /// The empty string.
    pub fn empty() -> Self {
        LegalString::default()
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    /// Distinct letters in order of first occurrence.
    pub fn letters(&self) -> Vec<String> {
        let mut seen = BTreeSet::new();
        self.symbols
            .iter()
            .filter(|s| seen.insert(s.letter.as_str()))
            .map(|s| s.letter.clone())
            .collect()
    }

    /// Both positions of `letter`.
    pub fn positions(&self, letter: &str) -> Result<(usize, usize)> {
        let mut it = self
            .symbols
            .iter()
            .enumerate()
            .filter(|(_, s)| s.letter == letter)
            .map(|(i, _)| i);
        match (it.next(), it.next()) {
            (Some(i), Some(j)) => Ok((i, j)),
            _ => Err(Error::UnknownLetter(letter.to_string())),
        }
    }

    fn from_parts(parts: &[&[Symbol]]) -> LegalString {
        LegalString {
            symbols: parts.iter().flat_map(|p| p.iter().cloned()).collect(),
        }
    }
}

impl fmt::Display for LegalString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tokens: Vec<String> = self.symbols.iter().map(Symbol::to_string).collect();
        write!(f, "{}", tokens.join(" "))
    }
}

/// Parses a legal string.
///
/// Symbols are separated by whitespace. Text without any whitespace is read
/// in compact mode, one character per letter, each optionally followed by
/// `'`.
pub fn parse_legal_string(text: &str) -> Result<LegalString> {
    let text = text.trim();
    let tokens: Vec<String> = if text.contains(char::is_whitespace) {
        text.split_whitespace().map(str::to_string).collect()
    } else {
        let mut tokens: Vec<String> = Vec::new();
        for c in text.chars() {
            match (c, tokens.last_mut()) {
                ('\'', Some(last)) if !last.ends_with('\'') => last.push(c),
                _ => tokens.push(c.to_string()),
            }
        }
        tokens
    };
    let symbols = tokens
        .iter()
        .map(|t| Symbol::parse(t))
        .collect::<Result<Vec<_>>>()?;
    LegalString::new(symbols)
}

/// A string pointer reduction rule.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum StringRule {
    Snr(Symbol),
    Spr(Symbol),
    Sdr(Symbol, Symbol),
}

impl StringRule {
    /// Parses `snr:x`, `spr:x'` or `sdr:x,y`.
    pub fn parse(text: &str) -> Result<StringRule> {
        let bad = || Error::Parse {
            line: 1,
            msg: format!("bad rule `{text}`, expected snr:x, spr:x or sdr:x,y"),
        };
        let (kind, args) = text.split_once(':').ok_or_else(bad)?;
        let args: Vec<&str> = args.split(',').map(str::trim).collect();
        match (kind.trim(), &args[..]) {
            ("snr", [x]) => Ok(StringRule::Snr(Symbol::parse(x)?)),
            ("spr", [x]) => Ok(StringRule::Spr(Symbol::parse(x)?)),
            ("sdr", [x, y]) => Ok(StringRule::Sdr(Symbol::parse(x)?, Symbol::parse(y)?)),
            _ => Err(bad()),
        }
    }
}

impl fmt::Display for StringRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StringRule::Snr(x) => write!(f, "snr:{x}"),
            StringRule::Spr(x) => write!(f, "spr:{x}"),
            StringRule::Sdr(x, y) => write!(f, "sdr:{x},{y}"),
        }
    }
}

fn inapplicable(rule: StringRule) -> Error {
    Error::RuleInapplicable(rule.to_string())
}

/// `snr_x(u1 x x u2) = u1 u2`.
pub fn apply_snr(u: &LegalString, x: &Symbol) -> Result<LegalString> {
    let s = &u.symbols;
    let i = s
        .windows(2)
        .position(|w| w[0] == *x && w[1] == *x)
        .ok_or_else(|| inapplicable(StringRule::Snr(x.clone())))?;
    Ok(LegalString::from_parts(&[&s[..i], &s[i + 2..]]))
}

/// `spr_x(u1 x u2 x' u3) = u1 inv(u2) u3`.
pub fn apply_spr(u: &LegalString, x: &Symbol) -> Result<LegalString> {
    let s = &u.symbols;
    let err = || inapplicable(StringRule::Spr(x.clone()));
    let (i, j) = u.positions(&x.letter).map_err(|_| err())?;
    if s[i] != *x || s[j] != x.bar() {
        return Err(err());
    }
    let middle = inverse(&s[i + 1..j]);
    Ok(LegalString::from_parts(&[&s[..i], &middle, &s[j + 1..]]))
}

/// `sdr_{x,y}(u1 x u2 y u3 x u4 y u5) = u1 u4 u3 u2 u5`, for `x` and `y`
/// over different letters.
pub fn apply_sdr(u: &LegalString, x: &Symbol, y: &Symbol) -> Result<LegalString> {
    let s = &u.symbols;
    let err = || inapplicable(StringRule::Sdr(x.clone(), y.clone()));
    if x.letter == y.letter {
        return Err(err());
    }
    let (i1, i2) = u.positions(&x.letter).map_err(|_| err())?;
    let (j1, j2) = u.positions(&y.letter).map_err(|_| err())?;
    if !(i1 < j1 && j1 < i2 && i2 < j2) {
        return Err(err());
    }
    if s[i1] != *x || s[i2] != *x || s[j1] != *y || s[j2] != *y {
        return Err(err());
    }
    Ok(LegalString::from_parts(&[
        &s[..i1],
        &s[i2 + 1..j2],
        &s[j1 + 1..i2],
        &s[i1 + 1..j1],
        &s[j2 + 1..],
    ]))
}

pub fn apply_string_rule(u: &LegalString, rule: &StringRule) -> Result<LegalString> {
    match rule {
        StringRule::Snr(x) => apply_snr(u, x),
        StringRule::Spr(x) => apply_spr(u, x),
        StringRule::Sdr(x, y) => apply_sdr(u, x, y),
    }
}

/// The `y`-interval: from the first to the second occurrence of letter `y`,
/// where a border is kept if it is `y` and dropped if it is `y'`.
///
/// `start` and `end` are inclusive positions; the interval is empty when
/// `start > end`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Interval {
    pub letter: String,
    pub start: usize,
    pub end: usize,
}

impl Interval {
    pub fn is_empty(&self) -> bool {
        self.start > self.end
    }

    pub fn symbols<'a>(&self, u: &'a LegalString) -> &'a [Symbol] {
        if self.is_empty() {
            &[]
        } else {
            &u.symbols[self.start..=self.end]
        }
    }
}

pub fn y_interval(u: &LegalString, y: &str) -> Result<Interval> {
    let (i, j) = u.positions(y)?;
    let start = if u.symbols[i].barred { i + 1 } else { i };
    // j >= 1 always, so j - 1 cannot underflow
    let end = if u.symbols[j].barred { j - 1 } else { j };
    Ok(Interval {
        letter: y.to_string(),
        start,
        end,
    })
}

/// Whether letter `x` occurs exactly once in the unbarred `y`-interval.
pub fn occurs_once_in_interval(u: &LegalString, x: &str, y: &str) -> Result<bool> {
    u.positions(x)?;
    let intv = y_interval(u, y)?;
    Ok(intv.symbols(u).iter().filter(|s| s.letter == x).count() == 1)
}

/// The overlap graph: letters are vertices, `{x, y}` is an edge iff `x`
/// occurs once in the `y`-interval. With `x = y` this yields a loop exactly
/// when both `x` and `x'` occur.
pub fn overlap_graph(u: &LegalString) -> Graph {
    let letters = u.letters();
    let n = letters.len();
    let intervals: Vec<Interval> = letters
        .iter()
        .map(|l| y_interval(u, l).expect("letter taken from the string"))
        .collect();
    let mut g = Graph::new(letters.clone()).expect("letters are distinct");
    for (yi, intv) in intervals.iter().enumerate() {
        let mut counts = vec![0usize; n];
        for s in intv.symbols(u) {
            let xi = letters.iter().position(|l| *l == s.letter).unwrap();
            counts[xi] += 1;
        }
        for (xi, &c) in counts.iter().enumerate().take(yi + 1) {
            if c == 1 {
                g.set_entry(xi, yi, true);
            }
        }
    }
    g
}

/// A graph reduction rule, naming vertices by label.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum GraphRule {
    /// Remove an isolated, loopless vertex.
    Gnr(String),
    /// Contract a looped vertex.
    Gpr(String),
    /// Contract an edge between two loopless vertices.
    Gdr(String, String),
}

impl GraphRule {
    pub fn parse(text: &str) -> Result<GraphRule> {
        let bad = || Error::Parse {
            line: 1,
            msg: format!("bad rule `{text}`, expected gnr:x, gpr:x or gdr:x,y"),
        };
        let (kind, args) = text.split_once(':').ok_or_else(bad)?;
        let args: Vec<String> = args.split(',').map(|a| a.trim().to_string()).collect();
        match (kind.trim(), &args[..]) {
            ("gnr", [x]) => Ok(GraphRule::Gnr(x.clone())),
            ("gpr", [x]) => Ok(GraphRule::Gpr(x.clone())),
            ("gdr", [x, y]) => Ok(GraphRule::Gdr(x.clone(), y.clone())),
            _ => Err(bad()),
        }
    }
}

impl fmt::Display for GraphRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphRule::Gnr(x) => write!(f, "gnr:{x}"),
            GraphRule::Gpr(x) => write!(f, "gpr:{x}"),
            GraphRule::Gdr(x, y) => write!(f, "gdr:{x},{y}"),
        }
    }
}

pub fn apply_graph_rule(g: &Graph, rule: &GraphRule) -> Result<Graph> {
    let err = || Error::RuleInapplicable(rule.to_string());
    match rule {
        GraphRule::Gnr(x) => {
            let u = g.index_of(x)?;
            if g.row(u) != 0 {
                return Err(err());
            }
            induced_subgraph(g, g.full_set().without(u))
        }
        GraphRule::Gpr(x) => {
            let u = g.index_of(x)?;
            if !g.has_loop(u) {
                return Err(err());
            }
            contraction(g, VertexSet::singleton(u))
        }
        GraphRule::Gdr(x, y) => {
            let (u, v) = (g.index_of(x)?, g.index_of(y)?);
            if u == v || !g.entry(u, v) || g.has_loop(u) || g.has_loop(v) {
                return Err(err());
            }
            contraction(g, VertexSet::pair(u, v))
        }
    }
}

/// A complete contraction: gpr/gdr steps reaching a discrete graph, then gnr
/// steps removing what is left.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContractionStrategy {
    pub steps: Vec<GraphRule>,
    /// Vertices removed by gnr steps, aligned to the source graph.
    pub gnrdom: VertexSet,
}

impl ContractionStrategy {
    /// Replays the steps on `g`, returning the final graph.
    pub fn replay(&self, g: &Graph) -> Result<Graph> {
        self.steps
            .iter()
            .try_fold(g.clone(), |h, r| apply_graph_rule(&h, r))
    }
}

impl fmt::Display for ContractionStrategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let steps: Vec<String> = self.steps.iter().map(GraphRule::to_string).collect();
        write!(f, "{}", steps.join(" "))
    }
}

fn check_cap(g: &Graph) -> Result<()> {
    if g.n() > ORBIT_CAP {
        return Err(Error::OverCap {
            what: "contraction enumeration",
            cap: ORBIT_CAP,
            n: g.n(),
        });
    }
    Ok(())
}

fn elementary_rule(h: &Graph, e: VertexSet) -> GraphRule {
    let names = h.names_of(e);
    match &names[..] {
        [x] => GraphRule::Gpr(x.clone()),
        [x, y] => GraphRule::Gdr(x.clone(), y.clone()),
        _ => unreachable!("elementary pivots have one or two vertices"),
    }
}

/// Enumerates up to `limit` complete contractions of `g` in depth-first
/// order, branching over elementary contractions in canonical order.
pub fn complete_contractions(g: &Graph, limit: usize) -> Result<Vec<ContractionStrategy>> {
    check_cap(g)?;
    fn dfs(
        source: &Graph,
        current: &Graph,
        steps: &mut Vec<GraphRule>,
        out: &mut Vec<ContractionStrategy>,
        limit: usize,
    ) -> Result<()> {
        if out.len() >= limit {
            return Ok(());
        }
        let moves = elementary_pivots(current);
        if moves.is_empty() {
            let mut all = steps.clone();
            all.extend(current.labels().iter().map(|l| GraphRule::Gnr(l.clone())));
            out.push(ContractionStrategy {
                steps: all,
                gnrdom: source.set_of(current.labels())?,
            });
            return Ok(());
        }
        for e in moves {
            let next = contraction(current, e)?;
            steps.push(elementary_rule(current, e));
            dfs(source, &next, steps, out, limit)?;
            steps.pop();
            if out.len() >= limit {
                break;
            }
        }
        Ok(())
    }
    let mut out = Vec::new();
    if limit > 0 {
        dfs(g, g, &mut Vec::new(), &mut out, limit)?;
    }
    Ok(out)
}

/// `{ V \ X : X ∈ F_G }`: the gnr domains of all complete contractions,
/// sorted by bit pattern.
pub fn gnrdom_family(g: &Graph) -> Result<Vec<VertexSet>> {
    let mut out: Vec<VertexSet> = maximal_family(g)?
        .family()
        .iter()
        .map(|&x| g.full_set().difference(x))
        .collect();
    out.sort();
    Ok(out)
}

/// Every gnr domain reachable from `g`, found by exploring elementary
/// contractions (memoised per graph) without consulting `F_G`. Domains are
/// given as sorted label lists.
pub fn reachable_gnrdoms(g: &Graph) -> Result<BTreeSet<Vec<String>>> {
    check_cap(g)?;
    type Key = (Vec<String>, Vec<u64>);
    fn walk(
        h: &Graph,
        memo: &mut HashMap<Key, BTreeSet<Vec<String>>>,
    ) -> Result<BTreeSet<Vec<String>>> {
        let key = (h.labels().to_vec(), h.rows().to_vec());
        if let Some(found) = memo.get(&key) {
            return Ok(found.clone());
        }
        let moves = elementary_pivots(h);
        let mut out = BTreeSet::new();
        if moves.is_empty() {
            let mut labels = h.labels().to_vec();
            labels.sort();
            out.insert(labels);
        }
        for e in moves {
            out.extend(walk(&contraction(h, e)?, memo)?);
        }
        memo.insert(key, out.clone());
        Ok(out)
    }
    walk(g, &mut HashMap::new())
}

/// Checks that all graphs in the dual orbit of `g` admit the same family of
/// gnr domains over their complete contractions.
pub fn verify_theorem_ga_gnr(g: &Graph) -> Result<bool> {
    let orbit = dual_orbit(g)?;
    let reference = reachable_gnrdoms(g)?;
    for node in orbit.nodes() {
        if reachable_gnrdoms(node)? != reference {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Outcome of [`verify_simulation`].
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SimulationReport {
    pub checks: usize,
    pub failures: Vec<String>,
}

impl SimulationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Cross-checks every string rule applicable to `u` against the matching
/// graph rule on the overlap graph.
///
/// spr/gpr and sdr/gdr must agree on applicability and on the result. For
/// snr only the forward direction is checked: gnr may apply to an isolated
/// vertex whose two occurrences are not adjacent in `u`.
pub fn verify_simulation(u: &LegalString) -> SimulationReport {
    let mut report = SimulationReport::default();
    let gu = overlap_graph(u);
    let letters = u.letters();

    let compare = |report: &mut SimulationReport,
                   label: String,
                   strings: Vec<LegalString>,
                   graph: Result<Graph>,
                   both_ways: bool| {
        report.checks += 1;
        match (&graph, strings.is_empty()) {
            (Ok(_), true) if both_ways => {
                report.failures.push(format!(
                    "{label}: graph rule applies, string rule does not on `{u}`"
                ));
            }
            (Err(_), false) => {
                report.failures.push(format!(
                    "{label}: string rule applies, graph rule does not on `{u}`"
                ));
            }
            _ => {}
        }
        if let Ok(h) = graph {
            for s in strings {
                report.checks += 1;
                if overlap_graph(&s) != h {
                    report.failures.push(format!(
                        "{label}: overlap graph of `{s}` differs from graph rule result"
                    ));
                }
            }
        }
    };

    for a in &letters {
        let plain = Symbol::plain(a.clone());
        let signs = [plain.clone(), plain.bar()];

        let spr: Vec<LegalString> = signs.iter().filter_map(|x| apply_spr(u, x).ok()).collect();
        let gpr = apply_graph_rule(&gu, &GraphRule::Gpr(a.clone()));
        compare(&mut report, format!("spr/gpr {a}"), spr, gpr, true);

        let snr: Vec<LegalString> = signs.iter().filter_map(|x| apply_snr(u, x).ok()).collect();
        let gnr = apply_graph_rule(&gu, &GraphRule::Gnr(a.clone()));
        compare(&mut report, format!("snr/gnr {a}"), snr, gnr, false);
    }

    for (i, a) in letters.iter().enumerate() {
        for b in &letters[i + 1..] {
            let mut sdr = Vec::new();
            for (first, second) in [(a, b), (b, a)] {
                for bx in [false, true] {
                    for by in [false, true] {
                        let x = Symbol::new(first.clone(), bx);
                        let y = Symbol::new(second.clone(), by);
                        if let Ok(s) = apply_sdr(u, &x, &y) {
                            sdr.push(s);
                        }
                    }
                }
            }
            let gdr = apply_graph_rule(&gu, &GraphRule::Gdr(a.clone(), b.clone()));
            compare(&mut report, format!("sdr/gdr {a},{b}"), sdr, gdr, true);
        }
    }
    report
}

/// A uniformly shuffled legal string over at most `max_letters` letters
/// `a, b, ..`, each occurrence barred with probability 1/2.
pub fn random_legal_string<R: Rng + ?Sized>(rng: &mut R, max_letters: usize) -> LegalString {
    let k = rng.gen_range(0..=max_letters);
    let mut symbols: Vec<Symbol> = (0..k)
        .flat_map(|i| {
            let letter = ((b'a' + (i % 26) as u8) as char).to_string();
            let letter = if i < 26 {
                letter
            } else {
                format!("{letter}{}", i / 26)
            };
            [letter.clone(), letter]
        })
        .map(|l| Symbol::new(l, false))
        .collect();
    symbols.shuffle(rng);
    for s in symbols.iter_mut() {
        s.barred = rng.gen_bool(0.5);
    }
    LegalString { symbols }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orbit::maximal_contraction_results;
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn u7() -> LegalString {
        parse_legal_string("q p s q' r p s r").unwrap()
    }

    fn g() -> Graph {
        Graph::from_edges(
            &["p", "q", "r", "s"],
            &[("p", "q"), ("p", "r"), ("p", "s"), ("q", "s"), ("r", "s")],
            &["q"],
        )
        .unwrap()
    }

    fn sym(t: &str) -> Symbol {
        Symbol::parse(t).unwrap()
    }

    #[test]
    fn parsing() {
        let u = u7();
        assert_eq!(u.len(), 8);
        assert_eq!(u.symbols()[3], Symbol::new("q", true));
        assert_eq!(u.to_string(), "q p s q' r p s r");
        assert!(parse_legal_string("").unwrap().is_empty());
        let actin = parse_legal_string("3 4 4 5 6 7 5 6 7 8 9 3' 2' 2 8 9").unwrap();
        assert_eq!(actin.letters().len(), 8);
        assert_eq!(parse_legal_string("qpsq'rpsr").unwrap(), u);
        assert_eq!(
            parse_legal_string("q p s r p s r").unwrap_err(),
            Error::IllegalString("q".into())
        );
        assert!(parse_legal_string("a a a").is_err());
        assert!(parse_legal_string("' '").is_err());
    }

    #[test]
    fn snr_examples() {
        assert!(apply_snr(&parse_legal_string("s' s'").unwrap(), &sym("s'"))
            .unwrap()
            .is_empty());
        let u = parse_legal_string("a a b b").unwrap();
        assert_eq!(apply_snr(&u, &sym("a")).unwrap().to_string(), "b b");
        assert_eq!(
            apply_snr(&u7(), &sym("q")).unwrap_err(),
            Error::RuleInapplicable("snr:q".into())
        );
        assert!(apply_snr(&u, &sym("a'")).is_err());
    }

    #[test]
    fn spr_examples() {
        let s1 = apply_spr(&u7(), &sym("q")).unwrap();
        assert_eq!(s1.to_string(), "s' p' r p s r");
        let s2 = apply_spr(&s1, &sym("p'")).unwrap();
        let s3 = apply_spr(&s2, &sym("r'")).unwrap();
        assert_eq!(s3.to_string(), "s' s'");
        assert!(apply_snr(&s3, &sym("s'")).unwrap().is_empty());
        assert!(apply_spr(&parse_legal_string("x x'").unwrap(), &sym("x"))
            .unwrap()
            .is_empty());
        assert!(apply_spr(&u7(), &sym("q'")).is_err());
        assert!(apply_spr(&u7(), &sym("p")).is_err());
    }

    /// Independent sdr oracle: finds the pattern by brute-force search over
    /// position quadruples and splices with explicit loops.
    #[allow(clippy::needless_range_loop)]
    fn sdr_oracle(u: &LegalString, x: &Symbol, y: &Symbol) -> Option<Vec<Symbol>> {
        let s = u.symbols();
        let n = s.len();
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    for d in c + 1..n {
                        if s[a] == *x
                            && s[b] == *y
                            && s[c] == *x
                            && s[d] == *y
                            && x.letter != y.letter
                        {
                            let mut out = Vec::new();
                            for k in 0..a {
                                out.push(s[k].clone());
                            }
                            for k in c + 1..d {
                                out.push(s[k].clone());
                            }
                            for k in b + 1..c {
                                out.push(s[k].clone());
                            }
                            for k in a + 1..b {
                                out.push(s[k].clone());
                            }
                            for k in d + 1..n {
                                out.push(s[k].clone());
                            }
                            return Some(out);
                        }
                    }
                }
            }
        }
        None
    }

    #[test]
    fn sdr_examples() {
        let u = parse_legal_string("x y x y").unwrap();
        assert!(apply_sdr(&u, &sym("x"), &sym("y")).unwrap().is_empty());
        assert!(apply_sdr(&u, &sym("y"), &sym("x")).is_err());
        assert!(apply_sdr(&u, &sym("x"), &sym("x")).is_err());

        let padded = parse_legal_string("a x b y c x d y e a b c d e").unwrap();
        let got = apply_sdr(&padded, &sym("x"), &sym("y")).unwrap();
        let want = sdr_oracle(&padded, &sym("x"), &sym("y")).unwrap();
        assert_eq!(got.symbols(), &want[..]);
        assert_eq!(got.to_string(), "a d c b e a b c d e");

        let u = u7();
        for x in ["p", "q", "r", "s", "p'", "q'", "r'", "s'"] {
            for y in ["p", "q", "r", "s", "p'", "q'", "r'", "s'"] {
                let got = apply_sdr(&u, &sym(x), &sym(y))
                    .ok()
                    .map(|s| s.symbols().to_vec());
                assert_eq!(got, sdr_oracle(&u, &sym(x), &sym(y)), "sdr {x},{y}");
            }
        }
        // p s p s is the only interleaved pair of loopless letters in u
        assert_eq!(
            apply_sdr(&u, &sym("p"), &sym("s")).unwrap().to_string(),
            "q q' r r"
        );
    }

    #[test]
    fn intervals() {
        let u = u7();
        let q = y_interval(&u, "q").unwrap();
        assert_eq!((q.start, q.end), (0, 2));
        let xx = parse_legal_string("x x").unwrap();
        let i = y_interval(&xx, "x").unwrap();
        assert_eq!((i.start, i.end), (0, 1));
        let bb = parse_legal_string("x' x'").unwrap();
        let i = y_interval(&bb, "x").unwrap();
        assert!(i.is_empty());
        assert!(i.symbols(&bb).is_empty());
        assert_eq!(
            y_interval(&u, "z").unwrap_err(),
            Error::UnknownLetter("z".into())
        );
    }

    #[test]
    fn overlap_examples() {
        assert_eq!(overlap_graph(&u7()), g());
        assert_eq!(overlap_graph(&LegalString::empty()), Graph::empty());
        let xyxy = parse_legal_string("x y x y").unwrap();
        assert_eq!(
            overlap_graph(&xyxy),
            Graph::from_edges(&["x", "y"], &[("x", "y")], &[]).unwrap()
        );
    }

    #[test]
    fn graph_rule_examples() {
        let g = g();
        let after_q = apply_graph_rule(&g, &GraphRule::Gpr("q".into())).unwrap();
        assert_eq!(
            after_q,
            Graph::from_edges(&["p", "r", "s"], &[("p", "r"), ("r", "s")], &["p", "s"]).unwrap()
        );
        let single = Graph::new(["x"]).unwrap();
        assert_eq!(
            apply_graph_rule(&single, &GraphRule::Gnr("x".into())).unwrap(),
            Graph::empty()
        );
        let qr = apply_graph_rule(&g, &GraphRule::Gdr("p".into(), "s".into())).unwrap();
        assert_eq!(qr, Graph::from_edges(&["q", "r"], &[], &["q"]).unwrap());
        assert_eq!(
            apply_graph_rule(&g, &GraphRule::Gnr("q".into())).unwrap_err(),
            Error::RuleInapplicable("gnr:q".into())
        );
        assert!(apply_graph_rule(&g, &GraphRule::Gpr("p".into())).is_err());
        assert!(apply_graph_rule(&g, &GraphRule::Gdr("p".into(), "q".into())).is_err());
    }

    #[test]
    fn complete_contractions_of_example() {
        let g = g();
        let all = complete_contractions(&g, usize::MAX).unwrap();
        assert!(!all.is_empty());
        let mut doms: Vec<VertexSet> = all.iter().map(|s| s.gnrdom).collect();
        doms.sort();
        doms.dedup();
        assert_eq!(doms, gnrdom_family(&g).unwrap());
        let names: Vec<Vec<String>> = doms.iter().map(|&d| g.names_of(d)).collect();
        assert_eq!(names, vec![vec!["p"], vec!["r"], vec!["s"]]);
        for s in &all {
            assert!(s.replay(&g).unwrap().is_empty());
            let gnr: Vec<&GraphRule> = s
                .steps
                .iter()
                .filter(|r| matches!(r, GraphRule::Gnr(_)))
                .collect();
            assert_eq!(gnr.len(), s.gnrdom.len());
        }
        // gpr q, gpr p, gpr r mirrors spr_q, spr_p', spr_r' and ends at s
        let mirrored = vec![
            GraphRule::Gpr("q".into()),
            GraphRule::Gpr("p".into()),
            GraphRule::Gpr("r".into()),
            GraphRule::Gnr("s".into()),
        ];
        let hit = all
            .iter()
            .find(|s| s.steps == mirrored)
            .expect("mirrored strategy");
        assert_eq!(g.names_of(hit.gnrdom), vec!["s"]);

        let empty = complete_contractions(&Graph::empty(), 10).unwrap();
        assert_eq!(
            empty,
            vec![ContractionStrategy {
                steps: vec![],
                gnrdom: VertexSet::EMPTY
            }]
        );
        assert_eq!(complete_contractions(&g, 2).unwrap().len(), 2);
    }

    #[test]
    fn string_reduction_tracks_graph_contraction() {
        let u = u7();
        let mut s = u.clone();
        let mut h = overlap_graph(&u);
        for (x, letter) in [("q", "q"), ("p'", "p"), ("r'", "r")] {
            s = apply_spr(&s, &sym(x)).unwrap();
            h = apply_graph_rule(&h, &GraphRule::Gpr(letter.into())).unwrap();
            assert_eq!(overlap_graph(&s), h);
        }
        assert_eq!(h, Graph::new(["s"]).unwrap());
        assert!(maximal_contraction_results(&g()).unwrap().contains(&h));
    }

    #[test]
    fn simulation_examples() {
        assert!(verify_simulation(&u7()).passed());
        assert!(verify_simulation(&LegalString::empty()).passed());
        let xyyx = parse_legal_string("x y y x").unwrap();
        let report = verify_simulation(&xyyx);
        assert!(report.passed(), "{:?}", report.failures);
        let gu = overlap_graph(&xyyx);
        assert!(apply_graph_rule(&gu, &GraphRule::Gnr("x".into())).is_ok());
        assert!(apply_snr(&xyyx, &sym("x")).is_err());
        assert!(apply_snr(&xyyx, &sym("x'")).is_err());
    }

    #[test]
    fn gnrdom_theorem_on_example() {
        let g = g();
        assert!(verify_theorem_ga_gnr(&g).unwrap());
        let doms: Vec<Vec<String>> = reachable_gnrdoms(&g).unwrap().into_iter().collect();
        assert_eq!(doms, vec![vec!["p"], vec!["r"], vec!["s"]]);
        assert!(verify_theorem_ga_gnr(&Graph::new(["a"]).unwrap()).unwrap());
        assert!(verify_theorem_ga_gnr(&Graph::from_edges(&["a"], &[], &["a"]).unwrap()).unwrap());
    }

    #[test]
    fn random_strings_are_legal_and_reproducible() {
        let mut a = ChaCha8Rng::seed_from_u64(7);
        let mut b = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let s = random_legal_string(&mut a, 6);
            assert_eq!(s, random_legal_string(&mut b, 6));
            assert!(LegalString::new(s.symbols().to_vec()).is_ok());
            assert!(s.letters().len() <= 6);
        }
    }

    fn legal_string_strategy() -> impl Strategy<Value = LegalString> {
        any::<u64>().prop_map(|seed| random_legal_string(&mut ChaCha8Rng::seed_from_u64(seed), 6))
    }

    proptest! {
        #[test]
        fn overlap_relation_is_symmetric(u in legal_string_strategy()) {
            let letters = u.letters();
            for x in &letters {
                for y in &letters {
                    prop_assert_eq!(
                        occurs_once_in_interval(&u, x, y).unwrap(),
                        occurs_once_in_interval(&u, y, x).unwrap()
                    );
                }
            }
        }

        #[test]
        fn loop_iff_both_signs(u in legal_string_strategy()) {
            let g = overlap_graph(&u);
            for (i, x) in g.labels().iter().enumerate() {
                let both = u.symbols().iter().any(|s| s.letter == *x && s.barred)
                    && u.symbols().iter().any(|s| s.letter == *x && !s.barred);
                prop_assert_eq!(g.has_loop(i), both);
            }
        }

        #[test]
        fn rules_shrink_the_letter_set(u in legal_string_strategy()) {
            for a in u.letters() {
                for x in [Symbol::plain(a.clone()), Symbol::new(a.clone(), true)] {
                    for s in [apply_snr(&u, &x), apply_spr(&u, &x)].into_iter().flatten() {
                        prop_assert_eq!(s.len() + 2, u.len());
                        prop_assert!(LegalString::new(s.symbols().to_vec()).is_ok());
                    }
                }
            }
        }

        #[test]
        fn simulation_holds(u in legal_string_strategy()) {
            let report = verify_simulation(&u);
            prop_assert!(report.passed(), "{:?}", report.failures);
        }
    }
}
