//! Intersection graphs and an exact bit-parallel maximum-clique solver.
//!
//! The solver is a colour-bounded branch and bound over bitset candidate
//! sets. It runs in two passes: the first finds the clique number, the
//! second collects every clique of exactly that size.

use std::fmt::Write as _;
use std::time::Duration;

use serde::Serialize;

use crate::domains::{
    double_factorial_odd, raw_intersection, Domain, Element, Kind, PerfectMatching, Permutation, Space,
};
use crate::error::{capacity, usage, Result};

/// Largest `n` accepted by [`build_graph`].
pub const MAX_GRAPH_N: usize = 7;

/// Fixed-width bitset over `0..len`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BitSet {
    words: Vec<u64>,
}

impl BitSet {
    pub fn new(len: usize) -> Self {
        BitSet { words: vec![0; len.div_ceil(64)] }
    }

    pub fn full(len: usize) -> Self {
        let mut s = BitSet::new(len);
        for v in 0..len {
            s.insert(v);
        }
        s
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        self.words[v >> 6] |= 1 << (v & 63);
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        self.words[v >> 6] &= !(1 << (v & 63));
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        self.words[v >> 6] >> (v & 63) & 1 == 1
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    #[inline]
    fn first(&self) -> Option<usize> {
        self.words.iter().position(|&w| w != 0).map(|k| k * 64 + self.words[k].trailing_zeros() as usize)
    }

    fn intersect_into(&self, other: &BitSet, out: &mut BitSet) {
        for ((o, a), b) in out.words.iter_mut().zip(&self.words).zip(&other.words) {
            *o = a & b;
        }
    }

    #[inline]
    fn subtract(&mut self, other: &BitSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(k, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(k * 64 + b)
            })
        })
    }
}

/// Simple undirected graph with bitset adjacency rows.
#[derive(Clone, Debug)]
pub struct BitGraph {
    adj: Vec<BitSet>,
}

impl BitGraph {
    pub fn new(order: usize) -> Self {
        BitGraph { adj: vec![BitSet::new(order); order] }
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        if u != v {
            self.adj[u].insert(v);
            self.adj[v].insert(u);
        }
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count()
    }

    pub fn neighbours(&self, v: usize) -> &BitSet {
        &self.adj[v]
    }

    pub fn edge_count(&self) -> usize {
        (0..self.order()).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    pub fn is_clique(&self, vertices: &[usize]) -> bool {
        vertices.iter().enumerate().all(|(k, &u)| vertices[k + 1..].iter().all(|&v| self.has_edge(u, v)))
    }

    /// Same graph with vertex `order[k]` relabelled as `k`.
    fn permuted(&self, order: &[usize]) -> BitGraph {
        let mut pos = vec![0; order.len()];
        for (k, &v) in order.iter().enumerate() {
            pos[v] = k;
        }
        let mut g = BitGraph::new(order.len());
        for (k, &v) in order.iter().enumerate() {
            for w in self.adj[v].iter() {
                g.adj[k].insert(pos[w]);
            }
        }
        g
    }
}

/// Outcome of a maximum-clique enumeration.
#[derive(Clone, Debug, Serialize)]
pub struct CliqueReport {
    pub clique_number: usize,
    pub maximum_clique_count: u64,
    /// Vertex sets, each sorted, listed in ascending order; `None` when the
    /// number of maximum cliques exceeded the storage cap.
    pub cliques: Option<Vec<Vec<usize>>>,
    #[serde(serialize_with = "serialize_secs")]
    pub elapsed: Duration,
}

fn serialize_secs<S: serde::Serializer>(d: &Duration, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64())
}

/// Search options.
#[derive(Clone, Copy, Debug)]
pub struct CliqueOptions {
    /// Maximum number of cliques kept in the report; the count is always exact.
    pub max_stored: usize,
}

impl Default for CliqueOptions {
    fn default() -> Self {
        CliqueOptions { max_stored: 100_000 }
    }
}

struct Search<'a> {
    g: &'a BitGraph,
    best: usize,
    /// In enumeration mode: exact target size; otherwise `None`.
    target: Option<usize>,
    found: u64,
    stored: Vec<Vec<usize>>,
    max_stored: usize,
    clique: Vec<usize>,
    best_clique: Vec<usize>,
}

impl Search<'_> {
    /// Greedy sequential colouring of `p`. Returns the vertices whose colour
    /// is at least `kmin`, in colour order, with their colours.
    fn colour(&self, p: &BitSet, kmin: usize, order: &mut Vec<(usize, usize)>) {
        order.clear();
        let mut uncoloured = p.clone();
        let mut q = p.clone();
        let mut k = 0;
        while !uncoloured.is_empty() {
            k += 1;
            q.words.copy_from_slice(&uncoloured.words);
            while let Some(v) = q.first() {
                uncoloured.remove(v);
                q.remove(v);
                q.subtract(&self.g.adj[v]);
                if k >= kmin {
                    order.push((v, k));
                }
            }
        }
    }

    fn expand(&mut self, mut p: BitSet) {
        let size = self.clique.len();
        let kmin = match self.target {
            Some(t) => t.saturating_sub(size).max(1),
            None => (self.best + 1).saturating_sub(size).max(1),
        };
        let mut order = Vec::new();
        self.colour(&p, kmin, &mut order);
        let mut next = BitSet::new(self.g.order());
        for &(v, k) in order.iter().rev() {
            let bound = self.clique.len() + k;
            match self.target {
                Some(t) if bound < t => return,
                None if bound <= self.best => return,
                _ => {}
            }
            self.clique.push(v);
            p.intersect_into(&self.g.adj[v], &mut next);
            if next.is_empty() {
                self.record();
            } else {
                self.expand(next.clone());
            }
            self.clique.pop();
            p.remove(v);
        }
    }

    fn record(&mut self) {
        let size = self.clique.len();
        match self.target {
            Some(t) if size == t => {
                self.found += 1;
                if self.stored.len() < self.max_stored {
                    self.stored.push(self.clique.clone());
                }
            }
            None if size > self.best => {
                self.best = size;
                self.best_clique = self.clique.clone();
            }
            _ => {}
        }
    }
}

/// Initial order: descending degree, ties by index.
fn search_order(g: &BitGraph) -> Vec<usize> {
    let mut order: Vec<usize> = (0..g.order()).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    order
}

/// The clique number of `g` together with one maximum clique.
pub fn max_clique(g: &BitGraph) -> (usize, Vec<usize>) {
    if g.order() == 0 {
        return (0, Vec::new());
    }
    let order = search_order(g);
    let h = g.permuted(&order);
    let mut s = Search {
        g: &h,
        best: 0,
        target: None,
        found: 0,
        stored: Vec::new(),
        max_stored: 0,
        clique: Vec::new(),
        best_clique: Vec::new(),
    };
    s.expand(BitSet::full(h.order()));
    let mut clique: Vec<usize> = s.best_clique.iter().map(|&v| order[v]).collect();
    clique.sort_unstable();
    (s.best, clique)
}

pub fn max_clique_size(g: &BitGraph) -> usize {
    max_clique(g).0
}

/// Every clique of size exactly `target` (all maximal by construction when
/// `target` is the clique number).
pub fn cliques_of_size(g: &BitGraph, target: usize, opts: CliqueOptions) -> (u64, Option<Vec<Vec<usize>>>) {
    if target == 0 {
        return (1, Some(vec![Vec::new()]));
    }
    let order = search_order(g);
    let h = g.permuted(&order);
    let mut s = Search {
        g: &h,
        best: 0,
        target: Some(target),
        found: 0,
        stored: Vec::new(),
        max_stored: opts.max_stored,
        clique: Vec::new(),
        best_clique: Vec::new(),
    };
    s.expand(BitSet::full(h.order()));
    let complete = s.found as usize <= opts.max_stored;
    let mut cliques: Vec<Vec<usize>> = s
        .stored
        .into_iter()
        .map(|c| {
            let mut c: Vec<usize> = c.into_iter().map(|v| order[v]).collect();
            c.sort_unstable();
            c
        })
        .collect();
    cliques.sort();
    cliques.dedup();
    (s.found, complete.then_some(cliques))
}

pub fn enumerate_maximum_cliques(g: &BitGraph, opts: CliqueOptions) -> CliqueReport {
    let start = Stopwatch::start();
    let omega = max_clique_size(g);
    let (count, cliques) = cliques_of_size(g, omega, opts);
    CliqueReport { clique_number: omega, maximum_clique_count: count, cliques, elapsed: start.elapsed() }
}

/// `Instant` panics on bare wasm, where timings read as zero.
struct Stopwatch(#[cfg(not(target_arch = "wasm32"))] std::time::Instant);

impl Stopwatch {
    fn start() -> Self {
        #[cfg(not(target_arch = "wasm32"))]
        return Stopwatch(std::time::Instant::now());
        #[cfg(target_arch = "wasm32")]
        Stopwatch()
    }

    fn elapsed(&self) -> Duration {
        #[cfg(not(target_arch = "wasm32"))]
        return self.0.elapsed();
        #[cfg(target_arch = "wasm32")]
        Duration::ZERO
    }
}

/// Graph whose cliques are the `t`-intersecting families through `anchor`.
#[derive(Clone, Debug)]
pub struct IntersectionGraph {
    domain: Domain,
    t: usize,
    anchor: Element,
    vertices: Vec<Element>,
    graph: BitGraph,
}

/// The anchor used when none is given: the identity, or `{i, n+i}`.
pub fn default_anchor(domain: Domain) -> Element {
    match domain.kind() {
        Kind::Sym => Element::Sym(Permutation::identity(domain.n())),
        Kind::Pm => Element::Pm(PerfectMatching::transversal(domain.n())),
    }
}

pub fn build_graph(kind: Kind, n: usize, t: usize, anchor: Option<Element>) -> Result<IntersectionGraph> {
    if t == 0 {
        return usage("intersection threshold t must be at least 1");
    }
    if n > MAX_GRAPH_N {
        return capacity(format!("intersection graphs are limited to n <= {MAX_GRAPH_N}"));
    }
    let domain = Domain::new(kind, n)?;
    let anchor = anchor.unwrap_or_else(|| default_anchor(domain));
    if !domain.contains(&anchor) {
        return usage(format!("anchor {anchor} is not in {domain}"));
    }
    let space = Space::of(domain)?;
    let vertices: Vec<Element> =
        space.elements().iter().filter(|x| raw_intersection(kind, x.map(), anchor.map()) >= t).cloned().collect();
    let mut graph = BitGraph::new(vertices.len());
    for (u, a) in vertices.iter().enumerate() {
        for (v, b) in vertices.iter().enumerate().skip(u + 1) {
            let k = raw_intersection(kind, a.map(), b.map());
            if t <= k && k < n {
                graph.add_edge(u, v);
            }
        }
    }
    Ok(IntersectionGraph { domain, t, anchor, vertices, graph })
}

impl IntersectionGraph {
    pub fn domain(&self) -> Domain {
        self.domain
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn anchor(&self) -> &Element {
        &self.anchor
    }

    pub fn vertices(&self) -> &[Element] {
        &self.vertices
    }

    pub fn graph(&self) -> &BitGraph {
        &self.graph
    }

    pub fn members(&self, clique: &[usize]) -> Vec<Element> {
        clique.iter().map(|&v| self.vertices[v].clone()).collect()
    }

    /// DIMACS edge list with a header comment naming the instance.
    pub fn to_dimacs(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "c intersection graph kind={} n={} t={} anchor={}",
            self.domain.kind(),
            self.domain.n(),
            self.t,
            self.anchor
        );
        let _ = writeln!(out, "p edge {} {}", self.graph.order(), self.graph.edge_count());
        for u in 0..self.graph.order() {
            for v in self.graph.neighbours(u).iter().filter(|&v| v > u) {
                let _ = writeln!(out, "e {} {}", u + 1, v + 1);
            }
        }
        out
    }
}

/// Result of checking that maximum families through the anchor are 2-cosets.
#[derive(Clone, Debug, Serialize)]
pub struct UniquenessReport {
    pub kind: Kind,
    pub n: usize,
    pub vertices: usize,
    pub edges: usize,
    pub expected_clique_number: u64,
    pub expected_count: u64,
    pub report: CliqueReport,
    pub passed: bool,
    pub failure: Option<String>,
}

/// `(n-2)!` or `(2n-5)!!`.
pub fn expected_clique_number(kind: Kind, n: usize) -> u64 {
    match kind {
        Kind::Sym => (1..=n.saturating_sub(2) as u64).product(),
        Kind::Pm => double_factorial_odd(n.saturating_sub(2)).unwrap_or(0),
    }
}

fn binomial2(n: usize) -> u64 {
    (n * n.saturating_sub(1) / 2) as u64
}

/// Vertex sets of the 2-cosets through the anchor, deduplicated and sorted.
fn anchor_cosets(g: &IntersectionGraph) -> Vec<Vec<usize>> {
    let pairs = g.anchor.pairs();
    let mut out = Vec::new();
    for a in 0..pairs.len() {
        for b in a + 1..pairs.len() {
            let set: Vec<usize> = (0..g.vertices.len())
                .filter(|&v| g.vertices[v].has_pair(pairs[a]) && g.vertices[v].has_pair(pairs[b]))
                .collect();
            out.push(set);
        }
    }
    out.sort();
    out.dedup();
    out
}

/// Checks clique number, maximum-clique count and that each maximum clique is
/// exactly a 2-coset through the anchor.
pub fn verify_uniqueness(kind: Kind, n: usize) -> Result<UniquenessReport> {
    if n < 2 {
        return usage(format!("verification needs n >= 2, got {n}"));
    }
    if n > MAX_GRAPH_N {
        return capacity(format!("verification covers n <= {MAX_GRAPH_N}, got {n}"));
    }
    let g = build_graph(kind, n, 2, None)?;
    let report = enumerate_maximum_cliques(g.graph(), CliqueOptions::default());
    let expected_clique_number = expected_clique_number(kind, n);
    let cosets = anchor_cosets(&g);
    // for n <= 3 all 2-cosets through the anchor collapse to the anchor alone
    let expected_count = if n >= 4 { binomial2(n) } else { cosets.len() as u64 };

    let mut failure = None;
    if report.clique_number as u64 != expected_clique_number {
        failure =
            Some(format!("clique number {} differs from expected {expected_clique_number}", report.clique_number));
    } else if report.maximum_clique_count != expected_count {
        failure = Some(format!("found {} maximum cliques, expected {expected_count}", report.maximum_clique_count));
    } else if cosets.len() as u64 != expected_count {
        failure = Some(format!("{} distinct anchor 2-cosets, expected {expected_count}", cosets.len()));
    } else {
        match &report.cliques {
            None => failure = Some("maximum cliques were not stored".into()),
            Some(cliques) => {
                if let Some(c) = cliques.iter().find(|c| cosets.binary_search(c).is_err()) {
                    let members: Vec<String> = g.members(c).iter().map(|x| x.to_string()).collect();
                    failure = Some(format!("maximum clique is not a 2-coset: [{}]", members.join(", ")));
                }
            }
        }
    }
    Ok(UniquenessReport {
        kind,
        n,
        vertices: g.graph().order(),
        edges: g.graph().edge_count(),
        expected_clique_number,
        expected_count,
        report,
        passed: failure.is_none(),
        failure,
    })
}
