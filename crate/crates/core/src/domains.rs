//! The two ground sets: permutations of `[n]` and perfect matchings of `K_{2n}`.
//!
//! Points are 1-indexed throughout; ranks are 0-indexed positions in the
//! lexicographic order of the image (resp. partner) array.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use serde::{Deserialize, Serialize};

use crate::cert::Certificate;
use crate::error::{capacity, usage, Error, Result};

/// Domains larger than this are never materialised.
pub const ENUMERATION_LIMIT: u64 = 1 << 24;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Sym,
    Pm,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Kind::Sym => f.write_str("sym"),
            Kind::Pm => f.write_str("pm"),
        }
    }
}

impl std::str::FromStr for Kind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "sym" => Ok(Kind::Sym),
            "pm" => Ok(Kind::Pm),
            other => usage(format!("unknown domain kind {other:?} (expected sym or pm)")),
        }
    }
}

/// A variable `x_ij`, or a certificate entry.
///
/// For permutations this is the ordered pair `(i, α(i))`; for matchings it is
/// an edge, always stored as `(min, max)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Pair(pub u8, pub u8);

impl Pair {
    pub fn edge(a: u8, b: u8) -> Pair {
        if a <= b {
            Pair(a, b)
        } else {
            Pair(b, a)
        }
    }

    /// Whether the two pairs can hold simultaneously.
    pub fn compatible(self, other: Pair, kind: Kind) -> bool {
        if self == other {
            return true;
        }
        match kind {
            Kind::Sym => self.0 != other.0 && self.1 != other.1,
            Kind::Pm => self.0 != other.0 && self.0 != other.1 && self.1 != other.0 && self.1 != other.1,
        }
    }
}

impl fmt::Display for Pair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.0, self.1)
    }
}

/// The kind, size parameter and cardinality of a ground set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Domain {
    kind: Kind,
    n: usize,
    size: u64,
}

fn factorial(n: usize) -> Option<u64> {
    (1..=n as u64).try_fold(1u64, |acc, k| acc.checked_mul(k))
}

/// `(2n-1)!!`, the number of perfect matchings of `K_{2n}`.
pub fn double_factorial_odd(n: usize) -> Option<u64> {
    (1..=n as u64).try_fold(1u64, |acc, k| acc.checked_mul(2 * k - 1))
}

impl Domain {
    pub fn new(kind: Kind, n: usize) -> Result<Self> {
        if n == 0 {
            return usage("domain parameter n must be at least 1");
        }
        let points = match kind {
            Kind::Sym => n,
            Kind::Pm => 2 * n,
        };
        if points > u8::MAX as usize {
            return capacity(format!("{points} points do not fit the point type"));
        }
        let size = match kind {
            Kind::Sym => factorial(n),
            Kind::Pm => double_factorial_odd(n),
        };
        match size {
            Some(size) => Ok(Domain { kind, n, size }),
            None => capacity(format!("{kind} domain with n = {n} overflows a 64-bit count")),
        }
    }

    pub fn sym(n: usize) -> Result<Self> {
        Domain::new(Kind::Sym, n)
    }

    pub fn pm(n: usize) -> Result<Self> {
        Domain::new(Kind::Pm, n)
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> u64 {
        self.size
    }

    /// Number of ground points: `n` for permutations, `2n` for matchings.
    pub fn points(&self) -> usize {
        match self.kind {
            Kind::Sym => self.n,
            Kind::Pm => 2 * self.n,
        }
    }

    /// The domain one size down, where restrictions to a coset live.
    pub fn reduced(&self) -> Result<Domain> {
        if self.n < 2 {
            return usage("cannot reduce a domain with n = 1");
        }
        Domain::new(self.kind, self.n - 1)
    }

    pub fn var_count(&self) -> usize {
        let p = self.points();
        match self.kind {
            Kind::Sym => p * p,
            Kind::Pm => p * (p - 1) / 2,
        }
    }

    /// Dense index of a variable; `None` when the pair is not a variable of this domain.
    pub fn var_index(&self, pair: Pair) -> Option<usize> {
        let p = self.points();
        let (a, b) = (pair.0 as usize, pair.1 as usize);
        if a == 0 || b == 0 || a > p || b > p {
            return None;
        }
        match self.kind {
            Kind::Sym => Some((a - 1) * p + (b - 1)),
            Kind::Pm => {
                if a >= b {
                    return None;
                }
                // pairs (1,2),(1,3),...,(1,p),(2,3),...
                let (a, b) = (a - 1, b - 1);
                Some(a * (2 * p - a - 1) / 2 + (b - a - 1))
            }
        }
    }

    pub fn var_pair(&self, index: usize) -> Pair {
        let p = self.points();
        match self.kind {
            Kind::Sym => Pair((index / p + 1) as u8, (index % p + 1) as u8),
            Kind::Pm => {
                let mut a = 0;
                let mut rest = index;
                while rest >= p - a - 1 {
                    rest -= p - a - 1;
                    a += 1;
                }
                Pair((a + 1) as u8, (a + rest + 2) as u8)
            }
        }
    }

    pub fn is_valid_pair(&self, pair: Pair) -> bool {
        match self.kind {
            Kind::Sym => self.var_index(pair).is_some(),
            Kind::Pm => self.var_index(Pair::edge(pair.0, pair.1)).is_some(),
        }
    }

    pub fn contains(&self, x: &Element) -> bool {
        x.kind() == self.kind && x.n() == self.n
    }

    fn check(&self, x: &Element) -> Result<()> {
        if self.contains(x) {
            Ok(())
        } else {
            usage(format!("element {x} is not in {self}"))
        }
    }

    /// Lexicographic rank of `x`.
    pub fn rank(&self, x: &Element) -> Result<u64> {
        self.check(x)?;
        let map = x.map();
        Ok(match self.kind {
            Kind::Sym => {
                let n = self.n;
                let mut used = vec![false; n + 1];
                let mut rank = 0u64;
                for (pos, &v) in map.iter().enumerate() {
                    let smaller = (1..v as usize).filter(|&w| !used[w]).count() as u64;
                    rank += smaller * factorial(n - pos - 1).unwrap_or(0);
                    used[v as usize] = true;
                }
                rank
            }
            Kind::Pm => {
                let p = self.points();
                let mut matched = vec![false; p + 1];
                let mut rank = 0u64;
                let mut remaining = self.n;
                for v in 1..=p {
                    if matched[v] {
                        continue;
                    }
                    let w = map[v - 1] as usize;
                    let choice = (v + 1..w).filter(|&u| !matched[u]).count() as u64;
                    remaining -= 1;
                    rank += choice * double_factorial_odd(remaining).unwrap_or(0);
                    matched[v] = true;
                    matched[w] = true;
                }
                rank
            }
        })
    }

    pub fn unrank(&self, rank: u64) -> Result<Element> {
        if rank >= self.size {
            return usage(format!("rank {rank} out of range for {self}"));
        }
        match self.kind {
            Kind::Sym => {
                let n = self.n;
                let mut pool: Vec<u8> = (1..=n as u8).collect();
                let mut rest = rank;
                let mut images = Vec::with_capacity(n);
                for pos in 0..n {
                    let block = factorial(n - pos - 1).unwrap_or(1);
                    let k = (rest / block) as usize;
                    rest %= block;
                    images.push(pool.remove(k));
                }
                Ok(Element::Sym(Permutation(images)))
            }
            Kind::Pm => {
                let p = self.points();
                let mut partner = vec![0u8; p];
                let mut free: Vec<u8> = (1..=p as u8).collect();
                let mut rest = rank;
                let mut remaining = self.n;
                while !free.is_empty() {
                    remaining -= 1;
                    let block = double_factorial_odd(remaining).unwrap_or(1);
                    let k = (rest / block) as usize;
                    rest %= block;
                    let v = free.remove(0);
                    let w = free.remove(k);
                    partner[v as usize - 1] = w;
                    partner[w as usize - 1] = v;
                }
                Ok(Element::Pm(PerfectMatching(partner)))
            }
        }
    }

    /// All elements in canonical (lexicographic) order.
    pub fn enumerate(&self) -> Result<Vec<Element>> {
        if self.size > ENUMERATION_LIMIT {
            return capacity(format!("{self} has {} elements (limit {ENUMERATION_LIMIT})", self.size));
        }
        let mut out = Vec::with_capacity(self.size as usize);
        match self.kind {
            Kind::Sym => {
                let mut images: Vec<u8> = (1..=self.n as u8).collect();
                loop {
                    out.push(Element::Sym(Permutation(images.clone())));
                    if !next_permutation(&mut images) {
                        break;
                    }
                }
            }
            Kind::Pm => {
                let mut partner = vec![0u8; self.points()];
                enumerate_matchings(&mut partner, &mut out);
            }
        }
        Ok(out)
    }
}

impl fmt::Display for Domain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            Kind::Sym => write!(f, "S_{}", self.n),
            Kind::Pm => write!(f, "M_{}", 2 * self.n),
        }
    }
}

fn next_permutation(a: &mut [u8]) -> bool {
    let Some(i) = (1..a.len()).rev().find(|&i| a[i - 1] < a[i]) else {
        return false;
    };
    let j = (i..a.len()).rev().find(|&j| a[j] > a[i - 1]).unwrap();
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

fn enumerate_matchings(partner: &mut [u8], out: &mut Vec<Element>) {
    let Some(v) = partner.iter().position(|&w| w == 0) else {
        out.push(Element::Pm(PerfectMatching(partner.to_vec())));
        return;
    };
    for w in v + 1..partner.len() {
        if partner[w] != 0 {
            continue;
        }
        partner[v] = (w + 1) as u8;
        partner[w] = (v + 1) as u8;
        enumerate_matchings(partner, out);
        partner[v] = 0;
        partner[w] = 0;
    }
}

/// A permutation of `[n]`, stored as its image array.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<u8>);

impl Permutation {
    pub fn new(images: Vec<u8>) -> Result<Self> {
        let n = images.len();
        if n == 0 || n > u8::MAX as usize {
            return usage("permutation length must be in 1..=255");
        }
        let mut seen = vec![false; n + 1];
        for &v in &images {
            let v = v as usize;
            if v == 0 || v > n || seen[v] {
                return usage(format!("{images:?} is not a permutation of 1..={n}"));
            }
            seen[v] = true;
        }
        Ok(Permutation(images))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n as u8).collect())
    }

    /// The transposition swapping `a` and `b`.
    pub fn transposition(n: usize, a: u8, b: u8) -> Result<Self> {
        let mut p = Permutation::identity(n);
        if a == 0 || b == 0 || a as usize > n || b as usize > n {
            return usage(format!("transposition ({a} {b}) outside [1, {n}]"));
        }
        p.0.swap(a as usize - 1, b as usize - 1);
        Ok(p)
    }

    /// The cycle `(c_0 c_1 ... c_k)` sending `c_0 -> c_1 -> ... -> c_0`.
    pub fn cycle(n: usize, cycle: &[u8]) -> Result<Self> {
        let mut images: Vec<u8> = (1..=n as u8).collect();
        for (k, &c) in cycle.iter().enumerate() {
            let next = cycle[(k + 1) % cycle.len()];
            if c == 0 || c as usize > n {
                return usage(format!("cycle entry {c} outside [1, {n}]"));
            }
            images[c as usize - 1] = next;
        }
        Permutation::new(images)
    }

    pub fn images(&self) -> &[u8] {
        &self.0
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn apply(&self, i: u8) -> u8 {
        self.0[i as usize - 1]
    }

    /// `self ∘ other`: first `other`, then `self`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.n() != other.n() {
            return usage("composing permutations of different degrees");
        }
        Ok(Permutation(other.0.iter().map(|&i| self.apply(i)).collect()))
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u8; self.n()];
        for (i, &v) in self.0.iter().enumerate() {
            inv[v as usize - 1] = (i + 1) as u8;
        }
        Permutation(inv)
    }

    pub fn fixed_points(&self) -> usize {
        self.0.iter().enumerate().filter(|(i, &v)| v as usize == i + 1).count()
    }
}

/// A perfect matching of `K_{2n}`, stored as a fixed-point-free involution.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PerfectMatching(Vec<u8>);

impl PerfectMatching {
    pub fn new(partner: Vec<u8>) -> Result<Self> {
        let p = partner.len();
        if p == 0 || p % 2 == 1 || p > u8::MAX as usize {
            return usage(format!("partner array of length {p} cannot describe a perfect matching"));
        }
        for (i, &w) in partner.iter().enumerate() {
            let w = w as usize;
            if w == 0 || w > p || w == i + 1 || partner[w - 1] as usize != i + 1 {
                return usage(format!("{partner:?} is not a fixed-point-free involution"));
            }
        }
        Ok(PerfectMatching(partner))
    }

    /// Build from a list of edges covering `[2n]`.
    pub fn from_edges(n: usize, edges: &[(u8, u8)]) -> Result<Self> {
        let p = 2 * n;
        let mut partner = vec![0u8; p];
        for &(a, b) in edges {
            if a == 0 || b == 0 || a as usize > p || b as usize > p || a == b {
                return usage(format!("edge {{{a},{b}}} invalid on [{p}]"));
            }
            if partner[a as usize - 1] != 0 || partner[b as usize - 1] != 0 {
                return usage(format!("edge {{{a},{b}}} overlaps another edge"));
            }
            partner[a as usize - 1] = b;
            partner[b as usize - 1] = a;
        }
        PerfectMatching::new(partner)
    }

    /// `{1,2},{3,4},...,{2n-1,2n}`.
    pub fn consecutive(n: usize) -> Self {
        let partner = (0..2 * n).map(|i| if i % 2 == 0 { i as u8 + 2 } else { i as u8 }).collect();
        PerfectMatching(partner)
    }

    /// `{1,n+1},{2,n+2},...,{n,2n}`.
    pub fn transversal(n: usize) -> Self {
        let partner = (0..2 * n).map(|i| if i < n { (i + n + 1) as u8 } else { (i - n + 1) as u8 }).collect();
        PerfectMatching(partner)
    }

    pub fn partner(&self) -> &[u8] {
        &self.0
    }

    pub fn n(&self) -> usize {
        self.0.len() / 2
    }

    pub fn mate(&self, i: u8) -> u8 {
        self.0[i as usize - 1]
    }

    /// Edges in ascending order, each as `(min, max)`.
    pub fn edges(&self) -> Vec<Pair> {
        self.0.iter().enumerate().filter(|(i, &w)| (i + 1) < w as usize).map(|(i, &w)| Pair((i + 1) as u8, w)).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Element {
    Sym(Permutation),
    Pm(PerfectMatching),
}

impl Element {
    pub fn kind(&self) -> Kind {
        match self {
            Element::Sym(_) => Kind::Sym,
            Element::Pm(_) => Kind::Pm,
        }
    }

    pub fn n(&self) -> usize {
        match self {
            Element::Sym(p) => p.n(),
            Element::Pm(m) => m.n(),
        }
    }

    pub fn domain(&self) -> Domain {
        Domain::new(self.kind(), self.n()).expect("elements always fit their domain")
    }

    /// The image array (permutations) or partner array (matchings).
    pub fn map(&self) -> &[u8] {
        match self {
            Element::Sym(p) => p.images(),
            Element::Pm(m) => m.partner(),
        }
    }

    /// The certificate representation: `n` pairs, ascending.
    pub fn pairs(&self) -> Vec<Pair> {
        match self {
            Element::Sym(p) => p.images().iter().enumerate().map(|(i, &v)| Pair((i + 1) as u8, v)).collect(),
            Element::Pm(m) => m.edges(),
        }
    }

    /// Whether `pair` belongs to the certificate representation.
    pub fn has_pair(&self, pair: Pair) -> bool {
        let map = self.map();
        let (a, b) = (pair.0 as usize, pair.1 as usize);
        a >= 1 && a <= map.len() && map[a - 1] as usize == b
    }

    pub fn intersection_size(&self, other: &Element) -> Result<usize> {
        if self.kind() != other.kind() || self.n() != other.n() {
            return usage(format!("{self} and {other} live in different domains"));
        }
        Ok(raw_intersection(self.kind(), self.map(), other.map()))
    }

    pub fn is_t_intersecting(&self, other: &Element, t: usize) -> Result<bool> {
        Ok(self.intersection_size(other)? >= t)
    }

    pub fn satisfies(&self, cert: &Certificate) -> bool {
        cert.pairs().iter().all(|&p| self.has_pair(p))
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Sym(p) => write!(f, "{:?}", p.images()),
            Element::Pm(m) => {
                let edges: Vec<String> = m.edges().iter().map(|e| format!("{{{},{}}}", e.0, e.1)).collect();
                write!(f, "{{{}}}", edges.join(","))
            }
        }
    }
}

/// Agreement count on raw maps; for matchings each common edge is seen twice.
#[inline]
pub(crate) fn raw_intersection(kind: Kind, a: &[u8], b: &[u8]) -> usize {
    let agree = a.iter().zip(b).filter(|(x, y)| x == y).count();
    match kind {
        Kind::Sym => agree,
        Kind::Pm => agree / 2,
    }
}

/// Free-function form of [`Element::intersection_size`].
pub fn intersection_size(a: &Element, b: &Element) -> Result<usize> {
    a.intersection_size(b)
}

pub fn is_t_intersecting(a: &Element, b: &Element, t: usize) -> Result<bool> {
    a.is_t_intersecting(b, t)
}

/// A materialised domain: every element in canonical order.
#[derive(Debug)]
pub struct Space {
    domain: Domain,
    elements: Vec<Element>,
}

fn space_cache() -> &'static Mutex<HashMap<Domain, Arc<Space>>> {
    static CACHE: OnceLock<Mutex<HashMap<Domain, Arc<Space>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

impl Space {
    /// Shared, cached enumeration of `domain`.
    pub fn of(domain: Domain) -> Result<Arc<Space>> {
        if let Some(s) = space_cache().lock().unwrap().get(&domain) {
            return Ok(Arc::clone(s));
        }
        let space = Arc::new(Space { domain, elements: domain.enumerate()? });
        space_cache().lock().unwrap().insert(domain, Arc::clone(&space));
        Ok(space)
    }

    pub fn domain(&self) -> Domain {
        self.domain
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[Element] {
        &self.elements
    }

    pub fn element(&self, index: usize) -> &Element {
        &self.elements[index]
    }

    pub fn index_of(&self, x: &Element) -> Result<usize> {
        Ok(self.domain.rank(x)? as usize)
    }

    /// Indices of elements satisfying `cert`, ascending.
    pub fn coset_indices(&self, cert: &Certificate) -> Vec<usize> {
        if !cert.is_consistent(self.domain.kind()) {
            return Vec::new();
        }
        (0..self.len()).filter(|&k| self.elements[k].satisfies(cert)).collect()
    }
}

/// Every element of `domain` satisfying `cert`, in canonical order.
///
/// An inconsistent certificate yields the empty list.
pub fn coset_elements(domain: Domain, cert: &Certificate) -> Result<Vec<Element>> {
    cert.check_in(domain)?;
    let space = Space::of(domain)?;
    Ok(space.coset_indices(cert).into_iter().map(|k| space.element(k).clone()).collect())
}

/// On-disk family of permutations or matchings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyFile {
    pub kind: Kind,
    pub n: usize,
    pub elements: Vec<ElementRepr>,
}

/// A permutation as an image array, or a matching as a list of sorted edges.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ElementRepr {
    Images(Vec<u8>),
    Edges(Vec<[u8; 2]>),
}

impl ElementRepr {
    pub fn of(x: &Element) -> ElementRepr {
        match x {
            Element::Sym(p) => ElementRepr::Images(p.images().to_vec()),
            Element::Pm(m) => ElementRepr::Edges(m.edges().iter().map(|e| [e.0, e.1]).collect()),
        }
    }

    pub fn to_element(&self, domain: Domain) -> Result<Element> {
        let x = match (domain.kind(), self) {
            (Kind::Sym, ElementRepr::Images(images)) => Element::Sym(Permutation::new(images.clone())?),
            (Kind::Pm, ElementRepr::Edges(edges)) => {
                let edges: Vec<(u8, u8)> = edges.iter().map(|e| (e[0], e[1])).collect();
                Element::Pm(PerfectMatching::from_edges(domain.n(), &edges)?)
            }
            // an empty list parses as Images; accept it only where it is meaningful
            (Kind::Pm, ElementRepr::Images(v)) if v.is_empty() => {
                return usage("empty element in matching family");
            }
            (kind, repr) => return usage(format!("element {repr:?} does not describe a {kind} element")),
        };
        domain.check(&x)?;
        Ok(x)
    }
}

impl FamilyFile {
    pub fn new(domain: Domain, members: &[Element]) -> Self {
        FamilyFile { kind: domain.kind(), n: domain.n(), elements: members.iter().map(ElementRepr::of).collect() }
    }

    pub fn domain(&self) -> Result<Domain> {
        Domain::new(self.kind, self.n)
    }

    pub fn members(&self) -> Result<Vec<Element>> {
        let domain = self.domain()?;
        self.elements.iter().map(|e| e.to_element(domain)).collect()
    }

    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("family files always serialize")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes() {
        assert_eq!(Domain::sym(3).unwrap().enumerate().unwrap().len(), 6);
        assert_eq!(Domain::pm(3).unwrap().enumerate().unwrap().len(), 15);
        assert_eq!(Domain::pm(7).unwrap().enumerate().unwrap().len(), 135135);
        for n in 1..=7 {
            let s = Domain::sym(n).unwrap();
            assert_eq!(s.enumerate().unwrap().len() as u64, s.size());
            let p = Domain::pm(n).unwrap();
            assert_eq!(p.enumerate().unwrap().len() as u64, p.size());
        }
    }

    #[test]
    fn capacity_errors() {
        assert!(matches!(Domain::sym(21), Err(Error::Capacity(_))));
        assert!(matches!(Domain::sym(12).unwrap().enumerate(), Err(Error::Capacity(_))));
        assert!(matches!(Domain::sym(0), Err(Error::Usage(_))));
    }

    #[test]
    fn enumeration_is_lexicographic_and_ranked() {
        for domain in [Domain::sym(4).unwrap(), Domain::pm(4).unwrap(), Domain::sym(5).unwrap(), Domain::pm(5).unwrap()]
        {
            let all = domain.enumerate().unwrap();
            for w in all.windows(2) {
                assert!(w[0].map() < w[1].map());
            }
            for (k, x) in all.iter().enumerate() {
                assert_eq!(domain.rank(x).unwrap(), k as u64);
                assert_eq!(&domain.unrank(k as u64).unwrap(), x);
            }
        }
    }

    #[test]
    fn intersection_examples() {
        let id = Element::Sym(Permutation::identity(5));
        let c = Element::Sym(Permutation::cycle(5, &[1, 2, 3]).unwrap());
        assert_eq!(id.intersection_size(&c).unwrap(), 2);

        let m1 = Element::Pm(PerfectMatching::from_edges(3, &[(1, 2), (3, 4), (5, 6)]).unwrap());
        let m2 = Element::Pm(PerfectMatching::from_edges(3, &[(1, 2), (3, 5), (4, 6)]).unwrap());
        assert_eq!(m1.intersection_size(&m2).unwrap(), 1);
        assert_eq!(m1.intersection_size(&m1).unwrap(), 3);

        let id4 = Element::Sym(Permutation::identity(4));
        let swap = Element::Sym(Permutation::transposition(4, 1, 2).unwrap());
        let four = Element::Sym(Permutation::cycle(4, &[1, 2, 3, 4]).unwrap());
        assert!(id4.is_t_intersecting(&swap, 2).unwrap());
        assert!(!id4.is_t_intersecting(&four, 1).unwrap());

        let m8 = Element::Pm(PerfectMatching::consecutive(4));
        assert!(m8.is_t_intersecting(&m8, 4).unwrap());
        assert!(matches!(id.intersection_size(&m1), Err(Error::Usage(_))));
    }

    #[test]
    fn intersection_symmetric_exhaustive() {
        for domain in [Domain::sym(4).unwrap(), Domain::pm(4).unwrap()] {
            let all = domain.enumerate().unwrap();
            for a in &all {
                assert_eq!(a.intersection_size(a).unwrap(), domain.n());
                for b in &all {
                    assert_eq!(a.intersection_size(b).unwrap(), b.intersection_size(a).unwrap());
                    if a != b {
                        assert!(a.intersection_size(b).unwrap() < domain.n());
                    }
                }
            }
        }
    }

    #[test]
    fn var_index_roundtrip() {
        for domain in [Domain::sym(5).unwrap(), Domain::pm(5).unwrap()] {
            for k in 0..domain.var_count() {
                assert_eq!(domain.var_index(domain.var_pair(k)), Some(k));
            }
        }
        let pm = Domain::pm(3).unwrap();
        assert_eq!(pm.var_index(Pair(2, 1)), None);
        assert_eq!(pm.var_index(Pair(3, 3)), None);
    }

    #[test]
    fn invalid_elements_rejected() {
        assert!(Permutation::new(vec![1, 1, 2]).is_err());
        assert!(PerfectMatching::new(vec![2, 1, 3, 4]).is_err());
        assert!(PerfectMatching::new(vec![2, 3, 1, 4]).is_err());
        assert!(PerfectMatching::from_edges(2, &[(1, 2), (2, 3)]).is_err());
    }

    #[test]
    fn family_file_roundtrip() {
        let text = r#"{"kind":"pm","n":2,"elements":[[[1,2],[3,4]],[[1,3],[2,4]]]}"#;
        let fam = FamilyFile::parse(text).unwrap();
        let members = fam.members().unwrap();
        assert_eq!(members.len(), 2);
        assert_eq!(FamilyFile::new(fam.domain().unwrap(), &members).to_json(), text);

        let sym = r#"{"kind":"sym","n":3,"elements":[[1,2,3],[2,1,3]]}"#;
        let fam = FamilyFile::parse(sym).unwrap();
        assert_eq!(fam.members().unwrap()[1], Element::Sym(Permutation::transposition(3, 1, 2).unwrap()));

        let bad = r#"{"kind":"sym","n":3,"elements":[[1,2]]}"#;
        assert!(FamilyFile::parse(bad).unwrap().members().is_err());
        assert!(matches!(FamilyFile::parse("{"), Err(Error::Parse(_))));
    }
}
