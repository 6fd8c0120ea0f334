//! Certificates, certificate complexity, covers and the constructive
//! certificate intersection checks.

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::boolfn::BooleanFunction;
use crate::domains::{Domain, Element, Kind, Pair, PerfectMatching, Permutation, Space};
use crate::error::{capacity, usage, Error, Result};

/// A set of pairs, kept sorted and deduplicated.
///
/// Inconsistent pair sets are representable; they are simply unsatisfiable.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Certificate(Vec<Pair>);

impl Certificate {
    pub fn empty() -> Self {
        Certificate(Vec::new())
    }

    /// Ordered pairs `(i, j)` meaning `α(i) = j`.
    pub fn sym(pairs: impl IntoIterator<Item = (u8, u8)>) -> Self {
        Certificate::from_pairs(pairs.into_iter().map(|(i, j)| Pair(i, j)))
    }

    /// Edges `{i, j}`; orientation is normalised.
    pub fn pm(edges: impl IntoIterator<Item = (u8, u8)>) -> Self {
        Certificate::from_pairs(edges.into_iter().map(|(i, j)| Pair::edge(i, j)))
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = Pair>) -> Self {
        let mut v: Vec<Pair> = pairs.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        Certificate(v)
    }

    pub fn pairs(&self) -> &[Pair] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, pair: Pair) -> bool {
        self.0.binary_search(&pair).is_ok()
    }

    pub fn is_consistent(&self, kind: Kind) -> bool {
        self.0.iter().enumerate().all(|(k, a)| self.0[k + 1..].iter().all(|b| a.compatible(*b, kind)))
    }

    pub fn intersection(&self, other: &Certificate) -> Certificate {
        Certificate(self.0.iter().copied().filter(|p| other.contains(*p)).collect())
    }

    pub fn union(&self, other: &Certificate) -> Certificate {
        Certificate::from_pairs(self.0.iter().chain(other.0.iter()).copied())
    }

    /// Every point mentioned by the certificate (for matchings: both endpoints).
    pub(crate) fn points(&self) -> Vec<u8> {
        let mut v: Vec<u8> = self.0.iter().flat_map(|p| [p.0, p.1]).collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    /// Reject pairs that are not variables of `domain`.
    pub fn check_in(&self, domain: Domain) -> Result<()> {
        for &p in &self.0 {
            let ok = match domain.kind() {
                Kind::Sym => domain.var_index(p).is_some(),
                Kind::Pm => domain.var_index(p).is_some() && p == Pair::edge(p.0, p.1),
            };
            if !ok {
                return usage(format!("pair {p} is not a valid certificate entry over {domain}"));
            }
        }
        Ok(())
    }
}

impl FromIterator<Pair> for Certificate {
    fn from_iter<I: IntoIterator<Item = Pair>>(iter: I) -> Self {
        Certificate::from_pairs(iter)
    }
}

/// `x` satisfies every pair of `c`.
pub fn satisfies(x: &Element, c: &Certificate) -> Result<bool> {
    c.check_in(x.domain())?;
    Ok(x.satisfies(c))
}

/// A certificate plus an optional triple `{i, j, k}` whose three edges must
/// all be avoided. Only meaningful for matchings.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ExtendedCertificate {
    pub base: Certificate,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub forbidden: Option<[u8; 3]>,
}

impl ExtendedCertificate {
    pub fn plain(base: Certificate) -> Self {
        ExtendedCertificate { base, forbidden: None }
    }

    pub fn new(base: Certificate, triple: [u8; 3]) -> Result<Self> {
        let mut t = triple;
        t.sort_unstable();
        if t[0] == t[1] || t[1] == t[2] {
            return usage(format!("forbidden triple {triple:?} has repeated entries"));
        }
        let used = base.points();
        if let Some(v) = t.iter().find(|v| used.contains(v)) {
            return usage(format!("forbidden vertex {v} appears in the base certificate"));
        }
        Ok(ExtendedCertificate { base, forbidden: Some(t) })
    }

    /// `|base|`, plus one for the triple.
    pub fn size(&self) -> usize {
        self.base.len() + self.forbidden.is_some() as usize
    }

    fn triple_edges(&self) -> Vec<Pair> {
        match self.forbidden {
            Some([i, j, k]) => vec![Pair::edge(i, j), Pair::edge(i, k), Pair::edge(j, k)],
            None => Vec::new(),
        }
    }

    fn check_in(&self, domain: Domain) -> Result<()> {
        if domain.kind() != Kind::Pm {
            return usage("extended certificates apply to perfect matchings");
        }
        self.base.check_in(domain)?;
        if self.forbidden.is_some_and(|t| t.iter().any(|&v| v == 0 || v as usize > domain.points())) {
            return usage(format!("forbidden triple outside [{}]", domain.points()));
        }
        Ok(())
    }

    fn holds_at(&self, m: &Element) -> bool {
        m.satisfies(&self.base) && self.triple_edges().iter().all(|&e| !m.has_pair(e))
    }
}

/// `m` satisfies the base and contains none of the three forbidden edges.
pub fn extended_satisfies(m: &Element, ec: &ExtendedCertificate) -> Result<bool> {
    ec.check_in(m.domain())?;
    Ok(ec.holds_at(m))
}

/// For each element `y` with `f(y) != f(x)`, the set of positions of `x`'s
/// pair representation that `y` agrees with. Dominated masks are dropped.
fn conflict_masks(f: &BooleanFunction, x: &Element) -> Result<Vec<u32>> {
    let space = Space::of(f.domain())?;
    let value = f.eval(x)?;
    let pairs = x.pairs();
    let mut masks: Vec<u32> = space
        .elements()
        .iter()
        .enumerate()
        .filter(|&(k, _)| f.value(k) != value)
        .map(|(_, y)| pairs.iter().enumerate().filter(|(_, &p)| y.has_pair(p)).fold(0u32, |m, (pos, _)| m | 1 << pos))
        .collect();
    masks.sort_unstable_by_key(|m| std::cmp::Reverse(m.count_ones()));
    masks.dedup();
    let mut maximal: Vec<u32> = Vec::new();
    for m in masks {
        if !maximal.iter().any(|&big| m & big == m) {
            maximal.push(m);
        }
    }
    Ok(maximal)
}

/// The smallest subset of `x`'s pairs that forces `f(x)`.
///
/// Subsets are tried by size, then lexicographically by position in the
/// pair representation; the first certificate found is returned.
pub fn min_certificate(f: &BooleanFunction, x: &Element) -> Result<(usize, Certificate)> {
    if x.domain() != f.domain() {
        return usage(format!("{x} is not in {}", f.domain()));
    }
    let masks = conflict_masks(f, x)?;
    let pairs = x.pairs();
    for size in 0..=pairs.len() {
        for combo in (0..pairs.len()).combinations(size) {
            let s = combo.iter().fold(0u32, |m, &p| m | 1 << p);
            if masks.iter().all(|&big| s & big != s) {
                return Ok((size, Certificate::from_pairs(combo.iter().map(|&p| pairs[p]))));
            }
        }
    }
    Err(Error::Inconsistency(format!("{x} has no certificate")))
}

/// Limits on the exhaustive certificate searches.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CertLimits {
    /// Largest domain for a maximum over every element.
    pub max_domain: u64,
    /// Largest `(inputs examined) × (domain size)` for the one-sided maximum.
    pub max_work: u64,
}

impl Default for CertLimits {
    fn default() -> Self {
        CertLimits { max_domain: 1000, max_work: 1 << 31 }
    }
}

/// `C(f)`: the largest minimum-certificate size over the domain.
pub fn certificate_complexity(f: &BooleanFunction) -> Result<usize> {
    certificate_complexity_with(f, CertLimits::default())
}

pub fn certificate_complexity_with(f: &BooleanFunction, limits: CertLimits) -> Result<usize> {
    let domain = f.domain();
    if domain.size() > limits.max_domain {
        return capacity(format!("{domain} exceeds the certificate search limit of {} elements", limits.max_domain));
    }
    let space = Space::of(domain)?;
    let mut worst = 0;
    for x in space.elements() {
        worst = worst.max(min_certificate(f, x)?.0);
    }
    Ok(worst)
}

/// `C₁(f)`: the largest minimum-certificate size over the 1-inputs.
pub fn one_side_certificate_complexity(f: &BooleanFunction) -> Result<usize> {
    one_side_with(f, CertLimits::default())
}

pub fn one_side_with(f: &BooleanFunction, limits: CertLimits) -> Result<usize> {
    let domain = f.domain();
    if (f.weight() as u64).saturating_mul(domain.size()) > limits.max_work {
        return capacity(format!("{} inputs over {domain} exceed the certificate work limit", f.weight()));
    }
    let mut worst = 0;
    for x in f.members() {
        worst = worst.max(min_certificate(f, &x)?.0);
    }
    Ok(worst)
}

/// An element satisfying `c_a` whose pair representation meets `c_b`
/// exactly in `c_a ∩ c_b`.
///
/// Points left free by `c_a` are ordered so that pairs of `c_b` among them
/// line up, and then matched with a shift that avoids every such pair.
pub fn complete_avoiding(domain: Domain, c_a: &Certificate, c_b: &Certificate) -> Result<Element> {
    let kind = domain.kind();
    let n = domain.n();
    for c in [c_a, c_b] {
        c.check_in(domain)?;
        if !c.is_consistent(kind) {
            return usage(format!("certificate {c:?} is unsatisfiable"));
        }
    }
    if c_a.len() + 2 > n {
        return Err(Error::Precondition(format!("|c_a| = {} exceeds n - 2 = {}", c_a.len(), n as isize - 2)));
    }
    match kind {
        Kind::Sym => {
            let used_i: Vec<u8> = c_a.pairs().iter().map(|p| p.0).collect();
            let used_j: Vec<u8> = c_a.pairs().iter().map(|p| p.1).collect();
            let free_i: Vec<u8> = (1..=n as u8).filter(|i| !used_i.contains(i)).collect();
            let free_j: Vec<u8> = (1..=n as u8).filter(|j| !used_j.contains(j)).collect();
            // pairs of c_b between free points go first, on the diagonal
            let diag: Vec<Pair> =
                c_b.pairs().iter().copied().filter(|p| free_i.contains(&p.0) && free_j.contains(&p.1)).collect();
            let mut is: Vec<u8> = diag.iter().map(|p| p.0).collect();
            let mut js: Vec<u8> = diag.iter().map(|p| p.1).collect();
            let rest_i: Vec<u8> = free_i.iter().copied().filter(|i| !is.contains(i)).collect();
            let rest_j: Vec<u8> = free_j.iter().copied().filter(|j| !js.contains(j)).collect();
            is.extend(rest_i);
            js.extend(rest_j);
            let mut images = vec![0u8; n];
            for p in c_a.pairs() {
                images[p.0 as usize - 1] = p.1;
            }
            let len = is.len();
            for s in 0..len {
                images[is[s] as usize - 1] = js[(s + 1) % len];
            }
            Ok(Element::Sym(Permutation::new(images)?))
        }
        Kind::Pm => {
            let used = c_a.points();
            let free: Vec<u8> = (1..=domain.points() as u8).filter(|v| !used.contains(v)).collect();
            let mut ks: Vec<u8> = Vec::with_capacity(free.len());
            for p in c_b.pairs() {
                if free.contains(&p.0) && free.contains(&p.1) {
                    ks.extend([p.0, p.1]);
                }
            }
            let rest: Vec<u8> = free.iter().copied().filter(|v| !ks.contains(v)).collect();
            ks.extend(rest);
            let half = ks.len() / 2;
            let mut edges: Vec<(u8, u8)> = c_a.pairs().iter().map(|p| (p.0, p.1)).collect();
            edges.extend((0..half).map(|s| (ks[s], ks[half + s])));
            Ok(Element::Pm(PerfectMatching::from_edges(n, &edges)?))
        }
    }
}

/// Outcome of checking `|C_α ∩ C_β| ≥ 2` over all pairs of 1-inputs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairwiseReport {
    pub members: usize,
    pub certificate_complexity: usize,
    /// `C(f) ≤ n − 2`.
    pub precondition: bool,
    pub pairs_checked: usize,
    /// Member indices (in canonical order) and the shared pairs.
    pub violations: Vec<(usize, usize, Certificate)>,
}

impl PairwiseReport {
    pub fn passed(&self) -> bool {
        self.precondition && self.violations.is_empty()
    }
}

/// Minimum certificates of every pair of members, checked for a common
/// 2-subset. `C(f)` is computed over the whole domain.
pub fn check_pairwise_certificate_intersection(f: &BooleanFunction) -> Result<PairwiseReport> {
    let n = f.domain().n();
    let cc = certificate_complexity(f)?;
    let members = f.members();
    let certs: Vec<Certificate> = members.iter().map(|x| min_certificate(f, x).map(|c| c.1)).collect::<Result<_>>()?;
    let mut violations = Vec::new();
    let mut pairs_checked = 0;
    for a in 0..certs.len() {
        for b in a..certs.len() {
            pairs_checked += 1;
            let common = certs[a].intersection(&certs[b]);
            if common.len() < 2 {
                violations.push((a, b, common));
            }
        }
    }
    Ok(PairwiseReport {
        members: members.len(),
        certificate_complexity: cc,
        precondition: cc + 2 <= n,
        pairs_checked,
        violations,
    })
}

fn two_intersecting_across(left: &[Element], right: &[Element]) -> bool {
    left.iter().all(|a| right.iter().all(|b| a.intersection_size(b).map(|k| k >= 2).unwrap_or(false)))
}

/// Brute force: if everything satisfying `c1` 2-intersects everything
/// satisfying `c2`, the same holds with `c1` replaced by its base.
/// Returns whether that implication held (vacuously true when it does not apply).
pub fn check_extended_reduction(c1: &ExtendedCertificate, c2: &ExtendedCertificate, n: usize) -> Result<bool> {
    let domain = Domain::pm(n)?;
    c1.check_in(domain)?;
    c2.check_in(domain)?;
    if c1.forbidden.is_none() {
        return usage("the first certificate needs a forbidden triple");
    }
    if c1.size().max(c2.size()) + 2 > n {
        return Err(Error::Precondition(format!("certificate sizes must be at most n - 2 = {}", n as isize - 2)));
    }
    let space = Space::of(domain)?;
    let pick = |c: &ExtendedCertificate| -> Vec<Element> {
        space.elements().iter().filter(|m| c.holds_at(m)).cloned().collect()
    };
    let (s1, s2) = (pick(c1), pick(c2));
    if !two_intersecting_across(&s1, &s2) {
        return Ok(true);
    }
    let relaxed = pick(&ExtendedCertificate::plain(c1.base.clone()));
    Ok(two_intersecting_across(&relaxed, &s2))
}

/// `r` pairwise compatible cosets.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cover {
    pub cosets: Vec<Pair>,
}

impl Cover {
    pub fn r(&self) -> usize {
        self.cosets.len()
    }

    pub fn is_compatible(&self, kind: Kind) -> bool {
        self.cosets.iter().tuple_combinations().all(|(a, b)| a.compatible(*b, kind))
    }

    pub fn covers(&self, f: &BooleanFunction) -> bool {
        f.members().iter().all(|x| self.cosets.iter().any(|&p| x.has_pair(p)))
    }
}

/// Largest `r` accepted by [`find_cover`].
pub const MAX_COVER: usize = 16;

/// At most `r` pairwise compatible cosets whose union holds every 1-input.
///
/// Backtracking: the first uncovered member must lie in one of the chosen
/// cosets, so branch over its own pairs.
pub fn find_cover(f: &BooleanFunction, r: usize) -> Result<Option<Cover>> {
    if r == 0 {
        return usage("a cover needs r >= 1");
    }
    if r > MAX_COVER {
        return capacity(format!("cover size {r} exceeds {MAX_COVER}"));
    }
    let kind = f.domain().kind();
    let members = f.members();
    fn go(members: &[Element], kind: Kind, r: usize, chosen: &mut Vec<Pair>) -> bool {
        let Some(x) = members.iter().find(|x| !chosen.iter().any(|&p| x.has_pair(p))) else {
            return true;
        };
        if chosen.len() == r {
            return false;
        }
        for p in x.pairs() {
            if chosen.iter().all(|q| q.compatible(p, kind)) {
                chosen.push(p);
                if go(members, kind, r, chosen) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
    let mut chosen = Vec::new();
    Ok(go(&members, kind, r, &mut chosen).then_some(Cover { cosets: chosen }))
}

pub fn is_r_covered(f: &BooleanFunction, r: usize) -> Result<bool> {
    Ok(find_cover(f, r)?.is_some())
}

/// The cosets of `x`'s minimum certificate with the pair at position `drop`
/// removed. For a 2-intersecting family with `C(f) ≤ n − 2` these cover it.
pub fn cover_from_certificate(f: &BooleanFunction, x: &Element, drop: usize) -> Result<Cover> {
    let (size, c) = min_certificate(f, x)?;
    if drop >= size {
        return usage(format!("position {drop} outside a certificate of size {size}"));
    }
    Ok(Cover { cosets: c.pairs().iter().enumerate().filter(|&(k, _)| k != drop).map(|(_, &p)| p).collect() })
}

/// The pairs of `x` in the rows of `cover`: `(i, x(i))`, or for matchings
/// the edge of `x` at the smaller endpoint of each cover edge.
fn cover_rows(cover: &Cover, x: &Element) -> Certificate {
    let map = x.map();
    let pair = |i: u8| match x {
        Element::Sym(_) => Pair(i, map[i as usize - 1]),
        Element::Pm(_) => Pair::edge(i, map[i as usize - 1]),
    };
    cover.cosets.iter().map(|p| pair(p.0)).collect()
}

/// Whether every element has a certificate `{(i_1, x(i_1)), …, (i_m, x(i_m)), (i, j)}`
/// built on the rows of `cover`. The extra pair may repeat a row pair.
/// Returns the first element without one.
pub fn check_cover_certificates(f: &BooleanFunction, cover: &Cover) -> Result<Option<Element>> {
    let domain = f.domain();
    let space = Space::of(domain)?;
    for (r, x) in space.elements().iter().enumerate() {
        let rows = cover_rows(cover, x);
        let certifies = |c: &Certificate| space.coset_indices(c).into_iter().all(|k| f.value(k) == f.value(r));
        if !x.pairs().iter().any(|&p| certifies(&rows.union(&Certificate::from_pairs([p])))) {
            return Ok(Some(x.clone()));
        }
    }
    Ok(None)
}

/// `T = 2⌊C/2⌋ (C−1)! / 2^⌊C/2⌋`.
#[allow(non_snake_case)]
pub fn bound_T(c: usize) -> Result<u128> {
    if c < 2 {
        return usage(format!("the bound needs C >= 2, got {c}"));
    }
    if c > 30 {
        return capacity(format!("C = {c} overflows the bound arithmetic"));
    }
    let h = (c / 2) as u32;
    let fact: u128 = (1..c as u128).product();
    Ok(2 * h as u128 * fact / (1u128 << h))
}

/// The same count as a product of binomials, following the even/odd split:
/// `Π C(C−2s, 2)` for even `C`, `(C−1) Π C(C−2s−1, 2)` for odd `C`.
#[allow(non_snake_case)]
pub fn bound_T_product(c: usize) -> Result<u128> {
    if c < 2 {
        return usage(format!("the bound needs C >= 2, got {c}"));
    }
    if c > 30 {
        return capacity(format!("C = {c} overflows the bound arithmetic"));
    }
    let choose2 = |k: usize| (k * k.saturating_sub(1) / 2) as u128;
    let r = c / 2;
    Ok(if c.is_multiple_of(2) {
        (0..r).map(|s| choose2(c - 2 * s)).product()
    } else {
        (c as u128 - 1) * (0..r).map(|s| choose2(c - 2 * s - 1)).product::<u128>()
    })
}

/// Distinct minimum certificates returned by [`min_certificate`] over the 1-inputs.
pub fn count_min_certificate_classes(f: &BooleanFunction) -> Result<usize> {
    let mut certs: Vec<Certificate> =
        f.members().iter().map(|x| min_certificate(f, x).map(|c| c.1)).collect::<Result<_>>()?;
    certs.sort();
    certs.dedup();
    Ok(certs.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::boolfn::{classify_degree1, degree_at_most};

    fn sym(n: usize) -> Domain {
        Domain::sym(n).unwrap()
    }

    fn pm(n: usize) -> Domain {
        Domain::pm(n).unwrap()
    }

    #[test]
    fn satisfaction_examples() {
        let id = Element::Sym(Permutation::identity(4));
        assert!(satisfies(&id, &Certificate::sym([(1, 1), (2, 2)])).unwrap());
        assert!(satisfies(&id, &Certificate::sym([(9, 1)])).is_err());
        let m = Element::Pm(PerfectMatching::consecutive(3));
        let ec = ExtendedCertificate::new(Certificate::empty(), [1, 3, 5]).unwrap();
        assert!(extended_satisfies(&m, &ec).unwrap());
        let m2 = Element::Pm(PerfectMatching::from_edges(3, &[(1, 3), (2, 4), (5, 6)]).unwrap());
        assert!(!extended_satisfies(&m2, &ec).unwrap());
        assert_eq!(ec.size(), 1);
        assert!(ExtendedCertificate::new(Certificate::pm([(1, 2)]), [1, 3, 5]).is_err());
        let json =
            serde_json::to_string(&ExtendedCertificate::new(Certificate::pm([(2, 1)]), [5, 3, 4]).unwrap()).unwrap();
        assert_eq!(json, r#"{"base":[[1,2]],"forbidden":[3,4,5]}"#);
    }

    #[test]
    fn min_certificate_examples() {
        let s5 = sym(5);
        let one = BooleanFunction::constant(s5, true).unwrap();
        assert_eq!(min_certificate(&one, &Element::Sym(Permutation::identity(5))).unwrap(), (0, Certificate::empty()));

        let id = Element::Sym(Permutation::identity(5));
        let c123 = Element::Sym(Permutation::cycle(5, &[1, 2, 3]).unwrap());
        let f = BooleanFunction::indicator(s5, &[id.clone(), c123.clone()]).unwrap();
        let (k, c) = min_certificate(&f, &id).unwrap();
        assert_eq!((k, c), (4, Certificate::sym([(1, 1), (2, 2), (3, 3), (4, 4)])));
        let (_, c2) = min_certificate(&f, &c123).unwrap();
        assert_eq!(c2, Certificate::sym([(1, 2), (2, 3), (3, 1), (4, 4)]));

        let s4 = sym(4);
        let coset = Certificate::sym([(1, 1), (2, 2)]);
        let g = BooleanFunction::coset(s4, &coset).unwrap();
        for x in g.members() {
            assert_eq!(min_certificate(&g, &x).unwrap(), (2, coset.clone()));
        }
    }

    #[test]
    fn complexity_examples() {
        assert_eq!(certificate_complexity(&BooleanFunction::constant(sym(4), false).unwrap()).unwrap(), 0);
        let m6 = pm(3);
        let anti = BooleanFunction::from_fn(m6, |x| {
            !(x.has_pair(Pair(1, 2)) || x.has_pair(Pair(1, 3)) || x.has_pair(Pair(2, 3)))
        })
        .unwrap();
        assert_eq!(certificate_complexity(&anti).unwrap(), 2);
        let u11 = BooleanFunction::coset(sym(4), &Certificate::sym([(1, 1)])).unwrap();
        assert_eq!(certificate_complexity(&u11).unwrap(), 1);
        assert_eq!(one_side_certificate_complexity(&u11).unwrap(), 1);
        let big = BooleanFunction::constant(sym(7), true).unwrap();
        assert!(matches!(certificate_complexity(&big), Err(Error::Capacity(_))));
    }

    #[test]
    fn completion_examples() {
        let s4 = sym(4);
        let x = complete_avoiding(s4, &Certificate::sym([(1, 1)]), &Certificate::sym([(2, 2)])).unwrap();
        assert_eq!(x.map()[0], 1);
        assert!((2..=4u8).all(|i| x.map()[i as usize - 1] != i));
        let c = Certificate::sym([(2, 3)]);
        assert!(complete_avoiding(s4, &c, &c).unwrap().satisfies(&c));
        assert!(matches!(
            complete_avoiding(s4, &Certificate::sym([(1, 1), (2, 2), (3, 3)]), &c),
            Err(Error::Precondition(_))
        ));
        let m =
            complete_avoiding(pm(4), &Certificate::pm([(1, 2)]), &Certificate::pm([(3, 4), (5, 6), (1, 2)])).unwrap();
        assert!(m.has_pair(Pair(1, 2)) && !m.has_pair(Pair(3, 4)) && !m.has_pair(Pair(5, 6)));
    }

    #[test]
    fn pairwise_examples() {
        let s5 = sym(5);
        let id = Element::Sym(Permutation::identity(5));
        let c123 = Element::Sym(Permutation::cycle(5, &[1, 2, 3]).unwrap());
        let f = BooleanFunction::indicator(s5, &[id, c123]).unwrap();
        let report = check_pairwise_certificate_intersection(&f).unwrap();
        assert!(!report.precondition);
        assert_eq!(report.certificate_complexity, 4);
        assert_eq!(report.violations, vec![(0, 1, Certificate::sym([(4, 4)]))]);

        let coset = BooleanFunction::coset(sym(4), &Certificate::sym([(1, 2), (3, 4)])).unwrap();
        assert!(check_pairwise_certificate_intersection(&coset).unwrap().passed());
    }

    #[test]
    fn extended_reduction_examples() {
        let c1 = ExtendedCertificate::new(Certificate::pm([(1, 2)]), [3, 4, 5]).unwrap();
        let c2 = ExtendedCertificate::plain(Certificate::pm([(1, 2)]));
        assert!(check_extended_reduction(&c1, &c2, 4).unwrap());
        assert!(check_extended_reduction(&c1, &c2, 3).is_err());
        assert!(check_extended_reduction(&c2, &c2, 4).is_err());
    }

    #[test]
    fn cover_examples() {
        let s4 = sym(4);
        let coset = BooleanFunction::coset(s4, &Certificate::sym([(1, 1), (2, 2)])).unwrap();
        let cover = find_cover(&coset, 1).unwrap().unwrap();
        assert_eq!(cover.r(), 1);
        assert!(cover.covers(&coset));

        let union = BooleanFunction::from_fn(s4, |x| x.has_pair(Pair(1, 1)) || x.has_pair(Pair(2, 2))).unwrap();
        assert!(!is_r_covered(&union, 1).unwrap());
        let cover = find_cover(&union, 2).unwrap().unwrap();
        assert!(cover.covers(&union) && cover.is_compatible(Kind::Sym));

        assert!(!is_r_covered(&BooleanFunction::constant(s4, true).unwrap(), 1).unwrap());
        assert!(find_cover(&union, 0).is_err());
    }

    #[test]
    fn covers_from_certificates() {
        let s5 = sym(5);
        let f = BooleanFunction::coset(s5, &Certificate::sym([(1, 1), (2, 2)])).unwrap();
        for x in f.members() {
            for drop in 0..2 {
                let cover = cover_from_certificate(&f, &x, drop).unwrap();
                assert_eq!(cover.r(), 1);
                assert!(cover.covers(&f));
                assert_eq!(check_cover_certificates(&f, &cover).unwrap(), None);
            }
        }
        assert!(cover_from_certificate(&f, &f.members()[0], 2).is_err());
        let m8 = pm(4);
        let g = BooleanFunction::coset(m8, &Certificate::pm([(1, 2), (3, 4)])).unwrap();
        let cover = cover_from_certificate(&g, &g.members()[0], 1).unwrap();
        assert!(cover.covers(&g));
        assert_eq!(check_cover_certificates(&g, &cover).unwrap(), None);
        // a cover that misses the family's structure
        let far = Cover { cosets: vec![Pair(5, 6)] };
        assert!(check_cover_certificates(&g, &far).unwrap().is_some());
    }

    #[test]
    fn bound_values() {
        assert_eq!([2, 3, 4].map(|c| bound_T(c).unwrap()), [1, 2, 6]);
        for c in 2..=10 {
            assert_eq!(bound_T(c).unwrap(), bound_T_product(c).unwrap(), "C = {c}");
        }
        for r in 1..=5usize {
            let fact: u128 = (1..=2 * r as u128).product();
            assert_eq!(bound_T(2 * r).unwrap(), fact >> r);
        }
        assert!(bound_T(1).is_err());
        let coset = BooleanFunction::coset(sym(6), &Certificate::sym([(1, 1), (2, 2)])).unwrap();
        assert_eq!(count_min_certificate_classes(&coset).unwrap(), 1);
    }

    #[test]
    fn degree_one_has_small_certificates() {
        let s3 = sym(3);
        for table in 0u32..64 {
            let bits: Vec<bool> = (0..6).map(|k| table >> k & 1 == 1).collect();
            let f = BooleanFunction::from_bools(s3, &bits).unwrap();
            if degree_at_most(&f, 1).unwrap() {
                classify_degree1(&f).unwrap();
                assert!(certificate_complexity(&f).unwrap() <= 1);
            }
        }
    }
}
