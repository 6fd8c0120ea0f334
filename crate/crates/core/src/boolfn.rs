//! Boolean functions on `S_n`, `M_2n` and the hypercube.
//!
//! Degree on the two schemes is decided exactly: a truth vector has degree at
//! most `d` iff it lies in the rational span of the indicator columns of all
//! consistent monomials of size at most `d`.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use base64::Engine as _;
use bitvec::prelude::*;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::cert::Certificate;
use crate::domains::{Domain, Element, Kind, Pair, PerfectMatching, Permutation, Space};
use crate::error::{capacity, usage, Error, Result};
use crate::linalg::{RowSpace, SpanTest};

/// A 0/1-valued function on a domain, indexed by rank.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BooleanFunction {
    domain: Domain,
    truth: BitVec<u8, Lsb0>,
}

impl fmt::Debug for BooleanFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BooleanFunction({}, weight {})", self.domain, self.weight())
    }
}

impl BooleanFunction {
    pub fn constant(domain: Domain, value: bool) -> Result<Self> {
        let space = Space::of(domain)?;
        Ok(BooleanFunction { domain, truth: BitVec::repeat(value, space.len()) })
    }

    pub fn from_truth(domain: Domain, truth: BitVec<u8, Lsb0>) -> Result<Self> {
        if truth.len() as u64 != domain.size() {
            return usage(format!("truth vector of length {} for {domain} (size {})", truth.len(), domain.size()));
        }
        Ok(BooleanFunction { domain, truth })
    }

    pub fn from_bools(domain: Domain, bits: &[bool]) -> Result<Self> {
        BooleanFunction::from_truth(domain, bits.iter().collect())
    }

    pub fn from_fn(domain: Domain, mut f: impl FnMut(&Element) -> bool) -> Result<Self> {
        let space = Space::of(domain)?;
        Ok(BooleanFunction { domain, truth: space.elements().iter().map(&mut f).collect() })
    }

    /// Indicator of a family; duplicates are allowed.
    pub fn indicator(domain: Domain, members: &[Element]) -> Result<Self> {
        let mut f = BooleanFunction::constant(domain, false)?;
        for x in members {
            if !domain.contains(x) {
                return usage(format!("{x} is not an element of {domain}"));
            }
            f.truth.set(domain.rank(x)? as usize, true);
        }
        Ok(f)
    }

    /// Indicator of the coset cut out by `cert`.
    pub fn coset(domain: Domain, cert: &Certificate) -> Result<Self> {
        cert.check_in(domain)?;
        BooleanFunction::from_fn(domain, |x| x.satisfies(cert))
    }

    /// Each point independently 1 with probability `p`.
    pub fn random(domain: Domain, p: f64, rng: &mut impl Rng) -> Result<Self> {
        let space = Space::of(domain)?;
        Ok(BooleanFunction { domain, truth: (0..space.len()).map(|_| rng.gen_bool(p)).collect() })
    }

    pub fn domain(&self) -> Domain {
        self.domain
    }

    pub fn len(&self) -> usize {
        self.truth.len()
    }

    pub fn is_empty(&self) -> bool {
        self.truth.is_empty()
    }

    pub fn truth(&self) -> &BitSlice<u8, Lsb0> {
        &self.truth
    }

    pub fn value(&self, rank: usize) -> bool {
        self.truth[rank]
    }

    pub fn eval(&self, x: &Element) -> Result<bool> {
        Ok(self.truth[self.domain.rank(x)? as usize])
    }

    pub fn weight(&self) -> usize {
        self.truth.count_ones()
    }

    pub fn is_constant(&self) -> bool {
        self.truth.all() || self.truth.not_any()
    }

    /// Ranks of the 1-inputs.
    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.truth.iter_ones()
    }

    pub fn members(&self) -> Vec<Element> {
        let space = Space::of(self.domain).expect("function domain is enumerable");
        self.ones().map(|k| space.element(k).clone()).collect()
    }

    pub fn complement(&self) -> BooleanFunction {
        BooleanFunction { domain: self.domain, truth: !self.truth.clone() }
    }

    pub fn to_i64(&self) -> Vec<i64> {
        self.truth.iter().map(|b| *b as i64).collect()
    }

    /// `{"kind", "n", "bits"}` with the truth vector packed LSB-first and base64 encoded.
    pub fn to_raw(&self) -> RawFunction {
        RawFunction {
            kind: self.domain.kind(),
            n: self.domain.n(),
            bits: base64::engine::general_purpose::STANDARD.encode(self.truth.as_raw_slice()),
        }
    }

    pub fn from_raw(raw: &RawFunction) -> Result<Self> {
        let domain = Domain::new(raw.kind, raw.n)?;
        let bytes = base64::engine::general_purpose::STANDARD
            .decode(&raw.bits)
            .map_err(|e| Error::Parse(format!("bits: {e}")))?;
        let size = domain.size() as usize;
        if bytes.len() != size.div_ceil(8) {
            return Err(Error::Parse(format!("{} bytes cannot hold {size} bits", bytes.len())));
        }
        let mut truth = BitVec::<u8, Lsb0>::from_vec(bytes);
        if truth[size..].any() {
            return Err(Error::Parse("padding bits must be zero".into()));
        }
        truth.truncate(size);
        BooleanFunction::from_truth(domain, truth)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RawFunction {
    pub kind: Kind,
    pub n: usize,
    pub bits: String,
}

pub fn indicator_of_family(domain: Domain, members: &[Element]) -> Result<BooleanFunction> {
    BooleanFunction::indicator(domain, members)
}

/// Consistent monomials of size at most `degree_cap` and their evaluation matrix.
#[derive(Clone, Debug)]
pub struct MonomialBasis {
    domain: Domain,
    degree_cap: usize,
    monomials: Vec<Certificate>,
}

impl MonomialBasis {
    /// Monomials are listed by size, then lexicographically by variable index.
    /// Products of conflicting variables vanish identically and are skipped.
    pub fn new(domain: Domain, degree_cap: usize) -> Self {
        let vars: Vec<Pair> = (0..domain.var_count()).map(|k| domain.var_pair(k)).collect();
        let mut monomials = vec![Certificate::empty()];
        let mut frontier: Vec<(usize, Vec<Pair>)> = vec![(0, Vec::new())];
        for _ in 0..degree_cap {
            let mut next = Vec::new();
            for (start, m) in &frontier {
                for (k, &v) in vars.iter().enumerate().skip(*start) {
                    if m.iter().all(|q| q.compatible(v, domain.kind())) {
                        let mut grown = m.clone();
                        grown.push(v);
                        next.push((k + 1, grown));
                    }
                }
            }
            monomials.extend(next.iter().map(|(_, m)| Certificate::from_pairs(m.iter().copied())));
            frontier = next;
        }
        MonomialBasis { domain, degree_cap, monomials }
    }

    pub fn domain(&self) -> Domain {
        self.domain
    }

    pub fn degree_cap(&self) -> usize {
        self.degree_cap
    }

    pub fn monomials(&self) -> &[Certificate] {
        &self.monomials
    }

    /// Column of the evaluation matrix for monomial `k`.
    pub fn column(&self, k: usize) -> Result<Vec<i64>> {
        let space = Space::of(self.domain)?;
        let m = &self.monomials[k];
        Ok(space.elements().iter().map(|x| x.satisfies(m) as i64).collect())
    }

    /// Rows are domain elements, columns are monomials.
    pub fn matrix(&self) -> Result<Vec<Vec<i64>>> {
        let cols: Vec<Vec<i64>> = (0..self.monomials.len()).map(|k| self.column(k)).collect::<Result<_>>()?;
        let rows = cols.first().map_or(0, Vec::len);
        Ok((0..rows).map(|r| cols.iter().map(|c| c[r]).collect()).collect())
    }
}

/// Exact span of the degree-`d` monomials of a domain.
#[derive(Debug)]
struct DegreeSpan {
    rows: RowSpace,
    test: SpanTest,
}

fn degree_span(domain: Domain, d: usize) -> Result<Arc<DegreeSpan>> {
    type Cache = Mutex<HashMap<(Domain, usize), Arc<DegreeSpan>>>;
    static CACHE: OnceLock<Cache> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(s) = cache.lock().unwrap().get(&(domain, d)) {
        return Ok(Arc::clone(s));
    }
    let space = Space::of(domain)?;
    let mut rows = match d {
        0 => RowSpace::new(space.len()),
        _ => degree_span(domain, d - 1)?.rows.clone(),
    };
    for m in MonomialBasis::new(domain, d).monomials().iter().filter(|m| m.len() == d) {
        if rows.is_full() {
            break;
        }
        let col: Vec<i64> = space.elements().iter().map(|x| x.satisfies(m) as i64).collect();
        rows.insert_int(&col);
    }
    let test = SpanTest::new(&rows);
    let span = Arc::new(DegreeSpan { rows, test });
    cache.lock().unwrap().insert((domain, d), Arc::clone(&span));
    Ok(span)
}

/// Dimension of the space of functions of degree at most `d`.
pub fn degree_space_dimension(domain: Domain, d: usize) -> Result<usize> {
    Ok(degree_span(domain, d)?.rows.rank())
}

/// Whether `f` is a polynomial of degree at most `d` in the variables `x_ij`.
pub fn degree_at_most(f: &BooleanFunction, d: usize) -> Result<bool> {
    if d == 0 || f.is_constant() {
        return Ok(f.is_constant());
    }
    let span = degree_span(f.domain(), d)?;
    Ok(span.test.contains_support(|k| f.truth[k]))
}

/// The least `d` such that `f` is a degree-`d` polynomial in the `x_ij`.
pub fn polynomial_degree(f: &BooleanFunction) -> Result<usize> {
    if f.is_constant() {
        return Ok(0);
    }
    let n = f.domain().n();
    for d in 1..n {
        if degree_at_most(f, d)? {
            return Ok(d);
        }
    }
    Err(Error::Inconsistency(format!("{f:?} is not a polynomial of degree at most {}", n - 1)))
}

/// Largest hypercube dimension handled by [`CubeFunction`].
pub const MAX_CUBE_ARITY: usize = 6;

/// A Boolean function on `{0,1}^k`, `k <= 6`.
///
/// Bit `x` of the table is the value at the point whose coordinate `y_i`
/// is bit `i - 1` of `x`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct CubeFunction {
    arity: usize,
    table: u64,
}

impl fmt::Debug for CubeFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CubeFunction(k={}, table={:#0w$b})", self.arity, self.table, w = (1 << self.arity) + 2)
    }
}

impl CubeFunction {
    pub fn new(arity: usize, table: u64) -> Result<Self> {
        if arity > MAX_CUBE_ARITY {
            return capacity(format!("cube arity {arity} exceeds {MAX_CUBE_ARITY}"));
        }
        if arity < MAX_CUBE_ARITY && table >> (1u32 << arity) != 0 {
            return usage(format!("table {table:#x} too wide for arity {arity}"));
        }
        Ok(CubeFunction { arity, table })
    }

    pub fn from_fn(arity: usize, f: impl Fn(u64) -> bool) -> Result<Self> {
        if arity > MAX_CUBE_ARITY {
            return capacity(format!("cube arity {arity} exceeds {MAX_CUBE_ARITY}"));
        }
        let table = (0..1u64 << arity).filter(|&x| f(x)).fold(0u64, |t, x| t | 1 << x);
        CubeFunction::new(arity, table)
    }

    pub fn constant(arity: usize, value: bool) -> Result<Self> {
        CubeFunction::from_fn(arity, |_| value)
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn table(&self) -> u64 {
        self.table
    }

    pub fn value(&self, point: u64) -> bool {
        self.table >> point & 1 == 1
    }

    /// Coefficients of the unique multilinear polynomial, indexed by monomial mask.
    pub fn multilinear_coefficients(&self) -> Vec<i64> {
        let mut c: Vec<i64> = (0..1u64 << self.arity).map(|x| self.value(x) as i64).collect();
        for i in 0..self.arity {
            for s in 0..c.len() {
                if s >> i & 1 == 1 {
                    c[s] -= c[s ^ (1 << i)];
                }
            }
        }
        c
    }
}

/// Degree of the multilinear interpolation of `g`.
pub fn cube_degree(g: &CubeFunction) -> usize {
    g.multilinear_coefficients()
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(s, _)| s.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// Number of coordinates whose flip changes `g(point)`.
pub fn sensitivity_at(g: &CubeFunction, point: u64) -> Result<usize> {
    if point >> g.arity != 0 {
        return usage(format!("point {point:#b} outside {{0,1}}^{}", g.arity));
    }
    Ok((0..g.arity).filter(|&i| g.value(point ^ 1 << i) != g.value(point)).count())
}

/// Largest arity accepted by [`degree2_sensitivity_scan`].
pub const MAX_SCAN_ARITY: usize = 5;

/// Monomial masks of degree at most `d`.
fn low_degree_masks(k: usize, d: u32) -> Vec<u64> {
    (0..1u64 << k).filter(|m| m.count_ones() <= d).collect()
}

/// Exact span of the multilinear monomials of degree at most 2 on `{0,1}^k`.
pub fn cube_degree2_span(k: usize) -> Result<RowSpace> {
    if k > MAX_SCAN_ARITY {
        return capacity(format!("arity {k} exceeds the scan limit {MAX_SCAN_ARITY}"));
    }
    let mut span = RowSpace::new(1 << k);
    for m in low_degree_masks(k, 2) {
        let v: Vec<i64> = (0..1u64 << k).map(|x| (x & m == m) as i64).collect();
        span.insert_int(&v);
    }
    Ok(span)
}

/// Searches for `g` of degree at most 2 on `{0,1}^k` with
/// `g(0) != g(e_1) = ... = g(e_s)`.
///
/// Tables with `g(0) = 0` are scanned first, each class in ascending table
/// order, and the first one in the degree-2 span is returned.
pub fn degree2_sensitivity_scan(k: usize, s: usize) -> Result<Option<CubeFunction>> {
    if s > k {
        return usage(format!("cannot require {s} sensitive coordinates out of {k}"));
    }
    let span = cube_degree2_span(k)?;
    let annihilator: Vec<Vec<i64>> = span
        .annihilator()
        .iter()
        .map(|y| {
            y.iter()
                .map(|c| i64::try_from(c).map_err(|_| Error::Inconsistency("annihilator entry overflow".into())))
                .collect::<Result<Vec<i64>>>()
        })
        .collect::<Result<_>>()?;
    let in_span = |table: u64| {
        annihilator.iter().all(|y| {
            let mut acc = 0i64;
            let mut t = table;
            while t != 0 {
                acc += y[t.trailing_zeros() as usize];
                t &= t - 1;
            }
            acc == 0
        })
    };

    let points = 1usize << k;
    let fixed: Vec<usize> = std::iter::once(0).chain((0..s).map(|i| 1 << i)).collect();
    let free: Vec<usize> = (0..points).filter(|p| !fixed.contains(p)).collect();
    for origin in [false, true] {
        // g(0) = origin, g(e_i) = !origin for i <= s
        let base = fixed.iter().enumerate().filter(|&(j, _)| (j == 0) == origin).fold(0u64, |t, (_, &p)| t | 1 << p);
        for counter in 0..1u64 << free.len() {
            let mut table = base;
            let mut c = counter;
            while c != 0 {
                table |= 1 << free[c.trailing_zeros() as usize];
                c &= c - 1;
            }
            if in_span(table) {
                return CubeFunction::new(k, table).map(Some);
            }
        }
    }
    Ok(None)
}

/// One coordinate of a lift: a transposition `(a b)` for permutations, or
/// for matchings the swap replacing base edges `{a, m(a)}, {b, m(b)}` by
/// `{a, m(b)}, {b, m(a)}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlipSpec(pub u8, pub u8);

/// `g(y) = f(base modified by the specs selected by y)`.
///
/// For permutations the point is `base ∘ τ_1^{y_1} ∘ ... ∘ τ_k^{y_k}`.
pub fn lift_to_cube(f: &BooleanFunction, base: &Element, specs: &[FlipSpec]) -> Result<CubeFunction> {
    let domain = f.domain();
    if !domain.contains(base) {
        return usage(format!("base {base} is not in {domain}"));
    }
    if specs.len() > MAX_CUBE_ARITY {
        return capacity(format!("{} flips exceed cube arity {MAX_CUBE_ARITY}", specs.len()));
    }
    let p = domain.points() as u8;
    let mut touched: Vec<u8> = Vec::new();
    for &FlipSpec(a, b) in specs {
        if a == 0 || b == 0 || a > p || b > p || a == b {
            return usage(format!("flip ({a} {b}) invalid on [{p}]"));
        }
        let pts = match base {
            Element::Sym(_) => vec![a, b],
            Element::Pm(m) => {
                if m.mate(a) == b {
                    return usage(format!("flip ({a} {b}) names a single base edge"));
                }
                vec![a, b, m.mate(a), m.mate(b)]
            }
        };
        for q in pts {
            if touched.contains(&q) {
                return usage("flip specs are not disjoint");
            }
            touched.push(q);
        }
    }
    let point = |y: u64| -> Result<Element> {
        match base {
            Element::Sym(alpha) => {
                let mut images = alpha.images().to_vec();
                for (i, &FlipSpec(a, b)) in specs.iter().enumerate() {
                    if y >> i & 1 == 1 {
                        images.swap(a as usize - 1, b as usize - 1);
                    }
                }
                Ok(Element::Sym(Permutation::new(images)?))
            }
            Element::Pm(m) => {
                let mut partner = m.partner().to_vec();
                for (i, &FlipSpec(a, b)) in specs.iter().enumerate() {
                    if y >> i & 1 == 1 {
                        let (ma, mb) = (m.mate(a), m.mate(b));
                        partner[a as usize - 1] = mb;
                        partner[mb as usize - 1] = a;
                        partner[b as usize - 1] = ma;
                        partner[ma as usize - 1] = b;
                    }
                }
                Ok(Element::Pm(PerfectMatching::new(partner)?))
            }
        }
    };
    let mut table = 0u64;
    for y in 0..1u64 << specs.len() {
        if f.eval(&point(y)?)? {
            table |= 1 << y;
        }
    }
    CubeFunction::new(specs.len(), table)
}

/// Embeds an element of the reduced domain into the coset of `pair`,
/// renumbering the remaining points in order.
pub fn lift_from_coset(domain: Domain, pair: Pair, inner: &Element) -> Result<Element> {
    let reduced = domain.reduced()?;
    if !reduced.contains(inner) {
        return usage(format!("{inner} is not in {reduced}"));
    }
    check_coset_pair(domain, pair)?;
    let (i, j) = (pair.0 as usize, pair.1 as usize);
    match inner {
        Element::Sym(beta) => {
            let n = domain.n();
            let sources: Vec<usize> = (1..=n).filter(|&s| s != i).collect();
            let targets: Vec<u8> = (1..=n as u8).filter(|&t| t as usize != j).collect();
            let mut images = vec![0u8; n];
            images[i - 1] = j as u8;
            for (k, &s) in sources.iter().enumerate() {
                images[s - 1] = targets[beta.images()[k] as usize - 1];
            }
            Ok(Element::Sym(Permutation::new(images)?))
        }
        Element::Pm(m) => {
            let p = domain.points();
            let rest: Vec<u8> = (1..=p as u8).filter(|&v| v as usize != i && v as usize != j).collect();
            let mut partner = vec![0u8; p];
            partner[i - 1] = j as u8;
            partner[j - 1] = i as u8;
            for (k, &v) in rest.iter().enumerate() {
                partner[v as usize - 1] = rest[m.partner()[k] as usize - 1];
            }
            Ok(Element::Pm(PerfectMatching::new(partner)?))
        }
    }
}

fn check_coset_pair(domain: Domain, pair: Pair) -> Result<()> {
    if domain.kind() == Kind::Pm && pair.0 == pair.1 {
        return usage(format!("the coset of {pair} is empty"));
    }
    if !domain.is_valid_pair(pair) {
        return usage(format!("{pair} is not a variable of {domain}"));
    }
    Ok(())
}

/// `f` restricted to the coset of `pair`, viewed on the reduced domain.
pub fn restrict_to_coset(f: &BooleanFunction, pair: Pair) -> Result<BooleanFunction> {
    let domain = f.domain();
    check_coset_pair(domain, pair)?;
    let pair = match domain.kind() {
        Kind::Sym => pair,
        Kind::Pm => Pair::edge(pair.0, pair.1),
    };
    let reduced = domain.reduced()?;
    let mut err = None;
    let g = BooleanFunction::from_fn(reduced, |beta| {
        match lift_from_coset(domain, pair, beta).and_then(|alpha| f.eval(&alpha)) {
            Ok(v) => v,
            Err(e) => {
                err.get_or_insert(e);
                false
            }
        }
    })?;
    match err {
        Some(e) => Err(e),
        None => Ok(g),
    }
}

/// The closed forms of Boolean degree-1 functions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "form", rename_all = "snake_case")]
pub enum Degree1Form {
    /// `Σ_{j∈J} x_ij` on `S_n`.
    RowDictator { i: u8, set: Vec<u8> },
    /// `Σ_{i∈I} x_ij` on `S_n`.
    ColumnDictator { j: u8, set: Vec<u8> },
    /// `Σ_{j∈J} x_ij` on `M_2n`.
    Dictator { i: u8, set: Vec<u8> },
    /// `x_ij + x_ik + x_jk`.
    Triangle { i: u8, j: u8, k: u8 },
    /// `1 - x_ij - x_ik - x_jk`.
    AntiTriangle { i: u8, j: u8, k: u8 },
}

impl Degree1Form {
    pub fn eval(&self, x: &Element) -> bool {
        let map = x.map();
        let at = |v: u8| map[v as usize - 1];
        match self {
            Degree1Form::RowDictator { i, set } | Degree1Form::Dictator { i, set } => set.contains(&at(*i)),
            Degree1Form::ColumnDictator { j, set } => set.iter().any(|&i| at(i) == *j),
            Degree1Form::Triangle { i, j, k } => at(*i) == *j || at(*i) == *k || at(*j) == *k,
            Degree1Form::AntiTriangle { i, j, k } => !(at(*i) == *j || at(*i) == *k || at(*j) == *k),
        }
    }

    fn matches(&self, f: &BooleanFunction, space: &Space) -> bool {
        space.elements().iter().enumerate().all(|(r, x)| self.eval(x) == f.value(r))
    }
}

/// Puts a degree-≤1 Boolean function into one of the closed forms.
///
/// Row forms are preferred over column forms and smaller indices over larger.
pub fn classify_degree1(f: &BooleanFunction) -> Result<Degree1Form> {
    if !degree_at_most(f, 1)? {
        return Err(Error::Classification(format!("{f:?} has degree greater than 1")));
    }
    let domain = f.domain();
    let space = Space::of(domain)?;
    let p = domain.points() as u8;
    // the value of f on the coset x_ij = 1, read off any member
    let set_for = |i: u8, column: bool| -> Vec<u8> {
        (1..=p)
            .filter(|&j| {
                let pair = if column { Pair(j, i) } else { Pair(i, j) };
                if domain.kind() == Kind::Pm && i == j {
                    return false;
                }
                space
                    .elements()
                    .iter()
                    .position(|x| x.has_pair(if domain.kind() == Kind::Pm { Pair::edge(pair.0, pair.1) } else { pair }))
                    .is_some_and(|r| f.value(r))
            })
            .collect()
    };
    let mut candidates = Vec::new();
    match domain.kind() {
        Kind::Sym => {
            for i in 1..=p {
                candidates.push(Degree1Form::RowDictator { i, set: set_for(i, false) });
            }
            for j in 1..=p {
                candidates.push(Degree1Form::ColumnDictator { j, set: set_for(j, true) });
            }
        }
        Kind::Pm => {
            for i in 1..=p {
                candidates.push(Degree1Form::Dictator { i, set: set_for(i, false) });
            }
            for i in 1..=p {
                for j in i + 1..=p {
                    for k in j + 1..=p {
                        candidates.push(Degree1Form::Triangle { i, j, k });
                    }
                }
            }
            for i in 1..=p {
                for j in i + 1..=p {
                    for k in j + 1..=p {
                        candidates.push(Degree1Form::AntiTriangle { i, j, k });
                    }
                }
            }
        }
    }
    candidates
        .into_iter()
        .find(|form| form.matches(f, &space))
        .ok_or_else(|| Error::Inconsistency(format!("degree-1 function {f:?} matches no closed form")))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sym(n: usize) -> Domain {
        Domain::sym(n).unwrap()
    }

    #[test]
    fn indicator_weights() {
        let id = Element::Sym(Permutation::identity(3));
        assert_eq!(BooleanFunction::indicator(sym(3), &[id.clone(), id]).unwrap().weight(), 1);
        let coset = BooleanFunction::coset(sym(4), &Certificate::sym([(1, 1), (2, 2)])).unwrap();
        assert_eq!(coset.weight(), 2);
        let all = Space::of(Domain::pm(3).unwrap()).unwrap().elements().to_vec();
        let f = BooleanFunction::indicator(Domain::pm(3).unwrap(), &all).unwrap();
        assert!(f.truth().all());
        let stranger = Element::Sym(Permutation::identity(4));
        assert!(matches!(BooleanFunction::indicator(sym(3), &[stranger]), Err(Error::Usage(_))));
    }

    #[test]
    fn degree_examples() {
        assert_eq!(polynomial_degree(&BooleanFunction::constant(sym(4), true).unwrap()).unwrap(), 0);
        let coset = BooleanFunction::coset(sym(4), &Certificate::sym([(1, 1), (2, 2)])).unwrap();
        assert_eq!(polynomial_degree(&coset).unwrap(), 2);
        let id = BooleanFunction::indicator(sym(4), &[Element::Sym(Permutation::identity(4))]).unwrap();
        assert!(!degree_at_most(&id, 2).unwrap());
        assert_eq!(polynomial_degree(&id).unwrap(), 3);
    }

    #[test]
    fn monomial_basis_shape() {
        let b = MonomialBasis::new(sym(3), 1);
        assert_eq!(b.monomials().len(), 10);
        let m = b.matrix().unwrap();
        assert_eq!((m.len(), m[0].len()), (6, 10));
        // every row has the constant and exactly three variables set
        assert!(m.iter().all(|row| row.iter().sum::<i64>() == 4));
        let pm = MonomialBasis::new(Domain::pm(3).unwrap(), 2);
        // 1 + 15 edges + 45 disjoint edge pairs
        assert_eq!(pm.monomials().len(), 61);
    }

    #[test]
    fn cube_examples() {
        // y1 y2 y3 + (1-y1)(1-y2)(1-y3)
        let g = CubeFunction::from_fn(3, |x| x == 0 || x == 7).unwrap();
        assert_eq!(cube_degree(&g), 2);
        assert_eq!(sensitivity_at(&g, 0).unwrap(), 3);
        let xor = CubeFunction::from_fn(2, |x| x.count_ones() == 1).unwrap();
        assert_eq!(cube_degree(&xor), 2);
        assert_eq!(cube_degree(&CubeFunction::constant(4, false).unwrap()), 0);
        let constant = CubeFunction::constant(4, true).unwrap();
        assert!((0..16).all(|p| sensitivity_at(&constant, p).unwrap() == 0));
        let dictator = CubeFunction::from_fn(4, |x| x & 1 == 1).unwrap();
        assert!((0..16).all(|p| sensitivity_at(&dictator, p).unwrap() == 1));
        assert!(sensitivity_at(&dictator, 16).is_err());
        assert!(CubeFunction::new(2, 0x10).is_err());
        assert!(matches!(CubeFunction::new(7, 0), Err(Error::Capacity(_))));
    }

    #[test]
    fn scan_examples() {
        assert_eq!(cube_degree2_span(4).unwrap().rank(), 11);
        assert_eq!(degree2_sensitivity_scan(4, 4).unwrap(), None);
        let g = degree2_sensitivity_scan(3, 3).unwrap().unwrap();
        assert!(cube_degree(&g) <= 2);
        assert_eq!(sensitivity_at(&g, 0).unwrap(), 3);
        let x = degree2_sensitivity_scan(2, 2).unwrap().unwrap();
        assert_eq!(x.table(), 0b0110);
        assert!(matches!(degree2_sensitivity_scan(6, 4), Err(Error::Capacity(_))));
        assert!(matches!(degree2_sensitivity_scan(3, 4), Err(Error::Usage(_))));
    }

    #[test]
    fn no_full_sensitivity_at_any_point() {
        for table in 0..1u64 << 16 {
            let g = CubeFunction::new(4, table).unwrap();
            if cube_degree(&g) <= 2 {
                assert!((0..16).all(|p| sensitivity_at(&g, p).unwrap() < 4), "{g:?}");
            }
        }
    }

    #[test]
    fn scan_agrees_with_brute_force_on_three_bits() {
        for s in 0..=3 {
            let found = degree2_sensitivity_scan(3, s).unwrap();
            let brute = [false, true].into_iter().find_map(|origin| {
                (0..256u64).find(|&t| {
                    let g = CubeFunction::new(3, t).unwrap();
                    g.value(0) == origin && (0..s).all(|i| g.value(1 << i) != origin) && cube_degree(&g) <= 2
                })
            });
            assert_eq!(found.map(|g| g.table()), brute);
        }
    }

    #[test]
    fn lift_examples() {
        let s8 = sym(8);
        let specs = [FlipSpec(1, 2), FlipSpec(3, 4), FlipSpec(5, 6), FlipSpec(7, 8)];
        let id = Element::Sym(Permutation::identity(8));
        let one = BooleanFunction::constant(s8, true).unwrap();
        assert_eq!(lift_to_cube(&one, &id, &specs).unwrap(), CubeFunction::constant(4, true).unwrap());
        let fixes1 = BooleanFunction::coset(s8, &Certificate::sym([(1, 1)])).unwrap();
        let g = lift_to_cube(&fixes1, &id, &specs).unwrap();
        assert_eq!(g, CubeFunction::from_fn(4, |y| y & 1 == 0).unwrap());
        let sends12 = BooleanFunction::coset(s8, &Certificate::sym([(1, 2)])).unwrap();
        let g = lift_to_cube(&sends12, &id, &specs).unwrap();
        assert_eq!(g, CubeFunction::from_fn(4, |y| y & 1 == 1).unwrap());
        assert!(lift_to_cube(&one, &id, &[FlipSpec(1, 2), FlipSpec(2, 3)]).is_err());

        let m = Element::Pm(PerfectMatching::consecutive(4));
        let pm = Domain::pm(4).unwrap();
        let e12 = BooleanFunction::coset(pm, &Certificate::pm([(1, 2)])).unwrap();
        let g = lift_to_cube(&e12, &m, &[FlipSpec(1, 3), FlipSpec(5, 7)]).unwrap();
        assert_eq!(g, CubeFunction::from_fn(2, |y| y & 1 == 0).unwrap());
        assert!(lift_to_cube(&e12, &m, &[FlipSpec(1, 2)]).is_err());
        assert!(lift_to_cube(&e12, &m, &[FlipSpec(1, 3), FlipSpec(4, 5)]).is_err());
    }

    #[test]
    fn restriction_examples() {
        let s5 = sym(5);
        let u11 = BooleanFunction::coset(s5, &Certificate::sym([(1, 1)])).unwrap();
        let r = restrict_to_coset(&u11, Pair(1, 1)).unwrap();
        assert_eq!(r.len(), 24);
        assert!(r.truth().all());

        let two = BooleanFunction::coset(s5, &Certificate::sym([(1, 1), (2, 2)])).unwrap();
        let r = restrict_to_coset(&two, Pair(1, 1)).unwrap();
        let expected = BooleanFunction::coset(sym(4), &Certificate::sym([(1, 1)])).unwrap();
        assert_eq!(r, expected);
        assert_eq!(polynomial_degree(&r).unwrap(), 1);

        let pm = Domain::pm(3).unwrap();
        let f = BooleanFunction::constant(pm, true).unwrap();
        assert!(restrict_to_coset(&f, Pair(2, 2)).is_err());
        assert_eq!(restrict_to_coset(&f, Pair(5, 2)).unwrap().len(), 3);
    }

    #[test]
    fn lift_from_coset_renumbers_in_order() {
        let beta = Element::Sym(Permutation::new(vec![2, 1, 3]).unwrap());
        let alpha = lift_from_coset(sym(4), Pair(2, 4), &beta).unwrap();
        // sources 1,3,4 -> targets 1,2,3 via beta = [2,1,3]
        assert_eq!(alpha.map(), &[2, 4, 1, 3]);
        let m = Element::Pm(PerfectMatching::from_edges(2, &[(1, 3), (2, 4)]).unwrap());
        let lifted = lift_from_coset(Domain::pm(3).unwrap(), Pair(2, 5), &m).unwrap();
        // remaining points 1,3,4,6 renumbered 1..4
        assert_eq!(lifted, Element::Pm(PerfectMatching::from_edges(3, &[(2, 5), (1, 4), (3, 6)]).unwrap()));
    }

    #[test]
    fn classify_examples() {
        let u11 = BooleanFunction::coset(sym(4), &Certificate::sym([(1, 1)])).unwrap();
        assert_eq!(classify_degree1(&u11).unwrap(), Degree1Form::RowDictator { i: 1, set: vec![1] });
        let zero = BooleanFunction::constant(sym(4), false).unwrap();
        assert_eq!(classify_degree1(&zero).unwrap(), Degree1Form::RowDictator { i: 1, set: vec![] });

        let m6 = Domain::pm(3).unwrap();
        let tri = BooleanFunction::from_fn(m6, |x| {
            x.has_pair(Pair(1, 2)) || x.has_pair(Pair(1, 3)) || x.has_pair(Pair(2, 3))
        })
        .unwrap();
        assert_eq!(classify_degree1(&tri).unwrap(), Degree1Form::Triangle { i: 1, j: 2, k: 3 });
        assert_eq!(classify_degree1(&tri.complement()).unwrap(), Degree1Form::AntiTriangle { i: 1, j: 2, k: 3 });

        let id = BooleanFunction::indicator(sym(4), &[Element::Sym(Permutation::identity(4))]).unwrap();
        assert!(matches!(classify_degree1(&id), Err(Error::Classification(_))));
    }

    #[test]
    fn raw_format_roundtrip() {
        let mut rng = rand::thread_rng();
        let f = BooleanFunction::random(Domain::pm(3).unwrap(), 0.5, &mut rng).unwrap();
        let raw = f.to_raw();
        assert_eq!(BooleanFunction::from_raw(&raw).unwrap(), f);
        let bad = RawFunction { bits: "AAAAAA==".into(), ..raw };
        assert!(matches!(BooleanFunction::from_raw(&bad), Err(Error::Parse(_))));
    }
}
