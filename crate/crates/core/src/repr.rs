//! Young tableaux, the `e` and `χ` functions, and isotypic decomposition.
//!
//! For `S_n` the component of shape `λ` is spanned by `χ_{s,t}` over pairs of
//! tableaux of shape `λ`; for `M_2n` it is spanned by `χ_t` over tableaux of
//! shape `2λ`. Both are built exactly and projected onto by Gram–Schmidt.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::boolfn::{polynomial_degree, restrict_to_coset, BooleanFunction};
use crate::domains::{Domain, Element, Kind, Pair, PerfectMatching, Permutation, Space};
use crate::error::{capacity, usage, Error, Result};
use crate::linalg::{rational_string, OrthoBasis, Rational};

/// Largest domain the projection routines accept.
pub const PROJECTION_LIMIT: usize = 720;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() || parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return usage(format!("{parts:?} is not a partition"));
        }
        Ok(Partition(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn n(&self) -> usize {
        self.0.iter().sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn first(&self) -> usize {
        self.0[0]
    }

    pub fn doubled(&self) -> Partition {
        Partition(self.0.iter().map(|p| 2 * p).collect())
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Vec<usize> {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.0.iter().join(","))
    }
}

impl std::str::FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches(['(', '[']).trim_end_matches([')', ']']);
        let parts = inner
            .split(',')
            .map(|p| p.trim().parse::<usize>().map_err(|e| Error::Parse(format!("partition {s:?}: {e}"))))
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// All partitions of `n`, largest first part first.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn go(rest: usize, cap: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(prefix.clone()));
            return;
        }
        for p in (1..=rest.min(cap)).rev() {
            prefix.push(p);
            go(rest - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        go(n, n, &mut Vec::new(), &mut out);
    }
    out
}

/// A filling of rows by `1..=N`, each used once.
///
/// Rows need not be weakly decreasing in length: the row-moving construction
/// produces composition shapes, and columns are read off positions.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<u8>>", into = "Vec<Vec<u8>>")]
pub struct YoungTableau {
    rows: Vec<Vec<u8>>,
}

impl YoungTableau {
    pub fn new(rows: Vec<Vec<u8>>) -> Result<Self> {
        if rows.iter().any(Vec::is_empty) {
            return usage("tableau rows must be nonempty");
        }
        let mut seen: Vec<u8> = rows.concat();
        seen.sort_unstable();
        if seen.iter().enumerate().any(|(k, &v)| v as usize != k + 1) {
            return usage(format!("tableau {rows:?} must contain 1..={} once each", seen.len()));
        }
        Ok(YoungTableau { rows })
    }

    /// Fills `shape` row by row from `entries`.
    pub fn fill(shape: &[usize], entries: &[u8]) -> Result<Self> {
        if shape.iter().sum::<usize>() != entries.len() {
            return usage("filling does not match shape size");
        }
        let mut rest = entries;
        let rows = shape
            .iter()
            .map(|&len| {
                let (row, tail) = rest.split_at(len);
                rest = tail;
                row.to_vec()
            })
            .collect();
        YoungTableau::new(rows)
    }

    pub fn rows(&self) -> &[Vec<u8>] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn shape(&self) -> Vec<usize> {
        self.rows.iter().map(Vec::len).collect()
    }

    pub fn partition(&self) -> Result<Partition> {
        Partition::new(self.shape())
    }

    pub fn columns(&self) -> Vec<Vec<u8>> {
        let width = self.rows.iter().map(Vec::len).max().unwrap_or(0);
        (0..width).map(|c| self.rows.iter().filter_map(|r| r.get(c).copied()).collect()).collect()
    }

    /// `row_of()[v - 1]` is the row index holding `v`.
    pub fn row_of(&self) -> Vec<usize> {
        let mut out = vec![0; self.size()];
        for (r, row) in self.rows.iter().enumerate() {
            for &v in row {
                out[v as usize - 1] = r;
            }
        }
        out
    }

    /// The tableau with every entry `v` replaced by `images[v - 1]`.
    pub fn relabel(&self, images: &[u8]) -> YoungTableau {
        YoungTableau { rows: self.rows.iter().map(|r| r.iter().map(|&v| images[v as usize - 1]).collect()).collect() }
    }

    pub fn is_standard(&self) -> bool {
        self.partition().is_ok()
            && self.rows.iter().all(|r| r.windows(2).all(|w| w[0] < w[1]))
            && self.columns().iter().all(|c| c.windows(2).all(|w| w[0] < w[1]))
    }

    /// Appends the row `{N+1}` for permutations or `{N+1, N+2}` for matchings.
    pub fn extend_fixed_row(&self, kind: Kind) -> YoungTableau {
        let next = self.size() as u8 + 1;
        let mut rows = self.rows.clone();
        rows.push(match kind {
            Kind::Sym => vec![next],
            Kind::Pm => vec![next, next + 1],
        });
        YoungTableau { rows }
    }
}

impl TryFrom<Vec<Vec<u8>>> for YoungTableau {
    type Error = Error;

    fn try_from(rows: Vec<Vec<u8>>) -> Result<Self> {
        YoungTableau::new(rows)
    }
}

impl From<YoungTableau> for Vec<Vec<u8>> {
    fn from(t: YoungTableau) -> Vec<Vec<u8>> {
        t.rows
    }
}

impl fmt::Display for YoungTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.rows.iter().map(|r| format!("[{}]", r.iter().join(","))).join(","))
    }
}

/// `(s', t')` with the singleton row `{n}` appended to both.
pub fn extend_tableau_fixed_row(s: &YoungTableau, t: &YoungTableau) -> Result<(YoungTableau, YoungTableau)> {
    if s.shape() != t.shape() {
        return usage(format!("shapes of {s} and {t} differ"));
    }
    Ok((s.extend_fixed_row(Kind::Sym), t.extend_fixed_row(Kind::Sym)))
}

/// `t^r`: the first two entries of row `r` (1-based) move to a new last row.
/// Row `R + 1` gives `t` back.
pub fn tableau_move_row(t: &YoungTableau, r: usize) -> Result<YoungTableau> {
    let rows = t.rows();
    if r == rows.len() + 1 {
        return Ok(t.clone());
    }
    if r == 0 || r > rows.len() {
        return usage(format!("row {r} out of range 1..={}", rows.len() + 1));
    }
    let row = &rows[r - 1];
    if row.len() < 2 || row.len() % 2 == 1 {
        return usage(format!("row {r} of {t} has odd length {}", row.len()));
    }
    let mut out: Vec<Vec<u8>> = Vec::with_capacity(rows.len() + 1);
    for (k, other) in rows.iter().enumerate() {
        if k + 1 != r {
            out.push(other.clone());
        } else if row.len() > 2 {
            out.push(row[2..].to_vec());
        }
    }
    out.push(row[..2].to_vec());
    YoungTableau::new(out)
}

/// Standard tableaux of a shape, in row-major lexicographic order.
pub fn standard_tableaux(shape: &Partition) -> Vec<YoungTableau> {
    fn go(shape: &[usize], rows: &mut Vec<Vec<u8>>, next: u8, total: u8, out: &mut Vec<YoungTableau>) {
        if next > total {
            out.push(YoungTableau { rows: rows.clone() });
            return;
        }
        for r in 0..shape.len() {
            let len = rows[r].len();
            if len < shape[r] && (r == 0 || rows[r - 1].len() > len) {
                rows[r].push(next);
                go(shape, rows, next + 1, total, out);
                rows[r].pop();
            }
        }
    }
    let mut out = Vec::new();
    let mut rows = vec![Vec::new(); shape.len()];
    go(shape.parts(), &mut rows, 1, shape.n() as u8, &mut out);
    out.sort();
    out
}

/// All fillings of a shape, in row-major lexicographic order.
pub fn fillings(shape: &[usize]) -> impl Iterator<Item = YoungTableau> + '_ {
    let n = shape.iter().sum::<usize>() as u8;
    (1..=n).permutations(n as usize).map(move |p| YoungTableau::fill(shape, &p).expect("permutation fills shape"))
}

/// An element of the column stabilizer of a tableau, with its sign.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SignedColumnPermutation {
    /// `assignment[v - 1]` is the image of entry `v`.
    pub assignment: Vec<u8>,
    pub sign: i8,
}

fn parity_sign(images: &[usize]) -> i8 {
    let inversions = (0..images.len())
        .flat_map(|a| (a + 1..images.len()).map(move |b| (a, b)))
        .filter(|&(a, b)| images[a] > images[b])
        .count();
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Every permutation moving entries only within the columns of `t`.
/// The count is the product of the factorials of the column lengths.
pub fn column_stabilizer(t: &YoungTableau) -> Vec<SignedColumnPermutation> {
    let columns = t.columns();
    let per_column: Vec<Vec<(Vec<usize>, i8)>> = columns
        .iter()
        .map(|c| {
            (0..c.len())
                .permutations(c.len())
                .map(|p| {
                    let s = parity_sign(&p);
                    (p, s)
                })
                .collect()
        })
        .collect();
    per_column
        .iter()
        .map(|v| v.iter())
        .multi_cartesian_product()
        .map(|choice| {
            let mut assignment: Vec<u8> = (1..=t.size() as u8).collect();
            let mut sign = 1;
            for (col, (p, s)) in columns.iter().zip(choice) {
                for (k, &q) in p.iter().enumerate() {
                    assignment[col[k] as usize - 1] = col[q];
                }
                sign *= s;
            }
            SignedColumnPermutation { assignment, sign }
        })
        .collect()
}

/// `e_{s,t}(α) = 1` iff `α` maps row `k` of `s` into row `k` of `t` for all `k`.
pub fn eval_e_sym(s: &YoungTableau, t: &YoungTableau, alpha: &Permutation) -> Result<bool> {
    if s.shape() != t.shape() {
        return usage(format!("shapes of {s} and {t} differ"));
    }
    if alpha.n() != s.size() {
        return usage(format!("{alpha:?} is not a permutation of [{}]", s.size()));
    }
    let (rs, rt) = (s.row_of(), t.row_of());
    Ok((1..=alpha.n() as u8).all(|i| rs[i as usize - 1] == rt[alpha.apply(i) as usize - 1]))
}

/// `e_t(m) = 1` iff every edge of `m` lies inside a row of `t`.
pub fn eval_e_pm(t: &YoungTableau, m: &PerfectMatching) -> Result<bool> {
    check_even_rows(t)?;
    if m.partner().len() != t.size() {
        return usage(format!("matching on {} points against a tableau of size {}", m.partner().len(), t.size()));
    }
    let rt = t.row_of();
    Ok(m.partner().iter().enumerate().all(|(k, &j)| rt[k] == rt[j as usize - 1]))
}

fn check_even_rows(t: &YoungTableau) -> Result<()> {
    if let Some(r) = t.rows().iter().position(|r| r.len() % 2 == 1) {
        return usage(format!("row {} of {t} has odd length", r + 1));
    }
    Ok(())
}

/// Perfect matchings of an even set of points.
fn matchings_of(points: &[u8]) -> Vec<Vec<(u8, u8)>> {
    let Some((&first, rest)) = points.split_first() else {
        return vec![Vec::new()];
    };
    let mut out = Vec::new();
    for k in 0..rest.len() {
        let others: Vec<u8> = rest.iter().enumerate().filter(|&(j, _)| j != k).map(|(_, &v)| v).collect();
        for mut m in matchings_of(&others) {
            m.insert(0, (first, rest[k]));
            out.push(m);
        }
    }
    out
}

/// Ranks of the permutations sending row `k` of `s` onto row `k` of `u`.
fn e_support_sym(domain: Domain, s: &YoungTableau, u: &YoungTableau) -> Result<Vec<usize>> {
    let n = s.size();
    let blocks: Vec<Vec<Vec<u8>>> =
        u.rows().iter().map(|r| r.iter().copied().permutations(r.len()).collect()).collect();
    let mut out = Vec::new();
    for choice in blocks.iter().map(|b| b.iter()).multi_cartesian_product() {
        let mut images = vec![0u8; n];
        for (src, dst) in s.rows().iter().zip(choice) {
            for (&i, &j) in src.iter().zip(dst) {
                images[i as usize - 1] = j;
            }
        }
        out.push(domain.rank(&Element::Sym(Permutation::new(images)?))? as usize);
    }
    Ok(out)
}

/// Ranks of the matchings whose edges stay inside the rows of `u`.
fn e_support_pm(domain: Domain, u: &YoungTableau) -> Result<Vec<usize>> {
    let blocks: Vec<Vec<Vec<(u8, u8)>>> = u.rows().iter().map(|r| matchings_of(r)).collect();
    let mut out = Vec::new();
    for choice in blocks.iter().map(|b| b.iter()).multi_cartesian_product() {
        let edges: Vec<(u8, u8)> = choice.into_iter().flatten().copied().collect();
        let m = PerfectMatching::from_edges(domain.n(), &edges)?;
        out.push(domain.rank(&Element::Pm(m))? as usize);
    }
    Ok(out)
}

/// `χ_{s,t} = Σ_{π ∈ C(t)} (−1)^π e_{s,t^π}` as a vector over `S_n` by rank.
pub fn chi_vector_sym(s: &YoungTableau, t: &YoungTableau) -> Result<Vec<i64>> {
    if s.shape() != t.shape() {
        return usage(format!("shapes of {s} and {t} differ"));
    }
    let domain = Domain::sym(s.size())?;
    check_projection_size(domain)?;
    let mut out = vec![0i64; domain.size() as usize];
    for pi in column_stabilizer(t) {
        for k in e_support_sym(domain, s, &t.relabel(&pi.assignment))? {
            out[k] += pi.sign as i64;
        }
    }
    Ok(out)
}

/// `χ_t = Σ_{π ∈ C(t)} (−1)^π e_{t^π}` as a vector over `M_2n` by rank.
pub fn chi_vector_pm(t: &YoungTableau) -> Result<Vec<i64>> {
    check_even_rows(t)?;
    let domain = Domain::pm(t.size() / 2)?;
    check_projection_size(domain)?;
    let mut out = vec![0i64; domain.size() as usize];
    for pi in column_stabilizer(t) {
        for k in e_support_pm(domain, &t.relabel(&pi.assignment))? {
            out[k] += pi.sign as i64;
        }
    }
    Ok(out)
}

/// Fails with the first entry of `chi` outside `{−1, 0, 1}`.
pub fn check_chi_range(domain: Domain, chi: &[i64]) -> Result<()> {
    match chi.iter().position(|v| v.abs() > 1) {
        None => Ok(()),
        Some(k) => {
            let x = Space::of(domain)?.element(k).clone();
            Err(Error::Inconsistency(format!("χ takes the value {} at {x}", chi[k])))
        }
    }
}

fn check_projection_size(domain: Domain) -> Result<()> {
    if domain.size() > PROJECTION_LIMIT as u64 {
        return capacity(format!(
            "{domain} has {} elements, above the projection limit {PROJECTION_LIMIT}",
            domain.size()
        ));
    }
    Ok(())
}

/// Dimension of the component of shape `λ`: `f_λ²` for permutations, `f_{2λ}`
/// for matchings, with `f` counted by enumerating standard tableaux.
pub fn component_dimension(kind: Kind, lambda: &Partition) -> usize {
    match kind {
        Kind::Sym => standard_tableaux(lambda).len().pow(2),
        Kind::Pm => standard_tableaux(&lambda.doubled()).len(),
    }
}

/// Generators of the `λ` component: standard tableaux first, then every
/// filling in lexicographic order.
fn generators(domain: Domain, lambda: &Partition) -> Box<dyn Iterator<Item = Result<Vec<i64>>>> {
    match domain.kind() {
        Kind::Sym => {
            let std = standard_tableaux(lambda);
            let shape = lambda.parts().to_vec();
            let first = std.clone().into_iter().cartesian_product(std).map(|(s, t)| chi_vector_sym(&s, &t));
            let shape2 = shape.clone();
            let rest = fillings_owned(shape)
                .flat_map(move |s| fillings_owned(shape2.clone()).map(move |t| (s.clone(), t)))
                .map(|(s, t)| chi_vector_sym(&s, &t));
            Box::new(first.chain(rest))
        }
        Kind::Pm => {
            let doubled = lambda.doubled();
            let first = standard_tableaux(&doubled).into_iter().map(|t| chi_vector_pm(&t));
            let rest = fillings_owned(doubled.parts().to_vec()).map(|t| chi_vector_pm(&t));
            Box::new(first.chain(rest))
        }
    }
}

fn fillings_owned(shape: Vec<usize>) -> impl Iterator<Item = YoungTableau> {
    let n = shape.iter().sum::<usize>() as u8;
    (1..=n).permutations(n as usize).map(move |p| YoungTableau::fill(&shape, &p).expect("permutation fills shape"))
}

fn columns_increase(t: &YoungTableau) -> bool {
    t.columns().iter().all(|c| c.windows(2).all(|w| w[0] < w[1]))
}

fn check_lambda(domain: Domain, lambda: &Partition) -> Result<()> {
    if lambda.n() != domain.n() {
        return usage(format!("{lambda} is not a partition of {}", domain.n()));
    }
    Ok(())
}

/// Orthogonal basis of the `λ` component, cached per domain.
fn component_basis(domain: Domain, lambda: &Partition) -> Result<Arc<OrthoBasis>> {
    type Cache = Mutex<HashMap<(Domain, Partition), Arc<OrthoBasis>>>;
    static CACHE: OnceLock<Cache> = OnceLock::new();
    check_lambda(domain, lambda)?;
    check_projection_size(domain)?;
    let cache = CACHE.get_or_init(Default::default);
    if let Some(b) = cache.lock().unwrap().get(&(domain, lambda.clone())) {
        return Ok(Arc::clone(b));
    }
    let dimension = component_dimension(domain.kind(), lambda);
    let mut basis = OrthoBasis::new(domain.size() as usize);
    for chi in generators(domain, lambda) {
        if basis.rank() == dimension {
            break;
        }
        basis.insert_i64(&chi?);
    }
    if basis.rank() != dimension {
        return Err(Error::Inconsistency(format!(
            "generators of {lambda} on {domain} span {} dimensions, expected {dimension}",
            basis.rank()
        )));
    }
    let basis = Arc::new(basis);
    cache.lock().unwrap().insert((domain, lambda.clone()), Arc::clone(&basis));
    Ok(basis)
}

/// Rank of the full generator set of shape `λ`, with no early stop.
///
/// `χ_{t^π} = ±χ_t` for `π` in the column stabilizer of `t`, so only fillings
/// with increasing columns are visited; repeated vectors are inserted once.
pub fn generator_rank(domain: Domain, lambda: &Partition) -> Result<usize> {
    check_lambda(domain, lambda)?;
    check_projection_size(domain)?;
    let dim = domain.size() as usize;
    let all: Box<dyn Iterator<Item = Result<Vec<i64>>>> = match domain.kind() {
        Kind::Sym => {
            let shape = lambda.parts().to_vec();
            let ts: Vec<YoungTableau> = fillings(&shape).filter(columns_increase).collect();
            Box::new(fillings_owned(shape).cartesian_product(ts).map(|(s, t)| chi_vector_sym(&s, &t)))
        }
        Kind::Pm => Box::new(
            fillings_owned(lambda.doubled().parts().to_vec()).filter(columns_increase).map(|t| chi_vector_pm(&t)),
        ),
    };
    let mut seen = std::collections::HashSet::new();
    let mut basis = OrthoBasis::new(dim);
    for chi in all {
        let mut chi = chi?;
        if chi.iter().find(|&&v| v != 0).is_some_and(|&v| v < 0) {
            chi.iter_mut().for_each(|v| *v = -*v);
        }
        if basis.rank() < dim && seen.insert(chi.clone()) {
            basis.insert_i64(&chi);
        }
    }
    Ok(basis.rank())
}

#[derive(Clone, Debug, PartialEq)]
pub struct IsotypicComponent {
    pub partition: Partition,
    pub vector: Vec<Rational>,
    pub norm_sq: Rational,
    pub dimension: usize,
}

impl IsotypicComponent {
    pub fn is_zero(&self) -> bool {
        self.norm_sq.is_zero()
    }

    pub fn report(&self) -> IsotypicReport {
        IsotypicReport {
            lambda: self.partition.parts().to_vec(),
            norm_sq: rational_string(&self.norm_sq),
            dimension: self.dimension,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsotypicReport {
    pub lambda: Vec<usize>,
    pub norm_sq: String,
    pub dimension: usize,
}

/// Orthogonal projection of an integer vector onto the `λ` component.
pub fn project_vector(domain: Domain, lambda: &Partition, v: &[BigInt]) -> Result<IsotypicComponent> {
    let basis = component_basis(domain, lambda)?;
    if v.len() != domain.size() as usize {
        return usage(format!("vector of length {} over {domain}", v.len()));
    }
    Ok(IsotypicComponent {
        partition: lambda.clone(),
        vector: basis.project(v),
        norm_sq: basis.projected_norm_sq(v),
        dimension: basis.rank(),
    })
}

pub fn isotypic_project(f: &BooleanFunction, lambda: &Partition) -> Result<IsotypicComponent> {
    let v: Vec<BigInt> = f.truth().iter().map(|b| BigInt::from(*b as u8)).collect();
    project_vector(f.domain(), lambda, &v)
}

/// Components for every partition of `n`, in [`partitions_of`] order.
pub fn isotypic_decomposition(f: &BooleanFunction) -> Result<Vec<IsotypicComponent>> {
    partitions_of(f.domain().n()).iter().map(|l| isotypic_project(f, l)).collect()
}

/// `max (n − λ₁)` over the nonzero components; 0 for the zero function.
pub fn spectral_degree(f: &BooleanFunction) -> Result<usize> {
    let n = f.domain().n();
    let v: Vec<BigInt> = f.truth().iter().map(|b| BigInt::from(*b as u8)).collect();
    // partitions_of lists small n − λ₁ first, so scan from the back
    for lambda in partitions_of(n).iter().rev() {
        let basis = component_basis(f.domain(), lambda)?;
        if !basis.projected_norm_sq(&v).is_zero() {
            return Ok(n - lambda.first());
        }
    }
    Ok(0)
}

fn inner(f: &BooleanFunction, chi: &[i64]) -> i64 {
    f.ones().map(|k| chi[k]).sum()
}

fn check_supported_in(f: &BooleanFunction, pair: Pair) -> Result<()> {
    let space = Space::of(f.domain())?;
    if let Some(k) = f.ones().find(|&k| !space.element(k).has_pair(pair)) {
        return Err(Error::Precondition(format!("f is 1 at {} outside the coset of {pair}", space.element(k))));
    }
    Ok(())
}

/// Both sides of `⟨f, χ_{s',t'}⟩ = ⟨f|, χ_{s,t}⟩` for `f` supported on
/// `α(n) = n`, where `f|` is the restriction to that coset.
pub fn sym_extension_identity(f: &BooleanFunction, s: &YoungTableau, t: &YoungTableau) -> Result<(i64, i64)> {
    let domain = f.domain();
    let n = domain.n();
    if domain.kind() != Kind::Sym || s.size() + 1 != n {
        return usage(format!("tableaux of size {} do not extend to {domain}", s.size()));
    }
    let pair = Pair(n as u8, n as u8);
    check_supported_in(f, pair)?;
    let (s2, t2) = extend_tableau_fixed_row(s, t)?;
    let restricted = restrict_to_coset(f, pair)?;
    Ok((inner(f, &chi_vector_sym(&s2, &t2)?), inner(&restricted, &chi_vector_sym(s, t)?)))
}

/// The matching-scheme identity `⟨f, χ_{t'}⟩ = (ℓ+1)⟨f|, χ_t⟩`, evaluated
/// together with the row-maximality condition under which it is claimed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PmIdentity {
    pub extended: i64,
    pub restricted: i64,
    /// Rows of `t` of length 2.
    pub ell: usize,
    /// `λ₁ = (n−1) − deg f|`, `⟨f|, χ_t⟩ ≠ 0`, and `f|` has no component on a
    /// shape with the same first row and more rows than `t`.
    pub side_condition: bool,
}

impl PmIdentity {
    pub fn holds(&self) -> bool {
        self.extended == (self.ell as i64 + 1) * self.restricted
    }
}

pub fn pm_extension_identity(f: &BooleanFunction, t: &YoungTableau) -> Result<PmIdentity> {
    let domain = f.domain();
    let n = domain.n();
    if domain.kind() != Kind::Pm || t.size() + 2 != 2 * n {
        return usage(format!("tableau of size {} does not extend to {domain}", t.size()));
    }
    let half = Partition::new(t.shape().iter().map(|l| l / 2).collect()).and_then(|p| {
        check_even_rows(t)?;
        Ok(p)
    })?;
    let pair = Pair::edge(2 * n as u8 - 1, 2 * n as u8);
    check_supported_in(f, pair)?;
    let restricted = restrict_to_coset(f, pair)?;
    let extended = inner(f, &chi_vector_pm(&t.extend_fixed_row(Kind::Pm))?);
    let inner_t = inner(&restricted, &chi_vector_pm(t)?);
    let ell = t.rows().iter().filter(|r| r.len() == 2).count();

    let d = polynomial_degree(&restricted)?;
    let mut side_condition = inner_t != 0 && half.first() + d == n - 1;
    if side_condition {
        for mu in partitions_of(n - 1) {
            if mu.first() == half.first() && mu.len() > half.len() && !isotypic_project(&restricted, &mu)?.is_zero() {
                side_condition = false;
                break;
            }
        }
    }
    Ok(PmIdentity { extended, restricted: inner_t, ell, side_condition })
}
