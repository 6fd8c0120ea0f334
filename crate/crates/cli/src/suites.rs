//! Randomized and exhaustive invariant suites.
//!
//! Each suite returns its verdict and a JSON evidence payload. The counts
//! are parameters so the `properties` subcommand can run a quick version
//! and the acceptance target the full one.

use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::Rng;
use serde_json::{json, Value};

use twocoset::boolfn::{
    classify_degree1, cube_degree, cube_degree2_span, degree2_sensitivity_scan, degree_at_most, polynomial_degree,
    restrict_to_coset, sensitivity_at, BooleanFunction, CubeFunction,
};
use twocoset::cert::{
    bound_T, bound_T_product, certificate_complexity, check_cover_certificates, check_extended_reduction,
    check_pairwise_certificate_intersection, complete_avoiding, cover_from_certificate, min_certificate, Certificate,
    ExtendedCertificate,
};
use twocoset::clique::{
    build_graph, enumerate_maximum_cliques, max_clique_size, verify_uniqueness, BitGraph, CliqueOptions,
};
use twocoset::linalg::{rational_dot, Rational};
use twocoset::repr::{isotypic_decomposition, partitions_of, spectral_degree, sym_extension_identity, YoungTableau};
use twocoset::sample::{last_pair, low_degree_in_coset, random_certificate, random_element, seeded};
use twocoset::{Domain, Element, Kind, Pair, Result, Space};

pub type Outcome = Result<(bool, Value)>;

fn domains(spec: &[(Kind, usize)]) -> Result<Vec<Domain>> {
    spec.iter().map(|&(k, n)| Domain::new(k, n)).collect()
}

/// Rank and unrank are inverse and agree with enumeration order.
pub fn rank_unrank(spec: &[(Kind, usize)]) -> Outcome {
    let mut rows = Vec::new();
    let mut ok = true;
    for d in domains(spec)? {
        let space = Space::of(d)?;
        let mut bad = 0usize;
        for (k, x) in space.elements().iter().enumerate() {
            if d.rank(x)? != k as u64 || &d.unrank(k as u64)? != x {
                bad += 1;
            }
        }
        ok &= bad == 0 && space.len() as u64 == d.size();
        rows.push(json!({"domain": d.to_string(), "size": space.len(), "mismatches": bad}));
    }
    Ok((ok, json!({ "domains": rows })))
}

/// Spectral degree equals polynomial degree on random functions.
pub fn degree_equivalence(seed: u64, count: usize, spec: &[(Kind, usize)]) -> Outcome {
    let mut rng = seeded(seed);
    let mut rows = Vec::new();
    let mut ok = true;
    for d in domains(spec)? {
        let mut mismatches = Vec::new();
        let mut histogram = vec![0usize; d.n()];
        for i in 0..count {
            let f = BooleanFunction::random(d, 0.5, &mut rng)?;
            let (poly, spec) = (polynomial_degree(&f)?, spectral_degree(&f)?);
            histogram[poly.min(d.n() - 1)] += 1;
            if poly != spec {
                mismatches.push(json!({"instance": i, "polynomial": poly, "spectral": spec}));
            }
        }
        ok &= mismatches.is_empty();
        rows.push(json!({"domain": d.to_string(), "degree_histogram": histogram, "mismatches": mismatches}));
    }
    Ok((ok, json!({ "domains": rows })))
}

/// `Σ f^{=λ} = f`, pairwise orthogonality, Parseval and the dimension count.
pub fn decomposition(seed: u64, count: usize, spec: &[(Kind, usize)]) -> Outcome {
    let mut rng = seeded(seed);
    let mut rows = Vec::new();
    let mut ok = true;
    for d in domains(spec)? {
        let mut failures = Vec::new();
        let mut dimension_total = 0;
        for i in 0..count {
            let f = BooleanFunction::random(d, 0.5, &mut rng)?;
            let parts = isotypic_decomposition(&f)?;
            dimension_total = parts.iter().map(|c| c.dimension).sum::<usize>();
            let mut sum = vec![Rational::zero(); f.len()];
            for c in &parts {
                for (s, v) in sum.iter_mut().zip(&c.vector) {
                    *s += v;
                }
            }
            let f_vec: Vec<Rational> = f.to_i64().into_iter().map(|v| Rational::from_integer(v.into())).collect();
            if sum != f_vec {
                failures.push(json!({"instance": i, "check": "sum"}));
            }
            for (a, b) in parts.iter().enumerate().flat_map(|(a, _)| (a + 1..parts.len()).map(move |b| (a, b))) {
                if !rational_dot(&parts[a].vector, &parts[b].vector).is_zero() {
                    failures.push(json!({"instance": i, "check": "orthogonal", "pair": [a, b]}));
                }
            }
            let parseval: Rational = parts.iter().map(|c| c.norm_sq.clone()).sum();
            if parseval != Rational::from_integer(f.weight().into()) {
                failures.push(json!({"instance": i, "check": "parseval"}));
            }
        }
        let dims_ok = dimension_total as u64 == d.size();
        ok &= failures.is_empty() && dims_ok;
        rows.push(json!({
            "domain": d.to_string(),
            "dimension_total": dimension_total,
            "size": d.size(),
            "failures": failures,
        }));
    }
    Ok((ok, json!({ "domains": rows })))
}

/// Every degree-≤1 function on the domain has a closed form and small
/// certificate complexity: 1 on `S_n`, 2 on `M_2n`.
pub fn degree_one(spec: &[(Kind, usize)]) -> Outcome {
    let mut rows = Vec::new();
    let mut ok = true;
    for d in domains(spec)? {
        let size = d.size() as usize;
        if size > 20 {
            return Err(twocoset::Error::Capacity(format!("exhaustive scan over {d} is too large")));
        }
        let bound = match d.kind() {
            Kind::Sym => 1,
            Kind::Pm => 2,
        };
        let (mut degree_one, mut worst_c, mut failures) = (0usize, 0usize, Vec::new());
        for table in 0u64..1 << size {
            let bits: Vec<bool> = (0..size).map(|k| table >> k & 1 == 1).collect();
            let f = BooleanFunction::from_bools(d, &bits)?;
            if !degree_at_most(&f, 1)? {
                continue;
            }
            degree_one += 1;
            let c = certificate_complexity(&f)?;
            worst_c = worst_c.max(c);
            if let Err(e) = classify_degree1(&f) {
                failures.push(json!({"table": table, "error": e.to_string()}));
            } else if c > bound {
                failures.push(json!({"table": table, "certificate_complexity": c}));
            }
        }
        ok &= failures.is_empty();
        rows.push(json!({
            "domain": d.to_string(),
            "functions": 1u64 << size,
            "degree_at_most_1": degree_one,
            "max_certificate_complexity": worst_c,
            "bound": bound,
            "failures": failures,
        }));
    }
    Ok((ok, json!({ "domains": rows })))
}

/// Minimum certificates certify (checked by scanning their cosets) and
/// `C(f) ≤ n − 1`.
pub fn certificates(seed: u64, count: usize, spec: &[(Kind, usize)]) -> Outcome {
    let mut rng = seeded(seed);
    let mut rows = Vec::new();
    let mut ok = true;
    for d in domains(spec)? {
        let space = Space::of(d)?;
        let mut failures = Vec::new();
        let mut worst = 0;
        for i in 0..count {
            let f = BooleanFunction::random(d, rng.gen_range(0.05..0.95), &mut rng)?;
            for (r, x) in space.elements().iter().enumerate() {
                let (size, c) = min_certificate(&f, x)?;
                worst = worst.max(size);
                let forced = space.coset_indices(&c).into_iter().all(|k| f.value(k) == f.value(r));
                if !forced || !x.satisfies(&c) || size + 1 > d.n().max(1) {
                    failures.push(json!({"instance": i, "element": x.to_string(), "certificate": c}));
                }
            }
        }
        ok &= failures.is_empty();
        rows.push(json!({"domain": d.to_string(), "max_certificate_size": worst, "failures": failures}));
    }
    Ok((ok, json!({ "domains": rows })))
}

/// `complete_avoiding` on random instances, rechecked pair by pair.
pub fn completion(seed: u64, count: usize, kinds: &[Kind], n_range: std::ops::RangeInclusive<usize>) -> Outcome {
    let mut rng = seeded(seed);
    let mut rows = Vec::new();
    let mut ok = true;
    for &kind in kinds {
        let mut failures = Vec::new();
        for i in 0..count {
            let n = rng.gen_range(n_range.clone());
            let d = Domain::new(kind, n)?;
            let c_a = random_certificate(d, rng.gen_range(0..=n - 2), &mut rng)?;
            let c_b = random_certificate(d, rng.gen_range(0..=n), &mut rng)?;
            let x = complete_avoiding(d, &c_a, &c_b)?;
            let hits: Vec<Pair> = c_b.pairs().iter().copied().filter(|&p| x.has_pair(p)).collect();
            let expected: Vec<Pair> = c_b.pairs().iter().copied().filter(|p| c_a.contains(*p)).collect();
            let satisfied = c_a.pairs().iter().all(|&p| x.has_pair(p));
            if !satisfied || hits != expected {
                failures.push(json!({"instance": i, "n": n, "c_a": c_a, "c_b": c_b, "x": x.to_string()}));
            }
        }
        ok &= failures.is_empty();
        rows.push(json!({"kind": kind, "instances": count, "failures": failures}));
    }
    Ok((ok, json!({ "kinds": rows })))
}

fn random_triple(n: usize, base: &Certificate, rng: &mut impl Rng) -> Option<[u8; 3]> {
    let used: Vec<u8> = base.pairs().iter().flat_map(|p| [p.0, p.1]).collect();
    let free: Vec<u8> = (1..=2 * n as u8).filter(|v| !used.contains(v)).collect();
    let pick: Vec<u8> = free.choose_multiple(rng, 3).copied().collect();
    (pick.len() == 3).then(|| [pick[0], pick[1], pick[2]])
}

fn random_extended(d: Domain, max_size: usize, with_triple: bool, rng: &mut impl Rng) -> Result<ExtendedCertificate> {
    let top = max_size - with_triple as usize;
    // full-size bases are the ones that make the hypothesis bite
    let base_size = if rng.gen_bool(0.5) { top } else { rng.gen_range(0..=top) };
    let base = random_certificate(d, base_size, rng)?;
    if with_triple {
        if let Some(t) = random_triple(d.n(), &base, rng) {
            return ExtendedCertificate::new(base, t);
        }
    }
    Ok(ExtendedCertificate::plain(base))
}

/// The forbidden-triple relaxation on random extended certificate pairs.
pub fn extended_reduction(seed: u64, count: usize, ns: &[usize]) -> Outcome {
    let mut rng = seeded(seed);
    let mut rows = Vec::new();
    let mut ok = true;
    for &n in ns {
        let d = Domain::pm(n)?;
        let max_size = n - 2;
        let (mut failures, mut applicable) = (Vec::new(), 0usize);
        for i in 0..count {
            let c1 = random_extended(d, max_size, true, &mut rng)?;
            let c2 = match rng.gen_range(0..4) {
                0 => ExtendedCertificate::plain(c1.base.clone()),
                1 => c1.clone(),
                2 => random_extended(d, max_size, false, &mut rng)?,
                _ => random_extended(d, max_size, true, &mut rng)?,
            };
            if c1.forbidden.is_none() {
                continue;
            }
            if hypothesis_holds(d, &c1, &c2)? {
                applicable += 1;
            }
            if !check_extended_reduction(&c1, &c2, n)? {
                failures.push(json!({"instance": i, "c1": c1, "c2": c2}));
            }
        }
        ok &= failures.is_empty();
        rows.push(json!({"n": n, "instances": count, "hypothesis_held": applicable, "failures": failures}));
    }
    Ok((ok, json!({ "domains": rows })))
}

fn hypothesis_holds(d: Domain, c1: &ExtendedCertificate, c2: &ExtendedCertificate) -> Result<bool> {
    let space = Space::of(d)?;
    let sat = |c: &ExtendedCertificate| -> Result<Vec<Element>> {
        let mut out = Vec::new();
        for m in space.elements() {
            if twocoset::cert::extended_satisfies(m, c)? {
                out.push(m.clone());
            }
        }
        Ok(out)
    };
    let (a, b) = (sat(c1)?, sat(c2)?);
    for x in &a {
        for y in &b {
            if x.intersection_size(y)? < 2 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Restricting a degree-≤2 function supported in a coset lowers its degree.
pub fn degree_reduction(seed: u64, count: usize, spec: &[(Kind, usize)]) -> Outcome {
    let mut rng = seeded(seed);
    let mut rows = Vec::new();
    let mut ok = true;
    for d in domains(spec)? {
        let mut failures = Vec::new();
        let mut histogram = [0usize; 3];
        for i in 0..count {
            let f = low_degree_in_coset(d, &mut rng)?;
            let deg = polynomial_degree(&f)?;
            let restricted = restrict_to_coset(&f, last_pair(d))?;
            let deg_r = polynomial_degree(&restricted)?;
            histogram[deg.min(2)] += 1;
            if deg > 2 || deg_r > deg.saturating_sub(1) {
                failures.push(json!({"instance": i, "degree": deg, "restricted_degree": deg_r}));
            }
        }
        ok &= failures.is_empty();
        rows.push(json!({"domain": d.to_string(), "degree_histogram": histogram, "failures": failures}));
    }
    Ok((ok, json!({ "domains": rows })))
}

fn random_tableau(shape: &[usize], rng: &mut impl Rng) -> Result<YoungTableau> {
    let mut entries: Vec<u8> = (1..=shape.iter().sum::<usize>() as u8).collect();
    entries.shuffle(rng);
    YoungTableau::fill(shape, &entries)
}

/// `⟨f, χ_{s′,t′}⟩ = ⟨f|, χ_{s,t}⟩` for random `f` supported on `α(n) = n`.
pub fn sym_identity(seed: u64, count: usize, ns: &[usize]) -> Outcome {
    let mut rng = seeded(seed);
    let mut failures = Vec::new();
    let mut nonzero = 0usize;
    for i in 0..count {
        let n = *ns.choose(&mut rng).expect("at least one n");
        let d = Domain::sym(n)?;
        let anchor = last_pair(d);
        let density = rng.gen_range(0.1..0.9);
        let f = BooleanFunction::from_fn(d, |x| x.has_pair(anchor) && rng.gen_bool(density))?;
        let shapes = partitions_of(n - 1);
        let shape = shapes.choose(&mut rng).expect("partitions exist").parts().to_vec();
        let s = random_tableau(&shape, &mut rng)?;
        let t = random_tableau(&shape, &mut rng)?;
        let (lhs, rhs) = sym_extension_identity(&f, &s, &t)?;
        nonzero += (lhs != 0) as usize;
        if lhs != rhs {
            failures.push(json!({"instance": i, "n": n, "s": s, "t": t, "lhs": lhs, "rhs": rhs}));
        }
    }
    Ok((failures.is_empty(), json!({"instances": count, "nonzero": nonzero, "failures": failures})))
}

/// `T` at small `C` and the closed form against the product forms.
pub fn bounds(max_c: usize) -> Outcome {
    let small: Vec<u128> = [2, 3, 4].iter().map(|&c| bound_T(c)).collect::<Result<_>>()?;
    let mut rows = Vec::new();
    let mut agree = true;
    for c in 2..=max_c {
        let (closed, product) = (bound_T(c)?, bound_T_product(c)?);
        agree &= closed == product;
        rows.push(json!({"c": c, "closed": closed.to_string(), "product": product.to_string()}));
    }
    let ok = small == [1, 2, 6] && agree;
    Ok((ok, json!({"small": small.iter().map(u128::to_string).collect::<Vec<_>>(), "table": rows})))
}

/// The degree-2 span on `{0,1}^k` and the sensitivity scan, checked
/// against brute force for `k ≤ 4`.
pub fn sensitivity(k: usize) -> Outcome {
    let dim = cube_degree2_span(k)?.rank();
    let expected_dim = 1 + k + k * (k - 1) / 2;
    let mut scans = Vec::new();
    let mut ok = dim == expected_dim;
    for s in 1..=k {
        let found = degree2_sensitivity_scan(k, s)?;
        let brute = (k <= 4).then(|| -> Result<bool> {
            for table in 0u64..1 << (1 << k) {
                let g = CubeFunction::new(k, table)?;
                if cube_degree(&g) <= 2 && full_pattern(&g, s) {
                    return Ok(true);
                }
            }
            Ok(false)
        });
        let brute = brute.transpose()?;
        if let Some(g) = &found {
            ok &= cube_degree(g) <= 2 && full_pattern(g, s);
        }
        if let Some(b) = brute {
            ok &= b == found.is_some();
        }
        scans.push(json!({
            "s": s,
            "witness": found.map(|g| json!({"table": g.table(), "sensitivity_at_0": sensitivity_at(&g, 0).unwrap_or(0)})),
            "brute_force_exists": brute,
        }));
    }
    Ok((ok, json!({"k": k, "span_dimension": dim, "scans": scans})))
}

fn full_pattern(g: &CubeFunction, s: usize) -> bool {
    (0..s).all(|i| g.value(1 << i) != g.value(0))
}

fn naive_clique_number(g: &BitGraph) -> usize {
    fn grow(g: &BitGraph, clique: &mut Vec<usize>, from: usize, best: &mut usize) {
        *best = (*best).max(clique.len());
        for v in from..g.order() {
            if clique.iter().all(|&u| g.has_edge(u, v)) {
                clique.push(v);
                grow(g, clique, v + 1, best);
                clique.pop();
            }
        }
    }
    let mut best = 0;
    grow(g, &mut Vec::new(), 0, &mut best);
    best
}

/// Branch and bound against plain enumeration on random graphs, and anchor
/// invariance on `S_5`.
pub fn clique_oracle(seed: u64, count: usize) -> Outcome {
    let mut rng = seeded(seed);
    let mut failures = Vec::new();
    for i in 0..count {
        let order = rng.gen_range(1..=40);
        let p = rng.gen_range(0.1..0.7);
        let mut g = BitGraph::new(order);
        for u in 0..order {
            for v in u + 1..order {
                if rng.gen_bool(p) {
                    g.add_edge(u, v);
                }
            }
        }
        let (fast, slow) = (max_clique_size(&g), naive_clique_number(&g));
        if fast != slow {
            failures.push(json!({"instance": i, "order": order, "branch_and_bound": fast, "naive": slow}));
        }
    }
    let d = Domain::sym(5)?;
    let anchor = random_element(d, &mut rng)?;
    let moved = enumerate_maximum_cliques(
        build_graph(Kind::Sym, 5, 2, Some(anchor.clone()))?.graph(),
        CliqueOptions::default(),
    );
    let fixed = enumerate_maximum_cliques(build_graph(Kind::Sym, 5, 2, None)?.graph(), CliqueOptions::default());
    let invariant =
        (moved.clique_number, moved.maximum_clique_count) == (fixed.clique_number, fixed.maximum_clique_count);
    Ok((
        failures.is_empty() && invariant,
        json!({
            "graphs": count,
            "failures": failures,
            "anchor": anchor.to_string(),
            "anchor_invariant": invariant,
        }),
    ))
}

/// Maximum families at small `n`: they are 2-cosets, have `C(f) = 2`, and
/// their minimum certificates pairwise share two pairs.
pub fn maximum_families(spec: &[(Kind, usize)], pairwise_up_to: usize) -> Outcome {
    let mut rows = Vec::new();
    let mut ok = true;
    for &(kind, n) in spec {
        let report = verify_uniqueness(kind, n)?;
        let graph = build_graph(kind, n, 2, None)?;
        let d = graph.domain();
        let mut complexities = Vec::new();
        let mut pairwise_failures = Vec::new();
        for clique in report.report.cliques.as_deref().unwrap_or_default() {
            let f = BooleanFunction::indicator(d, &graph.members(clique))?;
            complexities.push(certificate_complexity(&f)?);
            if n <= pairwise_up_to {
                let pr = check_pairwise_certificate_intersection(&f)?;
                if !pr.passed() {
                    pairwise_failures.push(json!({"clique": clique, "report": pr}));
                }
            }
        }
        let c_ok = !complexities.is_empty() && complexities.iter().all(|&c| c == 2);
        ok &= report.passed && c_ok && pairwise_failures.is_empty();
        rows.push(json!({
            "kind": kind,
            "n": n,
            "clique_number": report.report.clique_number,
            "maximum_clique_count": report.report.maximum_clique_count,
            "uniqueness": report.passed,
            "certificate_complexities": complexities,
            "pairwise_checked": n <= pairwise_up_to,
            "pairwise_failures": pairwise_failures,
        }));
    }
    Ok((ok, json!({ "cases": rows })))
}

/// Matchings of `M_2n` sharing at least two edges with a fixed one, by
/// inclusion–exclusion; and permutations with at least two fixed points.
pub fn anchor_degree(kind: Kind, n: usize) -> u64 {
    let choose = |a: u64, b: u64| (0..b).fold(1u64, |acc, i| acc * (a - i) / (i + 1));
    let avoid = |m: u64| -> i64 {
        (0..=m)
            .map(|j| {
                let sign = if j % 2 == 0 { 1 } else { -1 };
                let rest = match kind {
                    Kind::Sym => (1..=m - j).product::<u64>(),
                    Kind::Pm => (1..=m - j).map(|k| 2 * k - 1).product::<u64>(),
                };
                sign * (choose(m, j) * rest) as i64
            })
            .sum()
    };
    let n = n as u64;
    let total = match kind {
        Kind::Sym => (1..=n).product::<u64>(),
        Kind::Pm => (1..=n).map(|k| 2 * k - 1).product::<u64>(),
    };
    total - avoid(n) as u64 - n * avoid(n - 1) as u64
}

/// A maximal clique grown greedily in random order. The anchor is adjacent to
/// every other vertex, so it always ends up in the clique.
fn random_maximal_clique(g: &BitGraph, rng: &mut impl Rng) -> Vec<usize> {
    let mut order: Vec<usize> = (0..g.order()).collect();
    order.shuffle(rng);
    let mut clique = Vec::new();
    for v in order {
        if clique.iter().all(|&u| g.has_edge(u, v)) {
            clique.push(v);
        }
    }
    clique.sort_unstable();
    clique
}

/// Random maximal 2-intersecting families through the anchor. Where
/// `C(f) ≤ n − 2`, minimum certificates pairwise share two pairs, every
/// member's certificate minus one pair gives a cover, and when the degree is
/// at most 2 every element has a certificate built on that cover.
pub fn random_families(seed: u64, count: usize, spec: &[(Kind, usize)]) -> Outcome {
    let mut rng = seeded(seed);
    let mut rows = Vec::new();
    let mut ok = true;
    for &(kind, n) in spec {
        let graph = build_graph(kind, n, 2, None)?;
        let d = graph.domain();
        let (mut applicable, mut low_degree, mut failures) = (0usize, 0usize, Vec::new());
        let mut sizes = Vec::new();
        for i in 0..count {
            let clique = random_maximal_clique(graph.graph(), &mut rng);
            let f = BooleanFunction::indicator(d, &graph.members(&clique))?;
            sizes.push(clique.len());
            let report = check_pairwise_certificate_intersection(&f)?;
            if !report.precondition {
                continue;
            }
            applicable += 1;
            if !report.violations.is_empty() {
                failures.push(json!({"instance": i, "check": "pairwise", "violations": report.violations.len()}));
            }
            let x = &f.members()[rng.gen_range(0..f.weight())];
            let size = min_certificate(&f, x)?.0;
            let cover = cover_from_certificate(&f, x, rng.gen_range(0..size))?;
            if !cover.covers(&f) || !cover.is_compatible(kind) {
                failures.push(json!({"instance": i, "check": "cover", "cover": cover}));
            }
            if degree_at_most(&f, 2)? {
                low_degree += 1;
                if let Some(y) = check_cover_certificates(&f, &cover)? {
                    failures.push(json!({"instance": i, "check": "structure", "element": y.to_string()}));
                }
            }
        }
        sizes.sort_unstable();
        sizes.dedup();
        ok &= failures.is_empty();
        rows.push(json!({
            "kind": kind,
            "n": n,
            "families": count,
            "family_sizes": sizes,
            "precondition_held": applicable,
            "degree_at_most_2": low_degree,
            "failures": failures,
        }));
    }
    Ok((ok, json!({ "cases": rows })))
}
