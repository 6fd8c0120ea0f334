//! One PASS/FAIL line per acceptance criterion. All checks are exact.

use std::process::ExitCode;
use std::time::Instant;

use serde_json::{json, Value};
use twocoset::clique::verify_uniqueness;
use twocoset::sample::DEFAULT_SEED;
use twocoset::Kind::{self, Pm, Sym};
use twocoset_cli::suites::{self, anchor_degree};

type Check = twocoset::Result<(bool, Value)>;
type Criterion = (&'static str, Box<dyn Fn() -> Check>);

fn reproduce(kind: Kind, numbers: [usize; 4]) -> Check {
    let mut rows = Vec::new();
    let mut ok = true;
    for (n, expected) in (4..=7).zip(numbers) {
        let start = Instant::now();
        let r = verify_uniqueness(kind, n)?;
        let count = n * (n - 1) / 2;
        let vertices = anchor_degree(kind, n) as usize;
        let row_ok = r.passed
            && r.report.clique_number == expected
            && r.report.maximum_clique_count == count as u64
            && r.vertices == vertices;
        ok &= row_ok;
        rows.push(json!({
            "n": n,
            "clique_number": r.report.clique_number,
            "count": r.report.maximum_clique_count,
            "vertices": r.vertices,
            "expected_vertices": vertices,
            "all_two_cosets": r.passed,
            "seconds": start.elapsed().as_secs_f64(),
        }));
    }
    Ok((ok, json!(rows)))
}

fn both(a: Check, b: Check) -> Check {
    let (ok_a, ev_a) = a?;
    let (ok_b, ev_b) = b?;
    Ok((ok_a && ok_b, json!([ev_a, ev_b])))
}

fn main() -> ExitCode {
    let seed = DEFAULT_SEED;
    let degree_domains = [(Sym, 3), (Sym, 4), (Pm, 3), (Pm, 4)];
    let criteria: Vec<Criterion> = vec![
        (
            "degree-2 span on {0,1}^4 has dimension 11 and misses sensitivity 4 at 0",
            Box::new(|| suites::sensitivity(4)),
        ),
        (
            "S_n clique numbers 2, 6, 24, 120 with C(n,2) maximum cliques, all 2-cosets",
            Box::new(|| reproduce(Sym, [2, 6, 24, 120])),
        ),
        (
            "M_2n clique numbers 3, 15, 105, 945 with C(n,2) maximum cliques, all 2-cosets",
            Box::new(|| reproduce(Pm, [3, 15, 105, 945])),
        ),
        (
            "spectral degree = polynomial degree on 100 random functions per domain",
            Box::new(move || suites::degree_equivalence(seed, 100, &degree_domains)),
        ),
        (
            "isotypic sum, orthogonality, Parseval and dimension count",
            Box::new(move || suites::decomposition(seed, 100, &degree_domains)),
        ),
        (
            "degree-1 forms and certificate bounds on all of S_3 and M_6",
            Box::new(|| suites::degree_one(&[(Sym, 3), (Pm, 3)])),
        ),
        (
            "complete_avoiding, pairwise certificate intersection, extended reduction, random maximal families",
            Box::new(move || {
                let (a, b) = (
                    suites::completion(seed, 500, &[Sym, Pm], 2..=6),
                    suites::maximum_families(&[(Sym, 4), (Sym, 5), (Sym, 6), (Pm, 4), (Pm, 5)], 5),
                );
                let (c, evidence) = both(a, b)?;
                let (d, ev_d) = suites::extended_reduction(seed, 200, &[4, 5])?;
                let (e, ev_e) = suites::random_families(seed, 50, &[(Sym, 4), (Sym, 5), (Pm, 4), (Pm, 5)])?;
                Ok((c && d && e, json!([evidence, ev_d, ev_e])))
            }),
        ),
        (
            "restriction lowers degree; Sym extension identity",
            Box::new(move || {
                both(
                    suites::degree_reduction(seed, 100, &[(Sym, 4), (Sym, 5), (Pm, 4), (Pm, 5)]),
                    suites::sym_identity(seed, 50, &[3, 4, 5]),
                )
            }),
        ),
        ("T(2), T(3), T(4) = 1, 2, 6 and product forms agree up to C = 10", Box::new(|| suites::bounds(10))),
    ];

    let verbose = std::env::var_os("ACCEPTANCE_VERBOSE").is_some();
    let mut failed = 0;
    for (k, (title, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok((true, evidence)) => {
                println!("PASS criterion {}: {title} ({secs:.2}s)", k + 1);
                if verbose {
                    println!("  {evidence}");
                }
            }
            Ok((false, evidence)) => {
                failed += 1;
                println!("FAIL criterion {}: {title} ({secs:.2}s)\n  {evidence}", k + 1);
            }
            Err(e) => {
                failed += 1;
                println!("FAIL criterion {}: {title}: {e}", k + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
