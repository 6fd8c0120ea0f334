use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Value};

use twocoset::boolfn::{cube_degree, degree2_sensitivity_scan, polynomial_degree, sensitivity_at, BooleanFunction};
use twocoset::cert::{certificate_complexity, min_certificate, one_side_certificate_complexity, CertLimits};
use twocoset::clique::{build_graph, verify_uniqueness};
use twocoset::domains::FamilyFile;
use twocoset::repr::{isotypic_decomposition, PROJECTION_LIMIT};
use twocoset::sample::DEFAULT_SEED;
use twocoset::{Error, Kind};
use twocoset_cli::input::read_function;
use twocoset_cli::report::SuiteError;
use twocoset_cli::{exit_code, suites, Suite};

#[derive(Parser)]
#[command(
    name = "twocoset",
    version,
    about = "Exact checks for 2-intersecting families of permutations and perfect matchings"
)]
struct Cli {
    /// Seed for the randomized suites.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Worker threads; 0 lets the pool decide.
    #[arg(long, global = true, env = "TWOCOSET_THREADS", default_value_t = 0)]
    threads: usize,
    /// Leave out wall-clock fields so reports are byte-stable.
    #[arg(long, global = true)]
    no_timings: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Search {0,1}^k for a degree-2 function sensitive at 0 in s coordinates.
    SensScan {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        s: usize,
        /// Exit 0 when a witness is found instead of when none exists.
        #[arg(long)]
        expect_witness: bool,
    },
    /// Clique number, clique count and 2-coset structure over a range of n.
    Verify {
        #[arg(long, value_enum)]
        kind: KindArg,
        /// `a..b` (inclusive) or a single value.
        #[arg(long, value_parser = parse_range)]
        n: (usize, usize),
        /// Write every maximum clique as a family file into this directory.
        #[arg(long, value_name = "DIR")]
        emit_cliques: Option<PathBuf>,
    },
    /// Polynomial and spectral degree of a family or raw function file.
    Degree(FileArg),
    /// Certificate complexity and per-member minimum certificates.
    Cert(FileArg),
    /// Norms of the isotypic components.
    Isotypic(FileArg),
    /// Run the invariant suites.
    Properties {
        /// Only run suites whose name contains this string.
        #[arg(long)]
        only: Option<String>,
    },
}

#[derive(Args)]
struct FileArg {
    /// Family or raw bit file; `-` for stdin.
    file: PathBuf,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Sym,
    Pm,
}

impl From<KindArg> for Kind {
    fn from(k: KindArg) -> Kind {
        match k {
            KindArg::Sym => Kind::Sym,
            KindArg::Pm => Kind::Pm,
        }
    }
}

fn parse_range(s: &str) -> Result<(usize, usize), String> {
    let parse = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("{t:?}: {e}"));
    let (a, b) = match s.split_once("..") {
        Some((a, b)) => (parse(a)?, parse(b.trim_start_matches('='))?),
        None => (parse(s)?, parse(s)?),
    };
    if a > b {
        return Err(format!("empty range {s}"));
    }
    Ok((a, b))
}

type Outcome = Result<Vec<Suite>, SuiteError>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(cli.threads).build_global() {
        eprintln!("thread pool: {e}");
        return ExitCode::from(2);
    }
    let result = match &cli.command {
        Command::SensScan { k, s, expect_witness } => sens_scan(*k, *s, *expect_witness),
        Command::Verify { kind, n, emit_cliques } => verify((*kind).into(), *n, emit_cliques.as_ref()),
        Command::Degree(f) => degree(f),
        Command::Cert(f) => cert(f),
        Command::Isotypic(f) => isotypic(f),
        Command::Properties { only } => properties(cli.seed, only.as_deref()),
    };
    match result {
        Ok(mut suites) => {
            let mut stdout = std::io::stdout().lock();
            for s in &mut suites {
                if cli.no_timings {
                    s.strip_timings();
                }
                let _ = writeln!(stdout, "{}", serde_json::to_string(s).expect("reports serialize"));
                eprintln!("{}", s.summary());
            }
            if suites.iter().all(Suite::passed) {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e.error))
        }
    }
}

fn sens_scan(k: usize, s: usize, expect_witness: bool) -> Outcome {
    let suite = Suite::new("sens-scan").param("k", k).param("s", s).param("expect_witness", expect_witness);
    let suite = suite.run(|| {
        let found = degree2_sensitivity_scan(k, s)?;
        let witness = match &found {
            Some(g) => json!({
                "table": g.table(),
                "degree": cube_degree(g),
                "sensitivity_at_0": sensitivity_at(g, 0)?,
            }),
            None => Value::Null,
        };
        let result = if found.is_some() { "witness" } else { "none" };
        Ok((found.is_some() == expect_witness, json!({"result": result, "witness": witness})))
    })?;
    Ok(vec![suite])
}

fn verify(kind: Kind, (lo, hi): (usize, usize), emit: Option<&PathBuf>) -> Outcome {
    let fail = |e: Error| SuiteError { suite: "verify".into(), error: e };
    if let Some(dir) = emit {
        std::fs::create_dir_all(dir).map_err(|e| fail(Error::Usage(format!("{}: {e}", dir.display()))))?;
    }
    let per_n: Vec<Result<Suite, SuiteError>> = (lo..=hi)
        .into_par_iter()
        .map(|n| {
            let suite = Suite::new(format!("verify-{kind}-{n}")).param("kind", kind).param("n", n);
            suite.run(|| {
                let report = verify_uniqueness(kind, n)?;
                if let (Some(dir), Some(cliques)) = (emit, &report.report.cliques) {
                    let graph = build_graph(kind, n, 2, None)?;
                    for (k, clique) in cliques.iter().enumerate() {
                        let file = FamilyFile::new(graph.domain(), &graph.members(clique));
                        let path = dir.join(format!("{kind}-n{n}-clique{k:03}.json"));
                        std::fs::write(&path, file.to_json())
                            .map_err(|e| Error::Usage(format!("{}: {e}", path.display())))?;
                    }
                }
                let evidence = serde_json::to_value(&report).expect("reports serialize");
                Ok((report.passed, evidence))
            })
        })
        .collect();
    per_n.into_iter().collect()
}

fn file_suite(name: &str, arg: &FileArg) -> Suite {
    Suite::new(name).param("file", arg.file.display().to_string())
}

fn load(arg: &FileArg, name: &str) -> Result<BooleanFunction, SuiteError> {
    read_function(&arg.file).map_err(|error| SuiteError { suite: name.into(), error })
}

fn describe(f: &BooleanFunction) -> Value {
    json!({"domain": f.domain().to_string(), "size": f.len(), "weight": f.weight()})
}

fn degree(arg: &FileArg) -> Outcome {
    let f = load(arg, "degree")?;
    let suite = file_suite("degree", arg).run(|| {
        let poly = polynomial_degree(&f)?;
        let spectral = if f.len() <= PROJECTION_LIMIT { Some(twocoset::repr::spectral_degree(&f)?) } else { None };
        let agree = spectral.is_none_or(|s| s == poly);
        Ok((agree, json!({"function": describe(&f), "polynomial_degree": poly, "spectral_degree": spectral})))
    })?;
    Ok(vec![suite])
}

fn cert(arg: &FileArg) -> Outcome {
    let f = load(arg, "cert")?;
    let suite = file_suite("cert", arg).run(|| {
        let full = if f.domain().size() <= CertLimits::default().max_domain {
            Some(certificate_complexity(&f)?)
        } else {
            None
        };
        let one_side = one_side_certificate_complexity(&f)?;
        let members: Vec<Value> = f
            .members()
            .par_iter()
            .map(|x| {
                min_certificate(&f, x)
                    .map(|(size, c)| json!({"element": twocoset::domains::ElementRepr::of(x), "size": size, "certificate": c}))
            })
            .collect::<twocoset::Result<_>>()?;
        let bound_ok = full.is_none_or(|c| c < f.domain().n().max(1));
        Ok((
            bound_ok,
            json!({
                "function": describe(&f),
                "certificate_complexity": full,
                "one_side_certificate_complexity": one_side,
                "members": members,
            }),
        ))
    })?;
    Ok(vec![suite])
}

fn isotypic(arg: &FileArg) -> Outcome {
    let f = load(arg, "isotypic")?;
    let suite = file_suite("isotypic", arg).run(|| {
        let parts = isotypic_decomposition(&f)?;
        let n = f.domain().n();
        let total: twocoset::linalg::Rational = parts.iter().map(|c| c.norm_sq.clone()).sum();
        let parseval = total == twocoset::linalg::Rational::from_integer(f.weight().into());
        let spectral = parts.iter().filter(|c| !c.is_zero()).map(|c| n - c.partition.first()).max().unwrap_or(0);
        let components: Vec<_> = parts.iter().map(|c| c.report()).collect();
        Ok((
            parseval,
            json!({
                "function": describe(&f),
                "components": components,
                "spectral_degree": spectral,
                "parseval": parseval,
            }),
        ))
    })?;
    Ok(vec![suite])
}

type Body = Box<dyn Fn() -> suites::Outcome + Send + Sync>;

fn properties(seed: u64, only: Option<&str>) -> Outcome {
    use Kind::{Pm, Sym};
    let plans: Vec<(Suite, Body)> = vec![
        (Suite::new("rank-unrank"), Box::new(|| suites::rank_unrank(&[(Sym, 5), (Pm, 4), (Sym, 6)]))),
        (
            Suite::new("degree-equivalence").param("seed", seed).param("count", 10),
            Box::new(move || suites::degree_equivalence(seed, 10, &[(Sym, 3), (Sym, 4), (Pm, 3)])),
        ),
        (
            Suite::new("decomposition").param("seed", seed).param("count", 5),
            Box::new(move || suites::decomposition(seed, 5, &[(Sym, 4), (Pm, 3)])),
        ),
        (Suite::new("degree-one"), Box::new(|| suites::degree_one(&[(Sym, 3), (Pm, 3)]))),
        (
            Suite::new("min-certificate").param("seed", seed).param("count", 10),
            Box::new(move || suites::certificates(seed, 10, &[(Sym, 4), (Pm, 3)])),
        ),
        (
            Suite::new("complete-avoiding").param("seed", seed).param("count", 200),
            Box::new(move || suites::completion(seed, 200, &[Sym, Pm], 2..=6)),
        ),
        (
            Suite::new("extended-reduction").param("seed", seed).param("count", 50),
            Box::new(move || suites::extended_reduction(seed, 50, &[4])),
        ),
        (
            Suite::new("degree-reduction").param("seed", seed).param("count", 20),
            Box::new(move || suites::degree_reduction(seed, 20, &[(Sym, 4), (Pm, 4)])),
        ),
        (
            Suite::new("sym-identity").param("seed", seed).param("count", 20),
            Box::new(move || suites::sym_identity(seed, 20, &[3, 4, 5])),
        ),
        (Suite::new("bounds"), Box::new(|| suites::bounds(10))),
        (Suite::new("sensitivity").param("k", 3), Box::new(|| suites::sensitivity(3))),
        (
            Suite::new("clique-oracle").param("seed", seed).param("count", 30),
            Box::new(move || suites::clique_oracle(seed, 30)),
        ),
        (
            Suite::new("random-families").param("seed", seed).param("count", 20),
            Box::new(move || suites::random_families(seed, 20, &[(Sym, 4), (Sym, 5), (Pm, 4)])),
        ),
        (Suite::new("maximum-families"), Box::new(|| suites::maximum_families(&[(Sym, 4), (Sym, 5), (Pm, 4)], 5))),
    ];
    let selected: Vec<(Suite, Body)> =
        plans.into_iter().filter(|(s, _)| only.is_none_or(|o| s.name.contains(o))).collect();
    if selected.is_empty() {
        return Err(SuiteError {
            suite: "properties".into(),
            error: Error::Usage(format!("no suite matches {only:?}")),
        });
    }
    let results: Vec<Result<Suite, SuiteError>> = selected.into_par_iter().map(|(s, body)| s.run(body)).collect();
    results.into_iter().collect()
}
