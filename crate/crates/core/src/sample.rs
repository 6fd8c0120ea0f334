//! Seeded generators for the randomized suites.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::boolfn::BooleanFunction;
use crate::cert::Certificate;
use crate::domains::{Domain, Element, Kind, Pair};
use crate::error::{usage, Result};

pub type SeededRng = ChaCha8Rng;

pub const DEFAULT_SEED: u64 = 20_240_229;

pub fn seeded(seed: u64) -> SeededRng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_element(domain: Domain, rng: &mut impl Rng) -> Result<Element> {
    domain.unrank(rng.gen_range(0..domain.size()))
}

/// `size` pairs of a uniformly random element, so always satisfiable.
pub fn random_certificate(domain: Domain, size: usize, rng: &mut impl Rng) -> Result<Certificate> {
    if size > domain.n() {
        return usage(format!("certificate of size {size} in {domain}"));
    }
    let x = random_element(domain, rng)?;
    let pairs: Vec<Pair> = x.pairs().choose_multiple(rng, size).copied().collect();
    Ok(Certificate::from_pairs(pairs))
}

/// The pair fixing the last point: `(n, n)` or the edge `{2n−1, 2n}`.
pub fn last_pair(domain: Domain) -> Pair {
    let n = domain.n() as u8;
    match domain.kind() {
        Kind::Sym => Pair(n, n),
        Kind::Pm => Pair(2 * n - 1, 2 * n),
    }
}

/// A function of degree at most 2 supported inside the coset of
/// [`last_pair`]: the coset meets a union of disjoint 2-cosets through one
/// point, optionally complemented inside the coset.
pub fn low_degree_in_coset(domain: Domain, rng: &mut impl Rng) -> Result<BooleanFunction> {
    let n = domain.n();
    if n < 3 {
        return usage(format!("{domain} is too small for a nontrivial coset sample"));
    }
    let anchor = last_pair(domain);
    let shape = rng.gen_range(0..8);
    if shape == 0 {
        let bits: Vec<bool> = vec![false; domain.size() as usize];
        return BooleanFunction::from_bools(domain, &bits);
    }
    if shape == 1 {
        return BooleanFunction::coset(domain, &Certificate::from_pairs([anchor]));
    }
    let pairs: Vec<Pair> = match domain.kind() {
        Kind::Sym => {
            let p = rng.gen_range(1..n as u8);
            let chosen: Vec<u8> = (1..n as u8).filter(|_| rng.gen_bool(0.5)).collect();
            if rng.gen_bool(0.5) {
                chosen.into_iter().map(|j| Pair(p, j)).collect()
            } else {
                chosen.into_iter().map(|i| Pair(i, p)).collect()
            }
        }
        Kind::Pm => {
            let v = rng.gen_range(1..2 * n as u8 - 1);
            (1..2 * n as u8 - 1).filter(|&w| w != v && rng.gen_bool(0.5)).map(|w| Pair::edge(v, w)).collect()
        }
    };
    let complement = rng.gen_bool(0.5);
    BooleanFunction::from_fn(domain, |x| x.has_pair(anchor) && (pairs.iter().any(|&p| x.has_pair(p)) != complement))
}
