//! Seeded generators and small oracles shared by the integration tests.
#![allow(dead_code)]

use std::path::PathBuf;

use lmhs_core::quiver::{construct, dual_multiset, Family};
use lmhs_core::ratlin::{euler_phi, q};
use lmhs_core::{parse_fixture, DiskQuiverRep, FixtureFile, IndecompSummand, LmhsSpec, NString, RationalMatrix, SummandMultiset};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn fixture(name: &str) -> FixtureFile {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(format!("{name}.json"));
    parse_fixture(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

pub fn all_fixtures() -> Vec<FixtureFile> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures");
    let mut paths: Vec<PathBuf> = std::fs::read_dir(dir)
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    paths.sort();
    paths.iter().map(|p| parse_fixture(p).unwrap()).collect()
}

/// `L D U` with unit triangular `L`, `U` and a diagonal of small nonzero
/// integers, so always invertible.
pub fn random_invertible(rng: &mut ChaCha8Rng, n: usize) -> RationalMatrix {
    let mut lower = RationalMatrix::identity(n);
    let mut upper = RationalMatrix::identity(n);
    let mut diag = RationalMatrix::identity(n);
    for i in 0..n {
        for j in 0..i {
            lower[(i, j)] = q(rng.random_range(-2..=2));
            upper[(j, i)] = q(rng.random_range(-2..=2));
        }
        let d = [-2, -1, 1, 2, 3][rng.random_range(0..5)];
        diag[(i, i)] = q(d);
    }
    &(&lower * &diag) * &upper
}

pub fn scramble(rng: &mut ChaCha8Rng, rep: &DiskQuiverRep) -> DiskQuiverRep {
    let p = random_invertible(rng, rep.psi_dim());
    let r = random_invertible(rng, rep.phi_dim());
    rep.change_basis(&p, &r).unwrap()
}

pub fn total_dim(m: &SummandMultiset) -> usize {
    m.iter()
        .map(|(s, &k)| {
            let (a, b) = s.dims();
            (a + b) * k as usize
        })
        .sum()
}

const E_ORDERS: [u64; 4] = [2, 3, 4, 6];

/// A multiset of total dimension at most `budget`, E summands in whole
/// rational blocks.
pub fn random_multiset(rng: &mut ChaCha8Rng, budget: usize) -> SummandMultiset {
    let mut m = SummandMultiset::new();
    let mut left = budget;
    for _ in 0..rng.random_range(1..=4) {
        let size = rng.random_range(0..=2u32);
        let (summand, copies) = match rng.random_range(0..5) {
            0 if size > 0 => (IndecompSummand::a(size), 1),
            1 if size > 0 => (IndecompSummand::b(size), 1),
            2 if size > 0 => (IndecompSummand::c(size), 1),
            3 => (IndecompSummand::d(size), 1),
            4 if size > 0 => {
                let d = E_ORDERS[rng.random_range(0..E_ORDERS.len())];
                (IndecompSummand::e(size, d), euler_phi(d))
            }
            _ => continue,
        };
        let (a, b) = summand.dims();
        let cost = (a + b) * copies as usize;
        if cost == 0 || cost > left {
            continue;
        }
        left -= cost;
        *m.entry(summand).or_insert(0) += copies;
    }
    m
}

pub fn symmetrize(m: &SummandMultiset) -> SummandMultiset {
    let mut out = m.clone();
    for (s, k) in dual_multiset(m) {
        *out.entry(s).or_insert(0) += k;
    }
    out
}

pub fn random_rep(rng: &mut ChaCha8Rng, m: &SummandMultiset) -> DiskQuiverRep {
    scramble(rng, &construct(m).unwrap())
}

/// Verdicts read off the summand list: splitting forbids A, B and D(i>0);
/// the local invariant cycle property forbids B and D(i>0).
pub fn oracle_verdicts(m: &SummandMultiset) -> (bool, bool) {
    let has = |f: Family, big_d: bool| {
        m.iter().any(|(s, &k)| k > 0 && s.family == f && (!big_d || s.size > 0))
    };
    let bad_d = has(Family::D, true);
    let split = !has(Family::A, false) && !has(Family::B, false) && !bad_d;
    let lic = !has(Family::B, false) && !bad_d;
    (split, lic)
}

/// A centered spec in degree `k` with every Galois orbit complete.
pub fn random_spec(rng: &mut ChaCha8Rng, k: i64) -> LmhsSpec {
    let mut strings = Vec::new();
    for _ in 0..rng.random_range(0..=4) {
        let length = rng.random_range(1..=3u32);
        let top_weight = k + length as i64 - 1;
        let p = rng.random_range(0..=top_weight.max(0));
        let top = (p, top_weight - p);
        let mult = rng.random_range(1..=2);
        if rng.random_bool(0.6) {
            strings.push(NString::unipotent(top, length, mult));
        } else {
            let d = E_ORDERS[rng.random_range(0..E_ORDERS.len())];
            for a in (1..d).filter(|a| num_integer::gcd(*a, d) == 1) {
                strings.push(NString::with_eigen(top, length, d, a, mult));
            }
        }
    }
    LmhsSpec::new(k, strings).unwrap()
}
