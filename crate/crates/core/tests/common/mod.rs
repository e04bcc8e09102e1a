//! Brute-force oracles shared by the integration tests. None of them call
//! into the engine beyond reading generators.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet};

/// Coin-problem table: `table[x]` is true iff `x` is a nonnegative
/// combination of `gens`.
pub fn coin_table(gens: &[i64], limit: i64) -> Vec<bool> {
    let mut table = vec![false; limit as usize + 1];
    table[0] = true;
    for x in 1..=limit as usize {
        table[x] = gens
            .iter()
            .any(|&g| g as usize <= x && table[x - g as usize]);
    }
    table
}

/// An upper bound on every gap: `(a-1)(b-1)` for two coprime generators, or
/// `n1·ne` otherwise (Schur).
pub fn gap_bound(gens: &[i64]) -> i64 {
    let mut best = gens[0] * gens[gens.len() - 1];
    for (i, &a) in gens.iter().enumerate() {
        for &b in &gens[i + 1..] {
            if gcd(a, b) == 1 {
                best = best.min((a - 1) * (b - 1));
            }
        }
    }
    best
}

pub fn gcd(mut a: i64, mut b: i64) -> i64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a.abs()
}

/// Gaps `x` such that `x + s` is a member for every nonzero member `s`.
pub fn brute_pseudo_frobenius(gens: &[i64]) -> BTreeSet<i64> {
    let bound = gap_bound(gens);
    let max_g = *gens.iter().max().unwrap();
    let table = coin_table(gens, bound + 2 * max_g);
    let member = |x: i64| x >= 0 && table[x as usize];
    let nonzero_members: Vec<i64> = (1..=bound + max_g).filter(|&s| member(s)).collect();
    (0..=bound)
        .filter(|&x| !member(x))
        .filter(|&x| {
            nonzero_members
                .iter()
                .all(|&s| x + s > bound || member(x + s))
        })
        .collect()
}

/// Least member in each residue class modulo `m`.
pub fn brute_apery(gens: &[i64], m: i64) -> BTreeSet<i64> {
    let limit = gap_bound(gens) + m + 1;
    let table = coin_table(gens, limit);
    let mut seen = vec![false; m as usize];
    let mut out = BTreeSet::new();
    for x in 0..=limit {
        let r = (x % m) as usize;
        if table[x as usize] && !seen[r] {
            seen[r] = true;
            out.insert(x);
        }
    }
    out
}

/// All sums of exactly `k` points drawn with repetition from `points`.
pub fn naive_plane_sums(points: &[(i64, i64)], k: usize) -> HashSet<(i64, i64)> {
    fn go(
        points: &[(i64, i64)],
        start: usize,
        left: usize,
        acc: (i64, i64),
        out: &mut HashSet<(i64, i64)>,
    ) {
        if left == 0 {
            out.insert(acc);
            return;
        }
        for i in start..points.len() {
            let (a, b) = points[i];
            go(points, i, left - 1, (acc.0 + a, acc.1 + b), out);
        }
    }
    let mut out = HashSet::new();
    go(points, 0, k, (0, 0), &mut out);
    out
}
