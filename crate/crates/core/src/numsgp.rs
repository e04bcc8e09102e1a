//! Numerical semigroups given by a minimal system of generators.
//!
//! Everything is derived from the Apéry set with respect to the multiplicity
//! (the smallest generator), which is computed once at construction time.

use std::cmp::Reverse;
use std::collections::{BTreeSet, BinaryHeap};

use num_integer::Integer;

use crate::error::{Error, Result};

/// A numerical semigroup `⟨n_1, …, n_e⟩ ⊆ ℕ` with `gcd = 1` and a minimal,
/// strictly increasing generator list.
///
/// Immutable after construction; all queries are pure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NumericalSemigroup {
    generators: Vec<i64>,
    /// `Ap(S, n_1)` indexed by residue mod `n_1`.
    apery_min: Vec<i64>,
    frobenius: i64,
    pseudo_frobenius: Vec<i64>,
}

/// The set of factorization lengths of an element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LengthSet {
    pub element: i64,
    pub lengths: BTreeSet<u64>,
}

impl LengthSet {
    pub fn is_singleton(&self) -> bool {
        self.lengths.len() == 1
    }
}

impl NumericalSemigroup {
    /// Validates `gens` as a minimal generating system and caches the
    /// Apéry set, Frobenius number and pseudo-Frobenius numbers.
    pub fn new(gens: &[i64]) -> Result<Self> {
        let generators = checked_sorted(gens)?;
        for (index, &g) in generators.iter().enumerate() {
            let others: Vec<i64> = generators[..index].to_vec();
            if representable(g, &others) {
                return Err(Error::NotMinimal {
                    index,
                    generator: g,
                });
            }
        }
        Ok(Self::from_minimal(generators))
    }

    /// Builds the semigroup generated by `raw`, dropping duplicates and
    /// redundant entries. Fails only on empty input, non-positive entries or
    /// `gcd != 1`.
    pub fn minimalized(raw: &[i64]) -> Result<Self> {
        if raw.is_empty() {
            return Err(Error::Empty);
        }
        if let Some(&bad) = raw.iter().find(|&&x| x <= 0) {
            return Err(Error::NonPositive(bad));
        }
        let mut sorted: Vec<i64> = raw.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let g = sorted.iter().fold(0i64, |acc, &x| acc.gcd(&x));
        if g != 1 {
            return Err(Error::GcdNotOne(g));
        }
        let mut minimal: Vec<i64> = Vec::new();
        for &x in &sorted {
            if !representable(x, &minimal) {
                minimal.push(x);
            }
        }
        Ok(Self::from_minimal(minimal))
    }

    /// The semigroup `ℕ = ⟨1⟩`.
    pub fn natural() -> Self {
        Self::from_minimal(vec![1])
    }

    fn from_minimal(generators: Vec<i64>) -> Self {
        let apery_min = apery_by_dijkstra(&generators, generators[0]);
        let m = generators[0];
        let frobenius = apery_min.iter().copied().max().unwrap_or(0) - m;
        let pseudo_frobenius = maximal_apery(&generators, &apery_min)
            .into_iter()
            .map(|w| w - m)
            .collect();
        NumericalSemigroup {
            generators,
            apery_min,
            frobenius,
            pseudo_frobenius,
        }
    }

    pub fn generators(&self) -> &[i64] {
        &self.generators
    }

    pub fn multiplicity(&self) -> i64 {
        self.generators[0]
    }

    pub fn embedding_dimension(&self) -> usize {
        self.generators.len()
    }

    /// `true` when the semigroup is all of ℕ.
    pub fn is_natural(&self) -> bool {
        self.generators[0] == 1
    }

    /// Largest integer not in the semigroup; `-1` for ℕ.
    pub fn frobenius(&self) -> i64 {
        self.frobenius
    }

    pub fn conductor(&self) -> i64 {
        self.frobenius + 1
    }

    /// Number of gaps, via Selmer's formula over `Ap(S, n_1)`.
    pub fn gap_count(&self) -> i64 {
        let m = self.multiplicity();
        self.apery_min
            .iter()
            .enumerate()
            .map(|(r, &w)| (w - r as i64) / m)
            .sum()
    }

    /// All gaps in increasing order.
    pub fn gaps(&self) -> Vec<i64> {
        (1..=self.frobenius.max(0))
            .filter(|&x| !self.contains(x))
            .collect()
    }

    pub fn contains(&self, x: i64) -> bool {
        if x < 0 {
            return false;
        }
        let m = self.multiplicity();
        x >= self.apery_min[x.rem_euclid(m) as usize]
    }

    /// `Ap(S, m)`: entry `r` is the least element of `S` congruent to `r`
    /// modulo `m`.
    pub fn apery(&self, m: i64) -> Result<Vec<i64>> {
        if m < 1 || !self.contains(m) {
            return Err(Error::NotMember(m));
        }
        if m == self.multiplicity() {
            return Ok(self.apery_min.clone());
        }
        Ok(apery_by_dijkstra(&self.generators, m))
    }

    /// Pseudo-Frobenius numbers in increasing order. `PF(ℕ) = {-1}`.
    pub fn pseudo_frobenius(&self) -> &[i64] {
        &self.pseudo_frobenius
    }

    /// Cohen-Macaulay type, `|PF(S)|`; equals 1 for ℕ.
    pub fn type_count(&self) -> usize {
        self.pseudo_frobenius.len()
    }

    /// Every `Σ r_i` over factorizations `s = Σ r_i n_i`.
    pub fn length_set(&self, s: i64) -> Result<LengthSet> {
        if !self.contains(s) {
            return Err(Error::NotMember(s));
        }
        let mut desc = self.generators.clone();
        desc.reverse();
        let mut lengths = BTreeSet::new();
        collect_lengths(&desc, s, 0, &mut lengths);
        Ok(LengthSet {
            element: s,
            lengths,
        })
    }

    /// Homogeneity: each nonzero element of `Ap(S, n_1)` has exactly one
    /// factorization length.
    pub fn is_homogeneous(&self) -> bool {
        self.apery_min.iter().filter(|&&w| w != 0).all(|&w| {
            self.length_set(w)
                .map(|l| l.is_singleton())
                .unwrap_or(false)
        })
    }
}

fn collect_lengths(desc: &[i64], remaining: i64, used: u64, out: &mut BTreeSet<u64>) {
    match desc {
        [] => {
            if remaining == 0 {
                out.insert(used);
            }
        }
        [last] => {
            if remaining % last == 0 {
                out.insert(used + (remaining / last) as u64);
            }
        }
        [g, rest @ ..] => {
            for k in 0..=remaining / g {
                collect_lengths(rest, remaining - k * g, used + k as u64, out);
            }
        }
    }
}

fn checked_sorted(gens: &[i64]) -> Result<Vec<i64>> {
    if gens.is_empty() {
        return Err(Error::Empty);
    }
    if let Some(&bad) = gens.iter().find(|&&x| x <= 0) {
        return Err(Error::NonPositive(bad));
    }
    let mut sorted = gens.to_vec();
    sorted.sort_unstable();
    if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
        return Err(Error::Duplicate(w[0]));
    }
    let g = sorted.iter().fold(0i64, |acc, &x| acc.gcd(&x));
    if g != 1 {
        return Err(Error::GcdNotOne(g));
    }
    Ok(sorted)
}

/// Coin-problem DP bounded by `target`: is `target` an ℕ-combination of `others`?
fn representable(target: i64, others: &[i64]) -> bool {
    if others.is_empty() {
        return false;
    }
    let t = target as usize;
    let mut reach = vec![false; t + 1];
    reach[0] = true;
    for x in 1..=t {
        reach[x] = others
            .iter()
            .any(|&g| (g as usize) <= x && reach[x - g as usize]);
    }
    reach[t]
}

/// Shortest paths on the residues mod `m` with edge weights the generators.
fn apery_by_dijkstra(generators: &[i64], m: i64) -> Vec<i64> {
    let mu = m as usize;
    let mut dist = vec![i64::MAX; mu];
    dist[0] = 0;
    let mut heap = BinaryHeap::new();
    heap.push(Reverse((0i64, 0usize)));
    while let Some(Reverse((d, r))) = heap.pop() {
        if d > dist[r] {
            continue;
        }
        for &g in generators {
            let nd = d + g;
            let nr = (r + (g % m) as usize) % mu;
            if nd < dist[nr] {
                dist[nr] = nd;
                heap.push(Reverse((nd, nr)));
            }
        }
    }
    dist
}

/// Maximal elements of `Ap(S, n_1)` under `a ≤_S b ⇔ b - a ∈ S`.
fn maximal_apery(generators: &[i64], apery: &[i64]) -> Vec<i64> {
    let m = generators[0];
    let in_apery = |x: i64| apery[x.rem_euclid(m) as usize] == x;
    let mut out: Vec<i64> = apery
        .iter()
        .copied()
        .filter(|&w| generators[1..].iter().all(|&g| !in_apery(w + g)))
        .collect();
    out.sort_unstable();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_members(gens: &[i64], limit: usize) -> Vec<bool> {
        let mut r = vec![false; limit + 1];
        r[0] = true;
        for x in 1..=limit {
            r[x] = gens.iter().any(|&g| g as usize <= x && r[x - g as usize]);
        }
        r
    }

    #[test]
    fn frobenius_of_6_7_9_10() {
        let s = NumericalSemigroup::new(&[6, 7, 9, 10]).unwrap();
        assert_eq!(s.frobenius(), 11);
        let limit = 2 * 10 * 10;
        let m = brute_members(&[6, 7, 9, 10], limit);
        let brute_f = (0..=limit).rev().find(|&x| !m[x]).unwrap() as i64;
        assert_eq!(brute_f, 11);
    }

    #[test]
    fn natural_numbers() {
        let s = NumericalSemigroup::new(&[1]).unwrap();
        assert!(s.is_natural());
        assert_eq!(s.frobenius(), -1);
        assert_eq!(s.pseudo_frobenius(), &[-1]);
        assert_eq!(s.type_count(), 1);
        assert_eq!(s.gap_count(), 0);
        assert!(s.gaps().is_empty());
        assert_eq!(s.apery(1).unwrap(), vec![0]);
        assert!(s.is_homogeneous());
        assert_eq!(s.length_set(5).unwrap().lengths, BTreeSet::from([5]));
    }

    #[test]
    fn validation_errors() {
        assert_eq!(NumericalSemigroup::new(&[4, 6]), Err(Error::GcdNotOne(2)));
        assert_eq!(NumericalSemigroup::new(&[]), Err(Error::Empty));
        assert_eq!(NumericalSemigroup::new(&[3, 0]), Err(Error::NonPositive(0)));
        assert_eq!(
            NumericalSemigroup::new(&[3, 5, 3]),
            Err(Error::Duplicate(3))
        );
        assert_eq!(
            NumericalSemigroup::new(&[3, 5, 8]),
            Err(Error::NotMinimal {
                index: 2,
                generator: 8
            })
        );
        assert!(matches!(
            NumericalSemigroup::new(&[1, 2]),
            Err(Error::NotMinimal { .. })
        ));
    }

    #[test]
    fn generators_are_sorted() {
        let s = NumericalSemigroup::new(&[10, 6, 9, 7]).unwrap();
        assert_eq!(s.generators(), &[6, 7, 9, 10]);
    }

    #[test]
    fn membership_examples() {
        let s = NumericalSemigroup::new(&[6, 7, 9, 10]).unwrap();
        assert!(!s.contains(11));
        assert!(s.contains(0));
        assert!(s.contains(21));
        assert!(!s.contains(-6));
    }

    #[test]
    fn apery_examples() {
        let s = NumericalSemigroup::new(&[6, 7, 9, 10]).unwrap();
        assert_eq!(s.apery(6).unwrap(), vec![0, 7, 14, 9, 10, 17]);
        let t = NumericalSemigroup::new(&[3, 4]).unwrap();
        assert_eq!(t.apery(3).unwrap(), vec![0, 4, 8]);
        assert_eq!(s.apery(11), Err(Error::NotMember(11)));
        assert_eq!(s.apery(0), Err(Error::NotMember(0)));
        // non-multiplicity element
        assert_eq!(t.apery(4).unwrap(), vec![0, 9, 6, 3]);
    }

    #[test]
    fn pseudo_frobenius_examples() {
        let s = NumericalSemigroup::new(&[6, 7, 9, 10]).unwrap();
        assert_eq!(s.pseudo_frobenius(), &[3, 8, 11]);
        let t = NumericalSemigroup::new(&[5, 6, 9]).unwrap();
        assert_eq!(t.gaps(), vec![1, 2, 3, 4, 7, 8, 13]);
        assert_eq!(t.pseudo_frobenius(), &[13]);
    }

    #[test]
    fn length_set_examples() {
        let s = NumericalSemigroup::new(&[6, 7, 9, 10]).unwrap();
        assert_eq!(s.length_set(17).unwrap().lengths, BTreeSet::from([2]));
        assert_eq!(s.length_set(6).unwrap().lengths, BTreeSet::from([1]));
        assert_eq!(s.length_set(11), Err(Error::NotMember(11)));
        // 42 = 7·6 = 6·7 has lengths 6 and 7, among others
        let l = s.length_set(42).unwrap();
        assert!(l.lengths.contains(&6) && l.lengths.contains(&7));
    }

    #[test]
    fn homogeneity_examples() {
        assert!(NumericalSemigroup::new(&[6, 7, 9, 10])
            .unwrap()
            .is_homogeneous());
        assert!(NumericalSemigroup::new(&[67, 70, 74, 75])
            .unwrap()
            .is_homogeneous());
        // 21 = 3·7 = 10 + 11 lies in Ap(S, 6) with lengths {2, 3}
        let s = NumericalSemigroup::new(&[6, 7, 10, 11]).unwrap();
        assert_eq!(s.length_set(21).unwrap().lengths, BTreeSet::from([2, 3]));
        assert!(!s.is_homogeneous());
    }

    #[test]
    fn minimalized_drops_redundant() {
        let s = NumericalSemigroup::minimalized(&[4, 3, 9]).unwrap();
        assert_eq!(s.generators(), &[3, 4]);
        let n = NumericalSemigroup::minimalized(&[4, 3, 1, 10]).unwrap();
        assert!(n.is_natural());
        assert_eq!(
            NumericalSemigroup::minimalized(&[4, 6, 4]),
            Err(Error::GcdNotOne(2))
        );
    }

    #[test]
    fn gap_count_matches_gaps() {
        let s = NumericalSemigroup::new(&[5, 6, 9]).unwrap();
        assert_eq!(s.gap_count(), s.gaps().len() as i64);
    }
}
