//! The plane semigroup of the projective closure.
//!
//! For a sequence `n_1 < … < n_e` the semigroup `Γ̄ ⊂ ℕ²` is generated by the
//! points `(n_i, n_e - n_i)` with `n_0 = 0`. Every generator has coordinate
//! sum `n_e`, so `(a, b) ∈ Γ̄` iff `k = (a + b) / n_e` is an integer and `a` is
//! a sum of exactly `k` terms from `{0, n_1, …, n_e}`.

use std::fmt;
use std::ops::{Add, Sub};
use std::sync::RwLock;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::numsgp::NumericalSemigroup;

/// A lattice point `(a, b)`: `a` is the exponent of `v`, `b` the exponent of `u`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(into = "[i64; 2]", from = "[i64; 2]")]
pub struct PlanePoint {
    pub a: i64,
    pub b: i64,
}

impl PlanePoint {
    pub const fn new(a: i64, b: i64) -> Self {
        PlanePoint { a, b }
    }
}

impl From<PlanePoint> for [i64; 2] {
    fn from(p: PlanePoint) -> Self {
        [p.a, p.b]
    }
}

impl From<[i64; 2]> for PlanePoint {
    fn from([a, b]: [i64; 2]) -> Self {
        PlanePoint { a, b }
    }
}

impl Add for PlanePoint {
    type Output = PlanePoint;
    fn add(self, rhs: PlanePoint) -> PlanePoint {
        PlanePoint::new(self.a + rhs.a, self.b + rhs.b)
    }
}

impl Sub for PlanePoint {
    type Output = PlanePoint;
    fn sub(self, rhs: PlanePoint) -> PlanePoint {
        PlanePoint::new(self.a - rhs.a, self.b - rhs.b)
    }
}

impl fmt::Display for PlanePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.a, self.b)
    }
}

/// Outcome of the bounded Cohen-Macaulay check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum CmVerdict {
    /// `Γ̄` and `(Γ1×Γ2)∩L` agree in every degree up to `bound`.
    EqualUpTo { bound: u32 },
    /// A point of `(Γ1×Γ2)∩L` missing from `Γ̄`.
    CounterexampleAt { point: PlanePoint },
}

impl CmVerdict {
    pub fn is_equal(&self) -> bool {
        matches!(self, CmVerdict::EqualUpTo { .. })
    }
}

impl fmt::Display for CmVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CmVerdict::EqualUpTo { bound } => write!(f, "equal up to degree {bound}"),
            CmVerdict::CounterexampleAt { point } => write!(f, "counterexample at {point}"),
        }
    }
}

#[derive(Debug)]
pub struct PlaneSemigroup {
    sequence: Vec<i64>,
    gamma1: NumericalSemigroup,
    gamma2: NumericalSemigroup,
    gamma2_raw: Vec<i64>,
    n_e: i64,
    generator_points: Vec<PlanePoint>,
    /// `degree_sumsets[k][a]`: `a` is a sum of exactly `k` terms of `{0, n_1, …, n_e}`.
    degree_sumsets: RwLock<Vec<Vec<bool>>>,
}

impl Clone for PlaneSemigroup {
    fn clone(&self) -> Self {
        PlaneSemigroup {
            sequence: self.sequence.clone(),
            gamma1: self.gamma1.clone(),
            gamma2: self.gamma2.clone(),
            gamma2_raw: self.gamma2_raw.clone(),
            n_e: self.n_e,
            generator_points: self.generator_points.clone(),
            degree_sumsets: RwLock::new(self.sumsets_read().clone()),
        }
    }
}

impl PlaneSemigroup {
    /// Plane semigroup of a validated numerical semigroup with `e ≥ 2`
    /// generators. For `e = 1` (only ℕ) the construction degenerates to the
    /// line `ℕ·(1, 0) + ℕ·(0, 1)` and is accepted as well.
    pub fn new(s: &NumericalSemigroup) -> Self {
        Self::build(s.generators().to_vec(), s.clone())
    }

    /// Plane semigroup of an arbitrary increasing sequence with `gcd = 1`
    /// that need not minimally generate `Γ1` (so `Γ1 = ℕ` becomes reachable).
    pub fn from_sequence(seq: &[i64]) -> Result<Self> {
        let gamma1 = NumericalSemigroup::minimalized(seq)?;
        let mut sequence = seq.to_vec();
        sequence.sort_unstable();
        sequence.dedup();
        Ok(Self::build(sequence, gamma1))
    }

    fn build(sequence: Vec<i64>, gamma1: NumericalSemigroup) -> Self {
        let n_e = *sequence.last().expect("non-empty sequence");
        let mut gamma2_raw: Vec<i64> = sequence[..sequence.len() - 1]
            .iter()
            .map(|&n| n_e - n)
            .collect();
        gamma2_raw.push(n_e);
        let gamma2 = NumericalSemigroup::minimalized(&gamma2_raw)
            .expect("gcd(n_e - n_i, n_e) = gcd(n_i) = 1");
        let generator_points = std::iter::once(0)
            .chain(sequence.iter().copied())
            .map(|n| PlanePoint::new(n, n_e - n))
            .collect();
        PlaneSemigroup {
            sequence,
            gamma1,
            gamma2,
            gamma2_raw,
            n_e,
            generator_points,
            degree_sumsets: RwLock::new(vec![vec![true]]),
        }
    }

    /// `n_1, …, n_e` as used for the generator points.
    pub fn sequence(&self) -> &[i64] {
        &self.sequence
    }

    pub fn gamma1(&self) -> &NumericalSemigroup {
        &self.gamma1
    }

    pub fn gamma2(&self) -> &NumericalSemigroup {
        &self.gamma2
    }

    /// `{n_e - n_1, …, n_e - n_{e-1}, n_e}` before minimalization.
    pub fn gamma2_raw(&self) -> &[i64] {
        &self.gamma2_raw
    }

    pub fn n_e(&self) -> i64 {
        self.n_e
    }

    /// The `e + 1` points `(n_i, n_e - n_i)`, `i = 0..e`.
    pub fn generator_points(&self) -> &[PlanePoint] {
        &self.generator_points
    }

    /// Membership in `L = {(a, b) : a + b ∈ n_e ℤ}`.
    pub fn in_lattice(&self, p: PlanePoint) -> bool {
        (p.a + p.b).rem_euclid(self.n_e) == 0
    }

    pub fn contains(&self, p: PlanePoint) -> bool {
        if p.a < 0 || p.b < 0 || !self.in_lattice(p) {
            return false;
        }
        let k = ((p.a + p.b) / self.n_e) as usize;
        self.ensure_degree(k);
        self.sumsets_read()[k][p.a as usize]
    }

    /// Membership in `(Γ1 × Γ2) ∩ L`.
    pub fn box_member(&self, p: PlanePoint) -> bool {
        self.in_lattice(p) && self.gamma1.contains(p.a) && self.gamma2.contains(p.b)
    }

    /// `⌈(F(Γ1) + F(Γ2)) / n_e⌉ + 2`, with `F(ℕ) = -1`.
    pub fn default_cm_bound(&self) -> u32 {
        let f = self.gamma1.frobenius() + self.gamma2.frobenius();
        let ceil = -((-f).div_euclid(self.n_e));
        (ceil.max(0) + 2) as u32
    }

    /// Compares `Γ̄` with `(Γ1×Γ2)∩L` degree by degree up to `degree_bound`.
    pub fn cm_check(&self, degree_bound: u32) -> CmVerdict {
        let bound = degree_bound.max(1);
        for k in 0..=bound as i64 {
            let total = k * self.n_e;
            for a in 0..=total {
                let p = PlanePoint::new(a, total - a);
                if self.box_member(p) && !self.contains(p) {
                    return CmVerdict::CounterexampleAt { point: p };
                }
            }
        }
        CmVerdict::EqualUpTo { bound }
    }

    fn sumsets_read(&self) -> std::sync::RwLockReadGuard<'_, Vec<Vec<bool>>> {
        self.degree_sumsets
            .read()
            .unwrap_or_else(|e| e.into_inner())
    }

    fn ensure_degree(&self, k: usize) {
        if self.sumsets_read().len() > k {
            return;
        }
        let mut table = self
            .degree_sumsets
            .write()
            .unwrap_or_else(|e| e.into_inner());
        let step = self.n_e as usize;
        while table.len() <= k {
            let prev = table.last().expect("degree 0 is seeded");
            let mut next = vec![false; prev.len() + step];
            for (a, _) in prev.iter().enumerate().filter(|(_, &r)| r) {
                next[a] = true;
                for &n in &self.sequence {
                    next[a + n as usize] = true;
                }
            }
            table.push(next);
        }
    }
}
