//! Generators of the derivation module of `R = K[Γ̄]` for an arithmetically
//! Cohen-Macaulay projective closure, and the monomial ideal `I_Der ⊂ R`
//! isomorphic to it.
//!
//! The module is generated by `D1 ∪ {u∂/∂u} ∪ D2 ∪ {v∂/∂v}`:
//!
//! * `D1`: if `Γ2 ≠ ℕ`, one `v^β u^α ∂/∂u` per `α - 1 ∈ PF(Γ2)` with `β`
//!   minimal; if `Γ2 = ℕ`, the single `v^{1+c'n_e} ∂/∂u` with `c'` minimal.
//! * `D2`: if `Γ1 ≠ ℕ`, one `v^δ u^γ ∂/∂v` per `δ - 1 ∈ PF(Γ1)` with `γ`
//!   minimal; if `Γ1 = ℕ`, the single `u^{1+e'n_e} ∂/∂v` with `e'` minimal.
//!
//! Points are written `(v-exponent, u-exponent)` throughout.

use std::collections::HashSet;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::plane::{CmVerdict, PlanePoint, PlaneSemigroup};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum DerKind {
    EulerU,
    EulerV,
    D1,
    D1Degenerate,
    D2,
    D2Degenerate,
}

/// Direction of the partial derivative.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Partial {
    #[serde(rename = "d/du")]
    U,
    #[serde(rename = "d/dv")]
    V,
}

impl fmt::Display for Partial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Partial::U => f.write_str("∂/∂u"),
            Partial::V => f.write_str("∂/∂v"),
        }
    }
}

/// The defining data a generator was found from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Witness {
    D1 { alpha: i64, beta: i64 },
    D2 { delta: i64, gamma: i64 },
    D1Degenerate { c_prime: i64 },
    D2Degenerate { e_prime: i64 },
}

/// A generator `v^{v_exp} u^{u_exp} ∂/∂{partial}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct DerGenerator {
    pub kind: DerKind,
    pub v_exp: i64,
    pub u_exp: i64,
    pub partial: Partial,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl DerGenerator {
    pub fn euler_u() -> Self {
        DerGenerator {
            kind: DerKind::EulerU,
            v_exp: 0,
            u_exp: 1,
            partial: Partial::U,
            witness: None,
        }
    }

    pub fn euler_v() -> Self {
        DerGenerator {
            kind: DerKind::EulerV,
            v_exp: 1,
            u_exp: 0,
            partial: Partial::V,
            witness: None,
        }
    }

    pub fn d1(alpha: i64, beta: i64) -> Self {
        DerGenerator {
            kind: DerKind::D1,
            v_exp: beta,
            u_exp: alpha,
            partial: Partial::U,
            witness: Some(Witness::D1 { alpha, beta }),
        }
    }

    pub fn d1_degenerate(c_prime: i64, n_e: i64) -> Self {
        DerGenerator {
            kind: DerKind::D1Degenerate,
            v_exp: 1 + c_prime * n_e,
            u_exp: 0,
            partial: Partial::U,
            witness: Some(Witness::D1Degenerate { c_prime }),
        }
    }

    pub fn d2(delta: i64, gamma: i64) -> Self {
        DerGenerator {
            kind: DerKind::D2,
            v_exp: delta,
            u_exp: gamma,
            partial: Partial::V,
            witness: Some(Witness::D2 { delta, gamma }),
        }
    }

    pub fn d2_degenerate(e_prime: i64, n_e: i64) -> Self {
        DerGenerator {
            kind: DerKind::D2Degenerate,
            v_exp: 0,
            u_exp: 1 + e_prime * n_e,
            partial: Partial::V,
            witness: Some(Witness::D2Degenerate { e_prime }),
        }
    }

    /// Image in the ideal `I_Der` (shifted into `Γ̄`).
    pub fn ideal_point(&self, n_e: i64) -> PlanePoint {
        match self.kind {
            DerKind::EulerU => PlanePoint::new(0, n_e),
            DerKind::EulerV => PlanePoint::new(n_e, 0),
            DerKind::D1 => PlanePoint::new(self.v_exp, self.u_exp - 1 + n_e),
            DerKind::D1Degenerate => PlanePoint::new(self.v_exp, n_e - 1),
            DerKind::D2 => PlanePoint::new(self.v_exp - 1 + n_e, self.u_exp),
            DerKind::D2Degenerate => PlanePoint::new(n_e - 1, self.u_exp),
        }
    }
}

impl fmt::Display for DerGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            DerKind::EulerU => return f.write_str("u ∂/∂u"),
            DerKind::EulerV => return f.write_str("v ∂/∂v"),
            _ => {}
        }
        let mut parts = Vec::new();
        if self.v_exp != 0 {
            parts.push(format!("v^{}", self.v_exp));
        }
        if self.u_exp != 0 {
            parts.push(format!("u^{}", self.u_exp));
        }
        if parts.is_empty() {
            parts.push("1".to_string());
        }
        write!(f, "{} {}", parts.join(" "), self.partial)
    }
}

/// Upper limits for the witness scans.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SearchBound {
    /// Largest `β` or `γ` tried.
    pub exponent_limit: i64,
    /// Largest `c'` or `e'` tried.
    pub multiplier_limit: i64,
}

impl SearchBound {
    /// `β, γ ≤ c(Γ1) + c(Γ2) + 4n_e` and `c', e' ≤ 4n_e`.
    pub fn default_for(p: &PlaneSemigroup) -> Self {
        SearchBound {
            exponent_limit: p.gamma1().conductor() + p.gamma2().conductor() + 4 * p.n_e(),
            multiplier_limit: 4 * p.n_e(),
        }
    }

    /// Bound expressed in degrees: exponents up to `degree·n_e`, multipliers up to `degree`.
    pub fn from_degree(p: &PlaneSemigroup, degree: i64) -> Self {
        SearchBound {
            exponent_limit: degree * p.n_e(),
            multiplier_limit: degree,
        }
    }
}

/// The assembled module together with its ideal form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DerivationModule {
    pub generators: Vec<DerGenerator>,
    pub mu: usize,
    pub ideal: Vec<PlanePoint>,
    pub minimal_ideal: Vec<PlanePoint>,
    pub minimal_ideal_count: usize,
    /// `|PF(Γ1)|` and `|PF(Γ2)|` (1 for ℕ).
    pub h1: usize,
    pub h2: usize,
    pub cm_bound: u32,
}

impl DerivationModule {
    pub fn d1(&self) -> impl Iterator<Item = &DerGenerator> {
        self.generators
            .iter()
            .filter(|g| matches!(g.kind, DerKind::D1 | DerKind::D1Degenerate))
    }

    pub fn d2(&self) -> impl Iterator<Item = &DerGenerator> {
        self.generators
            .iter()
            .filter(|g| matches!(g.kind, DerKind::D2 | DerKind::D2Degenerate))
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct DerOptions {
    /// Degree bound for the Cohen-Macaulay check; defaults to
    /// [`PlaneSemigroup::default_cm_bound`].
    pub cm_bound: Option<u32>,
    pub search: Option<SearchBound>,
}

fn all_shifts_in(p: &PlaneSemigroup, base: PlanePoint, ns: &[i64]) -> bool {
    let n_e = p.n_e();
    ns.iter()
        .all(|&n| p.contains(base + PlanePoint::new(n, n_e - n)))
}

/// `{0, n_1, …, n_{e-1}}`
fn zero_and_lower(p: &PlaneSemigroup) -> Vec<i64> {
    let seq = p.sequence();
    std::iter::once(0)
        .chain(seq[..seq.len() - 1].iter().copied())
        .collect()
}

/// Least positive integer congruent to `-x` modulo `m`.
fn least_positive_complement(x: i64, m: i64) -> i64 {
    let r = (-x).rem_euclid(m);
    if r == 0 {
        m
    } else {
        r
    }
}

/// The `∂/∂u` part `D1`.
pub fn compute_d1(p: &PlaneSemigroup, bound: SearchBound) -> Result<Vec<DerGenerator>> {
    let n_e = p.n_e();
    let shifts = zero_and_lower(p);
    if p.gamma2().is_natural() {
        let c = (0..=bound.multiplier_limit)
            .find(|&c| all_shifts_in(p, PlanePoint::new(1 + c * n_e, -1), &shifts))
            .ok_or(Error::SearchExhausted(bound.multiplier_limit))?;
        return Ok(vec![DerGenerator::d1_degenerate(c, n_e)]);
    }
    p.gamma2()
        .pseudo_frobenius()
        .iter()
        .map(|&pf| {
            let start = least_positive_complement(pf, n_e);
            (0..)
                .map(|k| start + k * n_e)
                .take_while(|&beta| beta <= bound.exponent_limit)
                .find(|&beta| {
                    p.gamma1().contains(beta)
                        && all_shifts_in(p, PlanePoint::new(beta, pf), &shifts)
                })
                .map(|beta| DerGenerator::d1(pf + 1, beta))
                .ok_or(Error::SearchExhausted(bound.exponent_limit))
        })
        .collect()
}

/// The `∂/∂v` part `D2`.
pub fn compute_d2(p: &PlaneSemigroup, bound: SearchBound) -> Result<Vec<DerGenerator>> {
    let n_e = p.n_e();
    let seq = p.sequence();
    if p.gamma1().is_natural() {
        let shifts = &seq[..seq.len() - 1];
        let e = (0..=bound.multiplier_limit)
            .find(|&e| all_shifts_in(p, PlanePoint::new(-1, 1 + e * n_e), shifts))
            .ok_or(Error::SearchExhausted(bound.multiplier_limit))?;
        return Ok(vec![DerGenerator::d2_degenerate(e, n_e)]);
    }
    p.gamma1()
        .pseudo_frobenius()
        .iter()
        .map(|&pf| {
            let start = least_positive_complement(pf, n_e);
            (0..)
                .map(|k| start + k * n_e)
                .take_while(|&gamma| gamma <= bound.exponent_limit)
                .find(|&gamma| {
                    p.gamma2().contains(gamma) && all_shifts_in(p, PlanePoint::new(pf, gamma), seq)
                })
                .map(|gamma| DerGenerator::d2(pf + 1, gamma))
                .ok_or(Error::SearchExhausted(bound.exponent_limit))
        })
        .collect()
}

pub fn derivation_module(p: &PlaneSemigroup) -> Result<DerivationModule> {
    derivation_module_with(p, DerOptions::default())
}

/// Certifies Cohen-Macaulayness up to the configured degree, then assembles
/// `D1 ∪ {u∂/∂u} ∪ D2 ∪ {v∂/∂v}` and the ideal form.
pub fn derivation_module_with(p: &PlaneSemigroup, opts: DerOptions) -> Result<DerivationModule> {
    let cm_bound = opts.cm_bound.unwrap_or_else(|| p.default_cm_bound());
    if let CmVerdict::CounterexampleAt { point } = p.cm_check(cm_bound) {
        return Err(Error::NotCohenMacaulay(point));
    }
    let bound = opts.search.unwrap_or_else(|| SearchBound::default_for(p));
    let mut generators = compute_d1(p, bound)?;
    generators.push(DerGenerator::euler_u());
    generators.extend(compute_d2(p, bound)?);
    generators.push(DerGenerator::euler_v());

    let ideal: Vec<PlanePoint> = generators.iter().map(|g| g.ideal_point(p.n_e())).collect();
    let minimal_ideal = minimal_generators(&ideal, p);
    Ok(DerivationModule {
        mu: generators.len(),
        minimal_ideal_count: minimal_ideal.len(),
        minimal_ideal,
        ideal,
        h1: p.gamma1().type_count(),
        h2: p.gamma2().type_count(),
        cm_bound,
        generators,
    })
}

/// Monomial generators of the ideal isomorphic to the module, one per
/// generator and in the same order. Coinciding images are kept.
pub fn to_ideal(m: &DerivationModule, p: &PlaneSemigroup) -> Vec<PlanePoint> {
    m.generators
        .iter()
        .map(|g| g.ideal_point(p.n_e()))
        .collect()
}

/// Whether every non-corner ideal monomial is killed by the mixed generators
/// `v^{n_i} u^{n_e - n_i}` (`1 ≤ i ≤ e-1`) in `R / (u^{n_e}, v^{n_e})`.
pub fn annihilation_check(points: &[PlanePoint], p: &PlaneSemigroup) -> Result<bool> {
    if let Some(&bad) = points.iter().find(|&&g| !p.contains(g)) {
        return Err(Error::PointOutsideSemigroup(bad));
    }
    let n_e = p.n_e();
    let corners = [PlanePoint::new(0, n_e), PlanePoint::new(n_e, 0)];
    let seq = p.sequence();
    let mixed = &seq[..seq.len() - 1];
    Ok(points.iter().filter(|g| !corners.contains(g)).all(|&g| {
        mixed.iter().all(|&n| {
            let q = g + PlanePoint::new(n, n_e - n);
            corners.iter().any(|&c| p.contains(q - c))
        })
    }))
}

/// Drops duplicates and every point lying in `g' + Γ̄` for another listed `g'`.
pub fn minimal_generators(points: &[PlanePoint], p: &PlaneSemigroup) -> Vec<PlanePoint> {
    let mut seen = HashSet::new();
    let distinct: Vec<PlanePoint> = points.iter().copied().filter(|q| seen.insert(*q)).collect();
    distinct
        .iter()
        .copied()
        .filter(|&g| {
            !distinct
                .iter()
                .any(|&other| other != g && p.contains(g - other))
        })
        .collect()
}
