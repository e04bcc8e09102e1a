//! Two four-generated families with closed-form invariants, and a validator
//! that checks each closed form against the generic engines.
//!
//! * Arslan: `⟨h(h+1), h(h+1)+1, (h+1)², (h+1)²+1⟩`, `h ≥ 2`.
//! * Backelin: `⟨s, s+3, s+3n+1, s+3n+2⟩`, `n ≥ 2`, `r ≥ 3n+2`, `s = r(3n+2)+3`.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::dermod::{
    self, annihilation_check, DerGenerator, DerKind, DerOptions, DerivationModule,
};
use crate::error::{Error, Result};
use crate::numsgp::NumericalSemigroup;
use crate::plane::PlaneSemigroup;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArslanInstance {
    pub h: i64,
    pub a1: i64,
    pub a2: i64,
    pub a3: i64,
    pub a4: i64,
    semigroup: NumericalSemigroup,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BackelinInstance {
    pub n: i64,
    pub r: i64,
    pub s: i64,
    pub m1: i64,
    pub m2: i64,
    pub m3: i64,
    pub m4: i64,
    semigroup: NumericalSemigroup,
}

pub fn arslan(h: i64) -> Result<ArslanInstance> {
    if h < 2 {
        return Err(Error::ParamOutOfRange(format!(
            "Arslan family needs h >= 2, got h = {h}"
        )));
    }
    let a1 = h * (h + 1);
    let a3 = (h + 1) * (h + 1);
    let semigroup = NumericalSemigroup::new(&[a1, a1 + 1, a3, a3 + 1])?;
    Ok(ArslanInstance {
        h,
        a1,
        a2: a1 + 1,
        a3,
        a4: a3 + 1,
        semigroup,
    })
}

pub fn backelin(n: i64, r: i64) -> Result<BackelinInstance> {
    if n < 2 {
        return Err(Error::ParamOutOfRange(format!(
            "Backelin family needs n >= 2, got n = {n}"
        )));
    }
    if r < 3 * n + 2 {
        return Err(Error::ParamOutOfRange(format!(
            "Backelin family needs r >= 3n+2 = {}, got r = {r}",
            3 * n + 2
        )));
    }
    let s = r * (3 * n + 2) + 3;
    let gens = [s, s + 3, s + 3 * n + 1, s + 3 * n + 2];
    let semigroup = NumericalSemigroup::new(&gens)?;
    Ok(BackelinInstance {
        n,
        r,
        s,
        m1: gens[0],
        m2: gens[1],
        m3: gens[2],
        m4: gens[3],
        semigroup,
    })
}

impl ArslanInstance {
    pub fn generators(&self) -> [i64; 4] {
        [self.a1, self.a2, self.a3, self.a4]
    }

    pub fn semigroup(&self) -> &NumericalSemigroup {
        &self.semigroup
    }

    /// `t_i = (h-i)a3 + (i-1)a4 - a1`, `1 ≤ i ≤ h-1`.
    pub fn t(&self, i: i64) -> i64 {
        (self.h - i) * self.a3 + (i - 1) * self.a4 - self.a1
    }

    /// `y_j = (h-j)a2 + j·a4 - a1`; `w_{h-1}` is `y(h-1)`.
    pub fn y(&self, j: i64) -> i64 {
        (self.h - j) * self.a2 + j * self.a4 - self.a1
    }

    pub fn w_last(&self) -> i64 {
        self.a2 + (self.h - 1) * self.a4 - self.a1
    }

    pub fn pf_formula(&self) -> BTreeSet<i64> {
        let h = self.h;
        (1..h)
            .map(|i| self.t(i))
            .chain((0..h).map(|j| self.y(j)))
            .collect()
    }

    pub fn apery_formula(&self) -> BTreeSet<i64> {
        let (h, a2, a3, a4) = (self.h, self.a2, self.a3, self.a4);
        let mut out: BTreeSet<i64> = (0..=h).map(|i| i * a2).collect();
        out.extend((1..h).map(|j| j * a3));
        out.extend((1..h).map(|l| l * a4));
        for g in 1..h {
            for v in 1..=h - g {
                out.insert(g * a2 + v * a4);
            }
        }
        for a in 1..h - 1 {
            for b in 1..=h - 1 - a {
                out.insert(a * a3 + b * a4);
            }
        }
        out
    }

    /// Closed-form generators: `v^{1+h·a4} ∂/∂u`, then the `t_i`, `y_j`
    /// (`0 ≤ j ≤ h-2`) and `w_{h-1}` derivations along `∂/∂v`, then the
    /// Euler pair.
    pub fn der_formula(&self) -> Vec<DerGenerator> {
        let h = self.h;
        let mut out = vec![DerGenerator::d1_degenerate(h, self.a4)];
        out.extend((1..h).map(|i| DerGenerator::d2(self.t(i) + 1, h * (h + 1) + h - i)));
        out.extend((0..=h - 2).map(|j| DerGenerator::d2(self.y(j) + 1, (h + 1) * (h - j - 1) - 1)));
        out.push(DerGenerator::d2(self.w_last() + 1, (h + 1) * (h + 1)));
        out.push(DerGenerator::euler_u());
        out.push(DerGenerator::euler_v());
        out
    }

    /// `w`, `g_i` and `q_j` for `1 ≤ i, j ≤ h`, exponent vectors over
    /// `x1..x4`.
    pub fn binomials(&self) -> Vec<Binomial> {
        let h = self.h as u64;
        let mut out = vec![Binomial::new("w", [1, 0, 0, 1], [0, 1, 1, 0], true)];
        for i in 1..=h {
            out.push(Binomial::new(
                format!("g_{i}"),
                [h - i, 0, i + 1, 0],
                [0, h - i + 1, 0, i],
                true,
            ));
        }
        for j in 1..=h {
            out.push(Binomial::new(
                format!("q_{j}"),
                [0, 0, j, h - j],
                [j + 1, h - j, 0, 0],
                false,
            ));
        }
        out
    }
}

impl BackelinInstance {
    pub fn generators(&self) -> [i64; 4] {
        [self.m1, self.m2, self.m3, self.m4]
    }

    pub fn semigroup(&self) -> &NumericalSemigroup {
        &self.semigroup
    }

    /// `p_l`, `2 ≤ l ≤ n`
    pub fn p(&self, l: i64) -> i64 {
        (self.n - l) * self.m1 + (3 * l - 2) * self.m3 - self.m4
    }

    /// `q_m`, `1 ≤ m ≤ n`
    pub fn q(&self, m: i64) -> i64 {
        (self.r - (self.n + m) + 3) * self.m1 + (self.n + m - 1) * self.m2 - self.m4
    }

    /// `z_m`, `1 ≤ m ≤ n`
    pub fn z(&self, m: i64) -> i64 {
        (self.r - m + 2) * self.m1 + (m - 1) * self.m2 + self.m3 - self.m4
    }

    pub fn big_p(&self) -> i64 {
        (self.r - self.n + 1) * self.m1 + self.n * self.m2 + self.m3 - self.m4
    }

    pub fn big_q(&self) -> i64 {
        (self.n - 2) * self.m1 + self.n * self.m2 + 2 * self.m3 - self.m4
    }

    pub fn r_prime(&self) -> i64 {
        (self.r - 2 * self.n + 2) * self.m1 + 2 * self.n * self.m2 - self.m4
    }

    pub fn pf_formula(&self) -> BTreeSet<i64> {
        let n = self.n;
        let mut out: BTreeSet<i64> = (2..=n).map(|l| self.p(l)).collect();
        out.extend((1..=n).map(|m| self.q(m)));
        out.extend((1..=n).map(|m| self.z(m)));
        out.extend([self.big_p(), self.big_q(), self.r_prime()]);
        out
    }

    pub fn der_formula(&self) -> Vec<DerGenerator> {
        let (n, s) = (self.n, self.s);
        let mut out = vec![DerGenerator::d1_degenerate(self.r + 1, self.m4)];
        out.extend(
            (2..=n).map(|l| DerGenerator::d2(self.p(l) + 1, 3 * n * n + 2 * n - 3 * l * n + l - 2)),
        );
        out.extend((1..=n).map(|m| DerGenerator::d2(self.q(m) + 1, s + 3 * n + 1 - 3 * (m - 1))));
        out.extend((1..=n).map(|m| DerGenerator::d2(self.z(m) + 1, s + 3 * n - 3 * (m - 1))));
        out.push(DerGenerator::d2(self.big_p() + 1, s));
        out.push(DerGenerator::d2(self.big_q() + 1, 6 * n * n - 5 * n - 2));
        out.push(DerGenerator::d2(self.r_prime() + 1, s + 1));
        out.push(DerGenerator::euler_u());
        out.push(DerGenerator::euler_v());
        out
    }

    /// `f1`, `f_{2,i}`, `f_{3,j}`, `f_{4,j}`, `f5`, `f6`, `f7`.
    pub fn binomials(&self) -> Vec<Binomial> {
        let n = self.n as u64;
        let r = self.r as u64;
        let mut out = vec![Binomial::new("f1", [0, 1, 3, 0], [1, 0, 0, 3], true)];
        for i in 1..=n {
            out.push(Binomial::new(
                format!("f2_{i}"),
                [n - i, 0, 3 * i - 1, 0],
                [0, n - i + 1, 0, 3 * i - 2],
                true,
            ));
        }
        for j in 0..n {
            out.push(Binomial::new(
                format!("f3_{j}"),
                [r - n + 3 + j, n - 1 - j, 0, 0],
                [0, 0, 2 + 3 * j, r - 1 - 3 * j],
                false,
            ));
        }
        for j in 0..n {
            out.push(Binomial::new(
                format!("f4_{j}"),
                [r - 2 * n + 3 + j, 2 * n - j, 0, 0],
                [0, 0, 3 * j + 1, r + 1 - 3 * j],
                false,
            ));
        }
        out.push(Binomial::new(
            "f5",
            [r - n + 2, n, 1, 0],
            [0, 0, 0, r + 2],
            false,
        ));
        out.push(Binomial::new("f6", [0, n + 1, 1, 0], [n, 0, 0, 2], true));
        out.push(Binomial::new(
            "f7",
            [0, 2 * n + 1, 0, 0],
            [2 * n - 1, 0, 1, 1],
            true,
        ));
        out
    }
}

/// A binomial `x^A - x^B` from a listed generating set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Binomial {
    pub name: String,
    pub exp_a: Vec<u64>,
    pub exp_b: Vec<u64>,
    /// Whether the generating set marks this binomial as having equal total
    /// degrees.
    pub listed_homogeneous: bool,
}

impl Binomial {
    fn new(name: impl Into<String>, a: [u64; 4], b: [u64; 4], listed_homogeneous: bool) -> Self {
        Binomial {
            name: name.into(),
            exp_a: a.to_vec(),
            exp_b: b.to_vec(),
            listed_homogeneous,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BinomialCheck {
    /// `Σ A_i w_i = Σ B_i w_i`: the binomial lies in the defining ideal.
    pub in_ideal: bool,
    /// `Σ A_i = Σ B_i`: the binomial is already homogeneous.
    pub homogeneous: bool,
}

pub fn binomial_in_ideal(weights: &[i64], exp_a: &[u64], exp_b: &[u64]) -> Result<BinomialCheck> {
    if exp_a.len() != weights.len() || exp_b.len() != weights.len() {
        return Err(Error::DimensionMismatch {
            weights: weights.len(),
            left: exp_a.len(),
            right: exp_b.len(),
        });
    }
    let weight = |e: &[u64]| -> i128 {
        e.iter()
            .zip(weights)
            .map(|(&x, &w)| i128::from(x) * i128::from(w))
            .sum()
    };
    let degree = |e: &[u64]| -> u64 { e.iter().sum() };
    Ok(BinomialCheck {
        in_ideal: weight(exp_a) == weight(exp_b),
        homogeneous: degree(exp_a) == degree(exp_b),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilyInstance {
    Arslan(ArslanInstance),
    Backelin(BackelinInstance),
}

impl FamilyInstance {
    pub fn family(&self) -> &'static str {
        match self {
            FamilyInstance::Arslan(_) => "arslan",
            FamilyInstance::Backelin(_) => "backelin",
        }
    }

    pub fn params(&self) -> Vec<(&'static str, i64)> {
        match self {
            FamilyInstance::Arslan(a) => vec![("h", a.h)],
            FamilyInstance::Backelin(b) => vec![("n", b.n), ("r", b.r)],
        }
    }

    pub fn semigroup(&self) -> &NumericalSemigroup {
        match self {
            FamilyInstance::Arslan(a) => a.semigroup(),
            FamilyInstance::Backelin(b) => b.semigroup(),
        }
    }

    pub fn pf_formula(&self) -> BTreeSet<i64> {
        match self {
            FamilyInstance::Arslan(a) => a.pf_formula(),
            FamilyInstance::Backelin(b) => b.pf_formula(),
        }
    }

    pub fn der_formula(&self) -> Vec<DerGenerator> {
        match self {
            FamilyInstance::Arslan(a) => a.der_formula(),
            FamilyInstance::Backelin(b) => b.der_formula(),
        }
    }

    pub fn binomials(&self) -> Vec<Binomial> {
        match self {
            FamilyInstance::Arslan(a) => a.binomials(),
            FamilyInstance::Backelin(b) => b.binomials(),
        }
    }

    /// `2h - 1` or `3n + 2`.
    pub fn expected_type(&self) -> usize {
        match self {
            FamilyInstance::Arslan(a) => (2 * a.h - 1) as usize,
            FamilyInstance::Backelin(b) => (3 * b.n + 2) as usize,
        }
    }

    /// `2h + 2` or `3n + 5`.
    pub fn expected_mu(&self) -> usize {
        match self {
            FamilyInstance::Arslan(a) => (2 * a.h + 2) as usize,
            FamilyInstance::Backelin(b) => (3 * b.n + 5) as usize,
        }
    }

    /// `h` or `r + 1`.
    pub fn expected_c_prime(&self) -> i64 {
        match self {
            FamilyInstance::Arslan(a) => a.h,
            FamilyInstance::Backelin(b) => b.r + 1,
        }
    }
}

impl From<ArslanInstance> for FamilyInstance {
    fn from(a: ArslanInstance) -> Self {
        FamilyInstance::Arslan(a)
    }
}

impl From<BackelinInstance> for FamilyInstance {
    fn from(b: BackelinInstance) -> Self {
        FamilyInstance::Backelin(b)
    }
}

/// One line of a validation ledger.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LedgerRow {
    pub check: String,
    pub passed: bool,
    /// Informational rows never count as failures.
    pub informational: bool,
    pub detail: String,
}

impl LedgerRow {
    fn check(check: &str, passed: bool, detail: String) -> Self {
        LedgerRow {
            check: check.into(),
            passed,
            informational: false,
            detail,
        }
    }

    fn info(check: &str, detail: String) -> Self {
        LedgerRow {
            check: check.into(),
            passed: true,
            informational: true,
            detail,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilyValidation {
    pub family: &'static str,
    pub params: Vec<(&'static str, i64)>,
    pub generators: Vec<i64>,
    pub rows: Vec<LedgerRow>,
    #[serde(skip)]
    pub module: Option<DerivationModule>,
}

impl FamilyValidation {
    pub fn passed(&self) -> bool {
        self.rows.iter().all(|r| r.informational || r.passed)
    }

    pub fn row(&self, check: &str) -> Option<&LedgerRow> {
        self.rows.iter().find(|r| r.check == check)
    }
}

fn fmt_set<T: std::fmt::Debug>(items: impl IntoIterator<Item = T>) -> String {
    format!("{:?}", items.into_iter().collect::<Vec<_>>())
}

fn generator_key(g: &DerGenerator) -> (DerKind, i64, i64, crate::dermod::Partial) {
    (g.kind, g.v_exp, g.u_exp, g.partial)
}

/// Runs every closed form against the generic engines; failures are
/// recorded as rows, never returned as errors.
pub fn validate_family(instance: &FamilyInstance, opts: DerOptions) -> FamilyValidation {
    let s = instance.semigroup();
    let mut rows = Vec::new();

    let engine_pf: BTreeSet<i64> = s.pseudo_frobenius().iter().copied().collect();
    let formula_pf = instance.pf_formula();
    rows.push(LedgerRow::check(
        "pf_formula",
        engine_pf == formula_pf,
        format!(
            "engine {} formula {}",
            fmt_set(&engine_pf),
            fmt_set(&formula_pf)
        ),
    ));
    rows.push(LedgerRow::check(
        "type",
        s.type_count() == instance.expected_type(),
        format!(
            "type {} expected {}",
            s.type_count(),
            instance.expected_type()
        ),
    ));
    rows.push(LedgerRow::check(
        "frobenius_is_max_pf",
        formula_pf.last() == Some(&s.frobenius()),
        format!("frobenius {}", s.frobenius()),
    ));

    if let FamilyInstance::Arslan(a) = instance {
        let engine: BTreeSet<i64> = s
            .apery(a.a1)
            .map(|v| v.into_iter().collect())
            .unwrap_or_default();
        let formula = a.apery_formula();
        rows.push(LedgerRow::check(
            "apery_formula",
            engine == formula && formula.len() as i64 == a.a1,
            format!("{} elements, formula {}", engine.len(), formula.len()),
        ));
    }

    rows.push(LedgerRow::check(
        "homogeneous",
        s.is_homogeneous(),
        String::new(),
    ));

    let weights = s.generators();
    for b in instance.binomials() {
        match binomial_in_ideal(weights, &b.exp_a, &b.exp_b) {
            Ok(c) => {
                rows.push(LedgerRow::check(
                    &format!("binomial_{}", b.name),
                    c.in_ideal,
                    format!("affine weights agree: {}", c.in_ideal),
                ));
                rows.push(LedgerRow::info(
                    &format!("binomial_{}_homogeneous", b.name),
                    format!(
                        "degrees equal: {}, listed homogeneous: {}",
                        c.homogeneous, b.listed_homogeneous
                    ),
                ));
            }
            Err(e) => rows.push(LedgerRow::check(
                &format!("binomial_{}", b.name),
                false,
                e.to_string(),
            )),
        }
    }

    let plane = PlaneSemigroup::new(s);
    let cm_bound = opts.cm_bound.unwrap_or_else(|| plane.default_cm_bound());
    let verdict = plane.cm_check(cm_bound);
    rows.push(LedgerRow::check(
        "cm_certificate",
        verdict.is_equal(),
        verdict.to_string(),
    ));

    let module = match dermod::derivation_module_with(&plane, opts) {
        Ok(m) => m,
        Err(e) => {
            rows.push(LedgerRow::check("derivation_module", false, e.to_string()));
            return FamilyValidation {
                family: instance.family(),
                params: instance.params(),
                generators: s.generators().to_vec(),
                rows,
                module: None,
            };
        }
    };

    let c_prime = module.d1().find_map(|g| match g.witness {
        Some(crate::dermod::Witness::D1Degenerate { c_prime }) => Some(c_prime),
        _ => None,
    });
    rows.push(LedgerRow::check(
        "c_prime",
        c_prime == Some(instance.expected_c_prime()),
        match c_prime {
            Some(c) => format!("scan {c} expected {}", instance.expected_c_prime()),
            None => format!(
                "no degenerate D1 generator, expected {}",
                instance.expected_c_prime()
            ),
        },
    ));

    let mut scanned: Vec<_> = module.generators.iter().map(generator_key).collect();
    let mut formula: Vec<_> = instance.der_formula().iter().map(generator_key).collect();
    scanned.sort();
    formula.sort();
    rows.push(LedgerRow::check(
        "der_formula",
        scanned == formula,
        format!("{} scanned, {} from formula", scanned.len(), formula.len()),
    ));
    rows.push(LedgerRow::check(
        "mu",
        module.mu == instance.expected_mu(),
        format!("mu {} expected {}", module.mu, instance.expected_mu()),
    ));

    let expected_beta0 = 1 + module.h1 + module.h2;
    rows.push(LedgerRow::check(
        "minimal_ideal_count",
        module.minimal_ideal_count == expected_beta0,
        format!(
            "{} minimal ideal generators, 1+h1+h2 = {}",
            module.minimal_ideal_count, expected_beta0
        ),
    ));
    rows.push(LedgerRow::info(
        "mu_vs_beta0",
        format!("({}, {})", module.mu, module.minimal_ideal_count),
    ));

    let (annihilated, detail) = match annihilation_check(&module.ideal, &plane) {
        Ok(true) => (
            true,
            "every ideal point annihilates the maximal ideal".to_string(),
        ),
        Ok(false) => (false, "some ideal point fails to annihilate".to_string()),
        Err(e) => (false, e.to_string()),
    };
    rows.push(LedgerRow::check("annihilation", annihilated, detail));

    FamilyValidation {
        family: instance.family(),
        params: instance.params(),
        generators: s.generators().to_vec(),
        rows,
        module: Some(module),
    }
}
