//! Report assembly for the command-line front end.
//!
//! Reports are serialized through `serde_json::Value`, whose maps are
//! key-sorted, so identical input always yields byte-identical output.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

use crate::dermod::{self, DerOptions, DerivationModule, SearchBound};
use crate::error::{Error, Result};
use crate::families::{self, FamilyInstance, FamilyValidation, LedgerRow};
use crate::numsgp::NumericalSemigroup;
use crate::plane::{CmVerdict, PlanePoint, PlaneSemigroup};
use crate::poincare::{self, RationalSeries, TruncatedSeries};

/// Environment variable overriding the default degree bound.
pub const BOUND_ENV: &str = "DERCURVE_BOUND";

/// User-supplied residue-field series.
#[derive(Debug, Clone, Default)]
pub struct ResidueSeries {
    pub coeffs: Option<TruncatedSeries>,
    pub rational: Option<RationalSeries>,
    /// Expansion order for the rational form.
    pub order: Option<usize>,
}

#[derive(Debug, Clone, Default)]
pub struct AnalyzeOptions {
    /// Degree bound for the Cohen-Macaulay check and witness scans.
    pub degree_bound: Option<u32>,
    pub residue: ResidueSeries,
}

/// With a degree bound `k`, the CM check runs to degree `k` and witness scans
/// stop at exponent `k·n_e` (multipliers at `k`). Without one the defaults apply.
pub fn der_options(plane: &PlaneSemigroup, degree_bound: Option<u32>) -> DerOptions {
    match degree_bound {
        Some(k) => DerOptions {
            cm_bound: Some(k),
            search: Some(SearchBound::from_degree(plane, i64::from(k))),
        },
        None => DerOptions::default(),
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SemigroupData {
    pub generators: Vec<i64>,
    pub frobenius: i64,
    pub conductor: i64,
    pub gap_count: i64,
    pub apery: Vec<i64>,
    pub pseudo_frobenius: Vec<i64>,
    #[serde(rename = "type")]
    pub type_count: usize,
    pub homogeneous: bool,
}

impl SemigroupData {
    pub fn of(s: &NumericalSemigroup) -> Self {
        SemigroupData {
            generators: s.generators().to_vec(),
            frobenius: s.frobenius(),
            conductor: s.conductor(),
            gap_count: s.gap_count(),
            apery: s.apery(s.multiplicity()).expect("multiplicity is a member"),
            pseudo_frobenius: s.pseudo_frobenius().to_vec(),
            type_count: s.type_count(),
            homogeneous: s.is_homogeneous(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct PlaneData {
    pub gamma1: Vec<i64>,
    pub gamma2: Vec<i64>,
    pub gamma2_raw: Vec<i64>,
    pub gamma2_pseudo_frobenius: Vec<i64>,
    pub n_e: i64,
    pub cm: CmVerdict,
}

#[derive(Debug, Clone, Serialize)]
pub struct GeneratorData {
    #[serde(flatten)]
    pub generator: dermod::DerGenerator,
    pub display: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct DerivationData {
    pub generators: Vec<GeneratorData>,
    pub mu: usize,
    pub ideal: Vec<PlanePoint>,
    pub minimal_ideal: Vec<PlanePoint>,
    pub minimal_ideal_count: usize,
    pub annihilated: bool,
}

impl DerivationData {
    fn of(m: &DerivationModule, plane: &PlaneSemigroup) -> Result<Self> {
        Ok(DerivationData {
            generators: m
                .generators
                .iter()
                .map(|g| GeneratorData {
                    generator: *g,
                    display: g.to_string(),
                })
                .collect(),
            mu: m.mu,
            ideal: m.ideal.clone(),
            minimal_ideal: m.minimal_ideal.clone(),
            minimal_ideal_count: m.minimal_ideal_count,
            annihilated: dermod::annihilation_check(&m.ideal, plane)?,
        })
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct PoincareData {
    pub h1: u64,
    pub h2: u64,
    pub relation: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub d1_relation: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub d2_relation: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub truncated: Option<TruncatedData>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rational: Option<RationalData>,
}

#[derive(Debug, Clone, Serialize)]
pub struct TruncatedData {
    pub residue_field: TruncatedSeries,
    pub derivation_module: TruncatedSeries,
    pub wire: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct RationalData {
    pub residue_field: String,
    pub derivation_module: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expansion: Option<TruncatedSeries>,
}

fn relation(scale: u64) -> String {
    format!("1+{scale}·P_K")
}

impl PoincareData {
    pub fn new(h1: u64, h2: u64, residue: &ResidueSeries) -> Result<Self> {
        let truncated = residue
            .coeffs
            .as_ref()
            .map(|pk| -> Result<TruncatedData> {
                let der = poincare::der_series(h1, h2, pk)?;
                Ok(TruncatedData {
                    residue_field: pk.clone(),
                    wire: der.to_string(),
                    derivation_module: der,
                })
            })
            .transpose()?;
        let rational = residue
            .rational
            .as_ref()
            .map(|pk| -> Result<RationalData> {
                let der = poincare::der_series_rational(h1, h2, pk)?;
                let expansion = residue.order.map(|n| der.expand(n)).transpose()?;
                Ok(RationalData {
                    residue_field: pk.to_string(),
                    derivation_module: der.to_string(),
                    expansion,
                })
            })
            .transpose()?;
        Ok(PoincareData {
            h1,
            h2,
            relation: relation(h1 + h2),
            d1_relation: None,
            d2_relation: None,
            truncated,
            rational,
        })
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct AnalyzeReport {
    pub input: Vec<i64>,
    pub semigroup: SemigroupData,
    pub plane: PlaneData,
    pub derivations: DerivationData,
    pub poincare: PoincareData,
    pub notes: BTreeMap<String, String>,
}

fn discrepancy_notes(m: &DerivationModule) -> BTreeMap<String, String> {
    let mut notes = BTreeMap::new();
    notes.insert(
        "mu_vs_beta0".to_string(),
        format!(
            "{} listed generators, {} minimal generators of the ideal form (1+h1+h2 = {})",
            m.mu,
            m.minimal_ideal_count,
            1 + m.h1 + m.h2
        ),
    );
    notes.insert(
        "partial_direction".to_string(),
        "D1 generators act along d/du and D2 generators along d/dv; the degenerate D1 \
         generator v^(1+c'n_e) is taken along d/du even where a closed form writes d/dv"
            .to_string(),
    );
    notes.insert(
        "betti_numbers".to_string(),
        "beta_0(Der) = 1+(h1+h2); beta_i(Der) = (h1+h2)*beta_i(K) for i >= 1".to_string(),
    );
    notes
}

/// Full pipeline for one generator list.
pub fn analyze(gens: &[i64], opts: &AnalyzeOptions) -> Result<AnalyzeReport> {
    let s = NumericalSemigroup::new(gens)?;
    let plane = PlaneSemigroup::new(&s);
    let der_opts = der_options(&plane, opts.degree_bound);
    let module = dermod::derivation_module_with(&plane, der_opts)?;
    let cm = CmVerdict::EqualUpTo {
        bound: module.cm_bound,
    };
    let (h1, h2) = (module.h1 as u64, module.h2 as u64);
    let mut poincare = PoincareData::new(h1, h2, &opts.residue)?;
    poincare.d1_relation = Some(relation(if plane.gamma2().is_natural() { 1 } else { h2 }));
    poincare.d2_relation = Some(relation(if plane.gamma1().is_natural() { 1 } else { h1 }));
    Ok(AnalyzeReport {
        input: gens.to_vec(),
        semigroup: SemigroupData::of(&s),
        plane: PlaneData {
            gamma1: plane.gamma1().generators().to_vec(),
            gamma2: plane.gamma2().generators().to_vec(),
            gamma2_raw: plane.gamma2_raw().to_vec(),
            gamma2_pseudo_frobenius: plane.gamma2().pseudo_frobenius().to_vec(),
            n_e: plane.n_e(),
            cm,
        },
        derivations: DerivationData::of(&module, &plane)?,
        poincare,
        notes: discrepancy_notes(&module),
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct FamilyReport {
    pub family: &'static str,
    pub params: BTreeMap<&'static str, i64>,
    pub generators: Vec<i64>,
    pub passed: bool,
    pub rows: Vec<LedgerRow>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mu: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub minimal_ideal_count: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub relation: Option<String>,
}

impl From<FamilyValidation> for FamilyReport {
    fn from(v: FamilyValidation) -> Self {
        let passed = v.passed();
        FamilyReport {
            family: v.family,
            params: v.params.iter().copied().collect(),
            generators: v.generators,
            passed,
            rows: v.rows,
            mu: v.module.as_ref().map(|m| m.mu),
            minimal_ideal_count: v.module.as_ref().map(|m| m.minimal_ideal_count),
            relation: v.module.as_ref().map(|m| relation((m.h1 + m.h2) as u64)),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SweepReport {
    pub family: &'static str,
    pub passed: bool,
    pub instances: Vec<FamilyReport>,
}

/// Validates one family instance.
pub fn family_report(instance: &FamilyInstance, degree_bound: Option<u32>) -> FamilyReport {
    let plane = PlaneSemigroup::new(instance.semigroup());
    families::validate_family(instance, der_options(&plane, degree_bound)).into()
}

/// Validates several instances in parallel; output keeps the input order.
pub fn sweep_report(instances: &[FamilyInstance], degree_bound: Option<u32>) -> SweepReport {
    let reports: Vec<FamilyReport> = instances
        .par_iter()
        .map(|inst| family_report(inst, degree_bound))
        .collect();
    SweepReport {
        family: instances.first().map_or("none", FamilyInstance::family),
        passed: reports.iter().all(|r| r.passed),
        instances: reports,
    }
}

#[derive(Debug, Clone, Serialize)]
struct ErrorBody<'a> {
    kind: &'static str,
    message: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    counterexample: Option<&'a PlanePoint>,
}

#[derive(Debug, Clone, Serialize)]
struct ErrorReport<'a> {
    error: ErrorBody<'a>,
}

pub fn error_json(e: &Error) -> String {
    let counterexample = match e {
        Error::NotCohenMacaulay(p) => Some(p),
        _ => None,
    };
    to_json(&ErrorReport {
        error: ErrorBody {
            kind: e.kind(),
            message: e.to_string(),
            counterexample,
        },
    })
}

/// Process exit status: 2 for non-Cohen-Macaulay input, 1 for anything else.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::NotCohenMacaulay(_) => 2,
        _ => 1,
    }
}

/// Pretty JSON with lexicographically sorted keys.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let v = serde_json::to_value(value).expect("reports serialize");
    serde_json::to_string_pretty(&v).expect("values serialize")
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(T::to_string).collect::<Vec<_>>().join(", ")
}

impl AnalyzeReport {
    pub fn render_human(&self) -> String {
        let mut out = String::new();
        let s = &self.semigroup;
        let _ = writeln!(out, "semigroup        ⟨{}⟩", join(&s.generators));
        let _ = writeln!(out, "frobenius        {}", s.frobenius);
        let _ = writeln!(out, "gaps             {}", s.gap_count);
        let _ = writeln!(out, "pseudo-frobenius {{{}}}", join(&s.pseudo_frobenius));
        let _ = writeln!(out, "type             {}", s.type_count);
        let _ = writeln!(out, "homogeneous      {}", s.homogeneous);
        let _ = writeln!(out, "gamma2           ⟨{}⟩", join(&self.plane.gamma2));
        let _ = writeln!(out, "cm check         {}", self.plane.cm);
        let _ = writeln!(out, "generators:");
        for g in &self.derivations.generators {
            let _ = writeln!(
                out,
                "  {:<14} {}",
                format!("{:?}", g.generator.kind),
                g.display
            );
        }
        let _ = writeln!(out, "mu               {}", self.derivations.mu);
        let _ = writeln!(out, "ideal            {}", join(&self.derivations.ideal));
        let _ = writeln!(
            out,
            "minimal ideal    {}",
            self.derivations.minimal_ideal_count
        );
        let _ = writeln!(out, "annihilated      {}", self.derivations.annihilated);
        let _ = writeln!(out, "P_Der            {}", self.poincare.relation);
        if let Some(t) = &self.poincare.truncated {
            let _ = writeln!(out, "  truncated      {}", t.wire);
        }
        if let Some(r) = &self.poincare.rational {
            let _ = writeln!(out, "  rational       {}", r.derivation_module);
        }
        for (k, v) in &self.notes {
            let _ = writeln!(out, "note {k}: {v}");
        }
        out
    }
}

impl FamilyReport {
    pub fn render_human(&self) -> String {
        let mut out = String::new();
        let params: Vec<String> = self
            .params
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect();
        let _ = writeln!(
            out,
            "{} {} ⟨{}⟩: {}",
            self.family,
            params.join(" "),
            join(&self.generators),
            if self.passed { "PASS" } else { "FAIL" }
        );
        for r in &self.rows {
            let status = match (r.informational, r.passed) {
                (true, _) => "info",
                (false, true) => "pass",
                (false, false) => "FAIL",
            };
            let _ = writeln!(out, "  [{status}] {:<28} {}", r.check, r.detail);
        }
        out
    }
}

impl SweepReport {
    pub fn render_human(&self) -> String {
        self.instances
            .iter()
            .map(FamilyReport::render_human)
            .collect()
    }
}
