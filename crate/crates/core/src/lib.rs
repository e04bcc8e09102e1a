//! Derivation modules of projective closures of affine monomial curves.
//!
//! Pipeline: a numerical semigroup ([`numsgp`]) determines the plane
//! semigroup of its projective closure ([`plane`]); when that closure is
//! arithmetically Cohen-Macaulay, [`dermod`] finds generators of the
//! derivation module and its ideal form, and [`poincare`] relates its
//! Poincaré series to that of the residue field. [`families`] checks the
//! Arslan and Backelin closed forms; [`report`] drives the CLI.

pub mod dermod;
pub mod error;
pub mod families;
pub mod numsgp;
pub mod plane;
pub mod poincare;
pub mod report;

pub use dermod::{
    annihilation_check, compute_d1, compute_d2, derivation_module, derivation_module_with,
    minimal_generators, to_ideal, DerGenerator, DerKind, DerOptions, DerivationModule, Partial,
    SearchBound, Witness,
};
pub use error::{Error, Result};
pub use families::{
    arslan, backelin, binomial_in_ideal, validate_family, ArslanInstance, BackelinInstance,
    FamilyInstance, FamilyValidation,
};
pub use numsgp::{LengthSet, NumericalSemigroup};
pub use plane::{CmVerdict, PlanePoint, PlaneSemigroup};
pub use poincare::{
    betti_of_der, d_branch_series, der_series, der_series_rational, Poly, RationalSeries,
    TruncatedSeries,
};
