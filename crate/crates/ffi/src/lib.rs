//! C ABI over `dercurve`.
//!
//! Objects are opaque handles created by `*_new` and released by the matching
//! `*_free`. Every fallible function returns a [`DcStatus`]; on failure a
//! message is available from [`dc_last_error_message`] on the same thread.
//! Array results use caller buffers: the required length is always written to
//! `*len`, and `DC_STATUS_BUFFER_TOO_SMALL` is returned if `cap` is short.

use std::cell::RefCell;
use std::ffi::{c_char, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use dercurve::report::{self, AnalyzeOptions};
use dercurve::{
    CmVerdict, DerKind, DerivationModule, Error, NumericalSemigroup, Partial, PlanePoint,
    PlaneSemigroup, TruncatedSeries,
};

/// Result code of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DcStatus {
    Ok = 0,
    NullPointer = 1,
    BufferTooSmall = 2,
    InvalidGenerators = 3,
    NotMember = 4,
    SearchExhausted = 5,
    NotCohenMacaulay = 6,
    PointOutsideSemigroup = 7,
    BadResidueField = 8,
    InvalidArgument = 9,
    Overflow = 10,
    Panic = 11,
}

impl From<&Error> for DcStatus {
    fn from(e: &Error) -> Self {
        match e {
            Error::Empty
            | Error::NonPositive(_)
            | Error::Duplicate(_)
            | Error::GcdNotOne(_)
            | Error::NotMinimal { .. } => DcStatus::InvalidGenerators,
            Error::NotMember(_) => DcStatus::NotMember,
            Error::SearchExhausted(_) => DcStatus::SearchExhausted,
            Error::NotCohenMacaulay(_) => DcStatus::NotCohenMacaulay,
            Error::PointOutsideSemigroup(_) => DcStatus::PointOutsideSemigroup,
            Error::BadResidueField(_) => DcStatus::BadResidueField,
            Error::Overflow(_) => DcStatus::Overflow,
            Error::ParamOutOfRange(_)
            | Error::DimensionMismatch { .. }
            | Error::InvalidSeries(_)
            | Error::Parse(_) => DcStatus::InvalidArgument,
        }
    }
}

/// A point `(a, b)` of the plane semigroup: `a` is the `v`-exponent and `b`
/// the `u`-exponent.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DcPoint {
    pub a: i64,
    pub b: i64,
}

impl From<PlanePoint> for DcPoint {
    fn from(p: PlanePoint) -> Self {
        DcPoint { a: p.a, b: p.b }
    }
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DcDerKind {
    EulerU = 0,
    EulerV = 1,
    D1 = 2,
    D1Degenerate = 3,
    D2 = 4,
    D2Degenerate = 5,
}

/// Monomial derivation `v^v_exp u^u_exp ∂/∂u` (`partial_u` true) or `∂/∂v`.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DcGenerator {
    pub kind: DcDerKind,
    pub v_exp: i64,
    pub u_exp: i64,
    pub partial_u: bool,
}

/// Opaque numerical semigroup.
pub struct DcSemigroup(NumericalSemigroup);

/// Opaque plane semigroup.
pub struct DcPlane(PlaneSemigroup);

/// Opaque derivation module.
pub struct DcDerivationModule {
    module: DerivationModule,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(msg: impl Into<Vec<u8>>) {
    let msg = CString::new(msg).unwrap_or_else(|_| CString::from(c"invalid message"));
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(msg));
}

/// Runs `f`, converting errors and panics into status codes.
fn guard(f: impl FnOnce() -> Result<(), DcStatus>) -> DcStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => DcStatus::Ok,
        Ok(Err(status)) => status,
        Err(_) => {
            set_last_error("internal panic");
            DcStatus::Panic
        }
    }
}

fn fail(e: Error) -> DcStatus {
    set_last_error(e.to_string());
    DcStatus::from(&e)
}

fn null() -> DcStatus {
    set_last_error("null pointer argument");
    DcStatus::NullPointer
}

unsafe fn as_ref<'a, T>(p: *const T) -> Result<&'a T, DcStatus> {
    p.as_ref().ok_or_else(null)
}

unsafe fn slice<'a, T>(p: *const T, len: usize) -> Result<&'a [T], DcStatus> {
    if len == 0 {
        return Ok(&[]);
    }
    if p.is_null() {
        return Err(null());
    }
    Ok(std::slice::from_raw_parts(p, len))
}

unsafe fn write<T>(out: *mut T, value: T) -> Result<(), DcStatus> {
    if out.is_null() {
        return Err(null());
    }
    out.write(value);
    Ok(())
}

unsafe fn fill<T: Copy>(
    items: &[T],
    buf: *mut T,
    cap: usize,
    len: *mut usize,
) -> Result<(), DcStatus> {
    write(len, items.len())?;
    if cap < items.len() {
        set_last_error(format!("buffer holds {cap}, need {}", items.len()));
        return Err(DcStatus::BufferTooSmall);
    }
    if !items.is_empty() {
        if buf.is_null() {
            return Err(null());
        }
        ptr::copy_nonoverlapping(items.as_ptr(), buf, items.len());
    }
    Ok(())
}

/// Message for the last failed call on this thread, or null. Valid until the
/// next failing call on the same thread.
#[no_mangle]
pub extern "C" fn dc_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Validates `gens[0..len]` and creates a semigroup handle.
///
/// # Safety
/// `gens` must point to `len` readable values; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dc_semigroup_new(
    gens: *const i64,
    len: usize,
    out: *mut *mut DcSemigroup,
) -> DcStatus {
    guard(|| {
        let gens = slice(gens, len)?;
        let s = NumericalSemigroup::new(gens).map_err(fail)?;
        write(out, Box::into_raw(Box::new(DcSemigroup(s))))
    })
}

/// # Safety
/// `s` must come from [`dc_semigroup_new`] and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn dc_semigroup_free(s: *mut DcSemigroup) {
    if !s.is_null() {
        drop(Box::from_raw(s));
    }
}

/// # Safety
/// `s` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn dc_semigroup_frobenius(s: *const DcSemigroup, out: *mut i64) -> DcStatus {
    guard(|| write(out, as_ref(s)?.0.frobenius()))
}

/// # Safety
/// `s` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn dc_semigroup_type(s: *const DcSemigroup, out: *mut usize) -> DcStatus {
    guard(|| write(out, as_ref(s)?.0.type_count()))
}

/// # Safety
/// `s` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn dc_semigroup_contains(
    s: *const DcSemigroup,
    x: i64,
    out: *mut bool,
) -> DcStatus {
    guard(|| write(out, as_ref(s)?.0.contains(x)))
}

/// # Safety
/// `s` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn dc_semigroup_is_homogeneous(
    s: *const DcSemigroup,
    out: *mut bool,
) -> DcStatus {
    guard(|| write(out, as_ref(s)?.0.is_homogeneous()))
}

/// Pseudo-Frobenius numbers in increasing order.
///
/// # Safety
/// `s` must be a live handle, `buf` must hold `cap` values, `len` writable.
#[no_mangle]
pub unsafe extern "C" fn dc_semigroup_pseudo_frobenius(
    s: *const DcSemigroup,
    buf: *mut i64,
    cap: usize,
    len: *mut usize,
) -> DcStatus {
    guard(|| fill(as_ref(s)?.0.pseudo_frobenius(), buf, cap, len))
}

/// Apéry set with respect to the member `m`, indexed by residue.
///
/// # Safety
/// As [`dc_semigroup_pseudo_frobenius`].
#[no_mangle]
pub unsafe extern "C" fn dc_semigroup_apery(
    s: *const DcSemigroup,
    m: i64,
    buf: *mut i64,
    cap: usize,
    len: *mut usize,
) -> DcStatus {
    guard(|| {
        let ap = as_ref(s)?.0.apery(m).map_err(fail)?;
        fill(&ap, buf, cap, len)
    })
}

/// # Safety
/// `s` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn dc_plane_new(s: *const DcSemigroup, out: *mut *mut DcPlane) -> DcStatus {
    guard(|| {
        let p = PlaneSemigroup::new(&as_ref(s)?.0);
        write(out, Box::into_raw(Box::new(DcPlane(p))))
    })
}

/// # Safety
/// `p` must come from [`dc_plane_new`] and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn dc_plane_free(p: *mut DcPlane) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// # Safety
/// `p` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn dc_plane_contains(
    p: *const DcPlane,
    a: i64,
    b: i64,
    out: *mut bool,
) -> DcStatus {
    guard(|| write(out, as_ref(p)?.0.contains(PlanePoint::new(a, b))))
}

/// Degree bound used when `0` is passed to [`dc_plane_cm_check`].
///
/// # Safety
/// `p` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn dc_plane_default_cm_bound(p: *const DcPlane, out: *mut u32) -> DcStatus {
    guard(|| write(out, as_ref(p)?.0.default_cm_bound()))
}

/// Writes `true` to `equal` if no counterexample exists up to `bound`
/// (`0` selects the default); otherwise writes the counterexample.
///
/// # Safety
/// `p` must be a live handle; `equal` and `counterexample` writable.
#[no_mangle]
pub unsafe extern "C" fn dc_plane_cm_check(
    p: *const DcPlane,
    bound: u32,
    equal: *mut bool,
    counterexample: *mut DcPoint,
) -> DcStatus {
    guard(|| {
        let p = &as_ref(p)?.0;
        let bound = if bound == 0 {
            p.default_cm_bound()
        } else {
            bound
        };
        match p.cm_check(bound) {
            CmVerdict::EqualUpTo { .. } => write(equal, true),
            CmVerdict::CounterexampleAt { point } => {
                write(equal, false)?;
                write(counterexample, point.into())
            }
        }
    })
}

/// Assembles the derivation module at the default bounds.
///
/// # Safety
/// `p` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn dc_derivation_module_new(
    p: *const DcPlane,
    out: *mut *mut DcDerivationModule,
) -> DcStatus {
    guard(|| {
        let module = dercurve::derivation_module(&as_ref(p)?.0).map_err(fail)?;
        write(out, Box::into_raw(Box::new(DcDerivationModule { module })))
    })
}

/// # Safety
/// `m` must come from [`dc_derivation_module_new`] and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn dc_derivation_module_free(m: *mut DcDerivationModule) {
    if !m.is_null() {
        drop(Box::from_raw(m));
    }
}

/// # Safety
/// `m` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn dc_derivation_module_mu(
    m: *const DcDerivationModule,
    out: *mut usize,
) -> DcStatus {
    guard(|| write(out, as_ref(m)?.module.mu))
}

/// # Safety
/// `m` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn dc_derivation_module_minimal_ideal_count(
    m: *const DcDerivationModule,
    out: *mut usize,
) -> DcStatus {
    guard(|| write(out, as_ref(m)?.module.minimal_ideal_count))
}

/// Generators in the order D1, `u∂/∂u`, D2, `v∂/∂v`.
///
/// # Safety
/// `m` must be a live handle, `buf` must hold `cap` values, `len` writable.
#[no_mangle]
pub unsafe extern "C" fn dc_derivation_module_generators(
    m: *const DcDerivationModule,
    buf: *mut DcGenerator,
    cap: usize,
    len: *mut usize,
) -> DcStatus {
    guard(|| {
        let gens: Vec<DcGenerator> = as_ref(m)?
            .module
            .generators
            .iter()
            .map(|g| DcGenerator {
                kind: match g.kind {
                    DerKind::EulerU => DcDerKind::EulerU,
                    DerKind::EulerV => DcDerKind::EulerV,
                    DerKind::D1 => DcDerKind::D1,
                    DerKind::D1Degenerate => DcDerKind::D1Degenerate,
                    DerKind::D2 => DcDerKind::D2,
                    DerKind::D2Degenerate => DcDerKind::D2Degenerate,
                },
                v_exp: g.v_exp,
                u_exp: g.u_exp,
                partial_u: g.partial == Partial::U,
            })
            .collect();
        fill(&gens, buf, cap, len)
    })
}

/// Ideal monomials, one per generator, duplicates retained.
///
/// # Safety
/// As [`dc_derivation_module_generators`].
#[no_mangle]
pub unsafe extern "C" fn dc_derivation_module_ideal(
    m: *const DcDerivationModule,
    buf: *mut DcPoint,
    cap: usize,
    len: *mut usize,
) -> DcStatus {
    guard(|| {
        let pts: Vec<DcPoint> = as_ref(m)?.module.ideal.iter().map(|&p| p.into()).collect();
        fill(&pts, buf, cap, len)
    })
}

/// `1 + (h1+h2)·P_K` on the coefficients `pk[0..len]`; writes `len` values.
///
/// # Safety
/// `pk` must hold `len` values and `out` must have room for `len`.
#[no_mangle]
pub unsafe extern "C" fn dc_der_series(
    h1: u64,
    h2: u64,
    pk: *const u64,
    len: usize,
    out: *mut u64,
) -> DcStatus {
    guard(|| {
        let pk = TruncatedSeries::new(slice(pk, len)?.to_vec()).map_err(fail)?;
        let der = dercurve::der_series(h1, h2, &pk).map_err(fail)?;
        let mut written = 0;
        fill(der.coeffs(), out, len, &mut written)
    })
}

/// Full analysis report as JSON. `bound == 0` keeps the defaults. The string
/// must be released with [`dc_string_free`].
///
/// # Safety
/// `gens` must hold `len` values and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dc_analyze_json(
    gens: *const i64,
    len: usize,
    bound: u32,
    out: *mut *mut c_char,
) -> DcStatus {
    guard(|| {
        let gens = slice(gens, len)?;
        let opts = AnalyzeOptions {
            degree_bound: (bound != 0).then_some(bound),
            ..Default::default()
        };
        let r = report::analyze(gens, &opts).map_err(fail)?;
        let json = CString::new(report::to_json(&r)).expect("JSON has no interior NUL");
        write(out, json.into_raw())
    })
}

/// # Safety
/// `s` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn dc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
