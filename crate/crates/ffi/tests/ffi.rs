use std::ffi::CStr;
use std::path::{Path, PathBuf};
use std::process::Command;
use std::ptr;

use dercurve_ffi::*;

fn semigroup(gens: &[i64]) -> *mut DcSemigroup {
    let mut s = ptr::null_mut();
    assert_eq!(
        unsafe { dc_semigroup_new(gens.as_ptr(), gens.len(), &mut s) },
        DcStatus::Ok
    );
    s
}

fn last_error() -> String {
    let p = dc_last_error_message();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

#[test]
fn semigroup_queries() {
    let s = semigroup(&[6, 7, 9, 10]);
    unsafe {
        let mut f = 0;
        assert_eq!(dc_semigroup_frobenius(s, &mut f), DcStatus::Ok);
        assert_eq!(f, 11);

        let mut t = 0;
        assert_eq!(dc_semigroup_type(s, &mut t), DcStatus::Ok);
        assert_eq!(t, 3);

        let mut member = true;
        assert_eq!(dc_semigroup_contains(s, 11, &mut member), DcStatus::Ok);
        assert!(!member);

        let mut hom = false;
        assert_eq!(dc_semigroup_is_homogeneous(s, &mut hom), DcStatus::Ok);
        assert!(hom);

        let mut len = 0;
        let mut small = [0i64; 2];
        assert_eq!(
            dc_semigroup_pseudo_frobenius(s, small.as_mut_ptr(), small.len(), &mut len),
            DcStatus::BufferTooSmall
        );
        assert_eq!(len, 3);
        let mut buf = [0i64; 3];
        assert_eq!(
            dc_semigroup_pseudo_frobenius(s, buf.as_mut_ptr(), 3, &mut len),
            DcStatus::Ok
        );
        assert_eq!(buf, [3, 8, 11]);

        let mut ap = [0i64; 6];
        assert_eq!(
            dc_semigroup_apery(s, 6, ap.as_mut_ptr(), 6, &mut len),
            DcStatus::Ok
        );
        assert_eq!(len, 6);
        assert_eq!(
            dc_semigroup_apery(s, 11, ap.as_mut_ptr(), 6, &mut len),
            DcStatus::NotMember
        );

        dc_semigroup_free(s);
    }
}

#[test]
fn invalid_generators_set_message() {
    let gens = [4i64, 6];
    let mut s = ptr::null_mut();
    let status = unsafe { dc_semigroup_new(gens.as_ptr(), gens.len(), &mut s) };
    assert_eq!(status, DcStatus::InvalidGenerators);
    assert!(s.is_null());
    assert!(last_error().contains("gcd"));

    assert_eq!(
        unsafe { dc_semigroup_new(ptr::null(), 3, &mut s) },
        DcStatus::NullPointer
    );
    unsafe { dc_semigroup_free(ptr::null_mut()) };
}

#[test]
fn plane_and_derivation_module() {
    let s = semigroup(&[6, 7, 9, 10]);
    unsafe {
        let mut p = ptr::null_mut();
        assert_eq!(dc_plane_new(s, &mut p), DcStatus::Ok);

        let mut member = false;
        assert_eq!(dc_plane_contains(p, 6, 4, &mut member), DcStatus::Ok);
        assert!(member);

        let mut equal = false;
        let mut cx = DcPoint { a: -1, b: -1 };
        assert_eq!(dc_plane_cm_check(p, 0, &mut equal, &mut cx), DcStatus::Ok);
        assert!(equal);

        let mut m = ptr::null_mut();
        assert_eq!(dc_derivation_module_new(p, &mut m), DcStatus::Ok);
        let mut mu = 0;
        assert_eq!(dc_derivation_module_mu(m, &mut mu), DcStatus::Ok);
        assert_eq!(mu, 6);
        let mut count = 0;
        assert_eq!(
            dc_derivation_module_minimal_ideal_count(m, &mut count),
            DcStatus::Ok
        );
        assert_eq!(count, 5);

        let mut len = 0;
        let mut gens = [DcGenerator {
            kind: DcDerKind::EulerU,
            v_exp: 0,
            u_exp: 0,
            partial_u: false,
        }; 6];
        assert_eq!(
            dc_derivation_module_generators(m, gens.as_mut_ptr(), 6, &mut len),
            DcStatus::Ok
        );
        assert_eq!(len, 6);
        assert_eq!(gens[0].kind, DcDerKind::D1Degenerate);
        assert_eq!(
            (gens[0].v_exp, gens[0].u_exp, gens[0].partial_u),
            (21, 0, true)
        );

        let mut ideal = [DcPoint { a: 0, b: 0 }; 6];
        assert_eq!(
            dc_derivation_module_ideal(m, ideal.as_mut_ptr(), 6, &mut len),
            DcStatus::Ok
        );
        assert!(ideal.contains(&DcPoint { a: 21, b: 9 }));

        dc_derivation_module_free(m);
        dc_plane_free(p);
        dc_semigroup_free(s);
    }
}

#[test]
fn non_cohen_macaulay_is_reported() {
    let s = semigroup(&[3, 7, 8]);
    unsafe {
        let mut p = ptr::null_mut();
        assert_eq!(dc_plane_new(s, &mut p), DcStatus::Ok);
        let mut equal = true;
        let mut cx = DcPoint { a: 0, b: 0 };
        assert_eq!(dc_plane_cm_check(p, 0, &mut equal, &mut cx), DcStatus::Ok);
        assert!(!equal);
        assert_eq!(cx, DcPoint { a: 6, b: 2 });

        let mut m = ptr::null_mut();
        assert_eq!(
            dc_derivation_module_new(p, &mut m),
            DcStatus::NotCohenMacaulay
        );
        assert!(m.is_null());
        dc_plane_free(p);
        dc_semigroup_free(s);
    }
}

#[test]
fn der_series_and_json() {
    unsafe {
        let pk = [1u64, 5];
        let mut out = [0u64; 2];
        assert_eq!(
            dc_der_series(3, 1, pk.as_ptr(), 2, out.as_mut_ptr()),
            DcStatus::Ok
        );
        assert_eq!(out, [5, 20]);
        let bad = [2u64];
        assert_eq!(
            dc_der_series(1, 1, bad.as_ptr(), 1, out.as_mut_ptr()),
            DcStatus::BadResidueField
        );

        let gens = [5i64, 6, 9];
        let mut json = ptr::null_mut();
        assert_eq!(
            dc_analyze_json(gens.as_ptr(), 3, 0, &mut json),
            DcStatus::Ok
        );
        let text = CStr::from_ptr(json).to_str().unwrap().to_owned();
        dc_string_free(json);
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v["derivations"]["mu"], 4);
    }
}

fn header() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("include/dercurve.h")
}

#[test]
fn header_declares_the_api() {
    let text = std::fs::read_to_string(header()).expect("header generated by build.rs");
    for name in [
        "dc_semigroup_new",
        "dc_semigroup_free",
        "dc_plane_cm_check",
        "dc_derivation_module_generators",
        "dc_der_series",
        "dc_analyze_json",
        "dc_string_free",
        "dc_last_error_message",
        "DC_STATUS_NOT_COHEN_MACAULAY",
    ] {
        assert!(text.contains(name), "{name} missing from header");
    }
}

/// Compiles and runs a small C program against the static library when a C
/// compiler is available.
#[test]
fn c_program_links_against_staticlib() {
    let cc = std::env::var("CC").unwrap_or_else(|_| "cc".into());
    if Command::new(&cc).arg("--version").output().is_err() {
        eprintln!("no C compiler, skipping");
        return;
    }
    // tests/ -> target/<profile>/deps/ffi-*; the staticlib sits in target/<profile>.
    let exe = std::env::current_exe().unwrap();
    let profile_dir = exe.parent().unwrap().parent().unwrap();
    let lib = profile_dir.join("libdercurve_ffi.a");
    if !lib.exists() {
        eprintln!("{} not built, skipping", lib.display());
        return;
    }
    let dir = std::env::temp_dir().join(format!("dercurve-ffi-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let src = dir.join("smoke.c");
    std::fs::write(
        &src,
        r#"
#include <stdio.h>
#include "dercurve.h"
int main(void) {
    int64_t gens[] = {6, 7, 9, 10};
    DcSemigroup *s = NULL;
    if (dc_semigroup_new(gens, 4, &s) != DC_STATUS_OK) return 1;
    int64_t f = 0;
    dc_semigroup_frobenius(s, &f);
    DcPlane *p = NULL;
    dc_plane_new(s, &p);
    DcDerivationModule *m = NULL;
    if (dc_derivation_module_new(p, &m) != DC_STATUS_OK) return 2;
    size_t mu = 0;
    dc_derivation_module_mu(m, &mu);
    printf("%lld %zu\n", (long long)f, mu);
    dc_derivation_module_free(m);
    dc_plane_free(p);
    dc_semigroup_free(s);
    return 0;
}
"#,
    )
    .unwrap();
    let bin = dir.join("smoke");
    let status = Command::new(&cc)
        .arg(&src)
        .arg("-I")
        .arg(header().parent().unwrap())
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&bin)
        .status()
        .unwrap();
    assert!(status.success(), "C compile failed");
    let out = Command::new(&bin).output().unwrap();
    assert!(out.status.success());
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "11 6");
    let _ = std::fs::remove_dir_all(&dir);
}
