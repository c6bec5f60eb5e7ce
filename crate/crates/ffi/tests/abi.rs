use std::ffi::{CStr, CString};
use std::ptr;

use tlj_ffi::*;

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

fn engine(flavor: &str, ring: &str, regime: &str, delta: Option<&str>) -> *mut TljEngine {
    let (f, r, g) = (c(flavor), c(ring), c(regime));
    let d = delta.map(c);
    let mut out = ptr::null_mut();
    let st = unsafe { tlj_engine_new(f.as_ptr(), r.as_ptr(), g.as_ptr(), d.as_ref().map_or(ptr::null(), |d| d.as_ptr()), &mut out) };
    assert_eq!(st, TljStatus::Ok, "{}", last_error());
    out
}

fn last_error() -> String {
    let p = tlj_last_error();
    if p.is_null() {
        String::new()
    } else {
        unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
    }
}

#[test]
fn temperley_lieb_dimensions() {
    let e = engine("tl", "laurent:d", "standard", None);
    let mut dim = 0usize;
    for (n, expected) in [(1, 1), (2, 2), (3, 5), (4, 14)] {
        let w = c(&"|".repeat(n));
        assert_eq!(unsafe { tlj_engine_end_dim(e, w.as_ptr(), &mut dim) }, TljStatus::Ok);
        assert_eq!(dim, expected);
    }
    unsafe { tlj_engine_free(e) };
}

#[test]
fn compose_and_json_round_trip() {
    let e = engine("brauer", "rational", "infinity", None);
    let w = c("XY");
    let mut id = ptr::null_mut();
    assert_eq!(unsafe { tlj_vector_identity(e, w.as_ptr(), &mut id) }, TljStatus::Ok);
    let mut sq = ptr::null_mut();
    assert_eq!(unsafe { tlj_vector_compose(e, id, id, &mut sq) }, TljStatus::Ok);
    let mut eq = 0;
    assert_eq!(unsafe { tlj_vector_equal(id, sq, &mut eq) }, TljStatus::Ok);
    assert_eq!(eq, 1);
    let mut terms = 0usize;
    assert_eq!(unsafe { tlj_vector_term_count(sq, &mut terms) }, TljStatus::Ok);
    assert_eq!(terms, 1);

    let mut json = ptr::null_mut();
    assert_eq!(unsafe { tlj_vector_to_json(sq, &mut json) }, TljStatus::Ok);
    let text = unsafe { CStr::from_ptr(json) }.to_str().unwrap().to_owned();
    assert!(text.contains("\"flavor\""));
    let mut back = ptr::null_mut();
    assert_eq!(unsafe { tlj_vector_from_json(json, &mut back) }, TljStatus::Ok, "{}", last_error());
    assert_eq!(unsafe { tlj_vector_equal(back, id, &mut eq) }, TljStatus::Ok);
    assert_eq!(eq, 1);
    unsafe {
        tlj_string_free(json);
        tlj_vector_free(back);
        tlj_vector_free(sq);
        tlj_vector_free(id);
        tlj_engine_free(e);
    }
}

#[test]
fn error_codes() {
    let mut out = ptr::null_mut();
    let (f, r, g) = (c("tl"), c("laurent:d"), c("standard"));
    assert_eq!(unsafe { tlj_engine_new(ptr::null(), r.as_ptr(), g.as_ptr(), ptr::null(), &mut out) }, TljStatus::NullPointer);
    assert!(last_error().contains("flavor"));
    let bad = c("nonsense");
    assert_eq!(unsafe { tlj_engine_new(f.as_ptr(), bad.as_ptr(), g.as_ptr(), ptr::null(), &mut out) }, TljStatus::Parse);
    assert_eq!(unsafe { tlj_engine_new(f.as_ptr(), r.as_ptr(), g.as_ptr(), ptr::null(), ptr::null_mut()) }, TljStatus::NullPointer);

    let tl = engine("tl", "laurent:d", "standard", None);
    let br = engine("brauer", "rational", "infinity", None);
    let (w2, w4) = (c("||"), c("XY"));
    let (mut a, mut b, mut ab) = (ptr::null_mut(), ptr::null_mut(), ptr::null_mut());
    unsafe {
        assert_eq!(tlj_vector_identity(tl, w2.as_ptr(), &mut a), TljStatus::Ok);
        assert_eq!(tlj_vector_identity(br, w4.as_ptr(), &mut b), TljStatus::Ok);
        assert_eq!(tlj_vector_compose(tl, a, b, &mut ab), TljStatus::Mismatch);
        assert!(ab.is_null());
        let junk = c("{");
        assert_eq!(tlj_vector_from_json(junk.as_ptr(), &mut ab), TljStatus::Parse);
        let badword = c("XQ");
        assert_eq!(tlj_vector_identity(br, badword.as_ptr(), &mut ab), TljStatus::Parse);
        tlj_vector_free(a);
        tlj_vector_free(b);
        tlj_engine_free(tl);
        tlj_engine_free(br);
        tlj_engine_free(ptr::null_mut());
    }
}

#[test]
fn checks_through_the_abi() {
    let mut ok = 0;
    for n in 1..=3 {
        assert_eq!(unsafe { tlj_phi_is_identity(n, &mut ok) }, TljStatus::Ok);
        assert_eq!(ok, 1);
    }
    assert_eq!(unsafe { tlj_phi_is_identity(0, &mut ok) }, TljStatus::InvalidArgument);
    assert_eq!(tlj_criteria_count(), 12);
    assert_eq!(unsafe { tlj_run_criterion(6, 0, &mut ok) }, TljStatus::Ok);
    assert_eq!(ok, 1);
    assert_eq!(unsafe { tlj_run_criterion(13, 0, &mut ok) }, TljStatus::InvalidArgument);
}

#[test]
fn header_is_generated() {
    let header = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/tlj.h")).unwrap();
    for sym in ["tlj_engine_new", "tlj_vector_compose", "tlj_last_error", "TLJ_STATUS_OK", "typedef struct TljEngine TljEngine"] {
        assert!(header.contains(sym), "{sym} missing from header");
    }
}

/// Compiles a C client against the header; links and runs it when the
/// static library from `cargo build -p tlj-ffi` is present.
#[test]
fn c_client() {
    let dir = std::path::Path::new(env!("CARGO_MANIFEST_DIR"));
    let src = dir.join("tests/c/smoke.c");
    let include = dir.join("include");
    let Ok(status) = std::process::Command::new("cc").arg("-fsyntax-only").arg("-I").arg(&include).arg(&src).status() else {
        eprintln!("no C compiler; skipped");
        return;
    };
    assert!(status.success(), "header does not compile");
    let lib = dir.join("../../target/debug/libtlj_ffi.a");
    if !lib.exists() {
        eprintln!("static library not built; link step skipped");
        return;
    }
    let exe = std::env::temp_dir().join(format!("tlj_smoke_{}", std::process::id()));
    let status = std::process::Command::new("cc")
        .arg("-I")
        .arg(&include)
        .arg(&src)
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .unwrap();
    assert!(status.success(), "link failed");
    let out = std::process::Command::new(&exe).output().unwrap();
    let _ = std::fs::remove_file(&exe);
    assert!(out.status.success(), "C client exited with {:?}", out.status);
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "ok");
}
