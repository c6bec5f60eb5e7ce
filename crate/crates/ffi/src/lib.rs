//! C ABI over the tlj-core diagram engine.
//!
//! Objects cross the boundary as opaque handles created by `tlj_*_new` or
//! returned through out-pointers, and released with the matching
//! `tlj_*_free`. Every fallible call returns a [`TljStatus`]; the message
//! of the last failure on the calling thread is available from
//! [`tlj_last_error`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use tlj_core::diagrams::{parse_word, plain_word, vector_from_json, vector_to_json, DiagramVector, Engine, EvalParams, Flavor, Word};
use tlj_core::error::Error;
use tlj_core::lab::phi_matrix_theorem1;
use tlj_core::scalars::Ring;
use tlj_core::verify::{run_check, CRITERIA};

/// Result codes. `Ok` is zero; everything else is a failure.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TljStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    InvalidArgument = 4,
    Mismatch = 5,
    Math = 6,
    Panic = 7,
}

/// A diagram category with a fixed evaluation kernel.
pub struct TljEngine {
    engine: Engine,
}

/// A linear combination of diagrams.
pub struct TljVector {
    vector: DiagramVector,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> TljStatus {
    match e {
        Error::Parse(_) | Error::Json(_) => TljStatus::Parse,
        Error::InvalidArgument(_) | Error::UnbalancedWord(_) | Error::IndexOutOfRange { .. } | Error::InvalidDiagram(_) => {
            TljStatus::InvalidArgument
        }
        Error::RingMismatch(..) | Error::FlavorMismatch(..) | Error::BoundaryMismatch(_) | Error::SizeMismatch(_) => {
            TljStatus::Mismatch
        }
        _ => TljStatus::Math,
    }
}

type FfiResult<T> = std::result::Result<T, (TljStatus, String)>;

fn core<T>(r: tlj_core::error::Result<T>) -> FfiResult<T> {
    r.map_err(|e| (status_of(&e), e.to_string()))
}

/// Runs `f`, recording any failure or panic as the thread's last error.
fn guard(f: impl FnOnce() -> FfiResult<()>) -> TljStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => TljStatus::Ok,
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic".into());
            TljStatus::Panic
        }
    }
}

unsafe fn read_str<'a>(p: *const c_char, what: &str) -> FfiResult<&'a str> {
    if p.is_null() {
        return Err((TljStatus::NullPointer, format!("{what} is null")));
    }
    CStr::from_ptr(p).to_str().map_err(|_| (TljStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn read_ref<'a, T>(p: *const T, what: &str) -> FfiResult<&'a T> {
    p.as_ref().ok_or_else(|| (TljStatus::NullPointer, format!("{what} is null")))
}

fn check_out<T>(out: *mut T) -> FfiResult<()> {
    if out.is_null() {
        Err((TljStatus::NullPointer, "output pointer is null".into()))
    } else {
        Ok(())
    }
}

fn word_for(engine: &Engine, text: &str) -> FfiResult<Word> {
    if engine.flavor == Flavor::Tl {
        Ok(plain_word(text.chars().filter(|c| !c.is_whitespace()).count()))
    } else {
        core(parse_word(text))
    }
}

/// Message of the last failed call on this thread, or null. The pointer
/// stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn tlj_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Builds an engine. `flavor` is `tl`, `otl` or `brauer`; `ring` is a ring
/// selector such as `laurent:d`; `regime` is `standard`, `renorm`,
/// `infinity` or `oriented:c1,c2,z,zs`. `delta` may be null, in which case
/// the ring's first variable is used where a circle value is needed.
///
/// # Safety
/// String arguments must be null or valid NUL-terminated strings; `out`
/// must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tlj_engine_new(
    flavor: *const c_char,
    ring: *const c_char,
    regime: *const c_char,
    delta: *const c_char,
    out: *mut *mut TljEngine,
) -> TljStatus {
    guard(|| {
        check_out(out)?;
        let flavor: Flavor = core(read_str(flavor, "flavor")?.parse())?;
        let ring: Ring = core(read_str(ring, "ring")?.parse())?;
        let regime = read_str(regime, "regime")?;
        let delta = if delta.is_null() {
            ring.variables().first().map(|v| ring.var(v)).transpose()
        } else {
            ring.parse(read_str(delta, "delta")?).map(Some)
        };
        let params = core(EvalParams::parse(regime, &ring, core(delta)?.as_ref()))?;
        let engine = core(Engine::new(flavor, params))?;
        *out = Box::into_raw(Box::new(TljEngine { engine }));
        Ok(())
    })
}

/// # Safety
/// `engine` must be null or a handle from [`tlj_engine_new`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn tlj_engine_free(engine: *mut TljEngine) {
    if !engine.is_null() {
        drop(Box::from_raw(engine));
    }
}

/// Dimension of End(word). For TL engines only the length of `word` matters.
///
/// # Safety
/// Pointers must be valid as described for [`tlj_engine_new`].
#[no_mangle]
pub unsafe extern "C" fn tlj_engine_end_dim(engine: *const TljEngine, word: *const c_char, out: *mut usize) -> TljStatus {
    guard(|| {
        check_out(out)?;
        let e = &read_ref(engine, "engine")?.engine;
        let w = word_for(e, read_str(word, "word")?)?;
        *out = core(e.hom_basis(&w, &w))?.len();
        Ok(())
    })
}

/// Identity of `word`.
///
/// # Safety
/// Pointers must be valid as described for [`tlj_engine_new`].
#[no_mangle]
pub unsafe extern "C" fn tlj_vector_identity(engine: *const TljEngine, word: *const c_char, out: *mut *mut TljVector) -> TljStatus {
    guard(|| {
        check_out(out)?;
        let e = &read_ref(engine, "engine")?.engine;
        let w = word_for(e, read_str(word, "word")?)?;
        let vector = core(e.identity(&w))?;
        *out = Box::into_raw(Box::new(TljVector { vector }));
        Ok(())
    })
}

/// Parses a vector from its JSON form.
///
/// # Safety
/// `json` must be a valid NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tlj_vector_from_json(json: *const c_char, out: *mut *mut TljVector) -> TljStatus {
    guard(|| {
        check_out(out)?;
        let value: serde_json::Value =
            serde_json::from_str(read_str(json, "json")?).map_err(|e| (TljStatus::Parse, e.to_string()))?;
        let vector = core(vector_from_json(&value))?;
        *out = Box::into_raw(Box::new(TljVector { vector }));
        Ok(())
    })
}

/// `upper ∘ lower`, evaluated in the engine's kernel.
///
/// # Safety
/// Handles must be live; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tlj_vector_compose(
    engine: *const TljEngine,
    upper: *const TljVector,
    lower: *const TljVector,
    out: *mut *mut TljVector,
) -> TljStatus {
    guard(|| {
        check_out(out)?;
        let e = &read_ref(engine, "engine")?.engine;
        let (u, l) = (&read_ref(upper, "upper")?.vector, &read_ref(lower, "lower")?.vector);
        let vector = core(e.compose(u, l))?;
        *out = Box::into_raw(Box::new(TljVector { vector }));
        Ok(())
    })
}

/// Writes 1 to `out` when the two vectors are equal, 0 otherwise.
///
/// # Safety
/// Handles must be live; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tlj_vector_equal(a: *const TljVector, b: *const TljVector, out: *mut i32) -> TljStatus {
    guard(|| {
        check_out(out)?;
        *out = i32::from(read_ref(a, "a")?.vector == read_ref(b, "b")?.vector);
        Ok(())
    })
}

/// Number of diagrams with nonzero coefficient.
///
/// # Safety
/// `v` must be live; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tlj_vector_term_count(v: *const TljVector, out: *mut usize) -> TljStatus {
    guard(|| {
        check_out(out)?;
        *out = read_ref(v, "vector")?.vector.terms().len();
        Ok(())
    })
}

/// JSON form of a vector; release the string with [`tlj_string_free`].
///
/// # Safety
/// `v` must be live; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tlj_vector_to_json(v: *const TljVector, out: *mut *mut c_char) -> TljStatus {
    guard(|| {
        check_out(out)?;
        let text = vector_to_json(&read_ref(v, "vector")?.vector).to_string();
        *out = CString::new(text).map_err(|e| (TljStatus::Math, e.to_string()))?.into_raw();
        Ok(())
    })
}

/// # Safety
/// `v` must be null or a live vector handle.
#[no_mangle]
pub unsafe extern "C" fn tlj_vector_free(v: *mut TljVector) {
    if !v.is_null() {
        drop(Box::from_raw(v));
    }
}

/// # Safety
/// `s` must be null or a string returned by this library.
#[no_mangle]
pub unsafe extern "C" fn tlj_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Writes 1 to `out` when the n!×n! pairing matrix over S_n is the identity.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tlj_phi_is_identity(n: usize, out: *mut i32) -> TljStatus {
    guard(|| {
        check_out(out)?;
        if n == 0 || n > 6 {
            return Err((TljStatus::InvalidArgument, format!("n = {n} outside 1..=6")));
        }
        *out = i32::from(core(phi_matrix_theorem1(n))?.is_identity);
        Ok(())
    })
}

/// Number of acceptance criteria.
#[no_mangle]
pub extern "C" fn tlj_criteria_count() -> usize {
    CRITERIA.len()
}

/// Runs acceptance criterion `id` (1-based) and writes 1 to `out` on pass.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tlj_run_criterion(id: usize, seed: u64, out: *mut i32) -> TljStatus {
    guard(|| {
        check_out(out)?;
        if id == 0 || id > CRITERIA.len() {
            return Err((TljStatus::InvalidArgument, format!("no criterion {id}")));
        }
        let r = run_check(id, seed);
        if !r.pass {
            set_error(r.detail);
        }
        *out = i32::from(r.pass);
        Ok(())
    })
}
