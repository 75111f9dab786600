//! C interface to lieindex.
//!
//! Every function returns a `LiStatus`. On anything other than `LI_STATUS_OK` or
//! `LI_STATUS_VERIFIED_FAIL` a message is available from `li_last_error` until the
//! next call on the same thread. Handles and strings returned through out
//! parameters are owned by the caller and released with the matching
//! `*_free` function.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use lieindex::chevalley::{build, CartanType, SimpleLie, SimpleType};
use lieindex::classical::{parse_partition, Family};
use lieindex::index::RankConfig;
use lieindex::report::{self, DEFAULT_CATALOG};
use lieindex::slice::{find_orbit, load_catalog, CatalogOrbit};
use lieindex::Error;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LiStatus {
    Ok = 0,
    /// The computation finished and a checked statement failed.
    VerifiedFail = 1,
    InvalidInput = 2,
    DataIntegrity = 3,
    Unsupported = 4,
    NullPointer = 5,
    Internal = 6,
}

/// A simple Lie algebra with its Chevalley basis.
pub struct LiAlgebra(SimpleLie);

/// A validated orbit catalog.
pub struct LiCatalog(Vec<CatalogOrbit>);

/// Random-form parameters for generic ranks.
#[repr(C)]
#[derive(Clone, Copy, Debug)]
pub struct LiRankConfig {
    pub trials: usize,
    pub bound: i64,
    pub seed: u64,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

fn status_of(e: &Error) -> LiStatus {
    match e {
        Error::Input(_) | Error::Parse { .. } => LiStatus::InvalidInput,
        Error::DataIntegrity(_) => LiStatus::DataIntegrity,
        Error::Unsupported(_) => LiStatus::Unsupported,
        Error::PropertyViolation(_) => LiStatus::VerifiedFail,
    }
}

enum Fail {
    Lib(Error),
    Null(&'static str),
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail::Lib(e)
    }
}

/// Run `f`, turning errors and panics into a status and the last error.
fn guard(f: impl FnOnce() -> Result<LiStatus, Fail>) -> LiStatus {
    clear_error();
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(s)) => s,
        Ok(Err(Fail::Lib(e))) => {
            set_error(e.to_string());
            status_of(&e)
        }
        Ok(Err(Fail::Null(what))) => {
            set_error(format!("{what} is null"));
            LiStatus::NullPointer
        }
        Err(p) => {
            let msg = p
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| p.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".into());
            set_error(format!("internal error: {msg}"));
            LiStatus::Internal
        }
    }
}

unsafe fn str_arg<'a>(p: *const c_char, what: &'static str) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(Fail::Null(what));
    }
    CStr::from_ptr(p).to_str().map_err(|_| Fail::Lib(Error::Input(format!("{what} is not UTF-8"))))
}

unsafe fn ref_arg<'a, T>(p: *const T, what: &'static str) -> Result<&'a T, Fail> {
    p.as_ref().ok_or(Fail::Null(what))
}

fn out_arg<T>(p: *mut T, what: &'static str) -> Result<(), Fail> {
    if p.is_null() {
        Err(Fail::Null(what))
    } else {
        Ok(())
    }
}

fn config(c: *const LiRankConfig) -> Result<RankConfig, Fail> {
    let cfg = match unsafe { c.as_ref() } {
        Some(c) => RankConfig { trials: c.trials, bound: c.bound, seed: c.seed },
        None => RankConfig::default(),
    };
    cfg.validate()?;
    Ok(cfg)
}

fn json_out<T: serde::Serialize>(rec: &T, out: *mut *mut c_char) -> Result<(), Fail> {
    let s = serde_json::to_string(rec).map_err(|e| Error::Input(e.to_string()))?;
    let c = CString::new(s).map_err(|e| Error::Input(e.to_string()))?;
    unsafe { *out = c.into_raw() };
    Ok(())
}

fn verdict(pass: bool) -> LiStatus {
    if pass {
        LiStatus::Ok
    } else {
        LiStatus::VerifiedFail
    }
}

/// Message for the last failing call on this thread, or null. The pointer
/// stays valid until the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn li_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Default rank parameters: 5 trials, bound 1000, seed 0.
#[no_mangle]
pub extern "C" fn li_rank_config_default() -> LiRankConfig {
    let d = RankConfig::default();
    LiRankConfig { trials: d.trials, bound: d.bound, seed: d.seed }
}

/// Build the algebra of type `letter` (one of A–G) and rank `rank`.
///
/// # Safety
/// `out` must be valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn li_algebra_new(letter: c_char, rank: usize, out: *mut *mut LiAlgebra) -> LiStatus {
    guard(|| {
        out_arg(out, "out")?;
        let ty = SimpleType::from_letter(letter as u8 as char)?;
        let g = build(CartanType::new(ty, rank)?)?;
        *out = Box::into_raw(Box::new(LiAlgebra(g)));
        Ok(LiStatus::Ok)
    })
}

/// # Safety
/// `g` must be null or a handle from `li_algebra_new` not yet freed.
#[no_mangle]
pub unsafe extern "C" fn li_algebra_free(g: *mut LiAlgebra) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// # Safety
/// `g` must be a live handle and `dim` valid for a write.
#[no_mangle]
pub unsafe extern "C" fn li_algebra_dim(g: *const LiAlgebra, dim: *mut usize) -> LiStatus {
    guard(|| {
        let g = ref_arg(g, "algebra")?;
        out_arg(dim, "dim")?;
        *dim = g.0.algebra.dim();
        Ok(LiStatus::Ok)
    })
}

/// # Safety
/// `g` must be a live handle and `count` valid for a write.
#[no_mangle]
pub unsafe extern "C" fn li_algebra_positive_roots(g: *const LiAlgebra, count: *mut usize) -> LiStatus {
    guard(|| {
        let g = ref_arg(g, "algebra")?;
        out_arg(count, "count")?;
        *count = g.0.roots.num_positive();
        Ok(LiStatus::Ok)
    })
}

/// Build report as JSON. `jacobi_samples` = 0 checks every triple.
/// Returns `LI_STATUS_VERIFIED_FAIL` if the Jacobi identity fails.
///
/// # Safety
/// `json` must be valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn li_build_report_json(
    letter: c_char,
    rank: usize,
    jacobi_samples: usize,
    seed: u64,
    json: *mut *mut c_char,
) -> LiStatus {
    guard(|| {
        out_arg(json, "json")?;
        let ty = SimpleType::from_letter(letter as u8 as char)?;
        let samples = (jacobi_samples > 0).then_some(jacobi_samples);
        let r = report::build_report(CartanType::new(ty, rank)?, samples, seed, false)?;
        json_out(&r, json)?;
        Ok(verdict(r.jacobi_ok))
    })
}

/// The bundled catalog of exceptional orbits.
///
/// # Safety
/// `out` must be valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn li_catalog_default(out: *mut *mut LiCatalog) -> LiStatus {
    guard(|| {
        out_arg(out, "out")?;
        *out = Box::into_raw(Box::new(LiCatalog(load_catalog(DEFAULT_CATALOG)?)));
        Ok(LiStatus::Ok)
    })
}

/// Parse and validate a catalog from its text.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn li_catalog_parse(text: *const c_char, out: *mut *mut LiCatalog) -> LiStatus {
    guard(|| {
        let text = str_arg(text, "text")?;
        out_arg(out, "out")?;
        *out = Box::into_raw(Box::new(LiCatalog(load_catalog(text)?)));
        Ok(LiStatus::Ok)
    })
}

/// # Safety
/// `c` must be null or a catalog handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn li_catalog_free(c: *mut LiCatalog) {
    if !c.is_null() {
        drop(Box::from_raw(c));
    }
}

/// # Safety
/// `c` must be a live handle and `len` valid for a write.
#[no_mangle]
pub unsafe extern "C" fn li_catalog_len(c: *const LiCatalog, len: *mut usize) -> LiStatus {
    guard(|| {
        let c = ref_arg(c, "catalog")?;
        out_arg(len, "len")?;
        *len = c.0.len();
        Ok(LiStatus::Ok)
    })
}

/// `TYPE:index` key of the orbit at position `i`.
///
/// # Safety
/// `c` must be a live handle and `key` valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn li_catalog_key(c: *const LiCatalog, i: usize, key: *mut *mut c_char) -> LiStatus {
    guard(|| {
        let c = ref_arg(c, "catalog")?;
        out_arg(key, "key")?;
        let o = c.0.get(i).ok_or_else(|| Error::Input(format!("orbit {i} out of range ({})", c.0.len())))?;
        *key = CString::new(o.id()).map_err(|e| Error::Input(e.to_string()))?.into_raw();
        Ok(LiStatus::Ok)
    })
}

unsafe fn lookup<'a>(c: *const LiCatalog, key: *const c_char) -> Result<&'a CatalogOrbit, Fail> {
    let c = ref_arg(c, "catalog")?;
    let key = str_arg(key, "key")?;
    Ok(find_orbit(&c.0, key).ok_or_else(|| Error::Input(format!("no orbit '{key}' in the catalog")))?)
}

/// Dimensions, weights and characteristic of one orbit as JSON.
///
/// # Safety
/// `c` must be a live handle, `key` NUL-terminated, `json` valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn li_orbit_info_json(
    c: *const LiCatalog,
    key: *const c_char,
    json: *mut *mut c_char,
) -> LiStatus {
    guard(|| {
        let o = lookup(c, key)?;
        out_arg(json, "json")?;
        json_out(&report::orbit_info(o)?, json)?;
        Ok(LiStatus::Ok)
    })
}

/// Verify one orbit and write its record as JSON. `cfg` may be null for
/// the defaults. Returns `LI_STATUS_VERIFIED_FAIL` with the record written when a
/// check fails.
///
/// # Safety
/// `c` must be a live handle, `key` NUL-terminated, `cfg` null or valid,
/// `json` valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn li_verify_orbit_json(
    c: *const LiCatalog,
    key: *const c_char,
    cfg: *const LiRankConfig,
    json: *mut *mut c_char,
) -> LiStatus {
    guard(|| {
        let o = lookup(c, key)?;
        out_arg(json, "json")?;
        let r = report::verify_orbit(o, &config(cfg)?, false)?;
        json_out(&r, json)?;
        Ok(verdict(r.pass))
    })
}

/// Closed-form checks for the nilpotent of `family` ("sl", "so", "sp")
/// with Jordan blocks given by `partition` (e.g. "5,3").
///
/// # Safety
/// `family` and `partition` must be NUL-terminated, `cfg` null or valid,
/// `json` valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn li_classical_json(
    family: *const c_char,
    partition: *const c_char,
    cfg: *const LiRankConfig,
    json: *mut *mut c_char,
) -> LiStatus {
    guard(|| {
        let family: Family = str_arg(family, "family")?.parse()?;
        let parts = parse_partition(str_arg(partition, "partition")?)?;
        out_arg(json, "json")?;
        let r = report::classical_report(family, &parts, &config(cfg)?, false)?;
        json_out(&r, json)?;
        Ok(verdict(r.pass))
    })
}

/// Release a string returned by this library.
///
/// # Safety
/// `s` must be null or a string from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn li_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
