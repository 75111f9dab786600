use std::ffi::{c_char, CStr, CString};
use std::process::Command;
use std::ptr;

use lieindex_ffi::*;

fn take(s: *mut c_char) -> String {
    assert!(!s.is_null());
    let out = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_string();
    unsafe { li_string_free(s) };
    out
}

fn last_error() -> String {
    let p = li_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_string()
}

#[test]
fn algebra_handles() {
    for (letter, rank, dim) in [(b'A', 1, 3), (b'G', 2, 14), (b'E', 6, 78), (b'D', 4, 28)] {
        let mut g = ptr::null_mut();
        assert_eq!(unsafe { li_algebra_new(letter as c_char, rank, &mut g) }, LiStatus::Ok);
        let (mut d, mut p) = (0usize, 0usize);
        assert_eq!(unsafe { li_algebra_dim(g, &mut d) }, LiStatus::Ok);
        assert_eq!(unsafe { li_algebra_positive_roots(g, &mut p) }, LiStatus::Ok);
        assert_eq!((d, 2 * p + rank), (dim, dim));
        unsafe { li_algebra_free(g) };
    }
    let mut g = ptr::null_mut();
    assert_eq!(unsafe { li_algebra_new(b'F' as c_char, 5, &mut g) }, LiStatus::InvalidInput);
    assert!(g.is_null());
    assert!(!last_error().is_empty());
    assert_eq!(unsafe { li_algebra_new(b'A' as c_char, 2, ptr::null_mut()) }, LiStatus::NullPointer);
    assert_eq!(unsafe { li_algebra_dim(ptr::null(), &mut 0) }, LiStatus::NullPointer);
    unsafe { li_algebra_free(ptr::null_mut()) };
}

#[test]
fn build_report() {
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { li_build_report_json(b'B' as c_char, 3, 0, 0, &mut s) }, LiStatus::Ok);
    let v: serde_json::Value = serde_json::from_str(&take(s)).unwrap();
    assert_eq!(v["dim"], 21);
    assert_eq!(v["jacobi"], "exhaustive");
    assert!(li_last_error().is_null());
}

#[test]
fn catalog_and_verification() {
    let mut c = ptr::null_mut();
    assert_eq!(unsafe { li_catalog_default(&mut c) }, LiStatus::Ok);
    let mut n = 0;
    assert_eq!(unsafe { li_catalog_len(c, &mut n) }, LiStatus::Ok);
    assert_eq!(n, 21);
    let mut k = ptr::null_mut();
    assert_eq!(unsafe { li_catalog_key(c, 0, &mut k) }, LiStatus::Ok);
    assert_eq!(take(k), "E6:1");
    assert_eq!(unsafe { li_catalog_key(c, 21, &mut k) }, LiStatus::InvalidInput);

    let key = CString::new("G2:1").unwrap();
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { li_orbit_info_json(c, key.as_ptr(), &mut s) }, LiStatus::Ok);
    let v: serde_json::Value = serde_json::from_str(&take(s)).unwrap();
    assert_eq!(v["dims"]["gxi"], 4);

    let cfg = li_rank_config_default();
    let run = || {
        let mut s = ptr::null_mut();
        assert_eq!(unsafe { li_verify_orbit_json(c, key.as_ptr(), &cfg, &mut s) }, LiStatus::Ok);
        take(s)
    };
    let a = run();
    assert_eq!(a, run());
    let v: serde_json::Value = serde_json::from_str(&a).unwrap();
    assert_eq!(v["pass"], true);
    assert_eq!(v["propP"]["status"]["kind"], "exact-pass");

    let bad = CString::new("E9:1").unwrap();
    assert_eq!(unsafe { li_verify_orbit_json(c, bad.as_ptr(), ptr::null(), &mut s) }, LiStatus::InvalidInput);
    let zero = LiRankConfig { trials: 0, ..cfg };
    assert_eq!(unsafe { li_verify_orbit_json(c, key.as_ptr(), &zero, &mut s) }, LiStatus::InvalidInput);
    unsafe { li_catalog_free(c) };
}

#[test]
fn catalog_parse_errors() {
    let mut c = ptr::null_mut();
    let text = CString::new("this is not a catalog").unwrap();
    assert_eq!(unsafe { li_catalog_parse(text.as_ptr(), &mut c) }, LiStatus::InvalidInput);
    assert!(c.is_null());
    assert_eq!(unsafe { li_catalog_parse(ptr::null(), &mut c) }, LiStatus::NullPointer);
}

#[test]
fn classical() {
    let (fam, part) = (CString::new("so").unwrap(), CString::new("5,3").unwrap());
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { li_classical_json(fam.as_ptr(), part.as_ptr(), ptr::null(), &mut s) }, LiStatus::Ok);
    let v: serde_json::Value = serde_json::from_str(&take(s)).unwrap();
    assert_eq!(v["algebra"], "so8");
    assert!(v["ind_n_z"].as_u64().unwrap() > 0);
    let part = CString::new("3,1").unwrap();
    let sp = CString::new("sp").unwrap();
    assert_eq!(unsafe { li_classical_json(sp.as_ptr(), part.as_ptr(), ptr::null(), &mut s) }, LiStatus::InvalidInput);
}

#[test]
fn header_declares_every_export_and_compiles() {
    let header = include_str!("../include/lieindex.h");
    let src = include_str!("../src/lib.rs");
    for line in src.lines().filter(|l| l.contains("extern \"C\" fn ")) {
        let name = line.split("fn ").nth(1).unwrap().split('(').next().unwrap();
        assert!(header.contains(&format!("{name}(")), "{name} missing from header");
    }
    let cc = std::env::var("CC").unwrap_or_else(|_| "cc".into());
    let dir = env!("CARGO_MANIFEST_DIR");
    let probe = std::env::temp_dir().join(format!("lieindex_header_{}.c", std::process::id()));
    std::fs::write(&probe, "#include \"lieindex.h\"\nint main(void) { LiRankConfig c = li_rank_config_default(); return (int)c.trials - 5; }\n").unwrap();
    match Command::new(&cc)
        .args(["-std=c99", "-Wall", "-Werror", "-fsyntax-only", "-I"])
        .arg(format!("{dir}/include"))
        .arg(&probe)
        .status()
    {
        Ok(st) => assert!(st.success(), "header does not compile"),
        Err(e) => eprintln!("skipping C compile: {cc}: {e}"),
    }
    let _ = std::fs::remove_file(probe);
}
