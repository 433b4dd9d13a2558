use std::ffi::{c_char, CStr, CString};
use std::ptr;

use vsasm_ffi::*;

fn take_string(s: *mut c_char) -> String {
    let out = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_string();
    unsafe { vsasm_string_free(s) };
    out
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(vsasm_last_error()) }.to_str().unwrap().to_string()
}

fn gf(model: &str, n: u32) -> *mut VsasmPoly {
    let name = CString::new(model).unwrap();
    let mut p = ptr::null_mut();
    assert_eq!(unsafe { vsasm_gf(name.as_ptr(), n, &mut p) }, VsasmStatus::Ok, "{}", last_error());
    p
}

#[test]
fn models_agree_across_the_boundary() {
    let brute = gf("brute", 2);
    let jt4 = gf("jt4", 2);
    let mut eq = false;
    assert_eq!(unsafe { vsasm_poly_equal(brute, jt4, &mut eq) }, VsasmStatus::Ok);
    assert!(eq);
    let mut terms = 0usize;
    assert_eq!(unsafe { vsasm_poly_num_terms(brute, &mut terms) }, VsasmStatus::Ok);
    assert_eq!(terms, 26);
    unsafe {
        vsasm_poly_free(brute);
        vsasm_poly_free(jt4);
    }
}

#[test]
fn json_round_trip_and_arithmetic() {
    let p = gf("bialternant", 1);
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { vsasm_poly_to_json(p, &mut s) }, VsasmStatus::Ok);
    let json = CString::new(take_string(s)).unwrap();
    let mut q = ptr::null_mut();
    assert_eq!(unsafe { vsasm_poly_from_json(json.as_ptr(), &mut q) }, VsasmStatus::Ok);
    let mut diff = ptr::null_mut();
    assert_eq!(unsafe { vsasm_poly_sub(p, q, &mut diff) }, VsasmStatus::Ok);
    let mut terms = 99usize;
    unsafe { vsasm_poly_num_terms(diff, &mut terms) };
    assert_eq!(terms, 0);
    let mut sq = ptr::null_mut();
    assert_eq!(unsafe { vsasm_poly_mul(p, q, &mut sq) }, VsasmStatus::Ok);
    let mut text = ptr::null_mut();
    unsafe { vsasm_poly_to_string(p, &mut text) };
    assert_eq!(take_string(text), "u*X1 + w + v*X1^-1");
    // (u X + v/X + w)^2 at u = v = X = 1, w = -1 is 1
    let mut val = ptr::null_mut();
    assert_eq!(unsafe { vsasm_poly_eval(sq, [1, 1, -1, 1].as_ptr(), 4, &mut val) }, VsasmStatus::Ok);
    assert_eq!(take_string(val), "1");
    unsafe {
        for h in [p, q, diff, sq] {
            vsasm_poly_free(h);
        }
    }
}

#[test]
fn counts() {
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { vsasm_count(5, ptr::null(), 0, &mut s) }, VsasmStatus::Ok);
    assert_eq!(take_string(s), "45885");
    assert_eq!(unsafe { vsasm_unrefined_det(4, &mut s) }, VsasmStatus::Ok);
    assert_eq!(take_string(s), "646");
    s = ptr::null_mut();
    assert_eq!(unsafe { vsasm_count(2, [1, 1, -1, 2, 1].as_ptr(), 5, &mut s) }, VsasmStatus::Evaluation);
    assert!(s.is_null());
    assert!(last_error().contains("inverse"));
}

#[test]
fn arbitrary_bottom_rows() {
    let name = CString::new("operator").unwrap();
    let mut p = ptr::null_mut();
    assert_eq!(unsafe { vsasm_gf_bottom(name.as_ptr(), [0, 1].as_ptr(), 2, &mut p) }, VsasmStatus::Ok);
    unsafe { vsasm_poly_free(p) };
    let name = CString::new("pairs").unwrap();
    assert_eq!(unsafe { vsasm_gf_bottom(name.as_ptr(), [0, 1].as_ptr(), 2, &mut p) }, VsasmStatus::Unsupported);
    assert_eq!(unsafe { vsasm_gf_bottom(name.as_ptr(), [1, 0].as_ptr(), 2, &mut p) }, VsasmStatus::Structure);
}

#[test]
fn error_codes() {
    let mut p = ptr::null_mut();
    let bad = CString::new("nope").unwrap();
    assert_eq!(unsafe { vsasm_gf(bad.as_ptr(), 2, &mut p) }, VsasmStatus::Parse);
    assert!(last_error().contains("nope"));
    assert!(p.is_null());
    assert_eq!(unsafe { vsasm_gf(ptr::null(), 2, &mut p) }, VsasmStatus::NullPointer);
    let good = CString::new("brute").unwrap();
    assert_eq!(unsafe { vsasm_gf(good.as_ptr(), 2, ptr::null_mut()) }, VsasmStatus::NullPointer);
    assert_eq!(unsafe { vsasm_gf(good.as_ptr(), 0, &mut p) }, VsasmStatus::Unsupported);
    let json = CString::new("{not json").unwrap();
    assert_eq!(unsafe { vsasm_poly_from_json(json.as_ptr(), &mut p) }, VsasmStatus::Parse);
    let (a, b) = (gf("brute", 1), gf("brute", 2));
    assert_eq!(unsafe { vsasm_poly_add(a, b, &mut p) }, VsasmStatus::Alphabet);
    unsafe {
        vsasm_poly_free(a);
        vsasm_poly_free(b);
        vsasm_poly_free(ptr::null_mut());
        vsasm_string_free(ptr::null_mut());
    }
    assert_eq!(unsafe { vsasm_gf(good.as_ptr(), 1, &mut p) }, VsasmStatus::Ok);
    assert_eq!(last_error(), "");
    unsafe { vsasm_poly_free(p) };
}

#[test]
fn version_string() {
    let v = unsafe { CStr::from_ptr(vsasm_version()) }.to_str().unwrap();
    assert_eq!(v, env!("CARGO_PKG_VERSION"));
}
