use std::ffi::{c_char, CStr, CString};
use std::ptr;

use plscl_ffi::*;

const T: &str = r#"{"breakpoints": [["0","0"], ["1/4","1/2"], ["1","1"]]}"#;
const GENS: &str = r#"{
  "a": {"breakpoints": [["0","0"], ["1/4","1/4"], ["3/8","1/2"], ["5/8","5/8"], ["1","1"]]},
  "b": {"breakpoints": [["0","0"], ["3/8","3/8"], ["7/16","1/2"], ["1/2","9/16"], ["5/8","5/8"], ["1","1"]]},
  "x0": {"breakpoints": [["0","0"], ["1/2","1/4"], ["3/4","1/2"], ["1","1"]]}
}"#;
const EXPR: &str =
    r#"{"target": [["a",1],["b",1],["a",-1],["b",-1]], "pairs": [[[["a",1]], [["b",1]]]]}"#;

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

/// Takes ownership of a library string.
unsafe fn take(s: *mut c_char) -> String {
    let out = CStr::from_ptr(s).to_str().unwrap().to_owned();
    plscl_string_free(s);
    out
}

unsafe fn last_error() -> String {
    CStr::from_ptr(plscl_last_error_message())
        .to_str()
        .unwrap()
        .to_owned()
}

unsafe fn parse_map(json: &str) -> *mut PlsclMap {
    let mut m = ptr::null_mut();
    assert_eq!(
        plscl_map_from_json(c(json).as_ptr(), &mut m),
        PlsclStatus::Ok
    );
    m
}

#[test]
fn map_round_trip_and_algebra() {
    unsafe {
        let t = parse_map(T);
        let mut s = ptr::null_mut();
        assert_eq!(plscl_map_to_json(t, &mut s), PlsclStatus::Ok);
        assert_eq!(
            take(s),
            r#"{"breakpoints":[["0","0"],["1/4","1/2"],["1","1"]]}"#
        );

        let mut v = ptr::null_mut();
        assert_eq!(
            plscl_map_eval(t, c("1/8").as_ptr(), &mut v),
            PlsclStatus::Ok
        );
        assert_eq!(take(v), "1/4");

        let (mut s0, mut s1) = (ptr::null_mut(), ptr::null_mut());
        assert_eq!(plscl_map_eta(t, &mut s0, &mut s1), PlsclStatus::Ok);
        assert_eq!((take(s0), take(s1)), ("2".to_string(), "2/3".to_string()));

        let (mut inv, mut prod, mut id) = (ptr::null_mut(), ptr::null_mut(), ptr::null_mut());
        assert_eq!(plscl_map_invert(t, &mut inv), PlsclStatus::Ok);
        assert_eq!(plscl_map_compose(t, inv, &mut prod), PlsclStatus::Ok);
        assert_eq!(plscl_map_identity(&mut id), PlsclStatus::Ok);
        let mut eq = false;
        assert_eq!(plscl_map_equal(prod, id, &mut eq), PlsclStatus::Ok);
        assert!(eq);

        let (mut sq, mut tt) = (ptr::null_mut(), ptr::null_mut());
        assert_eq!(plscl_map_power(t, 2, &mut sq), PlsclStatus::Ok);
        assert_eq!(plscl_map_compose(t, t, &mut tt), PlsclStatus::Ok);
        assert_eq!(plscl_map_equal(sq, tt, &mut eq), PlsclStatus::Ok);
        assert!(eq);

        let mut dyadic = true;
        assert_eq!(plscl_map_is_dyadic(t, &mut dyadic), PlsclStatus::Ok);
        assert!(!dyadic);

        for m in [t, inv, prod, id, sq, tt] {
            plscl_map_free(m);
        }
    }
}

#[test]
fn errors_carry_status_and_message() {
    unsafe {
        let mut m = ptr::null_mut();
        let bad = r#"{"breakpoints": [["0","0"], ["1/2","1/2"]]}"#;
        assert_eq!(
            plscl_map_from_json(c(bad).as_ptr(), &mut m),
            PlsclStatus::InvalidMap
        );
        assert!(m.is_null());
        assert!(!last_error().is_empty());

        assert_eq!(
            plscl_thompson_generator(2, &mut m),
            PlsclStatus::InvalidIndex
        );
        assert_eq!(
            plscl_map_from_json(ptr::null(), &mut m),
            PlsclStatus::NullPointer
        );

        let t = parse_map(T);
        assert!(last_error().is_empty());
        let mut v = ptr::null_mut();
        assert_eq!(
            plscl_map_eval(t, c("3/2").as_ptr(), &mut v),
            PlsclStatus::DomainError
        );
        assert_eq!(
            plscl_map_eval(t, c("x").as_ptr(), &mut v),
            PlsclStatus::InvalidInput
        );
        assert_eq!(
            plscl_map_eval(t, c("1/2").as_ptr(), ptr::null_mut()),
            PlsclStatus::NullPointer
        );
        let invalid_utf8 = [0xffu8, 0];
        assert_eq!(
            plscl_map_eval(t, invalid_utf8.as_ptr().cast(), &mut v),
            PlsclStatus::InvalidUtf8
        );
        plscl_map_free(t);

        plscl_map_free(ptr::null_mut());
        plscl_string_free(ptr::null_mut());
        plscl_certificate_free(ptr::null_mut());
    }
}

#[test]
fn certify_verify_and_tamper() {
    unsafe {
        let mut cert = ptr::null_mut();
        let status = plscl_certify(
            c(GENS).as_ptr(),
            c(EXPR).as_ptr(),
            ptr::null(),
            9,
            6,
            &mut cert,
        );
        assert_eq!(status, PlsclStatus::Ok, "{}", last_error());
        assert_eq!(plscl_certificate_verify(cert), PlsclStatus::Ok);
        let mut b = ptr::null_mut();
        assert_eq!(plscl_certificate_bound(cert, &mut b), PlsclStatus::Ok);
        assert_eq!(take(b), "1/5");

        let mut js = ptr::null_mut();
        assert_eq!(plscl_certificate_to_json(cert, &mut js), PlsclStatus::Ok);
        let json = take(js);
        assert!(json.contains(r#""j":[["x0",2]]"#));
        plscl_certificate_free(cert);

        let tampered = json.replace(r#""claimed_bound":"1/5""#, r#""claimed_bound":"1/6""#);
        let mut bad = ptr::null_mut();
        assert_eq!(
            plscl_certificate_from_json(c(&tampered).as_ptr(), &mut bad),
            PlsclStatus::Ok
        );
        assert_eq!(plscl_certificate_verify(bad), PlsclStatus::WrongBound);
        assert!(last_error().contains("WrongBound"));
        plscl_certificate_free(bad);
    }
}

#[test]
fn certify_reports_library_errors() {
    unsafe {
        let ids = r#"{"a": {"breakpoints": [["0","0"], ["1","1"]]},
                      "h": {"breakpoints": [["0","0"], ["1/4","1/4"], ["3/8","1/2"], ["5/8","5/8"], ["1","1"]]}}"#;
        let expr = r#"{"target": [["h",1]], "pairs": [[[["a",1]], [["a",-1]]]]}"#;
        let mut cert = ptr::null_mut();
        let j = c(r#"[["x0",2]]"#);
        let status = plscl_certify(
            c(ids).as_ptr(),
            c(expr).as_ptr(),
            j.as_ptr(),
            9,
            6,
            &mut cert,
        );
        assert_eq!(status, PlsclStatus::ProductMismatch);
        assert!(cert.is_null());

        let rebound = r#"{"x0": {"breakpoints": [["0","0"], ["1/4","1/2"], ["1","1"]]}}"#;
        let mut out = ptr::null_mut();
        assert_eq!(
            plscl_fixed_set_json(c(rebound).as_ptr(), &mut out),
            PlsclStatus::InvalidInput
        );
    }
}

#[test]
fn fixed_sets_and_displacers() {
    unsafe {
        let gens = r#"{"a": {"breakpoints": [["0","0"], ["1/4","1/2"], ["1","1"]]}}"#;
        let targets = c(r#"[["1/4","1/2"]]"#);
        let mut out = ptr::null_mut();
        assert_eq!(
            plscl_displace_json(c(gens).as_ptr(), targets.as_ptr(), 3, &mut out),
            PlsclStatus::Ok
        );
        assert_eq!(take(out), r#"[["a",2]]"#);
        assert_eq!(
            plscl_displace_json(c(gens).as_ptr(), targets.as_ptr(), 1, &mut out),
            PlsclStatus::BudgetExhausted
        );

        let two = r#"{"a": {"breakpoints": [["0","0"], ["1/4","1/4"], ["3/8","1/2"], ["5/8","5/8"], ["1","1"]]}}"#;
        assert_eq!(
            plscl_fixed_set_json(c(two).as_ptr(), &mut out),
            PlsclStatus::Ok
        );
        assert_eq!(
            take(out),
            r#"{"components":[["1/4","5/8"]],"fixed":[["0","1/4"],["5/8","1"]]}"#
        );
    }
}
