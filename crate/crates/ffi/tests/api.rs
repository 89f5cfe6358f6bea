use std::ffi::{CStr, CString};
use std::ptr;

use matex_ffi::*;

fn parse(text: &str) -> *mut MatexMatrix {
    let c = CString::new(text).unwrap();
    let mut m = ptr::null_mut();
    assert_eq!(unsafe { matex_matrix_parse(c.as_ptr(), &mut m) }, MatexStatus::Ok);
    m
}

fn text(m: *const MatexMatrix) -> String {
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { matex_matrix_to_string(m, &mut s) }, MatexStatus::Ok);
    let out = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_owned();
    unsafe { matex_string_free(s) };
    out
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(matex_last_error()) }
        .to_str()
        .unwrap()
        .to_owned()
}

#[test]
fn matrix_round_trip() {
    let m = parse("0110\n1001\n0100");
    unsafe {
        assert_eq!(matex_matrix_rows(m), 3);
        assert_eq!(matex_matrix_cols(m), 4);
        assert_eq!(matex_matrix_weight(m), 5);
        let mut v = false;
        assert_eq!(matex_matrix_get(m, 1, 0, &mut v), MatexStatus::Ok);
        assert!(v);
        assert_eq!(matex_matrix_set(m, 1, 0, false), MatexStatus::Ok);
        assert_eq!(matex_matrix_get(m, 3, 0, &mut v), MatexStatus::InvalidArgument);
    }
    assert_eq!(text(m), "0110\n0001\n0100");
    unsafe { matex_matrix_free(m) };
}

#[test]
fn errors_are_reported() {
    let bad = CString::new("01\n1").unwrap();
    let mut m = ptr::null_mut();
    assert_eq!(unsafe { matex_matrix_parse(bad.as_ptr(), &mut m) }, MatexStatus::Parse);
    assert!(last_error().contains("line 2"));
    assert_eq!(
        unsafe { matex_matrix_parse(ptr::null(), &mut m) },
        MatexStatus::NullPointer
    );
    assert_eq!(unsafe { matex_matrix_rows(ptr::null()) }, 0);
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { matex_pattern_l(9, &mut out) }, MatexStatus::InvalidArgument);
    unsafe {
        matex_matrix_free(ptr::null_mut());
        matex_patterns_free(ptr::null_mut());
        matex_string_free(ptr::null_mut());
    }
}

#[test]
fn containment_and_families() {
    let mut t = ptr::null_mut();
    assert_eq!(unsafe { matex_generate_t(1, 0, &mut t) }, MatexStatus::Ok);
    assert_eq!(unsafe { matex_patterns_len(t) }, 1);
    let mut diamond = ptr::null_mut();
    assert_eq!(unsafe { matex_patterns_get(t, 0, &mut diamond) }, MatexStatus::Ok);
    assert_eq!(text(diamond), "010\n101\n010");
    let full = parse("111\n111\n111");
    let ident = parse("100\n010\n001");
    let (mut a, mut b) = (false, false);
    unsafe {
        assert_eq!(matex_contains(full, diamond, &mut a), MatexStatus::Ok);
        assert_eq!(matex_avoids_all(ident, t, &mut b), MatexStatus::Ok);
    }
    assert!(a && b);
    unsafe {
        matex_matrix_free(full);
        matex_matrix_free(ident);
        matex_matrix_free(diamond);
        matex_patterns_free(t);
    }
}

#[test]
fn extremal_searches() {
    let mut p = ptr::null_mut();
    assert_eq!(unsafe { matex_pattern_p(2, 2, &mut p) }, MatexStatus::Ok);
    let mut set = ptr::null_mut();
    assert_eq!(unsafe { matex_patterns_single(p, &mut set) }, MatexStatus::Ok);

    let mut r = MatexExtremal::default();
    let mut w = ptr::null_mut();
    assert_eq!(
        unsafe { matex_ex_columns(3, 2, set, 0, &mut r, &mut w) },
        MatexStatus::Ok
    );
    assert_eq!((r.unbounded, r.value, r.exact), (false, 3, true));
    assert_eq!(unsafe { matex_matrix_cols(w) }, 3);
    unsafe { matex_matrix_free(w) };

    assert_eq!(
        unsafe { matex_ex_columns(5, 1, set, 0, &mut r, ptr::null_mut()) },
        MatexStatus::Ok
    );
    assert!(r.unbounded);

    assert_eq!(
        unsafe { matex_ex_weight(4, 4, set, 0, &mut r, ptr::null_mut()) },
        MatexStatus::Ok
    );
    assert_eq!(r.value, 9);
    assert_eq!(
        unsafe { matex_ex_weight(5, 5, set, 10, &mut r, ptr::null_mut()) },
        MatexStatus::BudgetExhausted
    );
    assert!(!r.exact);

    let mut t00 = ptr::null_mut();
    assert_eq!(unsafe { matex_generate_t(0, 0, &mut t00) }, MatexStatus::Ok);
    assert_eq!(
        unsafe { matex_ex_columns(3, 1, t00, 0, &mut r, ptr::null_mut()) },
        MatexStatus::UnknownBound
    );
    unsafe {
        matex_patterns_free(t00);
        matex_patterns_free(set);
        matex_matrix_free(p);
    }
}

#[test]
fn constructions_and_visibility() {
    let mut m = ptr::null_mut();
    assert_eq!(unsafe { matex_k_prime(4, 2, &mut m) }, MatexStatus::Ok);
    assert_eq!(unsafe { matex_matrix_weight(m) }, 4);
    let mut split = ptr::null_mut();
    assert_eq!(unsafe { matex_cluster_split(m, 1, &mut split) }, MatexStatus::Ok);
    assert_eq!(unsafe { matex_matrix_cols(split) }, 4);
    let mut ph = ptr::null_mut();
    assert_eq!(unsafe { matex_pigeonhole(4, 2, 3, &mut ph) }, MatexStatus::Ok);
    assert_eq!(unsafe { matex_matrix_cols(ph) }, 12);
    let mut lower = ptr::null_mut();
    assert_eq!(unsafe { matex_lower_bound_p_r2(5, 2, 4, &mut lower) }, MatexStatus::Ok);
    assert_eq!(unsafe { matex_matrix_cols(lower) }, 10);

    let layout = CString::new("1 0 10\n2 1 11\n3 2 12\n").unwrap();
    let mut edges = 0;
    assert_eq!(
        unsafe { matex_layout_edge_count(layout.as_ptr(), 0, &mut edges) },
        MatexStatus::Ok
    );
    assert_eq!(edges, 2);
    let mut mult = usize::MAX;
    assert_eq!(
        unsafe { matex_matrix_max_multiplicity(m, 1, 0, &mut mult) },
        MatexStatus::Ok
    );
    assert_eq!(mult, 0);
    for h in [m, split, ph, lower] {
        unsafe { matex_matrix_free(h) };
    }
}
