use cyquiv_ffi::*;
use std::ffi::{CStr, CString};
use std::ptr;

fn s(x: &str) -> CString {
    CString::new(x).unwrap()
}

unsafe fn take(p: *mut std::ffi::c_char) -> String {
    let out = CStr::from_ptr(p).to_str().unwrap().to_string();
    cyq_string_free(p);
    out
}

#[test]
fn series_handles() {
    unsafe {
        let mut plane = ptr::null_mut();
        assert_eq!(cyq_series_count(s("plane").as_ptr(), 8, 0, &mut plane), CyqStatus::Ok);
        let mut mm = ptr::null_mut();
        assert_eq!(cyq_series_macmahon(8, &mut mm), CyqStatus::Ok);
        let mut eq = false;
        assert_eq!(cyq_series_compare(plane, mm, 8, &mut eq), CyqStatus::Ok);
        assert!(eq);
        let mut c = ptr::null_mut();
        assert_eq!(cyq_series_coefficient(plane, [8i64].as_ptr(), 1, &mut c), CyqStatus::Ok);
        assert_eq!(take(c), "160");

        let mut inv = ptr::null_mut();
        assert_eq!(cyq_series_inverse(mm, &mut inv), CyqStatus::Ok);
        let mut one = ptr::null_mut();
        assert_eq!(cyq_series_mul(inv, mm, &mut one), CyqStatus::Ok);
        let mut j = ptr::null_mut();
        assert_eq!(cyq_series_to_json(one, &mut j), CyqStatus::Ok);
        let json = take(j);
        let mut back = ptr::null_mut();
        assert_eq!(cyq_series_from_json(s(&json).as_ptr(), &mut back), CyqStatus::Ok);
        assert_eq!(cyq_series_coefficient(back, [0i64].as_ptr(), 1, &mut c), CyqStatus::Ok);
        assert_eq!(take(c), "1");
        assert_eq!(cyq_series_coefficient(back, [3i64].as_ptr(), 1, &mut c), CyqStatus::Ok);
        assert_eq!(take(c), "0");

        let mut parts = ptr::null_mut();
        assert_eq!(cyq_series_count(s("partitions").as_ptr(), 8, 0, &mut parts), CyqStatus::Ok);
        assert_eq!(cyq_series_compare(parts, mm, 8, &mut eq), CyqStatus::Ok);
        assert!(!eq);
        assert!(take(cyq_last_error()).contains("first mismatch"));
        for h in [plane, mm, inv, one, back, parts] {
            cyq_series_free(h);
        }
    }
}

#[test]
fn error_codes() {
    unsafe {
        let mut out = ptr::null_mut();
        assert_eq!(cyq_series_count(ptr::null(), 3, 0, &mut out), CyqStatus::NullArgument);
        assert_eq!(cyq_series_count(s("hexagons").as_ptr(), 3, 0, &mut out), CyqStatus::InvalidArgument);
        assert!(take(cyq_last_error()).contains("hexagons"));
        assert_eq!(cyq_series_count(s("plane").as_ptr(), -1, 0, &mut out), CyqStatus::InvalidArgument);
        let bad = [0xffu8, 0];
        assert_eq!(cyq_series_count(bad.as_ptr() as *const _, 3, 0, &mut out), CyqStatus::InvalidUtf8);
        assert_eq!(cyq_series_count(s("plane").as_ptr(), 3, 0, ptr::null_mut()), CyqStatus::NullArgument);
        let mut m = ptr::null_mut();
        assert_eq!(cyq_monad_load(s("y30").as_ptr(), &mut m), CyqStatus::NotInCatalog);
        assert!(m.is_null());
        assert_eq!(cyq_series_count(s("plane").as_ptr(), 2, 0, &mut out), CyqStatus::Ok);
        assert!(cyq_last_error().is_null());
        let mut c = ptr::null_mut();
        assert_eq!(cyq_series_coefficient(out, [1i64, 2].as_ptr(), 2, &mut c), CyqStatus::InvalidArgument);
        cyq_series_free(out);
        cyq_series_free(ptr::null_mut());
        cyq_monad_free(ptr::null_mut());
    }
}

#[test]
fn monads_and_targets() {
    unsafe {
        for id in ["c3", "adhm3d", "perv:conifold", "kn", "ny3d"] {
            let mut m = ptr::null_mut();
            assert_eq!(cyq_monad_load(s(id).as_ptr(), &mut m), CyqStatus::Ok, "{id}");
            for bind in [false, true] {
                let mut n = 0usize;
                assert_eq!(cyq_monad_certify(m, bind, &mut n), CyqStatus::Ok, "{id}");
                assert!(n > 0);
            }
            cyq_monad_free(m);
        }
        assert_eq!(cyq_compare_target(s("conifold-ncdt").as_ptr(), 8, 2, 1), CyqStatus::Ok);
        assert_eq!(cyq_compare_target(s("orbifold-ncdt").as_ptr(), 5, 3, 1), CyqStatus::Ok);
        assert_eq!(cyq_compare_target(s("blowup").as_ptr(), 5, 2, 1), CyqStatus::Ok);
        assert_eq!(cyq_compare_target(s("moonshine").as_ptr(), 5, 2, 1), CyqStatus::InvalidArgument);
        let mut j = ptr::null_mut();
        assert_eq!(cyq_character(2, 0, s("1").as_ptr(), 1, 4, &mut j), CyqStatus::Ok);
        assert_eq!(take(j), r#"["1","3","11","30","80"]"#);
        assert_eq!(cyq_character(2, 0, s("1;0").as_ptr(), 1, 4, &mut j), CyqStatus::InvalidArgument);
        assert!(!CStr::from_ptr(cyq_version()).to_bytes().is_empty());
    }
}
