use std::ffi::{c_char, CStr, CString};
use std::ptr;

use chromsym_ffi::*;

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

unsafe fn take(s: *mut c_char) -> String {
    let v = CStr::from_ptr(s).to_str().unwrap().to_owned();
    chromsym_string_free(s);
    v
}

unsafe fn last_error() -> String {
    CStr::from_ptr(chromsym_last_error()).to_str().unwrap().to_owned()
}

const STAIRCASE: &str = r#"{
  "vertices": ["s1","s2","s3","s4","s5","v1","v2","v3","v4","t1","t2","t3","t4","t5"],
  "edges": [
    {"u":"s5","v":"v1"},{"u":"v1","v":"v2"},{"u":"v2","v":"v3"},{"u":"v3","v":"v4"},{"u":"v4","v":"t1"},
    {"u":"s4","v":"v1"},{"u":"v1","v":"t5"},{"u":"s3","v":"v2"},{"u":"v2","v":"t4"},
    {"u":"s2","v":"v3"},{"u":"v3","v":"t3"},{"u":"s1","v":"v4"},{"u":"v4","v":"t2"}
  ],
  "sources": ["s1","s2","s3","s4","s5"],
  "sinks": ["t1","t2","t3","t4","t5"]
}"#;

#[test]
fn network_immanants() {
    unsafe {
        let mut d = ptr::null_mut();
        assert_eq!(chromsym_network_from_json(c(STAIRCASE).as_ptr(), &mut d), ChromsymStatus::Ok);
        let mut a = ptr::null_mut();
        assert_eq!(chromsym_network_path_matrix(d, &mut a), ChromsymStatus::Ok);
        assert_eq!(chromsym_matrix_order(a), 5);
        let mut tnn = -1;
        assert_eq!(chromsym_matrix_is_tnn(a, &mut tnn), ChromsymStatus::Ok);
        assert_eq!(tnn, 1);
        let cases = [("phi", "3,2", "7"), ("eta", "5", "16"), ("epsilon", "5", "0")];
        for (b, l, want) in cases {
            let mut v = ptr::null_mut();
            assert_eq!(chromsym_matrix_immanant(a, c(b).as_ptr(), c(l).as_ptr(), &mut v), ChromsymStatus::Ok);
            assert_eq!(take(v), want, "{b}^{l}");
        }
        let mut v = ptr::null_mut();
        assert_eq!(chromsym_matrix_immanant(a, c("phi").as_ptr(), c("3,1").as_ptr(), &mut v), ChromsymStatus::SizeMismatch);
        assert!(last_error().contains("size mismatch"));
        chromsym_matrix_free(a);
        chromsym_network_free(d);
    }
}

#[test]
fn matrices_from_text() {
    unsafe {
        let mut a = ptr::null_mut();
        assert_eq!(chromsym_matrix_from_csv(c("1, 2\n3, 4\n").as_ptr(), &mut a), ChromsymStatus::Ok);
        let mut v = ptr::null_mut();
        assert_eq!(chromsym_matrix_immanant(a, c("epsilon").as_ptr(), c("2").as_ptr(), &mut v), ChromsymStatus::Ok);
        assert_eq!(take(v), "-2");
        let mut js = ptr::null_mut();
        assert_eq!(chromsym_matrix_to_json(a, &mut js), ChromsymStatus::Ok);
        assert_eq!(take(js), r#"[["1","2"],["3","4"]]"#);
        chromsym_matrix_free(a);
        let mut b = ptr::null_mut();
        assert_eq!(chromsym_matrix_from_json(c("[[1,2],[3]]").as_ptr(), &mut b), ChromsymStatus::Parse);
        assert!(b.is_null());
    }
}

#[test]
fn chromatic_function_of_a_triangle() {
    unsafe {
        let mut g = ptr::null_mut();
        assert_eq!(chromsym_graph_from_json(c(r#"{"n":3,"edges":[[1,2],[2,3],[1,3]]}"#).as_ptr(), &mut g), ChromsymStatus::Ok);
        let mut x = ptr::null_mut();
        assert_eq!(chromsym_graph_chromatic(g, &mut x), ChromsymStatus::Ok);
        let mut e = ptr::null_mut();
        assert_eq!(chromsym_symfunc_convert(x, c("e").as_ptr(), &mut e), ChromsymStatus::Ok);
        let mut v = ptr::null_mut();
        assert_eq!(chromsym_symfunc_coeff(e, c("3").as_ptr(), &mut v), ChromsymStatus::Ok);
        assert_eq!(take(v), "6");
        assert_eq!(chromsym_symfunc_coeff(x, c("1,1,1").as_ptr(), &mut v), ChromsymStatus::Ok);
        assert_eq!(take(v), "6");
        let mut js = ptr::null_mut();
        assert_eq!(chromsym_symfunc_to_json(e, &mut js), ChromsymStatus::Ok);
        assert!(take(js).contains("\"basis\":\"e\""));
        assert_eq!(chromsym_symfunc_convert(x, c("z").as_ptr(), &mut e), ChromsymStatus::Parse);
        chromsym_symfunc_free(e);
        chromsym_symfunc_free(x);
        chromsym_graph_free(g);
    }
}

#[test]
fn null_and_invalid_arguments() {
    unsafe {
        let mut p = ptr::null_mut();
        assert_eq!(chromsym_poset_from_json(ptr::null(), &mut p), ChromsymStatus::NullPointer);
        assert_eq!(chromsym_poset_from_json(c("{}").as_ptr(), ptr::null_mut()), ChromsymStatus::Parse);
        let bad = [0xffu8, 0];
        assert_eq!(chromsym_poset_from_json(bad.as_ptr().cast(), &mut p), ChromsymStatus::InvalidUtf8);
        let mut out = 0u64;
        assert_eq!(
            chromsym_poset_count_tableaux(ptr::null(), c("2").as_ptr(), c("any").as_ptr(), &mut out),
            ChromsymStatus::NullPointer
        );
        chromsym_poset_free(ptr::null_mut());
        chromsym_string_free(ptr::null_mut());
        assert!(!CStr::from_ptr(chromsym_version()).to_bytes().is_empty());
    }
}

#[test]
fn verification_suites() {
    unsafe {
        let mut passed = -1;
        let mut report = ptr::null_mut();
        assert_eq!(chromsym_verify(c("eta-interpretations").as_ptr(), 3, 0, 0, &mut passed, &mut report), ChromsymStatus::Ok);
        assert_eq!(passed, 1);
        assert!(take(report).starts_with("{\"checks\":["));
        assert_eq!(chromsym_verify(c("muir").as_ptr(), 0, 3, 1, &mut passed, ptr::null_mut()), ChromsymStatus::Ok);
        assert_eq!(passed, 1);
        assert_eq!(chromsym_verify(c("nope").as_ptr(), 0, 1, 0, &mut passed, ptr::null_mut()), ChromsymStatus::Parse);
        assert_eq!(chromsym_verify(c("kostka").as_ptr(), 12, 1, 0, &mut passed, ptr::null_mut()), ChromsymStatus::LimitExceeded);
    }
}
