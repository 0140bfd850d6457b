use std::ffi::{CStr, CString};
use std::ptr;

use nakayama_ffi::*;

fn parse(s: &str) -> *mut NakAlgebra {
    let text = CString::new(s).unwrap();
    let mut a = ptr::null_mut();
    let status = unsafe { nak_algebra_parse(text.as_ptr(), &mut a) };
    assert_eq!(status, NakStatus::Ok, "{s}");
    a
}

fn series(a: *const NakAlgebra) -> Vec<u32> {
    let mut len = 0;
    unsafe {
        assert_eq!(
            nak_algebra_series(a, ptr::null_mut(), 0, &mut len),
            if nak_algebra_rank(a) == 0 {
                NakStatus::Ok
            } else {
                NakStatus::BufferTooSmall
            }
        );
        let mut buf = vec![0u32; len];
        assert_eq!(
            nak_algebra_series(a, buf.as_mut_ptr(), len, &mut len),
            NakStatus::Ok
        );
        buf
    }
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(nak_last_error()) }
        .to_str()
        .unwrap()
        .to_string()
}

#[test]
fn parse_summary_and_free() {
    let a = parse("4,3,3,4,3,3,4");
    assert_eq!(unsafe { nak_algebra_rank(a) }, 7);
    assert_eq!(series(a), vec![4, 3, 3, 4, 3, 3, 4]);
    let mut s = NakSummary {
        gldim: 0,
        domdim: 0,
        findim: 0,
        defect: 0,
        num_relations: 0,
        is_self_injective: false,
        is_gorenstein: false,
        is_higher_auslander: false,
    };
    assert_eq!(unsafe { nak_algebra_summary(a, &mut s) }, NakStatus::Ok);
    assert_eq!((s.gldim, s.domdim, s.defect), (5, 4, 2));
    assert!(!s.is_higher_auslander);
    unsafe { nak_algebra_free(a) };

    let b = parse("3,3");
    assert_eq!(unsafe { nak_algebra_summary(b, &mut s) }, NakStatus::Ok);
    assert_eq!((s.gldim, s.domdim), (NAK_INFINITE, NAK_INFINITE));
    assert!(s.is_self_injective);
    unsafe { nak_algebra_free(b) };
}

#[test]
fn epsilon_and_reverse() {
    let a = parse("4,3,3,3");
    let mut e = ptr::null_mut();
    assert_eq!(unsafe { nak_epsilon(a, &mut e) }, NakStatus::Ok);
    assert_eq!(series(e), vec![3, 2, 2]);
    let mut r = ptr::null_mut();
    assert_eq!(unsafe { nak_reverse_epsilon(e, &mut r) }, NakStatus::Ok);
    assert_eq!(series(r).len(), 4);

    let mut text = ptr::null_mut();
    assert_eq!(
        unsafe { nak_algebra_to_string(e, &mut text) },
        NakStatus::Ok
    );
    assert_eq!(unsafe { CStr::from_ptr(text) }.to_str().unwrap(), "(3,2,2)");
    unsafe {
        nak_string_free(text);
        nak_algebra_free(a);
        nak_algebra_free(e);
        nak_algebra_free(r);
    }
}

#[test]
fn error_codes() {
    let mut a = ptr::null_mut();
    let bad = CString::new("4,2,2").unwrap();
    assert_eq!(
        unsafe { nak_algebra_parse(bad.as_ptr(), &mut a) },
        NakStatus::InvalidInput
    );
    assert!(a.is_null());
    assert!(last_error().contains("c_1 = 4"), "{}", last_error());

    assert_eq!(
        unsafe { nak_algebra_parse(ptr::null(), &mut a) },
        NakStatus::NullPointer
    );
    let invalid_utf8 = [0xffu8, 0];
    assert_eq!(
        unsafe { nak_algebra_parse(invalid_utf8.as_ptr().cast(), &mut a) },
        NakStatus::InvalidUtf8
    );

    let lin = parse("2,1");
    let mut e = ptr::null_mut();
    assert_eq!(unsafe { nak_epsilon(lin, &mut e) }, NakStatus::NotCyclic);
    assert_eq!(
        unsafe { nak_epsilon(ptr::null(), &mut e) },
        NakStatus::NullPointer
    );
    unsafe { nak_algebra_free(lin) };
    assert_eq!(unsafe { nak_algebra_rank(ptr::null()) }, 0);

    let values = [4u32, 4, 3];
    assert_eq!(
        unsafe { nak_algebra_from_series(values.as_ptr(), 3, &mut a) },
        NakStatus::Ok
    );
    assert_eq!(series(a), vec![4, 4, 3]);
    unsafe { nak_algebra_free(a) };
    assert_eq!(
        unsafe { nak_algebra_from_series(values.as_ptr(), 0, &mut a) },
        NakStatus::InvalidInput
    );
}

#[test]
fn spectrum_and_necklaces() {
    let mut len = 0;
    let mut buf = [0u32; 16];
    assert_eq!(
        unsafe { nak_expected_spectrum(5, buf.as_mut_ptr(), buf.len(), &mut len) },
        NakStatus::Ok
    );
    assert_eq!(&buf[..len], &[3, 5, 6, 7, 8]);
    assert_eq!(
        unsafe { nak_expected_spectrum(1, buf.as_mut_ptr(), buf.len(), &mut len) },
        NakStatus::InvalidInput
    );

    let mut count = 0;
    assert_eq!(
        unsafe { nak_necklace_count(2, 4, &mut count) },
        NakStatus::Ok
    );
    assert_eq!(count, 6);
    assert_eq!(
        unsafe { nak_necklace_count(2, 100, &mut count) },
        NakStatus::Overflow
    );
}
