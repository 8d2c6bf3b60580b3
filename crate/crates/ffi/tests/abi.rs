// SPDX-License-Identifier: Apache-2.0

use std::ffi::{CStr, CString};
use std::ptr;

use revsynth_ffi::*;

unsafe fn perm(images: &[u32]) -> *mut RevsynthPerm {
    let mut p = ptr::null_mut();
    assert_eq!(
        revsynth_perm_from_images(images.as_ptr(), images.len(), &mut p),
        RevsynthStatus::Ok
    );
    p
}

unsafe fn images(p: *const RevsynthPerm) -> Vec<u32> {
    let mut buf = vec![0u32; revsynth_perm_len(p)];
    assert_eq!(
        revsynth_perm_images(p, buf.as_mut_ptr(), buf.len()),
        RevsynthStatus::Ok
    );
    buf
}

unsafe fn last_error() -> String {
    let msg = revsynth_last_error();
    assert!(!msg.is_null());
    CStr::from_ptr(msg).to_string_lossy().into_owned()
}

#[test]
fn perm_round_trip_and_queries() {
    unsafe {
        let p = perm(&[3, 2, 1, 4]);
        assert_eq!(revsynth_perm_width(p), 2);
        assert_eq!(images(p), [3, 2, 1, 4]);

        let mut parity = RevsynthParity::Even;
        assert_eq!(revsynth_perm_parity(p, &mut parity), RevsynthStatus::Ok);
        assert_eq!(parity, RevsynthParity::Odd);

        let mut image = 0;
        assert_eq!(revsynth_perm_apply(p, 1, &mut image), RevsynthStatus::Ok);
        assert_eq!(image, 3);
        assert_eq!(
            revsynth_perm_apply(p, 0, &mut image),
            RevsynthStatus::InvalidInput
        );
        assert_eq!(
            revsynth_perm_apply(p, 5, &mut image),
            RevsynthStatus::InvalidInput
        );

        let mut small = [0u32; 3];
        assert_eq!(
            revsynth_perm_images(p, small.as_mut_ptr(), 3),
            RevsynthStatus::BufferTooSmall
        );
        revsynth_perm_free(p);
    }
}

#[test]
fn invalid_images_report_error() {
    unsafe {
        let list = [1u32, 1, 2, 3];
        let mut p = ptr::null_mut();
        let status = revsynth_perm_from_images(list.as_ptr(), list.len(), &mut p);
        assert_eq!(status, RevsynthStatus::InvalidInput);
        assert!(p.is_null());
        assert!(!last_error().is_empty());

        assert_eq!(
            revsynth_perm_from_images(list.as_ptr(), 3, &mut p),
            RevsynthStatus::InvalidInput
        );
        assert_eq!(
            revsynth_perm_from_images(ptr::null(), 4, &mut p),
            RevsynthStatus::NullPointer
        );
        assert_eq!(
            revsynth_perm_from_images(list.as_ptr(), 4, ptr::null_mut()),
            RevsynthStatus::NullPointer
        );
    }
}

#[test]
fn algebra() {
    unsafe {
        let a = perm(&[3, 2, 1, 4]);
        let not = perm(&[2, 1]);

        let mut t = ptr::null_mut();
        assert_eq!(revsynth_perm_tensor(not, a, &mut t), RevsynthStatus::Ok);
        // NOT on the leading line swaps the two halves, then the comparator
        // acts inside each half
        assert_eq!(images(t), [7, 6, 5, 8, 3, 2, 1, 4]);

        let mut sq = ptr::null_mut();
        assert_eq!(revsynth_perm_compose(a, a, &mut sq), RevsynthStatus::Ok);
        assert_eq!(images(sq), [1, 2, 3, 4]);

        let mut bad = ptr::null_mut();
        assert_eq!(
            revsynth_perm_compose(a, t, &mut bad),
            RevsynthStatus::WidthMismatch
        );

        let b = perm(&[2, 3, 4, 1]);
        let mut inv = ptr::null_mut();
        assert_eq!(revsynth_perm_inverse(b, &mut inv), RevsynthStatus::Ok);
        assert_eq!(images(inv), [4, 1, 2, 3]);

        for h in [a, not, t, sq, b, inv] {
            revsynth_perm_free(h);
        }
    }
}

#[test]
fn parse_both_input_formats() {
    unsafe {
        let text = CString::new("perm 2\n3,2,1,4\n").unwrap();
        let mut p = ptr::null_mut();
        assert_eq!(
            revsynth_perm_parse(text.as_ptr(), &mut p),
            RevsynthStatus::Ok
        );
        assert_eq!(images(p), [3, 2, 1, 4]);
        revsynth_perm_free(p);

        let matrix = CString::new("0 1\n1 0\n").unwrap();
        assert_eq!(
            revsynth_perm_parse(matrix.as_ptr(), &mut p),
            RevsynthStatus::Ok
        );
        assert_eq!(images(p), [2, 1]);
        revsynth_perm_free(p);

        let bad = CString::new("2 0\n0 1\n").unwrap();
        assert_eq!(
            revsynth_perm_parse(bad.as_ptr(), &mut p),
            RevsynthStatus::Parse
        );
        assert!(last_error().contains("condition 1 violated"));
    }
}

#[test]
fn synthesize_emit_parse_verify() {
    unsafe {
        let p = perm(&[12, 4, 10, 3, 8, 14, 16, 15, 9, 2, 5, 11, 1, 13, 7, 6]);
        let mut c = ptr::null_mut();
        assert_eq!(
            revsynth_synth_transform(p, RevsynthGateSet::Mct, &mut c),
            RevsynthStatus::Ok
        );
        assert_eq!(revsynth_circuit_width(c), 4);
        assert!(revsynth_circuit_gate_count(c) > 0);

        let mut ok = false;
        assert_eq!(revsynth_circuit_verify(c, p, &mut ok), RevsynthStatus::Ok);
        assert!(ok);

        let mut text = ptr::null_mut();
        assert_eq!(revsynth_circuit_emit(c, &mut text), RevsynthStatus::Ok);
        let mut parsed = ptr::null_mut();
        assert_eq!(
            revsynth_circuit_parse(text, &mut parsed),
            RevsynthStatus::Ok
        );
        revsynth_string_free(text);
        assert_eq!(
            revsynth_circuit_gate_count(parsed),
            revsynth_circuit_gate_count(c)
        );

        let mut realized = ptr::null_mut();
        assert_eq!(
            revsynth_circuit_permutation(parsed, &mut realized),
            RevsynthStatus::Ok
        );
        assert_eq!(images(realized), images(p));

        let other = perm(&[2, 1, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16]);
        assert_eq!(
            revsynth_circuit_verify(parsed, other, &mut ok),
            RevsynthStatus::Ok
        );
        assert!(!ok);

        let mut none = ptr::null_mut();
        assert_eq!(
            revsynth_synth_optimal(p, RevsynthGateSet::Cnts, 7, &mut none),
            RevsynthStatus::Unsupported
        );

        for h in [p, realized, other] {
            revsynth_perm_free(h);
        }
        revsynth_circuit_free(c);
        revsynth_circuit_free(parsed);
    }
}

#[test]
fn optimal_search_status() {
    unsafe {
        let ciw = perm(&[1, 2, 3, 4, 7, 8, 5, 6]);
        let mut c = ptr::null_mut();
        assert_eq!(
            revsynth_synth_optimal(ciw, RevsynthGateSet::Cnts, 7, &mut c),
            RevsynthStatus::Ok
        );
        assert_eq!(revsynth_circuit_gate_count(c), 1);
        revsynth_circuit_free(c);

        // a Toffoli cannot be built from CNOTs alone
        let toffoli = perm(&[1, 2, 3, 4, 5, 6, 8, 7]);
        assert_eq!(
            revsynth_synth_optimal(toffoli, RevsynthGateSet::Cnot, 3, &mut c),
            RevsynthStatus::SearchExhausted
        );
        assert_eq!(
            revsynth_synth_optimal(toffoli, RevsynthGateSet::Cnts, 0, &mut c),
            RevsynthStatus::InvalidInput
        );
        revsynth_perm_free(ciw);
        revsynth_perm_free(toffoli);
    }
}

#[test]
fn null_handles_are_tolerated() {
    unsafe {
        revsynth_perm_free(ptr::null_mut());
        revsynth_circuit_free(ptr::null_mut());
        revsynth_string_free(ptr::null_mut());
        assert_eq!(revsynth_perm_width(ptr::null()), 0);
        assert_eq!(revsynth_circuit_gate_count(ptr::null()), 0);
        let mut out = ptr::null_mut();
        assert_eq!(
            revsynth_perm_inverse(ptr::null(), &mut out),
            RevsynthStatus::NullPointer
        );
    }
}

#[test]
fn header_declares_the_api() {
    let header =
        std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/revsynth.h"))
            .unwrap();
    for name in [
        "typedef struct RevsynthPerm RevsynthPerm",
        "typedef struct RevsynthCircuit RevsynthCircuit",
        "REVSYNTH_STATUS_OK",
        "revsynth_perm_from_images",
        "revsynth_synth_optimal",
        "revsynth_circuit_verify",
        "revsynth_last_error",
    ] {
        assert!(header.contains(name), "header is missing {name}");
    }
}
