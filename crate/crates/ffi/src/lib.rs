// SPDX-License-Identifier: Apache-2.0

//! C ABI over `revsynth`.
//!
//! Objects cross the boundary as opaque heap handles (`RevsynthPerm`,
//! `RevsynthCircuit`) that the caller releases with the matching `_free`.
//! Every fallible call returns a `RevsynthStatus`; on failure a message is
//! kept per thread and read back with `revsynth_last_error`.
//! Permutation images and basis states are 1-based, as in the file formats.

#![allow(clippy::missing_safety_doc)]

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use revsynth::io::{default_line_names, emit_circuit, parse_circuit, parse_permutation_input};
use revsynth::synth::{
    synth_optimal, synth_transform, verify_circuit, GateSet, SearchConfig, SynthError,
};
use revsynth::{Circuit, Parity, PermError, PermutationMap, PureState};

/// Result code of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RevsynthStatus {
    Ok = 0,
    NullPointer = 1,
    /// Not a permutation, bad state index, or malformed argument.
    InvalidInput = 2,
    /// Text input did not parse.
    Parse = 3,
    /// Operands disagree on line count.
    WidthMismatch = 4,
    /// Exact search found nothing within the depth bound.
    SearchExhausted = 5,
    /// Width outside what the operation supports.
    Unsupported = 6,
    /// Output buffer shorter than required.
    BufferTooSmall = 7,
    /// Internal panic caught at the boundary.
    Panic = 8,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RevsynthGateSet {
    Cnts = 0,
    Mct = 1,
    Cnot = 2,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RevsynthParity {
    Even = 0,
    Odd = 1,
}

/// Opaque permutation handle.
pub struct RevsynthPerm(PermutationMap);

/// Opaque circuit handle.
pub struct RevsynthCircuit(Circuit);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl ToString) {
    let text = msg.to_string().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(text).ok());
}

struct Fail(RevsynthStatus, String);

impl Fail {
    fn new(status: RevsynthStatus, msg: impl ToString) -> Self {
        Fail(status, msg.to_string())
    }
}

impl From<PermError> for Fail {
    fn from(e: PermError) -> Self {
        let status = match e {
            PermError::WidthMismatch { .. } => RevsynthStatus::WidthMismatch,
            PermError::WidthOverflow { .. } => RevsynthStatus::Unsupported,
            _ => RevsynthStatus::InvalidInput,
        };
        Fail::new(status, e)
    }
}

impl From<SynthError> for Fail {
    fn from(e: SynthError) -> Self {
        let status = match e {
            SynthError::DepthExhausted { .. } => RevsynthStatus::SearchExhausted,
            SynthError::UnsupportedWidth { .. } => RevsynthStatus::Unsupported,
            SynthError::WidthMismatch { .. } => RevsynthStatus::WidthMismatch,
            _ => RevsynthStatus::InvalidInput,
        };
        Fail::new(status, e)
    }
}

/// Runs `f`, records any failure or panic, and maps it to a status.
fn guard(f: impl FnOnce() -> Result<(), Fail>) -> RevsynthStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            RevsynthStatus::Ok
        }
        Ok(Err(Fail(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            RevsynthStatus::Panic
        }
    }
}

unsafe fn deref<'a, T>(p: *const T, what: &str) -> Result<&'a T, Fail> {
    p.as_ref()
        .ok_or_else(|| Fail::new(RevsynthStatus::NullPointer, format!("{what} is null")))
}

unsafe fn out_ptr<'a, T>(p: *mut T, what: &str) -> Result<&'a mut T, Fail> {
    p.as_mut()
        .ok_or_else(|| Fail::new(RevsynthStatus::NullPointer, format!("{what} is null")))
}

unsafe fn read_str<'a>(s: *const c_char) -> Result<&'a str, Fail> {
    if s.is_null() {
        return Err(Fail::new(RevsynthStatus::NullPointer, "text is null"));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|e| Fail::new(RevsynthStatus::InvalidInput, e))
}

fn boxed_perm(p: PermutationMap) -> *mut RevsynthPerm {
    Box::into_raw(Box::new(RevsynthPerm(p)))
}

fn boxed_circuit(c: Circuit) -> *mut RevsynthCircuit {
    Box::into_raw(Box::new(RevsynthCircuit(c)))
}

/// Message for the last failed call on this thread, or NULL. Valid until
/// the next call into this library from the same thread.
#[no_mangle]
pub extern "C" fn revsynth_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Builds a permutation from `len` 1-based images.
#[no_mangle]
pub unsafe extern "C" fn revsynth_perm_from_images(
    images: *const u32,
    len: usize,
    out: *mut *mut RevsynthPerm,
) -> RevsynthStatus {
    guard(|| {
        let out = out_ptr(out, "out")?;
        if images.is_null() {
            return Err(Fail::new(RevsynthStatus::NullPointer, "images is null"));
        }
        let list: Vec<usize> = std::slice::from_raw_parts(images, len)
            .iter()
            .map(|&v| v as usize)
            .collect();
        *out = boxed_perm(PermutationMap::from_image_list(&list)?);
        Ok(())
    })
}

/// Parses a `perm <n>` file or a 0/1 matrix from NUL-terminated text.
#[no_mangle]
pub unsafe extern "C" fn revsynth_perm_parse(
    text: *const c_char,
    out: *mut *mut RevsynthPerm,
) -> RevsynthStatus {
    guard(|| {
        let out = out_ptr(out, "out")?;
        let p = parse_permutation_input(read_str(text)?)
            .map_err(|e| Fail::new(RevsynthStatus::Parse, e))?;
        *out = boxed_perm(p);
        Ok(())
    })
}

#[no_mangle]
pub unsafe extern "C" fn revsynth_perm_free(p: *mut RevsynthPerm) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Number of lines, or 0 for NULL.
#[no_mangle]
pub unsafe extern "C" fn revsynth_perm_width(p: *const RevsynthPerm) -> u32 {
    p.as_ref().map_or(0, |p| p.0.width())
}

/// Number of basis states (`2^width`), or 0 for NULL.
#[no_mangle]
pub unsafe extern "C" fn revsynth_perm_len(p: *const RevsynthPerm) -> usize {
    p.as_ref().map_or(0, |p| p.0.len())
}

/// Copies the 1-based images into `buf`, which must hold `len` entries.
#[no_mangle]
pub unsafe extern "C" fn revsynth_perm_images(
    p: *const RevsynthPerm,
    buf: *mut u32,
    cap: usize,
) -> RevsynthStatus {
    guard(|| {
        let p = &deref(p, "perm")?.0;
        if buf.is_null() {
            return Err(Fail::new(RevsynthStatus::NullPointer, "buf is null"));
        }
        if cap < p.len() {
            return Err(Fail::new(
                RevsynthStatus::BufferTooSmall,
                format!("need {} entries, got {cap}", p.len()),
            ));
        }
        let dst = std::slice::from_raw_parts_mut(buf, p.len());
        for (d, &v) in dst.iter_mut().zip(p.images()) {
            *d = v + 1;
        }
        Ok(())
    })
}

/// Matrix product `a * b`: `b` acts first.
#[no_mangle]
pub unsafe extern "C" fn revsynth_perm_compose(
    a: *const RevsynthPerm,
    b: *const RevsynthPerm,
    out: *mut *mut RevsynthPerm,
) -> RevsynthStatus {
    guard(|| {
        let out = out_ptr(out, "out")?;
        *out = boxed_perm(deref(a, "a")?.0.compose(&deref(b, "b")?.0)?);
        Ok(())
    })
}

/// Tensor product; `a` occupies the leading lines.
#[no_mangle]
pub unsafe extern "C" fn revsynth_perm_tensor(
    a: *const RevsynthPerm,
    b: *const RevsynthPerm,
    out: *mut *mut RevsynthPerm,
) -> RevsynthStatus {
    guard(|| {
        let out = out_ptr(out, "out")?;
        *out = boxed_perm(deref(a, "a")?.0.tensor(&deref(b, "b")?.0)?);
        Ok(())
    })
}

#[no_mangle]
pub unsafe extern "C" fn revsynth_perm_inverse(
    p: *const RevsynthPerm,
    out: *mut *mut RevsynthPerm,
) -> RevsynthStatus {
    guard(|| {
        let out = out_ptr(out, "out")?;
        *out = boxed_perm(deref(p, "perm")?.0.inverse());
        Ok(())
    })
}

#[no_mangle]
pub unsafe extern "C" fn revsynth_perm_parity(
    p: *const RevsynthPerm,
    out: *mut RevsynthParity,
) -> RevsynthStatus {
    guard(|| {
        let out = out_ptr(out, "out")?;
        *out = match deref(p, "perm")?.0.parity() {
            Parity::Even => RevsynthParity::Even,
            Parity::Odd => RevsynthParity::Odd,
        };
        Ok(())
    })
}

/// Image of the 1-based basis state `state`, written 1-based to `out`.
#[no_mangle]
pub unsafe extern "C" fn revsynth_perm_apply(
    p: *const RevsynthPerm,
    state: usize,
    out: *mut usize,
) -> RevsynthStatus {
    guard(|| {
        let out = out_ptr(out, "out")?;
        let p = &deref(p, "perm")?.0;
        let index = state
            .checked_sub(1)
            .ok_or_else(|| Fail::new(RevsynthStatus::InvalidInput, "state is 1-based"))?;
        *out = p.apply(PureState::new(p.width(), index)?)?.index() + 1;
        Ok(())
    })
}

fn gate_set(g: RevsynthGateSet) -> GateSet {
    match g {
        RevsynthGateSet::Cnts => GateSet::Cnts,
        RevsynthGateSet::Mct => GateSet::Mct,
        RevsynthGateSet::Cnot => GateSet::Cnot,
    }
}

/// Transformation-based synthesis. Always succeeds for a valid handle; the
/// circuit is lowered toward `gates` where possible.
#[no_mangle]
pub unsafe extern "C" fn revsynth_synth_transform(
    p: *const RevsynthPerm,
    gates: RevsynthGateSet,
    out: *mut *mut RevsynthCircuit,
) -> RevsynthStatus {
    guard(|| {
        let out = out_ptr(out, "out")?;
        let result = synth_transform(&deref(p, "perm")?.0, gate_set(gates));
        *out = boxed_circuit(result.circuit);
        Ok(())
    })
}

/// Minimum-gate search over `gates` for at most 3 lines.
#[no_mangle]
pub unsafe extern "C" fn revsynth_synth_optimal(
    p: *const RevsynthPerm,
    gates: RevsynthGateSet,
    max_depth: u32,
    out: *mut *mut RevsynthCircuit,
) -> RevsynthStatus {
    guard(|| {
        let out = out_ptr(out, "out")?;
        let cfg = SearchConfig {
            max_depth,
            gate_set: gate_set(gates),
        };
        *out = boxed_circuit(synth_optimal(&deref(p, "perm")?.0, &cfg)?.circuit);
        Ok(())
    })
}

#[no_mangle]
pub unsafe extern "C" fn revsynth_circuit_free(c: *mut RevsynthCircuit) {
    if !c.is_null() {
        drop(Box::from_raw(c));
    }
}

/// Gate count, or 0 for NULL.
#[no_mangle]
pub unsafe extern "C" fn revsynth_circuit_gate_count(c: *const RevsynthCircuit) -> usize {
    c.as_ref().map_or(0, |c| c.0.len())
}

/// Line count, or 0 for NULL.
#[no_mangle]
pub unsafe extern "C" fn revsynth_circuit_width(c: *const RevsynthCircuit) -> u32 {
    c.as_ref().map_or(0, |c| c.0.width())
}

/// Permutation the circuit realizes.
#[no_mangle]
pub unsafe extern "C" fn revsynth_circuit_permutation(
    c: *const RevsynthCircuit,
    out: *mut *mut RevsynthPerm,
) -> RevsynthStatus {
    guard(|| {
        let out = out_ptr(out, "out")?;
        *out = boxed_perm(deref(c, "circuit")?.0.permutation());
        Ok(())
    })
}

/// Circuit file text with lines named v1..vn. Free with
/// `revsynth_string_free`.
#[no_mangle]
pub unsafe extern "C" fn revsynth_circuit_emit(
    c: *const RevsynthCircuit,
    out: *mut *mut c_char,
) -> RevsynthStatus {
    guard(|| {
        let out = out_ptr(out, "out")?;
        let c = &deref(c, "circuit")?.0;
        let text = emit_circuit(c, &default_line_names(c.width()));
        *out = CString::new(text)
            .map_err(|e| Fail::new(RevsynthStatus::InvalidInput, e))?
            .into_raw();
        Ok(())
    })
}

#[no_mangle]
pub unsafe extern "C" fn revsynth_circuit_parse(
    text: *const c_char,
    out: *mut *mut RevsynthCircuit,
) -> RevsynthStatus {
    guard(|| {
        let out = out_ptr(out, "out")?;
        let file =
            parse_circuit(read_str(text)?).map_err(|e| Fail::new(RevsynthStatus::Parse, e))?;
        *out = boxed_circuit(file.circuit);
        Ok(())
    })
}

/// Writes whether `c` realizes `p`. Differing line counts are an error.
#[no_mangle]
pub unsafe extern "C" fn revsynth_circuit_verify(
    c: *const RevsynthCircuit,
    p: *const RevsynthPerm,
    out: *mut bool,
) -> RevsynthStatus {
    guard(|| {
        let out = out_ptr(out, "out")?;
        *out = verify_circuit(&deref(c, "circuit")?.0, &deref(p, "perm")?.0)?;
        Ok(())
    })
}

#[no_mangle]
pub unsafe extern "C" fn revsynth_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
