//! C ABI over the hexblocks engine.
//!
//! Conventions: every fallible call returns an [`HbStatus`]; results come
//! back through out-pointers. Counts are exact integers of unbounded size,
//! so they cross the boundary as decimal strings via caller-owned buffers.
//! Handles are opaque and freed with their `_free` function. No call ever
//! unwinds across the boundary.
//!
//! Safety contract shared by every pointer-taking entry point: pointers
//! must be null or valid for the access they imply, handles must come
//! from this library and not be used after free, and strings must be
//! NUL-terminated.

#![allow(clippy::missing_safety_doc)] // the shared contract is documented above

use hexblocks::asymptotics::{asymptotic_form, dominant_singularity};
use hexblocks::series::{blocks_gf, series_expand};
use hexblocks::transfer::{count_blocks, count_cheesy, count_incomplete};
use hexblocks::verify::{run_suite, Suite};
use std::ffi::{c_char, CStr};
use std::panic::{catch_unwind, UnwindSafe};

/// Status code of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum HbStatus {
    Ok = 0,
    /// A pointer was null or a parameter was out of range.
    InvalidArgument = 1,
    /// The request is structurally valid but not supported (for example a
    /// closed form for a level that has none).
    Unsupported = 2,
    /// The caller's buffer is too small; the required size was reported.
    BufferTooSmall = 3,
    /// A verification suite ran and at least one check failed.
    VerificationFailed = 4,
    /// An internal invariant failed.
    Internal = 5,
}

/// Opaque table of exact counts indexed by area.
pub struct HbCountTable {
    counts: Vec<String>,
}

/// Growth data of one blocks level.
#[repr(C)]
#[derive(Clone, Copy, Debug)]
pub struct HbGrowth {
    pub growth: f64,
    pub amplitude: f64,
    pub dominant_root: f64,
    pub next_modulus: f64,
    pub margin: f64,
}

fn guarded<F: FnOnce() -> HbStatus + UnwindSafe>(f: F) -> HbStatus {
    catch_unwind(f).unwrap_or(HbStatus::Internal)
}

const MAX_FFI_AREA: u32 = 512;
const MAX_FFI_LEVEL: u32 = 16;

fn table_out(
    out: *mut *mut HbCountTable,
    level: u32,
    max_area: u32,
    f: impl FnOnce(u32, usize) -> hexblocks::CountTable + UnwindSafe,
) -> HbStatus {
    if out.is_null() || max_area == 0 || max_area > MAX_FFI_AREA || level > MAX_FFI_LEVEL {
        return HbStatus::InvalidArgument;
    }
    guarded(move || {
        let table = f(level, max_area as usize);
        let counts = table.counts().iter().map(|c| c.to_string()).collect();
        let boxed = Box::new(HbCountTable { counts });
        unsafe { *out = Box::into_raw(boxed) };
        HbStatus::Ok
    })
}

/// Counts of level-`level` polyominoes with cheesy blocks for areas
/// `1..=max_area`, by the transfer recursion.
#[no_mangle]
pub unsafe extern "C" fn hb_count_blocks(
    level: u32,
    max_area: u32,
    out: *mut *mut HbCountTable,
) -> HbStatus {
    table_out(out, level, max_area, count_blocks)
}

/// Counts of level-`level` cheesy polyominoes.
#[no_mangle]
pub unsafe extern "C" fn hb_count_cheesy(
    level: u32,
    max_area: u32,
    out: *mut *mut HbCountTable,
) -> HbStatus {
    table_out(out, level, max_area, count_cheesy)
}

/// Counts of incomplete figures (one column short of membership).
#[no_mangle]
pub unsafe extern "C" fn hb_count_incomplete(
    level: u32,
    max_area: u32,
    out: *mut *mut HbCountTable,
) -> HbStatus {
    table_out(out, level, max_area, count_incomplete)
}

/// Largest area stored in the table.
#[no_mangle]
pub unsafe extern "C" fn hb_count_table_max_area(table: *const HbCountTable) -> u32 {
    if table.is_null() {
        return 0;
    }
    let table = unsafe { &*table };
    (table.counts.len() - 1) as u32
}

/// Copies the exact decimal count for `area` into `buf` (NUL-terminated).
/// `*needed` always receives the required buffer size including the NUL.
#[no_mangle]
pub unsafe extern "C" fn hb_count_table_get(
    table: *const HbCountTable,
    area: u32,
    buf: *mut c_char,
    buf_len: usize,
    needed: *mut usize,
) -> HbStatus {
    if table.is_null() {
        return HbStatus::InvalidArgument;
    }
    let t = unsafe { &*table };
    let Some(s) = t.counts.get(area as usize) else {
        return HbStatus::InvalidArgument;
    };
    write_string(s, buf, buf_len, needed)
}

/// Frees a count table. Passing null is a no-op.
#[no_mangle]
pub unsafe extern "C" fn hb_count_table_free(table: *mut HbCountTable) {
    if !table.is_null() {
        drop(unsafe { Box::from_raw(table) });
    }
}

/// Growth constant, amplitude, dominant root and modulus margin of the
/// closed form for `level` 1, 2 or 3.
#[no_mangle]
pub unsafe extern "C" fn hb_growth(level: u32, out: *mut HbGrowth) -> HbStatus {
    if out.is_null() {
        return HbStatus::InvalidArgument;
    }
    if !(1..=3).contains(&level) {
        return HbStatus::Unsupported;
    }
    guarded(move || {
        let f = blocks_gf(level).expect("level checked");
        let (form, dom) = match (asymptotic_form(&f, 30), dominant_singularity(&f, 30)) {
            (Ok(form), Ok(dom)) => (form, dom),
            _ => return HbStatus::Internal,
        };
        let root = 1.0 / form.growth;
        unsafe {
            *out = HbGrowth {
                growth: form.growth,
                amplitude: form.amplitude,
                dominant_root: root,
                next_modulus: dom.next_modulus,
                margin: dom.margin,
            };
        }
        HbStatus::Ok
    })
}

/// Exact decimal coefficient of the closed-form series at `area`, for
/// `level` 1, 2 or 3.
#[no_mangle]
pub unsafe extern "C" fn hb_gf_coefficient(
    level: u32,
    area: u32,
    buf: *mut c_char,
    buf_len: usize,
    needed: *mut usize,
) -> HbStatus {
    if !(1..=3).contains(&level) {
        return HbStatus::Unsupported;
    }
    if area > MAX_FFI_AREA {
        return HbStatus::InvalidArgument;
    }
    guarded(move || {
        let f = blocks_gf(level).expect("level checked");
        let a = series_expand(&f, area as usize).expect("den(0) = 1");
        write_string(&a[area as usize].to_string(), buf, buf_len, needed)
    })
}

/// Runs a verification suite by name (`table1`, `gf-cross`, `oracle`,
/// `eq1`, `eq2`, `reflection`, `asymptotics`, `extrapolate`, `all`).
/// `oracle_max_area` caps the exhaustive suites; pass 0 for the default.
#[no_mangle]
pub unsafe extern "C" fn hb_verify(suite: *const c_char, oracle_max_area: u32) -> HbStatus {
    if suite.is_null() {
        return HbStatus::InvalidArgument;
    }
    let name = match unsafe { CStr::from_ptr(suite) }.to_str() {
        Ok(s) => s.to_owned(),
        Err(_) => return HbStatus::InvalidArgument,
    };
    let Some(suite) = Suite::from_name(&name) else {
        return HbStatus::InvalidArgument;
    };
    let cap = if oracle_max_area == 0 {
        hexblocks::verify::DEFAULT_ORACLE_MAX_AREA
    } else {
        oracle_max_area.min(14)
    };
    guarded(move || {
        if run_suite(suite, cap).passed() {
            HbStatus::Ok
        } else {
            HbStatus::VerificationFailed
        }
    })
}

/// Static, NUL-terminated library version string.
#[no_mangle]
pub extern "C" fn hb_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

/// Static, NUL-terminated description of a status code.
#[no_mangle]
pub extern "C" fn hb_status_message(status: HbStatus) -> *const c_char {
    let msg: &'static str = match status {
        HbStatus::Ok => "ok\0",
        HbStatus::InvalidArgument => "invalid argument\0",
        HbStatus::Unsupported => "unsupported request\0",
        HbStatus::BufferTooSmall => "buffer too small\0",
        HbStatus::VerificationFailed => "verification failed\0",
        HbStatus::Internal => "internal error\0",
    };
    msg.as_ptr() as *const c_char
}

fn write_string(s: &str, buf: *mut c_char, buf_len: usize, needed: *mut usize) -> HbStatus {
    let required = s.len() + 1;
    if !needed.is_null() {
        unsafe { *needed = required };
    }
    if buf.is_null() || buf_len < required {
        return HbStatus::BufferTooSmall;
    }
    unsafe {
        std::ptr::copy_nonoverlapping(s.as_ptr(), buf as *mut u8, s.len());
        *buf.add(s.len()) = 0;
    }
    HbStatus::Ok
}
