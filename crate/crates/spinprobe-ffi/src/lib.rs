//! C ABI for the spinprobe library: opaque handles, status codes, and a
//! small set of direct numeric entry points, so other languages can drive
//! the scenario pipeline or individual physics primitives.
//!
//! Conventions: every fallible call returns an [`SpStatus`]; outputs go
//! through pointers that are written only on `SP_STATUS_OK`. Handles are
//! created and released by this library (`sp_*_free`). The most recent
//! error message per thread is available via [`sp_last_error_message`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::path::Path;

use spinprobe::nv::{closed_form_beff, closed_form_detuning, NvParams};
use spinprobe::pulse::extract_beff;
use spinprobe::scenario::{
    emit_csv, run_power_sweep, run_qwp_sweep, run_single, run_spatial_map, Scenario, Table,
};
use spinprobe::spin::spin_density;
use spinprobe::{ComplexVec3, Error};

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(e: &Error) {
    let msg = CString::new(e.to_string()).unwrap_or_default();
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(msg));
}

/// Status codes returned by every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpStatus {
    SpStatusOk = 0,
    /// A null pointer or malformed argument.
    SpStatusInvalidArgument = 1,
    /// A scenario document failed to parse or validate.
    SpStatusInvalidScenario = 2,
    /// The physics model rejected the inputs (guards, domains, brackets).
    SpStatusPhysics = 3,
    /// Filesystem failure.
    SpStatusIo = 4,
    /// Index out of range.
    SpStatusOutOfRange = 5,
}

fn status_of(e: &Error) -> SpStatus {
    match e {
        Error::Parse(_) | Error::Validation { .. } => SpStatus::SpStatusInvalidScenario,
        Error::Io { .. } => SpStatus::SpStatusIo,
        _ => SpStatus::SpStatusPhysics,
    }
}

fn fail(e: Error) -> SpStatus {
    let s = status_of(&e);
    set_last_error(&e);
    s
}

/// Opaque scenario handle.
pub struct SpScenario {
    inner: Scenario,
}

/// Opaque result-table handle.
pub struct SpTable {
    inner: Table,
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn sp_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

/// Copy the most recent error message for this thread into `buf`
/// (truncated to `len - 1` bytes, always NUL-terminated). Returns the
/// full message length, or 0 when no error has occurred yet.
///
/// # Safety
/// `buf` must point to `len` writable bytes, or be null (then only the
/// length is returned).
#[no_mangle]
pub unsafe extern "C" fn sp_last_error_message(buf: *mut c_char, len: usize) -> usize {
    LAST_ERROR.with(|slot| {
        let borrow = slot.borrow();
        let Some(msg) = borrow.as_ref() else { return 0 };
        let bytes = msg.as_bytes();
        if !buf.is_null() && len > 0 {
            let n = bytes.len().min(len - 1);
            std::ptr::copy_nonoverlapping(bytes.as_ptr() as *const c_char, buf, n);
            *buf.add(n) = 0;
        }
        bytes.len()
    })
}

unsafe fn cstr_arg<'a>(ptr: *const c_char) -> Result<&'a str, SpStatus> {
    if ptr.is_null() {
        return Err(SpStatus::SpStatusInvalidArgument);
    }
    CStr::from_ptr(ptr).to_str().map_err(|_| SpStatus::SpStatusInvalidArgument)
}

/// Parse a scenario from a JSON document.
///
/// # Safety
/// `json` must be a NUL-terminated UTF-8 string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sp_scenario_from_json(
    json: *const c_char,
    out: *mut *mut SpScenario,
) -> SpStatus {
    if out.is_null() {
        return SpStatus::SpStatusInvalidArgument;
    }
    let json = match cstr_arg(json) {
        Ok(s) => s,
        Err(status) => return status,
    };
    match Scenario::from_json(json) {
        Ok(inner) => {
            *out = Box::into_raw(Box::new(SpScenario { inner }));
            SpStatus::SpStatusOk
        }
        Err(e) => fail(e),
    }
}

/// Load a scenario document from a file path.
///
/// # Safety
/// `path` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sp_scenario_load(
    path: *const c_char,
    out: *mut *mut SpScenario,
) -> SpStatus {
    if out.is_null() {
        return SpStatus::SpStatusInvalidArgument;
    }
    let path = match cstr_arg(path) {
        Ok(s) => s,
        Err(status) => return status,
    };
    match spinprobe::scenario::load_scenario(Path::new(path)) {
        Ok(inner) => {
            *out = Box::into_raw(Box::new(SpScenario { inner }));
            SpStatus::SpStatusOk
        }
        Err(e) => fail(e),
    }
}

/// Release a scenario handle.
///
/// # Safety
/// `scenario` must be a handle from this library, not yet freed; null is
/// a no-op.
#[no_mangle]
pub unsafe extern "C" fn sp_scenario_free(scenario: *mut SpScenario) {
    if !scenario.is_null() {
        drop(Box::from_raw(scenario));
    }
}

unsafe fn run_to_table(
    scenario: *const SpScenario,
    out: *mut *mut SpTable,
    run: impl FnOnce(&Scenario) -> spinprobe::Result<Table>,
) -> SpStatus {
    if scenario.is_null() || out.is_null() {
        return SpStatus::SpStatusInvalidArgument;
    }
    match run(&(*scenario).inner) {
        Ok(inner) => {
            *out = Box::into_raw(Box::new(SpTable { inner }));
            SpStatus::SpStatusOk
        }
        Err(e) => fail(e),
    }
}

/// Run the QWP-angle sweep. See the crate documentation for the columns.
///
/// # Safety
/// `scenario` must be a live handle; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sp_run_qwp_sweep(
    scenario: *const SpScenario,
    out: *mut *mut SpTable,
) -> SpStatus {
    run_to_table(scenario, out, run_qwp_sweep)
}

/// Run the power sweep.
///
/// # Safety
/// As for [`sp_run_qwp_sweep`].
#[no_mangle]
pub unsafe extern "C" fn sp_run_power_sweep(
    scenario: *const SpScenario,
    out: *mut *mut SpTable,
) -> SpStatus {
    run_to_table(scenario, out, run_power_sweep)
}

/// Run the spatial effective-field map.
///
/// # Safety
/// As for [`sp_run_qwp_sweep`].
#[no_mangle]
pub unsafe extern "C" fn sp_run_spatial_map(
    scenario: *const SpScenario,
    out: *mut *mut SpTable,
) -> SpStatus {
    run_to_table(scenario, out, run_spatial_map)
}

/// Evaluate a beam scenario at its single configured point.
///
/// # Safety
/// As for [`sp_run_qwp_sweep`].
#[no_mangle]
pub unsafe extern "C" fn sp_run_single(
    scenario: *const SpScenario,
    out: *mut *mut SpTable,
) -> SpStatus {
    run_to_table(scenario, out, run_single)
}

/// Number of data rows in a table.
///
/// # Safety
/// `table` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn sp_table_rows(table: *const SpTable) -> usize {
    if table.is_null() {
        return 0;
    }
    (*table).inner.rows().len()
}

/// Number of columns in a table.
///
/// # Safety
/// `table` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn sp_table_cols(table: *const SpTable) -> usize {
    if table.is_null() {
        return 0;
    }
    (*table).inner.columns().len()
}

/// Fetch one value.
///
/// # Safety
/// `table` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sp_table_value(
    table: *const SpTable,
    row: usize,
    col: usize,
    out: *mut f64,
) -> SpStatus {
    if table.is_null() || out.is_null() {
        return SpStatus::SpStatusInvalidArgument;
    }
    let rows = (*table).inner.rows();
    match rows.get(row).and_then(|r| r.get(col)) {
        Some(v) => {
            *out = *v;
            SpStatus::SpStatusOk
        }
        None => SpStatus::SpStatusOutOfRange,
    }
}

/// Copy a column name into `buf` (truncated, NUL-terminated). Returns the
/// name length, or 0 if the column does not exist.
///
/// # Safety
/// `table` must be a live handle; `buf` must point to `len` writable
/// bytes or be null.
#[no_mangle]
pub unsafe extern "C" fn sp_table_column_name(
    table: *const SpTable,
    col: usize,
    buf: *mut c_char,
    len: usize,
) -> usize {
    if table.is_null() {
        return 0;
    }
    let Some(name) = (*table).inner.columns().get(col) else { return 0 };
    let bytes = name.as_bytes();
    if !buf.is_null() && len > 0 {
        let n = bytes.len().min(len - 1);
        std::ptr::copy_nonoverlapping(bytes.as_ptr() as *const c_char, buf, n);
        *buf.add(n) = 0;
    }
    bytes.len()
}

/// Write a table to disk as CSV (byte-identical across runs).
///
/// # Safety
/// `table` must be a live handle and `path` a NUL-terminated string.
#[no_mangle]
pub unsafe extern "C" fn sp_table_write_csv(
    table: *const SpTable,
    path: *const c_char,
) -> SpStatus {
    if table.is_null() {
        return SpStatus::SpStatusInvalidArgument;
    }
    let path = match cstr_arg(path) {
        Ok(s) => s,
        Err(status) => return status,
    };
    match emit_csv(&(*table).inner, Path::new(path)) {
        Ok(()) => SpStatus::SpStatusOk,
        Err(e) => fail(e),
    }
}

/// Release a table handle.
///
/// # Safety
/// `table` must be a handle from this library, not yet freed; null is a
/// no-op.
#[no_mangle]
pub unsafe extern "C" fn sp_table_free(table: *mut SpTable) {
    if !table.is_null() {
        drop(Box::from_raw(table));
    }
}

/// Polarization state after the LP + QWP pair: writes the real and
/// imaginary parts of the (x, y, z) components.
///
/// # Safety
/// `out_re` and `out_im` must each point to 3 writable doubles.
#[no_mangle]
pub unsafe extern "C" fn sp_qwp_jones(
    theta_rad: f64,
    out_re: *mut f64,
    out_im: *mut f64,
) -> SpStatus {
    if out_re.is_null() || out_im.is_null() {
        return SpStatus::SpStatusInvalidArgument;
    }
    let e = spinprobe::em::qwp_jones(theta_rad);
    for (i, c) in [e.x, e.y, e.z].iter().enumerate() {
        *out_re.add(i) = c.re;
        *out_im.add(i) = c.im;
    }
    SpStatus::SpStatusOk
}

/// Photonic spin density of a complex field (components in V/m) at
/// angular frequency `omega` (rad/s) in a medium of absolute permittivity
/// `epsilon` (F/m). Writes the (x, y, z) spin components (J s/m^3).
///
/// # Safety
/// `e_re`, `e_im` must point to 3 readable doubles and `out_s` to 3
/// writable doubles.
#[no_mangle]
pub unsafe extern "C" fn sp_spin_density(
    e_re: *const f64,
    e_im: *const f64,
    omega: f64,
    epsilon: f64,
    out_s: *mut f64,
) -> SpStatus {
    if e_re.is_null() || e_im.is_null() || out_s.is_null() {
        return SpStatus::SpStatusInvalidArgument;
    }
    let c = |i: usize| spinprobe::Complex64::new(*e_re.add(i), *e_im.add(i));
    let e = ComplexVec3::new(c(0), c(1), c(2));
    match spin_density(e, omega, epsilon) {
        Ok(s) => {
            *out_s.add(0) = s.s.x;
            *out_s.add(1) = s.s.y;
            *out_s.add(2) = s.s.z;
            SpStatus::SpStatusOk
        }
        Err(e) => fail(e),
    }
}

/// Closed-form effective field (T) from a projected spin density
/// (J s/m^3) for the default NV parameters and a drive at
/// `wavelength_m`.
///
/// # Safety
/// `out_tesla` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sp_closed_form_beff(
    s_proj: f64,
    wavelength_m: f64,
    out_tesla: *mut f64,
) -> SpStatus {
    if out_tesla.is_null() {
        return SpStatus::SpStatusInvalidArgument;
    }
    if wavelength_m.is_nan() || wavelength_m <= 0.0 {
        return fail(Error::validation("wavelength_m", "must be > 0"));
    }
    let nv = NvParams::default();
    let omega0 = std::f64::consts::TAU * spinprobe::constants::SPEED_OF_LIGHT / wavelength_m;
    let delta = closed_form_detuning(&nv, omega0);
    match closed_form_beff(s_proj, &nv, omega0, delta) {
        Ok(b) => {
            *out_tesla = b;
            SpStatus::SpStatusOk
        }
        Err(e) => fail(e),
    }
}

/// Effective-field extraction from a measured contrast difference.
///
/// # Safety
/// `out_tesla` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sp_extract_beff(
    contrast: f64,
    c_max: f64,
    n_blocks: u32,
    tau_prime_s: f64,
    gamma: f64,
    out_tesla: *mut f64,
) -> SpStatus {
    if out_tesla.is_null() {
        return SpStatus::SpStatusInvalidArgument;
    }
    match extract_beff(contrast, c_max, n_blocks, tau_prime_s, gamma) {
        Ok(r) => {
            *out_tesla = r.b;
            SpStatus::SpStatusOk
        }
        Err(e) => fail(e),
    }
}
