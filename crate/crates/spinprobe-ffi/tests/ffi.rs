//! Exercises the C ABI exactly as a foreign caller would: through raw
//! pointers, status codes, and opaque handles.

use std::ffi::{c_char, CString};
use std::ptr;

use spinprobe_ffi::*;

fn make_scenario(json: &str) -> *mut SpScenario {
    let cjson = CString::new(json).unwrap();
    let mut handle: *mut SpScenario = ptr::null_mut();
    let status = unsafe { sp_scenario_from_json(cjson.as_ptr(), &mut handle) };
    assert_eq!(status, SpStatus::SpStatusOk);
    assert!(!handle.is_null());
    handle
}

#[test]
fn version_string_is_nul_terminated() {
    let v = unsafe { std::ffi::CStr::from_ptr(sp_version()) };
    assert!(!v.to_str().unwrap().is_empty());
}

#[test]
fn qwp_sweep_through_the_c_abi() {
    let scenario = make_scenario(
        r#"{"source":{"beam":{}},"sweep":{"qwp_angles_deg":[0.0,45.0,90.0,135.0]}}"#,
    );
    let mut table: *mut SpTable = ptr::null_mut();
    let status = unsafe { sp_run_qwp_sweep(scenario, &mut table) };
    assert_eq!(status, SpStatus::SpStatusOk);

    unsafe {
        assert_eq!(sp_table_rows(table), 4);
        assert_eq!(sp_table_cols(table), 8);

        let mut name = [0 as c_char; 64];
        let len = sp_table_column_name(table, 2, name.as_mut_ptr(), name.len());
        assert!(len > 0);
        let name = std::ffi::CStr::from_ptr(name.as_ptr()).to_str().unwrap();
        assert_eq!(name, "b_m11_exact_nt");

        // theta = 45 deg row carries the peak field; theta = 0 none
        let mut b0 = 0.0f64;
        let mut b45 = 0.0f64;
        assert_eq!(sp_table_value(table, 0, 2, &mut b0), SpStatus::SpStatusOk);
        assert_eq!(sp_table_value(table, 1, 2, &mut b45), SpStatus::SpStatusOk);
        assert!(b0.abs() < 1e-9);
        assert!(b45.abs() > 10.0);

        assert_eq!(sp_table_value(table, 9, 0, &mut b0), SpStatus::SpStatusOutOfRange);

        sp_table_free(table);
        sp_scenario_free(scenario);
    }
}

#[test]
fn invalid_scenario_reports_an_error_message() {
    let cjson = CString::new(r#"{"source":{"beam":{"wavelength_nm":-5}}}"#).unwrap();
    let mut handle: *mut SpScenario = ptr::null_mut();
    let status = unsafe { sp_scenario_from_json(cjson.as_ptr(), &mut handle) };
    assert_eq!(status, SpStatus::SpStatusInvalidScenario);
    assert!(handle.is_null());

    let mut buf = [0 as c_char; 256];
    let len = unsafe { sp_last_error_message(buf.as_mut_ptr(), buf.len()) };
    assert!(len > 0);
    let msg = unsafe { std::ffi::CStr::from_ptr(buf.as_ptr()) }.to_str().unwrap();
    assert!(msg.contains("wavelength_nm"), "message: {msg}");
}

#[test]
fn null_arguments_are_rejected() {
    let mut handle: *mut SpScenario = ptr::null_mut();
    assert_eq!(
        unsafe { sp_scenario_from_json(ptr::null(), &mut handle) },
        SpStatus::SpStatusInvalidArgument
    );
    assert_eq!(
        unsafe { sp_scenario_from_json(CString::new("{}").unwrap().as_ptr(), ptr::null_mut()) },
        SpStatus::SpStatusInvalidArgument
    );
    let mut out = 0.0f64;
    assert_eq!(
        unsafe { sp_spin_density(ptr::null(), ptr::null(), 1.0, 1.0, &mut out) },
        SpStatus::SpStatusInvalidArgument
    );
}

#[test]
fn direct_physics_entry_points() {
    // left-circular polarization at theta = pi/4
    let mut re = [0.0f64; 3];
    let mut im = [0.0f64; 3];
    let status = unsafe {
        sp_qwp_jones(std::f64::consts::FRAC_PI_4, re.as_mut_ptr(), im.as_mut_ptr())
    };
    assert_eq!(status, SpStatus::SpStatusOk);
    let inv_sqrt2 = std::f64::consts::FRAC_1_SQRT_2;
    assert!((re[0] - inv_sqrt2).abs() < 1e-12 && (im[1] - inv_sqrt2).abs() < 1e-12);

    // its spin density points along +z
    let mut s = [0.0f64; 3];
    let omega = 2.354e15;
    let eps = 8.8541878128e-12;
    let status =
        unsafe { sp_spin_density(re.as_ptr(), im.as_ptr(), omega, eps, s.as_mut_ptr()) };
    assert_eq!(status, SpStatus::SpStatusOk);
    assert!(s[2] > 0.0 && s[0].abs() < 1e-30 && s[1].abs() < 1e-30);

    // closed-form field from that spin density is finite and negative
    let mut b = 0.0f64;
    let status = unsafe { sp_closed_form_beff(s[2], 800e-9, &mut b) };
    assert_eq!(status, SpStatus::SpStatusOk);
    assert!(b < 0.0);

    // contrast extraction round-trip
    let gamma = std::f64::consts::TAU * 2.8e10;
    let b_true = 10e-9;
    let phi = 15.0 * gamma * b_true * 1e-6 / 2.0;
    let c = -(2.0 * phi).sin() * 0.203;
    let mut b_est = 0.0f64;
    let status = unsafe { sp_extract_beff(c, 0.203, 4, 1e-6, gamma, &mut b_est) };
    assert_eq!(status, SpStatus::SpStatusOk);
    assert!((b_est / b_true - 1.0).abs() < 1e-12);
}

#[test]
fn csv_written_through_the_abi_matches_library_output() {
    let json = r#"{"source":{"beam":{}},"sweep":{"qwp_angles_deg":[0.0,30.0,60.0]}}"#;
    let scenario = make_scenario(json);
    let mut table: *mut SpTable = ptr::null_mut();
    assert_eq!(unsafe { sp_run_qwp_sweep(scenario, &mut table) }, SpStatus::SpStatusOk);

    let path = std::path::PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("ffi_out.csv");
    let cpath = CString::new(path.to_str().unwrap()).unwrap();
    assert_eq!(unsafe { sp_table_write_csv(table, cpath.as_ptr()) }, SpStatus::SpStatusOk);

    let from_ffi = std::fs::read_to_string(&path).unwrap();
    let from_lib = spinprobe::scenario::run_qwp_sweep(
        &spinprobe::scenario::Scenario::from_json(json).unwrap(),
    )
    .unwrap()
    .to_csv();
    assert_eq!(from_ffi, from_lib);

    unsafe {
        sp_table_free(table);
        sp_scenario_free(scenario);
    }
}
