//! Scenario runners: QWP-angle sweeps, power sweeps, and spatial maps of
//! the effective field, each producing a deterministic table.

use std::f64::consts::TAU;

use crate::constants::SPEED_OF_LIGHT;
use crate::em::{
    fiber_he11_field, paraxial_gaussian_field, slab_te_mode_field, slab_two_mode_field,
    solve_fiber_he11_dispersion, solve_slab_te_dispersion, solve_slab_tm_dispersion,
    spp_mode_field, BeamParams,
};
use crate::error::{Error, Result};
use crate::nv::{closed_form_beff, closed_form_detuning, effective_field, NvParams};
use crate::pulse::simulate_measurement;
use crate::scenario::config::{
    fiber_params, nm_to_m, slab_params, spp_params, tesla_to_nt, Scenario, SourceConfig,
    SweepConfig,
};
use crate::scenario::fit::{line_fit, sine_fit, SineFit};
use crate::scenario::table::Table;
use crate::spin::{project_on_axis, spin_density};
use crate::vec3::Vec3;

fn omega_from_wavelength(wavelength: f64) -> f64 {
    TAU * SPEED_OF_LIGHT / wavelength
}

/// One evaluated point of a beam scenario.
struct BeamPoint {
    s_proj: f64,
    b_exact: f64,
    b_closed: f64,
}

/// Field -> spin density -> effective field at the NV site, including the
/// transverse-spin knob. The knob adds a theta-independent spin component,
/// folded into both the exact and the closed-form fields through the
/// closed form (the Stark route cannot see a fictitious spin).
fn evaluate_beam_point(scenario: &Scenario, beam: &BeamParams, nv: &NvParams) -> Result<BeamPoint> {
    let omega0 = omega_from_wavelength(beam.wavelength);
    let r_nv = scenario.nv_position()?;
    let e = paraxial_gaussian_field(beam, r_nv)?;
    let s_beam = spin_density(e, omega0, nv.epsilon_medium)?;
    let delta = closed_form_detuning(nv, omega0);

    let (fraction, axis) = match &scenario.source {
        SourceConfig::Beam(b) => (
            b.transverse_spin_fraction,
            Vec3::new(b.transverse_spin_axis[0], b.transverse_spin_axis[1], b.transverse_spin_axis[2]),
        ),
        _ => unreachable!("beam point from non-beam source"),
    };
    let s_extra_proj = if fraction != 0.0 {
        let bound = nv.epsilon_medium * e.norm_sq() / (4.0 * omega0);
        fraction * bound * axis.normalized().dot(nv.axis)
    } else {
        0.0
    };

    let s_proj = project_on_axis(s_beam, nv.axis)? + s_extra_proj;
    let b_offset = closed_form_beff(s_extra_proj, nv, omega0, delta)?;
    let b_exact = effective_field(nv, e, omega0)?.bm11 + b_offset;
    let b_closed = closed_form_beff(s_proj, nv, omega0, delta)?;
    Ok(BeamPoint { s_proj, b_exact, b_closed })
}

/// QWP-angle sweep of the beam scenario: per angle, the projected spin
/// density, the exact and closed-form qubit fields, the simulated
/// contrasts, and the recovered field.
pub fn run_qwp_sweep(scenario: &Scenario) -> Result<Table> {
    scenario.validate()?;
    let angles = match &scenario.sweep {
        SweepConfig::QwpAnglesDeg(a) => a.clone(),
        _ => return Err(Error::validation("sweep", "qwp-sweep requires sweep.qwp_angles_deg")),
    };
    let base_beam = scenario.beam_params()?;
    let nv = scenario.nv_params()?;
    let seq = scenario.sequence_spec()?;

    let mut table = Table::new(&[
        "theta_deg",
        "s_proj_js_per_m3",
        "b_m11_exact_nt",
        "b_m11_closed_nt",
        "c1",
        "c2",
        "c",
        "b_est_nt",
    ]);
    for theta_deg in angles {
        let beam = BeamParams { qwp_angle: theta_deg.to_radians(), ..base_beam };
        let point = evaluate_beam_point(scenario, &beam, &nv)?;
        let outcome = simulate_measurement(point.b_exact, &seq, scenario.c_max())?;
        table.push_row(vec![
            theta_deg,
            point.s_proj,
            tesla_to_nt(point.b_exact),
            tesla_to_nt(point.b_closed),
            outcome.c1,
            outcome.c2,
            outcome.c,
            tesla_to_nt(outcome.b_est),
        ]);
    }
    Ok(table)
}

/// Power sweep at fixed QWP angle, with the least-squares line through
/// (power, field) carried in constant columns.
pub fn run_power_sweep(scenario: &Scenario) -> Result<Table> {
    scenario.validate()?;
    let powers_mw = match &scenario.sweep {
        SweepConfig::PowersMw(p) => p.clone(),
        _ => return Err(Error::validation("sweep", "power-sweep requires sweep.powers_mw")),
    };
    let base_beam = scenario.beam_params()?;
    let nv = scenario.nv_params()?;
    let seq = scenario.sequence_spec()?;

    let mut rows = Vec::new();
    for &p_mw in &powers_mw {
        let beam = BeamParams { power: p_mw / 1e3, ..base_beam };
        let point = evaluate_beam_point(scenario, &beam, &nv)?;
        let outcome = simulate_measurement(point.b_exact, &seq, scenario.c_max())?;
        rows.push((p_mw, tesla_to_nt(point.b_exact), outcome.c));
    }
    let fit = line_fit(&rows.iter().map(|r| (r.0, r.1)).collect::<Vec<_>>())?;

    let mut table = Table::new(&[
        "power_mw",
        "b_m11_nt",
        "contrast",
        "slope_nt_per_mw",
        "intercept_nt",
        "r_squared",
    ]);
    for (p_mw, b_nt, c) in rows {
        table.push_row(vec![p_mw, b_nt, c, fit.slope, fit.intercept, fit.r_squared]);
    }
    Ok(table)
}

/// Spatial map of the closed-form effective field over a 2-D grid near an
/// evanescent-field structure, projected on x, y, and the scenario's NV
/// axis. Grid order: axis1-major, axis2 fastest.
pub fn run_spatial_map(scenario: &Scenario) -> Result<Table> {
    scenario.validate()?;
    let grid = match &scenario.sweep {
        SweepConfig::Grid(g) => g.clone(),
        _ => return Err(Error::validation("sweep", "map requires sweep.grid")),
    };
    let nv = scenario.nv_params()?;

    // field evaluator per source kind; dispersion solved once up front
    enum FieldKind {
        Spp(crate::em::SppParams),
        Slab {
            params: crate::em::SlabParams,
            te: crate::em::SlabMode,
            tm: Option<(crate::em::SlabMode, f64, f64)>,
        },
        Fiber(crate::em::FiberParams, crate::em::FiberMode),
    }
    let (kind, wavelength) = match &scenario.source {
        SourceConfig::Spp(s) => {
            let p = spp_params(s)?;
            p.validate()?;
            (FieldKind::Spp(p), p.wavelength)
        }
        SourceConfig::Slab(s) => {
            let params = slab_params(s)?;
            let te = solve_slab_te_dispersion(&params)?;
            let tm = match &s.tm_mix {
                Some(mix) => Some((
                    solve_slab_tm_dispersion(&params)?,
                    mix.amplitude_ratio,
                    mix.phase_deg.to_radians(),
                )),
                None => None,
            };
            (FieldKind::Slab { params, te, tm }, params.wavelength)
        }
        SourceConfig::Fiber(f) => {
            let params = fiber_params(f)?;
            let mode = solve_fiber_he11_dispersion(&params)?;
            (FieldKind::Fiber(params, mode), params.wavelength)
        }
        SourceConfig::Beam(_) => {
            return Err(Error::validation("source", "map requires an evanescent-field source"))
        }
    };
    let omega0 = omega_from_wavelength(wavelength);
    let delta = closed_form_detuning(&nv, omega0);

    let mut table = Table::new(&[
        &format!("pos_{}_nm", grid.axis1.axis.label()),
        &format!("pos_{}_nm", grid.axis2.axis.label()),
        "b_eff_x_nt",
        "b_eff_y_nt",
        "b_proj_nt",
    ]);
    for i in 0..grid.axis1.points {
        let v1_nm = grid.axis1.from_nm
            + (grid.axis1.to_nm - grid.axis1.from_nm) * i as f64 / (grid.axis1.points - 1) as f64;
        for j in 0..grid.axis2.points {
            let v2_nm = grid.axis2.from_nm
                + (grid.axis2.to_nm - grid.axis2.from_nm) * j as f64
                    / (grid.axis2.points - 1) as f64;
            let mut r = Vec3::ZERO;
            grid.axis1.axis.embed(nm_to_m(v1_nm), &mut r);
            grid.axis2.axis.embed(nm_to_m(v2_nm), &mut r);

            let e = match &kind {
                FieldKind::Spp(p) => spp_mode_field(p, r)?,
                FieldKind::Slab { params, te, tm } => match tm {
                    Some((tm_mode, ratio, phase)) => {
                        slab_two_mode_field(params, te, tm_mode, *ratio, *phase, r)
                    }
                    None => slab_te_mode_field(params, te, r),
                },
                FieldKind::Fiber(p, mode) => fiber_he11_field(p, mode, r),
            };
            let s = spin_density(e, omega0, nv.epsilon_medium)?.s;
            let bx = closed_form_beff(s.x, &nv, omega0, delta)?;
            let by = closed_form_beff(s.y, &nv, omega0, delta)?;
            let bp = closed_form_beff(s.dot(nv.axis), &nv, omega0, delta)?;
            table.push_row(vec![
                v1_nm,
                v2_nm,
                tesla_to_nt(bx),
                tesla_to_nt(by),
                tesla_to_nt(bp),
            ]);
        }
    }
    Ok(table)
}

/// Single-point evaluation of a beam scenario (one qwp-sweep-style row).
pub fn run_single(scenario: &Scenario) -> Result<Table> {
    scenario.validate()?;
    let beam = scenario.beam_params()?;
    let nv = scenario.nv_params()?;
    let seq = scenario.sequence_spec()?;
    let point = evaluate_beam_point(scenario, &beam, &nv)?;
    let outcome = simulate_measurement(point.b_exact, &seq, scenario.c_max())?;
    let mut table = Table::new(&[
        "theta_deg",
        "s_proj_js_per_m3",
        "b_m11_exact_nt",
        "b_m11_closed_nt",
        "c1",
        "c2",
        "c",
        "b_est_nt",
    ]);
    table.push_row(vec![
        beam.qwp_angle.to_degrees(),
        point.s_proj,
        tesla_to_nt(point.b_exact),
        tesla_to_nt(point.b_closed),
        outcome.c1,
        outcome.c2,
        outcome.c,
        tesla_to_nt(outcome.b_est),
    ]);
    Ok(table)
}

/// Sine fit of the exact-field column of a QWP sweep.
pub fn fit_qwp_sweep(table: &Table) -> Result<SineFit> {
    let thetas = table
        .column("theta_deg")
        .ok_or_else(|| Error::validation("fit", "missing theta_deg column"))?;
    let fields = table
        .column("b_m11_exact_nt")
        .ok_or_else(|| Error::validation("fit", "missing b_m11_exact_nt column"))?;
    let points: Vec<(f64, f64)> = thetas
        .iter()
        .zip(&fields)
        .map(|(t, b)| (t.to_radians(), *b))
        .collect();
    sine_fit(&points)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qwp_reference_scenario() -> Scenario {
        let angles: Vec<f64> = (0..24).map(|i| 180.0 * i as f64 / 24.0).collect();
        let json = format!(
            r#"{{
                "source": {{"beam": {{}}}},
                "sweep": {{"qwp_angles_deg": {angles:?}}}
            }}"#
        );
        Scenario::from_json(&json).unwrap()
    }

    #[test]
    fn qwp_sweep_recovery_matches_exact_field() {
        let table = run_qwp_sweep(&qwp_reference_scenario()).unwrap();
        let exact = table.column("b_m11_exact_nt").unwrap();
        let est = table.column("b_est_nt").unwrap();
        for (b, e) in exact.iter().zip(&est) {
            let scale = exact.iter().fold(0.0f64, |m, v| m.max(v.abs()));
            assert!((b - e).abs() <= 1e-9 * scale, "{b} vs {e}");
        }
    }

    #[test]
    fn qwp_sweep_fits_a_pure_sine_with_zero_offset() {
        let table = run_qwp_sweep(&qwp_reference_scenario()).unwrap();
        let fit = fit_qwp_sweep(&table).unwrap();
        assert!(fit.amplitude > 10.0, "expect tens of nT, got {}", fit.amplitude);
        assert!(fit.offset.abs() < 1e-3 * fit.amplitude);
        assert!(fit.rms_residual < 1e-9 * fit.amplitude);
    }

    #[test]
    fn transverse_spin_knob_adds_a_dc_offset() {
        let mut scenario = qwp_reference_scenario();
        if let SourceConfig::Beam(b) = &mut scenario.source {
            b.transverse_spin_fraction = 0.2;
        }
        let table = run_qwp_sweep(&scenario).unwrap();
        let fit = fit_qwp_sweep(&table).unwrap();
        assert!(fit.offset.abs() > 1e-2 * fit.amplitude, "offset {} nT", fit.offset);
        assert!(fit.rms_residual < 1e-6 * fit.amplitude);
    }

    #[test]
    fn power_sweep_is_linear_through_zero() {
        let json = r#"{
            "source": {"beam": {"qwp_angle_deg": 135.0}},
            "sweep": {"powers_mw": [0.5, 1.0, 1.5, 2.0, 2.5, 3.0, 3.5, 4.0]}
        }"#;
        let scenario = Scenario::from_json(json).unwrap();
        let table = run_power_sweep(&scenario).unwrap();
        let r2 = table.column("r_squared").unwrap()[0];
        let slope = table.column("slope_nt_per_mw").unwrap()[0];
        let intercept = table.column("intercept_nt").unwrap()[0];
        assert!(r2 > 1.0 - 1e-12, "R^2 = {r2}");
        assert!(intercept.abs() < 1e-12 * (slope.abs() * 4.0));
    }

    #[test]
    fn power_sweep_slope_follows_sin_two_theta() {
        let run = |theta: f64| {
            let json = format!(
                r#"{{
                    "source": {{"beam": {{"qwp_angle_deg": {theta}}}}},
                    "sweep": {{"powers_mw": [1.0, 2.0, 3.0, 4.0]}}
                }}"#
            );
            let scenario = Scenario::from_json(&json).unwrap();
            let table = run_power_sweep(&scenario).unwrap();
            table.column("slope_nt_per_mw").unwrap()[0]
        };
        let s15 = run(15.0); // sin(30 deg) = 1/2
        let s45 = run(45.0); // sin(90 deg) = 1
        assert!((s45 / s15 - 2.0).abs() < 1e-9, "{s45} / {s15}");
    }

    #[test]
    fn spp_map_negates_under_propagation_reversal() {
        let mk = |dir: f64| {
            let json = format!(
                r#"{{
                    "source": {{"spp": {{"direction": {dir}}}}},
                    "nv": {{"axis": [0.0, 1.0, 0.0], "epsilon_r": 1.0}},
                    "sweep": {{"grid": {{
                        "axis1": {{"axis": "x", "from_nm": -400, "to_nm": 400, "points": 7}},
                        "axis2": {{"axis": "z", "from_nm": 20, "to_nm": 400, "points": 9}}
                    }}}}
                }}"#
            );
            run_spatial_map(&Scenario::from_json(&json).unwrap()).unwrap()
        };
        let fwd = mk(1.0);
        let bwd = mk(-1.0);
        let by_f = fwd.column("b_eff_y_nt").unwrap();
        let by_b = bwd.column("b_eff_y_nt").unwrap();
        let scale = by_f.iter().fold(0.0f64, |m, v| m.max(v.abs()));
        assert!(scale > 0.0);
        for (f, b) in by_f.iter().zip(&by_b) {
            assert!((f + b).abs() < 1e-9 * scale);
        }
    }

    #[test]
    fn fiber_map_b_proj_alternates_by_quadrant() {
        let json = r#"{
            "source": {"fiber": {}},
            "nv": {"axis": [1.0, 1.0, -1.0], "epsilon_r": 1.0},
            "sweep": {"grid": {
                "axis1": {"axis": "x", "from_nm": -4000, "to_nm": 4000, "points": 9},
                "axis2": {"axis": "y", "from_nm": -4000, "to_nm": 4000, "points": 9}
            }}
        }"#;
        let scenario = Scenario::from_json(json).unwrap();
        let table = run_spatial_map(&scenario).unwrap();
        // radial projection on the ring rho = 1.2 a = 3 um checked in the
        // em tests; here check the map contains nonzero transverse fields
        let bx = table.column("b_eff_x_nt").unwrap();
        let by = table.column("b_eff_y_nt").unwrap();
        assert!(bx.iter().any(|v| v.abs() > 0.0));
        assert!(by.iter().any(|v| v.abs() > 0.0));
    }

    #[test]
    fn map_rejects_beam_sources_and_wrong_sweeps() {
        let s = Scenario::from_json(r#"{"source":{"beam":{}}}"#).unwrap();
        assert!(run_spatial_map(&s).is_err());
        assert!(run_qwp_sweep(&s).is_err());
        assert!(run_power_sweep(&s).is_err());
        assert!(run_single(&s).is_ok());
    }

    #[test]
    fn sweep_runs_are_deterministic() {
        let a = run_qwp_sweep(&qwp_reference_scenario()).unwrap().to_csv();
        let b = run_qwp_sweep(&qwp_reference_scenario()).unwrap().to_csv();
        assert_eq!(a, b);
    }
}
