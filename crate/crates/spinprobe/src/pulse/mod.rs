//! Two-level qubit simulation of the XY8 measurement protocol: the
//! closed-form contrast algebra plus a brute-force state-vector propagator
//! that serves as its independent oracle, and the effective-field
//! extraction applied to measurement-style data.
//!
//! Timing convention: the initial pi/2 pulse fires at t = 0, the 8N pi
//! pulses at (k - 1/2) tau for k = 1..8N, and the final pi/2 at 8N tau.
//! Free-evolution slot k is centered on k tau; the target-beam windows sit
//! at the slot centers. Measurement 1 drives the even interior slots
//! {2, 4, ..., 8N-2} and measurement 2 the odd slots {1, 3, ..., 8N-3},
//! 4N-1 full pulses each (the clipped half pulses at the sequence edges
//! are dropped from measurement 1 and the last odd slot from measurement
//! 2). The calibration run puts half-length pulses in slot 0 and every
//! interior slot so the accumulated phases cancel pairwise.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// 2x2 complex unitary.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Unitary2 {
    /// Row-major entries [[a, b], [c, d]].
    pub m: [[Complex64; 2]; 2],
}

impl Unitary2 {
    pub fn identity() -> Self {
        let one = Complex64::new(1.0, 0.0);
        let zero = Complex64::new(0.0, 0.0);
        Unitary2 { m: [[one, zero], [zero, one]] }
    }

    pub fn mul(&self, other: &Unitary2) -> Unitary2 {
        let mut out = [[Complex64::new(0.0, 0.0); 2]; 2];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, entry) in row.iter_mut().enumerate() {
                *entry = self.m[i][0] * other.m[0][j] + self.m[i][1] * other.m[1][j];
            }
        }
        Unitary2 { m: out }
    }

    pub fn dagger(&self) -> Unitary2 {
        Unitary2 {
            m: [
                [self.m[0][0].conj(), self.m[1][0].conj()],
                [self.m[0][1].conj(), self.m[1][1].conj()],
            ],
        }
    }

    pub fn det(&self) -> Complex64 {
        self.m[0][0] * self.m[1][1] - self.m[0][1] * self.m[1][0]
    }

    /// Max deviation of U^dagger U from the identity.
    pub fn unitarity_defect(&self) -> f64 {
        let p = self.dagger().mul(self);
        let id = Unitary2::identity();
        let mut worst = 0.0f64;
        for i in 0..2 {
            for j in 0..2 {
                worst = worst.max((p.m[i][j] - id.m[i][j]).norm());
            }
        }
        worst
    }
}

/// Normalized qubit state (a, b) on {|0>, |1>} where |1> is the addressed
/// |+-1> sublevel.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QubitState {
    pub a: Complex64,
    pub b: Complex64,
}

impl QubitState {
    pub fn ground() -> Self {
        QubitState { a: Complex64::new(1.0, 0.0), b: Complex64::new(0.0, 0.0) }
    }

    pub fn apply(&self, u: &Unitary2) -> QubitState {
        QubitState {
            a: u.m[0][0] * self.a + u.m[0][1] * self.b,
            b: u.m[1][0] * self.a + u.m[1][1] * self.b,
        }
    }

    pub fn norm_sq(&self) -> f64 {
        self.a.norm_sqr() + self.b.norm_sqr()
    }

    /// Population of the |1> level.
    pub fn excited_population(&self) -> f64 {
        self.b.norm_sqr()
    }
}

/// Rotation axis for the microwave pulses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RotationAxis {
    X,
    Y,
    MinusY,
}

/// R_x(theta) = [[cos t/2, -i sin t/2], [-i sin t/2, cos t/2]],
/// R_y(theta) = [[cos t/2, -sin t/2], [sin t/2, cos t/2]]; the -y axis is
/// R_y(-theta).
pub fn rotation_gate(axis: RotationAxis, angle: f64) -> Unitary2 {
    let angle = match axis {
        RotationAxis::MinusY => -angle,
        _ => angle,
    };
    let (s, c) = (0.5 * angle).sin_cos();
    let cos = Complex64::new(c, 0.0);
    match axis {
        RotationAxis::X => {
            let off = Complex64::new(0.0, -s);
            Unitary2 { m: [[cos, off], [off, cos]] }
        }
        RotationAxis::Y | RotationAxis::MinusY => {
            Unitary2 { m: [[cos, Complex64::new(-s, 0.0)], [Complex64::new(s, 0.0), cos]] }
        }
    }
}

/// Which run of the protocol a sequence realizes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MeasurementSlot {
    Measurement1,
    Measurement2,
    Calibration,
}

/// XY8 protocol parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SequenceSpec {
    /// Number of XY8 blocks (8 pi pulses each).
    pub n_blocks: u32,
    /// Inter-pi-pulse period tau (s).
    pub tau: f64,
    /// Target-pulse length tau' (s), at most tau/2.
    pub tau_prime: f64,
    /// Qubit gyromagnetic ratio (rad s^-1 T^-1).
    pub gamma: f64,
    /// Which target-window pattern to run.
    pub slot: MeasurementSlot,
    /// Microwave detuning delta-omega (rad/s); refocused by the sequence.
    pub mw_detuning: f64,
}

impl SequenceSpec {
    pub fn validate(&self) -> Result<()> {
        if self.n_blocks < 1 {
            return Err(Error::validation("sequence.n_blocks", "must be >= 1"));
        }
        if !(self.tau > 0.0) {
            return Err(Error::validation("sequence.tau", "must be > 0"));
        }
        if !(self.tau_prime > 0.0 && self.tau_prime <= 0.5 * self.tau) {
            return Err(Error::validation("sequence.tau_prime", "must satisfy 0 < tau' <= tau/2"));
        }
        if !(self.gamma > 0.0) {
            return Err(Error::validation("sequence.gamma", "must be > 0"));
        }
        Ok(())
    }

    /// Total sequence duration 8 N tau (s).
    pub fn duration(&self) -> f64 {
        8.0 * self.n_blocks as f64 * self.tau
    }

    /// Number of target pulses per measurement, 4N - 1.
    pub fn pulses_per_measurement(&self) -> u32 {
        4 * self.n_blocks - 1
    }
}

/// Phase accumulated from a constant field B during the target windows:
/// phi = gamma B tau'/2 per pulse, Phi = (4N - 1) phi in total.
pub fn accumulated_phase(b: f64, seq: &SequenceSpec) -> f64 {
    let per_pulse = 0.5 * seq.gamma * b * seq.tau_prime;
    seq.pulses_per_measurement() as f64 * per_pulse
}

/// Closed-form contrasts:
/// C1 = sin^2(pi/4 - Phi) C_max, C2 = sin^2(pi/4 + Phi) C_max,
/// C = C1 - C2 = -sin(2 Phi) C_max.
pub fn closed_form_contrast(phi_total: f64, c_max: f64) -> (f64, f64, f64) {
    let q = std::f64::consts::FRAC_PI_4;
    let c1 = (q - phi_total).sin().powi(2) * c_max;
    let c2 = (q + phi_total).sin().powi(2) * c_max;
    let c = -(2.0 * phi_total).sin() * c_max;
    (c1, c2, c)
}

/// Piecewise-constant effective-field timeline B(t).
#[derive(Debug, Clone, PartialEq)]
pub struct FieldTimeline {
    /// (end time, field value) segments, contiguous from t = 0.
    segments: Vec<(f64, f64)>,
}

impl FieldTimeline {
    /// A field that is constant forever.
    pub fn constant(b: f64) -> Self {
        FieldTimeline { segments: vec![(f64::INFINITY, b)] }
    }

    /// Contiguous segments given as (duration, field) pairs starting at 0.
    pub fn from_segments(pieces: &[(f64, f64)]) -> Self {
        let mut t = 0.0;
        let mut segments = Vec::with_capacity(pieces.len());
        for &(duration, b) in pieces {
            t += duration;
            segments.push((t, b));
        }
        FieldTimeline { segments }
    }

    pub fn end_time(&self) -> f64 {
        self.segments.last().map_or(0.0, |s| s.0)
    }

    fn value_at(&self, t: f64) -> Option<f64> {
        self.segments.iter().find(|(end, _)| t <= *end).map(|(_, b)| *b)
    }
}

/// Target-window centers and lengths for a slot pattern.
fn target_windows(seq: &SequenceSpec) -> Vec<(f64, f64)> {
    let total_slots = 8 * seq.n_blocks as usize;
    let mut windows = Vec::new();
    match seq.slot {
        MeasurementSlot::Measurement1 => {
            // even interior slots 2, 4, ..., 8N-2
            for k in (2..total_slots).step_by(2) {
                windows.push((k as f64 * seq.tau, seq.tau_prime));
            }
        }
        MeasurementSlot::Measurement2 => {
            // odd slots 1, 3, ..., 8N-3
            for k in (1..total_slots - 1).step_by(2) {
                windows.push((k as f64 * seq.tau, seq.tau_prime));
            }
        }
        MeasurementSlot::Calibration => {
            // half-length pulses in slot 0 and every interior slot; the
            // alternating-sign phases cancel pairwise
            windows.push((0.25 * seq.tau, 0.5 * seq.tau_prime));
            for k in 1..total_slots {
                windows.push((k as f64 * seq.tau, 0.5 * seq.tau_prime));
            }
        }
    }
    windows
}

/// Diagonal free evolution: amplitudes pick up exp(-+ i phase).
fn dephase(state: QubitState, phase: f64) -> QubitState {
    let rot = Complex64::from_polar(1.0, -phase);
    QubitState { a: state.a * rot, b: state.b * rot.conj() }
}

/// Brute-force propagation of the full sequence under the field timeline.
///
/// Starts from |0>: pi/2 about x, 8N instantaneous pi pulses with the XY8
/// axis pattern (x y x y y x y x), the slot-dependent target windows
/// integrated in steps no longer than tau'/100, the microwave detuning
/// accumulated through all free evolution, and the final pi/2 about -y
/// (measurements) or x (calibration).
pub fn brute_force_sequence(seq: &SequenceSpec, field: &FieldTimeline) -> Result<QubitState> {
    seq.validate()?;
    let duration = seq.duration();
    if field.end_time() < duration {
        return Err(Error::TimelineGap { needed: duration, covered: field.end_time() });
    }

    // collect (time, axis) pi-pulse events
    const XY8: [RotationAxis; 8] = [
        RotationAxis::X,
        RotationAxis::Y,
        RotationAxis::X,
        RotationAxis::Y,
        RotationAxis::Y,
        RotationAxis::X,
        RotationAxis::Y,
        RotationAxis::X,
    ];
    let n_pulses = 8 * seq.n_blocks as usize;
    let pi_times: Vec<(f64, RotationAxis)> = (0..n_pulses)
        .map(|k| ((k as f64 + 0.5) * seq.tau, XY8[k % 8]))
        .collect();

    let windows = target_windows(seq);
    let max_step = seq.tau_prime / 100.0;

    let mut state = QubitState::ground().apply(&rotation_gate(RotationAxis::X, std::f64::consts::FRAC_PI_2));
    let mut window_iter = windows.iter().peekable();
    let mut t = 0.0;

    let mut evolve_to = |state: &mut QubitState, t0: f64, t1: f64| -> Result<()> {
        // detuning phase over the whole interval
        let mut phase = 0.5 * seq.mw_detuning * (t1 - t0);
        // target windows inside (t0, t1), integrated in fine steps
        while let Some((center, length)) = window_iter.peek().copied() {
            let start = center - 0.5 * length;
            let end = center + 0.5 * length;
            if start >= t1 {
                break;
            }
            debug_assert!(start >= t0 - 1e-18 && end <= t1 + 1e-18, "window crosses a pulse");
            let steps = (length / max_step).ceil() as usize;
            let dt = length / steps as f64;
            for i in 0..steps {
                let tm = start + (i as f64 + 0.5) * dt;
                let b = field.value_at(tm).ok_or(Error::TimelineGap {
                    needed: tm,
                    covered: field.end_time(),
                })?;
                phase += 0.5 * seq.gamma * b * dt;
            }
            window_iter.next();
        }
        *state = dephase(*state, phase);
        Ok(())
    };

    for (time, axis) in pi_times {
        evolve_to(&mut state, t, time)?;
        state = state.apply(&rotation_gate(axis, std::f64::consts::PI));
        t = time;
    }
    evolve_to(&mut state, t, duration)?;

    let last_axis = match seq.slot {
        MeasurementSlot::Calibration => RotationAxis::X,
        _ => RotationAxis::MinusY,
    };
    Ok(state.apply(&rotation_gate(last_axis, std::f64::consts::FRAC_PI_2)))
}

/// Calibration of the full contrast swing: C_ave = (C1 + C2)/2,
/// C_max = 2 (C_plus1 - C_ave).
pub fn cmax_calibration(c1: f64, c2: f64, c_plus1: f64) -> Result<f64> {
    let c_ave = 0.5 * (c1 + c2);
    let c_max = 2.0 * (c_plus1 - c_ave);
    if c_max <= 0.0 {
        return Err(Error::CalibrationInconsistent { c_max });
    }
    Ok(c_max)
}

/// Effective-field extraction, exact and small-angle forms.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExtractedField {
    /// B = -asin(C/C_max) / ((4N - 1) gamma tau') (T).
    pub b: f64,
    /// Small-angle approximation -C / ((4N - 1) gamma tau' C_max) (T).
    pub b_linear: f64,
}

pub fn extract_beff(c: f64, c_max: f64, n_blocks: u32, tau_prime: f64, gamma: f64) -> Result<ExtractedField> {
    let ratio = c / c_max;
    if ratio.abs() > 1.0 {
        return Err(Error::ContrastOutOfRange { ratio });
    }
    let denom = (4.0 * n_blocks as f64 - 1.0) * gamma * tau_prime;
    Ok(ExtractedField { b: -ratio.asin() / denom, b_linear: -ratio / denom })
}

/// Complete simulated measurement: both measurement runs plus calibration.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MeasurementOutcome {
    pub c1: f64,
    pub c2: f64,
    pub c: f64,
    pub c_ave: f64,
    pub c_plus1: f64,
    pub c_max: f64,
    /// Extracted field (T).
    pub b_est: f64,
}

/// Run the three-sequence protocol against a constant effective field,
/// scale populations by the physical contrast `c_max_true`, recalibrate
/// C_max from the simulated data, and extract the field.
pub fn simulate_measurement(b: f64, seq: &SequenceSpec, c_max_true: f64) -> Result<MeasurementOutcome> {
    if !(c_max_true > 0.0 && c_max_true <= 1.0) {
        return Err(Error::validation("c_max", "must be in (0, 1]"));
    }
    let timeline = FieldTimeline::constant(b);
    let run = |slot: MeasurementSlot| -> Result<f64> {
        let run_spec = SequenceSpec { slot, ..*seq };
        Ok(brute_force_sequence(&run_spec, &timeline)?.excited_population())
    };
    let c1 = c_max_true * run(MeasurementSlot::Measurement1)?;
    let c2 = c_max_true * run(MeasurementSlot::Measurement2)?;
    let c_plus1 = c_max_true * run(MeasurementSlot::Calibration)?;
    let c_ave = 0.5 * (c1 + c2);
    let c_max = cmax_calibration(c1, c2, c_plus1)?;
    let c = c1 - c2;
    let b_est = extract_beff(c, c_max, seq.n_blocks, seq.tau_prime, seq.gamma)?.b;
    Ok(MeasurementOutcome { c1, c2, c, c_ave, c_plus1, c_max, b_est })
}
