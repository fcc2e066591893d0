//! Linear least-squares fits used by the sweep runners: the sine law
//! B(theta) = A sin(2 theta + theta0) + B0 via its linear
//! reparameterization, and a straight-line regression with R^2.

use crate::error::{Error, Result};

/// Result of fitting B(theta) = A sin(2 theta + theta0) + B0.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SineFit {
    /// Amplitude A >= 0 (same unit as the ordinate).
    pub amplitude: f64,
    /// Constant offset B0.
    pub offset: f64,
    /// Phase theta0, normalized to [0, 2 pi).
    pub phase: f64,
    /// Root-mean-square residual.
    pub rms_residual: f64,
}

/// Solve the 3x3 normal equations by Gaussian elimination with partial
/// pivoting. Errors out on a (numerically) singular system.
fn solve3(mut a: [[f64; 3]; 3], mut b: [f64; 3]) -> Result<[f64; 3]> {
    for col in 0..3 {
        let pivot = (col..3)
            .max_by(|&i, &j| a[i][col].abs().total_cmp(&a[j][col].abs()))
            .unwrap();
        if a[pivot][col].abs() < 1e-12 * a.iter().flatten().fold(0.0f64, |m, v| m.max(v.abs())) {
            return Err(Error::RankDeficient);
        }
        a.swap(col, pivot);
        b.swap(col, pivot);
        for row in (col + 1)..3 {
            let f = a[row][col] / a[col][col];
            let pivot_row = a[col];
            for (k, &p) in pivot_row.iter().enumerate().skip(col) {
                a[row][k] -= f * p;
            }
            b[row] -= f * b[col];
        }
    }
    let mut x = [0.0; 3];
    for row in (0..3).rev() {
        let mut s = b[row];
        for k in (row + 1)..3 {
            s -= a[row][k] * x[k];
        }
        x[row] = s / a[row][row];
    }
    Ok(x)
}

/// Least-squares sine fit through the linear model
/// a sin(2 theta) + b cos(2 theta) + B0, then A = hypot(a, b) and
/// theta0 = atan2(b, a). Exact linear solve, no iteration.
pub fn sine_fit(points: &[(f64, f64)]) -> Result<SineFit> {
    if points.len() < 4 {
        return Err(Error::validation("sine_fit.points", "need at least 4 points"));
    }
    let mut distinct = points.iter().map(|p| p.0).collect::<Vec<_>>();
    distinct.sort_by(f64::total_cmp);
    distinct.dedup();
    if distinct.len() < 4 {
        return Err(Error::validation("sine_fit.points", "theta values must be distinct"));
    }

    // normal equations for columns [sin 2t, cos 2t, 1]
    let mut ata = [[0.0f64; 3]; 3];
    let mut aty = [0.0f64; 3];
    for &(theta, y) in points {
        let row = [(2.0 * theta).sin(), (2.0 * theta).cos(), 1.0];
        for i in 0..3 {
            for j in 0..3 {
                ata[i][j] += row[i] * row[j];
            }
            aty[i] += row[i] * y;
        }
    }
    let [a, b, offset] = solve3(ata, aty)?;

    let amplitude = a.hypot(b);
    let mut phase = b.atan2(a);
    if phase < 0.0 {
        phase += std::f64::consts::TAU;
    }
    if amplitude == 0.0 {
        phase = 0.0;
    }

    let mut ss = 0.0;
    for &(theta, y) in points {
        let model = a * (2.0 * theta).sin() + b * (2.0 * theta).cos() + offset;
        ss += (y - model) * (y - model);
    }
    Ok(SineFit {
        amplitude,
        offset,
        phase,
        rms_residual: (ss / points.len() as f64).sqrt(),
    })
}

/// Straight-line least squares y = slope x + intercept with R^2.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LineFit {
    pub slope: f64,
    pub intercept: f64,
    pub r_squared: f64,
}

pub fn line_fit(points: &[(f64, f64)]) -> Result<LineFit> {
    if points.len() < 2 {
        return Err(Error::validation("line_fit.points", "need at least 2 points"));
    }
    let n = points.len() as f64;
    let mean_x = points.iter().map(|p| p.0).sum::<f64>() / n;
    let mean_y = points.iter().map(|p| p.1).sum::<f64>() / n;
    let mut sxx = 0.0;
    let mut sxy = 0.0;
    for &(x, y) in points {
        sxx += (x - mean_x) * (x - mean_x);
        sxy += (x - mean_x) * (y - mean_y);
    }
    if sxx == 0.0 {
        return Err(Error::RankDeficient);
    }
    let slope = sxy / sxx;
    let intercept = mean_y - slope * mean_x;
    let mut ss_res = 0.0;
    let mut ss_tot = 0.0;
    for &(x, y) in points {
        ss_res += (y - slope * x - intercept).powi(2);
        ss_tot += (y - mean_y).powi(2);
    }
    let r_squared = if ss_tot == 0.0 { 1.0 } else { 1.0 - ss_res / ss_tot };
    Ok(LineFit { slope, intercept, r_squared })
}
