//! Bessel functions J0, J1, J2 and modified K0, K1, K2 for positive real
//! arguments, as needed by the step-index fiber dispersion relation and
//! field profiles.
//!
//! J and I use their power series directly (the fiber solver works at
//! arguments below ~20 where the series keeps ample precision). K uses the
//! standard log-type convergent series up to the crossover at x = 8.5 and
//! the asymptotic expansion with optimal truncation beyond; both sides are
//! good to ~2e-9 relative at the crossover and much better away from it.

const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// Power series for J_n(x), n in {0, 1, 2}.
fn jn_series(n: u32, x: f64) -> f64 {
    let half = 0.5 * x;
    // leading (x/2)^n / n!
    let mut term = 1.0;
    for m in 1..=n {
        term *= half / m as f64;
    }
    let mut sum = term;
    let hs = half * half;
    for k in 1..200 {
        term *= -hs / (k as f64 * (k + n) as f64);
        sum += term;
        if term.abs() < 1e-17 * sum.abs().max(1.0) {
            break;
        }
    }
    sum
}

pub fn j0(x: f64) -> f64 {
    jn_series(0, x)
}

pub fn j1(x: f64) -> f64 {
    jn_series(1, x)
}

pub fn j2(x: f64) -> f64 {
    jn_series(2, x)
}

/// Modified Bessel I_n(x) power series (all terms positive; no cancellation).
fn in_series(n: u32, x: f64) -> f64 {
    let half = 0.5 * x;
    let mut term = 1.0;
    for m in 1..=n {
        term *= half / m as f64;
    }
    let mut sum = term;
    let hs = half * half;
    for k in 1..300 {
        term *= hs / (k as f64 * (k + n) as f64);
        sum += term;
        if term < 1e-17 * sum {
            break;
        }
    }
    sum
}

/// K_n via the asymptotic expansion, truncated at the smallest term.
fn kn_asymptotic(n: u32, x: f64) -> f64 {
    let mu = 4.0 * (n as f64) * (n as f64);
    let mut term = 1.0;
    let mut sum = 1.0;
    let mut prev = f64::INFINITY;
    for k in 1..40 {
        let kf = k as f64;
        let factor = (mu - (2.0 * kf - 1.0).powi(2)) / (kf * 8.0 * x);
        term *= factor;
        if term.abs() >= prev {
            break; // divergence onset: stop at the optimal truncation
        }
        sum += term;
        prev = term.abs();
    }
    (std::f64::consts::PI / (2.0 * x)).sqrt() * (-x).exp() * sum
}

const K_CROSSOVER: f64 = 8.5;

pub fn k0(x: f64) -> f64 {
    if x > K_CROSSOVER {
        return kn_asymptotic(0, x);
    }
    // K0 = -(ln(x/2) + gamma) I0(x) + sum_{k>=1} H_k (x^2/4)^k / (k!)^2
    let hs = 0.25 * x * x;
    let mut term = 1.0;
    let mut harmonic = 0.0;
    let mut sum = 0.0;
    for k in 1..300 {
        let kf = k as f64;
        term *= hs / (kf * kf);
        harmonic += 1.0 / kf;
        let add = term * harmonic;
        sum += add;
        if add < 1e-18 * sum.max(1.0) {
            break;
        }
    }
    -((0.5 * x).ln() + EULER_GAMMA) * in_series(0, x) + sum
}

pub fn k1(x: f64) -> f64 {
    if x > K_CROSSOVER {
        return kn_asymptotic(1, x);
    }
    // K1 = 1/x + ln(x/2) I1(x)
    //      - (x/4) sum_k [psi(k+1) + psi(k+2)] (x^2/4)^k / (k! (k+1)!)
    let hs = 0.25 * x * x;
    let mut term = 1.0; // (x^2/4)^k / (k! (k+1)!) at k = 0
    let mut psi_a = -EULER_GAMMA; // psi(k+1)
    let mut psi_b = 1.0 - EULER_GAMMA; // psi(k+2)
    let mut sum = term * (psi_a + psi_b);
    for k in 1..300 {
        let kf = k as f64;
        term *= hs / (kf * (kf + 1.0));
        psi_a += 1.0 / kf;
        psi_b += 1.0 / (kf + 1.0);
        let add = term * (psi_a + psi_b);
        sum += add;
        if add.abs() < 1e-18 * sum.abs().max(1.0) {
            break;
        }
    }
    1.0 / x + (0.5 * x).ln() * in_series(1, x) - 0.25 * x * sum
}

/// K2 from the (stable, upward) recurrence K2 = K0 + 2 K1 / x.
pub fn k2(x: f64) -> f64 {
    k0(x) + 2.0 * k1(x) / x
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol * b.abs().max(1e-300)
    }

    #[test]
    fn handbook_values() {
        assert!(close(j0(1.0), 0.765_197_686_557_966_6, 1e-14));
        assert!(close(j1(1.0), 0.440_050_585_744_933_5, 1e-14));
        assert!(close(j0(2.0), 0.223_890_779_141_235_67, 1e-13));
        assert!(close(j1(2.0), 0.576_724_807_756_873_4, 1e-13));
        assert!(close(k0(1.0), 0.421_024_438_240_708_34, 1e-13));
        assert!(close(k1(1.0), 0.601_907_230_197_234_6, 1e-13));
        assert!(close(k0(2.0), 0.113_893_872_749_533_44, 1e-12));
        assert!(close(k1(2.0), 0.139_865_881_816_522_43, 1e-12));
    }

    #[test]
    fn j2_recurrence_consistency() {
        // J2 = 2 J1(x)/x - J0(x)
        for x in [0.5, 1.0, 2.3, 4.7, 8.1] {
            let rec = 2.0 * j1(x) / x - j0(x);
            assert!(close(j2(x), rec, 1e-11), "x = {x}");
        }
    }

    #[test]
    fn k_wronskian() {
        // I0(x) K1(x) + I1(x) K0(x) = 1/x; the log-series loses digits to
        // cancellation as x grows, hence the graded tolerances
        for (x, tol) in [(0.3, 1e-12), (1.0, 1e-12), (2.5, 1e-12), (5.0, 1e-11), (7.0, 1e-9)] {
            let w = in_series(0, x) * k1(x) + in_series(1, x) * k0(x);
            assert!(close(w, 1.0 / x, tol), "x = {x}: {w}");
        }
    }

    #[test]
    fn k_series_and_asymptotic_agree_at_crossover() {
        for x in [8.2f64, 8.4, 8.6, 8.8] {
            let series = k0(x.min(K_CROSSOVER));
            let asym = kn_asymptotic(0, x.min(K_CROSSOVER));
            assert!(close(series, asym, 5e-8), "K0({x}): {series} vs {asym}");
        }
    }

    #[test]
    fn k_decays_monotonically() {
        let mut last = f64::INFINITY;
        for i in 1..100 {
            let x = 0.2 * i as f64;
            let v = k1(x);
            assert!(v < last && v > 0.0);
            last = v;
        }
    }
}
