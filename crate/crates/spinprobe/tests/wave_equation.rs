//! Field models checked against the vector Helmholtz equation
//! (laplacian + n^2 k0^2) E = 0 by second central differences. Thresholds
//! sit well above finite-difference truncation and special-function noise
//! but far below anything an algebra slip would produce.

use spinprobe::em::*;
use spinprobe::vec3::Vec3;
use spinprobe::{Complex64, ComplexVec3};

fn helmholtz_residual(
    f: &dyn Fn(Vec3) -> ComplexVec3,
    r: Vec3,
    h: f64,
    n_sq_k0_sq: f64,
) -> f64 {
    let center = f(r);
    let mut worst = 0.0f64;
    for pick in 0..3 {
        let get = |e: ComplexVec3| match pick {
            0 => e.x,
            1 => e.y,
            _ => e.z,
        };
        let mut lap = Complex64::new(0.0, 0.0);
        for axis in [Vec3::X, Vec3::Y, Vec3::Z] {
            let plus = get(f(r + axis * h));
            let minus = get(f(r - axis * h));
            lap += (plus + minus - get(center) * Complex64::new(2.0, 0.0))
                / Complex64::new(h * h, 0.0);
        }
        let res = (lap + get(center) * Complex64::new(n_sq_k0_sq, 0.0)).norm();
        worst = worst.max(res / (n_sq_k0_sq * center.norm()));
    }
    worst
}

#[test]
fn fiber_he11_satisfies_the_wave_equation() {
    let fiber = FiberParams {
        n_core: 1.46,
        n_clad: 1.44,
        core_radius: 2.5e-6,
        wavelength: 800e-9,
        amplitude: 1.0,
    };
    let mode = solve_fiber_he11_dispersion(&fiber).unwrap();
    let h = 1e-3 / (mode.n_eff * fiber.k0());
    let a = fiber.core_radius;
    let k0 = fiber.k0();

    let core = Vec3::new(0.32 * a, 0.24 * a, 0.2e-6);
    let res = helmholtz_residual(
        &|p| fiber_he11_field(&fiber, &mode, p),
        core,
        h,
        fiber.n_core.powi(2) * k0 * k0,
    );
    assert!(res < 1e-6, "core residual {res:e}");

    let clad = Vec3::new(1.04 * a, 0.78 * a, -0.1e-6);
    let res = helmholtz_residual(
        &|p| fiber_he11_field(&fiber, &mode, p),
        clad,
        h,
        fiber.n_clad.powi(2) * k0 * k0,
    );
    assert!(res < 1e-4, "cladding residual {res:e}");
}

#[test]
fn slab_modes_satisfy_the_wave_equation() {
    let slab = SlabParams {
        n_core: 2.4,
        n_clad: 1.0,
        half_thickness: 100e-9,
        wavelength: 800e-9,
        mode_order: 0,
        amplitude: 1.0,
    };
    let te = solve_slab_te_dispersion(&slab).unwrap();
    let tm = solve_slab_tm_dispersion(&slab).unwrap();
    let k0 = slab.k0();
    let h = 1e-3 / (slab.n_core * k0);
    for (z, n) in [(40e-9, slab.n_core), (220e-9, slab.n_clad)] {
        let r = Vec3::new(0.1e-6, 0.0, z);
        let res_te = helmholtz_residual(
            &|p| slab_te_mode_field(&slab, &te, p),
            r,
            h,
            n * n * k0 * k0,
        );
        let res_tm = helmholtz_residual(
            &|p| slab_tm_mode_field(&slab, &tm, p),
            r,
            h,
            n * n * k0 * k0,
        );
        assert!(res_te < 1e-5, "TE residual {res_te:e} at z = {z:e}");
        assert!(res_tm < 1e-5, "TM residual {res_tm:e} at z = {z:e}");
    }
}

#[test]
fn spp_field_satisfies_the_wave_equation() {
    let spp = SppParams {
        eps_metal: Complex64::new(-26.2, 1.85),
        eps_dielectric: 1.0,
        wavelength: 800e-9,
        direction: 1.0,
        amplitude: 1.0,
    };
    let h = 1e-3 / spp.k_spp().unwrap();
    let r = Vec3::new(0.1e-6, 0.0, 150e-9);
    let res = helmholtz_residual(
        &|p| spp_mode_field(&spp, p).unwrap(),
        r,
        h,
        spp.k0() * spp.k0(),
    );
    assert!(res < 1e-6, "residual {res:e}");
}
