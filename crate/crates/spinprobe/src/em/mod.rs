//! Analytic electromagnetic field models: the focused target beam and
//! three evanescent-field structures.

pub mod beam;
pub mod bessel;
pub mod fiber;
pub mod jones;
pub mod slab;
pub mod spp;

pub use beam::{paraxial_gaussian_field, BeamParams};
pub use fiber::{
    count_he1_roots, fiber_he11_field, he11_characteristic, solve_fiber_he11_dispersion,
    FiberMode, FiberParams,
};
pub use jones::{qwp_jones, qwp_jones_with_ellipticity};
pub use slab::{
    slab_te_mode_field, slab_tm_mode_field, slab_two_mode_field, solve_slab_te_dispersion,
    solve_slab_tm_dispersion, SlabMode, SlabParams, SlabPolarization,
};
pub use spp::{spp_mode_field, SppParams};
