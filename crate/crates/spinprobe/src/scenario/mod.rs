//! Configuration-driven scenario runner: JSON documents in, CSV out.

pub mod config;
pub mod fit;
pub mod sweep;
pub mod table;

pub use config::{
    load_scenario, save_scenario, AxisConfig, AxisName, BeamConfig, FiberConfig, GridConfig,
    NvConfig, Scenario, SequenceConfig, SlabConfig, SourceConfig, SppConfig, SweepConfig,
    TmMixConfig,
};
pub use fit::{line_fit, sine_fit, LineFit, SineFit};
pub use sweep::{fit_qwp_sweep, run_power_sweep, run_qwp_sweep, run_single, run_spatial_map};
pub use table::{emit_csv, Table};
