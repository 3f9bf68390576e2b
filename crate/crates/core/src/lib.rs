//! Analysis toolkit for three-dimensional generalized Hénon maps
//!
//! The family under study is
//!
//! ```text
//! x' = y,  y' = z,  z' = B·x + A·z + C·y + f(y, z)
//! ```
//!
//! with constant Jacobian `B` and a polynomial nonlinearity `f` that vanishes
//! to second order at the origin, so the origin is always a fixed point. The
//! crate classifies that fixed point from its characteristic cubic, rasterizes
//! saddle charts and Lyapunov diagrams over the `(A, C)` parameter plane,
//! detects homoclinic chaos, evaluates the pseudohyperbolicity spectrum
//! condition, and traces one-dimensional separatrices.
//!
//! Grid sweeps are data-parallel (rayon) when the default `parallel` feature
//! is enabled; disabling it falls back to the sequential driver with
//! identical, byte-reproducible output.

pub mod cubic;
pub mod lyapunov;
pub mod manifold;
pub mod map;
pub mod numfmt;
pub mod polyroots;
pub mod presets;
pub mod render;
pub mod spectrum;
pub mod sweep;

mod vec3;

pub use lyapunov::{
    classify_attractor, default_initial_state, lyapunov_spectrum, pseudohyperbolic_flag,
    AttractorClass, LyapunovConfig, LyapunovRun,
};
pub use map::{
    companion_params, diagonal_fixed_points, henon2d_normalize, shift_to_origin, Henon2d,
    HenonMap, MapError, PolyNonlinearity, RawHenonMap, RawPolynomial, State,
};
pub use presets::Preset;
pub use spectrum::{
    boundary_curves, classify_point, figure8_region_test, lorenz_region_test, saddle_chart,
    saddle_value, solve_characteristic, BoundaryCurve, CurveKind, FixedPointDescriptor,
    MultiplierSet, RegionLabel, SpectrumError,
};
pub use sweep::{export_csv, render_ppm, run_sweep, run_sweep_sequential, Diagram, Rect, SweepSpec};
