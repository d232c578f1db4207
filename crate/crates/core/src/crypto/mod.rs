//! Crypto-nonlocal variant of Bell's hidden-variable model for the singlet.
//!
//! The hidden variable `λ` is uniform on the unit sphere and charted as
//! `λ(μ, τ) = (sin μ cos τ, sin μ sin τ, cos μ)` with `μ ∈ [0, 2π)`,
//! `τ ∈ [0, π)`; the surface element is `|sin μ| dμ dτ`. For settings `a, b`
//! at angle `ω` the model replaces them by coplanar `â, b̂` symmetric about
//! the same bisector at angle `ω̂ = π sin²(ω/2)`, and assigns
//! `A = sgn(â·λ)`, `B = -sgn(b̂·λ)`.
//!
//! Fixing `τ` restricts `λ` to a great circle. Averages over `μ` on that
//! circle (weight `|sin μ|/4`) are computed exactly in [`arc`]: each sign
//! changes at two antipodal points, so the integrand is piecewise constant
//! and `∫|sin μ| dμ` is integrated in closed form per arc.

pub mod arc;
pub mod chart;
pub mod chsh;
pub mod closed_form;
pub mod model;
pub mod scan;

pub use arc::{
    conditional_correlation, crypto_local_average, great_circle_average, local_averages,
};
pub use chart::{polar_map, polar_unmap, PolarHidden};
pub use chsh::{
    conditional_chsh, four_directions, tau_average_chsh, tau_average_correlation, ConditionalChsh,
    FourDirectionFamily, TauAverage,
};
pub use closed_form::{
    chi_functions, closed_form_chsh, gamma_functions, tilde_alpha, ChiFunctions,
    ClosedFormComparison, ClosedFormVariant,
};
pub use model::{model_correlation_monte_carlo, model_outcomes, rotated_settings, RotatedPair};
pub use scan::{region_scan, scan_grid, RegionScan, ScanCell};
