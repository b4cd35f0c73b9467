//! Default tolerances.
//!
//! Constructor invariants are checked at [`CONSTRUCT`], identities obtained by
//! composing a few operations at [`DERIVED`], and E(2) membership of a factored
//! little-group element at [`E2_MEMBERSHIP`].

/// Invariants checked when a value is constructed.
pub const CONSTRUCT: f64 = 1e-12;

/// Identities that follow from composing a handful of operations.
pub const DERIVED: f64 = 1e-10;

/// Membership test for the E(2) factor of a little-group decomposition.
pub const E2_MEMBERSHIP: f64 = 1e-9;

/// `|det|` below which a matrix is refused as singular.
pub const SINGULAR_DET: f64 = 1e-8;

/// A chart is refused when `1 ± cos θ` falls below this margin.
pub const CHART_MARGIN: f64 = 1e-12;

/// Smallest accepted lightlike energy.
pub const MIN_ENERGY: f64 = 1e-12;

/// Smallest accepted mass.
pub const MIN_MASS: f64 = 1e-10;
