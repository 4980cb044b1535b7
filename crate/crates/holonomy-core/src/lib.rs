//! Numerical and exact machinery for holonomy groups of constant-coefficient
//! connections on trivial bundles over the flat torus.
//!
//! The crate is organized around five concerns:
//!
//! * [`groups`] — concrete elements of SO(3), SO(4), SU(2) and U(2), the
//!   angle/axis parametrizations used throughout, and the two double covers
//!   (SU(2) over SO(3), and the splitting of SO(4) through its action on
//!   self-dual and anti-self-dual 2-vectors).
//! * [`exact`] — arbitrary-precision rationals, polynomials, real quadratic
//!   extensions, cyclotomic polynomials, and rationality certificates for
//!   rotation angles.
//! * [`transport`] — constant-coefficient connections, their holonomy
//!   generators, parallel transport along axis-aligned loop words, and an
//!   independent ODE integrator used to cross-check transport.
//! * [`orbit`] — breadth-first enumeration of group balls and sphere orbits,
//!   covering radii against quasi-uniform probe meshes, confinement detection,
//!   and greedy word approximation of target elements.
//! * [`classify`] — generator configurations, finite-subgroup classification,
//!   density certificates, and exact minimal polynomials of word eigenvalues.
//!
//! Floating-point tolerances are configuration values; defaults live in
//! [`tol`] and every entry point that depends on one takes it as a parameter.

pub mod classify;
pub mod exact;
pub mod groups;
pub mod orbit;
pub mod transport;

/// Default tolerances. Each is overridable at the call sites that use it.
pub mod tol {
    /// Max-entry deviation of `m^T m` from the identity accepted for
    /// orthogonal/unitary group elements.
    pub const ORTH: f64 = 1e-12;

    /// Drift threshold above which a freshly composed product is re-projected
    /// onto the group.
    pub const DRIFT: f64 = ORTH / 10.0;

    /// Successive multiplications between unconditional re-projections in
    /// long products.
    pub const REPROJECT_EVERY: u32 = 64;

    /// Entrywise tolerance for deduplicating enumerated elements and points.
    pub const DEDUP: f64 = 1e-9;

    /// Tolerance on recovered angles and axis components.
    pub const ANGLE: f64 = 1e-9;

    /// Agreement required between the two legs of a double-cover round trip.
    pub const COVER: f64 = 1e-10;

    /// Numeric margin when matching a floating-point value against an exact
    /// rational candidate.
    pub const RECOGNITION: f64 = 1e-12;

    /// Largest denominator examined by the continued-fraction rationality
    /// test.
    pub const CF_MAX_DEN: u64 = 1_000_000;
}
