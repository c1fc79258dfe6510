//! Numerical toolkit for steady stratified water waves in a two-dimensional
//! channel: background flows (laminar and small-amplitude Stokes fields),
//! the linearized free-surface operators in physical, hodograph and
//! flattened coordinates, and the associated spectral problems (periodic,
//! side-condition, half-domain, Steklov and Bloch families).
//!
//! The crate is organized around the pipeline
//!
//! ```text
//! flow  ->  linearize  ->  assembly  ->  eigensolve  ->  spectra
//!                                \-> bloch / floquet
//! ```
//!
//! * [`flow`] builds fluid profiles, laminar solutions, bifurcation
//!   wavenumbers and first-order Stokes wave fields.
//! * [`linearize`] computes the Frechet-derivative coefficients and applies
//!   the linearized operators, with hodograph and flattening equivalence
//!   checks.
//! * [`assembly`] meshes the flattened rectangle and assembles quadratic
//!   forms for every boundary-condition family.
//! * [`eigensolve`] solves dense symmetric/Hermitian generalized
//!   eigenproblems.
//! * [`spectra`] orchestrates the eigenvalue problems, interlacing sweeps,
//!   negative-count comparisons and the uniqueness verdict.
//! * [`bloch`] implements the discrete Bloch transform, its inverse and the
//!   norm/commutation identities.
//! * [`floquet`] computes the generalized eigenfunctions of the zero
//!   quasimomentum eigenvalue and the chain-termination integral.

pub mod error;
pub mod exec;
pub mod grid;
pub mod interp;
pub mod ode;
pub mod rootfind;

pub mod assembly;
pub mod bloch;
pub mod eigensolve;
pub mod floquet;
pub mod flow;
pub mod linearize;
pub mod spectra;

pub use error::Error;

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
