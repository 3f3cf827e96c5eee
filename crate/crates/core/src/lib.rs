//! Radial-expansion calculus of harmonic Riemannian spaces.
//!
//! The crate has four layers:
//!
//! * [`jets`] — an exact symbolic engine over the rationals for the radial
//!   jet expansion of the shape operator of geodesic spheres (Ledger
//!   recursion, noncommutative series arithmetic, trace reduction under the
//!   harmonic-space identities, and the bilinear curvature contraction).
//! * [`curvio`] — numeric evaluation of pointwise curvature data: invariants,
//!   identity checks, and exact / Monte-Carlo sphere averages.
//! * [`models`] — concrete harmonic spaces: space forms and Damek–Ricci
//!   spaces built from Heisenberg-type metric Lie algebras.
//! * [`spectra`] — binds the symbolic series to a concrete space and
//!   evaluates the heat-invariant distinguishers for geodesic spheres and
//!   balls.
//!
//! The core is `no_std` (with `alloc`); all IO lives in the companion CLI
//! crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod curvio;
pub mod jets;
pub mod models;
pub mod rational;
pub mod spectra;

pub use rational::Rat;
