//! Simulation of two interacting ultracold atoms in one cell of a tilted
//! double-well optical lattice.
//!
//! The crate models a pair of bosonic atoms confined to a single period of a
//! double-well potential whose tilt (the energy difference between the two
//! well minima) is controlled by an optical phase. It provides:
//!
//! - the lattice potential and its one-dimensional double-well cut,
//! - single-particle eigenstates, state labelling, and tunnel splittings,
//! - the two-particle spectrum with a regularized contact interaction,
//!   adiabatic level tracking, and interaction-energy extraction,
//! - split-operator spectral time evolution under a ramp-hold-ramp tilt
//!   schedule,
//! - the tunneling phase gate: gate matrix, controlled phase, average gate
//!   fidelity, and leakage,
//! - fidelity landscapes over schedule parameters.
//!
//! Everything below the CLI works in dimensionless units: lengths in 1/k,
//! energies in recoil energies E_R, and times in hbar/E_R. Conversions to
//! laboratory units live in [`units`].

pub mod config;
pub mod constants;
pub mod error;
pub mod gate;
pub mod grid;
pub mod interaction;
pub mod optimize;
pub mod output;
pub mod potential;
pub mod propagator;
pub mod single_particle;
pub mod sweep;
pub mod two_particle;
pub mod units;

pub use error::{Error, Result};
