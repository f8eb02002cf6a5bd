//! Physical constants (SI) used at the unit-conversion boundary.
//!
//! Values from CODATA 2018; the 87Rb mass is the AME2012 evaluation. These
//! are combined only in `units`; the numerical core never sees SI values.

/// Reduced Planck constant, J s.
pub const HBAR: f64 = 1.054_571_817e-34;

/// Planck constant, J s (exact since the 2019 SI redefinition).
pub const PLANCK_H: f64 = 6.626_070_15e-34;

/// Unified atomic mass unit, kg.
pub const ATOMIC_MASS_UNIT: f64 = 1.660_539_066_60e-27;

/// 87Rb atomic mass in unified atomic mass units.
pub const RB87_MASS_U: f64 = 86.909_180_527;

/// 87Rb atomic mass, kg.
pub const RB87_MASS_KG: f64 = RB87_MASS_U * ATOMIC_MASS_UNIT;
