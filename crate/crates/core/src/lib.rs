//! Exact computations with affine Lie algebras, parabolic sets of roots, weight modules
//! on degree windows, and twisted localization.

pub mod exact;
pub mod finlie;
pub mod affine;
pub mod rootpar;
pub mod modrep;
pub mod locfun;
