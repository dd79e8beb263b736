//! Gelfand–Cetlin systems on `T*U(n)` and their Bohr–Sommerfeld points.
//!
//! The crate is organized bottom-up:
//!
//! - [`linalg`]: Hermitian and unitary matrices, corners, Jacobi eigenvalues,
//!   the coadjoint action and seeded Haar sampling.
//! - [`gc`]: the Gelfand–Cetlin map, strong regularity, the moment map
//!   `(g, ξ) ↦ (gξg†, −ξ)` and the double Gelfand–Cetlin map.
//! - [`polytope`]: Gelfand–Cetlin polytopes, exact membership, lattice-point
//!   enumeration and counting, Weyl dimensions.
//! - [`bohr_sommerfeld`]: integer points of the double system, strict and
//!   closure variants.
//! - [`peter_weyl`]: the truncated identity
//!   `#BS(|α| ≤ N) = Σ_{|α| ≤ N} dim V_α · dim V_α*`.

pub mod bohr_sommerfeld;
pub mod error;
pub mod gc;
pub mod linalg;
pub mod peter_weyl;
pub mod polytope;

pub use bohr_sommerfeld::{
    count_bs_points, enumerate_bs_points, enumerate_bs_points_capped, is_bs_point,
    round_to_lattice, to_triple, BSPoint, BSVariant,
};
pub use error::{Error, Result};
pub use gc::{
    double_gc, gc_map, in_b, is_sreg_point, is_strongly_regular, moment_map, CotangentPoint,
    DoubleGCVector, GCVector,
};
pub use linalg::{
    coadjoint, corner, eigenvalues_desc, haar_unitary, sweep, HermitianMatrix, Spectrum,
    UnitaryMatrix,
};
pub use peter_weyl::{pw_check, pw_check_capped, pw_table, PWReport, PWRow, TableFormat};
pub use polytope::{
    contains, contains_interior, count_integral_points, dual_weight, enumerate_integral_points,
    weyl_dim, DominantWeight, GCPattern, RationalPoint,
};
