//! Exact-arithmetic workbench for special trivectors on a 10-dimensional
//! space, the finite geometry of their Debarre-Voisin varieties, the
//! period-domain lattice arithmetic of Hilbert squares of K3 surfaces, and
//! the Schubert-calculus invariants tying the two together.
//!
//! Everything runs over exact fields: arbitrary-precision rationals or prime
//! fields. There is no floating point anywhere in this crate.

pub mod field;
pub mod matrix;
pub mod subspace;
pub mod exterior;
pub mod symw3;
pub mod zoo;
pub mod dv;
pub mod periods;
pub mod schubert;
pub mod report;

pub use field::{Field, Fp, Rat};
pub use matrix::Matrix;
pub use subspace::Subspace;

