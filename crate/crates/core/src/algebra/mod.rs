//! Complex 2×2 matrix algebra, four-vectors, the SL(2,C) → SO(3,1) spinor
//! map, standard rotations and boosts, and the E(2) little group.
//!
//! Conventions: metric `diag(−1, 1, 1, 1)`, `p·σ = p0·I + p⃗·σ⃗`, and
//! `Λ(A)` is read off column by column from `A σ_μ A† = Λ(A)^ν_μ σ_ν`.

mod e2;
mod group;
mod matrix;
mod vector;

pub use e2::{e2_matrix, e2_recognize, E2Element};
pub use group::{
    boost_su2, boost_su2_axis3, four_vector_of, pauli_form, rotation_su2, spinor_map, su2_a,
    SL2CElement, SU2Element,
};
pub use matrix::ComplexMatrix2;
pub(crate) use vector::{cross, norm3};
pub use vector::{FourVector, LorentzMatrix, UnitVector3, METRIC};
