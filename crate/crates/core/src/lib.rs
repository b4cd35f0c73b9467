//! Kinematics of the massive and massless unitary representations of the
//! Poincaré group, built on 2×2 complex matrices.
//!
//! The crate is `no_std` (it needs `alloc` only for spin-`s` matrices). It is
//! organised bottom-up:
//!
//! * [`algebra`]: complex 2×2 matrices, four-vectors, the SL(2,C) → SO(3,1)
//!   spinor map, standard rotations and boosts, and the E(2) little group of
//!   the lightlike fiducial momentum `(1,0,0,1)`.
//! * [`massive`]: the timelike sector. Hermitian standard boost, Wigner
//!   rotation, spin-`s` D-matrices, state transport and parity.
//! * [`charts`]: the two-chart atlas on the forward light cone, both families
//!   of coset representatives, their overlap relations, and little-group
//!   (Wigner phase) extraction.
//! * [`polarization`]: the parity-doubled helicity space at fixed lightlike
//!   momentum, tangent fields, parity, transport with Wigner phases and the
//!   momentum-dependent Pauli operators.
//!
//! Every value is immutable after construction and every operation is a pure
//! function, so all types are `Send + Sync`.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod algebra;
pub mod charts;
mod error;
pub mod massive;
pub mod polarization;
pub mod tol;
mod trig;

pub use error::{Error, Result};
pub use num_complex::Complex64;

pub use algebra::{
    boost_su2, boost_su2_axis3, e2_matrix, e2_recognize, four_vector_of, pauli_form, rotation_su2,
    spinor_map, su2_a, ComplexMatrix2, E2Element, FourVector, LorentzMatrix, SL2CElement,
    SU2Element, UnitVector3,
};
pub use charts::{
    charts_of, coset_rep, coset_rep_alt, default_chart, factor_little_group, little_group,
    overlap_element, wigner_phase, Chart, ChartSet, ChartedMomentum, LightlikeMomentum,
    LittleGroupFactor,
};
pub use massive::{
    boost_massive, parity_massive, transport_massive, wigner_d, wigner_rotation_massive,
    IntrinsicParity, MassiveMomentum, Spin, SpinState,
};
pub use polarization::{
    chart_transition_phase, conjugation_identity, convert_chart, no_global_su2_check, parity_op,
    parity_rotation_action, sigma_ops, tangent_field, transport_massless, PolarizationState,
    SigmaOps, SuReport, TangentVector,
};
