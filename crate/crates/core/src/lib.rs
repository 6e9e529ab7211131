//! PT-symmetric quantum mechanics for two-level systems.
//!
//! Builds the non-Hermitian family `H = [[r e^{iψ}, s], [s, r e^{−iψ}]]`,
//! synthesizes its parity, time-reversal and `C` operators, evaluates the
//! Dirac, PT and CPT pairings, propagates states in closed form, and compares
//! transition times against an ordinary Hermitian Hamiltonian of equal gap.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod algebra;
pub mod brachistochrone;
pub mod error;
pub mod evolution;
pub mod hamiltonian;
pub mod inner_product;
pub mod selftest;
pub mod symmetry_ops;

pub use algebra::{
    mat_exp_oracle, pauli_compose, pauli_decompose, CMat2, CScalar, CVec2, PauliDecomp,
};
pub use brachistochrone::{
    equivalence_sweep, hermitian_transition_time, pt_tau_star, pt_transition_times, SweepRow,
    TransitionResult,
};
pub use error::{PtError, Result};
pub use evolution::{
    evolve_nu1_closed, propagator_hermitian, propagator_pt, trace_evolution, EvolutionConfig,
    EvolutionTrace,
};
pub use hamiltonian::{
    build_hermitian_matrix, build_pt_matrix, classify_phase, derive_hermitian, derive_pt,
    pt_eigenvectors_normalized, pt_eigenvectors_raw, HermitianDerived, HermitianParams,
    PTDerived, PTParams, PhaseClass,
};
pub use inner_product::{
    angular_distance, cpt_normalize, cpt_product, dirac_product, pt_product, PairingKind,
};
pub use symmetry_ops::{
    apply_t, c_from_eigenvectors, c_matrix_closed, completeness_residual, operator_set,
    p_from_eigenvectors, parity_matrix, validate_operators, OperatorSet, ValidationReport,
};
