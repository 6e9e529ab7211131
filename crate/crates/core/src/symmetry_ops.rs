//! Parity, time reversal and the `C` operator of the two-level theory.
//!
//! `T` acts as complex conjugation, so the antilinear `[C, PT] = 0` becomes the
//! matrix identity `C·P = P·conj(C)`.

use serde::{Deserialize, Serialize};

use crate::algebra::{c, sigma_x, CMat2, CVec2, I};
use crate::error::{PtError, Result};
use crate::hamiltonian::{
    build_pt_matrix, derive_pt, pt_eigenvectors_normalized, PTParams, MIN_COS_ALPHA,
};

/// Time reversal: entrywise complex conjugation.
pub fn apply_t(v: &CVec2) -> CVec2 {
    v.conj()
}

/// `P = [[0, 1], [1, 0]]`.
pub fn parity_matrix() -> CMat2 {
    sigma_x()
}

/// `PT|v⟩ = P·conj(v)`.
pub fn pt_image(v: &CVec2) -> CVec2 {
    parity_matrix() * apply_t(v)
}

/// `C = (1/cos α)·[[i sin α, 1], [1, −i sin α]]`.
pub fn c_matrix_closed(alpha: f64) -> Result<CMat2> {
    let cos_alpha = alpha.cos();
    if cos_alpha.abs() <= MIN_COS_ALPHA {
        return Err(PtError::ExceptionalPoint { cos_alpha });
    }
    let diag = I * alpha.sin();
    let one = c(1.0, 0.0);
    Ok(CMat2::new(diag, one, one, -diag).scale_re(1.0 / cos_alpha))
}

/// `C = Σₙ |εₙ⟩ (PT|εₙ⟩)ᵗ` over the CPT-normalized eigenvectors.
pub fn c_from_eigenvectors(e_plus: &CVec2, e_minus: &CVec2) -> CMat2 {
    e_minus.outer(&pt_image(e_minus)) + e_plus.outer(&pt_image(e_plus))
}

/// `P = |ε₊⟩ conj(ε₊)ᵗ − |ε₋⟩ conj(ε₋)ᵗ`.
pub fn p_from_eigenvectors(e_plus: &CVec2, e_minus: &CVec2) -> CMat2 {
    e_plus.outer(&e_plus.conj()) - e_minus.outer(&e_minus.conj())
}

/// Max-entry size of `Σₙ (−1)ⁿ |εₙ⟩ (PT|εₙ⟩)ᵗ − I`.
pub fn completeness_residual(e_plus: &CVec2, e_minus: &CVec2) -> f64 {
    let sum = e_plus.outer(&pt_image(e_plus)) - e_minus.outer(&pt_image(e_minus));
    sum.dist(&CMat2::identity())
}

/// Numerical evidence that the synthesized operators obey their algebra.
/// All residuals are max-entry norms.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub c_squared_residual: f64,
    pub ch_commutator_residual: f64,
    pub cpt_commutator_residual: f64,
    pub completeness_residual: f64,
    pub p_reconstruction_residual: f64,
}

impl ValidationReport {
    pub fn max_residual(&self) -> f64 {
        [
            self.c_squared_residual,
            self.ch_commutator_residual,
            self.cpt_commutator_residual,
            self.completeness_residual,
            self.p_reconstruction_residual,
        ]
        .into_iter()
        .fold(0.0, f64::max)
    }

    pub fn all_below(&self, tol: f64) -> bool {
        self.max_residual() < tol
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OperatorSet {
    pub p: CMat2,
    pub c: CMat2,
    pub alpha: f64,
    pub residuals: ValidationReport,
}

pub fn validate_operators(params: &PTParams) -> Result<ValidationReport> {
    Ok(operator_set(params)?.residuals)
}

/// Normalized `P` and `C` for the given Hamiltonian, with validation residuals.
pub fn operator_set(params: &PTParams) -> Result<OperatorSet> {
    let derived = derive_pt(params)?;
    derived.require_unbroken()?;
    let p = parity_matrix();
    let c_op = c_matrix_closed(derived.alpha)?;
    let h = build_pt_matrix(params);
    let (e_plus, e_minus) = pt_eigenvectors_normalized(&derived)?;

    let residuals = ValidationReport {
        c_squared_residual: (c_op * c_op).dist(&CMat2::identity()),
        ch_commutator_residual: c_op.commutator(&h).max_abs(),
        cpt_commutator_residual: (c_op * p).dist(&(p * c_op.conj())),
        completeness_residual: completeness_residual(&e_plus, &e_minus),
        p_reconstruction_residual: p_from_eigenvectors(&e_plus, &e_minus).dist(&p),
    };
    Ok(OperatorSet { p, c: c_op, alpha: derived.alpha, residuals })
}
