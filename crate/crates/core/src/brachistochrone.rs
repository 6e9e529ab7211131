//! Transition times between ν₁ = (1,0) and ν₂ = (0,1) under both theories,
//! measured against the angular distance between the states.
//!
//! The PT optimum is `τ* = ħ(2α + π)/ω`; the optimal Hermitian time to reach
//! `(a, b)` from ν₁ is `(2ħ/ω′)·arcsin|b|`. At equal gap and equal angular
//! distance both reduce to `τ = 2ħβ/ω`.

use std::f64::consts::{FRAC_PI_2, PI};

use serde::{Deserialize, Serialize};

use crate::algebra::CVec2;
use crate::error::{PtError, Result};
use crate::evolution::{evolve_nu1_closed, EvolutionConfig};
use crate::hamiltonian::{derive_hermitian, derive_pt, HermitianParams, PTParams};
use crate::inner_product::dirac_product;

pub const DEFAULT_SWEEP_ALPHA_MIN: f64 = -FRAC_PI_2 + 0.01;
pub const DEFAULT_SWEEP_ALPHA_MAX: f64 = 0.0;
pub const DEFAULT_SWEEP_STEPS: usize = 151;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TransitionResult {
    pub tau: f64,
    pub beta: f64,
    pub omega: f64,
    /// `τ·ω/(2ħ)`.
    pub tau_normalized: f64,
}

/// One α-sample of the PT vs Hermitian comparison.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SweepRow {
    pub alpha: f64,
    pub tau_star: f64,
    pub beta_pt: f64,
    pub omega: f64,
    pub b_matched: f64,
    pub t_hermitian: f64,
    pub beta_h: f64,
    pub tau_norm_pt: f64,
    pub tau_norm_h: f64,
}

impl SweepRow {
    pub const HEADERS: [&'static str; 9] = [
        "alpha",
        "tau_star",
        "beta_pt",
        "omega",
        "b_matched",
        "t_hermitian",
        "beta_h",
        "tau_norm_pt",
        "tau_norm_h",
    ];

    pub fn values(&self) -> [f64; 9] {
        [
            self.alpha,
            self.tau_star,
            self.beta_pt,
            self.omega,
            self.b_matched,
            self.t_hermitian,
            self.beta_h,
            self.tau_norm_pt,
            self.tau_norm_h,
        ]
    }

    /// Largest violation among `τ_pt = β_pt`, `τ_h = β_h` and `β_pt = β_h`
    /// (normalized times).
    pub fn equivalence_residual(&self) -> f64 {
        (self.tau_norm_pt - self.beta_pt)
            .abs()
            .max((self.tau_norm_h - self.beta_h).abs())
            .max((self.beta_pt - self.beta_h).abs())
    }
}

/// `τₙ = 2ħ(α + π/2 + nπ)/ω` for `n = 0..=n_max`.
pub fn pt_transition_times(p: &PTParams, n_max: usize, cfg: &EvolutionConfig) -> Result<Vec<f64>> {
    let d = derive_pt(p)?;
    d.require_unbroken()?;
    Ok((0..=n_max)
        .map(|n| 2.0 * cfg.hbar * (d.alpha + FRAC_PI_2 + n as f64 * PI) / d.omega)
        .collect())
}

/// Optimal PT transition ν₁ → ν₂ and the CPT angular distance `arccos|sin α|`.
pub fn pt_tau_star(p: &PTParams, cfg: &EvolutionConfig) -> Result<TransitionResult> {
    let d = derive_pt(p)?;
    d.require_unbroken()?;
    let tau = cfg.hbar * (2.0 * d.alpha + PI) / d.omega;
    Ok(TransitionResult {
        tau,
        beta: d.alpha.sin().abs().acos(),
        omega: d.omega,
        tau_normalized: tau * d.omega / (2.0 * cfg.hbar),
    })
}

/// `|⟨ν₂|ψ(t)⟩_D| / ‖ψ(t)‖` for ψ(0) = ν₁; equals 1 on arrival at ν₂.
pub fn arrival_overlap(p: &PTParams, t: f64, cfg: &EvolutionConfig) -> Result<f64> {
    let v = evolve_nu1_closed(p, t, cfg)?;
    let norm = dirac_product(&v, &v).re.sqrt();
    Ok(dirac_product(&CVec2::nu2(), &v).norm() / norm)
}

/// Optimal Hermitian transition from ν₁ to a state with `|b| = b_target`.
pub fn hermitian_transition_time(
    omega_prime: f64,
    b_target: f64,
    cfg: &EvolutionConfig,
) -> Result<TransitionResult> {
    if !(omega_prime > 0.0) {
        return Err(PtError::Domain(format!("omega' must be > 0, got {omega_prime}")));
    }
    if !(0.0..=1.0).contains(&b_target) {
        return Err(PtError::Domain(format!("b must lie in [0, 1], got {b_target}")));
    }
    let beta = b_target.asin();
    let tau = 2.0 * cfg.hbar * beta / omega_prime;
    Ok(TransitionResult {
        tau,
        beta,
        omega: omega_prime,
        tau_normalized: tau * omega_prime / (2.0 * cfg.hbar),
    })
}

/// PT transition at `p` next to the Hermitian one at the same gap and the
/// same angular distance (`b = cos α`).
pub fn compare_at(p: &PTParams, cfg: &EvolutionConfig) -> Result<SweepRow> {
    let d = derive_pt(p)?;
    let pt = pt_tau_star(p, cfg)?;
    let herm = HermitianParams::optimal_for_gap(d.omega)?;
    let omega_prime = derive_hermitian(&herm).omega_prime;
    let b_matched = d.alpha.cos();
    let h = hermitian_transition_time(omega_prime, b_matched, cfg)?;
    Ok(SweepRow {
        alpha: d.alpha,
        tau_star: pt.tau,
        beta_pt: pt.beta,
        omega: d.omega,
        b_matched,
        t_hermitian: h.tau,
        beta_h: h.beta,
        tau_norm_pt: pt.tau_normalized,
        tau_norm_h: h.tau_normalized,
    })
}

/// Uniform α-grid comparison on `[alpha_min, alpha_max] ⊂ (−π/2, 0]`.
pub fn equivalence_sweep(
    alpha_min: f64,
    alpha_max: f64,
    steps: usize,
    s: f64,
    cfg: &EvolutionConfig,
) -> Result<Vec<SweepRow>> {
    if !(alpha_min > -FRAC_PI_2 && alpha_min <= alpha_max && alpha_max <= 0.0) {
        return Err(PtError::Domain(format!(
            "need -pi/2 < alpha_min <= alpha_max <= 0, got [{alpha_min}, {alpha_max}]"
        )));
    }
    if steps < 2 {
        return Err(PtError::Domain(format!("steps must be >= 2, got {steps}")));
    }
    let span = alpha_max - alpha_min;
    (0..steps)
        .map(|k| {
            let alpha = alpha_min + span * k as f64 / (steps - 1) as f64;
            compare_at(&PTParams::with_alpha(alpha, s)?, cfg)
        })
        .collect()
}
