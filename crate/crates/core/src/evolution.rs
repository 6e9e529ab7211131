//! Closed-form propagators `e^{−iHt/ħ}` for both Hamiltonian families.
//!
//! Both use `H = h₀·I + ½ω·(σ⃗·m⃗)` with `m⃗·m⃗ = 1` (complex dot product), so
//! `e^{−iHt/ħ} = e^{−ih₀t/ħ}·[cos(ωt/2ħ)·I − i·sin(ωt/2ħ)·(σ⃗·m⃗)]`.

use serde::{Deserialize, Serialize};

use crate::algebra::{c, cis, pauli_compose, CMat2, CVec2, PauliDecomp, ZERO};
use crate::error::{PtError, Result};
use crate::hamiltonian::{derive_hermitian, derive_pt, HermitianParams, PTParams};
use crate::inner_product::{cpt_product, dirac_product};
use crate::symmetry_ops::operator_set;

/// Below this gap the Hermitian propagator is a pure scalar phase.
pub const DEGENERATE_GAP: f64 = 1e-14;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EvolutionConfig {
    pub hbar: f64,
    pub tol: f64,
}

impl Default for EvolutionConfig {
    fn default() -> Self {
        Self { hbar: 1.0, tol: 1e-12 }
    }
}

impl EvolutionConfig {
    pub fn new(hbar: f64, tol: f64) -> Result<Self> {
        if !(hbar > 0.0 && hbar.is_finite()) {
            return Err(PtError::Domain(format!("hbar must be > 0, got {hbar}")));
        }
        if !(tol > 0.0 && tol < 1e-6) {
            return Err(PtError::Domain(format!("tol must lie in (0, 1e-6), got {tol}")));
        }
        Ok(Self { hbar, tol })
    }
}

fn rotation(centre: f64, half_gap_angle: f64, t_over_hbar: f64, axis: &CMat2) -> CMat2 {
    let (sin, cos) = half_gap_angle.sin_cos();
    let phase = cis(-centre * t_over_hbar);
    (CMat2::identity().scale_re(cos) - axis.scale(c(0.0, sin))).scale(phase)
}

/// `σ⃗·μ⃗` with `μ⃗ = (2/ω)(s, 0, i r sin ψ)`.
pub fn pt_axis(p: &PTParams) -> Result<CMat2> {
    let d = derive_pt(p)?;
    d.require_unbroken()?;
    let k = 2.0 / d.omega;
    Ok(pauli_compose(&PauliDecomp::new(
        ZERO,
        c(k * p.s, 0.0),
        ZERO,
        c(0.0, k * p.r * p.psi.sin()),
    )))
}

pub fn propagator_pt(p: &PTParams, t: f64, cfg: &EvolutionConfig) -> Result<CMat2> {
    let d = derive_pt(p)?;
    d.require_unbroken()?;
    let axis = pt_axis(p)?;
    let centre = p.r * p.psi.cos();
    Ok(rotation(centre, d.omega * t / (2.0 * cfg.hbar), t / cfg.hbar, &axis))
}

/// `e^{−itr cos ψ/ħ}/cos α · (cos(ωt/2ħ − α), −i sin(ωt/2ħ))`, the evolved ν₁.
pub fn evolve_nu1_closed(p: &PTParams, t: f64, cfg: &EvolutionConfig) -> Result<CVec2> {
    let d = derive_pt(p)?;
    d.require_unbroken()?;
    let x = d.omega * t / (2.0 * cfg.hbar);
    let pref = cis(-t * p.r * p.psi.cos() / cfg.hbar) / d.alpha.cos();
    Ok(CVec2::new(
        pref * (x - d.alpha).cos(),
        pref * c(0.0, -x.sin()),
    ))
}

/// `σ⃗·n⃗` with `n⃗ = (2/ω′)(r cos ψ, −r sin ψ, (s−u)/2)`; `None` when degenerate.
pub fn hermitian_axis(p: &HermitianParams) -> Option<CMat2> {
    let w = derive_hermitian(p).omega_prime;
    if w < DEGENERATE_GAP {
        return None;
    }
    let k = 2.0 / w;
    Some(pauli_compose(&PauliDecomp::new(
        ZERO,
        c(k * p.r * p.psi.cos(), 0.0),
        c(-k * p.r * p.psi.sin(), 0.0),
        c(k * 0.5 * (p.s - p.u), 0.0),
    )))
}

/// Unitary propagator of the Hermitian family. A degenerate spectrum yields
/// the scalar phase `e^{−i(s+u)t/2ħ}·I`.
pub fn propagator_hermitian(p: &HermitianParams, t: f64, cfg: &EvolutionConfig) -> CMat2 {
    let centre = 0.5 * (p.s + p.u);
    match hermitian_axis(p) {
        Some(axis) => {
            let w = derive_hermitian(p).omega_prime;
            rotation(centre, w * t / (2.0 * cfg.hbar), t / cfg.hbar, &axis)
        }
        None => CMat2::identity().scale(cis(-centre * t / cfg.hbar)),
    }
}

/// Sampled trajectory with CPT and Dirac self-pairings at each time.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EvolutionTrace {
    pub times: Vec<f64>,
    pub states: Vec<CVec2>,
    pub cpt_norms: Vec<f64>,
    pub dirac_norms: Vec<f64>,
}

impl EvolutionTrace {
    pub fn len(&self) -> usize {
        self.times.len()
    }

    pub fn is_empty(&self) -> bool {
        self.times.is_empty()
    }

    /// Largest `|cpt_norm(t) − cpt_norm(0)|`.
    pub fn max_cpt_drift(&self) -> f64 {
        max_drift(&self.cpt_norms)
    }

    /// Largest `|dirac_norm(t) − dirac_norm(0)|`.
    pub fn max_dirac_drift(&self) -> f64 {
        max_drift(&self.dirac_norms)
    }
}

fn max_drift(xs: &[f64]) -> f64 {
    let Some(&first) = xs.first() else { return 0.0 };
    xs.iter().map(|x| (x - first).abs()).fold(0.0, f64::max)
}

/// Evolves `state0` under the PT Hamiltonian on `steps` uniform samples of
/// `[0, t_max]`. `t_max = 0` yields the single initial sample.
pub fn trace_evolution(
    p: &PTParams,
    state0: &CVec2,
    t_max: f64,
    steps: usize,
    cfg: &EvolutionConfig,
) -> Result<EvolutionTrace> {
    if !(t_max >= 0.0 && t_max.is_finite()) {
        return Err(PtError::Domain(format!("t_max must be finite and >= 0, got {t_max}")));
    }
    let ops = operator_set(p)?;
    let n = if t_max == 0.0 {
        1
    } else if steps < 2 {
        return Err(PtError::Domain(format!("steps must be >= 2, got {steps}")));
    } else {
        steps
    };

    let mut trace = EvolutionTrace {
        times: Vec::with_capacity(n),
        states: Vec::with_capacity(n),
        cpt_norms: Vec::with_capacity(n),
        dirac_norms: Vec::with_capacity(n),
    };
    for k in 0..n {
        let t = if n == 1 { 0.0 } else { t_max * k as f64 / (n - 1) as f64 };
        let state = propagator_pt(p, t, cfg)? * *state0;
        trace.times.push(t);
        trace.cpt_norms.push(cpt_product(&state, &state, &ops).re);
        trace.dirac_norms.push(dirac_product(&state, &state).re);
        trace.states.push(state);
    }
    Ok(trace)
}
