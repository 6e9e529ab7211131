//! Invariant suites over the reference parameter grid, run by `ptqm selftest`.
//!
//! Identity checks are held to `cfg.tol`; checks that go through the series
//! oracle or a sampled trajectory are held to `100·cfg.tol`.

use std::f64::consts::{FRAC_PI_3, FRAC_PI_6};

use serde::Serialize;

use crate::algebra::{c, mat_exp_oracle, CMat2, CVec2};
use crate::brachistochrone::{
    arrival_overlap, equivalence_sweep, pt_tau_star, DEFAULT_SWEEP_ALPHA_MAX,
    DEFAULT_SWEEP_ALPHA_MIN, DEFAULT_SWEEP_STEPS,
};
use crate::error::Result;
use crate::evolution::{propagator_hermitian, propagator_pt, trace_evolution, EvolutionConfig};
use crate::hamiltonian::{
    build_hermitian_matrix, build_pt_matrix, classify_phase, derive_pt,
    pt_eigenvectors_normalized, HermitianParams, PTParams, PhaseClass, PHASE_TOL,
};
use crate::inner_product::{cpt_normalize, cpt_product, pt_product};
use crate::symmetry_ops::{operator_set, OperatorSet};

/// Minimum Dirac-norm excursion expected along a PT trajectory with `|α| > 0.1`.
pub const DIRAC_EXCURSION: f64 = 1e-3;

/// `r ∈ {0, 0.3, 1, 1.7}`, `s ∈ {1, 2}`, `ψ ∈ {0, ±π/6, ±π/3}`, unbroken only.
pub fn unbroken_grid() -> Vec<PTParams> {
    let mut out = Vec::new();
    for r in [0.0, 0.3, 1.0, 1.7] {
        for s in [1.0, 2.0] {
            for psi in [0.0, FRAC_PI_6, -FRAC_PI_6, FRAC_PI_3, -FRAC_PI_3] {
                if let Ok(p) = PTParams::new(r, s, psi) {
                    if classify_phase(&p, PHASE_TOL) == PhaseClass::Unbroken {
                        out.push(p);
                    }
                }
            }
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteResult {
    pub name: &'static str,
    pub passed: bool,
    /// Worst observed residual (or, for lower-bound checks, the smallest margin).
    pub worst: f64,
    pub threshold: f64,
}

fn upper(name: &'static str, worst: f64, threshold: f64) -> SuiteResult {
    SuiteResult { name, passed: worst < threshold, worst, threshold }
}

fn with_ops<F>(mut f: F) -> Result<f64>
where
    F: FnMut(&PTParams, &OperatorSet) -> Result<f64>,
{
    let mut worst = 0.0_f64;
    for p in unbroken_grid() {
        let ops = operator_set(&p)?;
        worst = worst.max(f(&p, &ops)?);
    }
    Ok(worst)
}

fn one() -> crate::algebra::CScalar {
    c(1.0, 0.0)
}

pub fn run(cfg: &EvolutionConfig) -> Result<Vec<SuiteResult>> {
    let tight = cfg.tol;
    let loose = 100.0 * cfg.tol;
    let mut out = Vec::new();

    let worst = with_ops(|_, ops| {
        let r = ops.residuals;
        Ok(r.c_squared_residual
            .max(r.ch_commutator_residual)
            .max(r.cpt_commutator_residual))
    })?;
    out.push(upper("operator_identities", worst, tight));

    let worst = with_ops(|p, ops| {
        let (ep, em) = pt_eigenvectors_normalized(&derive_pt(p)?)?;
        Ok((pt_product(&ep, &ep, &ops.p) - one())
            .norm()
            .max((pt_product(&em, &em, &ops.p) + one()).norm())
            .max(pt_product(&ep, &em, &ops.p).norm()))
    })?;
    out.push(upper("indefinite_pt_norm", worst, tight));

    let worst = with_ops(|p, ops| {
        let (ep, em) = pt_eigenvectors_normalized(&derive_pt(p)?)?;
        let states = [ep, em];
        let mut w = 0.0_f64;
        for (m, u) in states.iter().enumerate() {
            for (n, v) in states.iter().enumerate() {
                let delta = if m == n { one() } else { c(0.0, 0.0) };
                w = w.max((cpt_product(u, v, ops) - delta).norm());
            }
        }
        Ok(w)
    })?;
    out.push(upper("cpt_orthonormality", worst, tight));

    let worst = with_ops(|_, ops| {
        Ok(ops
            .residuals
            .completeness_residual
            .max(ops.residuals.p_reconstruction_residual))
    })?;
    out.push(upper("completeness", worst, tight));

    let mut worst = 0.0_f64;
    for p in unbroken_grid() {
        let hp = HermitianParams::new(p.s, p.r, p.r, p.psi)?;
        for t in [0.1, 0.7, 3.0].map(|t| t * cfg.hbar) {
            let gen = |h: CMat2| h.scale(c(0.0, -t / cfg.hbar));
            let o_pt = mat_exp_oracle(&gen(build_pt_matrix(&p)), 1e-14)?;
            let o_h = mat_exp_oracle(&gen(build_hermitian_matrix(&hp)), 1e-14)?;
            worst = worst
                .max(propagator_pt(&p, t, cfg)?.dist(&o_pt))
                .max(propagator_hermitian(&hp, t, cfg).dist(&o_h));
        }
    }
    out.push(upper("propagator_vs_oracle", worst, loose));

    let mut drift = 0.0_f64;
    let mut min_excursion = f64::INFINITY;
    for p in unbroken_grid() {
        let d = derive_pt(&p)?;
        let ops = operator_set(&p)?;
        let (ep, _) = pt_eigenvectors_normalized(&d)?;
        let nu1p = cpt_normalize(&CVec2::nu1(), &ops)?;
        let t_max = 10.0 * cfg.hbar / d.omega;
        for state in [nu1p, ep] {
            let tr = trace_evolution(&p, &state, t_max, 101, cfg)?;
            drift = drift.max(tr.max_cpt_drift());
        }
        if d.alpha.abs() > 0.1 {
            let tr = trace_evolution(&p, &nu1p, t_max, 101, cfg)?;
            min_excursion = min_excursion.min(tr.max_dirac_drift());
        }
    }
    out.push(upper("cpt_norm_conservation", drift, loose));
    out.push(SuiteResult {
        name: "dirac_norm_not_conserved",
        passed: min_excursion > DIRAC_EXCURSION,
        worst: min_excursion,
        threshold: DIRAC_EXCURSION,
    });

    let mut worst = 0.0_f64;
    for k in 0..10 {
        let alpha = -1.5 + 1.5 * (k as f64 + 1.0) / 10.0;
        let p = PTParams::with_alpha(alpha, 1.0)?;
        let tau = pt_tau_star(&p, cfg)?.tau;
        worst = worst.max((arrival_overlap(&p, tau, cfg)? - 1.0).abs());
    }
    out.push(upper("brachistochrone_arrival", worst, loose));

    let rows = equivalence_sweep(
        DEFAULT_SWEEP_ALPHA_MIN,
        DEFAULT_SWEEP_ALPHA_MAX,
        DEFAULT_SWEEP_STEPS,
        1.0,
        cfg,
    )?;
    let worst = rows.iter().map(|r| r.equivalence_residual()).fold(0.0, f64::max);
    out.push(upper("equivalence_law", worst, tight));

    let worst = with_ops(|_, ops| {
        let cross = cpt_product(&CVec2::nu2(), &CVec2::nu1(), ops).norm();
        Ok((cross - ops.alpha.tan().abs()).abs())
    })?;
    out.push(upper("cpt_basis_overlap", worst, tight));

    Ok(out)
}
