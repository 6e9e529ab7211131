//! The PT-symmetric family `[[r e^{iψ}, s], [s, r e^{-iψ}]]` and the Hermitian
//! comparison family `[[s, r e^{iψ}], [r e^{-iψ}, u]]`.
//!
//! The PT family is kept in canonical form (`s > 0`, `r ≥ 0`, `ψ ∈ (−π, π]`);
//! every physical quantity depends on `(r/s)·sin ψ`, so signs live in `ψ`.

use std::f64::consts::{FRAC_PI_2, PI};

use serde::{Deserialize, Serialize};

use crate::algebra::{c, cis, CMat2, CScalar, CVec2, I};
use crate::error::{PtError, Result};

/// Default relative tolerance on the phase discriminant.
pub const PHASE_TOL: f64 = 1e-12;

/// Below this `cos α` the CPT normalization is treated as divergent.
pub const MIN_COS_ALPHA: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PTParams {
    pub r: f64,
    pub s: f64,
    pub psi: f64,
}

impl PTParams {
    /// Validated constructor; `psi` is wrapped into `(−π, π]`.
    pub fn new(r: f64, s: f64, psi: f64) -> Result<Self> {
        if !(r.is_finite() && s.is_finite() && psi.is_finite()) {
            return Err(PtError::Domain("PT parameters must be finite".into()));
        }
        if !(s > 0.0) {
            return Err(PtError::Domain(format!("s must be > 0, got {s}")));
        }
        if r < 0.0 {
            return Err(PtError::Domain(format!("r must be >= 0, got {r}")));
        }
        Ok(Self { r, s, psi: wrap_angle(psi) })
    }

    /// Parameters realizing a prescribed `α ∈ (−π/2, π/2)` at gap scale `s`.
    ///
    /// Uses `r = s/2` and `ψ = arcsin(2 sin α)` while that is solvable;
    /// otherwise pins `ψ = ±π/2` and takes `r = s·|sin α|`.
    pub fn with_alpha(alpha: f64, s: f64) -> Result<Self> {
        if !(alpha > -FRAC_PI_2 && alpha < FRAC_PI_2) {
            return Err(PtError::Domain(format!(
                "alpha must lie in (-pi/2, pi/2), got {alpha}"
            )));
        }
        let r = 0.5 * s;
        let ratio = (s / r) * alpha.sin();
        if ratio.abs() <= 1.0 {
            Self::new(r, s, ratio.asin())
        } else {
            Self::new(s * alpha.sin().abs(), s, FRAC_PI_2.copysign(alpha))
        }
    }

    /// `s² − r² sin² ψ`; positive in the unbroken phase.
    pub fn discriminant(&self) -> f64 {
        let rs = self.r * self.psi.sin();
        self.s * self.s - rs * rs
    }
}

fn wrap_angle(theta: f64) -> f64 {
    let mut t = theta % (2.0 * PI);
    if t <= -PI {
        t += 2.0 * PI;
    } else if t > PI {
        t -= 2.0 * PI;
    }
    t
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PhaseClass {
    Unbroken,
    ExceptionalPoint,
    Broken,
}

impl PhaseClass {
    pub fn as_str(&self) -> &'static str {
        match self {
            PhaseClass::Unbroken => "unbroken",
            PhaseClass::ExceptionalPoint => "exceptional_point",
            PhaseClass::Broken => "broken",
        }
    }
}

impl std::fmt::Display for PhaseClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PTDerived {
    pub alpha: f64,
    pub omega: f64,
    pub eps_plus: f64,
    pub eps_minus: f64,
    pub phase: PhaseClass,
}

impl PTDerived {
    /// Fails unless strictly inside the unbroken phase with a finite CPT metric.
    pub fn require_unbroken(&self) -> Result<()> {
        match self.phase {
            PhaseClass::Broken => Err(PtError::BrokenPhase { discriminant: f64::NAN }),
            _ if self.alpha.cos() <= MIN_COS_ALPHA || self.phase == PhaseClass::ExceptionalPoint => {
                Err(PtError::ExceptionalPoint { cos_alpha: self.alpha.cos() })
            }
            _ => Ok(()),
        }
    }
}

pub fn build_pt_matrix(p: &PTParams) -> CMat2 {
    let s = c(p.s, 0.0);
    CMat2::new(cis(p.psi) * p.r, s, s, cis(-p.psi) * p.r)
}

/// Phase classification with a relative tolerance on the discriminant.
pub fn classify_phase(p: &PTParams, tol: f64) -> PhaseClass {
    let disc = p.discriminant();
    let band = tol * p.s * p.s;
    if disc.abs() <= band {
        PhaseClass::ExceptionalPoint
    } else if disc > 0.0 {
        PhaseClass::Unbroken
    } else {
        PhaseClass::Broken
    }
}

/// Spectrum, gap and `α` with `sin α = (r/s) sin ψ` on the principal branch.
///
/// Succeeds at the exceptional point (where `ω = 0`); only the broken phase is
/// rejected.
pub fn derive_pt(p: &PTParams) -> Result<PTDerived> {
    let phase = classify_phase(p, PHASE_TOL);
    if phase == PhaseClass::Broken {
        return Err(PtError::BrokenPhase { discriminant: p.discriminant() });
    }
    let sin_alpha = ((p.r / p.s) * p.psi.sin()).clamp(-1.0, 1.0);
    let alpha = sin_alpha.asin();
    let half_gap = p.s * alpha.cos();
    let centre = p.r * p.psi.cos();
    Ok(PTDerived {
        alpha,
        omega: 2.0 * half_gap,
        eps_plus: centre + half_gap,
        eps_minus: centre - half_gap,
        phase,
    })
}

/// Unnormalized eigenvectors `(e^{iα/2}, e^{−iα/2})` for `ε₊` and
/// `(i e^{−iα/2}, −i e^{iα/2})` for `ε₋`.
pub fn pt_eigenvectors_raw(d: &PTDerived) -> (CVec2, CVec2) {
    let half = 0.5 * d.alpha;
    let plus = CVec2::new(cis(half), cis(-half));
    let minus = CVec2::new(I * cis(-half), -I * cis(half));
    (plus, minus)
}

/// CPT-normalized eigenvectors, `(2 cos α)^{-1/2}` times the raw vectors.
///
/// The normalized `ε₋` keeps the `e^{+iα/2}` in its second component; the
/// variant with `e^{−iα/2}` there is not an eigenvector of the Hamiltonian.
pub fn pt_eigenvectors_normalized(d: &PTDerived) -> Result<(CVec2, CVec2)> {
    let cos_alpha = d.alpha.cos();
    if cos_alpha <= MIN_COS_ALPHA {
        return Err(PtError::ExceptionalPoint { cos_alpha });
    }
    let a = c(1.0 / (2.0 * cos_alpha).sqrt(), 0.0);
    let (plus, minus) = pt_eigenvectors_raw(d);
    Ok((plus.scale(a), minus.scale(a)))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct HermitianParams {
    pub s: f64,
    pub u: f64,
    pub r: f64,
    pub psi: f64,
}

impl HermitianParams {
    pub fn new(s: f64, u: f64, r: f64, psi: f64) -> Result<Self> {
        if !(s.is_finite() && u.is_finite() && r.is_finite() && psi.is_finite()) {
            return Err(PtError::Domain("Hermitian parameters must be finite".into()));
        }
        if r < 0.0 {
            return Err(PtError::Domain(format!("r must be >= 0, got {r}")));
        }
        Ok(Self { s, u, r, psi })
    }

    /// The fastest Hermitian Hamiltonian at a given gap: `s = u`, `r = ω′/2`.
    pub fn optimal_for_gap(omega_prime: f64) -> Result<Self> {
        Self::new(0.0, 0.0, 0.5 * omega_prime, 0.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct HermitianDerived {
    pub omega_prime: f64,
}

pub fn build_hermitian_matrix(p: &HermitianParams) -> CMat2 {
    let off = cis(p.psi) * p.r;
    CMat2::new(c(p.s, 0.0), off, off.conj(), c(p.u, 0.0))
}

pub fn derive_hermitian(p: &HermitianParams) -> HermitianDerived {
    HermitianDerived {
        omega_prime: (p.s - p.u).hypot(2.0 * p.r),
    }
}

/// Eigenvalues of a 2×2 matrix from its characteristic polynomial, larger
/// real part first. Works for arbitrary complex entries.
pub fn char_poly_eigenvalues(m: &CMat2) -> (CScalar, CScalar) {
    let tr = m.trace();
    let root = (tr * tr - m.det() * 4.0).sqrt();
    let a = (tr + root) * 0.5;
    let b = (tr - root) * 0.5;
    if a.re >= b.re {
        (a, b)
    } else {
        (b, a)
    }
}
