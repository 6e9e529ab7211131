//! Dirac, PT and CPT pairings, CPT normalization and angular distance.
//!
//! PT and CPT pairings transform the first argument and then contract with a
//! plain transpose: `⟨u|v⟩ = (X·conj(u))ᵗ·v`. They are linear (not
//! conjugate-linear) in `v`.

use serde::{Deserialize, Serialize};

use crate::algebra::{c, CMat2, CScalar, CVec2};
use crate::error::{PtError, Result};
use crate::symmetry_ops::OperatorSet;

/// Tolerance on the self-pairing of states passed to [`angular_distance`].
pub const NORMALIZATION_TOL: f64 = 1e-9;

/// Smallest CPT self-pairing accepted by [`cpt_normalize`].
pub const MIN_CPT_NORM: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PairingKind {
    Dirac,
    PT,
    CPT,
}

impl PairingKind {
    pub fn pair(&self, u: &CVec2, v: &CVec2, ops: &OperatorSet) -> CScalar {
        match self {
            PairingKind::Dirac => dirac_product(u, v),
            PairingKind::PT => pt_product(u, v, &ops.p),
            PairingKind::CPT => cpt_product(u, v, ops),
        }
    }
}

/// `conj(u)ᵗ·v`.
pub fn dirac_product(u: &CVec2, v: &CVec2) -> CScalar {
    u.conj().dot(v)
}

/// `(P·conj(u))ᵗ·v`.
pub fn pt_product(u: &CVec2, v: &CVec2, parity: &CMat2) -> CScalar {
    (*parity * u.conj()).dot(v)
}

/// `(C·P·conj(u))ᵗ·v`.
pub fn cpt_product(u: &CVec2, v: &CVec2, ops: &OperatorSet) -> CScalar {
    (ops.c * (ops.p * u.conj())).dot(v)
}

/// Rescales `v` by a positive real factor to unit CPT norm.
pub fn cpt_normalize(v: &CVec2, ops: &OperatorSet) -> Result<CVec2> {
    let norm = cpt_product(v, v, ops).re;
    if !(norm > MIN_CPT_NORM) {
        return Err(PtError::ZeroOrNegativeNorm(norm));
    }
    Ok(v.scale(c(norm.sqrt().recip(), 0.0)))
}

/// `β = arccos |⟨u|v⟩|` for states normalized under `kind`; in `[0, π/2]`.
///
/// The overlap is divided by `sqrt(|⟨u|u⟩|·|⟨v|v⟩|)` (unity to within
/// [`NORMALIZATION_TOL`]) so that `u = v` gives exactly zero. Under the
/// indefinite PT pairing a self-pairing of `−1` also counts as normalized.
pub fn angular_distance(
    u: &CVec2,
    v: &CVec2,
    ops: &OperatorSet,
    kind: PairingKind,
) -> Result<f64> {
    let mut self_norms = [0.0; 2];
    for (slot, w) in self_norms.iter_mut().zip([u, v]) {
        let selfp = kind.pair(w, w, ops);
        let off = match kind {
            PairingKind::PT => (selfp.norm() - 1.0).abs(),
            _ => (selfp - c(1.0, 0.0)).norm(),
        };
        if !(off <= NORMALIZATION_TOL) {
            return Err(PtError::NotNormalized(selfp.re));
        }
        *slot = selfp.norm();
    }
    let overlap = kind.pair(u, v, ops).norm() / (self_norms[0] * self_norms[1]).sqrt();
    Ok(overlap.clamp(0.0, 1.0).acos())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{c, I, ONE, ZERO};
    use crate::hamiltonian::{derive_pt, pt_eigenvectors_normalized, PTParams};
    use crate::symmetry_ops::operator_set;
    use proptest::prelude::*;
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_3, FRAC_PI_6};

    fn ops_for(p: &PTParams) -> OperatorSet {
        operator_set(p).unwrap()
    }

    fn eig(p: &PTParams) -> (CVec2, CVec2) {
        pt_eigenvectors_normalized(&derive_pt(p).unwrap()).unwrap()
    }

    fn close(a: CScalar, b: CScalar, tol: f64) -> bool {
        (a - b).norm() < tol
    }

    const REF: PTParams = PTParams { r: 1.0, s: 2.0, psi: FRAC_PI_6 };

    #[test]
    fn dirac_basics() {
        assert_eq!(dirac_product(&CVec2::nu1(), &CVec2::nu2()), ZERO);
        assert_eq!(dirac_product(&CVec2::nu1(), &CVec2::nu1()), ONE);
        let (ep, em) = eig(&PTParams::with_alpha(FRAC_PI_6, 1.0).unwrap());
        assert!(dirac_product(&ep, &em).norm() > 0.1);
    }

    #[test]
    fn pt_norms_alternate() {
        let ops = ops_for(&REF);
        let (ep, em) = eig(&REF);
        assert!(close(pt_product(&ep, &ep, &ops.p), ONE, 1e-12));
        assert!(close(pt_product(&em, &em, &ops.p), -ONE, 1e-12));
        assert!(close(pt_product(&ep, &em, &ops.p), ZERO, 1e-12));
    }

    #[test]
    fn cpt_orthonormal_eigenvectors() {
        let ops = ops_for(&REF);
        let (ep, em) = eig(&REF);
        assert!(close(cpt_product(&ep, &ep, &ops), ONE, 1e-12));
        assert!(close(cpt_product(&em, &em, &ops), ONE, 1e-12));
        assert!(close(cpt_product(&ep, &em, &ops), ZERO, 1e-12));
        assert!(close(cpt_product(&em, &ep, &ops), ZERO, 1e-12));
    }

    #[test]
    fn cpt_basis_overlaps() {
        for alpha in [-1.2, -0.3, 0.0, 0.4, 1.1] {
            let ops = ops_for(&PTParams::with_alpha(alpha, 1.0).unwrap());
            let a = ops.alpha;
            let cross = cpt_product(&CVec2::nu2(), &CVec2::nu1(), &ops);
            // Evaluates to +i·tan α with this pairing convention.
            assert!(close(cross, I * a.tan(), 1e-12), "{alpha}: {cross}");
            assert!((cross.norm() - a.tan().abs()).abs() < 1e-12);
            let self1 = cpt_product(&CVec2::nu1(), &CVec2::nu1(), &ops);
            assert!(close(self1, c(1.0 / a.cos(), 0.0), 1e-12));
        }
    }

    #[test]
    fn normalize() {
        for alpha in [-1.0, -0.2, 0.5] {
            let ops = ops_for(&PTParams::with_alpha(alpha, 1.0).unwrap());
            let n1 = cpt_normalize(&CVec2::nu1(), &ops).unwrap();
            let expected = CVec2::nu1().scale(c(ops.alpha.cos().sqrt(), 0.0));
            assert!((n1 - expected).max_abs() < 1e-12);
            assert!(close(cpt_product(&n1, &n1, &ops), ONE, 1e-12));
        }
        let ops = ops_for(&REF);
        let (ep, _) = eig(&REF);
        assert!((cpt_normalize(&ep, &ops).unwrap() - ep).max_abs() < 1e-12);

        let herm = ops_for(&PTParams::new(0.0, 1.0, 0.0).unwrap());
        assert_eq!(cpt_normalize(&CVec2::nu2(), &herm).unwrap(), CVec2::nu2());

        assert!(matches!(
            cpt_normalize(&CVec2::new(ZERO, ZERO), &ops),
            Err(PtError::ZeroOrNegativeNorm(_))
        ));
    }

    #[test]
    fn angular_distances() {
        for alpha in [-1.4, -0.7, -0.1, 0.0, 0.6] {
            let ops = ops_for(&PTParams::with_alpha(alpha, 1.0).unwrap());
            let v1 = cpt_normalize(&CVec2::nu1(), &ops).unwrap();
            let v2 = cpt_normalize(&CVec2::nu2(), &ops).unwrap();
            let beta = angular_distance(&v1, &v2, &ops, PairingKind::CPT).unwrap();
            assert!((beta - ops.alpha.sin().abs().acos()).abs() < 1e-12);
            assert_eq!(angular_distance(&v1, &v1, &ops, PairingKind::CPT).unwrap(), 0.0);
        }
        let ops = ops_for(&REF);
        let d = angular_distance(&CVec2::nu1(), &CVec2::nu2(), &ops, PairingKind::Dirac).unwrap();
        assert_eq!(d, FRAC_PI_2);
        let (ep, em) = eig(&REF);
        let d = angular_distance(&ep, &em, &ops, PairingKind::PT).unwrap();
        assert!((d - FRAC_PI_2).abs() < 1e-12);

        let err = angular_distance(&CVec2::nu1(), &CVec2::nu2(), &ops, PairingKind::CPT);
        assert!(matches!(err, Err(PtError::NotNormalized(_))));
    }

    #[test]
    fn eigen_pt_norm_pattern_on_grid() {
        for r in [0.0, 0.3, 1.0, 1.7] {
            for s in [1.0, 2.0] {
                for psi in [0.0, FRAC_PI_6, -FRAC_PI_6, FRAC_PI_3, -FRAC_PI_3] {
                    let p = PTParams::new(r, s, psi).unwrap();
                    let Ok(ops) = operator_set(&p) else { continue };
                    let (ep, em) = eig(&p);
                    assert!(close(pt_product(&ep, &ep, &ops.p), ONE, 1e-12));
                    assert!(close(pt_product(&em, &em, &ops.p), -ONE, 1e-12));
                }
            }
        }
    }

    #[test]
    fn hermitian_limit_pairings_coincide() {
        let ops = ops_for(&PTParams::new(0.7, 1.0, 0.0).unwrap());
        let (ep, em) = eig(&PTParams::new(0.7, 1.0, 0.0).unwrap());
        // Real-linear combinations of ε±.
        let states: Vec<CVec2> = [(1.0, 0.0), (0.0, 1.0), (0.6, -1.3), (2.0, 0.25)]
            .iter()
            .map(|&(a, b)| ep.scale(c(a, 0.0)) + em.scale(c(b, 0.0)))
            .collect();
        for u in &states {
            for v in &states {
                let d = dirac_product(u, v);
                assert!(close(cpt_product(u, v, &ops), d, 1e-12));
                // C = P here, so the PT pairing with metric C·P is the Dirac one.
                assert!(close(pt_product(u, v, &(ops.c * ops.p)), d, 1e-12));
            }
        }
    }

    fn scalar() -> impl Strategy<Value = CScalar> {
        (-2.0..2.0f64, -2.0..2.0f64).prop_map(|(a, b)| c(a, b))
    }

    fn grid_params() -> impl Strategy<Value = PTParams> {
        (
            prop::sample::select(vec![0.0, 0.3, 1.0, 1.7]),
            prop::sample::select(vec![1.0, 2.0]),
            prop::sample::select(vec![0.0, FRAC_PI_6, -FRAC_PI_6, FRAC_PI_3, -FRAC_PI_3]),
        )
            .prop_map(|(r, s, psi)| PTParams::new(r, s, psi).unwrap())
            .prop_filter("unbroken", |p| operator_set(p).is_ok())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(500))]

        #[test]
        fn cpt_is_positive_definite(p in grid_params(), a in scalar(), b in scalar()) {
            prop_assume!(a.norm() + b.norm() > 1e-6);
            let ops = operator_set(&p).unwrap();
            let v = CVec2::new(a, b);
            let n = cpt_product(&v, &v, &ops);
            prop_assert!(n.re > 0.0);
            prop_assert!(n.im.abs() < 1e-10);
        }

        #[test]
        fn linear_in_second_argument(p in grid_params(), a in scalar(), b in scalar(), lam in scalar()) {
            let ops = operator_set(&p).unwrap();
            let u = CVec2::new(a, b);
            let v = CVec2::new(b, lam);
            let lv = v.scale(lam);
            prop_assert!(close(cpt_product(&u, &lv, &ops), lam * cpt_product(&u, &v, &ops), 1e-12));
            prop_assert!(close(pt_product(&u, &lv, &ops.p), lam * pt_product(&u, &v, &ops.p), 1e-12));
            prop_assert!(close(dirac_product(&u, &lv), lam * dirac_product(&u, &v), 1e-12));
            // Conjugate-linear in the first argument.
            let lu = u.scale(lam);
            prop_assert!(close(dirac_product(&lu, &v), lam.conj() * dirac_product(&u, &v), 1e-12));
        }
    }
}
