//! Complex 2×2 kernel: scalars, two-component states, matrices, the Pauli
//! basis, and a series matrix exponential used as an independent oracle.

use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{PtError, Result};

/// Double-precision complex scalar.
pub type CScalar = Complex64;

pub const ZERO: CScalar = CScalar::new(0.0, 0.0);
pub const ONE: CScalar = CScalar::new(1.0, 0.0);
pub const I: CScalar = CScalar::new(0.0, 1.0);

/// Shorthand for a complex literal.
#[inline]
pub fn c(re: f64, im: f64) -> CScalar {
    CScalar::new(re, im)
}

/// `e^{iθ}`.
#[inline]
pub fn cis(theta: f64) -> CScalar {
    CScalar::from_polar(1.0, theta)
}

/// A two-component complex state vector.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CVec2 {
    pub c0: CScalar,
    pub c1: CScalar,
}

impl CVec2 {
    pub const fn new(c0: CScalar, c1: CScalar) -> Self {
        Self { c0, c1 }
    }

    /// Basis state ν₁ = (1, 0).
    pub const fn nu1() -> Self {
        Self::new(ONE, ZERO)
    }

    /// Basis state ν₂ = (0, 1).
    pub const fn nu2() -> Self {
        Self::new(ZERO, ONE)
    }

    pub fn conj(&self) -> Self {
        Self::new(self.c0.conj(), self.c1.conj())
    }

    pub fn scale(&self, k: CScalar) -> Self {
        Self::new(self.c0 * k, self.c1 * k)
    }

    /// Plain bilinear dot product `uᵗ·v` (no conjugation).
    pub fn dot(&self, other: &Self) -> CScalar {
        self.c0 * other.c0 + self.c1 * other.c1
    }

    /// Largest component magnitude.
    pub fn max_abs(&self) -> f64 {
        self.c0.norm().max(self.c1.norm())
    }

    pub fn is_finite(&self) -> bool {
        self.c0.is_finite() && self.c1.is_finite()
    }

    /// Outer product `u·vᵗ` (transpose, no conjugation).
    pub fn outer(&self, other: &Self) -> CMat2 {
        CMat2::new(
            self.c0 * other.c0,
            self.c0 * other.c1,
            self.c1 * other.c0,
            self.c1 * other.c1,
        )
    }
}

impl Add for CVec2 {
    type Output = CVec2;
    fn add(self, rhs: CVec2) -> CVec2 {
        CVec2::new(self.c0 + rhs.c0, self.c1 + rhs.c1)
    }
}

impl Sub for CVec2 {
    type Output = CVec2;
    fn sub(self, rhs: CVec2) -> CVec2 {
        CVec2::new(self.c0 - rhs.c0, self.c1 - rhs.c1)
    }
}

/// A 2×2 complex matrix in row-major entry order.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CMat2 {
    pub m00: CScalar,
    pub m01: CScalar,
    pub m10: CScalar,
    pub m11: CScalar,
}

impl CMat2 {
    pub const fn new(m00: CScalar, m01: CScalar, m10: CScalar, m11: CScalar) -> Self {
        Self { m00, m01, m10, m11 }
    }

    pub const fn zero() -> Self {
        Self::new(ZERO, ZERO, ZERO, ZERO)
    }

    pub const fn identity() -> Self {
        Self::new(ONE, ZERO, ZERO, ONE)
    }

    pub fn diag(a: CScalar, b: CScalar) -> Self {
        Self::new(a, ZERO, ZERO, b)
    }

    pub fn from_rows(rows: [[CScalar; 2]; 2]) -> Self {
        Self::new(rows[0][0], rows[0][1], rows[1][0], rows[1][1])
    }

    pub fn to_rows(&self) -> [[CScalar; 2]; 2] {
        [[self.m00, self.m01], [self.m10, self.m11]]
    }

    /// Entries in row-major order.
    pub fn entries(&self) -> [CScalar; 4] {
        [self.m00, self.m01, self.m10, self.m11]
    }

    pub fn conj(&self) -> Self {
        Self::new(self.m00.conj(), self.m01.conj(), self.m10.conj(), self.m11.conj())
    }

    pub fn transpose(&self) -> Self {
        Self::new(self.m00, self.m10, self.m01, self.m11)
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        self.transpose().conj()
    }

    pub fn trace(&self) -> CScalar {
        self.m00 + self.m11
    }

    pub fn det(&self) -> CScalar {
        self.m00 * self.m11 - self.m01 * self.m10
    }

    pub fn scale(&self, k: CScalar) -> Self {
        Self::new(self.m00 * k, self.m01 * k, self.m10 * k, self.m11 * k)
    }

    pub fn scale_re(&self, k: f64) -> Self {
        self.scale(c(k, 0.0))
    }

    pub fn apply(&self, v: &CVec2) -> CVec2 {
        CVec2::new(
            self.m00 * v.c0 + self.m01 * v.c1,
            self.m10 * v.c0 + self.m11 * v.c1,
        )
    }

    /// Max-entry magnitude (the ∞ norm used for every residual).
    pub fn max_abs(&self) -> f64 {
        self.entries().iter().fold(0.0_f64, |acc, z| acc.max(z.norm()))
    }

    /// `‖self − other‖∞` in the max-entry sense.
    pub fn dist(&self, other: &Self) -> f64 {
        (*self - *other).max_abs()
    }

    pub fn commutator(&self, other: &Self) -> Self {
        *self * *other - *other * *self
    }

    pub fn is_finite(&self) -> bool {
        self.entries().iter().all(|z| z.is_finite())
    }
}

impl Add for CMat2 {
    type Output = CMat2;
    fn add(self, rhs: CMat2) -> CMat2 {
        CMat2::new(
            self.m00 + rhs.m00,
            self.m01 + rhs.m01,
            self.m10 + rhs.m10,
            self.m11 + rhs.m11,
        )
    }
}

impl Sub for CMat2 {
    type Output = CMat2;
    fn sub(self, rhs: CMat2) -> CMat2 {
        CMat2::new(
            self.m00 - rhs.m00,
            self.m01 - rhs.m01,
            self.m10 - rhs.m10,
            self.m11 - rhs.m11,
        )
    }
}

impl Neg for CMat2 {
    type Output = CMat2;
    fn neg(self) -> CMat2 {
        self.scale_re(-1.0)
    }
}

impl Mul for CMat2 {
    type Output = CMat2;
    fn mul(self, rhs: CMat2) -> CMat2 {
        CMat2::new(
            self.m00 * rhs.m00 + self.m01 * rhs.m10,
            self.m00 * rhs.m01 + self.m01 * rhs.m11,
            self.m10 * rhs.m00 + self.m11 * rhs.m10,
            self.m10 * rhs.m01 + self.m11 * rhs.m11,
        )
    }
}

impl Mul<CVec2> for CMat2 {
    type Output = CVec2;
    fn mul(self, rhs: CVec2) -> CVec2 {
        self.apply(&rhs)
    }
}

/// σ₁.
pub const fn sigma_x() -> CMat2 {
    CMat2::new(ZERO, ONE, ONE, ZERO)
}

/// σ₂.
pub const fn sigma_y() -> CMat2 {
    CMat2::new(ZERO, c_const(0.0, -1.0), I, ZERO)
}

/// σ₃.
pub const fn sigma_z() -> CMat2 {
    CMat2::new(ONE, ZERO, ZERO, c_const(-1.0, 0.0))
}

const fn c_const(re: f64, im: f64) -> CScalar {
    CScalar::new(re, im)
}

/// Coefficients of a matrix in the basis {I, σ₁, σ₂, σ₃}. Coefficients may be
/// complex, so non-Hermitian matrices decompose too.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PauliDecomp {
    pub c0: CScalar,
    pub cx: CScalar,
    pub cy: CScalar,
    pub cz: CScalar,
}

impl PauliDecomp {
    pub const fn new(c0: CScalar, cx: CScalar, cy: CScalar, cz: CScalar) -> Self {
        Self { c0, cx, cy, cz }
    }

    /// Complex (non-conjugated) dot product of the vector part with itself.
    pub fn vector_square(&self) -> CScalar {
        self.cx * self.cx + self.cy * self.cy + self.cz * self.cz
    }
}

/// `c0·I + cx·σ₁ + cy·σ₂ + cz·σ₃`.
pub fn pauli_compose(d: &PauliDecomp) -> CMat2 {
    CMat2::identity().scale(d.c0)
        + sigma_x().scale(d.cx)
        + sigma_y().scale(d.cy)
        + sigma_z().scale(d.cz)
}

pub fn pauli_decompose(m: &CMat2) -> PauliDecomp {
    PauliDecomp {
        c0: (m.m00 + m.m11) * 0.5,
        cx: (m.m01 + m.m10) * 0.5,
        cy: I * (m.m01 - m.m10) * 0.5,
        cz: (m.m00 - m.m11) * 0.5,
    }
}

const ORACLE_SCALE_THRESHOLD: f64 = 0.5;
const ORACLE_MAX_TERMS: usize = 256;
const ORACLE_MAX_SQUARINGS: u32 = 1100;

/// `exp(m)` by scaling and squaring around a truncated Taylor series.
///
/// The matrix is halved until its max-entry magnitude is at most 0.5; series
/// terms are accumulated until the next term drops below `tol`; the result is
/// then squared back. Kept deliberately naive: it is the reference the
/// closed-form propagators are checked against.
pub fn mat_exp_oracle(m: &CMat2, tol: f64) -> Result<CMat2> {
    if !(tol > 0.0) {
        return Err(PtError::Domain(format!("oracle tolerance must be > 0, got {tol}")));
    }
    if !m.is_finite() {
        return Err(PtError::NonFinite("mat_exp_oracle input"));
    }

    let mut squarings = 0_u32;
    let mut scaled = *m;
    while scaled.max_abs() > ORACLE_SCALE_THRESHOLD {
        scaled = scaled.scale_re(0.5);
        squarings += 1;
        if squarings > ORACLE_MAX_SQUARINGS {
            return Err(PtError::NonFinite("mat_exp_oracle scaling"));
        }
    }

    let mut sum = CMat2::identity();
    let mut term = CMat2::identity();
    for n in 1..=ORACLE_MAX_TERMS {
        term = (term * scaled).scale_re(1.0 / n as f64);
        if term.max_abs() < tol {
            break;
        }
        sum = sum + term;
    }

    for _ in 0..squarings {
        sum = sum * sum;
    }

    if sum.is_finite() {
        Ok(sum)
    } else {
        Err(PtError::NonFinite("mat_exp_oracle series"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_6, LN_2};

    fn close(a: &CMat2, b: &CMat2, tol: f64) -> bool {
        a.dist(b) < tol
    }

    #[test]
    fn compose_sigma_x() {
        let m = pauli_compose(&PauliDecomp::new(ZERO, ONE, ZERO, ZERO));
        assert_eq!(m, CMat2::from_rows([[ZERO, ONE], [ONE, ZERO]]));
    }

    #[test]
    fn compose_identity_and_scaled_sigma_z() {
        assert_eq!(
            pauli_compose(&PauliDecomp::new(ONE, ZERO, ZERO, ZERO)),
            CMat2::identity()
        );
        let m = pauli_compose(&PauliDecomp::new(ZERO, ZERO, ZERO, I));
        assert_eq!(m, CMat2::diag(I, -I));
    }

    #[test]
    fn pauli_matrices_match_printed_forms() {
        assert_eq!(sigma_y(), CMat2::from_rows([[ZERO, -I], [I, ZERO]]));
        assert_eq!(sigma_z(), CMat2::diag(ONE, -ONE));
        for s in [sigma_x(), sigma_y(), sigma_z()] {
            assert_eq!(s * s, CMat2::identity());
        }
    }

    #[test]
    fn decompose_basic() {
        assert_eq!(
            pauli_decompose(&sigma_x()),
            PauliDecomp::new(ZERO, ONE, ZERO, ZERO)
        );
        assert_eq!(
            pauli_decompose(&CMat2::identity()),
            PauliDecomp::new(ONE, ZERO, ZERO, ZERO)
        );
    }

    #[test]
    fn decompose_pt_hamiltonian_entries() {
        // [[r e^{iψ}, s], [s, r e^{-iψ}]] with r=1, s=2, ψ=π/6
        let psi = FRAC_PI_6;
        let h = CMat2::new(cis(psi), c(2.0, 0.0), c(2.0, 0.0), cis(-psi));
        let d = pauli_decompose(&h);
        assert!((d.c0 - c(psi.cos(), 0.0)).norm() < 1e-15);
        assert!((d.cx - c(2.0, 0.0)).norm() < 1e-15);
        assert!(d.cy.norm() < 1e-15);
        assert!((d.cz - c(0.0, psi.sin())).norm() < 1e-15);
    }

    #[test]
    fn oracle_zero_is_identity() {
        let e = mat_exp_oracle(&CMat2::zero(), 1e-14).unwrap();
        assert_eq!(e, CMat2::identity());
    }

    #[test]
    fn oracle_pauli_rotation() {
        // exp(-i π/2 σ₁) = cos(π/2) I - i sin(π/2) σ₁
        let m = sigma_x().scale(c(0.0, -FRAC_PI_2));
        let e = mat_exp_oracle(&m, 1e-14).unwrap();
        let expected = CMat2::new(ZERO, -I, -I, ZERO);
        assert!(close(&e, &expected, 1e-13), "{e:?}");
    }

    #[test]
    fn oracle_diagonal() {
        let e = mat_exp_oracle(&CMat2::diag(c(LN_2, 0.0), ZERO), 1e-14).unwrap();
        assert!(close(&e, &CMat2::diag(c(2.0, 0.0), ONE), 1e-13));
    }

    #[test]
    fn oracle_rejects_bad_inputs() {
        assert!(matches!(
            mat_exp_oracle(&CMat2::zero(), 0.0),
            Err(PtError::Domain(_))
        ));
        let nan = CMat2::diag(c(f64::NAN, 0.0), ZERO);
        assert!(matches!(mat_exp_oracle(&nan, 1e-14), Err(PtError::NonFinite(_))));
        let huge = CMat2::diag(c(800.0, 0.0), ZERO);
        assert!(matches!(mat_exp_oracle(&huge, 1e-14), Err(PtError::NonFinite(_))));
    }

    #[test]
    fn det_and_trace() {
        let m = CMat2::from_rows([[c(1.0, 0.0), c(2.0, 0.0)], [c(3.0, 0.0), c(4.0, 0.0)]]);
        assert_eq!(m.det(), c(-2.0, 0.0));
        assert_eq!(m.trace(), c(5.0, 0.0));
    }

    fn scalar(bound: f64) -> impl Strategy<Value = CScalar> {
        (-bound..=bound, -bound..=bound).prop_map(|(re, im)| c(re, im))
    }

    fn mat(bound: f64) -> impl Strategy<Value = CMat2> {
        (scalar(bound), scalar(bound), scalar(bound), scalar(bound))
            .prop_map(|(a, b, c, d)| CMat2::new(a, b, c, d))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]

        #[test]
        fn pauli_round_trip(m in mat(2.0)) {
            let back = pauli_compose(&pauli_decompose(&m));
            for (x, y) in back.entries().iter().zip(m.entries().iter()) {
                prop_assert!((x - y).norm() < 1e-14);
            }
        }

        #[test]
        fn oracle_inverse(m in mat(2.0 / std::f64::consts::SQRT_2)) {
            let e = mat_exp_oracle(&m, 1e-14).unwrap();
            let einv = mat_exp_oracle(&(-m), 1e-14).unwrap();
            prop_assert!(close(&(e * einv), &CMat2::identity(), 1e-10));
        }

        #[test]
        fn oracle_group_law_diagonal(d0 in scalar(1.0), d1 in scalar(1.0), a in -2.0..2.0f64, b in -2.0..2.0f64) {
            let d = CMat2::diag(d0, d1);
            let lhs = mat_exp_oracle(&d.scale_re(a), 1e-14).unwrap()
                * mat_exp_oracle(&d.scale_re(b), 1e-14).unwrap();
            let rhs = mat_exp_oracle(&d.scale_re(a + b), 1e-14).unwrap();
            prop_assert!(close(&lhs, &rhs, 1e-10));
        }
    }
}
