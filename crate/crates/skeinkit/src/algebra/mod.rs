//! Exact coefficient arithmetic for the bracket engines.
//!
//! Three rings appear in the skein relations: multivariate Laurent
//! polynomials with arbitrary-precision integer coefficients, the eight
//! element quotient ring `Z2[t]/(1+t+t^3)`, and (for numeric evaluation
//! only) complex numbers.

mod f8;
mod laurent;
mod scheme;

pub use f8::F8Element;
pub use laurent::{AlgebraError, LaurentPoly, VarSet};
pub use scheme::{CoefficientScheme, Dir, SchemeCoeffs, SchemeRing};

/// Minimal ring interface shared by the coefficient types.
///
/// `zero_like`/`one_like` take a witness value because a `LaurentPoly`
/// carries its variable set; constants must live in the same ring instance.
pub trait Ring: Clone + PartialEq + std::fmt::Display {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn is_zero(&self) -> bool;
    /// Compatible for arithmetic (same variable set / same ring).
    fn same_ring(&self, other: &Self) -> bool;
}

/// Numeric state sums: complex numbers form a ring with exact-zero
/// comparison left to the caller's tolerances.
impl Ring for num_complex::Complex64 {
    fn zero_like(&self) -> Self {
        num_complex::Complex64::new(0.0, 0.0)
    }
    fn one_like(&self) -> Self {
        num_complex::Complex64::new(1.0, 0.0)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn is_zero(&self) -> bool {
        self.norm_sqr() == 0.0
    }
    fn same_ring(&self, _other: &Self) -> bool {
        true
    }
}
