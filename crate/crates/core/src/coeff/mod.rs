//! Exact coefficient rings: the integers, finite fields GF(p^n), and the
//! rational function field GF(p)(t).
//!
//! Every ring is a small context object implementing [`CoeffRing`]; its
//! elements are plain values interpreted through that context. Group-ring
//! code is generic over the trait, so one implementation of multiplication,
//! augmentation and inversion serves all three kinds of coefficients.

mod galois;
mod integers;
mod prime;
mod ratfunc;
pub mod text;

use std::fmt;
use std::hash::Hash;

use serde::Serialize;
use thiserror::Error;

pub use galois::{FfElement, GaloisField, MAX_FIELD_ORDER};
pub use integers::Integers;
pub use prime::{is_prime, monic_polys, Fp, Poly};
pub use ratfunc::{FunctionField, RatFunc};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoeffError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("field order {p}^{n} exceeds the budget of {limit} elements")]
    BudgetExceeded { p: u64, n: u32, limit: u64 },
    #[error("extension degree must be positive")]
    ZeroDegree,
    #[error("division by zero")]
    DivisionByZero,
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("operand does not belong to this field")]
    MixedContexts,
    #[error("parse error: {0}")]
    Parse(String),
}

/// A commutative ring with exact arithmetic, acting as the context for its
/// element values.
pub trait CoeffRing: Clone + PartialEq + fmt::Debug + Send + Sync {
    type Elem: Clone + PartialEq + Eq + Hash + fmt::Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    /// Image of an integer under the canonical map from ℤ.
    fn from_i64(&self, v: i64) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        *a == self.zero()
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    /// Multiplicative inverse when `a` is a unit of the ring.
    fn unit_inverse(&self, a: &Self::Elem) -> Option<Self::Elem>;

    /// `a / b` when `b` divides `a` in the ring.
    fn exact_div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem>;

    /// 0 for ℤ, otherwise the prime characteristic.
    fn characteristic(&self) -> u64;

    fn is_field(&self) -> bool;

    /// Canonical text form, re-parsable by [`CoeffRing::parse_elem`].
    fn format_elem(&self, a: &Self::Elem) -> String;

    fn parse_elem(&self, text: &str) -> Result<Self::Elem, CoeffError>;

    /// Short name such as `Z`, `GF(2^2)` or `GF(3)(t)`.
    fn name(&self) -> String;

    fn pow(&self, a: &Self::Elem, mut exp: u64) -> Self::Elem {
        let mut acc = self.one();
        let mut base = a.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            exp >>= 1;
        }
        acc
    }
}

/// Description of a coefficient field of positive characteristic, as far
/// as the hyperbolicity theorems need it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FieldDescriptor {
    /// GF(p^n).
    Finite { p: u64, n: u32 },
    /// GF(p)(t), transcendence degree one.
    FunctionField { p: u64 },
    /// An infinite field algebraic over GF(p), such as its algebraic
    /// closure. Descriptor only: no element arithmetic.
    AlgebraicInfinite { p: u64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FieldTraits {
    pub is_finite: bool,
    pub is_algebraic_over_prime: bool,
    pub tr_deg: u32,
    pub characteristic: u64,
}

impl FieldDescriptor {
    pub fn finite(p: u64, n: u32) -> Result<Self, CoeffError> {
        check_prime(p)?;
        if n == 0 {
            return Err(CoeffError::ZeroDegree);
        }
        Ok(FieldDescriptor::Finite { p, n })
    }

    pub fn function_field(p: u64) -> Result<Self, CoeffError> {
        check_prime(p)?;
        Ok(FieldDescriptor::FunctionField { p })
    }

    pub fn algebraic_infinite(p: u64) -> Result<Self, CoeffError> {
        check_prime(p)?;
        Ok(FieldDescriptor::AlgebraicInfinite { p })
    }

    pub fn characteristic(&self) -> u64 {
        match *self {
            FieldDescriptor::Finite { p, .. }
            | FieldDescriptor::FunctionField { p }
            | FieldDescriptor::AlgebraicInfinite { p } => p,
        }
    }

    pub fn traits(&self) -> FieldTraits {
        field_traits(self)
    }
}

impl fmt::Display for FieldDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FieldDescriptor::Finite { p, n: 1 } => write!(f, "GF({p})"),
            FieldDescriptor::Finite { p, n } => write!(f, "GF({p}^{n})"),
            FieldDescriptor::FunctionField { p } => write!(f, "GF({p})(t)"),
            FieldDescriptor::AlgebraicInfinite { p } => write!(f, "algcl({p})"),
        }
    }
}

pub fn field_traits(d: &FieldDescriptor) -> FieldTraits {
    let characteristic = d.characteristic();
    match d {
        FieldDescriptor::Finite { .. } => FieldTraits {
            is_finite: true,
            is_algebraic_over_prime: true,
            tr_deg: 0,
            characteristic,
        },
        FieldDescriptor::FunctionField { .. } => FieldTraits {
            is_finite: false,
            is_algebraic_over_prime: false,
            tr_deg: 1,
            characteristic,
        },
        FieldDescriptor::AlgebraicInfinite { .. } => FieldTraits {
            is_finite: false,
            is_algebraic_over_prime: true,
            tr_deg: 0,
            characteristic,
        },
    }
}

pub(crate) fn check_prime(p: u64) -> Result<(), CoeffError> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(CoeffError::NotPrime(p))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn traits_table() {
        let t = field_traits(&FieldDescriptor::finite(2, 3).unwrap());
        assert_eq!(
            (
                t.is_finite,
                t.is_algebraic_over_prime,
                t.tr_deg,
                t.characteristic
            ),
            (true, true, 0, 2)
        );
        let t = field_traits(&FieldDescriptor::function_field(5).unwrap());
        assert_eq!(
            (
                t.is_finite,
                t.is_algebraic_over_prime,
                t.tr_deg,
                t.characteristic
            ),
            (false, false, 1, 5)
        );
        let t = field_traits(&FieldDescriptor::algebraic_infinite(2).unwrap());
        assert_eq!(
            (
                t.is_finite,
                t.is_algebraic_over_prime,
                t.tr_deg,
                t.characteristic
            ),
            (false, true, 0, 2)
        );
    }

    #[test]
    fn descriptor_validation() {
        assert_eq!(FieldDescriptor::finite(4, 1), Err(CoeffError::NotPrime(4)));
        assert_eq!(FieldDescriptor::finite(2, 0), Err(CoeffError::ZeroDegree));
        assert_eq!(
            FieldDescriptor::function_field(1),
            Err(CoeffError::NotPrime(1))
        );
        assert_eq!(
            FieldDescriptor::finite(2, 2).unwrap().to_string(),
            "GF(2^2)"
        );
        assert_eq!(
            FieldDescriptor::function_field(3).unwrap().to_string(),
            "GF(3)(t)"
        );
    }
}
