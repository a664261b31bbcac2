use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{CoeffError, CoeffRing};

/// The ring ℤ with arbitrary-precision elements.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Integers;

impl CoeffRing for Integers {
    type Elem = BigInt;

    fn zero(&self) -> BigInt {
        BigInt::zero()
    }

    fn one(&self) -> BigInt {
        BigInt::one()
    }

    fn from_i64(&self, v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }

    fn neg(&self, a: &BigInt) -> BigInt {
        -a
    }

    fn sub(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a - b
    }

    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }

    fn is_zero(&self, a: &BigInt) -> bool {
        a.is_zero()
    }

    fn unit_inverse(&self, a: &BigInt) -> Option<BigInt> {
        (a.abs().is_one()).then(|| a.clone())
    }

    fn exact_div(&self, a: &BigInt, b: &BigInt) -> Option<BigInt> {
        if b.is_zero() {
            return None;
        }
        let (q, r) = (a / b, a % b);
        r.is_zero().then_some(q)
    }

    fn characteristic(&self) -> u64 {
        0
    }

    fn is_field(&self) -> bool {
        false
    }

    fn format_elem(&self, a: &BigInt) -> String {
        a.to_string()
    }

    fn parse_elem(&self, text: &str) -> Result<BigInt, CoeffError> {
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let body = super::text::strip_parens(&compact);
        body.parse()
            .map_err(|_| CoeffError::Parse(format!("bad integer {text:?}")))
    }

    fn name(&self) -> String {
        "Z".to_string()
    }
}
