use std::sync::Arc;

use super::prime::{monic_polys, Fp, Poly};
use super::text::{format_poly, parse_poly};
use super::{check_prime, CoeffError, CoeffRing};

/// Largest supported field order p^n.
pub const MAX_FIELD_ORDER: u64 = 1 << 20;

/// Variable used for the canonical text form of GF(p^n) elements with n > 1.
const GENERATOR_NAME: &str = "a";

/// GF(p^n) realised as GF(p)[x] / (f) where f is the smallest monic
/// irreducible of degree n, ordering candidates by their lower coefficients
/// read as a base-p number with the x^(n-1) coefficient most significant.
#[derive(Clone, Debug)]
pub struct GaloisField {
    inner: Arc<Inner>,
}

#[derive(Debug, PartialEq, Eq)]
struct Inner {
    fp: Fp,
    degree: u32,
    modulus: Poly,
    order: u64,
}

/// Element of GF(p^n): exactly n residues mod p, ascending powers of the
/// generator.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FfElement {
    coeffs: Vec<u64>,
}

impl FfElement {
    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }
}

impl PartialEq for GaloisField {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || self.inner == other.inner
    }
}

impl Eq for GaloisField {}

impl GaloisField {
    pub fn new(p: u64, n: u32) -> Result<Self, CoeffError> {
        check_prime(p)?;
        if n == 0 {
            return Err(CoeffError::ZeroDegree);
        }
        let order = p.checked_pow(n).filter(|&q| q <= MAX_FIELD_ORDER).ok_or(
            CoeffError::BudgetExceeded {
                p,
                n,
                limit: MAX_FIELD_ORDER,
            },
        )?;
        let fp = Fp::new_unchecked(p);
        let modulus = monic_polys(p, n as usize)
            .find(|f| fp.is_irreducible(f))
            .expect("an irreducible polynomial exists in every degree");
        Ok(GaloisField {
            inner: Arc::new(Inner {
                fp,
                degree: n,
                modulus,
                order,
            }),
        })
    }

    pub fn prime_field(&self) -> Fp {
        self.inner.fp
    }

    pub fn p(&self) -> u64 {
        self.inner.fp.p()
    }

    pub fn degree(&self) -> u32 {
        self.inner.degree
    }

    pub fn order(&self) -> u64 {
        self.inner.order
    }

    pub fn modulus(&self) -> &Poly {
        &self.inner.modulus
    }

    /// Builds an element from residues; fails if it has the wrong length.
    pub fn element(&self, coeffs: &[u64]) -> Result<FfElement, CoeffError> {
        if coeffs.len() != self.inner.degree as usize {
            return Err(CoeffError::MixedContexts);
        }
        Ok(FfElement {
            coeffs: coeffs.iter().map(|c| c % self.p()).collect(),
        })
    }

    /// The class of x.
    pub fn generator(&self) -> FfElement {
        self.reduce(&Poly::x())
    }

    /// Bijection `0..order` → field, base-p digits as coefficients.
    pub fn from_code(&self, mut code: u64) -> FfElement {
        let p = self.p();
        let coeffs = (0..self.inner.degree)
            .map(|_| {
                let c = code % p;
                code /= p;
                c
            })
            .collect();
        FfElement { coeffs }
    }

    pub fn to_code(&self, a: &FfElement) -> u64 {
        a.coeffs.iter().rev().fold(0, |acc, &c| acc * self.p() + c)
    }

    pub fn elements(&self) -> impl Iterator<Item = FfElement> + '_ {
        (0..self.order()).map(|c| self.from_code(c))
    }

    pub fn contains(&self, a: &FfElement) -> bool {
        a.coeffs.len() == self.inner.degree as usize && a.coeffs.iter().all(|&c| c < self.p())
    }

    fn check(&self, a: &FfElement) -> Result<(), CoeffError> {
        if self.contains(a) {
            Ok(())
        } else {
            Err(CoeffError::MixedContexts)
        }
    }

    pub fn checked_add(&self, a: &FfElement, b: &FfElement) -> Result<FfElement, CoeffError> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.add(a, b))
    }

    pub fn checked_mul(&self, a: &FfElement, b: &FfElement) -> Result<FfElement, CoeffError> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.mul(a, b))
    }

    pub fn checked_inv(&self, a: &FfElement) -> Result<FfElement, CoeffError> {
        self.check(a)?;
        self.unit_inverse(a).ok_or(CoeffError::DivisionByZero)
    }

    pub fn checked_pow(&self, a: &FfElement, exp: u64) -> Result<FfElement, CoeffError> {
        self.check(a)?;
        Ok(self.pow(a, exp))
    }

    fn to_poly(&self, a: &FfElement) -> Poly {
        Poly::from_coeffs(self.p(), a.coeffs.iter().copied())
    }

    fn reduce(&self, poly: &Poly) -> FfElement {
        let r = self
            .inner
            .fp
            .poly_rem(poly, &self.inner.modulus)
            .expect("modulus is nonzero");
        FfElement {
            coeffs: (0..self.inner.degree as usize)
                .map(|i| r.coeff(i))
                .collect(),
        }
    }
}

impl CoeffRing for GaloisField {
    type Elem = FfElement;

    fn zero(&self) -> FfElement {
        FfElement {
            coeffs: vec![0; self.inner.degree as usize],
        }
    }

    fn one(&self) -> FfElement {
        let mut z = self.zero();
        z.coeffs[0] = 1;
        z
    }

    fn from_i64(&self, v: i64) -> FfElement {
        let mut z = self.zero();
        z.coeffs[0] = self.inner.fp.from_i64(v);
        z
    }

    fn add(&self, a: &FfElement, b: &FfElement) -> FfElement {
        let fp = self.inner.fp;
        FfElement {
            coeffs: a
                .coeffs
                .iter()
                .zip(&b.coeffs)
                .map(|(&x, &y)| fp.add(x, y))
                .collect(),
        }
    }

    fn neg(&self, a: &FfElement) -> FfElement {
        let fp = self.inner.fp;
        FfElement {
            coeffs: a.coeffs.iter().map(|&x| fp.neg(x)).collect(),
        }
    }

    fn mul(&self, a: &FfElement, b: &FfElement) -> FfElement {
        if self.inner.degree == 1 {
            return FfElement {
                coeffs: vec![self.inner.fp.mul(a.coeffs[0], b.coeffs[0])],
            };
        }
        let prod = self.inner.fp.poly_mul(&self.to_poly(a), &self.to_poly(b));
        self.reduce(&prod)
    }

    fn is_zero(&self, a: &FfElement) -> bool {
        a.coeffs.iter().all(|&c| c == 0)
    }

    fn unit_inverse(&self, a: &FfElement) -> Option<FfElement> {
        if self.is_zero(a) {
            None
        } else {
            // a^(q-2) since the multiplicative group has order q - 1
            Some(self.pow(a, self.order() - 2))
        }
    }

    fn exact_div(&self, a: &FfElement, b: &FfElement) -> Option<FfElement> {
        self.unit_inverse(b).map(|binv| self.mul(a, &binv))
    }

    fn characteristic(&self) -> u64 {
        self.p()
    }

    fn is_field(&self) -> bool {
        true
    }

    fn format_elem(&self, a: &FfElement) -> String {
        if self.inner.degree == 1 {
            a.coeffs[0].to_string()
        } else {
            format_poly(&self.to_poly(a), GENERATOR_NAME)
        }
    }

    fn parse_elem(&self, text: &str) -> Result<FfElement, CoeffError> {
        let poly = parse_poly(text, GENERATOR_NAME, self.inner.fp)?;
        Ok(self.reduce(&poly))
    }

    fn name(&self) -> String {
        if self.inner.degree == 1 {
            format!("GF({})", self.p())
        } else {
            format!("GF({}^{})", self.p(), self.inner.degree)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_two() {
        let f = GaloisField::new(2, 1).unwrap();
        assert_eq!(f.order(), 2);
        let elems: Vec<_> = f.elements().map(|e| f.format_elem(&e)).collect();
        assert_eq!(elems, vec!["0", "1"]);
    }

    #[test]
    fn gf4_modulus_and_generator() {
        let f = GaloisField::new(2, 2).unwrap();
        assert_eq!(f.modulus(), &Poly::from_coeffs(2, [1, 1, 1]));
        let g = f.generator();
        // x^2 = x + 1 mod x^2 + x + 1
        assert_eq!(f.mul(&g, &g), f.add(&g, &f.one()));
        assert_eq!(f.pow(&g, 4), g);
    }

    #[test]
    fn inverse_mod_five() {
        let f = GaloisField::new(5, 1).unwrap();
        assert_eq!(f.checked_inv(&f.from_i64(2)).unwrap(), f.from_i64(3));
        assert_eq!(f.checked_inv(&f.zero()), Err(CoeffError::DivisionByZero));
    }

    #[test]
    fn construction_errors() {
        assert_eq!(GaloisField::new(6, 1).unwrap_err(), CoeffError::NotPrime(6));
        assert!(matches!(
            GaloisField::new(2, 21),
            Err(CoeffError::BudgetExceeded { .. })
        ));
        assert!(GaloisField::new(2, 20).is_ok());
    }

    #[test]
    fn mixed_contexts() {
        let f4 = GaloisField::new(2, 2).unwrap();
        let f8 = GaloisField::new(2, 3).unwrap();
        let a = f8.generator();
        assert_eq!(
            f4.checked_add(&a, &f4.one()),
            Err(CoeffError::MixedContexts)
        );
        assert_eq!(
            f4.checked_mul(&f4.one(), &a),
            Err(CoeffError::MixedContexts)
        );
    }

    #[test]
    fn text_round_trip() {
        let f = GaloisField::new(3, 2).unwrap();
        for e in f.elements() {
            let s = f.format_elem(&e);
            assert_eq!(f.parse_elem(&s).unwrap(), e, "{s}");
        }
    }
}
