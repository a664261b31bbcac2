//! Residues mod a prime and dense polynomials over GF(p).

use serde::Serialize;

/// Trial-division primality test. Inputs here are desk-scale.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n.is_multiple_of(2) {
        return false;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Polynomial over GF(p) in ascending-degree order with no trailing zeros.
/// The zero polynomial has no coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Poly {
    coeffs: Vec<u64>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly { coeffs: vec![1] }
    }

    /// The monomial `t`.
    pub fn x() -> Self {
        Poly { coeffs: vec![0, 1] }
    }

    /// Builds a polynomial from ascending coefficients, reducing them mod `p`.
    pub fn from_coeffs(p: u64, coeffs: impl IntoIterator<Item = u64>) -> Self {
        let mut poly = Poly {
            coeffs: coeffs.into_iter().map(|c| c % p).collect(),
        };
        poly.trim();
        poly
    }

    pub fn constant(p: u64, c: u64) -> Self {
        Self::from_coeffs(p, [c])
    }

    fn trim(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    /// Coefficient of `t^i` (zero past the degree).
    pub fn coeff(&self, i: usize) -> u64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn leading(&self) -> Option<u64> {
        self.coeffs.last().copied()
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == Some(1)
    }
}

/// Arithmetic in the prime field GF(p) and its polynomial ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Fp {
    p: u64,
}

impl Fp {
    /// Caller guarantees `p` is prime.
    pub(crate) const fn new_unchecked(p: u64) -> Self {
        Fp { p }
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        ((a as u128 + b as u128) % self.p as u128) as u64
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        self.add(a, self.p - b % self.p)
    }

    pub fn neg(&self, a: u64) -> u64 {
        (self.p - a % self.p) % self.p
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.p as u128) as u64
    }

    pub fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1 % self.p;
        base %= self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Inverse of a nonzero residue (Fermat).
    pub fn inv(&self, a: u64) -> Option<u64> {
        if a.is_multiple_of(self.p) {
            None
        } else {
            Some(self.pow(a, self.p - 2))
        }
    }

    /// Reduces a signed integer mod p.
    pub fn from_i64(&self, v: i64) -> u64 {
        v.rem_euclid(self.p as i64) as u64
    }

    pub fn poly_add(&self, a: &Poly, b: &Poly) -> Poly {
        let len = a.coeffs.len().max(b.coeffs.len());
        let coeffs = (0..len).map(|i| self.add(a.coeff(i), b.coeff(i)));
        Poly::from_coeffs(self.p, coeffs)
    }

    pub fn poly_neg(&self, a: &Poly) -> Poly {
        Poly::from_coeffs(self.p, a.coeffs.iter().map(|&c| self.neg(c)))
    }

    pub fn poly_sub(&self, a: &Poly, b: &Poly) -> Poly {
        self.poly_add(a, &self.poly_neg(b))
    }

    pub fn poly_scale(&self, a: &Poly, c: u64) -> Poly {
        Poly::from_coeffs(self.p, a.coeffs.iter().map(|&x| self.mul(x, c)))
    }

    pub fn poly_mul(&self, a: &Poly, b: &Poly) -> Poly {
        if a.is_zero() || b.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![0u64; a.coeffs.len() + b.coeffs.len() - 1];
        for (i, &x) in a.coeffs.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.coeffs.iter().enumerate() {
                out[i + j] = self.add(out[i + j], self.mul(x, y));
            }
        }
        Poly::from_coeffs(self.p, out)
    }

    pub fn poly_pow(&self, a: &Poly, mut exp: u64) -> Poly {
        let mut acc = Poly::one();
        let mut base = a.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.poly_mul(&acc, &base);
            }
            base = self.poly_mul(&base, &base);
            exp >>= 1;
        }
        acc
    }

    /// Euclidean division; `None` when dividing by zero.
    pub fn poly_divrem(&self, a: &Poly, b: &Poly) -> Option<(Poly, Poly)> {
        let db = b.degree()?;
        let lead_inv = self.inv(b.leading()?)?;
        let mut rem = a.coeffs.clone();
        if rem.len() <= db {
            return Some((Poly::zero(), a.clone()));
        }
        let mut quot = vec![0u64; rem.len() - db];
        for k in (0..quot.len()).rev() {
            let c = self.mul(rem[k + db], lead_inv);
            quot[k] = c;
            if c != 0 {
                for (j, &bc) in b.coeffs.iter().enumerate() {
                    rem[k + j] = self.sub(rem[k + j], self.mul(c, bc));
                }
            }
        }
        rem.truncate(db);
        Some((
            Poly::from_coeffs(self.p, quot),
            Poly::from_coeffs(self.p, rem),
        ))
    }

    pub fn poly_rem(&self, a: &Poly, b: &Poly) -> Option<Poly> {
        self.poly_divrem(a, b).map(|(_, r)| r)
    }

    /// Scales to a monic polynomial; zero stays zero.
    pub fn poly_monic(&self, a: &Poly) -> Poly {
        match a.leading() {
            None => Poly::zero(),
            Some(lc) => self.poly_scale(a, self.inv(lc).expect("nonzero leading coefficient")),
        }
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn poly_gcd(&self, a: &Poly, b: &Poly) -> Poly {
        let (mut x, mut y) = (a.clone(), b.clone());
        while !y.is_zero() {
            let r = self.poly_rem(&x, &y).expect("nonzero divisor");
            x = y;
            y = r;
        }
        self.poly_monic(&x)
    }

    /// Whether a polynomial of positive degree has no factor of degree
    /// `1..=deg/2`, tested by trial division over all monic candidates.
    pub fn is_irreducible(&self, f: &Poly) -> bool {
        let Some(deg) = f.degree() else {
            return false;
        };
        if deg == 0 {
            return false;
        }
        for d in 1..=deg / 2 {
            for divisor in monic_polys(self.p, d) {
                if self.poly_rem(f, &divisor).expect("monic divisor").is_zero() {
                    return false;
                }
            }
        }
        true
    }
}

/// All monic polynomials of degree `d` over GF(p), in increasing order of
/// the lower coefficients read as a base-p number with `c_{d-1}` most
/// significant.
pub fn monic_polys(p: u64, d: usize) -> impl Iterator<Item = Poly> {
    let count = p
        .checked_pow(d as u32)
        .expect("monic polynomial count fits u64");
    (0..count).map(move |code| {
        let mut coeffs = vec![0u64; d + 1];
        let mut rest = code;
        for c in coeffs.iter_mut().take(d) {
            *c = rest % p;
            rest /= p;
        }
        coeffs[d] = 1;
        Poly::from_coeffs(p, coeffs)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality() {
        let primes: Vec<u64> = (0..30).filter(|&n| is_prime(n)).collect();
        assert_eq!(primes, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
        assert!(is_prime(1_048_573));
        assert!(!is_prime(1_048_575));
    }

    #[test]
    fn long_division() {
        let f = Fp::new_unchecked(3);
        // t^2 - 1 = (t + 1)(t - 1)
        let a = Poly::from_coeffs(3, [2, 0, 1]);
        let b = Poly::from_coeffs(3, [2, 1]);
        let (q, r) = f.poly_divrem(&a, &b).unwrap();
        assert_eq!(q, Poly::from_coeffs(3, [1, 1]));
        assert!(r.is_zero());
        assert!(f.poly_divrem(&a, &Poly::zero()).is_none());
    }

    #[test]
    fn gcd_is_monic() {
        let f = Fp::new_unchecked(5);
        let a = f.poly_mul(&Poly::from_coeffs(5, [1, 2]), &Poly::from_coeffs(5, [3, 1]));
        let b = f.poly_mul(
            &Poly::from_coeffs(5, [1, 2]),
            &Poly::from_coeffs(5, [4, 0, 1]),
        );
        // common factor 2t + 1, monic form t + 3
        assert_eq!(f.poly_gcd(&a, &b), Poly::from_coeffs(5, [3, 1]));
        assert_eq!(f.poly_gcd(&Poly::zero(), &Poly::zero()), Poly::zero());
    }

    #[test]
    fn irreducible_quadratics_mod_2() {
        let f = Fp::new_unchecked(2);
        let irreducible: Vec<Poly> = monic_polys(2, 2).filter(|q| f.is_irreducible(q)).collect();
        assert_eq!(irreducible, vec![Poly::from_coeffs(2, [1, 1, 1])]);
    }
}
