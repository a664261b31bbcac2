use super::prime::{Fp, Poly};
use super::text::{format_poly, parse_poly, strip_parens};
use super::{check_prime, CoeffError, CoeffRing};

const VARIABLE: &str = "t";

/// The rational function field GF(p)(t).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FunctionField {
    fp: Fp,
}

/// A reduced fraction `num / den` with `den` monic and coprime to `num`.
/// Zero is `0 / 1`, so equality of values is equality of fields.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }
}

impl FunctionField {
    pub fn new(p: u64) -> Result<Self, CoeffError> {
        check_prime(p)?;
        Ok(FunctionField {
            fp: Fp::new_unchecked(p),
        })
    }

    pub fn p(&self) -> u64 {
        self.fp.p()
    }

    pub fn prime_field(&self) -> Fp {
        self.fp
    }

    /// Canonical form of `num / den`.
    pub fn normalize(&self, num: &Poly, den: &Poly) -> Result<RatFunc, CoeffError> {
        if den.is_zero() {
            return Err(CoeffError::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(self.zero());
        }
        let fp = self.fp;
        let g = fp.poly_gcd(num, den);
        let (n, _) = fp.poly_divrem(num, &g).expect("gcd is nonzero");
        let (d, _) = fp.poly_divrem(den, &g).expect("gcd is nonzero");
        let lc_inv = fp.inv(d.leading().expect("nonzero")).expect("nonzero");
        Ok(RatFunc {
            num: fp.poly_scale(&n, lc_inv),
            den: fp.poly_scale(&d, lc_inv),
        })
    }

    pub fn from_poly(&self, num: Poly) -> RatFunc {
        RatFunc {
            num,
            den: Poly::one(),
        }
    }

    /// The transcendental `t`.
    pub fn t(&self) -> RatFunc {
        self.from_poly(Poly::x())
    }

    pub fn checked_inv(&self, a: &RatFunc) -> Result<RatFunc, CoeffError> {
        self.unit_inverse(a).ok_or(CoeffError::DivisionByZero)
    }

    /// `a^e` for a signed exponent; `None` for a negative power of zero.
    pub fn pow_signed(&self, a: &RatFunc, exp: i64) -> Option<RatFunc> {
        let base = if exp < 0 {
            self.unit_inverse(a)?
        } else {
            a.clone()
        };
        Some(self.pow(&base, exp.unsigned_abs()))
    }
}

impl CoeffRing for FunctionField {
    type Elem = RatFunc;

    fn zero(&self) -> RatFunc {
        self.from_poly(Poly::zero())
    }

    fn one(&self) -> RatFunc {
        self.from_poly(Poly::one())
    }

    fn from_i64(&self, v: i64) -> RatFunc {
        self.from_poly(Poly::constant(self.p(), self.fp.from_i64(v)))
    }

    fn add(&self, a: &RatFunc, b: &RatFunc) -> RatFunc {
        let fp = self.fp;
        if a.den == b.den {
            return self
                .normalize(&fp.poly_add(&a.num, &b.num), &a.den)
                .expect("nonzero denominator");
        }
        let num = fp.poly_add(&fp.poly_mul(&a.num, &b.den), &fp.poly_mul(&b.num, &a.den));
        let den = fp.poly_mul(&a.den, &b.den);
        self.normalize(&num, &den).expect("nonzero denominator")
    }

    fn neg(&self, a: &RatFunc) -> RatFunc {
        RatFunc {
            num: self.fp.poly_neg(&a.num),
            den: a.den.clone(),
        }
    }

    fn mul(&self, a: &RatFunc, b: &RatFunc) -> RatFunc {
        if a.num.is_zero() || b.num.is_zero() {
            return self.zero();
        }
        let fp = self.fp;
        self.normalize(&fp.poly_mul(&a.num, &b.num), &fp.poly_mul(&a.den, &b.den))
            .expect("nonzero denominator")
    }

    fn is_zero(&self, a: &RatFunc) -> bool {
        a.num.is_zero()
    }

    fn unit_inverse(&self, a: &RatFunc) -> Option<RatFunc> {
        if a.num.is_zero() {
            None
        } else {
            Some(self.normalize(&a.den, &a.num).expect("nonzero numerator"))
        }
    }

    fn exact_div(&self, a: &RatFunc, b: &RatFunc) -> Option<RatFunc> {
        self.unit_inverse(b).map(|binv| self.mul(a, &binv))
    }

    fn characteristic(&self) -> u64 {
        self.p()
    }

    fn is_field(&self) -> bool {
        true
    }

    fn format_elem(&self, a: &RatFunc) -> String {
        if a.den.is_one() {
            format_poly(&a.num, VARIABLE)
        } else {
            format!(
                "({})/({})",
                format_poly(&a.num, VARIABLE),
                format_poly(&a.den, VARIABLE)
            )
        }
    }

    fn parse_elem(&self, text: &str) -> Result<RatFunc, CoeffError> {
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let body = strip_parens(&compact);
        let mut depth = 0i32;
        let slash = body.char_indices().find_map(|(i, ch)| {
            match ch {
                '(' => depth += 1,
                ')' => depth -= 1,
                '/' if depth == 0 => return Some(i),
                _ => {}
            }
            None
        });
        match slash {
            None => Ok(self.from_poly(parse_poly(body, VARIABLE, self.fp)?)),
            Some(i) => {
                let num = parse_poly(&body[..i], VARIABLE, self.fp)?;
                let den = parse_poly(&body[i + 1..], VARIABLE, self.fp)?;
                self.normalize(&num, &den)
            }
        }
    }

    fn name(&self) -> String {
        format!("GF({})(t)", self.p())
    }
}
