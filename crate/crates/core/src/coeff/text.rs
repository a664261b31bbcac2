//! Canonical text form of univariate polynomials, used for field
//! coefficients in the CLI element format.

use super::prime::{Fp, Poly};
use super::CoeffError;

/// Renders a polynomial in descending degree, e.g. `t^2 + 2*t + 1`.
pub fn format_poly(poly: &Poly, var: &str) -> String {
    if poly.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (deg, &c) in poly.coeffs().iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        if !out.is_empty() {
            out.push_str(" + ");
        }
        let mono = match deg {
            0 => String::new(),
            1 => var.to_string(),
            d => format!("{var}^{d}"),
        };
        match (c, deg) {
            (_, 0) => out.push_str(&c.to_string()),
            (1, _) => out.push_str(&mono),
            _ => out.push_str(&format!("{c}*{mono}")),
        }
    }
    out
}

/// Parses a sum of terms `c*v^k`, `c v^k`, `v^k`, `v`, `c` in the variable
/// `var`, reducing coefficients mod `p`. One level of surrounding
/// parentheses is accepted.
pub fn parse_poly(text: &str, var: &str, fp: Fp) -> Result<Poly, CoeffError> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let body = strip_parens(&compact);
    if body.is_empty() {
        return Err(CoeffError::Parse(format!("empty polynomial in {text:?}")));
    }
    let mut acc = Poly::zero();
    for (negative, term) in split_signed_terms(body)? {
        let mono = parse_monomial(term, var, fp).map_err(|e| match e {
            CoeffError::Parse(msg) => CoeffError::Parse(format!("{msg} in {text:?}")),
            other => other,
        })?;
        acc = if negative {
            fp.poly_sub(&acc, &mono)
        } else {
            fp.poly_add(&acc, &mono)
        };
    }
    Ok(acc)
}

pub(crate) fn strip_parens(s: &str) -> &str {
    let mut s = s;
    while s.starts_with('(') && s.ends_with(')') && matching_close(s, 0) == Some(s.len() - 1) {
        s = &s[1..s.len() - 1];
    }
    s
}

fn matching_close(s: &str, open: usize) -> Option<usize> {
    let mut depth = 0i32;
    for (i, ch) in s.char_indices().skip(open) {
        match ch {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth == 0 {
                    return Some(i);
                }
            }
            _ => {}
        }
    }
    None
}

fn split_signed_terms(s: &str) -> Result<Vec<(bool, &str)>, CoeffError> {
    let mut terms = Vec::new();
    let mut negative = false;
    let mut start = 0;
    let mut depth = 0i32;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            '+' | '-' if depth == 0 => {
                if i > start {
                    terms.push((negative, &s[start..i]));
                } else if i > 0 {
                    return Err(CoeffError::Parse(format!("dangling sign at {i}")));
                }
                negative = ch == '-';
                start = i + 1;
            }
            _ => {}
        }
    }
    if start >= s.len() {
        return Err(CoeffError::Parse("expression ends with a sign".into()));
    }
    terms.push((negative, &s[start..]));
    Ok(terms)
}

fn parse_monomial(term: &str, var: &str, fp: Fp) -> Result<Poly, CoeffError> {
    let digits_end = term
        .find(|c: char| !c.is_ascii_digit())
        .unwrap_or(term.len());
    let coeff = if digits_end == 0 {
        1
    } else {
        let n: u128 = term[..digits_end]
            .parse()
            .map_err(|_| CoeffError::Parse(format!("bad coefficient {term:?}")))?;
        (n % fp.p() as u128) as u64
    };
    let rest = term[digits_end..].trim_start_matches('*');
    if rest.is_empty() {
        return Ok(Poly::constant(fp.p(), coeff));
    }
    let Some(power) = rest.strip_prefix(var) else {
        return Err(CoeffError::Parse(format!(
            "unexpected {rest:?}, expected variable {var}"
        )));
    };
    let exp = if power.is_empty() {
        1
    } else {
        power
            .strip_prefix('^')
            .and_then(|e| e.parse::<u64>().ok())
            .ok_or_else(|| CoeffError::Parse(format!("bad exponent {power:?}")))?
    };
    let mono = fp.poly_pow(&Poly::x(), exp);
    Ok(fp.poly_scale(&mono, coeff))
}
