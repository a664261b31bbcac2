//! Text form of group-ring elements: `coeff*label ± …`, e.g. `1 - g + g^4`
//! over `C5` or `(t + 1)*g^2 + 1` over `GF(2)(t)C3`.

use std::sync::Arc;

use super::{GroupRingElement, GroupRingError};
use crate::coeff::CoeffRing;
use crate::groups::FiniteGroup;

fn needs_parens(s: &str) -> bool {
    s.contains([' ', '+', '-', '*', '/', '^', '('])
}

pub(super) fn format_element<R: CoeffRing>(x: &GroupRingElement<R>) -> String {
    if x.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (g, c) in x.terms() {
        let text = x.ring().format_elem(c);
        let (negative, magnitude) = match text.strip_prefix('-') {
            Some(rest) => (true, rest.to_string()),
            None => (false, text),
        };
        let coeff = if needs_parens(&magnitude) {
            format!("({magnitude})")
        } else {
            magnitude
        };
        let term = match (g, coeff.as_str()) {
            (0, _) => coeff,
            (_, "1") => x.group().label(g).to_string(),
            _ => format!("{coeff}*{}", x.group().label(g)),
        };
        match (out.is_empty(), negative) {
            (true, true) => out.push('-'),
            (true, false) => {}
            (false, true) => out.push_str(" - "),
            (false, false) => out.push_str(" + "),
        }
        out.push_str(&term);
    }
    out
}

/// Parses the text form produced by `Display`.
pub fn parse_element<R: CoeffRing>(
    group: Arc<FiniteGroup>,
    ring: R,
    text: &str,
) -> Result<GroupRingElement<R>, GroupRingError> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(GroupRingError::Parse("empty element".into()));
    }
    let mut terms = Vec::new();
    for (negative, term) in split_terms(&compact)? {
        let (g, c) = parse_term(&group, &ring, term)?;
        terms.push((g, if negative { ring.neg(&c) } else { c }));
    }
    GroupRingElement::from_terms(group, ring, terms)
}

fn split_terms(s: &str) -> Result<Vec<(bool, &str)>, GroupRingError> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    let mut negative = false;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            '+' | '-' if depth == 0 => {
                if i > start {
                    out.push((negative, &s[start..i]));
                } else if i > 0 {
                    return Err(GroupRingError::Parse(format!("dangling sign at {i}")));
                }
                negative = ch == '-';
                start = i + 1;
            }
            _ => {}
        }
        if depth < 0 {
            return Err(GroupRingError::Parse(format!("unbalanced ')' at {i}")));
        }
    }
    if depth != 0 {
        return Err(GroupRingError::Parse("unbalanced '('".into()));
    }
    if start >= s.len() {
        return Err(GroupRingError::Parse("element ends with a sign".into()));
    }
    out.push((negative, &s[start..]));
    Ok(out)
}

fn parse_term<R: CoeffRing>(
    group: &FiniteGroup,
    ring: &R,
    term: &str,
) -> Result<(usize, R::Elem), GroupRingError> {
    if let Some(g) = group.index_of(term) {
        return Ok((g, ring.one()));
    }
    let mut depth = 0i32;
    let mut last_star = None;
    for (i, ch) in term.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            '*' if depth == 0 => last_star = Some(i),
            _ => {}
        }
    }
    if let Some(i) = last_star {
        let label = &term[i + 1..];
        if let Some(g) = group.index_of(label) {
            return Ok((g, ring.parse_elem(&term[..i])?));
        }
    }
    match ring.parse_elem(term) {
        Ok(c) => Ok((0, c)),
        Err(_) => Err(GroupRingError::UnknownElement(term.to_string())),
    }
}
