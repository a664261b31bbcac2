//! The group and field mini-languages.
//!
//! Groups: `x`-separated factors, each `C<n>`, `D<n>` (order 2n), `K8`
//! (alias `Q8`), `Q16`, `S3` or `E2^<k>`, optionally raised to a power
//! (`C2^3` is `C2xC2xC2`). `@path.json` reads a table or a structured
//! group; `infinite:<kind>` describes an infinite group for the
//! hyperbolicity verdicts only.
//!
//! Fields: `GF(p)`, `GF(p^n)`, `GF(q)` with `q` a prime power,
//! `GF(p)(t)`, `algcl(p)`.

use std::collections::{BTreeMap, HashMap};
use std::path::Path;

use serde::Deserialize;
use thiserror::Error;
use unitgroup_core::coeff::{is_prime, FieldDescriptor};
use unitgroup_core::groups::{
    group_from_table, BuiltinGroup, FiniteGroup, GroupError, StructuredGroup,
};

#[derive(Debug, Error)]
pub enum SpecError {
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("invalid group: {0}")]
    Validation(#[from] GroupError),
    #[error("cannot read {path}: {message}")]
    File { path: String, message: String },
}

fn parse_err(position: usize, message: impl Into<String>) -> SpecError {
    SpecError::Parse {
        position,
        message: message.into(),
    }
}

#[derive(Debug, Clone)]
pub enum GroupSpec {
    Finite(FiniteGroup),
    Structured(StructuredGroup),
    /// Only the torsion facts the hyperbolicity rules consume.
    Infinite {
        has_torsion: bool,
        has_coprime_torsion: bool,
    },
}

pub fn parse_group_spec(text: &str) -> Result<GroupSpec, SpecError> {
    let trimmed = text.trim();
    if let Some(path) = trimmed.strip_prefix('@') {
        return read_group_file(Path::new(path));
    }
    if let Some(kind) = trimmed.strip_prefix("infinite:") {
        let (has_torsion, has_coprime_torsion) = match kind {
            "torsion-free" => (false, false),
            "p-torsion" => (true, false),
            "coprime-torsion" => (true, true),
            _ => {
                return Err(parse_err(
                    "infinite:".len(),
                    "expected torsion-free, p-torsion or coprime-torsion",
                ))
            }
        };
        return Ok(GroupSpec::Infinite {
            has_torsion,
            has_coprime_torsion,
        });
    }
    Ok(GroupSpec::Finite(parse_finite_group(trimmed)?))
}

/// A finite group from the factor grammar (no files, no descriptors).
pub fn parse_finite_group(text: &str) -> Result<FiniteGroup, SpecError> {
    let mut factors = Vec::new();
    let mut offset = 0;
    for part in text.split('x') {
        factors.extend(parse_factor(part, offset)?);
        offset += part.len() + 1;
    }
    let group = match factors.len() {
        1 => factors.remove(0),
        _ => BuiltinGroup::DirectProduct(factors),
    };
    Ok(group.build()?)
}

fn number(s: &str, position: usize) -> Result<usize, SpecError> {
    s.parse()
        .map_err(|_| parse_err(position, format!("expected a number, found {s:?}")))
}

fn parse_factor(part: &str, offset: usize) -> Result<Vec<BuiltinGroup>, SpecError> {
    if part.is_empty() {
        return Err(parse_err(offset, "empty factor"));
    }
    if let Some(k) = part.strip_prefix("E2^") {
        let k = number(k, offset + 3)?;
        let k = u32::try_from(k).map_err(|_| parse_err(offset + 3, "exponent too large"))?;
        return Ok(vec![BuiltinGroup::ElemAbelian2(k)]);
    }
    let (base, power) = match part.split_once('^') {
        Some((b, p)) => (b, number(p, offset + b.len() + 1)?),
        None => (part, 1),
    };
    if power == 0 {
        return Err(parse_err(offset + base.len() + 1, "power must be positive"));
    }
    let group = match base {
        "K8" | "Q8" => BuiltinGroup::Quaternion8,
        "Q16" => BuiltinGroup::GenQuaternion16,
        "S3" => BuiltinGroup::Symmetric3,
        _ if base.starts_with('C') => BuiltinGroup::Cyclic(positive(&base[1..], offset + 1)?),
        _ if base.starts_with('D') => BuiltinGroup::Dihedral(positive(&base[1..], offset + 1)?),
        _ => {
            return Err(parse_err(
                offset,
                format!("unknown group {base:?}; expected C<n>, D<n>, K8, Q8, Q16, S3 or E2^<k>"),
            ))
        }
    };
    if power > 16 {
        return Err(parse_err(offset + base.len() + 1, "power too large"));
    }
    Ok(vec![group; power])
}

fn positive(s: &str, position: usize) -> Result<usize, SpecError> {
    match number(s, position)? {
        0 => Err(parse_err(position, "order must be positive")),
        n => Ok(n),
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct TableFile {
    table: Vec<Vec<usize>>,
    #[serde(default)]
    labels: Option<Vec<String>>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum TorsionSpec {
    Name(String),
    Table(TableFile),
}

#[derive(Deserialize)]
#[serde(untagged)]
enum ActionSpec {
    /// Images of all torsion elements, by index.
    Permutation(Vec<usize>),
    /// `identity`, `inversion` or `conj:<label>`.
    Named(String),
    /// Images of generators by label, extended multiplicatively.
    Generators {
        generators: BTreeMap<String, String>,
    },
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct StructuredFile {
    torsion: TorsionSpec,
    free_rank: usize,
    #[serde(default)]
    actions: Vec<ActionSpec>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum GroupFile {
    Structured(StructuredFile),
    Table(TableFile),
}

fn table_group(t: TableFile) -> Result<FiniteGroup, SpecError> {
    Ok(match t.labels {
        Some(labels) => FiniteGroup::from_table(&t.table, labels)?,
        None => group_from_table(&t.table)?,
    })
}

fn read_group_file(path: &Path) -> Result<GroupSpec, SpecError> {
    let file_err = |message: String| SpecError::File {
        path: path.display().to_string(),
        message,
    };
    let text = std::fs::read_to_string(path).map_err(|e| file_err(e.to_string()))?;
    let parsed: GroupFile = serde_json::from_str(&text).map_err(|e| {
        file_err(format!(
            "{e}; expected {{\"table\": [[...]], \"labels\": [...]}} or {{\"torsion\": ..., \"free_rank\": k, \"actions\": [...]}}"
        ))
    })?;
    match parsed {
        GroupFile::Table(t) => Ok(GroupSpec::Finite(table_group(t)?)),
        GroupFile::Structured(s) => {
            let torsion = match s.torsion {
                TorsionSpec::Name(name) => parse_finite_group(&name)?,
                TorsionSpec::Table(t) => table_group(t)?,
            };
            let actions = s
                .actions
                .into_iter()
                .enumerate()
                .map(|(k, a)| {
                    resolve_action(&torsion, a).map_err(|m| file_err(format!("action {k}: {m}")))
                })
                .collect::<Result<Vec<_>, _>>()?;
            Ok(GroupSpec::Structured(StructuredGroup::new(
                torsion,
                s.free_rank,
                actions,
            )?))
        }
    }
}

fn lookup(t: &FiniteGroup, label: &str) -> Result<usize, String> {
    t.index_of(label)
        .ok_or_else(|| format!("unknown element {label:?}"))
}

fn resolve_action(t: &FiniteGroup, a: ActionSpec) -> Result<Vec<usize>, String> {
    match a {
        ActionSpec::Permutation(p) => Ok(p),
        ActionSpec::Named(name) => match name.as_str() {
            "identity" => Ok(t.elements().collect()),
            "inversion" => Ok(t.elements().map(|x| t.inv(x)).collect()),
            _ => match name.strip_prefix("conj:") {
                Some(label) => Ok(t.conjugation(lookup(t, label)?)),
                None => Err(format!(
                    "unknown action {name:?}; expected identity, inversion or conj:<label>"
                )),
            },
        },
        ActionSpec::Generators { generators } => {
            let images: Vec<(usize, usize)> = generators
                .iter()
                .map(|(from, to)| Ok((lookup(t, from)?, lookup(t, to)?)))
                .collect::<Result<_, String>>()?;
            extend_homomorphism(t, &images)
        }
    }
}

/// Extends generator images to a map on the whole group, checking that the
/// generators generate and that the extension is well defined.
fn extend_homomorphism(t: &FiniteGroup, images: &[(usize, usize)]) -> Result<Vec<usize>, String> {
    let mut phi: HashMap<usize, usize> = HashMap::from([(t.identity(), t.identity())]);
    let mut frontier = vec![t.identity()];
    while let Some(x) = frontier.pop() {
        for &(g, hg) in images {
            let y = t.mul(x, g);
            let image = t.mul(phi[&x], hg);
            match phi.get(&y) {
                Some(&existing) if existing != image => {
                    return Err(format!(
                        "generator images do not define a homomorphism at {}",
                        t.label(y)
                    ));
                }
                Some(_) => {}
                None => {
                    phi.insert(y, image);
                    frontier.push(y);
                }
            }
        }
    }
    if phi.len() != t.order() {
        return Err("the listed generators do not generate the torsion group".into());
    }
    Ok(t.elements().map(|x| phi[&x]).collect())
}

pub fn parse_field_spec(text: &str) -> Result<FieldDescriptor, SpecError> {
    let s = text.trim();
    if let Some(inner) = s.strip_prefix("algcl(").and_then(|r| r.strip_suffix(')')) {
        let p = prime(inner, 6)?;
        return Ok(FieldDescriptor::algebraic_infinite(p).expect("checked prime"));
    }
    let Some(rest) = s.strip_prefix("GF(") else {
        return Err(parse_err(
            0,
            "expected GF(p), GF(p^n), GF(p)(t) or algcl(p)",
        ));
    };
    let close = rest
        .find(')')
        .ok_or_else(|| parse_err(s.len(), "missing ')'"))?;
    let (inner, tail) = (&rest[..close], &rest[close + 1..]);
    match tail {
        "" => {
            let (p, n) = match inner.split_once('^') {
                Some((p, n)) => {
                    let n = u32::try_from(number(n, 4 + p.len())?)
                        .map_err(|_| parse_err(4 + p.len(), "degree too large"))?;
                    (prime(p, 3)?, n)
                }
                None => prime_power(inner, 3)?,
            };
            if n == 0 {
                return Err(parse_err(4 + inner.len(), "degree must be positive"));
            }
            Ok(FieldDescriptor::finite(p, n).expect("checked prime"))
        }
        "(t)" => {
            if inner.contains('^') || !is_prime(number(inner, 3)? as u64) {
                return Err(parse_err(
                    3,
                    "function fields are only supported over prime fields GF(p)(t)",
                ));
            }
            Ok(FieldDescriptor::function_field(number(inner, 3)? as u64).expect("checked prime"))
        }
        _ => Err(parse_err(
            4 + close,
            format!("unexpected {tail:?} after GF(...)"),
        )),
    }
}

fn prime(s: &str, position: usize) -> Result<u64, SpecError> {
    let p = number(s, position)? as u64;
    if is_prime(p) {
        Ok(p)
    } else {
        Err(SpecError::NotPrime(p))
    }
}

fn prime_power(s: &str, position: usize) -> Result<(u64, u32), SpecError> {
    let q = number(s, position)? as u64;
    let p = (2..=q)
        .find(|d| q.is_multiple_of(*d))
        .ok_or(SpecError::NotPrime(q))?;
    let mut rest = q;
    let mut n = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        n += 1;
    }
    if rest != 1 {
        return Err(parse_err(position, format!("{q} is not a prime power")));
    }
    Ok((p, n))
}
