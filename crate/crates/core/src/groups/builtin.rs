//! The catalog of named groups.

use std::collections::HashMap;
use std::hash::Hash;

use super::{FiniteGroup, GroupError, MAX_GROUP_ORDER};

/// Named groups with their documented isomorphism types and element labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BuiltinGroup {
    /// `C<n>`: labels `1, g, g^2, …`.
    Cyclic(usize),
    /// `D<n>`, dihedral of order 2n: labels `r^k` and `r^ks`.
    Dihedral(usize),
    /// `K8 = ⟨i, j | i² = j² = u, u² = 1, ji = iju⟩`: labels
    /// `1, i, j, ij, u, iu, ju, iju`.
    Quaternion8,
    /// `Q16 = ⟨x, y | x⁸ = 1, y² = x⁴, yxy⁻¹ = x⁻¹⟩`: labels `x^k`, `x^ky`.
    GenQuaternion16,
    /// `E2^k`: labels are products of `e1, …, ek`.
    ElemAbelian2(u32),
    /// `S3`, realised as the dihedral group of order 6.
    Symmetric3,
    /// Direct product; labels are tuples `(a,b,…)` with identity `1`.
    DirectProduct(Vec<BuiltinGroup>),
}

impl BuiltinGroup {
    pub fn order(&self) -> Option<usize> {
        match self {
            BuiltinGroup::Cyclic(n) => Some(*n),
            BuiltinGroup::Dihedral(n) => n.checked_mul(2),
            BuiltinGroup::Quaternion8 => Some(8),
            BuiltinGroup::GenQuaternion16 => Some(16),
            BuiltinGroup::ElemAbelian2(k) => 1usize.checked_shl(*k).filter(|_| *k < 64),
            BuiltinGroup::Symmetric3 => Some(6),
            BuiltinGroup::DirectProduct(fs) => fs
                .iter()
                .try_fold(1usize, |acc, f| f.order().and_then(|o| acc.checked_mul(o))),
        }
    }

    pub fn build(&self) -> Result<FiniteGroup, GroupError> {
        match self.order() {
            Some(n) if n <= MAX_GROUP_ORDER => {}
            Some(n) => return Err(GroupError::TooLarge(n)),
            None => return Err(GroupError::BadParams("order overflows".into())),
        }
        match self {
            BuiltinGroup::Cyclic(0) => Err(GroupError::BadParams(
                "cyclic order must be positive".into(),
            )),
            BuiltinGroup::Cyclic(n) => Ok(cyclic(*n)),
            BuiltinGroup::Dihedral(0) => Err(GroupError::BadParams(
                "dihedral degree must be positive".into(),
            )),
            BuiltinGroup::Dihedral(n) => Ok(dihedral(*n)),
            BuiltinGroup::Quaternion8 => Ok(quaternion8()),
            BuiltinGroup::GenQuaternion16 => Ok(gen_quaternion16()),
            BuiltinGroup::ElemAbelian2(k) => Ok(elem_abelian2(*k)),
            BuiltinGroup::Symmetric3 => Ok(dihedral(3)),
            BuiltinGroup::DirectProduct(fs) => {
                if fs.is_empty() {
                    return Err(GroupError::BadParams("empty direct product".into()));
                }
                let built = fs
                    .iter()
                    .map(|f| f.build())
                    .collect::<Result<Vec<_>, _>>()?;
                direct_product(&built.iter().collect::<Vec<_>>())
            }
        }
    }
}

/// Looks up a builtin by name: `cyclic n`, `dihedral n`, `quaternion8`,
/// `genquaternion16`, `elemabelian2 k`, `symmetric3`.
pub fn builtin(name: &str, params: &[usize]) -> Result<FiniteGroup, GroupError> {
    let arity = |k: usize| {
        if params.len() == k {
            Ok(())
        } else {
            Err(GroupError::BadParams(format!(
                "{name} takes {k} parameter(s), got {}",
                params.len()
            )))
        }
    };
    let spec = match name {
        "cyclic" => arity(1).map(|_| BuiltinGroup::Cyclic(params[0]))?,
        "dihedral" => arity(1).map(|_| BuiltinGroup::Dihedral(params[0]))?,
        "quaternion8" => arity(0).map(|_| BuiltinGroup::Quaternion8)?,
        "genquaternion16" => arity(0).map(|_| BuiltinGroup::GenQuaternion16)?,
        "elemabelian2" => {
            arity(1)?;
            let k = u32::try_from(params[0])
                .map_err(|_| GroupError::BadParams("rank too large".into()))?;
            BuiltinGroup::ElemAbelian2(k)
        }
        "symmetric3" => arity(0).map(|_| BuiltinGroup::Symmetric3)?,
        other => return Err(GroupError::UnknownName(other.to_string())),
    };
    spec.build()
}

/// Tabulates a group from an explicit list of elements and a product.
fn tabulate<T, F>(elements: &[T], labels: Vec<String>, mul: F) -> FiniteGroup
where
    T: Eq + Hash,
    F: Fn(&T, &T) -> T,
{
    let index: HashMap<&T, usize> = elements.iter().enumerate().map(|(i, e)| (e, i)).collect();
    let n = elements.len();
    let mut table = Vec::with_capacity(n * n);
    for a in elements {
        for b in elements {
            table.push(index[&mul(a, b)]);
        }
    }
    FiniteGroup::from_flat(n, table, labels).expect("builtin tables are groups")
}

fn power_label(base: &str, k: usize) -> String {
    match k {
        0 => String::new(),
        1 => base.to_string(),
        _ => format!("{base}^{k}"),
    }
}

fn or_one(s: String) -> String {
    if s.is_empty() {
        "1".to_string()
    } else {
        s
    }
}

fn cyclic(n: usize) -> FiniteGroup {
    let elems: Vec<usize> = (0..n).collect();
    let labels = (0..n).map(|k| or_one(power_label("g", k))).collect();
    tabulate(&elems, labels, |a, b| (a + b) % n)
}

fn dihedral(n: usize) -> FiniteGroup {
    // r^k s^e, with s r = r^-1 s
    let elems: Vec<(usize, bool)> = [false, true]
        .into_iter()
        .flat_map(|e| (0..n).map(move |k| (k, e)))
        .collect();
    let labels = elems
        .iter()
        .map(|&(k, e)| or_one(power_label("r", k) + if e { "s" } else { "" }))
        .collect();
    tabulate(&elems, labels, |&(k1, e1), &(k2, e2)| {
        let k = if e1 { k1 + n - k2 } else { k1 + k2 };
        (k % n, e1 ^ e2)
    })
}

fn quaternion8() -> FiniteGroup {
    // (negated, unit) with units 1, i, j, k = ij; u = -1
    fn unit_mul(a: u8, b: u8) -> (bool, u8) {
        match (a, b) {
            (0, x) | (x, 0) => (false, x),
            (x, y) if x == y => (true, 0),
            (1, 2) => (false, 3),
            (2, 3) => (false, 1),
            (3, 1) => (false, 2),
            (2, 1) => (true, 3),
            (3, 2) => (true, 1),
            (1, 3) => (true, 2),
            _ => unreachable!(),
        }
    }
    let elems: Vec<(bool, u8)> = [false, true]
        .into_iter()
        .flat_map(|s| (0..4u8).map(move |q| (s, q)))
        .collect();
    let labels = ["1", "i", "j", "ij", "u", "iu", "ju", "iju"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    tabulate(&elems, labels, |&(s1, a), &(s2, b)| {
        let (s, c) = unit_mul(a, b);
        (s1 ^ s2 ^ s, c)
    })
}

fn gen_quaternion16() -> FiniteGroup {
    // x^k y^e with y x = x^-1 y and y^2 = x^4
    let elems: Vec<(usize, bool)> = [false, true]
        .into_iter()
        .flat_map(|e| (0..8).map(move |k| (k, e)))
        .collect();
    let labels = elems
        .iter()
        .map(|&(k, e)| or_one(power_label("x", k) + if e { "y" } else { "" }))
        .collect();
    tabulate(&elems, labels, |&(k1, e1), &(k2, e2)| match (e1, e2) {
        (false, e) => ((k1 + k2) % 8, e),
        (true, false) => ((k1 + 8 - k2) % 8, true),
        (true, true) => ((k1 + 8 - k2 + 4) % 8, false),
    })
}

fn elem_abelian2(k: u32) -> FiniteGroup {
    let n = 1usize << k;
    let elems: Vec<usize> = (0..n).collect();
    let labels = (0..n)
        .map(|m| {
            or_one(
                (0..k)
                    .filter(|b| m >> b & 1 == 1)
                    .map(|b| format!("e{}", b + 1))
                    .collect::<String>(),
            )
        })
        .collect();
    tabulate(&elems, labels, |a, b| a ^ b)
}

/// Direct product of finitely many groups. Element index is mixed-radix
/// with the first factor varying fastest, so index 0 is the identity.
pub fn direct_product(factors: &[&FiniteGroup]) -> Result<FiniteGroup, GroupError> {
    let n = factors
        .iter()
        .try_fold(1usize, |acc, f| acc.checked_mul(f.order()))
        .filter(|&n| n <= MAX_GROUP_ORDER)
        .ok_or_else(|| GroupError::TooLarge(factors.iter().map(|f| f.order()).product()))?;
    let decode = |mut idx: usize| -> Vec<usize> {
        factors
            .iter()
            .map(|f| {
                let c = idx % f.order();
                idx /= f.order();
                c
            })
            .collect()
    };
    let encode = |coords: &[usize]| -> usize {
        coords
            .iter()
            .zip(factors)
            .rev()
            .fold(0, |acc, (&c, f)| acc * f.order() + c)
    };
    let coords: Vec<Vec<usize>> = (0..n).map(decode).collect();
    let mut table = Vec::with_capacity(n * n);
    for a in &coords {
        for b in &coords {
            let prod: Vec<usize> = a
                .iter()
                .zip(b)
                .zip(factors)
                .map(|((&x, &y), f)| f.mul(x, y))
                .collect();
            table.push(encode(&prod));
        }
    }
    let labels = coords
        .iter()
        .enumerate()
        .map(|(i, c)| {
            if i == 0 {
                "1".to_string()
            } else {
                let parts: Vec<&str> = c.iter().zip(factors).map(|(&x, f)| f.label(x)).collect();
                format!("({})", parts.join(","))
            }
        })
        .collect();
    FiniteGroup::from_flat(n, table, labels)
}
