//! Recognition of Hamiltonian 2-groups `K₈ × E₂` and classification of
//! automorphisms of the `K₈` factor.

use std::fmt;

use serde::Serialize;

use super::series::center;
use super::{FiniteGroup, GroupError, Subgroup};

/// A quaternion subgroup with distinguished generators: `i² = j² = u`,
/// `ji = iju`.
#[derive(Debug, Clone)]
pub struct QuaternionSubgroup<'g> {
    pub subgroup: Subgroup<'g>,
    pub i: usize,
    pub j: usize,
    pub u: usize,
}

#[derive(Debug, Clone)]
pub struct K8E2Decomposition<'g> {
    pub k8: QuaternionSubgroup<'g>,
    /// Central elementary abelian complement.
    pub e2: Subgroup<'g>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "failed", rename_all = "snake_case")]
pub enum DecompositionFailure {
    OrderNotEightTimesPowerOfTwo { order: usize },
    ExponentDoesNotDivideFour { exponent: usize },
    NoQuaternionSubgroup,
    CenterNotElementaryAbelian,
    NoCentralComplement,
}

impl fmt::Display for DecompositionFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DecompositionFailure::OrderNotEightTimesPowerOfTwo { order } => {
                write!(f, "order {order} is not 8 times a power of 2")
            }
            DecompositionFailure::ExponentDoesNotDivideFour { exponent } => {
                write!(f, "exponent {exponent} does not divide 4")
            }
            DecompositionFailure::NoQuaternionSubgroup => {
                write!(f, "no quaternion subgroup of order 8")
            }
            DecompositionFailure::CenterNotElementaryAbelian => {
                write!(f, "center is not an elementary abelian 2-group")
            }
            DecompositionFailure::NoCentralComplement => {
                write!(f, "no central complement to the quaternion subgroup")
            }
        }
    }
}

/// Writes `G` as `K₈ × E₂` when possible. The quaternion subgroup is the
/// first generating pair `(i, j)` of order-4 elements in index order.
pub fn decompose_k8_e2(g: &FiniteGroup) -> Result<K8E2Decomposition<'_>, DecompositionFailure> {
    let n = g.order();
    if !n.is_multiple_of(8) || !(n / 8).is_power_of_two() {
        return Err(DecompositionFailure::OrderNotEightTimesPowerOfTwo { order: n });
    }
    let exponent = g.exponent();
    if 4 % exponent != 0 {
        return Err(DecompositionFailure::ExponentDoesNotDivideFour { exponent });
    }
    let k8 = find_quaternion(g).ok_or(DecompositionFailure::NoQuaternionSubgroup)?;

    let z = center(g);
    if z.elements().iter().any(|&x| g.element_order(x) > 2) {
        return Err(DecompositionFailure::CenterNotElementaryAbelian);
    }
    let mut span = Subgroup::generated(g, [k8.u]);
    let mut basis = Vec::new();
    for &x in z.elements() {
        if !span.contains(x) {
            basis.push(x);
            span = Subgroup::generated(g, basis.iter().copied().chain([k8.u]));
        }
    }
    let e2 = Subgroup::generated(g, basis);
    if e2.order() * 8 != n {
        return Err(DecompositionFailure::NoCentralComplement);
    }
    let mut covered = vec![false; n];
    for &a in k8.subgroup.elements() {
        for &b in e2.elements() {
            covered[g.mul(a, b)] = true;
        }
    }
    if covered.iter().any(|c| !c) {
        return Err(DecompositionFailure::NoCentralComplement);
    }
    Ok(K8E2Decomposition { k8, e2 })
}

fn find_quaternion(g: &FiniteGroup) -> Option<QuaternionSubgroup<'_>> {
    let order4: Vec<usize> = g.elements().filter(|&x| g.element_order(x) == 4).collect();
    for &a in &order4 {
        let u = g.mul(a, a);
        for &b in &order4 {
            if g.mul(b, b) != u
                || g.mul(b, a) != g.mul(g.mul(a, b), u)
                || g.mul(a, b) == g.mul(b, a)
            {
                continue;
            }
            let subgroup = Subgroup::generated(g, [a, b]);
            if subgroup.order() == 8 {
                return Some(QuaternionSubgroup {
                    subgroup,
                    i: a,
                    j: b,
                    u,
                });
            }
        }
    }
    None
}

/// The four inner automorphisms of `K₈`, named by a conjugating element,
/// or `NotInner`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum K8Action {
    /// i → i, j → j
    Identity,
    /// i → i, j → ju
    ConjByI,
    /// i → iu, j → j
    ConjByJ,
    /// i → iu, j → ju
    ConjByIJ,
    NotInner,
}

/// Classifies `phi` (a map on the parent group's indices) restricted to
/// the quaternion subgroup.
pub fn k8_action_class(k8: &QuaternionSubgroup<'_>, phi: &[usize]) -> Result<K8Action, GroupError> {
    let g = k8.subgroup.parent();
    if phi.len() != g.order() {
        return Err(GroupError::NotAnAutomorphism(format!(
            "map has {} entries, group has {}",
            phi.len(),
            g.order()
        )));
    }
    let elems = k8.subgroup.elements();
    let mut image: Vec<usize> = elems.iter().map(|&x| phi[x]).collect();
    if let Some(&x) = elems.iter().find(|&&x| !k8.subgroup.contains(phi[x])) {
        return Err(GroupError::NotAnAutomorphism(format!(
            "{} leaves the quaternion subgroup",
            g.label(x)
        )));
    }
    image.sort_unstable();
    image.dedup();
    if image.len() != elems.len() {
        return Err(GroupError::NotAnAutomorphism(
            "not injective on the quaternion subgroup".into(),
        ));
    }
    for &a in elems {
        for &b in elems {
            if phi[g.mul(a, b)] != g.mul(phi[a], phi[b]) {
                return Err(GroupError::NotAnAutomorphism(format!(
                    "fails on {} * {}",
                    g.label(a),
                    g.label(b)
                )));
            }
        }
    }
    let (i, j, u) = (k8.i, k8.j, k8.u);
    let (iu, ju) = (g.mul(i, u), g.mul(j, u));
    Ok(match (phi[i], phi[j]) {
        (x, y) if x == i && y == j => K8Action::Identity,
        (x, y) if x == i && y == ju => K8Action::ConjByI,
        (x, y) if x == iu && y == j => K8Action::ConjByJ,
        (x, y) if x == iu && y == ju => K8Action::ConjByIJ,
        _ => K8Action::NotInner,
    })
}
