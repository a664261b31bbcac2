use std::fmt;
use std::sync::Arc;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use super::AnalysisError;
use crate::coeff::{field_traits, CoeffRing, FieldDescriptor, FunctionField};
use crate::groupring::{hat_idempotent, GroupRingElement, GroupRingError};
use crate::groups::FiniteGroup;

/// Default exponent bound for the independence check of a witness.
pub const DEFAULT_INDEPENDENCE_BOUND: u32 = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum About {
    /// Units of augmentation one.
    V,
    /// All units.
    U,
}

/// Coarse description of `G`: finite groups are given by a table, infinite
/// ones only by the torsion facts the theorems consume.
#[derive(Debug, Clone)]
pub enum GroupDescriptor {
    Finite(Arc<FiniteGroup>),
    Infinite {
        has_torsion: bool,
        has_p_prime_torsion: bool,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum HyperbolicRule {
    R1,
    R2,
    R3,
    R4,
    /// No rule applies.
    None,
}

impl HyperbolicRule {
    pub fn statement(&self) -> &'static str {
        match self {
            HyperbolicRule::R1 => "G finite nontrivial: V(KG) is hyperbolic iff K is finite",
            HyperbolicRule::R2 => {
                "tr.deg K >= 1 and G has an element of order prime to p: Z^2 embeds in V(KG)"
            }
            HyperbolicRule::R3 => "G has torsion and V(KG) hyperbolic: K is algebraic over GF(p)",
            HyperbolicRule::R4 => "U(KG) hyperbolic: K is finite",
            HyperbolicRule::None => "no rule applies",
        }
    }
}

impl fmt::Display for HyperbolicRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HyperbolicRule::None => f.write_str("none"),
            r => write!(f, "{r:?}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum HyperbolicAnswer {
    Hyperbolic,
    NotHyperbolic,
    Undetermined,
}

/// A necessary condition that was evaluated for an undetermined verdict.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Constraint {
    pub condition: String,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WitnessChecks {
    pub augmentation_u1_is_one: bool,
    pub augmentation_u2_is_one: bool,
    pub commute: bool,
    pub independence_bound: u32,
    /// First `(a, b) ≠ (0, 0)` in the box with `u1^a u2^b = 1`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub relation: Option<(i64, i64)>,
}

impl WitnessChecks {
    pub fn passed(&self) -> bool {
        self.augmentation_u1_is_one
            && self.augmentation_u2_is_one
            && self.commute
            && self.relation.is_none()
    }
}

/// Two commuting units of `GF(p)(t)G` generating a copy of ℤ².
#[derive(Debug, Clone, PartialEq)]
pub struct Z2Witness {
    pub p: u64,
    pub g0: usize,
    pub u1: GroupRingElement<FunctionField>,
    pub u2: GroupRingElement<FunctionField>,
    pub checks: Option<WitnessChecks>,
}

impl Z2Witness {
    pub fn group(&self) -> &Arc<FiniteGroup> {
        self.u1.group()
    }
}

impl Serialize for Z2Witness {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Z2Witness", 5)?;
        st.serialize_field("field", &self.u1.ring().name())?;
        st.serialize_field("g0", self.group().label(self.g0))?;
        st.serialize_field("u1", &self.u1.to_string())?;
        st.serialize_field("u2", &self.u2.to_string())?;
        st.serialize_field("checks", &self.checks)?;
        st.end()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct HyperbolicVerdict {
    pub about: About,
    pub answer: HyperbolicAnswer,
    pub rule: HyperbolicRule,
    pub rule_statement: &'static str,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub constraints: Vec<Constraint>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Z2Witness>,
}

fn order_error(e: GroupRingError) -> AnalysisError {
    match e {
        GroupRingError::OrderDivisibleByChar { order, p } => {
            AnalysisError::OrderDivisibleByChar { order, p }
        }
        other => other.into(),
    }
}

/// `u1 = e + t(1 - e)`, `u2 = e + (1 + t)(1 - e)` with `e` the idempotent
/// attached to `⟨g0⟩`.
pub fn construct_z2_witness(
    p: u64,
    group: Arc<FiniteGroup>,
    g0: usize,
) -> Result<Z2Witness, AnalysisError> {
    if g0 >= group.order() {
        return Err(GroupRingError::IndexOutOfRange(g0).into());
    }
    if g0 == group.identity() {
        return Err(AnalysisError::DegenerateTorsionElement);
    }
    let k = FunctionField::new(p)?;
    let e = hat_idempotent(group.clone(), g0, k).map_err(order_error)?;
    let one = GroupRingElement::one(group, k);
    let complement = one.sub(&e)?;
    let t = k.t();
    let t_plus_one = k.add(&t, &k.one());
    let u1 = e.add(&complement.scale(&t))?;
    let u2 = e.add(&complement.scale(&t_plus_one))?;
    Ok(Z2Witness {
        p,
        g0,
        u1,
        u2,
        checks: None,
    })
}

/// Powers `x^k` for `k = -n..=n`, index `k + n`.
fn power_table(
    x: &GroupRingElement<FunctionField>,
    n: u32,
) -> Result<Vec<GroupRingElement<FunctionField>>, GroupRingError> {
    let inv = x.try_invert()?;
    let n = n as usize;
    let mut table = vec![GroupRingElement::one(x.group().clone(), *x.ring()); 2 * n + 1];
    for k in 1..=n {
        table[n + k] = table[n + k - 1].mul(x)?;
        table[n - k] = table[n - k + 1].mul(&inv)?;
    }
    Ok(table)
}

pub fn check_z2_witness(w: &Z2Witness, bound: u32) -> Result<WitnessChecks, AnalysisError> {
    if bound == 0 {
        return Err(AnalysisError::Precondition(
            "independence bound must be at least 1".into(),
        ));
    }
    if !w.u1.same_context(&w.u2) {
        return Err(GroupRingError::MixedContexts.into());
    }
    let k = w.u1.ring();
    let mut checks = WitnessChecks {
        augmentation_u1_is_one: k.is_one(&w.u1.augmentation()),
        augmentation_u2_is_one: k.is_one(&w.u2.augmentation()),
        commute: w.u1.commutator(&w.u2).is_ok_and(|c| c.is_one()),
        independence_bound: bound,
        relation: None,
    };
    let (Ok(p1), Ok(p2)) = (power_table(&w.u1, bound), power_table(&w.u2, bound)) else {
        checks.relation = Some((0, 0));
        return Ok(checks);
    };
    let n = bound as i64;
    'search: for a in -n..=n {
        for b in -n..=n {
            if (a, b) == (0, 0) {
                continue;
            }
            if p1[(a + n) as usize].mul(&p2[(b + n) as usize])?.is_one() {
                checks.relation = Some((a, b));
                break 'search;
            }
        }
    }
    Ok(checks)
}

/// True iff both augmentations are 1, the pair commutes and no
/// `u1^a u2^b` with `(a, b) ∈ [-N, N]² \ {0}` equals 1.
pub fn verify_z2_witness(w: &Z2Witness, bound: u32) -> Result<bool, AnalysisError> {
    Ok(check_z2_witness(w, bound)?.passed())
}

fn first_coprime_element(g: &FiniteGroup, p: u64) -> Option<usize> {
    g.elements()
        .skip(1)
        .find(|&x| !(g.element_order(x) as u64).is_multiple_of(p))
}

/// Applies the hyperbolicity theorems in order `R1..R4`; the first that
/// fires decides.
pub fn classify_hyperbolic(
    field: &FieldDescriptor,
    group: &GroupDescriptor,
    about: About,
    independence_bound: u32,
) -> Result<HyperbolicVerdict, AnalysisError> {
    let traits = field_traits(field);
    let p = traits.characteristic;
    let (finite_group, has_torsion, has_p_prime_torsion) = match group {
        GroupDescriptor::Finite(g) => {
            if g.order() == 1 {
                return Err(AnalysisError::TrivialGroup);
            }
            (Some(g), true, first_coprime_element(g, p).is_some())
        }
        GroupDescriptor::Infinite {
            has_torsion,
            has_p_prime_torsion,
        } => {
            if *has_p_prime_torsion && !*has_torsion {
                return Err(AnalysisError::Precondition(
                    "p'-torsion implies torsion".into(),
                ));
            }
            (None, *has_torsion, *has_p_prime_torsion)
        }
    };
    let verdict = |answer, rule: HyperbolicRule| HyperbolicVerdict {
        about,
        answer,
        rule,
        rule_statement: rule.statement(),
        constraints: Vec::new(),
        witness: None,
    };

    if about == About::V {
        if let Some(g) = finite_group {
            if traits.is_finite {
                return Ok(verdict(HyperbolicAnswer::Hyperbolic, HyperbolicRule::R1));
            }
            let mut v = verdict(HyperbolicAnswer::NotHyperbolic, HyperbolicRule::R1);
            if traits.tr_deg >= 1 {
                if let Some(g0) = first_coprime_element(g, p) {
                    let mut w = construct_z2_witness(p, g.clone(), g0)?;
                    w.checks = Some(check_z2_witness(&w, independence_bound)?);
                    v.witness = Some(w);
                }
            }
            return Ok(v);
        }
        if has_p_prime_torsion && traits.tr_deg >= 1 {
            return Ok(verdict(HyperbolicAnswer::NotHyperbolic, HyperbolicRule::R2));
        }
        if has_torsion && !traits.is_algebraic_over_prime {
            return Ok(verdict(HyperbolicAnswer::NotHyperbolic, HyperbolicRule::R3));
        }
    }
    if about == About::U && !traits.is_finite {
        return Ok(verdict(HyperbolicAnswer::NotHyperbolic, HyperbolicRule::R4));
    }

    let mut v = verdict(HyperbolicAnswer::Undetermined, HyperbolicRule::None);
    let c = |condition: &str, holds| Constraint {
        condition: condition.into(),
        holds,
    };
    v.constraints = match about {
        About::V => vec![
            c(
                "K algebraic over GF(p) (necessary when G has torsion)",
                traits.is_algebraic_over_prime,
            ),
            c(
                "no element of order prime to p, or tr.deg K = 0",
                !has_p_prime_torsion || traits.tr_deg == 0,
            ),
        ],
        About::U => vec![c("K finite (necessary for U(KG))", traits.is_finite)],
    };
    Ok(v)
}
