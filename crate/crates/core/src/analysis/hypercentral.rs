use std::fmt;

use serde::Serialize;

use crate::groups::{
    decompose_k8_e2, k8_action_class, structured_is_hypercentral, DecompositionFailure,
    FiniteGroup, HypercentralityCheck, K8Action, K8E2Decomposition, StructuredGroup,
    DEFAULT_CHAIN_BUDGET,
};

/// One necessary condition on the torsion part, checked by brute force.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Condition {
    pub holds: bool,
    /// True when the hypothesis of the condition is never met.
    pub vacuous: bool,
    /// Labels of a witnessing pair when the condition fails.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<[String; 2]>,
}

impl Condition {
    fn holds() -> Self {
        Condition {
            holds: true,
            vacuous: false,
            counterexample: None,
        }
    }

    fn vacuous() -> Self {
        Condition {
            holds: true,
            vacuous: true,
            counterexample: None,
        }
    }

    fn fails(g: &FiniteGroup, a: usize, b: usize) -> Self {
        Condition {
            holds: false,
            vacuous: false,
            counterexample: Some([g.label(a).into(), g.label(b).into()]),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DedekindReport {
    /// Every subgroup is normal. Counterexample `(t, x)`: `x⁻¹tx ∉ ⟨t⟩`.
    pub all_subgroups_normal: Condition,
    /// `g⁻¹tg ∈ {t, t⁻¹}` for all `g, t`. Counterexample `(t, g)`.
    pub conjugates_are_powers: Condition,
    /// Odd-order elements are central. Counterexample `(t, g)`.
    pub odd_order_central: Condition,
    /// A nontrivial odd-order element together with an even-order element
    /// forces `G` abelian. Counterexample: a noncommuting pair.
    pub mixed_orders_force_abelian: Condition,
}

impl DedekindReport {
    pub fn all_hold(&self) -> bool {
        self.conditions().iter().all(|(_, c)| c.holds)
    }

    pub fn conditions(&self) -> [(&'static str, &Condition); 4] {
        [
            ("every subgroup is normal", &self.all_subgroups_normal),
            (
                "every conjugate g^-1 t g is t or t^-1",
                &self.conjugates_are_powers,
            ),
            (
                "every element of odd order is central",
                &self.odd_order_central,
            ),
            (
                "odd and even orders together force G abelian",
                &self.mixed_orders_force_abelian,
            ),
        ]
    }

    /// Description of the first failed condition, if any.
    pub fn first_failure(&self) -> Option<String> {
        self.conditions()
            .into_iter()
            .find(|(_, c)| !c.holds)
            .map(|(name, c)| match &c.counterexample {
                Some([a, b]) => format!("fails: {name} (counterexample {a}, {b})"),
                None => format!("fails: {name}"),
            })
    }
}

fn first_noncommuting(g: &FiniteGroup) -> Option<(usize, usize)> {
    g.elements()
        .flat_map(|a| g.elements().map(move |b| (a, b)))
        .find(|&(a, b)| g.mul(a, b) != g.mul(b, a))
}

pub fn verify_dedekind_conditions(g: &FiniteGroup) -> DedekindReport {
    let all_subgroups_normal = match crate::groups::first_non_normal_cyclic(g) {
        Some((t, x)) => Condition::fails(g, t, x),
        None => Condition::holds(),
    };
    let pairs = || g.elements().flat_map(|t| g.elements().map(move |x| (t, x)));

    let conjugates_are_powers = pairs()
        .find(|&(t, x)| {
            let c = g.conj(t, x);
            c != t && c != g.inv(t)
        })
        .map_or_else(Condition::holds, |(t, x)| Condition::fails(g, t, x));

    let odd = |t: usize| g.element_order(t) % 2 == 1;
    let odd_order_central = pairs()
        .find(|&(t, x)| odd(t) && g.mul(t, x) != g.mul(x, t))
        .map_or_else(Condition::holds, |(t, x)| Condition::fails(g, t, x));

    let has_odd = g.elements().any(|t| t != g.identity() && odd(t));
    let has_even = g.elements().any(|t| !odd(t));
    let mixed_orders_force_abelian = if has_odd && has_even {
        first_noncommuting(g).map_or_else(Condition::holds, |(a, b)| Condition::fails(g, a, b))
    } else {
        Condition::vacuous()
    };

    DedekindReport {
        all_subgroups_normal,
        conjugates_are_powers,
        odd_order_central,
        mixed_orders_force_abelian,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum TheoremCase {
    /// `T` central.
    #[serde(rename = "a")]
    Central,
    /// `T` abelian 2-group, `g⁻¹tg = t^{±1}`.
    #[serde(rename = "b")]
    SignAction,
    /// `T = K₈ × E₂` with inner actions on `K₈`.
    #[serde(rename = "c")]
    Quaternion,
}

impl fmt::Display for TheoremCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TheoremCase::Central => "a",
            TheoremCase::SignAction => "b",
            TheoremCase::Quaternion => "c",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "answer", rename_all = "snake_case")]
pub enum HypercentralAnswer {
    Yes { case: TheoremCase },
    No { reason: String },
    Indeterminate { reason: String },
}

impl HypercentralAnswer {
    pub fn is_yes(&self) -> bool {
        matches!(self, HypercentralAnswer::Yes { .. })
    }
}

impl fmt::Display for HypercentralAnswer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HypercentralAnswer::Yes { case } => write!(f, "Yes({case})"),
            HypercentralAnswer::No { reason } => write!(f, "No: {reason}"),
            HypercentralAnswer::Indeterminate { reason } => write!(f, "Indeterminate: {reason}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DecompositionEvidence {
    pub i: String,
    pub j: String,
    pub u: String,
    pub k8: Vec<String>,
    pub e2: Vec<String>,
}

impl DecompositionEvidence {
    fn from_decomposition(d: &K8E2Decomposition<'_>) -> Self {
        let g = d.k8.subgroup.parent();
        DecompositionEvidence {
            i: g.label(d.k8.i).into(),
            j: g.label(d.k8.j).into(),
            u: g.label(d.k8.u).into(),
            k8: d.k8.subgroup.labels(),
            e2: d.e2.labels(),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct HypercentralEvidence {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dedekind: Option<DedekindReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub decomposition: Option<DecompositionEvidence>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub decomposition_failure: Option<DecompositionFailure>,
    /// One tag per free generator, in order.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub action_classes: Vec<K8Action>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hypercentrality: Option<HypercentralityCheck>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HypercentralVerdict {
    #[serde(flatten)]
    pub answer: HypercentralAnswer,
    pub evidence: HypercentralEvidence,
}

const FINITE_COLLAPSE: &str =
    "G is finite, so G = T and case (b) with nontrivial sign reduces to case (a)";

/// Decides whether the hypercenter of the unit group of ℤG contains
/// exactly the trivial central units, for finite `G`. The trivial group
/// is accepted under case (a).
pub fn classify_hypercentral_finite(g: &FiniteGroup) -> HypercentralVerdict {
    let report = verify_dedekind_conditions(g);
    let mut evidence = HypercentralEvidence {
        notes: vec![FINITE_COLLAPSE.into()],
        ..Default::default()
    };
    if g.order() == 1 {
        evidence
            .notes
            .push("G is trivial, so T = 1 is central".into());
    }
    let answer = if g.is_abelian() {
        HypercentralAnswer::Yes {
            case: TheoremCase::Central,
        }
    } else {
        match decompose_k8_e2(g) {
            Ok(d) => {
                evidence.decomposition = Some(DecompositionEvidence::from_decomposition(&d));
                HypercentralAnswer::Yes {
                    case: TheoremCase::Quaternion,
                }
            }
            Err(failure) => {
                let reason = report
                    .first_failure()
                    .unwrap_or_else(|| format!("not K8 x E2: {failure}"));
                evidence.decomposition_failure = Some(failure);
                HypercentralAnswer::No { reason }
            }
        }
    };
    evidence.dedekind = Some(report);
    HypercentralVerdict { answer, evidence }
}

/// The same question for `G = ℤᵏ ⋉ T` given by its torsion table and the
/// actions of the free generators.
pub fn classify_hypercentral_structured(s: &StructuredGroup) -> HypercentralVerdict {
    let t = s.torsion();
    let check = structured_is_hypercentral(s, DEFAULT_CHAIN_BUDGET);
    let mut evidence = HypercentralEvidence {
        hypercentrality: Some(check),
        ..Default::default()
    };
    let verdict = |answer, evidence| HypercentralVerdict { answer, evidence };

    match check {
        HypercentralityCheck::Indeterminate { steps } => {
            let reason = format!("commutator chain did not settle within {steps} steps");
            return verdict(HypercentralAnswer::Indeterminate { reason }, evidence);
        }
        HypercentralityCheck::No { stalled_order } => {
            let reason =
                format!("G is not hypercentral: [T,G,...,G] stabilises at order {stalled_order}");
            return verdict(HypercentralAnswer::No { reason }, evidence);
        }
        HypercentralityCheck::Nilpotent { .. } => {}
    }

    let identity: Vec<usize> = t.elements().collect();
    let inversion: Vec<usize> = t.elements().map(|x| t.inv(x)).collect();
    let actions = s.actions();

    if t.is_abelian() {
        if actions.iter().all(|a| *a == identity) {
            return verdict(
                HypercentralAnswer::Yes {
                    case: TheoremCase::Central,
                },
                evidence,
            );
        }
        if !t.is_2_group() {
            let reason = "T is abelian but not a 2-group and some action is nontrivial".to_string();
            return verdict(HypercentralAnswer::No { reason }, evidence);
        }
        if let Some(k) = actions
            .iter()
            .position(|a| *a != identity && *a != inversion)
        {
            let reason =
                format!("action of generator {k} is neither the identity nor inversion on T");
            return verdict(HypercentralAnswer::No { reason }, evidence);
        }
        return verdict(
            HypercentralAnswer::Yes {
                case: TheoremCase::SignAction,
            },
            evidence,
        );
    }

    let d = match decompose_k8_e2(t) {
        Ok(d) => d,
        Err(failure) => {
            let reason = format!("T is nonabelian and not K8 x E2: {failure}");
            evidence.decomposition_failure = Some(failure);
            return verdict(HypercentralAnswer::No { reason }, evidence);
        }
    };
    evidence.decomposition = Some(DecompositionEvidence::from_decomposition(&d));
    for (k, phi) in actions.iter().enumerate() {
        if let Some(&x) = d.e2.elements().iter().find(|&&x| phi[x] != x) {
            let reason = format!("action of generator {k} moves {} in E2", t.label(x));
            return verdict(HypercentralAnswer::No { reason }, evidence);
        }
        match k8_action_class(&d.k8, phi) {
            Ok(K8Action::NotInner) => {
                evidence.action_classes.push(K8Action::NotInner);
                let reason = format!("action of generator {k} is not inner on K8");
                return verdict(HypercentralAnswer::No { reason }, evidence);
            }
            Ok(class) => evidence.action_classes.push(class),
            Err(e) => {
                let reason = format!("action of generator {k} does not preserve K8: {e}");
                return verdict(HypercentralAnswer::No { reason }, evidence);
            }
        }
    }
    verdict(
        HypercentralAnswer::Yes {
            case: TheoremCase::Quaternion,
        },
        evidence,
    )
}
