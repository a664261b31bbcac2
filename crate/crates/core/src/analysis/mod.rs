//! Decision procedures built on the group and group-ring layers: unit
//! groups of group algebras, bounded unit searches in ℤG, the hypercentral
//! unit-group classifier, hyperbolicity verdicts and ℤ² witnesses.

mod hyperbolic;
mod hypercentral;
mod units;

use thiserror::Error;

use crate::coeff::CoeffError;
use crate::groupring::GroupRingError;
use crate::groups::GroupError;

pub use hyperbolic::{
    check_z2_witness, classify_hyperbolic, construct_z2_witness, verify_z2_witness, About,
    Constraint, GroupDescriptor, HyperbolicAnswer, HyperbolicRule, HyperbolicVerdict,
    WitnessChecks, Z2Witness, DEFAULT_INDEPENDENCE_BOUND,
};
pub use hypercentral::{
    classify_hypercentral_finite, classify_hypercentral_structured, verify_dedekind_conditions,
    Condition, DecompositionEvidence, DedekindReport, HypercentralAnswer, HypercentralEvidence,
    HypercentralVerdict, TheoremCase,
};
pub use units::{
    bounded_unit_search_zg, enumerate_v_kg, unit_group_structure, EnumeratedUnitGroup,
    UnitGroupStructure, DEFAULT_ENUMERATION_BUDGET, DEFAULT_SEARCH_BUDGET,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AnalysisError {
    #[error("{what} needs {needed} candidates, budget is {budget}")]
    BudgetExceeded {
        what: &'static str,
        needed: String,
        budget: u64,
    },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("the group must be nontrivial")]
    TrivialGroup,
    #[error("characteristic {p} divides the element order {order}")]
    OrderDivisibleByChar { order: usize, p: u64 },
    #[error("the torsion element must not be the identity")]
    DegenerateTorsionElement,
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    GroupRing(#[from] GroupRingError),
    #[error(transparent)]
    Coeff(#[from] CoeffError),
}
