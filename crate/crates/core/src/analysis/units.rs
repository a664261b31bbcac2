use std::collections::HashMap;
use std::sync::Arc;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use super::AnalysisError;
use crate::coeff::{CoeffRing, FfElement, GaloisField, Integers};
use crate::groupring::GroupRingElement;
use crate::groups::{center, upper_central_series, FiniteGroup, Nilpotency};

/// Default cap on augmentation-one candidates for [`enumerate_v_kg`].
pub const DEFAULT_ENUMERATION_BUDGET: u64 = 1 << 20;
/// Default cap on coefficient vectors for [`bounded_unit_search_zg`].
pub const DEFAULT_SEARCH_BUDGET: u64 = 10_000_000;

/// The finite group `V(KG)` of augmentation-one units, tabulated.
#[derive(Debug, Clone)]
pub struct EnumeratedUnitGroup {
    pub field: GaloisField,
    pub base: Arc<FiniteGroup>,
    /// Units in enumeration order; index 0 is `1`.
    pub carrier: Vec<GroupRingElement<GaloisField>>,
    /// Cayley table over carrier indices, labelled by the units' text form.
    pub as_group: FiniteGroup,
    /// Number of augmentation-one elements examined.
    pub candidates: u64,
}

fn checked_count(base: u64, exp: usize) -> Option<u64> {
    u32::try_from(exp).ok().and_then(|e| base.checked_pow(e))
}

/// Enumerates every augmentation-one element of `KG` (free coefficients on
/// the non-identity elements, identity coefficient forced), keeps those
/// that invert, and tabulates the resulting group.
pub fn enumerate_v_kg(
    field: &GaloisField,
    group: Arc<FiniteGroup>,
    budget: u64,
) -> Result<EnumeratedUnitGroup, AnalysisError> {
    let n = group.order();
    let q = field.order();
    let count = checked_count(q, n - 1)
        .filter(|&c| c <= budget)
        .ok_or_else(|| AnalysisError::BudgetExceeded {
            what: "unit enumeration",
            needed: format!("{q}^{}", n - 1),
            budget,
        })?;

    let one = field.one();
    let candidate = |code: u64| {
        let mut rest = code;
        let mut dense = vec![field.zero(); n];
        let mut sum = field.zero();
        for slot in dense.iter_mut().skip(1) {
            let c = field.from_code(rest % q);
            rest /= q;
            sum = field.add(&sum, &c);
            *slot = c;
        }
        dense[0] = field.sub(&one, &sum);
        GroupRingElement::from_dense(group.clone(), field.clone(), dense)
    };
    let carrier: Vec<GroupRingElement<GaloisField>> = (0..count)
        .into_par_iter()
        .filter_map(|code| {
            let x = candidate(code);
            x.try_invert().ok().map(|_| x)
        })
        .collect();
    debug_assert!(carrier.first().is_some_and(|x| x.is_one()));

    // K of characteristic p and G a p-group: 1 + (augmentation ideal) is
    // nilpotent-by-one, so every candidate must have inverted.
    let p = field.p();
    let order_is_p_power = {
        let mut m = n;
        while m.is_multiple_of(p as usize) {
            m /= p as usize;
        }
        m == 1
    };
    if order_is_p_power {
        assert_eq!(
            carrier.len() as u64,
            count,
            "every augmentation-one element of a modular p-group algebra is a unit"
        );
    }

    let m = carrier.len();
    if m > crate::groups::MAX_GROUP_ORDER {
        return Err(crate::groups::GroupError::TooLarge(m).into());
    }
    let index: HashMap<Vec<FfElement>, usize> = carrier
        .iter()
        .enumerate()
        .map(|(i, x)| (x.dense(), i))
        .collect();
    let rows: Vec<Vec<usize>> = carrier
        .par_iter()
        .map(|a| {
            carrier
                .iter()
                .map(|b| {
                    let prod = a.mul(b).expect("same context");
                    *index
                        .get(&prod.dense())
                        .expect("units are closed under products")
                })
                .collect()
        })
        .collect();
    let labels = carrier.iter().map(|x| x.to_string()).collect();
    let as_group = FiniteGroup::from_table(&rows, labels)?;
    Ok(EnumeratedUnitGroup {
        field: field.clone(),
        base: group,
        carrier,
        as_group,
        candidates: count,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UnitGroupStructure {
    pub order: usize,
    pub center_order: usize,
    /// Orders of `Z₀ ⊂ Z₁ ⊂ …`.
    pub upper_central_series: Vec<usize>,
    pub nilpotency: Nilpotency,
}

pub fn unit_group_structure(v: &EnumeratedUnitGroup) -> UnitGroupStructure {
    let g = &v.as_group;
    let series = upper_central_series(g);
    UnitGroupStructure {
        order: g.order(),
        center_order: center(g).order(),
        upper_central_series: series.orders(),
        nilpotency: series.nilpotency,
    }
}

/// All units of augmentation one in ℤG with coefficients in `[-bound,
/// bound]`, in lexicographic order of coefficient vectors (group index 0
/// most significant).
pub fn bounded_unit_search_zg(
    group: Arc<FiniteGroup>,
    bound: u32,
    budget: u64,
) -> Result<Vec<GroupRingElement<Integers>>, AnalysisError> {
    let n = group.order();
    let width = 2 * bound as u64 + 1;
    let count = checked_count(width, n)
        .filter(|&c| c <= budget)
        .ok_or_else(|| AnalysisError::BudgetExceeded {
            what: "bounded unit search",
            needed: format!("{width}^{n}"),
            budget,
        })?;
    let decode = |code: u64| -> Vec<i64> {
        let mut digits = vec![0i64; n];
        let mut rest = code;
        for d in digits.iter_mut().rev() {
            *d = (rest % width) as i64 - bound as i64;
            rest /= width;
        }
        digits
    };
    let units = (0..count)
        .into_par_iter()
        .filter_map(|code| {
            let v = decode(code);
            if v.iter().sum::<i64>() != 1 {
                return None;
            }
            let x = GroupRingElement::from_dense(
                group.clone(),
                Integers,
                v.into_iter().map(BigInt::from).collect(),
            );
            x.try_invert().ok().map(|_| x)
        })
        .collect();
    Ok(units)
}
