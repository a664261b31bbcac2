//! Infinite groups `G = ℤᵏ ⋉ T` with `T` finite and the free generators
//! commuting, each acting on `T` by an automorphism.

use serde::Serialize;

use super::{FiniteGroup, GroupError, Subgroup};

/// Step budget for the commutator chain. A strictly descending chain of
/// subgroups of `T` has at most `log₂|T|` steps, so this is never reached
/// for valid inputs at the supported orders.
pub const DEFAULT_CHAIN_BUDGET: usize = 64;

#[derive(Debug, Clone)]
pub struct StructuredGroup {
    torsion: FiniteGroup,
    /// `actions[j][t]` is `x_j⁻¹ t x_j` for the j-th free generator `x_j`.
    actions: Vec<Vec<usize>>,
}

impl StructuredGroup {
    pub fn new(
        torsion: FiniteGroup,
        free_rank: usize,
        actions: Vec<Vec<usize>>,
    ) -> Result<Self, GroupError> {
        if actions.len() != free_rank {
            return Err(GroupError::ActionCount {
                expected: free_rank,
                got: actions.len(),
            });
        }
        for (k, a) in actions.iter().enumerate() {
            if !torsion.is_automorphism(a) {
                return Err(GroupError::NotAnAutomorphism(format!("action {k}")));
            }
        }
        for a in 0..actions.len() {
            for b in a + 1..actions.len() {
                let commute = torsion
                    .elements()
                    .all(|t| actions[a][actions[b][t]] == actions[b][actions[a][t]]);
                if !commute {
                    return Err(GroupError::ActionsDoNotCommute(a, b));
                }
            }
        }
        Ok(StructuredGroup { torsion, actions })
    }

    pub fn torsion(&self) -> &FiniteGroup {
        &self.torsion
    }

    pub fn free_rank(&self) -> usize {
        self.actions.len()
    }

    pub fn actions(&self) -> &[Vec<usize>] {
        &self.actions
    }

    /// `[H, G]` for a normal subgroup `H` of `T`: generated by `[h, t]`
    /// and `h⁻¹ φ_j(h)`, then closed under conjugation by `G`.
    fn commutator_with_g<'a>(&'a self, h: &Subgroup<'a>) -> Subgroup<'a> {
        let t = &self.torsion;
        let mut gens = Vec::new();
        for &x in h.elements() {
            for y in t.elements() {
                gens.push(t.commutator(x, y));
            }
            for phi in &self.actions {
                gens.push(t.mul(t.inv(x), phi[x]));
            }
        }
        self.normal_closure(gens)
    }

    fn normal_closure(&self, gens: Vec<usize>) -> Subgroup<'_> {
        let t = &self.torsion;
        let mut current = Subgroup::generated(t, gens);
        loop {
            let mut extra = Vec::new();
            for &s in current.elements() {
                for y in t.elements() {
                    let c = t.conj(s, y);
                    if !current.contains(c) {
                        extra.push(c);
                    }
                }
                for phi in &self.actions {
                    if !current.contains(phi[s]) {
                        extra.push(phi[s]);
                    }
                }
            }
            if extra.is_empty() {
                return current;
            }
            current = Subgroup::generated(t, current.elements().iter().copied().chain(extra));
        }
    }

    fn chain(&self, budget: usize) -> (Vec<Subgroup<'_>>, ChainEnd) {
        let mut chain = Vec::new();
        let mut prev = Subgroup::whole(&self.torsion);
        if prev.is_trivial() {
            return (chain, ChainEnd::ReachedTrivial);
        }
        for _ in 0..budget {
            let next = self.commutator_with_g(&prev);
            let stalled = next.order() == prev.order();
            let trivial = next.is_trivial();
            chain.push(next.clone());
            if trivial {
                return (chain, ChainEnd::ReachedTrivial);
            }
            if stalled {
                return (chain, ChainEnd::Stalled);
            }
            prev = next;
        }
        (chain, ChainEnd::Budget)
    }
}

enum ChainEnd {
    ReachedTrivial,
    Stalled,
    Budget,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum HypercentralityCheck {
    /// The chain `T ⊇ [T,G] ⊇ [T,G,G] ⊇ …` reaches 1 after `steps` steps,
    /// so `T ⊆ Z_steps(G)`; with `G/T` abelian the class is at most
    /// `class_bound`.
    Nilpotent {
        steps: usize,
        class_bound: usize,
    },
    /// The chain stabilises at a nontrivial subgroup of this order. `G` is
    /// finitely generated, so it is then not hypercentral either.
    No {
        stalled_order: usize,
    },
    Indeterminate {
        steps: usize,
    },
}

impl HypercentralityCheck {
    pub fn is_positive(&self) -> bool {
        matches!(self, HypercentralityCheck::Nilpotent { .. })
    }
}

pub fn structured_is_hypercentral(s: &StructuredGroup, budget: usize) -> HypercentralityCheck {
    let (chain, end) = s.chain(budget);
    let steps = chain.len();
    match end {
        ChainEnd::ReachedTrivial => HypercentralityCheck::Nilpotent {
            steps,
            class_bound: if s.free_rank() == 0 { steps } else { steps + 1 },
        },
        ChainEnd::Stalled => HypercentralityCheck::No {
            stalled_order: chain.last().map_or(s.torsion.order(), |h| h.order()),
        },
        ChainEnd::Budget => HypercentralityCheck::Indeterminate { steps },
    }
}

/// `[T,G] ⊇ [T,G,G] ⊇ …`, ending at the trivial group or at the first
/// repeated term.
pub fn torsion_commutator_chain(s: &StructuredGroup) -> Vec<Subgroup<'_>> {
    s.chain(DEFAULT_CHAIN_BUDGET).0
}

#[cfg(test)]
mod tests {
    use super::super::builtin;
    use super::*;

    fn inversion(g: &FiniteGroup) -> Vec<usize> {
        g.elements().map(|x| g.inv(x)).collect()
    }

    #[test]
    fn c4_inverted() {
        let c4 = builtin("cyclic", &[4]).unwrap();
        let inv = inversion(&c4);
        let s = StructuredGroup::new(c4, 1, vec![inv]).unwrap();
        let chain: Vec<usize> = torsion_commutator_chain(&s)
            .iter()
            .map(|h| h.order())
            .collect();
        assert_eq!(chain, vec![2, 1]);
        assert_eq!(
            structured_is_hypercentral(&s, DEFAULT_CHAIN_BUDGET),
            HypercentralityCheck::Nilpotent {
                steps: 2,
                class_bound: 3
            }
        );
    }

    #[test]
    fn c3_inverted() {
        let c3 = builtin("cyclic", &[3]).unwrap();
        let inv = inversion(&c3);
        let s = StructuredGroup::new(c3, 1, vec![inv]).unwrap();
        let chain: Vec<usize> = torsion_commutator_chain(&s)
            .iter()
            .map(|h| h.order())
            .collect();
        assert_eq!(chain, vec![3]);
        assert_eq!(
            structured_is_hypercentral(&s, DEFAULT_CHAIN_BUDGET),
            HypercentralityCheck::No { stalled_order: 3 }
        );
    }

    #[test]
    fn free_rank_zero_follows_nilpotency_of_t() {
        let k8 = builtin("quaternion8", &[]).unwrap();
        let s = StructuredGroup::new(k8, 0, vec![]).unwrap();
        assert!(structured_is_hypercentral(&s, DEFAULT_CHAIN_BUDGET).is_positive());
        let s3 = builtin("symmetric3", &[]).unwrap();
        let s = StructuredGroup::new(s3, 0, vec![]).unwrap();
        assert!(!structured_is_hypercentral(&s, DEFAULT_CHAIN_BUDGET).is_positive());
        let trivial = builtin("cyclic", &[1]).unwrap();
        let s = StructuredGroup::new(trivial, 0, vec![]).unwrap();
        assert_eq!(
            structured_is_hypercentral(&s, DEFAULT_CHAIN_BUDGET),
            HypercentralityCheck::Nilpotent {
                steps: 0,
                class_bound: 0
            }
        );
    }

    #[test]
    fn budget_exhaustion_is_indeterminate() {
        let c8 = builtin("cyclic", &[8]).unwrap();
        let inv = inversion(&c8);
        let s = StructuredGroup::new(c8, 1, vec![inv]).unwrap();
        assert_eq!(
            structured_is_hypercentral(&s, 1),
            HypercentralityCheck::Indeterminate { steps: 1 }
        );
    }

    #[test]
    fn validation() {
        let c3 = builtin("cyclic", &[3]).unwrap();
        assert!(matches!(
            StructuredGroup::new(c3.clone(), 1, vec![vec![0, 1, 1]]),
            Err(GroupError::NotAnAutomorphism(_))
        ));
        assert!(matches!(
            StructuredGroup::new(c3, 2, vec![vec![0, 1, 2]]),
            Err(GroupError::ActionCount {
                expected: 2,
                got: 1
            })
        ));
        let s3 = builtin("symmetric3", &[]).unwrap();
        let a = s3.conjugation(s3.index_of("r").unwrap());
        let b = s3.conjugation(s3.index_of("s").unwrap());
        assert_eq!(
            StructuredGroup::new(s3, 2, vec![a, b]).unwrap_err(),
            GroupError::ActionsDoNotCommute(0, 1)
        );
    }
}
