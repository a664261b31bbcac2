use serde::Serialize;

use super::{FiniteGroup, Subgroup};

pub fn centralizer<'g>(g: &'g FiniteGroup, set: &[usize]) -> Subgroup<'g> {
    let elements: Vec<usize> = g
        .elements()
        .filter(|&x| set.iter().all(|&s| g.mul(x, s) == g.mul(s, x)))
        .collect();
    Subgroup {
        parent: g,
        elements,
    }
}

pub fn center(g: &FiniteGroup) -> Subgroup<'_> {
    let all: Vec<usize> = g.elements().collect();
    centralizer(g, &all)
}

/// `G/N` materialised as a Cayley table on cosets.
#[derive(Debug, Clone)]
pub struct Quotient {
    pub group: FiniteGroup,
    /// Coset index of each element of the parent.
    pub coset_of: Vec<usize>,
}

/// Quotient by a normal subgroup. Cosets are numbered by their smallest
/// element, so the coset of the identity is 0. Returns `None` when `n` is
/// not normal.
pub fn quotient(g: &FiniteGroup, n: &Subgroup<'_>) -> Option<Quotient> {
    if !n.is_normal() {
        return None;
    }
    let mut coset_of = vec![usize::MAX; g.order()];
    let mut reps = Vec::new();
    for x in g.elements() {
        if coset_of[x] != usize::MAX {
            continue;
        }
        let idx = reps.len();
        reps.push(x);
        for &h in n.elements() {
            coset_of[g.mul(x, h)] = idx;
        }
    }
    let m = reps.len();
    let mut table = Vec::with_capacity(m * m);
    for &a in &reps {
        for &b in &reps {
            table.push(coset_of[g.mul(a, b)]);
        }
    }
    let labels = reps.iter().map(|&r| g.label(r).to_string()).collect();
    let group =
        FiniteGroup::from_flat(m, table, labels).expect("quotient of a group by a normal subgroup");
    Some(Quotient { group, coset_of })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Nilpotency {
    /// First index at which the series reaches the whole group.
    Class(usize),
    NotNilpotent,
}

#[derive(Debug, Clone)]
pub struct CentralSeries<'g> {
    /// `Z₀ = 1 ⊂ Z₁ ⊂ …`, strictly increasing; the last term is the
    /// hypercenter.
    pub terms: Vec<Subgroup<'g>>,
    pub nilpotency: Nilpotency,
}

impl CentralSeries<'_> {
    pub fn orders(&self) -> Vec<usize> {
        self.terms.iter().map(|t| t.order()).collect()
    }
}

/// Upper central series, each step computed as the preimage of the center
/// of `G / Z_k`.
pub fn upper_central_series(g: &FiniteGroup) -> CentralSeries<'_> {
    let mut terms = vec![Subgroup::trivial(g)];
    loop {
        let current = terms.last().expect("series is nonempty");
        if current.is_whole() {
            let class = terms.len() - 1;
            return CentralSeries {
                terms,
                nilpotency: Nilpotency::Class(class),
            };
        }
        let q = quotient(g, current).expect("terms of the upper central series are normal");
        let z = center(&q.group);
        let next: Vec<usize> = g
            .elements()
            .filter(|&x| z.contains(q.coset_of[x]))
            .collect();
        if next.len() == current.order() {
            return CentralSeries {
                terms,
                nilpotency: Nilpotency::NotNilpotent,
            };
        }
        terms.push(Subgroup {
            parent: g,
            elements: next,
        });
    }
}

/// Dedekind test: every subgroup is normal iff every cyclic subgroup is,
/// and `⟨t⟩` is normal iff each conjugate of `t` lies in it.
pub fn all_subgroups_normal(g: &FiniteGroup) -> bool {
    first_non_normal_cyclic(g).is_none()
}

/// First `(t, x)` in index order with `x⁻¹ t x ∉ ⟨t⟩`.
pub(crate) fn first_non_normal_cyclic(g: &FiniteGroup) -> Option<(usize, usize)> {
    for t in g.elements() {
        let mut cyclic = vec![false; g.order()];
        for p in g.powers(t) {
            cyclic[p] = true;
        }
        if let Some(x) = g.elements().find(|&x| !cyclic[g.conj(t, x)]) {
            return Some((t, x));
        }
    }
    None
}
