//! Finite groups as validated Cayley tables, plus the structured infinite
//! groups ℤᵏ ⋉ T used as input for the hypercentral classifier.

mod builtin;
mod hamiltonian;
mod series;
mod structured;

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

pub use builtin::{builtin, direct_product, BuiltinGroup};
pub use hamiltonian::{
    decompose_k8_e2, k8_action_class, DecompositionFailure, K8Action, K8E2Decomposition,
    QuaternionSubgroup,
};
pub(crate) use series::first_non_normal_cyclic;
pub use series::{
    all_subgroups_normal, center, centralizer, quotient, upper_central_series, CentralSeries,
    Nilpotency, Quotient,
};
pub use structured::{
    structured_is_hypercentral, torsion_commutator_chain, HypercentralityCheck, StructuredGroup,
    DEFAULT_CHAIN_BUDGET,
};

/// Largest accepted group order. Tables are dense `n × n`.
pub const MAX_GROUP_ORDER: usize = 1024;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("empty table")]
    Empty,
    #[error("table is not square (row {row} has {len} entries, expected {expected})")]
    NotSquare {
        row: usize,
        len: usize,
        expected: usize,
    },
    #[error("entry {value} at ({row}, {col}) is out of range")]
    OutOfRange {
        row: usize,
        col: usize,
        value: usize,
    },
    #[error("group order {0} exceeds the limit of {MAX_GROUP_ORDER}")]
    TooLarge(usize),
    #[error("element 0 is not a two-sided identity")]
    NoIdentity,
    #[error("element {0} has no two-sided inverse")]
    NoInverse(usize),
    #[error("not associative: ({0}*{1})*{2} != {0}*({1}*{2})")]
    NotAssociative(usize, usize, usize),
    #[error("label count {got} does not match group order {expected}")]
    LabelCount { got: usize, expected: usize },
    #[error("duplicate element label {0:?}")]
    DuplicateLabel(String),
    #[error("unknown builtin group {0:?}")]
    UnknownName(String),
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("element set is not a subgroup: {0}")]
    NotASubgroup(String),
    #[error("not an automorphism: {0}")]
    NotAnAutomorphism(String),
    #[error("expected {expected} actions for free rank {expected}, got {got}")]
    ActionCount { expected: usize, got: usize },
    #[error("actions {0} and {1} do not commute")]
    ActionsDoNotCommute(usize, usize),
}

/// A finite group given by its Cayley table over indices `0..n`, with 0 the
/// identity. Construction validates the group axioms.
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<usize>,
    inv: Vec<usize>,
    labels: Vec<String>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("order", &self.order)
            .field("labels", &self.labels)
            .finish()
    }
}

/// Validates a square table and wraps it as a group, with labels `1`, `g1`, `g2`, ….
pub fn group_from_table(table: &[Vec<usize>]) -> Result<FiniteGroup, GroupError> {
    let labels = (0..table.len())
        .map(|i| {
            if i == 0 {
                "1".to_string()
            } else {
                format!("g{i}")
            }
        })
        .collect();
    FiniteGroup::from_table(table, labels)
}

impl FiniteGroup {
    pub fn from_table(table: &[Vec<usize>], labels: Vec<String>) -> Result<Self, GroupError> {
        let n = table.len();
        if n == 0 {
            return Err(GroupError::Empty);
        }
        if n > MAX_GROUP_ORDER {
            return Err(GroupError::TooLarge(n));
        }
        let mut flat = Vec::with_capacity(n * n);
        for (row, entries) in table.iter().enumerate() {
            if entries.len() != n {
                return Err(GroupError::NotSquare {
                    row,
                    len: entries.len(),
                    expected: n,
                });
            }
            for (col, &value) in entries.iter().enumerate() {
                if value >= n {
                    return Err(GroupError::OutOfRange { row, col, value });
                }
            }
            flat.extend_from_slice(entries);
        }
        Self::from_flat(n, flat, labels)
    }

    pub(crate) fn from_flat(
        n: usize,
        table: Vec<usize>,
        labels: Vec<String>,
    ) -> Result<Self, GroupError> {
        if n > MAX_GROUP_ORDER {
            return Err(GroupError::TooLarge(n));
        }
        if labels.len() != n {
            return Err(GroupError::LabelCount {
                got: labels.len(),
                expected: n,
            });
        }
        let mut seen = BTreeSet::new();
        for label in &labels {
            if !seen.insert(label.as_str()) {
                return Err(GroupError::DuplicateLabel(label.clone()));
            }
        }
        let at = |a: usize, b: usize| table[a * n + b];
        if (0..n).any(|g| at(0, g) != g || at(g, 0) != g) {
            return Err(GroupError::NoIdentity);
        }
        let mut inv = vec![usize::MAX; n];
        for g in 0..n {
            match (0..n).find(|&h| at(g, h) == 0) {
                Some(h) if at(h, g) == 0 => inv[g] = h,
                _ => return Err(GroupError::NoInverse(g)),
            }
        }
        let group = FiniteGroup {
            order: n,
            table,
            inv,
            labels,
        };
        group.check_associative()?;
        Ok(group)
    }

    /// Light's test: it suffices to check `(xy)s = x(ys)` for `s` in a set
    /// whose left-normed products cover the group, because the set of such
    /// good `s` is closed under multiplication.
    fn check_associative(&self) -> Result<(), GroupError> {
        let n = self.order;
        let mut covered = vec![false; n];
        covered[0] = true;
        let mut reached = vec![0usize];
        let mut gens = Vec::new();
        for g in 0..n {
            if covered[g] {
                continue;
            }
            gens.push(g);
            // re-close: products c * s for c reached, s in gens
            let mut frontier: Vec<usize> = reached.clone();
            while let Some(c) = frontier.pop() {
                for &s in &gens {
                    let cs = self.mul(c, s);
                    if !covered[cs] {
                        covered[cs] = true;
                        reached.push(cs);
                        frontier.push(cs);
                    }
                }
            }
        }
        for &s in &gens {
            for x in 0..n {
                for y in 0..n {
                    if self.mul(self.mul(x, y), s) != self.mul(x, self.mul(y, s)) {
                        return Err(GroupError::NotAssociative(x, y, s));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self, GroupError> {
        if labels.len() != self.order {
            return Err(GroupError::LabelCount {
                got: labels.len(),
                expected: self.order,
            });
        }
        let mut seen = BTreeSet::new();
        for label in &labels {
            if !seen.insert(label.as_str()) {
                return Err(GroupError::DuplicateLabel(label.clone()));
            }
        }
        self.labels = labels;
        Ok(self)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub const fn identity(&self) -> usize {
        0
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    /// `g^k` for any signed exponent.
    pub fn pow(&self, g: usize, k: i64) -> usize {
        let base = if k < 0 { self.inv(g) } else { g };
        (0..k.unsigned_abs()).fold(0, |acc, _| self.mul(acc, base))
    }

    /// `g⁻¹ x g`.
    pub fn conj(&self, x: usize, g: usize) -> usize {
        self.mul(self.mul(self.inv(g), x), g)
    }

    /// `a⁻¹ b⁻¹ a b`.
    pub fn commutator(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b))
    }

    pub fn element_order(&self, g: usize) -> usize {
        let mut k = 1;
        let mut x = g;
        while x != 0 {
            x = self.mul(x, g);
            k += 1;
        }
        k
    }

    /// The powers `1, g, g², …` up to the order of `g`.
    pub fn powers(&self, g: usize) -> Vec<usize> {
        let mut out = vec![0];
        let mut x = g;
        while x != 0 {
            out.push(x);
            x = self.mul(x, g);
        }
        out
    }

    pub fn exponent(&self) -> usize {
        self.elements().map(|g| self.element_order(g)).fold(1, lcm)
    }

    pub fn is_abelian(&self) -> bool {
        self.elements()
            .all(|a| (a + 1..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn is_2_group(&self) -> bool {
        self.order.is_power_of_two()
    }

    pub fn label(&self, g: usize) -> &str {
        &self.labels[g]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Rows of the Cayley table.
    pub fn table_rows(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.order).map(|r| r.to_vec()).collect()
    }

    /// Whether a permutation of the elements is an automorphism.
    pub fn is_automorphism(&self, perm: &[usize]) -> bool {
        if perm.len() != self.order || perm.iter().any(|&x| x >= self.order) {
            return false;
        }
        let mut hit = vec![false; self.order];
        for &x in perm {
            if std::mem::replace(&mut hit[x], true) {
                return false;
            }
        }
        self.elements().all(|a| {
            self.elements()
                .all(|b| perm[self.mul(a, b)] == self.mul(perm[a], perm[b]))
        })
    }

    /// The inner automorphism `x ↦ g⁻¹ x g` as a permutation.
    pub fn conjugation(&self, g: usize) -> Vec<usize> {
        self.elements().map(|x| self.conj(x, g)).collect()
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

/// A subset of a group closed under products and inverses, stored sorted.
#[derive(Clone, PartialEq, Eq)]
pub struct Subgroup<'g> {
    parent: &'g FiniteGroup,
    elements: Vec<usize>,
}

impl fmt::Debug for Subgroup<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels: Vec<&str> = self
            .elements
            .iter()
            .map(|&g| self.parent.label(g))
            .collect();
        f.debug_tuple("Subgroup").field(&labels).finish()
    }
}

impl<'g> Subgroup<'g> {
    /// Validates that `elements` is a subgroup of `parent`.
    pub fn new(
        parent: &'g FiniteGroup,
        elements: impl IntoIterator<Item = usize>,
    ) -> Result<Self, GroupError> {
        let set: BTreeSet<usize> = elements.into_iter().collect();
        if let Some(&bad) = set.iter().find(|&&g| g >= parent.order()) {
            return Err(GroupError::NotASubgroup(format!(
                "index {bad} out of range"
            )));
        }
        if !set.contains(&0) {
            return Err(GroupError::NotASubgroup("missing identity".into()));
        }
        for &a in &set {
            if !set.contains(&parent.inv(a)) {
                return Err(GroupError::NotASubgroup(format!(
                    "no inverse for {}",
                    parent.label(a)
                )));
            }
            for &b in &set {
                if !set.contains(&parent.mul(a, b)) {
                    return Err(GroupError::NotASubgroup(format!(
                        "{} * {} escapes",
                        parent.label(a),
                        parent.label(b)
                    )));
                }
            }
        }
        Ok(Subgroup {
            parent,
            elements: set.into_iter().collect(),
        })
    }

    pub fn trivial(parent: &'g FiniteGroup) -> Self {
        Subgroup {
            parent,
            elements: vec![0],
        }
    }

    pub fn whole(parent: &'g FiniteGroup) -> Self {
        Subgroup {
            parent,
            elements: parent.elements().collect(),
        }
    }

    /// Subgroup generated by `gens` (closure under products suffices in a
    /// finite group).
    pub fn generated(parent: &'g FiniteGroup, gens: impl IntoIterator<Item = usize>) -> Self {
        let gens: Vec<usize> = gens.into_iter().filter(|&g| g != 0).collect();
        let mut member = vec![false; parent.order()];
        member[0] = true;
        let mut found = vec![0usize];
        let mut frontier = vec![0usize];
        while let Some(x) = frontier.pop() {
            for &s in &gens {
                let y = parent.mul(x, s);
                if !member[y] {
                    member[y] = true;
                    found.push(y);
                    frontier.push(y);
                }
            }
        }
        found.sort_unstable();
        Subgroup {
            parent,
            elements: found,
        }
    }

    pub fn parent(&self) -> &'g FiniteGroup {
        self.parent
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, g: usize) -> bool {
        self.elements.binary_search(&g).is_ok()
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    pub fn is_whole(&self) -> bool {
        self.elements.len() == self.parent.order()
    }

    pub fn is_normal(&self) -> bool {
        self.elements.iter().all(|&h| {
            self.parent
                .elements()
                .all(|g| self.contains(self.parent.conj(h, g)))
        })
    }

    pub fn is_subset_of(&self, other: &Subgroup<'_>) -> bool {
        self.elements.iter().all(|&g| other.contains(g))
    }

    pub fn labels(&self) -> Vec<String> {
        self.elements
            .iter()
            .map(|&g| self.parent.label(g).to_string())
            .collect()
    }
}
