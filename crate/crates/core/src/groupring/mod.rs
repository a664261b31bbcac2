//! Group rings `RG` over the coefficient rings of [`crate::coeff`].
//!
//! Elements are sparse maps from group-element index to a nonzero
//! coefficient. Multiplication is convolution through the Cayley table;
//! inversion solves `regular_rep(x) · v = e₁` exactly and reads `x⁻¹` off
//! `v`, then checks both products.

pub mod matrix;
mod text;

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::coeff::{CoeffError, CoeffRing};
use crate::groups::FiniteGroup;
use matrix::SquareMatrix;

pub use text::parse_element;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupRingError {
    #[error("operands live in different group rings")]
    MixedContexts,
    #[error("element is not a unit")]
    NotAUnit,
    #[error("characteristic {p} divides the element order {order}")]
    OrderDivisibleByChar { order: usize, p: u64 },
    #[error("idempotents need denominators in characteristic 0")]
    CharacteristicZero,
    #[error("unknown group element {0:?}")]
    UnknownElement(String),
    #[error("element index {0} out of range")]
    IndexOutOfRange(usize),
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Coeff(#[from] CoeffError),
}

#[derive(Clone)]
pub struct GroupRingElement<R: CoeffRing> {
    group: Arc<FiniteGroup>,
    ring: R,
    coeffs: BTreeMap<usize, R::Elem>,
}

impl<R: CoeffRing> PartialEq for GroupRingElement<R> {
    fn eq(&self, other: &Self) -> bool {
        self.same_context(other) && self.coeffs == other.coeffs
    }
}

impl<R: CoeffRing> Eq for GroupRingElement<R> {}

impl<R: CoeffRing> fmt::Debug for GroupRingElement<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GroupRingElement[{}]({})", self.ring.name(), self)
    }
}

impl<R: CoeffRing> fmt::Display for GroupRingElement<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&text::format_element(self))
    }
}

impl<R: CoeffRing> GroupRingElement<R> {
    pub fn zero(group: Arc<FiniteGroup>, ring: R) -> Self {
        GroupRingElement {
            group,
            ring,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one(group: Arc<FiniteGroup>, ring: R) -> Self {
        Self::basis(group, ring, 0)
    }

    /// The group element `g` viewed in `RG`.
    pub fn basis(group: Arc<FiniteGroup>, ring: R, g: usize) -> Self {
        assert!(g < group.order(), "group element index out of range");
        let one = ring.one();
        let mut coeffs = BTreeMap::new();
        coeffs.insert(g, one);
        GroupRingElement {
            group,
            ring,
            coeffs,
        }
    }

    /// Builds an element from `(group index, coefficient)` pairs; repeated
    /// indices are summed and zeros dropped.
    pub fn from_terms(
        group: Arc<FiniteGroup>,
        ring: R,
        terms: impl IntoIterator<Item = (usize, R::Elem)>,
    ) -> Result<Self, GroupRingError> {
        let mut coeffs: BTreeMap<usize, R::Elem> = BTreeMap::new();
        for (g, c) in terms {
            if g >= group.order() {
                return Err(GroupRingError::IndexOutOfRange(g));
            }
            let entry = coeffs.entry(g).or_insert_with(|| ring.zero());
            *entry = ring.add(entry, &c);
        }
        coeffs.retain(|_, c| !ring.is_zero(c));
        Ok(GroupRingElement {
            group,
            ring,
            coeffs,
        })
    }

    /// From a dense coefficient vector indexed by group element.
    pub fn from_dense(group: Arc<FiniteGroup>, ring: R, dense: Vec<R::Elem>) -> Self {
        assert_eq!(dense.len(), group.order(), "dense vector length");
        let coeffs = dense
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !ring.is_zero(c))
            .collect();
        GroupRingElement {
            group,
            ring,
            coeffs,
        }
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn coeff(&self, g: usize) -> R::Elem {
        self.coeffs
            .get(&g)
            .cloned()
            .unwrap_or_else(|| self.ring.zero())
    }

    /// Nonzero `(index, coefficient)` pairs in index order.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &R::Elem)> {
        self.coeffs.iter().map(|(&g, c)| (g, c))
    }

    pub fn support_size(&self) -> usize {
        self.coeffs.len()
    }

    pub fn dense(&self) -> Vec<R::Elem> {
        self.group.elements().map(|g| self.coeff(g)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs.get(&0).is_some_and(|c| self.ring.is_one(c))
    }

    pub fn same_context(&self, other: &Self) -> bool {
        (Arc::ptr_eq(&self.group, &other.group) || self.group == other.group)
            && self.ring == other.ring
    }

    fn check(&self, other: &Self) -> Result<(), GroupRingError> {
        if self.same_context(other) {
            Ok(())
        } else {
            Err(GroupRingError::MixedContexts)
        }
    }

    fn with_coeffs(&self, coeffs: BTreeMap<usize, R::Elem>) -> Self {
        GroupRingElement {
            group: self.group.clone(),
            ring: self.ring.clone(),
            coeffs,
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, GroupRingError> {
        self.check(other)?;
        let mut coeffs = self.coeffs.clone();
        for (&g, c) in &other.coeffs {
            let sum = match coeffs.get(&g) {
                Some(a) => self.ring.add(a, c),
                None => c.clone(),
            };
            if self.ring.is_zero(&sum) {
                coeffs.remove(&g);
            } else {
                coeffs.insert(g, sum);
            }
        }
        Ok(self.with_coeffs(coeffs))
    }

    pub fn neg(&self) -> Self {
        self.with_coeffs(
            self.coeffs
                .iter()
                .map(|(&g, c)| (g, self.ring.neg(c)))
                .collect(),
        )
    }

    pub fn sub(&self, other: &Self) -> Result<Self, GroupRingError> {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &R::Elem) -> Self {
        self.with_coeffs(
            self.coeffs
                .iter()
                .map(|(&g, a)| (g, self.ring.mul(c, a)))
                .filter(|(_, a)| !self.ring.is_zero(a))
                .collect(),
        )
    }

    pub fn mul(&self, other: &Self) -> Result<Self, GroupRingError> {
        self.check(other)?;
        let ring = &self.ring;
        let mut acc: Vec<Option<R::Elem>> = vec![None; self.group.order()];
        for (&a, ca) in &self.coeffs {
            for (&b, cb) in &other.coeffs {
                let slot = &mut acc[self.group.mul(a, b)];
                let prod = ring.mul(ca, cb);
                *slot = Some(match slot.take() {
                    Some(s) => ring.add(&s, &prod),
                    None => prod,
                });
            }
        }
        let coeffs = acc
            .into_iter()
            .enumerate()
            .filter_map(|(g, c)| c.filter(|c| !ring.is_zero(c)).map(|c| (g, c)))
            .collect();
        Ok(self.with_coeffs(coeffs))
    }

    /// Sum of the coefficients.
    pub fn augmentation(&self) -> R::Elem {
        self.coeffs
            .values()
            .fold(self.ring.zero(), |acc, c| self.ring.add(&acc, c))
    }

    /// `∑ a_g g ↦ ∑ a_g g⁻¹`.
    pub fn star(&self) -> Self {
        self.with_coeffs(
            self.coeffs
                .iter()
                .map(|(&g, c)| (self.group.inv(g), c.clone()))
                .collect(),
        )
    }

    /// Matrix of left multiplication by `self` in the group basis: column
    /// `g` holds the coefficients of `self · g`.
    pub fn regular_rep(&self) -> SquareMatrix<R::Elem> {
        let n = self.group.order();
        let mut entries = vec![self.ring.zero(); n * n];
        for (&a, c) in &self.coeffs {
            for g in 0..n {
                entries[self.group.mul(a, g) * n + g] = c.clone();
            }
        }
        let mut it = entries.into_iter();
        SquareMatrix::from_fn(n, |_, _| it.next().expect("n*n entries"))
    }

    pub fn try_invert(&self) -> Result<Self, GroupRingError> {
        if self.ring.unit_inverse(&self.augmentation()).is_none() {
            // augmentation is a ring homomorphism, so units map to units
            return Err(GroupRingError::NotAUnit);
        }
        let n = self.group.order();
        let rhs: Vec<R::Elem> = (0..n)
            .map(|i| {
                if i == 0 {
                    self.ring.one()
                } else {
                    self.ring.zero()
                }
            })
            .collect();
        let v =
            matrix::solve(&self.ring, &self.regular_rep(), &rhs).ok_or(GroupRingError::NotAUnit)?;
        let inverse = Self::from_dense(self.group.clone(), self.ring.clone(), v);
        if self.mul(&inverse)?.is_one() && inverse.mul(self)?.is_one() {
            Ok(inverse)
        } else {
            Err(GroupRingError::NotAUnit)
        }
    }

    /// `self^k`; negative exponents need a unit.
    pub fn pow(&self, k: i64) -> Result<Self, GroupRingError> {
        let mut base = if k < 0 {
            self.try_invert()?
        } else {
            self.clone()
        };
        let mut exp = k.unsigned_abs();
        let mut acc = Self::one(self.group.clone(), self.ring.clone());
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            exp >>= 1;
            if exp > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// `g⁻¹ · self · g`.
    pub fn conj(&self, g: usize) -> Self {
        self.with_coeffs(
            self.coeffs
                .iter()
                .map(|(&h, c)| (self.group.conj(h, g), c.clone()))
                .collect(),
        )
    }

    /// `u⁻¹ v⁻¹ u v`.
    pub fn commutator(&self, other: &Self) -> Result<Self, GroupRingError> {
        self.check(other)?;
        let ui = self.try_invert()?;
        let vi = other.try_invert()?;
        ui.mul(&vi)?.mul(self)?.mul(other)
    }

    /// Whether `self = c·g` for one group element `g` and a unit scalar `c`
    /// (over ℤ: `±g`).
    pub fn is_trivial_unit(&self) -> bool {
        self.coeffs.len() == 1
            && self
                .coeffs
                .values()
                .all(|c| self.ring.unit_inverse(c).is_some())
    }
}

/// `ĝ / o(g) = o(g)⁻¹ (1 + g + … + g^{o(g)-1})`, an idempotent when the
/// characteristic does not divide `o(g)`.
pub fn hat_idempotent<R: CoeffRing>(
    group: Arc<FiniteGroup>,
    g: usize,
    ring: R,
) -> Result<GroupRingElement<R>, GroupRingError> {
    if g >= group.order() {
        return Err(GroupRingError::IndexOutOfRange(g));
    }
    let order = group.element_order(g);
    let p = ring.characteristic();
    if p == 0 {
        return Err(GroupRingError::CharacteristicZero);
    }
    if (order as u64).is_multiple_of(p) {
        return Err(GroupRingError::OrderDivisibleByChar { order, p });
    }
    let scalar = ring
        .unit_inverse(&ring.from_i64(order as i64))
        .ok_or(GroupRingError::OrderDivisibleByChar { order, p })?;
    let terms: Vec<(usize, R::Elem)> = group
        .powers(g)
        .into_iter()
        .map(|h| (h, scalar.clone()))
        .collect();
    GroupRingElement::from_terms(group, ring, terms)
}
