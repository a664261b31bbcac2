//! Oracles and property checks shared by the integration suites and the
//! acceptance runner. Checks return `Err(description)` on the first
//! violation so callers can either assert or report.

#![allow(dead_code)]

use std::collections::BTreeSet;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use unitgroup_core::coeff::{CoeffRing, FunctionField, GaloisField, Poly, RatFunc};
use unitgroup_core::groupring::matrix::mat_mul;
use unitgroup_core::groupring::GroupRingElement;
use unitgroup_core::groups::{upper_central_series, BuiltinGroup, FiniteGroup};

pub type Check = Result<(), String>;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn ensure(cond: bool, what: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(what())
    }
}

/// Every builtin group of order at most 16 used by the suites, with a
/// display name.
pub fn catalog() -> Vec<(String, BuiltinGroup)> {
    use BuiltinGroup::*;
    let mut out: Vec<(String, BuiltinGroup)> =
        (1..=16).map(|n| (format!("C{n}"), Cyclic(n))).collect();
    out.extend((2..=8).map(|n| (format!("D{n}"), Dihedral(n))));
    out.extend((1..=4).map(|k| (format!("E2^{k}"), ElemAbelian2(k))));
    out.push(("K8".into(), Quaternion8));
    out.push(("Q16".into(), GenQuaternion16));
    out.push(("S3".into(), Symmetric3));
    let products: [(&str, Vec<BuiltinGroup>); 8] = [
        ("K8xC2", vec![Quaternion8, Cyclic(2)]),
        ("C2xC4", vec![Cyclic(2), Cyclic(4)]),
        ("C4xC4", vec![Cyclic(4), Cyclic(4)]),
        ("C2xC6", vec![Cyclic(2), Cyclic(6)]),
        ("C3xC3", vec![Cyclic(3), Cyclic(3)]),
        ("C2xS3", vec![Cyclic(2), Symmetric3]),
        ("C2xD4", vec![Cyclic(2), Dihedral(4)]),
        ("C2xE2^3", vec![Cyclic(2), ElemAbelian2(3)]),
    ];
    out.extend(
        products
            .into_iter()
            .map(|(n, fs)| (n.to_string(), DirectProduct(fs))),
    );
    out
}

pub fn build(b: &BuiltinGroup) -> Arc<FiniteGroup> {
    Arc::new(b.build().expect("catalog groups build"))
}

// ---------------------------------------------------------------- fields

pub fn random_ff(field: &GaloisField, r: &mut ChaCha8Rng) -> <GaloisField as CoeffRing>::Elem {
    field.from_code(r.gen_range(0..field.order()))
}

fn random_poly(p: u64, max_deg: usize, r: &mut ChaCha8Rng) -> Poly {
    let deg = r.gen_range(0..=max_deg);
    Poly::from_coeffs(p, (0..=deg).map(|_| r.gen_range(0..p)))
}

pub fn random_ratfunc(k: &FunctionField, r: &mut ChaCha8Rng) -> RatFunc {
    let p = k.p();
    let num = if r.gen_bool(0.1) {
        Poly::zero()
    } else {
        random_poly(p, 3, r)
    };
    let mut den = random_poly(p, 2, r);
    while den.is_zero() {
        den = random_poly(p, 2, r);
    }
    k.normalize(&num, &den).expect("nonzero denominator")
}

/// Field axioms on `cases` random triples, plus `p·1 = 0`.
pub fn field_axioms<R: CoeffRing>(
    ring: &R,
    cases: usize,
    seed: u64,
    mut sample: impl FnMut(&mut ChaCha8Rng) -> R::Elem,
) -> Check {
    let mut r = rng(seed);
    let (zero, one) = (ring.zero(), ring.one());
    ensure(
        ring.is_zero(&ring.from_i64(ring.characteristic() as i64)),
        || format!("{}: characteristic times one is not zero", ring.name()),
    )?;
    for case in 0..cases {
        let (a, b, c) = (sample(&mut r), sample(&mut r), sample(&mut r));
        let fail = |law: &str| {
            format!(
                "{}: {law} fails on case {case}: {a:?}, {b:?}, {c:?}",
                ring.name()
            )
        };
        ensure(
            ring.add(&ring.add(&a, &b), &c) == ring.add(&a, &ring.add(&b, &c)),
            || fail("additive associativity"),
        )?;
        ensure(
            ring.mul(&ring.mul(&a, &b), &c) == ring.mul(&a, &ring.mul(&b, &c)),
            || fail("multiplicative associativity"),
        )?;
        ensure(ring.add(&a, &b) == ring.add(&b, &a), || {
            fail("additive commutativity")
        })?;
        ensure(ring.mul(&a, &b) == ring.mul(&b, &a), || {
            fail("multiplicative commutativity")
        })?;
        ensure(
            ring.mul(&a, &ring.add(&b, &c)) == ring.add(&ring.mul(&a, &b), &ring.mul(&a, &c)),
            || fail("distributivity"),
        )?;
        ensure(ring.add(&a, &zero) == a && ring.mul(&a, &one) == a, || {
            fail("identities")
        })?;
        ensure(ring.is_zero(&ring.add(&a, &ring.neg(&a))), || {
            fail("additive inverse")
        })?;
        if !ring.is_zero(&a) {
            let inv = ring
                .unit_inverse(&a)
                .ok_or_else(|| fail("nonzero element without inverse"))?;
            ensure(ring.is_one(&ring.mul(&a, &inv)), || {
                fail("multiplicative inverse")
            })?;
        }
    }
    Ok(())
}

// ------------------------------------------------------------ group rings

pub fn random_element<R: CoeffRing>(
    group: &Arc<FiniteGroup>,
    ring: &R,
    r: &mut ChaCha8Rng,
    sample: &mut impl FnMut(&mut ChaCha8Rng) -> R::Elem,
) -> GroupRingElement<R> {
    let dense = (0..group.order())
        .map(|_| {
            if r.gen_bool(0.5) {
                sample(r)
            } else {
                ring.zero()
            }
        })
        .collect();
    GroupRingElement::from_dense(group.clone(), ring.clone(), dense)
}

/// Ring laws of `RG`, multiplicativity of the augmentation and of the
/// regular representation, and `*` as an anti-automorphism and involution.
pub fn group_ring_laws<R: CoeffRing>(
    group: &Arc<FiniteGroup>,
    ring: &R,
    cases: usize,
    seed: u64,
    mut sample: impl FnMut(&mut ChaCha8Rng) -> R::Elem,
) -> Check {
    let mut r = rng(seed);
    for case in 0..cases {
        let x = random_element(group, ring, &mut r, &mut sample);
        let y = random_element(group, ring, &mut r, &mut sample);
        let z = random_element(group, ring, &mut r, &mut sample);
        let fail = |law: &str| {
            format!(
                "{}: {law} fails on case {case}: x = {x}, y = {y}, z = {z}",
                ring.name()
            )
        };
        let xy = x.mul(&y).unwrap();
        ensure(
            xy.mul(&z).unwrap() == x.mul(&y.mul(&z).unwrap()).unwrap(),
            || fail("associativity"),
        )?;
        ensure(
            x.mul(&y.add(&z).unwrap()).unwrap() == xy.add(&x.mul(&z).unwrap()).unwrap(),
            || fail("left distributivity"),
        )?;
        ensure(
            x.add(&y).unwrap().mul(&z).unwrap()
                == x.mul(&z).unwrap().add(&y.mul(&z).unwrap()).unwrap(),
            || fail("right distributivity"),
        )?;
        ensure(
            xy.augmentation() == ring.mul(&x.augmentation(), &y.augmentation()),
            || fail("augmentation multiplicativity"),
        )?;
        ensure(xy.star() == y.star().mul(&x.star()).unwrap(), || {
            fail("star anti-automorphism")
        })?;
        ensure(x.star().star() == x, || fail("star involution"))?;
        ensure(
            xy.regular_rep() == mat_mul(ring, &x.regular_rep(), &y.regular_rep()),
            || fail("regular representation multiplicativity"),
        )?;
    }
    Ok(())
}

// ----------------------------------------------------------------- groups

/// All subgroups, by closing under adjoining one element at a time.
pub fn all_subgroups(g: &FiniteGroup) -> Vec<BTreeSet<usize>> {
    let close = |mut set: BTreeSet<usize>| loop {
        let products: Vec<usize> = set
            .iter()
            .flat_map(|&a| set.iter().map(move |&b| g.mul(a, b)))
            .filter(|x| !set.contains(x))
            .collect();
        if products.is_empty() {
            return set;
        }
        set.extend(products);
    };
    let mut found: BTreeSet<BTreeSet<usize>> = BTreeSet::new();
    let mut frontier = vec![BTreeSet::from([g.identity()])];
    found.insert(frontier[0].clone());
    while let Some(h) = frontier.pop() {
        for x in g.elements().filter(|x| !h.contains(x)) {
            let mut bigger = h.clone();
            bigger.insert(x);
            let bigger = close(bigger);
            if found.insert(bigger.clone()) {
                frontier.push(bigger);
            }
        }
    }
    found.into_iter().collect()
}

pub fn is_normal_set(g: &FiniteGroup, h: &BTreeSet<usize>) -> bool {
    h.iter()
        .all(|&x| g.elements().all(|y| h.contains(&g.conj(x, y))))
}

/// Upper central series: every term normal, strictly increasing, and
/// `Z_{k+1} = {x : [x, y] ∈ Z_k for all y}`.
pub fn central_series_laws(g: &FiniteGroup) -> Check {
    let series = upper_central_series(g);
    let terms: Vec<BTreeSet<usize>> = series
        .terms
        .iter()
        .map(|t| t.elements().iter().copied().collect())
        .collect();
    ensure(terms[0] == BTreeSet::from([g.identity()]), || {
        "Z_0 is not trivial".into()
    })?;
    for (k, t) in terms.iter().enumerate() {
        ensure(is_normal_set(g, t), || format!("Z_{k} is not normal"))?;
        if k > 0 {
            ensure(
                terms[k - 1].is_subset(t) && terms[k - 1].len() < t.len(),
                || format!("Z_{} is not strictly inside Z_{k}", k - 1),
            )?;
        }
        let next: BTreeSet<usize> = g
            .elements()
            .filter(|&x| g.elements().all(|y| t.contains(&g.commutator(x, y))))
            .collect();
        match terms.get(k + 1) {
            Some(n) => ensure(*n == next, || {
                format!("Z_{} differs from the commutator definition", k + 1)
            })?,
            None => ensure(next == *t, || {
                format!("series stops at Z_{k} but the next term grows")
            })?,
        }
    }
    Ok(())
}
