mod common;

use std::collections::BTreeSet;

use common::{all_subgroups, build, catalog, central_series_laws, is_normal_set};
use unitgroup_core::groups::{
    all_subgroups_normal, builtin, center, decompose_k8_e2, k8_action_class, quotient,
    structured_is_hypercentral, upper_central_series, BuiltinGroup, FiniteGroup, GroupError,
    HypercentralityCheck, K8Action, Nilpotency, StructuredGroup, Subgroup, DEFAULT_CHAIN_BUDGET,
};

#[test]
fn upper_central_series_matches_commutator_definition() {
    for (name, b) in catalog() {
        let g = build(&b);
        central_series_laws(&g).unwrap_or_else(|e| panic!("{name}: {e}"));
    }
}

#[test]
fn nilpotency_of_catalog() {
    let expect = |name: &str, n: Nilpotency| {
        let (_, b) = catalog().into_iter().find(|(c, _)| c == name).unwrap();
        assert_eq!(upper_central_series(&build(&b)).nilpotency, n, "{name}");
    };
    expect("C1", Nilpotency::Class(0));
    expect("C12", Nilpotency::Class(1));
    expect("K8", Nilpotency::Class(2));
    expect("D4", Nilpotency::Class(2));
    expect("D8", Nilpotency::Class(3));
    expect("Q16", Nilpotency::Class(3));
    expect("S3", Nilpotency::NotNilpotent);
    expect("D6", Nilpotency::NotNilpotent);
}

#[test]
fn dedekind_test_matches_subgroup_enumeration() {
    for (name, b) in catalog() {
        let g = build(&b);
        let oracle = all_subgroups(&g).iter().all(|h| is_normal_set(&g, h));
        assert_eq!(all_subgroups_normal(&g), oracle, "{name}");
    }
}

#[test]
fn subgroup_counts() {
    let count = |b: BuiltinGroup| all_subgroups(&build(&b)).len();
    assert_eq!(count(BuiltinGroup::Quaternion8), 6);
    assert_eq!(count(BuiltinGroup::Dihedral(4)), 10);
    assert_eq!(count(BuiltinGroup::ElemAbelian2(3)), 16);
    assert_eq!(count(BuiltinGroup::Cyclic(12)), 6);
}

#[test]
fn quotients_by_normal_subgroups() {
    for (name, b) in catalog() {
        let g = build(&b);
        for h in all_subgroups(&g) {
            let sub = Subgroup::new(&g, h.iter().copied()).unwrap();
            match quotient(&g, &sub) {
                Some(q) => {
                    assert!(is_normal_set(&g, &h), "{name}");
                    assert_eq!(q.group.order() * h.len(), g.order(), "{name}");
                    for x in g.elements() {
                        for y in g.elements() {
                            assert_eq!(
                                q.coset_of[g.mul(x, y)],
                                q.group.mul(q.coset_of[x], q.coset_of[y])
                            );
                        }
                    }
                }
                None => assert!(!is_normal_set(&g, &h), "{name}"),
            }
        }
    }
}

/// `K₈ × E₂` decomposition: factors have the right orders, intersect
/// trivially, commute, and the complement is central and elementary.
#[test]
fn decomposition_invariants() {
    for (name, b) in catalog() {
        let g = build(&b);
        let Ok(d) = decompose_k8_e2(&g) else { continue };
        assert_eq!(d.k8.subgroup.order(), 8, "{name}");
        assert_eq!(d.k8.subgroup.order() * d.e2.order(), g.order(), "{name}");
        let z = center(&g);
        for &e in d.e2.elements() {
            assert!(z.contains(e), "{name}");
            assert_eq!(g.mul(e, e), g.identity(), "{name}");
            assert!(e == g.identity() || !d.k8.subgroup.contains(e), "{name}");
        }
        let (i, j, u) = (d.k8.i, d.k8.j, d.k8.u);
        assert_eq!(g.mul(i, i), u);
        assert_eq!(g.mul(j, j), u);
        assert_eq!(g.mul(j, i), g.mul(g.mul(i, j), u));
    }
    let decomposable: BTreeSet<String> = catalog()
        .into_iter()
        .filter(|(_, b)| decompose_k8_e2(&build(b)).is_ok())
        .map(|(n, _)| n)
        .collect();
    assert_eq!(
        decomposable,
        BTreeSet::from(["K8".to_string(), "K8xC2".to_string()])
    );
    let big = BuiltinGroup::DirectProduct(vec![
        BuiltinGroup::Quaternion8,
        BuiltinGroup::ElemAbelian2(2),
    ]);
    assert!(decompose_k8_e2(&build(&big)).is_ok());
}

#[test]
fn inner_automorphisms_of_k8_are_classified() {
    let k8 = builtin("quaternion8", &[]).unwrap();
    let d = decompose_k8_e2(&k8).unwrap();
    let mut classes: Vec<K8Action> = k8
        .elements()
        .map(|x| k8_action_class(&d.k8, &k8.conjugation(x)).unwrap())
        .collect();
    classes.sort_by_key(|c| *c as u8);
    classes.dedup();
    assert_eq!(classes.len(), 4);
    assert!(!classes.contains(&K8Action::NotInner));

    let (i, j) = (k8.index_of("i").unwrap(), k8.index_of("j").unwrap());
    let swap = swap_i_j(&k8, i, j);
    assert_eq!(k8_action_class(&d.k8, &swap).unwrap(), K8Action::NotInner);
    let constant = vec![0; 8];
    assert!(matches!(
        k8_action_class(&d.k8, &constant),
        Err(GroupError::NotAnAutomorphism(_))
    ));
}

/// The automorphism of K₈ fixing `u` and exchanging `i` and `j`.
pub fn swap_i_j(k8: &FiniteGroup, i: usize, j: usize) -> Vec<usize> {
    let mut phi = vec![usize::MAX; k8.order()];
    for a in 0..4i64 {
        for b in 0..2i64 {
            let x = k8.mul(k8.pow(i, a), k8.pow(j, b));
            phi[x] = k8.mul(k8.pow(j, a), k8.pow(i, b));
        }
    }
    assert!(k8.is_automorphism(&phi));
    phi
}

#[test]
fn structured_validation() {
    let c4 = builtin("cyclic", &[4]).unwrap();
    assert!(matches!(
        StructuredGroup::new(c4.clone(), 2, vec![c4.elements().collect()]),
        Err(GroupError::ActionCount { .. })
    ));
    assert!(matches!(
        StructuredGroup::new(c4.clone(), 1, vec![vec![0, 2, 1, 3]]),
        Err(GroupError::NotAnAutomorphism(_))
    ));

    let s3 = builtin("symmetric3", &[]).unwrap();
    let a = s3.conjugation(s3.index_of("s").unwrap());
    let b = s3.conjugation(s3.index_of("r").unwrap());
    assert!(matches!(
        StructuredGroup::new(s3, 2, vec![a, b]),
        Err(GroupError::ActionsDoNotCommute(..))
    ));
}

#[test]
fn torsion_only_structured_groups_follow_nilpotency() {
    for (name, b) in catalog() {
        let g = b.build().unwrap();
        let nilpotent = matches!(upper_central_series(&g).nilpotency, Nilpotency::Class(_));
        let s = StructuredGroup::new(g, 0, vec![]).unwrap();
        let check = structured_is_hypercentral(&s, DEFAULT_CHAIN_BUDGET);
        assert_eq!(check.is_positive(), nilpotent, "{name}");
        assert!(!matches!(check, HypercentralityCheck::Indeterminate { .. }));
    }
}
