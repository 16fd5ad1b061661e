use super::iso::are_isomorphic;
use super::*;

fn named(n: NamedGroup) -> FiniteGroup {
    n.build().unwrap()
}

fn s3_table() -> Vec<Vec<usize>> {
    let s3 = named(NamedGroup::Symmetric(3));
    s3.table()
}

fn brute_center(g: &FiniteGroup) -> Vec<usize> {
    g.elements().filter(|&a| g.elements().all(|b| g.mul(a, b) == g.mul(b, a))).collect()
}

fn brute_class_sizes(g: &FiniteGroup) -> Vec<usize> {
    let mut seen = vec![false; g.order()];
    let mut sizes = Vec::new();
    for a in g.elements() {
        if seen[a] {
            continue;
        }
        let mut class: Vec<usize> = g.elements().map(|x| g.mul(g.mul(g.inv(x), a), x)).collect();
        class.sort_unstable();
        class.dedup();
        for &c in &class {
            seen[c] = true;
        }
        sizes.push(class.len());
    }
    sizes.sort_unstable();
    sizes
}

/// Every subset closed under multiplication, by exhaustive enumeration.
fn brute_subgroup_count(g: &FiniteGroup) -> usize {
    let n = g.order();
    assert!(n <= 12);
    (0u32..1 << n)
        .filter(|&mask| {
            let has = |x: usize| mask >> x & 1 == 1;
            has(g.identity()) && (0..n).all(|a| !has(a) || (0..n).all(|b| !has(b) || has(g.mul(a, b))))
        })
        .count()
}

#[test]
fn trivial_table() {
    let g = FiniteGroup::from_multiplication_table(vec![vec![0]], vec!["e".into()]).unwrap();
    assert_eq!(g.order(), 1);
    assert_eq!(g.identity(), 0);
}

#[test]
fn z4_addition_table() {
    let table = (0..4).map(|a| (0..4).map(|b| (a + b) % 4).collect()).collect();
    let labels = (0..4).map(|i| i.to_string()).collect();
    let g = FiniteGroup::from_multiplication_table(table, labels).unwrap();
    assert!(g.is_abelian());
    for a in g.elements() {
        assert_eq!(g.mul(a, g.inv(a)), 0);
    }
}

#[test]
fn corrupted_s3_reports_failing_triple() {
    let mut t = s3_table();
    let labels: Vec<String> = (0..6).map(|i| format!("e{i}")).collect();
    let (a, b) = (1..6).flat_map(|a| (1..6).map(move |b| (a, b))).find(|&(a, b)| t[a][b] != 0).unwrap();
    t[a][b] = (1..6).find(|&v| v != t[a][b]).unwrap();
    match FiniteGroup::from_multiplication_table(t.clone(), labels) {
        Err(GroupError::NotAssociative { a, b, c }) => {
            assert_ne!(t[t[a][b]][c], t[a][t[b][c]]);
        }
        other => panic!("expected NotAssociative, got {other:?}"),
    }
}

#[test]
fn duplicate_labels_rejected() {
    let table = vec![vec![0, 1], vec![1, 0]];
    let err = FiniteGroup::from_multiplication_table(table, vec!["a".into(), "a".into()]).unwrap_err();
    assert!(matches!(err, GroupError::DuplicateLabel(_)));
}

#[test]
fn permutation_closures() {
    let s3 = FiniteGroup::from_permutation_generators(3, &[vec![1, 2, 0], vec![1, 0, 2]], 100).unwrap();
    assert_eq!(s3.order(), 6);
    assert!(!s3.is_abelian());
    let c4 = FiniteGroup::from_permutation_generators(4, &[vec![1, 2, 3, 0]], 100).unwrap();
    assert_eq!(c4.order(), 4);
    let triv = FiniteGroup::from_permutation_generators(2, &[], 100).unwrap();
    assert_eq!(triv.order(), 1);
    assert_eq!(triv.label(0), "()");
    let err = FiniteGroup::from_permutation_generators(3, &[vec![0, 0, 1]], 100).unwrap_err();
    assert_eq!(err, GroupError::NotAPermutation { generator: 0, degree: 3 });
    let err = named(NamedGroup::Symmetric(3));
    assert_eq!(err.order(), 6);
    let capped = FiniteGroup::from_permutation_generators(5, &[vec![1, 2, 3, 4, 0], vec![1, 0, 2, 3, 4]], 50);
    assert_eq!(capped.unwrap_err(), GroupError::OrderCapExceeded { cap: 50 });
}

#[test]
fn named_orders() {
    for (spec, order) in [
        (NamedGroup::Cyclic(1), 1),
        (NamedGroup::Cyclic(7), 7),
        (NamedGroup::Dihedral(8), 8),
        (NamedGroup::Dihedral(6), 6),
        (NamedGroup::Quaternion(8), 8),
        (NamedGroup::Quaternion(16), 16),
        (NamedGroup::Symmetric(4), 24),
        (NamedGroup::Alternating(4), 12),
        (NamedGroup::Alternating(5), 60),
        (NamedGroup::ElementaryAbelian(3, 2), 9),
        (NamedGroup::Heisenberg(3), 27),
        (NamedGroup::HeisPair, 16),
        (NamedGroup::D8xC4, 32),
    ] {
        assert_eq!(named(spec).order(), order, "{spec}");
    }
}

#[test]
fn named_tables_validate() {
    for spec in [NamedGroup::Quaternion(8), NamedGroup::Quaternion(12), NamedGroup::Dihedral(10), NamedGroup::Heisenberg(2)] {
        let g = named(spec);
        FiniteGroup::from_multiplication_table(g.table(), g.labels().to_vec()).unwrap();
    }
}

#[test]
fn named_out_of_range() {
    for spec in [
        NamedGroup::Cyclic(0),
        NamedGroup::Dihedral(7),
        NamedGroup::Quaternion(4),
        NamedGroup::Symmetric(7),
        NamedGroup::ElementaryAbelian(4, 2),
    ] {
        assert!(matches!(spec.build(), Err(GroupError::ParameterOutOfRange(_))), "{spec}");
    }
}

#[test]
fn heisenberg4_has_central_z_of_order_4() {
    let g = named(NamedGroup::Heisenberg(4));
    assert_eq!(g.order(), 64);
    let z = g.name_of("z").unwrap();
    let (x, y) = (g.name_of("x").unwrap(), g.name_of("y").unwrap());
    assert_eq!(g.element_order(z), 4);
    assert!(g.center().contains(z));
    assert_eq!(g.commutator(x, y), z);
    for s in [x, y] {
        assert_eq!(g.element_order(s), 4);
    }
}

#[test]
fn dihedral_center_is_order_two() {
    let g = named(NamedGroup::Dihedral(8));
    assert_eq!(g.center().elements(), brute_center(&g).as_slice());
    assert_eq!(g.center().order(), 2);
    let r = g.name_of("r").unwrap();
    assert_eq!(g.center(), g.subgroup_generated(&[g.pow(r, 2)]));
    assert_eq!(g.second_center().order(), 8);
}

#[test]
fn abelian_center_is_everything() {
    let g = named(NamedGroup::ElementaryAbelian(2, 3));
    assert_eq!(g.center().order(), 8);
    assert_eq!(g.second_center().order(), 8);
}

#[test]
fn direct_products() {
    let c2 = named(NamedGroup::Cyclic(2));
    let (v4, e1, e2) = c2.direct_product(&c2).unwrap();
    assert_eq!(v4.order(), 4);
    assert_eq!(v4.exponent(), 2);
    for a in c2.elements() {
        for b in c2.elements() {
            assert_eq!(v4.mul(e1.apply(a), e2.apply(b)), v4.mul(e2.apply(b), e1.apply(a)));
        }
    }
    let d8 = named(NamedGroup::Dihedral(8));
    let (cube, _) = direct_product_many(&[d8.clone(), d8.clone(), d8.clone()]).unwrap();
    assert_eq!(cube.order(), 512);
    let triv = named(NamedGroup::Cyclic(1));
    let (p, e, _) = d8.direct_product(&triv).unwrap();
    assert!(e.is_injective() && e.is_surjective());
    for a in d8.elements() {
        for b in d8.elements() {
            assert_eq!(p.mul(e.apply(a), e.apply(b)), e.apply(d8.mul(a, b)));
        }
    }
}

#[test]
fn inversion_semidirect_is_dihedral() {
    let c4 = named(NamedGroup::Cyclic(4));
    let c2 = named(NamedGroup::Cyclic(2));
    let g = FiniteGroup::semidirect_product(&c4, &c2, &Action::Inversion).unwrap();
    assert!(are_isomorphic(&g, &named(NamedGroup::Dihedral(8))));
    assert!(!are_isomorphic(&g, &named(NamedGroup::Quaternion(8))));
    let t = FiniteGroup::semidirect_product(&c4, &c2, &Action::Trivial).unwrap();
    assert!(are_isomorphic(&t, &c4.direct_product(&c2).unwrap().0));
}

#[test]
fn bad_actions_are_rejected() {
    let s3 = named(NamedGroup::Symmetric(3));
    let c2 = named(NamedGroup::Cyclic(2));
    let err = FiniteGroup::semidirect_product(&s3, &c2, &Action::Inversion).unwrap_err();
    assert!(matches!(err, GroupError::ActionNotAutomorphism { .. }));
    // inversion by a generator of order 3 is not a homomorphism C3 -> Aut(C5)
    let c5 = named(NamedGroup::Cyclic(5));
    let c3 = named(NamedGroup::Cyclic(3));
    let err = FiniteGroup::semidirect_product(&c5, &c3, &Action::Inversion).unwrap_err();
    assert!(matches!(err, GroupError::ActionNotHomomorphism { .. }));
}

#[test]
fn d8xc4_center() {
    let g = named(NamedGroup::D8xC4);
    let a = g.name_of("a").unwrap();
    let c = g.name_of("c").unwrap();
    let expected = g.subgroup_generated(&[g.pow(a, 2), g.pow(c, 2)]);
    assert_eq!(expected.order(), 4);
    assert_eq!(g.center(), expected);
    assert_eq!(brute_center(&g), expected.elements());
}

#[test]
fn quotients() {
    let d8 = named(NamedGroup::Dihedral(8));
    let (q, p) = d8.quotient(&d8.trivial_subgroup()).unwrap();
    assert_eq!(q.order(), 8);
    assert!(p.is_injective() && p.is_surjective());
    let z = d8.center();
    let (q, p) = d8.quotient(&z).unwrap();
    assert_eq!(q.order(), 4);
    assert!(q.is_abelian());
    assert_eq!(q.exponent(), 2);
    assert_eq!(p.kernel(), z);
    let cube = named(NamedGroup::D8Cube);
    assert_eq!(cube.order(), 256);
    let s = d8.subgroup_generated(&[d8.name_of("s").unwrap()]);
    let err = d8.quotient(&s).unwrap_err();
    match err {
        GroupError::NotNormal { conjugator, element } => assert!(!s.contains(d8.conj(element, conjugator))),
        other => panic!("{other:?}"),
    }
}

#[test]
fn closures() {
    let d8 = named(NamedGroup::Dihedral(8));
    let r = d8.name_of("r").unwrap();
    assert_eq!(d8.normal_closure(&[r]).order(), 4);
    assert!(d8.subgroup_generated(&[]).is_trivial());
    let g = named(NamedGroup::HeisPair);
    let x = g.name_of("x").unwrap();
    assert!(!g.center().contains(x));
    let k = g.commutator_closure(&[x]);
    assert!(!k.is_trivial());
    let brute: Vec<usize> = g.elements().map(|y| g.commutator(x, y)).collect();
    assert!(brute.iter().all(|&c| k.contains(c)));
}

#[test]
fn class_sizes() {
    for (spec, sizes) in [
        (NamedGroup::Dihedral(8), vec![1, 1, 2, 2, 2]),
        (NamedGroup::Symmetric(3), vec![1, 2, 3]),
        (NamedGroup::Cyclic(5), vec![1; 5]),
    ] {
        let g = named(spec);
        let cc = g.conjugacy_classes();
        let mut got: Vec<usize> = (0..cc.len()).map(|k| cc.size(k)).collect();
        assert_eq!(cc.class(0), &[g.identity()]);
        got.sort_unstable();
        assert_eq!(got, sizes);
        assert_eq!(brute_class_sizes(&g), sizes);
        for k in 0..cc.len() {
            assert_eq!(cc.rep(k), *cc.class(k).iter().min().unwrap());
        }
    }
}

#[test]
fn subgroup_counts() {
    for (spec, count) in [(NamedGroup::Cyclic(6), 4), (NamedGroup::Dihedral(8), 10), (NamedGroup::Cyclic(1), 1)] {
        let g = named(spec);
        let subs = g.all_subgroups(DEFAULT_SUBGROUP_CAP).unwrap();
        assert_eq!(subs.len(), count, "{spec}");
        assert_eq!(brute_subgroup_count(&g), count);
    }
    let c6 = named(NamedGroup::Cyclic(6));
    let orders: Vec<usize> = c6.all_subgroups(256).unwrap().iter().map(SubgroupRef::order).collect();
    assert_eq!(orders, vec![1, 2, 3, 6]);
    for spec in [NamedGroup::Alternating(4), NamedGroup::Quaternion(8), NamedGroup::Dihedral(12)] {
        let g = named(spec);
        assert_eq!(g.all_subgroups(256).unwrap().len(), brute_subgroup_count(&g), "{spec}");
    }
    let s4 = named(NamedGroup::Symmetric(4));
    assert_eq!(s4.all_subgroups(256).unwrap().len(), 30);
    assert!(matches!(s4.all_subgroups(10), Err(GroupError::OrderCapExceeded { cap: 10 })));
}

#[test]
fn minimal_normals() {
    let d8 = named(NamedGroup::Dihedral(8));
    let mins = d8.minimal_normal_subgroups().unwrap();
    assert_eq!(mins, vec![d8.center()]);
    let v4 = named(NamedGroup::ElementaryAbelian(2, 2));
    let mins = v4.minimal_normal_subgroups().unwrap();
    assert_eq!(mins.len(), 3);
    assert!(mins.iter().all(|m| m.order() == 2));
    let a5 = named(NamedGroup::Alternating(5));
    assert_eq!(a5.minimal_normal_subgroups().unwrap(), vec![a5.whole()]);
    let triv = named(NamedGroup::Cyclic(1));
    assert_eq!(triv.minimal_normal_subgroups().unwrap_err(), GroupError::TrivialGroup);
    assert_eq!(triv.socle().unwrap_err(), GroupError::TrivialGroup);
}

#[test]
fn socles() {
    let d8 = named(NamedGroup::Dihedral(8));
    assert_eq!(d8.socle().unwrap(), d8.center());
    assert_eq!(d8.socle_abelian().unwrap(), d8.center());
    assert!(d8.socle_nonabelian().unwrap().is_trivial());
    let a5 = named(NamedGroup::Alternating(5));
    assert_eq!(a5.socle().unwrap().order(), 60);
    assert_eq!(a5.socle_nonabelian().unwrap().order(), 60);
    let v4 = named(NamedGroup::ElementaryAbelian(2, 2));
    assert_eq!(v4.socle_abelian().unwrap().order(), 4);
}

#[test]
fn single_class_generation() {
    let d8 = named(NamedGroup::Dihedral(8));
    let z = d8.center();
    let w = d8.is_generated_by_single_class(&z).unwrap().unwrap();
    assert_eq!(w, d8.name_of("z").unwrap());
    let v4 = named(NamedGroup::ElementaryAbelian(2, 2));
    assert_eq!(v4.is_generated_by_single_class(&v4.whole()).unwrap(), None);
    assert_eq!(v4.is_generated_by_single_class(&v4.trivial_subgroup()).unwrap(), Some(v4.identity()));
    let s = d8.subgroup_generated(&[d8.name_of("s").unwrap()]);
    assert!(matches!(d8.is_generated_by_single_class(&s), Err(GroupError::NotNormal { .. })));
}

#[test]
fn homomorphism_validation() {
    let c4 = named(NamedGroup::Cyclic(4));
    let c2 = named(NamedGroup::Cyclic(2));
    let a = c4.name_of("a").unwrap();
    let b = c2.name_of("a").unwrap();
    let image: Vec<usize> = c4.elements().map(|g| if c4.element_order(g) == 4 { b } else { c2.identity() }).collect();
    assert!(GroupHom::new(c4.clone(), c2.clone(), image).is_ok());
    let bad: Vec<usize> = c4.elements().map(|g| if g == a { b } else { c2.identity() }).collect();
    assert!(matches!(GroupHom::new(c4, c2, bad), Err(GroupError::NotHomomorphism { .. })));
}

#[test]
fn word_evaluation() {
    let g = named(NamedGroup::D8xC4);
    let a = g.name_of("a").unwrap();
    let w = Word(vec![("a".into(), 2), ("c".into(), -1)]);
    assert_eq!(w.to_string(), "a^2*c^-1");
    let c = g.name_of("c").unwrap();
    assert_eq!(g.eval_word(&w).unwrap(), g.mul(g.pow(a, 2), g.inv(c)));
    assert_eq!(Word::default().to_string(), "1");
    assert!(matches!(g.eval_word(&Word(vec![("q".into(), 1)])), Err(GroupError::UnknownName(_))));
}

#[test]
fn subgroup_as_group() {
    let g = named(NamedGroup::D8xC4);
    let h = g.subgroup_generated(&[g.name_of("a").unwrap(), g.name_of("c").unwrap()]);
    let (sub, embed) = h.as_group();
    assert_eq!(sub.order(), h.order());
    assert_eq!(embed.image(), h);
    GroupHom::new(sub.clone(), g.clone(), embed.image_of().to_vec()).unwrap();
    assert_eq!(sub.generators().len(), h.generators().len());
}

#[test]
fn isomorphism_search() {
    let q8 = named(NamedGroup::Quaternion(8));
    let d8 = named(NamedGroup::Dihedral(8));
    assert!(!are_isomorphic(&q8, &d8));
    let perm = FiniteGroup::from_permutation_generators(4, &[vec![1, 2, 3, 0], vec![3, 2, 1, 0]], 100).unwrap();
    assert_eq!(perm.order(), 8);
    let f = iso::find_isomorphism(&perm, &d8).unwrap();
    GroupHom::new(perm, d8.clone(), f.image_of().to_vec()).unwrap();
    let h = named(NamedGroup::Heisenberg(2));
    assert!(are_isomorphic(&h, &d8));
}
