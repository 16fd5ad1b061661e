use cprep_core::analysis::{GroupContext, Pair};
use cprep_core::group::{FiniteGroup, NamedGroup, SubgroupRef};

fn example(n: NamedGroup) -> (FiniteGroup, SubgroupRef) {
    let g = n.build().unwrap();
    let h = n.designated_in(&g).unwrap().unwrap();
    (g, h)
}

#[test]
fn heisenberg_pair_has_one_center_preserving_constituent() {
    let (g, h) = example(NamedGroup::HeisPair);
    assert_eq!((g.order(), h.order()), (16, 4));
    let ctx = GroupContext::new(&g).unwrap();
    let pair = Pair::new(&ctx, &h).unwrap();
    let report = pair.report().unwrap();
    assert_eq!(report.faithful_rows_of_h.len(), 2);
    for e in &report.entries {
        let mut degs: Vec<usize> = e.constituents.iter().map(|c| c.degree).collect();
        degs.sort_unstable();
        assert_eq!(degs, [1, 1, 2]);
        assert!(e.constituents.iter().all(|c| c.multiplicity == 1));
        let good: Vec<_> = e.constituents.iter().filter(|c| c.faithful_on_h && c.center_preserving_on_h).collect();
        assert_eq!(good.len(), 1);
        assert_eq!(good[0].degree, 2);
        assert!(pair.remark_minimizer_check(e.rho).unwrap());
        let x = pair.h().group().name_of("x").unwrap();
        assert!(pair.main_tech_check(e.rho, &[x]).unwrap());
    }
    // among all irreducibles of G, only one is faithful and center-preserving on H
    let both = (0..ctx.table().len()).filter(|&i| pair.faithful_on_h(i) && pair.center_preserving_on_h(i)).count();
    assert_eq!(both, 1);
}

#[test]
fn d8_cube_has_no_center_preserving_irreducible_on_h() {
    let (g, h) = example(NamedGroup::D8Cube);
    assert_eq!((g.order(), h.order()), (256, 8));
    assert!(h.is_abelian() && h.elements().iter().all(|&x| g.element_order(x) <= 2));
    assert!(g.center().intersection(&h).is_trivial());
    let ctx = GroupContext::new(&g).unwrap();
    let pair = Pair::new(&ctx, &h).unwrap();
    let n = ctx.table().len();
    assert!((0..n).any(|i| pair.faithful_on_h(i)));
    assert!((0..n).all(|i| !pair.center_preserving_on_h(i)));
    assert!((0..n).all(|i| !ctx.kernel(i).is_abelian()));
    let hc = pair.h().context();
    assert!((0..hc.table().len()).any(|r| pair.h().to_parent(hc.kernel(r)).core().is_trivial()));
}

/// With the printed presentation both `a` and `b` invert `c`. Modulo
/// `K = <a^2 c^2>` the element `abc` is central and `c` is not, so the
/// faithful characters of `G/K` have `Z(σ) ∩ H = Z(G)`.
#[test]
fn d8_by_c4_center_preservation_on_h() {
    let (g, h) = example(NamedGroup::D8xC4);
    assert_eq!(g.order(), 32);
    let a = g.name_of("a").unwrap();
    let b = g.name_of("b").unwrap();
    let c = g.name_of("c").unwrap();
    assert_eq!(g.conj(c, a), g.inv(c));
    assert_eq!(g.conj(c, b), g.inv(c));
    let z = g.center();
    let a2 = g.mul(a, a);
    let c2 = g.mul(c, c);
    assert_eq!(z.elements(), g.subgroup_generated(&[a2, c2]).elements());
    let k = g.subgroup_generated(&[g.mul(a2, c2)]);
    let ctx = GroupContext::new(&g).unwrap();
    let pair = Pair::new(&ctx, &h).unwrap();
    let over_k: Vec<usize> = (0..ctx.table().len()).filter(|&i| ctx.kernel(i).elements() == k.elements()).collect();
    assert_eq!(over_k.len(), 2);
    for &i in &over_k {
        assert_eq!(ctx.table().row(i).degree(), 2);
        assert!(ctx.char_center(i).contains(g.mul(g.mul(a, b), c)));
        assert!(!ctx.char_center(i).contains(c));
        assert!(pair.center_preserving_on_h(i));
    }
    let hc = pair.h().context();
    assert!((0..hc.table().len()).any(|r| hc.table().row(r).degree() == 1 && pair.h().to_parent(hc.kernel(r)).is_subgroup_of(&z)));
    assert!(!pair.second_center_condition());
}
