use std::sync::OnceLock;

use cprep_core::analysis::{GroupContext, Pair};
use cprep_core::central_ext::{coboundary, is_cohomologous, reduce_order, Cocycle, Q};
use cprep_core::cyclotomic::{CycNum, Rational};
use cprep_core::gmodule::GModule;
use cprep_core::group::{NamedGroup, SubgroupRef};
use proptest::prelude::*;
use proptest::sample::Index;

struct Entry {
    ctx: GroupContext,
    subgroups: Vec<SubgroupRef>,
}

fn catalog() -> &'static [Entry] {
    static CATALOG: OnceLock<Vec<Entry>> = OnceLock::new();
    CATALOG.get_or_init(|| {
        use NamedGroup::*;
        [Cyclic(6), Dihedral(8), Dihedral(10), Quaternion(8), Symmetric(4), Alternating(4), ElementaryAbelian(2, 3), Heisenberg(3), HeisPair, D8xC4]
            .iter()
            .map(|n| {
                let g = n.build().unwrap();
                Entry { ctx: GroupContext::new(&g).unwrap(), subgroups: g.all_subgroups(64).unwrap() }
            })
            .collect()
    })
}

fn cyc(e: u32, coeffs: &[(i64, i64)]) -> CycNum {
    let mut x = CycNum::zero(e).unwrap();
    for (k, &(n, d)) in coeffs.iter().enumerate() {
        let term = CycNum::root(e, k as i64).unwrap().scale(Rational::new(n as i128, d as i128));
        x = x.try_add(&term).unwrap();
    }
    x
}

fn cyc_strategy() -> impl Strategy<Value = (u32, Vec<(i64, i64)>, Vec<(i64, i64)>, Vec<(i64, i64)>)> {
    let coeffs = || prop::collection::vec((-5i64..=5, 1i64..=4), 0..6);
    (prop::sample::select(vec![1u32, 3, 4, 5, 8, 12]), coeffs(), coeffs(), coeffs())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn cyclotomic_ring_laws((e, a, b, c) in cyc_strategy()) {
        let (a, b, c) = (cyc(e, &a), cyc(e, &b), cyc(e, &c));
        prop_assert_eq!(a.try_add(&b).unwrap(), b.try_add(&a).unwrap());
        prop_assert_eq!(a.try_mul(&b).unwrap(), b.try_mul(&a).unwrap());
        let lhs = a.try_mul(&b.try_add(&c).unwrap()).unwrap();
        let rhs = a.try_mul(&b).unwrap().try_add(&a.try_mul(&c).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(a.try_sub(&a).unwrap().is_zero(), true);
        prop_assert_eq!(a.conj().conj(), a.clone());
        prop_assert_eq!(a.try_mul(&b).unwrap().conj(), a.conj().try_mul(&b.conj()).unwrap());
        prop_assert_eq!(a.abs_square(), a.try_mul(&a.conj()).unwrap());
        prop_assert_eq!(a.embed(2 * e).unwrap(), a);
    }

    #[test]
    fn frobenius_reciprocity(gi: Index, hi: Index, ri: Index, si: Index) {
        let entry = gi.get(catalog());
        let h = hi.get(&entry.subgroups);
        let pair = Pair::new(&entry.ctx, h).unwrap();
        let sub = pair.h();
        let rho = ri.get(sub.table().rows());
        let sigma = si.get(entry.ctx.table().rows());
        let lhs = sub.induce(rho).unwrap().inner_product(sigma).unwrap();
        let rhs = rho.inner_product(&sub.restrict(sigma).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn char_center_is_preimage_of_quotient_center(gi: Index, ri: Index) {
        let entry = gi.get(catalog());
        let ctx = &entry.ctx;
        let g = ctx.group();
        let row = ri.index(ctx.table().len());
        let ker = ctx.kernel(row);
        let z = ctx.char_center(row);
        prop_assert!(ker.is_subgroup_of(z));
        prop_assert!(g.center().is_subgroup_of(z));
        let (q, pi) = g.quotient(ker).unwrap();
        let oracle = pi.preimage(&q.center());
        prop_assert_eq!(z.elements(), oracle.elements());
    }

    #[test]
    fn module_duality(gi: Index) {
        let entry = gi.get(catalog());
        let g = entry.ctx.group();
        let a = g.center();
        let m = GModule::from_normal_subgroup(g, &a).unwrap();
        let d = m.dual().unwrap();
        prop_assert_eq!(d.order(), m.order());
        prop_assert!(d.dual().unwrap().is_isomorphic(&m).unwrap());
        prop_assert_eq!(d.is_cyclic_module().is_some(), m.is_cyclic_module().is_some());
    }

    #[test]
    fn coboundaries_and_reduction(gi: Index, fs in prop::collection::vec((0i64..24, prop::sample::select(vec![2i64, 3, 5, 8, 9])), 64)) {
        let entry = gi.get(catalog());
        let g = entry.ctx.group();
        let e = g.identity();
        let f: Vec<Q> = g.elements().map(|x| if x == e { Q::from_integer(0) } else { let (n, d) = fs[x % fs.len()]; Q::new(n, d) }).collect();
        let b = coboundary(g, &f).unwrap();
        prop_assert!(b.validate().is_ok());
        let w = is_cohomologous(&b, &Cocycle::zero(g)).unwrap();
        prop_assert_eq!(coboundary(g, &w).unwrap(), b.clone());
        let r = reduce_order(&b).unwrap();
        prop_assert_eq!(g.order() % r.order(), 0);
    }
}
