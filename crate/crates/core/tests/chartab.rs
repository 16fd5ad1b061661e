use cprep_core::chartab::CharacterTable;
use cprep_core::cyclotomic::{CycNum, Rational};
use cprep_core::group::{FiniteGroup, NamedGroup};

fn small_catalog() -> Vec<FiniteGroup> {
    use NamedGroup::*;
    [
        Cyclic(1),
        Cyclic(6),
        Cyclic(12),
        Dihedral(8),
        Dihedral(10),
        Dihedral(12),
        Quaternion(8),
        Quaternion(16),
        Symmetric(3),
        Symmetric(4),
        Alternating(4),
        Alternating(5),
        ElementaryAbelian(2, 3),
        ElementaryAbelian(3, 2),
        Heisenberg(3),
        HeisPair,
        D8xC4,
    ]
    .iter()
    .map(|n| n.build().unwrap())
    .collect()
}

#[test]
fn orthogonality_and_degrees() {
    for g in small_catalog() {
        let t = CharacterTable::compute(&g).unwrap();
        let cc = g.conjugacy_classes();
        assert_eq!(t.len(), cc.len());
        assert_eq!(t.rows().iter().map(|r| r.degree() * r.degree()).sum::<usize>(), g.order());
        assert!(t.row(0).values().iter().all(CycNum::is_one));
        for (i, a) in t.rows().iter().enumerate() {
            for (j, b) in t.rows().iter().enumerate() {
                let ip = a.inner_product(b).unwrap();
                let expected = CycNum::from_int((i == j) as i128);
                assert_eq!(ip, expected, "rows {i}, {j} of a group of order {}", g.order());
            }
        }
        for k in 0..cc.len() {
            for l in 0..cc.len() {
                let s = t.rows().iter().fold(CycNum::zero(1).unwrap(), |acc, r| acc + r.value(k) * &r.value(l).conj());
                let expected = if k == l { (g.order() / cc.size(k)) as i128 } else { 0 };
                assert_eq!(s, CycNum::from_int(expected));
            }
        }
    }
}

#[test]
fn values_are_algebraic_integers() {
    for g in small_catalog() {
        let t = CharacterTable::compute(&g).unwrap();
        for row in t.rows() {
            assert!(row.values().iter().all(CycNum::is_integral));
            let n = Rational::from_integer(g.order() as i128);
            for other in t.rows() {
                let ip = row.inner_product(other).unwrap().scale(n);
                assert!(ip.to_integer().is_some());
            }
        }
    }
}

#[test]
fn serialization_is_deterministic() {
    for spec in [NamedGroup::D8xC4, NamedGroup::Alternating(5)] {
        let a = serde_json::to_string(&CharacterTable::compute(&spec.build().unwrap()).unwrap().to_json()).unwrap();
        let b = serde_json::to_string(&CharacterTable::compute(&spec.build().unwrap()).unwrap().to_json()).unwrap();
        assert_eq!(a, b);
    }
}
