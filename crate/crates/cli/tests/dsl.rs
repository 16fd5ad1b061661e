use cprep_cli::dsl::{parse_spec, parse_word_list, ActionName, GroupSpec};
use cprep_core::group::{NamedGroup, Word};
use proptest::prelude::*;

const CORPUS: &[&str] = &[
    "C(4) x C(2)",
    "quot(D(8) x D(8) x D(8), [z1*z2*z3])",
    "paper:ex-heis-pair",
    "paper:ex-d8cube",
    "paper:ex-d8xc4",
    "sdp(C(4), D(8), diagonal-inversion)",
    "sdp(C(7), C(3), power(2))",
    "sdp(EA(2,2), C(3), file(\"actions/c3_on_v4.json\"))",
    "subgroup(S(4), [g1, g2^-1*g1])",
    "(C(2) x C(2)) x C(3)",
    "Heis(3) x EA(3,2)",
    "quot(Q(16), [1])",
    "A(5)",
];

#[test]
fn product_ast() {
    let s = parse_spec("C(4) x C(2)").unwrap();
    assert_eq!(s, GroupSpec::Product(vec![GroupSpec::Atom(NamedGroup::Cyclic(4)), GroupSpec::Atom(NamedGroup::Cyclic(2))]));
}

#[test]
fn central_quotient_ast() {
    let s = parse_spec("quot(D(8) x D(8) x D(8), [z1*z2*z3])").unwrap();
    let d8 = GroupSpec::Atom(NamedGroup::Dihedral(8));
    let w = Word(vec![("z1".into(), 1), ("z2".into(), 1), ("z3".into(), 1)]);
    assert_eq!(s, GroupSpec::Quot(Box::new(GroupSpec::Product(vec![d8.clone(), d8.clone(), d8])), vec![w]));
    let g = s.build().unwrap();
    assert_eq!(g.order(), 256);
    assert_eq!(g.center().order(), 4);
    let named = NamedGroup::D8Cube.build().unwrap();
    assert_eq!(g.conjugacy_classes().len(), named.conjugacy_classes().len());
    let orders = |g: &cprep_core::group::FiniteGroup| {
        let mut v = g.element_orders().to_vec();
        v.sort_unstable();
        v
    };
    assert_eq!(orders(&g), orders(&named));
}

#[test]
fn syntax_error_positions() {
    let e = parse_spec("C(").unwrap_err();
    assert_eq!((e.line, e.col), (1, 3));
    assert_eq!(e.expected, "integer");
    let e = parse_spec("C(4) x\n  Foo(2)").unwrap_err();
    assert_eq!((e.line, e.col), (2, 3));
    let e = parse_spec("C(4) C(2)").unwrap_err();
    assert_eq!(e.col, 6);
    assert_eq!(parse_spec("paper:ex-nope").unwrap_err().col, 7);
    assert!(parse_spec("sdp(C(4), C(2), rotate)").is_err());
    assert!(parse_spec("C(-1)").is_err());
    assert!(parse_word_list("[a^, b]").is_err());
}

#[test]
fn word_lists() {
    let w = parse_word_list("[a^2, c]").unwrap();
    assert_eq!(w, vec![Word(vec![("a".into(), 2)]), Word(vec![("c".into(), 1)])]);
    assert_eq!(parse_word_list("[]").unwrap(), vec![]);
    assert_eq!(parse_word_list("[1, x^-3*y]").unwrap()[0], Word::default());
}

#[test]
fn corpus_round_trips() {
    for text in CORPUS {
        let s = parse_spec(text).unwrap();
        assert_eq!(s.to_string(), *text);
        assert_eq!(parse_spec(&s.to_string()).unwrap(), s);
    }
}

#[test]
fn semidirect_names_and_subgroups() {
    let g = parse_spec("sdp(C(4), C(2), inversion)").unwrap().build().unwrap();
    assert_eq!(g.order(), 8);
    let (a, b) = (g.name_of("a1").unwrap(), g.name_of("a2").unwrap());
    assert_eq!(g.conj(a, b), g.inv(a));
    let h = parse_spec("subgroup(paper:ex-d8xc4, [a^2, c])").unwrap().build().unwrap();
    assert_eq!(h.order(), 8);
    assert!(h.is_abelian());
    let q = parse_spec("quot(D(8), [r^2])").unwrap().build().unwrap();
    assert!(q.order() == 4 && q.is_abelian());
}

fn atom() -> impl Strategy<Value = GroupSpec> {
    prop_oneof![
        (1usize..20).prop_map(|n| GroupSpec::Atom(NamedGroup::Cyclic(n))),
        (1usize..10).prop_map(|n| GroupSpec::Atom(NamedGroup::Dihedral(2 * n))),
        (2usize..6).prop_map(|n| GroupSpec::Atom(NamedGroup::Quaternion(4 * n))),
        (1usize..6).prop_map(|n| GroupSpec::Atom(NamedGroup::Symmetric(n))),
        (2usize..4, 1usize..4).prop_map(|(p, k)| GroupSpec::Atom(NamedGroup::ElementaryAbelian(p, k))),
        Just(GroupSpec::Atom(NamedGroup::HeisPair)),
        Just(GroupSpec::Atom(NamedGroup::D8xC4)),
    ]
}

fn word() -> impl Strategy<Value = Word> {
    prop::collection::vec(("[a-z][a-z0-9]{0,2}", prop_oneof![Just(1i64), -3i64..4]), 0..4).prop_map(Word)
}

fn action() -> impl Strategy<Value = ActionName> {
    prop_oneof![
        Just(ActionName::Trivial),
        Just(ActionName::Inversion),
        Just(ActionName::DiagonalInversion),
        (-5i64..6).prop_map(ActionName::Power),
        "[a-z/_.]{1,12}".prop_map(ActionName::File),
    ]
}

fn spec() -> impl Strategy<Value = GroupSpec> {
    atom().prop_recursive(3, 12, 3, |inner| {
        prop_oneof![
            prop::collection::vec(inner.clone(), 2..4).prop_map(GroupSpec::Product),
            (inner.clone(), prop::collection::vec(word(), 0..3)).prop_map(|(g, w)| GroupSpec::Quot(Box::new(g), w)),
            (inner.clone(), prop::collection::vec(word(), 0..3)).prop_map(|(g, w)| GroupSpec::Subgroup(Box::new(g), w)),
            (inner.clone(), inner, action()).prop_map(|(n, h, a)| GroupSpec::Sdp(Box::new(n), Box::new(h), a)),
        ]
    })
}

proptest! {
    #[test]
    fn print_then_parse_is_identity(s in spec()) {
        prop_assert_eq!(parse_spec(&s.to_string()).unwrap(), s);
    }
}
