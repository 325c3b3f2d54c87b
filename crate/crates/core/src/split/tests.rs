use super::*;
use crate::scalar::int;
use crate::terms::{catalog, relations_equal_up_to_scalar, star_expansion};
use crate::Rat;

fn leaf(i: usize) -> Monomial {
    Monomial::leaf(i)
}

fn prec(l: Monomial, r: Monomial) -> Monomial {
    Monomial::node(OpSymbol::prec(), l, r)
}

fn succ(l: Monomial, r: Monomial) -> Monomial {
    Monomial::node(OpSymbol::succ(), l, r)
}

fn vee(l: Monomial, r: Monomial) -> Monomial {
    Monomial::node(OpSymbol::vee(), l, r)
}

fn ns_alphabet() -> Vec<OpSymbol> {
    vec![OpSymbol::prec(), OpSymbol::succ(), OpSymbol::vee()]
}

/// The fourth associative NS relation:
/// `(a∨b)≺c + (a⋆b)∨c − a≻(b∨c) − a∨(b⋆c)`.
fn associative_ns_extra() -> Relation<Rat> {
    let mut terms = vec![(int::<Rat>(1), prec(vee(leaf(1), leaf(2)), leaf(3)))];
    for (c, m) in star_expansion::<Rat>(&ns_alphabet(), &leaf(1), &leaf(2)) {
        terms.push((c, Monomial::node(OpSymbol::vee(), m, leaf(3))));
    }
    terms.push((int::<Rat>(-1), succ(leaf(1), vee(leaf(2), leaf(3)))));
    for (c, m) in star_expansion::<Rat>(&ns_alphabet(), &leaf(2), &leaf(3)) {
        terms.push((-c, Monomial::node(OpSymbol::vee(), leaf(1), m)));
    }
    Relation::new(3, terms).unwrap()
}

#[test]
fn associative_ns_has_four_relations_with_exact_extra() {
    let cat = catalog::<Rat>("associative").unwrap();
    let split = derive_split_relations(&cat, &SplitScheme::ns()).unwrap();
    assert_eq!(split.sources().len(), 1);
    let src = &split.sources()[0];
    assert_eq!(src.derived.len(), 3);
    assert_eq!(
        src.derived.iter().map(|d| d.subset.clone()).collect::<Vec<_>>(),
        vec![vec![1], vec![2], vec![3]]
    );
    let extra = src.extra.as_ref().unwrap();
    assert!(relations_equal_up_to_scalar(extra, &associative_ns_extra()));
    assert_eq!(split.defining_relations().len(), 4);
}

#[test]
fn associative_dendriform_has_three_relations() {
    let cat = catalog::<Rat>("associative").unwrap();
    let split = derive_split_relations(&cat, &SplitScheme::dendriform()).unwrap();
    let src = &split.sources()[0];
    assert_eq!(src.derived.len(), 3);
    assert!(src.star.is_none());
    assert!(src.extra.is_none());

    // (a≺b)≺c − a≺(b≺c) − a≺(b≻c) is the subset-{1} relation.
    let d1 = Relation::<Rat>::new(
        3,
        vec![
            (int(1), prec(prec(leaf(1), leaf(2)), leaf(3))),
            (int(-1), prec(leaf(1), prec(leaf(2), leaf(3)))),
            (int(-1), prec(leaf(1), succ(leaf(2), leaf(3)))),
        ],
    )
    .unwrap();
    assert!(relations_equal_up_to_scalar(&src.derived[0].relation, &d1));
}

#[test]
fn associative_tridendriform_has_seven_relations() {
    let cat = catalog::<Rat>("associative").unwrap();
    let split = derive_split_relations(&cat, &SplitScheme::tridendriform()).unwrap();
    let src = &split.sources()[0];
    // Three dendriform-type, three mixed, and associativity of the dot.
    assert_eq!(src.derived.len(), 7);
    assert!(src.star.is_some());
    // The star relation is the sum of all derived relations (closure of the
    // diagonal under the tridendriform doubling).
    let mut sum = Relation::<Rat>::zero(3);
    for d in &src.derived {
        sum = sum.add(&d.relation).unwrap();
    }
    assert_eq!(&sum, src.star.as_ref().unwrap());
}

#[test]
fn nap_ns_merges_symmetric_relations() {
    let cat = catalog::<Rat>("nap").unwrap();
    let split = derive_split_relations(&cat, &SplitScheme::ns()).unwrap();
    let src = &split.sources()[0];
    // The NAP relation is (anti-)invariant under swapping its first two
    // variables, so only two dendriform-type relations survive.
    assert_eq!(src.derived.len(), 2);
    assert_eq!(split.defining_relations().len(), 3);
}

#[test]
fn nap_dendriform_has_two_relations() {
    let cat = catalog::<Rat>("nap").unwrap();
    let split = derive_split_relations(&cat, &SplitScheme::dendriform()).unwrap();
    assert_eq!(split.sources()[0].derived.len(), 2);
}

#[test]
fn empty_presentation_splits_to_nothing() {
    let cat =
        CategoryPresentation::<Rat>::new("empty", OpSymbol::mu(), Vec::new()).unwrap();
    let split = derive_split_relations(&cat, &SplitScheme::ns()).unwrap();
    assert!(split.sources().is_empty());
    assert!(split.defining_relations().is_empty());
    assert!(derive_extra_via_alt_formula(&cat).unwrap().is_empty());
}

#[test]
fn arity_bounds_are_enforced() {
    let one = Relation::<Rat>::new(1, vec![(int(1), leaf(1))]).unwrap();
    let cat = CategoryPresentation::new("unary", OpSymbol::mu(), vec![one]).unwrap();
    assert_eq!(
        derive_split_relations(&cat, &SplitScheme::ns()).unwrap_err(),
        SplitError::ArityOutOfRange { arity: 1 }
    );
    assert!(matches!(
        SplitScheme::from_name("quadridendriform"),
        Err(SplitError::UnsupportedScheme(_))
    ));
}

#[test]
fn alt_formula_matches_subtracted_extra_for_associative() {
    let cat = catalog::<Rat>("associative").unwrap();
    let alt = derive_extra_via_alt_formula(&cat).unwrap();
    assert_eq!(alt.len(), 1);
    assert!(relations_equal_up_to_scalar(&alt[0], &associative_ns_extra()));
}

#[test]
fn lie_reduction_yields_three_relations() {
    let cat = catalog::<Rat>("lie").unwrap();
    let split = derive_split_relations(&cat, &SplitScheme::ns()).unwrap();
    let reduced = reduce_anticommutative(&split).unwrap();
    assert_eq!(reduced.len(), 3);

    // The anticommutativity of ∨ survives verbatim.
    let vee_anticom = Relation::<Rat>::new(
        2,
        vec![
            (int(1), vee(leaf(1), leaf(2))),
            (int(1), vee(leaf(2), leaf(1))),
        ],
    )
    .unwrap();
    assert!(reduced
        .iter()
        .any(|r| relations_equal_up_to_scalar(r, &vee_anticom)));
}

#[test]
fn reduction_requires_anticommutativity() {
    let cat = catalog::<Rat>("associative").unwrap();
    let split = derive_split_relations(&cat, &SplitScheme::ns()).unwrap();
    assert_eq!(
        reduce_anticommutative(&split).unwrap_err(),
        SplitError::NotAnticommutative
    );
}

#[test]
fn vee_normal_form_flips_and_cancels() {
    let rel = Relation::<Rat>::new(
        2,
        vec![
            (int(1), vee(leaf(1), leaf(2))),
            (int(1), vee(leaf(2), leaf(1))),
        ],
    )
    .unwrap();
    assert!(vee_normal_form(&rel).is_zero());

    let rel = Relation::<Rat>::new(2, vec![(int(3), vee(leaf(2), leaf(1)))]).unwrap();
    let expected = Relation::<Rat>::new(2, vec![(int(-3), vee(leaf(1), leaf(2)))]).unwrap();
    assert_eq!(vee_normal_form(&rel), expected);
}
