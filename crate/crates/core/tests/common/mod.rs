//! Shared builders and hand-encoded golden relation systems for the
//! integration suites.

#![allow(dead_code)]

use nsplit::int;
use nsplit::terms::{Monomial, OpSymbol, Relation};
use nsplit::Rat;

pub fn leaf(i: usize) -> Monomial {
    Monomial::leaf(i)
}

pub fn mu(l: Monomial, r: Monomial) -> Monomial {
    Monomial::node(OpSymbol::mu(), l, r)
}

pub fn prec(l: Monomial, r: Monomial) -> Monomial {
    Monomial::node(OpSymbol::prec(), l, r)
}

pub fn succ(l: Monomial, r: Monomial) -> Monomial {
    Monomial::node(OpSymbol::succ(), l, r)
}

pub fn vee(l: Monomial, r: Monomial) -> Monomial {
    Monomial::node(OpSymbol::vee(), l, r)
}

pub fn times(l: Monomial, r: Monomial) -> Monomial {
    Monomial::node(OpSymbol::times(), l, r)
}

pub fn rel(arity: usize, terms: Vec<(i64, Monomial)>) -> Relation<Rat> {
    Relation::new(
        arity,
        terms.into_iter().map(|(c, m)| (int::<Rat>(c), m)).collect(),
    )
    .expect("golden relation is well formed")
}

/// Terms of `x ⋆ y` with `⋆ = ≺ + ≻ + ∨`, each wrapped by `wrap` and signed.
fn star_ns(sign: i64, wrap: impl Fn(Monomial) -> Monomial, x: Monomial, y: Monomial) -> Vec<(i64, Monomial)> {
    [OpSymbol::prec(), OpSymbol::succ(), OpSymbol::vee()]
        .into_iter()
        .map(|op| (sign, wrap(Monomial::node(op, x.clone(), y.clone()))))
        .collect()
}

/// Terms of `x ⋆ y` with the dendriform `⋆ = ≺ + ≻`.
fn star_dendriform(sign: i64, wrap: impl Fn(Monomial) -> Monomial, x: Monomial, y: Monomial) -> Vec<(i64, Monomial)> {
    [OpSymbol::prec(), OpSymbol::succ()]
        .into_iter()
        .map(|op| (sign, wrap(Monomial::node(op, x.clone(), y.clone()))))
        .collect()
}

/// Terms of `x ⋆ y` with the Lie-reduced `⋆`: `x×y − y×x + x∨y`.
fn star_lie(sign: i64, wrap: impl Fn(Monomial) -> Monomial, x: Monomial, y: Monomial) -> Vec<(i64, Monomial)> {
    vec![
        (sign, wrap(times(x.clone(), y.clone()))),
        (-sign, wrap(times(y.clone(), x.clone()))),
        (sign, wrap(vee(x, y))),
    ]
}

/// The three displayed relations of an associative dendriform algebra.
pub fn golden_dendriform_associative() -> Vec<Relation<Rat>> {
    // (a≺b)≺c = a≺(b⋆c)
    let mut r1 = vec![(1, prec(prec(leaf(1), leaf(2)), leaf(3)))];
    r1.extend(star_dendriform(-1, |m| prec(leaf(1), m), leaf(2), leaf(3)));
    // (a≻b)≺c = a≻(b≺c)
    let r2 = vec![
        (1, prec(succ(leaf(1), leaf(2)), leaf(3))),
        (-1, succ(leaf(1), prec(leaf(2), leaf(3)))),
    ];
    // (a⋆b)≻c = a≻(b≻c)
    let mut r3 = star_dendriform(1, |m| succ(m, leaf(3)), leaf(1), leaf(2));
    r3.push((-1, succ(leaf(1), succ(leaf(2), leaf(3)))));
    vec![rel(3, r1), rel(3, r2), rel(3, r3)]
}

/// The four displayed relations of an associative NS-algebra.
pub fn golden_ns_associative() -> Vec<Relation<Rat>> {
    // (a≺b)≺c = a≺(b⋆c)
    let mut r1 = vec![(1, prec(prec(leaf(1), leaf(2)), leaf(3)))];
    r1.extend(star_ns(-1, |m| prec(leaf(1), m), leaf(2), leaf(3)));
    // (a≻b)≺c = a≻(b≺c)
    let r2 = vec![
        (1, prec(succ(leaf(1), leaf(2)), leaf(3))),
        (-1, succ(leaf(1), prec(leaf(2), leaf(3)))),
    ];
    // (a⋆b)≻c = a≻(b≻c)
    let mut r3 = star_ns(1, |m| succ(m, leaf(3)), leaf(1), leaf(2));
    r3.push((-1, succ(leaf(1), succ(leaf(2), leaf(3)))));
    // (a∨b)≺c + (a⋆b)∨c = a≻(b∨c) + a∨(b⋆c)
    let mut r4 = vec![(1, prec(vee(leaf(1), leaf(2)), leaf(3)))];
    r4.extend(star_ns(1, |m| vee(m, leaf(3)), leaf(1), leaf(2)));
    r4.push((-1, succ(leaf(1), vee(leaf(2), leaf(3)))));
    r4.extend(star_ns(-1, |m| vee(leaf(1), m), leaf(2), leaf(3)));
    vec![rel(3, r1), rel(3, r2), rel(3, r3), rel(3, r4)]
}

/// The four displayed relations of a Leibniz NS-algebra: the three
/// dendriform-type ones and the extra relation.
pub fn golden_ns_leibniz() -> Vec<Relation<Rat>> {
    // a≻(b≻c) = (a⋆b)≻c + b≻(a≻c)
    let mut r1 = vec![(1, succ(leaf(1), succ(leaf(2), leaf(3))))];
    r1.extend(star_ns(-1, |m| succ(m, leaf(3)), leaf(1), leaf(2)));
    r1.push((-1, succ(leaf(2), succ(leaf(1), leaf(3)))));
    // a≻(b≺c) = (a≻b)≺c + b≺(a⋆c)
    let mut r2 = vec![
        (1, succ(leaf(1), prec(leaf(2), leaf(3)))),
        (-1, prec(succ(leaf(1), leaf(2)), leaf(3))),
    ];
    r2.extend(star_ns(-1, |m| prec(leaf(2), m), leaf(1), leaf(3)));
    // a≺(b⋆c) = (a≺b)≺c + b≻(a≺c)
    let mut r3 = star_ns(1, |m| prec(leaf(1), m), leaf(2), leaf(3));
    r3.push((-1, prec(prec(leaf(1), leaf(2)), leaf(3))));
    r3.push((-1, succ(leaf(2), prec(leaf(1), leaf(3)))));
    // a≻(b∨c) + a∨(b⋆c) = (a∨b)≺c + (a⋆b)∨c + b≻(a∨c) + b∨(a⋆c)
    let mut r4 = vec![(1, succ(leaf(1), vee(leaf(2), leaf(3))))];
    r4.extend(star_ns(1, |m| vee(leaf(1), m), leaf(2), leaf(3)));
    r4.push((-1, prec(vee(leaf(1), leaf(2)), leaf(3))));
    r4.extend(star_ns(-1, |m| vee(m, leaf(3)), leaf(1), leaf(2)));
    r4.push((-1, succ(leaf(2), vee(leaf(1), leaf(3)))));
    r4.extend(star_ns(-1, |m| vee(leaf(2), m), leaf(1), leaf(3)));
    vec![rel(3, r1), rel(3, r2), rel(3, r3), rel(3, r4)]
}

/// The three displayed relations of a NAP NS-algebra.
pub fn golden_ns_nap() -> Vec<Relation<Rat>> {
    // a≻(b≻c) = b≻(a≻c)
    let r1 = vec![
        (1, succ(leaf(1), succ(leaf(2), leaf(3)))),
        (-1, succ(leaf(2), succ(leaf(1), leaf(3)))),
    ];
    // a≻(b≺c) = b≺(a⋆c)
    let mut r2 = vec![(1, succ(leaf(1), prec(leaf(2), leaf(3))))];
    r2.extend(star_ns(-1, |m| prec(leaf(2), m), leaf(1), leaf(3)));
    // a≻(b∨c) + a∨(b⋆c) = b≻(a∨c) + b∨(a⋆c)
    let mut r3 = vec![(1, succ(leaf(1), vee(leaf(2), leaf(3))))];
    r3.extend(star_ns(1, |m| vee(leaf(1), m), leaf(2), leaf(3)));
    r3.push((-1, succ(leaf(2), vee(leaf(1), leaf(3)))));
    r3.extend(star_ns(-1, |m| vee(leaf(2), m), leaf(1), leaf(3)));
    vec![rel(3, r1), rel(3, r2), rel(3, r3)]
}

/// `a∨b + b∨a = 0`, the anticommutativity of `∨`.
pub fn golden_lie_vee_anticommutativity() -> Relation<Rat> {
    rel(
        2,
        vec![(1, vee(leaf(1), leaf(2))), (1, vee(leaf(2), leaf(1)))],
    )
}

/// `(a⋆b)×c = a×(b×c) − b×(a×c)` with `a⋆b = a×b − b×a + a∨b`.
pub fn golden_lie_bracket_relation() -> Relation<Rat> {
    let mut terms = star_lie(1, |m| times(m, leaf(3)), leaf(1), leaf(2));
    terms.push((-1, times(leaf(1), times(leaf(2), leaf(3)))));
    terms.push((1, times(leaf(2), times(leaf(1), leaf(3)))));
    rel(3, terms)
}

/// The cyclic relation
/// `a∨(b⋆c) + b∨(c⋆a) + c∨(a⋆b) + a×(b∨c) + b×(c∨a) + c×(a∨b) = 0`.
pub fn golden_lie_cyclic_relation() -> Relation<Rat> {
    let mut terms = star_lie(1, |m| vee(leaf(1), m), leaf(2), leaf(3));
    terms.extend(star_lie(1, |m| vee(leaf(2), m), leaf(3), leaf(1)));
    terms.extend(star_lie(1, |m| vee(leaf(3), m), leaf(1), leaf(2)));
    terms.push((1, times(leaf(1), vee(leaf(2), leaf(3)))));
    terms.push((1, times(leaf(2), vee(leaf(3), leaf(1)))));
    terms.push((1, times(leaf(3), vee(leaf(1), leaf(2)))));
    rel(3, terms)
}

/// Bijective matching: every output corresponds to exactly one target under
/// `eq`, and vice versa.
pub fn sets_match<T, U>(outputs: &[T], targets: &[U], eq: impl Fn(&T, &U) -> bool) -> bool {
    if outputs.len() != targets.len() {
        return false;
    }
    let mut used = vec![false; targets.len()];
    'outer: for out in outputs {
        for (i, t) in targets.iter().enumerate() {
            if !used[i] && eq(out, t) {
                used[i] = true;
                continue 'outer;
            }
        }
        return false;
    }
    true
}
