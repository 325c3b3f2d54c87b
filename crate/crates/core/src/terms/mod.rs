//! The free multilinear term language: monomials are planar binary trees with
//! operation-labeled internal nodes and variable-labeled leaves, relations are
//! canonical linear combinations of monomials, and a category is presented by
//! a named set of relations over a single binary product.
//!
//! Multilinearity is structural: the leaf labels of a monomial of arity `n`,
//! read left to right, are a permutation of `1..=n`, so each variable occurs
//! exactly once per monomial.

mod render;

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::scalar::{int, Scalar};

pub use render::{relation_json, render_monomial, render_relation, RenderFormat};

/// Name of a binary operation symbol.
///
/// Symbols compare by name (lexicographically), which is also how they enter
/// the canonical monomial order.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct OpSymbol(String);

impl OpSymbol {
    pub fn new(name: impl Into<String>) -> Self {
        OpSymbol(name.into())
    }

    pub fn name(&self) -> &str {
        &self.0
    }

    /// The single product of a category presentation.
    pub fn mu() -> Self {
        OpSymbol::new("mu")
    }

    /// Left product `≺` of a split alphabet.
    pub fn prec() -> Self {
        OpSymbol::new("prec")
    }

    /// Right product `≻` of a split alphabet.
    pub fn succ() -> Self {
        OpSymbol::new("succ")
    }

    /// Third product `∨` of the NS alphabet.
    pub fn vee() -> Self {
        OpSymbol::new("vee")
    }

    /// Third product `·` of the tridendriform alphabet.
    pub fn dot() -> Self {
        OpSymbol::new("dot")
    }

    /// Sum product `⋆` (only used as a display/building convenience; derived
    /// relations always carry the expanded alphabet products).
    pub fn star() -> Self {
        OpSymbol::new("star")
    }

    /// Single product `×` of the anticommutative reduction.
    pub fn times() -> Self {
        OpSymbol::new("times")
    }

    /// Product `⊠` of a doubled algebra `A ⊕ A`.
    pub fn boxtimes() -> Self {
        OpSymbol::new("boxtimes")
    }
}

impl fmt::Display for OpSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// Errors raised by the term language.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum TermError {
    #[error("monomial leaf labels {labels:?} are not a permutation of 1..={arity}")]
    MalformedMonomial { arity: usize, labels: Vec<usize> },
    #[error("term arity {found} differs from relation arity {expected}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("unknown category `{0}`")]
    UnknownCategory(String),
    #[error("operation symbol `{0}` is not bound to a product")]
    UnboundOpSymbol(OpSymbol),
    #[error("presentation uses several products; only single-product presentations are supported")]
    MultipleProducts,
}

/// A parenthesized multilinear monomial: a planar binary tree whose internal
/// nodes carry an [`OpSymbol`] and whose leaves carry variable indices.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Monomial {
    /// Variable leaf; indices are 1-based.
    Leaf(usize),
    Node(OpSymbol, Box<Monomial>, Box<Monomial>),
}

impl Monomial {
    pub fn leaf(index: usize) -> Self {
        Monomial::Leaf(index)
    }

    pub fn node(op: OpSymbol, left: Monomial, right: Monomial) -> Self {
        Monomial::Node(op, Box::new(left), Box::new(right))
    }

    /// Number of leaves.
    pub fn arity(&self) -> usize {
        match self {
            Monomial::Leaf(_) => 1,
            Monomial::Node(_, l, r) => l.arity() + r.arity(),
        }
    }

    /// Leaf labels in left-to-right order.
    pub fn leaf_labels(&self) -> Vec<usize> {
        fn walk(m: &Monomial, out: &mut Vec<usize>) {
            match m {
                Monomial::Leaf(i) => out.push(*i),
                Monomial::Node(_, l, r) => {
                    walk(l, out);
                    walk(r, out);
                }
            }
        }
        let mut out = Vec::new();
        walk(self, &mut out);
        out
    }

    /// All operation symbols appearing in the tree.
    pub fn ops_used(&self) -> Vec<OpSymbol> {
        fn walk(m: &Monomial, out: &mut Vec<OpSymbol>) {
            if let Monomial::Node(op, l, r) = m {
                if !out.contains(op) {
                    out.push(op.clone());
                }
                walk(l, out);
                walk(r, out);
            }
        }
        let mut out = Vec::new();
        walk(self, &mut out);
        out
    }

    /// Checks that the leaf labels form a permutation of `1..=arity`.
    pub fn validate(&self) -> Result<(), TermError> {
        let labels = self.leaf_labels();
        let n = labels.len();
        let mut seen = vec![false; n];
        for &l in &labels {
            if l == 0 || l > n || seen[l - 1] {
                return Err(TermError::MalformedMonomial { arity: n, labels });
            }
            seen[l - 1] = true;
        }
        Ok(())
    }

    /// Applies the relabeling `perm` to the leaves: label `i` becomes
    /// `perm[i - 1]`.
    pub fn relabel(&self, perm: &[usize]) -> Monomial {
        match self {
            Monomial::Leaf(i) => Monomial::Leaf(perm[*i - 1]),
            Monomial::Node(op, l, r) => {
                Monomial::node(op.clone(), l.relabel(perm), r.relabel(perm))
            }
        }
    }

    fn cmp_shape(&self, other: &Monomial) -> Ordering {
        match (self, other) {
            (Monomial::Leaf(_), Monomial::Leaf(_)) => Ordering::Equal,
            // Internal node < leaf in the preorder shape code.
            (Monomial::Node(..), Monomial::Leaf(_)) => Ordering::Less,
            (Monomial::Leaf(_), Monomial::Node(..)) => Ordering::Greater,
            (Monomial::Node(_, l1, r1), Monomial::Node(_, l2, r2)) => {
                l1.cmp_shape(l2).then_with(|| r1.cmp_shape(r2))
            }
        }
    }

    /// Preorder comparison of internal-node symbols; only meaningful when the
    /// shapes already compare equal.
    fn cmp_ops(&self, other: &Monomial) -> Ordering {
        match (self, other) {
            (Monomial::Node(o1, l1, r1), Monomial::Node(o2, l2, r2)) => o1
                .cmp(o2)
                .then_with(|| l1.cmp_ops(l2))
                .then_with(|| r1.cmp_ops(r2)),
            _ => Ordering::Equal,
        }
    }
}

/// Canonical monomial order: arity, then tree shape in preorder (internal
/// node < leaf), then operation symbols at corresponding nodes, then leaf
/// labels left to right.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.arity()
            .cmp(&other.arity())
            .then_with(|| self.cmp_shape(other))
            .then_with(|| self.cmp_ops(other))
            .then_with(|| self.leaf_labels().cmp(&other.leaf_labels()))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A multilinear relation `Σ cᵢ·mᵢ = 0` in canonical form: terms strictly
/// sorted by the canonical monomial order, coefficients merged and nonzero.
///
/// The empty term list is the zero relation.
#[derive(Clone, PartialEq, Debug)]
pub struct Relation<S> {
    arity: usize,
    terms: Vec<(S, Monomial)>,
}

impl<S: Scalar> Relation<S> {
    /// Canonicalizes a raw term list into a relation of the given arity.
    ///
    /// Equal inputs up to term reordering produce identical outputs; terms
    /// with the same monomial are merged and zero coefficients dropped.
    pub fn new(arity: usize, terms: Vec<(S, Monomial)>) -> Result<Self, TermError> {
        let mut merged: BTreeMap<Monomial, S> = BTreeMap::new();
        for (c, m) in terms {
            m.validate()?;
            if m.arity() != arity {
                return Err(TermError::ArityMismatch {
                    expected: arity,
                    found: m.arity(),
                });
            }
            let entry = merged.entry(m).or_insert_with(S::zero);
            *entry = entry.clone() + c;
        }
        let terms = merged
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(m, c)| (c, m))
            .collect();
        Ok(Relation { arity, terms })
    }

    /// The zero relation of the given arity.
    pub fn zero(arity: usize) -> Self {
        Relation {
            arity,
            terms: Vec::new(),
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn terms(&self) -> &[(S, Monomial)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Re-runs canonicalization. Idempotent by construction.
    pub fn canonicalized(&self) -> Relation<S> {
        Relation::new(self.arity, self.terms.clone()).expect("canonical relation stays valid")
    }

    pub fn scale(&self, c: &S) -> Relation<S> {
        Relation::new(
            self.arity,
            self.terms
                .iter()
                .map(|(k, m)| (k.clone() * c.clone(), m.clone()))
                .collect(),
        )
        .expect("scaling preserves validity")
    }

    pub fn neg(&self) -> Relation<S> {
        self.scale(&-S::one())
    }

    pub fn add(&self, other: &Relation<S>) -> Result<Relation<S>, TermError> {
        if self.arity != other.arity {
            return Err(TermError::ArityMismatch {
                expected: self.arity,
                found: other.arity,
            });
        }
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().cloned());
        Relation::new(self.arity, terms)
    }

    pub fn sub(&self, other: &Relation<S>) -> Result<Relation<S>, TermError> {
        self.add(&other.neg())
    }

    /// Rewrites every monomial through `f`, which returns a coefficient
    /// multiplier together with the replacement monomial.
    pub fn map_monomials(&self, f: impl Fn(&Monomial) -> (S, Monomial)) -> Relation<S> {
        Relation::new(
            self.arity,
            self.terms
                .iter()
                .map(|(c, m)| {
                    let (k, m2) = f(m);
                    (c.clone() * k, m2)
                })
                .collect(),
        )
        .expect("monomial rewriting preserves arity")
    }

    /// Relabels variables by `perm` and re-canonicalizes.
    pub fn relabel(&self, perm: &[usize]) -> Relation<S> {
        self.map_monomials(|m| (S::one(), m.relabel(perm)))
    }
}

/// True iff `r1 = c·r2` for some nonzero scalar `c`. Zero relations are
/// scalar multiples of each other.
pub fn relations_equal_up_to_scalar<S: Scalar>(r1: &Relation<S>, r2: &Relation<S>) -> bool {
    if r1.arity() != r2.arity() || r1.terms.len() != r2.terms.len() {
        return false;
    }
    if r1.is_zero() {
        return true;
    }
    let ratio = r1.terms[0].0.clone() / r2.terms[0].0.clone();
    r1.terms
        .iter()
        .zip(r2.terms.iter())
        .all(|((c1, m1), (c2, m2))| m1 == m2 && *c1 == c2.clone() * ratio.clone())
}

/// Calls `f` for every permutation of `1..=n` until it returns `true`;
/// returns whether any call did.
pub(crate) fn any_permutation(n: usize, mut f: impl FnMut(&[usize]) -> bool) -> bool {
    // Heap's algorithm, iterative.
    let mut perm: Vec<usize> = (1..=n).collect();
    if f(&perm) {
        return true;
    }
    let mut c = vec![0usize; n];
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            if f(&perm) {
                return true;
            }
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    false
}

/// True iff `r1 = c·σ(r2)` for some nonzero scalar `c` and some relabeling σ
/// of the variables. This is how displayed relation systems are counted: a
/// universally quantified identity does not change under renaming its
/// variables.
pub fn relations_equal_up_to_scalar_and_relabeling<S: Scalar>(
    r1: &Relation<S>,
    r2: &Relation<S>,
) -> bool {
    if r1.arity() != r2.arity() || r1.terms.len() != r2.terms.len() {
        return false;
    }
    if r1.is_zero() {
        return true;
    }
    any_permutation(r2.arity(), |perm| {
        relations_equal_up_to_scalar(r1, &r2.relabel(perm))
    })
}

/// A named category of algebras `(A, μ)` presented by multilinear relations
/// over the single product `μ`.
#[derive(Clone, PartialEq, Debug)]
pub struct CategoryPresentation<S> {
    name: String,
    op: OpSymbol,
    relations: Vec<Relation<S>>,
}

impl<S: Scalar> CategoryPresentation<S> {
    /// Builds a presentation; relations must use only `op`. Zero relations
    /// are dropped and duplicates up to a nonzero scalar are merged.
    pub fn new(
        name: impl Into<String>,
        op: OpSymbol,
        relations: Vec<Relation<S>>,
    ) -> Result<Self, TermError> {
        let mut kept: Vec<Relation<S>> = Vec::new();
        for rel in relations {
            for used in rel.terms().iter().flat_map(|(_, m)| m.ops_used()) {
                if used != op {
                    return Err(TermError::MultipleProducts);
                }
            }
            if rel.is_zero() {
                continue;
            }
            if !kept.iter().any(|k| relations_equal_up_to_scalar(k, &rel)) {
                kept.push(rel);
            }
        }
        Ok(CategoryPresentation {
            name: name.into(),
            op,
            relations: kept,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn op(&self) -> &OpSymbol {
        &self.op
    }

    pub fn relations(&self) -> &[Relation<S>] {
        &self.relations
    }
}

/// Names of the bundled category presentations, in catalog order.
pub const CATALOG_NAMES: [&str; 6] = [
    "associative",
    "lie",
    "leibniz",
    "pre-lie",
    "nap",
    "commutative-associative",
];

/// The standard presentation with the given name.
///
/// Conventions: `lie` is anticommutativity plus the (left) Leibniz form of
/// the Jacobi identity; `leibniz` is the left Leibniz identity
/// `a(bc) = (ab)c + b(ac)`; `nap` is `a(bc) = b(ac)`; `pre-lie` is
/// `(ab)c − a(bc) = (ba)c − b(ac)`.
pub fn catalog<S: Scalar>(name: &str) -> Result<CategoryPresentation<S>, TermError> {
    let mu = OpSymbol::mu();
    let m = |l: Monomial, r: Monomial| Monomial::node(mu.clone(), l, r);
    let v = Monomial::leaf;
    let one = S::one;

    // (ab)c − a(bc)
    let assoc = Relation::new(
        3,
        vec![
            (one(), m(m(v(1), v(2)), v(3))),
            (-one(), m(v(1), m(v(2), v(3)))),
        ],
    )?;
    // ab + ba
    let anticom = Relation::new(2, vec![(one(), m(v(1), v(2))), (one(), m(v(2), v(1)))])?;
    // (ab)c − a(bc) + b(ac)
    let leibniz = Relation::new(
        3,
        vec![
            (one(), m(m(v(1), v(2)), v(3))),
            (-one(), m(v(1), m(v(2), v(3)))),
            (one(), m(v(2), m(v(1), v(3)))),
        ],
    )?;
    // a(bc) − b(ac)
    let nap = Relation::new(
        3,
        vec![
            (one(), m(v(1), m(v(2), v(3)))),
            (-one(), m(v(2), m(v(1), v(3)))),
        ],
    )?;
    // (ab)c − a(bc) − (ba)c + b(ac)
    let pre_lie = Relation::new(
        3,
        vec![
            (one(), m(m(v(1), v(2)), v(3))),
            (-one(), m(v(1), m(v(2), v(3)))),
            (-one(), m(m(v(2), v(1)), v(3))),
            (one(), m(v(2), m(v(1), v(3)))),
        ],
    )?;
    // ab − ba
    let com = Relation::new(2, vec![(one(), m(v(1), v(2))), (-one(), m(v(2), v(1)))])?;

    let relations = match name {
        "associative" => vec![assoc],
        "lie" => vec![anticom, leibniz],
        "leibniz" => vec![leibniz],
        "nap" => vec![nap],
        "pre-lie" => vec![pre_lie],
        "commutative-associative" => vec![assoc, com],
        _ => return Err(TermError::UnknownCategory(name.to_string())),
    };
    CategoryPresentation::new(name, mu, relations)
}

/// Evaluates a monomial on abstract elements: leaves are replaced by `args`
/// in label order and each internal node applies the product bound to its
/// symbol. `products` returns `None` for unbound symbols.
pub fn evaluate_monomial<E: Clone>(
    m: &Monomial,
    args: &[E],
    products: &mut impl FnMut(&OpSymbol, &E, &E) -> Option<E>,
) -> Result<E, TermError> {
    if m.arity() != args.len() {
        return Err(TermError::ArityMismatch {
            expected: m.arity(),
            found: args.len(),
        });
    }
    fn eval<E: Clone>(
        m: &Monomial,
        args: &[E],
        products: &mut impl FnMut(&OpSymbol, &E, &E) -> Option<E>,
    ) -> Result<E, TermError> {
        match m {
            Monomial::Leaf(i) => Ok(args[*i - 1].clone()),
            Monomial::Node(op, l, r) => {
                let lv = eval(l, args, products)?;
                let rv = eval(r, args, products)?;
                products(op, &lv, &rv).ok_or_else(|| TermError::UnboundOpSymbol(op.clone()))
            }
        }
    }
    eval(m, args, products)
}

/// `x ⋆ y` as the sum of the given alphabet products, as a list of terms.
/// Convenience for hand-encoding relations whose displayed form uses `⋆`.
pub fn star_expansion<S: Scalar>(
    alphabet: &[OpSymbol],
    left: &Monomial,
    right: &Monomial,
) -> Vec<(S, Monomial)> {
    alphabet
        .iter()
        .map(|op| {
            (
                int::<S>(1),
                Monomial::node(op.clone(), left.clone(), right.clone()),
            )
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rat;
    use crate::scalar::{frac, int};

    fn mu(l: Monomial, r: Monomial) -> Monomial {
        Monomial::node(OpSymbol::mu(), l, r)
    }

    fn leaf(i: usize) -> Monomial {
        Monomial::leaf(i)
    }

    #[test]
    fn canon_cancels_to_zero_relation() {
        let m = mu(mu(leaf(1), leaf(2)), leaf(3));
        let rel = Relation::<Rat>::new(3, vec![(int(1), m.clone()), (int(-1), m)]).unwrap();
        assert!(rel.is_zero());
        assert_eq!(rel, Relation::zero(3));
    }

    #[test]
    fn canon_is_sort_invariant() {
        let ab = mu(leaf(1), leaf(2));
        let ba = mu(leaf(2), leaf(1));
        let r1 =
            Relation::<Rat>::new(2, vec![(int(1), ab.clone()), (int(1), ba.clone())]).unwrap();
        let r2 = Relation::<Rat>::new(2, vec![(int(1), ba), (int(1), ab)]).unwrap();
        assert_eq!(r1, r2);
    }

    #[test]
    fn canon_merges_coefficients() {
        let abc = mu(mu(leaf(1), leaf(2)), leaf(3));
        let a_bc = mu(leaf(1), mu(leaf(2), leaf(3)));
        let rel = Relation::<Rat>::new(
            3,
            vec![
                (int(2), abc.clone()),
                (int(-1), a_bc.clone()),
                (int(-1), abc.clone()),
            ],
        )
        .unwrap();
        let expected =
            Relation::<Rat>::new(3, vec![(int(1), abc), (int(-1), a_bc)]).unwrap();
        assert_eq!(rel, expected);
    }

    #[test]
    fn malformed_leaves_are_rejected() {
        let bad = mu(leaf(1), leaf(1));
        let err = Relation::<Rat>::new(2, vec![(int(1), bad)]).unwrap_err();
        assert!(matches!(err, TermError::MalformedMonomial { .. }));

        let wrong_arity = mu(leaf(1), leaf(2));
        let err = Relation::<Rat>::new(3, vec![(int(1), wrong_arity)]).unwrap_err();
        assert!(matches!(err, TermError::ArityMismatch { .. }));
    }

    #[test]
    fn scalar_equality_examples() {
        let assoc = catalog::<Rat>("associative").unwrap().relations()[0].clone();
        assert!(relations_equal_up_to_scalar(
            &assoc,
            &assoc.scale(&int(-2))
        ));
        let leibniz = catalog::<Rat>("leibniz").unwrap().relations()[0].clone();
        assert!(!relations_equal_up_to_scalar(&assoc, &leibniz));
        assert!(relations_equal_up_to_scalar(
            &Relation::<Rat>::zero(3),
            &Relation::<Rat>::zero(3)
        ));
    }

    #[test]
    fn catalog_shapes() {
        let assoc = catalog::<Rat>("associative").unwrap();
        assert_eq!(assoc.relations().len(), 1);
        assert_eq!(assoc.relations()[0].arity(), 3);

        let nap = catalog::<Rat>("nap").unwrap();
        assert_eq!(nap.relations().len(), 1);
        assert_eq!(nap.relations()[0].terms().len(), 2);

        let lie = catalog::<Rat>("lie").unwrap();
        assert_eq!(lie.relations().len(), 2);
        let arities: Vec<usize> = lie.relations().iter().map(|r| r.arity()).collect();
        assert_eq!(arities, vec![2, 3]);

        assert!(matches!(
            catalog::<Rat>("jordan"),
            Err(TermError::UnknownCategory(_))
        ));
    }

    #[test]
    fn evaluate_monomial_examples() {
        // Identity monomial of arity 1.
        let x: Rat = frac(3, 7);
        let got = evaluate_monomial(&leaf(1), std::slice::from_ref(&x), &mut |_, _, _| None).unwrap();
        assert_eq!(got, x);

        // Rational arguments under ordinary multiplication.
        let tree = mu(mu(leaf(1), leaf(2)), leaf(3));
        let args: Vec<Rat> = vec![int(2), int(3), int(5)];
        let got = evaluate_monomial(&tree, &args, &mut |_, a: &Rat, b: &Rat| Some(a * b)).unwrap();
        assert_eq!(got, int::<Rat>(30));

        // Unbound symbol.
        let err = evaluate_monomial(&tree, &args, &mut |op: &OpSymbol, a: &Rat, b: &Rat| {
            (op.name() == "nu").then(|| a * b)
        })
        .unwrap_err();
        assert_eq!(err, TermError::UnboundOpSymbol(OpSymbol::mu()));
    }

    #[test]
    fn relabeling_equality_is_wider_than_scalar_equality() {
        // Swapping the first two variables of a(bc) − b(ac) negates it, so it
        // is already a scalar multiple.
        let nap = catalog::<Rat>("nap").unwrap().relations()[0].clone();
        assert!(relations_equal_up_to_scalar(&nap, &nap.relabel(&[2, 1, 3])));
        // Swapping the last two is only a relabeling.
        let swapped = nap.relabel(&[1, 3, 2]);
        assert!(!relations_equal_up_to_scalar(&nap, &swapped));
        assert!(relations_equal_up_to_scalar_and_relabeling(&nap, &swapped));
    }

    #[test]
    fn monomial_order_is_total_and_shape_first() {
        let a = mu(leaf(1), mu(leaf(2), leaf(3)));
        let b = mu(mu(leaf(1), leaf(2)), leaf(3));
        // Internal node sorts before leaf in the preorder code.
        assert!(b < a);
        assert!(leaf(1) < mu(leaf(1), leaf(2)));
        let c = Monomial::node(OpSymbol::prec(), leaf(1), leaf(2));
        let d = Monomial::node(OpSymbol::succ(), leaf(1), leaf(2));
        assert!(c < d);
    }
}
