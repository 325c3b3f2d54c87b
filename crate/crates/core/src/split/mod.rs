//! The graded-doubling engine.
//!
//! Splitting an algebra `(A, μ)` replaces `A` by `A ⊕ A`, graded in degrees 0
//! and 1, with a product `⊠` whose degree rules are given by a
//! [`SplitScheme`]. Every `n`-linear relation of the source category then
//! yields one derived relation per assignment of degrees to its variables:
//! the all-degree-0 assignment produces the "star relation" (membership of
//! `(A, ⋆)` in the category), single-degree-1 assignments produce the
//! dendriform-type relations, and for the NS scheme the star relation minus
//! the dendriform-type ones is kept as the "extra relation", which is how
//! the relation systems are usually displayed.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::scalar::Scalar;
use crate::terms::{
    evaluate_monomial, relations_equal_up_to_scalar_and_relabeling, CategoryPresentation,
    Monomial, OpSymbol, Relation, TermError,
};

/// Splitting schemes: two products, three products with a degree-1 product,
/// or three products with the NS degree rules.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SchemeKind {
    Dendriform,
    Tridendriform,
    Ns,
}

type Rule = Vec<(OpSymbol, usize)>;

/// Degree rule table of a splitting scheme: for input degrees `(g, g')`, the
/// list of `(product, output degree)` contributions of `⊠`.
#[derive(Clone, PartialEq, Debug)]
pub struct SplitScheme {
    kind: SchemeKind,
    alphabet: Vec<OpSymbol>,
    rules: [[Rule; 2]; 2],
}

impl SplitScheme {
    /// NS rules: `(0,0) → {≺₀, ≻₀, ∨₀}`, `(0,1) → {≻₁}`, `(1,0) → {≺₁}`,
    /// `(1,1) → ∅`.
    pub fn ns() -> Self {
        let (p, s, v) = (OpSymbol::prec(), OpSymbol::succ(), OpSymbol::vee());
        SplitScheme {
            kind: SchemeKind::Ns,
            alphabet: vec![p.clone(), s.clone(), v.clone()],
            rules: [
                [vec![(p.clone(), 0), (s.clone(), 0), (v, 0)], vec![(s, 1)]],
                [vec![(p, 1)], vec![]],
            ],
        }
    }

    /// Dendriform rules: NS with `∨` removed from `(0,0)`.
    pub fn dendriform() -> Self {
        let (p, s) = (OpSymbol::prec(), OpSymbol::succ());
        SplitScheme {
            kind: SchemeKind::Dendriform,
            alphabet: vec![p.clone(), s.clone()],
            rules: [
                [vec![(p.clone(), 0), (s.clone(), 0)], vec![(s, 1)]],
                [vec![(p, 1)], vec![]],
            ],
        }
    }

    /// Tridendriform rules: NS with `∨` renamed `·` and `(1,1) → {·₁}`.
    pub fn tridendriform() -> Self {
        let (p, s, d) = (OpSymbol::prec(), OpSymbol::succ(), OpSymbol::dot());
        SplitScheme {
            kind: SchemeKind::Tridendriform,
            alphabet: vec![p.clone(), s.clone(), d.clone()],
            rules: [
                [
                    vec![(p.clone(), 0), (s.clone(), 0), (d.clone(), 0)],
                    vec![(s, 1)],
                ],
                [vec![(p, 1)], vec![(d, 1)]],
            ],
        }
    }

    pub fn of_kind(kind: SchemeKind) -> Self {
        match kind {
            SchemeKind::Dendriform => SplitScheme::dendriform(),
            SchemeKind::Tridendriform => SplitScheme::tridendriform(),
            SchemeKind::Ns => SplitScheme::ns(),
        }
    }

    pub fn from_name(name: &str) -> Result<Self, SplitError> {
        match name {
            "dendriform" => Ok(SplitScheme::dendriform()),
            "tridendriform" => Ok(SplitScheme::tridendriform()),
            "ns" => Ok(SplitScheme::ns()),
            other => Err(SplitError::UnsupportedScheme(other.to_string())),
        }
    }

    pub fn kind(&self) -> SchemeKind {
        self.kind
    }

    pub fn name(&self) -> &'static str {
        match self.kind {
            SchemeKind::Dendriform => "dendriform",
            SchemeKind::Tridendriform => "tridendriform",
            SchemeKind::Ns => "ns",
        }
    }

    pub fn alphabet(&self) -> &[OpSymbol] {
        &self.alphabet
    }

    pub fn rules(&self, left_degree: usize, right_degree: usize) -> &[(OpSymbol, usize)] {
        &self.rules[left_degree][right_degree]
    }

    /// Rule table of the `*_∨` product: the NS rules with the additional
    /// degree-1 contribution `∨₁` of two degree-0 factors.
    fn alt_vee() -> Self {
        let (p, s, v) = (OpSymbol::prec(), OpSymbol::succ(), OpSymbol::vee());
        SplitScheme {
            kind: SchemeKind::Ns,
            alphabet: vec![p.clone(), s.clone(), v.clone()],
            rules: [
                [
                    vec![(p.clone(), 0), (s.clone(), 0), (v.clone(), 0), (v, 1)],
                    vec![(s, 1)],
                ],
                [vec![(p, 1)], vec![]],
            ],
        }
    }
}

/// Errors raised by the splitting engine.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum SplitError {
    #[error("relation arity {arity} outside the supported range 2..=6")]
    ArityOutOfRange { arity: usize },
    #[error("unsupported splitting scheme `{0}`")]
    UnsupportedScheme(String),
    #[error("source presentation does not contain the anticommutativity relation ab + ba")]
    NotAnticommutative,
    #[error(transparent)]
    Term(#[from] TermError),
}

/// A degree-graded symbolic element of the doubled space: a linear
/// combination of split-alphabet monomials in each of the two degrees.
#[derive(Clone, PartialEq, Debug)]
pub struct GradedExpr<S> {
    parts: [BTreeMap<Monomial, S>; 2],
}

impl<S: Scalar> GradedExpr<S> {
    pub fn zero() -> Self {
        GradedExpr {
            parts: [BTreeMap::new(), BTreeMap::new()],
        }
    }

    /// The generator `xᵢ` placed in the given degree.
    pub fn leaf(index: usize, degree: usize) -> Self {
        let mut e = GradedExpr::zero();
        e.parts[degree].insert(Monomial::leaf(index), S::one());
        e
    }

    fn insert(&mut self, degree: usize, m: Monomial, c: S) {
        let entry = self.parts[degree].entry(m).or_insert_with(S::zero);
        *entry = entry.clone() + c;
    }

    /// Keeps the maps zero-free so emptiness means the component vanishes.
    fn prune(&mut self) {
        for part in &mut self.parts {
            part.retain(|_, c| !c.is_zero());
        }
    }

    /// Bilinear product following the scheme's degree rules.
    pub fn product(&self, other: &Self, scheme: &SplitScheme) -> Self {
        let mut out = GradedExpr::zero();
        for dl in 0..2 {
            for dr in 0..2 {
                for (op, out_deg) in scheme.rules(dl, dr) {
                    for (ml, cl) in &self.parts[dl] {
                        for (mr, cr) in &other.parts[dr] {
                            out.insert(
                                *out_deg,
                                Monomial::node(op.clone(), ml.clone(), mr.clone()),
                                cl.clone() * cr.clone(),
                            );
                        }
                    }
                }
            }
        }
        out.prune();
        out
    }

    pub fn add_scaled(&mut self, other: &Self, c: &S) {
        for deg in 0..2 {
            for (m, k) in &other.parts[deg] {
                self.insert(deg, m.clone(), k.clone() * c.clone());
            }
        }
        self.prune();
    }

    pub fn is_zero(&self) -> bool {
        self.parts.iter().all(|p| p.is_empty())
    }

    pub fn degree_component(&self, degree: usize) -> Vec<(S, Monomial)> {
        self.parts[degree]
            .iter()
            .map(|(m, c)| (c.clone(), m.clone()))
            .collect()
    }
}

/// Evaluates a source monomial in the doubled space, with the leaf at
/// position `i` placed in degree 1 iff `degrees[i - 1]` holds.
pub fn evaluate_monomial_graded<S: Scalar>(
    m: &Monomial,
    degrees: &[bool],
    scheme: &SplitScheme,
) -> Result<GradedExpr<S>, TermError> {
    let args: Vec<GradedExpr<S>> = (1..=degrees.len())
        .map(|i| GradedExpr::leaf(i, usize::from(degrees[i - 1])))
        .collect();
    evaluate_monomial(m, &args, &mut |_, a: &GradedExpr<S>, b: &GradedExpr<S>| {
        Some(a.product(b, scheme))
    })
}

fn evaluate_relation_graded<S: Scalar>(
    rel: &Relation<S>,
    degrees: &[bool],
    scheme: &SplitScheme,
) -> Result<GradedExpr<S>, TermError> {
    let mut total = GradedExpr::zero();
    for (c, m) in rel.terms() {
        let value = evaluate_monomial_graded(m, degrees, scheme)?;
        total.add_scaled(&value, c);
    }
    Ok(total)
}

/// One derived relation together with the set of leaf positions that were
/// assigned degree 1 to produce it.
#[derive(Clone, PartialEq, Debug)]
pub struct DerivedRelation<S> {
    pub subset: Vec<usize>,
    pub relation: Relation<S>,
}

/// The split of a single source relation.
#[derive(Clone, PartialEq, Debug)]
pub struct SourceSplit<S> {
    pub source: Relation<S>,
    /// Nonzero derived relations for nonempty degree-1 subsets, deduplicated
    /// up to scalar and variable relabeling (first subset kept).
    pub derived: Vec<DerivedRelation<S>>,
    /// Degree-0 relation of the all-degree-0 assignment, fully expanded over
    /// the alphabet. Present for the NS and tridendriform schemes.
    pub star: Option<Relation<S>>,
    /// NS only: star relation minus the sum of all single-degree-1 derived
    /// relations (before deduplication).
    pub extra: Option<Relation<S>>,
}

/// Derived relation system of a presentation under a splitting scheme.
#[derive(Clone, PartialEq, Debug)]
pub struct SplitRelationSet<S> {
    scheme: SplitScheme,
    presentation: CategoryPresentation<S>,
    sources: Vec<SourceSplit<S>>,
}

impl<S: Scalar> SplitRelationSet<S> {
    pub fn scheme(&self) -> &SplitScheme {
        &self.scheme
    }

    pub fn presentation(&self) -> &CategoryPresentation<S> {
        &self.presentation
    }

    pub fn sources(&self) -> &[SourceSplit<S>] {
        &self.sources
    }

    /// The defining relations of the split category: the deduplicated derived
    /// relations, plus the extra relation for the NS scheme. The star
    /// relation is omitted; it is the sum of the others.
    pub fn defining_relations(&self) -> Vec<&Relation<S>> {
        let mut out = Vec::new();
        for src in &self.sources {
            out.extend(src.derived.iter().map(|d| &d.relation));
            if let Some(extra) = &src.extra {
                out.push(extra);
            }
        }
        out
    }

    /// All stored relations including the star relations.
    pub fn all_relations(&self) -> Vec<&Relation<S>> {
        let mut out = Vec::new();
        for src in &self.sources {
            out.extend(src.derived.iter().map(|d| &d.relation));
            if let Some(star) = &src.star {
                out.push(star);
            }
            if let Some(extra) = &src.extra {
                out.push(extra);
            }
        }
        out
    }
}

/// Nonempty subsets of `1..=n` ordered by size, then lexicographically; the
/// empty subset comes first.
fn subsets(n: usize) -> Vec<Vec<usize>> {
    let mut all: Vec<Vec<usize>> = (0u32..(1 << n))
        .map(|mask| (1..=n).filter(|i| mask & (1 << (i - 1)) != 0).collect())
        .collect();
    all.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    all
}

fn split_one_relation<S: Scalar>(
    rel: &Relation<S>,
    scheme: &SplitScheme,
) -> Result<SourceSplit<S>, SplitError> {
    let n = rel.arity();
    if !(2..=6).contains(&n) {
        return Err(SplitError::ArityOutOfRange { arity: n });
    }

    let mut star = Relation::zero(n);
    let mut raw: Vec<(Vec<usize>, Relation<S>)> = Vec::new();
    for subset in subsets(n) {
        let mut degrees = vec![false; n];
        for &i in &subset {
            degrees[i - 1] = true;
        }
        let graded = evaluate_relation_graded(rel, &degrees, scheme)?;
        let deg0 = Relation::new(n, graded.degree_component(0))?;
        let deg1 = Relation::new(n, graded.degree_component(1))?;
        if subset.is_empty() {
            assert!(deg1.is_zero(), "all-degree-0 assignment has no degree-1 part");
            star = deg0;
        } else {
            assert!(deg0.is_zero(), "degree-1 inputs never produce degree-0 terms");
            if scheme.kind() != SchemeKind::Tridendriform && subset.len() >= 2 {
                // The grading is concentrated in degrees 0 and 1.
                assert!(deg1.is_zero(), "degree conservation");
                continue;
            }
            if !deg1.is_zero() {
                raw.push((subset, deg1));
            }
        }
    }

    let extra = if scheme.kind() == SchemeKind::Ns {
        let mut sum = Relation::zero(n);
        for (subset, rel) in &raw {
            if subset.len() == 1 {
                sum = sum.add(rel)?;
            }
        }
        let extra = star.sub(&sum)?;
        assert_eq!(
            star,
            extra.add(&sum)?,
            "star relation is the extra relation plus the dendriform-type ones"
        );
        Some(extra)
    } else {
        None
    };

    let mut derived: Vec<DerivedRelation<S>> = Vec::new();
    for (subset, relation) in raw {
        let duplicate = derived
            .iter()
            .any(|d| relations_equal_up_to_scalar_and_relabeling(&d.relation, &relation));
        if !duplicate {
            derived.push(DerivedRelation { subset, relation });
        }
    }

    let star = match scheme.kind() {
        SchemeKind::Dendriform => None,
        _ => Some(star),
    };
    Ok(SourceSplit {
        source: rel.clone(),
        derived,
        star,
        extra,
    })
}

/// Derives the defining relations of the split category from a presentation.
///
/// For each `n`-linear source relation and each subset of leaf positions
/// assigned degree 1, the relation is evaluated with the scheme's graded
/// product and the degree-1 component is emitted (the degree-0 component for
/// the empty subset, which is the star relation, with `⋆` fully expanded).
/// For the NS and dendriform schemes, assignments with two or more degree-1
/// positions vanish identically; this is asserted, not assumed. For the NS
/// scheme the extra relation `star − Σ single-degree-1 relations` is also
/// emitted. Duplicates up to scalar and relabeling within one source
/// relation are merged, so symmetric relations yield fewer outputs.
pub fn derive_split_relations<S: Scalar>(
    cat: &CategoryPresentation<S>,
    scheme: &SplitScheme,
) -> Result<SplitRelationSet<S>, SplitError> {
    let sources = cat
        .relations()
        .iter()
        .map(|rel| split_one_relation(rel, scheme))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(SplitRelationSet {
        scheme: scheme.clone(),
        presentation: cat.clone(),
        sources,
    })
}

/// Computes each source relation's NS extra relation directly: evaluate the
/// relation on degree-0 elements with the `*_∨` product rules (the cocycle
/// extension with `H = ∨`) and keep the degree-1 component. Must agree with
/// the subtracted extra relation of [`derive_split_relations`].
pub fn derive_extra_via_alt_formula<S: Scalar>(
    cat: &CategoryPresentation<S>,
) -> Result<Vec<Relation<S>>, SplitError> {
    let alt = SplitScheme::alt_vee();
    let mut out = Vec::new();
    for rel in cat.relations() {
        let n = rel.arity();
        if !(2..=6).contains(&n) {
            return Err(SplitError::ArityOutOfRange { arity: n });
        }
        let graded = evaluate_relation_graded(rel, &vec![false; n], &alt)?;
        out.push(Relation::new(n, graded.degree_component(1))?);
    }
    Ok(out)
}

fn substitute_times<S: Scalar>(m: &Monomial) -> (S, Monomial) {
    match m {
        Monomial::Leaf(i) => (S::one(), Monomial::leaf(*i)),
        Monomial::Node(op, l, r) => {
            let (sl, l2) = substitute_times::<S>(l);
            let (sr, r2) = substitute_times::<S>(r);
            let sign = sl * sr;
            match op.name() {
                // a ≻ b = a × b
                "succ" => (sign, Monomial::node(OpSymbol::times(), l2, r2)),
                // a ≺ b = −b × a
                "prec" => (-sign, Monomial::node(OpSymbol::times(), r2, l2)),
                _ => (sign, Monomial::node(op.clone(), l2, r2)),
            }
        }
    }
}

fn vee_normal_form_monomial<S: Scalar>(m: &Monomial) -> (S, Monomial) {
    match m {
        Monomial::Leaf(i) => (S::one(), Monomial::leaf(*i)),
        Monomial::Node(op, l, r) => {
            let (sl, l2) = vee_normal_form_monomial::<S>(l);
            let (sr, r2) = vee_normal_form_monomial::<S>(r);
            let sign = sl * sr;
            if op.name() == "vee" && l2 > r2 {
                (-sign, Monomial::node(op.clone(), r2, l2))
            } else {
                (sign, Monomial::node(op.clone(), l2, r2))
            }
        }
    }
}

/// Rewrites each `∨`-node whose children are out of canonical order with
/// `x ∨ y = −y ∨ x` and canonicalizes. The normal form of any consequence of
/// `∨`-anticommutativity alone is the zero relation.
pub fn vee_normal_form<S: Scalar>(rel: &Relation<S>) -> Relation<S> {
    rel.map_monomials(vee_normal_form_monomial)
}

fn anticommutativity_relation<S: Scalar>(op: &OpSymbol) -> Relation<S> {
    Relation::new(
        2,
        vec![
            (S::one(), Monomial::node(op.clone(), Monomial::leaf(1), Monomial::leaf(2))),
            (S::one(), Monomial::node(op.clone(), Monomial::leaf(2), Monomial::leaf(1))),
        ],
    )
    .expect("anticommutativity relation is well formed")
}

/// Rewrites a derived relation system for an anticommutative source category
/// in terms of a single product `×`, substituting `x ≻ y → x × y` and
/// `x ≺ y → −y × x` in every defining relation.
///
/// Relations that become consequences of `∨`-anticommutativity alone (such
/// as `a∨b + b∨a` itself) are kept verbatim; every other relation is returned
/// in `∨`-normal form. Zero images are dropped and duplicates up to scalar,
/// relabeling and `∨`-flips are merged within each source relation.
pub fn reduce_anticommutative<S: Scalar>(
    rels: &SplitRelationSet<S>,
) -> Result<Vec<Relation<S>>, SplitError> {
    let anticom = anticommutativity_relation::<S>(rels.presentation().op());
    let has_anticom = rels
        .presentation()
        .relations()
        .iter()
        .any(|r| crate::terms::relations_equal_up_to_scalar(r, &anticom));
    if !has_anticom {
        return Err(SplitError::NotAnticommutative);
    }

    let mut out: Vec<Relation<S>> = Vec::new();
    for src in rels.sources() {
        // (raw image, normal form); the normal form is what we compare and,
        // when nonzero, what we return.
        let mut kept: Vec<(Relation<S>, Relation<S>)> = Vec::new();
        let images = src
            .derived
            .iter()
            .map(|d| &d.relation)
            .chain(src.extra.iter());
        for rel in images {
            let image = rel.map_monomials(substitute_times);
            if image.is_zero() {
                continue;
            }
            let nf = vee_normal_form(&image);
            let duplicate = kept.iter().any(|(other_raw, other_nf)| {
                if nf.is_zero() && other_nf.is_zero() {
                    relations_equal_up_to_scalar_and_relabeling(&image, other_raw)
                } else {
                    relations_equal_up_to_scalar_and_relabeling(&nf, other_nf)
                }
            });
            if !duplicate {
                kept.push((image, nf));
            }
        }
        for (raw, nf) in kept {
            out.push(if nf.is_zero() { raw } else { nf });
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests;
