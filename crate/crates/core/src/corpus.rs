//! Bundled example algebras, bimodules and operators used by the CLI catalog
//! and the test suites.

use std::collections::BTreeMap;

use crate::findim::{
    nijenhuis_ns, rb_ns, trb_ns, Bimodule, Cocycle, FinAlgebra, LinOperator, Mat, OperatorKind,
    StructureTensor,
};
use crate::scalar::{frac, int, Scalar};
use crate::terms::{catalog, CategoryPresentation, OpSymbol};

fn tensor_from_entries<S: Scalar>(dim: usize, entries: &[(usize, usize, usize, i64)]) -> StructureTensor<S> {
    let mut t = StructureTensor::zeros(dim);
    for &(i, j, k, c) in entries {
        *t.get_mut(i, j, k) = int(c);
    }
    t
}

fn single_mu<S: Scalar>(names: &[&str], entries: &[(usize, usize, usize, i64)]) -> FinAlgebra<S> {
    FinAlgebra::single(OpSymbol::mu(), tensor_from_entries(names.len(), entries))
        .with_basis_names(names.iter().map(|s| s.to_string()).collect())
}

/// Upper-triangular 2×2 matrices: basis `E11, E12, E22`, associative.
pub fn upper_triangular_2x2<S: Scalar>() -> FinAlgebra<S> {
    single_mu(
        &["E11", "E12", "E22"],
        &[(0, 0, 0, 1), (0, 1, 1, 1), (1, 2, 1, 1), (2, 2, 2, 1)],
    )
}

/// `sl2` over the rationals: basis `e, f, h` with `[h,e] = 2e`, `[h,f] = −2f`,
/// `[e,f] = h`.
pub fn sl2<S: Scalar>() -> FinAlgebra<S> {
    single_mu(
        &["e", "f", "h"],
        &[
            (2, 0, 0, 2),
            (0, 2, 0, -2),
            (2, 1, 1, -2),
            (1, 2, 1, 2),
            (0, 1, 2, 1),
            (1, 0, 2, -1),
        ],
    )
}

/// The split commutative algebra `k × k`: basis `u, v` with `u² = u`,
/// `v² = v`, `uv = vu = 0`.
pub fn diagonal_2d<S: Scalar>() -> FinAlgebra<S> {
    single_mu(&["u", "v"], &[(0, 0, 0, 1), (1, 1, 1, 1)])
}

/// The 2-dimensional nilpotent algebra with basis `x, x2` and `x·x = x2`;
/// all other products vanish.
pub fn nilpotent_cubic<S: Scalar>() -> FinAlgebra<S> {
    single_mu(&["x", "x2"], &[(0, 0, 1, 1)])
}

/// A 2-dimensional Leibniz algebra that is neither Lie nor associative:
/// basis `x, y` with `y·x = x`.
pub fn leibniz_2d<S: Scalar>() -> FinAlgebra<S> {
    single_mu(&["x", "y"], &[(1, 0, 0, 1)])
}

/// A 2-dimensional pre-Lie algebra that is not associative: basis `e0, e1`
/// with `e0·e0 = e0`, `e1·e0 = e1`, `e0·e1 = 2e1` (a truncated algebra of
/// vector fields on the line).
pub fn pre_lie_2d<S: Scalar>() -> FinAlgebra<S> {
    single_mu(
        &["e0", "e1"],
        &[(0, 0, 0, 1), (1, 0, 1, 1), (0, 1, 1, 2)],
    )
}

/// A 2-dimensional NAP algebra that is not associative: basis `x, y` with
/// `y·x = x` and `y·y = x + y` (all left multiplications commute).
pub fn nap_2d<S: Scalar>() -> FinAlgebra<S> {
    single_mu(&["x", "y"], &[(1, 0, 0, 1), (1, 1, 0, 1), (1, 1, 1, 1)])
}

/// A 4-dimensional twilled associative algebra: the semidirect sum `A ⋈ A`
/// of the diagonal algebra acting on itself, with product
/// `(a,x)(a',x') = (aa', ax' + xa' + xx')`. Both summands are subalgebras.
pub fn twilled_4d<S: Scalar>() -> FinAlgebra<S> {
    let base = diagonal_2d::<S>();
    let m = Bimodule::standard_self(&base, &OpSymbol::mu()).expect("standard bimodule");
    crate::findim::semidirect_sum(&m)
        .expect("semidirect sum")
        .with_basis_names(vec!["u0".into(), "v0".into(), "u1".into(), "v1".into()])
}

/// Projection of the twilled algebra onto its first or second summand.
pub fn twilled_projection<S: Scalar>(second: bool) -> Mat<S> {
    let mut p = Mat::zero(4, 4);
    for i in 0..2 {
        let idx = if second { 2 + i } else { i };
        *p.get_mut(idx, idx) = S::one();
    }
    p
}

/// Nilpotent shift `N(x) = x2`, `N(x2) = 0` on [`nilpotent_cubic`]; satisfies
/// `N² = 0`, hence is both a Nijenhuis operator and a Rota-Baxter operator of
/// weight zero.
pub fn shift_nilcubic<S: Scalar>() -> Mat<S> {
    Mat::from_rows(vec![vec![int(0), int(0)], vec![int(1), int(0)]])
}

/// Reynolds operator `β = diag(−2, −1/2)` on [`nilpotent_cubic`].
pub fn reynolds_nilcubic<S: Scalar>() -> Mat<S> {
    Mat::from_rows(vec![
        vec![int(-2), int(0)],
        vec![int(0), frac(-1, 2)],
    ])
}

/// Rota-Baxter operator of weight 1 on [`diagonal_2d`]: `R(u) = 0`,
/// `R(v) = u`.
pub fn rb_weight1_diagonal<S: Scalar>() -> Mat<S> {
    Mat::from_rows(vec![vec![int(0), int(1)], vec![int(0), int(0)]])
}

/// The natural column module `k²` over [`upper_triangular_2x2`]: left action
/// by matrix-vector multiplication, zero right action, zero module product.
pub fn natural_module_uppertri<S: Scalar>() -> Bimodule<S> {
    let base = upper_triangular_2x2::<S>();
    let left = vec![
        Mat::from_rows(vec![vec![int(1), int(0)], vec![int(0), int(0)]]),
        Mat::from_rows(vec![vec![int(0), int(1)], vec![int(0), int(0)]]),
        Mat::from_rows(vec![vec![int(0), int(0)], vec![int(0), int(1)]]),
    ];
    let right = vec![Mat::zero(2, 2), Mat::zero(2, 2), Mat::zero(2, 2)];
    Bimodule::new(
        base,
        OpSymbol::mu(),
        2,
        left,
        right,
        Some(StructureTensor::zeros(2)),
    )
    .expect("natural module")
}

/// Nonzero relative Rota-Baxter operator of weight zero on the natural
/// module: `R(f1) = 0`, `R(f2) = E12`.
pub fn relative_rb0_uppertri<S: Scalar>() -> Mat<S> {
    let mut r = Mat::zero(3, 2);
    *r.get_mut(1, 1) = S::one();
    r
}

/// A bundled named algebra together with the catalog category it belongs to.
pub struct AlgebraEntry<S> {
    pub name: &'static str,
    pub category: &'static str,
    pub algebra: FinAlgebra<S>,
}

/// All bundled algebras.
pub fn algebras<S: Scalar>() -> Vec<AlgebraEntry<S>> {
    vec![
        AlgebraEntry {
            name: "upper-triangular-2x2",
            category: "associative",
            algebra: upper_triangular_2x2(),
        },
        AlgebraEntry {
            name: "sl2",
            category: "lie",
            algebra: sl2(),
        },
        AlgebraEntry {
            name: "diagonal-2d",
            category: "commutative-associative",
            algebra: diagonal_2d(),
        },
        AlgebraEntry {
            name: "nilpotent-cubic",
            category: "associative",
            algebra: nilpotent_cubic(),
        },
        AlgebraEntry {
            name: "leibniz-2d",
            category: "leibniz",
            algebra: leibniz_2d(),
        },
        AlgebraEntry {
            name: "pre-lie-2d",
            category: "pre-lie",
            algebra: pre_lie_2d(),
        },
        AlgebraEntry {
            name: "nap-2d",
            category: "nap",
            algebra: nap_2d(),
        },
        AlgebraEntry {
            name: "twilled-4d",
            category: "associative",
            algebra: twilled_4d(),
        },
    ]
}

/// A bundled check/verify scenario: a base algebra in a catalog category,
/// optionally a bimodule over it, an operator and a cocycle.
pub struct ExampleSpec<S> {
    pub name: &'static str,
    pub description: &'static str,
    pub category: &'static str,
    pub algebra: FinAlgebra<S>,
    pub bimodule: Option<Bimodule<S>>,
    pub operator: Option<LinOperator<S>>,
    pub cocycle: Option<Cocycle<S>>,
}

/// All bundled operator scenarios.
pub fn examples<S: Scalar>() -> Vec<ExampleSpec<S>> {
    let nilcubic = nilpotent_cubic::<S>();
    vec![
        ExampleSpec {
            name: "uppertri-id-nijenhuis",
            description: "identity operator on upper-triangular matrices",
            category: "associative",
            algebra: upper_triangular_2x2(),
            bimodule: None,
            operator: Some(LinOperator {
                matrix: Mat::identity(3),
                kind: OperatorKind::Nijenhuis,
            }),
            cocycle: None,
        },
        ExampleSpec {
            name: "sl2-id-nijenhuis",
            description: "identity operator on sl2",
            category: "lie",
            algebra: sl2(),
            bimodule: None,
            operator: Some(LinOperator {
                matrix: Mat::identity(3),
                kind: OperatorKind::Nijenhuis,
            }),
            cocycle: None,
        },
        ExampleSpec {
            name: "twilled-p1",
            description: "projection onto the first summand of the twilled algebra",
            category: "associative",
            algebra: twilled_4d(),
            bimodule: None,
            operator: Some(LinOperator {
                matrix: twilled_projection(false),
                kind: OperatorKind::Nijenhuis,
            }),
            cocycle: None,
        },
        ExampleSpec {
            name: "twilled-p2",
            description: "projection onto the second summand of the twilled algebra",
            category: "associative",
            algebra: twilled_4d(),
            bimodule: None,
            operator: Some(LinOperator {
                matrix: twilled_projection(true),
                kind: OperatorKind::Nijenhuis,
            }),
            cocycle: None,
        },
        ExampleSpec {
            name: "nilcubic-shift",
            description: "square-zero shift, simultaneously Nijenhuis and Rota-Baxter of weight 0",
            category: "associative",
            algebra: nilcubic.clone(),
            bimodule: None,
            operator: Some(LinOperator {
                matrix: shift_nilcubic(),
                kind: OperatorKind::Nijenhuis,
            }),
            cocycle: None,
        },
        ExampleSpec {
            name: "nilcubic-reynolds",
            description: "Reynolds operator diag(-2, -1/2) on the nilpotent cubic algebra",
            category: "associative",
            algebra: nilcubic,
            bimodule: None,
            operator: Some(LinOperator {
                matrix: reynolds_nilcubic(),
                kind: OperatorKind::Reynolds,
            }),
            cocycle: None,
        },
        ExampleSpec {
            name: "diagonal-rb1",
            description: "Rota-Baxter operator of weight 1 on k × k",
            category: "associative",
            algebra: diagonal_2d(),
            bimodule: None,
            operator: Some(LinOperator {
                matrix: rb_weight1_diagonal(),
                kind: OperatorKind::RotaBaxter { weight: S::one() },
            }),
            cocycle: None,
        },
        ExampleSpec {
            name: "uppertri-relative-rb0",
            description: "weight-0 relative Rota-Baxter operator on the natural column module",
            category: "associative",
            algebra: upper_triangular_2x2(),
            bimodule: Some(natural_module_uppertri()),
            operator: Some(LinOperator {
                matrix: relative_rb0_uppertri(),
                kind: OperatorKind::RelativeRotaBaxter { weight: S::zero() },
            }),
            cocycle: None,
        },
        ExampleSpec {
            name: "twilled-p1-ns",
            description: "NS-algebra induced by the first twilled projection (for cross-check)",
            category: "associative",
            algebra: nijenhuis_ns(&twilled_4d(), &OpSymbol::mu(), &twilled_projection(false))
                .expect("projection is Nijenhuis"),
            bimodule: None,
            operator: None,
            cocycle: None,
        },
    ]
}

/// The bundled scenario with the given name.
pub fn example<S: Scalar>(name: &str) -> Option<ExampleSpec<S>> {
    examples().into_iter().find(|e| e.name == name)
}

/// The zero NS-algebra of the given dimension: all three products vanish.
pub fn zero_ns<S: Scalar>(dim: usize) -> FinAlgebra<S> {
    FinAlgebra::new(
        dim,
        (1..=dim).map(|i| format!("e{i}")).collect(),
        BTreeMap::from([
            (OpSymbol::prec(), StructureTensor::zeros(dim)),
            (OpSymbol::succ(), StructureTensor::zeros(dim)),
            (OpSymbol::vee(), StructureTensor::zeros(dim)),
        ]),
    )
    .expect("zero NS algebra")
}

/// NS-algebras produced by the bundled operators, each paired with the
/// category its double lies in. Used by the round-trip and consistency
/// suites.
pub fn ns_examples<S: Scalar>() -> Vec<(String, CategoryPresentation<S>, FinAlgebra<S>)> {
    let mu = OpSymbol::mu();
    let assoc = catalog::<S>("associative").expect("catalog");
    let lie = catalog::<S>("lie").expect("catalog");
    let mut out: Vec<(String, CategoryPresentation<S>, FinAlgebra<S>)> = Vec::new();

    let uppertri = upper_triangular_2x2::<S>();
    out.push((
        "uppertri-id-ns".into(),
        assoc.clone(),
        nijenhuis_ns(&uppertri, &mu, &Mat::identity(3)).expect("identity is Nijenhuis"),
    ));
    out.push((
        "uppertri-zero-ns".into(),
        assoc.clone(),
        nijenhuis_ns(&uppertri, &mu, &Mat::zero(3, 3)).expect("zero is Nijenhuis"),
    ));
    out.push((
        "sl2-id-ns".into(),
        lie,
        nijenhuis_ns(&sl2::<S>(), &mu, &Mat::identity(3)).expect("identity is Nijenhuis"),
    ));

    let twilled = twilled_4d::<S>();
    out.push((
        "twilled-p1-ns".into(),
        assoc.clone(),
        nijenhuis_ns(&twilled, &mu, &twilled_projection(false)).expect("projection is Nijenhuis"),
    ));
    out.push((
        "twilled-p2-ns".into(),
        assoc.clone(),
        nijenhuis_ns(&twilled, &mu, &twilled_projection(true)).expect("projection is Nijenhuis"),
    ));
    out.push((
        "nilcubic-shift-ns".into(),
        assoc.clone(),
        nijenhuis_ns(&nilpotent_cubic::<S>(), &mu, &shift_nilcubic()).expect("shift is Nijenhuis"),
    ));

    let diag_self = Bimodule::standard_self(&diagonal_2d::<S>(), &mu).expect("standard bimodule");
    out.push((
        "diagonal-rb1-ns".into(),
        assoc.clone(),
        rb_ns(&diag_self, &rb_weight1_diagonal(), &S::one()).expect("weight-1 Rota-Baxter"),
    ));

    let natmod = natural_module_uppertri::<S>();
    out.push((
        "uppertri-relative-rb0-ns".into(),
        assoc.clone(),
        rb_ns(&natmod, &relative_rb0_uppertri(), &S::zero()).expect("weight-0 relative RB"),
    ));

    let nilcubic = nilpotent_cubic::<S>();
    let reynolds_bimodule = Bimodule::standard_self(&nilcubic, &mu)
        .expect("standard bimodule")
        .forget_product();
    let h = Cocycle::neg_mu(&nilcubic, &mu).expect("Reynolds cocycle");
    out.push((
        "nilcubic-reynolds-ns".into(),
        assoc.clone(),
        trb_ns(&reynolds_bimodule, &reynolds_nilcubic(), &h, &assoc)
            .expect("Reynolds operator is (−μ)-twisted"),
    ));

    out.push(("zero-ns".into(), assoc, zero_ns(2)));
    out
}
