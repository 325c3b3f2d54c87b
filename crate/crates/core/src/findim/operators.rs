//! Operator identities (Nijenhuis, Rota-Baxter, twisted Rota-Baxter,
//! Reynolds) and the split structures they induce.

use std::collections::BTreeMap;

use super::constructions::{check_in_category, is_2cocycle, is_bimodule, semidirect_sum};
use super::linalg::{basis_vec, vec_add, vec_is_zero, vec_scale, vec_sub, Mat, StructureTensor};
use super::types::{Bimodule, CheckReport, Cocycle, FinAlgebra, Violation};
use super::FindimError;
use crate::scalar::Scalar;
use crate::split::SplitScheme;
use crate::terms::{CategoryPresentation, OpSymbol};

fn require_endomorphism<S: Scalar>(alg: &FinAlgebra<S>, n: &Mat<S>) -> Result<(), FindimError> {
    if n.rows() != alg.dim() || n.cols() != alg.dim() {
        return Err(FindimError::NotEndomorphism {
            rows: n.rows(),
            cols: n.cols(),
        });
    }
    Ok(())
}

fn pair_report<S: Scalar>(
    dim_left: usize,
    dim_right: usize,
    mut residue: impl FnMut(usize, usize) -> Vec<S>,
) -> CheckReport<S> {
    let mut report = CheckReport::default();
    for i in 0..dim_left {
        for j in 0..dim_right {
            let r = residue(i, j);
            if !vec_is_zero(&r) {
                report.violations.push(Violation {
                    relation: 0,
                    tuple: vec![i, j],
                    residue: r,
                });
            }
        }
    }
    report
}

/// Verifies `N(a)N(a') = N(N(a)a' + aN(a') − N(aa'))` on all basis pairs.
pub fn check_nijenhuis<S: Scalar>(
    alg: &FinAlgebra<S>,
    op: &OpSymbol,
    n: &Mat<S>,
) -> Result<CheckReport<S>, FindimError> {
    require_endomorphism(alg, n)?;
    let tensor = alg.require_product(op)?;
    let d = alg.dim();
    Ok(pair_report(d, d, |i, j| {
        let a = basis_vec::<S>(d, i);
        let b = basis_vec::<S>(d, j);
        let na = n.column(i);
        let nb = n.column(j);
        let lhs = tensor.mul(&na, &nb);
        let inner = vec_sub(
            &vec_add(&tensor.mul(&na, &b), &tensor.mul(&a, &nb)),
            &n.mul_vec(&tensor.basis_product(i, j)),
        );
        vec_sub(&lhs, &n.mul_vec(&inner))
    }))
}

/// The tensor of the deformed product `a ⋆ a' = N(a)a' + aN(a') − N(aa')`.
fn deformed_tensor<S: Scalar>(
    alg: &FinAlgebra<S>,
    op: &OpSymbol,
    n: &Mat<S>,
) -> Result<StructureTensor<S>, FindimError> {
    let tensor = alg.require_product(op)?;
    let d = alg.dim();
    let mut out = StructureTensor::zeros(d);
    for i in 0..d {
        for j in 0..d {
            let a = basis_vec::<S>(d, i);
            let b = basis_vec::<S>(d, j);
            let value = vec_sub(
                &vec_add(
                    &tensor.mul(&n.column(i), &b),
                    &tensor.mul(&a, &n.column(j)),
                ),
                &n.mul_vec(&tensor.basis_product(i, j)),
            );
            for k in 0..d {
                *out.get_mut(i, j, k) = value[k].clone();
            }
        }
    }
    Ok(out)
}

/// The deformed algebra `(A, ⋆)` of a Nijenhuis operator, with the product
/// stored under `star`.
pub fn nijenhuis_deformed<S: Scalar>(
    alg: &FinAlgebra<S>,
    op: &OpSymbol,
    n: &Mat<S>,
) -> Result<FinAlgebra<S>, FindimError> {
    if !check_nijenhuis(alg, op, n)?.passed() {
        return Err(FindimError::NotNijenhuis);
    }
    let star = deformed_tensor(alg, op, n)?;
    Ok(FinAlgebra::single(OpSymbol::star(), star)
        .with_basis_names(alg.basis_names().to_vec()))
}

/// The NS structure of a Nijenhuis operator:
/// `a ≻ a' = N(a)a'`, `a ≺ a' = aN(a')`, `a ∨ a' = −N(aa')`.
pub fn nijenhuis_ns<S: Scalar>(
    alg: &FinAlgebra<S>,
    op: &OpSymbol,
    n: &Mat<S>,
) -> Result<FinAlgebra<S>, FindimError> {
    if !check_nijenhuis(alg, op, n)?.passed() {
        return Err(FindimError::NotNijenhuis);
    }
    let tensor = alg.require_product(op)?;
    let d = alg.dim();
    let mut prec = StructureTensor::zeros(d);
    let mut succ = StructureTensor::zeros(d);
    let mut vee = StructureTensor::zeros(d);
    for i in 0..d {
        for j in 0..d {
            let a = basis_vec::<S>(d, i);
            let b = basis_vec::<S>(d, j);
            let sv = tensor.mul(&n.column(i), &b);
            let pv = tensor.mul(&a, &n.column(j));
            let vv = vec_scale(&n.mul_vec(&tensor.basis_product(i, j)), &-S::one());
            for k in 0..d {
                *succ.get_mut(i, j, k) = sv[k].clone();
                *prec.get_mut(i, j, k) = pv[k].clone();
                *vee.get_mut(i, j, k) = vv[k].clone();
            }
        }
    }
    FinAlgebra::new(
        d,
        alg.basis_names().to_vec(),
        BTreeMap::from([
            (OpSymbol::prec(), prec),
            (OpSymbol::succ(), succ),
            (OpSymbol::vee(), vee),
        ]),
    )
}

/// Verifies the Rota-Baxter identity of weight `λ` on the algebra itself:
/// `R(a)R(a') = R(R(a)a' + aR(a') + λaa')`.
pub fn check_rb<S: Scalar>(
    alg: &FinAlgebra<S>,
    op: &OpSymbol,
    r: &Mat<S>,
    weight: &S,
) -> Result<CheckReport<S>, FindimError> {
    require_endomorphism(alg, r)?;
    let tensor = alg.require_product(op)?;
    let d = alg.dim();
    Ok(pair_report(d, d, |i, j| {
        let a = basis_vec::<S>(d, i);
        let b = basis_vec::<S>(d, j);
        let ra = r.column(i);
        let rb = r.column(j);
        let lhs = tensor.mul(&ra, &rb);
        let inner = vec_add(
            &vec_add(&tensor.mul(&ra, &b), &tensor.mul(&a, &rb)),
            &vec_scale(&tensor.basis_product(i, j), weight),
        );
        vec_sub(&lhs, &r.mul_vec(&inner))
    }))
}

fn require_operator_shape<S: Scalar>(m: &Bimodule<S>, r: &Mat<S>) -> Result<(), FindimError> {
    if r.rows() != m.base().dim() || r.cols() != m.mdim() {
        return Err(FindimError::Shape(format!(
            "operator is {}×{}, expected {}×{} (module → algebra)",
            r.rows(),
            r.cols(),
            m.base().dim(),
            m.mdim()
        )));
    }
    Ok(())
}

/// Verifies the relative Rota-Baxter identity of weight `λ` for `R: M → A`:
/// `R(m)R(m') = R(R(m)·m' + m·R(m') + λ m•m')`.
///
/// The module product is only required when `λ ≠ 0`.
pub fn check_relative_rb<S: Scalar>(
    m: &Bimodule<S>,
    r: &Mat<S>,
    weight: &S,
) -> Result<CheckReport<S>, FindimError> {
    require_operator_shape(m, r)?;
    let tensor = m.base().require_product(m.op())?;
    if !weight.is_zero() && m.module_product().is_none() {
        return Err(FindimError::MissingModuleProduct);
    }
    let md = m.mdim();
    Ok(pair_report(md, md, |i, j| {
        let mi = basis_vec::<S>(md, i);
        let mj = basis_vec::<S>(md, j);
        let ri = r.column(i);
        let rj = r.column(j);
        let lhs = tensor.mul(&ri, &rj);
        let mut inner = vec_add(&m.act_left(&ri, &mj), &m.act_right(&mi, &rj));
        if !weight.is_zero() {
            let bullet = m
                .module_product()
                .expect("checked above")
                .basis_product(i, j);
            inner = vec_add(&inner, &vec_scale(&bullet, weight));
        }
        vec_sub(&lhs, &r.mul_vec(&inner))
    }))
}

/// The lift `R̂(a, m) = (−λa + R(m), 0)` on the semidirect sum `A ⋈ M`.
/// `R` is a relative Rota-Baxter operator of weight `λ` iff `R̂` is a
/// Rota-Baxter operator of weight `λ` on `A ⋈ M`.
pub fn lift_operator<S: Scalar>(
    m: &Bimodule<S>,
    r: &Mat<S>,
    weight: &S,
) -> Result<(FinAlgebra<S>, Mat<S>), FindimError> {
    require_operator_shape(m, r)?;
    let ambient = semidirect_sum(m)?;
    let d = m.base().dim();
    let md = m.mdim();
    let mut lift = Mat::zero(d + md, d + md);
    for i in 0..d {
        *lift.get_mut(i, i) = -weight.clone();
    }
    for i in 0..d {
        for j in 0..md {
            *lift.get_mut(i, d + j) = r.get(i, j).clone();
        }
    }
    Ok((ambient, lift))
}

enum ThirdProduct<'a, S> {
    /// `λ m • m'` under the given symbol.
    WeightedBullet(OpSymbol, &'a S),
    /// `H(R(m) ⊗ R(m'))` under `vee`.
    TwistedCocycle(&'a Cocycle<S>),
}

/// Common product table of the induced split structures:
/// `m ≺ m' = m·R(m')`, `m ≻ m' = R(m)·m'`, plus a scheme-specific third
/// product.
fn induced_products<S: Scalar>(
    m: &Bimodule<S>,
    r: &Mat<S>,
    third: ThirdProduct<'_, S>,
) -> Result<FinAlgebra<S>, FindimError> {
    let md = m.mdim();
    let mut prec = StructureTensor::zeros(md);
    let mut succ = StructureTensor::zeros(md);
    let mut extra = StructureTensor::zeros(md);
    for i in 0..md {
        for j in 0..md {
            let mi = basis_vec::<S>(md, i);
            let mj = basis_vec::<S>(md, j);
            let pv = m.act_right(&mi, &r.column(j));
            let sv = m.act_left(&r.column(i), &mj);
            let tv = match &third {
                ThirdProduct::WeightedBullet(_, weight) => {
                    let bullet = m
                        .module_product()
                        .map(|p| p.basis_product(i, j))
                        .unwrap_or_else(|| vec![S::zero(); md]);
                    vec_scale(&bullet, weight)
                }
                ThirdProduct::TwistedCocycle(h) => h.eval(&r.column(i), &r.column(j)),
            };
            for k in 0..md {
                *prec.get_mut(i, j, k) = pv[k].clone();
                *succ.get_mut(i, j, k) = sv[k].clone();
                *extra.get_mut(i, j, k) = tv[k].clone();
            }
        }
    }
    let third_op = match third {
        ThirdProduct::WeightedBullet(op, _) => op,
        ThirdProduct::TwistedCocycle(_) => OpSymbol::vee(),
    };
    FinAlgebra::new(
        md,
        super::types::default_names("m", md),
        BTreeMap::from([
            (OpSymbol::prec(), prec),
            (OpSymbol::succ(), succ),
            (third_op, extra),
        ]),
    )
}

/// The tridendriform structure of a relative Rota-Baxter operator:
/// `m ≺ m' = m·R(m')`, `m ≻ m' = R(m)·m'`, `m · m' = λ m•m'`.
pub fn rb_tridendriform<S: Scalar>(
    m: &Bimodule<S>,
    r: &Mat<S>,
    weight: &S,
) -> Result<FinAlgebra<S>, FindimError> {
    if !check_relative_rb(m, r, weight)?.passed() {
        return Err(FindimError::NotRelativeRotaBaxter);
    }
    induced_products(m, r, ThirdProduct::WeightedBullet(OpSymbol::dot(), weight))
}

/// The NS structure of a relative Rota-Baxter operator: as the tridendriform
/// one with `∨ = λ•`.
pub fn rb_ns<S: Scalar>(
    m: &Bimodule<S>,
    r: &Mat<S>,
    weight: &S,
) -> Result<FinAlgebra<S>, FindimError> {
    if !check_relative_rb(m, r, weight)?.passed() {
        return Err(FindimError::NotRelativeRotaBaxter);
    }
    induced_products(m, r, ThirdProduct::WeightedBullet(OpSymbol::vee(), weight))
}

/// For a weight-zero relative Rota-Baxter operator `R: M → A`, builds the
/// algebra `(M, ⋆)` with `m ⋆ m' = R(m)·m' + m·R(m')` and the actions
/// `m ▷ a = R(m)a − R(m·a)`, `a ◁ m = aR(m) − R(a·m)`, and checks that
/// `(A, ▷, ◁)` is an `(M, ⋆)`-bimodule.
pub fn nijrb_bimodule<S: Scalar>(
    m: &Bimodule<S>,
    r: &Mat<S>,
    cat: &CategoryPresentation<S>,
) -> Result<(Bimodule<S>, CheckReport<S>), FindimError> {
    if !check_relative_rb(m, r, &S::zero())?.passed() {
        return Err(FindimError::NotRelativeRotaBaxter);
    }
    let d = m.base().dim();
    let md = m.mdim();
    let tensor = m.base().require_product(m.op())?;

    let mut star = StructureTensor::zeros(md);
    for i in 0..md {
        for j in 0..md {
            let mi = basis_vec::<S>(md, i);
            let mj = basis_vec::<S>(md, j);
            let value = vec_add(&m.act_left(&r.column(i), &mj), &m.act_right(&mi, &r.column(j)));
            for k in 0..md {
                *star.get_mut(i, j, k) = value[k].clone();
            }
        }
    }
    let m_star = FinAlgebra::single(OpSymbol::star(), star);

    // Actions of (M, ⋆) on A.
    let mut left = Vec::with_capacity(md);
    let mut right = Vec::with_capacity(md);
    for i in 0..md {
        let mi = basis_vec::<S>(md, i);
        let ri = r.column(i);
        let mut l = Mat::zero(d, d);
        let mut rt = Mat::zero(d, d);
        for j in 0..d {
            let a = basis_vec::<S>(d, j);
            // m ▷ a = R(m)a − R(m·a)
            let lv = vec_sub(&tensor.mul(&ri, &a), &r.mul_vec(&m.act_right(&mi, &a)));
            // a ◁ m = aR(m) − R(a·m)
            let rv = vec_sub(&tensor.mul(&a, &ri), &r.mul_vec(&m.act_left(&a, &mi)));
            for k in 0..d {
                *l.get_mut(k, j) = lv[k].clone();
                *rt.get_mut(k, j) = rv[k].clone();
            }
        }
        left.push(l);
        right.push(rt);
    }
    let bimodule = Bimodule::new(m_star, OpSymbol::star(), d, left, right, None)?;
    let report = is_bimodule(&bimodule, cat)?;
    Ok((bimodule, report))
}

/// Verifies the `H`-twisted Rota-Baxter identity for `T: M → A`:
/// `T(m)T(m') = T(T(m)·m' + m·T(m') + H(T(m) ⊗ T(m')))`.
/// Requires `H` to be a valid 2-cocycle for the category.
pub fn check_twisted_rb<S: Scalar>(
    m: &Bimodule<S>,
    t: &Mat<S>,
    h: &Cocycle<S>,
    cat: &CategoryPresentation<S>,
) -> Result<CheckReport<S>, FindimError> {
    require_operator_shape(m, t)?;
    if !is_2cocycle(m, h, cat)?.passed() {
        return Err(FindimError::InvalidCocycle);
    }
    let tensor = m.base().require_product(m.op())?;
    let md = m.mdim();
    Ok(pair_report(md, md, |i, j| {
        let mi = basis_vec::<S>(md, i);
        let mj = basis_vec::<S>(md, j);
        let ti = t.column(i);
        let tj = t.column(j);
        let lhs = tensor.mul(&ti, &tj);
        let inner = vec_add(
            &vec_add(&m.act_left(&ti, &mj), &m.act_right(&mi, &tj)),
            &h.eval(&ti, &tj),
        );
        vec_sub(&lhs, &t.mul_vec(&inner))
    }))
}

/// Verifies the Reynolds identity `β(a)β(a') = β(β(a)a' + aβ(a') − β(a)β(a'))`,
/// i.e. the `(−μ)`-twisted Rota-Baxter identity on the standard self-bimodule.
pub fn check_reynolds<S: Scalar>(
    alg: &FinAlgebra<S>,
    op: &OpSymbol,
    beta: &Mat<S>,
    cat: &CategoryPresentation<S>,
) -> Result<CheckReport<S>, FindimError> {
    require_endomorphism(alg, beta)?;
    let m = Bimodule::standard_self(alg, op)?.forget_product();
    let h = Cocycle::neg_mu(alg, op)?;
    check_twisted_rb(&m, beta, &h, cat)
}

/// Checks that the graph `{(R(m), m)}` is closed under the product of the
/// ambient algebra on `A ⊕ M`, and returns `(M, ⋆)` via the isomorphism
/// `m ↦ (R(m), m)` together with its category membership report.
pub fn graph_subalgebra<S: Scalar>(
    ambient: &FinAlgebra<S>,
    op: &OpSymbol,
    r: &Mat<S>,
    adim: usize,
    mdim: usize,
    cat: &CategoryPresentation<S>,
) -> Result<(FinAlgebra<S>, CheckReport<S>), FindimError> {
    if ambient.dim() != adim + mdim {
        return Err(FindimError::Shape(format!(
            "ambient dimension {} is not {adim} + {mdim}",
            ambient.dim()
        )));
    }
    if r.rows() != adim || r.cols() != mdim {
        return Err(FindimError::Shape(format!(
            "operator is {}×{}, expected {adim}×{mdim}",
            r.rows(),
            r.cols()
        )));
    }
    let tensor = ambient.require_product(op)?;
    let total = adim + mdim;
    let graph_gen = |i: usize| -> Vec<S> {
        let mut g = vec![S::zero(); total];
        for k in 0..adim {
            g[k] = r.get(k, i).clone();
        }
        g[adim + i] = S::one();
        g
    };
    let mut star = StructureTensor::zeros(mdim);
    for i in 0..mdim {
        for j in 0..mdim {
            let p = tensor.mul(&graph_gen(i), &graph_gen(j));
            let (a_part, m_part) = p.split_at(adim);
            let residue = vec_sub(a_part, &r.mul_vec(m_part));
            if !vec_is_zero(&residue) {
                return Err(FindimError::GraphNotClosed { left: i, right: j });
            }
            for k in 0..mdim {
                *star.get_mut(i, j, k) = m_part[k].clone();
            }
        }
    }
    let m_star = FinAlgebra::single(OpSymbol::star(), star);
    let report = check_in_category(&m_star, &OpSymbol::star(), cat)?;
    Ok((m_star, report))
}

/// The NS structure of an `H`-twisted Rota-Baxter operator:
/// `m ≺ m' = m·T(m')`, `m ≻ m' = T(m)·m'`, `m ∨ m' = H(T(m) ⊗ T(m'))`.
pub fn trb_ns<S: Scalar>(
    m: &Bimodule<S>,
    t: &Mat<S>,
    h: &Cocycle<S>,
    cat: &CategoryPresentation<S>,
) -> Result<FinAlgebra<S>, FindimError> {
    if !check_twisted_rb(m, t, h, cat)?.passed() {
        return Err(FindimError::NotTwistedRotaBaxter);
    }
    induced_products(m, t, ThirdProduct::TwistedCocycle(h))
}

/// The factorization of an NS-algebra through a twisted Rota-Baxter operator.
#[derive(Clone, Debug)]
pub struct NsFactorization<S> {
    /// `(A, ⋆)` with `⋆ = ≺ + ≻ + ∨`, stored under `star`.
    pub star_algebra: FinAlgebra<S>,
    /// The `(A, ⋆)`-bimodule `(A, ≻, ≺)`.
    pub bimodule: Bimodule<S>,
    /// The 2-cocycle `H = ∨`.
    pub cocycle: Cocycle<S>,
    /// The twisted Rota-Baxter operator `T = Id`.
    pub operator: Mat<S>,
    /// Combined report: bimodule, cocycle and twisted identity checks.
    pub report: CheckReport<S>,
}

/// Factors an NS-algebra `(A, ≺, ≻, ∨)` as `Id: (A, ≻, ≺) → (A, ⋆)` twisted
/// by the 2-cocycle `H = ∨`. Requires the NS double to lie in the category.
pub fn ns_to_twisted_rb<S: Scalar>(
    ns_alg: &FinAlgebra<S>,
    cat: &CategoryPresentation<S>,
) -> Result<NsFactorization<S>, FindimError> {
    let prec = ns_alg.require_product(&OpSymbol::prec())?.clone();
    let succ = ns_alg.require_product(&OpSymbol::succ())?.clone();
    let vee = ns_alg.require_product(&OpSymbol::vee())?.clone();
    let doubled = super::constructions::double(ns_alg, &SplitScheme::ns())?;
    if !check_in_category(&doubled, &OpSymbol::boxtimes(), cat)?.passed() {
        return Err(FindimError::NotNsAlgebra);
    }
    let d = ns_alg.dim();
    let star = prec.add(&succ).add(&vee);
    let star_algebra = FinAlgebra::single(OpSymbol::star(), star)
        .with_basis_names(ns_alg.basis_names().to_vec());

    // l(a) x = a ≻ x, r(a) x = x ≺ a.
    let mut left = Vec::with_capacity(d);
    let mut right = Vec::with_capacity(d);
    for i in 0..d {
        let mut l = Mat::zero(d, d);
        let mut r = Mat::zero(d, d);
        for j in 0..d {
            for k in 0..d {
                *l.get_mut(k, j) = succ.get(i, j, k).clone();
                *r.get_mut(k, j) = prec.get(j, i, k).clone();
            }
        }
        left.push(l);
        right.push(r);
    }
    let bimodule = Bimodule::new(star_algebra.clone(), OpSymbol::star(), d, left, right, None)?;

    let mut values = Vec::with_capacity(d * d);
    for i in 0..d {
        for j in 0..d {
            values.push(vee.basis_product(i, j));
        }
    }
    let cocycle = Cocycle::new(d, d, values)?;
    let operator = Mat::identity(d);

    let report = is_bimodule(&bimodule, cat)?
        .merge(is_2cocycle(&bimodule, &cocycle, cat)?)
        .merge(check_twisted_rb(&bimodule, &operator, &cocycle, cat)?);
    Ok(NsFactorization {
        star_algebra,
        bimodule,
        cocycle,
        operator,
        report,
    })
}

/// General construction of an NS structure on a bimodule `M` from linear
/// maps `β: M → A` and `α: M ⊗ M → M`:
/// `m ≻ m' = β(m)·m'`, `m ≺ m' = m·β(m')`, `m ∨ m' = α(m ⊗ m')`.
///
/// Checks the two hypotheses — `β` is an algebra homomorphism
/// `(M, ⋆) → (A, μ)` and `(M, ⋆)` lies in the category — and, when both
/// hold, also reports membership of the NS double (which is then guaranteed).
pub fn general_ns<S: Scalar>(
    m: &Bimodule<S>,
    beta: &Mat<S>,
    alpha: &StructureTensor<S>,
    cat: &CategoryPresentation<S>,
) -> Result<(FinAlgebra<S>, CheckReport<S>), FindimError> {
    require_operator_shape(m, beta)?;
    if alpha.dim() != m.mdim() {
        return Err(FindimError::Shape(format!(
            "alpha tensor dimension {} differs from module dimension {}",
            alpha.dim(),
            m.mdim()
        )));
    }
    if !is_bimodule(m, cat)?.passed() {
        return Err(FindimError::HypothesisFailed {
            hypothesis: "M is not an A-bimodule for the category".into(),
        });
    }
    let md = m.mdim();
    let mut prec = StructureTensor::zeros(md);
    let mut succ = StructureTensor::zeros(md);
    for i in 0..md {
        for j in 0..md {
            let mi = basis_vec::<S>(md, i);
            let mj = basis_vec::<S>(md, j);
            let pv = m.act_right(&mi, &beta.column(j));
            let sv = m.act_left(&beta.column(i), &mj);
            for k in 0..md {
                *prec.get_mut(i, j, k) = pv[k].clone();
                *succ.get_mut(i, j, k) = sv[k].clone();
            }
        }
    }
    let star = prec.add(&succ).add(alpha);

    // Hypothesis: β(m ⋆ m') = β(m)β(m').
    let base_tensor = m.base().require_product(m.op())?;
    for i in 0..md {
        for j in 0..md {
            let lhs = beta.mul_vec(&star.basis_product(i, j));
            let rhs = base_tensor.mul(&beta.column(i), &beta.column(j));
            if !vec_is_zero(&vec_sub(&lhs, &rhs)) {
                return Err(FindimError::HypothesisFailed {
                    hypothesis: format!(
                        "beta is not an algebra homomorphism (M, star) → (A, mu): \
                         fails at basis pair ({i}, {j})"
                    ),
                });
            }
        }
    }

    // Hypothesis: (M, ⋆) lies in the category.
    let m_star = FinAlgebra::single(OpSymbol::star(), star);
    if !check_in_category(&m_star, &OpSymbol::star(), cat)?.passed() {
        return Err(FindimError::HypothesisFailed {
            hypothesis: "(M, star) does not satisfy the category relations".into(),
        });
    }

    let ns_alg = FinAlgebra::new(
        md,
        super::types::default_names("m", md),
        BTreeMap::from([
            (OpSymbol::prec(), prec),
            (OpSymbol::succ(), succ),
            (OpSymbol::vee(), alpha.clone()),
        ]),
    )?;
    let doubled = super::constructions::double(&ns_alg, &SplitScheme::ns())?;
    let report = check_in_category(&doubled, &OpSymbol::boxtimes(), cat)?;
    Ok((ns_alg, report))
}
