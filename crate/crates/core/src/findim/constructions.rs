//! Membership checks and the extension/doubling constructions.

use std::collections::BTreeMap;

use super::linalg::{basis_vec, for_each_tuple, vec_is_zero, vec_scale, StructureTensor};
use super::types::{default_names, Bimodule, CheckReport, Cocycle, FinAlgebra, Violation};
use super::FindimError;
use crate::scalar::Scalar;
use crate::split::SplitScheme;
use crate::terms::{evaluate_monomial, CategoryPresentation, OpSymbol, Relation};

/// Evaluates the relations on every basis tuple of `alg`, resolving each
/// operation symbol through `bind`. Reports every nonzero residue.
pub fn check_relations<'a, S: Scalar + 'a>(
    alg: &FinAlgebra<S>,
    relations: impl IntoIterator<Item = &'a Relation<S>>,
    bind: impl Fn(&OpSymbol) -> OpSymbol,
) -> Result<CheckReport<S>, FindimError> {
    let d = alg.dim();
    let mut report = CheckReport::default();
    for (ri, rel) in relations.into_iter().enumerate() {
        // Resolve all products up front so a missing one errors out even when
        // d = 0 or the relation is zero.
        let mut tensors: BTreeMap<OpSymbol, &StructureTensor<S>> = BTreeMap::new();
        for (_, m) in rel.terms() {
            for op in m.ops_used() {
                let target = bind(&op);
                tensors.insert(op, alg.require_product(&target)?);
            }
        }
        let n = rel.arity();
        let mut failure: Option<FindimError> = None;
        for_each_tuple(d, n, |tuple| {
            if failure.is_some() {
                return;
            }
            let args: Vec<Vec<S>> = tuple.iter().map(|&i| basis_vec(d, i)).collect();
            let mut residue = vec![S::zero(); d];
            for (c, m) in rel.terms() {
                let value = evaluate_monomial(m, &args, &mut |op, x: &Vec<S>, y: &Vec<S>| {
                    tensors.get(op).map(|t| t.mul(x, y))
                });
                match value {
                    Ok(v) => {
                        let scaled = vec_scale(&v, c);
                        for (r, s) in residue.iter_mut().zip(scaled) {
                            *r = r.clone() + s;
                        }
                    }
                    Err(e) => {
                        failure = Some(e.into());
                        return;
                    }
                }
            }
            if !vec_is_zero(&residue) {
                report.violations.push(Violation {
                    relation: ri,
                    tuple: tuple.to_vec(),
                    residue,
                });
            }
        });
        if let Some(e) = failure {
            return Err(e);
        }
    }
    Ok(report)
}

/// Does `(alg, op)` satisfy the presentation? Every relation is evaluated on
/// all basis tuples; each nonzero result is reported with its tuple.
pub fn check_in_category<S: Scalar>(
    alg: &FinAlgebra<S>,
    op: &OpSymbol,
    cat: &CategoryPresentation<S>,
) -> Result<CheckReport<S>, FindimError> {
    alg.require_product(op)?;
    let source_op = cat.op().clone();
    let op = op.clone();
    check_relations(alg, cat.relations(), move |sym| {
        if *sym == source_op {
            op.clone()
        } else {
            sym.clone()
        }
    })
}

/// Evaluates relations over the split alphabet directly on an algebra that
/// carries the alphabet products under the same names.
pub fn check_split_relations<'a, S: Scalar + 'a>(
    alg: &FinAlgebra<S>,
    relations: impl IntoIterator<Item = &'a Relation<S>>,
) -> Result<CheckReport<S>, FindimError> {
    check_relations(alg, relations, OpSymbol::clone)
}

fn extension_names<S: Scalar>(m: &Bimodule<S>) -> Vec<String> {
    let mut names = m.base().basis_names().to_vec();
    names.extend(default_names("m", m.mdim()));
    names
}

fn extension_tensor<S: Scalar>(
    m: &Bimodule<S>,
    mod_product: Option<&StructureTensor<S>>,
    cocycle: Option<&Cocycle<S>>,
) -> Result<StructureTensor<S>, FindimError> {
    let d = m.base().dim();
    let md = m.mdim();
    let base = m.base().require_product(m.op())?;
    let mut t = StructureTensor::zeros(d + md);
    for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                *t.get_mut(i, j, k) = base.get(i, j, k).clone();
            }
            if let Some(h) = cocycle {
                for k in 0..md {
                    *t.get_mut(i, j, d + k) = h.value(i, j)[k].clone();
                }
            }
        }
        // a · m' lands in the module component.
        for j in 0..md {
            for k in 0..md {
                *t.get_mut(i, d + j, d + k) = m.left()[i].get(k, j).clone();
            }
        }
        // m · a' lands in the module component.
        for j in 0..md {
            for k in 0..md {
                *t.get_mut(d + j, i, d + k) = m.right()[i].get(k, j).clone();
            }
        }
    }
    if let Some(p) = mod_product {
        for i in 0..md {
            for j in 0..md {
                for k in 0..md {
                    *t.get_mut(d + i, d + j, d + k) = p.get(i, j, k).clone();
                }
            }
        }
    }
    Ok(t)
}

/// Trivial extension `A ⊕₀ M`: product `(a,m)(a',m') = (aa', a·m' + m·a')`.
pub fn trivial_extension<S: Scalar>(m: &Bimodule<S>) -> Result<FinAlgebra<S>, FindimError> {
    let tensor = extension_tensor(m, None, None)?;
    Ok(FinAlgebra::single(m.op().clone(), tensor).with_basis_names(extension_names(m)))
}

/// Semidirect sum `A ⋈ M`: the trivial extension plus `m • m'` in the module
/// component.
pub fn semidirect_sum<S: Scalar>(m: &Bimodule<S>) -> Result<FinAlgebra<S>, FindimError> {
    let product = m
        .module_product()
        .ok_or(FindimError::MissingModuleProduct)?
        .clone();
    let tensor = extension_tensor(m, Some(&product), None)?;
    Ok(FinAlgebra::single(m.op().clone(), tensor).with_basis_names(extension_names(m)))
}

/// Cocycle extension `A ⊕_H M`: the trivial extension plus `H(a ⊗ a')` in
/// the module component.
pub fn cocycle_extension<S: Scalar>(
    m: &Bimodule<S>,
    h: &Cocycle<S>,
) -> Result<FinAlgebra<S>, FindimError> {
    if h.adim() != m.base().dim() || h.mdim() != m.mdim() {
        return Err(FindimError::Shape(format!(
            "cocycle is {}→{} on a bimodule of dimensions {}→{}",
            h.adim(),
            h.mdim(),
            m.base().dim(),
            m.mdim()
        )));
    }
    let tensor = extension_tensor(m, None, Some(h))?;
    Ok(FinAlgebra::single(m.op().clone(), tensor).with_basis_names(extension_names(m)))
}

/// Is `M` an `A`-bimodule? Checks membership of the trivial extension.
pub fn is_bimodule<S: Scalar>(
    m: &Bimodule<S>,
    cat: &CategoryPresentation<S>,
) -> Result<CheckReport<S>, FindimError> {
    let ext = trivial_extension(m)?;
    check_in_category(&ext, m.op(), cat)
}

/// Is `(M, •)` an `A`-bimodule algebra? Checks membership of the semidirect
/// sum.
pub fn is_bimodule_algebra<S: Scalar>(
    m: &Bimodule<S>,
    cat: &CategoryPresentation<S>,
) -> Result<CheckReport<S>, FindimError> {
    let ext = semidirect_sum(m)?;
    check_in_category(&ext, m.op(), cat)
}

/// Is `H` a 2-cocycle? Checks membership of the cocycle extension.
pub fn is_2cocycle<S: Scalar>(
    m: &Bimodule<S>,
    h: &Cocycle<S>,
    cat: &CategoryPresentation<S>,
) -> Result<CheckReport<S>, FindimError> {
    let ext = cocycle_extension(m, h)?;
    check_in_category(&ext, m.op(), cat)
}

/// The doubled algebra `A ⊕ A` with the scheme's product `⊠`, stored under
/// the symbol [`OpSymbol::boxtimes`]. The input must carry every alphabet
/// product of the scheme.
pub fn double<S: Scalar>(
    alg: &FinAlgebra<S>,
    scheme: &SplitScheme,
) -> Result<FinAlgebra<S>, FindimError> {
    let d = alg.dim();
    let mut tensors: BTreeMap<&OpSymbol, &StructureTensor<S>> = BTreeMap::new();
    for op in scheme.alphabet() {
        tensors.insert(op, alg.require_product(op)?);
    }
    let mut t = StructureTensor::zeros(2 * d);
    for dl in 0..2 {
        for dr in 0..2 {
            for (op, out_deg) in scheme.rules(dl, dr) {
                let tensor = tensors[op];
                for i in 0..d {
                    for j in 0..d {
                        for k in 0..d {
                            let c = tensor.get(i, j, k);
                            if !c.is_zero() {
                                let slot: &mut S =
                                    t.get_mut(dl * d + i, dr * d + j, out_deg * d + k);
                                *slot = slot.clone() + c.clone();
                            }
                        }
                    }
                }
            }
        }
    }
    let mut names: Vec<String> = alg.basis_names().iter().map(|n| format!("{n}_0")).collect();
    names.extend(alg.basis_names().iter().map(|n| format!("{n}_1")));
    Ok(FinAlgebra::single(OpSymbol::boxtimes(), t).with_basis_names(names))
}
