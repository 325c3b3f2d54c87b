//! Brute-force cross-verifiers.
//!
//! [`verify_pairsij`] checks the iterated-power identity of a Nijenhuis
//! operator, `Nⁱ(a)Nʲ(b) = Nʲ(Nⁱ(a)b) + Nⁱ(aNʲ(b)) − N^{i+j}(ab)`, and
//! [`verify_xstar`] checks that every parenthesized monomial evaluated with
//! the deformed product expands into operator-decorated evaluations of the
//! original product: `X_⋆ = Σ_{i+j=n−1} (−N)ⁱ(X⟨j⟩)`, where `X⟨j⟩` sums the
//! evaluations with `N` applied to exactly `j` factors. [`cross_check_split`]
//! compares the symbolic derivation of NS relations with concrete doubling.

use thiserror::Error;

use crate::findim::linalg::{basis_vec, for_each_tuple, vec_is_zero, vec_sub};
use crate::findim::{
    check_nijenhuis, check_split_relations, check_in_category, double, nijenhuis_deformed,
    CheckReport, FinAlgebra, FindimError, Mat, Violation,
};
use crate::scalar::Scalar;
use crate::split::{derive_split_relations, SplitError, SplitScheme};
use crate::terms::{evaluate_monomial, CategoryPresentation, Monomial, OpSymbol};

/// Errors raised by the oracle module.
#[derive(Debug, Error)]
pub enum OracleError {
    #[error("operator fails the Nijenhuis identity; the expansion only holds for Nijenhuis operators")]
    NotNijenhuis,
    #[error("maximum monomial length {0} outside the supported range 2..=5")]
    LengthOutOfRange(usize),
    #[error("maximum power {0} is too small; need at least 2")]
    MaxPowTooSmall(usize),
    #[error(transparent)]
    Findim(#[from] FindimError),
    #[error(transparent)]
    Split(#[from] SplitError),
}

/// A planar binary tree of length `n` with leaves labeled `1..=n` in order,
/// all internal nodes carrying `mu`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ParenTree(Monomial);

impl ParenTree {
    /// All parenthesizings of a monomial of length `n`; there are
    /// Catalan(n−1) of them.
    pub fn enumerate(n: usize) -> Vec<ParenTree> {
        assert!(n >= 1, "length must be positive");
        fn build(lo: usize, hi: usize) -> Vec<Monomial> {
            if lo == hi {
                return vec![Monomial::leaf(lo)];
            }
            let mut out = Vec::new();
            for mid in lo..hi {
                for l in build(lo, mid) {
                    for r in build(mid + 1, hi) {
                        out.push(Monomial::node(OpSymbol::mu(), l.clone(), r));
                    }
                }
            }
            out
        }
        build(1, n).into_iter().map(ParenTree).collect()
    }

    pub fn monomial(&self) -> &Monomial {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.arity()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

/// Verifies `Nⁱ(a)Nʲ(b) = Nʲ(Nⁱ(a)b) + Nⁱ(aNʲ(b)) − N^{i+j}(ab)` for all
/// `i, j ≥ 1` with `i + j ≤ max_pow` and all basis pairs. Witness tuples are
/// `[i, j, a, b]`.
pub fn verify_pairsij<S: Scalar>(
    alg: &FinAlgebra<S>,
    op: &OpSymbol,
    n: &Mat<S>,
    max_pow: usize,
) -> Result<CheckReport<S>, OracleError> {
    if max_pow < 2 {
        return Err(OracleError::MaxPowTooSmall(max_pow));
    }
    if !check_nijenhuis(alg, op, n)?.passed() {
        return Err(OracleError::NotNijenhuis);
    }
    let tensor = alg.require_product(op)?;
    let d = alg.dim();
    let powers: Vec<Mat<S>> = (0..=max_pow).map(|k| n.pow(k)).collect();
    let mut report = CheckReport::default();
    for i in 1..max_pow {
        for j in 1..=(max_pow - i) {
            for a in 0..d {
                for b in 0..d {
                    let ea = basis_vec::<S>(d, a);
                    let eb = basis_vec::<S>(d, b);
                    let nia = powers[i].mul_vec(&ea);
                    let njb = powers[j].mul_vec(&eb);
                    let lhs = tensor.mul(&nia, &njb);
                    let rhs_1 = powers[j].mul_vec(&tensor.mul(&nia, &eb));
                    let rhs_2 = powers[i].mul_vec(&tensor.mul(&ea, &njb));
                    let rhs_3 = powers[i + j].mul_vec(&tensor.basis_product(a, b));
                    let residue = vec_sub(&vec_sub(&lhs, &rhs_1), &vec_sub(&rhs_2, &rhs_3));
                    if !vec_is_zero(&residue) {
                        report.violations.push(Violation {
                            relation: 0,
                            tuple: vec![i, j, a, b],
                            residue,
                        });
                    }
                }
            }
        }
    }
    Ok(report)
}

/// Report of [`verify_xstar`]: the expansion identity and the companion
/// identity `X⟨n⟩ = N(X_⋆)`. The `relation` field of a violation is the
/// index of the parenthesized tree in enumeration order.
#[derive(Clone, Debug)]
pub struct XStarReport<S> {
    pub expansion: CheckReport<S>,
    pub top_power: CheckReport<S>,
    pub trees_checked: usize,
}

impl<S> Default for XStarReport<S> {
    fn default() -> Self {
        XStarReport {
            expansion: CheckReport::default(),
            top_power: CheckReport::default(),
            trees_checked: 0,
        }
    }
}

/// Violations of the expansion identity and of the top-power identity for
/// one tree.
type TreeViolations<S> = (Vec<Violation<S>>, Vec<Violation<S>>);

impl<S: Scalar> XStarReport<S> {
    pub fn passed(&self) -> bool {
        self.expansion.passed() && self.top_power.passed()
    }
}

/// Evaluates every decorated variant of `tree` at once: entry `mask` of the
/// result is the evaluation with `N` applied to exactly the leaves selected
/// by `mask` (bits in leaf order). Subtree values are shared between masks.
fn decorated_evaluations<S: Scalar>(
    tree: &Monomial,
    base: &[Vec<S>],
    hit: &[Vec<S>],
    tensor: &crate::findim::StructureTensor<S>,
) -> (usize, Vec<Vec<S>>) {
    match tree {
        Monomial::Leaf(i) => (1, vec![base[*i - 1].clone(), hit[*i - 1].clone()]),
        Monomial::Node(_, l, r) => {
            let (ln, lv) = decorated_evaluations(l, base, hit, tensor);
            let (rn, rv) = decorated_evaluations(r, base, hit, tensor);
            let mut out = Vec::with_capacity(1 << (ln + rn));
            for mask in 0u32..(1 << (ln + rn)) {
                let lmask = (mask & ((1 << ln) - 1)) as usize;
                let rmask = (mask >> ln) as usize;
                out.push(tensor.mul(&lv[lmask], &rv[rmask]));
            }
            (ln + rn, out)
        }
    }
}

fn xstar_tree_violations<S: Scalar>(
    alg: &FinAlgebra<S>,
    op: &OpSymbol,
    n_mat: &Mat<S>,
    star: &FinAlgebra<S>,
    tree_index: usize,
    tree: &Monomial,
) -> Result<TreeViolations<S>, FindimError> {
    let d = alg.dim();
    let n = tree.arity();
    let tensor = alg.require_product(op)?;
    let star_tensor = star.require_product(&OpSymbol::star())?;
    // (−N)^i for i = 0..n, and the columns N e_k.
    let neg_n = n_mat.neg();
    let neg_pows: Vec<Mat<S>> = (0..=n).map(|k| neg_n.pow(k)).collect();
    let n_columns: Vec<Vec<S>> = (0..d).map(|k| n_mat.column(k)).collect();

    let mut expansion = Vec::new();
    let mut top_power = Vec::new();
    let mut failure: Option<FindimError> = None;
    for_each_tuple(d, n, |tuple| {
        if failure.is_some() {
            return;
        }
        let base_args: Vec<Vec<S>> = tuple.iter().map(|&i| basis_vec(d, i)).collect();
        let hit_args: Vec<Vec<S>> = tuple.iter().map(|&i| n_columns[i].clone()).collect();

        // X_⋆: evaluate with the deformed product.
        let x_star = match evaluate_monomial(tree, &base_args, &mut |_, x: &Vec<S>, y: &Vec<S>| {
            Some(star_tensor.mul(x, y))
        }) {
            Ok(v) => v,
            Err(e) => {
                failure = Some(e.into());
                return;
            }
        };

        // X⟨j⟩: enumerate all leaf subsets, bucketed by their size.
        let (_, by_mask) = decorated_evaluations(tree, &base_args, &hit_args, tensor);
        let mut decorated = vec![vec![S::zero(); d]; n + 1];
        for (mask, value) in by_mask.into_iter().enumerate() {
            let j = mask.count_ones() as usize;
            for (acc, v) in decorated[j].iter_mut().zip(value) {
                *acc = acc.clone() + v;
            }
        }

        // Σ_{i+j=n−1} (−N)^i (X⟨j⟩)
        let mut rhs = vec![S::zero(); d];
        for i in 0..n {
            let j = n - 1 - i;
            let term = neg_pows[i].mul_vec(&decorated[j]);
            for (acc, v) in rhs.iter_mut().zip(term) {
                *acc = acc.clone() + v;
            }
        }
        let residue = vec_sub(&x_star, &rhs);
        if !vec_is_zero(&residue) {
            expansion.push(Violation {
                relation: tree_index,
                tuple: tuple.to_vec(),
                residue,
            });
        }

        // X⟨n⟩ = N(X_⋆)
        let residue = vec_sub(&decorated[n], &n_mat.mul_vec(&x_star));
        if !vec_is_zero(&residue) {
            top_power.push(Violation {
                relation: tree_index,
                tuple: tuple.to_vec(),
                residue,
            });
        }
    });
    if let Some(e) = failure {
        return Err(e);
    }
    Ok((expansion, top_power))
}

/// Verifies the deformed-product expansion for every parenthesized monomial
/// of length `2..=max_len` on every basis tuple. `jobs` partitions the trees
/// across that many worker threads; violations are reported in a fixed order
/// either way.
pub fn verify_xstar<S: Scalar + Send + Sync>(
    alg: &FinAlgebra<S>,
    op: &OpSymbol,
    n_mat: &Mat<S>,
    max_len: usize,
    jobs: usize,
) -> Result<XStarReport<S>, OracleError> {
    if !(2..=5).contains(&max_len) {
        return Err(OracleError::LengthOutOfRange(max_len));
    }
    if !check_nijenhuis(alg, op, n_mat)?.passed() {
        return Err(OracleError::NotNijenhuis);
    }
    let star = nijenhuis_deformed(alg, op, n_mat)?;

    let mut trees: Vec<(usize, Monomial)> = Vec::new();
    for n in 2..=max_len {
        for tree in ParenTree::enumerate(n) {
            trees.push((trees.len(), tree.monomial().clone()));
        }
    }

    let jobs = jobs.max(1);
    let results: Vec<Result<TreeViolations<S>, FindimError>> = if jobs == 1 {
        trees
            .iter()
            .map(|(idx, tree)| xstar_tree_violations(alg, op, n_mat, &star, *idx, tree))
            .collect()
    } else {
        std::thread::scope(|scope| {
            let handles: Vec<_> = (0..jobs)
                .map(|worker| {
                    let trees = &trees;
                    let star = &star;
                    scope.spawn(move || {
                        trees
                            .iter()
                            .skip(worker)
                            .step_by(jobs)
                            .map(|(idx, tree)| {
                                (*idx, xstar_tree_violations(alg, op, n_mat, star, *idx, tree))
                            })
                            .collect::<Vec<_>>()
                    })
                })
                .collect();
            let mut indexed: Vec<(usize, _)> = handles
                .into_iter()
                .flat_map(|h| h.join().expect("oracle worker panicked"))
                .collect();
            indexed.sort_by_key(|(idx, _)| *idx);
            indexed.into_iter().map(|(_, r)| r).collect()
        })
    };

    let mut report = XStarReport {
        trees_checked: trees.len(),
        ..XStarReport::default()
    };
    for result in results {
        let (expansion, top_power) = result?;
        report.expansion.violations.extend(expansion);
        report.top_power.violations.extend(top_power);
    }
    Ok(report)
}

/// Agreement report of the two independent NS verdicts.
#[derive(Clone, Debug)]
pub struct CrossCheckReport<S> {
    /// Relations from the symbolic derivation evaluated directly on the
    /// candidate NS-algebra.
    pub symbolic: CheckReport<S>,
    /// Category membership of the concrete double.
    pub doubled: CheckReport<S>,
}

impl<S: Scalar> CrossCheckReport<S> {
    /// Both detectors fire together or not at all.
    pub fn agree(&self) -> bool {
        self.symbolic.passed() == self.doubled.passed()
    }

    pub fn both_passed(&self) -> bool {
        self.symbolic.passed() && self.doubled.passed()
    }
}

/// Two independent verdicts on whether `(A, ≺, ≻, ∨)` is an NS-algebra for
/// the category: evaluate the symbolically derived relation system on the
/// algebra, and check the concrete double for category membership.
/// Disagreement indicates an internal inconsistency between the engines.
pub fn cross_check_split<S: Scalar>(
    cat: &CategoryPresentation<S>,
    ns_alg: &FinAlgebra<S>,
) -> Result<CrossCheckReport<S>, OracleError> {
    let derived = derive_split_relations(cat, &SplitScheme::ns())?;
    let symbolic = check_split_relations(ns_alg, derived.all_relations())?;
    let doubled_alg = double(ns_alg, &SplitScheme::ns())?;
    let doubled = check_in_category(&doubled_alg, &OpSymbol::boxtimes(), cat)?;
    Ok(CrossCheckReport { symbolic, doubled })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rat;

    #[test]
    fn catalan_counts() {
        let expected = [1usize, 1, 2, 5, 14, 42, 132];
        for (n, &count) in (1..=7).zip(expected.iter()) {
            assert_eq!(ParenTree::enumerate(n).len(), count, "length {n}");
        }
    }

    #[test]
    fn trees_have_identity_leaf_order() {
        for tree in ParenTree::enumerate(5) {
            assert_eq!(tree.monomial().leaf_labels(), vec![1, 2, 3, 4, 5]);
            tree.monomial().validate().unwrap();
        }
    }

    #[test]
    fn bounds_are_enforced() {
        let alg = crate::corpus::diagonal_2d::<Rat>();
        let id = Mat::identity(2);
        assert!(matches!(
            verify_xstar(&alg, &OpSymbol::mu(), &id, 1, 1),
            Err(OracleError::LengthOutOfRange(1))
        ));
        assert!(matches!(
            verify_xstar(&alg, &OpSymbol::mu(), &id, 6, 1),
            Err(OracleError::LengthOutOfRange(6))
        ));
        assert!(matches!(
            verify_pairsij(&alg, &OpSymbol::mu(), &id, 1),
            Err(OracleError::MaxPowTooSmall(1))
        ));
    }
}
