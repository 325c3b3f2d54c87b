//! Core data: structure-constant algebras, bimodules, 2-cocycles, tagged
//! linear operators and check reports.

use std::collections::BTreeMap;

use super::linalg::{basis_vec, vec_add, Mat, StructureTensor};
use super::FindimError;
use crate::scalar::Scalar;
use crate::terms::OpSymbol;

/// A finite-dimensional algebra given by one structure-constant tensor per
/// operation symbol.
#[derive(Clone, PartialEq, Debug)]
pub struct FinAlgebra<S> {
    dim: usize,
    basis_names: Vec<String>,
    products: BTreeMap<OpSymbol, StructureTensor<S>>,
}

impl<S: Scalar> FinAlgebra<S> {
    pub fn new(
        dim: usize,
        basis_names: Vec<String>,
        products: BTreeMap<OpSymbol, StructureTensor<S>>,
    ) -> Result<Self, FindimError> {
        if basis_names.len() != dim {
            return Err(FindimError::Shape(format!(
                "{} basis names for dimension {dim}",
                basis_names.len()
            )));
        }
        if products.is_empty() {
            return Err(FindimError::Shape("algebra without products".into()));
        }
        for (op, tensor) in &products {
            if tensor.dim() != dim {
                return Err(FindimError::Shape(format!(
                    "product `{op}` has tensor dimension {} on a {dim}-dimensional algebra",
                    tensor.dim()
                )));
            }
        }
        Ok(FinAlgebra {
            dim,
            basis_names,
            products,
        })
    }

    /// Single-product algebra with auto-generated basis names.
    pub fn single(op: OpSymbol, tensor: StructureTensor<S>) -> Self {
        let dim = tensor.dim();
        FinAlgebra {
            dim,
            basis_names: default_names("e", dim),
            products: BTreeMap::from([(op, tensor)]),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis_names
    }

    pub fn with_basis_names(mut self, names: Vec<String>) -> Self {
        assert_eq!(names.len(), self.dim);
        self.basis_names = names;
        self
    }

    pub fn products(&self) -> &BTreeMap<OpSymbol, StructureTensor<S>> {
        &self.products
    }

    pub fn product(&self, op: &OpSymbol) -> Option<&StructureTensor<S>> {
        self.products.get(op)
    }

    pub fn require_product(&self, op: &OpSymbol) -> Result<&StructureTensor<S>, FindimError> {
        self.products
            .get(op)
            .ok_or_else(|| FindimError::MissingProduct(op.clone()))
    }

    /// Product of two coordinate vectors under the named operation.
    pub fn mul(&self, op: &OpSymbol, x: &[S], y: &[S]) -> Result<Vec<S>, FindimError> {
        Ok(self.require_product(op)?.mul(x, y))
    }

    /// Tensor-for-tensor equality of the product families, ignoring names.
    pub fn products_equal(&self, other: &FinAlgebra<S>) -> bool {
        self.dim == other.dim && self.products == other.products
    }
}

pub(crate) fn default_names(prefix: &str, n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("{prefix}{i}")).collect()
}

/// Left/right actions of an algebra on a module, optionally with a product on
/// the module (making it a candidate bimodule algebra).
///
/// Actions are stored per basis element of the algebra as `m×m` matrices in
/// column convention: `l(e_i) f_j = Σ_k left[i][k][j] f_k`.
#[derive(Clone, PartialEq, Debug)]
pub struct Bimodule<S> {
    base: FinAlgebra<S>,
    op: OpSymbol,
    mdim: usize,
    left: Vec<Mat<S>>,
    right: Vec<Mat<S>>,
    mod_product: Option<StructureTensor<S>>,
}

impl<S: Scalar> Bimodule<S> {
    pub fn new(
        base: FinAlgebra<S>,
        op: OpSymbol,
        mdim: usize,
        left: Vec<Mat<S>>,
        right: Vec<Mat<S>>,
        mod_product: Option<StructureTensor<S>>,
    ) -> Result<Self, FindimError> {
        base.require_product(&op)?;
        let d = base.dim();
        if left.len() != d || right.len() != d {
            return Err(FindimError::Shape(format!(
                "expected {d} action matrices, got {} left and {} right",
                left.len(),
                right.len()
            )));
        }
        for m in left.iter().chain(right.iter()) {
            if m.rows() != mdim || m.cols() != mdim {
                return Err(FindimError::Shape(format!(
                    "action matrix is {}×{}, expected {mdim}×{mdim}",
                    m.rows(),
                    m.cols()
                )));
            }
        }
        if let Some(t) = &mod_product {
            if t.dim() != mdim {
                return Err(FindimError::Shape(format!(
                    "module product tensor dimension {} differs from module dimension {mdim}",
                    t.dim()
                )));
            }
        }
        Ok(Bimodule {
            base,
            op,
            mdim,
            left,
            right,
            mod_product,
        })
    }

    /// The algebra acting on itself by left and right multiplication, with
    /// the module product equal to the algebra product.
    pub fn standard_self(alg: &FinAlgebra<S>, op: &OpSymbol) -> Result<Self, FindimError> {
        let tensor = alg.require_product(op)?.clone();
        let d = alg.dim();
        let mut left = Vec::with_capacity(d);
        let mut right = Vec::with_capacity(d);
        for i in 0..d {
            let mut l = Mat::zero(d, d);
            let mut r = Mat::zero(d, d);
            for j in 0..d {
                for k in 0..d {
                    *l.get_mut(k, j) = tensor.get(i, j, k).clone();
                    *r.get_mut(k, j) = tensor.get(j, i, k).clone();
                }
            }
            left.push(l);
            right.push(r);
        }
        Bimodule::new(alg.clone(), op.clone(), d, left, right, Some(tensor))
    }

    /// Same bimodule with the module product dropped.
    pub fn forget_product(&self) -> Self {
        let mut out = self.clone();
        out.mod_product = None;
        out
    }

    /// Same bimodule with the given module product.
    pub fn with_module_product(&self, t: StructureTensor<S>) -> Result<Self, FindimError> {
        Bimodule::new(
            self.base.clone(),
            self.op.clone(),
            self.mdim,
            self.left.clone(),
            self.right.clone(),
            Some(t),
        )
    }

    pub fn base(&self) -> &FinAlgebra<S> {
        &self.base
    }

    pub fn op(&self) -> &OpSymbol {
        &self.op
    }

    pub fn mdim(&self) -> usize {
        self.mdim
    }

    pub fn left(&self) -> &[Mat<S>] {
        &self.left
    }

    pub fn right(&self) -> &[Mat<S>] {
        &self.right
    }

    pub fn module_product(&self) -> Option<&StructureTensor<S>> {
        self.mod_product.as_ref()
    }

    /// `a · m` for coordinate vectors.
    pub fn act_left(&self, a: &[S], m: &[S]) -> Vec<S> {
        let mut out = vec![S::zero(); self.mdim];
        for (i, c) in a.iter().enumerate() {
            if !c.is_zero() {
                out = vec_add(&out, &self.left[i].mul_vec(m).iter().map(|v| v.clone() * c.clone()).collect::<Vec<_>>());
            }
        }
        out
    }

    /// `m · a` for coordinate vectors.
    pub fn act_right(&self, m: &[S], a: &[S]) -> Vec<S> {
        let mut out = vec![S::zero(); self.mdim];
        for (i, c) in a.iter().enumerate() {
            if !c.is_zero() {
                out = vec_add(&out, &self.right[i].mul_vec(m).iter().map(|v| v.clone() * c.clone()).collect::<Vec<_>>());
            }
        }
        out
    }
}

/// A bilinear map `H: A ⊗ A → M`, stored as the value vectors `H(e_i ⊗ e_j)`.
#[derive(Clone, PartialEq, Debug)]
pub struct Cocycle<S> {
    adim: usize,
    mdim: usize,
    values: Vec<Vec<S>>,
}

impl<S: Scalar> Cocycle<S> {
    pub fn new(adim: usize, mdim: usize, values: Vec<Vec<S>>) -> Result<Self, FindimError> {
        if values.len() != adim * adim || values.iter().any(|v| v.len() != mdim) {
            return Err(FindimError::Shape(format!(
                "cocycle values must be a {adim}×{adim} array of {mdim}-vectors"
            )));
        }
        Ok(Cocycle { adim, mdim, values })
    }

    pub fn zero(adim: usize, mdim: usize) -> Self {
        Cocycle {
            adim,
            mdim,
            values: vec![vec![S::zero(); mdim]; adim * adim],
        }
    }

    /// `H = −μ` on the algebra itself (the Reynolds cocycle).
    pub fn neg_mu(alg: &FinAlgebra<S>, op: &OpSymbol) -> Result<Self, FindimError> {
        let tensor = alg.require_product(op)?;
        let d = alg.dim();
        let mut values = Vec::with_capacity(d * d);
        for i in 0..d {
            for j in 0..d {
                values.push(
                    tensor
                        .basis_product(i, j)
                        .into_iter()
                        .map(|c| -c)
                        .collect(),
                );
            }
        }
        Cocycle::new(d, d, values)
    }

    pub fn adim(&self) -> usize {
        self.adim
    }

    pub fn mdim(&self) -> usize {
        self.mdim
    }

    pub fn value(&self, i: usize, j: usize) -> &[S] {
        &self.values[i * self.adim + j]
    }

    /// `H(a ⊗ b)` for coordinate vectors.
    pub fn eval(&self, a: &[S], b: &[S]) -> Vec<S> {
        let mut out = vec![S::zero(); self.mdim];
        for i in 0..self.adim {
            if a[i].is_zero() {
                continue;
            }
            for j in 0..self.adim {
                if b[j].is_zero() {
                    continue;
                }
                let c = a[i].clone() * b[j].clone();
                for k in 0..self.mdim {
                    let v = &self.values[i * self.adim + j][k];
                    if !v.is_zero() {
                        out[k] = out[k].clone() + v.clone() * c.clone();
                    }
                }
            }
        }
        out
    }
}

/// Intended identity of a linear operator `M → A`. Kinds are validated
/// lazily: the corresponding check operation is the sole authority.
#[derive(Clone, PartialEq, Debug)]
pub enum OperatorKind<S> {
    Nijenhuis,
    RotaBaxter { weight: S },
    RelativeRotaBaxter { weight: S },
    TwistedRotaBaxter,
    Reynolds,
}

/// An exact matrix `M → A` tagged with its intended operator kind.
#[derive(Clone, PartialEq, Debug)]
pub struct LinOperator<S> {
    pub matrix: Mat<S>,
    pub kind: OperatorKind<S>,
}

/// One nonzero residue of an identity or relation check.
#[derive(Clone, PartialEq, Debug)]
pub struct Violation<S> {
    /// Index of the violated relation (0 for single-identity checks).
    pub relation: usize,
    /// Basis indices substituted for the variables.
    pub tuple: Vec<usize>,
    /// The nonzero value of the left-hand side minus the right-hand side.
    pub residue: Vec<S>,
}

/// Outcome of an exhaustive check; empty violation list means the identity
/// holds.
#[derive(Clone, PartialEq, Debug)]
pub struct CheckReport<S> {
    pub violations: Vec<Violation<S>>,
}

impl<S> Default for CheckReport<S> {
    fn default() -> Self {
        CheckReport {
            violations: Vec::new(),
        }
    }
}

impl<S: Scalar> CheckReport<S> {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn merge(mut self, other: CheckReport<S>) -> CheckReport<S> {
        self.violations.extend(other.violations);
        self
    }
}

/// The `i`-th basis vector of an algebra.
pub fn unit<S: Scalar>(alg: &FinAlgebra<S>, i: usize) -> Vec<S> {
    basis_vec(alg.dim(), i)
}
