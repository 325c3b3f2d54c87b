//! The JSON spec-file format: versioned, exact rationals as `"p/q"` strings,
//! tensors as nested arrays with index order `c[i][j][k]`, unknown fields
//! rejected.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use nsplit::corpus::ExampleSpec;
use nsplit::findim::{Bimodule, Cocycle, FinAlgebra, Mat, OperatorKind, StructureTensor};
use nsplit::terms::{catalog, CategoryPresentation, Monomial, OpSymbol, Relation};
use nsplit::Rat;

/// Errors attributable to the spec file contents.
#[derive(Debug)]
pub struct SpecError(pub String);

impl fmt::Display for SpecError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for SpecError {}

fn err(msg: impl Into<String>) -> SpecError {
    SpecError(msg.into())
}

pub const CURRENT_VERSION: u32 = 1;

#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpecFile {
    pub version: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub category: Option<CategorySection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub algebra: Option<AlgebraSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bimodule: Option<BimoduleSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub operator: Option<OperatorSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cocycle: Option<CocycleSection>,
}

/// Either a catalog name or an explicit presentation.
#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CategorySection {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub op: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub relations: Option<Vec<RelationJson>>,
}

#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RelationJson {
    pub arity: usize,
    pub terms: Vec<TermJson>,
}

#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermJson {
    pub coeff: String,
    /// A leaf index (integer) or `[op, left, right]`.
    pub monomial: Value,
}

#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields, rename_all = "camelCase")]
pub struct AlgebraSection {
    pub dim: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub basis_names: Option<Vec<String>>,
    /// One structure tensor per product symbol, index order `c[i][j][k]`.
    pub products: BTreeMap<String, Vec<Vec<Vec<String>>>>,
}

#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields, rename_all = "camelCase")]
pub struct BimoduleSection {
    pub mdim: usize,
    /// Action matrices per base basis element, column convention:
    /// `l(e_i) f_j = Σ_k left[i][k][j] f_k`.
    pub left: Vec<Vec<Vec<String>>>,
    pub right: Vec<Vec<Vec<String>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mod_product: Option<Vec<Vec<Vec<String>>>>,
}

#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OperatorSection {
    /// Matrix of the operator `M → A`, `matrix[row][col]`.
    pub matrix: Vec<Vec<String>>,
    /// One of `nijenhuis`, `rb`, `relative-rb`, `twisted`, `reynolds`.
    pub kind: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lambda: Option<String>,
}

#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CocycleSection {
    /// `values[i][j]` is the module vector `H(e_i ⊗ e_j)`.
    pub values: Vec<Vec<Vec<String>>>,
}

pub fn parse_spec(text: &str) -> Result<SpecFile, SpecError> {
    let spec: SpecFile = serde_json::from_str(text)
        .map_err(|e| err(format!("invalid spec file: {e}")))?;
    if spec.version != CURRENT_VERSION {
        return Err(err(format!(
            "unsupported spec version {} (expected {CURRENT_VERSION})",
            spec.version
        )));
    }
    Ok(spec)
}

fn parse_rat(s: &str) -> Result<Rat, SpecError> {
    Rat::from_str(s.trim()).map_err(|e| err(format!("invalid rational `{s}`: {e}")))
}

fn rat_string(r: &Rat) -> String {
    r.to_string()
}

fn parse_matrix(rows: &[Vec<String>]) -> Result<Mat<Rat>, SpecError> {
    let r = rows.len();
    let c = rows.first().map_or(0, Vec::len);
    if rows.iter().any(|row| row.len() != c) {
        return Err(err("ragged matrix"));
    }
    let mut m = Mat::zero(r, c);
    for (i, row) in rows.iter().enumerate() {
        for (j, s) in row.iter().enumerate() {
            *m.get_mut(i, j) = parse_rat(s)?;
        }
    }
    Ok(m)
}

fn matrix_json(m: &Mat<Rat>) -> Vec<Vec<String>> {
    (0..m.rows())
        .map(|i| (0..m.cols()).map(|j| rat_string(m.get(i, j))).collect())
        .collect()
}

fn parse_tensor(dim: usize, c: &[Vec<Vec<String>>]) -> Result<StructureTensor<Rat>, SpecError> {
    if c.len() != dim || c.iter().any(|p| p.len() != dim || p.iter().any(|r| r.len() != dim)) {
        return Err(err(format!("structure tensor must be {dim}×{dim}×{dim}")));
    }
    let mut t = StructureTensor::zeros(dim);
    for (i, plane) in c.iter().enumerate() {
        for (j, row) in plane.iter().enumerate() {
            for (k, s) in row.iter().enumerate() {
                *t.get_mut(i, j, k) = parse_rat(s)?;
            }
        }
    }
    Ok(t)
}

fn tensor_json(t: &StructureTensor<Rat>) -> Vec<Vec<Vec<String>>> {
    let d = t.dim();
    (0..d)
        .map(|i| {
            (0..d)
                .map(|j| (0..d).map(|k| rat_string(t.get(i, j, k))).collect())
                .collect()
        })
        .collect()
}

fn parse_monomial(v: &Value) -> Result<Monomial, SpecError> {
    match v {
        Value::Number(n) => {
            let idx = n
                .as_u64()
                .ok_or_else(|| err(format!("leaf index must be a positive integer, got {n}")))?;
            if idx == 0 {
                return Err(err("leaf indices are 1-based"));
            }
            Ok(Monomial::leaf(idx as usize))
        }
        Value::Array(items) if items.len() == 3 => {
            let op = items[0]
                .as_str()
                .ok_or_else(|| err("monomial node must start with an operation name"))?;
            Ok(Monomial::node(
                OpSymbol::new(op),
                parse_monomial(&items[1])?,
                parse_monomial(&items[2])?,
            ))
        }
        other => Err(err(format!(
            "monomial must be a leaf index or [op, left, right], got {other}"
        ))),
    }
}

fn parse_relation(r: &RelationJson) -> Result<Relation<Rat>, SpecError> {
    let terms = r
        .terms
        .iter()
        .map(|t| Ok((parse_rat(&t.coeff)?, parse_monomial(&t.monomial)?)))
        .collect::<Result<Vec<_>, SpecError>>()?;
    Relation::new(r.arity, terms).map_err(|e| err(e.to_string()))
}

impl SpecFile {
    /// The category presentation: a catalog name, or explicit relations.
    pub fn category(&self) -> Result<CategoryPresentation<Rat>, SpecError> {
        let section = self
            .category
            .as_ref()
            .ok_or_else(|| err("spec file has no `category` section"))?;
        match (&section.name, &section.relations) {
            (Some(name), None) => catalog::<Rat>(name).map_err(|e| err(e.to_string())),
            (None, Some(relations)) => {
                let op = OpSymbol::new(section.op.clone().unwrap_or_else(|| "mu".into()));
                let rels = relations
                    .iter()
                    .map(parse_relation)
                    .collect::<Result<Vec<_>, _>>()?;
                CategoryPresentation::new("custom", op, rels).map_err(|e| err(e.to_string()))
            }
            _ => Err(err(
                "category section needs either `name` or `relations` (with optional `op`)",
            )),
        }
    }

    pub fn algebra(&self) -> Result<FinAlgebra<Rat>, SpecError> {
        let section = self
            .algebra
            .as_ref()
            .ok_or_else(|| err("spec file has no `algebra` section"))?;
        let mut products = BTreeMap::new();
        for (name, tensor) in &section.products {
            products.insert(OpSymbol::new(name.clone()), parse_tensor(section.dim, tensor)?);
        }
        let names = section
            .basis_names
            .clone()
            .unwrap_or_else(|| (1..=section.dim).map(|i| format!("e{i}")).collect());
        FinAlgebra::new(section.dim, names, products).map_err(|e| err(e.to_string()))
    }

    /// The bimodule over the spec's algebra; `op` names the base product.
    pub fn bimodule(&self, op: &OpSymbol) -> Result<Bimodule<Rat>, SpecError> {
        let base = self.algebra()?;
        let section = self
            .bimodule
            .as_ref()
            .ok_or_else(|| err("spec file has no `bimodule` section"))?;
        let parse_actions = |mats: &[Vec<Vec<String>>]| -> Result<Vec<Mat<Rat>>, SpecError> {
            mats.iter().map(|m| parse_matrix(m)).collect()
        };
        let mod_product = section
            .mod_product
            .as_ref()
            .map(|t| parse_tensor(section.mdim, t))
            .transpose()?;
        Bimodule::new(
            base,
            op.clone(),
            section.mdim,
            parse_actions(&section.left)?,
            parse_actions(&section.right)?,
            mod_product,
        )
        .map_err(|e| err(e.to_string()))
    }

    pub fn operator(&self) -> Result<(Mat<Rat>, OperatorKind<Rat>), SpecError> {
        let section = self
            .operator
            .as_ref()
            .ok_or_else(|| err("spec file has no `operator` section"))?;
        let matrix = parse_matrix(&section.matrix)?;
        let lambda = section
            .lambda
            .as_ref()
            .map(|s| parse_rat(s))
            .transpose()?;
        let weight = |lambda: Option<Rat>| {
            lambda.ok_or_else(|| err("operator kind requires a `lambda` weight"))
        };
        let kind = match section.kind.as_str() {
            "nijenhuis" => OperatorKind::Nijenhuis,
            "rb" => OperatorKind::RotaBaxter {
                weight: weight(lambda)?,
            },
            "relative-rb" => OperatorKind::RelativeRotaBaxter {
                weight: weight(lambda)?,
            },
            "twisted" => OperatorKind::TwistedRotaBaxter,
            "reynolds" => OperatorKind::Reynolds,
            other => {
                return Err(err(format!(
                    "unknown operator kind `{other}` (expected nijenhuis, rb, relative-rb, \
                     twisted or reynolds)"
                )))
            }
        };
        Ok((matrix, kind))
    }

    pub fn cocycle(&self, adim: usize, mdim: usize) -> Result<Cocycle<Rat>, SpecError> {
        let section = self
            .cocycle
            .as_ref()
            .ok_or_else(|| err("spec file has no `cocycle` section"))?;
        if section.values.len() != adim
            || section.values.iter().any(|row| row.len() != adim)
        {
            return Err(err(format!("cocycle values must form a {adim}×{adim} array")));
        }
        let mut values = Vec::with_capacity(adim * adim);
        for row in &section.values {
            for v in row {
                if v.len() != mdim {
                    return Err(err(format!("cocycle value vectors must have length {mdim}")));
                }
                values.push(v.iter().map(|s| parse_rat(s)).collect::<Result<_, _>>()?);
            }
        }
        Cocycle::new(adim, mdim, values).map_err(|e| err(e.to_string()))
    }
}

/// Renders an algebra as a spec-file section.
pub fn algebra_section(alg: &FinAlgebra<Rat>) -> AlgebraSection {
    AlgebraSection {
        dim: alg.dim(),
        basis_names: Some(alg.basis_names().to_vec()),
        products: alg
            .products()
            .iter()
            .map(|(op, t)| (op.name().to_string(), tensor_json(t)))
            .collect(),
    }
}

/// Renders a bundled scenario as a spec file.
pub fn spec_from_example(example: &ExampleSpec<Rat>) -> SpecFile {
    let bimodule = example.bimodule.as_ref().map(|m| BimoduleSection {
        mdim: m.mdim(),
        left: m.left().iter().map(matrix_json).collect(),
        right: m.right().iter().map(matrix_json).collect(),
        mod_product: m.module_product().map(tensor_json),
    });
    let operator = example.operator.as_ref().map(|op| {
        let (kind, lambda) = match &op.kind {
            OperatorKind::Nijenhuis => ("nijenhuis", None),
            OperatorKind::RotaBaxter { weight } => ("rb", Some(rat_string(weight))),
            OperatorKind::RelativeRotaBaxter { weight } => {
                ("relative-rb", Some(rat_string(weight)))
            }
            OperatorKind::TwistedRotaBaxter => ("twisted", None),
            OperatorKind::Reynolds => ("reynolds", None),
        };
        OperatorSection {
            matrix: matrix_json(&op.matrix),
            kind: kind.to_string(),
            lambda,
        }
    });
    let cocycle = example.cocycle.as_ref().map(|h| CocycleSection {
        values: (0..h.adim())
            .map(|i| {
                (0..h.adim())
                    .map(|j| h.value(i, j).iter().map(rat_string).collect())
                    .collect()
            })
            .collect(),
    });
    SpecFile {
        version: CURRENT_VERSION,
        category: Some(CategorySection {
            name: Some(example.category.to_string()),
            op: None,
            relations: None,
        }),
        algebra: Some(algebra_section(&example.algebra)),
        bimodule,
        operator,
        cocycle,
    }
}
