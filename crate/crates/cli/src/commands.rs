//! Implementations of the four subcommands.

use std::fmt::Write as _;
use std::path::PathBuf;

use serde_json::{json, Value};

use nsplit::corpus;
use nsplit::findim::{
    check_in_category, check_nijenhuis, check_rb, check_relative_rb, check_reynolds,
    check_twisted_rb, is_2cocycle, is_bimodule, is_bimodule_algebra, Bimodule, CheckReport,
    Cocycle, FinAlgebra, Mat, OperatorKind,
};
use nsplit::oracle::{cross_check_split, verify_pairsij, verify_xstar, OracleError};
use nsplit::split::{
    derive_split_relations, reduce_anticommutative, SplitRelationSet, SplitScheme,
};
use nsplit::terms::{
    catalog, relation_json, render_relation, CategoryPresentation, OpSymbol, Relation,
    RenderFormat, CATALOG_NAMES,
};
use nsplit::Rat;

use nsplit_cli::spec::{parse_spec, SpecFile};

use crate::{Format, Outcome};

fn load_spec(path: &PathBuf) -> Result<SpecFile, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    parse_spec(&text).map_err(|e| e.to_string())
}

fn render(rel: &Relation<Rat>, format: Format) -> String {
    let f = match format {
        Format::Text => RenderFormat::Text,
        Format::Json => RenderFormat::Json,
        Format::Tex => RenderFormat::Tex,
    };
    render_relation(rel, f)
}

fn relation_record(rel: &Relation<Rat>) -> Value {
    json!({
        "text": render_relation(rel, RenderFormat::Text),
        "tex": render_relation(rel, RenderFormat::Tex),
        "json": relation_json(rel),
    })
}

fn subset_label(subset: &[usize]) -> String {
    let indices: Vec<String> = subset.iter().map(|i| i.to_string()).collect();
    format!("{{{}}}", indices.join(","))
}

fn split_json(cat: &CategoryPresentation<Rat>, split: &SplitRelationSet<Rat>) -> Value {
    json!({
        "category": cat.name(),
        "scheme": split.scheme().name(),
        "sources": split.sources().iter().map(|src| {
            json!({
                "source": relation_record(&src.source),
                "derived": src.derived.iter().map(|d| json!({
                    "subset": d.subset,
                    "relation": relation_record(&d.relation),
                })).collect::<Vec<_>>(),
                "star": src.star.as_ref().map(relation_record),
                "extra": src.extra.as_ref().map(relation_record),
            })
        }).collect::<Vec<_>>(),
    })
}

fn split_text(
    cat: &CategoryPresentation<Rat>,
    split: &SplitRelationSet<Rat>,
    format: Format,
) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "category: {}", cat.name());
    let _ = writeln!(out, "scheme: {}", split.scheme().name());
    for (idx, src) in split.sources().iter().enumerate() {
        let _ = writeln!(out);
        let _ = writeln!(out, "source {}: {}", idx + 1, render(&src.source, format));
        for d in &src.derived {
            let _ = writeln!(
                out,
                "  {} {}",
                subset_label(&d.subset),
                render(&d.relation, format)
            );
        }
        if let Some(star) = &src.star {
            let _ = writeln!(out, "  star: {}", render(star, format));
        }
        if let Some(extra) = &src.extra {
            let _ = writeln!(out, "  extra: {}", render(extra, format));
        }
    }
    out
}

pub fn cmd_split(
    catalog_name: Option<String>,
    spec_path: Option<PathBuf>,
    scheme_name: &str,
    reduce: bool,
    format: Format,
) -> Result<Outcome, String> {
    let cat = match (catalog_name, spec_path) {
        (Some(name), None) => catalog::<Rat>(&name).map_err(|e| e.to_string())?,
        (None, Some(path)) => load_spec(&path)?.category().map_err(|e| e.to_string())?,
        _ => return Err("pass exactly one of --catalog or --spec".into()),
    };
    let scheme = SplitScheme::from_name(scheme_name).map_err(|e| e.to_string())?;
    let split = derive_split_relations(&cat, &scheme).map_err(|e| e.to_string())?;

    if reduce {
        let reduced = reduce_anticommutative(&split).map_err(|e| e.to_string())?;
        let output = match format {
            Format::Json => {
                let value = json!({
                    "category": cat.name(),
                    "scheme": split.scheme().name(),
                    "reduced": reduced.iter().map(relation_record).collect::<Vec<_>>(),
                });
                format!("{}\n", serde_json::to_string_pretty(&value).unwrap())
            }
            _ => {
                let mut out = String::new();
                let _ = writeln!(out, "category: {}", cat.name());
                let _ = writeln!(out, "scheme: {} (anticommutative reduction)", scheme.name());
                let _ = writeln!(out);
                for (i, rel) in reduced.iter().enumerate() {
                    let _ = writeln!(out, "  [{}] {}", i + 1, render(rel, format));
                }
                out
            }
        };
        return Ok(Outcome::pass(output));
    }

    let output = match format {
        Format::Json => format!(
            "{}\n",
            serde_json::to_string_pretty(&split_json(&cat, &split)).unwrap()
        ),
        _ => split_text(&cat, &split, format),
    };
    Ok(Outcome::pass(output))
}

/// Everything a check or oracle run may need, from a spec file or a bundled
/// example.
struct Context {
    category: CategoryPresentation<Rat>,
    algebra: FinAlgebra<Rat>,
    bimodule: Option<Bimodule<Rat>>,
    operator: Option<(Mat<Rat>, OperatorKind<Rat>)>,
    cocycle: Option<Cocycle<Rat>>,
}

impl Context {
    fn from_inputs(
        spec_path: Option<PathBuf>,
        example: Option<String>,
    ) -> Result<Context, String> {
        match (spec_path, example) {
            (Some(path), None) => {
                let spec = load_spec(&path)?;
                let category = spec.category().map_err(|e| e.to_string())?;
                let algebra = spec.algebra().map_err(|e| e.to_string())?;
                let bimodule = if spec.bimodule.is_some() {
                    Some(spec.bimodule(category.op()).map_err(|e| e.to_string())?)
                } else {
                    None
                };
                let operator = if spec.operator.is_some() {
                    Some(spec.operator().map_err(|e| e.to_string())?)
                } else {
                    None
                };
                let cocycle = if spec.cocycle.is_some() {
                    let mdim = bimodule
                        .as_ref()
                        .map(Bimodule::mdim)
                        .unwrap_or_else(|| algebra.dim());
                    Some(
                        spec.cocycle(algebra.dim(), mdim)
                            .map_err(|e| e.to_string())?,
                    )
                } else {
                    None
                };
                Ok(Context {
                    category,
                    algebra,
                    bimodule,
                    operator,
                    cocycle,
                })
            }
            (None, Some(name)) => {
                let ex = corpus::example::<Rat>(&name).ok_or_else(|| {
                    format!("unknown example `{name}` (see `nsplit catalog`)")
                })?;
                Ok(Context {
                    category: catalog::<Rat>(ex.category).map_err(|e| e.to_string())?,
                    algebra: ex.algebra,
                    bimodule: ex.bimodule,
                    operator: ex.operator.map(|o| (o.matrix, o.kind)),
                    cocycle: ex.cocycle,
                })
            }
            _ => Err("pass exactly one of --spec or --example".into()),
        }
    }

    fn operator(&self) -> Result<&(Mat<Rat>, OperatorKind<Rat>), String> {
        self.operator
            .as_ref()
            .ok_or_else(|| "this command needs an `operator` section".into())
    }

    /// The bimodule the operator acts on: explicit, or the standard
    /// self-bimodule of the algebra.
    fn operator_bimodule(&self, with_product: bool) -> Result<Bimodule<Rat>, String> {
        if let Some(m) = &self.bimodule {
            return Ok(m.clone());
        }
        let std = Bimodule::standard_self(&self.algebra, self.category.op())
            .map_err(|e| e.to_string())?;
        Ok(if with_product { std } else { std.forget_product() })
    }

    /// Weight of the operator, when its kind carries one.
    fn weight(&self) -> Option<Rat> {
        match &self.operator.as_ref()?.1 {
            OperatorKind::RotaBaxter { weight } | OperatorKind::RelativeRotaBaxter { weight } => {
                Some(weight.clone())
            }
            _ => None,
        }
    }

    fn default_check(&self) -> Result<&'static str, String> {
        match self.operator.as_ref().map(|(_, kind)| kind) {
            Some(OperatorKind::Nijenhuis) => Ok("nijenhuis"),
            Some(OperatorKind::RotaBaxter { .. }) => Ok("rb"),
            Some(OperatorKind::RelativeRotaBaxter { .. }) => Ok("relative-rb"),
            Some(OperatorKind::TwistedRotaBaxter) => Ok("twisted"),
            Some(OperatorKind::Reynolds) => Ok("reynolds"),
            None => Err("no operator present; pass --check explicitly".into()),
        }
    }
}

fn report_text(report: &CheckReport<Rat>, names: &[String]) -> String {
    let mut out = String::new();
    for v in &report.violations {
        let tuple: Vec<String> = v
            .tuple
            .iter()
            .map(|&i| names.get(i).cloned().unwrap_or_else(|| i.to_string()))
            .collect();
        let residue: Vec<String> = v.residue.iter().map(|c| c.to_string()).collect();
        let _ = writeln!(
            out,
            "violation: relation {} at ({}) residue [{}]",
            v.relation,
            tuple.join(", "),
            residue.join(", ")
        );
    }
    out
}

pub fn cmd_check(
    spec_path: Option<PathBuf>,
    example: Option<String>,
    check: Option<String>,
    op_flag: Option<String>,
) -> Result<Outcome, String> {
    let ctx = Context::from_inputs(spec_path, example)?;
    let check = match check {
        Some(c) => c,
        None => ctx.default_check()?.to_string(),
    };
    let cat = &ctx.category;

    let report = match check.as_str() {
        "category" => {
            let op = match op_flag {
                Some(name) => OpSymbol::new(name),
                None => cat.op().clone(),
            };
            check_in_category(&ctx.algebra, &op, cat).map_err(|e| e.to_string())?
        }
        "bimodule" => {
            let m = ctx.operator_bimodule(false)?;
            is_bimodule(&m, cat).map_err(|e| e.to_string())?
        }
        "bimodule-algebra" => {
            let m = ctx.operator_bimodule(true)?;
            is_bimodule_algebra(&m, cat).map_err(|e| e.to_string())?
        }
        "cocycle" => {
            let m = ctx.operator_bimodule(false)?;
            let h = ctx
                .cocycle
                .clone()
                .ok_or("this check needs a `cocycle` section")?;
            is_2cocycle(&m, &h, cat).map_err(|e| e.to_string())?
        }
        "nijenhuis" => {
            let (matrix, _) = ctx.operator()?;
            check_nijenhuis(&ctx.algebra, cat.op(), matrix).map_err(|e| e.to_string())?
        }
        "rb" => {
            let (matrix, _) = ctx.operator()?;
            let weight = ctx.weight().ok_or("rb check needs a `lambda` weight")?;
            check_rb(&ctx.algebra, cat.op(), matrix, &weight).map_err(|e| e.to_string())?
        }
        "relative-rb" => {
            let (matrix, _) = ctx.operator()?;
            let weight = ctx
                .weight()
                .ok_or("relative-rb check needs a `lambda` weight")?;
            let m = ctx.operator_bimodule(true)?;
            check_relative_rb(&m, matrix, &weight).map_err(|e| e.to_string())?
        }
        "twisted" => {
            let (matrix, _) = ctx.operator()?;
            let m = ctx.operator_bimodule(false)?;
            let h = ctx
                .cocycle
                .clone()
                .ok_or("twisted check needs a `cocycle` section")?;
            check_twisted_rb(&m, matrix, &h, cat).map_err(|e| e.to_string())?
        }
        "reynolds" => {
            let (matrix, _) = ctx.operator()?;
            check_reynolds(&ctx.algebra, cat.op(), matrix, cat).map_err(|e| e.to_string())?
        }
        other => {
            return Err(format!(
                "unknown check `{other}` (expected category, bimodule, bimodule-algebra, \
                 cocycle, nijenhuis, rb, relative-rb, twisted or reynolds)"
            ))
        }
    };

    let mut out = format!("check: {check}\n");
    if report.passed() {
        out.push_str("result: PASS\n");
        Ok(Outcome::pass(out))
    } else {
        out.push_str(&report_text(&report, ctx.algebra.basis_names()));
        let _ = writeln!(out, "result: FAIL ({} violations)", report.violations.len());
        Ok(Outcome::fail(out))
    }
}

pub fn cmd_verify(
    spec_path: Option<PathBuf>,
    example: Option<String>,
    oracle: &str,
    max_len: usize,
    max_pow: usize,
    jobs: usize,
) -> Result<Outcome, String> {
    let ctx = Context::from_inputs(spec_path, example)?;
    let mut out = format!("oracle: {oracle}\n");
    let names = ctx.algebra.basis_names().to_vec();

    let identity_failed = |message: String| -> Result<Outcome, String> {
        Ok(Outcome::fail(message))
    };

    match oracle {
        "xstar" => {
            let (matrix, _) = ctx.operator()?;
            match verify_xstar(&ctx.algebra, ctx.category.op(), matrix, max_len, jobs) {
                Ok(report) => {
                    let _ = writeln!(out, "trees checked: {}", report.trees_checked);
                    if report.passed() {
                        out.push_str("result: PASS\n");
                        Ok(Outcome::pass(out))
                    } else {
                        out.push_str(&report_text(&report.expansion, &names));
                        out.push_str(&report_text(&report.top_power, &names));
                        out.push_str("result: FAIL\n");
                        Ok(Outcome::fail(out))
                    }
                }
                Err(OracleError::NotNijenhuis) => {
                    let _ = writeln!(out, "{}", OracleError::NotNijenhuis);
                    out.push_str("result: FAIL\n");
                    identity_failed(out)
                }
                Err(e) => Err(e.to_string()),
            }
        }
        "pairsij" => {
            let (matrix, _) = ctx.operator()?;
            match verify_pairsij(&ctx.algebra, ctx.category.op(), matrix, max_pow) {
                Ok(report) => {
                    if report.passed() {
                        out.push_str("result: PASS\n");
                        Ok(Outcome::pass(out))
                    } else {
                        out.push_str(&report_text(&report, &names));
                        out.push_str("result: FAIL\n");
                        Ok(Outcome::fail(out))
                    }
                }
                Err(OracleError::NotNijenhuis) => {
                    let _ = writeln!(out, "{}", OracleError::NotNijenhuis);
                    out.push_str("result: FAIL\n");
                    identity_failed(out)
                }
                Err(e) => Err(e.to_string()),
            }
        }
        "cross-check" => {
            let report = cross_check_split(&ctx.category, &ctx.algebra)
                .map_err(|e| e.to_string())?;
            let _ = writeln!(
                out,
                "symbolic relations: {}",
                if report.symbolic.passed() { "PASS" } else { "FAIL" }
            );
            let _ = writeln!(
                out,
                "doubled membership: {}",
                if report.doubled.passed() { "PASS" } else { "FAIL" }
            );
            if !report.agree() {
                out.push_str("INTERNAL INCONSISTENCY: the two verdicts disagree\n");
                out.push_str("result: FAIL\n");
                return identity_failed(out);
            }
            if report.both_passed() {
                out.push_str("result: PASS\n");
                Ok(Outcome::pass(out))
            } else {
                out.push_str(&report_text(&report.symbolic, &names));
                out.push_str("result: FAIL\n");
                identity_failed(out)
            }
        }
        other => Err(format!(
            "unknown oracle `{other}` (expected xstar, pairsij or cross-check)"
        )),
    }
}

pub fn cmd_catalog(as_json: bool) -> Result<Outcome, String> {
    let presentations: Vec<(String, usize)> = CATALOG_NAMES
        .iter()
        .map(|name| {
            let cat = catalog::<Rat>(name).expect("catalog name");
            (name.to_string(), cat.relations().len())
        })
        .collect();
    let algebras = corpus::algebras::<Rat>();
    let examples = corpus::examples::<Rat>();

    if as_json {
        let value = json!({
            "presentations": presentations.iter().map(|(name, count)| json!({
                "name": name,
                "relations": count,
            })).collect::<Vec<_>>(),
            "algebras": algebras.iter().map(|a| json!({
                "name": a.name,
                "dim": a.algebra.dim(),
                "category": a.category,
                "basisNames": a.algebra.basis_names(),
            })).collect::<Vec<_>>(),
            "examples": examples.iter().map(|e| json!({
                "name": e.name,
                "category": e.category,
                "description": e.description,
            })).collect::<Vec<_>>(),
        });
        return Ok(Outcome::pass(format!(
            "{}\n",
            serde_json::to_string_pretty(&value).unwrap()
        )));
    }

    let mut out = String::new();
    let _ = writeln!(out, "presentations:");
    for (name, count) in &presentations {
        let plural = if *count == 1 { "relation" } else { "relations" };
        let _ = writeln!(out, "  {name:<26} {count} {plural}");
    }
    let _ = writeln!(out);
    let _ = writeln!(out, "algebras:");
    for a in &algebras {
        let _ = writeln!(
            out,
            "  {:<26} dim {}  {}",
            a.name,
            a.algebra.dim(),
            a.category
        );
    }
    let _ = writeln!(out);
    let _ = writeln!(out, "examples:");
    for e in &examples {
        let _ = writeln!(out, "  {:<26} {}", e.name, e.description);
    }
    Ok(Outcome::pass(out))
}

