//! Relation pretty-printing: plain text, JSON (trees as nested arrays,
//! coefficients as `"p/q"` strings) and TeX-like output. Variable names
//! `a, b, c, …` are assigned by leaf index.

use serde_json::{json, Value};

use super::{Monomial, OpSymbol, Relation};
use crate::scalar::Scalar;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RenderFormat {
    Text,
    Json,
    Tex,
}

fn var_name(index: usize) -> String {
    // 1 → a, 2 → b, …; two-letter names after z, which the arity caps never reach.
    let letters = b"abcdefghijklmnopqrstuvwxyz";
    if index <= letters.len() {
        (letters[index - 1] as char).to_string()
    } else {
        format!("x{index}")
    }
}

/// Text glyph for an operation, plus whether it needs surrounding spaces.
fn text_glyph(op: &OpSymbol) -> (String, bool) {
    match op.name() {
        "mu" | "star" => ("*".into(), false),
        "prec" => ("<".into(), false),
        "succ" => (">".into(), false),
        "dot" => (".".into(), false),
        "vee" => ("v".into(), true),
        "times" => ("x".into(), true),
        other => (format!("[{other}]"), true),
    }
}

/// TeX infix for an operation; `mu` renders as juxtaposition.
fn tex_glyph(op: &OpSymbol) -> String {
    match op.name() {
        "mu" => String::new(),
        "prec" => "\\prec ".into(),
        "succ" => "\\succ ".into(),
        "vee" => "\\vee ".into(),
        "dot" => "\\cdot ".into(),
        "star" => "\\star ".into(),
        "times" => "\\times ".into(),
        other => format!("\\mathbin{{{other}}}"),
    }
}

fn monomial_text(m: &Monomial, tex: bool) -> String {
    fn operand(m: &Monomial, tex: bool) -> String {
        match m {
            Monomial::Leaf(i) => var_name(*i),
            Monomial::Node(..) => format!("({})", monomial_text(m, tex)),
        }
    }
    match m {
        Monomial::Leaf(i) => var_name(*i),
        Monomial::Node(op, l, r) => {
            let (lhs, rhs) = (operand(l, tex), operand(r, tex));
            if tex {
                format!("{lhs}{}{rhs}", tex_glyph(op))
            } else {
                let (glyph, spaced) = text_glyph(op);
                if spaced {
                    format!("{lhs} {glyph} {rhs}")
                } else {
                    format!("{lhs}{glyph}{rhs}")
                }
            }
        }
    }
}

fn monomial_json(m: &Monomial) -> Value {
    match m {
        Monomial::Leaf(i) => json!(i),
        Monomial::Node(op, l, r) => json!([op.name(), monomial_json(l), monomial_json(r)]),
    }
}

/// Renders one monomial without coefficient.
pub fn render_monomial(m: &Monomial, format: RenderFormat) -> String {
    match format {
        RenderFormat::Text => monomial_text(m, false),
        RenderFormat::Tex => monomial_text(m, true),
        RenderFormat::Json => monomial_json(m).to_string(),
    }
}

fn linear_text<S: Scalar>(rel: &Relation<S>, tex: bool) -> String {
    if rel.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (idx, (coeff, m)) in rel.terms().iter().enumerate() {
        let negative = coeff.is_negative();
        let magnitude = coeff.abs();
        if idx == 0 {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        if !magnitude.is_one() {
            out.push_str(&format!("{magnitude} "));
        }
        out.push_str(&monomial_text(m, tex));
    }
    out
}

/// JSON form of a relation: arity plus `{coeff, monomial}` records.
pub fn relation_json<S: Scalar>(rel: &Relation<S>) -> Value {
    json!({
        "arity": rel.arity(),
        "terms": rel
            .terms()
            .iter()
            .map(|(c, m)| json!({ "coeff": c.to_string(), "monomial": monomial_json(m) }))
            .collect::<Vec<_>>(),
    })
}

/// Renders a relation in the requested format. The zero relation renders as
/// `"0"` (text/TeX) or as a JSON record with an empty term list.
pub fn render_relation<S: Scalar>(rel: &Relation<S>, format: RenderFormat) -> String {
    match format {
        RenderFormat::Text => linear_text(rel, false),
        RenderFormat::Tex => linear_text(rel, true),
        RenderFormat::Json => relation_json(rel).to_string(),
    }
}
