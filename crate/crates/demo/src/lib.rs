//! Browser bindings for a few workbench operations. Each operation returns a
//! JSON string; the native functions are the testable core, the
//! `#[wasm_bindgen]` wrappers only convert errors.

use forge::forms::Form;
use forge::gf::Field;
use forge::linalg::{commutator_space, fixed_space, Matrix, Subspace};
use forge::matgrp::{classical_order, sp6_form, suzuki_class, GroupName};
use forge::verify::Workbench;
use serde_json::json;
use wasm_bindgen::prelude::*;

thread_local! {
    static BENCH: Workbench = Workbench::new(1, None);
}

/// Order of a named group, with its involution census for `Sp6_2` and `AutSU4_2`.
pub fn group_info(name: &str) -> Result<String, String> {
    let name: GroupName = name.parse().map_err(|e: forge::Error| e.to_string())?;
    BENCH.with(|wb| {
        let g = wb.group(name).map_err(|e| e.to_string())?;
        let census = match name {
            GroupName::Sp62 => Some(wb.census_x()),
            GroupName::AutSu42 => Some(wb.census_y()),
            _ => None,
        };
        let census = census.transpose().map_err(|e| e.to_string())?;
        let value = json!({
            "group": name.as_str(),
            "order": g.order(),
            "formula_order": classical_order(name),
            "degree": g.group.degree(),
            "involutions": census.map(|c| &c.rows),
        });
        Ok(value.to_string())
    })
}

fn parse_rows(text: &str, field: Field) -> Result<Vec<Vec<u8>>, String> {
    let q = field.order() as u8;
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .map(|l| {
            l.chars()
                .filter(|c| !c.is_whitespace() && *c != ',')
                .map(|c| match c.to_digit(10) {
                    Some(d) if (d as u8) < q => Ok(d as u8),
                    _ => Err(format!("'{c}' is not an element of {field}")),
                })
                .collect()
        })
        .collect()
}

/// Suzuki name of an involution of `Sp6(2)` given as six rows of 0/1.
pub fn classify_involution(text: &str) -> Result<String, String> {
    let rows = parse_rows(text, Field::Gf2)?;
    if rows.len() != 6 || rows.iter().any(|r| r.len() != 6) {
        return Err("enter six rows of six entries".into());
    }
    let g = Matrix::from_rows(Field::Gf2, 6, &rows).map_err(|e| e.to_string())?;
    let form = sp6_form();
    if !form.preserves(&g) {
        return Err("the matrix does not preserve the symplectic form".into());
    }
    if g.is_identity() || !g.mul(&g).is_identity() {
        return Err("the matrix is not an involution".into());
    }
    let class = suzuki_class(&g, &form).map_err(|e| e.to_string())?;
    let fixed = fixed_space(&g).map_err(|e| e.to_string())?;
    let comm = commutator_space(&g).map_err(|e| e.to_string())?;
    Ok(json!({"class": class, "dim_cv": fixed.dim(), "dim_commutator": comm.dim()}).to_string())
}

/// Type of the span of the given vectors under the plus-type form on GF(3)^4.
pub fn classify_subspace(text: &str) -> Result<String, String> {
    let rows = parse_rows(text, Field::Gf3)?;
    if rows.is_empty() || rows.iter().any(|r| r.len() != 4) {
        return Err("enter vectors of length four over GF(3)".into());
    }
    let q = Form::hyperbolic(Field::Gf3, 2);
    let span = Subspace::span(Field::Gf3, 4, rows.iter().map(|r| r.as_slice()));
    let (singular, plus, minus) = q.point_counts(&span).map_err(|e| e.to_string())?;
    let kind = match span.dim() {
        1 => Some(serde_json::to_value(q.point_type(&span.basis()[0]).map_err(|e| e.to_string())?).unwrap()),
        2 => Some(serde_json::to_value(q.subspace_type_2dim(&span).map_err(|e| e.to_string())?).unwrap()),
        _ => None,
    };
    Ok(json!({
        "dim": span.dim(),
        "type": kind,
        "points": {"singular": singular, "plus": plus, "minus": minus},
        "contains_singular_point": q.singular_point_in(&span).is_some(),
    })
    .to_string())
}

#[wasm_bindgen(js_name = groupInfo)]
pub fn group_info_js(name: &str) -> Result<String, JsValue> {
    group_info(name).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen(js_name = classifyInvolution)]
pub fn classify_involution_js(text: &str) -> Result<String, JsValue> {
    classify_involution(text).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen(js_name = classifySubspace)]
pub fn classify_subspace_js(text: &str) -> Result<String, JsValue> {
    classify_subspace(text).map_err(|e| JsValue::from_str(&e))
}
