//! Browser bindings for `nv-core`.
//!
//! Each export takes and returns the text element format, or an SVG string.
//! Errors come back as JavaScript exceptions carrying the message.

use nv_core::io::{parse_element, render_svg, serialize_element};
use nv_core::torsion::{self, OrderResult};
use nv_core::{compose, equal, power, roots};
use wasm_bindgen::prelude::*;

/// Order search in the page stays small so the tab never stalls.
const ORDER_CAP: u64 = 256;
const SIZE_CAP: usize = 4096;
/// Largest root-chain index offered by the page.
pub const MAX_ROOT: u32 = 8;

fn msg<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

pub fn draw(text: &str) -> Result<String, String> {
    render_svg(&parse_element(text).map_err(msg)?).map_err(msg)
}

/// The product "a then b", as element text.
pub fn product(a: &str, b: &str) -> Result<String, String> {
    let a = parse_element(a).map_err(msg)?;
    let b = parse_element(b).map_err(msg)?;
    Ok(serialize_element(&compose(&a, &b).map_err(msg)?))
}

pub fn raise(text: &str, k: i32) -> Result<String, String> {
    let g = parse_element(text).map_err(msg)?;
    Ok(serialize_element(&power(&g, k as i64)))
}

/// Element text of the `i`-th root of the vertical shift, plus a line
/// confirming its `2^i`-th power.
pub fn root(i: u32) -> Result<String, String> {
    if i > MAX_ROOT {
        return Err(format!("index {i} is above the demo limit {MAX_ROOT}"));
    }
    let h = roots::root_chain(i).map_err(msg)?;
    let h0 = roots::base_shift();
    let ok = if i == 0 {
        equal(&h, &h0)
    } else {
        roots::verify_root(&h, &h0, 1i64 << i)
    }
    .map_err(msg)?;
    Ok(format!(
        "# power 2^{i} equals the base shift: {ok}\n{}",
        serialize_element(&h)
    ))
}

pub fn describe_order(text: &str) -> Result<String, String> {
    let g = parse_element(text).map_err(msg)?;
    Ok(match torsion::order(&g, ORDER_CAP, SIZE_CAP) {
        OrderResult::Finite(p) => format!("order {p}"),
        OrderResult::ExceedsCap { cap, .. } => format!("no identity power up to {cap}"),
    })
}

#[wasm_bindgen]
pub fn render_element(text: &str) -> Result<String, JsValue> {
    draw(text).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn compose_elements(a: &str, b: &str) -> Result<String, JsValue> {
    product(a, b).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn power_element(text: &str, k: i32) -> Result<String, JsValue> {
    raise(text, k).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn root_chain(i: u32) -> Result<String, JsValue> {
    root(i).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn element_order(text: &str) -> Result<String, JsValue> {
    describe_order(text).map_err(|e| JsValue::from_str(&e))
}
