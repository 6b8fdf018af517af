//! wasm-bindgen bindings behind `www/index.html`.
//!
//! Each export takes plain strings and numbers and returns a JSON string; the
//! page does the drawing. The `*_json` functions are the native-testable core.

use std::collections::BTreeMap;

use ellbundle::command::{eval, Command, Verb};
use ellbundle::{jordan_tensor, parse_bundle, summand_closure};
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

/// Runs one calculator verb on up to two expressions.
pub fn run_verb_json(
    verb: &str,
    a: &str,
    b: &str,
    max_power: u32,
    modulus: u32,
) -> Result<String, String> {
    let verb: Verb = verb.parse().map_err(|e| format!("{e}"))?;
    let mut args = vec![a.to_string()];
    if verb.arity() == 2 {
        args.push(b.to_string());
    }
    let mut cmd = Command::new(verb, args);
    cmd.max_power = max_power.max(1);
    cmd.modulus = (modulus > 0).then_some(modulus as u64);
    eval(&cmd).map(|r| r.to_json()).map_err(|e| e.to_string())
}

/// `E_r ⊗ E_s` for `r, s <= n`: the Clebsch–Gordan ranks next to the Jordan
/// type of `U_r ⊗ U_s` from exact rank computations.
pub fn jordan_grid_json(n: u32) -> Result<String, String> {
    let n = u64::from(n.clamp(1, 8));
    let mut cells = Vec::new();
    for r in 1..=n {
        for s in 1..=n {
            let oracle = jordan_tensor(r, s).map_err(|e| e.to_string())?;
            let mut atiyah: Vec<u64> = ellbundle::bundle::atiyah_ranks(r, s).collect();
            atiyah.reverse();
            cells.push(json!({
                "r": r,
                "s": s,
                "atiyah": atiyah,
                "jordan": oracle.parts(),
                "agree": atiyah.as_slice() == oracle.parts(),
            }));
        }
    }
    Ok(Value::Array(cells).to_string())
}

/// Summand closure of `expr` layered by the first tensor power in which each
/// indecomposable appears.
pub fn closure_layers_json(expr: &str, max_power: u32) -> Result<String, String> {
    let e = parse_bundle(expr).map_err(|e| e.to_string())?;
    let max_power = max_power.clamp(1, 16);
    let mut first_seen = BTreeMap::new();
    let mut stabilized = false;
    for n in 1..=max_power {
        let c = summand_closure(&e, n);
        for x in &c.classes {
            first_seen.entry(x.clone()).or_insert(n);
        }
        if c.stabilized {
            stabilized = true;
            break;
        }
    }
    let twists: Vec<String> = {
        let mut t: Vec<String> = first_seen.keys().map(|x| x.twist().to_string()).collect();
        t.sort();
        t.dedup();
        t
    };
    let points: Vec<Value> = first_seen
        .iter()
        .map(|(x, n)| {
            let tw = x.twist().to_string();
            json!({
                "label": x.to_string(),
                "rank": x.rank(),
                "twist": tw,
                "twist_index": twists.iter().position(|t| *t == tw),
                "power": n,
            })
        })
        .collect();
    Ok(json!({
        "input": e.to_string(),
        "stabilized": stabilized,
        "twists": twists,
        "points": points,
    })
    .to_string())
}

#[wasm_bindgen]
pub fn run_verb(
    verb: &str,
    a: &str,
    b: &str,
    max_power: u32,
    modulus: u32,
) -> Result<String, JsValue> {
    run_verb_json(verb, a, b, max_power, modulus).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn jordan_grid(n: u32) -> Result<String, JsValue> {
    jordan_grid_json(n).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn closure_layers(expr: &str, max_power: u32) -> Result<String, JsValue> {
    closure_layers_json(expr, max_power).map_err(|e| JsValue::from_str(&e))
}
