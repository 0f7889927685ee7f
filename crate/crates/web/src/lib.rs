//! Browser bindings: each entry point takes a group descriptor and returns
//! JSON for the page in `www/`.

use serde::Serialize;
use wasm_bindgen::prelude::*;

use realchar_core::catalog::{asymptotic_scan, build, parse, Family};
use realchar_core::chartab::{character_table, class_labels};
use realchar_core::classes::{real_data, ClassSet};
use realchar_core::structure::{identify, solvable_radical};
use realchar_core::perm::PermGroup;

/// Keeps the page responsive; the engine caps are far higher.
pub const WEB_MAX_ORDER: u128 = 100_000;

#[derive(Serialize)]
struct Info {
    descriptor: String,
    degree: usize,
    order: String,
    classes: usize,
    k_r: usize,
    k_q: usize,
    real_orders: Vec<u64>,
    c_group: bool,
    sol_order: String,
    quotient: Option<String>,
}

#[derive(Serialize)]
struct Table {
    descriptor: String,
    labels: Vec<String>,
    sizes: Vec<u64>,
    rows: Vec<Row>,
}

#[derive(Serialize)]
struct Row {
    degree: u64,
    real: bool,
    rational: bool,
    values: Vec<String>,
}

#[derive(Serialize)]
struct ScanRow {
    group: String,
    order: String,
    k_r: u64,
    out_order: u64,
    kfrak: String,
}

fn group(descriptor: &str) -> Result<(String, PermGroup), String> {
    let d = parse(descriptor).map_err(|e| e.to_string())?;
    let g = build(&d).map_err(|e| e.to_string())?.group;
    if g.order() > WEB_MAX_ORDER {
        return Err(format!(
            "{d} has order {}; the browser demo stops at {WEB_MAX_ORDER}",
            g.order()
        ));
    }
    Ok((d.to_string(), g))
}

fn json<T: Serialize>(v: &T) -> Result<String, String> {
    serde_json::to_string(v).map_err(|e| e.to_string())
}

pub fn info_json(descriptor: &str) -> Result<String, String> {
    let (name, g) = group(descriptor)?;
    let classes = ClassSet::new(&g).map_err(|e| e.to_string())?;
    let rd = real_data(&classes);
    let s = solvable_radical(&g).map_err(|e| e.to_string())?;
    json(&Info {
        descriptor: name,
        degree: g.degree(),
        order: g.order().to_string(),
        classes: classes.len(),
        k_r: rd.real_classes,
        k_q: rd.rational_classes,
        c_group: rd.is_c_group(),
        real_orders: rd.real_orders,
        sol_order: s.sol_radical.order().to_string(),
        quotient: identify(&s.quotient_fingerprint),
    })
}

pub fn table_json(descriptor: &str) -> Result<String, String> {
    let (name, g) = group(descriptor)?;
    let classes = ClassSet::new(&g).map_err(|e| e.to_string())?;
    let t = character_table(&classes, 1).map_err(|e| e.to_string())?;
    t.check().map_err(|e| e.to_string())?;
    json(&Table {
        descriptor: name,
        labels: class_labels(&t.class_orders),
        sizes: t.class_sizes.clone(),
        rows: t
            .rows
            .iter()
            .map(|r| Row {
                degree: r.degree,
                real: r.real,
                rational: r.rational,
                values: r.values.iter().map(|v| v.to_string()).collect(),
            })
            .collect(),
    })
}

/// `family` is `A` (alternating, n in 5..=9) or `PSL2` (q up to 81).
pub fn scan_json(family: &str, from: u32, to: u32) -> Result<String, String> {
    let (family, params): (Family, Vec<u32>) = match family {
        "A" => (Family::Alternating, (from.max(5)..=to.min(9)).collect()),
        "PSL2" => (
            Family::Psl2,
            (from.max(4)..=to.min(81))
                .filter(|&q| realchar_core::algebra::is_prime_power(q as u64).is_some())
                .collect(),
        ),
        other => return Err(format!("unknown family {other:?}; use A or PSL2")),
    };
    let recs = asymptotic_scan(family, &params).map_err(|e| e.to_string())?;
    json(
        &recs
            .iter()
            .map(|r| ScanRow {
                group: family.member(r.parameter).to_string(),
                order: r.group_order.to_string(),
                k_r: r.k_r,
                out_order: r.out_order,
                kfrak: r.kfrak.to_string(),
            })
            .collect::<Vec<_>>(),
    )
}

#[wasm_bindgen]
pub fn group_info(descriptor: &str) -> Result<String, JsError> {
    info_json(descriptor).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn character_table_json(descriptor: &str) -> Result<String, JsError> {
    table_json(descriptor).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn kfrak_scan(family: &str, from: u32, to: u32) -> Result<String, JsError> {
    scan_json(family, from, to).map_err(|e| JsError::new(&e))
}
