//! wasm-bindgen entry points for `www/index.html`. Every function returns a
//! `bgmu/1` JSON document as a string, or throws the error message.

use bgmu_core::json::{self, document};
use bgmu_core::superbasic::{sharp_peel, Segment};
use bgmu_core::{
    enumerate_acceptable, polygon, superbasic_witness, FrobeniusDescriptor, GroupDatum, Guard,
    Problem,
};
use serde_json::json;
use wasm_bindgen::prelude::*;

fn parse_mu(text: &str) -> Result<Vec<i64>, String> {
    text.split(',')
        .map(|x| {
            x.trim()
                .parse()
                .map_err(|_| format!("`{}` is not an integer", x.trim()))
        })
        .collect()
}

/// Partial sums and hull of `μ_{m,n}`.
pub fn polygon_json(mu: &str, m: u64, n: u64) -> Result<String, String> {
    let mu = parse_mu(mu)?;
    let cert = sharp_peel(&mu, m, n).map_err(|e| e.to_string())?;
    let data = polygon(&Segment::whole(&cert.theta));
    let partial: Vec<i64> = std::iter::once(0)
        .chain(cert.theta.iter().scan(0, |acc, x| {
            *acc += x;
            Some(*acc)
        }))
        .collect();
    let mut body = json::polygon(&data);
    body["theta"] = json!(cert.theta);
    body["partial_sums"] = json!(partial);
    body["hull"] = json::fractions(&data.hull_values());
    Ok(json::render(&document("polygon", body)))
}

/// Acceptable points with their Hasse diagram.
pub fn acceptable_json(group: &str, mu: &str, sigma: &str) -> Result<String, String> {
    let datum: GroupDatum = group.parse().map_err(|e: bgmu_core::Error| e.to_string())?;
    let frob = FrobeniusDescriptor::parse(&datum, sigma).map_err(|e| e.to_string())?;
    let problem = Problem::new(parse_mu(mu)?, frob).map_err(|e| e.to_string())?;
    let set = enumerate_acceptable(&problem, &Guard::default()).map_err(|e| e.to_string())?;
    let mut body = json::acceptable_set(&set);
    body["problem"] = json::problem(&problem);
    Ok(json::render(&document("enumerate", body)))
}

/// The superbasic witness together with its peeling chain.
pub fn witness_json(mu: &str, m: u64, n: u64) -> Result<String, String> {
    let sw = superbasic_witness(&parse_mu(mu)?, m, n).map_err(|e| e.to_string())?;
    Ok(json::render(&document(
        "witness",
        json::superbasic_witness(&sw),
    )))
}

#[wasm_bindgen(js_name = polygon)]
pub fn polygon_js(mu: &str, m: u32, n: u32) -> Result<String, JsValue> {
    polygon_json(mu, m.into(), n.into()).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen(js_name = acceptable)]
pub fn acceptable_js(group: &str, mu: &str, sigma: &str) -> Result<String, JsValue> {
    acceptable_json(group, mu, sigma).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen(js_name = witness)]
pub fn witness_js(mu: &str, m: u32, n: u32) -> Result<String, JsValue> {
    witness_json(mu, m.into(), n.into()).map_err(|e| JsValue::from_str(&e))
}
