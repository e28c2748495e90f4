//! WebAssembly bindings for the static demo page in `www/`.
//!
//! Each export returns JSON (or a flat `Float64Array`) so the page needs no
//! bundler. The `*_impl` functions hold the logic and are what the native
//! tests exercise.

use hadamard_walk::classical::rw_return_prob;
use hadamard_walk::genfun::{gf_partial_sum, gf_theorem, return_probabilities_prop1};
use hadamard_walk::walk::{distribution, evolve, CoinMatrix, QubitState};
use serde::Serialize;
use wasm_bindgen::prelude::*;

/// Exact evolution gets slow (big integers, quadratic work) past this.
pub const MAX_TIME: u32 = 2000;

fn check_time(n: u32) -> Result<(), String> {
    if n > MAX_TIME {
        return Err(format!("time {n} exceeds the demo limit {MAX_TIME}"));
    }
    Ok(())
}

pub fn distribution_impl(n: u32) -> Result<String, String> {
    check_time(n)?;
    let psi = evolve(&QubitState::phi_star(), &CoinMatrix::hadamard(), u64::from(n)).map_err(|e| e.to_string())?;
    Ok(distribution(&psi).table().to_json())
}

/// Position distribution at time `n` as a JSON `DistributionTable`.
#[wasm_bindgen]
pub fn walk_distribution(n: u32) -> Result<String, JsValue> {
    distribution_impl(n).map_err(|e| JsValue::from_str(&e))
}

#[derive(Serialize)]
struct ReturnRow {
    n: u64,
    quantum: String,
    quantum_float: f64,
    classical: String,
    classical_float: f64,
}

pub fn return_table_impl(max_n: u32) -> Result<String, String> {
    check_time(max_n)?;
    let rows: Vec<ReturnRow> = return_probabilities_prop1(u64::from(max_n))
        .into_iter()
        .enumerate()
        .filter(|(n, _)| n % 2 == 0)
        .map(|(n, p)| {
            let c = rw_return_prob(1, n as u64).expect("dimension 1 is supported");
            ReturnRow {
                n: n as u64,
                quantum_float: p.to_f64(),
                quantum: p.fraction_string(),
                classical_float: c.to_f64(),
                classical: c.fraction_string(),
            }
        })
        .collect();
    serde_json::to_string(&rows).map_err(|e| e.to_string())
}

/// Even-time return probabilities of the quantum walk next to the classical
/// 1D walk, as a JSON array of rows.
#[wasm_bindgen]
pub fn return_table(max_n: u32) -> Result<String, JsValue> {
    return_table_impl(max_n).map_err(|e| JsValue::from_str(&e))
}

pub fn genfun_curve_impl(points: u32, truncation: u32, z_max: f64) -> Result<Vec<f64>, String> {
    if points < 2 || !(0.0..1.0).contains(&z_max) {
        return Err("need at least 2 points and 0 <= z_max < 1".into());
    }
    check_time(truncation)?;
    let mut out = Vec::with_capacity(3 * points as usize);
    for i in 0..points {
        let z = z_max * f64::from(i) / f64::from(points - 1);
        out.push(z);
        out.push(gf_partial_sum(z, u64::from(truncation)).map_err(|e| e.to_string())?);
        out.push(gf_theorem(z).map_err(|e| e.to_string())?);
    }
    Ok(out)
}

/// Flat `[z, partial sum, closed form, ...]` triples on `[0, z_max]`.
#[wasm_bindgen]
pub fn genfun_curve(points: u32, truncation: u32, z_max: f64) -> Result<Vec<f64>, JsValue> {
    genfun_curve_impl(points, truncation, z_max).map_err(|e| JsValue::from_str(&e))
}
