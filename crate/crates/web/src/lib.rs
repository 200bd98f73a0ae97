//! Browser bindings. Each export is a thin wrapper over a plain function
//! returning `Result<String, String>`, so the logic is testable natively.
//!
//! A space is given either as a catalog name or as a JSON pair document
//! (anything starting with `{`).

use symdirac::dirac::{spectrum_below, Caps};
use symdirac::pairdoc::SpaceSpec;
use symdirac::report::{
    listing, render_report, render_spectrum_report, render_verification, Report, SpectrumReport,
    VerificationSummary,
};
use symdirac::symmspace::inner_pairs;
use symdirac::verify::{verify_pair, VerifyOptions};
use symdirac::weight::parse_rational;
use wasm_bindgen::prelude::*;

fn spec_of(space: &str) -> Result<SpaceSpec, String> {
    let space = space.trim();
    if space.starts_with('{') {
        SpaceSpec::from_json(space).map_err(|e| e.to_string())
    } else {
        Ok(SpaceSpec::Catalog(space.to_string()))
    }
}

/// The catalog as a JSON array of `{name, g, k, n, spin, notes}`.
pub fn catalog_json() -> Result<String, String> {
    let entries = listing(&inner_pairs()).map_err(|e| e.to_string())?;
    serde_json::to_string(&entries).map_err(|e| e.to_string())
}

/// The eigenvalue report, as text or JSON.
pub fn eigenvalue_report(space: &str, json: bool) -> Result<String, String> {
    let spec = spec_of(space)?;
    let pair = spec.resolve().map_err(|e| e.to_string())?;
    let report = Report::new(&spec.label(), &pair).map_err(|e| e.to_string())?;
    Ok(if json { report.to_json() } else { render_report(&report) })
}

/// Eigenvalues of D² up to `cutoff` (a rational such as `"7/2"`).
pub fn spectrum_report(space: &str, cutoff: &str, json: bool) -> Result<String, String> {
    let spec = spec_of(space)?;
    let cutoff = parse_rational(cutoff.trim()).map_err(|e| e.to_string())?;
    let pair = spec.resolve().map_err(|e| e.to_string())?;
    let lines = spectrum_below(&pair, &cutoff, Caps::default().dimension).map_err(|e| e.to_string())?;
    let r = SpectrumReport::new(&spec.label(), &pair, &cutoff, &lines);
    Ok(if json {
        serde_json::to_string_pretty(&r).map_err(|e| e.to_string())?
    } else {
        render_spectrum_report(&r)
    })
}

/// The invariant battery, rendered as text.
pub fn verify_report(space: &str) -> Result<String, String> {
    let spec = spec_of(space)?;
    let pair = spec.resolve().map_err(|e| e.to_string())?;
    let v = verify_pair(&spec.label(), &pair, &VerifyOptions::default()).map_err(|e| e.to_string())?;
    Ok(render_verification(&VerificationSummary::new(&v)))
}

#[wasm_bindgen(js_name = catalog)]
pub fn js_catalog() -> Result<String, JsError> {
    catalog_json().map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = eigenvalue)]
pub fn js_eigenvalue(space: &str, json: bool) -> Result<String, JsError> {
    eigenvalue_report(space, json).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = spectrum)]
pub fn js_spectrum(space: &str, cutoff: &str, json: bool) -> Result<String, JsError> {
    spectrum_report(space, cutoff, json).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = verify)]
pub fn js_verify(space: &str) -> Result<String, JsError> {
    verify_report(space).map_err(|e| JsError::new(&e))
}
