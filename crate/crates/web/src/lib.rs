//! Browser bindings for the static demo page in `www/`.
//!
//! Each export takes and returns plain strings. The string-level logic lives
//! in [`demo`] so it can be tested off the browser.

use wasm_bindgen::prelude::*;

pub mod demo {
    use grove_kit::bases::{expand_forest, expand_grove, expand_multifundamental, grothendieck_to_grove, grove_polynomial};
    use grove_kit::json::BetaMode;
    use grove_kit::{BetaCoeff, BetaPolynomial, IndexedForest, Permutation, Result};

    /// Largest window the page accepts; larger ones are slow in a tab.
    pub const MAX_N: usize = 6;

    fn window(n: usize) -> Result<usize> {
        if (1..=MAX_N).contains(&n) {
            Ok(n)
        } else {
            Err(grove_kit::Error::Parse(format!("n must be between 1 and {MAX_N}")))
        }
    }

    pub fn grove(forest: &str, beta: &str) -> Result<String> {
        let f: IndexedForest = forest.parse()?;
        let beta: BetaMode = beta.parse()?;
        Ok(beta.apply(&grove_polynomial(&f)).to_string())
    }

    /// One `index ↦ coeff` line per term.
    pub fn expand(basis: &str, input: &str, n: usize, beta: &str) -> Result<String> {
        let f: BetaPolynomial = input.parse()?;
        let n = window(n)?;
        let beta: BetaMode = beta.parse()?;
        let e = match basis {
            "grove" => expand_grove(&f, n)?,
            "forest" => expand_forest(&f, n)?,
            "multifund" => expand_multifundamental(&f, n)?,
            other => return Err(grove_kit::Error::Parse(format!("unknown basis `{other}`"))),
        };
        let e = beta.apply_expansion(&e);
        if e.is_empty() {
            return Ok("0".into());
        }
        Ok(e.terms().map(|(k, c)| format!("{k} ↦ {c}")).collect::<Vec<_>>().join("\n"))
    }

    /// Lines `forest ↦ a*b^k` for the Grothendieck polynomial of `perm`.
    pub fn grothendieck(perm: &str, n: usize) -> Result<String> {
        let w: Permutation = perm.parse()?;
        let r = grothendieck_to_grove(&w, window(n)?)?;
        let len = w.length();
        let lines: Vec<String> = r
            .a
            .iter()
            .map(|(f, a)| format!("{f} ↦ {}", BetaCoeff::monomial((f.size() - len) as u32, a.clone())))
            .collect();
        Ok(lines.join("\n"))
    }
}

fn js(e: grove_kit::Error) -> JsError {
    JsError::new(&e.to_string())
}

/// Grove polynomial of a forest word such as `2,2,4`.
#[wasm_bindgen(js_name = grovePolynomial)]
pub fn grove_polynomial(forest: &str, beta: &str) -> Result<String, JsError> {
    demo::grove(forest, beta).map_err(js)
}

/// Expansion of a polynomial in the grove, forest or multifund basis.
#[wasm_bindgen]
pub fn expand(basis: &str, input: &str, n: usize, beta: &str) -> Result<String, JsError> {
    demo::expand(basis, input, n, beta).map_err(js)
}

/// Grove expansion of a Grothendieck polynomial.
#[wasm_bindgen(js_name = grothendieckToGrove)]
pub fn grothendieck_to_grove(perm: &str, n: usize) -> Result<String, JsError> {
    demo::grothendieck(perm, n).map_err(js)
}
