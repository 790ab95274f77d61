//! Textual specifications of built-in smooth forms and mean test functions.
//!
//! Forms (for `form discretize`):
//! - `const:<c1,c2,...>` — constant coefficients, one per ascending
//!   multi-index (`C(n, m)` components);
//! - `linear:<row;row;...>` — affine coefficients, one row per component,
//!   each row `c0,c1,...,cn` meaning `a(x) = c0 + c1·x1 + ... + cn·xn`.
//!
//! Mean functions (for `mean estimate` / `mean shiftcheck`):
//! - `constant:<re>[,<im>]`
//! - `parity`
//! - `phase` (cochain from `--cochain`)
//! - `gk` (cochain from `--cochain`, flat mode from `--mode`)

use curr_core::{AffineForm, Cochain, ComplexScalar, ConstantForm, FlatMode, FormField, FunctionSpec};

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut out = 1usize;
    for i in 0..k {
        out = out * (n - i) / (i + 1);
    }
    out
}

fn parse_floats(text: &str) -> Result<Vec<f64>, String> {
    text.split(',')
        .map(|token| {
            let token = token.trim();
            token
                .parse::<f64>()
                .map_err(|_| format!("bad number `{token}`"))
                .and_then(|v| {
                    if v.is_finite() {
                        Ok(v)
                    } else {
                        Err(format!("non-finite number `{token}`"))
                    }
                })
        })
        .collect()
}

/// Parses a `--form` specification for a degree-`degree` form on an
/// `ambient_dim`-dimensional complex.
pub fn parse_form(
    spec: &str,
    degree: usize,
    ambient_dim: usize,
) -> Result<Box<dyn FormField>, String> {
    let components = binomial(ambient_dim, degree);
    if let Some(body) = spec.strip_prefix("const:") {
        let values = parse_floats(body)?;
        if values.len() != components {
            return Err(format!(
                "degree-{degree} forms on R^{ambient_dim} need {components} components, got {}",
                values.len()
            ));
        }
        return Ok(Box::new(ConstantForm::new(degree, values)));
    }
    if let Some(body) = spec.strip_prefix("linear:") {
        let mut constant = Vec::new();
        let mut gradient = Vec::new();
        for row_text in body.split(';') {
            let row = parse_floats(row_text)?;
            if row.len() != ambient_dim + 1 {
                return Err(format!(
                    "each linear row needs {} entries (constant + gradient), got {}",
                    ambient_dim + 1,
                    row.len()
                ));
            }
            constant.push(row[0]);
            gradient.push(row[1..].to_vec());
        }
        if constant.len() != components {
            return Err(format!(
                "degree-{degree} forms on R^{ambient_dim} need {components} rows, got {}",
                constant.len()
            ));
        }
        return Ok(Box::new(AffineForm::new(degree, constant, gradient)));
    }
    Err(format!(
        "unknown form spec `{spec}` (expected `const:<components>` or `linear:<rows>`)"
    ))
}

/// Parses a `--function` specification; `phase` and `gk` consume the
/// cochain loaded from `--cochain`.
pub fn parse_function(
    spec: &str,
    cochain: Option<Cochain>,
    mode: FlatMode,
) -> Result<FunctionSpec, String> {
    if let Some(body) = spec.strip_prefix("constant:") {
        let values = parse_floats(body)?;
        return match values.as_slice() {
            [re] => Ok(FunctionSpec::Constant(ComplexScalar::real(*re))),
            [re, im] => Ok(FunctionSpec::Constant(ComplexScalar::new(*re, *im))),
            _ => Err("constant takes one or two components (re[,im])".to_string()),
        };
    }
    match spec {
        "parity" => Ok(FunctionSpec::Parity),
        "phase" => {
            let k = cochain.ok_or("function `phase` needs --cochain")?;
            Ok(FunctionSpec::Phase(k))
        }
        "gk" => {
            let k = cochain.ok_or("function `gk` needs --cochain")?;
            Ok(FunctionSpec::Gk { k, mode })
        }
        other => Err(format!(
            "unknown function `{other}` (expected constant:<c>, parity, phase, or gk)"
        )),
    }
}
