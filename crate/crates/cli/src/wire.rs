//! JSON wire formats.
//!
//! Chain documents are `{"dim": m, "mode": "integer"|"real",
//! "coefficients": [[simplex_index, value], ...]}` with entries in
//! ascending canonical index order; cochains mirror that shape without the
//! mode. Floats serialize in shortest-round-trip decimal form, so identical
//! values produce identical bytes on every platform.

use std::fmt;

use curr_core::{
    Chain, ChainError, Coefficient, ComplexScalar, Cochain, FlatDecomposition, FlatMode, IntChain,
    LipschitzReport, MeanEstimate, RealChain, ShiftInvarianceReport, SimplicialComplex,
    ValidationReport,
};
use serde::{Deserialize, Serialize};
use serde_json::Number;

#[derive(Debug)]
pub struct WireError(pub String);

impl fmt::Display for WireError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl std::error::Error for WireError {}

impl From<ChainError> for WireError {
    fn from(e: ChainError) -> Self {
        WireError(e.to_string())
    }
}

/// A chain in either coefficient mode, as read from or written to JSON.
#[derive(Clone, Debug, PartialEq)]
pub enum AnyChain {
    Integer(IntChain),
    Real(RealChain),
}

impl AnyChain {
    pub fn dim(&self) -> usize {
        match self {
            AnyChain::Integer(c) => c.dim(),
            AnyChain::Real(c) => c.dim(),
        }
    }

    pub fn mode_name(&self) -> &'static str {
        match self {
            AnyChain::Integer(_) => "integer",
            AnyChain::Real(_) => "real",
        }
    }

    pub fn as_integer(&self) -> Option<&IntChain> {
        match self {
            AnyChain::Integer(c) => Some(c),
            AnyChain::Real(_) => None,
        }
    }

    pub fn validate(&self, complex: &SimplicialComplex) -> Result<(), ChainError> {
        match self {
            AnyChain::Integer(c) => complex.validate_chain(c),
            AnyChain::Real(c) => complex.validate_chain(c),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ChainDoc {
    pub dim: usize,
    pub mode: String,
    pub coefficients: Vec<(usize, Number)>,
}

fn real_number(v: f64) -> Result<Number, WireError> {
    Number::from_f64(v).ok_or_else(|| WireError(format!("non-finite coefficient {v}")))
}

pub fn chain_to_doc(chain: &AnyChain) -> Result<ChainDoc, WireError> {
    let coefficients = match chain {
        AnyChain::Integer(c) => c
            .iter()
            .map(|(index, v)| Ok((index, Number::from(v))))
            .collect::<Result<Vec<_>, WireError>>()?,
        AnyChain::Real(c) => c
            .iter()
            .map(|(index, v)| Ok((index, real_number(v)?)))
            .collect::<Result<Vec<_>, WireError>>()?,
    };
    Ok(ChainDoc {
        dim: chain.dim(),
        mode: chain.mode_name().to_string(),
        coefficients,
    })
}

pub fn chain_from_doc(doc: &ChainDoc) -> Result<AnyChain, WireError> {
    match doc.mode.as_str() {
        "integer" => {
            let mut chain = IntChain::zero(doc.dim);
            for (index, number) in &doc.coefficients {
                let v = number.as_i64().ok_or_else(|| {
                    WireError(format!(
                        "coefficient {number} at index {index} is not a 64-bit integer (mode is integer)"
                    ))
                })?;
                chain.add_term(*index, v)?;
            }
            Ok(AnyChain::Integer(chain))
        }
        "real" => {
            let mut chain = RealChain::zero(doc.dim);
            for (index, number) in &doc.coefficients {
                let v = number.as_f64().ok_or_else(|| {
                    WireError(format!("coefficient {number} at index {index} is not a real"))
                })?;
                chain.add_term(*index, v)?;
            }
            Ok(AnyChain::Real(chain))
        }
        other => Err(WireError(format!(
            "unknown chain mode `{other}` (expected `integer` or `real`)"
        ))),
    }
}

pub fn chain_from_str(text: &str) -> Result<AnyChain, WireError> {
    let doc: ChainDoc =
        serde_json::from_str(text).map_err(|e| WireError(format!("bad chain JSON: {e}")))?;
    chain_from_doc(&doc)
}

/// Conversion from typed chains without going through `AnyChain` clones.
pub trait FromTyped<C: Coefficient>: Sized {
    fn from_typed(chain: &Chain<C>) -> Result<Self, WireError>;
}

impl FromTyped<i64> for ChainDoc {
    fn from_typed(chain: &Chain<i64>) -> Result<Self, WireError> {
        Ok(ChainDoc {
            dim: chain.dim(),
            mode: "integer".to_string(),
            coefficients: chain.iter().map(|(i, v)| (i, Number::from(v))).collect(),
        })
    }
}

impl FromTyped<f64> for ChainDoc {
    fn from_typed(chain: &Chain<f64>) -> Result<Self, WireError> {
        Ok(ChainDoc {
            dim: chain.dim(),
            mode: "real".to_string(),
            coefficients: chain
                .iter()
                .map(|(i, v)| Ok((i, real_number(v)?)))
                .collect::<Result<Vec<_>, WireError>>()?,
        })
    }
}

/// Cochain JSON mirrors the chain document with real values and no mode.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CochainDoc {
    pub dim: usize,
    pub coefficients: Vec<(usize, f64)>,
}

pub fn cochain_to_doc(k: &Cochain) -> CochainDoc {
    CochainDoc {
        dim: k.dim(),
        coefficients: k.iter().collect(),
    }
}

pub fn cochain_from_doc(doc: &CochainDoc) -> Result<Cochain, WireError> {
    for (_, v) in &doc.coefficients {
        if !v.is_finite() {
            return Err(WireError(format!("non-finite cochain value {v}")));
        }
    }
    Ok(Cochain::from_entries(
        doc.dim,
        doc.coefficients.iter().copied(),
    ))
}

pub fn cochain_from_str(text: &str) -> Result<Cochain, WireError> {
    let doc: CochainDoc =
        serde_json::from_str(text).map_err(|e| WireError(format!("bad cochain JSON: {e}")))?;
    cochain_from_doc(&doc)
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FlatDoc {
    pub value: f64,
    pub mode: String,
    #[serde(rename = "R")]
    pub r: ChainDoc,
    #[serde(rename = "S")]
    pub s: ChainDoc,
}

pub fn flat_to_doc<C: Coefficient>(
    decomposition: &FlatDecomposition<C>,
    mode: FlatMode,
) -> Result<FlatDoc, WireError>
where
    ChainDoc: FromTyped<C>,
{
    Ok(FlatDoc {
        value: decomposition.value,
        mode: mode.to_string(),
        r: ChainDoc::from_typed(&decomposition.r)?,
        s: ChainDoc::from_typed(&decomposition.s)?,
    })
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ComplexNumberDoc {
    pub re: f64,
    pub im: f64,
}

impl From<ComplexScalar> for ComplexNumberDoc {
    fn from(z: ComplexScalar) -> Self {
        Self { re: z.re, im: z.im }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MeanDoc {
    pub strategy: String,
    pub lambda: Vec<f64>,
    pub shifts: Vec<ChainDoc>,
    pub mean: ComplexNumberDoc,
    pub epsilon: f64,
    pub certified_on: String,
    pub probe_count: usize,
}

pub fn mean_to_doc(estimate: &MeanEstimate, shifts: &[IntChain]) -> Result<MeanDoc, WireError> {
    Ok(MeanDoc {
        strategy: estimate.strategy.to_string(),
        lambda: estimate.lambda.clone(),
        shifts: shifts
            .iter()
            .map(ChainDoc::from_typed)
            .collect::<Result<Vec<_>, WireError>>()?,
        mean: estimate.mean.into(),
        epsilon: estimate.epsilon,
        certified_on: "probe set".to_string(),
        probe_count: estimate.probe_count,
    })
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ShiftCheckDoc {
    pub mean_difference: f64,
    pub tolerance: f64,
    pub pass: bool,
    pub original: MeanDoc,
    pub shifted: MeanDoc,
}

pub fn shift_check_to_doc(
    report: &ShiftInvarianceReport,
    shifts: &[IntChain],
) -> Result<ShiftCheckDoc, WireError> {
    Ok(ShiftCheckDoc {
        mean_difference: report.mean_difference,
        tolerance: report.tolerance,
        pass: report.pass,
        original: mean_to_doc(&report.original, shifts)?,
        shifted: mean_to_doc(&report.shifted, shifts)?,
    })
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ValidationCheckDoc {
    pub name: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dim: Option<usize>,
    pub pass: bool,
    #[serde(skip_serializing_if = "String::is_empty", default)]
    pub detail: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ValidationDoc {
    pub pass: bool,
    pub checks: Vec<ValidationCheckDoc>,
}

pub fn validation_to_doc(report: &ValidationReport) -> ValidationDoc {
    ValidationDoc {
        pass: report.pass,
        checks: report
            .checks
            .iter()
            .map(|c| ValidationCheckDoc {
                name: c.name.to_string(),
                dim: c.dim,
                pass: c.pass,
                detail: c.detail.clone(),
            })
            .collect(),
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GkDoc {
    pub re: f64,
    pub im: f64,
    pub phase: f64,
    pub pairing: f64,
    pub flat_value: f64,
    pub mode: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct LipschitzDoc {
    pub bound: f64,
    pub max_ratio: f64,
    pub trials: usize,
    pub comparisons: usize,
    pub pass: bool,
    pub seed: u64,
    pub cap: f64,
    pub mode: String,
}

pub fn lipschitz_to_doc(report: &LipschitzReport, seed: u64, cap: f64, mode: FlatMode) -> LipschitzDoc {
    LipschitzDoc {
        bound: report.bound,
        max_ratio: report.max_ratio,
        trials: report.trials,
        comparisons: report.comparisons,
        pass: report.pass,
        seed,
        cap,
        mode: mode.to_string(),
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BasisDoc {
    pub dim: usize,
    pub rank: usize,
    pub basis: Vec<ChainDoc>,
}

/// Single-document output: pretty JSON plus a trailing newline.
pub fn render<T: Serialize>(value: &T) -> String {
    let mut out = serde_json::to_string_pretty(value).expect("serializable document");
    out.push('\n');
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chain_round_trip_integer() {
        let chain = AnyChain::Integer(IntChain::from_entries(1, [(0, 3), (2, -5)]).unwrap());
        let doc = chain_to_doc(&chain).unwrap();
        let text = render(&doc);
        let back = chain_from_str(&text).unwrap();
        assert_eq!(chain, back);
    }

    #[test]
    fn chain_round_trip_real() {
        let chain = AnyChain::Real(RealChain::from_entries(2, [(1, 0.5), (3, -1.25)]).unwrap());
        let doc = chain_to_doc(&chain).unwrap();
        let back = chain_from_str(&render(&doc)).unwrap();
        assert_eq!(chain, back);
    }

    #[test]
    fn integer_mode_rejects_fractional_values() {
        let text = r#"{"dim": 1, "mode": "integer", "coefficients": [[0, 1.5]]}"#;
        assert!(chain_from_str(text).is_err());
    }

    #[test]
    fn unknown_mode_rejected() {
        let text = r#"{"dim": 1, "mode": "rational", "coefficients": []}"#;
        assert!(chain_from_str(text).is_err());
    }

    #[test]
    fn cochain_round_trip() {
        let k = Cochain::from_entries(1, [(0, 2.0), (2, -0.5)]);
        let doc = cochain_to_doc(&k);
        let back = cochain_from_str(&render(&doc)).unwrap();
        assert_eq!(k, back);
    }
}
