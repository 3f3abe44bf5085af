//! The report document shared by every subcommand. Serialized as JSON with
//! rationals as exact `p/q` strings and signs as `+`/`-`; sections a command
//! does not fill are omitted entirely.

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisDocument {
    /// Normalized polynomial, descending powers.
    pub input: String,
    pub degree: usize,
    /// Multiplicity of the root at zero.
    pub z0: usize,
    /// Sign alternations.
    pub v: usize,
    /// Sign permanences.
    pub c: usize,
    pub descartes: DescartesSection,
    pub de_gua: DeGuaSection,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub budan: Option<BudanSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exact: Option<ExactSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub roots: Option<Vec<RootEntry>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DescartesSection {
    pub positive_upper: usize,
    pub negative_upper: usize,
    pub positive_parity: usize,
    pub negative_parity: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeGuaSection {
    pub imaginary_lower: usize,
    pub blocks: Vec<BlockEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockEntry {
    pub left_sign: String,
    pub right_sign: String,
    pub zero_run: usize,
    pub loss: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BudanSection {
    pub a: String,
    pub b: String,
    pub v_at_a: usize,
    pub v_at_b: usize,
    pub bound: usize,
    pub parity: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExactSection {
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
}

/// A root location: hit exactly, or bracketed by a half-open interval.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RootEntry {
    Point { point: String, multiplicity: usize },
    Interval {
        low: String,
        high: String,
        multiplicity: usize,
    },
}
