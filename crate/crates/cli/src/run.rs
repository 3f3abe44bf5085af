//! Command implementations, returning documents rather than printing, so
//! the binary stays a thin shell and tests can call straight in.

use std::fmt::Write as _;

use num_traits::Zero;
use polysign::budan::budan_bound;
use polysign::isolation::{isolate_real_roots, refine, RootLocation};
use polysign::sign_rules::{de_gua_blocks, descartes_report};
use polysign::sturm::exact_root_counts;
use polysign::{Polynomial, Rational};

use crate::document::{
    AnalysisDocument, BlockEntry, BudanSection, DeGuaSection, DescartesSection, ExactSection,
    RootEntry,
};
use crate::parse::{parse_polynomial, parse_rational, ParseError};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    /// Malformed arguments; exit status 2.
    Usage(String),
    /// Well-formed input outside a command precondition; exit status 1.
    Domain(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Domain(_) => 1,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Domain(m) => f.write_str(m),
        }
    }
}

impl std::error::Error for CliError {}

impl From<ParseError> for CliError {
    fn from(e: ParseError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<polysign::Error> for CliError {
    fn from(e: polysign::Error) -> Self {
        CliError::Domain(e.to_string())
    }
}

/// The sections every subcommand reports: counts plus the sign-based bounds.
fn base_document(p: &Polynomial) -> Result<AnalysisDocument, CliError> {
    let report = descartes_report(p)?;
    let blocks = de_gua_blocks(p)?;
    Ok(AnalysisDocument {
        input: p.to_string(),
        degree: report.counts.degree,
        z0: report.counts.zero_roots,
        v: report.counts.alternations,
        c: report.counts.permanences,
        descartes: DescartesSection {
            positive_upper: report.positive_upper,
            negative_upper: report.negative_upper,
            positive_parity: report.positive_parity,
            negative_parity: report.negative_parity,
        },
        de_gua: DeGuaSection {
            imaginary_lower: report.imaginary_lower,
            blocks: blocks
                .iter()
                .map(|b| BlockEntry {
                    left_sign: b.left_sign.to_string(),
                    right_sign: b.right_sign.to_string(),
                    zero_run: b.zero_run,
                    loss: b.loss,
                })
                .collect(),
        },
        budan: None,
        exact: None,
        roots: None,
    })
}

pub fn run_analyze(poly: &str, exact: bool) -> Result<AnalysisDocument, CliError> {
    let p = parse_polynomial(poly)?;
    let mut doc = base_document(&p)?;
    if exact {
        let counts = exact_root_counts(&p)?;
        doc.exact = Some(ExactSection {
            positive: counts.positive,
            negative: counts.negative,
            zero: counts.zero,
        });
    }
    Ok(doc)
}

pub fn run_budan(poly: &str, a: &str, b: &str) -> Result<AnalysisDocument, CliError> {
    let p = parse_polynomial(poly)?;
    let a = parse_rational(a)?;
    let b = parse_rational(b)?;
    if a > b {
        return Err(CliError::Usage(format!("interval out of order: {a} > {b}")));
    }
    let mut doc = base_document(&p)?;
    let report = budan_bound(&p, &a, &b)?;
    doc.budan = Some(BudanSection {
        a: a.to_string(),
        b: b.to_string(),
        v_at_a: report.v_at_a,
        v_at_b: report.v_at_b,
        bound: report.bound,
        parity: report.parity,
    });
    Ok(doc)
}

pub fn run_isolate(poly: &str, width: Option<&str>) -> Result<AnalysisDocument, CliError> {
    let p = parse_polynomial(poly)?;
    let width = match width {
        Some(text) => {
            let w = parse_rational(text)?;
            if w <= Rational::zero() {
                return Err(CliError::Usage("width must be positive".into()));
            }
            Some(w)
        }
        None => None,
    };
    let mut doc = base_document(&p)?;
    let mut roots = isolate_real_roots(&p)?;
    if let Some(w) = &width {
        roots = roots
            .iter()
            .map(|r| refine(r, &p, w))
            .collect::<Result<_, _>>()?;
    }
    doc.roots = Some(
        roots
            .iter()
            .map(|r| match &r.location {
                RootLocation::Point(point) => RootEntry::Point {
                    point: point.to_string(),
                    multiplicity: r.multiplicity,
                },
                RootLocation::Interval { low, high } => RootEntry::Interval {
                    low: low.to_string(),
                    high: high.to_string(),
                    multiplicity: r.multiplicity,
                },
            })
            .collect(),
    );
    Ok(doc)
}

pub fn render_text(doc: &AnalysisDocument) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "polynomial: {}", doc.input);
    let _ = writeln!(
        out,
        "degree {} | zero roots {} | alternations {} | permanences {}",
        doc.degree, doc.z0, doc.v, doc.c
    );
    let _ = writeln!(
        out,
        "positive roots: at most {} (parity {})",
        doc.descartes.positive_upper, doc.descartes.positive_parity
    );
    let _ = writeln!(
        out,
        "negative roots: at most {} (parity {})",
        doc.descartes.negative_upper, doc.descartes.negative_parity
    );
    let _ = writeln!(out, "non-real roots: at least {}", doc.de_gua.imaginary_lower);
    for b in &doc.de_gua.blocks {
        let _ = writeln!(
            out,
            "  zero run {} between {} and {}: loss {}",
            b.zero_run, b.left_sign, b.right_sign, b.loss
        );
    }
    if let Some(e) = &doc.exact {
        let _ = writeln!(
            out,
            "exact counts: {} positive, {} negative, {} zero",
            e.positive, e.negative, e.zero
        );
    }
    if let Some(b) = &doc.budan {
        let _ = writeln!(
            out,
            "interval ({}, {}]: variations {} -> {}, bound {} (parity {})",
            b.a, b.b, b.v_at_a, b.v_at_b, b.bound, b.parity
        );
    }
    if let Some(roots) = &doc.roots {
        if roots.is_empty() {
            let _ = writeln!(out, "roots: none");
        } else {
            let _ = writeln!(out, "roots:");
            for r in roots {
                match r {
                    RootEntry::Point { point, multiplicity } => {
                        let _ = writeln!(out, "  = {point}  multiplicity {multiplicity}");
                    }
                    RootEntry::Interval {
                        low,
                        high,
                        multiplicity,
                    } => {
                        let _ = writeln!(out, "  ({low}, {high}]  multiplicity {multiplicity}");
                    }
                }
            }
        }
    }
    out
}
