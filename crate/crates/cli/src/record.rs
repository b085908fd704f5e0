//! The persisted report schema.

use std::collections::BTreeMap;

use anyhow::{bail, ensure, Result};
use apery_core::lefschetz::{CiQuotientReport, Codim3QuotientReport, ConjectureReport};
use apery_core::semigroup::BoxReport;
use apery_core::{IdealDescription, LefschetzReport, Verdict};
use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Source {
    Semigroup {
        generators: Vec<u64>,
    },
    Dual {
        polynomial: String,
        variables: Vec<String>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Classification {
    MonomialCi,
    Ci,
    Codim3Structured,
    Other,
}

impl Classification {
    pub fn as_str(self) -> &'static str {
        match self {
            Classification::MonomialCi => "monomial-CI",
            Classification::Ci => "CI",
            Classification::Codim3Structured => "codim3-structured",
            Classification::Other => "other",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AperyEntry {
    pub element: u64,
    pub order: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Frame {
    pub beta: Vec<u32>,
    pub gamma: Vec<u32>,
    pub rho: Vec<u32>,
}

/// Where the defining ideal came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum IdealSource {
    Binomial,
    Codim3Construction,
    LinearAlgebra,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SemigroupSection {
    pub multiplicity: u64,
    pub frobenius: i64,
    pub apery: Vec<AperyEntry>,
    pub m_pure_symmetric: bool,
    pub frame: Frame,
    pub boxes: BoxReport,
    pub classification: Classification,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PropertySection {
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ranks: Option<LefschetzReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hessian: Option<LefschetzReport>,
}

impl PropertySection {
    /// Combines the verdicts of the methods that ran. A certified verdict
    /// beats an inconclusive one; two certified verdicts must agree.
    pub fn new(ranks: Option<LefschetzReport>, hessian: Option<LefschetzReport>) -> Result<Self> {
        let verdicts: Vec<Verdict> = ranks.iter().chain(&hessian).map(|r| r.verdict).collect();
        let decided: Vec<Verdict> = verdicts
            .iter()
            .copied()
            .filter(|v| *v != Verdict::Inconclusive)
            .collect();
        ensure!(
            decided.windows(2).all(|w| w[0] == w[1]),
            "rank and Hessian methods disagree"
        );
        let verdict = decided.first().copied().unwrap_or(Verdict::Inconclusive);
        Ok(PropertySection {
            verdict,
            ranks,
            hessian,
        })
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum QuotientSection {
    Ci(Box<CiQuotientReport>),
    Codim3(Box<Codim3QuotientReport>),
}

impl QuotientSection {
    /// Verdict for the last algebra of the chain (the Apéry algebra itself
    /// when no chain was needed).
    pub fn final_wlp(&self) -> Option<Verdict> {
        match self {
            QuotientSection::Ci(r) => r.chain.as_ref().map(|c| c.final_wlp),
            QuotientSection::Codim3(r) => Some(r.chain.final_wlp),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ReportRecord {
    pub schema_version: u32,
    /// Canonical key: the reduced generator tuple, or the polynomial text.
    pub key: String,
    pub source: Source,
    pub seed: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub semigroup: Option<SemigroupSection>,
    pub hilbert: Vec<usize>,
    pub socle_degree: usize,
    pub gorenstein: bool,
    /// `F` with every coefficient 1 (contraction pairing).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dual_generator: Option<String>,
    /// The generator Hessians are taken of (differentiation pairing).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub differential_generator: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ideal_source: Option<IdealSource>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub defining_ideal: Option<IdealDescription>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wlp: Option<PropertySection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub slp: Option<PropertySection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hess1_zero: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub quotient_chain: Option<QuotientSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub conjecture: Option<ConjectureReport>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    /// Stage name to elapsed microseconds; only with `--timings`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timings: Option<BTreeMap<String, u64>>,
}

impl ReportRecord {
    pub fn generators(&self) -> Option<&[u64]> {
        match &self.source {
            Source::Semigroup { generators } => Some(generators),
            Source::Dual { .. } => None,
        }
    }

    pub fn to_json_line(&self) -> Result<String> {
        Ok(serde_json::to_string(self)?)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let record: ReportRecord = serde_json::from_str(text)?;
        record.validate()?;
        Ok(record)
    }

    /// Internal consistency of a (possibly re-parsed) record.
    pub fn validate(&self) -> Result<()> {
        ensure!(
            self.schema_version == SCHEMA_VERSION,
            "unsupported schema version {}",
            self.schema_version
        );
        ensure!(!self.hilbert.is_empty(), "empty Hilbert function");
        ensure!(
            self.socle_degree + 1 == self.hilbert.len(),
            "socle degree does not match the Hilbert function"
        );
        match (&self.source, &self.semigroup) {
            (Source::Semigroup { generators }, Some(s)) => {
                ensure!(
                    self.key == apery_core::semigroup::canonical_key(generators),
                    "key does not match generators"
                );
                ensure!(
                    generators.first() == Some(&s.multiplicity),
                    "multiplicity is not the first generator"
                );
                ensure!(
                    s.apery.len() as u64 == s.multiplicity,
                    "Apéry set has the wrong size"
                );
                ensure!(
                    self.hilbert.iter().sum::<usize>() as u64 == s.multiplicity,
                    "Hilbert function does not sum to the multiplicity"
                );
                ensure!(
                    s.frame.beta.len() + 1 == generators.len(),
                    "frame has the wrong length"
                );
            }
            (Source::Semigroup { .. }, None) => bail!("semigroup record without semigroup data"),
            (Source::Dual { polynomial, .. }, _) => {
                ensure!(&self.key == polynomial, "key does not match the polynomial");
            }
        }
        if self.gorenstein {
            let rev: Vec<usize> = self.hilbert.iter().rev().copied().collect();
            ensure!(
                rev == self.hilbert,
                "Gorenstein record with a non-symmetric Hilbert function"
            );
        }
        for section in self.wlp.iter().chain(&self.slp) {
            ensure!(
                section.ranks.is_some() || section.hessian.is_some(),
                "property section without reports"
            );
        }
        Ok(())
    }
}
