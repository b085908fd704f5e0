//! Weak and Strong Lefschetz properties: rank and Hessian decision
//! procedures, sufficient criteria for complete intersections, transfer
//! along colon quotients, and the quotient-condition constructions.

mod conjecture;
mod criteria;
mod hessian;
mod quotient;
mod ranks;
mod transfer;

use serde::{Deserialize, Serialize};

use crate::poly::Q;
use crate::polymatrix::{GenericRank, RankMethod};

pub use conjecture::{conjecture_check, ConjectureQuotient, ConjectureReport};
pub use criteria::{ci_degree_criterion, gamma_criterion, gamma_criterion_values};
pub use hessian::{slp_by_hessian, slp_by_hessian_with, wlp_by_hessian, wlp_by_hessian_with};
pub use quotient::{
    quotient_condition_ci, quotient_condition_ci_forced, quotient_condition_ci_from_ideal,
    quotient_condition_codim3, CiQuotientReport, Codim3QuotientReport,
};
pub use ranks::{
    slp_by_ranks, slp_by_ranks_with, verify_rank_witness, wlp_by_ranks, wlp_by_ranks_with,
};
pub use transfer::{transfer_wlp, ChainStep, QuotientChainReport, StepConclusion};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Property {
    Wlp,
    Slp,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Holds,
    Fails,
    Inconclusive,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Ranks,
    Hessian,
    Criterion,
}

/// One multiplication map `×L^power: A_from → A_{from+power}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MapEvidence {
    pub from_degree: usize,
    pub power: usize,
    pub rows: usize,
    pub cols: usize,
    pub required_rank: usize,
    pub generic_rank: usize,
    pub rank_method: RankMethod,
    /// Whether the verdict depends on this map.
    pub decisive: bool,
}

impl MapEvidence {
    pub fn maximal(&self) -> bool {
        self.generic_rank == self.required_rank
    }
}

/// One (mixed) Hessian `Hess^{d,t}(F)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HessianEvidence {
    pub d: usize,
    pub t: usize,
    pub rows: usize,
    pub cols: usize,
    pub required_rank: usize,
    pub generic_rank: usize,
    pub rank_method: RankMethod,
    /// For square Hessians: whether the determinant vanishes identically.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub determinant_zero: Option<bool>,
}

impl HessianEvidence {
    pub fn maximal(&self) -> bool {
        self.generic_rank == self.required_rank
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LefschetzReport {
    pub property: Property,
    pub verdict: Verdict,
    pub method: Method,
    pub gorenstein: bool,
    pub socle_degree: usize,
    pub k: usize,
    /// Coefficients of a Lefschetz element, as exact rationals.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub maps: Vec<MapEvidence>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub hessians: Vec<HessianEvidence>,
    /// Some rank is only a random lower bound.
    pub probabilistic: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl LefschetzReport {
    pub fn holds(&self) -> bool {
        self.verdict == Verdict::Holds
    }

    /// Witness coefficients parsed back to rationals.
    pub fn witness_values(&self) -> Option<Vec<Q>> {
        self.witness.as_ref().map(|w| {
            w.iter()
                .map(|s| s.parse().expect("witness is a rational"))
                .collect()
        })
    }
}

/// Verdict from decisive ranks: all maximal ⇒ holds; a deficiency backed
/// only by random draws ⇒ inconclusive; otherwise fails.
fn decide<'a>(ranks: impl IntoIterator<Item = (usize, &'a GenericRank)>) -> (Verdict, bool) {
    let mut verdict = Verdict::Holds;
    let mut probabilistic = false;
    for (required, r) in ranks {
        if r.rank == required {
            continue;
        }
        if r.certified() {
            verdict = Verdict::Fails;
        } else {
            probabilistic = true;
            if verdict == Verdict::Holds {
                verdict = Verdict::Inconclusive;
            }
        }
    }
    (verdict, probabilistic)
}

/// Random specializations tried when looking for a witness.
const WITNESS_ATTEMPTS: usize = 64;

fn rational_strings(v: &[Q]) -> Vec<String> {
    v.iter().map(|x| x.to_string()).collect()
}
