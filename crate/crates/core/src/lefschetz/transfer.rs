//! Passing the WLP from `G` to `G/(0 : x_l)`, one variable at a time.

use rand::Rng;
use serde::{Deserialize, Serialize};

use super::{wlp_by_ranks_with, LefschetzReport, Verdict};
use crate::algebra::GradedAlgebra;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StepConclusion {
    /// All hypotheses verified: the quotient has the WLP.
    Transferred,
    /// Some hypothesis fails; the direct check decides.
    Inconclusive,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ChainStep {
    pub step: usize,
    pub variable: String,
    pub hilbert_before: Vec<usize>,
    pub hilbert_after: Vec<usize>,
    pub socle_degree: usize,
    pub codim_equal: bool,
    pub odd_socle: bool,
    /// `dim G_{k−1} = dim G_k`, checked when the socle degree is even.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub middle_dims_equal: Option<bool>,
    /// The algebra being divided has the WLP (from the base check, the previous transfer, or a direct check).
    pub premise_wlp: bool,
    pub conclusion: StepConclusion,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub direct_check: Option<LefschetzReport>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct QuotientChainReport {
    pub base_hilbert: Vec<usize>,
    pub base_wlp: LefschetzReport,
    pub steps: Vec<ChainStep>,
    pub final_hilbert: Vec<usize>,
    /// Verdict for the last algebra of the chain.
    pub final_wlp: Verdict,
    /// The algebra reached after each step.
    #[serde(skip)]
    pub stages: Vec<GradedAlgebra>,
}

impl QuotientChainReport {
    pub fn final_algebra(&self) -> Option<&GradedAlgebra> {
        self.stages.last()
    }
}

/// Runs `A_{j+1} = A_j/(0 : x_l)` for every step, each `(l, c)` expanded
/// into `c` single-power steps.
pub fn transfer_wlp<R: Rng + ?Sized>(
    g: &GradedAlgebra,
    steps: &[(usize, u32)],
    rng: &mut R,
) -> Result<QuotientChainReport> {
    if !g.is_gorenstein() {
        return Err(Error::NotGorensteinAtStep(0));
    }
    let base_wlp = wlp_by_ranks_with(g, rng);
    let mut premise = base_wlp.verdict;
    let mut cur = g.clone();
    let mut out = Vec::new();
    let mut stages = Vec::new();
    let singles = steps
        .iter()
        .flat_map(|&(l, c)| std::iter::repeat_n(l, c as usize));
    for (index, l) in singles.enumerate() {
        if index > 0 && !cur.is_gorenstein() {
            return Err(Error::NotGorensteinAtStep(index));
        }
        if l >= cur.nvars() {
            return Err(Error::NoSuchVariable(l));
        }
        let (_, next) = cur.colon_by_power(l, 1)?;
        let top = cur.socle_degree();
        let k = top / 2;
        let codim_equal = next.codim() == cur.codim();
        let odd_socle = top % 2 == 1;
        let middle_dims_equal = (!odd_socle).then(|| k >= 1 && cur.dim_at(k - 1) == cur.dim_at(k));
        let hypotheses = codim_equal && (odd_socle || middle_dims_equal == Some(true));
        let (conclusion, direct_check) = if premise == Verdict::Holds && hypotheses {
            (StepConclusion::Transferred, None)
        } else {
            let direct = wlp_by_ranks_with(&next, rng);
            (StepConclusion::Inconclusive, Some(direct))
        };
        out.push(ChainStep {
            step: index + 1,
            variable: cur.vars()[l].clone(),
            hilbert_before: cur.hilbert(),
            hilbert_after: next.hilbert(),
            socle_degree: top,
            codim_equal,
            odd_socle,
            middle_dims_equal,
            premise_wlp: premise == Verdict::Holds,
            conclusion,
            direct_check: direct_check.clone(),
        });
        premise = direct_check.map_or(Verdict::Holds, |d| d.verdict);
        stages.push(next.clone());
        cur = next;
    }
    Ok(QuotientChainReport {
        base_hilbert: g.hilbert(),
        base_wlp,
        steps: out,
        final_hilbert: cur.hilbert(),
        final_wlp: premise,
        stages,
    })
}
