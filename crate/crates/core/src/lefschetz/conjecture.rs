//! Experimental check: does every `A/(0 : x_l)` keep the WLP?

use rand::Rng;
use serde::{Deserialize, Serialize};

use super::{wlp_by_ranks_with, LefschetzReport, Verdict};
use crate::algebra::build_algebra;
use crate::error::{Error, Result};
use crate::semigroup::{compute_beta_gamma_with, NumericalSemigroup};

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ConjectureQuotient {
    pub variable: String,
    pub hilbert: Vec<usize>,
    pub gorenstein: bool,
    pub wlp: LefschetzReport,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ConjectureReport {
    pub generators: Vec<u64>,
    pub complete_intersection: bool,
    pub quotients: Vec<ConjectureQuotient>,
    /// Some quotient was found to fail the WLP.
    pub counterexample: bool,
    /// Some quotient could not be decided with certainty.
    pub undecided: bool,
}

/// Runs the rank method on `A/(0 : x_l)` for every variable, for complete
/// intersections and codimension 3.
pub fn conjecture_check<R: Rng + ?Sized>(
    sg: &NumericalSemigroup,
    rng: &mut R,
) -> Result<ConjectureReport> {
    let table = sg.apery_set();
    let frame = compute_beta_gamma_with(sg, &table);
    let ci = frame.is_complete_intersection();
    if !ci && sg.embedding_dimension() != 4 {
        return Err(Error::NotApplicable(format!(
            "{sg} is neither a complete intersection nor of codimension 3"
        )));
    }
    let alg = build_algebra(&table);
    let mut quotients = Vec::new();
    for l in 0..alg.vars().len() {
        let (_, q) = alg.colon_by_power(l, 1)?;
        let q = q.to_graded();
        quotients.push(ConjectureQuotient {
            variable: alg.vars()[l].clone(),
            hilbert: q.hilbert(),
            gorenstein: q.is_gorenstein(),
            wlp: wlp_by_ranks_with(&q, rng),
        });
    }
    Ok(ConjectureReport {
        generators: sg.generators().to_vec(),
        complete_intersection: ci,
        counterexample: quotients.iter().any(|q| q.wlp.verdict == Verdict::Fails),
        undecided: quotients
            .iter()
            .any(|q| q.wlp.verdict == Verdict::Inconclusive),
        quotients,
    })
}
