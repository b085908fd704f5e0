//! Presenting `A` as a colon quotient of an algebra with the WLP.

use rand::Rng;
use serde::{Deserialize, Serialize};

use super::{
    ci_degree_criterion, gamma_criterion_values, transfer_wlp, wlp_by_ranks_with, LefschetzReport,
    QuotientChainReport,
};
use crate::algebra::ideal::codim3_parts;
use crate::algebra::{
    build_algebra, build_gamma_algebra, ci_tilde_ideal, quotient_by_ideal, same_defining_ideal,
    GradedAlgebra, IdealDescription,
};
use crate::error::{Error, Result};
use crate::linalg::EchelonBasis;
use num_traits::{One, Zero};

use crate::poly::{Monomial, SparsePoly, Q};
use crate::semigroup::{compute_beta_gamma_with, NumericalSemigroup};

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CiQuotientReport {
    pub gamma: Vec<u32>,
    pub socle_degree: u32,
    pub gamma_criterion: bool,
    /// Length of the colon step; 0 when `A` itself has the WLP.
    pub c: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub e: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub b_generators: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub b_degree_criterion: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub b_gamma_criterion: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub colon_generator: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub colon_is_principal: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub identification_verified: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub chain: Option<QuotientChainReport>,
}

/// Quotient condition for a complete intersection Apéry algebra.
pub fn quotient_condition_ci<R: Rng + ?Sized>(
    sg: &NumericalSemigroup,
    rng: &mut R,
) -> Result<CiQuotientReport> {
    let table = sg.apery_set();
    let frame = compute_beta_gamma_with(sg, &table);
    if !frame.is_complete_intersection() || frame.codim() == 0 {
        return Err(Error::NotCi);
    }
    quotient_condition_ci_from_ideal(&ci_tilde_ideal(&frame), &frame.gamma, rng)
}

/// The same construction from `Ĩ = (x_2^{γ_2+1}, f_3, …, f_n)` and `γ`,
/// so that frames without a semigroup can be exercised.
pub fn quotient_condition_ci_from_ideal<R: Rng + ?Sized>(
    ideal: &IdealDescription,
    gamma: &[u32],
    rng: &mut R,
) -> Result<CiQuotientReport> {
    if gamma.is_empty() || ideal.generators.len() != gamma.len() {
        return Err(Error::NotCi);
    }
    let top: u32 = gamma.iter().sum();
    let report = CiQuotientReport {
        gamma: gamma.to_vec(),
        socle_degree: top,
        gamma_criterion: gamma_criterion_values(gamma, top),
        c: 0,
        n: None,
        e: None,
        b_generators: None,
        b_degree_criterion: None,
        b_gamma_criterion: None,
        colon_generator: None,
        colon_is_principal: None,
        identification_verified: None,
        chain: None,
    };
    if report.gamma_criterion {
        return Ok(report);
    }
    build_chain(report, ideal, gamma, rng)
}

/// Builds `B = K[x]/(x_2^N, f_3, …, f_n)` and the colon chain even when the
/// γ criterion already gives the WLP of `A`.
pub fn quotient_condition_ci_forced<R: Rng + ?Sized>(
    ideal: &IdealDescription,
    gamma: &[u32],
    rng: &mut R,
) -> Result<CiQuotientReport> {
    let mut report = quotient_condition_ci_from_ideal(ideal, gamma, rng)?;
    if report.chain.is_none() {
        report = build_chain(report, ideal, gamma, rng)?;
    }
    Ok(report)
}

fn build_chain<R: Rng + ?Sized>(
    mut report: CiQuotientReport,
    ideal: &IdealDescription,
    gamma: &[u32],
    rng: &mut R,
) -> Result<CiQuotientReport> {
    let top = report.socle_degree;
    let vars = ideal.var_list();
    let nv = vars.len();
    let n = top - gamma[0];
    let e = top - gamma[0] + n - 1;
    let c = n - gamma[0] - 1;
    let mut x2n = vec![0; nv];
    x2n[0] = n;
    let mut b_gens = vec![SparsePoly::monomial(vars.clone(), Monomial(x2n), Q::one())];
    b_gens.extend(ideal.generators[1..].iter().cloned());
    let a = quotient_by_ideal(vars.clone(), &ideal.generators)?;
    let b = quotient_by_ideal(vars.clone(), &b_gens)?;
    let mut b_degrees: Vec<u32> = vec![n];
    b_degrees.extend(gamma[1..].iter().map(|g| g + 1));
    let mut b_gamma = vec![n - 1];
    b_gamma.extend_from_slice(&gamma[1..]);
    let mut generator = vec![0; nv];
    generator[0] = gamma[0] + 1;
    let generator = Monomial(generator);
    let colon = b.colon_subspaces(0, c as usize)?;
    let chain = transfer_wlp(&b, &[(0, c)], rng)?;
    let final_alg = chain.final_algebra().expect("the chain has c > 0 steps");
    report.c = c;
    report.n = Some(n);
    report.e = Some(e);
    report.b_generators = Some(b_gens.iter().map(|g| g.to_string()).collect());
    report.b_degree_criterion = Some(ci_degree_criterion(&b_degrees)?);
    report.b_gamma_criterion = Some(gamma_criterion_values(&b_gamma, e));
    report.colon_generator = Some(generator.format(&vars));
    report.colon_is_principal = Some(
        principal_monomial_ideal(&b, &generator)
            .iter()
            .zip(&colon)
            .all(|(p, q)| p.same_span(q)),
    );
    report.identification_verified = Some(
        same_defining_ideal(final_alg, &a, e as usize + 1) && final_alg.hilbert() == a.hilbert(),
    );
    report.chain = Some(chain);
    Ok(report)
}

/// Degree components of the ideal `m·A` for a monomial `m`.
fn principal_monomial_ideal(alg: &GradedAlgebra, m: &Monomial) -> Vec<EchelonBasis> {
    let shift = m.degree() as usize;
    (0..=alg.socle_degree())
        .map(|d| {
            let mut span = EchelonBasis::new(alg.dim_at(d));
            if d >= shift {
                let src = alg.dim_at(d - shift);
                for i in 0..src {
                    let mut v = vec![Q::zero(); src];
                    v[i] = Q::one();
                    span.insert(&multiply_by_monomial(alg, m, d - shift, v));
                }
            }
            span
        })
        .collect()
}

/// `m·v` for `v ∈ A_d`, assuming `d + deg m` does not exceed the socle degree.
fn multiply_by_monomial(alg: &GradedAlgebra, m: &Monomial, d: usize, mut v: Vec<Q>) -> Vec<Q> {
    let mut deg = d;
    for (j, &e) in m.0.iter().enumerate() {
        for _ in 0..e {
            v = alg.var_matrix(deg, j).mul_vec(&v);
            deg += 1;
        }
    }
    v
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Codim3QuotientReport {
    pub ideal: IdealDescription,
    pub g_hilbert: Vec<usize>,
    pub a_hilbert: Vec<usize>,
    /// `ci_degree_criterion` on the degrees `γ_i + 1` of `Ĩ`.
    pub g_degree_criterion: bool,
    pub g_wlp: LefschetzReport,
    /// `G/(0 : z^C)` and the Apéry algebra agree label by label.
    pub identification_verified: bool,
    /// `(0 : z^C)` is spanned by the box monomials divisible by `z^{h3}y^{h2}` or `z^{h3}w^{h4}`.
    pub colon_matches_monomials: bool,
    pub chain: QuotientChainReport,
}

/// `A = G/(0 : z^C)` for a 4-generated M-pure symmetric non-CI semigroup.
pub fn quotient_condition_codim3<R: Rng + ?Sized>(
    sg: &NumericalSemigroup,
    rng: &mut R,
) -> Result<Codim3QuotientReport> {
    let (frame, ideal) = codim3_parts(sg)?;
    let c = ideal.c.expect("codim-3 data");
    let h = ideal.h.expect("codim-3 data");
    let g = build_gamma_algebra(&frame)?;
    let a = build_algebra(&sg.apery_set());
    let (colon, quotient) = g.colon_by_power(1, c)?;

    // label-by-label identification through semigroup values
    let mut identification = quotient.len() == a.len() && quotient.hilbert() == a.hilbert();
    if identification {
        let pos = |alg: &crate::algebra::MonomialAlgebra, v: u64| {
            alg.labels().iter().position(|l| l.value == Some(v))
        };
        let map: Option<Vec<usize>> = quotient
            .labels()
            .iter()
            .map(|l| pos(&a, l.value.unwrap()))
            .collect();
        identification = match map {
            Some(map) => (0..quotient.len()).all(|i| {
                quotient.labels()[i].degree == a.labels()[map[i]].degree
                    && (0..quotient.len()).all(|j| {
                        quotient.product(i, j).map(|p| map[p]) == a.product(map[i], map[j])
                    })
            }),
            None => false,
        };
    }

    let divisible = |e: &[u32]| (e[0] >= h[0] && e[1] >= h[1]) || (e[1] >= h[1] && e[2] >= h[2]);
    let expected: Vec<usize> = (0..g.len())
        .filter(|&i| divisible(&g.labels()[i].exponents))
        .collect();
    let colon_matches_monomials = expected == colon.indices;

    let degrees: Vec<u32> = frame.gamma.iter().map(|x| x + 1).collect();
    let g_graded = g.to_graded();
    let g_wlp = wlp_by_ranks_with(&g_graded, rng);
    let chain = transfer_wlp(&g_graded, &[(1, c)], rng)?;
    Ok(Codim3QuotientReport {
        g_hilbert: g.hilbert(),
        a_hilbert: a.hilbert(),
        g_degree_criterion: ci_degree_criterion(&degrees)?,
        g_wlp,
        identification_verified: identification,
        colon_matches_monomials,
        chain,
        ideal,
    })
}
