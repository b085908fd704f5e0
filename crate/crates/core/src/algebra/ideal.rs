//! Defining ideals: the binomial ideal `Ĩ`, its codimension-3 completion,
//! and a brute-force reconstruction from the multiplication data.

use std::collections::HashMap;
use std::sync::Arc;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::graded::GradedAlgebra;
use crate::algebra::monomial::gamma_relation;
use crate::error::{Error, Result};
use crate::linalg::{EchelonBasis, RatMatrix};
use crate::poly::{monomials_of_degree, var_list, Monomial, SparsePoly, Q};
use crate::semigroup::{compute_beta_gamma_with, variable_names, FrameData, NumericalSemigroup};

/// Largest algebra handed to [`brute_force_relations`].
pub const BRUTE_FORCE_LIMIT: usize = 200;

/// Highest degree [`quotient_by_ideal`] will expand before giving up.
pub const QUOTIENT_DEGREE_LIMIT: usize = 64;

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(try_from = "RawIdeal")]
pub struct IdealDescription {
    pub vars: Vec<String>,
    pub generators: Vec<SparsePoly>,
    pub degrees: Vec<u32>,
    /// The binomial part `Ĩ` (equal to `generators` outside codimension-3 reconstructions).
    pub tilde_generators: Vec<SparsePoly>,
    pub complete_intersection: bool,
    pub monomial: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rho: Option<Vec<u32>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mu: Option<[u32; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub h: Option<[u32; 3]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub c: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub omega_d: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub omega_e: Option<u64>,
}

impl IdealDescription {
    /// A bare generator list with no semigroup data attached.
    pub fn from_generators(
        vars: &[String],
        generators: Vec<SparsePoly>,
        complete_intersection: bool,
    ) -> Self {
        let degrees = generators.iter().map(|g| g.degree().unwrap_or(0)).collect();
        let monomial = generators.iter().all(|g| g.len() <= 1);
        IdealDescription {
            vars: vars.to_vec(),
            tilde_generators: generators.clone(),
            generators,
            degrees,
            complete_intersection,
            monomial,
            rho: None,
            mu: None,
            h: None,
            c: None,
            omega_d: None,
            omega_e: None,
        }
    }

    pub fn var_list(&self) -> Arc<[String]> {
        var_list(&self.vars)
    }

    pub fn generator_strings(&self) -> Vec<String> {
        self.generators.iter().map(|g| g.to_string()).collect()
    }
}

/// Serialized form: generators as text, parsed back against `vars`.
#[derive(Deserialize)]
struct RawIdeal {
    vars: Vec<String>,
    generators: Vec<String>,
    degrees: Vec<u32>,
    tilde_generators: Vec<String>,
    complete_intersection: bool,
    monomial: bool,
    rho: Option<Vec<u32>>,
    mu: Option<[u32; 2]>,
    h: Option<[u32; 3]>,
    c: Option<u32>,
    omega_d: Option<u64>,
    omega_e: Option<u64>,
}

impl TryFrom<RawIdeal> for IdealDescription {
    type Error = Error;

    fn try_from(raw: RawIdeal) -> Result<Self> {
        let vars = var_list(&raw.vars);
        let parse = |gens: &[String]| -> Result<Vec<SparsePoly>> {
            gens.iter()
                .map(|g| SparsePoly::parse_with_vars(g, vars.clone()))
                .collect()
        };
        Ok(IdealDescription {
            generators: parse(&raw.generators)?,
            tilde_generators: parse(&raw.tilde_generators)?,
            vars: raw.vars,
            degrees: raw.degrees,
            complete_intersection: raw.complete_intersection,
            monomial: raw.monomial,
            rho: raw.rho,
            mu: raw.mu,
            h: raw.h,
            c: raw.c,
            omega_d: raw.omega_d,
            omega_e: raw.omega_e,
        })
    }
}

fn monomial_index(nvars: usize, d: usize) -> (Vec<Monomial>, HashMap<Monomial, usize>) {
    let list = monomials_of_degree(nvars, d as u32);
    let index = list
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, m)| (m, i))
        .collect();
    (list, index)
}

fn coordinates(p: &SparsePoly, index: &HashMap<Monomial, usize>) -> Vec<Q> {
    let mut v = vec![Q::zero(); index.len()];
    for (m, c) in p.terms() {
        v[index[m]] = c.clone();
    }
    v
}

fn from_coordinates(vars: &Arc<[String]>, list: &[Monomial], v: &[Q]) -> SparsePoly {
    SparsePoly::from_terms(
        vars.clone(),
        list.iter()
            .zip(v)
            .filter(|(_, c)| !c.is_zero())
            .map(|(m, c)| (m.clone(), c.clone())),
    )
}

/// Degree-`d` component of the ideal generated by homogeneous `gens`, in
/// the coordinates of `monomials_of_degree(nvars, d)`.
pub fn ideal_span(nvars: usize, gens: &[SparsePoly], d: usize) -> EchelonBasis {
    let (_, index) = monomial_index(nvars, d);
    let mut span = EchelonBasis::new(index.len());
    for g in gens {
        let Some(e) = g.degree() else { continue };
        let e = e as usize;
        if e > d {
            continue;
        }
        for m in monomials_of_degree(nvars, (d - e) as u32) {
            span.insert(&coordinates(&g.mul_monomial(&m, &Q::one()), &index));
        }
    }
    span
}

/// Degree-`d` relations of `alg`, for every `d ≤ max_degree`.
pub fn relation_span(alg: &GradedAlgebra, max_degree: usize) -> Vec<EchelonBasis> {
    alg.monomial_images(max_degree)
        .into_iter()
        .enumerate()
        .map(|(d, images)| {
            let mut span = EchelonBasis::new(images.len());
            if alg.dim_at(d) == 0 {
                for i in 0..images.len() {
                    let mut e = vec![Q::zero(); images.len()];
                    e[i] = Q::one();
                    span.insert(&e);
                }
                return span;
            }
            // columns are monomial images
            let rows: Vec<Vec<Q>> = (0..alg.dim_at(d))
                .map(|r| images.iter().map(|(_, v)| v[r].clone()).collect())
                .collect();
            for v in RatMatrix::from_rows(rows).kernel() {
                span.insert(&v);
            }
            span
        })
        .collect()
}

/// `true` when both algebras have the same relations in every degree up to
/// `max_degree`.
pub fn same_defining_ideal(a: &GradedAlgebra, b: &GradedAlgebra, max_degree: usize) -> bool {
    if a.vars() != b.vars() {
        return false;
    }
    relation_span(a, max_degree)
        .iter()
        .zip(&relation_span(b, max_degree))
        .all(|(x, y)| x.same_span(y))
}

/// `true` when `gens` generate exactly the relations of `alg` in degrees up to `max_degree`.
pub fn ideal_matches_algebra(alg: &GradedAlgebra, gens: &[SparsePoly], max_degree: usize) -> bool {
    relation_span(alg, max_degree)
        .iter()
        .enumerate()
        .all(|(d, rel)| rel.same_span(&ideal_span(alg.nvars(), gens, d)))
}

/// Minimal generators of the relation ideal of `alg` in degrees `1..=max_degree`,
/// each degree's new generators taken from the reduced echelon basis.
pub fn brute_force_relations(alg: &GradedAlgebra, max_degree: usize) -> Result<IdealDescription> {
    if alg.dim() > BRUTE_FORCE_LIMIT {
        return Err(Error::SizeLimit(format!(
            "algebra of dimension {} exceeds {BRUTE_FORCE_LIMIT}",
            alg.dim()
        )));
    }
    let n = alg.nvars();
    let vars = alg.vars().clone();
    let spans = relation_span(alg, max_degree);
    let mut generators: Vec<SparsePoly> = Vec::new();
    for (d, span) in spans.iter().enumerate().skip(1) {
        let (list, _) = monomial_index(n, d);
        let mut lower = ideal_span(n, &generators, d);
        for row in span.rows() {
            if lower.insert(row) {
                generators.push(from_coordinates(&vars, &list, row));
            }
        }
    }
    let ci = generators.len() == n;
    Ok(IdealDescription::from_generators(&vars, generators, ci))
}

/// `K[x]/(gens)` for homogeneous `gens` generating an ideal of finite
/// colength; the basis in each degree is the set of monomials that are not
/// leading monomials of the reduced echelon form.
pub fn quotient_by_ideal(vars: Arc<[String]>, gens: &[SparsePoly]) -> Result<GradedAlgebra> {
    if gens
        .iter()
        .any(|g| !g.is_homogeneous() || g.vars() != &vars)
    {
        return Err(Error::NotHomogeneous);
    }
    let n = vars.len();
    let mut labels: Vec<Vec<String>> = Vec::new();
    let mut kept: Vec<Vec<usize>> = Vec::new();
    let mut spans: Vec<EchelonBasis> = Vec::new();
    let mut lists: Vec<Vec<Monomial>> = Vec::new();
    let mut indices: Vec<HashMap<Monomial, usize>> = Vec::new();
    for d in 0.. {
        if d > QUOTIENT_DEGREE_LIMIT {
            return Err(Error::SizeLimit(format!(
                "quotient has nonzero degree beyond {QUOTIENT_DEGREE_LIMIT}"
            )));
        }
        let span = ideal_span(n, gens, d);
        let k = span.non_pivots();
        if k.is_empty() {
            break;
        }
        let (list, index) = monomial_index(n, d);
        labels.push(k.iter().map(|&i| list[i].format(&vars)).collect());
        kept.push(k);
        spans.push(span);
        lists.push(list);
        indices.push(index);
    }
    let mut action = Vec::new();
    for d in 0..labels.len().saturating_sub(1) {
        let mut block = Vec::new();
        for j in 0..n {
            let x = Monomial::var(n, j);
            let mut m = RatMatrix::zeros(kept[d + 1].len(), kept[d].len());
            for (col, &i) in kept[d].iter().enumerate() {
                let mut e = vec![Q::zero(); lists[d + 1].len()];
                e[indices[d + 1][&lists[d][i].mul(&x)]] = Q::one();
                let r = spans[d + 1].reduce(&e);
                for (row, &t) in kept[d + 1].iter().enumerate() {
                    if !r[t].is_zero() {
                        m.set(row, col, r[t].clone());
                    }
                }
            }
            block.push(m);
        }
        action.push(block);
    }
    if labels.is_empty() {
        return Ok(GradedAlgebra::zero(vars));
    }
    GradedAlgebra::new(vars, labels, action)
}

fn power_product(vars: &Arc<[String]>, exps: &[u32]) -> SparsePoly {
    SparsePoly::monomial(vars.clone(), Monomial(exps.to_vec()), Q::one())
}

/// The generators `x_i^{γ_i+1} − ρ_i ∏_{j≠i} x_j^{λ_j}` of `Ĩ`.
pub fn ci_tilde_ideal(frame: &FrameData) -> IdealDescription {
    let codim = frame.codim();
    let names = variable_names(codim);
    let vars = var_list(&names);
    let generators = (0..codim)
        .map(|k| {
            let mut e = vec![0; codim];
            e[k] = frame.gamma[k] + 1;
            let mut g = power_product(&vars, &e);
            if frame.rho[k] == 1 {
                let w = frame
                    .witness_for(k + 1)
                    .expect("witness for a non-monomial generator");
                g = &g - &power_product(&vars, &w.lambda[1..]);
            }
            g
        })
        .collect();
    let mut desc =
        IdealDescription::from_generators(&names, generators, frame.is_complete_intersection());
    desc.rho = Some(frame.rho.clone());
    desc
}

/// Defining ideal of the Apéry algebra of a 4-generated, M-pure symmetric,
/// non-CI semigroup: `Ĩ + (z^{h3} y^{h2}, z^{h3} w^{h4})`.
pub fn codim3_defining_ideal(sg: &NumericalSemigroup) -> Result<IdealDescription> {
    codim3_parts(sg).map(|(_, desc)| desc)
}

pub(crate) fn codim3_parts(sg: &NumericalSemigroup) -> Result<(FrameData, IdealDescription)> {
    if sg.embedding_dimension() != 4 {
        return Err(Error::NotApplicable(format!(
            "needs 4 minimal generators, {sg} has {}",
            sg.embedding_dimension()
        )));
    }
    let table = sg.apery_set();
    if !table.m_pure_symmetry().symmetric {
        return Err(Error::NotApplicable(format!(
            "{sg} is not M-pure symmetric"
        )));
    }
    let frame = compute_beta_gamma_with(sg, &table);
    if frame.is_complete_intersection() {
        return Err(Error::NotApplicable(format!(
            "{sg} gives a complete intersection"
        )));
    }
    let (mu2, mu4) = gamma_relation(&frame)?;
    let g = &frame.generators;
    let gamma = &frame.gamma;
    let omega_d: u64 = gamma.iter().zip(&g[1..]).map(|(&c, &x)| c as u64 * x).sum();
    let omega_e = *table.elements.last().unwrap();
    let ord_d: u32 = gamma.iter().sum();
    let c = ord_d - table.socle_degree;
    if omega_d != omega_e + c as u64 * g[2] || c == 0 || c > gamma[1] {
        return Err(Error::Structure(format!(
            "top elements {omega_d} and {omega_e} are not related by {c}·{}",
            g[2]
        )));
    }
    let h = [gamma[0] + 1 - mu2, gamma[1] + 1 - c, gamma[2] + 1 - mu4];
    let mut desc = ci_tilde_ideal(&frame);
    let vars = desc.var_list();
    desc.generators.push(power_product(&vars, &[h[0], h[1], 0]));
    desc.generators.push(power_product(&vars, &[0, h[1], h[2]]));
    desc.degrees = desc
        .generators
        .iter()
        .map(|x| x.degree().unwrap_or(0))
        .collect();
    desc.complete_intersection = false;
    desc.mu = Some([mu2, mu4]);
    desc.h = Some(h);
    desc.c = Some(c);
    desc.omega_d = Some(omega_d);
    desc.omega_e = Some(omega_e);
    Ok((frame, desc))
}
