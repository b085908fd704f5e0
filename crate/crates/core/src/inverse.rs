//! Macaulay inverse systems: `A = Q/Ann(F)` with `Q` acting on `F` by
//! partial differentiation, catalecticants and (mixed) Hessians.

use std::collections::HashMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::algebra::GradedAlgebra;
use crate::error::{Error, Result};
use crate::linalg::{EchelonBasis, RatMatrix};
use crate::poly::{monomials_of_degree, var_list, Monomial, SparsePoly, Q};
use crate::polymatrix::PolyMatrix;
use crate::semigroup::{variable_names, AperyTable};

/// `F = Σ x^λ` over the maximal representations of the largest Apéry element.
pub fn dual_socle_generator(table: &AperyTable) -> Result<SparsePoly> {
    if !table.m_pure_symmetry().symmetric {
        return Err(Error::NotGorenstein);
    }
    let vars = var_list(&variable_names(table.generators.len() - 1));
    let top = table.max_reps.last().expect("non-empty Apéry set");
    Ok(SparsePoly::from_terms(
        vars,
        top.iter()
            .map(|r| (Monomial(r.exponents[1..].to_vec()), Q::one())),
    ))
}

/// `Σ c_λ x^λ ↦ Σ c_λ x^λ/λ!`. Under differentiation, this turns a generator
/// written for the contraction pairing (coefficients read off directly, as in
/// [`dual_socle_generator`]) into one with the same annihilator.
pub fn divided_power_form(f: &SparsePoly) -> SparsePoly {
    SparsePoly::from_terms(
        f.vars().clone(),
        f.terms().map(|(m, c)| {
            let fact: BigInt =
                m.0.iter()
                    .map(|&e| (1..=e).fold(BigInt::one(), |acc, k| acc * BigInt::from(k)))
                    .product();
            (m.clone(), c / Q::from_integer(fact))
        }),
    )
}

/// `∂^m x^a` as `(coefficient, exponents)`, or `None` when it vanishes.
fn differentiate_monomial(m: &Monomial, a: &Monomial) -> Option<(BigInt, Monomial)> {
    if !m.divides(a) {
        return None;
    }
    let mut c = BigInt::one();
    for (&e, &k) in a.0.iter().zip(&m.0) {
        for t in 0..k {
            c *= e - t;
        }
    }
    Some((c, m.quotient_of(a)))
}

/// The operator `X^m` applied to `f`.
pub fn differentiate(m: &Monomial, f: &SparsePoly) -> SparsePoly {
    SparsePoly::from_terms(
        f.vars().clone(),
        f.terms().filter_map(|(a, c)| {
            differentiate_monomial(m, a).map(|(k, rest)| (rest, c * Q::from_integer(k)))
        }),
    )
}

/// `p(X)` applied to `f`, where `X_i = ∂/∂x_i`.
pub fn apply_operator(p: &SparsePoly, f: &SparsePoly) -> Result<SparsePoly> {
    if p.nvars() != f.nvars() {
        return Err(Error::VariableMismatch);
    }
    let mut out = SparsePoly::zero(f.vars().clone());
    for (m, c) in p.terms() {
        out = &out + &differentiate(m, f).scale(c);
    }
    Ok(out)
}

pub fn ann_contains(f: &SparsePoly, p: &SparsePoly) -> Result<bool> {
    Ok(apply_operator(p, f)?.is_zero())
}

/// Rescales the terms of `p` so that it annihilates `f`, keeping the
/// leading coefficient. Returns `None` when no choice of nonzero scalars,
/// one per term, puts `p` in `Ann(f)`.
pub fn normalize_relation(f: &SparsePoly, p: &SparsePoly) -> Result<Option<SparsePoly>> {
    if p.nvars() != f.nvars() {
        return Err(Error::VariableMismatch);
    }
    let terms: Vec<(Monomial, Q)> = p.terms().map(|(m, c)| (m.clone(), c.clone())).collect();
    let Some((_, lead)) = terms.first() else {
        return Ok(Some(p.clone()));
    };
    let images: Vec<SparsePoly> = terms.iter().map(|(m, _)| differentiate(m, f)).collect();
    let mut support: Vec<Monomial> = images
        .iter()
        .flat_map(|q| q.terms().map(|(m, _)| m.clone()))
        .collect();
    support.sort();
    support.dedup();
    let rows: Vec<Vec<Q>> = support
        .iter()
        .map(|m| images.iter().map(|q| q.coefficient(m)).collect())
        .collect();
    let kernel = if rows.is_empty() {
        (0..terms.len())
            .map(|i| {
                (0..terms.len())
                    .map(|j| if i == j { Q::one() } else { Q::zero() })
                    .collect()
            })
            .collect()
    } else {
        RatMatrix::from_rows(rows).kernel()
    };
    if kernel.is_empty() {
        return Ok(None);
    }
    // a combination of the kernel basis with every coordinate nonzero, if one exists
    for weight in 1..=(terms.len() as i64 + 1) {
        let mut v = vec![Q::zero(); terms.len()];
        let mut w = Q::one();
        for k in &kernel {
            for (x, y) in v.iter_mut().zip(k) {
                *x += &w * y;
            }
            w *= Q::from_integer(weight.into());
        }
        if v.iter().all(|x| !x.is_zero()) {
            let scale = lead / &v[0];
            return Ok(Some(SparsePoly::from_terms(
                p.vars().clone(),
                terms
                    .iter()
                    .zip(&v)
                    .map(|((m, _), x)| (m.clone(), x * &scale)),
            )));
        }
    }
    Ok(None)
}

fn coordinate_index(nvars: usize, d: usize) -> HashMap<Monomial, usize> {
    monomials_of_degree(nvars, d as u32)
        .into_iter()
        .enumerate()
        .map(|(i, m)| (m, i))
        .collect()
}

fn coordinates(p: &SparsePoly, index: &HashMap<Monomial, usize>) -> Vec<Q> {
    let mut v = vec![Q::zero(); index.len()];
    for (m, c) in p.terms() {
        v[index[m]] = c.clone();
    }
    v
}

/// Rank of the degree-`d` catalecticant of `f`, i.e. `dim A_d`.
pub fn catalecticant_rank(f: &SparsePoly, d: usize) -> usize {
    let Some(top) = f.degree() else { return 0 };
    let top = top as usize;
    if d > top {
        return 0;
    }
    let index = coordinate_index(f.nvars(), top - d);
    let mut span = EchelonBasis::new(index.len());
    for m in monomials_of_degree(f.nvars(), d as u32) {
        let image = differentiate(&m, f);
        if !image.is_zero() {
            span.insert(&coordinates(&image, &index));
        }
    }
    span.rank()
}

/// `A = Q/Ann(F)` with, in every degree, the first independent monomials
/// in descending graded-lex order as basis.
#[derive(Debug, Clone)]
pub struct DualAlgebraView {
    f: SparsePoly,
    socle_degree: usize,
    bases: Vec<Vec<Monomial>>,
    /// Coordinates of `m F` for each basis monomial `m`, in degree `D − d`.
    images: Vec<Vec<Vec<Q>>>,
}

impl DualAlgebraView {
    pub fn new(f: SparsePoly) -> Result<Self> {
        if f.is_zero() {
            return Err(Error::Structure(
                "the zero polynomial has no inverse system".into(),
            ));
        }
        if !f.is_homogeneous() {
            return Err(Error::NotHomogeneous);
        }
        let top = f.degree().unwrap() as usize;
        let n = f.nvars();
        let mut bases = Vec::with_capacity(top + 1);
        let mut images = Vec::with_capacity(top + 1);
        for d in 0..=top {
            let index = coordinate_index(n, top - d);
            let mut span = EchelonBasis::new(index.len());
            let mut basis = Vec::new();
            let mut imgs = Vec::new();
            for m in monomials_of_degree(n, d as u32) {
                let image = differentiate(&m, &f);
                if image.is_zero() {
                    continue;
                }
                let v = coordinates(&image, &index);
                if span.insert(&v) {
                    basis.push(m);
                    imgs.push(v);
                }
            }
            bases.push(basis);
            images.push(imgs);
        }
        Ok(DualAlgebraView {
            f,
            socle_degree: top,
            bases,
            images,
        })
    }

    /// The view of the Apéry algebra itself: differentiation against the
    /// divided-power form of [`dual_socle_generator`].
    pub fn from_apery(table: &AperyTable) -> Result<Self> {
        Self::new(divided_power_form(&dual_socle_generator(table)?))
    }

    pub fn generator(&self) -> &SparsePoly {
        &self.f
    }

    pub fn vars(&self) -> &Arc<[String]> {
        self.f.vars()
    }

    pub fn socle_degree(&self) -> usize {
        self.socle_degree
    }

    pub fn basis(&self, d: usize) -> &[Monomial] {
        self.bases.get(d).map_or(&[], |b| b.as_slice())
    }

    pub fn hilbert(&self) -> Vec<usize> {
        self.bases.iter().map(|b| b.len()).collect()
    }

    /// The linear model in the selected bases.
    pub fn to_graded(&self) -> Result<GradedAlgebra> {
        let n = self.f.nvars();
        let labels: Vec<Vec<String>> = self
            .bases
            .iter()
            .map(|b| b.iter().map(|m| m.format(self.f.vars())).collect())
            .collect();
        let mut action = Vec::new();
        for d in 0..self.socle_degree {
            let index = coordinate_index(n, self.socle_degree - d - 1);
            let target = &self.images[d + 1];
            let mut block = Vec::new();
            for j in 0..n {
                let x = Monomial::var(n, j);
                let columns: Vec<Vec<Q>> = self.bases[d]
                    .iter()
                    .map(|m| coordinates(&differentiate(&m.mul(&x), &self.f), &index))
                    .collect();
                let solved = solve_columns(target, &columns).ok_or_else(|| {
                    Error::Structure("derivative outside the catalecticant image".into())
                })?;
                let mut mat = RatMatrix::zeros(target.len(), columns.len());
                for (c, col) in solved.iter().enumerate() {
                    for (r, v) in col.iter().enumerate() {
                        if !v.is_zero() {
                            mat.set(r, c, v.clone());
                        }
                    }
                }
                block.push(mat);
            }
            action.push(block);
        }
        GradedAlgebra::new(self.f.vars().clone(), labels, action)
    }
}

/// Coordinates of every `target` vector in the independent `basis`.
fn solve_columns(basis: &[Vec<Q>], targets: &[Vec<Q>]) -> Option<Vec<Vec<Q>>> {
    let k = basis.len();
    if k == 0 {
        return targets
            .iter()
            .all(|t| t.iter().all(|x| x.is_zero()))
            .then(|| vec![Vec::new(); targets.len()]);
    }
    let dim = basis[0].len();
    let rows: Vec<Vec<Q>> = (0..dim)
        .map(|i| basis.iter().chain(targets).map(|v| v[i].clone()).collect())
        .collect();
    let (m, pivots) = RatMatrix::from_rows(rows).rref();
    if pivots.iter().any(|&p| p >= k) || pivots.len() < k {
        return None;
    }
    Some(
        (0..targets.len())
            .map(|t| (0..k).map(|r| m.get(r, k + t).clone()).collect())
            .collect(),
    )
}

/// `(α_i(X) β_j(X) F)` for bases `α` of `A_d` (rows) and `β` of `A_t` (columns).
#[derive(Debug, Clone)]
pub struct HessianMatrix {
    pub d: usize,
    pub t: usize,
    pub row_basis: Vec<Monomial>,
    pub col_basis: Vec<Monomial>,
    pub matrix: PolyMatrix,
}

impl HessianMatrix {
    pub fn row_labels(&self) -> Vec<String> {
        self.row_basis
            .iter()
            .map(|m| m.format(self.matrix.vars()))
            .collect()
    }

    pub fn col_labels(&self) -> Vec<String> {
        self.col_basis
            .iter()
            .map(|m| m.format(self.matrix.vars()))
            .collect()
    }

    /// Entry support as a 0/1 pattern.
    pub fn support(&self) -> Vec<Vec<bool>> {
        (0..self.matrix.rows())
            .map(|r| {
                (0..self.matrix.cols())
                    .map(|c| !self.matrix.get(r, c).is_zero())
                    .collect()
            })
            .collect()
    }
}

fn check_basis(f: &SparsePoly, d: usize, basis: &[Monomial]) -> Result<()> {
    let top = f.degree().unwrap_or(0) as usize;
    if d > top {
        return Err(Error::DegreeOutOfRange(format!(
            "degree {d} above deg F = {top}"
        )));
    }
    if let Some(m) = basis
        .iter()
        .find(|m| m.degree() as usize != d || m.0.len() != f.nvars())
    {
        return Err(Error::Structure(format!(
            "{} is not a degree-{d} monomial",
            m.format(f.vars())
        )));
    }
    let index = coordinate_index(f.nvars(), top - d);
    let mut span = EchelonBasis::new(index.len());
    for (i, m) in basis.iter().enumerate() {
        if !span.insert(&coordinates(&differentiate(m, f), &index)) {
            return Err(Error::DependentBasis(i));
        }
    }
    let expected = catalecticant_rank(f, d);
    if basis.len() != expected {
        return Err(Error::BasisSize {
            degree: d,
            got: basis.len(),
            expected,
        });
    }
    Ok(())
}

pub fn mixed_hessian(
    f: &SparsePoly,
    d: usize,
    t: usize,
    row_basis: &[Monomial],
    col_basis: &[Monomial],
) -> Result<HessianMatrix> {
    check_basis(f, d, row_basis)?;
    check_basis(f, t, col_basis)?;
    let rows = row_basis
        .iter()
        .map(|a| {
            col_basis
                .iter()
                .map(|b| differentiate(&a.mul(b), f))
                .collect()
        })
        .collect();
    Ok(HessianMatrix {
        d,
        t,
        row_basis: row_basis.to_vec(),
        col_basis: col_basis.to_vec(),
        matrix: PolyMatrix::from_rows(f.vars().clone(), rows),
    })
}

pub fn hessian(f: &SparsePoly, d: usize, basis: &[Monomial]) -> Result<HessianMatrix> {
    mixed_hessian(f, d, d, basis, basis)
}

pub fn polynomial_determinant(m: &HessianMatrix) -> Result<SparsePoly> {
    m.matrix.determinant()
}
