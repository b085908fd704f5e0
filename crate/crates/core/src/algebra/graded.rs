//! Standard graded Artinian algebras as explicit linear data: a basis per
//! degree and the matrices of multiplication by each variable.

use std::sync::Arc;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{EchelonBasis, RatMatrix};
use crate::poly::{monomials_of_degree, Monomial, SparsePoly, Q};
use crate::polymatrix::PolyMatrix;

#[derive(Debug, Clone)]
pub struct GradedAlgebra {
    vars: Arc<[String]>,
    labels: Vec<Vec<String>>,
    /// `action[d][j]`: multiplication by variable `j` from degree `d` to `d+1`.
    action: Vec<Vec<RatMatrix>>,
}

/// Coefficient of a linear form: a fixed rational or the indeterminate `a_<var>`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Coefficient {
    Value(Q),
    Symbol,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearForm {
    pub coefficients: Vec<Coefficient>,
}

impl LinearForm {
    /// Every coefficient an independent indeterminate.
    pub fn generic(nvars: usize) -> Self {
        LinearForm {
            coefficients: vec![Coefficient::Symbol; nvars],
        }
    }

    pub fn from_values(values: Vec<Q>) -> Self {
        LinearForm {
            coefficients: values.into_iter().map(Coefficient::Value).collect(),
        }
    }

    pub fn variable(nvars: usize, j: usize) -> Self {
        let mut v = vec![Q::zero(); nvars];
        v[j] = Q::one();
        Self::from_values(v)
    }

    pub fn sum_of_variables(nvars: usize) -> Self {
        Self::from_values(vec![Q::one(); nvars])
    }

    pub fn is_nonzero(&self) -> bool {
        self.coefficients.iter().any(|c| match c {
            Coefficient::Value(v) => !v.is_zero(),
            Coefficient::Symbol => true,
        })
    }
}

/// Names of the indeterminate coefficients `a_<var>`.
pub fn symbol_names(vars: &[String]) -> Arc<[String]> {
    vars.iter().map(|v| format!("a_{v}")).collect()
}

/// Matrix of `×L^power: A_d → A_{d+power}`; rows index the target basis.
#[derive(Debug, Clone)]
pub struct MultiplicationMatrix {
    pub from_degree: usize,
    pub power: usize,
    pub row_labels: Vec<String>,
    pub col_labels: Vec<String>,
    pub matrix: PolyMatrix,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GorensteinCheck {
    pub symmetric_hilbert: bool,
    pub socle_dims: Vec<usize>,
    pub one_dimensional_socle: bool,
}

impl GorensteinCheck {
    pub fn is_gorenstein(&self) -> bool {
        self.symmetric_hilbert && self.one_dimensional_socle
    }
}

impl GradedAlgebra {
    pub fn new(
        vars: Arc<[String]>,
        labels: Vec<Vec<String>>,
        action: Vec<Vec<RatMatrix>>,
    ) -> Result<Self> {
        let alg = GradedAlgebra {
            vars,
            labels,
            action,
        };
        alg.validate()?;
        Ok(alg.trimmed())
    }

    fn validate(&self) -> Result<()> {
        if self.labels.is_empty() {
            return Ok(());
        }
        if self.labels[0].len() != 1 {
            return Err(Error::Structure(
                "degree-0 component must be one-dimensional".into(),
            ));
        }
        if self.action.len() + 1 != self.labels.len() {
            return Err(Error::Structure(
                "one action block per degree below the top is required".into(),
            ));
        }
        for (d, block) in self.action.iter().enumerate() {
            if block.len() != self.vars.len() {
                return Err(Error::Structure(format!(
                    "degree {d}: one matrix per variable is required"
                )));
            }
            for m in block {
                if m.rows() != self.labels[d + 1].len() || m.cols() != self.labels[d].len() {
                    return Err(Error::Structure(format!(
                        "degree {d}: action matrix has the wrong shape"
                    )));
                }
            }
        }
        Ok(())
    }

    /// Drops vanishing top degrees.
    fn trimmed(mut self) -> Self {
        while self.labels.last().is_some_and(|l| l.is_empty()) {
            self.labels.pop();
            self.action.pop();
        }
        if self.labels.is_empty() {
            self.action.clear();
        }
        self
    }

    /// The zero ring.
    pub fn zero(vars: Arc<[String]>) -> Self {
        GradedAlgebra {
            vars,
            labels: Vec::new(),
            action: Vec::new(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn vars(&self) -> &Arc<[String]> {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn labels(&self, d: usize) -> &[String] {
        self.labels.get(d).map_or(&[], |l| l.as_slice())
    }

    pub fn hilbert(&self) -> Vec<usize> {
        self.labels.iter().map(|l| l.len()).collect()
    }

    pub fn dim(&self) -> usize {
        self.labels.iter().map(|l| l.len()).sum()
    }

    pub fn dim_at(&self, d: usize) -> usize {
        self.labels.get(d).map_or(0, |l| l.len())
    }

    /// Top nonzero degree (0 for the zero ring as well).
    pub fn socle_degree(&self) -> usize {
        self.labels.len().saturating_sub(1)
    }

    pub fn codim(&self) -> usize {
        self.dim_at(1)
    }

    pub fn var_matrix(&self, d: usize, j: usize) -> &RatMatrix {
        &self.action[d][j]
    }

    pub fn variable_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    /// Matrix of `×L: A_d → A_{d+1}` over the coefficient indeterminates.
    pub fn linear_map(&self, form: &LinearForm, d: usize) -> PolyMatrix {
        let symbols = symbol_names(&self.vars);
        let (rows, cols) = (self.dim_at(d + 1), self.dim_at(d));
        let mut out = PolyMatrix::zeros(symbols.clone(), rows, cols);
        if d >= self.action.len() {
            return out;
        }
        for (j, coeff) in form.coefficients.iter().enumerate() {
            let scalar = match coeff {
                Coefficient::Value(v) if v.is_zero() => continue,
                Coefficient::Value(v) => SparsePoly::constant(symbols.clone(), v.clone()),
                Coefficient::Symbol => SparsePoly::var(symbols.clone(), j),
            };
            let m = &self.action[d][j];
            for r in 0..rows {
                for c in 0..cols {
                    let e = m.get(r, c);
                    if !e.is_zero() {
                        let add = scalar.scale(e);
                        out.set(r, c, out.get(r, c) + &add);
                    }
                }
            }
        }
        out
    }

    /// Rational matrix of `×L: A_d → A_{d+1}` for `L = Σ point_j x_j`.
    pub fn specialized_map(&self, point: &[Q], d: usize) -> RatMatrix {
        let mut out = RatMatrix::zeros(self.dim_at(d + 1), self.dim_at(d));
        if d >= self.action.len() {
            return out;
        }
        for (j, a) in point.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let m = &self.action[d][j];
            for r in 0..out.rows() {
                for c in 0..out.cols() {
                    let e = m.get(r, c);
                    if !e.is_zero() {
                        let v = out.get(r, c) + a * e;
                        out.set(r, c, v);
                    }
                }
            }
        }
        out
    }

    /// Matrix of `×L^power: A_d → A_{d+power}`.
    pub fn multiplication_matrix(
        &self,
        form: &LinearForm,
        d: usize,
        power: usize,
    ) -> Result<MultiplicationMatrix> {
        if form.coefficients.len() != self.nvars() {
            return Err(Error::Structure(
                "linear form has the wrong number of coefficients".into(),
            ));
        }
        if power == 0 || d + power > self.socle_degree() || self.is_zero() {
            return Err(Error::DegreeOutOfRange(format!(
                "×L^{power} from degree {d} with socle degree {}",
                self.socle_degree()
            )));
        }
        let mut m = self.linear_map(form, d);
        for step in 1..power {
            m = self.linear_map(form, d + step).mul(&m);
        }
        Ok(MultiplicationMatrix {
            from_degree: d,
            power,
            row_labels: self.labels[d + power].clone(),
            col_labels: self.labels[d].clone(),
            matrix: m,
        })
    }

    /// Rational matrix of multiplication by `x_j^c` from degree `d`, or
    /// `None` when the target degree exceeds the socle degree.
    pub fn variable_power_matrix(&self, j: usize, c: usize, d: usize) -> Option<RatMatrix> {
        if self.is_zero() || d + c > self.socle_degree() {
            return None;
        }
        let mut m = RatMatrix::identity(self.dim_at(d));
        for step in 0..c {
            m = self.action[d + step][j].mul(&m);
        }
        Some(m)
    }

    /// Images of all degree-`d` monomials (descending lex order) as
    /// coordinate vectors of `A_d`, for `d = 0..=max_degree`.
    pub fn monomial_images(&self, max_degree: usize) -> Vec<Vec<(Monomial, Vec<Q>)>> {
        let n = self.nvars();
        let mut out: Vec<Vec<(Monomial, Vec<Q>)>> = Vec::with_capacity(max_degree + 1);
        for d in 0..=max_degree {
            let dim = self.dim_at(d);
            let level = monomials_of_degree(n, d as u32)
                .into_iter()
                .map(|m| {
                    if dim == 0 {
                        return (m, Vec::new());
                    }
                    if d == 0 {
                        return (m, vec![Q::one()]);
                    }
                    let j = m.0.iter().position(|&e| e > 0).unwrap();
                    let mut prev = m.clone();
                    prev.0[j] -= 1;
                    let (_, v) = out[d - 1].iter().find(|(p, _)| *p == prev).unwrap();
                    let image = self.action[d - 1][j].mul_vec(v);
                    (m, image)
                })
                .collect();
            out.push(level);
        }
        out
    }

    /// Coordinates of a homogeneous polynomial in `A_deg`; `None` if not
    /// homogeneous. Empty vector when the degree exceeds the socle degree.
    pub fn evaluate(&self, p: &SparsePoly) -> Option<(usize, Vec<Q>)> {
        if !p.is_homogeneous() || p.nvars() != self.nvars() {
            return None;
        }
        let d = p.degree().unwrap_or(0) as usize;
        let images = self.monomial_images(d);
        let mut v = vec![Q::zero(); self.dim_at(d)];
        for (m, c) in p.terms() {
            let (_, img) = images[d].iter().find(|(k, _)| k == m).unwrap();
            for (x, y) in v.iter_mut().zip(img) {
                *x += c * y;
            }
        }
        Some((d, v))
    }

    pub fn socle_dims(&self) -> Vec<usize> {
        (0..self.labels.len())
            .map(|d| {
                if d == self.socle_degree() {
                    return self.dim_at(d);
                }
                let blocks: Vec<Vec<Q>> = self.action[d].iter().flat_map(|m| m.to_rows()).collect();
                if blocks.is_empty() {
                    return self.dim_at(d);
                }
                self.dim_at(d) - RatMatrix::from_rows(blocks).rank()
            })
            .collect()
    }

    pub fn gorenstein_check(&self) -> GorensteinCheck {
        let h = self.hilbert();
        let symmetric_hilbert = h.iter().eq(h.iter().rev());
        let socle_dims = self.socle_dims();
        let one_dimensional_socle = !self.is_zero() && socle_dims.iter().sum::<usize>() == 1;
        GorensteinCheck {
            symmetric_hilbert,
            socle_dims,
            one_dimensional_socle,
        }
    }

    pub fn is_gorenstein(&self) -> bool {
        self.gorenstein_check().is_gorenstein()
    }

    /// The colon ideal `(0 : x_j^c)` degree by degree.
    pub fn colon_subspaces(&self, j: usize, c: usize) -> Result<Vec<EchelonBasis>> {
        if j >= self.nvars() {
            return Err(Error::NoSuchVariable(j));
        }
        Ok((0..self.labels.len())
            .map(|d| {
                let dim = self.dim_at(d);
                let mut basis = EchelonBasis::new(dim);
                match self.variable_power_matrix(j, c, d) {
                    Some(m) => {
                        for v in m.kernel() {
                            basis.insert(&v);
                        }
                    }
                    None => {
                        for i in 0..dim {
                            let mut e = vec![Q::zero(); dim];
                            e[i] = Q::one();
                            basis.insert(&e);
                        }
                    }
                }
                basis
            })
            .collect())
    }

    /// `A / J` for a homogeneous ideal given by one subspace per degree.
    /// The quotient basis consists of the non-pivot coordinates of each `J_d`.
    pub fn quotient(&self, ideal: &[EchelonBasis]) -> Result<GradedAlgebra> {
        if ideal.len() != self.labels.len() {
            return Err(Error::Structure(
                "one ideal component per degree is required".into(),
            ));
        }
        if self.is_zero() || ideal[0].rank() > 0 {
            return Ok(GradedAlgebra::zero(self.vars.clone()));
        }
        let keep: Vec<Vec<usize>> = ideal.iter().map(|j| j.non_pivots()).collect();
        let labels: Vec<Vec<String>> = keep
            .iter()
            .enumerate()
            .map(|(d, k)| k.iter().map(|&i| self.labels[d][i].clone()).collect())
            .collect();
        let mut action = Vec::new();
        for d in 0..self.action.len() {
            let mut block = Vec::new();
            for j in 0..self.nvars() {
                let m = &self.action[d][j];
                let mut q = RatMatrix::zeros(keep[d + 1].len(), keep[d].len());
                for (col, &i) in keep[d].iter().enumerate() {
                    let image = ideal[d + 1].reduce(&m.column(i));
                    for (row, &t) in keep[d + 1].iter().enumerate() {
                        if !image[t].is_zero() {
                            q.set(row, col, image[t].clone());
                        }
                    }
                }
                block.push(q);
            }
            action.push(block);
        }
        GradedAlgebra::new(self.vars.clone(), labels, action)
    }

    /// `(0 : x_j^c)` and the quotient `A / (0 : x_j^c)`.
    pub fn colon_by_power(&self, j: usize, c: usize) -> Result<(Vec<EchelonBasis>, GradedAlgebra)> {
        let colon = self.colon_subspaces(j, c)?;
        let quotient = self.quotient(&colon)?;
        Ok((colon, quotient))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{q, var_list};

    /// K[x]/(x^3) built by hand.
    fn truncated_line() -> GradedAlgebra {
        let one = RatMatrix::from_i64(&[vec![1]]);
        GradedAlgebra::new(
            var_list(&["x"]),
            vec![vec!["1".into()], vec!["x".into()], vec!["x^2".into()]],
            vec![vec![one.clone()], vec![one]],
        )
        .unwrap()
    }

    #[test]
    fn basics() {
        let a = truncated_line();
        assert_eq!(a.hilbert(), vec![1, 1, 1]);
        assert!(a.is_gorenstein());
        assert_eq!(a.socle_dims(), vec![0, 0, 1]);
        let m = a
            .multiplication_matrix(&LinearForm::generic(1), 0, 2)
            .unwrap();
        assert_eq!(m.matrix.get(0, 0).to_string(), "a_x^2");
        assert!(a
            .multiplication_matrix(&LinearForm::generic(1), 1, 2)
            .is_err());
    }

    #[test]
    fn colon_quotients() {
        let a = truncated_line();
        let (colon, quot) = a.colon_by_power(0, 1).unwrap();
        assert_eq!(
            colon.iter().map(|c| c.rank()).collect::<Vec<_>>(),
            vec![0, 0, 1]
        );
        assert_eq!(quot.hilbert(), vec![1, 1]);
        let (_, zero) = a.colon_by_power(0, 3).unwrap();
        assert!(zero.is_zero());
        assert!(a.colon_by_power(1, 1).is_err());
    }

    #[test]
    fn evaluation() {
        let a = truncated_line();
        let p = SparsePoly::parse_with_vars("3*x^2", var_list(&["x"])).unwrap();
        assert_eq!(a.evaluate(&p), Some((2, vec![q(3)])));
        let p = SparsePoly::parse_with_vars("x^3", var_list(&["x"])).unwrap();
        assert_eq!(a.evaluate(&p), Some((3, vec![])));
    }
}
