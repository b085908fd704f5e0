//! Algebras with a monomial basis: the product of two basis elements is
//! another basis element or zero.

use std::collections::HashMap;
use std::sync::Arc;

use num_traits::One;

use crate::algebra::graded::GradedAlgebra;
use crate::error::{Error, Result};
use crate::linalg::RatMatrix;
use crate::poly::{var_list, Monomial, Q};
use crate::semigroup::{variable_names, AperyTable, FrameData};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisLabel {
    pub degree: u32,
    /// Exponents over the algebra variables.
    pub exponents: Vec<u32>,
    /// Semigroup element carried by the label, when there is one.
    pub value: Option<u64>,
}

#[derive(Debug, Clone)]
pub struct MonomialAlgebra {
    vars: Arc<[String]>,
    labels: Vec<BasisLabel>,
    /// Label indices per degree.
    by_degree: Vec<Vec<usize>>,
    var_labels: Vec<Option<usize>>,
    table: Vec<Option<usize>>,
}

/// A monomial ideal of a [`MonomialAlgebra`]: the labels it contains.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialSubspace {
    pub indices: Vec<usize>,
    pub by_degree: Vec<Vec<String>>,
}

impl MonomialAlgebra {
    /// `labels` must be sorted by degree, the unit first. `product(i, j)`
    /// gives the label index of the product or `None` for zero.
    fn from_parts(
        vars: Arc<[String]>,
        labels: Vec<BasisLabel>,
        product: impl Fn(usize, usize) -> Option<usize>,
    ) -> Result<Self> {
        let n = labels.len();
        if n == 0 {
            return Ok(MonomialAlgebra {
                var_labels: vec![None; vars.len()],
                vars,
                labels,
                by_degree: Vec::new(),
                table: Vec::new(),
            });
        }
        if labels[0].degree != 0 {
            return Err(Error::Structure("the unit must come first".into()));
        }
        let top = labels.iter().map(|l| l.degree).max().unwrap() as usize;
        let mut by_degree = vec![Vec::new(); top + 1];
        for (i, l) in labels.iter().enumerate() {
            by_degree[l.degree as usize].push(i);
        }
        let mut table = vec![None; n * n];
        for i in 0..n {
            for j in 0..n {
                table[i * n + j] = product(i, j);
            }
        }
        let nv = vars.len();
        let var_labels = (0..nv)
            .map(|v| {
                let e = Monomial::var(nv, v).0;
                labels
                    .iter()
                    .position(|l| l.degree == 1 && l.exponents == e)
            })
            .collect();
        Ok(MonomialAlgebra {
            vars,
            labels,
            by_degree,
            var_labels,
            table,
        })
    }

    pub fn vars(&self) -> &Arc<[String]> {
        &self.vars
    }

    pub fn labels(&self) -> &[BasisLabel] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn label_text(&self, i: usize) -> String {
        Monomial(self.labels[i].exponents.clone()).format(&self.vars)
    }

    pub fn product(&self, i: usize, j: usize) -> Option<usize> {
        self.table[i * self.labels.len() + j]
    }

    pub fn variable_label(&self, v: usize) -> Option<usize> {
        self.var_labels[v]
    }

    pub fn hilbert(&self) -> Vec<usize> {
        self.by_degree.iter().map(|d| d.len()).collect()
    }

    pub fn socle_degree(&self) -> usize {
        self.by_degree.len().saturating_sub(1)
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.len();
        (0..n).all(|i| (0..i).all(|j| self.product(i, j) == self.product(j, i)))
    }

    pub fn is_associative(&self) -> bool {
        let n = self.len();
        let mul = |a: Option<usize>, b: usize| a.and_then(|a| self.product(a, b));
        (0..n).all(|i| {
            (0..n).all(|j| {
                (0..n).all(|k| {
                    mul(self.product(i, j), k)
                        == self.product(j, k).and_then(|jk| self.product(i, jk))
                })
            })
        })
    }

    /// `b · x_v^c`, `None` when it vanishes.
    pub fn times_variable_power(&self, b: usize, v: usize, c: u32) -> Option<usize> {
        let mut cur = Some(b);
        for _ in 0..c {
            cur = cur.and_then(|i| self.var_labels[v].and_then(|x| self.product(i, x)));
        }
        cur
    }

    /// `(0 : x_v^c)` and the quotient by it. Errors when the colon is not
    /// spanned by basis labels, which cannot happen for a monomial basis
    /// whose nonzero products are injective in each factor.
    pub fn colon_by_power(&self, v: usize, c: u32) -> Result<(MonomialSubspace, MonomialAlgebra)> {
        if v >= self.vars.len() {
            return Err(Error::NoSuchVariable(v));
        }
        let image: Vec<Option<usize>> = (0..self.len())
            .map(|b| self.times_variable_power(b, v, c))
            .collect();
        let mut seen = HashMap::new();
        for (b, t) in image.iter().enumerate() {
            if let Some(t) = t {
                if let Some(prev) = seen.insert(*t, b) {
                    return Err(Error::Structure(format!(
                        "labels {} and {} share the image {} under x^{c}",
                        self.label_text(prev),
                        self.label_text(b),
                        self.label_text(*t)
                    )));
                }
            }
        }
        let in_colon: Vec<bool> = image.iter().map(|t| t.is_none()).collect();
        let indices: Vec<usize> = (0..self.len()).filter(|&b| in_colon[b]).collect();
        let mut by_degree = vec![Vec::new(); self.by_degree.len()];
        for &b in &indices {
            by_degree[self.labels[b].degree as usize].push(self.label_text(b));
        }
        let colon = MonomialSubspace { indices, by_degree };
        let kept: Vec<usize> = (0..self.len()).filter(|&b| !in_colon[b]).collect();
        let mut new_index = vec![None; self.len()];
        for (k, &b) in kept.iter().enumerate() {
            new_index[b] = Some(k);
        }
        let labels = kept.iter().map(|&b| self.labels[b].clone()).collect();
        let quotient = MonomialAlgebra::from_parts(self.vars.clone(), labels, |i, j| {
            self.product(kept[i], kept[j]).and_then(|p| new_index[p])
        })?;
        Ok((colon, quotient))
    }

    /// The linear model with the same basis order.
    pub fn to_graded(&self) -> GradedAlgebra {
        if self.is_empty() {
            return GradedAlgebra::zero(self.vars.clone());
        }
        let labels: Vec<Vec<String>> = self
            .by_degree
            .iter()
            .map(|d| d.iter().map(|&i| self.label_text(i)).collect())
            .collect();
        let pos: Vec<usize> = {
            let mut p = vec![0; self.len()];
            for d in &self.by_degree {
                for (k, &i) in d.iter().enumerate() {
                    p[i] = k;
                }
            }
            p
        };
        let mut action = Vec::new();
        for d in 0..self.socle_degree() {
            let mut block = Vec::new();
            for v in 0..self.vars.len() {
                let mut m = RatMatrix::zeros(self.by_degree[d + 1].len(), self.by_degree[d].len());
                if let Some(x) = self.var_labels[v] {
                    for (col, &b) in self.by_degree[d].iter().enumerate() {
                        if let Some(t) = self.product(b, x) {
                            m.set(pos[t], col, Q::one());
                        }
                    }
                }
                block.push(m);
            }
            action.push(block);
        }
        GradedAlgebra::new(self.vars.clone(), labels, action).expect("monomial algebra is graded")
    }
}

fn vars_for_codim(codim: usize) -> Arc<[String]> {
    var_list(&variable_names(codim))
}

/// The Apéry-set algebra: basis the Apéry set graded by order, with
/// `ω·ω' = ω+ω'` when that is an Apéry element of additive order.
pub fn build_algebra(table: &AperyTable) -> MonomialAlgebra {
    let vars = vars_for_codim(table.generators.len() - 1);
    let labels: Vec<BasisLabel> = table
        .elements
        .iter()
        .enumerate()
        .map(|(i, &w)| BasisLabel {
            degree: table.orders[i],
            exponents: table.max_reps[i][0].exponents[1..].to_vec(),
            value: Some(w),
        })
        .collect();
    let mut order: Vec<usize> = (0..labels.len()).collect();
    order.sort_by_key(|&i| {
        (
            labels[i].degree,
            std::cmp::Reverse(Monomial(labels[i].exponents.clone())),
        )
    });
    let labels: Vec<BasisLabel> = order.iter().map(|&i| labels[i].clone()).collect();
    let index: HashMap<u64, usize> = labels
        .iter()
        .enumerate()
        .map(|(i, l)| (l.value.unwrap(), i))
        .collect();
    MonomialAlgebra::from_parts(vars, labels.clone(), |i, j| {
        let s = labels[i].value.unwrap() + labels[j].value.unwrap();
        index
            .get(&s)
            .copied()
            .filter(|&k| labels[k].degree == labels[i].degree + labels[j].degree)
    })
    .expect("Apéry algebra")
}

fn box_points(bounds: &[u32]) -> Vec<Vec<u32>> {
    let mut points = vec![Vec::new()];
    for &b in bounds {
        points = points
            .into_iter()
            .flat_map(|p: Vec<u32>| {
                (0..=b).map(move |e| {
                    let mut q = p.clone();
                    q.push(e);
                    q
                })
            })
            .collect();
    }
    points.sort_by_key(|p| {
        (
            p.iter().sum::<u32>(),
            std::cmp::Reverse(Monomial(p.clone())),
        )
    });
    points
}

/// `G = K[x]/Ĩ` on the box `λ ≤ γ`. For a complete intersection this is the
/// Apéry algebra itself; in codimension 3 otherwise the only non-monomial
/// relation is `z^{γ3+1} = y^{μ2} w^{μ4}`.
pub fn build_gamma_algebra(frame: &FrameData) -> Result<MonomialAlgebra> {
    let gamma = frame.gamma.clone();
    let gens = &frame.generators;
    let points = box_points(&gamma);
    let value = |p: &[u32]| -> u64 { p.iter().zip(&gens[1..]).map(|(&e, &g)| e as u64 * g).sum() };
    let labels: Vec<BasisLabel> = points
        .iter()
        .map(|p| BasisLabel {
            degree: p.iter().sum(),
            exponents: p.clone(),
            value: Some(value(p)),
        })
        .collect();
    let vars = vars_for_codim(frame.codim());
    if frame.is_complete_intersection() {
        let by_value: HashMap<u64, usize> = labels
            .iter()
            .enumerate()
            .map(|(i, l)| (l.value.unwrap(), i))
            .collect();
        return MonomialAlgebra::from_parts(vars, labels.clone(), |i, j| {
            let s = labels[i].value.unwrap() + labels[j].value.unwrap();
            by_value
                .get(&s)
                .copied()
                .filter(|&k| labels[k].degree == labels[i].degree + labels[j].degree)
        });
    }
    if frame.codim() != 3 {
        return Err(Error::NotApplicable(
            "the box algebra needs a complete intersection or embedding dimension 4".into(),
        ));
    }
    let (mu2, mu4) = gamma_relation(frame)?;
    let index: HashMap<Vec<u32>, usize> = points
        .iter()
        .enumerate()
        .map(|(i, p)| (p.clone(), i))
        .collect();
    MonomialAlgebra::from_parts(vars, labels, |i, j| {
        let mut e: Vec<u32> = points[i]
            .iter()
            .zip(&points[j])
            .map(|(a, b)| a + b)
            .collect();
        while e[1] > gamma[1] {
            e[1] -= gamma[1] + 1;
            e[0] += mu2;
            e[2] += mu4;
        }
        if e[0] > gamma[0] || e[2] > gamma[2] {
            return None;
        }
        index.get(&e).copied()
    })
}

/// `(μ2, μ4)` with `(γ3+1)·g3 = μ2·g2 + μ4·g4`, checking the shape of the
/// frame on the way.
pub(crate) fn gamma_relation(frame: &FrameData) -> Result<(u32, u32)> {
    if frame.rho[0] != 0 || frame.rho[2] != 0 || frame.rho[1] != 1 {
        return Err(Error::NotApplicable(
            "expected γ2 = β2, γ4 = β4 and γ3 < β3".into(),
        ));
    }
    let w = frame
        .witness_for(2)
        .ok_or_else(|| Error::Structure("missing relation for the second generator".into()))?;
    if w.lambda[0] != 0 {
        return Err(Error::Structure(
            "relation involves the multiplicity".into(),
        ));
    }
    Ok((w.lambda[1], w.lambda[3]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::{compute_beta_gamma, NumericalSemigroup};

    fn apery(gens: &[u64]) -> MonomialAlgebra {
        build_algebra(&NumericalSemigroup::new(gens).unwrap().apery_set())
    }

    #[test]
    fn apery_algebra_shapes() {
        let a = apery(&[8, 10, 11, 12]);
        assert_eq!(a.hilbert(), vec![1, 3, 3, 1]);
        assert!(a.is_commutative() && a.is_associative());
        assert!(a.to_graded().is_gorenstein());
        let b = apery(&[6, 7, 15]);
        assert_eq!(b.hilbert(), vec![1, 2, 2, 1]);
        assert!(b.to_graded().is_gorenstein());
        let check = apery(&[3, 4, 5]).to_graded().gorenstein_check();
        assert!(!check.symmetric_hilbert && !check.one_dimensional_socle);
        assert_eq!(check.socle_dims, vec![0, 2]);
        let c = apery(&[16, 18, 21, 27]);
        assert_eq!(c.hilbert(), vec![1, 3, 4, 4, 3, 1]);
    }

    #[test]
    fn gamma_box_algebra() {
        let sg = NumericalSemigroup::new(&[16, 18, 21, 27]).unwrap();
        let frame = compute_beta_gamma(&sg);
        let g = build_gamma_algebra(&frame).unwrap();
        assert_eq!(g.hilbert(), vec![1, 3, 5, 6, 6, 5, 3, 1]);
        assert!(g.is_commutative() && g.is_associative());
        let gg = g.to_graded();
        assert!(gg.is_gorenstein());
        let (colon, q) = g.colon_by_power(1, 2).unwrap();
        assert_eq!(colon.indices.len(), 14);
        assert_eq!(q.hilbert(), vec![1, 3, 4, 4, 3, 1]);
        // complete intersections give back the Apéry algebra
        let ci = compute_beta_gamma(&NumericalSemigroup::new(&[15, 21, 35]).unwrap());
        let g = build_gamma_algebra(&ci).unwrap();
        assert_eq!(g.hilbert(), vec![1, 2, 3, 3, 3, 2, 1]);
        let (_, q) = g.colon_by_power(1, 1).unwrap();
        assert_eq!(q.hilbert(), vec![1, 2, 2, 2, 2, 1]);
        let ci = compute_beta_gamma(&NumericalSemigroup::new(&[8, 10, 11, 12]).unwrap());
        assert_eq!(
            build_gamma_algebra(&ci).unwrap().hilbert(),
            vec![1, 3, 3, 1]
        );
        let not_ci = compute_beta_gamma(&NumericalSemigroup::new(&[6, 7, 8, 9, 10]).unwrap());
        assert!(matches!(
            build_gamma_algebra(&not_ci),
            Err(Error::NotApplicable(_))
        ));
    }

    #[test]
    fn colon_by_variable() {
        let a = apery(&[8, 10, 11, 12]);
        let (_, q) = a.colon_by_power(0, 1).unwrap();
        assert_eq!(q.hilbert(), vec![1, 2, 1]);
        let (colon, zero) = a.colon_by_power(0, 4).unwrap();
        assert_eq!(colon.indices.len(), 8);
        assert!(zero.is_empty() && zero.to_graded().is_zero());
        // the generic linear model agrees
        let (_, gq) = a.to_graded().colon_by_power(0, 1).unwrap();
        assert_eq!(gq.hilbert(), vec![1, 2, 1]);
    }
}
