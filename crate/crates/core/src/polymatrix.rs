//! Matrices over ℚ[v₁,…,vₙ]: specialization, fraction-free (Bareiss)
//! elimination, generic rank and determinants.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::RatMatrix;
use crate::poly::{q, SparsePoly, Q};

/// Largest dimension handled by symbolic elimination in [`PolyMatrix::generic_rank_with`].
pub const SYMBOLIC_LIMIT: usize = 64;
/// Largest size accepted by [`PolyMatrix::determinant`].
pub const DETERMINANT_LIMIT: usize = 12;
/// Number of specializations tried beyond [`SYMBOLIC_LIMIT`].
pub const RANDOM_DRAWS: usize = 5;
/// Specialization values are drawn from `1..=SAMPLE_MAX`.
pub const SAMPLE_MAX: i64 = 10_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RankMethod {
    /// A specialization reached the maximal possible rank.
    Specialization,
    /// Fraction-free elimination over the polynomial ring.
    Symbolic,
    /// Best of several random specializations; a lower bound only.
    Probabilistic,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenericRank {
    pub rank: usize,
    pub method: RankMethod,
}

impl GenericRank {
    pub fn certified(&self) -> bool {
        self.method != RankMethod::Probabilistic
    }
}

pub fn random_point<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Vec<Q> {
    (0..n).map(|_| q(rng.gen_range(1..=SAMPLE_MAX))).collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    vars: Arc<[String]>,
    data: Vec<SparsePoly>,
}

impl PolyMatrix {
    pub fn zeros(vars: Arc<[String]>, rows: usize, cols: usize) -> Self {
        PolyMatrix {
            rows,
            cols,
            data: vec![SparsePoly::zero(vars.clone()); rows * cols],
            vars,
        }
    }

    pub fn from_rows(vars: Arc<[String]>, rows: Vec<Vec<SparsePoly>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        PolyMatrix {
            rows: r,
            cols: c,
            vars,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_rat(vars: Arc<[String]>, m: &RatMatrix) -> Self {
        let mut out = Self::zeros(vars.clone(), m.rows(), m.cols());
        for r in 0..m.rows() {
            for c in 0..m.cols() {
                out.set(
                    r,
                    c,
                    SparsePoly::constant(vars.clone(), m.get(r, c).clone()),
                );
            }
        }
        out
    }

    pub fn identity(vars: Arc<[String]>, n: usize) -> Self {
        Self::from_rat(vars, &RatMatrix::identity(n))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn vars(&self) -> &Arc<[String]> {
        &self.vars
    }

    pub fn get(&self, r: usize, c: usize) -> &SparsePoly {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: SparsePoly) {
        self.data[r * self.cols + c] = v;
    }

    pub fn to_rows(&self) -> Vec<Vec<SparsePoly>> {
        (0..self.rows)
            .map(|r| self.data[r * self.cols..(r + 1) * self.cols].to_vec())
            .collect()
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn is_constant(&self) -> bool {
        self.data.iter().all(|p| p.constant_value().is_some())
    }

    pub fn mul(&self, other: &PolyMatrix) -> PolyMatrix {
        assert_eq!(self.cols, other.rows);
        let mut out = PolyMatrix::zeros(self.vars.clone(), self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * out.cols + j;
                    out.data[idx] = &out.data[idx] + &(a * b);
                }
            }
        }
        out
    }

    pub fn eval(&self, point: &[Q]) -> RatMatrix {
        let mut out = RatMatrix::zeros(self.rows, self.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                let p = self.get(r, c);
                if !p.is_zero() {
                    out.set(r, c, p.eval(point));
                }
            }
        }
        out
    }

    /// Rank over the field of rational functions, computed with a fixed
    /// internal seed.
    pub fn generic_rank(&self) -> GenericRank {
        let mut rng = ChaCha8Rng::seed_from_u64(0x6a09_e667_f3bc_c908);
        self.generic_rank_with(&mut rng)
    }

    /// A specialization reaching `min(rows, cols)` certifies maximal rank;
    /// otherwise the rank is decided by fraction-free elimination, or, past
    /// [`SYMBOLIC_LIMIT`], estimated from [`RANDOM_DRAWS`] specializations.
    pub fn generic_rank_with<R: Rng + ?Sized>(&self, rng: &mut R) -> GenericRank {
        let full = self.rows.min(self.cols);
        if full == 0 {
            return GenericRank {
                rank: 0,
                method: RankMethod::Symbolic,
            };
        }
        if self.is_constant() {
            return GenericRank {
                rank: self.eval(&vec![q(0); self.vars.len()]).rank(),
                method: RankMethod::Symbolic,
            };
        }
        let first = self.eval(&random_point(rng, self.vars.len())).rank();
        if first == full {
            return GenericRank {
                rank: full,
                method: RankMethod::Specialization,
            };
        }
        if self.rows.max(self.cols) <= SYMBOLIC_LIMIT {
            return GenericRank {
                rank: self.symbolic_rank(),
                method: RankMethod::Symbolic,
            };
        }
        let mut best = first;
        for _ in 1..RANDOM_DRAWS {
            best = best.max(self.eval(&random_point(rng, self.vars.len())).rank());
        }
        GenericRank {
            rank: best,
            method: RankMethod::Probabilistic,
        }
    }

    /// Rank by Bareiss elimination over the polynomial ring.
    pub fn symbolic_rank(&self) -> usize {
        let mut a = self.to_rows();
        let (m, n) = (self.rows, self.cols);
        let mut prev = SparsePoly::one(self.vars.clone());
        let mut r = 0;
        for c in 0..n {
            if r == m {
                break;
            }
            let Some(p) = (r..m)
                .filter(|&i| !a[i][c].is_zero())
                .min_by_key(|&i| a[i][c].len())
            else {
                continue;
            };
            a.swap(r, p);
            bareiss_step(&mut a, r, c, &prev);
            prev = a[r][c].clone();
            r += 1;
        }
        r
    }

    /// Exact determinant by fraction-free elimination.
    pub fn determinant(&self) -> Result<SparsePoly> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        if self.rows > DETERMINANT_LIMIT {
            return Err(Error::SizeLimit(format!(
                "determinant of a {0}x{0} polynomial matrix (limit {DETERMINANT_LIMIT})",
                self.rows
            )));
        }
        let n = self.rows;
        if n == 0 {
            return Ok(SparsePoly::one(self.vars.clone()));
        }
        let mut a = self.to_rows();
        let mut prev = SparsePoly::one(self.vars.clone());
        let mut negate = false;
        for k in 0..n {
            let Some(p) = (k..n)
                .filter(|&i| !a[i][k].is_zero())
                .min_by_key(|&i| a[i][k].len())
            else {
                return Ok(SparsePoly::zero(self.vars.clone()));
            };
            if p != k {
                a.swap(k, p);
                negate = !negate;
            }
            bareiss_step(&mut a, k, k, &prev);
            prev = a[k][k].clone();
        }
        let det = a[n - 1][n - 1].clone();
        Ok(if negate { -&det } else { det })
    }
}

fn bareiss_step(a: &mut [Vec<SparsePoly>], r: usize, c: usize, prev: &SparsePoly) {
    let m = a.len();
    let n = a[0].len();
    let (top, rest) = a.split_at_mut(r + 1);
    let pivot_row = &top[r];
    let pivot = &pivot_row[c];
    for row in rest.iter_mut().take(m - r - 1) {
        let lead = row[c].clone();
        for j in c + 1..n {
            let mut v = pivot * &row[j];
            if !lead.is_zero() && !pivot_row[j].is_zero() {
                v = &v - &(&lead * &pivot_row[j]);
            }
            row[j] = v
                .div_exact(prev)
                .expect("fraction-free elimination produced an inexact division");
        }
        row[c] = SparsePoly::zero(pivot.vars().clone());
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::var_list;

    fn pm(vars: &[&str], rows: &[&[&str]]) -> PolyMatrix {
        let v = var_list(vars);
        PolyMatrix::from_rows(
            v.clone(),
            rows.iter()
                .map(|r| {
                    r.iter()
                        .map(|s| SparsePoly::parse_with_vars(s, v.clone()).unwrap())
                        .collect()
                })
                .collect(),
        )
    }

    /// Laplace expansion along the first row; independent of elimination.
    fn cofactor_det(m: &PolyMatrix) -> SparsePoly {
        let n = m.rows();
        if n == 0 {
            return SparsePoly::one(m.vars().clone());
        }
        let mut total = SparsePoly::zero(m.vars().clone());
        for j in 0..n {
            let minor_rows: Vec<Vec<SparsePoly>> = (1..n)
                .map(|i| {
                    (0..n)
                        .filter(|&c| c != j)
                        .map(|c| m.get(i, c).clone())
                        .collect()
                })
                .collect();
            let minor = PolyMatrix::from_rows(m.vars().clone(), minor_rows);
            let term = m.get(0, j) * &cofactor_det(&minor);
            total = if j % 2 == 0 {
                &total + &term
            } else {
                &total - &term
            };
        }
        total
    }

    #[test]
    fn trivial_ranks() {
        let m = pm(&["a2", "a3"], &[&["a2", "a3"], &["a3", "a2"]]);
        assert_eq!(m.generic_rank().rank, 2);
        assert_eq!(m.symbolic_rank(), 2);
        let z = PolyMatrix::zeros(var_list(&["a"]), 3, 4);
        assert_eq!(z.generic_rank().rank, 0);
        assert_eq!(z.symbolic_rank(), 0);
    }

    #[test]
    fn deficient_rank_is_symbolic() {
        // rows 3 = row1 * x + row2
        let m = pm(
            &["x", "y"],
            &[
                &["x", "y", "1"],
                &["y", "x", "x + y"],
                &["x^2 + y", "x*y + x", "2*x + y"],
            ],
        );
        let g = m.generic_rank();
        assert_eq!(
            g,
            GenericRank {
                rank: 2,
                method: RankMethod::Symbolic
            }
        );
        assert!(m.determinant().unwrap().is_zero());
        assert!(cofactor_det(&m).is_zero());
    }

    #[test]
    fn determinant_matches_cofactor_expansion() {
        let m = pm(
            &["y", "z", "w"],
            &[
                &["12*y^2*w + 2*z^3", "6*y*z^2", "4*y^3"],
                &["6*y*z^2", "6*y^2*z", "0"],
                &["4*y^3", "0", "0"],
            ],
        );
        let d = m.determinant().unwrap();
        assert_eq!(d, cofactor_det(&m));
        assert_eq!(d.to_string(), "-96*y^8*z");

        let m = pm(
            &["a", "b", "c"],
            &[
                &["a", "b", "0", "c"],
                &["0", "a + b", "c", "1"],
                &["b", "0", "a*c", "a"],
                &["1", "c", "b", "a - b"],
            ],
        );
        assert_eq!(m.determinant().unwrap(), cofactor_det(&m));
    }

    #[test]
    fn determinant_errors() {
        let m = PolyMatrix::zeros(var_list(&["a"]), 2, 3);
        assert!(matches!(m.determinant(), Err(Error::NotSquare { .. })));
        let m = PolyMatrix::identity(var_list(&["a"]), 13);
        assert!(matches!(m.determinant(), Err(Error::SizeLimit(_))));
    }
}
