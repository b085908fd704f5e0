//! The rank method: generic ranks of multiplication maps by a linear form
//! with indeterminate coefficients.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{
    decide, rational_strings, LefschetzReport, MapEvidence, Method, Property, Verdict,
    WITNESS_ATTEMPTS,
};
use crate::algebra::{GradedAlgebra, LinearForm};
use crate::linalg::RatMatrix;
use crate::poly::Q;
use crate::polymatrix::{
    random_point, GenericRank, PolyMatrix, RankMethod, RANDOM_DRAWS, SYMBOLIC_LIMIT,
};

const DEFAULT_SEED: u64 = 0x243f_6a88_85a3_08d3;

/// `×L^power` from degree `from`, with `L` evaluated at `point`.
fn specialized_power(alg: &GradedAlgebra, point: &[Q], from: usize, power: usize) -> RatMatrix {
    let mut m = RatMatrix::identity(alg.dim_at(from));
    for step in 0..power {
        m = alg.specialized_map(point, from + step).mul(&m);
    }
    m
}

/// Generic rank of `×L^power: A_from → A_{from+power}`. Tries one
/// specialization first; the symbolic product is only formed if it is
/// rank-deficient.
fn power_map_rank<R: Rng + ?Sized>(
    alg: &GradedAlgebra,
    singles: &[PolyMatrix],
    from: usize,
    power: usize,
    rng: &mut R,
) -> GenericRank {
    let (rows, cols) = (alg.dim_at(from + power), alg.dim_at(from));
    let full = rows.min(cols);
    let point = random_point(rng, alg.nvars());
    if specialized_power(alg, &point, from, power).rank() == full {
        return GenericRank {
            rank: full,
            method: RankMethod::Specialization,
        };
    }
    if rows.max(cols) > SYMBOLIC_LIMIT {
        return sampled_power_rank(alg, from, power, rng);
    }
    let mut m = singles[from].clone();
    for step in 1..power {
        m = singles[from + step].mul(&m);
    }
    GenericRank {
        rank: m.symbolic_rank(),
        method: RankMethod::Symbolic,
    }
}

/// Best of several specializations of a large power map.
fn sampled_power_rank<R: Rng + ?Sized>(
    alg: &GradedAlgebra,
    from: usize,
    power: usize,
    rng: &mut R,
) -> GenericRank {
    let best = (0..RANDOM_DRAWS)
        .map(|_| specialized_power(alg, &random_point(rng, alg.nvars()), from, power).rank())
        .max()
        .unwrap_or(0);
    GenericRank {
        rank: best,
        method: RankMethod::Probabilistic,
    }
}

fn map_specs(
    alg: &GradedAlgebra,
    property: Property,
    gorenstein: bool,
) -> Vec<(usize, usize, bool)> {
    let top = alg.socle_degree();
    let k = top / 2;
    match property {
        Property::Wlp => (0..top)
            .map(|i| {
                let decisive = if !gorenstein {
                    true
                } else if top % 2 == 1 {
                    i == k
                } else {
                    i + 1 == k
                };
                (i, 1, decisive)
            })
            .collect(),
        Property::Slp if gorenstein => (0..top)
            .take_while(|i| 2 * i < top)
            .map(|i| (i, top - 2 * i, true))
            .collect(),
        Property::Slp => (0..top)
            .flat_map(|i| (1..=top - i).map(move |d| (i, d, true)))
            .collect(),
    }
}

fn by_ranks<R: Rng + ?Sized>(
    alg: &GradedAlgebra,
    property: Property,
    rng: &mut R,
) -> LefschetzReport {
    let top = alg.socle_degree();
    let gorenstein = alg.is_gorenstein();
    let generic = LinearForm::generic(alg.nvars());
    let singles: Vec<PolyMatrix> = (0..top).map(|i| alg.linear_map(&generic, i)).collect();
    let maps: Vec<MapEvidence> = map_specs(alg, property, gorenstein)
        .into_iter()
        .map(|(from, power, decisive)| {
            let r = power_map_rank(alg, &singles, from, power, rng);
            let (rows, cols) = (alg.dim_at(from + power), alg.dim_at(from));
            MapEvidence {
                from_degree: from,
                power,
                rows,
                cols,
                required_rank: rows.min(cols),
                generic_rank: r.rank,
                rank_method: r.method,
                decisive,
            }
        })
        .collect();
    let ranks: Vec<(usize, GenericRank)> = maps
        .iter()
        .filter(|m| m.decisive)
        .map(|m| {
            (
                m.required_rank,
                GenericRank {
                    rank: m.generic_rank,
                    method: m.rank_method,
                },
            )
        })
        .collect();
    let (verdict, mut probabilistic) = decide(ranks.iter().map(|(r, g)| (*r, g)));
    probabilistic |= maps
        .iter()
        .any(|m| m.rank_method == RankMethod::Probabilistic);
    let mut note = None;
    let witness = if verdict == Verdict::Holds {
        let found = (0..WITNESS_ATTEMPTS)
            .map(|_| random_point(rng, alg.nvars()))
            .find(|p| verify_maps(alg, &maps, p));
        if found.is_none() {
            note = Some("no witness found among random specializations".into());
        }
        found.map(|p| rational_strings(&p))
    } else {
        None
    };
    if gorenstein && verdict == Verdict::Holds && maps.iter().any(|m| !m.decisive && !m.maximal()) {
        note = Some("middle map is maximal but another map is not".into());
    }
    LefschetzReport {
        property,
        verdict,
        method: Method::Ranks,
        gorenstein,
        socle_degree: top,
        k: top / 2,
        witness,
        maps,
        hessians: Vec::new(),
        probabilistic,
        note,
    }
}

/// Every map whose generic rank is maximal is also maximal at `point`.
fn verify_maps(alg: &GradedAlgebra, maps: &[MapEvidence], point: &[Q]) -> bool {
    maps.iter()
        .filter(|m| m.maximal())
        .all(|m| specialized_power(alg, point, m.from_degree, m.power).rank() == m.required_rank)
}

/// Re-checks a witness exactly: every map listed in `report` that is
/// maximal generically is maximal for `L = Σ point_j x_j`.
pub fn verify_rank_witness(alg: &GradedAlgebra, report: &LefschetzReport, point: &[Q]) -> bool {
    point.len() == alg.nvars() && verify_maps(alg, &report.maps, point)
}

pub fn wlp_by_ranks_with<R: Rng + ?Sized>(alg: &GradedAlgebra, rng: &mut R) -> LefschetzReport {
    by_ranks(alg, Property::Wlp, rng)
}

pub fn slp_by_ranks_with<R: Rng + ?Sized>(alg: &GradedAlgebra, rng: &mut R) -> LefschetzReport {
    by_ranks(alg, Property::Slp, rng)
}

/// WLP with a fixed internal seed.
pub fn wlp_by_ranks(alg: &GradedAlgebra) -> LefschetzReport {
    wlp_by_ranks_with(alg, &mut ChaCha8Rng::seed_from_u64(DEFAULT_SEED))
}

/// SLP with a fixed internal seed.
pub fn slp_by_ranks(alg: &GradedAlgebra) -> LefschetzReport {
    slp_by_ranks_with(alg, &mut ChaCha8Rng::seed_from_u64(DEFAULT_SEED))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::build_algebra;
    use crate::inverse::DualAlgebraView;
    use crate::poly::SparsePoly;
    use crate::semigroup::NumericalSemigroup;

    fn apery(g: &[u64]) -> GradedAlgebra {
        build_algebra(&NumericalSemigroup::new(g).unwrap().apery_set()).to_graded()
    }

    #[test]
    fn apery_examples() {
        let a = apery(&[8, 10, 11, 12]);
        let w = wlp_by_ranks(&a);
        assert_eq!(w.verdict, Verdict::Holds);
        let p = w.witness_values().unwrap();
        assert!(verify_rank_witness(&a, &w, &p));
        let b = apery(&[16, 18, 21, 27]);
        assert!(slp_by_ranks(&b).holds() && wlp_by_ranks(&b).holds());
        let line = apery(&[7, 8]);
        assert_eq!(line.hilbert(), vec![1, 1, 1, 1, 1, 1, 1]);
        assert!(slp_by_ranks(&line).holds());
    }

    #[test]
    fn vanishing_hessian_algebra_fails() {
        let f = SparsePoly::parse("a^2*x + a*b*y + b^2*z").unwrap();
        let a = DualAlgebraView::new(f).unwrap().to_graded().unwrap();
        let w = wlp_by_ranks(&a);
        assert_eq!(w.verdict, Verdict::Fails);
        assert!(w
            .maps
            .iter()
            .any(|m| m.decisive && m.rank_method == RankMethod::Symbolic));
        let g = SparsePoly::parse("a^2*x*z + a*b*y*z + 1/2*b^2*z^2").unwrap();
        let g = DualAlgebraView::new(g).unwrap().to_graded().unwrap();
        assert!(slp_by_ranks(&g).holds());
    }

    #[test]
    fn non_gorenstein_checks_every_map() {
        let a = apery(&[4, 5, 6, 7]);
        let w = wlp_by_ranks(&a);
        assert!(!w.gorenstein);
        assert!(w.maps.iter().all(|m| m.decisive));
        assert_eq!(w.maps.len(), a.socle_degree());
    }
}
