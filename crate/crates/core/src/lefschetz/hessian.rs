//! The Hessian method for `A = Q/Ann(F)`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{
    decide, rational_strings, HessianEvidence, LefschetzReport, Method, Property, Verdict,
    WITNESS_ATTEMPTS,
};
use crate::inverse::{mixed_hessian, DualAlgebraView, HessianMatrix};
use crate::poly::Q;
use crate::polymatrix::{random_point, GenericRank, RankMethod};

const DEFAULT_SEED: u64 = 0x1319_8a2e_0370_7344;

fn evidence<R: Rng + ?Sized>(h: &HessianMatrix, rng: &mut R) -> HessianEvidence {
    let (rows, cols) = (h.matrix.rows(), h.matrix.cols());
    let r = h.matrix.generic_rank_with(rng);
    let required = rows.min(cols);
    HessianEvidence {
        d: h.d,
        t: h.t,
        rows,
        cols,
        required_rank: required,
        generic_rank: r.rank,
        rank_method: r.method,
        determinant_zero: (rows == cols && r.certified()).then_some(r.rank < required),
    }
}

fn by_hessian<R: Rng + ?Sized>(
    view: &DualAlgebraView,
    property: Property,
    rng: &mut R,
) -> LefschetzReport {
    let f = view.generator();
    let top = view.socle_degree();
    let k = top / 2;
    let pairs: Vec<(usize, usize)> = match property {
        Property::Slp => (1..=k).map(|d| (d, d)).collect(),
        Property::Wlp if top % 2 == 1 => vec![(k, k)],
        Property::Wlp if k >= 1 => vec![(k - 1, k)],
        Property::Wlp => Vec::new(),
    };
    let matrices: Vec<HessianMatrix> = pairs
        .iter()
        .map(|&(d, t)| {
            mixed_hessian(f, d, t, view.basis(d), view.basis(t))
                .expect("catalecticant bases are valid")
        })
        .collect();
    let hessians: Vec<HessianEvidence> = matrices.iter().map(|h| evidence(h, rng)).collect();
    let ranks: Vec<(usize, GenericRank)> = hessians
        .iter()
        .map(|h| {
            (
                h.required_rank,
                GenericRank {
                    rank: h.generic_rank,
                    method: h.rank_method,
                },
            )
        })
        .collect();
    let (verdict, probabilistic) = decide(ranks.iter().map(|(r, g)| (*r, g)));
    let mut note = None;
    let witness = if verdict == Verdict::Holds {
        let found = (0..WITNESS_ATTEMPTS)
            .map(|_| random_point(rng, f.nvars()))
            .find(|p| accepts(view, &matrices, p));
        if found.is_none() {
            note = Some("no witness found among random specializations".into());
        }
        found.map(|p| rational_strings(&p))
    } else {
        None
    };
    LefschetzReport {
        property,
        verdict,
        method: Method::Hessian,
        gorenstein: true,
        socle_degree: top,
        k,
        witness,
        maps: Vec::new(),
        hessians,
        probabilistic,
        note,
    }
}

/// `F(a) ≠ 0` and every Hessian has maximal rank at `a`.
fn accepts(view: &DualAlgebraView, matrices: &[HessianMatrix], a: &[Q]) -> bool {
    use num_traits::Zero;
    !view.generator().eval(a).is_zero()
        && matrices.iter().all(|h| {
            let m = h.matrix.eval(a);
            m.rank() == m.rows().min(m.cols())
        })
}

pub fn wlp_by_hessian_with<R: Rng + ?Sized>(
    view: &DualAlgebraView,
    rng: &mut R,
) -> LefschetzReport {
    by_hessian(view, Property::Wlp, rng)
}

pub fn slp_by_hessian_with<R: Rng + ?Sized>(
    view: &DualAlgebraView,
    rng: &mut R,
) -> LefschetzReport {
    by_hessian(view, Property::Slp, rng)
}

pub fn wlp_by_hessian(view: &DualAlgebraView) -> LefschetzReport {
    wlp_by_hessian_with(view, &mut ChaCha8Rng::seed_from_u64(DEFAULT_SEED))
}

pub fn slp_by_hessian(view: &DualAlgebraView) -> LefschetzReport {
    slp_by_hessian_with(view, &mut ChaCha8Rng::seed_from_u64(DEFAULT_SEED))
}

impl LefschetzReport {
    /// `hess^1(F) ≡ 0` according to the attached evidence.
    pub fn first_hessian_vanishes(&self) -> Option<bool> {
        self.hessians
            .iter()
            .find(|h| h.d == 1 && h.t == 1)
            .and_then(|h| h.determinant_zero)
    }

    pub fn rank_methods(&self) -> impl Iterator<Item = RankMethod> + '_ {
        self.maps
            .iter()
            .map(|m| m.rank_method)
            .chain(self.hessians.iter().map(|h| h.rank_method))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lefschetz::verify_rank_witness;
    use crate::lefschetz::wlp_by_ranks;
    use crate::poly::SparsePoly;

    fn view(text: &str) -> DualAlgebraView {
        DualAlgebraView::new(SparsePoly::parse(text).unwrap()).unwrap()
    }

    #[test]
    fn examples() {
        let v = view("y^4*w + y^2*z^3");
        assert!(wlp_by_hessian(&v).holds());
        let s = slp_by_hessian(&v);
        assert!(s.holds());
        assert_eq!(s.hessians.len(), 2);
        assert_eq!(s.first_hessian_vanishes(), Some(false));
        // the Hessian witness is a Lefschetz element for the rank model too
        let alg = v.to_graded().unwrap();
        let w = wlp_by_ranks(&alg);
        assert!(verify_rank_witness(&alg, &w, &s.witness_values().unwrap()));

        let f = view("a^2*x + a*b*y + b^2*z");
        let w = wlp_by_hessian(&f);
        assert_eq!(w.verdict, Verdict::Fails);
        assert_eq!(w.first_hessian_vanishes(), Some(true));
        assert_eq!(slp_by_hessian(&f).verdict, Verdict::Fails);

        assert!(slp_by_hessian(&view("a^2*x*z + a*b*y*z + 1/2*b^2*z^2")).holds());
        assert!(slp_by_hessian(&view("x^5")).holds());
        let xy = slp_by_hessian(&view("x*y"));
        assert!(xy.holds());
        assert_eq!(xy.k, 1);
    }
}
