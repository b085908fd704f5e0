//! Sufficient conditions for the WLP of complete intersections.

use crate::error::{Error, Result};
use crate::semigroup::FrameData;

/// `d_n ≥ d_1 + … + d_{n−1} − n` for the sorted generator degrees of a
/// complete intersection; `true` implies the WLP.
pub fn ci_degree_criterion(degrees: &[u32]) -> Result<bool> {
    if let Some(&d) = degrees.iter().find(|&&d| d < 2) {
        return Err(Error::DegreeTooSmall(d));
    }
    let mut sorted = degrees.to_vec();
    sorted.sort_unstable();
    let Some((&last, rest)) = sorted.split_last() else {
        return Ok(true);
    };
    let bound = rest.iter().map(|&d| d as i64).sum::<i64>() - sorted.len() as i64;
    Ok(last as i64 >= bound)
}

/// Some `γ_i ≥ (D−2)/2`.
pub fn gamma_criterion_values(gamma: &[u32], socle_degree: u32) -> bool {
    gamma
        .iter()
        .any(|&g| 2 * g as i64 >= socle_degree as i64 - 2)
}

/// [`gamma_criterion_values`] for the frame of a complete intersection.
pub fn gamma_criterion(frame: &FrameData, socle_degree: u32) -> Result<bool> {
    if !frame.is_complete_intersection() {
        return Err(Error::NotCi);
    }
    Ok(gamma_criterion_values(&frame.gamma, socle_degree))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::{compute_beta_gamma, NumericalSemigroup};

    #[test]
    fn degree_criterion() {
        assert!(ci_degree_criterion(&[5, 3, 2]).unwrap());
        assert!(ci_degree_criterion(&[2, 2, 2]).unwrap());
        assert!(!ci_degree_criterion(&[2, 2, 2, 2, 2]).unwrap());
        assert!(matches!(
            ci_degree_criterion(&[1, 3]),
            Err(Error::DegreeTooSmall(1))
        ));
    }

    #[test]
    fn gamma() {
        let frame = |g: &[u64]| compute_beta_gamma(&NumericalSemigroup::new(g).unwrap());
        assert!(gamma_criterion(&frame(&[15, 21, 35]), 6).unwrap());
        assert!(gamma_criterion(&frame(&[8, 10, 11, 12]), 3).unwrap());
        assert!(gamma_criterion_values(&[1, 1, 1, 1], 4));
        assert!(gamma_criterion_values(&[2, 3, 3], 8));
        assert!(!gamma_criterion_values(&[3, 3, 3], 9));
        assert!(!gamma_criterion_values(&[2, 2, 2, 2], 8));
        assert!(matches!(
            gamma_criterion(&frame(&[6, 7, 8, 9, 10]), 2),
            Err(Error::NotCi)
        ));
    }
}
