//! Enumeration of numerical semigroups by multiplicity, embedding dimension
//! and largest generator.

use std::ops::RangeInclusive;
use std::path::PathBuf;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::semigroup::{compute_beta_gamma_with, NumericalSemigroup};

#[derive(Debug, Clone)]
pub struct SweepConfig {
    pub multiplicity: RangeInclusive<u64>,
    /// Upper bound for every generator.
    pub max_generator: u64,
    /// Embedding dimension (number of minimal generators).
    pub generators: RangeInclusive<usize>,
    pub require_m_pure: bool,
    pub require_ci_or_codim3: bool,
    pub output: Option<PathBuf>,
    pub resume: bool,
}

impl SweepConfig {
    pub fn new(
        multiplicity: RangeInclusive<u64>,
        max_generator: u64,
        generators: RangeInclusive<usize>,
    ) -> Self {
        SweepConfig {
            multiplicity,
            max_generator,
            generators,
            require_m_pure: false,
            require_ci_or_codim3: false,
            output: None,
            resume: false,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.multiplicity.is_empty() {
            return Err(Error::InvalidConfig("multiplicity range is empty".into()));
        }
        if self.generators.is_empty() {
            return Err(Error::InvalidConfig(
                "generator count range is empty".into(),
            ));
        }
        if *self.multiplicity.start() == 0 || *self.generators.start() == 0 {
            return Err(Error::InvalidConfig(
                "multiplicity and generator count must be positive".into(),
            ));
        }
        if self.resume && self.output.is_none() {
            return Err(Error::InvalidConfig("resume needs an output path".into()));
        }
        Ok(())
    }

    /// Minimal generator tuples in range, in lexicographic order, before
    /// filtering.
    pub fn tuples(&self) -> Result<Vec<Vec<u64>>> {
        self.validate()?;
        let mut out = Vec::new();
        for m in self.multiplicity.clone() {
            if m > self.max_generator {
                break;
            }
            let mut reach = vec![false; self.max_generator as usize + 1];
            reach[0] = true;
            let mut used = vec![false; m as usize];
            used[0] = true;
            let mut current = vec![m];
            extend_reach(&mut reach, m);
            self.descend(&mut current, &mut reach, &mut used, &mut out);
        }
        Ok(out)
    }

    fn descend(
        &self,
        current: &mut Vec<u64>,
        reach: &mut [bool],
        used: &mut [bool],
        out: &mut Vec<Vec<u64>>,
    ) {
        let n = current.len();
        if self.generators.contains(&n) && current.iter().fold(0, |g: u64, &x| g.gcd(&x)) == 1 {
            out.push(current.clone());
        }
        if n >= *self.generators.end() {
            return;
        }
        let m = current[0];
        let last = *current.last().unwrap();
        for g in last + 1..=self.max_generator {
            // Distinct residues are necessary for minimality; the reach
            // table catches the rest (later generators never generate
            // earlier ones).
            let r = (g % m) as usize;
            if used[r] || reach[g as usize] {
                continue;
            }
            let saved = reach.to_vec();
            used[r] = true;
            extend_reach(reach, g);
            current.push(g);
            self.descend(current, reach, used, out);
            current.pop();
            used[r] = false;
            reach.copy_from_slice(&saved);
        }
    }

    fn accepts(&self, sg: &NumericalSemigroup) -> bool {
        if !self.require_m_pure && !self.require_ci_or_codim3 {
            return true;
        }
        let table = sg.apery_set();
        if self.require_m_pure && !table.m_pure_symmetry().symmetric {
            return false;
        }
        if self.require_ci_or_codim3 && sg.embedding_dimension() != 4 {
            return compute_beta_gamma_with(sg, &table).is_complete_intersection();
        }
        true
    }

    /// Semigroups in range passing the filters.
    pub fn semigroups(&self) -> Result<Vec<NumericalSemigroup>> {
        let mut out = Vec::new();
        for t in self.tuples()? {
            let sg = NumericalSemigroup::new(&t)?;
            debug_assert_eq!(sg.generators(), &t[..]);
            if self.accepts(&sg) {
                out.push(sg);
            }
        }
        Ok(out)
    }
}

fn extend_reach(reach: &mut [bool], g: u64) {
    let g = g as usize;
    for s in g..reach.len() {
        if reach[s - g] {
            reach[s] = true;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_ranges() {
        let c = SweepConfig::new(3..=3, 8, 2..=3);
        assert_eq!(
            c.tuples().unwrap(),
            vec![
                vec![3, 4],
                vec![3, 4, 5],
                vec![3, 5],
                vec![3, 5, 7],
                vec![3, 7],
                vec![3, 7, 8],
                vec![3, 8]
            ]
        );
        assert!(SweepConfig::new(3..=3, 20, 4..=4)
            .tuples()
            .unwrap()
            .is_empty());
        assert!(SweepConfig::new(RangeInclusive::new(5, 4), 20, 3..=3)
            .validate()
            .is_err());
    }

    #[test]
    fn filters() {
        let mut c = SweepConfig::new(8..=8, 12, 4..=4);
        c.require_m_pure = true;
        c.require_ci_or_codim3 = true;
        let keys: Vec<Vec<u64>> = c
            .semigroups()
            .unwrap()
            .iter()
            .map(|s| s.generators().to_vec())
            .collect();
        assert!(keys.contains(&vec![8, 10, 11, 12]));
        for k in &keys {
            assert!(
                NumericalSemigroup::new(k)
                    .unwrap()
                    .apery_set()
                    .m_pure_symmetry()
                    .symmetric
            );
        }
    }
}
