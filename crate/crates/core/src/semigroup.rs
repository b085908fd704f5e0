//! Numerical semigroups: membership, Frobenius number, Apéry set, orders and
//! representations, M-pure symmetry and the β/γ box data.

use std::collections::BTreeSet;
use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A numerical semigroup given by its minimal generating set.
#[derive(Debug, Clone)]
pub struct NumericalSemigroup {
    generators: Vec<u64>,
    frobenius: i64,
    /// `member[s]` for `0 <= s <= bound`.
    member: Vec<bool>,
    /// `order[s]` for members, `u32::MAX` for gaps.
    order: Vec<u32>,
}

const GAP: u32 = u32::MAX;

impl NumericalSemigroup {
    /// Builds the semigroup generated by `gens`. Duplicates and redundant
    /// generators are dropped silently; the reduced set is kept in
    /// [`generators`](Self::generators).
    pub fn new(gens: &[u64]) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::EmptyInput);
        }
        if gens.contains(&0) {
            return Err(Error::ZeroGenerator);
        }
        let mut sorted = gens.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let g = sorted.iter().fold(0u64, |acc, &x| acc.gcd(&x));
        if g != 1 {
            return Err(Error::GcdNotOne(g));
        }
        let generators = minimal_generators(&sorted);
        let m = generators[0] as usize;

        // Grow the membership table until m consecutive members appear.
        let mut member = vec![true];
        let mut run = 1usize;
        let mut last_gap: i64 = -1;
        while run < m {
            let s = member.len();
            let is_member = generators
                .iter()
                .any(|&g| (g as usize) <= s && member[s - g as usize]);
            member.push(is_member);
            if is_member {
                run += 1;
            } else {
                run = 0;
                last_gap = s as i64;
            }
        }
        let frobenius = last_gap;
        let bound = (frobenius + 2 * m as i64).max(0) as usize;
        let mut sg = NumericalSemigroup {
            generators,
            frobenius,
            member: Vec::new(),
            order: Vec::new(),
        };
        let (member, order) = sg.tables_up_to(bound);
        sg.member = member;
        sg.order = order;
        Ok(sg)
    }

    fn tables_up_to(&self, bound: usize) -> (Vec<bool>, Vec<u32>) {
        let mut member = vec![false; bound + 1];
        let mut order = vec![GAP; bound + 1];
        member[0] = true;
        order[0] = 0;
        for s in 1..=bound {
            let mut best: Option<u32> = None;
            for &g in &self.generators {
                let g = g as usize;
                if g > s {
                    break;
                }
                if member[s - g] {
                    let cand = order[s - g] + 1;
                    best = Some(best.map_or(cand, |b: u32| b.max(cand)));
                }
            }
            if let Some(o) = best {
                member[s] = true;
                order[s] = o;
            }
        }
        (member, order)
    }

    pub fn generators(&self) -> &[u64] {
        &self.generators
    }

    pub fn multiplicity(&self) -> u64 {
        self.generators[0]
    }

    /// Number of minimal generators.
    pub fn embedding_dimension(&self) -> usize {
        self.generators.len()
    }

    /// Largest integer outside the semigroup, `-1` for ℕ.
    pub fn frobenius(&self) -> i64 {
        self.frobenius
    }

    pub fn contains(&self, s: i64) -> bool {
        if s < 0 {
            return false;
        }
        if s > self.frobenius {
            return true;
        }
        self.member[s as usize]
    }

    /// Maximal total degree over all representations of `s`.
    pub fn order(&self, s: u64) -> Result<u32> {
        if !self.contains(s as i64) {
            return Err(Error::NotInSemigroup(s));
        }
        let idx = s as usize;
        if idx < self.order.len() {
            return Ok(self.order[idx]);
        }
        // Past the stored table: extend the DP locally.
        let (_, order) = self.tables_up_to(idx);
        Ok(order[idx])
    }

    /// All representations of `s`, lexicographically descending.
    pub fn representations(&self, s: u64) -> Result<Vec<Representation>> {
        if !self.contains(s as i64) {
            return Err(Error::NotInSemigroup(s));
        }
        let n = self.generators.len();
        let mut out = Vec::new();
        let mut current = vec![0u32; n];
        self.enumerate_reps(0, s, &mut current, &mut out);
        Ok(out)
    }

    fn enumerate_reps(
        &self,
        i: usize,
        residual: u64,
        cur: &mut Vec<u32>,
        out: &mut Vec<Representation>,
    ) {
        let n = self.generators.len();
        let g = self.generators[i];
        if i + 1 == n {
            if residual.is_multiple_of(g) {
                cur[i] = (residual / g) as u32;
                out.push(Representation::new(cur.clone(), &self.generators));
                cur[i] = 0;
            }
            return;
        }
        let max = residual / g;
        for k in (0..=max).rev() {
            cur[i] = k as u32;
            self.enumerate_reps(i + 1, residual - k * g, cur, out);
        }
        cur[i] = 0;
    }

    /// Representations of `s` whose total degree equals `ord(s)`,
    /// lexicographically descending.
    pub fn maximal_representations(&self, s: u64) -> Result<Vec<Representation>> {
        let ord = self.order(s)?;
        let n = self.generators.len();
        let table = if (s as usize) < self.order.len() {
            None
        } else {
            Some(self.tables_up_to(s as usize).1)
        };
        let ord_of = |t: u64| -> u32 {
            match &table {
                Some(o) => o[t as usize],
                None => self.order[t as usize],
            }
        };
        let mut out = Vec::new();
        let mut cur = vec![0u32; n];
        self.enumerate_maximal(s, ord, 0, &ord_of, &mut cur, &mut out);
        out.sort_by(|a, b| b.exponents.cmp(&a.exponents));
        Ok(out)
    }

    fn enumerate_maximal(
        &self,
        s: u64,
        ord: u32,
        min_idx: usize,
        ord_of: &dyn Fn(u64) -> u32,
        cur: &mut Vec<u32>,
        out: &mut Vec<Representation>,
    ) {
        if s == 0 {
            out.push(Representation::new(cur.clone(), &self.generators));
            return;
        }
        for i in min_idx..self.generators.len() {
            let g = self.generators[i];
            if g > s {
                break;
            }
            let rest = s - g;
            if !self.contains(rest as i64) || ord_of(rest) + 1 != ord {
                continue;
            }
            cur[i] += 1;
            self.enumerate_maximal(rest, ord - 1, i, ord_of, cur, out);
            cur[i] -= 1;
        }
    }

    pub fn apery_set(&self) -> AperyTable {
        AperyTable::new(self)
    }
}

impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.generators.iter().map(|g| g.to_string()).collect();
        write!(f, "<{}>", gens.join(","))
    }
}

fn minimal_generators(sorted: &[u64]) -> Vec<u64> {
    let max = *sorted.last().unwrap() as usize;
    let mut reach = vec![false; max + 1];
    reach[0] = true;
    let mut kept: Vec<u64> = Vec::new();
    for &g in sorted {
        if reach[g as usize] {
            continue;
        }
        kept.push(g);
        let g = g as usize;
        for s in g..=max {
            if reach[s - g] {
                reach[s] = true;
            }
        }
    }
    kept
}

/// Canonical comma-joined key of a generator tuple.
pub fn canonical_key(gens: &[u64]) -> String {
    gens.iter()
        .map(|g| g.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// An exponent tuple λ with `value = Σ λ_i g_i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Representation {
    pub exponents: Vec<u32>,
    pub value: u64,
    pub total_degree: u32,
}

impl Representation {
    pub fn new(exponents: Vec<u32>, generators: &[u64]) -> Self {
        let value = exponents
            .iter()
            .zip(generators)
            .map(|(&e, &g)| e as u64 * g)
            .sum();
        let total_degree = exponents.iter().sum();
        Representation {
            exponents,
            value,
            total_degree,
        }
    }
}

/// The Apéry set with respect to the multiplicity, with orders and maximal
/// representations.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AperyTable {
    pub generators: Vec<u64>,
    pub elements: Vec<u64>,
    pub orders: Vec<u32>,
    pub max_reps: Vec<Vec<Representation>>,
    pub socle_degree: u32,
    pub frobenius: i64,
}

impl AperyTable {
    fn new(sg: &NumericalSemigroup) -> Self {
        let m = sg.multiplicity();
        let mut least: Vec<Option<u64>> = vec![None; m as usize];
        let mut found = 0;
        let mut s = 0u64;
        while found < m {
            if sg.contains(s as i64) {
                let r = (s % m) as usize;
                if least[r].is_none() {
                    least[r] = Some(s);
                    found += 1;
                }
            }
            s += 1;
        }
        let mut elements: Vec<u64> = least.into_iter().map(|x| x.unwrap()).collect();
        elements.sort_unstable();
        let orders: Vec<u32> = elements.iter().map(|&w| sg.order(w).unwrap()).collect();
        let max_reps = elements
            .iter()
            .map(|&w| sg.maximal_representations(w).unwrap())
            .collect();
        AperyTable {
            generators: sg.generators().to_vec(),
            socle_degree: *orders.last().unwrap(),
            frobenius: sg.frobenius(),
            elements,
            orders,
            max_reps,
        }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn position(&self, value: u64) -> Option<usize> {
        self.elements.binary_search(&value).ok()
    }

    pub fn contains(&self, value: u64) -> bool {
        self.position(value).is_some()
    }

    pub fn order_of(&self, value: u64) -> Option<u32> {
        self.position(value).map(|i| self.orders[i])
    }

    /// Number of Apéry elements of each order `0..=D`.
    pub fn order_counts(&self) -> Vec<usize> {
        let mut counts = vec![0; self.socle_degree as usize + 1];
        for &o in &self.orders {
            counts[o as usize] += 1;
        }
        counts
    }

    /// Checks both symmetry conditions, reporting the first violation.
    pub fn m_pure_symmetry(&self) -> MPureVerdict {
        let m = self.elements.len();
        let top = self.elements[m - 1];
        let top_ord = self.orders[m - 1];
        for i in 0..m {
            let j = m - 1 - i;
            if self.elements[i] + self.elements[j] != top {
                return MPureVerdict {
                    symmetric: false,
                    violation: Some(MPureViolation {
                        index: i,
                        partner: j,
                        condition: SymmetryCondition::Additive,
                    }),
                };
            }
            if self.orders[i] + self.orders[j] != top_ord {
                return MPureVerdict {
                    symmetric: false,
                    violation: Some(MPureViolation {
                        index: i,
                        partner: j,
                        condition: SymmetryCondition::Order,
                    }),
                };
            }
        }
        MPureVerdict {
            symmetric: true,
            violation: None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SymmetryCondition {
    /// `ω_i + ω_{m-i} ≠ ω_m`
    Additive,
    /// `ord ω_i + ord ω_{m-i} ≠ ord ω_m`
    Order,
}

/// Indices are 0-based positions in the sorted Apéry set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct MPureViolation {
    pub index: usize,
    pub partner: usize,
    pub condition: SymmetryCondition,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct MPureVerdict {
    pub symmetric: bool,
    pub violation: Option<MPureViolation>,
}

pub fn is_m_pure_symmetric(sg: &NumericalSemigroup) -> MPureVerdict {
    sg.apery_set().m_pure_symmetry()
}

/// Double maximal representation `(γ_i+1)·g_i = Σ_{j≠i} λ_j g_j`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GammaWitness {
    /// Position of `g_i` in the generator tuple (0 is the multiplicity).
    pub generator_index: usize,
    pub multiple: u32,
    pub value: u64,
    /// Full exponent tuple of the other representation; `lambda[generator_index] == 0`.
    pub lambda: Vec<u32>,
}

/// β/γ data and the two boxes. Vectors are indexed by `i = 2..=n`, stored at
/// position `i - 2`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FrameData {
    pub generators: Vec<u64>,
    pub beta: Vec<u32>,
    pub gamma: Vec<u32>,
    pub rho: Vec<u32>,
    pub witnesses: Vec<GammaWitness>,
    pub box_b: BTreeSet<u64>,
    pub box_gamma: BTreeSet<u64>,
    pub apery: Vec<u64>,
    pub socle_degree: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoxReport {
    pub b_size: usize,
    pub gamma_size: usize,
    pub apery_size: usize,
    pub gamma_minus_apery: Vec<u64>,
    pub b_minus_gamma: Vec<u64>,
    pub apery_in_gamma: bool,
    pub gamma_in_b: bool,
}

impl FrameData {
    pub fn codim(&self) -> usize {
        self.beta.len()
    }

    /// `Ap(S) = Γ`.
    pub fn is_complete_intersection(&self) -> bool {
        self.box_gamma.len() == self.apery.len()
            && self.apery.iter().all(|a| self.box_gamma.contains(a))
    }

    /// `Ap(S) = B`.
    pub fn is_monomial_ci(&self) -> bool {
        self.box_b.len() == self.apery.len() && self.apery.iter().all(|a| self.box_b.contains(a))
    }

    pub fn witness_for(&self, generator_index: usize) -> Option<&GammaWitness> {
        self.witnesses
            .iter()
            .find(|w| w.generator_index == generator_index)
    }

    pub fn box_report(&self) -> BoxReport {
        let apery: BTreeSet<u64> = self.apery.iter().copied().collect();
        BoxReport {
            b_size: self.box_b.len(),
            gamma_size: self.box_gamma.len(),
            apery_size: apery.len(),
            gamma_minus_apery: self.box_gamma.difference(&apery).copied().collect(),
            b_minus_gamma: self.box_b.difference(&self.box_gamma).copied().collect(),
            apery_in_gamma: apery.is_subset(&self.box_gamma),
            gamma_in_b: self.box_gamma.is_subset(&self.box_b),
        }
    }
}

/// Element sets of the boxes `{Σ λ_i g_i : 0 ≤ λ_i ≤ bound_i}` over `g_2..g_n`.
pub fn box_set(generators: &[u64], bounds: &[u32]) -> BTreeSet<u64> {
    let mut acc: BTreeSet<u64> = BTreeSet::from([0]);
    for (g, &b) in generators.iter().skip(1).zip(bounds) {
        let mut next = BTreeSet::new();
        for &v in &acc {
            for k in 0..=b as u64 {
                next.insert(v + k * g);
            }
        }
        acc = next;
    }
    acc
}

pub fn compute_beta_gamma(sg: &NumericalSemigroup) -> FrameData {
    let table = sg.apery_set();
    compute_beta_gamma_with(sg, &table)
}

pub fn compute_beta_gamma_with(sg: &NumericalSemigroup, table: &AperyTable) -> FrameData {
    let gens = sg.generators();
    let top = *table.elements.last().unwrap();
    let mut beta = Vec::new();
    let mut gamma = Vec::new();
    let mut rho = Vec::new();
    let mut witnesses = Vec::new();
    for (i, &g) in gens.iter().enumerate().skip(1) {
        let mut b = 0u32;
        let mut c = 0u32;
        for h in 1..=(top / g) as u32 {
            let v = h as u64 * g;
            match table.order_of(v) {
                Some(o) if o == h => {
                    b = h;
                    if table.max_reps[table.position(v).unwrap()].len() == 1 {
                        c = h;
                    }
                }
                _ => {}
            }
        }
        if c < b {
            let h = c + 1;
            let v = h as u64 * g;
            let reps = &table.max_reps[table.position(v).unwrap()];
            let other = reps
                .iter()
                .find(|r| r.exponents[i] == 0)
                .expect("double maximal representation without the generator");
            witnesses.push(GammaWitness {
                generator_index: i,
                multiple: h,
                value: v,
                lambda: other.exponents.clone(),
            });
        }
        beta.push(b);
        gamma.push(c);
        rho.push(u32::from(b > c));
    }
    let box_b = box_set(gens, &beta);
    let box_gamma = box_set(gens, &gamma);
    FrameData {
        generators: gens.to_vec(),
        beta,
        gamma,
        rho,
        witnesses,
        box_b,
        box_gamma,
        apery: table.elements.clone(),
        socle_degree: table.socle_degree,
    }
}

/// Names of the degree-one variables for codimension `codim`:
/// `y, z, w` up to three, `x2..xn` beyond.
pub fn variable_names(codim: usize) -> Vec<String> {
    if codim <= 3 {
        ["y", "z", "w"][..codim]
            .iter()
            .map(|s| s.to_string())
            .collect()
    } else {
        (2..=codim + 1).map(|i| format!("x{i}")).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sg(g: &[u64]) -> NumericalSemigroup {
        NumericalSemigroup::new(g).unwrap()
    }

    /// Independent membership oracle: plain reachability by nested addition.
    fn naive_members(gens: &[u64], bound: u64) -> Vec<bool> {
        let mut reach = vec![false; bound as usize + 1];
        reach[0] = true;
        let mut frontier = vec![0u64];
        while let Some(s) = frontier.pop() {
            for &g in gens {
                let t = s + g;
                if t <= bound && !reach[t as usize] {
                    reach[t as usize] = true;
                    frontier.push(t);
                }
            }
        }
        reach
    }

    #[test]
    fn creation_and_errors() {
        assert_eq!(sg(&[8, 10, 11, 12]).multiplicity(), 8);
        assert_eq!(sg(&[6, 4, 10, 9]).generators(), &[4, 6, 9]);
        assert_eq!(NumericalSemigroup::new(&[]).unwrap_err(), Error::EmptyInput);
        assert_eq!(
            NumericalSemigroup::new(&[4, 6]).unwrap_err(),
            Error::GcdNotOne(2)
        );
        assert_eq!(
            NumericalSemigroup::new(&[0, 3]).unwrap_err(),
            Error::ZeroGenerator
        );
    }

    #[test]
    fn minimality_oracle() {
        // Remove any generator reachable from the others.
        let gens = [4u64, 6, 9, 10];
        let kept: Vec<u64> = gens
            .iter()
            .copied()
            .filter(|&g| {
                let others: Vec<u64> = gens.iter().copied().filter(|&h| h != g).collect();
                !naive_members(&others, g)[g as usize]
            })
            .collect();
        assert_eq!(kept, vec![4, 6, 9]);
        assert_eq!(sg(&gens).generators(), kept.as_slice());
    }

    #[test]
    fn natural_numbers() {
        let s = sg(&[1]);
        assert_eq!(s.frobenius(), -1);
        assert_eq!(s.apery_set().elements, vec![0]);
        assert_eq!(s.apery_set().socle_degree, 0);
        assert!(s.contains(0));
    }

    #[test]
    fn membership_and_frobenius_against_oracle() {
        for gens in [
            &[8u64, 10, 11, 12][..],
            &[16, 18, 21, 27],
            &[15, 21, 35],
            &[5, 7],
        ] {
            let s = sg(gens);
            let oracle = naive_members(gens, 300);
            let f = (0..=300)
                .rev()
                .find(|&x| !oracle[x as usize])
                .map_or(-1, |x| x as i64);
            assert_eq!(s.frobenius(), f);
            for x in 0..=300 {
                assert_eq!(s.contains(x), oracle[x as usize], "{gens:?} {x}");
            }
        }
        assert_eq!(sg(&[8, 10, 11, 12]).frobenius(), 25);
        assert_eq!(sg(&[16, 18, 21, 27]).frobenius(), 83);
        assert!(!sg(&[8, 10, 11, 12]).contains(25));
        assert!(sg(&[15, 21, 35]).contains(36));
        assert!(!sg(&[15, 21, 35]).contains(-3));
    }

    #[test]
    fn apery_sets() {
        assert_eq!(
            sg(&[8, 10, 11, 12]).apery_set().elements,
            vec![0, 10, 11, 12, 21, 22, 23, 33]
        );
        assert_eq!(
            sg(&[16, 18, 21, 27]).apery_set().elements,
            vec![0, 18, 21, 27, 36, 39, 42, 45, 54, 57, 60, 63, 72, 78, 81, 99]
        );
        assert_eq!(
            sg(&[6, 7, 8, 9, 10]).apery_set().elements,
            vec![0, 7, 8, 9, 10, 17]
        );
    }

    #[test]
    fn orders() {
        assert_eq!(sg(&[8, 10, 11, 12]).order(33).unwrap(), 3);
        assert_eq!(sg(&[16, 18, 21, 27]).order(99).unwrap(), 5);
        assert_eq!(sg(&[16, 18, 21, 27]).order(0).unwrap(), 0);
        assert_eq!(
            sg(&[8, 10, 11, 12]).order(25),
            Err(Error::NotInSemigroup(25))
        );
        // beyond the stored table
        let s = sg(&[3, 5]);
        let big = 3 * 400;
        assert_eq!(s.order(big).unwrap(), 400);
    }

    #[test]
    fn representations_of_examples() {
        let s = sg(&[8, 10, 11, 12]);
        let reps: Vec<Vec<u32>> = s
            .representations(22)
            .unwrap()
            .into_iter()
            .map(|r| r.exponents)
            .collect();
        assert_eq!(reps, vec![vec![0, 1, 0, 1], vec![0, 0, 2, 0]]);
        let maxr: Vec<Vec<u32>> = s
            .maximal_representations(22)
            .unwrap()
            .into_iter()
            .map(|r| r.exponents)
            .collect();
        assert_eq!(maxr, reps);
        assert_eq!(s.representations(0).unwrap()[0].exponents, vec![0, 0, 0, 0]);

        let s = sg(&[16, 18, 21, 27]);
        let reps: Vec<Vec<u32>> = s
            .representations(99)
            .unwrap()
            .into_iter()
            .map(|r| r.exponents)
            .collect();
        assert!(reps.contains(&vec![0, 4, 0, 1]));
        assert!(reps.contains(&vec![0, 2, 3, 0]));
        let mut sorted = reps.clone();
        sorted.sort_by(|a, b| b.cmp(a));
        assert_eq!(reps, sorted);

        let s = sg(&[15, 21, 35]);
        let maxr: Vec<Vec<u32>> = s
            .maximal_representations(84)
            .unwrap()
            .into_iter()
            .map(|r| r.exponents)
            .collect();
        assert_eq!(maxr, vec![vec![0, 4, 0]]);
        assert_eq!(
            s.maximal_representations(35).unwrap()[0].exponents,
            vec![0, 0, 1]
        );
        assert!(s.representations(1).is_err());
    }

    #[test]
    fn m_pure_symmetry() {
        assert!(sg(&[8, 10, 11, 12]).apery_set().m_pure_symmetry().symmetric);
        assert!(
            sg(&[6, 7, 8, 9, 10])
                .apery_set()
                .m_pure_symmetry()
                .symmetric
        );
        let v = sg(&[4, 5, 6, 7]).apery_set().m_pure_symmetry();
        assert!(!v.symmetric);
        // Ap = {0,5,6,7}: ω_2 + ω_3 = 11 ≠ 7 = ω_4
        assert_eq!(
            v.violation,
            Some(MPureViolation {
                index: 1,
                partner: 2,
                condition: SymmetryCondition::Additive
            })
        );
    }

    /// β/γ oracle: enumerate every representation of h·g_i with the generic
    /// enumerator and test maximality directly.
    fn beta_gamma_oracle(gens: &[u64]) -> (Vec<u32>, Vec<u32>) {
        let s = sg(gens);
        let ap = s.apery_set();
        let top = *ap.elements.last().unwrap();
        let mut beta = vec![];
        let mut gamma = vec![];
        for &g in &gens[1..] {
            let (mut b, mut c) = (0, 0);
            for h in 1..=(top / g + 1) as u32 {
                let v = h as u64 * g;
                if !ap.contains(v) {
                    continue;
                }
                let reps = s.representations(v).unwrap();
                let ord = reps.iter().map(|r| r.total_degree).max().unwrap();
                if ord != h {
                    continue;
                }
                b = b.max(h);
                if reps.iter().filter(|r| r.total_degree == ord).count() == 1 {
                    c = c.max(h);
                }
            }
            beta.push(b);
            gamma.push(c);
        }
        (beta, gamma)
    }

    #[test]
    fn beta_gamma_examples() {
        let f = compute_beta_gamma(&sg(&[8, 10, 11, 12]));
        assert_eq!(
            (f.beta.clone(), f.gamma.clone()),
            (vec![1, 3, 1], vec![1, 1, 1])
        );
        assert_eq!(f.rho, vec![0, 1, 0]);
        let f = compute_beta_gamma(&sg(&[15, 21, 35]));
        assert_eq!((f.beta.clone(), f.gamma.clone()), (vec![4, 2], vec![4, 2]));
        assert!(f.witnesses.is_empty());

        let gens = [16u64, 18, 21, 27];
        let f = compute_beta_gamma(&sg(&gens));
        assert_eq!((f.beta.clone(), f.gamma.clone()), beta_gamma_oracle(&gens));
        assert_eq!(
            (f.beta.clone(), f.gamma.clone()),
            (vec![4, 3, 1], vec![4, 2, 1])
        );
        let w = f.witness_for(2).unwrap();
        assert_eq!(
            (w.multiple, w.value, w.lambda.clone()),
            (3, 63, vec![0, 2, 0, 1])
        );
    }

    #[test]
    fn boxes() {
        let f = compute_beta_gamma(&sg(&[8, 10, 11, 12]));
        let r = f.box_report();
        assert!(f.is_complete_intersection() && !f.is_monomial_ci());
        assert_eq!(r.gamma_size, 8);
        assert!(r.b_size > 8);

        let f = compute_beta_gamma(&sg(&[15, 21, 35]));
        assert!(f.is_monomial_ci());

        let f = compute_beta_gamma(&sg(&[6, 7, 8, 9, 10]));
        let r = f.box_report();
        assert!(!f.is_complete_intersection());
        assert_eq!(f.box_b, f.box_gamma);
        assert!(r.gamma_minus_apery.contains(&15));
        assert!(r.apery_in_gamma && r.gamma_in_b);
    }

    #[test]
    fn variable_naming() {
        assert_eq!(variable_names(3), vec!["y", "z", "w"]);
        assert_eq!(variable_names(4), vec!["x2", "x3", "x4", "x5"]);
        assert!(variable_names(0).is_empty());
    }
}
