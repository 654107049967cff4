//! Affine images of the base-2 s-sequence and the representations of even
//! numbers as sums of two terms of the merged sequence `t`.

use std::collections::{BTreeSet, HashMap};

use num_rational::Ratio;
use rayon::prelude::*;

use crate::arith;
use crate::decompose::{decompose_s, DecompositionPair};
use crate::error::{domain, Error, Result};
use crate::sequences::{affine_from_s, counting, s_prefix, s_term, SequenceFamily};

/// `s_n(a,b) = a + b·(s_n^(2) - 1)`.
pub fn affine_s(n: u64, a: u64, b: u64) -> Result<u64> {
    SequenceFamily::AffineS { a, b }.validate()?;
    affine_from_s(s_term(n, 2)?, a, b)
}

/// Solves `s_k(a,b) + 2·s_l(a,b) = N` for `N = 3a + 2bn`.
///
/// Subtracting `3(a - b)` and dividing by `b` turns the equation into the
/// plain s-decomposition of `2n + 3`.
pub fn decompose_affine(n: u64, a: u64, b: u64) -> Result<DecompositionPair> {
    let family = SequenceFamily::AffineS { a, b };
    family.validate()?;
    let base = arith::mul(3, a)?;
    let step = arith::mul(2, b)?;
    if n < base || !(n - base).is_multiple_of(step) {
        return Err(domain(format!("{n} is not of the form 3·{a} + 2·{b}·n")));
    }
    let inner = decompose_s(arith::add((n - base) / b, 3)?, 2)?;
    Ok(DecompositionPair::new(inner.k, inner.l, family))
}

/// Which residue-class refinement to check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Refinement {
    /// `m ≡ 3 (mod 2^(2r-1))` over `s(1,1)`.
    OddModulus,
    /// `m ≡ 3 (mod 2^(2r))` over `s(1,2)`.
    EvenModulus,
}

/// Verifies by exhaustive search that every `m <= bound` in the residue
/// class is uniquely `s_(i(k))(1,b) + 2·s_(i(l))(1,b)` with indices
/// restricted to `i(j) = 2^(r-1)·(j-1) + 1`.
pub fn congruence_refinement_check(r: u64, variant: Refinement, bound: u64) -> Result<bool> {
    if r == 0 {
        return Err(domain("refinement level r must be at least 1"));
    }
    if bound < 3 {
        return Err(domain("bound must be at least 3"));
    }
    let (modulus, b) = match variant {
        Refinement::OddModulus => (arith::pow(2, 2 * r - 1)?, 1),
        Refinement::EvenModulus => (arith::pow(2, 2 * r)?, 2),
    };
    let stride = arith::pow(2, r - 1)?;
    let mut values = Vec::new();
    for j in 1u64.. {
        let index = arith::add(arith::mul(stride, j - 1)?, 1)?;
        let v = affine_s(index, 1, b)?;
        if v > bound {
            break;
        }
        values.push(v);
    }
    let position: HashMap<u64, usize> = values.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let residue = 3 % modulus;
    let first = if residue >= 3 {
        residue
    } else {
        residue + modulus
    };
    let mut m = first;
    while m <= bound {
        let reps = values
            .iter()
            .filter(|&&v| 2 * v <= m && position.contains_key(&(m - 2 * v)))
            .count();
        if reps != 1 {
            return Ok(false);
        }
        m = match m.checked_add(modulus) {
            Some(next) => next,
            None => break,
        };
    }
    Ok(true)
}

/// First `count` terms of the nondecreasing merge of `s(1,1)` and `s(1,2)`;
/// the value 1 appears twice.
pub fn t_prefix(count: usize) -> Result<Vec<u64>> {
    if count == 0 {
        return Err(domain("count must be at least 1"));
    }
    let plain = s_prefix(count, 2)?;
    let doubled = plain
        .iter()
        .map(|&s| affine_from_s(s, 1, 2))
        .collect::<Result<Vec<_>>>()?;
    let mut merged = Vec::with_capacity(count);
    let (mut i, mut j) = (0, 0);
    while merged.len() < count {
        if plain[i] <= doubled[j] {
            merged.push(plain[i]);
            i += 1;
        } else {
            merged.push(doubled[j]);
            j += 1;
        }
    }
    Ok(merged)
}

/// All `t` terms not exceeding `cap`, with multiplicity.
pub fn t_values_up_to(cap: u64) -> Result<Vec<u64>> {
    if cap == 0 {
        return Ok(Vec::new());
    }
    // s(1,1) terms <= cap plus s(1,2) terms <= cap
    let plain = counting(cap, 2)?;
    let doubled = counting(cap.div_ceil(2), 2)?;
    let count = usize::try_from(plain + doubled).map_err(|_| Error::Overflow)?;
    let mut t = t_prefix(count)?;
    t.retain(|&v| v <= cap);
    Ok(t)
}

/// Unordered value pairs `{u, v}`, `u <= v`, of t-values with `u + v = target`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepresentationSet {
    pub target: u64,
    pub pairs: Vec<(u64, u64)>,
}

impl RepresentationSet {
    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }
}

fn check_even(n: u64) -> Result<()> {
    if n < 2 || n % 2 == 1 {
        Err(domain(format!("{n} is not a positive even number")))
    } else {
        Ok(())
    }
}

/// Every representation of the even number `n` as a sum of two t-values,
/// enumerating t-values up to `cap`.
pub fn even_representations(n: u64, cap: u64) -> Result<RepresentationSet> {
    check_even(n)?;
    if cap < n {
        return Err(domain(format!("cap {cap} is below the target {n}")));
    }
    let values: BTreeSet<u64> = t_values_up_to(n)?.into_iter().collect();
    let pairs = values
        .iter()
        .take_while(|&&u| 2 * u <= n)
        .filter(|&&u| values.contains(&(n - u)))
        .map(|&u| (u, n - u))
        .collect();
    Ok(RepresentationSet { target: n, pairs })
}

/// How `v_n` forbids `t_n` when searching for representations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum VTermPolicy {
    /// Forbid the value `t_n`; any remaining value may be used twice.
    #[default]
    ValueAvoidance,
    /// Forbid the index `n`; `k != l` required.
    IndexDistinct,
    /// Forbid the index `n`; `k = l` allowed.
    IndexWithRepetition,
}

/// Least even `N <= search_cap` with no representation `t_k + t_l` under
/// the policy's exclusion of `t_n`.
pub fn v_term(n: u64, search_cap: u64, policy: VTermPolicy) -> Result<u64> {
    if n == 0 {
        return Err(domain("t is indexed from 1"));
    }
    let index = usize::try_from(n).map_err(|_| Error::Overflow)?;
    let t = t_values_up_to(search_cap)?;
    let forbidden = *t_prefix(index)?.last().expect("index >= 1");
    // multiplicity of each value among the allowed indices
    let mut available: HashMap<u64, usize> = HashMap::new();
    for (i, &v) in t.iter().enumerate() {
        let skip = match policy {
            VTermPolicy::ValueAvoidance => v == forbidden,
            VTermPolicy::IndexDistinct | VTermPolicy::IndexWithRepetition => i + 1 == index,
        };
        if !skip {
            *available.entry(v).or_default() += 1;
        }
    }
    let mut sorted: Vec<u64> = available.keys().copied().collect();
    sorted.sort_unstable();
    let representable = |target: u64| {
        sorted.iter().take_while(|&&u| 2 * u <= target).any(|&u| {
            let w = target - u;
            match available.get(&w) {
                None => false,
                Some(&mult) => u != w || policy != VTermPolicy::IndexDistinct || mult >= 2,
            }
        })
    };
    (2..=search_cap)
        .step_by(2)
        .find(|&target| !representable(target))
        .ok_or(Error::CapExhausted { cap: search_cap })
}

/// Number of unordered value representations of each even `N <= bound`;
/// entry `j` is for `N = 2j` (entry 0 unused).
pub fn representation_counts(bound: u64) -> Result<Vec<u32>> {
    let mut values = t_values_up_to(bound)?;
    values.dedup();
    let len = usize::try_from(bound / 2 + 1).map_err(|_| Error::Overflow)?;
    let mut counts = vec![0u32; len];
    for (i, &u) in values.iter().enumerate() {
        for &w in &values[i..] {
            let sum = u + w;
            if sum > bound {
                break;
            }
            if sum % 2 == 0 {
                counts[(sum / 2) as usize] += 1;
            }
        }
    }
    Ok(counts)
}

/// Even `N <= bound` with exactly one representation.
pub fn unique_evens(bound: u64) -> Result<Vec<u64>> {
    if bound < 2 {
        return Err(domain("bound must be at least 2"));
    }
    Ok(representation_counts(bound)?
        .into_iter()
        .enumerate()
        .skip(1)
        .filter(|&(_, c)| c == 1)
        .map(|(j, _)| 2 * j as u64)
        .collect())
}

/// Share of even numbers up to `bound` with a unique representation.
pub fn unique_even_density(bound: u64) -> Result<Ratio<u64>> {
    let unique = unique_evens(bound)?.len() as u64;
    Ok(Ratio::new(unique, bound / 2))
}

/// Even `N <= bound` with no representation at all, checked in parallel.
pub fn unrepresentable_evens(bound: u64) -> Result<Vec<u64>> {
    let values: BTreeSet<u64> = t_values_up_to(bound)?.into_iter().collect();
    let mut missing: Vec<u64> = (1..=bound / 2)
        .into_par_iter()
        .map(|j| 2 * j)
        .filter(|&n| {
            !values
                .iter()
                .take_while(|&&u| 2 * u <= n)
                .any(|&u| values.contains(&(n - u)))
        })
        .collect();
    missing.sort_unstable();
    Ok(missing)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decompose::oracle_decompose;

    #[test]
    fn affine_examples() {
        assert_eq!(affine_s(3, 1, 2), Ok(17));
        for (a, b) in [(1, 1), (4, 9), (7, 2)] {
            assert_eq!(affine_s(1, a, b), Ok(a));
        }
        assert_eq!(affine_s(5, 1, 1), Ok(33));
        let ours: Vec<u64> = (1..=9).map(|n| affine_s(n, 1, 2).unwrap()).collect();
        assert_eq!(ours, vec![1, 5, 17, 21, 65, 69, 81, 85, 257]);
        assert!(affine_s(0, 1, 1).is_err());
        assert!(affine_s(1, 0, 1).is_err());
    }

    #[test]
    fn decompose_affine_examples() {
        let p = decompose_affine(3, 1, 2).unwrap();
        assert_eq!((p.k, p.l), (1, 1));
        let p = decompose_affine(7, 1, 2).unwrap();
        assert_eq!((p.k, p.l), (2, 1));
        assert_eq!(p.recombine(), Ok(7));
        let p = decompose_affine(11, 1, 1).unwrap();
        let q = decompose_s(11, 2).unwrap();
        assert_eq!((p.k, p.l), (q.k, q.l));
        assert!(decompose_affine(5, 1, 2).is_err());
        assert!(decompose_affine(2, 1, 2).is_err());
    }

    #[test]
    fn affine_uniqueness() {
        for (a, b) in [(1, 1), (1, 2), (2, 3), (5, 4)] {
            let family = SequenceFamily::AffineS { a, b };
            for n in 0..=300 {
                let target = 3 * a + 2 * b * n;
                let found = oracle_decompose(target, family).unwrap();
                assert_eq!(found, vec![decompose_affine(target, a, b).unwrap()]);
            }
        }
    }

    #[test]
    fn refinement_examples() {
        assert_eq!(
            congruence_refinement_check(1, Refinement::OddModulus, 1000),
            Ok(true)
        );
        assert_eq!(
            congruence_refinement_check(2, Refinement::OddModulus, 1000),
            Ok(true)
        );
        assert_eq!(
            congruence_refinement_check(2, Refinement::EvenModulus, 1000),
            Ok(true)
        );
        assert!(congruence_refinement_check(0, Refinement::OddModulus, 1000).is_err());
        assert!(congruence_refinement_check(1, Refinement::OddModulus, 2).is_err());
        // 11 = s_3 + 2·s_1 with index 3 = 2·(2-1) + 1
        assert_eq!(s_term(3, 2).unwrap() + 2 * s_term(1, 2).unwrap(), 11);
    }

    #[test]
    fn t_examples() {
        let listed = [
            1, 1, 3, 5, 9, 11, 17, 21, 33, 35, 41, 43, 65, 69, 81, 85, 129, 131, 137, 139, 161, 163,
        ];
        assert_eq!(t_prefix(22).unwrap(), listed);
        assert_eq!(t_prefix(2).unwrap(), vec![1, 1]);
        assert_eq!(t_prefix(6).unwrap(), vec![1, 1, 3, 5, 9, 11]);
        assert!(t_prefix(0).is_err());
    }

    #[test]
    fn t_is_sorted_union() {
        let count = 500;
        let mut union: Vec<u64> = SequenceFamily::AffineS { a: 1, b: 1 }
            .prefix(count)
            .unwrap()
            .into_iter()
            .chain(
                SequenceFamily::AffineS { a: 1, b: 2 }
                    .prefix(count)
                    .unwrap(),
            )
            .collect();
        union.sort_unstable();
        let t = t_prefix(count).unwrap();
        assert_eq!(t[..], union[..count]);
        assert!(t[1..].windows(2).all(|w| w[0] < w[1]));
        let capped = t_values_up_to(163).unwrap();
        assert_eq!(capped, t_prefix(22).unwrap());
    }

    #[test]
    fn representation_examples() {
        assert_eq!(even_representations(2, 2).unwrap().pairs, vec![(1, 1)]);
        assert_eq!(even_representations(30, 30).unwrap().pairs, vec![(9, 21)]);
        assert_eq!(
            even_representations(10, 10).unwrap().pairs,
            vec![(1, 9), (5, 5)]
        );
        assert!(even_representations(7, 10).is_err());
        assert!(even_representations(10, 8).is_err());
    }

    #[test]
    fn counts_match_direct_enumeration() {
        let counts = representation_counts(600).unwrap();
        for j in 1..=300u64 {
            let direct = even_representations(2 * j, 600).unwrap();
            assert_eq!(counts[j as usize] as usize, direct.len(), "N = {}", 2 * j);
        }
    }

    #[test]
    fn v_term_examples() {
        assert_eq!(v_term(1, 200, VTermPolicy::ValueAvoidance), Ok(2));
        assert_eq!(v_term(5, 200, VTermPolicy::ValueAvoidance), Ok(30));
        assert_eq!(v_term(9, 200, VTermPolicy::ValueAvoidance), Ok(114));
        assert_eq!(
            v_term(9, 100, VTermPolicy::ValueAvoidance),
            Err(Error::CapExhausted { cap: 100 })
        );
    }

    #[test]
    fn index_policies_differ() {
        assert_eq!(v_term(5, 200, VTermPolicy::IndexDistinct), Ok(10));
        assert_eq!(
            v_term(1, 200, VTermPolicy::IndexWithRepetition),
            Err(Error::CapExhausted { cap: 200 })
        );
    }

    #[test]
    fn unique_even_examples() {
        assert_eq!(unique_evens(2).unwrap(), vec![2]);
        assert_eq!(unique_evens(10).unwrap(), vec![2, 4, 8]);
        // 94 = 9 + 85 is its only representation.
        assert_eq!(even_representations(94, 94).unwrap().pairs, vec![(9, 85)]);
        assert!(unique_evens(100).unwrap().contains(&94));
        assert!(unique_evens(1).is_err());
    }

    #[test]
    fn density_examples() {
        assert_eq!(unique_even_density(2).unwrap(), Ratio::new(1, 1));
        assert_eq!(unique_even_density(100).unwrap(), Ratio::new(22, 50));
        let d = unique_even_density(10_000).unwrap();
        assert!(*d.numer() > 0 && d < Ratio::new(1, 1));
    }

    #[test]
    fn every_even_is_representable() {
        assert_eq!(unrepresentable_evens(20_000).unwrap(), Vec::<u64>::new());
    }
}
