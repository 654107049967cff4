//! Solvers for the unique representations `n = m_r(k) + r·m_r(l)`,
//! `N = s_k + r·s_l` and `N = a^(c)(k) + 2·a^(c)(l)`.

use std::collections::HashMap;

use crate::arith;
use crate::error::{domain, Error, Result};
use crate::radix::{check_base, eval_digits, expand};
use crate::sequences::SequenceFamily;

/// The index pair `(k, l)` of a representation `value(k) + r·value(l)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DecompositionPair {
    pub k: u64,
    pub l: u64,
    pub family: SequenceFamily,
}

impl DecompositionPair {
    pub fn new(k: u64, l: u64, family: SequenceFamily) -> Self {
        Self { k, l, family }
    }

    /// `(value(k), value(l))`.
    pub fn values(&self) -> Result<(u64, u64)> {
        Ok((self.family.term(self.k)?, self.family.term(self.l)?))
    }

    /// `value(k) + r·value(l)`.
    pub fn recombine(&self) -> Result<u64> {
        let r = self
            .family
            .multiplier()
            .ok_or_else(|| domain(format!("{} has no additive representation", self.family)))?;
        let (u, v) = self.values()?;
        arith::add(u, arith::mul(r, v)?)
    }
}

/// De-interleaves the base-`r` digits of `n`: even positions give `k`,
/// odd positions give `l`.
pub fn decompose_moser(n: u64, r: u64) -> Result<DecompositionPair> {
    let e = expand(n, r)?;
    let k = eval_digits(e.even_digits().collect::<Vec<_>>().into_iter(), r)?;
    let l = eval_digits(e.odd_digits().collect::<Vec<_>>().into_iter(), r)?;
    Ok(DecompositionPair::new(k, l, SequenceFamily::Moser { r }))
}

/// Solves `s_k + r·s_l = N` for `N ≡ 1 (mod r)`, `N >= r + 1`.
///
/// With `N - r = Σ a_j r^j (j even) + Σ b_j r^j (j odd)`, the odd-position
/// digits give `k - 1` and the even positions from 2 on give `l - 1`.
pub fn decompose_s(n: u64, r: u64) -> Result<DecompositionPair> {
    check_base(r)?;
    if n % r != 1 % r || n < r + 1 {
        return Err(domain(format!(
            "{n} is not of the form N ≡ 1 (mod {r}), N >= {}",
            r + 1
        )));
    }
    let e = expand(n - r, r)?;
    if e.digit(0) != 1 {
        return Err(Error::Identity(format!(
            "lowest base-{r} digit of {} is {}, expected 1",
            n - r,
            e.digit(0)
        )));
    }
    let odd: Vec<u64> = e.odd_digits().collect();
    let even_tail: Vec<u64> = e.even_digits().skip(1).collect();
    let k = arith::add(eval_digits(odd.into_iter(), r)?, 1)?;
    let l = arith::add(eval_digits(even_tail.into_iter(), r)?, 1)?;
    Ok(DecompositionPair::new(k, l, SequenceFamily::S { r }))
}

/// Solves `a^(c)(k) + 2·a^(c)(l) = N` for odd `N >= 3c` by reducing to the
/// base-2 Moser decomposition of `(N - 3c)/2`.
pub fn decompose_shifted(n: u64, c: u64) -> Result<DecompositionPair> {
    let family = SequenceFamily::ShiftedA { c };
    family.validate()?;
    let three_c = arith::mul(3, c)?;
    if n.is_multiple_of(2) || n < three_c {
        return Err(domain(format!(
            "{n} must be odd and at least 3c = {three_c}"
        )));
    }
    let inner = decompose_moser((n - three_c) / 2, 2)?;
    Ok(DecompositionPair::new(inner.k, inner.l, family))
}

/// The family's values up to `limit`, as `(index, value)` pairs.
pub(crate) fn values_up_to(family: &SequenceFamily, limit: u64) -> Result<Vec<(u64, u64)>> {
    let mut out = Vec::new();
    let mut i = family.offset();
    loop {
        match family.term(i) {
            Ok(v) if v <= limit => out.push((i, v)),
            // Increasing families: a term past the range is above any limit.
            Ok(_) | Err(Error::Overflow) => return Ok(out),
            Err(e) => return Err(e),
        }
        i += 1;
    }
}

/// Every pair `(k, l)` with `value(k) + r·value(l) = n`, found by scanning
/// all family values not exceeding `n`. Sorted by `(k, l)`.
pub fn oracle_decompose(n: u64, family: SequenceFamily) -> Result<Vec<DecompositionPair>> {
    let r = family
        .multiplier()
        .ok_or_else(|| domain(format!("{family} has no additive representation")))?;
    let values = values_up_to(&family, n)?;
    let index_of: HashMap<u64, u64> = values.iter().map(|&(i, v)| (v, i)).collect();
    let mut pairs: Vec<DecompositionPair> = values
        .iter()
        .filter_map(|&(l, v)| {
            let rest = n.checked_sub(r.checked_mul(v)?)?;
            index_of
                .get(&rest)
                .map(|&k| DecompositionPair::new(k, l, family))
        })
        .collect();
    pairs.sort_by_key(|p| (p.k, p.l));
    Ok(pairs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sequences::{moser, s_term};
    use proptest::prelude::*;

    fn moser_family(r: u64) -> SequenceFamily {
        SequenceFamily::Moser { r }
    }

    #[test]
    fn moser_examples() {
        let p = decompose_moser(27, 2).unwrap();
        assert_eq!((p.k, p.l), (5, 3));
        assert_eq!(p.values(), Ok((17, 5)));
        assert_eq!(p.recombine(), Ok(27));
        for r in 2..7 {
            let p = decompose_moser(0, r).unwrap();
            assert_eq!((p.k, p.l), (0, 0));
        }
        let p = decompose_moser(10, 3).unwrap();
        assert_eq!((p.k, p.l), (4, 0));
        assert_eq!(moser(4, 3).unwrap() + 3 * moser(0, 3).unwrap(), 10);
    }

    #[test]
    fn s_examples() {
        let p = decompose_s(27, 2).unwrap();
        assert_eq!((p.k, p.l), (3, 3));
        let p = decompose_s(3, 2).unwrap();
        assert_eq!((p.k, p.l), (1, 1));
        let p = decompose_s(10, 3).unwrap();
        assert_eq!((p.k, p.l), (3, 1));
        assert_eq!(s_term(3, 3).unwrap() + 3 * s_term(1, 3).unwrap(), 10);
    }

    #[test]
    fn s_domain_errors() {
        assert!(matches!(decompose_s(4, 2), Err(Error::Domain(_))));
        assert!(matches!(decompose_s(1, 2), Err(Error::Domain(_))));
        assert!(matches!(decompose_s(11, 3), Err(Error::Domain(_))));
        assert!(matches!(decompose_s(3, 3), Err(Error::Domain(_))));
    }

    #[test]
    fn shifted_examples() {
        let p = decompose_shifted(9, 3).unwrap();
        assert_eq!((p.k, p.l), (0, 0));
        // a^(3) = 3, 5, 11, 13, ...; 19 = 13 + 2·3
        let p = decompose_shifted(19, 3).unwrap();
        assert_eq!((p.k, p.l), (3, 0));
        assert_eq!(p.recombine(), Ok(19));
        let found = oracle_decompose(19, SequenceFamily::ShiftedA { c: 3 }).unwrap();
        assert_eq!(found, vec![p]);
        let p = decompose_shifted(15, 5).unwrap();
        assert_eq!((p.k, p.l), (0, 0));
        assert!(decompose_shifted(20, 3).is_err());
        assert!(decompose_shifted(7, 3).is_err());
        assert!(decompose_shifted(21, 4).is_err());
    }

    #[test]
    fn oracle_examples() {
        let found = oracle_decompose(27, moser_family(2)).unwrap();
        assert_eq!(found.len(), 1);
        assert_eq!((found[0].k, found[0].l), (5, 3));
        // 2 = m_2(0) + 2·m_2(1)
        let found = oracle_decompose(2, moser_family(2)).unwrap();
        assert_eq!(
            found.iter().map(|p| (p.k, p.l)).collect::<Vec<_>>(),
            vec![(0, 1)]
        );
        let found = oracle_decompose(4, SequenceFamily::S { r: 3 }).unwrap();
        assert_eq!(
            found.iter().map(|p| (p.k, p.l)).collect::<Vec<_>>(),
            vec![(1, 1)]
        );
        assert!(oracle_decompose(4, SequenceFamily::TUnion).is_err());
    }

    #[test]
    fn uniqueness_sweeps() {
        for r in [2, 3, 4, 5] {
            for n in 0..=2_000u64 {
                let found = oracle_decompose(n, moser_family(r)).unwrap();
                assert_eq!(
                    found,
                    vec![decompose_moser(n, r).unwrap()],
                    "n = {n}, r = {r}"
                );
            }
            for n in (r + 1..=2_000).step_by(r as usize) {
                let found = oracle_decompose(n, SequenceFamily::S { r }).unwrap();
                assert_eq!(found, vec![decompose_s(n, r).unwrap()], "N = {n}, r = {r}");
            }
        }
        for c in [3u64, 5, 7] {
            for n in (3 * c..=2_000).step_by(2) {
                let found = oracle_decompose(n, SequenceFamily::ShiftedA { c }).unwrap();
                assert_eq!(found, vec![decompose_shifted(n, c).unwrap()]);
            }
        }
    }

    #[test]
    fn large_inputs_near_range_limit() {
        let n = arith::LIMIT;
        assert_eq!(decompose_moser(n, 2).unwrap().recombine(), Ok(n));
        let n = arith::LIMIT - (arith::LIMIT % 2) + 1 - 2;
        assert_eq!(decompose_s(n, 2).unwrap().recombine(), Ok(n));
    }

    proptest! {
        #[test]
        fn moser_round_trip(n in 0u64..=arith::LIMIT, r in 2u64..12) {
            let p = decompose_moser(n, r)?;
            prop_assert_eq!(p.recombine()?, n);
        }

        #[test]
        fn s_round_trip(q in 1u64..(1 << 40), r in 2u64..12) {
            let n = q * r + 1;
            let p = decompose_s(n, r)?;
            prop_assert!(p.k >= 1 && p.l >= 1);
            prop_assert_eq!(p.recombine()?, n);
        }

        #[test]
        fn shifted_round_trip(q in 0u64..(1 << 40), c in 1u64..50) {
            let c = 2 * c + 1;
            let n = 3 * c + 2 * q;
            prop_assert_eq!(decompose_shifted(n, c)?.recombine()?, n);
        }
    }
}
