//! The bijection between `{N ≡ 1 (mod r) : r+1 <= N <= r^(2t+1)+1}` and the
//! lattice square `[1, r^t] × [1, r^t]`, and an exhaustive shortest/longest
//! open path through the square in the order of a permutation of `N`.

use crate::arith;
use crate::decompose::decompose_s;
use crate::error::{domain, Error, Result};
use crate::radix::check_base;
use crate::sequences::s_term;

/// Largest number of points [`path_tsp`] will enumerate.
pub const TSP_POINT_LIMIT: u64 = 10;

/// Tolerance used when comparing path lengths.
pub const LENGTH_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticePoint {
    pub k: u64,
    pub l: u64,
}

/// Side length `r^t` of the square.
pub fn side(r: u64, t: u64) -> Result<u64> {
    check_base(r)?;
    arith::pow(r, t)
}

/// `r+1, 2r+1, ..., r^(2t+1)+1`.
pub fn interval(r: u64, t: u64) -> Result<Vec<u64>> {
    check_base(r)?;
    let top = arith::add(arith::pow(r, arith::add(arith::mul(2, t)?, 1)?)?, 1)?;
    Ok((1..=top / r).map(|j| j * r + 1).collect())
}

pub fn to_lattice(n: u64, r: u64, t: u64) -> Result<LatticePoint> {
    check_base(r)?;
    let top = arith::add(arith::pow(r, arith::add(arith::mul(2, t)?, 1)?)?, 1)?;
    if n % r != 1 || n < r + 1 || n > top {
        return Err(domain(format!(
            "{n} is outside {{N ≡ 1 (mod {r}) : {} <= N <= {top}}}",
            r + 1
        )));
    }
    let p = decompose_s(n, r)?;
    let edge = side(r, t)?;
    if p.k > edge || p.l > edge {
        return Err(Error::Identity(format!(
            "{n} maps to ({}, {}) outside [1, {edge}]^2",
            p.k, p.l
        )));
    }
    Ok(LatticePoint { k: p.k, l: p.l })
}

/// `s_k + r·s_l`.
pub fn from_lattice(p: LatticePoint, r: u64) -> Result<u64> {
    if p.k == 0 || p.l == 0 {
        return Err(domain("lattice coordinates start at 1"));
    }
    arith::add(s_term(p.k, r)?, arith::mul(r, s_term(p.l, r)?)?)
}

/// Every `N` of the interval with its lattice point.
pub fn lattice_table(r: u64, t: u64) -> Result<Vec<(u64, LatticePoint)>> {
    interval(r, t)?
        .into_iter()
        .map(|n| Ok((n, to_lattice(n, r, t)?)))
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Objective {
    Min,
    Max,
}

/// An optimal visiting order of the interval and its Euclidean length.
#[derive(Debug, Clone, PartialEq)]
pub struct TspPath {
    pub order: Vec<u64>,
    pub length: f64,
    /// Lengths within this distance are treated as ties.
    pub tolerance: f64,
}

struct Search<'a> {
    dist: &'a [Vec<f64>],
    objective: Objective,
    used: Vec<bool>,
    current: Vec<usize>,
    best: Option<(Vec<usize>, f64)>,
}

impl Search<'_> {
    fn improves(&self, length: f64) -> bool {
        match (&self.best, self.objective) {
            (None, _) => true,
            (Some((_, b)), Objective::Min) => length < b - LENGTH_TOLERANCE,
            (Some((_, b)), Objective::Max) => length > b + LENGTH_TOLERANCE,
        }
    }

    // Depth-first in lexicographic order, so among ties the first path
    // found is the lexicographically least.
    fn run(&mut self, partial: f64) {
        let n = self.dist.len();
        if self.current.len() == n {
            if self.improves(partial) {
                self.best = Some((self.current.clone(), partial));
            }
            return;
        }
        if self.objective == Objective::Min && !self.improves(partial) {
            return;
        }
        for next in 0..n {
            if self.used[next] {
                continue;
            }
            let added = self
                .current
                .last()
                .map_or(0.0, |&prev| self.dist[prev][next]);
            self.used[next] = true;
            self.current.push(next);
            self.run(partial + added);
            self.current.pop();
            self.used[next] = false;
        }
    }
}

/// Exhaustive optimal open path over the `r^(2t)` lattice points, visited in
/// the order of a permutation of the interval. Ties go to the
/// lexicographically least permutation.
pub fn path_tsp(r: u64, t: u64, objective: Objective) -> Result<TspPath> {
    check_base(r)?;
    let points = arith::pow(r, arith::mul(2, t)?)?;
    if points > TSP_POINT_LIMIT {
        return Err(Error::TooLarge {
            points,
            limit: TSP_POINT_LIMIT,
        });
    }
    let table = lattice_table(r, t)?;
    let dist: Vec<Vec<f64>> = table
        .iter()
        .map(|(_, a)| {
            table
                .iter()
                .map(|(_, b)| {
                    let dk = a.k.abs_diff(b.k) as f64;
                    let dl = a.l.abs_diff(b.l) as f64;
                    dk.hypot(dl)
                })
                .collect()
        })
        .collect();
    let mut search = Search {
        dist: &dist,
        objective,
        used: vec![false; table.len()],
        current: Vec::with_capacity(table.len()),
        best: None,
    };
    search.run(0.0);
    let (order, length) = search.best.expect("at least one point");
    Ok(TspPath {
        order: order.into_iter().map(|i| table[i].0).collect(),
        length,
        tolerance: LENGTH_TOLERANCE,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn to_lattice_examples() {
        assert_eq!(to_lattice(3, 2, 1), Ok(LatticePoint { k: 1, l: 1 }));
        assert_eq!(to_lattice(9, 2, 1), Ok(LatticePoint { k: 2, l: 2 }));
        assert_eq!(to_lattice(7, 2, 1), Ok(LatticePoint { k: 1, l: 2 }));
        assert!(to_lattice(11, 2, 1).is_err());
        assert!(to_lattice(4, 2, 1).is_err());
        assert!(to_lattice(1, 2, 1).is_err());
    }

    #[test]
    fn from_lattice_examples() {
        assert_eq!(from_lattice(LatticePoint { k: 1, l: 1 }, 2), Ok(3));
        assert_eq!(from_lattice(LatticePoint { k: 2, l: 1 }, 2), Ok(5));
        assert_eq!(from_lattice(LatticePoint { k: 2, l: 2 }, 3), Ok(16));
        assert!(from_lattice(LatticePoint { k: 0, l: 1 }, 2).is_err());
    }

    #[test]
    fn bijection() {
        for r in [2, 3] {
            for t in 0..=2 {
                let edge = side(r, t).unwrap();
                let table = lattice_table(r, t).unwrap();
                assert_eq!(table.len() as u64, edge * edge);
                let image: HashSet<LatticePoint> = table.iter().map(|&(_, p)| p).collect();
                assert_eq!(image.len(), table.len());
                for &(n, p) in &table {
                    assert!((1..=edge).contains(&p.k) && (1..=edge).contains(&p.l));
                    assert_eq!(from_lattice(p, r), Ok(n));
                }
            }
        }
    }

    #[test]
    fn tsp_examples() {
        let min = path_tsp(2, 1, Objective::Min).unwrap();
        assert_eq!(min.order, vec![3, 5, 9, 7]);
        assert!((min.length - 3.0).abs() < 1e-9);
        let max = path_tsp(2, 1, Objective::Max).unwrap();
        assert!((max.length - (1.0 + 2.0 * 2f64.sqrt())).abs() < 1e-9);
        assert_eq!(max.order, vec![3, 9, 5, 7]);
        let single = path_tsp(2, 0, Objective::Min).unwrap();
        assert_eq!(single.order, vec![3]);
        assert_eq!(single.length, 0.0);
        assert_eq!(
            path_tsp(2, 2, Objective::Min),
            Err(Error::TooLarge {
                points: 16,
                limit: 10
            })
        );
    }

    #[test]
    fn listed_max_order_ties_with_ours() {
        let order = [7u64, 5, 3, 9];
        let pts: Vec<LatticePoint> = order
            .iter()
            .map(|&n| to_lattice(n, 2, 1).unwrap())
            .collect();
        let len: f64 = pts
            .windows(2)
            .map(|w| (w[0].k.abs_diff(w[1].k) as f64).hypot(w[0].l.abs_diff(w[1].l) as f64))
            .sum();
        let max = path_tsp(2, 1, Objective::Max).unwrap();
        assert!((len - max.length).abs() < 1e-9);
    }

    #[test]
    fn min_below_max() {
        let min = path_tsp(3, 1, Objective::Min).unwrap();
        let max = path_tsp(3, 1, Objective::Max).unwrap();
        assert!(min.length < max.length);
        assert!((min.length - 8.0).abs() < 1e-9);
        let mut sorted = min.order.clone();
        sorted.sort_unstable();
        assert_eq!(sorted, interval(3, 1).unwrap());
    }
}
