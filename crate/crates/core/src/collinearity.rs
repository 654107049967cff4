//! Collinearity of odd numbers through their base-2 s-coordinates, and the
//! count `ψ(n)` of smaller odd numbers not collinear to `n`.
//!
//! Every odd `n > 1` is uniquely `s_k + 2·s_l`; `k(n)` and `l(n)` are its
//! coordinates. Two odd numbers are collinear when they share `k` or `l`.
//! The number 1 is collinear to nothing.

use crate::arith;
use crate::decompose::decompose_s;
use crate::error::{domain, Error, Result};

/// Coordinates of an odd number `n > 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct OddCoordinates {
    pub n: u64,
    pub k: u64,
    pub l: u64,
}

fn check_odd(n: u64) -> Result<()> {
    if n.is_multiple_of(2) {
        Err(domain(format!("{n} is not odd")))
    } else {
        Ok(())
    }
}

pub fn coordinates(n: u64) -> Result<OddCoordinates> {
    check_odd(n)?;
    if n < 3 {
        return Err(domain("1 has no coordinates"));
    }
    let p = decompose_s(n, 2)?;
    Ok(OddCoordinates { n, k: p.k, l: p.l })
}

pub fn collinear(m: u64, n: u64) -> Result<bool> {
    check_odd(m)?;
    check_odd(n)?;
    if m == 1 || n == 1 {
        return Ok(false);
    }
    let (a, b) = (coordinates(m)?, coordinates(n)?);
    Ok(a.k == b.k || a.l == b.l)
}

/// `ψ(n)`: odd `i < n` with `i` not collinear to `n`.
pub fn psi(n: u64) -> Result<u64> {
    check_odd(n)?;
    if n == 1 {
        return Ok(0);
    }
    let target = coordinates(n)?;
    let mut count = 1; // i = 1
    for i in (3..n).step_by(2) {
        let c = coordinates(i)?;
        if c.k != target.k && c.l != target.l {
            count += 1;
        }
    }
    Ok(count)
}

/// `ψ(1), ψ(3), ..., ψ(max)` (index `j` holds `ψ(2j + 1)`), in one sweep.
///
/// Only `i = n` shares both coordinates with `n`, so among odd `i < n` the
/// collinear count is the number sharing `k` plus the number sharing `l`.
pub fn psi_range(max: u64) -> Result<Vec<u64>> {
    check_odd(max)?;
    let len = usize::try_from(max / 2 + 1).map_err(|_| Error::Overflow)?;
    let mut by_k: Vec<u64> = Vec::new();
    let mut by_l: Vec<u64> = Vec::new();
    let mut out = Vec::with_capacity(len);
    out.push(0);
    for n in (3..=max).step_by(2) {
        let c = coordinates(n)?;
        let (k, l) = (c.k as usize, c.l as usize);
        if by_k.len() <= k {
            by_k.resize(k + 1, 0);
        }
        if by_l.len() <= l {
            by_l.resize(l + 1, 0);
        }
        let smaller = (n - 1) / 2;
        out.push(smaller - by_k[k] - by_l[l]);
        by_k[k] += 1;
        by_l[l] += 1;
    }
    Ok(out)
}

/// `ψ(4m - 1) == ψ(4m + 1)`.
pub fn psi_pair_check(m: u64) -> Result<bool> {
    if m == 0 {
        return Err(domain("m must be positive"));
    }
    let lo = arith::sub(arith::mul(4, m)?, 1)?;
    Ok(psi(lo)? == psi(arith::add(lo, 2)?)?)
}
