//! Generation of the Moser-type families.
//!
//! Each family has a per-index closed form built from base-`r` digits and a
//! prefix generator driven by the `r`-adic valuation of the index. The two
//! routes are independent and the test suite pins them together.

use std::fmt;

use crate::arith::{self, LIMIT};
use crate::error::{domain, Error, Result};
use crate::progressions;
use crate::radix::{self, check_base, eval_digits, expand, valuation};

/// Selects one of the sequence families together with its parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SequenceFamily {
    /// `m_r(n)`, indexed from 0.
    Moser { r: u64 },
    /// `s_n^(r) = r·m_r(n-1) + 1`, indexed from 1.
    S { r: u64 },
    /// `a^(c)(n) = 2·m_2(n) + c`, indexed from 0.
    ShiftedA { c: u64 },
    /// `s_n(a,b) = a + b·(s_n^(2) - 1)`, indexed from 1.
    AffineS { a: u64, b: u64 },
    /// Nondecreasing merge of `s(1,1)` and `s(1,2)`, indexed from 1.
    TUnion,
}

impl SequenceFamily {
    pub fn validate(&self) -> Result<()> {
        match *self {
            Self::Moser { r } | Self::S { r } => check_base(r),
            Self::ShiftedA { c } => check_shift(c),
            Self::AffineS { a, b } => {
                if a == 0 || b == 0 {
                    Err(domain("affine parameters a and b must be positive"))
                } else {
                    Ok(())
                }
            }
            Self::TUnion => Ok(()),
        }
    }

    /// Index of the first term.
    pub fn offset(&self) -> u64 {
        match self {
            Self::Moser { .. } | Self::ShiftedA { .. } => 0,
            Self::S { .. } | Self::AffineS { .. } | Self::TUnion => 1,
        }
    }

    /// The coefficient `r` in the representation `value(k) + r·value(l)`,
    /// or `None` for the t-union, which has no such representation.
    pub fn multiplier(&self) -> Option<u64> {
        match *self {
            Self::Moser { r } | Self::S { r } => Some(r),
            Self::ShiftedA { .. } | Self::AffineS { .. } => Some(2),
            Self::TUnion => None,
        }
    }

    /// Closed-form term at index `n`.
    pub fn term(&self, n: u64) -> Result<u64> {
        self.validate()?;
        if n < self.offset() {
            return Err(domain(format!("index {n} below offset {}", self.offset())));
        }
        match *self {
            Self::Moser { r } => moser(n, r),
            Self::S { r } => s_term(n, r),
            Self::ShiftedA { c } => shifted_a(n, c),
            Self::AffineS { a, b } => progressions::affine_s(n, a, b),
            Self::TUnion => {
                let count = usize::try_from(n).map_err(|_| Error::Overflow)?;
                Ok(*progressions::t_prefix(count)?.last().expect("count >= 1"))
            }
        }
    }

    /// The first `count` terms, produced by the prefix recursions.
    pub fn prefix(&self, count: usize) -> Result<Vec<u64>> {
        self.validate()?;
        if count == 0 {
            return Ok(Vec::new());
        }
        match *self {
            Self::Moser { r } => moser_prefix(count, r),
            Self::S { r } => s_prefix(count, r),
            Self::ShiftedA { c } => moser_prefix(count, 2)?
                .into_iter()
                .map(|m| arith::add(arith::mul(2, m)?, c))
                .collect(),
            Self::AffineS { a, b } => s_prefix(count, 2)?
                .into_iter()
                .map(|s| affine_from_s(s, a, b))
                .collect(),
            Self::TUnion => progressions::t_prefix(count),
        }
    }

    /// `count` terms starting at index `start`.
    pub fn terms_from(&self, start: u64, count: usize) -> Result<Vec<u64>> {
        if start < self.offset() {
            return Err(domain(format!(
                "index {start} below offset {}",
                self.offset()
            )));
        }
        let skip = usize::try_from(start - self.offset()).map_err(|_| Error::Overflow)?;
        let total = skip.checked_add(count).ok_or(Error::Overflow)?;
        let mut all = self.prefix(total)?;
        Ok(all.split_off(skip))
    }

    pub fn name(&self) -> &'static str {
        match self {
            Self::Moser { .. } => "moser",
            Self::S { .. } => "s",
            Self::ShiftedA { .. } => "shifted",
            Self::AffineS { .. } => "affine",
            Self::TUnion => "t",
        }
    }
}

impl fmt::Display for SequenceFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Self::Moser { r } => write!(f, "moser(r={r})"),
            Self::S { r } => write!(f, "s(r={r})"),
            Self::ShiftedA { c } => write!(f, "shifted(c={c})"),
            Self::AffineS { a, b } => write!(f, "affine(a={a}, b={b})"),
            Self::TUnion => f.write_str("t"),
        }
    }
}

pub(crate) fn affine_from_s(s: u64, a: u64, b: u64) -> Result<u64> {
    arith::add(a, arith::mul(b, s - 1)?)
}

fn check_shift(c: u64) -> Result<()> {
    if c < 3 || c.is_multiple_of(2) {
        Err(domain(format!("shift c = {c} must be odd and at least 3")))
    } else {
        Ok(())
    }
}

/// `m_r(n) = Σ ν_i r^(2i)` over the base-`r` digits `ν_i` of `n`.
pub fn moser(n: u64, r: u64) -> Result<u64> {
    let e = expand(n, r)?;
    eval_digits(e.digits().iter().copied(), arith::mul(r, r)?)
}

/// `(r^e + c) / (r + 1)` computed without intermediate overflow.
fn step_increment(r: u64, e: u64, c: u64) -> Result<u64> {
    let e = u32::try_from(e).map_err(|_| Error::Overflow)?;
    let p = (r as u128).checked_pow(e).ok_or(Error::Overflow)?;
    let q = (p + c as u128) / (r as u128 + 1);
    u64::try_from(q)
        .ok()
        .filter(|&v| v <= LIMIT)
        .ok_or(Error::Overflow)
}

/// `m_r(0), ..., m_r(count-1)` via the valuation recursion
/// `m(n) = m(n-1) + (r^(2τ+1) + 1)/(r+1)`, `τ = v_r(n)`.
pub fn moser_prefix(count: usize, r: u64) -> Result<Vec<u64>> {
    check_base(r)?;
    if count == 0 {
        return Err(domain("count must be at least 1"));
    }
    let mut out = Vec::with_capacity(count);
    let mut m = 0u64;
    out.push(m);
    for n in 1..count as u64 {
        let tau = valuation(n, r)?;
        m = arith::add(m, step_increment(r, 2 * tau + 1, 1)?)?;
        out.push(m);
    }
    Ok(out)
}

/// `s_n^(r) = r·m_r(n-1) + 1`.
pub fn s_term(n: u64, r: u64) -> Result<u64> {
    check_base(r)?;
    if n == 0 {
        return Err(domain("s-sequence is indexed from 1"));
    }
    arith::add(arith::mul(r, moser(n - 1, r)?)?, 1)
}

/// `s_n^(r) = 1 + Σ ν_i r^(2i+1)` over the base-`r` digits of `n - 1`.
pub fn s_term_digits(n: u64, r: u64) -> Result<u64> {
    check_base(r)?;
    if n == 0 {
        return Err(domain("s-sequence is indexed from 1"));
    }
    let e = expand(n - 1, r)?;
    let r2 = arith::mul(r, r)?;
    let mut sum = 0u64;
    let mut weight = r;
    for (i, &d) in e.digits().iter().enumerate() {
        if i > 0 {
            weight = arith::mul(weight, r2)?;
        }
        sum = arith::add(sum, arith::mul(d, weight)?)?;
    }
    arith::add(sum, 1)
}

/// `s_1, ..., s_count` via `s_n = s_(n-1) + (r^(2(t+1)) + r)/(r+1)`,
/// `t = v_r(n-1)`.
pub fn s_prefix(count: usize, r: u64) -> Result<Vec<u64>> {
    check_base(r)?;
    if count == 0 {
        return Err(domain("count must be at least 1"));
    }
    let mut out = Vec::with_capacity(count);
    let mut s = 1u64;
    out.push(s);
    for n in 2..=count as u64 {
        let t = valuation(n - 1, r)?;
        s = arith::add(s, step_increment(r, 2 * (t + 1), r)?)?;
        out.push(s);
    }
    Ok(out)
}

/// Inverse of [`moser`]: the index `n` with `m_r(n) = value`.
pub fn moser_index(value: u64, r: u64) -> Result<u64> {
    check_base(r)?;
    let wide = expand(value, arith::mul(r, r)?)?;
    if let Some(&d) = wide.digits().iter().find(|&&d| d >= r) {
        return Err(domain(format!(
            "{value} is not an m_{r} value (base-{} digit {d})",
            r * r
        )));
    }
    eval_digits(wide.digits().iter().copied(), r)
}

/// Inverse of [`s_term`]: the index `n >= 1` with `s_n^(r) = value`.
pub fn s_index(value: u64, r: u64) -> Result<u64> {
    check_base(r)?;
    if value == 0 || !(value - 1).is_multiple_of(r) {
        return Err(domain(format!("{value} is not an s^({r}) value")));
    }
    arith::add(moser_index((value - 1) / r, r)?, 1)
}

/// `a^(c)(n) = 2·m_2(n) + c` for odd `c >= 3`.
pub fn shifted_a(n: u64, c: u64) -> Result<u64> {
    check_shift(c)?;
    arith::add(arith::mul(2, moser(n, 2)?)?, c)
}

/// Deterministic trial division.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d <= n / d {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// The first `count` composite terms of `a^(c)` as `(index, value)` pairs.
pub fn composite_witnesses(c: u64, count: usize) -> Result<Vec<(u64, u64)>> {
    check_shift(c)?;
    if count == 0 {
        return Err(domain("count must be at least 1"));
    }
    let mut found = Vec::with_capacity(count);
    let mut n = 0u64;
    while found.len() < count {
        let v = shifted_a(n, c)?;
        if !is_prime(v) {
            found.push((n, v));
        }
        n += 1;
    }
    Ok(found)
}

/// Number of primes among `a^(c)(0), ..., a^(c)(count-1)`.
pub fn count_primes(c: u64, count: usize) -> Result<usize> {
    Ok(SequenceFamily::ShiftedA { c }
        .prefix(count)?
        .into_iter()
        .filter(|&v| is_prime(v))
        .count())
}

/// Largest `j` with `m_r(j) <= y`.
fn moser_floor_index(y: u64, r: u64) -> Result<u64> {
    let r2 = arith::mul(r, r)?;
    let top = expand(y, r2)?;
    let mut digits = vec![0u64; top.len()];
    for i in (0..top.len()).rev() {
        let d = top.digit(i);
        if d < r {
            digits[i] = d;
        } else {
            for slot in &mut digits[..=i] {
                *slot = r - 1;
            }
            break;
        }
    }
    while digits.last() == Some(&0) {
        digits.pop();
    }
    radix::RadixExpansion::from_digits(r, digits)?.value()
}

/// `A^(r)(x)`: the number of `n >= 1` with `s_n^(r) <= x`.
pub fn counting(x: u64, r: u64) -> Result<u64> {
    check_base(r)?;
    if x == 0 {
        return Ok(0);
    }
    arith::add(moser_floor_index((x - 1) / r, r)?, 1)
}

/// `(s_(r^t), s_(r^t + 1)) = ((r^(2t+1)+1)/(r+1), r^(2t+1)+1)`.
pub fn power_boundary(r: u64, t: u64) -> Result<(u64, u64)> {
    check_base(r)?;
    let high = arith::add(arith::pow(r, arith::add(arith::mul(2, t)?, 1)?)?, 1)?;
    if high % (r + 1) != 0 {
        return Err(Error::Identity(format!(
            "r^(2t+1)+1 = {high} not divisible by r+1 = {}",
            r + 1
        )));
    }
    Ok((high / (r + 1), high))
}
