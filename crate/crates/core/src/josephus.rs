//! Back-and-forth elimination on a line of persons (every second person is
//! removed, reversing direction at either end) and the identities linking
//! its survivor `W(N)` to the base-2 s-sequence.

use std::fmt;

use crate::arith;
use crate::decompose::DecompositionPair;
use crate::error::{domain, Error, Result};
use crate::radix::valuation;
use crate::sequences::{counting, s_index, s_term, SequenceFamily};

const NONE: usize = usize::MAX;

/// Bits at odd positions of a 64-bit word.
const ODD_BITS: u64 = 0xAAAA_AAAA_AAAA_AAAA;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    LeftToRight,
    RightToLeft,
}

impl Direction {
    fn reversed(self) -> Self {
        match self {
            Self::LeftToRight => Self::RightToLeft,
            Self::RightToLeft => Self::LeftToRight,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Self::LeftToRight => 'L',
            Self::RightToLeft => 'R',
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Action {
    Skip,
    Remove,
}

/// One elimination event.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Removal {
    /// 1-based count of removals so far.
    pub step: u64,
    /// Traversal direction when the person was removed.
    pub direction: Direction,
    pub person: u64,
}

impl fmt::Display for Removal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} remove {}",
            self.step,
            self.direction.symbol(),
            self.person
        )
    }
}

/// Elimination state for persons `1..=N` stored as a doubly linked list
/// over array slots, so each removal is O(1).
///
/// The traversal starts at person 1 moving right and alternates
/// skip/remove without resetting at a turn. On reaching the last person in
/// the current direction the walk reverses and continues with the next
/// person inward, so the turn person is visited once.
#[derive(Debug, Clone)]
pub struct JosephusLine {
    next: Vec<usize>,
    prev: Vec<usize>,
    current: usize,
    direction: Direction,
    next_action: Action,
    remaining: usize,
    removed: u64,
}

impl JosephusLine {
    pub fn new(n: u64) -> Result<Self> {
        if n == 0 {
            return Err(domain("a line needs at least one person"));
        }
        let n = usize::try_from(n).map_err(|_| Error::Overflow)?;
        let next = (0..n)
            .map(|i| if i + 1 < n { i + 1 } else { NONE })
            .collect();
        let prev = (0..n).map(|i| if i > 0 { i - 1 } else { NONE }).collect();
        Ok(Self {
            next,
            prev,
            current: 0,
            direction: Direction::LeftToRight,
            next_action: Action::Skip,
            remaining: n,
            removed: 0,
        })
    }

    pub fn remaining(&self) -> usize {
        self.remaining
    }

    pub fn direction(&self) -> Direction {
        self.direction
    }

    pub fn next_action(&self) -> Action {
        self.next_action
    }

    /// Labels still on the line, left to right.
    pub fn persons(&self) -> Vec<u64> {
        let mut head = self.current;
        while self.prev[head] != NONE {
            head = self.prev[head];
        }
        let mut out = Vec::with_capacity(self.remaining);
        let mut i = head;
        while i != NONE {
            out.push(i as u64 + 1);
            i = self.next[i];
        }
        out
    }

    fn ahead(&self, i: usize) -> usize {
        match self.direction {
            Direction::LeftToRight => self.next[i],
            Direction::RightToLeft => self.prev[i],
        }
    }

    fn behind(&self, i: usize) -> usize {
        match self.direction {
            Direction::LeftToRight => self.prev[i],
            Direction::RightToLeft => self.next[i],
        }
    }

    /// Advances until the next removal; `None` once a single person is left.
    pub fn step(&mut self) -> Option<Removal> {
        while self.remaining > 1 {
            let at = self.current;
            match self.next_action {
                Action::Skip => {
                    self.next_action = Action::Remove;
                    let mut to = self.ahead(at);
                    if to == NONE {
                        self.direction = self.direction.reversed();
                        to = self.ahead(at);
                    }
                    self.current = to;
                }
                Action::Remove => {
                    self.next_action = Action::Skip;
                    let direction = self.direction;
                    let (ahead, behind) = (self.ahead(at), self.behind(at));
                    let (p, n) = (self.prev[at], self.next[at]);
                    if p != NONE {
                        self.next[p] = n;
                    }
                    if n != NONE {
                        self.prev[n] = p;
                    }
                    self.remaining -= 1;
                    self.removed += 1;
                    self.current = if ahead != NONE {
                        ahead
                    } else {
                        self.direction = self.direction.reversed();
                        behind
                    };
                    return Some(Removal {
                        step: self.removed,
                        direction,
                        person: at as u64 + 1,
                    });
                }
            }
        }
        None
    }

    /// Runs to completion and returns the survivor.
    pub fn survivor(mut self) -> u64 {
        while self.step().is_some() {}
        self.current as u64 + 1
    }
}

impl Iterator for JosephusLine {
    type Item = Removal;

    fn next(&mut self) -> Option<Removal> {
        self.step()
    }
}

/// Survivor by direct simulation.
pub fn simulate_survivor(n: u64) -> Result<u64> {
    Ok(JosephusLine::new(n)?.survivor())
}

/// Survivor from the binary expansion of `N` (odd `N`) or `N - 1` (even
/// `N`): one plus the bits at odd positions.
pub fn survivor_closed(n: u64) -> Result<u64> {
    if n == 0 {
        return Err(domain("W(0) is undefined"));
    }
    let odd = if n % 2 == 1 { n } else { n - 1 };
    Ok(1 + (odd & ODD_BITS))
}

/// Both sides of `W(2m) = W(2m-1) = 2m + 1 - 2W(m)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RecurrenceReport {
    pub m: u64,
    pub w_even: u64,
    pub w_odd: u64,
    pub rhs: u64,
}

impl RecurrenceReport {
    pub fn holds(&self) -> bool {
        self.w_even == self.w_odd && self.w_odd == self.rhs
    }
}

pub fn survivor_recurrence_check(m: u64) -> Result<RecurrenceReport> {
    if m == 0 {
        return Err(domain("m must be positive"));
    }
    let two_m = arith::mul(2, m)?;
    let rhs = arith::sub(arith::add(two_m, 1)?, arith::mul(2, survivor_closed(m)?)?)?;
    Ok(RecurrenceReport {
        m,
        w_even: survivor_closed(two_m)?,
        w_odd: survivor_closed(two_m - 1)?,
        rhs,
    })
}

/// `(k, l)` with `s_k = W(N-2)`, `s_l = W((N-1)/2)` for odd `N >= 3`.
pub fn decomposition_via_w(n: u64) -> Result<DecompositionPair> {
    if n.is_multiple_of(2) || n < 3 {
        return Err(domain(format!("{n} must be odd and at least 3")));
    }
    let k = s_index(survivor_closed(n - 2)?, 2)?;
    let l = s_index(survivor_closed((n - 1) / 2)?, 2)?;
    Ok(DecompositionPair::new(k, l, SequenceFamily::S { r: 2 }))
}

/// `W(s_n - 2)`, checked against `s_(n-1)`.
pub fn w_step_down(n: u64) -> Result<u64> {
    if n < 2 {
        return Err(domain("n must be at least 2"));
    }
    let w = survivor_closed(s_term(n, 2)? - 2)?;
    let expected = s_term(n - 1, 2)?;
    if w != expected {
        return Err(Error::Identity(format!(
            "W(s_{n} - 2) = {w} but s_{} = {expected}",
            n - 1
        )));
    }
    Ok(w)
}

/// The orbit `V(N), V(V(N)), ...` with `V(n) = W(n-2)`, ending at 1.
///
/// After the first step the orbit walks down the s-sequence one index at a
/// time, so its length is bounded by the number of s-terms up to `N`.
pub fn v_iterate(n: u64) -> Result<Vec<u64>> {
    if n < 3 {
        return Err(domain("V-iteration starts at N >= 3"));
    }
    let cap = counting(n, 2)? + 1;
    let mut orbit = Vec::new();
    let mut v = n;
    while v >= 3 {
        if orbit.len() as u64 >= cap {
            return Err(Error::Identity(format!(
                "V-orbit of {n} did not reach 1 within {cap} steps"
            )));
        }
        v = survivor_closed(v - 2)?;
        orbit.push(v);
    }
    if v != 1 {
        return Err(Error::Identity(format!("V-orbit of {n} stopped at {v}")));
    }
    Ok(orbit)
}

/// Checks, for every `N` in `2..=nmax`, that
/// `Σ_(n=2..N) W((s_n - 1)/2) = (s_N - 1)/2` and that each summand equals
/// `(4^(t+1) + 2)/6` with `t = v_2(n - 1)`.
pub fn half_step_sum_check(nmax: u64) -> Result<bool> {
    if nmax < 2 {
        return Err(domain("nmax must be at least 2"));
    }
    let mut sum = 0u64;
    for n in 2..=nmax {
        let s = s_term(n, 2)?;
        let w = survivor_closed((s - 1) / 2)?;
        let t = valuation(n - 1, 2)?;
        let closed = arith::add(arith::pow(4, t + 1)?, 2)? / 6;
        if w != closed {
            return Ok(false);
        }
        sum = arith::add(sum, w)?;
        if sum != (s - 1) / 2 {
            return Ok(false);
        }
    }
    Ok(true)
}
