//! Unique additive representations of integers by Moser-type sequences.
//!
//! Every nonnegative integer is uniquely `m_r(k) + r·m_r(l)`, and every
//! `N ≡ 1 (mod r)` with `N >= r + 1` is uniquely `s_k + r·s_l` where
//! `s_n = r·m_r(n-1) + 1`. This crate generates those sequences by digit
//! formulas and by valuation recursions, inverts the representations, and
//! implements the constructions built on them: the back-and-forth Josephus
//! survivor, a collinearity count on odd numbers, affine progressions and
//! the even-number t-representations, and the lattice-square bijection.

pub mod arith;
pub mod bfile;
pub mod collinearity;
pub mod decompose;
mod error;
pub mod fixtures;
pub mod josephus;
pub mod lattice;
pub mod progressions;
pub mod radix;
pub mod sequences;

pub use decompose::{
    decompose_moser, decompose_s, decompose_shifted, oracle_decompose, DecompositionPair,
};
pub use error::{Error, Result};
pub use josephus::{simulate_survivor, survivor_closed, JosephusLine};
pub use radix::{expand, reassemble, valuation, RadixExpansion};
pub use sequences::{moser, moser_prefix, s_prefix, s_term, SequenceFamily};
