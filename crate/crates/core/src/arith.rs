//! Checked arithmetic on the nonnegative 63-bit range.
//!
//! Every quantity in the crate is a `u64` no larger than [`LIMIT`]. The
//! helpers here fail with [`Error::Overflow`] instead of wrapping.

use crate::error::{Error, Result};

/// Largest representable value, `2^63 - 1`.
pub const LIMIT: u64 = i64::MAX as u64;

#[inline]
fn bound(v: Option<u64>) -> Result<u64> {
    match v {
        Some(x) if x <= LIMIT => Ok(x),
        _ => Err(Error::Overflow),
    }
}

#[inline]
pub fn add(a: u64, b: u64) -> Result<u64> {
    bound(a.checked_add(b))
}

#[inline]
pub fn mul(a: u64, b: u64) -> Result<u64> {
    bound(a.checked_mul(b))
}

#[inline]
pub fn pow(base: u64, exp: u64) -> Result<u64> {
    let exp = u32::try_from(exp).map_err(|_| Error::Overflow)?;
    bound(base.checked_pow(exp))
}

#[inline]
pub fn sub(a: u64, b: u64) -> Result<u64> {
    a.checked_sub(b).ok_or(Error::Overflow)
}
