//! Plain-text b-file interchange: one `index value` line per term, a single
//! space between the fields, newline-terminated, no header. Indices start
//! at the family's offset and increase by one.

use std::fmt::Write as _;
use std::io;

use crate::error::{Error, Result};
use crate::sequences::SequenceFamily;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BFileRecord {
    pub index: u64,
    pub value: u64,
}

/// The first `count` terms of `family` as records.
pub fn records(family: &SequenceFamily, count: usize) -> Result<Vec<BFileRecord>> {
    let offset = family.offset();
    Ok(family
        .prefix(count)?
        .into_iter()
        .enumerate()
        .map(|(i, value)| BFileRecord {
            index: offset + i as u64,
            value,
        })
        .collect())
}

pub fn render(records: &[BFileRecord]) -> String {
    let mut out = String::with_capacity(records.len() * 12);
    for r in records {
        writeln!(out, "{} {}", r.index, r.value).expect("writing to a String");
    }
    out
}

pub fn write<W: io::Write>(records: &[BFileRecord], mut w: W) -> io::Result<()> {
    w.write_all(render(records).as_bytes())
}

fn format_error(line: usize, msg: impl std::fmt::Display) -> Error {
    Error::Domain(format!("b-file line {line}: {msg}"))
}

fn parse_field(s: &str, line: usize) -> Result<u64> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return Err(format_error(
            line,
            format!("`{s}` is not a nonnegative integer"),
        ));
    }
    s.parse()
        .map_err(|_| format_error(line, format!("`{s}` is out of range")))
}

/// Parses b-file text, enforcing the line format and consecutive indices.
pub fn parse(text: &str) -> Result<Vec<BFileRecord>> {
    if text.is_empty() {
        return Ok(Vec::new());
    }
    let body = text
        .strip_suffix('\n')
        .ok_or_else(|| Error::Domain("b-file must end with a newline".into()))?;
    let mut out: Vec<BFileRecord> = Vec::new();
    for (i, line) in body.split('\n').enumerate() {
        let number = i + 1;
        let (index, value) = line
            .split_once(' ')
            .ok_or_else(|| format_error(number, "expected `index value`"))?;
        let record = BFileRecord {
            index: parse_field(index, number)?,
            value: parse_field(value, number)?,
        };
        if let Some(prev) = out.last() {
            if prev.index.checked_add(1) != Some(record.index) {
                return Err(format_error(
                    number,
                    format!("index {} does not follow {}", record.index, prev.index),
                ));
            }
        }
        out.push(record);
    }
    Ok(out)
}

/// Parses `text` and compares every record with the family's terms.
/// Returns the number of records verified.
pub fn check(family: &SequenceFamily, text: &str) -> Result<usize> {
    let parsed = parse(text)?;
    let Some(first) = parsed.first() else {
        return Ok(0);
    };
    if first.index != family.offset() {
        return Err(Error::Mismatch(format!(
            "first index {} but {} starts at {}",
            first.index,
            family,
            family.offset()
        )));
    }
    let expected = family.prefix(parsed.len())?;
    for (r, want) in parsed.iter().zip(expected) {
        if r.value != want {
            return Err(Error::Mismatch(format!(
                "index {}: found {}, expected {want}",
                r.index, r.value
            )));
        }
    }
    Ok(parsed.len())
}
