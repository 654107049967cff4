//! Shared inputs for the criterion benches.

use moser_core::SequenceFamily;

/// Bases exercised by the sequence benches.
pub const BASES: [u64; 3] = [2, 3, 5];

/// Prefix lengths for the digit-formula versus recursion comparison.
pub const PREFIX_LENGTHS: [usize; 3] = [1_000, 10_000, 100_000];

/// Line lengths for the Josephus benches.
pub const LINE_LENGTHS: [u64; 3] = [1 << 8, 1 << 12, 1 << 14];

/// The families whose b-file export is benchmarked.
pub fn families() -> Vec<SequenceFamily> {
    vec![
        SequenceFamily::Moser { r: 2 },
        SequenceFamily::S { r: 3 },
        SequenceFamily::ShiftedA { c: 3 },
        SequenceFamily::AffineS { a: 1, b: 2 },
        SequenceFamily::TUnion,
    ]
}
