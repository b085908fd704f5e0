//! Shared inputs for the criterion benchmarks.

/// Semigroups used across benchmarks: the worked examples plus a couple of
/// larger Gorenstein cases.
pub const SEMIGROUPS: &[&[u64]] = &[
    &[8, 10, 11, 12],
    &[15, 21, 35],
    &[16, 18, 21, 27],
    &[6, 7, 8, 9, 10],
];
