//! Published reference values, used as regression anchors.

/// `W_F3(0)` for `n = 3..=10`.
pub const F3_ZERO_VALUES: [(usize, i64); 8] = [(3, 6), (4, 8), (5, 20), (6, 28), (7, 56), (8, 96), (9, 168), (10, 304)];

/// Row `c` holds `[W_f0(c), W_f1(c), W_f2(c), W_f3(c)]` for the four
/// sub-functions on six variables, `c` in little-endian encoding.
pub const SUBFAMILY_SPECTRA_N6: [[i64; 4]; 64] = [
    [36, 28, 28, 4],
    [4, 12, 4, 12],
    [12, 20, 4, -4],
    [-4, -12, -4, 4],
    [12, -4, 20, 4],
    [-4, 12, -4, -4],
    [-12, 4, -4, -4],
    [4, -12, 4, 4],
    [12, 20, -4, 4],
    [12, 4, 4, 12],
    [4, -4, 4, -4],
    [-12, -4, -4, 4],
    [4, -12, -12, 4],
    [-12, 4, -4, -4],
    [-4, 12, -4, -4],
    [12, -4, 4, 4],
    [12, 4, 20, -4],
    [-4, 4, -4, -12],
    [4, 12, 12, 4],
    [4, -4, 4, -4],
    [4, 4, -4, -4],
    [4, 4, 4, 4],
    [-4, -4, -12, 4],
    [-4, -4, -4, -4],
    [-12, -4, 4, -4],
    [4, -4, 12, -12],
    [-4, -12, -4, 4],
    [-4, 4, -12, -4],
    [-4, -4, 12, -4],
    [-4, -4, -12, 4],
    [4, 4, 4, 4],
    [4, 4, 12, -4],
    [4, 4, 12, 12],
    [4, 4, 4, 20],
    [-4, -4, 4, -12],
    [-4, -4, -4, 12],
    [12, 4, 4, 12],
    [-4, 4, -4, 4],
    [4, 12, -4, -12],
    [4, -4, 4, 12],
    [-4, -4, 12, -4],
    [-4, -4, 4, 4],
    [4, 4, 4, 4],
    [4, 4, -4, -4],
    [-12, -4, 4, -4],
    [4, -4, -4, -12],
    [-4, -12, -4, 4],
    [-4, 4, 4, -4],
    [-4, -4, -12, 4],
    [-4, -4, -4, 12],
    [4, 4, -4, -4],
    [4, 4, 4, 20],
    [-12, -4, -4, 4],
    [4, -4, 4, -4],
    [-4, -12, 4, -4],
    [-4, 4, -4, -12],
    [4, 4, -12, 4],
    [4, 4, -4, 12],
    [-4, -4, -4, -4],
    [-4, -4, 4, -12],
    [12, 4, -4, 4],
    [-4, 4, 4, -4],
    [4, 12, 4, -4],
    [4, -4, -4, 20],
];
