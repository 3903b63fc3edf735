//! Published reference tables of affine weighted stars.
//!
//! Each row lists the arms, `D`, `s`, `h` and the divisor labels `x_i` in
//! the order the rows are expected to appear. Tables with a dimension cap
//! list only the rows with `D <= d_max`; `total` is the uncapped count.

/// One expected table row.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExpectedRow {
    pub arms: &'static [u64],
    pub dimension: u64,
    pub s: u64,
    pub h: u64,
    pub x: &'static [u64],
}

/// A full expected table for one `(m, p)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExpectedTable {
    pub name: &'static str,
    pub m: usize,
    pub p: u64,
    pub d_max: Option<u64>,
    pub total: u64,
    pub rows: &'static [ExpectedRow],
}

const fn row(arms: &'static [u64], dimension: u64, s: u64, h: u64, x: &'static [u64]) -> ExpectedRow {
    ExpectedRow { arms, dimension, s, h, x }
}

/// Unordered solution counts `(m, p, count)`.
pub const COUNTS: &[(usize, u64, u64)] = &[
    (2, 1, 1),
    (3, 1, 3),
    (4, 1, 14),
    (5, 1, 147),
    (6, 1, 3462),
    (4, 2, 1),
    (5, 2, 3),
    (6, 2, 17),
];

// m = 2, k = 1, p = 1: the single solution
const M2P1_ROWS: &[ExpectedRow] = &[
    row(&[1, 1], 3, 2, 4, &[1, 1]),
];

// m = 3, k = 2, p = 1: all 3 solutions
const M3P1_ROWS: &[ExpectedRow] = &[
    row(&[2, 2, 2], 7, 3, 12, &[1, 1, 1]),
    row(&[1, 3, 3], 8, 4, 18, &[2, 1, 1]),
    row(&[1, 2, 5], 9, 6, 30, &[3, 2, 1]),
];

// m = 4, k = 3, p = 1: all 14 solutions
const M4P1_ROWS: &[ExpectedRow] = &[
    row(&[3, 3, 3, 3], 13, 4, 28, &[1, 1, 1, 1]),
    row(&[2, 3, 3, 5], 14, 12, 90, &[4, 3, 3, 2]),
    row(&[2, 2, 5, 5], 15, 6, 48, &[2, 2, 1, 1]),
    row(&[1, 5, 5, 5], 17, 6, 54, &[3, 1, 1, 1]),
    row(&[1, 3, 7, 7], 19, 8, 80, &[4, 2, 1, 1]),
    row(&[1, 4, 4, 9], 19, 10, 100, &[5, 2, 2, 1]),
    row(&[2, 2, 3, 11], 19, 12, 120, &[4, 4, 3, 1]),
    row(&[1, 3, 5, 11], 21, 12, 132, &[6, 3, 2, 1]),
    row(&[1, 2, 11, 11], 26, 12, 162, &[6, 4, 1, 1]),
    row(&[1, 2, 9, 14], 27, 30, 420, &[15, 10, 3, 2]),
    row(&[1, 3, 4, 19], 28, 20, 290, &[10, 5, 4, 1]),
    row(&[1, 2, 8, 17], 29, 18, 270, &[9, 6, 2, 1]),
    row(&[1, 2, 7, 23], 34, 24, 420, &[12, 8, 3, 1]),
    row(&[1, 2, 6, 41], 51, 42, 1092, &[21, 14, 6, 1]),
];

// m = 5, k = 4, p = 1: the 38 rows with D <= 40 out of 147
const M5P1_ROWS: &[ExpectedRow] = &[
    row(&[4, 4, 4, 4, 4], 21, 5, 55, &[1, 1, 1, 1, 1]),
    row(&[3, 3, 5, 5, 5], 22, 12, 138, &[3, 3, 2, 2, 2]),
    row(&[2, 5, 5, 5, 5], 23, 6, 72, &[2, 1, 1, 1, 1]),
    row(&[3, 3, 3, 7, 7], 24, 8, 100, &[2, 2, 2, 1, 1]),
    row(&[3, 3, 4, 4, 9], 24, 20, 250, &[5, 5, 4, 4, 2]),
    row(&[2, 3, 5, 7, 7], 25, 24, 312, &[8, 6, 4, 3, 3]),
    row(&[2, 4, 4, 5, 9], 25, 30, 390, &[10, 6, 6, 5, 3]),
    row(&[3, 3, 3, 5, 11], 26, 12, 162, &[3, 3, 3, 2, 1]),
    row(&[2, 3, 5, 5, 11], 27, 12, 168, &[4, 3, 2, 2, 1]),
    row(&[2, 2, 8, 8, 8], 29, 9, 135, &[3, 3, 1, 1, 1]),
    row(&[2, 4, 4, 4, 14], 29, 15, 225, &[5, 3, 3, 3, 1]),
    row(&[1, 7, 7, 7, 7], 30, 8, 124, &[4, 1, 1, 1, 1]),
    row(&[2, 2, 7, 7, 11], 30, 24, 372, &[8, 8, 3, 3, 2]),
    row(&[2, 3, 3, 11, 11], 31, 12, 192, &[4, 3, 3, 1, 1]),
    row(&[1, 5, 8, 8, 8], 31, 18, 288, &[9, 3, 2, 2, 2]),
    row(&[2, 2, 5, 11, 11], 32, 12, 198, &[4, 4, 2, 1, 1]),
    row(&[1, 5, 7, 7, 11], 32, 24, 396, &[12, 4, 3, 3, 2]),
    row(&[2, 3, 3, 9, 14], 32, 60, 990, &[20, 15, 15, 6, 4]),
    row(&[1, 4, 9, 9, 9], 33, 10, 170, &[5, 2, 1, 1, 1]),
    row(&[1, 6, 6, 6, 13], 33, 14, 238, &[7, 2, 2, 2, 1]),
    row(&[3, 3, 3, 4, 19], 33, 20, 340, &[5, 5, 5, 4, 1]),
    row(&[2, 2, 5, 9, 14], 33, 30, 510, &[10, 10, 5, 3, 2]),
    row(&[1, 5, 5, 11, 11], 34, 12, 210, &[6, 2, 2, 1, 1]),
    row(&[2, 3, 3, 8, 17], 34, 36, 630, &[12, 9, 9, 4, 2]),
    row(&[2, 3, 4, 5, 19], 34, 60, 1050, &[20, 15, 12, 10, 3]),
    row(&[2, 2, 5, 8, 17], 35, 18, 324, &[6, 6, 3, 2, 1]),
    row(&[1, 5, 5, 9, 14], 35, 30, 540, &[15, 5, 5, 3, 2]),
    row(&[2, 2, 4, 14, 14], 37, 15, 285, &[5, 5, 3, 1, 1]),
    row(&[1, 5, 5, 8, 17], 37, 18, 342, &[9, 3, 3, 2, 1]),
    row(&[2, 2, 6, 6, 20], 37, 21, 399, &[7, 7, 3, 3, 1]),
    row(&[1, 3, 11, 11, 11], 38, 12, 234, &[6, 3, 1, 1, 1]),
    row(&[2, 3, 3, 7, 23], 39, 24, 480, &[8, 6, 6, 3, 1]),
    row(&[1, 4, 5, 14, 14], 39, 30, 600, &[15, 6, 5, 2, 2]),
    row(&[1, 4, 7, 7, 19], 39, 40, 800, &[20, 8, 5, 5, 2]),
    row(&[1, 5, 6, 6, 20], 39, 42, 840, &[21, 7, 6, 6, 2]),
    row(&[1, 3, 9, 11, 14], 39, 60, 1200, &[30, 15, 6, 5, 4]),
    row(&[2, 2, 4, 11, 19], 39, 60, 1200, &[20, 20, 12, 5, 3]),
    row(&[2, 2, 5, 7, 23], 40, 24, 492, &[8, 8, 4, 3, 1]),
];

// m = 6, k = 5, p = 1: the 21 rows with D <= 40 out of 3462
const M6P1_ROWS: &[ExpectedRow] = &[
    row(&[5, 5, 5, 5, 5, 5], 31, 6, 96, &[1, 1, 1, 1, 1, 1]),
    row(&[3, 5, 5, 5, 7, 7], 33, 24, 408, &[6, 4, 4, 4, 3, 3]),
    row(&[4, 4, 5, 5, 5, 9], 33, 30, 510, &[6, 6, 5, 5, 5, 3]),
    row(&[3, 3, 7, 7, 7, 7], 35, 8, 144, &[2, 2, 1, 1, 1, 1]),
    row(&[4, 4, 4, 4, 9, 9], 35, 10, 180, &[2, 2, 2, 2, 1, 1]),
    row(&[3, 5, 5, 5, 5, 11], 35, 12, 216, &[3, 2, 2, 2, 2, 1]),
    row(&[3, 4, 4, 7, 7, 9], 35, 40, 720, &[10, 8, 8, 5, 5, 4]),
    row(&[2, 5, 7, 7, 7, 7], 36, 24, 444, &[8, 4, 3, 3, 3, 3]),
    row(&[3, 3, 5, 8, 8, 8], 36, 36, 666, &[9, 9, 6, 4, 4, 4]),
    row(&[2, 5, 5, 8, 8, 8], 37, 18, 342, &[6, 3, 3, 2, 2, 2]),
    row(&[3, 3, 5, 7, 7, 11], 37, 24, 456, &[6, 6, 4, 3, 3, 2]),
    row(&[4, 4, 4, 5, 5, 14], 37, 30, 570, &[6, 6, 6, 5, 5, 2]),
    row(&[3, 4, 4, 5, 9, 11], 37, 60, 1140, &[15, 12, 12, 10, 6, 5]),
    row(&[3, 3, 4, 9, 9, 9], 38, 20, 390, &[5, 5, 4, 2, 2, 2]),
    row(&[2, 5, 5, 7, 7, 11], 38, 24, 468, &[8, 4, 4, 3, 3, 2]),
    row(&[3, 3, 6, 6, 6, 13], 38, 28, 546, &[7, 7, 4, 4, 4, 2]),
    row(&[3, 3, 5, 5, 11, 11], 39, 12, 240, &[3, 3, 2, 2, 1, 1]),
    row(&[2, 4, 5, 9, 9, 9], 39, 30, 600, &[10, 6, 5, 3, 3, 3]),
    row(&[2, 5, 6, 6, 6, 13], 39, 42, 840, &[14, 7, 6, 6, 6, 3]),
    row(&[2, 5, 5, 5, 11, 11], 40, 12, 246, &[4, 2, 2, 2, 1, 1]),
    row(&[3, 3, 5, 5, 9, 14], 40, 60, 1230, &[15, 15, 10, 10, 6, 4]),
];

// m = 4, k = 2, p = 2: the single solution, D_4^(1)
const M4P2_ROWS: &[ExpectedRow] = &[
    row(&[1, 1, 1, 1], 5, 2, 6, &[1, 1, 1, 1]),
];

// m = 5, k = 3, p = 2: all 3 solutions
const M5P2_ROWS: &[ExpectedRow] = &[
    row(&[1, 1, 2, 2, 2], 9, 6, 30, &[3, 3, 2, 2, 2]),
    row(&[1, 1, 1, 3, 3], 10, 4, 22, &[2, 2, 2, 1, 1]),
    row(&[1, 1, 1, 2, 5], 11, 6, 36, &[3, 3, 3, 2, 1]),
];

// m = 6, k = 4, p = 2: all 17 solutions
const M6P2_ROWS: &[ExpectedRow] = &[
    row(&[2, 2, 2, 2, 2, 2], 13, 3, 21, &[1, 1, 1, 1, 1, 1]),
    row(&[1, 2, 2, 2, 3, 3], 14, 12, 90, &[6, 4, 4, 4, 3, 3]),
    row(&[1, 1, 3, 3, 3, 3], 15, 4, 32, &[2, 2, 1, 1, 1, 1]),
    row(&[1, 2, 2, 2, 2, 5], 15, 6, 48, &[3, 2, 2, 2, 2, 1]),
    row(&[1, 1, 2, 3, 3, 5], 16, 12, 102, &[6, 6, 4, 3, 3, 2]),
    row(&[1, 1, 2, 2, 5, 5], 17, 6, 54, &[3, 3, 2, 2, 1, 1]),
    row(&[1, 1, 1, 5, 5, 5], 19, 6, 60, &[3, 3, 3, 1, 1, 1]),
    row(&[1, 1, 1, 3, 7, 7], 21, 8, 88, &[4, 4, 4, 2, 1, 1]),
    row(&[1, 1, 1, 4, 4, 9], 21, 10, 110, &[5, 5, 5, 2, 2, 1]),
    row(&[1, 1, 2, 2, 3, 11], 21, 12, 132, &[6, 6, 4, 4, 3, 1]),
    row(&[1, 1, 1, 3, 5, 11], 23, 12, 144, &[6, 6, 6, 3, 2, 1]),
    row(&[1, 1, 1, 2, 11, 11], 28, 12, 174, &[6, 6, 6, 4, 1, 1]),
    row(&[1, 1, 1, 2, 9, 14], 29, 30, 450, &[15, 15, 15, 10, 3, 2]),
    row(&[1, 1, 1, 3, 4, 19], 30, 20, 310, &[10, 10, 10, 5, 4, 1]),
    row(&[1, 1, 1, 2, 8, 17], 31, 18, 288, &[9, 9, 9, 6, 2, 1]),
    row(&[1, 1, 1, 2, 7, 23], 36, 24, 444, &[12, 12, 12, 8, 3, 1]),
    row(&[1, 1, 1, 2, 6, 41], 53, 42, 1134, &[21, 21, 21, 14, 6, 1]),
];

pub const TABLES: &[ExpectedTable] = &[
    ExpectedTable { name: "m2p1", m: 2, p: 1, d_max: None, total: 1, rows: M2P1_ROWS },
    ExpectedTable { name: "m3p1", m: 3, p: 1, d_max: None, total: 3, rows: M3P1_ROWS },
    ExpectedTable { name: "m4p1", m: 4, p: 1, d_max: None, total: 14, rows: M4P1_ROWS },
    ExpectedTable { name: "m5p1", m: 5, p: 1, d_max: Some(40), total: 147, rows: M5P1_ROWS },
    ExpectedTable { name: "m6p1", m: 6, p: 1, d_max: Some(40), total: 3462, rows: M6P1_ROWS },
    ExpectedTable { name: "m4p2", m: 4, p: 2, d_max: None, total: 1, rows: M4P2_ROWS },
    ExpectedTable { name: "m5p2", m: 5, p: 2, d_max: None, total: 3, rows: M5P2_ROWS },
    ExpectedTable { name: "m6p2", m: 6, p: 2, d_max: None, total: 17, rows: M6P2_ROWS },
];
