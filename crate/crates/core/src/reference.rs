//! Published reference values that the computed results are checked against.

use crate::rational::ExactRational;

/// Quoted value of the asymptotic constant, five decimals.
pub const C_QUOTED: f64 = 0.56146;

/// `(m, Delta_m, C_m)`, seven decimals.
pub const DELTA_TABLE: [(u32, f64, f64); 13] = [
    (1, 0.0, 0.7357589),
    (2, 0.3224670, 0.5329542),
    (3, 0.2551147, 0.5700863),
    (4, 0.2756955, 0.5584734),
    (5, 0.2683100, 0.5626133),
    (6, 0.2712005, 0.5609894),
    (7, 0.2700078, 0.5616589),
    (8, 0.2705174, 0.5613727),
    (9, 0.2702943, 0.5614980),
    (10, 0.2703937, 0.5614421),
    (11, 0.2703488, 0.5614674),
    (12, 0.2703693, 0.5614559),
    (13, 0.2703599, 0.5614612),
];

/// Agreement "to 7 decimal places": `|a - b| < 1.5e-7`.
pub const DELTA_TABLE_TOL: f64 = 1.5e-7;

/// `(k, zeta(k) - 1)`, six decimals.
pub const ZETA_TABLE: [(u32, f64); 10] = [
    (2, 0.644934),
    (3, 0.202057),
    (4, 0.082323),
    (5, 0.036928),
    (6, 0.017343),
    (7, 0.008349),
    (8, 0.004077),
    (9, 0.002008),
    (10, 0.000995),
    (11, 0.000494),
];

pub const ZETA_TABLE_TOL: f64 = 1.5e-6;

/// Rows and columns of the two coefficient tables: `0 <= n <= 5`,
/// `0 <= k <= 16`.
pub const FIELD_ROWS: usize = 6;
pub const FIELD_COLS: usize = 17;

pub const Q_FIELD: [[u64; FIELD_COLS]; FIELD_ROWS] = [
    [1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [1, 1, 1, 2, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [1, 1, 1, 2, 2, 2, 2, 2, 1, 1, 1, 0, 0, 0, 0, 0, 0],
    [1, 1, 1, 2, 2, 3, 3, 3, 3, 3, 3, 2, 2, 1, 1, 1, 0],
];

const R_FIELD_TEXT: [[&str; FIELD_COLS]; FIELD_ROWS] = [
    [
        "1", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0",
    ],
    [
        "1", "1", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0",
    ],
    [
        "1", "1", "1/2", "1/2", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0",
    ],
    [
        "1", "1", "1/2", "5/6", "1/3", "1/6", "1/6", "0", "0", "0", "0", "0", "0", "0", "0", "0",
        "0",
    ],
    [
        "1", "1", "1/2", "5/6", "7/12", "5/12", "7/24", "5/24", "1/12", "1/24", "1/24", "0", "0",
        "0", "0", "0", "0",
    ],
    [
        "1", "1", "1/2", "5/6", "7/12", "37/60", "59/120", "37/120", "1/4", "19/120", "1/8",
        "7/120", "1/24", "1/60", "1/120", "1/120", "0",
    ],
];

pub fn r_field() -> Vec<Vec<ExactRational>> {
    R_FIELD_TEXT
        .iter()
        .map(|row| {
            row.iter()
                .map(|s| s.parse().expect("reference literal"))
                .collect()
        })
        .collect()
}
