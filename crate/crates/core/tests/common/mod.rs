//! Shared fixtures: matrices and factored polynomials transcribed from the
//! printed sources, plus small constructors.

#![allow(dead_code)]

use rsk_core::contingency::ContingencyTable;
use rsk_core::weights::{WeightPair, WeightVector};
use rsk_core::{Int, IntMatrix, IntPoly};

pub fn wv(parts: &[u32]) -> WeightVector {
    WeightVector::new(parts.to_vec())
}

pub fn wp(sigma: &[u32], pi: &[u32]) -> WeightPair {
    WeightPair::new(wv(sigma), wv(pi)).expect("balanced weight pair")
}

pub fn table(rows: &[&[u32]]) -> ContingencyTable {
    ContingencyTable::from_rows(rows.iter().map(|r| r.to_vec()).collect()).expect("valid table")
}

pub fn int_matrix(rows: &[&[i64]]) -> IntMatrix {
    IntMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| Int::from(x)).collect()).collect())
        .expect("rectangular data")
}

pub fn poly(coeffs: &[i64]) -> IntPoly {
    IntPoly::from_coeffs(coeffs.iter().map(|&c| Int::from(c)).collect())
}

/// Expand a factored polynomial `prod_i f_i^{e_i}`; factors are ascending
/// coefficient lists. This is the oracle for all printed factored forms.
pub fn expand_factors(factors: &[(&[i64], u32)]) -> IntPoly {
    let mut acc = IntPoly::one();
    for &(coeffs, mult) in factors {
        let f = poly(coeffs);
        for _ in 0..mult {
            acc = acc.mul(&f);
        }
    }
    acc
}

pub const T_MINUS_1: &[i64] = &[-1, 1];
pub const T_PLUS_1: &[i64] = &[1, 1];

/// A weight pair together with its printed matrix.
pub struct GoldenMatrix {
    pub sigma: &'static [u32],
    pub pi: &'static [u32],
    pub entries: &'static [&'static [i64]],
}

/// The printed weight-space matrices (dimensions 2 through 9).
pub const GOLDEN_MATRICES: &[GoldenMatrix] = &[
    GoldenMatrix { sigma: &[1, 1], pi: &[1, 1], entries: &[&[1, 1], &[0, -1]] },
    GoldenMatrix {
        sigma: &[1, 1, 1],
        pi: &[1, 1, 1],
        entries: &[
            &[1, 1, 1, 0, 0, 1],
            &[0, 0, 0, 1, 1, -1],
            &[0, 0, -1, 0, 0, -1],
            &[0, 0, 0, -1, 0, 1],
            &[0, 0, 0, 0, -1, 1],
            &[0, -1, 0, 0, 0, -1],
        ],
    },
    GoldenMatrix {
        sigma: &[2, 1],
        pi: &[1, 1, 1],
        entries: &[&[1, 1, 0], &[0, 0, 1], &[0, -1, -1]],
    },
    GoldenMatrix {
        sigma: &[1, 2],
        pi: &[1, 1, 1],
        entries: &[&[1, 1, 1], &[0, -1, 0], &[0, 0, -1]],
    },
    GoldenMatrix {
        sigma: &[2, 1, 1],
        pi: &[1, 2, 1],
        entries: &[
            &[1, 1, 0, 1, 1, 0, 1],
            &[0, 0, 1, 0, 0, 1, -1],
            &[0, 0, 0, 0, -1, 0, 0],
            &[0, 0, 0, -1, -1, 0, -1],
            &[0, 0, -1, 0, 1, 0, 1],
            &[0, 0, 0, 0, 0, -1, 1],
            &[0, -1, 0, 0, 0, 0, -1],
        ],
    },
    GoldenMatrix {
        sigma: &[4, 3],
        pi: &[2, 2, 3],
        entries: &[
            &[1, 1, 1, 0, 0, 1, 0, 0],
            &[0, 0, 0, 1, 1, -1, 0, 1],
            &[0, 0, 0, 0, 0, 0, 1, -1],
            &[0, -1, -2, -1, -1, -2, 0, -1],
            &[0, 0, 0, 0, -1, 2, -2, 0],
            &[0, 0, 0, 0, 0, 0, 0, 1],
            &[0, 0, 1, 0, 1, 1, 1, 1],
            &[0, 0, 0, 0, 0, -1, 0, -1],
        ],
    },
    GoldenMatrix {
        sigma: &[2, 2],
        pi: &[1, 1, 1, 1],
        entries: &[
            &[1, 1, 1, 0, 0, 1],
            &[0, 0, 0, 1, 1, 0],
            &[0, 0, 0, 0, -1, -1],
            &[0, -1, 0, -1, -1, -1],
            &[0, 0, -1, 0, 1, 0],
            &[0, 0, 0, 0, 0, 1],
        ],
    },
    GoldenMatrix {
        sigma: &[3, 2],
        pi: &[2, 1, 1, 1],
        entries: &[
            &[1, 1, 1, 0, 0, 1, 0],
            &[0, 0, 0, 1, 1, 0, 0],
            &[0, 0, 0, 0, 0, 0, 1],
            &[0, -1, 0, -1, -1, -1, 0],
            &[0, 0, -1, 0, 0, -1, -1],
            &[0, 0, 0, 0, -1, 0, -1],
            &[0, 0, 0, 0, 1, 1, 1],
        ],
    },
    GoldenMatrix {
        sigma: &[2, 1, 1],
        pi: &[2, 1, 1],
        entries: &[
            &[1, 1, 1, 0, 0, 1, 1],
            &[0, 0, 0, 1, 1, -1, 0],
            &[0, 0, -1, 0, 0, -1, -1],
            &[0, 0, 0, -1, 0, 1, 0],
            &[0, 0, 0, 0, -1, 1, 0],
            &[0, -1, 0, 0, 0, -1, -1],
            &[0, 0, 0, 0, 0, 0, 1],
        ],
    },
];

/// The printed 9x9 triangular matrix for column weights (3, 2, 3).
pub const GOLDEN_35_323: GoldenMatrix = GoldenMatrix {
    sigma: &[3, 5],
    pi: &[3, 2, 3],
    entries: &[
        &[1, 1, 1, 1, 1, 1, 1, 1, 1],
        &[0, -1, 0, -2, -1, 0, -2, -1, 0],
        &[0, 0, -1, 0, -1, -2, -1, -2, -3],
        &[0, 0, 0, 1, 0, 0, 1, 0, 0],
        &[0, 0, 0, 0, 1, 0, 2, 2, 0],
        &[0, 0, 0, 0, 0, 1, 0, 1, 3],
        &[0, 0, 0, 0, 0, 0, -1, 0, 0],
        &[0, 0, 0, 0, 0, 0, 0, -1, 0],
        &[0, 0, 0, 0, 0, 0, 0, 0, -1],
    ],
};

/// The printed pair of similar 8x8 triangular matrices.
pub const GOLDEN_34_322: GoldenMatrix = GoldenMatrix {
    sigma: &[3, 4],
    pi: &[3, 2, 2],
    entries: &[
        &[1, 1, 1, 1, 1, 1, 1, 1],
        &[0, -1, 0, -2, -1, 0, -2, -1],
        &[0, 0, -1, 0, -1, -2, -1, -2],
        &[0, 0, 0, 1, 0, 0, 1, 0],
        &[0, 0, 0, 0, 1, 0, 2, 2],
        &[0, 0, 0, 0, 0, 1, 0, 1],
        &[0, 0, 0, 0, 0, 0, -1, 0],
        &[0, 0, 0, 0, 0, 0, 0, -1],
    ],
};

pub const GOLDEN_44_431: GoldenMatrix = GoldenMatrix {
    sigma: &[4, 4],
    pi: &[4, 3, 1],
    entries: &[
        &[1, 1, 1, 1, 1, 1, 1, 1],
        &[0, -1, 0, -2, -1, -3, -2, -3],
        &[0, 0, -1, 0, -1, 0, -1, -1],
        &[0, 0, 0, 1, 0, 3, 1, 3],
        &[0, 0, 0, 0, 1, 0, 2, 3],
        &[0, 0, 0, 0, 0, -1, 0, -1],
        &[0, 0, 0, 0, 0, 0, -1, -3],
        &[0, 0, 0, 0, 0, 0, 0, 1],
    ],
};

/// One row of the reduced-pair data tables: weights, determinant, trace,
/// and the factored characteristic polynomial.
pub struct GoldenRow {
    pub sigma: &'static [u32],
    pub pi: &'static [u32],
    pub det: i64,
    pub trace: i64,
    pub charpoly_factors: &'static [(&'static [i64], u32)],
}

/// Degree-3 reduced-pair table.
pub const SECTION9_D3: &[GoldenRow] = &[
    GoldenRow { sigma: &[2, 1], pi: &[1, 1, 1], det: 1, trace: 0, charpoly_factors: &[(T_MINUS_1, 1), (&[1, 1, 1], 1)] },
    GoldenRow { sigma: &[1, 2], pi: &[1, 1, 1], det: 1, trace: -1, charpoly_factors: &[(T_MINUS_1, 1), (T_PLUS_1, 2)] },
    GoldenRow { sigma: &[1, 1, 1], pi: &[1, 1, 1], det: -1, trace: -3, charpoly_factors: &[(T_MINUS_1, 1), (T_PLUS_1, 2), (&[1, 0, 2, 1], 1)] },
];

/// Degree-4 reduced-pair table (grouped rows expanded).
pub const SECTION9_D4: &[GoldenRow] = &[
    GoldenRow { sigma: &[2, 2], pi: &[2, 1, 1], det: 1, trace: 0, charpoly_factors: &[(T_MINUS_1, 2), (T_PLUS_1, 2)] },
    GoldenRow { sigma: &[2, 2], pi: &[1, 2, 1], det: 1, trace: 1, charpoly_factors: &[(T_MINUS_1, 1), (T_PLUS_1, 1), (&[-1, -1, 1], 1)] },
    GoldenRow { sigma: &[2, 2], pi: &[1, 1, 2], det: 1, trace: 1, charpoly_factors: &[(T_MINUS_1, 2), (&[1, 1, 1], 1)] },
    GoldenRow { sigma: &[2, 1, 1], pi: &[2, 1, 1], det: -1, trace: -2, charpoly_factors: &[(T_MINUS_1, 2), (T_PLUS_1, 2), (&[1, 0, 2, 1], 1)] },
    GoldenRow { sigma: &[1, 2, 1], pi: &[1, 2, 1], det: -1, trace: -2, charpoly_factors: &[(T_MINUS_1, 2), (T_PLUS_1, 2), (&[1, 0, 2, 1], 1)] },
    GoldenRow { sigma: &[1, 1, 2], pi: &[1, 1, 2], det: -1, trace: -2, charpoly_factors: &[(T_MINUS_1, 2), (T_PLUS_1, 2), (&[1, 0, 2, 1], 1)] },
    GoldenRow { sigma: &[2, 1, 1], pi: &[1, 2, 1], det: -1, trace: -1, charpoly_factors: &[(T_MINUS_1, 1), (T_PLUS_1, 1), (&[-1, -1, -2, -3, 1, 1], 1)] },
    GoldenRow { sigma: &[2, 1, 1], pi: &[1, 1, 2], det: -1, trace: -1, charpoly_factors: &[(T_MINUS_1, 2), (T_PLUS_1, 1), (&[1, 1, 1], 2)] },
    GoldenRow { sigma: &[1, 2, 1], pi: &[1, 1, 2], det: -1, trace: -2, charpoly_factors: &[(T_MINUS_1, 1), (T_PLUS_1, 2), (&[-1, -1, -2, 1, 1], 1)] },
];

/// Degree-5 reduced-pair table (grouped rows expanded).
pub const SECTION9_D5: &[GoldenRow] = &[
    GoldenRow { sigma: &[3, 2], pi: &[2, 2, 1], det: 1, trace: 0, charpoly_factors: &[(T_MINUS_1, 1), (T_PLUS_1, 1), (&[1, 1, 0, 1], 1)] },
    GoldenRow { sigma: &[3, 2], pi: &[2, 1, 2], det: 1, trace: 1, charpoly_factors: &[(T_MINUS_1, 1), (&[1, -1, 1], 1), (&[1, 1, 1], 1)] },
    GoldenRow { sigma: &[3, 2], pi: &[1, 2, 2], det: 1, trace: 1, charpoly_factors: &[(T_MINUS_1, 1), (&[1, -1, 1], 1), (&[1, 1, 1], 1)] },
    GoldenRow { sigma: &[2, 3], pi: &[2, 2, 1], det: 1, trace: 1, charpoly_factors: &[(T_MINUS_1, 3), (T_PLUS_1, 2)] },
    GoldenRow { sigma: &[2, 3], pi: &[2, 1, 2], det: 1, trace: 1, charpoly_factors: &[(T_MINUS_1, 3), (T_PLUS_1, 2)] },
    GoldenRow { sigma: &[2, 3], pi: &[1, 2, 2], det: 1, trace: 2, charpoly_factors: &[(T_MINUS_1, 2), (T_PLUS_1, 1), (&[-1, -1, 1], 1)] },
    GoldenRow { sigma: &[3, 1, 1], pi: &[2, 2, 1], det: -1, trace: -1, charpoly_factors: &[(T_MINUS_1, 1), (T_PLUS_1, 1), (&[1, 1, 2, 4, 0, 1, 1], 1)] },
    GoldenRow { sigma: &[3, 1, 1], pi: &[2, 1, 2], det: -1, trace: -1, charpoly_factors: &[(T_MINUS_1, 1), (&[1, 1, 1], 2), (&[1, -1, 0, 1], 1)] },
    GoldenRow { sigma: &[3, 1, 1], pi: &[1, 2, 2], det: -1, trace: -1, charpoly_factors: &[(T_MINUS_1, 1), (T_PLUS_1, 1), (&[1, -1, 1], 1), (&[1, 1, 1], 2)] },
    GoldenRow { sigma: &[2, 2, 1], pi: &[1, 3, 1], det: -1, trace: -1, charpoly_factors: &[(T_MINUS_1, 1), (T_PLUS_1, 1), (&[1, 0, 2, 2, -2, 1, 1], 1)] },
    GoldenRow { sigma: &[2, 1, 2], pi: &[1, 3, 1], det: -1, trace: -1, charpoly_factors: &[(T_MINUS_1, 1), (T_PLUS_1, 2), (&[1, 0, 1, -4, 0, 1], 1)] },
    GoldenRow { sigma: &[2, 2, 1], pi: &[1, 1, 3], det: -1, trace: 0, charpoly_factors: &[(T_MINUS_1, 3), (T_PLUS_1, 1), (&[1, 1, 1], 2)] },
    GoldenRow { sigma: &[2, 1, 2], pi: &[1, 1, 3], det: -1, trace: 0, charpoly_factors: &[(T_MINUS_1, 3), (T_PLUS_1, 1), (&[1, 1, 1], 2)] },
    GoldenRow { sigma: &[2, 2, 1], pi: &[2, 2, 1], det: -1, trace: 1, charpoly_factors: &[(T_MINUS_1, 3), (T_PLUS_1, 2), (&[-1, 0, -2, 1], 1), (&[1, 0, 2, 1], 1)] },
    GoldenRow { sigma: &[2, 1, 2], pi: &[2, 1, 2], det: -1, trace: 1, charpoly_factors: &[(T_MINUS_1, 3), (T_PLUS_1, 2), (&[-1, 0, -2, 1], 1), (&[1, 0, 2, 1], 1)] },
    GoldenRow { sigma: &[1, 2, 2], pi: &[1, 2, 2], det: -1, trace: 1, charpoly_factors: &[(T_MINUS_1, 3), (T_PLUS_1, 2), (&[-1, 0, -2, 1], 1), (&[1, 0, 2, 1], 1)] },
    GoldenRow { sigma: &[2, 2, 1], pi: &[2, 1, 2], det: -1, trace: 1, charpoly_factors: &[(T_MINUS_1, 3), (T_PLUS_1, 2), (&[-1, -1, -3, -2, -4, 0, 1], 1)] },
    GoldenRow { sigma: &[2, 2, 1], pi: &[1, 2, 2], det: -1, trace: 1, charpoly_factors: &[(T_MINUS_1, 2), (T_PLUS_1, 1), (&[-1, -1, 1], 1), (&[-1, -1, -2, -1, -2, 1, 1], 1)] },
    GoldenRow { sigma: &[2, 1, 2], pi: &[1, 2, 2], det: -1, trace: 2, charpoly_factors: &[(T_MINUS_1, 2), (T_PLUS_1, 1), (&[-1, 0, -2, 1], 1), (&[-1, -1, -2, -3, 1, 1], 1)] },
    GoldenRow { sigma: &[1, 3, 1], pi: &[1, 2, 2], det: -1, trace: -1, charpoly_factors: &[(T_MINUS_1, 2), (T_PLUS_1, 2), (&[-1, -1, -2, 1, 1], 1)] },
    GoldenRow { sigma: &[1, 2, 2], pi: &[1, 1, 3], det: -1, trace: -1, charpoly_factors: &[(T_MINUS_1, 2), (T_PLUS_1, 2), (&[-1, -1, -2, 1, 1], 1)] },
];

/// The extra printed data point at degree 6.
pub const GOLDEN_321_321: GoldenRow = GoldenRow {
    sigma: &[3, 2, 1],
    pi: &[3, 2, 1],
    det: 1,
    trace: 0,
    charpoly_factors: &[(T_MINUS_1, 3), (T_PLUS_1, 3), (&[-1, 0, -2, 1], 1), (&[1, 0, 2, 1], 1)],
};

/// Printed minimal polynomials (factored). The (4,3)/(2,2,3) entry is
/// printed with (t-1)^2 in the source, but (t-1)(t^2+t+1)^2 already
/// annihilates the printed matrix, so the true minimal polynomial carries
/// (t-1) to the first power; see the test that pins the misprint.
pub struct GoldenMinPoly {
    pub sigma: &'static [u32],
    pub pi: &'static [u32],
    pub factors: &'static [(&'static [i64], u32)],
}

pub const GOLDEN_MIN_POLYS: &[GoldenMinPoly] = &[
    GoldenMinPoly { sigma: &[1, 1, 1], pi: &[1, 1, 1], factors: &[(T_MINUS_1, 1), (T_PLUS_1, 1), (&[1, 0, 2, 1], 1)] },
    GoldenMinPoly { sigma: &[4, 3], pi: &[2, 2, 3], factors: &[(T_MINUS_1, 1), (&[1, 1, 1], 2)] },
    GoldenMinPoly { sigma: &[2, 1, 1], pi: &[2, 1, 1], factors: &[(T_MINUS_1, 2), (T_PLUS_1, 1), (&[1, 0, 2, 1], 1)] },
    GoldenMinPoly { sigma: &[2, 2], pi: &[1, 1, 1, 1], factors: &[(T_MINUS_1, 2), (&[-1, -1, 1], 1), (&[1, 1, 1], 1)] },
    GoldenMinPoly { sigma: &[3, 2], pi: &[2, 1, 1, 1], factors: &[(T_MINUS_1, 2), (&[1, 1, 1], 1), (&[1, 1, 0, 1], 1)] },
];

/// Printed determinant table: rows are square sizes 1..=5, entries run
/// over degrees 1..=row length.
pub const DET_TABLE: &[&[i64]] = &[
    &[1, 1, 1, 1, 1, 1, 1, 1, 1],
    &[1, -1, 1, -1, 1, 1, 1, 1, 1],
    &[1, -1, -1, 1, 1, -1, -1],
    &[1, 1, 1, 1, 1],
    &[1, 1, 1, 1],
];

/// Printed trace table, same layout.
pub const TRACE_TABLE: &[&[i64]] = &[
    &[1, 1, 1, 1, 1, 1, 1, 1, 1],
    &[4, 8, 12, 17, 24, 32, 40, 49, 60],
    &[9, 27, 42, 70, 160, 241, 203],
    &[16, 64, 48, -33, 613],
    &[25, 125, -175, -1650],
];

/// Printed inverse-trace table, same layout.
pub const TRACE_INV_TABLE: &[&[i64]] = &[
    &[1, 1, 1, 1, 1, 1, 1, 1, 1],
    &[4, 8, 12, 17, 24, 32, 40, 49, 60],
    &[9, 27, 44, 64, 118, 185, 201],
    &[16, 64, 80, -29, 24],
    &[25, 125, 25, -1250],
];

/// Permutation-block traces for degrees 1..=11. The degree-8 entry is
/// printed as -3498 in the source; the sweep (verified against full
/// symbolic expansion and an independent implementation) gives -3438,
/// while every neighbouring entry and the zero-diagonal counts match the
/// printed data exactly.
pub const TRACE_PERM_SEQUENCE: &[i64] =
    &[1, 0, -3, -5, 23, 96, -279, -3438, 124, 120819, 185838];
pub const TRACE_PERM_PRINTED_D8: i64 = -3498;

/// Zero-diagonal counts among permutation tables, degrees 1..=9.
pub const CD_SEQUENCE: &[u64] = &[0, 0, 1, 7, 53, 406, 3373, 30360, 297256];
