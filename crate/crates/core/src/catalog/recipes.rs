//! Construction table of the fundamental covariants.
//!
//! Every row reads `symbol = (f, right)^index`. Rows are grouped by degree
//! and, inside a degree, listed in the published order; tags follow that
//! order.

/// (symbol, right operand, transvectant index)
pub(crate) const RECIPES: &[(&str, &str, &str)] = &[
    // degree 2
    ("B_0000", "f", "1111"),
    ("B_2200", "f", "0011"),
    ("B_2020", "f", "0101"),
    ("B_2002", "f", "0110"),
    ("B_0220", "f", "1001"),
    ("B_0202", "f", "1010"),
    ("B_0022", "f", "1100"),
    // degree 3
    ("C^1_1111", "B_2200", "1100"),
    ("C^2_1111", "B_2020", "1010"),
    ("C_3111", "B_2200", "0100"),
    ("C_1311", "B_2200", "1000"),
    ("C_1131", "B_2020", "1000"),
    ("C_1113", "B_2002", "1000"),
    // degree 4
    ("D^1_0000", "C^1_1111", "1111"),
    ("D^2_0000", "C^2_1111", "1111"),
    ("D_2200", "C_3111", "1011"),
    ("D_2020", "C^1_1111", "0101"),
    ("D_2002", "C_3111", "1110"),
    ("D_0220", "C_1311", "1101"),
    ("D_0202", "C_1311", "1110"),
    ("D_0022", "C_1131", "1110"),
    ("D_4000", "C_3111", "0111"),
    ("D_0400", "C_1311", "1011"),
    ("D_0040", "C_1131", "1101"),
    ("D_0004", "C_1113", "1110"),
    ("D^1_2220", "C_1311", "0101"),
    ("D^2_2220", "C^1_1111", "0001"),
    ("D^1_2202", "C_1113", "0011"),
    ("D^2_2202", "C_1311", "0110"),
    ("D^1_2022", "C_1113", "0101"),
    ("D^2_2022", "C^1_1111", "0100"),
    ("D^1_0222", "C_1113", "1001"),
    ("D^2_0222", "C_1311", "1100"),
    // degree 5
    ("E_1111", "D_2200", "1100"),
    ("E^1_3111", "D_2200", "0100"),
    ("E^2_3111", "D^1_2202", "0101"),
    ("E^3_3111", "D^2_2022", "0011"),
    ("E^1_1311", "D_2200", "1000"),
    ("E^2_1311", "D_0202", "0001"),
    ("E^3_1311", "D_0220", "0010"),
    ("E^1_1131", "D^1_0222", "0101"),
    ("E^2_1131", "D^2_2022", "1001"),
    ("E^3_1131", "D_2020", "1000"),
    ("E^1_1113", "D^1_2022", "1010"),
    ("E^2_1113", "D^2_2022", "1010"),
    ("E^3_1113", "D_0004", "0001"),
    // degree 6
    ("F_0000", "E_1111", "1111"),
    ("F_2200", "E^1_3111", "1011"),
    ("F_2020", "E_1111", "0101"),
    ("F_2002", "E^1_1113", "0111"),
    ("F_0220", "E^1_1311", "1101"),
    ("F_0202", "E^3_1113", "1011"),
    ("F_0022", "E^1_1113", "1101"),
    ("F^1_2220", "E^1_1311", "0101"),
    ("F^2_2220", "E^2_1311", "0101"),
    ("F^1_2202", "E^2_3111", "1010"),
    ("F^2_2202", "E^3_3111", "1010"),
    ("F^1_2022", "E^1_1113", "0101"),
    ("F^2_2022", "E^2_1113", "0101"),
    ("F^1_0222", "E^1_1131", "1010"),
    ("F^2_0222", "E^2_1131", "1010"),
    ("F_4200", "E^1_3111", "0011"),
    ("F_4020", "E^2_3111", "0101"),
    ("F_4002", "E^2_3111", "0110"),
    ("F_0420", "E^3_1311", "1001"),
    ("F_0402", "E^2_1311", "1010"),
    ("F_0042", "E^1_1131", "1100"),
    ("F_2400", "E^1_1311", "0011"),
    ("F_2040", "E^1_1131", "0101"),
    ("F_2004", "E^1_1113", "0110"),
    ("F_0240", "E^1_1131", "1001"),
    ("F_0204", "E^1_1113", "1010"),
    ("F_0024", "E^1_1113", "1100"),
    // degree 7
    ("G^1_3111", "F_2200", "0100"),
    ("G^2_3111", "F_4002", "1001"),
    ("G^3_3111", "F^1_2202", "0101"),
    ("G^1_1311", "F_0402", "0101"),
    ("G^2_1311", "F_2200", "1000"),
    ("G^3_1311", "F_0202", "0001"),
    ("G^1_1131", "F^1_0222", "0101"),
    ("G^2_1131", "F^2_0222", "0101"),
    ("G^3_1131", "F_2040", "1010"),
    ("G^1_1113", "F^1_2022", "1010"),
    ("G^2_1113", "F^2_2022", "1010"),
    ("G^3_1113", "F_0202", "0100"),
    ("G_5111", "F_4002", "0001"),
    ("G_1511", "F_0402", "0001"),
    ("G_1151", "F_2040", "1000"),
    ("G_1115", "F_0024", "0010"),
    ("G_3311", "F_2400", "0100"),
    ("G_3131", "F^2_2022", "0001"),
    ("G_3113", "F_4002", "1000"),
    ("G_1331", "F_0240", "0010"),
    ("G_1313", "F_0402", "0100"),
    ("G_1133", "F^2_2022", "1000"),
    // degree 8
    ("H_4000", "G_5111", "1111"),
    ("H_0400", "G^1_1311", "1011"),
    ("H_0040", "G_1151", "1111"),
    ("H_0004", "G^3_1113", "1110"),
    ("H^1_2220", "G^1_1311", "0101"),
    ("H^2_2220", "G^2_1311", "0101"),
    ("H^1_2202", "G^3_3111", "1010"),
    ("H^2_2202", "G^2_1113", "0011"),
    ("H^1_2022", "G^1_1113", "0101"),
    ("H^2_2022", "G^2_1113", "0101"),
    ("H^1_0222", "G^1_1131", "1010"),
    ("H^2_0222", "G^2_1131", "1010"),
    ("H_4200", "G_5111", "1011"),
    ("H_4020", "G_5111", "1101"),
    ("H_4002", "G_5111", "1110"),
    ("H_0420", "G^1_1311", "1001"),
    ("H_0402", "G_1313", "1011"),
    ("H_0042", "G_1151", "1110"),
    ("H_2400", "G^1_1311", "0011"),
    ("H_2040", "G_1151", "0111"),
    ("H_2004", "G^1_1113", "0110"),
    ("H_0240", "G_1151", "1011"),
    ("H_0204", "G^1_1113", "1010"),
    ("H_0024", "G^1_1113", "1100"),
    // degree 9
    ("I_3111", "H_4020", "1010"),
    ("I_1311", "H^1_2220", "1010"),
    ("I_1131", "H_0240", "0110"),
    ("I_1113", "H_2004", "1001"),
    ("I^1_5111", "H_4020", "0010"),
    ("I^2_5111", "H_4002", "0001"),
    ("I^1_1511", "H_0402", "0001"),
    ("I^2_1511", "H_2400", "1000"),
    ("I^1_1151", "H_0240", "0100"),
    ("I^2_1151", "H_0042", "0001"),
    ("I^1_1115", "H_2004", "1000"),
    ("I^2_1115", "H_0024", "0010"),
    ("I^1_3311", "H^1_2220", "0010"),
    ("I^2_3311", "H^2_2220", "0010"),
    ("I^1_3131", "H_4020", "1000"),
    ("I^2_3131", "H^1_2220", "0100"),
    ("I^1_3113", "H_2004", "0001"),
    ("I^2_3113", "H^1_2022", "0010"),
    ("I^1_1331", "H_0240", "0010"),
    ("I^2_1331", "H^1_2220", "1000"),
    ("I^1_1313", "H_0204", "0001"),
    ("I^2_1313", "H^1_0222", "0010"),
    ("I^1_1133", "H_0024", "0001"),
    ("I^2_1133", "H^1_0222", "0100"),
    // degree 10
    ("J_4200", "I^1_5111", "1011"),
    ("J_4020", "I^1_5111", "1101"),
    ("J_4002", "I^1_3113", "0111"),
    ("J_0420", "I^1_1331", "1011"),
    ("J_0402", "I^1_1511", "1110"),
    ("J_0042", "I^1_1133", "1101"),
    ("J_2400", "I^1_1511", "0111"),
    ("J_2040", "I^1_3131", "1101"),
    ("J_2004", "I^1_3113", "1110"),
    ("J_0240", "I^1_1331", "1101"),
    ("J_0204", "I^1_1115", "1011"),
    ("J_0024", "I^1_1115", "1101"),
    // degree 11
    ("K_3311", "J_4200", "1000"),
    ("K_3131", "J_4020", "1000"),
    ("K_3113", "J_4002", "1000"),
    ("K_1331", "J_0420", "0100"),
    ("K_1313", "J_0402", "0100"),
    ("K_1133", "J_0042", "0010"),
    ("K_5111", "J_4200", "0100"),
    ("K_1511", "J_2400", "1000"),
    ("K_1151", "J_2040", "1000"),
    ("K_1115", "J_2004", "1000"),
    // degree 12
    ("L_6000", "K_5111", "0111"),
    ("L_0600", "K_1511", "1011"),
    ("L_0060", "K_1151", "1101"),
    ("L_0006", "K_1115", "1110"),
];

/// Published number of generators per (degree, shape): rows are shapes
/// with their permutation count, then (degree, count per permutation).
pub(crate) const PUBLISHED_COUNTS: &[([u8; 4], usize, &[(u8, usize)])] = &[
    ([0, 0, 0, 0], 1, &[(2, 1), (4, 2), (6, 1)]),
    ([1, 1, 1, 1], 1, &[(1, 1), (3, 2), (5, 1)]),
    ([2, 2, 0, 0], 6, &[(2, 1), (4, 1), (6, 1)]),
    ([2, 2, 2, 0], 4, &[(4, 2), (6, 2), (8, 2)]),
    ([3, 1, 1, 1], 4, &[(3, 1), (5, 3), (7, 3), (9, 1)]),
    ([3, 3, 1, 1], 6, &[(7, 1), (9, 2), (11, 1)]),
    ([4, 0, 0, 0], 4, &[(4, 1), (8, 1)]),
    ([4, 2, 0, 0], 12, &[(6, 1), (8, 1), (10, 1)]),
    ([5, 1, 1, 1], 4, &[(7, 1), (9, 2), (11, 1)]),
    ([6, 0, 0, 0], 4, &[(12, 1)]),
];
