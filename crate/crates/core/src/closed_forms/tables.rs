//! Literal optimal TDTCs for the small cycles and paths that the general
//! construction does not reach.

use super::Family;
use crate::graph::ObjectId;
use crate::verifiers::{Coloring, Universe};

type Table = &'static [&'static [&'static str]];

const C3: Table = &[&["v1", "e2_3"], &["v3", "e1_2"], &["v2", "e1_3"]];

const C4: Table = &[&["e1_2", "e3_4"], &["e2_3", "e1_4"], &["v1", "v3"], &["v2", "v4"]];

const C9: Table = &[
    &["v1", "v6", "v8", "e2_3", "e4_5"],
    &["v7", "v9", "e1_2", "e3_4", "e5_6"],
    &["v2", "e1_9"],
    &["v3"],
    &["v4"],
    &["v5", "e6_7"],
    &["e7_8"],
    &["e8_9"],
];

const C12: Table = &[
    &["v4", "v6", "v11", "e1_12", "e2_3", "e7_8", "e9_10"],
    &["v5", "v10", "v12", "e1_2", "e3_4", "e6_7", "e8_9"],
    &["v2"],
    &["v1", "v3"],
    &["e4_5"],
    &["e5_6"],
    &["v7", "v9"],
    &["v8"],
    &["e10_11"],
    &["e11_12"],
];

const P2: Table = &[&["v1"], &["v2"], &["e1_2"]];

const P3: Table = &[&["v1", "e2_3"], &["v3", "e1_2"], &["v2"]];

const P4: Table = &[&["v2"], &["v3"], &["e1_2", "e3_4"], &["v1", "e2_3", "v4"]];

const P5: Table = &[&["v2"], &["v3"], &["v4"], &["v5", "e1_2", "e3_4"], &["v1", "e2_3", "e4_5"]];

const P6: Table = &[
    &["v2"],
    &["v3"],
    &["v4"],
    &["v5"],
    &["e1_2", "e3_4", "e5_6"],
    &["v1", "e2_3", "e4_5", "v6"],
];

const P8: Table = &[
    &["v1", "e2_3", "e4_5", "e6_7", "v8"],
    &["e1_2", "e3_4", "v5", "e7_8"],
    &["v4", "e5_6"],
    &["v3"],
    &["v2"],
    &["v6"],
    &["v7"],
];

const P9: Table = &[
    &["v2"],
    &["v3"],
    &["e4_5"],
    &["e5_6"],
    &["v7"],
    &["v8"],
    &["v1", "v4", "v6", "v9", "e2_3", "e7_8"],
    &["e1_2", "e3_4", "e6_7", "e8_9", "v5"],
];

const P10: Table = &[
    &["v1", "v4", "v6", "e2_3", "e7_8", "e9_10"],
    &["v5", "v7", "v10", "e1_2", "e3_4", "e8_9"],
    &["e4_5", "e6_7"],
    &["e5_6"],
    &["v2"],
    &["v3"],
    &["v8"],
    &["v9"],
];

const P13: Table = &[
    &["v1", "v6", "v8", "v13", "e2_3", "e4_5", "e9_10", "e11_12"],
    &["v5", "v7", "v9", "e1_2", "e3_4", "e10_11", "e12_13"],
    &["v4", "e5_6"],
    &["v10", "e8_9"],
    &["v2"],
    &["v3"],
    &["e6_7"],
    &["e7_8"],
    &["v11"],
    &["v12"],
];

const P16: Table = &[
    &["v1", "v4", "v6", "v11", "v13", "v16", "e2_3", "e7_8", "e9_10", "e14_15"],
    &["v5", "v7", "v10", "v12", "e1_2", "e3_4", "e8_9", "e13_14", "e15_16"],
    &["v2"],
    &["v3"],
    &["e4_5", "e6_7"],
    &["e5_6"],
    &["v8"],
    &["v9"],
    &["e10_11", "e12_13"],
    &["e11_12"],
    &["v14"],
    &["v15"],
];

/// Cycle orders with a literal table (the orders 5..=8 follow a scheme).
pub const STORED_CYCLES: &[usize] = &[3, 4, 9, 12];
pub const STORED_PATHS: &[usize] = &[2, 3, 4, 5, 6, 8, 9, 10, 13, 16];

fn table(family: Family, n: usize) -> Option<Table> {
    Some(match (family, n) {
        (Family::Cycle, 3) => C3,
        (Family::Cycle, 4) => C4,
        (Family::Cycle, 9) => C9,
        (Family::Cycle, 12) => C12,
        (Family::Path, 2) => P2,
        (Family::Path, 3) => P3,
        (Family::Path, 4) => P4,
        (Family::Path, 5) => P5,
        (Family::Path, 6) => P6,
        (Family::Path, 8) => P8,
        (Family::Path, 9) => P9,
        (Family::Path, 10) => P10,
        (Family::Path, 13) => P13,
        (Family::Path, 16) => P16,
        _ => return None,
    })
}

/// `g(v_i) = g(e_{(i+1)(i+2)}) = i` on `C_n`, indices mod `n`.
fn cycle_scheme(n: usize) -> Coloring {
    let at = |i: usize| (i - 1) % n + 1;
    let classes = (1..=n)
        .map(|i| vec![ObjectId::Vertex(i), ObjectId::edge(at(i + 1), at(i + 2))])
        .collect();
    Coloring::new(Universe::Mixed, classes)
}

/// The literal coloring for `(family, n)`, if there is one.
pub fn stored_coloring(family: Family, n: usize) -> Option<Coloring> {
    if family == Family::Cycle && (5..=8).contains(&n) {
        return Some(cycle_scheme(n));
    }
    let t = table(family, n)?;
    let classes = t
        .iter()
        .map(|class| {
            class
                .iter()
                .map(|s| s.parse().expect("table labels are well formed"))
                .collect()
        })
        .collect();
    Some(Coloring::new(Universe::Mixed, classes))
}
