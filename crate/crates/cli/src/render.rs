//! Plain-text tables.

use carter_linkage::{RMatrix, Rational};

/// Right-aligns every cell to the widest one.
pub fn grid(rows: &[Vec<String>]) -> String {
    let width = rows
        .iter()
        .flatten()
        .map(|c| c.chars().count())
        .max()
        .unwrap_or(0);
    let mut out = String::new();
    for row in rows {
        let cells: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
        out.push_str("[ ");
        out.push_str(&cells.join(" "));
        out.push_str(" ]\n");
    }
    out
}

/// Prints `m` as `(1/k)·` times an integer grid when its entries share a
/// denominator `k > 1`, otherwise as a plain grid.
pub fn fraction_grid(m: &RMatrix) -> String {
    let k = m.common_denominator();
    let cells: Vec<Vec<String>> = (0..m.rows())
        .map(|i| {
            m.row(i)
                .iter()
                .map(|x| (*x * Rational::from_int(k)).to_string())
                .collect()
        })
        .collect();
    if k == 1 {
        grid(&cells)
    } else {
        let prefix = format!("(1/{k})·");
        let pad = " ".repeat(prefix.chars().count());
        grid(&cells)
            .lines()
            .enumerate()
            .map(|(i, l)| format!("{}{l}\n", if i == 0 { &prefix } else { &pad }))
            .collect()
    }
}
