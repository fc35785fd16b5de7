//! Eggbox grids and band diagrams as text.

use std::fmt::Write as _;

use orthox_core::structure::element_at;
use orthox_core::{
    band_diagram, Bound, ColKey, EggboxCoord, Element, FamilySpec, GroupElement, Letter, RowKey,
};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RenderError {
    #[error("window needs {what} but {family} stops at {limit}")]
    WindowExceedsBounds {
        what: &'static str,
        family: FamilySpec,
        limit: u32,
    },
}

/// How many rows and columns to draw around the center cell `ab`.
///
/// `rows_up` counts rows `ab^k` above the center (k = 2, 3, ...),
/// `rows_down` rows `b^k` below it, `cols_left` columns `a^l b` to the
/// left (l = 2, 3, ...) and `cols_right` columns `a^l` to the right.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EggboxWindow {
    pub rows_up: u32,
    pub rows_down: u32,
    pub cols_left: u32,
    pub cols_right: u32,
}

impl EggboxWindow {
    pub fn new(rows_up: u32, rows_down: u32, cols_left: u32, cols_right: u32) -> EggboxWindow {
        EggboxWindow {
            rows_up,
            rows_down,
            cols_left,
            cols_right,
        }
    }

    /// Row keys top to bottom.
    pub fn rows(&self) -> Vec<RowKey> {
        let mut out: Vec<RowKey> = (2..=self.rows_up + 1)
            .rev()
            .map(|k| RowKey::Edge { i: 1, k })
            .collect();
        out.push(RowKey::Center);
        out.extend((1..=self.rows_down).map(|k| RowKey::Edge { i: 0, k }));
        out
    }

    /// Column keys left to right.
    pub fn cols(&self) -> Vec<ColKey> {
        let mut out: Vec<ColKey> = (2..=self.cols_left + 1)
            .rev()
            .map(|l| ColKey::Edge { l, j: 1 })
            .collect();
        out.push(ColKey::Center);
        out.extend((1..=self.cols_right).map(|l| ColKey::Edge { l, j: 0 }));
        out
    }

    fn check(&self, family: FamilySpec) -> Result<(), RenderError> {
        let FamilySpec::Combinatorial {
            right_bound,
            left_bound,
        } = family
        else {
            return Ok(());
        };
        if let Some(m) = left_bound.get() {
            if self.rows_up > m - 1 {
                return Err(RenderError::WindowExceedsBounds {
                    what: "rows_up",
                    family,
                    limit: m - 1,
                });
            }
        }
        if let Some(n) = right_bound.get() {
            if self.cols_left > n - 1 {
                return Err(RenderError::WindowExceedsBounds {
                    what: "cols_left",
                    family,
                    limit: n - 1,
                });
            }
        }
        Ok(())
    }
}

/// Label of the group-case H-class with the given band coordinates.
fn h_label(row: Option<Letter>, col: Option<Letter>) -> &'static str {
    use Letter::{A, B};
    match (row, col) {
        (Some(A), Some(A)) => "H_a",
        (Some(A), Some(B)) => "H_ab",
        (Some(B), Some(A)) => "H_ba",
        (Some(B), Some(B)) => "H_b",
        (None, Some(A)) | (Some(A), None) | (None, None) => "H_a",
        (None, Some(B)) | (Some(B), None) => "H_b",
    }
}

/// The first `count` members of an H-class, ordered by group coordinate
/// 0, 1, -1, 2, -2, ... (0, 1, ..., d-1 for a finite order).
pub fn h_class_members(
    family: FamilySpec,
    row: Option<Letter>,
    col: Option<Letter>,
    count: usize,
) -> Vec<Element> {
    let FamilySpec::GroupCase { order, .. } = family else {
        return Vec::new();
    };
    let gs: Vec<i64> = match order {
        Bound::Finite(d) => (0..d.get() as i64).take(count).collect(),
        Bound::Infinite => (0..count as i64)
            .map(|t| if t % 2 == 1 { t / 2 + 1 } else { -(t / 2) })
            .collect(),
    };
    gs.into_iter()
        .map(|g| {
            let ge = GroupElement::new(&family, g, row, col).expect("coordinates match family");
            Element::from_group(family, ge).expect("valid group element")
        })
        .collect()
}

fn band_letters(tracked: bool) -> Vec<Option<Letter>> {
    if tracked {
        vec![Some(Letter::A), Some(Letter::B)]
    } else {
        vec![None]
    }
}

/// The eggbox picture as a matrix of cell strings.
///
/// Combinatorial families get one element per cell. Group cases ignore the
/// window and draw their 1 to 4 H-classes, each labelled and followed by
/// `reps` members.
pub fn eggbox_grid(
    family: FamilySpec,
    window: &EggboxWindow,
    reps: usize,
) -> Result<Vec<Vec<String>>, RenderError> {
    match family {
        FamilySpec::Combinatorial { .. } => {
            window.check(family)?;
            let cols = window.cols();
            Ok(window
                .rows()
                .into_iter()
                .map(|row| {
                    cols.iter()
                        .map(|&col| {
                            element_at(family, EggboxCoord { row, col })
                                .expect("window checked against bounds")
                                .to_string()
                        })
                        .collect()
                })
                .collect())
        }
        FamilySpec::GroupCase {
            absorb_left,
            absorb_right,
            ..
        } => Ok(band_letters(!absorb_right)
            .into_iter()
            .map(|row| {
                band_letters(!absorb_left)
                    .into_iter()
                    .map(|col| {
                        let members: Vec<String> = h_class_members(family, row, col, reps)
                            .iter()
                            .map(|x| x.to_string())
                            .collect();
                        if members.is_empty() {
                            h_label(row, col).to_string()
                        } else {
                            format!("{}: {}", h_label(row, col), members.join(", "))
                        }
                    })
                    .collect()
            })
            .collect()),
    }
}

/// Fixed-width, pipe-separated rendering of a grid.
pub fn grid_ascii(grid: &[Vec<String>]) -> String {
    let width = grid
        .iter()
        .flatten()
        .map(|c| c.chars().count())
        .max()
        .unwrap_or(0);
    let ncols = grid.first().map_or(0, Vec::len);
    let rule = format!("+{}+\n", vec!["-".repeat(width + 2); ncols].join("+"));
    let mut out = rule.clone();
    for row in grid {
        out.push('|');
        for cell in row {
            let _ = write!(out, " {cell:<width$} |");
        }
        out.push('\n');
        out.push_str(&rule);
    }
    out
}

/// The band of idempotents in the window as a DOT digraph: bold edges for
/// covering pairs, labelled edges for R- and L-related pairs.
pub fn band_dot(family: FamilySpec, bound: u32) -> String {
    let d = band_diagram(family, bound);
    let mut out = String::from("digraph band {\n");
    for x in &d.nodes {
        let _ = writeln!(out, "  \"{x}\";");
    }
    for e in &d.order_edges {
        let _ = writeln!(out, "  \"{}\" -> \"{}\" [style=bold];", e.upper, e.lower);
    }
    for (x, y) in &d.r_edges {
        let _ = writeln!(out, "  \"{x}\" -> \"{y}\" [label=\"R\"];");
    }
    for (x, y) in &d.l_edges {
        let _ = writeln!(out, "  \"{x}\" -> \"{y}\" [label=\"L\"];");
    }
    out.push_str("}\n");
    out
}

/// Plain-text listing of the same diagram.
pub fn band_text(family: FamilySpec, bound: u32) -> String {
    let d = band_diagram(family, bound);
    let mut out = String::new();
    let names: Vec<String> = d.nodes.iter().map(|x| x.to_string()).collect();
    let _ = writeln!(out, "idempotents: {}", names.join(" "));
    for e in &d.order_edges {
        let _ = writeln!(out, "{} > {}", e.upper, e.lower);
    }
    for (x, y) in &d.r_edges {
        let _ = writeln!(out, "{x} R {y}");
    }
    for (x, y) in &d.l_edges {
        let _ = writeln!(out, "{x} L {y}");
    }
    out
}
