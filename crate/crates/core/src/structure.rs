//! Green's relations, eggbox coordinates and the band of idempotents.
//!
//! Windows cap the exponents `k` and `l` of reduced forms (not word
//! length), so a window is a rectangular piece of the eggbox. In group
//! cases a window is `|g| <= bound` (all residues for a finite order).

use alloc::vec::Vec;
use core::fmt;

use crate::family::FamilySpec;
use crate::normal_form::{is_idempotent, multiply, Element, GroupElement, ReducedWord};
use crate::words::Letter;
use crate::Error;

/// The `R`-class of a combinatorial element, named by its prefix `a^i b^k`.
/// `Center` is `R_a`, the row holding `a`, `a^n b` and `ab`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RowKey {
    Center,
    Edge { i: u32, k: u32 },
}

/// The `L`-class, named by the suffix `a^l b^j`. `Center` is `L_b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ColKey {
    Center,
    Edge { l: u32, j: u32 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EggboxCoord {
    pub row: RowKey,
    pub col: ColKey,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Green {
    R,
    L,
    H,
    D,
}

impl core::str::FromStr for Green {
    type Err = Error;

    fn from_str(s: &str) -> Result<Green, Error> {
        match s.trim() {
            "R" | "r" => Ok(Green::R),
            "L" | "l" => Ok(Green::L),
            "H" | "h" => Ok(Green::H),
            "D" | "d" => Ok(Green::D),
            _ => Err(Error::InvalidParameter(
                "Green's relation must be R, L, H or D",
            )),
        }
    }
}

/// The six pieces of `O(inf,inf)`: two cyclic semigroups and four bicyclic
/// subsemigroups.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Piece {
    /// `<a>`
    CyclicA,
    /// `<b>`
    CyclicB,
    /// `B(a^2b, ab^2)`, identity `ab`
    BicyclicCenter,
    /// `B(ba^2, b^2a)`, identity `ba`
    BicyclicLowerRight,
    /// `B(ab^2a^2, ab^3a)`, identity `ab^2a`
    BicyclicUpperRight,
    /// `B(ba^3b, b^2a^2b)`, identity `ba^2b`
    BicyclicLowerLeft,
}

impl Piece {
    pub const ALL: [Piece; 6] = [
        Piece::CyclicA,
        Piece::CyclicB,
        Piece::BicyclicCenter,
        Piece::BicyclicLowerRight,
        Piece::BicyclicUpperRight,
        Piece::BicyclicLowerLeft,
    ];
}

impl fmt::Display for Piece {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

fn reduced(x: &Element) -> Result<ReducedWord, Error> {
    x.reduced().ok_or(Error::NotCombinatorial)
}

pub fn eggbox_coord(x: &Element) -> Result<EggboxCoord, Error> {
    let (i, k, l, j) = reduced(x)?.parts();
    let row = if (i, k) == (0, 0) {
        RowKey::Center
    } else {
        RowKey::Edge { i, k }
    };
    let col = if (l, j) == (0, 0) || (l, j) == (1, 1) {
        ColKey::Center
    } else {
        ColKey::Edge { l, j }
    };
    Ok(EggboxCoord { row, col })
}

/// The unique element of a combinatorial family at `coord`, if the
/// coordinate is admitted by the family bounds.
pub fn element_at(family: FamilySpec, coord: EggboxCoord) -> Option<Element> {
    let (i, k) = match coord.row {
        RowKey::Center => (0, 0),
        RowKey::Edge { i, k } => (i, k),
    };
    let (l, j) = match (coord.row, coord.col) {
        (RowKey::Center, ColKey::Center) => (1, 1),
        (_, ColKey::Center) => (0, 0),
        (_, ColKey::Edge { l, j }) => (l, j),
    };
    let rw = ReducedWord::new(i, k, l, j)?;
    let x = Element::from_reduced(family, rw)?;
    (eggbox_coord(&x).ok()? == coord).then_some(x)
}

pub fn related(x: &Element, y: &Element, rel: Green) -> Result<bool, Error> {
    if x.family() != y.family() {
        return Err(Error::FamilyMismatch);
    }
    if rel == Green::D {
        return Ok(true);
    }
    if let (Some(p), Some(q)) = (x.group(), y.group()) {
        return Ok(match rel {
            Green::R => p.row() == q.row(),
            Green::L => p.col() == q.col(),
            Green::H => p.row() == q.row() && p.col() == q.col(),
            Green::D => true,
        });
    }
    let (cx, cy) = (eggbox_coord(x)?, eggbox_coord(y)?);
    Ok(match rel {
        Green::R => cx.row == cy.row,
        Green::L => cx.col == cy.col,
        Green::H => x == y,
        Green::D => true,
    })
}

/// Every element of the window, sorted.
pub fn elements_window(family: FamilySpec, bound: u32) -> Vec<Element> {
    let mut out = Vec::new();
    match family {
        FamilySpec::Combinatorial { .. } => {
            for i in 0..=1 {
                for k in 0..=bound {
                    for l in 0..=bound {
                        for j in 0..=1 {
                            if let Some(x) = ReducedWord::new(i, k, l, j)
                                .and_then(|rw| Element::from_reduced(family, rw))
                            {
                                out.push(x);
                            }
                        }
                    }
                }
            }
        }
        FamilySpec::GroupCase { order, .. } => {
            let (lo, hi) = match order.get() {
                Some(d) => (0, d as i64 - 1),
                None => (-(bound as i64), bound as i64),
            };
            let letters = |tracked: bool| -> Vec<Option<Letter>> {
                if tracked {
                    alloc::vec![Some(Letter::A), Some(Letter::B)]
                } else {
                    alloc::vec![None]
                }
            };
            for g in lo..=hi {
                for &row in &letters(family.tracks_row()) {
                    for &col in &letters(family.tracks_col()) {
                        let ge = GroupElement::new(&family, g, row, col)
                            .expect("coordinates match family");
                        out.push(Element::from_group(family, ge).expect("valid group element"));
                    }
                }
            }
        }
    }
    out.sort();
    out
}

/// Idempotents of the window. For group cases this is all of `E_S`.
pub fn idempotents_window(family: FamilySpec, bound: u32) -> Vec<Element> {
    elements_window(family, bound)
        .into_iter()
        .filter(is_idempotent)
        .collect()
}

/// `e <= f` in the natural order: `ef = fe = e`.
pub fn natural_leq(e: &Element, f: &Element) -> Result<bool, Error> {
    if e.family() != f.family() {
        return Err(Error::FamilyMismatch);
    }
    if !is_idempotent(e) || !is_idempotent(f) {
        return Err(Error::NotIdempotent);
    }
    Ok(multiply(e, f)? == *e && multiply(f, e)? == *e)
}

/// A covering pair of the natural order: `lower < upper` with nothing in
/// the window strictly between.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct OrderEdge {
    pub upper: Element,
    pub lower: Element,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BandDiagram {
    pub nodes: Vec<Element>,
    pub order_edges: Vec<OrderEdge>,
    /// Unordered same-row pairs, smaller node first.
    pub r_edges: Vec<(Element, Element)>,
    /// Unordered same-column pairs, smaller node first.
    pub l_edges: Vec<(Element, Element)>,
}

pub fn band_diagram(family: FamilySpec, bound: u32) -> BandDiagram {
    let nodes = idempotents_window(family, bound);
    let n = nodes.len();
    let leq = |a: usize, b: usize| natural_leq(&nodes[a], &nodes[b]).expect("window idempotents");
    let below: Vec<Vec<bool>> = (0..n)
        .map(|a| (0..n).map(|b| a != b && leq(a, b)).collect())
        .collect();

    let mut order_edges = Vec::new();
    for (lo, row) in below.iter().enumerate() {
        for (up, &lt) in row.iter().enumerate() {
            if lt && !(0..n).any(|mid| below[lo][mid] && below[mid][up]) {
                order_edges.push(OrderEdge {
                    upper: nodes[up],
                    lower: nodes[lo],
                });
            }
        }
    }
    order_edges.sort();

    let mut r_edges = Vec::new();
    let mut l_edges = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if related(&nodes[a], &nodes[b], Green::R).expect("same family") {
                r_edges.push((nodes[a], nodes[b]));
            }
            if related(&nodes[a], &nodes[b], Green::L).expect("same family") {
                l_edges.push((nodes[a], nodes[b]));
            }
        }
    }
    BandDiagram {
        nodes,
        order_edges,
        r_edges,
        l_edges,
    }
}

/// The window part of `eEe`, i.e. the idempotents below `e`, from the top
/// down. Fails with `NotAChain` if they are not totally ordered.
pub fn local_chain(e: &Element, bound: u32) -> Result<Vec<Element>, Error> {
    if !is_idempotent(e) {
        return Err(Error::NotIdempotent);
    }
    let mut chain = Vec::new();
    for x in idempotents_window(e.family(), bound) {
        if natural_leq(&x, e)? {
            chain.push(x);
        }
    }
    for (t, x) in chain.iter().enumerate() {
        for y in &chain[t + 1..] {
            if !natural_leq(x, y)? && !natural_leq(y, x)? {
                return Err(Error::NotAChain);
            }
        }
    }
    chain.sort_by(|x, y| {
        if x == y {
            core::cmp::Ordering::Equal
        } else if natural_leq(x, y).unwrap_or(false) {
            core::cmp::Ordering::Greater
        } else {
            core::cmp::Ordering::Less
        }
    });
    Ok(chain)
}

/// Which of the six pieces of `O(inf,inf)` holds `x`.
pub fn piece_of(x: &Element) -> Result<Piece, Error> {
    if x.family() != FamilySpec::free() {
        return Err(Error::WrongFamily);
    }
    let (i, k, l, j) = reduced(x)?.parts();
    let starts_with_a = i == 1 || k == 0;
    let ends_with_b = j == 1 || l == 0;
    Ok(match (i, k, l, j) {
        (0, 0, _, 0) => Piece::CyclicA,
        (0, _, 0, 0) => Piece::CyclicB,
        _ if starts_with_a && ends_with_b => Piece::BicyclicCenter,
        (0, _, _, 0) => Piece::BicyclicLowerRight,
        (1, _, _, 0) => Piece::BicyclicUpperRight,
        _ => Piece::BicyclicLowerLeft,
    })
}
