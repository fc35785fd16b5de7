//! The least inverse congruence `Y` and inverse sets.

use alloc::vec::Vec;
use core::fmt;

use crate::family::{Bound, FamilySpec};
use crate::normal_form::{multiply, reduce, Element};
use crate::structure::elements_window;
use crate::Error;

/// Image of an element in `S/Y`: the bicyclic semigroup for combinatorial
/// families, the cyclic group `H_a` for group cases.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum YImage {
    Bicyclic(Element),
    Cyclic { g: i64, order: Bound },
}

impl YImage {
    /// `(m, n)` with the image equal to `b^m a^n` in the bicyclic semigroup.
    pub fn bicyclic_exponents(&self) -> Option<(u32, u32)> {
        let YImage::Bicyclic(x) = self else {
            return None;
        };
        let (i, k, l, j) = x.reduced()?.parts();
        Some((k - i, l - j))
    }
}

impl fmt::Display for YImage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            YImage::Bicyclic(x) => write!(f, "{x}"),
            YImage::Cyclic { g, order } => match order {
                Bound::Infinite => write!(f, "g={g}"),
                Bound::Finite(d) => write!(f, "g={g} (mod {d})"),
            },
        }
    }
}

pub fn y_image(x: &Element) -> YImage {
    match x.family() {
        FamilySpec::Combinatorial { .. } => {
            YImage::Bicyclic(reduce(&x.word(), FamilySpec::bicyclic()))
        }
        FamilySpec::GroupCase { order, .. } => YImage::Cyclic {
            g: x.group().expect("group-case element").g(),
            order,
        },
    }
}

/// The inverses of `x` among the elements of the window.
pub fn v_set_window(x: &Element, bound: u32) -> Vec<Element> {
    elements_window(x.family(), bound)
        .into_iter()
        .filter(|y| {
            let xyx = multiply(&multiply(x, y).unwrap(), x).unwrap();
            let yxy = multiply(&multiply(y, x).unwrap(), y).unwrap();
            xyx == *x && yxy == *y
        })
        .collect()
}

/// `x Y y`, decided by comparing images.
pub fn y_related(x: &Element, y: &Element) -> Result<bool, Error> {
    if x.family() != y.family() {
        return Err(Error::FamilyMismatch);
    }
    Ok(y_image(x) == y_image(y))
}
