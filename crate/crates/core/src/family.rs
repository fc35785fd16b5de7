//! The classified semigroups and their defining relations.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::num::NonZeroU32;
use core::str::FromStr;

use crate::words::{mirror, parse_word, Letter, Word};
use crate::Error;

/// A positive integer parameter, or infinity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Bound {
    Finite(NonZeroU32),
    Infinite,
}

impl Bound {
    pub fn finite(n: u32) -> Option<Bound> {
        NonZeroU32::new(n).map(Bound::Finite)
    }

    pub fn get(self) -> Option<u32> {
        match self {
            Bound::Finite(n) => Some(n.get()),
            Bound::Infinite => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Bound::Finite(_))
    }

    /// True when `x` lies strictly above a finite bound.
    pub fn exceeded_by(self, x: u32) -> bool {
        match self {
            Bound::Finite(n) => x > n.get(),
            Bound::Infinite => false,
        }
    }

    /// True when `x` is at or above a finite bound.
    pub fn reached_by(self, x: u32) -> bool {
        match self {
            Bound::Finite(n) => x >= n.get(),
            Bound::Infinite => false,
        }
    }
}

impl fmt::Display for Bound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Bound::Finite(n) => write!(f, "{n}"),
            Bound::Infinite => write!(f, "inf"),
        }
    }
}

impl FromStr for Bound {
    type Err = Error;

    fn from_str(s: &str) -> Result<Bound, Error> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("inf") || s == "∞" {
            return Ok(Bound::Infinite);
        }
        s.parse::<u32>()
            .ok()
            .and_then(Bound::finite)
            .ok_or(Error::InvalidParameter(
                "bound must be a positive integer or 'inf'",
            ))
    }
}

/// Which classified semigroup is in force.
///
/// `Combinatorial { right_bound: n, left_bound: m }` is `O(n, m)`: the
/// relation `a^{n+1}b = a^n` holds when `n` is finite and `ab^{m+1} = b^m`
/// when `m` is finite. `O(1, 1)` is the bicyclic semigroup.
///
/// `GroupCase` covers the semigroups where `a` lies in a subgroup:
/// `absorb_left` is `a(ab) = a`, `absorb_right` is `(ab)b = b`, and `order`
/// is the order of `a`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FamilySpec {
    Combinatorial {
        right_bound: Bound,
        left_bound: Bound,
    },
    GroupCase {
        absorb_left: bool,
        absorb_right: bool,
        order: Bound,
    },
}

impl FamilySpec {
    pub fn combinatorial(right_bound: Bound, left_bound: Bound) -> FamilySpec {
        FamilySpec::Combinatorial {
            right_bound,
            left_bound,
        }
    }

    /// `O(inf, inf)`.
    pub fn free() -> FamilySpec {
        FamilySpec::combinatorial(Bound::Infinite, Bound::Infinite)
    }

    /// `O(1, 1)`.
    pub fn bicyclic() -> FamilySpec {
        let one = Bound::finite(1).unwrap();
        FamilySpec::combinatorial(one, one)
    }

    /// Group case by number: 1 = neither absorption, 2 = `(ab)b = b`,
    /// 3 = `a(ab) = a`, 4 = both.
    pub fn group_case(case: u8, order: Bound) -> Result<FamilySpec, Error> {
        let (absorb_left, absorb_right) = match case {
            1 => (false, false),
            2 => (false, true),
            3 => (true, false),
            4 => (true, true),
            _ => return Err(Error::InvalidParameter("group case must be 1, 2, 3 or 4")),
        };
        Ok(FamilySpec::GroupCase {
            absorb_left,
            absorb_right,
            order,
        })
    }

    pub fn case_number(&self) -> Option<u8> {
        match *self {
            FamilySpec::Combinatorial { .. } => None,
            FamilySpec::GroupCase {
                absorb_left,
                absorb_right,
                ..
            } => Some(match (absorb_left, absorb_right) {
                (false, false) => 1,
                (false, true) => 2,
                (true, false) => 3,
                (true, true) => 4,
            }),
        }
    }

    pub fn is_combinatorial(&self) -> bool {
        matches!(self, FamilySpec::Combinatorial { .. })
    }

    /// Whether the first letter of a word survives as an invariant
    /// (the `R`-class coordinate of a group-case element).
    pub(crate) fn tracks_row(&self) -> bool {
        match *self {
            FamilySpec::GroupCase { absorb_right, .. } => !absorb_right,
            FamilySpec::Combinatorial { .. } => true,
        }
    }

    /// Whether the last letter survives (the `L`-class coordinate).
    pub(crate) fn tracks_col(&self) -> bool {
        match *self {
            FamilySpec::GroupCase { absorb_left, .. } => !absorb_left,
            FamilySpec::Combinatorial { .. } => true,
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Combinatorial {
                right_bound,
                left_bound,
            } => write!(f, "O({right_bound},{left_bound})"),
            FamilySpec::GroupCase { order, .. } => {
                write!(
                    f,
                    "GroupCase({}, order {order})",
                    self.case_number().unwrap()
                )
            }
        }
    }
}

/// A defining relation `lhs = rhs`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Relation {
    pub lhs: Word,
    pub rhs: Word,
}

impl Relation {
    pub fn new(lhs: Word, rhs: Word) -> Relation {
        Relation { lhs, rhs }
    }

    /// Both sides mirrored.
    pub fn mirrored(&self) -> Relation {
        Relation::new(mirror(&self.lhs), mirror(&self.rhs))
    }

    /// Sides ordered so that unordered pairs compare equal.
    pub fn unordered(&self) -> (Word, Word) {
        if self.lhs <= self.rhs {
            (self.lhs.clone(), self.rhs.clone())
        } else {
            (self.rhs.clone(), self.lhs.clone())
        }
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}={}", self.lhs, self.rhs)
    }
}

impl FromStr for Relation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Relation, Error> {
        let (lhs, rhs) = s
            .split_once('=')
            .ok_or(Error::InvalidParameter("relation must be written u=v"))?;
        Ok(Relation::new(parse_word(lhs)?, parse_word(rhs)?))
    }
}

fn word(runs: &[(Letter, u32)]) -> Word {
    Word::from_exponents(runs).expect("nonempty relation side")
}

fn rel(lhs: &[(Letter, u32)], rhs: &[(Letter, u32)]) -> Relation {
    Relation::new(word(lhs), word(rhs))
}

/// The defining relations of a family, on top of nothing else.
pub fn relations_of(f: &FamilySpec) -> Vec<Relation> {
    use Letter::{A, B};
    let mut out = vec![
        rel(&[(A, 1), (B, 1), (A, 1)], &[(A, 1)]),
        rel(&[(B, 1), (A, 1), (B, 1)], &[(B, 1)]),
        rel(&[(A, 2), (B, 2)], &[(A, 1), (B, 1)]),
    ];
    match *f {
        FamilySpec::Combinatorial {
            right_bound,
            left_bound,
        } => {
            if let Some(n) = right_bound.get() {
                out.push(rel(&[(A, n + 1), (B, 1)], &[(A, n)]));
            }
            if let Some(m) = left_bound.get() {
                out.push(rel(&[(A, 1), (B, m + 1)], &[(B, m)]));
            }
        }
        FamilySpec::GroupCase {
            absorb_left,
            absorb_right,
            order,
        } => {
            out.push(rel(&[(B, 2), (A, 2)], &[(B, 1), (A, 1)]));
            if absorb_left {
                out.push(rel(&[(A, 2), (B, 1)], &[(A, 1)]));
            }
            if absorb_right {
                out.push(rel(&[(A, 1), (B, 2)], &[(B, 1)]));
            }
            if let Some(d) = order.get() {
                out.push(rel(&[(A, d + 1)], &[(A, 1)]));
            }
        }
    }
    out
}

/// The family obtained by exchanging the roles of `a` and `b`.
pub fn dual_of(f: &FamilySpec) -> FamilySpec {
    match *f {
        FamilySpec::Combinatorial {
            right_bound,
            left_bound,
        } => FamilySpec::combinatorial(left_bound, right_bound),
        FamilySpec::GroupCase {
            absorb_left,
            absorb_right,
            order,
        } => FamilySpec::GroupCase {
            absorb_left: absorb_right,
            absorb_right: absorb_left,
            order,
        },
    }
}
