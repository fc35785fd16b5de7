//! Classifying single relations and recognizing presentations.

use core::fmt;

use crate::family::{Bound, FamilySpec, Relation};
use crate::normal_form::{reduce, ReducedWord, Shape};
use crate::words::{Letter, Word};
use crate::Error;

/// What adding one relation `u = v` to `O(inf,inf)` amounts to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RelationClass {
    /// Already holds in `O(inf,inf)`.
    Redundant,
    /// Equivalent to `a^{n+1}b = a^n`.
    RightBound(u32),
    /// Equivalent to `ab^{m+1} = b^m`.
    LeftBound(u32),
    /// Equivalent to both of the above.
    Both(u32, u32),
    /// Forces `ba = b^2a^2`, so `a` would lie in a subgroup.
    Impossible,
}

impl fmt::Display for RelationClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RelationClass::Redundant => write!(f, "Redundant"),
            RelationClass::RightBound(n) => write!(f, "RightBound({n})"),
            RelationClass::LeftBound(m) => write!(f, "LeftBound({m})"),
            RelationClass::Both(n, m) => write!(f, "Both({n},{m})"),
            RelationClass::Impossible => write!(f, "Impossible"),
        }
    }
}

fn sorted_by<K: Ord>(
    x: ReducedWord,
    y: ReducedWord,
    key: impl Fn(&ReducedWord) -> K,
) -> (ReducedWord, ReducedWord) {
    if key(&x) <= key(&y) {
        (x, y)
    } else {
        (y, x)
    }
}

pub fn classify_relation(u: &Word, v: &Word) -> RelationClass {
    let free = FamilySpec::free();
    let x = reduce(u, free).reduced().expect("combinatorial");
    let y = reduce(v, free).reduced().expect("combinatorial");
    if x == y {
        return RelationClass::Redundant;
    }
    match (x.shape(), y.shape()) {
        // b^k = ab^{k+1}
        (Shape::TypeI, Shape::TypeI) => {
            let (zero, one) = sorted_by(x, y, ReducedWord::i);
            if zero.i() != one.i() && one.k() == zero.k() + 1 {
                RelationClass::LeftBound(zero.k())
            } else {
                RelationClass::Impossible
            }
        }
        // a^l = a^{l+1}b
        (Shape::TypeII, Shape::TypeII) => {
            let (zero, one) = sorted_by(x, y, ReducedWord::j);
            if zero.j() != one.j() && one.l() == zero.l() + 1 {
                RelationClass::RightBound(zero.l())
            } else {
                RelationClass::Impossible
            }
        }
        (Shape::TypeIII, Shape::TypeIII) => {
            if x.k() - x.i() != y.k() - y.i() || x.l() - x.j() != y.l() - y.j() {
                return RelationClass::Impossible;
            }
            let (by_i, _) = sorted_by(x, y, ReducedWord::i);
            let (by_j, _) = sorted_by(x, y, ReducedWord::j);
            match (x.i() != y.i(), x.j() != y.j()) {
                (false, true) => RelationClass::RightBound(by_j.l()),
                (true, false) => RelationClass::LeftBound(by_i.k()),
                (true, true) => RelationClass::Both(by_j.l(), by_i.k()),
                (false, false) => unreachable!("distinct reduced words with equal invariants"),
            }
        }
        _ => RelationClass::Impossible,
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn balance(w: &Word) -> i64 {
    w.count(Letter::A) as i64 - w.count(Letter::B) as i64
}

/// The family presented by the base relations together with `rels`.
pub fn infer_family(rels: &[Relation]) -> Result<FamilySpec, Error> {
    let classes: alloc::vec::Vec<RelationClass> = rels
        .iter()
        .map(|r| classify_relation(&r.lhs, &r.rhs))
        .collect();

    let family = if !classes.contains(&RelationClass::Impossible) {
        let mut n: Option<u32> = None;
        let mut m: Option<u32> = None;
        let lower = |slot: &mut Option<u32>, x: u32| *slot = Some(slot.map_or(x, |s| s.min(x)));
        for c in &classes {
            match *c {
                RelationClass::RightBound(x) => lower(&mut n, x),
                RelationClass::LeftBound(x) => lower(&mut m, x),
                RelationClass::Both(x, y) => {
                    lower(&mut n, x);
                    lower(&mut m, y);
                }
                _ => {}
            }
        }
        let bound = |b: Option<u32>| b.and_then(Bound::finite).unwrap_or(Bound::Infinite);
        FamilySpec::combinatorial(bound(n), bound(m))
    } else {
        let absorb_right = rels.iter().any(|r| r.lhs.first() != r.rhs.first());
        let absorb_left = rels.iter().any(|r| r.lhs.last() != r.rhs.last());
        let d = rels
            .iter()
            .map(|r| (balance(&r.lhs) - balance(&r.rhs)).unsigned_abs())
            .fold(0, gcd);
        let order = match u32::try_from(d).ok().and_then(Bound::finite) {
            Some(b) => b,
            None if d == 0 => Bound::Infinite,
            None => return Err(Error::InvalidParameter("group order does not fit in u32")),
        };
        FamilySpec::GroupCase {
            absorb_left,
            absorb_right,
            order,
        }
    };

    for r in rels {
        if reduce(&r.lhs, family) != reduce(&r.rhs, family) {
            return Err(Error::NotInScope(r.clone()));
        }
    }
    Ok(family)
}
