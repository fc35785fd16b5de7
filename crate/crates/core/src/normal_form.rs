//! Canonical forms, multiplication and inverses.
//!
//! In a combinatorial family every element has a unique reduced form
//! `a^i b^k a^l b^j` (`i, j ∈ {0, 1}`) of one of three shapes:
//!
//! * type I: `a^i b^k` with `k > i`;
//! * type II: `a^l b^j` with `l >= 1`, `l >= j` (so `ab` is type II);
//! * type III: `a^i b^k a^l b^j` with `k > i` and `l > j`.
//!
//! A type III word is the product of a type I prefix and a type II suffix.
//! Reduction writes a word as a sequence of such factors and merges adjacent
//! ones with the product rules for abridged words until no merge applies;
//! what remains is one factor or a type I factor followed by a type II one.
//! In `O(n, m)` two clamps follow every merge: `ab^k -> b^{k-1}` when
//! `k > m` and `a^l b -> a^{l-1}` when `l > n`.
//!
//! Group-case elements are triples `(g, row, col)`: `g` is the letter
//! balance `#a - #b` (reduced modulo a finite order), `row` the first letter
//! and `col` the last letter, each kept only when the family's relations
//! preserve it.

use alloc::collections::BTreeSet;
use alloc::string::{String, ToString};
use core::fmt;

use crate::family::{Bound, FamilySpec};
use crate::words::{mirror, syllables, Letter, Word};
use crate::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Shape {
    TypeI,
    TypeII,
    TypeIII,
}

/// The reduced form `a^i b^k a^l b^j` of a combinatorial element.
///
/// Ordered lexicographically by `(i, k, l, j)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ReducedWord {
    i: u32,
    k: u32,
    l: u32,
    j: u32,
}

impl ReducedWord {
    /// `Some` when the quadruple has one of the three abridged shapes.
    pub fn new(i: u32, k: u32, l: u32, j: u32) -> Option<ReducedWord> {
        let rw = ReducedWord { i, k, l, j };
        if i > 1 || j > 1 {
            return None;
        }
        let ok = (l == 0 && j == 0 && k > i)
            || (i == 0 && k == 0 && l >= 1 && l >= j)
            || (k > i && l > j);
        ok.then_some(rw)
    }

    pub fn i(&self) -> u32 {
        self.i
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn l(&self) -> u32 {
        self.l
    }

    pub fn j(&self) -> u32 {
        self.j
    }

    pub fn parts(&self) -> (u32, u32, u32, u32) {
        (self.i, self.k, self.l, self.j)
    }

    pub fn shape(&self) -> Shape {
        if self.l == 0 {
            Shape::TypeI
        } else if self.k == 0 {
            Shape::TypeII
        } else {
            Shape::TypeIII
        }
    }

    /// Whether the family bounds admit this form: `k <= m` when `i = 1`
    /// and `l <= n` when `j = 1`.
    pub fn fits(&self, family: &FamilySpec) -> bool {
        match *family {
            FamilySpec::Combinatorial {
                right_bound,
                left_bound,
            } => {
                !(self.i == 1 && left_bound.exceeded_by(self.k))
                    && !(self.j == 1 && right_bound.exceeded_by(self.l))
            }
            FamilySpec::GroupCase { .. } => false,
        }
    }

    pub fn word(&self) -> Word {
        Word::from_exponents(&[
            (Letter::A, self.i),
            (Letter::B, self.k),
            (Letter::A, self.l),
            (Letter::B, self.j),
        ])
        .expect("reduced forms are nonempty")
    }

    /// The mirror image `(j, l, k, i)`; `ab` is its own mirror.
    pub fn mirrored(&self) -> ReducedWord {
        if (self.i, self.k, self.l, self.j) == (0, 0, 1, 1) {
            return *self;
        }
        ReducedWord::new(self.j, self.l, self.k, self.i).expect("mirror of a reduced form")
    }

    fn factors(&self) -> Stack {
        let mut s = Stack::default();
        match self.shape() {
            Shape::TypeI => s.push_raw(Factor::I {
                i: self.i,
                k: self.k,
            }),
            Shape::TypeII => s.push_raw(Factor::II {
                l: self.l,
                j: self.j,
            }),
            Shape::TypeIII => {
                s.push_raw(Factor::I {
                    i: self.i,
                    k: self.k,
                });
                s.push_raw(Factor::II {
                    l: self.l,
                    j: self.j,
                });
            }
        }
        s
    }
}

impl fmt::Display for ReducedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.word())
    }
}

/// A type I (`a^i b^k`) or type II (`a^l b^j`) abridged factor.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Factor {
    I { i: u32, k: u32 },
    II { l: u32, j: u32 },
}

const AB: Factor = Factor::II { l: 1, j: 1 };

/// Abridged form of the one-syllable word `a^x b^y`.
fn abridge(x: u32, y: u32) -> Factor {
    debug_assert!(x + y >= 1);
    if x == y {
        AB
    } else if x == 0 {
        Factor::I { i: 0, k: y }
    } else if y == 0 {
        Factor::II { l: x, j: 0 }
    } else if y > x {
        Factor::I { i: 1, k: y - x + 1 }
    } else {
        Factor::II { l: x - y + 1, j: 1 }
    }
}

fn merge(left: Factor, right: Factor) -> Option<Factor> {
    match (left, right) {
        (Factor::I { i, k }, Factor::I { i: i2, k: k2 }) => Some(Factor::I { i, k: k + k2 - i2 }),
        (Factor::II { l, j }, Factor::II { l: l2, j: j2 }) => Some(Factor::II {
            l: l + l2 - j,
            j: j2,
        }),
        (Factor::II { l, j }, Factor::I { i, k }) => Some(if i == j {
            abridge(l, k)
        } else {
            abridge(l + 1 - j, k + 1 - i)
        }),
        (left @ Factor::I { .. }, AB) => Some(left),
        (Factor::I { .. }, Factor::II { .. }) => None,
    }
}

#[derive(Debug, Clone, Copy)]
struct Bounds {
    right: Bound,
    left: Bound,
}

impl Bounds {
    fn clamp(self, factor: Factor) -> Factor {
        match factor {
            Factor::I { i: 1, k } if self.left.exceeded_by(k) => Factor::I { i: 0, k: k - 1 },
            Factor::II { l, j: 1 } if self.right.exceeded_by(l) => Factor::II { l: l - 1, j: 0 },
            other => other,
        }
    }
}

/// At most three factors are ever live: two settled plus one incoming.
#[derive(Debug, Clone, Copy, Default)]
struct Stack {
    items: [Option<Factor>; 3],
    len: usize,
}

impl Stack {
    fn push_raw(&mut self, f: Factor) {
        self.items[self.len] = Some(f);
        self.len += 1;
    }

    fn top(&self, back: usize) -> Factor {
        self.items[self.len - 1 - back].expect("live stack slot")
    }

    fn push(&mut self, f: Factor, bounds: Bounds) {
        self.push_raw(bounds.clamp(f));
        while self.len >= 2 {
            let Some(merged) = merge(self.top(1), self.top(0)) else {
                break;
            };
            self.len -= 2;
            self.push_raw(bounds.clamp(merged));
        }
    }

    fn finish(&self) -> ReducedWord {
        match self.len {
            1 => match self.top(0) {
                Factor::I { i, k } => ReducedWord { i, k, l: 0, j: 0 },
                Factor::II { l, j } => ReducedWord { i: 0, k: 0, l, j },
            },
            2 => match (self.top(1), self.top(0)) {
                (Factor::I { i, k }, Factor::II { l, j }) => ReducedWord { i, k, l, j },
                other => unreachable!("unmerged factor pair {other:?}"),
            },
            n => unreachable!("factor stack of length {n}"),
        }
    }
}

/// A group-case element `(g, row, col)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GroupElement {
    g: i64,
    row: Option<Letter>,
    col: Option<Letter>,
}

impl GroupElement {
    /// Validates coordinate presence against the family and reduces `g`.
    pub fn new(
        family: &FamilySpec,
        g: i64,
        row: Option<Letter>,
        col: Option<Letter>,
    ) -> Option<GroupElement> {
        let FamilySpec::GroupCase { order, .. } = *family else {
            return None;
        };
        if row.is_some() != family.tracks_row() || col.is_some() != family.tracks_col() {
            return None;
        }
        Some(GroupElement {
            g: residue(g, order),
            row,
            col,
        })
    }

    pub fn g(&self) -> i64 {
        self.g
    }

    pub fn row(&self) -> Option<Letter> {
        self.row
    }

    pub fn col(&self) -> Option<Letter> {
        self.col
    }

    /// Canonical representative word.
    pub fn word(&self) -> Word {
        use Letter::{A, B};
        let g = self.g;
        let fill =
            |present: Option<Letter>, other: Option<Letter>, zero_default: Letter| -> Letter {
                present.unwrap_or(if g > 0 {
                    A
                } else if g < 0 {
                    B
                } else {
                    other.map(Letter::swap).unwrap_or(zero_default)
                })
            };
        let row = fill(self.row, self.col, A);
        let col = fill(self.col, self.row, B);
        let t = g.unsigned_abs() as u32;
        let runs: &[(Letter, u32)] = match (row, col, g.signum()) {
            (A, A, 1) => &[(A, t)],
            (A, A, 0) => &[(A, 1), (B, 2), (A, 1)],
            (A, A, _) => &[(A, 1), (B, t + 2), (A, 1)],
            (A, B, 1) => &[(A, t + 1), (B, 1)],
            (A, B, 0) => &[(A, 1), (B, 1)],
            (A, B, _) => &[(A, 1), (B, t + 1)],
            (B, A, 1) => &[(B, 1), (A, t + 1)],
            (B, A, 0) => &[(B, 1), (A, 1)],
            (B, A, _) => &[(B, t + 1), (A, 1)],
            (B, B, 1) => &[(B, 1), (A, t + 2), (B, 1)],
            (B, B, 0) => &[(B, 1), (A, 2), (B, 1)],
            (B, B, _) => &[(B, t)],
        };
        Word::from_exponents(runs).expect("group representatives are nonempty")
    }
}

fn residue(g: i64, order: Bound) -> i64 {
    match order.get() {
        Some(d) => g.rem_euclid(d as i64),
        None => g,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Value {
    Reduced(ReducedWord),
    Group(GroupElement),
}

/// An element of a particular family, held in canonical form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Element {
    family: FamilySpec,
    value: Value,
}

impl Element {
    /// Wraps a reduced word, checking it is canonical in `family`.
    pub fn from_reduced(family: FamilySpec, rw: ReducedWord) -> Option<Element> {
        rw.fits(&family).then_some(Element {
            family,
            value: Value::Reduced(rw),
        })
    }

    pub fn from_group(family: FamilySpec, ge: GroupElement) -> Option<Element> {
        GroupElement::new(&family, ge.g, ge.row, ge.col).map(|ge| Element {
            family,
            value: Value::Group(ge),
        })
    }

    pub fn family(&self) -> FamilySpec {
        self.family
    }

    pub fn value(&self) -> &Value {
        &self.value
    }

    pub fn reduced(&self) -> Option<ReducedWord> {
        match self.value {
            Value::Reduced(rw) => Some(rw),
            Value::Group(_) => None,
        }
    }

    pub fn group(&self) -> Option<GroupElement> {
        match self.value {
            Value::Group(ge) => Some(ge),
            Value::Reduced(_) => None,
        }
    }

    /// The canonical word of this element.
    pub fn word(&self) -> Word {
        match self.value {
            Value::Reduced(rw) => rw.word(),
            Value::Group(ge) => ge.word(),
        }
    }

    pub fn mul(&self, other: &Element) -> Result<Element, Error> {
        multiply(self, other)
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.word())
    }
}

fn bounds_of(family: &FamilySpec) -> Bounds {
    match *family {
        FamilySpec::Combinatorial {
            right_bound,
            left_bound,
        } => Bounds {
            right: right_bound,
            left: left_bound,
        },
        FamilySpec::GroupCase { .. } => unreachable!("group cases have no reduced words"),
    }
}

/// Canonical form of `w` in family `f`.
pub fn reduce(w: &Word, f: FamilySpec) -> Element {
    match f {
        FamilySpec::Combinatorial { .. } => {
            let bounds = bounds_of(&f);
            let mut stack = Stack::default();
            for s in syllables(w) {
                stack.push(abridge(s.k, s.l), bounds);
            }
            Element {
                family: f,
                value: Value::Reduced(stack.finish()),
            }
        }
        FamilySpec::GroupCase { order, .. } => {
            let balance = w.count(Letter::A) as i64 - w.count(Letter::B) as i64;
            Element {
                family: f,
                value: Value::Group(GroupElement {
                    g: residue(balance, order),
                    row: f.tracks_row().then(|| w.first()),
                    col: f.tracks_col().then(|| w.last()),
                }),
            }
        }
    }
}

/// Product of two elements of the same family.
pub fn multiply(x: &Element, y: &Element) -> Result<Element, Error> {
    if x.family != y.family {
        return Err(Error::FamilyMismatch);
    }
    let value = match (x.value, y.value) {
        (Value::Reduced(p), Value::Reduced(q)) => {
            let bounds = bounds_of(&x.family);
            let mut stack = p.factors();
            let rhs = q.factors();
            for slot in &rhs.items[..rhs.len] {
                stack.push(slot.expect("live stack slot"), bounds);
            }
            Value::Reduced(stack.finish())
        }
        (Value::Group(p), Value::Group(q)) => {
            let FamilySpec::GroupCase { order, .. } = x.family else {
                unreachable!()
            };
            Value::Group(GroupElement {
                g: residue(p.g + q.g, order),
                row: p.row,
                col: q.col,
            })
        }
        _ => unreachable!("value tag always matches the family"),
    };
    Ok(Element {
        family: x.family,
        value,
    })
}

pub fn equal(x: &Element, y: &Element) -> Result<bool, Error> {
    if x.family != y.family {
        return Err(Error::FamilyMismatch);
    }
    Ok(x.value == y.value)
}

/// The element spelled by the mirrored canonical word; always an inverse.
pub fn canonical_inverse(x: &Element) -> Element {
    reduce(&mirror(&x.word()), x.family)
}

/// The image of `x` under the anti-isomorphism onto the dual family that
/// sends `a` to `b` and reverses words.
pub fn dual_element(x: &Element) -> Element {
    let family = crate::family::dual_of(&x.family);
    let value = match x.value {
        Value::Reduced(rw) => Value::Reduced(rw.mirrored()),
        Value::Group(ge) => {
            let FamilySpec::GroupCase { order, .. } = family else {
                unreachable!()
            };
            Value::Group(GroupElement {
                g: residue(-ge.g, order),
                row: ge.col.map(Letter::swap),
                col: ge.row.map(Letter::swap),
            })
        }
    };
    Element { family, value }
}

/// `x^p` for `p >= 1`.
pub fn power(x: &Element, p: u64) -> Result<Element, Error> {
    if p == 0 {
        return Err(Error::InvalidParameter("power exponent must be >= 1"));
    }
    let mut result: Option<Element> = None;
    let mut base = *x;
    let mut e = p;
    loop {
        if e & 1 == 1 {
            result = Some(match result {
                None => base,
                Some(r) => multiply(&r, &base)?,
            });
        }
        e >>= 1;
        if e == 0 {
            break;
        }
        base = multiply(&base, &base)?;
    }
    Ok(result.expect("p >= 1"))
}

pub fn is_idempotent(x: &Element) -> bool {
    multiply(x, x).map(|sq| sq == *x).unwrap_or(false)
}

/// Whether `x` lies in some subgroup. Combinatorial families have only
/// trivial subgroups, so there this is idempotency.
pub fn is_group_element(x: &Element) -> bool {
    match x.value {
        Value::Group(_) => true,
        Value::Reduced(_) => is_idempotent(x),
    }
}

/// Order of an element as detected by probing its powers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Order {
    /// The cyclic subsemigroup has exactly this many elements.
    Finite(u64),
    /// No repeat among the first `probe_limit + 1` powers.
    InfiniteUpTo(u32),
}

pub fn order_of(x: &Element, probe_limit: u32) -> Order {
    let probe_limit = probe_limit.max(1);
    let mut seen = BTreeSet::new();
    let mut current = *x;
    for k in 1..=(probe_limit as u64 + 1) {
        if !seen.insert(current) {
            return Order::Finite(k - 1);
        }
        current = multiply(&current, x).expect("same family");
    }
    Order::InfiniteUpTo(probe_limit)
}

/// Canonical spelling with caret exponents.
pub fn format_element(x: &Element) -> String {
    x.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::parse_word;

    fn fin(n: u32) -> Bound {
        Bound::finite(n).unwrap()
    }

    fn free() -> FamilySpec {
        FamilySpec::free()
    }

    fn r(s: &str, f: FamilySpec) -> Element {
        reduce(&parse_word(s).unwrap(), f)
    }

    fn quad(x: &Element) -> (u32, u32, u32, u32) {
        x.reduced().unwrap().parts()
    }

    #[test]
    fn reduce_examples() {
        assert_eq!(quad(&r("aabb", free())), (0, 0, 1, 1));
        assert_eq!(quad(&r("a^3b^5", free())), (1, 3, 0, 0));
        assert_eq!(quad(&r("a^5b^2", free())), (0, 0, 4, 1));
        assert_eq!(
            quad(&r(
                "a^4b",
                FamilySpec::combinatorial(fin(3), Bound::Infinite)
            )),
            (0, 0, 3, 0)
        );
        for n in [Bound::Infinite, fin(1), fin(5)] {
            assert_eq!(
                quad(&r("ab^3", FamilySpec::combinatorial(n, fin(2)))),
                (0, 2, 0, 0)
            );
        }
        assert_eq!(quad(&r("baab", free())), (0, 1, 2, 1));
    }

    #[test]
    fn reduce_group_examples() {
        let g2 = FamilySpec::group_case(2, Bound::Infinite).unwrap();
        let x = r("ab", g2).group().unwrap();
        assert_eq!((x.g(), x.row(), x.col()), (0, None, Some(Letter::B)));

        let g1 = FamilySpec::group_case(1, Bound::Infinite).unwrap();
        let x = r("a^3b", g1).group().unwrap();
        assert_eq!(
            (x.g(), x.row(), x.col()),
            (2, Some(Letter::A), Some(Letter::B))
        );

        let g4 = FamilySpec::group_case(4, fin(5)).unwrap();
        assert_eq!(r("a^5", g4).group().unwrap().g(), 0);
    }

    #[test]
    fn multiply_examples() {
        let f = free();
        assert_eq!(multiply(&r("ab^2", f), &r("ab", f)).unwrap(), r("ab^2", f));
        // a^2b · ab^3 is the word a^2b^3, whose abridged form is ab^2.
        let p = multiply(&r("a^2b", f), &r("ab^3", f)).unwrap();
        assert_eq!(p, r("a^2b^3", f));
        assert_eq!(p.to_string(), "ab^2");
        assert_eq!(multiply(&r("ba^2", f), &r("ab", f)).unwrap(), r("ba^3b", f));

        let g1 = FamilySpec::group_case(1, Bound::Infinite).unwrap();
        let x = Element::from_group(
            g1,
            GroupElement {
                g: 1,
                row: Some(Letter::A),
                col: Some(Letter::A),
            },
        )
        .unwrap();
        let y = Element::from_group(
            g1,
            GroupElement {
                g: -1,
                row: Some(Letter::B),
                col: Some(Letter::B),
            },
        )
        .unwrap();
        assert_eq!(multiply(&x, &y).unwrap(), r("ab", g1));
        assert_eq!(multiply(&x, &r("a", f)), Err(Error::FamilyMismatch));
    }

    #[test]
    fn equality_examples() {
        let f = free();
        assert!(equal(&r("aabb", f), &r("ab", f)).unwrap());
        assert!(!equal(&r("ab", f), &r("ba", f)).unwrap());
        let x = r("ab^2a", f);
        assert!(equal(&x, &x).unwrap());
    }

    #[test]
    fn inverse_examples() {
        let f = free();
        assert_eq!(canonical_inverse(&r("a", f)), r("b", f));
        assert_eq!(canonical_inverse(&r("ab", f)), r("ab", f));
        let x = r("ab^2", f);
        let inv = canonical_inverse(&x);
        assert_eq!(inv, r("a^2b", f));
        let xyx = multiply(&multiply(&x, &inv).unwrap(), &x).unwrap();
        assert_eq!(xyx, x);
    }

    #[test]
    fn power_examples() {
        let f = free();
        assert_eq!(power(&r("ba^2", f), 3).unwrap(), r("ba^4", f));
        assert_eq!(power(&r("b^2a", f), 3).unwrap(), r("b^4a", f));
        assert_eq!(power(&r("ab", f), 5).unwrap(), r("ab", f));
        assert_eq!(power(&r("a", f), 1).unwrap(), r("a", f));
        assert!(power(&r("a", f), 0).is_err());
    }

    #[test]
    fn idempotent_examples() {
        let f = free();
        assert!(is_idempotent(&r("ab", f)));
        assert!(is_idempotent(&r("ab^2a^2b", f)));
        assert!(!is_idempotent(&r("a", f)));
        assert!(!is_group_element(&r("a", f)));
        assert!(is_group_element(&r("ab", f)));
        let g1 = FamilySpec::group_case(1, Bound::Infinite).unwrap();
        assert!(is_group_element(&r("a", g1)));
    }

    #[test]
    fn order_examples() {
        let f = free();
        assert_eq!(order_of(&r("a", f), 20), Order::InfiniteUpTo(20));
        assert_eq!(order_of(&r("ab", f), 20), Order::Finite(1));
        let g4 = FamilySpec::group_case(4, fin(5)).unwrap();
        assert_eq!(order_of(&r("a", g4), 20), Order::Finite(5));
        let g1 = FamilySpec::group_case(1, fin(6)).unwrap();
        assert_eq!(order_of(&r("a^2", g1), 20), Order::Finite(3));
    }

    #[test]
    fn format_examples() {
        let f = free();
        let x = Element::from_reduced(f, ReducedWord::new(0, 1, 2, 1).unwrap()).unwrap();
        assert_eq!(format_element(&x), "ba^2b");
        let ab = Element::from_reduced(f, ReducedWord::new(0, 0, 1, 1).unwrap()).unwrap();
        assert_eq!(format_element(&ab), "ab");

        let g1 = FamilySpec::group_case(1, Bound::Infinite).unwrap();
        let inv_a = Element::from_group(
            g1,
            GroupElement {
                g: -1,
                row: Some(Letter::A),
                col: Some(Letter::A),
            },
        )
        .unwrap();
        assert_eq!(format_element(&inv_a), "ab^3a");
        let x = Element::from_group(
            g1,
            GroupElement {
                g: 2,
                row: Some(Letter::A),
                col: Some(Letter::B),
            },
        )
        .unwrap();
        assert_eq!(format_element(&x), "a^3b");
    }

    #[test]
    fn group_representatives_follow_listed_h_classes() {
        // Case 2 lists H_a = {.., b^3a, b^2a, ba, a, a^2, ..} and
        // H_b = {.., a^3b, a^2b, ab, b, b^2, ..}.
        let g2 = FamilySpec::group_case(2, Bound::Infinite).unwrap();
        let spell = |g, col| {
            Element::from_group(
                g2,
                GroupElement {
                    g,
                    row: None,
                    col: Some(col),
                },
            )
            .unwrap()
            .to_string()
        };
        assert_eq!(spell(-2, Letter::A), "b^3a");
        assert_eq!(spell(0, Letter::A), "ba");
        assert_eq!(spell(2, Letter::A), "a^2");
        assert_eq!(spell(2, Letter::B), "a^3b");
        assert_eq!(spell(0, Letter::B), "ab");
        assert_eq!(spell(-2, Letter::B), "b^2");

        let g4 = FamilySpec::group_case(4, Bound::Infinite).unwrap();
        let spell4 = |g| {
            Element::from_group(
                g4,
                GroupElement {
                    g,
                    row: None,
                    col: None,
                },
            )
            .unwrap()
            .to_string()
        };
        assert_eq!(
            (spell4(3).as_str(), spell4(0).as_str(), spell4(-2).as_str()),
            ("a^3", "ab", "b^2")
        );

        let g1 = FamilySpec::group_case(1, fin(4)).unwrap();
        let e_a = Element::from_group(
            g1,
            GroupElement {
                g: 4,
                row: Some(Letter::A),
                col: Some(Letter::A),
            },
        )
        .unwrap();
        assert_eq!(e_a.to_string(), "ab^2a");
    }

    #[test]
    fn reduced_word_shapes() {
        assert!(ReducedWord::new(1, 1, 0, 0).is_none());
        assert!(ReducedWord::new(0, 0, 1, 1).is_some());
        assert!(ReducedWord::new(0, 0, 0, 0).is_none());
        assert!(ReducedWord::new(1, 2, 1, 1).is_none());
        assert_eq!(
            ReducedWord::new(1, 3, 2, 0).unwrap().mirrored(),
            ReducedWord::new(0, 2, 3, 1).unwrap()
        );
        let o32 = FamilySpec::combinatorial(fin(3), fin(2));
        assert!(!ReducedWord::new(1, 3, 0, 0).unwrap().fits(&o32));
        assert!(ReducedWord::new(0, 3, 0, 0).unwrap().fits(&o32));
        assert!(!ReducedWord::new(0, 0, 4, 1).unwrap().fits(&o32));
    }
}
