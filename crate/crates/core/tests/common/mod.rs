// Shared helpers. Not every test binary uses all of them.
#![allow(dead_code)]

use orthox_core::{Bound, Element, FamilySpec, Letter, ReducedWord, Word};

pub fn fin(n: u32) -> Bound {
    Bound::finite(n).unwrap()
}

pub fn w(s: &str) -> Word {
    orthox_core::parse_word(s).unwrap()
}

pub fn r(s: &str, f: FamilySpec) -> Element {
    orthox_core::reduce(&w(s), f)
}

pub fn combinatorial_families() -> Vec<FamilySpec> {
    let mut out = Vec::new();
    for n in [fin(1), fin(2), fin(3), Bound::Infinite] {
        for m in [fin(1), fin(2), fin(4), Bound::Infinite] {
            out.push(FamilySpec::combinatorial(n, m));
        }
    }
    out
}

pub fn group_families() -> Vec<FamilySpec> {
    let mut out = Vec::new();
    for case in 1..=4 {
        for d in [Bound::Infinite, fin(1), fin(2), fin(3), fin(5)] {
            out.push(FamilySpec::group_case(case, d).unwrap());
        }
    }
    out
}

/// A second description of combinatorial elements, written without the
/// factor-merging machinery: the bicyclic image `b^p a^q` of a word plus
/// its first and last letter, normalized.
///
/// `p = 0` forces a leading `a` and `q = 0` a trailing `b`. In `O(n, m)`
/// the trailing letter is always `a` once `q >= n` and the leading letter
/// always `b` once `p >= m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Coords {
    pub p: u32,
    pub q: u32,
    pub first: Letter,
    pub last: Letter,
}

fn bounds(f: FamilySpec) -> (Bound, Bound) {
    match f {
        FamilySpec::Combinatorial {
            right_bound,
            left_bound,
        } => (right_bound, left_bound),
        _ => panic!("coordinate model covers combinatorial families only"),
    }
}

impl Coords {
    fn normalized(mut self, f: FamilySpec) -> Coords {
        let (n, m) = bounds(f);
        if self.p == 0 {
            self.first = Letter::A;
        }
        if self.q == 0 {
            self.last = Letter::B;
        }
        if m.reached_by(self.p) {
            self.first = Letter::B;
        }
        if n.reached_by(self.q) {
            self.last = Letter::A;
        }
        self
    }

    pub fn of_word(word: &Word, f: FamilySpec) -> Coords {
        let (mut p, mut q) = (0u32, 0u32);
        for &l in word.letters() {
            match l {
                Letter::A => q += 1,
                Letter::B if q > 0 => q -= 1,
                Letter::B => p += 1,
            }
        }
        Coords {
            p,
            q,
            first: word.first(),
            last: word.last(),
        }
        .normalized(f)
    }

    pub fn mul(self, other: Coords, f: FamilySpec) -> Coords {
        let c = self.q.min(other.p);
        Coords {
            p: self.p + other.p - c,
            q: self.q + other.q - c,
            first: self.first,
            last: other.last,
        }
        .normalized(f)
    }

    /// The reduced quadruple these coordinates name.
    pub fn quad(self) -> (u32, u32, u32, u32) {
        if (self.p, self.q) == (0, 0) {
            return (0, 0, 1, 1);
        }
        let i = (self.first == Letter::A && self.p > 0) as u32;
        let j = (self.last == Letter::B && self.q > 0) as u32;
        (i, self.p + i, self.q + j, j)
    }

    pub fn of_element(x: &Element) -> Coords {
        Coords::of_word(&x.word(), x.family())
    }
}

pub fn quad(x: &Element) -> (u32, u32, u32, u32) {
    x.reduced().unwrap().parts()
}

pub fn reduced(i: u32, k: u32, l: u32, j: u32) -> ReducedWord {
    ReducedWord::new(i, k, l, j).unwrap()
}

/// Group-case element described by balance and end letters of a word.
pub fn group_coords(word: &Word, f: FamilySpec) -> (i64, Letter, Letter) {
    let FamilySpec::GroupCase { order, .. } = f else {
        panic!("group family expected")
    };
    let g = word.count(Letter::A) as i64 - word.count(Letter::B) as i64;
    let g = order.get().map_or(g, |d| g.rem_euclid(d as i64));
    (g, word.first(), word.last())
}
