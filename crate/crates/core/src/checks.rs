//! Property checks run against one family. Used by `orthox verify`.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::family::{dual_of, relations_of, FamilySpec};
use crate::normal_form::{
    canonical_inverse, dual_element, is_idempotent, multiply, reduce, Element,
};
use crate::quotient::y_image;
use crate::structure::{eggbox_coord, elements_window, idempotents_window};
use crate::words::{mirror, Letter, Word};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    /// First counterexample, or a summary of what was covered.
    pub detail: String,
}

fn check(name: &'static str, covered: usize, failure: Option<String>) -> Check {
    match failure {
        Some(detail) => Check {
            name,
            passed: false,
            detail,
        },
        None => Check {
            name,
            passed: true,
            detail: format!("{covered} cases"),
        },
    }
}

fn mul(x: &Element, y: &Element) -> Element {
    multiply(x, y).expect("same family")
}

fn relations_hold(f: FamilySpec) -> Check {
    let rels = relations_of(&f);
    let bad = rels.iter().find(|r| reduce(&r.lhs, f) != reduce(&r.rhs, f));
    check(
        "relations-hold",
        rels.len(),
        bad.map(|r| format!("{r} fails")),
    )
}

/// `a^n` and `b^n` are mutually inverse; products of idempotents are idempotent.
fn orthodoxy(f: FamilySpec) -> Check {
    let mut covered = 0;
    for n in 1..=12 {
        let an = reduce(&Word::from_exponents(&[(Letter::A, n)]).unwrap(), f);
        let bn = reduce(&Word::from_exponents(&[(Letter::B, n)]).unwrap(), f);
        covered += 1;
        if mul(&mul(&an, &bn), &an) != an || mul(&mul(&bn, &an), &bn) != bn {
            return check(
                "orthodoxy",
                covered,
                Some(format!("a^{n} and b^{n} are not mutually inverse")),
            );
        }
    }
    let es = idempotents_window(f, 4);
    for e in &es {
        for g in &es {
            covered += 1;
            if !is_idempotent(&mul(e, g)) {
                return check(
                    "orthodoxy",
                    covered,
                    Some(format!("{e} * {g} is not idempotent")),
                );
            }
        }
    }
    check("orthodoxy", covered, None)
}

/// Reducing a concatenation equals multiplying the reductions.
fn homomorphism(f: FamilySpec) -> Check {
    let words: Vec<Word> = Word::all_up_to(4).collect();
    let reduced: Vec<Element> = words.iter().map(|w| reduce(w, f)).collect();
    let mut covered = 0;
    for (u, x) in words.iter().zip(&reduced) {
        for (v, y) in words.iter().zip(&reduced) {
            covered += 1;
            if reduce(&u.concat(v), f) != mul(x, y) {
                return check(
                    "homomorphism",
                    covered,
                    Some(format!("reduce({u}{v}) != {x} * {y}")),
                );
            }
        }
    }
    check("homomorphism", covered, None)
}

fn associativity(f: FamilySpec) -> Check {
    let xs = elements_window(f, 2);
    let mut covered = 0;
    for x in &xs {
        for y in &xs {
            let xy = mul(x, y);
            for z in &xs {
                covered += 1;
                if mul(&xy, z) != mul(x, &mul(y, z)) {
                    return check(
                        "associativity",
                        covered,
                        Some(format!("({x}{y}){z} != {x}({y}{z})")),
                    );
                }
            }
        }
    }
    check("associativity", covered, None)
}

fn inverses(f: FamilySpec) -> Check {
    let xs = elements_window(f, 4);
    for x in &xs {
        let y = canonical_inverse(x);
        if mul(&mul(x, &y), x) != *x || mul(&mul(&y, x), &y) != y {
            return check(
                "inverses",
                xs.len(),
                Some(format!("{y} is not an inverse of {x}")),
            );
        }
    }
    check("inverses", xs.len(), None)
}

/// Mirroring words carries the family onto its dual.
fn duality(f: FamilySpec) -> Check {
    let dual = dual_of(&f);
    let mut covered = 0;
    for w in Word::all_up_to(8) {
        covered += 1;
        if dual_element(&reduce(&w, f)) != reduce(&mirror(&w), dual) {
            return check(
                "duality",
                covered,
                Some(format!("mirror of {w} reduces differently in {dual}")),
            );
        }
    }
    check("duality", covered, None)
}

fn y_homomorphism(f: FamilySpec) -> Check {
    let xs = elements_window(f, 3);
    let mut covered = 0;
    for x in &xs {
        for y in &xs {
            covered += 1;
            let lhs = y_image(&mul(x, y));
            let rhs = match (y_image(x), y_image(y)) {
                (crate::YImage::Bicyclic(p), crate::YImage::Bicyclic(q)) => {
                    crate::YImage::Bicyclic(mul(&p, &q))
                }
                (crate::YImage::Cyclic { g, order }, crate::YImage::Cyclic { g: h, .. }) => {
                    let sum = g + h;
                    crate::YImage::Cyclic {
                        g: order.get().map_or(sum, |d| sum.rem_euclid(d as i64)),
                        order,
                    }
                }
                _ => unreachable!("images of one family share a kind"),
            };
            if lhs != rhs {
                return check(
                    "y-homomorphism",
                    covered,
                    Some(format!("image of {x}*{y} is {lhs}, not {rhs}")),
                );
            }
        }
    }
    check("y-homomorphism", covered, None)
}

/// Combinatorial families: coordinates determine elements. Group cases:
/// the band of idempotents has the expected size.
fn h_classes(f: FamilySpec) -> Check {
    match f.case_number() {
        None => {
            let xs = elements_window(f, 6);
            let mut seen = alloc::collections::BTreeMap::new();
            for x in &xs {
                if let Some(y) = seen.insert(eggbox_coord(x).expect("combinatorial"), *x) {
                    return check(
                        "h-trivial",
                        xs.len(),
                        Some(format!("{x} and {y} share a cell")),
                    );
                }
            }
            check("h-trivial", xs.len(), None)
        }
        Some(case) => {
            let want = [4, 2, 2, 1][case as usize - 1];
            let got = idempotents_window(f, 3).len();
            let failure = (got != want).then(|| format!("{got} idempotents, expected {want}"));
            check("band-size", 1, failure)
        }
    }
}

/// Every check, in a fixed order.
pub fn run_checks(f: FamilySpec) -> Vec<Check> {
    alloc::vec![
        relations_hold(f),
        orthodoxy(f),
        homomorphism(f),
        associativity(f),
        inverses(f),
        duality(f),
        y_homomorphism(f),
        h_classes(f),
    ]
}
