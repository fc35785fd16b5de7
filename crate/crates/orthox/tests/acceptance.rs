//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

use std::collections::BTreeSet;
use std::panic::{self, AssertUnwindSafe};
use std::path::PathBuf;
use std::time::Instant;

use orthox::{eggbox_grid, EggboxWindow};
use orthox_core::{
    canonical_inverse, classify_relation, closure_classes, closure_of, eggbox_coord, element_at,
    elements_window, idempotents_window, infer_family, is_idempotent, local_chain, multiply,
    natural_leq, order_of, parse_word, piece_of, reduce, related, relations_of, verify_reducer,
    y_image, Bound, EggboxCoord, Element, FamilySpec, Green, Letter, Order, Piece, Relation,
    RelationClass, Word, YImage,
};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn fin(n: u32) -> Bound {
    Bound::finite(n).unwrap()
}

fn comb(n: Bound, m: Bound) -> FamilySpec {
    FamilySpec::combinatorial(n, m)
}

fn group(case: u8, order: Bound) -> FamilySpec {
    FamilySpec::group_case(case, order).unwrap()
}

fn w(s: &str) -> Word {
    parse_word(s).unwrap()
}

fn r(s: &str, f: FamilySpec) -> Element {
    reduce(&w(s), f)
}

fn mul(x: &Element, y: &Element) -> Element {
    multiply(x, y).unwrap()
}

fn pow_word(s: &str, k: usize) -> Word {
    w(&s.repeat(k))
}

fn five_families() -> [FamilySpec; 5] {
    [
        FamilySpec::free(),
        comb(fin(3), Bound::Infinite),
        comb(Bound::Infinite, fin(2)),
        comb(fin(3), fin(2)),
        FamilySpec::bicyclic(),
    ]
}

fn golden(name: &str) -> Vec<Vec<String>> {
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "golden", name]
        .iter()
        .collect();
    std::fs::read_to_string(path)
        .unwrap()
        .lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| l.split_whitespace().map(String::from).collect())
        .collect()
}

fn verify_exact(f: FamilySpec, max_len: usize, cap: usize, words: usize) -> String {
    let t = Instant::now();
    let rep = verify_reducer(f, max_len, cap).unwrap();
    assert_eq!(rep.words, words, "{f}");
    assert!(
        rep.is_exact(),
        "{f}: {:?} {:?}",
        rep.reducer_splits_closure,
        rep.closure_splits_reducer
    );
    assert!(!rep.cap_warning, "{f}: cap {cap} flagged");
    format!(
        "{f} {}/{} in {:.1?}",
        rep.agreements,
        rep.words,
        t.elapsed()
    )
}

fn c1() -> String {
    let mut notes = Vec::new();
    for f in five_families() {
        notes.push(verify_exact(f, 7, 11, 254));
        verify_exact(f, 8, 12, 510);
    }
    format!("{}; also exact at max_len 8", notes.join(", "))
}

fn check_grid(f: FamilySpec, window: EggboxWindow, file: &str) {
    let want = golden(file);
    let got = eggbox_grid(f, &window, 0).unwrap();
    assert_eq!(got, want, "{f} vs {file}");
    for cell in want.iter().flatten() {
        assert_eq!(
            r(cell, f).to_string(),
            *cell,
            "{cell} is not reduced in {f}"
        );
    }
    let distinct: BTreeSet<&String> = want.iter().flatten().collect();
    assert_eq!(distinct.len(), want.len() * want[0].len());
}

fn c2() -> String {
    check_grid(
        FamilySpec::free(),
        EggboxWindow::new(3, 3, 3, 3),
        "eggbox_free.txt",
    );
    "7x7 grid matches the transcription".into()
}

fn c3() -> String {
    let f2 = comb(fin(4), Bound::Infinite);
    check_grid(f2, EggboxWindow::new(3, 3, 3, 3), "eggbox_4_inf.txt");
    assert!(eggbox_grid(f2, &EggboxWindow::new(3, 3, 4, 3), 0).is_err());
    let f3 = comb(fin(4), fin(3));
    check_grid(f3, EggboxWindow::new(2, 2, 3, 2), "eggbox_4_3.txt");
    assert!(eggbox_grid(f3, &EggboxWindow::new(3, 2, 3, 2), 0).is_err());
    assert!(eggbox_grid(f3, &EggboxWindow::new(2, 2, 4, 2), 0).is_err());
    // The cells past the bounds collapse onto cells already drawn.
    assert_eq!(r("a^5b", f2), r("a^4", f2));
    assert_eq!(r("ab^4", f3), r("b^3", f3));
    "O(4,inf) and O(4,3) grids match, oversized windows rejected".into()
}

fn c4() -> String {
    let fams = [
        FamilySpec::free(),
        comb(fin(3), Bound::Infinite),
        comb(Bound::Infinite, fin(2)),
        comb(fin(3), fin(2)),
        comb(fin(1), fin(1)),
        group(1, Bound::Infinite),
        group(2, fin(5)),
        group(3, fin(2)),
    ];
    let mut pairs = 0;
    for f in fams {
        for n in 1..=12 {
            let an = reduce(&pow_word("a", n), f);
            let bn = reduce(&pow_word("b", n), f);
            assert_eq!(mul(&mul(&an, &bn), &an), an, "{f} a^{n}");
            assert_eq!(mul(&mul(&bn, &an), &bn), bn, "{f} b^{n}");
        }
        let es = idempotents_window(f, 4);
        for e in &es {
            for g in &es {
                assert!(is_idempotent(&mul(e, g)), "{f}: {e}*{g}");
                pairs += 1;
            }
        }
    }
    format!("8 families, a^n/b^n inverse for n<=12, {pairs} idempotent products")
}

/// The bicyclic monoid on pairs, written out directly.
fn bicyclic_pair(x: (u32, u32), y: (u32, u32)) -> (u32, u32) {
    let t = x.1.min(y.0);
    (x.0 + y.0 - t, x.1 + y.1 - t)
}

fn c5() -> String {
    let mut fams: Vec<FamilySpec> = five_families().to_vec();
    fams.extend([
        group(1, Bound::Infinite),
        group(2, fin(5)),
        group(3, fin(2)),
        group(4, fin(3)),
    ]);
    for f in &fams {
        for k in 1..=12 {
            let lhs = reduce(&pow_word("baa", k), *f);
            let rhs = reduce(&w(&format!("ba^{}", k + 1)), *f);
            assert_eq!(lhs, rhs, "{f}: (ba^2)^{k}");
            let lhs = reduce(&pow_word("bba", k), *f);
            let rhs = reduce(&w(&format!("b^{}a", k + 1)), *f);
            assert_eq!(lhs, rhs, "{f}: (b^2a)^{k}");
        }
    }
    let f = FamilySpec::free();
    let at = |p: u32, q: u32| r(&format!("b^{}a^{}", p + 1, q + 1), f);
    let back = |x: &Element| {
        let (i, k, l, j) = x.reduced().unwrap().parts();
        assert!(i == 0 && j == 0 && k >= 1 && l >= 1, "{x} left the piece");
        (k - 1, l - 1)
    };
    let mut checked = 0;
    for p in 0..=6 {
        for q in 0..=6 {
            assert_eq!(back(&at(p, q)), (p, q));
            for s in 0..=6 {
                for t in 0..=6 {
                    let prod = mul(&at(p, q), &at(s, t));
                    assert_eq!(
                        back(&prod),
                        bicyclic_pair((p, q), (s, t)),
                        "b^{}a^{} * b^{}a^{}",
                        p + 1,
                        q + 1,
                        s + 1,
                        t + 1
                    );
                    checked += 1;
                }
            }
        }
    }
    format!(
        "powers hold in {} families, {checked} products match the bicyclic monoid",
        fams.len()
    )
}

/// Members of a piece reachable as short products of its generators.
fn generated(piece: Piece, f: FamilySpec) -> Vec<Element> {
    let gens = |x: &str, y: &str| (r(x, f), r(y, f));
    let (x, y) = match piece {
        Piece::CyclicA => return (1..=12).map(|n| reduce(&pow_word("a", n), f)).collect(),
        Piece::CyclicB => return (1..=12).map(|n| reduce(&pow_word("b", n), f)).collect(),
        Piece::BicyclicCenter => gens("a^2b", "ab^2"),
        Piece::BicyclicLowerRight => gens("ba^2", "b^2a"),
        Piece::BicyclicUpperRight => gens("ab^2a^2", "ab^3a"),
        Piece::BicyclicLowerLeft => gens("ba^3b", "b^2a^2b"),
    };
    let one = mul(&x, &y);
    assert!(is_idempotent(&one));
    assert_eq!(mul(&one, &x), x);
    assert_eq!(mul(&y, &one), y);
    let mut out = Vec::new();
    let mut ym = one;
    for _ in 0..=12 {
        let mut e = ym;
        for _ in 0..=12 {
            out.push(e);
            e = mul(&e, &x);
        }
        ym = mul(&y, &ym);
    }
    out
}

fn partition_at(bound: u32) -> usize {
    let f = FamilySpec::free();
    let window = elements_window(f, bound);
    let sets: Vec<(Piece, BTreeSet<Element>)> = Piece::ALL
        .iter()
        .map(|&p| (p, generated(p, f).into_iter().collect()))
        .collect();
    for x in &window {
        let owners: Vec<Piece> = sets
            .iter()
            .filter(|(_, s)| s.contains(x))
            .map(|(p, _)| *p)
            .collect();
        assert_eq!(owners, [piece_of(x).unwrap()], "{x}");
    }
    let in_window: BTreeSet<&Element> = window.iter().collect();
    for p in Piece::ALL {
        let members: Vec<&Element> = window
            .iter()
            .filter(|x| piece_of(x).unwrap() == p)
            .collect();
        assert!(!members.is_empty());
        for x in &members {
            for y in &members {
                let z = mul(x, y);
                if in_window.contains(&z) {
                    assert_eq!(piece_of(&z).unwrap(), p, "{x}*{y}");
                }
            }
        }
    }
    window.len()
}

fn c6() -> String {
    let n8 = partition_at(8);
    assert_eq!(n8, 256);
    let n9 = partition_at(9);
    assert!(n9 >= 300, "{n9}");
    format!("six pieces partition {n8} elements at bound 8 and {n9} at bound 9")
}

fn c7() -> String {
    let mut runs = 0;
    for case in 1..=4u8 {
        for order in [Bound::Infinite, fin(1), fin(2), fin(3), fin(5)] {
            let f = group(case, order);
            verify_exact(f, 6, 14, 126);
            let es = idempotents_window(f, 6);
            let want = [4, 2, 2, 1][case as usize - 1];
            assert_eq!(es.len(), want, "{f}");
            let a = r("a", f);
            let g_of = |x: &Element| match y_image(x) {
                YImage::Cyclic { g, .. } => g,
                other => panic!("{f}: {other}"),
            };
            match order.get() {
                Some(d) => {
                    assert_eq!(order_of(&a, 64), Order::Finite(d as u64), "{f}");
                    let imgs: BTreeSet<i64> = (1..=d as usize)
                        .map(|k| g_of(&reduce(&pow_word("a", k), f)))
                        .collect();
                    assert_eq!(imgs.len(), d as usize, "{f}");
                    assert_eq!(g_of(&reduce(&pow_word("a", d as usize + 1), f)), g_of(&a));
                }
                None => {
                    let imgs: BTreeSet<i64> = (1..=20)
                        .map(|k| g_of(&reduce(&pow_word("a", k), f)))
                        .collect();
                    assert_eq!(imgs.len(), 20, "{f}");
                }
            }
            let window = elements_window(f, 3);
            for x in &window {
                for y in &window {
                    let sum = g_of(x) + g_of(y);
                    let want = match order.get() {
                        Some(d) => sum.rem_euclid(d as i64),
                        None => sum,
                    };
                    assert_eq!(g_of(&mul(x, y)), want, "{f}: {x}*{y}");
                }
            }
            runs += 1;
        }
    }
    format!("{runs} group families exact at max_len 6, cap 14, band sizes 4/2/2/1")
}

fn canonical_relations(class: RelationClass) -> Vec<Relation> {
    let right = |n: u32| Relation::new(w(&format!("a^{}b", n + 1)), w(&format!("a^{n}")));
    let left = |m: u32| Relation::new(w(&format!("ab^{}", m + 1)), w(&format!("b^{m}")));
    let mut out = relations_of(&FamilySpec::free());
    match class {
        RelationClass::RightBound(n) => out.push(right(n)),
        RelationClass::LeftBound(m) => out.push(left(m)),
        RelationClass::Both(n, m) => out.extend([right(n), left(m)]),
        other => panic!("not a bound: {other}"),
    }
    out
}

fn random_word(rng: &mut StdRng) -> Word {
    let len = rng.gen_range(1..=8);
    let letters = (0..len)
        .map(|_| {
            if rng.gen_bool(0.5) {
                Letter::B
            } else {
                Letter::A
            }
        })
        .collect();
    Word::new(letters).unwrap()
}

fn c8() -> String {
    let worked = [
        ("ab^3", "b^2", RelationClass::LeftBound(2)),
        ("a^4b", "a^3", RelationClass::RightBound(3)),
        ("ab^2a^3", "ab^2a^4b", RelationClass::RightBound(3)),
        ("b^2a^3", "ab^3a^3", RelationClass::LeftBound(2)),
        ("b^2a^3", "ab^3a^4b", RelationClass::Both(3, 2)),
        ("ba", "b^2a^2", RelationClass::Impossible),
        ("aabb", "ab", RelationClass::Redundant),
    ];
    for (u, v, want) in worked {
        assert_eq!(classify_relation(&w(u), &w(v)), want, "{u} = {v}");
    }
    let bounds = [fin(1), fin(2), fin(3), fin(4), Bound::Infinite];
    for n in bounds {
        for m in bounds {
            let f = comb(n, m);
            assert_eq!(infer_family(&relations_of(&f)).unwrap(), f);
        }
    }

    let all: Vec<Word> = Word::all_up_to(8).collect();
    let mut rng = StdRng::seed_from_u64(0x0b5e);
    let mut kinds = BTreeSet::new();
    let mut done = 0;
    while done < 20 {
        let u = random_word(&mut rng);
        let candidates: Vec<(&Word, RelationClass)> = all
            .iter()
            .map(|v| (v, classify_relation(&u, v)))
            .filter(|(_, c)| match done % 3 {
                0 => matches!(c, RelationClass::RightBound(_)),
                1 => matches!(c, RelationClass::LeftBound(_)),
                _ => matches!(c, RelationClass::Both(..)),
            })
            .collect();
        if candidates.is_empty() {
            continue;
        }
        let (v, class) = candidates[rng.gen_range(0..candidates.len())];
        let mut with_rel = relations_of(&FamilySpec::free());
        with_rel.push(Relation::new(u.clone(), v.clone()));
        let target = infer_family(&canonical_relations(class)).unwrap();
        assert_eq!(
            reduce(&u, target),
            reduce(v, target),
            "{u} = {v} in {target}"
        );
        let lhs = closure_of(&with_rel, 6, 14).unwrap();
        let rhs = closure_of(&canonical_relations(class), 6, 14).unwrap();
        assert!(!lhs.cap_warning && !rhs.cap_warning, "{u} = {v}");
        assert_eq!(lhs.classes, rhs.classes, "{u} = {v} classified {class}");
        assert_eq!(rhs.classes, closure_classes(target, 6, 14).unwrap().classes);
        kinds.insert(class.to_string().split('(').next().unwrap().to_string());
        done += 1;
    }
    format!(
        "worked cases, 25 round trips, 20 random relations ({} kinds) match their canonical form",
        kinds.len()
    )
}

fn right_related(x: &Element, y: &Element) -> bool {
    let (xi, yi) = (canonical_inverse(x), canonical_inverse(y));
    mul(&mul(x, &xi), y) == *y && mul(&mul(y, &yi), x) == *x
}

fn left_related(x: &Element, y: &Element) -> bool {
    let (xi, yi) = (canonical_inverse(x), canonical_inverse(y));
    mul(y, &mul(&xi, x)) == *y && mul(x, &mul(&yi, y)) == *x
}

fn c9() -> String {
    let mut pairs = 0usize;
    let mut witnesses = 0usize;
    for f in five_families() {
        let window = elements_window(f, 8);
        let coords: Vec<EggboxCoord> = window.iter().map(|x| eggbox_coord(x).unwrap()).collect();
        for (s, x) in window.iter().enumerate() {
            for (t, y) in window.iter().enumerate() {
                let (rr, ll) = (right_related(x, y), left_related(x, y));
                assert_eq!(rr, related(x, y, Green::R).unwrap(), "{f}: {x} R {y}");
                assert_eq!(ll, related(x, y, Green::L).unwrap(), "{f}: {x} L {y}");
                assert_eq!(rr, coords[s].row == coords[t].row);
                assert_eq!(ll, coords[s].col == coords[t].col);
                if rr && ll {
                    assert_eq!(x, y, "{f}: H-class with two members");
                }
                pairs += 1;
            }
        }
        let small = elements_window(f, 6);
        for x in &small {
            for y in &small {
                let z = element_at(
                    f,
                    EggboxCoord {
                        row: eggbox_coord(x).unwrap().row,
                        col: eggbox_coord(y).unwrap().col,
                    },
                )
                .unwrap();
                assert!(
                    right_related(x, &z) && left_related(&z, y),
                    "{f}: {x} D {y}"
                );
                witnesses += 1;
            }
        }
    }
    format!("{pairs} pairs H-trivial, {witnesses} pairs joined through R then L")
}

fn c10() -> String {
    let mut chains = Vec::new();
    for f in [FamilySpec::free(), comb(fin(3), fin(2))] {
        for e in idempotents_window(f, 4) {
            let chain = local_chain(&e, 8).unwrap();
            assert_eq!(chain[0], e);
            for (s, x) in chain.iter().enumerate() {
                for (t, y) in chain.iter().enumerate() {
                    assert_eq!(natural_leq(x, y).unwrap(), s >= t, "{f}: {x} <= {y}");
                    assert_eq!(mul(x, y), chain[s.max(t)], "{f}: {x}*{y}");
                }
            }
            chains.push(chain);
        }
    }
    let shortest = chains.iter().map(Vec::len).min().unwrap();
    assert!(shortest >= 2);
    // Position-by-position maps between any two chains preserve order and
    // products, since every chain has the table s*t = max(s,t).
    for c in &chains {
        let other = &chains[0];
        for s in 0..shortest {
            for t in 0..shortest {
                assert_eq!(
                    natural_leq(&c[s], &c[t]).unwrap(),
                    natural_leq(&other[s], &other[t]).unwrap()
                );
            }
        }
    }
    format!(
        "{} chains totally ordered, common prefix {shortest}",
        chains.len()
    )
}

type Criterion = fn() -> String;

fn main() {
    let criteria: [(&str, Criterion); 10] = [
        ("reducer agrees with the closure oracle", c1),
        ("eggbox of O(inf,inf)", c2),
        ("eggboxes with bounds", c3),
        ("orthodoxy", c4),
        ("bicyclic piece and power identities", c5),
        ("piece partition of O(inf,inf)", c6),
        ("group cases", c7),
        ("relation classification", c8),
        ("combinatorial and bisimple", c9),
        ("local chains", c10),
    ];
    let mut failed = 0;
    for (n, (name, run)) in criteria.iter().enumerate() {
        let t = Instant::now();
        match panic::catch_unwind(AssertUnwindSafe(run)) {
            Ok(detail) => println!(
                "criterion {:>2} PASS  {name}: {detail} [{:.1?}]",
                n + 1,
                t.elapsed()
            ),
            Err(_) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}", n + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
