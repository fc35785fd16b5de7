//! Brute-force congruence closure over raw words.
//!
//! Nothing here calls the reducer except `verify_reducer`, which compares
//! the two. Words up to length `cap` are packed as `(len, bits)` with the
//! first letter in bit 0 and `b = 1`; the dense index of a word is
//! `2^len - 2 + bits`.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::family::{relations_of, FamilySpec, Relation};
use crate::normal_form::{reduce, Element};
use crate::words::{Letter, Word};
use crate::Error;

/// Largest supported cap; `2^(cap+1)` union-find slots are allocated.
pub const MAX_CAP: usize = 22;

/// One rewrite that joined two previously separate classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MergeStep {
    pub from: Word,
    pub to: Word,
    /// Index into the relation list the closure ran over.
    pub relation: usize,
    /// Offset of the rewritten factor in `from`.
    pub position: usize,
    /// True when the relation was applied right to left.
    pub reversed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosureTable {
    pub max_len: usize,
    pub cap: usize,
    /// Classes of words of length `<= max_len`, each sorted length-lex, and
    /// listed in length-lex order of their representatives.
    pub classes: Vec<Vec<Word>>,
    pub merged_via: Vec<MergeStep>,
    /// The partition at `cap + 1` differs from the one at `cap`, so this cap
    /// is known to be too small.
    pub cap_warning: bool,
}

impl ClosureTable {
    /// Length-lex minimal member of each class.
    pub fn representatives(&self) -> impl Iterator<Item = &Word> {
        self.classes.iter().map(|c| &c[0])
    }

    /// Index of the class holding `w`, if `w` is short enough.
    pub fn class_of(&self, w: &Word) -> Option<usize> {
        self.classes.iter().position(|c| c.contains(w))
    }
}

struct UnionFind {
    parent: Vec<u32>,
    size: Vec<u32>,
}

impl UnionFind {
    fn new(n: usize) -> UnionFind {
        UnionFind {
            parent: (0..n as u32).collect(),
            size: vec![1; n],
        }
    }

    fn find(&mut self, mut x: u32) -> u32 {
        let mut root = x;
        while self.parent[root as usize] != root {
            root = self.parent[root as usize];
        }
        while self.parent[x as usize] != root {
            let next = self.parent[x as usize];
            self.parent[x as usize] = root;
            x = next;
        }
        root
    }

    fn union(&mut self, a: u32, b: u32) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if self.size[ra as usize] < self.size[rb as usize] {
            core::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb as usize] = ra;
        self.size[ra as usize] += self.size[rb as usize];
        true
    }
}

#[derive(Clone, Copy)]
struct Packed {
    len: usize,
    bits: u64,
}

fn pack(w: &Word) -> Packed {
    let bits = w
        .letters()
        .iter()
        .enumerate()
        .fold(0u64, |acc, (t, &l)| acc | (((l == Letter::B) as u64) << t));
    Packed { len: w.len(), bits }
}

fn unpack(p: Packed) -> Word {
    let letters = (0..p.len)
        .map(|t| {
            if p.bits >> t & 1 == 1 {
                Letter::B
            } else {
                Letter::A
            }
        })
        .collect();
    Word::new(letters).expect("packed words are nonempty")
}

fn index(p: Packed) -> u32 {
    ((1u64 << p.len) - 2 + p.bits) as u32
}

fn mask(len: usize) -> u64 {
    (1u64 << len) - 1
}

struct Rule {
    from: Packed,
    to: Packed,
    relation: usize,
    reversed: bool,
}

/// Runs the closure and returns the union-find over all words up to `cap`.
fn close(rules: &[Rule], cap: usize, mut audit: Option<&mut Vec<MergeStep>>) -> UnionFind {
    let mut uf = UnionFind::new((1usize << (cap + 1)) - 2);
    for len in 1..=cap {
        for bits in 0..(1u64 << len) {
            let w = Packed { len, bits };
            for rule in rules {
                if rule.from.len > len || len - rule.from.len + rule.to.len > cap {
                    continue;
                }
                let new_len = len - rule.from.len + rule.to.len;
                for pos in 0..=len - rule.from.len {
                    if (bits >> pos) & mask(rule.from.len) != rule.from.bits {
                        continue;
                    }
                    let tail = bits >> (pos + rule.from.len);
                    let new_bits =
                        (bits & mask(pos)) | (rule.to.bits << pos) | (tail << (pos + rule.to.len));
                    let v = Packed {
                        len: new_len,
                        bits: new_bits,
                    };
                    if uf.union(index(w), index(v)) {
                        if let Some(log) = audit.as_deref_mut() {
                            log.push(MergeStep {
                                from: unpack(w),
                                to: unpack(v),
                                relation: rule.relation,
                                position: pos,
                                reversed: rule.reversed,
                            });
                        }
                    }
                }
            }
        }
    }
    uf
}

/// Root of every word up to `max_len`, in shortlex order of the words.
fn restricted(uf: &mut UnionFind, max_len: usize) -> Vec<u32> {
    (0..(1u32 << (max_len + 1)) - 2)
        .map(|id| uf.find(id))
        .collect()
}

/// Two root vectors describe the same partition.
fn same_partition(x: &[u32], y: &[u32]) -> bool {
    let mut fwd = BTreeMap::new();
    let mut back = BTreeMap::new();
    x.iter()
        .zip(y)
        .all(|(&a, &b)| *fwd.entry(a).or_insert(b) == b && *back.entry(b).or_insert(a) == a)
}

pub fn closure_classes(f: FamilySpec, max_len: usize, cap: usize) -> Result<ClosureTable, Error> {
    closure_of(&relations_of(&f), max_len, cap)
}

/// Closure under an arbitrary list of relations. `MergeStep::relation`
/// indexes into `relations`.
pub fn closure_of(
    relations: &[Relation],
    max_len: usize,
    cap: usize,
) -> Result<ClosureTable, Error> {
    if max_len == 0 || cap < max_len {
        return Err(Error::InvalidParameter("need 1 <= max_len <= cap"));
    }
    if cap >= MAX_CAP {
        return Err(Error::InvalidParameter(
            "cap too large for the closure oracle",
        ));
    }
    let mut rules = Vec::new();
    for (t, r) in relations.iter().enumerate() {
        let (l, rr) = (pack(&r.lhs), pack(&r.rhs));
        rules.push(Rule {
            from: l,
            to: rr,
            relation: t,
            reversed: false,
        });
        rules.push(Rule {
            from: rr,
            to: l,
            relation: t,
            reversed: true,
        });
    }

    let mut merged_via = Vec::new();
    let mut uf = close(&rules, cap, Some(&mut merged_via));
    let roots = restricted(&mut uf, max_len);
    let mut wider = close(&rules, cap + 1, None);
    let cap_warning = !same_partition(&roots, &restricted(&mut wider, max_len));

    // Packed ids enumerate each length in bit order, not lexicographic
    // order, so collect first and sort.
    let mut by_root: BTreeMap<u32, Vec<Word>> = BTreeMap::new();
    for len in 1..=max_len {
        for bits in 0..(1u64 << len) {
            let p = Packed { len, bits };
            by_root
                .entry(roots[index(p) as usize])
                .or_default()
                .push(unpack(p));
        }
    }
    let mut classes: Vec<Vec<Word>> = by_root
        .into_values()
        .map(|mut c| {
            c.sort_by(|x, y| (x.len(), x).cmp(&(y.len(), y)));
            c
        })
        .collect();
    classes.sort_by(|x, y| (x[0].len(), &x[0]).cmp(&(y[0].len(), &y[0])));

    Ok(ClosureTable {
        max_len,
        cap,
        classes,
        merged_via,
        cap_warning,
    })
}

/// Comparison of the reducer with the closure on all words up to `max_len`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    /// Number of words checked.
    pub words: usize,
    /// Words whose closure class coincides with their reducer class.
    pub agreements: usize,
    pub closure_classes: usize,
    pub reducer_classes: usize,
    /// Pairs the closure merged but the reducer keeps apart. Any entry is a
    /// reducer bug.
    pub reducer_splits_closure: Vec<(Word, Word)>,
    /// Pairs the reducer identifies but the closure did not merge at this cap.
    pub closure_splits_reducer: Vec<(Word, Word)>,
    pub cap_warning: bool,
}

impl VerifyReport {
    pub fn is_exact(&self) -> bool {
        self.reducer_splits_closure.is_empty() && self.closure_splits_reducer.is_empty()
    }
}

pub fn verify_reducer(f: FamilySpec, max_len: usize, cap: usize) -> Result<VerifyReport, Error> {
    let table = closure_classes(f, max_len, cap)?;
    let mut reducer_splits_closure = Vec::new();
    let mut by_element: BTreeMap<Element, Vec<usize>> = BTreeMap::new();
    let mut uniform = vec![true; table.classes.len()];
    let mut words = 0;

    for (c, class) in table.classes.iter().enumerate() {
        let rep = &class[0];
        let rep_elem = reduce(rep, f);
        for w in class {
            words += 1;
            let e = reduce(w, f);
            if e != rep_elem {
                uniform[c] = false;
                reducer_splits_closure.push((rep.clone(), w.clone()));
            }
            let owners = by_element.entry(e).or_default();
            if owners.last() != Some(&c) {
                owners.push(c);
            }
        }
    }

    let mut closure_splits_reducer = Vec::new();
    let mut agreements = 0;
    for owners in by_element.values() {
        let first = &table.classes[owners[0]][0];
        for &c in &owners[1..] {
            closure_splits_reducer.push((first.clone(), table.classes[c][0].clone()));
        }
        if owners.len() == 1 && uniform[owners[0]] {
            agreements += table.classes[owners[0]].len();
        }
    }

    Ok(VerifyReport {
        words,
        agreements,
        closure_classes: table.classes.len(),
        reducer_classes: by_element.len(),
        reducer_splits_closure,
        closure_splits_reducer,
        cap_warning: table.cap_warning,
    })
}
