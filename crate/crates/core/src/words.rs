//! Words over the alphabet `{a, b}`.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    A,
    B,
}

impl Letter {
    pub fn swap(self) -> Letter {
        match self {
            Letter::A => Letter::B,
            Letter::B => Letter::A,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Letter::A => 'a',
            Letter::B => 'b',
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

/// A nonempty word. Stored flat; `a^k` sugar exists only in text.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn new(letters: Vec<Letter>) -> Result<Word, Error> {
        if letters.is_empty() {
            return Err(Error::EmptyWord);
        }
        Ok(Word(letters))
    }

    /// `a^k` followed by `b^l`, or `None` when both are zero.
    pub fn from_exponents(runs: &[(Letter, u32)]) -> Option<Word> {
        let mut letters = Vec::new();
        for &(letter, count) in runs {
            letters.extend(core::iter::repeat_n(letter, count as usize));
        }
        Word::new(letters).ok()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// Always false; kept for the `len`/`is_empty` convention.
    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn first(&self) -> Letter {
        self.0[0]
    }

    pub fn last(&self) -> Letter {
        self.0[self.0.len() - 1]
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.0);
        letters.extend_from_slice(&other.0);
        Word(letters)
    }

    pub fn count(&self, letter: Letter) -> usize {
        self.0.iter().filter(|&&l| l == letter).count()
    }

    /// All words of length exactly `len`, in lexicographic order (`a < b`).
    pub fn all_of_length(len: usize) -> impl Iterator<Item = Word> {
        assert!((1..64).contains(&len));
        (0u64..(1u64 << len)).map(move |bits| {
            Word(
                (0..len)
                    .map(|t| {
                        if bits >> (len - 1 - t) & 1 == 1 {
                            Letter::B
                        } else {
                            Letter::A
                        }
                    })
                    .collect(),
            )
        })
    }

    /// All words of length `1..=max_len`, shortest first.
    pub fn all_up_to(max_len: usize) -> impl Iterator<Item = Word> {
        (1..=max_len).flat_map(Word::all_of_length)
    }

    /// Flat spelling, one character per letter.
    pub fn to_plain(&self) -> String {
        self.0.iter().map(|l| l.as_char()).collect()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut rest = &self.0[..];
        while let Some(&letter) = rest.first() {
            let run = rest.iter().take_while(|&&l| l == letter).count();
            if run == 1 {
                write!(f, "{letter}")?;
            } else {
                write!(f, "{letter}^{run}")?;
            }
            rest = &rest[run..];
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Word, Error> {
        parse_word(s)
    }
}

/// Parses `a`/`b` letters with optional `^k` exponents (`k >= 1`).
pub fn parse_word(text: &str) -> Result<Word, Error> {
    let text = text.trim();
    if text.is_empty() {
        return Err(Error::EmptyWord);
    }
    let mut letters = Vec::new();
    let mut chars = text.chars().peekable();
    while let Some(c) = chars.next() {
        let letter = match c {
            'a' => Letter::A,
            'b' => Letter::B,
            '^' | '0'..='9' => return Err(Error::BadExponent),
            other => return Err(Error::BadSymbol(other)),
        };
        let mut count: usize = 1;
        if chars.peek() == Some(&'^') {
            chars.next();
            let mut digits = 0usize;
            let mut value: usize = 0;
            while let Some(d) = chars.peek().and_then(|c| c.to_digit(10)) {
                chars.next();
                digits += 1;
                value = value
                    .checked_mul(10)
                    .and_then(|v| v.checked_add(d as usize))
                    .filter(|&v| v <= u32::MAX as usize)
                    .ok_or(Error::BadExponent)?;
            }
            if digits == 0 || value == 0 {
                return Err(Error::BadExponent);
            }
            count = value;
        }
        letters.extend(core::iter::repeat_n(letter, count));
    }
    Ok(Word(letters))
}

/// Exponent pair of one syllable `a^k b^l`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Syllable {
    pub k: u32,
    pub l: u32,
}

/// Splits a word into maximal runs `a^k b^l`. Only the first syllable may
/// have `k = 0` and only the last may have `l = 0`.
pub fn syllables(w: &Word) -> Vec<Syllable> {
    let mut out = Vec::new();
    let mut rest = w.letters();
    while !rest.is_empty() {
        let k = rest.iter().take_while(|&&l| l == Letter::A).count();
        let l = rest[k..].iter().take_while(|&&l| l == Letter::B).count();
        out.push(Syllable {
            k: k as u32,
            l: l as u32,
        });
        rest = &rest[k + l..];
    }
    out
}

/// Reverses the word and swaps `a <-> b`.
pub fn mirror(w: &Word) -> Word {
    Word(w.0.iter().rev().map(|l| l.swap()).collect())
}
