//! Words in a free group on at most [`MAX_GENERATORS`] generators.

use std::fmt;
use std::ops::Mul;

use crate::error::ParseError;

/// Hard cap on the number of generators of a presentation.
pub const MAX_GENERATORS: usize = 64;

/// Index of a generator inside its presentation (`0..n`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Generator(pub usize);

/// A generator or its inverse.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter {
    pub generator: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn new(generator: usize, inverse: bool) -> Self {
        Letter { generator, inverse }
    }

    pub fn pos(generator: usize) -> Self {
        Letter::new(generator, false)
    }

    pub fn neg(generator: usize) -> Self {
        Letter::new(generator, true)
    }

    pub fn inv(self) -> Self {
        Letter::new(self.generator, !self.inverse)
    }

    pub fn sign(self) -> i64 {
        if self.inverse {
            -1
        } else {
            1
        }
    }

    /// Column of this letter in a table with two columns per generator.
    pub fn column(self) -> usize {
        2 * self.generator + self.inverse as usize
    }
}

/// A freely reduced word. The empty word is the identity.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    pub fn identity() -> Self {
        Word { letters: Vec::new() }
    }

    pub fn letter(l: Letter) -> Self {
        Word { letters: vec![l] }
    }

    /// Builds a word from arbitrary letters, freely reducing them.
    pub fn from_letters<I: IntoIterator<Item = Letter>>(letters: I) -> Self {
        let mut out: Vec<Letter> = Vec::new();
        for l in letters {
            push_reduced(&mut out, l);
        }
        Word { letters: out }
    }

    /// Convenience constructor from `(generator, exponent)` pairs, exponent sign
    /// selects the letter and its magnitude the run length.
    pub fn from_powers(powers: &[(usize, i64)]) -> Self {
        Word::from_letters(powers.iter().flat_map(|&(g, e)| {
            std::iter::repeat_n(Letter::new(g, e < 0), e.unsigned_abs() as usize)
        }))
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn multiply(&self, other: &Word) -> Word {
        let mut out = self.letters.clone();
        for &l in &other.letters {
            push_reduced(&mut out, l);
        }
        Word { letters: out }
    }

    pub fn inverse(&self) -> Word {
        Word { letters: self.letters.iter().rev().map(|l| l.inv()).collect() }
    }

    /// Signed exponent sum per generator, `n` entries.
    pub fn exponent_sums(&self, n: usize) -> ExponentVector {
        let mut entries = vec![0i64; n];
        for l in &self.letters {
            entries[l.generator] += l.sign();
        }
        ExponentVector(entries)
    }

    /// Deletes every occurrence of `g` and `g^-1`, then reduces.
    pub fn delete_generator(&self, g: usize) -> Word {
        Word::from_letters(self.letters.iter().copied().filter(|l| l.generator != g))
    }

    /// Applies `f` to generator indices; used when generators are dropped.
    pub fn map_generators(&self, f: impl Fn(usize) -> usize) -> Word {
        Word::from_letters(self.letters.iter().map(|l| Letter::new(f(l.generator), l.inverse)))
    }

    /// Conjugates away matching first/last letters.
    pub fn cyclic_reduce(&self) -> Word {
        let mut lo = 0;
        let mut hi = self.letters.len();
        while hi - lo >= 2 && self.letters[lo] == self.letters[hi - 1].inv() {
            lo += 1;
            hi -= 1;
        }
        Word { letters: self.letters[lo..hi].to_vec() }
    }

    pub fn max_generator(&self) -> Option<usize> {
        self.letters.iter().map(|l| l.generator).max()
    }

    /// Word as a prefix iterator: yields `(prefix before i, letter i)`.
    pub fn prefixes(&self) -> impl Iterator<Item = (Word, Letter)> + '_ {
        (0..self.letters.len())
            .map(move |i| (Word { letters: self.letters[..i].to_vec() }, self.letters[i]))
    }

    /// Formats the word with generator names; inverses print in upper case.
    pub fn display<'a>(&'a self, names: &'a [String]) -> WordDisplay<'a> {
        WordDisplay { word: self, names }
    }
}

fn push_reduced(out: &mut Vec<Letter>, l: Letter) {
    if out.last() == Some(&l.inv()) {
        out.pop();
    } else {
        out.push(l);
    }
}

impl Mul for &Word {
    type Output = Word;
    fn mul(self, rhs: &Word) -> Word {
        self.multiply(rhs)
    }
}

impl Mul for Word {
    type Output = Word;
    fn mul(self, rhs: Word) -> Word {
        self.multiply(&rhs)
    }
}

pub struct WordDisplay<'a> {
    word: &'a Word,
    names: &'a [String],
}

impl fmt::Display for WordDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            return f.write_str("1");
        }
        for l in &self.word.letters {
            let name = &self.names[l.generator];
            if l.inverse {
                let mut chars = name.chars();
                if let Some(c) = chars.next() {
                    write!(f, "{}{}", c.to_ascii_uppercase(), chars.as_str())?;
                }
            } else {
                f.write_str(name)?;
            }
        }
        Ok(())
    }
}

/// Signed exponent sums of a word, one entry per generator.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExponentVector(pub Vec<i64>);

impl ExponentVector {
    pub fn zeros(n: usize) -> Self {
        ExponentVector(vec![0; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn dot(&self, weights: &[i64]) -> i64 {
        self.0.iter().zip(weights).map(|(a, b)| a * b).sum()
    }
}

impl std::ops::Add for &ExponentVector {
    type Output = ExponentVector;
    fn add(self, rhs: &ExponentVector) -> ExponentVector {
        ExponentVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

/// Checks that `name` is a lower-case letter optionally followed by digits.
pub fn valid_generator_name(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_lowercase()) && chars.all(|c| c.is_ascii_digit())
}

/// Parses a word over the generators `names`.
///
/// An atom is a generator name (`x`, `g12`), upper case for its inverse
/// (`X`, `G12`), optionally followed by `^n` with a signed integer exponent.
/// Whitespace between atoms is ignored and `1` denotes the identity.
pub fn parse_word(text: &str, names: &[String]) -> Result<Word, ParseError> {
    let bytes = text.as_bytes();
    let mut letters = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        // "1" is the identity
        if c == b'1' {
            i += 1;
            continue;
        }
        if !c.is_ascii_alphabetic() {
            return Err(ParseError::syntax(i, format!("expected a generator, found '{}'", c as char)));
        }
        let start = i;
        let inverse = c.is_ascii_uppercase();
        i += 1;
        while i < bytes.len() && bytes[i].is_ascii_digit() {
            i += 1;
        }
        let name = text[start..i].to_ascii_lowercase();
        let generator = names
            .iter()
            .position(|n| *n == name)
            .ok_or_else(|| ParseError::UnknownGenerator { position: start, name: name.clone() })?;
        let mut exponent: i64 = 1;
        let mut j = i;
        while j < bytes.len() && bytes[j].is_ascii_whitespace() {
            j += 1;
        }
        if j < bytes.len() && bytes[j] == b'^' {
            j += 1;
            while j < bytes.len() && bytes[j].is_ascii_whitespace() {
                j += 1;
            }
            let num_start = j;
            if j < bytes.len() && (bytes[j] == b'-' || bytes[j] == b'+') {
                j += 1;
            }
            let digits_start = j;
            while j < bytes.len() && bytes[j].is_ascii_digit() {
                j += 1;
            }
            if digits_start == j {
                return Err(ParseError::syntax(num_start, "expected an integer exponent after '^'"));
            }
            exponent = text[num_start..j]
                .parse()
                .map_err(|_| ParseError::syntax(num_start, "exponent out of range"))?;
            if exponent.unsigned_abs() > 1 << 20 {
                return Err(ParseError::syntax(num_start, "exponent out of range"));
            }
            i = j;
        }
        let letter = Letter::new(generator, inverse != (exponent < 0));
        letters.extend(std::iter::repeat_n(letter, exponent.unsigned_abs() as usize));
    }
    Ok(Word::from_letters(letters))
}
