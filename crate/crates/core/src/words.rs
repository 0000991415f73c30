//! Words in the free group on `x`, `y`: parsing, free and cyclic reduction,
//! and the double commutator family.
//!
//! A [`Word`] is always freely reduced: adjacent syllables have distinct
//! generators and nonzero exponents.

use std::fmt;
use std::ops::Mul;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Upper bound on the syllable count produced by powers of compound words.
pub const MAX_SYLLABLES: usize = 1 << 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Gen {
    X,
    Y,
}

impl Gen {
    pub fn other(self) -> Gen {
        match self {
            Gen::X => Gen::Y,
            Gen::Y => Gen::X,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Syllable {
    pub gen: Gen,
    pub exp: i64,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Word {
    syllables: Vec<Syllable>,
}

/// Conjugacy-class representative of a word.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum CyclicForm {
    Trivial,
    GeneratorPower(Gen, i64),
    /// `∏ x^a_i y^b_i` with every exponent nonzero.
    Reduced(Vec<(i64, i64)>),
}

impl CyclicForm {
    /// Number of `x^a y^b` pairs; zero for the non-`Reduced` variants.
    pub fn length(&self) -> usize {
        match self {
            CyclicForm::Reduced(p) => p.len(),
            _ => 0,
        }
    }

    pub fn to_word(&self) -> Word {
        match self {
            CyclicForm::Trivial => Word::identity(),
            CyclicForm::GeneratorPower(g, e) => Word::gen(*g, *e),
            CyclicForm::Reduced(p) => Word::from_pairs(p).expect("reduced pairs cannot overflow"),
        }
    }
}

impl Word {
    pub fn identity() -> Self {
        Word { syllables: Vec::new() }
    }

    pub fn gen(gen: Gen, exp: i64) -> Self {
        let mut w = Word::identity();
        w.push(Syllable { gen, exp }).expect("single syllable");
        w
    }

    pub fn x(exp: i64) -> Self {
        Self::gen(Gen::X, exp)
    }

    pub fn y(exp: i64) -> Self {
        Self::gen(Gen::Y, exp)
    }

    /// Free reduction of an arbitrary syllable sequence. `None` on exponent overflow.
    pub fn from_syllables<I: IntoIterator<Item = Syllable>>(iter: I) -> Option<Self> {
        let mut w = Word::identity();
        for s in iter {
            w.push(s)?;
        }
        Some(w)
    }

    /// `∏ x^a_i y^b_i`; zero exponents are allowed and elided.
    pub fn from_pairs(pairs: &[(i64, i64)]) -> Option<Self> {
        Self::from_syllables(pairs.iter().flat_map(|&(a, b)| {
            [Syllable { gen: Gen::X, exp: a }, Syllable { gen: Gen::Y, exp: b }]
        }))
    }

    fn push(&mut self, s: Syllable) -> Option<()> {
        if s.exp == 0 {
            return Some(());
        }
        match self.syllables.last_mut() {
            Some(last) if last.gen == s.gen => {
                let e = last.exp.checked_add(s.exp)?;
                if e == 0 {
                    self.syllables.pop();
                } else {
                    last.exp = e;
                }
            }
            _ => self.syllables.push(s),
        }
        Some(())
    }

    pub fn syllables(&self) -> &[Syllable] {
        &self.syllables
    }

    pub fn len(&self) -> usize {
        self.syllables.len()
    }

    pub fn is_empty(&self) -> bool {
        self.syllables.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.syllables.is_empty()
    }

    pub fn inverse(&self) -> Self {
        Word {
            syllables: self
                .syllables
                .iter()
                .rev()
                .map(|s| Syllable { gen: s.gen, exp: -s.exp })
                .collect(),
        }
    }

    pub fn checked_mul(&self, rhs: &Word) -> Option<Word> {
        let mut out = self.clone();
        for s in &rhs.syllables {
            out.push(*s)?;
        }
        Some(out)
    }

    /// `[u, v] = u⁻¹ v⁻¹ u v`.
    pub fn commutator(u: &Word, v: &Word) -> Option<Word> {
        u.inverse()
            .checked_mul(&v.inverse())?
            .checked_mul(u)?
            .checked_mul(v)
    }

    /// `self^n`, refusing results longer than [`MAX_SYLLABLES`].
    pub fn checked_pow(&self, n: i64) -> Result<Word> {
        let overflow = Error::ExponentOverflow { pos: 0 };
        if n == 0 || self.is_identity() {
            return Ok(Word::identity());
        }
        let base = if n < 0 { self.inverse() } else { self.clone() };
        let k = n.unsigned_abs();
        if let [s] = base.syllables.as_slice() {
            let e = s.exp.checked_mul(k as i64).ok_or(overflow)?;
            return Ok(Word::gen(s.gen, e));
        }
        // w = u c u⁻¹ with c cyclically reduced, so |w^k| = 2|u| + k|c| up to merging.
        let core = cyclic_core_len(&base);
        let projected = (core as u128) * (k as u128) + (base.len() - core) as u128;
        if projected > MAX_SYLLABLES as u128 {
            return Err(Error::WordTooLong {
                len: projected.min(usize::MAX as u128) as usize,
                limit: MAX_SYLLABLES,
            });
        }
        let mut acc = Word::identity();
        let mut sq = base;
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.checked_mul(&sq).ok_or(overflow.clone())?;
            }
            e >>= 1;
            if e > 0 {
                sq = sq.checked_mul(&sq).ok_or(overflow.clone())?;
            }
        }
        Ok(acc)
    }

    /// Exchanges `x` and `y`.
    pub fn swap_generators(&self) -> Word {
        Word {
            syllables: self
                .syllables
                .iter()
                .map(|s| Syllable { gen: s.gen.other(), exp: s.exp })
                .collect(),
        }
    }

    /// Groups into `(a_i, b_i)` pairs of `∏ x^a_i y^b_i`, padding with zero
    /// exponents at the ends when the word starts with `y` or ends with `x`.
    pub fn to_pairs(&self) -> Vec<(i64, i64)> {
        let mut pairs = Vec::new();
        let mut it = self.syllables.iter().peekable();
        while let Some(s) = it.next() {
            match s.gen {
                Gen::X => {
                    let b = match it.peek() {
                        Some(n) if n.gen == Gen::Y => it.next().unwrap().exp,
                        _ => 0,
                    };
                    pairs.push((s.exp, b));
                }
                Gen::Y => pairs.push((0, s.exp)),
            }
        }
        pairs
    }

    /// Expands to single letters `(gen, ±1)`.
    pub fn letters(&self) -> Vec<(Gen, i64)> {
        self.syllables
            .iter()
            .flat_map(|s| std::iter::repeat((s.gen, s.exp.signum())).take(s.exp.unsigned_abs() as usize))
            .collect()
    }
}

fn cyclic_core_len(w: &Word) -> usize {
    let s = &w.syllables;
    let (mut i, mut j) = (0usize, s.len());
    while j - i >= 2 && s[i].gen == s[j - 1].gen && s[i].exp == -s[j - 1].exp {
        i += 1;
        j -= 1;
    }
    j - i
}

impl Mul for &Word {
    type Output = Word;

    /// Panics on exponent overflow; see [`Word::checked_mul`].
    fn mul(self, rhs: &Word) -> Word {
        self.checked_mul(rhs).expect("exponent overflow in word product")
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.syllables.is_empty() {
            return f.write_str("1");
        }
        for (i, s) in self.syllables.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            let g = match s.gen {
                Gen::X => "x",
                Gen::Y => "y",
            };
            if s.exp == 1 {
                f.write_str(g)?;
            } else {
                write!(f, "{g}^{}", s.exp)?;
            }
        }
        Ok(())
    }
}

/// Conjugates `w` to a cyclically reduced word and picks a canonical rotation.
///
/// Matching first and last syllables are merged into the front until the
/// ends differ. A `Reduced` result is the lexicographically least rotation
/// of its pair list, so conjugate inputs give identical outputs.
///
/// Panics if merging the ends overflows `i64`.
pub fn cyclic_reduce(w: &Word) -> CyclicForm {
    let mut s: std::collections::VecDeque<Syllable> = w.syllables.iter().copied().collect();
    while s.len() >= 2 && s.front().unwrap().gen == s.back().unwrap().gen {
        let last = s.pop_back().unwrap();
        let first = s.front_mut().unwrap();
        first.exp = first.exp.checked_add(last.exp).expect("exponent overflow in cyclic reduction");
        if first.exp == 0 {
            s.pop_front();
        }
    }
    match s.len() {
        0 => CyclicForm::Trivial,
        1 => CyclicForm::GeneratorPower(s[0].gen, s[0].exp),
        _ => {
            if s[0].gen == Gen::Y {
                s.rotate_left(1);
            }
            let pairs: Vec<(i64, i64)> = s
                .iter()
                .collect::<Vec<_>>()
                .chunks(2)
                .map(|c| (c[0].exp, c[1].exp))
                .collect();
            let best = (0..pairs.len())
                .map(|r| {
                    let mut p = pairs.clone();
                    p.rotate_left(r);
                    p
                })
                .min()
                .unwrap();
            CyclicForm::Reduced(best)
        }
    }
}

/// `[[x^k, y^l], [x^m, y^n]]`, freely reduced. Panics on exponent overflow.
pub fn double_commutator(k: i64, l: i64, m: i64, n: i64) -> Word {
    let inner1 = Word::commutator(&Word::x(k), &Word::y(l)).expect("overflow");
    let inner2 = Word::commutator(&Word::x(m), &Word::y(n)).expect("overflow");
    Word::commutator(&inner1, &inner2).expect("exponent overflow in double commutator")
}

/// The cyclic conjugate
/// `x^m y^(n−l) x^-k y^l x^k y^-n x^-m y^n x^(m−k) y^-l x^k y^l x^-m y^-n`
/// of the double commutator, as seven `(a, b)` pairs. Exponents may vanish
/// when `k = m` or `l = n`.
pub fn double_commutator_pairs(k: i64, l: i64, m: i64, n: i64) -> [(i64, i64); 7] {
    [
        (m, n - l),
        (-k, l),
        (k, -n),
        (-m, n),
        (m - k, -l),
        (k, l),
        (-m, -n),
    ]
}

pub fn parse_word(text: &str) -> Result<Word> {
    let mut p = Parser { src: text.as_bytes(), pos: 0 };
    let w = p.word()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.error(format!("unexpected character {:?}", p.src[p.pos] as char)));
    }
    Ok(w)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, msg: impl Into<String>) -> Error {
        Error::Syntax { pos: self.pos, msg: msg.into() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(format!("expected {:?}", c as char)))
        }
    }

    fn word(&mut self) -> Result<Word> {
        let mut w = Word::identity();
        let mut any = false;
        while matches!(self.peek(), Some(b'x' | b'y' | b'(' | b'[')) {
            let start = self.pos;
            let f = self.factor()?;
            w = w.checked_mul(&f).ok_or(Error::ExponentOverflow { pos: start })?;
            any = true;
        }
        if !any {
            return Err(self.error("expected x, y, ( or ["));
        }
        Ok(w)
    }

    fn factor(&mut self) -> Result<Word> {
        let atom = match self.peek() {
            Some(b'x') => {
                self.pos += 1;
                Word::x(1)
            }
            Some(b'y') => {
                self.pos += 1;
                Word::y(1)
            }
            Some(b'(') => {
                self.pos += 1;
                let w = self.word()?;
                self.expect(b')')?;
                w
            }
            Some(b'[') => {
                self.pos += 1;
                let u = self.word()?;
                self.expect(b',')?;
                let v = self.word()?;
                self.expect(b']')?;
                let pos = self.pos;
                Word::commutator(&u, &v).ok_or(Error::ExponentOverflow { pos })?
            }
            _ => return Err(self.error("expected x, y, ( or [")),
        };
        if self.peek() != Some(b'^') {
            return Ok(atom);
        }
        self.pos += 1;
        let start = self.pos;
        let e = self.exponent()?;
        atom.checked_pow(e).map_err(|err| match err {
            Error::ExponentOverflow { .. } => Error::ExponentOverflow { pos: start },
            other => other,
        })
    }

    fn exponent(&mut self) -> Result<i64> {
        let start = self.pos;
        let neg = self.peek() == Some(b'-');
        if neg {
            self.pos += 1;
        }
        let digits_start = self.pos;
        let mut value: i64 = 0;
        while let Some(d) = self.src.get(self.pos).filter(|b| b.is_ascii_digit()) {
            value = value
                .checked_mul(10)
                .and_then(|v| v.checked_add((d - b'0') as i64))
                .ok_or(Error::ExponentOverflow { pos: start })?;
            self.pos += 1;
        }
        if self.pos == digits_start {
            return Err(self.error("expected digits after '^'"));
        }
        Ok(if neg { -value } else { value })
    }
}
