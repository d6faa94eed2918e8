//! Free-group words over quandle elements and their right action.
//!
//! A word `w = w_1 ... w_k` acts on `x` left to right: `x^w = (..(x^{w_1})..)^{w_k}`,
//! where a positive letter `e` applies `rho_e` and a negative one applies
//! `rho_e^-1`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{QuandleError, Result};
use crate::perm::Permutation;
use crate::quandle::FiniteQuandle;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }

    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Pos => 1,
            Sign::Neg => -1,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub element: usize,
    pub sign: Sign,
}

impl Letter {
    pub fn pos(element: usize) -> Self {
        Letter {
            element,
            sign: Sign::Pos,
        }
    }

    pub fn neg(element: usize) -> Self {
        Letter {
            element,
            sign: Sign::Neg,
        }
    }

    pub fn inverse(self) -> Self {
        Letter {
            element: self.element,
            sign: self.sign.flip(),
        }
    }
}

/// A freely reduced word. Every constructor reduces its input.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    letters: Vec<Letter>,
}

/// Free reduction by a single stack pass; the result has no adjacent `e e^-1`.
pub fn reduce_word(letters: &[Letter]) -> Vec<Letter> {
    let mut out: Vec<Letter> = Vec::with_capacity(letters.len());
    for &l in letters {
        if out.last() == Some(&l.inverse()) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    out
}

impl Word {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn new(letters: impl IntoIterator<Item = Letter>) -> Self {
        let letters: Vec<Letter> = letters.into_iter().collect();
        Word {
            letters: reduce_word(&letters),
        }
    }

    /// `e_1^{k_1} e_2^{k_2} ...`, expanding each power into `|k|` letters.
    pub fn from_powers(powers: impl IntoIterator<Item = (usize, i64)>) -> Self {
        let mut letters = Vec::new();
        for (e, k) in powers {
            let l = if k >= 0 {
                Letter::pos(e)
            } else {
                Letter::neg(e)
            };
            letters.extend(std::iter::repeat_n(l, k.unsigned_abs() as usize));
        }
        Word::new(letters)
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

    pub fn concat(&self, other: &Word) -> Word {
        Word::new(self.letters.iter().chain(&other.letters).copied())
    }

    pub fn inverse(&self) -> Word {
        Word {
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    /// Largest element index used, if any.
    pub fn max_element(&self) -> Option<usize> {
        self.letters.iter().map(|l| l.element).max()
    }

    /// Runs of equal letters as `(element, signed exponent)`.
    pub fn powers(&self) -> Vec<(usize, i64)> {
        let mut out: Vec<(usize, i64)> = Vec::new();
        for l in &self.letters {
            match out.last_mut() {
                Some((e, k)) if *e == l.element && k.signum() == l.sign.as_i64() => {
                    *k += l.sign.as_i64()
                }
                _ => out.push((l.element, l.sign.as_i64())),
            }
        }
        out
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (e, k)) in self.powers().into_iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            if k == 1 {
                write!(f, "{e}")?;
            } else {
                write!(f, "{e}^{k}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = QuandleError;

    /// Whitespace-separated tokens, each `<index>` or `<index>^<nonzero int>`.
    fn from_str(text: &str) -> Result<Word> {
        let mut powers = Vec::new();
        for token in text.split_whitespace() {
            let (elem, exp) = match token.split_once('^') {
                Some((e, k)) => (e, Some(k)),
                None => (token, None),
            };
            let element: usize = elem
                .parse()
                .map_err(|_| QuandleError::WordSyntax(format!("bad element index in `{token}`")))?;
            let k: i64 = match exp {
                None => 1,
                Some(k) => k
                    .parse()
                    .map_err(|_| QuandleError::WordSyntax(format!("bad exponent in `{token}`")))?,
            };
            if k == 0 {
                return Err(QuandleError::ZeroExponent(token.to_string()));
            }
            powers.push((element, k));
        }
        Ok(Word::from_powers(powers))
    }
}

pub fn parse_word(text: &str) -> Result<Word> {
    text.parse()
}

impl Serialize for Word {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Word {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?
            .parse()
            .map_err(serde::de::Error::custom)
    }
}

fn check_letters(q: &FiniteQuandle, w: &Word) -> Result<()> {
    match w.max_element() {
        Some(e) => q.check_index(e).map(|_| ()),
        None => Ok(()),
    }
}

pub(crate) fn evaluate_raw(q: &FiniteQuandle, x: usize, w: &Word) -> usize {
    w.letters.iter().fold(x, |y, l| match l.sign {
        Sign::Pos => q.op_raw(y, l.element),
        Sign::Neg => q.op_inv_raw(y, l.element),
    })
}

/// `x^w`.
pub fn evaluate(q: &FiniteQuandle, x: usize, w: &Word) -> Result<usize> {
    q.check_index(x)?;
    check_letters(q, w)?;
    Ok(evaluate_raw(q, x, w))
}

/// The permutation `x -> x^w` of the carrier.
pub fn word_permutation(q: &FiniteQuandle, w: &Word) -> Result<Permutation> {
    check_letters(q, w)?;
    Ok(Permutation::from_images_unchecked(
        (0..q.order()).map(|x| evaluate_raw(q, x, w)).collect(),
    ))
}

/// True iff `x^w1 = x^w2` for every element `x`.
pub fn operationally_equivalent(q: &FiniteQuandle, w1: &Word, w2: &Word) -> Result<bool> {
    check_letters(q, w1)?;
    check_letters(q, w2)?;
    Ok((0..q.order()).all(|x| evaluate_raw(q, x, w1) == evaluate_raw(q, x, w2)))
}
