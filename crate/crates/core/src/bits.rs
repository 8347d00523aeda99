//! Binary words and the string/value dictionary.
//!
//! A [`BitString`] is a finite binary word stored most-significant digit
//! first. Words may carry leading zeros; the canonical form produced by
//! [`BitString::from_value`] has none, except the single-digit word `"0"`
//! for zero. Value arithmetic is fixed-width `u64` with overflow detection,
//! so callers should stay below `2^63`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A finite binary word, most-significant digit first.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitString {
    digits: Vec<u8>,
}

impl BitString {
    /// Canonical binary representation of `n` (no leading zero, `0 -> "0"`).
    pub fn from_value(n: u64) -> Self {
        if n == 0 {
            return Self { digits: vec![0] };
        }
        let width = 64 - n.leading_zeros() as usize;
        let digits = (0..width).rev().map(|i| ((n >> i) & 1) as u8).collect();
        Self { digits }
    }

    /// Like [`from_value`](Self::from_value) but left-padded with zeros to
    /// at least `width` digits.
    pub fn from_value_padded(n: u64, width: usize) -> Self {
        let mut w = Self::from_value(n);
        if w.len() < width {
            let mut digits = vec![0u8; width - w.len()];
            digits.append(&mut w.digits);
            w.digits = digits;
        }
        w
    }

    /// The word `1^len`.
    pub fn ones(len: usize) -> Self {
        Self { digits: vec![1; len] }
    }

    /// The word `0^len`.
    pub fn zeros(len: usize) -> Self {
        Self { digits: vec![0; len] }
    }

    /// Builds a word from raw digits, each of which must be 0 or 1.
    pub fn from_digits(digits: Vec<u8>) -> Result<Self> {
        if let Some(&d) = digits.iter().find(|&&d| d > 1) {
            return Err(Error::InvalidDigit((b'0' + d) as char));
        }
        Ok(Self { digits })
    }

    /// Numerical value of the word; leading zeros are neutral.
    pub fn to_value(&self) -> Result<u64> {
        if self.digits.is_empty() {
            return Err(Error::EmptyBitString);
        }
        let mut acc: u64 = 0;
        for &d in &self.digits {
            acc = acc
                .checked_mul(2)
                .and_then(|v| v.checked_add(u64::from(d)))
                .ok_or(Error::Overflow("to_value"))?;
        }
        Ok(acc)
    }

    /// Digits of `self` followed by digits of `other`.
    ///
    /// Value law: `concat(x, y).to_value() = x.to_value() * 2^{|y|} + y.to_value()`.
    pub fn concat(&self, other: &Self) -> Self {
        let mut digits = Vec::with_capacity(self.len() + other.len());
        digits.extend_from_slice(&self.digits);
        digits.extend_from_slice(&other.digits);
        Self { digits }
    }

    /// Number of positions at which the factor `1^m` starts, occurrences
    /// counted with overlap. Zero when the word is shorter than `m`.
    pub fn count_overlapping_ones_block(&self, m: usize) -> usize {
        assert!(m >= 1, "block length must be at least 1");
        if self.len() < m {
            return 0;
        }
        self.digits
            .windows(m)
            .filter(|w| w.iter().all(|&d| d == 1))
            .count()
    }

    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.digits.is_empty()
    }

    pub fn digits(&self) -> &[u8] {
        &self.digits
    }

    /// Number of trailing 1 digits.
    pub fn trailing_ones(&self) -> usize {
        self.digits.iter().rev().take_while(|&&d| d == 1).count()
    }
}

impl fmt::Display for BitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &d in &self.digits {
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitString(\"{self}\")")
    }
}

impl FromStr for BitString {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .map(|c| match c {
                '0' => Ok(0),
                '1' => Ok(1),
                other => Err(Error::InvalidDigit(other)),
            })
            .collect::<Result<Vec<u8>>>()
            .map(|digits| Self { digits })
    }
}

/// True iff the binary expansion of `n`, implicitly left-padded with zeros,
/// ends in `0 1^e 1^i` with `e` even (`e >= 0`).
///
/// Equivalently: `n` has at least `i` trailing ones and the excess over `i`
/// is even. The implicit padding means a word consisting only of ones still
/// matches.
pub fn has_vile_suffix(n: u64, i: u32) -> bool {
    let t = BitString::from_value(n).trailing_ones();
    let i = i as usize;
    t >= i && (t - i).is_multiple_of(2)
}

/// The dictionary identities relating shift-and-add arithmetic to
/// concatenation. Each case returns the arithmetic value together with the
/// concatenated word; the two sides satisfy `word.to_value() == value`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DictCase {
    /// `2^i n + 2^i - 1  =  n_2 . 1^i`
    Ii,
    /// `2^{m+i+1} n + 2^{m+i+1} - 2^m - 1  =  n_2 . 1^i . 0 . 1^m`  (n, m >= 1)
    Iii,
    /// `2^{i+1} n + 2^i - 1  =  n_2 . 0 . 1^i`
    Iv,
    /// `2^{m+i+1} n + 2^{m+i} - 2^m - 1  =  n_2 . 0 . 1^{i-1} . 0 . 1^m` for
    /// `i >= 1`, and `(n-1)_2 . 1^{m+1}` for `i = 0`  (n, m >= 1)
    V,
}

fn pow2(e: u32, context: &'static str) -> Result<u64> {
    1u64.checked_shl(e)
        .filter(|_| e < 64)
        .ok_or(Error::Overflow(context))
}

/// Evaluates one dictionary case at `(n, m, i)`, returning `(value, word)`.
///
/// `m` is ignored by cases [`DictCase::Ii`] and [`DictCase::Iv`].
/// Out-of-range parameters (for example case `V` with `i = 0`, `n = 0`)
/// yield [`Error::DictionaryCaseUndefined`].
pub fn dict_form(case: DictCase, n: u64, m: u32, i: u32) -> Result<(u64, BitString)> {
    let ones = |k: u32| BitString::ones(k as usize);
    let zero = BitString::zeros(1);
    match case {
        DictCase::Ii => {
            let p = pow2(i, "dict_form ii")?;
            let value = p
                .checked_mul(n)
                .and_then(|v| v.checked_add(p - 1))
                .ok_or(Error::Overflow("dict_form ii"))?;
            let word = BitString::from_value(n).concat(&ones(i));
            Ok((value, word))
        }
        DictCase::Iii => {
            if n < 1 || m < 1 {
                return Err(Error::DictionaryCaseUndefined);
            }
            let p = pow2(m + i + 1, "dict_form iii")?;
            let pm = pow2(m, "dict_form iii")?;
            let value = p
                .checked_mul(n)
                .and_then(|v| v.checked_add(p - pm - 1))
                .ok_or(Error::Overflow("dict_form iii"))?;
            let word = BitString::from_value(n)
                .concat(&ones(i))
                .concat(&zero)
                .concat(&ones(m));
            Ok((value, word))
        }
        DictCase::Iv => {
            let p = pow2(i + 1, "dict_form iv")?;
            let pi = pow2(i, "dict_form iv")?;
            let value = p
                .checked_mul(n)
                .and_then(|v| v.checked_add(pi - 1))
                .ok_or(Error::Overflow("dict_form iv"))?;
            let word = BitString::from_value(n).concat(&zero).concat(&ones(i));
            Ok((value, word))
        }
        DictCase::V => {
            if n < 1 || m < 1 {
                return Err(Error::DictionaryCaseUndefined);
            }
            let p = pow2(m + i + 1, "dict_form v")?;
            let pmi = pow2(m + i, "dict_form v")?;
            let pm = pow2(m, "dict_form v")?;
            // At i = 0 the constant term 2^{m+i} - 2^m - 1 is -1.
            let base = p.checked_mul(n).ok_or(Error::Overflow("dict_form v"))?;
            let value = if i >= 1 {
                base.checked_add(pmi - pm - 1)
            } else {
                base.checked_sub(1)
            }
            .ok_or(Error::Overflow("dict_form v"))?;
            let word = if i >= 1 {
                BitString::from_value(n)
                    .concat(&zero)
                    .concat(&ones(i - 1))
                    .concat(&zero)
                    .concat(&ones(m))
            } else {
                BitString::from_value(n - 1).concat(&ones(m + 1))
            };
            Ok((value, word))
        }
    }
}
