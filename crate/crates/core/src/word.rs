//! Braid words in the Artin generators.
//!
//! A word is a sequence of signed letters over `sigma_1 .. sigma_{n-1}`.
//! Letters are stored as nonzero `i32`: `+i` for `sigma_i`, `-i` for
//! `sigma_i^{-1}` (indices 1-based). Words are never freely reduced
//! implicitly; reduction happens only through normal forms.

use crate::error::{Error, Result};
use crate::perm::Perm;
use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    n: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    /// The identity braid on `n` strands.
    pub fn identity(n: usize) -> BraidWord {
        assert!(n >= 2, "braid groups need at least 2 strands");
        BraidWord {
            n,
            letters: Vec::new(),
        }
    }

    /// Single generator `sigma_index^sign`.
    pub fn generator(n: usize, index: usize, positive: bool) -> Result<BraidWord> {
        if index == 0 || index >= n {
            return Err(Error::GeneratorOutOfRange { index, n });
        }
        Ok(BraidWord {
            n,
            letters: vec![if positive { index as i32 } else { -(index as i32) }],
        })
    }

    pub fn from_letters(n: usize, letters: &[i32]) -> Result<BraidWord> {
        assert!(n >= 2);
        for &l in letters {
            let idx = l.unsigned_abs() as usize;
            if l == 0 || idx >= n {
                return Err(Error::GeneratorOutOfRange { index: idx, n });
            }
        }
        Ok(BraidWord {
            n,
            letters: letters.to_vec(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Free concatenation (group product, no reduction).
    pub fn concat(&self, other: &BraidWord) -> Result<BraidWord> {
        if self.n != other.n {
            return Err(Error::StrandMismatch {
                left: self.n,
                right: other.n,
            });
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord { n: self.n, letters })
    }

    /// Inverse word: reversed order, flipped signs.
    pub fn inverse(&self) -> BraidWord {
        BraidWord {
            n: self.n,
            letters: self.letters.iter().rev().map(|&l| -l).collect(),
        }
    }

    /// `t`-th power; negative `t` uses the inverse.
    pub fn power(&self, t: i64) -> BraidWord {
        let base = if t < 0 { self.inverse() } else { self.clone() };
        let mut letters = Vec::with_capacity(self.letters.len() * t.unsigned_abs() as usize);
        for _ in 0..t.unsigned_abs() {
            letters.extend_from_slice(&base.letters);
        }
        BraidWord { n: self.n, letters }
    }

    /// `g^{-1} * self * g`.
    pub fn conjugate_by(&self, g: &BraidWord) -> Result<BraidWord> {
        g.inverse().concat(self)?.concat(g)
    }

    /// Permutation induced on strand endpoints (start position -> end position).
    pub fn underlying_permutation(&self) -> Perm {
        let mut p = Perm::identity(self.n);
        for &l in &self.letters {
            let i = l.unsigned_abs() as usize - 1;
            p = p.then(&Perm::transposition(self.n, i));
        }
        p
    }

    pub fn is_pure(&self) -> bool {
        self.underlying_permutation().is_identity()
    }

    /// Sum of letter signs.
    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|&l| if l > 0 { 1 } else { -1 }).sum()
    }

    /// Image under the automorphism `tau` (conjugation by the half twist):
    /// `sigma_i -> sigma_{n-i}`, signs preserved.
    pub fn tau(&self) -> BraidWord {
        let n = self.n as i32;
        BraidWord {
            n: self.n,
            letters: self
                .letters
                .iter()
                .map(|&l| if l > 0 { n - l } else { -(n + l) })
                .collect(),
        }
    }

    /// The standard word for the half twist:
    /// `(s1..s_{n-1})(s1..s_{n-2})..(s1 s2)(s1)`.
    pub fn delta(n: usize) -> BraidWord {
        let mut letters = Vec::new();
        for top in (1..n).rev() {
            for i in 1..=top {
                letters.push(i as i32);
            }
        }
        BraidWord { n, letters }
    }

    /// `delta^k` as a word (negative `k` gives the inverse word).
    pub fn delta_power(n: usize, k: i64) -> BraidWord {
        BraidWord::delta(n).power(k)
    }

    /// Parse the text format: optional header `n=<strands>` followed by
    /// whitespace-separated tokens `s<i>` (positive) and `S<i>` (inverse).
    /// Without a header, `default_n` is used.
    pub fn parse_with_default(text: &str, default_n: usize) -> Result<BraidWord> {
        let mut n = default_n;
        let mut letters: Vec<i32> = Vec::new();
        let mut first = true;
        for tok in text.split_whitespace() {
            if first {
                first = false;
                if let Some(rest) = tok.strip_prefix("n=") {
                    n = rest
                        .parse::<usize>()
                        .map_err(|_| Error::Parse(format!("bad strand count `{tok}`")))?;
                    if n < 2 {
                        return Err(Error::Parse(format!("strand count {n} too small")));
                    }
                    continue;
                }
            }
            let (positive, digits) = if let Some(d) = tok.strip_prefix('s') {
                (true, d)
            } else if let Some(d) = tok.strip_prefix('S') {
                (false, d)
            } else {
                return Err(Error::Parse(format!("unrecognized token `{tok}`")));
            };
            let idx: usize = digits
                .parse()
                .map_err(|_| Error::Parse(format!("bad generator index in `{tok}`")))?;
            if idx == 0 || idx >= n {
                return Err(Error::Parse(format!(
                    "generator index {idx} out of range for n={n}"
                )));
            }
            letters.push(if positive { idx as i32 } else { -(idx as i32) });
        }
        Ok(BraidWord { n, letters })
    }

    /// Parse the text format with a mandatory `n=` header.
    pub fn parse(text: &str) -> Result<BraidWord> {
        let trimmed = text.trim_start();
        if !trimmed.starts_with("n=") {
            return Err(Error::Parse("expected header `n=<strands>`".into()));
        }
        BraidWord::parse_with_default(text, 0).and_then(|w| {
            if w.n < 2 {
                Err(Error::Parse("missing or invalid strand count".into()))
            } else {
                Ok(w)
            }
        })
    }

    /// Tokens only, no header (e.g. `s1 s2 S3`). Empty for the identity.
    pub fn tokens(&self) -> String {
        let mut out = String::new();
        for (k, &l) in self.letters.iter().enumerate() {
            if k > 0 {
                out.push(' ');
            }
            if l > 0 {
                out.push_str(&format!("s{l}"));
            } else {
                out.push_str(&format!("S{}", -l));
            }
        }
        out
    }

    /// Full text format with header, round-trips through `parse`.
    pub fn to_text(&self) -> String {
        if self.letters.is_empty() {
            format!("n={}", self.n)
        } else {
            format!("n={} {}", self.n, self.tokens())
        }
    }
}

impl fmt::Debug for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}
