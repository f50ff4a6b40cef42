//! Left normal form: `Delta^p x_1 .. x_r` with every consecutive pair of
//! factors left-weighted and no factor trivial or equal to the half twist.
//!
//! Normalization is done by local rewriting: adjacent pairs are made
//! left-weighted by moving prefix letters of the right factor onto the left
//! factor, full twists are absorbed leftwards into the `Delta` exponent.

use crate::error::{Error, Result};
use crate::simple::{left_weighted, SimpleBraid};
use crate::word::BraidWord;
use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NormalForm {
    n: usize,
    p: i64,
    factors: Vec<SimpleBraid>,
}

impl NormalForm {
    pub fn identity(n: usize) -> NormalForm {
        NormalForm {
            n,
            p: 0,
            factors: Vec::new(),
        }
    }

    pub fn delta_power(n: usize, p: i64) -> NormalForm {
        NormalForm {
            n,
            p,
            factors: Vec::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// The `Delta` exponent, equal to `inf`.
    pub fn inf(&self) -> i64 {
        self.p
    }

    pub fn sup(&self) -> i64 {
        self.p + self.factors.len() as i64
    }

    /// Canonical length (number of non-`Delta` factors).
    pub fn canonical_length(&self) -> usize {
        self.factors.len()
    }

    pub fn factors(&self) -> &[SimpleBraid] {
        &self.factors
    }

    pub fn exponent_sum(&self) -> i64 {
        let half = (self.n * (self.n - 1) / 2) as i64;
        self.p * half + self.factors.iter().map(|f| f.len() as i64).sum::<i64>()
    }

    /// Build from `Delta^p` and raw simple factors, normalizing.
    pub fn from_parts(n: usize, p: i64, factors: Vec<SimpleBraid>) -> NormalForm {
        let mut nf = NormalForm { n, p, factors };
        nf.normalize();
        nf
    }

    fn normalize(&mut self) {
        let n = self.n;
        let full_mask: u32 = (1 << (n - 1)) - 1;
        let raw = std::mem::take(&mut self.factors);
        let mut out: Vec<SimpleBraid> = Vec::with_capacity(raw.len());
        // Insertion schedule: append one factor at a time and let its
        // letters percolate leftwards in a single pass, which keeps the
        // processed prefix in left normal form throughout. A factor that
        // fills up to the half twist is absorbed into the exponent, tauing
        // everything to its left (`x Delta = Delta tau(x)`).
        for f in raw {
            if f.is_identity() {
                continue;
            }
            if f.is_delta() {
                for g in out.iter_mut() {
                    *g = g.tau();
                }
                self.p += 1;
                continue;
            }
            out.push(f);
            let mut j = out.len() - 1;
            while j >= 1 {
                let moved = Self::fix_pair(&mut out, j - 1, full_mask);
                if !moved {
                    break;
                }
                if out[j].is_identity() {
                    out.remove(j);
                }
                if out[j - 1].is_delta() {
                    for g in out[..j - 1].iter_mut() {
                        *g = g.tau();
                    }
                    out.remove(j - 1);
                    self.p += 1;
                }
                if out.is_empty() {
                    break;
                }
                j = (j - 1).min(out.len() - 1);
            }
        }
        self.factors = out;
    }

    /// Move prefix letters of `factors[i+1]` onto `factors[i]` until the
    /// pair is left-weighted. Returns whether anything moved.
    fn fix_pair(factors: &mut [SimpleBraid], i: usize, full_mask: u32) -> bool {
        let mut changed = false;
        let mut fin = factors[i].finishing_mask();
        loop {
            if fin == full_mask {
                return changed; // left factor is the half twist
            }
            let movable = factors[i + 1].starting_mask() & !fin;
            if movable == 0 {
                return changed;
            }
            let g = movable.trailing_zeros() as usize + 1;
            factors[i].mul_gen_right_inplace(g);
            factors[i + 1].div_gen_left_inplace(g);
            fin = factors[i].finishing_mask();
            changed = true;
        }
    }

    pub fn is_left_normal(&self) -> bool {
        if self
            .factors
            .iter()
            .any(|f| f.is_identity() || f.is_delta())
        {
            return false;
        }
        self.factors
            .windows(2)
            .all(|w| left_weighted(&w[0], &w[1]))
    }

    /// Apply `tau` (conjugation by the half twist): acts on each factor, the
    /// exponent is unchanged. Left-weightedness is preserved.
    pub fn tau(&self) -> NormalForm {
        NormalForm {
            n: self.n,
            p: self.p,
            factors: self.factors.iter().map(|f| f.tau()).collect(),
        }
    }

    /// Group product.
    pub fn mul(&self, other: &NormalForm) -> Result<NormalForm> {
        if self.n != other.n {
            return Err(Error::StrandMismatch {
                left: self.n,
                right: other.n,
            });
        }
        // Delta^p F  Delta^q G = Delta^{p+q} tau^q(F) G
        let mut factors: Vec<SimpleBraid> = if other.p % 2 != 0 {
            self.factors.iter().map(|f| f.tau()).collect()
        } else {
            self.factors.clone()
        };
        factors.extend_from_slice(&other.factors);
        Ok(NormalForm::from_parts(self.n, self.p + other.p, factors))
    }

    pub fn inverse(&self) -> NormalForm {
        // (Delta^p x_1..x_r)^{-1} = Delta^{-p-r} prod tau^{..}(complements)
        let r = self.factors.len() as i64;
        let mut factors = Vec::with_capacity(self.factors.len());
        for (k, f) in self.factors.iter().rev().enumerate() {
            // x_i^{-1} = Delta^{-1} tau(complement(x_i)); collecting the
            // Delta's on the left applies tau a varying number of times.
            let shift = self.p + r - k as i64 - 1;
            let c = f.complement().tau();
            factors.push(if shift % 2 != 0 { c.tau() } else { c });
        }
        NormalForm::from_parts(self.n, -self.p - r, factors)
    }

    pub fn power(&self, t: i64) -> NormalForm {
        let base = if t < 0 { self.inverse() } else { self.clone() };
        let mut acc = NormalForm::identity(self.n);
        for _ in 0..t.unsigned_abs() {
            acc = acc.mul(&base).expect("same strand count");
        }
        acc
    }

    /// A braid word representing this element.
    pub fn as_word(&self) -> BraidWord {
        let mut w = BraidWord::delta_power(self.n, self.p);
        for f in &self.factors {
            w = w.concat(&f.to_word()).expect("same strand count");
        }
        w
    }

    /// Conjugate of `self` by a single simple element.
    pub fn conjugate_by_simple(&self, s: &SimpleBraid) -> NormalForm {
        if s.is_identity() {
            return self.clone();
        }
        // s^{-1} = Delta^{-1} tau(complement(s))
        let left = NormalForm::from_parts(self.n, -1, vec![s.complement().tau()]);
        let right = NormalForm::from_parts(self.n, 0, vec![s.clone()]);
        left.mul(self)
            .and_then(|x| x.mul(&right))
            .expect("same strand count")
    }
}

/// The unique left normal form of the element represented by `word`.
pub fn normal_form(word: &BraidWord) -> NormalForm {
    let n = word.n();
    let total_neg = word.letters().iter().filter(|&&l| l < 0).count() as i64;
    let mut factors: Vec<SimpleBraid> = Vec::with_capacity(word.len());
    let mut neg_seen = 0i64;
    // runs of positive letters are packed greedily into one simple factor
    let mut packed: Option<SimpleBraid> = None;
    for &l in word.letters() {
        if l > 0 {
            // tau'd once per Delta^{-1} emitted after it
            let shift = total_neg - neg_seen;
            let g = if shift % 2 != 0 {
                n - l as usize
            } else {
                l as usize
            };
            packed = Some(match packed.take() {
                Some(mut f) => {
                    if f.finishing_mask() & (1 << (g - 1)) == 0 {
                        f.mul_gen_right_inplace(g);
                        f
                    } else {
                        factors.push(f);
                        SimpleBraid::generator(n, g).expect("validated letter")
                    }
                }
                None => SimpleBraid::generator(n, g).expect("validated letter"),
            });
        } else {
            // sigma_i^{-1} = Delta^{-1} * (Delta sigma_i^{-1}); the simple
            // part is tau'd once per negative letter strictly after it
            if let Some(f) = packed.take() {
                factors.push(f);
            }
            let i = (-l) as usize;
            let s = delta_over_generator(n, i);
            neg_seen += 1;
            let shift = total_neg - neg_seen;
            factors.push(if shift % 2 != 0 { s.tau() } else { s });
        }
    }
    if let Some(f) = packed {
        factors.push(f);
    }
    NormalForm::from_parts(n, -total_neg, factors)
}

/// The simple braid `Delta * sigma_i^{-1}`.
fn delta_over_generator(n: usize, i: usize) -> SimpleBraid {
    let perm = crate::perm::Perm::reversal(n).then(&crate::perm::Perm::transposition(n, i - 1));
    SimpleBraid::from_perm(n, perm)
}

impl fmt::Debug for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "D^{}", self.p)?;
        for x in &self.factors {
            write!(f, " . {x:?}")?;
        }
        Ok(())
    }
}
