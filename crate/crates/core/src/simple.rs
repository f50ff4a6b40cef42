//! Positive permutation braids (simple elements of the classical Garside
//! structure) encoded by their underlying permutations.
//!
//! A positive braid is simple when every pair of strands crosses at most
//! once; simples are in bijection with permutations. `sigma_i` is a prefix
//! of a simple `x` iff `i` is a descent of the permutation of `x`, and a
//! suffix iff `i` is a descent of the inverse permutation.

use crate::error::{Error, Result};
use crate::perm::Perm;
use crate::word::BraidWord;
use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimpleBraid {
    n: usize,
    perm: Perm,
}

impl SimpleBraid {
    pub fn identity(n: usize) -> SimpleBraid {
        SimpleBraid {
            n,
            perm: Perm::identity(n),
        }
    }

    /// The half twist.
    pub fn delta(n: usize) -> SimpleBraid {
        SimpleBraid {
            n,
            perm: Perm::reversal(n),
        }
    }

    /// The generator `sigma_i` (1-based index).
    pub fn generator(n: usize, index: usize) -> Result<SimpleBraid> {
        if index == 0 || index >= n {
            return Err(Error::GeneratorOutOfRange { index, n });
        }
        Ok(SimpleBraid {
            n,
            perm: Perm::transposition(n, index - 1),
        })
    }

    pub fn from_perm(n: usize, perm: Perm) -> SimpleBraid {
        debug_assert_eq!(perm.degree(), n);
        SimpleBraid { n, perm }
    }

    /// Interpret a positive word as a simple braid. Fails when two strands
    /// cross more than once (word length exceeds the inversion count).
    pub fn from_positive_word(word: &BraidWord) -> Result<SimpleBraid> {
        if word.letters().iter().any(|&l| l < 0) {
            return Err(Error::Parse("expected a positive word".into()));
        }
        let perm = word.underlying_permutation();
        if perm.inversions() != word.len() {
            return Err(Error::Parse(
                "positive word is not a permutation braid".into(),
            ));
        }
        Ok(SimpleBraid { n: word.n(), perm })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn perm(&self) -> &Perm {
        &self.perm
    }

    pub fn is_identity(&self) -> bool {
        self.perm.is_identity()
    }

    pub fn is_delta(&self) -> bool {
        (0..self.n).all(|i| self.perm.apply(i) == self.n - 1 - i)
    }

    /// Letter count of the positive word for this simple.
    pub fn len(&self) -> usize {
        self.perm.inversions()
    }

    /// Starting set: 1-based indices `i` with `sigma_i` a prefix.
    pub fn starting_set(&self) -> Vec<usize> {
        self.perm.descents().into_iter().map(|i| i + 1).collect()
    }

    /// Finishing set: 1-based indices `i` with `sigma_i` a suffix.
    pub fn finishing_set(&self) -> Vec<usize> {
        self.perm
            .inverse()
            .descents()
            .into_iter()
            .map(|i| i + 1)
            .collect()
    }

    /// Right-multiply by `sigma_i` (1-based). Caller must ensure `i` is not
    /// in the finishing set, otherwise the product is not simple.
    pub(crate) fn mul_gen_right(&self, i: usize) -> SimpleBraid {
        let mut s = self.clone();
        s.mul_gen_right_inplace(i);
        s
    }

    pub(crate) fn mul_gen_right_inplace(&mut self, i: usize) {
        self.perm.swap_values(i - 1);
    }

    /// Left-divide by `sigma_i` (1-based), i.e. `sigma_i^{-1} * self`.
    /// Caller must ensure `i` is in the starting set.
    pub(crate) fn div_gen_left(&self, i: usize) -> SimpleBraid {
        let mut s = self.clone();
        s.div_gen_left_inplace(i);
        s
    }

    pub(crate) fn div_gen_left_inplace(&mut self, i: usize) {
        self.perm.swap_positions(i - 1);
    }

    /// Starting set as a bitmask (bit `i-1` for `sigma_i`).
    pub(crate) fn starting_mask(&self) -> u32 {
        self.perm.descent_mask()
    }

    /// Finishing set as a bitmask.
    pub(crate) fn finishing_mask(&self) -> u32 {
        self.perm.inverse_descent_mask()
    }

    /// Product of two simples, if the product is again simple.
    pub fn try_mul(&self, other: &SimpleBraid) -> Option<SimpleBraid> {
        let perm = self.perm.then(&other.perm);
        if perm.inversions() == self.len() + other.len() {
            Some(SimpleBraid { n: self.n, perm })
        } else {
            None
        }
    }

    /// Prefix order: does `self` left-divide `other`?
    pub fn divides(&self, other: &SimpleBraid) -> bool {
        let rest = self.perm.inverse().then(&other.perm);
        self.perm.inversions() + rest.inversions() == other.perm.inversions()
    }

    /// Greatest common prefix in the permutation-braid lattice.
    ///
    /// Greedy peeling: whenever some `sigma_i` is a common prefix it divides
    /// the meet, and left-dividing both arguments by it reduces the problem.
    pub fn meet(&self, other: &SimpleBraid) -> SimpleBraid {
        debug_assert_eq!(self.n, other.n);
        let mut a = self.clone();
        let mut b = other.clone();
        let mut m = SimpleBraid::identity(self.n);
        loop {
            let sa = a.starting_set();
            let sb = b.starting_set();
            let common = sa.iter().find(|i| sb.contains(i));
            match common {
                Some(&i) => {
                    m = m.mul_gen_right(i);
                    a = a.div_gen_left(i);
                    b = b.div_gen_left(i);
                }
                None => return m,
            }
        }
    }

    /// Right complement to the half twist: `partial(z) = z^{-1} Delta`.
    pub fn complement(&self) -> SimpleBraid {
        SimpleBraid {
            n: self.n,
            perm: self.perm.inverse().then(&Perm::reversal(self.n)),
        }
    }

    /// Conjugation by the half twist.
    pub fn tau(&self) -> SimpleBraid {
        let rev = Perm::reversal(self.n);
        SimpleBraid {
            n: self.n,
            perm: rev.then(&self.perm).then(&rev),
        }
    }

    /// A canonical positive word for this simple (peels minimal finishing
    /// letters from the right).
    pub fn to_word(&self) -> BraidWord {
        let mut p = self.perm.clone();
        let mut suffix: Vec<i32> = Vec::new();
        while !p.is_identity() {
            let i = p.inverse().descents()[0] + 1;
            suffix.push(i as i32);
            // strip sigma_i from the right: p = p * t_i on values
            p = p.then(&Perm::transposition(self.n, i - 1));
        }
        suffix.reverse();
        BraidWord::from_letters(self.n, &suffix).expect("peeled letters are in range")
    }

    /// All simples on `n` strands (including the identity and the half twist).
    pub fn all(n: usize) -> Vec<SimpleBraid> {
        Perm::all(n)
            .into_iter()
            .map(|perm| SimpleBraid { n, perm })
            .collect()
    }

    /// All simples except the identity and the half twist.
    pub fn all_proper(n: usize) -> Vec<SimpleBraid> {
        SimpleBraid::all(n)
            .into_iter()
            .filter(|s| !s.is_identity() && !s.is_delta())
            .collect()
    }
}

/// Left-weighted test: no generator can move from the front of `b` to the
/// back of `a` keeping both simple, i.e. the starting set of `b` is
/// contained in the finishing set of `a`.
pub fn left_weighted(a: &SimpleBraid, b: &SimpleBraid) -> bool {
    debug_assert_eq!(a.n(), b.n());
    let f = a.finishing_set();
    b.starting_set().iter().all(|i| f.contains(i))
}

impl fmt::Debug for SimpleBraid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            write!(f, "1")
        } else if self.is_delta() {
            write!(f, "D")
        } else {
            write!(f, "{}", self.to_word().tokens())
        }
    }
}
