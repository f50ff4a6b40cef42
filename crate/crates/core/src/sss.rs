//! Super summit sets: full enumeration for 3-strand braids via cycling
//! orbits, a bounded general enumerator used as an oracle, and the
//! polynomial-time 3-strand conjugacy decision built on them.

use crate::conjugacy::{ConjugacyAnswer, Obstruction};
use crate::error::{Error, Result};
use crate::normal::{normal_form, NormalForm};
use crate::simple::SimpleBraid;
use crate::sliding::{cycling, sss_representative};
use crate::word::BraidWord;
use std::collections::HashMap;

/// A super summit set together with, for each element, a word conjugating
/// the seed braid to it.
#[derive(Clone, Debug)]
pub struct SSSet {
    n: usize,
    elements: Vec<NormalForm>,
    conjugators: HashMap<NormalForm, BraidWord>,
}

impl SSSet {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Elements in sorted order.
    pub fn elements(&self) -> &[NormalForm] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, x: &NormalForm) -> bool {
        self.conjugators.contains_key(x)
    }

    /// A word `w` with `w^{-1} * seed * w` equal to `x`.
    pub fn conjugator_to(&self, x: &NormalForm) -> Option<&BraidWord> {
        self.conjugators.get(x)
    }

    /// Common inf of all elements.
    pub fn inf(&self) -> i64 {
        self.elements[0].inf()
    }

    /// Common canonical length of all elements (the summit length).
    pub fn summit_length(&self) -> usize {
        self.elements[0].canonical_length()
    }

    fn from_map(n: usize, conjugators: HashMap<NormalForm, BraidWord>) -> SSSet {
        let mut elements: Vec<NormalForm> = conjugators.keys().cloned().collect();
        elements.sort();
        SSSet {
            n,
            elements,
            conjugators,
        }
    }
}

/// The complete super summit set of a 3-strand braid, built from the
/// cycling orbits of a sliding representative and its `tau` image. The
/// size is bounded by `2 * summit length` (and is 1 for powers of the
/// half twist).
pub fn b3_sss_enumerate(a: &BraidWord) -> Result<SSSet> {
    if a.n() != 3 {
        return Err(Error::WrongStrandCount {
            expected: 3,
            got: a.n(),
        });
    }
    let (rep, g, _) = sss_representative(a);
    let mut found: HashMap<NormalForm, BraidWord> = HashMap::new();
    if rep.canonical_length() == 0 {
        found.insert(rep, g);
        return Ok(SSSet::from_map(3, found));
    }
    let delta_word = BraidWord::delta(3);
    let seeds = [
        (rep.clone(), g.clone()),
        (rep.tau(), g.concat(&delta_word).expect("same n")),
    ];
    for (seed, seed_conj) in seeds {
        let mut cur = seed;
        let mut conj = seed_conj;
        // cycle until we revisit; orbits of summit elements close quickly
        let cap = 4 * rep.canonical_length() + 4;
        for _ in 0..cap {
            if found.contains_key(&cur) {
                break;
            }
            found.insert(cur.clone(), conj.clone());
            let (next, step) = cycling(&cur).expect("positive canonical length");
            conj = conj.concat(&step.to_word()).expect("same n");
            cur = next;
        }
    }
    Ok(SSSet::from_map(3, found))
}

/// Bounded enumeration of the super summit set of any braid: closes a
/// sliding representative under conjugation by all nontrivial simple
/// elements, keeping elements with the same `(inf, sup)`. If a conjugate
/// with higher inf or lower sup shows up, enumeration restarts from it.
/// Aborts with [`Error::CapExceeded`] beyond `cap` elements, so a caller
/// can treat overflow as "inconclusive" rather than wrong data.
pub fn sss_enumerate_bounded(a: &BraidWord, cap: usize) -> Result<SSSet> {
    let n = a.n();
    let (mut seed, mut seed_conj, _) = sss_representative(a);
    let steps: Vec<(SimpleBraid, BraidWord)> = SimpleBraid::all(n)
        .into_iter()
        .filter(|s| !s.is_identity())
        .map(|s| {
            let w = s.to_word();
            (s, w)
        })
        .collect();
    'restart: loop {
        let target = (seed.inf(), seed.canonical_length());
        let mut found: HashMap<NormalForm, BraidWord> = HashMap::new();
        found.insert(seed.clone(), seed_conj.clone());
        let mut frontier = vec![seed.clone()];
        while let Some(x) = frontier.pop() {
            let base_conj = found.get(&x).expect("frontier elements recorded").clone();
            for (s, sw) in &steps {
                let y = x.conjugate_by_simple(s);
                let score = (y.inf(), y.canonical_length());
                if score.0 > target.0 || score.1 < target.1 {
                    // the seed was not a summit element after all
                    seed_conj = base_conj.concat(sw).expect("same n");
                    seed = y;
                    continue 'restart;
                }
                if score == target && !found.contains_key(&y) {
                    if found.len() >= cap {
                        return Err(Error::CapExceeded { cap });
                    }
                    found.insert(y.clone(), base_conj.concat(sw).expect("same n"));
                    frontier.push(y);
                }
            }
        }
        return Ok(SSSet::from_map(n, found));
    }
}

/// Conjugacy decision for 3-strand braids: conjugate iff the super summit
/// sets intersect; a witness is assembled from the recorded conjugator
/// chains.
pub fn b3_conjugacy(a: &BraidWord, b: &BraidWord) -> Result<ConjugacyAnswer> {
    if a.n() != 3 || b.n() != 3 {
        return Err(Error::WrongStrandCount {
            expected: 3,
            got: if a.n() != 3 { a.n() } else { b.n() },
        });
    }
    if a.exponent_sum() != b.exponent_sum() {
        return Ok(ConjugacyAnswer::NotConjugate(Obstruction::ExponentSum));
    }
    let sa = b3_sss_enumerate(a)?;
    let sb = b3_sss_enumerate(b)?;
    for e in sa.elements() {
        if let Some(wb) = sb.conjugator_to(e) {
            let wa = sa.conjugator_to(e).expect("element of sa");
            let witness = wa.concat(&wb.inverse())?;
            debug_assert_eq!(
                normal_form(&a.conjugate_by(&witness)?),
                normal_form(b),
                "summit witness must verify"
            );
            return Ok(ConjugacyAnswer::Conjugate(witness));
        }
    }
    Ok(ConjugacyAnswer::NotConjugate(Obstruction::InnerBraidClass))
}
