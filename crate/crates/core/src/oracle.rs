//! Independent reference implementations used to validate the main
//! algorithms in tests. Nothing here goes through the Garside normal-form
//! machinery it checks.

use crate::curve::{act, curves_of_complexity_upto, Curve};
use crate::error::Result;
use crate::freegroup;
use crate::nt::pure_power;
use crate::word::BraidWord;
use std::collections::{BTreeSet, VecDeque};

/// Exact braid equality through the faithful action on the free group: two
/// words are equal in the braid group iff they move every puncture loop to
/// the same reduced word.
pub fn words_equal(a: &BraidWord, b: &BraidWord) -> bool {
    if a.n() != b.n() {
        return false;
    }
    (1..=a.n() as i32).all(|g| {
        freegroup::apply_braid_word(&[g], a.letters())
            == freegroup::apply_braid_word(&[g], b.letters())
    })
}

/// All positive words obtainable from `word` by braid-relation rewrites
/// (only practical for very short words). Positive words represent the same
/// element exactly when their rewrite closures coincide.
pub fn positive_rewrite_closure(word: &BraidWord) -> BTreeSet<Vec<i32>> {
    let n = word.n() as i32;
    let mut seen: BTreeSet<Vec<i32>> = BTreeSet::new();
    let mut queue: VecDeque<Vec<i32>> = VecDeque::new();
    let start = word.letters().to_vec();
    debug_assert!(start.iter().all(|&l| l > 0), "positive words only");
    seen.insert(start.clone());
    queue.push_back(start);
    while let Some(w) = queue.pop_front() {
        // far commutation
        for i in 0..w.len().saturating_sub(1) {
            if (w[i] - w[i + 1]).abs() >= 2 {
                let mut v = w.clone();
                v.swap(i, i + 1);
                if seen.insert(v.clone()) {
                    queue.push_back(v);
                }
            }
        }
        // braid moves
        for i in 0..w.len().saturating_sub(2) {
            let (a, b, c) = (w[i], w[i + 1], w[i + 2]);
            if a == c && (a - b).abs() == 1 && b <= n - 1 {
                let mut v = w.clone();
                v[i] = b;
                v[i + 1] = a;
                v[i + 2] = b;
                if seen.insert(v.clone()) {
                    queue.push_back(v);
                }
            }
        }
    }
    seen
}

/// Brute-force invariant-curve search: an essential curve of complexity at
/// most `max_complexity` fixed by the pure power of `a`, if one exists.
pub fn invariant_curve_upto(a: &BraidWord, max_complexity: usize) -> Result<Option<Curve>> {
    let (power, _) = pure_power(a);
    for c in curves_of_complexity_upto(a.n(), max_complexity) {
        if act(&c, &power)? == c {
            return Ok(Some(c));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::normal::normal_form;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn random_word(rng: &mut StdRng, n: usize, len: usize) -> BraidWord {
        let letters: Vec<i32> = (0..len)
            .map(|_| {
                let i = rng.gen_range(1..n) as i32;
                if rng.gen_bool(0.5) {
                    i
                } else {
                    -i
                }
            })
            .collect();
        BraidWord::from_letters(n, &letters).unwrap()
    }

    #[test]
    fn artin_action_distinguishes_unequal_words() {
        let a = BraidWord::parse_with_default("s1", 3).unwrap();
        let b = BraidWord::parse_with_default("s2", 3).unwrap();
        assert!(!words_equal(&a, &b));
        let r1 = BraidWord::parse_with_default("s1 s2 s1", 3).unwrap();
        let r2 = BraidWord::parse_with_default("s2 s1 s2", 3).unwrap();
        assert!(words_equal(&r1, &r2));
    }

    #[test]
    fn normal_form_agrees_with_artin_oracle_on_short_words() {
        let mut rng = StdRng::seed_from_u64(71);
        for _ in 0..300 {
            let n = rng.gen_range(3..=4);
            let len = rng.gen_range(0..=8);
            let word = random_word(&mut rng, n, len);
            let nf_word = normal_form(&word).as_word();
            assert!(
                words_equal(&word, &nf_word),
                "normal form changed the element of {word:?}"
            );
        }
    }

    #[test]
    fn rewrite_closure_matches_normal_forms_on_tiny_positives() {
        let mut rng = StdRng::seed_from_u64(72);
        for _ in 0..60 {
            let len = rng.gen_range(0..=6);
            let letters: Vec<i32> = (0..len).map(|_| rng.gen_range(1..3) as i32).collect();
            let a = BraidWord::from_letters(3, &letters).unwrap();
            let letters: Vec<i32> = (0..len).map(|_| rng.gen_range(1..3) as i32).collect();
            let b = BraidWord::from_letters(3, &letters).unwrap();
            let same_closure = positive_rewrite_closure(&a).contains(b.letters());
            let same_nf = normal_form(&a) == normal_form(&b);
            assert_eq!(same_closure, same_nf, "{a:?} vs {b:?}");
        }
    }

    #[test]
    fn normal_form_word_lies_in_rewrite_closure() {
        // for positive words the normal form emits an equivalent positive
        // word reachable by relation moves
        let mut rng = StdRng::seed_from_u64(73);
        for _ in 0..40 {
            let len = rng.gen_range(0..=6);
            let letters: Vec<i32> = (0..len).map(|_| rng.gen_range(1..3) as i32).collect();
            let a = BraidWord::from_letters(3, &letters).unwrap();
            let nf_word = normal_form(&a).as_word();
            assert!(positive_rewrite_closure(&a).contains(nf_word.letters()));
        }
    }
}
