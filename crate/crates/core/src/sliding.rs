//! Cyclic sliding and the super summit set representative.
//!
//! The preferred prefix of `x = Delta^p x_1 .. x_r` is
//! `p(x) = tau^{-p}(x_1) /\ partial(x_r)`; cyclic sliding conjugates by it.
//! Iterated sliding never increases canonical length nor decreases inf, and
//! reaches an element of the super summit set within
//! `(l(x)-1) * (n(n-1)/2 - 1)` slidings.

use crate::error::{Error, Result};
use crate::normal::{normal_form, NormalForm};
use crate::simple::SimpleBraid;
use crate::word::BraidWord;

/// One conjugation step of an iterated sliding, with its result.
#[derive(Clone, Debug)]
pub struct SlidingStep {
    pub conjugator: SimpleBraid,
    pub result: NormalForm,
}

/// A record of iterated cyclic sliding: `start` conjugated by the product
/// of all step conjugators equals the final element.
#[derive(Clone, Debug)]
pub struct SlidingTrace {
    pub start: NormalForm,
    pub steps: Vec<SlidingStep>,
}

impl SlidingTrace {
    pub fn last(&self) -> &NormalForm {
        self.steps.last().map(|s| &s.result).unwrap_or(&self.start)
    }

    /// Product of all step conjugators, as a word.
    pub fn conjugator_word(&self) -> BraidWord {
        let n = self.start.n();
        let mut w = BraidWord::identity(n);
        for step in &self.steps {
            w = w
                .concat(&step.conjugator.to_word())
                .expect("same strand count");
        }
        w
    }
}

/// The preferred prefix `tau^{-p}(x_1) /\ partial(x_r)`; trivial when the
/// canonical length is zero.
pub fn preferred_prefix(x: &NormalForm) -> SimpleBraid {
    let n = x.n();
    if x.canonical_length() == 0 {
        return SimpleBraid::identity(n);
    }
    let first = x.factors().first().expect("nonempty");
    let last = x.factors().last().expect("nonempty");
    let shifted = if x.inf().rem_euclid(2) == 1 {
        first.tau()
    } else {
        first.clone()
    };
    shifted.meet(&last.complement())
}

/// An element is rigid when its preferred prefix is trivial (elements of
/// canonical length zero are rigid).
pub fn is_rigid(x: &NormalForm) -> bool {
    preferred_prefix(x).is_identity()
}

/// One cyclic sliding: returns `s(x) = p(x)^{-1} x p(x)` and the
/// conjugator `p(x)`.
pub fn cyclic_sliding(x: &NormalForm) -> (NormalForm, SimpleBraid) {
    let p = preferred_prefix(x);
    let slid = x.conjugate_by_simple(&p);
    debug_assert!(slid.canonical_length() <= x.canonical_length());
    debug_assert!(slid.inf() >= x.inf());
    (slid, p)
}

/// One cycling: conjugation by `tau^{-p}(x_1)`. Undefined on elements of
/// canonical length zero.
pub fn cycling(x: &NormalForm) -> Result<(NormalForm, SimpleBraid)> {
    if x.canonical_length() == 0 {
        return Err(Error::CanonicalLengthZero);
    }
    let first = x.factors().first().expect("nonempty");
    let conj = if x.inf().rem_euclid(2) == 1 {
        first.tau()
    } else {
        first.clone()
    };
    Ok((x.conjugate_by_simple(&conj), conj))
}

/// Iterated cyclic sliding from `a` to a super summit representative.
///
/// Sliding stops when neither the canonical length has decreased nor inf
/// has increased for `n(n-1)/2 - 1` consecutive slidings, with a hard cap
/// of `(l-1)*(n(n-1)/2 - 1) + n(n-1)/2` slidings. The returned element is
/// the first one attaining the final `(inf, sup)`; the conjugator word and
/// the full trace are returned with it.
pub fn sss_representative(a: &BraidWord) -> (NormalForm, BraidWord, SlidingTrace) {
    let n = a.n();
    let start = normal_form(a);
    let mut trace = SlidingTrace {
        start: start.clone(),
        steps: Vec::new(),
    };
    let window = (n * (n - 1) / 2).saturating_sub(1).max(1);
    let len0 = start.canonical_length();
    let cap = len0.saturating_sub(1) * window + n * (n - 1) / 2;

    let mut current = start.clone();
    // index into the trace (0 = start) of the first element with the best
    // (inf, length) seen so far
    let mut best_at = 0usize;
    let mut best = (current.inf(), current.canonical_length());
    let mut quiet = 0usize;
    for k in 1..=cap {
        if current.canonical_length() == 0 {
            break; // powers of Delta slide trivially
        }
        let (next, conj) = cyclic_sliding(&current);
        if conj.is_identity() {
            break; // rigid: sliding is the trivial conjugation
        }
        trace.steps.push(SlidingStep {
            conjugator: conj,
            result: next.clone(),
        });
        let score = (next.inf(), next.canonical_length());
        if score.0 > best.0 || score.1 < best.1 {
            best = score;
            best_at = k;
            quiet = 0;
        } else {
            quiet += 1;
            if quiet >= window {
                break;
            }
        }
        current = next;
    }

    // trim the trace at the first element attaining the final (inf, sup)
    trace.steps.truncate(best_at);
    let result = trace.last().clone();
    let conjugator = trace.conjugator_word();
    (result, conjugator, trace)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simple::left_weighted;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn w(n: usize, text: &str) -> BraidWord {
        BraidWord::parse_with_default(text, n).unwrap()
    }

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

    /// Reference preferred prefix via a scan of the whole simple lattice.
    fn brute_preferred_prefix(x: &NormalForm) -> SimpleBraid {
        let n = x.n();
        if x.canonical_length() == 0 {
            return SimpleBraid::identity(n);
        }
        let first = x.factors().first().unwrap();
        let last = x.factors().last().unwrap();
        let a = if x.inf().rem_euclid(2) == 1 {
            first.tau()
        } else {
            first.clone()
        };
        let b = last.complement();
        let mut best = SimpleBraid::identity(n);
        for cand in SimpleBraid::all(n) {
            if cand.divides(&a) && cand.divides(&b) && cand.len() > best.len() {
                best = cand;
            }
        }
        best
    }

    #[test]
    fn delta_powers_have_trivial_prefix() {
        for k in -3..=3 {
            let x = NormalForm::delta_power(4, k);
            assert!(preferred_prefix(&x).is_identity());
            assert!(is_rigid(&x));
            let (slid, conj) = cyclic_sliding(&x);
            assert_eq!(slid, x);
            assert!(conj.is_identity());
        }
    }

    #[test]
    fn preferred_prefix_matches_lattice_brute_force() {
        let mut rng = StdRng::seed_from_u64(41);
        for _ in 0..150 {
            let len = rng.gen_range(1..=10);
            let word = random_word(&mut rng, 4, len);
            let x = normal_form(&word);
            assert_eq!(preferred_prefix(&x), brute_preferred_prefix(&x));
        }
    }

    #[test]
    fn sliding_is_a_verified_conjugation() {
        let mut rng = StdRng::seed_from_u64(42);
        for _ in 0..100 {
            let len = rng.gen_range(0..=12);
            let word = random_word(&mut rng, 4, len);
            let x = normal_form(&word);
            let (slid, conj) = cyclic_sliding(&x);
            let direct = normal_form(&word.conjugate_by(&conj.to_word()).unwrap());
            assert_eq!(slid, direct);
            assert!(slid.canonical_length() <= x.canonical_length());
        }
    }

    #[test]
    fn rigid_elements_are_fixed_by_sliding() {
        // sigma_1 sigma_2 .. squares of generators are rigid
        let x = normal_form(&w(4, "s2 s2"));
        assert!(is_rigid(&x));
        let (slid, _) = cyclic_sliding(&x);
        assert_eq!(slid, x);
    }

    #[test]
    fn cycling_rotates_rigid_normal_forms() {
        // for rigid x = Delta^p x_1..x_r, cycling gives
        // Delta^p x_2..x_r tau^{-p}(x_1), normal as written
        let mut rng = StdRng::seed_from_u64(43);
        let mut tested = 0;
        for _ in 0..400 {
            let len = rng.gen_range(2..=10);
            let word = random_word(&mut rng, 3, len);
            let x = normal_form(&word);
            if x.canonical_length() < 2 || !is_rigid(&x) {
                continue;
            }
            tested += 1;
            let (cycled, conj) = cycling(&x).unwrap();
            let mut factors: Vec<SimpleBraid> = x.factors()[1..].to_vec();
            factors.push(conj.clone());
            assert_eq!(cycled.inf(), x.inf());
            assert_eq!(cycled.factors().to_vec(), factors);
            assert!(factors.windows(2).all(|p| left_weighted(&p[0], &p[1])));
        }
        assert!(tested > 5, "rigid sample too small ({tested})");
    }

    #[test]
    fn cycling_length_one_zero_inf_is_identity_conjugation() {
        let x = normal_form(&w(4, "s1 s2"));
        assert_eq!(x.canonical_length(), 1);
        assert_eq!(x.inf(), 0);
        let (cycled, conj) = cycling(&x).unwrap();
        assert_eq!(cycled, x);
        assert_eq!(&conj, &x.factors()[0]);
    }

    #[test]
    fn cycling_rejects_delta_powers() {
        assert!(matches!(
            cycling(&NormalForm::delta_power(4, 2)),
            Err(Error::CanonicalLengthZero)
        ));
    }

    #[test]
    fn full_cycling_orbit_of_rigid_element_returns_tau_image() {
        let mut rng = StdRng::seed_from_u64(44);
        let mut tested = 0;
        for _ in 0..300 {
            let len = rng.gen_range(2..=10);
            let word = random_word(&mut rng, 3, len);
            let x = normal_form(&word);
            if x.canonical_length() < 2 || !is_rigid(&x) {
                continue;
            }
            tested += 1;
            let mut cur = x.clone();
            for _ in 0..x.canonical_length() {
                cur = cycling(&cur).unwrap().0;
            }
            let expect = if x.inf().rem_euclid(2) == 1 {
                x.tau()
            } else {
                x.clone()
            };
            assert_eq!(cur, expect);
        }
        assert!(tested > 5);
    }

    #[test]
    fn representative_of_delta_power_is_itself() {
        let (rep, conj, trace) = sss_representative(&BraidWord::delta_power(4, 3));
        assert_eq!(rep, NormalForm::delta_power(4, 3));
        assert!(conj.is_empty());
        assert!(trace.steps.is_empty());
    }

    #[test]
    fn representative_conjugation_is_verified() {
        let mut rng = StdRng::seed_from_u64(45);
        for _ in 0..60 {
            let len = rng.gen_range(0..=14);
            let word = random_word(&mut rng, 4, len);
            let (rep, conj, trace) = sss_representative(&word);
            assert_eq!(normal_form(&word.conjugate_by(&conj).unwrap()), rep);
            // canonical length never increases, inf never decreases
            let mut prev = trace.start.clone();
            for step in &trace.steps {
                assert!(step.result.canonical_length() <= prev.canonical_length());
                assert!(step.result.inf() >= prev.inf());
                prev = step.result.clone();
            }
        }
    }
}
