//! Exact representation of isotopy classes of essential simple closed
//! curves in the n-punctured disk, and the braid action on them.
//!
//! A curve is stored as the canonical cyclic word (up to rotation and
//! inversion) of its class in the fundamental group of the punctured disk,
//! which is free on the puncture loops `x_1 .. x_n`. Isotopy classes of
//! essential simple closed curves embed injectively into such cyclic words,
//! and the braid action is the exact Artin substitution, so equality,
//! invariance and roundness tests are all exact integer computations. The
//! round curve around punctures `i..j` is the class of `x_i x_{i+1} .. x_j`.
//!
//! The complexity of a curve is the smallest canonical length of a positive
//! braid moving it to a round curve; it is computed by breadth-first search
//! over images under permutation braids (a `Delta` prefix costs nothing,
//! so searches start from the curve and its half-twist image).

use crate::error::{Error, Result};
use crate::freegroup;
use crate::normal::NormalForm;
use crate::simple::SimpleBraid;
use crate::word::BraidWord;
use std::collections::HashSet;
use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Curve {
    n: usize,
    /// Canonical cyclic word; letters `+g`/`-g` are `x_g` / `x_g^{-1}`.
    coords: Vec<i32>,
    /// Number of enclosed punctures, carried as metadata.
    enclosed: usize,
}

impl Curve {
    fn from_raw(n: usize, raw_word: &[i32], enclosed: usize) -> Curve {
        let coords = freegroup::cyclic_canonical(raw_word);
        debug_assert!(!coords.is_empty(), "curve words must be nontrivial");
        Curve {
            n,
            coords,
            enclosed,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// The canonical coordinate vector (signed puncture-loop letters).
    pub fn coords(&self) -> &[i32] {
        &self.coords
    }

    pub fn enclosed(&self) -> usize {
        self.enclosed
    }

    /// Text literal: `n=<punctures> coords=[..] enclosed=<m>`.
    pub fn to_literal(&self) -> String {
        let body = self
            .coords
            .iter()
            .map(|l| l.to_string())
            .collect::<Vec<_>>()
            .join(",");
        format!("n={} coords=[{}] enclosed={}", self.n, body, self.enclosed)
    }

    /// Parse the literal format produced by [`Curve::to_literal`].
    pub fn parse_literal(text: &str) -> Result<Curve> {
        let mut n = None;
        let mut coords: Option<Vec<i32>> = None;
        let mut enclosed = None;
        for tok in text.split_whitespace() {
            if let Some(v) = tok.strip_prefix("n=") {
                n = Some(
                    v.parse::<usize>()
                        .map_err(|_| Error::Parse(format!("bad puncture count `{tok}`")))?,
                );
            } else if let Some(v) = tok.strip_prefix("coords=") {
                let inner = v
                    .strip_prefix('[')
                    .and_then(|s| s.strip_suffix(']'))
                    .ok_or_else(|| Error::Parse(format!("bad coords `{tok}`")))?;
                let mut parsed = Vec::new();
                if !inner.is_empty() {
                    for piece in inner.split(',') {
                        parsed.push(
                            piece
                                .parse::<i32>()
                                .map_err(|_| Error::Parse(format!("bad coordinate `{piece}`")))?,
                        );
                    }
                }
                coords = Some(parsed);
            } else if let Some(v) = tok.strip_prefix("enclosed=") {
                enclosed = Some(
                    v.parse::<usize>()
                        .map_err(|_| Error::Parse(format!("bad enclosed count `{tok}`")))?,
                );
            } else {
                return Err(Error::Parse(format!("unrecognized token `{tok}`")));
            }
        }
        let (n, coords, enclosed) = match (n, coords, enclosed) {
            (Some(n), Some(c), Some(e)) => (n, c, e),
            _ => {
                return Err(Error::Parse(
                    "curve literal needs n=, coords=, enclosed=".into(),
                ))
            }
        };
        if coords.is_empty() {
            return Err(Error::Parse("curve coordinates must be nonzero".into()));
        }
        for &l in &coords {
            let g = l.unsigned_abs() as usize;
            if l == 0 || g > n {
                return Err(Error::Parse(format!("coordinate {l} out of range")));
            }
        }
        Ok(Curve::from_raw(n, &coords, enclosed))
    }
}

impl fmt::Debug for Curve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_literal())
    }
}

/// The round curve enclosing the consecutive punctures `i..=j` (1-based).
/// Requires `1 <= i < j <= n` and `(i,j) != (1,n)` (nondegenerate).
pub fn round_curve(n: usize, i: usize, j: usize) -> Result<Curve> {
    if !(1 <= i && i < j && j <= n) || (i == 1 && j == n) {
        return Err(Error::DegenerateCurve { n, i, j });
    }
    let raw: Vec<i32> = (i..=j).map(|g| g as i32).collect();
    Ok(Curve::from_raw(n, &raw, j - i + 1))
}

/// Right action of a braid word on a curve.
pub fn act(c: &Curve, a: &BraidWord) -> Result<Curve> {
    if c.n != a.n() {
        return Err(Error::StrandMismatch {
            left: c.n,
            right: a.n(),
        });
    }
    let moved = freegroup::apply_braid_word(&c.coords, a.letters());
    Ok(Curve::from_raw(c.n, &moved, c.enclosed))
}

/// Right action of a single permutation braid.
pub fn act_simple(c: &Curve, s: &SimpleBraid) -> Curve {
    act(c, &s.to_word()).expect("matching strand count")
}

/// All round curves of the n-punctured disk, ordered by block.
pub fn all_round_curves(n: usize) -> Vec<Curve> {
    let mut out = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            if !(i == 1 && j == n) {
                out.push(round_curve(n, i, j).expect("valid block"));
            }
        }
    }
    out
}

/// If `c` is round, the enclosed block `(i, j)`.
pub fn is_round(c: &Curve) -> Option<(usize, usize)> {
    for i in 1..=c.n {
        for j in i + 1..=c.n {
            if i == 1 && j == c.n {
                continue;
            }
            if round_curve(c.n, i, j).expect("valid block") == *c {
                return Some((i, j));
            }
        }
    }
    None
}

/// For a curve of complexity exactly 1, a permutation braid sending it to a
/// round curve; `None` for round curves and for complexity >= 2.
pub fn is_almost_round(c: &Curve) -> Option<SimpleBraid> {
    if is_round(c).is_some() {
        return None;
    }
    for s in SimpleBraid::all(c.n) {
        if s.is_identity() {
            continue;
        }
        if is_round(&act_simple(c, &s)).is_some() {
            return Some(s);
        }
    }
    None
}

/// Breadth-first computation of curve complexity, capped at `k` steps.
/// Returns the complexity if it is at most `k`, else `None`.
pub fn complexity_upto(c: &Curve, k: usize) -> Option<usize> {
    complexity_path_upto(c, k).map(|(d, _, _)| d)
}

/// Like [`complexity_upto`], additionally returning a braid word realizing
/// the move to round (a `Delta` power followed by at most `complexity` many
/// permutation braids) and the round curve reached.
pub fn complexity_path_upto(c: &Curve, k: usize) -> Option<(usize, BraidWord, Curve)> {
    let n = c.n;
    let delta_word = BraidWord::delta(n);
    // A positive braid is Delta^q x_1..x_r with r its canonical length; on
    // curves only the parity of the Delta prefix matters and it is free.
    let mut seeds: Vec<(Curve, BraidWord)> = vec![(c.clone(), BraidWord::identity(n))];
    let delta_image = act(c, &delta_word).expect("same n");
    if delta_image != *c {
        seeds.push((delta_image, delta_word.clone()));
    }
    let steps: Vec<(SimpleBraid, BraidWord)> = SimpleBraid::all_proper(n)
        .into_iter()
        .map(|s| {
            let w = s.to_word();
            (s, w)
        })
        .collect();
    let mut seen: HashSet<Curve> = HashSet::new();
    let mut frontier: Vec<(Curve, BraidWord)> = Vec::new();
    for (cur, path) in seeds {
        if is_round(&cur).is_some() {
            return Some((0, path, cur));
        }
        if seen.insert(cur.clone()) {
            frontier.push((cur, path));
        }
    }
    for depth in 1..=k {
        let mut next: Vec<(Curve, BraidWord)> = Vec::new();
        for (cur, path) in &frontier {
            for (s, sw) in &steps {
                let img = act_simple(cur, s);
                if seen.contains(&img) {
                    continue;
                }
                let new_path = path.concat(sw).expect("same n");
                if is_round(&img).is_some() {
                    return Some((depth, new_path, img));
                }
                seen.insert(img.clone());
                next.push((img, new_path));
            }
        }
        frontier = next;
        if frontier.is_empty() {
            break;
        }
    }
    None
}

/// Catalogue of the round curves plus, for the 4-punctured disk, the six
/// curves of complexity at most 1 surrounding 3 punctures.
#[derive(Clone, Debug)]
pub struct CurveCatalogue {
    pub n: usize,
    pub round: Vec<Curve>,
    pub three_puncture_set: Vec<Curve>,
}

/// The two round and four almost-round 3-puncture curves of the
/// 4-punctured disk: the deduplicated orbit of the round 3-puncture curves
/// under all permutation braids, filtered to complexity <= 1.
pub fn three_puncture_catalogue(n: usize) -> Result<CurveCatalogue> {
    if n != 4 {
        return Err(Error::WrongStrandCount { expected: 4, got: n });
    }
    let rounds3 = [round_curve(4, 1, 3)?, round_curve(4, 2, 4)?];
    let mut set: HashSet<Curve> = HashSet::new();
    for r in &rounds3 {
        set.insert(r.clone());
        for s in SimpleBraid::all(4) {
            let img = act_simple(r, &s);
            if complexity_upto(&img, 1).is_some() {
                set.insert(img);
            }
            // curves SENT to round by a simple are almost-round as well
            let pre = act(r, &s.to_word().inverse())?;
            if complexity_upto(&pre, 1).is_some() {
                set.insert(pre);
            }
        }
    }
    let mut three: Vec<Curve> = set.into_iter().collect();
    three.sort();
    Ok(CurveCatalogue {
        n: 4,
        round: all_round_curves(4),
        three_puncture_set: three,
    })
}

/// Apply `Delta^p` and then each factor of the normal form in order,
/// aborting with `None` as soon as an intermediate image has complexity
/// greater than `bound`. Returns the final curve on success.
pub fn track_through_factors(c: &Curve, x: &NormalForm, bound: usize) -> Option<Curve> {
    let n = x.n();
    debug_assert_eq!(c.n, n);
    let mut cur = if x.inf().rem_euclid(2) == 1 {
        act(c, &BraidWord::delta(n)).expect("same n")
    } else {
        c.clone()
    };
    complexity_upto(&cur, bound)?;
    for f in x.factors() {
        cur = act_simple(&cur, f);
        complexity_upto(&cur, bound)?;
    }
    Some(cur)
}

/// All curves of complexity at most `k` together with their exact
/// complexities, for brute-force invariant-curve searches.
///
/// The search runs from round curves backwards: a curve has complexity
/// exactly `j` iff it first appears as the image of a round curve under
/// `j` inverse permutation braids (half-twist prefixes are free and the
/// inverse-simple step set is closed under conjugation by the half twist).
pub fn curves_with_complexity_upto(n: usize, k: usize) -> Vec<(Curve, usize)> {
    let mut seen: HashSet<Curve> = HashSet::new();
    let delta_word = BraidWord::delta(n);
    let mut layer: Vec<Curve> = Vec::new();
    let mut out: Vec<(Curve, usize)> = Vec::new();
    for r in all_round_curves(n) {
        let d = act(&r, &delta_word).expect("same n");
        for c in [r, d] {
            if seen.insert(c.clone()) {
                out.push((c.clone(), 0));
                layer.push(c);
            }
        }
    }
    let steps: Vec<BraidWord> = SimpleBraid::all_proper(n)
        .into_iter()
        .map(|s| s.to_word().inverse())
        .collect();
    for depth in 1..=k {
        let mut next = Vec::new();
        for cur in &layer {
            for st in &steps {
                let img = act(cur, st).expect("same n");
                if seen.insert(img.clone()) {
                    out.push((img.clone(), depth));
                    next.push(img);
                }
            }
        }
        layer = next;
    }
    out
}

/// All curves of complexity at most `k`.
pub fn curves_of_complexity_upto(n: usize, k: usize) -> Vec<Curve> {
    let mut out: Vec<Curve> = curves_with_complexity_upto(n, k)
        .into_iter()
        .map(|(c, _)| c)
        .collect();
    out.sort();
    out
}

/// The catalogue curves fixed by `x` (checked by bounded factor tracking).
pub fn fixed_catalogue_curves(x: &NormalForm, catalogue: &[Curve], bound: usize) -> Vec<Curve> {
    let mut fixed = Vec::new();
    for c in catalogue {
        if let Some(end) = track_through_factors(c, x, bound) {
            if end == *c {
                fixed.push(c.clone());
            }
        }
    }
    fixed
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::normal::normal_form;
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

    fn random_curve(rng: &mut StdRng, n: usize) -> Curve {
        let rounds = all_round_curves(n);
        let r = rounds[rng.gen_range(0..rounds.len())].clone();
        let len = rng.gen_range(0..8);
        let word = random_word(rng, n, len);
        act(&r, &word).unwrap()
    }

    #[test]
    fn round_curve_basics() {
        let c = round_curve(4, 1, 3).unwrap();
        assert_eq!(c.enclosed(), 3);
        assert_eq!(is_round(&c), Some((1, 3)));
        assert_eq!(round_curve(4, 2, 4).unwrap().enclosed(), 3);
        assert!(round_curve(4, 1, 4).is_err());
        assert!(round_curve(4, 2, 2).is_err());
        assert_eq!(all_round_curves(4).len(), 5); // n(n-1)/2 - 1
    }

    #[test]
    fn curve_literal_round_trip() {
        let c = round_curve(4, 2, 4).unwrap();
        let lit = c.to_literal();
        assert_eq!(Curve::parse_literal(&lit).unwrap(), c);
    }

    #[test]
    fn full_twist_fixes_every_curve() {
        let mut rng = StdRng::seed_from_u64(31);
        let d2 = BraidWord::delta_power(4, 2);
        for _ in 0..50 {
            let c = random_curve(&mut rng, 4);
            assert_eq!(act(&c, &d2).unwrap(), c);
        }
    }

    #[test]
    fn action_is_a_group_action() {
        let mut rng = StdRng::seed_from_u64(32);
        for _ in 0..100 {
            let c = random_curve(&mut rng, 4);
            let u = {
                let len = rng.gen_range(0..8);
                random_word(&mut rng, 4, len)
            };
            let v = {
                let len = rng.gen_range(0..8);
                random_word(&mut rng, 4, len)
            };
            let lhs = act(&act(&c, &u).unwrap(), &v).unwrap();
            let rhs = act(&c, &u.concat(&v).unwrap()).unwrap();
            assert_eq!(lhs, rhs);
            let back = act(&c, &u.concat(&u.inverse()).unwrap()).unwrap();
            assert_eq!(back, c);
        }
    }

    #[test]
    fn action_is_well_defined_on_elements() {
        // two words for the same braid act identically
        let mut rng = StdRng::seed_from_u64(33);
        for _ in 0..50 {
            let c = random_curve(&mut rng, 4);
            let u = {
                let len = rng.gen_range(0..8);
                random_word(&mut rng, 4, len)
            };
            let nf_word = normal_form(&u).as_word();
            assert_eq!(act(&c, &u).unwrap(), act(&c, &nf_word).unwrap());
        }
    }

    #[test]
    fn enclosed_count_is_preserved() {
        let mut rng = StdRng::seed_from_u64(34);
        for _ in 0..1000 {
            let c = random_curve(&mut rng, 4);
            let u = {
                let len = rng.gen_range(0..10);
                random_word(&mut rng, 4, len)
            };
            let img = act(&c, &u).unwrap();
            assert_eq!(img.enclosed(), c.enclosed());
            // metadata matches the exponent count in the coordinates
            let by_exponents = (1..=4)
                .filter(|&g| freegroup::exponent_of(img.coords(), g) != 0)
                .count();
            assert_eq!(by_exponents, img.enclosed());
        }
    }

    #[test]
    fn half_twist_reverses_round_blocks() {
        let d = BraidWord::delta(4);
        for i in 1..=4usize {
            for j in i + 1..=4 {
                if i == 1 && j == 4 {
                    continue;
                }
                let img = act(&round_curve(4, i, j).unwrap(), &d).unwrap();
                assert_eq!(img, round_curve(4, 5 - j, 5 - i).unwrap());
            }
        }
    }

    #[test]
    fn rotation_shifts_round_blocks_down() {
        // sigma_1 sigma_2 sigma_3 sends puncture k to k-1 (k >= 2)
        let rot = w(4, "s1 s2 s3");
        assert_eq!(
            act(&round_curve(4, 2, 3).unwrap(), &rot).unwrap(),
            round_curve(4, 1, 2).unwrap()
        );
        assert_eq!(
            act(&round_curve(4, 2, 4).unwrap(), &rot).unwrap(),
            round_curve(4, 1, 3).unwrap()
        );
    }

    #[test]
    fn generator_fixes_its_own_block() {
        let c = round_curve(4, 1, 2).unwrap();
        assert_eq!(act(&c, &w(4, "s1")).unwrap(), c);
        assert_eq!(is_round(&act(&c, &w(4, "s1")).unwrap()), Some((1, 2)));
    }

    #[test]
    fn figure_one_complexities() {
        // a round curve, an almost-round curve sent to round by s1 s3, and
        // the complexity-2 image of the round curve under sigma_2^{-2}
        let first = round_curve(4, 1, 2).unwrap();
        assert_eq!(complexity_upto(&first, 3), Some(0));

        let witness = w(4, "s1 s3");
        let middle = act(&round_curve(4, 2, 3).unwrap(), &witness.inverse()).unwrap();
        assert_eq!(complexity_upto(&middle, 3), Some(1));
        assert!(is_round(&act(&middle, &witness).unwrap()).is_some());
        let found = is_almost_round(&middle).expect("complexity 1");
        assert!(is_round(&act_simple(&middle, &found)).is_some());

        let third = act(&first, &w(4, "S2 S2")).unwrap();
        assert_eq!(complexity_upto(&third, 3), Some(2));
        assert_eq!(is_almost_round(&third), None);
        assert_eq!(is_round(&third), None);
    }

    #[test]
    fn twists_inside_a_round_curve_fix_it() {
        // sigma_2 is supported inside the disk bounded by the circle around
        // punctures 1..3, so it fixes that curve
        let c = round_curve(4, 1, 3).unwrap();
        assert_eq!(act(&c, &w(4, "S2 S2")).unwrap(), c);
        assert_eq!(act(&c, &w(4, "s2")).unwrap(), c);
    }

    #[test]
    fn almost_round_returns_none_on_round() {
        assert!(is_almost_round(&round_curve(4, 2, 3).unwrap()).is_none());
    }

    #[test]
    fn one_simple_costs_at_most_one() {
        for r in all_round_curves(4) {
            for s in SimpleBraid::all(4) {
                let img = act_simple(&r, &s);
                let c = complexity_upto(&img, 1).expect("at most 1");
                assert!(c <= 1);
            }
        }
    }

    #[test]
    fn catalogue_has_six_three_puncture_curves() {
        let cat = three_puncture_catalogue(4).unwrap();
        assert_eq!(cat.three_puncture_set.len(), 6);
        let mut rounds: Vec<_> = cat
            .three_puncture_set
            .iter()
            .filter_map(is_round)
            .collect();
        rounds.sort();
        assert_eq!(rounds, vec![(1, 3), (2, 4)]);
        let almost: Vec<_> = cat
            .three_puncture_set
            .iter()
            .filter(|c| is_round(c).is_none())
            .collect();
        assert_eq!(almost.len(), 4);
        for c in &almost {
            assert!(c.enclosed() == 3);
            assert!(is_almost_round(c).is_some());
        }
        assert!(three_puncture_catalogue(3).is_err());
    }

    #[test]
    fn track_through_identity_returns_curve() {
        let c = round_curve(4, 1, 2).unwrap();
        let nf = NormalForm::identity(4);
        assert_eq!(track_through_factors(&c, &nf, 3), Some(c));
    }

    #[test]
    fn curves_of_bounded_complexity_contains_catalogue() {
        let all2 = curves_of_complexity_upto(4, 2);
        let cat = three_puncture_catalogue(4).unwrap();
        for c in &cat.three_puncture_set {
            assert!(all2.contains(c));
        }
        for c in &all2 {
            assert!(complexity_upto(c, 2).is_some());
        }
        // round curves have complexity 0 and appear exactly once each
        assert!(all2.len() > 5);
    }
}
