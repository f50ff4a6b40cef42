//! Strand-level bookkeeping on braid words: signed crossing counts, linking
//! numbers, strand deletion, restriction to a sub-family of strands, and
//! cabling (replacing strands by parallel bundles).
//!
//! Strands are named by their starting positions (1-based). A letter
//! `sigma_i^{e}` crosses the strands currently occupying positions `i` and
//! `i+1` with sign `e`, then swaps them.

use crate::error::{Error, Result};
use crate::word::BraidWord;

/// Walk the word, calling `visit(strand_at_i, strand_at_i+1, sign)` for each
/// letter before performing the swap.
fn walk<F: FnMut(usize, usize, i64)>(word: &BraidWord, mut visit: F) {
    let n = word.n();
    let mut occupant: Vec<usize> = (0..=n).collect(); // occupant[pos] = strand name
    for &l in word.letters() {
        let i = l.unsigned_abs() as usize;
        let sign = if l > 0 { 1 } else { -1 };
        visit(occupant[i], occupant[i + 1], sign);
        occupant.swap(i, i + 1);
    }
}

/// Linking number of strands `i` and `j` in a pure braid: half the signed
/// count of crossings between them.
pub fn linking_number(word: &BraidWord, i: usize, j: usize) -> Result<i64> {
    let n = word.n();
    if i == 0 || i > n || j == 0 || j > n || i == j {
        return Err(Error::StrandOutOfRange {
            strand: if i == 0 || i > n { i } else { j },
            n,
        });
    }
    if !word.is_pure() {
        return Err(Error::NotPure);
    }
    Ok(pair_crossings(word, i, j) / 2)
}

/// Signed count of crossings between the two named strands (no purity
/// requirement; for pure braids this is twice the linking number).
pub fn pair_crossings(word: &BraidWord, i: usize, j: usize) -> i64 {
    let mut count = 0i64;
    walk(word, |a, b, sign| {
        if (a == i && b == j) || (a == j && b == i) {
            count += sign;
        }
    });
    count
}

/// Signed count of crossings involving the strand starting at position `k`.
pub fn outer_crossing_count(word: &BraidWord, k: usize) -> Result<i64> {
    if k == 0 || k > word.n() {
        return Err(Error::StrandOutOfRange {
            strand: k,
            n: word.n(),
        });
    }
    let mut count = 0i64;
    walk(word, |a, b, sign| {
        if a == k || b == k {
            count += sign;
        }
    });
    Ok(count)
}

/// Delete the strand starting (and ending) at position `k`: crossings
/// involving it are dropped, the rest are reindexed to `n-1` strands.
pub fn remove_strand(word: &BraidWord, k: usize) -> Result<BraidWord> {
    let n = word.n();
    if k == 0 || k > n {
        return Err(Error::StrandOutOfRange { strand: k, n });
    }
    if word.underlying_permutation().apply(k - 1) != k - 1 {
        return Err(Error::StrandNotReturning { strand: k });
    }
    let keep: Vec<usize> = (1..=n).filter(|&s| s != k).collect();
    Ok(restrict_to(word, &keep))
}

/// Restrict the braid to the named strands `keep` (sorted starting
/// positions): keep only crossings between two kept strands, with positions
/// renumbered among the kept strands.
///
/// This is the honest "forget the other strands" projection; it produces
/// the sub-braid the kept strands trace out.
pub fn restrict_to(word: &BraidWord, keep: &[usize]) -> BraidWord {
    let n = word.n();
    debug_assert!(keep.windows(2).all(|w| w[0] < w[1]));
    debug_assert!(keep.iter().all(|&s| s >= 1 && s <= n));
    let kept = {
        let mut v = vec![false; n + 1];
        for &s in keep {
            v[s] = true;
        }
        v
    };
    let mut occupant: Vec<usize> = (0..=n).collect();
    let mut letters: Vec<i32> = Vec::new();
    for &l in word.letters().iter() {
        let i = l.unsigned_abs() as usize;
        let (a, b) = (occupant[i], occupant[i + 1]);
        if kept[a] && kept[b] {
            // index among kept strands = #kept occupants at positions < i, +1
            let idx = (1..i).filter(|&p| kept[occupant[p]]).count() + 1;
            letters.push(if l > 0 { idx as i32 } else { -(idx as i32) });
        }
        occupant.swap(i, i + 1);
    }
    BraidWord::from_letters(keep.len().max(2), &letters)
        .expect("restricted letters are in range")
}

/// Collapse the strand block `lo..=hi` (consecutive starting positions) to a
/// single fat strand represented by the strand starting at `lo`.
///
/// Meaningful for braids preserving the corresponding tube: each outside
/// strand crossing the tube then contributes exactly one crossing with the
/// representative.
pub fn collapse_block(word: &BraidWord, lo: usize, hi: usize) -> BraidWord {
    let keep: Vec<usize> = (1..=word.n()).filter(|&s| s < lo || s > hi || s == lo).collect();
    restrict_to(word, &keep)
}

/// Cabling: replace the `k` strands of `word` by parallel bundles of the
/// given widths. Bundles carry no internal twisting; each crossing becomes
/// the positive (or negative) block crossing of the two bundle widths.
pub fn cable(word: &BraidWord, widths: &[usize]) -> BraidWord {
    let k = word.n();
    assert_eq!(widths.len(), k);
    assert!(widths.iter().all(|&w| w >= 1));
    let total: usize = widths.iter().sum();
    let mut widths_at: Vec<usize> = widths.to_vec(); // widths by current position (1-based offset below)
    let mut letters: Vec<i32> = Vec::new();
    for &l in word.letters() {
        let i = l.unsigned_abs() as usize; // positions i, i+1 cross
        let offset: usize = widths_at[..i - 1].iter().sum();
        let (wl, wr) = (widths_at[i - 1], widths_at[i]);
        if l > 0 {
            // right bundle (width wr) passes over, strand by strand
            for c in 1..=wr {
                for g in (offset + c..=offset + wl + c - 1).rev() {
                    letters.push(g as i32);
                }
            }
        } else {
            // inverse of the positive crossing from the swapped state
            let mut undo: Vec<i32> = Vec::new();
            for c in 1..=wl {
                for g in (offset + c..=offset + wr + c - 1).rev() {
                    undo.push(g as i32);
                }
            }
            letters.extend(undo.iter().rev().map(|&g| -g));
        }
        widths_at.swap(i - 1, i);
    }
    BraidWord::from_letters(total.max(2), &letters).expect("cabled letters are in range")
}
