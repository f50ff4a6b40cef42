//! Reduced words in a free group and the braid action on them.
//!
//! The braid group on `n` strands acts on the free group generated by the
//! puncture loops `x_1 .. x_n`: the generator `sigma_i` maps
//! `x_i -> x_i x_{i+1} x_i^{-1}`, `x_{i+1} -> x_i` and fixes the rest. This
//! action is faithful, which makes it a convenient independent equality
//! oracle for braid words, and it is how curves on the punctured disk are
//! moved around.
//!
//! Letters are nonzero `i32`: `+g` for `x_g`, `-g` for `x_g^{-1}` (1-based).

/// Push one letter onto a reduced word, keeping it reduced.
pub fn push_reduced(word: &mut Vec<i32>, letter: i32) {
    debug_assert!(letter != 0);
    if word.last() == Some(&-letter) {
        word.pop();
    } else {
        word.push(letter);
    }
}

/// Free reduction of an arbitrary letter sequence.
pub fn reduce(letters: &[i32]) -> Vec<i32> {
    let mut out = Vec::with_capacity(letters.len());
    for &l in letters {
        push_reduced(&mut out, l);
    }
    out
}

/// Inverse of a (reduced) word.
pub fn inverse(word: &[i32]) -> Vec<i32> {
    word.iter().rev().map(|&l| -l).collect()
}

/// Apply the action of the braid letter `sigma_i^{sign}` to a reduced word,
/// returning a reduced word.
pub fn apply_braid_letter(word: &[i32], i: usize, positive: bool) -> Vec<i32> {
    let a = i as i32; // x_i
    let b = (i + 1) as i32; // x_{i+1}
    let mut out = Vec::with_capacity(word.len() * 3);
    for &l in word {
        if positive {
            // x_i -> x_i x_{i+1} x_i^{-1}, x_{i+1} -> x_i
            if l == a {
                push_reduced(&mut out, a);
                push_reduced(&mut out, b);
                push_reduced(&mut out, -a);
            } else if l == -a {
                push_reduced(&mut out, a);
                push_reduced(&mut out, -b);
                push_reduced(&mut out, -a);
            } else if l == b {
                push_reduced(&mut out, a);
            } else if l == -b {
                push_reduced(&mut out, -a);
            } else {
                push_reduced(&mut out, l);
            }
        } else {
            // x_i -> x_{i+1}, x_{i+1} -> x_{i+1}^{-1} x_i x_{i+1}
            if l == a {
                push_reduced(&mut out, b);
            } else if l == -a {
                push_reduced(&mut out, -b);
            } else if l == b {
                push_reduced(&mut out, -b);
                push_reduced(&mut out, a);
                push_reduced(&mut out, b);
            } else if l == -b {
                push_reduced(&mut out, -b);
                push_reduced(&mut out, -a);
                push_reduced(&mut out, b);
            } else {
                push_reduced(&mut out, l);
            }
        }
    }
    out
}

/// Apply a whole braid word (letters as in [`crate::word::BraidWord`])
/// left to right.
pub fn apply_braid_word(word: &[i32], braid_letters: &[i32]) -> Vec<i32> {
    let mut cur = reduce(word);
    for &l in braid_letters {
        cur = apply_braid_letter(&cur, l.unsigned_abs() as usize, l > 0);
    }
    cur
}

/// Booth's algorithm: index of the least cyclic rotation.
fn least_rotation(w: &[i32]) -> usize {
    let n = w.len();
    let at = |i: usize| w[i % n];
    let mut f: Vec<isize> = vec![-1; 2 * n];
    let mut k: usize = 0;
    for j in 1..2 * n {
        let mut i = f[j - k - 1];
        while i != -1 && at(j) != at(k + i as usize + 1) {
            if at(j) < at(k + i as usize + 1) {
                k = j - i as usize - 1;
            }
            i = f[i as usize];
        }
        if i == -1 && at(j) != at(k) {
            if at(j) < at(k) {
                k = j;
            }
            f[j - k] = -1;
        } else {
            f[j - k] = i + 1;
        }
    }
    k
}

fn rotate_to(w: &[i32], k: usize) -> Vec<i32> {
    let mut out = w[k..].to_vec();
    out.extend_from_slice(&w[..k]);
    out
}

/// Canonical form of a cyclic word up to rotation and inversion:
/// cyclically reduce, then take the lexicographically smallest rotation of
/// the word and of its inverse.
pub fn cyclic_canonical(word: &[i32]) -> Vec<i32> {
    let mut w = reduce(word);
    // cyclic reduction: strip cancelling first/last pairs
    let mut lo = 0usize;
    let mut hi = w.len();
    while hi - lo >= 2 && w[lo] == -w[hi - 1] {
        lo += 1;
        hi -= 1;
    }
    w = w[lo..hi].to_vec();
    if w.is_empty() {
        return w;
    }
    let a = rotate_to(&w, least_rotation(&w));
    let inv = inverse(&w);
    let b = rotate_to(&inv, least_rotation(&inv));
    if a <= b {
        a
    } else {
        b
    }
}

/// Exponent sum of generator `g` (1-based) in a word.
pub fn exponent_of(word: &[i32], g: usize) -> i64 {
    let g = g as i32;
    word.iter()
        .map(|&l| {
            if l == g {
                1
            } else if l == -g {
                -1
            } else {
                0
            }
        })
        .sum()
}
