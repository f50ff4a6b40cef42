//! Permutations of strand positions in one-line notation.
//!
//! Positions are 0-indexed internally. `map[i]` is the final position of
//! the strand that starts at position `i`.

use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    map: Vec<u8>,
}

impl Perm {
    pub fn identity(n: usize) -> Perm {
        Perm {
            map: (0..n as u8).collect(),
        }
    }

    /// Adjacent transposition swapping positions `i` and `i+1` (0-indexed).
    pub fn transposition(n: usize, i: usize) -> Perm {
        debug_assert!(i + 1 < n);
        let mut map: Vec<u8> = (0..n as u8).collect();
        map.swap(i, i + 1);
        Perm { map }
    }

    /// The order-reversing permutation `i -> n-1-i` (the permutation of the
    /// half twist).
    pub fn reversal(n: usize) -> Perm {
        Perm {
            map: (0..n as u8).rev().collect(),
        }
    }

    pub fn from_map(map: Vec<u8>) -> Perm {
        debug_assert!(Perm::is_valid(&map));
        Perm { map }
    }

    fn is_valid(map: &[u8]) -> bool {
        let n = map.len();
        let mut seen = vec![false; n];
        for &v in map {
            if (v as usize) >= n || seen[v as usize] {
                return false;
            }
            seen[v as usize] = true;
        }
        true
    }

    pub fn degree(&self) -> usize {
        self.map.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.map[i] as usize
    }

    /// Composition "first `self`, then `other`".
    pub fn then(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), other.degree());
        Perm {
            map: self.map.iter().map(|&v| other.map[v as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut map = vec![0u8; self.map.len()];
        for (i, &v) in self.map.iter().enumerate() {
            map[v as usize] = i as u8;
        }
        Perm { map }
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(i, &v)| i == v as usize)
    }

    /// Number of inversions, i.e. the length of the corresponding positive
    /// permutation braid in the Artin generators.
    pub fn inversions(&self) -> usize {
        let n = self.map.len();
        let mut count = 0;
        for i in 0..n {
            for j in i + 1..n {
                if self.map[i] > self.map[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// Descent positions: 0-indexed `i` with `map[i] > map[i+1]`.
    pub fn descents(&self) -> Vec<usize> {
        (0..self.map.len().saturating_sub(1))
            .filter(|&i| self.map[i] > self.map[i + 1])
            .collect()
    }

    /// Descents as a bitmask (bit `i` set when `map[i] > map[i+1]`).
    pub fn descent_mask(&self) -> u32 {
        let mut mask = 0u32;
        for i in 0..self.map.len() - 1 {
            if self.map[i] > self.map[i + 1] {
                mask |= 1 << i;
            }
        }
        mask
    }

    /// Descent mask of the inverse permutation, without materializing it.
    pub fn inverse_descent_mask(&self) -> u32 {
        // i is a descent of the inverse iff i+1 appears before i in one-line
        // notation; scan positions of consecutive values
        let n = self.map.len();
        let mut pos = [0u8; 32];
        for (p, &v) in self.map.iter().enumerate() {
            pos[v as usize] = p as u8;
        }
        let mut mask = 0u32;
        for v in 0..n - 1 {
            if pos[v] > pos[v + 1] {
                mask |= 1 << v;
            }
        }
        mask
    }

    /// In-place right multiplication by the transposition of values `i`,
    /// `i+1`: realizes `self.then(transposition(i))`.
    pub fn swap_values(&mut self, i: usize) {
        for v in self.map.iter_mut() {
            if *v as usize == i {
                *v = i as u8 + 1;
            } else if *v as usize == i + 1 {
                *v = i as u8;
            }
        }
    }

    /// In-place left multiplication by the transposition of positions `i`,
    /// `i+1`: realizes `transposition(i).then(self)`.
    pub fn swap_positions(&mut self, i: usize) {
        self.map.swap(i, i + 1);
    }

    /// Multiplicative order.
    pub fn order(&self) -> usize {
        let mut p = self.clone();
        let mut k = 1;
        while !p.is_identity() {
            p = p.then(self);
            k += 1;
        }
        k
    }

    /// All permutations of degree `n` (lexicographic order).
    pub fn all(n: usize) -> Vec<Perm> {
        let mut out = Vec::new();
        let mut cur: Vec<u8> = (0..n as u8).collect();
        loop {
            out.push(Perm { map: cur.clone() });
            // next permutation in lex order
            let mut i = n.wrapping_sub(2);
            while i != usize::MAX && cur[i] >= cur[i + 1] {
                i = i.wrapping_sub(1);
            }
            if i == usize::MAX {
                break;
            }
            let mut j = n - 1;
            while cur[j] <= cur[i] {
                j -= 1;
            }
            cur.swap(i, j);
            cur[i + 1..].reverse();
        }
        out
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, v) in self.map.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}", v + 1)?;
        }
        write!(f, "]")
    }
}
