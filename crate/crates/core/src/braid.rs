//! Classical Garside structure on the braid group `B_n`.
//!
//! A simple element is a permutation braid, stored in one-line notation:
//! `perm[pos]` is the strand (0-based) found at position `pos` after
//! applying the braid's crossings left to right to `0, 1, …, n-1`.
//! With this convention `(ab)[pos] = a[b[pos]]`.

use std::fmt;

use crate::error::{GarsideError, Result};
use crate::structure::GarsideStructure;

/// Largest supported strand count.
pub const MAX_STRANDS: usize = 32;

/// Permutation braid in one-line notation, padded with zeros past `n`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Perm {
    n: u8,
    data: [u8; MAX_STRANDS],
}

impl Perm {
    fn identity(n: usize) -> Self {
        let mut data = [0u8; MAX_STRANDS];
        for (i, d) in data.iter_mut().enumerate().take(n) {
            *d = i as u8;
        }
        Perm { n: n as u8, data }
    }

    fn from_fn(n: usize, f: impl Fn(usize) -> usize) -> Self {
        let mut data = [0u8; MAX_STRANDS];
        for (i, d) in data.iter_mut().enumerate().take(n) {
            *d = f(i) as u8;
        }
        Perm { n: n as u8, data }
    }

    /// One-line notation, 0-based.
    pub fn as_slice(&self) -> &[u8] {
        &self.data[..self.n as usize]
    }

    fn get(&self, i: usize) -> usize {
        self.data[i] as usize
    }

    fn inverse(&self) -> Self {
        let n = self.n as usize;
        let mut data = [0u8; MAX_STRANDS];
        for i in 0..n {
            data[self.get(i)] = i as u8;
        }
        Perm { n: self.n, data }
    }

    fn inversions(&self) -> usize {
        let s = self.as_slice();
        let mut count = 0;
        for i in 0..s.len() {
            for j in i + 1..s.len() {
                if s[i] > s[j] {
                    count += 1;
                }
            }
        }
        count
    }

    fn compose(&self, b: &Perm) -> Perm {
        Perm::from_fn(self.n as usize, |pos| self.get(b.get(pos)))
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm{:?}", self.as_slice())
    }
}

/// `B_n` with the classical structure: atoms `σ_1..σ_{n-1}`, Δ the half twist.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BraidGroup {
    n: usize,
}

impl BraidGroup {
    pub fn new(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(GarsideError::InvalidRank {
                family: "braid",
                min: 2,
                got: n,
            });
        }
        if n > MAX_STRANDS {
            return Err(GarsideError::RankTooLarge {
                family: "braid",
                max: MAX_STRANDS,
                got: n,
            });
        }
        Ok(BraidGroup { n })
    }

    pub fn strands(&self) -> usize {
        self.n
    }

    /// The simple element with the given one-line permutation (0-based).
    pub fn simple_from_permutation(&self, perm: &[u8]) -> Option<Perm> {
        if perm.len() != self.n {
            return None;
        }
        let mut seen = vec![false; self.n];
        for &v in perm {
            if v as usize >= self.n || std::mem::replace(&mut seen[v as usize], true) {
                return None;
            }
        }
        Some(Perm::from_fn(self.n, |i| perm[i] as usize))
    }
}

/// Shorthand for [`BraidGroup::new`].
pub fn braid(n: usize) -> Result<BraidGroup> {
    BraidGroup::new(n)
}

impl GarsideStructure for BraidGroup {
    type Simple = Perm;

    fn descriptor(&self) -> String {
        format!("braid:{}", self.n)
    }

    fn atom_count(&self) -> usize {
        self.n - 1
    }

    fn atom(&self, i: usize) -> Perm {
        assert!(i + 1 < self.n, "atom index out of range");
        let mut p = Perm::identity(self.n);
        p.data.swap(i, i + 1);
        p
    }

    fn identity(&self) -> Perm {
        Perm::identity(self.n)
    }

    fn delta(&self) -> Perm {
        let n = self.n;
        Perm::from_fn(n, |pos| n - 1 - pos)
    }

    fn delta_length(&self) -> usize {
        self.n * (self.n - 1) / 2
    }

    fn letter_length(&self, s: &Perm) -> usize {
        s.inversions()
    }

    fn is_prefix(&self, a: &Perm, b: &Perm) -> bool {
        self.left_quotient(a, b).is_some()
    }

    fn is_suffix(&self, a: &Perm, b: &Perm) -> bool {
        self.right_quotient(b, a).is_some()
    }

    fn left_quotient(&self, a: &Perm, b: &Perm) -> Option<Perm> {
        let q = a.inverse().compose(b);
        (a.inversions() + q.inversions() == b.inversions()).then_some(q)
    }

    fn right_quotient(&self, a: &Perm, b: &Perm) -> Option<Perm> {
        let q = a.compose(&b.inverse());
        (q.inversions() + b.inversions() == a.inversions()).then_some(q)
    }

    fn product(&self, a: &Perm, b: &Perm) -> Option<Perm> {
        let p = a.compose(b);
        (a.inversions() + b.inversions() == p.inversions()).then_some(p)
    }

    fn right_complement(&self, a: &Perm) -> Perm {
        let inv = a.inverse();
        let n = self.n;
        Perm::from_fn(n, |pos| inv.get(n - 1 - pos))
    }

    fn left_complement(&self, a: &Perm) -> Perm {
        let inv = a.inverse();
        let n = self.n;
        Perm::from_fn(n, |pos| n - 1 - inv.get(pos))
    }

    fn tau(&self, a: &Perm, k: i64) -> Perm {
        if k.rem_euclid(2) == 0 {
            return *a;
        }
        let n = self.n;
        Perm::from_fn(n, |pos| n - 1 - a.get(n - 1 - pos))
    }

    fn simple_count(&self) -> u128 {
        (1..=self.n as u128).product()
    }

    /// Lexicographic order of the one-line notation.
    fn all_simples(&self) -> Vec<Perm> {
        let mut cur: Vec<u8> = (0..self.n as u8).collect();
        let mut out = Vec::new();
        loop {
            out.push(Perm::from_fn(self.n, |i| cur[i] as usize));
            // next permutation
            let Some(i) = (0..self.n - 1).rev().find(|&i| cur[i] < cur[i + 1]) else {
                return out;
            };
            let j = (i + 1..self.n).rev().find(|&j| cur[j] > cur[i]).unwrap();
            cur.swap(i, j);
            cur[i + 1..].reverse();
        }
    }

    // σ_i ≼ s iff strand i+1 comes before strand i.
    fn atom_is_prefix(&self, i: usize, s: &Perm) -> bool {
        let sl = s.as_slice();
        let pi = sl.iter().position(|&v| v as usize == i).unwrap();
        let pj = sl.iter().position(|&v| v as usize == i + 1).unwrap();
        pj < pi
    }

    fn atom_is_suffix(&self, i: usize, s: &Perm) -> bool {
        s.get(i) > s.get(i + 1)
    }

    fn is_delta(&self, a: &Perm) -> bool {
        let n = self.n;
        (0..n).all(|pos| a.get(pos) == n - 1 - pos)
    }

    fn is_identity(&self, a: &Perm) -> bool {
        (0..self.n).all(|pos| a.get(pos) == pos)
    }
}
