//! The contract every concrete Garside structure provides.

use std::fmt::Debug;
use std::hash::Hash;

use crate::error::{GarsideError, Result};

/// Default cap on the number of simple elements an exhaustive search may enumerate.
pub const DEFAULT_SIMPLE_CAP: u64 = 3_628_800;

/// A Garside structure of finite type.
///
/// Simple elements are the divisors of Δ. Atoms are indexed `0..atom_count()`,
/// and the user-facing atom `i` (as in `σ_i`) is index `i - 1`.
///
/// Implementors supply the lattice primitives on simples; meets, joins,
/// left-weightedness and canonical spellings are derived from them.
pub trait GarsideStructure: Copy + Eq + Ord + Hash + Debug + Send + Sync + 'static {
    type Simple: Clone + Eq + Ord + Hash + Debug + Send + Sync;

    /// Descriptor such as `braid:4` or `zn:3`.
    fn descriptor(&self) -> String;
    fn atom_count(&self) -> usize;
    fn atom(&self, i: usize) -> Self::Simple;
    fn identity(&self) -> Self::Simple;
    fn delta(&self) -> Self::Simple;
    /// Letter length ||Δ||.
    fn delta_length(&self) -> usize;
    fn letter_length(&self, s: &Self::Simple) -> usize;

    /// `a ≼ b`.
    fn is_prefix(&self, a: &Self::Simple, b: &Self::Simple) -> bool;
    /// `b ≽ a`, i.e. `a` is a suffix of `b`.
    fn is_suffix(&self, a: &Self::Simple, b: &Self::Simple) -> bool;
    /// `a⁻¹b` when `a ≼ b`.
    fn left_quotient(&self, a: &Self::Simple, b: &Self::Simple) -> Option<Self::Simple>;
    /// `ab⁻¹` when `b` is a suffix of `a`.
    fn right_quotient(&self, a: &Self::Simple, b: &Self::Simple) -> Option<Self::Simple>;
    /// `ab` when the product is simple.
    fn product(&self, a: &Self::Simple, b: &Self::Simple) -> Option<Self::Simple>;
    /// `∂(a) = a⁻¹Δ`.
    fn right_complement(&self, a: &Self::Simple) -> Self::Simple;
    /// `∂⁻¹(a) = Δa⁻¹`.
    fn left_complement(&self, a: &Self::Simple) -> Self::Simple;
    /// `τ^k(a)`, where `τ(a) = Δ⁻¹aΔ`.
    fn tau(&self, a: &Self::Simple, k: i64) -> Self::Simple;

    /// Size of the interval `[1, Δ]`.
    fn simple_count(&self) -> u128;
    /// Every simple element in a fixed order. Implementors only need
    /// [`GarsideStructure::all_simples`]; the cap check lives here.
    fn enumerate_simples(&self, cap: u64) -> Result<Vec<Self::Simple>> {
        let count = self.simple_count();
        if count > cap as u128 {
            return Err(GarsideError::SimpleCapExceeded { count, cap });
        }
        Ok(self.all_simples())
    }
    fn all_simples(&self) -> Vec<Self::Simple>;

    fn is_identity(&self, a: &Self::Simple) -> bool {
        *a == self.identity()
    }

    fn is_delta(&self, a: &Self::Simple) -> bool {
        *a == self.delta()
    }

    /// `σ_i ≼ s`.
    fn atom_is_prefix(&self, i: usize, s: &Self::Simple) -> bool {
        self.is_prefix(&self.atom(i), s)
    }

    /// `s ≽ σ_i`.
    fn atom_is_suffix(&self, i: usize, s: &Self::Simple) -> bool {
        self.is_suffix(&self.atom(i), s)
    }

    /// Greatest common prefix, by greedy atom accumulation.
    fn meet(&self, a: &Self::Simple, b: &Self::Simple) -> Self::Simple {
        let mut m = self.identity();
        let (mut qa, mut qb) = (a.clone(), b.clone());
        'grow: loop {
            for i in 0..self.atom_count() {
                if self.atom_is_prefix(i, &qa) && self.atom_is_prefix(i, &qb) {
                    let t = self.atom(i);
                    m = self.product(&m, &t).expect("meet stays below Δ");
                    qa = self.left_quotient(&t, &qa).expect("atom divides");
                    qb = self.left_quotient(&t, &qb).expect("atom divides");
                    continue 'grow;
                }
            }
            return m;
        }
    }

    /// Greatest common suffix.
    fn suffix_meet(&self, a: &Self::Simple, b: &Self::Simple) -> Self::Simple {
        let mut m = self.identity();
        let (mut qa, mut qb) = (a.clone(), b.clone());
        'grow: loop {
            for i in 0..self.atom_count() {
                if self.atom_is_suffix(i, &qa) && self.atom_is_suffix(i, &qb) {
                    let t = self.atom(i);
                    m = self.product(&t, &m).expect("meet stays below Δ");
                    qa = self.right_quotient(&qa, &t).expect("atom divides");
                    qb = self.right_quotient(&qb, &t).expect("atom divides");
                    continue 'grow;
                }
            }
            return m;
        }
    }

    /// Least common multiple in the prefix order: `∂⁻¹(∂a ∧ˢ ∂b)`,
    /// where `∧ˢ` is the suffix meet.
    fn join(&self, a: &Self::Simple, b: &Self::Simple) -> Self::Simple {
        let s = self.suffix_meet(&self.right_complement(a), &self.right_complement(b));
        self.left_complement(&s)
    }

    /// `∂(a) ∧ b = 1`.
    fn is_left_weighted(&self, a: &Self::Simple, b: &Self::Simple) -> bool {
        let d = self.right_complement(a);
        (0..self.atom_count()).all(|i| !(self.atom_is_prefix(i, &d) && self.atom_is_prefix(i, b)))
    }

    /// Lexicographically least positive word (0-based atom indices).
    fn word(&self, s: &Self::Simple) -> Vec<usize> {
        let mut out = Vec::new();
        let mut rest = s.clone();
        while !self.is_identity(&rest) {
            let i = (0..self.atom_count())
                .find(|&i| self.atom_is_prefix(i, &rest))
                .expect("nontrivial simple has an atom prefix");
            rest = self.left_quotient(&self.atom(i), &rest).expect("atom divides");
            out.push(i);
        }
        out
    }

    /// Simple element spelled by a positive word, or `None` if the word is not simple.
    fn simple_from_word(&self, word: &[usize]) -> Option<Self::Simple> {
        let mut s = self.identity();
        for &i in word {
            if i >= self.atom_count() {
                return None;
            }
            s = self.product(&s, &self.atom(i))?;
        }
        Some(s)
    }

    /// Least `e ≥ 1` with `τ^e = id`, found by iterating τ on the atoms.
    fn tau_order(&self) -> usize {
        let atoms: Vec<_> = (0..self.atom_count()).map(|i| self.atom(i)).collect();
        let mut cur = atoms.clone();
        let mut e = 1;
        loop {
            cur = cur.iter().map(|a| self.tau(a, 1)).collect();
            if cur == atoms {
                return e;
            }
            e += 1;
        }
    }
}
