//! Left normal forms `Δ^p x_1⋯x_r` and group arithmetic on them.

use std::fmt;

use crate::error::{GarsideError, Result};
use crate::structure::GarsideStructure;

/// An element of a Garside group in left normal form.
///
/// Invariants: no factor is 1 or Δ, and consecutive factors are left weighted.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NormalForm<G: GarsideStructure> {
    group: G,
    inf: i64,
    factors: Vec<G::Simple>,
}

impl<G: GarsideStructure> NormalForm<G> {
    pub fn identity(group: G) -> Self {
        NormalForm {
            group,
            inf: 0,
            factors: Vec::new(),
        }
    }

    pub fn delta_power(group: G, k: i64) -> Self {
        NormalForm {
            group,
            inf: k,
            factors: Vec::new(),
        }
    }

    pub fn from_simple(group: G, s: G::Simple) -> Self {
        let mut x = Self::identity(group);
        x.push_simple(s);
        x
    }

    /// Builds a normal form from already left-weighted factors, checking the invariants.
    pub fn from_parts(group: G, inf: i64, factors: Vec<G::Simple>) -> Option<Self> {
        let x = NormalForm {
            group,
            inf,
            factors,
        };
        x.is_valid().then_some(x)
    }

    /// Normal form of a word of signed atoms: `i` is `σ_i`, `-i` is `σ_i⁻¹` (1-based).
    pub fn from_word(group: G, word: &[i64]) -> Result<Self> {
        let mut x = Self::identity(group);
        for &letter in word {
            let i = letter.unsigned_abs() as usize;
            if letter == 0 || i > group.atom_count() {
                return Err(GarsideError::AtomOutOfRange {
                    index: letter,
                    atom_count: group.atom_count(),
                });
            }
            let a = group.atom(i - 1);
            if letter > 0 {
                x.push_simple(a);
            } else {
                // σ⁻¹ = Δ⁻¹ ∂⁻¹(σ)
                x.mul_delta_power(-1);
                x.push_simple(group.left_complement(&a));
            }
        }
        Ok(x)
    }

    pub fn group(&self) -> G {
        self.group
    }

    pub fn inf(&self) -> i64 {
        self.inf
    }

    pub fn sup(&self) -> i64 {
        self.inf + self.factors.len() as i64
    }

    /// Canonical length ℓ = r.
    pub fn canonical_length(&self) -> usize {
        self.factors.len()
    }

    pub fn factors(&self) -> &[G::Simple] {
        &self.factors
    }

    pub fn is_identity(&self) -> bool {
        self.inf == 0 && self.factors.is_empty()
    }

    pub fn is_delta_power(&self) -> bool {
        self.factors.is_empty()
    }

    /// Checks the normal-form invariants.
    pub fn is_valid(&self) -> bool {
        let g = &self.group;
        self.factors
            .iter()
            .all(|f| !g.is_identity(f) && !g.is_delta(f))
            && self
                .factors
                .windows(2)
                .all(|w| g.is_left_weighted(&w[0], &w[1]))
    }

    fn same_group(&self, other: &Self) -> Result<()> {
        if self.group == other.group {
            Ok(())
        } else {
            Err(GarsideError::StructureMismatch {
                left: self.group.descriptor(),
                right: other.group.descriptor(),
            })
        }
    }

    fn strip(&mut self) {
        let g = self.group;
        let lead = self.factors.iter().take_while(|f| g.is_delta(f)).count();
        if lead > 0 {
            self.factors.drain(..lead);
            self.inf += lead as i64;
        }
        while self.factors.last().is_some_and(|f| g.is_identity(f)) {
            self.factors.pop();
        }
    }

    /// Replaces `(a, b)` by `(a·c, c⁻¹b)` with `c = ∂(a) ∧ b`. Returns false when `c = 1`.
    fn local_transform(g: &G, f: &mut [G::Simple], j: usize) -> bool {
        let c = g.meet(&g.right_complement(&f[j]), &f[j + 1]);
        if g.is_identity(&c) {
            return false;
        }
        f[j] = g.product(&f[j], &c).expect("a·(∂a ∧ b) is simple");
        f[j + 1] = g.left_quotient(&c, &f[j + 1]).expect("c ≼ b");
        true
    }

    /// Right multiplication by a simple element: one right-to-left sweep.
    pub fn push_simple(&mut self, s: G::Simple) {
        let g = self.group;
        if g.is_identity(&s) {
            return;
        }
        if g.is_delta(&s) {
            self.mul_delta_power(1);
            return;
        }
        self.factors.push(s);
        let mut j = self.factors.len() - 1;
        while j > 0 && Self::local_transform(&g, &mut self.factors, j - 1) {
            j -= 1;
        }
        self.strip();
    }

    /// Left multiplication by a simple element: one left-to-right sweep.
    pub fn prepend_simple(&mut self, s: G::Simple) {
        let g = self.group;
        if g.is_identity(&s) {
            return;
        }
        if g.is_delta(&s) {
            self.inf += 1;
            return;
        }
        self.factors.insert(0, g.tau(&s, self.inf));
        let mut j = 0;
        while j + 1 < self.factors.len() && Self::local_transform(&g, &mut self.factors, j) {
            j += 1;
        }
        self.strip();
    }

    /// `X ↦ XΔ^k`.
    pub fn mul_delta_power(&mut self, k: i64) {
        if k == 0 {
            return;
        }
        let g = self.group;
        for f in &mut self.factors {
            *f = g.tau(f, k);
        }
        self.inf += k;
    }

    /// `X ↦ Δ^k X`.
    pub fn premul_delta_power(&mut self, k: i64) {
        self.inf += k;
    }

    /// Product `XY`.
    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.same_group(other)?;
        Ok(self.mul_unchecked(other))
    }

    /// Product `XY`. Panics if the operands live in different structures.
    pub fn multiply(&self, other: &Self) -> Self {
        self.checked_mul(other).expect("structure mismatch")
    }

    fn mul_unchecked(&self, other: &Self) -> Self {
        if other.factors.len() <= self.factors.len() {
            let mut x = self.clone();
            x.mul_delta_power(other.inf);
            for y in &other.factors {
                x.push_simple(y.clone());
            }
            x
        } else {
            let mut y = other.clone();
            for f in self.factors.iter().rev() {
                y.prepend_simple(f.clone());
            }
            y.premul_delta_power(self.inf);
            y
        }
    }

    /// `X⁻¹ = Δ^{-p-r} x_r'⋯x_1'` with `x_i' = τ^{-p-i}(∂(x_i))`.
    pub fn inverse(&self) -> Self {
        let g = self.group;
        let (p, r) = (self.inf, self.factors.len() as i64);
        let factors = self
            .factors
            .iter()
            .enumerate()
            .rev()
            .map(|(i, x)| g.tau(&g.right_complement(x), -p - (i as i64 + 1)))
            .collect();
        NormalForm {
            group: g,
            inf: -p - r,
            factors,
        }
    }

    /// `τ^k(X) = Δ^{-k} X Δ^k`.
    pub fn tau(&self, k: i64) -> Self {
        let g = self.group;
        NormalForm {
            group: g,
            inf: self.inf,
            factors: self.factors.iter().map(|f| g.tau(f, k)).collect(),
        }
    }

    /// `X^c = c⁻¹ X c`.
    pub fn conjugate(&self, c: &Self) -> Self {
        c.inverse().multiply(self).multiply(c)
    }

    /// `X^s` for a simple `s`.
    pub fn conjugate_simple(&self, s: &G::Simple) -> Self {
        let g = self.group;
        // s⁻¹ = Δ⁻¹ ∂⁻¹(s)
        let mut x = self.clone();
        x.prepend_simple(g.left_complement(s));
        x.premul_delta_power(-1);
        x.push_simple(s.clone());
        x
    }

    pub fn pow(&self, k: i64) -> Self {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = Self::identity(self.group);
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.multiply(&sq);
            }
            e >>= 1;
            if e > 0 {
                sq = sq.multiply(&sq);
            }
        }
        acc
    }

    /// ι(X): `τ^{-p}(x_1)`, or 1 when r = 0.
    pub fn initial_factor(&self) -> G::Simple {
        match self.factors.first() {
            Some(x) => self.group.tau(x, -self.inf),
            None => self.group.identity(),
        }
    }

    /// φ(X): `x_r`, or Δ when r = 0.
    pub fn final_factor(&self) -> G::Simple {
        match self.factors.last() {
            Some(x) => x.clone(),
            None => self.group.delta(),
        }
    }

    /// `X ∧ Δ^k` in the prefix order.
    pub fn meet_delta_power(&self, k: i64) -> Self {
        if k <= self.inf {
            return Self::delta_power(self.group, k);
        }
        let take = ((k - self.inf) as usize).min(self.factors.len());
        NormalForm {
            group: self.group,
            inf: self.inf,
            factors: self.factors[..take].to_vec(),
        }
    }

    /// A signed word representing the element (1-based atoms).
    pub fn to_word(&self) -> Vec<i64> {
        let g = self.group;
        let delta: Vec<i64> = g.word(&g.delta()).iter().map(|&i| i as i64 + 1).collect();
        let mut w = Vec::new();
        if self.inf >= 0 {
            for _ in 0..self.inf {
                w.extend(&delta);
            }
        } else {
            for _ in 0..-self.inf {
                w.extend(delta.iter().rev().map(|&i| -i));
            }
        }
        for f in &self.factors {
            w.extend(g.word(f).iter().map(|&i| i as i64 + 1));
        }
        w
    }
}

/// Spells a simple element as a positive word. Digits are concatenated when
/// every atom index is a single digit; otherwise they are space separated.
/// The identity is spelled `e`.
pub fn format_simple<G: GarsideStructure>(g: &G, s: &G::Simple) -> String {
    if g.is_identity(s) {
        return "e".to_string();
    }
    let letters: Vec<String> = g.word(s).iter().map(|i| (i + 1).to_string()).collect();
    if g.atom_count() <= 9 {
        letters.concat()
    } else {
        letters.join(" ")
    }
}

impl<G: GarsideStructure> fmt::Display for NormalForm<G> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "D^{}", self.inf)?;
        for x in &self.factors {
            write!(f, " . {}", format_simple(&self.group, x))?;
        }
        Ok(())
    }
}

impl<G: GarsideStructure> fmt::Debug for NormalForm<G> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.group.descriptor(), self)
    }
}

impl<G: GarsideStructure> serde::Serialize for NormalForm<G> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Normal form of a signed word.
pub fn normalize<G: GarsideStructure>(word: &[i64], group: G) -> Result<NormalForm<G>> {
    NormalForm::from_word(group, word)
}
