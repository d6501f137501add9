//! Brute-force models used as oracles. They share no code paths with the
//! library beyond element construction and the simple-element lattice
//! operations they are meant to check.
#![allow(dead_code)]

use std::collections::{HashSet, VecDeque};

use garside::{cycling, to_sss, BraidGroup, GarsideStructure, NormalForm, Perm};
use rand::Rng;

/// Line of strands after applying the crossings of `word` (0-based atoms) left to right.
pub fn line_of_word(n: usize, word: &[usize]) -> Vec<u8> {
    let mut line: Vec<u8> = (0..n as u8).collect();
    for &i in word {
        line.swap(i, i + 1);
    }
    line
}

pub fn crossings(line: &[u8]) -> usize {
    let mut c = 0;
    for i in 0..line.len() {
        for j in i + 1..line.len() {
            if line[i] > line[j] {
                c += 1;
            }
        }
    }
    c
}

/// A reduced word for a line, by bubble sort.
pub fn reduced_word(line: &[u8]) -> Vec<usize> {
    let mut l = line.to_vec();
    let mut swaps = Vec::new();
    while let Some(i) = (0..l.len() - 1).find(|&i| l[i] > l[i + 1]) {
        l.swap(i, i + 1);
        swaps.push(i);
    }
    swaps.reverse();
    swaps
}

pub fn all_lines(n: usize) -> Vec<Vec<u8>> {
    fn rec(n: usize, cur: &mut Vec<u8>, used: &mut Vec<bool>, out: &mut Vec<Vec<u8>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for v in 0..n {
            if !used[v] {
                used[v] = true;
                cur.push(v as u8);
                rec(n, cur, used, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(n, &mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Line of the product `ab` of two permutation braids.
pub fn line_product(a: &[u8], b: &[u8]) -> Vec<u8> {
    let mut l = a.to_vec();
    for i in reduced_word(b) {
        l.swap(i, i + 1);
    }
    l
}

/// `a ≼ b`: some positive `q` has `aq = b` with crossings adding up.
pub fn oracle_prefix(n: usize, a: &[u8], b: &[u8]) -> bool {
    all_lines(n)
        .iter()
        .any(|q| line_product(a, q) == b && crossings(a) + crossings(q) == crossings(b))
}

pub fn line_of(g: &BraidGroup, s: &Perm) -> Vec<u8> {
    line_of_word(g.strands(), &g.word(s))
}

pub fn simple_of_line(g: &BraidGroup, line: &[u8]) -> Perm {
    g.simple_from_word(&reduced_word(line)).expect("reduced words are simple")
}

/// Normal form by the textbook procedure: collect Δ's in front, then repeat
/// full passes of local transformations until every pair is left weighted.
pub fn naive_normal_form<G: GarsideStructure>(g: G, word: &[i64]) -> NormalForm<G> {
    let mut p: i64 = 0;
    let mut factors: Vec<G::Simple> = Vec::new();
    for &l in word {
        let a = g.atom(l.unsigned_abs() as usize - 1);
        if l > 0 {
            factors.push(a);
        } else {
            // x Δ⁻¹ = Δ⁻¹ τ(x)
            for f in factors.iter_mut() {
                *f = g.tau(f, 1);
            }
            p -= 1;
            factors.push(g.left_complement(&a));
        }
    }
    loop {
        let mut changed = false;
        // pull Δ factors to the front: x Δ = Δ τ(x)
        if let Some(i) = factors.iter().position(|f| g.is_delta(f)) {
            factors.remove(i);
            for f in factors[..i].iter_mut() {
                *f = g.tau(f, -1);
            }
            p += 1;
            continue;
        }
        if let Some(i) = factors.iter().position(|f| g.is_identity(f)) {
            factors.remove(i);
            continue;
        }
        for j in 0..factors.len().saturating_sub(1) {
            let c = g.meet(&g.right_complement(&factors[j]), &factors[j + 1]);
            if !g.is_identity(&c) {
                factors[j] = g.product(&factors[j], &c).unwrap();
                factors[j + 1] = g.left_quotient(&c, &factors[j + 1]).unwrap();
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    NormalForm::from_parts(g, p, factors).expect("oracle output is a normal form")
}

/// Super summit set by closure under every simple conjugation,
/// keeping conjugates with the summit infimum and supremum.
pub fn brute_sss<G: GarsideStructure>(x: &NormalForm<G>) -> HashSet<NormalForm<G>> {
    let g = x.group();
    let (rep, _) = to_sss(x).unwrap();
    let simples = g.all_simples();
    let mut seen = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(rep.clone());
    queue.push_back(rep.clone());
    while let Some(y) = queue.pop_front() {
        for s in &simples {
            let z = y.conjugate(&NormalForm::from_simple(g, s.clone()));
            if z.inf() == rep.inf() && z.sup() == rep.sup() && seen.insert(z.clone()) {
                queue.push_back(z);
            }
        }
    }
    seen
}

/// Elements of the super summit set that cycling brings back to themselves.
pub fn brute_uss<G: GarsideStructure>(x: &NormalForm<G>) -> HashSet<NormalForm<G>> {
    let sss = brute_sss(x);
    sss.iter()
        .filter(|y| {
            let mut z = cycling(y);
            for _ in 0..sss.len() {
                if z == **y {
                    return true;
                }
                z = cycling(&z);
            }
            false
        })
        .cloned()
        .collect()
}

/// Minimal simple elements of `y` inside a known ultra summit set.
pub fn brute_minimal_simples<G: GarsideStructure>(
    y: &NormalForm<G>,
    uss: &HashSet<NormalForm<G>>,
) -> Vec<G::Simple> {
    let g = y.group();
    let good: Vec<G::Simple> = g
        .all_simples()
        .into_iter()
        .filter(|s| !g.is_identity(s))
        .filter(|s| uss.contains(&y.conjugate(&NormalForm::from_simple(g, s.clone()))))
        .collect();
    let mut out: Vec<G::Simple> = good
        .iter()
        .filter(|s| {
            !good.iter().any(|t| {
                t != *s && {
                    // t ≺ s via the positive quotient
                    g.left_quotient(t, s).is_some()
                }
            })
        })
        .cloned()
        .collect();
    out.sort();
    out
}

/// Random signed word of the given length over `atoms` generators.
pub fn random_word(rng: &mut impl Rng, atoms: usize, len: usize) -> Vec<i64> {
    (0..len)
        .map(|_| {
            let a = rng.gen_range(1..=atoms as i64);
            if rng.gen_bool(0.5) {
                a
            } else {
                -a
            }
        })
        .collect()
}
