//! Cycling, decycling, summit sets and the moves between them.

use std::collections::HashMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{GarsideError, Result};
use crate::normal_form::NormalForm;
use crate::structure::GarsideStructure;
use crate::uss::SearchOptions;

/// How a conjugation step was produced.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum StepKind {
    Cycling,
    Decycling,
    MinimalSimple,
    Tau,
    Composite,
}

/// A verified conjugation `target = conjugator⁻¹ · source · conjugator`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConjugationStep<G: GarsideStructure> {
    source: NormalForm<G>,
    conjugator: NormalForm<G>,
    target: NormalForm<G>,
    kind: StepKind,
}

impl<G: GarsideStructure> ConjugationStep<G> {
    pub fn new(
        source: NormalForm<G>,
        conjugator: NormalForm<G>,
        target: NormalForm<G>,
        kind: StepKind,
    ) -> Result<Self> {
        if source.conjugate(&conjugator) != target {
            return Err(GarsideError::ConjugationMismatch("step target"));
        }
        Ok(ConjugationStep {
            source,
            conjugator,
            target,
            kind,
        })
    }

    /// Chains consecutive steps into one composite step.
    pub fn compose(steps: &[ConjugationStep<G>]) -> Option<Result<Self>> {
        let first = steps.first()?;
        let mut c = NormalForm::identity(first.source.group());
        for w in steps.windows(2) {
            if w[0].target != w[1].source {
                return Some(Err(GarsideError::ConjugationMismatch("steps do not chain")));
            }
        }
        for s in steps {
            c = c.multiply(&s.conjugator);
        }
        let target = steps.last().unwrap().target.clone();
        Some(Self::new(first.source.clone(), c, target, StepKind::Composite))
    }

    pub fn source(&self) -> &NormalForm<G> {
        &self.source
    }

    pub fn conjugator(&self) -> &NormalForm<G> {
        &self.conjugator
    }

    pub fn target(&self) -> &NormalForm<G> {
        &self.target
    }

    pub fn kind(&self) -> StepKind {
        self.kind
    }
}

/// `c(X) = X^{ι(X)} = Δ^p x_2⋯x_r τ^{-p}(x_1)`.
pub fn cycling<G: GarsideStructure>(x: &NormalForm<G>) -> NormalForm<G> {
    if x.is_delta_power() {
        return x.clone();
    }
    let g = x.group();
    let rest = NormalForm::from_parts(g, x.inf(), x.factors()[1..].to_vec())
        .expect("a tail of a normal form is normal");
    let mut y = rest;
    y.push_simple(x.initial_factor());
    y
}

/// `d(X) = X^{φ(X)⁻¹} = x_r Δ^p x_1⋯x_{r-1}`.
pub fn decycling<G: GarsideStructure>(x: &NormalForm<G>) -> NormalForm<G> {
    if x.is_delta_power() {
        return x.clone();
    }
    let g = x.group();
    let r = x.canonical_length();
    let mut y = NormalForm::from_parts(g, x.inf(), x.factors()[..r - 1].to_vec())
        .expect("a head of a normal form is normal");
    y.prepend_simple(x.final_factor());
    y
}

fn cycling_conjugator<G: GarsideStructure>(x: &NormalForm<G>) -> NormalForm<G> {
    NormalForm::from_simple(x.group(), x.initial_factor())
}

fn decycling_conjugator<G: GarsideStructure>(x: &NormalForm<G>) -> NormalForm<G> {
    // φ⁻¹ = Δ⁻¹ ∂⁻¹(φ)
    let g = x.group();
    let mut c = NormalForm::delta_power(g, -1);
    c.push_simple(g.left_complement(&x.final_factor()));
    c
}

/// A sequence of cycling/decycling moves from a start element.
#[derive(Clone, Debug)]
pub(crate) struct Path<G: GarsideStructure> {
    pub start: NormalForm<G>,
    /// Kind, conjugator and the element reached.
    pub moves: Vec<(StepKind, NormalForm<G>, NormalForm<G>)>,
}

impl<G: GarsideStructure> Path<G> {
    fn new(start: NormalForm<G>) -> Self {
        Path {
            start,
            moves: Vec::new(),
        }
    }

    pub fn end(&self) -> &NormalForm<G> {
        self.moves.last().map_or(&self.start, |m| &m.2)
    }

    fn step(&self, kind: StepKind) -> (StepKind, NormalForm<G>, NormalForm<G>) {
        let y = self.end();
        match kind {
            StepKind::Cycling => (kind, cycling_conjugator(y), cycling(y)),
            StepKind::Decycling => (kind, decycling_conjugator(y), decycling(y)),
            _ => unreachable!("paths only cycle and decycle"),
        }
    }

    pub fn conjugator(&self) -> NormalForm<G> {
        let mut c = NormalForm::identity(self.start.group());
        for (_, m, _) in &self.moves {
            c = c.multiply(m);
        }
        c
    }

    pub fn steps(&self) -> Result<Vec<ConjugationStep<G>>> {
        let mut src = self.start.clone();
        let mut out = Vec::with_capacity(self.moves.len());
        for (kind, c, t) in &self.moves {
            out.push(ConjugationStep::new(src, c.clone(), t.clone(), *kind)?);
            src = t.clone();
        }
        Ok(out)
    }
}

/// Applies moves of one kind while they improve `score`, giving up after
/// ||Δ|| consecutive moves without improvement.
fn improve<G: GarsideStructure>(
    path: &mut Path<G>,
    kind: StepKind,
    score: impl Fn(&NormalForm<G>) -> i64,
    what: &'static str,
) -> Result<()> {
    let d = path.start.group().delta_length();
    let guard = path.end().canonical_length() + 1;
    for _ in 0..=guard {
        let base = score(path.end());
        let mut trial = Vec::new();
        let mut probe = Path::new(path.end().clone());
        let mut improved = false;
        for _ in 0..d {
            let m = probe.step(kind);
            probe.moves.push(m.clone());
            trial.push(m);
            if score(probe.end()) > base {
                improved = true;
                break;
            }
        }
        if !improved {
            return Ok(());
        }
        path.moves.extend(trial);
    }
    Err(GarsideError::IterationGuard(what))
}

pub(crate) fn sss_path<G: GarsideStructure>(x: &NormalForm<G>) -> Result<Path<G>> {
    let mut path = Path::new(x.clone());
    improve(&mut path, StepKind::Cycling, |y| y.inf(), "to_sss cycling")?;
    improve(&mut path, StepKind::Decycling, |y| -y.sup(), "to_sss decycling")?;
    Ok(path)
}

/// An element of the super summit set of `x`, with a conjugator `c` such that `x^c` is that element.
pub fn to_sss<G: GarsideStructure>(x: &NormalForm<G>) -> Result<(NormalForm<G>, NormalForm<G>)> {
    let path = sss_path(x)?;
    Ok((path.end().clone(), path.conjugator()))
}

/// Whether `x` has the infimum and supremum of the super summit set of `witness`.
pub fn is_super_summit<G: GarsideStructure>(
    x: &NormalForm<G>,
    witness: &NormalForm<G>,
) -> Result<bool> {
    let (s, _) = to_sss(witness)?;
    Ok(x.inf() == s.inf() && x.sup() == s.sup())
}

pub(crate) fn uss_path<G: GarsideStructure>(x: &NormalForm<G>) -> Result<Path<G>> {
    let mut path = sss_path(x)?;
    let base = path.moves.len();
    let mut seen = HashMap::new();
    seen.insert(path.end().clone(), base);
    loop {
        let m = path.step(StepKind::Cycling);
        if let Some(&at) = seen.get(&m.2) {
            path.moves.truncate(at);
            return Ok(path);
        }
        seen.insert(m.2.clone(), path.moves.len() + 1);
        path.moves.push(m);
    }
}

/// An element of the ultra summit set of `x` and a conjugator reaching it.
///
/// The element is the first repeat met while cycling from the super summit set.
pub fn to_uss<G: GarsideStructure>(x: &NormalForm<G>) -> Result<(NormalForm<G>, NormalForm<G>)> {
    let path = uss_path(x)?;
    Ok((path.end().clone(), path.conjugator()))
}

/// Cycles `y` until the sequence repeats. Returns the orbit when it closes at `y`.
pub(crate) fn closed_orbit<G: GarsideStructure>(y: &NormalForm<G>) -> Option<Vec<NormalForm<G>>> {
    let mut orbit = vec![y.clone()];
    let mut seen = std::collections::HashSet::new();
    seen.insert(y.clone());
    loop {
        let z = cycling(orbit.last().unwrap());
        if z == *y {
            return Some(orbit);
        }
        if !seen.insert(z.clone()) {
            return None;
        }
        orbit.push(z);
    }
}

/// `[Y, c(Y), …, c^{N-1}(Y)]` for a cycling-periodic `Y`.
pub fn cycling_orbit<G: GarsideStructure>(y: &NormalForm<G>) -> Result<Vec<NormalForm<G>>> {
    closed_orbit(y).ok_or(GarsideError::NotInUltraSummitSet)
}

/// Membership in the ultra summit set whose infimum and supremum are given.
pub(crate) fn in_uss_with_bounds<G: GarsideStructure>(
    y: &NormalForm<G>,
    inf: i64,
    sup: i64,
) -> bool {
    y.inf() == inf && y.sup() == sup && closed_orbit(y).is_some()
}

/// Whether `y` lies in its own ultra summit set.
pub fn is_in_uss<G: GarsideStructure>(y: &NormalForm<G>) -> Result<bool> {
    let (s, _) = to_sss(y)?;
    Ok(in_uss_with_bounds(y, s.inf(), s.sup()))
}

/// Minimal simple elements of `y ∈ USS(y)`, with the conjugates they reach.
pub(crate) fn minimal_simples_and_targets<G: GarsideStructure>(
    y: &NormalForm<G>,
    simples: &[G::Simple],
    parallel: bool,
) -> Vec<(G::Simple, NormalForm<G>)> {
    let g = y.group();
    let (inf, sup) = (y.inf(), y.sup());
    let test = |s: &G::Simple| {
        if g.is_identity(s) {
            return None;
        }
        let t = y.conjugate_simple(s);
        in_uss_with_bounds(&t, inf, sup).then_some((s.clone(), t))
    };
    let good: Vec<(G::Simple, NormalForm<G>)> = if parallel {
        simples.par_iter().filter_map(test).collect()
    } else {
        simples.iter().filter_map(test).collect()
    };
    good.iter()
        .filter(|(s, _)| {
            !good
                .iter()
                .any(|(t, _)| t != s && g.is_prefix(t, s))
        })
        .cloned()
        .collect()
}

/// Minimal simple elements for `y`, which must lie in its ultra summit set.
pub fn minimal_simple_elements<G: GarsideStructure>(y: &NormalForm<G>) -> Result<Vec<G::Simple>> {
    minimal_simple_elements_with(y, &SearchOptions::default())
}

pub fn minimal_simple_elements_with<G: GarsideStructure>(
    y: &NormalForm<G>,
    opts: &SearchOptions,
) -> Result<Vec<G::Simple>> {
    let simples = y.group().enumerate_simples(opts.simple_cap)?;
    if !is_in_uss(y)? {
        return Err(GarsideError::NotInUltraSummitSet);
    }
    Ok(minimal_simples_and_targets(y, &simples, opts.parallel)
        .into_iter()
        .map(|(s, _)| s)
        .collect())
}

/// Transport `α^{(1)} = ι(X)⁻¹ α ι(Y)` of a conjugator `α` with `X^α = Y`.
pub fn transport<G: GarsideStructure>(
    x: &NormalForm<G>,
    alpha: &NormalForm<G>,
    y: &NormalForm<G>,
) -> Result<NormalForm<G>> {
    if x.conjugate(alpha) != *y {
        return Err(GarsideError::ConjugationMismatch("transport needs X^α = Y"));
    }
    let g = x.group();
    let ix = NormalForm::from_simple(g, x.initial_factor());
    let iy = NormalForm::from_simple(g, y.initial_factor());
    Ok(ix.inverse().multiply(alpha).multiply(&iy))
}

pub use crate::uss::{solve_conjugacy, solve_conjugacy_with};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::braid;
    use crate::word::parse_word;

    #[test]
    fn b5_orbit() {
        let g = braid(5).unwrap();
        let x = parse_word("12132143 143", g).unwrap();
        let orbit: Vec<String> = cycling_orbit(&x).unwrap().iter().map(|y| y.to_string()).collect();
        assert_eq!(
            orbit,
            [
                "D^0 . 12132143 . 143",
                "D^0 . 121324321 . 14",
                "D^0 . 12132432 . 214",
                "D^0 . 121343 . 12324",
            ]
        );
    }

    #[test]
    fn delta_powers_are_fixed() {
        let g = braid(4).unwrap();
        let d = NormalForm::delta_power(g, 3);
        assert_eq!(cycling(&d), d);
        assert_eq!(decycling(&d), d);
        let (y, c) = to_sss(&d).unwrap();
        assert_eq!((y, c.is_identity()), (d, true));
    }

    #[test]
    fn sss_of_generator() {
        let g = braid(4).unwrap();
        let s1 = parse_word("1", g).unwrap();
        let (y, c) = to_uss(&s1).unwrap();
        assert_eq!(y, s1);
        assert!(c.is_identity());
        assert!(is_super_summit(&parse_word("2", g).unwrap(), &s1).unwrap());
        assert!(!is_super_summit(&parse_word("-2 1 2", g).unwrap(), &s1).unwrap());
    }

    #[test]
    fn steps_verify() {
        let g = braid(3).unwrap();
        let x = parse_word("1", g).unwrap();
        let y = parse_word("2", g).unwrap();
        let bad = ConjugationStep::new(x.clone(), x.clone(), y.clone(), StepKind::Composite);
        assert!(bad.is_err());
        let c = parse_word("21", g).unwrap();
        assert!(ConjugationStep::new(x, c, y, StepKind::MinimalSimple).is_ok());
    }

    #[test]
    fn transport_rejects_non_conjugators() {
        let g = braid(4).unwrap();
        let x = parse_word("1", g).unwrap();
        let y = parse_word("2", g).unwrap();
        assert!(transport(&x, &x, &y).is_err());
        let alpha = parse_word("21", g).unwrap();
        let t = transport(&x, &alpha, &y).unwrap();
        assert_eq!(cycling(&x).conjugate(&t), cycling(&y));
    }
}
