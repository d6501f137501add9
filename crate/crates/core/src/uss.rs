//! The ultra summit set graph and conjugacy search.

use std::collections::HashMap;
use std::fmt::Write as _;

use rayon::prelude::*;
use serde_json::json;

use crate::conjugacy::{
    closed_orbit, cycling, minimal_simples_and_targets, uss_path, ConjugationStep,
};
use crate::error::{GarsideError, Result};
use crate::normal_form::{format_simple, NormalForm};
use crate::structure::{GarsideStructure, DEFAULT_SIMPLE_CAP};

/// Knobs for exhaustive searches.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    /// Largest number of simple elements a search may enumerate.
    pub simple_cap: u64,
    /// Expand each frontier level with rayon. Results are identical either way.
    pub parallel: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            simple_cap: DEFAULT_SIMPLE_CAP,
            parallel: false,
        }
    }
}

/// An arrow `from → to` labeled by a minimal simple element.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Arrow<G: GarsideStructure> {
    pub from: usize,
    pub label: G::Simple,
    pub to: usize,
}

/// Vertices, orbits and minimal-simple arrows of an ultra summit set.
#[derive(Clone, Debug)]
pub struct UssGraph<G: GarsideStructure> {
    base: NormalForm<G>,
    entry: Vec<ConjugationStep<G>>,
    entry_conjugator: NormalForm<G>,
    vertices: Vec<NormalForm<G>>,
    index: HashMap<NormalForm<G>, usize>,
    /// How each vertex was first reached: parent and simple conjugator.
    parents: Vec<Option<(usize, G::Simple)>>,
    orbits: Vec<Vec<usize>>,
    arrows: Vec<Arrow<G>>,
}

impl<G: GarsideStructure> UssGraph<G> {
    pub fn base(&self) -> &NormalForm<G> {
        &self.base
    }

    /// Cycling and decycling steps from the base into the set.
    pub fn entry(&self) -> &[ConjugationStep<G>] {
        &self.entry
    }

    pub fn entry_conjugator(&self) -> &NormalForm<G> {
        &self.entry_conjugator
    }

    pub fn vertices(&self) -> &[NormalForm<G>] {
        &self.vertices
    }

    pub fn orbits(&self) -> &[Vec<usize>] {
        &self.orbits
    }

    pub fn arrows(&self) -> &[Arrow<G>] {
        &self.arrows
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn index_of(&self, y: &NormalForm<G>) -> Option<usize> {
        self.index.get(y).copied()
    }

    pub fn contains(&self, y: &NormalForm<G>) -> bool {
        self.index.contains_key(y)
    }

    /// Conjugator from vertex 0 to vertex `v`, composed along first-discovery parents.
    pub fn conjugator_to(&self, v: usize) -> NormalForm<G> {
        let g = self.base.group();
        let mut labels = Vec::new();
        let mut cur = v;
        while let Some((p, s)) = &self.parents[cur] {
            labels.push(s.clone());
            cur = *p;
        }
        let mut c = NormalForm::identity(g);
        for s in labels.into_iter().rev() {
            c.push_simple(s);
        }
        c
    }

    /// Conjugator from the base element to vertex `v`.
    pub fn conjugator_from_base(&self, v: usize) -> NormalForm<G> {
        self.entry_conjugator.multiply(&self.conjugator_to(v))
    }

    /// Graphviz rendering with vertices in discovery order.
    pub fn to_dot(&self) -> String {
        let g = self.base.group();
        let mut s = String::from("digraph uss {\n");
        for (i, v) in self.vertices.iter().enumerate() {
            writeln!(s, "  v{i} [label=\"{v}\"];").unwrap();
        }
        for a in &self.arrows {
            writeln!(
                s,
                "  v{} -> v{} [label=\"{}\"];",
                a.from,
                a.to,
                format_simple(&g, &a.label)
            )
            .unwrap();
        }
        s.push_str("}\n");
        s
    }

    pub fn to_json(&self) -> serde_json::Value {
        let g = self.base.group();
        let name = |i: usize| self.vertices[i].to_string();
        json!({
            "base": self.base.to_string(),
            "entry_conjugator": self.entry_conjugator.to_string(),
            "orbits": self.orbits.iter()
                .map(|o| o.iter().map(|&i| name(i)).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
            "arrows": self.arrows.iter()
                .map(|a| json!({
                    "from": name(a.from),
                    "label": format_simple(&g, &a.label),
                    "to": name(a.to),
                }))
                .collect::<Vec<_>>(),
        })
    }
}

struct Explorer<G: GarsideStructure> {
    graph: UssGraph<G>,
    simples: Vec<G::Simple>,
    parallel: bool,
}

impl<G: GarsideStructure> Explorer<G> {
    fn start(x: &NormalForm<G>, opts: &SearchOptions) -> Result<Self> {
        let g = x.group();
        let simples = g.enumerate_simples(opts.simple_cap)?;
        let path = uss_path(x)?;
        let rep = path.end().clone();
        let mut graph = UssGraph {
            base: x.clone(),
            entry: path.steps()?,
            entry_conjugator: path.conjugator(),
            vertices: Vec::new(),
            index: HashMap::new(),
            parents: Vec::new(),
            orbits: Vec::new(),
            arrows: Vec::new(),
        };
        add_orbit(&mut graph, rep, None);
        Ok(Explorer {
            graph,
            simples,
            parallel: opts.parallel,
        })
    }

    /// Breadth-first closure under minimal simple conjugation. Stops early
    /// once `stop` becomes a vertex.
    fn run(&mut self, stop: Option<&NormalForm<G>>) -> bool {
        let mut level: Vec<usize> = (0..self.graph.vertices.len()).collect();
        while !level.is_empty() {
            if stop.is_some_and(|t| self.graph.contains(t)) {
                return true;
            }
            let expand = |&v: &usize| {
                minimal_simples_and_targets(&self.graph.vertices[v], &self.simples, false)
            };
            let found: Vec<_> = if self.parallel {
                level.par_iter().map(expand).collect()
            } else {
                level.iter().map(expand).collect()
            };
            let mut next = Vec::new();
            for (&v, list) in level.iter().zip(found) {
                for (s, t) in list {
                    let to = match self.graph.index_of(&t) {
                        Some(i) => i,
                        None => {
                            let before = self.graph.vertices.len();
                            add_orbit(&mut self.graph, t, Some((v, s.clone())));
                            next.extend(before..self.graph.vertices.len());
                            before
                        }
                    };
                    self.graph.arrows.push(Arrow { from: v, label: s, to });
                }
            }
            level = next;
        }
        stop.is_some_and(|t| self.graph.contains(t))
    }
}

fn add_orbit<G: GarsideStructure>(
    graph: &mut UssGraph<G>,
    y: NormalForm<G>,
    parent: Option<(usize, G::Simple)>,
) {
    let orbit = closed_orbit(&y).expect("ultra summit elements are cycling periodic");
    let mut ids = Vec::with_capacity(orbit.len());
    let mut parent = parent;
    for z in orbit {
        let id = graph.vertices.len();
        let next_parent = Some((id, z.initial_factor()));
        graph.index.insert(z.clone(), id);
        graph.vertices.push(z);
        graph.parents.push(parent.take());
        parent = next_parent;
        ids.push(id);
    }
    debug_assert!(graph
        .vertices
        .last()
        .is_some_and(|z| cycling(z) == graph.vertices[ids[0]]));
    graph.orbits.push(ids);
}

/// The ultra summit graph of `x`.
pub fn uss<G: GarsideStructure>(x: &NormalForm<G>) -> Result<UssGraph<G>> {
    uss_with(x, &SearchOptions::default())
}

pub fn uss_with<G: GarsideStructure>(x: &NormalForm<G>, opts: &SearchOptions) -> Result<UssGraph<G>> {
    let mut ex = Explorer::start(x, opts)?;
    ex.run(None);
    Ok(ex.graph)
}

/// A conjugator `c` with `x^c = y`, or `None` when the elements are not conjugate.
pub fn solve_conjugacy<G: GarsideStructure>(
    x: &NormalForm<G>,
    y: &NormalForm<G>,
) -> Result<Option<NormalForm<G>>> {
    solve_conjugacy_with(x, y, &SearchOptions::default())
}

pub fn solve_conjugacy_with<G: GarsideStructure>(
    x: &NormalForm<G>,
    y: &NormalForm<G>,
    opts: &SearchOptions,
) -> Result<Option<NormalForm<G>>> {
    x.checked_mul(y)?;
    let py = uss_path(y)?;
    let zy = py.end().clone();
    let mut ex = Explorer::start(x, opts)?;
    let rep = &ex.graph.vertices[0];
    if rep.inf() != zy.inf() || rep.sup() != zy.sup() {
        return Ok(None);
    }
    if !ex.run(Some(&zy)) {
        return Ok(None);
    }
    let v = ex.graph.index_of(&zy).unwrap();
    let c = ex
        .graph
        .conjugator_from_base(v)
        .multiply(&py.conjugator().inverse());
    if x.conjugate(&c) != *y {
        return Err(GarsideError::ConjugationMismatch("conjugacy witness"));
    }
    Ok(Some(c))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::braid;
    use crate::word::parse_word;

    #[test]
    fn delta_has_one_vertex() {
        let g = braid(4).unwrap();
        let d = NormalForm::delta_power(g, 1);
        let graph = uss(&d).unwrap();
        assert_eq!(graph.len(), 1);
        // only simples fixed by τ commute with Δ
        let labels: Vec<String> = graph.arrows().iter().map(|a| format_simple(&g, &a.label)).collect();
        assert_eq!(labels, ["2", "13"]);
    }

    #[test]
    fn conjugators_reach_every_vertex() {
        let g = braid(4).unwrap();
        let x = parse_word("1 3 2 1 1 2 2 1 3", g).unwrap();
        let graph = uss(&x).unwrap();
        for v in 0..graph.len() {
            assert_eq!(x.conjugate(&graph.conjugator_from_base(v)), graph.vertices()[v]);
        }
    }

    #[test]
    fn not_conjugate() {
        let g = braid(4).unwrap();
        let a = parse_word("1", g).unwrap();
        let d = NormalForm::delta_power(g, 1);
        assert_eq!(solve_conjugacy(&a, &d).unwrap(), None);
        let b = parse_word("1 1", g).unwrap();
        assert_eq!(solve_conjugacy(&a, &b).unwrap(), None);
    }

    #[test]
    fn dot_and_json_shapes() {
        let g = braid(3).unwrap();
        let graph = uss(&parse_word("1", g).unwrap()).unwrap();
        let dot = graph.to_dot();
        assert!(dot.starts_with("digraph uss {"));
        let js = graph.to_json();
        assert_eq!(js["orbits"].as_array().unwrap().len(), 2);
        assert_eq!(js["base"], "D^0 . 1");
    }
}
