//! Embedded homology front-end for hypergraphs with a function on hyperedges.

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::extended::ExtendedInput;
use crate::frontend::{assemble, ValueGrid, ValuedInput};
use crate::linalg::PrimeField;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum HypergraphError {
    #[error("empty hyperedge")]
    EmptyHyperedge,
    #[error("empty vertex name")]
    EmptyName,
    #[error("vertex `{0}` repeated within a hyperedge")]
    RepeatedVertex(String),
    #[error("duplicate hyperedge {{{0}}}")]
    DuplicateHyperedge(String),
    #[error("hyperedge {{{0}}} has non-finite value {1}")]
    NonFiniteValue(String, f64),
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct FilteredHypergraph {
    /// Hyperedges as sorted vertex-name lists.
    hyperedges: BTreeMap<Vec<String>, f64>,
}

impl FilteredHypergraph {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_hyperedge<S: AsRef<str>>(&mut self, vertices: &[S], value: f64) -> Result<(), HypergraphError> {
        if vertices.is_empty() {
            return Err(HypergraphError::EmptyHyperedge);
        }
        let mut key: Vec<String> = vertices.iter().map(|v| v.as_ref().to_owned()).collect();
        if key.iter().any(String::is_empty) {
            return Err(HypergraphError::EmptyName);
        }
        key.sort();
        if let Some(w) = key.windows(2).find(|w| w[0] == w[1]) {
            return Err(HypergraphError::RepeatedVertex(w[0].clone()));
        }
        if !value.is_finite() {
            return Err(HypergraphError::NonFiniteValue(key.join(","), value));
        }
        if self.hyperedges.contains_key(&key) {
            return Err(HypergraphError::DuplicateHyperedge(key.join(",")));
        }
        self.hyperedges.insert(key, value);
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.hyperedges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.hyperedges.is_empty()
    }

    pub fn vertex_names(&self) -> Vec<String> {
        let set: BTreeSet<&String> = self.hyperedges.keys().flatten().collect();
        set.into_iter().cloned().collect()
    }

    pub fn hyperedges(&self) -> impl Iterator<Item = (&[String], f64)> + '_ {
        self.hyperedges.iter().map(|(k, &v)| (k.as_slice(), v))
    }

    pub fn map_values<F: FnMut(&[String], f64) -> f64>(&self, mut revalue: F) -> Self {
        Self {
            hyperedges: self
                .hyperedges
                .iter()
                .map(|(k, &v)| (k.clone(), revalue(k, v)))
                .collect(),
        }
    }

    /// Hyperedges as sorted vertex-index lists, with values.
    fn indexed(&self) -> (Vec<String>, Vec<(Vec<usize>, f64)>) {
        let names = self.vertex_names();
        let index: BTreeMap<&str, usize> = names
            .iter()
            .enumerate()
            .map(|(i, n)| (n.as_str(), i))
            .collect();
        let edges = self
            .hyperedges
            .iter()
            .map(|(k, &v)| (k.iter().map(|n| index[n.as_str()]).collect(), v))
            .collect();
        (names, edges)
    }
}

/// All non-empty subsets of hyperedges, by dimension, each dimension sorted.
pub fn simplicial_closure(simplices: &[Vec<usize>]) -> Vec<Vec<Vec<usize>>> {
    let mut by_dim: Vec<BTreeSet<Vec<usize>>> = Vec::new();
    for s in simplices {
        let k = s.len();
        assert!(k <= 30, "hyperedge too large to close");
        for mask in 1u32..(1 << k) {
            let face: Vec<usize> = (0..k).filter(|&i| mask & (1 << i) != 0).map(|i| s[i]).collect();
            let d = face.len() - 1;
            if by_dim.len() <= d {
                by_dim.resize_with(d + 1, BTreeSet::new);
            }
            by_dim[d].insert(face);
        }
    }
    by_dim.into_iter().map(|s| s.into_iter().collect()).collect()
}

/// Alternating face sum of a sorted simplex.
pub fn simplicial_boundary(simplex: &[usize]) -> Vec<(Vec<usize>, i64)> {
    if simplex.len() <= 1 {
        return Vec::new();
    }
    (0..simplex.len())
        .map(|i| {
            let mut face = simplex.to_vec();
            face.remove(i);
            (face, if i % 2 == 0 { 1 } else { -1 })
        })
        .collect()
}

/// Sublevel and superlevel filtrations of the hyperedge span inside the
/// simplicial closure, over dimensions `0..=p_max + 1`.
pub fn build_hyper_input(h: &FilteredHypergraph, p_max: usize, field: PrimeField) -> ValuedInput {
    let (names, edges) = h.indexed();
    let top = p_max + 1;
    let kept: Vec<&(Vec<usize>, f64)> = edges.iter().filter(|(s, _)| s.len() <= top + 1).collect();
    let grid = ValueGrid::new(kept.iter().map(|(_, v)| *v));
    let mut basis: Vec<Vec<Vec<usize>>> = vec![Vec::new(); top + 1];
    let mut value: Vec<Vec<f64>> = vec![Vec::new(); top + 1];
    let mut sorted = kept.clone();
    sorted.sort_by(|a, b| a.0.cmp(&b.0));
    for (s, v) in sorted {
        basis[s.len() - 1].push(s.clone());
        value[s.len() - 1].push(*v);
    }
    let (complex, _) = assemble(field, &basis, |s: &Vec<usize>| simplicial_boundary(s));
    let ascending = value
        .iter()
        .map(|vs| vs.iter().map(|&v| grid.ascending_stage(v)).collect())
        .collect();
    let descending = value
        .iter()
        .map(|vs| vs.iter().map(|&v| grid.descending_stage(v)).collect())
        .collect();
    let stages = grid.len();
    let input = ExtendedInput::new(complex, ascending, descending, stages, stages)
        .expect("hyperedge filtrations are compatible");
    ValuedInput {
        input,
        grid,
        names: basis
            .iter()
            .map(|level| {
                level
                    .iter()
                    .map(|s| s.iter().map(|&v| names[v].as_str()).collect::<Vec<_>>().join(","))
                    .collect()
            })
            .collect(),
    }
}
