//! Path homology front-end for weighted digraphs.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::extended::ExtendedInput;
use crate::frontend::{assemble, ValueGrid, ValuedInput};
use crate::linalg::PrimeField;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum DigraphError {
    #[error("self-loop at vertex `{0}`")]
    SelfLoop(String),
    #[error("duplicate edge `{0}` -> `{1}`")]
    DuplicateEdge(String, String),
    #[error("edge `{0}` -> `{1}` has non-finite weight {2}")]
    NonFiniteWeight(String, String, f64),
    #[error("empty vertex name")]
    EmptyName,
}

/// A digraph without self-loops, with real edge weights. Vertices are kept
/// in name order; that order also orders paths lexicographically.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct WeightedDigraph {
    vertices: BTreeMap<String, ()>,
    edges: BTreeMap<(String, String), f64>,
}

impl WeightedDigraph {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_vertex(&mut self, name: &str) -> Result<(), DigraphError> {
        if name.is_empty() {
            return Err(DigraphError::EmptyName);
        }
        self.vertices.insert(name.to_owned(), ());
        Ok(())
    }

    pub fn add_edge(&mut self, src: &str, dst: &str, weight: f64) -> Result<(), DigraphError> {
        if src == dst {
            return Err(DigraphError::SelfLoop(src.to_owned()));
        }
        if !weight.is_finite() {
            return Err(DigraphError::NonFiniteWeight(src.into(), dst.into(), weight));
        }
        self.add_vertex(src)?;
        self.add_vertex(dst)?;
        let key = (src.to_owned(), dst.to_owned());
        if self.edges.contains_key(&key) {
            return Err(DigraphError::DuplicateEdge(key.0, key.1));
        }
        self.edges.insert(key, weight);
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertex_names(&self) -> Vec<String> {
        self.vertices.keys().cloned().collect()
    }

    pub fn edges(&self) -> impl Iterator<Item = (&str, &str, f64)> + '_ {
        self.edges
            .iter()
            .map(|((s, t), &w)| (s.as_str(), t.as_str(), w))
    }

    pub fn weight(&self, src: &str, dst: &str) -> Option<f64> {
        self.edges.get(&(src.to_owned(), dst.to_owned())).copied()
    }

    /// Same vertices and edges, with new weights; `reweight` sees
    /// `(src, dst, weight)`.
    pub fn map_weights<F: FnMut(&str, &str, f64) -> f64>(&self, mut reweight: F) -> Self {
        Self {
            vertices: self.vertices.clone(),
            edges: self
                .edges
                .iter()
                .map(|((s, t), &w)| ((s.clone(), t.clone()), reweight(s, t, w)))
                .collect(),
        }
    }

    fn filtered<P: Fn(f64) -> bool>(&self, keep: P) -> Self {
        Self {
            vertices: self.vertices.clone(),
            edges: self
                .edges
                .iter()
                .filter(|(_, &w)| keep(w))
                .map(|(k, &w)| (k.clone(), w))
                .collect(),
        }
    }

    /// Edges of weight `<= a`; every vertex is kept.
    pub fn sublevel(&self, a: f64) -> Self {
        self.filtered(|w| w <= a)
    }

    /// Edges of weight `>= a`; every vertex is kept.
    pub fn superlevel(&self, a: f64) -> Self {
        self.filtered(|w| w >= a)
    }

    /// Index-based adjacency: `(sorted names, weight[(u, v)])`.
    fn indexed(&self) -> (Vec<String>, BTreeMap<(usize, usize), f64>) {
        let names = self.vertex_names();
        let index: BTreeMap<&str, usize> = names
            .iter()
            .enumerate()
            .map(|(i, n)| (n.as_str(), i))
            .collect();
        let edges = self
            .edges
            .iter()
            .map(|((s, t), &w)| ((index[s.as_str()], index[t.as_str()]), w))
            .collect();
        (names, edges)
    }
}

/// Vertex sequence with no two equal consecutive vertices.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RegularPath(pub Vec<usize>);

impl RegularPath {
    pub fn is_regular(vertices: &[usize]) -> bool {
        vertices.windows(2).all(|w| w[0] != w[1])
    }

    pub fn dim(&self) -> usize {
        self.0.len() - 1
    }
}

/// Alternating face sum of a regular path, irregular faces dropped.
pub fn regular_boundary(path: &RegularPath) -> Vec<(RegularPath, i64)> {
    let v = &path.0;
    if v.len() <= 1 {
        return Vec::new();
    }
    (0..v.len())
        .filter_map(|i| {
            let mut face = v.clone();
            face.remove(i);
            RegularPath::is_regular(&face)
                .then_some((RegularPath(face), if i % 2 == 0 { 1 } else { -1 }))
        })
        .collect()
}

/// Allowed paths of dimensions `0..=p_max`, lexicographic within a dimension.
pub fn allowed_paths(g: &WeightedDigraph, p_max: usize) -> Vec<Vec<RegularPath>> {
    let (names, edges) = g.indexed();
    allowed_paths_indexed(names.len(), &edges, p_max)
}

fn allowed_paths_indexed(
    n: usize,
    edges: &BTreeMap<(usize, usize), f64>,
    p_max: usize,
) -> Vec<Vec<RegularPath>> {
    let mut out = vec![(0..n).map(|v| RegularPath(vec![v])).collect::<Vec<_>>()];
    for _ in 0..p_max {
        let prev = out.last().expect("nonempty");
        let mut next = Vec::new();
        for path in prev {
            let last = *path.0.last().expect("nonempty path");
            for (&(_, t), _) in edges.range((last, 0)..=(last, usize::MAX)) {
                let mut v = path.0.clone();
                v.push(t);
                next.push(RegularPath(v));
            }
        }
        out.push(next);
    }
    out
}

fn path_name(path: &RegularPath, names: &[String]) -> String {
    path.0
        .iter()
        .map(|&v| names[v].as_str())
        .collect::<Vec<_>>()
        .join(">")
}

/// Ascending (sublevel) and descending (superlevel) filtrations of the
/// allowed-path graded subgroup, over dimensions `0..=p_max + 1`.
pub fn build_pph_input(g: &WeightedDigraph, p_max: usize, field: PrimeField) -> ValuedInput {
    let (names, edges) = g.indexed();
    let grid = ValueGrid::new(edges.values().copied());
    let basis = allowed_paths_indexed(names.len(), &edges, p_max + 1);
    let (complex, _) = assemble(field, &basis, regular_boundary);
    let weights = |path: &RegularPath| -> Vec<f64> {
        path.0.windows(2).map(|w| edges[&(w[0], w[1])]).collect()
    };
    let mut ascending = Vec::with_capacity(basis.len());
    let mut descending = Vec::with_capacity(basis.len());
    for level in &basis {
        let (a, d): (Vec<usize>, Vec<usize>) = level
            .iter()
            .map(|path| {
                if path.0.len() == 1 {
                    return (1, 1);
                }
                let ws = weights(path);
                let max = ws.iter().copied().fold(f64::NEG_INFINITY, f64::max);
                let min = ws.iter().copied().fold(f64::INFINITY, f64::min);
                (grid.ascending_stage(max), grid.descending_stage(min))
            })
            .unzip();
        ascending.push(a);
        descending.push(d);
    }
    let stages = grid.len();
    let input = ExtendedInput::new(complex, ascending, descending, stages, stages)
        .expect("path filtrations are compatible");
    ValuedInput {
        input,
        grid,
        names: basis
            .iter()
            .map(|level| level.iter().map(|p| path_name(p, &names)).collect())
            .collect(),
    }
}
