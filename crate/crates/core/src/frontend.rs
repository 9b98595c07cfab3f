//! Pieces shared by the digraph and hypergraph front-ends.

use std::collections::{BTreeMap, BTreeSet};

use crate::extended::ExtendedInput;
use crate::graded::{GradedDimension, GradedSubgroup};
use crate::linalg::{PrimeField, SparseColumn};

/// Sorted distinct critical values `a_1 < … < a_M`. The descending axis
/// reads the same values backwards: `b_j = a_{M+1-j}`.
#[derive(Clone, Debug, PartialEq)]
pub struct ValueGrid {
    values: Vec<f64>,
}

impl ValueGrid {
    /// An empty set of values yields the one-stage grid `{0}`.
    pub fn new<I: IntoIterator<Item = f64>>(values: I) -> Self {
        let mut values: Vec<f64> = values.into_iter().collect();
        values.sort_by(f64::total_cmp);
        values.dedup();
        if values.is_empty() {
            values.push(0.0);
        }
        Self { values }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn ascending(&self) -> &[f64] {
        &self.values
    }

    pub fn descending(&self) -> Vec<f64> {
        self.values.iter().rev().copied().collect()
    }

    /// Stage `i` with `a_i = value`.
    pub fn ascending_stage(&self, value: f64) -> usize {
        self.position(value) + 1
    }

    /// Stage `j` with `b_j = value`.
    pub fn descending_stage(&self, value: f64) -> usize {
        self.values.len() - self.position(value)
    }

    fn position(&self, value: f64) -> usize {
        self.values
            .binary_search_by(|v| v.total_cmp(&value))
            .expect("value lies on the grid")
    }
}

/// An extended input together with the critical values of its stages and
/// the names of its basis generators.
#[derive(Clone, Debug)]
pub struct ValuedInput {
    pub input: ExtendedInput,
    pub grid: ValueGrid,
    /// `names[p][i]` names basis generator `i` of dimension `p`.
    pub names: Vec<Vec<String>>,
}

impl ValuedInput {
    pub fn ascending_values(&self) -> &[f64] {
        self.grid.ascending()
    }

    pub fn descending_values(&self) -> Vec<f64> {
        self.grid.descending()
    }
}

/// Lists `basis[p]` followed by every face needed to write boundaries,
/// closing downwards so that every listed chain has a known boundary.
pub(crate) fn assemble<K, F>(
    field: PrimeField,
    basis: &[Vec<K>],
    faces: F,
) -> (GradedSubgroup, Vec<Vec<K>>)
where
    K: Ord + Clone,
    F: Fn(&K) -> Vec<(K, i64)>,
{
    let n = basis.len();
    let mut listed: Vec<Vec<K>> = basis.to_vec();
    for p in (1..n).rev() {
        let own: BTreeSet<&K> = basis[p - 1].iter().collect();
        let mut extra: BTreeSet<K> = BTreeSet::new();
        for k in &listed[p] {
            for (face, _) in faces(k) {
                if !own.contains(&face) {
                    extra.insert(face);
                }
            }
        }
        listed[p - 1].extend(extra);
    }
    let mut dims = Vec::with_capacity(n);
    for p in 0..n {
        let position: BTreeMap<&K, usize> = match p.checked_sub(1) {
            Some(b) => listed[b].iter().enumerate().map(|(i, k)| (k, i)).collect(),
            None => BTreeMap::new(),
        };
        let columns: Vec<SparseColumn> = listed[p]
            .iter()
            .map(|k| {
                if p == 0 {
                    return SparseColumn::new();
                }
                SparseColumn::from_entries(
                    faces(k).iter().map(|(face, c)| (position[face], *c)),
                    field,
                )
            })
            .collect();
        let m = basis[p].len();
        let mut it = columns.into_iter();
        dims.push(GradedDimension {
            basis: it.by_ref().take(m).collect(),
            extension: it.map(Some).collect(),
        });
    }
    (
        GradedSubgroup::new(field, dims).expect("assembled complex is closed"),
        listed,
    )
}
