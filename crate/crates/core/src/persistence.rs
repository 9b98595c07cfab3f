//! Boundary matrices on a compatible basis, generalized pairing, and the
//! resulting barcode.

use crate::graded::FilteredGradedSubgroup;
use crate::linalg::{reduce_with, PrimeField, ReduceOptions, SparseColumn, SparseMatrix};

/// `A_{p+1}`: columns are the basis of dimension `p + 1`; rows are the basis of
/// dimension `p` followed by the extension generators its boundaries use.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundaryMatrix {
    /// Row dimension `p`.
    pub dim: usize,
    pub matrix: SparseMatrix,
    pub basis_rows: usize,
    /// Extension index (within dimension `p`) of each row past the basis block.
    pub extension_rows: Vec<usize>,
}

impl BoundaryMatrix {
    /// Same matrix with the extension block permuted: new extension row `k`
    /// is old extension row `order[k]`.
    pub fn with_extension_order(&self, order: &[usize], field: PrimeField) -> Self {
        assert_eq!(order.len(), self.extension_rows.len());
        let m = self.basis_rows;
        let mut new_of_old = vec![0; order.len()];
        for (new, &old) in order.iter().enumerate() {
            new_of_old[old] = new;
        }
        let cols = self
            .matrix
            .columns()
            .iter()
            .map(|c| c.remap_rows(field, |r| Some(if r < m { r } else { m + new_of_old[r - m] })))
            .collect();
        Self {
            dim: self.dim,
            matrix: SparseMatrix::new(self.matrix.num_rows(), cols),
            basis_rows: m,
            extension_rows: order.iter().map(|&o| self.extension_rows[o]).collect(),
        }
    }
}

/// `A_1 ..= A_{p_max + 1}` (index `p` of the result holds `A_{p+1}`).
pub fn build_matrices(f: &FilteredGradedSubgroup, p_max: usize) -> Vec<BoundaryMatrix> {
    let g = f.complex();
    let field = g.field();
    (0..=p_max)
        .map(|p| {
            let m = g.basis_len(p);
            let mut ext_row: Vec<Option<usize>> = vec![None; g.extension_len(p)];
            let mut extension_rows = Vec::new();
            let mut columns = Vec::with_capacity(g.basis_len(p + 1));
            if let Some(d) = g.dimension(p + 1) {
                for b in &d.basis {
                    for &(r, _) in b.entries() {
                        if r >= m && ext_row[r - m].is_none() {
                            ext_row[r - m] = Some(m + extension_rows.len());
                            extension_rows.push(r - m);
                        }
                    }
                    columns.push(b.remap_rows(field, |r| {
                        Some(if r < m { r } else { ext_row[r - m].expect("assigned") })
                    }));
                }
            }
            BoundaryMatrix {
                dim: p,
                matrix: SparseMatrix::new(m + extension_rows.len(), columns),
                basis_rows: m,
                extension_rows,
            }
        })
        .collect()
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Pairing {
    pub dim: usize,
    /// `(i, j)`: basis index `i` in dimension `dim`, `j` in `dim + 1`.
    pub pairs: Vec<(usize, usize)>,
    pub unpaired_cycles: Vec<usize>,
}

/// Reduce every `A_{p+1}` and read off pairs and unpaired cycles.
///
/// With `clearing`, dimensions are processed top-down and columns of `A_p`
/// indexed by an already paired row are zeroed before reduction.
pub fn compute_pairings(mats: &[BoundaryMatrix], field: PrimeField, clearing: bool) -> Vec<Pairing> {
    let n = mats.len();
    let mut pairs: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    let mut zero_cols: Vec<Vec<bool>> = vec![Vec::new(); n];
    for p in (0..n).rev() {
        let a = &mats[p];
        let cleared: Option<Vec<bool>> = (clearing && p + 1 < n).then(|| {
            let mut c = vec![false; a.matrix.num_cols()];
            for &(i, _) in &pairs[p + 1] {
                c[i] = true;
            }
            c
        });
        let red = reduce_with(
            &a.matrix,
            field,
            ReduceOptions {
                record: false,
                cleared: cleared.as_deref(),
            },
        );
        pairs[p] = red
            .pivots
            .pairs()
            .filter(|&(row, _)| row < a.basis_rows)
            .collect();
        pairs[p].sort_unstable();
        zero_cols[p] = red.reduced.columns().iter().map(SparseColumn::is_zero).collect();
    }
    (0..n)
        .map(|p| {
            let m = mats[p].basis_rows;
            let mut paired = vec![false; m];
            for &(i, _) in &pairs[p] {
                paired[i] = true;
            }
            let unpaired_cycles = (0..m)
                .filter(|&i| !paired[i] && (p == 0 || zero_cols[p - 1][i]))
                .collect();
            Pairing {
                dim: p,
                pairs: std::mem::take(&mut pairs[p]),
                unpaired_cycles,
            }
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Interval {
    pub dim: usize,
    pub birth: usize,
    /// First stage at which the class is absent; `None` for `+∞`.
    pub death: Option<usize>,
}

impl Interval {
    /// Alive on the whole stage range `[u, v]`.
    pub fn covers(&self, u: usize, v: usize) -> bool {
        self.birth <= u && self.death.is_none_or(|d| d > v)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Barcode {
    pub intervals: Vec<Interval>,
}

impl Barcode {
    pub fn in_dim(&self, p: usize) -> impl Iterator<Item = &Interval> + '_ {
        self.intervals.iter().filter(move |iv| iv.dim == p)
    }

    /// `β_p^{i,j}` as the number of intervals covering `[i, j]`.
    pub fn betti(&self, p: usize, i: usize, j: usize) -> usize {
        self.in_dim(p).filter(|iv| iv.covers(i, j)).count()
    }

    pub fn sorted(mut self) -> Self {
        self.intervals.sort();
        self
    }
}

pub fn barcode(pairings: &[Pairing], f: &FilteredGradedSubgroup) -> Barcode {
    let mut intervals = Vec::new();
    for pr in pairings {
        let p = pr.dim;
        for &i in &pr.unpaired_cycles {
            intervals.push(Interval {
                dim: p,
                birth: f.height(p, i),
                death: None,
            });
        }
        for &(i, j) in &pr.pairs {
            let (b, d) = (f.height(p, i), f.height(p + 1, j));
            if b < d {
                intervals.push(Interval {
                    dim: p,
                    birth: b,
                    death: Some(d),
                });
            }
        }
    }
    Barcode { intervals }.sorted()
}

/// Build, reduce and read off the barcode of dimensions `0..=p_max`.
pub fn persistent_homology(f: &FilteredGradedSubgroup, p_max: usize, clearing: bool) -> Barcode {
    let mats = build_matrices(f, p_max);
    barcode(&compute_pairings(&mats, f.field(), clearing), f)
}
