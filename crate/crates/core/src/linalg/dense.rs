//! Dense Gaussian elimination over `F_q`.
//!
//! This is deliberately a separate code path from the sparse column reduction:
//! the verification oracles are built on it, so that they do not share the
//! implementation they check.

use super::PrimeField;

/// Row-reduce `rows` in place (each row of length `width`); returns the pivot columns.
fn row_reduce(rows: &mut [Vec<u32>], width: usize, field: PrimeField) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..width {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(r, p);
        let inv = field.inv(rows[r][c]).expect("nonzero pivot");
        for x in rows[r].iter_mut() {
            *x = field.mul(*x, inv);
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && row[c] != 0 {
                let factor = field.neg(row[c]);
                for (x, &y) in row.iter_mut().zip(&pivot_row) {
                    *x = field.add(*x, field.mul(factor, y));
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Rank of the span of `vectors` (each of length `len`).
pub fn rank_of_columns(vectors: &[Vec<u32>], len: usize, field: PrimeField) -> usize {
    if vectors.is_empty() || len == 0 {
        return 0;
    }
    let mut rows: Vec<Vec<u32>> = vectors.to_vec();
    for v in &rows {
        assert_eq!(v.len(), len, "vector length mismatch");
    }
    row_reduce(&mut rows, len, field).len()
}

/// Null space of the matrix whose columns are `columns` (each of length `len`),
/// returned as coefficient vectors over the columns.
pub fn nullspace(columns: &[Vec<u32>], len: usize, field: PrimeField) -> Vec<Vec<u32>> {
    let n = columns.len();
    if n == 0 {
        return Vec::new();
    }
    // Row-major copy of the matrix: `len` rows, `n` columns.
    let mut rows: Vec<Vec<u32>> = (0..len)
        .map(|r| columns.iter().map(|c| c[r]).collect())
        .collect();
    let pivots = row_reduce(&mut rows, n, field);
    let mut is_pivot = vec![false; n];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    (0..n)
        .filter(|&free| !is_pivot[free])
        .map(|free| {
            let mut v = vec![0; n];
            v[free] = 1;
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = field.neg(rows[r][free]);
            }
            v
        })
        .collect()
}

/// A finite list of vectors of a fixed length, viewed as the subspace it spans.
#[derive(Clone, Debug)]
pub struct Span {
    pub len: usize,
    pub vectors: Vec<Vec<u32>>,
}

impl Span {
    pub fn new(len: usize) -> Self {
        Self {
            len,
            vectors: Vec::new(),
        }
    }

    pub fn from_vectors(len: usize, vectors: Vec<Vec<u32>>) -> Self {
        Self { len, vectors }
    }

    pub fn dim(&self, field: PrimeField) -> usize {
        rank_of_columns(&self.vectors, self.len, field)
    }

    pub fn sum(&self, other: &Span) -> Span {
        assert_eq!(self.len, other.len);
        let mut vectors = self.vectors.clone();
        vectors.extend(other.vectors.iter().cloned());
        Span {
            len: self.len,
            vectors,
        }
    }

    pub fn contains_span(&self, other: &Span, field: PrimeField) -> bool {
        self.dim(field) == self.sum(other).dim(field)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nullspace_of_small_matrix() {
        let f = PrimeField::new(3).unwrap();
        // columns (1,0), (0,1), (1,1): kernel spanned by (1,1,-1).
        let cols = vec![vec![1, 0], vec![0, 1], vec![1, 1]];
        let ns = nullspace(&cols, 2, f);
        assert_eq!(ns, vec![vec![2, 2, 1]]);
        assert_eq!(rank_of_columns(&cols, 2, f), 2);
    }

    #[test]
    fn empty_inputs() {
        let f = PrimeField::F2;
        assert_eq!(rank_of_columns(&[], 3, f), 0);
        assert_eq!(nullspace(&[vec![], vec![]], 0, f).len(), 2);
    }
}
