use super::PrimeField;

/// A sparse vector over `F_q`: strictly increasing row indices, no zero entries.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SparseColumn {
    entries: Vec<(usize, u32)>,
}

impl SparseColumn {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn unit(row: usize) -> Self {
        Self {
            entries: vec![(row, 1)],
        }
    }

    /// Build a column from arbitrary `(row, coefficient)` pairs. Duplicate rows
    /// are summed, coefficients reduced mod `q`, zeros dropped.
    pub fn from_entries<I>(entries: I, field: PrimeField) -> Self
    where
        I: IntoIterator<Item = (usize, i64)>,
    {
        let mut raw: Vec<(usize, u32)> = entries
            .into_iter()
            .map(|(r, c)| (r, field.element(c)))
            .collect();
        raw.sort_by_key(|&(r, _)| r);
        let mut out: Vec<(usize, u32)> = Vec::with_capacity(raw.len());
        for (r, c) in raw {
            match out.last_mut() {
                Some(last) if last.0 == r => last.1 = field.add(last.1, c),
                _ => out.push((r, c)),
            }
        }
        out.retain(|&(_, c)| c != 0);
        Self { entries: out }
    }

    /// Build from a dense coefficient vector.
    pub fn from_dense(values: &[u32]) -> Self {
        Self {
            entries: values
                .iter()
                .enumerate()
                .filter(|(_, &c)| c != 0)
                .map(|(r, &c)| (r, c))
                .collect(),
        }
    }

    pub fn to_dense(&self, len: usize) -> Vec<u32> {
        let mut out = vec![0; len];
        for &(r, c) in &self.entries {
            out[r] = c;
        }
        out
    }

    #[inline]
    pub fn entries(&self) -> &[(usize, u32)] {
        &self.entries
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Largest row index with a nonzero coefficient.
    #[inline]
    pub fn low(&self) -> Option<usize> {
        self.entries.last().map(|&(r, _)| r)
    }

    #[inline]
    pub fn low_entry(&self) -> Option<(usize, u32)> {
        self.entries.last().copied()
    }

    pub fn get(&self, row: usize) -> u32 {
        match self.entries.binary_search_by_key(&row, |&(r, _)| r) {
            Ok(i) => self.entries[i].1,
            Err(_) => 0,
        }
    }

    /// `self += factor * other`.
    pub fn add_scaled(&mut self, factor: u32, other: &SparseColumn, field: PrimeField) {
        if factor == 0 || other.is_zero() {
            return;
        }
        let mut merged = Vec::with_capacity(self.entries.len() + other.entries.len());
        let (mut a, mut b) = (0, 0);
        let (lhs, rhs) = (&self.entries, &other.entries);
        while a < lhs.len() || b < rhs.len() {
            let take_left = b == rhs.len() || (a < lhs.len() && lhs[a].0 < rhs[b].0);
            let take_right = a == lhs.len() || (b < rhs.len() && rhs[b].0 < lhs[a].0);
            if take_left {
                merged.push(lhs[a]);
                a += 1;
            } else if take_right {
                merged.push((rhs[b].0, field.mul(factor, rhs[b].1)));
                b += 1;
            } else {
                let c = field.add(lhs[a].1, field.mul(factor, rhs[b].1));
                if c != 0 {
                    merged.push((lhs[a].0, c));
                }
                a += 1;
                b += 1;
            }
        }
        self.entries = merged;
    }

    pub fn scaled(&self, factor: u32, field: PrimeField) -> Self {
        if factor == 0 {
            return Self::new();
        }
        Self {
            entries: self
                .entries
                .iter()
                .map(|&(r, c)| (r, field.mul(c, factor)))
                .collect(),
        }
    }

    /// Relabel rows through `map`; rows mapped to `None` are dropped.
    pub fn remap_rows<F>(&self, field: PrimeField, mut map: F) -> Self
    where
        F: FnMut(usize) -> Option<usize>,
    {
        Self::from_entries(
            self.entries
                .iter()
                .filter_map(|&(r, c)| map(r).map(|nr| (nr, i64::from(c)))),
            field,
        )
    }
}

/// Column-major sparse matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    num_rows: usize,
    columns: Vec<SparseColumn>,
}

impl SparseMatrix {
    /// Panics if any entry's row index is `>= num_rows`.
    pub fn new(num_rows: usize, columns: Vec<SparseColumn>) -> Self {
        for (j, col) in columns.iter().enumerate() {
            if let Some(low) = col.low() {
                assert!(
                    low < num_rows,
                    "column {j} has row index {low} outside a {num_rows}-row matrix"
                );
            }
        }
        Self { num_rows, columns }
    }

    pub fn zeros(num_rows: usize, num_cols: usize) -> Self {
        Self {
            num_rows,
            columns: vec![SparseColumn::new(); num_cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self {
            num_rows: n,
            columns: (0..n).map(SparseColumn::unit).collect(),
        }
    }

    #[inline]
    pub fn num_rows(&self) -> usize {
        self.num_rows
    }

    #[inline]
    pub fn num_cols(&self) -> usize {
        self.columns.len()
    }

    #[inline]
    pub fn column(&self, j: usize) -> &SparseColumn {
        &self.columns[j]
    }

    #[inline]
    pub fn columns(&self) -> &[SparseColumn] {
        &self.columns
    }

    pub fn into_columns(self) -> Vec<SparseColumn> {
        self.columns
    }

    pub fn push_column(&mut self, col: SparseColumn) {
        if let Some(low) = col.low() {
            assert!(low < self.num_rows);
        }
        self.columns.push(col);
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(SparseColumn::is_zero)
    }

    /// `self * coeffs` for a dense coefficient vector over the columns.
    pub fn apply(&self, coeffs: &[u32], field: PrimeField) -> SparseColumn {
        let mut out = SparseColumn::new();
        for (col, &c) in self.columns.iter().zip(coeffs) {
            out.add_scaled(c, col, field);
        }
        out
    }

    /// `self * rhs`, where `rhs` has one row per column of `self`.
    pub fn mul(&self, rhs: &SparseMatrix, field: PrimeField) -> SparseMatrix {
        assert_eq!(rhs.num_rows, self.num_cols(), "dimension mismatch in product");
        let columns = rhs
            .columns
            .iter()
            .map(|rc| {
                let mut out = SparseColumn::new();
                for &(k, c) in rc.entries() {
                    out.add_scaled(c, &self.columns[k], field);
                }
                out
            })
            .collect();
        SparseMatrix {
            num_rows: self.num_rows,
            columns,
        }
    }

    pub fn to_dense_columns(&self) -> Vec<Vec<u32>> {
        self.columns
            .iter()
            .map(|c| c.to_dense(self.num_rows))
            .collect()
    }
}
