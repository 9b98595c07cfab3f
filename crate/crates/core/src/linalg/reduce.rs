use std::collections::BTreeMap;

use super::{PrimeField, SparseColumn, SparseMatrix};

/// Pivot positions `(row, column)` of a reduced matrix. Rows and columns are
/// each used at most once.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PivotMap {
    row_to_col: BTreeMap<usize, usize>,
    col_to_row: BTreeMap<usize, usize>,
}

impl PivotMap {
    pub fn new() -> Self {
        Self::default()
    }

    /// Panics if the row or the column already carries a pivot.
    pub fn insert(&mut self, row: usize, col: usize) {
        assert!(
            self.row_to_col.insert(row, col).is_none(),
            "row {row} already has a pivot"
        );
        assert!(
            self.col_to_row.insert(col, row).is_none(),
            "column {col} already has a pivot"
        );
    }

    pub fn col_of_row(&self, row: usize) -> Option<usize> {
        self.row_to_col.get(&row).copied()
    }

    pub fn row_of_col(&self, col: usize) -> Option<usize> {
        self.col_to_row.get(&col).copied()
    }

    pub fn len(&self) -> usize {
        self.row_to_col.len()
    }

    pub fn is_empty(&self) -> bool {
        self.row_to_col.is_empty()
    }

    /// `(row, column)` pairs ordered by column.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.col_to_row.iter().map(|(&c, &r)| (r, c))
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct ReduceOptions<'a> {
    /// Keep the column-operation record `V` with `reduced = m * V`.
    pub record: bool,
    /// Columns known to reduce to zero; they are zeroed without being touched.
    /// Their recorded transform column is left empty.
    pub cleared: Option<&'a [bool]>,
}

#[derive(Clone, Debug)]
pub struct Reduction {
    pub reduced: SparseMatrix,
    pub pivots: PivotMap,
    pub transform: Option<SparseMatrix>,
}

pub fn reduce(m: &SparseMatrix, field: PrimeField) -> Reduction {
    reduce_with(m, field, ReduceOptions::default())
}

/// Left-to-right column reduction: column `j` only ever receives multiples of
/// already-reduced columns `i < j`, until its low is unique.
pub fn reduce_with(m: &SparseMatrix, field: PrimeField, opts: ReduceOptions<'_>) -> Reduction {
    let n = m.num_cols();
    let mut lookup: Vec<Option<usize>> = vec![None; m.num_rows()];
    let mut reduced: Vec<SparseColumn> = Vec::with_capacity(n);
    let mut transform: Vec<SparseColumn> = Vec::with_capacity(if opts.record { n } else { 0 });
    let mut pivots = PivotMap::new();

    for j in 0..n {
        let is_cleared = opts.cleared.is_some_and(|c| c.get(j).copied().unwrap_or(false));
        if is_cleared {
            reduced.push(SparseColumn::new());
            if opts.record {
                transform.push(SparseColumn::new());
            }
            continue;
        }
        let mut col = m.column(j).clone();
        let mut v = if opts.record {
            SparseColumn::unit(j)
        } else {
            SparseColumn::new()
        };
        while let Some((row, coef)) = col.low_entry() {
            let Some(i) = lookup[row] else { break };
            let pivot_coef = reduced[i].get(row);
            let factor = field.neg(field.div(coef, pivot_coef));
            col.add_scaled(factor, &reduced[i], field);
            if opts.record {
                v.add_scaled(factor, &transform[i], field);
            }
        }
        if let Some(row) = col.low() {
            lookup[row] = Some(j);
            pivots.insert(row, j);
        }
        reduced.push(col);
        if opts.record {
            transform.push(v);
        }
    }

    Reduction {
        reduced: SparseMatrix::new(m.num_rows(), reduced),
        pivots,
        transform: opts.record.then(|| SparseMatrix::new(n, transform)),
    }
}

pub fn rank(m: &SparseMatrix, field: PrimeField) -> usize {
    reduce(m, field).pivots.len()
}

/// Basis of the null space of `m`, as coefficient columns over `m`'s columns.
pub fn kernel(m: &SparseMatrix, field: PrimeField) -> Vec<SparseColumn> {
    let red = reduce_with(
        m,
        field,
        ReduceOptions {
            record: true,
            cleared: None,
        },
    );
    let transform = red.transform.expect("recorded");
    red.reduced
        .columns()
        .iter()
        .zip(transform.columns())
        .filter(|(r, _)| r.is_zero())
        .map(|(_, v)| v.clone())
        .collect()
}

/// Pre-reduced column span supporting repeated membership/coordinate queries.
#[derive(Clone, Debug)]
pub struct SpanSolver {
    field: PrimeField,
    num_cols: usize,
    reduced: SparseMatrix,
    transform: SparseMatrix,
    pivots: PivotMap,
}

impl SpanSolver {
    pub fn new(basis: &SparseMatrix, field: PrimeField) -> Self {
        let red = reduce_with(
            basis,
            field,
            ReduceOptions {
                record: true,
                cleared: None,
            },
        );
        Self {
            field,
            num_cols: basis.num_cols(),
            transform: red.transform.expect("recorded"),
            reduced: red.reduced,
            pivots: red.pivots,
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Coefficients `c` with `basis * c == target`, or `None` outside the span.
    pub fn solve(&self, target: &SparseColumn) -> Option<Vec<u32>> {
        let f = self.field;
        let mut rest = target.clone();
        let mut coeffs = SparseColumn::new();
        while let Some((row, coef)) = rest.low_entry() {
            let i = self.pivots.col_of_row(row)?;
            let r_i = self.reduced.column(i);
            let factor = f.div(coef, r_i.get(row));
            rest.add_scaled(f.neg(factor), r_i, f);
            coeffs.add_scaled(factor, self.transform.column(i), f);
        }
        Some(coeffs.to_dense(self.num_cols))
    }

    pub fn contains(&self, target: &SparseColumn) -> bool {
        let f = self.field;
        let mut rest = target.clone();
        while let Some((row, coef)) = rest.low_entry() {
            let Some(i) = self.pivots.col_of_row(row) else {
                return false;
            };
            let r_i = self.reduced.column(i);
            rest.add_scaled(f.neg(f.div(coef, r_i.get(row))), r_i, f);
        }
        true
    }
}

/// Coefficients expressing `target` in the column span of `basis_cols`.
pub fn solve_in_span(
    target: &SparseColumn,
    basis_cols: &SparseMatrix,
    field: PrimeField,
) -> Option<Vec<u32>> {
    SpanSolver::new(basis_cols, field).solve(target)
}

/// Growing set of vectors kept in echelon form by low index.
#[derive(Clone, Debug)]
pub struct EchelonBasis {
    field: PrimeField,
    by_low: BTreeMap<usize, SparseColumn>,
}

impl EchelonBasis {
    pub fn new(field: PrimeField) -> Self {
        Self {
            field,
            by_low: BTreeMap::new(),
        }
    }

    fn residue(&self, v: &SparseColumn) -> SparseColumn {
        let f = self.field;
        let mut rest = v.clone();
        while let Some((row, coef)) = rest.low_entry() {
            let Some(piv) = self.by_low.get(&row) else {
                break;
            };
            rest.add_scaled(f.neg(f.div(coef, piv.get(row))), piv, f);
        }
        rest
    }

    /// Adds `v` if it is independent of the current span; returns whether it was added.
    pub fn insert(&mut self, v: &SparseColumn) -> bool {
        let rest = self.residue(v);
        match rest.low() {
            Some(row) => {
                self.by_low.insert(row, rest);
                true
            }
            None => false,
        }
    }

    pub fn contains(&self, v: &SparseColumn) -> bool {
        self.residue(v).is_zero()
    }

    pub fn rank(&self) -> usize {
        self.by_low.len()
    }
}
