//! Graded subgroups of a chain complex, their filtrations, and the supremum and
//! infimum subcomplexes they generate.
//!
//! A [`GradedSubgroup`] lists, per dimension `p`, the basis generators spanning
//! `D_p` followed by the extension generators needed to write their boundaries.
//! Chains of dimension `p` are written in these "listed coordinates": basis
//! generator `i` is coordinate `i`, extension generator `k` is coordinate
//! `basis_len(p) + k`.

use std::fmt;

use thiserror::Error;

use crate::linalg::{
    kernel, rank, EchelonBasis, PrimeField, SpanSolver, SparseColumn, SparseMatrix,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GeneratorKind {
    Basis,
    Extension,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GeneratorId {
    pub dim: usize,
    pub kind: GeneratorKind,
    pub index: usize,
}

impl GeneratorId {
    pub fn basis(dim: usize, index: usize) -> Self {
        Self {
            dim,
            kind: GeneratorKind::Basis,
            index,
        }
    }

    pub fn extension(dim: usize, index: usize) -> Self {
        Self {
            dim,
            kind: GeneratorKind::Extension,
            index,
        }
    }
}

impl fmt::Display for GeneratorId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match self.kind {
            GeneratorKind::Basis => "basis",
            GeneratorKind::Extension => "extension",
        };
        write!(f, "{kind} generator {} of dimension {}", self.index, self.dim)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ValidationError {
    #[error("dimension {dim}: expected {expected} heights, found {found}")]
    HeightCount {
        dim: usize,
        expected: usize,
        found: usize,
    },
    #[error("dimension {dim}: basis generator {index} has height {height}, outside 1..={stages}")]
    HeightOutOfRange {
        dim: usize,
        index: usize,
        height: usize,
        stages: usize,
    },
    #[error("dimension {dim}: heights decrease at basis generator {index} ({previous} then {height})")]
    HeightsNotMonotone {
        dim: usize,
        index: usize,
        previous: usize,
        height: usize,
    },
    #[error("boundary of {generator} references coordinate {row}, but dimension {} lists only {listed} generators", generator.dim.wrapping_sub(1))]
    UnlistedGenerator {
        generator: GeneratorId,
        row: usize,
        listed: usize,
    },
    #[error("{generator} has a nonzero boundary")]
    NonzeroVertexBoundary { generator: GeneratorId },
    #[error("boundary of the boundary of {generator} is nonzero")]
    BoundarySquared { generator: GeneratorId },
    #[error("boundary maps of dimensions {dim} and {} do not compose to zero", dim + 1)]
    SliceBoundarySquared { dim: usize },
    #[error("dimension {dim}: boundary of a generator leaves the complex being built")]
    BoundaryEscapes { dim: usize },
    #[error("dimension {dim}: subcomplex is not contained in the ambient complex")]
    NotContained { dim: usize },
    #[error("dimension {dim}: ambient coordinate lengths differ ({left} vs {right})")]
    AmbientMismatch {
        dim: usize,
        left: usize,
        right: usize,
    },
}

/// Generators of one dimension: boundaries of the basis generators, and of the
/// extension generators where known.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GradedDimension {
    pub basis: Vec<SparseColumn>,
    pub extension: Vec<Option<SparseColumn>>,
}

impl GradedDimension {
    pub fn listed_len(&self) -> usize {
        self.basis.len() + self.extension.len()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedSubgroup {
    field: PrimeField,
    dims: Vec<GradedDimension>,
}

impl GradedSubgroup {
    pub fn empty(field: PrimeField) -> Self {
        Self {
            field,
            dims: Vec::new(),
        }
    }

    /// Validated construction. Dimensions are indexed from 0.
    pub fn new(field: PrimeField, dims: Vec<GradedDimension>) -> Result<Self, ValidationError> {
        let g = Self { field, dims };
        g.validate()?;
        Ok(g)
    }

    pub fn new_unchecked(field: PrimeField, dims: Vec<GradedDimension>) -> Self {
        Self { field, dims }
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
    }

    /// Number of stored dimensions (the top dimension is `num_dims() - 1`).
    #[inline]
    pub fn num_dims(&self) -> usize {
        self.dims.len()
    }

    pub fn dimension(&self, p: usize) -> Option<&GradedDimension> {
        self.dims.get(p)
    }

    pub fn dimensions(&self) -> &[GradedDimension] {
        &self.dims
    }

    pub fn basis_len(&self, p: usize) -> usize {
        self.dims.get(p).map_or(0, |d| d.basis.len())
    }

    pub fn extension_len(&self, p: usize) -> usize {
        self.dims.get(p).map_or(0, |d| d.extension.len())
    }

    pub fn listed_len(&self, p: usize) -> usize {
        self.dims.get(p).map_or(0, GradedDimension::listed_len)
    }

    pub fn listed_coordinate(&self, id: GeneratorId) -> usize {
        match id.kind {
            GeneratorKind::Basis => id.index,
            GeneratorKind::Extension => self.basis_len(id.dim) + id.index,
        }
    }

    pub fn generator_at(&self, p: usize, coordinate: usize) -> GeneratorId {
        let m = self.basis_len(p);
        if coordinate < m {
            GeneratorId::basis(p, coordinate)
        } else {
            GeneratorId::extension(p, coordinate - m)
        }
    }

    pub fn boundary(&self, id: GeneratorId) -> Option<&SparseColumn> {
        let d = self.dims.get(id.dim)?;
        match id.kind {
            GeneratorKind::Basis => d.basis.get(id.index),
            GeneratorKind::Extension => d.extension.get(id.index)?.as_ref(),
        }
    }

    /// Boundary of the chain at listed coordinate `coordinate` of dimension `p`.
    pub fn boundary_at(&self, p: usize, coordinate: usize) -> Option<&SparseColumn> {
        self.boundary(self.generator_at(p, coordinate))
    }

    /// Basis boundaries of dimension `p` as a matrix over the listed
    /// coordinates of dimension `p - 1`.
    pub fn basis_boundary_matrix(&self, p: usize) -> SparseMatrix {
        let rows = if p == 0 { 0 } else { self.listed_len(p - 1) };
        let cols = self.dims.get(p).map_or_else(Vec::new, |d| d.basis.clone());
        SparseMatrix::new(rows, cols)
    }

    /// Keep dimensions `0..=top` only.
    pub fn truncated(&self, top: usize) -> Self {
        Self {
            field: self.field,
            dims: self.dims.iter().take(top + 1).cloned().collect(),
        }
    }

    /// Reorder the basis of every dimension; `orders[p][new] = old`.
    /// Extension generators keep their order.
    pub fn permute_basis(&self, orders: &[Vec<usize>]) -> Self {
        let f = self.field;
        let mut inverse: Vec<Vec<usize>> = Vec::with_capacity(self.dims.len());
        for (p, d) in self.dims.iter().enumerate() {
            let order = &orders[p];
            assert_eq!(order.len(), d.basis.len(), "dimension {p}: order length");
            let mut inv = vec![usize::MAX; order.len()];
            for (new, &old) in order.iter().enumerate() {
                inv[old] = new;
            }
            inverse.push(inv);
        }
        let dims = self
            .dims
            .iter()
            .enumerate()
            .map(|(p, d)| {
                let remap = |col: &SparseColumn| {
                    if p == 0 {
                        return col.clone();
                    }
                    let m = inverse[p - 1].len();
                    col.remap_rows(f, |r| Some(if r < m { inverse[p - 1][r] } else { r }))
                };
                GradedDimension {
                    basis: orders[p].iter().map(|&old| remap(&d.basis[old])).collect(),
                    extension: d.extension.iter().map(|e| e.as_ref().map(remap)).collect(),
                }
            })
            .collect();
        Self { field: f, dims }
    }

    /// Closure, zero vertex boundaries, and `∂∂ = 0` wherever the second
    /// boundary is fully known.
    pub fn validate(&self) -> Result<(), ValidationError> {
        for (p, d) in self.dims.iter().enumerate() {
            let ids = (0..d.basis.len())
                .map(|i| GeneratorId::basis(p, i))
                .chain((0..d.extension.len()).map(|k| GeneratorId::extension(p, k)));
            for id in ids {
                let Some(col) = self.boundary(id) else {
                    continue;
                };
                if p == 0 {
                    if !col.is_zero() {
                        return Err(ValidationError::NonzeroVertexBoundary { generator: id });
                    }
                    continue;
                }
                let listed = self.listed_len(p - 1);
                if let Some(row) = col.low().filter(|&r| r >= listed) {
                    return Err(ValidationError::UnlistedGenerator {
                        generator: id,
                        row,
                        listed,
                    });
                }
            }
        }
        for (p, d) in self.dims.iter().enumerate().skip(2) {
            let ids = (0..d.basis.len())
                .map(|i| GeneratorId::basis(p, i))
                .chain((0..d.extension.len()).map(|k| GeneratorId::extension(p, k)));
            for id in ids {
                let Some(col) = self.boundary(id) else {
                    continue;
                };
                let mut second = SparseColumn::new();
                let mut known = true;
                for &(r, c) in col.entries() {
                    match self.boundary_at(p - 1, r) {
                        Some(b) => second.add_scaled(c, b, self.field),
                        None => {
                            known = false;
                            break;
                        }
                    }
                }
                if known && !second.is_zero() {
                    return Err(ValidationError::BoundarySquared { generator: id });
                }
            }
        }
        Ok(())
    }
}

/// A graded subgroup with a compatible basis: heights are non-decreasing along
/// each dimension's basis order, and stage `i` is spanned by the basis prefix
/// of height `<= i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FilteredGradedSubgroup {
    complex: GradedSubgroup,
    heights: Vec<Vec<usize>>,
    stages: usize,
}

impl FilteredGradedSubgroup {
    pub fn new(
        complex: GradedSubgroup,
        heights: Vec<Vec<usize>>,
        stages: usize,
    ) -> Result<Self, ValidationError> {
        let f = Self {
            complex,
            heights,
            stages,
        };
        validate_compatible(&f)?;
        Ok(f)
    }

    pub fn new_unchecked(complex: GradedSubgroup, heights: Vec<Vec<usize>>, stages: usize) -> Self {
        Self {
            complex,
            heights,
            stages,
        }
    }

    #[inline]
    pub fn complex(&self) -> &GradedSubgroup {
        &self.complex
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.complex.field()
    }

    #[inline]
    pub fn stages(&self) -> usize {
        self.stages
    }

    pub fn heights(&self, p: usize) -> &[usize] {
        self.heights.get(p).map_or(&[], Vec::as_slice)
    }

    pub fn height(&self, p: usize, index: usize) -> usize {
        self.heights[p][index]
    }

    /// Number of basis generators of dimension `p` present at `stage`.
    pub fn stage_len(&self, p: usize, stage: usize) -> usize {
        self.heights(p).partition_point(|&h| h <= stage)
    }

    /// Membership masks of stage `stage`, one per stored dimension.
    pub fn stage_members(&self, stage: usize) -> Vec<Vec<bool>> {
        (0..self.complex.num_dims())
            .map(|p| self.heights(p).iter().map(|&h| h <= stage).collect())
            .collect()
    }
}

/// Checks heights and the closure invariants; reports the first offender.
pub fn validate_compatible(f: &FilteredGradedSubgroup) -> Result<(), ValidationError> {
    let g = &f.complex;
    if f.heights.len() > g.num_dims() {
        let dim = g.num_dims();
        return Err(ValidationError::HeightCount {
            dim,
            expected: 0,
            found: f.heights[dim].len(),
        });
    }
    for p in 0..g.num_dims() {
        let hs = f.heights(p);
        if hs.len() != g.basis_len(p) {
            return Err(ValidationError::HeightCount {
                dim: p,
                expected: g.basis_len(p),
                found: hs.len(),
            });
        }
        for (i, &h) in hs.iter().enumerate() {
            if h < 1 || h > f.stages {
                return Err(ValidationError::HeightOutOfRange {
                    dim: p,
                    index: i,
                    height: h,
                    stages: f.stages,
                });
            }
            if i > 0 && hs[i - 1] > h {
                return Err(ValidationError::HeightsNotMonotone {
                    dim: p,
                    index: i,
                    previous: hs[i - 1],
                    height: h,
                });
            }
        }
    }
    g.validate()
}

/// One dimension of an explicit subcomplex: generators as vectors in ambient
/// (listed) coordinates, and the boundary matrix into the previous dimension's
/// generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SliceDimension {
    pub ambient_len: usize,
    pub generators: Vec<SparseColumn>,
    pub boundary: SparseMatrix,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainComplexSlice {
    field: PrimeField,
    dims: Vec<SliceDimension>,
}

impl ChainComplexSlice {
    pub fn new(field: PrimeField, dims: Vec<SliceDimension>) -> Self {
        Self { field, dims }
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn num_dims(&self) -> usize {
        self.dims.len()
    }

    pub fn dimension(&self, p: usize) -> Option<&SliceDimension> {
        self.dims.get(p)
    }

    pub fn generator_count(&self, p: usize) -> usize {
        self.dims.get(p).map_or(0, |d| d.generators.len())
    }

    fn boundary_rank(&self, p: usize) -> usize {
        self.dims
            .get(p)
            .map_or(0, |d| rank(&d.boundary, self.field))
    }

    pub fn generator_matrix(&self, p: usize) -> SparseMatrix {
        match self.dims.get(p) {
            Some(d) => SparseMatrix::new(d.ambient_len, d.generators.clone()),
            None => SparseMatrix::zeros(0, 0),
        }
    }

    /// Consecutive boundary maps compose to zero.
    pub fn check_boundaries(&self) -> Result<(), ValidationError> {
        for p in 1..self.dims.len() {
            let prod = self.dims[p - 1].boundary.mul(&self.dims[p].boundary, self.field);
            if p >= 2 && !prod.is_zero() {
                return Err(ValidationError::SliceBoundarySquared { dim: p - 1 });
            }
        }
        Ok(())
    }

    /// Span containment `other_p ⊆ self_p` for every dimension.
    pub fn contains(&self, other: &ChainComplexSlice) -> bool {
        (0..other.num_dims()).all(|p| {
            if other.generator_count(p) == 0 {
                return true;
            }
            let Some(mine) = self.dims.get(p) else {
                return false;
            };
            if mine.ambient_len != other.dims[p].ambient_len {
                return false;
            }
            let solver = SpanSolver::new(&self.generator_matrix(p), self.field);
            other.dims[p].generators.iter().all(|g| solver.contains(g))
        })
    }

    pub fn same_spans(&self, other: &ChainComplexSlice) -> bool {
        self.contains(other) && other.contains(self)
    }
}

/// `dim H_p = dim C_p - rank ∂_p - rank ∂_{p+1}` for `p <= p_max`.
pub fn homology_dims(c: &ChainComplexSlice, p_max: usize) -> Result<Vec<usize>, ValidationError> {
    c.check_boundaries()?;
    Ok((0..=p_max)
        .map(|p| {
            let n = c.generator_count(p);
            let r_here = if p == 0 { 0 } else { c.boundary_rank(p) };
            n - r_here - c.boundary_rank(p + 1)
        })
        .collect())
}

/// `dim H_p(big / small)` via ranks of the quotient boundary maps.
pub fn relative_homology_dims(
    big: &ChainComplexSlice,
    small: &ChainComplexSlice,
    p_max: usize,
) -> Result<Vec<usize>, ValidationError> {
    big.check_boundaries()?;
    small.check_boundaries()?;
    let f = big.field;
    let top = big.num_dims().max(small.num_dims());
    // Small generators in big's generator coordinates.
    let mut small_coords: Vec<Vec<SparseColumn>> = Vec::with_capacity(top);
    for p in 0..top {
        if small.generator_count(p) == 0 {
            small_coords.push(Vec::new());
            continue;
        }
        let Some(bd) = big.dimension(p) else {
            return Err(ValidationError::NotContained { dim: p });
        };
        let sd = &small.dims[p];
        if bd.ambient_len != sd.ambient_len {
            return Err(ValidationError::AmbientMismatch {
                dim: p,
                left: bd.ambient_len,
                right: sd.ambient_len,
            });
        }
        let solver = SpanSolver::new(&big.generator_matrix(p), f);
        let mut coords = Vec::with_capacity(sd.generators.len());
        for g in &sd.generators {
            let c = solver.solve(g).ok_or(ValidationError::NotContained { dim: p })?;
            coords.push(SparseColumn::from_dense(&c));
        }
        small_coords.push(coords);
    }
    let small_rank = |p: usize| -> usize {
        small_coords.get(p).map_or(0, |cs| {
            rank(&SparseMatrix::new(big.generator_count(p), cs.clone()), f)
        })
    };
    // rank of ∂̄_p : big_p/small_p -> big_{p-1}/small_{p-1}
    let quotient_boundary_rank = |p: usize| -> usize {
        if p == 0 || p >= top {
            return 0;
        }
        let Some(bd) = big.dimension(p) else { return 0 };
        let mut cols = bd.boundary.columns().to_vec();
        cols.extend(small_coords[p - 1].iter().cloned());
        let m = SparseMatrix::new(big.generator_count(p - 1), cols);
        rank(&m, f) - small_rank(p - 1)
    };
    Ok((0..=p_max)
        .map(|p| {
            let quotient = big.generator_count(p) - small_rank(p);
            quotient - quotient_boundary_rank(p) - quotient_boundary_rank(p + 1)
        })
        .collect())
}

fn all_members(g: &GradedSubgroup) -> Vec<Vec<bool>> {
    (0..g.num_dims())
        .map(|p| vec![true; g.basis_len(p)])
        .collect()
}

/// Supremum complex `S_p = D_p + ∂D_{p+1}` of the whole graded subgroup.
pub fn sup_complex(g: &GradedSubgroup) -> Result<ChainComplexSlice, ValidationError> {
    sup_complex_masked(g, &all_members(g))
}

/// Supremum complex of stage `stage` of a filtration.
pub fn sup_complex_at(
    f: &FilteredGradedSubgroup,
    stage: usize,
) -> Result<ChainComplexSlice, ValidationError> {
    sup_complex_masked(f.complex(), &f.stage_members(stage))
}

/// Supremum complex of the graded subgroup spanned by the basis generators
/// selected in `members[p]`.
pub fn sup_complex_masked(
    g: &GradedSubgroup,
    members: &[Vec<bool>],
) -> Result<ChainComplexSlice, ValidationError> {
    let f = g.field();
    let n = g.num_dims();
    let selected = |p: usize| -> Vec<usize> {
        members
            .get(p)
            .map_or_else(Vec::new, |m| (0..m.len()).filter(|&i| m[i]).collect())
    };
    let mut dims: Vec<SliceDimension> = Vec::with_capacity(n);
    for p in 0..n {
        let mut generators: Vec<SparseColumn> = Vec::new();
        let mut echelon = EchelonBasis::new(f);
        let own = selected(p);
        for &i in &own {
            let v = SparseColumn::unit(i);
            echelon.insert(&v);
            generators.push(v);
        }
        if p + 1 < n {
            for j in selected(p + 1) {
                let b = &g.dims[p + 1].basis[j];
                if echelon.insert(b) {
                    generators.push(b.clone());
                }
            }
        }
        let rows = if p == 0 { 0 } else { dims[p - 1].generators.len() };
        let mut boundary = SparseMatrix::zeros(rows, 0);
        let solver = (p > 0).then(|| SpanSolver::new(&dims_generators(&dims[p - 1]), f));
        for (pos, _) in generators.iter().enumerate() {
            let col = if pos < own.len() && p > 0 {
                let b = &g.dims[p].basis[own[pos]];
                let coeffs = solver
                    .as_ref()
                    .expect("p > 0")
                    .solve(b)
                    .ok_or(ValidationError::BoundaryEscapes { dim: p })?;
                SparseColumn::from_dense(&coeffs)
            } else {
                SparseColumn::new()
            };
            boundary.push_column(col);
        }
        dims.push(SliceDimension {
            ambient_len: g.listed_len(p),
            generators,
            boundary,
        });
    }
    Ok(ChainComplexSlice::new(f, dims))
}

fn dims_generators(d: &SliceDimension) -> SparseMatrix {
    SparseMatrix::new(d.ambient_len, d.generators.clone())
}

/// Infimum complex `I_p = D_p ∩ ∂^{-1} D_{p-1}` of the whole graded subgroup.
pub fn inf_complex(g: &GradedSubgroup) -> Result<ChainComplexSlice, ValidationError> {
    inf_complex_masked(g, &all_members(g))
}

pub fn inf_complex_at(
    f: &FilteredGradedSubgroup,
    stage: usize,
) -> Result<ChainComplexSlice, ValidationError> {
    inf_complex_masked(f.complex(), &f.stage_members(stage))
}

pub fn inf_complex_masked(
    g: &GradedSubgroup,
    members: &[Vec<bool>],
) -> Result<ChainComplexSlice, ValidationError> {
    let f = g.field();
    let n = g.num_dims();
    let mut dims: Vec<SliceDimension> = Vec::with_capacity(n);
    for p in 0..n {
        let own: Vec<usize> = members
            .get(p)
            .map_or_else(Vec::new, |m| (0..m.len()).filter(|&i| m[i]).collect());
        let generators: Vec<SparseColumn> = if p == 0 {
            own.iter().map(|&i| SparseColumn::unit(i)).collect()
        } else {
            // Rows of dimension p-1 outside D_{p-1} must vanish.
            let below = g.listed_len(p - 1);
            let mut outside: Vec<Option<usize>> = vec![None; below];
            let mut count = 0;
            for (r, slot) in outside.iter_mut().enumerate() {
                let inside = r < g.basis_len(p - 1) && members[p - 1][r];
                if !inside {
                    *slot = Some(count);
                    count += 1;
                }
            }
            let restricted = SparseMatrix::new(
                count,
                own.iter()
                    .map(|&i| g.dims[p].basis[i].remap_rows(f, |r| outside[r]))
                    .collect(),
            );
            kernel(&restricted, f)
                .into_iter()
                .map(|coeffs| {
                    SparseColumn::from_entries(
                        coeffs.entries().iter().map(|&(k, c)| (own[k], i64::from(c))),
                        f,
                    )
                })
                .collect()
        };
        let rows = if p == 0 { 0 } else { dims[p - 1].generators.len() };
        let mut boundary = SparseMatrix::zeros(rows, 0);
        if p > 0 {
            let solver = SpanSolver::new(&dims_generators(&dims[p - 1]), f);
            let full = g.basis_boundary_matrix(p);
            for x in &generators {
                let image = full.apply(&x.to_dense(g.basis_len(p)), f);
                let coeffs = solver
                    .solve(&image)
                    .ok_or(ValidationError::BoundaryEscapes { dim: p })?;
                boundary.push_column(SparseColumn::from_dense(&coeffs));
            }
        } else {
            for _ in &generators {
                boundary.push_column(SparseColumn::new());
            }
        }
        dims.push(SliceDimension {
            ambient_len: g.listed_len(p),
            generators,
            boundary,
        });
    }
    Ok(ChainComplexSlice::new(f, dims))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn col(entries: &[(usize, i64)], f: PrimeField) -> SparseColumn {
        SparseColumn::from_entries(entries.iter().copied(), f)
    }

    /// Hypergraph {{a,b,c}} inside its closure: D_2 = {abc}, D_1 = D_0 = 0,
    /// with edges ab, ac, bc and vertices a, b, c as extension generators.
    fn lonely_triangle(f: PrimeField) -> GradedSubgroup {
        let edge = |u: usize, v: usize| Some(col(&[(u, -1), (v, 1)], f));
        GradedSubgroup::new(
            f,
            vec![
                GradedDimension {
                    basis: vec![],
                    extension: vec![Some(SparseColumn::new()); 3],
                },
                GradedDimension {
                    basis: vec![],
                    extension: vec![edge(0, 1), edge(0, 2), edge(1, 2)],
                },
                GradedDimension {
                    // ∂(abc) = bc - ac + ab
                    basis: vec![col(&[(0, 1), (1, -1), (2, 1)], f)],
                    extension: vec![],
                },
            ],
        )
        .unwrap()
    }

    /// Full triangle boundary (a, b, c; ab, bc, ac), no 2-cell.
    fn hollow_triangle(f: PrimeField) -> GradedSubgroup {
        GradedSubgroup::new(
            f,
            vec![
                GradedDimension {
                    basis: vec![SparseColumn::new(); 3],
                    extension: vec![],
                },
                GradedDimension {
                    basis: vec![
                        col(&[(0, -1), (1, 1)], f),
                        col(&[(1, -1), (2, 1)], f),
                        col(&[(0, -1), (2, 1)], f),
                    ],
                    extension: vec![],
                },
            ],
        )
        .unwrap()
    }

    #[test]
    fn lonely_triangle_sup_and_inf() {
        for q in [2, 5] {
            let f = PrimeField::new(q).unwrap();
            let g = lonely_triangle(f);
            let s = sup_complex(&g).unwrap();
            assert_eq!(s.generator_count(2), 1);
            assert_eq!(s.generator_count(1), 1);
            assert_eq!(s.generator_count(0), 0);
            assert_eq!(homology_dims(&s, 2).unwrap(), vec![0, 0, 0]);
            let i = inf_complex(&g).unwrap();
            assert_eq!(
                (0..3).map(|p| i.generator_count(p)).collect::<Vec<_>>(),
                vec![0, 0, 0]
            );
            assert_eq!(homology_dims(&i, 2).unwrap(), vec![0, 0, 0]);
        }
    }

    #[test]
    fn subcomplex_is_its_own_sup_and_inf() {
        let f = PrimeField::new(3).unwrap();
        let g = hollow_triangle(f);
        let s = sup_complex(&g).unwrap();
        let i = inf_complex(&g).unwrap();
        assert!(s.same_spans(&i));
        assert_eq!(s.generator_count(1), 3);
        assert_eq!(homology_dims(&s, 1).unwrap(), vec![1, 1]);
    }

    #[test]
    fn empty_subgroup_gives_zero_complex() {
        let g = GradedSubgroup::empty(PrimeField::F2);
        let s = sup_complex(&g).unwrap();
        assert_eq!(s.num_dims(), 0);
        assert_eq!(homology_dims(&s, 2).unwrap(), vec![0, 0, 0]);
        assert_eq!(homology_dims(&inf_complex(&g).unwrap(), 1).unwrap(), vec![0, 0]);
    }

    #[test]
    fn single_vertex_homology() {
        let g = GradedSubgroup::new(
            PrimeField::F2,
            vec![GradedDimension {
                basis: vec![SparseColumn::new()],
                extension: vec![],
            }],
        )
        .unwrap();
        assert_eq!(homology_dims(&sup_complex(&g).unwrap(), 0).unwrap(), vec![1]);
    }

    /// Edge uv with both vertices; small = {v}.
    fn edge_pair(f: PrimeField) -> (ChainComplexSlice, ChainComplexSlice) {
        let g = GradedSubgroup::new(
            f,
            vec![
                GradedDimension {
                    basis: vec![SparseColumn::new(); 2],
                    extension: vec![],
                },
                GradedDimension {
                    basis: vec![col(&[(0, -1), (1, 1)], f)],
                    extension: vec![],
                },
            ],
        )
        .unwrap();
        let big = sup_complex(&g).unwrap();
        let small = sup_complex_masked(&g, &[vec![false, true], vec![false]]).unwrap();
        (big, small)
    }

    #[test]
    fn relative_homology_examples() {
        let f = PrimeField::new(3).unwrap();
        let (big, small) = edge_pair(f);
        assert_eq!(relative_homology_dims(&big, &small, 1).unwrap(), vec![0, 0]);
        assert_eq!(relative_homology_dims(&big, &big, 1).unwrap(), vec![0, 0]);
        let zero = sup_complex(&GradedSubgroup::empty(f)).unwrap();
        assert_eq!(
            relative_homology_dims(&big, &zero, 1).unwrap(),
            homology_dims(&big, 1).unwrap()
        );
        assert_eq!(
            relative_homology_dims(&small, &big, 1),
            Err(ValidationError::NotContained { dim: 0 })
        );
    }

    #[test]
    fn compatible_heights() {
        let g = GradedSubgroup::new(
            PrimeField::F2,
            vec![GradedDimension {
                basis: vec![SparseColumn::new(); 4],
                extension: vec![],
            }],
        )
        .unwrap();
        assert!(FilteredGradedSubgroup::new(g.clone(), vec![vec![1, 1, 2, 3]], 3).is_ok());
        let g3 = g.truncated(0);
        let g3 = GradedSubgroup::new(
            g3.field(),
            vec![GradedDimension {
                basis: vec![SparseColumn::new(); 3],
                extension: vec![],
            }],
        )
        .unwrap();
        assert_eq!(
            FilteredGradedSubgroup::new(g3, vec![vec![1, 3, 2]], 3).unwrap_err(),
            ValidationError::HeightsNotMonotone {
                dim: 0,
                index: 2,
                previous: 3,
                height: 2
            }
        );
        assert!(matches!(
            FilteredGradedSubgroup::new(g, vec![vec![1, 1, 2, 4]], 3),
            Err(ValidationError::HeightOutOfRange { index: 3, .. })
        ));
    }

    #[test]
    fn unlisted_generator_is_a_closure_error() {
        let f = PrimeField::F2;
        let err = GradedSubgroup::new(
            f,
            vec![
                GradedDimension {
                    basis: vec![SparseColumn::new()],
                    extension: vec![],
                },
                GradedDimension {
                    basis: vec![col(&[(0, 1), (1, 1)], f)],
                    extension: vec![],
                },
            ],
        )
        .unwrap_err();
        assert_eq!(
            err,
            ValidationError::UnlistedGenerator {
                generator: GeneratorId::basis(1, 0),
                row: 1,
                listed: 1
            }
        );
    }

    #[test]
    fn nonzero_boundary_squared_is_rejected() {
        let f = PrimeField::new(3).unwrap();
        let err = GradedSubgroup::new(
            f,
            vec![
                GradedDimension {
                    basis: vec![SparseColumn::new(); 2],
                    extension: vec![],
                },
                GradedDimension {
                    basis: vec![col(&[(0, -1), (1, 1)], f)],
                    extension: vec![],
                },
                GradedDimension {
                    basis: vec![col(&[(0, 1)], f)],
                    extension: vec![],
                },
            ],
        )
        .unwrap_err();
        assert_eq!(
            err,
            ValidationError::BoundarySquared {
                generator: GeneratorId::basis(2, 0)
            }
        );
    }

    #[test]
    fn permuting_the_basis_keeps_homology() {
        let f = PrimeField::new(3).unwrap();
        let g = hollow_triangle(f);
        let h = g.permute_basis(&[vec![2, 0, 1], vec![1, 2, 0]]);
        h.validate().unwrap();
        assert_eq!(
            homology_dims(&sup_complex(&h).unwrap(), 1).unwrap(),
            homology_dims(&sup_complex(&g).unwrap(), 1).unwrap()
        );
    }
}
