//! Mapping cones and extended persistence.
//!
//! An [`ExtendedInput`] carries one graded subgroup together with two
//! filtrations of it: an ascending one with `M` stages (the `D` filtration)
//! and a descending one with `N` stages (the `E` filtration). Both top stages
//! span the whole subgroup. The extended filtration lives on the cone of the
//! identity map and runs `D^1 ⊂ … ⊂ D^M ⊂ Ē^1 ⊂ … ⊂ Ē^N`.

use thiserror::Error;

use crate::graded::{
    validate_compatible, ChainComplexSlice, FilteredGradedSubgroup, GeneratorId, GradedDimension,
    GradedSubgroup, SliceDimension, ValidationError,
};
use crate::linalg::{PrimeField, SpanSolver, SparseColumn, SparseMatrix};
use crate::persistence::{build_matrices, compute_pairings, Interval};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExtendedError {
    #[error(transparent)]
    Validation(#[from] ValidationError),
    #[error("dimension {dim}: top ascending and descending stages span different subgroups")]
    SpanMismatch { dim: usize },
    #[error("dimension {dim}: subcomplex is not contained in the ambient complex")]
    NotContained { dim: usize },
    #[error("dimension {dim}: unpaired cycle of height {stage} in the extended filtration")]
    InfiniteInterval { dim: usize, stage: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ConeTag {
    /// `(0, d)`
    Base,
    /// `(e, 0)`
    Cone,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ConeGenerator {
    pub tag: ConeTag,
    pub underlying: GeneratorId,
}

impl ConeGenerator {
    pub fn cone_dim(&self) -> usize {
        match self.tag {
            ConeTag::Base => self.underlying.dim,
            ConeTag::Cone => self.underlying.dim + 1,
        }
    }
}

/// Mapping cone of the inclusion `small ⊆ big`, in canonical coordinates:
/// cone dimension `q` uses `[big ambient_q ; big ambient_{q-1}]`.
pub fn mapping_cone(
    small: &ChainComplexSlice,
    big: &ChainComplexSlice,
) -> Result<ChainComplexSlice, ExtendedError> {
    let f = big.field();
    let n = big.num_dims().max(small.num_dims());
    let ambient = |p: usize| big.dimension(p).map_or(0, |d| d.ambient_len);
    // Small generators expressed over big's generators.
    let mut inclusion: Vec<Vec<SparseColumn>> = Vec::with_capacity(n);
    for p in 0..n {
        let Some(sd) = small.dimension(p) else {
            inclusion.push(Vec::new());
            continue;
        };
        if sd.generators.is_empty() {
            inclusion.push(Vec::new());
            continue;
        }
        let bd = big.dimension(p).ok_or(ExtendedError::NotContained { dim: p })?;
        if bd.ambient_len != sd.ambient_len {
            return Err(ExtendedError::NotContained { dim: p });
        }
        let solver = SpanSolver::new(&big.generator_matrix(p), f);
        let mut cols = Vec::with_capacity(sd.generators.len());
        for g in &sd.generators {
            let c = solver.solve(g).ok_or(ExtendedError::NotContained { dim: p })?;
            cols.push(SparseColumn::from_dense(&c));
        }
        inclusion.push(cols);
    }
    let count = |c: &ChainComplexSlice, p: usize| c.generator_count(p);
    let mut dims = Vec::with_capacity(n + 1);
    for q in 0..=n {
        let base_len = ambient(q);
        let mut generators = Vec::new();
        let mut boundary_cols = Vec::new();
        let rows = if q == 0 {
            0
        } else {
            count(big, q - 1) + if q >= 2 { count(small, q - 2) } else { 0 }
        };
        if let Some(bd) = big.dimension(q) {
            for (k, g) in bd.generators.iter().enumerate() {
                generators.push(g.clone());
                boundary_cols.push(bd.boundary.column(k).clone());
            }
        }
        if q >= 1 {
            if let Some(sd) = small.dimension(q - 1) {
                let offset = count(big, q - 1);
                for (k, g) in sd.generators.iter().enumerate() {
                    generators.push(g.remap_rows(f, |r| Some(base_len + r)));
                    let mut col = inclusion[q - 1][k].clone();
                    if q >= 2 {
                        let shifted = sd.boundary.column(k).remap_rows(f, |r| Some(offset + r));
                        col.add_scaled(f.neg(1), &shifted, f);
                    }
                    boundary_cols.push(col);
                }
            }
        }
        dims.push(SliceDimension {
            ambient_len: base_len + if q >= 1 { ambient(q - 1) } else { 0 },
            generators,
            boundary: SparseMatrix::new(rows, boundary_cols),
        });
    }
    while dims.last().is_some_and(|d| d.generators.is_empty() && d.ambient_len == 0) {
        dims.pop();
    }
    Ok(ChainComplexSlice::new(f, dims))
}

/// Listed layout of one cone dimension.
#[derive(Clone, Debug, Default)]
struct ConeDimLayout {
    /// Listed cone coordinate of `(0, x)` for each listed coordinate `x` of dimension `q`.
    base_of: Vec<usize>,
    /// Listed cone coordinate of `(y, 0)` for each listed coordinate `y` of dimension `q - 1`.
    cone_of: Vec<usize>,
    /// Canonical coordinate of each listed cone coordinate.
    canonical: Vec<usize>,
    generators: Vec<ConeGenerator>,
}

/// Graded subgroup of the cone of the identity on the ambient complex, with
/// basis `(0, d)` for `d` in `base[q]` (in that order) followed by `(e, 0)` for
/// `e` in `cone[q - 1]`. Everything else listed in the ambient complex becomes
/// an extension generator. Cone dimensions `0..top_dims`.
fn cone_graded_ordered(
    g: &GradedSubgroup,
    base: &[Vec<usize>],
    cone: &[Vec<usize>],
    top_dims: usize,
) -> (GradedSubgroup, Vec<ConeDimLayout>) {
    let f = g.field();
    let list = |v: &[Vec<usize>], p: usize| v.get(p).cloned().unwrap_or_default();
    let mut layouts: Vec<ConeDimLayout> = Vec::with_capacity(top_dims);
    for q in 0..top_dims {
        let below = q.checked_sub(1);
        let lq = g.listed_len(q);
        let lb = below.map_or(0, |b| g.listed_len(b));
        let mut lay = ConeDimLayout {
            base_of: vec![usize::MAX; lq],
            cone_of: vec![usize::MAX; lb],
            canonical: Vec::with_capacity(lq + lb),
            generators: Vec::with_capacity(lq + lb),
        };
        let push = |lay: &mut ConeDimLayout, tag: ConeTag, dim: usize, x: usize| {
            let idx = lay.canonical.len();
            let underlying = g.generator_at(dim, x);
            match tag {
                ConeTag::Base => {
                    lay.base_of[x] = idx;
                    lay.canonical.push(x);
                }
                ConeTag::Cone => {
                    lay.cone_of[x] = idx;
                    lay.canonical.push(lq + x);
                }
            }
            lay.generators.push(ConeGenerator { tag, underlying });
        };
        let base_q = list(base, q);
        for &d in &base_q {
            push(&mut lay, ConeTag::Base, q, d);
        }
        let cone_q = below.map_or_else(Vec::new, |b| list(cone, b));
        if let Some(b) = below {
            for &e in &cone_q {
                push(&mut lay, ConeTag::Cone, b, e);
            }
        }
        for x in 0..lq {
            if lay.base_of[x] == usize::MAX {
                push(&mut lay, ConeTag::Base, q, x);
            }
        }
        if let Some(b) = below {
            for y in 0..lb {
                if lay.cone_of[y] == usize::MAX {
                    push(&mut lay, ConeTag::Cone, b, y);
                }
            }
        }
        layouts.push(lay);
    }
    let mut dims = Vec::with_capacity(top_dims);
    for q in 0..top_dims {
        let lay = &layouts[q];
        let basis_len = list(base, q).len() + q.checked_sub(1).map_or(0, |b| list(cone, b).len());
        let boundary = |gen: &ConeGenerator| -> Option<SparseColumn> {
            if q == 0 {
                return Some(SparseColumn::new());
            }
            let prev = &layouts[q - 1];
            let x = g.listed_coordinate(gen.underlying);
            match gen.tag {
                ConeTag::Base => g
                    .boundary(gen.underlying)
                    .map(|b| b.remap_rows(f, |r| Some(prev.base_of[r]))),
                ConeTag::Cone => {
                    let mut col = SparseColumn::unit(prev.base_of[x]);
                    if q >= 2 {
                        let b = g.boundary(gen.underlying)?;
                        let b = b.remap_rows(f, |r| Some(prev.cone_of[r]));
                        col.add_scaled(f.neg(1), &b, f);
                    }
                    Some(col)
                }
            }
        };
        let all: Vec<Option<SparseColumn>> = lay.generators.iter().map(boundary).collect();
        let mut it = all.into_iter();
        let basis: Vec<SparseColumn> = it
            .by_ref()
            .take(basis_len)
            .map(|c| c.expect("basis boundaries are known"))
            .collect();
        dims.push(GradedDimension {
            basis,
            extension: it.collect(),
        });
    }
    (GradedSubgroup::new_unchecked(f, dims), layouts)
}

/// Cone graded subgroup `Ē_q = E_{q-1} ⊕ D_q` for basis subsets `E ⊆ D` given
/// by membership masks, together with the map from its listed coordinates to
/// canonical cone coordinates (see [`mapping_cone`]).
pub fn cone_graded(
    g: &GradedSubgroup,
    d_members: &[Vec<bool>],
    e_members: &[Vec<bool>],
) -> Result<(GradedSubgroup, Vec<Vec<usize>>), ExtendedError> {
    let pick = |m: &[Vec<bool>]| -> Vec<Vec<usize>> {
        m.iter()
            .map(|v| (0..v.len()).filter(|&i| v[i]).collect())
            .collect()
    };
    for (p, e) in e_members.iter().enumerate() {
        let d = d_members.get(p).ok_or(ExtendedError::NotContained { dim: p })?;
        if e.iter().zip(d).any(|(&a, &b)| a && !b) || e.len() != d.len() {
            return Err(ExtendedError::NotContained { dim: p });
        }
    }
    let (cone, layouts) =
        cone_graded_ordered(g, &pick(d_members), &pick(e_members), g.num_dims() + 1);
    cone.validate()?;
    Ok((cone, layouts.into_iter().map(|l| l.canonical).collect()))
}

/// Express a slice in new ambient coordinates; `map[q][listed] = canonical`.
pub fn to_canonical(
    slice: &ChainComplexSlice,
    map: &[Vec<usize>],
    ambient_lens: &[usize],
) -> ChainComplexSlice {
    let f = slice.field();
    let dims = (0..slice.num_dims())
        .map(|q| {
            let d = slice.dimension(q).expect("in range");
            SliceDimension {
                ambient_len: ambient_lens[q],
                generators: d
                    .generators
                    .iter()
                    .map(|g| g.remap_rows(f, |r| Some(map[q][r])))
                    .collect(),
                boundary: d.boundary.clone(),
            }
        })
        .collect();
    ChainComplexSlice::new(f, dims)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtendedInput {
    complex: GradedSubgroup,
    ascending: Vec<Vec<usize>>,
    descending: Vec<Vec<usize>>,
    m_stages: usize,
    n_stages: usize,
}

fn stable_order(hs: &[usize]) -> Vec<usize> {
    let mut order: Vec<usize> = (0..hs.len()).collect();
    order.sort_by_key(|&i| hs[i]);
    order
}

impl ExtendedInput {
    /// `ascending[p][i]` is the `D`-stage at which basis generator `i` of
    /// dimension `p` appears (in `1..=m_stages`); `descending[p][i]` its
    /// `E`-stage (in `1..=n_stages`).
    pub fn new(
        complex: GradedSubgroup,
        ascending: Vec<Vec<usize>>,
        descending: Vec<Vec<usize>>,
        m_stages: usize,
        n_stages: usize,
    ) -> Result<Self, ExtendedError> {
        let x = Self {
            complex,
            ascending,
            descending,
            m_stages,
            n_stages,
        };
        x.validate()?;
        Ok(x)
    }

    fn validate(&self) -> Result<(), ExtendedError> {
        let n = self.complex.num_dims();
        for p in 0..n.max(self.ascending.len()).max(self.descending.len()) {
            let m = self.complex.basis_len(p);
            let a = self.ascending.get(p).map_or(0, Vec::len);
            let d = self.descending.get(p).map_or(0, Vec::len);
            if a != m || d != m {
                return Err(ExtendedError::SpanMismatch { dim: p });
            }
        }
        validate_compatible(&self.ascending_filtration())?;
        validate_compatible(&self.descending_filtration())?;
        Ok(())
    }

    pub fn complex(&self) -> &GradedSubgroup {
        &self.complex
    }

    pub fn field(&self) -> PrimeField {
        self.complex.field()
    }

    pub fn ascending_stages(&self) -> usize {
        self.m_stages
    }

    pub fn descending_stages(&self) -> usize {
        self.n_stages
    }

    pub fn ascending(&self, p: usize) -> &[usize] {
        self.ascending.get(p).map_or(&[], Vec::as_slice)
    }

    pub fn descending(&self, p: usize) -> &[usize] {
        self.descending.get(p).map_or(&[], Vec::as_slice)
    }

    /// Compatible order of the `D` filtration: generator indices by ascending stage.
    pub fn d_order(&self, p: usize) -> Vec<usize> {
        stable_order(self.ascending(p))
    }

    pub fn e_order(&self, p: usize) -> Vec<usize> {
        stable_order(self.descending(p))
    }

    fn filtration(&self, hs: &[Vec<usize>], stages: usize) -> FilteredGradedSubgroup {
        let n = self.complex.num_dims();
        let orders: Vec<Vec<usize>> = (0..n)
            .map(|p| stable_order(hs.get(p).map_or(&[], Vec::as_slice)))
            .collect();
        let heights = (0..n)
            .map(|p| orders[p].iter().map(|&i| hs[p][i]).collect())
            .collect();
        FilteredGradedSubgroup::new_unchecked(self.complex.permute_basis(&orders), heights, stages)
    }

    /// The `D` filtration on its compatible basis.
    pub fn ascending_filtration(&self) -> FilteredGradedSubgroup {
        self.filtration(&self.ascending, self.m_stages)
    }

    pub fn descending_filtration(&self) -> FilteredGradedSubgroup {
        self.filtration(&self.descending, self.n_stages)
    }
}

/// The extended filtration over cone dimensions `0..=p_max + 1`, with
/// `M + N` stages, and the cone generator behind each basis position.
#[derive(Clone, Debug)]
pub struct ExtendedFiltration {
    pub filtration: FilteredGradedSubgroup,
    /// `generators[q][i]` for basis position `i` of cone dimension `q`.
    pub generators: Vec<Vec<ConeGenerator>>,
    /// Size of the `(0, d)` block in each cone dimension.
    pub base_len: Vec<usize>,
}

pub fn build_extended_filtration(x: &ExtendedInput, p_max: usize) -> ExtendedFiltration {
    let g = x.complex();
    let top = p_max + 2;
    let base: Vec<Vec<usize>> = (0..top).map(|p| x.d_order(p)).collect();
    let cone: Vec<Vec<usize>> = (0..top).map(|p| x.e_order(p)).collect();
    let (complex, layouts) = cone_graded_ordered(g, &base, &cone, top);
    let m = x.ascending_stages();
    let mut heights = Vec::with_capacity(top);
    let mut generators = Vec::with_capacity(top);
    let mut base_len = Vec::with_capacity(top);
    for (q, lay) in layouts.iter().enumerate() {
        let basis = complex.basis_len(q);
        let gens: Vec<ConeGenerator> = lay.generators[..basis].to_vec();
        heights.push(
            gens.iter()
                .map(|cg| {
                    let (p, i) = (cg.underlying.dim, cg.underlying.index);
                    match cg.tag {
                        ConeTag::Base => x.ascending(p)[i],
                        ConeTag::Cone => m + x.descending(p)[i],
                    }
                })
                .collect(),
        );
        base_len.push(base[q].len());
        generators.push(gens);
    }
    let stages = m + x.descending_stages();
    ExtendedFiltration {
        filtration: FilteredGradedSubgroup::new_unchecked(complex, heights, stages),
        generators,
        base_len,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IntervalKind {
    Ordinary,
    Relative,
    Extended,
}

impl IntervalKind {
    pub fn label(self) -> &'static str {
        match self {
            IntervalKind::Ordinary => "ord",
            IntervalKind::Relative => "rel",
            IntervalKind::Extended => "ext",
        }
    }
}

/// Ordinary: ascending stages `[birth, death)`. Relative: descending stages
/// `[birth, death)`. Extended: born at ascending stage `birth`, first absent
/// at descending stage `death`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExtendedInterval {
    pub dim: usize,
    pub kind: IntervalKind,
    pub birth: usize,
    pub death: usize,
}

impl ExtendedInterval {
    /// Half-open span `[start, end)` on the stage axis `1..=M+N` of the
    /// extended filtration.
    pub fn stage_span(&self, m_stages: usize) -> (usize, usize) {
        match self.kind {
            IntervalKind::Ordinary => (self.birth, self.death),
            IntervalKind::Relative => (m_stages + self.birth, m_stages + self.death),
            IntervalKind::Extended => (self.birth, m_stages + self.death),
        }
    }

    pub fn covers(&self, m_stages: usize, u: usize, v: usize) -> bool {
        let (s, e) = self.stage_span(m_stages);
        s <= u && e > v
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ExtendedBarcode {
    pub intervals: Vec<ExtendedInterval>,
}

impl ExtendedBarcode {
    pub fn count_covering(&self, p: usize, m_stages: usize, u: usize, v: usize) -> usize {
        self.intervals
            .iter()
            .filter(|iv| iv.dim == p && iv.covers(m_stages, u, v))
            .count()
    }

    /// Ordinary intervals plus `[birth, ∞)` for each extended interval.
    pub fn ascending_part(&self) -> Vec<Interval> {
        let mut out: Vec<Interval> = self
            .intervals
            .iter()
            .filter_map(|iv| match iv.kind {
                IntervalKind::Ordinary => Some(Interval {
                    dim: iv.dim,
                    birth: iv.birth,
                    death: Some(iv.death),
                }),
                IntervalKind::Extended => Some(Interval {
                    dim: iv.dim,
                    birth: iv.birth,
                    death: None,
                }),
                IntervalKind::Relative => None,
            })
            .collect();
        out.sort();
        out
    }
}

/// How an extended pair `((0, d), (e, 0))` is read.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum ExtendedReading {
    /// Birth at the ascending stage of `d`, death at the descending stage of `e`.
    #[default]
    BaseRow,
    /// Birth at the ascending stage of `e`, death at the descending stage of `d`.
    Swapped,
}

pub fn extended_barcode(
    x: &ExtendedInput,
    p_max: usize,
    reading: ExtendedReading,
    clearing: bool,
) -> Result<ExtendedBarcode, ExtendedError> {
    let ext = build_extended_filtration(x, p_max);
    let fl = &ext.filtration;
    let mats = build_matrices(fl, p_max);
    let pairings = compute_pairings(&mats, x.field(), clearing);
    let asc = |id: GeneratorId| x.ascending(id.dim)[id.index];
    let desc = |id: GeneratorId| x.descending(id.dim)[id.index];
    let mut intervals = Vec::new();
    for pr in &pairings {
        let q = pr.dim;
        if let Some(&i) = pr.unpaired_cycles.first() {
            return Err(ExtendedError::InfiniteInterval {
                dim: q,
                stage: fl.height(q, i),
            });
        }
        for &(i, j) in &pr.pairs {
            let row = ext.generators[q][i];
            let col = ext.generators[q + 1][j];
            let (kind, birth, death) = match (row.tag, col.tag) {
                (ConeTag::Base, ConeTag::Base) => {
                    (IntervalKind::Ordinary, asc(row.underlying), asc(col.underlying))
                }
                (ConeTag::Cone, ConeTag::Cone) => {
                    (IntervalKind::Relative, desc(row.underlying), desc(col.underlying))
                }
                (ConeTag::Base, ConeTag::Cone) => match reading {
                    ExtendedReading::BaseRow => {
                        (IntervalKind::Extended, asc(row.underlying), desc(col.underlying))
                    }
                    ExtendedReading::Swapped => {
                        (IntervalKind::Extended, asc(col.underlying), desc(row.underlying))
                    }
                },
                // A base column has no boundary in the cone block.
                (ConeTag::Cone, ConeTag::Base) => continue,
            };
            if kind == IntervalKind::Extended || birth < death {
                intervals.push(ExtendedInterval {
                    dim: q,
                    kind,
                    birth,
                    death,
                });
            }
        }
    }
    intervals.sort();
    Ok(ExtendedBarcode { intervals })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graded::{homology_dims, relative_homology_dims, sup_complex, sup_complex_masked};

    fn edge_complex(f: PrimeField) -> GradedSubgroup {
        GradedSubgroup::new(
            f,
            vec![
                GradedDimension {
                    basis: vec![SparseColumn::new(); 2],
                    extension: vec![],
                },
                GradedDimension {
                    basis: vec![SparseColumn::from_entries([(0, -1), (1, 1)], f)],
                    extension: vec![],
                },
            ],
        )
        .unwrap()
    }

    #[test]
    fn cone_of_zero_and_of_identity() {
        let f = PrimeField::new(3).unwrap();
        let g = edge_complex(f);
        let big = sup_complex(&g).unwrap();
        let zero = sup_complex_masked(&g, &[vec![false; 2], vec![false]]).unwrap();
        let c0 = mapping_cone(&zero, &big).unwrap();
        assert_eq!(homology_dims(&c0, 2).unwrap(), vec![1, 0, 0]);
        let c1 = mapping_cone(&big, &big).unwrap();
        assert_eq!(homology_dims(&c1, 2).unwrap(), vec![0, 0, 0]);
        let v = sup_complex_masked(&g, &[vec![false, true], vec![false]]).unwrap();
        let cv = mapping_cone(&v, &big).unwrap();
        assert_eq!(
            homology_dims(&cv, 1).unwrap(),
            relative_homology_dims(&big, &v, 1).unwrap()
        );
    }

    /// u at 1, v at 2 ascending; descending stages reversed.
    fn edge_input(f: PrimeField) -> ExtendedInput {
        ExtendedInput::new(
            edge_complex(f),
            vec![vec![1, 2], vec![2]],
            vec![vec![2, 1], vec![2]],
            2,
            2,
        )
        .unwrap()
    }

    #[test]
    fn edge_extended_barcode() {
        let f = PrimeField::new(3).unwrap();
        let x = edge_input(f);
        let ext = build_extended_filtration(&x, 0);
        assert_eq!(ext.filtration.stages(), 4);
        assert_eq!(ext.base_len, vec![2, 1]);
        validate_compatible(&ext.filtration).unwrap();
        let bc = extended_barcode(&x, 0, ExtendedReading::BaseRow, true).unwrap();
        assert_eq!(
            bc.intervals,
            vec![ExtendedInterval {
                dim: 0,
                kind: IntervalKind::Extended,
                birth: 1,
                death: 1
            }]
        );
    }

    #[test]
    fn span_mismatch_names_dimension() {
        let f = PrimeField::F2;
        let err = ExtendedInput::new(edge_complex(f), vec![vec![1, 1], vec![1]], vec![vec![1, 1]], 1, 1)
            .unwrap_err();
        assert_eq!(err, ExtendedError::SpanMismatch { dim: 1 });
    }

    #[test]
    fn empty_input_gives_empty_barcode() {
        let x = ExtendedInput::new(GradedSubgroup::empty(PrimeField::F2), vec![], vec![], 1, 1).unwrap();
        let bc = extended_barcode(&x, 2, ExtendedReading::BaseRow, true).unwrap();
        assert!(bc.intervals.is_empty());
    }

    #[test]
    fn cone_graded_commutes_with_sup_on_edge() {
        let f = PrimeField::new(5).unwrap();
        let g = edge_complex(f);
        let d = vec![vec![true, true], vec![true]];
        let e = vec![vec![false, true], vec![false]];
        let (cone, canon) = cone_graded(&g, &d, &e).unwrap();
        let lhs = sup_complex(&cone).unwrap();
        let rhs = mapping_cone(
            &sup_complex_masked(&g, &e).unwrap(),
            &sup_complex_masked(&g, &d).unwrap(),
        )
        .unwrap();
        let lens: Vec<usize> = (0..lhs.num_dims())
            .map(|q| g.listed_len(q) + q.checked_sub(1).map_or(0, |b| g.listed_len(b)))
            .collect();
        let lhs = to_canonical(&lhs, &canon, &lens);
        for q in 0..2 {
            let a = lhs.generator_matrix(q);
            let b = rhs.generator_matrix(q);
            let sa = SpanSolver::new(&a, f);
            let sb = SpanSolver::new(&b, f);
            assert_eq!(sa.rank(), sb.rank());
            assert!(b.columns().iter().all(|c| sa.contains(c)));
        }
    }
}
