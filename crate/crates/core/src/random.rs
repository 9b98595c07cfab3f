//! Seeded random instances for property tests and the stability harness.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::extended::ExtendedInput;
use crate::graded::{FilteredGradedSubgroup, GradedDimension, GradedSubgroup};
use crate::linalg::dense::rank_of_columns;
use crate::linalg::{PrimeField, SpanSolver, SparseColumn, SparseMatrix};

/// Derive the seed of trial `index` from a base seed (splitmix64 step).
pub fn trial_seed(base: u64, index: u64) -> u64 {
    let mut z = base.wrapping_add(index.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Sorted vertex sets of a random simplicial complex on `vertices` vertices,
/// grouped by dimension `0..=top`.
pub fn random_simplicial_complex<R: Rng>(
    rng: &mut R,
    vertices: usize,
    top: usize,
    density: f64,
) -> Vec<Vec<Vec<usize>>> {
    let mut chosen: Vec<Vec<usize>> = Vec::new();
    for mask in 1u32..(1 << vertices) {
        let s: Vec<usize> = (0..vertices).filter(|&v| mask & (1 << v) != 0).collect();
        if s.len() >= 2 && s.len() <= top + 1 && rng.gen_bool(density) {
            chosen.push(s);
        }
    }
    let mut by_dim: Vec<Vec<Vec<usize>>> = vec![Vec::new(); top + 1];
    by_dim[0] = (0..vertices).map(|v| vec![v]).collect();
    for s in chosen {
        for mask in 1u32..(1 << s.len()) {
            let face: Vec<usize> = (0..s.len()).filter(|&i| mask & (1 << i) != 0).map(|i| s[i]).collect();
            let d = face.len() - 1;
            if !by_dim[d].contains(&face) {
                by_dim[d].push(face);
            }
        }
    }
    for d in &mut by_dim {
        d.sort();
    }
    by_dim
}

/// Simplicial boundary of `simplex` over the listed simplices `faces`.
pub fn simplex_boundary(simplex: &[usize], faces: &[Vec<usize>], field: PrimeField) -> SparseColumn {
    if simplex.len() <= 1 {
        return SparseColumn::new();
    }
    SparseColumn::from_entries(
        (0..simplex.len()).map(|k| {
            let mut face = simplex.to_vec();
            face.remove(k);
            let row = faces.binary_search(&face).expect("closed under faces");
            (row, if k % 2 == 0 { 1 } else { -1 })
        }),
        field,
    )
}

fn random_invertible<R: Rng>(rng: &mut R, n: usize, field: PrimeField) -> Vec<Vec<u32>> {
    let q = field.modulus();
    loop {
        let cols: Vec<Vec<u32>> = (0..n)
            .map(|_| {
                (0..n)
                    .map(|_| if rng.gen_bool(0.35) { rng.gen_range(1..q) } else { 0 })
                    .collect()
            })
            .collect();
        if rank_of_columns(&cols, n, field) == n {
            return cols;
        }
    }
}

/// Options for [`random_graded_subgroup`].
#[derive(Clone, Copy, Debug)]
pub struct GradedOptions {
    pub max_vertices: usize,
    /// Highest stored dimension.
    pub top: usize,
    pub field: PrimeField,
    pub density: f64,
    /// Probability that a simplex joins the basis of `D`.
    pub keep: f64,
    /// Replace the simplex basis by a random one in each dimension.
    pub change_basis: bool,
}

/// A random graded subgroup of a random simplicial complex. Every chain group
/// gets an (optionally random) basis; a random prefix-sized subset of it spans
/// `D_p`, the rest is listed as extension generators with known boundaries.
pub fn random_graded_subgroup<R: Rng>(rng: &mut R, opts: GradedOptions) -> GradedSubgroup {
    let f = opts.field;
    let vertices = rng.gen_range(1..=opts.max_vertices);
    let simplices = random_simplicial_complex(rng, vertices, opts.top, opts.density);
    // Columns of P_p: the listed generators in simplex coordinates.
    let mut change: Vec<Vec<Vec<u32>>> = Vec::with_capacity(simplices.len());
    let mut basis_len = Vec::with_capacity(simplices.len());
    for s in &simplices {
        let n = s.len();
        let mut p = if opts.change_basis {
            random_invertible(rng, n, f)
        } else {
            (0..n)
                .map(|k| {
                    let mut v = vec![0; n];
                    v[k] = 1;
                    v
                })
                .collect()
        };
        p.shuffle(rng);
        let m = (0..n).filter(|_| rng.gen_bool(opts.keep)).count();
        change.push(p);
        basis_len.push(m);
    }
    let mut dims = Vec::with_capacity(simplices.len());
    for p in 0..simplices.len() {
        let listed: Vec<SparseColumn> = if p == 0 {
            vec![SparseColumn::new(); simplices[0].len()]
        } else {
            let below = SparseMatrix::new(
                simplices[p - 1].len(),
                change[p - 1].iter().map(|c| SparseColumn::from_dense(c)).collect(),
            );
            let solver = SpanSolver::new(&below, f);
            let raw: Vec<SparseColumn> = simplices[p]
                .iter()
                .map(|s| simplex_boundary(s, &simplices[p - 1], f))
                .collect();
            let raw = SparseMatrix::new(simplices[p - 1].len(), raw);
            change[p]
                .iter()
                .map(|c| {
                    let image = raw.apply(c, f);
                    SparseColumn::from_dense(&solver.solve(&image).expect("invertible"))
                })
                .collect()
        };
        let m = basis_len[p];
        let mut it = listed.into_iter();
        dims.push(GradedDimension {
            basis: it.by_ref().take(m).collect(),
            extension: it.map(Some).collect(),
        });
    }
    GradedSubgroup::new(f, dims).expect("random graded subgroup is valid")
}

fn random_heights<R: Rng>(rng: &mut R, n: usize, stages: usize) -> Vec<usize> {
    (0..n).map(|_| rng.gen_range(1..=stages)).collect()
}

/// Random filtration of a random graded subgroup with `stages` stages.
pub fn random_filtration<R: Rng>(
    rng: &mut R,
    opts: GradedOptions,
    stages: usize,
) -> FilteredGradedSubgroup {
    let g = random_graded_subgroup(rng, opts);
    let heights = (0..g.num_dims())
        .map(|p| {
            let mut h = random_heights(rng, g.basis_len(p), stages);
            h.sort_unstable();
            h
        })
        .collect();
    FilteredGradedSubgroup::new(g, heights, stages).expect("sorted heights are compatible")
}

/// Random filtered simplicial complex: every stage is a subcomplex.
pub fn random_simplicial_filtration<R: Rng>(
    rng: &mut R,
    max_vertices: usize,
    top: usize,
    field: PrimeField,
    stages: usize,
) -> (Vec<Vec<Vec<usize>>>, FilteredGradedSubgroup) {
    let vertices = rng.gen_range(1..=max_vertices);
    let simplices = random_simplicial_complex(rng, vertices, top, 0.5);
    // Heights: a face never enters after its cofaces.
    let mut value: Vec<Vec<usize>> = Vec::with_capacity(simplices.len());
    for (p, level) in simplices.iter().enumerate() {
        let hs = level
            .iter()
            .map(|s| {
                let floor = if p == 0 {
                    1
                } else {
                    (0..s.len())
                        .map(|k| {
                            let mut face = s.clone();
                            face.remove(k);
                            let i = simplices[p - 1].binary_search(&face).expect("closed");
                            value[p - 1][i]
                        })
                        .max()
                        .unwrap_or(1)
                };
                rng.gen_range(floor..=stages)
            })
            .collect();
        value.push(hs);
    }
    // Compatible order: stable sort by height within each dimension.
    let orders: Vec<Vec<usize>> = value
        .iter()
        .map(|hs| {
            let mut o: Vec<usize> = (0..hs.len()).collect();
            o.sort_by_key(|&i| hs[i]);
            o
        })
        .collect();
    let sorted: Vec<Vec<Vec<usize>>> = simplices
        .iter()
        .zip(&orders)
        .map(|(level, o)| o.iter().map(|&i| level[i].clone()).collect())
        .collect();
    let mut dims = Vec::with_capacity(sorted.len());
    for p in 0..sorted.len() {
        let basis = sorted[p]
            .iter()
            .map(|s| {
                if p == 0 {
                    return SparseColumn::new();
                }
                let mut faces = sorted[p - 1].clone();
                let idx: Vec<usize> = (0..faces.len()).collect();
                let mut pairs: Vec<(Vec<usize>, usize)> = faces.drain(..).zip(idx).collect();
                pairs.sort();
                let keys: Vec<Vec<usize>> = pairs.iter().map(|(k, _)| k.clone()).collect();
                simplex_boundary(s, &keys, field).remap_rows(field, |r| Some(pairs[r].1))
            })
            .collect();
        dims.push(GradedDimension {
            basis,
            extension: vec![],
        });
    }
    let heights = orders
        .iter()
        .zip(&value)
        .map(|(o, hs)| o.iter().map(|&i| hs[i]).collect())
        .collect();
    let g = GradedSubgroup::new(field, dims).expect("simplicial complex is valid");
    (
        sorted,
        FilteredGradedSubgroup::new(g, heights, stages).expect("compatible"),
    )
}

/// Random ascending/descending pair of filtrations of a random graded subgroup.
pub fn random_extended_input<R: Rng>(
    rng: &mut R,
    opts: GradedOptions,
    m_stages: usize,
    n_stages: usize,
) -> ExtendedInput {
    let g = random_graded_subgroup(rng, opts);
    let asc = (0..g.num_dims())
        .map(|p| random_heights(rng, g.basis_len(p), m_stages))
        .collect();
    let desc = (0..g.num_dims())
        .map(|p| random_heights(rng, g.basis_len(p), n_stages))
        .collect();
    ExtendedInput::new(g, asc, desc, m_stages, n_stages).expect("valid random input")
}
