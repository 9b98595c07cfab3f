//! Rank oracles computed by dense elimination, without boundary-matrix
//! reduction or mapping cones.

use crate::extended::ExtendedInput;
use crate::graded::{FilteredGradedSubgroup, GradedSubgroup};
use crate::linalg::dense::{nullspace, rank_of_columns};
use crate::linalg::PrimeField;

/// `table[p][i-1][j-1]` for `1 <= i <= j <= stages`; zero below the diagonal.
pub type RankTable = Vec<Vec<Vec<usize>>>;

/// Vectors in listed coordinates of dimension `p`.
type Vectors = Vec<Vec<u32>>;

fn unit(len: usize, i: usize) -> Vec<u32> {
    let mut v = vec![0; len];
    v[i] = 1;
    v
}

/// Dense boundary of the listed chain `coeffs` of dimension `p` (all listed
/// generators involved must have known boundaries).
fn boundary_of(g: &GradedSubgroup, p: usize, coeffs: &[u32]) -> Vec<u32> {
    let f = g.field();
    let len = if p == 0 { 0 } else { g.listed_len(p - 1) };
    let mut out = vec![0; len];
    if p == 0 {
        return out;
    }
    for (x, &c) in coeffs.iter().enumerate() {
        if c == 0 {
            continue;
        }
        let b = g
            .boundary_at(p, x)
            .expect("oracle chains only involve generators with known boundaries");
        for &(r, v) in b.entries() {
            out[r] = f.add(out[r], f.mul(c, v));
        }
    }
    out
}

/// Subspace spanned by the basis generators `members` of dimension `p`,
/// together with its cycles `K` and the boundaries of the next dimension `B`.
struct StageSpaces {
    gens: Vectors,
    cycles: Vectors,
}

fn stage_spaces(g: &GradedSubgroup, p: usize, members: &[usize]) -> StageSpaces {
    let f = g.field();
    let len = g.listed_len(p);
    let gens: Vectors = members.iter().map(|&i| unit(len, i)).collect();
    let cycles = if p == 0 {
        gens.clone()
    } else {
        let images: Vectors = gens.iter().map(|v| boundary_of(g, p, v)).collect();
        nullspace(&images, g.listed_len(p - 1), f)
            .into_iter()
            .map(|c| combine(&gens, &c, len, f))
            .collect()
    };
    StageSpaces { gens, cycles }
}

fn combine(vectors: &[Vec<u32>], coeffs: &[u32], len: usize, f: PrimeField) -> Vec<u32> {
    let mut out = vec![0; len];
    for (v, &c) in vectors.iter().zip(coeffs) {
        if c == 0 {
            continue;
        }
        for (o, &x) in out.iter_mut().zip(v) {
            *o = f.add(*o, f.mul(c, x));
        }
    }
    out
}

fn members_at(hs: &[usize], stage: usize) -> Vec<usize> {
    (0..hs.len()).filter(|&i| hs[i] <= stage).collect()
}

fn boundaries_of(g: &GradedSubgroup, p: usize, members: &[usize]) -> Vectors {
    let len = g.listed_len(p + 1);
    members
        .iter()
        .map(|&i| boundary_of(g, p + 1, &unit(len, i)))
        .collect()
}

fn rank_of(parts: &[&Vectors], len: usize, f: PrimeField) -> usize {
    let all: Vectors = parts.iter().flat_map(|v| v.iter().cloned()).collect();
    rank_of_columns(&all, len, f)
}

/// `β_p^{i,j}`: rank of `H_p(S^i) → H_p(S^j)` for the supremum complexes of
/// the stages, `0 <= p <= p_max`.
pub fn persistent_betti_oracle(f: &FilteredGradedSubgroup, p_max: usize) -> RankTable {
    let g = f.complex();
    let field = g.field();
    let n = f.stages();
    (0..=p_max)
        .map(|p| {
            let len = g.listed_len(p);
            let cycles: Vec<Vectors> = (1..=n)
                .map(|i| stage_spaces(g, p, &members_at(f.heights(p), i)).cycles)
                .collect();
            let bounds: Vec<Vectors> = (1..=n)
                .map(|i| boundaries_of(g, p, &members_at(f.heights(p + 1), i)))
                .collect();
            let mut table = vec![vec![0; n]; n];
            for i in 0..n {
                for j in i..n {
                    table[i][j] = rank_of(&[&cycles[i], &bounds[i], &bounds[j]], len, field)
                        - rank_of(&[&bounds[j]], len, field);
                }
            }
            table
        })
        .collect()
}

/// Composite ranks of
/// `H_p(S^1) → … → H_p(S^M) → H_p(S^M, T^1) → … → H_p(S^M, T^N)`
/// with `S` the supremum complexes of the ascending stages and `T` those of
/// the descending stages. `table[p][u-1][v-1]` for `1 <= u <= v <= M + N`.
pub fn extended_module_oracle(x: &ExtendedInput, p_max: usize) -> RankTable {
    let g = x.complex();
    let field = g.field();
    let (m, n) = (x.ascending_stages(), x.descending_stages());
    (0..=p_max)
        .map(|p| {
            let len = g.listed_len(p);
            let all_p: Vec<usize> = (0..g.basis_len(p)).collect();
            let all_up: Vec<usize> = (0..g.basis_len(p + 1)).collect();
            let top_bounds = boundaries_of(g, p, &all_up);
            // Cycle and boundary spaces per stage of the whole sequence.
            let mut cycles: Vec<Vectors> = Vec::with_capacity(m + n);
            let mut bounds: Vec<Vectors> = Vec::with_capacity(m + n);
            for i in 1..=m {
                cycles.push(stage_spaces(g, p, &members_at(x.ascending(p), i)).cycles);
                let mut b = boundaries_of(g, p, &members_at(x.ascending(p + 1), i));
                if i == m {
                    b = top_bounds.clone();
                }
                bounds.push(b);
            }
            let top = stage_spaces(g, p, &all_p);
            for j in 1..=n {
                // T^j_p and T^j_{p-1}.
                let e_p = members_at(x.descending(p), j);
                let mut t_p: Vectors = e_p.iter().map(|&i| unit(len, i)).collect();
                t_p.extend(boundaries_of(g, p, &members_at(x.descending(p + 1), j)));
                let rel_cycles = if p == 0 {
                    top.gens.clone()
                } else {
                    let below = g.listed_len(p - 1);
                    let mut t_below: Vectors = members_at(x.descending(p - 1), j)
                        .iter()
                        .map(|&i| unit(below, i))
                        .collect();
                    t_below.extend(boundaries_of(g, p - 1, &e_p));
                    // d in D_p with ∂d in T_{p-1}: kernel of [∂D_p | T_{p-1}].
                    let images: Vectors = top.gens.iter().map(|v| boundary_of(g, p, v)).collect();
                    let k = top.gens.len();
                    let mut cols = images;
                    cols.extend(t_below);
                    nullspace(&cols, below, field)
                        .into_iter()
                        .map(|c| combine(&top.gens, &c[..k], len, field))
                        .collect()
                };
                cycles.push(rel_cycles);
                let mut b = top_bounds.clone();
                b.extend(t_p);
                bounds.push(b);
            }
            let total = m + n;
            let mut table = vec![vec![0; total]; total];
            for u in 0..total {
                for v in u..total {
                    table[u][v] = rank_of(&[&cycles[u], &bounds[u], &bounds[v]], len, field)
                        - rank_of(&[&bounds[v]], len, field);
                }
            }
            table
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graded::GradedDimension;
    use crate::linalg::SparseColumn;

    #[test]
    fn filtered_triangle_betti() {
        let f = PrimeField::F2;
        let col = |e: &[(usize, i64)]| SparseColumn::from_entries(e.iter().copied(), f);
        let g = GradedSubgroup::new(
            f,
            vec![
                GradedDimension {
                    basis: vec![SparseColumn::new(); 3],
                    extension: vec![],
                },
                GradedDimension {
                    basis: vec![col(&[(0, 1), (1, 1)]), col(&[(1, 1), (2, 1)]), col(&[(0, 1), (2, 1)])],
                    extension: vec![],
                },
            ],
        )
        .unwrap();
        let fg = FilteredGradedSubgroup::new(g, vec![vec![1, 1, 1], vec![2, 2, 3]], 3).unwrap();
        let t = persistent_betti_oracle(&fg, 1);
        assert_eq!(t[0][0][0], 3);
        assert_eq!(t[0][0][1], 1);
        assert_eq!(t[0][1][1], 1);
        assert_eq!(t[1][2][2], 1);
        assert_eq!(t[1][1][1], 0);
    }

    #[test]
    fn extended_sequence_ends_at_zero() {
        let f = PrimeField::new(3).unwrap();
        let g = GradedSubgroup::new(
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
        .unwrap();
        let x = ExtendedInput::new(g, vec![vec![1, 2], vec![2]], vec![vec![2, 1], vec![2]], 2, 2)
            .unwrap();
        let t = extended_module_oracle(&x, 1);
        assert_eq!(t[0][0][0], 1);
        assert_eq!(t[0][1][1], 1);
        assert_eq!(t[0][2][2], 0);
        assert_eq!(t[0][3][3], 0);
        assert_eq!(t[1][3][3], 0);
    }
}
