//! Real-valued extended persistence diagrams and the bottleneck distance.

use std::cmp::Ordering;

use thiserror::Error;

use crate::extended::{extended_barcode, ExtendedBarcode, ExtendedError, ExtendedReading, IntervalKind};
use crate::frontend::ValuedInput;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiagramError {
    #[error("{kind} interval in dimension {dim} uses stage {stage}, outside 1..={stages}")]
    StageOutOfRange {
        dim: usize,
        kind: &'static str,
        stage: usize,
        stages: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DiagramPoint {
    pub dim: usize,
    pub kind: IntervalKind,
    pub birth: f64,
    pub death: f64,
}

impl DiagramPoint {
    /// `l∞` distance to the diagonal.
    pub fn diagonal_charge(&self) -> f64 {
        (self.death - self.birth).abs() / 2.0
    }

    pub fn linf(&self, other: &DiagramPoint) -> f64 {
        (self.birth - other.birth)
            .abs()
            .max((self.death - other.death).abs())
    }

    fn sort_key_cmp(&self, other: &DiagramPoint) -> Ordering {
        self.dim
            .cmp(&other.dim)
            .then(self.kind.cmp(&other.kind))
            .then(self.birth.total_cmp(&other.birth))
            .then(self.death.total_cmp(&other.death))
    }
}

/// Ord, Rel and Ext points of every dimension, kept in canonical order.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct ExtendedDiagram {
    points: Vec<DiagramPoint>,
}

impl ExtendedDiagram {
    pub fn new(mut points: Vec<DiagramPoint>) -> Self {
        points.sort_by(DiagramPoint::sort_key_cmp);
        Self { points }
    }

    pub fn points(&self) -> &[DiagramPoint] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn max_dim(&self) -> Option<usize> {
        self.points.iter().map(|p| p.dim).max()
    }

    pub fn select(&self, dim: usize, kind: IntervalKind) -> Vec<DiagramPoint> {
        self.points
            .iter()
            .filter(|p| p.dim == dim && p.kind == kind)
            .copied()
            .collect()
    }
}

/// Ordinary `[i, j)` ↦ `(a_i, a_j)`, relative `[i, j)` ↦ `(b_i, b_j)`,
/// extended (born `i`, first absent at descending stage `j`) ↦ `(a_i, b_j)`.
pub fn diagrams(
    barcode: &ExtendedBarcode,
    ascending: &[f64],
    descending: &[f64],
) -> Result<ExtendedDiagram, DiagramError> {
    let at = |values: &[f64], dim: usize, kind: IntervalKind, stage: usize| {
        if stage == 0 || stage > values.len() {
            Err(DiagramError::StageOutOfRange {
                dim,
                kind: kind.label(),
                stage,
                stages: values.len(),
            })
        } else {
            Ok(values[stage - 1])
        }
    };
    let mut points = Vec::with_capacity(barcode.intervals.len());
    for iv in &barcode.intervals {
        let (birth_axis, death_axis) = match iv.kind {
            IntervalKind::Ordinary => (ascending, ascending),
            IntervalKind::Relative => (descending, descending),
            IntervalKind::Extended => (ascending, descending),
        };
        points.push(DiagramPoint {
            dim: iv.dim,
            kind: iv.kind,
            birth: at(birth_axis, iv.dim, iv.kind, iv.birth)?,
            death: at(death_axis, iv.dim, iv.kind, iv.death)?,
        });
    }
    Ok(ExtendedDiagram::new(points))
}

/// Extended diagram of a front-end input.
pub fn diagram_of(
    x: &ValuedInput,
    p_max: usize,
    clearing: bool,
) -> Result<ExtendedDiagram, ExtendedError> {
    let bc = extended_barcode(&x.input, p_max, ExtendedReading::BaseRow, clearing)?;
    Ok(diagrams(&bc, x.ascending_values(), &x.descending_values())
        .expect("front-end stages lie on the value grid"))
}

/// Which side of a partial matching a point ends up on.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct KindMatching {
    /// `(left index, right index)` into the per-kind point lists.
    pub pairs: Vec<(usize, usize)>,
    pub left_diagonal: Vec<usize>,
    pub right_diagonal: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct MatchingCertificate {
    pub dim: usize,
    pub delta: f64,
    /// Indexed by kind: ordinary, relative, extended.
    pub matchings: [KindMatching; 3],
}

const KINDS: [IntervalKind; 3] = [IntervalKind::Ordinary, IntervalKind::Relative, IntervalKind::Extended];

impl MatchingCertificate {
    /// Re-check every constraint against the diagrams.
    pub fn verify(&self, left: &ExtendedDiagram, right: &ExtendedDiagram, tolerance: f64) -> bool {
        KINDS.iter().zip(&self.matchings).all(|(&kind, m)| {
            let a = left.select(self.dim, kind);
            let b = right.select(self.dim, kind);
            let mut seen_a = vec![false; a.len()];
            let mut seen_b = vec![false; b.len()];
            let mark = |seen: &mut Vec<bool>, i: usize| i < seen.len() && !std::mem::replace(&mut seen[i], true);
            let pairs_ok = m.pairs.iter().all(|&(i, j)| {
                mark(&mut seen_a, i) && mark(&mut seen_b, j) && a[i].linf(&b[j]) <= self.delta + tolerance
            });
            let diag_ok = kind != IntervalKind::Extended || (m.left_diagonal.is_empty() && m.right_diagonal.is_empty());
            let left_ok = m
                .left_diagonal
                .iter()
                .all(|&i| mark(&mut seen_a, i) && a[i].diagonal_charge() <= self.delta + tolerance);
            let right_ok = m
                .right_diagonal
                .iter()
                .all(|&j| mark(&mut seen_b, j) && b[j].diagonal_charge() <= self.delta + tolerance);
            pairs_ok
                && diag_ok
                && left_ok
                && right_ok
                && seen_a.iter().all(|&s| s)
                && seen_b.iter().all(|&s| s)
        })
    }
}

/// Maximum bipartite matching by augmenting paths; `adj[u]` lists the right
/// vertices joined to left vertex `u`. Returns the size and the owner of each
/// right vertex.
fn max_matching(adj: &[Vec<usize>], right: usize) -> (usize, Vec<Option<usize>>) {
    fn augment(
        u: usize,
        adj: &[Vec<usize>],
        visited: &mut [bool],
        owner: &mut [Option<usize>],
    ) -> bool {
        for &v in &adj[u] {
            if visited[v] {
                continue;
            }
            visited[v] = true;
            if owner[v].is_none_or(|w| augment(w, adj, visited, owner)) {
                owner[v] = Some(u);
                return true;
            }
        }
        false
    }
    let mut owner = vec![None; right];
    let mut size = 0;
    for u in 0..adj.len() {
        let mut visited = vec![false; right];
        if augment(u, adj, &mut visited, &mut owner) {
            size += 1;
        }
    }
    (size, owner)
}

/// A perfect δ-matching of `a` and `b`, if any. With `partial`, points may be
/// sent to the diagonal at their diagonal charge.
fn try_match(a: &[DiagramPoint], b: &[DiagramPoint], delta: f64, partial: bool) -> Option<KindMatching> {
    let (n, m) = (a.len(), b.len());
    if !partial && n != m {
        return None;
    }
    // Left: a, then diagonal copies of b. Right: b, then diagonal copies of a.
    let (left, right) = if partial { (n + m, m + n) } else { (n, m) };
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); left];
    for i in 0..n {
        for (j, q) in b.iter().enumerate() {
            if a[i].linf(q) <= delta {
                adj[i].push(j);
            }
        }
        if partial && a[i].diagonal_charge() <= delta {
            adj[i].push(m + i);
        }
    }
    if partial {
        for j in 0..m {
            if b[j].diagonal_charge() <= delta {
                adj[n + j].push(j);
            }
            adj[n + j].extend(m..m + n);
        }
    }
    let (size, owner) = max_matching(&adj, right);
    if size < left {
        return None;
    }
    let mut out = KindMatching::default();
    for (v, u) in owner.iter().enumerate() {
        let u = u.expect("perfect matching");
        match (u < n, v < m) {
            (true, true) => out.pairs.push((u, v)),
            (true, false) => out.left_diagonal.push(u),
            (false, true) => out.right_diagonal.push(v),
            (false, false) => {}
        }
    }
    out.pairs.sort_unstable();
    out.left_diagonal.sort_unstable();
    out.right_diagonal.sort_unstable();
    Some(out)
}

fn candidates(a: &[DiagramPoint], b: &[DiagramPoint], partial: bool) -> Vec<f64> {
    let mut c = vec![0.0];
    for x in a {
        for y in b {
            c.push(x.linf(y));
        }
    }
    if partial {
        c.extend(a.iter().chain(b).map(DiagramPoint::diagonal_charge));
    }
    c.sort_by(f64::total_cmp);
    c.dedup();
    c
}

/// Smallest candidate admitting a matching, with the matching; `None` if no
/// matching exists at any distance.
fn kind_bottleneck(a: &[DiagramPoint], b: &[DiagramPoint], partial: bool) -> Option<(f64, KindMatching)> {
    if !partial && a.len() != b.len() {
        return None;
    }
    let c = candidates(a, b, partial);
    let (mut lo, mut hi) = (0, c.len() - 1);
    let mut best = try_match(a, b, c[hi], partial)?;
    while lo < hi {
        let mid = (lo + hi) / 2;
        match try_match(a, b, c[mid], partial) {
            Some(m) => {
                hi = mid;
                best = m;
            }
            None => lo = mid + 1,
        }
    }
    Some((c[hi], best))
}

#[derive(Clone, Debug, PartialEq)]
pub struct Bottleneck {
    /// `f64::INFINITY` when the extended diagrams differ in size.
    pub distance: f64,
    pub certificate: Option<MatchingCertificate>,
}

/// Bottleneck distance in dimension `dim`: the largest of the ordinary,
/// relative and extended distances, the last one over perfect matchings.
pub fn bottleneck(left: &ExtendedDiagram, right: &ExtendedDiagram, dim: usize) -> Bottleneck {
    let mut delta: f64 = 0.0;
    let mut matchings: [KindMatching; 3] = Default::default();
    for (k, &kind) in KINDS.iter().enumerate() {
        let a = left.select(dim, kind);
        let b = right.select(dim, kind);
        match kind_bottleneck(&a, &b, kind != IntervalKind::Extended) {
            Some((d, m)) => {
                delta = delta.max(d);
                matchings[k] = m;
            }
            None => {
                return Bottleneck {
                    distance: f64::INFINITY,
                    certificate: None,
                }
            }
        }
    }
    Bottleneck {
        distance: delta,
        certificate: Some(MatchingCertificate { dim, delta, matchings }),
    }
}

/// Per-dimension distances for `0..=p_max`.
pub fn bottleneck_all(left: &ExtendedDiagram, right: &ExtendedDiagram, p_max: usize) -> Vec<f64> {
    (0..=p_max).map(|p| bottleneck(left, right, p).distance).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extended::ExtendedInterval;

    fn pt(dim: usize, kind: IntervalKind, birth: f64, death: f64) -> DiagramPoint {
        DiagramPoint { dim, kind, birth, death }
    }

    #[test]
    fn maps_stages_to_values() {
        let bc = ExtendedBarcode {
            intervals: vec![
                ExtendedInterval { dim: 0, kind: IntervalKind::Ordinary, birth: 1, death: 2 },
                ExtendedInterval { dim: 0, kind: IntervalKind::Extended, birth: 1, death: 1 },
            ],
        };
        let d = diagrams(&bc, &[0.5, 1.5], &[1.5, 0.5]).unwrap();
        assert_eq!(
            d.points(),
            &[pt(0, IntervalKind::Ordinary, 0.5, 1.5), pt(0, IntervalKind::Extended, 0.5, 1.5)]
        );
        assert!(diagrams(&ExtendedBarcode::default(), &[], &[]).unwrap().is_empty());
        let bad = ExtendedBarcode {
            intervals: vec![ExtendedInterval { dim: 1, kind: IntervalKind::Relative, birth: 1, death: 3 }],
        };
        assert!(diagrams(&bad, &[1.0], &[1.0, 0.0]).is_err());
    }

    #[test]
    fn distance_examples() {
        let a = ExtendedDiagram::new(vec![pt(0, IntervalKind::Ordinary, 1.0, 3.0)]);
        let e = ExtendedDiagram::default();
        assert_eq!(bottleneck(&a, &e, 0).distance, 1.0);
        assert_eq!(bottleneck(&a, &a, 0).distance, 0.0);
        let x = ExtendedDiagram::new(vec![pt(0, IntervalKind::Extended, 1.0, 2.0)]);
        assert_eq!(bottleneck(&x, &e, 0).distance, f64::INFINITY);
        assert_eq!(bottleneck(&x, &e, 1).distance, 0.0);
        let y = ExtendedDiagram::new(vec![pt(0, IntervalKind::Extended, 1.25, 2.0)]);
        let b = bottleneck(&x, &y, 0);
        assert_eq!(b.distance, 0.25);
        assert!(b.certificate.unwrap().verify(&x, &y, 1e-12));
    }

    #[test]
    fn prefers_diagonal_when_cheaper() {
        let a = ExtendedDiagram::new(vec![pt(0, IntervalKind::Ordinary, 0.0, 0.2)]);
        let b = ExtendedDiagram::new(vec![pt(0, IntervalKind::Ordinary, 5.0, 5.4)]);
        let r = bottleneck(&a, &b, 0);
        assert!((r.distance - 0.2).abs() < 1e-12);
        assert!(r.certificate.unwrap().verify(&a, &b, 1e-12));
    }

    #[test]
    fn relative_points_use_absolute_charge() {
        let a = ExtendedDiagram::new(vec![pt(1, IntervalKind::Relative, 3.0, 1.0)]);
        assert_eq!(bottleneck(&a, &ExtendedDiagram::default(), 1).distance, 1.0);
    }
}
