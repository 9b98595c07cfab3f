//! Independent reference implementations used only by tests.
#![allow(dead_code)]

use std::collections::BTreeMap;

use gsph::diagram::{DiagramPoint, ExtendedDiagram};
use gsph::IntervalKind;

fn pow_mod(mut b: u64, mut e: u64, q: u64) -> u64 {
    let mut r = 1;
    b %= q;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % q;
        }
        b = b * b % q;
        e >>= 1;
    }
    r
}

/// Standard column reduction of a filtered simplicial complex, simplices in
/// filtration order `(height, dimension, vertices)`. Returns
/// `(dim, birth, death)` with `death = None` for essential classes, and only
/// intervals with `birth < death`.
pub fn textbook_barcode(
    simplices: &[(Vec<usize>, usize)],
    q: u64,
) -> Vec<(usize, usize, Option<usize>)> {
    let mut order: Vec<&(Vec<usize>, usize)> = simplices.iter().collect();
    order.sort_by(|a, b| (a.1, a.0.len(), &a.0).cmp(&(b.1, b.0.len(), &b.0)));
    let index: BTreeMap<&Vec<usize>, usize> =
        order.iter().enumerate().map(|(i, s)| (&s.0, i)).collect();
    let n = order.len();
    let mut cols: Vec<BTreeMap<usize, u64>> = order
        .iter()
        .map(|(s, _)| {
            let mut c = BTreeMap::new();
            if s.len() > 1 {
                for k in 0..s.len() {
                    let mut face = s.clone();
                    face.remove(k);
                    let sign = if k % 2 == 0 { 1 } else { q - 1 };
                    c.insert(index[&face], sign % q);
                }
            }
            c
        })
        .collect();
    let mut owner: BTreeMap<usize, usize> = BTreeMap::new();
    let mut paired = vec![false; n];
    let mut out = Vec::new();
    for j in 0..n {
        while let Some((&low, &cl)) = cols[j].iter().next_back() {
            let Some(&k) = owner.get(&low) else { break };
            let ck = cols[k][&low];
            let factor = (q - cl * pow_mod(ck, q - 2, q) % q) % q;
            let other = cols[k].clone();
            for (r, v) in other {
                let e = cols[j].entry(r).or_insert(0);
                *e = (*e + factor * v) % q;
                if *e == 0 {
                    cols[j].remove(&r);
                }
            }
        }
        if let Some((&low, _)) = cols[j].iter().next_back() {
            owner.insert(low, j);
            paired[low] = true;
            paired[j] = true;
            let (b, d) = (order[low].1, order[j].1);
            if b < d {
                out.push((order[low].0.len() - 1, b, Some(d)));
            }
        }
    }
    for i in 0..n {
        if !paired[i] && cols[i].is_empty() {
            out.push((order[i].0.len() - 1, order[i].1, None));
        }
    }
    out.sort();
    out
}

/// Bottleneck distance of one kind by enumerating every matching.
pub fn exhaustive_kind(a: &[DiagramPoint], b: &[DiagramPoint], partial: bool) -> f64 {
    if !partial && a.len() != b.len() {
        return f64::INFINITY;
    }
    fn go(
        i: usize,
        a: &[DiagramPoint],
        b: &[DiagramPoint],
        used: &mut Vec<bool>,
        partial: bool,
        cost: f64,
        best: &mut f64,
    ) {
        if cost >= *best {
            return;
        }
        if i == a.len() {
            let rest = b
                .iter()
                .zip(used.iter())
                .filter(|(_, &u)| !u)
                .map(|(p, _)| (p.death - p.birth).abs() / 2.0)
                .fold(0.0, f64::max);
            if partial || used.iter().all(|&u| u) {
                *best = best.min(cost.max(rest));
            }
            return;
        }
        for j in 0..b.len() {
            if !used[j] {
                used[j] = true;
                let d = (a[i].birth - b[j].birth)
                    .abs()
                    .max((a[i].death - b[j].death).abs());
                go(i + 1, a, b, used, partial, cost.max(d), best);
                used[j] = false;
            }
        }
        if partial {
            let charge = (a[i].death - a[i].birth).abs() / 2.0;
            go(i + 1, a, b, used, partial, cost.max(charge), best);
        }
    }
    let mut best = f64::INFINITY;
    go(0, a, b, &mut vec![false; b.len()], partial, 0.0, &mut best);
    best
}

pub fn exhaustive_bottleneck(left: &ExtendedDiagram, right: &ExtendedDiagram, dim: usize) -> f64 {
    [IntervalKind::Ordinary, IntervalKind::Relative, IntervalKind::Extended]
        .into_iter()
        .map(|k| {
            exhaustive_kind(
                &left.select(dim, k),
                &right.select(dim, k),
                k != IntervalKind::Extended,
            )
        })
        .fold(0.0, f64::max)
}
