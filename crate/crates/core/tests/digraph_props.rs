use std::collections::{BTreeMap, BTreeSet};

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use gsph::digraph::{allowed_paths, build_pph_input, regular_boundary, RegularPath, WeightedDigraph};
use gsph::extended::{extended_barcode, ExtendedReading};
use gsph::linalg::PrimeField;
use gsph::oracle::extended_module_oracle;
use gsph::IntervalKind;

fn random_digraph(seed: u64, max_vertices: usize) -> WeightedDigraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.gen_range(1..=max_vertices);
    let density = rng.gen_range(0.05..0.4);
    let mut g = WeightedDigraph::new();
    for v in 0..n {
        g.add_vertex(&format!("v{v}")).unwrap();
    }
    for a in 0..n {
        for b in 0..n {
            if a != b && rng.gen_bool(density) {
                let w = f64::from(rng.gen_range(0..4u8)) * 0.5;
                g.add_edge(&format!("v{a}"), &format!("v{b}"), w).unwrap();
            }
        }
    }
    g
}

fn path_names(g: &WeightedDigraph, p_max: usize) -> Vec<BTreeSet<String>> {
    let names = g.vertex_names();
    allowed_paths(g, p_max)
        .iter()
        .map(|level| {
            level
                .iter()
                .map(|p| p.0.iter().map(|&v| names[v].as_str()).collect::<Vec<_>>().join(">"))
                .collect()
        })
        .collect()
}

fn components(g: &WeightedDigraph) -> usize {
    let names = g.vertex_names();
    let index: BTreeMap<&str, usize> = names.iter().enumerate().map(|(i, n)| (n.as_str(), i)).collect();
    let mut parent: Vec<usize> = (0..names.len()).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        if parent[x] != x {
            let root = find(parent, parent[x]);
            parent[x] = root;
        }
        parent[x]
    }
    for (s, t, _) in g.edges() {
        let (a, b) = (find(&mut parent, index[s]), find(&mut parent, index[t]));
        parent[a] = b;
    }
    (0..names.len()).filter(|&x| find(&mut parent, x) == x).count()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn heights_match_sublevel_and_superlevel_graphs(seed in any::<u64>()) {
        let g = random_digraph(seed, 8);
        let x = build_pph_input(&g, 1, PrimeField::F2);
        let a = x.ascending_values().to_vec();
        let b = x.descending_values();
        for p in 0..x.names.len() {
            let asc = x.input.ascending(p);
            let desc = x.input.descending(p);
            for (i, &value) in a.iter().enumerate() {
                let expected = path_names(&g.sublevel(value), p).pop().unwrap();
                let got: BTreeSet<String> = x.names[p]
                    .iter()
                    .zip(asc)
                    .filter(|(_, &h)| h <= i + 1)
                    .map(|(n, _)| n.clone())
                    .collect();
                prop_assert_eq!(got, expected, "dimension {} ascending stage {}", p, i + 1);
            }
            for (j, &value) in b.iter().enumerate() {
                let expected = path_names(&g.superlevel(value), p).pop().unwrap();
                let got: BTreeSet<String> = x.names[p]
                    .iter()
                    .zip(desc)
                    .filter(|(_, &h)| h <= j + 1)
                    .map(|(n, _)| n.clone())
                    .collect();
                prop_assert_eq!(got, expected, "dimension {} descending stage {}", p, j + 1);
            }
        }
    }

    #[test]
    fn h0_counts_weak_components(seed in any::<u64>()) {
        let g = random_digraph(seed, 8);
        let x = build_pph_input(&g, 0, PrimeField::F2);
        let m = x.input.ascending_stages();
        let table = extended_module_oracle(&x.input, 0);
        prop_assert_eq!(table[0][m - 1][m - 1], components(&g));
        let bc = extended_barcode(&x.input, 0, ExtendedReading::BaseRow, true).unwrap();
        let ext = bc.intervals.iter().filter(|iv| iv.kind == IntervalKind::Extended).count();
        prop_assert_eq!(ext, components(&g));
    }

    #[test]
    fn removing_edges_shrinks_allowed_paths(seed in any::<u64>()) {
        let g = random_digraph(seed, 6);
        let smaller = g.sublevel(0.75);
        let big = path_names(&g, 3);
        let small = path_names(&smaller, 3);
        for (s, b) in small.iter().zip(&big) {
            prop_assert!(s.is_subset(b));
        }
    }

    #[test]
    fn oracle_check_holds_for_random_digraphs(seed in any::<u64>(), q in prop::sample::select(vec![2u32, 3])) {
        let g = random_digraph(seed, 6);
        let x = build_pph_input(&g, 2, PrimeField::new(q).unwrap());
        let table = extended_module_oracle(&x.input, 2);
        let bc = extended_barcode(&x.input, 2, ExtendedReading::BaseRow, true).unwrap();
        let m = x.input.ascending_stages();
        let total = m + x.input.descending_stages();
        for (p, rows) in table.iter().enumerate() {
            for u in 1..=total {
                for v in u..=total {
                    prop_assert_eq!(bc.count_covering(p, m, u, v), rows[u - 1][v - 1]);
                }
            }
        }
    }
}

#[test]
fn regular_boundary_squares_to_zero_exhaustively() {
    fn sequences(n: usize, len: usize) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new()];
        for _ in 0..len {
            out = out
                .into_iter()
                .flat_map(|s| (0..n).map(move |v| [s.clone(), vec![v]].concat()))
                .collect();
        }
        out
    }
    let mut checked = 0;
    for len in 1..=5 {
        for s in sequences(4, len) {
            if !RegularPath::is_regular(&s) {
                continue;
            }
            let mut total: BTreeMap<RegularPath, i64> = BTreeMap::new();
            for (face, a) in regular_boundary(&RegularPath(s.clone())) {
                for (face2, b) in regular_boundary(&face) {
                    *total.entry(face2).or_default() += a * b;
                }
            }
            assert!(total.values().all(|&c| c == 0), "{s:?}");
            checked += 1;
        }
    }
    assert!(checked > 300);
}

#[test]
fn edgeless_graphs_have_only_vertex_classes() {
    for n in 1..=5 {
        let mut g = WeightedDigraph::new();
        for v in 0..n {
            g.add_vertex(&format!("v{v}")).unwrap();
        }
        let x = build_pph_input(&g, 2, PrimeField::F2);
        let table = extended_module_oracle(&x.input, 2);
        assert_eq!(table[0][0][0], n);
        assert_eq!(table[1][0][0], 0);
        assert_eq!(table[2][0][0], 0);
    }
}

#[test]
fn two_weights_give_two_stages_each_way() {
    let mut g = WeightedDigraph::new();
    g.add_edge("a", "b", 1.0).unwrap();
    g.add_edge("b", "c", 2.0).unwrap();
    let x = build_pph_input(&g, 1, PrimeField::F2);
    assert_eq!(x.ascending_values(), &[1.0, 2.0]);
    assert_eq!(x.descending_values(), vec![2.0, 1.0]);
    let path = x.names[2].iter().position(|n| n == "a>b>c").unwrap();
    assert_eq!(x.input.ascending(2)[path], 2);
    assert_eq!(x.input.descending(2)[path], 2);
}
