use accdom::accurate::accurate;
use accdom::domination::dominates;
use accdom::ops::disjoint_union;
use accdom::subsets::{choose, k_subsets, split, split_at};
use accdom::*;
use proptest::prelude::*;

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        proptest::collection::vec(any::<bool>(), pairs.len()).prop_map(move |mask| {
            let edges: Vec<_> = pairs
                .iter()
                .zip(&mask)
                .filter(|(_, &m)| m)
                .map(|(&e, _)| e)
                .collect();
            Graph::new(n, &edges).unwrap()
        })
    })
}

fn graph_and_set(max_n: usize) -> impl Strategy<Value = (Graph, VertexSet)> {
    graph_strategy(max_n).prop_flat_map(|g| {
        let n = g.order();
        (Just(g), 0..1u64 << n).prop_map(|(g, bits)| (g, VertexSet::from_bits(bits)))
    })
}

/// Backtracking isomorphism test, fine for a dozen vertices.
fn isomorphic(g: &Graph, h: &Graph) -> bool {
    fn extend(g: &Graph, h: &Graph, map: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
        let v = map.len();
        if v == g.order() {
            return true;
        }
        for w in 0..h.order() {
            if used[w] || g.degree(v) != h.degree(w) {
                continue;
            }
            if (0..v).any(|u| g.has_edge(u, v) != h.has_edge(map[u], w)) {
                continue;
            }
            map.push(w);
            used[w] = true;
            if extend(g, h, map, used) {
                return true;
            }
            map.pop();
            used[w] = false;
        }
        false
    }
    let mut dg = g.degrees();
    let mut dh = h.degrees();
    dg.sort_unstable();
    dh.sort_unstable();
    g.order() == h.order()
        && g.edge_count() == h.edge_count()
        && dg == dh
        && extend(g, h, &mut Vec::new(), &mut vec![false; h.order()])
}

fn fam(f: FamilySpec) -> Graph {
    make_family(f).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn accuracy_test_matches_definition((g, d) in graph_and_set(8)) {
        prop_assert_eq!(is_accurate(&g, d).unwrap(), is_accurate_naive(&g, d).unwrap());
    }

    #[test]
    fn domination_is_upward_closed((g, d) in graph_and_set(9), v in 0usize..9) {
        prop_assume!(v < g.order());
        if dominates(&g, d) {
            let mut bigger = d;
            bigger.insert(v);
            prop_assert!(dominates(&g, bigger));
        }
    }

    #[test]
    fn accurate_sets_dominate((g, d) in graph_and_set(8)) {
        if accurate(&g, d) {
            prop_assert!(dominates(&g, d));
        }
    }

    #[test]
    fn handshake(g in graph_strategy(12)) {
        prop_assert_eq!(g.degrees().iter().sum::<usize>(), 2 * g.edge_count());
    }

    #[test]
    fn gamma_at_most_gamma_a(g in graph_strategy(9)) {
        let ga = gamma_a(&g).unwrap();
        prop_assert!(gamma(&g) <= ga);
        prop_assert!(ga <= g.order());
    }

    #[test]
    fn large_sets_are_accurate_iff_dominating(g in graph_strategy(10)) {
        let n = g.order();
        let d = domination_polynomial(&g).unwrap();
        let a = accurate_polynomial(&g).unwrap();
        for i in n / 2 + 1..=n {
            prop_assert_eq!(d.coeff(i), a.coeff(i));
        }
        for i in 0..=n {
            prop_assert!(a.coeff(i).as_biguint() <= d.coeff(i).as_biguint());
        }
    }

    #[test]
    fn partition_merge_is_the_full_sweep(n in 1usize..16, k in 0usize..16, mut cuts in proptest::collection::vec(any::<u64>(), 0..6)) {
        prop_assume!(k <= n);
        let total = choose(n, k);
        for c in cuts.iter_mut() {
            *c %= total + 1;
        }
        let merged: Vec<VertexSet> = split_at(n, k, &cuts).iter().flat_map(|r| r.iter()).collect();
        let whole: Vec<VertexSet> = k_subsets(n, k).collect();
        prop_assert_eq!(merged.len() as u64, total);
        prop_assert_eq!(merged, whole);
    }

    #[test]
    fn worker_count_does_not_change_counts(g in graph_strategy(11), parts in 1usize..9) {
        let one = Sweep::with_parts(1).accurate_polynomial(&g).unwrap();
        let many = Sweep::with_parts(parts).accurate_polynomial(&g).unwrap();
        prop_assert_eq!(one, many);
    }

    #[test]
    fn union_with_isolated_vertex_shifts_polynomial(g in graph_strategy(8)) {
        // an isolated vertex must belong to every dominating set
        let k1 = Graph::empty(1).unwrap();
        let with = domination_polynomial(&disjoint_union(&g, &k1).unwrap()).unwrap();
        let without = domination_polynomial(&g).unwrap();
        prop_assert_eq!(with.coeff(0), Count::zero());
        for i in 0..=g.order() {
            prop_assert_eq!(with.coeff(i + 1), without.coeff(i));
        }
    }
}

#[test]
fn accurate_sets_of_cycles_are_closed_under_symmetry() {
    for n in 3..=12 {
        let c = fam(FamilySpec::Cycle(n));
        for i in 1..=n {
            let sets = enumerate_accurate(&c, i).unwrap();
            let members: std::collections::HashSet<u64> = sets.iter().map(|s| s.bits()).collect();
            for s in &sets {
                let rotated: VertexSet = s.iter().map(|v| (v + 1) % n).collect();
                let reflected: VertexSet = s.iter().map(|v| (n - v) % n).collect();
                assert!(members.contains(&rotated.bits()), "C_{n} rotation of {s:?}");
                assert!(
                    members.contains(&reflected.bits()),
                    "C_{n} reflection of {s:?}"
                );
            }
        }
    }
}

#[test]
fn ladder_is_path_times_k2() {
    for n in 1..=5 {
        let product =
            cartesian_product(&fam(FamilySpec::Path(n)), &fam(FamilySpec::Complete(2))).unwrap();
        assert!(isomorphic(&fam(FamilySpec::Ladder(n)), &product), "L_{n}");
    }
}

#[test]
fn book_is_star_times_k2() {
    for n in 1..=5 {
        let product =
            cartesian_product(&fam(FamilySpec::Star(n)), &fam(FamilySpec::Complete(2))).unwrap();
        assert!(isomorphic(&fam(FamilySpec::Book(n)), &product), "B_{n}");
    }
}

#[test]
fn friendship_is_k1_join_matching() {
    for n in 1..=5 {
        let mut matching = Graph::empty(0).unwrap();
        for _ in 0..n {
            matching = disjoint_union(&matching, &fam(FamilySpec::Complete(2))).unwrap();
        }
        let f = join(&Graph::empty(1).unwrap(), &matching).unwrap();
        assert!(isomorphic(&fam(FamilySpec::Friendship(n)), &f), "F_{n}");
    }
}

#[test]
fn hypercube_is_iterated_product() {
    let mut q = fam(FamilySpec::Complete(2));
    for d in 2..=4 {
        q = cartesian_product(&q, &fam(FamilySpec::Complete(2))).unwrap();
        assert!(isomorphic(&fam(FamilySpec::Hypercube(d)), &q), "Q_{d}");
    }
}

#[test]
fn isomorphism_helper_rejects_non_isomorphic_graphs() {
    // same degree sequence, different graphs
    let two_triangles =
        disjoint_union(&fam(FamilySpec::Cycle(3)), &fam(FamilySpec::Cycle(3))).unwrap();
    assert!(!isomorphic(&fam(FamilySpec::Cycle(6)), &two_triangles));
    assert!(isomorphic(
        &fam(FamilySpec::Cycle(6)),
        &fam(FamilySpec::Cycle(6))
    ));
}

#[test]
fn split_covers_everything_once() {
    for parts in 1..=10 {
        let merged: Vec<VertexSet> = split(12, 5, parts).iter().flat_map(|r| r.iter()).collect();
        assert_eq!(merged, k_subsets(12, 5).collect::<Vec<_>>());
    }
}
