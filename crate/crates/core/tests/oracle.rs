//! Exhaustive counts against values worked out by hand and against the
//! closed forms on their stated domains.

use accdom::closed_forms::{d_a_book, d_a_hypercube, llano_path_count, threshold};
use accdom::*;

fn fam(f: FamilySpec) -> Graph {
    make_family(f).unwrap()
}

fn poly(g: &Graph) -> Vec<u64> {
    accurate_polynomial(g)
        .unwrap()
        .coeffs()
        .iter()
        .map(|c| c.to_u64().unwrap())
        .collect()
}

fn dom(g: &Graph) -> Vec<u64> {
    domination_polynomial(g)
        .unwrap()
        .coeffs()
        .iter()
        .map(|c| c.to_u64().unwrap())
        .collect()
}

#[test]
fn small_paths_by_hand() {
    assert_eq!(dom(&fam(FamilySpec::Path(1))), [0, 1]);
    assert_eq!(dom(&fam(FamilySpec::Path(3))), [0, 1, 3, 1]);
    // P_4: the dominating pairs {0,2} {0,3} {1,2} {1,3} all have dominating complements
    assert_eq!(dom(&fam(FamilySpec::Path(4))), [0, 0, 4, 4, 1]);
    assert_eq!(poly(&fam(FamilySpec::Path(4))), [0, 0, 0, 4, 1]);
    assert_eq!(poly(&fam(FamilySpec::Path(3))), [0, 1, 3, 1]);
}

#[test]
fn small_cycles_by_hand() {
    assert_eq!(dom(&fam(FamilySpec::Cycle(4))), [0, 0, 6, 4, 1]);
    // C_4: each dominating pair leaves a dominating pair behind
    assert_eq!(poly(&fam(FamilySpec::Cycle(4))), [0, 0, 0, 4, 1]);
    assert_eq!(poly(&fam(FamilySpec::Cycle(3))), [0, 0, 3, 1]);
}

#[test]
fn complete_graphs_need_more_than_half() {
    for n in 1..=10 {
        let p = accurate_polynomial(&fam(FamilySpec::Complete(n))).unwrap();
        for i in 0..=n {
            let want = if i > n / 2 {
                binomial(n as i64, i as i64)
            } else {
                Count::zero()
            };
            assert_eq!(p.coeff(i), want, "K_{n}, i = {i}");
        }
        assert_eq!(gamma_a(&fam(FamilySpec::Complete(n))).unwrap(), n / 2 + 1);
    }
}

#[test]
fn path_closed_form_matches_oracle() {
    for n in 1..=15 {
        let p = domination_polynomial(&fam(FamilySpec::Path(n))).unwrap();
        for k in 1..=n {
            assert_eq!(
                llano_path_count(n, k).unwrap(),
                p.coeff(k),
                "P_{n}, k = {k}"
            );
        }
    }
}

#[test]
fn tables_match_oracle() {
    let paths = path_count_table(14).unwrap();
    let cycles = cycle_count_table(14).unwrap();
    for n in 1..=14 {
        assert_eq!(
            paths.row(n).unwrap(),
            &domination_polynomial(&fam(FamilySpec::Path(n))).unwrap()
        );
    }
    for n in 3..=14 {
        assert_eq!(
            cycles.row(n).unwrap(),
            &domination_polynomial(&fam(FamilySpec::Cycle(n))).unwrap()
        );
    }
}

#[test]
fn hypercube_count_holds_above_its_threshold() {
    let first_valid = [(1, 2), (2, 3), (3, 5)];
    for (d, from) in first_valid {
        let p = accurate_polynomial(&fam(FamilySpec::Hypercube(d))).unwrap();
        for i in 0..=1usize << d {
            let holds = d_a_hypercube(d, i).unwrap() == p.coeff(i);
            assert_eq!(holds, i >= from, "Q_{d}, i = {i}");
        }
    }
}

#[test]
fn book_count_agrees_at_two() {
    for n in 3..=7 {
        let p = accurate_polynomial(&fam(FamilySpec::Book(n))).unwrap();
        assert_eq!(d_a_book(n, 2).unwrap(), p.coeff(2), "B_{n}");
    }
}

#[test]
fn threshold_is_half_plus_one() {
    assert_eq!(threshold(1), 1);
    assert_eq!(threshold(6), 4);
    assert_eq!(threshold(7), 4);
}

#[test]
fn corona_over_k2_by_hand() {
    // K2 ∘ K1 is P4
    let g = corona_k1(&fam(FamilySpec::Complete(2))).unwrap();
    assert_eq!(poly(&g), [0, 0, 0, 4, 1]);
}

#[test]
fn enumerate_agrees_with_count() {
    let g = fam(FamilySpec::Ladder(5));
    for i in 0..=10 {
        let sets = enumerate_accurate(&g, i).unwrap();
        assert_eq!(Count::from(sets.len()), count_accurate(&g, i).unwrap());
        assert!(sets
            .iter()
            .all(|s| s.len() == i && is_accurate(&g, *s).unwrap()));
        assert!(sets.windows(2).all(|w| w[0] != w[1]));
    }
}

#[test]
fn capacity_is_reported() {
    let g = fam(FamilySpec::Path(23));
    assert!(matches!(count_accurate(&g, 3), Err(Error::Capacity { .. })));
    let wide = Sweep {
        max_vertices: 23,
        parts: 2,
    };
    assert_eq!(wide.count_accurate(&g, 23).unwrap(), Count::one());
}
