mod common;

use common::{cover_oracle, naive_bondage, naive_stability, random_graph, rng};
use domchrom::generators::circulant_by_residue;
use domchrom::perturbation::{dom_bondage, dom_stability, SweepOptions};
use domchrom::{dom_chromatic_number, dom_chromatic_oracle, Budget, FamilySpec};

fn solve(g: &domchrom::Graph) -> usize {
    dom_chromatic_number(g, &Budget::unlimited()).unwrap()
}

#[test]
fn partition_and_cover_oracles_agree() {
    let mut r = rng(7);
    for i in 0..300 {
        let g = random_graph(&mut r, 1 + i % 9, [0.3, 0.5, 0.7][i % 3]);
        assert_eq!(
            dom_chromatic_oracle(&g, 10).unwrap(),
            cover_oracle(&g),
            "{g:?}"
        );
    }
}

#[test]
fn solver_matches_cover_oracle_on_random_graphs() {
    let mut r = rng(11);
    for i in 0..200 {
        let n = 8 + i % 9;
        let g = random_graph(&mut r, n, [0.2, 0.35, 0.5][i % 3]);
        assert_eq!(solve(&g), cover_oracle(&g), "{g:?}");
    }
}

#[test]
fn solver_matches_cover_oracle_on_families() {
    for spec in [
        "circulant:11:1,3",
        "circulant:19:1,3",
        "hchain:3",
        "mchain:3",
        "grid:3x4",
        "grid:3x7",
        "ladder:7",
        "prism:7",
        "qmn:3x3",
        "flower:5x3",
        "tchain:5",
        "ochain:4",
    ] {
        let g = spec.parse::<FamilySpec>().unwrap().generate().unwrap();
        assert_eq!(solve(&g), cover_oracle(&g), "{spec}");
    }
}

#[test]
fn small_circulants_agree() {
    for n in 4..=16 {
        let g = circulant_by_residue(n, &[1, 3]).unwrap();
        assert_eq!(solve(&g), cover_oracle(&g), "n = {n}");
    }
}

#[test]
fn stability_matches_brute_force() {
    let mut r = rng(13);
    for i in 0..40 {
        let g = random_graph(&mut r, 2 + i % 6, 0.5);
        let got = dom_stability(&g, &SweepOptions::default()).unwrap();
        assert_eq!(got.size, Some(naive_stability(&g)), "{g:?}");
    }
}

#[test]
fn bondage_matches_brute_force() {
    let mut r = rng(17);
    let mut tried = 0;
    while tried < 40 {
        let g = random_graph(&mut r, 3 + tried % 4, 0.5);
        if g.edge_count() == 0 || g.edge_count() > 10 {
            continue;
        }
        tried += 1;
        let got = dom_bondage(&g, &SweepOptions::default()).unwrap();
        assert_eq!(got.size, naive_bondage(&g), "{g:?}");
    }
}

#[test]
fn sweep_witness_is_minimal() {
    // every smaller removal leaves the value unchanged
    for spec in ["path:7", "cycle:8", "bipartite:3x3"] {
        let g = spec.parse::<FamilySpec>().unwrap().generate().unwrap();
        let r = dom_stability(&g, &SweepOptions::default()).unwrap();
        let s = r.size.unwrap();
        for rm in common::subsets(g.vertex_count(), s - 1) {
            let (h, _) = g.delete_vertices(&rm).unwrap();
            assert_eq!(solve(&h), r.before, "{spec} minus {rm:?}");
        }
        let (h, _) = g.delete_vertices(r.witness.as_ref().unwrap()).unwrap();
        assert_eq!(Some(solve(&h)), r.after);
    }
}
