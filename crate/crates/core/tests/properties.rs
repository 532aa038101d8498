mod common;

use maniplex::cli::{parse_maniplex_file, write_maniplex_file};
use maniplex::constructions::{corpus, torus44};
use maniplex::enumerate::{canonical_code, enumerate_oriented_stg3_chiral, enumerate_stg, oriented_code, StgFilter};
use maniplex::symmetry::{aut_group, extend_automorphism};
use maniplex::SymmetryTypeGraph;
use proptest::prelude::*;

fn shuffled(k: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..k).collect::<Vec<_>>()).prop_shuffle()
}

fn involution_family(max_k: usize, max_n: usize) -> impl Strategy<Value = Vec<Vec<usize>>> {
    (1..=max_k, 1..=max_n).prop_flat_map(|(k, n)| {
        let invs = common::all_involutions(k);
        prop::collection::vec(prop::sample::select(invs), n)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn canonical_code_ignores_labels((n, k, pick) in (2..=4usize, 1..=4usize, any::<prop::sample::Index>()),
                                     seed in any::<u64>()) {
        let graphs = enumerate_stg(n, k, StgFilter::default());
        let t = pick.get(&graphs);
        let mut perm: Vec<usize> = (0..k).collect();
        perm.rotate_left((seed % k as u64) as usize);
        if seed & 1 == 1 && k > 1 {
            perm.swap(0, k - 1);
        }
        prop_assert_eq!(canonical_code(t), canonical_code(&t.relabel(&perm)));
    }

    #[test]
    fn canonical_code_ignores_shuffles(perm in shuffled(4), pick in any::<prop::sample::Index>()) {
        let graphs = enumerate_stg(4, 4, StgFilter::default());
        let t = pick.get(&graphs);
        prop_assert_eq!(canonical_code(t), canonical_code(&t.relabel(&perm)));
    }

    #[test]
    fn oriented_code_ignores_shuffles(perm in shuffled(3), n in 4..=7usize, pick in any::<prop::sample::Index>()) {
        let entries = enumerate_oriented_stg3_chiral(n);
        let ot = &pick.get(&entries).graph;
        for mirror in [false, true] {
            prop_assert_eq!(oriented_code(ot, mirror), oriented_code(&ot.relabel(&perm), mirror));
        }
        prop_assert_eq!(oriented_code(ot, true), oriented_code(&ot.mirror(), true));
    }

    #[test]
    fn admissible_iff_commuting(sigma in involution_family(6, 5)) {
        prop_assume!(common::connected(&sigma));
        let t = SymmetryTypeGraph::from_involutions(sigma.clone()).unwrap();
        prop_assert_eq!(t.is_admissible(), common::admissible_by_commutation(&sigma));
    }

    #[test]
    fn file_round_trip(pick in any::<prop::sample::Index>()) {
        let items = corpus();
        let g = pick.get(&items).build().unwrap();
        let text = write_maniplex_file(&g);
        let back = parse_maniplex_file(&text).unwrap();
        prop_assert_eq!(back.tables(), g.tables());
        prop_assert_eq!(write_maniplex_file(&back), text);
    }

    #[test]
    fn torus_maps((b, c) in (1..=4i64, 0..=4i64)) {
        let g = torus44(b, c).unwrap();
        let m = (b * b + c * c) as usize;
        prop_assert!(g.validate().is_valid());
        prop_assert_eq!(g.flag_count(), 8 * m);
        let chiral = c != 0 && c != b;
        prop_assert_eq!(aut_group(&g).order(), if chiral { 4 * m } else { 8 * m });
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn extension_iff_same_orbit(pick in 0..4usize, s in any::<prop::sample::Index>(), t in any::<prop::sample::Index>()) {
        let g = ["cuboctahedron", "prism:5", "pyramid:4", "torus44:1,2"][pick].parse::<maniplex::Named>().unwrap().build().unwrap();
        let autos = common::brute_automorphisms(&g);
        let (s, t) = (s.index(g.flag_count()), t.index(g.flag_count()));
        let same = autos.iter().any(|a| a[s] == t);
        let ext = extend_automorphism(&g, s, t);
        prop_assert_eq!(ext.is_some(), same);
        if let Some(a) = ext {
            prop_assert_eq!(a.apply(s), t);
            prop_assert!(a.preserves(&g));
        }
    }
}
