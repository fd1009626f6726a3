
use ctmgraph::automorphism::aut_group;
use ctmgraph::boundary::{boundary, cone};
use ctmgraph::invariants::gurau_degree;
use ctmgraph::io::{parse, serialize, GraphDocument};
use ctmgraph::pi1::{abelianization, tietze_simplify, GroupPresentation};
use ctmgraph::surgery::{connected_sum, remove_dipole, EdgeRef};
use ctmgraph::wti::{delta_bookkeeping, graph_derivative, ZSource};
use ctmgraph::{canonical_form, find_isomorphism, ColoredGraph};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;

use crate::*;

fn graph(rank: usize, p: usize, seed: u64) -> ColoredGraph {
    random_graph(&mut StdRng::seed_from_u64(seed), rank, p)
}

fn shuffled(p: usize, rng: &mut StdRng) -> Vec<usize> {
    let mut v: Vec<usize> = (0..p).collect();
    v.shuffle(rng);
    v
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn canonical_form_ignores_labels(rank in 2usize..=5, p in 1usize..=8, seed: u64, relabel_seed: u64) {
        let g = graph(rank, p, seed);
        let mut rng = StdRng::seed_from_u64(relabel_seed);
        let (a, b) = (shuffled(p, &mut rng), shuffled(p, &mut rng));
        let h = relabel(&g, &a, &b);
        let cg = canonical_form(&g);
        prop_assert_eq!(&cg.code, &canonical_form(&h).code);
        prop_assert!(brute_isomorphic_small(&cg.graph, &g));
        let (alpha, beta) = find_isomorphism(&g, &h).expect("isomorphic");
        prop_assert_eq!(g.relabel(&alpha, &beta), h);
    }

    #[test]
    fn canonical_codes_separate_classes(p in 1usize..=5, s1: u64, s2: u64) {
        let g = graph(3, p, s1);
        let h = graph(3, p, s2);
        prop_assert_eq!(g.canonical_code() == h.canonical_code(), brute_isomorphic(&g, &h));
    }

    #[test]
    fn boundary_of_cone_is_identity(rank in 2usize..=5, p in 1usize..=7, seed: u64) {
        let b = graph(rank, p, seed);
        let bd = boundary(&cone(&b)).graph;
        prop_assert_eq!(bd.canonical_code(), b.canonical_code());
    }

    #[test]
    fn degree_is_additive(rank in 3usize..=6, p1 in 1usize..=6, p2 in 1usize..=6, s1: u64, s2: u64, pick: u64) {
        let mut rng = StdRng::seed_from_u64(s1);
        let g1 = random_connected(&mut rng, rank, p1);
        let mut rng = StdRng::seed_from_u64(s2);
        let g2 = random_connected(&mut rng, rank, p2);
        let c = 1 + (pick as usize) % rank;
        let e1 = EdgeRef::new(c, (pick as usize / 7) % p1);
        let e2 = EdgeRef::new(c, (pick as usize / 11) % p2);
        let s = connected_sum(&g1, e1, &g2, e2).unwrap();
        prop_assert!(s.is_connected());
        let w = |g: &ColoredGraph| gurau_degree(g).unwrap().omega;
        prop_assert_eq!(w(&s), w(&g1) + w(&g2));
    }

    #[test]
    fn degree_matches_oracles(rank in 3usize..=6, p in 1usize..=7, seed: u64) {
        let g = graph(rank, p, seed);
        let r = gurau_degree(&g).unwrap();
        prop_assert!(r.consistent);
        prop_assert_eq!(r.omega, face_formula_omega(&g));
        let mut lib: Vec<i64> = r.jackets.iter().map(|j| j.genus as i64).collect();
        let mut oracle = jacket_genera(&g);
        lib.sort();
        oracle.sort();
        prop_assert_eq!(lib, oracle);
    }

    #[test]
    fn dipole_removal_is_valid(rank in 2usize..=5, p in 1usize..=7, seed: u64, pick: u64) {
        let g = graph(rank, p, seed);
        let c = 1 + (pick as usize) % rank;
        let w = (pick as usize / 13) % p;
        let r = remove_dipole(&g, EdgeRef::new(c, w)).unwrap();
        prop_assert_eq!(r.graph.half_order(), p - 1);
        prop_assert_eq!(r.graph.rank(), rank);
        let images: Vec<Vec<usize>> = (1..=rank).map(|c| images(&r.graph, c)).collect();
        prop_assert!(ColoredGraph::check(rank, p - 1, &images).is_valid());
        prop_assert!(r.parallel_colors.contains(&c));
        for &d in &r.parallel_colors {
            prop_assert_eq!(g.black_of(d, w), g.black_of(c, w));
        }
    }

    #[test]
    fn delta_bookkeeping_covers_colors(rank in 2usize..=5, p in 1usize..=6, seed: u64, pick: u64) {
        let g = graph(rank, p, seed);
        let a = 1 + (pick as usize) % rank;
        let r = 1 + (pick as usize / 17) % p;
        let d = delta_bookkeeping(&g, r, a).unwrap();
        prop_assert_eq!(d.z_map.len(), rank);
        prop_assert_eq!(d.z_map[a - 1], ZSource::External);
        for (i, z) in d.z_map.iter().enumerate() {
            match z {
                ZSource::External => prop_assert_eq!(i + 1, a),
                ZSource::Summed => prop_assert!(d.summed_colors.contains(&(i + 1))),
                ZSource::Y { kappa } => {
                    prop_assert!(*kappa >= 1 && *kappa < p);
                    prop_assert!(!d.parallel_colors.contains(&(i + 1)));
                }
            }
        }
        let direct = remove_dipole(&g, EdgeRef::new(a, r - 1)).unwrap();
        prop_assert_eq!(&direct.graph, d.residual());
    }

    #[test]
    fn document_round_trip(rank in 2usize..=6, p in 1usize..=8, seed: u64) {
        let g = graph(rank, p, seed);
        let text = serialize(&GraphDocument::from_closed(&g));
        let back = parse(&text).unwrap().residue();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(serialize(&GraphDocument::from_closed(&back)), text);
    }

    #[test]
    fn automorphisms_match_brute_force(rank in 2usize..=4, p in 1usize..=6, seed: u64) {
        let g = graph(rank, p, seed);
        let a = aut_group(&g);
        prop_assert_eq!(a.order, brute_aut_order(&g));
        prop_assert_eq!(graph_derivative(&g, &g).unwrap().len() as u128, a.order);
    }

    #[test]
    fn tietze_preserves_abelianization(
        n in 1usize..=3,
        rels in prop::collection::vec(prop::collection::vec(-3i32..=3, 0..6), 0..4),
    ) {
        let rels: Vec<Vec<i32>> = rels
            .into_iter()
            .map(|r| r.into_iter().filter(|&x| x != 0 && x.unsigned_abs() as usize <= n).collect())
            .collect();
        let p = GroupPresentation::new(n, rels).unwrap();
        prop_assert_eq!(abelianization(&tietze_simplify(&p)), abelianization(&p));
    }
}

/// Brute-force isomorphism, skipped above 7 whites.
fn brute_isomorphic_small(g: &ColoredGraph, h: &ColoredGraph) -> bool {
    g.half_order() > 7 || brute_isomorphic(g, h)
}
