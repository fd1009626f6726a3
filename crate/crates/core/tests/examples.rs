//! Worked examples, one block per module, with hand-computed expectations.

use ctmgraph::automorphism::{aut_group, lift, matrix_cycle_check, symmetry_factor};
use ctmgraph::boundary::{amputate, boundary, cone, cone_disconnected};
use ctmgraph::enumeration::{enumerate, EnumerationRequest};
use ctmgraph::fixtures::{lens_3_1, s2_x_s1, s3};
use ctmgraph::graph::{dipole, is_feynman_graph, k33, necklace, quartic_vertex};
use ctmgraph::invariants::{amplitude_exponent, faces, gurau_degree, is_melon, jackets};
use ctmgraph::io::{parse, serialize, GraphDocument};
use ctmgraph::pi1::{abelianization, is_crystallization, AbelianInvariants};
use ctmgraph::realization::{crystallization_pipeline, realize};
use ctmgraph::surgery::{connected_sum, degree_bump, pretzel, remove_dipole, separating_chain, EdgeRef};
use ctmgraph::wti::{free_energy_terms, graph_derivative, sde_two_point_terms, y_expansion, SdeCategory};
use ctmgraph::{ColoredGraph, DisconnectedGraph, Error, InteractionModel, OpenFeynmanGraph, Perm};
use num_rational::Ratio;

fn union(gs: &[ColoredGraph]) -> ColoredGraph {
    gs[1..].iter().fold(gs[0].clone(), |acc, g| acc.disjoint_union(g).unwrap())
}

#[test]
fn validity_and_bubbles() {
    assert!(ColoredGraph::check(3, 1, &[vec![0], vec![0], vec![0]]).is_valid());
    let bad = ColoredGraph::check(3, 2, &[vec![0, 0], vec![0, 1], vec![0, 1]]);
    assert!(bad.to_string().contains("color 1 not a permutation"));
    let open = OpenFeynmanGraph::from_pairs(vec![vec![1, 0], vec![0, 1], vec![0, 1]], &[]).unwrap();
    assert_eq!(open.external_leg_count(), 4);

    assert_eq!(union(&[dipole(3), dipole(3)]).component_count(), 2);
    assert_eq!(k33().bubbles(&[1, 2]).len(), 1);
    assert_eq!(quartic_vertex(3, 1).bubbles(&[2, 3]).len(), 2);
}

#[test]
fn canonical_encodings() {
    let v1 = quartic_vertex(3, 1);
    let swap = Perm::transposition(2, 0, 1);
    assert_eq!(v1.relabel(&swap, &Perm::identity(2)).canonical_code(), v1.canonical_code());
    assert_ne!(v1.canonical_code(), quartic_vertex(3, 2).canonical_code());
    let three = union(&[dipole(3), dipole(3), dipole(3)]);
    assert_ne!(k33().canonical_code(), three.canonical_code());
}

#[test]
fn feynman_graph_membership() {
    let model = InteractionModel::phi4_melonic(3);
    assert!(!is_feynman_graph(&cone(&quartic_vertex(3, 1)), &model));
    let two = union(&[quartic_vertex(3, 1), quartic_vertex(3, 1)]);
    let images: Vec<Vec<usize>> = two.perms().iter().map(|p| p.images().to_vec()).collect();
    let vacuum = OpenFeynmanGraph::from_pairs(images, &[[0, 0], [1, 1], [2, 2], [3, 3]]).unwrap();
    assert!(vacuum.is_closed());
    assert!(is_feynman_graph(&vacuum, &model));
    let k = OpenFeynmanGraph::from_pairs(
        k33().perms().iter().map(|p| p.images().to_vec()).collect(),
        &[[0, 0], [1, 1], [2, 2]],
    )
    .unwrap();
    assert!(!is_feynman_graph(&k, &model));
}

#[test]
fn boundaries_and_cones() {
    assert_eq!(boundary(&cone(&k33())).graph.canonical_code(), k33().canonical_code());
    assert!(boundary(&pretzel(3).unwrap()).graph.is_empty());
    let c = cone(&dipole(3));
    assert_eq!(c.external_leg_count(), 2);
    assert_eq!(cone(&k33()).external_leg_count(), 6);
    assert_eq!(cone_disconnected(&DisconnectedGraph::empty(3)).half_order(), 0);
    let a = amputate(&cone(&k33()));
    assert_eq!((a.leg_count(), a.dropped_legs), (0, 6));
    assert_eq!(a.graph.residue(), k33());
}

#[test]
fn faces_jackets_degree() {
    assert_eq!(faces(&dipole(4)).total(), 6);
    assert_eq!(faces(&necklace()).total(), 8);
    assert_eq!(faces(&k33()).total(), 3);
    let mut g: Vec<usize> = jackets(&necklace()).unwrap().iter().map(|j| j.genus as usize).collect();
    g.sort();
    assert_eq!(g, [0, 0, 1]);
    for d in 3..=6 {
        assert!(jackets(&dipole(d)).unwrap().iter().all(|j| j.genus == 0));
        assert!(is_melon(&dipole(d)).unwrap());
        assert_eq!(amplitude_exponent(&dipole(d)).unwrap(), Ratio::from(d as i64 - 1));
    }
    assert_eq!(gurau_degree(&necklace()).unwrap().to_string(), "omega = 1; jackets: 0,0,1");
    assert_eq!(gurau_degree(&k33()).unwrap().omega, Ratio::from(1));
    assert!(!is_melon(&necklace()).unwrap());
    assert_eq!(amplitude_exponent(&necklace()).unwrap(), Ratio::from(2));
    let p = pretzel(3).unwrap();
    assert!(is_melon(&p.to_closed().unwrap()).unwrap());
}

#[test]
fn automorphisms() {
    let three = Perm::from_cycles(3, &[&[0, 1, 2]]).unwrap();
    assert!(lift(&k33(), &three).is_some());
    assert!(lift(&k33(), &Perm::transposition(3, 0, 1)).is_none());
    assert!(lift(&necklace(), &Perm::identity(2)).is_some());
    assert!(lift(&quartic_vertex(3, 1), &Perm::transposition(2, 0, 1)).is_some());

    assert_eq!(aut_group(&dipole(3)).order, 1);
    assert_eq!(aut_group(&quartic_vertex(3, 3)).order, 2);
    assert_eq!(aut_group(&union(&[dipole(3), dipole(3)])).order, 2);
    let sf = |gs: &[ColoredGraph]| symmetry_factor(&DisconnectedGraph::from_graph(&union(gs)));
    assert_eq!(sf(&[k33()]), 3);
    assert_eq!(sf(&[dipole(3), dipole(3), dipole(3)]), 6);
    assert_eq!(sf(&[quartic_vertex(3, 1), quartic_vertex(3, 1)]), 8);
    assert_eq!(matrix_cycle_check(&[1]), 1);
    assert_eq!(matrix_cycle_check(&[1, 1, 1, 2]), 12);
    assert_eq!(matrix_cycle_check(&[3, 3]), 18);
}

#[test]
fn surgery() {
    let w = |g: &ColoredGraph| gurau_degree(g).unwrap().omega;
    let dd = connected_sum(&dipole(3), EdgeRef::new(1, 0), &dipole(3), EdgeRef::new(1, 0)).unwrap();
    assert!(dd.is_connected() && dd.half_order() == 2 && w(&dd) == Ratio::from(0));
    let nn = connected_sum(&necklace(), EdgeRef::new(3, 1), &necklace(), EdgeRef::new(3, 0)).unwrap();
    assert_eq!(w(&nn), Ratio::from(2));

    assert!(remove_dipole(&dipole(3), EdgeRef::new(2, 0)).unwrap().graph.is_empty());
    let r = remove_dipole(&quartic_vertex(3, 1), EdgeRef::new(1, 0)).unwrap();
    assert_eq!((r.graph.clone(), r.parallel_colors), (dipole(3), vec![1]));
    for c in 1..=3 {
        for v in 0..3 {
            let r = remove_dipole(&k33(), EdgeRef::new(c, v)).unwrap();
            assert_eq!((r.graph.half_order(), r.parallel_colors), (2, vec![c]));
        }
    }
}

#[test]
fn separating_chain_keeps_boundaries_apart() {
    let k = realize(&DisconnectedGraph::from_graph(&k33())).unwrap();
    let g = realize(&DisconnectedGraph::from_graph(&dipole(3))).unwrap();
    let e = EdgeRef::new(0, k.prop0_pairs()[0][0]);
    let l = EdgeRef::new(0, g.prop0_pairs()[0][0]);
    let chain = separating_chain(&k, e, &g, l).unwrap();
    let want = DisconnectedGraph::from_graph(&union(&[k33(), dipole(3)]));
    assert_eq!(boundary(&chain).graph.canonical_code(), want.canonical_code());
    assert!(chain.is_connected());
}

#[test]
fn degree_bump_preserves_boundary() {
    let g = realize(&DisconnectedGraph::from_graph(&dipole(3))).unwrap();
    let vacuum = OpenFeynmanGraph::from_closed(&necklace()).unwrap();
    let once = degree_bump(&g, &vacuum).unwrap();
    let twice = degree_bump(&once, &vacuum).unwrap();
    for h in [&once, &twice] {
        assert_eq!(boundary(h).graph, dipole(3));
    }
    assert!(degree_bump(&vacuum, &vacuum).unwrap().is_closed());
    assert!(matches!(degree_bump(&g, &g), Err(Error::NotVacuum)));
}

#[test]
fn realization() {
    let model3 = InteractionModel::phi4_melonic(3);
    let r = realize(&DisconnectedGraph::from_graph(&k33())).unwrap();
    assert!(is_feynman_graph(&r, &model3));
    assert_eq!(boundary(&r).graph.canonical_code(), k33().canonical_code());
    let n = realize(&DisconnectedGraph::from_graph(&necklace())).unwrap();
    assert_eq!(boundary(&n).graph.canonical_code(), necklace().canonical_code());
    let d = realize(&DisconnectedGraph::from_graph(&dipole(3))).unwrap();
    assert_eq!(d.external_leg_count(), 2);

    let two = DisconnectedGraph::from_graph(&union(&[dipole(3), dipole(3)]));
    let g = realize(&two).unwrap();
    assert!(g.is_connected() && g.external_leg_count() == 4);
    assert_eq!(boundary(&g).graph.component_count(), 2);
    let mixed = DisconnectedGraph::from_graph(&union(&[k33(), quartic_vertex(3, 1)]));
    assert_eq!(boundary(&realize(&mixed).unwrap()).graph.canonical_code(), mixed.canonical_code());
    let empty = realize(&DisconnectedGraph::empty(3)).unwrap();
    assert!(empty.is_closed() && empty.half_order() > 0);
}

#[test]
fn bordism_of_three_manifolds() {
    let b = DisconnectedGraph::from_graph(&union(&[lens_3_1(), s2_x_s1(), s3()]));
    let report = crystallization_pipeline(&b).unwrap();
    assert!(report.connected && report.boundary_matches);
    assert_eq!(report.boundary_components, 3);
    let mut found: Vec<AbelianInvariants> = report.abelianizations.into_iter().map(Option::unwrap).collect();
    found.sort_by_key(|a| (a.free_rank, a.torsion.clone()));
    assert_eq!(
        found,
        vec![
            AbelianInvariants { free_rank: 0, torsion: vec![] },
            AbelianInvariants { free_rank: 0, torsion: vec![3] },
            AbelianInvariants { free_rank: 1, torsion: vec![] },
        ]
    );
}

#[test]
fn crystallizations() {
    assert!(is_crystallization(&dipole(4)));
    assert!(!is_crystallization(&union(&[dipole(4), dipole(4)])));
    let doubled = connected_sum(&dipole(4), EdgeRef::new(1, 0), &dipole(4), EdgeRef::new(1, 0)).unwrap();
    assert!(!is_crystallization(&doubled));
    let z = ctmgraph::pi1::GroupPresentation::new(2, vec![vec![1, 2, -1, -2]]).unwrap();
    assert_eq!(abelianization(&z).free_rank, 2);
}

#[test]
fn enumeration_small() {
    assert_eq!(enumerate(&EnumerationRequest::all(3, 2)).unwrap().len(), 4);
}

#[test]
fn free_energy_and_derivatives() {
    let model = InteractionModel::phi4_melonic(3);
    let terms = free_energy_terms(&model, 6).unwrap();
    let four: Vec<_> = terms.iter().filter(|t| t.order == 4).collect();
    assert_eq!(four.len(), 4);
    assert!(four.iter().all(|t| t.coefficient == Ratio::new(1, 2)));

    let six: Vec<_> = terms.iter().filter(|t| t.order == 6).collect();
    assert_eq!(six.len(), 11);
    assert_eq!(six.iter().filter(|t| t.boundary.component_count() == 1).count(), 7);
    let coeff = |gs: &[ColoredGraph]| {
        let code = DisconnectedGraph::from_graph(&union(gs)).canonical_code();
        six.iter().find(|t| t.boundary.canonical_code() == code).unwrap().coefficient
    };
    assert_eq!(coeff(&[k33()]), Ratio::new(1, 3));
    assert_eq!(coeff(&[dipole(3), dipole(3), dipole(3)]), Ratio::new(1, 6));
    assert_eq!(coeff(&[dipole(3), quartic_vertex(3, 2)]), Ratio::new(1, 2));

    assert_eq!(graph_derivative(&k33(), &k33()).unwrap().len(), 3);
    assert!(graph_derivative(&quartic_vertex(3, 1), &quartic_vertex(3, 2)).unwrap().is_empty());
    let dd = union(&[dipole(3), dipole(3)]);
    assert_eq!(graph_derivative(&dd, &dd).unwrap().len(), 2);
}

#[test]
fn ward_takahashi_terms() {
    let model = InteractionModel::phi4_melonic(3);
    let terms = y_expansion(&model, 1, 6).unwrap();
    let code = k33().canonical_code();
    let k: Vec<_> = terms.iter().filter(|t| t.boundary.canonical_code() == code).collect();
    assert_eq!(k.len(), 3);
    for t in k {
        assert_eq!(t.coefficient, Ratio::new(1, 3));
        assert_eq!(t.residual().half_order(), 2);
        assert!(t.residual().is_connected());
        assert_eq!(t.core.parallel_colors, vec![1]);
        assert_eq!(t.core.xi_kappa.len(), 2);
    }

    let inv = sde_two_point_terms(3).unwrap();
    assert_eq!(inv.prefactor, "-2*lambda/(m^2 + |x|^2)");
    let dq = inv
        .terms
        .iter()
        .find(|t| t.category == SdeCategory::DifferenceQuotient && t.color == Some(1))
        .unwrap();
    assert_eq!(dq.kernel.as_deref(), Some("1/(y1^2 - x1^2)"));
    assert_eq!(dq.arguments, vec![vec!["y1", "x2", "x3"]]);
    assert_eq!(dq.subtracted.as_deref(), Some("G2[dipole](x1,x2,x3)"));
}

#[test]
fn documents() {
    let dipole_doc = r#"{"format_version":1,"colors":3,"white":1,"perms":{"1":[0],"2":[0],"3":[0]}}"#;
    assert_eq!(parse(dipole_doc).unwrap().residue(), dipole(3));
    let text = serialize(&GraphDocument::from_closed(&k33()));
    let back = parse(&text).unwrap().residue();
    assert_eq!(serialize(&GraphDocument::from_closed(&back)), text);
    assert_eq!(back.canonical_code(), k33().canonical_code());
    let short = r#"{"format_version":1,"colors":3,"white":2,"perms":{"1":[0,1],"2":[0],"3":[1,0]}}"#;
    let err = parse(short).unwrap_err().to_string();
    assert!(err.contains("color 2"), "{err}");
}
