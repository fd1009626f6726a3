//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero when any criterion fails.


use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use ctmgraph::automorphism::{aut_group, matrix_cycle_check, symmetry_factor};
use ctmgraph::boundary::boundary;
use ctmgraph::enumeration::{count_correlation_functions, enumerate, EnumerationRequest};
use ctmgraph::fixtures;
use ctmgraph::graph::{dipole, is_feynman_graph, k33, necklace, quartic_vertex, Vertex};
use ctmgraph::invariants::{gurau_degree, jackets};
use ctmgraph::io::{parse, serialize, serialize_value, GraphDocument, GraphValue};
use ctmgraph::pi1::{
    abelianization, gagliardi_presentation, gagliardi_presentation_with, word_from_incidence,
    AbelianInvariants,
};
use ctmgraph::realization::realize;
use ctmgraph::surgery::{connected_sum, EdgeRef};
use ctmgraph::wti::{delta_bookkeeping, free_energy_terms, graph_derivative, sde_two_point_terms, y_expansion};
use ctmgraph::{ColoredGraph, DisconnectedGraph, InteractionModel};
use num_rational::Ratio;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use ctmgraph_verify::*;

const ENUMERATION_LIMIT: Duration = Duration::from_secs(300);
const ADDITIVITY_LIMIT: Duration = Duration::from_secs(120);
const REALIZATION_LIMIT: Duration = Duration::from_secs(60);
const RANDOM_ADDITIVITY_INSTANCES: usize = 250;
const SEED: u64 = 0x5eed_c0de;

type Outcome = Result<String, String>;
type Criterion = (&'static str, &'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration) -> std::result::Result<(), String> {
    let t = start.elapsed();
    ensure(t <= limit, || format!("took {t:?}, limit {limit:?}"))
}

fn connected(rank: usize, p: usize) -> Vec<ColoredGraph> {
    enumerate(&EnumerationRequest::connected(rank, p)).unwrap()
}

fn all(rank: usize, p: usize) -> Vec<ColoredGraph> {
    enumerate(&EnumerationRequest::all(rank, p)).unwrap()
}

fn counts(rank: usize, ps: std::ops::RangeInclusive<usize>) -> Vec<usize> {
    ps.map(|p| connected(rank, p).len()).collect()
}

fn c1_counts_rank3() -> Outcome {
    let start = Instant::now();
    let got = counts(3, 1..=5);
    ensure(got == [1, 3, 7, 26, 97], || format!("got {got:?}"))?;
    within(start, ENUMERATION_LIMIT)?;
    Ok(format!("{got:?} in {:.2?}", start.elapsed()))
}

fn c1_stretch() -> Outcome {
    let start = Instant::now();
    let n = connected(3, 6).len();
    ensure(n == 624, || format!("got {n}"))?;
    Ok(format!("p=6 gives {n} in {:.2?}", start.elapsed()))
}

fn c2_counts_rank4() -> Outcome {
    let start = Instant::now();
    let got = counts(4, 1..=4);
    ensure(got == [1, 7, 41, 604], || format!("got {got:?}"))?;
    within(start, ENUMERATION_LIMIT)?;
    Ok(format!("{got:?} in {:.2?}", start.elapsed()))
}

fn c3_correlation_counts() -> Outcome {
    let cases = [(3, 2, 4u128), (3, 3, 8), (4, 2, 8)];
    let mut report = Vec::new();
    let mut bad = Vec::new();
    for (d, p, want) in cases {
        let via_transform = count_correlation_functions(d, p, None).unwrap();
        let direct = all(d, p).len() as u128;
        ensure(via_transform == direct, || {
            format!("D={d} p={p}: transform {via_transform} vs direct {direct}")
        })?;
        report.push(format!("D={d} p={p}: {direct}"));
        if direct != want {
            bad.push(format!("D={d} p={p}: expected {want}, got {direct}"));
        }
    }
    if bad.is_empty() {
        Ok(report.join(", "))
    } else {
        Err(bad.join("; "))
    }
}

fn c4_degree_consistency() -> Outcome {
    let mut checked = 0;
    for (d, pmax) in [(3, 4), (4, 3)] {
        for p in 1..=pmax {
            for g in all(d, p) {
                let r = gurau_degree(&g).map_err(|e| e.to_string())?;
                let jacket_sum: i64 = jacket_genera(&g).iter().sum();
                let ff = face_formula_omega(&g);
                ensure(r.omega == ff && Ratio::from(jacket_sum) == ff, || {
                    format!("D={d} p={p}: library {} oracle jackets {jacket_sum} faces {ff}", r.omega)
                })?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} graphs, zero exceptions"))
}

fn c5_fixture_degrees() -> Outcome {
    let n = gurau_degree(&necklace()).map_err(|e| e.to_string())?;
    let mut genera: Vec<i64> = jackets(&necklace()).unwrap().iter().map(|j| j.genus as i64).collect();
    genera.sort();
    ensure(n.omega == Ratio::from(1) && genera == [0, 0, 1], || {
        format!("necklace omega {} genera {genera:?}", n.omega)
    })?;
    let mut oracle = jacket_genera(&necklace());
    oracle.sort();
    ensure(oracle == [0, 0, 1], || format!("oracle genera {oracle:?}"))?;
    for d in 3..=5 {
        let w = gurau_degree(&dipole(d)).unwrap().omega;
        ensure(w == Ratio::from(0) && face_formula_omega(&dipole(d)) == Ratio::from(0), || {
            format!("dipole rank {d} omega {w}")
        })?;
    }
    let k = jackets(&k33()).unwrap();
    ensure(k.len() == 1 && k[0].genus == 1 && jacket_genera(&k33()) == [1], || {
        format!("K33 genus {:?}", k.iter().map(|j| j.genus).collect::<Vec<_>>())
    })?;
    Ok("necklace 1 {0,0,1}; dipoles 0; K33 genus 1".into())
}

fn omega(g: &ColoredGraph) -> Ratio<i64> {
    gurau_degree(g).expect("degree").omega
}

fn c6_additivity() -> Outcome {
    let start = Instant::now();
    let mut sums = 0usize;
    for d in [3, 4] {
        let graphs: Vec<ColoredGraph> = (1..=3).flat_map(|p| connected(d, p)).collect();
        let degrees: Vec<Ratio<i64>> = graphs.iter().map(omega).collect();
        for (g1, w1) in graphs.iter().zip(&degrees) {
            for (g2, w2) in graphs.iter().zip(&degrees) {
                for c in 1..=d {
                    for a in 0..g1.half_order() {
                        for b in 0..g2.half_order() {
                            let s = connected_sum(g1, EdgeRef::new(c, a), g2, EdgeRef::new(c, b))
                                .map_err(|e| e.to_string())?;
                            let w = face_formula_omega(&s);
                            ensure(w == w1 + w2 && omega(&s) == w, || {
                                format!("D={d}: {w} != {w1} + {w2}")
                            })?;
                            sums += 1;
                        }
                    }
                }
            }
        }
    }
    let mut rng = StdRng::seed_from_u64(SEED);
    for _ in 0..RANDOM_ADDITIVITY_INSTANCES {
        let d = rng.gen_range(3..=5);
        let (p1, p2) = (rng.gen_range(4..=9), rng.gen_range(4..=9));
        let g1 = random_connected(&mut rng, d, p1);
        let g2 = random_connected(&mut rng, d, p2);
        let c = rng.gen_range(1..=d);
        let e1 = EdgeRef::new(c, rng.gen_range(0..g1.half_order()));
        let e2 = EdgeRef::new(c, rng.gen_range(0..g2.half_order()));
        let s = connected_sum(&g1, e1, &g2, e2).map_err(|e| e.to_string())?;
        ensure(omega(&s) == omega(&g1) + omega(&g2), || format!("random D={d} instance fails"))?;
        ensure(face_formula_omega(&s) == face_formula_omega(&g1) + face_formula_omega(&g2), || {
            "oracle disagrees".to_string()
        })?;
        sums += 1;
    }
    within(start, ADDITIVITY_LIMIT)?;
    Ok(format!("{sums} connected sums in {:.2?}", start.elapsed()))
}

fn c7_automorphisms() -> Outcome {
    let orders = [
        aut_group(&dipole(3)).order,
        aut_group(&quartic_vertex(3, 1)).order,
        aut_group(&quartic_vertex(3, 2)).order,
        aut_group(&quartic_vertex(3, 3)).order,
        aut_group(&k33()).order,
    ];
    ensure(orders == [1, 2, 2, 2, 3], || format!("fixture orders {orders:?}"))?;
    let mut checked = 0;
    for (d, pmax) in [(3, 4), (4, 4)] {
        for p in 1..=pmax {
            for g in all(d, p) {
                let lib = aut_group(&g).order;
                let sf = symmetry_factor(&DisconnectedGraph::from_graph(&g));
                let brute = brute_aut_order(&g);
                ensure(lib == brute && sf == brute, || {
                    format!("D={d} p={p}: library {lib}, symmetry factor {sf}, brute force {brute}")
                })?;
                checked += 1;
            }
        }
    }
    let mut types = 0;
    for p in 1..=5 {
        for parts in partitions(p) {
            let want = cycle_index_factor(&parts);
            let g = rank_two(&parts);
            let sf = symmetry_factor(&DisconnectedGraph::from_graph(&g));
            ensure(sf == want && matrix_cycle_check(&parts) == want, || {
                format!("cycle type {parts:?}: {sf} vs {want}")
            })?;
            types += 1;
        }
    }
    Ok(format!("{checked} graphs against brute force, {types} rank-2 cycle types"))
}

fn c8_completeness() -> Outcome {
    let start = Instant::now();
    let mut done = 0;
    for (d, pmax) in [(3, 3), (4, 2)] {
        let model = InteractionModel::phi4_melonic(d);
        let inputs: Vec<ColoredGraph> = (1..=pmax).flat_map(|p| connected(d, p)).collect();
        ensure(inputs.len() == if d == 3 { 11 } else { 8 }, || "wrong input count".into())?;
        for b in inputs {
            let g = realize(&DisconnectedGraph::from_graph(&b)).map_err(|e| e.to_string())?;
            ensure(is_feynman_graph(&g, &model), || "not a Feynman graph".into())?;
            let bd = boundary(&g).graph;
            ensure(brute_isomorphic(&bd, &b), || format!("boundary mismatch for {}", b.canonical_code()))?;
            done += 1;
        }
    }
    let mut rng = StdRng::seed_from_u64(SEED);
    let mut disconnected = 0;
    for d in [3, 4] {
        let model = InteractionModel::phi4_melonic(d);
        let pool: Vec<ColoredGraph> = (1..=2).flat_map(|p| connected(d, p)).collect();
        for n in [2, 3] {
            for _ in 0..4 {
                let mut union = pool[rng.gen_range(0..pool.len())].clone();
                for _ in 1..n {
                    union = union.disjoint_union(&pool[rng.gen_range(0..pool.len())]).unwrap();
                }
                let b = DisconnectedGraph::from_graph(&union);
                let g = realize(&b).map_err(|e| e.to_string())?;
                ensure(is_feynman_graph(&g, &model) && g.is_connected(), || "bad realization".into())?;
                let bd = boundary(&g).graph;
                ensure(brute_isomorphic(&bd, &union), || "disconnected boundary mismatch".into())?;
                disconnected += 1;
            }
        }
    }
    within(start, REALIZATION_LIMIT)?;
    Ok(format!("{done} connected, {disconnected} disconnected in {:.2?}", start.elapsed()))
}

fn c9_fundamental_group() -> Outcome {
    use Vertex::{Black as B, White as W};
    let lens_word = word_from_incidence(&[(1, B(0)), (2, W(0)), (1, B(1)), (2, W(1)), (1, B(2)), (2, W(2))]);
    ensure(lens_word == [1, -2, 1, -2, 1, -2], || format!("lens word {lens_word:?}"))?;
    let trivial = word_from_incidence(&[(2, B(0)), (2, W(0)), (1, B(1)), (1, W(1))]);
    ensure(trivial == [2, -2, 1, -1], || format!("cyclic word {trivial:?}"))?;
    let targets = [
        ("s3", fixtures::s3(), AbelianInvariants { free_rank: 0, torsion: vec![] }),
        ("lens31", fixtures::lens_3_1(), AbelianInvariants { free_rank: 0, torsion: vec![3] }),
        ("s2xs1", fixtures::s2_x_s1(), AbelianInvariants { free_rank: 1, torsion: vec![] }),
    ];
    let mut variants = 0;
    for (name, g, want) in targets {
        let base = abelianization(&gagliardi_presentation(&g, 1, 2).unwrap().presentation);
        ensure(base == want, || format!("{name}: {base}"))?;
        for i in 1..=g.rank() {
            for j in 1..=g.rank() {
                if i == j {
                    continue;
                }
                let r = gagliardi_presentation(&g, i, j).unwrap();
                for kill in 1..=r.residue_count {
                    for drop in 0..r.cycle_words.len() {
                        let v = gagliardi_presentation_with(&g, i, j, Some(kill), Some(drop)).unwrap();
                        for w in &v.cycle_words {
                            ensure(w.windows(2).all(|x| (x[0] > 0) != (x[1] > 0)), || {
                                format!("{name}: non-alternating word {w:?}")
                            })?;
                        }
                        let a = abelianization(&v.presentation);
                        ensure(a == want, || format!("{name} ({i},{j}) kill {kill} drop {drop}: {a}"))?;
                        variants += 1;
                    }
                }
            }
        }
    }
    Ok(format!("3 fixtures, {variants} presentation variants"))
}

fn c10_wti() -> Outcome {
    let model = InteractionModel::phi4_melonic(3);
    for a in 1..=3 {
        let two = y_expansion(&model, a, 2).map_err(|e| e.to_string())?;
        ensure(two.len() == 1, || format!("order 2 has {} terms", two.len()))?;
        ensure(two[0].coefficient == Ratio::from(1) && two[0].residual().is_empty(), || {
            "order 2 term wrong".into()
        })?;
        let upto4 = y_expansion(&model, a, 4).unwrap();
        let four: Vec<_> = upto4.iter().filter(|t| t.order == 4).collect();
        ensure(four.len() == 8, || format!("order 4 has {} terms", four.len()))?;
        for t in &four {
            ensure(t.coefficient == Ratio::new(1, 2), || format!("coefficient {}", t.coefficient))?;
            ensure(brute_isomorphic(t.residual(), &dipole(3)), || "residual not a dipole".into())?;
        }
        let mut by_graph = std::collections::BTreeMap::new();
        for t in &four {
            by_graph.entry(t.boundary.canonical_code()).or_insert_with(Vec::new).push(t.r());
        }
        ensure(by_graph.len() == 4 && by_graph.values().all(|rs| rs == &[1, 2]), || {
            "order 4 r-multiplicities".into()
        })?;
    }
    let d = delta_bookkeeping(&dipole(3), 1, 2).map_err(|e| e.to_string())?;
    let rendered = d.render(1);
    ensure(rendered == "sum_{q1,q3} G[B](q1,m2,q3)", || format!("rendered {rendered}"))?;
    let inv = sde_two_point_terms(3).map_err(|e| e.to_string())?;
    ensure(inv.category_counts() == [1, 3, 3, 3, 3, 3], || format!("{:?}", inv.category_counts()))?;
    Ok(format!("order 2: 1 term, order 4: 8 terms at 1/2; {rendered}"))
}

fn c11_round_trip() -> Outcome {
    let mut corpus: Vec<ColoredGraph> = Vec::new();
    for p in 1..=5 {
        corpus.extend(connected(3, p));
    }
    for p in 1..=4 {
        corpus.extend(all(3, p));
        corpus.extend(all(4, p.min(3)));
    }
    corpus.extend(connected(4, 4));
    for g in &corpus {
        let text = serialize(&GraphDocument::from_closed(g));
        let v = parse(&text).map_err(|e| e.to_string())?;
        let GraphValue::Closed(h) = &v else {
            return Err("closed graph parsed as open".into());
        };
        ensure(h == g, || "parse changed the graph".into())?;
        ensure(serialize_value(&v) == text, || "re-serialization not byte-stable".into())?;
        let canon = ctmgraph::canonical_form(h).graph;
        let again = parse(&serialize(&GraphDocument::from_closed(&canon))).unwrap();
        ensure(ctmgraph::canonical_form(&again.residue()).graph == canon, || {
            "canonical form not stable".into()
        })?;
    }
    let mut derivatives = 0;
    for d in [3, 4] {
        for p in 1..=3 {
            for b in all(d, p) {
                let n = graph_derivative(&b, &b).map_err(|e| e.to_string())?.len() as u128;
                let want = brute_aut_order(&b);
                ensure(n == want, || format!("D={d} p={p}: {n} delta terms, |Aut| {want}"))?;
                derivatives += 1;
            }
        }
    }
    Ok(format!("{} documents, {derivatives} derivatives", corpus.len()))
}

fn c_free_energy_rank_two() -> Outcome {
    let terms = free_energy_terms(&InteractionModel::phi4_melonic(2), 10).map_err(|e| e.to_string())?;
    for t in &terms {
        let mut parts: Vec<usize> = t.boundary.components().iter().map(|c| c.half_order()).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let want = Ratio::new(1, cycle_index_factor(&parts) as i64);
        ensure(t.coefficient == want, || format!("{parts:?}: {} vs {want}", t.coefficient))?;
    }
    let expected: usize = (1..=5).map(|p| partitions(p).len()).sum();
    ensure(terms.len() == expected, || format!("{} terms", terms.len()))?;
    Ok(format!("{} rank-2 terms up to 10 sources", terms.len()))
}

fn main() {
    let criteria: Vec<Criterion> = vec![
        ("1", "rank-3 connected counts p=1..5", c1_counts_rank3),
        ("1*", "rank-3 connected count p=6 (stretch)", c1_stretch),
        ("2", "rank-4 connected counts p=1..4", c2_counts_rank4),
        ("3", "correlation-function counts", c3_correlation_counts),
        ("4", "jacket sum equals face-formula degree", c4_degree_consistency),
        ("5", "necklace, dipole and K33 degrees", c5_fixture_degrees),
        ("6", "degree additivity under connected sum", c6_additivity),
        ("7", "automorphism orders and symmetry factors", c7_automorphisms),
        ("7b", "rank-2 free energy coefficients", c_free_energy_rank_two),
        ("8", "realization of boundary graphs", c8_completeness),
        ("9", "crystallization fundamental groups", c9_fundamental_group),
        ("10", "singular Ward-Takahashi terms", c10_wti),
        ("11", "round trip and graph derivatives", c11_round_trip),
    ];
    let mut failed = 0;
    for (id, name, run) in criteria {
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        match outcome {
            Ok(detail) => println!("criterion {id:>3} PASS  {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("criterion {id:>3} FAIL  {name}: {detail}");
            }
        }
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
