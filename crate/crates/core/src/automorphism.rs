//! Colored automorphism groups and symmetry factors.
//!
//! An automorphism is stored as its action on white vertices; the black map
//! and edge map are determined by it.

use std::collections::{BTreeSet, VecDeque};

use crate::canon::find_isomorphism;
use crate::graph::{ColoredGraph, DisconnectedGraph};
use crate::perm::{factorial, Perm};

/// Groups larger than this are described by generators and order only.
pub const MAX_LISTED_ELEMENTS: u128 = 40_320;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lift {
    pub white: Perm,
    pub black: Perm,
}

impl Lift {
    /// The image of the color-`c` edge at white `w`, as (color, white).
    pub fn edge_image(&self, color: usize, white: usize) -> (usize, usize) {
        (color, self.white.apply(white))
    }
}

/// Lifts a white permutation `τ` to an automorphism if `σ_c τ σ_c⁻¹` is the
/// same black permutation for every color.
pub fn lift(g: &ColoredGraph, tau: &Perm) -> Option<Lift> {
    if tau.len() != g.half_order() {
        return None;
    }
    if g.half_order() == 0 {
        return Some(Lift {
            white: tau.clone(),
            black: tau.clone(),
        });
    }
    let black = g.perm(1).compose(tau).compose(&g.perm(1).inverse());
    for c in 2..=g.rank() {
        if g.perm(c).compose(tau) != black.compose(g.perm(c)) {
            return None;
        }
    }
    Some(Lift {
        white: tau.clone(),
        black,
    })
}

#[derive(Clone, Debug)]
pub struct AutGroup {
    pub generators: Vec<Perm>,
    pub order: u128,
    /// All elements, sorted, when `order ≤ MAX_LISTED_ELEMENTS`.
    pub elements: Option<Vec<Perm>>,
}

/// The white map of the automorphism of a connected graph sending white 0 to
/// `target`, if there is one. Extends along `τ_c^{±1}` walks.
fn extend_from_seed(taus: &[Perm], inverses: &[Perm], p: usize, target: usize) -> Option<Perm> {
    let mut image = vec![usize::MAX; p];
    let mut used = vec![false; p];
    image[0] = target;
    used[target] = true;
    let mut queue = VecDeque::from([0usize]);
    while let Some(w) = queue.pop_front() {
        let iw = image[w];
        for (t, ti) in taus.iter().zip(inverses) {
            for (x, y) in [(t.apply(w), t.apply(iw)), (ti.apply(w), ti.apply(iw))] {
                if image[x] == usize::MAX {
                    if used[y] {
                        return None;
                    }
                    image[x] = y;
                    used[y] = true;
                    queue.push_back(x);
                } else if image[x] != y {
                    return None;
                }
            }
        }
    }
    if image.contains(&usize::MAX) {
        return None;
    }
    Some(Perm::from_images_unchecked(image))
}

/// Automorphisms of a connected graph, one candidate per image of white 0.
fn connected_elements(g: &ColoredGraph) -> Vec<Perm> {
    let p = g.half_order();
    if p == 0 {
        return vec![Perm::identity(0)];
    }
    let taus = g.gauge_tuple();
    let inverses: Vec<Perm> = taus.iter().map(Perm::inverse).collect();
    let mut out: Vec<Perm> = (0..p)
        .filter_map(|t| extend_from_seed(&taus, &inverses, p, t))
        .filter(|tau| lift(g, tau).is_some())
        .collect();
    out.sort();
    out
}

/// A small generating set, chosen greedily from a full element list.
fn greedy_generators(elements: &[Perm]) -> Vec<Perm> {
    let mut gens: Vec<Perm> = Vec::new();
    let mut span: BTreeSet<Perm> = elements.iter().take(1).cloned().collect();
    for e in elements {
        if span.contains(e) {
            continue;
        }
        gens.push(e.clone());
        span = closure(&gens, e.len());
    }
    gens
}

/// The group generated by `gens`, as a sorted set.
fn closure(gens: &[Perm], n: usize) -> BTreeSet<Perm> {
    let id = Perm::identity(n);
    let mut seen = BTreeSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = g.compose(&x);
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    seen
}

/// Embeds a component permutation into the whole graph (identity elsewhere).
fn embed(n: usize, whites: &[usize], local: &Perm) -> Perm {
    let mut images: Vec<usize> = (0..n).collect();
    for (i, &w) in whites.iter().enumerate() {
        images[w] = whites[local.apply(i)];
    }
    Perm::from_images_unchecked(images)
}

pub fn aut_group(g: &ColoredGraph) -> AutGroup {
    let components = g.components();
    if components.len() <= 1 {
        let elements = connected_elements(g);
        return AutGroup {
            generators: greedy_generators(&elements),
            order: elements.len() as u128,
            elements: Some(elements),
        };
    }
    let n = g.half_order();
    let forms: Vec<_> = components
        .iter()
        .map(|c| c.graph.canonical_code())
        .collect();
    let mut generators = Vec::new();
    let mut order = 1u128;
    let mut done = vec![false; components.len()];
    for i in 0..components.len() {
        if done[i] {
            continue;
        }
        let class: Vec<usize> = (i..components.len()).filter(|&j| forms[j] == forms[i]).collect();
        let inner = aut_group(&components[i].graph);
        order *= factorial(class.len()) * inner.order.pow(class.len() as u32);
        for tau in &inner.generators {
            generators.push(embed(n, &components[i].whites, tau));
        }
        // Swap consecutive copies along an isomorphism.
        for pair in class.windows(2) {
            let (a, b) = (&components[pair[0]], &components[pair[1]]);
            let (alpha, _) = find_isomorphism(&a.graph, &b.graph).expect("same canonical code");
            let mut images: Vec<usize> = (0..n).collect();
            for (k, &w) in a.whites.iter().enumerate() {
                let target = b.whites[alpha.apply(k)];
                images[w] = target;
                images[target] = w;
            }
            generators.push(Perm::from_images_unchecked(images));
        }
        for &j in &class {
            done[j] = true;
        }
    }
    let elements = (order <= MAX_LISTED_ELEMENTS).then(|| closure(&generators, n).into_iter().collect());
    AutGroup {
        generators,
        order,
        elements,
    }
}

/// `σ(B) = Π m_i! · |Aut_c(Γ_i)|^{m_i}` over the distinct component types.
pub fn symmetry_factor(b: &DisconnectedGraph) -> u128 {
    b.multiplicities()
        .iter()
        .map(|(g, m)| factorial(*m) * aut_group(g).order.pow(*m as u32))
        .product()
}

/// Symmetry factor of the rank-2 graph made of `n_j` bicolored `2j`-cycles,
/// given as the multiset of cycle lengths `j`.
pub fn matrix_cycle_check(cycle_type: &[usize]) -> u128 {
    let mut g = ColoredGraph::empty(2);
    for &j in cycle_type {
        let cycle = ColoredGraph::new(vec![
            Perm::identity(j),
            crate::perm::cycle_type_representative(&[j]),
        ])
        .expect("valid cycle");
        g = g.disjoint_union(&cycle).expect("rank 2");
    }
    symmetry_factor(&DisconnectedGraph::from_graph(&g))
}
