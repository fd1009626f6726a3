//! Canonical labeling of colored graphs.
//!
//! Connected graphs are gauge-fixed so that color 1 is the identity; the
//! remaining data is the tuple `τ_c = σ_1⁻¹σ_c` acting on white vertices, and
//! isomorphism becomes simultaneous conjugation. Candidate labelings come from
//! a breadth-first traversal seeded at each white vertex, so there are at most
//! `p` of them; the lexicographically smallest conjugated tuple wins.

use std::fmt;

use crate::graph::ColoredGraph;
use crate::perm::Perm;

/// Big-endian `u32` words: rank, half-order, then the images of `σ_2..σ_D`
/// of the canonical representative (whose `σ_1` is the identity).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalCode(Vec<u8>);

impl CanonicalCode {
    fn from_graph(g: &ColoredGraph) -> Self {
        let mut bytes = Vec::with_capacity(4 * (2 + g.half_order() * g.rank()));
        bytes.extend_from_slice(&(g.rank() as u32).to_be_bytes());
        bytes.extend_from_slice(&(g.half_order() as u32).to_be_bytes());
        for p in &g.perms()[1..] {
            for &x in p.images() {
                bytes.extend_from_slice(&(x as u32).to_be_bytes());
            }
        }
        CanonicalCode(bytes)
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn to_hex(&self) -> String {
        self.0.iter().map(|b| format!("{b:02x}")).collect()
    }
}

impl fmt::Debug for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalCode({})", self.to_hex())
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_hex())
    }
}

#[derive(Clone, Debug)]
pub struct CanonicalForm {
    pub code: CanonicalCode,
    /// The canonical representative, `graph = g.relabel(white_map, black_map)`.
    pub graph: ColoredGraph,
    /// Old white index → canonical white index.
    pub white_map: Perm,
    pub black_map: Perm,
}

/// BFS labeling of the whites reachable from `seed` under `τ_c^{±1}`.
/// `label` maps old → new, `order` collects old indices in visiting order.
fn traverse(
    taus: &[Perm],
    inverses: &[Perm],
    seed: usize,
    label: &mut [usize],
    order: &mut Vec<usize>,
) {
    let start = order.len();
    label[seed] = start;
    order.push(seed);
    let mut head = start;
    while head < order.len() {
        let w = order[head];
        head += 1;
        for (t, ti) in taus.iter().zip(inverses) {
            for x in [t.apply(w), ti.apply(w)] {
                if label[x] == usize::MAX {
                    label[x] = order.len();
                    order.push(x);
                }
            }
        }
    }
}

/// Canonical form of a connected graph: returns the white labeling (old → new).
fn connected_white_labeling(g: &ColoredGraph) -> Perm {
    let p = g.half_order();
    let taus = g.gauge_tuple();
    let inverses: Vec<Perm> = taus.iter().map(Perm::inverse).collect();
    let mut best: Option<(Vec<usize>, Vec<usize>)> = None;
    let mut label = vec![usize::MAX; p];
    let mut order = Vec::with_capacity(p);
    let mut candidate = Vec::with_capacity(p * taus.len());
    for seed in 0..p {
        label.iter_mut().for_each(|l| *l = usize::MAX);
        order.clear();
        traverse(&taus, &inverses, seed, &mut label, &mut order);
        debug_assert_eq!(order.len(), p, "graph must be connected");
        candidate.clear();
        // Conjugated tuple in new labels: τ'(new) = label[τ(order[new])].
        for t in &taus {
            candidate.extend(order.iter().map(|&w| label[t.apply(w)]));
        }
        let better = match &best {
            None => true,
            Some((b, _)) => candidate < *b,
        };
        if better {
            best = Some((candidate.clone(), label.clone()));
        }
    }
    match best {
        Some((_, label)) => Perm::from_images_unchecked(label),
        None => Perm::identity(0),
    }
}

/// Canonical form of any graph. Disconnected graphs have their components
/// canonicalized, sorted by code, and laid out consecutively.
pub fn canonical_form(g: &ColoredGraph) -> CanonicalForm {
    let p = g.half_order();
    let components = g.components();
    let (white_map, black_map) = if components.len() <= 1 {
        let alpha = connected_white_labeling(g);
        // σ'_1 = id forces β = α ∘ σ_1⁻¹.
        let beta = if p == 0 {
            Perm::identity(0)
        } else {
            alpha.compose(&g.perm(1).inverse())
        };
        (alpha, beta)
    } else {
        let mut parts: Vec<(CanonicalCode, &[usize], &[usize], Perm, Perm)> = components
            .iter()
            .map(|c| {
                let form = canonical_form(&c.graph);
                (
                    form.code,
                    c.whites.as_slice(),
                    c.blacks.as_slice(),
                    form.white_map,
                    form.black_map,
                )
            })
            .collect();
        parts.sort_by(|a, b| a.0.cmp(&b.0));
        let mut alpha = vec![0; p];
        let mut beta = vec![0; p];
        let mut offset = 0;
        for (_, whites, blacks, wm, bm) in &parts {
            for (local, &old) in whites.iter().enumerate() {
                alpha[old] = offset + wm.apply(local);
            }
            for (local, &old) in blacks.iter().enumerate() {
                beta[old] = offset + bm.apply(local);
            }
            offset += whites.len();
        }
        (
            Perm::from_images_unchecked(alpha),
            Perm::from_images_unchecked(beta),
        )
    };
    let graph = g.relabel(&white_map, &black_map);
    CanonicalForm {
        code: CanonicalCode::from_graph(&graph),
        graph,
        white_map,
        black_map,
    }
}

/// An isomorphism `g → h` as (white map, black map), if one exists.
pub fn find_isomorphism(g: &ColoredGraph, h: &ColoredGraph) -> Option<(Perm, Perm)> {
    if g.rank() != h.rank() || g.half_order() != h.half_order() {
        return None;
    }
    let fg = canonical_form(g);
    let fh = canonical_form(h);
    if fg.code != fh.code {
        return None;
    }
    let alpha = fh.white_map.inverse().compose(&fg.white_map);
    let beta = fh.black_map.inverse().compose(&fg.black_map);
    Some((alpha, beta))
}
