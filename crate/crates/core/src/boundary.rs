//! Boundary graphs, amputation and coning.

use crate::graph::{ColoredGraph, DisconnectedGraph, OpenFeynmanGraph};

#[derive(Clone, Debug)]
pub struct BoundaryResult {
    pub graph: ColoredGraph,
    /// Boundary white `i` sits at the unmatched internal white `white_sites[i]`.
    pub white_sites: Vec<usize>,
    pub black_sites: Vec<usize>,
}

/// The boundary graph: one vertex per external leg, a color-`k` edge for every
/// `(0k)`-bicolored path between legs.
pub fn boundary(g: &OpenFeynmanGraph) -> BoundaryResult {
    let white_sites = g.unmatched_whites();
    let black_sites = g.unmatched_blacks();
    debug_assert_eq!(white_sites.len(), black_sites.len());
    let mut black_pos = vec![usize::MAX; g.half_order()];
    for (i, &b) in black_sites.iter().enumerate() {
        black_pos[b] = i;
    }
    let images = (1..=g.rank())
        .map(|k| {
            white_sites
                .iter()
                .map(|&w| {
                    let mut cur = w;
                    loop {
                        let b = g.black_of(k, cur);
                        match g.prop0_inverse(b) {
                            None => break black_pos[b],
                            Some(next) => cur = next,
                        }
                    }
                })
                .collect()
        })
        .collect();
    let graph = ColoredGraph::from_images(images).unwrap_or_else(|_| ColoredGraph::empty(g.rank()));
    BoundaryResult {
        graph,
        white_sites,
        black_sites,
    }
}

/// Adds an external leg to every vertex.
pub fn cone(b: &ColoredGraph) -> OpenFeynmanGraph {
    OpenFeynmanGraph::from_parts_unchecked(b.perms().to_vec(), vec![None; b.half_order()])
}

pub fn cone_disconnected(b: &DisconnectedGraph) -> OpenFeynmanGraph {
    cone(&b.union())
}

/// The amputated graph `inn(𝒢)`: the internal structure with its legs dropped.
#[derive(Clone, Debug)]
pub struct Amputated {
    pub graph: OpenFeynmanGraph,
    /// Number of legs removed.
    pub dropped_legs: usize,
}

impl Amputated {
    pub fn leg_count(&self) -> usize {
        0
    }
}

pub fn amputate(g: &OpenFeynmanGraph) -> Amputated {
    Amputated {
        graph: g.clone(),
        dropped_legs: g.external_leg_count(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{dipole, k33, quartic_vertex};

    #[test]
    fn cone_of_k33() {
        let c = cone(&k33());
        assert_eq!(c.external_leg_count(), 6);
        assert_eq!(boundary(&c).graph, k33());
    }

    #[test]
    fn closed_graph_has_empty_boundary() {
        let v = quartic_vertex(3, 1);
        let two = v.disjoint_union(&v).unwrap();
        let g = OpenFeynmanGraph::from_parts_unchecked(
            two.perms().to_vec(),
            vec![Some(2), Some(3), Some(0), Some(1)],
        );
        let b = boundary(&g);
        assert!(b.graph.is_empty());
        assert_eq!(b.graph.rank(), 3);
    }

    #[test]
    fn two_v1_joined_on_one_side() {
        // V_1 ⊔ V_1 with propagators white 1 → black 2 and white 2 → black 1:
        // four legs remain, and the color-1 paths cross once.
        let v = quartic_vertex(3, 1);
        let two = v.disjoint_union(&v).unwrap();
        let g = OpenFeynmanGraph::from_parts_unchecked(
            two.perms().to_vec(),
            vec![None, Some(2), Some(1), None],
        );
        let b = boundary(&g);
        assert_eq!(b.white_sites, vec![0, 3]);
        assert_eq!(b.black_sites, vec![0, 3]);
        assert_eq!(b.graph, quartic_vertex(3, 1));

        // Closing one more pair leaves a single leg pair and a dipole.
        let g = OpenFeynmanGraph::from_parts_unchecked(
            two.perms().to_vec(),
            vec![None, Some(2), Some(1), Some(0)],
        );
        assert_eq!(boundary(&g).graph, dipole(3));
    }

    #[test]
    fn amputation_keeps_structure() {
        let c = cone(&quartic_vertex(3, 1));
        let a = amputate(&c);
        assert_eq!(a.graph, c);
        assert_eq!(a.dropped_legs, 4);
        assert_eq!(a.leg_count(), 0);
        assert!(cone(&ColoredGraph::empty(3)).half_order() == 0);
    }
}
