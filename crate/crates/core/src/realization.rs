//! Feynman graphs of the quartic melonic model with a prescribed boundary.
//!
//! Every boundary vertex is replaced by a gadget of `D − 1` quartic bubbles
//! `V_1..V_{D−1}` chained by propagators. Bubble `j` of a gadget has whites
//! `w_{j,0}, w_{j,1}` and blacks `b_{j,0}, b_{j,1}`; color `j` crosses
//! (`w_{j,0} → b_{j,1}`, `w_{j,1} → b_{j,0}`) and every other color is parallel.
//!
//! White gadget (boundary white `d`): leg at `w_{1,0}`, propagators
//! `w_{j+1,0} → b_{j,0}`, ports `c_j = b_{j,1}` (`j < D`), `c_D = b_{D−1,0}` and
//! `q_j = w_{j,1}`. Black gadget (boundary black `x`): leg at `b_{1,0}`,
//! propagators `w_{j,0} → b_{j+1,0}`, ports `p_j = w_{j,1}`, `p_D = w_{D−1,0}`
//! and `b_j = b_{j,1}`. A color-`i` edge `d → x` of the boundary is realized by
//! the propagators `q_i^d → b_i^x` and `p_i^x → c_i^d` (for `i = D` only the
//! latter). The `(0k)` path leaving the leg of `d̃` reaches `c_k^d`, crosses to
//! `p_k^x` and runs down `x̃` to its leg.

use crate::boundary::boundary;
use crate::error::{Error, Result};
use crate::graph::{ColoredGraph, DisconnectedGraph, OpenFeynmanGraph};
use crate::perm::Perm;
use crate::pi1::{abelianization, gagliardi_presentation, is_crystallization, AbelianInvariants};
use crate::surgery::{pretzel, separating_chain, EdgeRef};

/// Port and leg positions of one gadget, as vertex indices in the output graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Raceme {
    /// `true` for the gadget of a boundary white vertex.
    pub white: bool,
    pub boundary_vertex: usize,
    /// The marked external leg: a white vertex for white gadgets, a black one otherwise.
    pub leg: usize,
    /// Black ports `c_1..c_D` (white gadget) or white ports `p_1..p_D` (black gadget).
    pub path_ports: Vec<usize>,
    /// White ports `q_1..q_{D−1}` (white gadget) or black ports `b_1..b_{D−1}`.
    pub pair_ports: Vec<usize>,
}

fn check_rank(rank: usize) -> Result<()> {
    if rank < 3 {
        return Err(Error::UnsupportedRank {
            rank,
            need: "rank at least 3",
        });
    }
    Ok(())
}

/// The realization together with its gadgets (white gadgets first).
pub fn realize_connected_with_racemes(b: &ColoredGraph) -> Result<(OpenFeynmanGraph, Vec<Raceme>)> {
    let d = b.rank();
    check_rank(d)?;
    if b.is_empty() {
        return Err(Error::EmptyGraph);
    }
    if !b.is_connected() {
        return Err(Error::NotConnected);
    }
    let p = b.half_order();
    let per = 2 * (d - 1);
    let n = 2 * p * per;
    // Vertex indices inside gadget `g`: bubble j (1-based), slot s ∈ {0,1}.
    let idx = |g: usize, j: usize, s: usize| g * per + 2 * (j - 1) + s;
    let mut images = vec![vec![0usize; n]; d];
    for g in 0..2 * p {
        for j in 1..d {
            for c in 1..=d {
                for s in 0..2 {
                    let t = if c == j { 1 - s } else { s };
                    images[c - 1][idx(g, j, s)] = idx(g, j, t);
                }
            }
        }
    }
    let mut prop0 = vec![None; n];
    let mut racemes = Vec::with_capacity(2 * p);
    for v in 0..p {
        // White gadget for boundary white v.
        let g = v;
        for j in 1..d - 1 {
            prop0[idx(g, j + 1, 0)] = Some(idx(g, j, 0));
        }
        let mut path_ports: Vec<usize> = (1..d).map(|j| idx(g, j, 1)).collect();
        path_ports.push(idx(g, d - 1, 0));
        racemes.push(Raceme {
            white: true,
            boundary_vertex: v,
            leg: idx(g, 1, 0),
            path_ports,
            pair_ports: (1..d).map(|j| idx(g, j, 1)).collect(),
        });
    }
    for x in 0..p {
        let g = p + x;
        for j in 1..d - 1 {
            prop0[idx(g, j, 0)] = Some(idx(g, j + 1, 0));
        }
        let mut path_ports: Vec<usize> = (1..d).map(|j| idx(g, j, 1)).collect();
        path_ports.push(idx(g, d - 1, 0));
        racemes.push(Raceme {
            white: false,
            boundary_vertex: x,
            leg: idx(g, 1, 0),
            path_ports,
            pair_ports: (1..d).map(|j| idx(g, j, 1)).collect(),
        });
    }
    for v in 0..p {
        for i in 1..=d {
            let x = b.black_of(i, v);
            let (wd, bx) = (&racemes[v], &racemes[p + x]);
            if i < d {
                prop0[wd.pair_ports[i - 1]] = Some(bx.pair_ports[i - 1]);
            }
            prop0[bx.path_ports[i - 1]] = Some(wd.path_ports[i - 1]);
        }
    }
    let graph = OpenFeynmanGraph::from_parts_unchecked(
        images.into_iter().map(Perm::from_images_unchecked).collect(),
        prop0,
    );
    Ok((graph, racemes))
}

/// A quartic-melonic Feynman graph whose boundary is exactly `b` (same labels).
pub fn realize_connected(b: &ColoredGraph) -> Result<OpenFeynmanGraph> {
    realize_connected_with_racemes(b).map(|(g, _)| g)
}

/// Realizes every component and joins them with pretzels. The boundary of the
/// result is the components' disjoint union in canonical order; the empty
/// boundary is realized by the pretzel itself.
pub fn realize(b: &DisconnectedGraph) -> Result<OpenFeynmanGraph> {
    check_rank(b.rank())?;
    let mut parts = b.components().iter();
    let Some(first) = parts.next() else {
        return pretzel(b.rank());
    };
    let mut acc = realize_connected(first)?;
    for comp in parts {
        let next = realize_connected(comp)?;
        let e = first_propagator(&acc);
        let l = first_propagator(&next);
        acc = separating_chain(&acc, e, &next, l)?;
    }
    Ok(acc)
}

fn first_propagator(g: &OpenFeynmanGraph) -> EdgeRef {
    let w = (0..g.half_order())
        .find(|&w| g.prop0(w).is_some())
        .expect("realizations always carry propagators");
    EdgeRef::new(0, w)
}

#[derive(Clone, Debug)]
pub struct PipelineReport {
    pub graph: OpenFeynmanGraph,
    pub legs: usize,
    pub boundary_components: usize,
    /// Per boundary component (canonical order): abelianized π1 when the
    /// component is a crystallization with at least 4 colors.
    pub abelianizations: Vec<Option<AbelianInvariants>>,
    pub half_order: usize,
    pub internal_propagators: usize,
    pub connected: bool,
    pub boundary_matches: bool,
}

pub fn crystallization_pipeline(b: &DisconnectedGraph) -> Result<PipelineReport> {
    let graph = realize(b)?;
    let bd = boundary(&graph).graph;
    let abelianizations = b
        .components()
        .iter()
        .map(|c| {
            if c.rank() >= 4 && is_crystallization(c) {
                gagliardi_presentation(c, 1, 2)
                    .ok()
                    .map(|r| abelianization(&r.presentation))
            } else {
                None
            }
        })
        .collect();
    Ok(PipelineReport {
        legs: graph.external_leg_count(),
        boundary_components: bd.component_count(),
        abelianizations,
        half_order: graph.half_order(),
        internal_propagators: graph.internal_propagator_count(),
        connected: graph.is_connected(),
        boundary_matches: bd.canonical_code() == b.canonical_code(),
        graph,
    })
}
