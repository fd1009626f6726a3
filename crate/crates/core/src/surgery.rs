//! Connected sum, dipole removal, the pretzel and separatrix gadgets, and
//! degree bumping.

use crate::error::{Error, Result};
use crate::graph::{quartic_vertex, ColoredGraph, OpenFeynmanGraph};
use crate::perm::Perm;

/// An edge given by its color and white endpoint. Color 0 refers to the
/// internal propagator of an open graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeRef {
    pub color: usize,
    pub white: usize,
}

impl EdgeRef {
    pub fn new(color: usize, white: usize) -> Self {
        EdgeRef { color, white }
    }
}

fn check_closed_edge(g: &ColoredGraph, e: EdgeRef) -> Result<()> {
    if e.color == 0 || e.color > g.rank() || e.white >= g.half_order() {
        return Err(Error::DanglingEdge {
            color: e.color,
            white: e.white,
        });
    }
    Ok(())
}

fn check_open_edge(g: &OpenFeynmanGraph, e: EdgeRef) -> Result<()> {
    let exists = e.white < g.half_order()
        && e.color <= g.rank()
        && (e.color > 0 || g.prop0(e.white).is_some());
    if !exists {
        return Err(Error::DanglingEdge {
            color: e.color,
            white: e.white,
        });
    }
    Ok(())
}

/// `p` with the images of `i` and `j` exchanged.
fn swap_images(p: &Perm, i: usize, j: usize) -> Perm {
    let mut im = p.images().to_vec();
    im.swap(i, j);
    Perm::from_images_unchecked(im)
}

/// `g1 #_{e1,e2} g2`: disjoint union (with `g2` shifted), then the two edges are
/// cut and cross-reconnected: `w1 → t(e2)` and `w2 → t(e1)`.
pub fn connected_sum(
    g1: &ColoredGraph,
    e1: EdgeRef,
    g2: &ColoredGraph,
    e2: EdgeRef,
) -> Result<ColoredGraph> {
    check_closed_edge(g1, e1)?;
    check_closed_edge(g2, e2)?;
    if e1.color != e2.color {
        return Err(Error::ColorMismatch(e1.color, e2.color));
    }
    let off = g1.half_order();
    let union = g1.disjoint_union(g2)?;
    let c = e1.color;
    let (w1, w2) = (e1.white, e2.white + off);
    let mut perms = union.perms().to_vec();
    perms[c - 1] = swap_images(&perms[c - 1], w1, w2);
    Ok(ColoredGraph::from_perms_unchecked(perms, union.half_order()))
}

/// Connected sum of open graphs; color 0 cuts internal propagators.
pub fn connected_sum_open(
    g1: &OpenFeynmanGraph,
    e1: EdgeRef,
    g2: &OpenFeynmanGraph,
    e2: EdgeRef,
) -> Result<OpenFeynmanGraph> {
    check_open_edge(g1, e1)?;
    check_open_edge(g2, e2)?;
    if e1.color != e2.color {
        return Err(Error::ColorMismatch(e1.color, e2.color));
    }
    let off = g1.half_order();
    let mut out = g1.disjoint_union(g2)?;
    let (w1, w2) = (e1.white, e2.white + off);
    if e1.color == 0 {
        let b1 = out.prop0(w1).unwrap();
        let b2 = out.prop0(w2).unwrap();
        out.set_prop0(w1, None);
        out.set_prop0(w2, None);
        out.set_prop0(w1, Some(b2));
        out.set_prop0(w2, Some(b1));
    } else {
        let perms = out.perms_mut();
        perms[e1.color - 1] = swap_images(&perms[e1.color - 1], w1, w2);
    }
    Ok(out)
}

/// One merged edge of a dipole removal: the color-`color` edge that entered the
/// removed black vertex from `from_white` now ends where the removed white's
/// edge did, at `to_black` (indices in the original graph).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Gluing {
    pub color: usize,
    pub from_white: usize,
    pub to_black: usize,
}

#[derive(Clone, Debug)]
pub struct Removal {
    pub graph: ColoredGraph,
    /// Colors of the edges joining the two removed vertices, ascending.
    pub parallel_colors: Vec<usize>,
    pub gluings: Vec<Gluing>,
    pub removed_white: usize,
    pub removed_black: usize,
    /// Old white index → new index (`None` for the removed vertex).
    pub white_map: Vec<Option<usize>>,
    pub black_map: Vec<Option<usize>>,
}

/// `b ⊖ e`: deletes both endpoints of `e` and every edge between them, then
/// glues the loose ends colorwise.
pub fn remove_dipole(b: &ColoredGraph, e: EdgeRef) -> Result<Removal> {
    check_closed_edge(b, e)?;
    let p = b.half_order();
    let w = e.white;
    let t = b.black_of(e.color, w);
    let mut parallel_colors = Vec::new();
    let mut gluings = Vec::new();
    let mut images: Vec<Vec<usize>> = b.perms().iter().map(|p| p.images().to_vec()).collect();
    for c in 1..=b.rank() {
        if b.black_of(c, w) == t {
            parallel_colors.push(c);
        } else {
            let from = b.white_of(c, t);
            let to = b.black_of(c, w);
            images[c - 1][from] = to;
            gluings.push(Gluing {
                color: c,
                from_white: from,
                to_black: to,
            });
        }
    }
    let shift = |x: usize, gone: usize| if x > gone { x - 1 } else { x };
    let images: Vec<Vec<usize>> = images
        .into_iter()
        .map(|im| {
            im.iter()
                .enumerate()
                .filter(|&(i, _)| i != w)
                .map(|(_, &x)| shift(x, t))
                .collect()
        })
        .collect();
    let graph = ColoredGraph::from_perms_unchecked(
        images.into_iter().map(Perm::from_images_unchecked).collect(),
        p - 1,
    );
    Ok(Removal {
        graph,
        parallel_colors,
        gluings,
        removed_white: w,
        removed_black: t,
        white_map: (0..p).map(|i| (i != w).then(|| shift(i, w))).collect(),
        black_map: (0..p).map(|i| (i != t).then(|| shift(i, t))).collect(),
    })
}

fn require_rank3(rank: usize) -> Result<()> {
    if rank < 3 {
        return Err(Error::UnsupportedRank {
            rank,
            need: "rank at least 3",
        });
    }
    Ok(())
}

/// White vertices of the pretzel whose propagators are cut when chaining.
pub const PRETZEL_PORTS: [usize; 2] = [0, 3];

/// The vacuum graph `𝒫`: a `V_1` bubble on whites/blacks `{0,1}` and a `V_D`
/// bubble on `{2,3}`, with propagators `0→0`, `1→2`, `2→1`, `3→3`. The
/// propagators at whites 0 and 3 lie on no common bicolored cycle.
pub fn pretzel(rank: usize) -> Result<OpenFeynmanGraph> {
    require_rank3(rank)?;
    let a = quartic_vertex(rank, 1);
    let b = quartic_vertex(rank, rank);
    let residue = a.disjoint_union(&b)?;
    Ok(OpenFeynmanGraph::from_parts_unchecked(
        residue.perms().to_vec(),
        vec![Some(0), Some(2), Some(1), Some(3)],
    ))
}

/// The four-leg separatrix `𝒮`: the pretzel with its two port propagators removed.
pub fn separatrix(rank: usize) -> Result<OpenFeynmanGraph> {
    let mut s = pretzel(rank)?;
    for w in PRETZEL_PORTS {
        s.set_prop0(w, None);
    }
    Ok(s)
}

fn first_propagator(g: &OpenFeynmanGraph) -> Result<EdgeRef> {
    (0..g.half_order())
        .find(|&w| g.prop0(w).is_some())
        .map(|w| EdgeRef::new(0, w))
        .ok_or(Error::NoInternalPropagator)
}

/// `k #_e 𝒫 #_l g`, with `e` and `l` color-0 edges of `k` and `g`.
/// The boundary of the result is `∂k ⊔ ∂g`.
pub fn separating_chain(
    k: &OpenFeynmanGraph,
    e: EdgeRef,
    g: &OpenFeynmanGraph,
    l: EdgeRef,
) -> Result<OpenFeynmanGraph> {
    if k.rank() != g.rank() {
        return Err(Error::RankMismatch {
            expected: k.rank(),
            found: g.rank(),
        });
    }
    if e.color != 0 || l.color != 0 {
        return Err(Error::ColorMismatch(e.color, l.color));
    }
    let p = pretzel(k.rank())?;
    let kp = connected_sum_open(k, e, &p, EdgeRef::new(0, PRETZEL_PORTS[0]))?;
    let port = EdgeRef::new(0, k.half_order() + PRETZEL_PORTS[1]);
    connected_sum_open(&kp, port, g, l)
}

/// `g # 𝒫 # vacuum` along the first internal propagator of each.
pub fn degree_bump(g: &OpenFeynmanGraph, vacuum: &OpenFeynmanGraph) -> Result<OpenFeynmanGraph> {
    if !vacuum.is_closed() {
        return Err(Error::NotVacuum);
    }
    let e = first_propagator(g)?;
    let l = first_propagator(vacuum)?;
    separating_chain(g, e, vacuum, l)
}
