//! Closed and open colored graphs in permutation-tuple form.
//!
//! A closed `D`-colored graph with `p` white and `p` black vertices is a tuple
//! of `D` permutations on `{0..p-1}`: the color-`c` edge at white vertex `i`
//! ends at black vertex `σ_c(i)`. Regularity and bipartiteness are therefore
//! structural. Open graphs add a partial injective color-0 matching from white
//! to black vertices; vertices left unmatched carry the external legs.

use std::collections::VecDeque;
use std::fmt;

use crate::canon::{self, CanonicalCode};
use crate::error::{Error, Result};
use crate::perm::{is_bijection, Perm};

pub const MIN_RANK: usize = 2;
pub const MAX_RANK: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Vertex {
    White(usize),
    Black(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    RankOutOfRange { rank: usize },
    WrongColorCount { expected: usize, found: usize },
    WrongLength { color: usize, expected: usize, found: usize },
    NotPermutation { color: usize },
    Prop0OutOfRange { white: usize, black: usize },
    Prop0WhiteRepeated { white: usize },
    Prop0NotInjective { black: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::RankOutOfRange { rank } => {
                write!(f, "rank {rank} out of range {MIN_RANK}..={MAX_RANK}")
            }
            Violation::WrongColorCount { expected, found } => {
                write!(f, "expected {expected} color maps, found {found}")
            }
            Violation::WrongLength {
                color,
                expected,
                found,
            } => write!(f, "color {color} has {found} entries, expected {expected}"),
            Violation::NotPermutation { color } => write!(f, "color {color} not a permutation"),
            Violation::Prop0OutOfRange { white, black } => {
                write!(f, "color-0 pair ({white}, {black}) out of range")
            }
            Violation::Prop0WhiteRepeated { white } => {
                write!(f, "white vertex {white} carries two color-0 edges")
            }
            Violation::Prop0NotInjective { black } => {
                write!(f, "prop0 not injective: black vertex {black} matched twice")
            }
        }
    }
}

/// Outcome of a validity check: empty means valid.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidityReport {
    pub violations: Vec<Violation>,
    /// Number of external legs (2 × unmatched white vertices) for open graphs.
    pub external_legs: usize,
}

impl ValidityReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    fn into_result(self) -> Result<()> {
        if self.is_valid() {
            Ok(())
        } else {
            Err(Error::Invalid(self))
        }
    }
}

impl fmt::Display for ValidityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return write!(f, "valid");
        }
        for (k, v) in self.violations.iter().enumerate() {
            if k > 0 {
                write!(f, "; ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

fn check_color_maps(rank: usize, half_order: usize, images: &[Vec<usize>]) -> ValidityReport {
    let mut report = ValidityReport::default();
    if !(MIN_RANK..=MAX_RANK).contains(&rank) {
        report.violations.push(Violation::RankOutOfRange { rank });
    }
    if images.len() != rank {
        report.violations.push(Violation::WrongColorCount {
            expected: rank,
            found: images.len(),
        });
    }
    for (k, im) in images.iter().enumerate() {
        let color = k + 1;
        if im.len() != half_order {
            report.violations.push(Violation::WrongLength {
                color,
                expected: half_order,
                found: im.len(),
            });
        } else if !is_bijection(im) {
            report.violations.push(Violation::NotPermutation { color });
        }
    }
    report
}

/// A closed, regularly edge-colored bipartite graph with colors `1..=rank`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ColoredGraph {
    perms: Vec<Perm>,
    half_order: usize,
}

/// A connected piece of a larger graph, with index maps back into the parent.
#[derive(Clone, Debug)]
pub struct Component {
    pub graph: ColoredGraph,
    /// `whites[i]` is the parent index of the component's white vertex `i`.
    pub whites: Vec<usize>,
    pub blacks: Vec<usize>,
}

impl ColoredGraph {
    /// Checks raw image arrays (colors `1..=rank`, 0-based images) against the graph invariants.
    pub fn check(rank: usize, half_order: usize, images: &[Vec<usize>]) -> ValidityReport {
        check_color_maps(rank, half_order, images)
    }

    pub fn new(perms: Vec<Perm>) -> Result<Self> {
        let half_order = perms.first().map_or(0, Perm::len);
        let images: Vec<Vec<usize>> = perms.iter().map(|p| p.images().to_vec()).collect();
        check_color_maps(perms.len(), half_order, &images).into_result()?;
        Ok(ColoredGraph { perms, half_order })
    }

    pub fn from_images(images: Vec<Vec<usize>>) -> Result<Self> {
        let half_order = images.first().map_or(0, Vec::len);
        check_color_maps(images.len(), half_order, &images).into_result()?;
        Ok(ColoredGraph {
            perms: images.into_iter().map(Perm::from_images_unchecked).collect(),
            half_order,
        })
    }

    /// The empty graph of the given rank.
    pub fn empty(rank: usize) -> Self {
        assert!((MIN_RANK..=MAX_RANK).contains(&rank));
        ColoredGraph {
            perms: vec![Perm::identity(0); rank],
            half_order: 0,
        }
    }

    pub(crate) fn from_perms_unchecked(perms: Vec<Perm>, half_order: usize) -> Self {
        debug_assert!(perms.iter().all(|p| p.len() == half_order));
        ColoredGraph { perms, half_order }
    }

    #[inline]
    pub fn rank(&self) -> usize {
        self.perms.len()
    }

    #[inline]
    pub fn half_order(&self) -> usize {
        self.half_order
    }

    pub fn vertex_count(&self) -> usize {
        2 * self.half_order
    }

    pub fn is_empty(&self) -> bool {
        self.half_order == 0
    }

    /// The color map for `color` in `1..=rank`.
    #[inline]
    pub fn perm(&self, color: usize) -> &Perm {
        &self.perms[color - 1]
    }

    pub fn perms(&self) -> &[Perm] {
        &self.perms
    }

    #[inline]
    pub fn black_of(&self, color: usize, white: usize) -> usize {
        self.perms[color - 1].apply(white)
    }

    pub fn white_of(&self, color: usize, black: usize) -> usize {
        self.perms[color - 1].inverse().apply(black)
    }

    /// `σ_1⁻¹ ∘ σ_c` for `c = 2..=rank`: the gauge-invariant part of the tuple,
    /// acting on white vertices.
    pub fn gauge_tuple(&self) -> Vec<Perm> {
        let inv1 = self.perms[0].inverse();
        self.perms[1..].iter().map(|p| inv1.compose(p)).collect()
    }

    /// Relabels white vertices by `alpha` and black vertices by `beta` (old → new):
    /// `σ'_c = β ∘ σ_c ∘ α⁻¹`.
    pub fn relabel(&self, alpha: &Perm, beta: &Perm) -> ColoredGraph {
        let ainv = alpha.inverse();
        let perms = self
            .perms
            .iter()
            .map(|p| beta.compose(p).compose(&ainv))
            .collect();
        ColoredGraph::from_perms_unchecked(perms, self.half_order)
    }

    /// Disjoint union; the second graph's vertices are shifted by `self.half_order()`.
    pub fn disjoint_union(&self, other: &ColoredGraph) -> Result<ColoredGraph> {
        if self.rank() != other.rank() {
            return Err(Error::RankMismatch {
                expected: self.rank(),
                found: other.rank(),
            });
        }
        let off = self.half_order;
        let perms = self
            .perms
            .iter()
            .zip(&other.perms)
            .map(|(a, b)| {
                let mut im = a.images().to_vec();
                im.extend(b.images().iter().map(|&x| x + off));
                Perm::from_images_unchecked(im)
            })
            .collect();
        Ok(ColoredGraph::from_perms_unchecked(
            perms,
            self.half_order + other.half_order,
        ))
    }

    /// Connected components over all colors.
    pub fn components(&self) -> Vec<Component> {
        let colors: Vec<usize> = (1..=self.rank()).collect();
        self.bubbles(&colors)
    }

    pub fn component_count(&self) -> usize {
        self.components().len()
    }

    pub fn is_connected(&self) -> bool {
        self.half_order > 0 && self.component_count() == 1
    }

    /// Connected components of the subgraph spanned by `colors` (the `|colors|`-bubbles).
    /// Each returned component graph carries only the chosen colors, in the given order.
    pub fn bubbles(&self, colors: &[usize]) -> Vec<Component> {
        assert!(!colors.is_empty(), "bubbles need at least one color");
        let p = self.half_order;
        let inverses: Vec<Perm> = colors.iter().map(|&c| self.perm(c).inverse()).collect();
        let mut white_comp = vec![usize::MAX; p];
        let mut black_comp = vec![usize::MAX; p];
        let mut count = 0;
        for start in 0..p {
            if white_comp[start] != usize::MAX {
                continue;
            }
            let mut queue = VecDeque::from([Vertex::White(start)]);
            white_comp[start] = count;
            while let Some(v) = queue.pop_front() {
                match v {
                    Vertex::White(w) => {
                        for &c in colors {
                            let b = self.black_of(c, w);
                            if black_comp[b] == usize::MAX {
                                black_comp[b] = count;
                                queue.push_back(Vertex::Black(b));
                            }
                        }
                    }
                    Vertex::Black(b) => {
                        for inv in &inverses {
                            let w = inv.apply(b);
                            if white_comp[w] == usize::MAX {
                                white_comp[w] = count;
                                queue.push_back(Vertex::White(w));
                            }
                        }
                    }
                }
            }
            count += 1;
        }
        (0..count)
            .map(|k| {
                let whites: Vec<usize> = (0..p).filter(|&w| white_comp[w] == k).collect();
                let blacks: Vec<usize> = (0..p).filter(|&b| black_comp[b] == k).collect();
                let mut black_pos = vec![usize::MAX; p];
                for (i, &b) in blacks.iter().enumerate() {
                    black_pos[b] = i;
                }
                let perms = colors
                    .iter()
                    .map(|&c| {
                        Perm::from_images_unchecked(
                            whites.iter().map(|&w| black_pos[self.black_of(c, w)]).collect(),
                        )
                    })
                    .collect();
                Component {
                    graph: ColoredGraph::from_perms_unchecked(perms, whites.len()),
                    whites,
                    blacks,
                }
            })
            .collect()
    }

    /// The same graph with colors reordered: color `k` of the result is color `order[k-1]` here.
    pub fn recolor(&self, order: &[usize]) -> Result<ColoredGraph> {
        let mut sorted = order.to_vec();
        sorted.sort_unstable();
        if sorted != (1..=self.rank()).collect::<Vec<_>>() {
            return Err(Error::Document(format!(
                "color order {order:?} is not a permutation of 1..={}",
                self.rank()
            )));
        }
        Ok(ColoredGraph::from_perms_unchecked(
            order.iter().map(|&c| self.perm(c).clone()).collect(),
            self.half_order,
        ))
    }

    pub fn canonical_code(&self) -> CanonicalCode {
        canon::canonical_form(self).code
    }

    pub fn is_isomorphic(&self, other: &ColoredGraph) -> bool {
        self.rank() == other.rank()
            && self.half_order == other.half_order
            && self.canonical_code() == other.canonical_code()
    }
}

impl fmt::Debug for ColoredGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ColoredGraph(D={}, p={}", self.rank(), self.half_order)?;
        for (k, p) in self.perms.iter().enumerate() {
            write!(f, ", σ{}={:?}", k + 1, p)?;
        }
        write!(f, ")")
    }
}

/// An open graph: colors `1..=rank` are full permutations, color 0 a partial
/// injective matching white → black. Unmatched vertices carry external legs.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct OpenFeynmanGraph {
    perms: Vec<Perm>,
    half_order: usize,
    prop0: Vec<Option<usize>>,
    prop0_inv: Vec<Option<usize>>,
}

impl OpenFeynmanGraph {
    /// Checks raw data; `prop0` is a list of `[white, black]` pairs.
    pub fn check(
        rank: usize,
        half_order: usize,
        images: &[Vec<usize>],
        prop0: &[[usize; 2]],
    ) -> ValidityReport {
        let mut report = check_color_maps(rank, half_order, images);
        let mut white_used = vec![false; half_order];
        let mut black_used = vec![false; half_order];
        let mut matched = 0;
        for &[w, b] in prop0 {
            if w >= half_order || b >= half_order {
                report
                    .violations
                    .push(Violation::Prop0OutOfRange { white: w, black: b });
                continue;
            }
            if white_used[w] {
                report
                    .violations
                    .push(Violation::Prop0WhiteRepeated { white: w });
                continue;
            }
            if black_used[b] {
                report.violations.push(Violation::Prop0NotInjective { black: b });
                continue;
            }
            white_used[w] = true;
            black_used[b] = true;
            matched += 1;
        }
        report.external_legs = 2 * (half_order - matched.min(half_order));
        report
    }

    pub fn new(perms: Vec<Perm>, prop0: Vec<Option<usize>>) -> Result<Self> {
        let half_order = perms.first().map_or(prop0.len(), Perm::len);
        let images: Vec<Vec<usize>> = perms.iter().map(|p| p.images().to_vec()).collect();
        let pairs: Vec<[usize; 2]> = prop0
            .iter()
            .enumerate()
            .filter_map(|(w, b)| b.map(|b| [w, b]))
            .collect();
        let mut report = Self::check(perms.len(), half_order, &images, &pairs);
        if prop0.len() != half_order {
            report.violations.push(Violation::WrongLength {
                color: 0,
                expected: half_order,
                found: prop0.len(),
            });
        }
        report.into_result()?;
        Ok(Self::from_parts_unchecked(perms, prop0))
    }

    pub fn from_pairs(images: Vec<Vec<usize>>, prop0: &[[usize; 2]]) -> Result<Self> {
        let half_order = images.first().map_or(0, Vec::len);
        Self::check(images.len(), half_order, &images, prop0).into_result()?;
        let mut map = vec![None; half_order];
        for &[w, b] in prop0 {
            map[w] = Some(b);
        }
        Ok(Self::from_parts_unchecked(
            images.into_iter().map(Perm::from_images_unchecked).collect(),
            map,
        ))
    }

    pub(crate) fn from_parts_unchecked(perms: Vec<Perm>, prop0: Vec<Option<usize>>) -> Self {
        let half_order = prop0.len();
        let mut prop0_inv = vec![None; half_order];
        for (w, b) in prop0.iter().enumerate() {
            if let Some(b) = *b {
                debug_assert!(prop0_inv[b].is_none());
                prop0_inv[b] = Some(w);
            }
        }
        OpenFeynmanGraph {
            perms,
            half_order,
            prop0,
            prop0_inv,
        }
    }

    /// The empty open graph of rank `rank`.
    pub fn empty(rank: usize) -> Self {
        Self::from_parts_unchecked(vec![Perm::identity(0); rank], Vec::new())
    }

    /// A closed `(D+1)`-colored graph viewed as a vacuum graph: its color 1 becomes color 0.
    pub fn from_closed(g: &ColoredGraph) -> Result<Self> {
        if g.rank() < 3 {
            return Err(Error::UnsupportedRank {
                rank: g.rank(),
                need: "at least 3 colors (color 0 plus rank ≥ 2)",
            });
        }
        let prop0 = g.perm(1).images().iter().map(|&b| Some(b)).collect();
        Ok(Self::from_parts_unchecked(g.perms()[1..].to_vec(), prop0))
    }

    #[inline]
    pub fn rank(&self) -> usize {
        self.perms.len()
    }

    #[inline]
    pub fn half_order(&self) -> usize {
        self.half_order
    }

    #[inline]
    pub fn perm(&self, color: usize) -> &Perm {
        &self.perms[color - 1]
    }

    pub fn perms(&self) -> &[Perm] {
        &self.perms
    }

    #[inline]
    pub fn black_of(&self, color: usize, white: usize) -> usize {
        self.perms[color - 1].apply(white)
    }

    #[inline]
    pub fn prop0(&self, white: usize) -> Option<usize> {
        self.prop0[white]
    }

    #[inline]
    pub fn prop0_inverse(&self, black: usize) -> Option<usize> {
        self.prop0_inv[black]
    }

    pub fn prop0_map(&self) -> &[Option<usize>] {
        &self.prop0
    }

    pub fn prop0_pairs(&self) -> Vec<[usize; 2]> {
        self.prop0
            .iter()
            .enumerate()
            .filter_map(|(w, b)| b.map(|b| [w, b]))
            .collect()
    }

    pub fn internal_propagator_count(&self) -> usize {
        self.prop0.iter().filter(|b| b.is_some()).count()
    }

    pub fn unmatched_whites(&self) -> Vec<usize> {
        (0..self.half_order)
            .filter(|&w| self.prop0[w].is_none())
            .collect()
    }

    pub fn unmatched_blacks(&self) -> Vec<usize> {
        (0..self.half_order)
            .filter(|&b| self.prop0_inv[b].is_none())
            .collect()
    }

    pub fn external_leg_count(&self) -> usize {
        2 * (self.half_order - self.internal_propagator_count())
    }

    pub fn is_closed(&self) -> bool {
        self.internal_propagator_count() == self.half_order
    }

    /// The colors-`1..=D` part, as a closed rank-`D` graph.
    pub fn residue(&self) -> ColoredGraph {
        ColoredGraph::from_perms_unchecked(self.perms.clone(), self.half_order)
    }

    /// For a closed graph, the `(D+1)`-colored graph with color 0 placed first.
    pub fn to_closed(&self) -> Option<ColoredGraph> {
        if !self.is_closed() {
            return None;
        }
        let mut perms = Vec::with_capacity(self.rank() + 1);
        perms.push(Perm::from_images_unchecked(
            self.prop0.iter().map(|b| b.unwrap()).collect(),
        ));
        perms.extend(self.perms.iter().cloned());
        Some(ColoredGraph::from_perms_unchecked(perms, self.half_order))
    }

    pub fn disjoint_union(&self, other: &OpenFeynmanGraph) -> Result<OpenFeynmanGraph> {
        if self.rank() != other.rank() {
            return Err(Error::RankMismatch {
                expected: self.rank(),
                found: other.rank(),
            });
        }
        let off = self.half_order;
        let residue = self.residue().disjoint_union(&other.residue())?;
        let mut prop0 = self.prop0.clone();
        prop0.extend(other.prop0.iter().map(|b| b.map(|b| b + off)));
        Ok(Self::from_parts_unchecked(residue.perms, prop0))
    }

    /// Connected components over colors `0..=D`, with parent index maps.
    pub fn components(&self) -> Vec<(OpenFeynmanGraph, Vec<usize>, Vec<usize>)> {
        let p = self.half_order;
        let mut parent: Vec<usize> = (0..2 * p).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let union = |a: usize, b: usize, parent: &mut Vec<usize>| {
            let (ra, rb) = (find(parent, a), find(parent, b));
            if ra != rb {
                parent[ra.max(rb)] = ra.min(rb);
            }
        };
        for w in 0..p {
            for c in 1..=self.rank() {
                union(w, p + self.black_of(c, w), &mut parent);
            }
            if let Some(b) = self.prop0[w] {
                union(w, p + b, &mut parent);
            }
        }
        let mut roots: Vec<usize> = (0..p).map(|w| find(&mut parent, w)).collect();
        roots.sort_unstable();
        roots.dedup();
        roots
            .into_iter()
            .map(|r| {
                let whites: Vec<usize> = (0..p).filter(|&w| find(&mut parent, w) == r).collect();
                let blacks: Vec<usize> = (0..p)
                    .filter(|&b| find(&mut parent, p + b) == r)
                    .collect();
                let mut black_pos = vec![usize::MAX; p];
                for (i, &b) in blacks.iter().enumerate() {
                    black_pos[b] = i;
                }
                let perms = (1..=self.rank())
                    .map(|c| {
                        Perm::from_images_unchecked(
                            whites.iter().map(|&w| black_pos[self.black_of(c, w)]).collect(),
                        )
                    })
                    .collect();
                let prop0 = whites
                    .iter()
                    .map(|&w| self.prop0[w].map(|b| black_pos[b]))
                    .collect();
                (Self::from_parts_unchecked(perms, prop0), whites, blacks)
            })
            .collect()
    }

    pub fn is_connected(&self) -> bool {
        self.half_order > 0 && self.components().len() == 1
    }

    pub(crate) fn set_prop0(&mut self, white: usize, black: Option<usize>) {
        if let Some(old) = self.prop0[white] {
            self.prop0_inv[old] = None;
        }
        if let Some(b) = black {
            debug_assert!(self.prop0_inv[b].is_none());
            self.prop0_inv[b] = Some(white);
        }
        self.prop0[white] = black;
    }

    pub(crate) fn perms_mut(&mut self) -> &mut Vec<Perm> {
        &mut self.perms
    }
}

impl fmt::Debug for OpenFeynmanGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "OpenFeynmanGraph(D={}, n={}", self.rank(), self.half_order)?;
        for (k, p) in self.perms.iter().enumerate() {
            write!(f, ", σ{}={:?}", k + 1, p)?;
        }
        write!(f, ", prop0={:?})", self.prop0)
    }
}

/// A multiset of connected graphs of equal rank, kept in canonical order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct DisconnectedGraph {
    rank: usize,
    /// Canonical representatives, sorted by canonical code.
    components: Vec<ColoredGraph>,
}

impl DisconnectedGraph {
    pub fn empty(rank: usize) -> Self {
        DisconnectedGraph {
            rank,
            components: Vec::new(),
        }
    }

    /// Splits a (possibly disconnected) graph into its canonical component multiset.
    pub fn from_graph(g: &ColoredGraph) -> Self {
        Self::from_components(g.rank(), g.components().into_iter().map(|c| c.graph))
            .expect("components share the rank of their parent")
    }

    /// Builds the multiset from pieces; pieces that are themselves disconnected are split.
    pub fn from_components(
        rank: usize,
        pieces: impl IntoIterator<Item = ColoredGraph>,
    ) -> Result<Self> {
        let mut keyed = Vec::new();
        for piece in pieces {
            if piece.rank() != rank {
                return Err(Error::RankMismatch {
                    expected: rank,
                    found: piece.rank(),
                });
            }
            for comp in piece.components() {
                let form = canon::canonical_form(&comp.graph);
                keyed.push((form.code, form.graph));
            }
        }
        keyed.sort_by(|a, b| a.0.cmp(&b.0));
        Ok(DisconnectedGraph {
            rank,
            components: keyed.into_iter().map(|(_, g)| g).collect(),
        })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn components(&self) -> &[ColoredGraph] {
        &self.components
    }

    pub fn component_count(&self) -> usize {
        self.components.len()
    }

    pub fn half_order(&self) -> usize {
        self.components.iter().map(ColoredGraph::half_order).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    /// Distinct component types with multiplicities `m_i`, in canonical order.
    pub fn multiplicities(&self) -> Vec<(&ColoredGraph, usize)> {
        let mut out: Vec<(&ColoredGraph, usize)> = Vec::new();
        for g in &self.components {
            match out.last_mut() {
                Some((last, m)) if *last == g => *m += 1,
                _ => out.push((g, 1)),
            }
        }
        out
    }

    /// The disjoint union of the components in canonical order.
    pub fn union(&self) -> ColoredGraph {
        let mut acc = ColoredGraph::empty(self.rank);
        for g in &self.components {
            acc = acc.disjoint_union(g).expect("equal ranks");
        }
        acc
    }

    pub fn canonical_code(&self) -> CanonicalCode {
        canon::canonical_form(&self.union()).code
    }
}

impl fmt::Debug for DisconnectedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.components).finish()
    }
}

/// The set Ω of allowed interaction bubbles of a colored tensor model.
#[derive(Clone, Debug)]
pub struct InteractionModel {
    rank: usize,
    bubbles: Vec<ColoredGraph>,
    codes: Vec<CanonicalCode>,
    /// The kinetic-term difference `E(.., m_a, ..) − E(.., n_a, ..)` is momentum independent.
    pub kinetic_difference_momentum_free: bool,
}

impl InteractionModel {
    pub fn new(rank: usize, bubbles: Vec<ColoredGraph>) -> Result<Self> {
        for b in &bubbles {
            if b.rank() != rank {
                return Err(Error::RankMismatch {
                    expected: rank,
                    found: b.rank(),
                });
            }
            if !b.is_connected() {
                return Err(Error::NotConnected);
            }
        }
        let codes = bubbles.iter().map(ColoredGraph::canonical_code).collect();
        Ok(InteractionModel {
            rank,
            bubbles,
            codes,
            kinetic_difference_momentum_free: true,
        })
    }

    /// The quartic melonic model with vertices `V_1..V_D`.
    pub fn phi4_melonic(rank: usize) -> Self {
        let bubbles = (1..=rank).map(|k| quartic_vertex(rank, k)).collect();
        Self::new(rank, bubbles).expect("quartic vertices are connected")
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn bubbles(&self) -> &[ColoredGraph] {
        &self.bubbles
    }

    pub fn contains(&self, bubble: &ColoredGraph) -> bool {
        bubble.rank() == self.rank && self.codes.contains(&bubble.canonical_code())
    }
}

/// True iff every colors-`1..=D` component of `g` is a bubble of the model and
/// `g` has at least one internal color-0 propagator.
pub fn is_feynman_graph(g: &OpenFeynmanGraph, model: &InteractionModel) -> bool {
    if g.rank() != model.rank() || g.internal_propagator_count() == 0 {
        return false;
    }
    g.residue()
        .components()
        .iter()
        .all(|c| model.contains(&c.graph))
}

/// The two-vertex graph with all colors parallel.
pub fn dipole(rank: usize) -> ColoredGraph {
    ColoredGraph::from_perms_unchecked(vec![Perm::identity(1); rank], 1)
}

/// The quartic melonic vertex `V_k`: color `k` crosses, all other colors are parallel.
pub fn quartic_vertex(rank: usize, k: usize) -> ColoredGraph {
    assert!((1..=rank).contains(&k));
    let perms = (1..=rank)
        .map(|c| {
            if c == k {
                Perm::transposition(2, 0, 1)
            } else {
                Perm::identity(2)
            }
        })
        .collect();
    ColoredGraph::from_perms_unchecked(perms, 2)
}

/// The colored utility graph `K_c(3,3)`: `σ_1 = id`, `σ_2 = (0 2 1)`, `σ_3 = (0 1 2)`.
pub fn k33() -> ColoredGraph {
    ColoredGraph::new(vec![
        Perm::identity(3),
        Perm::from_cycles(3, &[&[0, 2, 1]]).unwrap(),
        Perm::from_cycles(3, &[&[0, 1, 2]]).unwrap(),
    ])
    .unwrap()
}

/// The rank-4 necklace: `σ_1 = σ_2 = id`, `σ_3 = σ_4 = (0 1)`.
pub fn necklace() -> ColoredGraph {
    ColoredGraph::new(vec![
        Perm::identity(2),
        Perm::identity(2),
        Perm::transposition(2, 0, 1),
        Perm::transposition(2, 0, 1),
    ])
    .unwrap()
}
