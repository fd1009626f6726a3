//! Symbolic bookkeeping for the boundary-graph expansion of the free energy
//! and the singular (Y) part of the Ward-Takahashi identity.
//!
//! Momenta are symbolic. White vertex `r` of a boundary graph carries the
//! source `J_{𝐚^r}`; black vertex `β` carries `J̄` whose color-`c` component is
//! the one of the white vertex its color-`c` edge comes from.

use std::fmt;

use num_rational::Ratio;

use crate::automorphism::{aut_group, symmetry_factor};
use crate::canon::find_isomorphism;
use crate::enumeration::{enumerate, EnumerationRequest};
use crate::error::{Error, Result};
use crate::graph::{ColoredGraph, DisconnectedGraph, InteractionModel};
use crate::perm::Perm;
use crate::surgery::{remove_dipole, EdgeRef, Removal};

pub type Coefficient = Ratio<i64>;

/// Letter for a color: `a, b, c, …`.
pub fn color_letter(c: usize) -> char {
    (b'a' + (c as u8 - 1) % 26) as char
}

#[derive(Clone, Debug)]
pub struct SourceMonomial {
    pub graph: ColoredGraph,
}

impl SourceMonomial {
    pub fn new(graph: ColoredGraph) -> Self {
        SourceMonomial { graph }
    }

    pub fn slot_count(&self) -> usize {
        self.graph.half_order()
    }

    /// `(color, white slot)` pairs, 1-based, for the components of `J̄` at black `β`.
    pub fn black_components(&self, beta: usize) -> Vec<(usize, usize)> {
        (1..=self.graph.rank())
            .map(|c| (c, self.graph.white_of(c, beta) + 1))
            .collect()
    }

    pub fn black_label(&self, beta: usize) -> String {
        self.black_components(beta)
            .iter()
            .map(|&(c, w)| format!("{}{}", color_letter(c), w))
            .collect()
    }

    pub fn white_label(&self, r: usize) -> String {
        (1..=self.graph.rank())
            .map(|c| format!("{}{}", color_letter(c), r + 1))
            .collect()
    }
}

impl fmt::Display for SourceMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = self.graph.half_order();
        if p == 0 {
            return write!(f, "1");
        }
        let mut parts: Vec<String> = (0..p).map(|r| format!("J_{}", self.white_label(r))).collect();
        parts.extend((0..p).map(|b| format!("Jbar_{}", self.black_label(b))));
        write!(f, "{}", parts.join(" "))
    }
}

#[derive(Clone, Debug)]
pub struct ExpansionTerm {
    pub boundary: DisconnectedGraph,
    pub coefficient: Coefficient,
    /// Number of sources, `2k`.
    pub order: usize,
}

fn check_order(order: usize) -> Result<usize> {
    if order < 2 || !order.is_multiple_of(2) {
        return Err(Error::Infeasible(format!(
            "order must be even and at least 2, got {order}"
        )));
    }
    Ok(order / 2)
}

fn inverse_of(n: u128) -> Result<Coefficient> {
    let n = i64::try_from(n).map_err(|_| Error::Infeasible("symmetry factor overflows".into()))?;
    Ok(Coefficient::new(1, n))
}

/// All boundary classes of rank `D` with `2k` vertices, in canonical order.
fn classes(rank: usize, k: usize) -> Result<Vec<ColoredGraph>> {
    enumerate(&EnumerationRequest::all(rank, k))
}

/// `W = Σ_B (1/σ(B)) G_B ⋆ 𝕁(B)`, one term per class with at most `max_order` sources.
/// For the quartic melonic model every rank-`D` graph is a boundary graph.
pub fn free_energy_terms(model: &InteractionModel, max_order: usize) -> Result<Vec<ExpansionTerm>> {
    let kmax = check_order(max_order)?;
    let mut out = Vec::new();
    for k in 1..=kmax {
        for g in classes(model.rank(), k)? {
            let boundary = DisconnectedGraph::from_graph(&g);
            out.push(ExpansionTerm {
                coefficient: inverse_of(symmetry_factor(&boundary))?,
                boundary,
                order: 2 * k,
            });
        }
    }
    Ok(out)
}

/// One term of `∂𝕁(q)/∂𝕁(r)`: white slot `i` of `r` is matched with slot
/// `slot_map(i)` of `q`, contributing `δ^{c^{slot_map(i)}}_{a^i}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeltaTerm {
    pub slot_map: Perm,
}

impl DeltaTerm {
    pub fn factors(&self) -> Vec<(usize, usize)> {
        (0..self.slot_map.len())
            .map(|i| (i + 1, self.slot_map.apply(i) + 1))
            .collect()
    }
}

impl fmt::Display for DeltaTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .factors()
            .iter()
            .map(|(i, j)| format!("delta(c{j}, a{i})"))
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// The Kronecker-delta sum of the graph derivative: empty unless `r ≅ q`, else
/// one term per isomorphism `r → q`.
pub fn graph_derivative(r: &ColoredGraph, q: &ColoredGraph) -> Result<Vec<DeltaTerm>> {
    let Some((alpha, _)) = find_isomorphism(r, q) else {
        return Ok(Vec::new());
    };
    let group = aut_group(r);
    let elements = group.elements.ok_or_else(|| {
        Error::Infeasible(format!("automorphism group of order {} too large to list", group.order))
    })?;
    Ok(elements
        .iter()
        .map(|theta| DeltaTerm {
            slot_map: alpha.compose(theta),
        })
        .collect())
}

/// Where a color component of the substituted momentum `z^r` comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ZSource {
    /// The external index `m_a`.
    External,
    /// A fresh summation index `q_i`.
    Summed,
    /// Component `i` of the residual graph's white vertex `κ` (1-based).
    Y { kappa: usize },
}

#[derive(Clone, Debug)]
pub struct DeltaBookkeeping {
    /// White vertex (1-based) and color of the removed edge `e_a^r`.
    pub r: usize,
    pub a: usize,
    /// `I(e)`: colors of the edges parallel to `e`, ascending.
    pub parallel_colors: Vec<usize>,
    /// `I(e) ∖ {a}`.
    pub summed_colors: Vec<usize>,
    /// `(i, ξ(r,i,a), κ(r,i,a))` for each color `i ∉ I(e)`, 1-based.
    pub xi_kappa: Vec<(usize, usize, usize)>,
    /// Entry `i − 1` is the source of color `i`.
    pub z_map: Vec<ZSource>,
    pub removal: Removal,
}

impl DeltaBookkeeping {
    pub fn residual(&self) -> &ColoredGraph {
        &self.removal.graph
    }

    pub fn z_string(&self) -> String {
        let parts: Vec<String> = self
            .z_map
            .iter()
            .enumerate()
            .map(|(k, s)| match s {
                ZSource::External => format!("m{}", k + 1),
                ZSource::Summed => format!("q{}", k + 1),
                ZSource::Y { kappa } => format!("y{kappa}_{}", k + 1),
            })
            .collect();
        format!("({})", parts.join(","))
    }

    /// `Δ_{m_a,r} G_B` written out, e.g. `sum_{q1,q3} G[B](q1,m2,q3)`.
    pub fn render(&self, k: usize) -> String {
        let mut args = Vec::with_capacity(k);
        let mut y = 0;
        for s in 1..=k {
            if s == self.r {
                args.push(self.z_string().trim_matches(|c| c == '(' || c == ')').to_string());
            } else {
                y += 1;
                args.push(format!("y{y}"));
            }
        }
        let body = format!("G[B]({})", args.join("; "));
        if self.summed_colors.is_empty() {
            body
        } else {
            let idx: Vec<String> = self.summed_colors.iter().map(|c| format!("q{c}")).collect();
            format!("sum_{{{}}} {body}", idx.join(","))
        }
    }
}

/// `I(e_a^r)`, `ξ`, `κ`, the `z^r` substitution and the residual `B ⊖ e_a^r`.
pub fn delta_bookkeeping(b: &ColoredGraph, r: usize, a: usize) -> Result<DeltaBookkeeping> {
    if !(1..=b.half_order()).contains(&r) {
        return Err(Error::IndexOutOfRange {
            index: r,
            max: b.half_order(),
        });
    }
    if !(1..=b.rank()).contains(&a) {
        return Err(Error::IndexOutOfRange {
            index: a,
            max: b.rank(),
        });
    }
    let removal = remove_dipole(b, EdgeRef::new(a, r - 1))?;
    let t = removal.removed_black;
    let mut xi_kappa = Vec::new();
    let mut z_map = Vec::with_capacity(b.rank());
    for i in 1..=b.rank() {
        if i == a {
            z_map.push(ZSource::External);
        } else if removal.parallel_colors.contains(&i) {
            z_map.push(ZSource::Summed);
        } else {
            let xi = b.white_of(i, t) + 1;
            let kappa = if xi < r { xi } else { xi - 1 };
            debug_assert_eq!(removal.white_map[xi - 1], Some(kappa - 1));
            xi_kappa.push((i, xi, kappa));
            z_map.push(ZSource::Y { kappa });
        }
    }
    Ok(DeltaBookkeeping {
        r,
        a,
        summed_colors: removal
            .parallel_colors
            .iter()
            .copied()
            .filter(|&c| c != a)
            .collect(),
        parallel_colors: removal.parallel_colors.clone(),
        xi_kappa,
        z_map,
        removal,
    })
}

#[derive(Clone, Debug)]
pub struct YTerm {
    pub order: usize,
    /// The boundary graph in canonical labeling.
    pub boundary: ColoredGraph,
    pub coefficient: Coefficient,
    pub core: DeltaBookkeeping,
}

impl YTerm {
    pub fn r(&self) -> usize {
        self.core.r
    }

    pub fn residual(&self) -> &ColoredGraph {
        self.core.residual()
    }

    /// `coefficient boundary r a residual z` on one line, codes in hex.
    pub fn record(&self) -> String {
        format!(
            "coeff={} boundary={} r={} a={} residual={} z={}",
            self.coefficient,
            self.boundary.canonical_code(),
            self.core.r,
            self.core.a,
            self.residual().canonical_code(),
            self.core.z_string()
        )
    }
}

/// `Y_{m_a} = Σ_B (1/|Aut_c(B)|) Σ_r (Δ_{m_a,r} G_B) ⋆ 𝕁(B ⊖ e_a^r)` up to `max_order` sources.
pub fn y_expansion(model: &InteractionModel, a: usize, max_order: usize) -> Result<Vec<YTerm>> {
    let kmax = check_order(max_order)?;
    if !(1..=model.rank()).contains(&a) {
        return Err(Error::IndexOutOfRange {
            index: a,
            max: model.rank(),
        });
    }
    let mut out = Vec::new();
    for k in 1..=kmax {
        for b in classes(model.rank(), k)? {
            let coefficient = inverse_of(aut_group(&b).order)?;
            for r in 1..=k {
                out.push(YTerm {
                    order: 2 * k,
                    coefficient,
                    core: delta_bookkeeping(&b, r, a)?,
                    boundary: b.clone(),
                });
            }
        }
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum SdeCategory {
    Free,
    Tadpole,
    FourPoint,
    DisconnectedPair,
    DifferenceQuotient,
    Coincident,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SdeTerm {
    pub category: SdeCategory,
    pub color: Option<usize>,
    /// Integer multiplicity and sign inside the braces.
    pub weight: i64,
    /// Name of the correlation function's boundary graph.
    pub function: String,
    /// Argument groups, one per white vertex of the boundary graph.
    pub arguments: Vec<Vec<String>>,
    pub summed: Vec<String>,
    pub kernel: Option<String>,
    /// Subtracted copy `G(𝐱)` of difference-quotient terms.
    pub subtracted: Option<String>,
    /// Extra factor multiplying the term (tadpoles carry `G2(x)`).
    pub factor: Option<String>,
    /// Whether the term sits inside the `−2λ/(m² + |𝐱|²)` braces.
    pub prefactored: bool,
}

impl fmt::Display for SdeTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let args: Vec<String> = self.arguments.iter().map(|g| g.join(",")).collect();
        let mut s = String::new();
        if self.weight != 1 {
            s.push_str(&format!("{} ", self.weight));
        }
        if !self.summed.is_empty() {
            s.push_str(&format!("sum_{{{}}} ", self.summed.join(",")));
        }
        if let Some(k) = &self.kernel {
            s.push_str(&format!("{k} * "));
        }
        if let Some(x) = &self.factor {
            s.push_str(&format!("{x} * "));
        }
        if args.is_empty() {
            s.push_str(&self.function);
        } else {
            s.push_str(&format!("{}({})", self.function, args.join("; ")));
        }
        if let Some(sub) = &self.subtracted {
            s.push_str(&format!(" - {sub}"));
        }
        write!(f, "[{:?}] {s}", self.category)
    }
}

#[derive(Clone, Debug)]
pub struct SdeTermInventory {
    pub rank: usize,
    pub prefactor: String,
    pub terms: Vec<SdeTerm>,
}

impl SdeTermInventory {
    /// Term counts in the order free, tadpole, four-point, disconnected pair,
    /// difference quotient, coincident.
    pub fn category_counts(&self) -> [usize; 6] {
        let mut out = [0; 6];
        for t in &self.terms {
            out[t.category as usize] += 1;
        }
        out
    }
}

/// The terms of the closed two-point Schwinger-Dyson equation of the rank-3
/// quartic melonic model with diagonal kinetic term.
pub fn sde_two_point_terms(rank: usize) -> Result<SdeTermInventory> {
    if rank != 3 {
        return Err(Error::UnsupportedRank {
            rank,
            need: "rank 3",
        });
    }
    let x: Vec<String> = (1..=3).map(|c| format!("x{c}")).collect();
    let with = |c: usize, v: &str| -> Vec<String> {
        let mut out = x.clone();
        out[c - 1] = v.to_string();
        out
    };
    let base = SdeTerm {
        category: SdeCategory::Free,
        color: None,
        weight: 1,
        function: String::new(),
        arguments: Vec::new(),
        summed: Vec::new(),
        kernel: None,
        subtracted: None,
        factor: None,
        prefactored: true,
    };
    let mut terms = vec![SdeTerm {
        function: "1/(m^2 + |x|^2)".into(),
        prefactored: false,
        ..base.clone()
    }];
    for c in 1..=3 {
        // The fixed external component is x_c; the other two are summed.
        let mut args = vec!["k".to_string(), "l".to_string()];
        args.insert(c - 1, x[c - 1].clone());
        terms.push(SdeTerm {
            category: SdeCategory::Tadpole,
            color: Some(c),
            function: "G2[dipole]".into(),
            arguments: vec![args],
            summed: vec!["k".into(), "l".into()],
            factor: Some("G2[dipole](x)".into()),
            ..base.clone()
        });
    }
    for c in 1..=3 {
        terms.push(SdeTerm {
            category: SdeCategory::FourPoint,
            color: Some(c),
            weight: 2,
            function: format!("G4[V{c}]"),
            arguments: vec![with(c, "q"), x.clone()],
            summed: vec!["q".into()],
            ..base.clone()
        });
    }
    for c in 1..=3 {
        let mut args = vec!["b".to_string(), "c".to_string()];
        args.insert(c - 1, x[c - 1].clone());
        terms.push(SdeTerm {
            category: SdeCategory::DisconnectedPair,
            color: Some(c),
            function: "G4[dipole|dipole]".into(),
            arguments: vec![x.clone(), args],
            summed: vec!["b".into(), "c".into()],
            ..base.clone()
        });
    }
    for c in 1..=3 {
        let y = format!("y{c}");
        terms.push(SdeTerm {
            category: SdeCategory::DifferenceQuotient,
            color: Some(c),
            weight: -1,
            function: "G2[dipole]".into(),
            arguments: vec![with(c, &y)],
            summed: vec![y.clone()],
            kernel: Some(format!("1/({y}^2 - x{c}^2)")),
            subtracted: Some("G2[dipole](x1,x2,x3)".into()),
            ..base.clone()
        });
    }
    for c in 1..=3 {
        terms.push(SdeTerm {
            category: SdeCategory::Coincident,
            color: Some(c),
            function: format!("G4[V{c}]"),
            arguments: vec![x.clone(), x.clone()],
            ..base.clone()
        });
    }
    Ok(SdeTermInventory {
        rank,
        prefactor: "-2*lambda/(m^2 + |x|^2)".into(),
        terms,
    })
}
