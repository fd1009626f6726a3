//! Faces, jackets, genus and Gurău degree of closed colored graphs.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::graph::ColoredGraph;
use crate::perm::factorial;

pub type Rational = Ratio<i64>;

/// Largest color count for which jackets are enumerated ((C−1)!/2 classes).
pub const MAX_JACKET_COLORS: usize = 9;

/// Face counts per unordered color pair `(c, d)`, `c < d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceCounts {
    pub by_pair: BTreeMap<(usize, usize), usize>,
}

impl FaceCounts {
    pub fn total(&self) -> usize {
        self.by_pair.values().sum()
    }

    pub fn get(&self, c: usize, d: usize) -> usize {
        self.by_pair[&(c.min(d), c.max(d))]
    }
}

/// Number of bicolored cycles for the pair `{c, d}`: cycles of `σ_d⁻¹ ∘ σ_c`.
pub fn face_count(g: &ColoredGraph, c: usize, d: usize) -> usize {
    g.perm(d).inverse().compose(g.perm(c)).cycle_count()
}

pub fn faces(g: &ColoredGraph) -> FaceCounts {
    let n = g.rank();
    let mut by_pair = BTreeMap::new();
    for c in 1..=n {
        for d in c + 1..=n {
            by_pair.insert((c, d), face_count(g, c, d));
        }
    }
    FaceCounts { by_pair }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JacketReport {
    /// Cyclic color order, starting at color 1, with `order[1] < order[last]`.
    pub cycle_class: Vec<usize>,
    pub face_count: usize,
    pub euler_characteristic: i64,
    pub genus: u64,
}

impl JacketReport {
    pub fn label(&self) -> String {
        let digits: Vec<String> = self.cycle_class.iter().map(ToString::to_string).collect();
        let sep = if self.cycle_class.iter().all(|&c| c < 10) { "" } else { " " };
        format!("({})", digits.join(sep))
    }
}

/// Cyclic orders of `1..=colors` modulo rotation and reflection.
pub fn jacket_classes(colors: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if colors < 3 {
        return out;
    }
    let mut rest: Vec<usize> = (2..=colors).collect();
    loop {
        if rest[0] < rest[rest.len() - 1] {
            let mut order = vec![1];
            order.extend_from_slice(&rest);
            out.push(order);
        }
        if !crate::perm::next_permutation(&mut rest) {
            break;
        }
    }
    out
}

fn check_jacket_colors(colors: usize) -> Result<()> {
    if colors < 3 {
        return Err(Error::UnsupportedRank {
            rank: colors,
            need: "at least 3 colors for jackets",
        });
    }
    if colors > MAX_JACKET_COLORS {
        return Err(Error::Infeasible(format!(
            "{colors} colors give {} jackets; limit is {MAX_JACKET_COLORS} colors",
            factorial(colors - 1) / 2
        )));
    }
    Ok(())
}

/// Per-component face counts, used by jackets and the face formula.
struct ComponentFaces {
    half_order: usize,
    faces: FaceCounts,
}

fn component_faces(g: &ColoredGraph) -> Vec<ComponentFaces> {
    g.components()
        .into_iter()
        .map(|c| ComponentFaces {
            half_order: c.graph.half_order(),
            faces: faces(&c.graph),
        })
        .collect()
}

fn jackets_from(colors: usize, comps: &[ComponentFaces]) -> Vec<JacketReport> {
    jacket_classes(colors)
        .into_iter()
        .map(|order| {
            let mut face_count = 0;
            let mut euler = 0i64;
            let mut genus = 0u64;
            for comp in comps {
                let f: usize = (0..colors)
                    .map(|k| comp.faces.get(order[k], order[(k + 1) % colors]))
                    .sum();
                let v = 2 * comp.half_order as i64;
                let e = (colors * comp.half_order) as i64;
                let chi = v - e + f as i64;
                debug_assert!(chi <= 2 && chi % 2 == 0);
                face_count += f;
                euler += chi;
                genus += ((2 - chi) / 2) as u64;
            }
            JacketReport {
                cycle_class: order,
                face_count,
                euler_characteristic: euler,
                genus,
            }
        })
        .collect()
}

pub fn jackets(g: &ColoredGraph) -> Result<Vec<JacketReport>> {
    check_jacket_colors(g.rank())?;
    Ok(jackets_from(g.rank(), &component_faces(g)))
}

#[derive(Clone, Debug)]
pub struct DegreeReport {
    /// Sum of jacket genera.
    pub omega: Rational,
    /// The degree implied by the face count, summed over components.
    pub face_formula_omega: Rational,
    pub consistent: bool,
    pub jackets: Vec<JacketReport>,
    pub total_faces: usize,
}

impl fmt::Display for DegreeReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut genera: Vec<u64> = self.jackets.iter().map(|j| j.genus).collect();
        genera.sort_unstable();
        let genera: Vec<String> = genera.iter().map(ToString::to_string).collect();
        write!(f, "omega = {}; jackets: {}", self.omega, genera.join(","))
    }
}

/// Degree predicted by `F = C(D,2)·p + D − 2ω/(D−1)!` for a connected graph
/// with `D + 1` colors, `2p` vertices and `F` faces.
pub fn face_formula_degree(colors: usize, half_order: usize, total_faces: usize) -> Rational {
    let d = colors as i64 - 1;
    let binom = d * (d - 1) / 2;
    let fact = factorial(colors - 2) as i64;
    Rational::new(
        fact * (binom * half_order as i64 + d - total_faces as i64),
        2,
    )
}

/// Gurău degree as the sum of jacket genera, cross-checked against the face formula.
/// Disconnected graphs are handled component by component.
pub fn gurau_degree(g: &ColoredGraph) -> Result<DegreeReport> {
    let colors = g.rank();
    check_jacket_colors(colors)?;
    let comps = component_faces(g);
    let jackets = jackets_from(colors, &comps);
    let omega = Rational::from_integer(jackets.iter().map(|j| j.genus as i64).sum());
    let face_formula_omega = comps
        .iter()
        .map(|c| face_formula_degree(colors, c.half_order, c.faces.total()))
        .fold(Rational::from_integer(0), |a, b| a + b);
    let consistent = omega == face_formula_omega;
    if !consistent {
        return Err(Error::DegreeMismatch {
            jackets: omega.to_string(),
            faces: face_formula_omega.to_string(),
        });
    }
    Ok(DegreeReport {
        omega,
        face_formula_omega,
        consistent,
        total_faces: comps.iter().map(|c| c.faces.total()).sum(),
        jackets,
    })
}

pub fn is_melon(g: &ColoredGraph) -> Result<bool> {
    Ok(gurau_degree(g)?.omega == Rational::from_integer(0))
}

/// Large-N scaling exponent `D − 2ω/(D−1)!` of a closed graph with `D + 1` colors.
pub fn amplitude_exponent(g: &ColoredGraph) -> Result<Rational> {
    let omega = gurau_degree(g)?.omega;
    let d = g.rank() as i64 - 1;
    let fact = factorial(g.rank() - 2) as i64;
    Ok(Rational::from_integer(d) - omega * 2 / fact)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{dipole, k33, necklace};

    #[test]
    fn face_totals() {
        assert_eq!(faces(&dipole(4)).total(), 6);
        assert_eq!(faces(&necklace()).total(), 8);
        assert_eq!(faces(&k33()).total(), 3);
    }

    #[test]
    fn jacket_class_counts() {
        assert_eq!(jacket_classes(3), vec![vec![1, 2, 3]]);
        assert_eq!(
            jacket_classes(4),
            vec![vec![1, 2, 3, 4], vec![1, 2, 4, 3], vec![1, 3, 2, 4]]
        );
        assert_eq!(jacket_classes(5).len(), 12);
        assert_eq!(jacket_classes(6).len(), 60);
    }

    #[test]
    fn necklace_jackets() {
        let report = gurau_degree(&necklace()).unwrap();
        let mut genera: Vec<u64> = report.jackets.iter().map(|j| j.genus).collect();
        genera.sort_unstable();
        assert_eq!(genera, vec![0, 0, 1]);
        assert_eq!(report.omega, Rational::from_integer(1));
        assert_eq!(report.to_string(), "omega = 1; jackets: 0,0,1");
        assert_eq!(amplitude_exponent(&necklace()).unwrap(), Rational::from_integer(2));
    }

    #[test]
    fn dipole_and_k33() {
        for d in 3..=6 {
            assert!(is_melon(&dipole(d)).unwrap());
            assert_eq!(
                amplitude_exponent(&dipole(d)).unwrap(),
                Rational::from_integer(d as i64 - 1)
            );
        }
        let j = jackets(&k33()).unwrap();
        assert_eq!(j.len(), 1);
        assert_eq!(j[0].euler_characteristic, 0);
        assert_eq!(j[0].genus, 1);
        assert_eq!(gurau_degree(&k33()).unwrap().omega, Rational::from_integer(1));
    }

    #[test]
    fn rank_limits() {
        let two = ColoredGraph::from_images(vec![vec![0], vec![0]]).unwrap();
        assert!(matches!(jackets(&two), Err(Error::UnsupportedRank { .. })));
        assert!(matches!(jackets(&dipole(10)), Err(Error::Infeasible(_))));
    }

    #[test]
    fn empty_graph_has_degree_zero() {
        let r = gurau_degree(&ColoredGraph::empty(4)).unwrap();
        assert_eq!(r.omega, Rational::from_integer(0));
    }
}
