//! Named graphs used by tests, the CLI (`@name`) and the demo.

use crate::graph::{self, ColoredGraph, OpenFeynmanGraph};
use crate::surgery;

fn closed(images: &[&[usize]]) -> ColoredGraph {
    ColoredGraph::from_images(images.iter().map(|im| im.to_vec()).collect()).expect("valid fixture")
}

/// 4-colored crystallization of the lens space L(3,1) on 12 vertices.
pub fn lens_3_1() -> ColoredGraph {
    closed(&[
        &[0, 1, 2, 3, 4, 5],
        &[1, 2, 0, 4, 5, 3],
        &[3, 5, 4, 0, 2, 1],
        &[4, 3, 5, 1, 0, 2],
    ])
}

/// 4-colored crystallization of S²×S¹ on 8 vertices.
pub fn s2_x_s1() -> ColoredGraph {
    closed(&[&[0, 1, 2, 3], &[1, 2, 0, 3], &[0, 3, 1, 2], &[3, 2, 1, 0]])
}

/// The 3-sphere: the rank-4 dipole.
pub fn s3() -> ColoredGraph {
    graph::dipole(4)
}

#[derive(Clone, Debug)]
pub enum Fixture {
    Closed(ColoredGraph),
    Open(OpenFeynmanGraph),
}

pub const NAMES: &[&str] = &[
    "dipole", "dipole4", "dipole5", "v1", "v2", "v3", "k33", "necklace", "lens31", "s2xs1", "s3",
    "pretzel", "separatrix",
];

pub fn named(name: &str) -> Option<Fixture> {
    let c = |g| Some(Fixture::Closed(g));
    match name {
        "dipole" => c(graph::dipole(3)),
        "dipole4" => c(graph::dipole(4)),
        "dipole5" => c(graph::dipole(5)),
        "v1" => c(graph::quartic_vertex(3, 1)),
        "v2" => c(graph::quartic_vertex(3, 2)),
        "v3" => c(graph::quartic_vertex(3, 3)),
        "k33" => c(graph::k33()),
        "necklace" => c(graph::necklace()),
        "lens31" => c(lens_3_1()),
        "s2xs1" => c(s2_x_s1()),
        "s3" => c(s3()),
        "pretzel" => surgery::pretzel(3).ok().map(Fixture::Open),
        "separatrix" => surgery::separatrix(3).ok().map(Fixture::Open),
        _ => None,
    }
}
