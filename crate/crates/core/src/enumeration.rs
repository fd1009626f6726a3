//! Isomorphism classes of colored graphs on `2p` vertices.
//!
//! With `σ_1` gauged to the identity, classes are orbits of `(σ_2..σ_D)` under
//! simultaneous conjugation. `σ_2` runs over one representative per cycle type,
//! the remaining maps over all of `S_p`, and duplicates are removed by
//! canonical code.

use std::collections::BTreeMap;
use std::path::Path;

use rayon::prelude::*;

use crate::canon::{canonical_form, CanonicalCode};
use crate::error::{Error, Result};
use crate::graph::ColoredGraph;
use crate::io;
use crate::perm::{all_perms, cycle_type_representative, factorial, partitions, Perm};

/// Largest number of gauge-fixed tuples an enumeration will visit.
pub const MAX_TUPLES: u128 = 20_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumerationRequest {
    pub rank: usize,
    pub half_order: usize,
    pub connected_only: bool,
    /// Worker threads; `None` uses the global pool.
    pub jobs: Option<usize>,
}

impl EnumerationRequest {
    pub fn connected(rank: usize, half_order: usize) -> Self {
        EnumerationRequest {
            rank,
            half_order,
            connected_only: true,
            jobs: None,
        }
    }

    pub fn all(rank: usize, half_order: usize) -> Self {
        EnumerationRequest {
            connected_only: false,
            ..Self::connected(rank, half_order)
        }
    }

    /// Number of tuples visited: `#partitions(p) · (p!)^{D−2}`.
    pub fn tuple_count(&self) -> Option<u128> {
        let parts = partitions(self.half_order).len() as u128;
        let f = factorial(self.half_order);
        let mut total = parts;
        for _ in 2..self.rank {
            total = total.checked_mul(f)?;
        }
        Some(total)
    }

    pub fn check(&self) -> Result<()> {
        if self.rank < 2 || self.half_order < 1 {
            return Err(Error::Infeasible(format!(
                "need rank ≥ 2 and half-order ≥ 1, got rank {} and half-order {}",
                self.rank, self.half_order
            )));
        }
        match self.tuple_count() {
            Some(n) if n <= MAX_TUPLES => Ok(()),
            _ => Err(Error::Infeasible(format!(
                "rank {} with {} vertices needs more than {MAX_TUPLES} tuples",
                self.rank,
                2 * self.half_order
            ))),
        }
    }

    fn cache_name(&self) -> String {
        let kind = if self.connected_only { "conn" } else { "all" };
        format!("d{}_p{}_{kind}.jsonl", self.rank, self.half_order)
    }
}

/// Decodes tuple `index` into `σ_3..σ_D`.
fn decode(mut index: usize, all: &[Perm], slots: usize, out: &mut Vec<Perm>) {
    out.clear();
    for _ in 0..slots {
        out.push(all[index % all.len()].clone());
        index /= all.len();
    }
}

fn run(req: &EnumerationRequest) -> Vec<ColoredGraph> {
    let p = req.half_order;
    let d = req.rank;
    let all = all_perms(p);
    let reps: Vec<Perm> = partitions(p)
        .iter()
        .map(|parts| cycle_type_representative(parts))
        .collect();
    let slots = d - 2;
    let per_rep = all.len().pow(slots as u32);
    let total = reps.len() * per_rep;
    let found: BTreeMap<CanonicalCode, ColoredGraph> = (0..total)
        .into_par_iter()
        .fold(
            || (BTreeMap::new(), Vec::new()),
            |(mut acc, mut rest): (BTreeMap<CanonicalCode, ColoredGraph>, Vec<Perm>), k| {
                decode(k % per_rep, &all, slots, &mut rest);
                let mut perms = Vec::with_capacity(d);
                perms.push(Perm::identity(p));
                perms.push(reps[k / per_rep].clone());
                perms.extend(rest.iter().cloned());
                let g = ColoredGraph::from_perms_unchecked(perms, p);
                if !req.connected_only || g.is_connected() {
                    let form = canonical_form(&g);
                    acc.entry(form.code).or_insert(form.graph);
                }
                (acc, rest)
            },
        )
        .map(|(acc, _)| acc)
        .reduce(BTreeMap::new, |mut a, b| {
            a.extend(b);
            a
        });
    found.into_values().collect()
}

/// One canonical representative per class, sorted by canonical code.
pub fn enumerate(req: &EnumerationRequest) -> Result<Vec<ColoredGraph>> {
    req.check()?;
    match req.jobs {
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n.max(1))
                .build()
                .map_err(|e| Error::Infeasible(e.to_string()))?;
            Ok(pool.install(|| run(req)))
        }
        None => Ok(run(req)),
    }
}

/// As [`enumerate`], reading and writing `cache_dir` when given. A corrupt
/// cache file is ignored and rewritten.
pub fn enumerate_cached(req: &EnumerationRequest, cache_dir: Option<&Path>) -> Result<Vec<ColoredGraph>> {
    req.check()?;
    let Some(dir) = cache_dir else {
        return enumerate(req);
    };
    let path = dir.join(req.cache_name());
    if path.exists() {
        if let Ok(graphs) = io::read_corpus(&path) {
            if graphs.iter().all(|g| g.rank() == req.rank && g.half_order() == req.half_order) {
                return Ok(graphs);
            }
        }
    }
    let graphs = enumerate(req)?;
    std::fs::create_dir_all(dir)?;
    io::write_corpus(&path, &graphs)?;
    Ok(graphs)
}

/// Connected class counts for `p = 1..=max_p`.
pub fn connected_counts(rank: usize, max_p: usize, cache_dir: Option<&Path>) -> Result<Vec<u128>> {
    (1..=max_p)
        .map(|p| {
            enumerate_cached(&EnumerationRequest::connected(rank, p), cache_dir).map(|v| v.len() as u128)
        })
        .collect()
}

/// Multiset (Euler) transform: `connected[k-1]` classes of size `k` give the
/// number of multisets of total size `n`, for `n = 0..=connected.len()`.
pub fn euler_transform(connected: &[u128]) -> Vec<u128> {
    let n = connected.len();
    let mut out = vec![0u128; n + 1];
    out[0] = 1;
    for (k, &a) in connected.iter().enumerate() {
        let size = k + 1;
        // Multiply by (1 − x^size)^{−a}: choose j items of this size with repetition.
        let mut next = vec![0u128; n + 1];
        for (m, &v) in out.iter().enumerate() {
            if v == 0 {
                continue;
            }
            let mut j = 0;
            while m + j * size <= n {
                next[m + j * size] += v * multichoose(a, j as u128);
                j += 1;
            }
        }
        out = next;
    }
    out
}

fn multichoose(a: u128, j: u128) -> u128 {
    // C(a + j − 1, j)
    let mut r = 1u128;
    for i in 0..j {
        r = r * (a + i) / (i + 1);
    }
    r
}

/// Number of (possibly disconnected) classes on `2p` vertices, i.e. of
/// `2p`-point correlation functions.
pub fn count_correlation_functions(rank: usize, p: usize, cache_dir: Option<&Path>) -> Result<u128> {
    let conn = connected_counts(rank, p, cache_dir)?;
    Ok(euler_transform(&conn)[p])
}
