//! Fundamental groups of crystallizations and their abelianizations.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{ColoredGraph, Vertex};

/// A finitely presented group. Letters are nonzero integers: `k` is generator
/// `x_k` (1-based), `-k` its inverse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupPresentation {
    pub generators: usize,
    pub relators: Vec<Vec<i32>>,
}

impl GroupPresentation {
    pub fn new(generators: usize, relators: Vec<Vec<i32>>) -> Result<Self> {
        for r in &relators {
            for &l in r {
                if l == 0 || l.unsigned_abs() as usize > generators {
                    return Err(Error::Document(format!(
                        "letter {l} out of range for {generators} generators"
                    )));
                }
            }
        }
        Ok(GroupPresentation {
            generators,
            relators,
        })
    }
}

pub fn word_to_string(word: &[i32]) -> String {
    if word.is_empty() {
        return "1".into();
    }
    word.iter()
        .map(|&l| {
            if l > 0 {
                format!("x{l}")
            } else {
                format!("x{}^-1", -l)
            }
        })
        .collect::<Vec<_>>()
        .join(" ")
}

impl fmt::Display for GroupPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = (1..=self.generators).map(|k| format!("x{k}")).collect();
        let rels: Vec<String> = self.relators.iter().map(|r| word_to_string(r)).collect();
        write!(f, "< {} | {} >", gens.join(", "), rels.join(", "))
    }
}

/// Free abelian rank plus invariant factors `d_1 | d_2 | …`, each `> 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbelianInvariants {
    pub free_rank: usize,
    pub torsion: Vec<u64>,
}

impl AbelianInvariants {
    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }
}

impl fmt::Display for AbelianInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self.torsion.iter().map(|d| format!("Z/{d}")).collect();
        parts.extend(std::iter::repeat_n("Z".to_string(), self.free_rank));
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// One residue per color: the graph without any single color stays connected.
pub fn is_crystallization(g: &ColoredGraph) -> bool {
    if !g.is_connected() {
        return false;
    }
    (1..=g.rank()).all(|c| {
        let others: Vec<usize> = (1..=g.rank()).filter(|&d| d != c).collect();
        g.bubbles(&others).len() == 1
    })
}

/// The relator read off a bicolored cycle, given each vertex's residue (1-based)
/// and color in traversal order: black gives `x_α`, white gives `x_α⁻¹`.
pub fn word_from_incidence(sequence: &[(usize, Vertex)]) -> Vec<i32> {
    sequence
        .iter()
        .map(|&(alpha, v)| match v {
            Vertex::Black(_) => alpha as i32,
            Vertex::White(_) => -(alpha as i32),
        })
        .collect()
}

#[derive(Clone, Debug)]
pub struct GagliardiResult {
    pub presentation: GroupPresentation,
    /// Number of residues avoiding colors `i` and `j` (the generators).
    pub residue_count: usize,
    /// All `{i,j}`-cycle words, cycles ordered by their smallest white vertex.
    pub cycle_words: Vec<Vec<i32>>,
    pub killed_generator: usize,
    /// Index into `cycle_words` of the omitted relation.
    pub dropped_cycle: usize,
}

/// Gagliardi's presentation, killing the last generator and omitting the last cycle.
pub fn gagliardi_presentation(g: &ColoredGraph, i: usize, j: usize) -> Result<GagliardiResult> {
    gagliardi_presentation_with(g, i, j, None, None)
}

/// As [`gagliardi_presentation`], with explicit choices of killed generator
/// (1-based) and omitted cycle (0-based).
pub fn gagliardi_presentation_with(
    g: &ColoredGraph,
    i: usize,
    j: usize,
    kill: Option<usize>,
    drop: Option<usize>,
) -> Result<GagliardiResult> {
    let colors = g.rank();
    if colors < 4 {
        return Err(Error::UnsupportedRank {
            rank: colors,
            need: "at least 4 colors",
        });
    }
    if i == j || !(1..=colors).contains(&i) || !(1..=colors).contains(&j) {
        return Err(Error::IndexOutOfRange {
            index: if (1..=colors).contains(&i) { j } else { i },
            max: colors,
        });
    }
    if !is_crystallization(g) {
        return Err(Error::NotCrystallization(
            "some color's complement is disconnected".into(),
        ));
    }
    let p = g.half_order();
    let others: Vec<usize> = (1..=colors).filter(|&c| c != i && c != j).collect();
    let residues = g.bubbles(&others);
    let n = residues.len();
    let mut white_res = vec![0; p];
    let mut black_res = vec![0; p];
    for (k, r) in residues.iter().enumerate() {
        r.whites.iter().for_each(|&w| white_res[w] = k + 1);
        r.blacks.iter().for_each(|&b| black_res[b] = k + 1);
    }
    let sj_inv = g.perm(j).inverse();
    let mut seen = vec![false; p];
    let mut cycle_words = Vec::new();
    for start in 0..p {
        if seen[start] {
            continue;
        }
        let mut seq = Vec::new();
        let mut w = start;
        loop {
            seen[w] = true;
            seq.push((white_res[w], Vertex::White(w)));
            let b = g.black_of(i, w);
            seq.push((black_res[b], Vertex::Black(b)));
            w = sj_inv.apply(b);
            if w == start {
                break;
            }
        }
        cycle_words.push(word_from_incidence(&seq));
    }
    let killed_generator = kill.unwrap_or(n);
    let dropped_cycle = drop.unwrap_or(cycle_words.len() - 1);
    if !(1..=n).contains(&killed_generator) {
        return Err(Error::IndexOutOfRange {
            index: killed_generator,
            max: n,
        });
    }
    if dropped_cycle >= cycle_words.len() {
        return Err(Error::IndexOutOfRange {
            index: dropped_cycle,
            max: cycle_words.len() - 1,
        });
    }
    let mut relators = vec![vec![killed_generator as i32]];
    relators.extend(
        cycle_words
            .iter()
            .enumerate()
            .filter(|&(k, _)| k != dropped_cycle)
            .map(|(_, w)| w.clone()),
    );
    Ok(GagliardiResult {
        presentation: GroupPresentation {
            generators: n,
            relators,
        },
        residue_count: n,
        cycle_words,
        killed_generator,
        dropped_cycle,
    })
}

/// Smith normal form diagonal of an integer matrix (entries may be zero).
fn smith_diagonal(mut m: Vec<Vec<i128>>, cols: usize) -> Vec<i128> {
    let rows = m.len();
    let mut diag = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        // Pivot: smallest nonzero absolute value in the remaining block.
        let mut pivot = None;
        for r in t..rows {
            for c in t..cols {
                if m[r][c] != 0 && pivot.is_none_or(|(pr, pc): (usize, usize)| m[r][c].abs() < m[pr][pc].abs()) {
                    pivot = Some((r, c));
                }
            }
        }
        let Some((pr, pc)) = pivot else { break };
        m.swap(t, pr);
        for row in m.iter_mut() {
            row.swap(t, pc);
        }
        loop {
            let mut clean = true;
            for r in t + 1..rows {
                let q = m[r][t] / m[t][t];
                if q != 0 {
                    for c in t..cols {
                        m[r][c] -= q * m[t][c];
                    }
                }
                if m[r][t] != 0 {
                    clean = false;
                }
            }
            for c in t + 1..cols {
                let q = m[t][c] / m[t][t];
                if q != 0 {
                    for r in t..rows {
                        m[r][c] -= q * m[r][t];
                    }
                }
                if m[t][c] != 0 {
                    clean = false;
                }
            }
            if clean {
                // Divisibility: fold in any entry not divisible by the pivot.
                let bad = (t + 1..rows)
                    .flat_map(|r| (t + 1..cols).map(move |c| (r, c)))
                    .find(|&(r, c)| m[r][c] % m[t][t] != 0);
                match bad {
                    Some((r, _)) => {
                        for c in t..cols {
                            m[t][c] += m[r][c];
                        }
                        continue;
                    }
                    None => break,
                }
            }
            // Move the smallest entry of row/column t into the pivot.
            let mut best = (t, t);
            for r in t..rows {
                if m[r][t] != 0 && m[r][t].abs() < m[best.0][best.1].abs() {
                    best = (r, t);
                }
            }
            for c in t..cols {
                if m[t][c] != 0 && m[t][c].abs() < m[best.0][best.1].abs() {
                    best = (t, c);
                }
            }
            m.swap(t, best.0);
            for row in m.iter_mut() {
                row.swap(t, best.1);
            }
        }
        diag.push(m[t][t].abs());
        t += 1;
    }
    diag
}

pub fn abelianization(p: &GroupPresentation) -> AbelianInvariants {
    let n = p.generators;
    let matrix: Vec<Vec<i128>> = p
        .relators
        .iter()
        .map(|r| {
            let mut row = vec![0i128; n];
            for &l in r {
                row[l.unsigned_abs() as usize - 1] += l.signum() as i128;
            }
            row
        })
        .collect();
    let diag = smith_diagonal(matrix, n);
    let nonzero: Vec<i128> = diag.into_iter().filter(|&d| d != 0).collect();
    let mut torsion: Vec<u64> = nonzero.iter().filter(|&&d| d > 1).map(|&d| d as u64).collect();
    torsion.sort_unstable();
    AbelianInvariants {
        free_rank: n - nonzero.len(),
        torsion,
    }
}

fn free_reduce(word: &[i32]) -> Vec<i32> {
    let mut out: Vec<i32> = Vec::with_capacity(word.len());
    for &l in word {
        if out.last() == Some(&-l) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    out
}

fn cyclic_reduce(word: &[i32]) -> Vec<i32> {
    let mut w = free_reduce(word);
    while w.len() >= 2 && w[0] == -w[w.len() - 1] {
        w.pop();
        w.remove(0);
    }
    w
}

fn invert(word: &[i32]) -> Vec<i32> {
    word.iter().rev().map(|&l| -l).collect()
}

/// Smallest rotation of the word or of its inverse, for deduplication.
/// Letters compare by generator first, positive before negative.
fn normalize_relator(word: &[i32]) -> Vec<i32> {
    let key = |w: &[i32]| -> Vec<(u32, bool)> { w.iter().map(|&l| (l.unsigned_abs(), l < 0)).collect() };
    let w = cyclic_reduce(word);
    let inv = invert(&w);
    let mut best = w.clone();
    for base in [&w, &inv] {
        for k in 0..base.len() {
            let rot: Vec<i32> = base[k..].iter().chain(&base[..k]).copied().collect();
            if key(&rot) < key(&best) {
                best = rot;
            }
        }
    }
    best
}

/// Replaces generator `g` by `replacement` everywhere and renumbers the rest.
fn eliminate(p: &GroupPresentation, g: usize, replacement: &[i32]) -> GroupPresentation {
    let renumber = |l: i32| {
        let a = l.unsigned_abs() as usize;
        let a = if a > g { a - 1 } else { a } as i32;
        a * l.signum()
    };
    let replacement: Vec<i32> = replacement.iter().map(|&l| renumber(l)).collect();
    let inverse = invert(&replacement);
    let relators = p
        .relators
        .iter()
        .map(|r| {
            let mut out = Vec::new();
            for &l in r {
                if l.unsigned_abs() as usize == g {
                    out.extend(if l > 0 { &replacement } else { &inverse });
                } else {
                    out.push(renumber(l));
                }
            }
            out
        })
        .collect();
    GroupPresentation {
        generators: p.generators - 1,
        relators,
    }
}

fn tidy(p: &GroupPresentation) -> GroupPresentation {
    let mut seen = BTreeSet::new();
    let mut relators = Vec::new();
    for r in &p.relators {
        let n = normalize_relator(r);
        if !n.is_empty() && seen.insert(n.clone()) {
            relators.push(n);
        }
    }
    relators.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
    GroupPresentation {
        generators: p.generators,
        relators,
    }
}

/// Tietze moves: free and cyclic reduction, dropping trivial and repeated
/// relators, and eliminating a generator that occurs exactly once in some
/// relator (in particular any relator of length one).
pub fn tietze_simplify(p: &GroupPresentation) -> GroupPresentation {
    let mut cur = tidy(p);
    loop {
        let mut step = None;
        'search: for (ri, r) in cur.relators.iter().enumerate() {
            for g in 1..=cur.generators {
                let hits: Vec<usize> = (0..r.len())
                    .filter(|&k| r[k].unsigned_abs() as usize == g)
                    .collect();
                if hits.len() == 1 {
                    step = Some((ri, g, hits[0]));
                    break 'search;
                }
            }
        }
        let Some((ri, g, pos)) = step else { break };
        // Rotate so the letter leads: x^ε w = 1 gives x = w⁻¹ (ε = 1) or x = w (ε = −1).
        let r = &cur.relators[ri];
        let rest: Vec<i32> = r[pos + 1..].iter().chain(&r[..pos]).copied().collect();
        let value = if r[pos] > 0 { invert(&rest) } else { rest };
        let mut without = cur.clone();
        without.relators.remove(ri);
        cur = tidy(&eliminate(&without, g, &value));
    }
    cur
}
