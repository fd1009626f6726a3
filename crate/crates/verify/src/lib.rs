//! Brute-force reference implementations used to check `ctmgraph`. Nothing
//! here calls the library's canonical form, automorphism or degree code.

#[cfg(test)]
mod properties;

use ctmgraph::{ColoredGraph, Perm};
use num_rational::Ratio;
use rand::seq::SliceRandom;
use rand::Rng;

pub fn images(g: &ColoredGraph, c: usize) -> Vec<usize> {
    g.perm(c).images().to_vec()
}

fn inverse(v: &[usize]) -> Vec<usize> {
    let mut out = vec![0; v.len()];
    for (i, &x) in v.iter().enumerate() {
        out[x] = i;
    }
    out
}

/// Every permutation of `0..n`, lexicographic.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                prefix.push(i);
                go(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Whether white bijection `alpha` from `g` to `h` extends to a colored
/// isomorphism. The black map is forced by color 1.
fn extends(g: &ColoredGraph, h: &ColoredGraph, alpha: &[usize]) -> bool {
    let p = g.half_order();
    let s1 = images(g, 1);
    let t1 = images(h, 1);
    let mut beta = vec![0; p];
    for w in 0..p {
        beta[s1[w]] = t1[alpha[w]];
    }
    (1..=g.rank()).all(|c| {
        let s = images(g, c);
        let t = images(h, c);
        (0..p).all(|w| beta[s[w]] == t[alpha[w]])
    })
}

pub fn brute_aut_order(g: &ColoredGraph) -> u128 {
    permutations(g.half_order())
        .iter()
        .filter(|a| extends(g, g, a))
        .count() as u128
}

pub fn brute_isomorphic(g: &ColoredGraph, h: &ColoredGraph) -> bool {
    g.rank() == h.rank()
        && g.half_order() == h.half_order()
        && permutations(g.half_order()).iter().any(|a| extends(g, h, a))
}

fn cycles_of(map: &[usize]) -> usize {
    let mut seen = vec![false; map.len()];
    let mut n = 0;
    for s in 0..map.len() {
        if !seen[s] {
            n += 1;
            let mut x = s;
            while !seen[x] {
                seen[x] = true;
                x = map[x];
            }
        }
    }
    n
}

/// Number of bicolored cycles of colors `c, d`.
pub fn faces(g: &ColoredGraph, c: usize, d: usize) -> usize {
    let sc = images(g, c);
    let sd_inv = inverse(&images(g, d));
    let map: Vec<usize> = (0..g.half_order()).map(|w| sd_inv[sc[w]]).collect();
    cycles_of(&map)
}

pub fn total_faces(g: &ColoredGraph) -> usize {
    let n = g.rank();
    let mut f = 0;
    for c in 1..=n {
        for d in c + 1..=n {
            f += faces(g, c, d);
        }
    }
    f
}

/// Connected components, by union-find on whites joined through blacks.
pub fn component_count(g: &ColoredGraph) -> usize {
    let p = g.half_order();
    let mut parent: Vec<usize> = (0..p).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while parent[r] != r {
            r = parent[r];
        }
        parent[x] = r;
        r
    }
    let s1_inv = inverse(&images(g, 1));
    for c in 2..=g.rank() {
        let s = images(g, c);
        for w in 0..p {
            let a = find(&mut parent, w);
            let b = find(&mut parent, s1_inv[s[w]]);
            parent[a] = b;
        }
    }
    (0..p).filter(|&w| find(&mut parent, w) == w).count()
}

/// Cyclic color orders up to rotation and reflection.
pub fn cyclic_orders(colors: usize) -> Vec<Vec<usize>> {
    permutations(colors - 1)
        .into_iter()
        .map(|rest| {
            let mut o = vec![1];
            o.extend(rest.iter().map(|x| x + 2));
            o
        })
        .filter(|o| o.len() < 3 || o[1] < o[o.len() - 1])
        .collect()
}

/// Genera of all jackets, summed over connected components.
pub fn jacket_genera(g: &ColoredGraph) -> Vec<i64> {
    let n = g.rank();
    let p = g.half_order() as i64;
    let k = component_count(g) as i64;
    cyclic_orders(n)
        .iter()
        .map(|o| {
            let f: usize = (0..n).map(|i| faces(g, o[i], o[(i + 1) % n])).sum();
            let chi = 2 * p - n as i64 * p + f as i64;
            assert_eq!(chi % 2, 0);
            k - chi / 2
        })
        .collect()
}

/// Degree from the face-counting formula, all components together.
pub fn face_formula_omega(g: &ColoredGraph) -> Ratio<i64> {
    let n = g.rank() as i64;
    let d = n - 1;
    let p = g.half_order() as i64;
    let k = component_count(g) as i64;
    let f = total_faces(g) as i64;
    let fact: i64 = (1..d).product();
    Ratio::new(fact * (d * (d - 1) / 2 * p + d * k - f), 2)
}

pub fn random_perm<R: Rng>(rng: &mut R, p: usize) -> Perm {
    let mut v: Vec<usize> = (0..p).collect();
    v.shuffle(rng);
    Perm::from_images(v).unwrap()
}

pub fn random_graph<R: Rng>(rng: &mut R, rank: usize, p: usize) -> ColoredGraph {
    ColoredGraph::new((0..rank).map(|_| random_perm(rng, p)).collect()).unwrap()
}

pub fn random_connected<R: Rng>(rng: &mut R, rank: usize, p: usize) -> ColoredGraph {
    loop {
        let g = random_graph(rng, rank, p);
        if component_count(&g) == 1 {
            return g;
        }
    }
}

/// Relabel whites by `alpha` and blacks by `beta`.
pub fn relabel(g: &ColoredGraph, alpha: &[usize], beta: &[usize]) -> ColoredGraph {
    let p = g.half_order();
    let imgs = (1..=g.rank())
        .map(|c| {
            let s = images(g, c);
            let mut out = vec![0; p];
            for w in 0..p {
                out[alpha[w]] = beta[s[w]];
            }
            out
        })
        .collect();
    ColoredGraph::from_images(imgs).unwrap()
}

pub fn factorial(n: u128) -> u128 {
    (1..=n).product()
}

/// Integer partitions of `n`, as part lists.
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(prefix.clone());
            return;
        }
        for k in (1..=n.min(max)).rev() {
            prefix.push(k);
            go(n - k, k, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// `Π n_j! j^{n_j}` for a cycle type.
pub fn cycle_index_factor(parts: &[usize]) -> u128 {
    let mut total = 1u128;
    for j in 1..=parts.iter().copied().max().unwrap_or(0) {
        let n = parts.iter().filter(|&&x| x == j).count() as u128;
        total *= factorial(n) * (j as u128).pow(n as u32);
    }
    total
}

/// Rank-2 graph whose second color has the given cycle type.
pub fn rank_two(parts: &[usize]) -> ColoredGraph {
    let p: usize = parts.iter().sum();
    let mut s2 = vec![0; p];
    let mut start = 0;
    for &len in parts {
        for i in 0..len {
            s2[start + i] = start + (i + 1) % len;
        }
        start += len;
    }
    ColoredGraph::from_images(vec![(0..p).collect(), s2]).unwrap()
}
