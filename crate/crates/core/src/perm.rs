//! Permutations of `{0..n-1}` stored as image arrays.

use std::fmt;

/// A bijection on `{0..n-1}`; `images[i]` is the image of `i`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<usize>,
}

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm {
            images: (0..n).collect(),
        }
    }

    /// Builds a permutation from its image array, or `None` if the array is not a bijection.
    pub fn from_images(images: Vec<usize>) -> Option<Self> {
        if is_bijection(&images) {
            Some(Perm { images })
        } else {
            None
        }
    }

    /// Builds a permutation from disjoint cycles in cycle notation, e.g. `[[0, 2, 1]]` maps 0→2→1→0.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Option<Self> {
        let mut images: Vec<usize> = (0..n).collect();
        let mut seen = vec![false; n];
        for cycle in cycles {
            for (k, &x) in cycle.iter().enumerate() {
                if x >= n || seen[x] {
                    return None;
                }
                seen[x] = true;
                images[x] = cycle[(k + 1) % cycle.len()];
            }
        }
        Some(Perm { images })
    }

    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(a, b);
        Perm { images }
    }

    pub(crate) fn from_images_unchecked(images: Vec<usize>) -> Self {
        debug_assert!(is_bijection(&images));
        Perm { images }
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn into_images(self) -> Vec<usize> {
        self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x] = i;
        }
        Perm { images: inv }
    }

    /// `self ∘ other`, i.e. `x ↦ self(other(x))`.
    pub fn compose(&self, other: &Perm) -> Perm {
        assert_eq!(self.len(), other.len(), "composing permutations of different sizes");
        Perm {
            images: other.images.iter().map(|&x| self.images[x]).collect(),
        }
    }

    /// `outer ∘ self ∘ outer⁻¹`.
    pub fn conjugate_by(&self, outer: &Perm) -> Perm {
        let mut images = vec![0; self.len()];
        for i in 0..self.len() {
            images[outer.apply(i)] = outer.apply(self.apply(i));
        }
        Perm { images }
    }

    /// Disjoint cycles, each starting at its smallest element, ordered by that element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x);
                x = self.images[x];
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_count(&self) -> usize {
        let n = self.len();
        let mut seen = vec![false; n];
        let mut count = 0;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            count += 1;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.images[x];
            }
        }
        count
    }

    /// Cycle lengths sorted ascending.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut lens: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        lens.sort_unstable();
        lens
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.images)
    }
}

impl fmt::Display for Perm {
    /// Cycle notation, fixed points omitted; identity prints as `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for cycle in self.cycles() {
            if cycle.len() < 2 {
                continue;
            }
            wrote = true;
            write!(f, "(")?;
            for (k, x) in cycle.iter().enumerate() {
                if k > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, ")")?;
        }
        if !wrote {
            write!(f, "()")?;
        }
        Ok(())
    }
}

pub(crate) fn is_bijection(images: &[usize]) -> bool {
    let n = images.len();
    let mut seen = vec![false; n];
    for &x in images {
        if x >= n || seen[x] {
            return false;
        }
        seen[x] = true;
    }
    true
}

/// All permutations of `{0..n-1}` in lexicographic order.
pub fn all_perms(n: usize) -> Vec<Perm> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = (0..n).collect();
    loop {
        out.push(Perm {
            images: current.clone(),
        });
        if !next_permutation(&mut current) {
            break;
        }
    }
    out
}

pub(crate) fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Integer partitions of `n`, each in non-increasing order.
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in (1..=n.min(max)).rev() {
            prefix.push(part);
            go(n - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// The permutation whose cycles are consecutive blocks of the given lengths.
pub fn cycle_type_representative(parts: &[usize]) -> Perm {
    let n: usize = parts.iter().sum();
    let mut images = vec![0; n];
    let mut start = 0;
    for &len in parts {
        for k in 0..len {
            images[start + k] = start + (k + 1) % len;
        }
        start += len;
    }
    Perm { images }
}

pub fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compose_and_inverse() {
        let a = Perm::from_cycles(3, &[&[0, 2, 1]]).unwrap();
        assert_eq!(a.images(), &[2, 0, 1]);
        assert!(a.compose(&a.inverse()).is_identity());
        assert_eq!(a.to_string(), "(0 2 1)");
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Perm::from_images(vec![0, 0]).is_none());
        assert!(Perm::from_images(vec![0, 2]).is_none());
        assert!(Perm::from_cycles(3, &[&[0, 1], &[1, 2]]).is_none());
    }

    #[test]
    fn enumerates_all_permutations() {
        assert_eq!(all_perms(4).len(), 24);
        assert_eq!(all_perms(0).len(), 1);
        assert_eq!(partitions(5).len(), 7);
        assert_eq!(partitions(10).len(), 42);
        assert_eq!(cycle_type_representative(&[3, 1]).cycle_type(), vec![1, 3]);
    }

    #[test]
    fn conjugation_preserves_cycle_type() {
        let a = Perm::from_cycles(5, &[&[0, 3], &[1, 2, 4]]).unwrap();
        let b = Perm::from_cycles(5, &[&[0, 1, 2, 3, 4]]).unwrap();
        let c = a.conjugate_by(&b);
        assert_eq!(c, b.compose(&a).compose(&b.inverse()));
        assert_eq!(c.cycle_type(), a.cycle_type());
    }
}
