//! Permutations of `[1..m]` and small enumeration helpers.

use std::fmt;

use serde::{Deserialize, Serialize};

/// A permutation of `[1..m]`, stored as its image list: `images[i - 1] = g(i)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Perm {
    images: Vec<u32>,
}

impl Perm {
    pub fn identity(m: usize) -> Self {
        Perm {
            images: (1..=m as u32).collect(),
        }
    }

    /// Builds a permutation from its image list; `None` unless it is a bijection of `[1..m]`.
    pub fn from_images(images: Vec<u32>) -> Option<Self> {
        let m = images.len();
        let mut seen = vec![false; m];
        for &v in &images {
            let i = (v as usize).checked_sub(1)?;
            if i >= m || seen[i] {
                return None;
            }
            seen[i] = true;
        }
        Some(Perm { images })
    }

    /// The transposition `(a b)` on `[1..m]`.
    pub fn transposition(m: usize, a: u32, b: u32) -> Self {
        let mut p = Perm::identity(m);
        p.images.swap(a as usize - 1, b as usize - 1);
        p
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    /// `g(i)`; points outside `[1..m]` are fixed.
    pub fn apply(&self, i: u32) -> u32 {
        match (i as usize).checked_sub(1).and_then(|k| self.images.get(k)) {
            Some(&v) => v,
            None => i,
        }
    }

    /// `self ∘ other`, i.e. apply `other` first.
    pub fn compose(&self, other: &Perm) -> Perm {
        assert_eq!(self.degree(), other.degree(), "permutation degree mismatch");
        Perm {
            images: other.images.iter().map(|&i| self.apply(i)).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut images = vec![0; self.degree()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v as usize - 1] = i as u32 + 1;
        }
        Perm { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| v == i as u32 + 1)
    }

    pub fn fixes(&self, i: u32) -> bool {
        self.apply(i) == i
    }

    /// All `m!` permutations of `[1..m]` in lexicographic order of image lists.
    pub fn all(m: usize) -> impl Iterator<Item = Perm> {
        Permutations::new((1..=m as u32).collect()).map(|images| Perm { images })
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm{:?}", self.images)
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return write!(f, "e");
        }
        // cycle notation, fixed points omitted
        let mut seen = vec![false; self.degree()];
        for start in 1..=self.degree() as u32 {
            if seen[start as usize - 1] || self.fixes(start) {
                continue;
            }
            write!(f, "(")?;
            let mut cur = start;
            let mut first = true;
            while !seen[cur as usize - 1] {
                seen[cur as usize - 1] = true;
                if !first {
                    write!(f, " ")?;
                }
                write!(f, "{cur}")?;
                first = false;
                cur = self.apply(cur);
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

/// Rearranges `v` into the next lexicographic permutation; false once `v` is the last one.
pub fn next_permutation<T: Ord>(v: &mut [T]) -> bool {
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

/// Lexicographic permutations of a sorted starting vector.
pub struct Permutations<T> {
    next: Option<Vec<T>>,
}

impl<T: Ord + Clone> Permutations<T> {
    pub fn new(mut start: Vec<T>) -> Self {
        start.sort();
        Permutations { next: Some(start) }
    }
}

impl<T: Ord + Clone> Iterator for Permutations<T> {
    type Item = Vec<T>;

    fn next(&mut self) -> Option<Vec<T>> {
        let cur = self.next.take()?;
        let mut succ = cur.clone();
        if next_permutation(&mut succ) {
            self.next = Some(succ);
        }
        Some(cur)
    }
}

/// Strictly increasing `k`-tuples drawn from `[1..=n]`, in lexicographic order.
pub fn increasing_tuples(k: usize, n: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(k: usize, lo: u32, n: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        let remaining = (k - cur.len()) as u32;
        let mut v = lo;
        while v + remaining - 1 <= n {
            cur.push(v);
            rec(k, v + 1, n, cur, out);
            cur.pop();
            v += 1;
        }
    }
    rec(k, 1, n, &mut cur, &mut out);
    out
}

/// Injective `k`-tuples drawn from `[1..=n]`, in lexicographic order.
pub fn injective_tuples(k: usize, n: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    let mut used = vec![false; n as usize + 1];
    fn rec(k: usize, n: u32, cur: &mut Vec<u32>, used: &mut [bool], out: &mut Vec<Vec<u32>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in 1..=n {
            if !used[v as usize] {
                used[v as usize] = true;
                cur.push(v);
                rec(k, n, cur, used, out);
                cur.pop();
                used[v as usize] = false;
            }
        }
    }
    rec(k, n, &mut cur, &mut used, &mut out);
    out
}

pub fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

/// `n! / (n - k)!`, zero when `k > n`.
pub fn falling_factorial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    ((n - k + 1) as u64..=n as u64).product()
}

pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    falling_factorial(n, k) / factorial(k)
}
