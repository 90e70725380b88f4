//! Permutations of `{0, .., n-1}` with the block operations used by the
//! symmetric-sets bimonoidal category.
//!
//! A permutation `p` sends position `i` to `p[i]`. Composition follows the
//! categorical convention: `g.after(&f)` is `i -> g[f[i]]`.

use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Perm(Vec<u32>);

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm((0..n as u32).collect())
    }

    /// Builds a permutation from its image list, rejecting non-bijections.
    pub fn from_images(images: Vec<u32>) -> Option<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            let x = x as usize;
            if x >= n || seen[x] {
                return None;
            }
            seen[x] = true;
        }
        Some(Perm(images))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn images(&self) -> &[u32] {
        &self.0
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    /// `self ∘ first`; both must act on the same size.
    pub fn after(&self, first: &Perm) -> Perm {
        assert_eq!(self.len(), first.len(), "composing permutations of different sizes");
        Perm(first.0.iter().map(|&i| self.0[i as usize]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u32; self.len()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Perm(inv)
    }

    /// Block sum: `self` on the first `self.len()` positions, `other` shifted after it.
    pub fn block_sum(&self, other: &Perm) -> Perm {
        let a = self.len() as u32;
        let mut v = self.0.clone();
        v.extend(other.0.iter().map(|&x| x + a));
        Perm(v)
    }

    /// Tensor on `a × b`, indexing the pair `(x, y)` as `x * b + y`.
    pub fn tensor(&self, other: &Perm) -> Perm {
        let b = other.len();
        let mut v = Vec::with_capacity(self.len() * b);
        for x in 0..self.len() {
            for y in 0..b {
                v.push((self.apply(x) * b + other.apply(y)) as u32);
            }
        }
        Perm(v)
    }

    /// The block transposition `a + b -> b + a`.
    pub fn block_swap(a: usize, b: usize) -> Perm {
        let v = (0..a + b).map(|i| if i < a { (b + i) as u32 } else { (i - a) as u32 }).collect();
        Perm(v)
    }

    /// Left distributivity reindexing `a·(b+c) -> a·b + a·c`.
    ///
    /// Source elements `(x, z)` with `z < b + c` sit at `x(b+c) + z`; targets
    /// are ordered block-wise, first the `a·b` block then the `a·c` block.
    pub fn left_distributor(a: usize, b: usize, c: usize) -> Perm {
        let mut v = Vec::with_capacity(a * (b + c));
        for x in 0..a {
            for z in 0..b + c {
                let t = if z < b { x * b + z } else { a * b + x * c + (z - b) };
                v.push(t as u32);
            }
        }
        Perm(v)
    }

    /// All permutations of size `n` in lexicographic order.
    pub fn all(n: usize) -> Vec<Perm> {
        let mut out = Vec::new();
        let mut cur: Vec<u32> = (0..n as u32).collect();
        loop {
            out.push(Perm(cur.clone()));
            // next lexicographic permutation
            let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else {
                break;
            };
            let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
            cur.swap(i - 1, j);
            cur[i..].reverse();
        }
        out
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumerates_factorial_many() {
        assert_eq!(Perm::all(0).len(), 1);
        assert_eq!(Perm::all(3).len(), 6);
        assert_eq!(Perm::all(4).len(), 24);
    }

    #[test]
    fn swap_of_units_is_the_transposition() {
        assert_eq!(Perm::block_swap(1, 1).images(), &[1, 0]);
        assert!(Perm::block_swap(2, 3).after(&Perm::block_swap(3, 2)).is_identity());
    }

    #[test]
    fn distributor_2_1_1() {
        // 1-based (1,2,3,4) -> (1,3,2,4)
        assert_eq!(Perm::left_distributor(2, 1, 1).images(), &[0, 2, 1, 3]);
    }

    #[test]
    fn tensor_interchange() {
        for a in Perm::all(3) {
            for b in Perm::all(2) {
                let c = a.inverse();
                let d = b.inverse();
                assert_eq!(c.after(&a).tensor(&d.after(&b)), c.tensor(&d).after(&a.tensor(&b)));
            }
        }
    }
}
