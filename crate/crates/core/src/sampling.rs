//! Budgeted enumeration: exhaustive when the instance space fits the budget,
//! otherwise a seeded sample that can be replayed from the recorded seed.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub limit: u64,
    pub seed: u64,
}

impl Budget {
    pub fn new(limit: u64, seed: u64) -> Self {
        Budget { limit, seed }
    }

    pub fn exhaustive() -> Self {
        Budget { limit: u64::MAX, seed: 0 }
    }

    pub fn rng(&self, salt: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed ^ salt.wrapping_mul(0x9E37_79B9_7F4A_7C15))
    }

    /// Indices into a space of `total` instances. The second component is the
    /// seed when sampling happened, `None` when enumeration was exhaustive.
    pub fn select(&self, total: u128, salt: u64) -> (Vec<u128>, Option<u64>) {
        if total <= self.limit as u128 {
            return ((0..total).collect(), None);
        }
        let mut rng = self.rng(salt);
        let picks = (0..self.limit).map(|_| rng.gen_range(0..total)).collect();
        (picks, Some(self.seed))
    }
}

/// Stable salt for a law name so different laws sample different instances.
pub fn salt(name: &str) -> u64 {
    name.bytes().fold(0xcbf2_9ce4_8422_2325u64, |h, b| (h ^ b as u64).wrapping_mul(0x100_0000_01b3))
}

/// Composable chains `o0 -> o1 -> .. -> ok` of items drawn from per-hom lists,
/// addressable by a single index.
#[derive(Debug, Clone)]
pub struct ChainSpace {
    blocks: Vec<(Vec<usize>, Vec<usize>, u128)>,
    total: u128,
}

impl ChainSpace {
    /// `hom_size(i, j)` is the number of items from object `i` to object `j`.
    pub fn new(n_objects: usize, len: usize, hom_size: impl Fn(usize, usize) -> usize) -> Self {
        let mut blocks = Vec::new();
        let mut total = 0u128;
        let mut seq = vec![0usize; len + 1];
        if n_objects == 0 {
            return ChainSpace { blocks, total };
        }
        loop {
            let sizes: Vec<usize> = (0..len).map(|t| hom_size(seq[t], seq[t + 1])).collect();
            let count = sizes.iter().fold(1u128, |acc, &s| acc * s as u128);
            if count > 0 {
                blocks.push((seq.clone(), sizes, count));
                total += count;
            }
            // advance the object sequence odometer
            let mut pos = len + 1;
            loop {
                if pos == 0 {
                    return ChainSpace { blocks, total };
                }
                pos -= 1;
                seq[pos] += 1;
                if seq[pos] < n_objects {
                    break;
                }
                seq[pos] = 0;
            }
        }
    }

    pub fn total(&self) -> u128 {
        self.total
    }

    /// Object sequence and item index per step.
    pub fn decode(&self, mut idx: u128) -> (Vec<usize>, Vec<usize>) {
        for (seq, sizes, count) in &self.blocks {
            if idx < *count {
                let mut items = vec![0usize; sizes.len()];
                for t in (0..sizes.len()).rev() {
                    items[t] = (idx % sizes[t] as u128) as usize;
                    idx /= sizes[t] as u128;
                }
                return (seq.clone(), items);
            }
            idx -= count;
        }
        panic!("chain index out of range");
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chain_space_counts_only_composable() {
        // two objects, hom(i,i) has 2 items, hom(i,j) empty otherwise
        let s = ChainSpace::new(2, 3, |i, j| if i == j { 2 } else { 0 });
        assert_eq!(s.total(), 2 * 8);
        let (seq, items) = s.decode(9);
        assert_eq!(seq, vec![1, 1, 1, 1]);
        assert_eq!(items, vec![0, 0, 1]);
    }

    #[test]
    fn selection_is_replayable() {
        let b = Budget::new(5, 7);
        let (a, s) = b.select(1000, 3);
        let (c, _) = b.select(1000, 3);
        assert_eq!(a, c);
        assert_eq!(s, Some(7));
        assert_eq!(b.select(4, 3), (vec![0, 1, 2, 3], None));
    }
}
