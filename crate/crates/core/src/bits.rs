//! Bitmask helpers for vertex sets of graphs with at most 64 vertices.

pub const MAX_MASK_ORDER: usize = 64;

/// Mask with the low `n` bits set.
pub fn full(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Set bits in ascending order.
pub fn iter(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

pub fn count(mask: u64) -> usize {
    mask.count_ones() as usize
}

/// All `size`-subsets of the set bits of `pool`, as masks, in lexicographic
/// order of their sorted member lists.
pub struct Combinations {
    pool: Vec<usize>,
    idx: Vec<usize>,
    done: bool,
}

impl Combinations {
    pub fn new(pool: u64, size: usize) -> Self {
        let pool: Vec<usize> = iter(pool).collect();
        let done = size > pool.len();
        Combinations {
            idx: (0..size).collect(),
            pool,
            done,
        }
    }
}

impl Iterator for Combinations {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        if self.done {
            return None;
        }
        let mask = self.idx.iter().fold(0u64, |m, &i| m | (1 << self.pool[i]));
        let k = self.idx.len();
        let n = self.pool.len();
        // advance to the next index tuple
        let mut i = k;
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.idx[i] < n - k + i {
                self.idx[i] += 1;
                for j in i + 1..k {
                    self.idx[j] = self.idx[j - 1] + 1;
                }
                break;
            }
        }
        Some(mask)
    }
}

/// Every subset of `pool`, smallest sizes first, lexicographic within a size.
pub fn subsets_by_size(pool: u64) -> impl Iterator<Item = u64> {
    subsets_from_size(pool, 0)
}

/// Like [`subsets_by_size`] but skipping sizes below `min_size`.
pub fn subsets_from_size(pool: u64, min_size: usize) -> impl Iterator<Item = u64> {
    (min_size..=count(pool)).flat_map(move |size| Combinations::new(pool, size))
}
