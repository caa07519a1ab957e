//! Exact combinatorics: binomial coefficients, colexicographic subset
//! ranking, and dense bitmaps over the t-subsets of an alphabet.
//!
//! All arithmetic is exact integer arithmetic; nothing here goes through
//! floating point. Coverage sets are bitmaps indexed by the colex rank of
//! a subset, which keeps membership O(1) and storage at one bit per
//! subset for universes up to [`MAX_SUBSETS`].

use num_bigint::BigUint;

use crate::error::{Error, Result};

/// Largest subset universe we will allocate a bitmap for (~12.5 MB).
pub const MAX_SUBSETS: u64 = 100_000_000;

/// Exact binomial coefficient in 128-bit arithmetic.
///
/// Panics on overflow; callers in this crate guard their parameter ranges
/// well below that point.
pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut res: u128 = 1;
    for i in 0..k {
        res = res
            .checked_mul((n - i) as u128)
            .expect("binomial overflow in u128");
        res /= (i + 1) as u128;
    }
    res
}

/// Binomial coefficient as an arbitrary-precision integer.
pub fn binomial_big(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::ZERO;
    }
    let k = k.min(n - k);
    let mut res = BigUint::from(1u32);
    for i in 0..k {
        res *= n - i;
        res /= i + 1;
    }
    res
}

/// Falling factorial n·(n-1)···(n-terms+1) as a big integer.
pub fn falling_factorial_big(n: u64, terms: u64) -> BigUint {
    if terms > n {
        return BigUint::ZERO;
    }
    let mut res = BigUint::from(1u32);
    for i in 0..terms {
        res *= n - i;
    }
    res
}

/// Falling factorial in u128, or `None` if it does not fit.
pub fn falling_factorial(n: u64, terms: u64) -> Option<u128> {
    if terms > n {
        return Some(0);
    }
    let mut res: u128 = 1;
    for i in 0..terms {
        res = res.checked_mul((n - i) as u128)?;
    }
    Some(res)
}

/// Ranks the t-subsets of {0, …, n-1} in colexicographic order.
///
/// For a subset written in increasing order s_0 < s_1 < … < s_{t-1} the
/// rank is Σ C(s_i, i+1); ranks run over [0, C(n,t)). The table is
/// precomputed so ranking is t table lookups.
#[derive(Debug, Clone)]
pub struct SubsetRanker {
    n: u32,
    t: u32,
    total: u64,
    // choose[s][j] = C(s, j) for s ≤ n, j ≤ t
    choose: Vec<Vec<u64>>,
}

impl SubsetRanker {
    pub fn new(n: u32, t: u32) -> Result<Self> {
        let total_wide = binomial(n as u64, t as u64);
        if total_wide > MAX_SUBSETS as u128 {
            return Err(Error::InstanceTooLarge(format!(
                "C({n},{t}) = {total_wide} subsets exceeds the bitmap limit of {MAX_SUBSETS}"
            )));
        }
        let total = total_wide as u64;
        let mut choose = vec![vec![0u64; t as usize + 1]; n as usize + 1];
        for s in 0..=n as usize {
            choose[s][0] = 1;
            for j in 1..=t as usize {
                choose[s][j] = if j > s {
                    0
                } else {
                    choose[s - 1][j - 1] + choose[s - 1][j]
                };
            }
        }
        Ok(Self { n, t, total, choose })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn t(&self) -> u32 {
        self.t
    }

    /// Number of t-subsets, C(n,t).
    pub fn total(&self) -> u64 {
        self.total
    }

    /// Colex rank of a strictly increasing t-subset.
    pub fn rank(&self, subset: &[u32]) -> u64 {
        debug_assert_eq!(subset.len(), self.t as usize);
        let mut r = 0u64;
        for (i, &s) in subset.iter().enumerate() {
            debug_assert!(s < self.n);
            debug_assert!(i == 0 || subset[i - 1] < s);
            r += self.choose[s as usize][i + 1];
        }
        r
    }

    /// Inverse of [`rank`](Self::rank); writes the subset in increasing order.
    pub fn unrank(&self, mut rank: u64, out: &mut Vec<u32>) {
        debug_assert!(rank < self.total);
        out.clear();
        out.resize(self.t as usize, 0);
        let mut hi = self.n;
        for i in (1..=self.t as usize).rev() {
            // largest s with C(s, i) <= rank
            let mut s = i as u32 - 1;
            for cand in (i as u32 - 1..hi).rev() {
                if self.choose[cand as usize][i] <= rank {
                    s = cand;
                    break;
                }
            }
            rank -= self.choose[s as usize][i];
            out[i - 1] = s;
            hi = s;
        }
        debug_assert_eq!(rank, 0);
    }
}

/// Dense bitmap over subset ranks with a running popcount.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubsetBitmap {
    words: Vec<u64>,
    bits: u64,
    ones: u64,
}

impl SubsetBitmap {
    pub fn new(bits: u64) -> Self {
        let words = vec![0u64; bits.div_ceil(64) as usize];
        Self { words, bits, ones: 0 }
    }

    pub fn len(&self) -> u64 {
        self.bits
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn ones(&self) -> u64 {
        self.ones
    }

    pub fn zeros(&self) -> u64 {
        self.bits - self.ones
    }

    pub fn is_full(&self) -> bool {
        self.ones == self.bits
    }

    pub fn contains(&self, i: u64) -> bool {
        debug_assert!(i < self.bits);
        self.words[(i / 64) as usize] & (1u64 << (i % 64)) != 0
    }

    /// Sets bit `i`; returns true iff it was previously clear.
    pub fn set(&mut self, i: u64) -> bool {
        debug_assert!(i < self.bits);
        let w = &mut self.words[(i / 64) as usize];
        let mask = 1u64 << (i % 64);
        if *w & mask == 0 {
            *w |= mask;
            self.ones += 1;
            true
        } else {
            false
        }
    }

    /// Rank of the lowest clear bit, if any.
    pub fn first_zero(&self) -> Option<u64> {
        for (wi, &w) in self.words.iter().enumerate() {
            if w != u64::MAX {
                let bit = wi as u64 * 64 + (!w).trailing_zeros() as u64;
                if bit < self.bits {
                    return Some(bit);
                }
            }
        }
        None
    }

    /// Rank of the idx-th clear bit (0-based among the clear bits).
    pub fn select_zero(&self, mut idx: u64) -> Option<u64> {
        for (wi, &w) in self.words.iter().enumerate() {
            let inv = !w;
            let cnt = inv.count_ones() as u64;
            if idx < cnt {
                let mut v = inv;
                for _ in 0..idx {
                    v &= v - 1; // clear lowest set bit
                }
                let bit = wi as u64 * 64 + v.trailing_zeros() as u64;
                return (bit < self.bits).then_some(bit);
            }
            idx -= cnt;
        }
        None
    }

    /// Calls `f` for every clear bit in increasing rank order.
    pub fn for_each_zero(&self, mut f: impl FnMut(u64)) {
        for (wi, &w) in self.words.iter().enumerate() {
            let mut inv = !w;
            while inv != 0 {
                let bit = wi as u64 * 64 + inv.trailing_zeros() as u64;
                if bit >= self.bits {
                    break;
                }
                f(bit);
                inv &= inv - 1;
            }
        }
    }
}

/// Visits every t-combination of `items` (ascending index order, hence
/// lexicographic when `items` is sorted) without allocating per call.
pub fn for_each_combination<T: Copy>(items: &[T], t: usize, mut f: impl FnMut(&[T])) {
    let n = items.len();
    if t > n {
        return;
    }
    if t == 0 {
        f(&[]);
        return;
    }
    let mut idx: Vec<usize> = (0..t).collect();
    let mut buf: Vec<T> = idx.iter().map(|&i| items[i]).collect();
    loop {
        f(&buf);
        // advance the rightmost index that can still move
        let mut i = t;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if idx[i] != i + n - t {
                break;
            }
            if i == 0 {
                return;
            }
        }
        idx[i] += 1;
        for j in i + 1..t {
            idx[j] = idx[j - 1] + 1;
        }
        for j in i..t {
            buf[j] = items[idx[j]];
        }
    }
}
