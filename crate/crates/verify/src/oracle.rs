//! Small independent calculations used as expected values.

/// Partitions of `k` into parts drawn from `lo..=hi`, counted by recursion
/// on the largest part.
pub(crate) fn restricted_partitions(k: u32, lo: u32, hi: u32) -> u64 {
    fn go(k: u32, lo: u32, max: u32) -> u64 {
        if k == 0 {
            return 1;
        }
        (lo..=max.min(k)).map(|p| go(k - p, lo, p)).sum()
    }
    if lo > hi {
        return u64::from(k == 0);
    }
    go(k, lo, hi)
}

/// `n choose k` by the multiplicative formula.
pub(crate) fn choose(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}
