//! Exhaustive enumeration of reduced permutations in lexicographic order.
//!
//! Work that sweeps all n! permutations is guarded by an explicit budget:
//! callers pass the largest length they are willing to enumerate, and
//! anything beyond it is refused rather than attempted.

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Default budget: lengths up to 10 (10! = 3,628,800) enumerate in seconds.
pub const DEFAULT_ENUM_LIMIT: usize = 10;

/// Hard ceiling on any budget; see [`crate::perm::DEFAULT_MAX_LEN`].
pub const MAX_ENUM_LIMIT: usize = 16;

/// Refuses lengths beyond `limit` (or beyond the hard ceiling).
pub fn check_budget(n: usize, limit: usize) -> Result<()> {
    let limit = limit.min(MAX_ENUM_LIMIT);
    if n > limit {
        return Err(Error::EnumerationBudget {
            requested: n,
            limit,
        });
    }
    Ok(())
}

pub fn factorial(n: usize) -> Result<u64> {
    let mut f: u64 = 1;
    for i in 2..=n as u64 {
        f = f.checked_mul(i).ok_or(Error::Overflow("factorial"))?;
    }
    Ok(f)
}

/// The permutation of {1, …, n} at position `rank` in lexicographic order
/// (rank 0 is the identity). `rank` must be below n! and `n` at most 16.
pub fn unrank(n: usize, mut rank: u64) -> Permutation {
    assert!(n <= MAX_ENUM_LIMIT, "unrank beyond the enumeration ceiling");
    let mut avail: Vec<i32> = (1..=n as i32).collect();
    let mut out = Vec::with_capacity(n);
    for slot in (0..n).rev() {
        let f = factorial(slot).expect("small factorial");
        let d = (rank / f) as usize;
        rank %= f;
        out.push(avail.remove(d));
    }
    debug_assert_eq!(rank, 0, "rank exceeded n!");
    Permutation::from_distinct(out)
}

/// All reduced permutations of length `n` in lexicographic order.
pub fn reduced_permutations(n: usize) -> LexPermutations {
    LexPermutations {
        next: Some((1..=n as i32).collect()),
    }
}

pub struct LexPermutations {
    next: Option<Vec<i32>>,
}

impl Iterator for LexPermutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let cur = self.next.take()?;
        let out = Permutation::from_distinct(cur.clone());
        self.next = next_permutation(cur);
        Some(out)
    }
}

fn next_permutation(mut e: Vec<i32>) -> Option<Vec<i32>> {
    if e.len() < 2 {
        return None;
    }
    let mut i = e.len() - 1;
    while i > 0 && e[i - 1] >= e[i] {
        i -= 1;
    }
    if i == 0 {
        return None;
    }
    let mut j = e.len() - 1;
    while e[j] <= e[i - 1] {
        j -= 1;
    }
    e.swap(i - 1, j);
    e[i..].reverse();
    Some(e)
}
