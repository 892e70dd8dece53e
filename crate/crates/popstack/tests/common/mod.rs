#![allow(dead_code)]

//! Brute-force oracles shared by the integration suites. Everything here
//! recomputes from first principles: its own reduction, its own subset
//! scans, its own stack machine. Agreement with the library is the point,
//! so nothing below calls the code paths it is used to check.

use std::collections::HashSet;

use popstack::{AvoidancePair, Permutation};

pub fn p(s: &str) -> Permutation {
    s.parse().unwrap()
}

pub fn pats(list: &str) -> Vec<Permutation> {
    list.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(p)
        .collect()
}

pub fn pair_of(f: &str, g: &str) -> AvoidancePair {
    AvoidancePair::new(pats(f), pats(g)).unwrap()
}

/// All permutations of 1..=n, generated by inserting n into every position
/// of every permutation of 1..=n-1.
pub fn all_perms(n: usize) -> Vec<Vec<i32>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for base in all_perms(n - 1) {
        for pos in 0..=base.len() {
            let mut v = base.clone();
            v.insert(pos, n as i32);
            out.push(v);
        }
    }
    out
}

pub fn brute_red(vals: &[i32]) -> Vec<i32> {
    let mut sorted = vals.to_vec();
    sorted.sort_unstable();
    vals.iter()
        .map(|v| sorted.iter().position(|s| s == v).unwrap() as i32 + 1)
        .collect()
}

/// Literal one-pass simulation: push while the next token is below the
/// stack top, pop everything when it exceeds it, flush at the end.
pub fn machine_pass(perm: &Permutation) -> Permutation {
    let mut out = Vec::new();
    let mut stack: Vec<i32> = Vec::new();
    for &x in perm.entries() {
        if stack.last().is_some_and(|&top| x > top) {
            while let Some(v) = stack.pop() {
                out.push(v);
            }
        }
        stack.push(x);
    }
    while let Some(v) = stack.pop() {
        out.push(v);
    }
    Permutation::new(out).unwrap()
}

/// Block id of every position: a new maximal descending run starts at
/// every ascent.
pub fn block_ids(e: &[i32]) -> Vec<usize> {
    let mut ids = vec![0usize; e.len()];
    for i in 1..e.len() {
        ids[i] = ids[i - 1] + usize::from(e[i - 1] < e[i]);
    }
    ids
}

pub fn cross_block_inversions(e: &[i32]) -> usize {
    let ids = block_ids(e);
    let mut count = 0;
    for i in 0..e.len() {
        for j in i + 1..e.len() {
            if e[i] > e[j] && ids[i] != ids[j] {
                count += 1;
            }
        }
    }
    count
}

pub fn for_each_subset(n: usize, k: usize, f: &mut impl FnMut(&[usize])) {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
        if cur.len() == k {
            f(cur);
            return;
        }
        let remaining = k - cur.len();
        for i in start..=n.saturating_sub(remaining) {
            cur.push(i);
            rec(i + 1, n, k, cur, f);
            cur.pop();
        }
    }
    if k <= n {
        rec(0, n, k, &mut Vec::with_capacity(k), f);
    }
}

pub fn brute_occurrences(pattern: &Permutation, host: &Permutation) -> Vec<Vec<usize>> {
    let e = host.entries();
    let target = pattern.entries().to_vec();
    let mut out = Vec::new();
    for_each_subset(e.len(), target.len(), &mut |idx| {
        let sub: Vec<i32> = idx.iter().map(|&i| e[i]).collect();
        if brute_red(&sub) == target {
            out.push(idx.to_vec());
        }
    });
    out
}

pub fn brute_contains(pattern: &Permutation, host: &Permutation) -> bool {
    !brute_occurrences(pattern, host).is_empty()
}

fn entry_set(patterns: &[Permutation]) -> HashSet<Vec<i32>> {
    patterns.iter().map(|q| q.entries().to_vec()).collect()
}

fn saved_by_superset(e: &[i32], gamma: &[usize], gset: &HashSet<Vec<i32>>) -> bool {
    let n = e.len();
    for size in gamma.len()..=n {
        let mut found = false;
        for_each_subset(n, size, &mut |idx| {
            if found || !gamma.iter().all(|g| idx.contains(g)) {
                return;
            }
            let sub: Vec<i32> = idx.iter().map(|&i| e[i]).collect();
            if gset.contains(&brute_red(&sub)) {
                found = true;
            }
        });
        if found {
            return true;
        }
    }
    false
}

/// Definition-following two-containment: scan subset sizes from small to
/// large; at the first size with an unsaved forbidden occurrence, report
/// the least such (pattern, index set).
pub fn naive_two_contains(
    host: &Permutation,
    pair: &AvoidancePair,
) -> Option<(Permutation, Vec<usize>)> {
    let e = host.entries();
    let n = e.len();
    let fset = entry_set(pair.forbidden());
    let gset = entry_set(pair.saving());
    for size in 1..=n {
        let mut best: Option<(Vec<i32>, Vec<usize>)> = None;
        for_each_subset(n, size, &mut |idx| {
            let sub: Vec<i32> = idx.iter().map(|&i| e[i]).collect();
            let r = brute_red(&sub);
            if !fset.contains(&r) || saved_by_superset(e, idx, &gset) {
                return;
            }
            let cand = (r, idx.to_vec());
            if best.as_ref().is_none_or(|b| cand < *b) {
                best = Some(cand);
            }
        });
        if let Some((r, idx)) = best {
            return Some((Permutation::new(r).unwrap(), idx));
        }
    }
    None
}

pub fn naive_two_avoids(host: &Permutation, pair: &AvoidancePair) -> bool {
    naive_two_contains(host, pair).is_none()
}

/// Splitmix-style deterministic generator for corpus construction.
pub struct Lcg(u64);

impl Lcg {
    pub fn new(seed: u64) -> Self {
        Lcg(seed)
    }

    pub fn next(&mut self) -> u64 {
        self.0 = self
            .0
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        self.0
    }

    pub fn below(&mut self, n: usize) -> usize {
        ((self.next() >> 33) % n as u64) as usize
    }
}
