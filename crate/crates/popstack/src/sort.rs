//! Deterministic pop-stack sorting passes.
//!
//! The machine reads the input left to right, keeping a stack whose entries
//! decrease from bottom to top. A token smaller than the current top is
//! pushed; otherwise the whole stack is popped to the output first. One pass
//! over the input therefore reverses each maximal strictly decreasing block
//! in place, which is how [`pop_pass`] computes it.

use std::fmt;

use crate::perm::Permutation;

/// The maximal strictly decreasing blocks of a permutation. Concatenating
/// the blocks in order reproduces it; the last entry of each block is
/// smaller than the first entry of the next.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDecomposition {
    perm: Permutation,
    starts: Vec<usize>,
}

impl BlockDecomposition {
    pub fn of(perm: &Permutation) -> Self {
        let e = perm.entries();
        let mut starts = Vec::new();
        for i in 0..e.len() {
            if i == 0 || e[i] > e[i - 1] {
                starts.push(i);
            }
        }
        Self {
            perm: perm.clone(),
            starts,
        }
    }

    pub fn num_blocks(&self) -> usize {
        self.starts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.starts.is_empty()
    }

    fn end(&self, b: usize) -> usize {
        self.starts
            .get(b + 1)
            .copied()
            .unwrap_or_else(|| self.perm.len())
    }

    /// The entries of block `b` (0-based).
    pub fn block(&self, b: usize) -> &[i32] {
        &self.perm.entries()[self.starts[b]..self.end(b)]
    }

    pub fn blocks(&self) -> impl Iterator<Item = &[i32]> + '_ {
        (0..self.num_blocks()).map(|b| self.block(b))
    }

    /// Which block the position at `index` belongs to.
    pub fn block_index_of(&self, index: usize) -> Option<usize> {
        if index >= self.perm.len() {
            return None;
        }
        Some(match self.starts.binary_search(&index) {
            Ok(b) => b,
            Err(b) => b - 1,
        })
    }
}

/// Blocks joined with `|`, entries space-separated: `9 8 7 3|5 4|6 2 1`.
impl fmt::Display for BlockDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in 0..self.num_blocks() {
            if b > 0 {
                write!(f, "|")?;
            }
            let mut first = true;
            for v in self.block(b) {
                if !first {
                    write!(f, " ")?;
                }
                write!(f, "{v}")?;
                first = false;
            }
        }
        Ok(())
    }
}

fn pass_entries(e: &[i32]) -> Vec<i32> {
    let mut out = Vec::with_capacity(e.len());
    let mut start = 0;
    for i in 0..e.len() {
        if i + 1 == e.len() || e[i + 1] > e[i] {
            out.extend(e[start..=i].iter().rev());
            start = i + 1;
        }
    }
    out
}

/// One pass of the pop stack: every maximal decreasing block is reversed.
pub fn pop_pass(perm: &Permutation) -> Permutation {
    Permutation::from_distinct(pass_entries(perm.entries()))
}

/// `k` passes of the pop stack.
pub fn pop_pass_k(perm: &Permutation, k: usize) -> Permutation {
    let mut e = perm.entries().to_vec();
    for _ in 0..k {
        e = pass_entries(&e);
    }
    Permutation::from_distinct(e)
}

/// Does the permutation sort within `k` passes?
pub fn is_k_sortable(perm: &Permutation, k: usize) -> bool {
    let mut e = perm.entries().to_vec();
    for _ in 0..k {
        if e.windows(2).all(|w| w[0] < w[1]) {
            return true;
        }
        e = pass_entries(&e);
    }
    e.windows(2).all(|w| w[0] < w[1])
}

/// Number of passes needed to sort. Terminates because every pass of an
/// unsorted permutation strictly decreases the inversion count.
pub fn min_passes(perm: &Permutation) -> usize {
    let mut e = perm.entries().to_vec();
    let mut passes = 0;
    while !e.windows(2).all(|w| w[0] < w[1]) {
        e = pass_entries(&e);
        passes += 1;
    }
    passes
}

/// A quick certificate that `perm` is not `k`-sortable: positions `(i, j)`
/// with `i < j`, entry(i) > entry(j), lying in blocks `u ≤ v` with
/// `v - u + 1 ≥ 3^k`. Such an inverted pair survives `k` passes. Returns the
/// lexicographically least such pair, or `None` when the test is
/// inconclusive (which says nothing about sortability).
pub fn unsortability_certificate(perm: &Permutation, k: usize) -> Option<(usize, usize)> {
    let blocks = BlockDecomposition::of(perm);
    let m = blocks.num_blocks();
    let needed = match 3usize.checked_pow(u32::try_from(k).ok()?) {
        Some(t) if t <= m => t,
        _ => return None,
    };
    let e = perm.entries();
    let mut block_of = vec![0usize; e.len()];
    for (i, b) in block_of.iter_mut().enumerate() {
        *b = blocks.block_index_of(i).unwrap();
    }
    for i in 0..e.len() {
        for j in i + 1..e.len() {
            if e[i] > e[j] && block_of[j] - block_of[i] + 1 >= needed {
                return Some((i, j));
            }
        }
    }
    None
}

/// One recorded pass: the input, its block structure, and the output.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TracePass {
    pub input: Permutation,
    pub blocks: BlockDecomposition,
    pub output: Permutation,
}

impl fmt::Display for TracePass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} | {} | {}", self.input, self.blocks, self.output)
    }
}

/// The pass-by-pass record of sorting a permutation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SortTrace {
    passes: Vec<TracePass>,
}

impl SortTrace {
    pub fn passes(&self) -> &[TracePass] {
        &self.passes
    }

    pub fn num_passes(&self) -> usize {
        self.passes.len()
    }

    pub fn final_state(&self) -> Option<&Permutation> {
        self.passes.last().map(|p| &p.output)
    }
}

impl fmt::Display for SortTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, pass) in self.passes.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{pass}")?;
        }
        Ok(())
    }
}

fn trace(perm: &Permutation, max_passes: Option<usize>) -> SortTrace {
    let mut passes = Vec::new();
    let mut cur = perm.clone();
    while !cur.is_increasing() && max_passes.is_none_or(|m| passes.len() < m) {
        let blocks = BlockDecomposition::of(&cur);
        let output = pop_pass(&cur);
        passes.push(TracePass {
            input: cur,
            blocks,
            output: output.clone(),
        });
        cur = output;
    }
    SortTrace { passes }
}

/// Records every pass until the permutation is sorted.
pub fn sort_trace(perm: &Permutation) -> SortTrace {
    trace(perm, None)
}

/// Records up to `max_passes` passes, stopping early once sorted.
pub fn sort_trace_bounded(perm: &Permutation, max_passes: usize) -> SortTrace {
    trace(perm, Some(max_passes))
}
