//! Permutations in one-line notation and classical pattern containment.
//!
//! Entries are arbitrary distinct integers; a permutation is *reduced* when
//! its entry set is exactly {1, …, n}. All positions exposed through the API
//! are 0-based; use [`Occurrence::one_based`] when printing for people.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Default cap on permutation length. Everything in this crate is built for
/// short patterns and exhaustive enumeration; the cap keeps accidental huge
/// inputs from looking like they might finish.
pub const DEFAULT_MAX_LEN: usize = 16;

/// A sequence of distinct integers in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    entries: Vec<i32>,
}

impl Permutation {
    /// Builds a permutation, rejecting duplicates and over-long inputs.
    pub fn new(entries: Vec<i32>) -> Result<Self> {
        Self::with_max_len(entries, DEFAULT_MAX_LEN)
    }

    /// Like [`Permutation::new`] with an explicit length cap. Sorting and
    /// classical containment work at any length; pattern-set operations
    /// ([`crate::AvoidancePair`]) require members of length at most 16.
    pub fn with_max_len(entries: Vec<i32>, max_len: usize) -> Result<Self> {
        if entries.len() > max_len {
            return Err(Error::LengthLimit {
                len: entries.len(),
                max: max_len,
            });
        }
        let mut seen = entries.clone();
        seen.sort_unstable();
        for w in seen.windows(2) {
            if w[0] == w[1] {
                return Err(Error::DuplicateEntry(w[0]));
            }
        }
        Ok(Self { entries })
    }

    /// Internal constructor for values already known to be distinct.
    pub(crate) fn from_distinct(entries: Vec<i32>) -> Self {
        debug_assert!({
            let mut s = entries.clone();
            s.sort_unstable();
            s.windows(2).all(|w| w[0] < w[1])
        });
        Self { entries }
    }

    pub fn empty() -> Self {
        Self {
            entries: Vec::new(),
        }
    }

    /// The identity permutation 1 2 … n.
    pub fn identity(n: usize) -> Self {
        Self {
            entries: (1..=n as i32).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[i32] {
        &self.entries
    }

    /// True when the entry set is exactly {1, …, n}.
    pub fn is_reduced(&self) -> bool {
        let mut s = self.entries.clone();
        s.sort_unstable();
        s.iter().enumerate().all(|(i, &v)| v == i as i32 + 1)
    }

    pub fn is_increasing(&self) -> bool {
        self.entries.windows(2).all(|w| w[0] < w[1])
    }

    /// Replaces each entry by its rank, giving the order-isomorphic
    /// permutation on {1, …, n}.
    pub fn reduce(&self) -> Permutation {
        let ranks = self
            .entries
            .iter()
            .map(|a| self.entries.iter().filter(|b| **b < *a).count() as i32 + 1)
            .collect();
        Permutation::from_distinct(ranks)
    }

    /// Number of pairs i < j with entry(i) > entry(j).
    pub fn inversions(&self) -> usize {
        let e = &self.entries;
        let mut count = 0;
        for i in 0..e.len() {
            for j in i + 1..e.len() {
                if e[i] > e[j] {
                    count += 1;
                }
            }
        }
        count
    }
}

// Length first, then entries lexicographically: the canonical order used for
// pattern sets and file output.
impl Ord for Permutation {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.entries.cmp(&other.entries))
    }
}

impl PartialOrd for Permutation {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in &self.entries {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{v}")?;
            first = false;
        }
        Ok(())
    }
}

/// Accepts space-separated one-line notation ("4 1 3 5 2"). A string of
/// digits with no whitespace is read one entry per digit ("41352"), so a
/// singleton with a multi-digit entry needs the space-separated form.
impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Permutation::empty());
        }
        let bad = |reason: &str| Error::BadPermutationText {
            text: s.to_string(),
            reason: reason.to_string(),
        };
        let entries: Vec<i32> = if s.contains(char::is_whitespace) {
            s.split_whitespace()
                .map(|tok| tok.parse::<i32>().map_err(|e| bad(&e.to_string())))
                .collect::<Result<_>>()?
        } else if s.bytes().all(|b| b.is_ascii_digit()) {
            s.bytes().map(|b| (b - b'0') as i32).collect()
        } else {
            vec![s.parse::<i32>().map_err(|e| bad(&e.to_string()))?]
        };
        Permutation::new(entries)
    }
}

/// A strictly increasing list of positions in some host permutation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Occurrence {
    indices: Vec<usize>,
}

impl Occurrence {
    pub fn new(host: &Permutation, indices: Vec<usize>) -> Result<Self> {
        if !indices.windows(2).all(|w| w[0] < w[1]) {
            return Err(Error::IndicesNotIncreasing);
        }
        if let Some(&last) = indices.last() {
            if last >= host.len() {
                return Err(Error::IndexOutOfRange {
                    index: last,
                    len: host.len(),
                });
            }
        }
        Ok(Self { indices })
    }

    pub(crate) fn from_sorted(indices: Vec<usize>) -> Self {
        debug_assert!(indices.windows(2).all(|w| w[0] < w[1]));
        Self { indices }
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    /// 1-based copy of the index list, for display.
    pub fn one_based(&self) -> Vec<usize> {
        self.indices.iter().map(|i| i + 1).collect()
    }
}

impl fmt::Display for Occurrence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for i in self.one_based() {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{i}")?;
            first = false;
        }
        Ok(())
    }
}

/// The entries of `host` selected by `occ`, as a permutation.
pub fn subpermutation_at(host: &Permutation, occ: &Occurrence) -> Result<Permutation> {
    let mut vals = Vec::with_capacity(occ.len());
    for &i in occ.indices() {
        if i >= host.len() {
            return Err(Error::IndexOutOfRange {
                index: i,
                len: host.len(),
            });
        }
        vals.push(host.entries[i]);
    }
    Ok(Permutation::from_distinct(vals))
}

/// Same length and same relative order everywhere.
pub fn is_order_isomorphic(a: &Permutation, b: &Permutation) -> bool {
    a.len() == b.len() && a.reduce() == b.reduce()
}

/// Backtracking occurrence search. Positions are chosen left to right, so
/// results come out in lexicographic order of their index lists. `required`
/// restricts the search to occurrences whose index set contains all the
/// given (strictly increasing) positions.
fn search(
    pattern: &Permutation,
    host: &Permutation,
    required: &[usize],
    first_only: bool,
) -> Vec<Occurrence> {
    let k = pattern.len();
    let n = host.len();
    debug_assert!(required.windows(2).all(|w| w[0] < w[1]));
    if k > n || required.len() > k || required.iter().any(|&r| r >= n) {
        return Vec::new();
    }
    if k == 0 {
        return vec![Occurrence::from_sorted(Vec::new())];
    }

    let p = pattern.entries();
    let h = host.entries();
    let mut chosen: Vec<usize> = Vec::with_capacity(k);
    let mut out: Vec<Occurrence> = Vec::new();

    fn rec(
        p: &[i32],
        h: &[i32],
        required: &[usize],
        req_done: usize,
        chosen: &mut Vec<usize>,
        out: &mut Vec<Occurrence>,
        first_only: bool,
    ) -> bool {
        let slot = chosen.len();
        let k = p.len();
        // remaining required positions must fit in the remaining slots
        if required.len() - req_done > k - slot {
            return false;
        }
        if slot == k {
            out.push(Occurrence::from_sorted(chosen.clone()));
            return first_only;
        }
        // value window implied by the pattern's relative order so far
        let mut lo = i32::MIN;
        let mut hi = i32::MAX;
        for j in 0..slot {
            let v = h[chosen[j]];
            if p[j] < p[slot] {
                lo = lo.max(v);
            } else {
                hi = hi.min(v);
            }
        }
        let start = chosen.last().map_or(0, |&c| c + 1);
        let next_required = required.get(req_done).copied();
        for pos in start..=h.len() - (k - slot) {
            if let Some(r) = next_required {
                if pos > r {
                    break;
                }
            }
            let v = h[pos];
            if v <= lo || v >= hi {
                continue;
            }
            let covered = next_required == Some(pos);
            chosen.push(pos);
            let stop = rec(
                p,
                h,
                required,
                req_done + usize::from(covered),
                chosen,
                out,
                first_only,
            );
            chosen.pop();
            if stop {
                return true;
            }
        }
        false
    }

    rec(p, h, required, 0, &mut chosen, &mut out, first_only);
    out
}

/// True when `host` has a subsequence order-isomorphic to `pattern`.
pub fn contains(pattern: &Permutation, host: &Permutation) -> bool {
    !search(pattern, host, &[], true).is_empty()
}

/// All occurrences of `pattern` in `host`, in lexicographic index order.
pub fn occurrences(pattern: &Permutation, host: &Permutation) -> Vec<Occurrence> {
    search(pattern, host, &[], false)
}

/// All occurrences whose index set contains every position in `required`
/// (which must be strictly increasing).
pub fn occurrences_containing(
    pattern: &Permutation,
    host: &Permutation,
    required: &[usize],
) -> Vec<Occurrence> {
    assert!(
        required.windows(2).all(|w| w[0] < w[1]),
        "required positions must be strictly increasing"
    );
    search(pattern, host, required, false)
}

/// Early-exit form of [`occurrences_containing`].
pub fn has_occurrence_containing(
    pattern: &Permutation,
    host: &Permutation,
    required: &[usize],
) -> bool {
    assert!(
        required.windows(2).all(|w| w[0] < w[1]),
        "required positions must be strictly increasing"
    );
    !search(pattern, host, required, true).is_empty()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn parse_both_forms() {
        assert_eq!(p("41352").entries(), &[4, 1, 3, 5, 2]);
        assert_eq!(p("4 1 3 5 2"), p("41352"));
        assert_eq!(p("  10 2 7  ").entries(), &[10, 2, 7]);
        assert_eq!(p("-3 5 0").entries(), &[-3, 5, 0]);
        assert_eq!(p(""), Permutation::empty());
        assert!("4 1 x".parse::<Permutation>().is_err());
        assert!("1 2 1".parse::<Permutation>().is_err());
    }

    #[test]
    fn display_round_trips() {
        let q = p("987354621");
        assert_eq!(q.to_string(), "9 8 7 3 5 4 6 2 1");
        assert_eq!(q.to_string().parse::<Permutation>().unwrap(), q);
        assert_eq!(Permutation::empty().to_string(), "");
    }

    #[test]
    fn rejects_duplicates_and_long_inputs() {
        assert!(matches!(
            Permutation::new(vec![1, 2, 2]),
            Err(Error::DuplicateEntry(2))
        ));
        assert!(matches!(
            Permutation::new((1..=17).collect()),
            Err(Error::LengthLimit { len: 17, max: 16 })
        ));
        assert!(Permutation::with_max_len((1..=17).collect(), 20).is_ok());
    }

    #[test]
    fn reduce_examples() {
        assert_eq!(p("9 4 7 2").reduce(), p("4231"));
        assert_eq!(p("947 2").reduce(), p("21"));
        assert_eq!(p("41352").reduce(), p("41352"));
        assert_eq!(Permutation::empty().reduce(), Permutation::empty());
        assert_eq!(p("-5 100 3").reduce(), p("132"));
    }

    #[test]
    fn reduced_flag() {
        assert!(p("41352").is_reduced());
        assert!(Permutation::empty().is_reduced());
        assert!(!p("9 4 7 2").is_reduced());
        assert!(!p("0 1 2").is_reduced());
    }

    #[test]
    fn order_isomorphism() {
        assert!(is_order_isomorphic(&p("9 4 7 2"), &p("8 3 5 1")));
        assert!(!is_order_isomorphic(&p("9 4 7 2"), &p("12")));
        assert!(!is_order_isomorphic(&p("123"), &p("12")));
        assert!(is_order_isomorphic(&Permutation::empty(), &p("")));
    }

    #[test]
    fn inversion_counts() {
        assert_eq!(p("41352").inversions(), 5);
        assert_eq!(p("321").inversions(), 3);
        assert_eq!(p("12345").inversions(), 0);
        assert_eq!(Permutation::empty().inversions(), 0);
    }

    #[test]
    fn containment_basics() {
        assert!(contains(&p("21"), &p("312")));
        assert!(!contains(&p("321"), &p("1234")));
        assert!(contains(&Permutation::empty(), &p("312")));
        assert!(contains(&Permutation::empty(), &Permutation::empty()));
        assert!(!contains(&p("12"), &p("1")));
        // every permutation contains itself
        assert!(contains(&p("41352"), &p("41352")));
    }

    #[test]
    fn occurrences_of_3241_in_41352() {
        let occs = occurrences(&p("3241"), &p("41352"));
        assert_eq!(occs.len(), 1);
        assert_eq!(occs[0].indices(), &[0, 2, 3, 4]);
        let sub = subpermutation_at(&p("41352"), &occs[0]).unwrap();
        assert_eq!(sub, p("4352"));
        assert_eq!(sub.reduce(), p("3241"));
    }

    #[test]
    fn occurrences_come_out_lexicographic() {
        let occs = occurrences(&p("12"), &p("1234"));
        let idx: Vec<_> = occs.iter().map(|o| o.indices().to_vec()).collect();
        assert_eq!(
            idx,
            vec![
                vec![0, 1],
                vec![0, 2],
                vec![0, 3],
                vec![1, 2],
                vec![1, 3],
                vec![2, 3]
            ]
        );
    }

    #[test]
    fn constrained_occurrences() {
        // occurrences of 21 in 3142 through position 0
        let occs = occurrences_containing(&p("21"), &p("3142"), &[0]);
        let idx: Vec<_> = occs.iter().map(|o| o.indices().to_vec()).collect();
        assert_eq!(idx, vec![vec![0, 1], vec![0, 3]]);
        assert!(has_occurrence_containing(&p("21"), &p("3142"), &[0]));
        assert!(!has_occurrence_containing(&p("12"), &p("21"), &[1]));
        // empty pattern has the empty occurrence only when nothing is required
        assert_eq!(occurrences_containing(&p(""), &p("312"), &[]).len(), 1);
        assert!(occurrences_containing(&p(""), &p("312"), &[0]).is_empty());
        // a required position late in the host must not be crowded out by
        // earlier choices that fill the last slot
        let occs = occurrences_containing(&p("21"), &p("321"), &[0, 2]);
        let idx: Vec<_> = occs.iter().map(|o| o.indices().to_vec()).collect();
        assert_eq!(idx, vec![vec![0, 2]]);
        for required in [vec![2], vec![1, 2], vec![0, 2]] {
            for o in occurrences_containing(&p("21"), &p("4321"), &required) {
                assert!(required.iter().all(|r| o.indices().contains(r)));
            }
        }
    }

    #[test]
    fn subpermutation_bounds_are_checked() {
        let host = p("41352");
        let occ = Occurrence::new(&host, vec![0, 4]).unwrap();
        assert_eq!(subpermutation_at(&host, &occ).unwrap(), p("42"));
        assert!(matches!(
            Occurrence::new(&host, vec![0, 5]),
            Err(Error::IndexOutOfRange { index: 5, len: 5 })
        ));
        assert!(matches!(
            Occurrence::new(&host, vec![2, 2]),
            Err(Error::IndicesNotIncreasing)
        ));
        let shorter = p("312");
        assert!(subpermutation_at(&shorter, &occ).is_err());
    }

    #[test]
    fn occurrence_display_is_one_based() {
        let host = p("41352");
        let occ = Occurrence::new(&host, vec![0, 2, 3, 4]).unwrap();
        assert_eq!(occ.to_string(), "1 3 4 5");
        assert_eq!(occ.one_based(), vec![1, 3, 4, 5]);
    }

    #[test]
    fn canonical_order_is_length_then_lex() {
        let mut v = vec![p("21"), p("132"), p("1"), p("123"), p("12")];
        v.sort();
        assert_eq!(v, vec![p("1"), p("12"), p("21"), p("123"), p("132")]);
    }
}
