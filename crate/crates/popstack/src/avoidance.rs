//! Classical, barred, and two-set pattern avoidance.
//!
//! Two-set semantics: a host permutation σ *2-contains* a pair (F, G) when
//! some occurrence γ of a pattern in F has no *saving* occurrence δ of a
//! pattern in G whose index set contains γ's (δ = γ is allowed). σ
//! *2-avoids* (F, G) when no such unsaved occurrence exists, so every
//! forbidden occurrence is part of a saving one. With G empty this is
//! classical avoidance of F.
//!
//! The search enumerates index subsets of the host, smallest size first, and
//! looks their reductions up in hashed pattern tables, so its cost depends
//! on the host length and the pattern lengths present, not on how many
//! patterns the pair holds.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::perm::{
    has_occurrence_containing, occurrences, subpermutation_at, Occurrence, Permutation,
};

/// True when `host` contains none of `patterns` (classical avoidance).
pub fn avoids_all(host: &Permutation, patterns: &[Permutation]) -> bool {
    !patterns.iter().any(|pat| crate::perm::contains(pat, host))
}

/// A pattern in which some entries are barred. The unbarred entries must
/// occur *as part of* an occurrence of the whole pattern; an occurrence of
/// the unbarred part that cannot be extended is a violation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BarredPattern {
    entries: Permutation,
    barred: Vec<bool>,
}

impl BarredPattern {
    pub fn new(entries: Permutation, barred: Vec<bool>) -> Result<Self> {
        if barred.len() != entries.len() {
            return Err(Error::BarredFlagMismatch {
                flags: barred.len(),
                len: entries.len(),
            });
        }
        Ok(Self { entries, barred })
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn barred_flags(&self) -> &[bool] {
        &self.barred
    }

    /// The whole pattern with bars erased.
    pub fn unbar(&self) -> Permutation {
        self.entries.clone()
    }

    /// The pattern restricted to its unbarred entries.
    pub fn removebar(&self) -> Permutation {
        let vals = self
            .entries
            .entries()
            .iter()
            .zip(&self.barred)
            .filter(|(_, &b)| !b)
            .map(|(&v, _)| v)
            .collect();
        Permutation::from_distinct(vals)
    }
}

/// Entries space-separated, barred entries suffixed with `!`:
/// `4 6! 3 1! 5 7 2`.
impl fmt::Display for BarredPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (v, &b) in self.entries.entries().iter().zip(&self.barred) {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{v}")?;
            if b {
                write!(f, "!")?;
            }
            first = false;
        }
        Ok(())
    }
}

/// Accepts the space-separated form; an all-digit token string with no
/// whitespace is read one entry per digit with `!` binding to the digit
/// before it ("46!31!572").
impl FromStr for BarredPattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = |reason: &str| Error::BadBarredText {
            text: s.to_string(),
            reason: reason.to_string(),
        };
        let mut vals = Vec::new();
        let mut bars = Vec::new();
        if s.is_empty() {
            // fall through to the empty pattern
        } else if s.contains(char::is_whitespace) {
            for tok in s.split_whitespace() {
                let (body, barred) = match tok.strip_suffix('!') {
                    Some(body) => (body, true),
                    None => (tok, false),
                };
                vals.push(body.parse::<i32>().map_err(|e| bad(&e.to_string()))?);
                bars.push(barred);
            }
        } else {
            for c in s.chars() {
                if let Some(d) = c.to_digit(10) {
                    vals.push(d as i32);
                    bars.push(false);
                } else if c == '!' {
                    match bars.last_mut() {
                        Some(b) if !*b => *b = true,
                        _ => return Err(bad("dangling '!'")),
                    }
                } else {
                    return Err(bad(&format!("unexpected character {c:?}")));
                }
            }
        }
        let entries = Permutation::new(vals).map_err(|e| bad(&e.to_string()))?;
        BarredPattern::new(entries, bars)
    }
}

/// True when every occurrence of the unbarred part of `pattern` in `host`
/// extends (as an index superset) to an occurrence of the whole pattern.
/// A pattern whose entries are all barred is avoided vacuously.
pub fn barred_avoids(host: &Permutation, pattern: &BarredPattern) -> bool {
    let core = pattern.removebar().reduce();
    if core.is_empty() {
        return true;
    }
    let full = pattern.unbar().reduce();
    occurrences(&core, host)
        .iter()
        .all(|occ| has_occurrence_containing(&full, host, occ.indices()))
}

// Packed form of a reduced permutation of length <= 16: entry ranks minus
// one, four bits each, first entry in the highest used nibble so that within
// one length the integer order is the lexicographic order.
fn packed_key(entries: &[i32], idx: &[usize]) -> u64 {
    let l = idx.len();
    debug_assert!(l <= 16);
    let mut key = 0u64;
    for (slot, &i) in idx.iter().enumerate() {
        let v = entries[i];
        let mut rank = 0u64;
        for &j in idx {
            if entries[j] < v {
                rank += 1;
            }
        }
        key |= rank << (4 * (l - 1 - slot));
    }
    key
}

fn decode_key(len: usize, key: u64) -> Permutation {
    let entries = (0..len)
        .map(|slot| ((key >> (4 * (len - 1 - slot))) & 0xF) as i32 + 1)
        .collect();
    Permutation::from_distinct(entries)
}

/// Visits every `k`-subset of `0..n` in lexicographic order until `f`
/// returns true; reports whether it was stopped.
fn each_combination(n: usize, k: usize, mut f: impl FnMut(&[usize]) -> bool) -> bool {
    if k > n {
        return false;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        if f(&idx) {
            return true;
        }
        let mut i = k;
        while i > 0 && idx[i - 1] == n - k + i - 1 {
            i -= 1;
        }
        if i == 0 {
            return false;
        }
        idx[i - 1] += 1;
        for j in i..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Visits every sorted index set of size `target_len` that contains `base`,
/// in lexicographic order of the added positions.
fn each_superset(
    base: &[usize],
    n: usize,
    target_len: usize,
    mut f: impl FnMut(&[usize]) -> bool,
) -> bool {
    debug_assert!(target_len >= base.len());
    let extra = target_len - base.len();
    let complement: Vec<usize> = (0..n).filter(|i| !base.contains(i)).collect();
    let mut merged = vec![0usize; target_len];
    each_combination(complement.len(), extra, |sel| {
        let mut a = 0;
        let mut b = 0;
        for slot in merged.iter_mut() {
            let take_base = a < base.len() && (b >= sel.len() || base[a] < complement[sel[b]]);
            if take_base {
                *slot = base[a];
                a += 1;
            } else {
                *slot = complement[sel[b]];
                b += 1;
            }
        }
        f(&merged)
    })
}

/// Reduced patterns hashed by length for O(1) "is this subset one of them"
/// lookups.
#[derive(Debug, Default)]
pub(crate) struct PatternTable {
    lens: Vec<usize>,
    sets: HashMap<usize, HashSet<u64>>,
}

impl PatternTable {
    pub(crate) fn new(patterns: &[Permutation]) -> Self {
        let mut sets: HashMap<usize, HashSet<u64>> = HashMap::new();
        for p in patterns {
            debug_assert!(p.is_reduced() && p.len() <= 16);
            let all: Vec<usize> = (0..p.len()).collect();
            sets.entry(p.len())
                .or_default()
                .insert(packed_key(p.entries(), &all));
        }
        let mut lens: Vec<usize> = sets.keys().copied().collect();
        lens.sort_unstable();
        Self { lens, sets }
    }

    fn lens(&self) -> &[usize] {
        &self.lens
    }

    fn has(&self, len: usize, key: u64) -> bool {
        self.sets.get(&len).is_some_and(|s| s.contains(&key))
    }

    /// Does `host` contain any pattern of the table?
    pub(crate) fn contains_any_in(&self, host: &Permutation) -> bool {
        let e = host.entries();
        for &l in self.lens() {
            if l > host.len() {
                break;
            }
            if each_combination(host.len(), l, |idx| self.has(l, packed_key(e, idx))) {
                return true;
            }
        }
        false
    }
}

#[derive(Debug)]
struct CompiledTables {
    forbidden: PatternTable,
    saving: PatternTable,
}

/// A pair (F, G) of reduced pattern sets: F is forbidden, G is saving.
/// Members are reduced on construction, deduplicated, and kept sorted by
/// length then lexicographically.
#[derive(Debug)]
pub struct AvoidancePair {
    forbidden: Vec<Permutation>,
    saving: Vec<Permutation>,
    compiled: OnceLock<CompiledTables>,
}

impl AvoidancePair {
    pub fn new(forbidden: Vec<Permutation>, saving: Vec<Permutation>) -> Result<Self> {
        let canon = |set: Vec<Permutation>| -> Result<Vec<Permutation>> {
            let mut out = Vec::with_capacity(set.len());
            for p in set {
                if p.len() > 16 {
                    return Err(Error::PatternTooLong(p.len()));
                }
                out.push(p.reduce());
            }
            out.sort();
            out.dedup();
            Ok(out)
        };
        Ok(Self {
            forbidden: canon(forbidden)?,
            saving: canon(saving)?,
            compiled: OnceLock::new(),
        })
    }

    /// Classical avoidance of `forbidden` as a pair with no saving set.
    pub fn classical(forbidden: Vec<Permutation>) -> Result<Self> {
        Self::new(forbidden, Vec::new())
    }

    pub fn forbidden(&self) -> &[Permutation] {
        &self.forbidden
    }

    pub fn saving(&self) -> &[Permutation] {
        &self.saving
    }

    fn compiled(&self) -> &CompiledTables {
        self.compiled.get_or_init(|| CompiledTables {
            forbidden: PatternTable::new(&self.forbidden),
            saving: PatternTable::new(&self.saving),
        })
    }
}

impl Clone for AvoidancePair {
    fn clone(&self) -> Self {
        Self {
            forbidden: self.forbidden.clone(),
            saving: self.saving.clone(),
            compiled: OnceLock::new(),
        }
    }
}

impl PartialEq for AvoidancePair {
    fn eq(&self, other: &Self) -> bool {
        self.forbidden == other.forbidden && self.saving == other.saving
    }
}

impl Eq for AvoidancePair {}

fn is_saved(host: &[i32], gamma: &[usize], saving: &PatternTable, n: usize) -> bool {
    let s = gamma.len();
    for &lg in saving.lens() {
        if lg < s {
            continue;
        }
        if lg > n {
            break;
        }
        if each_superset(gamma, n, lg, |delta| {
            saving.has(lg, packed_key(host, delta))
        }) {
            return true;
        }
    }
    false
}

/// Does `host` 2-contain `pair`? Early-exit form of [`two_contains`]; use
/// this when the witness is not needed.
pub fn two_contains_any(host: &Permutation, pair: &AvoidancePair) -> bool {
    let tables = pair.compiled();
    let n = host.len();
    let e = host.entries();
    for &lf in tables.forbidden.lens() {
        if lf > n {
            break;
        }
        let stopped = each_combination(n, lf, |idx| {
            tables.forbidden.has(lf, packed_key(e, idx)) && !is_saved(e, idx, &tables.saving, n)
        });
        if stopped {
            return true;
        }
    }
    false
}

/// True when every forbidden occurrence in `host` is saved.
pub fn two_avoids(host: &Permutation, pair: &AvoidancePair) -> bool {
    !two_contains_any(host, pair)
}

/// An unsaved forbidden occurrence, re-verified at construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoContainmentWitness {
    pattern: Permutation,
    occurrence: Occurrence,
}

impl TwoContainmentWitness {
    fn checked(
        host: &Permutation,
        pair: &AvoidancePair,
        pattern: Permutation,
        idx: Vec<usize>,
    ) -> Self {
        let occurrence = Occurrence::new(host, idx).expect("witness indices are valid");
        let sub = subpermutation_at(host, &occurrence).expect("witness indices in range");
        assert_eq!(
            sub.reduce(),
            pattern,
            "witness subsequence does not reduce to its pattern"
        );
        assert!(
            pair.forbidden().contains(&pattern),
            "witness pattern is not forbidden"
        );
        // independent re-check through the backtracking search: no saving
        // pattern has an occurrence through the witness positions
        for g in pair.saving() {
            assert!(
                !has_occurrence_containing(g, host, occurrence.indices()),
                "witness occurrence turned out to be saved"
            );
        }
        Self {
            pattern,
            occurrence,
        }
    }

    /// The forbidden pattern that occurs unsaved.
    pub fn pattern(&self) -> &Permutation {
        &self.pattern
    }

    /// Where it occurs in the host.
    pub fn occurrence(&self) -> &Occurrence {
        &self.occurrence
    }
}

/// The least unsaved forbidden occurrence, ordering forbidden patterns by
/// length then lexicographically and occurrences by their index lists, or
/// `None` when `host` 2-avoids `pair`. Deterministic by construction.
pub fn two_contains(host: &Permutation, pair: &AvoidancePair) -> Option<TwoContainmentWitness> {
    let tables = pair.compiled();
    let n = host.len();
    let e = host.entries();
    for &lf in tables.forbidden.lens() {
        if lf > n {
            break;
        }
        // full scan of this size level: a later index set may carry a
        // lexicographically earlier pattern
        let mut best: Option<(u64, Vec<usize>)> = None;
        each_combination(n, lf, |idx| {
            let key = packed_key(e, idx);
            if tables.forbidden.has(lf, key)
                && best
                    .as_ref()
                    .is_none_or(|(bk, bi)| (key, idx) < (*bk, bi.as_slice()))
                && !is_saved(e, idx, &tables.saving, n)
            {
                best = Some((key, idx.to_vec()));
            }
            false
        });
        if let Some((key, idx)) = best {
            return Some(TwoContainmentWitness::checked(
                host,
                pair,
                decode_key(lf, key),
                idx,
            ));
        }
    }
    None
}

/// Memoizes [`two_avoids`] verdicts for one pair. Not shared between
/// threads; give each worker its own cache.
#[derive(Debug)]
pub struct Av2Cache {
    pair: AvoidancePair,
    memo: HashMap<Permutation, bool>,
}

impl Av2Cache {
    pub fn new(pair: AvoidancePair) -> Self {
        Self {
            pair,
            memo: HashMap::new(),
        }
    }

    pub fn pair(&self) -> &AvoidancePair {
        &self.pair
    }

    pub fn len(&self) -> usize {
        self.memo.len()
    }

    pub fn is_empty(&self) -> bool {
        self.memo.is_empty()
    }

    /// Cached [`two_avoids`], keyed by the reduced form of `host`.
    pub fn two_avoids(&mut self, host: &Permutation) -> bool {
        let key = if host.is_reduced() {
            host.clone()
        } else {
            host.reduce()
        };
        if let Some(&v) = self.memo.get(&key) {
            return v;
        }
        let v = two_avoids(&key, &self.pair);
        self.memo.insert(key, v);
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn pp(s: &str) -> Vec<Permutation> {
        s.split(',').map(|t| p(t.trim())).collect()
    }

    fn pair(f: &str, g: &str) -> AvoidancePair {
        let f = if f.is_empty() { vec![] } else { pp(f) };
        let g = if g.is_empty() { vec![] } else { pp(g) };
        AvoidancePair::new(f, g).unwrap()
    }

    #[test]
    fn classical_avoidance() {
        assert!(avoids_all(&p("1234"), &pp("321, 231")));
        assert!(!avoids_all(&p("1243"), &pp("321, 21")));
        assert!(avoids_all(&p("1243"), &[]));
        assert!(avoids_all(&Permutation::empty(), &pp("1")));
    }

    #[test]
    fn pair_construction_reduces_and_dedupes() {
        let pr = AvoidancePair::new(
            pp("3241, 3241"),
            vec![p("41352"), p("4 1 3 6 2"), p("5 1 4 6 2")],
        )
        .unwrap();
        assert_eq!(pr.forbidden(), &pp("3241")[..]);
        // both non-reduced members reduce to 41352
        assert_eq!(pr.saving(), &pp("41352")[..]);
    }

    #[test]
    fn example_pair_on_short_hosts() {
        let pr = pair("3241", "41352");
        // 143562 has an unsaved 3241-occurrence (values 4 3 5 2)
        let w = two_contains(&p("143562"), &pr).unwrap();
        assert_eq!(w.pattern(), &p("3241"));
        assert_eq!(w.occurrence().indices(), &[1, 2, 3, 5]);
        assert!(!two_avoids(&p("143562"), &pr));
        // 152463's only 3241-occurrence (5 4 6 3) sits inside 5 2 4 6 3,
        // an occurrence of 41352
        assert!(two_avoids(&p("152463"), &pr));
        assert!(two_contains(&p("152463"), &pr).is_none());
    }

    #[test]
    fn witness_prefers_shorter_then_lexicographic() {
        let pr = pair("43251, 3241", "41352");
        // 3241-occurrences of 6251473 are all saved; the 43251 one is not
        let w = two_contains(&p("6251473"), &pr).unwrap();
        assert_eq!(w.pattern(), &p("43251"));
        assert_eq!(w.occurrence().indices(), &[0, 2, 4, 5, 6]);
        assert_eq!(w.occurrence().one_based(), vec![1, 3, 5, 6, 7]);
        // with only the shorter pattern the same host 2-avoids
        assert!(two_avoids(&p("6251473"), &pair("3241", "41352")));
    }

    #[test]
    fn empty_sets_and_degenerate_cases() {
        // empty F: vacuously avoided by everything
        assert!(two_avoids(&p("321"), &pair("", "")));
        assert!(two_avoids(&Permutation::empty(), &pair("", "")));
        // δ = γ: a forbidden pattern that is also saving never fires alone
        let self_saved = pair("21", "21");
        assert!(two_avoids(&p("21"), &self_saved));
        assert!(two_avoids(&p("321"), &self_saved));
        // classical consistency: empty G reduces to avoids_all
        let f = pp("231, 312");
        let classical = AvoidancePair::classical(f.clone()).unwrap();
        for host in ["1234", "3142", "4321", "2413"] {
            assert_eq!(
                two_avoids(&p(host), &classical),
                avoids_all(&p(host), &f),
                "host {host}"
            );
        }
    }

    #[test]
    fn saving_requires_index_superset_not_mere_coexistence() {
        // host 3 2 4 1 5 6...: craft a host where a 21-occurrence and a
        // 321-occurrence exist but the 21 is not inside any 321
        let pr = pair("21", "321");
        // 3241: the 21-occurrence (2,1) at indices 1,3 lies in 3 2 1
        // (indices 0,1,3); every other inversion also extends. But in 2143
        // the pair (4,3) has no third larger entry before it: unsaved.
        assert!(!two_avoids(&p("2143"), &pr));
        assert!(two_avoids(&p("321"), &pr));
        let w = two_contains(&p("2143"), &pr).unwrap();
        assert_eq!(w.pattern(), &p("21"));
        assert_eq!(w.occurrence().indices(), &[0, 1]);
    }

    #[test]
    fn two_avoids_of_the_known_two_pass_pair() {
        let f = pp("2341, 3241, 3412, 3421, 4123, 4132, 4231, 4312");
        let pr = AvoidancePair::new(f, pp("41352")).unwrap();
        assert!(two_avoids(&p("41352"), &pr));
        assert!(!two_avoids(&p("3241"), &pr));
        assert!(two_avoids(&p("12345"), &pr));
        assert!(!two_avoids(&p("14352"), &pr));
    }

    #[test]
    fn barred_pattern_views() {
        let b: BarredPattern = "4 6! 3 1! 5 7 2".parse().unwrap();
        assert_eq!(b.unbar(), p("4631572"));
        assert_eq!(b.removebar(), p("4 3 5 7 2"));
        assert_eq!(b.removebar().reduce(), p("32451"));
        assert_eq!(b.to_string(), "4 6! 3 1! 5 7 2");
        // compact form parses to the same pattern
        let c: BarredPattern = "46!31!572".parse().unwrap();
        assert_eq!(b, c);

        let plain: BarredPattern = "4 3 5 1 2".parse().unwrap();
        assert_eq!(plain.removebar(), plain.unbar());

        let all_barred: BarredPattern = "1! 2!".parse().unwrap();
        assert_eq!(all_barred.removebar(), Permutation::empty());

        assert!("4 3!!".parse::<BarredPattern>().is_err());
        assert!("!43".parse::<BarredPattern>().is_err());
        assert!("4 4!".parse::<BarredPattern>().is_err());
    }

    #[test]
    fn barred_avoidance_examples() {
        let b: BarredPattern = "4 3! 5 1! 2".parse().unwrap();
        // 12345 has no occurrence of the unbarred core 231 at all
        assert!(barred_avoids(&p("12345"), &b));
        // 452 itself: core occurrence is the whole host, which cannot
        // extend to the 5-entry full pattern
        assert!(!barred_avoids(&p("452"), &b));

        let b: BarredPattern = "4 6! 3 1! 5 7 2".parse().unwrap();
        assert!(!barred_avoids(&p("4731562"), &b));
        assert!(barred_avoids(&p("4631572"), &b));

        // bars on every entry: vacuous
        let all_barred: BarredPattern = "2! 1!".parse().unwrap();
        assert!(barred_avoids(&p("21"), &all_barred));

        // a barred pattern with no bars behaves unlike classical avoidance:
        // every occurrence of the whole pattern extends to itself
        let no_bars: BarredPattern = "21".parse().unwrap();
        assert!(barred_avoids(&p("21"), &no_bars));
        assert!(!avoids_all(&p("21"), &pp("21")));
    }

    #[test]
    fn cache_agrees_with_direct_calls() {
        let mut cache = Av2Cache::new(pair("3241", "41352"));
        for host in ["143562", "152463", "41352", "3241", "1"] {
            let q = p(host);
            let expect = two_avoids(&q, cache.pair());
            assert_eq!(cache.two_avoids(&q), expect, "host {host}");
            assert_eq!(cache.two_avoids(&q), expect, "host {host} (cached)");
        }
        // non-reduced hosts share the entry of their reduced form
        let before = cache.len();
        assert!(cache.two_avoids(&p("9 4 7 2")) == cache.two_avoids(&p("4231")));
        assert_eq!(cache.len(), before + 1);
    }

    #[test]
    fn packed_keys_are_length_local_lex_ordered() {
        let a = packed_key(&[4, 1, 3, 5, 2], &[0, 1, 2, 3, 4]);
        assert_eq!(decode_key(5, a), p("41352"));
        let smaller = packed_key(&[1, 4, 3, 5, 2], &[0, 1, 2, 3, 4]);
        assert!(smaller < a);
        // empty subset packs to the empty permutation
        assert_eq!(decode_key(0, packed_key(&[3, 1, 2], &[])), p(""));
    }
}
