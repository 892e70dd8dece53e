//! Construction, reduction, and brute-force verification of (F, G) pairs
//! characterizing k-pass sortability.
//!
//! The construction enumerates Ω₁, the short non-k-sortable permutations,
//! and Ω₂, the k-sortable permutations containing one of them; two-avoidance
//! of (Ω₁, Ω₂) then matches k-sortability on permutations up to the caps.
//! Truncating either set keeps the inclusion Av₂ ⊆ {k-sortable}: dropping
//! saving patterns only shrinks Av₂, and dropping forbidden patterns only
//! grows the sortable side it is compared against.
//!
//! The three reduction steps discard provably redundant members. They do
//! not promise a minimal pair; see [`reduce_pair`].

use std::collections::HashMap;

use rayon::prelude::*;

use crate::avoidance::{two_avoids, AvoidancePair, PatternTable};
use crate::enumerate::{check_budget, factorial, unrank};
use crate::error::{Error, Result};
use crate::perm::{contains, has_occurrence_containing, occurrences, Permutation};
use crate::sort::is_k_sortable;

/// Length caps derived from a characterization of (k−1)-sortability whose
/// forbidden patterns have length at most `max_forbidden_len`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CharacterizationBounds {
    /// Longest forbidden pattern in the prior pair.
    pub max_forbidden_len: usize,
    /// Sufficient cap for the non-sortable set: 3 · max_forbidden_len.
    pub forbidden_cap: usize,
    /// Sufficient cap for the saving set: 3^(k+2) · max_forbidden_len.
    pub saving_cap: u64,
}

/// Derives the sufficient caps for characterizing k-pass sortability from
/// the forbidden set of a (k−1)-pass characterization.
pub fn bounds(prior_forbidden: &[Permutation], k: usize) -> Result<CharacterizationBounds> {
    if k == 0 {
        return Err(Error::BadPassCount);
    }
    let max_forbidden_len = prior_forbidden
        .iter()
        .map(Permutation::len)
        .max()
        .ok_or(Error::EmptyForbiddenSet)?;
    let forbidden_cap = max_forbidden_len
        .checked_mul(3)
        .ok_or(Error::Overflow("forbidden cap"))?;
    let exponent = u32::try_from(k + 2).map_err(|_| Error::Overflow("saving cap"))?;
    let saving_cap = 3u64
        .checked_pow(exponent)
        .and_then(|p| p.checked_mul(max_forbidden_len as u64))
        .ok_or(Error::Overflow("saving cap"))?;
    Ok(CharacterizationBounds {
        max_forbidden_len,
        forbidden_cap,
        saving_cap,
    })
}

/// What to construct: the pass count and the two length caps. When a prior
/// pair is given the caps are validated against [`bounds`].
#[derive(Debug, Clone)]
pub struct ConstructionConfig {
    pub k: usize,
    pub omega1_cap: usize,
    pub omega2_cap: usize,
    pub prior: Option<AvoidancePair>,
}

impl ConstructionConfig {
    pub fn new(
        k: usize,
        omega1_cap: usize,
        omega2_cap: usize,
        prior: Option<AvoidancePair>,
    ) -> Result<Self> {
        if k == 0 {
            return Err(Error::BadPassCount);
        }
        if omega1_cap == 0 || omega2_cap == 0 {
            return Err(Error::ZeroCap);
        }
        if let Some(prior_pair) = &prior {
            let b = bounds(prior_pair.forbidden(), k)?;
            if omega1_cap > b.forbidden_cap {
                return Err(Error::CapExceedsBound {
                    cap: omega1_cap,
                    bound: b.forbidden_cap,
                    what: "the non-sortable set",
                });
            }
            if omega2_cap as u64 > b.saving_cap {
                return Err(Error::CapExceedsBound {
                    cap: omega2_cap,
                    bound: usize::try_from(b.saving_cap).unwrap_or(usize::MAX),
                    what: "the saving set",
                });
            }
        }
        Ok(Self {
            k,
            omega1_cap,
            omega2_cap,
            prior,
        })
    }

    /// Whether omega1_cap equals the full derived cap; `None` without a
    /// prior pair to derive it from.
    pub fn omega1_cap_is_exact(&self) -> Option<bool> {
        let prior = self.prior.as_ref()?;
        let b = bounds(prior.forbidden(), self.k).ok()?;
        Some(self.omega1_cap == b.forbidden_cap)
    }
}

/// All reduced permutations of length at most `max_len` that are not
/// k-sortable, sorted by length then lexicographically.
pub fn enumerate_unsortable(k: usize, max_len: usize, limit: usize) -> Result<Vec<Permutation>> {
    check_budget(max_len, limit)?;
    let mut out = Vec::new();
    for n in 1..=max_len {
        let total = factorial(n)?;
        let mut chunk: Vec<Permutation> = (0..total)
            .into_par_iter()
            .filter_map(|rank| {
                let p = unrank(n, rank);
                (!is_k_sortable(&p, k)).then_some(p)
            })
            .collect();
        chunk.sort();
        out.append(&mut chunk);
    }
    Ok(out)
}

/// All reduced k-sortable permutations of length at most `max_len` that
/// contain some member of `forbidden`, sorted by length then
/// lexicographically. Empty when `forbidden` is.
pub fn enumerate_saving(
    k: usize,
    forbidden: &[Permutation],
    max_len: usize,
    limit: usize,
) -> Result<Vec<Permutation>> {
    check_budget(max_len, limit)?;
    if forbidden.is_empty() {
        return Ok(Vec::new());
    }
    let reduced: Vec<Permutation> = forbidden
        .iter()
        .map(|p| {
            if p.len() > 16 {
                Err(Error::PatternTooLong(p.len()))
            } else {
                Ok(p.reduce())
            }
        })
        .collect::<Result<_>>()?;
    let table = PatternTable::new(&reduced);
    let mut out = Vec::new();
    for n in 1..=max_len {
        let total = factorial(n)?;
        let mut chunk: Vec<Permutation> = (0..total)
            .into_par_iter()
            .filter_map(|rank| {
                let p = unrank(n, rank);
                (is_k_sortable(&p, k) && table.contains_any_in(&p)).then_some(p)
            })
            .collect();
        chunk.sort();
        out.append(&mut chunk);
    }
    Ok(out)
}

/// Runs both enumerations of `config` and assembles the candidate pair.
pub fn construct_pair(config: &ConstructionConfig, limit: usize) -> Result<AvoidancePair> {
    let omega1 = enumerate_unsortable(config.k, config.omega1_cap, limit)?;
    let omega2 = if omega1.is_empty() {
        Vec::new()
    } else {
        enumerate_saving(config.k, &omega1, config.omega2_cap, limit)?
    };
    AvoidancePair::new(omega1, omega2)
}

/// Drops saving patterns that contain no forbidden pattern. Such a pattern
/// can never be the reduction of a superset of a forbidden occurrence, so it
/// never saves anything.
pub fn prune_irrelevant_saving(pair: &AvoidancePair) -> AvoidancePair {
    let table = PatternTable::new(pair.forbidden());
    let saving: Vec<Permutation> = pair
        .saving()
        .iter()
        .filter(|alpha| table.contains_any_in(alpha))
        .cloned()
        .collect();
    AvoidancePair::new(pair.forbidden().to_vec(), saving).expect("members already validated")
}

/// Drops a saving pattern α when a strictly smaller saving pattern β ⊑ α
/// covers it inside α: every occurrence of a forbidden pattern within α
/// extends to an occurrence of β within α. Any occurrence saved through a
/// copy of α is then still saved through the copy of β sitting inside it.
/// Repeats until nothing qualifies.
///
/// Covering must hold occurrence by occurrence, not just pattern by
/// pattern. With forbidden {21} and saving {312, 3142}, every forbidden
/// pattern inside 3142 is also inside 312, yet dropping 3142 changes the
/// verdict on the host 3142 itself: its occurrence of 21 at the last two
/// positions extends to no copy of 312.
pub fn prune_dominated_saving(pair: &AvoidancePair) -> AvoidancePair {
    let mut saving = pair.saving().to_vec();
    loop {
        let mut removed = None;
        'scan: for (ai, alpha) in saving.iter().enumerate() {
            for beta in &saving {
                if beta.len() < alpha.len()
                    && contains(beta, alpha)
                    && covers_within(pair.forbidden(), beta, alpha)
                {
                    removed = Some(ai);
                    break 'scan;
                }
            }
        }
        match removed {
            Some(i) => {
                saving.remove(i);
            }
            None => break,
        }
    }
    AvoidancePair::new(pair.forbidden().to_vec(), saving).expect("members already validated")
}

/// True when every occurrence of every `forbidden` pattern in `alpha`
/// extends to an occurrence of `beta` in `alpha`.
fn covers_within(forbidden: &[Permutation], beta: &Permutation, alpha: &Permutation) -> bool {
    forbidden.iter().all(|kappa| {
        occurrences(kappa, alpha)
            .iter()
            .all(|occ| has_occurrence_containing(beta, alpha, occ.indices()))
    })
}

/// Drops a forbidden pattern λ when a strictly smaller forbidden κ ⊑ λ is
/// contained in no saving pattern: every occurrence of λ brings an
/// occurrence of κ that can never be saved, so λ adds nothing. Repeats
/// until nothing qualifies.
pub fn prune_implied_forbidden(pair: &AvoidancePair) -> AvoidancePair {
    let mut unsavable: HashMap<Permutation, bool> = HashMap::new();
    let mut forbidden = pair.forbidden().to_vec();
    loop {
        let mut removed = None;
        'scan: for (li, lambda) in forbidden.iter().enumerate() {
            for kappa in &forbidden {
                if kappa.len() >= lambda.len() || !contains(kappa, lambda) {
                    continue;
                }
                let is_unsavable = *unsavable
                    .entry(kappa.clone())
                    .or_insert_with(|| !pair.saving().iter().any(|alpha| contains(kappa, alpha)));
                if is_unsavable {
                    removed = Some(li);
                    break 'scan;
                }
            }
        }
        match removed {
            Some(i) => {
                forbidden.remove(i);
            }
            None => break,
        }
    }
    AvoidancePair::new(forbidden, pair.saving().to_vec()).expect("members already validated")
}

/// Applies the three pruning steps in order, looping to a fixed point. When
/// `check_bound` is positive, additionally verifies that two-avoidance of
/// the result agrees with the input on every permutation of length at most
/// `check_bound` (subject to the enumeration budget `limit`).
///
/// The result is sound but not claimed minimal or unique: a forbidden
/// pattern whose smaller forbidden sub-patterns are all containable in
/// saving patterns is kept even when a cleverer argument could discard it.
pub fn reduce_pair(
    pair: &AvoidancePair,
    check_bound: usize,
    limit: usize,
) -> Result<AvoidancePair> {
    let mut cur = pair.clone();
    loop {
        let next = prune_implied_forbidden(&prune_dominated_saving(&prune_irrelevant_saving(&cur)));
        if next == cur {
            break;
        }
        cur = next;
    }
    if check_bound > 0 {
        check_budget(check_bound, limit)?;
        for n in 0..=check_bound {
            let total = factorial(n)?;
            let mismatch = (0..total).into_par_iter().find_map_first(|rank| {
                let p = unrank(n, rank);
                (two_avoids(&p, pair) != two_avoids(&p, &cur)).then_some(p)
            });
            if let Some(p) = mismatch {
                return Err(Error::ReductionNotConservative(format!(
                    "verdicts differ at {p}"
                )));
            }
        }
    }
    Ok(cur)
}

/// A permutation on which the two predicates disagree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub perm: Permutation,
    pub two_avoiding: bool,
    pub sortable: bool,
}

/// Exhaustive comparison at one length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyRow {
    pub n: usize,
    pub two_avoiding: u64,
    pub sortable: u64,
    pub mismatches: Vec<Mismatch>,
}

/// Exhaustive comparison of two-avoidance against k-sortability for every
/// length up to some bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub k: usize,
    pub rows: Vec<VerifyRow>,
}

impl VerifyReport {
    pub fn total_mismatches(&self) -> u64 {
        self.rows.iter().map(|r| r.mismatches.len() as u64).sum()
    }

    /// True when the pair matched k-sortability exactly at every length.
    pub fn is_exact(&self) -> bool {
        self.total_mismatches() == 0
    }
}

/// Compares `two_avoids(·, pair)` with `is_k_sortable(·, k)` over every
/// reduced permutation of each length 1..=n_max.
pub fn verify_pair(
    pair: &AvoidancePair,
    k: usize,
    n_max: usize,
    limit: usize,
) -> Result<VerifyReport> {
    check_budget(n_max, limit)?;
    let mut rows = Vec::new();
    for n in 1..=n_max {
        let total = factorial(n)?;
        let (two_avoiding, sortable, mut mismatches) = (0..total)
            .into_par_iter()
            .map(|rank| {
                let p = unrank(n, rank);
                let a = two_avoids(&p, pair);
                let s = is_k_sortable(&p, k);
                let mism = (a != s).then_some(Mismatch {
                    perm: p,
                    two_avoiding: a,
                    sortable: s,
                });
                (u64::from(a), u64::from(s), mism)
            })
            .fold(
                || (0u64, 0u64, Vec::new()),
                |mut acc, (a, s, mism)| {
                    acc.0 += a;
                    acc.1 += s;
                    if let Some(m) = mism {
                        acc.2.push(m);
                    }
                    acc
                },
            )
            .reduce(
                || (0u64, 0u64, Vec::new()),
                |mut left, mut right| {
                    left.0 += right.0;
                    left.1 += right.1;
                    left.2.append(&mut right.2);
                    left
                },
            );
        mismatches.sort_by(|a, b| a.perm.cmp(&b.perm));
        rows.push(VerifyRow {
            n,
            two_avoiding,
            sortable,
            mismatches,
        });
    }
    Ok(VerifyReport { k, rows })
}

/// How many permutations of length `n` sort within `k` passes.
pub fn count_sortable(k: usize, n: usize, limit: usize) -> Result<u64> {
    check_budget(n, limit)?;
    let total = factorial(n)?;
    Ok((0..total)
        .into_par_iter()
        .filter(|&rank| is_k_sortable(&unrank(n, rank), k))
        .count() as u64)
}

/// How many permutations of length `n` two-avoid `pair`.
pub fn count_two_avoiding(pair: &AvoidancePair, n: usize, limit: usize) -> Result<u64> {
    check_budget(n, limit)?;
    let total = factorial(n)?;
    Ok((0..total)
        .into_par_iter()
        .filter(|&rank| two_avoids(&unrank(n, rank), pair))
        .count() as u64)
}

/// The classical single-pass characterization: avoid {231, 312}.
pub fn single_pass_pair() -> AvoidancePair {
    let f = ["231", "312"].map(|s| s.parse().unwrap());
    AvoidancePair::classical(f.to_vec()).expect("static pair")
}

/// The known minimal two-pass characterization: eight forbidden patterns of
/// length four, saved by 41352.
pub fn two_pass_pair() -> AvoidancePair {
    let f = [
        "2341", "3241", "3412", "3421", "4123", "4132", "4231", "4312",
    ]
    .map(|s| s.parse().unwrap());
    AvoidancePair::new(f.to_vec(), vec!["41352".parse().unwrap()]).expect("static pair")
}
