//! Brute-force materialization of intervals `[bottom, top]` of the Dyck
//! pattern poset, ranked by semilength.
//!
//! Everything here is computed from the definitions: elements by exhaustive
//! generation filtered through containment, Hasse edges by containment
//! between consecutive ranks, and the Möbius function by its defining
//! recursion. The closed forms in [`crate::formulas`] are checked against
//! this module.

use std::collections::{BTreeMap, HashMap};
use std::sync::OnceLock;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::word::{contains, for_each_word, generate_all, DyckWord, Limits};

/// A materialized interval together with its Hasse diagram.
#[derive(Debug)]
pub struct Interval {
    bottom: DyckWord,
    top: DyckWord,
    /// Sorted by rank, then lexicographically (`U < D`).
    elements: Vec<DyckWord>,
    /// `rank_starts[r - min_rank]` is the first index of rank `r`; one extra trailing entry.
    rank_starts: Vec<usize>,
    index: HashMap<DyckWord, usize>,
    /// Indices of the elements covered by each element.
    down: Vec<Vec<u32>>,
    mobius: OnceLock<MobiusTable>,
}

/// `μ(bottom, x)` for every element `x` of an interval.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MobiusTable {
    pub bottom: DyckWord,
    values: BTreeMap<DyckWord, i64>,
}

impl MobiusTable {
    pub fn get(&self, x: &DyckWord) -> Option<i64> {
        self.values.get(x).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&DyckWord, &i64)> {
        self.values.iter()
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// Words of exactly `semilength` that occur as patterns of `top`, in
/// lexicographic order.
///
/// Exhaustive generation with the containment filter applied to prefixes:
/// a prefix whose greedy embedding into `top` fails cannot extend to a
/// pattern, so its subtree is skipped.
pub(crate) fn patterns_of(top: &DyckWord, semilength: usize) -> Vec<DyckWord> {
    let len = top.len();
    let ups = top.bits();
    let downs = !top.bits()
        & if len == 64 {
            u64::MAX
        } else {
            (1u64 << len) - 1
        };
    let mut out = Vec::new();

    struct Walk<'a> {
        n: usize,
        ups: u64,
        downs: u64,
        out: &'a mut Vec<DyckWord>,
    }

    fn advance(pool: u64, pos: u32) -> Option<u32> {
        let rest = pool.checked_shr(pos).unwrap_or(0);
        (rest != 0).then(|| pos + rest.trailing_zeros() + 1)
    }

    fn rec(w: &mut Walk<'_>, bits: u64, len: usize, u: usize, d: usize, pos: u32) {
        if len == 2 * w.n {
            w.out.push(DyckWord::from_raw(bits, len));
            return;
        }
        if u < w.n {
            if let Some(next) = advance(w.ups, pos) {
                rec(w, bits | 1 << len, len + 1, u + 1, d, next);
            }
        }
        if d < u {
            if let Some(next) = advance(w.downs, pos) {
                rec(w, bits, len + 1, u, d + 1, next);
            }
        }
    }

    if semilength <= top.semilength() {
        let mut walk = Walk {
            n: semilength,
            ups,
            downs,
            out: &mut out,
        };
        rec(&mut walk, 0, 0, 0, 0, 0);
    }
    out
}

impl Interval {
    /// Materializes `[bottom, top]`.
    ///
    /// Rank `r` holds every word `W` of semilength `r` with
    /// `bottom ≤ W ≤ top`; ranks are filled concurrently.
    pub fn build(bottom: DyckWord, top: DyckWord, limits: &Limits) -> Result<Self> {
        if bottom.is_empty() || top.is_empty() {
            return Err(Error::EmptyWord);
        }
        if !contains(&bottom, &top) {
            return Err(Error::NotComparable {
                bottom: bottom.to_string(),
                top: top.to_string(),
            });
        }
        limits.check("top semilength", top.semilength())?;

        let min_rank = bottom.semilength();
        let max_rank = top.semilength();
        let by_rank: Vec<Vec<DyckWord>> = (min_rank..=max_rank)
            .into_par_iter()
            .map(|r| {
                let mut words = patterns_of(&top, r);
                words.retain(|w| contains(&bottom, w));
                words
            })
            .collect();

        let mut elements = Vec::new();
        let mut rank_starts = Vec::with_capacity(by_rank.len() + 1);
        for words in by_rank {
            rank_starts.push(elements.len());
            elements.extend(words);
        }
        rank_starts.push(elements.len());

        let index: HashMap<DyckWord, usize> =
            elements.iter().enumerate().map(|(i, w)| (*w, i)).collect();

        let down: Vec<Vec<u32>> = (0..elements.len())
            .into_par_iter()
            .map(|i| {
                let x = elements[i];
                let r = x.semilength();
                if r == min_rank {
                    return Vec::new();
                }
                let lo = rank_starts[r - 1 - min_rank];
                let hi = rank_starts[r - min_rank];
                (lo..hi)
                    .filter(|&j| contains(&elements[j], &x))
                    .map(|j| j as u32)
                    .collect()
            })
            .collect();

        Ok(Interval {
            bottom,
            top,
            elements,
            rank_starts,
            index,
            down,
            mobius: OnceLock::new(),
        })
    }

    pub fn bottom(&self) -> DyckWord {
        self.bottom
    }

    pub fn top(&self) -> DyckWord {
        self.top
    }

    pub fn min_rank(&self) -> usize {
        self.bottom.semilength()
    }

    pub fn max_rank(&self) -> usize {
        self.top.semilength()
    }

    /// All elements, by rank then lexicographically.
    pub fn elements(&self) -> &[DyckWord] {
        &self.elements
    }

    pub fn contains_element(&self, x: &DyckWord) -> bool {
        self.index.contains_key(x)
    }

    /// Elements of rank `k`; empty when `k` is outside the interval ranks.
    pub fn rank(&self, k: usize) -> &[DyckWord] {
        if k < self.min_rank() || k > self.max_rank() {
            return &[];
        }
        let i = k - self.min_rank();
        &self.elements[self.rank_starts[i]..self.rank_starts[i + 1]]
    }

    /// `(rank, count)` for every rank of the interval.
    pub fn rank_sizes(&self) -> Vec<(usize, usize)> {
        (self.min_rank()..=self.max_rank())
            .map(|r| (r, self.rank(r).len()))
            .collect()
    }

    /// Hasse edges as `(lower, upper)`, ordered by the upper element then the lower one.
    pub fn edges(&self) -> Vec<(DyckWord, DyckWord)> {
        self.down
            .iter()
            .enumerate()
            .flat_map(|(i, lows)| {
                lows.iter()
                    .map(move |&j| (self.elements[j as usize], self.elements[i]))
            })
            .collect()
    }

    /// Elements of the interval covered by `x`.
    pub fn covered_in_interval(&self, x: &DyckWord) -> Result<Vec<DyckWord>> {
        let i = self.position(x)?;
        Ok(self.down[i]
            .iter()
            .map(|&j| self.elements[j as usize])
            .collect())
    }

    fn position(&self, x: &DyckWord) -> Result<usize> {
        self.index
            .get(x)
            .copied()
            .ok_or_else(|| Error::ElementNotInInterval(x.to_string()))
    }

    pub fn s0(&self) -> usize {
        self.elements.len()
    }

    pub fn s0_by_rank(&self, k: usize) -> Result<usize> {
        if k < self.min_rank() || k > self.max_rank() {
            return Err(Error::RankOutOfRange {
                rank: k,
                min: self.min_rank(),
                max: self.max_rank(),
            });
        }
        Ok(self.rank(k).len())
    }

    /// Number of Hasse edges.
    pub fn s1(&self) -> usize {
        self.down.iter().map(Vec::len).sum()
    }

    /// For each element, the number of saturated chains of length `ell` ending at it.
    fn chains_ending_at(&self, ell: usize) -> Result<Vec<u128>> {
        let mut counts = vec![1u128; self.elements.len()];
        for _ in 0..ell {
            let mut next = vec![0u128; self.elements.len()];
            for (i, lows) in self.down.iter().enumerate() {
                for &j in lows {
                    next[i] = next[i]
                        .checked_add(counts[j as usize])
                        .ok_or(Error::Overflow("saturated chain count"))?;
                }
            }
            counts = next;
        }
        Ok(counts)
    }

    /// Saturated chains `x₀ ⋖ … ⋖ x_ℓ` inside the interval.
    pub fn s_ell(&self, ell: usize) -> Result<u128> {
        self.chains_ending_at(ell)?
            .into_iter()
            .try_fold(0u128, |acc, c| acc.checked_add(c))
            .ok_or(Error::Overflow("saturated chain count"))
    }

    /// Saturated chains of length `ell` whose top element has rank `k`.
    pub fn s_ell_by_top_rank(&self, ell: usize, k: usize) -> Result<u128> {
        if k < self.min_rank() || k > self.max_rank() {
            return Ok(0);
        }
        let counts = self.chains_ending_at(ell)?;
        let i = k - self.min_rank();
        counts[self.rank_starts[i]..self.rank_starts[i + 1]]
            .iter()
            .try_fold(0u128, |acc, &c| acc.checked_add(c))
            .ok_or(Error::Overflow("saturated chain count"))
    }

    /// Number of interval elements covered by `x`.
    pub fn delta(&self, x: &DyckWord) -> Result<usize> {
        Ok(self.down[self.position(x)?].len())
    }

    /// `t ↦ Δ_t`, the number of elements covering exactly `t` elements (including `t = 0`).
    pub fn delta_histogram(&self) -> BTreeMap<usize, usize> {
        let mut hist = BTreeMap::new();
        for lows in &self.down {
            *hist.entry(lows.len()).or_insert(0) += 1;
        }
        hist
    }

    /// `μ(bottom, x)` for every element, by the recursion
    /// `μ(b, b) = 1`, `μ(b, x) = −Σ_{b ≤ z < x} μ(b, z)`. Computed once per interval.
    pub fn mobius_table(&self) -> Result<&MobiusTable> {
        if let Some(table) = self.mobius.get() {
            return Ok(table);
        }
        let n = self.elements.len();
        let mut values = vec![0i64; n];
        for i in 0..n {
            let x = self.elements[i];
            if i == 0 {
                values[0] = 1;
                continue;
            }
            let r = x.semilength();
            let below_end = self.rank_starts[r - self.min_rank()];
            let mut sum = 0i64;
            for (z, value) in self.elements[..below_end].iter().zip(&values) {
                if contains(z, &x) {
                    sum = sum
                        .checked_add(*value)
                        .ok_or(Error::Overflow("Möbius recursion"))?;
                }
            }
            values[i] = sum
                .checked_neg()
                .ok_or(Error::Overflow("Möbius recursion"))?;
        }
        let table = MobiusTable {
            bottom: self.bottom,
            values: self.elements.iter().copied().zip(values).collect(),
        };
        Ok(self.mobius.get_or_init(|| table))
    }

    /// `μ(bottom, top)`.
    pub fn mobius(&self) -> Result<i64> {
        Ok(self
            .mobius_table()?
            .get(&self.top)
            .expect("top is an element"))
    }
}

/// Convenience: `μ(bottom, top)` by building the interval.
pub fn mobius(bottom: DyckWord, top: DyckWord, limits: &Limits) -> Result<i64> {
    Interval::build(bottom, top, limits)?.mobius()
}

/// All words of semilength `n + 1` that contain `word`.
pub fn covers_of(word: &DyckWord, limits: &Limits) -> Result<Vec<DyckWord>> {
    let candidates = generate_all(word.semilength() + 1, limits)?;
    Ok(candidates
        .into_iter()
        .filter(|c| contains(word, c))
        .collect())
}

/// All nonempty words of semilength `n − 1` contained in `word`.
pub fn covered_by(word: &DyckWord, limits: &Limits) -> Result<Vec<DyckWord>> {
    limits.check("semilength", word.semilength())?;
    if word.semilength() <= 1 {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    for_each_word(word.semilength() - 1, |c| {
        if contains(&c, word) {
            out.push(c)
        }
    });
    Ok(out)
}
