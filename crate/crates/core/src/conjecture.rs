//! Exhaustive scans over small comparable pairs: the rank-2 maximum of μ,
//! the rank-3 maximum of |μ|, sign alternation of μ, and the covering-count
//! formula.
//!
//! Pairs are enumerated top-first: for each top `Q` the down-set of `Q` is
//! materialized and `μ(P, Q)` is obtained for every `P` in it at once by the
//! dual recursion `μ(Q, Q) = 1`, `μ(P, Q) = −Σ_{P < z ≤ Q} μ(z, Q)`.
//! Tops are distributed over the rayon pool; witnesses are sorted before
//! reporting so that output depends on the scope alone.

use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::formulas::cover_count_formula;
use crate::poset::patterns_of;
use crate::word::{contains, elevated_staircase, generate_all, staircase, DyckWord, Limits};

pub const DEFAULT_ALTERNATING_MAX: usize = 6;
pub const DEFAULT_RANK2_MAX: usize = 5;
pub const DEFAULT_RANK3_MAX: usize = 4;
pub const DEFAULT_COVER_COUNT_MAX: usize = 7;

pub const REPORT_SCHEMA: &str = "dyck-poset/scan-report/v1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Consistent,
    Violated,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ScanScope {
    /// What the bound applies to, e.g. `"max_top_semilength"`.
    pub parameter: &'static str,
    pub value: usize,
}

/// An interval (or a single word, when `top` is absent) singled out by a scan.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Witness {
    pub bottom: DyckWord,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub top: Option<DyckWord>,
    pub value: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expected: Option<i64>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ScanReport {
    pub schema: &'static str,
    pub scan: &'static str,
    pub scope: ScanScope,
    pub verdict: Verdict,
    /// Extremal intervals for maximum scans, violations otherwise.
    pub witnesses: Vec<Witness>,
    /// Named intervals the scan is asked about, with their scanned values.
    pub anchors: Vec<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub observed: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expected: Option<i64>,
    pub pairs_checked: u64,
    pub elapsed_ms: u128,
}

/// `(P, μ(P, top))` for every `P ≤ top` with `semilength(P) ≥ min_rank`,
/// ordered by rank then lexicographically.
pub fn mobius_to_top(top: &DyckWord, min_rank: usize) -> Result<Vec<(DyckWord, i64)>> {
    let min_rank = min_rank.max(1);
    let mut elements: Vec<DyckWord> = Vec::new();
    for r in min_rank..=top.semilength() {
        elements.extend(patterns_of(top, r));
    }
    let n = elements.len();
    let mut values = vec![0i64; n];
    // First index whose rank exceeds the rank of the current element.
    let mut upper_start = n;
    let mut current_rank = usize::MAX;
    for i in (0..n).rev() {
        let x = elements[i];
        if x.semilength() != current_rank {
            current_rank = x.semilength();
            upper_start = i + 1;
        }
        if i == n - 1 {
            values[i] = 1;
            continue;
        }
        let mut sum = 0i64;
        for j in upper_start..n {
            if contains(&x, &elements[j]) {
                sum = sum
                    .checked_add(values[j])
                    .ok_or(Error::Overflow("Möbius recursion"))?;
            }
        }
        values[i] = -sum;
    }
    Ok(elements.into_iter().zip(values).collect())
}

fn nonempty_words(
    range: std::ops::RangeInclusive<usize>,
    limits: &Limits,
) -> Result<Vec<DyckWord>> {
    let mut out = Vec::new();
    for r in range {
        if r >= 1 {
            out.extend(generate_all(r, limits)?);
        }
    }
    Ok(out)
}

fn is_alternating(value: i64, rank_difference: usize) -> bool {
    if rank_difference.is_multiple_of(2) {
        value >= 0
    } else {
        value <= 0
    }
}

/// Checks the sign of `μ(P, Q)` against the parity of the rank difference for
/// every comparable pair with `semilength(Q) ≤ max_top_semilength`.
pub fn scan_alternating(max_top_semilength: usize, limits: &Limits) -> Result<ScanReport> {
    let start = Instant::now();
    limits.check("top semilength", max_top_semilength)?;
    let tops = nonempty_words(1..=max_top_semilength, limits)?;
    let per_top: Vec<(u64, Vec<Witness>)> = tops
        .par_iter()
        .map(|top| {
            let pairs = mobius_to_top(top, 1)?;
            let violations = pairs
                .iter()
                .filter(|(p, v)| !is_alternating(*v, top.semilength() - p.semilength()))
                .map(|&(p, v)| Witness {
                    bottom: p,
                    top: Some(*top),
                    value: v,
                    expected: None,
                })
                .collect();
            Ok((pairs.len() as u64, violations))
        })
        .collect::<Result<_>>()?;
    let pairs_checked = per_top.iter().map(|(c, _)| c).sum();
    let mut witnesses: Vec<Witness> = per_top.into_iter().flat_map(|(_, w)| w).collect();
    witnesses.sort();
    Ok(ScanReport {
        schema: REPORT_SCHEMA,
        scan: "alternating",
        scope: ScanScope {
            parameter: "max_top_semilength",
            value: max_top_semilength,
        },
        verdict: if witnesses.is_empty() {
            Verdict::Consistent
        } else {
            Verdict::Violated
        },
        witnesses,
        anchors: Vec::new(),
        observed: None,
        expected: None,
        pairs_checked,
        elapsed_ms: start.elapsed().as_millis(),
    })
}

/// `μ(P, Q)` over every comparable pair with `semilength(P) = n` and
/// `semilength(Q) = n + rank`.
fn pairs_at_rank(n: usize, rank: usize, limits: &Limits) -> Result<Vec<Witness>> {
    limits.check("top semilength", n + rank)?;
    let tops = generate_all(n + rank, limits)?;
    let mut out: Vec<Witness> = tops
        .par_iter()
        .map(|top| {
            Ok(mobius_to_top(top, n)?
                .into_iter()
                .filter(|(p, _)| p.semilength() == n)
                .map(|(p, v)| Witness {
                    bottom: p,
                    top: Some(*top),
                    value: v,
                    expected: None,
                })
                .collect::<Vec<_>>())
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    out.sort();
    Ok(out)
}

fn anchor(pairs: &[Witness], bottom: DyckWord, top: DyckWord, expected: i64) -> Witness {
    let value = pairs
        .iter()
        .find(|w| w.bottom == bottom && w.top == Some(top))
        .map(|w| w.value)
        .expect("anchor pair is comparable and inside the scanned ranks");
    Witness {
        bottom,
        top: Some(top),
        value,
        expected: Some(expected),
    }
}

/// Maximum of `μ` over rank-2 intervals with bottom semilength `n`; the
/// expected maximum `n²` is attained by `[U(UD)^{n−1}D, U(UD)^{n+1}D]`.
pub fn scan_rank2_max(n: usize, limits: &Limits) -> Result<ScanReport> {
    let start = Instant::now();
    if n < 1 {
        return Err(Error::out_of_range("scan_rank2_max", "requires n >= 1"));
    }
    let pairs = pairs_at_rank(n, 2, limits)?;
    let observed = pairs.iter().map(|w| w.value).max().unwrap_or(0);
    let expected = (n * n) as i64;
    let witnesses: Vec<Witness> = pairs
        .iter()
        .filter(|w| w.value == observed)
        .cloned()
        .collect();
    let low = elevated_staircase(n)?;
    let high = elevated_staircase(n + 2)?;
    let mut anchors = vec![anchor(&pairs, low, high, expected)];
    anchors.push(anchor(
        &pairs,
        staircase(n)?,
        staircase(n + 2)?,
        ((n + 1) * n / 2) as i64,
    ));
    let consistent = observed == expected
        && witnesses
            .iter()
            .any(|w| w.bottom == low && w.top == Some(high));
    Ok(ScanReport {
        schema: REPORT_SCHEMA,
        scan: "rank2max",
        scope: ScanScope {
            parameter: "bottom_semilength",
            value: n,
        },
        verdict: if consistent {
            Verdict::Consistent
        } else {
            Verdict::Violated
        },
        witnesses,
        anchors,
        observed: Some(observed),
        expected: Some(expected),
        pairs_checked: pairs.len() as u64,
        elapsed_ms: start.elapsed().as_millis(),
    })
}

/// Maximum of `|μ|` over rank-3 intervals with bottom semilength `n`,
/// compared with `(2n+1)·n²` and its conjectured extremal interval
/// `[U(UD)^{n−1}D, U(UD)^{n+2}D]`.
pub fn scan_rank3_max(n: usize, limits: &Limits) -> Result<ScanReport> {
    let start = Instant::now();
    if n < 1 {
        return Err(Error::out_of_range("scan_rank3_max", "requires n >= 1"));
    }
    let pairs = pairs_at_rank(n, 3, limits)?;
    let observed = pairs.iter().map(|w| w.value.abs()).max().unwrap_or(0);
    let expected = ((2 * n + 1) * n * n) as i64;
    let witnesses: Vec<Witness> = pairs
        .iter()
        .filter(|w| w.value.abs() == observed)
        .cloned()
        .collect();
    let low = elevated_staircase(n)?;
    let high = elevated_staircase(n + 3)?;
    let anchors = vec![anchor(&pairs, low, high, -expected)];
    let consistent = observed == expected
        && witnesses
            .iter()
            .any(|w| w.bottom == low && w.top == Some(high));
    Ok(ScanReport {
        schema: REPORT_SCHEMA,
        scan: "rank3max",
        scope: ScanScope {
            parameter: "bottom_semilength",
            value: n,
        },
        verdict: if consistent {
            Verdict::Consistent
        } else {
            Verdict::Violated
        },
        witnesses,
        anchors,
        observed: Some(observed),
        expected: Some(expected),
        pairs_checked: pairs.len() as u64,
        elapsed_ms: start.elapsed().as_millis(),
    })
}

/// Compares the number of covers of every word up to `max_semilength` with
/// `1 + n² − Σ_{i<j} f_i f_j`, and checks that `n² + 1` is reached exactly by
/// words with a single factor.
pub fn sweep_cover_count(max_semilength: usize, limits: &Limits) -> Result<ScanReport> {
    let start = Instant::now();
    limits.check("semilength", max_semilength + 1)?;
    let mut witnesses = Vec::new();
    let mut checked = 0u64;
    for n in 1..=max_semilength {
        let candidates = generate_all(n + 1, limits)?;
        let words = generate_all(n, limits)?;
        let found: Vec<Witness> = words
            .par_iter()
            .map(|q| {
                let covers = candidates.iter().filter(|c| contains(q, c)).count() as i64;
                let formula = cover_count_formula(q)? as i64;
                let maximal = covers == (n * n + 1) as i64;
                let single_factor = q.factors().len() == 1;
                Ok(
                    (covers != formula || maximal != single_factor).then_some(Witness {
                        bottom: *q,
                        top: None,
                        value: covers,
                        expected: Some(formula),
                    }),
                )
            })
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .flatten()
            .collect();
        checked += words.len() as u64;
        witnesses.extend(found);
    }
    witnesses.sort();
    Ok(ScanReport {
        schema: REPORT_SCHEMA,
        scan: "covercount",
        scope: ScanScope {
            parameter: "max_semilength",
            value: max_semilength,
        },
        verdict: if witnesses.is_empty() {
            Verdict::Consistent
        } else {
            Verdict::Violated
        },
        witnesses,
        anchors: Vec::new(),
        observed: None,
        expected: None,
        pairs_checked: checked,
        elapsed_ms: start.elapsed().as_millis(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::Interval;

    fn w(s: &str) -> DyckWord {
        s.parse().unwrap()
    }

    #[test]
    fn dual_recursion_matches_interval_mobius() {
        let limits = Limits::default();
        for top in generate_all(5, &limits).unwrap() {
            for (p, v) in mobius_to_top(&top, 1).unwrap() {
                let iv = Interval::build(p, top, &limits).unwrap();
                assert_eq!(iv.mobius().unwrap(), v, "μ({p}, {top})");
            }
        }
    }

    #[test]
    fn rank2_small() {
        let limits = Limits::default();
        let r = scan_rank2_max(2, &limits).unwrap();
        assert_eq!(r.verdict, Verdict::Consistent);
        assert_eq!(r.observed, Some(4));
        assert_eq!(
            r.witnesses,
            vec![Witness {
                bottom: w("UUDD"),
                top: Some(w("UUDUDUDD")),
                value: 4,
                expected: None
            }]
        );
        let r = scan_rank2_max(1, &limits).unwrap();
        assert_eq!(r.observed, Some(1));
        assert_eq!(r.witnesses.len(), 4);
        assert_eq!(r.anchors[1].value, 1);
    }

    #[test]
    fn rank3_small() {
        let r = scan_rank3_max(1, &Limits::default()).unwrap();
        assert_eq!(r.observed, Some(3));
        assert_eq!(r.verdict, Verdict::Consistent);
        let tops: Vec<DyckWord> = r.witnesses.iter().filter_map(|w| w.top).collect();
        assert_eq!(tops, vec![w("UUDUDUDD"), w("UDUDUDUD")]);
    }

    #[test]
    fn alternating_small() {
        let r = scan_alternating(4, &Limits::default()).unwrap();
        assert_eq!(r.verdict, Verdict::Consistent);
        assert!(r.witnesses.is_empty());
        assert!(is_alternating(1, 0));
        assert!(!is_alternating(1, 1));
        assert!(!is_alternating(-2, 2));
    }

    #[test]
    fn cover_count_small() {
        let r = sweep_cover_count(5, &Limits::default()).unwrap();
        assert_eq!(r.verdict, Verdict::Consistent);
        assert_eq!(r.pairs_checked, 1 + 2 + 5 + 14 + 42);
    }

    #[test]
    fn limits_are_enforced() {
        let limits = Limits::new(5);
        assert!(matches!(
            scan_alternating(6, &limits),
            Err(Error::LimitExceeded { .. })
        ));
        assert!(scan_rank3_max(3, &limits).is_err());
        assert!(sweep_cover_count(5, &limits).is_err());
    }
}
