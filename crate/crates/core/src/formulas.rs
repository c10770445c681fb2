//! Closed formulas for interval sizes, rank counts, covering counts and
//! Möbius values, each with an explicit validity domain.
//!
//! Every function here is pure integer arithmetic with overflow detection.
//! Out-of-domain arguments are errors, except [`narayana`] which is total.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::word::{DyckWord, RunForm};

fn overflow(what: &'static str) -> Error {
    Error::Overflow(what)
}

/// Binomial coefficient, zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> Result<u64> {
    if k > n {
        return Ok(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc * (n - i) is divisible by (i + 1) at every step.
        acc = acc
            .checked_mul((n - i) as u128)
            .ok_or(overflow("binomial"))?
            / (i as u128 + 1);
    }
    u64::try_from(acc).map_err(|_| overflow("binomial"))
}

fn exact_div(num: i128, den: i128, what: &'static str) -> i128 {
    assert_eq!(num % den, 0, "{what}: division must be exact");
    num / den
}

fn to_u64(value: i128, what: &'static str) -> Result<u64> {
    u64::try_from(value).map_err(|_| overflow(what))
}

fn check_shape(formula: &'static str, a: u64, b: u64) -> Result<()> {
    if a < 1 || a > b {
        return Err(Error::out_of_range(
            formula,
            format!("requires 1 <= a <= b, got a={a}, b={b}"),
        ));
    }
    Ok(())
}

/// Normalized two-peak parameters `(a, b, h)` with `1 ≤ a ≤ b`, naming
/// `U^{a+h} D^a U^b D^{b+h}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TwoPeakShape {
    pub a: u64,
    pub b: u64,
    pub h: u64,
}

impl TwoPeakShape {
    pub fn new(a: u64, b: u64, h: u64) -> Result<Self> {
        check_shape("two-peak shape", a, b)?;
        Ok(TwoPeakShape { a, b, h })
    }

    pub fn semilength(&self) -> u64 {
        self.a + self.b + self.h
    }
}

/// Narayana number `N(n, k) = C(n, k) C(n, k−1) / n`, with `N(0, 0) = 1`
/// and zero everywhere else outside `1 ≤ k ≤ n`.
pub fn narayana(n: u64, k: u64) -> Result<u64> {
    if n == 0 && k == 0 {
        return Ok(1);
    }
    if k < 1 || k > n {
        return Ok(0);
    }
    let product = (binomial(n, k)? as u128)
        .checked_mul(binomial(n, k - 1)? as u128)
        .ok_or(overflow("narayana"))?;
    assert_eq!(product % n as u128, 0, "narayana: division must be exact");
    u64::try_from(product / n as u128).map_err(|_| overflow("narayana"))
}

/// Elements of semilength `k` in `[UD, (UD)^n]`:
/// `Σ_{m = max(1, 2k−n)}^{k} N(k, m)`.
pub fn staircase_rank_count(n: u64, k: u64) -> Result<u64> {
    if k < 1 || k > n {
        return Err(Error::out_of_range(
            "staircase_rank_count",
            format!("requires 1 <= k <= n, got n={n}, k={k}"),
        ));
    }
    let low = (2 * k).saturating_sub(n).max(1);
    (low..=k).try_fold(0u64, |acc, m| {
        acc.checked_add(narayana(k, m)?)
            .ok_or(overflow("staircase_rank_count"))
    })
}

/// Total size of `[UD, (UD)^n]`.
pub fn staircase_interval_size(n: u64) -> Result<u64> {
    if n < 1 {
        return Err(Error::out_of_range(
            "staircase_interval_size",
            format!("requires n >= 1, got {n}"),
        ));
    }
    (1..=n).try_fold(0u64, |acc, k| {
        acc.checked_add(staircase_rank_count(n, k)?)
            .ok_or(overflow("staircase_interval_size"))
    })
}

/// A word with runs `(α_i, β_i)`, `m` pairs, embeds in `(UD)^n` iff
/// `α + β − n ≤ m ≤ n`.
pub fn embeddable_in_staircase(runs: &RunForm, n: u64) -> bool {
    let m = runs.m() as u64;
    let total = (runs.alpha() + runs.beta()) as u64;
    total <= n + m && m <= n
}

/// Same membership test phrased on ascents: a Dyck word of semilength `k`
/// lies below `(UD)^n` iff `asc ≥ 2k − n` (and `k ≤ n`).
pub fn staircase_admits(ascents: u64, semilength: u64, n: u64) -> bool {
    semilength <= n && ascents + n >= 2 * semilength
}

/// Two-peak elements of `[UD, Q_{a,b}^{(0)}]`: `a(a+1)(3b−a+1)/6`.
pub fn phi0(a: u64, b: u64) -> Result<u64> {
    check_shape("phi0", a, b)?;
    let (a, b) = (a as i128, b as i128);
    let value = exact_div(a * (a + 1) * (3 * b - a + 1), 6, "phi0");
    to_u64(value, "phi0")
}

/// Two-peak elements of `[UD, Q_{a,b}^{(h)}]`: `φ₀(a, b) + h·a·b`.
pub fn phih(a: u64, b: u64, h: u64) -> Result<u64> {
    let base = phi0(a, b)?;
    h.checked_mul(a)
        .and_then(|x| x.checked_mul(b))
        .and_then(|x| x.checked_add(base))
        .ok_or(overflow("phih"))
}

/// `|[UD, Q_{a,b}^{(h)}]|`: two-peak elements plus the `b + h` one-peak ones.
pub fn two_peak_interval_size(a: u64, b: u64, h: u64) -> Result<u64> {
    phih(a, b, h)?
        .checked_add(b + h)
        .ok_or(overflow("two_peak_interval_size"))
}

/// Elements of semilength `r` in `[UD, Q_{a,b}^{(h)}]`:
///
/// `Σ_{i = max(1, r−b−h)}^{min(a, r−1)} (min(b, r−i) − max(1, r−a−h) + 1) + [r ≤ b+h]`.
///
/// At `r = 1` the sum is empty and the indicator counts `UD`; above the top
/// rank both terms vanish.
pub fn two_peak_rank_count(a: u64, b: u64, h: u64, r: u64) -> Result<u64> {
    let (count, clamped) = two_peak_rank_count_inner(a, b, h, r)?;
    debug_assert!(!clamped, "negative summand at (a,b,h,r)=({a},{b},{h},{r})");
    Ok(count)
}

/// Returns the count and whether any summand had to be clamped at zero.
pub fn two_peak_rank_count_inner(a: u64, b: u64, h: u64, r: u64) -> Result<(u64, bool)> {
    check_shape("two_peak_rank_count", a, b)?;
    if r < 1 {
        return Err(Error::out_of_range(
            "two_peak_rank_count",
            "requires r >= 1",
        ));
    }
    let (a, b, h, r) = (a as i128, b as i128, h as i128, r as i128);
    let lo = 1.max(r - b - h);
    let hi = a.min(r - 1);
    let j_lo = 1.max(r - a - h);
    let mut total = 0i128;
    let mut clamped = false;
    for i in lo..=hi {
        let summand = b.min(r - i) - j_lo + 1;
        if summand < 0 {
            clamped = true;
        } else {
            total += summand;
        }
    }
    if r <= b + h {
        total += 1;
    }
    Ok((to_u64(total, "two_peak_rank_count")?, clamped))
}

/// `h = 0` simplification: `C(m+1, 2) + [r ≤ b]` with `m = min(r−1, a, a+b−r+1)`.
pub fn two_peak_rank_count_h0(a: u64, b: u64, r: u64) -> Result<u64> {
    check_shape("two_peak_rank_count_h0", a, b)?;
    if r < 2 || r > a + b {
        return Err(Error::out_of_range(
            "two_peak_rank_count_h0",
            format!("requires 2 <= r <= a+b, got r={r}"),
        ));
    }
    let m = (r - 1).min(a).min(a + b + 1 - r);
    Ok(binomial(m + 1, 2)? + u64::from(r <= b))
}

/// Number of paths covered by `U^{k+i} D^i U^j D^{j+k}`, by the four-case table.
pub fn delta_class(i: u64, j: u64, k: u64) -> Result<u8> {
    if i < 1 || j < 1 {
        return Err(Error::out_of_range(
            "delta_class",
            format!("requires i, j >= 1, got i={i}, j={j}"),
        ));
    }
    let wide = (i >= 2) as u8 + (j >= 2) as u8 + (k >= 1) as u8;
    Ok(1 + wide)
}

/// `Δ_t` for `t = 1..=4` on `[UD, Q_{a,b}^{(0)}]`; the minimum (`Δ = 0`) is not counted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DeltaCounts {
    pub one: u64,
    pub two: u64,
    pub three: u64,
    pub four: u64,
}

impl DeltaCounts {
    pub fn as_map(&self) -> BTreeMap<usize, u64> {
        BTreeMap::from([
            (1, self.one),
            (2, self.two),
            (3, self.three),
            (4, self.four),
        ])
    }

    pub fn weighted_sum(&self) -> u64 {
        self.one + 2 * self.two + 3 * self.three + 4 * self.four
    }
}

pub fn delta_histogram_closed(a: u64, b: u64) -> Result<DeltaCounts> {
    check_shape("delta_histogram_closed", a, b)?;
    let (ai, bi) = (a as i128, b as i128);
    let one = bi;
    let two = 2 * ai + bi - 3;
    let three = (ai - 1) * (2 * bi - 3);
    let four = (ai - 1) * (ai - 1) * (bi - 1) - (ai + bi - 2) * binomial(a, 2)? as i128
        + exact_div(ai * (ai - 1) * (2 * ai - 1), 6, "delta_histogram_closed");
    Ok(DeltaCounts {
        one: to_u64(one, "delta_histogram_closed")?,
        two: to_u64(two, "delta_histogram_closed")?,
        three: to_u64(three, "delta_histogram_closed")?,
        four: to_u64(four, "delta_histogram_closed")?,
    })
}

/// Hasse edges of `[UD, Q_{a,b}^{(0)}]`: `−(2a³ − 6a²b + a − 3b + 3)/3`.
pub fn s1_two_peak_h0(a: u64, b: u64) -> Result<u64> {
    check_shape("s1_two_peak_h0", a, b)?;
    let (a, b) = (a as i128, b as i128);
    let cubic = 2 * a * a * a - 6 * a * a * b + a - 3 * b + 3;
    to_u64(-exact_div(cubic, 3, "s1_two_peak_h0"), "s1_two_peak_h0")
}

/// `μ(UD, U^n D^n)`: the interval is a chain.
pub fn mobius_pyramid(n: u64) -> Result<i64> {
    match n {
        0 => Err(Error::out_of_range("mobius_pyramid", "requires n >= 1")),
        1 => Ok(1),
        2 => Ok(-1),
        _ => Ok(0),
    }
}

/// `μ(UD, Q_{a,b}^{(h)})` together with a flag telling whether `a` and `b`
/// were swapped to reach `a ≤ b`. Reversal with `U ↔ D` maps `Q_{a,b}^{(h)}`
/// to `Q_{b,a}^{(h)}` and is a poset automorphism, so the value is unchanged.
pub fn mobius_two_peak_normalized(a: u64, b: u64, h: u64) -> Result<(i64, bool)> {
    if a < 1 || b < 1 {
        return Err(Error::out_of_range(
            "mobius_two_peak",
            format!("requires a, b >= 1, got a={a}, b={b}"),
        ));
    }
    let swapped = a > b;
    let (a, b) = if swapped { (b, a) } else { (a, b) };
    let value = if h > 1 || b - a > 1 {
        0
    } else {
        match (b - a, h) {
            (1, 1) => -1,
            (1, 0) => 1,
            (0, 0) if a == 1 => -1,
            (0, 0) => -2,
            (0, 1) if a == 1 => 1,
            (0, 1) => 2,
            _ => unreachable!(),
        }
    };
    Ok((value, swapped))
}

pub fn mobius_two_peak(a: u64, b: u64, h: u64) -> Result<i64> {
    mobius_two_peak_normalized(a, b, h).map(|(value, _)| value)
}

/// `μ((UD)^{n−1}, (UD)^{n+1}) = C(n, 2)`.
pub fn mobius_staircase_rank2(n: u64) -> Result<i64> {
    if n < 2 {
        return Err(Error::out_of_range(
            "mobius_staircase_rank2",
            format!("requires n >= 2, got {n}"),
        ));
    }
    i64::try_from(binomial(n, 2)?).map_err(|_| overflow("mobius_staircase_rank2"))
}

/// `μ(U(UD)^{n−1}D, U(UD)^{n+1}D) = n²`.
pub fn mobius_elevated_staircase_rank2(n: u64) -> Result<i64> {
    if n < 1 {
        return Err(Error::out_of_range(
            "mobius_elevated_staircase_rank2",
            "requires n >= 1",
        ));
    }
    n.checked_mul(n)
        .and_then(|v| i64::try_from(v).ok())
        .ok_or(overflow("mobius_elevated_staircase_rank2"))
}

/// Number of paths covering `word`: `1 + n² − Σ_{i<j} f_i f_j` over its factor semilengths.
pub fn cover_count_formula(word: &DyckWord) -> Result<u64> {
    if word.is_empty() {
        return Err(Error::EmptyWord);
    }
    let n = word.semilength() as u64;
    let factors = word.factors();
    let mut cross = 0u64;
    for (idx, &fi) in factors.iter().enumerate() {
        for &fj in &factors[idx + 1..] {
            cross += (fi * fj) as u64;
        }
    }
    Ok(1 + n * n - cross)
}
