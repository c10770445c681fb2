//! Verification suites: each closed form or bijection recomputed against
//! the brute-force engine over a fixed parameter range.
//!
//! The only embedded numbers are published reference values (the staircase
//! rank triangle for `n ≤ 9`, the interval size sequence, and the `(2,3;2)`
//! triple with its square in the `4 × 6` grid). Everything else is
//! recomputed.

use std::collections::BTreeMap;
use std::time::Instant;

use serde::Serialize;

use crate::bijection::{
    count_peakless_motzkin, dyck_to_motzkin, motzkin_to_dyck, path_to_triple,
    peakless_motzkin_words, square_leq, squares_in_grid, triple_leq, triple_to_path,
    triple_to_square, triples_in_grid, GridSquare, Triple, DEFAULT_MOTZKIN_CEILING,
};
use crate::conjecture::{sweep_cover_count, Verdict};
use crate::error::Result;
use crate::formulas::{
    delta_class, delta_histogram_closed, embeddable_in_staircase, mobius_elevated_staircase_rank2,
    mobius_pyramid, mobius_staircase_rank2, mobius_two_peak, phi0, phih, s1_two_peak_h0,
    staircase_admits, staircase_interval_size, staircase_rank_count, two_peak_interval_size,
    two_peak_rank_count_h0, two_peak_rank_count_inner,
};
use crate::poset::{covered_by, Interval};
use crate::word::{
    contains, elevated_staircase, generate_all, pyramid, staircase, two_peak, DyckWord, Limits,
};

/// Rows `n = 1..=9` of the rank-count triangle of `[UD, (UD)^n]`.
pub const RANK_TRIANGLE: [&[u64]; 9] = [
    &[1],
    &[1, 1],
    &[1, 2, 1],
    &[1, 2, 4, 1],
    &[1, 2, 5, 7, 1],
    &[1, 2, 5, 13, 11, 1],
    &[1, 2, 5, 14, 31, 16, 1],
    &[1, 2, 5, 14, 41, 66, 22, 1],
    &[1, 2, 5, 14, 42, 116, 127, 29, 1],
];

/// `|[UD, (UD)^n]|` for `n = 1..=9`.
pub const SIZE_SEQUENCE: [u64; 9] = [1, 2, 4, 8, 16, 33, 70, 152, 337];

/// The path `U^4 D^2 U^3 D^5`, its triple and its square in the `4 × 6` grid.
pub const GRID_EXAMPLE_PATH: &str = "UUUUDDUUUDDDDD";
pub const GRID_EXAMPLE_TRIPLE: Triple = Triple { i: 2, j: 3, k: 2 };
pub const GRID_EXAMPLE_SQUARE: GridSquare = GridSquare {
    row: 2,
    col: 3,
    side: 3,
};

/// Parameter range of the two-peak sweep: `1 ≤ a ≤ b ≤ 6`, `0 ≤ h ≤ 3`.
pub const SWEEP_MAX_B: u64 = 6;
pub const SWEEP_MAX_H: u64 = 3;

pub const SUITES: [&str; 8] = [
    "table1",
    "sizes",
    "twopeak",
    "delta",
    "s1",
    "mobius-closed",
    "bijections",
    "covercount",
];

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub suite: &'static str,
    pub checks: u64,
    pub mismatches: Vec<String>,
    pub elapsed_ms: u128,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

struct Checker {
    suite: &'static str,
    checks: u64,
    mismatches: Vec<String>,
    start: Instant,
}

impl Checker {
    fn new(suite: &'static str) -> Self {
        Checker {
            suite,
            checks: 0,
            mismatches: Vec::new(),
            start: Instant::now(),
        }
    }

    fn eq<T: PartialEq + std::fmt::Debug>(
        &mut self,
        label: impl FnOnce() -> String,
        actual: T,
        expected: T,
    ) {
        self.checks += 1;
        if actual != expected {
            self.mismatches.push(format!(
                "{}: got {actual:?}, expected {expected:?}",
                label()
            ));
        }
    }

    fn truth(&mut self, label: impl FnOnce() -> String, ok: bool) {
        self.checks += 1;
        if !ok {
            self.mismatches.push(label());
        }
    }

    fn finish(self) -> SuiteReport {
        SuiteReport {
            suite: self.suite,
            checks: self.checks,
            mismatches: self.mismatches,
            elapsed_ms: self.start.elapsed().as_millis(),
        }
    }
}

/// Ceiling large enough for every top in the two-peak sweep.
fn sweep_limits() -> Limits {
    Limits::new((2 * SWEEP_MAX_B + SWEEP_MAX_H) as usize)
}

fn initial(top: DyckWord, limits: &Limits) -> Result<Interval> {
    Interval::build(staircase(1)?, top, limits)
}

fn sweep_shapes() -> impl Iterator<Item = (u64, u64, u64)> {
    (1..=SWEEP_MAX_B).flat_map(|a| {
        (a..=SWEEP_MAX_B).flat_map(move |b| (0..=SWEEP_MAX_H).map(move |h| (a, b, h)))
    })
}

fn two_peak_interval(a: u64, b: u64, h: u64) -> Result<Interval> {
    initial(
        two_peak(a as usize, b as usize, h as usize)?,
        &sweep_limits(),
    )
}

pub fn run_suite(name: &str) -> Option<Result<SuiteReport>> {
    Some(match name {
        "table1" => table1(),
        "sizes" => sizes(),
        "twopeak" => twopeak(),
        "delta" => delta(),
        "s1" => s1(),
        "mobius-closed" => mobius_closed(),
        "bijections" => bijections(),
        "covercount" => covercount(),
        _ => return None,
    })
}

pub fn run_all() -> Result<Vec<SuiteReport>> {
    SUITES
        .iter()
        .map(|name| run_suite(name).expect("known suite"))
        .collect()
}

/// Brute-force rank counts of `[UD, (UD)^n]` against the reference triangle
/// and the Narayana closed form.
pub fn table1() -> Result<SuiteReport> {
    let mut c = Checker::new("table1");
    let limits = Limits::default();
    for (row, expected) in RANK_TRIANGLE.iter().enumerate() {
        let n = row + 1;
        let iv = initial(staircase(n)?, &limits)?;
        for k in 1..=n {
            let brute = iv.s0_by_rank(k)? as u64;
            c.eq(
                || format!("brute s0^({k})[UD,(UD)^{n}]"),
                brute,
                expected[k - 1],
            );
            c.eq(
                || format!("staircase_rank_count({n},{k})"),
                staircase_rank_count(n as u64, k as u64)?,
                expected[k - 1],
            );
        }
    }
    Ok(c.finish())
}

pub fn sizes() -> Result<SuiteReport> {
    let mut c = Checker::new("sizes");
    let limits = Limits::default();
    for (idx, &expected) in SIZE_SEQUENCE.iter().enumerate() {
        let n = idx + 1;
        let closed = staircase_interval_size(n as u64)?;
        c.eq(|| format!("staircase_interval_size({n})"), closed, expected);
        let brute = initial(staircase(n)?, &limits)?.s0() as u64;
        c.eq(|| format!("brute s0[UD,(UD)^{n}]"), brute, expected);
    }
    for n in 1..=12u64 {
        let by_rank: u64 = (1..=n)
            .map(|k| staircase_rank_count(n, k))
            .sum::<Result<u64>>()?;
        c.eq(
            || format!("sum of rank counts for n={n}"),
            by_rank,
            staircase_interval_size(n)?,
        );
    }
    Ok(c.finish())
}

/// Interval sizes and rank profiles of `[UD, Q_{a,b}^{(h)}]` over the sweep.
pub fn twopeak() -> Result<SuiteReport> {
    let mut c = Checker::new("twopeak");
    for (a, b, h) in sweep_shapes() {
        let iv = two_peak_interval(a, b, h)?;
        let two_peaks = iv.elements().iter().filter(|x| x.peaks() == 2).count() as u64;
        if h == 0 {
            c.eq(|| format!("phi0({a},{b})"), phi0(a, b)?, two_peaks);
        }
        c.eq(|| format!("phih({a},{b},{h})"), phih(a, b, h)?, two_peaks);
        c.eq(
            || format!("two_peak_interval_size({a},{b},{h})"),
            two_peak_interval_size(a, b, h)?,
            iv.s0() as u64,
        );
        let mut rank_total = 0;
        for r in 1..=a + b + h + 1 {
            let (closed, clamped) = two_peak_rank_count_inner(a, b, h, r)?;
            c.truth(
                || format!("two_peak_rank_count({a},{b},{h},{r}) clamped a summand"),
                !clamped,
            );
            c.eq(
                || format!("two_peak_rank_count({a},{b},{h},{r})"),
                closed,
                iv.rank(r as usize).len() as u64,
            );
            rank_total += closed;
            if h == 0 && (2..=a + b).contains(&r) {
                c.eq(
                    || format!("two_peak_rank_count_h0({a},{b},{r})"),
                    two_peak_rank_count_h0(a, b, r)?,
                    closed,
                );
            }
        }
        c.eq(
            || format!("rank sum for ({a},{b},{h})"),
            rank_total,
            two_peak_interval_size(a, b, h)?,
        );
    }
    for a in 1..=7 {
        for b in a..=7 {
            c.eq(
                || format!("squares in {a}x{b} grid"),
                squares_in_grid(a, b).len() as u64,
                phi0(a as u64, b as u64)?,
            );
        }
    }
    let q231 = two_peak_interval(2, 3, 1)?;
    c.eq(
        || "rank profile of [UD,Q_{2,3}^{(1)}]".into(),
        q231.rank_sizes()
            .into_iter()
            .map(|(_, n)| n)
            .collect::<Vec<_>>(),
        vec![1, 2, 4, 6, 4, 1],
    );
    Ok(c.finish())
}

/// Covering counts of two-peak paths, closed Δ histograms, and the
/// identity `s1 = Σ t·Δ_t`.
pub fn delta() -> Result<SuiteReport> {
    let mut c = Checker::new("delta");
    let limits = sweep_limits();
    for i in 1..=5u64 {
        for j in 1..=5u64 {
            for k in 0..=3u64 {
                let q = two_peak(i as usize, j as usize, k as usize)?;
                let brute = covered_by(&q, &limits)?.len() as u64;
                c.eq(
                    || format!("delta_class({i},{j},{k})"),
                    delta_class(i, j, k)? as u64,
                    brute,
                );
            }
        }
    }
    for (a, b, h) in sweep_shapes() {
        let iv = two_peak_interval(a, b, h)?;
        let hist = iv.delta_histogram();
        let weighted: usize = hist.iter().map(|(t, n)| t * n).sum();
        c.eq(
            || format!("s1 = Σ tΔ_t on ({a},{b},{h})"),
            weighted,
            iv.s1(),
        );
        if h == 0 {
            let closed = delta_histogram_closed(a, b)?.as_map();
            let brute: BTreeMap<usize, u64> = (1..=4)
                .map(|t| (t, hist.get(&t).copied().unwrap_or(0) as u64))
                .collect();
            c.eq(|| format!("delta_histogram_closed({a},{b})"), closed, brute);
            c.eq(
                || format!("Δ histogram support for ({a},{b})"),
                hist.keys().all(|&t| t <= 4) && hist.get(&0) == Some(&1),
                true,
            );
        }
    }
    let stair_limits = Limits::default();
    for n in 1..=7 {
        let iv = initial(staircase(n)?, &stair_limits)?;
        let weighted: usize = iv.delta_histogram().iter().map(|(t, m)| t * m).sum();
        c.eq(
            || format!("s1 = Σ tΔ_t on [UD,(UD)^{n}]"),
            weighted,
            iv.s1(),
        );
    }
    Ok(c.finish())
}

pub fn s1() -> Result<SuiteReport> {
    let mut c = Checker::new("s1");
    for a in 1..=SWEEP_MAX_B {
        for b in a..=SWEEP_MAX_B {
            let iv = two_peak_interval(a, b, 0)?;
            c.eq(
                || format!("s1_two_peak_h0({a},{b})"),
                s1_two_peak_h0(a, b)?,
                iv.s1() as u64,
            );
        }
    }
    Ok(c.finish())
}

/// Closed Möbius values against the recursive definition.
pub fn mobius_closed() -> Result<SuiteReport> {
    let mut c = Checker::new("mobius-closed");
    let limits = sweep_limits();
    for n in 1..=9 {
        let brute = initial(pyramid(n)?, &limits)?.mobius()?;
        c.eq(
            || format!("mobius_pyramid({n})"),
            mobius_pyramid(n as u64)?,
            brute,
        );
    }
    for (a, b, h) in sweep_shapes() {
        let brute = two_peak_interval(a, b, h)?.mobius()?;
        c.eq(
            || format!("mobius_two_peak({a},{b},{h})"),
            mobius_two_peak(a, b, h)?,
            brute,
        );
        if a != b {
            c.eq(
                || format!("mobius_two_peak({b},{a},{h}) (swapped)"),
                mobius_two_peak(b, a, h)?,
                brute,
            );
        }
    }
    for n in 2..=8 {
        let brute = Interval::build(staircase(n - 1)?, staircase(n + 1)?, &limits)?.mobius()?;
        c.eq(
            || format!("mobius_staircase_rank2({n})"),
            mobius_staircase_rank2(n as u64)?,
            brute,
        );
    }
    for n in 1..=7 {
        let brute = Interval::build(elevated_staircase(n)?, elevated_staircase(n + 2)?, &limits)?
            .mobius()?;
        c.eq(
            || format!("mobius_elevated_staircase_rank2({n})"),
            mobius_elevated_staircase_rank2(n as u64)?,
            brute,
        );
    }
    for top in ["UUUDUDDD", "UDUUUDDD"] {
        let brute = initial(top.parse()?, &limits)?.mobius()?;
        c.eq(|| format!("μ(UD,{top})"), brute, 0);
    }
    Ok(c.finish())
}

pub fn bijections() -> Result<SuiteReport> {
    let mut c = Checker::new("bijections");
    let limits = Limits::default();

    let mut cumulative = 0u64;
    for n in 1..=9usize {
        cumulative += count_peakless_motzkin(n, DEFAULT_MOTZKIN_CEILING)?;
        c.eq(
            || format!("peak-less Motzkin words of length <= {n}"),
            cumulative,
            SIZE_SEQUENCE[n - 1],
        );
    }
    for len in 0..=12 {
        for m in peakless_motzkin_words(len, DEFAULT_MOTZKIN_CEILING)? {
            let back = dyck_to_motzkin(&motzkin_to_dyck(&m)?);
            let label = format!("motzkin roundtrip {m}");
            c.eq(|| label, back, m);
        }
    }
    for n in 1..=8 {
        for d in generate_all(n, &limits)? {
            let m = dyck_to_motzkin(&d);
            c.eq(|| format!("dyck roundtrip {d}"), motzkin_to_dyck(&m)?, d);
        }
    }
    for k in 1..=7 {
        for d in generate_all(k, &limits)? {
            let motzkin_len = dyck_to_motzkin(&d).len();
            let runs = d.runs();
            let ascents = d.statistics().ascents as u64;
            for n in 1..=9usize {
                let member = contains(&d, &staircase(n)?);
                c.eq(
                    || format!("membership transport {d} in (UD)^{n}"),
                    motzkin_len <= n,
                    member,
                );
                c.eq(
                    || format!("run criterion {d} in (UD)^{n}"),
                    embeddable_in_staircase(&runs, n as u64),
                    member,
                );
                c.eq(
                    || format!("ascent criterion {d} in (UD)^{n}"),
                    staircase_admits(ascents, k as u64, n as u64),
                    member,
                );
            }
        }
    }

    let theta = triples_in_grid(5, 5);
    for &s in &theta {
        c.eq(
            || format!("triple roundtrip {s}"),
            path_to_triple(&triple_to_path(s)?)?,
            s,
        );
        for &t in &theta {
            let by_paths = contains(&triple_to_path(s)?, &triple_to_path(t)?);
            c.eq(|| format!("{s} ⊑ {t}"), triple_leq(s, t), by_paths);
            let sq = square_leq(triple_to_square(s, 5, 5)?, triple_to_square(t, 5, 5)?, 5, 5)?;
            c.eq(|| format!("squares {s} ≤ {t}"), sq, by_paths);
        }
    }
    for rows in 1..=4 {
        for cols in 1..=4 {
            let squares = squares_in_grid(rows, cols);
            for &x in &squares {
                c.truth(
                    || format!("square order reflexive at {x:?}"),
                    square_leq(x, x, rows, cols)?,
                );
                for &y in &squares {
                    let xy = square_leq(x, y, rows, cols)?;
                    let yx = square_leq(y, x, rows, cols)?;
                    c.truth(
                        || format!("square order antisymmetric {x:?} {y:?}"),
                        !(xy && yx) || x == y,
                    );
                    for &z in &squares {
                        if xy && square_leq(y, z, rows, cols)? {
                            c.truth(
                                || format!("square order transitive {x:?} {y:?} {z:?}"),
                                square_leq(x, z, rows, cols)?,
                            );
                        }
                    }
                }
            }
        }
    }
    let example: DyckWord = GRID_EXAMPLE_PATH.parse()?;
    c.eq(
        || "grid example triple".into(),
        path_to_triple(&example)?,
        GRID_EXAMPLE_TRIPLE,
    );
    c.eq(
        || "grid example square".into(),
        triple_to_square(GRID_EXAMPLE_TRIPLE, 4, 6)?,
        GRID_EXAMPLE_SQUARE,
    );
    c.truth(
        || "grid example path below Q_{4,6}^{(0)}".into(),
        contains(&example, &two_peak(4, 6, 0)?),
    );
    Ok(c.finish())
}

pub fn covercount() -> Result<SuiteReport> {
    let mut c = Checker::new("covercount");
    let report = sweep_cover_count(7, &Limits::default())?;
    c.checks += report.pairs_checked;
    if report.verdict == Verdict::Violated {
        for w in report.witnesses {
            c.mismatches.push(format!(
                "covers of {}: brute {} vs formula {:?}",
                w.bottom, w.value, w.expected
            ));
        }
    }
    Ok(c.finish())
}
