//! Peak-less Motzkin words versus `[UD, (UD)^n]`, and two-peak paths versus
//! triples `(i, j; k)` versus squares in an `a × b` grid.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::word::{DyckWord, Step};

/// Default ceiling on brute-force Motzkin enumeration.
pub const DEFAULT_MOTZKIN_CEILING: usize = 20;

/// Declaration order gives the lexicographic order `U < D < L`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MotzkinStep {
    U,
    D,
    L,
}

impl MotzkinStep {
    fn as_char(self) -> char {
        match self {
            MotzkinStep::U => 'U',
            MotzkinStep::D => 'D',
            MotzkinStep::L => 'L',
        }
    }
}

/// A word over `{U, D, L}` whose U/D steps are balanced and prefix-nonnegative.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MotzkinWord {
    steps: Vec<MotzkinStep>,
}

impl MotzkinWord {
    pub fn from_steps(steps: Vec<MotzkinStep>) -> Result<Self> {
        let mut height = 0i64;
        for (position, step) in steps.iter().enumerate() {
            match step {
                MotzkinStep::U => height += 1,
                MotzkinStep::D => height -= 1,
                MotzkinStep::L => {}
            }
            if height < 0 {
                return Err(Error::InvalidMotzkin(format!(
                    "prefix ending at position {position} goes below the axis"
                )));
            }
        }
        if height != 0 {
            return Err(Error::InvalidMotzkin(format!(
                "unbalanced: final height {height}"
            )));
        }
        Ok(MotzkinWord { steps })
    }

    pub fn parse(text: &str) -> Result<Self> {
        let steps = text
            .trim()
            .chars()
            .map(|c| match c.to_ascii_uppercase() {
                'U' => Ok(MotzkinStep::U),
                'D' => Ok(MotzkinStep::D),
                'L' => Ok(MotzkinStep::L),
                other => Err(Error::InvalidMotzkin(format!(
                    "invalid character {other:?}"
                ))),
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_steps(steps)
    }

    pub fn steps(&self) -> impl Iterator<Item = MotzkinStep> + '_ {
        self.steps.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// No `U` immediately followed by `D`.
    pub fn is_peakless(&self) -> bool {
        !self
            .steps
            .windows(2)
            .any(|p| p == [MotzkinStep::U, MotzkinStep::D])
    }
}

impl fmt::Display for MotzkinWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = self.steps().map(MotzkinStep::as_char).collect();
        f.write_str(&s)
    }
}

impl FromStr for MotzkinWord {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        MotzkinWord::parse(s)
    }
}

impl Serialize for MotzkinWord {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Replaces every level step with a peak `UD`.
pub fn motzkin_to_dyck(word: &MotzkinWord) -> Result<DyckWord> {
    let steps = word.steps().flat_map(|s| match s {
        MotzkinStep::U => vec![Step::U],
        MotzkinStep::D => vec![Step::D],
        MotzkinStep::L => vec![Step::U, Step::D],
    });
    DyckWord::from_steps(steps)
}

/// Contracts every peak `UD` of a Dyck word to a level step, left to right.
pub fn dyck_to_motzkin(word: &DyckWord) -> MotzkinWord {
    let steps: Vec<Step> = word.steps().collect();
    let mut out = Vec::with_capacity(steps.len());
    let mut i = 0;
    while i < steps.len() {
        if steps[i] == Step::U && steps.get(i + 1) == Some(&Step::D) {
            out.push(MotzkinStep::L);
            i += 2;
        } else {
            out.push(match steps[i] {
                Step::U => MotzkinStep::U,
                Step::D => MotzkinStep::D,
            });
            i += 1;
        }
    }
    let image = MotzkinWord { steps: out };
    assert!(image.is_peakless(), "contraction of {word} left a peak");
    image
}

/// All peak-less Motzkin words of exactly `length`, lexicographic with U < D < L.
pub fn peakless_motzkin_words(length: usize, ceiling: usize) -> Result<Vec<MotzkinWord>> {
    if length > ceiling {
        return Err(Error::LimitExceeded {
            what: "Motzkin length",
            requested: length,
            limit: ceiling,
        });
    }
    fn rec(
        prefix: &mut Vec<MotzkinStep>,
        height: usize,
        length: usize,
        out: &mut Vec<MotzkinWord>,
    ) {
        let remaining = length - prefix.len();
        if remaining == 0 {
            if height == 0 {
                out.push(MotzkinWord {
                    steps: prefix.clone(),
                });
            }
            return;
        }
        if height > remaining {
            return;
        }
        let after_up = prefix.last() == Some(&MotzkinStep::U);
        for step in [MotzkinStep::U, MotzkinStep::D, MotzkinStep::L] {
            let next_height = match step {
                MotzkinStep::U => height + 1,
                MotzkinStep::D if height == 0 || after_up => continue,
                MotzkinStep::D => height - 1,
                MotzkinStep::L => height,
            };
            prefix.push(step);
            rec(prefix, next_height, length, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::with_capacity(length), 0, length, &mut out);
    Ok(out)
}

/// Number of peak-less Motzkin words of exactly `length`, by enumeration.
pub fn count_peakless_motzkin(length: usize, ceiling: usize) -> Result<u64> {
    Ok(peakless_motzkin_words(length, ceiling)?.len() as u64)
}

/// The triple `(i, j; k)` naming the two-peak path `U^{k+i} D^i U^j D^{j+k}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Triple {
    pub i: usize,
    pub j: usize,
    pub k: usize,
}

impl Triple {
    pub fn new(i: usize, j: usize, k: usize) -> Result<Self> {
        if i == 0 || j == 0 {
            return Err(Error::InvalidShapeParameters(format!(
                "triple ({i},{j};{k}) needs i, j >= 1"
            )));
        }
        Ok(Triple { i, j, k })
    }

    /// Membership in the set of triples for an `a × b` grid: `i + k ≤ a`, `j + k ≤ b`.
    pub fn fits(&self, a: usize, b: usize) -> bool {
        self.i >= 1 && self.j >= 1 && self.i + self.k <= a && self.j + self.k <= b
    }

    pub fn to_path(&self) -> Result<DyckWord> {
        triple_to_path(*self)
    }
}

impl fmt::Display for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{};{})", self.i, self.j, self.k)
    }
}

/// All triples fitting an `a × b` grid.
pub fn triples_in_grid(a: usize, b: usize) -> Vec<Triple> {
    let mut out = Vec::new();
    for k in 0..a.min(b) {
        for i in 1..=a - k {
            for j in 1..=b - k {
                out.push(Triple { i, j, k });
            }
        }
    }
    out
}

pub fn triple_to_path(t: Triple) -> Result<DyckWord> {
    DyckWord::from_blocks(&[
        (Step::U, t.k + t.i),
        (Step::D, t.i),
        (Step::U, t.j),
        (Step::D, t.j + t.k),
    ])
}

pub fn path_to_triple(word: &DyckWord) -> Result<Triple> {
    let runs = word.runs();
    match runs.runs() {
        &[(u1, d1), (u2, d2)] => {
            // A Dyck word forces u1 ≥ d1 and, by balance, d2 - u2 = u1 - d1.
            let k = u1 - d1;
            debug_assert_eq!(d2 - u2, k);
            Ok(Triple { i: d1, j: u2, k })
        }
        _ => Err(Error::NotTwoPeak(word.to_string())),
    }
}

/// `(α, β; γ) ⊑ (i, j; k)` iff `(α, β, γ) ≤ (i, j, min(i+k−α, j+k−β))` coordinatewise.
pub fn triple_leq(s: Triple, t: Triple) -> bool {
    let (alpha, beta, gamma) = (s.i as i64, s.j as i64, s.k as i64);
    let (i, j, k) = (t.i as i64, t.j as i64, t.k as i64);
    alpha <= i && beta <= j && gamma <= (i + k - alpha).min(j + k - beta)
}

/// A square in a grid whose rows are numbered top to bottom and columns left
/// to right, given by its topmost-leftmost cell and its side length.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct GridSquare {
    pub row: usize,
    pub col: usize,
    pub side: usize,
}

impl GridSquare {
    pub fn fits(&self, rows: usize, cols: usize) -> bool {
        self.row >= 1
            && self.col >= 1
            && self.side >= 1
            && self.row + self.side - 1 <= rows
            && self.col + self.side - 1 <= cols
    }

    /// Bottom-right cell, opposite to `(row, col)`.
    pub fn opposite(&self) -> (usize, usize) {
        (self.row + self.side - 1, self.col + self.side - 1)
    }

    fn check(&self, rows: usize, cols: usize) -> Result<()> {
        if self.fits(rows, cols) {
            Ok(())
        } else {
            Err(Error::OutOfGrid {
                row: self.row,
                col: self.col,
                side: self.side,
                rows,
                cols,
            })
        }
    }
}

pub fn triple_to_square(t: Triple, rows: usize, cols: usize) -> Result<GridSquare> {
    let square = GridSquare {
        row: t.i,
        col: t.j,
        side: t.k + 1,
    };
    square.check(rows, cols)?;
    Ok(square)
}

pub fn square_to_triple(s: GridSquare, rows: usize, cols: usize) -> Result<Triple> {
    s.check(rows, cols)?;
    Ok(Triple {
        i: s.row,
        j: s.col,
        k: s.side - 1,
    })
}

/// Every square that fits in a `rows × cols` grid, by enumerating positions and sides.
pub fn squares_in_grid(rows: usize, cols: usize) -> Vec<GridSquare> {
    let mut out = Vec::new();
    for row in 1..=rows {
        for col in 1..=cols {
            for side in 1..=(rows - row + 1).min(cols - col + 1) {
                out.push(GridSquare { row, col, side });
            }
        }
    }
    out
}

/// `s ≤ t` on squares: the topmost-leftmost cell of `s` lies in the rectangle
/// with corners `(1,1)` and `(t.row, t.col)`, and the opposite cell of `s`
/// lies in the rectangle with corners `(1,1)` and the opposite cell of `t`.
pub fn square_leq(s: GridSquare, t: GridSquare, rows: usize, cols: usize) -> Result<bool> {
    s.check(rows, cols)?;
    t.check(rows, cols)?;
    let in_rect =
        |cell: (usize, usize), corner: (usize, usize)| cell.0 <= corner.0 && cell.1 <= corner.1;
    Ok(in_rect((s.row, s.col), (t.row, t.col)) && in_rect(s.opposite(), t.opposite()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::{contains, staircase};

    fn w(s: &str) -> DyckWord {
        s.parse().unwrap()
    }

    fn m(s: &str) -> MotzkinWord {
        s.parse().unwrap()
    }

    #[test]
    fn motzkin_maps() {
        assert_eq!(motzkin_to_dyck(&m("LLLL")).unwrap(), staircase(4).unwrap());
        assert_eq!(motzkin_to_dyck(&m("ULD")).unwrap(), w("UUDD"));
        assert_eq!(motzkin_to_dyck(&m("LUDL")).unwrap(), w("UDUDUD"));
        assert_eq!(dyck_to_motzkin(&staircase(5).unwrap()), m("LLLLL"));
        assert_eq!(dyck_to_motzkin(&w("UUDD")), m("ULD"));
        assert_eq!(dyck_to_motzkin(&w("UUUDDD")), m("UULDD"));
        assert!(!m("LUDL").is_peakless());
        assert!(m("ULLD").is_peakless());
        assert!(MotzkinWord::parse("DU").is_err());
        assert!(MotzkinWord::parse("UL").is_err());
        assert!(MotzkinWord::parse("UXD").is_err());
    }

    #[test]
    fn motzkin_counts() {
        let counts: Vec<u64> = (0..10)
            .map(|l| count_peakless_motzkin(l, DEFAULT_MOTZKIN_CEILING).unwrap())
            .collect();
        assert_eq!(counts, [1, 1, 1, 2, 4, 8, 17, 37, 82, 185]);
        let four: Vec<String> = peakless_motzkin_words(4, 20)
            .unwrap()
            .iter()
            .map(|w| w.to_string())
            .collect();
        assert_eq!(four, ["ULDL", "ULLD", "LULD", "LLLL"]);
        let cumulative: u64 = (1..=5)
            .map(|l| count_peakless_motzkin(l, 20).unwrap())
            .sum();
        assert_eq!(cumulative, 16);
        assert!(count_peakless_motzkin(21, DEFAULT_MOTZKIN_CEILING).is_err());
    }

    #[test]
    fn triples() {
        let t = path_to_triple(&w("UUUUDDUUUDDDDD")).unwrap();
        assert_eq!(t, Triple { i: 2, j: 3, k: 2 });
        assert_eq!(triple_to_path(t).unwrap(), w("UUUUDDUUUDDDDD"));
        assert_eq!(
            path_to_triple(&w("UDUD")).unwrap(),
            Triple { i: 1, j: 1, k: 0 }
        );
        assert!(matches!(
            path_to_triple(&w("UUDD")),
            Err(Error::NotTwoPeak(_))
        ));
        assert!(matches!(
            path_to_triple(&w("UDUDUD")),
            Err(Error::NotTwoPeak(_))
        ));
        assert!(Triple::new(0, 1, 0).is_err());
    }

    #[test]
    fn triple_order_examples() {
        let top = Triple { i: 4, j: 6, k: 0 };
        assert!(triple_leq(Triple { i: 2, j: 3, k: 2 }, top));
        for t in triples_in_grid(4, 4) {
            assert!(triple_leq(Triple { i: 1, j: 1, k: 0 }, t));
        }
        for s in triples_in_grid(4, 4) {
            for t in triples_in_grid(4, 4) {
                let by_paths = contains(&triple_to_path(s).unwrap(), &triple_to_path(t).unwrap());
                assert_eq!(triple_leq(s, t), by_paths, "{s} vs {t}");
            }
        }
    }

    #[test]
    fn squares() {
        let sq = triple_to_square(Triple { i: 2, j: 3, k: 2 }, 4, 6).unwrap();
        assert_eq!(
            sq,
            GridSquare {
                row: 2,
                col: 3,
                side: 3
            }
        );
        assert_eq!(
            triple_to_square(Triple { i: 1, j: 1, k: 0 }, 1, 1).unwrap(),
            GridSquare {
                row: 1,
                col: 1,
                side: 1
            }
        );
        assert!(matches!(
            triple_to_square(Triple { i: 3, j: 3, k: 2 }, 4, 6),
            Err(Error::OutOfGrid { .. })
        ));
        assert_eq!(squares_in_grid(4, 6).len(), 50);
        assert_eq!(
            square_to_triple(sq, 4, 6).unwrap(),
            Triple { i: 2, j: 3, k: 2 }
        );
        // The top Q_{4,6}^{(0)} is the unit cell in the bottom-right corner.
        let top = triple_to_square(Triple { i: 4, j: 6, k: 0 }, 4, 6).unwrap();
        assert!(square_leq(sq, top, 4, 6).unwrap());
        assert!(!square_leq(top, sq, 4, 6).unwrap());
    }
}
