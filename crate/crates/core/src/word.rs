//! Dyck words: bit-packed storage, parsing, structural statistics,
//! subsequence containment and exhaustive generation.
//!
//! A word is stored as one bit per step (bit `i` set when step `i` is `U`)
//! together with its length, so that containment tests reduce to a handful of
//! shifts and `trailing_zeros` calls.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest semilength a [`DyckWord`] can hold (64 packed steps).
pub const MAX_SEMILENGTH: usize = 32;

/// Default ceiling for exhaustive generation; Catalan(14) is about 2.7 million.
pub const DEFAULT_GENERATION_CEILING: usize = 14;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Step {
    U,
    D,
}

impl Step {
    pub fn as_char(self) -> char {
        match self {
            Step::U => 'U',
            Step::D => 'D',
        }
    }
}

/// A balanced U/D word whose prefixes never dip below the axis.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct DyckWord {
    bits: u64,
    len: u8,
}

impl DyckWord {
    /// The empty word. Representable for generators, rejected by poset operations.
    pub const EMPTY: DyckWord = DyckWord { bits: 0, len: 0 };

    /// Parses a word over `{U, D}` (either case) or the parenthesis alias `(`/`)`.
    pub fn parse(text: &str) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() {
            return Err(Error::EmptyWord);
        }
        let mut steps = Vec::with_capacity(text.len());
        for (position, ch) in text.chars().enumerate() {
            let step = match ch {
                'U' | 'u' | '(' => Step::U,
                'D' | 'd' | ')' => Step::D,
                _ => return Err(Error::InvalidCharacter { ch, position }),
            };
            steps.push(step);
        }
        Self::from_steps(steps)
    }

    /// Validates a step sequence.
    pub fn from_steps<I: IntoIterator<Item = Step>>(steps: I) -> Result<Self> {
        let mut bits = 0u64;
        let mut len = 0usize;
        let mut ups = 0usize;
        let mut downs = 0usize;
        let mut first_violation = None;
        for step in steps {
            if len >= 2 * MAX_SEMILENGTH {
                return Err(Error::TooLong {
                    semilength: len / 2 + 1,
                    max: MAX_SEMILENGTH,
                });
            }
            match step {
                Step::U => {
                    bits |= 1 << len;
                    ups += 1;
                }
                Step::D => {
                    downs += 1;
                    if downs > ups && first_violation.is_none() {
                        first_violation = Some(len);
                    }
                }
            }
            len += 1;
        }
        if let Some(position) = first_violation {
            return Err(Error::PrefixViolation { position });
        }
        if ups != downs {
            return Err(Error::Unbalanced { ups, downs });
        }
        Ok(DyckWord {
            bits,
            len: len as u8,
        })
    }

    /// Builds a word from raw parts. Callers guarantee the Dyck property.
    pub(crate) fn from_raw(bits: u64, len: usize) -> Self {
        debug_assert!(len <= 2 * MAX_SEMILENGTH);
        DyckWord {
            bits,
            len: len as u8,
        }
    }

    /// Concatenates `U^count` or `D^count` blocks; the result is validated.
    pub fn from_blocks(blocks: &[(Step, usize)]) -> Result<Self> {
        Self::from_steps(
            blocks
                .iter()
                .flat_map(|&(step, count)| std::iter::repeat_n(step, count)),
        )
    }

    pub fn len(&self) -> usize {
        self.len as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn semilength(&self) -> usize {
        self.len() / 2
    }

    pub(crate) fn bits(&self) -> u64 {
        self.bits
    }

    fn mask(&self) -> u64 {
        if self.len == 64 {
            u64::MAX
        } else {
            (1u64 << self.len) - 1
        }
    }

    pub fn step(&self, index: usize) -> Step {
        assert!(index < self.len(), "step index out of bounds");
        if self.bits >> index & 1 == 1 {
            Step::U
        } else {
            Step::D
        }
    }

    pub fn steps(&self) -> impl Iterator<Item = Step> + '_ {
        (0..self.len()).map(move |i| self.step(i))
    }

    /// True iff `self` occurs as a (not necessarily contiguous) subsequence of `word`.
    ///
    /// Greedy leftmost matching: each step of the pattern is matched to the
    /// first unused equal step of `word`.
    pub fn is_pattern_of(&self, word: &DyckWord) -> bool {
        if self.len > word.len {
            return false;
        }
        if self.len == word.len {
            return self.bits == word.bits;
        }
        let ups = word.bits;
        let downs = !word.bits & word.mask();
        let mut pos = 0u32;
        for i in 0..self.len() {
            let pool = if self.bits >> i & 1 == 1 { ups } else { downs };
            let rest = pool.checked_shr(pos).unwrap_or(0);
            if rest == 0 {
                return false;
            }
            pos += rest.trailing_zeros() + 1;
        }
        true
    }

    pub fn runs(&self) -> RunForm {
        let mut runs = Vec::new();
        let mut i = 0;
        let n = self.len();
        while i < n {
            let start = i;
            while i < n && self.step(i) == Step::U {
                i += 1;
            }
            let ups = i - start;
            let start = i;
            while i < n && self.step(i) == Step::D {
                i += 1;
            }
            runs.push((ups, i - start));
        }
        RunForm { runs }
    }

    pub fn peaks(&self) -> usize {
        // U at position i followed by D at position i + 1.
        let next_is_down = !(self.bits >> 1) & (self.mask() >> 1);
        (self.bits & next_is_down).count_ones() as usize
    }

    pub fn statistics(&self) -> WordStats {
        let mut height = 0i64;
        let mut max_height = 0i64;
        let mut ascents = 0usize;
        let mut previous = None;
        for step in self.steps() {
            match step {
                Step::U => {
                    height += 1;
                    max_height = max_height.max(height);
                    if previous != Some(Step::U) {
                        ascents += 1;
                    }
                }
                Step::D => height -= 1,
            }
            previous = Some(step);
        }
        WordStats {
            semilength: self.semilength(),
            peaks: self.peaks(),
            ascents,
            height: max_height as usize,
        }
    }

    /// Semilengths of the irreducible blocks between consecutive returns to the axis.
    pub fn factors(&self) -> Vec<usize> {
        let mut factors = Vec::new();
        let mut height = 0usize;
        let mut start = 0usize;
        for (i, step) in self.steps().enumerate() {
            match step {
                Step::U => height += 1,
                Step::D => height -= 1,
            }
            if height == 0 {
                factors.push((i + 1 - start) / 2);
                start = i + 1;
            }
        }
        factors
    }

    /// Appends `other` after `self`.
    pub fn concat(&self, other: &DyckWord) -> Result<DyckWord> {
        let len = self.len() + other.len();
        if len > 2 * MAX_SEMILENGTH {
            return Err(Error::TooLong {
                semilength: len / 2,
                max: MAX_SEMILENGTH,
            });
        }
        Ok(DyckWord::from_raw(
            self.bits | other.bits.checked_shl(self.len as u32).unwrap_or(0),
            len,
        ))
    }

    /// `U · self · D`.
    pub fn elevate(&self) -> Result<DyckWord> {
        let len = self.len() + 2;
        if len > 2 * MAX_SEMILENGTH {
            return Err(Error::TooLong {
                semilength: len / 2,
                max: MAX_SEMILENGTH,
            });
        }
        Ok(DyckWord::from_raw(1 | self.bits << 1, len))
    }
}

impl Ord for DyckWord {
    /// Shorter words first; equal lengths compare lexicographically with `U < D`.
    fn cmp(&self, other: &Self) -> Ordering {
        self.len.cmp(&other.len).then_with(|| {
            let diff = self.bits ^ other.bits;
            if diff == 0 {
                Ordering::Equal
            } else if self.bits >> diff.trailing_zeros() & 1 == 1 {
                Ordering::Less
            } else {
                Ordering::Greater
            }
        })
    }
}

impl PartialOrd for DyckWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for DyckWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = self.steps().map(Step::as_char).collect();
        f.write_str(&s)
    }
}

impl fmt::Debug for DyckWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            f.write_str("DyckWord(ε)")
        } else {
            write!(f, "DyckWord({self})")
        }
    }
}

impl FromStr for DyckWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        DyckWord::parse(s)
    }
}

impl Serialize for DyckWord {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for DyckWord {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        DyckWord::parse(&text).map_err(serde::de::Error::custom)
    }
}

/// Object rendering of a word: `{"word": "UUDUDD", "semilength": 3}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WordRecord {
    pub word: DyckWord,
    pub semilength: usize,
}

impl From<DyckWord> for WordRecord {
    fn from(word: DyckWord) -> Self {
        WordRecord {
            word,
            semilength: word.semilength(),
        }
    }
}

/// `contains(pattern, word)`: subsequence containment.
pub fn contains(pattern: &DyckWord, word: &DyckWord) -> bool {
    pattern.is_pattern_of(word)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct WordStats {
    pub semilength: usize,
    pub peaks: usize,
    pub ascents: usize,
    pub height: usize,
}

/// Alternating run lengths `U^α₁ D^β₁ … U^αₘ D^βₘ`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct RunForm {
    runs: Vec<(usize, usize)>,
}

impl RunForm {
    pub fn new(runs: Vec<(usize, usize)>) -> Result<Self> {
        if let Some(index) = runs.iter().position(|&(u, d)| u == 0 || d == 0) {
            return Err(Error::InvalidShapeParameters(format!(
                "run pair {index} has a zero length"
            )));
        }
        Ok(RunForm { runs })
    }

    pub fn runs(&self) -> &[(usize, usize)] {
        &self.runs
    }

    /// Number of (ascent, descent) pairs; equals the peak count.
    pub fn m(&self) -> usize {
        self.runs.len()
    }

    pub fn alpha(&self) -> usize {
        self.runs.iter().map(|r| r.0).sum()
    }

    pub fn beta(&self) -> usize {
        self.runs.iter().map(|r| r.1).sum()
    }

    pub fn to_word(&self) -> Result<DyckWord> {
        let blocks: Vec<(Step, usize)> = self
            .runs
            .iter()
            .flat_map(|&(u, d)| [(Step::U, u), (Step::D, d)])
            .collect();
        DyckWord::from_blocks(&blocks)
    }
}

/// Generation ceiling shared by every brute-force routine.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub max_semilength: usize,
}

impl Limits {
    pub fn new(max_semilength: usize) -> Self {
        Limits { max_semilength }
    }

    pub(crate) fn check(&self, what: &'static str, semilength: usize) -> Result<()> {
        let limit = self.max_semilength.min(MAX_SEMILENGTH);
        if semilength > limit {
            return Err(Error::LimitExceeded {
                what,
                requested: semilength,
                limit,
            });
        }
        Ok(())
    }
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_semilength: DEFAULT_GENERATION_CEILING,
        }
    }
}

/// All Dyck words of `semilength`, in lexicographic order with `U < D`.
pub fn generate_all(semilength: usize, limits: &Limits) -> Result<Vec<DyckWord>> {
    limits.check("semilength", semilength)?;
    let mut out = Vec::new();
    for_each_word(semilength, |w| out.push(w));
    Ok(out)
}

/// Visits every word of `semilength` in lexicographic order, without a ceiling check.
pub(crate) fn for_each_word(semilength: usize, mut visit: impl FnMut(DyckWord)) {
    fn rec(
        bits: u64,
        len: usize,
        ups: usize,
        downs: usize,
        n: usize,
        visit: &mut dyn FnMut(DyckWord),
    ) {
        if len == 2 * n {
            visit(DyckWord::from_raw(bits, len));
            return;
        }
        if ups < n {
            rec(bits | 1 << len, len + 1, ups + 1, downs, n, visit);
        }
        if downs < ups {
            rec(bits, len + 1, ups, downs + 1, n, visit);
        }
    }
    rec(0, 0, 0, 0, semilength, &mut visit);
}

/// Named families of words.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Shape {
    /// `(UD)^n`
    Staircase(usize),
    /// `U^n D^n`
    Pyramid(usize),
    /// `U^{a+h} D^a U^b D^{b+h}`
    TwoPeak { a: usize, b: usize, h: usize },
    /// `U (UD)^{n-1} D`, semilength `n`
    ElevatedStaircase(usize),
}

pub fn make(shape: Shape) -> Result<DyckWord> {
    let bad = |msg: String| Err(Error::InvalidShapeParameters(msg));
    let semilength = match shape {
        Shape::Staircase(n) | Shape::Pyramid(n) | Shape::ElevatedStaircase(n) => {
            if n == 0 {
                return bad(format!("{shape:?}: n must be at least 1"));
            }
            n
        }
        Shape::TwoPeak { a, b, h } => {
            if a == 0 || b == 0 {
                return bad(format!("{shape:?}: a and b must be at least 1"));
            }
            a + b + h
        }
    };
    if semilength > MAX_SEMILENGTH {
        return Err(Error::TooLong {
            semilength,
            max: MAX_SEMILENGTH,
        });
    }
    let blocks: Vec<(Step, usize)> = match shape {
        Shape::Staircase(n) => (0..n).flat_map(|_| [(Step::U, 1), (Step::D, 1)]).collect(),
        Shape::Pyramid(n) => vec![(Step::U, n), (Step::D, n)],
        Shape::TwoPeak { a, b, h } => {
            vec![
                (Step::U, a + h),
                (Step::D, a),
                (Step::U, b),
                (Step::D, b + h),
            ]
        }
        Shape::ElevatedStaircase(n) => {
            let mut blocks = vec![(Step::U, 1)];
            blocks.extend((1..n).flat_map(|_| [(Step::U, 1), (Step::D, 1)]));
            blocks.push((Step::D, 1));
            blocks
        }
    };
    DyckWord::from_blocks(&blocks)
}

pub fn staircase(n: usize) -> Result<DyckWord> {
    make(Shape::Staircase(n))
}

pub fn pyramid(n: usize) -> Result<DyckWord> {
    make(Shape::Pyramid(n))
}

pub fn two_peak(a: usize, b: usize, h: usize) -> Result<DyckWord> {
    make(Shape::TwoPeak { a, b, h })
}

pub fn elevated_staircase(n: usize) -> Result<DyckWord> {
    make(Shape::ElevatedStaircase(n))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> DyckWord {
        s.parse().unwrap()
    }

    #[test]
    fn parse_examples() {
        assert_eq!(w("UUDD").semilength(), 2);
        assert_eq!(w("UDUDUD").semilength(), 3);
        assert_eq!(
            DyckWord::parse("UDD"),
            Err(Error::PrefixViolation { position: 2 })
        );
        assert_eq!(
            DyckWord::parse("UUD"),
            Err(Error::Unbalanced { ups: 2, downs: 1 })
        );
        assert_eq!(
            DyckWord::parse("UXD"),
            Err(Error::InvalidCharacter {
                ch: 'X',
                position: 1
            })
        );
        assert_eq!(DyckWord::parse(""), Err(Error::EmptyWord));
        assert_eq!(w("uudd"), w("UUDD"));
        assert_eq!(w("(())()"), w("UUDDUD"));
        assert_eq!(w("(())()").to_string(), "UUDDUD");
    }

    #[test]
    fn prefix_violation_reported_before_balance() {
        // "DU" is balanced but dips below the axis immediately.
        assert_eq!(
            DyckWord::parse("DU"),
            Err(Error::PrefixViolation { position: 0 })
        );
    }

    #[test]
    fn too_long_words_are_rejected() {
        let text = "UD".repeat(MAX_SEMILENGTH);
        assert_eq!(w(&text).semilength(), MAX_SEMILENGTH);
        let text = "UD".repeat(MAX_SEMILENGTH + 1);
        assert!(matches!(DyckWord::parse(&text), Err(Error::TooLong { .. })));
    }

    #[test]
    fn containment_examples() {
        assert!(contains(&w("UUDD"), &w("UDUDUD")));
        assert!(!contains(&w("UUDDUD"), &w("UUDUUUDDDD")));
        assert!(!contains(&w("UUDUUUDDDD"), &w("UUDDUD")));
        assert!(contains(&w("UUDUDD"), &w("UUDUDD")));
        assert!(!contains(&w("UUDD"), &w("UDUD")));
        assert!(contains(&DyckWord::EMPTY, &w("UD")));
    }

    #[test]
    fn full_length_word_containment() {
        let big = staircase(MAX_SEMILENGTH).unwrap();
        assert!(contains(&w("UUDD"), &big));
        assert!(contains(&pyramid(16).unwrap(), &big));
        assert!(!contains(&pyramid(17).unwrap(), &big));
        let top = pyramid(MAX_SEMILENGTH).unwrap();
        assert!(contains(&pyramid(MAX_SEMILENGTH - 1).unwrap(), &top));
        assert!(!contains(&w("UDUD"), &top));
    }

    #[test]
    fn runs_examples() {
        let r = w("UUUUDDUUUDDDDD").runs();
        assert_eq!(r.runs(), &[(4, 2), (3, 5)]);
        assert_eq!((r.m(), r.alpha(), r.beta()), (2, 7, 7));
        assert_eq!(staircase(3).unwrap().runs().runs(), &[(1, 1); 3]);
        assert_eq!(pyramid(3).unwrap().runs().runs(), &[(3, 3)]);
        assert_eq!(r.to_word().unwrap(), w("UUUUDDUUUDDDDD"));
        assert!(RunForm::new(vec![(1, 0)]).is_err());
    }

    #[test]
    fn statistics_examples() {
        let s = |x: &str| {
            let st = w(x).statistics();
            (st.semilength, st.peaks, st.ascents, st.height)
        };
        assert_eq!(s("UUDD"), (2, 1, 1, 2));
        assert_eq!(s("UDUDUD"), (3, 3, 3, 1));
        let q = two_peak(2, 3, 1).unwrap().statistics();
        assert_eq!((q.semilength, q.peaks, q.ascents, q.height), (6, 2, 2, 4));
    }

    #[test]
    fn factor_examples() {
        assert_eq!(w("UUDD").factors(), vec![2]);
        assert_eq!(w("UDUD").factors(), vec![1, 1]);
        assert_eq!(w("UUDDUDUUUDDD").factors(), vec![2, 1, 3]);
    }

    #[test]
    fn generation_counts_and_order() {
        let limits = Limits::default();
        assert_eq!(generate_all(0, &limits).unwrap(), vec![DyckWord::EMPTY]);
        let three = generate_all(3, &limits).unwrap();
        let texts: Vec<String> = three.iter().map(|w| w.to_string()).collect();
        assert_eq!(texts, ["UUUDDD", "UUDUDD", "UUDDUD", "UDUUDD", "UDUDUD"]);
        assert_eq!(generate_all(5, &limits).unwrap().len(), 42);
        assert!(matches!(
            generate_all(15, &limits),
            Err(Error::LimitExceeded { .. })
        ));
    }

    #[test]
    fn shapes() {
        assert_eq!(staircase(2).unwrap(), w("UDUD"));
        assert_eq!(two_peak(2, 3, 1).unwrap(), w("UUUDDUUUDDDD"));
        assert_eq!(pyramid(3).unwrap(), w("UUUDDD"));
        assert_eq!(elevated_staircase(3).unwrap(), w("UUDUDD"));
        assert_eq!(elevated_staircase(1).unwrap(), w("UD"));
        assert!(matches!(
            make(Shape::TwoPeak { a: 0, b: 1, h: 0 }),
            Err(Error::InvalidShapeParameters(_))
        ));
        assert!(make(Shape::Staircase(0)).is_err());
        assert!(matches!(staircase(40), Err(Error::TooLong { .. })));
    }

    #[test]
    fn concat_and_elevate() {
        assert_eq!(w("UD").concat(&w("UUDD")).unwrap(), w("UDUUDD"));
        assert_eq!(w("UDUD").elevate().unwrap(), w("UUDUDD"));
    }

    #[test]
    fn json_record() {
        let rec = WordRecord::from(w("UUDUDD"));
        assert_eq!(
            serde_json::to_string(&rec).unwrap(),
            r#"{"word":"UUDUDD","semilength":3}"#
        );
    }
}
