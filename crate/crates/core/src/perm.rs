//! Signed permutations, prefix reversals, generator words, and walks.
//!
//! A signed permutation is stored in window notation `[w(1) .. w(n)]` where
//! the absolute values form a permutation of `{1..n}`. The prefix reversal
//! `r_i` reverses and negates the first `i` window symbols. Edges of the
//! burnt pancake graph follow the right-multiplication convention: applying
//! `r_i` to `w` yields the neighbor `w * r_i`.

use crate::error::{Error, Result};
use std::collections::HashSet;
use std::fmt;

/// Largest supported dimension. Ranks are dense `u128` values in
/// `[0, 2^n n!)`, which overflows beyond this point.
pub const MAX_DIM: usize = 25;

/// A signed permutation in window notation; a vertex of BP_n.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPerm {
    window: Vec<i8>,
}

impl SignedPerm {
    /// Builds a signed permutation from its window, checking that the
    /// absolute values are a permutation of `{1..n}`.
    pub fn new(window: Vec<i8>) -> Result<Self> {
        let n = window.len();
        if !(1..=MAX_DIM).contains(&n) {
            return Err(Error::InvalidDimension(n));
        }
        let mut seen = vec![false; n + 1];
        for &s in &window {
            let a = s.unsigned_abs() as usize;
            if s == 0 || a > n || seen[a] {
                return Err(Error::Parse {
                    msg: format!("window {window:?} is not a signed permutation of 1..{n}"),
                });
            }
            seen[a] = true;
        }
        Ok(SignedPerm { window })
    }

    /// The identity `[1 2 .. n]`.
    pub fn identity(n: usize) -> Result<Self> {
        if !(1..=MAX_DIM).contains(&n) {
            return Err(Error::InvalidDimension(n));
        }
        Ok(SignedPerm {
            window: (1..=n as i8).collect(),
        })
    }

    pub fn n(&self) -> usize {
        self.window.len()
    }

    pub fn window(&self) -> &[i8] {
        &self.window
    }

    /// Last window symbol; determines which copy of BP_{n-1} the vertex
    /// belongs to.
    pub fn last(&self) -> i8 {
        *self.window.last().expect("nonempty window")
    }

    /// Applies the prefix reversal `r_i`: the first `i` symbols are reversed
    /// and negated, the rest are unchanged.
    pub fn apply_reversal(&self, i: usize) -> Result<Self> {
        let n = self.n();
        if i < 1 || i > n {
            return Err(Error::InvalidGenerator { i: i as i64, n });
        }
        let mut w = self.window.clone();
        w[..i].reverse();
        for s in &mut w[..i] {
            *s = -*s;
        }
        Ok(SignedPerm { window: w })
    }

    /// The reversal `r_i` itself as a signed permutation (so that
    /// `compose(w, reversal_perm) == apply_reversal(w, i)`).
    pub fn reversal_perm(n: usize, i: usize) -> Result<Self> {
        SignedPerm::identity(n)?.apply_reversal(i)
    }

    /// Group product `self * other`, i.e. `(self*other)(j) = self(other(j))`
    /// extended to signs.
    pub fn compose(&self, other: &SignedPerm) -> Result<Self> {
        let n = self.n();
        if n != other.n() {
            return Err(Error::DimensionMismatch {
                left: n,
                right: other.n(),
            });
        }
        let window = other
            .window
            .iter()
            .map(|&v| {
                let img = self.window[(v.unsigned_abs() as usize) - 1];
                if v < 0 {
                    -img
                } else {
                    img
                }
            })
            .collect();
        Ok(SignedPerm { window })
    }

    /// Group inverse.
    pub fn inverse(&self) -> Self {
        let n = self.n();
        let mut window = vec![0i8; n];
        for (j, &v) in self.window.iter().enumerate() {
            let a = (v.unsigned_abs() as usize) - 1;
            window[a] = if v < 0 { -((j + 1) as i8) } else { (j + 1) as i8 };
        }
        SignedPerm { window }
    }

    pub fn is_identity(&self) -> bool {
        self.window
            .iter()
            .enumerate()
            .all(|(j, &v)| v == (j + 1) as i8)
    }

    /// Parses the text form `"[s1 s2 .. sn]"` with signed decimal integers.
    pub fn parse(text: &str) -> Result<Self> {
        let t = text.trim();
        let inner = t
            .strip_prefix('[')
            .and_then(|s| s.strip_suffix(']'))
            .ok_or_else(|| Error::Parse {
                msg: format!("expected \"[s1 s2 .. sn]\", got {text:?}"),
            })?;
        let mut window = Vec::new();
        for tok in inner.split_whitespace() {
            let v: i64 = tok.parse().map_err(|_| Error::Parse {
                msg: format!("bad symbol {tok:?} in {text:?}"),
            })?;
            if v == 0 || v.unsigned_abs() as usize > MAX_DIM {
                return Err(Error::Parse {
                    msg: format!("symbol {v} out of range in {text:?}"),
                });
            }
            window.push(v as i8);
        }
        SignedPerm::new(window)
    }
}

impl fmt::Display for SignedPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (j, v) in self.window.iter().enumerate() {
            if j > 0 {
                write!(f, " ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

/// A sequence of reversal indices; labels an edge walk in BP_n.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GenWord {
    letters: Vec<u8>,
    n: usize,
}

impl GenWord {
    pub fn new(letters: Vec<u8>, n: usize) -> Result<Self> {
        if !(1..=MAX_DIM).contains(&n) {
            return Err(Error::InvalidDimension(n));
        }
        for &l in &letters {
            if l < 1 || l as usize > n {
                return Err(Error::InvalidGenerator { i: l as i64, n });
            }
        }
        Ok(GenWord { letters, n })
    }

    pub fn letters(&self) -> &[u8] {
        &self.letters
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Whether the letter sequence has cycle-word shape: nonempty, no two
    /// consecutive equal letters, and first != last (each `r_i` is an
    /// involution, so equal adjacent letters immediately revisit a vertex).
    pub fn is_cycle_word_shape(&self) -> bool {
        !self.letters.is_empty()
            && self.letters.windows(2).all(|p| p[0] != p[1])
            && self.letters.first() != self.letters.last()
    }

    /// Reinterprets the same letters at a higher dimension `n`. With all
    /// letters `<= n-1` the walk from `identity(n)` stays inside the copy
    /// BP_{n-1}(n).
    pub fn embed(&self, n: usize) -> Result<Self> {
        if n < self.n {
            return Err(Error::InvalidDimension(n));
        }
        GenWord::new(self.letters.clone(), n)
    }

    /// Cyclic rotation putting the first occurrence of `letter` last. The
    /// rotation of a cycle-word is the same cycle read from a shifted start,
    /// so closure and simplicity are preserved.
    pub fn rotate_to_trailing(&self, letter: u8) -> Result<Self> {
        let pos = self
            .letters
            .iter()
            .position(|&l| l == letter)
            .ok_or(Error::LetterAbsent { letter })?;
        let mut rotated = Vec::with_capacity(self.letters.len());
        rotated.extend_from_slice(&self.letters[pos + 1..]);
        rotated.extend_from_slice(&self.letters[..=pos]);
        Ok(GenWord {
            letters: rotated,
            n: self.n,
        })
    }

    /// Parses a word: either a separator-free digit string (valid only for
    /// n <= 9, the form used for published cycle listings) or a whitespace/
    /// comma separated list of integers.
    pub fn parse(text: &str, n: usize) -> Result<Self> {
        let t = text.trim();
        if t.is_empty() {
            return Err(Error::Parse {
                msg: "empty word".into(),
            });
        }
        // digit form is only defined for n <= 9; for larger n an all-digit
        // token reads as a single integer letter in list form
        if n <= 9 && t.bytes().all(|b| b.is_ascii_digit()) {
            let letters = t.bytes().map(|b| b - b'0').collect();
            return GenWord::new(letters, n);
        }
        let mut letters = Vec::new();
        for tok in t.split(|c: char| c.is_whitespace() || c == ',') {
            if tok.is_empty() {
                continue;
            }
            let v: i64 = tok.parse().map_err(|_| Error::Parse {
                msg: format!("bad letter {tok:?}"),
            })?;
            if v < 1 || v > n as i64 {
                return Err(Error::InvalidGenerator { i: v, n });
            }
            letters.push(v as u8);
        }
        GenWord::new(letters, n)
    }

    /// Digit form when n <= 9, otherwise space-separated list form.
    pub fn format(&self) -> String {
        if self.n <= 9 {
            self.letters.iter().map(|l| (b'0' + l) as char).collect()
        } else {
            self.format_list()
        }
    }

    pub fn format_list(&self) -> String {
        self.letters
            .iter()
            .map(|l| l.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl fmt::Display for GenWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.format())
    }
}

/// The full vertex trace of a walk, with closure and simplicity flags.
#[derive(Debug, Clone)]
pub struct WalkTrace {
    pub vertices: Vec<SignedPerm>,
    pub closed: bool,
    pub simple: bool,
}

/// Walks `word` from `start`, recording every vertex.
pub fn walk(start: &SignedPerm, word: &GenWord) -> Result<WalkTrace> {
    if start.n() != word.n() {
        return Err(Error::DimensionMismatch {
            left: start.n(),
            right: word.n(),
        });
    }
    let mut vertices = Vec::with_capacity(word.len() + 1);
    vertices.push(start.clone());
    let mut v = start.clone();
    for &l in word.letters() {
        v = v.apply_reversal(l as usize)?;
        vertices.push(v.clone());
    }
    let closed = vertices.first() == vertices.last();
    let distinct = {
        let mut seen = HashSet::with_capacity(word.len());
        let body = if closed {
            &vertices[..vertices.len() - 1]
        } else {
            &vertices[..]
        };
        body.iter().all(|p| seen.insert(crate::graph::rank(p)))
    };
    // a closed 2-walk has distinct interior vertices but traverses its one
    // edge twice (each flip is an involution); it is not a simple cycle
    let simple = distinct && !(closed && word.len() == 2);
    Ok(WalkTrace {
        vertices,
        closed,
        simple,
    })
}

/// Outcome of a streaming cycle check; does not retain the trace.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleCheck {
    pub closed: bool,
    pub simple: bool,
    pub length: usize,
    /// Position of the first revisited vertex when not simple.
    pub first_violation: Option<usize>,
}

impl CycleCheck {
    pub fn is_simple_cycle(&self) -> bool {
        self.closed && self.simple
    }
}

/// Checks whether walking `word` from `start` traces a simple closed cycle,
/// keeping only a set of visited ranks.
pub fn check_cycle(start: &SignedPerm, word: &GenWord) -> Result<CycleCheck> {
    if start.n() != word.n() {
        return Err(Error::DimensionMismatch {
            left: start.n(),
            right: word.n(),
        });
    }
    let mut seen = HashSet::with_capacity(word.len());
    seen.insert(crate::graph::rank(start));
    let mut v = start.clone();
    let mut simple = true;
    let mut first_violation = None;
    let mut closed = word.is_empty();
    for (t, &l) in word.letters().iter().enumerate() {
        v = v.apply_reversal(l as usize)?;
        let is_final = t + 1 == word.len();
        if is_final {
            closed = v == *start;
        }
        // the final vertex of a closed walk revisits the start by design
        if !(is_final && closed) && !seen.insert(crate::graph::rank(&v)) && simple {
            simple = false;
            first_violation = Some(t + 1);
        }
    }
    if closed && word.len() == 2 && simple {
        // a backtrack: the single edge is traversed twice
        simple = false;
        first_violation = Some(1);
    }
    Ok(CycleCheck {
        closed,
        simple,
        length: word.len(),
        first_violation,
    })
}

/// Product of the word's letters as a signed permutation (left-to-right
/// right-multiplication). A walk is closed iff this is the identity.
pub fn word_product(word: &GenWord) -> Result<SignedPerm> {
    let mut p = SignedPerm::identity(word.n())?;
    for &l in word.letters() {
        p = p.apply_reversal(l as usize)?;
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(s: &str) -> SignedPerm {
        SignedPerm::parse(s).unwrap()
    }

    #[test]
    fn identity_small() {
        assert_eq!(SignedPerm::identity(3).unwrap().window(), &[1, 2, 3]);
        assert_eq!(SignedPerm::identity(1).unwrap().window(), &[1]);
        assert!(SignedPerm::identity(0).is_err());
    }

    #[test]
    fn reversal_matches_figures() {
        // BP_2 edge 12 -- -2 -1
        let e2 = SignedPerm::identity(2).unwrap();
        assert_eq!(e2.apply_reversal(2).unwrap(), perm("[-2 -1]"));
        // BP_3 edges 123 -- -2 -1 3 and 123 -- -1 2 3
        let e3 = SignedPerm::identity(3).unwrap();
        assert_eq!(e3.apply_reversal(2).unwrap(), perm("[-2 -1 3]"));
        assert_eq!(e3.apply_reversal(1).unwrap(), perm("[-1 2 3]"));
    }

    #[test]
    fn reversal_is_involution() {
        let w = perm("[3 -1 4 -2]");
        for i in 1..=4 {
            assert_eq!(w.apply_reversal(i).unwrap().apply_reversal(i).unwrap(), w);
        }
    }

    #[test]
    fn reversal_out_of_range() {
        let w = perm("[1 2 3]");
        assert!(w.apply_reversal(0).is_err());
        assert!(w.apply_reversal(4).is_err());
    }

    #[test]
    fn compose_and_inverse() {
        let e = SignedPerm::identity(3).unwrap();
        let w = perm("[3 -1 -2]");
        assert_eq!(e.compose(&w).unwrap(), w);
        assert_eq!(w.compose(&w.inverse()).unwrap(), e);
        // r_2 is an involution, so it is its own inverse
        let r2 = perm("[-2 -1 3]");
        assert_eq!(r2.inverse(), r2);
    }

    #[test]
    fn compose_with_reversal_perm() {
        let w = perm("[2 -4 1 -3]");
        for i in 1..=4 {
            let r = SignedPerm::reversal_perm(4, i).unwrap();
            assert_eq!(w.compose(&r).unwrap(), w.apply_reversal(i).unwrap());
        }
    }

    #[test]
    fn walk_bp2_eight_cycle() {
        let start = SignedPerm::identity(2).unwrap();
        let word = GenWord::parse("12121212", 2).unwrap();
        let trace = walk(&start, &word).unwrap();
        assert!(trace.closed && trace.simple);
        let distinct: std::collections::HashSet<_> =
            trace.vertices[..8].iter().cloned().collect();
        assert_eq!(distinct.len(), 8);
    }

    #[test]
    fn walk_not_closed_below_girth() {
        let start = SignedPerm::identity(3).unwrap();
        let word = GenWord::parse("121212", 3).unwrap();
        let trace = walk(&start, &word).unwrap();
        assert!(!trace.closed);
    }

    #[test]
    fn parse_format_perm() {
        let w = perm("[-2 -1 3]");
        assert_eq!(w.window(), &[-2, -1, 3]);
        assert_eq!(w.to_string(), "[-2 -1 3]");
        assert!(SignedPerm::parse("[1 1 2]").is_err());
        assert!(SignedPerm::parse("[0 1 2]").is_err());
        assert!(SignedPerm::parse("1 2 3").is_err());
    }

    #[test]
    fn parse_word_forms() {
        let w = GenWord::parse("12121212", 2).unwrap();
        assert_eq!(w.letters(), &[1, 2, 1, 2, 1, 2, 1, 2]);
        assert_eq!(w.format(), "12121212");
        let list = GenWord::parse("1, 2 ,1", 3).unwrap();
        assert_eq!(list.letters(), &[1, 2, 1]);
        // list form with letters >= 10 requires n >= 10
        assert!(GenWord::parse("10 2 10", 9).is_err());
        let big = GenWord::parse("10 2 10", 10).unwrap();
        assert_eq!(big.letters(), &[10, 2, 10]);
        assert_eq!(big.format(), "10 2 10");
        // for n > 9 an unseparated digit string is a single list token
        assert_eq!(GenWord::parse("12", 12).unwrap().letters(), &[12]);
        assert!(GenWord::parse("1212", 10).is_err());
    }

    #[test]
    fn cycle_word_shape() {
        assert!(GenWord::parse("1212", 2).unwrap().is_cycle_word_shape());
        assert!(!GenWord::parse("1122", 2).unwrap().is_cycle_word_shape());
        assert!(!GenWord::parse("121", 2).unwrap().is_cycle_word_shape());
    }

    #[test]
    fn rotate_to_trailing_basics() {
        let w = GenWord::parse("12123", 3).unwrap();
        let r = w.rotate_to_trailing(3).unwrap();
        assert_eq!(r.letters(), &[1, 2, 1, 2, 3]);
        let r2 = w.rotate_to_trailing(2).unwrap();
        assert_eq!(r2.letters(), &[1, 2, 3, 1, 2]);
        assert!(w.rotate_to_trailing(4).is_err());
    }

    #[test]
    fn closure_iff_word_product_identity() {
        let start = perm("[2 -3 1]");
        for text in ["12121212", "121212", "12321", "11"] {
            let word = GenWord::parse(text, 3).unwrap();
            let trace = walk(&start, &word).unwrap();
            assert_eq!(trace.closed, word_product(&word).unwrap().is_identity());
        }
    }

    #[test]
    fn check_cycle_reports_violation() {
        let start = SignedPerm::identity(3).unwrap();
        let word = GenWord::parse("11", 3).unwrap();
        let c = check_cycle(&start, &word).unwrap();
        assert!(c.closed);
        assert!(!c.simple);
        assert_eq!(c.first_violation, Some(1));
    }
}
