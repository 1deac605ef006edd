//! Construction of a simple cycle of any requested length in BP_n.
//!
//! Lengths from 8 up to 2^n n! are produced recursively. Short lengths are
//! served by the validated ground-truth tables (n = 3, 4) or reused one
//! dimension down and embedded inside the copy BP_{n-1}(n). Longer lengths
//! are decomposed as `len = a * 2^{n-1}(n-1)! + b` and built by splicing
//! recursively synthesized cycles into single-edge copies of a base cycle:
//! each splice replaces one sub-maximal flip edge of the scaffold with an
//! inner cycle minus its own matching edge, growing the length by
//! `inner - 2` while staying simple (the inner path is confined to its
//! copy). Every witness is re-validated by a full walk before it leaves
//! this module.

use crate::base_cycles::{self, CaseTag};
use crate::corpus::Corpus;
use crate::error::{Error, Result};
use crate::graph;
use crate::perm::{check_cycle, GenWord, SignedPerm};
use serde::Serialize;
use std::collections::BTreeMap;
use std::sync::{Arc, Mutex, OnceLock};

/// Dimensions above this overflow u64 lengths and are far beyond anything
/// materializable anyway.
pub const MAX_SYNTH_DIM: usize = 14;

/// A start vertex plus a word whose walk is a validated simple cycle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleWitness {
    pub n: usize,
    pub start: SignedPerm,
    pub word: GenWord,
}

impl CycleWitness {
    /// Walk-validates and wraps a witness.
    pub fn new_validated(start: SignedPerm, word: GenWord) -> Result<Self> {
        let check = check_cycle(&start, &word)?;
        if !check.is_simple_cycle() {
            return Err(Error::NotACycle(format!(
                "closed={} simple={} violation={:?}",
                check.closed, check.simple, check.first_violation
            )));
        }
        Ok(CycleWitness {
            n: word.n(),
            start,
            word,
        })
    }

    pub fn len(&self) -> u64 {
        self.word.len() as u64
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }
}

/// How a synthesized cycle was assembled; a proof-trace of the recursion.
#[derive(Debug, Clone, Serialize)]
#[serde(tag = "step")]
pub enum SynthPlan {
    /// Looked up in the validated ground-truth table.
    CorpusLookup { n: usize, length: u64 },
    /// The unique 8-cycle of BP_2.
    FixedCycle { n: usize, length: u64 },
    /// A memoized Hamiltonian word reused as an inner cycle.
    Hamiltonian { n: usize, length: u64 },
    /// A lower-dimensional word reused unchanged inside BP_{n-1}(n).
    Embed { n: usize, inner: Box<SynthPlan> },
    /// A base cycle with inner cycles spliced into single-edge copies.
    Merge {
        n: usize,
        length: u64,
        case: &'static str,
        a: u64,
        b: u64,
        base_k: usize,
        base_tag: CaseTag,
        base_length: u64,
        splices: Vec<SpliceStep>,
    },
}

#[derive(Debug, Clone, Serialize)]
pub struct SpliceStep {
    /// Position in the base word whose letter was replaced.
    pub position: usize,
    /// Last window symbol of the copy the inner cycle lives in.
    pub copy: i8,
    pub inner_length: u64,
    pub inner: Box<SynthPlan>,
}

impl SynthPlan {
    /// Recomputes the length this plan claims to produce; must equal the
    /// witness length.
    pub fn total_length(&self) -> u64 {
        match self {
            SynthPlan::CorpusLookup { length, .. }
            | SynthPlan::FixedCycle { length, .. }
            | SynthPlan::Hamiltonian { length, .. } => *length,
            SynthPlan::Embed { inner, .. } => inner.total_length(),
            SynthPlan::Merge {
                base_length,
                splices,
                ..
            } => {
                base_length
                    + splices
                        .iter()
                        .map(|s| s.inner.total_length() - 2)
                        .sum::<u64>()
            }
        }
    }

    /// Renders the plan as an indented tree.
    pub fn render(&self) -> String {
        let mut out = String::new();
        self.render_into(&mut out, 0);
        out
    }

    fn render_into(&self, out: &mut String, depth: usize) {
        let pad = "  ".repeat(depth);
        match self {
            SynthPlan::CorpusLookup { n, length } => {
                out.push_str(&format!("{pad}corpus-lookup n={n} length={length}\n"));
            }
            SynthPlan::FixedCycle { n, length } => {
                out.push_str(&format!("{pad}fixed-cycle n={n} length={length}\n"));
            }
            SynthPlan::Hamiltonian { n, length } => {
                out.push_str(&format!("{pad}hamiltonian n={n} length={length}\n"));
            }
            SynthPlan::Embed { n, inner } => {
                out.push_str(&format!("{pad}embed-in-copy n={n}\n"));
                inner.render_into(out, depth + 1);
            }
            SynthPlan::Merge {
                n,
                length,
                case,
                a,
                b,
                base_k,
                base_tag,
                base_length,
                splices,
            } => {
                out.push_str(&format!(
                    "{pad}merge n={n} length={length} case={case} a={a} b={b} \
                     base-cycle(k={base_k}, {base_tag}, length={base_length})\n"
                ));
                for s in splices {
                    out.push_str(&format!(
                        "{pad}  splice position={} copy={} inner-length={}\n",
                        s.position, s.copy, s.inner_length
                    ));
                    s.inner.render_into(out, depth + 2);
                }
            }
        }
    }
}

/// Reinterprets a word one dimension up; the walk from `identity(n)` then
/// stays inside the copy BP_{n-1}(n).
pub fn embed_in_copy(word: &GenWord, n: usize) -> Result<GenWord> {
    if word.letters().iter().any(|&l| l as usize >= n) {
        return Err(Error::InvalidGenerator {
            i: n as i64,
            n: n - 1,
        });
    }
    word.embed(n)
}

/// Splices `inner` (a cycle-word whose trailing letter matches the letter
/// at `base[pos]`) into `base`, replacing that single letter with the whole
/// inner word minus its trailing letter. Since each flip is an involution,
/// the first m-1 letters of an m-letter cycle-word multiply to exactly the
/// removed letter, so closure is preserved and the length grows by
/// `inner.len() - 2`.
pub fn splice(base: &GenWord, pos: usize, inner: &GenWord) -> Result<GenWord> {
    if base.n() != inner.n() {
        return Err(Error::DimensionMismatch {
            left: base.n(),
            right: inner.n(),
        });
    }
    let target = *base.letters().get(pos).ok_or_else(|| {
        Error::Construction(format!("splice position {pos} out of range"))
    })?;
    if inner.letters().last() != Some(&target) {
        return Err(Error::Construction(format!(
            "inner word does not trail with r_{target}"
        )));
    }
    let mut letters = Vec::with_capacity(base.len() + inner.len() - 2);
    letters.extend_from_slice(&base.letters()[..pos]);
    letters.extend_from_slice(&inner.letters()[..inner.len() - 1]);
    letters.extend_from_slice(&base.letters()[pos + 1..]);
    GenWord::new(letters, base.n())
}

/// Splits `len` as `a * 2^{n-1}(n-1)! + b` with `0 <= b < 2^{n-1}(n-1)!`.
/// `a` lands in [1, 2n-1] except for the full Hamiltonian length, which
/// yields `(2n, 0)`.
pub fn decompose(n: usize, len: u64) -> Result<(u64, u64)> {
    let ham_prev = half_interval(n);
    if len <= ham_prev || len > graph::vertex_count(n) as u64 {
        return Err(Error::Construction(format!(
            "decompose expects a length in ({ham_prev}, {}]",
            graph::vertex_count(n)
        )));
    }
    Ok((len / ham_prev, len % ham_prev))
}

/// `2^{n-1}(n-1)!`: vertices of one copy, the induction boundary.
fn half_interval(n: usize) -> u64 {
    ((1u128 << (n - 1)) * graph::factorial(n - 1)) as u64
}

/// Builds simple cycles of every feasible length, memoizing Hamiltonian
/// words per dimension (the most reused inner length).
pub struct Synthesizer {
    ham_memo: Mutex<BTreeMap<usize, Arc<GenWord>>>,
    dfs_fallback: bool,
}

impl Default for Synthesizer {
    fn default() -> Self {
        Self::new()
    }
}

impl Synthesizer {
    pub fn new() -> Self {
        Synthesizer {
            ham_memo: Mutex::new(BTreeMap::new()),
            dfs_fallback: false,
        }
    }

    /// Serve n in {3,4} from exhaustive search instead of the ground-truth
    /// tables (maintenance mode; slower, table-free).
    pub fn with_dfs_fallback() -> Self {
        Synthesizer {
            ham_memo: Mutex::new(BTreeMap::new()),
            dfs_fallback: true,
        }
    }

    /// Produces a validated witness of exact length `len` plus its plan.
    pub fn synth(&self, n: usize, len: u64) -> Result<(CycleWitness, SynthPlan)> {
        if !(2..=MAX_SYNTH_DIM).contains(&n) {
            return Err(Error::InvalidDimension(n));
        }
        let max = graph::vertex_count(n) as u64;
        if len < 8 || len > max {
            return Err(Error::UnreachableLength { n, length: len, max });
        }
        let (word, plan) = self.synth_word(n, len)?;
        let witness = CycleWitness::new_validated(SignedPerm::identity(n)?, word)?;
        if witness.len() != len {
            return Err(Error::Construction(format!(
                "synthesized word has length {}, wanted {len}",
                witness.len()
            )));
        }
        debug_assert_eq!(plan.total_length(), len);
        Ok((witness, plan))
    }

    /// Hamiltonian word of BP_n, memoized (write-once per dimension).
    fn hamiltonian_word(&self, n: usize) -> Result<Arc<GenWord>> {
        if let Some(w) = self.ham_memo.lock().expect("memo lock").get(&n) {
            return Ok(w.clone());
        }
        let len = graph::vertex_count(n) as u64;
        let (word, _) = self.synth_word(n, len)?;
        let word = Arc::new(word);
        self.ham_memo
            .lock()
            .expect("memo lock")
            .entry(n)
            .or_insert_with(|| word.clone());
        Ok(word)
    }

    fn synth_word(&self, n: usize, len: u64) -> Result<(GenWord, SynthPlan)> {
        let max = graph::vertex_count(n) as u64;
        if len < 8 || len > max {
            return Err(Error::UnreachableLength { n, length: len, max });
        }
        if n == 2 {
            // BP_2 is a single 8-cycle
            let word = GenWord::new(vec![1, 2, 1, 2, 1, 2, 1, 2], 2)?;
            return Ok((word, SynthPlan::FixedCycle { n, length: 8 }));
        }
        if n <= 4 {
            let word = match Corpus::builtin().lookup(n, len) {
                Ok(entry) => entry.word.clone(),
                Err(e) if self.dfs_fallback => {
                    match crate::oracle::find_cycle_dfs(n, len, crate::oracle::DEFAULT_NODE_BUDGET)?
                    {
                        Some(w) => w.word,
                        None => return Err(e),
                    }
                }
                Err(e) => return Err(e),
            };
            return Ok((word, SynthPlan::CorpusLookup { n, length: len }));
        }
        let ham_prev = half_interval(n);
        if len <= ham_prev {
            let (inner_word, inner_plan) = self.synth_word(n - 1, len)?;
            let word = embed_in_copy(&inner_word, n)?;
            return Ok((
                word,
                SynthPlan::Embed {
                    n,
                    inner: Box::new(inner_plan),
                },
            ));
        }
        self.merge(n, len)
    }

    /// The splice construction for lengths above `2^{n-1}(n-1)!`.
    fn merge(&self, n: usize, len: u64) -> Result<(GenWord, SynthPlan)> {
        let ham = half_interval(n); // Hamiltonian length of one copy
        let half = ham / 2;
        let lo = half_interval(n - 1) + 1; // shortest inner sure to cross copies of BP_{n-2}
        let n64 = n as u64;
        let (a, b) = decompose(n, len)?;
        let mid_start = n.div_ceil(2) as u64; // first a served by the 4n+2 base

        let (case, base_k, inners): (&'static str, usize, Vec<u64>) = if a == 2 * n64 {
            ("hamiltonian", n, vec![ham; 2 * n])
        } else if len == ham + 1 {
            // dedicated single-splice branch: 19 - 1 + (ham - 16) - 1
            ("plus-one", 1, vec![ham - 16])
        } else if a < mid_start {
            let base = base_cycles::base_cycle(n, a as usize)?;
            if base.case_tag == CaseTag::SmallK {
                let slack = b as i128 - 6 * a as i128 - 9;
                if slack > (lo - 1) as i128 {
                    let mut v = vec![ham; a as usize];
                    v.push(slack as u64);
                    ("small-a-full-inners", a as usize, v)
                } else {
                    let part = (1i128 << (n - 1)) * graph::factorial(n - 2) as i128;
                    let mut v = vec![ham; a as usize - 1];
                    v.push((part + slack) as u64);
                    v.push(ham - part as u64);
                    ("small-a-split-inners", a as usize, v)
                }
            } else {
                // boundary base of length 4n+2; use the half-inner shape,
                // rebalanced by -1 each so the total closes exactly
                let mut v = vec![half; 2 * a as usize - 2];
                v.push(half - 2 * n64 + 2 * a + b / 2 - 1);
                v.push(half - 2 * n64 + 2 * a + b.div_ceil(2) - 1);
                ("mid-a-half-inners", a as usize, v)
            }
        } else if a <= n64 - 3 {
            let mut v = vec![half; 2 * a as usize - 2];
            v.push(half - 2 * n64 + 2 * a + b / 2 - 1);
            v.push(half - 2 * n64 + 2 * a + b.div_ceil(2) - 1);
            ("mid-a-half-inners", a as usize, v)
        } else {
            // a in [n-2, 2n-1]: scaffold of length 4n with 2n single-edge
            // copies (for a = n-2 that is the adjusted base under the same k)
            let base_k = if a == n64 - 2 { n - 2 } else { n };
            let mut v = vec![ham; a as usize - 1];
            v.push(half - 2 * n64 + a + b / 2 + 1);
            v.push(half - 2 * n64 + a + b.div_ceil(2) + 1);
            ("large-a-paired-tail", base_k, v)
        };

        self.assemble(n, len, case, (a, b), base_k, &inners)
    }

    /// Splices `inners` (one per single-edge copy, in word order) into the
    /// base cycle `C_{base_k}`, asserting the exact length arithmetic.
    fn assemble(
        &self,
        n: usize,
        len: u64,
        case: &'static str,
        decomposition: (u64, u64),
        base_k: usize,
        inners: &[u64],
    ) -> Result<(GenWord, SynthPlan)> {
        let ham = half_interval(n);
        let lo = half_interval(n - 1) + 1;
        let base = base_cycles::base_cycle(n, base_k)?;
        let profile = base_cycles::copy_profile(&base)?;
        let c = inners.len();
        let need: i128 = len as i128 - base.length as i128 + 2 * c as i128;
        let got: i128 = inners.iter().map(|&x| x as i128).sum();
        if got != need {
            return Err(Error::Construction(format!(
                "merge arithmetic mismatch at n={n}, len={len}, case={case}: \
                 inner lengths sum to {got}, need {need}"
            )));
        }
        for &x in inners {
            if x < lo || x > ham {
                return Err(Error::Construction(format!(
                    "inner length {x} outside [{lo}, {ham}] at n={n}, len={len}, case={case}"
                )));
            }
        }
        if c > profile.splice_slots.len() {
            return Err(Error::Construction(format!(
                "base cycle (n={n}, k={base_k}) offers {} splice slots, need {c}",
                profile.splice_slots.len()
            )));
        }

        let mut steps = Vec::with_capacity(c);
        let mut replacements: Vec<(usize, GenWord)> = Vec::with_capacity(c);
        for (&(position, copy), &inner_len) in profile.splice_slots.iter().zip(inners) {
            let (inner_word, inner_plan) = if inner_len == ham {
                let w = self.hamiltonian_word(n - 1)?;
                (
                    (*w).clone(),
                    SynthPlan::Hamiltonian {
                        n: n - 1,
                        length: ham,
                    },
                )
            } else {
                self.synth_word(n - 1, inner_len)?
            };
            let rotated = embed_in_copy(&inner_word, n)?.rotate_to_trailing((n - 1) as u8)?;
            replacements.push((position, rotated));
            steps.push(SpliceStep {
                position,
                copy: copy.0,
                inner_length: inner_len,
                inner: Box::new(inner_plan),
            });
        }

        let mut letters = Vec::with_capacity(len as usize);
        let mut next = replacements.iter().peekable();
        for (t, &l) in base.word.letters().iter().enumerate() {
            match next.peek() {
                Some((pos, _)) if *pos == t => {
                    let (_, piece) = next.next().expect("peeked");
                    letters.extend_from_slice(&piece.letters()[..piece.len() - 1]);
                }
                _ => letters.push(l),
            }
        }
        let word = GenWord::new(letters, n)?;
        if word.len() as u64 != len {
            return Err(Error::Construction(format!(
                "spliced word length {} != requested {len}",
                word.len()
            )));
        }
        let plan = SynthPlan::Merge {
            n,
            length: len,
            case,
            a: decomposition.0,
            b: decomposition.1,
            base_k,
            base_tag: base.case_tag,
            base_length: base.length,
            splices: steps,
        };
        Ok((word, plan))
    }
}

fn global() -> &'static Synthesizer {
    static GLOBAL: OnceLock<Synthesizer> = OnceLock::new();
    GLOBAL.get_or_init(Synthesizer::new)
}

/// Synthesizes a validated simple cycle of exact length `len` in BP_n,
/// using a process-wide memo for Hamiltonian words.
pub fn synth_cycle(n: usize, len: u64) -> Result<(CycleWitness, SynthPlan)> {
    global().synth(n, len)
}
