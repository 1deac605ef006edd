//! Classification, generation, enumeration, and counting of 8-cycles.
//!
//! Every 8-cycle of BP_n falls into one of four parameterized families of
//! canonical generator words (length-8 words, written with the
//! lexicographically maximal index sequence over all 8 rotations x 2
//! directions of the cycle):
//!
//! * F1 `r_k r_j r_i r_j r_k r_{k-j+i} r_i r_{k-j+i}` - two copies, 4+4;
//! * F2 `r_k r_j r_k r_i r_k r_j r_k r_i` - four copies, 2+2+2+2;
//! * F3 `r_k r_i r_k r_1 r_k r_i r_k r_1` - four copies, one absolute value
//!   repeated;
//! * F4 `(r_k r_1)^4` - four copies, two absolute values repeated.
//!
//! Within F1 the parameter pairs (i, j) and (i, k-j+i) describe the same
//! cycles read from opposite half-turns, and within F2 the pairs (i, j) and
//! (j, i) describe the same cycles shifted by two steps; enumeration
//! therefore dedups instances by canonical word. Per-word cycle counts come
//! from the word's rotation/reflection stabilizer, computed, not assumed:
//! a word fixed by s of the 16 traversal transforms yields `2^n n! / s`
//! distinct cycles, `8 / s` of them through any fixed vertex.

use crate::error::{Error, Result};
use crate::graph;
use crate::perm::{walk, GenWord, SignedPerm};
use crate::synthesis::CycleWitness;
use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt;

/// Parameters of one canonical family instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum FormShape {
    F1 { i: usize, j: usize, k: usize },
    F2 { i: usize, j: usize, k: usize },
    F3 { i: usize, k: usize },
    F4 { k: usize },
}

/// A canonical family instance at ambient dimension n.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CanonicalForm {
    pub n: usize,
    pub shape: FormShape,
}

impl fmt::Display for FormShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FormShape::F1 { i, j, k } => write!(f, "F1(i={i}, j={j}, k={k})"),
            FormShape::F2 { i, j, k } => write!(f, "F2(i={i}, j={j}, k={k})"),
            FormShape::F3 { i, k } => write!(f, "F3(i={i}, k={k})"),
            FormShape::F4 { k } => write!(f, "F4(k={k})"),
        }
    }
}

impl FormShape {
    pub fn family(&self) -> u8 {
        match self {
            FormShape::F1 { .. } => 1,
            FormShape::F2 { .. } => 2,
            FormShape::F3 { .. } => 3,
            FormShape::F4 { .. } => 4,
        }
    }

    fn letters(&self) -> [usize; 8] {
        match *self {
            FormShape::F1 { i, j, k } => {
                let m = k - j + i;
                [k, j, i, j, k, m, i, m]
            }
            FormShape::F2 { i, j, k } => [k, j, k, i, k, j, k, i],
            FormShape::F3 { i, k } => [k, i, k, 1, k, i, k, 1],
            FormShape::F4 { k } => [k, 1, k, 1, k, 1, k, 1],
        }
    }

    /// Parameter-range check (ambient dimension bounds k).
    pub fn in_range(&self, n: usize) -> bool {
        match *self {
            FormShape::F1 { i, j, k } => i >= 1 && i < j && j < k && (3..=n).contains(&k),
            FormShape::F2 { i, j, k } => {
                i >= 2 && j >= 2 && i + 2 <= k && j + 2 <= k && i + j <= k && (4..=n).contains(&k)
            }
            FormShape::F3 { i, k } => i >= 2 && i < k && (3..=n).contains(&k),
            FormShape::F4 { k } => (2..=n).contains(&k),
        }
    }
}

/// Builds the length-8 word of a family instance. Walking it from any
/// vertex yields a closed simple 8-cycle.
pub fn form_to_word(form: &CanonicalForm) -> Result<GenWord> {
    if !form.shape.in_range(form.n) {
        return Err(Error::FormParams(format!(
            "{} out of range for n = {}",
            form.shape, form.n
        )));
    }
    GenWord::new(
        form.shape.letters().iter().map(|&l| l as u8).collect(),
        form.n,
    )
}

/// The 16 letter sequences describing the same cycle: 8 rotations in each
/// direction. Traversal t of the reverse direction starting between
/// positions uses the letters in reverse order.
fn traversal_sequences(letters: &[u8]) -> Vec<(Vec<u8>, usize, bool)> {
    let len = letters.len();
    let mut out = Vec::with_capacity(2 * len);
    for r in 0..len {
        let fwd: Vec<u8> = (0..len).map(|t| letters[(r + t) % len]).collect();
        out.push((fwd, r, false));
        let rev: Vec<u8> = (0..len)
            .map(|t| letters[(r + len - 1 - t) % len])
            .collect();
        out.push((rev, r, true));
    }
    out
}

/// An 8-cycle in canonical form: the maximal word, the traversal origin
/// (ties broken by smallest vertex rank), and the sorted vertex-rank
/// fingerprint that identifies the cycle independently of traversal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EightCycle {
    pub word: GenWord,
    pub start: SignedPerm,
    pub fingerprint: Vec<u128>,
}

/// Rewrites an 8-cycle witness in canonical form.
pub fn canonicalize(witness: &CycleWitness) -> Result<EightCycle> {
    if witness.word.len() != 8 {
        return Err(Error::NotACycle(format!(
            "expected an 8-cycle, got length {}",
            witness.word.len()
        )));
    }
    let trace = walk(&witness.start, &witness.word)?;
    if !(trace.closed && trace.simple) {
        return Err(Error::NotACycle("walk is not a simple closed cycle".into()));
    }
    let verts = &trace.vertices[..8];
    let mut best: Option<(Vec<u8>, SignedPerm)> = None;
    for (seq, origin, _reverse) in traversal_sequences(witness.word.letters()) {
        // both directions start at the traversal origin v_origin
        let origin_vertex = verts[origin].clone();
        let replace = match &best {
            None => true,
            Some((bseq, bstart)) => {
                seq > *bseq
                    || (seq == *bseq && graph::rank(&origin_vertex) < graph::rank(bstart))
            }
        };
        if replace {
            best = Some((seq, origin_vertex));
        }
    }
    let (letters, start) = best.expect("16 traversals");
    let mut fingerprint: Vec<u128> = verts.iter().map(graph::rank).collect();
    fingerprint.sort_unstable();
    Ok(EightCycle {
        word: GenWord::new(letters, witness.n)?,
        start,
        fingerprint,
    })
}

/// Canonicalizes just the letter sequence (no walking): the maximal
/// traversal sequence of the word.
pub fn canonical_letters(word: &GenWord) -> Vec<u8> {
    traversal_sequences(word.letters())
        .into_iter()
        .map(|(seq, _, _)| seq)
        .max()
        .expect("nonempty")
}

/// Recognizes the family of a canonical 8-cycle word; inverse of
/// [`form_to_word`] on its image.
pub fn classify(word: &GenWord) -> Result<FormShape> {
    if word.len() != 8 {
        return Err(Error::NotACycle(format!(
            "expected 8 letters, got {}",
            word.len()
        )));
    }
    let l: Vec<usize> = word.letters().iter().map(|&x| x as usize).collect();
    let shape = match_shape(&l);
    if let Some(s) = shape {
        return Ok(s);
    }
    // distinguish a non-canonical traversal of a real 8-cycle from a word
    // that is no 8-cycle at all
    let canon: Vec<usize> = canonical_letters(word).iter().map(|&x| x as usize).collect();
    if canon != l && match_shape(&canon).is_some() {
        return Err(Error::NotCanonical);
    }
    Err(Error::NotACycle(
        "word matches no canonical 8-cycle family".into(),
    ))
}

fn match_shape(l: &[usize]) -> Option<FormShape> {
    let k = l[0];
    // four full flips: forms F2/F3/F4 with k at the odd positions
    if l[2] == k && l[4] == k && l[6] == k {
        let (j, i) = (l[1], l[3]);
        if l[5] != j || l[7] != i {
            return None;
        }
        if i == 1 && j == 1 {
            let s = FormShape::F4 { k };
            return s.in_range(k).then_some(s);
        }
        if i == 1 {
            let s = FormShape::F3 { i: j, k };
            // canonical requires the larger letter second: (k,i,k,1,..)
            return s.in_range(k).then_some(s);
        }
        if i >= 2 && j >= i {
            let s = FormShape::F2 { i, j, k };
            return s.in_range(k).then_some(s);
        }
        return None;
    }
    // two full flips: form F1, k at positions 0 and 4
    if l[4] == k {
        let (j, i, m) = (l[1], l[2], l[5]);
        if l[3] != j || l[6] != i || l[7] != m {
            return None;
        }
        if i < j && j < k && m + j == k + i && j >= m {
            let s = FormShape::F1 { i, j, k };
            return s.in_range(k).then_some(s);
        }
        return None;
    }
    None
}

/// One canonical instance with its symmetry-derived counts.
#[derive(Debug, Clone, Serialize)]
pub struct FormInstance {
    pub shape: FormShape,
    pub word: String,
    /// Number of the 16 traversal transforms fixing the word.
    pub symmetry: u32,
    /// Distinct cycles this instance contributes in BP_n.
    pub cycles: u128,
    /// Of those, how many pass through any fixed vertex.
    pub through_vertex: u128,
}

fn symmetry_of(letters: &[u8]) -> u32 {
    traversal_sequences(letters)
        .into_iter()
        .filter(|(seq, _, _)| seq == letters)
        .count() as u32
}

/// All canonical instances for dimension n, deduplicated by canonical word,
/// in family order then lexicographic parameter order.
pub fn instances(n: usize) -> Result<Vec<FormInstance>> {
    if !(2..=crate::perm::MAX_DIM).contains(&n) {
        return Err(Error::InvalidDimension(n));
    }
    let vertices = graph::vertex_count(n);
    let mut seen: BTreeMap<Vec<u8>, ()> = BTreeMap::new();
    let mut out = Vec::new();
    let mut push = |shape: FormShape| -> Result<()> {
        let form = CanonicalForm { n, shape };
        let word = form_to_word(&form)?;
        let canon = canonical_letters(&word);
        if seen.insert(canon.clone(), ()).is_some() {
            return Ok(());
        }
        let canonical_shape = classify(&GenWord::new(canon.clone(), n)?)?;
        let s = symmetry_of(&canon);
        debug_assert_eq!(s, symmetry_of(word.letters()));
        if !vertices.is_multiple_of(s as u128) || 8 % s != 0 {
            return Err(Error::Construction(format!(
                "symmetry {s} of {canonical_shape} does not divide the orbit"
            )));
        }
        out.push(FormInstance {
            shape: canonical_shape,
            word: GenWord::new(canon, n)?.format(),
            symmetry: s,
            cycles: vertices / s as u128,
            through_vertex: 8 / s as u128,
        });
        Ok(())
    };

    for k in 3..=n {
        for j in 2..k {
            for i in 1..j {
                push(FormShape::F1 { i, j, k })?;
            }
        }
    }
    for k in 4..=n {
        for i in 2..=k - 2 {
            for j in 2..=k - 2 {
                if i + j <= k {
                    push(FormShape::F2 { i, j, k })?;
                }
            }
        }
    }
    for k in 3..=n {
        for i in 2..k {
            push(FormShape::F3 { i, k })?;
        }
    }
    for k in 2..=n {
        push(FormShape::F4 { k })?;
    }
    Ok(out)
}

/// Total number of distinct 8-cycles in BP_n (closed form from the
/// canonical families; validated against brute force at small n).
pub fn count_8cycles(n: usize) -> Result<u128> {
    Ok(instances(n)?.iter().map(|f| f.cycles).sum())
}

/// Number of 8-cycles through any fixed vertex; independent of the vertex
/// by vertex-transitivity.
pub fn count_through_vertex(n: usize) -> Result<u128> {
    Ok(instances(n)?.iter().map(|f| f.through_vertex).sum())
}

/// Materializes every distinct 8-cycle of BP_n in deterministic order
/// (instances in family order, start vertices by rank, first sighting
/// wins). Gated by `cap` like explicit graph construction.
pub fn enumerate_8cycles(n: usize, cap: usize) -> Result<Vec<EightCycle>> {
    if n > cap {
        return Err(Error::ResourceLimit(format!(
            "explicit 8-cycle enumeration of BP_{n} exceeds the cap {cap}"
        )));
    }
    let vertices = graph::vertex_count(n) as usize;
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    for inst in instances(n)? {
        let word = GenWord::parse(&inst.word, n)?;
        for r in 0..vertices {
            let start = graph::unrank(n, r as u128)?;
            let witness = CycleWitness::new_validated(start, word.clone())?;
            let cycle = canonicalize(&witness)?;
            if seen.insert(cycle.fingerprint.clone()) {
                out.push(cycle);
            }
        }
    }
    Ok(out)
}
