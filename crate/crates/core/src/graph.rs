//! The burnt pancake graph BP_n as an implicit graph.
//!
//! Provides neighbor generation, the copy structure over last window
//! symbols, a dense rank/unrank bijection, closed-form counts, and explicit
//! materialization for small n.
//!
//! Rank encoding (stable; corpora and bitsets depend on it): the n sign bits
//! of the window (w(1) most significant, bit set when the symbol is
//! negative) followed by the Lehmer code of the absolute-value permutation
//! in mixed radix. `rank(w) = signbits * n! + lehmer(|w|)`, a bijection onto
//! `[0, 2^n n!)`.

use crate::error::{Error, Result};
use crate::perm::SignedPerm;

/// Reference to the copy BP_{n-1}(q): all vertices whose window ends in q.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CopyRef(pub i8);

/// Closed-form counts of BP_n.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphStats {
    pub n: usize,
    pub vertices: u128,
    pub edges: u128,
    /// Edge density `n / (2^n n! - 1)` as a reduced exact rational.
    pub density: Rational,
}

/// Exact non-negative rational, kept reduced.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Rational {
    pub num: u128,
    pub den: u128,
}

impl Rational {
    pub fn new(num: u128, den: u128) -> Self {
        assert!(den != 0, "zero denominator");
        let g = gcd(num, den);
        Rational {
            num: num / g.max(1),
            den: den / g.max(1),
        }
    }
}

impl std::fmt::Display for Rational {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

/// `|B_n| = 2^n n!`.
pub fn vertex_count(n: usize) -> u128 {
    (1u128 << n) * factorial(n)
}

/// `|E_n| = n 2^{n-1} n!`.
pub fn edge_count(n: usize) -> u128 {
    n as u128 * (1u128 << (n - 1)) * factorial(n)
}

/// Closed-form stats for BP_n.
pub fn stats(n: usize) -> Result<GraphStats> {
    if !(1..=crate::perm::MAX_DIM).contains(&n) {
        return Err(Error::InvalidDimension(n));
    }
    Ok(GraphStats {
        n,
        vertices: vertex_count(n),
        edges: edge_count(n),
        density: Rational::new(n as u128, vertex_count(n) - 1),
    })
}

impl GraphStats {
    /// Density recomputed as `edges / C(vertices, 2)`; must equal the
    /// closed form after reduction. Errors when the intermediate product
    /// overflows u128.
    pub fn density_from_counts(&self) -> Result<Rational> {
        let pairs = self
            .vertices
            .checked_mul(self.vertices - 1)
            .ok_or_else(|| Error::ResourceLimit("C(|V|, 2) overflows u128".into()))?
            / 2;
        Ok(Rational::new(self.edges, pairs))
    }
}

/// The copy of BP_{n-1} containing `w`: its last window symbol.
pub fn copy_of(w: &SignedPerm) -> Result<CopyRef> {
    if w.n() < 2 {
        return Err(Error::InvalidDimension(w.n()));
    }
    Ok(CopyRef(w.last()))
}

/// The n neighbors `w r_1, .., w r_n`, in generator order.
pub fn neighbors(w: &SignedPerm) -> Vec<SignedPerm> {
    (1..=w.n())
        .map(|i| w.apply_reversal(i).expect("index in range"))
        .collect()
}

/// Dense rank in `[0, 2^n n!)`.
pub fn rank(w: &SignedPerm) -> u128 {
    let n = w.n();
    let mut signs: u128 = 0;
    for &s in w.window() {
        signs = (signs << 1) | u128::from(s < 0);
    }
    let mut lehmer: u128 = 0;
    let win = w.window();
    for i in 0..n {
        let a = win[i].unsigned_abs();
        let smaller = win[i + 1..]
            .iter()
            .filter(|s| s.unsigned_abs() < a)
            .count() as u128;
        lehmer = lehmer * (n - i) as u128 + smaller;
    }
    signs * factorial(n) + lehmer
}

/// Inverse of [`rank`].
pub fn unrank(n: usize, r: u128) -> Result<SignedPerm> {
    if !(1..=crate::perm::MAX_DIM).contains(&n) {
        return Err(Error::InvalidDimension(n));
    }
    if r >= vertex_count(n) {
        return Err(Error::Parse {
            msg: format!("rank {r} out of range for n = {n}"),
        });
    }
    let f = factorial(n);
    let signs = r / f;
    let mut lehmer = r % f;
    let mut digits = vec![0usize; n];
    for i in (0..n).rev() {
        let base = (n - i) as u128;
        digits[i] = (lehmer % base) as usize;
        lehmer /= base;
    }
    let mut avail: Vec<i8> = (1..=n as i8).collect();
    let mut window = Vec::with_capacity(n);
    for (i, &d) in digits.iter().enumerate() {
        let v = avail.remove(d);
        let neg = (signs >> (n - 1 - i)) & 1 == 1;
        window.push(if neg { -v } else { v });
    }
    SignedPerm::new(window)
}

/// Explicitly materialized BP_n (or unsigned P_n) for oracle work.
#[derive(Debug, Clone)]
pub struct ExplicitGraph {
    pub n: usize,
    /// adjacency: `adj[v][j]` is the neighbor of vertex v under the j-th
    /// generator (generators in ascending index order).
    pub adj: Vec<Vec<u32>>,
    /// generator index labeling `adj[v][j]`.
    pub labels: Vec<usize>,
}

impl ExplicitGraph {
    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn degree(&self) -> usize {
        self.labels.len()
    }
}

pub const DEFAULT_BUILD_CAP: usize = 7;

/// Materializes BP_n as ranked adjacency lists. Guarded by `cap` (maximum
/// dimension) since the graph has `2^n n!` vertices.
pub fn build_explicit(n: usize, cap: usize) -> Result<ExplicitGraph> {
    if n < 1 {
        return Err(Error::InvalidDimension(n));
    }
    if n > cap {
        return Err(Error::ResourceLimit(format!(
            "explicit BP_{n} exceeds the configured cap {cap}"
        )));
    }
    let count = vertex_count(n) as usize;
    let mut adj = Vec::with_capacity(count);
    for r in 0..count {
        let w = unrank(n, r as u128)?;
        adj.push(
            (1..=n)
                .map(|i| rank(&w.apply_reversal(i).expect("in range")) as u32)
                .collect(),
        );
    }
    Ok(ExplicitGraph {
        n,
        adj,
        labels: (1..=n).collect(),
    })
}

/// Sorted, deduplicated edge list `(rank1, rank2)` with `rank1 < rank2`.
pub fn edge_list(g: &ExplicitGraph) -> Vec<(u32, u32)> {
    let mut edges = Vec::with_capacity(g.adj.len() * g.degree() / 2);
    for (v, row) in g.adj.iter().enumerate() {
        for &u in row {
            if (v as u32) < u {
                edges.push((v as u32, u));
            }
        }
    }
    edges.sort_unstable();
    edges
}

/// Writes the edge list, one `rank1<TAB>rank2` line per edge.
pub fn write_edge_list<W: std::io::Write>(g: &ExplicitGraph, out: &mut W) -> Result<()> {
    for (a, b) in edge_list(g) {
        writeln!(out, "{a}\t{b}")?;
    }
    Ok(())
}

/// Writes an undirected DOT graph with window-notation labels and
/// generator-index edge labels.
pub fn write_dot<W: std::io::Write>(g: &ExplicitGraph, out: &mut W) -> Result<()> {
    writeln!(out, "graph bp{} {{", g.n)?;
    for v in 0..g.vertex_count() {
        let w = unrank(g.n, v as u128)?;
        writeln!(out, "  v{v} [label=\"{w}\"];")?;
    }
    for (v, row) in g.adj.iter().enumerate() {
        for (j, &u) in row.iter().enumerate() {
            if (v as u32) < u {
                writeln!(out, "  v{v} -- v{u} [label=\"r{}\"];", g.labels[j])?;
            }
        }
    }
    writeln!(out, "}}")?;
    Ok(())
}
