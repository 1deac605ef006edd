//! Python bindings for the burnt pancake graph cycle toolkit.
//!
//! Exposes signed permutations, generator words, cycle synthesis,
//! verification, 8-cycle classification, and the brute-force oracle.
//!
//! Usage from Python:
//!
//!     from burnt_pancake_py import SignedPerm, synth_cycle, verify
//!     w = synth_cycle(5, 385)
//!     assert verify(5, w.word) and w.length == 385

use burnt_pancake::base_cycles;
use burnt_pancake::eight_cycles;
use burnt_pancake::error::Error;
use burnt_pancake::graph;
use burnt_pancake::oracle;
use burnt_pancake::perm;
use burnt_pancake::synthesis;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

fn to_py_err(e: Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// A signed permutation in window notation; a vertex of BP_n.
#[pyclass(frozen, eq, hash, skip_from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct SignedPerm {
    inner: perm::SignedPerm,
}

#[pymethods]
impl SignedPerm {
    /// Build from a window like [-2, -1, 3].
    #[new]
    fn new(window: Vec<i8>) -> PyResult<Self> {
        Ok(SignedPerm {
            inner: perm::SignedPerm::new(window).map_err(to_py_err)?,
        })
    }

    #[staticmethod]
    fn identity(n: usize) -> PyResult<Self> {
        Ok(SignedPerm {
            inner: perm::SignedPerm::identity(n).map_err(to_py_err)?,
        })
    }

    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        Ok(SignedPerm {
            inner: perm::SignedPerm::parse(text).map_err(to_py_err)?,
        })
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    fn window(&self) -> Vec<i8> {
        self.inner.window().to_vec()
    }

    /// Apply the prefix reversal r_i (reverse and negate the first i
    /// symbols).
    fn apply_reversal(&self, i: usize) -> PyResult<Self> {
        Ok(SignedPerm {
            inner: self.inner.apply_reversal(i).map_err(to_py_err)?,
        })
    }

    fn compose(&self, other: &SignedPerm) -> PyResult<Self> {
        Ok(SignedPerm {
            inner: self.inner.compose(&other.inner).map_err(to_py_err)?,
        })
    }

    fn inverse(&self) -> Self {
        SignedPerm {
            inner: self.inner.inverse(),
        }
    }

    /// Dense rank in [0, 2^n n!).
    fn rank(&self) -> u128 {
        graph::rank(&self.inner)
    }

    /// The n neighbors in BP_n, in generator order.
    fn neighbors(&self) -> Vec<SignedPerm> {
        graph::neighbors(&self.inner)
            .into_iter()
            .map(|inner| SignedPerm { inner })
            .collect()
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("SignedPerm({})", self.inner)
    }
}

/// Inverse of `SignedPerm.rank`.
#[pyfunction]
fn unrank(n: usize, r: u128) -> PyResult<SignedPerm> {
    Ok(SignedPerm {
        inner: graph::unrank(n, r).map_err(to_py_err)?,
    })
}

/// A synthesized cycle: start vertex, word, and the plan trace as JSON.
#[pyclass(frozen)]
struct CycleWitness {
    #[pyo3(get)]
    n: usize,
    #[pyo3(get)]
    length: u64,
    /// The generator word (digit form for n <= 9, list form otherwise).
    #[pyo3(get)]
    word: String,
    #[pyo3(get)]
    start: String,
    /// Synthesis plan tree rendered as JSON.
    #[pyo3(get)]
    plan_json: String,
}

#[pymethods]
impl CycleWitness {
    fn __repr__(&self) -> String {
        format!("CycleWitness(n={}, length={})", self.n, self.length)
    }
}

/// Synthesize a validated simple cycle of exact length `length` in BP_n.
#[pyfunction]
fn synth_cycle(n: usize, length: u64) -> PyResult<CycleWitness> {
    let (witness, plan) = synthesis::synth_cycle(n, length).map_err(to_py_err)?;
    Ok(CycleWitness {
        n,
        length,
        word: witness.word.format(),
        start: witness.start.to_string(),
        plan_json: serde_json::to_string(&plan)
            .map_err(|e| PyValueError::new_err(e.to_string()))?,
    })
}

/// Walk `word` from the identity of BP_n; true iff it traces a simple
/// closed cycle.
#[pyfunction]
fn verify(n: usize, word: &str) -> PyResult<bool> {
    let word = perm::GenWord::parse(word, n).map_err(to_py_err)?;
    let start = perm::SignedPerm::identity(n).map_err(to_py_err)?;
    let check = perm::check_cycle(&start, &word).map_err(to_py_err)?;
    Ok(check.is_simple_cycle())
}

/// Vertex count, edge count, and edge density of BP_n.
#[pyfunction]
fn stats(py: Python<'_>, n: usize) -> PyResult<Py<PyDict>> {
    let s = graph::stats(n).map_err(to_py_err)?;
    let d = PyDict::new(py);
    d.set_item("n", s.n)?;
    d.set_item("vertices", s.vertices)?;
    d.set_item("edges", s.edges)?;
    d.set_item("density", (s.density.num, s.density.den))?;
    Ok(d.into())
}

/// The scaffold cycle C_k of BP_n with its per-copy edge profile.
#[pyfunction]
fn base_cycle(py: Python<'_>, n: usize, k: usize) -> PyResult<Py<PyDict>> {
    let spec = base_cycles::base_cycle(n, k).map_err(to_py_err)?;
    let profile = base_cycles::copy_profile(&spec).map_err(to_py_err)?;
    let d = PyDict::new(py);
    d.set_item("word", spec.word.format())?;
    d.set_item("length", spec.length)?;
    d.set_item("case", spec.case_tag.to_string())?;
    d.set_item("copies_visited", profile.copies_visited)?;
    d.set_item(
        "per_copy",
        profile
            .per_copy
            .iter()
            .map(|(c, e)| (c.0, *e))
            .collect::<Vec<_>>(),
    )?;
    Ok(d.into())
}

/// Total number of distinct 8-cycles in BP_n (closed form).
#[pyfunction]
fn count_8cycles(n: usize) -> PyResult<u128> {
    eight_cycles::count_8cycles(n).map_err(to_py_err)
}

/// Number of 8-cycles through any fixed vertex of BP_n.
#[pyfunction]
fn count_8cycles_through_vertex(n: usize) -> PyResult<u128> {
    eight_cycles::count_through_vertex(n).map_err(to_py_err)
}

/// Classify a canonical 8-cycle word into its family, e.g.
/// "F2(i=2, j=2, k=4)".
#[pyfunction]
fn classify_8cycle(n: usize, word: &str) -> PyResult<String> {
    let word = perm::GenWord::parse(word, n).map_err(to_py_err)?;
    Ok(eight_cycles::classify(&word).map_err(to_py_err)?.to_string())
}

/// Rewrite an 8-cycle (start + word) in canonical form; returns
/// (word, start).
#[pyfunction]
fn canonicalize_8cycle(start: &SignedPerm, word: &str) -> PyResult<(String, String)> {
    let word = perm::GenWord::parse(word, start.inner.n()).map_err(to_py_err)?;
    let witness =
        synthesis::CycleWitness::new_validated(start.inner.clone(), word).map_err(to_py_err)?;
    let canon = eight_cycles::canonicalize(&witness).map_err(to_py_err)?;
    Ok((canon.word.format(), canon.start.to_string()))
}

/// Girth of BP_n (or of the unsigned pancake graph P_n).
#[pyfunction]
#[pyo3(signature = (n, unsigned = false))]
fn girth(n: usize, unsigned: bool) -> PyResult<usize> {
    let g = if unsigned {
        oracle::build_unsigned_explicit(n, oracle::DEFAULT_VERTEX_CAP).map_err(to_py_err)?
    } else {
        oracle::build_signed_explicit(n, oracle::DEFAULT_VERTEX_CAP).map_err(to_py_err)?
    };
    oracle::girth(&g).ok_or_else(|| PyValueError::new_err("graph is acyclic"))
}

/// Count simple cycles of exact length `length`; returns
/// (total, through_identity).
#[pyfunction]
#[pyo3(signature = (n, length, unsigned = false))]
fn count_cycles(n: usize, length: usize, unsigned: bool) -> PyResult<(u64, u64)> {
    let g = if unsigned {
        oracle::build_unsigned_explicit(n, oracle::DEFAULT_VERTEX_CAP).map_err(to_py_err)?
    } else {
        oracle::build_signed_explicit(n, oracle::DEFAULT_VERTEX_CAP).map_err(to_py_err)?
    };
    let e = oracle::enumerate_cycles_of_length(&g, length, false, oracle::DEFAULT_NODE_BUDGET)
        .map_err(to_py_err)?;
    Ok((e.total, e.through_identity))
}

/// DFS for a cycle of exact length through the identity (n <= 4); returns
/// the word or None.
#[pyfunction]
fn find_cycle(n: usize, length: u64) -> PyResult<Option<String>> {
    Ok(
        oracle::find_cycle_dfs(n, length, oracle::DEFAULT_NODE_BUDGET)
            .map_err(to_py_err)?
            .map(|w| w.word.format()),
    )
}

/// Shortest-path distance between two vertices of BP_n.
#[pyfunction]
fn bfs_distance(u: &SignedPerm, v: &SignedPerm) -> PyResult<usize> {
    oracle::bfs_distance(&u.inner, &v.inner, oracle::DEFAULT_VERTEX_CAP).map_err(to_py_err)
}

#[pymodule]
fn burnt_pancake_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<SignedPerm>()?;
    m.add_class::<CycleWitness>()?;
    m.add_function(wrap_pyfunction!(unrank, m)?)?;
    m.add_function(wrap_pyfunction!(synth_cycle, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(stats, m)?)?;
    m.add_function(wrap_pyfunction!(base_cycle, m)?)?;
    m.add_function(wrap_pyfunction!(count_8cycles, m)?)?;
    m.add_function(wrap_pyfunction!(count_8cycles_through_vertex, m)?)?;
    m.add_function(wrap_pyfunction!(classify_8cycle, m)?)?;
    m.add_function(wrap_pyfunction!(canonicalize_8cycle, m)?)?;
    m.add_function(wrap_pyfunction!(girth, m)?)?;
    m.add_function(wrap_pyfunction!(count_cycles, m)?)?;
    m.add_function(wrap_pyfunction!(find_cycle, m)?)?;
    m.add_function(wrap_pyfunction!(bfs_distance, m)?)?;
    Ok(())
}
