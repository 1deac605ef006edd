//! Ground-truth cycle corpora for BP_3 and BP_4.
//!
//! The data files list one published cycle word per length (8..48 for n=3,
//! 8..384 for n=4), in the format `n<SPACE>length<SPACE>digitword`. Every
//! entry is walk-validated on load, so downstream code can trust lookups.
//! Synthesis at n in {3,4} is served from these tables.

use crate::error::{Error, Result};
use crate::perm::{check_cycle, GenWord, SignedPerm};
use std::collections::BTreeMap;
use std::sync::OnceLock;

const BP3_DATA: &str = include_str!("../data/bp3.txt");
const BP4_DATA: &str = include_str!("../data/bp4.txt");

/// Environment variable overriding the corpus location with a directory
/// containing `bp3.txt` / `bp4.txt`.
pub const DATA_DIR_ENV: &str = "BURNT_DATA_DIR";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusEntry {
    pub n: usize,
    pub length: u64,
    pub word: GenWord,
}

#[derive(Debug, Default)]
pub struct Corpus {
    entries: BTreeMap<(usize, u64), CorpusEntry>,
}

/// Per-entry validation outcome.
#[derive(Debug, Clone)]
pub struct CorpusReport {
    pub entries: usize,
    pub failures: Vec<String>,
}

impl CorpusReport {
    pub fn all_valid(&self) -> bool {
        self.failures.is_empty()
    }
}

impl Corpus {
    /// Parses corpus text, one `n length digitword` entry per line. Blank
    /// lines and `#` comments are ignored. Entries are validated afterwards
    /// via [`Corpus::validate`]; loading only checks syntax.
    pub fn parse(text: &str) -> Result<Self> {
        let mut entries = BTreeMap::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut parts = line.split_whitespace();
            let (n, length, word) = match (parts.next(), parts.next(), parts.next(), parts.next())
            {
                (Some(n), Some(l), Some(w), None) => (n, l, w),
                _ => {
                    return Err(Error::ParseAt {
                        line: lineno + 1,
                        msg: "expected `n length digitword`".into(),
                    })
                }
            };
            let n: usize = n.parse().map_err(|_| Error::ParseAt {
                line: lineno + 1,
                msg: format!("bad dimension {n:?}"),
            })?;
            let length: u64 = length.parse().map_err(|_| Error::ParseAt {
                line: lineno + 1,
                msg: format!("bad length {length:?}"),
            })?;
            let word = GenWord::parse(word, n).map_err(|e| Error::ParseAt {
                line: lineno + 1,
                msg: e.to_string(),
            })?;
            if entries
                .insert((n, length), CorpusEntry { n, length, word })
                .is_some()
            {
                return Err(Error::ParseAt {
                    line: lineno + 1,
                    msg: format!("duplicate entry for n={n}, length={length}"),
                });
            }
        }
        Ok(Corpus { entries })
    }

    pub fn load_file(path: &std::path::Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        Self::parse(&text)
    }

    /// The corpus shipped with the crate, parsed and validated once.
    /// Honors `BURNT_DATA_DIR` when set.
    pub fn builtin() -> &'static Corpus {
        static BUILTIN: OnceLock<Corpus> = OnceLock::new();
        BUILTIN.get_or_init(|| {
            let corpus = match std::env::var_os(DATA_DIR_ENV) {
                Some(dir) => {
                    let dir = std::path::PathBuf::from(dir);
                    let mut merged = Corpus::default();
                    for file in ["bp3.txt", "bp4.txt"] {
                        let c = Corpus::load_file(&dir.join(file))
                            .unwrap_or_else(|e| panic!("loading {file} from {dir:?}: {e}"));
                        merged.entries.extend(c.entries);
                    }
                    merged
                }
                None => {
                    let mut merged = Corpus::parse(BP3_DATA).expect("embedded bp3 corpus parses");
                    merged
                        .entries
                        .extend(Corpus::parse(BP4_DATA).expect("embedded bp4 corpus parses").entries);
                    merged
                }
            };
            let report = corpus.validate();
            assert!(
                report.all_valid(),
                "corpus failed validation: {:?}",
                report.failures
            );
            corpus
        })
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> impl Iterator<Item = &CorpusEntry> {
        self.entries.values()
    }

    pub fn lookup(&self, n: usize, length: u64) -> Result<&CorpusEntry> {
        self.entries
            .get(&(n, length))
            .ok_or(Error::MissingLength { n, length })
    }

    /// Lengths present for dimension n.
    pub fn lengths(&self, n: usize) -> Vec<u64> {
        self.entries
            .range((n, 0)..(n + 1, 0))
            .map(|((_, l), _)| *l)
            .collect()
    }

    /// Walks every entry from the identity and checks it is a simple cycle
    /// of its declared length.
    pub fn validate(&self) -> CorpusReport {
        let mut failures = Vec::new();
        for entry in self.entries.values() {
            if entry.word.len() as u64 != entry.length {
                failures.push(format!(
                    "n={} length={}: word has {} letters",
                    entry.n,
                    entry.length,
                    entry.word.len()
                ));
                continue;
            }
            let start = match SignedPerm::identity(entry.n) {
                Ok(s) => s,
                Err(e) => {
                    failures.push(format!("n={}: {e}", entry.n));
                    continue;
                }
            };
            match check_cycle(&start, &entry.word) {
                Ok(c) if c.is_simple_cycle() => {}
                Ok(c) => failures.push(format!(
                    "n={} length={}: closed={} simple={} violation={:?}",
                    entry.n, entry.length, c.closed, c.simple, c.first_violation
                )),
                Err(e) => failures.push(format!("n={} length={}: {e}", entry.n, entry.length)),
            }
        }
        CorpusReport {
            entries: self.entries.len(),
            failures,
        }
    }
}
