//! Command-line surface: deterministic text output (or line-delimited JSON
//! with --json), pipe-compatible `synth`/`verify`, and exit codes suitable
//! for scripts: 0 success, 1 usage error, 2 infeasible request, 3 failed
//! validation.

use crate::base_cycles;
use crate::corpus::Corpus;
use crate::eight_cycles;
use crate::error::Error;
use crate::graph;
use crate::oracle;
use crate::perm::{GenWord, SignedPerm};
use crate::synthesis;
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;
use std::io::{BufWriter, Read, Write};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_INFEASIBLE: i32 = 2;
pub const EXIT_INVALID: i32 = 3;

#[derive(Parser)]
#[command(
    name = "bpg",
    about = "Cycles in the burnt pancake graph: synthesize, verify, enumerate, classify",
    disable_help_subcommand = true
)]
struct Cli {
    /// Emit line-delimited JSON records instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Synthesize a simple cycle of exact length LEN in BP_N.
    Synth {
        n: usize,
        len: u64,
        /// Print the synthesis plan tree.
        #[arg(long)]
        trace: bool,
        /// Re-walk the witness and print a validation line.
        #[arg(long)]
        validate: bool,
        /// Force space-separated letters even for n <= 9.
        #[arg(long)]
        list_form: bool,
    },
    /// Verify that a word (stdin, or --word) walks to a simple cycle from
    /// the identity of BP_N.
    Verify {
        n: usize,
        /// Expected length to assert.
        #[arg(long)]
        length: Option<u64>,
        /// The word; read from stdin when omitted.
        #[arg(long)]
        word: Option<String>,
        /// Start vertex in window notation (default: identity).
        #[arg(long)]
        start: Option<String>,
    },
    /// Print the scaffold cycle C_k of BP_N with its copy profile.
    BaseCycle {
        n: usize,
        k: usize,
        #[arg(long)]
        list_form: bool,
    },
    /// Count, list, or tabulate the 8-cycles of BP_N.
    EightCycles {
        n: usize,
        /// Print total and per-vertex counts (default).
        #[arg(long)]
        count: bool,
        /// Materialize every 8-cycle (gated by --cap).
        #[arg(long)]
        list: bool,
        /// Print the canonical family table with instance counts.
        #[arg(long)]
        forms: bool,
        #[arg(long, default_value_t = graph::DEFAULT_BUILD_CAP)]
        cap: usize,
    },
    /// Brute-force ground truth.
    #[command(subcommand)]
    Oracle(OracleCommand),
    /// Ground-truth corpus tools.
    #[command(subcommand)]
    Corpus(CorpusCommand),
    /// Export the explicit graph.
    Export {
        n: usize,
        #[arg(long, value_enum)]
        format: ExportFormat,
        #[arg(long, default_value_t = graph::DEFAULT_BUILD_CAP)]
        cap: usize,
    },
    /// Closed-form vertex/edge counts and edge density.
    Stats { n: usize },
}

#[derive(Subcommand)]
enum OracleCommand {
    /// Depth-first search for a cycle of exact length LEN through the
    /// identity (n <= 4).
    Find { n: usize, len: u64 },
    /// Girth of BP_N (or of unsigned P_N).
    Girth {
        n: usize,
        #[arg(long)]
        unsigned: bool,
        #[arg(long, default_value_t = oracle::DEFAULT_VERTEX_CAP)]
        cap: usize,
    },
    /// Count all simple cycles of length LEN (and those through the
    /// identity).
    Count {
        n: usize,
        len: u64,
        #[arg(long)]
        unsigned: bool,
        #[arg(long, default_value_t = oracle::DEFAULT_VERTEX_CAP)]
        cap: usize,
    },
    /// Verify the distance/copy properties behind the 8-cycle
    /// classification (n = 3 exhaustive, n = 4 sampled).
    Lemmas {
        n: usize,
        #[arg(long, default_value_t = 10_000)]
        samples: u64,
    },
    /// Evaluate the counting inequalities used by the synthesis dispatch.
    Observations { n: usize },
}

#[derive(Subcommand)]
enum CorpusCommand {
    /// Parse and walk-validate a corpus file.
    Validate { file: std::path::PathBuf },
}

#[derive(Clone, Copy, ValueEnum)]
enum ExportFormat {
    Dot,
    Edges,
}

fn exit_code_for(err: &Error) -> i32 {
    match err {
        Error::UnreachableLength { .. }
        | Error::MissingLength { .. }
        | Error::ResourceLimit(_)
        | Error::LetterAbsent { .. } => EXIT_INFEASIBLE,
        Error::Construction(_) | Error::NotACycle(_) | Error::NotCanonical => EXIT_INVALID,
        _ => EXIT_USAGE,
    }
}

/// Runs the CLI; returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // keep clap's rendered help/error text, but exit 1 on misuse
            let is_help = matches!(
                e.kind(),
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion
            );
            let _ = e.print();
            return if is_help { EXIT_OK } else { EXIT_USAGE };
        }
    };
    let stdout = std::io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    match dispatch(cli, &mut out) {
        Ok(code) => {
            let _ = out.flush();
            code
        }
        Err(err) => {
            let _ = out.flush();
            eprintln!("error: {err}");
            exit_code_for(&err)
        }
    }
}

fn word_text(word: &GenWord, list_form: bool) -> String {
    if list_form {
        word.format_list()
    } else {
        word.format()
    }
}

fn dispatch<W: Write>(cli: Cli, out: &mut W) -> crate::Result<i32> {
    let json = cli.json;
    match cli.command {
        Command::Synth {
            n,
            len,
            trace,
            validate,
            list_form,
        } => {
            let (witness, plan) = synthesis::synth_cycle(n, len)?;
            if json {
                let mut record = json!({
                    "n": n,
                    "length": len,
                    "word": word_text(&witness.word, list_form),
                });
                if trace {
                    record["plan"] = serde_json::to_value(&plan)
                        .map_err(|e| Error::Io(e.to_string()))?;
                }
                if validate {
                    record["validated"] = json!(true);
                }
                writeln!(out, "{record}")?;
            } else {
                writeln!(out, "{}", word_text(&witness.word, list_form))?;
                if trace {
                    write!(out, "{}", plan.render())?;
                }
                if validate {
                    writeln!(out, "validated: closed simple length={len}")?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::Verify {
            n,
            length,
            word,
            start,
        } => {
            let text = match word {
                Some(w) => w,
                None => {
                    let mut buf = String::new();
                    std::io::stdin().read_to_string(&mut buf)?;
                    buf.lines().next().unwrap_or("").to_string()
                }
            };
            let word = GenWord::parse(&text, n)?;
            let start = match start {
                Some(s) => SignedPerm::parse(&s)?,
                None => SignedPerm::identity(n)?,
            };
            let check = crate::perm::check_cycle(&start, &word)?;
            let length_ok = length.is_none_or(|l| l == word.len() as u64);
            let ok = check.is_simple_cycle() && length_ok;
            if json {
                writeln!(
                    out,
                    "{}",
                    json!({
                        "n": n,
                        "closed": check.closed,
                        "simple": check.simple,
                        "length": word.len(),
                        "length_ok": length_ok,
                        "first_violation": check.first_violation,
                        "ok": ok,
                    })
                )?;
            } else {
                writeln!(
                    out,
                    "closed={} simple={} length={} ok={}",
                    check.closed,
                    check.simple,
                    word.len(),
                    ok
                )?;
            }
            Ok(if ok { EXIT_OK } else { EXIT_INVALID })
        }
        Command::BaseCycle { n, k, list_form } => {
            let spec = base_cycles::base_cycle(n, k)?;
            let profile = base_cycles::copy_profile(&spec)?;
            if json {
                let per_copy: Vec<_> = profile
                    .per_copy
                    .iter()
                    .map(|(c, edges)| json!({ "copy": c.0, "edges": edges }))
                    .collect();
                writeln!(
                    out,
                    "{}",
                    json!({
                        "n": n,
                        "k": k,
                        "case": spec.case_tag.to_string(),
                        "length": spec.length,
                        "word": word_text(&spec.word, list_form),
                        "copies_visited": profile.copies_visited,
                        "per_copy": per_copy,
                        "splice_slots": profile.splice_slots.len(),
                    })
                )?;
            } else {
                writeln!(out, "{}", word_text(&spec.word, list_form))?;
                writeln!(
                    out,
                    "length={} case={} copies={} splice-slots={}",
                    spec.length,
                    spec.case_tag,
                    profile.copies_visited,
                    profile.splice_slots.len()
                )?;
                for (copy, edges) in &profile.per_copy {
                    writeln!(out, "copy {}: {} edge(s)", copy.0, edges)?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::EightCycles {
            n,
            count,
            list,
            forms,
            cap,
        } => {
            let default_mode = !count && !list && !forms;
            if count || default_mode {
                let total = eight_cycles::count_8cycles(n)?;
                let through = eight_cycles::count_through_vertex(n)?;
                if json {
                    writeln!(
                        out,
                        "{}",
                        json!({ "n": n, "total": total.to_string(), "through_vertex": through.to_string() })
                    )?;
                } else {
                    writeln!(out, "total={total} through-vertex={through}")?;
                }
            }
            if forms {
                let mut per_family = std::collections::BTreeMap::new();
                for inst in eight_cycles::instances(n)? {
                    *per_family.entry(inst.shape.family()).or_insert(0u64) += 1;
                    if json {
                        writeln!(
                            out,
                            "{}",
                            json!({
                                "form": inst.shape.to_string(),
                                "word": inst.word,
                                "symmetry": inst.symmetry,
                                "cycles": inst.cycles.to_string(),
                                "through_vertex": inst.through_vertex.to_string(),
                            })
                        )?;
                    } else {
                        writeln!(
                            out,
                            "{} word={} symmetry={} cycles={} through-vertex={}",
                            inst.shape, inst.word, inst.symmetry, inst.cycles, inst.through_vertex
                        )?;
                    }
                }
                if !json {
                    for (family, instances) in per_family {
                        writeln!(out, "family F{family}: {instances} instance(s)")?;
                    }
                }
            }
            if list {
                for cycle in eight_cycles::enumerate_8cycles(n, cap)? {
                    if json {
                        writeln!(
                            out,
                            "{}",
                            json!({
                                "word": cycle.word.format(),
                                "start": cycle.start.to_string(),
                                "fingerprint": cycle.fingerprint.iter().map(|r| r.to_string()).collect::<Vec<_>>(),
                            })
                        )?;
                    } else {
                        writeln!(
                            out,
                            "word={} start={}",
                            cycle.word.format(),
                            cycle.start
                        )?;
                    }
                }
            }
            Ok(EXIT_OK)
        }
        Command::Oracle(cmd) => oracle_dispatch(cmd, json, out),
        Command::Corpus(CorpusCommand::Validate { file }) => {
            let corpus = Corpus::load_file(&file)?;
            let report = corpus.validate();
            if json {
                writeln!(
                    out,
                    "{}",
                    json!({
                        "entries": report.entries,
                        "valid": report.all_valid(),
                        "failures": report.failures,
                    })
                )?;
            } else {
                writeln!(
                    out,
                    "entries={} valid={}",
                    report.entries,
                    report.all_valid()
                )?;
                for failure in &report.failures {
                    writeln!(out, "invalid: {failure}")?;
                }
            }
            Ok(if report.all_valid() {
                EXIT_OK
            } else {
                EXIT_INVALID
            })
        }
        Command::Export { n, format, cap } => {
            let g = graph::build_explicit(n, cap)?;
            match format {
                ExportFormat::Edges => graph::write_edge_list(&g, out)?,
                ExportFormat::Dot => graph::write_dot(&g, out)?,
            }
            Ok(EXIT_OK)
        }
        Command::Stats { n } => {
            let s = graph::stats(n)?;
            if json {
                writeln!(
                    out,
                    "{}",
                    json!({
                        "n": n,
                        "vertices": s.vertices.to_string(),
                        "edges": s.edges.to_string(),
                        "density": s.density.to_string(),
                    })
                )?;
            } else {
                writeln!(
                    out,
                    "n={} vertices={} edges={} density={}",
                    s.n, s.vertices, s.edges, s.density
                )?;
            }
            Ok(EXIT_OK)
        }
    }
}

fn oracle_dispatch<W: Write>(cmd: OracleCommand, json: bool, out: &mut W) -> crate::Result<i32> {
    match cmd {
        OracleCommand::Find { n, len } => {
            match oracle::find_cycle_dfs(n, len, oracle::DEFAULT_NODE_BUDGET)? {
                Some(witness) => {
                    if json {
                        writeln!(
                            out,
                            "{}",
                            json!({ "n": n, "length": len, "word": witness.word.format() })
                        )?;
                    } else {
                        writeln!(out, "{}", witness.word.format())?;
                    }
                    Ok(EXIT_OK)
                }
                None => {
                    if json {
                        writeln!(out, "{}", json!({ "n": n, "length": len, "word": null }))?;
                    } else {
                        writeln!(out, "none")?;
                    }
                    Ok(EXIT_INFEASIBLE)
                }
            }
        }
        OracleCommand::Girth { n, unsigned, cap } => {
            let g = if unsigned {
                oracle::build_unsigned_explicit(n, cap)?
            } else {
                oracle::build_signed_explicit(n, cap)?
            };
            let girth = oracle::girth(&g)
                .ok_or_else(|| Error::Construction("graph is acyclic".into()))?;
            if json {
                writeln!(out, "{}", json!({ "n": n, "unsigned": unsigned, "girth": girth }))?;
            } else {
                writeln!(out, "girth={girth}")?;
            }
            Ok(EXIT_OK)
        }
        OracleCommand::Count {
            n,
            len,
            unsigned,
            cap,
        } => {
            let g = if unsigned {
                oracle::build_unsigned_explicit(n, cap)?
            } else {
                oracle::build_signed_explicit(n, cap)?
            };
            let e = oracle::enumerate_cycles_of_length(
                &g,
                len as usize,
                false,
                oracle::DEFAULT_NODE_BUDGET,
            )?;
            if json {
                writeln!(
                    out,
                    "{}",
                    json!({
                        "n": n,
                        "unsigned": unsigned,
                        "length": len,
                        "through_identity": e.through_identity,
                        "total": e.total,
                    })
                )?;
            } else {
                writeln!(
                    out,
                    "through-identity={} total={}",
                    e.through_identity, e.total
                )?;
            }
            Ok(EXIT_OK)
        }
        OracleCommand::Lemmas { n, samples } => {
            let report = oracle::check_lemma_properties(n, samples)?;
            if json {
                for check in &report.checks {
                    writeln!(
                        out,
                        "{}",
                        json!({
                            "n": n,
                            "property": check.name,
                            "checked": check.checked,
                            "passed": check.passed,
                            "detail": check.detail,
                        })
                    )?;
                }
            } else {
                for check in &report.checks {
                    writeln!(
                        out,
                        "{}: {} (checked={}, {})",
                        check.name,
                        if check.passed { "PASS" } else { "FAIL" },
                        check.checked,
                        check.detail
                    )?;
                }
            }
            Ok(if report.all_passed() {
                EXIT_OK
            } else {
                EXIT_INVALID
            })
        }
        OracleCommand::Observations { n } => {
            let report = base_cycles::check_observations(n)?;
            if json {
                for check in &report.checks {
                    writeln!(
                        out,
                        "{}",
                        json!({
                            "n": n,
                            "inequality": check.name,
                            "applicable": check.applicable,
                            "passed": check.passed,
                            "detail": check.detail,
                        })
                    )?;
                }
            } else {
                for check in &report.checks {
                    let status = if !check.applicable {
                        "SKIP"
                    } else if check.passed {
                        "PASS"
                    } else {
                        "FAIL"
                    };
                    writeln!(out, "{}: {status} ({})", check.name, check.detail)?;
                }
            }
            Ok(if report.all_passed() {
                EXIT_OK
            } else {
                EXIT_INVALID
            })
        }
    }
}
