use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use burling_core::burling::DEFAULT_LEVEL_CAP;
use burling_core::format::to_dot;
use burling_core::fuzz::{certify_steps, fuzz_closure, FuzzConfig};
use burling_core::{
    bounds_only, build_graft_buf, burling_pair_lists, check_equivalence_capped, chromatic_number,
    find_non_rainbow_coloring, is_clean_with, Error, GraphFile, OpScript, SearchConfig, Verdict,
};
use clap::{Parser, Subcommand, ValueEnum};

const HOLDS: u8 = 0;
const FAILS: u8 = 1;
const USAGE: u8 = 2;
const OVER_CAP: u8 = 3;

/// Burling graph constructions and clean-graft certification.
#[derive(Parser)]
#[command(name = "burling", version)]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    /// Graph plus ordered stable sets.
    Pair,
    /// Graft built with pendent, clone and join.
    Graft,
}

#[derive(Subcommand)]
enum Verb {
    /// Build a level-k graph and write it as a graph file.
    Generate {
        #[arg(long, value_enum)]
        mode: Mode,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        out: PathBuf,
        /// Also write the operation trace (graft mode only).
        #[arg(long)]
        trace: Option<PathBuf>,
    },
    /// Certify the five clean-graft conditions.
    Verify {
        #[arg(long = "in")]
        input: PathBuf,
        /// Node limit per condition; required above 64 vertices.
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long, default_value_t = 1)]
        threads: usize,
    },
    /// Chromatic number, bounds, or the rainbow-tip check.
    Chroma {
        #[arg(long = "in")]
        input: PathBuf,
        /// Only report greedy bounds.
        #[arg(long, conflicts_with = "rainbow")]
        bounds: bool,
        /// Search for a C-colouring where every tip sees fewer than K colours.
        #[arg(long, num_args = 2, value_names = ["K", "C"])]
        rainbow: Option<Vec<usize>>,
    },
    /// Check that both constructions agree at level k.
    Equiv {
        #[arg(long)]
        k: usize,
        /// Permit k = 4 (309 vertices).
        #[arg(long)]
        allow_large: bool,
    },
    /// Random legal operation sequences, or replay of one script.
    Fuzz {
        /// Maximum operations per sequence.
        #[arg(long, default_value_t = 8)]
        ops: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        runs: usize,
        #[arg(long, default_value_t = 40)]
        max_vertices: usize,
        /// Print every generated script.
        #[arg(long)]
        print_scripts: bool,
        /// Replay and certify this script instead of generating.
        #[arg(long, conflicts_with = "print_scripts")]
        script: Option<PathBuf>,
    },
    /// Convert a graph file to DOT.
    Export {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, required = true)]
        dot: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.verb) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            let capped = e.downcast_ref::<Error>().is_some_and(|e| {
                matches!(
                    e,
                    Error::CapExceeded { .. }
                        | Error::BudgetRequired { .. }
                        | Error::Inconclusive { .. }
                )
            });
            ExitCode::from(if capped { OVER_CAP } else { USAGE })
        }
    }
}

fn read_file(path: &Path) -> anyhow::Result<GraphFile> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    GraphFile::parse(&text).with_context(|| format!("parsing {}", path.display()))
}

fn write_text(path: &Path, text: &str) -> anyhow::Result<()> {
    fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}

fn run(verb: Verb) -> anyhow::Result<u8> {
    let mut out = io::stdout().lock();
    match verb {
        Verb::Generate {
            mode,
            k,
            out: path,
            trace,
        } => {
            let file = match mode {
                Mode::Pair => {
                    if trace.is_some() {
                        bail!("--trace applies to graft mode only");
                    }
                    let (adj, stables) = burling_pair_lists(k, DEFAULT_LEVEL_CAP)?;
                    GraphFile {
                        stables: Some(stables),
                        ..GraphFile::from_lists(&adj, None, Some(format!("G'_{k}")))
                    }
                }
                Mode::Graft => {
                    let (buf, tr) = build_graft_buf(k, DEFAULT_LEVEL_CAP)?;
                    if let Some(tp) = trace {
                        write_text(&tp, &tr.to_text())?;
                    }
                    let tips = buf.tips().iter().copied().collect();
                    GraphFile::from_lists(buf.adjacency(), Some(tips), Some(format!("G_{k}")))
                }
            };
            write_text(&path, &file.to_text())?;
            writeln!(
                out,
                "wrote {} (n={}, edges={})",
                path.display(),
                file.n,
                file.edges.len()
            )?;
            Ok(HOLDS)
        }
        Verb::Verify {
            input,
            budget,
            threads,
        } => {
            let gf = read_file(&input)?.graft()?;
            let cfg = match budget {
                Some(b) => SearchConfig::with_budget(b),
                None => SearchConfig::default(),
            }
            .threads(threads);
            let report = is_clean_with(&gf, &cfg)?;
            write!(out, "{report}")?;
            Ok(if report.is_clean() {
                HOLDS
            } else if report.any_fails() {
                FAILS
            } else {
                debug_assert!(report
                    .verdicts
                    .iter()
                    .any(|(_, v)| matches!(v, Verdict::Inconclusive { .. })));
                OVER_CAP
            })
        }
        Verb::Chroma {
            input,
            bounds,
            rainbow,
        } => {
            let file = read_file(&input)?;
            if let Some(kc) = rainbow {
                let gf = file.graft()?;
                let (k, c) = (kc[0], kc[1]);
                return Ok(match find_non_rainbow_coloring(&gf, k, c)? {
                    None => {
                        writeln!(out, "rainbow: every proper {c}-colouring has a tip seeing at least {k} colours")?;
                        HOLDS
                    }
                    Some(col) => {
                        writeln!(
                            out,
                            "non-rainbow colouring: {}",
                            serde_json::to_string(&col.colors)?
                        )?;
                        FAILS
                    }
                });
            }
            let g = file.graph()?;
            if !bounds {
                match chromatic_number(&g) {
                    Ok(cert) => {
                        writeln!(out, "chi={} (exact)", cert.chi)?;
                        writeln!(
                            out,
                            "coloring: {}",
                            serde_json::to_string(&cert.witness_coloring.colors)?
                        )?;
                        return Ok(HOLDS);
                    }
                    Err(e @ Error::CapExceeded { .. }) => {
                        let b = bounds_only(&g);
                        writeln!(out, "{e}")?;
                        writeln!(out, "bounds: {} <= chi <= {} (not exact)", b.lower, b.upper)?;
                        return Ok(OVER_CAP);
                    }
                    Err(e) => return Err(e.into()),
                }
            }
            let b = bounds_only(&g);
            writeln!(out, "bounds: {} <= chi <= {} (not exact)", b.lower, b.upper)?;
            Ok(HOLDS)
        }
        Verb::Equiv { k, allow_large } => {
            let cap = if allow_large {
                4
            } else {
                burling_core::burling::DEFAULT_EQUIVALENCE_CAP
            };
            match check_equivalence_capped(k, cap)? {
                Some(f) => {
                    writeln!(out, "isomorphic: {} vertices", f.len())?;
                    writeln!(out, "bijection: {}", serde_json::to_string(&f)?)?;
                    Ok(HOLDS)
                }
                None => {
                    writeln!(out, "not isomorphic")?;
                    Ok(FAILS)
                }
            }
        }
        Verb::Fuzz {
            ops,
            seed,
            runs,
            max_vertices,
            print_scripts,
            script,
        } => {
            if let Some(path) = script {
                let text = fs::read_to_string(&path)
                    .with_context(|| format!("reading {}", path.display()))?;
                let script = OpScript::parse(&text, path.parent())?;
                let reports = certify_steps(&script)?;
                for (step, r) in reports.iter().enumerate() {
                    writeln!(out, "step {step}:")?;
                    write!(out, "{r}")?;
                }
                let clean =
                    reports.len() == script.ops.len() + 1 && reports.iter().all(|r| r.is_clean());
                return Ok(if clean { HOLDS } else { FAILS });
            }
            let cfg = FuzzConfig {
                runs,
                max_ops: ops,
                max_vertices,
                seed,
            };
            let s = fuzz_closure(&cfg)?;
            if print_scripts {
                for (i, sc) in s.scripts.iter().enumerate() {
                    writeln!(out, "# run {i}")?;
                    write!(out, "{sc}")?;
                }
            }
            for f in &s.failures {
                writeln!(out, "# failing run {}", f.run)?;
                write!(out, "{}", f.script)?;
                write!(out, "{}", f.report)?;
            }
            writeln!(
                out,
                "runs={} ops={} joins={} failures={}",
                s.runs,
                s.ops_applied,
                s.joins_applied,
                s.failures.len()
            )?;
            Ok(if s.failures.is_empty() { HOLDS } else { FAILS })
        }
        Verb::Export {
            input,
            dot: _,
            out: path,
        } => {
            let file = read_file(&input)?;
            let text = to_dot(&file.graph()?, file.tips.as_deref(), file.name.as_deref());
            match path {
                Some(p) => write_text(&p, &text)?,
                None => write!(out, "{text}")?,
            }
            Ok(HOLDS)
        }
    }
}
