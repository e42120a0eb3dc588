//! `kwl`: batch front end over kwl-core.
//!
//! Exit codes: 0 true/valid/ok, 1 false/invalid/rejected, 2 usage, parse
//! or I/O errors, 3 resource budget exhausted.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use kwl_core::decide::{sat_with, valid_with, Options, Outcome, Verdict, DEFAULT_BUDGET};
use kwl_core::formula::{parse, Formula};
use kwl_core::proof::{check_derivation, system, Derivation};
use kwl_core::semantics::fixtures::verify_fixtures;
use kwl_core::semantics::{mc, FrameClass, FrameFile, KripkeModel, ModelFile};
use kwl_core::translate::{el_to_kw, kw_to_el, reduce_traced};

#[derive(Parser)]
#[command(name = "kwl", version, about = "Knowing-whether logic toolkit")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Evaluate a formula at a world of a model file.
    Mc {
        model: PathBuf,
        world: String,
        formula: String,
    },
    /// Decide validity over a frame class.
    Decide {
        formula: String,
        #[arg(long, default_value = "K")]
        class: FrameClass,
        /// Write a countermodel here when the formula is invalid.
        #[arg(long)]
        countermodel: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Decide satisfiability over a frame class.
    Sat {
        formula: String,
        #[arg(long, default_value = "K")]
        class: FrameClass,
        /// Write the satisfying model here.
        #[arg(long)]
        model: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Rewrite announcements away.
    Reduce {
        formula: String,
        /// Print each rewrite step to stderr.
        #[arg(long)]
        trace: bool,
    },
    /// Translate between the Kw language and epistemic logic.
    Translate {
        direction: Direction,
        formula: String,
    },
    /// Check a derivation file.
    Check {
        file: PathBuf,
        /// Proof system, when the file has no `system` header.
        #[arg(long)]
        system: Option<String>,
    },
    /// Print the frame properties of a frame or model file.
    Frame { file: PathBuf },
    /// Self-test the built-in fixtures.
    Fixtures,
}

#[derive(Clone, Copy, ValueEnum)]
enum Direction {
    /// Kw to K.
    T,
    /// K to Kw (truth-preserving on reflexive models).
    Tprime,
}

/// Exit code plus message for stderr.
struct Failure(u8, String);

type Run = Result<u8, Failure>;

fn usage(msg: impl ToString) -> Failure {
    Failure(2, msg.to_string())
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn formula(text: &str) -> Result<Formula, Failure> {
    parse(text).map_err(|e| usage(format!("formula: {e}")))
}

fn load_model(path: &Path) -> Result<KripkeModel, Failure> {
    let file = ModelFile::from_json(&read(path)?).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    file.to_model().map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn write_model(path: &Path, m: &KripkeModel, point: &str) -> Result<(), Failure> {
    fs::write(path, ModelFile::from_model(m, Some(point)).to_json())
        .map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn bool_code(b: bool) -> u8 {
    if b {
        0
    } else {
        1
    }
}

fn run(cmd: Cmd) -> Run {
    match cmd {
        Cmd::Mc { model, world, formula: text } => {
            let m = load_model(&model)?;
            let f = formula(&text)?;
            let v = mc(&m, &world, &f).map_err(usage)?;
            println!("{v}");
            Ok(bool_code(v))
        }
        Cmd::Decide { formula: text, class, countermodel, budget } => {
            let f = formula(&text)?;
            let r = valid_with(&f, class, Options { budget }).map_err(usage)?;
            match r.verdict {
                Verdict::Valid => {
                    println!("valid");
                    Ok(0)
                }
                Verdict::Invalid { countermodel: m, point } => {
                    println!("invalid");
                    if let Some(path) = countermodel {
                        write_model(&path, &m, &point)?;
                    }
                    Ok(1)
                }
                Verdict::ResourceLimit => {
                    println!("resource-limit");
                    Ok(3)
                }
            }
        }
        Cmd::Sat { formula: text, class, model, budget } => {
            let f = formula(&text)?;
            let r = sat_with(&f, class, Options { budget }).map_err(usage)?;
            match r.outcome {
                Outcome::Sat { model: m, point } => {
                    println!("sat");
                    if let Some(path) = model {
                        write_model(&path, &m, &point)?;
                    }
                    Ok(0)
                }
                Outcome::Unsat => {
                    println!("unsat");
                    Ok(1)
                }
                Outcome::ResourceLimit => {
                    println!("resource-limit");
                    Ok(3)
                }
            }
        }
        Cmd::Reduce { formula: text, trace } => {
            let f = formula(&text)?;
            let (g, steps) = reduce_traced(&f).map_err(usage)?;
            if trace {
                for s in &steps {
                    eprintln!("{}: {} => {}", s.axiom.name(), s.before, s.after);
                }
            }
            println!("{g}");
            Ok(0)
        }
        Cmd::Translate { direction, formula: text } => {
            let f = formula(&text)?;
            let g = match direction {
                Direction::T => kw_to_el(&f),
                Direction::Tprime => el_to_kw(&f),
            }
            .map_err(usage)?;
            println!("{g}");
            Ok(0)
        }
        Cmd::Check { file, system: name } => {
            let d = Derivation::parse(&read(&file)?).map_err(|e| usage(format!("{}: {e}", file.display())))?;
            let name = name
                .or_else(|| d.system.clone())
                .ok_or_else(|| usage("no `system` header; pass --system"))?;
            let sys = system(&name).ok_or_else(|| usage(format!("unknown proof system `{name}`")))?;
            match check_derivation(&d, &sys) {
                Ok(()) => {
                    println!("ok");
                    Ok(0)
                }
                Err(e) => {
                    println!("{e}");
                    Ok(1)
                }
            }
        }
        Cmd::Frame { file } => {
            let text = read(&file)?;
            let frame = FrameFile::from_json(&text)
                .and_then(|f| f.to_frame())
                .map_err(|e| usage(format!("{}: {e}", file.display())))?;
            let props = frame.properties();
            let line = |set: &std::collections::BTreeSet<_>| {
                set.iter().map(|p: &kwl_core::semantics::Property| p.name()).collect::<Vec<_>>().join(" ")
            };
            if props.len() == 1 {
                println!("{}", line(props.values().next().unwrap()));
            } else {
                for (agent, set) in &props {
                    println!("{agent}: {}", line(set));
                }
            }
            Ok(0)
        }
        Cmd::Fixtures => {
            let checks = verify_fixtures();
            for c in &checks {
                println!("{} {}", if c.passed { "ok  " } else { "FAIL" }, c.name);
            }
            Ok(bool_code(checks.iter().all(|c| c.passed)))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(code) => ExitCode::from(code),
        Err(Failure(code, msg)) => {
            eprintln!("kwl: {msg}");
            ExitCode::from(code)
        }
    }
}
