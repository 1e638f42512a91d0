//! `clonoid`: classify functions, close sets, enumerate clonoid lattices and
//! verify the reference tables.
//!
//! Exit status: 0 on success, 1 when a verification fails, 2 on usage errors.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use clonoids::clonoid_engine::{
    check_left_stable, check_right_stable, clonoid_closure, enumerate_clonoids, inclusion_covers,
    known_name, largest_stabilizing, lattice_dot, Probe, Verdict, DEFAULT_CAP,
};
use clonoids::golden::{verify_discriminator, verify_suite, GoldenSource, VerifyOptions, SUITES};
use clonoids::minorder::{class_label, minor_poset};
use clonoids::postlattice::clone_leq;
use clonoids::{BoolFn, ClassExpr, CloneId, Error, FnSet};

#[derive(Parser)]
#[command(
    name = "clonoid",
    version,
    about = "Clones, minors and clonoids of Boolean functions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Args)]
struct Output {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write to this file instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct Functions {
    /// Function as `n:HEX` (tuple 0…0 is bit 0, x1 most significant).
    #[arg(long = "fn", value_name = "n:HEX")]
    functions: Vec<String>,
    /// Symmetric function by its λ-vector, e.g. `0101`.
    #[arg(long = "lambda", value_name = "BITS")]
    lambdas: Vec<String>,
}

impl Functions {
    fn parse(&self) -> Result<Vec<BoolFn>> {
        let mut v = Vec::new();
        for s in &self.functions {
            v.push(s.parse::<BoolFn>()?);
        }
        for s in &self.lambdas {
            v.push(BoolFn::lambda_str(
                s.trim_start_matches('λ').trim_start_matches("L:"),
            )?);
        }
        Ok(v)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print the minor class of a function with respect to a source clone.
    Classify {
        #[command(flatten)]
        fns: Functions,
        #[arg(long)]
        source: String,
        #[command(flatten)]
        output: Output,
    },
    /// Close a set of functions to a clonoid within the arity cap.
    Closure {
        #[command(flatten)]
        fns: Functions,
        #[arg(long)]
        source: String,
        #[arg(long)]
        target: String,
        #[arg(long, env = "CLONOID_CAP", default_value_t = DEFAULT_CAP)]
        cap: usize,
        #[command(flatten)]
        output: Output,
    },
    /// List all clonoids of a covered source/target pair.
    Enumerate {
        #[arg(long)]
        source: String,
        #[arg(long)]
        target: String,
        /// Truncate infinite monotone chains after this many steps.
        #[arg(long)]
        cutoff: Option<u32>,
        #[command(flatten)]
        output: Output,
    },
    /// Check stability of a class; with neither side given, find the
    /// largest stabilizing clones.
    Stable {
        /// Class expression, e.g. `Smaj_01 | C1`.
        #[arg(long)]
        class: String,
        /// Check right stability under this clone.
        #[arg(long)]
        source: Option<String>,
        /// Check left stability under this clone.
        #[arg(long)]
        target: Option<String>,
        #[arg(long, env = "CLONOID_CAP", default_value_t = DEFAULT_CAP)]
        cap: usize,
        #[command(flatten)]
        output: Output,
    },
    /// Verify the reference tables.
    Tables {
        /// One of the suites, or `all`.
        #[arg(long, default_value = "all")]
        suite: String,
        /// Read `<suite>.json` files from this directory instead of the built-in copies.
        #[arg(long, env = "CLONOID_GOLDEN_DIR")]
        golden_dir: Option<PathBuf>,
        /// Skip the stabilizer columns.
        #[arg(long)]
        no_stabilizers: bool,
        #[command(flatten)]
        output: Output,
    },
    /// Hasse diagram of a minor poset, or of a clonoid lattice with --target.
    Hasse {
        #[arg(long)]
        source: String,
        #[arg(long)]
        target: Option<String>,
        #[arg(long)]
        cutoff: Option<u32>,
        #[command(flatten)]
        output: Output,
    },
    /// List the clones known to the tool.
    ListClones {
        #[command(flatten)]
        output: Output,
    },
}

/// A failed verification, as opposed to an error.
struct Failed;

fn emit(output: &Output, text: &str) -> Result<()> {
    match &output.out {
        Some(p) => std::fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn json(v: &impl serde::Serialize) -> Result<String> {
    Ok(serde_json::to_string_pretty(v)? + "\n")
}

fn clone_arg(s: &str) -> Result<CloneId> {
    Ok(CloneId::parse(s)?)
}

fn verdict_line(class: &str, v: &Verdict) -> String {
    match &v.witness {
        None => format!("PASS {class} {} {}", v.clone, v.side),
        Some(w) => format!("FAIL {class} {} {} {w}", v.clone, v.side),
    }
}

fn run(cli: Cli) -> Result<std::result::Result<(), Failed>> {
    match cli.command {
        Command::Classify {
            fns,
            source,
            output,
        } => {
            let c = clone_arg(&source)?;
            let fs = fns.parse()?;
            if fs.is_empty() {
                anyhow::bail!(Error::Contract("give at least one --fn or --lambda".into()));
            }
            let labels: Vec<_> = fs
                .iter()
                .map(|f| class_label(f, c))
                .collect::<clonoids::Result<_>>()?;
            let text = match output.format {
                Format::Json => json(
                    &fs.iter()
                        .zip(&labels)
                        .map(|(f, l)| serde_json::json!({"fn": f, "source": c, "class": l}))
                        .collect::<Vec<_>>(),
                )?,
                _ => labels.iter().map(|l| format!("{l}\n")).collect(),
            };
            emit(&output, &text)?;
        }
        Command::Closure {
            fns,
            source,
            target,
            cap,
            output,
        } => {
            let (c1, c2) = (clone_arg(&source)?, clone_arg(&target)?);
            let fs = fns.parse()?;
            let f = FnSet::from_fns(cap, &fs)?;
            let k = clonoid_closure(&f, c1, c2)?;
            let name = if cap >= DEFAULT_CAP {
                let k3 = k.truncate(DEFAULT_CAP)?;
                enumerated_match(c1, c2, &k3)?
            } else {
                None
            };
            let text = match output.format {
                Format::Json => json(&serde_json::json!({
                    "source": c1, "target": c2, "cap": cap,
                    "counts": k.counts(), "matches": name, "members": k,
                }))?,
                _ => format!(
                    "{}\nmatches: {}\n",
                    k.summary(),
                    name.unwrap_or_else(|| "no listed clonoid".into())
                ),
            };
            emit(&output, &text)?;
        }
        Command::Enumerate {
            source,
            target,
            cutoff,
            output,
        } => {
            let (c1, c2) = (clone_arg(&source)?, clone_arg(&target)?);
            let ds = enumerate_clonoids(c1, c2, cutoff)?;
            let text = match output.format {
                Format::Json => json(&ds)?,
                Format::Dot => {
                    let covers = inclusion_covers(&ds, DEFAULT_CAP)?;
                    lattice_dot(&format!("({c1},{c2})-clonoids"), &ds, &covers)
                }
                Format::Text => {
                    let mut s = format!("{} ({c1}, {c2})-clonoids\n", ds.len());
                    for d in &ds {
                        s.push_str(&format!("{d}\n"));
                    }
                    s
                }
            };
            emit(&output, &text)?;
        }
        Command::Stable {
            class,
            source,
            target,
            cap,
            output,
        } => {
            let expr = ClassExpr::parse(&class)?;
            let probe = Probe::from_expr(&expr, cap)?;
            let mut verdicts = Vec::new();
            if let Some(s) = &source {
                verdicts.push(check_right_stable(&probe, clone_arg(s)?)?);
            }
            if let Some(t) = &target {
                verdicts.push(check_left_stable(&probe, clone_arg(t)?)?);
            }
            if source.is_none() && target.is_none() {
                let st = largest_stabilizing(&probe)?;
                let text = match output.format {
                    Format::Json => json(&st)?,
                    _ => {
                        let mut s = format!("right {}\nleft {}\n", st.right, st.left);
                        for v in &st.failures {
                            let prescribed = if v.side == clonoids::clonoid_engine::Side::Right {
                                st.right
                            } else {
                                st.left
                            };
                            if clone_leq(prescribed, v.clone) {
                                s.push_str(&verdict_line(&class, v));
                                s.push('\n');
                            }
                        }
                        s
                    }
                };
                emit(&output, &text)?;
                return Ok(Ok(()));
            }
            let ok = verdicts.iter().all(Verdict::holds);
            let text = match output.format {
                Format::Json => json(&verdicts)?,
                _ => verdicts
                    .iter()
                    .map(|v| verdict_line(&class, v) + "\n")
                    .collect(),
            };
            emit(&output, &text)?;
            if !ok {
                return Ok(Err(Failed));
            }
        }
        Command::Tables {
            suite,
            golden_dir,
            no_stabilizers,
            output,
        } => {
            let src = golden_dir.map_or(GoldenSource::Builtin, GoldenSource::Dir);
            let names: Vec<&str> = if suite == "all" {
                SUITES.iter().copied().chain(["discriminator"]).collect()
            } else {
                vec![suite.as_str()]
            };
            let opts = VerifyOptions {
                stabilizers: !no_stabilizers,
                ..Default::default()
            };
            let mut ok = true;
            let mut text = String::new();
            let mut reports = Vec::new();
            for name in names {
                if name == "discriminator" {
                    let r = match src.discriminator() {
                        Ok(d) => verify_discriminator(&d)?,
                        Err(e @ Error::UnknownName { .. }) => return Err(e.into()),
                        Err(e) => {
                            ok = false;
                            text.push_str(&format!("FAIL {name}: {e}\n"));
                            continue;
                        }
                    };
                    ok &= r.findings.is_empty();
                    text.push_str(&format!(
                        "{} {name}: {}/{} counts reproduced\n",
                        if r.findings.is_empty() {
                            "PASS"
                        } else {
                            "FAIL"
                        },
                        r.checked - r.findings.len(),
                        r.checked
                    ));
                    for f in &r.findings {
                        text.push_str(&format!("{f}\n"));
                    }
                    reports.push(serde_json::to_value(&r)?);
                    continue;
                }
                let s = match src.suite(name) {
                    Ok(s) => s,
                    Err(e @ Error::UnknownName { .. }) => return Err(e.into()),
                    Err(e) => {
                        ok = false;
                        text.push_str(&format!("FAIL {name}: {e}\n"));
                        continue;
                    }
                };
                let r = verify_suite(&s, opts)?;
                ok &= r.passed();
                text.push_str(&format!(
                    "{} {name}: {}\n",
                    if r.passed() { "PASS" } else { "FAIL" },
                    r.summary()
                ));
                for n in &r.notes {
                    text.push_str(&format!("note {name} {n}\n"));
                }
                for f in &r.findings {
                    text.push_str(&format!("{f}\n"));
                }
                reports.push(serde_json::to_value(&r)?);
            }
            let text = match output.format {
                Format::Json => json(&reports)?,
                _ => text,
            };
            emit(&output, &text)?;
            if !ok {
                return Ok(Err(Failed));
            }
        }
        Command::Hasse {
            source,
            target,
            cutoff,
            output,
        } => {
            let c1 = clone_arg(&source)?;
            let text = match target {
                None => {
                    let p = minor_poset(c1, cutoff)?;
                    match output.format {
                        Format::Json => json(&p.to_json())?,
                        _ => p.to_dot(),
                    }
                }
                Some(t) => {
                    let c2 = clone_arg(&t)?;
                    let ds = enumerate_clonoids(c1, c2, cutoff)?;
                    let covers = inclusion_covers(&ds, DEFAULT_CAP)?;
                    match output.format {
                        Format::Json => json(&serde_json::json!({
                            "source": c1, "target": c2, "clonoids": ds, "covers": covers,
                        }))?,
                        _ => lattice_dot(&format!("({c1},{c2})-clonoids"), &ds, &covers),
                    }
                }
            };
            emit(&output, &text)?;
        }
        Command::ListClones { output } => {
            let inv = CloneId::inventory();
            let text = match output.format {
                Format::Json => json(&inv
                    .iter()
                    .map(|c| serde_json::json!({
                        "name": c,
                        "description": c.description(),
                        "generators": c.generators().iter().map(|g| g.describe()).collect::<Vec<_>>(),
                    }))
                    .collect::<Vec<_>>())?,
                _ => inv
                    .iter()
                    .map(|c| {
                        let g: Vec<String> = c.generators().iter().map(|g| g.describe()).collect();
                        format!("{:<8} {} [{}]\n", c.name(), c.description(), g.join(", "))
                    })
                    .collect(),
            };
            emit(&output, &text)?;
        }
    }
    Ok(Ok(()))
}

/// Name of the enumerated clonoid equal to `k` at cap 3, when the pair is
/// covered and the match is unique.
fn enumerated_match(c1: CloneId, c2: CloneId, k: &FnSet) -> Result<Option<String>> {
    let ds = match enumerate_clonoids(c1, c2, Some(3)) {
        Ok(ds) => ds,
        Err(_) => {
            let e = ClassExpr::Empty;
            return Ok(if k.is_empty() { known_name(&e)? } else { None });
        }
    };
    let hits: Vec<String> = ds
        .iter()
        .filter(|d| FnSet::from_expr(&d.expr, DEFAULT_CAP).is_ok_and(|s| &s == k))
        .map(|d| d.name.clone())
        .collect();
    Ok(match hits.len() {
        0 => None,
        1 => Some(hits[0].clone()),
        _ => Some(format!("{} (equal at cap {DEFAULT_CAP})", hits.join(" = "))),
    })
}

fn is_usage(e: &anyhow::Error) -> bool {
    matches!(
        e.downcast_ref::<Error>(),
        Some(
            Error::UnknownName { .. }
                | Error::Parse(_)
                | Error::Shape(_)
                | Error::Contract(_)
                | Error::NotCovered { .. }
                | Error::Resource(_)
        )
    )
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(Ok(())) => ExitCode::SUCCESS,
        Ok(Err(Failed)) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            if is_usage(&e) {
                ExitCode::from(2)
            } else {
                ExitCode::from(1)
            }
        }
    }
}
