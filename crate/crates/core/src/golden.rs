//! Reference tables of known clonoid lattices, and their verification.
//!
//! Tables are versioned JSON (embedded at build time, or loaded from a
//! directory). Nothing in them is trusted: every name is parsed, every block
//! decomposition recomputed, every row checked for stability and
//! distinctness, the list compared with a fresh enumeration, and stability
//! columns compared with [`largest_stabilizing`].

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::boolfn::BoolFn;
use crate::class::ClassExpr;
use crate::clonoid_engine::{
    check_left_stable, check_right_stable, coincidences, enumerate_clonoids, largest_stabilizing,
    ClonoidDescriptor, Fingerprint, Probe, DEFAULT_CAP,
};
use crate::error::{Error, Result};
use crate::fnset::FnSet;
use crate::kposet::downsets;
use crate::minorder::{class_label, minor_poset};
use crate::postlattice::CloneId;

/// Format version understood by this crate.
pub const GOLDEN_VERSION: u32 = 1;

/// The clonoid-list suites, in verification order.
pub const SUITES: [&str; 6] = ["mclc", "mcsm", "mcvc", "sclc", "scsm", "scvc"];

/// Name of the counts-only suite.
pub const DISCRIMINATOR_SUITE: &str = "discriminator";

fn builtin_text(name: &str) -> Option<&'static str> {
    Some(match name {
        "mclc" => include_str!("../data/mclc.json"),
        "mcsm" => include_str!("../data/mcsm.json"),
        "mcvc" => include_str!("../data/mcvc.json"),
        "sclc" => include_str!("../data/sclc.json"),
        "scsm" => include_str!("../data/scsm.json"),
        "scvc" => include_str!("../data/scvc.json"),
        "discriminator" => include_str!("../data/discriminator.json"),
        _ => return None,
    })
}

fn all_suite_names() -> String {
    let mut v: Vec<&str> = SUITES.to_vec();
    v.push(DISCRIMINATOR_SUITE);
    v.join(", ")
}

/// One listed clonoid.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GoldenRow {
    pub name: String,
    /// Parseable expression when `name` is not one.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expr: Option<String>,
    /// Block decomposition `A ∪ B ∪ C ∪ D`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub blocks: Option<Vec<String>>,
    /// Largest right-stabilizing clone.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub right: Option<String>,
    /// Largest left-stabilizing clone.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub left: Option<String>,
}

impl GoldenRow {
    pub fn expr_text(&self) -> &str {
        self.expr.as_deref().unwrap_or(&self.name)
    }
}

/// A separately listed stability entry, matched to rows extensionally.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StabilityRow {
    pub name: String,
    pub right: String,
    pub left: String,
}

/// A list of all `(source, target)`-clonoids.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GoldenSuite {
    pub version: u32,
    pub suite: String,
    pub source: String,
    pub target: String,
    pub count: usize,
    pub rows: Vec<GoldenRow>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub stability: Vec<StabilityRow>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub corrections: Vec<Correction>,
}

/// A stabilizer entry known to be misprinted, with the value that replaces
/// it. The listed value is kept in the row so that the correction itself is
/// checked: verification fails if the listed value turns out to be right.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Correction {
    /// Row or stability-row name the correction applies to.
    pub name: String,
    /// `"right"` or `"left"`.
    pub field: String,
    pub value: String,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinorClassCount {
    pub source: String,
    pub classes: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClonoidCount {
    pub source: String,
    pub target: String,
    pub count: usize,
}

/// Class and clonoid counts for the discriminator sources.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiscriminatorCounts {
    pub version: u32,
    pub suite: String,
    pub minor_classes: Vec<MinorClassCount>,
    pub clonoids: Vec<ClonoidCount>,
}

/// Where reference tables come from.
#[derive(Clone, Debug, Default)]
pub enum GoldenSource {
    /// The tables compiled into the crate.
    #[default]
    Builtin,
    /// `<dir>/<suite>.json`.
    Dir(std::path::PathBuf),
}

impl GoldenSource {
    fn text(&self, name: &str) -> Result<String> {
        match self {
            GoldenSource::Builtin => {
                builtin_text(name)
                    .map(str::to_string)
                    .ok_or_else(|| Error::UnknownName {
                        name: name.to_string(),
                        valid: all_suite_names(),
                    })
            }
            GoldenSource::Dir(d) => {
                if builtin_text(name).is_none() {
                    return Err(Error::UnknownName {
                        name: name.to_string(),
                        valid: all_suite_names(),
                    });
                }
                let p = d.join(format!("{name}.json"));
                std::fs::read_to_string(&p)
                    .map_err(|e| Error::Parse(format!("reading {}: {e}", p.display())))
            }
        }
    }

    pub fn suite(&self, name: &str) -> Result<GoldenSuite> {
        parse_suite(&self.text(name)?, name)
    }

    pub fn discriminator(&self) -> Result<DiscriminatorCounts> {
        let text = self.text(DISCRIMINATOR_SUITE)?;
        let d: DiscriminatorCounts = serde_json::from_str(&text)
            .map_err(|e| Error::Parse(format!("{DISCRIMINATOR_SUITE}.json: {e}")))?;
        check_version(d.version, DISCRIMINATOR_SUITE)?;
        Ok(d)
    }

    pub fn from_dir(dir: impl AsRef<Path>) -> Self {
        GoldenSource::Dir(dir.as_ref().to_path_buf())
    }
}

fn check_version(v: u32, name: &str) -> Result<()> {
    if v == GOLDEN_VERSION {
        Ok(())
    } else {
        Err(Error::Parse(format!(
            "{name}.json: version {v}, expected {GOLDEN_VERSION}"
        )))
    }
}

/// Parses a suite file.
pub fn parse_suite(text: &str, name: &str) -> Result<GoldenSuite> {
    let s: GoldenSuite =
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("{name}.json: {e}")))?;
    check_version(s.version, name)?;
    Ok(s)
}

/// A built-in suite.
pub fn builtin_suite(name: &str) -> Result<GoldenSuite> {
    GoldenSource::Builtin.suite(name)
}

/// Every class name appearing in the built-in tables, plus a few common
/// ones, in lookup-priority order.
pub fn named_classes() -> Vec<String> {
    let mut out: Vec<String> = Vec::new();
    let mut push = |s: &str| {
        if !out.iter().any(|o| o == s) {
            out.push(s.to_string());
        }
    };
    for n in [
        "Empty", "Omega", "C", "C0", "C1", "OO", "OI", "IO", "II", "OX", "XO", "IX", "XI",
    ] {
        push(n);
    }
    for name in SUITES {
        if let Ok(s) = builtin_suite(name) {
            for r in &s.rows {
                push(r.expr_text());
            }
            for r in &s.stability {
                push(&r.name);
            }
        }
    }
    for n in [
        "Refl | Smin",
        "Refl | Smaj",
        "Smin | Smaj",
        "Refl | Smin | Smaj",
    ] {
        push(n);
    }
    out
}

// ---------------------------------------------------------------------------
// verification

/// One failed check, naming the offending row when there is one.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Finding {
    pub suite: String,
    pub row: Option<String>,
    pub check: String,
    pub message: String,
}

impl fmt::Display for Finding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.row {
            Some(r) => write!(
                f,
                "FAIL {} {} [{}]: {}",
                self.suite, r, self.check, self.message
            ),
            None => write!(f, "FAIL {} [{}]: {}", self.suite, self.check, self.message),
        }
    }
}

/// Outcome of verifying one suite.
#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub total: usize,
    /// Rows passing both stability checks.
    pub stable: usize,
    /// Rows extensionally distinct from all others at the base cap.
    pub distinct_at_cap: usize,
    /// Rows distinct from all others once collisions are re-examined at cap 4
    /// and on symmetric functions up to arity 6.
    pub distinct: usize,
    /// Groups of rows that coincide at the base cap.
    pub collisions: Vec<Vec<String>>,
    /// Rows whose stabilizing clones were checked, and how many matched.
    pub stability_rows: usize,
    pub stability_matched: usize,
    /// Corrections applied to stabilizer columns.
    pub notes: Vec<String>,
    pub findings: Vec<Finding>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.findings.is_empty()
    }

    /// `"56/56 stable, 56/56 distinct"`, plus stabilizer agreement if checked.
    pub fn summary(&self) -> String {
        let mut s = format!(
            "{}/{} stable, {}/{} distinct",
            self.stable, self.total, self.distinct, self.total
        );
        if self.distinct_at_cap != self.distinct {
            s.push_str(&format!(
                " ({} distinct at cap {DEFAULT_CAP}, the rest separated at cap 4)",
                self.distinct_at_cap
            ));
        }
        if self.stability_rows > 0 {
            s.push_str(&format!(
                ", {}/{} stabilizer pairs match",
                self.stability_matched, self.stability_rows
            ));
        }
        s
    }
}

/// What to verify.
#[derive(Clone, Copy, Debug)]
pub struct VerifyOptions {
    /// Compare stabilizer columns with [`largest_stabilizing`].
    pub stabilizers: bool,
    /// Compare the list with [`enumerate_clonoids`].
    pub enumeration: bool,
    /// Compare stabilizers with corrected rather than listed values.
    pub corrections: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            stabilizers: true,
            enumeration: true,
            corrections: true,
        }
    }
}

struct Parsed {
    label: String,
    desc: ClonoidDescriptor,
    probe: Probe,
    fp: Fingerprint,
}

fn row_label(i: usize, name: &str) -> String {
    format!("row {} `{}`", i + 1, name)
}

fn parse_clone(text: &str) -> Result<CloneId> {
    CloneId::parse(text)
}

/// Verifies a clonoid-list suite.
pub fn verify_suite(s: &GoldenSuite, opts: VerifyOptions) -> Result<SuiteReport> {
    let mut findings = Vec::new();
    let mut fail = |row: Option<String>, check: &str, message: String| {
        findings.push(Finding {
            suite: s.suite.clone(),
            row,
            check: check.to_string(),
            message,
        })
    };
    let source = parse_clone(&s.source);
    let target = parse_clone(&s.target);
    let (source, target) = match (source, target) {
        (Ok(a), Ok(b)) => (a, b),
        (a, b) => {
            for e in [a.err(), b.err()].into_iter().flatten() {
                fail(None, "header", e.to_string());
            }
            return Ok(SuiteReport {
                suite: s.suite.clone(),
                total: s.rows.len(),
                stable: 0,
                distinct_at_cap: 0,
                distinct: 0,
                collisions: Vec::new(),
                stability_rows: 0,
                stability_matched: 0,
                notes: Vec::new(),
                findings,
            });
        }
    };
    if s.count != s.rows.len() {
        fail(
            None,
            "count",
            format!(
                "header says {} clonoids, {} rows listed",
                s.count,
                s.rows.len()
            ),
        );
    }

    // parse, and recompute block decompositions
    let parsed: Vec<std::result::Result<Parsed, (String, String, String)>> = s
        .rows
        .par_iter()
        .enumerate()
        .map(|(i, r)| {
            let label = row_label(i, &r.name);
            let err = |check: &str, m: String| (label.clone(), check.to_string(), m);
            let expr = ClassExpr::parse(r.expr_text()).map_err(|e| err("parse", e.to_string()))?;
            let probe =
                Probe::from_expr(&expr, DEFAULT_CAP).map_err(|e| err("parse", e.to_string()))?;
            let fp = probe.fingerprint();
            if let Some(blocks) = &r.blocks {
                let parts: Vec<ClassExpr> = blocks
                    .iter()
                    .map(|b| ClassExpr::parse(b))
                    .collect::<Result<_>>()
                    .map_err(|e| err("blocks", e.to_string()))?;
                let union = ClassExpr::union(parts);
                let up = Probe::from_expr(&union, DEFAULT_CAP)
                    .map_err(|e| err("blocks", e.to_string()))?;
                if up.fingerprint() != fp {
                    let d = up
                        .set()
                        .first_difference(probe.set())
                        .map_or("a symmetric function of arity ≤ 6".to_string(), |f| {
                            f.describe()
                        });
                    return Err(err(
                        "blocks",
                        format!("union of blocks differs from the class on {d}"),
                    ));
                }
            }
            Ok(Parsed {
                label,
                desc: ClonoidDescriptor::named(&r.name, expr),
                probe,
                fp,
            })
        })
        .collect();
    let mut rows: Vec<Parsed> = Vec::new();
    for p in parsed {
        match p {
            Ok(p) => rows.push(p),
            Err((label, check, m)) => fail(Some(label), &check, m),
        }
    }

    // stability
    let verdicts: Vec<(usize, Result<(bool, Option<String>)>)> = rows
        .par_iter()
        .enumerate()
        .map(|(i, p)| {
            let r = (|| {
                let rv = check_right_stable(&p.probe, source)?;
                if let Some(w) = rv.witness {
                    return Ok((
                        false,
                        Some(format!(
                            "not stable under right composition with {source}: {w}"
                        )),
                    ));
                }
                let lv = check_left_stable(&p.probe, target)?;
                if let Some(w) = lv.witness {
                    return Ok((
                        false,
                        Some(format!(
                            "not stable under left composition with {target}: {w}"
                        )),
                    ));
                }
                Ok((true, None))
            })();
            (i, r)
        })
        .collect();
    let mut stable = 0;
    for (i, v) in verdicts {
        match v? {
            (true, _) => stable += 1,
            (false, m) => fail(
                Some(rows[i].label.clone()),
                "stability",
                m.unwrap_or_default(),
            ),
        }
    }

    // distinctness
    let descs: Vec<ClonoidDescriptor> = rows.iter().map(|p| p.desc.clone()).collect();
    let groups = coincidences(&descs, DEFAULT_CAP)?;
    let in_group: usize = groups.iter().map(|g| g.len()).sum();
    let distinct_at_cap = rows.len() - in_group;
    let collisions: Vec<Vec<String>> = groups
        .iter()
        .map(|g| g.iter().map(|&i| rows[i].label.clone()).collect())
        .collect();
    let mut distinct = distinct_at_cap;
    for g in &groups {
        let sub: Vec<ClonoidDescriptor> = g.iter().map(|&i| descs[i].clone()).collect();
        let deeper = coincidences(&sub, 4)?;
        let by_fp: BTreeMap<usize, usize> = g
            .iter()
            .map(|&i| (i, g.iter().filter(|&&j| rows[j].fp == rows[i].fp).count()))
            .collect();
        for (k, &i) in g.iter().enumerate() {
            let at4 = deeper.iter().any(|d| d.contains(&k));
            if !at4 && by_fp[&i] == 1 {
                distinct += 1;
            } else {
                let others: Vec<&str> = g
                    .iter()
                    .filter(|&&j| {
                        j != i
                            && FnSet::from_expr(&descs[j].expr, 4).ok()
                                == FnSet::from_expr(&descs[i].expr, 4).ok()
                    })
                    .map(|&j| rows[j].label.as_str())
                    .collect();
                fail(
                    Some(rows[i].label.clone()),
                    "distinct",
                    format!("same class as {}", others.join(", ")),
                );
            }
        }
    }

    // agreement with a fresh enumeration
    if opts.enumeration {
        let derived = enumerate_clonoids(source, target, None)?;
        let derived_fps: Vec<Fingerprint> = derived
            .par_iter()
            .map(|d| d.probe(DEFAULT_CAP).map(|p| p.fingerprint()))
            .collect::<Result<_>>()?;
        for p in &rows {
            if !derived_fps.contains(&p.fp) {
                fail(
                    Some(p.label.clone()),
                    "enumeration",
                    format!("not among the {} derived clonoids", derived.len()),
                );
            }
        }
        for (d, fp) in derived.iter().zip(&derived_fps) {
            if !rows.iter().any(|p| &p.fp == fp) {
                fail(
                    None,
                    "enumeration",
                    format!("derived clonoid `{}` is missing from the table", d.expr),
                );
            }
        }
    }

    // stabilizer columns
    let mut expected: Vec<(String, usize, String, String)> = Vec::new();
    for (i, r) in s.rows.iter().enumerate() {
        if let (Some(a), Some(b)) = (&r.right, &r.left) {
            if let Some(k) = rows.iter().position(|p| p.label == row_label(i, &r.name)) {
                expected.push((row_label(i, &r.name), k, a.clone(), b.clone()));
            }
        }
    }
    for (i, st) in s.stability.iter().enumerate() {
        let label = format!("stability row {} `{}`", i + 1, st.name);
        let fp = match ClassExpr::parse(&st.name).and_then(|e| Probe::from_expr(&e, DEFAULT_CAP)) {
            Ok(p) => p.fingerprint(),
            Err(e) => {
                fail(Some(label), "parse", e.to_string());
                continue;
            }
        };
        let hits: Vec<usize> = (0..rows.len()).filter(|&k| rows[k].fp == fp).collect();
        match hits.as_slice() {
            [k] => expected.push((label, *k, st.right.clone(), st.left.clone())),
            [] => fail(
                Some(label),
                "stability-table",
                "matches no listed clonoid".into(),
            ),
            _ => fail(
                Some(label),
                "stability-table",
                "matches several listed clonoids".into(),
            ),
        }
    }
    if !s.stability.is_empty() {
        let mut seen = vec![0usize; rows.len()];
        for (_, k, _, _) in &expected {
            seen[*k] += 1;
        }
        for (k, &c) in seen.iter().enumerate() {
            if c != 1 {
                fail(
                    Some(rows[k].label.clone()),
                    "stability-table",
                    format!("listed {c} times in the stability table"),
                );
            }
        }
    }
    let mut notes = Vec::new();
    let mut used = vec![false; s.corrections.len()];
    // (listed right, listed left, corrected right, corrected left)
    let mut wanted: Vec<(String, String, String, String)> = Vec::new();
    for (label, k, a, b) in &expected {
        let (mut ca, mut cb) = (a.clone(), b.clone());
        for (ci, c) in s.corrections.iter().enumerate() {
            if c.name == descs[*k].name || label.ends_with(&format!("`{}`", c.name)) {
                match c.field.as_str() {
                    "right" => ca = c.value.clone(),
                    "left" => cb = c.value.clone(),
                    other => fail(
                        Some(label.clone()),
                        "correction",
                        format!("unknown field `{other}`"),
                    ),
                }
                used[ci] = true;
                notes.push(format!(
                    "{label}: {} listed as {}, corrected to {} ({})",
                    c.field,
                    if c.field == "right" { a } else { b },
                    c.value,
                    c.reason
                ));
            }
        }
        wanted.push((a.clone(), b.clone(), ca, cb));
    }
    for (ci, c) in s.corrections.iter().enumerate() {
        if !used[ci] {
            fail(
                None,
                "correction",
                format!("correction for `{}` matches no row", c.name),
            );
        }
    }
    let mut stability_matched = 0;
    if opts.stabilizers {
        let results: Vec<Result<(bool, bool, String)>> = expected
            .par_iter()
            .zip(&wanted)
            .map(|((_, k, _, _), (la, lb, ca, cb))| {
                let listed = (parse_clone(la)?, parse_clone(lb)?);
                let corrected = (parse_clone(ca)?, parse_clone(cb)?);
                let got = largest_stabilizing(&rows[*k].probe)?;
                let got = (got.right, got.left);
                let want = if opts.corrections { corrected } else { listed };
                let needless = listed != corrected && got == listed;
                Ok((
                    got == want,
                    needless,
                    format!(
                        "expected ({}, {}), computed ({}, {})",
                        want.0, want.1, got.0, got.1
                    ),
                ))
            })
            .collect();
        for ((label, _, _, _), r) in expected.iter().zip(results) {
            match r {
                Ok((ok, needless, m)) => {
                    if ok {
                        stability_matched += 1;
                    } else {
                        fail(Some(label.clone()), "stabilizers", m);
                    }
                    if needless && opts.corrections {
                        fail(
                            Some(label.clone()),
                            "correction",
                            "the listed value is correct".into(),
                        );
                    }
                }
                Err(e) => fail(Some(label.clone()), "stabilizers", e.to_string()),
            }
        }
    }

    Ok(SuiteReport {
        suite: s.suite.clone(),
        total: s.rows.len(),
        stable,
        distinct_at_cap,
        distinct,
        collisions,
        stability_rows: if opts.stabilizers { expected.len() } else { 0 },
        stability_matched,
        notes,
        findings,
    })
}

/// Outcome of verifying the discriminator counts.
#[derive(Clone, Debug, Serialize)]
pub struct CountsReport {
    pub checked: usize,
    pub findings: Vec<Finding>,
}

/// Recomputes minor-class counts (by classifying every function of arity
/// `≤ 3`) and clonoid counts (downsets, or enumeration for other targets).
pub fn verify_discriminator(d: &DiscriminatorCounts) -> Result<CountsReport> {
    let mut findings = Vec::new();
    let mut checked = 0;
    let mut fail = |row: String, check: &str, message: String| {
        findings.push(Finding {
            suite: d.suite.clone(),
            row: Some(row),
            check: check.into(),
            message,
        })
    };
    for (i, m) in d.minor_classes.iter().enumerate() {
        let label = format!("minor_classes row {} `{}`", i + 1, m.source);
        checked += 1;
        let c = match parse_clone(&m.source) {
            Ok(c) => c,
            Err(e) => {
                fail(label, "parse", e.to_string());
                continue;
            }
        };
        let mut labels = std::collections::BTreeSet::new();
        for n in 1..=3 {
            for f in BoolFn::all_of_arity(n) {
                labels.insert(class_label(&f, c)?);
            }
        }
        let poset = minor_poset(c, None)?;
        if labels.len() != m.classes || poset.len() != m.classes {
            fail(
                label,
                "minor-classes",
                format!(
                    "expected {}, found {} inhabited ({} in the poset)",
                    m.classes,
                    labels.len(),
                    poset.len()
                ),
            );
        }
    }
    let results: Vec<(usize, Result<Option<String>>)> = d
        .clonoids
        .par_iter()
        .enumerate()
        .map(|(i, r)| {
            let res = (|| {
                let (c1, c2) = (parse_clone(&r.source)?, parse_clone(&r.target)?);
                let n = if c2 == CloneId::Ic {
                    downsets(&minor_poset(c1, None)?.poset)?.len()
                } else {
                    enumerate_clonoids(c1, c2, None)?.len()
                };
                Ok((n != r.count).then(|| format!("expected {}, computed {n}", r.count)))
            })();
            (i, res)
        })
        .collect();
    for (i, res) in results {
        checked += 1;
        let r = &d.clonoids[i];
        let label = format!("clonoids row {} `({}, {})`", i + 1, r.source, r.target);
        match res {
            Ok(None) => {}
            Ok(Some(m)) => fail(label, "clonoid-count", m),
            Err(e) => fail(label, "clonoid-count", e.to_string()),
        }
    }
    Ok(CountsReport { checked, findings })
}
