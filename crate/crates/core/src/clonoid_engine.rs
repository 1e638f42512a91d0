//! Clonoids: sets `K` of Boolean functions with `K·C1 ⊆ K` and `C2·K ⊆ K`.
//!
//! Everything here works on [`Probe`]s: a class known extensionally up to an
//! arity cap, optionally backed by an exact [`ClassExpr`] that answers
//! membership at higher arities. Stability checks are exhaustive up to the
//! cap and additionally run over symmetric (λ-vector) functions up to
//! arity 5–6 when an expression is available; most separating witnesses are
//! symmetric, so this tier finds violations the cap alone cannot see.
//!
//! Closures are fixpoints *within* the cap. When the true clonoid needs
//! functions above the cap to produce low-arity members, the result is an
//! under-approximation.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::boolfn::{ArgMap, BoolFn, MAX_ARITY};
use crate::class::{ClassAtom, ClassExpr};
use crate::compose::{compose_images, compose_search, FastMap};
use crate::error::{Error, Result};
use crate::fnset::FnSet;
use crate::kposet::{downsets, Poset};
use crate::minorder::{
    discriminator_labels, monotone_labels, LabelPayload, MinorClassLabel, CLASSIFIED,
    MONOTONE_FAMILY,
};
use crate::postlattice::{clone_leq, clone_members, CloneId};

/// Largest arity of symmetric inner functions in the λ tier.
pub const LAMBDA_TIER_ARITY: usize = 5;

/// Cap used when a caller does not choose one.
pub const DEFAULT_CAP: usize = 3;

// ---------------------------------------------------------------------------
// probes

/// A function class: exact up to `set.cap()`, and via `expr` beyond it.
#[derive(Clone, Debug)]
pub struct Probe {
    set: FnSet,
    expr: Option<ClassExpr>,
}

impl Probe {
    pub fn from_expr(e: &ClassExpr, cap: usize) -> Result<Self> {
        Ok(Probe {
            set: FnSet::from_expr(e, cap)?,
            expr: Some(e.clone()),
        })
    }

    /// A purely extensional probe; nothing is known above the cap.
    pub fn from_set(set: FnSet) -> Self {
        Probe { set, expr: None }
    }

    pub fn set(&self) -> &FnSet {
        &self.set
    }

    pub fn expr(&self) -> Option<&ClassExpr> {
        self.expr.as_ref()
    }

    pub fn cap(&self) -> usize {
        self.set.cap()
    }

    /// Whether membership of `n`-ary functions is known.
    pub fn knows(&self, n: usize) -> bool {
        n <= self.cap() || (self.expr.is_some() && n <= MAX_ARITY)
    }

    /// Membership; `false` when unknown.
    pub fn contains(&self, f: &BoolFn) -> bool {
        if f.arity() <= self.cap() {
            self.set.contains(f)
        } else {
            self.expr.as_ref().is_some_and(|e| e.contains(f))
        }
    }

    fn symmetric_members(&self, n: usize) -> Vec<BoolFn> {
        if !self.knows(n) {
            return Vec::new();
        }
        BoolFn::symmetric_of_arity(n)
            .filter(|f| self.contains(f))
            .collect()
    }

    /// A key that separates classes differing at arity `≤ cap` or on some
    /// symmetric function of arity `≤ 6`.
    pub fn fingerprint(&self) -> Fingerprint {
        let mut sym = [0u64; 4];
        let mut i = 0;
        for n in 1..=MAX_ARITY {
            for f in BoolFn::symmetric_of_arity(n) {
                if self.contains(&f) {
                    sym[i / 64] |= 1 << (i % 64);
                }
                i += 1;
            }
        }
        Fingerprint {
            set: self.set.clone(),
            symmetric: sym,
        }
    }
}

/// See [`Probe::fingerprint`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Fingerprint {
    pub set: FnSet,
    pub symmetric: [u64; 4],
}

// ---------------------------------------------------------------------------
// composition of classes

/// `I·J`: every `f(g1, …, gk)` with `f ∈ I` and `g1, …, gk ∈ J` of a common
/// arity, up to the shared cap.
pub fn class_compose(i: &FnSet, j: &FnSet) -> Result<FnSet> {
    if i.cap() != j.cap() {
        return Err(Error::Shape(format!(
            "caps {} and {} differ",
            i.cap(),
            j.cap()
        )));
    }
    let cap = i.cap();
    let mut out = FnSet::empty(cap)?;
    let inner: Vec<Vec<u64>> = (1..=cap).map(|n| j.tables(n)).collect();
    for g in i.iter() {
        for n in 1..=cap {
            if out.count(n) == 1 << (1 << n) {
                continue;
            }
            for t in compose_images(&g, &inner[n - 1], 1 << n)? {
                out.insert(&BoolFn::new(n, t)?)?;
            }
        }
    }
    Ok(out)
}

/// Closes each arity of `k` under left composition with `gens`.
fn close_left(k: &mut FnSet, gens: &[BoolFn]) -> Result<bool> {
    let mut grew = false;
    for n in 1..=k.cap() {
        loop {
            let current = k.tables(n);
            if current.is_empty() {
                break;
            }
            let mut added = false;
            for g in gens {
                for t in compose_images(g, &current, 1 << n)? {
                    added |= k.insert(&BoolFn::new(n, t)?)?;
                }
            }
            grew |= added;
            if !added {
                break;
            }
        }
    }
    Ok(grew)
}

/// `⟨F⟩_(c1,c2)` within the cap of `f`: alternates `K ← K·c1` and
/// `K ← c2·K` until nothing changes.
pub fn clonoid_closure(f: &FnSet, c1: CloneId, c2: CloneId) -> Result<FnSet> {
    let cap = f.cap();
    let right = clone_members(c1, cap)?;
    let gens = c2.generators();
    let mut k = f.clone();
    // only members added since the last right step can contribute new images
    let mut fresh = f.clone();
    loop {
        let before = k.clone();
        k = k.union(&class_compose(&fresh, &right)?)?;
        close_left(&mut k, &gens)?;
        if k == before {
            return Ok(k);
        }
        fresh = k.difference(&before)?;
    }
}

// ---------------------------------------------------------------------------
// stability

/// Why a class fails a stability condition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Witness {
    /// `f ∈ K` has a minor `result ∉ K`.
    Minor {
        f: BoolFn,
        map: Vec<usize>,
        target_arity: usize,
        result: BoolFn,
    },
    /// `f ∈ K` but `f ∗ g ∉ K` for a generator `g` of the right clone.
    Star {
        f: BoolFn,
        g: BoolFn,
        result: BoolFn,
    },
    /// `args ⊆ K` but `g(args) ∉ K` for a generator `g` of the left clone.
    Left {
        g: BoolFn,
        args: Vec<BoolFn>,
        result: BoolFn,
    },
}

impl Witness {
    pub fn result(&self) -> &BoolFn {
        match self {
            Witness::Minor { result, .. }
            | Witness::Star { result, .. }
            | Witness::Left { result, .. } => result,
        }
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Minor {
                f: g,
                map,
                target_arity,
                result,
            } => {
                let m: Vec<String> = map.iter().map(|i| format!("x{}", i + 1)).collect();
                write!(
                    f,
                    "{}({}) = {} of arity {target_arity} is not in K",
                    g.describe(),
                    m.join(","),
                    result.describe()
                )
            }
            Witness::Star { f: g, g: h, result } => write!(
                f,
                "{} ∗ {} = {} is not in K",
                g.describe(),
                h.describe(),
                result.describe()
            ),
            Witness::Left { g, args, result } => {
                let a: Vec<String> = args.iter().map(|x| x.describe()).collect();
                write!(
                    f,
                    "{}({}) = {} is not in K",
                    g.describe(),
                    a.join(", "),
                    result.describe()
                )
            }
        }
    }
}

/// Which side a stability condition composes on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Side {
    /// `K·C ⊆ K`.
    Right,
    /// `C·K ⊆ K`.
    Left,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Right => "right",
            Side::Left => "left",
        })
    }
}

/// Outcome of a stability check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub clone: CloneId,
    pub side: Side,
    pub witness: Option<Witness>,
}

impl Verdict {
    pub fn holds(&self) -> bool {
        self.witness.is_none()
    }
}

/// Minor closure within the cap, via the maps that generate all minors:
/// identifying the first two variables, swapping them, rotating, and adding
/// a fictitious last variable.
pub fn minor_closure_witness(k: &Probe) -> Result<Option<Witness>> {
    let cap = k.cap();
    for n in 1..=cap {
        let mut maps: Vec<ArgMap> = Vec::new();
        if n >= 2 {
            let mut ident: Vec<usize> = vec![0];
            ident.extend(0..n - 1);
            maps.push(ArgMap::new(ident, n - 1)?);
            let mut swap: Vec<usize> = (0..n).collect();
            swap.swap(0, 1);
            maps.push(ArgMap::new(swap, n)?);
            maps.push(ArgMap::new((0..n).map(|i| (i + 1) % n).collect(), n)?);
        }
        if n < cap {
            maps.push(ArgMap::new((0..n).collect(), n + 1)?);
        }
        for f in k.set().members(n) {
            for s in &maps {
                let r = f.minor(s)?;
                if !k.contains(&r) {
                    return Ok(Some(Witness::Minor {
                        f,
                        map: s.map().to_vec(),
                        target_arity: s.target_arity(),
                        result: r,
                    }));
                }
            }
        }
    }
    Ok(None)
}

/// Some `f ∈ K` with `f ∗ g ∉ K`: exhaustive up to the cap, then over
/// symmetric `f` up to [`LAMBDA_TIER_ARITY`].
pub fn star_witness(k: &Probe, g: &BoolFn) -> Result<Option<Witness>> {
    let p = g.arity();
    for n in 1..=LAMBDA_TIER_ARITY.max(k.cap()) {
        let r = n + p - 1;
        if r > MAX_ARITY || !k.knows(r) {
            continue;
        }
        let candidates: Vec<BoolFn> = if n <= k.cap() {
            k.set().members(n).collect()
        } else {
            k.symmetric_members(n)
        };
        for f in candidates {
            let result = f.star(g)?;
            if !k.contains(&result) {
                return Ok(Some(Witness::Star { f, g: *g, result }));
            }
        }
    }
    Ok(None)
}

/// Largest arity at which left composition is searched exhaustively.
const LEFT_EXHAUSTIVE_ARITY: usize = 3;

/// Some `g(f1, …, fp) ∉ K` with all `fi ∈ K` of one arity: exhaustive up to
/// arity 3 (and the cap), then over symmetric `fi` up to
/// [`LAMBDA_TIER_ARITY`].
pub fn left_witness(k: &Probe, g: &BoolFn) -> Result<Option<Witness>> {
    let exhaustive = k.cap().min(LEFT_EXHAUSTIVE_ARITY);
    for n in 1..=exhaustive {
        let inner = k.set().tables(n);
        let hit = compose_search(g, &inner, 1 << n, |t| !k.set().contains_table(n, t))?;
        if let Some((t, idx)) = hit {
            let args = idx
                .iter()
                .map(|&i| BoolFn::new(n, inner[i]))
                .collect::<Result<_>>()?;
            return Ok(Some(Witness::Left {
                g: *g,
                args,
                result: BoolFn::new(n, t)?,
            }));
        }
    }
    for n in exhaustive + 1..=LAMBDA_TIER_ARITY {
        if !k.knows(n) {
            break;
        }
        let members = k.symmetric_members(n);
        // weight tables: bit w is the value on inputs of Hamming weight w
        let inner: Vec<u64> = members
            .iter()
            .map(|f| {
                let c = f.lambda_vector().expect("symmetric");
                c.iter()
                    .enumerate()
                    .fold(0u64, |acc, (w, &b)| acc | (u64::from(b) << w))
            })
            .collect();
        let lam = |t: u64| BoolFn::lambda(&(0..=n).map(|w| (t >> w) & 1 == 1).collect::<Vec<_>>());
        let hit = compose_search(g, &inner, n + 1, |t| !k.contains(&lam(t).unwrap()))?;
        if let Some((t, idx)) = hit {
            let args = idx.iter().map(|&i| members[i]).collect();
            return Ok(Some(Witness::Left {
                g: *g,
                args,
                result: lam(t)?,
            }));
        }
    }
    Ok(None)
}

/// `K·c ⊆ K`: minor closure plus `f ∗ g ∈ K` for the generators `g` of `c`.
pub fn check_right_stable(k: &Probe, c: CloneId) -> Result<Verdict> {
    let mut witness = minor_closure_witness(k)?;
    if witness.is_none() {
        for g in c.generators() {
            witness = star_witness(k, &g)?;
            if witness.is_some() {
                break;
            }
        }
    }
    Ok(Verdict {
        clone: c,
        side: Side::Right,
        witness,
    })
}

/// `c·K ⊆ K`: `g(f1, …, fp) ∈ K` for the generators `g` of `c`.
pub fn check_left_stable(k: &Probe, c: CloneId) -> Result<Verdict> {
    let mut witness = None;
    for g in c.generators() {
        witness = left_witness(k, &g)?;
        if witness.is_some() {
            break;
        }
    }
    Ok(Verdict {
        clone: c,
        side: Side::Left,
        witness,
    })
}

/// Whether `K` is a `(c1, c2)`-clonoid as far as the checks can see.
pub fn is_clonoid(k: &Probe, c1: CloneId, c2: CloneId) -> Result<bool> {
    Ok(check_right_stable(k, c1)?.holds() && check_left_stable(k, c2)?.holds())
}

/// The largest clones stabilizing `K` on each side, with a refuting witness
/// for every inventory clone that fails.
#[derive(Clone, Debug, Serialize)]
pub struct Stabilizers {
    pub right: CloneId,
    pub left: CloneId,
    pub failures: Vec<Verdict>,
}

impl Stabilizers {
    /// The failing verdict for `c` on `side`, if any.
    pub fn failure(&self, c: CloneId, side: Side) -> Option<&Verdict> {
        self.failures
            .iter()
            .find(|v| v.clone == c && v.side == side)
    }
}

fn unique_max(passing: &[CloneId], side: Side) -> Result<CloneId> {
    let maxima: Vec<CloneId> = passing
        .iter()
        .copied()
        .filter(|&m| passing.iter().all(|&p| clone_leq(p, m)))
        .collect();
    match maxima.as_slice() {
        [m] => Ok(*m),
        _ => {
            let maximal: Vec<String> = passing
                .iter()
                .filter(|&&m| !passing.iter().any(|&p| p != m && clone_leq(m, p)))
                .map(|c| c.name())
                .collect();
            Err(Error::Ambiguous(format!(
                "{side} stabilizers have no greatest element; maximal: {}",
                if maximal.is_empty() {
                    "none".to_string()
                } else {
                    maximal.join(", ")
                }
            )))
        }
    }
}

/// Tests every inventory clone (one check per distinct generator) and
/// returns the greatest passing clone on each side.
pub fn largest_stabilizing(k: &Probe) -> Result<Stabilizers> {
    let minor = minor_closure_witness(k)?;
    let mut right_cache: FastMap<BoolFn, Option<Witness>> = FastMap::default();
    let mut left_cache: FastMap<BoolFn, Option<Witness>> = FastMap::default();
    let mut failures = Vec::new();
    let mut right_pass = Vec::new();
    let mut left_pass = Vec::new();
    for &c in CloneId::inventory() {
        let gens = c.generators();
        let mut rw = minor.clone();
        if rw.is_none() {
            for g in &gens {
                if !right_cache.contains_key(g) {
                    right_cache.insert(*g, star_witness(k, g)?);
                }
                if let Some(w) = &right_cache[g] {
                    rw = Some(w.clone());
                    break;
                }
            }
        }
        match rw {
            None => right_pass.push(c),
            Some(w) => failures.push(Verdict {
                clone: c,
                side: Side::Right,
                witness: Some(w),
            }),
        }
        let mut lw = None;
        for g in &gens {
            if !left_cache.contains_key(g) {
                left_cache.insert(*g, left_witness(k, g)?);
            }
            if let Some(w) = &left_cache[g] {
                lw = Some(w.clone());
                break;
            }
        }
        match lw {
            None => left_pass.push(c),
            Some(w) => failures.push(Verdict {
                clone: c,
                side: Side::Left,
                witness: Some(w),
            }),
        }
    }
    Ok(Stabilizers {
        right: unique_max(&right_pass, Side::Right)?,
        left: unique_max(&left_pass, Side::Left)?,
        failures,
    })
}

// ---------------------------------------------------------------------------
// enumeration

/// A clonoid named by an expression, with a conventional name when known.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClonoidDescriptor {
    pub name: String,
    pub expr: ClassExpr,
}

impl ClonoidDescriptor {
    pub fn new(expr: ClassExpr) -> Self {
        ClonoidDescriptor {
            name: expr.to_string(),
            expr,
        }
    }

    pub fn named(name: impl Into<String>, expr: ClassExpr) -> Self {
        ClonoidDescriptor {
            name: name.into(),
            expr,
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        Ok(ClonoidDescriptor {
            name: text.trim().to_string(),
            expr: ClassExpr::parse(text)?,
        })
    }

    pub fn probe(&self, cap: usize) -> Result<Probe> {
        Probe::from_expr(&self.expr, cap)
    }

    pub fn contains(&self, f: &BoolFn) -> bool {
        self.expr.contains(f)
    }
}

impl fmt::Display for ClonoidDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

/// The `(a, b)` endpoint pattern shared by a chain of minor classes.
fn chain_key(l: &MinorClassLabel) -> (Option<bool>, Option<bool>) {
    match (l.source, l.payload) {
        (CloneId::Mc, LabelPayload::Alt { a, b, .. }) => (Some(a), Some(b)),
        (CloneId::M0, LabelPayload::Alt { a, .. }) => (Some(a), None),
        (CloneId::M1, LabelPayload::Alt { b, .. }) => (None, Some(b)),
        _ => (None, None),
    }
}

/// The downset generated by one class, as a readable expression.
fn principal_expr(l: &MinorClassLabel) -> ClassExpr {
    use LabelPayload::*;
    let named = |c: CloneId| ClassExpr::clone_class(c);
    match (l.source, l.payload) {
        (_, Alt { k: 0, a, .. }) => ClassExpr::atom(ClassAtom::ConstVal(a)),
        (CloneId::Mc, Alt { k: 1, a, .. }) => {
            if a {
                named(CloneId::Mc).neg()
            } else {
                named(CloneId::Mc)
            }
        }
        (CloneId::M0, Alt { k: 1, a, .. }) => {
            if a {
                named(CloneId::M0).neg()
            } else {
                named(CloneId::M0)
            }
        }
        (CloneId::M1, Alt { k: 1, b, .. }) => {
            if b {
                named(CloneId::M1)
            } else {
                named(CloneId::M1).neg()
            }
        }
        (CloneId::M, Alt { k: 1, a, .. }) => {
            if a {
                named(CloneId::M).neg()
            } else {
                named(CloneId::M)
            }
        }
        (CloneId::M, Alt { k, a, .. }) => ClassExpr::union(vec![
            ClassExpr::atom(ClassAtom::AltAtMost(k - 1)),
            ClassExpr::atom(ClassAtom::AltExactly(k)).restrict(Some(a), None),
        ]),
        (src, Alt { k, .. }) => {
            let (a, b) = chain_key(&MinorClassLabel {
                source: src,
                payload: l.payload,
            });
            ClassExpr::atom(ClassAtom::AltAtMost(k)).restrict(a, b)
        }
        (_, Range2 { r, a, b }) => {
            let bits = r.bits();
            let base = match bits.count_ones() {
                3 => return ClassExpr::values(a, b),
                2 => ClassExpr::atom(match bits {
                    3 => ClassAtom::Reflexive,
                    5 => ClassAtom::Smin,
                    _ => ClassAtom::Smaj,
                }),
                _ => match bits {
                    1 => return ClassExpr::atom(ClassAtom::ConstVal(false)),
                    2 => return ClassExpr::atom(ClassAtom::ConstVal(true)),
                    _ => named(CloneId::S),
                },
            };
            if a.is_some() || b.is_some() {
                base.restrict(a, b)
            } else {
                base
            }
        }
        (_, Const(a)) => ClassExpr::atom(ClassAtom::ConstVal(a)),
        (_, NonConst { a, b }) => ClassExpr::values(a, b),
    }
}

/// Minor classes of `c` plus, for monotone-family sources, one element per
/// chain standing for the whole (untruncated) chain.
struct CandidatePoset {
    elems: Vec<ClassExpr>,
    poset: Poset,
}

fn candidate_poset(c: CloneId, cutoff: u32) -> Result<CandidatePoset> {
    if MONOTONE_FAMILY.contains(&c) {
        let labels = monotone_labels(c, cutoff)?;
        let mut keys: Vec<(Option<bool>, Option<bool>)> = Vec::new();
        for l in &labels {
            if !keys.contains(&chain_key(l)) {
                keys.push(chain_key(l));
            }
        }
        let n = labels.len();
        let mut rel = Vec::new();
        for (i, x) in labels.iter().enumerate() {
            for (j, y) in labels.iter().enumerate() {
                if i != j && crate::minorder::label_leq(x, y)? {
                    rel.push((i, j));
                }
            }
            let top = n + keys.iter().position(|k| *k == chain_key(x)).unwrap();
            rel.push((i, top));
        }
        let mut elems: Vec<ClassExpr> = labels.iter().map(principal_expr).collect();
        elems.extend(keys.iter().map(|&(a, b)| ClassExpr::values(a, b)));
        let poset = Poset::new(elems.len(), &rel)?;
        Ok(CandidatePoset { elems, poset })
    } else {
        let labels = discriminator_labels(c)?;
        let mut rel = Vec::new();
        for (i, x) in labels.iter().enumerate() {
            for (j, y) in labels.iter().enumerate() {
                if i != j && crate::minorder::label_leq(x, y)? {
                    rel.push((i, j));
                }
            }
        }
        let poset = Poset::new(labels.len(), &rel)?;
        Ok(CandidatePoset {
            elems: labels.iter().map(principal_expr).collect(),
            poset,
        })
    }
}

/// Every `(c, I_c)`-clonoid as a union of principal downsets, with monotone
/// chains truncated after `cutoff + 1` classes.
pub fn minor_downset_clonoids(c: CloneId, cutoff: u32) -> Result<Vec<ClonoidDescriptor>> {
    let cp = candidate_poset(c, cutoff)?;
    let mut out = Vec::new();
    for d in downsets(&cp.poset)? {
        let maximal: Vec<usize> = d
            .iter()
            .copied()
            .filter(|&x| !d.iter().any(|&y| y != x && cp.poset.leq(x, y)))
            .collect();
        let expr = ClassExpr::union(maximal.iter().map(|&x| cp.elems[x].clone()).collect());
        out.push(ClonoidDescriptor::new(expr));
    }
    Ok(out)
}

/// Minimal classified source clones above `c`.
fn nearest_sources(c: CloneId) -> Vec<CloneId> {
    let above: Vec<CloneId> = CLASSIFIED
        .iter()
        .copied()
        .filter(|&d| clone_leq(c, d))
        .collect();
    above
        .iter()
        .copied()
        .filter(|&d| !above.iter().any(|&e| e != d && clone_leq(e, d)))
        .collect()
}

/// Every `(c1, c2)`-clonoid.
///
/// Candidates are the downsets of the `c1`-minor poset; those not stable
/// under `c2` on the left are dropped. Monotone-family sources have
/// infinitely many `(c1, I_c)`-clonoids, so essentially-unary targets need a
/// `cutoff` on the chains; for every other target the answer is finite and
/// involves alternation at most 3, and a fixed cutoff of 1 is used.
pub fn enumerate_clonoids(
    c1: CloneId,
    c2: CloneId,
    cutoff: Option<u32>,
) -> Result<Vec<ClonoidDescriptor>> {
    if !CLASSIFIED.contains(&c1) {
        let nearest: Vec<String> = nearest_sources(c1)
            .iter()
            .map(|d| format!("({d}, {c2})"))
            .collect();
        return Err(Error::NotCovered {
            source_clone: c1.name(),
            target: c2.name(),
            nearest: if nearest.is_empty() {
                "none".into()
            } else {
                nearest.join(", ")
            },
        });
    }
    let cut = if MONOTONE_FAMILY.contains(&c1) {
        if c2.is_essentially_unary() {
            cutoff.ok_or_else(|| {
                Error::Contract(format!(
                    "({c1}, {c2})-clonoids form an infinite family; give a cutoff"
                ))
            })?
        } else {
            1
        }
    } else {
        0
    };
    let candidates = minor_downset_clonoids(c1, cut)?;
    let mut out = Vec::new();
    for d in candidates {
        if c2 == CloneId::Ic || check_left_stable(&d.probe(DEFAULT_CAP)?, c2)?.holds() {
            out.push(d);
        }
    }
    for d in &mut out {
        if let Some(name) = known_name(&d.expr)? {
            d.name = name;
        }
    }
    Ok(out)
}

/// Classes with conventional names, keyed by fingerprint.
fn name_table() -> &'static FastMap<Fingerprint, String> {
    static TABLE: std::sync::OnceLock<FastMap<Fingerprint, String>> = std::sync::OnceLock::new();
    TABLE.get_or_init(|| {
        let mut t = FastMap::default();
        for name in crate::golden::named_classes() {
            if let Ok(e) = ClassExpr::parse(&name) {
                if let Ok(p) = Probe::from_expr(&e, DEFAULT_CAP) {
                    t.entry(p.fingerprint()).or_insert(name);
                }
            }
        }
        t
    })
}

/// The conventional name of a class, if it has one.
pub fn known_name(e: &ClassExpr) -> Result<Option<String>> {
    let fp = Probe::from_expr(e, DEFAULT_CAP)?.fingerprint();
    Ok(name_table().get(&fp).cloned())
}

impl Fingerprint {
    /// Inclusion as seen by the fingerprint.
    pub fn is_subset(&self, other: &Fingerprint) -> bool {
        self.set.is_subset(&other.set)
            && self
                .symmetric
                .iter()
                .zip(&other.symmetric)
                .all(|(a, b)| a & !b == 0)
    }
}

/// Covering pairs `(lower, upper)` of the inclusion order on `ds`, compared
/// through fingerprints at `cap`.
pub fn inclusion_covers(ds: &[ClonoidDescriptor], cap: usize) -> Result<Vec<(usize, usize)>> {
    let fps: Vec<Fingerprint> = ds
        .iter()
        .map(|d| Ok(d.probe(cap)?.fingerprint()))
        .collect::<Result<_>>()?;
    let n = fps.len();
    let words = n.div_ceil(64);
    let below: Vec<Vec<u64>> = (0..n)
        .map(|j| {
            let mut b = vec![0u64; words];
            for i in 0..n {
                if i != j && fps[i] != fps[j] && fps[i].is_subset(&fps[j]) {
                    b[i / 64] |= 1 << (i % 64);
                }
            }
            b
        })
        .collect();
    let mut covers = Vec::new();
    for j in 0..n {
        let mut indirect = vec![0u64; words];
        for i in 0..n {
            if (below[j][i / 64] >> (i % 64)) & 1 == 1 {
                for (w, x) in indirect.iter_mut().zip(&below[i]) {
                    *w |= x;
                }
            }
        }
        for i in 0..n {
            if (below[j][i / 64] >> (i % 64)) & 1 == 1 && (indirect[i / 64] >> (i % 64)) & 1 == 0 {
                covers.push((i, j));
            }
        }
    }
    covers.sort_unstable();
    Ok(covers)
}

/// Graphviz rendering of a clonoid lattice.
pub fn lattice_dot(title: &str, ds: &[ClonoidDescriptor], covers: &[(usize, usize)]) -> String {
    let mut s = format!(
        "digraph \"{}\" {{\n  rankdir=BT;\n",
        title.replace('"', "'")
    );
    for (i, d) in ds.iter().enumerate() {
        s.push_str(&format!(
            "  n{i} [label=\"{}\"];\n",
            d.name.replace('"', "'")
        ));
    }
    for &(a, b) in covers {
        s.push_str(&format!("  n{a} -> n{b};\n"));
    }
    s.push_str("}\n");
    s
}

/// Extensional classes of a list of descriptors at `cap`, as index groups
/// of equal members (only groups of size ≥ 2 are returned).
pub fn coincidences(ds: &[ClonoidDescriptor], cap: usize) -> Result<Vec<Vec<usize>>> {
    let mut groups: FastMap<FnSet, Vec<usize>> = FastMap::default();
    for (i, d) in ds.iter().enumerate() {
        groups
            .entry(FnSet::from_expr(&d.expr, cap)?)
            .or_default()
            .push(i);
    }
    let mut v: Vec<Vec<usize>> = groups.into_values().filter(|g| g.len() > 1).collect();
    v.sort();
    Ok(v)
}

/// Result of [`constant_adjunction_check`].
#[derive(Clone, Debug, Serialize)]
pub struct Adjunction {
    pub source: CloneId,
    pub target: CloneId,
    pub extended_target: CloneId,
    /// Number of `(source, extended_target)`-clonoids.
    pub count: usize,
    /// Whether they are exactly `∅` plus the `(source, target)`-clonoids
    /// containing the constants.
    pub matches: bool,
}

/// Least inventory clone containing `c` and the constant functions in `consts`.
pub fn with_constants(c: CloneId, zero: bool, one: bool) -> Result<CloneId> {
    let has = |d: CloneId, v: bool| d.contains(&BoolFn::constant(1, v).unwrap());
    let above: Vec<CloneId> = CloneId::inventory()
        .iter()
        .copied()
        .filter(|&d| clone_leq(c, d) && (!zero || has(d, false)) && (!one || has(d, true)))
        .collect();
    let least: Vec<CloneId> = above
        .iter()
        .copied()
        .filter(|&d| above.iter().all(|&e| clone_leq(d, e)))
        .collect();
    match least.as_slice() {
        [d] => Ok(*d),
        _ => Err(Error::Contract(format!(
            "no least clone above {c} with the requested constants"
        ))),
    }
}

/// Checks that adding constants to the target clone selects exactly `∅` and
/// the clonoids that already contain those constants.
pub fn constant_adjunction_check(
    c1: CloneId,
    c2: CloneId,
    zero: bool,
    one: bool,
    cutoff: Option<u32>,
) -> Result<Adjunction> {
    let ext = with_constants(c2, zero, one)?;
    let base = enumerate_clonoids(c1, c2, cutoff)?;
    let extended = enumerate_clonoids(c1, ext, cutoff)?;
    let key =
        |d: &ClonoidDescriptor| -> Result<Fingerprint> { Ok(d.probe(DEFAULT_CAP)?.fingerprint()) };
    let c0 = BoolFn::constant(1, false)?;
    let c1f = BoolFn::constant(1, true)?;
    let mut expected = BTreeSet::new();
    let mut fps: Vec<Fingerprint> = Vec::new();
    for d in &base {
        let keep = d.expr == ClassExpr::Empty
            || ((!zero || d.contains(&c0)) && (!one || d.contains(&c1f)));
        if keep {
            fps.push(key(d)?);
            expected.insert(fps.len() - 1);
        }
    }
    let mut got = Vec::new();
    for d in &extended {
        got.push(key(d)?);
    }
    let same = got.len() == fps.len() && got.iter().all(|g| fps.contains(g));
    Ok(Adjunction {
        source: c1,
        target: c2,
        extended_target: ext,
        count: extended.len(),
        matches: same,
    })
}
