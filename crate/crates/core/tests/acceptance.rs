//! Acceptance checks, one `PASS`/`FAIL` line per criterion.
//!
//! Expected values are either hard-coded reference numbers or recomputed by
//! naive oracles written here, independently of the library's search code.
//! A criterion whose literal statement is known not to hold prints `FAIL`
//! followed by the analysis lines that were verified in its place; the run
//! only exits non-zero when a failure is unexplained.

use std::collections::{BTreeMap, BTreeSet};
use std::time::{Duration, Instant};

use clonoids::clonoid_engine::{
    check_left_stable, check_right_stable, class_compose, clonoid_closure, enumerate_clonoids,
    is_clonoid, largest_stabilizing, Probe, Side, Witness, DEFAULT_CAP,
};
use clonoids::golden::{builtin_suite, verify_suite, GoldenSuite, VerifyOptions, SUITES};
use clonoids::kposet::{chain_hom_rule, hom_exists, is_homomorphism};
use clonoids::minorder::{minor_downset, DISCRIMINATOR_FAMILY, MONOTONE_FAMILY};
use clonoids::postlattice::{clone_lt, clone_members};
use clonoids::{
    class_label, label_leq, leq_minor_bruteforce, minor_poset, BoolFn, ClassAtom, ClassExpr,
    CloneId, FnSet, HomMode, LabeledPoset,
};
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};

type Check = Result<Outcome, String>;

enum Outcome {
    Pass(String),
    /// The literal criterion fails; `analysis` lists what was verified instead.
    Explained {
        detail: String,
        analysis: Vec<String>,
    },
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn e<T, E: std::fmt::Display>(r: Result<T, E>) -> Result<T, String> {
    r.map_err(|x| x.to_string())
}

fn lam(bits: &str) -> BoolFn {
    BoolFn::lambda_str(bits).unwrap()
}

fn expr(text: &str) -> ClassExpr {
    ClassExpr::parse(text).unwrap_or_else(|err| panic!("{text}: {err}"))
}

fn set(text: &str, cap: usize) -> FnSet {
    FnSet::from_expr(&expr(text), cap).unwrap()
}

fn fns_upto(n: usize) -> Vec<BoolFn> {
    (1..=n).flat_map(BoolFn::all_of_arity).collect()
}

/// `f ∈ {g}·c` by trying every tuple of `c`-members of `f`'s arity.
fn naive_leq(f: &BoolFn, g: &BoolFn, c: CloneId) -> bool {
    let n = f.arity();
    let inner: Vec<BoolFn> = BoolFn::all_of_arity(n).filter(|h| c.contains(h)).collect();
    let m = g.arity();
    let total = inner.len().pow(m as u32);
    (0..total).any(|mut code| {
        let hs: Vec<BoolFn> = (0..m)
            .map(|_| {
                let h = inner[code % inner.len()];
                code /= inner.len();
                h
            })
            .collect();
        g.compose(&hs).unwrap() == *f
    })
}

/// Fixes the first argument of `f` to `v`.
fn fix_first(f: &BoolFn, v: bool) -> BoolFn {
    let n = f.arity();
    BoolFn::from_tuple_fn(n - 1, |x| {
        let mut t = vec![v];
        t.extend_from_slice(x);
        f.eval(&t).unwrap()
    })
    .unwrap()
}

// ---------------------------------------------------------------------------

fn criterion_1() -> Check {
    let expected = [
        (CloneId::Sc, 16),
        (CloneId::S, 7),
        (CloneId::Tc, 6),
        (CloneId::T0, 4),
        (CloneId::T1, 4),
        (CloneId::Omega, 3),
    ];
    let fs = fns_upto(3);
    let mut counts = Vec::new();
    for (c, want) in expected {
        let downs: Vec<FnSet> = fs.iter().map(|g| minor_downset(g, c, 3).unwrap()).collect();
        let leq = |i: usize, j: usize| downs[j].contains(&fs[i]);
        // classes of the equivalence ≤ ∩ ≥, each keyed by its least member
        let mut rep = vec![usize::MAX; fs.len()];
        let mut classes = 0;
        for i in 0..fs.len() {
            if rep[i] != usize::MAX {
                continue;
            }
            classes += 1;
            for j in i..fs.len() {
                if leq(i, j) && leq(j, i) {
                    rep[j] = i;
                }
            }
        }
        ensure(classes == want, || {
            format!("{c}: {classes} classes, expected {want}")
        })?;
        let labels: Vec<_> = fs.iter().map(|f| class_label(f, c).unwrap()).collect();
        for i in 0..fs.len() {
            for j in 0..fs.len() {
                ensure((labels[i] == labels[j]) == (rep[i] == rep[j]), || {
                    format!(
                        "{c}: labels of {} and {} disagree with brute force",
                        fs[i], fs[j]
                    )
                })?;
                ensure(
                    label_leq(&labels[i], &labels[j]).unwrap() == leq(i, j),
                    || {
                        format!(
                            "{c}: order of {} and {} disagrees with brute force",
                            fs[i], fs[j]
                        )
                    },
                )?;
            }
        }
        // the composition search itself against a tuple-by-tuple oracle
        for f in fns_upto(2) {
            for g in fns_upto(2) {
                ensure(
                    naive_leq(&f, &g, c) == leq_minor_bruteforce(&f, &g, c).unwrap(),
                    || format!("{c}: search and naive oracle disagree on {f} ≤ {g}"),
                )?;
            }
        }
        counts.push(format!("{c} {classes}"));
    }
    Ok(Outcome::Pass(format!(
        "classes at arity ≤ 3: {}",
        counts.join(", ")
    )))
}

fn criterion_2() -> Check {
    let expected = [
        (CloneId::Sc, 1296),
        (CloneId::S, 19),
        (CloneId::Tc, 36),
        (CloneId::T0, 9),
        (CloneId::T1, 9),
        (CloneId::Omega, 5),
    ];
    let start = Instant::now();
    let mut got = Vec::new();
    for (c, want) in expected {
        let p = e(minor_poset(c, None))?;
        let n = e(clonoids::minorder::downsets(&p.poset))?.len();
        ensure(n == want, || format!("{c}: {n} downsets, expected {want}"))?;
        got.push(format!("{c} {n}"));
    }
    let t = start.elapsed();
    ensure(t < Duration::from_secs(1), || {
        format!("took {t:?}, limit 1 s")
    })?;
    Ok(Outcome::Pass(format!(
        "downsets: {} in {t:.2?}",
        got.join(", ")
    )))
}

/// All maps between two small labeled posets, checked one by one.
fn naive_hom(p: &LabeledPoset, q: &LabeledPoset, mode: HomMode) -> bool {
    let (n, m) = (p.len(), q.len());
    let total = m.pow(n as u32);
    (0..total).any(|mut code| {
        let h: Vec<usize> = (0..n)
            .map(|_| {
                let y = code % m;
                code /= m;
                y
            })
            .collect();
        (0..n).all(|x| p.labels[x] == q.labels[h[x]])
            && (0..n).all(|x| (0..n).all(|y| !p.poset.leq(x, y) || q.poset.leq(h[x], h[y])))
            && (!matches!(mode, HomMode::BotPreserving | HomMode::BotTopPreserving)
                || h[p.bottom.unwrap()] == q.bottom.unwrap())
            && (!matches!(mode, HomMode::TopPreserving | HomMode::BotTopPreserving)
                || h[p.top.unwrap()] == q.top.unwrap())
    })
}

fn criterion_3() -> Check {
    let fs = fns_upto(2);
    let mut pairs = 0;
    for c in MONOTONE_FAMILY {
        for f in &fs {
            for g in &fs {
                let rule =
                    label_leq(&class_label(f, c).unwrap(), &class_label(g, c).unwrap()).unwrap();
                let search = e(leq_minor_bruteforce(f, g, c))?;
                let naive = naive_leq(f, g, c);
                ensure(rule == search && search == naive, || {
                    format!("{c}: {f} ≤ {g}: rule {rule}, search {search}, naive {naive}")
                })?;
                pairs += 1;
            }
        }
    }
    let mut tables = 0;
    for mode in HomMode::ALL {
        for k in 0..=5 {
            for l in 0..=5 {
                for a in [false, true] {
                    for b in [false, true] {
                        let p = LabeledPoset::chain(k, a).unwrap();
                        let q = LabeledPoset::chain(l, b).unwrap();
                        let found = e(hom_exists(&p, &q, mode))?;
                        if let Some(h) = &found {
                            ensure(is_homomorphism(&p, &q, h, mode), || {
                                format!("{mode:?} C{k}_{a} → C{l}_{b}: returned map is not a homomorphism")
                            })?;
                        }
                        let rule = chain_hom_rule(k, a, l, b, mode);
                        let naive = naive_hom(&p, &q, mode);
                        ensure(rule == found.is_some() && rule == naive, || {
                            format!("{mode:?} C{k}_{a} → C{l}_{b}: rule {rule}, search {}, naive {naive}", found.is_some())
                        })?;
                        tables += 1;
                    }
                }
            }
        }
    }
    Ok(Outcome::Pass(format!(
        "{pairs} monotone-source pairs of arity ≤ 2 and {tables} chain homomorphism cases agree"
    )))
}

fn row_exprs(s: &GoldenSuite) -> Vec<(String, ClassExpr)> {
    s.rows
        .iter()
        .map(|r| (r.name.clone(), expr(r.expr_text())))
        .collect()
}

fn criterion_4() -> Check {
    let start = Instant::now();
    let mut summary = Vec::new();
    let mut analysis = Vec::new();
    let mut literal_ok = true;
    // functions of arity 4 that are invisible at cap 3: f(0) = f(1) = 1 with ≥ 3 alternations
    let hidden = set("Om11", 4).difference(&set("A<=2", 4)).unwrap();
    for name in SUITES {
        let s = e(builtin_suite(name))?;
        let (c1, c2) = (e(CloneId::parse(&s.source))?, e(CloneId::parse(&s.target))?);
        let rows = row_exprs(&s);
        ensure(rows.len() == s.count, || {
            format!("{name}: {} rows, expected {}", rows.len(), s.count)
        })?;
        for (row, ex) in &rows {
            let p = e(Probe::from_expr(ex, DEFAULT_CAP))?;
            let r = e(check_right_stable(&p, c1))?;
            let l = e(check_left_stable(&p, c2))?;
            ensure(r.holds() && l.holds(), || {
                let w = r.witness.or(l.witness).unwrap();
                format!("{name} `{row}` is not stable: {w}")
            })?;
        }
        let mut groups: BTreeMap<Vec<u64>, Vec<usize>> = BTreeMap::new();
        let sets: Vec<FnSet> = rows
            .iter()
            .map(|(_, x)| FnSet::from_expr(x, 3).unwrap())
            .collect();
        for (i, fs) in sets.iter().enumerate() {
            let key: Vec<u64> = (1..=3).flat_map(|n| fs.tables(n)).collect();
            groups.entry(key).or_default().push(i);
        }
        let collisions: Vec<&Vec<usize>> = groups.values().filter(|g| g.len() > 1).collect();
        let distinct = rows.len() - collisions.iter().map(|g| g.len()).sum::<usize>();
        summary.push(format!(
            "{name} {}/{} stable, {distinct} distinct at cap 3",
            rows.len(),
            s.count
        ));
        if collisions.is_empty() {
            continue;
        }
        literal_ok = false;
        // explain every collision: a pair separated at cap 4 by hidden functions only
        for g in &collisions {
            ensure(g.len() == 2, || {
                format!("{name}: collision group of size {}", g.len())
            })?;
            let (x, y) = (
                FnSet::from_expr(&rows[g[0]].1, 4).unwrap(),
                FnSet::from_expr(&rows[g[1]].1, 4).unwrap(),
            );
            let sym = x
                .difference(&y)
                .unwrap()
                .union(&y.difference(&x).unwrap())
                .unwrap();
            ensure(!sym.is_empty() && sym.is_subset(&hidden), || {
                format!(
                    "{name}: `{}` and `{}` differ outside the predicted functions",
                    rows[g[0]].0, rows[g[1]].0
                )
            })?;
            analysis.push(format!(
                "{name}: `{}` = `{}` at cap 3; separated at cap 4 by {} functions with f(0)=f(1)=1 and Alt ≥ 4",
                rows[g[0]].0,
                rows[g[1]].0,
                sym.len()
            ));
        }
        // the lists are distinct as soon as arity 4 is included
        let at4: BTreeSet<Vec<u64>> = rows
            .iter()
            .map(|(_, x)| {
                let f = FnSet::from_expr(x, 4).unwrap();
                (1..=4).flat_map(|n| f.tables(n)).collect()
            })
            .collect();
        ensure(at4.len() == rows.len(), || {
            format!("{name}: rows still coincide at cap 4")
        })?;
        analysis.push(format!(
            "{name}: all {} rows pairwise distinct at cap 4",
            rows.len()
        ));
    }
    for name in SUITES {
        let s = e(builtin_suite(name))?;
        let r = e(verify_suite(
            &s,
            VerifyOptions {
                stabilizers: false,
                ..Default::default()
            },
        ))?;
        ensure(r.passed(), || format!("{name}: {}", r.findings[0]))?;
    }
    let t = start.elapsed();
    ensure(t < Duration::from_secs(600), || {
        format!("took {t:?}, limit 10 min")
    })?;
    let detail = format!("{} in {t:.1?}", summary.join("; "));
    if literal_ok {
        Ok(Outcome::Pass(detail))
    } else {
        Ok(Outcome::Explained { detail, analysis })
    }
}

/// Replays a witness and confirms its result lies outside `k`.
fn replay(w: &Witness, k: &Probe) -> Result<(), String> {
    let (computed, inputs_in_k) = match w {
        Witness::Minor {
            f,
            map,
            target_arity,
            result: _,
        } => {
            let m = e(clonoids::ArgMap::new(map.clone(), *target_arity))?;
            (e(f.minor(&m))?, k.contains(f))
        }
        Witness::Star { f, g, .. } => (e(f.star(g))?, k.contains(f)),
        Witness::Left { g, args, .. } => (e(g.compose(args))?, args.iter().all(|a| k.contains(a))),
    };
    ensure(
        computed == *w.result() && inputs_in_k && !k.contains(&computed),
        || format!("witness `{w}` does not replay"),
    )
}

fn criterion_5() -> Check {
    let start = Instant::now();
    let mut listed: Vec<(&str, String, CloneId, CloneId, CloneId)> = Vec::new();
    let mc = e(builtin_suite("mcvc"))?;
    for r in &mc.stability {
        listed.push((
            "mcvc",
            r.name.clone(),
            CloneId::Mc,
            e(CloneId::parse(&r.right))?,
            e(CloneId::parse(&r.left))?,
        ));
    }
    let sc = e(builtin_suite("scvc"))?;
    for r in &sc.rows {
        let (Some(right), Some(left)) = (&r.right, &r.left) else {
            return Err(format!("scvc `{}` lacks stabilizers", r.name));
        };
        listed.push((
            "scvc",
            r.name.clone(),
            CloneId::Sc,
            e(CloneId::parse(right))?,
            e(CloneId::parse(left))?,
        ));
    }
    let mut mismatches = Vec::new();
    let mut refuted = 0;
    for (suite, name, _, right, left) in &listed {
        let k = e(Probe::from_expr(&expr(name), DEFAULT_CAP))?;
        let st = e(largest_stabilizing(&k))?;
        for (side, want, got) in [
            (Side::Right, *right, st.right),
            (Side::Left, *left, st.left),
        ] {
            if want != got {
                mismatches.push((suite.to_string(), name.clone(), side, want, got));
                continue;
            }
            for &d in CloneId::inventory() {
                if clone_lt(want, d) {
                    let v = st
                        .failure(d, side)
                        .ok_or_else(|| format!("{suite} `{name}`: no {side} refutation for {d}"))?;
                    replay(v.witness.as_ref().unwrap(), &k)?;
                    refuted += 1;
                }
            }
        }
    }
    let mut analysis = Vec::new();
    for (suite, name, side, want, got) in &mismatches {
        // the one expected discrepancy: the listed left stabilizer V1 of
        // ~M | A2_11, whose members include the constant 0
        ensure(
            suite == "mcvc"
                && name == "~M | A2_11"
                && *side == Side::Left
                && *want == CloneId::V1
                && *got == CloneId::V,
            || format!("{suite} `{name}`: listed {side} stabilizer {want}, computed {got}"),
        )?;
        let k4 = set(name, 4);
        let zero = BoolFn::constant(1, false).unwrap();
        ensure(k4.contains(&zero), || "C0 ⊄ K".into())?;
        // exhaustive ∨-closure at arity ≤ 4: f ∨ g ∈ K for all f, g ∈ K
        for n in 1..=4 {
            let ts = k4.tables(n);
            for &a in &ts {
                for &b in &ts {
                    ensure(k4.contains_table(n, a | b), || {
                        format!("{a:x} ∨ {b:x} ∉ K at arity {n}")
                    })?;
                }
            }
        }
        ensure(
            is_clonoid(
                &e(Probe::from_expr(&expr(name), 4))?,
                CloneId::Mc,
                CloneId::V,
            )
            .unwrap(),
            || "not V-stable at cap 4".into(),
        )?;
        analysis.push(format!(
            "{suite} `{name}`: listed left stabilizer {want}, but K ⊇ C0 is closed under ∨ (checked exhaustively at arity ≤ 4) and so is stable under V ⊋ {want}"
        ));
    }
    // the λ-vector witnesses, bit for bit
    let in_e = |f: &BoolFn, t: &str| expr(t).contains(f);
    let lam_checks: Vec<(&str, bool)> = vec![
        (
            "¬(↔) = + ∉ Eioo ∪ C0",
            BoolFn::not().compose(&[BoolFn::iff()]).unwrap() == BoolFn::xor()
                && in_e(&BoolFn::iff(), "A2_11")
                && !in_e(&BoolFn::xor(), "Eioo | C0"),
        ),
        (
            "∧(λ11101, λ10111) = λ10101",
            BoolFn::and()
                .compose(&[lam("11101"), lam("10111")])
                .unwrap()
                == lam("10101"),
        ),
        (
            "λ10001 ∨ (λ11101 ∧ λ10111) = λ10101",
            BoolFn::or_and()
                .compose(&[lam("10001"), lam("11101"), lam("10111")])
                .unwrap()
                == lam("10101")
                || BoolFn::or()
                    .compose(&[
                        lam("10001"),
                        BoolFn::and()
                            .compose(&[lam("11101"), lam("10111")])
                            .unwrap(),
                    ])
                    .unwrap()
                    == lam("10101"),
        ),
        (
            "λ10101 ∈ A4_11 \\ (Eiii ∪ A<=2_11)",
            in_e(&lam("10101"), "A4_11")
                && !in_e(&lam("10101"), "Eiii | A<=2_11")
                && ["11101", "10111", "10001"]
                    .iter()
                    .all(|b| in_e(&lam(b), "A2_11")),
        ),
        (
            "∧(λ011, λ110) = λ010",
            BoolFn::and().compose(&[lam("011"), lam("110")]).unwrap() == lam("010")
                && in_e(&lam("011"), "Mc")
                && in_e(&lam("110"), "~Mc")
                && !in_e(&lam("010"), "Eioo | C0"),
        ),
        (
            "∧(λ0111, λ1101) = λ0101",
            BoolFn::and().compose(&[lam("0111"), lam("1101")]).unwrap() == lam("0101")
                && in_e(&lam("0101"), "A3_01")
                && !in_e(&lam("0101"), "Eioi | M"),
        ),
        (
            "λ101 ∗ ¬ = +",
            lam("101").star(&BoolFn::not()).unwrap() == BoolFn::xor(),
        ),
        (
            "λ101 ∗ +₃ = λ10101",
            lam("101").star(&BoolFn::xor3()).unwrap() == lam("10101"),
        ),
        (
            "id ∗ +₃ = λ0101 ∉ Eioi ∪ Mc",
            BoolFn::identity().star(&BoolFn::xor3()).unwrap() == lam("0101")
                && !in_e(&lam("0101"), "Eioi | Mc"),
        ),
        (
            "λ101 ∗ 0 = λ10 ∉ Eiio",
            fix_first(&lam("101"), false) == lam("10") && !in_e(&lam("10"), "Eiio"),
        ),
        (
            "λ10101 ∗ 0 = λ1010 ∉ Eiio ∪ ~Mc",
            fix_first(&lam("10101"), false) == lam("1010") && !in_e(&lam("1010"), "Eiio | ~Mc"),
        ),
        (
            "λ0101 ∗ 0 = λ010 ∉ Eioo ∪ C0",
            fix_first(&lam("0101"), false) == lam("010") && !in_e(&lam("010"), "Eioo | C0"),
        ),
    ];
    for (what, ok) in &lam_checks {
        ensure(*ok, || format!("λ witness fails: {what}"))?;
    }
    // the engine finds the same witnesses on its own
    let a = e(Probe::from_expr(&expr("A<=2_11"), DEFAULT_CAP))?;
    let star = e(check_right_stable(&a, CloneId::Lc))?
        .witness
        .map(|w| w.to_string());
    ensure(
        star.as_deref() == Some("λ101 ∗ λ0101 = λ10101 is not in K"),
        || format!("Lc witness {star:?}"),
    )?;
    let meet = e(check_left_stable(&a, CloneId::LambdaC))?.witness;
    ensure(
        meet.as_ref().map(|w| *w.result()) == Some(lam("10101")),
        || format!("Λc witness {meet:?}"),
    )?;
    // tables of the ∧-witnesses for Smaj with fixed endpoints
    let mut tables = 0;
    for (va, vb) in [(false, true), (true, false), (true, true)] {
        // rows x1x2x3 ↦ (f, g) as in the reference table
        let rows: [(usize, bool, bool); 8] = [
            (0b000, va, va),
            (0b111, vb, vb),
            (0b001, true, true),
            (0b110, true, true),
            (0b010, true, false),
            (0b101, false, true),
            (0b100, false, false),
            (0b011, true, true),
        ];
        let f = BoolFn::from_index_fn(3, |i| rows.iter().find(|r| r.0 == i).unwrap().1).unwrap();
        let g = BoolFn::from_index_fn(3, |i| rows.iter().find(|r| r.0 == i).unwrap().2).unwrap();
        let fg = BoolFn::and().compose(&[f, g]).unwrap();
        let ab = format!("Om{}{}", u8::from(va), u8::from(vb));
        let cls = format!("Smaj & {ab}");
        ensure(in_e(&f, &cls) && in_e(&g, &cls), || {
            format!("table inputs not in {cls}")
        })?;
        ensure(!in_e(&fg, "Smaj | Smin | Refl") && in_e(&fg, &ab), || {
            format!("table result for {ab} escapes")
        })?;
        let k = e(Probe::from_expr(&expr(&cls), DEFAULT_CAP))?;
        let w = e(check_left_stable(&k, CloneId::LambdaC))?;
        ensure(!w.holds(), || format!("{cls} reported ∧-stable"))?;
        replay(w.witness.as_ref().unwrap(), &k)?;
        tables += 1;
    }
    for va in [false, true] {
        let f = BoolFn::from_index_fn(2, |i| [va, false, true, !va][i]).unwrap();
        let g = BoolFn::from_index_fn(2, |i| [false, true, true, false][i]).unwrap();
        let fg = BoolFn::and().compose(&[f, g]).unwrap();
        let ab = format!("Om{}{}", u8::from(va), u8::from(!va));
        ensure(in_e(&f, &ab) && in_e(&g, "Refl_00"), || {
            "second table inputs".into()
        })?;
        ensure(
            fg == BoolFn::from_index_fn(2, |i| i == 2).unwrap() && !in_e(&fg, "Eioo | Refl_00"),
            || "second table result".into(),
        )?;
        tables += 1;
    }
    let t = start.elapsed();
    ensure(t < Duration::from_secs(900), || {
        format!("took {t:?}, limit 15 min")
    })?;
    let detail = format!(
        "{} rows, {} listed stabilizers match, {refuted} strictly larger clones refuted by replayed witnesses, {} λ witnesses and {tables} tables exact, in {t:.1?}",
        listed.len(),
        2 * listed.len() - mismatches.len(),
        lam_checks.len()
    );
    if mismatches.is_empty() {
        Ok(Outcome::Pass(detail))
    } else {
        Ok(Outcome::Explained { detail, analysis })
    }
}

fn alt_class(k: u32, a: Option<bool>, b: Option<bool>, at_most: bool) -> FnSet {
    let atom = if at_most {
        ClassAtom::AltAtMost(k)
    } else {
        ClassAtom::AltExactly(k)
    };
    FnSet::from_expr(&ClassExpr::atom(atom).restrict(a, b), 3).unwrap()
}

fn criterion_6() -> Check {
    let mut checked = 0;
    for k in 0..=3u32 {
        for a in [false, true] {
            let b = a ^ (k % 2 == 1);
            let ak = alt_class(k, Some(a), Some(b), false);
            let cases = [
                (CloneId::Mc, alt_class(k, Some(a), Some(b), true)),
                (CloneId::M0, alt_class(k, Some(a), None, true)),
                (CloneId::M1, alt_class(k, None, Some(b), true)),
            ];
            for (c, want) in cases {
                let got = e(class_compose(&ak, &e(clone_members(c, 3))?))?;
                ensure(got == want, || {
                    format!(
                        "A{k}_{}{} · {c}: {}",
                        u8::from(a),
                        u8::from(b),
                        got.summary()
                    )
                })?;
                checked += 1;
            }
            if k >= 1 {
                let want = ak.union(&alt_class(k - 1, None, None, true)).unwrap();
                let got = e(class_compose(&ak, &e(clone_members(CloneId::M, 3))?))?;
                ensure(got == want, || {
                    format!("A{k}_{}{} · M: {}", u8::from(a), u8::from(b), got.summary())
                })?;
                checked += 1;
            }
        }
    }
    Ok(Outcome::Pass(format!(
        "{checked} right-composition identities hold at cap 3"
    )))
}

// ---------------------------------------------------------------------------
// randomized algebra

fn small_set() -> impl Strategy<Value = FnSet> {
    (
        any::<u8>(),
        any::<u16>(),
        any::<u16>(),
        prop::collection::vec(any::<u8>(), 0..4),
    )
        .prop_map(|(u, b1, b2, t)| {
            let mut s = FnSet::empty(3).unwrap();
            for i in 0..4 {
                if (u >> i) & 1 == 1 {
                    s.insert(&BoolFn::new(1, i).unwrap()).unwrap();
                }
            }
            let b = b1 & b2;
            for i in 0..16 {
                if (b >> i) & 1 == 1 {
                    s.insert(&BoolFn::new(2, i).unwrap()).unwrap();
                }
            }
            for x in t {
                s.insert(&BoolFn::new(3, u64::from(x)).unwrap()).unwrap();
            }
            s
        })
}

/// All minors of unary functions from a 4-bit mask: an essentially at most
/// unary set containing the unary minors of its members.
fn unary_set() -> impl Strategy<Value = FnSet> {
    any::<u8>().prop_map(|u| {
        let mut s = FnSet::empty(3).unwrap();
        for n in 1..=3 {
            for i in 0..4u64 {
                if (u >> i) & 1 == 1 {
                    let f = BoolFn::new(1, i).unwrap();
                    for j in 0..n {
                        s.insert(&f.compose(&[BoolFn::projection(n, j).unwrap()]).unwrap())
                            .unwrap();
                    }
                }
            }
        }
        s
    })
}

const SOURCES: [CloneId; 16] = [
    CloneId::Omega,
    CloneId::T0,
    CloneId::Tc,
    CloneId::M,
    CloneId::M1,
    CloneId::Mc,
    CloneId::S,
    CloneId::Sc,
    CloneId::SM,
    CloneId::L,
    CloneId::Lc,
    CloneId::V0,
    CloneId::LambdaC,
    CloneId::Omega1,
    CloneId::IStar,
    CloneId::Ic,
];

fn source() -> impl Strategy<Value = CloneId> {
    prop::sample::select(SOURCES.to_vec())
}

fn consts(zero: bool, one: bool) -> FnSet {
    let mut s = FnSet::empty(3).unwrap();
    for n in 1..=3 {
        if zero {
            s.insert(&BoolFn::constant(n, false).unwrap()).unwrap();
        }
        if one {
            s.insert(&BoolFn::constant(n, true).unwrap()).unwrap();
        }
    }
    s
}

/// The members of `s` of arity at most `n`.
fn arity_at_most(s: &FnSet, n: usize) -> FnSet {
    let mut out = FnSet::empty(s.cap()).unwrap();
    for f in s.iter().filter(|f| f.arity() <= n) {
        out.insert(&f).unwrap();
    }
    out
}

fn closed(k: &FnSet, c1: CloneId, c2: CloneId) -> bool {
    clonoid_closure(k, c1, c2).unwrap() == *k
}

fn u(a: &FnSet, b: &FnSet) -> FnSet {
    a.union(b).unwrap()
}

fn cc(a: &FnSet, b: &FnSet) -> FnSet {
    class_compose(a, b).unwrap()
}

fn run_property<S: Strategy>(
    name: &str,
    strategy: S,
    test: impl Fn(S::Value) -> Result<(), TestCaseError>,
) -> Result<String, String> {
    let mut runner = TestRunner::new(Config {
        cases: 1000,
        failure_persistence: None,
        ..Config::default()
    });
    runner
        .run(&strategy, test)
        .map_err(|err| format!("{name}: {err}"))?;
    Ok(name.to_string())
}

/// `(c2, zero, one, c2')` with `c2 ∪ constants = c2'`.
const WITH_CONSTANTS: [(CloneId, bool, bool, CloneId); 13] = [
    (CloneId::Ic, true, false, CloneId::I0),
    (CloneId::Ic, false, true, CloneId::I1),
    (CloneId::Ic, true, true, CloneId::I),
    (CloneId::IStar, true, true, CloneId::Omega1),
    (CloneId::Vc, true, false, CloneId::V0),
    (CloneId::Vc, false, true, CloneId::V1),
    (CloneId::Vc, true, true, CloneId::V),
    (CloneId::LambdaC, true, false, CloneId::Lambda0),
    (CloneId::LambdaC, false, true, CloneId::Lambda1),
    (CloneId::LambdaC, true, true, CloneId::Lambda),
    (CloneId::Mc, true, false, CloneId::M0),
    (CloneId::Mc, false, true, CloneId::M1),
    (CloneId::Mc, true, true, CloneId::M),
];

fn criterion_7() -> Check {
    let start = Instant::now();
    let mut done = Vec::new();
    let minors = |j: &FnSet| clonoid_closure(j, CloneId::Ic, CloneId::Ic).unwrap();

    done.push(run_property(
        "associativity",
        (small_set(), small_set(), small_set(), any::<bool>()),
        |(i, j, k, wide_outer)| {
            let lhs = cc(&cc(&i, &j), &k);
            prop_assert!(lhs.is_subset(&cc(&i, &cc(&j, &k))));
            // Equality for minor-closed J: the left side merges the J-members
            // under one outer function into a single J-member of arity up to
            // arity(I)·arity(J), so the bound must stay within the cap.
            let (mi, pj) = if wide_outer { (3, 1) } else { (1, 3) };
            let it = arity_at_most(&i, mi);
            let jm = minors(&arity_at_most(&j, pj));
            prop_assert_eq!(cc(&cc(&it, &jm), &k), cc(&it, &cc(&jm, &k)));
            Ok(())
        },
    )?);
    done.push(run_property(
        "unary associativity",
        (unary_set(), small_set(), small_set()),
        |(i, j, k)| {
            prop_assert_eq!(cc(&cc(&i, &j), &k), cc(&i, &cc(&j, &k)));
            Ok(())
        },
    )?);
    done.push(run_property(
        "union distribution",
        (small_set(), small_set(), small_set(), unary_set()),
        |(f1, f2, g, fu)| {
            prop_assert_eq!(cc(&u(&f1, &f2), &g), u(&cc(&f1, &g), &cc(&f2, &g)));
            prop_assert_eq!(cc(&fu, &u(&f1, &f2)), u(&cc(&fu, &f1), &cc(&fu, &f2)));
            Ok(())
        },
    )?);
    let unary_targets = vec![
        CloneId::Ic,
        CloneId::I0,
        CloneId::I1,
        CloneId::I,
        CloneId::IStar,
        CloneId::Omega1,
    ];
    done.push(run_property(
        "unary-target additivity",
        (
            small_set(),
            small_set(),
            source(),
            prop::sample::select(unary_targets),
        ),
        |(f, g, c1, c2)| {
            let whole = clonoid_closure(&u(&f, &g), c1, c2).unwrap();
            let parts = u(
                &clonoid_closure(&f, c1, c2).unwrap(),
                &clonoid_closure(&g, c1, c2).unwrap(),
            );
            prop_assert_eq!(whole, parts);
            Ok(())
        },
    )?);
    done.push(run_property(
        "complements and constants",
        (small_set(), source()),
        |(f, c)| {
            let k = clonoid_closure(&f, c, CloneId::Ic).unwrap();
            prop_assert!(closed(&k.bar(), c, CloneId::Ic));
            prop_assert!(closed(&u(&k, &consts(true, false)), c, CloneId::I0));
            prop_assert!(closed(&u(&k, &consts(false, true)), c, CloneId::I1));
            prop_assert!(closed(&u(&k, &consts(true, true)), c, CloneId::I));
            prop_assert!(closed(&u(&k, &k.bar()), c, CloneId::IStar));
            prop_assert!(closed(
                &u(&u(&k, &k.bar()), &consts(true, true)),
                c,
                CloneId::Omega1
            ));
            Ok(())
        },
    )?);
    done.push(run_property(
        "negation-closed targets",
        (small_set(), source()),
        |(f, c)| {
            let k = clonoid_closure(&f, c, CloneId::IStar).unwrap();
            prop_assert_eq!(k.bar(), k.clone());
            let base = clonoid_closure(&f, c, CloneId::Ic).unwrap();
            prop_assert_eq!(closed(&base, c, CloneId::IStar), base.bar() == base);
            Ok(())
        },
    )?);
    done.push(run_property(
        "adding constants to the target",
        (
            small_set(),
            source(),
            prop::sample::select(WITH_CONSTANTS.to_vec()),
        ),
        |(f, c1, (c2, zero, one, c2x))| {
            let cs = consts(zero, one);
            prop_assert_eq!(
                u(&clone_members(c2, 3).unwrap(), &cs),
                clone_members(c2x, 3).unwrap()
            );
            let k = clonoid_closure(&f, c1, c2).unwrap();
            prop_assert!(closed(&u(&k, &cs), c1, c2x));
            let kx = clonoid_closure(&f, c1, c2x).unwrap();
            if !kx.is_empty() {
                prop_assert!(cs.is_subset(&kx) && closed(&kx, c1, c2));
            }
            let with = clonoid_closure(&u(&f, &cs), c1, c2).unwrap();
            prop_assert!(closed(&with, c1, c2x));
            Ok(())
        },
    )?);
    let targets = SOURCES
        .iter()
        .copied()
        .chain([CloneId::Vc, CloneId::V1, CloneId::I0, CloneId::L0])
        .collect::<Vec<_>>();
    done.push(run_property(
        "duality",
        (small_set(), source(), prop::sample::select(targets)),
        |(f, c1, c2)| {
            let k = clonoid_closure(&f, c1, c2).unwrap();
            prop_assert!(closed(&k.dual(), c1.dual(), c2.dual()));
            prop_assert_eq!(
                clonoid_closure(&f.dual(), c1.dual(), c2.dual()).unwrap(),
                k.dual()
            );
            Ok(())
        },
    )?);
    // the 56 listed classes, dualized, are exactly the (Mc, Λc)-clonoids
    let mc = e(builtin_suite("mcvc"))?;
    let mut dual_keys = BTreeSet::new();
    for (name, x) in row_exprs(&mc) {
        let p = e(Probe::from_expr(&x.clone().dual(), DEFAULT_CAP))?;
        ensure(e(is_clonoid(&p, CloneId::Mc, CloneId::LambdaC))?, || {
            format!("dual of `{name}` is not an (Mc, Λc)-clonoid")
        })?;
        dual_keys.insert(
            e(Probe::from_expr(&x.dual(), 4))?
                .fingerprint()
                .set
                .iter()
                .map(|f| (f.arity(), f.table()))
                .collect::<Vec<_>>(),
        );
    }
    let enumerated = e(enumerate_clonoids(CloneId::Mc, CloneId::LambdaC, None))?;
    let enum_keys: BTreeSet<_> = enumerated
        .iter()
        .map(|d| {
            d.probe(4)
                .unwrap()
                .fingerprint()
                .set
                .iter()
                .map(|f| (f.arity(), f.table()))
                .collect::<Vec<_>>()
        })
        .collect();
    ensure(dual_keys.len() == 56 && dual_keys == enum_keys, || {
        format!(
            "{} dual classes, {} enumerated (Mc, Λc)-clonoids",
            dual_keys.len(),
            enum_keys.len()
        )
    })?;
    done.push("duals of the 56 (Mc, Vc)-clonoids".into());
    let t = start.elapsed();
    ensure(t < Duration::from_secs(300), || {
        format!("took {t:?}, limit 5 min")
    })?;
    Ok(Outcome::Pass(format!(
        "1000 cases each: {} in {t:.1?}",
        done.join(", ")
    )))
}

// ---------------------------------------------------------------------------
// closure oracle

/// Fixpoint of right composition with `right` members and left composition
/// with `left`, computed by direct function composition.
fn naive_closure(f: &FnSet, right: &dyn Fn(&BoolFn) -> bool, left: &[BoolFn]) -> FnSet {
    let full = |k: &FnSet, n: usize| k.count(n) == 1 << (1 << n);
    let tuples = |pool: &[BoolFn], m: usize| -> Vec<Vec<BoolFn>> {
        (0..pool.len().pow(m as u32))
            .map(|mut code| {
                (0..m)
                    .map(|_| {
                        let h = pool[code % pool.len()];
                        code /= pool.len();
                        h
                    })
                    .collect()
            })
            .collect()
    };
    let inner: Vec<Vec<BoolFn>> = (0..=3)
        .map(|n| {
            BoolFn::all_of_arity(n.max(1))
                .filter(|h| n > 0 && right(h))
                .collect()
        })
        .collect();
    let mut k = f.clone();
    let mut fresh: Vec<BoolFn> = k.iter().collect();
    while !fresh.is_empty() {
        let before = k.clone();
        for g in &fresh {
            for n in 1..=3 {
                if full(&k, n) {
                    continue;
                }
                for args in tuples(&inner[n], g.arity()) {
                    k.insert(&g.compose(&args).unwrap()).unwrap();
                }
            }
        }
        for op in left {
            for n in 1..=3 {
                let ts: Vec<BoolFn> = k.members(n).collect();
                if ts.is_empty() || full(&k, n) {
                    continue;
                }
                for args in tuples(&ts, op.arity()) {
                    k.insert(&op.compose(&args).unwrap()).unwrap();
                }
            }
        }
        fresh = k.iter().filter(|h| !before.contains(h)).collect();
    }
    k
}

fn criterion_8() -> Check {
    let start = Instant::now();
    let mono_c = |h: &BoolFn| h.is_monotone() && !h.at_zero() && h.at_one();
    let self_dual_c = |h: &BoolFn| h.is_self_dual() && !h.at_zero();
    let any = |_: &BoolFn| true;
    let one = |f: BoolFn| FnSet::from_fns(3, &[f]).unwrap();
    let cases: Vec<(
        &str,
        FnSet,
        CloneId,
        CloneId,
        &dyn Fn(&BoolFn) -> bool,
        Vec<BoolFn>,
        &str,
    )> = vec![
        (
            "⟨↔⟩(Sc, Ic)",
            one(BoolFn::iff()),
            CloneId::Sc,
            CloneId::Ic,
            &self_dual_c,
            vec![],
            "Refl_11",
        ),
        (
            "⟨λ101⟩(Mc, Vc)",
            one(lam("101")),
            CloneId::Mc,
            CloneId::Vc,
            &mono_c,
            vec![BoolFn::or()],
            "A<=2_11",
        ),
        (
            "⟨∅⟩(Mc, Vc)",
            FnSet::empty(3).unwrap(),
            CloneId::Mc,
            CloneId::Vc,
            &mono_c,
            vec![BoolFn::or()],
            "Empty",
        ),
        (
            "⟨id⟩(Omega, Ic)",
            one(BoolFn::identity()),
            CloneId::Omega,
            CloneId::Ic,
            &any,
            vec![],
            "Omega",
        ),
        (
            "⟨0⟩(Mc, Vc)",
            one(BoolFn::constant(1, false).unwrap()),
            CloneId::Mc,
            CloneId::Vc,
            &mono_c,
            vec![BoolFn::or()],
            "C0",
        ),
    ];
    let mut names = Vec::new();
    let mut engine = Duration::ZERO;
    for (what, f, c1, c2, right, left, want) in cases {
        let t0 = Instant::now();
        let got = e(clonoid_closure(&f, c1, c2))?;
        engine += t0.elapsed();
        let oracle = naive_closure(&f, right, &left);
        let predicted = set(want, 3);
        ensure(got == oracle, || {
            format!(
                "{what}: engine {} vs oracle {}",
                got.summary(),
                oracle.summary()
            )
        })?;
        ensure(got == predicted, || {
            format!("{what}: {} is not `{want}`", got.summary())
        })?;
        names.push(format!("{what} = {want}"));
    }
    // with a trivial target, ⟨f⟩ is the downset of f's class in the minor poset
    let mut downsets = 0;
    for c in DISCRIMINATOR_FAMILY {
        let poset = e(minor_poset(c, None))?;
        for f in fns_upto(2) {
            let lf = e(class_label(&f, c))?;
            let below: Vec<usize> = (0..poset.len())
                .filter(|&i| label_leq(&poset.classes[i], &lf).unwrap())
                .collect();
            let predicted = FnSet::from_expr(&poset.downset_expr(&below), 3).unwrap();
            let t0 = Instant::now();
            let got = e(clonoid_closure(
                &FnSet::from_fns(3, &[f]).unwrap(),
                c,
                CloneId::Ic,
            ))?;
            engine += t0.elapsed();
            ensure(got == predicted, || {
                format!(
                    "⟨{f}⟩({c}, Ic): {} is not the downset of {lf}",
                    got.summary()
                )
            })?;
            downsets += 1;
        }
    }
    names.push(format!(
        "{downsets} principal downsets of the discriminator sources"
    ));
    ensure(engine < Duration::from_secs(60), || {
        format!("closures took {engine:?}, limit 1 min")
    })?;
    Ok(Outcome::Pass(format!(
        "{}; closures {engine:.1?}, oracles {:.1?}",
        names.join("; "),
        start.elapsed() - engine
    )))
}

fn main() {
    let criteria: [(u32, &str, fn() -> Check); 8] = [
        (1, "minor classes of the discriminator sources", criterion_1),
        (2, "downset counts", criterion_2),
        (3, "monotone sources and chain homomorphisms", criterion_3),
        (
            4,
            "listed clonoids stable and distinct at cap 3",
            criterion_4,
        ),
        (5, "stabilizer tables and λ witnesses", criterion_5),
        (6, "right composition of alternation classes", criterion_6),
        (7, "algebraic properties", criterion_7),
        (8, "closure oracle", criterion_8),
    ];
    // optional numeric arguments select criteria; other arguments are ignored
    let only: Vec<u32> = std::env::args()
        .skip(1)
        .filter_map(|a| a.parse().ok())
        .collect();
    let mut unexplained = 0;
    for (id, title, run) in criteria {
        if !only.is_empty() && !only.contains(&id) {
            continue;
        }
        let start = Instant::now();
        match run() {
            Ok(Outcome::Pass(detail)) => println!("PASS {id} {title}: {detail}"),
            Ok(Outcome::Explained { detail, analysis }) => {
                println!("FAIL {id} {title}: {detail}");
                for line in analysis {
                    println!("     analysis: {line}");
                }
            }
            Err(msg) => {
                unexplained += 1;
                println!("FAIL {id} {title}: {msg} ({:.1?})", start.elapsed());
            }
        }
    }
    if unexplained > 0 {
        println!("{unexplained} unexplained failure(s)");
        std::process::exit(1);
    }
}
