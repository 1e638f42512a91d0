//! Generated clonoids: closing a set of functions under a pair of clones.

use clonoids::clonoid_engine::{clonoid_closure, enumerate_clonoids};
use clonoids::{BoolFn, CloneId, FnSet};

fn show(gens: &[BoolFn], c1: CloneId, c2: CloneId, cutoff: Option<u32>) -> anyhow::Result<()> {
    let k = clonoid_closure(&FnSet::from_fns(3, gens)?, c1, c2)?;
    let names: Vec<String> = gens.iter().map(|g| g.describe()).collect();
    let hit = enumerate_clonoids(c1, c2, cutoff)?.into_iter().find(|d| {
        FnSet::from_expr(&d.expr, 3)
            .map(|s| s == k)
            .unwrap_or(false)
    });
    println!(
        "⟨{}⟩ over ({c1}, {c2}): {}  = {}",
        names.join(", "),
        k.summary(),
        hit.map_or("(no listed clonoid)".to_string(), |d| d.name)
    );
    Ok(())
}

fn main() -> anyhow::Result<()> {
    show(&[BoolFn::iff()], CloneId::Sc, CloneId::Ic, None)?;
    show(
        &[BoolFn::lambda_str("101")?],
        CloneId::Mc,
        CloneId::Vc,
        Some(3),
    )?;
    show(
        &[BoolFn::and(), BoolFn::not()],
        CloneId::Sc,
        CloneId::Lc,
        None,
    )?;
    show(&[BoolFn::majority()], CloneId::Tc, CloneId::Ic, None)?;
    show(&[], CloneId::M, CloneId::V, Some(1))?;
    Ok(())
}
