//! Enumerating all clonoids of a source/target pair, with the inclusion
//! lattice and the effect of adding constants to the target.

use clonoids::clonoid_engine::{
    constant_adjunction_check, enumerate_clonoids, inclusion_covers, lattice_dot,
};
use clonoids::CloneId;

fn main() -> anyhow::Result<()> {
    let (c1, c2) = (CloneId::Sc, CloneId::Lc);
    let ds = enumerate_clonoids(c1, c2, None)?;
    println!("{} ({c1}, {c2})-clonoids:", ds.len());
    for d in &ds {
        println!("  {:<24} {}", d.name, d.expr);
    }
    let covers = inclusion_covers(&ds, 3)?;
    println!("\n{}", lattice_dot("ScLc", &ds, &covers));

    for (c1, c2, zero, one) in [
        (CloneId::Sc, CloneId::Ic, true, true),
        (CloneId::Tc, CloneId::Ic, true, false),
    ] {
        let a = constant_adjunction_check(c1, c2, zero, one, None)?;
        println!(
            "({c1}, {}) has {} clonoids; they are ∅ plus the ({c1}, {c2})-clonoids with the constants: {}",
            a.extended_target, a.count, a.matches
        );
    }
    Ok(())
}
