//! The encoded part of Post's lattice: names, generators and the order.

use clonoids::postlattice::{clone_members, hasse_edges};
use clonoids::{clone_leq, CloneId};

fn main() -> anyhow::Result<()> {
    for &c in CloneId::inventory() {
        let gens: Vec<String> = c.generators().iter().map(|g| g.describe()).collect();
        let sizes = clone_members(c, 3)?.counts();
        println!(
            "{:<8} {:<48} generators [{}]  members by arity {:?}",
            c.name(),
            c.description(),
            gens.join(", "),
            sizes
        );
    }
    println!("\n{} covering pairs; for example:", hasse_edges().len());
    for (lo, hi) in hasse_edges().iter().take(8) {
        println!("  {lo} ⋖ {hi}");
    }
    let (sc, m) = (CloneId::Sc, CloneId::M);
    println!(
        "\n{sc} ≤ {m}: {}; Mc ≤ {m}: {}",
        clone_leq(sc, m),
        clone_leq(CloneId::Mc, m)
    );
    Ok(())
}
