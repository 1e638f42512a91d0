//! Boolean functions: text forms, λ-vectors, alternation and ∗-composition.

use clonoids::{BoolFn, Rank};

fn main() -> anyhow::Result<()> {
    let xor3: BoolFn = "3:96".parse()?;
    let maj: BoolFn = "maj".parse()?;
    let f: BoolFn = "λ10101".parse()?;
    for g in [xor3, maj, f, BoolFn::implies()] {
        let r = g.range2();
        println!(
            "{:<8} {:<10} alt {}  essential arity {}  monotone {:<5}  range² {r}",
            g.to_string(),
            g.describe(),
            g.alt(),
            g.essential_arity(),
            g.is_monotone(),
        );
    }
    // substituting x1 + x2 + x3 into the first argument of λ101
    let star = BoolFn::lambda_str("101")?.star(&xor3)?;
    println!("λ101 ∗ +₃ = {}", star.describe());
    // the depth map of implication over its four input tuples
    println!("depths of →: {:?}", BoolFn::implies().alternation().depth);
    let or = BoolFn::or();
    println!(
        "∨ is 1-separating of rank 2: {}",
        or.is_separating(true, Rank::Fin(2))
    );
    println!(
        "∨ is 0-separating of every rank: {}",
        or.is_separating(false, Rank::Inf)
    );
    Ok(())
}
