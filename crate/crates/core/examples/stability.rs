//! Stability checks with counterexamples, and the largest stabilizing clones
//! of a class.

use clonoids::clonoid_engine::{check_left_stable, check_right_stable, largest_stabilizing, Probe};
use clonoids::{ClassExpr, CloneId};

fn main() -> anyhow::Result<()> {
    let k = Probe::from_expr(&ClassExpr::parse("A<=2_11")?, 3)?;
    for c in [CloneId::Mc, CloneId::Lc, CloneId::Sc] {
        let v = check_right_stable(&k, c)?;
        match &v.witness {
            None => println!("K·{c} ⊆ K"),
            Some(w) => println!("K·{c} ⊄ K: {w}"),
        }
    }
    for c in [CloneId::Vc, CloneId::LambdaC] {
        let v = check_left_stable(&k, c)?;
        match &v.witness {
            None => println!("{c}·K ⊆ K"),
            Some(w) => println!("{c}·K ⊄ K: {w}"),
        }
    }
    for text in ["Smaj_11 | Refl_11", "Eq", "M | ~M | II"] {
        let st = largest_stabilizing(&Probe::from_expr(&ClassExpr::parse(text)?, 3)?)?;
        println!("{text:<20} right {:<6} left {}", st.right, st.left);
    }
    Ok(())
}
