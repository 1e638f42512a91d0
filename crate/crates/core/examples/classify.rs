//! Minor classes: labels for the classified source clones and a minor poset
//! in DOT form.

use clonoids::minorder::{minor_poset, CLASSIFIED};
use clonoids::{class_label, BoolFn, CloneId};

fn main() -> anyhow::Result<()> {
    let fns = ["3:96", "maj", "iff", "λ0110", "λ10101", "0"];
    print!("{:<10}", "");
    for c in CLASSIFIED {
        print!("{:<14}", c.name());
    }
    println!();
    for text in fns {
        let f: BoolFn = text.parse()?;
        print!("{:<10}", text);
        for c in CLASSIFIED {
            print!("{:<14}", class_label(&f, c)?.to_string());
        }
        println!();
    }
    let p = minor_poset(CloneId::Tc, None)?;
    println!("\n{}", p.to_dot());
    let mc = minor_poset(CloneId::Mc, Some(2))?;
    println!("Mc classes up to chain index 2: {}", mc.names().join(" "));
    Ok(())
}
