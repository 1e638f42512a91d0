//! Labeled posets: the cube of a function, its longest alternating chain and
//! homomorphisms between alternating chains.

use clonoids::kposet::{
    chain_hom_rule, collapse_to_chain, fn_poset, hom_exists, longest_alternating_chain,
};
use clonoids::{BoolFn, HomMode, LabeledPoset};

fn main() -> anyhow::Result<()> {
    let f = BoolFn::lambda_str("0110")?;
    let cube = fn_poset(&f)?;
    let chain = longest_alternating_chain(&cube);
    println!(
        "{} on the 3-cube: longest alternating chain {:?}, labels {}",
        f.describe(),
        chain,
        cube.label_string(&chain)
    );
    let (c, h) = collapse_to_chain(&cube)?;
    println!("collapses onto a chain of {} elements via {h:?}", c.len());

    println!("\nhomomorphisms C^k_0 → C^l_0 (rows k, columns l):");
    for mode in HomMode::ALL {
        println!("{mode:?}");
        for k in 0..=4 {
            let row: String = (0..=4)
                .map(|l| {
                    let p = LabeledPoset::chain(k, false).unwrap();
                    let q = LabeledPoset::chain(l, false).unwrap();
                    let found = hom_exists(&p, &q, mode).unwrap().is_some();
                    assert_eq!(found, chain_hom_rule(k, false, l, false, mode));
                    if found {
                        '■'
                    } else {
                        '·'
                    }
                })
                .collect();
            println!("  {k} {row}");
        }
    }
    Ok(())
}
