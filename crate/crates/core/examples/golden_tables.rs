//! Recomputing the reference tables of clonoids and stabilizers.

use clonoids::golden::{
    builtin_suite, verify_discriminator, verify_suite, GoldenSource, VerifyOptions, SUITES,
};

fn main() -> anyhow::Result<()> {
    let mut ok = true;
    for name in SUITES {
        let report = verify_suite(&builtin_suite(name)?, VerifyOptions::default())?;
        println!(
            "{} {name}: {}",
            if report.passed() { "PASS" } else { "FAIL" },
            report.summary()
        );
        for note in &report.notes {
            println!("     note: {note}");
        }
        for f in &report.findings {
            println!("     {f}");
        }
        ok &= report.passed();
    }
    let counts = verify_discriminator(&GoldenSource::Builtin.discriminator()?)?;
    println!(
        "{} discriminator counts: {} rows checked",
        if counts.findings.is_empty() {
            "PASS"
        } else {
            "FAIL"
        },
        counts.checked
    );
    ok &= counts.findings.is_empty();
    anyhow::ensure!(ok, "verification failed");
    Ok(())
}
