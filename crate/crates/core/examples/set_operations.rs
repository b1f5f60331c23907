//! Complement, union, intersection and inclusion on two sets.
//!
//! Run with `cargo run --example set_operations`.

use gtsf::io::{fixtures, parse_sets};
use gtsf::operators::{complement, intersection, subset, union, RadiusRule};
use gtsf::GtsfSet;

fn show(title: &str, s: &GtsfSet) {
    let items: Vec<String> = s.iter().map(|(x, v)| format!("{x} {v:.2}")).collect();
    println!("{title:<10} {}", items.join("  "));
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let ((m_name, m), (n_name, n)) = parse_sets(fixtures::EXAMPLE2)?.pair()?;
    show(&m_name, &m);
    show(&n_name, &n);
    show("M^c", &complement(&m));
    for rule in [RadiusRule::Min, RadiusRule::Max] {
        show(&format!("M|N {rule:?}"), &union(&m, &n, rule)?);
        show(&format!("M&N {rule:?}"), &intersection(&m, &n, rule)?);
    }
    println!("{m_name} included in {n_name}: {}", subset(&m, &n)?);
    println!("{n_name} included in {m_name}: {}", subset(&n, &m)?);
    Ok(())
}
