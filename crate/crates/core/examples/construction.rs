//! Merge families of T-spherical evaluations into globular values.
//!
//! Run with `cargo run --example construction`.

use gtsf::io::{fixtures, parse_families};
use gtsf::make_gtsfv;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let doc = parse_families(fixtures::EXAMPLE1)?;
    let params = doc.params.params()?;
    println!("exponent t = {}", params.t());
    for (name, family) in doc.families()? {
        let g = make_gtsfv(&family, &params);
        println!("{name:>6}: {} members -> {g:.4}", family.len());
    }
    Ok(())
}
