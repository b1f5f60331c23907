//! Hamming and Euclidean distances between two sets.
//!
//! Run with `cargo run --example distances`.

use gtsf::io::{fixtures, parse_sets};
use gtsf::metrics::{euclidean, euclidean_element, hamming, hamming_element};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let doc = parse_sets(fixtures::EXAMPLE3)?;
    let params = doc.params.params()?;
    let ((_, a), (_, b)) = doc.pair()?;

    println!("element  hamming  euclidean");
    for (x, va) in a.iter() {
        let vb = b.get(x).expect("same universe");
        println!(
            "{x:<7}  {:.4}   {:.4}",
            hamming_element(va, vb, &params),
            euclidean_element(va, vb, &params)
        );
    }
    println!("normalized hamming   {:.4}", hamming(&a, &b, &params)?);
    println!("normalized euclidean {:.4}", euclidean(&a, &b, &params)?);
    Ok(())
}
