//! A decision problem read from a flat CSV tensor, ranked with and without
//! criterion weights.
//!
//! Run with `cargo run --example csv_problem`.

use gtsf::io::{order_line, parse_csv_problem};
use gtsf::{solve, Params, WeightVector};

const CSV: &str = "\
expert,alternative,criterion,phi,chi,psi
alice,north,price,0.80,0.20,0.30
alice,north,quality,0.50,0.40,0.50
alice,south,price,0.55,0.30,0.50
alice,south,quality,0.85,0.20,0.25
bob,north,price,0.75,0.25,0.35
bob,north,quality,0.45,0.35,0.55
bob,south,price,0.60,0.30,0.45
bob,south,quality,0.80,0.25,0.30
";

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let problem = parse_csv_problem(CSV, Params::default())?;
    println!("plain:            {}", order_line(&solve(&problem)?));
    for w in [[0.8, 0.2], [0.2, 0.8]] {
        let weighted = problem.clone().with_criterion_weights(Some(WeightVector::new(w.to_vec())?))?;
        println!("price {:.1}, quality {:.1}: {}", w[0], w[1], order_line(&solve(&weighted)?));
    }
    Ok(())
}
