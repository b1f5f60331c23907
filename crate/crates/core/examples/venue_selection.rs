//! The full group decision pipeline on the bundled venue problem: three
//! experts, four venues, five features.
//!
//! Run with `cargo run --example venue_selection`.

use gtsf::io::{emit_report, fixtures, order_line, parse_problem, Format};
use gtsf::mcgdm::solve_with_matrix;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let problem = parse_problem(fixtures::EXAMPLE4)?;
    let (matrix, report) = solve_with_matrix(&problem)?;
    print!("{}", emit_report(&report, &matrix, Format::Table));
    println!("best venue: {}", report.best());

    // the same problem with full-precision centroids
    let exact = problem.with_centroid_decimals(None);
    let (_, report) = solve_with_matrix(&exact)?;
    println!("unrounded centroids: {}", order_line(&report));
    Ok(())
}
