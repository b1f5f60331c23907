//! Weighted averaging and geometric aggregation, and the same average built
//! from scalar multiples and sums.
//!
//! Run with `cargo run --example aggregation`.

use gtsf::operators::{add_unchecked, scalar_mul, RadiusRule};
use gtsf::{gtsfwaa, gtsfwga, GtsfValue, Params, WeightVector};

fn main() -> Result<(), gtsf::Error> {
    let p = Params::with_t(2)?;
    let values = [
        GtsfValue::checked(0.6, 0.5, 0.4, 0.3, &p)?,
        GtsfValue::checked(0.5, 0.4, 0.3, 0.2, &p)?,
        GtsfValue::checked(0.8, 0.1, 0.2, 0.5, &p)?,
    ];
    let w = WeightVector::new(vec![0.5, 0.25, 0.25])?;

    let avg = gtsfwaa(&values, &w, &p)?;
    let geo = gtsfwga(&values, &w, &p)?;
    println!("weighted average   {avg:.4}");
    println!("weighted geometric {geo:.4}");

    let folded = values
        .iter()
        .zip(w.as_slice())
        .map(|(v, wi)| scalar_mul(*wi, v, &p).into_inner())
        .reduce(|acc, x| add_unchecked(&acc, &x, &p, RadiusRule::Min))
        .expect("non-empty");
    println!("folded grades      {:.4}, {:.4}, {:.4}", folded.phi(), folded.chi(), folded.psi());
    Ok(())
}
