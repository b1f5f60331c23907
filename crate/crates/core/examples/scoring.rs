//! Score, accuracy and the two-stage comparison, including how the attitude
//! parameter brings the radius into play.
//!
//! Run with `cargo run --example scoring`.

use gtsf::ranking::{accuracy, compare, score};
use gtsf::{GtsfValue, Params};

fn main() -> Result<(), gtsf::Error> {
    let wide = GtsfValue::checked(0.5, 0.2, 0.2, 0.9, &Params::with_t(2)?)?;
    let narrow = GtsfValue::checked(0.5, 0.2, 0.2, 0.1, &Params::with_t(2)?)?;

    for sigma in [0.2, 0.5, 0.8] {
        let p = Params::new(2, sigma)?;
        let o = compare(&wide, &narrow, &p);
        println!(
            "sigma {sigma}: score {:.3} vs {:.3} -> {:?} ({:?})",
            score(&wide, &p),
            score(&narrow, &p),
            o.relation,
            o.decided_by
        );
    }

    // equal scores, split by accuracy
    let p = Params::with_t(2)?;
    let a = GtsfValue::from_parts(0.3, 0.0, 0.3, 0.1);
    let b = GtsfValue::from_parts(0.5, 0.0, 0.5, 0.7);
    println!("accuracy {:.2} vs {:.2}: {:?}", accuracy(&a, &p), accuracy(&b, &p), compare(&a, &b, &p));
    Ok(())
}
