//! Set distances against exact rational evaluation, on grades with two
//! decimals so the inputs are exact rationals too.

use gtsf::metrics::{euclidean, hamming};
use gtsf::{GtsfSet, GtsfValue, Params};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Hundredths = [u32; 4];

fn random_element(rng: &mut ChaCha8Rng, t: u32) -> Hundredths {
    loop {
        let e = [rng.gen_range(0..=100), rng.gen_range(0..=100), rng.gen_range(0..=100), rng.gen_range(0..=100)];
        let sum: u64 = e[..3].iter().map(|&g| (g as u64).pow(t)).sum();
        if sum <= 100u64.pow(t) {
            return e;
        }
    }
}

fn to_set(rows: &[Hundredths]) -> GtsfSet {
    GtsfSet::from_elements(rows.iter().enumerate().map(|(i, e)| {
        let g = e.map(|x| x as f64 / 100.0);
        (format!("x{i}"), GtsfValue::from_parts(g[0], g[1], g[2], g[3]))
    }))
    .unwrap()
}

fn q(hundredths: u32) -> BigRational {
    BigRational::new(BigInt::from(hundredths), BigInt::from(100))
}

fn int(n: usize) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Returns (hamming, euclidean) with everything but the final square root exact.
fn oracle(a: &[Hundredths], b: &[Hundredths], t: i32) -> (f64, f64) {
    let n = int(a.len());
    let half = BigRational::new(BigInt::from(1), BigInt::from(2));
    let (mut radial, mut abs_grades, mut sq_grades) = (BigRational::zero(), BigRational::zero(), BigRational::zero());
    for (x, y) in a.iter().zip(b) {
        radial += (q(x[3]) - q(y[3])).abs();
        for k in 0..3 {
            let d = q(x[k]).pow(t) - q(y[k]).pow(t);
            abs_grades += d.abs();
            sq_grades += d.clone() * d;
        }
    }
    let two_n = int(2) * n.clone();
    let h = (radial.clone() + half.clone() * abs_grades) / two_n.clone();
    let root = (sq_grades / two_n).to_f64().unwrap().sqrt();
    let e = 0.5 * ((radial / n).to_f64().unwrap() + root);
    (h.to_f64().unwrap(), e)
}

#[test]
fn distances_match_exact_evaluation() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..500 {
        let t = rng.gen_range(1..=5);
        let n = rng.gen_range(1..=6);
        let a: Vec<Hundredths> = (0..n).map(|_| random_element(&mut rng, t)).collect();
        let b: Vec<Hundredths> = (0..n).map(|_| random_element(&mut rng, t)).collect();
        let p = Params::with_t(t).unwrap();
        let (h, e) = oracle(&a, &b, t as i32);
        let (sa, sb) = (to_set(&a), to_set(&b));
        assert!((hamming(&sa, &sb, &p).unwrap() - h).abs() < 1e-12, "t = {t}: {a:?} {b:?}");
        assert!((euclidean(&sa, &sb, &p).unwrap() - e).abs() < 1e-12, "t = {t}: {a:?} {b:?}");
    }
}

#[test]
fn bundled_distance_example() {
    let a = [[70, 34, 48, 10], [70, 37, 51, 23], [72, 42, 56, 17]];
    let b = [[66, 36, 63, 10], [68, 38, 55, 7], [71, 35, 53, 6]];
    let (h, e) = oracle(&a, &b, 3);
    let p = Params::with_t(3).unwrap();
    assert!((hamming(&to_set(&a), &to_set(&b), &p).unwrap() - h).abs() < 1e-12);
    assert!((euclidean(&to_set(&a), &to_set(&b), &p).unwrap() - e).abs() < 1e-12);
    assert!((h - 0.07351).abs() < 1e-5 && (e - 0.07822).abs() < 1e-5);
}
