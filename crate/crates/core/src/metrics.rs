//! Distances between sets and cosine similarity between values, all taken on
//! the t-th powers of the grades plus a separate radius term.

use crate::error::{Error, Result};
use crate::value::{GtsfSet, GtsfValue, Params};

fn power_diffs(a: &GtsfValue, b: &GtsfValue, params: &Params) -> [f64; 3] {
    let (pa, pb) = (a.center.powered(params), b.center.powered(params));
    [pa[0] - pb[0], pa[1] - pb[1], pa[2] - pb[2]]
}

fn abs_sum(d: [f64; 3]) -> f64 {
    d.iter().map(|x| x.abs()).sum()
}

fn sq_sum(d: [f64; 3]) -> f64 {
    d.iter().map(|x| x * x).sum()
}

/// `½(|Δr| + ½ Σ|Δgradeᵗ|)`.
pub fn hamming_element(a: &GtsfValue, b: &GtsfValue, params: &Params) -> f64 {
    0.5 * ((a.radius - b.radius).abs() + 0.5 * abs_sum(power_diffs(a, b, params)))
}

/// `½(|Δr| + √(½ Σ(Δgradeᵗ)²))`.
pub fn euclidean_element(a: &GtsfValue, b: &GtsfValue, params: &Params) -> f64 {
    0.5 * ((a.radius - b.radius).abs() + (0.5 * sq_sum(power_diffs(a, b, params))).sqrt())
}

fn paired<'a>(a: &'a GtsfSet, b: &'a GtsfSet) -> Result<Vec<(&'a str, &'a GtsfValue, &'a GtsfValue)>> {
    if a.is_empty() && b.is_empty() {
        return Err(Error::EmptyUniverse);
    }
    a.zip(b)
}

/// Normalized Hamming distance, `(1/2n) Σ(|Δr| + ½ Σ|Δgradeᵗ|)`.
pub fn hamming(a: &GtsfSet, b: &GtsfSet, params: &Params) -> Result<f64> {
    let pairs = paired(a, b)?;
    let n = pairs.len() as f64;
    let total: f64 = pairs
        .iter()
        .map(|(_, x, y)| (x.radius - y.radius).abs() + 0.5 * abs_sum(power_diffs(x, y, params)))
        .sum();
    Ok(total / (2.0 * n))
}

/// Normalized Euclidean distance, `½((1/n) Σ|Δr| + √((1/2n) ΣΣ(Δgradeᵗ)²))`.
///
/// The radius term is averaged outside the root, unlike the grades.
pub fn euclidean(a: &GtsfSet, b: &GtsfSet, params: &Params) -> Result<f64> {
    let pairs = paired(a, b)?;
    let n = pairs.len() as f64;
    let radial: f64 = pairs.iter().map(|(_, x, y)| (x.radius - y.radius).abs()).sum();
    let squared: f64 = pairs.iter().map(|(_, x, y)| sq_sum(power_diffs(x, y, params))).sum();
    Ok(0.5 * (radial / n + (squared / (2.0 * n)).sqrt()))
}

/// `½(cos∠(aᵗ, bᵗ) + 1 − |Δr|)` where `aᵗ` is the vector of powered grades.
///
/// Fails with [`Error::DegenerateValue`] if either center is `(0, 0, 0)`.
pub fn cosine_sm(a: &GtsfValue, b: &GtsfValue, params: &Params) -> Result<f64> {
    let (pa, pb) = (a.center.powered(params), b.center.powered(params));
    let norm = |v: [f64; 3]| sq_sum(v).sqrt();
    let (na, nb) = (norm(pa), norm(pb));
    if na == 0.0 || nb == 0.0 {
        return Err(Error::DegenerateValue);
    }
    let dot = pa[0] * pb[0] + pa[1] * pb[1] + pa[2] * pb[2];
    // rounding can push a self-cosine a hair over 1
    let cos = if a.center == b.center { 1.0 } else { (dot / (na * nb)).min(1.0) };
    Ok(0.5 * (cos + 1.0 - (a.radius - b.radius).abs()))
}

/// Mean cosine similarity of each criterion value against `⟨1, 0, 0; 1⟩`.
pub fn ideal_similarity(alt: &GtsfSet, params: &Params) -> Result<f64> {
    if alt.is_empty() {
        return Err(Error::EmptyUniverse);
    }
    let mut total = 0.0;
    for (label, v) in alt {
        total += cosine_sm(v, &GtsfValue::IDEAL, params).map_err(|e| e.at(format!("criterion {label:?}")))?;
    }
    Ok(total / alt.len() as f64)
}

/// Weighted variant of [`ideal_similarity`]: `weights[q]` multiplies the
/// term for the q-th criterion in insertion order. Weights must already be
/// normalized; see [`crate::aggregate::WeightVector`].
pub fn weighted_ideal_similarity(alt: &GtsfSet, weights: &[f64], params: &Params) -> Result<f64> {
    if alt.is_empty() {
        return Err(Error::EmptyUniverse);
    }
    if weights.len() != alt.len() {
        return Err(Error::LengthMismatch {
            values: alt.len(),
            weights: weights.len(),
        });
    }
    let mut total = 0.0;
    for ((label, v), w) in alt.iter().zip(weights) {
        total += w * cosine_sm(v, &GtsfValue::IDEAL, params).map_err(|e| e.at(format!("criterion {label:?}")))?;
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use proptest::prelude::*;

    fn t(e: u32) -> Params {
        Params::with_t(e).unwrap()
    }

    const FAR_A: GtsfValue = GtsfValue::from_parts(1.0, 0.0, 0.0, 1.0);
    const FAR_B: GtsfValue = GtsfValue::from_parts(0.0, 0.0, 1.0, 0.0);

    fn table_sets(r3: f64) -> (GtsfSet, GtsfSet) {
        let a = GtsfSet::from_elements([
            ("x1", GtsfValue::from_parts(0.7, 0.34, 0.48, 0.1)),
            ("x2", GtsfValue::from_parts(0.7, 0.37, 0.51, 0.23)),
            ("x3", GtsfValue::from_parts(0.72, 0.42, 0.56, r3)),
        ])
        .unwrap();
        let b = GtsfSet::from_elements([
            ("x1", GtsfValue::from_parts(0.66, 0.36, 0.63, 0.1)),
            ("x2", GtsfValue::from_parts(0.68, 0.38, 0.55, 0.07)),
            ("x3", GtsfValue::from_parts(0.71, 0.35, 0.53, 0.06)),
        ])
        .unwrap();
        (a, b)
    }

    #[test]
    fn element_distances() {
        for e in 1..=5 {
            assert_eq!(hamming_element(&FAR_A, &FAR_B, &t(e)), 1.0);
            assert_eq!(euclidean_element(&FAR_A, &FAR_B, &t(e)), 1.0);
            assert_eq!(hamming_element(&FAR_A, &FAR_A, &t(e)), 0.0);
        }
        let (a, b) = table_sets(0.17);
        let (x, y) = (a.get("x1").unwrap(), b.get("x1").unwrap());
        assert_abs_diff_eq!(hamming_element(x, y, &t(3)), 0.0505778, epsilon = 1e-6);
        assert_abs_diff_eq!(euclidean_element(x, y, &t(3)), 0.05313, epsilon = 1e-5);
    }

    #[test]
    fn set_distances_on_table_data() {
        for (r3, h, e) in [(0.17, 0.07351, 0.07822), (0.15, 0.07018, 0.07488)] {
            let (a, b) = table_sets(r3);
            let hd = hamming(&a, &b, &t(3)).unwrap();
            assert_abs_diff_eq!(hd, h, epsilon = 1e-5);
            assert!((hd - 0.07).abs() <= 0.01);
            assert_abs_diff_eq!(euclidean(&a, &b, &t(3)).unwrap(), e, epsilon = 1e-5);
            assert_eq!(hamming(&b, &a, &t(3)).unwrap(), hd);
        }
    }

    #[test]
    fn set_distance_errors() {
        let (a, _) = table_sets(0.17);
        let empty = GtsfSet::new();
        assert_eq!(hamming(&empty, &empty, &t(2)), Err(Error::EmptyUniverse));
        assert_eq!(euclidean(&empty, &empty, &t(2)), Err(Error::EmptyUniverse));
        assert!(matches!(hamming(&a, &empty, &t(2)), Err(Error::UniverseMismatch(_))));
    }

    #[test]
    fn singleton_set_reduces_to_element() {
        let a = GtsfSet::from_elements([("x", FAR_A)]).unwrap();
        let v = GtsfValue::from_parts(0.3, 0.2, 0.5, 0.4);
        let b = GtsfSet::from_elements([("x", v)]).unwrap();
        assert_abs_diff_eq!(hamming(&a, &b, &t(2)).unwrap(), hamming_element(&FAR_A, &v, &t(2)), epsilon = 1e-15);
        assert_abs_diff_eq!(euclidean(&a, &b, &t(2)).unwrap(), euclidean_element(&FAR_A, &v, &t(2)), epsilon = 1e-15);
    }

    #[test]
    fn cosine_cases() {
        let a = GtsfValue::from_parts(0.9, 0.21, 0.44, 0.07);
        assert_abs_diff_eq!(cosine_sm(&a, &GtsfValue::IDEAL, &t(3)).unwrap(), 0.53158, epsilon = 1e-5);
        assert_eq!(cosine_sm(&a, &a, &t(3)).unwrap(), 1.0);
        let orth = GtsfValue::from_parts(0.0, 0.4, 0.5, 1.0);
        assert_eq!(cosine_sm(&GtsfValue::IDEAL, &orth, &t(2)).unwrap(), 0.5);
        let zero = GtsfValue::from_parts(0.0, 0.0, 0.0, 0.5);
        assert_eq!(cosine_sm(&zero, &a, &t(2)), Err(Error::DegenerateValue));
        assert_eq!(cosine_sm(&a, &zero, &t(2)), Err(Error::DegenerateValue));
    }

    #[test]
    fn ideal_similarity_cases() {
        let ideal = GtsfSet::from_elements((0..4).map(|q| (format!("f{q}"), GtsfValue::IDEAL))).unwrap();
        assert_eq!(ideal_similarity(&ideal, &t(3)).unwrap(), 1.0);
        assert_eq!(ideal_similarity(&GtsfSet::new(), &t(3)), Err(Error::EmptyUniverse));
        let with_zero = GtsfSet::from_elements([
            ("f1", GtsfValue::IDEAL),
            ("f2", GtsfValue::from_parts(0.0, 0.0, 0.0, 0.2)),
        ])
        .unwrap();
        let err = ideal_similarity(&with_zero, &t(3)).unwrap_err();
        assert_eq!(err.root(), &Error::DegenerateValue);
        assert!(err.to_string().contains("f2"));
    }

    #[test]
    fn weighted_similarity_with_equal_weights_matches_plain() {
        let (a, _) = table_sets(0.17);
        let plain = ideal_similarity(&a, &t(3)).unwrap();
        let w = [1.0 / 3.0; 3];
        assert_abs_diff_eq!(weighted_ideal_similarity(&a, &w, &t(3)).unwrap(), plain, epsilon = 1e-12);
        assert!(matches!(
            weighted_ideal_similarity(&a, &[0.5, 0.5], &t(3)),
            Err(Error::LengthMismatch { values: 3, weights: 2 })
        ));
    }

    fn valid(e: u32) -> impl Strategy<Value = GtsfValue> {
        (0.0..1.0f64, 0.0..1.0f64, 0.0..1.0f64, 0.0..1.0f64, 0.0..=1.0f64).prop_map(
            move |(a, b, c, slack, r)| {
                let p = t(e);
                let total = a + b + c + slack;
                if total == 0.0 {
                    return GtsfValue::from_parts(0.0, 0.0, 0.0, r);
                }
                GtsfValue::from_parts(p.root(a / total), p.root(b / total), p.root(c / total), r)
            },
        )
    }

    fn sets(e: u32) -> impl Strategy<Value = (GtsfSet, GtsfSet)> {
        (1usize..6).prop_flat_map(move |n| {
            let build = |xs: Vec<GtsfValue>| {
                GtsfSet::from_elements(xs.into_iter().enumerate().map(|(i, v)| (format!("x{i}"), v))).unwrap()
            };
            (
                prop::collection::vec(valid(e), n).prop_map(build),
                prop::collection::vec(valid(e), n).prop_map(build),
            )
        })
    }

    proptest! {
        #[test]
        fn similarity_axioms((e, a, b) in (1u32..=6).prop_flat_map(|e| (Just(e), valid(e), valid(e)))) {
            let p = t(e);
            if let (Ok(ab), Ok(ba)) = (cosine_sm(&a, &b, &p), cosine_sm(&b, &a, &p)) {
                prop_assert!((0.0..=1.0).contains(&ab));
                prop_assert_eq!(ab, ba);
                prop_assert_eq!(cosine_sm(&a, &a, &p).unwrap(), 1.0);
            }
        }

        #[test]
        fn distance_axioms((e, (a, b)) in (1u32..=6).prop_flat_map(|e| (Just(e), sets(e)))) {
            let p = t(e);
            for f in [hamming, euclidean] {
                let d = f(&a, &b, &p).unwrap();
                prop_assert!((0.0..=1.0).contains(&d));
                prop_assert_eq!(d, f(&b, &a, &p).unwrap());
                prop_assert_eq!(f(&a, &a, &p).unwrap(), 0.0);
            }
        }

        #[test]
        fn ideal_similarity_is_half_mean_of_normalized_membership_plus_radius(
            (e, (a, _b)) in (1u32..=6).prop_flat_map(|e| (Just(e), sets(e)))
        ) {
            let p = t(e);
            let direct: Option<f64> = a.values().map(|v| {
                let g = v.center.powered(&p);
                let norm = (g[0] * g[0] + g[1] * g[1] + g[2] * g[2]).sqrt();
                (norm > 0.0).then(|| g[0] / norm + v.radius)
            }).sum::<Option<f64>>().map(|s| 0.5 * s / a.len() as f64);
            match (direct, ideal_similarity(&a, &p)) {
                (Some(x), Ok(y)) => prop_assert!((x - y).abs() < 1e-12),
                (None, Err(_)) => {}
                (x, y) => prop_assert!(false, "{:?} vs {:?}", x, y),
            }
        }
    }
}
