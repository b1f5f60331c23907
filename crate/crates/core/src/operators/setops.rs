use crate::error::Result;
use crate::value::{GtsfSet, GtsfValue, TsfValue, EQUALITY_TOLERANCE};

use super::RadiusRule;

/// Non-strict inclusion: every element of `a` has a radius and membership no
/// larger than `b`'s, and indeterminacy and non-membership no smaller.
///
/// The indeterminacy direction is the one under which `a` is included in
/// `a ∪ b` (both union and intersection keep the smaller indeterminacy).
pub fn subset(a: &GtsfSet, b: &GtsfSet) -> Result<bool> {
    Ok(a.zip(b)?.into_iter().all(|(_, x, y)| {
        x.radius <= y.radius && x.phi() <= y.phi() && x.chi() >= y.chi() && x.psi() >= y.psi()
    }))
}

/// All four components equal element-wise, within [`EQUALITY_TOLERANCE`].
pub fn equal(a: &GtsfSet, b: &GtsfSet) -> Result<bool> {
    Ok(a.zip(b)?
        .into_iter()
        .all(|(_, x, y)| x.approx_eq(y, EQUALITY_TOLERANCE)))
}

/// Membership and non-membership swapped; indeterminacy and radius kept.
pub fn complement(a: &GtsfSet) -> GtsfSet {
    a.map(GtsfValue::swapped)
}

fn combine(
    a: &GtsfSet,
    b: &GtsfSet,
    f: impl Fn(&GtsfValue, &GtsfValue) -> GtsfValue,
) -> Result<GtsfSet> {
    let pairs = a.zip(b)?;
    Ok(GtsfSet::from_index_map(
        pairs
            .into_iter()
            .map(|(label, x, y)| (label.to_owned(), f(x, y)))
            .collect(),
    ))
}

/// Larger membership, smaller indeterminacy, smaller non-membership.
pub fn union(a: &GtsfSet, b: &GtsfSet, rule: RadiusRule) -> Result<GtsfSet> {
    combine(a, b, |x, y| {
        GtsfValue::new(
            TsfValue::new(x.phi().max(y.phi()), x.chi().min(y.chi()), x.psi().min(y.psi())),
            rule.apply(x.radius, y.radius),
        )
    })
}

/// Smaller membership, smaller indeterminacy, larger non-membership.
///
/// Indeterminacy takes the minimum here as it does in [`union`].
pub fn intersection(a: &GtsfSet, b: &GtsfSet, rule: RadiusRule) -> Result<GtsfSet> {
    combine(a, b, |x, y| {
        GtsfValue::new(
            TsfValue::new(x.phi().min(y.phi()), x.chi().min(y.chi()), x.psi().max(y.psi())),
            rule.apply(x.radius, y.radius),
        )
    })
}
