use crate::error::Result;
use crate::value::{validate_gtsfv, GtsfValue, Params, TsfValue};

use super::RadiusRule;

/// Probabilistic sum of t-th powers: `(x^t + y^t - x^t y^t)^(1/t)`.
fn t_conorm(x: f64, y: f64, params: &Params) -> f64 {
    let (xt, yt) = (params.pow(x), params.pow(y));
    params.root(xt + yt - xt * yt)
}

pub fn add(a: &GtsfValue, b: &GtsfValue, params: &Params, rule: RadiusRule) -> Result<GtsfValue> {
    validate_gtsfv(a, params)?;
    validate_gtsfv(b, params)?;
    Ok(add_unchecked(a, b, params, rule))
}

/// [`add`] without validating the operands, for chaining [`scalar_mul`]
/// terms that may have left the valid region (`w < 1`).
pub fn add_unchecked(a: &GtsfValue, b: &GtsfValue, params: &Params, rule: RadiusRule) -> GtsfValue {
    GtsfValue::new(
        TsfValue::new(
            t_conorm(a.phi(), b.phi(), params),
            a.chi() * b.chi(),
            a.psi() * b.psi(),
        ),
        rule.apply(a.radius, b.radius),
    )
}

/// Dual of [`add`] under exchanging membership and non-membership.
pub fn mul(a: &GtsfValue, b: &GtsfValue, params: &Params, rule: RadiusRule) -> Result<GtsfValue> {
    validate_gtsfv(a, params)?;
    validate_gtsfv(b, params)?;
    Ok(GtsfValue::new(
        TsfValue::new(
            a.phi() * b.phi(),
            a.chi() * b.chi(),
            t_conorm(a.psi(), b.psi(), params),
        ),
        rule.apply(a.radius, b.radius),
    ))
}

/// Result of a scalar operation, flagged when it left the valid region.
///
/// A zero weight gives `chi = psi = r = 1`, which breaks the power-sum
/// constraint; the value is still returned but `normal` is false.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Scaled {
    pub value: GtsfValue,
    pub normal: bool,
}

impl Scaled {
    fn new(value: GtsfValue, params: &Params) -> Self {
        Scaled {
            value,
            normal: validate_gtsfv(&value, params).is_ok(),
        }
    }

    pub fn into_inner(self) -> GtsfValue {
        self.value
    }
}

/// `w · a`. The radius scales as `r^w`, which differs from repeated
/// [`add`] (that keeps `min`/`max` of the radii).
///
/// # Panics
/// If `w` is negative or NaN.
pub fn scalar_mul(w: f64, a: &GtsfValue, params: &Params) -> Scaled {
    assert!(w >= 0.0, "scalar weight must be non-negative, got {w}");
    let value = GtsfValue::new(
        TsfValue::new(
            params.root(1.0 - (1.0 - params.pow(a.phi())).powf(w)),
            a.chi().powf(w),
            a.psi().powf(w),
        ),
        a.radius.powf(w),
    );
    Scaled::new(value, params)
}

/// `a^w`, the geometric counterpart of [`scalar_mul`].
///
/// # Panics
/// If `w` is negative or NaN.
pub fn scalar_pow(a: &GtsfValue, w: f64, params: &Params) -> Scaled {
    assert!(w >= 0.0, "scalar exponent must be non-negative, got {w}");
    let value = GtsfValue::new(
        TsfValue::new(
            a.phi().powf(w),
            a.chi().powf(w),
            params.root(1.0 - (1.0 - params.pow(a.psi())).powf(w)),
        ),
        a.radius.powf(w),
    );
    Scaled::new(value, params)
}
