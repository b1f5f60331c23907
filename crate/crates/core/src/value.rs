//! Domain values: T-spherical triples, their globular (sphere-bounded) form,
//! universe-indexed sets, and the parameter context every operation takes.

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Grade, Result};

/// Slack allowed on the power-sum constraint to absorb floating-point noise.
pub const CONSTRAINT_TOLERANCE: f64 = 1e-9;

/// Tolerance for component-wise equality of values.
pub const EQUALITY_TOLERANCE: f64 = 1e-9;

/// Exponent `t` of the power-sum constraint and the score attitude `sigma`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawParams", into = "RawParams")]
pub struct Params {
    t: u32,
    sigma: f64,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawParams {
    t: u32,
    #[serde(default = "default_sigma")]
    sigma: f64,
}

fn default_sigma() -> f64 {
    Params::DEFAULT_SIGMA
}

impl TryFrom<RawParams> for Params {
    type Error = Error;
    fn try_from(raw: RawParams) -> Result<Self> {
        Params::new(raw.t, raw.sigma)
    }
}

impl From<Params> for RawParams {
    fn from(p: Params) -> Self {
        RawParams {
            t: p.t,
            sigma: p.sigma,
        }
    }
}

impl Params {
    pub const DEFAULT_T: u32 = 3;
    pub const DEFAULT_SIGMA: f64 = 0.5;

    pub fn new(t: u32, sigma: f64) -> Result<Self> {
        if t == 0 {
            return Err(Error::InvalidParams("t must be a positive integer".into()));
        }
        if !(0.0..=1.0).contains(&sigma) {
            return Err(Error::InvalidParams(format!("sigma {sigma} is outside [0, 1]")));
        }
        Ok(Params { t, sigma })
    }

    /// Params with the given exponent and the neutral attitude `sigma = 0.5`.
    pub fn with_t(t: u32) -> Result<Self> {
        Params::new(t, Self::DEFAULT_SIGMA)
    }

    pub fn t(&self) -> u32 {
        self.t
    }

    pub fn sigma(&self) -> f64 {
        self.sigma
    }

    /// Same sigma, different exponent.
    pub fn reexponent(&self, t: u32) -> Result<Self> {
        Params::new(t, self.sigma)
    }

    /// `x^t`.
    #[inline]
    pub fn pow(&self, x: f64) -> f64 {
        x.powi(self.t as i32)
    }

    /// `x^(1/t)`, with tiny negative round-off mapped to zero.
    #[inline]
    pub fn root(&self, x: f64) -> f64 {
        let x = x.max(0.0);
        match self.t {
            1 => x,
            2 => x.sqrt(),
            3 => x.cbrt(),
            t => x.powf(1.0 / f64::from(t)),
        }
    }
}

impl Default for Params {
    fn default() -> Self {
        Params {
            t: Self::DEFAULT_T,
            sigma: Self::DEFAULT_SIGMA,
        }
    }
}

/// Degrees of membership, indeterminacy and non-membership.
///
/// Construction does not check anything; the power-sum constraint depends on
/// the exponent in force, so validity is checked against [`Params`] through
/// [`validate_tsfv`] or [`TsfValue::checked`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TsfValue {
    pub phi: f64,
    pub chi: f64,
    pub psi: f64,
}

impl TsfValue {
    pub const fn new(phi: f64, chi: f64, psi: f64) -> Self {
        TsfValue { phi, chi, psi }
    }

    pub fn checked(phi: f64, chi: f64, psi: f64, params: &Params) -> Result<Self> {
        let v = TsfValue::new(phi, chi, psi);
        validate_tsfv(&v, params)?;
        Ok(v)
    }

    /// `phi^t + chi^t + psi^t`.
    pub fn power_sum(&self, params: &Params) -> f64 {
        params.pow(self.phi) + params.pow(self.chi) + params.pow(self.psi)
    }

    /// The three grades raised to the t-th power.
    pub fn powered(&self, params: &Params) -> [f64; 3] {
        [
            params.pow(self.phi),
            params.pow(self.chi),
            params.pow(self.psi),
        ]
    }

    /// Membership and non-membership exchanged.
    pub fn swapped(&self) -> Self {
        TsfValue::new(self.psi, self.chi, self.phi)
    }

    pub fn with_radius(self, radius: f64) -> GtsfValue {
        GtsfValue::new(self, radius)
    }

    pub(crate) fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        (self.phi - other.phi).abs() <= tol
            && (self.chi - other.chi).abs() <= tol
            && (self.psi - other.psi).abs() <= tol
    }
}

/// A T-spherical center with a sphere radius.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GtsfValue {
    pub center: TsfValue,
    pub radius: f64,
}

impl GtsfValue {
    pub const fn new(center: TsfValue, radius: f64) -> Self {
        GtsfValue { center, radius }
    }

    pub const fn from_parts(phi: f64, chi: f64, psi: f64, radius: f64) -> Self {
        GtsfValue::new(TsfValue::new(phi, chi, psi), radius)
    }

    pub fn checked(phi: f64, chi: f64, psi: f64, radius: f64, params: &Params) -> Result<Self> {
        let v = GtsfValue::from_parts(phi, chi, psi, radius);
        validate_gtsfv(&v, params)?;
        Ok(v)
    }

    /// `<1, 0, 0; 1>`, the best attainable value.
    pub const IDEAL: GtsfValue = GtsfValue::from_parts(1.0, 0.0, 0.0, 1.0);

    pub fn phi(&self) -> f64 {
        self.center.phi
    }

    pub fn chi(&self) -> f64 {
        self.center.chi
    }

    pub fn psi(&self) -> f64 {
        self.center.psi
    }

    pub fn swapped(&self) -> Self {
        GtsfValue::new(self.center.swapped(), self.radius)
    }

    pub fn is_valid(&self, params: &Params) -> bool {
        validate_gtsfv(self, params).is_ok()
    }

    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.center.approx_eq(&other.center, tol) && (self.radius - other.radius).abs() <= tol
    }
}

impl std::fmt::Display for GtsfValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match f.precision() {
            Some(p) => write!(
                f,
                "<{:.p$}, {:.p$}, {:.p$}; {:.p$}>",
                self.center.phi, self.center.chi, self.center.psi, self.radius
            ),
            None => write!(
                f,
                "<{}, {}, {}; {}>",
                self.center.phi, self.center.chi, self.center.psi, self.radius
            ),
        }
    }
}

pub fn validate_tsfv(v: &TsfValue, params: &Params) -> Result<()> {
    let power_sum = v.power_sum(params);
    for (grade, value) in [
        (Grade::Membership, v.phi),
        (Grade::Indeterminacy, v.chi),
        (Grade::NonMembership, v.psi),
    ] {
        if !(0.0..=1.0).contains(&value) {
            return Err(Error::ComponentOutOfRange {
                grade,
                value,
                power_sum,
            });
        }
    }
    if power_sum > 1.0 + CONSTRAINT_TOLERANCE {
        return Err(Error::ConstraintViolated {
            phi: v.phi,
            chi: v.chi,
            psi: v.psi,
            t: params.t(),
            power_sum,
        });
    }
    Ok(())
}

pub fn validate_gtsfv(v: &GtsfValue, params: &Params) -> Result<()> {
    validate_tsfv(&v.center, params)?;
    if !(0.0..=1.0).contains(&v.radius) {
        return Err(Error::RadiusOutOfRange(v.radius));
    }
    Ok(())
}

/// A universe-indexed collection of values, each element with its own radius.
/// Iteration follows insertion order.
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct GtsfSet {
    elements: IndexMap<String, GtsfValue>,
}

impl GtsfSet {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a set, rejecting repeated labels.
    pub fn from_elements<L, I>(elements: I) -> Result<Self>
    where
        L: Into<String>,
        I: IntoIterator<Item = (L, GtsfValue)>,
    {
        let mut set = GtsfSet::new();
        for (label, value) in elements {
            set.insert(label, value)?;
        }
        Ok(set)
    }

    pub fn insert(&mut self, label: impl Into<String>, value: GtsfValue) -> Result<()> {
        let label = label.into();
        if self.elements.contains_key(&label) {
            return Err(Error::UniverseMismatch(format!("duplicate label {label:?}")));
        }
        self.elements.insert(label, value);
        Ok(())
    }

    pub fn get(&self, label: &str) -> Option<&GtsfValue> {
        self.elements.get(label)
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn labels(&self) -> impl Iterator<Item = &str> {
        self.elements.keys().map(String::as_str)
    }

    pub fn values(&self) -> impl Iterator<Item = &GtsfValue> {
        self.elements.values()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &GtsfValue)> {
        self.elements.iter().map(|(k, v)| (k.as_str(), v))
    }

    /// Applies `f` to every value, keeping labels.
    pub fn map(&self, mut f: impl FnMut(&GtsfValue) -> GtsfValue) -> Self {
        GtsfSet {
            elements: self
                .elements
                .iter()
                .map(|(k, v)| (k.clone(), f(v)))
                .collect(),
        }
    }

    pub fn validate(&self, params: &Params) -> Result<()> {
        for (label, value) in &self.elements {
            validate_gtsfv(value, params).map_err(|e| e.at(label.clone()))?;
        }
        Ok(())
    }

    /// Pairs the values of `self` and `other` by label, in `self`'s order.
    pub(crate) fn zip<'a>(&'a self, other: &'a GtsfSet) -> Result<Vec<(&'a str, &'a GtsfValue, &'a GtsfValue)>> {
        if self.len() != other.len() {
            return Err(Error::UniverseMismatch(format!(
                "{} elements vs {}",
                self.len(),
                other.len()
            )));
        }
        self.iter()
            .map(|(label, a)| match other.get(label) {
                Some(b) => Ok((label, a, b)),
                None => Err(Error::UniverseMismatch(format!(
                    "label {label:?} missing from second set"
                ))),
            })
            .collect()
    }

    pub(crate) fn from_index_map(elements: IndexMap<String, GtsfValue>) -> Self {
        GtsfSet { elements }
    }
}

impl<'a> IntoIterator for &'a GtsfSet {
    type Item = (&'a String, &'a GtsfValue);
    type IntoIter = indexmap::map::Iter<'a, String, GtsfValue>;
    fn into_iter(self) -> Self::IntoIter {
        self.elements.iter()
    }
}
