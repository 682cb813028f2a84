use num_complex::Complex64;
use serde::Serialize;

use crate::par::Execution;

/// Tunables of the numeric evaluators.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EvalConfig {
    /// Euler–Maclaurin: number of directly summed terms `N_0`.
    pub em_terms: usize,
    /// Euler–Maclaurin: number of Bernoulli corrections `M_B`.
    pub em_bernoulli_order: usize,
    /// Mellin–Barnes truncation `M`; `None` picks the smallest admissible one.
    pub mb_m: Option<usize>,
    /// Offset of the Mellin–Barnes line `Re z = M - epsilon`.
    pub mb_epsilon: f64,
    /// Initial half-length `T` of the truncated Mellin–Barnes line.
    pub mb_line_halflength: f64,
    /// Largest half-length tried before reporting an accuracy failure.
    pub mb_max_halflength: f64,
    /// Terms summed directly per index before the Euler–Maclaurin tail in
    /// multiple sums.
    pub direct_sum_cap: usize,
    /// Absolute target accuracy.
    pub tolerance: f64,
    /// Distance to a singular hyperplane below which `zeta^des` switches to
    /// the limit procedure.
    pub near_singularity: f64,
    pub exec: Execution,
}

impl Default for EvalConfig {
    fn default() -> Self {
        EvalConfig {
            em_terms: 40,
            em_bernoulli_order: 20,
            mb_m: None,
            mb_epsilon: 0.25,
            mb_line_halflength: 8.0,
            mb_max_halflength: 400.0,
            direct_sum_cap: 64,
            tolerance: 1e-12,
            near_singularity: 1e-3,
            exec: Execution::default(),
        }
    }
}

impl EvalConfig {
    pub fn sequential(mut self) -> Self {
        self.exec = Execution::Sequential;
        self
    }

    pub fn validate(&self) -> crate::Result<()> {
        let ok = self.em_terms > 0
            && self.em_bernoulli_order > 0
            && self.mb_m.is_none_or(|m| m >= 1)
            && self.mb_epsilon > 0.0
            && self.mb_epsilon < 1.0
            && self.mb_line_halflength > 0.0
            && self.mb_max_halflength >= self.mb_line_halflength
            && self.direct_sum_cap >= 8
            && self.tolerance > 0.0
            && self.near_singularity > 0.0;
        if ok {
            Ok(())
        } else {
            Err(crate::Error::Parameter(format!("invalid evaluation config {self:?}")))
        }
    }
}

/// How a value was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Direct,
    Mb,
    ClosedForm,
    Limit,
}

impl Method {
    pub fn tag(self) -> &'static str {
        match self {
            Method::Direct => "direct",
            Method::Mb => "mb",
            Method::ClosedForm => "closed-form",
            Method::Limit => "limit",
        }
    }
}

/// A numeric value with an error estimate and its provenance.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EvalResult {
    pub value: Complex64,
    pub error_bound: f64,
    pub method: Method,
}

impl EvalResult {
    pub fn new(value: Complex64, error_bound: f64, method: Method) -> Self {
        EvalResult { value, error_bound, method }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "value": {"re": self.value.re, "im": self.value.im},
            "error_bound": self.error_bound,
            "method": self.method.tag(),
        })
    }
}

/// Rejects NaN and infinities.
pub(crate) fn finite(z: Complex64) -> crate::Result<Complex64> {
    if z.re.is_finite() && z.im.is_finite() {
        Ok(z)
    } else {
        Err(crate::Error::Accuracy { achieved: f64::INFINITY, requested: 0.0 })
    }
}
