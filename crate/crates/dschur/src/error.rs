use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("division by zero rational function")]
    DivisionByZero,

    #[error(
        "denominator vanishes identically after substituting Q = q^{m}; reduce or divide first"
    )]
    SubstitutionPole { m: i64 },

    #[error("cannot compose: left factor has source {left_source} but right factor has target {right_target}")]
    ComposeMismatch {
        left_source: String,
        right_target: String,
    },

    #[error("cannot combine elements with different endpoints: {0}")]
    EndpointMismatch(String),

    #[error("rung power {power} exceeds the configured maximum {max}")]
    PowerBound { power: u64, max: u32 },

    #[error("term budget exceeded: more than {limit} words processed")]
    TermBudget { limit: usize },

    #[error("weight {weight} admits an F-rung; scalar evaluation requires the cut at the interface position")]
    NotScalarWeight { weight: String },

    #[error("probe inconclusive: no valid border found within budget")]
    ProbeInconclusive,

    #[error("ambient weight must have entries {index}, {next} equal to 1")]
    WrongAmbient { index: usize, next: usize },

    #[error("serre_gamma out of range: m={m}, n={n}, s={s} (need m >= n+1 and m-n <= s <= m)")]
    SerreRange { m: u32, n: u32, s: u32 },

    #[error("idempotents need an ambient weight starting with entries (1, 1, ...)")]
    WrongIdempotentAmbient,

    #[error("internal consistency failure in {op}: {detail}")]
    RouteDisagreement { op: String, detail: String },

    #[error("calibration failed: no monomial change of variables matches the oracle ({0})")]
    Calibration(String),

    #[error("value is not expressible in (a, z); residual: {residual}")]
    NotExpressible { residual: String },

    #[error("braid parse error at byte {pos}: {msg}")]
    BraidParse { pos: usize, msg: String },

    #[error("degenerate braid presentation: {0}")]
    DegeneratePresentation(String),
}

pub type Result<T> = std::result::Result<T, Error>;
