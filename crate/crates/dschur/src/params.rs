use crate::coeff::Beta;

/// Evaluation parameters shared by the algebra and the engine.
///
/// `beta` selects the coefficient mode: the generic two-variable field, or the
/// one-variable specialization q^beta = q^m. `truncation` kills every weight
/// with an entry of value outside [0, m] (the sl_m quotient); it is `None`
/// except in sl_m mode. `max_power` bounds divided-power exponents produced by
/// rewriting, and `max_terms` bounds the number of words the engine may
/// process in one evaluation.
#[derive(Clone, Debug)]
pub struct Params {
    pub beta: Beta,
    pub truncation: Option<i64>,
    pub max_power: u32,
    pub max_terms: usize,
}

impl Default for Params {
    fn default() -> Self {
        Params {
            beta: Beta::Generic,
            truncation: None,
            max_power: 64,
            max_terms: 1 << 22,
        }
    }
}

impl Params {
    pub fn generic() -> Self {
        Params::default()
    }

    /// beta = 0 specialization (Alexander mode); no truncation.
    pub fn beta_zero(&self) -> Self {
        Params {
            beta: Beta::Int(0),
            truncation: None,
            ..self.clone()
        }
    }

    /// beta = m with the level-m quotient (sl_m mode).
    pub fn sl(&self, m: i64) -> Self {
        Params {
            beta: Beta::Int(m),
            truncation: Some(m),
            ..self.clone()
        }
    }
}
