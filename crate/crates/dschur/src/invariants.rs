//! Top-level link-invariant API: framed and normalized Homfly-Pt, the reduced
//! version, and the Alexander (beta = 0) and sl_m (beta = m) specializations.
//! Every specialization is computed along two independent routes that must
//! agree exactly.

use crate::braid::{evaluate_closure, BraidWord};
use crate::coeff::{qint, Beta, LaurentPoly2, RationalFn, ShiftedInt};
use crate::engine::Engine;
use crate::error::{Error, Result};
use crate::params::Params;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum InvariantMode {
    Framed,
    Normalized,
    Reduced,
    Alexander,
    Sl,
}

impl InvariantMode {
    pub fn name(&self) -> &'static str {
        match self {
            InvariantMode::Framed => "homfly-framed",
            InvariantMode::Normalized => "homfly",
            InvariantMode::Reduced => "reduced",
            InvariantMode::Alexander => "alexander",
            InvariantMode::Sl => "slm",
        }
    }
}

/// Which symbols the `value` field ranges over.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Variables {
    /// two-variable (q, Q = q^beta)
    QQ,
    /// one variable q (after specializing beta)
    Q,
    /// Alexander variable t = q^{-2}
    T,
}

#[derive(Clone, Debug)]
pub struct InvariantResult {
    pub value: RationalFn,
    pub mode: InvariantMode,
    pub m: Option<i64>,
    pub writhe: i64,
    pub components: usize,
    pub variables: Variables,
    /// For Alexander: whether the symmetric Delta(1) = 1 normalization was
    /// applied (knots); links are reported verbatim.
    pub unit_normalized: bool,
}

impl InvariantResult {
    pub fn render(&self) -> String {
        match self.variables {
            Variables::QQ => self.value.render("q", "Q"),
            Variables::Q => self.value.render("q", "Q"),
            Variables::T => self.value.render("t", "?"),
        }
    }
}

fn unknot_value(beta: Beta) -> RationalFn {
    qint(ShiftedInt::beta(), beta)
}

/// q^{beta * w} as a monomial in the given mode.
fn writhe_factor(writhe: i64, beta: Beta) -> RationalFn {
    match beta {
        Beta::Generic => RationalFn::monomial(0, writhe),
        Beta::Int(m) => RationalFn::monomial(m * writhe, 0),
    }
}

/// The framed invariant: the scalar of the closed diagram in End(1_0).
pub fn homfly_framed(b: &BraidWord, params: &Params) -> Result<InvariantResult> {
    let engine = Engine::new(params.clone());
    let value = evaluate_closure(&engine, b, false)?;
    Ok(InvariantResult {
        value,
        mode: InvariantMode::Framed,
        m: None,
        writhe: b.writhe(),
        components: b.components(),
        variables: Variables::QQ,
        unit_normalized: false,
    })
}

/// Writhe-normalized Homfly-Pt: q^{beta w} times the framed value, so both
/// Markov moves preserve it.
pub fn homfly(b: &BraidWord, params: &Params) -> Result<InvariantResult> {
    let framed = homfly_framed(b, params)?;
    Ok(InvariantResult {
        value: writhe_factor(framed.writhe, Beta::Generic).mul(&framed.value),
        mode: InvariantMode::Normalized,
        ..framed
    })
}

/// Reduced Homfly-Pt (unknot = 1). Route A evaluates the cut closure; route B
/// divides the normalized invariant by the unknot value; they must agree.
pub fn reduced_homfly(b: &BraidWord, params: &Params) -> Result<InvariantResult> {
    let engine = Engine::new(params.clone());
    let cut = evaluate_closure(&engine, b, true)?;
    let route_a = writhe_factor(b.writhe(), Beta::Generic).mul(&cut);
    let route_b = homfly(b, params)?.value.div(&unknot_value(Beta::Generic))?;
    if route_a != route_b {
        return Err(Error::RouteDisagreement {
            op: "reduced_homfly".into(),
            detail: format!("cut closure gave {route_a}, unreduced/[beta] gave {route_b}"),
        });
    }
    Ok(InvariantResult {
        value: route_a,
        mode: InvariantMode::Reduced,
        m: None,
        writhe: b.writhe(),
        components: b.components(),
        variables: Variables::QQ,
        unit_normalized: false,
    })
}

/// Alexander polynomial: route A evaluates the cut closure with the beta
/// parts specialized to 0; route B substitutes Q = 1 into the reduced
/// Homfly-Pt. Knots are re-expressed in t = q^{-2} and normalized to the
/// symmetric representative with Delta(1) = 1.
pub fn alexander(b: &BraidWord, params: &Params) -> Result<InvariantResult> {
    let engine = Engine::new(params.beta_zero());
    let route_a = evaluate_closure(&engine, b, true)?;
    let route_b = reduced_homfly(b, params)?.value.substitute_beta(0)?;
    if route_a != route_b {
        return Err(Error::RouteDisagreement {
            op: "alexander".into(),
            detail: format!("beta=0 evaluation gave {route_a}, Q->1 of reduced gave {route_b}"),
        });
    }
    let components = b.components();
    if components == 1 {
        if let Some(t_poly) = route_a.as_poly().and_then(q_poly_to_t) {
            let (normalized, exact) = normalize_alexander(&t_poly);
            return Ok(InvariantResult {
                value: RationalFn::from_poly(normalized),
                mode: InvariantMode::Alexander,
                m: Some(0),
                writhe: b.writhe(),
                components,
                variables: Variables::T,
                unit_normalized: exact,
            });
        }
    }
    // links (or unnormalizable values) are reported verbatim in q
    Ok(InvariantResult {
        value: route_a,
        mode: InvariantMode::Alexander,
        m: Some(0),
        writhe: b.writhe(),
        components,
        variables: Variables::Q,
        unit_normalized: false,
    })
}

/// t = q^{-2}: possible exactly when all q-exponents are even.
fn q_poly_to_t(p: &LaurentPoly2) -> Option<LaurentPoly2> {
    if !p.is_q_only() {
        return None;
    }
    let mut terms = Vec::new();
    for (eq, _, c) in p.terms() {
        if eq % 2 != 0 {
            return None;
        }
        terms.push((-eq / 2, 0, c.clone()));
    }
    Some(LaurentPoly2::from_terms(terms))
}

/// Center the support, then fix the sign so Delta(1) = 1. Returns the
/// normalized polynomial and whether the normalization was exact (palindromic
/// support with Delta(1) = +-1).
fn normalize_alexander(p: &LaurentPoly2) -> (LaurentPoly2, bool) {
    if p.is_zero() {
        return (p.clone(), false);
    }
    let exps: Vec<i64> = p.terms().map(|(e, _, _)| e).collect();
    let lo = *exps.iter().min().unwrap();
    let hi = *exps.iter().max().unwrap();
    if (lo + hi) % 2 != 0 {
        return (p.clone(), false);
    }
    let shifted = p.shifted(-(lo + hi) / 2, 0);
    let mirrored = LaurentPoly2::from_terms(shifted.terms().map(|(e, _, c)| (-e, 0, c.clone())));
    if mirrored != shifted {
        return (shifted, false);
    }
    let at_one: num_bigint::BigInt = shifted.terms().map(|(_, _, c)| c.clone()).sum();
    if at_one == num_bigint::BigInt::from(1) {
        (shifted, true)
    } else if at_one == num_bigint::BigInt::from(-1) {
        (shifted.neg(), true)
    } else {
        (shifted, false)
    }
}

/// The sl_m invariant (m >= 2). Route A evaluates with the level-m quotient
/// and Q = q^m throughout; route B substitutes Q = q^m into the normalized
/// Homfly-Pt; exact agreement is the content of the specialization functor.
pub fn sl_invariant(b: &BraidWord, m: i64, params: &Params) -> Result<InvariantResult> {
    if m < 2 {
        return Err(Error::DegeneratePresentation(format!(
            "sl_m specialization requires m >= 2, got {m}"
        )));
    }
    let engine = Engine::new(params.sl(m));
    let framed = evaluate_closure(&engine, b, false)?;
    let route_a = writhe_factor(b.writhe(), Beta::Int(m)).mul(&framed);
    let route_b = homfly(b, params)?.value.substitute_beta(m)?;
    if route_a != route_b {
        return Err(Error::RouteDisagreement {
            op: "sl_invariant".into(),
            detail: format!("truncated evaluation gave {route_a}, substitution gave {route_b}"),
        });
    }
    Ok(InvariantResult {
        value: route_a,
        mode: InvariantMode::Sl,
        m: Some(m),
        writhe: b.writhe(),
        components: b.components(),
        variables: Variables::Q,
        unit_normalized: false,
    })
}

/// A rational function in a = Q^{-1} and z = q^{-1} - q; exponent slots
/// (exp_q, exp_Q) are reused as (exp_z, exp_a).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AzForm {
    pub num: LaurentPoly2,
    pub den: LaurentPoly2,
}

impl AzForm {
    pub fn render(&self) -> String {
        if self.den.is_one() {
            self.num.render("z", "a")
        } else {
            format!(
                "({}) / ({})",
                self.num.render("z", "a"),
                self.den.render("z", "a")
            )
        }
    }
}

/// Exact change of variables a = Q^{-1}, z = q^{-1} - q; errors with the
/// residual when the value is not expressible. The canonical form parks a
/// q-monomial unit in the numerator, so the fraction is recentered before
/// conversion (z-powers have symmetric q-support).
pub fn to_az(value: &RationalFn) -> Result<AzForm> {
    let exps: Vec<i64> = value.den().terms().map(|(eq, _, _)| eq).collect();
    let (lo, hi) = (
        *exps.iter().min().unwrap_or(&0),
        *exps.iter().max().unwrap_or(&0),
    );
    let centers = if (lo + hi) % 2 == 0 {
        vec![(lo + hi) / 2]
    } else {
        vec![(lo + hi - 1) / 2, (lo + hi + 1) / 2]
    };
    let mut last_err = None;
    for s in centers {
        let num = poly_to_az(&value.num().shifted(-s, 0));
        let den = poly_to_az(&value.den().shifted(-s, 0));
        match (num, den) {
            (Ok(mut num), Ok(mut den)) => {
                if den
                    .leading_coeff()
                    .is_some_and(num_traits::Signed::is_negative)
                {
                    den = den.neg();
                    num = num.neg();
                }
                return Ok(AzForm { num, den });
            }
            (Err(e), _) | (_, Err(e)) => last_err = Some(e),
        }
    }
    Err(last_err.expect("at least one center attempted"))
}

fn poly_to_az(p: &LaurentPoly2) -> Result<LaurentPoly2> {
    // group by Q-exponent: a^{-j} carries the q-Laurent part, which must be
    // a polynomial in z (triangular elimination from the top q-degree)
    let mut out = Vec::new();
    let mut cap_exps: Vec<i64> = p.terms().map(|(_, ecq, _)| ecq).collect();
    cap_exps.dedup();
    for &j in &cap_exps {
        let mut f = LaurentPoly2::from_terms(
            p.terms()
                .filter(|&(_, ecq, _)| ecq == j)
                .map(|(eq, _, c)| (eq, 0, c.clone())),
        );
        while !f.is_zero() {
            let deg = f.terms().map(|(eq, _, _)| eq).max().unwrap();
            if deg < 0 {
                return Err(Error::NotExpressible {
                    residual: f.render("q", "Q"),
                });
            }
            let lead = f
                .terms()
                .find(|&(eq, _, _)| eq == deg)
                .map(|(_, _, c)| c.clone())
                .unwrap();
            let sign = if deg % 2 == 0 { 1 } else { -1 };
            let coeff = lead * num_bigint::BigInt::from(sign);
            // z^deg expanded in q
            let z = LaurentPoly2::monomial(-1, 0, 1).sub(&LaurentPoly2::monomial(1, 0, 1));
            let mut zpow = LaurentPoly2::one();
            for _ in 0..deg {
                zpow = zpow.mul(&z);
            }
            f = f.sub(&zpow.mul_int(&coeff));
            out.push((deg, -j, coeff));
        }
    }
    Ok(LaurentPoly2::from_terms(out))
}
