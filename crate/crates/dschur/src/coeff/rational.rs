//! Rational functions num/den over the Laurent polynomials in (q, Q), kept in
//! a canonical reduced form so that equality is structural:
//!   - gcd(num, den) = 1 after clearing minimal exponents,
//!   - den has minimal exponents (0, 0) and a positive canonical leading
//!     coefficient,
//!   - zero is 0/1.

use std::fmt;

use num_bigint::BigInt;

use super::poly::LaurentPoly2;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct RationalFn {
    num: LaurentPoly2,
    den: LaurentPoly2,
}

impl RationalFn {
    pub fn zero() -> Self {
        RationalFn {
            num: LaurentPoly2::zero(),
            den: LaurentPoly2::one(),
        }
    }

    pub fn one() -> Self {
        RationalFn::from_poly(LaurentPoly2::one())
    }

    pub fn from_int(c: impl Into<BigInt>) -> Self {
        RationalFn::from_poly(LaurentPoly2::constant(c))
    }

    pub fn from_poly(p: LaurentPoly2) -> Self {
        RationalFn {
            num: p,
            den: LaurentPoly2::one(),
        }
    }

    pub fn monomial(exp_q: i64, exp_cap_q: i64) -> Self {
        RationalFn::from_poly(LaurentPoly2::monomial(exp_q, exp_cap_q, 1))
    }

    pub fn new(num: LaurentPoly2, den: LaurentPoly2) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduced(num, den))
    }

    /// Canonical form; den must be nonzero.
    fn reduced(num: LaurentPoly2, den: LaurentPoly2) -> Self {
        if num.is_zero() {
            return RationalFn::zero();
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = if g.is_one() {
            (num, den)
        } else {
            (num.exact_div(&g), den.exact_div(&g))
        };
        // move den's monomial unit into num, fix den's leading sign
        let (mq, mc) = den.min_exps().expect("den nonzero");
        if (mq, mc) != (0, 0) {
            den = den.shifted(-mq, -mc);
            num = num.shifted(-mq, -mc);
        }
        if den
            .leading_coeff()
            .is_some_and(num_traits::Signed::is_negative)
        {
            den = den.neg();
            num = num.neg();
        }
        RationalFn { num, den }
    }

    pub fn num(&self) -> &LaurentPoly2 {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly2 {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// The underlying Laurent polynomial, when the denominator is 1.
    pub fn as_poly(&self) -> Option<&LaurentPoly2> {
        if self.den.is_one() {
            Some(&self.num)
        } else {
            None
        }
    }

    pub fn neg(&self) -> Self {
        RationalFn {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RationalFn::from_poly(self.num.add(&rhs.num));
        }
        Self::reduced(
            self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den)),
            self.den.mul(&rhs.den),
        )
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return RationalFn::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RationalFn::from_poly(self.num.mul(&rhs.num));
        }
        Self::reduced(self.num.mul(&rhs.num), self.den.mul(&rhs.den))
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduced(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduced(
            self.num.mul(&rhs.den),
            self.den.mul(&rhs.num),
        ))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = RationalFn::one();
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// Substitute Q = q^m (a ring homomorphism on the field of fractions
    /// wherever the denominator survives).
    pub fn substitute_beta(&self, m: i64) -> Result<Self> {
        let den = self.den.substitute_cap_q(m);
        if den.is_zero() {
            return Err(Error::SubstitutionPole { m });
        }
        Ok(Self::reduced(self.num.substitute_cap_q(m), den))
    }

    /// Monomial change of variables used by oracle calibration.
    pub fn map_variables(&self, sign_q: bool, inv_q: bool, sign_cap: bool, inv_cap: bool) -> Self {
        Self::reduced(
            self.num.map_variables(sign_q, inv_q, sign_cap, inv_cap),
            self.den.map_variables(sign_q, inv_q, sign_cap, inv_cap),
        )
    }

    pub fn render(&self, var_q: &str, var_cap: &str) -> String {
        if self.den.is_one() {
            self.num.render(var_q, var_cap)
        } else {
            format!(
                "({}) / ({})",
                self.num.render(var_q, var_cap),
                self.den.render(var_q, var_cap)
            )
        }
    }
}

impl fmt::Display for RationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render("q", "Q"))
    }
}
