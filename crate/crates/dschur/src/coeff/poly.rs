//! Laurent polynomials in q and Q = q^beta with arbitrary-precision integer
//! coefficients. Terms are kept in the canonical order (exp_Q, exp_q)
//! ascending; that order is part of the serialization contract.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::gcd::Poly;

/// Finitely supported map (exp_q, exp_Q) -> coefficient, no zero entries.
/// Internal keys are (exp_Q, exp_q) so the natural map order is canonical.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct LaurentPoly2 {
    terms: BTreeMap<(i64, i64), BigInt>,
}

impl LaurentPoly2 {
    pub fn zero() -> Self {
        LaurentPoly2::default()
    }

    pub fn one() -> Self {
        LaurentPoly2::monomial(0, 0, BigInt::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        LaurentPoly2::monomial(0, 0, c.into())
    }

    pub fn monomial(exp_q: i64, exp_cap_q: i64, coeff: impl Into<BigInt>) -> Self {
        let coeff = coeff.into();
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert((exp_cap_q, exp_q), coeff);
        }
        LaurentPoly2 { terms }
    }

    pub fn from_terms(it: impl IntoIterator<Item = (i64, i64, BigInt)>) -> Self {
        let mut out = LaurentPoly2::zero();
        for (eq, ecq, c) in it {
            out.add_term(eq, ecq, c);
        }
        out
    }

    fn add_term(&mut self, exp_q: i64, exp_cap_q: i64, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let key = (exp_cap_q, exp_q);
        let entry = self.terms.entry(key).or_insert_with(BigInt::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&(0, 0)).is_some_and(|c| c.is_one())
    }

    pub fn nterms(&self) -> usize {
        self.terms.len()
    }

    /// Terms as (exp_q, exp_Q, coeff) in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, i64, &BigInt)> {
        self.terms.iter().map(|(&(ecq, eq), c)| (eq, ecq, c))
    }

    /// Coefficient of the last term in canonical order.
    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.terms.last_key_value().map(|(_, c)| c)
    }

    /// Componentwise minimal exponents (min exp_q, min exp_Q) over the support.
    pub fn min_exps(&self) -> Option<(i64, i64)> {
        if self.is_zero() {
            return None;
        }
        let min_q = self.terms.keys().map(|&(_, eq)| eq).min().unwrap();
        let min_cap = self.terms.keys().map(|&(ecq, _)| ecq).min().unwrap();
        Some((min_q, min_cap))
    }

    pub fn shifted(&self, dq: i64, dcq: i64) -> Self {
        LaurentPoly2 {
            terms: self
                .terms
                .iter()
                .map(|(&(ecq, eq), c)| ((ecq + dcq, eq + dq), c.clone()))
                .collect(),
        }
    }

    pub fn neg(&self) -> Self {
        LaurentPoly2 {
            terms: self.terms.iter().map(|(&k, c)| (k, -c)).collect(),
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (&(ecq, eq), c) in &rhs.terms {
            out.add_term(eq, ecq, c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (&(ecq, eq), c) in &rhs.terms {
            out.add_term(eq, ecq, -c);
        }
        out
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = LaurentPoly2::zero();
        for (&(ecq1, eq1), c1) in &self.terms {
            for (&(ecq2, eq2), c2) in &rhs.terms {
                out.add_term(eq1 + eq2, ecq1 + ecq2, c1 * c2);
            }
        }
        out
    }

    pub fn mul_int(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return LaurentPoly2::zero();
        }
        LaurentPoly2 {
            terms: self.terms.iter().map(|(&k, v)| (k, v * c)).collect(),
        }
    }

    /// Substitute Q = q^m; always well defined on polynomials.
    pub fn substitute_cap_q(&self, m: i64) -> Self {
        let mut out = LaurentPoly2::zero();
        for (&(ecq, eq), c) in &self.terms {
            out.add_term(eq + m * ecq, 0, c.clone());
        }
        out
    }

    /// Substitute q -> sign_q * q^e_q and Q -> sign_Q * Q^e_Q with signs +-1
    /// and exponents +-1 (monomial change of variables for calibration).
    pub fn map_variables(&self, sign_q: bool, inv_q: bool, sign_cap: bool, inv_cap: bool) -> Self {
        let mut out = LaurentPoly2::zero();
        for (&(ecq, eq), c) in &self.terms {
            let mut coeff = c.clone();
            if sign_q && eq.rem_euclid(2) == 1 {
                coeff = -coeff;
            }
            if sign_cap && ecq.rem_euclid(2) == 1 {
                coeff = -coeff;
            }
            let neq = if inv_q { -eq } else { eq };
            let necq = if inv_cap { -ecq } else { ecq };
            out.add_term(neq, necq, coeff);
        }
        out
    }

    /// True when the support only involves q (exp_Q = 0 everywhere).
    pub fn is_q_only(&self) -> bool {
        self.terms.keys().all(|&(ecq, _)| ecq == 0)
    }

    // ---- conversions for the gcd machinery -------------------------------

    /// Clear minimal exponents: self = q^a Q^b * poly with poly having
    /// min exps (0, 0). Returns ((a, b), coefficients as Z[q]-polys in Q).
    fn to_nested(&self) -> ((i64, i64), Poly<Poly<BigInt>>) {
        let (min_q, min_cap) = self.min_exps().expect("nonzero");
        let max_cap = self.terms.keys().map(|&(ecq, _)| ecq).max().unwrap();
        let max_q = self.terms.keys().map(|&(_, eq)| eq).max().unwrap();
        let mut rows: Vec<Vec<BigInt>> = vec![
            vec![BigInt::zero(); (max_q - min_q + 1) as usize];
            (max_cap - min_cap + 1) as usize
        ];
        for (&(ecq, eq), c) in &self.terms {
            rows[(ecq - min_cap) as usize][(eq - min_q) as usize] = c.clone();
        }
        let nested = Poly::new(rows.into_iter().map(Poly::new).collect());
        ((min_q, min_cap), nested)
    }

    fn from_nested(shift: (i64, i64), nested: &Poly<Poly<BigInt>>) -> Self {
        let mut out = LaurentPoly2::zero();
        for (i, row) in nested.coeffs().iter().enumerate() {
            for (j, c) in row.coeffs().iter().enumerate() {
                out.add_term(shift.0 + j as i64, shift.1 + i as i64, c.clone());
            }
        }
        out
    }

    /// Polynomial gcd, normalized to minimal exponents (0, 0) and positive
    /// coefficient on the canonical leading term. Monomial units are dropped.
    pub fn gcd(&self, rhs: &Self) -> Self {
        let normalize = |p: &LaurentPoly2| {
            let (mq, mc) = p.min_exps().unwrap();
            let mut s = p.shifted(-mq, -mc);
            if s.leading_coeff().is_some_and(|c| c.is_negative()) {
                s = s.neg();
            }
            s
        };
        if self.is_zero() && rhs.is_zero() {
            return LaurentPoly2::zero();
        }
        if self.is_zero() {
            return normalize(rhs);
        }
        if rhs.is_zero() {
            return normalize(self);
        }
        // single-term operands share only a monomial and integer content
        if self.nterms() == 1 || rhs.nterms() == 1 {
            let ca = self.int_content();
            let cb = rhs.int_content();
            return LaurentPoly2::constant(num_integer::Integer::gcd(&ca, &cb));
        }
        let (_, a) = self.to_nested();
        let (_, b) = rhs.to_nested();
        let g = a.gcd(&b);
        normalize(&LaurentPoly2::from_nested((0, 0), &g))
    }

    fn int_content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in self.terms.values() {
            g = num_integer::Integer::gcd(&g, c);
        }
        g
    }

    /// Quotient self / d for exact Laurent division (d divides self up to a
    /// monomial unit; the result is a Laurent polynomial).
    pub fn exact_div(&self, d: &Self) -> Self {
        assert!(!d.is_zero(), "exact division by zero");
        if self.is_zero() {
            return LaurentPoly2::zero();
        }
        let (sa, a) = self.to_nested();
        let (sb, b) = d.to_nested();
        let q = a.exact_div(&b);
        LaurentPoly2::from_nested((sa.0 - sb.0, sa.1 - sb.1), &q)
    }

    /// Render with the given variable names; terms in canonical order.
    pub fn render(&self, var_q: &str, var_cap: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (eq, ecq, c)) in self.terms().enumerate() {
            let mut mono = String::new();
            if eq != 0 {
                mono.push_str(var_q);
                if eq != 1 {
                    mono.push_str(&format!("^{eq}"));
                }
            }
            if ecq != 0 {
                if !mono.is_empty() {
                    mono.push('*');
                }
                mono.push_str(var_cap);
                if ecq != 1 {
                    mono.push_str(&format!("^{ecq}"));
                }
            }
            let abs = c.abs();
            let lead = if i == 0 {
                if c.is_negative() {
                    "-".to_string()
                } else {
                    String::new()
                }
            } else if c.is_negative() {
                " - ".to_string()
            } else {
                " + ".to_string()
            };
            out.push_str(&lead);
            if mono.is_empty() {
                out.push_str(&abs.to_string());
            } else if abs.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&format!("{abs}*{mono}"));
            }
        }
        out
    }
}

impl fmt::Display for LaurentPoly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render("q", "Q"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qp(eq: i64) -> LaurentPoly2 {
        LaurentPoly2::monomial(eq, 0, 1)
    }

    #[test]
    fn canonical_order_of_terms() {
        let p = LaurentPoly2::from_terms([
            (3, 0, BigInt::from(1)),
            (-1, -2, BigInt::from(2)),
            (0, 1, BigInt::from(-5)),
        ]);
        let got: Vec<(i64, i64)> = p.terms().map(|(a, b, _)| (a, b)).collect();
        // ascending (exp_Q, exp_q)
        assert_eq!(got, vec![(-1, -2), (3, 0), (0, 1)]);
    }

    #[test]
    fn no_zero_coefficients_stored() {
        let p = qp(1).sub(&qp(1));
        assert!(p.is_zero());
        assert_eq!(p.nterms(), 0);
    }

    #[test]
    fn mul_commutative_associative_spot() {
        let a = qp(1).add(&qp(-1));
        let b = LaurentPoly2::monomial(0, 1, 3).sub(&qp(2));
        let c = LaurentPoly2::monomial(-1, -1, 1).add(&LaurentPoly2::constant(7));
        assert_eq!(a.mul(&b), b.mul(&a));
        assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
    }

    #[test]
    fn laurent_gcd_clears_monomials() {
        // q^2 - q^-2 and q - q^-1 share (q^2 - 1) after clearing units.
        let a = qp(2).sub(&qp(-2));
        let b = qp(1).sub(&qp(-1));
        let g = a.gcd(&b);
        assert_eq!(g, qp(2).sub(&LaurentPoly2::one()));
    }

    #[test]
    fn exact_div_laurent() {
        let a = qp(2).sub(&qp(-2));
        let b = qp(1).sub(&qp(-1));
        let q = a.exact_div(&b);
        assert_eq!(q, qp(1).add(&qp(-1)));
    }

    #[test]
    fn substitute_cap_q_is_hom() {
        let a = LaurentPoly2::monomial(1, 2, 3).add(&qp(-1));
        let b = LaurentPoly2::monomial(0, -1, 1).sub(&qp(4));
        let m = 3;
        assert_eq!(
            a.mul(&b).substitute_cap_q(m),
            a.substitute_cap_q(m).mul(&b.substitute_cap_q(m))
        );
    }

    #[test]
    fn render_ascending() {
        let p = qp(1).add(&qp(-1)); // q^-1 + q
        assert_eq!(p.render("q", "Q"), "q^-1 + q");
    }
}
