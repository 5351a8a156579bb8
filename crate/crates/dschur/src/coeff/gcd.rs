//! Dense univariate polynomial arithmetic over a coefficient ring with exact
//! division, and gcds via subresultant pseudo-remainder sequences. Used at two
//! levels: coefficients in Z for the inner variable, and coefficients in Z[q]
//! for the outer variable.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Coefficient ring admitting exact division and gcds (a UFD in practice).
pub(crate) trait Coeff: Clone + PartialEq + std::fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn neg(&self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    /// Division known to be exact by the caller's invariant.
    fn exact_div(&self, rhs: &Self) -> Self;
    fn gcd(&self, rhs: &Self) -> Self;
    /// True if the normalization unit should flip the sign.
    fn is_negative(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self {
        self.sub(&rhs.neg())
    }
}

impl Coeff for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn neg(&self) -> Self {
        -self
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn exact_div(&self, rhs: &Self) -> Self {
        debug_assert!(!Zero::is_zero(rhs));
        debug_assert!(Zero::is_zero(&(self % rhs)), "inexact integer division");
        self / rhs
    }
    fn gcd(&self, rhs: &Self) -> Self {
        Integer::gcd(self, rhs)
    }
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
}

/// Dense univariate polynomial, little-endian coefficients, no trailing zeros.
#[derive(Clone, PartialEq, Debug)]
pub(crate) struct Poly<C>(Vec<C>);

impl<C: Coeff> Poly<C> {
    pub fn new(mut coeffs: Vec<C>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly(coeffs)
    }

    pub fn zero() -> Self {
        Poly(Vec::new())
    }

    pub fn constant(c: C) -> Self {
        Poly::new(vec![c])
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree; only meaningful for nonzero polynomials.
    pub fn deg(&self) -> usize {
        debug_assert!(!self.is_zero());
        self.0.len() - 1
    }

    pub fn lc(&self) -> &C {
        self.0
            .last()
            .expect("leading coefficient of zero polynomial")
    }

    pub fn coeffs(&self) -> &[C] {
        &self.0
    }

    pub fn neg(&self) -> Self {
        Poly(self.0.iter().map(|c| c.neg()).collect())
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let n = self.0.len().max(rhs.0.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.0.get(i).cloned().unwrap_or_else(C::zero);
            let b = rhs.0.get(i).cloned().unwrap_or_else(C::zero);
            out.push(a.sub(&b));
        }
        Poly::new(out)
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![C::zero(); self.0.len() + rhs.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.0.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        Poly::new(out)
    }

    pub fn mul_coeff(&self, c: &C) -> Self {
        Poly::new(self.0.iter().map(|a| a.mul(c)).collect())
    }

    pub fn exact_div_coeff(&self, c: &C) -> Self {
        Poly(self.0.iter().map(|a| a.exact_div(c)).collect())
    }

    /// Multiply by x^k.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![C::zero(); k];
        out.extend(self.0.iter().cloned());
        Poly(out)
    }

    /// Pseudo-remainder: lc(d)^(deg(self)-deg(d)+1) * self mod d.
    pub fn pseudo_rem(&self, d: &Self) -> Self {
        let dd = d.deg();
        let ld = d.lc();
        let mut r = self.clone();
        let mut scale = self.deg() as i64 - dd as i64 + 1;
        while !r.is_zero() && r.deg() >= dd {
            let lr = r.lc().clone();
            let k = r.deg() - dd;
            r = r.mul_coeff(ld).sub(&d.shift(k).mul_coeff(&lr));
            scale -= 1;
        }
        while scale > 0 {
            r = r.mul_coeff(ld);
            scale -= 1;
        }
        r
    }

    /// Quotient of an exact division; debug-asserts the remainder vanishes.
    pub fn exact_div(&self, d: &Self) -> Self {
        assert!(!d.is_zero(), "exact division by zero polynomial");
        if self.is_zero() {
            return Poly::zero();
        }
        let dd = d.deg();
        assert!(self.deg() >= dd, "inexact polynomial division");
        let mut r = self.clone();
        let mut q = vec![C::zero(); self.deg() - dd + 1];
        while !r.is_zero() && r.deg() >= dd {
            let k = r.deg() - dd;
            let c = r.lc().exact_div(d.lc());
            r = r.sub(&d.shift(k).mul_coeff(&c));
            q[k] = c;
        }
        debug_assert!(r.is_zero(), "inexact polynomial division");
        Poly::new(q)
    }

    pub fn content(&self) -> C {
        let mut g = C::zero();
        for c in &self.0 {
            g = g.gcd(c);
        }
        g
    }

    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Poly::zero();
        }
        self.exact_div_coeff(&self.content())
    }

    fn coeff_pow(c: &C, n: usize) -> C {
        let mut out = C::one();
        for _ in 0..n {
            out = out.mul(c);
        }
        out
    }

    /// Gcd by the subresultant PRS; result is primitive up to the gcd of the
    /// contents, with non-negative normalization.
    pub fn gcd(&self, rhs: &Self) -> Self {
        let normalized = |p: Poly<C>| {
            if !p.is_zero() && p.lc().is_negative() {
                p.neg()
            } else {
                p
            }
        };
        if self.is_zero() {
            return normalized(rhs.clone());
        }
        if rhs.is_zero() {
            return normalized(self.clone());
        }
        let ca = self.content();
        let cb = rhs.content();
        let cg = ca.gcd(&cb);
        let mut p = self.exact_div_coeff(&ca);
        let mut q = rhs.exact_div_coeff(&cb);
        if p.deg() < q.deg() {
            std::mem::swap(&mut p, &mut q);
        }
        let mut g = C::one();
        let mut h = C::one();
        loop {
            let d = p.deg() - q.deg();
            let r = p.pseudo_rem(&q);
            if r.is_zero() {
                break;
            }
            if r.deg() == 0 {
                q = Poly::constant(C::one());
                break;
            }
            p = q;
            let divisor = g.mul(&Self::coeff_pow(&h, d));
            q = r.exact_div_coeff(&divisor);
            g = p.lc().clone();
            h = if d == 0 {
                h
            } else {
                Self::coeff_pow(&g, d).exact_div(&Self::coeff_pow(&h, d - 1))
            };
        }
        normalized(q.primitive_part().mul_coeff(&cg))
    }
}

impl Coeff for Poly<BigInt> {
    fn zero() -> Self {
        Poly::zero()
    }
    fn one() -> Self {
        Poly::constant(One::one())
    }
    fn is_zero(&self) -> bool {
        Poly::is_zero(self)
    }
    fn neg(&self) -> Self {
        Poly::neg(self)
    }
    fn mul(&self, rhs: &Self) -> Self {
        Poly::mul(self, rhs)
    }
    fn sub(&self, rhs: &Self) -> Self {
        Poly::sub(self, rhs)
    }
    fn exact_div(&self, rhs: &Self) -> Self {
        Poly::exact_div(self, rhs)
    }
    fn gcd(&self, rhs: &Self) -> Self {
        Poly::gcd(self, rhs)
    }
    fn is_negative(&self) -> bool {
        !Poly::is_zero(self) && Coeff::is_negative(self.lc())
    }
}
