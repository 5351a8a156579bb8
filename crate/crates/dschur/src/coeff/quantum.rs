//! Quantum integers, factorials and binomials for symbolic tops a + c*beta.
//!
//! [a + c*beta] = (q^a Q^c - q^-a Q^-c) / (q - q^-1), with Q = q^beta a free
//! symbol in generic mode, or Q = q^m after specialization.

use std::ops::{Add, Neg, Sub};

use crate::coeff::{LaurentPoly2, RationalFn};

/// An integer of the form base + beta_part * beta. All quantities produced by
/// the implemented relations have beta_part in {-1, 0, +1}.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct ShiftedInt {
    pub base: i64,
    pub beta_part: i64,
}

impl ShiftedInt {
    pub fn new(base: i64, beta_part: i64) -> Self {
        ShiftedInt { base, beta_part }
    }

    pub fn int(base: i64) -> Self {
        ShiftedInt { base, beta_part: 0 }
    }

    pub fn beta() -> Self {
        ShiftedInt {
            base: 0,
            beta_part: 1,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.base == 0 && self.beta_part == 0
    }
}

impl Add<i64> for ShiftedInt {
    type Output = ShiftedInt;
    fn add(self, rhs: i64) -> ShiftedInt {
        ShiftedInt::new(self.base + rhs, self.beta_part)
    }
}

impl Sub<i64> for ShiftedInt {
    type Output = ShiftedInt;
    fn sub(self, rhs: i64) -> ShiftedInt {
        ShiftedInt::new(self.base - rhs, self.beta_part)
    }
}

impl Sub for ShiftedInt {
    type Output = ShiftedInt;
    fn sub(self, rhs: ShiftedInt) -> ShiftedInt {
        ShiftedInt::new(self.base - rhs.base, self.beta_part - rhs.beta_part)
    }
}

impl Neg for ShiftedInt {
    type Output = ShiftedInt;
    fn neg(self) -> ShiftedInt {
        ShiftedInt::new(-self.base, -self.beta_part)
    }
}

impl std::fmt::Display for ShiftedInt {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.beta_part {
            0 => write!(f, "{}", self.base),
            1 if self.base == 0 => write!(f, "b"),
            1 => write!(f, "b{:+}", self.base),
            -1 if self.base == 0 => write!(f, "-b"),
            -1 => write!(f, "-b{:+}", self.base),
            c => write!(f, "{}b{:+}", c, self.base),
        }
    }
}

/// Coefficient mode: generic beta (two variables) or beta = m.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Beta {
    Generic,
    Int(i64),
}

/// Quantum integer of a possibly shifted top.
pub fn qint(n: ShiftedInt, beta: Beta) -> RationalFn {
    let (a, c) = match beta {
        Beta::Generic => (n.base, n.beta_part),
        Beta::Int(m) => (n.base + n.beta_part * m, 0),
    };
    if c == 0 {
        // [a] = sign(a) * (q^{|a|-1} + q^{|a|-3} + ... + q^{1-|a|})
        if a == 0 {
            return RationalFn::zero();
        }
        let sign = a.signum();
        let n = a.abs();
        let terms = (0..n).map(|j| (n - 1 - 2 * j, 0, num_bigint::BigInt::from(sign)));
        return RationalFn::from_poly(LaurentPoly2::from_terms(terms));
    }
    let num = LaurentPoly2::monomial(a, c, 1).sub(&LaurentPoly2::monomial(-a, -c, 1));
    let den = LaurentPoly2::monomial(1, 0, 1).sub(&LaurentPoly2::monomial(-1, 0, 1));
    RationalFn::new(num, den).expect("den nonzero")
}

/// [t]! as the t-fold product of quantum integers.
pub fn qfact(t: u32) -> RationalFn {
    let mut out = RationalFn::one();
    for s in 1..=t {
        out = out.mul(&qint(ShiftedInt::int(s as i64), Beta::Generic));
    }
    out
}

/// Quantum binomial with a possibly shifted top:
/// qbin(top, t) = prod_{s=1..t} [top - s + 1] / [t]!.
pub fn qbin(top: ShiftedInt, t: u32, beta: Beta) -> RationalFn {
    thread_local! {
        static CACHE: std::cell::RefCell<std::collections::HashMap<(ShiftedInt, u32, Beta), RationalFn>> =
            std::cell::RefCell::new(std::collections::HashMap::new());
    }
    CACHE.with(|cache| {
        if let Some(hit) = cache.borrow().get(&(top, t, beta)) {
            return hit.clone();
        }
        let mut num = RationalFn::one();
        for s in 0..t as i64 {
            let factor = qint(top - s, beta);
            if factor.is_zero() {
                num = RationalFn::zero();
                break;
            }
            num = num.mul(&factor);
        }
        let out = num.div(&qfact(t)).expect("[t]! nonzero");
        cache.borrow_mut().insert((top, t, beta), out.clone());
        out
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn qm(eq: i64, ecq: i64) -> LaurentPoly2 {
        LaurentPoly2::monomial(eq, ecq, 1)
    }

    /// Independent one-variable long-division oracle (dense, over Z).
    fn divide_laurent_q(num: &LaurentPoly2, den: &LaurentPoly2) -> Option<LaurentPoly2> {
        assert!(num.is_q_only() && den.is_q_only());
        let to_vec = |p: &LaurentPoly2| -> (i64, Vec<BigInt>) {
            let (mq, _) = p.min_exps().unwrap();
            let max = p.terms().map(|(eq, _, _)| eq).max().unwrap();
            let mut v = vec![BigInt::from(0); (max - mq + 1) as usize];
            for (eq, _, c) in p.terms() {
                v[(eq - mq) as usize] = c.clone();
            }
            (mq, v)
        };
        let (sn, mut n) = to_vec(num);
        let (sd, d) = to_vec(den);
        let mut quot = vec![BigInt::from(0); n.len()];
        let dd = d.len() - 1;
        loop {
            while n.last().is_some_and(num_traits::Zero::is_zero) {
                n.pop();
            }
            if n.is_empty() {
                break;
            }
            if n.len() - 1 < dd {
                return None; // nonzero remainder
            }
            let k = n.len() - 1 - dd;
            let c = &n[n.len() - 1] / &d[dd];
            if (&n[n.len() - 1] - &c * &d[dd]) != BigInt::from(0) {
                return None;
            }
            for i in 0..=dd {
                let t = &c * &d[i];
                n[k + i] = &n[k + i] - t;
            }
            quot[k] = c;
        }
        Some(LaurentPoly2::from_terms(
            quot.into_iter()
                .enumerate()
                .map(|(i, c)| (sn - sd + i as i64, 0, c)),
        ))
    }

    #[test]
    fn qint_examples() {
        // [beta] = (Q - Q^-1)/(q - q^-1)   (the circle value)
        let b = qint(ShiftedInt::beta(), Beta::Generic);
        let expect = RationalFn::new(qm(0, 1).sub(&qm(0, -1)), qm(1, 0).sub(&qm(-1, 0))).unwrap();
        assert_eq!(b, expect);
        // [2] = q + q^-1
        assert_eq!(
            qint(ShiftedInt::int(2), Beta::Generic),
            RationalFn::from_poly(qm(1, 0).add(&qm(-1, 0)))
        );
        // [-1] = -1
        assert_eq!(
            qint(ShiftedInt::int(-1), Beta::Generic),
            RationalFn::from_int(-1)
        );
        // [0] = 0, [-n] = -[n]
        assert!(qint(ShiftedInt::int(0), Beta::Generic).is_zero());
        for n in [1, 2, 5] {
            for c in [-1, 0, 1] {
                let x = ShiftedInt::new(n, c);
                assert_eq!(qint(-x, Beta::Generic), qint(x, Beta::Generic).neg());
            }
        }
    }

    #[test]
    fn qint_specialized() {
        // [beta] at beta=2 -> [2]; at beta=0 -> 0; [beta - 1] at 0 -> [-1]
        assert_eq!(
            qint(ShiftedInt::beta(), Beta::Int(2)),
            RationalFn::from_poly(qm(1, 0).add(&qm(-1, 0)))
        );
        assert!(qint(ShiftedInt::beta(), Beta::Int(0)).is_zero());
        assert_eq!(
            qint(ShiftedInt::beta() - 1, Beta::Int(0)),
            RationalFn::from_int(-1)
        );
        // specialization of the generic value agrees
        for (base, c, m) in [(1, 1, 3), (-2, 1, 2), (0, -1, 4), (3, 0, 2)] {
            let g = qint(ShiftedInt::new(base, c), Beta::Generic)
                .substitute_beta(m)
                .unwrap();
            assert_eq!(g, qint(ShiftedInt::new(base, c), Beta::Int(m)));
        }
    }

    #[test]
    fn qbin_base_cases() {
        // qbin(n, 0) = 1
        assert!(qbin(ShiftedInt::int(7), 0, Beta::Generic).is_one());
        assert!(qbin(ShiftedInt::beta(), 0, Beta::Generic).is_one());
        // qbin(-1, 1) = [-1] = -1 = (-1)^1 qbin(1, 1)
        assert_eq!(
            qbin(ShiftedInt::int(-1), 1, Beta::Generic),
            RationalFn::from_int(-1)
        );
    }

    #[test]
    fn qbin_3_2_by_division_oracle() {
        // expand the defining product and divide with the long-division oracle
        let prod =
            qint(ShiftedInt::int(3), Beta::Generic).mul(&qint(ShiftedInt::int(2), Beta::Generic));
        let fact = qfact(2);
        let div = divide_laurent_q(prod.as_poly().unwrap(), fact.as_poly().unwrap()).unwrap();
        let got = qbin(ShiftedInt::int(3), 2, Beta::Generic);
        assert_eq!(got, RationalFn::from_poly(div));
        // frozen expected value: q^2 + 1 + q^-2
        let expect = qm(2, 0).add(&LaurentPoly2::one()).add(&qm(-2, 0));
        assert_eq!(got, RationalFn::from_poly(expect));
    }

    #[test]
    fn long_division_example() {
        // (q^2 - q^-2)/(q - q^-1) -> q + q^-1 by the oracle, matching reduction
        let n = qm(2, 0).sub(&qm(-2, 0));
        let d = qm(1, 0).sub(&qm(-1, 0));
        let by_oracle = divide_laurent_q(&n, &d).unwrap();
        let by_reduction = RationalFn::new(n, d).unwrap();
        assert_eq!(RationalFn::from_poly(by_oracle), by_reduction);
    }

    #[test]
    fn integer_binomial_is_polynomial() {
        // tops with beta_part = 0 and base >= t >= 0 reduce to den = 1
        for n in 0..=8i64 {
            for t in 0..=n as u32 {
                let b = qbin(ShiftedInt::int(n), t, Beta::Generic);
                assert!(b.as_poly().is_some(), "qbin({n},{t}) should be polynomial");
            }
        }
    }

    #[test]
    fn pascal_identity() {
        // qbin(n+1, r) = q^r qbin(n, r) + q^{-n-1+r} qbin(n, r-1)
        for n in 0..=7i64 {
            for r in 0..=(n + 1) as u32 {
                let lhs = qbin(ShiftedInt::int(n + 1), r, Beta::Generic);
                let t1 = RationalFn::monomial(r as i64, 0).mul(&qbin(
                    ShiftedInt::int(n),
                    r,
                    Beta::Generic,
                ));
                let t2 = if r == 0 {
                    RationalFn::zero()
                } else {
                    RationalFn::monomial(-n - 1 + r as i64, 0).mul(&qbin(
                        ShiftedInt::int(n),
                        r - 1,
                        Beta::Generic,
                    ))
                };
                assert_eq!(lhs, t1.add(&t2), "pascal failed at n={n}, r={r}");
            }
        }
    }

    #[test]
    fn alternating_sum_identity() {
        // sum_{r=0..v} (-1)^r q^{-(v-1)r} qbin(v, r) = 0
        for v in 1..=8i64 {
            let mut acc = RationalFn::zero();
            for r in 0..=v as u32 {
                let sign = if r % 2 == 0 { 1 } else { -1 };
                let term = RationalFn::from_int(sign)
                    .mul(&RationalFn::monomial(-(v - 1) * r as i64, 0))
                    .mul(&qbin(ShiftedInt::int(v), r, Beta::Generic));
                acc = acc.add(&term);
            }
            assert!(acc.is_zero(), "alternating sum failed at v={v}");
        }
    }

    #[test]
    fn negative_top_identity() {
        // qbin(-k, l) = (-1)^l qbin(k+l-1, l)
        for k in 0..=6i64 {
            for l in 0..=6u32 {
                let lhs = qbin(ShiftedInt::int(-k), l, Beta::Generic);
                let sign = if l % 2 == 0 { 1 } else { -1 };
                let rhs = RationalFn::from_int(sign).mul(&qbin(
                    ShiftedInt::int(k + l as i64 - 1),
                    l,
                    Beta::Generic,
                ));
                assert_eq!(lhs, rhs, "negative-top failed at k={k}, l={l}");
            }
        }
    }

    #[test]
    fn qbin_beta_top_examples() {
        // qbin(beta, 1) = [beta]
        assert_eq!(
            qbin(ShiftedInt::beta(), 1, Beta::Generic),
            qint(ShiftedInt::beta(), Beta::Generic)
        );
    }
}
