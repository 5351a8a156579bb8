//! Independent Alexander oracle via the reduced Burau representation:
//! Delta(t) = det(psi(b) - Id) / (1 + t + ... + t^{k-1}) up to units, then
//! the symmetric Delta(1) = 1 representative for knots.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::braid::BraidWord;
use crate::coeff::LaurentPoly2;
use crate::error::{Error, Result};

/// Laurent polynomials in t, reusing the q slot of the two-variable type.
type TPoly = LaurentPoly2;

fn t(e: i64) -> TPoly {
    LaurentPoly2::monomial(e, 0, 1)
}

type Matrix = Vec<Vec<TPoly>>;

fn mat_identity(n: usize) -> Matrix {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { TPoly::one() } else { TPoly::zero() })
                .collect()
        })
        .collect()
}

fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let n = a.len();
    let mut out = vec![vec![TPoly::zero(); n]; n];
    for i in 0..n {
        for (l, b_row) in b.iter().enumerate() {
            if a[i][l].is_zero() {
                continue;
            }
            for j in 0..n {
                if b_row[j].is_zero() {
                    continue;
                }
                out[i][j] = out[i][j].add(&a[i][l].mul(&b_row[j]));
            }
        }
    }
    out
}

/// Reduced Burau matrix of sigma_i^{+-1} in B_k, size (k-1) x (k-1).
fn burau_generator(k: usize, i: usize, positive: bool) -> Matrix {
    let n = k - 1;
    let mut m = mat_identity(n);
    // rows/cols are 0-based; generator i is 1-based
    let r = i - 1;
    if positive {
        if i == 1 {
            m[0][0] = t(1).neg();
            if n > 1 {
                m[1][0] = TPoly::one();
            }
        } else if i == k - 1 {
            m[r][r] = t(1).neg();
            m[r - 1][r] = t(1);
        } else {
            m[r - 1][r] = t(1);
            m[r][r] = t(1).neg();
            m[r + 1][r] = TPoly::one();
        }
    } else if i == 1 {
        m[0][0] = t(-1).neg();
        if n > 1 {
            m[1][0] = t(-1);
        }
    } else if i == k - 1 {
        m[r][r] = t(-1).neg();
        m[r - 1][r] = TPoly::one();
    } else {
        m[r - 1][r] = TPoly::one();
        m[r][r] = t(-1).neg();
        m[r + 1][r] = t(-1);
    }
    m
}

pub(crate) fn burau_matrix(b: &BraidWord) -> Matrix {
    let k = b.strands();
    let mut m = mat_identity(k - 1);
    for l in b.letters() {
        m = mat_mul(&m, &burau_generator(k, l.index, l.positive));
    }
    m
}

fn det(m: &Matrix) -> TPoly {
    let n = m.len();
    if n == 0 {
        return TPoly::one();
    }
    if n == 1 {
        return m[0][0].clone();
    }
    let mut out = TPoly::zero();
    for i in 0..n {
        if m[i][0].is_zero() {
            continue;
        }
        let minor: Matrix = m
            .iter()
            .enumerate()
            .filter(|(r, _)| *r != i)
            .map(|(_, row)| row[1..].to_vec())
            .collect();
        let term = m[i][0].mul(&det(&minor));
        out = if i % 2 == 0 {
            out.add(&term)
        } else {
            out.sub(&term)
        };
    }
    out
}

/// Exact one-variable Laurent division with remainder check.
fn div_exact_t(num: &TPoly, den: &TPoly) -> Option<TPoly> {
    if num.is_zero() {
        return Some(TPoly::zero());
    }
    let to_vec = |p: &TPoly| -> (i64, Vec<BigInt>) {
        let (m, _) = p.min_exps().unwrap();
        let max = p.terms().map(|(e, _, _)| e).max().unwrap();
        let mut v = vec![BigInt::zero(); (max - m + 1) as usize];
        for (e, _, c) in p.terms() {
            v[(e - m) as usize] = c.clone();
        }
        (m, v)
    };
    let (sn, mut n) = to_vec(num);
    let (sd, d) = to_vec(den);
    let dd = d.len() - 1;
    let mut quot = vec![BigInt::zero(); n.len()];
    loop {
        while n.last().is_some_and(Zero::is_zero) {
            n.pop();
        }
        if n.is_empty() {
            break;
        }
        if n.len() - 1 < dd {
            return None;
        }
        let k = n.len() - 1 - dd;
        let c = &n[n.len() - 1] / &d[dd];
        if (&n[n.len() - 1] - &c * &d[dd]) != BigInt::zero() {
            return None;
        }
        for i in 0..=dd {
            let sub = &c * &d[i];
            n[k + i] = &n[k + i] - sub;
        }
        quot[k] = c;
    }
    Some(LaurentPoly2::from_terms(
        quot.into_iter()
            .enumerate()
            .map(|(i, c)| (sn - sd + i as i64, 0, c)),
    ))
}

#[derive(Clone, Debug)]
pub struct BurauAlexander {
    /// Laurent polynomial in t (symmetric Delta(1) = 1 representative for
    /// knots; links are reported without unit normalization).
    pub value: TPoly,
    pub unit_normalized: bool,
}

pub fn burau_alexander(b: &BraidWord) -> Result<BurauAlexander> {
    let k = b.strands();
    if k == 1 {
        return Ok(BurauAlexander {
            value: TPoly::one(),
            unit_normalized: true,
        });
    }
    let m = burau_matrix(b);
    let mut shifted = m;
    for (i, row) in shifted.iter_mut().enumerate() {
        row[i] = row[i].sub(&TPoly::one());
    }
    let d = det(&shifted);
    if d.is_zero() {
        // split links and other Delta = 0 cases
        return Ok(BurauAlexander {
            value: TPoly::zero(),
            unit_normalized: false,
        });
    }
    let norm = LaurentPoly2::from_terms((0..k as i64).map(|e| (e, 0, BigInt::from(1))));
    let quot = div_exact_t(&d, &norm).ok_or_else(|| {
        Error::DegeneratePresentation(format!(
            "det(psi - 1) = {} is not divisible by 1 + t + ... + t^{}",
            d.render("t", "?"),
            k - 1
        ))
    })?;
    if b.components() != 1 {
        return Ok(BurauAlexander {
            value: quot,
            unit_normalized: false,
        });
    }
    // symmetric representative with Delta(1) = 1
    let exps: Vec<i64> = quot.terms().map(|(e, _, _)| e).collect();
    let (lo, hi) = (*exps.iter().min().unwrap(), *exps.iter().max().unwrap());
    if (lo + hi) % 2 != 0 {
        return Ok(BurauAlexander {
            value: quot,
            unit_normalized: false,
        });
    }
    let sym = quot.shifted(-(lo + hi) / 2, 0);
    let at_one: BigInt = sym.terms().map(|(_, _, c)| c.clone()).sum();
    if at_one == BigInt::from(1) {
        Ok(BurauAlexander {
            value: sym,
            unit_normalized: true,
        })
    } else if at_one == BigInt::from(-1) {
        Ok(BurauAlexander {
            value: sym.neg(),
            unit_normalized: true,
        })
    } else {
        Ok(BurauAlexander {
            value: sym,
            unit_normalized: false,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::parse_braid;

    fn tp(terms: &[(i64, i64)]) -> TPoly {
        LaurentPoly2::from_terms(terms.iter().map(|&(e, c)| (e, 0, BigInt::from(c))))
    }

    #[test]
    fn burau_braid_relations() {
        for k in 3..=4 {
            for i in 1..k - 1 {
                let lhs = mat_mul(
                    &mat_mul(
                        &burau_generator(k, i, true),
                        &burau_generator(k, i + 1, true),
                    ),
                    &burau_generator(k, i, true),
                );
                let rhs = mat_mul(
                    &mat_mul(
                        &burau_generator(k, i + 1, true),
                        &burau_generator(k, i, true),
                    ),
                    &burau_generator(k, i + 1, true),
                );
                assert_eq!(lhs, rhs, "braid relation k={k} i={i}");
            }
            for i in 1..k {
                let prod = mat_mul(&burau_generator(k, i, true), &burau_generator(k, i, false));
                assert_eq!(prod, mat_identity(k - 1), "inverse k={k} i={i}");
            }
        }
        // far commutation in B4
        let lhs = mat_mul(&burau_generator(4, 1, true), &burau_generator(4, 3, true));
        let rhs = mat_mul(&burau_generator(4, 3, true), &burau_generator(4, 1, true));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn unknot_and_trefoil() {
        assert!(burau_alexander(&BraidWord::empty(1))
            .unwrap()
            .value
            .is_one());
        // unknot presented in B2
        let u = burau_alexander(&parse_braid("s1").unwrap()).unwrap();
        assert!(u.value.is_one());
        let tre = burau_alexander(&parse_braid("s1 s1 s1").unwrap()).unwrap();
        assert_eq!(tre.value, tp(&[(-1, 1), (0, -1), (1, 1)]));
        assert!(tre.unit_normalized);
    }

    #[test]
    fn figure_eight() {
        let f8 = burau_alexander(&parse_braid("s1 s2^-1 s1 s2^-1").unwrap()).unwrap();
        assert_eq!(f8.value, tp(&[(-1, -1), (0, 3), (1, -1)]));
    }

    #[test]
    fn delta_one_is_pm_one_for_knots() {
        for text in ["s1 s1 s1", "s1 s2^-1 s1 s2^-1", "s1 s1 s1 s1 s1"] {
            let b = parse_braid(text).unwrap();
            let a = burau_alexander(&b).unwrap();
            assert!(a.unit_normalized, "knot {text} should normalize");
            let at_one: BigInt = a.value.terms().map(|(_, _, c)| c.clone()).sum();
            assert_eq!(at_one, BigInt::from(1));
        }
    }

    #[test]
    fn split_link_vanishes() {
        // 3-strand identity braid closes to a 3-component unlink
        let b = BraidWord::empty(3);
        let a = burau_alexander(&b).unwrap();
        assert!(a.value.is_zero());
    }
}
