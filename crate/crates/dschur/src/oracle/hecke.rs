//! Independent Homfly-Pt oracle: the Hecke algebra of type A in the
//! permutation basis with the quadratic relation T^2 = (q^-1 - q) T + 1, and
//! the Ocneanu trace computed on the inductive (one-top-generator) basis.
//!
//! Constants are not imported from anywhere: the trace parameter and the
//! writhe unit are forced by requiring invariance under both Markov moves
//! (tau = Q^-1/[beta], unit = Q per positive crossing), and the skein and
//! Markov self-checks validate the construction from scratch.

use std::collections::BTreeMap;

use crate::braid::BraidWord;
use crate::coeff::{qint, Beta, RationalFn, ShiftedInt};

type Perm = Vec<u8>;

fn identity(k: usize) -> Perm {
    (0..k as u8).collect()
}

/// Linear combination of permutation basis elements T_w of H_k.
#[derive(Clone, PartialEq, Debug)]
pub struct HeckeElement {
    k: usize,
    terms: BTreeMap<Perm, RationalFn>,
}

impl HeckeElement {
    pub fn one(k: usize) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(identity(k), RationalFn::one());
        HeckeElement { k, terms }
    }

    fn zero(k: usize) -> Self {
        HeckeElement {
            k,
            terms: BTreeMap::new(),
        }
    }

    fn add_term(&mut self, w: Perm, c: RationalFn) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(w) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let s = o.get().add(&c);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    /// q^-1 - q.
    fn z() -> RationalFn {
        RationalFn::monomial(-1, 0).sub(&RationalFn::monomial(1, 0))
    }

    /// Right multiplication by T_i (0-based generator swapping positions
    /// i, i+1): T_w T_i = T_{w s_i} if the length goes up, otherwise
    /// T_{w s_i} + (q^-1 - q) T_w.
    pub fn mul_gen(&self, i: usize, inverse: bool) -> HeckeElement {
        let mut out = HeckeElement::zero(self.k);
        for (w, c) in &self.terms {
            let mut ws = w.clone();
            ws.swap(i, i + 1);
            if w[i] < w[i + 1] {
                out.add_term(ws, c.clone());
                if inverse {
                    // T^-1 = T - (q^-1 - q)
                    out.add_term(w.clone(), c.mul(&Self::z()).neg());
                }
            } else {
                out.add_term(ws, c.clone());
                if !inverse {
                    out.add_term(w.clone(), c.mul(&Self::z()));
                }
            }
        }
        out
    }

    /// Left multiplication by T_i.
    fn mul_gen_left(&self, i: usize) -> HeckeElement {
        let mut out = HeckeElement::zero(self.k);
        for (w, c) in &self.terms {
            let mut sw = w.clone();
            let pi = sw.iter().position(|&v| v == i as u8).unwrap();
            let pj = sw.iter().position(|&v| v == i as u8 + 1).unwrap();
            sw.swap(pi, pj);
            if pi < pj {
                out.add_term(sw, c.clone());
            } else {
                out.add_term(sw, c.clone());
                out.add_term(w.clone(), c.mul(&Self::z()));
            }
        }
        out
    }

    /// The image of a braid word under T: B_k -> H_k.
    pub fn from_braid(b: &BraidWord) -> HeckeElement {
        let mut acc = HeckeElement::one(b.strands());
        for l in b.letters() {
            acc = acc.mul_gen(l.index - 1, !l.positive);
        }
        acc
    }

    pub fn coeff_of_identity(&self) -> RationalFn {
        self.terms
            .get(&identity(self.k))
            .cloned()
            .unwrap_or_else(RationalFn::zero)
    }
}

/// The Markov trace with parameter tau: tr(1) = 1, tr(x T_{n} y) =
/// tau tr(x y) for x, y in the subalgebra without the top generator.
pub fn ocneanu_trace(elt: &HeckeElement, tau: &RationalFn) -> RationalFn {
    if elt.k <= 1 {
        return elt.coeff_of_identity();
    }
    let top = elt.k - 1;
    let mut reduced = HeckeElement::zero(elt.k - 1);
    for (w, c) in &elt.terms {
        if w[top] == top as u8 {
            reduced.add_term(w[..top].to_vec(), c.clone());
            continue;
        }
        // w = d_j u with d_j = s_j s_{j+1} ... s_{top-1} and u fixing the
        // last point; T_w = (T_j ... T_{top-2}) T_{top-1} T_u, so one Markov
        // step leaves (T_j ... T_{top-2}) T_u in H_{k-1}
        let j = w[top] as usize;
        let u: Perm = w
            .iter()
            .map(|&v| {
                let v = v as usize;
                if v < j {
                    v as u8
                } else if v == j {
                    top as u8
                } else {
                    (v - 1) as u8
                }
            })
            .collect();
        debug_assert_eq!(u[top], top as u8);
        let mut x = HeckeElement::zero(elt.k - 1);
        x.add_term(u[..top].to_vec(), c.mul(tau));
        for i in (j..top.saturating_sub(1)).rev() {
            x = x.mul_gen_left(i);
        }
        for (wu, cu) in x.terms {
            reduced.add_term(wu, cu);
        }
    }
    ocneanu_trace(&reduced, tau)
}

/// Trace parameter forced by Markov II in both directions:
/// tau = (q - q^-1) / (Q^2 - 1) = Q^-1 / [beta].
pub fn trace_parameter() -> RationalFn {
    RationalFn::monomial(0, -1)
        .div(&qint(ShiftedInt::beta(), Beta::Generic))
        .expect("[beta] is nonzero")
}

/// Reduced two-variable Homfly-Pt from the Hecke algebra:
/// [beta]^{k-1} Q^{w} tr(T(b)), normalized so the unknot gives 1.
pub fn hecke_homfly(b: &BraidWord) -> RationalFn {
    let k = b.strands();
    let tau = trace_parameter();
    let tr = ocneanu_trace(&HeckeElement::from_braid(b), &tau);
    let delta = qint(ShiftedInt::beta(), Beta::Generic);
    let writhe_unit = RationalFn::monomial(0, b.writhe());
    delta.pow(k as u32 - 1).mul(&writhe_unit).mul(&tr)
}
