//! Weights of the doubled Schur algebra: k entries in N followed by l entries
//! in beta - N. Non-admissible weights are the zero object and are represented
//! by absence (Option::None), never by a sentinel.

use std::fmt;

use crate::coeff::ShiftedInt;
use crate::params::Params;

/// One weight entry. `Nat(n)` has value n; `BetaMinus(n)` has value beta - n.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum WeightEntry {
    Nat(i64),
    BetaMinus(i64),
}

impl WeightEntry {
    /// The integer n; admissibility is n >= 0 for both kinds.
    pub fn offset(&self) -> i64 {
        match *self {
            WeightEntry::Nat(n) | WeightEntry::BetaMinus(n) => n,
        }
    }

    pub fn is_admissible(&self, truncation: Option<i64>) -> bool {
        let n = self.offset();
        n >= 0 && truncation.is_none_or(|m| n <= m)
    }

    /// Add d to the entry's value.
    fn value_add(&self, d: i64) -> WeightEntry {
        match *self {
            WeightEntry::Nat(n) => WeightEntry::Nat(n + d),
            WeightEntry::BetaMinus(n) => WeightEntry::BetaMinus(n - d),
        }
    }

    /// beta - value, exchanging the two kinds.
    fn flip(&self) -> WeightEntry {
        match *self {
            WeightEntry::Nat(n) => WeightEntry::BetaMinus(n),
            WeightEntry::BetaMinus(n) => WeightEntry::Nat(n),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Weight {
    entries: Vec<WeightEntry>,
}

impl Weight {
    /// Build from entries; panics if the Nat block does not precede the
    /// BetaMinus block (segment discipline is a structural invariant).
    pub fn new(entries: Vec<WeightEntry>) -> Self {
        let k = entries
            .iter()
            .take_while(|e| matches!(e, WeightEntry::Nat(_)))
            .count();
        assert!(
            entries[k..]
                .iter()
                .all(|e| matches!(e, WeightEntry::BetaMinus(_))),
            "weight entries must be a Nat block followed by a BetaMinus block"
        );
        Weight { entries }
    }

    /// The distinguished weight 0 = (0,...,0, b-0,...,b-0).
    pub fn zero(k: usize, l: usize) -> Self {
        let mut entries = vec![WeightEntry::Nat(0); k];
        entries.extend(std::iter::repeat_n(WeightEntry::BetaMinus(0), l));
        Weight { entries }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn nat_len(&self) -> usize {
        self.entries
            .iter()
            .take_while(|e| matches!(e, WeightEntry::Nat(_)))
            .count()
    }

    pub fn beta_len(&self) -> usize {
        self.len() - self.nat_len()
    }

    /// 1-based entry access.
    pub fn entry(&self, i: usize) -> WeightEntry {
        self.entries[i - 1]
    }

    pub fn entries(&self) -> &[WeightEntry] {
        &self.entries
    }

    pub fn is_admissible(&self, params: &Params) -> bool {
        self.entries
            .iter()
            .all(|e| e.is_admissible(params.truncation))
    }

    /// Apply sign * power * alpha_i (alpha_i = e_i - e_{i+1}); None exactly
    /// when the result is non-admissible.
    pub fn apply(&self, i: usize, sign: i64, power: i64, params: &Params) -> Option<Weight> {
        let w = self.apply_arith(i, sign, power);
        let ok = w.entry(i).is_admissible(params.truncation)
            && w.entry(i + 1).is_admissible(params.truncation);
        ok.then_some(w)
    }

    /// Same as `apply` without the admissibility check.
    pub fn apply_arith(&self, i: usize, sign: i64, power: i64) -> Weight {
        debug_assert!(i >= 1 && i < self.len(), "rung index out of range");
        let d = sign * power;
        let mut entries = self.entries.clone();
        entries[i - 1] = entries[i - 1].value_add(d);
        entries[i] = entries[i].value_add(-d);
        Weight { entries }
    }

    /// lambda_i - lambda_{i+1} as an integer plus a beta part.
    pub fn entry_diff(&self, i: usize) -> ShiftedInt {
        use WeightEntry::*;
        match (self.entry(i), self.entry(i + 1)) {
            (Nat(a), Nat(b)) => ShiftedInt::new(a - b, 0),
            (Nat(a), BetaMinus(b)) => ShiftedInt::new(a + b, -1),
            (BetaMinus(a), Nat(b)) => ShiftedInt::new(-(a + b), 1),
            (BetaMinus(a), BetaMinus(b)) => ShiftedInt::new(b - a, 0),
        }
    }

    /// The 180-degree rotation: (b - lambda_{k+l}, ..., b - lambda_1).
    pub fn rotate180(&self) -> Weight {
        Weight {
            entries: self.entries.iter().rev().map(|e| e.flip()).collect(),
        }
    }

    /// Prepend r Nat(0) entries and append s BetaMinus(0) entries.
    pub fn pad(&self, r: usize, s: usize) -> Weight {
        let mut entries = vec![WeightEntry::Nat(0); r];
        entries.extend(self.entries.iter().copied());
        entries.extend(std::iter::repeat_n(WeightEntry::BetaMinus(0), s));
        Weight { entries }
    }

    /// Sum of Nat values minus sum of BetaMinus offsets; invariant under every
    /// rung, 0 on the zero weight and 1 on the cut weight.
    pub fn excess(&self) -> i64 {
        self.entries
            .iter()
            .map(|e| match *e {
                WeightEntry::Nat(n) => n,
                WeightEntry::BetaMinus(n) => -n,
            })
            .sum()
    }

    /// True when every F_i 1_nu is the zero object: the precondition for
    /// scalar evaluation. Holds exactly for (0,...,0,c | b-0,...,b-0).
    pub fn annihilates_all_f(&self, params: &Params) -> bool {
        (1..self.len()).all(|i| self.apply(i, -1, 1, params).is_none())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        let k = self.nat_len();
        for (idx, e) in self.entries.iter().enumerate() {
            if idx > 0 {
                write!(f, "{}", if idx == k { "|" } else { "," })?;
            }
            match e {
                WeightEntry::Nat(n) => write!(f, "{n}")?,
                WeightEntry::BetaMinus(0) => write!(f, "b")?,
                WeightEntry::BetaMinus(n) => write!(f, "b-{n}")?,
            }
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(nat: &[i64], beta: &[i64]) -> Weight {
        let mut e: Vec<WeightEntry> = nat.iter().map(|&n| WeightEntry::Nat(n)).collect();
        e.extend(beta.iter().map(|&n| WeightEntry::BetaMinus(n)));
        Weight::new(e)
    }

    #[test]
    fn apply_alpha_at_interface() {
        // (0 | b-0) + alpha_1 -> (1 | b-1)
        let p = Params::default();
        let got = w(&[0], &[0]).apply(1, 1, 1, &p).unwrap();
        assert_eq!(got, w(&[1], &[1]));
    }

    #[test]
    fn apply_alpha_nat_block() {
        let p = Params::default();
        assert_eq!(w(&[1, 1], &[]).apply(1, 1, 1, &p).unwrap(), w(&[2, 0], &[]));
        // (0,0) - alpha_1 is inadmissible
        assert!(w(&[0, 0], &[]).apply(1, -1, 1, &p).is_none());
    }

    #[test]
    fn truncation_kills_large_entries() {
        let p = Params::default().sl(2);
        // (2,0) + alpha_1 -> entry 3 > m
        assert!(w(&[2, 0], &[]).apply(1, 1, 1, &p).is_none());
        // offsets above m die in the beta block too: b-2 -> b-3
        assert!(w(&[0], &[2, 0]).apply(2, -1, 1, &p).is_none());
        assert!(w(&[0], &[2, 0]).apply(2, 1, 1, &p).is_some());
    }

    #[test]
    fn entry_diff_beta_parts() {
        let z = w(&[0, 0], &[0, 0]);
        assert_eq!(z.entry_diff(1), ShiftedInt::new(0, 0));
        assert_eq!(z.entry_diff(2), ShiftedInt::new(0, -1));
        assert_eq!(z.entry_diff(3), ShiftedInt::new(0, 0));
        let v = w(&[3, 1], &[2]);
        assert_eq!(v.entry_diff(1), ShiftedInt::new(2, 0));
        assert_eq!(v.entry_diff(2), ShiftedInt::new(3, -1));
    }

    #[test]
    fn rotate_is_involution_and_fixes_zero() {
        let z = Weight::zero(2, 3);
        assert_eq!(z.rotate180(), Weight::zero(3, 2));
        let v = w(&[2, 0], &[1, 3]);
        assert_eq!(v.rotate180().rotate180(), v);
    }

    #[test]
    fn annihilating_weights() {
        let p = Params::default();
        assert!(Weight::zero(2, 2).annihilates_all_f(&p));
        assert!(w(&[0, 1], &[0]).annihilates_all_f(&p));
        assert!(w(&[0, 2], &[0]).annihilates_all_f(&p));
        assert!(!w(&[1, 1], &[0]).annihilates_all_f(&p));
        assert!(!w(&[1, 0], &[0]).annihilates_all_f(&p));
    }

    #[test]
    fn display_format() {
        assert_eq!(w(&[0, 1], &[1, 0]).to_string(), "(0,1|b-1,b)");
        assert_eq!(w(&[1], &[]).to_string(), "(1)");
    }
}
