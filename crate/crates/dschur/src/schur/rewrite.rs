//! Local relation rewrites on words: divided-power merging, far/opposite
//! commutation, the EF straightening expansions, and the higher-Serre
//! expansion coefficients.

use crate::coeff::{qbin, RationalFn, ShiftedInt};
use crate::error::{Error, Result};
use crate::params::Params;
use crate::schur::word::{Dir, Rung, Word};

/// Merge adjacent same-direction same-index divided powers:
/// X^(a) X^(b) = qbin(a+b, a) X^(a+b). Ok(None) when the pair is ineligible.
pub fn merge_powers(
    word: &Word,
    pos: usize,
    params: &Params,
) -> Result<Option<(RationalFn, Word)>> {
    let rungs = word.rungs();
    if pos + 1 >= rungs.len() {
        return Ok(None);
    }
    let (r1, r2) = (rungs[pos], rungs[pos + 1]);
    if r1.dir != r2.dir || r1.index != r2.index {
        return Ok(None);
    }
    let merged = r1.power as u64 + r2.power as u64;
    if merged > params.max_power as u64 {
        return Err(Error::PowerBound {
            power: merged,
            max: params.max_power,
        });
    }
    let coeff = qbin(
        ShiftedInt::int(merged as i64),
        r1.power.min(r2.power),
        params.beta,
    );
    let mut new_rungs = rungs.to_vec();
    new_rungs[pos] = Rung::new(r1.dir, r1.index, merged as u32);
    new_rungs.remove(pos + 1);
    Ok(Some((
        coeff,
        Word::new_unchecked(word.source().clone(), new_rungs),
    )))
}

/// Outcome of an attempted commutation of the pair at (pos, pos+1).
#[derive(Clone, Debug, PartialEq)]
pub enum Commute {
    /// Pair not covered by relations (2)-(3): no-op signal.
    Ineligible,
    /// The swap exposes a non-admissible intermediate, so the word itself is
    /// the zero object.
    Zero,
    Swapped(Word),
}

/// Exchange an adjacent pair when the relations commute it exactly:
/// same direction with |i-j| > 1, or opposite directions with i != j.
pub fn commute_adjacent(word: &Word, pos: usize, params: &Params) -> Commute {
    let rungs = word.rungs();
    if pos + 1 >= rungs.len() {
        return Commute::Ineligible;
    }
    let (r1, r2) = (rungs[pos], rungs[pos + 1]);
    let eligible = if r1.dir == r2.dir {
        (r1.index as i64 - r2.index as i64).abs() > 1
    } else {
        r1.index != r2.index
    };
    if !eligible {
        return Commute::Ineligible;
    }
    let mut new_rungs = rungs.to_vec();
    new_rungs.swap(pos, pos + 1);
    match Word::new(word.source().clone(), new_rungs, params) {
        Some(w) => Commute::Swapped(w),
        None => Commute::Zero,
    }
}

fn straighten(
    word: &Word,
    pos: usize,
    params: &Params,
    first: Dir,
) -> Option<Vec<(RationalFn, Word)>> {
    let rungs = word.rungs();
    if pos + 1 >= rungs.len() {
        return None;
    }
    let (r1, r2) = (rungs[pos], rungs[pos + 1]);
    if r1.dir != first || r2.dir != first.flip() || r1.index != r2.index {
        return None;
    }
    let i = r1.index;
    let lam = word.weight_before(pos);
    let diff = lam.entry_diff(i);
    // application order [E^(a), F^(b)] is the operator F^(b) E^(a) 1_lam,
    // and [F^(b), E^(a)] is E^(a) F^(b) 1_lam
    let (a, b) = match first {
        Dir::E => (r1.power, r2.power),
        Dir::F => (r2.power, r1.power),
    };
    let top = match first {
        // qbin(-a + b - lam_i + lam_{i+1}, t)
        Dir::E => ShiftedInt::new(b as i64 - a as i64 - diff.base, -diff.beta_part),
        // qbin(a - b + lam_i - lam_{i+1}, t)
        Dir::F => ShiftedInt::new(a as i64 - b as i64 + diff.base, diff.beta_part),
    };
    let mut out = Vec::new();
    for t in 0..=a.min(b) {
        let coeff = qbin(top, t, params.beta);
        if coeff.is_zero() {
            continue;
        }
        let mut new_rungs: Vec<Rung> = rungs[..pos].to_vec();
        let (p1, p2) = match first {
            Dir::E => (b - t, a - t), // output [F^(b-t), E^(a-t)]
            Dir::F => (a - t, b - t), // output [E^(a-t), F^(b-t)]
        };
        if p1 > 0 {
            new_rungs.push(Rung::new(first.flip(), i, p1));
        }
        if p2 > 0 {
            new_rungs.push(Rung::new(first, i, p2));
        }
        new_rungs.extend_from_slice(&rungs[pos + 2..]);
        if let Some(w) = Word::new(word.source().clone(), new_rungs, params) {
            out.push((coeff, w));
        }
    }
    Some(out)
}

/// Rewrite the application-order pattern [E_i^(a), F_i^(b)] at pos into
/// sum_t qbin(-a+b-lam_i+lam_{i+1}, t) [F_i^(b-t), E_i^(a-t)], dropping dead
/// words. None on pattern mismatch.
pub fn push_f_early(word: &Word, pos: usize, params: &Params) -> Option<Vec<(RationalFn, Word)>> {
    straighten(word, pos, params, Dir::E)
}

/// Mirror expansion for the pattern [F_i^(b), E_i^(a)]:
/// sum_t qbin(a-b+lam_i-lam_{i+1}, t) [E_i^(a-t), F_i^(b-t)].
pub fn push_e_early(word: &Word, pos: usize, params: &Params) -> Option<Vec<(RationalFn, Word)>> {
    straighten(word, pos, params, Dir::F)
}

/// Coefficient of F_1^(m-s) F_2^(n) F_1^(s) in the higher quantum Serre
/// expansion of F_1^(m) F_2^(n):
/// gamma_s = (-1)^(s-(m-n)) qbin(s-1, m-n-1).
pub fn serre_gamma(m: u32, n: u32, s: u32, params: &Params) -> Result<RationalFn> {
    if m < n + 1 || s < m - n || s > m {
        return Err(Error::SerreRange { m, n, s });
    }
    let sign = if (s - (m - n)).is_multiple_of(2) {
        1
    } else {
        -1
    };
    Ok(
        RationalFn::from_int(sign).mul(&qbin(
            ShiftedInt::int(s as i64 - 1),
            m - n - 1,
            params.beta,
        )),
    )
}
