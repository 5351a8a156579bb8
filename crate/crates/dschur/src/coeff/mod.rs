//! Exact arithmetic in the field C(q, q^beta), represented over the integers.

mod gcd;
mod poly;
mod quantum;
mod rational;

pub use poly::LaurentPoly2;
pub use quantum::{qbin, qfact, qint, Beta, ShiftedInt};
pub use rational::RationalFn;
