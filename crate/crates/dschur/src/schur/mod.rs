//! The doubled Schur algebra as data: weights, rung words, linear
//! combinations, and the local relation rewrites.

mod element;
mod rewrite;
mod weight;
mod word;

pub use element::{idempotents_e1_e2, Element};
pub use rewrite::{
    commute_adjacent, merge_powers, push_e_early, push_f_early, serre_gamma, Commute,
};
pub use weight::{Weight, WeightEntry};
pub use word::{Dir, Rung, Word};
