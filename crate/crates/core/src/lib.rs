//! Greedy homogeneous-transposition Gray codes for constrained binary words.
//!
//! Two families of fixed-weight words are covered: run-constrained words
//! `F_n(p,k)` (no `p` consecutive ones; `p = 2` gives Fibonacci words) and
//! prefix-constrained words `C_n(p,k)` (every prefix has at least `p` times
//! as many zeros as ones; `p = 1` gives Dyck words, and `p` may be any
//! nonnegative rational).
//!
//! The crate provides:
//!
//! * [`word`]: packed binary words, tails, homogeneous transpositions;
//! * [`language`]: membership, lexicographic enumeration, exact counts;
//! * [`greedy`]: the greedy Gray code algorithm;
//! * [`structure`]: verifiers for Gray adjacency and suffix / tail partitions;
//! * [`generators`]: closed-form and brute-force generator sets, and
//!   last-word prediction.

pub mod error;
pub mod generators;
pub mod greedy;
pub mod language;
pub mod rational;
pub mod structure;
pub mod word;

pub use error::{Error, Result};
pub use generators::{
    brute_force_gen_set, closed_form_gen_set, compare_gen_sets, gamma_word, predict_last_word,
    GenSetResult,
};
pub use greedy::{greedy_run, greedy_step, GreedyTrace};
pub use language::{
    binomial, count_prefix_formula, count_run_constrained, fuss_catalan, Family, LanguageSpec,
};
pub use rational::Rational;
pub use structure::{
    is_homogeneous_gray, is_rt_partitioned, is_suffix_partitioned, is_tail_partitioned,
    suffix_gray_implies_rt, tail_partition_direction, CheckReport, TailDirection,
};
pub use word::{BinaryWord, Move, MoveOrder, Tail};
