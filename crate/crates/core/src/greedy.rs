//! The greedy Gray code algorithm: starting from a word of the language,
//! repeatedly apply the first homogeneous transposition (in move order)
//! whose result is a language member not yet listed; stop when none exists.

use std::collections::HashSet;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::language::LanguageSpec;
use crate::word::{BinaryWord, MoveOrder};

/// The list produced by one greedy run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GreedyTrace {
    pub words: Vec<BinaryWord>,
    /// `true` iff the run listed every word of the language.
    pub exhausted_language: bool,
    pub move_order: MoveOrder,
}

impl GreedyTrace {
    pub fn first(&self) -> &BinaryWord {
        &self.words[0]
    }

    pub fn last(&self) -> &BinaryWord {
        self.words
            .last()
            .expect("a trace always holds its start word")
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }
}

/// One step of the algorithm from `current`. `None` when every
/// homogeneous neighbour is either outside the language or visited.
pub fn greedy_step(
    current: &BinaryWord,
    visited: &HashSet<BinaryWord>,
    spec: &LanguageSpec,
    order: MoveOrder,
) -> Option<BinaryWord> {
    current.homogeneous_moves(order).into_iter().find_map(|m| {
        let next = current
            .apply_move(m.one, m.zero)
            .expect("homogeneous moves are always applicable");
        (spec.accepts(&next) && !visited.contains(&next)).then_some(next)
    })
}

/// Runs the algorithm from `start` until it gets stuck.
pub fn greedy_run(
    start: &BinaryWord,
    spec: &LanguageSpec,
    order: MoveOrder,
) -> Result<GreedyTrace> {
    greedy_run_with_count(start, spec, order, &spec.cardinality())
}

/// As [`greedy_run`], with the language size supplied by the caller (for
/// sweeps that run many starts over one language).
pub fn greedy_run_with_count(
    start: &BinaryWord,
    spec: &LanguageSpec,
    order: MoveOrder,
    language_size: &BigUint,
) -> Result<GreedyTrace> {
    if !spec.contains(start)? {
        return Err(Error::NotAMember(start.to_string()));
    }
    let mut visited = HashSet::new();
    visited.insert(start.clone());
    let mut words = vec![start.clone()];
    while let Some(next) = greedy_step(words.last().unwrap(), &visited, spec, order) {
        visited.insert(next.clone());
        words.push(next);
        debug_assert_eq!(visited.len(), words.len());
    }
    Ok(GreedyTrace {
        exhausted_language: BigUint::from(words.len()) == *language_size,
        words,
        move_order: order,
    })
}
