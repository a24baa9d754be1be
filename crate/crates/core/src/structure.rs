//! Verifiers for list structure: homogeneous Gray adjacency, suffix
//! partitioning, tail partitioning and recursive tail partitioning.
//!
//! Tail lengths rank words for the tail checks: the tail `01^m` has length
//! `m + 1`, and tail-less words (`1^n`) get rank 0 and form their own group.

use std::collections::{BTreeMap, HashSet};

use crate::error::{Error, Result};
use crate::word::BinaryWord;

pub const DISTINCT: &str = "distinct";
pub const TRANSPOSITION: &str = "transposition";
pub const HOMOGENEOUS: &str = "homogeneous";
pub const SUFFIX_PARTITIONED: &str = "suffix_partitioned";
pub const TAIL_PARTITIONED: &str = "tail_partitioned";
pub const RT_PARTITIONED: &str = "rt_partitioned";

/// Named boolean results plus the earliest list index witnessing a failure.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CheckReport {
    pub results: BTreeMap<&'static str, bool>,
    pub first_violation: Option<usize>,
    violations: BTreeMap<&'static str, usize>,
}

impl CheckReport {
    fn record(&mut self, name: &'static str, violation: Option<usize>) {
        self.results.insert(name, violation.is_none());
        if let Some(v) = violation {
            self.violations.insert(name, v);
            self.first_violation = Some(self.first_violation.map_or(v, |f| f.min(v)));
        }
    }

    pub fn passed(&self) -> bool {
        self.results.values().all(|&ok| ok)
    }

    /// Result of one named check; `None` if it was not run.
    pub fn get(&self, name: &str) -> Option<bool> {
        self.results.get(name).copied()
    }

    /// Earliest index witnessing failure of one named check.
    pub fn violation(&self, name: &str) -> Option<usize> {
        self.violations.get(name).copied()
    }

    /// Merges another report into this one.
    pub fn merge(&mut self, other: CheckReport) {
        for (name, ok) in other.results {
            self.record(
                name,
                if ok {
                    None
                } else {
                    other.violations.get(name).copied()
                },
            );
        }
    }

    /// The report restricted to the named checks.
    pub fn restrict(&self, names: &[&str]) -> CheckReport {
        let mut out = CheckReport::default();
        for (&name, &ok) in self.results.iter().filter(|(n, _)| names.contains(n)) {
            out.record(name, if ok { None } else { self.violation(name) });
        }
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TailDirection {
    Increasing,
    Decreasing,
    /// Every word has the same tail (including the empty list).
    Both,
    Neither,
}

impl TailDirection {
    pub fn is_partitioned(self) -> bool {
        self != TailDirection::Neither
    }
}

fn tail_rank(w: &BinaryWord) -> usize {
    w.tail().map_or(0, |t| t.len())
}

/// Distinctness and single homogeneous transposition between neighbours.
///
/// The report carries three checks: `distinct`, `transposition` (each
/// neighbouring pair differs by swapping one 1 with one 0) and
/// `homogeneous` (that swap has no 1 between its positions).
pub fn is_homogeneous_gray(list: &[BinaryWord]) -> Result<CheckReport> {
    if let Some(first) = list.first() {
        if let Some(index) = list.iter().position(|w| w.len() != first.len()) {
            return Err(Error::MixedList {
                what: "lengths",
                index,
            });
        }
        if let Some(index) = list.iter().position(|w| w.weight() != first.weight()) {
            return Err(Error::MixedList {
                what: "weights",
                index,
            });
        }
    }

    let mut seen = HashSet::with_capacity(list.len());
    let repeat = list.iter().position(|w| !seen.insert(w));

    let mut not_transposition = None;
    let mut not_homogeneous = None;
    for (i, pair) in list.windows(2).enumerate() {
        match pair[0].transposition_to(&pair[1]) {
            None => {
                not_transposition.get_or_insert(i + 1);
                not_homogeneous.get_or_insert(i + 1);
            }
            Some(m) if !pair[0].is_homogeneous(m) => {
                not_homogeneous.get_or_insert(i + 1);
            }
            Some(_) => {}
        }
    }

    let mut report = CheckReport::default();
    report.record(DISTINCT, repeat);
    report.record(TRANSPOSITION, not_transposition);
    report.record(HOMOGENEOUS, not_homogeneous);
    Ok(report)
}

fn suffix_violation(list: &[BinaryWord]) -> Option<usize> {
    // A block for some suffix is broken at `t` exactly when the shortest
    // suffix on which `list[t]` departs from `list[t-1]` already occurred.
    let mut seen = HashSet::new();
    for t in 1..list.len() {
        let prev = &list[t - 1];
        for s in 1..=prev.len() {
            seen.insert(prev.suffix(s));
        }
        let cur = &list[t];
        let split = prev.common_suffix_len(cur) + 1;
        if split <= cur.len().min(prev.len()) && seen.contains(&cur.suffix(split)) {
            return Some(t);
        }
    }
    None
}

/// Words sharing any suffix must form one contiguous block.
pub fn is_suffix_partitioned(list: &[BinaryWord]) -> CheckReport {
    let mut report = CheckReport::default();
    report.record(SUFFIX_PARTITIONED, suffix_violation(list));
    report
}

/// Direction of tail partitioning, and on failure the index where the
/// offending block starts.
fn direction_of(ranks: &[usize]) -> (TailDirection, Option<usize>) {
    // (rank, start index) per maximal block of equal ranks
    let mut blocks: Vec<(usize, usize)> = Vec::new();
    for (i, &r) in ranks.iter().enumerate() {
        if blocks.last().is_none_or(|&(last, _)| last != r) {
            blocks.push((r, i));
        }
    }
    if blocks.len() <= 1 {
        return (TailDirection::Both, None);
    }
    let increasing = blocks[1].0 > blocks[0].0;
    for pair in blocks.windows(2) {
        if (pair[1].0 > pair[0].0) != increasing {
            return (TailDirection::Neither, Some(pair[1].1));
        }
    }
    if increasing {
        (TailDirection::Increasing, None)
    } else {
        (TailDirection::Decreasing, None)
    }
}

/// Whether tail lengths are monotone along the list with each length in
/// one contiguous block. Gaps between lengths are allowed.
pub fn tail_partition_direction(list: &[BinaryWord]) -> TailDirection {
    let ranks: Vec<usize> = list.iter().map(tail_rank).collect();
    direction_of(&ranks).0
}

/// Top-level tail partitioning as a report; the witness is the start of the
/// first block that breaks monotonicity or repeats a tail length.
pub fn is_tail_partitioned(list: &[BinaryWord]) -> CheckReport {
    let ranks: Vec<usize> = list.iter().map(tail_rank).collect();
    let mut report = CheckReport::default();
    report.record(TAIL_PARTITIONED, direction_of(&ranks).1);
    report
}

fn rt_violation(list: &[(usize, BinaryWord)]) -> Option<usize> {
    let ranks: Vec<usize> = list.iter().map(|(_, w)| tail_rank(w)).collect();
    if let (TailDirection::Neither, at) = direction_of(&ranks) {
        return at.map(|i| list[i].0);
    }
    let mut groups: BTreeMap<usize, Vec<(usize, BinaryWord)>> = BTreeMap::new();
    for ((index, w), rank) in list.iter().zip(ranks) {
        // tail-less words are all 1^n: nothing left to partition
        if rank == 0 {
            continue;
        }
        groups
            .entry(rank)
            .or_default()
            .push((*index, w.prefix(w.len() - rank)));
    }
    groups.values().filter_map(|g| rt_violation(g)).min()
}

/// Recursive tail partitioning: the list is tail partitioned in one
/// direction, and each tail group with its tail erased is again recursively
/// tail partitioned (directions may differ between levels and groups).
pub fn is_rt_partitioned(list: &[BinaryWord]) -> CheckReport {
    let indexed: Vec<(usize, BinaryWord)> = list.iter().cloned().enumerate().collect();
    let mut report = CheckReport::default();
    report.record(RT_PARTITIONED, rt_violation(&indexed));
    report
}

/// Homogeneous suffix-partitioned Gray code implies r-t partitioned.
/// Returns the implication's truth value on `list`.
pub fn suffix_gray_implies_rt(list: &[BinaryWord]) -> bool {
    let antecedent =
        is_homogeneous_gray(list).is_ok_and(|r| r.passed()) && is_suffix_partitioned(list).passed();
    !antecedent || is_rt_partitioned(list).passed()
}

/// Calls `visit` on every ordering of `words` that is a homogeneous,
/// suffix-partitioned Gray code (a Hamilton path in the homogeneous
/// transposition graph with suffix-contiguity pruning). `visit` returns
/// `false` to stop early. Returns the number of orderings visited.
///
/// Exponential; meant for sets of a few dozen words.
pub fn for_each_suffix_partitioned_gray_code<F>(words: &[BinaryWord], mut visit: F) -> usize
where
    F: FnMut(&[BinaryWord]) -> bool,
{
    let n = words.len();
    if n == 0 {
        visit(&[]);
        return 1;
    }
    let neighbours: Vec<Vec<usize>> = (0..n)
        .map(|a| {
            (0..n)
                .filter(|&b| {
                    words[a]
                        .transposition_to(&words[b])
                        .is_some_and(|m| words[a].is_homogeneous(m))
                })
                .collect()
        })
        .collect();

    struct Search<'a, F> {
        words: &'a [BinaryWord],
        neighbours: Vec<Vec<usize>>,
        used: Vec<bool>,
        path: Vec<BinaryWord>,
        visit: F,
        count: usize,
        stop: bool,
    }

    impl<F: FnMut(&[BinaryWord]) -> bool> Search<'_, F> {
        fn extends_partition(&self, next: &BinaryWord) -> bool {
            let Some(prev) = self.path.last() else {
                return true;
            };
            // the first suffix length where prev and next disagree must be new
            let s = prev.common_suffix_len(next) + 1;
            s > next.len() || !self.path.iter().any(|w| w.same_suffix(next, s))
        }

        fn go(&mut self, at: usize) {
            if self.stop {
                return;
            }
            if self.path.len() == self.words.len() {
                self.count += 1;
                self.stop = !(self.visit)(&self.path);
                return;
            }
            for idx in 0..self.neighbours[at].len() {
                let b = self.neighbours[at][idx];
                if self.used[b] || !self.extends_partition(&self.words[b]) {
                    continue;
                }
                self.used[b] = true;
                self.path.push(self.words[b].clone());
                self.go(b);
                self.path.pop();
                self.used[b] = false;
                if self.stop {
                    return;
                }
            }
        }
    }

    let mut search = Search {
        words,
        neighbours,
        used: vec![false; n],
        path: Vec::with_capacity(n),
        visit: &mut visit,
        count: 0,
        stop: false,
    };
    for (start, word) in words.iter().enumerate() {
        search.used[start] = true;
        search.path.push(word.clone());
        search.go(start);
        search.path.pop();
        search.used[start] = false;
        if search.stop {
            break;
        }
    }
    search.count
}
