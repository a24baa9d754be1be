//! Generator words: start words from which the greedy algorithm lists the
//! whole language. Closed-form generator sets, a brute-force sweep to
//! discover them, and the predicted last word of every greedy run.
//!
//! Closed forms exist for `F_n(2,k)` and for `C_n(p,k)` with integer `p`.

use std::collections::BTreeSet;

use num_bigint::BigUint;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::greedy::greedy_run_with_count;
use crate::language::{Family, LanguageSpec};
use crate::word::{BinaryWord, MoveOrder};

/// Concatenates runs of repeated symbols.
fn runs(parts: &[(&str, usize)]) -> BinaryWord {
    let text: String = parts.iter().map(|(s, count)| s.repeat(*count)).collect();
    BinaryWord::parse(&text).expect("runs are built from 0/1 literals")
}

fn out_of_range(what: String) -> Error {
    Error::InvalidParameters(what)
}

/// `alpha^i_{n,k} = 0^i 1 (01)^{k-1} 0^{n-2k+1-i}`, for `0 <= i <= n-2k+1`.
pub fn alpha_fib(n: usize, k: usize, i: usize) -> Result<BinaryWord> {
    if k == 0 || n + 1 < 2 * k || i > n + 1 - 2 * k {
        return Err(out_of_range(format!(
            "alpha_fib needs k >= 1, n >= 2k-1 and i <= n-2k+1; got n={n}, k={k}, i={i}"
        )));
    }
    Ok(runs(&[
        ("0", i),
        ("1", 1),
        ("01", k - 1),
        ("0", n + 1 - 2 * k - i),
    ]))
}

/// `0^{pj-i} 1^{j-1} 0^i 1 (0^p 1)^{k-j} 0^{n-(p+1)k}` without range checks
/// on `i` (callers need it outside `i <= p-1`).
fn alpha_prefix_raw(n: usize, p: usize, k: usize, i: usize, j: usize) -> BinaryWord {
    let block = format!("{}1", "0".repeat(p));
    runs(&[
        ("0", p * j - i),
        ("1", j - 1),
        ("0", i),
        ("1", 1),
        (&block, k - j),
        ("0", n - (p + 1) * k),
    ])
}

/// `alpha^{i,j}_{n,k}` of the prefix family, `0 <= i <= p-1`, `1 <= j <= k`,
/// for integer `p >= 1`.
pub fn alpha_prefix(n: usize, p: usize, k: usize, i: usize, j: usize) -> Result<BinaryWord> {
    if p == 0 || i >= p || j == 0 || j > k || (p + 1) * k > n {
        return Err(out_of_range(format!(
            "alpha_prefix needs p >= 1, i < p, 1 <= j <= k, (p+1)k <= n; got n={n}, p={p}, k={k}, i={i}, j={j}"
        )));
    }
    Ok(alpha_prefix_raw(n, p, k, i, j))
}

/// `1^k 0^{n-k}`, the `p = 0` counterpart of the alpha words.
pub fn alpha_prefix_p0(n: usize, k: usize) -> Result<BinaryWord> {
    if k > n {
        return Err(out_of_range(format!(
            "alpha_prefix_p0 needs k <= n; got n={n}, k={k}"
        )));
    }
    Ok(runs(&[("1", k), ("0", n - k)]))
}

/// `beta^i_{n,k} = 0^i 1^k 0^{n-i-k}`.
pub fn beta_prefix(n: usize, k: usize, i: usize) -> Result<BinaryWord> {
    if i + k > n {
        return Err(out_of_range(format!(
            "beta_prefix needs i + k <= n; got n={n}, k={k}, i={i}"
        )));
    }
    Ok(runs(&[("0", i), ("1", k), ("0", n - i - k)]))
}

fn integer_p(spec: &LanguageSpec) -> Result<usize> {
    match spec.family() {
        Family::PrefixConstrained { p } => p
            .to_integer()
            .map(|p| p as usize)
            .ok_or_else(|| Error::Unsupported(format!("no closed form for non-integer p = {p}"))),
        Family::RunConstrained { p: 2 } => Ok(2),
        Family::RunConstrained { p } => Err(Error::Unsupported(format!(
            "no closed form for run bound p = {p}"
        ))),
    }
}

/// The sink word `gamma_{n,k}`: `0^{n-2k}(01)^k` for Fibonacci words
/// (`n >= 2k`), `0^{n-k}1^k` for the prefix family.
pub fn gamma_word(spec: &LanguageSpec) -> Result<BinaryWord> {
    let (n, k) = (spec.n(), spec.k());
    match spec.family() {
        Family::RunConstrained { p: 2 } => {
            if n < 2 * k {
                return Err(out_of_range(format!(
                    "gamma needs n >= 2k; got n={n}, k={k}"
                )));
            }
            Ok(runs(&[("0", n - 2 * k), ("01", k)]))
        }
        Family::RunConstrained { p } => Err(Error::Unsupported(format!(
            "no gamma word for run bound p = {p}"
        ))),
        Family::PrefixConstrained { .. } => Ok(runs(&[("0", n - k), ("1", k)])),
    }
}

/// The generator set given by closed formulas.
pub fn closed_form_gen_set(spec: &LanguageSpec) -> Result<BTreeSet<BinaryWord>> {
    let (n, k) = (spec.n(), spec.k());
    let p = integer_p(spec)?;
    if k == 0 {
        return Ok(BTreeSet::from([BinaryWord::zeros(n)]));
    }
    let mut set = BTreeSet::new();
    match spec.family() {
        Family::RunConstrained { .. } => {
            if n + 1 < 2 * k {
                return Err(out_of_range(format!("F_{n}(2,{k}) is empty")));
            }
            for i in 0..=n + 1 - 2 * k {
                set.insert(alpha_fib(n, k, i)?);
            }
        }
        Family::PrefixConstrained { .. } if p == 0 => {
            for i in 0..=n - k {
                set.insert(beta_prefix(n, k, i)?);
            }
        }
        Family::PrefixConstrained { .. } => {
            for j in 1..=k {
                for i in 0..p {
                    set.insert(alpha_prefix(n, p, k, i, j)?);
                }
            }
            for i in p * k + 1..=n - k {
                set.insert(beta_prefix(n, k, i)?);
            }
        }
    }
    Ok(set)
}

/// Runs the greedy algorithm from every member and keeps the starts whose
/// run lists the whole language. Runs are spread over the rayon pool.
pub fn brute_force_gen_set(spec: &LanguageSpec, order: MoveOrder) -> BTreeSet<BinaryWord> {
    let members = spec.enumerate();
    let size = BigUint::from(members.len());
    members
        .par_iter()
        .filter(|start| {
            greedy_run_with_count(start, spec, order, &size)
                .expect("enumerated words are members")
                .exhausted_language
        })
        .cloned()
        .collect::<Vec<_>>()
        .into_iter()
        .collect()
}

/// Brute-force and closed-form generator sets side by side.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenSetResult {
    pub brute: BTreeSet<BinaryWord>,
    pub closed: BTreeSet<BinaryWord>,
    pub agree: bool,
    pub cardinality: usize,
}

pub fn compare_gen_sets(spec: &LanguageSpec, order: MoveOrder) -> Result<GenSetResult> {
    let closed = closed_form_gen_set(spec)?;
    let brute = brute_force_gen_set(spec, order);
    Ok(GenSetResult {
        agree: brute == closed,
        cardinality: brute.len(),
        brute,
        closed,
    })
}

/// The last word of the greedy run from `start`.
///
/// Every start other than `gamma` ends at `gamma`; from `gamma` itself the
/// last word depends on the parity of `k` (and, for the prefix family, on
/// whether `n = (p+1)k`). Singleton languages end where they start.
pub fn predict_last_word(spec: &LanguageSpec, start: &BinaryWord) -> Result<BinaryWord> {
    if !spec.contains(start)? {
        return Err(Error::NotAMember(start.to_string()));
    }
    let (n, k) = (spec.n(), spec.k());
    let p = integer_p(spec)?;
    match spec.family() {
        Family::RunConstrained { .. } => {
            if k == 0 || n + 1 == 2 * k {
                return Ok(start.clone());
            }
            let gamma = gamma_word(spec)?;
            if *start != gamma {
                Ok(gamma)
            } else if k % 2 == 0 {
                alpha_fib(n, k, 0)
            } else {
                alpha_fib(n, k, n - 2 * k)
            }
        }
        Family::PrefixConstrained { .. } => {
            if k == 0 {
                return Ok(start.clone());
            }
            let gamma = gamma_word(spec)?;
            let tight = n == (p + 1) * k;
            if *start != gamma {
                Ok(gamma)
            } else if (n, k) == (p + 1, 1) {
                Ok(runs(&[("0", p), ("1", 1)]))
            } else if k % 2 == 1 && !tight {
                beta_prefix(n, k, n - k - 1)
            } else if k % 2 == 1 {
                // k >= 3 odd, n = (p+1)k
                if p == 0 {
                    Ok(runs(&[("1", k)]))
                } else {
                    Ok(alpha_prefix_raw(n, p, k, 1, k - 1))
                }
            } else if p == 0 {
                alpha_prefix_p0(n, k)
            } else {
                Ok(alpha_prefix_raw(n, p, k, 1, k))
            }
        }
    }
}
