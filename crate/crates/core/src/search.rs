//! Shared driver for the bounded "least M" searches.

use alloc::vec;
use alloc::vec::Vec;

use crate::Result;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome<W> {
    /// The least `M` for which every admissible sequence has a witness.
    Found(usize),
    /// Every `M ≤ max_M` admits a counterexample; the one for `max_M` is kept.
    Exhausted { last_counterexample: Option<W> },
}

/// Finds `x_0 ∈ U_0, …, x_M ∈ U_M` with `step(x_j, x_{j+1})` for every `j`,
/// returning the chosen indices.
///
/// Depth-first in universe order, so the first chain found is the
/// lexicographically least. Nodes proven to have no continuation are marked
/// and never expanded again.
pub(crate) fn find_chain<T>(
    universes: &[Vec<T>],
    mut step: impl FnMut(&T, &T) -> Result<bool>,
) -> Result<Option<Vec<usize>>> {
    let mut dead: Vec<Vec<bool>> = universes.iter().map(|u| vec![false; u.len()]).collect();
    let mut chain = Vec::new();
    for t in 0..universes.first().map_or(0, Vec::len) {
        if extend(universes, &mut step, 0, t, &mut dead, &mut chain)? {
            return Ok(Some(chain));
        }
    }
    Ok(None)
}

fn extend<T>(
    universes: &[Vec<T>],
    step: &mut impl FnMut(&T, &T) -> Result<bool>,
    level: usize,
    t: usize,
    dead: &mut [Vec<bool>],
    chain: &mut Vec<usize>,
) -> Result<bool> {
    if dead[level][t] {
        return Ok(false);
    }
    chain.push(t);
    if level + 1 == universes.len() {
        return Ok(true);
    }
    for next in 0..universes[level + 1].len() {
        if step(&universes[level][t], &universes[level + 1][next])?
            && extend(universes, step, level + 1, next, dead, chain)?
        {
            return Ok(true);
        }
    }
    chain.pop();
    dead[level][t] = true;
    Ok(false)
}
