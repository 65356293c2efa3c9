//! Deliberately naive reference checks for small graphs.

use thiserror::Error;

use crate::graph::Graph;

pub const MAX_ORACLE_VERTICES: usize = 16;
pub const MAX_ORACLE_COLORS: usize = 5;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("graph has {0} vertices; oracles accept at most {MAX_ORACLE_VERTICES}")]
    TooLarge(usize),
    #[error("max_k = {0} exceeds {MAX_ORACLE_COLORS}")]
    TooManyColors(usize),
}

fn guard(g: &Graph) -> Result<(), OracleError> {
    if g.n() > MAX_ORACLE_VERTICES {
        Err(OracleError::TooLarge(g.n()))
    } else {
        Ok(())
    }
}

/// Smallest `k <= max_k` admitting a proper `k`-coloring, by exhaustive search.
/// Deleted vertices are ignored.
pub fn chromatic_number_bruteforce(g: &Graph, max_k: usize) -> Result<Option<usize>, OracleError> {
    guard(g)?;
    if max_k > MAX_ORACLE_COLORS {
        return Err(OracleError::TooManyColors(max_k));
    }
    let vertices: Vec<usize> = g.live_vertices().collect();
    if vertices.is_empty() {
        return Ok(Some(0));
    }
    let mut color = vec![usize::MAX; g.n()];
    Ok((1..=max_k).find(|&k| extend(g, &vertices, 0, k, 0, &mut color)))
}

// Assigns colors in vertex order; a new color is only opened as `used`, which
// removes permutations of color names.
fn extend(g: &Graph, vertices: &[usize], i: usize, k: usize, used: usize, color: &mut [usize]) -> bool {
    let Some(&v) = vertices.get(i) else {
        return true;
    };
    for c in 0..k.min(used + 1) {
        if g.neighbors(v).iter().all(|&u| color[u] != c) {
            color[v] = c;
            if extend(g, vertices, i + 1, k, used.max(c + 1), color) {
                return true;
            }
            color[v] = usize::MAX;
        }
    }
    false
}

/// Whether `g` has no induced cycle of length at least 4, by enumerating every
/// vertex subset of size 4 or more.
pub fn is_chordal_bruteforce(g: &Graph) -> Result<bool, OracleError> {
    guard(g)?;
    let n = g.n();
    let masks: Vec<u32> = (0..n).map(|v| g.neighbors(v).iter().fold(0u32, |m, &u| m | 1 << u)).collect();
    let live: u32 = g.live_vertices().fold(0, |m, v| m | 1 << v);
    let mut subset: u32 = 0;
    // Enumerate subsets of the live set.
    loop {
        subset = subset.wrapping_sub(live) & live;
        if subset == 0 {
            return Ok(true);
        }
        if subset.count_ones() >= 4 && induces_cycle(&masks, subset) {
            return Ok(false);
        }
    }
}

fn induces_cycle(masks: &[u32], subset: u32) -> bool {
    let mut rest = subset;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        if (masks[v] & subset).count_ones() != 2 {
            return false;
        }
    }
    // 2-regular: a cycle iff connected.
    let start = subset.trailing_zeros() as usize;
    let mut seen = 1u32 << start;
    let mut frontier = seen;
    while frontier != 0 {
        let v = frontier.trailing_zeros() as usize;
        frontier &= frontier - 1;
        let fresh = masks[v] & subset & !seen;
        seen |= fresh;
        frontier |= fresh;
    }
    seen == subset
}
