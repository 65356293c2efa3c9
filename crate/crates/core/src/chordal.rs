//! Perfect elimination ordering of a treewidth-3 chordal completion.
//!
//! The Halin graph is reduced to `K4` with two rules, each of which eliminates
//! one vertex whose remaining neighborhood has been completed to a clique:
//!
//! * `R1`: cycle path `p q r` whose vertices all hang off the same fan or
//!   wheel center `s`. Add `pr`, eliminate `q`.
//! * `R2`: fan with exactly two leaves `p r`, center `s`, and `s`'s third
//!   neighbor `t`. Add `pt` and `rt`, eliminate `s`.
//!
//! Both rules leave a smaller Halin graph, so the walk along the outer cycle
//! can continue until four vertices remain.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Graph;
use crate::recognition::HalinCertificate;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PeoError {
    #[error("malformed certificate: {0}")]
    Malformed(String),
    #[error("no reduction applies with {0} vertices left")]
    Stuck(usize),
    #[error("order is not a permutation of the vertex set")]
    NotPermutation,
    #[error("order is not a perfect elimination ordering")]
    NotPerfect,
    #[error("trace step eliminating {0} does not cover its neighborhood")]
    BadTrace(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Rule {
    R1,
    R2,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reduction {
    pub rule: Rule,
    pub eliminated: usize,
    /// `[p, q, r, s]` for R1 and `[p, r, s, t]` for R2.
    pub clique: [usize; 4],
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeoResult {
    pub order: Vec<usize>,
    /// Added edges as `(min, max)` in the order they were introduced.
    pub fill_edges: Vec<(usize, usize)>,
    pub trace: Vec<Reduction>,
}

impl PeoResult {
    pub fn to_doc(&self) -> PeoDoc {
        PeoDoc { order: self.order.clone(), fill_edges: self.fill_edges.iter().map(|&(u, v)| [u, v]).collect() }
    }
}

/// JSON form: `{"order": [..], "fill_edges": [[u, v], ..]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PeoDoc {
    pub order: Vec<usize>,
    pub fill_edges: Vec<[usize; 2]>,
}

fn edge(u: usize, v: usize) -> (usize, usize) {
    (u.min(v), u.max(v))
}

struct Reducer {
    alive: Vec<bool>,
    alive_count: usize,
    cycle_len: usize,
    next: Vec<usize>,
    prev: Vec<usize>,
    /// Tree neighbor of each cycle vertex.
    center: Vec<usize>,
    leaves: Vec<usize>,
    /// Number of inner tree neighbors, and the XOR of their ids: when the
    /// count is 1 the XOR is that neighbor.
    inner_count: Vec<usize>,
    inner_xor: Vec<usize>,
    result: PeoResult,
}

impl Reducer {
    fn new(g: &Graph, cert: &HalinCertificate) -> Result<Self, PeoError> {
        let n = g.n();
        let malformed = |m: String| Err(PeoError::Malformed(m));
        if cert.parent.len() != n {
            return malformed("certificate size differs from graph".into());
        }
        let cyc = &cert.cycle_order;
        if cyc.len() < 3 || cyc.len() >= g.live_count() {
            return malformed(format!("cycle of length {} in {} vertices", cyc.len(), g.live_count()));
        }
        let mut on_cycle = vec![false; n];
        for &v in cyc {
            if v >= n || std::mem::replace(&mut on_cycle[v], true) {
                return malformed(format!("bad cycle vertex {v}"));
            }
        }
        let mut r = Reducer {
            alive: (0..n).map(|v| g.is_live(v)).collect(),
            alive_count: g.live_count(),
            cycle_len: cyc.len(),
            next: vec![usize::MAX; n],
            prev: vec![usize::MAX; n],
            center: vec![usize::MAX; n],
            leaves: vec![0; n],
            inner_count: vec![0; n],
            inner_xor: vec![0; n],
            result: PeoResult { order: Vec::with_capacity(n), fill_edges: Vec::new(), trace: Vec::new() },
        };
        for (i, &v) in cyc.iter().enumerate() {
            let w = cyc[(i + 1) % cyc.len()];
            r.next[v] = w;
            r.prev[w] = v;
        }
        for v in g.live_vertices() {
            if v == cert.root {
                continue;
            }
            let Some(p) = cert.parent[v].filter(|&p| p < n && !on_cycle[p]) else {
                return malformed(format!("vertex {v} lacks an inner parent"));
            };
            if on_cycle[v] {
                r.center[v] = p;
                r.leaves[p] += 1;
            } else {
                r.inner_count[v] += 1;
                r.inner_count[p] += 1;
                r.inner_xor[v] ^= p;
                r.inner_xor[p] ^= v;
            }
        }
        Ok(r)
    }

    fn eliminate(&mut self, v: usize) {
        self.alive[v] = false;
        self.alive_count -= 1;
        self.result.order.push(v);
    }

    /// R1 on the triple starting at `p`.
    fn try_r1(&mut self, p: usize) -> bool {
        let q = self.next[p];
        let r = self.next[q];
        let s = self.center[q];
        if self.center[p] != s || self.center[r] != s || self.inner_count[s] > 1 {
            return false;
        }
        self.eliminate(q);
        self.next[p] = r;
        self.prev[r] = p;
        self.leaves[s] -= 1;
        self.cycle_len -= 1;
        self.result.fill_edges.push(edge(p, r));
        self.result.trace.push(Reduction { rule: Rule::R1, eliminated: q, clique: [p, q, r, s] });
        true
    }

    /// R2 on the two-leaf fan starting at `p`.
    fn try_r2(&mut self, p: usize) -> bool {
        let r = self.next[p];
        let s = self.center[p];
        if self.center[r] != s || self.leaves[s] != 2 || self.inner_count[s] != 1 {
            return false;
        }
        let t = self.inner_xor[s];
        self.eliminate(s);
        self.center[p] = t;
        self.center[r] = t;
        self.leaves[t] += 2;
        self.inner_count[t] -= 1;
        self.inner_xor[t] ^= s;
        self.result.fill_edges.push(edge(p, t));
        self.result.fill_edges.push(edge(r, t));
        self.result.trace.push(Reduction { rule: Rule::R2, eliminated: s, clique: [p, r, s, t] });
        true
    }

    fn run(mut self, start: usize) -> Result<PeoResult, PeoError> {
        let mut cursor = start;
        let mut idle = 0;
        while self.alive_count > 4 {
            if self.try_r1(cursor) {
                idle = 0;
            } else if self.try_r2(cursor) {
                cursor = self.prev[cursor];
                idle = 0;
            } else {
                cursor = self.next[cursor];
                idle += 1;
                if idle > self.cycle_len {
                    return Err(PeoError::Stuck(self.alive_count));
                }
            }
        }
        let rest: Vec<usize> = (0..self.alive.len()).filter(|&v| self.alive[v]).collect();
        self.result.order.extend(rest);
        Ok(self.result)
    }
}

/// Elimination order of a chordal completion of `g`, with its fill edges.
///
/// The cursor starts at the first vertex of `cert.cycle_order` and walks
/// forward; after an R2 it steps back one position so the merged fan is
/// re-examined. The final four vertices are appended in ascending id order.
pub fn peo_halin(g: &Graph, cert: &HalinCertificate) -> Result<PeoResult, PeoError> {
    let reducer = Reducer::new(g, cert)?;
    reducer.run(cert.cycle_order[0])
}

/// `g` plus all fill edges.
pub fn chordal_completion(g: &Graph, peo: &PeoResult) -> Graph {
    let mut filled = g.clone();
    for &(u, v) in &peo.fill_edges {
        filled.add_edge(u, v).expect("fill edge between live vertices");
    }
    filled
}

fn positions(g: &Graph, order: &[usize]) -> Result<Vec<usize>, PeoError> {
    let mut pos = vec![usize::MAX; g.n()];
    for (i, &v) in order.iter().enumerate() {
        if !g.is_live(v) || pos[v] != usize::MAX {
            return Err(PeoError::NotPermutation);
        }
        pos[v] = i;
    }
    if order.len() != g.live_count() {
        return Err(PeoError::NotPermutation);
    }
    Ok(pos)
}

/// Whether the later neighbors of every vertex are pairwise adjacent.
///
/// Uses the standard reduction: it suffices that the later neighbors of `v`,
/// other than the earliest one `u`, are all adjacent to `u`.
pub fn verify_peo(filled: &Graph, order: &[usize]) -> Result<bool, PeoError> {
    let pos = positions(filled, order)?;
    for &v in order {
        let later = filled.neighbors(v).iter().copied().filter(|&u| pos[u] > pos[v]);
        let Some(first) = later.clone().min_by_key(|&u| pos[u]) else {
            continue;
        };
        if later.filter(|&u| u != first).any(|u| !filled.has_edge(first, u)) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Largest number of later neighbors over the order, i.e. maximum clique size
/// minus one in the chordal graph.
pub fn treewidth_from_peo(filled: &Graph, order: &[usize]) -> Result<usize, PeoError> {
    if !verify_peo(filled, order)? {
        return Err(PeoError::NotPerfect);
    }
    let pos = positions(filled, order)?;
    Ok(order.iter().map(|&v| filled.neighbors(v).iter().filter(|&&u| pos[u] > pos[v]).count()).max().unwrap_or(0))
}

/// Elimination order and fill edges rebuilt from a trace.
pub type Replay = (Vec<usize>, Vec<(usize, usize)>);

/// Re-applies `trace` to a fresh copy of `g`: each step completes its clique
/// and deletes the eliminated vertex, whose neighborhood must lie inside the
/// clique. Returns the resulting order (remaining vertices ascending) and
/// fill edges.
pub fn replay_trace(g: &Graph, trace: &[Reduction]) -> Result<Replay, PeoError> {
    let mut work = g.clone();
    let mut order = Vec::with_capacity(g.live_count());
    let mut fills = Vec::new();
    for step in trace {
        let x = step.eliminated;
        if !work.is_live(x) || work.neighbors(x).iter().any(|u| !step.clique.contains(u)) {
            return Err(PeoError::BadTrace(x));
        }
        for (i, &a) in step.clique.iter().enumerate() {
            for &b in &step.clique[i + 1..] {
                if work.add_edge(a, b).map_err(|_| PeoError::BadTrace(x))? {
                    fills.push(edge(a, b));
                }
            }
        }
        work.remove_vertex(x).map_err(|_| PeoError::BadTrace(x))?;
        order.push(x);
    }
    order.extend(work.live_vertices());
    Ok((order, fills))
}
