//! Halin graph recognition by fan contraction, certificate verification and
//! inner-tree extraction.
//!
//! [`recognize`] repeatedly contracts fans until a wheel remains, then replays
//! the contractions backwards to recover the leaf cycle of the input. Every
//! candidate outer set is checked with [`verify_halin`] before acceptance, so a
//! certificate is never returned for a graph that is not Halin.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Graph;

/// Why an outer set fails to certify a graph as Halin.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HalinViolation {
    #[error("graph has {0} live vertices, at least 4 required")]
    TooSmall(usize),
    #[error("outer vertex {0} is out of range or deleted")]
    BadVertex(usize),
    #[error("outer vertex {0} listed twice")]
    Duplicate(usize),
    #[error("outer vertex {vertex} has {count} outer neighbors instead of 2")]
    CycleDegree { vertex: usize, count: usize },
    #[error("outer vertices do not form a single cycle")]
    CycleSplit,
    #[error("non-cycle edges do not form a spanning tree")]
    NotSpanningTree,
    #[error("vertex {0} is a tree leaf but not on the outer cycle, or vice versa")]
    LeafMismatch(usize),
    #[error("inner vertex {0} has tree degree 2")]
    DegreeTwo(usize),
    #[error("leaves below vertex {0} are not contiguous on the cycle")]
    NotContiguous(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RejectReason {
    TooSmall,
    Disconnected,
    LowDegree,
    Stuck,
    InvalidCertificate,
}

impl fmt::Display for RejectReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            RejectReason::TooSmall => "too_small",
            RejectReason::Disconnected => "disconnected",
            RejectReason::LowDegree => "low_degree",
            RejectReason::Stuck => "stuck",
            RejectReason::InvalidCertificate => "invalid_certificate",
        };
        f.write_str(s)
    }
}

/// A negative recognition outcome. Not an error: the input simply is not Halin.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rejection {
    pub reason: RejectReason,
    pub detail: String,
}

impl Rejection {
    fn new(reason: RejectReason, detail: impl Into<String>) -> Self {
        Rejection { reason, detail: detail.into() }
    }
}

impl fmt::Display for Rejection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.reason, self.detail)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CertificateError {
    #[error("certificate does not match graph: {0}")]
    Violation(#[from] HalinViolation),
    #[error("malformed certificate: {0}")]
    Malformed(String),
}

/// Outer cycle plus rooted inner tree of a Halin graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HalinCertificate {
    /// Outer vertices, ascending.
    pub outer: Vec<usize>,
    pub cycle_order: Vec<usize>,
    pub root: usize,
    /// Tree parent of every vertex except `root` (which maps to `None`).
    pub parent: Vec<Option<usize>>,
}

impl HalinCertificate {
    /// Verifies `outer` against `g` and extracts the inner tree.
    pub fn from_outer(g: &Graph, outer: &[usize]) -> Result<Self, CertificateError> {
        let cycle_order = verify_halin(g, outer)?;
        let (parent, root) = tree_from_cycle(g, &cycle_order);
        let mut outer = outer.to_vec();
        outer.sort_unstable();
        Ok(HalinCertificate { outer, cycle_order, root, parent })
    }

    pub fn n(&self) -> usize {
        self.parent.len()
    }

    pub fn is_outer(&self, v: usize) -> bool {
        self.outer.binary_search(&v).is_ok()
    }

    /// Checks that this certificate describes `g`: the outer set verifies, the
    /// cycle order walks real cycle edges, and the parent map is a spanning tree
    /// over the non-cycle edges rooted at `root`.
    pub fn validate(&self, g: &Graph) -> Result<(), CertificateError> {
        let malformed = |msg: String| Err(CertificateError::Malformed(msg));
        verify_halin(g, &self.outer)?;
        let n = g.n();
        if self.parent.len() != n {
            return malformed(format!("parent map covers {} ids, graph has {n}", self.parent.len()));
        }
        let mut sorted_cycle = self.cycle_order.clone();
        sorted_cycle.sort_unstable();
        if sorted_cycle != self.outer {
            return malformed("cycle_order is not a permutation of outer".into());
        }
        let len = self.cycle_order.len();
        for i in 0..len {
            let (a, b) = (self.cycle_order[i], self.cycle_order[(i + 1) % len]);
            if !g.has_edge(a, b) {
                return malformed(format!("cycle_order steps over non-edge {a}-{b}"));
            }
        }
        if self.root >= n || self.is_outer(self.root) || self.parent[self.root].is_some() {
            return malformed(format!("root {} must be an inner vertex without parent", self.root));
        }
        let mut tree_edges = BTreeSet::new();
        for v in g.live_vertices().filter(|&v| v != self.root) {
            let Some(p) = self.parent[v] else {
                return malformed(format!("vertex {v} has no parent"));
            };
            if !g.has_edge(v, p) || (self.is_outer(v) && self.is_outer(p)) {
                return malformed(format!("parent edge {v}-{p} is not a tree edge"));
            }
            tree_edges.insert((v.min(p), v.max(p)));
        }
        if tree_edges.len() + 1 != g.live_count() {
            return malformed("parent edges repeat".into());
        }
        // Distinct tree edges over a tree: every chain must end at the root.
        let mut state = vec![0u8; n];
        state[self.root] = 2;
        for v in g.live_vertices() {
            let mut path = Vec::new();
            let mut u = v;
            while state[u] == 0 {
                state[u] = 1;
                path.push(u);
                u = self.parent[u].expect("checked above");
            }
            if state[u] == 1 {
                return malformed(format!("parent map has a cycle through {u}"));
            }
            for w in path {
                state[w] = 2;
            }
        }
        Ok(())
    }

    pub fn to_doc(&self) -> CertificateDoc {
        CertificateDoc {
            outer: self.outer.clone(),
            cycle_order: self.cycle_order.clone(),
            root: self.root,
            parent: self.parent.iter().enumerate().filter_map(|(v, p)| p.map(|p| (v, p))).collect(),
        }
    }

    /// Rebuilds a certificate from its JSON form. Use [`validate`](Self::validate)
    /// before trusting it for a particular graph.
    pub fn from_doc(doc: &CertificateDoc, n: usize) -> Result<Self, CertificateError> {
        let mut parent = vec![None; n];
        for (&v, &p) in &doc.parent {
            if v >= n || p >= n {
                return Err(CertificateError::Malformed(format!("parent entry {v}->{p} out of range")));
            }
            parent[v] = Some(p);
        }
        let mut outer = doc.outer.clone();
        outer.sort_unstable();
        Ok(HalinCertificate { outer, cycle_order: doc.cycle_order.clone(), root: doc.root, parent })
    }
}

/// JSON form: `{"outer": [..], "cycle_order": [..], "root": r, "parent": {"v": p}}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CertificateDoc {
    pub outer: Vec<usize>,
    pub cycle_order: Vec<usize>,
    pub root: usize,
    pub parent: BTreeMap<usize, usize>,
}

/// Checks whether `outer` is the leaf cycle of a Halin decomposition of `g`.
///
/// On success returns the cycle order, starting at the smallest outer vertex
/// and continuing towards its smaller cycle neighbor.
pub fn verify_halin(g: &Graph, outer: &[usize]) -> Result<Vec<usize>, HalinViolation> {
    let n = g.n();
    let live = g.live_count();
    if live < 4 {
        return Err(HalinViolation::TooSmall(live));
    }
    let mut is_outer = vec![false; n];
    for &v in outer {
        if !g.is_live(v) {
            return Err(HalinViolation::BadVertex(v));
        }
        if std::mem::replace(&mut is_outer[v], true) {
            return Err(HalinViolation::Duplicate(v));
        }
    }
    if outer.is_empty() {
        return Err(HalinViolation::CycleSplit);
    }

    // (a) outer vertices induce exactly one cycle.
    let mut cycle_nbrs = vec![[usize::MAX; 2]; n];
    for &v in outer {
        let mut count = 0;
        for &u in g.neighbors(v).iter().filter(|&&u| is_outer[u]) {
            if count < 2 {
                cycle_nbrs[v][count] = u;
            }
            count += 1;
        }
        if count != 2 {
            return Err(HalinViolation::CycleDegree { vertex: v, count });
        }
    }
    let start = *outer.iter().min().expect("non-empty");
    let mut cycle_order = Vec::with_capacity(outer.len());
    let (mut prev, mut cur) = (start, cycle_nbrs[start][0].min(cycle_nbrs[start][1]));
    cycle_order.push(start);
    while cur != start {
        if cycle_order.len() > outer.len() {
            return Err(HalinViolation::CycleSplit);
        }
        cycle_order.push(cur);
        let [a, b] = cycle_nbrs[cur];
        let next = if a == prev { b } else { a };
        prev = cur;
        cur = next;
    }
    if cycle_order.len() != outer.len() {
        return Err(HalinViolation::CycleSplit);
    }

    // (b) the remaining edges form a spanning tree.
    if g.edge_count() != live - 1 + outer.len() {
        return Err(HalinViolation::NotSpanningTree);
    }
    let tree_degree = |v: usize| {
        let d = g.neighbors(v).len();
        if is_outer[v] {
            d - 2
        } else {
            d
        }
    };
    // (c) leaves are exactly the outer vertices, (d) no inner tree-degree 2.
    for v in g.live_vertices() {
        match (is_outer[v], tree_degree(v)) {
            (true, 1) => {}
            (false, 2) => return Err(HalinViolation::DegreeTwo(v)),
            (false, d) if d >= 3 => {}
            _ => return Err(HalinViolation::LeafMismatch(v)),
        }
    }
    let root = g.live_vertices().find(|&v| !is_outer[v]).ok_or(HalinViolation::NotSpanningTree)?;
    let (parent, bfs_order) = bfs_tree(g, &is_outer, root);
    if bfs_order.len() != live {
        return Err(HalinViolation::NotSpanningTree);
    }

    // (e) leaves under every tree edge occupy one arc of the cycle. A set of
    // cycle vertices is an arc iff exactly two cycle edges leave it. The number
    // of cycle edges leaving the subtree of v is accumulated bottom-up: each
    // cycle edge {a, b} crosses every subtree boundary on the a..lca and b..lca
    // paths, excluding the lca.
    let mut depth = vec![0usize; n];
    for &v in &bfs_order[1..] {
        depth[v] = depth[parent[v].expect("non-root")] + 1;
    }
    let mut crossing = vec![0i64; n];
    for i in 0..cycle_order.len() {
        let (a, b) = (cycle_order[i], cycle_order[(i + 1) % cycle_order.len()]);
        crossing[a] += 1;
        crossing[b] += 1;
        let (mut x, mut y) = (a, b);
        while depth[x] > depth[y] {
            x = parent[x].expect("non-root");
        }
        while depth[y] > depth[x] {
            y = parent[y].expect("non-root");
        }
        while x != y {
            x = parent[x].expect("non-root");
            y = parent[y].expect("non-root");
        }
        crossing[x] -= 2;
    }
    for &v in bfs_order[1..].iter().rev() {
        if crossing[v] != 2 {
            return Err(HalinViolation::NotContiguous(v));
        }
        let p = parent[v].expect("non-root");
        crossing[p] += crossing[v];
    }

    Ok(cycle_order)
}

/// Convenience wrapper around [`verify_halin`].
pub fn is_halin_certificate(g: &Graph, outer: &[usize]) -> bool {
    verify_halin(g, outer).is_ok()
}

/// Inner tree of a verified Halin graph as a parent map and root.
///
/// The root is the smallest inner vertex (the hub, for a wheel).
pub fn inner_tree(g: &Graph, outer: &[usize]) -> Result<(Vec<Option<usize>>, usize), CertificateError> {
    let cycle = verify_halin(g, outer)?;
    Ok(tree_from_cycle(g, &cycle))
}

fn tree_from_cycle(g: &Graph, cycle_order: &[usize]) -> (Vec<Option<usize>>, usize) {
    let mut is_outer = vec![false; g.n()];
    for &v in cycle_order {
        is_outer[v] = true;
    }
    let root = g.live_vertices().find(|&v| !is_outer[v]).expect("verified graph has an inner vertex");
    let (parent, _) = bfs_tree(g, &is_outer, root);
    (parent, root)
}

// BFS over non-cycle edges. Edges between two outer vertices are cycle edges.
fn bfs_tree(g: &Graph, is_outer: &[bool], root: usize) -> (Vec<Option<usize>>, Vec<usize>) {
    let mut parent = vec![None; g.n()];
    let mut seen = vec![false; g.n()];
    let mut order = vec![root];
    seen[root] = true;
    let mut head = 0;
    while head < order.len() {
        let u = order[head];
        head += 1;
        for &v in g.neighbors(u) {
            if !seen[v] && !(is_outer[u] && is_outer[v]) {
                seen[v] = true;
                parent[v] = Some(u);
                order.push(v);
            }
        }
    }
    (parent, order)
}

/// Decides whether `g` is a Halin graph.
///
/// A fan is located purely from degrees and adjacency: a vertex `v` all of whose
/// neighbors but one (`w`) have degree 3 and form a path `P`, where interior path
/// vertices see only `v` and their path neighbors, and each path end has one
/// neighbor outside `P ∪ {v}`. The fan with the smallest center id is contracted
/// into `v`. When a wheel remains, the contractions are undone to mark the outer
/// vertices of the input, and the result is checked with [`verify_halin`].
pub fn recognize(g: &Graph) -> Result<HalinCertificate, Rejection> {
    let live = g.live_count();
    if live < 4 {
        return Err(Rejection::new(RejectReason::TooSmall, format!("{live} vertices")));
    }
    if !g.is_connected() {
        return Err(Rejection::new(RejectReason::Disconnected, "graph is not connected"));
    }
    if let Some(v) = g.live_vertices().find(|&v| g.neighbors(v).len() < 3) {
        return Err(Rejection::new(RejectReason::LowDegree, format!("vertex {v} has degree {}", g.neighbors(v).len())));
    }

    let mut reducer = Reducer::new(g.clone());
    let hubs = reducer.reduce_to_wheel()?;
    let mut last_violation = None;
    for hub in hubs {
        let Some(outer) = reducer.expand(hub) else {
            continue;
        };
        match HalinCertificate::from_outer(g, &outer) {
            Ok(cert) => return Ok(cert),
            Err(CertificateError::Violation(v)) => last_violation = Some(v),
            Err(CertificateError::Malformed(m)) => unreachable!("fresh certificate malformed: {m}"),
        }
    }
    Err(match last_violation {
        Some(v) => Rejection::new(RejectReason::InvalidCertificate, v.to_string()),
        None => Rejection::new(RejectReason::Stuck, "contraction trace does not expand to a leaf cycle"),
    })
}

struct FanMatch {
    center: usize,
    path: Vec<usize>,
    other: usize,
    ends_out: [usize; 2],
}

struct Contraction {
    rep: usize,
    members: Vec<usize>,
    /// Member and its neighbor outside the contracted set.
    attach: [(usize, usize); 3],
}

struct Reducer {
    g: Graph,
    deg3: usize,
    fans: BTreeSet<usize>,
    trace: Vec<Contraction>,
}

impl Reducer {
    fn new(g: Graph) -> Self {
        let deg3 = g.live_vertices().filter(|&v| g.neighbors(v).len() == 3).count();
        let fans = g.live_vertices().filter(|&v| match_fan(&g, v).is_some()).collect();
        Reducer { g, deg3, fans, trace: Vec::new() }
    }

    /// Contracts fans until a wheel remains; returns the hub candidates.
    fn reduce_to_wheel(&mut self) -> Result<Vec<usize>, Rejection> {
        loop {
            if let Some(hubs) = self.wheel_hubs() {
                return Ok(hubs);
            }
            let Some(v) = self.fans.pop_first() else {
                return Err(Rejection::new(
                    RejectReason::Stuck,
                    format!("no fan found with {} vertices left", self.g.live_count()),
                ));
            };
            if let Some(fan) = match_fan(&self.g, v) {
                self.contract(fan);
            }
        }
    }

    fn wheel_hubs(&self) -> Option<Vec<usize>> {
        let m = self.g.live_count();
        if m == 4 {
            return (self.deg3 == 4).then(|| self.g.live_vertices().collect());
        }
        if m < 4 || self.deg3 != m - 1 {
            return None;
        }
        let hub = self.g.live_vertices().find(|&v| self.g.neighbors(v).len() == m - 1)?;
        // Rim vertices have degree 3; walk them to confirm one cycle.
        let rim: Vec<usize> = self.g.neighbors(hub).to_vec();
        let start = rim[0];
        let (mut prev, mut cur, mut steps) = (hub, start, 0);
        loop {
            let next = self.g.neighbors(cur).iter().copied().find(|&u| u != hub && u != prev)?;
            prev = cur;
            cur = next;
            steps += 1;
            if cur == start || steps > rim.len() {
                break;
            }
        }
        (cur == start && steps == rim.len()).then(|| vec![hub])
    }

    fn contract(&mut self, fan: FanMatch) {
        let v = fan.center;
        let (e1, e2) = (fan.path[0], *fan.path.last().expect("path"));
        let touched: Vec<usize> =
            [v, fan.other, fan.ends_out[0], fan.ends_out[1]].into_iter().chain(fan.path.iter().copied()).collect();
        for &u in &touched {
            if self.g.neighbors(u).len() == 3 {
                self.deg3 -= 1;
            }
        }
        for &p in &fan.path {
            self.g.remove_vertex(p).expect("live path vertex");
            self.fans.remove(&p);
        }
        self.g.add_edge(v, fan.ends_out[0]).expect("live");
        self.g.add_edge(v, fan.ends_out[1]).expect("live");
        for &u in &touched {
            if self.g.is_live(u) && self.g.neighbors(u).len() == 3 {
                self.deg3 += 1;
            }
        }

        let mut members = vec![v];
        members.extend(&fan.path);
        self.trace.push(Contraction {
            rep: v,
            members,
            attach: [(v, fan.other), (e1, fan.ends_out[0]), (e2, fan.ends_out[1])],
        });

        let mut affected = BTreeSet::new();
        affected.insert(v);
        for &u in self.g.neighbors(v) {
            affected.insert(u);
            affected.extend(self.g.neighbors(u).iter().copied());
        }
        for u in affected {
            if match_fan(&self.g, u).is_some() {
                self.fans.insert(u);
            } else {
                self.fans.remove(&u);
            }
        }
    }

    /// Undoes the contractions, assuming `hub` is the inner vertex of the
    /// residual wheel. Returns the outer set of the input graph.
    fn expand(&self, hub: usize) -> Option<Vec<usize>> {
        let mut is_outer = vec![false; self.g.n()];
        for v in self.g.live_vertices().filter(|&v| v != hub) {
            is_outer[v] = true;
        }
        for c in self.trace.iter().rev() {
            if !is_outer[c.rep] {
                return None;
            }
            let mut inner = c.attach.iter().filter(|(_, ext)| !is_outer[*ext]);
            let (center, _) = *inner.next()?;
            if inner.next().is_some() {
                return None;
            }
            is_outer[c.rep] = false;
            for &m in c.members.iter().filter(|&&m| m != center) {
                is_outer[m] = true;
            }
        }
        Some((0..is_outer.len()).filter(|&v| is_outer[v]).collect())
    }
}

fn match_fan(g: &Graph, v: usize) -> Option<FanMatch> {
    let nbrs = g.neighbors(v);
    if nbrs.len() < 3 {
        return None;
    }
    let mut heavy = nbrs.iter().copied().filter(|&u| g.neighbors(u).len() != 3);
    match (heavy.next(), heavy.next()) {
        (Some(_), Some(_)) => None,
        (Some(w), None) => match_fan_excluding(g, v, w),
        (None, _) => nbrs.iter().find_map(|&w| match_fan_excluding(g, v, w)),
    }
}

fn match_fan_excluding(g: &Graph, v: usize, w: usize) -> Option<FanMatch> {
    let nbrs = g.neighbors(v);
    let in_path = |u: usize| u != w && u != v && nbrs.binary_search(&u).is_ok();
    let mut ends = Vec::with_capacity(2);
    for &y in nbrs.iter().filter(|&&y| y != w) {
        if g.neighbors(y).len() != 3 {
            return None;
        }
        match g.neighbors(y).iter().filter(|&&u| in_path(u)).count() {
            1 => ends.push(y),
            2 => {}
            _ => return None,
        }
    }
    if ends.len() != 2 {
        return None;
    }
    let path_len = nbrs.len() - 1;
    let mut path = Vec::with_capacity(path_len);
    let (mut prev, mut cur) = (usize::MAX, ends[0]);
    loop {
        path.push(cur);
        if path.len() > path_len {
            return None;
        }
        match g.neighbors(cur).iter().copied().find(|&u| in_path(u) && u != prev) {
            Some(next) => {
                prev = cur;
                cur = next;
            }
            None => break,
        }
    }
    if path.len() != path_len || cur != ends[1] {
        return None;
    }
    let outside = |e: usize| g.neighbors(e).iter().copied().find(|&u| u != v && !in_path(u));
    let (o1, o2) = (outside(ends[0])?, outside(ends[1])?);
    if o1 == o2 || o1 == w || o2 == w {
        return None;
    }
    Some(FanMatch { center: v, path, other: w, ends_out: [o1, o2] })
}
