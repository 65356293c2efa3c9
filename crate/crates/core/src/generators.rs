//! Seeded generators for wheels, necklaces and random (cubic) Halin graphs.
//!
//! Random graphs are grown as ordered plane trees and closed by a cycle through
//! the leaves in depth-first order, which is planar by construction. All
//! randomness comes from a ChaCha8 stream seeded with [`GenSpec::seed`].

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, GraphError};

/// Probability that a random leaf split produces two children rather than three.
const SPLIT_TWO_PROB: f64 = 0.7;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenError {
    #[error("{variant} needs at least {min} vertices, got {n}")]
    TooSmall { variant: Variant, n: usize, min: usize },
    #[error("{variant} needs an even vertex count, got {n}")]
    OddCount { variant: Variant, n: usize },
    #[error("malformed plane tree: {0}")]
    BadTree(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Variant {
    Wheel,
    Necklace,
    Halin,
    HalinCubic,
}

impl Variant {
    pub const ALL: [Variant; 4] = [Variant::Wheel, Variant::Necklace, Variant::Halin, Variant::HalinCubic];

    pub fn as_str(self) -> &'static str {
        match self {
            Variant::Wheel => "wheel",
            Variant::Necklace => "necklace",
            Variant::Halin => "halin",
            Variant::HalinCubic => "halin-cubic",
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Variant {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "wheel" => Ok(Variant::Wheel),
            "necklace" => Ok(Variant::Necklace),
            "halin" => Ok(Variant::Halin),
            "halin-cubic" | "halin_cubic" => Ok(Variant::HalinCubic),
            other => Err(format!("unknown variant `{other}`")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenSpec {
    pub n: usize,
    pub variant: Variant,
    pub seed: u64,
}

impl GenSpec {
    pub fn new(variant: Variant, n: usize, seed: u64) -> Self {
        GenSpec { n, variant, seed }
    }
}

/// A generated Halin graph with its leaf cycle, listed in cycle order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Generated {
    pub graph: Graph,
    pub outer: Vec<usize>,
}

/// Ordered (plane) tree: `children[v]` lists the children of `v` in embedding order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlaneTree {
    pub root: usize,
    pub children: Vec<Vec<usize>>,
}

impl PlaneTree {
    pub fn len(&self) -> usize {
        self.children.len()
    }

    pub fn is_empty(&self) -> bool {
        self.children.is_empty()
    }

    /// Leaves in depth-first order, the cyclic order of the closing cycle.
    pub fn leaf_order(&self) -> Vec<usize> {
        let mut leaves = Vec::new();
        let mut stack = vec![self.root];
        while let Some(v) = stack.pop() {
            if self.children[v].is_empty() {
                leaves.push(v);
            }
            stack.extend(self.children[v].iter().rev());
        }
        leaves
    }

    /// Joins the leaves of the tree by a cycle in depth-first order.
    ///
    /// The root needs at least three children and every other internal node at
    /// least two, so that no tree node has degree two.
    pub fn into_halin(&self) -> Result<Generated, GenError> {
        let n = self.len();
        if self.root >= n {
            return Err(GenError::BadTree(format!("root {} out of range", self.root)));
        }
        if self.children[self.root].len() < 3 {
            return Err(GenError::BadTree("root has fewer than three children".into()));
        }
        let mut graph = Graph::new(n);
        let mut seen = vec![false; n];
        seen[self.root] = true;
        let mut stack = vec![self.root];
        while let Some(v) = stack.pop() {
            if v != self.root && self.children[v].len() == 1 {
                return Err(GenError::BadTree(format!("node {v} has a single child")));
            }
            for &c in &self.children[v] {
                if c >= n || std::mem::replace(&mut seen[c], true) {
                    return Err(GenError::BadTree(format!("node {c} is not a proper child")));
                }
                graph.add_edge(v, c)?;
                stack.push(c);
            }
        }
        if seen.iter().any(|&s| !s) {
            return Err(GenError::BadTree("tree does not span all nodes".into()));
        }
        let outer = self.leaf_order();
        for (i, &u) in outer.iter().enumerate() {
            graph.add_edge(u, outer[(i + 1) % outer.len()])?;
        }
        Ok(Generated { graph, outer })
    }
}

pub fn generate(spec: &GenSpec) -> Result<Generated, GenError> {
    match spec.variant {
        Variant::Wheel => make_wheel(spec.n),
        Variant::Necklace => {
            if spec.n % 2 == 1 {
                return Err(GenError::OddCount { variant: Variant::Necklace, n: spec.n });
            }
            if spec.n < 6 {
                return Err(GenError::TooSmall { variant: Variant::Necklace, n: spec.n, min: 6 });
            }
            make_necklace((spec.n - 2) / 2)
        }
        Variant::Halin => make_halin(spec),
        Variant::HalinCubic => make_halin_cubic(spec),
    }
}

/// Wheel on `n` vertices: hub `n - 1`, rim `0..n-1` in index order.
pub fn make_wheel(n: usize) -> Result<Generated, GenError> {
    if n < 4 {
        return Err(GenError::TooSmall { variant: Variant::Wheel, n, min: 4 });
    }
    let hub = n - 1;
    let mut graph = Graph::new(n);
    for v in 0..hub {
        graph.add_edge(hub, v)?;
        graph.add_edge(v, (v + 1) % hub)?;
    }
    Ok(Generated { graph, outer: (0..hub).collect() })
}

/// Cubic Halin graph over a caterpillar with a spine of `k` vertices.
///
/// Spine vertices are `0..k`; the `k + 2` leaves get ids `k..2k+2` in cycle
/// order. Both spine ends carry two leaves, interior spine vertices one.
pub fn make_necklace(k: usize) -> Result<Generated, GenError> {
    if k < 2 {
        return Err(GenError::TooSmall { variant: Variant::Necklace, n: 2 * k + 2, min: 6 });
    }
    let n = 2 * k + 2;
    let mut children = vec![Vec::new(); n];
    let mut next_leaf = k;
    let mut leaf = || {
        next_leaf += 1;
        next_leaf - 1
    };
    let (a, b) = (leaf(), leaf());
    children[0] = vec![a, b, 1];
    for (s, kids) in children.iter_mut().enumerate().take(k - 1).skip(1) {
        *kids = vec![leaf(), s + 1];
    }
    children[k - 1] = vec![leaf(), leaf()];
    PlaneTree { root: 0, children }.into_halin()
}

/// Random Halin graph with exactly `spec.n` vertices.
///
/// Starts from a star with three leaves and repeatedly splits a random leaf into
/// two or three children. When a single vertex of budget remains it is attached
/// as an extra child of a random internal node at a random slot.
pub fn make_halin(spec: &GenSpec) -> Result<Generated, GenError> {
    let n = spec.n;
    if n < 4 {
        return Err(GenError::TooSmall { variant: Variant::Halin, n, min: 4 });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let mut children: Vec<Vec<usize>> = vec![vec![1, 2, 3], vec![], vec![], vec![]];
    let mut leaves = vec![1, 2, 3];
    let mut internal = vec![0];
    while children.len() < n {
        let remaining = n - children.len();
        if remaining == 1 {
            let u = internal[rng.random_range(0..internal.len())];
            let slot = rng.random_range(0..=children[u].len());
            let v = children.len();
            children.push(Vec::new());
            children[u].insert(slot, v);
            leaves.push(v);
            continue;
        }
        let k = if remaining == 2 || rng.random_bool(SPLIT_TWO_PROB) { 2 } else { 3 };
        let u = leaves.swap_remove(rng.random_range(0..leaves.len()));
        for _ in 0..k {
            let v = children.len();
            children.push(Vec::new());
            children[u].push(v);
            leaves.push(v);
        }
        internal.push(u);
    }
    let tree = PlaneTree { root: 0, children };
    relabel(tree.into_halin()?, &mut rng)
}

/// Random cubic Halin graph: the root has three children, every other internal
/// node two.
pub fn make_halin_cubic(spec: &GenSpec) -> Result<Generated, GenError> {
    let n = spec.n;
    if n < 4 {
        return Err(GenError::TooSmall { variant: Variant::HalinCubic, n, min: 4 });
    }
    if n % 2 == 1 {
        return Err(GenError::OddCount { variant: Variant::HalinCubic, n });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let mut children: Vec<Vec<usize>> = vec![vec![1, 2, 3], vec![], vec![], vec![]];
    let mut leaves = vec![1, 2, 3];
    while children.len() < n {
        let u = leaves.swap_remove(rng.random_range(0..leaves.len()));
        for _ in 0..2 {
            let v = children.len();
            children.push(Vec::new());
            children[u].push(v);
            leaves.push(v);
        }
    }
    let tree = PlaneTree { root: 0, children };
    relabel(tree.into_halin()?, &mut rng)
}

// Random ids keep downstream algorithms from leaning on construction order.
fn relabel(gen: Generated, rng: &mut ChaCha8Rng) -> Result<Generated, GenError> {
    let n = gen.graph.n();
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let graph = Graph::from_edges(n, gen.graph.edges().map(|(u, v)| (perm[u], perm[v])))?;
    let outer = gen.outer.iter().map(|&v| perm[v]).collect();
    Ok(Generated { graph, outer })
}
