//! Simple undirected graph over dense vertex ids `0..n`.
//!
//! Adjacency lists are kept sorted, which gives set semantics for edges and a
//! deterministic iteration order. Vertices can be deleted through a live mask so
//! that reductions keep referring to the original ids.

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {vertex} out of range for graph with {n} vertices")]
    OutOfRange { vertex: usize, n: usize },
    #[error("vertex {0} has been deleted")]
    Deleted(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    live: Vec<bool>,
    live_count: usize,
    edge_count: usize,
}

impl Graph {
    pub fn new(n: usize) -> Self {
        Graph { adj: vec![Vec::new(); n], live: vec![true; n], live_count: n, edge_count: 0 }
    }

    /// Builds a graph from an edge list, rejecting self-loops and out-of-range ids.
    /// Repeated edges collapse into one.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::new(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Size of the id space, including deleted vertices.
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn live_count(&self) -> usize {
        self.live_count
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn is_live(&self, v: usize) -> bool {
        self.live.get(v).copied().unwrap_or(false)
    }

    pub fn live_vertices(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.n()).filter(move |&v| self.live[v])
    }

    fn check(&self, v: usize) -> Result<(), GraphError> {
        if v >= self.n() {
            Err(GraphError::OutOfRange { vertex: v, n: self.n() })
        } else if !self.live[v] {
            Err(GraphError::Deleted(v))
        } else {
            Ok(())
        }
    }

    /// Inserts `{u, v}`. Returns `false` when the edge was already present.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<bool, GraphError> {
        self.check(u)?;
        self.check(v)?;
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        match self.adj[u].binary_search(&v) {
            Ok(_) => Ok(false),
            Err(pos) => {
                self.adj[u].insert(pos, v);
                let pos = self.adj[v].binary_search(&u).unwrap_err();
                self.adj[v].insert(pos, u);
                self.edge_count += 1;
                Ok(true)
            }
        }
    }

    /// Removes `{u, v}` if present. Returns whether an edge was removed.
    pub fn remove_edge(&mut self, u: usize, v: usize) -> bool {
        if u >= self.n() || v >= self.n() {
            return false;
        }
        match self.adj[u].binary_search(&v) {
            Ok(pos) => {
                self.adj[u].remove(pos);
                let pos = self.adj[v].binary_search(&u).expect("asymmetric adjacency");
                self.adj[v].remove(pos);
                self.edge_count -= 1;
                true
            }
            Err(_) => false,
        }
    }

    /// Deletes `v` and all incident edges. The id stays reserved.
    pub fn remove_vertex(&mut self, v: usize) -> Result<(), GraphError> {
        self.check(v)?;
        let nbrs = std::mem::take(&mut self.adj[v]);
        for &u in &nbrs {
            let pos = self.adj[u].binary_search(&v).expect("asymmetric adjacency");
            self.adj[u].remove(pos);
        }
        self.edge_count -= nbrs.len();
        self.live[v] = false;
        self.live_count -= 1;
        Ok(())
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn degree(&self, v: usize) -> Result<usize, GraphError> {
        self.check(v)?;
        Ok(self.adj[v].len())
    }

    /// Sorted neighbor list. Panics if `v` is out of range.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    /// Every edge once, as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, nbrs)| nbrs.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    /// True iff every live vertex is reachable from the first live one.
    pub fn is_connected(&self) -> bool {
        let Some(start) = self.live_vertices().next() else {
            return true;
        };
        let mut seen = vec![false; self.n()];
        let mut stack = vec![start];
        seen[start] = true;
        let mut reached = 1;
        while let Some(u) = stack.pop() {
            for &v in &self.adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    reached += 1;
                    stack.push(v);
                }
            }
        }
        reached == self.live_count
    }

    pub fn to_doc(&self, outer: Option<Vec<usize>>) -> GraphDoc {
        GraphDoc { n: self.n(), edges: self.edges().map(|(u, v)| [u, v]).collect(), outer }
    }
}

/// On-disk graph format: `{"n": .., "edges": [[u, v], ..], "outer": [..]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphDoc {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub outer: Option<Vec<usize>>,
}

impl GraphDoc {
    pub fn to_graph(&self) -> Result<Graph, GraphError> {
        Graph::from_edges(self.n, self.edges.iter().map(|&[u, v]| (u, v)))
    }
}
