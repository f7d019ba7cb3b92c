//! Graph constructors and structural checks.
//!
//! Vertex orders are fixed per constructor (lexicographic on tuples and
//! subsets, product pairs with the first factor major) so adjacency
//! matrices — and therefore every lattice basis computed downstream — are
//! reproducible bit for bit.

mod checks;
mod graph6;
mod named;
mod transitivity;

pub use checks::{is_distance_regular, is_regular, is_strongly_regular, IntersectionArray};
pub use graph6::{from_graph6, to_graph6, Graph6Error};
pub use named::*;
pub use transitivity::{vertex_transitivity_witness, PermutationGroup, TransitivityOutcome};

use thiserror::Error;

use crate::exactq::QMatrix;
use crate::exactq::Rat;
use num_traits::{One, Zero};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("parameter out of range: {0}")]
    Parameter(String),
    #[error("graph has no edges")]
    Edgeless,
    #[error("graph is disconnected")]
    Disconnected,
}

/// Undirected simple graph stored as a full symmetric adjacency matrix.
///
/// The `label` records the constructor and parameters; it is ignored by
/// equality, which compares adjacency only.
#[derive(Clone)]
pub struct Graph {
    n: usize,
    adj: Vec<bool>,
    pub label: String,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.adj == other.adj
    }
}
impl Eq for Graph {}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph({}, n={})", self.label, self.n)
    }
}

impl Graph {
    pub(crate) fn new(n: usize, label: impl Into<String>) -> Self {
        Graph { n, adj: vec![false; n * n], label: label.into() }
    }

    /// Builds a graph from an explicit edge list; loops are rejected,
    /// duplicate edges collapse.
    pub fn from_edges(
        n: usize,
        edges: &[(usize, usize)],
        label: impl Into<String>,
    ) -> Result<Self, GraphError> {
        let mut g = Graph::new(n, label);
        for &(u, v) in edges {
            if u >= n || v >= n || u == v {
                return Err(GraphError::Parameter(format!("bad edge ({u}, {v}) for n = {n}")));
            }
            g.set_edge(u, v);
        }
        Ok(g)
    }

    pub fn vertices(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u * self.n + v]
    }

    pub(crate) fn set_edge(&mut self, u: usize, v: usize) {
        assert!(u != v, "no loops");
        self.adj[u * self.n + v] = true;
        self.adj[v * self.n + u] = true;
    }

    pub fn degree(&self, v: usize) -> usize {
        (0..self.n).filter(|&u| self.has_edge(v, u)).count()
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        (0..self.n).filter(|&u| self.has_edge(v, u)).collect()
    }

    /// Edges as ordered pairs (u, v) with u < v, lexicographic.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.edges().len()
    }

    /// Adjacency matrix as an exact rational (0/1) matrix.
    pub fn adjacency_matrix(&self) -> QMatrix {
        QMatrix::from_fn(self.n, self.n, |i, j| {
            if self.has_edge(i, j) {
                Rat::one()
            } else {
                Rat::zero()
            }
        })
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        self.bfs_order(0).len() == self.n
    }

    /// Vertices reachable from `start` in BFS order.
    pub(crate) fn bfs_order(&self, start: usize) -> Vec<usize> {
        let mut seen = vec![false; self.n];
        let mut queue = std::collections::VecDeque::from([start]);
        let mut order = Vec::new();
        seen[start] = true;
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for u in self.neighbors(v) {
                if !seen[u] {
                    seen[u] = true;
                    queue.push_back(u);
                }
            }
        }
        order
    }

    /// BFS distances from `start`; `usize::MAX` marks unreachable vertices.
    pub(crate) fn distances_from(&self, start: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.n];
        let mut queue = std::collections::VecDeque::from([start]);
        dist[start] = 0;
        while let Some(v) = queue.pop_front() {
            for u in self.neighbors(v) {
                if dist[u] == usize::MAX {
                    dist[u] = dist[v] + 1;
                    queue.push_back(u);
                }
            }
        }
        dist
    }
}

pub fn empty_graph(n: usize) -> Result<Graph, GraphError> {
    if n == 0 {
        return Err(GraphError::Parameter("empty graph needs n >= 1".into()));
    }
    Ok(Graph::new(n, format!("empty({n})")))
}

pub fn complete(n: usize) -> Result<Graph, GraphError> {
    if n == 0 {
        return Err(GraphError::Parameter("complete graph needs n >= 1".into()));
    }
    let mut g = Graph::new(n, format!("complete({n})"));
    for u in 0..n {
        for v in u + 1..n {
            g.set_edge(u, v);
        }
    }
    Ok(g)
}

pub fn cycle(n: usize) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(GraphError::Parameter("cycle needs n >= 3".into()));
    }
    let mut g = Graph::new(n, format!("cycle({n})"));
    for v in 0..n {
        g.set_edge(v, (v + 1) % n);
    }
    Ok(g)
}

/// Complement within the complete graph: adjacency J - I - A.
pub fn complement(g: &Graph) -> Graph {
    let n = g.vertices();
    let mut c = Graph::new(n, format!("complement({})", g.label));
    for u in 0..n {
        for v in u + 1..n {
            if !g.has_edge(u, v) {
                c.set_edge(u, v);
            }
        }
    }
    c
}

/// Disjoint union of `copies` copies of `g` (block-diagonal adjacency).
pub fn disjoint_union(g: &Graph, copies: usize) -> Result<Graph, GraphError> {
    if copies == 0 {
        return Err(GraphError::Parameter("disjoint union needs copies >= 1".into()));
    }
    let m = g.vertices();
    let mut out = Graph::new(m * copies, format!("disjoint_union({}, {copies})", g.label));
    for c in 0..copies {
        for u in 0..m {
            for v in u + 1..m {
                if g.has_edge(u, v) {
                    out.set_edge(c * m + u, c * m + v);
                }
            }
        }
    }
    Ok(out)
}

/// Line graph: one vertex per edge of `g` (edges in lexicographic order),
/// adjacent when the edges share an endpoint.
pub fn line_graph(g: &Graph) -> Result<Graph, GraphError> {
    let edges = g.edges();
    if edges.is_empty() {
        return Err(GraphError::Edgeless);
    }
    let mut out = Graph::new(edges.len(), format!("line_graph({})", g.label));
    for i in 0..edges.len() {
        for j in i + 1..edges.len() {
            let (a, b) = edges[i];
            let (c, d) = edges[j];
            if a == c || a == d || b == c || b == d {
                out.set_edge(i, j);
            }
        }
    }
    Ok(out)
}

fn product_graph(
    g1: &Graph,
    g2: &Graph,
    name: &str,
    rule: impl Fn(bool, bool, bool, bool) -> bool,
) -> Graph {
    let (n1, n2) = (g1.vertices(), g2.vertices());
    let mut out = Graph::new(n1 * n2, format!("{name}({}, {})", g1.label, g2.label));
    for u1 in 0..n1 {
        for v1 in 0..n2 {
            let a = u1 * n2 + v1;
            for u2 in 0..n1 {
                for v2 in 0..n2 {
                    let b = u2 * n2 + v2;
                    if b <= a {
                        continue;
                    }
                    let e1 = g1.has_edge(u1, u2);
                    let e2 = g2.has_edge(v1, v2);
                    if rule(u1 == u2, e1, v1 == v2, e2) {
                        out.set_edge(a, b);
                    }
                }
            }
        }
    }
    out
}

/// Cartesian product: edge iff one coordinate equal and the other adjacent.
/// Eigenvalues combine as sums.
pub fn cartesian(g1: &Graph, g2: &Graph) -> Graph {
    product_graph(g1, g2, "cartesian", |eq1, e1, eq2, e2| (eq1 && e2) || (eq2 && e1))
}

/// Direct (tensor) product: edge iff both coordinates adjacent.
/// Eigenvalues combine as products.
pub fn direct(g1: &Graph, g2: &Graph) -> Graph {
    product_graph(g1, g2, "direct", |_, e1, _, e2| e1 && e2)
}

/// Strong product: edge iff each coordinate is equal or adjacent.
/// Eigenvalues combine as (a+1)(b+1)-1.
pub fn strong(g1: &Graph, g2: &Graph) -> Graph {
    product_graph(g1, g2, "strong", |eq1, e1, eq2, e2| (eq1 || e1) && (eq2 || e2))
}

/// Lexicographic product: edge iff first coordinates adjacent, or first
/// coordinates equal and second coordinates adjacent.
pub fn lexicographic(g1: &Graph, g2: &Graph) -> Graph {
    product_graph(g1, g2, "lexicographic", |eq1, e1, _, e2| e1 || (eq1 && e2))
}
