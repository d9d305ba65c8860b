//! Finite simple graphs with dense integer vertex ids, generators for the
//! standard families, the Cartesian product with a complete graph, and
//! structural queries (girth, components).

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::VecDeque;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph must have at least one vertex")]
    NoVertices,
    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("vertex {v} out of range for {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("cycle needs at least 3 vertices, got {0}")]
    CycleTooShort(usize),
    #[error("complete bipartite parts must be nonempty")]
    EmptyPart,
    #[error("product with a complete graph needs at least one layer")]
    ZeroLayers,
}

/// A simple undirected graph on vertices `0..n`.
///
/// Edges are kept as sorted `(min, max)` pairs in ascending order, so two
/// graphs built from the same edge set compare equal regardless of input
/// order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Neighbors of `v` in ascending order.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn is_complete(&self) -> bool {
        self.m() == self.n * (self.n - 1) / 2
    }

    pub fn is_edgeless(&self) -> bool {
        self.edges.is_empty()
    }

    /// Vertex sets of the connected components, each ascending, ordered by
    /// smallest member.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut comps = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    /// Subgraph induced on `vertices` (ascending, deduplicated by caller),
    /// relabeled to `0..vertices.len()` in the given order.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let mut edges = Vec::new();
        for &(u, v) in &self.edges {
            if index[u] != usize::MAX && index[v] != usize::MAX {
                edges.push((index[u], index[v]));
            }
        }
        build_graph(vertices.len(), &edges).expect("induced subgraph of a valid graph is valid")
    }

    /// The graph with edge `{u, v}` removed.
    pub(crate) fn deleted(&self, u: usize, v: usize) -> Graph {
        let edges: Vec<_> = self
            .edges
            .iter()
            .copied()
            .filter(|&e| e != (u.min(v), u.max(v)))
            .collect();
        build_graph(self.n, &edges).expect("deletion preserves validity")
    }

    /// The graph with edge `{u, v}` contracted: `v` merges into `u`, parallel
    /// edges collapse, and vertices above `v` shift down to stay dense.
    pub(crate) fn contracted(&self, u: usize, v: usize) -> Graph {
        let (keep, gone) = (u.min(v), u.max(v));
        let relabel = |w: usize| -> usize {
            let w = if w == gone { keep } else { w };
            if w > gone {
                w - 1
            } else {
                w
            }
        };
        let mut edges: Vec<(usize, usize)> = self
            .edges
            .iter()
            .filter(|&&e| e != (keep, gone))
            .map(|&(a, b)| {
                let (a, b) = (relabel(a), relabel(b));
                (a.min(b), a.max(b))
            })
            .collect();
        edges.sort_unstable();
        edges.dedup();
        build_graph(self.n - 1, &edges).expect("contraction preserves validity")
    }

    /// Relabels vertices: `perm[old] = new`. `perm` must be a permutation of
    /// `0..n`.
    pub fn relabeled(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n, "permutation length must match");
        let edges: Vec<_> = self
            .edges
            .iter()
            .map(|&(a, b)| {
                let (a, b) = (perm[a], perm[b]);
                (a.min(b), a.max(b))
            })
            .collect();
        build_graph(self.n, &edges).expect("relabeling preserves validity")
    }
}

/// Builds the simple graph with exactly the listed edges.
///
/// Rejects loops, out-of-range endpoints, and duplicate edges in either
/// orientation. Permuting the edge list yields an identical value.
pub fn build_graph(n: usize, edge_list: &[(usize, usize)]) -> Result<Graph, GraphError> {
    if n == 0 {
        return Err(GraphError::NoVertices);
    }
    let mut edges = Vec::with_capacity(edge_list.len());
    for &(u, v) in edge_list {
        if u == v {
            return Err(GraphError::LoopEdge(u));
        }
        for w in [u, v] {
            if w >= n {
                return Err(GraphError::VertexOutOfRange { v: w, n });
            }
        }
        edges.push((u.min(v), u.max(v)));
    }
    edges.sort_unstable();
    for pair in edges.windows(2) {
        if pair[0] == pair[1] {
            return Err(GraphError::DuplicateEdge(pair[0].0, pair[0].1));
        }
    }
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in &edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    for list in &mut adj {
        list.sort_unstable();
    }
    Ok(Graph { n, edges, adj })
}

/// Named graph families. Random families are reproducible from their seed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Path { n: usize },
    Cycle { n: usize },
    Complete { n: usize },
    CompleteBipartite { a: usize, b: usize },
    /// `n` vertices total: center 0 plus `n - 1` leaves.
    Star { n: usize },
    /// Uniform over labeled trees on `n` vertices (Prüfer construction).
    RandomTree { n: usize, seed: u64 },
    /// Each of the `n(n-1)/2` possible edges present independently with
    /// probability 1/2.
    RandomGraph { n: usize, seed: u64 },
}

pub fn generate_named(family: Family) -> Result<Graph, GraphError> {
    match family {
        Family::Path { n } => {
            let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
            build_graph(n, &edges)
        }
        Family::Cycle { n } => {
            if n < 3 {
                return Err(GraphError::CycleTooShort(n));
            }
            let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
            edges.push((n - 1, 0));
            build_graph(n, &edges)
        }
        Family::Complete { n } => {
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    edges.push((u, v));
                }
            }
            build_graph(n, &edges)
        }
        Family::CompleteBipartite { a, b } => {
            if a == 0 || b == 0 {
                return Err(GraphError::EmptyPart);
            }
            let mut edges = Vec::new();
            for u in 0..a {
                for v in a..a + b {
                    edges.push((u, v));
                }
            }
            build_graph(a + b, &edges)
        }
        Family::Star { n } => {
            let edges: Vec<_> = (1..n).map(|i| (0, i)).collect();
            build_graph(n, &edges)
        }
        Family::RandomTree { n, seed } => {
            if n == 0 {
                return Err(GraphError::NoVertices);
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let pruefer: Vec<usize> = (0..n.saturating_sub(2))
                .map(|_| rng.gen_range(0..n))
                .collect();
            build_graph(n, &pruefer_decode(n, &pruefer))
        }
        Family::RandomGraph { n, seed } => {
            if n == 0 {
                return Err(GraphError::NoVertices);
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(0.5) {
                        edges.push((u, v));
                    }
                }
            }
            build_graph(n, &edges)
        }
    }
}

/// Edges of the labeled tree encoded by a Prüfer sequence over `0..n`.
fn pruefer_decode(n: usize, seq: &[usize]) -> Vec<(usize, usize)> {
    if n == 1 {
        return Vec::new();
    }
    if n == 2 {
        return vec![(0, 1)];
    }
    let mut degree = vec![1usize; n];
    for &s in seq {
        degree[s] += 1;
    }
    let mut leaves: std::collections::BTreeSet<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &s in seq {
        let leaf = *leaves.iter().next().expect("a tree always has a leaf");
        leaves.remove(&leaf);
        edges.push((leaf, s));
        degree[s] -= 1;
        if degree[s] == 1 {
            leaves.insert(s);
        }
    }
    let mut rest = leaves.into_iter();
    let (a, b) = (rest.next().unwrap(), rest.next().unwrap());
    debug_assert!(rest.next().is_none());
    edges.push((a, b));
    edges
}

/// A vertex of `G □ K_k`, addressed as (vertex of G, layer in `1..=k`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ProductVertex {
    pub base: usize,
    pub layer: usize,
}

impl ProductVertex {
    /// Row-major index used consistently everywhere: `base * k + (layer - 1)`.
    pub fn index(&self, k: usize) -> usize {
        debug_assert!((1..=k).contains(&self.layer));
        self.base * k + (self.layer - 1)
    }

    pub fn from_index(idx: usize, k: usize) -> ProductVertex {
        ProductVertex {
            base: idx / k,
            layer: idx % k + 1,
        }
    }
}

/// The Cartesian product `G □ K_k`: `(v, i)` is adjacent to `(v', j)` iff
/// `v = v'` and `i ≠ j`, or `i = j` and `vv'` is an edge of `G`.
///
/// Product vertices use the row-major indexing of [`ProductVertex`]; the
/// result has `n·k` vertices and `n·k(k-1)/2 + m·k` edges.
pub fn cartesian_with_complete(g: &Graph, k: usize) -> Result<Graph, GraphError> {
    if k == 0 {
        return Err(GraphError::ZeroLayers);
    }
    let n = g.n();
    let mut edges = Vec::with_capacity(n * k * (k - 1) / 2 + g.m() * k);
    for v in 0..n {
        for i in 0..k {
            for j in i + 1..k {
                edges.push((v * k + i, v * k + j));
            }
        }
    }
    for &(u, v) in g.edges() {
        for i in 0..k {
            edges.push((u * k + i, v * k + i));
        }
    }
    build_graph(n * k, &edges)
}

/// Girth query result; acyclic graphs get an explicit sentinel rather than a
/// numeric convention.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Girth {
    Finite(usize),
    Acyclic,
}

/// Length of a shortest cycle, by breadth-first search from every vertex.
///
/// From each start, a non-tree edge `{x, y}` witnesses a cycle of length at
/// most `dist(x) + dist(y) + 1`; the minimum over all starts is exact.
pub fn girth(g: &Graph) -> Girth {
    let mut best: Option<usize> = None;
    for start in 0..g.n() {
        let mut dist = vec![usize::MAX; g.n()];
        let mut parent = vec![usize::MAX; g.n()];
        dist[start] = 0;
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            for &w in g.neighbors(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if w != parent[u] {
                    let cycle = dist[u] + dist[w] + 1;
                    if best.map_or(true, |b| cycle < b) {
                        best = Some(cycle);
                    }
                }
            }
        }
        if best == Some(3) {
            break; // girth can't go lower in a simple graph
        }
    }
    match best {
        Some(gir) => Girth::Finite(gir),
        None => Girth::Acyclic,
    }
}
