use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Immutable simple undirected graph on the vertices `0..n`.
///
/// Neighbor lists are kept sorted, so iteration order is deterministic and
/// adjacency tests are a binary search.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    m: usize,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges collapse.
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            if u >= n {
                return Err(Error::VertexOutOfRange { vertex: u, n });
            }
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut m = 0;
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
            m += list.len();
        }
        Ok(Graph { adj, m: m / 2 })
    }

    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            m: 0,
        }
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.adj.len()
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.m
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// Missing pairs `(u, v)` with `u < v`, in lexicographic order.
    pub fn non_edges(&self) -> Vec<(usize, usize)> {
        let n = self.order();
        let mut out = Vec::new();
        for u in 0..n {
            let mut it = self.adj[u].iter().peekable();
            for v in u + 1..n {
                while it.peek().is_some_and(|&&w| w < v) {
                    it.next();
                }
                if it.peek() != Some(&&v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Copy of the graph with `uv` added.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph> {
        Graph::new(self.order(), self.edges().chain(std::iter::once((u, v))))
    }

    /// Copy of the graph with the listed vertices removed; the survivors are
    /// relabeled in increasing order.
    pub fn without_vertices(&self, removed: &[usize]) -> Graph {
        let n = self.order();
        let mut keep = vec![true; n];
        for &v in removed {
            if v < n {
                keep[v] = false;
            }
        }
        let mut map = vec![usize::MAX; n];
        let mut next = 0;
        for v in 0..n {
            if keep[v] {
                map[v] = next;
                next += 1;
            }
        }
        let edges = self
            .edges()
            .filter(|&(u, v)| keep[u] && keep[v])
            .map(|(u, v)| (map[u], map[v]));
        Graph::new(next, edges).expect("relabeled edges are valid")
    }

    /// Applies `perm`, where `perm[old] = new`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.order(), "permutation length");
        Graph::new(self.order(), self.edges().map(|(u, v)| (perm[u], perm[v])))
            .expect("a permutation keeps edges valid")
    }

    /// Subgraph induced by `vertices`, relabeled by position in the slice.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut pos = vec![usize::MAX; self.order()];
        for (i, &v) in vertices.iter().enumerate() {
            pos[v] = i;
        }
        let mut edges = Vec::new();
        for (i, &v) in vertices.iter().enumerate() {
            for &w in &self.adj[v] {
                let j = pos[w];
                if j != usize::MAX && i < j {
                    edges.push((i, j));
                }
            }
        }
        Graph::new(vertices.len(), edges).expect("induced edges are valid")
    }

    /// True iff every vertex is reachable from vertex 0. `K1` is connected.
    pub fn is_connected(&self) -> bool {
        self.order() == 0 || self.bfs(0).iter().all(Option::is_some)
    }

    /// Breadth-first distances from `s`; `None` marks unreachable vertices.
    pub fn bfs(&self, s: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.order()];
        dist[s] = Some(0);
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            let d = dist[v].unwrap();
            for &w in &self.adj[v] {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn distance(&self, u: usize, v: usize) -> Option<usize> {
        self.bfs(u)[v]
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let mut comp = vec![s];
            seen[s] = true;
            let mut i = 0;
            while i < comp.len() {
                let v = comp[i];
                i += 1;
                for &w in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_regular(&self, d: usize) -> bool {
        self.adj.iter().all(|l| l.len() == d)
    }

    pub fn is_complete(&self) -> bool {
        let n = self.order();
        self.adj.iter().all(|l| l.len() + 1 == n)
    }

    /// Adjacency rows as bitmasks; only for graphs on at most 64 vertices.
    pub fn adjacency_masks(&self) -> Result<Vec<u64>> {
        if self.order() > 64 {
            return Err(Error::SizeLimit {
                what: "bitmask adjacency",
                size: self.order(),
                limit: 64,
            });
        }
        Ok(self
            .adj
            .iter()
            .map(|l| l.iter().fold(0u64, |acc, &w| acc | 1 << w))
            .collect())
    }

    /// Checks that `path` is a simple path in this graph.
    pub fn is_path(&self, path: &[usize]) -> bool {
        let mut seen = vec![false; self.order()];
        for &v in path {
            if v >= self.order() || seen[v] {
                return false;
            }
            seen[v] = true;
        }
        path.windows(2).all(|w| self.has_edge(w[0], w[1]))
    }

    /// Checks that `cycle` (listed without repeating its first vertex) is a
    /// cycle of length at least 3.
    pub fn is_cycle(&self, cycle: &[usize]) -> bool {
        cycle.len() >= 3 && self.is_path(cycle) && self.has_edge(cycle[0], cycle[cycle.len() - 1])
    }

    pub fn to_adjacency(&self) -> AdjacencyList {
        AdjacencyList {
            n: self.order(),
            adjacency: self.adj.clone(),
        }
    }
}

/// JSON shape for reports: `{"n": 3, "adjacency": [[1,2],[0,2],[0,1]]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdjacencyList {
    pub n: usize,
    pub adjacency: Vec<Vec<usize>>,
}

impl TryFrom<AdjacencyList> for Graph {
    type Error = Error;

    fn try_from(value: AdjacencyList) -> Result<Graph> {
        if value.adjacency.len() != value.n {
            return Err(Error::InvalidParameter(format!(
                "adjacency has {} rows for n = {}",
                value.adjacency.len(),
                value.n
            )));
        }
        let edges = value
            .adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, l)| l.iter().map(move |&v| (u, v)))
            .collect::<Vec<_>>();
        let g = Graph::new(value.n, edges.iter().copied())?;
        if edges.iter().any(|&(u, v)| !value.adjacency[v].contains(&u)) {
            return Err(Error::InvalidParameter("adjacency is not symmetric".into()));
        }
        Ok(g)
    }
}
