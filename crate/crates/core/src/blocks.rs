//! Block (biconnected component) decomposition and block classification.

use std::collections::VecDeque;

use serde::Serialize;

use crate::{Error, Graph, Result};

/// Recognized block shapes.
///
/// `D` and `H` are the 2-connected C≥6-saturated families: `D(r, s)` is a
/// triangle `t1 t2 t3` with `r` degree-2 vertices on `{t1, t2}` and `s` on
/// `{t1, t3}`; `H(t, 6, 2)` is a `K4` plus `t - 4` degree-2 vertices joined to
/// the same two vertices of the `K4`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum BlockKind {
    Complete { order: usize },
    D { r: usize, s: usize, centers: [usize; 3] },
    H { t: usize, centers: [usize; 2] },
    Other,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Block {
    /// Sorted global vertex labels.
    pub vertices: Vec<usize>,
    /// Edges `(u, v)` with `u < v`, sorted.
    pub edges: Vec<(usize, usize)>,
    pub kind: BlockKind,
}

impl Block {
    pub fn order(&self) -> usize {
        self.vertices.len()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    pub fn is_k2(&self) -> bool {
        self.vertices.len() == 2
    }

    pub fn is_complete(&self, order: usize) -> bool {
        self.kind == BlockKind::Complete { order }
    }

    /// Center vertices for the `D` and `H` families, empty otherwise.
    pub fn centers(&self) -> &[usize] {
        match &self.kind {
            BlockKind::D { centers, .. } => centers,
            BlockKind::H { centers, .. } => centers,
            _ => &[],
        }
    }
}

/// Tallies of block shapes.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct BlockCounts {
    pub b2: usize,
    pub b3: usize,
    pub b4: usize,
    pub b5: usize,
    /// Blocks isomorphic to some `D(r, s)` with `r, s >= 2`.
    pub d: usize,
    /// Blocks isomorphic to some `H(t, 6, 2)` with `t >= 6`.
    pub h: usize,
    pub other: usize,
}

impl BlockCounts {
    pub fn total(&self) -> usize {
        self.b2 + self.b3 + self.b4 + self.b5 + self.d + self.h + self.other
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct BlockDecomposition {
    pub blocks: Vec<Block>,
    pub cut_vertices: Vec<usize>,
    /// Indices into `blocks` of the `K2` blocks (the bridges).
    pub b2: Vec<usize>,
    pub counts: BlockCounts,
    #[serde(skip)]
    vertex_blocks: Vec<Vec<usize>>,
}

/// Block decomposition of a connected graph.
pub fn block_decomposition(g: &Graph) -> Result<BlockDecomposition> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(BlockDecomposition::of(g))
}

/// True iff no vertex lies on two `K2` blocks.
pub fn b2_is_matching(g: &Graph) -> bool {
    BlockDecomposition::of(g).b2_is_matching()
}

impl BlockDecomposition {
    /// Decomposes any graph, connected or not. Isolated vertices belong to no
    /// block.
    pub fn of(g: &Graph) -> Self {
        let mut blocks: Vec<Block> = biconnected_edge_sets(g)
            .into_iter()
            .map(|mut edges| {
                edges.sort_unstable();
                let mut vertices: Vec<usize> = edges.iter().flat_map(|&(u, v)| [u, v]).collect();
                vertices.sort_unstable();
                vertices.dedup();
                let kind = classify(&vertices, &edges);
                Block { vertices, edges, kind }
            })
            .collect();
        blocks.sort_by(|a, b| a.vertices.cmp(&b.vertices));

        let mut vertex_blocks = vec![Vec::new(); g.order()];
        for (i, b) in blocks.iter().enumerate() {
            for &v in &b.vertices {
                vertex_blocks[v].push(i);
            }
        }
        let cut_vertices = (0..g.order()).filter(|&v| vertex_blocks[v].len() > 1).collect();
        let b2 = (0..blocks.len()).filter(|&i| blocks[i].is_k2()).collect();
        let mut counts = BlockCounts::default();
        for b in &blocks {
            match b.kind {
                BlockKind::Complete { order: 2 } => counts.b2 += 1,
                BlockKind::Complete { order: 3 } => counts.b3 += 1,
                BlockKind::Complete { order: 4 } => counts.b4 += 1,
                BlockKind::Complete { order: 5 } => counts.b5 += 1,
                BlockKind::D { .. } => counts.d += 1,
                BlockKind::H { .. } => counts.h += 1,
                _ => counts.other += 1,
            }
        }
        BlockDecomposition {
            blocks,
            cut_vertices,
            b2,
            counts,
            vertex_blocks,
        }
    }

    /// Indices of the blocks containing `v`.
    pub fn blocks_of(&self, v: usize) -> &[usize] {
        &self.vertex_blocks[v]
    }

    pub fn is_cut_vertex(&self, v: usize) -> bool {
        self.vertex_blocks[v].len() > 1
    }

    pub fn b2_is_matching(&self) -> bool {
        self.vertex_blocks
            .iter()
            .all(|bs| bs.iter().filter(|&&b| self.blocks[b].is_k2()).count() <= 1)
    }

    /// Walks the block-cut tree from `u` to `v` and returns the blocks on the
    /// way, each with the vertex where the walk enters and leaves it. Every
    /// `u`-`v` path passes through exactly these blocks in this order, so
    /// path questions split into independent per-block questions.
    ///
    /// Returns `None` when `u` and `v` lie in different components.
    pub fn block_path(&self, u: usize, v: usize) -> Option<Vec<BlockSegment>> {
        assert_ne!(u, v, "block_path needs distinct endpoints");
        let nb = self.blocks.len();
        let start = self.vertex_blocks[u].clone();
        if start.is_empty() || self.vertex_blocks[v].is_empty() {
            return None;
        }
        // BFS on the bipartite block/vertex incidence graph, starting from all
        // blocks containing u. Tree structure makes the route unique.
        let mut prev_block: Vec<Option<(usize, usize)>> = vec![None; nb];
        let mut seen = vec![false; nb];
        let mut queue = VecDeque::new();
        for &b in &start {
            seen[b] = true;
            queue.push_back(b);
        }
        let mut goal = None;
        while let Some(b) = queue.pop_front() {
            if self.blocks[b].contains(v) {
                goal = Some(b);
                break;
            }
            for &x in &self.blocks[b].vertices {
                for &nbk in &self.vertex_blocks[x] {
                    if !seen[nbk] {
                        seen[nbk] = true;
                        prev_block[nbk] = Some((b, x));
                        queue.push_back(nbk);
                    }
                }
            }
        }
        let mut b = goal?;
        let mut segments = Vec::new();
        let mut exit = v;
        loop {
            match prev_block[b] {
                Some((p, cut)) => {
                    segments.push(BlockSegment { block: b, entry: cut, exit });
                    exit = cut;
                    b = p;
                }
                None => {
                    segments.push(BlockSegment { block: b, entry: u, exit });
                    break;
                }
            }
        }
        segments.reverse();
        Some(segments)
    }
}

/// One block on a block-cut-tree route.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BlockSegment {
    pub block: usize,
    pub entry: usize,
    pub exit: usize,
}

// Hopcroft-Tarjan on edges, iterative.
fn biconnected_edge_sets(g: &Graph) -> Vec<Vec<(usize, usize)>> {
    let n = g.order();
    const UNSEEN: usize = usize::MAX;
    let mut disc = vec![UNSEEN; n];
    let mut low = vec![0; n];
    let mut timer = 0;
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    let mut out = Vec::new();

    for root in 0..n {
        if disc[root] != UNSEEN || g.degree(root) == 0 {
            continue;
        }
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        // (vertex, parent, next neighbor index)
        let mut frames = vec![(root, UNSEEN, 0usize)];
        while let Some(frame) = frames.last_mut() {
            let (v, parent, idx) = *frame;
            if idx < g.degree(v) {
                frame.2 += 1;
                let w = g.neighbors(v)[idx];
                if w == parent {
                    continue;
                }
                if disc[w] == UNSEEN {
                    edge_stack.push((v, w));
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    frames.push((w, v, 0));
                } else if disc[w] < disc[v] {
                    edge_stack.push((v, w));
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                frames.pop();
                if parent != UNSEEN {
                    low[parent] = low[parent].min(low[v]);
                    if low[v] >= disc[parent] {
                        let mut comp = Vec::new();
                        while let Some(e) = edge_stack.pop() {
                            comp.push((e.0.min(e.1), e.0.max(e.1)));
                            if e == (parent, v) {
                                break;
                            }
                        }
                        out.push(comp);
                    }
                }
            }
        }
    }
    out
}

fn classify(vertices: &[usize], edges: &[(usize, usize)]) -> BlockKind {
    let k = vertices.len();
    let m = edges.len();
    if m == k * (k - 1) / 2 {
        return BlockKind::Complete { order: k };
    }
    let idx = |v: usize| vertices.binary_search(&v).unwrap();
    let mut adj = vec![Vec::new(); k];
    for &(u, v) in edges {
        adj[idx(u)].push(idx(v));
        adj[idx(v)].push(idx(u));
    }
    let has = |a: usize, b: usize| adj[a].contains(&b);
    let deg: Vec<usize> = adj.iter().map(Vec::len).collect();

    // D(r, s): r + s + 3 vertices, 2(r + s) + 3 edges, three centers.
    if k >= 7 && m == 2 * k - 3 {
        let high: Vec<usize> = (0..k).filter(|&i| deg[i] > 2).collect();
        if high.len() == 3 && has(high[0], high[1]) && has(high[0], high[2]) && has(high[1], high[2]) {
            if let Some(&t1) = high.iter().find(|&&i| deg[i] == k - 1) {
                let others: Vec<usize> = high.iter().copied().filter(|&i| i != t1).collect();
                let (t2, t3) = (others[0], others[1]);
                let mut r = 0;
                let mut s = 0;
                let mut ok = true;
                for i in (0..k).filter(|i| !high.contains(i)) {
                    if deg[i] != 2 || !has(i, t1) {
                        ok = false;
                        break;
                    }
                    if has(i, t2) {
                        r += 1;
                    } else if has(i, t3) {
                        s += 1;
                    } else {
                        ok = false;
                        break;
                    }
                }
                if ok && r >= 2 && s >= 2 {
                    return BlockKind::D {
                        r,
                        s,
                        centers: [vertices[t1], vertices[t2], vertices[t3]],
                    };
                }
            }
        }
    }

    // H(t, 6, 2): t vertices, 2t - 2 edges, two centers of degree t - 1.
    if k >= 6 && m == 2 * k - 2 {
        let centers: Vec<usize> = (0..k).filter(|&i| deg[i] == k - 1).collect();
        let cubic: Vec<usize> = (0..k).filter(|&i| deg[i] == 3).collect();
        let rest_ok = (0..k)
            .filter(|i| !centers.contains(i) && !cubic.contains(i))
            .all(|i| deg[i] == 2);
        if centers.len() == 2 && cubic.len() == 2 && rest_ok && has(cubic[0], cubic[1]) {
            return BlockKind::H {
                t: k,
                centers: [vertices[centers[0]], vertices[centers[1]]],
            };
        }
    }
    BlockKind::Other
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: usize, e: &[(usize, usize)]) -> Graph {
        Graph::new(n, e.iter().copied()).unwrap()
    }

    #[test]
    fn bowtie() {
        let d = block_decomposition(&g(5, &[(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)])).unwrap();
        assert_eq!(d.blocks.len(), 2);
        assert_eq!(d.cut_vertices, vec![0]);
        assert_eq!(d.counts.b3, 2);
    }

    #[test]
    fn path_blocks_are_bridges() {
        let d = block_decomposition(&g(4, &[(0, 1), (1, 2), (2, 3)])).unwrap();
        assert_eq!(d.blocks.len(), 3);
        assert_eq!(d.b2.len(), 3);
        assert_eq!(d.cut_vertices, vec![1, 2]);
    }

    #[test]
    fn disconnected_rejected() {
        assert!(matches!(
            block_decomposition(&g(4, &[(0, 1), (2, 3)])),
            Err(Error::Disconnected)
        ));
    }

    #[test]
    fn matching_examples() {
        assert!(!b2_is_matching(&g(3, &[(0, 1), (1, 2)])));
        assert!(b2_is_matching(&g(4, &[(0, 1), (1, 2), (2, 0), (2, 3)])));
    }

    #[test]
    fn classifies_families() {
        // D(2, 2): t1=0, t2=1, t3=2, A={3,4}, B={5,6}
        let d22 = g(
            7,
            &[(0, 1), (0, 2), (1, 2), (3, 0), (3, 1), (4, 0), (4, 1), (5, 0), (5, 2), (6, 0), (6, 2)],
        );
        let dec = BlockDecomposition::of(&d22);
        assert_eq!(dec.blocks.len(), 1);
        assert_eq!(dec.blocks[0].kind, BlockKind::D { r: 2, s: 2, centers: [0, 1, 2] });
        // H(6, 6, 2): centers 0, 1; clique 0..3; independent 4, 5.
        let h = g(
            6,
            &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (4, 0), (4, 1), (5, 0), (5, 1)],
        );
        let dec = BlockDecomposition::of(&h);
        assert_eq!(dec.blocks[0].kind, BlockKind::H { t: 6, centers: [0, 1] });
        // K4 minus an edge is none of the named families.
        let k4m = g(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]);
        assert_eq!(BlockDecomposition::of(&k4m).blocks[0].kind, BlockKind::Other);
    }

    #[test]
    fn block_path_through_cut_vertices() {
        // triangle 0,1,2 - bridge 2-3 - triangle 3,4,5
        let gr = g(6, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 3)]);
        let d = BlockDecomposition::of(&gr);
        let route = d.block_path(0, 5).unwrap();
        let ends: Vec<(usize, usize)> = route.iter().map(|s| (s.entry, s.exit)).collect();
        assert_eq!(ends, vec![(0, 2), (2, 3), (3, 5)]);
        let same = d.block_path(2, 1).unwrap();
        assert_eq!(same.len(), 1);
        assert_eq!((same[0].entry, same[0].exit), (2, 1));
        let two = g(4, &[(0, 1), (2, 3)]);
        assert!(BlockDecomposition::of(&two).block_path(0, 3).is_none());
    }

    #[test]
    fn every_edge_in_exactly_one_block() {
        let gr = g(
            8,
            &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 3), (5, 6), (6, 7), (7, 5), (4, 6)],
        );
        let d = BlockDecomposition::of(&gr);
        let mut all: Vec<_> = d.blocks.iter().flat_map(|b| b.edges.clone()).collect();
        all.sort();
        let mut expected: Vec<_> = gr.edges().collect();
        expected.sort();
        assert_eq!(all, expected);
    }
}
