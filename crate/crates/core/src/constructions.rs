//! Deterministic builders for the saturated graph families.
//!
//! Every builder documents its labeling; building twice gives the same
//! labeled graph.

use serde::{Deserialize, Serialize};

use crate::bounds::{mrn_case, MrnCase};
use crate::structure::is_good_graph;
use crate::{graph6, Error, Graph, Result};

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParameter(msg.into())
}

pub fn complete(n: usize) -> Graph {
    Graph::new(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)))).unwrap()
}

/// `D(a, b)`: centers `t1 = 0`, `t2 = 1`, `t3 = 2` forming a triangle,
/// `A = 3..a+3` joined to `{t1, t2}`, `B = a+3..a+b+3` joined to `{t1, t3}`.
pub fn d_graph(a: usize, b: usize) -> Graph {
    let mut edges = vec![(0, 1), (0, 2), (1, 2)];
    for x in 3..a + 3 {
        edges.extend([(0, x), (1, x)]);
    }
    for x in a + 3..a + b + 3 {
        edges.extend([(0, x), (2, x)]);
    }
    Graph::new(a + b + 3, edges).unwrap()
}

/// `H(n, k, r)`: a clique on `0..k-r`, whose first `r` vertices (the centers)
/// are also joined to every vertex of the independent set `k-r..n`.
pub fn h_graph(n: usize, k: usize, r: usize) -> Result<Graph> {
    if k < 2 * r || n < k {
        return Err(invalid(format!("H(n, k, r) needs n >= k >= 2r, got ({n}, {k}, {r})")));
    }
    let c = k - r;
    let mut edges: Vec<(usize, usize)> = (0..c).flat_map(|i| (i + 1..c).map(move |j| (i, j))).collect();
    for x in c..n {
        edges.extend((0..r).map(|z| (z, x)));
    }
    Graph::new(n, edges)
}

/// One block of a cactus, with the labels of [`complete`], [`d_graph`], and
/// [`h_graph`] (`H(t, 6, 2)`) as local labels.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "block", rename_all = "snake_case")]
pub enum CactusBlock {
    K3,
    K4,
    K5,
    D { r: usize, s: usize },
    H { t: usize },
}

impl CactusBlock {
    pub fn build(&self) -> Result<Graph> {
        match *self {
            CactusBlock::K3 => Ok(complete(3)),
            CactusBlock::K4 => Ok(complete(4)),
            CactusBlock::K5 => Ok(complete(5)),
            CactusBlock::D { r, s } if r >= 2 && s >= 2 => Ok(d_graph(r, s)),
            CactusBlock::D { r, s } => Err(invalid(format!("cactus block D({r}, {s}) needs r, s >= 2"))),
            CactusBlock::H { t } if t >= 6 => h_graph(t, 6, 2),
            CactusBlock::H { t } => Err(invalid(format!("cactus block H({t}, 6, 2) needs t >= 6"))),
        }
    }
}

/// Block `i + 1` of a cactus shares its local vertex `own` with local vertex
/// `host_vertex` of the earlier block `host`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Attachment {
    pub host: usize,
    pub host_vertex: usize,
    pub own: usize,
}

/// Cactus with the given blocks. Block 0 takes labels `0..k0`; each later
/// block reuses the label of its attachment vertex and appends the rest in
/// local order. Without a plan every block hangs off vertex 0.
pub fn cactus(blocks: &[CactusBlock], plan: Option<&[Attachment]>) -> Result<Graph> {
    if blocks.is_empty() {
        return Err(invalid("a cactus needs at least one block"));
    }
    let default: Vec<Attachment> = (1..blocks.len())
        .map(|_| Attachment { host: 0, host_vertex: 0, own: 0 })
        .collect();
    let plan = plan.unwrap_or(&default);
    if plan.len() + 1 != blocks.len() {
        return Err(invalid(format!(
            "attachment plan has {} entries for {} blocks",
            plan.len(),
            blocks.len()
        )));
    }
    let parts: Vec<Graph> = blocks.iter().map(CactusBlock::build).collect::<Result<_>>()?;
    let mut labels: Vec<Vec<usize>> = Vec::new();
    let mut edges = Vec::new();
    let mut n = 0;
    for (i, part) in parts.iter().enumerate() {
        let mut map = vec![usize::MAX; part.order()];
        if i > 0 {
            let a = plan[i - 1];
            if a.host >= i {
                return Err(invalid(format!("block {i} attaches to later block {}", a.host)));
            }
            if a.host_vertex >= parts[a.host].order() || a.own >= part.order() {
                return Err(invalid(format!("attachment of block {i} names a missing vertex")));
            }
            map[a.own] = labels[a.host][a.host_vertex];
        }
        for slot in map.iter_mut().filter(|s| **s == usize::MAX) {
            *slot = n;
            n += 1;
        }
        edges.extend(part.edges().map(|(u, v)| (map[u], map[v])));
        labels.push(map);
    }
    Graph::new(n, edges)
}

/// `M_{6,n}`. Odd `n`: `D((n-7)/2, 2)` with a pendant leaf on every
/// non-center vertex, leaves labeled after the `D` vertices in host order.
/// Even `n`: `m6(n + 1)` without its last leaf.
pub fn m6(n: usize) -> Result<Graph> {
    if n < 10 {
        return Err(invalid(format!("m6 needs n >= 10, got {n}")));
    }
    if n.is_multiple_of(2) {
        let g = m6(n + 1)?;
        return Ok(g.without_vertices(&[n]));
    }
    let d = d_graph((n - 7) / 2, 2);
    attach(&d, &(3..d.order()).collect::<Vec<_>>(), &[])
}

/// Isaacs flower snark `J_k` on `v_0..v_{4k}`: for each `j`, `v_{4j}` is
/// joined to `v_{4j+1}, v_{4j+2}, v_{4j+3}`, and `v_{4j+1} v_{4j+7}`,
/// `v_{4j+2} v_{4j+6}`, `v_{4j+3} v_{4j+5}` are edges (indices mod `4k`).
pub fn isaacs_snark(k: usize) -> Result<Graph> {
    if k < 3 || k.is_multiple_of(2) {
        return Err(invalid(format!("J_k needs odd k >= 3, got {k}")));
    }
    let n = 4 * k;
    let mut edges = Vec::new();
    for j in 0..k {
        let b = 4 * j;
        edges.extend([
            (b, b + 1),
            (b, b + 2),
            (b, b + 3),
            (b + 1, (b + 7) % n),
            (b + 2, (b + 6) % n),
            (b + 3, (b + 5) % n),
        ]);
    }
    Graph::new(n, edges)
}

/// Replaces the degree-3 vertex `v` by a triangle `u1 u2 u3`. `u1` keeps the
/// label `v` and takes the lowest former neighbor; `u2 = n` and `u3 = n + 1`
/// take the other two in ascending order.
pub fn expand_vertex(g: &Graph, v: usize) -> Result<Graph> {
    let n = g.order();
    if v >= n {
        return Err(Error::VertexOutOfRange { vertex: v, n });
    }
    if g.degree(v) != 3 {
        return Err(invalid(format!("vertex {v} has degree {}, expected 3", g.degree(v))));
    }
    let nb = g.neighbors(v);
    let (x, y, z) = (nb[0], nb[1], nb[2]);
    let edges = g
        .edges()
        .filter(|&(a, b)| a != v && b != v)
        .chain([(v, n), (n, n + 1), (n + 1, v), (v, x), (n, y), (n + 1, z)]);
    Graph::new(n + 2, edges)
}

/// Expands each listed vertex in turn.
pub fn expand_vertices(g: &Graph, vs: &[usize]) -> Result<Graph> {
    vs.iter().try_fold(g.clone(), |acc, &v| expand_vertex(&acc, v))
}

/// Replaces the edge `uv` (both ends of degree 3) by a bowtie on
/// `x1 = u, x2 = v, y1 = n, y2 = n + 1, z = n + 2` with triangles
/// `x1 y1 z` and `x2 y2 z`. With `u`'s other neighbors `x_u < y_u` and `v`'s
/// `x_v < y_v`, the new edges are `x1 x_u, y1 y_u, x2 x_v, y2 y_v`.
pub fn expand_edge(g: &Graph, u: usize, v: usize) -> Result<Graph> {
    let n = g.order();
    if !g.has_edge(u, v) {
        return Err(invalid(format!("({u},{v}) is not an edge")));
    }
    for w in [u, v] {
        if g.degree(w) != 3 {
            return Err(invalid(format!("vertex {w} has degree {}, expected 3", g.degree(w))));
        }
    }
    let other = |w: usize, skip: usize| -> Vec<usize> { g.neighbors(w).iter().copied().filter(|&x| x != skip).collect() };
    let (nu, nv) = (other(u, v), other(v, u));
    let (y1, y2, z) = (n, n + 1, n + 2);
    let edges = g
        .edges()
        .filter(|&(a, b)| a != u && b != u && a != v && b != v)
        .chain([(u, y1), (v, y2), (z, u), (z, v), (z, y1), (z, y2)])
        .chain([(u, nu[0]), (y1, nu[1]), (v, nv[0]), (y2, nv[1])]);
    Graph::new(n + 3, edges)
}

/// `L(G; U, W)`: a pendant vertex on each vertex of `U` and a pendant
/// triangle on each vertex of `W`. New labels are appended walking the hosts
/// in ascending order; a triangle takes two consecutive labels.
pub fn attach(g: &Graph, u: &[usize], w: &[usize]) -> Result<Graph> {
    let n = g.order();
    let mut kind = vec![0u8; n];
    for (set, tag) in [(u, 1u8), (w, 2u8)] {
        for &x in set {
            if x >= n {
                return Err(Error::VertexOutOfRange { vertex: x, n });
            }
            if kind[x] != 0 && kind[x] != tag {
                return Err(invalid(format!("vertex {x} is in both U and W")));
            }
            kind[x] = tag;
        }
    }
    let mut edges: Vec<(usize, usize)> = g.edges().collect();
    let mut next = n;
    for (x, &t) in kind.iter().enumerate() {
        match t {
            1 => {
                edges.push((x, next));
                next += 1;
            }
            2 => {
                edges.extend([(x, next), (x, next + 1), (next, next + 1)]);
                next += 2;
            }
            _ => {}
        }
    }
    Graph::new(next, edges)
}

/// `C(G_1, ..., G_k; u_1 v_1, ..., u_{k-1} v_{k-1})`. `joins[i] = (u, v)`
/// joins support vertex `u` of part `i` to support vertex `v` of part
/// `i + 1`; the lowest leaf on each is deleted. Parts are laid out in order
/// and the result is relabeled order-preservingly.
pub fn chain(parts: &[Graph], joins: &[(usize, usize)]) -> Result<Graph> {
    if parts.is_empty() || joins.len() + 1 != parts.len() {
        return Err(invalid(format!("{} parts need {} joins, got {}", parts.len(), parts.len().saturating_sub(1), joins.len())));
    }
    let mut offset = Vec::new();
    let mut total = 0;
    for p in parts {
        offset.push(total);
        total += p.order();
    }
    let leaf_of = |part: usize, s: usize| -> Result<usize> {
        let g = &parts[part];
        if s >= g.order() {
            return Err(Error::VertexOutOfRange { vertex: s, n: g.order() });
        }
        g.neighbors(s)
            .iter()
            .copied()
            .find(|&x| g.degree(x) == 1)
            .ok_or_else(|| invalid(format!("vertex {s} of part {part} is not a support vertex")))
    };
    for i in 1..joins.len() {
        if joins[i - 1].1 == joins[i].0 {
            return Err(invalid(format!(
                "part {i} uses vertex {} for both of its joins",
                joins[i].0
            )));
        }
    }
    let mut removed = Vec::new();
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for (i, p) in parts.iter().enumerate() {
        edges.extend(p.edges().map(|(a, b)| (a + offset[i], b + offset[i])));
    }
    for (i, &(u, v)) in joins.iter().enumerate() {
        let lu = leaf_of(i, u)?;
        let lv = leaf_of(i + 1, v)?;
        if lu == v && parts[i].order() == 2 {
            return Err(invalid(format!("part {i} is a bare edge")));
        }
        removed.extend([lu + offset[i], lv + offset[i + 1]]);
        edges.push((u + offset[i], v + offset[i + 1]));
    }
    removed.sort_unstable();
    if removed.windows(2).any(|w| w[0] == w[1]) {
        return Err(invalid("two joins delete the same leaf"));
    }
    Ok(Graph::new(total, edges)?.without_vertices(&removed))
}

/// `M_{r,n}` built from an `r`-vertex good base graph.
///
/// Leaf and triangle hosts are the lowest and highest base labels. In the
/// chained cases each part is joined to the previous one at its local vertex
/// 0 and to the next one at the lowest other vertex.
pub fn m_rn(r: usize, n: usize, base: &Graph) -> Result<Graph> {
    if base.order() != r {
        return Err(invalid(format!("base has {} vertices, expected r = {r}", base.order())));
    }
    if !is_good_graph(base) {
        return Err(Error::Precondition("base graph is not good (3-regular or almost 3-regular, barbell-free)".into()));
    }
    let all: Vec<usize> = (0..r).collect();
    match mrn_case(r, n)? {
        MrnCase::Single => attach(base, &all[..n - r], &[]),
        MrnCase::Mixed { k } => {
            let parts = k - 1;
            let mut extra = n + 2 * (k - 2) - 2 * (k - 1) * r;
            let mut sizes = Vec::new();
            for i in 0..parts {
                let min_u = join_count(i, parts);
                let take = extra.min(r - min_u);
                extra -= take;
                sizes.push(take);
            }
            if extra > 0 {
                return Err(invalid(format!("cannot place {n} vertices with r = {r}")));
            }
            let graphs = sizes
                .iter()
                .map(|&v| attach(base, &all[..r - v], &all[r - v..]))
                .collect::<Result<Vec<_>>>()?;
            chain(&graphs, &chain_joins(parts))
        }
        MrnCase::Leaves { k } => {
            let mins: Vec<usize> = (0..k).map(|i| join_count(i, k)).collect();
            let mut extra = (n + 2 * (k - 1)).checked_sub(k * r + mins.iter().sum::<usize>()).ok_or_else(|| invalid("too few vertices for the part count"))?;
            let mut sizes = Vec::new();
            for &m in &mins {
                let take = extra.min(r - m);
                extra -= take;
                sizes.push(m + take);
            }
            if extra > 0 {
                return Err(invalid(format!("cannot place {n} vertices with r = {r}")));
            }
            let graphs = sizes
                .iter()
                .map(|&u| attach(base, &all[..u], &[]))
                .collect::<Result<Vec<_>>>()?;
            chain(&graphs, &chain_joins(k))
        }
    }
}

fn join_count(i: usize, parts: usize) -> usize {
    if parts == 1 {
        0
    } else if i == 0 || i + 1 == parts {
        1
    } else {
        2
    }
}

fn chain_joins(parts: usize) -> Vec<(usize, usize)> {
    (0..parts.saturating_sub(1))
        .map(|i| (if i == 0 { 0 } else { 1 }, 0))
        .collect()
}

/// Recipe for a good `r`-vertex base graph with `⌈3r/2⌉` edges, `r >= 56`,
/// by `r mod 8` with `k = 2⌊r/8⌋ + 1`.
pub fn good_base(r: usize) -> Result<ConstructionSpec> {
    if r < 56 {
        return Err(invalid(format!("good_base covers r >= 56, got {r}; use a verified small base such as J_5")));
    }
    let k = 2 * (r / 8) + 1;
    let snark = |k| Box::new(ConstructionSpec::Snark { k });
    let verts = |k, vs: &[usize]| {
        Box::new(ConstructionSpec::VertexExpand {
            base: snark(k),
            vertices: vs.to_vec(),
        })
    };
    let edge = |base| ConstructionSpec::EdgeExpand { base, u: 0, v: 2 };
    Ok(match r % 8 {
        0 => *verts(k - 2, &[2, 14]),
        1 => edge(verts(k - 2, &[14])),
        2 => *verts(k - 2, &[2, 14, 26]),
        3 => edge(verts(k - 2, &[14, 26])),
        4 => ConstructionSpec::Snark { k },
        5 => edge(verts(k - 2, &[14, 26, 38])),
        6 => *verts(k, &[2]),
        _ => edge(snark(k)),
    })
}

/// A declarative recipe for any family above.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum ConstructionSpec {
    Kn { n: usize },
    D { a: usize, b: usize },
    H { n: usize, k: usize, r: usize },
    Cactus {
        blocks: Vec<CactusBlock>,
        #[serde(default)]
        plan: Option<Vec<Attachment>>,
    },
    M6 { n: usize },
    Snark { k: usize },
    VertexExpand { base: Box<ConstructionSpec>, vertices: Vec<usize> },
    EdgeExpand { base: Box<ConstructionSpec>, u: usize, v: usize },
    Attach {
        base: Box<ConstructionSpec>,
        #[serde(default)]
        u: Vec<usize>,
        #[serde(default)]
        w: Vec<usize>,
    },
    Chain { parts: Vec<ConstructionSpec>, joins: Vec<(usize, usize)> },
    Mrn { r: usize, n: usize, base: Box<ConstructionSpec> },
    GoodBase { r: usize },
    Graph6 { data: String },
}

impl ConstructionSpec {
    pub fn build(&self) -> Result<Graph> {
        use ConstructionSpec::*;
        match self {
            Kn { n } => Ok(complete(*n)),
            D { a, b } => Ok(d_graph(*a, *b)),
            H { n, k, r } => h_graph(*n, *k, *r),
            Cactus { blocks, plan } => cactus(blocks, plan.as_deref()),
            M6 { n } => m6(*n),
            Snark { k } => isaacs_snark(*k),
            VertexExpand { base, vertices } => expand_vertices(&base.build()?, vertices),
            EdgeExpand { base, u, v } => expand_edge(&base.build()?, *u, *v),
            Attach { base, u, w } => attach(&base.build()?, u, w),
            Chain { parts, joins } => {
                let graphs = parts.iter().map(ConstructionSpec::build).collect::<Result<Vec<_>>>()?;
                chain(&graphs, joins)
            }
            Mrn { r, n, base } => m_rn(*r, *n, &base.build()?),
            GoodBase { r } => good_base(*r)?.build(),
            Graph6 { data } => graph6::parse(data),
        }
    }

    /// Non-fatal remarks, such as parameters outside a family's saturated
    /// range.
    pub fn warnings(&self) -> Vec<String> {
        use ConstructionSpec::*;
        let mut out = Vec::new();
        match self {
            D { a, b } if *a < 2 || *b < 2 => {
                out.push(format!("D({a}, {b}) is not C>=6-saturated; that needs a, b >= 2"));
            }
            VertexExpand { base, .. } | EdgeExpand { base, .. } | Attach { base, .. } | Mrn { base, .. } => {
                out.extend(base.warnings());
            }
            Chain { parts, .. } => out.extend(parts.iter().flat_map(ConstructionSpec::warnings)),
            _ => {}
        }
        out
    }

    pub fn family(&self) -> &'static str {
        use ConstructionSpec::*;
        match self {
            Kn { .. } => "kn",
            D { .. } => "d",
            H { .. } => "h",
            Cactus { .. } => "cactus",
            M6 { .. } => "m6",
            Snark { .. } => "snark",
            VertexExpand { .. } => "vertex_expand",
            EdgeExpand { .. } => "edge_expand",
            Attach { .. } => "attach",
            Chain { .. } => "chain",
            Mrn { .. } => "mrn",
            GoodBase { .. } => "good_base",
            Graph6 { .. } => "graph6",
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn d_counts_and_degrees() {
        let d = d_graph(2, 2);
        assert_eq!((d.order(), d.size()), (7, 11));
        let d = d_graph(3, 5);
        assert_eq!(d.degrees()[..3], [10, 5, 7]);
        assert_eq!(d_graph(0, 0), complete(3));
    }

    #[test]
    fn h_counts() {
        let h = h_graph(6, 6, 2).unwrap();
        assert_eq!((h.order(), h.size()), (6, 10));
        assert!(h_graph(5, 6, 2).is_err());
        assert!(h_graph(6, 3, 2).is_err());
    }

    #[test]
    fn cactus_counts() {
        let bowtie = cactus(&[CactusBlock::K3, CactusBlock::K3], None).unwrap();
        assert_eq!((bowtie.order(), bowtie.size()), (5, 6));
        let t = cactus(&[CactusBlock::K3, CactusBlock::K4], None).unwrap();
        assert_eq!((t.order(), t.size()), (6, 9));
        assert!(cactus(&[CactusBlock::D { r: 1, s: 2 }], None).is_err());
        let bad = [Attachment { host: 1, host_vertex: 0, own: 0 }];
        assert!(cactus(&[CactusBlock::K3, CactusBlock::K3], Some(&bad)).is_err());
    }

    #[test]
    fn m6_counts() {
        let g = m6(11).unwrap();
        assert_eq!((g.order(), g.size()), (11, 15));
        let g = m6(10).unwrap();
        assert_eq!((g.order(), g.size()), (10, 14));
        assert!(m6(9).is_err());
    }

    #[test]
    fn snark_shape() {
        let j5 = isaacs_snark(5).unwrap();
        assert_eq!((j5.order(), j5.size()), (20, 30));
        assert!(j5.is_regular(3));
        assert!(isaacs_snark(4).is_err());
        assert!(isaacs_snark(1).is_err());
        assert_eq!(j5.neighbors(1), &[0, 7, 19]);
    }

    #[test]
    fn vertex_expansion() {
        let prism = expand_vertex(&complete(4), 0).unwrap();
        assert_eq!((prism.order(), prism.size()), (6, 9));
        assert!(prism.is_regular(3));
        let j = expand_vertex(&isaacs_snark(5).unwrap(), 2).unwrap();
        assert_eq!((j.order(), j.size()), (22, 33));
        assert!(expand_vertex(&d_graph(2, 2), 0).is_err());
    }

    #[test]
    fn edge_expansion() {
        let j = expand_edge(&isaacs_snark(5).unwrap(), 0, 2).unwrap();
        assert_eq!((j.order(), j.size()), (23, 35));
        let d = j.degrees();
        assert_eq!(d.iter().filter(|&&x| x == 4).count(), 1);
        assert_eq!(d.iter().filter(|&&x| x == 3).count(), 22);
        assert!(expand_edge(&isaacs_snark(5).unwrap(), 0, 5).is_err());
    }

    #[test]
    fn attach_counts() {
        let g = attach(&complete(4), &[0], &[]).unwrap();
        assert_eq!((g.order(), g.size()), (5, 7));
        let g = attach(&complete(3), &[], &[0, 1, 2]).unwrap();
        assert_eq!((g.order(), g.size()), (9, 12));
        assert!(attach(&complete(3), &[0], &[0]).is_err());
        let g = attach(&complete(3), &[2], &[0]).unwrap();
        assert!(g.has_edge(0, 3) && g.has_edge(0, 4) && g.has_edge(3, 4) && g.has_edge(2, 5));
    }

    #[test]
    fn chain_counts() {
        let one = attach(&complete(4), &[0], &[]).unwrap();
        let g = chain(&[one.clone(), one], &[(0, 0)]).unwrap();
        assert_eq!((g.order(), g.size()), (8, 13));
        assert!(g.is_connected());
        let two = attach(&complete(4), &[0, 1], &[]).unwrap();
        let g = chain(&[two.clone(), two.clone()], &[(0, 0)]).unwrap();
        assert_eq!((g.order(), g.size()), (10, 15));
        assert!(chain(&[two.clone(), two.clone()], &[(2, 0)]).is_err());
        assert!(chain(&[two.clone(), two.clone(), two], &[(0, 0), (0, 1)]).is_err());
    }

    #[test]
    fn good_base_rows() {
        let g = good_base(60).unwrap().build().unwrap();
        assert_eq!((g.order(), g.size()), (60, 90));
        let g = good_base(63).unwrap().build().unwrap();
        assert_eq!((g.order(), g.size()), (63, 95));
        assert_eq!(
            good_base(57).unwrap(),
            ConstructionSpec::EdgeExpand {
                base: Box::new(ConstructionSpec::VertexExpand {
                    base: Box::new(ConstructionSpec::Snark { k: 13 }),
                    vertices: vec![14],
                }),
                u: 0,
                v: 2,
            }
        );
        assert_eq!(good_base(57).unwrap().build().unwrap().order(), 57);
        assert!(good_base(55).is_err());
    }

    #[test]
    fn recipe_json_round_trip() {
        let spec = ConstructionSpec::Attach {
            base: Box::new(ConstructionSpec::Snark { k: 5 }),
            u: vec![0, 1],
            w: vec![],
        };
        let json = serde_json::to_string(&spec).unwrap();
        let back: ConstructionSpec = serde_json::from_str(&json).unwrap();
        assert_eq!(back, spec);
        let parsed: ConstructionSpec = serde_json::from_str(r#"{"family":"d","a":1,"b":2}"#).unwrap();
        assert_eq!(parsed.warnings().len(), 1);
    }
}
