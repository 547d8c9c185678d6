//! Structural predicates: good graphs, the C≥6 characterization, and the
//! vertex partition of a C≥r-saturated graph with its checkable properties.

use serde::Serialize;

use crate::blocks::{BlockDecomposition, BlockKind};
use crate::saturation::is_saturated;
use crate::{Error, Graph, Rational, Result, SCHEMA_VERSION};

fn triangles(g: &Graph) -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    for (a, b) in g.edges() {
        for &c in g.neighbors(b) {
            if c > b && g.has_edge(a, c) {
                out.push([a, b, c]);
            }
        }
    }
    out
}

/// True iff two vertex-disjoint triangles are joined by an edge.
pub fn contains_barbell(g: &Graph) -> bool {
    let tri = triangles(g);
    for (i, s) in tri.iter().enumerate() {
        for t in &tri[i + 1..] {
            if s.iter().any(|x| t.contains(x)) {
                continue;
            }
            if s.iter().any(|&x| t.iter().any(|&y| g.has_edge(x, y))) {
                return true;
            }
        }
    }
    false
}

/// One vertex `u0` of degree 4, all others of degree 3, `N(u0)` inducing a
/// perfect matching `{u1 u2, v1 v2}`, and each matched pair having distinct
/// neighbors outside `{u0} ∪ N(u0)`.
pub fn is_almost_3_regular(g: &Graph) -> bool {
    let deg = g.degrees();
    let fours: Vec<usize> = (0..g.order()).filter(|&v| deg[v] == 4).collect();
    if fours.len() != 1 || deg.iter().any(|&d| d != 3 && d != 4) {
        return false;
    }
    let u0 = fours[0];
    let nb = g.neighbors(u0);
    let inner: Vec<(usize, usize)> = nb
        .iter()
        .enumerate()
        .flat_map(|(i, &a)| nb[i + 1..].iter().map(move |&b| (a, b)))
        .filter(|&(a, b)| g.has_edge(a, b))
        .collect();
    if inner.len() != 2 {
        return false;
    }
    let (p, q) = (inner[0], inner[1]);
    if [p.0, p.1].iter().any(|x| *x == q.0 || *x == q.1) {
        return false;
    }
    let outside = |v: usize| -> Vec<usize> {
        g.neighbors(v)
            .iter()
            .copied()
            .filter(|&w| w != u0 && !nb.contains(&w))
            .collect()
    };
    [p, q].iter().all(|&(a, b)| {
        let (oa, ob) = (outside(a), outside(b));
        oa.len() == 1 && ob.len() == 1 && oa[0] != ob[0]
    })
}

/// 3-regular or almost 3-regular, and barbell-free.
pub fn is_good_graph(g: &Graph) -> bool {
    (g.is_regular(3) || is_almost_3_regular(g)) && !contains_barbell(g)
}

/// Which of the four characterization conditions hold.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct C6Conditions {
    pub connected_b2_matching: bool,
    pub no_triangle_blocks_touch: bool,
    pub cut_edges_avoid_cores: bool,
    pub components_are_cacti: bool,
    /// The cactus clause `c + d + f >= 1 when a + b <= 1`, read literally.
    /// It fails for `K3` and `K4` themselves, which are saturated.
    pub literal_cactus_clause: bool,
}

impl C6Conditions {
    pub fn all(&self) -> bool {
        self.connected_b2_matching && self.no_triangle_blocks_touch && self.cut_edges_avoid_cores && self.components_are_cacti
    }
}

/// Characterization of C≥6-saturated graphs by their block structure.
pub fn c6_characterization(g: &Graph) -> bool {
    c6_conditions(g).all()
}

pub fn c6_conditions(g: &Graph) -> C6Conditions {
    let connected = g.order() > 0 && g.is_connected();
    let dec = BlockDecomposition::of(g);
    let is_k3 = |b: usize| dec.blocks[b].kind == BlockKind::Complete { order: 3 };
    let no_triangle_blocks_touch = (0..g.order()).all(|v| dec.blocks_of(v).iter().filter(|&&b| is_k3(b)).count() <= 1);
    let mut core = vec![false; g.order()];
    for b in &dec.blocks {
        match b.kind {
            BlockKind::Complete { order: 3 | 4 } => b.vertices.iter().for_each(|&v| core[v] = true),
            BlockKind::D { .. } | BlockKind::H { .. } => b.centers().iter().for_each(|&v| core[v] = true),
            _ => {}
        }
    }
    let cut_edges_avoid_cores = dec
        .b2
        .iter()
        .all(|&b| dec.blocks[b].vertices.iter().all(|&v| !core[v]));

    // Components of G - B2: group the non-K2 blocks by shared vertices.
    let mut comp = vec![usize::MAX; dec.blocks.len()];
    let mut groups: Vec<Vec<usize>> = Vec::new();
    for start in 0..dec.blocks.len() {
        if dec.blocks[start].is_k2() || comp[start] != usize::MAX {
            continue;
        }
        let id = groups.len();
        let mut stack = vec![start];
        comp[start] = id;
        let mut members = Vec::new();
        while let Some(b) = stack.pop() {
            members.push(b);
            for &v in &dec.blocks[b].vertices {
                for &nb in dec.blocks_of(v) {
                    if !dec.blocks[nb].is_k2() && comp[nb] == usize::MAX {
                        comp[nb] = id;
                        stack.push(nb);
                    }
                }
            }
        }
        groups.push(members);
    }
    let mut components_are_cacti = true;
    let mut literal = true;
    for members in &groups {
        let (mut ab, mut cdf) = (0, 0);
        for &b in members {
            match dec.blocks[b].kind {
                BlockKind::Complete { order: 3 | 4 } => ab += 1,
                BlockKind::Complete { order: 5 } | BlockKind::D { .. } | BlockKind::H { .. } => cdf += 1,
                _ => components_are_cacti = false,
            }
        }
        if ab <= 1 && cdf == 0 {
            literal = false;
            if !g.is_complete() {
                components_are_cacti = false;
            }
        }
    }
    C6Conditions {
        connected_b2_matching: connected && dec.b2_is_matching(),
        no_triangle_blocks_touch,
        cut_edges_avoid_cores,
        components_are_cacti,
        literal_cactus_clause: literal,
    }
}

/// The vertex classes of a saturated graph. Each vertex gets the first class
/// it qualifies for in the order `X1, X3, X≥4, X2', X2, Y, Z`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct StructurePartition {
    /// Leaves.
    pub x1: Vec<usize>,
    /// Degree-3 vertices adjacent to a leaf.
    pub x3: Vec<usize>,
    /// Vertices of degree at least 4 adjacent to a leaf.
    pub x_ge4: Vec<usize>,
    /// Degree-2 vertices with a degree-2 neighbor.
    pub x2_prime: Vec<usize>,
    /// The other degree-2 vertices.
    pub x2: Vec<usize>,
    /// Remaining neighbors of `X2' ∪ X2 ∪ X3`.
    pub y: Vec<usize>,
    /// Isolated vertices of `G[Y]`.
    pub y1: Vec<usize>,
    pub y2: Vec<usize>,
    pub z: Vec<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PartitionCounts {
    pub x1: usize,
    pub x2: usize,
    pub x2_prime: usize,
    pub x3: usize,
    pub x4: usize,
    pub y: usize,
    pub y1: usize,
    pub z: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Class {
    X1,
    X3,
    X4,
    X2p,
    X2,
    Y,
    Z,
}

impl StructurePartition {
    pub fn counts(&self) -> PartitionCounts {
        PartitionCounts {
            x1: self.x1.len(),
            x2: self.x2.len(),
            x2_prime: self.x2_prime.len(),
            x3: self.x3.len(),
            x4: self.x_ge4.len(),
            y: self.y.len(),
            y1: self.y1.len(),
            z: self.z.len(),
        }
    }

    fn classes(&self, n: usize) -> Vec<Class> {
        let mut c = vec![Class::Z; n];
        for (set, tag) in [
            (&self.x1, Class::X1),
            (&self.x3, Class::X3),
            (&self.x_ge4, Class::X4),
            (&self.x2_prime, Class::X2p),
            (&self.x2, Class::X2),
            (&self.y, Class::Y),
        ] {
            for &v in set {
                c[v] = tag;
            }
        }
        c
    }
}

pub fn structure_partition(g: &Graph) -> Result<StructurePartition> {
    let n = g.order();
    if n < 3 {
        return Err(Error::Precondition(format!("partition needs n >= 3, got {n}")));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let deg = g.degrees();
    let mut class: Vec<Option<Class>> = vec![None; n];
    let leaf_adjacent = |v: usize| g.neighbors(v).iter().any(|&w| deg[w] == 1);
    for v in 0..n {
        class[v] = match deg[v] {
            1 => Some(Class::X1),
            3 if leaf_adjacent(v) => Some(Class::X3),
            d if d >= 4 && leaf_adjacent(v) => Some(Class::X4),
            2 if g.neighbors(v).iter().any(|&w| deg[w] == 2) => Some(Class::X2p),
            2 => Some(Class::X2),
            _ => None,
        };
    }
    for v in 0..n {
        if matches!(class[v], Some(Class::X2p | Class::X2 | Class::X3)) {
            for &w in g.neighbors(v) {
                if class[w].is_none() {
                    class[w] = Some(Class::Y);
                }
            }
        }
    }
    let mut p = StructurePartition::default();
    for (v, c) in class.iter().enumerate() {
        match c.unwrap_or(Class::Z) {
            Class::X1 => p.x1.push(v),
            Class::X3 => p.x3.push(v),
            Class::X4 => p.x_ge4.push(v),
            Class::X2p => p.x2_prime.push(v),
            Class::X2 => p.x2.push(v),
            Class::Y => p.y.push(v),
            Class::Z => p.z.push(v),
        }
    }
    for &v in &p.y {
        if g.neighbors(v).iter().any(|&w| class[w] == Some(Class::Y)) {
            p.y2.push(v);
        } else {
            p.y1.push(v);
        }
    }
    Ok(p)
}

/// Concrete evidence for a failed clause.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    Vertex { v: usize },
    Edge { u: usize, v: usize },
    /// An inequality `lhs op rhs` that failed, with its evaluated sides.
    Inequality { lhs: String, op: &'static str, rhs: String },
    /// A required edge set that turned out empty.
    NoEdgeBetween { left: Vec<usize>, right: Vec<usize> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Clause {
    pub name: &'static str,
    pub holds: bool,
    /// False for clauses that are only reported at this `r`.
    pub asserted: bool,
    pub witness: Option<Witness>,
}

#[derive(Clone, Debug, Serialize)]
pub struct PropertyReport {
    pub schema_version: u32,
    pub n: usize,
    pub m: usize,
    pub r: usize,
    pub counts: PartitionCounts,
    pub clauses: Vec<Clause>,
}

impl PropertyReport {
    pub fn clause(&self, name: &str) -> Option<&Clause> {
        self.clauses.iter().find(|c| c.name == name)
    }

    /// Asserted clauses that fail.
    pub fn violations(&self) -> Vec<&Clause> {
        self.clauses.iter().filter(|c| c.asserted && !c.holds).collect()
    }

    pub fn all_asserted_hold(&self) -> bool {
        self.violations().is_empty()
    }
}

fn ineq(lhs: i64, op: &'static str, rhs: i64) -> (bool, Option<Witness>) {
    let ok = match op {
        "=" => lhs == rhs,
        "<=" => lhs <= rhs,
        ">=" => lhs >= rhs,
        _ => unreachable!(),
    };
    let w = (!ok).then(|| Witness::Inequality {
        lhs: lhs.to_string(),
        op,
        rhs: rhs.to_string(),
    });
    (ok, w)
}

fn check_precondition(g: &Graph, r: usize) -> Result<()> {
    if r < 6 || g.order() < r {
        return Err(Error::Precondition(format!("needs n >= r >= 6, got n = {}, r = {r}", g.order())));
    }
    if !is_saturated(g, r)? {
        return Err(Error::Precondition(format!("graph is not C>={r}-saturated")));
    }
    Ok(())
}

/// Partition properties (i)-(vi) and the claims behind (vi), for a
/// C≥r-saturated graph with `n >= r >= 6`. (vi) and the claims are asserted
/// only for `r >= 7`.
pub fn check_structure_properties(g: &Graph, r: usize) -> Result<PropertyReport> {
    check_precondition(g, r)?;
    structure_properties_unchecked(g, r)
}

/// Inequalities (a)-(c) and `e(G) >= n + r/2` (the latter only when
/// `n/2 <= r <= n`).
pub fn check_corollary_inequalities(g: &Graph, r: usize) -> Result<PropertyReport> {
    check_precondition(g, r)?;
    corollary_inequalities_unchecked(g, r)
}

/// [`check_structure_properties`] without the saturation precondition.
pub fn structure_properties_unchecked(g: &Graph, r: usize) -> Result<PropertyReport> {
    let p = structure_partition(g)?;
    let n = g.order();
    let class = p.classes(n);
    use Class::*;
    let edge_between = |a: &[Class], b: &[Class]| -> Option<Witness> {
        g.edges()
            .find(|&(u, v)| {
                (a.contains(&class[u]) && b.contains(&class[v])) || (a.contains(&class[v]) && b.contains(&class[u]))
            })
            .map(|(u, v)| Witness::Edge { u, v })
    };
    let mut clauses = Vec::new();
    let mut push = |name, holds: bool, asserted, witness: Option<Witness>| {
        clauses.push(Clause {
            name,
            holds,
            asserted,
            witness: if holds { None } else { witness },
        })
    };

    // (i)
    let empties: [(&[Class], &[Class]); 5] = [
        (&[X1], &[X1]),
        (&[X1], &[X2, X2p, Y, Z]),
        (&[X2, X3], &[X2, X3]),
        (&[X2, X3], &[X2p]),
        (&[X2p, X2, X3], &[X4, Z]),
    ];
    let w = empties.iter().find_map(|(a, b)| edge_between(a, b));
    push("i_empty_subgraphs", w.is_none(), true, w);

    // (ii)
    let matched = |v: usize, within: &[Class]| g.neighbors(v).iter().filter(|&&w| within.contains(&class[w])).count() == 1;
    let bad = p.x2_prime.iter().copied().find(|&v| !matched(v, &[X2p]));
    push("ii_x2_prime_matching", bad.is_none(), true, bad.map(|v| Witness::Vertex { v }));
    let bad = p
        .x1
        .iter()
        .copied()
        .find(|&v| !matched(v, &[X3, X4]))
        .or_else(|| p.x3.iter().chain(&p.x_ge4).copied().find(|&v| !matched(v, &[X1])));
    push("ii_leaf_matching", bad.is_none(), true, bad.map(|v| Witness::Vertex { v }));

    // (iii)
    let bad = g.edges().find(|&(u, v)| {
        class[u] == X2p
            && class[v] == X2p
            && !g.neighbors(u).iter().any(|&w| class[w] == Y && g.has_edge(w, v))
    });
    push("iii_common_neighbor", bad.is_none(), true, bad.map(|(u, v)| Witness::Edge { u, v }));

    // (iv)
    let other: Vec<usize> = (0..n).filter(|&v| matches!(class[v], Z | X4)).collect();
    let holds = p.y.is_empty() || other.is_empty() || edge_between(&[Y], &[Z, X4]).is_some();
    push(
        "iv_y_meets_rest",
        holds,
        true,
        Some(Witness::NoEdgeBetween {
            left: p.y.clone(),
            right: other,
        }),
    );

    // (v)
    let bad = p.x2.iter().chain(&p.x3).copied().find(|&v| {
        let ys: Vec<usize> = g.neighbors(v).iter().copied().filter(|&w| class[w] == Y).collect();
        ys.len() != 2 || !g.has_edge(ys[0], ys[1])
    });
    push("v_y_neighbors_adjacent", bad.is_none(), true, bad.map(|v| Witness::Vertex { v }));

    // (vi) in H = G[Y ∪ Z ∪ X≥4]
    let in_h = |v: usize| matches!(class[v], Y | Z | X4);
    let dh = |v: usize| g.neighbors(v).iter().filter(|&&w| in_h(w)).count();
    let strict = r >= 7;
    let bad = p.y.iter().copied().find(|&v| dh(v) < 2);
    push("vi_min_degree", bad.is_none(), strict, bad.map(|v| Witness::Vertex { v }));
    let total: usize = p.y2.iter().map(|&v| dh(v)).sum();
    let holds = p.y2.is_empty() || Rational::new(total as i64, p.y2.len() as i64) >= Rational::new(5, 2);
    push(
        "vi_average_degree",
        holds,
        strict,
        (!p.y2.is_empty()).then(|| Witness::Inequality {
            lhs: Rational::new(total as i64, p.y2.len() as i64).to_string(),
            op: ">=",
            rhs: "5/2".into(),
        }),
    );

    // Claims behind (vi).
    let y2: Vec<bool> = {
        let mut m = vec![false; n];
        p.y2.iter().for_each(|&v| m[v] = true);
        m
    };
    let h_nbrs = |v: usize| -> Vec<usize> { g.neighbors(v).iter().copied().filter(|&w| in_h(w)).collect() };
    let bad = p.y2.iter().copied().find(|&v| {
        let nb = h_nbrs(v);
        nb.len() == 2 && !g.has_edge(nb[0], nb[1])
    });
    push("claim1_two_vertex_neighbors_adjacent", bad.is_none(), strict, bad.map(|v| Witness::Vertex { v }));
    let bad = g.edges().find(|&(u, v)| y2[u] && y2[v] && dh(u) == 2 && dh(v) == 2);
    push("claim2_two_vertices_independent", bad.is_none(), strict, bad.map(|(u, v)| Witness::Edge { u, v }));
    let bad = p.y2.iter().copied().find(|&v| {
        let d = dh(v);
        d >= 3 && h_nbrs(v).iter().filter(|&&w| y2[w] && dh(w) == 2).count() > d - 1
    });
    push("claim3_bounded_two_neighbors", bad.is_none(), strict, bad.map(|v| Witness::Vertex { v }));

    Ok(PropertyReport {
        schema_version: SCHEMA_VERSION,
        n,
        m: g.size(),
        r,
        counts: p.counts(),
        clauses,
    })
}

/// [`check_corollary_inequalities`] without the saturation precondition.
pub fn corollary_inequalities_unchecked(g: &Graph, r: usize) -> Result<PropertyReport> {
    let p = structure_partition(g)?;
    let c = p.counts();
    let n = g.order() as i64;
    let r_i = r as i64;
    let (x1, x2, x2p, x3, x4, y, y1, z) = (
        c.x1 as i64,
        c.x2 as i64,
        c.x2_prime as i64,
        c.x3 as i64,
        c.x4 as i64,
        c.y as i64,
        c.y1 as i64,
        c.z as i64,
    );
    let mut clauses = Vec::new();
    let mut push = |name, (holds, witness): (bool, Option<Witness>), asserted| {
        clauses.push(Clause {
            name,
            holds,
            asserted,
            witness,
        })
    };
    push("a_leaves", ineq(x1, "=", x3 + x4), true);
    push("a_order", ineq(n, "=", x2 + x2p + 2 * x3 + 2 * x4 + y + z), true);
    // Halves are cleared by doubling both sides.
    push("b_isolated_y", ineq(2 * y1, "<=", x2p), true);
    push("b_y", ineq(2 * y, "<=", 4 * x2 + 4 * x3 + x2p), true);

    let core: Vec<usize> = p.y.iter().chain(&p.z).chain(&p.x_ge4).copied().collect();
    let core_complete = core
        .iter()
        .enumerate()
        .all(|(i, &a)| core[i + 1..].iter().all(|&b| g.has_edge(a, b)));
    if x2 + x3 == 0 && core_complete {
        push("c_complete_branch", ineq(z + x4 + y, "=", r_i - 1), true);
    } else {
        push("c_order_gap", ineq(x4 + x3 + x2p, "<=", n - r_i), true);
        push("c_weighted", ineq(6 * x2 + 4 * x3 + 2 * z - x2p, ">=", 4 * r_i - 2 * n), true);
    }
    if 2 * r_i >= n && r_i <= n {
        push("edges_at_least_n_plus_half_r", ineq(2 * g.size() as i64, ">=", 2 * n + r_i), true);
    }
    Ok(PropertyReport {
        schema_version: SCHEMA_VERSION,
        n: g.order(),
        m: g.size(),
        r,
        counts: c,
        clauses,
    })
}

/// Everything the analyzer knows about one graph at threshold `r`.
#[derive(Clone, Debug, Serialize)]
pub struct AnalysisReport {
    pub schema_version: u32,
    pub n: usize,
    pub m: usize,
    pub r: usize,
    pub saturated: bool,
    pub circumference: usize,
    pub three_regular: bool,
    pub almost_three_regular: bool,
    pub barbell: bool,
    pub good: bool,
    pub blocks: crate::blocks::BlockCounts,
    pub b2_matching: bool,
    pub c6_characterization: C6Conditions,
    pub partition: StructurePartition,
    /// Whether `n >= r >= 6` and the graph is saturated, so that the lemma
    /// and corollary clauses apply.
    pub precondition_met: bool,
    pub lemma: Option<PropertyReport>,
    pub corollary: Option<PropertyReport>,
    /// Every asserted lemma and corollary clause holds.
    pub all_asserted_hold: bool,
    /// Reported-only clauses that fail, such as (vi) at `r = 6`.
    pub flagged: Vec<&'static str>,
}

pub fn analyze(g: &Graph, r: usize) -> Result<AnalysisReport> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let saturated = is_saturated(g, r)?;
    let dec = BlockDecomposition::of(g);
    let precondition_met = saturated && r >= 6 && g.order() >= r;
    let partition = if g.order() >= 3 { structure_partition(g)? } else { StructurePartition::default() };
    let (lemma, corollary) = if g.order() >= 3 {
        (
            Some(structure_properties_unchecked(g, r)?),
            Some(corollary_inequalities_unchecked(g, r)?),
        )
    } else {
        (None, None)
    };
    let reports = lemma.iter().chain(&corollary);
    let all_asserted_hold = reports.clone().all(PropertyReport::all_asserted_hold);
    let flagged = reports
        .flat_map(|p| &p.clauses)
        .filter(|c| !c.asserted && !c.holds)
        .map(|c| c.name)
        .collect();
    Ok(AnalysisReport {
        schema_version: SCHEMA_VERSION,
        n: g.order(),
        m: g.size(),
        r,
        saturated,
        circumference: crate::cycles::circumference(g)?,
        three_regular: g.is_regular(3),
        almost_three_regular: is_almost_3_regular(g),
        barbell: contains_barbell(g),
        good: is_good_graph(g),
        blocks: dec.counts,
        b2_matching: dec.b2_is_matching(),
        c6_characterization: c6_conditions(g),
        partition,
        precondition_met,
        lemma,
        corollary,
        all_asserted_hold,
        flagged,
    })
}
