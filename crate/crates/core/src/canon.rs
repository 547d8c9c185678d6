//! Canonical labeling.
//!
//! A labeling of `G` (an ordering of its vertices) is scored by the
//! upper-triangle adjacency bitstring in graph6 column order. The canonical
//! code is the minimum score over the leaves of an individualization /
//! refinement search tree, which commutes with relabeling, so two graphs
//! receive the same code exactly when they are isomorphic. Automorphisms
//! discovered along the way prune the tree.

use serde::Serialize;

use crate::{Error, Graph, Result};

/// Largest order accepted by [`canonical_code`].
pub const MAX_ORDER: usize = 64;
/// Largest order accepted by [`exhaustive_code`].
pub const EXHAUSTIVE_MAX_ORDER: usize = 10;

/// Packed upper-triangle bitstring of a labeled graph, most significant bit
/// first. Ordered by `(n, bits)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct CanonicalCode {
    n: usize,
    words: Vec<u64>,
}

impl CanonicalCode {
    fn of_order(g: &Graph, masks: &[u64], order: &[usize]) -> Self {
        let n = g.order();
        let bits = n * n.saturating_sub(1) / 2;
        let mut words = vec![0u64; bits.div_ceil(64)];
        let mut k = 0;
        for j in 1..n {
            let row = masks[order[j]];
            for &oi in &order[..j] {
                if row >> oi & 1 == 1 {
                    words[k / 64] |= 1 << (63 - k % 64);
                }
                k += 1;
            }
        }
        CanonicalCode { n, words }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// The labeled graph this code describes (the canonical representative).
    pub fn to_graph(&self) -> Graph {
        let mut edges = Vec::new();
        let mut k = 0;
        for j in 1..self.n {
            for i in 0..j {
                if self.words[k / 64] >> (63 - k % 64) & 1 == 1 {
                    edges.push((i, j));
                }
                k += 1;
            }
        }
        Graph::new(self.n, edges).expect("code decodes to a simple graph")
    }
}

/// Canonical code plus the labeling that realizes it: `labeling[i]` is the
/// original vertex placed at position `i`.
#[derive(Clone, Debug)]
pub struct CanonicalForm {
    pub code: CanonicalCode,
    pub labeling: Vec<usize>,
}

pub fn canonical_code(g: &Graph) -> Result<CanonicalCode> {
    canonical_form(g).map(|f| f.code)
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    let n = g.order();
    if n > MAX_ORDER {
        return Err(Error::SizeLimit {
            what: "canonical labeling",
            size: n,
            limit: MAX_ORDER,
        });
    }
    let masks = g.adjacency_masks()?;
    if n == 0 {
        return Ok(CanonicalForm {
            code: CanonicalCode { n: 0, words: vec![] },
            labeling: vec![],
        });
    }
    let mut search = Search {
        g,
        masks: &masks,
        first: None,
        best: None,
        generators: Vec::new(),
        prefix: Vec::new(),
    };
    let mut root = vec![(0..n).collect::<Vec<_>>()];
    refine(&masks, &mut root);
    search.descend(root);
    let (code, labeling) = search.best.expect("search reaches at least one leaf");
    Ok(CanonicalForm { code, labeling })
}

pub fn are_isomorphic(a: &Graph, b: &Graph) -> Result<bool> {
    if a.order() != b.order() || a.size() != b.size() || sorted_degrees(a) != sorted_degrees(b) {
        return Ok(false);
    }
    Ok(canonical_code(a)? == canonical_code(b)?)
}

fn sorted_degrees(g: &Graph) -> Vec<usize> {
    let mut d = g.degrees();
    d.sort_unstable();
    d
}

/// Minimum code over all `n!` labelings. Slow reference implementation; its
/// values differ from [`canonical_code`] but induce the same equivalence.
pub fn exhaustive_code(g: &Graph) -> Result<CanonicalCode> {
    let n = g.order();
    if n > EXHAUSTIVE_MAX_ORDER {
        return Err(Error::SizeLimit {
            what: "exhaustive canonical code",
            size: n,
            limit: EXHAUSTIVE_MAX_ORDER,
        });
    }
    let masks = g.adjacency_masks()?;
    let mut order: Vec<usize> = (0..n).collect();
    let mut best = CanonicalCode::of_order(g, &masks, &order);
    // Heap's algorithm, iterative.
    let mut c = vec![0usize; n];
    let mut i = 1;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                order.swap(0, i);
            } else {
                order.swap(c[i], i);
            }
            let code = CanonicalCode::of_order(g, &masks, &order);
            if code < best {
                best = code;
            }
            c[i] += 1;
            i = 1;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    Ok(best)
}

type Partition = Vec<Vec<usize>>;

fn cell_mask(cell: &[usize]) -> u64 {
    cell.iter().fold(0, |m, &v| m | 1 << v)
}

/// Refines an ordered partition to the coarsest equitable refinement. Split
/// cells keep their position; fragments are ordered by neighbor count.
fn refine(masks: &[u64], cells: &mut Partition) {
    'outer: loop {
        for w in 0..cells.len() {
            let wmask = cell_mask(&cells[w]);
            for c in 0..cells.len() {
                if cells[c].len() < 2 {
                    continue;
                }
                let count = |v: usize| (masks[v] & wmask).count_ones();
                let first = count(cells[c][0]);
                if cells[c].iter().all(|&v| count(v) == first) {
                    continue;
                }
                let mut keyed: Vec<(u32, usize)> = cells[c].iter().map(|&v| (count(v), v)).collect();
                keyed.sort_unstable();
                let mut pieces: Vec<Vec<usize>> = Vec::new();
                let mut last = None;
                for (k, v) in keyed {
                    if last != Some(k) {
                        pieces.push(Vec::new());
                        last = Some(k);
                    }
                    pieces.last_mut().unwrap().push(v);
                }
                cells.splice(c..=c, pieces);
                continue 'outer;
            }
        }
        return;
    }
}

struct Search<'a> {
    g: &'a Graph,
    masks: &'a [u64],
    first: Option<(CanonicalCode, Vec<usize>, Vec<usize>)>,
    best: Option<(CanonicalCode, Vec<usize>)>,
    generators: Vec<Vec<usize>>,
    prefix: Vec<usize>,
}

impl Search<'_> {
    /// Explores the subtree under `cells`. Returns `Some(level)` when an
    /// automorphism proves every remaining sibling down to `level` redundant.
    fn descend(&mut self, cells: Partition) -> Option<usize> {
        let n = self.g.order();
        if cells.len() == n {
            let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
            return self.leaf(order);
        }
        let target = cells.iter().position(|c| c.len() > 1).unwrap();
        let level = self.prefix.len();
        let mut explored: Vec<usize> = Vec::new();
        for &v in &cells[target].clone() {
            if !explored.is_empty() && self.equivalent_to_explored(v, &explored) {
                continue;
            }
            explored.push(v);
            let mut child = cells.clone();
            let rest: Vec<usize> = child[target].iter().copied().filter(|&x| x != v).collect();
            child.splice(target..=target, [vec![v], rest]);
            refine(self.masks, &mut child);
            self.prefix.push(v);
            let jump = self.descend(child);
            self.prefix.pop();
            if let Some(l) = jump {
                if l < level {
                    return Some(l);
                }
            }
        }
        None
    }

    fn leaf(&mut self, order: Vec<usize>) -> Option<usize> {
        let code = CanonicalCode::of_order(self.g, self.masks, &order);
        let Some((first_code, first_order, first_prefix)) = &self.first else {
            self.first = Some((code.clone(), order.clone(), self.prefix.clone()));
            self.best = Some((code, order));
            return None;
        };
        if code == *first_code {
            let gen = automorphism(first_order, &order);
            self.generators.push(gen);
            let common = first_prefix
                .iter()
                .zip(&self.prefix)
                .take_while(|(a, b)| a == b)
                .count();
            return Some(common);
        }
        let (best_code, best_order) = self.best.as_ref().unwrap();
        match code.cmp(best_code) {
            std::cmp::Ordering::Less => self.best = Some((code, order)),
            std::cmp::Ordering::Equal => {
                let gen = automorphism(best_order, &order);
                self.generators.push(gen);
            }
            std::cmp::Ordering::Greater => {}
        }
        None
    }

    /// True when an automorphism fixing the current prefix pointwise maps `v`
    /// onto an already explored sibling.
    fn equivalent_to_explored(&self, v: usize, explored: &[usize]) -> bool {
        let n = self.g.order();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut any = false;
        for gen in &self.generators {
            if self.prefix.iter().any(|&p| gen[p] != p) {
                continue;
            }
            any = true;
            for (x, &y) in gen.iter().enumerate() {
                let (a, b) = (find(&mut parent, x), find(&mut parent, y));
                if a != b {
                    parent[a] = b;
                }
            }
        }
        if !any {
            return false;
        }
        let root = find(&mut parent, v);
        explored.iter().any(|&e| find(&mut parent, e) == root)
    }
}

fn automorphism(from: &[usize], to: &[usize]) -> Vec<usize> {
    let mut gen = vec![0; from.len()];
    for (&a, &b) in from.iter().zip(to) {
        gen[a] = b;
    }
    gen
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: usize, e: &[(usize, usize)]) -> Graph {
        Graph::new(n, e.iter().copied()).unwrap()
    }

    #[test]
    fn triangle_relabeled() {
        let a = g(3, &[(0, 1), (1, 2), (2, 0)]);
        let b = a.relabel(&[2, 0, 1]);
        assert_eq!(canonical_code(&a).unwrap(), canonical_code(&b).unwrap());
    }

    #[test]
    fn path_differs_from_triangle() {
        let p = g(3, &[(0, 1), (1, 2)]);
        let t = g(3, &[(0, 1), (1, 2), (2, 0)]);
        assert_ne!(canonical_code(&p).unwrap(), canonical_code(&t).unwrap());
    }

    #[test]
    fn code_decodes_to_isomorphic_graph() {
        let p = g(5, &[(0, 3), (3, 1), (1, 4), (4, 2)]);
        let form = canonical_form(&p).unwrap();
        let back = form.code.to_graph();
        assert_eq!(back, p.relabel(&inverse(&form.labeling)));
        assert_eq!(canonical_code(&back).unwrap(), form.code);
    }

    fn inverse(order: &[usize]) -> Vec<usize> {
        let mut inv = vec![0; order.len()];
        for (i, &v) in order.iter().enumerate() {
            inv[v] = i;
        }
        inv
    }

    #[test]
    fn symmetric_graphs_finish() {
        let k = |n: usize| Graph::new(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)))).unwrap();
        for n in [1, 2, 8, 16, 30] {
            let code = canonical_code(&k(n)).unwrap();
            assert_eq!(code.to_graph(), k(n));
        }
        assert_eq!(canonical_code(&Graph::empty(40)).unwrap().to_graph(), Graph::empty(40));
    }

    #[test]
    fn exhaustive_agrees_on_equivalence() {
        let a = g(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]);
        let b = g(5, &[(0, 1), (1, 2), (2, 3), (2, 4)]);
        assert_ne!(exhaustive_code(&a).unwrap(), exhaustive_code(&b).unwrap());
        assert_eq!(
            exhaustive_code(&a).unwrap(),
            exhaustive_code(&a.relabel(&[4, 2, 0, 1, 3])).unwrap()
        );
        assert!(exhaustive_code(&Graph::empty(11)).is_err());
    }

    #[test]
    fn size_limit() {
        assert!(matches!(
            canonical_code(&Graph::empty(65)),
            Err(Error::SizeLimit { .. })
        ));
    }

    #[test]
    fn nonisomorphic_same_degrees() {
        // C6 versus two disjoint triangles.
        let c6 = g(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]);
        let tt = g(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]);
        assert!(!are_isomorphic(&c6, &tt).unwrap());
    }
}
