//! Isomorph-free enumeration of small graphs by edge count.
//!
//! Level `m + 1` is obtained from level `m` by adding every missing edge to
//! every representative and keeping one graph per canonical code. Levels are
//! kept in canonical-code order, so the output does not depend on how many
//! threads did the work.

use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::canon::{canonical_code, CanonicalCode};
use crate::{Error, Graph, Result};

/// Largest order the enumerator accepts.
pub const MAX_ORDER: usize = 10;

/// Walks the levels `m = 0, 1, 2, ...` of all graphs (connected or not) on
/// `n` vertices.
pub struct Levels {
    n: usize,
    m: usize,
    current: Vec<(CanonicalCode, Graph)>,
}

impl Levels {
    pub fn new(n: usize) -> Result<Self> {
        if n > MAX_ORDER {
            return Err(Error::SizeLimit {
                what: "graph enumeration order",
                size: n,
                limit: MAX_ORDER,
            });
        }
        let empty = Graph::empty(n);
        let code = canonical_code(&empty)?;
        Ok(Levels {
            n,
            m: 0,
            current: vec![(code, empty)],
        })
    }

    pub fn edges(&self) -> usize {
        self.m
    }

    /// Representatives at the current edge count, sorted by canonical code.
    pub fn graphs(&self) -> impl Iterator<Item = &Graph> {
        self.current.iter().map(|(_, g)| g)
    }

    pub fn len(&self) -> usize {
        self.current.len()
    }

    pub fn is_empty(&self) -> bool {
        self.current.is_empty()
    }

    /// Moves to the next edge count. Returns false past the complete graph.
    pub fn advance(&mut self) -> bool {
        if self.m >= self.n * self.n.saturating_sub(1) / 2 {
            self.current.clear();
            return false;
        }
        let children: BTreeSet<CanonicalCode> = self
            .current
            .par_iter()
            .flat_map_iter(|(_, g)| {
                g.non_edges()
                    .into_iter()
                    .map(|(u, v)| canonical_code(&g.with_edge(u, v).unwrap()).unwrap())
                    .collect::<Vec<_>>()
            })
            .collect();
        self.current = children.into_iter().map(|c| {
            let g = c.to_graph();
            (c, g)
        }).collect();
        self.m += 1;
        true
    }
}

/// One representative per isomorphism class of graphs with `n` vertices and
/// `m` edges, in canonical-code order.
pub fn graphs(n: usize, m: usize) -> Result<Vec<Graph>> {
    let max = n * n.saturating_sub(1) / 2;
    if m > max {
        return Err(Error::InvalidParameter(format!("{m} edges exceed C({n},2) = {max}")));
    }
    let mut levels = Levels::new(n)?;
    while levels.edges() < m {
        levels.advance();
    }
    Ok(levels.graphs().cloned().collect())
}

/// Connected members of [`graphs`].
pub fn enumerate_connected_graphs(n: usize, m: usize) -> Result<Vec<Graph>> {
    Ok(graphs(n, m)?.into_iter().filter(Graph::is_connected).collect())
}

/// Every connected graph on `n` vertices, by edge count then canonical code.
pub fn all_connected_graphs(n: usize) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    let mut levels = Levels::new(n)?;
    loop {
        out.extend(levels.graphs().filter(|g| g.is_connected()).cloned());
        if !levels.advance() {
            break;
        }
    }
    Ok(out)
}
