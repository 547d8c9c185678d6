//! Exact long-cycle and long-path decisions.
//!
//! Every cycle lives inside one block, and every `u`-`v` path crosses the
//! blocks on the block-cut-tree route between `u` and `v` through the same
//! cut vertices. Both questions therefore reduce to searches inside single
//! blocks. Blocks of at most [`DP_MAX_ORDER`] vertices use subset dynamic
//! programming; larger ones (up to 64 vertices) use a depth-first
//! branch-and-bound with reachability pruning, metered by a [`Budget`].

use crate::blocks::BlockDecomposition;
use crate::{Error, Graph, Result};

/// Blocks up to this order are handled by subset dynamic programming.
pub const DP_MAX_ORDER: usize = 22;
/// Largest block the engine accepts.
pub const MAX_BLOCK_ORDER: usize = 64;

/// Cap on branch-and-bound node expansions. Dynamic programming is bounded
/// by construction and is not metered.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Budget {
    limit: Option<u64>,
    used: u64,
}

#[derive(Debug)]
struct Exhausted;

impl Budget {
    pub fn unlimited() -> Self {
        Budget::default()
    }

    pub fn new(limit: u64) -> Self {
        Budget {
            limit: Some(limit),
            used: 0,
        }
    }

    pub fn limit(&self) -> Option<u64> {
        self.limit
    }

    pub fn used(&self) -> u64 {
        self.used
    }

    fn tick(&mut self) -> Result<(), Exhausted> {
        self.used += 1;
        match self.limit {
            Some(l) if self.used > l => Err(Exhausted),
            _ => Ok(()),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Goal {
    AtLeast(usize),
    Exactly(usize),
    Longest,
}

/// A block with local labels `0..k` (ascending global order) and bitmask
/// adjacency.
#[derive(Clone, Debug)]
struct Local {
    verts: Vec<usize>,
    masks: Vec<u64>,
}

impl Local {
    fn new(verts: &[usize], edges: &[(usize, usize)]) -> Self {
        let mut masks = vec![0u64; verts.len()];
        let idx = |v: usize| verts.binary_search(&v).unwrap();
        for &(u, v) in edges {
            let (a, b) = (idx(u), idx(v));
            masks[a] |= 1 << b;
            masks[b] |= 1 << a;
        }
        Local {
            verts: verts.to_vec(),
            masks,
        }
    }

    fn k(&self) -> usize {
        self.verts.len()
    }

    fn local(&self, v: usize) -> usize {
        self.verts.binary_search(&v).expect("vertex belongs to block")
    }

    fn global(&self, path: &[usize]) -> Vec<usize> {
        path.iter().map(|&i| self.verts[i]).collect()
    }

    fn full(&self) -> u64 {
        if self.k() == 64 {
            u64::MAX
        } else {
            (1u64 << self.k()) - 1
        }
    }
}

fn bits(mut m: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let b = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(b)
        }
    })
}

/// Vertices reachable from `from` through `allowed`, excluding `from`.
fn reach(masks: &[u64], from: usize, allowed: u64) -> u64 {
    let mut seen = 0u64;
    let mut frontier = masks[from] & allowed;
    while frontier != 0 {
        seen |= frontier;
        let mut next = 0;
        for v in bits(frontier) {
            next |= masks[v];
        }
        frontier = next & allowed & !seen;
    }
    seen
}

fn neighborhood(masks: &[u64], set: u64) -> u64 {
    bits(set).fold(0, |acc, v| acc | masks[v])
}

// ---------------------------------------------------------------------------
// Subset dynamic programming (k <= DP_MAX_ORDER).

/// `dp[mask]` = endpoints `t` such that some path from `s` visits exactly
/// `mask` and ends at `t`.
fn path_dp(masks: &[u64], s: usize, dp: &mut Vec<u32>) {
    let size = 1usize << masks.len();
    dp.clear();
    dp.resize(size, 0);
    dp[1 << s] = 1 << s;
    for mask in (1usize << s)..size {
        let ends = dp[mask];
        if ends == 0 {
            continue;
        }
        for t in bits(ends as u64) {
            for w in bits(masks[t] & !(mask as u64)) {
                dp[mask | 1 << w] |= 1 << w;
            }
        }
    }
}

fn backtrack(masks: &[u64], dp: &[u32], mut mask: usize, mut t: usize) -> Vec<usize> {
    let mut path = vec![t];
    while mask.count_ones() > 1 {
        let prev = mask ^ (1 << t);
        let p = (dp[prev] & masks[t] as u32).trailing_zeros() as usize;
        path.push(p);
        mask = prev;
        t = p;
    }
    path.reverse();
    path
}

/// `table[s * k + t]` has bit `L` set iff an `s`-`t` path with exactly `L`
/// edges exists.
fn path_table(masks: &[u64]) -> Vec<u64> {
    let k = masks.len();
    let mut table = vec![0u64; k * k];
    let mut dp = Vec::new();
    for s in 0..k {
        path_dp(masks, s, &mut dp);
        for (mask, &ends) in dp.iter().enumerate() {
            if ends == 0 {
                continue;
            }
            let len = mask.count_ones() - 1;
            for t in bits(ends as u64) {
                table[s * k + t] |= 1 << len;
            }
        }
    }
    table
}

/// Lowest-numbered mask whose path from `s` ends at `t` with `len` edges.
fn dp_path_of_length(masks: &[u64], dp: &[u32], t: usize, len: usize) -> Option<Vec<usize>> {
    let tbit = 1u32 << t;
    dp.iter()
        .enumerate()
        .find(|&(mask, &ends)| ends & tbit != 0 && mask.count_ones() as usize == len + 1)
        .map(|(mask, _)| backtrack(masks, dp, mask, t))
}

/// Longest cycle (as a local vertex sequence), or the first one found of
/// length at least `target` when `target > 0`.
fn dp_cycle(masks: &[u64], target: usize) -> Option<Vec<usize>> {
    let k = masks.len();
    let mut dp = vec![0u32; 1 << k];
    let mut best: Option<Vec<usize>> = None;
    for s in 0..k {
        let best_len = best.as_ref().map_or(0, Vec::len);
        if k - s < target.max(best_len + 1).max(3) {
            break;
        }
        // Cycles whose smallest vertex is s.
        let hi = k - s - 1;
        let base = 1usize << s;
        let allowed = !((base << 1) - 1) as u64;
        for x in 0..(1usize << hi) {
            dp[(x << (s + 1)) | base] = 0;
        }
        dp[base] = base as u32;
        let mut here: Option<(usize, usize, usize)> = None; // (len, mask, t)
        'masks: for x in 0..(1usize << hi) {
            let mask = (x << (s + 1)) | base;
            let ends = dp[mask];
            if ends == 0 {
                continue;
            }
            let size = mask.count_ones() as usize;
            for t in bits(ends as u64) {
                if size >= 3 && masks[t] >> s & 1 == 1 && size > here.map_or(best_len, |h| h.0) {
                    here = Some((size, mask, t));
                    if target > 0 && size >= target {
                        break 'masks;
                    }
                }
                for w in bits(masks[t] & allowed & !(mask as u64)) {
                    dp[mask | 1 << w] |= 1 << w;
                }
            }
        }
        if let Some((len, mask, t)) = here {
            best = Some(backtrack(masks, &dp, mask, t));
            if target > 0 && len >= target {
                break;
            }
        }
    }
    best.filter(|c| c.len() >= target.max(3))
}

// ---------------------------------------------------------------------------
// Branch and bound (any k <= 64).

struct PathSearch<'a> {
    masks: &'a [u64],
    full: u64,
    t: usize,
    goal: Goal,
    budget: &'a mut Budget,
    visited: u64,
    path: Vec<usize>,
    best: Option<Vec<usize>>,
    done: bool,
}

impl PathSearch<'_> {
    fn run(&mut self, cur: usize) -> Result<(), Exhausted> {
        self.budget.tick()?;
        let len = self.path.len() - 1;
        if cur == self.t {
            let better = match self.goal {
                Goal::Longest => self.best.as_ref().is_none_or(|b| len > b.len() - 1),
                Goal::AtLeast(l) => len >= l,
                Goal::Exactly(l) => len == l,
            };
            if better {
                self.best = Some(self.path.clone());
                if self.goal != Goal::Longest {
                    self.done = true;
                }
            }
            return Ok(());
        }
        let tbit = 1u64 << self.t;
        let open = self.full & !self.visited;
        let inner = reach(self.masks, cur, open & !tbit);
        if (self.masks[cur] | neighborhood(self.masks, inner)) & tbit == 0 {
            return Ok(());
        }
        let bound = len + inner.count_ones() as usize + 1;
        let hopeless = match self.goal {
            Goal::Longest => self.best.as_ref().is_some_and(|b| bound < b.len()),
            Goal::AtLeast(l) | Goal::Exactly(l) => bound < l,
        };
        if hopeless {
            return Ok(());
        }
        for w in bits(self.masks[cur] & open) {
            if let Goal::Exactly(l) = self.goal {
                if len + 1 > l || (w == self.t && len + 1 != l) {
                    continue;
                }
            }
            self.visited |= 1 << w;
            self.path.push(w);
            self.run(w)?;
            self.path.pop();
            self.visited &= !(1 << w);
            if self.done {
                break;
            }
        }
        Ok(())
    }
}

fn bb_path(masks: &[u64], full: u64, s: usize, t: usize, goal: Goal, budget: &mut Budget) -> Result<Option<Vec<usize>>, Exhausted> {
    let mut search = PathSearch {
        masks,
        full,
        t,
        goal,
        budget,
        visited: 1 << s,
        path: vec![s],
        best: None,
        done: false,
    };
    search.run(s)?;
    Ok(search.best)
}

struct CycleSearch<'a> {
    masks: &'a [u64],
    s: usize,
    allowed: u64,
    target: usize,
    budget: &'a mut Budget,
    visited: u64,
    path: Vec<usize>,
    best: Option<Vec<usize>>,
    done: bool,
}

impl CycleSearch<'_> {
    fn best_len(&self) -> usize {
        self.best.as_ref().map_or(0, Vec::len)
    }

    fn run(&mut self, cur: usize) -> Result<(), Exhausted> {
        self.budget.tick()?;
        let len = self.path.len() - 1;
        if len >= 2 && self.masks[cur] >> self.s & 1 == 1 && len + 1 > self.best_len() {
            self.best = Some(self.path.clone());
            if self.target > 0 && len + 1 >= self.target {
                self.done = true;
                return Ok(());
            }
        }
        let open = self.allowed & !self.visited;
        let inner = reach(self.masks, cur, open);
        let bound = len + inner.count_ones() as usize + 1;
        if bound <= self.best_len() || bound < self.target {
            return Ok(());
        }
        for w in bits(self.masks[cur] & open) {
            self.visited |= 1 << w;
            self.path.push(w);
            self.run(w)?;
            self.path.pop();
            self.visited &= !(1 << w);
            if self.done {
                break;
            }
        }
        Ok(())
    }
}

fn bb_cycle(masks: &[u64], full: u64, target: usize, budget: &mut Budget) -> Result<Option<Vec<usize>>, Exhausted> {
    let k = masks.len();
    let mut best: Option<Vec<usize>> = None;
    for s in 0..k {
        let best_len = best.as_ref().map_or(0, Vec::len);
        if k - s < target.max(best_len + 1).max(3) {
            break;
        }
        let allowed = full & !((1u64 << s) | ((1u64 << s) - 1));
        let mut search = CycleSearch {
            masks,
            s,
            allowed,
            target,
            budget: &mut *budget,
            visited: 1 << s,
            path: vec![s],
            best: best.clone(),
            done: false,
        };
        search.run(s)?;
        let done = search.done;
        best = search.best;
        if done {
            break;
        }
    }
    Ok(best.filter(|c| c.len() >= target.max(3)))
}

// ---------------------------------------------------------------------------
// Engine.

/// Per-graph query engine. Caches block decompositions and per-block path
/// tables so that many queries against one graph stay cheap.
pub struct PathEngine<'g> {
    g: &'g Graph,
    dec: BlockDecomposition,
    locals: Vec<Local>,
    tables: Vec<Option<Vec<u64>>>,
    dp_cache: Option<(usize, usize, Vec<u32>)>,
    budget: Budget,
}

impl<'g> PathEngine<'g> {
    pub fn new(g: &'g Graph) -> Result<Self> {
        Self::with_budget(g, Budget::unlimited())
    }

    pub fn with_budget(g: &'g Graph, budget: Budget) -> Result<Self> {
        let dec = BlockDecomposition::of(g);
        if let Some(b) = dec.blocks.iter().find(|b| b.order() > MAX_BLOCK_ORDER) {
            return Err(Error::SizeLimit {
                what: "block order for exact cycle search",
                size: b.order(),
                limit: MAX_BLOCK_ORDER,
            });
        }
        let locals = dec.blocks.iter().map(|b| Local::new(&b.vertices, &b.edges)).collect();
        let tables = vec![None; dec.blocks.len()];
        Ok(PathEngine {
            g,
            dec,
            locals,
            tables,
            dp_cache: None,
            budget,
        })
    }

    pub fn graph(&self) -> &Graph {
        self.g
    }

    pub fn decomposition(&self) -> &BlockDecomposition {
        &self.dec
    }

    pub fn budget(&self) -> &Budget {
        &self.budget
    }

    fn exhausted(&self, query: String) -> Error {
        Error::ResourceExhausted {
            limit: self.budget.limit.unwrap_or(u64::MAX),
            query,
        }
    }

    fn table(&mut self, b: usize) -> &[u64] {
        if self.tables[b].is_none() {
            self.tables[b] = Some(path_table(&self.locals[b].masks));
        }
        self.tables[b].as_deref().unwrap()
    }

    fn dp_for(&mut self, b: usize, s: usize) -> &[u32] {
        let stale = !matches!(&self.dp_cache, Some((cb, cs, _)) if *cb == b && *cs == s);
        if stale {
            let mut dp = self.dp_cache.take().map(|c| c.2).unwrap_or_default();
            path_dp(&self.locals[b].masks, s, &mut dp);
            self.dp_cache = Some((b, s, dp));
        }
        &self.dp_cache.as_ref().unwrap().2
    }

    /// Path inside block `b` between global vertices `s` and `t` meeting
    /// `goal`, as global labels.
    fn block_path(&mut self, b: usize, s: usize, t: usize, goal: Goal) -> Result<Option<Vec<usize>>> {
        let local = &self.locals[b];
        let (ls, lt) = (local.local(s), local.local(t));
        let k = local.k();
        if k == 2 {
            let ok = match goal {
                Goal::Longest => true,
                Goal::AtLeast(l) => l <= 1,
                Goal::Exactly(l) => l == 1,
            };
            return Ok(ok.then(|| vec![s, t]));
        }
        if k <= DP_MAX_ORDER {
            let lengths = self.table(b)[ls * k + lt];
            let len = match goal {
                Goal::Longest => (lengths != 0).then(|| 63 - lengths.leading_zeros() as usize),
                Goal::AtLeast(l) => (lengths >> l.min(63) != 0 && l < 64).then(|| 63 - lengths.leading_zeros() as usize),
                Goal::Exactly(l) => (l < 64 && lengths >> l & 1 == 1).then_some(l),
            };
            let Some(len) = len else { return Ok(None) };
            let masks = self.locals[b].masks.clone();
            let dp = self.dp_for(b, ls);
            let path = dp_path_of_length(&masks, dp, lt, len).expect("table and dp agree");
            return Ok(Some(self.locals[b].global(&path)));
        }
        let local = &self.locals[b];
        let found = bb_path(&local.masks, local.full(), ls, lt, goal, &mut self.budget)
            .map_err(|_| ())
            .ok();
        match found {
            Some(p) => Ok(p.map(|p| self.locals[b].global(&p))),
            None => Err(self.exhausted(format!("path search {s}-{t} ({goal:?}) in a block of order {k}"))),
        }
    }

    fn check_pair(&self, u: usize, v: usize) -> Result<()> {
        let n = self.g.order();
        for x in [u, v] {
            if x >= n {
                return Err(Error::VertexOutOfRange { vertex: x, n });
            }
        }
        if u == v {
            return Err(Error::InvalidParameter(format!("path endpoints must differ (got {u} twice)")));
        }
        Ok(())
    }

    /// A longest `u`-`v` path, or `None` when `u` and `v` are in different
    /// components.
    pub fn longest_path(&mut self, u: usize, v: usize) -> Result<Option<Vec<usize>>> {
        self.check_pair(u, v)?;
        let Some(route) = self.dec.block_path(u, v) else { return Ok(None) };
        let mut path = vec![u];
        for seg in route {
            let piece = self.block_path(seg.block, seg.entry, seg.exit, Goal::Longest)?;
            path.extend_from_slice(&piece.expect("a block is 2-connected or a bridge")[1..]);
        }
        Ok(Some(path))
    }

    /// A `u`-`v` path with at least `len` edges, if one exists.
    pub fn path_at_least(&mut self, u: usize, v: usize, len: usize) -> Result<Option<Vec<usize>>> {
        self.check_pair(u, v)?;
        let Some(route) = self.dec.block_path(u, v) else { return Ok(None) };
        // Exact maxima are free for small blocks; large blocks get a targeted
        // search, with the last one asked only for what is still missing.
        let mut pieces: Vec<Option<Vec<usize>>> = vec![None; route.len()];
        let mut known = 0;
        let mut upper = 0;
        let mut pending = Vec::new();
        for (i, seg) in route.iter().enumerate() {
            let k = self.locals[seg.block].k();
            if k <= DP_MAX_ORDER {
                let p = self.block_path(seg.block, seg.entry, seg.exit, Goal::Longest)?.unwrap();
                known += p.len() - 1;
                upper += p.len() - 1;
                pieces[i] = Some(p);
            } else {
                upper += k - 1;
                pending.push(i);
            }
        }
        if upper < len {
            return Ok(None);
        }
        while let Some(i) = pending.pop() {
            let seg = route[i];
            let k = self.locals[seg.block].k();
            upper -= k - 1;
            let goal = if pending.is_empty() {
                Goal::AtLeast(len.saturating_sub(known))
            } else {
                Goal::Longest
            };
            match self.block_path(seg.block, seg.entry, seg.exit, goal)? {
                Some(p) => {
                    known += p.len() - 1;
                    upper += p.len() - 1;
                    pieces[i] = Some(p);
                }
                None => return Ok(None),
            }
            if upper < len {
                return Ok(None);
            }
        }
        if known < len {
            return Ok(None);
        }
        let mut path = vec![u];
        for p in pieces {
            path.extend_from_slice(&p.unwrap()[1..]);
        }
        Ok(Some(path))
    }

    fn block_cycle(&mut self, b: usize, target: usize) -> Result<Option<Vec<usize>>> {
        let local = &self.locals[b];
        if local.k() < 3 || local.k() < target {
            return Ok(None);
        }
        if local.k() <= DP_MAX_ORDER {
            return Ok(dp_cycle(&local.masks, target).map(|c| local.global(&c)));
        }
        match bb_cycle(&local.masks, local.full(), target, &mut self.budget) {
            Ok(c) => Ok(c.map(|c| self.locals[b].global(&c))),
            Err(Exhausted) => Err(self.exhausted(format!(
                "cycle search (target {target}) in a block of order {}",
                self.locals[b].k()
            ))),
        }
    }

    /// A longest cycle, or `None` for a forest.
    pub fn longest_cycle(&mut self) -> Result<Option<Vec<usize>>> {
        let mut order: Vec<usize> = (0..self.locals.len()).collect();
        order.sort_by_key(|&b| std::cmp::Reverse(self.locals[b].k()));
        let mut best: Option<Vec<usize>> = None;
        for b in order {
            if self.locals[b].k() <= best.as_ref().map_or(2, Vec::len) {
                break;
            }
            if let Some(c) = self.block_cycle(b, 0)? {
                if c.len() > best.as_ref().map_or(0, Vec::len) {
                    best = Some(c);
                }
            }
        }
        Ok(best)
    }

    pub fn circumference(&mut self) -> Result<usize> {
        Ok(self.longest_cycle()?.map_or(0, |c| c.len()))
    }

    /// A cycle of length at least `r`, if any.
    pub fn cycle_at_least(&mut self, r: usize) -> Result<Option<Vec<usize>>> {
        let r = r.max(3);
        for b in 0..self.locals.len() {
            if self.locals[b].k() >= r {
                if let Some(c) = self.block_cycle(b, r)? {
                    return Ok(Some(c));
                }
            }
        }
        Ok(None)
    }

    /// A cycle of exactly `len` edges through the edge `uv`, listed starting
    /// `u, ..., v`.
    pub fn edge_on_cycle_of_length(&mut self, u: usize, v: usize, len: usize) -> Result<Option<Vec<usize>>> {
        if !self.g.has_edge(u, v) {
            return Err(Error::InvalidParameter(format!("({u},{v}) is not an edge")));
        }
        if len < 3 {
            return Err(Error::InvalidParameter(format!("cycle length {len} is below 3")));
        }
        let b = self.dec.blocks_of(u).iter().copied().find(|&b| self.dec.blocks[b].contains(v)).unwrap();
        self.block_path(b, u, v, Goal::Exactly(len - 1))
    }

    pub fn hamiltonian_path(&mut self, u: usize, v: usize) -> Result<Option<Vec<usize>>> {
        let n = self.g.order();
        self.path_at_least(u, v, n.saturating_sub(1))
    }

    pub fn hamiltonian_cycle(&mut self) -> Result<Option<Vec<usize>>> {
        let n = self.g.order();
        if n < 3 || self.dec.blocks.len() != 1 || self.dec.blocks[0].order() != n {
            return Ok(None);
        }
        // A Hamiltonian cycle uses two of the edges at a vertex s, so it uses
        // at least one of any deg(s) - 1 of them.
        let s = (0..n).min_by_key(|&v| (self.g.degree(v), v)).unwrap();
        let nbrs = self.g.neighbors(s).to_vec();
        for &w in &nbrs[..nbrs.len() - 1] {
            if let Some(p) = self.path_at_least(s, w, n - 1)? {
                return Ok(Some(p));
            }
        }
        Ok(None)
    }
}

/// Length of a longest cycle; 0 for forests.
pub fn circumference(g: &Graph) -> Result<usize> {
    PathEngine::new(g)?.circumference()
}

pub fn longest_cycle(g: &Graph) -> Result<Option<Vec<usize>>> {
    PathEngine::new(g)?.longest_cycle()
}

pub fn has_cycle_at_least(g: &Graph, r: usize) -> Result<bool> {
    Ok(PathEngine::new(g)?.cycle_at_least(r)?.is_some())
}

/// Witness `u`-`v` path with at least `len` edges, if one exists.
pub fn exists_path_at_least(g: &Graph, u: usize, v: usize, len: usize) -> Result<Option<Vec<usize>>> {
    PathEngine::new(g)?.path_at_least(u, v, len)
}

pub fn has_hamiltonian_path(g: &Graph, u: usize, v: usize) -> Result<bool> {
    Ok(PathEngine::new(g)?.hamiltonian_path(u, v)?.is_some())
}

pub fn has_hamiltonian_cycle(g: &Graph) -> Result<bool> {
    Ok(PathEngine::new(g)?.hamiltonian_cycle()?.is_some())
}

pub fn edge_on_cycle_of_length(g: &Graph, u: usize, v: usize, len: usize) -> Result<bool> {
    Ok(PathEngine::new(g)?.edge_on_cycle_of_length(u, v, len)?.is_some())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: usize, e: &[(usize, usize)]) -> Graph {
        Graph::new(n, e.iter().copied()).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn complete(n: usize) -> Graph {
        Graph::new(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)))).unwrap()
    }

    #[test]
    fn small_circumferences() {
        assert_eq!(circumference(&cycle(5)).unwrap(), 5);
        assert_eq!(circumference(&complete(6)).unwrap(), 6);
        assert_eq!(circumference(&g(4, &[(0, 1), (1, 2), (1, 3)])).unwrap(), 0);
        assert!(has_cycle_at_least(&complete(6), 6).unwrap());
        assert!(!has_cycle_at_least(&g(4, &[(0, 1), (1, 2), (2, 3)]), 3).unwrap());
    }

    #[test]
    fn longest_cycle_is_a_cycle() {
        let gr = g(7, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 6), (6, 3), (4, 6)]);
        let c = longest_cycle(&gr).unwrap().unwrap();
        assert!(gr.is_cycle(&c));
        assert_eq!(c.len(), 4);
    }

    #[test]
    fn star_leaves() {
        let star = g(4, &[(0, 1), (0, 2), (0, 3)]);
        assert!(exists_path_at_least(&star, 1, 2, 3).unwrap().is_none());
        assert_eq!(exists_path_at_least(&star, 1, 2, 2).unwrap(), Some(vec![1, 0, 2]));
    }

    #[test]
    fn path_at_least_length_one() {
        let gr = g(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]);
        assert!(exists_path_at_least(&gr, 0, 2, 1).unwrap().is_some());
        assert!(exists_path_at_least(&gr, 0, 2, 3).unwrap().is_some());
        assert!(exists_path_at_least(&gr, 0, 2, 4).unwrap().is_none());
    }

    #[test]
    fn hamiltonian_checks() {
        let c6_minus = g(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5)]);
        assert!(has_hamiltonian_path(&c6_minus, 0, 5).unwrap());
        for (u, v) in [(0, 1), (0, 3), (2, 3)] {
            assert!(has_hamiltonian_path(&complete(4), u, v).unwrap());
        }
        assert!(has_hamiltonian_cycle(&complete(4)).unwrap());
        assert!(!has_hamiltonian_cycle(&g(4, &[(0, 1), (1, 2), (2, 0), (2, 3)])).unwrap());
    }

    #[test]
    fn exact_cycles_through_edges() {
        assert!(edge_on_cycle_of_length(&complete(4), 0, 1, 3).unwrap());
        assert!(!edge_on_cycle_of_length(&cycle(5), 0, 1, 4).unwrap());
        assert!(edge_on_cycle_of_length(&cycle(5), 0, 1, 5).unwrap());
        assert!(edge_on_cycle_of_length(&cycle(5), 0, 2, 5).is_err());
    }

    #[test]
    fn branch_and_bound_matches_dp() {
        // Petersen graph: circumference 9, not Hamiltonian.
        let mut e = Vec::new();
        for i in 0..5 {
            e.push((i, (i + 1) % 5));
            e.push((i, i + 5));
            e.push((i + 5, (i + 2) % 5 + 5));
        }
        let p = g(10, &e);
        let local = Local::new(&(0..10).collect::<Vec<_>>(), &p.edges().collect::<Vec<_>>());
        let mut budget = Budget::unlimited();
        let bb = bb_cycle(&local.masks, local.full(), 0, &mut budget).unwrap().unwrap();
        let dp = dp_cycle(&local.masks, 0).unwrap();
        assert_eq!(bb.len(), 9);
        assert_eq!(dp.len(), 9);
        let table = path_table(&local.masks);
        for s in 0..10 {
            for t in 0..10 {
                if s == t {
                    continue;
                }
                let longest = 63 - table[s * 10 + t].leading_zeros() as usize;
                let p = bb_path(&local.masks, local.full(), s, t, Goal::Longest, &mut budget).unwrap().unwrap();
                assert_eq!(p.len() - 1, longest, "{s}-{t}");
                for l in 1..10 {
                    let exact = bb_path(&local.masks, local.full(), s, t, Goal::Exactly(l), &mut budget).unwrap();
                    assert_eq!(exact.is_some(), table[s * 10 + t] >> l & 1 == 1, "{s}-{t} len {l}");
                }
            }
        }
    }

    #[test]
    fn budget_exhaustion_is_an_error() {
        let big = complete(30);
        let mut e = PathEngine::with_budget(&big, Budget::new(5)).unwrap();
        assert!(matches!(e.cycle_at_least(30), Err(Error::ResourceExhausted { .. })));
    }

    #[test]
    fn large_blocks_are_searched() {
        let c40 = cycle(40);
        assert_eq!(circumference(&c40).unwrap(), 40);
        assert!(has_hamiltonian_path(&c40, 0, 1).unwrap());
        assert!(!has_hamiltonian_path(&c40, 0, 2).unwrap());
    }
}
