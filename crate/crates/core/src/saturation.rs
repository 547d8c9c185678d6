//! The C≥r-saturation predicate and the exhaustive saturation-number oracle.
//!
//! `G` is C≥r-saturated when it has no cycle of length at least `r` and
//! adding any missing edge `uv` creates one. Such a cycle must use `uv`, so
//! the second condition is the same as asking for a `u`-`v` path with at
//! least `r - 1` edges in `G`, and it forces `G` to be connected.

use rayon::prelude::*;
use serde::Serialize;

use crate::canon::canonical_code;
use crate::cycles::{has_cycle_at_least, Budget, PathEngine};
use crate::enumerate::Levels;
use crate::{bounds, graph6, Error, Graph, Result, SCHEMA_VERSION};

fn check_r(r: usize) -> Result<()> {
    if r < 3 {
        return Err(Error::InvalidParameter(format!("cycle threshold r = {r} is below 3")));
    }
    Ok(())
}

/// True iff `G` has no cycle of length at least `r`.
pub fn is_c_ge_r_free(g: &Graph, r: usize) -> Result<bool> {
    check_r(r)?;
    Ok(!has_cycle_at_least(g, r)?)
}

/// Yes/no saturation test without witnesses.
pub fn is_saturated(g: &Graph, r: usize) -> Result<bool> {
    check_r(r)?;
    if !g.is_connected() {
        return Ok(false);
    }
    let mut engine = PathEngine::new(g)?;
    if engine.cycle_at_least(r)?.is_some() {
        return Ok(false);
    }
    for (u, v) in g.non_edges() {
        if engine.path_at_least(u, v, r - 1)?.is_none() {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Verdict {
    Saturated,
    /// A cycle of length at least `r` is already present.
    NotFree { cycle: Vec<usize> },
    /// Free, but some non-edge can be added without creating a long cycle.
    NotSaturated { reason: Shortfall },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Shortfall {
    /// Adding an edge between components creates no cycle at all.
    Disconnected { components: Vec<Vec<usize>> },
    /// The longest `u`-`v` path has fewer than `r - 1` edges.
    ShortPath { u: usize, v: usize, longest: usize },
}

/// Path of at least `r - 1` edges joining a non-adjacent pair; with `uv` it
/// closes a cycle of length at least `r`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NonEdgeWitness {
    pub u: usize,
    pub v: usize,
    pub path: Vec<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SaturationCertificate {
    pub schema_version: u32,
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    pub r: usize,
    #[serde(flatten)]
    pub verdict: Verdict,
    pub circumference: usize,
    pub longest_cycle: Option<Vec<usize>>,
    pub nonedge_witnesses: Vec<NonEdgeWitness>,
    /// Whether every non-edge was re-checked by materializing `G + uv`.
    pub cross_checked: bool,
    pub search_nodes: u64,
}

impl SaturationCertificate {
    pub fn is_saturated(&self) -> bool {
        self.verdict == Verdict::Saturated
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct CheckOptions {
    /// Node-expansion cap for the branch-and-bound searches.
    pub budget: Option<u64>,
    /// Re-decide every non-edge by computing cycles of `G + uv` directly.
    pub cross_check: bool,
}

/// Saturation verdict with witnesses and default options.
pub fn is_c_ge_r_saturated(g: &Graph, r: usize) -> Result<SaturationCertificate> {
    certify(g, r, CheckOptions::default())
}

pub fn certify(g: &Graph, r: usize, opts: CheckOptions) -> Result<SaturationCertificate> {
    check_r(r)?;
    let budget = opts.budget.map_or(Budget::unlimited(), Budget::new);
    let mut engine = PathEngine::with_budget(g, budget)?;
    let longest_cycle = engine.longest_cycle()?;
    let circumference = longest_cycle.as_ref().map_or(0, Vec::len);
    let mut cert = SaturationCertificate {
        schema_version: SCHEMA_VERSION,
        graph6: graph6::emit(g),
        n: g.order(),
        m: g.size(),
        r,
        verdict: Verdict::Saturated,
        circumference,
        longest_cycle: longest_cycle.clone(),
        nonedge_witnesses: Vec::new(),
        cross_checked: false,
        search_nodes: 0,
    };
    if circumference >= r {
        cert.verdict = Verdict::NotFree {
            cycle: longest_cycle.unwrap(),
        };
    } else if !g.is_connected() {
        cert.verdict = Verdict::NotSaturated {
            reason: Shortfall::Disconnected {
                components: g.components(),
            },
        };
    } else {
        for (u, v) in g.non_edges() {
            match engine.path_at_least(u, v, r - 1)? {
                Some(path) => cert.nonedge_witnesses.push(NonEdgeWitness { u, v, path }),
                None => {
                    let longest = engine.longest_path(u, v)?.map_or(0, |p| p.len() - 1);
                    cert.verdict = Verdict::NotSaturated {
                        reason: Shortfall::ShortPath { u, v, longest },
                    };
                    break;
                }
            }
        }
    }
    if opts.cross_check && circumference < r {
        for (u, v) in g.non_edges() {
            let by_path = cert.nonedge_witnesses.iter().any(|w| (w.u, w.v) == (u, v));
            let decided = by_path || matches!(&cert.verdict, Verdict::NotSaturated { reason: Shortfall::ShortPath { u: a, v: b, .. } } if (*a, *b) == (u, v));
            if !decided {
                continue;
            }
            let by_cycle = has_cycle_at_least(&g.with_edge(u, v)?, r)?;
            if by_path != by_cycle {
                return Err(Error::CrossCheckMismatch { u, v, r });
            }
        }
        cert.cross_checked = true;
    }
    cert.search_nodes = engine.budget().used();
    Ok(cert)
}

/// Outcome of the exhaustive search for `sat(n, C≥r)`.
#[derive(Clone, Debug, Serialize)]
pub struct SatResult {
    pub schema_version: u32,
    pub n: usize,
    pub r: usize,
    pub sat_value: usize,
    /// graph6 of every minimum saturated graph, one per isomorphism class,
    /// sorted by canonical code.
    pub witnesses: Vec<String>,
    /// Connected candidates tested.
    pub graphs_examined: u64,
    /// C≥r-free graphs checked against `m <= (r-1)(n-1)/2`.
    pub free_graphs_audited: u64,
    pub erdos_gallai_violations: u64,
}

/// Finds `sat(n, C≥r)` by testing every connected graph with `m = n-1, n,
/// ..., max_edges` edges and stopping at the first `m` that has a saturated
/// member.
pub fn sat_oracle(n: usize, r: usize, max_edges: usize) -> Result<SatResult> {
    check_r(r)?;
    if n == 0 {
        return Err(Error::InvalidParameter("n must be positive".into()));
    }
    if max_edges + 1 < n {
        return Err(Error::InvalidParameter(format!(
            "max_edges = {max_edges} is below n - 1 = {}",
            n - 1
        )));
    }
    let max_edges = max_edges.min(n * (n - 1) / 2);
    let mut levels = Levels::new(n)?;
    while levels.edges() + 1 < n {
        levels.advance();
    }
    let mut examined = 0u64;
    let mut audited = 0u64;
    let mut violations = 0u64;
    loop {
        let m = levels.edges();
        let candidates: Vec<&Graph> = levels.graphs().filter(|g| g.is_connected()).collect();
        let outcomes: Vec<(bool, bool)> = candidates
            .par_iter()
            .map(|g| -> Result<(bool, bool)> {
                let free = is_c_ge_r_free(g, r)?;
                Ok((free, free && is_saturated(g, r)?))
            })
            .collect::<Result<_>>()?;
        examined += candidates.len() as u64;
        for &(free, _) in &outcomes {
            if free {
                audited += 1;
                if !bounds::erdos_gallai_holds(n, m, r) {
                    violations += 1;
                }
            }
        }
        let mut witnesses: Vec<(_, String)> = candidates
            .iter()
            .zip(&outcomes)
            .filter(|(_, o)| o.1)
            .map(|(g, _)| (canonical_code(g).unwrap(), graph6::emit(g)))
            .collect();
        if !witnesses.is_empty() {
            witnesses.sort();
            return Ok(SatResult {
                schema_version: SCHEMA_VERSION,
                n,
                r,
                sat_value: m,
                witnesses: witnesses.into_iter().map(|w| w.1).collect(),
                graphs_examined: examined,
                free_graphs_audited: audited,
                erdos_gallai_violations: violations,
            });
        }
        if m >= max_edges || !levels.advance() {
            return Err(Error::NoSaturatedGraph { n, r, max_edges });
        }
    }
}
