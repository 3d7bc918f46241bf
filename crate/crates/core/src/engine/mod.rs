//! The reconfiguration engine: from `k` spanning trees plus a forest to a
//! decomposition whose red components have at most `d` edges.
//!
//! Each step fixes the largest oversized red component `R*`, roots the blue
//! trees inside it and applies the first candidate move that strictly lowers
//! the potential (residue vector, then legal-order sizes). When no candidate
//! improves, the state is reported with a [`DensityCertificate`].

mod exchange;
mod moves;
mod order;
mod special;
mod stuck;

use std::collections::{HashSet, VecDeque};
use std::sync::Arc;

use thiserror::Error;

pub use exchange::{can_exchange, case_holds, classify_pair, perform_exchange, ExchangeError, PairCase, PathEdge};
pub use moves::{MoveKind, MoveRecord};
pub use order::{
    exploration_subgraph, minimal_legal_order, potential, residue, ChildEdge, Exploration,
    LegalOrder, Potential,
};
pub use special::{
    apply_special_path, augment, check_special_postconditions, find_minimal_special_path,
    SpecialPath, SpecialPathError,
};
pub use stuck::{structure, ChildTally, DensityCertificate, StructureViolation};

use crate::density::{chi, ParameterOutOfRange};
use crate::graph::{
    check_forest_partition, forests_span, Decomposition, EdgeId, MultiGraph, RedComponent,
    RedForest, Vertex, Violation,
};
use crate::packing::{spanning_trees_plus_forest, PackingError, Shape};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EngineError {
    #[error(transparent)]
    Parameters(#[from] ParameterOutOfRange),
    #[error(transparent)]
    Packing(#[from] PackingError),
    #[error("engine revisited a state after {0} moves")]
    RepeatedState(usize),
    #[error("accepted move did not lower the potential: {0}")]
    NotDecreasing(String),
    #[error("engine produced an invalid decomposition: {0}")]
    InvalidOutput(Violation),
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct EngineOptions {
    /// Print every accepted move to standard error.
    pub trace: bool,
}

impl EngineOptions {
    /// Tracing enabled by `DRAGONFOREST_TRACE=1`.
    pub fn from_env() -> Self {
        EngineOptions {
            trace: std::env::var("DRAGONFOREST_TRACE").is_ok_and(|v| v == "1"),
        }
    }
}

/// A vertex of red degree at least two inside `component`; when `d > k + 1`
/// one of degree three, or else one with two red arms of length two.
pub fn choose_root(component: &RedComponent, forest: &RedForest, k: usize, d: usize) -> Vertex {
    let deg = |v: Vertex| forest.degree(v);
    let pick = |ok: &dyn Fn(Vertex) -> bool| component.vertices.iter().copied().find(|&v| ok(v));
    let two = || pick(&|v| deg(v) >= 2).unwrap_or(component.id);
    if d <= k + 1 {
        return two();
    }
    pick(&|v| deg(v) >= 3)
        .or_else(|| {
            pick(&|v| {
                forest
                    .neighbors(v)
                    .iter()
                    .filter(|&&(w, _)| deg(w) >= 2)
                    .count()
                    >= 2
            })
        })
        .unwrap_or_else(two)
}

/// The largest component with more than `d` edges, smallest id first.
fn oversized(forest: &RedForest, d: usize) -> Option<&RedComponent> {
    forest
        .components()
        .iter()
        .filter(|c| c.edge_count > d)
        .min_by_key(|c| (std::cmp::Reverse(c.edge_count), c.id))
}

/// One improving move from `dec` (rooted inside the component under study).
pub fn step(dec: &Decomposition, k: usize, d: usize) -> Option<(Decomposition, MoveRecord)> {
    moves::Step::new(dec, k, d).find()
}

/// Engine result on a graph that already has the spanning-tree shape.
#[derive(Clone, Debug)]
pub enum Outcome {
    Solved {
        decomposition: Decomposition,
        moves: Vec<MoveRecord>,
    },
    Stuck {
        certificate: Box<DensityCertificate>,
        moves: Vec<MoveRecord>,
    },
}

impl Outcome {
    pub fn moves(&self) -> &[MoveRecord] {
        match self {
            Outcome::Solved { moves, .. } | Outcome::Stuck { moves, .. } => moves,
        }
    }
}

/// Runs the move loop from `dec` until every red component has at most `d`
/// edges or no move improves.
pub fn solve_decomposition(
    dec: Decomposition,
    k: usize,
    d: usize,
    opts: EngineOptions,
) -> Result<Outcome, EngineError> {
    chi(k, d)?;
    let mut dec = dec;
    let mut moves = Vec::new();
    let mut seen: HashSet<Vec<u32>> = HashSet::new();
    loop {
        let forest = dec.red_forest();
        let Some(rstar) = oversized(&forest, d) else {
            dec.validate().map_err(EngineError::InvalidOutput)?;
            return Ok(Outcome::Solved {
                decomposition: dec,
                moves,
            });
        };
        let r = choose_root(rstar, &forest, k, d);
        dec = dec.reroot(r);
        loop {
            if !seen.insert(dec.fingerprint()) {
                return Err(EngineError::RepeatedState(moves.len()));
            }
            let Some((next, record)) = step(&dec, k, d) else {
                let certificate = Box::new(DensityCertificate::new(&dec, k, d));
                return Ok(Outcome::Stuck { certificate, moves });
            };
            if record.after >= record.before {
                return Err(EngineError::NotDecreasing(record.to_string()));
            }
            if opts.trace {
                eprintln!("[dragonforest] move {}: {record}", moves.len() + 1);
            }
            let dropped = record.residue_drop;
            moves.push(record);
            dec = next;
            if dropped {
                break;
            }
        }
    }
}

/// `k` forests plus a red forest, not necessarily with spanning blue parts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ForestSplit {
    pub k: usize,
    pub root: Vertex,
    pub blue: Vec<Vec<EdgeId>>,
    pub red: Vec<EdgeId>,
    /// Whether every blue class is a spanning tree.
    pub spanning: bool,
}

impl ForestSplit {
    pub fn from_decomposition(dec: &Decomposition) -> Self {
        ForestSplit {
            k: dec.k(),
            root: dec.root(),
            blue: (0..dec.k()).map(|i| dec.blue_edges(i)).collect(),
            red: dec.red().iter().copied().collect(),
            spanning: true,
        }
    }

    /// Partition, acyclicity, the red bound and the spanning claim.
    pub fn check(&self, g: &MultiGraph, bound: Option<usize>) -> Result<(), Violation> {
        check_forest_partition(g, &self.blue, &self.red, bound)?;
        if self.spanning && !forests_span(g, &self.blue) {
            return Err(Violation::ClaimMismatch("blue classes are not spanning".into()));
        }
        Ok(())
    }

    pub fn max_red_component_edges(&self, g: &MultiGraph) -> usize {
        RedForest::new(g, self.red.iter().copied())
            .components()
            .iter()
            .map(|c| c.edge_count)
            .max()
            .unwrap_or(0)
    }

    /// `(child, parent, edge)` for every blue edge, each class oriented
    /// towards `root` (or the smallest vertex of a component missing it).
    pub fn orientations(&self, g: &MultiGraph) -> Vec<(Vertex, Vertex, EdgeId)> {
        let n = g.n();
        let mut out = Vec::new();
        for class in &self.blue {
            let mut adj = vec![Vec::new(); n];
            for &e in class {
                let (u, v) = g.endpoints(e);
                adj[u].push((v, e));
                adj[v].push((u, e));
            }
            let mut seen = vec![false; n];
            let starts = std::iter::once(self.root).filter(|&r| r < n).chain(0..n);
            for s in starts {
                if seen[s] {
                    continue;
                }
                seen[s] = true;
                let mut queue = VecDeque::from([s]);
                while let Some(v) = queue.pop_front() {
                    for &(w, e) in &adj[v] {
                        if !seen[w] {
                            seen[w] = true;
                            out.push((w, v, e));
                            queue.push_back(w);
                        }
                    }
                }
            }
        }
        out
    }
}

/// Result of [`run`].
#[derive(Clone, Debug)]
pub enum RunOutcome {
    Solved {
        split: ForestSplit,
        /// The full decomposition when the graph had `k` disjoint spanning trees.
        decomposition: Option<Decomposition>,
        moves: Vec<MoveRecord>,
    },
    Stuck {
        certificate: Box<DensityCertificate>,
        moves: Vec<MoveRecord>,
    },
}

impl RunOutcome {
    pub fn moves(&self) -> &[MoveRecord] {
        match self {
            RunOutcome::Solved { moves, .. } | RunOutcome::Stuck { moves, .. } => moves,
        }
    }

    pub fn split(&self) -> Option<&ForestSplit> {
        match self {
            RunOutcome::Solved { split, .. } => Some(split),
            RunOutcome::Stuck { .. } => None,
        }
    }
}

/// Decomposes the connected graph `g` into `k` forests plus a forest whose
/// components have at most `d` edges.
///
/// Graphs without `k` edge-disjoint spanning trees are split along the
/// clusters of a maximum `k`-forest packing: each cluster is solved on its
/// own and the packing forests between clusters stay blue.
pub fn run(g: &MultiGraph, k: usize, d: usize, opts: EngineOptions) -> Result<RunOutcome, EngineError> {
    chi(k, d)?;
    let g = Arc::new(g.clone());
    let out = match spanning_trees_plus_forest(&g, k, 0)? {
        Shape::Ready(dec) => match solve_decomposition(dec, k, d, opts)? {
            Outcome::Solved {
                decomposition,
                moves,
            } => RunOutcome::Solved {
                split: ForestSplit::from_decomposition(&decomposition),
                decomposition: Some(decomposition),
                moves,
            },
            Outcome::Stuck { certificate, moves } => RunOutcome::Stuck { certificate, moves },
        },
        Shape::ReductionNeeded { packing, .. } => {
            let mut blue: Vec<Vec<EdgeId>> = vec![Vec::new(); k];
            let mut red = Vec::new();
            let mut moves = Vec::new();
            let cluster_of = packing.cluster_index(g.n());
            let inside = |e: EdgeId| {
                let (u, v) = g.endpoints(e);
                cluster_of[u].is_some() && cluster_of[u] == cluster_of[v]
            };
            for (i, f) in packing.forests.iter().enumerate() {
                blue[i].extend(f.iter().copied().filter(|&e| !inside(e)));
            }
            for cluster in &packing.clusters {
                let (sub, emap) = g.induced(cluster);
                let sub = Arc::new(sub);
                let Shape::Ready(dec) = spanning_trees_plus_forest(&sub, k, 0)? else {
                    unreachable!("each packing forest spans every cluster");
                };
                match solve_decomposition(dec, k, d, opts)? {
                    Outcome::Solved {
                        decomposition,
                        moves: m,
                    } => {
                        moves.extend(m);
                        for (i, b) in blue.iter_mut().enumerate() {
                            b.extend(decomposition.blue_edges(i).into_iter().map(|e| emap[e]));
                        }
                        red.extend(decomposition.red().iter().map(|&e| emap[e]));
                    }
                    Outcome::Stuck {
                        mut certificate,
                        moves: m,
                    } => {
                        moves.extend(m);
                        certificate.vertex_map = cluster.clone();
                        return Ok(RunOutcome::Stuck { certificate, moves });
                    }
                }
            }
            for b in &mut blue {
                b.sort_unstable();
            }
            red.sort_unstable();
            RunOutcome::Solved {
                split: ForestSplit {
                    k,
                    root: 0,
                    blue,
                    red,
                    spanning: false,
                },
                decomposition: None,
                moves,
            }
        }
    };
    if let RunOutcome::Solved { split, .. } = &out {
        split.check(&g, Some(d)).map_err(EngineError::InvalidOutput)?;
    }
    Ok(out)
}
