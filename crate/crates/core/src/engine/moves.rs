//! Candidate moves and the potential test that accepts or rejects them.

use std::fmt;

use super::exchange::{classify_pair, perform_exchange, PairCase};
use super::order::{exploration_with, minimal_order_with, residue, ChildEdge, LegalOrder, Potential};
use super::special::{apply_special_path, augment, blue_arc, find_minimal_special_path, in_reach};
use crate::density::is_small;
use crate::graph::{Decomposition, EdgeId, RedForest, Vertex};

/// Which construction produced an accepted move.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MoveKind {
    /// Special-path augmentation of a light child edge.
    Augment,
    /// Exchange of a root-component child edge.
    RootChild,
    /// Single exchange for a pair of small children.
    PairExchange,
    /// Exchange for a pair of small children followed by an augmentation.
    PairAugment,
    /// Exchange of a small-child edge with an incident red edge.
    IncidentExchange,
    /// The same exchange followed by an augmentation.
    IncidentAugment,
    /// Two chained exchanges followed by an augmentation.
    ChainAugment,
}

impl MoveKind {
    pub fn id(&self) -> &'static str {
        match self {
            MoveKind::Augment => "M0",
            MoveKind::RootChild => "M1",
            MoveKind::PairExchange | MoveKind::PairAugment => "M2",
            MoveKind::IncidentExchange | MoveKind::IncidentAugment | MoveKind::ChainAugment => {
                "M3"
            }
        }
    }

    pub fn tag(&self) -> &'static str {
        match self {
            MoveKind::Augment => "special-path",
            MoveKind::RootChild => "root-child-exchange",
            MoveKind::PairExchange => "pair-exchange",
            MoveKind::PairAugment => "pair-exchange+special-path",
            MoveKind::IncidentExchange => "incident-exchange",
            MoveKind::IncidentAugment => "incident-exchange+special-path",
            MoveKind::ChainAugment => "double-exchange+special-path",
        }
    }
}

impl fmt::Display for MoveKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.id(), self.tag())
    }
}

/// One accepted move.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MoveRecord {
    pub kind: MoveKind,
    /// Edges whose color or tree changed, sorted.
    pub edges: Vec<EdgeId>,
    pub before: Potential,
    pub after: Potential,
    /// Whether the residue strictly dropped.
    pub residue_drop: bool,
}

impl fmt::Display for MoveRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} edges={:?} before[{}] after[{}]",
            self.kind, self.edges, self.before, self.after
        )
    }
}

/// Fixed data of the current state against which candidates are judged.
pub(crate) struct Judge {
    d: usize,
    root: Vertex,
    rho: Vec<usize>,
    root_edges: Vec<EdgeId>,
    pub(crate) potential: Potential,
}

fn root_component_edges(dec: &Decomposition, forest: &RedForest, r: Vertex) -> Vec<EdgeId> {
    let comp = forest.component_of(r);
    let mut mask = vec![false; dec.graph().n()];
    for &v in &comp.vertices {
        mask[v] = true;
    }
    dec.red()
        .iter()
        .copied()
        .filter(|&e| mask[dec.graph().endpoints(e).0])
        .collect()
}

impl Judge {
    pub(crate) fn new(dec: &Decomposition, forest: &RedForest, order: &LegalOrder, d: usize) -> Self {
        let r = dec.root();
        let rho = residue(forest, d);
        Judge {
            d,
            root: r,
            root_edges: root_component_edges(dec, forest, r),
            potential: Potential::new(rho.clone(), order.sizes()),
            rho,
        }
    }

    /// Potential of `cand` if it is strictly better: either the residue drops,
    /// or the residue and the root component stay and the order sizes drop.
    pub(crate) fn accepts(&self, cand: &Decomposition) -> Option<Potential> {
        debug_assert_eq!(cand.validate(), Ok(()));
        let forest = cand.red_forest();
        let rho = residue(&forest, self.d);
        if rho > self.rho {
            return None;
        }
        let expl = exploration_with(cand, &forest, self.root);
        let order = minimal_order_with(cand, &forest, &expl);
        let pot = Potential::new(rho, order.sizes());
        if pot.rho < self.rho {
            return Some(pot);
        }
        if root_component_edges(cand, &forest, self.root) != self.root_edges {
            return None;
        }
        (pot < self.potential).then_some(pot)
    }
}

fn changed_edges(a: &Decomposition, b: &Decomposition) -> Vec<EdgeId> {
    let (ca, cb) = (a.colors(), b.colors());
    let mut out: Vec<EdgeId> = (0..ca.len()).filter(|&e| ca[e] != cb[e]).collect();
    for (ta, tb) in a.blue().iter().zip(b.blue()) {
        for v in 0..a.graph().n() {
            if let (Some((pa, ea)), Some((pb, eb))) = (ta.parent(v), tb.parent(v)) {
                if ea == eb && pa != pb {
                    out.push(ea);
                }
            }
        }
    }
    out.sort_unstable();
    out.dedup();
    out
}

pub(crate) struct Step<'a> {
    dec: &'a Decomposition,
    forest: RedForest,
    order: LegalOrder,
    judge: Judge,
    k: usize,
    d: usize,
}

type Accepted = (Decomposition, Potential);

impl<'a> Step<'a> {
    pub(crate) fn new(dec: &'a Decomposition, k: usize, d: usize) -> Self {
        let forest = dec.red_forest();
        let expl = exploration_with(dec, &forest, dec.root());
        let order = minimal_order_with(dec, &forest, &expl);
        let judge = Judge::new(dec, &forest, &order, d);
        Step {
            dec,
            forest,
            order,
            judge,
            k,
            d,
        }
    }

    fn small(&self, pos: usize) -> bool {
        is_small(self.order.components[pos].edge_count, self.k, self.d)
    }

    fn size(&self, pos: usize) -> usize {
        self.order.components[pos].edge_count
    }

    fn try_dec(&self, cand: Result<Decomposition, impl fmt::Debug>) -> Option<Accepted> {
        let cand = cand.ok()?;
        let pot = self.judge.accepts(&cand)?;
        Some((cand, pot))
    }

    /// Every augmentation of `edge` in `mid`, earliest released edge first.
    fn follow_up(&self, mid: &Decomposition, edge: EdgeId) -> Option<Accepted> {
        let (_, x, _) = blue_arc(mid, edge)?;
        let (reach, _) = in_reach(mid, x);
        let forest = mid.red_forest();
        let expl = exploration_with(mid, &forest, mid.root());
        let order = minimal_order_with(mid, &forest, &expl);
        let mut cands: Vec<(usize, EdgeId)> = mid
            .red()
            .iter()
            .filter_map(|&e| {
                let (a, b) = mid.graph().endpoints(e);
                let inner = match (reach[a], reach[b]) {
                    (true, false) => a,
                    (false, true) => b,
                    _ => return None,
                };
                Some((order.position(inner).unwrap_or(usize::MAX), e))
            })
            .collect();
        cands.sort_unstable();
        cands
            .into_iter()
            .find_map(|(_, e0)| self.try_dec(augment(mid, edge, e0)))
    }

    fn small_children_by_tree(&self, pos: usize) -> Vec<Vec<ChildEdge>> {
        let mut by_tree = vec![Vec::new(); self.k];
        for c in self.order.children(self.dec, pos) {
            if self.small(c.child) {
                by_tree[c.tree].push(c);
            }
        }
        by_tree
    }

    /// First improving move in priority order.
    pub(crate) fn find(&self) -> Option<(Decomposition, MoveRecord)> {
        let found = self
            .augment_light_children()
            .or_else(|| self.root_children())
            .or_else(|| self.pairs())
            .or_else(|| {
                if self.d > self.k + 1 {
                    self.incident().or_else(|| self.chains())
                } else {
                    None
                }
            });
        found.map(|(kind, (dec, after))| {
            let record = MoveRecord {
                kind,
                edges: changed_edges(self.dec, &dec),
                residue_drop: after.rho < self.judge.potential.rho,
                before: self.judge.potential.clone(),
                after,
            };
            (dec, record)
        })
    }

    fn augment_light_children(&self) -> Option<(MoveKind, Accepted)> {
        for pos in 0..self.order.len() {
            for c in self.order.children(self.dec, pos) {
                if self.size(pos) + self.size(c.child) + 1 > self.d {
                    continue;
                }
                let Ok(sp) = find_minimal_special_path(self.dec, &self.order, c.edge) else {
                    continue;
                };
                if let Some(acc) = self.try_dec(apply_special_path(self.dec, &self.order, &sp)) {
                    return Some((MoveKind::Augment, acc));
                }
            }
        }
        None
    }

    fn root_children(&self) -> Option<(MoveKind, Accepted)> {
        let r = self.dec.root();
        for c in self.order.children(self.dec, 0) {
            if !self.small(c.child) {
                continue;
            }
            let t = self.dec.tree(c.tree);
            let path = self.forest.path(c.tail, r).ok()?;
            let edges = self.forest.path_edges(c.tail, r).ok()?;
            let Some(i) = path.iter().position(|&v| !t.descends(v, c.tail)) else {
                continue;
            };
            let e = edges[i - 1];
            if let Some(acc) = self.try_dec(perform_exchange(self.dec, c.tree, c.tail, e)) {
                return Some((MoveKind::RootChild, acc));
            }
        }
        None
    }

    fn pairs(&self) -> Option<(MoveKind, Accepted)> {
        for pos in 0..self.order.len() {
            for (tree, kids) in self.small_children_by_tree(pos).into_iter().enumerate() {
                for a in &kids {
                    for b in &kids {
                        if a.child == b.child {
                            continue;
                        }
                        if let Some(found) = self.pair(tree, a, b) {
                            return Some(found);
                        }
                    }
                }
            }
        }
        None
    }

    fn pair(&self, tree: usize, a: &ChildEdge, b: &ChildEdge) -> Option<(MoveKind, Accepted)> {
        let t = self.dec.tree(tree);
        let (x, y) = (a.tail, b.tail);
        let case = classify_pair(t, &self.forest, x, y).ok()?;
        let exch = |u: Vertex, e: EdgeId| perform_exchange(self.dec, tree, u, e).ok();
        let variants: Vec<(Vertex, EdgeId, Option<EdgeId>)> = match case {
            PairCase::Two { edge } | PairCase::Three { edge } => {
                vec![(x, edge.edge, None), (x, edge.edge, Some(b.edge))]
            }
            PairCase::One { first, second } => vec![
                (y, second.edge, None),
                (x, first.edge, Some(b.edge)),
                (x, first.edge, None),
                (y, second.edge, Some(a.edge)),
            ],
        };
        for (u, e, follow) in variants {
            let Some(mid) = exch(u, e) else { continue };
            let found = match follow {
                None => self
                    .try_dec(Ok::<_, ()>(mid))
                    .map(|acc| (MoveKind::PairExchange, acc)),
                Some(f) => self.follow_up(&mid, f).map(|acc| (MoveKind::PairAugment, acc)),
            };
            if found.is_some() {
                return found;
            }
        }
        None
    }

    fn incident(&self) -> Option<(MoveKind, Accepted)> {
        for pos in 0..self.order.len() {
            let by_tree = self.small_children_by_tree(pos);
            for (tree, kids) in by_tree.iter().enumerate() {
                let t = self.dec.tree(tree);
                for c in kids {
                    let x = c.tail;
                    for &(y, e) in self.forest.neighbors(x) {
                        if t.descends(y, x) {
                            continue;
                        }
                        let Ok(mid) = perform_exchange(self.dec, tree, x, e) else {
                            continue;
                        };
                        if let Some(acc) = self.try_dec(Ok::<_, ()>(mid.clone())) {
                            return Some((MoveKind::IncidentExchange, acc));
                        }
                        for c2 in kids.iter().filter(|c2| c2.tail == y && c2.child != c.child) {
                            if let Some(acc) = self.follow_up(&mid, c2.edge) {
                                return Some((MoveKind::IncidentAugment, acc));
                            }
                        }
                    }
                }
            }
        }
        None
    }

    fn chains(&self) -> Option<(MoveKind, Accepted)> {
        for pos in 0..self.order.len() {
            for (tree, kids) in self.small_children_by_tree(pos).into_iter().enumerate() {
                let t = self.dec.tree(tree);
                for a in &kids {
                    for b in &kids {
                        if a.child == b.child {
                            continue;
                        }
                        let Ok(PairCase::Two { edge: e1 }) =
                            classify_pair(t, &self.forest, a.tail, b.tail)
                        else {
                            continue;
                        };
                        for c in &kids {
                            if c.child == a.child || c.child == b.child {
                                continue;
                            }
                            let Ok(PairCase::Two { edge: e2 }) =
                                classify_pair(t, &self.forest, b.tail, c.tail)
                            else {
                                continue;
                            };
                            let Ok(mid) = perform_exchange(self.dec, tree, a.tail, e1.edge) else {
                                continue;
                            };
                            let Ok(mid2) = perform_exchange(&mid, tree, b.tail, e2.edge) else {
                                continue;
                            };
                            if let Some(acc) = self.follow_up(&mid2, c.edge) {
                                return Some((MoveKind::ChainAugment, acc));
                            }
                        }
                    }
                }
            }
        }
        None
    }
}
