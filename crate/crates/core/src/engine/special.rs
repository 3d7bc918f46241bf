//! Special paths and the augmentation that recolors one blue edge red.
//!
//! The augmentation for a blue edge `(x, y)` and a red edge `{v0, w}` works on
//! the set `D` of vertices with a blue walk to `x`. Contracting everything
//! outside `D` to one vertex `o` turns the blue edges leaving `D` into `k`
//! spanning trees of `D + o`; dropping `(x, y)` and inserting `{v0, o}` by a
//! matroid-union augmentation rebuilds them, and the untouched edges outside
//! `D` carry the trees back to the root.

use std::collections::{BTreeSet, VecDeque};

use thiserror::Error;

use super::order::LegalOrder;
use crate::graph::{find_cycle, Decomposition, EdgeId, MultiGraph, OrientedTree, Vertex};
use crate::packing::ForestUnion;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpecialPathError {
    #[error("edge {0} is not blue")]
    NotBlue(EdgeId),
    #[error("edge {0} is not red")]
    NotRed(EdgeId),
    #[error("head of edge {0} is not in a later component than its tail")]
    NotForward(EdgeId),
    #[error("red edge {red} does not leave the blue in-reach of edge {edge}")]
    NotAugmentable { edge: EdgeId, red: EdgeId },
    #[error("special path hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("postcondition failed: {0}")]
    Postcondition(String),
}

/// A blue directed path `v_0 .. v_l` ending in the designated edge, together
/// with the red edge `{v_{-1}, v_0}` it releases.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecialPath {
    pub vertices: Vec<Vertex>,
    /// `(tree, edge)` for each step of the path.
    pub steps: Vec<(usize, EdgeId)>,
    pub edge: EdgeId,
    pub start_parent: Vertex,
    pub red_edge: EdgeId,
    /// Legal-order position of `v_0`.
    pub start_index: usize,
}

impl SpecialPath {
    pub fn start(&self) -> Vertex {
        self.vertices[0]
    }

    pub fn tail(&self) -> Vertex {
        self.vertices[self.vertices.len() - 2]
    }

    pub fn head(&self) -> Vertex {
        *self.vertices.last().expect("path has two vertices")
    }
}

/// Tree index, tail and head of a blue edge.
pub(crate) fn blue_arc(dec: &Decomposition, e: EdgeId) -> Option<(usize, Vertex, Vertex)> {
    let (a, b) = dec.graph().endpoints(e);
    dec.blue().iter().enumerate().find_map(|(i, t)| {
        if t.parent(a) == Some((b, e)) {
            Some((i, a, b))
        } else if t.parent(b) == Some((a, e)) {
            Some((i, b, a))
        } else {
            None
        }
    })
}

/// First step `(next vertex, tree, edge)` of a blue walk.
type Step = (Vertex, usize, EdgeId);

/// Vertices with a blue directed walk to `x`, and for each one the first step
/// of a shortest such walk.
pub(crate) fn in_reach(dec: &Decomposition, x: Vertex) -> (Vec<bool>, Vec<Option<Step>>) {
    let n = dec.graph().n();
    let mut into: Vec<Vec<(Vertex, usize, EdgeId)>> = vec![Vec::new(); n];
    for (i, t) in dec.blue().iter().enumerate() {
        for v in 0..n {
            if let Some((p, e)) = t.parent(v) {
                into[p].push((v, i, e));
            }
        }
    }
    let mut reach = vec![false; n];
    let mut next = vec![None; n];
    reach[x] = true;
    let mut queue = VecDeque::from([x]);
    while let Some(v) = queue.pop_front() {
        for &(u, i, e) in &into[v] {
            if !reach[u] {
                reach[u] = true;
                next[u] = Some((v, i, e));
                queue.push_back(u);
            }
        }
    }
    (reach, next)
}

/// The minimal special path for the blue edge `edge` under `order`, chosen
/// so that the augmentation hypothesis holds whenever possible.
pub fn find_minimal_special_path(
    dec: &Decomposition,
    order: &LegalOrder,
    edge: EdgeId,
) -> Result<SpecialPath, SpecialPathError> {
    let (tree, x, y) = blue_arc(dec, edge).ok_or(SpecialPathError::NotBlue(edge))?;
    let iy = order.position(y);
    let (Some(ix), Some(iy)) = (order.position(x), iy) else {
        return Err(SpecialPathError::NotForward(edge));
    };
    if iy <= ix {
        return Err(SpecialPathError::NotForward(edge));
    }
    let (reach, next) = in_reach(dec, x);
    let n = dec.graph().n();
    let cands: Vec<(usize, Vertex)> = (0..n)
        .filter(|&v| reach[v])
        .filter_map(|v| order.position(v).map(|p| (p, v)))
        .filter(|&(p, _)| p < iy)
        .collect();
    let i0 = cands.iter().map(|&(p, _)| p).min().expect("x itself qualifies");
    let level: Vec<Vertex> = cands
        .iter()
        .filter(|&&(p, _)| p == i0)
        .map(|&(_, v)| v)
        .collect();
    let minimal: Vec<Vertex> = level
        .iter()
        .copied()
        .filter(|&v| !level.iter().any(|&u| u != v && order.aux_is_ancestor(u, v)))
        .collect();

    let forest = dec.red_forest();
    let satisfies = |v0: Vertex| match order.aux_parent(v0) {
        Some((p, _)) => !forest.side_without(p, v0)[x],
        None => false,
    };
    let v0 = minimal
        .iter()
        .copied()
        .filter(|&v| satisfies(v))
        .min()
        .or_else(|| minimal.iter().copied().min())
        .expect("nonempty");
    let (start_parent, red_edge) = order
        .aux_parent(v0)
        .ok_or_else(|| SpecialPathError::HypothesisViolated(format!("{v0} is the root")))?;
    if !dec.is_red(red_edge) {
        return Err(SpecialPathError::HypothesisViolated(format!(
            "auxiliary parent edge {red_edge} of {v0} is blue"
        )));
    }

    let mut vertices = vec![v0];
    let mut steps = Vec::new();
    let mut cur = v0;
    while cur != x {
        let (nv, i, e) = next[cur].expect("walk to x exists");
        steps.push((i, e));
        vertices.push(nv);
        cur = nv;
    }
    steps.push((tree, edge));
    vertices.push(y);
    Ok(SpecialPath {
        vertices,
        steps,
        edge,
        start_parent,
        red_edge,
        start_index: i0,
    })
}

/// Recolors the blue edge `edge` red and the red edge `red` blue, rebuilding
/// the blue trees inside the blue in-reach of the tail of `edge`.
pub fn augment(
    dec: &Decomposition,
    edge: EdgeId,
    red: EdgeId,
) -> Result<Decomposition, SpecialPathError> {
    let (_, x, _) = blue_arc(dec, edge).ok_or(SpecialPathError::NotBlue(edge))?;
    if !dec.is_red(red) {
        return Err(SpecialPathError::NotRed(red));
    }
    let g = dec.graph();
    let (reach, _) = in_reach(dec, x);
    let (a, b) = g.endpoints(red);
    let v0 = match (reach[a], reach[b]) {
        (true, false) => a,
        (false, true) => b,
        _ => return Err(SpecialPathError::NotAugmentable { edge, red }),
    };
    let mut new_red: BTreeSet<EdgeId> = dec.red().clone();
    new_red.remove(&red);
    new_red.insert(edge);
    if let Some(cycle) = find_cycle(g, new_red.iter().copied()) {
        return Err(SpecialPathError::HypothesisViolated(format!(
            "red cycle {cycle:?}"
        )));
    }

    // contracted graph on D + o
    let mut local = vec![usize::MAX; g.n()];
    let mut count = 0;
    for v in 0..g.n() {
        if reach[v] {
            local[v] = count;
            count += 1;
        }
    }
    let o = count;
    let at = |v: Vertex| if reach[v] { local[v] } else { o };
    let k = dec.k();
    let mut cg = MultiGraph::new(count + 1);
    let mut origin = Vec::new();
    let mut seeds: Vec<Vec<EdgeId>> = vec![Vec::new(); k];
    for (i, t) in dec.blue().iter().enumerate() {
        for v in (0..g.n()).filter(|&v| reach[v]) {
            let (p, e) = t.parent(v).expect("the root has no walk to x");
            if e == edge {
                continue;
            }
            seeds[i].push(cg.add_edge(local[v], at(p)).expect("no loops"));
            origin.push(e);
        }
    }
    let new_edge = cg.add_edge(local[v0], o).expect("no loops");
    origin.push(red);
    let mut union = ForestUnion::new(&cg, k);
    for (i, s) in seeds.into_iter().enumerate() {
        union.seed(i, s);
    }
    union.insert(new_edge).map_err(|_| {
        SpecialPathError::HypothesisViolated("augmentation found no room".into())
    })?;

    let root = dec.root();
    let blue = union
        .forests()
        .into_iter()
        .enumerate()
        .map(|(i, f)| {
            let kept = dec
                .tree(i)
                .parents()
                .iter()
                .enumerate()
                .filter(|&(v, _)| !reach[v])
                .filter_map(|(_, p)| p.map(|(_, e)| e));
            let edges: Vec<EdgeId> = kept.chain(f.into_iter().map(|c| origin[c])).collect();
            OrientedTree::from_edges(g, edges, root)
                .map_err(|e| SpecialPathError::HypothesisViolated(e.to_string()))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(dec.with_parts(blue, new_red))
}

/// Applies `path`, checking its hypothesis before and its guarantees after.
pub fn apply_special_path(
    dec: &Decomposition,
    order: &LegalOrder,
    path: &SpecialPath,
) -> Result<Decomposition, SpecialPathError> {
    let forest = dec.red_forest();
    if forest.side_without(path.start_parent, path.start())[path.tail()] {
        return Err(SpecialPathError::HypothesisViolated(format!(
            "{} lies on the {}-side of its component without {}",
            path.tail(),
            path.start_parent,
            path.start()
        )));
    }
    let out = augment(dec, path.edge, path.red_edge)?;
    check_special_postconditions(dec, &out, order, path)?;
    Ok(out)
}

/// Verifies the four structural guarantees of an applied special path.
pub fn check_special_postconditions(
    before: &Decomposition,
    after: &Decomposition,
    order: &LegalOrder,
    path: &SpecialPath,
) -> Result<(), SpecialPathError> {
    let fail = |m: String| Err(SpecialPathError::Postcondition(m));
    let mut red = before.red().clone();
    red.remove(&path.red_edge);
    red.insert(path.edge);
    if &red != after.red() {
        return fail("red set is not F + xy - e0".into());
    }
    let v0 = path.start();
    if !after
        .blue()
        .iter()
        .any(|t| t.parent(v0) == Some((path.start_parent, path.red_edge)))
    {
        return fail(format!("({v0}, {}) is not blue", path.start_parent));
    }
    let union = |d: &Decomposition| -> BTreeSet<EdgeId> {
        d.blue().iter().flat_map(|t| t.edge_ids()).collect()
    };
    let mut expected = union(before);
    expected.remove(&path.edge);
    expected.insert(path.red_edge);
    if expected != union(after) {
        return fail("blue union changed beyond the swap".into());
    }
    for (i, (t0, t1)) in before.blue().iter().zip(after.blue()).enumerate() {
        for v in 0..before.graph().n() {
            if order.position(v).is_some_and(|p| p < path.start_index)
                && t0.parent(v) != t1.parent(v)
            {
                return fail(format!("tree {i} changed the out-edge of early vertex {v}"));
            }
        }
    }
    after
        .validate()
        .or_else(|v| fail(format!("invalid result: {v}")))
}
