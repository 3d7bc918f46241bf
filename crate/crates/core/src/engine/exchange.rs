//! Single-edge exchanges between a blue tree and the red forest.

use thiserror::Error;

use crate::graph::{Decomposition, EdgeId, OrientedTree, RedForest, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExchangeError {
    #[error("vertex {0} is the root and has no parent edge")]
    AtRoot(Vertex),
    #[error("edge {0} is not red")]
    NotRed(EdgeId),
    #[error("edge {edge} cannot be exchanged with the parent edge of {u}")]
    NotExchangeable { u: Vertex, edge: EdgeId },
    #[error("vertices {0} and {1} are not in one red component")]
    DifferentComponents(Vertex, Vertex),
    #[error("{y} is a descendant of {x}")]
    Descendant { x: Vertex, y: Vertex },
}

/// True iff exactly one endpoint of `e` is a descendant of `u`.
pub fn can_exchange(
    t: &OrientedTree,
    u: Vertex,
    e: (Vertex, Vertex),
) -> Result<bool, ExchangeError> {
    if t.parent(u).is_none() {
        return Err(ExchangeError::AtRoot(u));
    }
    Ok(t.descends(e.0, u) != t.descends(e.1, u))
}

/// Swaps the parent edge of `u` in tree `tree` with the red edge `e`,
/// reversing the tree path from the inner endpoint of `e` up to `u`.
pub fn perform_exchange(
    dec: &Decomposition,
    tree: usize,
    u: Vertex,
    e: EdgeId,
) -> Result<Decomposition, ExchangeError> {
    if !dec.is_red(e) {
        return Err(ExchangeError::NotRed(e));
    }
    let t = dec.tree(tree);
    let (up, up_edge) = t.parent(u).ok_or(ExchangeError::AtRoot(u))?;
    // the freed tree edge must not close a red cycle in F - e
    let forest = dec.red_forest();
    if forest.component_index(u) == forest.component_index(up)
        && !forest.path_edges(u, up).is_ok_and(|p| p.contains(&e))
    {
        return Err(ExchangeError::NotExchangeable { u, edge: e });
    }
    let (a, b) = dec.graph().endpoints(e);
    let (v, w) = match (t.descends(a, u), t.descends(b, u)) {
        (true, false) => (a, b),
        (false, true) => (b, a),
        _ => return Err(ExchangeError::NotExchangeable { u, edge: e }),
    };
    let mut parent = t.parents().to_vec();
    // walk v -> u, handing each vertex's old parent edge down the path
    let mut prev = (w, e);
    let mut cur = v;
    loop {
        let old = t.parent(cur).expect("non-root on the path");
        parent[cur] = Some(prev);
        if cur == u {
            break;
        }
        prev = (cur, old.1);
        cur = old.0;
    }
    let mut blue = dec.blue().to_vec();
    blue[tree] = OrientedTree::from_parents(t.root(), parent);
    let mut red = dec.red().clone();
    red.remove(&e);
    red.insert(up_edge);
    Ok(dec.with_parts(blue, red))
}

/// An edge of the red path `P_F(x, y)`: `index` counts from `x`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PathEdge {
    pub index: usize,
    pub from: Vertex,
    pub to: Vertex,
    pub edge: EdgeId,
}

/// Outcome of comparing two same-tree children generated at `x` and `y`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PairCase {
    /// `x`'s edge can take `first`, `y`'s edge can take `second`, with
    /// `first` strictly closer to `x`.
    One { first: PathEdge, second: PathEdge },
    /// `x` lies below `y` and its edge can take `edge`.
    Two { edge: PathEdge },
    /// `x` and `y` are incomparable and both can take `edge`.
    Three { edge: PathEdge },
}

impl PairCase {
    pub fn number(&self) -> u8 {
        match self {
            PairCase::One { .. } => 1,
            PairCase::Two { .. } => 2,
            PairCase::Three { .. } => 3,
        }
    }
}

fn red_path(
    forest: &RedForest,
    x: Vertex,
    y: Vertex,
) -> Result<(Vec<Vertex>, Vec<EdgeId>), ExchangeError> {
    if forest.component_index(x) != forest.component_index(y) {
        return Err(ExchangeError::DifferentComponents(x, y));
    }
    let verts = forest.path(x, y).expect("same component");
    let edges = forest.path_edges(x, y).expect("same component");
    Ok((verts, edges))
}

/// Classifies the pair `(x, y)` for tree `t` along the red path from `x` to `y`.
pub fn classify_pair(
    t: &OrientedTree,
    forest: &RedForest,
    x: Vertex,
    y: Vertex,
) -> Result<PairCase, ExchangeError> {
    for v in [x, y] {
        if t.parent(v).is_none() {
            return Err(ExchangeError::AtRoot(v));
        }
    }
    if t.descends(y, x) {
        return Err(ExchangeError::Descendant { x, y });
    }
    let (p, pe) = red_path(forest, x, y)?;
    let at = |i: usize| PathEdge {
        index: i,
        from: p[i],
        to: p[i + 1],
        edge: pe[i],
    };
    let under_x: Vec<bool> = p.iter().map(|&v| t.descends(v, x)).collect();
    let under_y: Vec<bool> = p.iter().map(|&v| t.descends(v, y)).collect();
    let x_ok = |i: usize| under_x[i] != under_x[i + 1];
    let y_ok = |i: usize| under_y[i] != under_y[i + 1];
    let edges = 0..pe.len();

    let case = match edges.clone().rev().find(|&i| y_ok(i)) {
        None => {
            let i = edges.rev().find(|&i| x_ok(i)).expect("some edge leaves x's subtree");
            PairCase::Two { edge: at(i) }
        }
        Some(j) => {
            // x on the tree path from p[j'] to y means p[j'] below x and x below y
            let x_below_y = t.descends(x, y);
            let via_x = (j + 1..p.len())
                .rev()
                .find(|&jj| x_below_y && under_x[jj]);
            if let Some(jj) = via_x {
                PairCase::Two { edge: at(jj) }
            } else {
                let i = edges.clone().find(|&i| x_ok(i)).expect("some edge leaves x's subtree");
                match i.cmp(&j) {
                    std::cmp::Ordering::Less => PairCase::One {
                        first: at(i),
                        second: at(j),
                    },
                    std::cmp::Ordering::Equal if x_below_y => PairCase::Two { edge: at(i) },
                    std::cmp::Ordering::Equal => PairCase::Three { edge: at(i) },
                    std::cmp::Ordering::Greater => unreachable!("case analysis is exhaustive"),
                }
            }
        }
    };
    debug_assert!(
        case_holds(t, forest, x, y, &case),
        "classification {case:?} fails its side conditions"
    );
    Ok(case)
}

/// `x ∈ P^T(a, b)`: `x` lies on the tree walk from `a` up to its ancestor `b`.
fn on_walk(t: &OrientedTree, a: Vertex, b: Vertex, x: Vertex) -> bool {
    t.descends(a, x) && t.descends(x, b)
}

fn walk_edges(t: &OrientedTree, mut a: Vertex, b: Vertex) -> Vec<EdgeId> {
    let mut out = Vec::new();
    while a != b {
        let (p, e) = t.parent(a).expect("b is an ancestor of a");
        out.push(e);
        a = p;
    }
    out
}

fn disjoint(a: &[EdgeId], b: &[EdgeId]) -> bool {
    a.iter().all(|e| !b.contains(e))
}

/// Checks every side condition of `case` directly from its definition.
pub fn case_holds(
    t: &OrientedTree,
    forest: &RedForest,
    x: Vertex,
    y: Vertex,
    case: &PairCase,
) -> bool {
    let Ok((p, pe)) = red_path(forest, x, y) else {
        return false;
    };
    let (Some((xp, _)), Some((yp, _))) = (t.parent(x), t.parent(y)) else {
        return false;
    };
    let exch = |u: Vertex, e: &PathEdge| {
        e.index < pe.len()
            && (e.from, e.to, e.edge) == (p[e.index], p[e.index + 1], pe[e.index])
            && t.descends(e.from, u) != t.descends(e.to, u)
    };
    let x_side = |upto: usize| {
        (0..=upto).all(|a| t.descends(p[a], x) && !on_walk(t, p[a], x, y))
    };
    let y_side = |from: usize| {
        (from..p.len()).all(|a| t.descends(p[a], y) && !on_walk(t, p[a], y, x))
    };
    let apart = |a: Vertex, b: Vertex| {
        t.descends(a, xp)
            && t.descends(b, yp)
            && disjoint(&walk_edges(t, a, xp), &walk_edges(t, b, yp))
    };
    match case {
        PairCase::One { first, second } => {
            first.index < second.index
                && exch(x, first)
                && exch(y, second)
                && x_side(first.index)
                && y_side(second.index + 1)
                && apart(first.from, second.to)
        }
        PairCase::Two { edge } => {
            t.descends(x, y)
                && exch(x, edge)
                && y_side(edge.index + 1)
                && t.descends(edge.from, x)
                && apart(edge.from, edge.to)
        }
        PairCase::Three { edge } => {
            !t.descends(x, y)
                && !t.descends(y, x)
                && exch(x, edge)
                && exch(y, edge)
                && x_side(edge.index)
                && y_side(edge.index + 1)
                && apart(edge.from, edge.to)
        }
    }
}
