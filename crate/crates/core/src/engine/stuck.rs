//! Density certificate and structural report for a state with no improving move.

use std::collections::BTreeSet;
use std::fmt;

use super::order::{exploration_with, minimal_order_with, LegalOrder};
use crate::density::{chi, is_small};
use crate::graph::{Decomposition, Vertex};
use crate::rational::Rational;

/// Small-children counts of one component, per blue tree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChildTally {
    pub component: Vertex,
    pub position: usize,
    pub edge_count: usize,
    /// Distinct small children generated by each tree.
    pub small: Vec<usize>,
    /// Distinct edgeless children generated by each tree.
    pub isolated: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StructureViolation {
    /// A child whose size plus its parent's is below `d`.
    LightChild { parent: Vertex, child: Vertex },
    /// A small component with a small child.
    SmallHasSmallChild { parent: Vertex, child: Vertex },
    /// The root component has a small child.
    RootHasSmallChild { child: Vertex },
    /// More than one edgeless child from one tree.
    IsolatedChildren { component: Vertex, tree: usize, count: usize },
    /// More than two small children from one tree.
    SmallChildren { component: Vertex, tree: usize, count: usize },
}

impl fmt::Display for StructureViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StructureViolation::LightChild { parent, child } => {
                write!(f, "child {child} of {parent} is too light")
            }
            StructureViolation::SmallHasSmallChild { parent, child } => {
                write!(f, "small component {parent} has small child {child}")
            }
            StructureViolation::RootHasSmallChild { child } => {
                write!(f, "root component has small child {child}")
            }
            StructureViolation::IsolatedChildren { component, tree, count } => {
                write!(f, "component {component} has {count} edgeless children in tree {tree}")
            }
            StructureViolation::SmallChildren { component, tree, count } => {
                write!(f, "component {component} has {count} small children in tree {tree}")
            }
        }
    }
}

/// Evidence that the exploration subgraph of a stuck state is too dense.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DensityCertificate {
    pub k: usize,
    pub d: usize,
    pub root: Vertex,
    /// Exploration subgraph vertices, sorted.
    pub vertices: Vec<Vertex>,
    pub red_edges: usize,
    /// `red_edges / (|vertices| - 1)`.
    pub density: Rational,
    pub threshold: Rational,
    pub decomposition: Decomposition,
    /// Original vertex id of each vertex of `decomposition`'s graph.
    pub vertex_map: Vec<Vertex>,
    pub tallies: Vec<ChildTally>,
    pub violations: Vec<StructureViolation>,
}

impl DensityCertificate {
    /// Builds the certificate for `dec`, whose root lies in the oversized
    /// component under study.
    pub fn new(dec: &Decomposition, k: usize, d: usize) -> Self {
        let forest = dec.red_forest();
        let r = dec.root();
        let expl = exploration_with(dec, &forest, r);
        let order = minimal_order_with(dec, &forest, &expl);
        let (tallies, violations) = structure(dec, &order, k, d);
        let mut vertices = expl.vertices.clone();
        vertices.sort_unstable();
        let red_edges = expl.red_edges.len();
        let density = if vertices.len() >= 2 {
            Rational::new(red_edges as i64, vertices.len() as i64 - 1)
        } else {
            Rational::zero()
        };
        DensityCertificate {
            k,
            d,
            root: r,
            vertices,
            red_edges,
            density,
            threshold: chi(k, d).unwrap_or(Rational::zero()),
            decomposition: dec.clone(),
            vertex_map: (0..dec.graph().n()).collect(),
            tallies,
            violations,
        }
    }

    pub fn exceeds_threshold(&self) -> bool {
        self.density > self.threshold
    }

    /// Vertices of the certificate in the caller's numbering.
    pub fn original_vertices(&self) -> Vec<Vertex> {
        let mut v: Vec<Vertex> = self.vertices.iter().map(|&v| self.vertex_map[v]).collect();
        v.sort_unstable();
        v
    }
}

/// Child tallies per component plus every violated structural fact.
pub fn structure(
    dec: &Decomposition,
    order: &LegalOrder,
    k: usize,
    d: usize,
) -> (Vec<ChildTally>, Vec<StructureViolation>) {
    let sizes = order.sizes();
    let small = |p: usize| is_small(sizes[p], k, d);
    let mut tallies = Vec::new();
    let mut bad = Vec::new();
    for pos in 0..order.len() {
        let comp = order.components[pos].id;
        let children = order.children(dec, pos);
        let mut per_tree: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); k];
        let mut seen = BTreeSet::new();
        for c in &children {
            let child = order.components[c.child].id;
            if seen.insert(c.child) {
                if sizes[pos] + sizes[c.child] < d {
                    bad.push(StructureViolation::LightChild { parent: comp, child });
                }
                if small(c.child) && small(pos) {
                    bad.push(StructureViolation::SmallHasSmallChild { parent: comp, child });
                }
                if small(c.child) && pos == 0 {
                    bad.push(StructureViolation::RootHasSmallChild { child });
                }
            }
            if small(c.child) {
                per_tree[c.tree].insert(c.child);
            }
        }
        let small_counts: Vec<usize> = per_tree.iter().map(|s| s.len()).collect();
        let isolated: Vec<usize> = per_tree
            .iter()
            .map(|s| s.iter().filter(|&&c| sizes[c] == 0).count())
            .collect();
        for t in 0..k {
            if isolated[t] > 1 {
                bad.push(StructureViolation::IsolatedChildren {
                    component: comp,
                    tree: t,
                    count: isolated[t],
                });
            }
            if small_counts[t] > 2 {
                bad.push(StructureViolation::SmallChildren {
                    component: comp,
                    tree: t,
                    count: small_counts[t],
                });
            }
        }
        tallies.push(ChildTally {
            component: comp,
            position: pos,
            edge_count: sizes[pos],
            small: small_counts,
            isolated,
        });
    }
    (tallies, bad)
}
