//! Dinic max-flow on integer capacities.

use std::collections::VecDeque;

pub(crate) const INF: i64 = i64::MAX / 4;

#[derive(Clone, Debug)]
struct Arc {
    to: usize,
    cap: i64,
}

#[derive(Clone, Debug)]
pub(crate) struct FlowNetwork {
    arcs: Vec<Arc>,
    out: Vec<Vec<usize>>,
    level: Vec<i32>,
    next: Vec<usize>,
}

impl FlowNetwork {
    pub(crate) fn new(n: usize) -> Self {
        FlowNetwork {
            arcs: Vec::new(),
            out: vec![Vec::new(); n],
            level: vec![0; n],
            next: vec![0; n],
        }
    }

    pub(crate) fn add_arc(&mut self, u: usize, v: usize, cap: i64) {
        self.out[u].push(self.arcs.len());
        self.arcs.push(Arc { to: v, cap });
        self.out[v].push(self.arcs.len());
        self.arcs.push(Arc { to: u, cap: 0 });
    }

    /// Undirected edge of capacity `cap` in both directions.
    pub(crate) fn add_edge(&mut self, u: usize, v: usize, cap: i64) {
        self.out[u].push(self.arcs.len());
        self.arcs.push(Arc { to: v, cap });
        self.out[v].push(self.arcs.len());
        self.arcs.push(Arc { to: u, cap });
    }

    fn bfs(&mut self, s: usize, t: usize) -> bool {
        self.level.iter_mut().for_each(|l| *l = -1);
        self.level[s] = 0;
        let mut q = VecDeque::from([s]);
        while let Some(v) = q.pop_front() {
            for &a in &self.out[v] {
                let Arc { to, cap } = self.arcs[a];
                if cap > 0 && self.level[to] < 0 {
                    self.level[to] = self.level[v] + 1;
                    q.push_back(to);
                }
            }
        }
        self.level[t] >= 0
    }

    fn dfs(&mut self, v: usize, t: usize, pushed: i64) -> i64 {
        if v == t {
            return pushed;
        }
        while self.next[v] < self.out[v].len() {
            let a = self.out[v][self.next[v]];
            let Arc { to, cap } = self.arcs[a];
            if cap > 0 && self.level[to] == self.level[v] + 1 {
                let got = self.dfs(to, t, pushed.min(cap));
                if got > 0 {
                    self.arcs[a].cap -= got;
                    self.arcs[a ^ 1].cap += got;
                    return got;
                }
            }
            self.next[v] += 1;
        }
        0
    }

    pub(crate) fn max_flow(&mut self, s: usize, t: usize) -> i64 {
        let mut total = 0;
        while self.bfs(s, t) {
            self.next.iter_mut().for_each(|i| *i = 0);
            loop {
                let f = self.dfs(s, t, INF);
                if f == 0 {
                    break;
                }
                total += f;
            }
        }
        total
    }

    /// Vertices reachable from `s` in the residual network (source side of a
    /// minimum cut once `max_flow` has run).
    pub(crate) fn source_side(&self, s: usize) -> Vec<bool> {
        let mut seen = vec![false; self.out.len()];
        seen[s] = true;
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            for &a in &self.out[v] {
                let Arc { to, cap } = self.arcs[a];
                if cap > 0 && !seen[to] {
                    seen[to] = true;
                    stack.push(to);
                }
            }
        }
        seen
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_network() {
        let mut f = FlowNetwork::new(4);
        f.add_arc(0, 1, 3);
        f.add_arc(0, 2, 2);
        f.add_arc(1, 2, 1);
        f.add_arc(1, 3, 2);
        f.add_arc(2, 3, 3);
        assert_eq!(f.max_flow(0, 3), 5);
        let side = f.source_side(0);
        assert!(side[0] && !side[3]);
    }

    #[test]
    fn undirected_cycle() {
        let mut f = FlowNetwork::new(4);
        for i in 0..4 {
            f.add_edge(i, (i + 1) % 4, 1);
        }
        assert_eq!(f.max_flow(0, 2), 2);
    }
}
