//! Blocking-flow max-flow on small integer-capacity networks.
//!
//! Almost every capacity here is 1; the only larger ones are the
//! "infinite" arcs that glue a vertex set to a super source or sink.

use std::collections::VecDeque;

pub(crate) const INF: u32 = u32::MAX / 4;

pub(crate) struct FlowNetwork {
    head: Vec<usize>,
    cap: Vec<u32>,
    adj: Vec<Vec<usize>>,
    level: Vec<u32>,
    iter: Vec<usize>,
}

impl FlowNetwork {
    pub(crate) fn new(nodes: usize) -> Self {
        Self {
            head: Vec::new(),
            cap: Vec::new(),
            adj: vec![Vec::new(); nodes],
            level: vec![0; nodes],
            iter: vec![0; nodes],
        }
    }

    pub(crate) fn with_capacity(nodes: usize, arcs: usize) -> Self {
        let mut net = Self::new(nodes);
        net.head.reserve(2 * arcs);
        net.cap.reserve(2 * arcs);
        net
    }

    pub(crate) fn nodes(&self) -> usize {
        self.adj.len()
    }

    pub(crate) fn add_arc(&mut self, from: usize, to: usize, cap: u32) {
        let id = self.head.len();
        self.head.push(to);
        self.cap.push(cap);
        self.adj[from].push(id);
        self.head.push(from);
        self.cap.push(0);
        self.adj[to].push(id + 1);
    }

    /// Current residual capacities, for [`FlowNetwork::restore`].
    pub(crate) fn snapshot(&self) -> Vec<u32> {
        self.cap.clone()
    }

    pub(crate) fn restore(&mut self, caps: &[u32]) {
        self.cap.copy_from_slice(caps);
    }

    fn bfs(&mut self, s: usize, t: usize) -> bool {
        self.level.iter_mut().for_each(|l| *l = u32::MAX);
        self.level[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &a in &self.adj[u] {
                let w = self.head[a];
                if self.cap[a] > 0 && self.level[w] == u32::MAX {
                    self.level[w] = self.level[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        self.level[t] != u32::MAX
    }

    fn dfs(&mut self, u: usize, t: usize, pushed: u32) -> u32 {
        if u == t {
            return pushed;
        }
        while self.iter[u] < self.adj[u].len() {
            let a = self.adj[u][self.iter[u]];
            let w = self.head[a];
            if self.cap[a] > 0 && self.level[w] == self.level[u] + 1 {
                let got = self.dfs(w, t, pushed.min(self.cap[a]));
                if got > 0 {
                    self.cap[a] -= got;
                    self.cap[a ^ 1] += got;
                    return got;
                }
            }
            self.iter[u] += 1;
        }
        0
    }

    /// Pushes flow from `s` to `t` until it is maximum or reaches `limit`.
    /// Residual capacities stay in the network for the side queries below.
    pub(crate) fn max_flow(&mut self, s: usize, t: usize, limit: u32) -> u32 {
        let mut flow = 0;
        while flow < limit && self.bfs(s, t) {
            self.iter.iter_mut().for_each(|i| *i = 0);
            loop {
                let got = self.dfs(s, t, limit - flow);
                if got == 0 {
                    break;
                }
                flow += got;
                if flow >= limit {
                    break;
                }
            }
        }
        flow
    }

    /// Nodes reachable from `s` in the residual network.
    pub(crate) fn residual_from(&self, s: usize) -> Vec<bool> {
        let mut seen = vec![false; self.nodes()];
        seen[s] = true;
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            for &a in &self.adj[u] {
                let w = self.head[a];
                if self.cap[a] > 0 && !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen
    }

    /// Nodes that reach `t` in the residual network.
    pub(crate) fn residual_to(&self, t: usize) -> Vec<bool> {
        let mut seen = vec![false; self.nodes()];
        seen[t] = true;
        let mut stack = vec![t];
        while let Some(u) = stack.pop() {
            // arc a = (w -> u) has residual cap[a]; a^1 sits in adj[u]
            for &b in &self.adj[u] {
                let a = b ^ 1;
                let w = self.head[b];
                if self.cap[a] > 0 && !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen
    }
}
