//! Small integral max-flow solver (Dinic) for the sparsity certifier.

pub const INF: i64 = i64::MAX / 4;

#[derive(Clone)]
pub struct FlowNetwork {
    // arcs are stored in pairs: arc 2k and its reverse 2k+1
    to: Vec<u32>,
    cap: Vec<i64>,
    adj: Vec<Vec<u32>>,
    level: Vec<i32>,
    iter: Vec<usize>,
}

impl FlowNetwork {
    pub fn new(nodes: usize) -> Self {
        FlowNetwork {
            to: Vec::new(),
            cap: Vec::new(),
            adj: vec![Vec::new(); nodes],
            level: vec![0; nodes],
            iter: vec![0; nodes],
        }
    }

    /// Add a directed arc and its zero-capacity reverse; returns the arc id.
    pub fn add_arc(&mut self, from: usize, to: usize, cap: i64) -> usize {
        let id = self.to.len();
        self.to.push(to as u32);
        self.cap.push(cap);
        self.to.push(from as u32);
        self.cap.push(0);
        self.adj[from].push(id as u32);
        self.adj[to].push(id as u32 + 1);
        id
    }

    /// Snapshot of the current capacities, for cheap resets.
    pub fn capacities(&self) -> Vec<i64> {
        self.cap.clone()
    }

    pub fn restore(&mut self, caps: &[i64]) {
        self.cap.copy_from_slice(caps);
    }

    /// Point arc `id` at a new head (used to re-aim preallocated arcs).
    pub fn retarget(&mut self, id: usize, from: usize, to: usize) {
        let old_to = self.to[id] as usize;
        let old_from = self.to[id + 1] as usize;
        if old_to == to && old_from == from {
            return;
        }
        self.adj[old_from].retain(|&a| a != id as u32);
        self.adj[old_to].retain(|&a| a != id as u32 + 1);
        self.to[id] = to as u32;
        self.to[id + 1] = from as u32;
        self.adj[from].push(id as u32);
        self.adj[to].push(id as u32 + 1);
    }

    pub fn set_cap(&mut self, id: usize, cap: i64) {
        self.cap[id] = cap;
        self.cap[id + 1] = 0;
    }

    fn bfs(&mut self, s: usize, t: usize) -> bool {
        self.level.fill(-1);
        let mut queue = std::collections::VecDeque::new();
        self.level[s] = 0;
        queue.push_back(s);
        while let Some(v) = queue.pop_front() {
            for &a in &self.adj[v] {
                let a = a as usize;
                let w = self.to[a] as usize;
                if self.cap[a] > 0 && self.level[w] < 0 {
                    self.level[w] = self.level[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        self.level[t] >= 0
    }

    fn dfs(&mut self, v: usize, t: usize, f: i64) -> i64 {
        if v == t {
            return f;
        }
        while self.iter[v] < self.adj[v].len() {
            let a = self.adj[v][self.iter[v]] as usize;
            let w = self.to[a] as usize;
            if self.cap[a] > 0 && self.level[w] == self.level[v] + 1 {
                let d = self.dfs(w, t, f.min(self.cap[a]));
                if d > 0 {
                    self.cap[a] -= d;
                    self.cap[a ^ 1] += d;
                    return d;
                }
            }
            self.iter[v] += 1;
        }
        0
    }

    /// Max flow from `s` to `t`, stopping early once `limit` is reached.
    /// The return value is exact whenever it is below `limit`.
    pub fn max_flow(&mut self, s: usize, t: usize, limit: i64) -> i64 {
        let mut flow = 0;
        while flow < limit && self.bfs(s, t) {
            self.iter.fill(0);
            loop {
                let f = self.dfs(s, t, INF);
                if f == 0 {
                    break;
                }
                flow += f;
                if flow >= limit {
                    break;
                }
            }
        }
        flow
    }

    /// Nodes reachable from `s` in the residual network (the source side of
    /// a minimum cut once `max_flow` has run to completion).
    pub fn source_side(&self, s: usize) -> Vec<bool> {
        let mut seen = vec![false; self.adj.len()];
        let mut stack = vec![s];
        seen[s] = true;
        while let Some(v) = stack.pop() {
            for &a in &self.adj[v] {
                let a = a as usize;
                let w = self.to[a] as usize;
                if self.cap[a] > 0 && !seen[w] {
                    seen[w] = true;
                    stack.push(w);
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
    fn small_max_flow() {
        // s -> a -> t and s -> b -> t with a bottleneck a -> b
        let mut net = FlowNetwork::new(4);
        net.add_arc(0, 1, 3);
        net.add_arc(0, 2, 2);
        net.add_arc(1, 2, 1);
        net.add_arc(1, 3, 2);
        net.add_arc(2, 3, 3);
        assert_eq!(net.max_flow(0, 3, INF), 5);
    }

    #[test]
    fn limit_stops_early() {
        let mut net = FlowNetwork::new(2);
        net.add_arc(0, 1, 100);
        assert!(net.max_flow(0, 1, 5) >= 5);
    }

    #[test]
    fn source_side_of_unit_cut() {
        let mut net = FlowNetwork::new(3);
        net.add_arc(0, 1, 10);
        net.add_arc(1, 2, 1);
        assert_eq!(net.max_flow(0, 2, INF), 1);
        let side = net.source_side(0);
        assert_eq!(side, vec![true, true, false]);
    }
}
