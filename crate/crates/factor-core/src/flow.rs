//! Dinic max-flow with per-arc lower bounds, used by the polynomial
//! feasibility route. All capacities are integers, so decisions are exact.

#[derive(Clone, Copy)]
struct Arc {
    to: usize,
    cap: i64,
    rev: usize,
}

pub(crate) struct FlowNetwork {
    adj: Vec<Vec<Arc>>,
    /// Net lower-bound excess per node, accumulated by `add_arc`.
    excess: Vec<i64>,
    /// (node, arc index, lower bound) for flow read-back.
    tracked: Vec<(usize, usize, i64)>,
}

impl FlowNetwork {
    pub fn new(nodes: usize) -> FlowNetwork {
        FlowNetwork {
            adj: vec![Vec::new(); nodes],
            excess: vec![0; nodes],
            tracked: Vec::new(),
        }
    }

    /// Adds an arc with flow bounds `[lower, upper]`; returns a handle for
    /// reading the realized flow back after `feasible()`.
    pub fn add_arc(&mut self, from: usize, to: usize, lower: i64, upper: i64) -> usize {
        debug_assert!(0 <= lower && lower <= upper);
        let fwd = self.adj[from].len();
        let bwd = self.adj[to].len();
        self.adj[from].push(Arc { to, cap: upper - lower, rev: bwd });
        self.adj[to].push(Arc { to: from, cap: 0, rev: fwd });
        self.excess[to] += lower;
        self.excess[from] -= lower;
        self.tracked.push((from, fwd, lower));
        self.tracked.len() - 1
    }

    /// Decides whether a feasible circulation respecting all bounds exists.
    /// `tie` is an unbounded return arc closing the circulation (sink → source
    /// of the underlying flow problem).
    pub fn feasible(&mut self, tie_from: usize, tie_to: usize) -> bool {
        self.add_arc(tie_from, tie_to, 0, i64::MAX / 4);
        let super_source = self.adj.len();
        let super_sink = super_source + 1;
        self.adj.push(Vec::new());
        self.adj.push(Vec::new());
        self.excess.push(0);
        self.excess.push(0);
        let mut demand = 0;
        for node in 0..super_source {
            let e = self.excess[node];
            if e > 0 {
                demand += e;
                self.raw_arc(super_source, node, e);
            } else if e < 0 {
                self.raw_arc(node, super_sink, -e);
            }
        }
        self.max_flow(super_source, super_sink) == demand
    }

    fn raw_arc(&mut self, from: usize, to: usize, cap: i64) {
        let fwd = self.adj[from].len();
        let bwd = self.adj[to].len();
        self.adj[from].push(Arc { to, cap, rev: bwd });
        self.adj[to].push(Arc { to: from, cap: 0, rev: fwd });
    }

    /// Realized flow on a tracked arc (lower bound included).
    pub fn flow(&self, handle: usize) -> i64 {
        let (node, idx, lower) = self.tracked[handle];
        let arc = self.adj[node][idx];
        // Residual on the reverse arc is exactly the pushed flow.
        self.adj[arc.to][arc.rev].cap + lower
    }

    fn max_flow(&mut self, s: usize, t: usize) -> i64 {
        let mut total = 0;
        loop {
            let level = self.bfs_levels(s);
            if level[t].is_none() {
                return total;
            }
            let mut iter = vec![0usize; self.adj.len()];
            loop {
                let pushed = self.dfs_push(s, t, i64::MAX / 4, &level, &mut iter);
                if pushed == 0 {
                    break;
                }
                total += pushed;
            }
        }
    }

    fn bfs_levels(&self, s: usize) -> Vec<Option<u32>> {
        let mut level = vec![None; self.adj.len()];
        level[s] = Some(0);
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            let lu = level[u].unwrap();
            for arc in &self.adj[u] {
                if arc.cap > 0 && level[arc.to].is_none() {
                    level[arc.to] = Some(lu + 1);
                    queue.push_back(arc.to);
                }
            }
        }
        level
    }

    fn dfs_push(
        &mut self,
        u: usize,
        t: usize,
        limit: i64,
        level: &[Option<u32>],
        iter: &mut [usize],
    ) -> i64 {
        if u == t {
            return limit;
        }
        while iter[u] < self.adj[u].len() {
            let Arc { to, cap, rev } = self.adj[u][iter[u]];
            if cap > 0 && level[to] == level[u].map(|l| l + 1) {
                let pushed = self.dfs_push(to, t, limit.min(cap), level, iter);
                if pushed > 0 {
                    self.adj[u][iter[u]].cap -= pushed;
                    self.adj[to][rev].cap += pushed;
                    return pushed;
                }
            }
            iter[u] += 1;
        }
        0
    }
}
