use std::cell::Cell;

/// Query-access view of a simple graph: the consumer sees only n and a
/// neighbors-of function, and every call is counted. Local algorithms are
/// graded on this counter, so they must route all adjacency probes
/// through here.
pub struct LocalGraphOracle {
    n: usize,
    neighbors_fn: Box<dyn Fn(u32) -> Vec<u32>>,
    queries: Cell<u64>,
}

impl LocalGraphOracle {
    pub fn new(n: usize, neighbors_fn: Box<dyn Fn(u32) -> Vec<u32>>) -> LocalGraphOracle {
        LocalGraphOracle { n, neighbors_fn, queries: Cell::new(0) }
    }

    pub fn from_graph(g: &crate::graph::Graph) -> LocalGraphOracle {
        let adj = g.adjacency();
        let n = g.n();
        LocalGraphOracle::new(
            n,
            Box::new(move |v| adj[v as usize - 1].clone()),
        )
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// One call, one tick, regardless of the answer's size.
    pub fn neighbors(&self, v: u32) -> Vec<u32> {
        assert!(v >= 1 && v as usize <= self.n, "vertex {v} out of range 1..={}", self.n);
        self.queries.set(self.queries.get() + 1);
        (self.neighbors_fn)(v)
    }

    pub fn query_count(&self) -> u64 {
        self.queries.get()
    }

    pub fn reset_queries(&self) {
        self.queries.set(0);
    }
}
