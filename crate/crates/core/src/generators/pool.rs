//! Open-connection ("stub") pool with uniform stub draws.

use crate::rng::RandomSource;

/// Per-vertex stub counts backed by a Fenwick tree so that a uniformly
/// random stub can be drawn and removed in O(log n).
#[derive(Debug, Clone)]
pub(crate) struct StubPool {
    remaining: Vec<usize>,
    tree: Vec<usize>,
    total: usize,
    distinct: usize,
}

impl StubPool {
    pub(crate) fn new(targets: &[usize]) -> Self {
        let n = targets.len();
        let mut tree = vec![0; n + 1];
        for j in 1..=n {
            tree[j] += targets[j - 1];
            let parent = j + (j & j.wrapping_neg());
            if parent <= n {
                tree[parent] += tree[j];
            }
        }
        Self {
            remaining: targets.to_vec(),
            tree,
            total: targets.iter().sum(),
            distinct: targets.iter().filter(|&&k| k > 0).count(),
        }
    }

    pub(crate) fn total(&self) -> usize {
        self.total
    }

    /// Number of vertices that still own at least one stub.
    pub(crate) fn distinct(&self) -> usize {
        self.distinct
    }

    pub(crate) fn remaining(&self, v: usize) -> usize {
        self.remaining[v]
    }

    /// Removes one stub owned by `v`.
    pub(crate) fn take(&mut self, v: usize) {
        assert!(self.remaining[v] > 0, "vertex {v} has no open stub");
        self.remaining[v] -= 1;
        if self.remaining[v] == 0 {
            self.distinct -= 1;
        }
        self.total -= 1;
        let mut j = v + 1;
        while j < self.tree.len() {
            self.tree[j] -= 1;
            j += j & j.wrapping_neg();
        }
    }

    /// Draws a stub uniformly from the pool, removes it, and returns its owner.
    pub(crate) fn draw(&mut self, rng: &mut RandomSource) -> usize {
        let v = self.find(rng.below(self.total));
        self.take(v);
        v
    }

    /// Draws uniformly among stubs not owned by `v`, removes it, and returns
    /// its owner. The caller must ensure such a stub exists.
    pub(crate) fn draw_excluding(&mut self, v: usize, rng: &mut RandomSource) -> usize {
        let own = self.remaining[v];
        let mut r = rng.below(self.total - own);
        if r >= self.prefix(v) {
            r += own;
        }
        let w = self.find(r);
        self.take(w);
        w
    }

    /// Stubs owned by vertices `0..v`.
    fn prefix(&self, v: usize) -> usize {
        let mut sum = 0;
        let mut j = v;
        while j > 0 {
            sum += self.tree[j];
            j &= j - 1;
        }
        sum
    }

    /// Drops every remaining stub and returns how many there were.
    pub(crate) fn clear(&mut self) -> usize {
        let dropped = self.total;
        self.remaining.iter_mut().for_each(|k| *k = 0);
        self.tree.iter_mut().for_each(|k| *k = 0);
        self.total = 0;
        self.distinct = 0;
        dropped
    }

    /// Vertex owning the stub at 0-based rank `r` in vertex order.
    fn find(&self, mut r: usize) -> usize {
        let n = self.remaining.len();
        let mut pos = 0;
        let mut step = n.next_power_of_two();
        while step > 0 {
            let next = pos + step;
            if next <= n && self.tree[next] <= r {
                pos = next;
                r -= self.tree[next];
            }
            step >>= 1;
        }
        pos
    }
}
