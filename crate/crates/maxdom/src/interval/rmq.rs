//! Range-maximum segment tree used by the fast interval engine.

/// Max-tree over `(value, payload)` pairs; ties prefer the entry with the
/// smaller payload so queries are deterministic.
pub(crate) struct MaxTree {
    size: usize,
    nodes: Vec<Option<(i64, usize)>>,
}

fn better(a: Option<(i64, usize)>, b: Option<(i64, usize)>) -> Option<(i64, usize)> {
    match (a, b) {
        (None, x) => x,
        (x, None) => x,
        (Some((va, ja)), Some((vb, jb))) => {
            if vb > va || (vb == va && jb < ja) {
                Some((vb, jb))
            } else {
                Some((va, ja))
            }
        }
    }
}

impl MaxTree {
    pub fn new(len: usize) -> Self {
        let size = len.next_power_of_two().max(1);
        MaxTree {
            size,
            nodes: vec![None; 2 * size],
        }
    }

    pub fn from_values(values: &[Option<(i64, usize)>]) -> Self {
        let mut t = MaxTree::new(values.len());
        t.nodes[t.size..t.size + values.len()].copy_from_slice(values);
        for i in (1..t.size).rev() {
            t.nodes[i] = better(t.nodes[2 * i], t.nodes[2 * i + 1]);
        }
        t
    }

    pub fn set(&mut self, pos: usize, entry: (i64, usize)) {
        let mut i = pos + self.size;
        self.nodes[i] = better(self.nodes[i], Some(entry));
        while i > 1 {
            i /= 2;
            self.nodes[i] = better(self.nodes[2 * i], self.nodes[2 * i + 1]);
        }
    }

    /// Maximum over positions in `[lo, hi)`.
    pub fn query(&self, lo: usize, hi: usize) -> Option<(i64, usize)> {
        if lo >= hi {
            return None;
        }
        let mut best = None;
        let (mut l, mut r) = (lo + self.size, hi + self.size);
        while l < r {
            if l & 1 == 1 {
                best = better(best, self.nodes[l]);
                l += 1;
            }
            if r & 1 == 1 {
                r -= 1;
                best = better(best, self.nodes[r]);
            }
            l /= 2;
            r /= 2;
        }
        best
    }
}
