//! Naive generators: parent arrays by backtracking over per-vertex domains,
//! and products of multiset permutations for child orders.

use crate::forest::Vertex;

/// Lexicographic stream of acyclic parent arrays. Vertex `v` takes its
/// parent from `domains[v - 1]` (ascending; 0 means root). With
/// `root_count = Some(k)` exactly `k` vertices are roots.
pub(crate) struct ParentArrays {
    domains: Vec<Vec<Vertex>>,
    root_count: Option<usize>,
    parent: Vec<Vertex>,
    next: Vec<usize>,
    depth: usize,
    started: bool,
    done: bool,
}

impl ParentArrays {
    pub fn new(domains: Vec<Vec<Vertex>>, root_count: Option<usize>) -> Self {
        let n = domains.len();
        Self {
            done: n == 0,
            domains,
            root_count,
            parent: vec![0; n],
            next: vec![0; n],
            depth: 0,
            started: false,
        }
    }

    /// Size of the raw search space (product of domain sizes).
    pub fn candidates(domains: &[Vec<Vertex>]) -> u128 {
        domains
            .iter()
            .fold(1u128, |acc, d| acc.saturating_mul(d.len() as u128))
    }

    fn accepts(&self, d: usize, p: Vertex) -> bool {
        let n = self.domains.len();
        if let Some(k) = self.root_count {
            let zeros = self.parent[..d].iter().filter(|&&q| q == 0).count() + usize::from(p == 0);
            if zeros > k || zeros + (n - d - 1) < k {
                return false;
            }
        }
        // walk up through already assigned vertices looking for v itself
        let v = d + 1;
        let mut q = p;
        while q != 0 && q <= d + 1 {
            if q == v {
                return false;
            }
            q = self.parent[q - 1];
        }
        true
    }
}

impl Iterator for ParentArrays {
    type Item = Vec<Vertex>;

    fn next(&mut self) -> Option<Vec<Vertex>> {
        if self.done {
            return None;
        }
        let n = self.domains.len();
        if self.started {
            self.depth = n - 1;
        } else {
            self.started = true;
        }
        loop {
            let d = self.depth;
            let mut placed = false;
            while self.next[d] < self.domains[d].len() {
                let p = self.domains[d][self.next[d]];
                self.next[d] += 1;
                if self.accepts(d, p) {
                    self.parent[d] = p;
                    placed = true;
                    break;
                }
            }
            if placed {
                if d + 1 == n {
                    return Some(self.parent.clone());
                }
                self.depth = d + 1;
                self.next[d + 1] = 0;
            } else if d == 0 {
                self.done = true;
                return None;
            } else {
                self.depth = d - 1;
            }
        }
    }
}

/// Advances `xs` to the next lexicographic permutation of its multiset.
/// On the last one it resets `xs` to sorted order and returns false.
pub(crate) fn next_permutation<T: Ord>(xs: &mut [T]) -> bool {
    if xs.len() < 2 {
        return false;
    }
    let mut i = xs.len() - 1;
    while i > 0 && xs[i - 1] >= xs[i] {
        i -= 1;
    }
    if i == 0 {
        xs.reverse();
        return false;
    }
    let mut j = xs.len() - 1;
    while xs[j] <= xs[i - 1] {
        j -= 1;
    }
    xs.swap(i - 1, j);
    xs[i..].reverse();
    true
}

/// All combinations of per-slot multiset permutations, the last slot
/// varying fastest. Each slot must start sorted.
pub(crate) struct Arrangements {
    current: Vec<Vec<usize>>,
    started: bool,
    done: bool,
}

impl Arrangements {
    pub fn new(slots: Vec<Vec<usize>>) -> Self {
        Self {
            current: slots,
            started: false,
            done: false,
        }
    }
}

impl Iterator for Arrangements {
    type Item = Vec<Vec<usize>>;

    fn next(&mut self) -> Option<Vec<Vec<usize>>> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(self.current.clone());
        }
        for slot in self.current.iter_mut().rev() {
            if next_permutation(slot) {
                return Some(self.current.clone());
            }
        }
        self.done = true;
        None
    }
}

/// Vectors `a` of length `mins.len()` with `a[i] >= mins[i]` and
/// `sum a = total`, in lexicographic order.
pub(crate) fn distributions(mins: &[usize], total: usize) -> Vec<Vec<usize>> {
    fn go(mins: &[usize], i: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i == mins.len() {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let rest: usize = mins[i + 1..].iter().sum();
        let mut a = mins[i];
        while a + rest <= left {
            cur.push(a);
            go(mins, i + 1, left - a, cur, out);
            cur.pop();
            a += 1;
        }
    }
    let mut out = Vec::new();
    go(mins, 0, total, &mut Vec::new(), &mut out);
    out
}
