//! Edmonds' augmenting-path algorithm with odd-cycle shrinking.
//!
//! Blossoms are never materialized: `base[v]` names the base of the
//! outermost contracted blossom containing `v`, and the alternating forest
//! is recorded through `parent` (for outer-to-inner tree edges) and the
//! current `mate` array. Runs in O(V^3).

use std::collections::VecDeque;

pub(crate) const UNMATCHED: usize = usize::MAX;

/// Minimal neighborhood interface so the same search runs over adjacency
/// lists and over bitmask-restricted induced subgraphs.
pub(crate) trait Adjacency {
    /// Size of the id space; ids are `0..slots()`.
    fn slots(&self) -> usize;
    fn is_live(&self, v: usize) -> bool;
    /// Live neighbors of a live vertex.
    fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_;
}

struct Search<'a, A: Adjacency> {
    graph: &'a A,
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    in_tree: Vec<bool>,
    in_blossom: Vec<bool>,
    on_path: Vec<bool>,
    queue: VecDeque<usize>,
}

impl<'a, A: Adjacency> Search<'a, A> {
    fn new(graph: &'a A) -> Self {
        let n = graph.slots();
        Search {
            graph,
            mate: vec![UNMATCHED; n],
            parent: vec![UNMATCHED; n],
            base: (0..n).collect(),
            in_tree: vec![false; n],
            in_blossom: vec![false; n],
            on_path: vec![false; n],
            queue: VecDeque::new(),
        }
    }

    fn greedy(&mut self) {
        for v in 0..self.graph.slots() {
            if !self.graph.is_live(v) || self.mate[v] != UNMATCHED {
                continue;
            }
            let free = self.graph.neighbors(v).find(|&w| self.mate[w] == UNMATCHED);
            if let Some(w) = free {
                self.mate[v] = w;
                self.mate[w] = v;
            }
        }
    }

    /// Lowest common ancestor of two outer vertices, in blossom bases.
    fn common_base(&mut self, mut a: usize, mut b: usize) -> usize {
        self.on_path.fill(false);
        loop {
            a = self.base[a];
            self.on_path[a] = true;
            if self.mate[a] == UNMATCHED {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if self.on_path[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_cycle(&mut self, mut v: usize, stem: usize, mut child: usize) {
        while self.base[v] != stem {
            let m = self.mate[v];
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[m]] = true;
            self.parent[v] = child;
            child = m;
            v = self.parent[m];
        }
    }

    fn shrink(&mut self, v: usize, w: usize) {
        let stem = self.common_base(v, w);
        self.in_blossom.fill(false);
        self.mark_cycle(v, stem, w);
        self.mark_cycle(w, stem, v);
        for x in 0..self.graph.slots() {
            if self.in_blossom[self.base[x]] {
                self.base[x] = stem;
                if !self.in_tree[x] {
                    self.in_tree[x] = true;
                    self.queue.push_back(x);
                }
            }
        }
    }

    /// Grows an alternating tree from `root`; returns the exposed endpoint
    /// of an augmenting path if one is found.
    fn grow(&mut self, root: usize) -> Option<usize> {
        self.in_tree.fill(false);
        self.parent.fill(UNMATCHED);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.queue.clear();
        self.in_tree[root] = true;
        self.queue.push_back(root);
        let graph = self.graph;
        while let Some(v) = self.queue.pop_front() {
            for w in graph.neighbors(v) {
                if self.base[v] == self.base[w] || self.mate[v] == w {
                    continue;
                }
                let w_outer =
                    w == root || (self.mate[w] != UNMATCHED && self.parent[self.mate[w]] != UNMATCHED);
                if w_outer {
                    self.shrink(v, w);
                } else if self.parent[w] == UNMATCHED {
                    self.parent[w] = v;
                    if self.mate[w] == UNMATCHED {
                        return Some(w);
                    }
                    let m = self.mate[w];
                    self.in_tree[m] = true;
                    self.queue.push_back(m);
                }
            }
        }
        None
    }

    fn augment(&mut self, mut v: usize) {
        while v != UNMATCHED {
            let pv = self.parent[v];
            let next = self.mate[pv];
            self.mate[v] = pv;
            self.mate[pv] = v;
            v = next;
        }
    }

    fn run(mut self) -> Vec<usize> {
        self.greedy();
        for root in 0..self.graph.slots() {
            if self.graph.is_live(root) && self.mate[root] == UNMATCHED {
                if let Some(end) = self.grow(root) {
                    self.augment(end);
                }
            }
        }
        self.mate
    }
}

/// Mate array of a maximum matching; `UNMATCHED` marks exposed or dead slots.
pub(crate) fn maximum_matching<A: Adjacency>(graph: &A) -> Vec<usize> {
    Search::new(graph).run()
}
