//! Bitmask view of a graph with at most 64 vertices.
//!
//! The exhaustive deciders spend all their time asking for components and
//! matching numbers of induced subgraphs `G[alive]`, so every query here
//! takes the live vertex set as a mask and never builds a subgraph.

use std::collections::HashMap;

use crate::bits;
use crate::graph::{Edge, Graph};
use crate::matching::blossom::{self, Adjacency};

#[derive(Debug, Clone)]
pub(crate) struct DenseGraph {
    order: usize,
    rows: Vec<u64>,
}

struct Masked<'a> {
    rows: &'a [u64],
    alive: u64,
}

impl Adjacency for Masked<'_> {
    fn slots(&self) -> usize {
        self.rows.len()
    }

    fn is_live(&self, v: usize) -> bool {
        self.alive >> v & 1 == 1
    }

    fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        bits::iter(self.rows[v] & self.alive)
    }
}

impl DenseGraph {
    /// `None` above 64 vertices.
    pub fn new(g: &Graph) -> Option<Self> {
        Some(DenseGraph {
            order: g.order(),
            rows: g.adjacency_masks()?,
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn all(&self) -> u64 {
        bits::full(self.order)
    }

    pub fn row(&self, v: usize) -> u64 {
        self.rows[v]
    }

    /// Connected components of `G[alive]`, ordered by smallest member.
    pub fn components(&self, alive: u64) -> Vec<u64> {
        let mut out = Vec::new();
        let mut rest = alive;
        while rest != 0 {
            let comp = self.component_of(rest.trailing_zeros() as usize, alive);
            out.push(comp);
            rest &= !comp;
        }
        out
    }

    pub fn component_of(&self, v: usize, alive: u64) -> u64 {
        let mut seen = 1u64 << v;
        let mut frontier = seen;
        while frontier != 0 {
            let x = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let fresh = self.rows[x] & alive & !seen;
            seen |= fresh;
            frontier |= fresh;
        }
        seen
    }

    /// `o(G[alive])`.
    pub fn odd_count(&self, alive: u64) -> usize {
        let mut odd = 0;
        let mut rest = alive;
        while rest != 0 {
            let comp = self.component_of(rest.trailing_zeros() as usize, alive);
            odd += comp.count_ones() as usize & 1;
            rest &= !comp;
        }
        odd
    }

    pub fn is_connected(&self, alive: u64) -> bool {
        alive == 0 || self.component_of(alive.trailing_zeros() as usize, alive) == alive
    }

    /// Mate array of a maximum matching of `G[alive]`.
    pub fn maximum_matching(&self, alive: u64) -> Vec<usize> {
        blossom::maximum_matching(&Masked {
            rows: &self.rows,
            alive,
        })
    }

    /// `ν(G[alive])`.
    pub fn matching_number(&self, alive: u64) -> usize {
        let mate = self.maximum_matching(alive);
        mate.iter().filter(|&&m| m != blossom::UNMATCHED).count() / 2
    }

    /// Edges of `G[alive]` in ascending order.
    pub fn edges_within(&self, alive: u64) -> Vec<Edge> {
        let mut out = Vec::new();
        for u in bits::iter(alive) {
            let above = self.rows[u] & alive & !bits::full(u + 1);
            out.extend(bits::iter(above).map(|v| (u, v)));
        }
        out
    }

    /// Calls `visit` with every `k`-matching of `G[alive]` in canonical order
    /// (a matching is its ascending edge list; matchings compare
    /// lexicographically). Stops early when `visit` returns `false`; the
    /// return value says whether the enumeration ran to completion.
    pub fn for_each_k_matching<F>(&self, alive: u64, k: usize, mut visit: F) -> bool
    where
        F: FnMut(&[Edge]) -> bool,
    {
        let edges = self.edges_within(alive);
        let mut chosen = Vec::with_capacity(k);
        extend_matching(&edges, 0, 0, k, &mut chosen, &mut visit)
    }
}

fn extend_matching<F>(
    edges: &[Edge],
    from: usize,
    used: u64,
    k: usize,
    chosen: &mut Vec<Edge>,
    visit: &mut F,
) -> bool
where
    F: FnMut(&[Edge]) -> bool,
{
    if chosen.len() == k {
        return visit(chosen);
    }
    let needed = k - chosen.len();
    for i in from..edges.len() {
        if edges.len() - i < needed {
            break;
        }
        let (u, v) = edges[i];
        let ends = (1u64 << u) | (1u64 << v);
        if used & ends != 0 {
            continue;
        }
        chosen.push((u, v));
        let go_on = extend_matching(edges, i + 1, used | ends, k, chosen, visit);
        chosen.pop();
        if !go_on {
            return false;
        }
    }
    true
}

/// Memoized `ν(G[alive])` for one dense graph. The graph is passed on each
/// call so the memo can live next to the graph it describes.
pub(crate) struct NuMemo {
    table: Memo,
}

enum Memo {
    // stores ν + 1, zero meaning not yet computed
    Table(Vec<u8>),
    Map(HashMap<u64, u8>),
}

const TABLE_MAX_ORDER: usize = 20;

impl NuMemo {
    pub fn new(graph: &DenseGraph) -> Self {
        let table = if graph.order() <= TABLE_MAX_ORDER {
            Memo::Table(vec![0; 1 << graph.order()])
        } else {
            Memo::Map(HashMap::new())
        };
        NuMemo { table }
    }

    pub fn matching_number(&mut self, graph: &DenseGraph, alive: u64) -> usize {
        let slot = match &mut self.table {
            Memo::Table(t) => &mut t[alive as usize],
            Memo::Map(m) => m.entry(alive).or_insert(0),
        };
        if *slot == 0 {
            *slot = graph.matching_number(alive) as u8 + 1;
        }
        *slot as usize - 1
    }

    /// Vertices of `G[alive]` missed by a maximum matching.
    pub fn deficiency(&mut self, graph: &DenseGraph, alive: u64) -> usize {
        bits::count(alive) - 2 * self.matching_number(graph, alive)
    }
}
