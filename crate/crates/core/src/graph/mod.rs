//! Simple undirected graphs with dense vertex ids.
//!
//! A [`Graph`] is immutable once built. Every derived graph (vertex deletion,
//! edge insertion or removal, cone) is a fresh value.

pub mod families;
pub mod io;

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bits;

/// An unordered vertex pair, always stored with `0 <= u < v`.
pub type Edge = (usize, usize);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop at vertex {0} ({0}, {0})")]
    SelfLoop(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("vertex {vertex} in pair ({u}, {v}) is out of range for order {order}")]
    OutOfRange {
        u: usize,
        v: usize,
        vertex: usize,
        order: usize,
    },
    #[error("vertex {vertex} is out of range for order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("vertex {0} listed twice in vertex set")]
    RepeatedVertex(usize),
    #[error("edge ({0}, {1}) already present")]
    EdgePresent(usize, usize),
    #[error("edge ({0}, {1}) not present")]
    EdgeAbsent(usize, usize),
    #[error("order {order} exceeds the supported limit {limit}")]
    OrderTooLarge { order: usize, limit: usize },
}

/// Orders a pair so the smaller endpoint comes first.
pub fn normalize(u: usize, v: usize) -> Edge {
    if u <= v {
        (u, v)
    } else {
        (v, u)
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    order: usize,
    edges: Vec<Edge>,
    adjacency: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph, rejecting self-loops, repeated pairs (in either
    /// orientation) and ids outside `0..order`.
    pub fn new<I>(order: usize, edge_list: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut edges = Vec::new();
        for (u, v) in edge_list {
            for w in [u, v] {
                if w >= order {
                    return Err(GraphError::OutOfRange {
                        u,
                        v,
                        vertex: w,
                        order,
                    });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            edges.push((normalize(u, v), (u, v)));
        }
        edges.sort_unstable();
        for pair in edges.windows(2) {
            if pair[0].0 == pair[1].0 {
                let (u, v) = pair[1].1;
                return Err(GraphError::DuplicateEdge(u, v));
            }
        }
        Ok(Self::from_sorted(
            order,
            edges.into_iter().map(|(e, _)| e).collect(),
        ))
    }

    /// `edges` must already be normalized, sorted and duplicate-free.
    pub(crate) fn from_sorted(order: usize, edges: Vec<Edge>) -> Self {
        let mut adjacency = vec![Vec::new(); order];
        for &(u, v) in &edges {
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Graph {
            order,
            edges,
            adjacency,
        }
    }

    pub(crate) fn from_unsorted(order: usize, mut edges: Vec<Edge>) -> Self {
        for e in &mut edges {
            *e = normalize(e.0, e.1);
        }
        edges.sort_unstable();
        edges.dedup();
        Self::from_sorted(order, edges)
    }

    pub fn empty(order: usize) -> Self {
        Self::from_sorted(order, Vec::new())
    }

    pub fn complete(order: usize) -> Self {
        let mut edges = Vec::with_capacity(order * order.saturating_sub(1) / 2);
        for u in 0..order {
            for v in u + 1..order {
                edges.push((u, v));
            }
        }
        Self::from_sorted(order, edges)
    }

    /// Cycle on `order` vertices in the order 0, 1, ..., order-1. Needs `order >= 3`.
    pub fn cycle(order: usize) -> Self {
        assert!(order >= 3, "a cycle needs at least three vertices");
        let edges = (0..order).map(|i| (i, (i + 1) % order)).collect();
        Self::from_unsorted(order, edges)
    }

    pub fn path(order: usize) -> Self {
        let edges = (1..order).map(|i| (i - 1, i)).collect();
        Self::from_sorted(order, edges)
    }

    /// `K_{a,b}` with sides `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let mut edges = Vec::with_capacity(a * b);
        for u in 0..a {
            for v in a..a + b {
                edges.push((u, v));
            }
        }
        Self::from_sorted(a + b, edges)
    }

    /// `K_{1,leaves}` with the center at vertex 0.
    pub fn star(leaves: usize) -> Self {
        Self::complete_bipartite(1, leaves)
    }

    /// Places `other` after `self`, shifting its ids by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.order;
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|&(u, v)| (u + shift, v + shift)));
        Self::from_sorted(self.order + other.order, edges)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in ascending lexicographic order.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order && v < self.order && self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Pairs `u < v` that are not edges, ascending.
    pub fn non_edges(&self) -> Vec<Edge> {
        let mut out = Vec::new();
        for u in 0..self.order {
            for v in u + 1..self.order {
                if !self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// `G - S` with the survivors relabeled densely. The returned map sends
    /// each new id to its id in `self`.
    pub fn delete_vertices(&self, set: &VertexSet) -> Result<(Graph, Vec<usize>), GraphError> {
        set.check_host(self.order)?;
        let mut removed = vec![false; self.order];
        for &v in set.members() {
            removed[v] = true;
        }
        let keep: Vec<usize> = (0..self.order).filter(|&v| !removed[v]).collect();
        Ok((self.relabeled_subgraph(&keep), keep))
    }

    /// `G[S]`, relabeled so that the i-th smallest member of `S` becomes `i`.
    pub fn induced(&self, set: &VertexSet) -> Result<Graph, GraphError> {
        set.check_host(self.order)?;
        Ok(self.relabeled_subgraph(set.members()))
    }

    fn relabeled_subgraph(&self, keep: &[usize]) -> Graph {
        let mut new_id = vec![usize::MAX; self.order];
        for (i, &v) in keep.iter().enumerate() {
            new_id[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| new_id[u] != usize::MAX && new_id[v] != usize::MAX)
            .map(|&(u, v)| (new_id[u], new_id[v]))
            .collect();
        Graph::from_unsorted(keep.len(), edges)
    }

    /// `G ∪ uv`.
    pub fn add_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        self.check_pair(u, v)?;
        if self.has_edge(u, v) {
            return Err(GraphError::EdgePresent(u, v));
        }
        let mut edges = self.edges.clone();
        let e = normalize(u, v);
        let at = edges.binary_search(&e).unwrap_err();
        edges.insert(at, e);
        Ok(Graph::from_sorted(self.order, edges))
    }

    /// `G - uv`.
    pub fn delete_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        self.check_pair(u, v)?;
        let e = normalize(u, v);
        match self.edges.binary_search(&e) {
            Ok(at) => {
                let mut edges = self.edges.clone();
                edges.remove(at);
                Ok(Graph::from_sorted(self.order, edges))
            }
            Err(_) => Err(GraphError::EdgeAbsent(u, v)),
        }
    }

    /// `G + x`: a new last vertex joined to every vertex of `G`.
    pub fn cone(&self) -> Graph {
        let apex = self.order;
        let mut edges = self.edges.clone();
        edges.extend((0..apex).map(|v| (v, apex)));
        Graph::from_unsorted(apex + 1, edges)
    }

    fn check_pair(&self, u: usize, v: usize) -> Result<(), GraphError> {
        for w in [u, v] {
            if w >= self.order {
                return Err(GraphError::OutOfRange {
                    u,
                    v,
                    vertex: w,
                    order: self.order,
                });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        Ok(())
    }

    /// Two-colorability by breadth-first search.
    pub fn is_bipartite(&self) -> bool {
        let mut color = vec![u8::MAX; self.order];
        let mut queue = std::collections::VecDeque::new();
        for root in 0..self.order {
            if color[root] != u8::MAX {
                continue;
            }
            color[root] = 0;
            queue.push_back(root);
            while let Some(x) = queue.pop_front() {
                for &y in &self.adjacency[x] {
                    if color[y] == u8::MAX {
                        color[y] = 1 - color[x];
                        queue.push_back(y);
                    } else if color[y] == color[x] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Adjacency rows as bitmasks; `None` above 64 vertices.
    pub fn adjacency_masks(&self) -> Option<Vec<u64>> {
        if self.order > bits::MAX_MASK_ORDER {
            return None;
        }
        let mut rows = vec![0u64; self.order];
        for &(u, v) in &self.edges {
            rows[u] |= 1 << v;
            rows[v] |= 1 << u;
        }
        Some(rows)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(order={}, edges={:?})", self.order, self.edges)
    }
}

/// A set of vertex ids of some host graph, kept sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet {
    members: Vec<usize>,
}

impl VertexSet {
    /// Validates the members against a host of the given order.
    pub fn new(host_order: usize, members: impl IntoIterator<Item = usize>) -> Result<Self, GraphError> {
        let mut members: Vec<usize> = members.into_iter().collect();
        members.sort_unstable();
        for pair in members.windows(2) {
            if pair[0] == pair[1] {
                return Err(GraphError::RepeatedVertex(pair[0]));
            }
        }
        let set = VertexSet { members };
        set.check_host(host_order)?;
        Ok(set)
    }

    pub fn empty() -> Self {
        VertexSet::default()
    }

    pub fn from_mask(mask: u64) -> Self {
        VertexSet {
            members: bits::iter(mask).collect(),
        }
    }

    /// Bitmask form; only meaningful when every member is below 64.
    pub fn mask(&self) -> u64 {
        self.members.iter().fold(0, |m, &v| m | (1 << v))
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.members.binary_search(&v).is_ok()
    }

    fn check_host(&self, order: usize) -> Result<(), GraphError> {
        match self.members.last() {
            Some(&v) if v >= order => Err(GraphError::VertexOutOfRange { vertex: v, order }),
            _ => Ok(()),
        }
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.members.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}
