//! Maximum matchings, deficiency, defect-d matchings and k-matching
//! enumeration.

pub(crate) mod blossom;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bits;
use crate::dense::DenseGraph;
use crate::graph::{normalize, Edge, Graph, VertexSet};
use blossom::{Adjacency, UNMATCHED};

/// Largest order `berge_violating_set` scans without an override.
pub const DEFAULT_SUBSET_CAP: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatchingError {
    #[error("({u}, {v}) is not an edge of the host graph")]
    NotAnEdge { u: usize, v: usize },
    #[error("vertex {0} is covered by two edges")]
    SharedVertex(usize),
    #[error("defect {d} exceeds the order {order}")]
    DefectTooLarge { d: usize, order: usize },
    #[error("defect {d} and order {order} differ in parity")]
    DefectParity { d: usize, order: usize },
    #[error("order {order} exceeds the exhaustive subset-search cap {cap}")]
    CapExceeded { order: usize, cap: usize },
}

/// Pairwise vertex-disjoint edges of a host graph, stored ascending.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Matching {
    edges: Vec<Edge>,
}

impl Matching {
    /// Checks that every pair is an edge of `host` and that no vertex is
    /// covered twice.
    pub fn new(host: &Graph, edges: impl IntoIterator<Item = Edge>) -> Result<Self, MatchingError> {
        let mut edges: Vec<Edge> = edges.into_iter().map(|(u, v)| normalize(u, v)).collect();
        edges.sort_unstable();
        let mut covered = vec![false; host.order()];
        for &(u, v) in &edges {
            if !host.has_edge(u, v) {
                return Err(MatchingError::NotAnEdge { u, v });
            }
            for w in [u, v] {
                if std::mem::replace(&mut covered[w], true) {
                    return Err(MatchingError::SharedVertex(w));
                }
            }
        }
        Ok(Matching { edges })
    }

    pub(crate) fn from_sorted(edges: Vec<Edge>) -> Self {
        Matching { edges }
    }

    pub fn empty() -> Self {
        Matching::default()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// `V(M)`.
    pub fn covered(&self) -> VertexSet {
        let mut members: Vec<usize> = self.edges.iter().flat_map(|&(u, v)| [u, v]).collect();
        members.sort_unstable();
        VertexSet::new(usize::MAX, members).expect("matching edges are disjoint")
    }
}

impl std::fmt::Display for Matching {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for (i, (u, v)) in self.edges.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        Ok(())
    }
}

impl Adjacency for Graph {
    fn slots(&self) -> usize {
        self.order()
    }

    fn is_live(&self, _v: usize) -> bool {
        true
    }

    fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        Graph::neighbors(self, v).iter().copied()
    }
}

pub(crate) fn mates_to_matching(mate: &[usize]) -> Matching {
    let edges = mate
        .iter()
        .enumerate()
        .filter(|&(v, &m)| m != UNMATCHED && v < m)
        .map(|(v, &m)| (v, m))
        .collect();
    Matching::from_sorted(edges)
}

/// A maximum-cardinality matching, correct on general graphs.
pub fn maximum_matching(g: &Graph) -> Matching {
    mates_to_matching(&blossom::maximum_matching(g))
}

/// `ν(G)`.
pub fn matching_number(g: &Graph) -> usize {
    maximum_matching(g).len()
}

/// `|V(G)| - 2ν(G)`.
pub fn deficiency(g: &Graph) -> usize {
    g.order() - 2 * matching_number(g)
}

fn check_defect(g: &Graph, d: usize) -> Result<(), MatchingError> {
    let order = g.order();
    if d > order {
        Err(MatchingError::DefectTooLarge { d, order })
    } else if !(order - d).is_multiple_of(2) {
        Err(MatchingError::DefectParity { d, order })
    } else {
        Ok(())
    }
}

/// Whether `G` has a matching covering exactly `|V(G)| - d` vertices.
/// `d` must not exceed the order and must share its parity.
pub fn has_defect_matching(g: &Graph, d: usize) -> Result<bool, MatchingError> {
    check_defect(g, d)?;
    Ok(deficiency(g) <= d)
}

/// A smallest vertex set `S` with `o(G - S) > |S| + d`, lexicographically
/// least among those of that size, or `None` if no such set exists.
pub fn berge_violating_set(g: &Graph, d: usize, cap: usize) -> Result<Option<VertexSet>, MatchingError> {
    check_defect(g, d)?;
    let cap = cap.min(bits::MAX_MASK_ORDER);
    let dense = DenseGraph::new(g)
        .filter(|_| g.order() <= cap)
        .ok_or(MatchingError::CapExceeded {
            order: g.order(),
            cap,
        })?;
    Ok(berge_violating_mask(&dense, dense.all(), d).map(VertexSet::from_mask))
}

/// Mask-level core of [`berge_violating_set`] over `G[alive]`.
pub(crate) fn berge_violating_mask(g: &DenseGraph, alive: u64, d: usize) -> Option<u64> {
    bits::subsets_by_size(alive).find(|&s| g.odd_count(alive & !s) > bits::count(s) + d)
}

/// Every matching with exactly `k` edges, in canonical order: each matching
/// lists its edges ascending, and matchings are ordered lexicographically.
pub fn enumerate_k_matchings(g: &Graph, k: usize) -> Vec<Matching> {
    fn walk(edges: &[Edge], from: usize, k: usize, used: &mut [bool], chosen: &mut Vec<Edge>, out: &mut Vec<Matching>) {
        if chosen.len() == k {
            out.push(Matching::from_sorted(chosen.clone()));
            return;
        }
        for i in from..edges.len() {
            if edges.len() - i < k - chosen.len() {
                break;
            }
            let (u, v) = edges[i];
            if used[u] || used[v] {
                continue;
            }
            used[u] = true;
            used[v] = true;
            chosen.push((u, v));
            walk(edges, i + 1, k, used, chosen, out);
            chosen.pop();
            used[u] = false;
            used[v] = false;
        }
    }
    let mut out = Vec::new();
    let mut used = vec![false; g.order()];
    walk(g.edges(), 0, k, &mut used, &mut Vec::with_capacity(k), &mut out);
    out
}

/// `ν(G) >= k`.
pub fn has_k_matching(g: &Graph, k: usize) -> bool {
    matching_number(g) >= k
}
