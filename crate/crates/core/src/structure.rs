//! Components, odd-component counts after deletion, and factor-criticality.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bits;
use crate::dense::DenseGraph;
use crate::graph::{Graph, GraphError, VertexSet};
use crate::matching::blossom::{self, Adjacency, UNMATCHED};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructureError {
    #[error("cannot delete {n} vertices from a graph of order {order}")]
    TooManyDeleted { n: usize, order: usize },
    #[error("order {order} minus {n} deleted vertices is odd, so no perfect matching can remain")]
    Parity { n: usize, order: usize },
    #[error("exhaustive subset checks are limited to 64 vertices, got {0}")]
    TooLarge(usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Component {
    pub vertices: VertexSet,
    pub odd: bool,
    /// `None` until requested; never `Some(true)` on an even component.
    pub factor_critical: Option<bool>,
}

/// Connected components of a graph, ordered by smallest vertex.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct ComponentProfile {
    pub components: Vec<Component>,
}

impl ComponentProfile {
    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn odd_count(&self) -> usize {
        self.components.iter().filter(|c| c.odd).count()
    }

    /// Computes the missing factor-critical flags against the graph the
    /// profile was taken from.
    pub fn fill_factor_critical(&mut self, g: &Graph) {
        for c in &mut self.components {
            if c.factor_critical.is_none() {
                let flag = c.odd && is_factor_critical(&g.induced(&c.vertices).expect("component of g"));
                c.factor_critical = Some(flag);
            }
        }
    }

    pub(crate) fn from_masks(masks: &[u64], mut flags: impl FnMut(u64) -> Option<bool>) -> Self {
        ComponentProfile {
            components: masks
                .iter()
                .map(|&m| Component {
                    vertices: VertexSet::from_mask(m),
                    odd: m.count_ones() % 2 == 1,
                    factor_critical: flags(m),
                })
                .collect(),
        }
    }
}

/// Connected components with parity; factor-critical flags are left unset.
pub fn components(g: &Graph) -> ComponentProfile {
    let mut label = vec![usize::MAX; g.order()];
    let mut groups: Vec<Vec<usize>> = Vec::new();
    for root in 0..g.order() {
        if label[root] != usize::MAX {
            continue;
        }
        let id = groups.len();
        let mut members = vec![root];
        label[root] = id;
        let mut head = 0;
        while head < members.len() {
            let x = members[head];
            head += 1;
            for &y in g.neighbors(x) {
                if label[y] == usize::MAX {
                    label[y] = id;
                    members.push(y);
                }
            }
        }
        groups.push(members);
    }
    ComponentProfile {
        components: groups
            .into_iter()
            .map(|members| Component {
                odd: members.len() % 2 == 1,
                vertices: VertexSet::new(g.order(), members).expect("component members are distinct"),
                factor_critical: None,
            })
            .collect(),
    }
}

/// `o(G - S)`.
pub fn odd_count_after_deletion(g: &Graph, set: &VertexSet) -> Result<usize, StructureError> {
    let (rest, _) = g.delete_vertices(set)?;
    Ok(components(&rest).odd_count())
}

struct WithoutVertex<'a> {
    graph: &'a Graph,
    removed: usize,
}

impl Adjacency for WithoutVertex<'_> {
    fn slots(&self) -> usize {
        self.graph.order()
    }

    fn is_live(&self, v: usize) -> bool {
        v != self.removed
    }

    fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        let removed = self.removed;
        self.graph.neighbors(v).iter().copied().filter(move |&w| w != removed)
    }
}

/// Connected, odd order, and `G - v` has a perfect matching for every `v`.
pub fn is_factor_critical(g: &Graph) -> bool {
    let n = g.order();
    if n.is_multiple_of(2) || components(g).len() != 1 {
        return false;
    }
    (0..n).all(|removed| {
        let mate = blossom::maximum_matching(&WithoutVertex { graph: g, removed });
        mate.iter().filter(|&&m| m != UNMATCHED).count() == n - 1
    })
}

/// Direct check that every `n`-subset deletion leaves a perfect matching.
pub fn is_n_factor_critical(g: &Graph, n: usize) -> Result<bool, StructureError> {
    let order = g.order();
    if n > order {
        return Err(StructureError::TooManyDeleted { n, order });
    }
    if !(order - n).is_multiple_of(2) {
        return Err(StructureError::Parity { n, order });
    }
    let dense = DenseGraph::new(g).ok_or(StructureError::TooLarge(order))?;
    let all = dense.all();
    Ok(bits::Combinations::new(all, n).all(|s| {
        let rest = all & !s;
        2 * dense.matching_number(rest) == bits::count(rest)
    }))
}

/// Factor-criticality of `G[comp]` measured on the dense host.
pub(crate) fn factor_critical_mask(g: &DenseGraph, comp: u64) -> bool {
    if comp.count_ones().is_multiple_of(2) || !g.is_connected(comp) {
        return false;
    }
    let half = bits::count(comp) / 2;
    bits::iter(comp).all(|v| g.matching_number(comp & !(1 << v)) == half)
}

/// Factor-critical flags keyed by component vertex mask.
#[derive(Debug, Default)]
pub(crate) struct FactorCriticalCache {
    known: HashMap<u64, bool>,
}

impl FactorCriticalCache {
    pub fn get(&mut self, g: &DenseGraph, comp: u64) -> bool {
        *self
            .known
            .entry(comp)
            .or_insert_with(|| factor_critical_mask(g, comp))
    }
}
