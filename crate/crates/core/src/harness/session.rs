//! Per-graph caches shared by every checker run on the same graph.

use std::collections::HashMap;

use crate::decision::{decomposition_search, definition_on, NkdParams, Variant};
use crate::dense::{DenseGraph, NuMemo};
use crate::graph::{Edge, Graph};
use crate::structure::FactorCriticalCache;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub(crate) enum Derivation {
    AddEdge(Edge),
    DeleteEdge(Edge),
    Cone,
}

impl Derivation {
    pub fn apply(self, g: &Graph) -> Graph {
        match self {
            Derivation::AddEdge((u, v)) => g.add_edge(u, v).expect("non-edge"),
            Derivation::DeleteEdge((u, v)) => g.delete_edge(u, v).expect("edge"),
            Derivation::Cone => g.cone(),
        }
    }
}

struct Instance {
    dense: DenseGraph,
    memo: NuMemo,
    holds: HashMap<NkdParams, bool>,
}

impl Instance {
    fn new(g: &Graph) -> Self {
        let dense = DenseGraph::new(g).expect("caps keep graphs within the bitmask limit");
        let memo = NuMemo::new(&dense);
        Instance {
            dense,
            memo,
            holds: HashMap::new(),
        }
    }

    fn holds(&mut self, p: NkdParams) -> bool {
        if let Some(&h) = self.holds.get(&p) {
            return h;
        }
        let h = definition_on(&self.dense, &mut self.memo, p).holds;
        self.holds.insert(p, h);
        h
    }
}

pub(crate) struct Session<'a> {
    graph: &'a Graph,
    base: Instance,
    derived: HashMap<Derivation, Instance>,
    components: FactorCriticalCache,
    bipartite: Option<bool>,
}

impl<'a> Session<'a> {
    pub fn new(graph: &'a Graph) -> Self {
        Session {
            graph,
            base: Instance::new(graph),
            derived: HashMap::new(),
            components: FactorCriticalCache::default(),
            bipartite: None,
        }
    }

    pub fn graph(&self) -> &'a Graph {
        self.graph
    }

    pub fn holds(&mut self, p: NkdParams) -> bool {
        self.base.holds(p)
    }

    pub fn derived_holds(&mut self, which: Derivation, p: NkdParams) -> bool {
        let g = self.graph;
        self.derived
            .entry(which)
            .or_insert_with(|| Instance::new(&which.apply(g)))
            .holds(p)
    }

    pub fn has_witness(&mut self, p: NkdParams, edge: Edge, variant: Variant) -> bool {
        decomposition_search(&self.base.dense, &mut self.components, p, edge, variant).is_some()
    }

    pub fn is_bipartite(&mut self) -> bool {
        *self.bipartite.get_or_insert_with(|| self.graph.is_bipartite())
    }
}
